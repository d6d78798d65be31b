use super::{Quotient, StructureError};
use crate::groups::{gcd, is_subgroup, Elem, ElemSet, FiniteGroup};

/// A complement `H` to an abelian normal Hall subgroup `N`, with the
/// homomorphic section `G/N -> H` it was built from.
#[derive(Debug, Clone)]
pub struct Complement {
    pub subgroup: ElemSet,
    /// Image of each coset (in [`Quotient`] order) under the section.
    pub section: Vec<Elem>,
    pub quotient: Quotient,
}

/// Builds a complement to `normal` by averaging the transversal cocycle.
///
/// With `s` the least-element transversal and `q = |G/N|`:
/// `c(x,y) = s(x)s(y)s(xy)⁻¹ ∈ N`, `d(x) = ∏_y c(x,y)`, `m = q⁻¹ mod exp(N)`.
/// Summing the cocycle identity over the last argument gives
/// `c(x,y)^q = d(x)·ˣd(y)·d(xy)⁻¹`, so `e = d^m` splits `c` and
/// `t(x) = e(x)⁻¹·s(x)` is a homomorphic section.
pub fn schur_zassenhaus_complement(
    group: &FiniteGroup,
    normal: &ElemSet,
) -> Result<Complement, StructureError> {
    let quotient = Quotient::new(group, normal)?;
    let (kernel, _) = group.subgroup_as_group(normal.as_slice());
    if !kernel.is_abelian() {
        return Err(StructureError::NotAbelian);
    }
    let (n, q) = (normal.len(), quotient.order());
    if gcd(n, q) != 1 {
        return Err(StructureError::NotCoprime { normal: n, index: q });
    }
    let exponent = kernel.exponent() as i64;
    let m = mod_inverse(q as i64, exponent).expect("coprime to the order, hence to the exponent");

    let s = &quotient.representatives;
    let qt = &quotient.group;
    let cocycle = |x: usize, y: usize| -> Elem {
        let xy = qt.op(Elem(x as u32), Elem(y as u32)).index();
        group.op(group.op(s[x], s[y]), group.inv(s[xy]))
    };
    let section: Vec<Elem> = (0..q)
        .map(|x| {
            let d = (0..q).fold(Elem::IDENTITY, |acc, y| group.op(acc, cocycle(x, y)));
            debug_assert!(normal.contains(d));
            group.op(group.pow(d, -m), s[x])
        })
        .collect();

    let subgroup = ElemSet::new(group.order(), section.iter().copied());
    let complement = Complement { subgroup, section, quotient };
    verify_complement(group, normal, &complement.subgroup)?;
    Ok(complement)
}

/// `H` is a subgroup, `H ∩ N = 1` and `|H|·|N| = |G|` (so `HN = G`).
pub fn verify_complement(
    group: &FiniteGroup,
    normal: &ElemSet,
    candidate: &ElemSet,
) -> Result<(), StructureError> {
    let fail = |why: &str| Err(StructureError::VerificationFailed(format!("complement {why}")));
    if !is_subgroup(group, candidate) {
        return fail("is not a subgroup");
    }
    if candidate.iter().any(|h| h != Elem::IDENTITY && normal.contains(h)) {
        return fail("meets the normal subgroup nontrivially");
    }
    if candidate.len() * normal.len() != group.order() {
        return fail("has the wrong order");
    }
    let mut product = vec![false; group.order()];
    for h in candidate.iter() {
        for k in normal.iter() {
            product[group.op(h, k).index()] = true;
        }
    }
    if product.iter().any(|&p| !p) {
        return fail("does not generate the group together with the normal subgroup");
    }
    Ok(())
}

fn mod_inverse(a: i64, modulus: i64) -> Option<i64> {
    if modulus == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a.rem_euclid(modulus), modulus);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quotient = old_r / r;
        (old_r, r) = (r, old_r - quotient * r);
        (old_s, s) = (s, old_s - quotient * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{enumerate_subgroups_of_order, subgroup_closure, OddPrime};
    use crate::structure::commutator_set;

    fn p(n: u32) -> OddPrime {
        OddPrime::new(n).unwrap()
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(mod_inverse(4, 15), Some(4));
        assert_eq!(mod_inverse(2, 3), Some(2));
        assert_eq!(mod_inverse(8, 105), Some(92));
        assert_eq!(mod_inverse(3, 9), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    #[test]
    fn d3_complement_is_a_reflection_subgroup() {
        let g = FiniteGroup::dihedral(p(3));
        let n = commutator_set(&g);
        let h = schur_zassenhaus_complement(&g, &n).unwrap();
        assert_eq!(h.subgroup.len(), 2);
        let oracle = enumerate_subgroups_of_order(&g, 2, 10_000).unwrap();
        assert!(oracle.contains(&h.subgroup));
    }

    #[test]
    fn abelian_case_is_unique() {
        let g = FiniteGroup::cyclic(15).unwrap();
        let five_part = subgroup_closure(&g, &[Elem(3)]);
        assert_eq!(five_part.len(), 5);
        let h = schur_zassenhaus_complement(&g, &five_part).unwrap();
        assert_eq!(h.subgroup, subgroup_closure(&g, &[Elem(5)]));
    }

    #[test]
    fn g35_complement() {
        let g = FiniteGroup::dihedral_product(&[p(3), p(5)]);
        let n = commutator_set(&g);
        let h = schur_zassenhaus_complement(&g, &n).unwrap();
        assert_eq!(h.subgroup.len(), 4);
        verify_complement(&g, &n, &h.subgroup).unwrap();
        // The section is a homomorphism from G/N.
        let qt = &h.quotient.group;
        for x in qt.elements() {
            for y in qt.elements() {
                assert_eq!(h.section[qt.op(x, y).index()], g.op(h.section[x.index()], h.section[y.index()]));
            }
        }
    }

    #[test]
    fn nontrivial_cocycle_is_corrected() {
        // Z12 over N = {0,4,8}: the transversal 0,1,2,3 has c(1,3) = 4.
        let g = FiniteGroup::cyclic(12).unwrap();
        let n = subgroup_closure(&g, &[Elem(4)]);
        let h = schur_zassenhaus_complement(&g, &n).unwrap();
        assert_eq!(h.subgroup, subgroup_closure(&g, &[Elem(3)]));
    }

    /// Copy of `g` with element `i` renamed `perm[i]` (`perm[0] = 0`).
    fn relabel(g: &FiniteGroup, perm: &[u32]) -> FiniteGroup {
        let n = g.order();
        let mut table = vec![vec![0u32; n]; n];
        for a in g.elements() {
            for b in g.elements() {
                table[perm[a.index()] as usize][perm[b.index()] as usize] = perm[g.op(a, b).index()];
            }
        }
        FiniteGroup::from_table(&crate::groups::MultiplicationTable { order: n, table }).unwrap()
    }

    fn scramble(n: usize, seed: u64) -> Vec<u32> {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rest: Vec<u32> = (1..n as u32).collect();
        rest.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        std::iter::once(0).chain(rest).collect()
    }

    #[test]
    fn nonabelian_twisted_transversals() {
        // Dicyclic group of order 12 (Z3 ⋊ Z4 by inversion) and G_{3,5},
        // relabelled so least-index transversals are far from homomorphic.
        let dic = crate::groups::build_group(&crate::groups::GroupDescriptor::Semidirect {
            kernel: Box::new(crate::groups::GroupDescriptor::Cyclic(3)),
            complement: Box::new(crate::groups::GroupDescriptor::Cyclic(4)),
            action: crate::groups::ActionSpec {
                generator_images: vec![crate::groups::AutomorphismSpec::Unit(-1)],
            },
        })
        .unwrap();
        let g35 = FiniteGroup::dihedral_product(&[p(3), p(5)]);
        for (base, expected) in [(dic, 4), (g35, 4)] {
            for seed in 0..20 {
                let g = relabel(&base, &scramble(base.order(), seed));
                let n = commutator_set(&g);
                let h = schur_zassenhaus_complement(&g, &n).unwrap();
                assert_eq!(h.subgroup.len(), expected);
            }
        }
    }

    #[test]
    fn preconditions() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let n = subgroup_closure(&g, &[Elem(2)]);
        assert!(matches!(
            schur_zassenhaus_complement(&g, &n),
            Err(StructureError::NotCoprime { normal: 2, index: 2 })
        ));
        let d3 = FiniteGroup::dihedral(p(3));
        let refl = subgroup_closure(&d3, &[d3.generators()[1]]);
        assert!(matches!(schur_zassenhaus_complement(&d3, &refl), Err(StructureError::NotNormal)));
    }
}
