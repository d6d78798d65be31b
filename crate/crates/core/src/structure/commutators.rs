use crate::groups::{subgroup_closure, DihedralElement, Elem, ElemSet, FiniteGroup, OddPrime};

/// `{[a,b] : a, b ∈ G}` with `[a,b] = a·b·a⁻¹·b⁻¹`.
pub fn commutator_set(group: &FiniteGroup) -> ElemSet {
    let mut hit = vec![false; group.order()];
    for a in group.elements() {
        for b in group.elements() {
            hit[group.commutator(a, b).index()] = true;
        }
    }
    ElemSet::new(
        group.order(),
        hit.iter().enumerate().filter(|(_, &h)| h).map(|(i, _)| Elem(i as u32)),
    )
}

/// The subgroup generated by all commutators.
pub fn derived_subgroup(group: &FiniteGroup) -> ElemSet {
    let k = commutator_set(group);
    subgroup_closure(group, k.as_slice())
}

/// `{g : g·s = s·g for all s ∈ set}`.
pub fn centralizer(group: &FiniteGroup, set: &ElemSet) -> ElemSet {
    ElemSet::new(
        group.order(),
        group.elements().filter(|&g| set.iter().all(|s| group.commutes(g, s))),
    )
}

/// The `k` with `2k ≡ n (mod p)`, namely `n·(p+1)/2 mod p`.
pub fn witness_exponent(p: OddPrime, n: u32) -> u32 {
    let p = u64::from(p.get());
    ((u64::from(n) % p) * p.div_ceil(2) % p) as u32
}

/// The pair `(ε, ε·ρ^k)` in `D_p` whose commutator is `ρ^n`.
pub fn commutator_witness(p: OddPrime, n: u32) -> (DihedralElement, DihedralElement) {
    let k = witness_exponent(p, n);
    let eps = DihedralElement::epsilon();
    (eps, eps.mul(DihedralElement::rotation(k, p), p))
}

/// `[a,b]` computed directly in `D_p`.
pub fn dihedral_commutator(a: DihedralElement, b: DihedralElement, p: OddPrime) -> DihedralElement {
    a.mul(b, p).mul(a.inv(p), p).mul(b.inv(p), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> OddPrime {
        OddPrime::new(n).unwrap()
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_exponent(p(5), 3), 4);
        assert_eq!(witness_exponent(p(3), 0), 0);
        assert_eq!(witness_exponent(p(7), 1), 4);
        let (a, b) = commutator_witness(p(5), 3);
        assert_eq!(dihedral_commutator(a, b, p(5)), DihedralElement::rotation(3, p(5)));
        let (a, b) = commutator_witness(p(3), 0);
        assert_eq!(dihedral_commutator(a, b, p(3)), DihedralElement::IDENTITY);
    }

    #[test]
    fn dihedral_commutators_are_the_rotations() {
        let g = FiniteGroup::dihedral(p(5));
        let k = commutator_set(&g);
        assert_eq!(k, subgroup_closure(&g, &[g.generators()[0]]));
        assert_eq!(derived_subgroup(&g), k);
    }

    #[test]
    fn abelian_groups() {
        let g = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(commutator_set(&g).as_slice(), &[Elem::IDENTITY]);
        assert_eq!(derived_subgroup(&g).len(), 1);
        assert_eq!(centralizer(&g, &commutator_set(&g)).len(), 12);
    }

    #[test]
    fn rotations_are_self_centralizing() {
        let g = FiniteGroup::dihedral(p(3));
        let c3 = subgroup_closure(&g, &[g.generators()[0]]);
        assert_eq!(centralizer(&g, &c3), c3);
        assert_eq!(centralizer(&g, &ElemSet::new(6, [Elem::IDENTITY])).len(), 6);
    }
}
