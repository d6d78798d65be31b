use super::{Automorphism, Involutions, StructureError};
use crate::groups::{is_normal, Elem, ElemSet, FiniteGroup};

/// The cosets `gN` of a normal subgroup, each represented by its least
/// element, and the quotient group `G/N` as a table group on them.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub representatives: Vec<Elem>,
    /// Coset index of every element of `G`.
    pub coset_of: Vec<usize>,
    pub group: FiniteGroup,
}

impl Quotient {
    pub fn new(group: &FiniteGroup, normal: &ElemSet) -> Result<Self, StructureError> {
        if !is_normal(group, normal)? {
            return Err(StructureError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut representatives = Vec::new();
        for g in group.elements() {
            if coset_of[g.index()] != usize::MAX {
                continue;
            }
            for n in normal.iter() {
                coset_of[group.op(g, n).index()] = representatives.len();
            }
            representatives.push(g);
        }
        let q = representatives.len();
        let mut table = vec![0u32; q * q];
        for (i, &a) in representatives.iter().enumerate() {
            for (j, &b) in representatives.iter().enumerate() {
                table[i * q + j] = coset_of[group.op(a, b).index()] as u32;
            }
        }
        let name = format!("{}/N[{}]", group.name(), normal.len());
        Ok(Self { representatives, coset_of, group: FiniteGroup::from_flat_table(name, q, table) })
    }

    pub fn order(&self) -> usize {
        self.representatives.len()
    }
}

/// `τ: G/N -> Aut(N)`, `τ(gN)(n) = g·n·g⁻¹`, for abelian normal `N`.
#[derive(Debug, Clone)]
pub struct ConjugationAction {
    pub quotient: Quotient,
    /// `N` as a standalone group; automorphisms act on its indices.
    pub kernel: FiniteGroup,
    /// Local index of `N` -> element of `G`.
    pub embedding: Vec<Elem>,
    /// `τ` of each coset, in coset order.
    pub images: Vec<Automorphism>,
}

impl ConjugationAction {
    /// Distinct cosets act differently, i.e. `τ` has trivial kernel.
    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images.iter().all(|tau| seen.insert(tau))
    }

    /// Every `τ(gN)` squares to the identity.
    pub fn lands_in_involutions(&self) -> bool {
        self.images.iter().all(Automorphism::is_involutive)
    }

    /// The image of `τ` is exactly `inv`.
    pub fn image_equals(&self, inv: &Involutions) -> bool {
        self.images.iter().all(|t| inv.contains(t))
            && inv.automorphisms.iter().all(|t| self.images.contains(t))
    }
}

pub fn conjugation_action(
    group: &FiniteGroup,
    normal: &ElemSet,
) -> Result<ConjugationAction, StructureError> {
    let quotient = Quotient::new(group, normal)?;
    let (kernel, embedding) = group.subgroup_as_group(normal.as_slice());
    if !kernel.is_abelian() {
        return Err(StructureError::NotAbelian);
    }
    let mut local = vec![u32::MAX; group.order()];
    for (i, e) in embedding.iter().enumerate() {
        local[e.index()] = i as u32;
    }
    let conj = |g: Elem| -> Vec<Elem> {
        embedding.iter().map(|&n| Elem(local[group.conjugate(g, n).index()])).collect()
    };
    let images: Vec<Automorphism> = quotient
        .representatives
        .iter()
        .map(|&g| Automorphism::from_map_unchecked(conj(g)))
        .collect();
    // Well-definedness across whole cosets.
    for g in group.elements() {
        if conj(g) != images[quotient.coset_of[g.index()]].mapping() {
            return Err(StructureError::VerificationFailed(format!(
                "conjugation by {} differs from its coset representative",
                group.label(g)
            )));
        }
    }
    Ok(ConjugationAction { quotient, kernel, embedding, images })
}
