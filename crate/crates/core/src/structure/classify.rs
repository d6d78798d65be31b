use serde::Serialize;

use super::{involutive_automorphisms, StructureError};
use crate::axioms::{axiom_kinds, FastVerifier};
use crate::groups::{
    build_group, find_isomorphism, ActionSpec, AutomorphismSpec, FiniteGroup, GroupDescriptor,
    OddPrime, DEFAULT_SEARCH_NODES,
};

/// One candidate `C_S ⋊_φ (Z/2)^|S|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    /// Units `u_i` with `φ(e_i) = (x ↦ x^{u_i})`.
    pub images: Vec<u64>,
    pub description: String,
    pub injective: bool,
    pub axioms_passed: bool,
    pub failed_axioms: Vec<String>,
    pub isomorphic: bool,
}

/// Enumerates every homomorphism `φ: (Z/2)^|S| -> Inv(C_S)` by the images of
/// the standard basis, builds `C_S ⋊_φ (Z/2)^|S|`, screens it with the
/// axiom set for `S` and compares it with `∏_{p ∈ S} D_p`.
///
/// Rows are ordered lexicographically by image units, first generator
/// outermost. Isomorphic actions are not merged.
pub fn classify_candidates(primes: &[OddPrime]) -> Result<Vec<ClassificationRow>, StructureError> {
    classify_with_budget(primes, DEFAULT_SEARCH_NODES)
}

pub fn classify_with_budget(
    primes: &[OddPrime],
    max_nodes: u64,
) -> Result<Vec<ClassificationRow>, StructureError> {
    let mut primes = primes.to_vec();
    primes.sort();
    primes.dedup();
    if primes.len() > 3 {
        return Err(StructureError::TooManyPrimes(primes.len()));
    }
    let n: u32 = primes.iter().map(|p| p.get()).product();
    let k = primes.len();
    let kernel = FiniteGroup::cyclic(n)?;
    let inv = involutive_automorphisms(&kernel, max_nodes)?;
    let units = inv.units.clone().expect("C_S is cyclic");
    let target = FiniteGroup::dihedral_product(&primes);
    let kinds = axiom_kinds(&primes);

    let mut rows = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        let images: Vec<u64> = choice.iter().map(|&i| units[i]).collect();
        let descriptor = GroupDescriptor::Semidirect {
            kernel: Box::new(GroupDescriptor::Cyclic(n)),
            complement: Box::new(GroupDescriptor::Klein(k as u32)),
            action: ActionSpec {
                generator_images: images.iter().map(|&u| AutomorphismSpec::Unit(u as i64)).collect(),
            },
        };
        let group = build_group(&descriptor)?;
        let verifier = FastVerifier::new(&group);
        let failed_axioms: Vec<String> =
            kinds.iter().filter(|kind| !verifier.verify(**kind)).map(|kind| kind.name()).collect();
        let isomorphic = find_isomorphism(&group, &target, max_nodes)?.is_some();
        rows.push(ClassificationRow {
            description: images
                .iter()
                .enumerate()
                .map(|(i, u)| format!("e{} -> x^{u}", i + 1))
                .collect::<Vec<_>>()
                .join(", "),
            injective: unit_span(&images, u64::from(n)) == 1 << k,
            axioms_passed: failed_axioms.is_empty(),
            failed_axioms,
            isomorphic,
            images,
        });

        // Odometer over Inv(C_S)^k, last generator fastest.
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(rows);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < units.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Size of the multiplicative subgroup of `(Z/n)^×` generated by `units`.
fn unit_span(units: &[u64], n: u64) -> usize {
    let mut span = vec![1 % n.max(1)];
    let mut frontier = span.clone();
    while let Some(x) = frontier.pop() {
        for &u in units {
            let y = x * u % n.max(1);
            if !span.contains(&y) {
                span.push(y);
                frontier.push(y);
            }
        }
    }
    span.len()
}
