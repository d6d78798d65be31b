use serde::Serialize;

use super::{
    commutator_set, conjugation_action, involutive_automorphisms, schur_zassenhaus_complement,
    StructureError,
};
use crate::groups::{
    find_isomorphism, is_subgroup, semidirect_product, Elem, FiniteGroup, GroupError, OddPrime,
    DEFAULT_SEARCH_NODES,
};

/// The step at which a candidate stopped looking like `G_S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReconstructionStep {
    CommutatorSubgroup,
    Squares,
    CyclicKernel,
    ActionInjective,
    ActionSurjective,
    Complement,
    Isomorphism,
}

/// Outcome of [`reconstruct`]. Flags for steps after the first failure are
/// left `false`, so `isomorphic` implies every earlier flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub primes: Vec<OddPrime>,
    pub candidate: String,
    pub candidate_order: usize,
    pub commutator_set_size: usize,
    pub commutator_set_is_subgroup: bool,
    pub expected_kernel_order: usize,
    pub kernel_cyclic: bool,
    pub squares_in_kernel: bool,
    pub tau_injective: bool,
    pub tau_surjective: bool,
    /// Labels of the complement's elements, in index order.
    pub complement: Option<Vec<String>>,
    /// `K ⋊_τ H` rebuilt from the pieces is isomorphic to the candidate.
    pub split_isomorphic: bool,
    /// `K ⋊_τ H` is isomorphic to `∏_{p ∈ S} D_p`.
    pub isomorphic: bool,
    pub failed_step: Option<ReconstructionStep>,
    /// An isomorphism search ran out of nodes; `failed_step` says where.
    pub budget_exhausted: bool,
}

impl ReconstructionReport {
    fn new(primes: &[OddPrime], candidate: &FiniteGroup) -> Self {
        Self {
            primes: primes.to_vec(),
            candidate: candidate.name().to_string(),
            candidate_order: candidate.order(),
            commutator_set_size: 0,
            commutator_set_is_subgroup: false,
            expected_kernel_order: primes.iter().map(|p| p.get() as usize).product(),
            kernel_cyclic: false,
            squares_in_kernel: false,
            tau_injective: false,
            tau_surjective: false,
            complement: None,
            split_isomorphic: false,
            isomorphic: false,
            failed_step: None,
            budget_exhausted: false,
        }
    }

    fn fail(mut self, step: ReconstructionStep) -> Self {
        self.failed_step = Some(step);
        self
    }
}

/// Runs the reconstruction argument on a finite candidate: commutator set,
/// squares, cyclicity of the commutators, the conjugation action, a Schur–Zassenhaus
/// complement, and finally an isomorphism with `∏_{p ∈ S} D_p`.
pub fn reconstruct(primes: &[OddPrime], candidate: &FiniteGroup) -> ReconstructionReport {
    reconstruct_with_budget(primes, candidate, DEFAULT_SEARCH_NODES)
}

pub fn reconstruct_with_budget(
    primes: &[OddPrime],
    candidate: &FiniteGroup,
    max_nodes: u64,
) -> ReconstructionReport {
    use ReconstructionStep::*;
    let mut primes = primes.to_vec();
    primes.sort();
    primes.dedup();
    let g = candidate;
    let mut report = ReconstructionReport::new(&primes, g);

    // (1) The commutator set is a subgroup.
    let k = commutator_set(g);
    report.commutator_set_size = k.len();
    report.commutator_set_is_subgroup = is_subgroup(g, &k);
    if !report.commutator_set_is_subgroup {
        return report.fail(CommutatorSubgroup);
    }

    // (2) Every square is a commutator, and (3) the commutators form a
    // cyclic group of order ∏ p. Both flags are always filled in.
    report.squares_in_kernel = g.elements().all(|x| k.contains(g.op(x, x)));
    let (k_group, k_embedding) = g.subgroup_as_group(k.as_slice());
    report.kernel_cyclic = k.len() == report.expected_kernel_order && k_group.is_cyclic();
    if !report.squares_in_kernel {
        return report.fail(Squares);
    }
    if !report.kernel_cyclic {
        return report.fail(CyclicKernel);
    }

    // (4) Conjugation G/K -> Aut(K) is injective with image Inv(K).
    let action = match conjugation_action(g, &k) {
        Ok(a) => a,
        Err(_) => return report.fail(ActionInjective),
    };
    report.tau_injective = action.is_injective();
    if !report.tau_injective {
        return report.fail(ActionInjective);
    }
    let inv = match involutive_automorphisms(&action.kernel, max_nodes) {
        Ok(inv) => inv,
        Err(e) => {
            report.budget_exhausted = matches!(e, StructureError::Group(GroupError::BudgetExceeded(_)));
            return report.fail(ActionSurjective);
        }
    };
    report.tau_surjective = action.image_equals(&inv);
    if !report.tau_surjective {
        return report.fail(ActionSurjective);
    }

    // (5) A complement H ≅ G/K.
    let complement = match schur_zassenhaus_complement(g, &k) {
        Ok(c) => c,
        Err(_) => return report.fail(Complement),
    };
    report.complement = Some(complement.subgroup.iter().map(|h| g.label(h)).collect());

    // (6) Rebuild K ⋊_τ H and compare.
    let (h_group, h_embedding) = g.subgroup_as_group(complement.subgroup.as_slice());
    let mut k_local = vec![u32::MAX; g.order()];
    for (i, e) in k_embedding.iter().enumerate() {
        k_local[e.index()] = i as u32;
    }
    let actions: Vec<Vec<Elem>> = h_group
        .generators()
        .iter()
        .map(|&h| {
            let h = h_embedding[h.index()];
            k_embedding.iter().map(|&x| Elem(k_local[g.conjugate(h, x).index()])).collect()
        })
        .collect();
    let rebuilt = match semidirect_product(&k_group, &h_group, &actions) {
        Ok(r) => r,
        Err(_) => return report.fail(Complement),
    };
    match find_isomorphism(&rebuilt, g, max_nodes) {
        Ok(found) => report.split_isomorphic = found.is_some(),
        Err(_) => {
            report.budget_exhausted = true;
            return report.fail(Isomorphism);
        }
    }
    let target = FiniteGroup::dihedral_product(&primes);
    match find_isomorphism(&rebuilt, &target, max_nodes) {
        Ok(found) => report.isomorphic = found.is_some(),
        Err(_) => {
            report.budget_exhausted = true;
            return report.fail(Isomorphism);
        }
    }
    if !(report.split_isomorphic && report.isomorphic) {
        return report.fail(Isomorphism);
    }
    report
}
