//! Group-theoretic algorithms around `G_S = ∏_{p ∈ S} D_p`: commutator
//! sets, centralizers, involutive automorphisms, conjugation actions,
//! constructive Schur–Zassenhaus splitting, and the reconstruction pipeline
//! that recognizes `G_S` among finite candidates.

mod action;
mod automorphism;
mod classify;
mod commutators;
mod reconstruct;
mod splitting;

use thiserror::Error;

use crate::groups::GroupError;

pub use action::{conjugation_action, ConjugationAction, Quotient};
pub use automorphism::{involutive_automorphisms, Automorphism, Involutions, PrimeInvolution};
pub use classify::{classify_candidates, classify_with_budget, ClassificationRow};
pub use commutators::{
    centralizer, commutator_set, commutator_witness, derived_subgroup, dihedral_commutator,
    witness_exponent,
};
pub use reconstruct::{reconstruct, reconstruct_with_budget, ReconstructionReport, ReconstructionStep};
pub use splitting::{schur_zassenhaus_complement, verify_complement, Complement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("|N| = {normal} and |G/N| = {index} are not coprime")]
    NotCoprime { normal: usize, index: usize },
    #[error("at most 3 primes are supported, got {0}")]
    TooManyPrimes(usize),
    #[error("internal check failed: {0}")]
    VerificationFailed(String),
}
