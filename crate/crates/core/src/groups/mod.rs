//! Finite groups: structured dihedral/cyclic products, table-backed groups,
//! subgroups, homomorphisms and isomorphism search.

mod descriptor;
mod dihedral;
mod group;
mod hom;
mod prime;
mod subgroup;
mod table;

use thiserror::Error;

pub use descriptor::{
    automorphism_from_spec, build_group, is_homomorphism, semidirect_embeddings, semidirect_product,
    ActionSpec, AutomorphismSpec, GroupDescriptor,
};
pub use dihedral::DihedralElement;
pub use group::{Component, Elem, Factor, FiniteGroup, ProductElement};
pub(crate) use group::gcd;
pub use hom::{
    all_isomorphisms, automorphisms, find_isomorphism, order_statistics, Homomorphism,
    DEFAULT_SEARCH_NODES,
};
pub use prime::{canonical_primes, OddPrime};
pub use subgroup::{enumerate_subgroups_of_order, is_normal, is_subgroup, subgroup_closure, ElemSet};
pub use table::{
    MultiplicationTable, EXHAUSTIVE_ASSOCIATIVITY_LIMIT, SAMPLED_TRIPLES, SAMPLING_SEED,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("invalid group: {0}")]
    Invalid(String),
    #[error("semidirect kernel must be abelian")]
    NonAbelianKernel,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("not a group: {axiom} axiom fails: {detail}")]
    AxiomViolation { axiom: &'static str, detail: String },
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("{0} does not divide the group order {1}")]
    OrderNotDivisor(usize, usize),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
}
