//! Finite groups and first-order sentences about them, built around the
//! products `G_S = ∏_{p ∈ S} D_p` of dihedral groups over odd primes.
//!
//! * [`groups`]: carriers, subgroups, homomorphisms, isomorphism search.
//! * [`fol`]: the first-order language of groups, its parser, printer and
//!   model checker.
//! * [`transform`]: relativization of sentences to the commutator set.
//! * [`axioms`]: the axiom families satisfied by `G_S`, with fast checkers.
//! * [`structure`]: commutators, centralizers, involutive automorphisms,
//!   Schur–Zassenhaus complements and the reconstruction pipeline.
//! * [`efgame`]: bounded-rank Ehrenfeucht–Fraïssé games.

pub mod axioms;
pub mod efgame;
pub mod fol;
pub mod groups;
pub mod structure;
pub mod transform;

pub use groups::{build_group, Elem, ElemSet, FiniteGroup, GroupDescriptor, GroupError, OddPrime};
