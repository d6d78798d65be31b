//! The axiom families satisfied by `G_S`, as sentences and as fast semantic
//! checks over the commutator set `K = {[a,b]}`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::fol::{parse_sentence, Formula};
use crate::groups::{Elem, FiniteGroup, OddPrime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AxiomKind {
    CommutatorClosure,
    Square,
    Centralizer,
    InvertingInvolution(OddPrime),
}

impl AxiomKind {
    pub fn name(self) -> String {
        match self {
            AxiomKind::CommutatorClosure => "commutator-closure".into(),
            AxiomKind::Square => "square".into(),
            AxiomKind::Centralizer => "centralizer".into(),
            AxiomKind::InvertingInvolution(p) => format!("inverting-involution({p})"),
        }
    }
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("prime list is empty")]
    NoPrimes,
    #[error("prime list must be strictly increasing, got {0:?}")]
    NotSorted(Vec<u32>),
}

/// Concrete syntax of the sentence for `kind`.
pub fn axiom_text(kind: AxiomKind) -> String {
    match kind {
        AxiomKind::CommutatorClosure => "forall a,b,c,d. exists r,s. [a,b]*[c,d] = [r,s]".into(),
        AxiomKind::Square => "forall g. exists h,k. g^2 = [h,k]".into(),
        AxiomKind::Centralizer => {
            "forall x. (forall y,z. x*[y,z]*x^-1 = [y,z]) -> (exists a,b. x = [a,b])".into()
        }
        AxiomKind::InvertingInvolution(p) => {
            format!("exists x. forall y,z. (x*[y,z]*x^-1 = [y,z]^-1) <-> ([y,z]^{p} = 1)")
        }
    }
}

pub fn axiom(kind: AxiomKind) -> Formula {
    parse_sentence(&axiom_text(kind)).expect("axiom texts are well-formed sentences")
}

/// `[CommutatorClosure, Square, Centralizer]` followed by one inverting
/// involution per prime. `primes` must already be sorted and distinct.
pub fn axiom_set_kinds(primes: &[OddPrime]) -> Result<Vec<AxiomKind>, AxiomError> {
    if primes.is_empty() {
        return Err(AxiomError::NoPrimes);
    }
    if primes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AxiomError::NotSorted(primes.iter().map(|p| p.get()).collect()));
    }
    Ok(axiom_kinds(primes))
}

pub fn axiom_set(primes: &[OddPrime]) -> Result<Vec<Formula>, AxiomError> {
    Ok(axiom_set_kinds(primes)?.into_iter().map(axiom).collect())
}

pub(crate) fn axiom_kinds(primes: &[OddPrime]) -> Vec<AxiomKind> {
    let mut kinds = vec![AxiomKind::CommutatorClosure, AxiomKind::Square, AxiomKind::Centralizer];
    kinds.extend(primes.iter().map(|&p| AxiomKind::InvertingInvolution(p)));
    kinds
}

/// Decides the axioms on one group. Every quantified commutator in the
/// sentences ranges over `K`, so each check is a loop over `K` or `G`.
pub struct FastVerifier<'g> {
    group: &'g FiniteGroup,
    in_k: Vec<bool>,
    k: Vec<Elem>,
}

impl<'g> FastVerifier<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        let mut in_k = vec![false; group.order()];
        let mut k = Vec::new();
        for a in group.elements() {
            for b in group.elements() {
                let c = group.commutator(a, b);
                if !in_k[c.index()] {
                    in_k[c.index()] = true;
                    k.push(c);
                }
            }
        }
        k.sort();
        Self { group, in_k, k }
    }

    pub fn commutators(&self) -> &[Elem] {
        &self.k
    }

    pub fn verify(&self, kind: AxiomKind) -> bool {
        let g = self.group;
        let in_k = |x: Elem| self.in_k[x.index()];
        match kind {
            AxiomKind::CommutatorClosure => {
                self.k.iter().all(|&a| self.k.iter().all(|&b| in_k(g.op(a, b))))
            }
            AxiomKind::Square => g.elements().all(|x| in_k(g.op(x, x))),
            AxiomKind::Centralizer => g
                .elements()
                .all(|x| in_k(x) || !self.k.iter().all(|&c| g.commutes(x, c))),
            AxiomKind::InvertingInvolution(p) => {
                let torsion: Vec<bool> =
                    self.k.iter().map(|&c| g.pow(c, i64::from(p.get())) == Elem::IDENTITY).collect();
                g.elements().any(|x| {
                    self.k
                        .iter()
                        .zip(&torsion)
                        .all(|(&c, &t)| (g.conjugate(x, c) == g.inv(c)) == t)
                })
            }
        }
    }
}

pub fn verify_fast(group: &FiniteGroup, kind: AxiomKind) -> bool {
    FastVerifier::new(group).verify(kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol::{evaluate, Assignment, Budget};

    fn p(n: u32) -> OddPrime {
        OddPrime::new(n).unwrap()
    }

    fn all_kinds() -> Vec<AxiomKind> {
        axiom_kinds(&[p(3), p(5)])
    }

    #[test]
    fn sentences_print_verbatim() {
        for kind in all_kinds() {
            assert_eq!(axiom(kind).to_string(), axiom_text(kind));
        }
        assert_eq!(axiom(AxiomKind::Square).to_string(), "forall g. exists h,k. g^2 = [h,k]");
    }

    #[test]
    fn shape() {
        assert_eq!(axiom(AxiomKind::InvertingInvolution(p(3))).quantifier_rank(), 3);
        assert_eq!(axiom(AxiomKind::CommutatorClosure).bound_variable_count(), 6);
        assert_eq!(axiom(AxiomKind::CommutatorClosure).quantifier_rank(), 6);
        assert_eq!(axiom(AxiomKind::Centralizer).quantifier_rank(), 3);
        for kind in all_kinds() {
            assert!(axiom(kind).is_sentence());
        }
    }

    #[test]
    fn axiom_sets() {
        assert_eq!(axiom_set(&[p(3), p(5)]).unwrap().len(), 5);
        assert_eq!(axiom_set(&[p(3)]).unwrap().len(), 4);
        assert_eq!(axiom_set(&[]), Err(AxiomError::NoPrimes));
        assert!(matches!(axiom_set(&[p(5), p(3)]), Err(AxiomError::NotSorted(_))));
        assert!(matches!(axiom_set(&[p(3), p(3)]), Err(AxiomError::NotSorted(_))));
    }

    #[test]
    fn small_cases_against_generic() {
        let d3 = FiniteGroup::dihedral(p(3));
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        for kind in axiom_kinds(&[p(3)]) {
            assert!(verify_fast(&d3, kind), "{kind}");
        }
        assert!(!verify_fast(&c3, AxiomKind::Square));
        assert!(!verify_fast(&c2, AxiomKind::Centralizer));
        for g in [&d3, &c3, &c2] {
            for kind in all_kinds() {
                let generic = evaluate(g, &axiom(kind), &Assignment::new(), Budget::UNLIMITED).unwrap();
                assert_eq!(verify_fast(g, kind), generic, "{} {kind}", g.name());
            }
        }
    }

    #[test]
    fn foreign_prime_holds_with_trivial_witness() {
        let g = FiniteGroup::dihedral_product(&[p(3), p(5)]);
        assert!(verify_fast(&g, AxiomKind::InvertingInvolution(p(7))));
        assert!(verify_fast(&g, AxiomKind::InvertingInvolution(p(11))));
    }
}
