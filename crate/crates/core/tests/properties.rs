mod common;

use axgroup_core::efgame::ef_equivalent;
use axgroup_core::fol::{evaluate, evaluate_counted, parse, Assignment, Budget, EvalError, Formula};
use axgroup_core::groups::{find_isomorphism, subgroup_closure, ElemSet, DEFAULT_SEARCH_NODES};
use axgroup_core::structure::{commutator_set, commutator_witness, dihedral_commutator};
use axgroup_core::transform::{fresh_names, relativize};
use axgroup_core::{Elem, FiniteGroup};
use common::*;
use proptest::prelude::*;

fn eval(g: &FiniteGroup, phi: &Formula) -> bool {
    evaluate(g, phi, &Assignment::new(), Budget::UNLIMITED).unwrap()
}

#[test]
fn corpus_is_closed_and_shallow() {
    let corpus = sentence_corpus();
    assert!(corpus.len() >= 50);
    for phi in &corpus {
        assert!(phi.is_sentence(), "{phi}");
        assert!(phi.quantifier_rank() <= 2, "{phi}");
    }
}

#[test]
fn corpus_round_trips() {
    for phi in sentence_corpus() {
        assert_eq!(parse(&phi.to_string()).unwrap(), phi);
    }
}

#[test]
fn isomorphism_invariance_on_corpus() {
    let sentences = sentence_corpus();
    for (i, g) in corpus_groups().iter().enumerate() {
        let h = relabel(g, i as u64);
        for phi in &sentences {
            assert_eq!(eval(g, phi), eval(&h, phi), "{} / {phi}", g.name());
        }
    }
}

#[test]
fn relativization_transfers_from_c3_to_d3() {
    let c3 = cyc(3);
    let d3 = FiniteGroup::dihedral(p(3));
    for phi in sentence_corpus() {
        let psi = relativize(&phi).unwrap();
        assert_eq!(psi.bound_variable_count(), 2 * phi.bound_variable_count());
        assert_eq!(eval(&c3, &phi), eval(&d3, &psi), "{phi}");
    }
}

#[test]
fn relativization_transfers_across_g_s() {
    // C_{15} is the commutator set of D3 x D5; rank-1 sentences keep the
    // relativized evaluation small.
    let c15 = cyc(15);
    let g = FiniteGroup::dihedral_product(&primes(&[3, 5]));
    for phi in sentence_corpus().into_iter().filter(|phi| phi.quantifier_rank() <= 1) {
        assert_eq!(eval(&c15, &phi), eval(&g, &relativize(&phi).unwrap()), "{phi}");
    }
}

#[test]
fn ef_soundness_on_corpus() {
    let groups: Vec<FiniteGroup> =
        corpus_groups().into_iter().filter(|g| g.order() <= 8).collect();
    let sentences = sentence_corpus();
    for (i, g) in groups.iter().enumerate() {
        for h in &groups[i..] {
            for k in 0..=2 {
                if ef_equivalent(g, h, k).unwrap() {
                    for phi in sentences.iter().filter(|phi| phi.quantifier_rank() <= k) {
                        assert_eq!(eval(g, phi), eval(h, phi), "{} ~{k} {}: {phi}", g.name(), h.name());
                    }
                }
            }
        }
    }
}

#[test]
fn ef_monotone_reflexive_symmetric() {
    let groups: Vec<FiniteGroup> =
        corpus_groups().into_iter().filter(|g| g.order() <= 8).collect();
    for g in &groups {
        assert!(ef_equivalent(g, g, 3).unwrap(), "{}", g.name());
        for h in &groups {
            let by_rank: Vec<bool> = (0..=3).map(|k| ef_equivalent(g, h, k).unwrap()).collect();
            assert!(by_rank.windows(2).all(|w| w[0] || !w[1]), "{} {}", g.name(), h.name());
            for (k, &v) in by_rank.iter().enumerate() {
                assert_eq!(ef_equivalent(h, g, k).unwrap(), v);
            }
        }
    }
}

#[test]
fn ef_separates_nonisomorphic_same_order() {
    // Finite groups of equal order that agree up to rank 3 are rare here;
    // rank 3 already sees enough structure for all these pairs.
    let pairs = [
        (FiniteGroup::klein(2), cyc(4)),
        (FiniteGroup::dihedral(p(3)), cyc(6)),
        (quaternion(), FiniteGroup::direct_product(&[cyc(2), cyc(4)])),
    ];
    for (g, h) in pairs {
        assert!(!ef_equivalent(&g, &h, 3).unwrap(), "{} {}", g.name(), h.name());
    }
}

#[test]
fn find_isomorphism_is_symmetric() {
    let groups = corpus_groups();
    for g in &groups {
        for h in groups.iter().filter(|h| h.order() == g.order()) {
            let forward = find_isomorphism(g, h, DEFAULT_SEARCH_NODES).unwrap();
            let backward = find_isomorphism(h, g, DEFAULT_SEARCH_NODES).unwrap();
            assert_eq!(forward.is_some(), backward.is_some(), "{} {}", g.name(), h.name());
            if let Some(f) = forward {
                assert!(f.verify(g, h) && f.is_bijective(h));
            }
        }
    }
}

#[test]
fn relabelled_groups_are_isomorphic() {
    for (i, g) in corpus_groups().iter().enumerate() {
        let h = relabel(g, 100 + i as u64);
        let f = find_isomorphism(g, &h, DEFAULT_SEARCH_NODES).unwrap().unwrap_or_else(|| panic!("{}", g.name()));
        assert!(f.verify(g, &h));
    }
}

#[test]
fn commutator_witnesses_exhaustive() {
    for q in [3, 5, 7, 11] {
        let prime = p(q);
        for n in 0..q {
            let (a, b) = commutator_witness(prime, n);
            let c = dihedral_commutator(a, b, prime);
            assert!(!c.reflection);
            assert_eq!(c.rotation, n, "p = {q}, n = {n}");
        }
        let d = FiniteGroup::dihedral(prime);
        let k = commutator_set(&d);
        assert_eq!(k.len(), q as usize);
        assert!(k.iter().all(|x| d.components(x).is_some_and(|c| {
            matches!(c.components[0], axgroup_core::groups::Component::Dihedral(e) if !e.reflection)
        })));
    }
}

fn evaluation_groups() -> Vec<FiniteGroup> {
    vec![cyc(1), cyc(4), FiniteGroup::klein(2), FiniteGroup::dihedral(p(3)), quaternion()]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn print_parse_round_trip(phi in arb_formula()) {
        // The parser renames shadowed binders; compare after the same step.
        let expected = axgroup_core::fol::rename_shadowed(&phi);
        let printed = phi.to_string();
        let reparsed = parse(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        prop_assert_eq!(reparsed, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn de_morgan_duality(phi in arb_formula()) {
        let body = close(phi).desugar();
        let (vars, inner) = match &body {
            Formula::Quant(_, vs, inner) => (vs.clone(), (**inner).clone()),
            other => (vec!["x".to_string()], other.clone()),
        };
        let not_all = Formula::forall(vars.clone(), inner.clone()).not();
        let exists_not = Formula::exists(vars.clone(), inner.clone().not());
        let not_ex = Formula::exists(vars.clone(), inner.clone()).not();
        let all_not = Formula::forall(vars, inner.not());
        for g in evaluation_groups() {
            prop_assert_eq!(eval(&g, &not_all), eval(&g, &exists_not));
            prop_assert_eq!(eval(&g, &not_ex), eval(&g, &all_not));
        }
    }

    #[test]
    fn invariant_under_relabelling(phi in arb_formula(), seed in any::<u64>()) {
        let phi = close(phi);
        for g in evaluation_groups() {
            prop_assert_eq!(eval(&g, &phi), eval(&relabel(&g, seed), &phi));
        }
    }

    #[test]
    fn budget_is_monotone(phi in arb_formula(), budget in 1u64..400) {
        let phi = close(phi);
        let g = FiniteGroup::dihedral(p(3));
        let (truth, steps) = evaluate_counted(&g, &phi, &Assignment::new(), Budget::UNLIMITED).unwrap();
        match evaluate_counted(&g, &phi, &Assignment::new(), Budget(budget)) {
            Ok((v, used)) => {
                prop_assert_eq!(v, truth);
                prop_assert!(used <= budget);
                prop_assert_eq!(used, steps);
                prop_assert_eq!(evaluate(&g, &phi, &Assignment::new(), Budget(budget + 1)), Ok(truth));
            }
            Err(EvalError::BudgetExceeded(b)) => {
                prop_assert_eq!(b, budget);
                prop_assert!(steps > budget);
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn fresh_names_idempotent_and_sound(phi in arb_formula()) {
        let once = fresh_names(&phi);
        prop_assert_eq!(fresh_names(&once), once.clone());
        prop_assert_eq!(once.free_vars(), phi.free_vars());
        let closed = close(phi);
        let renamed = fresh_names(&closed);
        for g in evaluation_groups() {
            prop_assert_eq!(eval(&g, &closed), eval(&g, &renamed));
        }
    }

    #[test]
    fn relativization_transfer_random(phi in arb_formula()) {
        let phi = close(phi);
        prop_assume!(phi.quantifier_rank() <= 3);
        let psi = relativize(&phi).unwrap();
        prop_assert_eq!(psi.bound_variable_count(), 2 * phi.bound_variable_count());
        let c3 = cyc(3);
        let d3 = FiniteGroup::dihedral(p(3));
        prop_assert_eq!(eval(&c3, &phi), eval(&d3, &psi));
    }

    #[test]
    fn closure_idempotent_and_monotone(
        gi in 0usize..27,
        small in prop::collection::vec(0u32..12, 0..3),
        extra in prop::collection::vec(0u32..12, 0..3),
    ) {
        let groups = corpus_groups();
        let g = &groups[gi % groups.len()];
        let n = g.order() as u32;
        let s: Vec<Elem> = small.iter().map(|&x| Elem(x % n)).collect();
        let mut t = s.clone();
        t.extend(extra.iter().map(|&x| Elem(x % n)));
        let cs = subgroup_closure(g, &s);
        prop_assert_eq!(subgroup_closure(g, cs.as_slice()), cs.clone());
        prop_assert!(cs.is_subset(&subgroup_closure(g, &t)));
        prop_assert_eq!(g.order() % cs.len(), 0);
        prop_assert!(axgroup_core::groups::is_subgroup(g, &cs));
        let _ = ElemSet::new(g.order(), s);
    }
}
