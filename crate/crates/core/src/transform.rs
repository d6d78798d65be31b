//! Relativization of sentences to the set of commutators.
//!
//! A sentence `φ` about a group `K` is turned into a sentence `ψ` about a
//! group `Γ` by replacing every quantifier `Qx` with `Q x_1, x_2` and every
//! occurrence of `x` in an atom by `[x_1, x_2]`. When `K` is exactly the set
//! of commutators of `Γ`, `ψ` holds in `Γ` iff `φ` holds in `K`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::fol::{fresh_name, Formula, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("relativization needs a sentence; free variables: {}", .0.join(", "))]
    FreeVariables(Vec<String>),
}

/// Alpha-renames bound variables so that no two binders share a name and no
/// binder reuses a free variable's name.
pub fn fresh_names(formula: &Formula) -> Formula {
    let mut taken = formula.all_names();
    let mut used: BTreeSet<String> = formula.free_vars();
    rename(formula, &mut used, &mut taken)
}

fn rename(f: &Formula, used: &mut BTreeSet<String>, taken: &mut BTreeSet<String>) -> Formula {
    match f {
        Formula::Eq(..) => f.clone(),
        Formula::Not(g) => rename(g, used, taken).not(),
        Formula::And(a, b) => rename(a, used, taken).and(rename(b, used, taken)),
        Formula::Or(a, b) => rename(a, used, taken).or(rename(b, used, taken)),
        Formula::Implies(a, b) => rename(a, used, taken).implies(rename(b, used, taken)),
        Formula::Iff(a, b) => rename(a, used, taken).iff(rename(b, used, taken)),
        Formula::Quant(q, vars, body) => {
            let mut body = (**body).clone();
            let mut new_vars = Vec::with_capacity(vars.len());
            for v in vars {
                if used.insert(v.clone()) {
                    new_vars.push(v.clone());
                } else {
                    let fresh = fresh_name(v, taken);
                    taken.insert(fresh.clone());
                    used.insert(fresh.clone());
                    body = body.rename_free(v, &fresh);
                    new_vars.push(fresh);
                }
            }
            Formula::Quant(*q, new_vars, Box::new(rename(&body, used, taken)))
        }
    }
}

/// Replaces each bound variable `x` by the commutator `[x_1, x_2]` of two
/// fresh variables, quantified the same way.
pub fn relativize(formula: &Formula) -> Result<Formula, TransformError> {
    let free = formula.free_vars();
    if !free.is_empty() {
        return Err(TransformError::FreeVariables(free.into_iter().collect()));
    }
    let formula = fresh_names(formula);
    let mut taken = formula.all_names();
    let mut pairs: BTreeMap<String, (String, String)> = BTreeMap::new();
    formula.visit(&mut |f| {
        if let Formula::Quant(_, vars, _) = f {
            for v in vars {
                let first = fresh_name(v, &taken);
                taken.insert(first.clone());
                let second = fresh_name(v, &taken);
                taken.insert(second.clone());
                pairs.insert(v.clone(), (first, second));
            }
        }
    });
    Ok(split_binders(&formula, &pairs))
}

fn split_binders(f: &Formula, pairs: &BTreeMap<String, (String, String)>) -> Formula {
    match f {
        Formula::Eq(t, u) => {
            let sub = |v: &str| pairs.get(v).map(|(a, b)| Term::var(a).comm(Term::var(b)));
            Formula::Eq(t.substitute(&sub), u.substitute(&sub))
        }
        Formula::Not(g) => split_binders(g, pairs).not(),
        Formula::And(a, b) => split_binders(a, pairs).and(split_binders(b, pairs)),
        Formula::Or(a, b) => split_binders(a, pairs).or(split_binders(b, pairs)),
        Formula::Implies(a, b) => split_binders(a, pairs).implies(split_binders(b, pairs)),
        Formula::Iff(a, b) => split_binders(a, pairs).iff(split_binders(b, pairs)),
        Formula::Quant(q, vars, body) => {
            let vars = vars
                .iter()
                .flat_map(|v| {
                    let (a, b) = &pairs[v];
                    [a.clone(), b.clone()]
                })
                .collect();
            Formula::Quant(*q, vars, Box::new(split_binders(body, pairs)))
        }
    }
}
