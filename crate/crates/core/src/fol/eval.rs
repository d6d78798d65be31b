use std::collections::BTreeMap;

use thiserror::Error;

use super::{Formula, Quantifier, Term};
use crate::groups::{Elem, FiniteGroup};

/// Values for the free variables of a formula.
pub type Assignment = BTreeMap<String, Elem>;

/// Maximum number of quantifier instantiations for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(100_000_000);
    pub const UNLIMITED: Budget = Budget(u64::MAX);
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("evaluation budget of {0} steps exceeded")]
    BudgetExceeded(u64),
    #[error("variable `{0}` is not bound by the assignment")]
    Unbound(String),
}

/// Truth value of `formula` in `group` under `assignment`.
pub fn evaluate(
    group: &FiniteGroup,
    formula: &Formula,
    assignment: &Assignment,
    budget: Budget,
) -> Result<bool, EvalError> {
    evaluate_counted(group, formula, assignment, budget).map(|(v, _)| v)
}

/// Like [`evaluate`], also returning the number of steps used.
pub fn evaluate_counted(
    group: &FiniteGroup,
    formula: &Formula,
    assignment: &Assignment,
    budget: Budget,
) -> Result<(bool, u64), EvalError> {
    let mut scope: Vec<String> = Vec::new();
    let mut env: Vec<Elem> = Vec::new();
    for v in formula.free_vars() {
        let value = *assignment.get(&v).ok_or_else(|| EvalError::Unbound(v.clone()))?;
        if value.index() >= group.order() {
            return Err(EvalError::Unbound(v));
        }
        scope.push(v);
        env.push(value);
    }
    let compiled = compile(formula, &mut scope);
    env.resize(scope_capacity(&compiled, env.len()), Elem::IDENTITY);
    let mut machine = Machine { group, env, steps: 0, budget: budget.0 };
    let value = machine.formula(&compiled)?;
    Ok((value, machine.steps))
}

/// Terms and formulas with variables resolved to environment slots.
enum CTerm {
    One,
    Var(usize),
    Mul(Box<CTerm>, Box<CTerm>),
    Inv(Box<CTerm>),
    Pow(Box<CTerm>, i64),
    Comm(Box<CTerm>, Box<CTerm>),
}

enum CFormula {
    Eq(CTerm, CTerm),
    Not(Box<CFormula>),
    And(Box<CFormula>, Box<CFormula>),
    Or(Box<CFormula>, Box<CFormula>),
    Implies(Box<CFormula>, Box<CFormula>),
    Iff(Box<CFormula>, Box<CFormula>),
    Quant(Quantifier, Vec<usize>, Box<CFormula>),
}

fn lookup(scope: &[String], v: &str) -> usize {
    scope.iter().rposition(|s| s == v).expect("free variables are in scope")
}

fn compile_term(t: &Term, scope: &[String]) -> CTerm {
    match t {
        Term::One => CTerm::One,
        Term::Var(v) => CTerm::Var(lookup(scope, v)),
        Term::Mul(a, b) => CTerm::Mul(Box::new(compile_term(a, scope)), Box::new(compile_term(b, scope))),
        Term::Inv(a) => CTerm::Inv(Box::new(compile_term(a, scope))),
        Term::Pow(a, n) => CTerm::Pow(Box::new(compile_term(a, scope)), *n),
        Term::Comm(a, b) => CTerm::Comm(Box::new(compile_term(a, scope)), Box::new(compile_term(b, scope))),
    }
}

fn compile(f: &Formula, scope: &mut Vec<String>) -> CFormula {
    let bin = |a: &Formula, b: &Formula, scope: &mut Vec<String>| {
        (Box::new(compile(a, scope)), Box::new(compile(b, scope)))
    };
    match f {
        Formula::Eq(t, u) => CFormula::Eq(compile_term(t, scope), compile_term(u, scope)),
        Formula::Not(g) => CFormula::Not(Box::new(compile(g, scope))),
        Formula::And(a, b) => {
            let (a, b) = bin(a, b, scope);
            CFormula::And(a, b)
        }
        Formula::Or(a, b) => {
            let (a, b) = bin(a, b, scope);
            CFormula::Or(a, b)
        }
        Formula::Implies(a, b) => {
            let (a, b) = bin(a, b, scope);
            CFormula::Implies(a, b)
        }
        Formula::Iff(a, b) => {
            let (a, b) = bin(a, b, scope);
            CFormula::Iff(a, b)
        }
        Formula::Quant(q, vars, body) => {
            let depth = scope.len();
            let slots = (depth..depth + vars.len()).collect();
            scope.extend(vars.iter().cloned());
            let body = compile(body, scope);
            scope.truncate(depth);
            CFormula::Quant(*q, slots, Box::new(body))
        }
    }
}

fn scope_capacity(f: &CFormula, base: usize) -> usize {
    match f {
        CFormula::Eq(..) => base,
        CFormula::Not(g) => scope_capacity(g, base),
        CFormula::And(a, b) | CFormula::Or(a, b) | CFormula::Implies(a, b) | CFormula::Iff(a, b) => {
            scope_capacity(a, base).max(scope_capacity(b, base))
        }
        CFormula::Quant(_, slots, body) => scope_capacity(body, slots.last().map_or(base, |s| s + 1)),
    }
}

struct Machine<'g> {
    group: &'g FiniteGroup,
    env: Vec<Elem>,
    steps: u64,
    budget: u64,
}

impl Machine<'_> {
    fn term(&self, t: &CTerm) -> Elem {
        let g = self.group;
        match t {
            CTerm::One => Elem::IDENTITY,
            CTerm::Var(slot) => self.env[*slot],
            CTerm::Mul(a, b) => g.op(self.term(a), self.term(b)),
            CTerm::Inv(a) => g.inv(self.term(a)),
            CTerm::Pow(a, n) => g.pow(self.term(a), *n),
            CTerm::Comm(a, b) => g.commutator(self.term(a), self.term(b)),
        }
    }

    fn formula(&mut self, f: &CFormula) -> Result<bool, EvalError> {
        Ok(match f {
            CFormula::Eq(t, u) => self.term(t) == self.term(u),
            CFormula::Not(g) => !self.formula(g)?,
            CFormula::And(a, b) => self.formula(a)? && self.formula(b)?,
            CFormula::Or(a, b) => self.formula(a)? || self.formula(b)?,
            CFormula::Implies(a, b) => !self.formula(a)? || self.formula(b)?,
            CFormula::Iff(a, b) => self.formula(a)? == self.formula(b)?,
            CFormula::Quant(q, slots, body) => self.quantify(*q, slots, body)?,
        })
    }

    /// Iterates the carrier in index order for each variable of the block,
    /// stopping at the first witness (exists) or counterexample (forall).
    fn quantify(&mut self, q: Quantifier, slots: &[usize], body: &CFormula) -> Result<bool, EvalError> {
        let Some((&slot, rest)) = slots.split_first() else {
            return self.formula(body);
        };
        let decisive = q == Quantifier::Exists;
        for x in self.group.elements() {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(EvalError::BudgetExceeded(self.budget));
            }
            self.env[slot] = x;
            if self.quantify(q, rest, body)? == decisive {
                return Ok(decisive);
            }
        }
        Ok(!decisive)
    }
}
