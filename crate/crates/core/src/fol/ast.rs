use std::collections::BTreeSet;

/// A term of the language of groups over `{·, ⁻¹, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    One,
    Var(String),
    Mul(Box<Term>, Box<Term>),
    Inv(Box<Term>),
    /// Integer power other than `-1`, which is always [`Term::Inv`].
    Pow(Box<Term>, i64),
    /// `[t,u] = t·u·t⁻¹·u⁻¹`.
    Comm(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: Term) -> Self {
        Term::Mul(Box::new(self), Box::new(rhs))
    }

    pub fn inv(self) -> Self {
        Term::Inv(Box::new(self))
    }

    /// `t^n`, normalizing `t^-1` to [`Term::Inv`].
    pub fn pow(self, n: i64) -> Self {
        if n == -1 {
            self.inv()
        } else {
            Term::Pow(Box::new(self), n)
        }
    }

    pub fn comm(self, rhs: Term) -> Self {
        Term::Comm(Box::new(self), Box::new(rhs))
    }

    /// Rewrites every commutator `[t,u]` as `t*u*t^-1*u^-1`.
    pub fn desugar(&self) -> Term {
        match self {
            Term::One | Term::Var(_) => self.clone(),
            Term::Mul(a, b) => a.desugar().mul(b.desugar()),
            Term::Inv(a) => a.desugar().inv(),
            Term::Pow(a, n) => Term::Pow(Box::new(a.desugar()), *n),
            Term::Comm(a, b) => {
                let (a, b) = (a.desugar(), b.desugar());
                a.clone().mul(b.clone()).mul(a.inv()).mul(b.inv())
            }
        }
    }

    pub fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::One => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Inv(a) | Term::Pow(a, _) => a.vars(out),
            Term::Mul(a, b) | Term::Comm(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }

    /// Replaces each variable `v` by `f(v)`.
    pub fn substitute(&self, f: &impl Fn(&str) -> Option<Term>) -> Term {
        match self {
            Term::One => Term::One,
            Term::Var(v) => f(v).unwrap_or_else(|| self.clone()),
            Term::Mul(a, b) => a.substitute(f).mul(b.substitute(f)),
            Term::Inv(a) => a.substitute(f).inv(),
            Term::Pow(a, n) => Term::Pow(Box::new(a.substitute(f)), *n),
            Term::Comm(a, b) => a.substitute(f).comm(b.substitute(f)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
        }
    }

    pub fn dual(self) -> Self {
        match self {
            Quantifier::Forall => Quantifier::Exists,
            Quantifier::Exists => Quantifier::Forall,
        }
    }
}

/// A first-order formula. `t != u` is sugar for `!(t = u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// A block binding one or more variables.
    Quant(Quantifier, Vec<String>, Box<Formula>),
}

impl Formula {
    pub fn eq(t: Term, u: Term) -> Self {
        Formula::Eq(t, u)
    }

    pub fn neq(t: Term, u: Term) -> Self {
        Formula::Eq(t, u).not()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: Formula) -> Self {
        Formula::Iff(Box::new(self), Box::new(rhs))
    }

    pub fn forall<S: Into<String>>(vars: impl IntoIterator<Item = S>, body: Formula) -> Self {
        Formula::Quant(Quantifier::Forall, vars.into_iter().map(Into::into).collect(), Box::new(body))
    }

    pub fn exists<S: Into<String>>(vars: impl IntoIterator<Item = S>, body: Formula) -> Self {
        Formula::Quant(Quantifier::Exists, vars.into_iter().map(Into::into).collect(), Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(t, u) => {
                let mut vs = BTreeSet::new();
                t.vars(&mut vs);
                u.vars(&mut vs);
                out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Quant(_, vars, body) => {
                let depth = bound.len();
                bound.extend(vars.iter().cloned());
                body.collect_free(bound, out);
                bound.truncate(depth);
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Eq(t, u) => {
                t.vars(&mut out);
                u.vars(&mut out);
            }
            Formula::Quant(_, vars, _) => out.extend(vars.iter().cloned()),
            _ => {}
        });
        out
    }

    /// Maximum quantifier nesting; a block of `k` variables counts `k`.
    pub fn quantifier_rank(&self) -> usize {
        match self {
            Formula::Eq(..) => 0,
            Formula::Not(f) => f.quantifier_rank(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.quantifier_rank().max(b.quantifier_rank())
            }
            Formula::Quant(_, vars, body) => vars.len() + body.quantifier_rank(),
        }
    }

    /// Total number of variables bound by quantifier blocks.
    pub fn bound_variable_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if let Formula::Quant(_, vars, _) = f {
                n += vars.len();
            }
        });
        n
    }

    /// Number of atomic formulas.
    pub fn atom_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if let Formula::Eq(..) = f {
                n += 1;
            }
        });
        n
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Eq(..) => {}
            Formula::Not(g) | Formula::Quant(_, _, g) => g.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    /// Replaces every commutator by its expansion.
    pub fn desugar(&self) -> Formula {
        self.map_atoms(&|t, u| Formula::Eq(t.desugar(), u.desugar()))
    }

    /// Rebuilds the formula with every atom `t = u` replaced by `f(t, u)`.
    pub fn map_atoms(&self, f: &impl Fn(&Term, &Term) -> Formula) -> Formula {
        match self {
            Formula::Eq(t, u) => f(t, u),
            Formula::Not(g) => g.map_atoms(f).not(),
            Formula::And(a, b) => a.map_atoms(f).and(b.map_atoms(f)),
            Formula::Or(a, b) => a.map_atoms(f).or(b.map_atoms(f)),
            Formula::Implies(a, b) => a.map_atoms(f).implies(b.map_atoms(f)),
            Formula::Iff(a, b) => a.map_atoms(f).iff(b.map_atoms(f)),
            Formula::Quant(q, vars, body) => {
                Formula::Quant(*q, vars.clone(), Box::new(body.map_atoms(f)))
            }
        }
    }

    /// Renames free occurrences of `old` to `new`. `new` must not be bound
    /// anywhere inside `self`.
    pub fn rename_free(&self, old: &str, new: &str) -> Formula {
        match self {
            Formula::Eq(t, u) => {
                let sub = |v: &str| (v == old).then(|| Term::var(new));
                Formula::Eq(t.substitute(&sub), u.substitute(&sub))
            }
            Formula::Not(g) => g.rename_free(old, new).not(),
            Formula::And(a, b) => a.rename_free(old, new).and(b.rename_free(old, new)),
            Formula::Or(a, b) => a.rename_free(old, new).or(b.rename_free(old, new)),
            Formula::Implies(a, b) => a.rename_free(old, new).implies(b.rename_free(old, new)),
            Formula::Iff(a, b) => a.rename_free(old, new).iff(b.rename_free(old, new)),
            Formula::Quant(q, vars, body) => {
                if vars.iter().any(|v| v == old) {
                    self.clone()
                } else {
                    Formula::Quant(*q, vars.clone(), Box::new(body.rename_free(old, new)))
                }
            }
        }
    }
}

/// Smallest `base_k` (k ≥ 1) not in `taken`.
pub(crate) fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    (1..)
        .map(|k| format!("{base}_{k}"))
        .find(|name| !taken.contains(name))
        .expect("unbounded suffixes")
}

/// Renames binders that repeat a name already bound on the path from the
/// root, so that bound names are unique along every root-to-leaf path.
pub fn rename_shadowed(formula: &Formula) -> Formula {
    let mut taken = formula.all_names();
    unshadow(formula, &mut Vec::new(), &mut taken)
}

fn unshadow(f: &Formula, path: &mut Vec<String>, taken: &mut BTreeSet<String>) -> Formula {
    match f {
        Formula::Eq(..) => f.clone(),
        Formula::Not(g) => unshadow(g, path, taken).not(),
        Formula::And(a, b) => unshadow(a, path, taken).and(unshadow(b, path, taken)),
        Formula::Or(a, b) => unshadow(a, path, taken).or(unshadow(b, path, taken)),
        Formula::Implies(a, b) => unshadow(a, path, taken).implies(unshadow(b, path, taken)),
        Formula::Iff(a, b) => unshadow(a, path, taken).iff(unshadow(b, path, taken)),
        Formula::Quant(q, vars, body) => {
            let depth = path.len();
            let mut body = (**body).clone();
            let mut new_vars = Vec::with_capacity(vars.len());
            for v in vars {
                if path.contains(v) {
                    let fresh = fresh_name(v, taken);
                    taken.insert(fresh.clone());
                    body = body.rename_free(v, &fresh);
                    path.push(fresh.clone());
                    new_vars.push(fresh);
                } else {
                    path.push(v.clone());
                    new_vars.push(v.clone());
                }
            }
            let body = unshadow(&body, path, taken);
            path.truncate(depth);
            Formula::Quant(*q, new_vars, Box::new(body))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }

    #[test]
    fn desugar_commutator() {
        let y = Term::var("y");
        assert_eq!(
            x().comm(y.clone()).desugar(),
            x().mul(y.clone()).mul(x().inv()).mul(y.inv())
        );
        assert_eq!(x().pow(-1), x().inv());
    }

    #[test]
    fn free_vars_and_rank() {
        let f = Formula::forall(["x"], Formula::eq(x(), Term::var("z")));
        assert_eq!(f.free_vars().into_iter().collect::<Vec<_>>(), vec!["z".to_string()]);
        assert_eq!(f.quantifier_rank(), 1);
        let g = Formula::exists(["a", "b"], f.clone()).and(f);
        assert_eq!(g.quantifier_rank(), 3);
        assert_eq!(g.bound_variable_count(), 4);
        assert_eq!(Formula::eq(Term::One, Term::One).quantifier_rank(), 0);
    }

    #[test]
    fn shadowing_is_renamed() {
        let inner = Formula::exists(["x"], Formula::eq(x(), Term::One));
        let f = Formula::forall(["x"], inner);
        let expected = Formula::forall(
            ["x"],
            Formula::exists(["x_1"], Formula::eq(Term::var("x_1"), Term::One)),
        );
        assert_eq!(rename_shadowed(&f), expected);
        let dup = Formula::forall(["x", "x"], Formula::eq(x(), x()));
        assert_eq!(
            rename_shadowed(&dup),
            Formula::forall(["x", "x_1"], Formula::eq(Term::var("x_1"), Term::var("x_1")))
        );
    }
}
