use std::fmt;

use super::{Formula, Term};

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, TermLevel::Product)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum TermLevel {
    Product,
    Power,
    Primary,
}

fn term_level(t: &Term) -> TermLevel {
    match t {
        Term::Mul(..) => TermLevel::Product,
        Term::Pow(..) | Term::Inv(_) => TermLevel::Power,
        Term::One | Term::Var(_) | Term::Comm(..) => TermLevel::Primary,
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, min: TermLevel) -> fmt::Result {
    if term_level(t) < min {
        write!(f, "(")?;
        write_term(f, t, TermLevel::Product)?;
        return write!(f, ")");
    }
    match t {
        Term::One => write!(f, "1"),
        Term::Var(v) => write!(f, "{v}"),
        Term::Mul(a, b) => {
            write_term(f, a, TermLevel::Product)?;
            write!(f, "*")?;
            write_term(f, b, TermLevel::Power)
        }
        Term::Inv(a) => {
            write_term(f, a, TermLevel::Primary)?;
            write!(f, "^-1")
        }
        Term::Pow(a, n) => {
            write_term(f, a, TermLevel::Primary)?;
            write!(f, "^{n}")
        }
        Term::Comm(a, b) => {
            write!(f, "[")?;
            write_term(f, a, TermLevel::Product)?;
            write!(f, ",")?;
            write_term(f, b, TermLevel::Product)?;
            write!(f, "]")
        }
    }
}

impl fmt::Display for Formula {
    /// Canonical concrete syntax; `parse` inverts it exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, Level::Iff)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Iff,
    Implies,
    Or,
    And,
    Unary,
}

fn level(phi: &Formula) -> Level {
    match phi {
        Formula::Iff(..) => Level::Iff,
        Formula::Implies(..) => Level::Implies,
        Formula::Or(..) => Level::Or,
        Formula::And(..) => Level::And,
        Formula::Eq(..) | Formula::Not(_) | Formula::Quant(..) => Level::Unary,
    }
}

fn parenthesized(f: &mut fmt::Formatter<'_>, phi: &Formula) -> fmt::Result {
    write!(f, "(")?;
    write_formula(f, phi, Level::Iff)?;
    write!(f, ")")
}

/// Writes an operand of a connective. Quantifiers extend as far right as
/// possible, so as operands they are always parenthesized.
fn operand(f: &mut fmt::Formatter<'_>, phi: &Formula, min: Level) -> fmt::Result {
    if matches!(phi, Formula::Quant(..)) || level(phi) < min {
        parenthesized(f, phi)
    } else {
        write_formula(f, phi, min)
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, phi: &Formula, min: Level) -> fmt::Result {
    debug_assert!(level(phi) >= min || matches!(phi, Formula::Quant(..)));
    match phi {
        Formula::Eq(t, u) => write!(f, "{t} = {u}"),
        Formula::Not(inner) => match &**inner {
            Formula::Eq(t, u) => write!(f, "{t} != {u}"),
            other => {
                write!(f, "!")?;
                operand(f, other, Level::Unary)
            }
        },
        Formula::And(a, b) => {
            operand(f, a, Level::And)?;
            write!(f, " & ")?;
            operand(f, b, Level::Unary)
        }
        Formula::Or(a, b) => {
            operand(f, a, Level::Or)?;
            write!(f, " | ")?;
            operand(f, b, Level::And)
        }
        Formula::Implies(a, b) => {
            operand(f, a, Level::Or)?;
            write!(f, " -> ")?;
            operand(f, b, Level::Implies)
        }
        // Both sides of a biconditional are always bracketed, which keeps
        // long matrices such as `(x*k*x^-1 = k^-1) <-> (k^p = 1)` readable.
        Formula::Iff(a, b) => {
            match &**a {
                Formula::Not(_) => operand(f, a, Level::Unary)?,
                _ => parenthesized(f, a)?,
            }
            write!(f, " <-> ")?;
            match &**b {
                Formula::Not(_) => operand(f, b, Level::Unary),
                _ => parenthesized(f, b),
            }
        }
        Formula::Quant(q, vars, body) => {
            write!(f, "{} {}. ", q.keyword(), vars.join(","))?;
            write_formula(f, body, Level::Iff)
        }
    }
}
