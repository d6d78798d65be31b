//! The first-order language of groups over the signature `{·, ⁻¹, 1}` with
//! equality: syntax tree, concrete syntax, and a model checker for finite
//! groups.
//!
//! Concrete syntax:
//!
//! ```text
//! formula := quant | iff
//! quant   := ("forall" | "exists") var ("," var)* "." formula
//! iff     := implies ("<->" implies)*
//! implies := or ("->" implies)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | quant | "(" formula ")" | term ("=" | "!=") term
//! term    := power ("*" power)*
//! power   := primary ("^" "-"? int)?
//! primary := "1" | var | "(" term ")" | "[" term "," term "]"
//! var     := [a-z][a-z0-9_]*
//! ```

mod ast;
mod eval;
mod parser;
mod print;

pub use ast::{rename_shadowed, Formula, Quantifier, Term};
pub(crate) use ast::fresh_name;
pub use eval::{evaluate, evaluate_counted, Assignment, Budget, EvalError};
pub use parser::{parse, parse_sentence, parse_term, ParseError};
