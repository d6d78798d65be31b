use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GroupError;

/// Largest order for which associativity is checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 1000;
/// Number of random triples checked above the exhaustive limit.
pub const SAMPLED_TRIPLES: usize = 100_000;
/// Seed for the sampled associativity check used by [`MultiplicationTable::validate`].
pub const SAMPLING_SEED: u64 = 0x5eed_cafe;

/// On-disk multiplication table: `table[a][b]` is the 0-based index of `a·b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicationTable {
    pub order: usize,
    pub table: Vec<Vec<u32>>,
}

impl MultiplicationTable {
    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::MalformedTable(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        self.validate_with_seed(SAMPLING_SEED)
    }

    /// Like [`validate`](Self::validate), drawing sampled triples from `seed`.
    pub fn validate_with_seed(&self, seed: u64) -> Result<(), GroupError> {
        let n = self.order;
        if n == 0 {
            return Err(GroupError::MalformedTable("order must be positive".into()));
        }
        if self.table.len() != n {
            return Err(GroupError::MalformedTable(format!(
                "expected {n} rows, found {}",
                self.table.len()
            )));
        }
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        check_group_axioms(n, seed, |a, b| self.table[a as usize][b as usize])
    }
}

/// Checks the group axioms for a binary operation on `0..order` in which 0
/// must be the identity.
pub(crate) fn check_group_axioms(
    order: usize,
    seed: u64,
    op: impl Fn(u32, u32) -> u32,
) -> Result<(), GroupError> {
    let n = order as u32;
    for a in 0..n {
        for b in 0..n {
            let c = op(a, b);
            if c >= n {
                return Err(GroupError::AxiomViolation {
                    axiom: "closure",
                    detail: format!("{a}*{b} = {c} is not an element index"),
                });
            }
        }
    }
    for a in 0..n {
        if op(0, a) != a || op(a, 0) != a {
            return Err(GroupError::AxiomViolation {
                axiom: "identity",
                detail: format!("element 0 does not act as identity on {a}"),
            });
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| op(a, b) == 0 && op(b, a) == 0) {
            return Err(GroupError::AxiomViolation {
                axiom: "inverse",
                detail: format!("element {a} has no two-sided inverse"),
            });
        }
    }
    let assoc = |a: u32, b: u32, c: u32| -> Result<(), GroupError> {
        if op(op(a, b), c) != op(a, op(b, c)) {
            Err(GroupError::AxiomViolation {
                axiom: "associativity",
                detail: format!("({a}*{b})*{c} != {a}*({b}*{c})"),
            })
        } else {
            Ok(())
        }
    };
    if order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assoc(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_TRIPLES {
            assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
    }
    Ok(())
}
