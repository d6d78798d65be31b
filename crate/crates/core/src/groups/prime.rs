use std::fmt;

use serde::Serialize;

use super::GroupError;

/// An odd prime, validated by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct OddPrime(u32);

impl OddPrime {
    pub fn new(value: u32) -> Result<Self, GroupError> {
        if value >= 3 && value % 2 == 1 && is_prime(value) {
            Ok(Self(value))
        } else {
            Err(GroupError::NotOddPrime(u64::from(value)))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u32> for OddPrime {
    type Error = GroupError;

    fn try_from(value: u32) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a list of odd primes and returns it sorted ascending without
/// duplicates, the canonical component order for products.
pub fn canonical_primes(values: &[u32]) -> Result<Vec<OddPrime>, GroupError> {
    let mut primes = values
        .iter()
        .map(|&v| OddPrime::new(v))
        .collect::<Result<Vec<_>, _>>()?;
    primes.sort();
    primes.dedup();
    Ok(primes)
}
