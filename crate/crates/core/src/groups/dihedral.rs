use std::fmt;

use serde::Serialize;

use super::OddPrime;

/// The element `ρ^rotation · ε^reflection` of the dihedral group of order `2p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralElement {
    pub rotation: u32,
    pub reflection: bool,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self { rotation: 0, reflection: false };

    pub fn rotation(k: u32, p: OddPrime) -> Self {
        Self { rotation: k % p.get(), reflection: false }
    }

    /// `ε`.
    pub fn epsilon() -> Self {
        Self { rotation: 0, reflection: true }
    }

    /// `(r₁,s₁)·(r₂,s₂) = (r₁ + (−1)^{s₁} r₂, s₁ ⊕ s₂)`.
    pub fn mul(self, rhs: Self, p: OddPrime) -> Self {
        let p = p.get();
        let r2 = if self.reflection { (p - rhs.rotation) % p } else { rhs.rotation };
        Self {
            rotation: (self.rotation + r2) % p,
            reflection: self.reflection ^ rhs.reflection,
        }
    }

    pub fn inv(self, p: OddPrime) -> Self {
        if self.reflection {
            self
        } else {
            Self { rotation: (p.get() - self.rotation) % p.get(), reflection: false }
        }
    }

    pub(crate) fn to_index(self, p: OddPrime) -> u32 {
        self.rotation + if self.reflection { p.get() } else { 0 }
    }

    pub(crate) fn from_index(index: u32, p: OddPrime) -> Self {
        let p = p.get();
        Self { rotation: index % p, reflection: index >= p }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rotation, self.reflection) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "e"),
            (1, false) => write!(f, "r"),
            (1, true) => write!(f, "re"),
            (k, false) => write!(f, "r^{k}"),
            (k, true) => write!(f, "r^{k}e"),
        }
    }
}
