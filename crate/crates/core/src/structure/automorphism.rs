use serde::Serialize;

use super::StructureError;
use crate::groups::{automorphisms, Elem, FiniteGroup, Homomorphism, OddPrime};

/// A bijective, operation-preserving self-map, stored as an index map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    mapping: Vec<Elem>,
}

impl Automorphism {
    pub fn identity(group: &FiniteGroup) -> Self {
        Self { mapping: group.elements().collect() }
    }

    /// Wraps an index map after checking that it is an automorphism.
    pub fn new(group: &FiniteGroup, mapping: Vec<Elem>) -> Result<Self, StructureError> {
        if mapping.len() != group.order() || mapping.iter().any(|e| e.index() >= group.order()) {
            return Err(StructureError::NotAutomorphism);
        }
        let hom = Homomorphism::from_generator_images(
            group,
            group,
            &group.generators(),
            &group.generators().iter().map(|g| mapping[g.index()]).collect::<Vec<_>>(),
        )?;
        if hom.map() != mapping.as_slice() || !hom.is_bijective(group) {
            return Err(StructureError::NotAutomorphism);
        }
        Ok(Self { mapping })
    }

    pub(crate) fn from_map_unchecked(mapping: Vec<Elem>) -> Self {
        Self { mapping }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.mapping[x.index()]
    }

    pub fn mapping(&self) -> &[Elem] {
        &self.mapping
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Self { mapping: other.mapping.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, e)| e.index() == i)
    }

    pub fn is_involutive(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.compose(self);
            k += 1;
        }
        k
    }

    /// The `u ∈ [0, exponent)` with `τ(x) = x^u` for all `x`, if any. Every
    /// automorphism of a cyclic group has this form.
    pub fn as_power_map(&self, group: &FiniteGroup) -> Option<u64> {
        let e = group.exponent() as u64;
        (0..e).find(|&u| group.elements().all(|x| group.pow(x, u as i64) == self.apply(x)))
    }
}

/// `τ = ε_p`: inversion on the `p`-part, identity elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeInvolution {
    pub prime: OddPrime,
    /// Position in [`Involutions::automorphisms`].
    pub index: usize,
    /// The unit `u` with `τ(x) = x^u`.
    pub unit: u64,
}

/// `Inv(A) = {τ ∈ Aut(A) : τ² = id}` for abelian `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involutions {
    /// Sorted by unit for cyclic groups, by index map otherwise.
    pub automorphisms: Vec<Automorphism>,
    /// For cyclic `A` these are the power-map exponents of `automorphisms`.
    pub units: Option<Vec<u64>>,
    /// One generator per prime when `|A|` is odd and squarefree and `A` is
    /// cyclic; `Inv(A)` is then the product of these `C_2` factors.
    pub generators: Option<Vec<PrimeInvolution>>,
}

impl Involutions {
    pub fn len(&self) -> usize {
        self.automorphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.automorphisms.is_empty()
    }

    pub fn contains(&self, tau: &Automorphism) -> bool {
        self.automorphisms.contains(tau)
    }

    pub fn position(&self, tau: &Automorphism) -> Option<usize> {
        self.automorphisms.iter().position(|t| t == tau)
    }
}

/// Enumerates `Inv(A)`. Only defined for abelian `A`, where `Aut(A)` being
/// abelian makes it a group.
pub fn involutive_automorphisms(
    group: &FiniteGroup,
    max_nodes: u64,
) -> Result<Involutions, StructureError> {
    if !group.is_abelian() {
        return Err(StructureError::NotAbelian);
    }
    let mut autos: Vec<Automorphism> = automorphisms(group, max_nodes)?
        .into_iter()
        .map(|h| Automorphism::from_map_unchecked(h.map().to_vec()))
        .filter(Automorphism::is_involutive)
        .collect();
    if !group.is_cyclic() {
        autos.sort();
        return Ok(Involutions { automorphisms: autos, units: None, generators: None });
    }
    let mut with_units: Vec<(u64, Automorphism)> = autos
        .into_iter()
        .map(|a| (a.as_power_map(group).expect("automorphisms of cyclic groups are power maps"), a))
        .collect();
    with_units.sort();
    let units: Vec<u64> = with_units.iter().map(|(u, _)| *u).collect();
    let automorphisms: Vec<Automorphism> = with_units.into_iter().map(|(_, a)| a).collect();
    let generators = prime_involution_units(group.order() as u64).map(|pairs| {
        pairs
            .into_iter()
            .map(|(prime, unit)| PrimeInvolution {
                prime,
                index: units.iter().position(|&u| u == unit).expect("ε_p is involutive"),
                unit,
            })
            .collect()
    });
    Ok(Involutions { automorphisms, units: Some(units), generators })
}

/// For odd squarefree `n`, the units `u_p ≡ -1 (mod p)`, `u_p ≡ 1 (mod n/p)`.
fn prime_involution_units(n: u64) -> Option<Vec<(OddPrime, u64)>> {
    if n == 1 {
        return Some(Vec::new());
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return None;
            }
            primes.push(d);
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    primes
        .into_iter()
        .map(|p| {
            let prime = OddPrime::new(u32::try_from(p).ok()?).ok()?;
            let rest = n / p;
            let unit = (0..n).find(|&u| u % p == p - 1 && u % rest == 1 % rest)?;
            Some((prime, unit))
        })
        .collect()
}
