use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DihedralElement, GroupError, MultiplicationTable, OddPrime};

/// Index of an element in its group's carrier. Index 0 is always the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A factor of a structured product group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    Cyclic(u32),
    Dihedral(OddPrime),
}

impl Factor {
    pub fn size(self) -> u32 {
        match self {
            Factor::Cyclic(n) => n,
            Factor::Dihedral(p) => 2 * p.get(),
        }
    }

    #[inline]
    fn op(self, a: u32, b: u32) -> u32 {
        match self {
            Factor::Cyclic(n) => (a + b) % n,
            Factor::Dihedral(p) => DihedralElement::from_index(a, p)
                .mul(DihedralElement::from_index(b, p), p)
                .to_index(p),
        }
    }

    #[inline]
    fn inv(self, a: u32) -> u32 {
        match self {
            Factor::Cyclic(n) => (n - a) % n,
            Factor::Dihedral(p) => DihedralElement::from_index(a, p).inv(p).to_index(p),
        }
    }

    fn generators(self) -> Vec<u32> {
        match self {
            Factor::Cyclic(1) => vec![],
            Factor::Cyclic(_) => vec![1],
            Factor::Dihedral(p) => vec![1, p.get()],
        }
    }

    fn component(self, a: u32) -> Component {
        match self {
            Factor::Cyclic(_) => Component::Cyclic(a),
            Factor::Dihedral(p) => Component::Dihedral(DihedralElement::from_index(a, p)),
        }
    }
}

/// One coordinate of a structured product element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Component {
    Cyclic(u32),
    Dihedral(DihedralElement),
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Cyclic(k) => write!(f, "{k}"),
            Component::Dihedral(d) => d.fmt(f),
        }
    }
}

/// Componentwise view of an element of a structured product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProductElement {
    pub components: Vec<Component>,
}

#[derive(Debug, Clone)]
enum Repr {
    /// Mixed-radix encoding over the factors, first factor least significant.
    Structured(Vec<Factor>),
    /// Dense row-major Cayley table.
    Table { table: Vec<u32>, inverse: Vec<u32> },
}

/// A finite group with carrier `{Elem(0), ..., Elem(order - 1)}`.
///
/// Values are immutable once built and can be shared freely between threads.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    repr: Repr,
}

impl FiniteGroup {
    pub fn cyclic(n: u32) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Invalid("cyclic group of order 0".into()));
        }
        Ok(Self::structured(format!("cyclic:{n}"), vec![Factor::Cyclic(n)]))
    }

    pub fn trivial() -> Self {
        Self::structured("cyclic:1".into(), vec![Factor::Cyclic(1)])
    }

    pub fn dihedral(p: OddPrime) -> Self {
        Self::structured(format!("dihedral:{p}"), vec![Factor::Dihedral(p)])
    }

    /// `(Z/2)^k`.
    pub fn klein(k: u32) -> Self {
        Self::structured(format!("klein:{k}"), vec![Factor::Cyclic(2); k as usize])
    }

    /// `∏_{p ∈ primes} D_p`, with components in ascending prime order.
    pub fn dihedral_product(primes: &[OddPrime]) -> Self {
        let mut primes = primes.to_vec();
        primes.sort();
        primes.dedup();
        let name = format!(
            "product({})",
            primes.iter().map(|p| format!("dihedral:{p}")).collect::<Vec<_>>().join(",")
        );
        Self::structured(name, primes.into_iter().map(Factor::Dihedral).collect())
    }

    fn structured(name: String, factors: Vec<Factor>) -> Self {
        let order = factors.iter().map(|f| f.size() as usize).product();
        Self { name, order, repr: Repr::Structured(factors) }
    }

    /// Direct product. Structured factors stay structured; anything else is
    /// materialized as a table.
    pub fn direct_product(groups: &[FiniteGroup]) -> Self {
        let name = format!(
            "product({})",
            groups.iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(",")
        );
        let mut factors = Vec::new();
        for g in groups {
            match &g.repr {
                Repr::Structured(fs) => factors.extend(fs.iter().copied()),
                Repr::Table { .. } => return Self::product_table(name, groups),
            }
        }
        Self::structured(name, factors)
    }

    fn product_table(name: String, groups: &[FiniteGroup]) -> Self {
        let order: usize = groups.iter().map(|g| g.order).product();
        let decode = |mut x: usize| -> Vec<u32> {
            groups
                .iter()
                .map(|g| {
                    let c = x % g.order;
                    x /= g.order;
                    c as u32
                })
                .collect()
        };
        let encode = |cs: &[u32]| -> u32 {
            let mut out = 0usize;
            let mut radix = 1usize;
            for (g, &c) in groups.iter().zip(cs) {
                out += c as usize * radix;
                radix *= g.order;
            }
            out as u32
        };
        let decoded: Vec<Vec<u32>> = (0..order).map(decode).collect();
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let cs: Vec<u32> = groups
                    .iter()
                    .zip(decoded[a].iter().zip(&decoded[b]))
                    .map(|(g, (&x, &y))| g.op(Elem(x), Elem(y)).0)
                    .collect();
                table[a * order + b] = encode(&cs);
            }
        }
        let inverse = (0..order)
            .map(|a| {
                let cs: Vec<u32> =
                    groups.iter().zip(&decoded[a]).map(|(g, &x)| g.inv(Elem(x)).0).collect();
                encode(&cs)
            })
            .collect();
        Self { name, order, repr: Repr::Table { table, inverse } }
    }

    /// Builds a group from a Cayley table after checking every group axiom.
    pub fn from_table(table: &MultiplicationTable) -> Result<Self, GroupError> {
        table.validate()?;
        let order = table.order;
        let flat: Vec<u32> = table.table.iter().flatten().copied().collect();
        Ok(Self::from_flat_table("table".into(), order, flat))
    }

    /// Trusted constructor for tables produced by this crate's own algorithms.
    pub(crate) fn from_flat_table(name: String, order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverse[a] = row.iter().position(|&x| x == 0).expect("every row has the identity") as u32;
        }
        Self { name, order, repr: Repr::Table { table, inverse } }
    }

    /// Materializes a subgroup as a standalone table group. Returns the group
    /// and the embedding `local index -> parent element`.
    pub fn subgroup_as_group(&self, members: &[Elem]) -> (FiniteGroup, Vec<Elem>) {
        let mut embedding = members.to_vec();
        embedding.sort();
        embedding.dedup();
        debug_assert_eq!(embedding.first(), Some(&Elem::IDENTITY));
        let mut local = vec![u32::MAX; self.order];
        for (i, e) in embedding.iter().enumerate() {
            local[e.index()] = i as u32;
        }
        let n = embedding.len();
        let mut table = vec![0u32; n * n];
        for (i, &a) in embedding.iter().enumerate() {
            for (j, &b) in embedding.iter().enumerate() {
                let c = local[self.op(a, b).index()];
                assert!(c != u32::MAX, "element set is not closed");
                table[i * n + j] = c;
            }
        }
        let name = format!("subgroup[{n}] of {}", self.name);
        (Self::from_flat_table(name, n, table), embedding)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u32).map(Elem)
    }

    /// The structured factors, if this group is a structured product.
    pub fn factors(&self) -> Option<&[Factor]> {
        match &self.repr {
            Repr::Structured(fs) => Some(fs),
            Repr::Table { .. } => None,
        }
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table { table, .. } => Elem(table[a.index() * self.order + b.index()]),
            Repr::Structured(factors) => {
                let (mut a, mut b) = (a.0, b.0);
                let mut out = 0;
                let mut radix = 1;
                for f in factors {
                    let n = f.size();
                    out += f.op(a % n, b % n) * radix;
                    a /= n;
                    b /= n;
                    radix *= n;
                }
                Elem(out)
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        match &self.repr {
            Repr::Table { inverse, .. } => Elem(inverse[a.index()]),
            Repr::Structured(factors) => {
                let mut a = a.0;
                let mut out = 0;
                let mut radix = 1;
                for f in factors {
                    let n = f.size();
                    out += f.inv(a % n) * radix;
                    a /= n;
                    radix *= n;
                }
                Elem(out)
            }
        }
    }

    /// `a·b·a⁻¹·b⁻¹`.
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.op(a, b);
        let ab_ai = self.op(ab, self.inv(a));
        self.op(ab_ai, self.inv(b))
    }

    /// `g·x·g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.op(self.op(g, x), self.inv(g))
    }

    pub fn pow(&self, a: Elem, exponent: i64) -> Elem {
        let base = if exponent < 0 { self.inv(a) } else { a };
        let mut e = exponent.unsigned_abs();
        let mut acc = Elem::IDENTITY;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.op(acc, sq);
            }
            sq = self.op(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != Elem::IDENTITY {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.op(a, b) == self.op(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.commutes(a, b)))
    }

    /// Whether some element has order equal to the group order.
    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|a| self.element_order(a) == self.order)
    }

    /// A deterministic generating set. Structured groups use the standard
    /// generators of each factor (`1` for cyclic factors, `ρ` then `ε` for
    /// dihedral ones); table groups use a greedy set built from elements of
    /// largest order.
    pub fn generators(&self) -> Vec<Elem> {
        match &self.repr {
            Repr::Structured(factors) => {
                let mut gens = Vec::new();
                let mut radix = 1;
                for f in factors {
                    gens.extend(f.generators().into_iter().map(|g| Elem(g * radix)));
                    radix *= f.size();
                }
                gens
            }
            Repr::Table { .. } => self.greedy_generators(),
        }
    }

    /// Few generators, preferring elements of large order.
    pub fn greedy_generators(&self) -> Vec<Elem> {
        let mut by_order: Vec<(usize, Elem)> =
            self.elements().skip(1).map(|a| (self.element_order(a), a)).collect();
        by_order.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let mut gens = Vec::new();
        let mut span = super::subgroup_closure(self, &[]);
        for (_, a) in by_order {
            if span.len() == self.order {
                break;
            }
            if !span.contains(a) {
                gens.push(a);
                span = super::subgroup_closure(self, &gens);
            }
        }
        gens
    }

    pub fn components(&self, a: Elem) -> Option<ProductElement> {
        let factors = self.factors()?;
        let mut x = a.0;
        let components = factors
            .iter()
            .map(|f| {
                let c = f.component(x % f.size());
                x /= f.size();
                c
            })
            .collect();
        Some(ProductElement { components })
    }

    /// Inverse of [`FiniteGroup::components`].
    pub fn from_components(&self, element: &ProductElement) -> Option<Elem> {
        let factors = self.factors()?;
        if factors.len() != element.components.len() {
            return None;
        }
        let mut out = 0;
        let mut radix = 1;
        for (f, c) in factors.iter().zip(&element.components) {
            let local = match (f, c) {
                (Factor::Cyclic(n), Component::Cyclic(k)) if k < n => *k,
                (Factor::Dihedral(p), Component::Dihedral(d)) if d.rotation < p.get() => {
                    d.to_index(*p)
                }
                _ => return None,
            };
            out += local * radix;
            radix *= f.size();
        }
        Some(Elem(out))
    }

    /// Human-readable element name used in reports.
    pub fn label(&self, a: Elem) -> String {
        match self.components(a) {
            Some(pe) if pe.components.len() == 1 => pe.components[0].to_string(),
            Some(pe) => format!(
                "({})",
                pe.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            ),
            None => a.to_string(),
        }
    }

    /// Checks closure, identity, inverses and associativity. Exhaustive up to
    /// order 1000, sampled above.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        super::table::check_group_axioms(self.order, super::table::SAMPLING_SEED, |a, b| self.op(Elem(a), Elem(b)).0)
    }
}

impl PartialEq for FiniteGroup {
    /// Equality of carriers and operations, ignoring names.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self
                .elements()
                .all(|a| self.elements().all(|b| self.op(a, b) == other.op(a, b)))
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
