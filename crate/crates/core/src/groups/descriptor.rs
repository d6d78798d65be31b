use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    canonical_primes, Elem, FiniteGroup, GroupError, Homomorphism, MultiplicationTable, OddPrime,
};

/// How one complement generator acts on the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AutomorphismSpec {
    /// `x ↦ x^u`; an automorphism of any abelian kernel whose exponent is
    /// coprime to `u`.
    Unit(i64),
    /// A 0/1 matrix over `(Z/2)^k`; column `j` is the image of basis vector `j`.
    Matrix(Vec<Vec<u8>>),
}

/// Images of the complement's standard generators, in
/// [`FiniteGroup::generators`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub generator_images: Vec<AutomorphismSpec>,
}

/// Declarative recipe for a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(u32),
    Dihedral(u32),
    Klein(u32),
    Product(Vec<GroupDescriptor>),
    Semidirect {
        kernel: Box<GroupDescriptor>,
        complement: Box<GroupDescriptor>,
        action: ActionSpec,
    },
    Table(MultiplicationTable),
}

impl GroupDescriptor {
    /// `product(dihedral:p, ...)` over the sorted, deduplicated primes.
    pub fn dihedral_product(primes: &[OddPrime]) -> Self {
        let mut ps = primes.to_vec();
        ps.sort();
        ps.dedup();
        GroupDescriptor::Product(ps.into_iter().map(|p| GroupDescriptor::Dihedral(p.get())).collect())
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupDescriptor::Dihedral(p) => write!(f, "dihedral:{p}"),
            GroupDescriptor::Klein(k) => write!(f, "klein:{k}"),
            GroupDescriptor::Product(parts) => {
                write!(f, "product(")?;
                for (i, d) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
            GroupDescriptor::Semidirect { kernel, complement, action } => {
                let action = serde_json::to_string(&action.generator_images).map_err(|_| fmt::Error)?;
                write!(f, "semidirect({kernel},{complement},action={action})")
            }
            GroupDescriptor::Table(t) => write!(f, "table[{}]", t.order),
        }
    }
}

/// Builds the group a descriptor denotes.
pub fn build_group(descriptor: &GroupDescriptor) -> Result<FiniteGroup, GroupError> {
    let group = match descriptor {
        GroupDescriptor::Cyclic(n) => FiniteGroup::cyclic(*n)?,
        GroupDescriptor::Dihedral(p) => FiniteGroup::dihedral(OddPrime::new(*p)?),
        GroupDescriptor::Klein(k) => FiniteGroup::klein(*k),
        GroupDescriptor::Product(parts) => {
            let all_dihedral: Option<Vec<u32>> = parts
                .iter()
                .map(|d| match d {
                    GroupDescriptor::Dihedral(p) => Some(*p),
                    _ => None,
                })
                .collect();
            match all_dihedral {
                // Keep the canonical ascending component order for G_S.
                Some(ps) if !ps.is_empty() => {
                    let primes = canonical_primes(&ps)?;
                    if primes.len() != ps.len() {
                        // Repeated primes: a genuine product with repeated factors.
                        let groups = parts.iter().map(build_group).collect::<Result<Vec<_>, _>>()?;
                        FiniteGroup::direct_product(&groups)
                    } else {
                        FiniteGroup::dihedral_product(&primes)
                    }
                }
                _ => {
                    let groups = parts.iter().map(build_group).collect::<Result<Vec<_>, _>>()?;
                    FiniteGroup::direct_product(&groups)
                }
            }
        }
        GroupDescriptor::Semidirect { kernel, complement, action } => {
            let kernel = build_group(kernel)?;
            let complement = build_group(complement)?;
            let maps = action
                .generator_images
                .iter()
                .map(|spec| automorphism_from_spec(&kernel, spec))
                .collect::<Result<Vec<_>, _>>()?;
            semidirect_product(&kernel, &complement, &maps)?
        }
        GroupDescriptor::Table(t) => FiniteGroup::from_table(t)?,
    };
    Ok(group.with_name(descriptor.to_string()))
}

/// Turns an [`AutomorphismSpec`] into an index map on `kernel`. The result
/// is validated later by [`semidirect_product`].
pub fn automorphism_from_spec(
    kernel: &FiniteGroup,
    spec: &AutomorphismSpec,
) -> Result<Vec<Elem>, GroupError> {
    match spec {
        AutomorphismSpec::Unit(u) => Ok(kernel.elements().map(|x| kernel.pow(x, *u)).collect()),
        AutomorphismSpec::Matrix(m) => {
            let k = m.len();
            let is_klein = kernel
                .factors()
                .map(|fs| fs.len() == k && fs.iter().all(|f| f.size() == 2))
                .unwrap_or(false);
            if !is_klein {
                return Err(GroupError::InvalidAction(format!(
                    "a {k}x{k} matrix action needs a klein:{k} kernel"
                )));
            }
            if m.iter().any(|row| row.len() != k || row.iter().any(|&b| b > 1)) {
                return Err(GroupError::InvalidAction(format!("matrix must be {k}x{k} over {{0,1}}")));
            }
            Ok(kernel
                .elements()
                .map(|x| {
                    let image = (0..k).fold(0u32, |acc, i| {
                        let bit = (0..k).fold(0u8, |b, j| b ^ (m[i][j] & ((x.0 >> j) & 1) as u8));
                        acc | (u32::from(bit) << i)
                    });
                    Elem(image)
                })
                .collect())
        }
    }
}

/// `kernel ⋊ complement` where `actions[i]` is the automorphism of `kernel`
/// induced by the `i`-th standard generator of `complement`.
///
/// Element `(a, h)` has index `a + |kernel|·h` and
/// `(a₁,h₁)(a₂,h₂) = (a₁·φ_{h₁}(a₂), h₁h₂)`.
pub fn semidirect_product(
    kernel: &FiniteGroup,
    complement: &FiniteGroup,
    actions: &[Vec<Elem>],
) -> Result<FiniteGroup, GroupError> {
    if !kernel.is_abelian() {
        return Err(GroupError::NonAbelianKernel);
    }
    let gens = complement.generators();
    if actions.len() != gens.len() {
        return Err(GroupError::InvalidAction(format!(
            "complement has {} generators but {} images were given",
            gens.len(),
            actions.len()
        )));
    }
    for (i, map) in actions.iter().enumerate() {
        if !is_automorphism(kernel, map) {
            return Err(GroupError::InvalidAction(format!(
                "image of generator {i} is not an automorphism of the kernel"
            )));
        }
    }
    let phi = extend_action(kernel, complement, &gens, actions)?;

    let (na, nh) = (kernel.order(), complement.order());
    let n = na * nh;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (a1, h1) = (Elem((x % na) as u32), Elem((x / na) as u32));
        let act = &phi[h1.index()];
        for y in 0..n {
            let (a2, h2) = (Elem((y % na) as u32), Elem((y / na) as u32));
            let a = kernel.op(a1, act[a2.index()]);
            let h = complement.op(h1, h2);
            table[x * n + y] = (a.index() + na * h.index()) as u32;
        }
    }
    let name = format!("semidirect({},{})", kernel.name(), complement.name());
    Ok(FiniteGroup::from_flat_table(name, n, table))
}

fn is_automorphism(group: &FiniteGroup, map: &[Elem]) -> bool {
    if map.len() != group.order() || map.iter().any(|e| e.index() >= group.order()) {
        return false;
    }
    let mut hit = vec![false; group.order()];
    if map.iter().any(|e| std::mem::replace(&mut hit[e.index()], true)) {
        return false;
    }
    group
        .elements()
        .all(|x| group.elements().all(|y| map[group.op(x, y).index()] == group.op(map[x.index()], map[y.index()])))
}

/// Extends generator actions to a homomorphism `complement -> Aut(kernel)`,
/// returned as one index map per complement element.
fn extend_action(
    kernel: &FiniteGroup,
    complement: &FiniteGroup,
    gens: &[Elem],
    actions: &[Vec<Elem>],
) -> Result<Vec<Vec<Elem>>, GroupError> {
    let mut phi: Vec<Option<Vec<Elem>>> = vec![None; complement.order()];
    phi[0] = Some(kernel.elements().collect());
    let mut queue = std::collections::VecDeque::from([Elem::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        let fx = phi[x.index()].clone().expect("queued");
        for (&g, act) in gens.iter().zip(actions) {
            let y = complement.op(x, g);
            // φ(xg) = φ(x) ∘ φ(g)
            let fy: Vec<Elem> = act.iter().map(|a| fx[a.index()]).collect();
            match &phi[y.index()] {
                None => {
                    phi[y.index()] = Some(fy);
                    queue.push_back(y);
                }
                Some(prev) if *prev != fy => {
                    return Err(GroupError::InvalidAction(
                        "generator images do not define a homomorphism into Aut(kernel)".into(),
                    ))
                }
                Some(_) => {}
            }
        }
    }
    phi.into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| GroupError::InvalidAction("complement generators do not generate".into()))
}

/// Embeddings `kernel -> kernel ⋊ complement` and `complement -> kernel ⋊ complement`.
pub fn semidirect_embeddings(
    kernel: &FiniteGroup,
    complement: &FiniteGroup,
) -> (Vec<Elem>, Vec<Elem>) {
    let na = kernel.order() as u32;
    (
        kernel.elements().collect(),
        complement.elements().map(|h| Elem(h.0 * na)).collect(),
    )
}

/// Checks that an index map is a homomorphism between the given groups.
pub fn is_homomorphism(source: &FiniteGroup, target: &FiniteGroup, map: &[Elem]) -> bool {
    let hom = Homomorphism::from_generator_images(
        source,
        target,
        &source.generators(),
        &source.generators().iter().map(|g| map[g.index()]).collect::<Vec<_>>(),
    );
    matches!(hom, Ok(h) if h.map() == map)
}
