use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{Elem, FiniteGroup, GroupError};

/// A set of elements of one group, kept sorted by index with an O(1)
/// membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl ElemSet {
    pub fn new(group_order: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = vec![false; group_order];
        for e in elems {
            mask[e.index()] = true;
        }
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| Elem(i as u32))
            .collect();
        Self { members, mask }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self::new(group.order(), group.elements())
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.mask.get(e.index()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.members
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }
}

impl Serialize for ElemSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_closure(group: &FiniteGroup, gens: &[Elem]) -> ElemSet {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.op(x, g);
            if !seen[y.index()] {
                seen[y.index()] = true;
                queue.push_back(y);
            }
        }
    }
    ElemSet::new(group.order(), (0..group.order()).filter(|&i| seen[i]).map(|i| Elem(i as u32)))
}

/// Whether a nonempty finite subset is closed under the operation (which
/// makes it a subgroup).
pub fn is_subgroup(group: &FiniteGroup, set: &ElemSet) -> bool {
    set.contains(Elem::IDENTITY)
        && set.iter().all(|a| set.iter().all(|b| set.contains(group.op(a, b))))
}

/// `gHg⁻¹ = H` for every `g`. It suffices to check generators of `G`.
pub fn is_normal(group: &FiniteGroup, subgroup: &ElemSet) -> Result<bool, GroupError> {
    if !is_subgroup(group, subgroup) {
        return Err(GroupError::NotSubgroup);
    }
    let gens = group.generators();
    Ok(gens
        .iter()
        .all(|&g| subgroup.iter().all(|h| subgroup.contains(group.conjugate(g, h)))))
}

/// All subgroups of order `m`, sorted by their element lists. Brute force:
/// grows subgroups one generator at a time, visiting only those whose order
/// divides `m`. `budget` caps the number of closures computed.
pub fn enumerate_subgroups_of_order(
    group: &FiniteGroup,
    m: usize,
    budget: u64,
) -> Result<Vec<ElemSet>, GroupError> {
    let n = group.order();
    if m == 0 || !n.is_multiple_of(m) {
        return Err(GroupError::OrderNotDivisor(m, n));
    }
    let mut spent = 0u64;
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let trivial = subgroup_closure(group, &[]);
    let mut frontier = vec![trivial.clone()];
    seen.insert(trivial.as_slice().to_vec());
    let mut found = BTreeSet::new();
    if m == 1 {
        found.insert(trivial.as_slice().to_vec());
    }
    while let Some(h) = frontier.pop() {
        if h.len() == m {
            continue;
        }
        for g in group.elements().filter(|&g| !h.contains(g)) {
            spent += 1;
            if spent > budget {
                return Err(GroupError::BudgetExceeded(budget));
            }
            let mut gens: Vec<Elem> = h.iter().collect();
            gens.push(g);
            let k = subgroup_closure(group, &gens);
            if !m.is_multiple_of(k.len()) || !seen.insert(k.as_slice().to_vec()) {
                continue;
            }
            if k.len() == m {
                found.insert(k.as_slice().to_vec());
            }
            frontier.push(k);
        }
    }
    Ok(found.into_iter().map(|v| ElemSet::new(n, v)).collect())
}
