use std::collections::{BTreeMap, VecDeque};

use super::{subgroup_closure, Elem, FiniteGroup, GroupError};

/// Default node limit for isomorphism searches.
pub const DEFAULT_SEARCH_NODES: u64 = 10_000_000;

/// A homomorphism given by the images of a generating set of its source,
/// together with the full extended map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    generators: Vec<Elem>,
    images: Vec<Elem>,
    map: Vec<Elem>,
}

impl Homomorphism {
    /// Extends `generators[i] ↦ images[i]` to all of `source`. Fails if the
    /// generators do not generate `source` or the assignment is inconsistent.
    pub fn from_generator_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        generators: &[Elem],
        images: &[Elem],
    ) -> Result<Self, GroupError> {
        if generators.len() != images.len() {
            return Err(GroupError::NotHomomorphism(
                "generator and image lists differ in length".into(),
            ));
        }
        let partial = extend(source, target, generators, images).ok_or_else(|| {
            GroupError::NotHomomorphism("generator images violate a relation".into())
        })?;
        let map = partial
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| GroupError::NotHomomorphism("generators do not generate the source".into()))?;
        Ok(Self { generators: generators.to_vec(), images: images.to_vec(), map })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        let generators = group.generators();
        Self { images: generators.clone(), generators, map: group.elements().collect() }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x.index()]
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.map.iter().map(|e| e.index() + 1).max().unwrap_or(0)];
        self.map.iter().all(|e| !std::mem::replace(&mut hit[e.index()], true))
    }

    pub fn is_bijective(&self, target: &FiniteGroup) -> bool {
        self.map.len() == target.order() && self.is_injective()
    }

    /// Exhaustive check of `f(xy) = f(x)f(y)`.
    pub fn verify(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        self.map.len() == source.order()
            && source.elements().all(|x| {
                source
                    .elements()
                    .all(|y| self.apply(source.op(x, y)) == target.op(self.apply(x), self.apply(y)))
            })
    }
}

/// Extends generator images over the subgroup they generate, returning the
/// partial map (`None` outside that subgroup) or `None` on inconsistency.
///
/// Consistency on every edge `x -> x·g` of the Cayley graph is equivalent to
/// the map being a homomorphism on the generated subgroup.
pub(crate) fn extend(
    source: &FiniteGroup,
    target: &FiniteGroup,
    generators: &[Elem],
    images: &[Elem],
) -> Option<Vec<Option<Elem>>> {
    let mut map = vec![None; source.order()];
    map[0] = Some(Elem::IDENTITY);
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x.index()].expect("queued elements are mapped");
        for (&g, &h) in generators.iter().zip(images) {
            let y = source.op(x, g);
            let fy = target.op(fx, h);
            match map[y.index()] {
                None => {
                    map[y.index()] = Some(fy);
                    queue.push_back(y);
                }
                Some(prev) if prev != fy => return None,
                Some(_) => {}
            }
        }
    }
    Some(map)
}

/// Multiset of element orders, as a sorted `order -> count` map.
pub fn order_statistics(group: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut stats = BTreeMap::new();
    for a in group.elements() {
        *stats.entry(group.element_order(a)).or_insert(0) += 1;
    }
    stats
}

/// Searches for an isomorphism `source -> target` by backtracking over images
/// of a generating set of `source`. `Ok(None)` means no isomorphism exists;
/// running out of `max_nodes` is an error.
pub fn find_isomorphism(
    source: &FiniteGroup,
    target: &FiniteGroup,
    max_nodes: u64,
) -> Result<Option<Homomorphism>, GroupError> {
    let mut found = None;
    search(source, target, max_nodes, &mut |hom| {
        found = Some(hom);
        false
    })?;
    Ok(found)
}

/// Every isomorphism `source -> target`, ordered by generator images.
pub fn all_isomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    max_nodes: u64,
) -> Result<Vec<Homomorphism>, GroupError> {
    let mut all = Vec::new();
    search(source, target, max_nodes, &mut |hom| {
        all.push(hom);
        true
    })?;
    Ok(all)
}

/// Automorphisms of `group`.
pub fn automorphisms(group: &FiniteGroup, max_nodes: u64) -> Result<Vec<Homomorphism>, GroupError> {
    all_isomorphisms(group, group, max_nodes)
}

fn search(
    source: &FiniteGroup,
    target: &FiniteGroup,
    max_nodes: u64,
    visit: &mut dyn FnMut(Homomorphism) -> bool,
) -> Result<(), GroupError> {
    if source.order() != target.order() || order_statistics(source) != order_statistics(target) {
        return Ok(());
    }
    let generators = source.greedy_generators();
    let candidates: Vec<Vec<Elem>> = generators
        .iter()
        .map(|&g| {
            let k = source.element_order(g);
            target.elements().filter(|&h| target.element_order(h) == k).collect()
        })
        .collect();
    let spans: Vec<usize> =
        (1..=generators.len()).map(|j| subgroup_closure(source, &generators[..j]).len()).collect();
    let mut state = Search {
        source,
        target,
        generators: &generators,
        candidates: &candidates,
        spans: &spans,
        images: Vec::with_capacity(generators.len()),
        nodes: 0,
        max_nodes,
    };
    state.descend(visit)?;
    Ok(())
}

struct Search<'a> {
    source: &'a FiniteGroup,
    target: &'a FiniteGroup,
    generators: &'a [Elem],
    candidates: &'a [Vec<Elem>],
    spans: &'a [usize],
    images: Vec<Elem>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    /// Returns `Ok(false)` once the visitor asks to stop.
    fn descend(&mut self, visit: &mut dyn FnMut(Homomorphism) -> bool) -> Result<bool, GroupError> {
        let depth = self.images.len();
        if depth == self.generators.len() {
            let hom = Homomorphism::from_generator_images(
                self.source,
                self.target,
                self.generators,
                &self.images,
            )?;
            debug_assert!(hom.is_bijective(self.target) && hom.verify(self.source, self.target));
            return Ok(visit(hom));
        }
        for &h in &self.candidates[depth] {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(GroupError::BudgetExceeded(self.max_nodes));
            }
            self.images.push(h);
            let ok = self.prefix_is_injective_hom(depth + 1);
            if ok && !self.descend(visit)? {
                return Ok(false);
            }
            self.images.pop();
        }
        Ok(true)
    }

    fn prefix_is_injective_hom(&self, len: usize) -> bool {
        let Some(partial) =
            extend(self.source, self.target, &self.generators[..len], &self.images[..len])
        else {
            return false;
        };
        let mut hit = vec![false; self.target.order()];
        let mut count = 0;
        for img in partial.into_iter().flatten() {
            if std::mem::replace(&mut hit[img.index()], true) {
                return false;
            }
            count += 1;
        }
        count == self.spans[len - 1]
    }
}
