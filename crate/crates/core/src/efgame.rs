//! Ehrenfeucht–Fraïssé games on finite groups.
//!
//! Atomic formulas in the language of groups are equations between terms, so
//! a position `(ḡ, h̄)` is winning-so-far for Duplicator iff `gᵢ ↦ hᵢ`
//! extends to an isomorphism `⟨ḡ⟩ → ⟨h̄⟩`. Positions are stored as the full
//! graph of that isomorphism, sorted by first coordinate: two tuples with
//! the same graph have the same future.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::groups::{Elem, FiniteGroup};

pub const DEFAULT_MAX_ORDER: usize = 64;
pub const DEFAULT_MAX_RANK: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EfConfig {
    pub max_order: usize,
    pub max_rank: usize,
    /// Upper bound on distinct positions evaluated.
    pub max_positions: u64,
}

impl Default for EfConfig {
    fn default() -> Self {
        Self { max_order: DEFAULT_MAX_ORDER, max_rank: DEFAULT_MAX_RANK, max_positions: 50_000_000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EfError {
    #[error("group order {order} exceeds the bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("rank {rank} exceeds the bound {bound}")]
    RankTooLarge { rank: usize, bound: usize },
    #[error("position budget of {0} exceeded")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EfOutcome {
    pub equivalent: bool,
    pub positions_explored: u64,
}

/// Whether `g` and `h` satisfy the same sentences of quantifier rank at most
/// `rank`, under the default bounds.
pub fn ef_equivalent(g: &FiniteGroup, h: &FiniteGroup, rank: usize) -> Result<bool, EfError> {
    ef_game(g, h, rank, &EfConfig::default()).map(|o| o.equivalent)
}

pub fn ef_game(
    g: &FiniteGroup,
    h: &FiniteGroup,
    rank: usize,
    config: &EfConfig,
) -> Result<EfOutcome, EfError> {
    for order in [g.order(), h.order()] {
        if order > config.max_order {
            return Err(EfError::OrderTooLarge { order, bound: config.max_order });
        }
    }
    if rank > config.max_rank {
        return Err(EfError::RankTooLarge { rank, bound: config.max_rank });
    }
    let mut game = Game { g, h, memo: HashMap::new(), budget: config.max_positions };
    let start = vec![(0, 0)];
    let equivalent = game.duplicator_wins(&start, rank)?;
    Ok(EfOutcome { equivalent, positions_explored: game.memo.len() as u64 })
}

type Position = Vec<(u32, u32)>;

struct Game<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    memo: HashMap<(Position, usize), bool>,
    budget: u64,
}

impl Game<'_> {
    fn duplicator_wins(&mut self, pos: &Position, rounds: usize) -> Result<bool, EfError> {
        if rounds == 0 {
            return Ok(true);
        }
        let key = (pos.clone(), rounds);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        if self.memo.len() as u64 >= self.budget {
            return Err(EfError::BudgetExceeded(self.budget));
        }

        let mut in_dom = vec![false; self.g.order()];
        let mut in_img = vec![false; self.h.order()];
        for &(a, b) in pos {
            in_dom[a as usize] = true;
            in_img[b as usize] = true;
        }

        let mut result = true;
        'spoiler: for side in [Side::Left, Side::Right] {
            let (own, other) = match side {
                Side::Left => (&in_dom, &in_img),
                Side::Right => (&in_img, &in_dom),
            };
            for x in 0..own.len() as u32 {
                if own[x as usize] {
                    continue;
                }
                let mut answered = false;
                for y in 0..other.len() as u32 {
                    if other[y as usize] {
                        continue;
                    }
                    let (a, b) = match side {
                        Side::Left => (x, y),
                        Side::Right => (y, x),
                    };
                    if let Some(next) = extend(self.g, self.h, pos, a, b) {
                        if self.duplicator_wins(&next, rounds - 1)? {
                            answered = true;
                            break;
                        }
                    }
                }
                if !answered {
                    result = false;
                    break 'spoiler;
                }
            }
        }
        self.memo.insert(key, result);
        Ok(result)
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Graph of the isomorphism `⟨dom(pos), a⟩ → ⟨img(pos), b⟩` extending `pos`
/// with `a ↦ b`, if there is one.
fn extend(g: &FiniteGroup, h: &FiniteGroup, pos: &Position, a: u32, b: u32) -> Option<Position> {
    const NONE: u32 = u32::MAX;
    let mut fwd = vec![NONE; g.order()];
    let mut back = vec![NONE; h.order()];
    let mut gens: Vec<(Elem, Elem)> = vec![(Elem(a), Elem(b))];
    let mut queue: Vec<(Elem, Elem)> = Vec::with_capacity(g.order());
    for &(x, y) in pos {
        fwd[x as usize] = y;
        back[y as usize] = x;
        queue.push((Elem(x), Elem(y)));
        if x != 0 {
            gens.push((Elem(x), Elem(y)));
        }
    }
    // Every edge x -> x·s must be respected; right multiplication by the
    // generators from every reached element covers the whole subgroup.
    let mut head = 0;
    while head < queue.len() {
        let (x, y) = queue[head];
        head += 1;
        for &(s, t) in &gens {
            let (xs, yt) = (g.op(x, s), h.op(y, t));
            match (fwd[xs.index()], back[yt.index()]) {
                (NONE, NONE) => {
                    fwd[xs.index()] = yt.0;
                    back[yt.index()] = xs.0;
                    queue.push((xs, yt));
                }
                (img, pre) if img == yt.0 && pre == xs.0 => {}
                _ => return None,
            }
        }
    }
    let mut graph: Position =
        fwd.iter().enumerate().filter(|(_, &y)| y != NONE).map(|(x, &y)| (x as u32, y)).collect();
    graph.sort_unstable();
    Some(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::OddPrime;

    fn d3() -> FiniteGroup {
        FiniteGroup::dihedral(OddPrime::new(3).unwrap())
    }

    fn cyc(n: u32) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn d3_vs_c6() {
        assert!(ef_equivalent(&d3(), &cyc(6), 0).unwrap());
        // C6 has an element of order 6, D3 does not.
        assert!(!ef_equivalent(&d3(), &cyc(6), 1).unwrap());
        assert!(!ef_equivalent(&d3(), &cyc(6), 2).unwrap());
    }

    #[test]
    fn isomorphic_groups() {
        let c3xc5 = FiniteGroup::direct_product(&[cyc(3), cyc(5)]);
        for k in 0..=4 {
            assert!(ef_equivalent(&cyc(15), &c3xc5, k).unwrap(), "rank {k}");
        }
    }

    #[test]
    fn element_orders_and_rank() {
        // A single element already sees its own order.
        assert!(!ef_equivalent(&cyc(5), &cyc(7), 1).unwrap());
        // Every non-identity element of C3 and of C3 x C3 has order 3, but only
        // the latter has two independent ones.
        let c3xc3 = FiniteGroup::direct_product(&[cyc(3), cyc(3)]);
        assert!(ef_equivalent(&cyc(3), &c3xc3, 1).unwrap());
        assert!(!ef_equivalent(&cyc(3), &c3xc3, 2).unwrap());
    }

    #[test]
    fn extend_rejects_order_mismatch() {
        let (g, h) = (cyc(6), cyc(6));
        assert!(extend(&g, &h, &vec![(0, 0)], 1, 2).is_none());
        let graph = extend(&g, &h, &vec![(0, 0)], 1, 5).unwrap();
        assert_eq!(graph.len(), 6);
        assert_eq!(graph[2], (2, 4));
    }

    #[test]
    fn bounds() {
        let big = cyc(65);
        assert_eq!(
            ef_equivalent(&big, &cyc(5), 1),
            Err(EfError::OrderTooLarge { order: 65, bound: 64 })
        );
        assert_eq!(
            ef_equivalent(&cyc(5), &cyc(5), 5),
            Err(EfError::RankTooLarge { rank: 5, bound: 4 })
        );
        let tight = EfConfig { max_positions: 1, ..EfConfig::default() };
        assert_eq!(ef_game(&cyc(3), &FiniteGroup::direct_product(&[cyc(3), cyc(3)]), 2, &tight), Err(EfError::BudgetExceeded(1)));
    }
}
