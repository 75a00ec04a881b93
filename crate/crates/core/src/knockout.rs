//! Knockout dynamic programming over candidate subsets of a tournament.
//!
//! `winners(S)` is the set of candidates that win at least one agenda over
//! `S`; with `balanced` set, only balanced agendas count. A tree is split at
//! its root into two subtrees that are chosen independently, and for balanced
//! trees the admissible split sizes depend only on the subtree sizes, so the
//! recursion is exact. Cost is O(3^m); callers bound it with a work limit.

use std::collections::{BTreeSet, HashMap};

use crate::agenda::{balanced_split, Agenda, Node};
use crate::error::{Error, Result};
use crate::majority::Tournament;

/// Tournaments handled by the bitmask routines have at most this many
/// candidates.
pub const MAX_MASK_CANDIDATES: usize = 64;

pub(crate) fn full_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

pub(crate) fn mask_to_set(mask: u64) -> BTreeSet<usize> {
    (0..64).filter(|&i| mask & (1 << i) != 0).collect()
}

pub(crate) struct Knockout<'a> {
    beats: &'a [u64],
    balanced: bool,
    memo: HashMap<u64, u64>,
    work: u64,
    limit: u64,
}

impl<'a> Knockout<'a> {
    pub(crate) fn new(beats: &'a [u64], balanced: bool, limit: u64) -> Self {
        Knockout {
            beats,
            balanced,
            memo: HashMap::new(),
            work: 0,
            limit,
        }
    }

    pub(crate) fn work(&self) -> u64 {
        self.work
    }

    fn splits(&self, set: u64) -> impl Iterator<Item = (u64, u64)> + '_ {
        let low = set & set.wrapping_neg();
        let rest = set ^ low;
        let mut right = rest;
        std::iter::from_fn(move || {
            while right != 0 {
                let r = right;
                right = (right - 1) & rest;
                let l = set ^ r;
                if !self.balanced
                    || balanced_split(l.count_ones() as usize, r.count_ones() as usize)
                {
                    return Some((l, r));
                }
            }
            None
        })
    }

    /// Bit mask of candidates winning some (balanced) agenda over `set`.
    pub(crate) fn winners(&mut self, set: u64) -> Result<u64> {
        if set.count_ones() == 1 {
            return Ok(set);
        }
        if let Some(&w) = self.memo.get(&set) {
            return Ok(w);
        }
        let mut out = 0u64;
        let splits: Vec<(u64, u64)> = self.splits(set).collect();
        for (l, r) in splits {
            self.work += 1;
            if self.work > self.limit {
                return Err(Error::BudgetExceeded { budget: self.limit });
            }
            let wl = self.winners(l)?;
            let wr = self.winners(r)?;
            out |= self.survivors(wl, wr) | self.survivors(wr, wl);
            if out == set {
                break;
            }
        }
        self.memo.insert(set, out);
        Ok(out)
    }

    /// Members of `from` beating at least one member of `against`.
    fn survivors(&self, from: u64, against: u64) -> u64 {
        let mut out = 0;
        let mut rest = from;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.beats[x] & against != 0 {
                out |= 1 << x;
            }
        }
        out
    }

    /// A canonical agenda over `set` won by `target`, if one exists.
    pub(crate) fn witness(&mut self, set: u64, target: usize) -> Result<Option<Node>> {
        let bit = 1u64 << target;
        if set.count_ones() == 1 {
            return Ok((set == bit).then_some(Node::Leaf(target)));
        }
        if self.winners(set)? & bit == 0 {
            return Ok(None);
        }
        let splits: Vec<(u64, u64)> = self.splits(set).collect();
        for (l, r) in splits {
            let (own, other) = if l & bit != 0 { (l, r) } else { (r, l) };
            if self.winners(own)? & bit == 0 {
                continue;
            }
            let beaten = self.winners(other)? & self.beats[target];
            if beaten == 0 {
                continue;
            }
            let opponent = beaten.trailing_zeros() as usize;
            let a = self.witness(own, target)?.expect("target wins its side");
            let b = self.witness(other, opponent)?.expect("opponent wins its side");
            return Ok(Some(if own == l { Node::pair(a, b) } else { Node::pair(b, a) }));
        }
        unreachable!("winner without a witnessing split")
    }
}

/// Candidates reaching every other candidate along arcs of the digraph
/// `arcs` (row `x` has bit `y` for an arc `x -> y`). Requires that every
/// pair is joined by at least one arc; then the strongly connected
/// components form a chain and a vertex of maximum out-degree lies in the
/// top one, so the answer is everything that reaches that vertex.
pub(crate) fn dominant_set(arcs: &[u64]) -> u64 {
    let m = arcs.len();
    if m == 0 {
        return 0;
    }
    let hub = (0..m)
        .max_by_key(|&x| (arcs[x].count_ones(), std::cmp::Reverse(x)))
        .expect("non-empty");
    let mut reached = 1u64 << hub;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        for (x, &row) in arcs.iter().enumerate() {
            if reached & (1 << x) == 0 && row & frontier != 0 {
                next |= 1 << x;
            }
        }
        reached |= next;
        frontier = next;
    }
    reached
}

/// Agenda won by `target` in the tournament `beats`, built from a
/// breadth-first tree of `target`'s victories. `None` if `target` is outside
/// the top cycle.
pub(crate) fn dominance_agenda(beats: &[u64], target: usize) -> Option<Node> {
    let m = beats.len();
    let mut parent = vec![usize::MAX; m];
    let mut seen = 1u64 << target;
    let mut order = vec![target];
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        let mut fresh = beats[x] & !seen;
        seen |= fresh;
        while fresh != 0 {
            let y = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            parent[y] = x;
            order.push(y);
        }
    }
    if order.len() != m {
        return None;
    }
    // Subtree of x: x meets the subtree winners of its children in turn and
    // beats each of them.
    fn build(x: usize, children: &[Vec<usize>]) -> Node {
        let mut node = Node::Leaf(x);
        for &c in &children[x] {
            node = Node::pair(node, build(c, children));
        }
        node
    }
    let mut children = vec![Vec::new(); m];
    for &y in &order[1..] {
        children[parent[y]].push(y);
    }
    Some(build(target, &children))
}

/// Candidates winning at least one agenda (or, with `balanced`, at least one
/// balanced agenda) in `t`, by subset dynamic programming.
pub fn knockout_winners(t: &Tournament, balanced: bool) -> Result<BTreeSet<usize>> {
    let m = t.len();
    if m > MAX_MASK_CANDIDATES {
        return Err(Error::TooManyCandidates {
            max: MAX_MASK_CANDIDATES,
            found: m,
        });
    }
    let rows = t.beat_rows();
    let mut k = Knockout::new(&rows, balanced, u64::MAX);
    Ok(mask_to_set(k.winners(full_mask(m))?))
}

/// A canonical agenda (balanced if requested) in which `target` wins `t`.
pub fn knockout_witness(t: &Tournament, target: usize, balanced: bool) -> Result<Option<Agenda>> {
    let m = t.len();
    if m > MAX_MASK_CANDIDATES {
        return Err(Error::TooManyCandidates {
            max: MAX_MASK_CANDIDATES,
            found: m,
        });
    }
    let rows = t.beat_rows();
    let mut k = Knockout::new(&rows, balanced, u64::MAX);
    Ok(k
        .witness(full_mask(m), target)?
        .map(|n| Agenda::from_node_unchecked(n, m)))
}
