//! Winner sets of (incomplete) majority graphs.
//!
//! WC and SC read off in- and out-degrees, WP is reachability in the graph
//! where unknown pairs count in both directions, and SP is an intersection
//! of top cycles over every completion, bounded by the number of unknown
//! pairs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::knockout::{dominant_set, full_mask, mask_to_set, Knockout, MAX_MASK_CANDIDATES};
use crate::majority::{MajorityGraph, Tournament};
use crate::model::Rel;

/// Default cap on unknown pairs for the enumerating graph notions.
pub const DEFAULT_MAX_UNKNOWN_PAIRS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphWinnerSets {
    pub wc: BTreeSet<usize>,
    pub sc: BTreeSet<usize>,
    pub wp: BTreeSet<usize>,
    pub sp: BTreeSet<usize>,
    pub source: MajorityGraph,
}

/// All four graph-level sets; SP subject to [`DEFAULT_MAX_UNKNOWN_PAIRS`].
pub fn graph_winners(g: &MajorityGraph) -> Result<GraphWinnerSets> {
    Ok(GraphWinnerSets {
        wc: wc_graph(g),
        sc: sc_graph(g),
        wp: wp_graph(g),
        sp: sp_graph(g)?,
        source: g.clone(),
    })
}

/// Candidates beating all m-1 others.
pub fn sc_graph(g: &MajorityGraph) -> BTreeSet<usize> {
    let m = g.len();
    (0..m)
        .filter(|&a| (0..m).all(|b| a == b || g.beats(a, b)))
        .collect()
}

/// Candidates with no incoming edge.
pub fn wc_graph(g: &MajorityGraph) -> BTreeSet<usize> {
    let m = g.len();
    (0..m)
        .filter(|&a| (0..m).all(|b| !g.beats(b, a)))
        .collect()
}

/// Candidates that reach every other candidate through `arc`, assuming
/// every pair has an arc in at least one direction. See
/// [`crate::knockout`] for why reverse search from a maximum out-degree
/// vertex suffices.
fn dominant(m: usize, arc: impl Fn(usize, usize) -> bool) -> BTreeSet<usize> {
    if m == 0 {
        return BTreeSet::new();
    }
    let outdeg = |x: usize| (0..m).filter(|&y| y != x && arc(x, y)).count();
    let hub = (0..m)
        .max_by_key(|&x| (outdeg(x), std::cmp::Reverse(x)))
        .expect("non-empty");
    let mut reached = vec![false; m];
    reached[hub] = true;
    let mut stack = vec![hub];
    while let Some(y) = stack.pop() {
        for (x, r) in reached.iter_mut().enumerate() {
            if !*r && x != y && arc(x, y) {
                *r = true;
                stack.push(x);
            }
        }
    }
    (0..m).filter(|&x| reached[x]).collect()
}

/// Candidates reaching every other candidate by a directed path; the
/// candidates that win at least one agenda.
pub fn top_cycle(t: &Tournament) -> BTreeSet<usize> {
    dominant(t.len(), |x, y| t.beats(x, y))
}

/// Candidates winning some agenda in some completion: reachability where an
/// unknown pair is an arc both ways.
pub fn wp_graph(g: &MajorityGraph) -> BTreeSet<usize> {
    dominant(g.len(), |x, y| g.get(x, y) != Rel::Lt)
}

/// Enumerates completions of `g` as beat rows, folding each through `visit`.
fn fold_completions(
    g: &MajorityGraph,
    max_unknown: usize,
    mut visit: impl FnMut(&[u64]) -> Result<bool>,
) -> Result<()> {
    let m = g.len();
    if m > MAX_MASK_CANDIDATES {
        return Err(Error::TooManyCandidates {
            max: MAX_MASK_CANDIDATES,
            found: m,
        });
    }
    let unknown = g.unknown_pairs();
    if unknown.len() > max_unknown {
        return Err(Error::TooManyUnknownPairs {
            unknown: unknown.len(),
            bound: max_unknown,
        });
    }
    let base = g.beat_rows();
    let mut rows = base.clone();
    for code in 0u64..(1u64 << unknown.len()) {
        rows.copy_from_slice(&base);
        for (k, &(i, j)) in unknown.iter().enumerate() {
            if code & (1 << k) == 0 {
                rows[i] |= 1 << j;
            } else {
                rows[j] |= 1 << i;
            }
        }
        if !visit(&rows)? {
            break;
        }
    }
    Ok(())
}

/// Candidates in the top cycle of every completion of `g`.
pub fn sp_graph(g: &MajorityGraph) -> Result<BTreeSet<usize>> {
    sp_graph_bounded(g, DEFAULT_MAX_UNKNOWN_PAIRS)
}

pub fn sp_graph_bounded(g: &MajorityGraph, max_unknown: usize) -> Result<BTreeSet<usize>> {
    let mut acc = full_mask(g.len());
    fold_completions(g, max_unknown, |rows| {
        acc &= dominant_set(rows);
        Ok(acc != 0)
    })?;
    Ok(mask_to_set(acc))
}

/// Same as [`wc_graph`]: beating every opponent in some balanced agenda's
/// first round forces beating everyone.
pub fn fwc_graph(g: &MajorityGraph) -> BTreeSet<usize> {
    wc_graph(g)
}

/// Same as [`sc_graph`], for the reason given at [`fwc_graph`].
pub fn fsc_graph(g: &MajorityGraph) -> BTreeSet<usize> {
    sc_graph(g)
}

/// Candidates winning some balanced agenda in some completion of `g`.
pub fn fwp_graph(g: &MajorityGraph, max_unknown: usize, work_limit: u64) -> Result<BTreeSet<usize>> {
    let full = full_mask(g.len());
    let mut acc = 0u64;
    let mut work = 0u64;
    fold_completions(g, max_unknown, |rows| {
        let mut k = Knockout::new(rows, true, work_limit.saturating_sub(work));
        acc |= k.winners(full)?;
        work += k.work() + 1;
        Ok(acc != full)
    })
    .map_err(|e| relabel_budget(e, work_limit))?;
    Ok(mask_to_set(acc))
}

/// Candidates winning some balanced agenda in every completion of `g`.
pub fn fsp_graph(g: &MajorityGraph, max_unknown: usize, work_limit: u64) -> Result<BTreeSet<usize>> {
    let mut acc = full_mask(g.len());
    let mut work = 0u64;
    fold_completions(g, max_unknown, |rows| {
        let mut k = Knockout::new(rows, true, work_limit.saturating_sub(work));
        acc &= k.winners(full_mask(rows.len()))?;
        work += k.work() + 1;
        Ok(acc != 0)
    })
    .map_err(|e| relabel_budget(e, work_limit))?;
    Ok(mask_to_set(acc))
}

fn relabel_budget(e: Error, budget: u64) -> Error {
    match e {
        Error::BudgetExceeded { .. } => Error::BudgetExceeded { budget },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::majority::majority_graph;
    use crate::model::CandidateSet;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn graph(m: usize, edges: &[(usize, usize)]) -> MajorityGraph {
        let c = CandidateSet::new(["A", "B", "C", "D"][..m].iter().copied()).unwrap();
        let mut g = MajorityGraph::unknown(c);
        for &(a, b) in edges {
            g.set_beats(a, b);
        }
        g
    }

    #[test]
    fn condorcet_sets() {
        let transitive = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(sc_graph(&transitive), set(&[0]));
        assert_eq!(wc_graph(&transitive), set(&[0]));
        let partial = graph(3, &[(0, 1), (0, 2)]);
        assert_eq!(sc_graph(&partial), set(&[0]));
        let cycle = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(wc_graph(&cycle), set(&[]));
        assert_eq!(wc_graph(&graph(3, &[])), set(&[0, 1, 2]));
    }

    #[test]
    fn weighted_three_voter_graph_sets() {
        let g = majority_graph(&fixtures::weighted_three_voter());
        assert_eq!(sc_graph(&g), set(&[]));
        assert_eq!(wc_graph(&g), set(&[0, 2]));
        assert_eq!(wp_graph(&g), set(&[0, 1, 2]));
        assert_eq!(sp_graph(&g).unwrap(), set(&[]));
    }

    #[test]
    fn top_cycles() {
        let t = |m, e: &[(usize, usize)]| Tournament::try_from(graph(m, e)).unwrap();
        assert_eq!(top_cycle(&t(3, &[(0, 1), (0, 2), (1, 2)])), set(&[0]));
        assert_eq!(top_cycle(&t(3, &[(0, 1), (1, 2), (2, 0)])), set(&[0, 1, 2]));
        let with_d = t(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(top_cycle(&with_d), set(&[0, 1, 2]));
    }

    #[test]
    fn single_partial_voter_graph_sets() {
        let g = majority_graph(&fixtures::single_partial_voter());
        assert_eq!(wp_graph(&g), set(&[0, 1, 2]));
        assert_eq!(sp_graph(&g).unwrap(), set(&[]));
    }

    #[test]
    fn complete_graph_sp_is_top_cycle() {
        let t = Tournament::try_from(graph(3, &[(0, 1), (1, 2), (2, 0)])).unwrap();
        assert_eq!(sp_graph(&t).unwrap(), top_cycle(&t));
        assert_eq!(wp_graph(&t), top_cycle(&t));
    }

    #[test]
    fn unknown_pair_bound() {
        let g = graph(4, &[]);
        assert_eq!(
            sp_graph_bounded(&g, 5).unwrap_err(),
            Error::TooManyUnknownPairs { unknown: 6, bound: 5 }
        );
    }

    #[test]
    fn fair_possible_on_four() {
        // A beats all but D; D beats only A. With balanced agendas on four
        // candidates D must meet someone it beats twice, so D cannot win.
        let g = graph(4, &[(0, 1), (0, 2), (3, 0), (1, 3), (2, 3), (1, 2)]);
        let t = Tournament::try_from(g.clone()).unwrap();
        assert!(top_cycle(&t).contains(&3));
        assert!(!fwp_graph(&g, 20, u64::MAX).unwrap().contains(&3));
        assert_eq!(fsp_graph(&g, 20, u64::MAX).unwrap(), fwp_graph(&g, 20, u64::MAX).unwrap());
    }
}
