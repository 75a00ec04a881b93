//! Majority graphs of (incomplete) weighted profiles.

use std::fmt::Write as _;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::model::{pair_count, pairs, CandidateSet, PairTable, Profile, Rel};

/// Three-valued pairwise majority relation. `Gt` at `(a, b)` means `a` beats
/// `b` by a strict majority of the total weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MajorityGraph {
    candidates: CandidateSet,
    table: PairTable,
}

impl MajorityGraph {
    /// Graph with every pair unknown.
    pub fn unknown(candidates: CandidateSet) -> Self {
        let table = PairTable::unknown(candidates.len());
        MajorityGraph { candidates, table }
    }

    /// Builds a graph from a relation per canonical pair `(i, j)`, `i < j`.
    pub fn from_pair_relations(candidates: CandidateSet, rels: &[Rel]) -> Self {
        assert_eq!(rels.len(), pair_count(candidates.len()), "one relation per pair");
        let mut table = PairTable::unknown(candidates.len());
        table.raw_mut().copy_from_slice(rels);
        MajorityGraph { candidates, table }
    }

    /// Records `winner` beating `loser`.
    pub fn set_beats(&mut self, winner: usize, loser: usize) {
        self.table.set(winner, loser, Rel::Gt);
    }

    pub fn set(&mut self, a: usize, b: usize, rel: Rel) {
        self.table.set(a, b, rel);
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn len(&self) -> usize {
        self.table.m()
    }

    pub fn is_empty(&self) -> bool {
        self.table.m() == 0
    }

    pub fn get(&self, a: usize, b: usize) -> Rel {
        self.table.get(a, b)
    }

    pub fn beats(&self, a: usize, b: usize) -> bool {
        self.table.get(a, b) == Rel::Gt
    }

    /// Relations in canonical pair order.
    pub fn pair_relations(&self) -> &[Rel] {
        self.table.raw()
    }

    pub fn is_complete(&self) -> bool {
        self.table.unknown_count() == 0
    }

    pub fn unknown_count(&self) -> usize {
        self.table.unknown_count()
    }

    pub fn unknown_pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.len())
            .filter(|&(i, j)| self.get(i, j) == Rel::Unknown)
            .collect()
    }

    /// Row `a` holds bit `b` iff `a` beats `b`. Only for m <= 64.
    pub(crate) fn beat_rows(&self) -> Vec<u64> {
        let m = self.len();
        debug_assert!(m <= 64);
        let mut rows = vec![0u64; m];
        for (i, j) in pairs(m) {
            match self.get(i, j) {
                Rel::Gt => rows[i] |= 1 << j,
                Rel::Lt => rows[j] |= 1 << i,
                Rel::Unknown => {}
            }
        }
        rows
    }

    /// One line per pair in canonical order: `A > B`, `A < B` or `A ? B`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, j) in pairs(self.len()) {
            let op = match self.get(i, j) {
                Rel::Gt => '>',
                Rel::Lt => '<',
                Rel::Unknown => '?',
            };
            let _ = writeln!(out, "{} {} {}", self.candidates.name(i), op, self.candidates.name(j));
        }
        out
    }

    /// Every orientation of the unknown pairs.
    pub fn completions(&self) -> GraphCompletions {
        GraphCompletions {
            base: self.clone(),
            unknown: self.unknown_pairs(),
            odometer: Vec::new(),
            started: false,
            done: false,
        }
    }
}

/// The majority graph M(P): `a -> b` iff the votes declaring `a > b` carry
/// strictly more than half of the total weight.
pub fn majority_graph(profile: &Profile) -> MajorityGraph {
    let m = profile.candidates().len();
    let n = pair_count(m);
    let mut gt = vec![0u64; n];
    let mut lt = vec![0u64; n];
    for vote in profile.votes() {
        let w = vote.weight();
        for (p, rel) in vote.order().table().raw().iter().enumerate() {
            match rel {
                Rel::Gt => gt[p] += w,
                Rel::Lt => lt[p] += w,
                Rel::Unknown => {}
            }
        }
    }
    let total = profile.total_weight();
    let rels: Vec<Rel> = gt
        .iter()
        .zip(&lt)
        .map(|(&g, &l)| {
            if 2 * g > total {
                Rel::Gt
            } else if 2 * l > total {
                Rel::Lt
            } else {
                Rel::Unknown
            }
        })
        .collect();
    MajorityGraph::from_pair_relations(profile.candidates().clone(), &rels)
}

/// A complete majority graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament(MajorityGraph);

impl Tournament {
    pub fn graph(&self) -> &MajorityGraph {
        &self.0
    }

    pub fn into_graph(self) -> MajorityGraph {
        self.0
    }
}

impl TryFrom<MajorityGraph> for Tournament {
    type Error = Error;

    fn try_from(g: MajorityGraph) -> Result<Self> {
        match g.unknown_pairs().first() {
            None => Ok(Tournament(g)),
            Some(&(i, j)) => Err(Error::IncompleteGraph(
                g.candidates.name(i).to_string(),
                g.candidates.name(j).to_string(),
            )),
        }
    }
}

impl Deref for Tournament {
    type Target = MajorityGraph;

    fn deref(&self) -> &MajorityGraph {
        &self.0
    }
}

/// Stream of tournaments extending a majority graph. The first unknown pair
/// varies slowest; `Gt` is tried before `Lt`.
pub struct GraphCompletions {
    base: MajorityGraph,
    unknown: Vec<(usize, usize)>,
    odometer: Vec<bool>,
    started: bool,
    done: bool,
}

impl GraphCompletions {
    /// 2^u, saturating.
    pub fn total(&self) -> u64 {
        1u64.checked_shl(self.unknown.len() as u32).unwrap_or(u64::MAX)
    }
}

impl Iterator for GraphCompletions {
    type Item = Tournament;

    fn next(&mut self) -> Option<Tournament> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.odometer = vec![false; self.unknown.len()];
        } else {
            let mut carry = true;
            for bit in self.odometer.iter_mut().rev() {
                if !*bit {
                    *bit = true;
                    carry = false;
                    break;
                }
                *bit = false;
            }
            if carry {
                self.done = true;
                return None;
            }
        }
        let mut g = self.base.clone();
        for (&(i, j), &flip) in self.unknown.iter().zip(&self.odometer) {
            g.set(i, j, if flip { Rel::Lt } else { Rel::Gt });
        }
        Some(Tournament(g))
    }
}

/// Free-function form of [`MajorityGraph::completions`].
pub fn graph_completions(g: &MajorityGraph) -> GraphCompletions {
    g.completions()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{PartialOrder, Vote};

    #[test]
    fn weighted_three_voter_graph() {
        let g = majority_graph(&fixtures::weighted_three_voter());
        assert_eq!(g.render(), "A > B\nA ? C\nB ? C\n");
    }

    #[test]
    fn single_partial_voter_graph() {
        let g = majority_graph(&fixtures::single_partial_voter());
        assert!(g.beats(0, 1));
        assert_eq!(g.unknown_count(), 2);
    }

    #[test]
    fn single_total_voter_gives_transitive_tournament() {
        let c = CandidateSet::new(["A", "B", "C"]).unwrap();
        let p = Profile::new(c, vec![Vote::new(PartialOrder::from_ranking(&[0, 1, 2]), 1).unwrap()])
            .unwrap();
        let g = majority_graph(&p);
        assert!(g.beats(0, 1) && g.beats(0, 2) && g.beats(1, 2));
        assert!(Tournament::try_from(g).is_ok());
    }

    #[test]
    fn completion_counts() {
        let g = majority_graph(&fixtures::weighted_three_voter());
        assert_eq!(g.completions().count(), 4);
        assert_eq!(g.completions().total(), 4);
        let c = CandidateSet::new(["A", "B", "C"]).unwrap();
        let empty = MajorityGraph::unknown(c);
        let all: Vec<_> = empty.completions().collect();
        assert_eq!(all.len(), 8);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 8);
        let t = all[3].clone().into_graph();
        assert_eq!(t.completions().collect::<Vec<_>>(), vec![Tournament::try_from(t).unwrap()]);
    }

    #[test]
    fn incomplete_graph_is_not_a_tournament() {
        let g = majority_graph(&fixtures::weighted_three_voter());
        assert_eq!(
            Tournament::try_from(g).unwrap_err(),
            Error::IncompleteGraph("A".into(), "C".into())
        );
    }
}
