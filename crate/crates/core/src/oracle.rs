//! Reference winner sets by literal enumeration.
//!
//! Every notion is evaluated exactly as defined: all completions (of the
//! profile or of the majority graph) times all canonical agendas, balanced
//! only for the fair notions, with [`Agenda::evaluate`] deciding each run.
//! Nothing here is pruned or cached, and nothing is shared with the solvers
//! beyond the majority graph and agenda evaluation.

use std::collections::BTreeSet;

use crate::agenda::{enumerate_agendas, Agenda};
use crate::error::{Error, Result};
use crate::majority::{majority_graph, MajorityGraph};
use crate::model::{CandidateSet, Profile};
use crate::profwin::Notion;

/// Default cap on agenda evaluations.
pub const DEFAULT_EVALUATIONS: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Profile,
    Graph,
}

/// Which set to compute and over which kind of completion. Fairness is
/// carried by the notion (`Fwc`, `Fsc`, `Fwp`, `Fsp`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotionQuery {
    pub notion: Notion,
    pub source: Source,
}

pub enum OracleInput<'a> {
    Profile(&'a Profile),
    Graph(&'a MajorityGraph),
}

pub fn oracle_winners(input: OracleInput<'_>, q: NotionQuery, budget: u64) -> Result<BTreeSet<usize>> {
    match (input, q.source) {
        (OracleInput::Profile(p), Source::Profile) => profile_winners(p, q.notion, budget),
        (OracleInput::Profile(p), Source::Graph) => graph_winners(&majority_graph(p), q.notion, budget),
        (OracleInput::Graph(g), _) => graph_winners(g, q.notion, budget),
    }
}

/// Profile-level set by enumerating profile completions.
pub fn profile_winners(p: &Profile, notion: Notion, budget: u64) -> Result<BTreeSet<usize>> {
    quantify(
        p.candidates(),
        p.completions().map(|c| majority_graph(&c)),
        notion,
        budget,
    )
}

/// Graph-level set by enumerating orientations of the unknown pairs.
pub fn graph_winners(g: &MajorityGraph, notion: Notion, budget: u64) -> Result<BTreeSet<usize>> {
    quantify(
        g.candidates(),
        g.completions().map(|t| t.into_graph()),
        notion,
        budget,
    )
}

fn quantify<I>(c: &CandidateSet, completions: I, notion: Notion, budget: u64) -> Result<BTreeSet<usize>>
where
    I: Iterator<Item = MajorityGraph>,
{
    let m = c.len();
    let agendas: Vec<Agenda> = enumerate_agendas(c, notion.is_fair()).collect();
    let mut evaluations = 0u64;
    // Per candidate: held for some completion / for every completion.
    let mut some = vec![false; m];
    let mut every = vec![true; m];
    for g in completions {
        let mut wins_some = vec![false; m];
        let mut wins_all = vec![true; m];
        for t in &agendas {
            evaluations += 1;
            if evaluations > budget {
                return Err(Error::BudgetExceeded { budget });
            }
            let w = t.evaluate(&g)?;
            for a in 0..m {
                if a == w {
                    wins_some[a] = true;
                } else {
                    wins_all[a] = false;
                }
            }
        }
        let holds = if notion.is_condorcet() { wins_all } else { wins_some };
        for a in 0..m {
            some[a] |= holds[a];
            every[a] &= holds[a];
        }
    }
    let chosen = if notion.is_weak() { some } else { every };
    Ok((0..m).filter(|&a| chosen[a]).collect())
}
