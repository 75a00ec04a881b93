//! Text formats for profiles and winner reports.
//!
//! Profile file:
//!
//! ```text
//! # comment
//! candidates: A B C
//! vote 1: A>B>C
//! vote 2: B>A
//! vote 2: A>B, C>B
//! ```
//!
//! A chain `X>Y>Z` stands for its consecutive comparisons; each vote is
//! closed transitively on load. A vote with nothing after the colon
//! declares no comparisons.
//!
//! Report file: one `NOTION: c1 c2 ...` line per notion (`-` for the empty
//! set), candidates in declaration order, then optional witness blocks.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{is_valid_name, CandidateSet, PartialOrder, Profile, Vote};
use crate::profwin::WinnerReport;

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses a profile file. Syntax problems, unknown candidates and bad
/// weights are reported before consistency errors (cycles, even totals).
pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut candidates: Option<CandidateSet> = None;
    let mut votes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(line_no, "expected `:`"))?;
        let head = head.trim();
        match &candidates {
            None => {
                if head != "candidates" {
                    return Err(syntax(line_no, "first line must be `candidates: ...`"));
                }
                let names: Vec<&str> = body.split_whitespace().collect();
                for n in &names {
                    if !is_valid_name(n) {
                        return Err(syntax(line_no, format!("invalid candidate name `{n}`")));
                    }
                }
                candidates = Some(CandidateSet::new(names)?);
            }
            Some(c) => {
                let weight = head
                    .strip_prefix("vote")
                    .filter(|w| w.starts_with(char::is_whitespace))
                    .ok_or_else(|| syntax(line_no, "expected `vote W: ...`"))?
                    .trim();
                let weight: u64 = weight
                    .parse()
                    .map_err(|_| syntax(line_no, format!("invalid weight `{weight}`")))?;
                if weight == 0 || weight > crate::model::MAX_WEIGHT {
                    return Err(syntax(line_no, format!("weight {weight} out of range")));
                }
                let rels = parse_relations(c, body, line_no)?;
                votes.push((rels, weight));
            }
        }
    }
    let c = candidates.ok_or_else(|| syntax(1, "missing `candidates:` line"))?;
    if votes.is_empty() {
        return Err(syntax(1, "no votes"));
    }
    let votes = votes
        .into_iter()
        .map(|(rels, w)| Vote::new(PartialOrder::close(&c, rels)?, w))
        .collect::<Result<Vec<_>>>()?;
    Profile::new(c, votes)
}

fn parse_relations(c: &CandidateSet, body: &str, line_no: usize) -> Result<Vec<(usize, usize)>> {
    let body = body.trim();
    let mut rels = Vec::new();
    if body.is_empty() {
        return Ok(rels);
    }
    for chain in body.split(',') {
        let items: Vec<&str> = chain.split('>').map(str::trim).collect();
        if items.len() < 2 {
            return Err(syntax(line_no, format!("expected a chain `X>Y`, got `{}`", chain.trim())));
        }
        let mut ids = Vec::with_capacity(items.len());
        for name in items {
            if !is_valid_name(name) {
                return Err(syntax(line_no, format!("invalid candidate name `{name}`")));
            }
            let id = c
                .index_of(name)
                .ok_or_else(|| Error::UnknownCandidate(name.to_string()))?;
            ids.push(id);
        }
        for w in ids.windows(2) {
            if w[0] == w[1] {
                return Err(Error::SelfComparison(c.name(w[0]).to_string()));
            }
            rels.push((w[0], w[1]));
        }
    }
    Ok(rels)
}

/// Chains covering the transitive reduction of `order`, so that closing
/// them gives back `order`. A total order renders as a single chain.
pub fn render_order(c: &CandidateSet, order: &PartialOrder) -> String {
    // candidates with fewer predecessors first, so chains start at the top
    let m = order.len();
    let above = |x: usize| (0..m).filter(|&y| order.prefers(y, x)).count();
    let mut edges = order.hasse_edges();
    edges.sort_by_key(|&(a, b)| (above(a), a, above(b), b));
    let mut used = vec![false; edges.len()];
    let mut chains: Vec<String> = Vec::new();
    for start in 0..edges.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a, mut tail) = edges[start];
        let mut chain = vec![a, tail];
        while let Some(k) = (0..edges.len()).find(|&k| !used[k] && edges[k].0 == tail) {
            used[k] = true;
            tail = edges[k].1;
            chain.push(tail);
        }
        chains.push(chain.iter().map(|&i| c.name(i)).collect::<Vec<_>>().join(">"));
    }
    chains.join(", ")
}

fn render_votes(out: &mut String, p: &Profile) {
    for v in p.votes() {
        let rels = render_order(p.candidates(), v.order());
        if rels.is_empty() {
            let _ = writeln!(out, "vote {}:", v.weight());
        } else {
            let _ = writeln!(out, "vote {}: {}", v.weight(), rels);
        }
    }
}

pub fn render_profile(p: &Profile) -> String {
    let mut out = String::new();
    let names: Vec<&str> = p.candidates().names().collect();
    let _ = writeln!(out, "candidates: {}", names.join(" "));
    render_votes(&mut out, p);
    out
}

/// `A C`, or `-` for the empty set; declaration order.
pub fn render_set<'a>(c: &CandidateSet, set: impl IntoIterator<Item = &'a usize>) -> String {
    let names: Vec<&str> = set.into_iter().map(|&i| c.name(i)).collect();
    if names.is_empty() {
        "-".to_string()
    } else {
        names.join(" ")
    }
}

/// Notion lines for every report, then a witness block per witness.
pub fn render_report(c: &CandidateSet, reports: &[WinnerReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}: {}", r.notion, render_set(c, &r.winners));
    }
    for r in reports {
        for (&cand, w) in &r.witnesses {
            let _ = writeln!(out, "witness {} {}:", r.notion, c.name(cand));
            render_votes(&mut out, &w.completion);
            let _ = writeln!(out, "agenda: {}", w.agenda.render(c));
        }
    }
    out
}
