//! Profile-level winner sets.
//!
//! WC and SC (and their balanced-agenda variants) coincide with the
//! graph-level sets of M(P) and are computed from the majority graph alone.
//! The possible-winner notions need exact search: the solver walks vote
//! completions depth first, accumulating pairwise weight tallies. Two
//! partial completions with equal tallies at the same depth have the same
//! futures, so each (depth, tally) state is expanded once. A pair whose
//! outcome the remaining votes can no longer change is keyed by its outcome
//! alone, which merges further states. Every distinct tournament reached at
//! the leaves is scored once.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::agenda::{Agenda, Node};
use crate::error::{Error, Result};
use crate::graphwin::{sc_graph, sp_graph, wc_graph, wp_graph};
use crate::knockout::{
    dominance_agenda, dominant_set, full_mask, mask_to_set, Knockout, MAX_MASK_CANDIDATES,
};
use crate::majority::majority_graph;
use crate::model::{pair_count, pairs, PartialOrder, Profile};
use crate::oracle;

/// Default cap on search work (state expansions plus knockout splits).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Notion {
    Wc,
    Sc,
    Wp,
    Sp,
    Fwc,
    Fsc,
    Fwp,
    Fsp,
}

impl Notion {
    pub const ALL: [Notion; 8] = [
        Notion::Wc,
        Notion::Sc,
        Notion::Wp,
        Notion::Sp,
        Notion::Fwc,
        Notion::Fsc,
        Notion::Fwp,
        Notion::Fsp,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Notion::Wc => "WC",
            Notion::Sc => "SC",
            Notion::Wp => "WP",
            Notion::Sp => "SP",
            Notion::Fwc => "FWC",
            Notion::Fsc => "FSC",
            Notion::Fwp => "FWP",
            Notion::Fsp => "FSP",
        }
    }

    /// Restricted to balanced agendas.
    pub fn is_fair(self) -> bool {
        matches!(self, Notion::Fwc | Notion::Fsc | Notion::Fwp | Notion::Fsp)
    }

    /// Quantifies "some completion" (weak) rather than "every completion".
    pub fn is_weak(self) -> bool {
        matches!(self, Notion::Wc | Notion::Wp | Notion::Fwc | Notion::Fwp)
    }

    /// Requires winning every agenda rather than some agenda.
    pub fn is_condorcet(self) -> bool {
        matches!(self, Notion::Wc | Notion::Sc | Notion::Fwc | Notion::Fsc)
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Notion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Notion::ALL
            .into_iter()
            .find(|n| n.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown notion `{s}`"))
    }
}

/// How a caller wants a set computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Majority-graph shortcuts where they are exact, search elsewhere.
    #[default]
    Auto,
    /// Tally search for every notion, no graph shortcuts.
    Search,
    /// Literal enumeration by the oracle.
    Brute,
}

/// How a set was actually computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Fast,
    Search,
    Brute,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Fast => "fast",
            Route::Search => "search",
            Route::Brute => "brute",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u64,
    pub witnesses: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            witnesses: false,
        }
    }
}

impl SearchConfig {
    pub fn with_witnesses(mut self) -> Self {
        self.witnesses = true;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

/// A completion of the original profile plus an agenda the candidate wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub completion: Profile,
    pub agenda: Agenda,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinnerReport {
    pub notion: Notion,
    pub winners: BTreeSet<usize>,
    /// Present for existential notions (WC, WP and fair variants) when
    /// requested.
    pub witnesses: BTreeMap<usize, Witness>,
    pub route: Route,
}

/// Same as `wc_graph(M(P))`.
pub fn wc_profile(p: &Profile) -> BTreeSet<usize> {
    wc_graph(&majority_graph(p))
}

/// Same as `sc_graph(M(P))`.
pub fn sc_profile(p: &Profile) -> BTreeSet<usize> {
    sc_graph(&majority_graph(p))
}

/// Equal to [`wc_profile`]; see [`fwc_profile_search`] for the literal check.
pub fn fwc_profile(p: &Profile) -> BTreeSet<usize> {
    wc_profile(p)
}

/// Equal to [`sc_profile`]; see [`fsc_profile_search`] for the literal check.
pub fn fsc_profile(p: &Profile) -> BTreeSet<usize> {
    sc_profile(p)
}

pub fn wp_profile(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    possible(p, false, cfg)
}

pub fn fwp_profile(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    possible(p, true, cfg)
}

pub fn sp_profile(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    strong_possible(p, false, cfg)
}

pub fn fsp_profile(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    strong_possible(p, true, cfg)
}

/// WC(P) by search: some reached tournament where the candidate wins every
/// agenda.
pub fn wc_profile_search(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    condorcet_search(p, Notion::Wc, cfg)
}

pub fn sc_profile_search(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    condorcet_search(p, Notion::Sc, cfg)
}

/// FWC(P) quantified over balanced agendas of every reached tournament.
pub fn fwc_profile_search(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    condorcet_search(p, Notion::Fwc, cfg)
}

pub fn fsc_profile_search(p: &Profile, cfg: &SearchConfig) -> Result<WinnerReport> {
    condorcet_search(p, Notion::Fsc, cfg)
}

/// Computes `notion` for `p` with the requested method.
pub fn solve(p: &Profile, notion: Notion, method: Method, cfg: &SearchConfig) -> Result<WinnerReport> {
    match method {
        Method::Brute => {
            let winners = oracle::profile_winners(p, notion, cfg.budget)?;
            Ok(WinnerReport {
                notion,
                winners,
                witnesses: BTreeMap::new(),
                route: Route::Brute,
            })
        }
        Method::Search => match notion {
            Notion::Wc | Notion::Sc | Notion::Fwc | Notion::Fsc => condorcet_search(p, notion, cfg),
            Notion::Wp => wp_profile(p, cfg),
            Notion::Fwp => fwp_profile(p, cfg),
            Notion::Sp => sp_profile(p, cfg),
            Notion::Fsp => fsp_profile(p, cfg),
        },
        Method::Auto => match notion {
            Notion::Wc | Notion::Fwc => {
                let winners = wc_profile(p);
                let witnesses = if cfg.witnesses {
                    winners
                        .iter()
                        .map(|&a| (a, condorcet_witness(p, a)))
                        .collect()
                } else {
                    BTreeMap::new()
                };
                Ok(WinnerReport {
                    notion,
                    winners,
                    witnesses,
                    route: Route::Fast,
                })
            }
            Notion::Sc | Notion::Fsc => Ok(WinnerReport {
                notion,
                winners: sc_profile(p),
                witnesses: BTreeMap::new(),
                route: Route::Fast,
            }),
            Notion::Wp => wp_profile(p, cfg),
            Notion::Fwp => fwp_profile(p, cfg),
            Notion::Sp => sp_profile(p, cfg),
            Notion::Fsp => fsp_profile(p, cfg),
        },
    }
}

/// Checks a witness independently of how it was found.
pub fn verify_witness(
    candidate: usize,
    completion: &Profile,
    agenda: &Agenda,
    original: &Profile,
    fair: bool,
) -> bool {
    if !completion.completes(original) || agenda.len() != original.candidates().len() {
        return false;
    }
    if fair && !agenda.is_balanced() {
        return false;
    }
    agenda.evaluate(&majority_graph(completion)) == Ok(candidate)
}

/// Completion in which `a` sits as high as each vote allows, with a balanced
/// agenda. When `a` has no incoming majority edge it beats everyone there.
fn condorcet_witness(p: &Profile, a: usize) -> Witness {
    let orders = p
        .votes()
        .iter()
        .map(|v| v.order().extension_favouring(a).to_partial())
        .collect();
    let m = p.candidates().len();
    let ids: Vec<usize> = (0..m).collect();
    Witness {
        completion: p.with_orders(orders),
        agenda: Agenda::from_node_unchecked(halving_tree(&ids), m).canonical(),
    }
}

fn halving_tree(ids: &[usize]) -> Node {
    if ids.len() == 1 {
        return Node::Leaf(ids[0]);
    }
    let (l, r) = ids.split_at(ids.len() / 2);
    Node::pair(halving_tree(l), halving_tree(r))
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn charge(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }

    fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }
}

/// A linear extension as its ranking and the pairs `(i, j)`, `i < j`, it
/// orders `i > j`.
struct Extension {
    ranking: Vec<usize>,
    gt_pairs: Vec<usize>,
}

struct Explorer<'p> {
    profile: &'p Profile,
    m: usize,
    weights: Vec<u64>,
    exts: Vec<Arc<Vec<Extension>>>,
    /// weight of votes from each level onwards
    remaining: Vec<u64>,
    visited: HashSet<(usize, Vec<u64>)>,
    seen_tournaments: HashSet<Vec<u64>>,
    budget: Budget,
}

enum Flow {
    Continue,
    Stop,
}

impl<'p> Explorer<'p> {
    fn new(profile: &'p Profile, budget: u64) -> Result<Self> {
        let m = profile.candidates().len();
        if m > MAX_MASK_CANDIDATES {
            return Err(Error::TooManyCandidates {
                max: MAX_MASK_CANDIDATES,
                found: m,
            });
        }
        let mut budget = Budget { used: 0, limit: budget };
        let mut cache: HashMap<&PartialOrder, Arc<Vec<Extension>>> = HashMap::new();
        let mut exts = Vec::new();
        for v in profile.votes() {
            let e = match cache.get(v.order()) {
                Some(e) => e.clone(),
                None => {
                    let mut list = Vec::new();
                    for t in v.order().linear_extensions() {
                        budget.charge(1)?;
                        let mut pos = vec![0; m];
                        for (k, &c) in t.ranking().iter().enumerate() {
                            pos[c] = k;
                        }
                        let gt_pairs = pairs(m)
                            .enumerate()
                            .filter(|&(_, (i, j))| pos[i] < pos[j])
                            .map(|(p, _)| p)
                            .collect();
                        list.push(Extension {
                            ranking: t.ranking().to_vec(),
                            gt_pairs,
                        });
                    }
                    let e = Arc::new(list);
                    cache.insert(v.order(), e.clone());
                    e
                }
            };
            exts.push(e);
        }
        let weights: Vec<u64> = profile.votes().iter().map(|v| v.weight()).collect();
        let mut remaining = vec![0u64; weights.len() + 1];
        for i in (0..weights.len()).rev() {
            remaining[i] = remaining[i + 1] + weights[i];
        }
        Ok(Explorer {
            profile,
            m,
            weights,
            exts,
            remaining,
            visited: HashSet::new(),
            seen_tournaments: HashSet::new(),
            budget,
        })
    }

    /// Calls `visit` once per distinct tournament induced by a completion,
    /// with the extension choices of the first completion reaching it.
    fn run<F>(&mut self, mut visit: F) -> Result<()>
    where
        F: FnMut(&[u64], &[usize], &mut Budget) -> Result<Flow>,
    {
        let mut tally = vec![0u64; pair_count(self.m)];
        let mut path = Vec::with_capacity(self.exts.len());
        self.dfs(0, &mut tally, &mut path, &mut visit).map(|_| ())
    }

    /// Tally with settled pairs replaced by their outcome.
    fn state_key(&self, level: usize, tally: &[u64]) -> Vec<u64> {
        let total = self.profile.total_weight();
        let rest = self.remaining[level];
        tally
            .iter()
            .map(|&t| {
                if 2 * t > total {
                    u64::MAX
                } else if 2 * (t + rest) < total {
                    u64::MAX - 1
                } else {
                    t
                }
            })
            .collect()
    }

    fn dfs<F>(
        &mut self,
        level: usize,
        tally: &mut Vec<u64>,
        path: &mut Vec<usize>,
        visit: &mut F,
    ) -> Result<Flow>
    where
        F: FnMut(&[u64], &[usize], &mut Budget) -> Result<Flow>,
    {
        self.budget.charge(1)?;
        if level == self.exts.len() {
            let rows = self.tournament_rows(tally);
            if !self.seen_tournaments.insert(rows.clone()) {
                return Ok(Flow::Continue);
            }
            return visit(&rows, path, &mut self.budget);
        }
        if !self.visited.insert((level, self.state_key(level, tally))) {
            return Ok(Flow::Continue);
        }
        let exts = self.exts[level].clone();
        let w = self.weights[level];
        for (choice, ext) in exts.iter().enumerate() {
            for &p in &ext.gt_pairs {
                tally[p] += w;
            }
            path.push(choice);
            let flow = self.dfs(level + 1, tally, path, visit);
            path.pop();
            for &p in &ext.gt_pairs {
                tally[p] -= w;
            }
            if let Flow::Stop = flow? {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    }

    fn tournament_rows(&self, tally: &[u64]) -> Vec<u64> {
        let total = self.profile.total_weight();
        let mut rows = vec![0u64; self.m];
        for ((i, j), &g) in pairs(self.m).zip(tally) {
            if 2 * g > total {
                rows[i] |= 1 << j;
            } else {
                rows[j] |= 1 << i;
            }
        }
        rows
    }

    fn completion(&self, path: &[usize]) -> Profile {
        let orders = path
            .iter()
            .zip(&self.exts)
            .map(|(&c, e)| PartialOrder::from_ranking(&e[c].ranking))
            .collect();
        self.profile.with_orders(orders)
    }
}

/// Winner mask of a tournament, any or balanced agendas.
fn tournament_winners(rows: &[u64], fair: bool, budget: &mut Budget) -> Result<u64> {
    if !fair {
        budget.charge(rows.len() as u64)?;
        return Ok(dominant_set(rows));
    }
    let mut k = Knockout::new(rows, true, budget.remaining());
    let w = k.winners(full_mask(rows.len()));
    budget.charge(k.work())?;
    w.map_err(|_| Error::BudgetExceeded { budget: budget.limit })
}

fn witness_agenda(rows: &[u64], target: usize, fair: bool, budget: &mut Budget) -> Result<Agenda> {
    let m = rows.len();
    let node = if fair {
        let mut k = Knockout::new(rows, true, budget.remaining());
        let n = k.witness(full_mask(m), target);
        budget.charge(k.work())?;
        n.map_err(|_| Error::BudgetExceeded { budget: budget.limit })?
    } else {
        dominance_agenda(rows, target)
    };
    let node = node.expect("target is a winner of this tournament");
    Ok(Agenda::from_node_unchecked(node, m).canonical())
}

fn to_mask(set: &BTreeSet<usize>) -> u64 {
    set.iter().fold(0, |acc, &c| acc | (1 << c))
}

fn possible(p: &Profile, fair: bool, cfg: &SearchConfig) -> Result<WinnerReport> {
    let notion = if fair { Notion::Fwp } else { Notion::Wp };
    let mut explorer = Explorer::new(p, cfg.budget)?;
    // Nothing outside WP(M(P)) can win any completion.
    let targets = to_mask(&wp_graph(&majority_graph(p)));
    let mut found = 0u64;
    let mut witnesses = BTreeMap::new();
    let want_witness = cfg.witnesses;
    let mut pending: Vec<(Vec<u64>, Vec<usize>, u64)> = Vec::new();
    explorer.run(|rows, path, budget| {
        let winners = tournament_winners(rows, fair, budget)? & targets;
        let fresh = winners & !found;
        if fresh != 0 {
            found |= fresh;
            if want_witness {
                pending.push((rows.to_vec(), path.to_vec(), fresh));
            }
        }
        Ok(if found == targets { Flow::Stop } else { Flow::Continue })
    })?;
    for (rows, path, fresh) in pending {
        let completion = explorer.completion(&path);
        for c in mask_to_set(fresh) {
            let agenda = witness_agenda(&rows, c, fair, &mut explorer.budget)?;
            witnesses.insert(
                c,
                Witness {
                    completion: completion.clone(),
                    agenda,
                },
            );
        }
    }
    Ok(WinnerReport {
        notion,
        winners: mask_to_set(found),
        witnesses,
        route: Route::Search,
    })
}

fn strong_possible(p: &Profile, fair: bool, cfg: &SearchConfig) -> Result<WinnerReport> {
    let notion = if fair { Notion::Fsp } else { Notion::Sp };
    let mut explorer = Explorer::new(p, cfg.budget)?;
    let g = majority_graph(p);
    let mut acc = to_mask(&wp_graph(&g));
    // SP(M(P)) is contained in SP(P); once only those remain nothing else can
    // change. Skipped when the graph has too many unknown pairs.
    let lower = if fair {
        0
    } else {
        sp_graph(&g).map(|s| to_mask(&s)).unwrap_or(0)
    };
    explorer.run(|rows, _, budget| {
        acc &= tournament_winners(rows, fair, budget)?;
        Ok(if acc & !lower == 0 { Flow::Stop } else { Flow::Continue })
    })?;
    Ok(WinnerReport {
        notion,
        winners: mask_to_set(acc),
        witnesses: BTreeMap::new(),
        route: Route::Search,
    })
}

fn condorcet_search(p: &Profile, notion: Notion, cfg: &SearchConfig) -> Result<WinnerReport> {
    let fair = notion.is_fair();
    let weak = notion.is_weak();
    let mut explorer = Explorer::new(p, cfg.budget)?;
    let m = p.candidates().len();
    let mut acc = if weak { 0 } else { full_mask(m) };
    let mut pending: Vec<(Vec<u64>, Vec<usize>, usize)> = Vec::new();
    let want_witness = cfg.witnesses && weak;
    explorer.run(|rows, path, budget| {
        // A candidate wins every agenda iff it is the only one winning any.
        let w = tournament_winners(rows, fair, budget)?;
        let sole = if w.count_ones() == 1 { w } else { 0 };
        if weak {
            if sole & !acc != 0 && want_witness {
                pending.push((rows.to_vec(), path.to_vec(), sole.trailing_zeros() as usize));
            }
            acc |= sole;
        } else {
            acc &= sole;
            if acc == 0 {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    })?;
    let mut witnesses = BTreeMap::new();
    for (rows, path, c) in pending {
        let agenda = witness_agenda(&rows, c, fair, &mut explorer.budget)?;
        witnesses.insert(
            c,
            Witness {
                completion: explorer.completion(&path),
                agenda,
            },
        );
    }
    Ok(WinnerReport {
        notion,
        winners: mask_to_set(acc),
        witnesses,
        route: Route::Search,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default().with_witnesses()
    }

    fn check_witnesses(p: &Profile, r: &WinnerReport) {
        for (&c, w) in &r.witnesses {
            assert!(r.winners.contains(&c));
            assert!(verify_witness(c, &w.completion, &w.agenda, p, r.notion.is_fair()));
        }
    }

    #[test]
    fn weighted_three_voter_sets() {
        let p = fixtures::weighted_three_voter();
        assert_eq!(wc_profile(&p), set(&[0, 2]));
        assert_eq!(sc_profile(&p), set(&[]));
        let wp = wp_profile(&p, &cfg()).unwrap();
        assert_eq!(wp.winners, set(&[0, 1, 2]));
        assert_eq!(wp.witnesses.len(), 3);
        check_witnesses(&p, &wp);
        assert_eq!(sp_profile(&p, &cfg()).unwrap().winners, set(&[]));
        let fwp = fwp_profile(&p, &cfg()).unwrap();
        assert_eq!(fwp.winners, set(&[0, 1, 2]));
        check_witnesses(&p, &fwp);
        assert_eq!(fwc_profile(&p), set(&[0, 2]));
        assert_eq!(fsc_profile(&p), set(&[]));
    }

    #[test]
    fn single_partial_voter_excludes_b() {
        let p = fixtures::single_partial_voter();
        let wp = wp_profile(&p, &cfg()).unwrap();
        assert_eq!(wp.winners, set(&[0, 2]));
        check_witnesses(&p, &wp);
        assert_eq!(sp_profile(&p, &cfg()).unwrap().winners, set(&[]));
    }

    #[test]
    fn complete_profile_collapses_notions() {
        let p = fixtures::condorcet_cycle();
        let sp = sp_profile(&p, &cfg()).unwrap().winners;
        assert_eq!(sp, set(&[0, 1, 2]));
        assert_eq!(wp_profile(&p, &cfg()).unwrap().winners, sp);
        assert_eq!(wc_profile(&p), set(&[]));
        let q = fixtures::condorcet_winner();
        assert_eq!(wc_profile(&q), set(&[0]));
        assert_eq!(sc_profile(&q), set(&[0]));
        assert_eq!(fsc_profile(&q), set(&[0]));
    }

    #[test]
    fn fully_unknown_three_candidates() {
        let c = crate::CandidateSet::new(["A", "B", "C"]).unwrap();
        let v = crate::Vote::new(PartialOrder::empty(3), 3).unwrap();
        let p = Profile::new(c, vec![v]).unwrap();
        assert_eq!(wc_profile(&p), set(&[0, 1, 2]));
        assert_eq!(sc_profile(&p), set(&[]));
    }

    #[test]
    fn condorcet_witnesses_verify() {
        let p = fixtures::weighted_three_voter();
        for notion in [Notion::Wc, Notion::Fwc] {
            let r = solve(&p, notion, Method::Auto, &cfg()).unwrap();
            assert_eq!(r.witnesses.len(), 2);
            check_witnesses(&p, &r);
            let s = solve(&p, notion, Method::Search, &cfg()).unwrap();
            assert_eq!(s.winners, r.winners);
            check_witnesses(&p, &s);
        }
        for notion in [Notion::Sc, Notion::Fsc] {
            assert_eq!(solve(&p, notion, Method::Search, &cfg()).unwrap().winners, set(&[]));
        }
    }

    #[test]
    fn single_candidate_profile() {
        let c = crate::CandidateSet::new(["A"]).unwrap();
        let v = crate::Vote::new(PartialOrder::empty(1), 1).unwrap();
        let p = Profile::new(c, vec![v]).unwrap();
        for notion in Notion::ALL {
            for method in [Method::Auto, Method::Search, Method::Brute] {
                let r = solve(&p, notion, method, &cfg()).unwrap();
                assert_eq!(r.winners, set(&[0]), "{notion} {method:?}");
                check_witnesses(&p, &r);
            }
        }
    }

    #[test]
    fn budget_exhaustion() {
        let p = fixtures::weighted_three_voter();
        assert!(matches!(
            wp_profile(&p, &SearchConfig::default().with_budget(3)),
            Err(Error::BudgetExceeded { budget: 3 })
        ));
    }

    #[test]
    fn witness_rejections() {
        let p = fixtures::weighted_three_voter();
        let r = wp_profile(&p, &cfg()).unwrap();
        let w = &r.witnesses[&1];
        assert!(verify_witness(1, &w.completion, &w.agenda, &p, false));
        // wrong candidate for the agenda
        assert!(!verify_witness(0, &w.completion, &w.agenda, &p, false));
        // wrong weight
        let reweighted = Profile::new(
            p.candidates().clone(),
            w.completion
                .votes()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    crate::Vote::new(v.order().clone(), if i == 0 { 3 } else { v.weight() }).unwrap()
                })
                .collect(),
        )
        .unwrap();
        assert!(!verify_witness(1, &reweighted, &w.agenda, &p, false));
        // incomplete "completion"
        assert!(!verify_witness(1, &p, &w.agenda, &p, false));
    }

    #[test]
    fn notion_parsing() {
        assert_eq!("fwp".parse::<Notion>().unwrap(), Notion::Fwp);
        assert_eq!("SC".parse::<Notion>().unwrap(), Notion::Sc);
        assert!("xx".parse::<Notion>().is_err());
    }
}
