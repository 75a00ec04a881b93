//! Randomized check of the relations between winner notions.
//!
//! Each sampled profile is solved along independent routes (majority graph,
//! tally search on P, tally search on U(P), balanced-agenda search) and the
//! known inclusions and equalities between the results are asserted. The
//! first violation is shrunk greedily and dumped in profile-file form.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::Result;
use crate::format::render_profile;
use crate::graphwin::{sc_graph, sp_graph, wc_graph, wp_graph};
use crate::majority::majority_graph;
use crate::model::{PartialOrder, Profile, Vote};
use crate::profwin::{self, verify_witness, SearchConfig, WinnerReport};
use crate::sample::{random_profile, rng, SampleSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelfCheckConfig {
    pub candidates: usize,
    pub max_votes: usize,
    pub max_weight: u64,
    pub trials: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig {
            candidates: 4,
            max_votes: 4,
            max_weight: 5,
            trials: 100,
            seed: 1,
            budget: profwin::DEFAULT_BUDGET,
        }
    }
}

/// The checked relations, in report order.
pub const PROPERTIES: [&str; 16] = [
    "M(P) = M(U(P))",
    "WP(P) <= WP(M(P))",
    "SP(M(P)) <= SP(P)",
    "WC(P) = WC(M(P))",
    "SC(P) = SC(M(P))",
    "WC(P) = WC(U(P))",
    "SC(P) = SC(U(P))",
    "FWC(P) = WC(P)",
    "FSC(P) = SC(P)",
    "FWP(P) <= WP(P)",
    "FSP(P) <= SP(P)",
    "SC(P) <= WC(P)",
    "SP(P) <= WP(P)",
    "complete P: WC = SC and WP = SP",
    "complete P: |SC| <= 1",
    "witnesses verify",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfCheckOutcome {
    pub passed: bool,
    /// Number of profiles each property was evaluated on.
    pub counts: Vec<usize>,
    pub text: String,
}

fn subset(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
    a.is_subset(b)
}

fn witnesses_ok(p: &Profile, r: &WinnerReport) -> bool {
    r.witnesses.iter().all(|(&c, w)| {
        r.winners.contains(&c) && verify_witness(c, &w.completion, &w.agenda, p, r.notion.is_fair())
    })
}

/// Evaluates every property on `p`; `None` marks a property that does not
/// apply (the complete-profile ones on incomplete profiles).
pub fn check_profile(p: &Profile, budget: u64) -> Result<Vec<Option<bool>>> {
    let cfg = SearchConfig::default().with_budget(budget).with_witnesses();
    let g = majority_graph(p);
    let u = p.unweighted();

    let wp = profwin::wp_profile(p, &cfg)?;
    let sp = profwin::sp_profile(p, &cfg)?;
    let fwp = profwin::fwp_profile(p, &cfg)?;
    let fsp = profwin::fsp_profile(p, &cfg)?;
    let wc = profwin::wc_profile_search(p, &cfg)?;
    let sc = profwin::sc_profile_search(p, &cfg)?;
    let fwc = profwin::fwc_profile_search(p, &cfg)?;
    let fsc = profwin::fsc_profile_search(p, &cfg)?;
    let wc_u = profwin::wc_profile_search(&u, &cfg)?;
    let sc_u = profwin::sc_profile_search(&u, &cfg)?;

    let complete = p.is_complete();
    let results = vec![
        Some(g == majority_graph(&u)),
        Some(subset(&wp.winners, &wp_graph(&g))),
        Some(subset(&sp_graph(&g)?, &sp.winners)),
        Some(wc.winners == wc_graph(&g)),
        Some(sc.winners == sc_graph(&g)),
        Some(wc.winners == wc_u.winners),
        Some(sc.winners == sc_u.winners),
        Some(fwc.winners == wc.winners),
        Some(fsc.winners == sc.winners),
        Some(subset(&fwp.winners, &wp.winners)),
        Some(subset(&fsp.winners, &sp.winners)),
        Some(subset(&sc.winners, &wc.winners)),
        Some(subset(&sp.winners, &wp.winners)),
        complete.then(|| wc.winners == sc.winners && wp.winners == sp.winners),
        complete.then_some(sc.winners.len() <= 1),
        Some([&wp, &fwp, &wc, &fwc].iter().all(|r| witnesses_ok(p, r)) && witnesses_ok(&u, &wc_u)),
    ];
    debug_assert_eq!(results.len(), PROPERTIES.len());
    Ok(results)
}

fn violates(p: &Profile, property: usize, budget: u64) -> bool {
    matches!(check_profile(p, budget).map(|r| r[property]), Ok(Some(false)))
}

/// Single-step simplifications of `p` that keep it a valid profile.
fn shrink_candidates(p: &Profile) -> Vec<Profile> {
    let c = p.candidates();
    let votes = p.votes();
    let mut out = Vec::new();
    let rebuild = |vs: Vec<Vote>| Profile::new(c.clone(), vs).ok();
    for i in 0..votes.len() {
        // drop a vote
        let mut vs = votes.to_vec();
        vs.remove(i);
        out.extend(rebuild(vs.clone()));
        // or drop it and fix parity on a neighbour
        if let Some(j) = (0..vs.len()).next() {
            let w = vs[j].weight();
            if let Ok(v) = Vote::new(vs[j].order().clone(), w + 1) {
                vs[j] = v;
                out.extend(rebuild(vs));
            }
        }
        // lighter weight, same parity
        if votes[i].weight() > 2 {
            let mut vs = votes.to_vec();
            vs[i] = Vote::new(votes[i].order().clone(), votes[i].weight() - 2).expect("positive");
            out.extend(rebuild(vs));
        }
        // forget one covering comparison
        let edges = votes[i].order().hasse_edges();
        for skip in 0..edges.len() {
            let kept = edges.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &e)| e);
            if let Ok(order) = PartialOrder::close(c, kept) {
                let mut vs = votes.to_vec();
                vs[i] = Vote::new(order, votes[i].weight()).expect("same weight");
                out.extend(rebuild(vs));
            }
        }
    }
    out
}

/// Greedy shrinking while `property` stays violated.
pub fn minimize(p: &Profile, property: usize, budget: u64) -> Profile {
    let mut current = p.clone();
    'outer: loop {
        for cand in shrink_candidates(&current) {
            if violates(&cand, property, budget) {
                current = cand;
                continue 'outer;
            }
        }
        return current;
    }
}

pub fn run(cfg: &SelfCheckConfig) -> Result<SelfCheckOutcome> {
    let spec = SampleSpec {
        candidates: cfg.candidates,
        max_votes: cfg.max_votes,
        max_weight: cfg.max_weight,
        ..SampleSpec::default()
    };
    let mut rng = rng(cfg.seed);
    let mut counts = vec![0usize; PROPERTIES.len()];
    let mut text = String::new();
    let _ = writeln!(
        text,
        "selfcheck: candidates={} votes<={} weights<={} trials={} seed={}",
        cfg.candidates, cfg.max_votes, cfg.max_weight, cfg.trials, cfg.seed
    );
    let mut failure = None;
    for trial in 0..cfg.trials {
        let p = random_profile(&mut rng, &spec);
        let results = check_profile(&p, cfg.budget)?;
        for (k, r) in results.iter().enumerate() {
            match r {
                Some(true) => counts[k] += 1,
                Some(false) => {
                    failure = Some((trial, k, p.clone()));
                    break;
                }
                None => {}
            }
        }
        if failure.is_some() {
            break;
        }
    }
    for (name, n) in PROPERTIES.iter().zip(&counts) {
        let _ = writeln!(text, "{name}: ok ({n})");
    }
    let passed = failure.is_none();
    if let Some((trial, k, p)) = failure {
        let small = minimize(&p, k, cfg.budget);
        let _ = writeln!(text, "FAILED {} at trial {}", PROPERTIES[k], trial);
        let _ = writeln!(text, "counterexample:");
        text.push_str(&render_profile(&small));
        let _ = writeln!(text, "result: fail");
    } else {
        let _ = writeln!(text, "result: pass");
    }
    Ok(SelfCheckOutcome {
        passed,
        counts,
        text,
    })
}
