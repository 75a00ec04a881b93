//! Command implementations behind the `cupvote` binary.
//!
//! Each command takes file contents and options and returns its standard
//! output; errors map onto process exit codes through [`exit_code`].

use std::fmt::Write as _;

use crate::agenda::Agenda;
use crate::error::{Error, Result};
use crate::format::{parse_profile, render_profile, render_report};
use crate::graphwin::{self, DEFAULT_MAX_UNKNOWN_PAIRS};
use crate::hardness::reduce_partition;
use crate::majority::majority_graph;
use crate::oracle::{self, Source, DEFAULT_EVALUATIONS};
use crate::profwin::{self, Method, Notion, Route, SearchConfig, WinnerReport, DEFAULT_BUDGET};
use crate::selfcheck::{self, SelfCheckConfig, SelfCheckOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_INCOMPLETE: i32 = 5;
pub const EXIT_ODD_SUM: i32 = 6;
pub const EXIT_VIOLATION: i32 = 7;

/// Exit status for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EvenTotalWeight(_) | Error::Cycle(..) => EXIT_INCONSISTENT,
        Error::BudgetExceeded { .. }
        | Error::TooManyUnknownPairs { .. }
        | Error::TooManyCandidates { .. } => EXIT_BUDGET,
        Error::IncompleteGraph(..) => EXIT_INCOMPLETE,
        Error::OddSum(_) => EXIT_ODD_SUM,
        _ => EXIT_PARSE,
    }
}

/// `graph`: the majority graph, one line per pair.
pub fn cmd_graph(profile_text: &str) -> Result<String> {
    let p = parse_profile(profile_text)?;
    Ok(majority_graph(&p).render())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinnersOptions {
    pub notions: Vec<Notion>,
    pub source: Source,
    pub method: Method,
    pub witness: bool,
    pub budget: Option<u64>,
}

impl Default for WinnersOptions {
    fn default() -> Self {
        WinnersOptions {
            notions: Notion::ALL.to_vec(),
            source: Source::Profile,
            method: Method::Auto,
            witness: false,
            budget: None,
        }
    }
}

/// `winners`: report lines for the requested notions.
pub fn cmd_winners(profile_text: &str, opts: &WinnersOptions) -> Result<String> {
    let p = parse_profile(profile_text)?;
    let budget = opts.budget.unwrap_or(match opts.method {
        Method::Brute => DEFAULT_EVALUATIONS,
        _ => DEFAULT_BUDGET,
    });
    let mut reports = Vec::with_capacity(opts.notions.len());
    for &notion in &opts.notions {
        let report = match opts.source {
            Source::Profile => {
                let mut cfg = SearchConfig::default().with_budget(budget);
                cfg.witnesses = opts.witness;
                profwin::solve(&p, notion, opts.method, &cfg)?
            }
            Source::Graph => graph_report(&p, notion, opts.method, budget)?,
        };
        reports.push(report);
    }
    Ok(render_report(p.candidates(), &reports))
}

fn graph_report(p: &crate::Profile, notion: Notion, method: Method, budget: u64) -> Result<WinnerReport> {
    let g = majority_graph(p);
    let (winners, route) = if method == Method::Brute {
        (oracle::graph_winners(&g, notion, budget)?, Route::Brute)
    } else {
        let bound = DEFAULT_MAX_UNKNOWN_PAIRS;
        let w = match notion {
            Notion::Wc => graphwin::wc_graph(&g),
            Notion::Sc => graphwin::sc_graph(&g),
            Notion::Wp => graphwin::wp_graph(&g),
            Notion::Sp => graphwin::sp_graph_bounded(&g, bound)?,
            Notion::Fwc => graphwin::fwc_graph(&g),
            Notion::Fsc => graphwin::fsc_graph(&g),
            Notion::Fwp => graphwin::fwp_graph(&g, bound, budget)?,
            Notion::Fsp => graphwin::fsp_graph(&g, bound, budget)?,
        };
        (w, Route::Fast)
    };
    Ok(WinnerReport {
        notion,
        winners,
        witnesses: Default::default(),
        route,
    })
}

/// `eval`: winner of one agenda on the majority graph.
pub fn cmd_eval(profile_text: &str, agenda_text: &str) -> Result<String> {
    let p = parse_profile(profile_text)?;
    let agenda = Agenda::parse(agenda_text, p.candidates())?;
    let winner = agenda.evaluate(&majority_graph(&p))?;
    Ok(format!("winner: {}\n", p.candidates().name(winner)))
}

/// `reduce`: the partition instance as a profile file, and the designated
/// candidate's name.
pub fn cmd_reduce(integers: &[u64]) -> Result<(String, String)> {
    let r = reduce_partition(integers)?;
    let mut text = String::new();
    let ints: Vec<String> = r.integers.iter().map(u64::to_string).collect();
    let _ = writeln!(text, "# partition instance for {}", ints.join(" "));
    let _ = writeln!(text, "# designated: {}", r.designated_name());
    text.push_str(&render_profile(&r.profile));
    Ok((text, r.designated_name().to_string()))
}

/// `selfcheck`: randomized relation checks.
pub fn cmd_selfcheck(cfg: &SelfCheckConfig) -> Result<SelfCheckOutcome> {
    selfcheck::run(cfg)
}
