//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cupvote::fixtures;
use cupvote::graphwin::{sc_graph, sp_graph, wc_graph, wp_graph};
use cupvote::hardness::{partition_exists, reduce_partition};
use cupvote::model::pairs;
use cupvote::oracle;
use cupvote::profwin::{self, verify_witness};
use cupvote::sample::{random_complete_profile, random_profile, rng, SampleSpec};
use cupvote::selfcheck::{check_profile, PROPERTIES};
use cupvote::{majority_graph, CandidateSet, MajorityGraph, Notion, Profile, Rel, SearchConfig, WinnerReport};

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

/// Witness tally shared by criteria 2 to 6.
#[derive(Default)]
struct Witnesses {
    checked: usize,
    failed: usize,
}

impl Witnesses {
    fn check(&mut self, p: &Profile, r: &WinnerReport) {
        for (&c, w) in &r.witnesses {
            self.checked += 1;
            let ok = r.winners.contains(&c)
                && verify_witness(c, &w.completion, &w.agenda, p, r.notion.is_fair());
            if !ok {
                self.failed += 1;
            }
        }
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn report(id: usize, name: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = run();
    let elapsed = start.elapsed();
    let pass = out.ok && elapsed < limit;
    println!(
        "{} {id}. {name}: {} [{:.3?} / limit {:?}]",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed,
        limit
    );
    pass
}

fn example_graph() -> Outcome {
    let p = fixtures::weighted_three_voter();
    let g = majority_graph(&p);
    let rendered = g.render();
    Outcome {
        ok: rendered == "A > B\nA ? C\nB ? C\n",
        detail: rendered.trim_end().replace('\n', ", "),
    }
}

fn example_sets(w: &mut Witnesses) -> Outcome {
    let p = fixtures::weighted_three_voter();
    let cfg = SearchConfig::default().with_witnesses();
    let run = || -> cupvote::Result<[WinnerReport; 4]> {
        Ok([
            profwin::wc_profile_search(&p, &cfg)?,
            profwin::sc_profile_search(&p, &cfg)?,
            profwin::wp_profile(&p, &cfg)?,
            profwin::sp_profile(&p, &cfg)?,
        ])
    };
    match run() {
        Ok(reports) => {
            reports.iter().for_each(|r| w.check(&p, r));
            let got: Vec<&BTreeSet<usize>> = reports.iter().map(|r| &r.winners).collect();
            let want = [set(&[0, 2]), set(&[]), set(&[0, 1, 2]), set(&[])];
            Outcome {
                ok: got.iter().zip(&want).all(|(a, b)| *a == b),
                detail: format!("WC {:?} SC {:?} WP {:?} SP {:?}", got[0], got[1], got[2], got[3]),
            }
        }
        Err(e) => Outcome {
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn strict_inclusion(w: &mut Witnesses) -> Outcome {
    let p = fixtures::single_partial_voter();
    let graph = wp_graph(&majority_graph(&p));
    match profwin::wp_profile(&p, &SearchConfig::default().with_witnesses()) {
        Ok(r) => {
            w.check(&p, &r);
            Outcome {
                ok: graph == set(&[0, 1, 2]) && r.winners == set(&[0, 2]),
                detail: format!("WP(M(P)) {graph:?}, WP(P) {:?}", r.winners),
            }
        }
        Err(e) => Outcome {
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn all_graphs_on(m: usize) -> impl Iterator<Item = MajorityGraph> {
    let c = CandidateSet::new(["A", "B", "C", "D", "E"][..m].iter().copied()).expect("names");
    let ps: Vec<(usize, usize)> = pairs(m).collect();
    let total = 3usize.pow(ps.len() as u32);
    (0..total).map(move |mut code| {
        let mut g = MajorityGraph::unknown(c.clone());
        for &(i, j) in &ps {
            let rel = [Rel::Gt, Rel::Lt, Rel::Unknown][code % 3];
            code /= 3;
            g.set(i, j, rel);
        }
        g
    })
}

fn graph_oracle() -> Outcome {
    let mut graphs = 0;
    let mut mismatches = 0;
    for g in all_graphs_on(4) {
        graphs += 1;
        let o = |n| oracle::graph_winners(&g, n, oracle::DEFAULT_EVALUATIONS).expect("small");
        let fast = [
            wc_graph(&g),
            sc_graph(&g),
            wp_graph(&g),
            sp_graph(&g).expect("at most six unknown pairs"),
        ];
        let slow = [o(Notion::Wc), o(Notion::Sc), o(Notion::Wp), o(Notion::Sp)];
        if fast != slow {
            mismatches += 1;
        }
    }
    Outcome {
        ok: graphs == 729 && mismatches == 0,
        detail: format!("{graphs} graphs, {mismatches} discrepancies"),
    }
}

fn relation_suite() -> Outcome {
    let spec = SampleSpec {
        candidates: 4,
        max_votes: 4,
        max_weight: 5,
        ..SampleSpec::default()
    };
    let mut r = rng(2024);
    let mut violations = Vec::new();
    let mut checks = 0usize;
    for trial in 0..500 {
        let m = 1 + trial % 4;
        let p = random_profile(&mut r, &SampleSpec { candidates: m, ..spec });
        match check_profile(&p, profwin::DEFAULT_BUDGET) {
            Ok(results) => {
                for (k, res) in results.iter().enumerate() {
                    match res {
                        Some(true) => checks += 1,
                        Some(false) => violations.push(format!("trial {trial}: {}", PROPERTIES[k])),
                        None => {}
                    }
                }
            }
            Err(e) => violations.push(format!("trial {trial}: {e}")),
        }
    }
    Outcome {
        ok: violations.is_empty(),
        detail: if violations.is_empty() {
            format!("500 profiles, {checks} relation checks incl. witnesses, 0 violations")
        } else {
            format!("{} violations, first: {}", violations.len(), violations[0])
        },
    }
}

/// Multisets of `len` values in 1..=4, nondecreasing.
fn multisets(len: usize) -> Vec<Vec<u64>> {
    fn go(len: usize, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in min..=4 {
            cur.push(v);
            go(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, &mut Vec::new(), &mut out);
    out
}

fn reduction(w: &mut Witnesses) -> Outcome {
    let cfg = SearchConfig::default().with_witnesses();
    let mut instances = 0;
    let mut mismatches = Vec::new();
    for len in 2..=4 {
        for ints in multisets(len) {
            if ints.iter().sum::<u64>() % 2 == 1 {
                continue;
            }
            instances += 1;
            let r = reduce_partition(&ints).expect("even sum");
            let expected = partition_exists(&ints);
            for notion in [Notion::Wp, Notion::Fwp] {
                let rep = match notion {
                    Notion::Wp => profwin::wp_profile(&r.profile, &cfg),
                    _ => profwin::fwp_profile(&r.profile, &cfg),
                };
                match rep {
                    Ok(rep) => {
                        w.check(&r.profile, &rep);
                        if rep.winners.contains(&r.designated) != expected {
                            mismatches.push(format!("{notion} {ints:?}"));
                        }
                    }
                    Err(e) => mismatches.push(format!("{notion} {ints:?}: {e}")),
                }
            }
        }
    }
    Outcome {
        ok: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!("{instances} instances x {{WP, FWP}}, 0 mismatches")
        } else {
            format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
        },
    }
}

fn witness_soundness(w: &Witnesses, suite_passed: bool) -> Outcome {
    Outcome {
        ok: w.checked > 0 && w.failed == 0 && suite_passed,
        detail: format!(
            "{} of {} direct witnesses verified; random-profile witnesses {}",
            w.checked - w.failed,
            w.checked,
            if suite_passed { "verified" } else { "NOT verified" }
        ),
    }
}

fn scaling() -> Outcome {
    let p = random_complete_profile(&mut rng(500), 500, 21);
    let wc = profwin::wc_profile(&p);
    let sc = profwin::sc_profile(&p);
    Outcome {
        ok: sc.is_subset(&wc) && sc.len() <= 1,
        detail: format!("m=500, 21 voters: |WC|={} |SC|={}", wc.len(), sc.len()),
    }
}

fn main() -> ExitCode {
    let mut w = Witnesses::default();
    let ms = Duration::from_millis;
    let secs = Duration::from_secs;
    let mut results = vec![
        report(1, "majority graph of the weighted three-voter profile", ms(1), example_graph),
        report(2, "profile winner sets of the weighted three-voter profile", secs(1), || {
            example_sets(&mut w)
        }),
        report(3, "WP(P) strictly inside WP(M(P)) for a single partial voter", secs(1), || {
            strict_inclusion(&mut w)
        }),
        report(4, "graph-level sets equal the oracle on all 729 four-candidate graphs", secs(60), graph_oracle),
    ];
    let mut suite_ok = false;
    results.push(report(5, "relation suite on 500 random incomplete profiles", secs(300), || {
        let out = relation_suite();
        suite_ok = out.ok;
        out
    }));
    results.push(report(6, "partition reduction: B possible iff a partition exists", secs(600), || {
        reduction(&mut w)
    }));
    results.push(report(7, "every emitted witness verifies", secs(1), || witness_soundness(&w, suite_ok)));
    results.push(report(8, "Condorcet sets of a complete 500-candidate profile", secs(5), scaling));
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
