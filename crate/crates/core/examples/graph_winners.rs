//! Winner sets of a partially known majority graph.

use cupvote::graphwin::{fwp_graph, graph_winners, DEFAULT_MAX_UNKNOWN_PAIRS};
use cupvote::{CandidateSet, MajorityGraph};

fn show(c: &CandidateSet, label: &str, set: &std::collections::BTreeSet<usize>) {
    println!("{label}: {}", cupvote::format::render_set(c, set));
}

fn main() -> cupvote::Result<()> {
    let c = CandidateSet::new(["A", "B", "C", "D"])?;
    let mut g = MajorityGraph::unknown(c.clone());
    // A beats B and C, D beats A, B beats C; D's contests with B and C are open.
    g.set_beats(0, 1);
    g.set_beats(0, 2);
    g.set_beats(3, 0);
    g.set_beats(1, 2);
    print!("{}", g.render());

    let sets = graph_winners(&g)?;
    show(&c, "WC", &sets.wc);
    show(&c, "SC", &sets.sc);
    show(&c, "WP", &sets.wp);
    show(&c, "SP", &sets.sp);
    show(&c, "FWP", &fwp_graph(&g, DEFAULT_MAX_UNKNOWN_PAIRS, u64::MAX)?);
    Ok(())
}
