//! All eight winner notions of a profile, with a witness for each possible
//! winner: a completion of the votes and an agenda the candidate wins.

use cupvote::format::{parse_profile, render_report};
use cupvote::profwin::{solve, verify_witness};
use cupvote::{Method, Notion, SearchConfig};

const PROFILE: &str = "\
candidates: A B C D
vote 3: A>B, C>D
vote 1: D>A>C
vote 1: B>D
";

fn main() -> cupvote::Result<()> {
    let p = parse_profile(PROFILE)?;
    let cfg = SearchConfig::default().with_witnesses();
    let mut reports = Vec::new();
    for notion in Notion::ALL {
        let r = solve(&p, notion, Method::Auto, &cfg)?;
        for (&c, w) in &r.witnesses {
            assert!(verify_witness(c, &w.completion, &w.agenda, &p, notion.is_fair()));
        }
        reports.push(r);
    }
    print!("{}", render_report(p.candidates(), &reports));
    Ok(())
}
