//! Parse a weighted incomplete profile and print its majority graph.

use cupvote::format::parse_profile;
use cupvote::majority_graph;

const PROFILE: &str = "\
candidates: A B C
vote 1: A>B>C
vote 2: B>A
vote 2: A>B, C>B
";

fn main() -> cupvote::Result<()> {
    let p = parse_profile(PROFILE)?;
    let g = majority_graph(&p);
    println!("total weight {}, {} unknown pair(s)", p.total_weight(), g.unknown_count());
    print!("{}", g.render());
    Ok(())
}
