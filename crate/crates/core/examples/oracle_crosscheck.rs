//! Compare the solvers with literal enumeration on random small profiles.

use cupvote::oracle::{profile_winners, DEFAULT_EVALUATIONS};
use cupvote::profwin::solve;
use cupvote::sample::{random_profile, rng, SampleSpec};
use cupvote::{Method, Notion, SearchConfig};

fn main() -> cupvote::Result<()> {
    let spec = SampleSpec {
        candidates: 3,
        max_votes: 3,
        ..SampleSpec::default()
    };
    let mut r = rng(42);
    let cfg = SearchConfig::default();
    let mut checked = 0;
    for _ in 0..200 {
        let p = random_profile(&mut r, &spec);
        for notion in Notion::ALL {
            let fast = solve(&p, notion, Method::Auto, &cfg)?.winners;
            let slow = profile_winners(&p, notion, DEFAULT_EVALUATIONS)?;
            assert_eq!(fast, slow, "{notion}\n{}", cupvote::format::render_profile(&p));
            checked += 1;
        }
    }
    println!("{checked} winner sets agree with enumeration");
    Ok(())
}
