//! Seeded randomized check of the relations between winner notions.

use cupvote::selfcheck::{run, SelfCheckConfig};

fn main() -> cupvote::Result<()> {
    let out = run(&SelfCheckConfig {
        candidates: 4,
        max_votes: 3,
        trials: 50,
        seed: 7,
        ..SelfCheckConfig::default()
    })?;
    print!("{}", out.text);
    std::process::exit(if out.passed { 0 } else { 1 });
}
