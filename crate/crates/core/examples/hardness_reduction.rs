//! Partition instances turned into weak possible winner questions.
//!
//! `cargo run --example hardness_reduction -- 3 1 1 2 2 1`

use cupvote::format::render_profile;
use cupvote::hardness::{partition_exists, reduce_partition};
use cupvote::profwin::wp_profile;
use cupvote::SearchConfig;

fn main() -> cupvote::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("positive integers"))
        .collect();
    let instances = if args.is_empty() {
        vec![vec![1, 3], vec![2, 2], vec![3, 1, 1, 2, 2, 1]]
    } else {
        vec![args]
    };
    for ints in instances {
        let r = reduce_partition(&ints)?;
        let wp = wp_profile(&r.profile, &SearchConfig::default())?;
        println!(
            "{ints:?}: partition {}, {} possible winner {}",
            partition_exists(&ints),
            r.designated_name(),
            wp.winners.contains(&r.designated)
        );
        println!("{}", render_profile(&r.profile));
    }
    Ok(())
}
