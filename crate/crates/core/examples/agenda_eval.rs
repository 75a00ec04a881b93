//! Run every agenda over a majority cycle and count who wins how often.

use std::collections::BTreeMap;

use cupvote::{enumerate_agendas, fixtures, majority_graph};

fn main() -> cupvote::Result<()> {
    let p = fixtures::condorcet_cycle();
    let c = p.candidates();
    let g = majority_graph(&p);
    let mut wins: BTreeMap<&str, usize> = BTreeMap::new();
    for a in enumerate_agendas(c, false) {
        let w = a.evaluate(&g)?;
        println!("{:<12} {}  -> {}", a.render(c), a.depth_profile(), c.name(w));
        *wins.entry(c.name(w)).or_default() += 1;
    }
    println!("{wins:?}");
    Ok(())
}
