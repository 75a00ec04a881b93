//! Small reference profiles used by the examples and tests.

use crate::model::{transitive_close, CandidateSet, PartialOrder, Profile, Vote};

fn abc() -> CandidateSet {
    CandidateSet::new(["A", "B", "C"]).expect("valid names")
}

fn vote(c: &CandidateSet, rels: &[(&str, &str)], weight: u64) -> Vote {
    Vote::new(transitive_close(c, rels).expect("consistent"), weight).expect("valid weight")
}

/// Three weighted voters over A, B, C: `A>B>C` (1), `B>A` (2), `A>B, C>B` (2).
/// Its majority graph has the single edge A -> B.
pub fn weighted_three_voter() -> Profile {
    let c = abc();
    let votes = vec![
        vote(&c, &[("A", "B"), ("B", "C")], 1),
        vote(&c, &[("B", "A")], 2),
        vote(&c, &[("A", "B"), ("C", "B")], 2),
    ];
    Profile::new(c, votes).expect("odd total")
}

/// One voter declaring only `A>B`. B wins some completion of the majority
/// graph but no completion of the profile.
pub fn single_partial_voter() -> Profile {
    let c = abc();
    let votes = vec![vote(&c, &[("A", "B")], 1)];
    Profile::new(c, votes).expect("odd total")
}

/// Unit voters `A>B>C`, `B>C>A`, `C>A>B`: a majority cycle.
pub fn condorcet_cycle() -> Profile {
    let c = abc();
    let votes = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
        .iter()
        .map(|r| Vote::new(PartialOrder::from_ranking(r), 1).expect("unit weight"))
        .collect();
    Profile::new(c, votes).expect("odd total")
}

/// A single complete voter `A>B>C`; A is the Condorcet winner.
pub fn condorcet_winner() -> Profile {
    let c = abc();
    let votes = vec![Vote::new(PartialOrder::from_ranking(&[0, 1, 2]), 1).expect("unit weight")];
    Profile::new(c, votes).expect("odd total")
}
