//! Seeded random profiles for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{CandidateSet, PartialOrder, Profile, Vote};

/// Shape of sampled profiles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleSpec {
    pub candidates: usize,
    pub max_votes: usize,
    pub max_weight: u64,
    /// Chance that each comparison of the hidden ranking is revealed.
    pub reveal: f64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            candidates: 4,
            max_votes: 4,
            max_weight: 5,
            reveal: 0.4,
        }
    }
}

/// Candidate names `A`, `B`, ..., `Z`, then `C26`, `C27`, ...
pub fn candidate_names(m: usize) -> CandidateSet {
    let names = (0..m).map(|i| {
        if i < 26 {
            ((b'A' + i as u8) as char).to_string()
        } else {
            format!("C{i}")
        }
    });
    CandidateSet::new(names).expect("generated names are valid")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random incomplete weighted profile with an odd total weight. Each vote
/// reveals a random subset of the comparisons of a hidden ranking, closed
/// transitively, so every vote is consistent.
pub fn random_profile<R: Rng>(rng: &mut R, spec: &SampleSpec) -> Profile {
    let m = spec.candidates;
    let c = candidate_names(m);
    let n = rng.random_range(1..=spec.max_votes.max(1));
    let mut votes = Vec::with_capacity(n);
    for _ in 0..n {
        let mut ranking: Vec<usize> = (0..m).collect();
        ranking.shuffle(rng);
        let mut revealed = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if rng.random_bool(spec.reveal) {
                    revealed.push((ranking[a], ranking[b]));
                }
            }
        }
        let order = PartialOrder::close(&c, revealed).expect("subset of a ranking");
        let weight = rng.random_range(1..=spec.max_weight.max(1));
        votes.push((order, weight));
    }
    let total: u64 = votes.iter().map(|v| v.1).sum();
    if total.is_multiple_of(2) {
        let k = rng.random_range(0..votes.len());
        let w = &mut votes[k].1;
        *w = if *w < spec.max_weight { *w + 1 } else { *w - 1 };
    }
    let votes = votes
        .into_iter()
        .map(|(o, w)| Vote::new(o, w).expect("positive weight"))
        .collect();
    Profile::new(c, votes).expect("odd total")
}

/// A complete profile of `n` unit-weight voters with uniform random rankings.
pub fn random_complete_profile<R: Rng>(rng: &mut R, m: usize, n: usize) -> Profile {
    assert!(n % 2 == 1, "odd number of unit voters");
    let c = candidate_names(m);
    let votes = (0..n)
        .map(|_| {
            let mut ranking: Vec<usize> = (0..m).collect();
            ranking.shuffle(rng);
            Vote::new(PartialOrder::from_ranking(&ranking), 1).expect("unit weight")
        })
        .collect();
    Profile::new(c, votes).expect("odd total")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_profiles_respect_spec() {
        let mut r = rng(7);
        let spec = SampleSpec::default();
        for _ in 0..200 {
            let p = random_profile(&mut r, &spec);
            assert_eq!(p.total_weight() % 2, 1);
            assert!(p.votes().len() <= 4);
            assert!(p.votes().iter().all(|v| (1..=5).contains(&v.weight())));
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = SampleSpec::default();
        let a = random_profile(&mut rng(3), &spec);
        let b = random_profile(&mut rng(3), &spec);
        assert_eq!(a, b);
    }
}
