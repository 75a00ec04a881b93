//! Number partitioning to weak possible winners.
//!
//! For integers `k_1..k_n` summing to `2k` the instance over A, B, C is
//!
//! | order     | weight   |
//! |-----------|----------|
//! | B > C > A | 1        |
//! | B > A > C | 2k - 1   |
//! | C > B > A | 2k - 1   |
//! | A > B     | 2k_i each|
//!
//! A beats B in every completion, so B can only win by beating C after C
//! beats A. Both need at least half of the partial weight and the partial
//! votes that put B over C cannot put C over A, so B is a weak possible
//! winner exactly when the integers split into two halves of sum `k`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::{CandidateSet, PartialOrder, Profile, Vote};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub integers: Vec<u64>,
    pub profile: Profile,
    pub designated: usize,
    /// Half of the integers' sum.
    pub k: u64,
}

impl ReductionInstance {
    pub fn designated_name(&self) -> &str {
        self.profile.candidates().name(self.designated)
    }
}

pub fn reduce_partition(integers: &[u64]) -> Result<ReductionInstance> {
    if integers.contains(&0) {
        return Err(Error::NonPositiveInteger);
    }
    let sum: u64 = integers.iter().sum();
    if sum % 2 == 1 {
        return Err(Error::OddSum(sum));
    }
    let k = sum / 2;
    let c = CandidateSet::new(["A", "B", "C"])?;
    let (a, b, cc) = (0, 1, 2);
    let total = |r: &[usize], w| Vote::new(PartialOrder::from_ranking(r), w);
    let mut votes = vec![
        total(&[b, cc, a], 1)?,
        total(&[b, a, cc], 2 * k - 1)?,
        total(&[cc, b, a], 2 * k - 1)?,
    ];
    let a_over_b = PartialOrder::close(&c, [(a, b)])?;
    for &ki in integers {
        votes.push(Vote::new(a_over_b.clone(), 2 * ki)?);
    }
    Ok(ReductionInstance {
        integers: integers.to_vec(),
        profile: Profile::new(c, votes)?,
        designated: b,
        k,
    })
}

/// Adds `extra` candidates below A, B and C in every vote, ordered among
/// themselves as given.
pub fn extend_candidates(r: &ReductionInstance, extra: &[&str]) -> Result<ReductionInstance> {
    let old = r.profile.candidates();
    for name in extra {
        if old.index_of(name).is_some() {
            return Err(Error::CandidateClash(name.to_string()));
        }
    }
    let c = CandidateSet::new(old.names().chain(extra.iter().copied()))?;
    let base = old.len();
    let m = c.len();
    let votes = r
        .profile
        .votes()
        .iter()
        .map(|v| {
            let mut rels: Vec<(usize, usize)> = v.order().comparisons().collect();
            for x in 0..base {
                rels.extend((base..m).map(|e| (x, e)));
            }
            rels.extend((base..m.saturating_sub(1)).map(|e| (e, e + 1)));
            Vote::new(PartialOrder::close(&c, rels)?, v.weight())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReductionInstance {
        integers: r.integers.clone(),
        profile: Profile::new(c, votes)?,
        designated: r.designated,
        k: r.k,
    })
}

/// True iff some sub-multiset sums to half the total. Meet in the middle
/// over subset sums of the two halves of the input.
pub fn partition_exists(integers: &[u64]) -> bool {
    let sum: u64 = integers.iter().sum();
    if sum % 2 == 1 {
        return false;
    }
    let target = sum / 2;
    let (left, right) = integers.split_at(integers.len() / 2);
    let right_sums: HashSet<u64> = subset_sums(right).into_iter().collect();
    subset_sums(left)
        .into_iter()
        .any(|s| s <= target && right_sums.contains(&(target - s)))
}

fn subset_sums(xs: &[u64]) -> Vec<u64> {
    let mut sums = vec![0u64];
    for &x in xs {
        let n = sums.len();
        for i in 0..n {
            sums.push(sums[i] + x);
        }
    }
    sums
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majority::majority_graph;
    use crate::model::Rel;

    fn weight_with(p: &Profile, a: usize, b: usize, complete_only: bool) -> u64 {
        p.votes()
            .iter()
            .filter(|v| !complete_only || v.order().is_total())
            .filter(|v| v.order().get(a, b) == Rel::Gt)
            .map(|v| v.weight())
            .sum()
    }

    #[test]
    fn two_two_instance() {
        let r = reduce_partition(&[2, 2]).unwrap();
        let weights: Vec<u64> = r.profile.votes().iter().map(|v| v.weight()).collect();
        assert_eq!(weights, [1, 3, 3, 4, 4]);
        assert_eq!(r.profile.total_weight(), 15);
        assert_eq!(r.k, 2);
        assert_eq!(r.designated_name(), "B");
        let rankings: Vec<Option<Vec<usize>>> =
            r.profile.votes().iter().map(|v| v.order().ranking()).collect();
        assert_eq!(rankings[0], Some(vec![1, 2, 0]));
        assert_eq!(rankings[1], Some(vec![1, 0, 2]));
        assert_eq!(rankings[2], Some(vec![2, 1, 0]));
        for v in &r.profile.votes()[3..] {
            assert_eq!(v.order().comparisons().collect::<Vec<_>>(), vec![(0, 1)]);
        }
    }

    #[test]
    fn margins_on_complete_part() {
        for ints in [&[1u64, 1][..], &[2, 2], &[1, 3], &[3, 5, 8], &[4, 4, 2]] {
            let r = reduce_partition(ints).unwrap();
            let p = &r.profile;
            let k = r.k;
            let m = |a, b| weight_with(p, a, b, true) as i64 - weight_with(p, b, a, true) as i64;
            assert_eq!(m(1, 0), 4 * k as i64 - 1);
            assert_eq!(m(1, 2), 1);
            assert_eq!(m(2, 0), 1);
            assert_eq!(p.total_weight(), 8 * k - 1);
            // Every completion keeps A over B: check on the majority graph.
            assert!(majority_graph(p).beats(0, 1));
        }
    }

    #[test]
    fn odd_sum_and_zero_rejected() {
        assert_eq!(reduce_partition(&[1, 2]).unwrap_err(), Error::OddSum(3));
        assert_eq!(reduce_partition(&[0, 2]).unwrap_err(), Error::NonPositiveInteger);
    }

    #[test]
    fn partition_oracle() {
        assert!(partition_exists(&[2, 2]));
        assert!(!partition_exists(&[1, 3]));
        assert!(partition_exists(&[3, 5, 8]));
        assert!(!partition_exists(&[1, 2]));
        assert!(partition_exists(&[]));
        assert!(!partition_exists(&[2, 4, 8]));
    }

    #[test]
    fn extension_places_extras_last() {
        let r = reduce_partition(&[2, 2]).unwrap();
        assert_eq!(extend_candidates(&r, &[]).unwrap(), r);
        let e = extend_candidates(&r, &["D", "E"]).unwrap();
        assert_eq!(e.profile.candidates().len(), 5);
        for v in e.profile.votes() {
            for x in 0..3 {
                assert!(v.order().prefers(x, 3) && v.order().prefers(x, 4));
            }
            assert!(v.order().prefers(3, 4));
        }
        assert_eq!(e.profile.votes()[3].order().linear_extensions().count(), 3);
        assert_eq!(
            extend_candidates(&r, &["A"]).unwrap_err(),
            Error::CandidateClash("A".into())
        );
    }
}
