//! Candidates, partial-order votes and weighted profiles.
//!
//! Every [`PartialOrder`] held by this crate is transitively closed and
//! acyclic; raw comparisons go through [`PartialOrder::close`] on the way in.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest accepted vote weight.
pub const MAX_WEIGHT: u64 = (1 << 31) - 1;

/// Ordered set of distinct candidate names. The position of a name is its
/// canonical index everywhere else in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CandidateSet {
    names: Arc<[String]>,
}

impl CandidateSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyCandidateSet);
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::InvalidCandidateName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateCandidate(name.clone()));
            }
        }
        Ok(CandidateSet { names: names.into() })
    }

    /// Number of candidates (m).
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownCandidate(name.to_string()))
    }
}

impl fmt::Debug for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Relation of the first member of a pair to the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Gt,
    Lt,
    Unknown,
}

impl Rel {
    pub fn flip(self) -> Rel {
        match self {
            Rel::Gt => Rel::Lt,
            Rel::Lt => Rel::Gt,
            Rel::Unknown => Rel::Unknown,
        }
    }
}

/// Number of unordered pairs over `m` candidates.
pub fn pair_count(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Flat triangular index of the pair `{i, j}` with `i < j`.
#[inline]
pub(crate) fn pair_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    i * (2 * m - i - 1) / 2 + (j - i - 1)
}

/// Canonical pair order: (0,1), (0,2), ..., (1,2), ...
pub fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
}

/// Triangular three-valued relation storage shared by orders and graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct PairTable {
    m: usize,
    rel: Vec<Rel>,
}

impl PairTable {
    pub(crate) fn unknown(m: usize) -> Self {
        PairTable {
            m,
            rel: vec![Rel::Unknown; pair_count(m)],
        }
    }

    pub(crate) fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> Rel {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.rel[pair_index(self.m, i, j)],
            Greater => self.rel[pair_index(self.m, j, i)].flip(),
            Equal => Rel::Unknown,
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, r: Rel) {
        if i < j {
            self.rel[pair_index(self.m, i, j)] = r;
        } else {
            self.rel[pair_index(self.m, j, i)] = r.flip();
        }
    }

    pub(crate) fn raw(&self) -> &[Rel] {
        &self.rel
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [Rel] {
        &mut self.rel
    }

    pub(crate) fn unknown_count(&self) -> usize {
        self.rel.iter().filter(|&&r| r == Rel::Unknown).count()
    }
}

/// Dense bit rows, one per candidate.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitRows {
            words,
            bits: vec![0; words * n],
        }
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1 << (col % 64);
    }

    fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] & (1 << (col % 64)) != 0
    }

    /// row `dst` |= row `src`
    fn or_row(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let w = self.words;
        let (d, s) = (dst * w, src * w);
        for k in 0..w {
            let v = self.bits[s + k];
            self.bits[d + k] |= v;
        }
    }
}

/// A transitively closed, acyclic strict preference over a candidate set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    table: PairTable,
}

impl PartialOrder {
    /// The order that declares nothing.
    pub fn empty(m: usize) -> Self {
        PartialOrder {
            table: PairTable::unknown(m),
        }
    }

    /// Transitive closure of strict comparisons `(better, worse)` given as
    /// candidate indices.
    pub fn close<I>(candidates: &CandidateSet, comparisons: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let m = candidates.len();
        let mut above = BitRows::new(m);
        for (a, b) in comparisons {
            if a >= m {
                return Err(Error::UnknownCandidate(format!("#{a}")));
            }
            if b >= m {
                return Err(Error::UnknownCandidate(format!("#{b}")));
            }
            if a == b {
                return Err(Error::SelfComparison(candidates.name(a).to_string()));
            }
            above.set(a, b);
        }
        // Warshall over bit rows.
        for k in 0..m {
            for i in 0..m {
                if above.get(i, k) {
                    above.or_row(i, k);
                }
            }
        }
        let mut table = PairTable::unknown(m);
        for (i, j) in pairs(m) {
            match (above.get(i, j), above.get(j, i)) {
                (true, true) => {
                    return Err(Error::Cycle(
                        candidates.name(i).to_string(),
                        candidates.name(j).to_string(),
                    ))
                }
                (true, false) => table.set(i, j, Rel::Gt),
                (false, true) => table.set(i, j, Rel::Lt),
                (false, false) => {}
            }
        }
        if let Some(i) = (0..m).find(|&i| above.get(i, i)) {
            // A self-loop without a two-cycle cannot occur, but keep the
            // error total.
            let name = candidates.name(i).to_string();
            return Err(Error::Cycle(name.clone(), name));
        }
        Ok(PartialOrder { table })
    }

    /// The total order given by `ranking`, best first.
    pub fn from_ranking(ranking: &[usize]) -> Self {
        let m = ranking.len();
        let mut table = PairTable::unknown(m);
        for (pos, &a) in ranking.iter().enumerate() {
            for &b in &ranking[pos + 1..] {
                table.set(a, b, Rel::Gt);
            }
        }
        PartialOrder { table }
    }

    /// Number of candidates the order ranges over.
    pub fn len(&self) -> usize {
        self.table.m()
    }

    pub fn is_empty(&self) -> bool {
        self.table.m() == 0
    }

    pub fn get(&self, a: usize, b: usize) -> Rel {
        self.table.get(a, b)
    }

    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.table.get(a, b) == Rel::Gt
    }

    pub fn is_total(&self) -> bool {
        self.table.unknown_count() == 0
    }

    /// All declared comparisons as `(better, worse)`, in canonical pair order.
    pub fn comparisons(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        pairs(self.len()).filter_map(move |(i, j)| match self.get(i, j) {
            Rel::Gt => Some((i, j)),
            Rel::Lt => Some((j, i)),
            Rel::Unknown => None,
        })
    }

    /// Covering comparisons (transitive reduction).
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut edges = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if self.prefers(a, b)
                    && !(0..m).any(|k| self.prefers(a, k) && self.prefers(k, b))
                {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// True iff every comparison declared by `base` is also declared here.
    pub fn extends(&self, base: &PartialOrder) -> bool {
        self.len() == base.len()
            && base
                .table
                .raw()
                .iter()
                .zip(self.table.raw())
                .all(|(&b, &s)| b == Rel::Unknown || b == s)
    }

    /// Ranking best-first, if the order is total.
    pub fn ranking(&self) -> Option<Vec<usize>> {
        if !self.is_total() {
            return None;
        }
        let m = self.len();
        let mut ranking: Vec<usize> = (0..m).collect();
        ranking.sort_by_key(|&a| (0..m).filter(|&b| self.prefers(b, a)).count());
        Some(ranking)
    }

    /// Every total order extending this one, lexicographic in the ranking.
    pub fn linear_extensions(&self) -> LinearExtensions {
        LinearExtensions::new(self)
    }

    /// A linear extension that places `favoured` as high as the order allows:
    /// only candidates forced above it precede it.
    pub fn extension_favouring(&self, favoured: usize) -> TotalOrder {
        let m = self.len();
        let forced: Vec<bool> = (0..m).map(|c| self.prefers(c, favoured)).collect();
        let mut ranking = Vec::with_capacity(m);
        let mut placed = vec![false; m];
        let mut take = |allowed: &dyn Fn(usize) -> bool, ranking: &mut Vec<usize>| loop {
            let next = (0..m).find(|&c| {
                !placed[c]
                    && allowed(c)
                    && (0..m).all(|p| placed[p] || !self.prefers(p, c))
            });
            match next {
                Some(c) => {
                    placed[c] = true;
                    ranking.push(c);
                }
                None => break,
            }
        };
        take(&|c| forced[c], &mut ranking);
        take(&|c| c == favoured, &mut ranking);
        take(&|_| true, &mut ranking);
        TotalOrder::from_ranking_unchecked(ranking)
    }

    pub(crate) fn table(&self) -> &PairTable {
        &self.table
    }
}

impl fmt::Debug for PartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.comparisons()).finish()
    }
}

/// Closes comparisons given by candidate name, e.g. `[("A", "B"), ("B", "C")]`.
pub fn transitive_close(candidates: &CandidateSet, comparisons: &[(&str, &str)]) -> Result<PartialOrder> {
    let indexed = comparisons
        .iter()
        .map(|&(a, b)| Ok((candidates.lookup(a)?, candidates.lookup(b)?)))
        .collect::<Result<Vec<_>>>()?;
    PartialOrder::close(candidates, indexed)
}

/// A complete ranking, best first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalOrder {
    ranking: Vec<usize>,
}

impl TotalOrder {
    /// `ranking` must be a permutation of `0..ranking.len()`.
    pub fn from_ranking(ranking: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; ranking.len()];
        for &c in &ranking {
            if c >= seen.len() || std::mem::replace(&mut seen[c], true) {
                return None;
            }
        }
        Some(TotalOrder { ranking })
    }

    pub(crate) fn from_ranking_unchecked(ranking: Vec<usize>) -> Self {
        TotalOrder { ranking }
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn to_partial(&self) -> PartialOrder {
        PartialOrder::from_ranking(&self.ranking)
    }
}

/// Lexicographic stream of linear extensions; see
/// [`PartialOrder::linear_extensions`].
pub struct LinearExtensions {
    m: usize,
    below: Vec<Vec<usize>>,
    pending: Vec<usize>,
    placed: Vec<bool>,
    ranking: Vec<usize>,
    cursor: usize,
    done: bool,
}

impl LinearExtensions {
    fn new(order: &PartialOrder) -> Self {
        let m = order.len();
        let mut below = vec![Vec::new(); m];
        let mut pending = vec![0; m];
        for (a, b) in order.comparisons() {
            below[a].push(b);
            pending[b] += 1;
        }
        LinearExtensions {
            m,
            below,
            pending,
            placed: vec![false; m],
            ranking: Vec::with_capacity(m),
            cursor: 0,
            done: m == 0,
        }
    }

    fn place(&mut self, c: usize) {
        self.placed[c] = true;
        for &b in &self.below[c] {
            self.pending[b] -= 1;
        }
        self.ranking.push(c);
        self.cursor = 0;
    }

    fn backtrack(&mut self) {
        let c = self.ranking.pop().expect("backtrack below root");
        self.placed[c] = false;
        for &b in &self.below[c] {
            self.pending[b] += 1;
        }
        self.cursor = c + 1;
    }
}

impl Iterator for LinearExtensions {
    type Item = TotalOrder;

    fn next(&mut self) -> Option<TotalOrder> {
        if self.done {
            return None;
        }
        loop {
            if self.ranking.len() == self.m {
                let out = TotalOrder::from_ranking_unchecked(self.ranking.clone());
                self.backtrack();
                return Some(out);
            }
            let next = (self.cursor..self.m).find(|&c| !self.placed[c] && self.pending[c] == 0);
            match next {
                Some(c) => self.place(c),
                None if self.ranking.is_empty() => {
                    self.done = true;
                    return None;
                }
                None => self.backtrack(),
            }
        }
    }
}

/// A partial order carrying a positive integer weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vote {
    order: PartialOrder,
    weight: u64,
}

impl Vote {
    pub fn new(order: PartialOrder, weight: u64) -> Result<Self> {
        if weight == 0 || weight > MAX_WEIGHT {
            return Err(Error::InvalidWeight(weight));
        }
        Ok(Vote { order, weight })
    }

    pub fn order(&self) -> &PartialOrder {
        &self.order
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }
}

/// Weighted votes over a shared candidate set; the total weight is odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    candidates: CandidateSet,
    votes: Vec<Vote>,
    total_weight: u64,
}

impl Profile {
    pub fn new(candidates: CandidateSet, votes: Vec<Vote>) -> Result<Self> {
        if votes.is_empty() {
            return Err(Error::NoVotes);
        }
        for v in &votes {
            if v.order.len() != candidates.len() {
                return Err(Error::CandidateMismatch {
                    expected: candidates.len(),
                    found: v.order.len(),
                });
            }
        }
        let total_weight: u64 = votes.iter().map(|v| v.weight).sum();
        if total_weight.is_multiple_of(2) {
            return Err(Error::EvenTotalWeight(total_weight));
        }
        Ok(Profile {
            candidates,
            votes,
            total_weight,
        })
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn votes(&self) -> &[Vote] {
        &self.votes
    }

    /// Sum of vote weights (W).
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn is_complete(&self) -> bool {
        self.votes.iter().all(|v| v.order.is_total())
    }

    /// True iff `self` is a completion of `original`: same number of votes,
    /// equal weights, every vote total and extending its counterpart.
    pub fn completes(&self, original: &Profile) -> bool {
        self.candidates == original.candidates
            && self.votes.len() == original.votes.len()
            && self.votes.iter().zip(&original.votes).all(|(c, o)| {
                c.weight == o.weight && c.order.is_total() && c.order.extends(&o.order)
            })
    }

    /// Replaces the vote orders, keeping weights. `orders` must have one
    /// entry per vote over the same candidates.
    pub(crate) fn with_orders(&self, orders: Vec<PartialOrder>) -> Profile {
        debug_assert_eq!(orders.len(), self.votes.len());
        let votes = orders
            .into_iter()
            .zip(&self.votes)
            .map(|(order, v)| Vote {
                order,
                weight: v.weight,
            })
            .collect();
        Profile {
            candidates: self.candidates.clone(),
            votes,
            total_weight: self.total_weight,
        }
    }

    /// Every completion, as the Cartesian product of per-vote linear
    /// extensions (last vote varies fastest).
    pub fn completions(&self) -> ProfileCompletions<'_> {
        let mut cache: HashMap<&PartialOrder, Arc<Vec<PartialOrder>>> = HashMap::new();
        let choices = self
            .votes
            .iter()
            .map(|v| {
                cache
                    .entry(&v.order)
                    .or_insert_with(|| {
                        Arc::new(v.order.linear_extensions().map(|t| t.to_partial()).collect())
                    })
                    .clone()
            })
            .collect();
        ProfileCompletions {
            profile: self,
            choices,
            odometer: vec![0; self.votes.len()],
            done: false,
        }
    }

    /// U(P): each vote of weight k becomes k unit-weight copies.
    pub fn unweighted(&self) -> Profile {
        let votes = self
            .votes
            .iter()
            .flat_map(|v| {
                std::iter::repeat_n(
                    Vote {
                        order: v.order.clone(),
                        weight: 1,
                    },
                    v.weight as usize,
                )
            })
            .collect();
        Profile {
            candidates: self.candidates.clone(),
            votes,
            total_weight: self.total_weight,
        }
    }
}

/// See [`Profile::completions`].
pub struct ProfileCompletions<'a> {
    profile: &'a Profile,
    choices: Vec<Arc<Vec<PartialOrder>>>,
    odometer: Vec<usize>,
    done: bool,
}

impl ProfileCompletions<'_> {
    /// Number of completions, saturating.
    pub fn total(&self) -> u64 {
        self.choices
            .iter()
            .fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64))
    }
}

impl Iterator for ProfileCompletions<'_> {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.done {
            return None;
        }
        let orders = self
            .odometer
            .iter()
            .zip(&self.choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let out = self.profile.with_orders(orders);
        // advance, last position fastest
        self.done = true;
        for pos in (0..self.odometer.len()).rev() {
            self.odometer[pos] += 1;
            if self.odometer[pos] < self.choices[pos].len() {
                self.done = false;
                break;
            }
            self.odometer[pos] = 0;
        }
        Some(out)
    }
}

/// Free-function form of [`PartialOrder::linear_extensions`].
pub fn linear_extensions(order: &PartialOrder) -> LinearExtensions {
    order.linear_extensions()
}

/// Free-function form of [`Profile::completions`].
pub fn profile_completions(profile: &Profile) -> ProfileCompletions<'_> {
    profile.completions()
}

/// Free-function form of [`Profile::unweighted`].
pub fn unweighted_expand(profile: &Profile) -> Profile {
    profile.unweighted()
}
