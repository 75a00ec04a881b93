//! Agendas: binary trees with one candidate per leaf.
//!
//! Text form: `node := NAME | '(' node ',' node ')'`, whitespace ignored.
//! The canonical form puts, at every internal node, the child holding the
//! smaller candidate index first. Swapping children never changes the winner,
//! so enumeration yields one agenda per swap class.

use std::fmt;

use crate::error::{Error, Result};
use crate::majority::MajorityGraph;
use crate::model::{CandidateSet, Rel};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf(usize),
    Match(Box<Node>, Box<Node>),
}

impl Node {
    pub fn leaf(c: usize) -> Node {
        Node::Leaf(c)
    }

    pub fn pair(a: Node, b: Node) -> Node {
        Node::Match(Box::new(a), Box::new(b))
    }

    fn min_leaf(&self) -> usize {
        match self {
            Node::Leaf(c) => *c,
            Node::Match(a, b) => a.min_leaf().min(b.min_leaf()),
        }
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(c) => out.push(*c),
            Node::Match(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    fn canonical(&self) -> Node {
        match self {
            Node::Leaf(c) => Node::Leaf(*c),
            Node::Match(a, b) => {
                let (a, b) = (a.canonical(), b.canonical());
                if a.min_leaf() <= b.min_leaf() {
                    Node::pair(a, b)
                } else {
                    Node::pair(b, a)
                }
            }
        }
    }

    fn depth_range(&self) -> (usize, usize) {
        match self {
            Node::Leaf(_) => (0, 0),
            Node::Match(a, b) => {
                let (alo, ahi) = a.depth_range();
                let (blo, bhi) = b.depth_range();
                (1 + alo.min(blo), 1 + ahi.max(bhi))
            }
        }
    }

    fn evaluate(&self, g: &MajorityGraph) -> Result<usize> {
        match self {
            Node::Leaf(c) => Ok(*c),
            Node::Match(a, b) => {
                let (x, y) = (a.evaluate(g)?, b.evaluate(g)?);
                match g.get(x, y) {
                    Rel::Gt => Ok(x),
                    Rel::Lt => Ok(y),
                    Rel::Unknown => Err(Error::IncompleteGraph(
                        g.candidates().name(x.min(y)).to_string(),
                        g.candidates().name(x.max(y)).to_string(),
                    )),
                }
            }
        }
    }

    fn write(&self, names: &CandidateSet, out: &mut String) {
        match self {
            Node::Leaf(c) => out.push_str(names.name(*c)),
            Node::Match(a, b) => {
                out.push('(');
                a.write(names, out);
                out.push(',');
                b.write(names, out);
                out.push(')');
            }
        }
    }
}

/// Smallest and largest leaf depth, counted in edges from the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeafDepthProfile {
    pub min_depth: usize,
    pub max_depth: usize,
}

/// A validated agenda over `m` candidates, each appearing exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Agenda {
    root: Node,
    m: usize,
}

impl Agenda {
    pub fn new(root: Node, candidates: &CandidateSet) -> Result<Self> {
        let m = candidates.len();
        let mut leaves = Vec::new();
        root.collect_leaves(&mut leaves);
        let mut seen = vec![false; m];
        for &c in &leaves {
            if c >= m {
                return Err(Error::UnknownCandidate(format!("#{c}")));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::DuplicateLeaf(candidates.name(c).to_string()));
            }
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::MissingCandidate(candidates.name(c).to_string()));
        }
        Ok(Agenda { root, m })
    }

    pub(crate) fn from_node_unchecked(root: Node, m: usize) -> Self {
        Agenda { root, m }
    }

    pub fn parse(text: &str, candidates: &CandidateSet) -> Result<Self> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
            candidates,
        };
        let root = parser.node()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input after agenda"));
        }
        Agenda::new(root, candidates)
    }

    pub fn render(&self, candidates: &CandidateSet) -> String {
        let mut out = String::new();
        self.root.write(candidates, &mut out);
        out
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Number of candidates (leaves).
    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.m);
        self.root.collect_leaves(&mut out);
        out
    }

    pub fn canonical(&self) -> Agenda {
        Agenda {
            root: self.root.canonical(),
            m: self.m,
        }
    }

    pub fn depth_profile(&self) -> LeafDepthProfile {
        let (min_depth, max_depth) = self.root.depth_range();
        LeafDepthProfile {
            min_depth,
            max_depth,
        }
    }

    /// Leaf depths differ by at most one.
    pub fn is_balanced(&self) -> bool {
        let d = self.depth_profile();
        d.max_depth - d.min_depth <= 1
    }

    /// Winner at the root. Fails if a consulted contest is unknown in `g`.
    pub fn evaluate(&self, g: &MajorityGraph) -> Result<usize> {
        assert_eq!(g.len(), self.m, "agenda and graph disagree on candidates");
        self.root.evaluate(g)
    }
}

/// Free-function form of [`Agenda::evaluate`].
pub fn evaluate(agenda: &Agenda, g: &MajorityGraph) -> Result<usize> {
    agenda.evaluate(g)
}

/// Free-function form of [`Agenda::is_balanced`].
pub fn is_balanced(agenda: &Agenda) -> bool {
    agenda.is_balanced()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    candidates: &'a CandidateSet,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            line: 1,
            msg: format!("{msg} (column {})", self.pos + 1),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", ch as char)))
        }
    }

    fn node(&mut self) -> Result<Node> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let a = self.node()?;
                self.expect(b',')?;
                let b = self.node()?;
                self.expect(b')')?;
                Ok(Node::pair(a, b))
            }
            Some(c) if c.is_ascii_alphanumeric() || *c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Node::Leaf(self.candidates.lookup(name)?))
            }
            Some(_) => Err(self.error("expected candidate or `(`")),
            None => Err(self.error("unexpected end of agenda")),
        }
    }
}

/// Leaf-depth window `(min, max)` shared by every balanced tree with `n`
/// leaves.
pub(crate) fn balanced_depths(n: usize) -> (usize, usize) {
    debug_assert!(n >= 1);
    let lo = n.ilog2() as usize;
    if n.is_power_of_two() {
        (lo, lo)
    } else {
        (lo, lo + 1)
    }
}

/// Whether balanced subtrees with `l` and `r` leaves join into a balanced
/// tree.
pub(crate) fn balanced_split(l: usize, r: usize) -> bool {
    let (llo, lhi) = balanced_depths(l);
    let (rlo, rhi) = balanced_depths(r);
    lhi.max(rhi) - llo.min(rlo) <= 1
}

/// Canonical agendas for subset `set` (bit mask of candidate indices).
fn agendas_over(set: u64, balanced_only: bool) -> Vec<Node> {
    if set.count_ones() == 1 {
        return vec![Node::Leaf(set.trailing_zeros() as usize)];
    }
    let low = set & set.wrapping_neg();
    let rest = set ^ low;
    let mut out = Vec::new();
    // `right` ranges over non-empty subsets of `rest`; `left` keeps the
    // smallest candidate, which fixes the canonical orientation.
    let mut right = rest;
    while right != 0 {
        let left = set ^ right;
        let ok = !balanced_only
            || balanced_split(left.count_ones() as usize, right.count_ones() as usize);
        if ok {
            let ls = agendas_over(left, balanced_only);
            let rs = agendas_over(right, balanced_only);
            for l in &ls {
                for r in &rs {
                    out.push(Node::pair(l.clone(), r.clone()));
                }
            }
        }
        right = (right - 1) & rest;
    }
    out
}

/// One canonical agenda per child-swap class over all candidates of `c`,
/// optionally only balanced ones. Supports up to 64 candidates, though the
/// count grows as (2m-3)!!.
pub fn enumerate_agendas(c: &CandidateSet, balanced_only: bool) -> impl Iterator<Item = Agenda> {
    let m = c.len();
    assert!(m <= 64, "agenda enumeration supports at most 64 candidates");
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    agendas_over(full, balanced_only)
        .into_iter()
        .map(move |root| Agenda { root, m })
}

impl fmt::Display for LeafDepthProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "depth {}..={}", self.min_depth, self.max_depth)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cands(n: usize) -> CandidateSet {
        CandidateSet::new(["A", "B", "C", "D", "E", "F"][..n].iter().copied()).unwrap()
    }

    fn graph(c: &CandidateSet, edges: &[(usize, usize)]) -> MajorityGraph {
        let mut g = MajorityGraph::unknown(c.clone());
        for &(a, b) in edges {
            g.set_beats(a, b);
        }
        g
    }

    #[test]
    fn parse_and_render() {
        let c = cands(4);
        let t = Agenda::parse("((A,B),(C,D))", &c).unwrap();
        assert_eq!(t.render(&c), "((A,B),(C,D))");
        let c3 = cands(3);
        let t = Agenda::parse(" ( C, ( B , A ) ) ", &c3).unwrap();
        assert_eq!(t.render(&c3), "(C,(B,A))");
        assert_eq!(t.canonical().render(&c3), "((A,B),C)");
    }

    #[test]
    fn parse_errors() {
        let c = cands(3);
        assert_eq!(
            Agenda::parse("((A,A),B)", &c).unwrap_err(),
            Error::DuplicateLeaf("A".into())
        );
        assert_eq!(
            Agenda::parse("(A,B)", &c).unwrap_err(),
            Error::MissingCandidate("C".into())
        );
        assert!(matches!(Agenda::parse("((A,B),C", &c), Err(Error::Syntax { .. })));
        assert!(matches!(Agenda::parse("((A,B),C))", &c), Err(Error::Syntax { .. })));
        assert!(matches!(Agenda::parse("((A;B),C)", &c), Err(Error::Syntax { .. })));
        assert_eq!(
            Agenda::parse("((A,B),Z)", &c).unwrap_err(),
            Error::UnknownCandidate("Z".into())
        );
    }

    #[test]
    fn evaluate_examples() {
        let c = cands(3);
        let t = Agenda::parse("((A,B),C)", &c).unwrap();
        assert_eq!(t.evaluate(&graph(&c, &[(0, 1), (0, 2)])).unwrap(), 0);
        assert_eq!(t.evaluate(&graph(&c, &[(0, 1), (0, 2), (1, 2)])).unwrap(), 0);
        // 3-cycle A>B>C>A: A beats B, then C beats A.
        assert_eq!(t.evaluate(&graph(&c, &[(0, 1), (1, 2), (2, 0)])).unwrap(), 2);
        let single = cands(1);
        let leaf = Agenda::parse("A", &single).unwrap();
        assert_eq!(leaf.evaluate(&MajorityGraph::unknown(single)).unwrap(), 0);
    }

    #[test]
    fn evaluate_reports_unknown_contest() {
        let c = cands(3);
        let t = Agenda::parse("((A,B),C)", &c).unwrap();
        assert_eq!(
            t.evaluate(&graph(&c, &[(0, 1)])).unwrap_err(),
            Error::IncompleteGraph("A".into(), "C".into())
        );
    }

    #[test]
    fn balance_examples() {
        let c = cands(4);
        assert!(Agenda::parse("((A,B),(C,D))", &c).unwrap().is_balanced());
        assert!(!Agenda::parse("(((A,B),C),D)", &c).unwrap().is_balanced());
        let c3 = cands(3);
        let t = Agenda::parse("((A,B),C)", &c3).unwrap();
        assert!(t.is_balanced());
        assert_eq!(t.depth_profile(), LeafDepthProfile { min_depth: 1, max_depth: 2 });
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_agendas(&cands(1), false).count(), 1);
        assert_eq!(enumerate_agendas(&cands(3), false).count(), 3);
        assert_eq!(enumerate_agendas(&cands(4), false).count(), 15);
        assert_eq!(enumerate_agendas(&cands(4), true).count(), 3);
        assert_eq!(enumerate_agendas(&cands(5), false).count(), 105);
        assert!(enumerate_agendas(&cands(3), false).all(|t| t.is_balanced()));
        let b4: Vec<String> = enumerate_agendas(&cands(4), true).map(|t| t.render(&cands(4))).collect();
        assert!(b4.iter().all(|s| s.starts_with("((") && s.ends_with("))")));
    }

    #[test]
    fn balanced_enumeration_matches_filter() {
        for n in 1..=6 {
            let c = cands(n);
            let filtered: Vec<_> = enumerate_agendas(&c, false).filter(|t| t.is_balanced()).collect();
            let direct: Vec<_> = enumerate_agendas(&c, true).collect();
            assert_eq!(filtered, direct, "m = {n}");
        }
    }

    #[test]
    fn enumerated_agendas_are_canonical_and_distinct() {
        let c = cands(5);
        let all: Vec<_> = enumerate_agendas(&c, false).collect();
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        for t in &all {
            assert_eq!(&t.canonical(), t);
            assert!(Agenda::new(t.root().clone(), &c).is_ok());
        }
    }

}
