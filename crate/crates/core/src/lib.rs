//! Exact winner determination for sequential majority voting (the Cup rule)
//! when voters' preferences are incomplete and weighted and the agenda is
//! not fixed.
//!
//! A [`Profile`] holds weighted partial-order votes. Its [`MajorityGraph`]
//! records which pairwise contests are already decided. Winner notions come
//! in two flavours:
//!
//! * graph level ([`graphwin`]): quantify over completions of the majority
//!   graph;
//! * profile level ([`profwin`]): quantify over completions of the votes
//!   themselves, which can rule out graph completions no real completion
//!   produces.
//!
//! Each notion is weak/strong (some/every completion) and Condorcet/possible
//! (every/some agenda), optionally restricted to balanced agendas. The
//! [`oracle`] module evaluates all of them by literal enumeration and serves
//! as the reference for the faster paths. [`hardness`] builds the
//! number-partitioning instances on which weak possible winners are hard.

pub mod agenda;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graphwin;
pub mod hardness;
pub mod knockout;
pub mod majority;
pub mod model;
pub mod oracle;
pub mod profwin;
pub mod sample;
pub mod selfcheck;

pub use agenda::{enumerate_agendas, Agenda, LeafDepthProfile, Node};
pub use error::{Error, Result};
pub use majority::{majority_graph, MajorityGraph, Tournament};
pub use model::{
    transitive_close, CandidateSet, PartialOrder, Profile, Rel, TotalOrder, Vote,
};
pub use profwin::{Method, Notion, SearchConfig, WinnerReport, Witness};
