//! # rollrank
//!
//! Rank voters on a one-dimensional scale from their binary-choice voting
//! records.
//!
//! The method builds a complete similarity graph over the voters, weighting
//! each pair by `1/(d+1)` for the Hamming distance `d` between their encoded
//! vote vectors, and scores every voter by minimizing the graph-Laplacian
//! quadratic energy subject to a handful of anchored scores. The minimizer is harmonic: each free score is the weighted
//! average of every other score, so similar voting records are pulled to
//! nearby positions and all free scores fall strictly between the anchor
//! values. Solving it is one small dense linear system with a unique global
//! minimum.
//!
//! ## Pipeline
//!
//! ```text
//! vote file ──parse──▶ VoteMatrix ──filter──▶ VoteMatrix
//!     ──similarity──▶ WeightMatrix ──Δ = D - W──▶ Laplacian
//!     + AnchorSet ──harmonic solve──▶ ScoreVector ──sort──▶ Ranking
//! ```
//!
//! ```
//! use rollrank::anchors::anchors_by_name;
//! use rollrank::harmonic::{laplacian, solve_harmonic};
//! use rollrank::ingest::parse_csv;
//! use rollrank::rank::make_ranking;
//! use rollrank::similarity::similarity_matrix;
//!
//! let csv = "id,name,party,state,v1,v2,v3\n\
//!            1,LEFT,D,,1,1,6\n\
//!            2,SWING,D,,1,6,6\n\
//!            3,RIGHT,R,,6,6,1\n";
//! let votes = parse_csv(csv.as_bytes())?;
//! let weights = similarity_matrix(&votes)?;
//! let anchors = anchors_by_name(
//!     votes.roster(),
//!     &["LEFT=+1".parse()?, "RIGHT=-1".parse()?],
//! )?;
//! let scores = solve_harmonic(&laplacian(&weights), &anchors)?;
//! let ranking = make_ranking(&scores, votes.roster())?;
//! assert_eq!(ranking.rows()[0].member.name, "LEFT");
//! assert_eq!(ranking.rows()[2].member.name, "RIGHT");
//! # Ok::<(), rollrank::Error>(())
//! ```
//!
//! Each module maps to one pipeline stage; the `examples/` directory has a
//! runnable program per capability, and the `rollrank` binary wraps the
//! pipeline as `rank` and `compare` subcommands.

pub mod anchors;
pub mod cli;
pub mod error;
pub mod harmonic;
pub mod ingest;
pub mod rank;
pub mod similarity;

mod solve;

pub use error::{Error, Result};
