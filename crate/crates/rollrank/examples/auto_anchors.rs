//! Pick anchors from the data alone: the two least-similar members get +1
//! and -1. The +1 side is arbitrary unless an orientation is requested.
//!
//! ```bash
//! cargo run -p rollrank --example auto_anchors
//! ```

#[path = "shared/votes.rs"]
mod votes;

use rollrank::anchors::anchors_internal;
use rollrank::harmonic::{laplacian, solve_harmonic};
use rollrank::ingest::{filter_near_unanimous, parse_csv};
use rollrank::rank::make_ranking;
use rollrank::similarity::similarity_matrix;

fn main() -> rollrank::Result<()> {
    let raw = parse_csv(votes::STAIRCASE_CSV.as_bytes())?;
    let filtered = filter_near_unanimous(&raw, 0.95)?;
    let weights = similarity_matrix(&filtered)?;
    let roster = filtered.roster();

    let picked = anchors_internal(&weights, None)?;
    let (i, j) = picked.pair;
    println!(
        "least-similar pair: {} and {} (similarity {:.4}, orientation arbitrary: {})",
        roster[i].name, roster[j].name, picked.weight, picked.orientation_arbitrary
    );

    let lap = laplacian(&weights);
    let scores = solve_harmonic(&lap, &picked.anchors)?;
    let ranking = make_ranking(&scores, roster)?;
    println!(
        "default orientation puts {} on top, {} on the bottom",
        ranking.rows()[0].member.name,
        ranking.rows()[ranking.len() - 1].member.name
    );

    // Re-run with the other member of the pair oriented to +1.
    let flipped = anchors_internal(&weights, Some(j))?;
    let scores = solve_harmonic(&lap, &flipped.anchors)?;
    let ranking = make_ranking(&scores, roster)?;
    println!(
        "oriented to {}: now {} is on top, {} on the bottom",
        roster[j].name,
        ranking.rows()[0].member.name,
        ranking.rows()[ranking.len() - 1].member.name
    );
    Ok(())
}
