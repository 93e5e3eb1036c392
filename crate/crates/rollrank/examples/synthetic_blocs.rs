//! Generate two noisy voting blocs and show that the pipeline recovers the
//! bloc structure: every bloc-A member ranks above every bloc-B member.
//!
//! ```bash
//! cargo run -p rollrank --example synthetic_blocs
//! ```

use rollrank::anchors::anchors_internal;
use rollrank::harmonic::{laplacian, solve_harmonic};
use rollrank::ingest::{filter_near_unanimous, generate_synthetic, Party};
use rollrank::rank::make_ranking;
use rollrank::similarity::similarity_matrix;

fn main() -> rollrank::Result<()> {
    let n_per_bloc = 25;
    let votes = generate_synthetic(n_per_bloc, 60, 0.15, 42)?;
    println!(
        "synthetic legislature: {} members, {} roll calls, 15% flip noise",
        votes.n_members(),
        votes.n_rollcalls()
    );

    let filtered = filter_near_unanimous(&votes, 0.95)?;
    let weights = similarity_matrix(&filtered)?;
    let picked = anchors_internal(&weights, None)?;
    let (i, j) = picked.pair;
    println!(
        "anchoring the least-similar pair: {} (+1) vs {} (-1), similarity {:.4}",
        filtered.roster()[i].name,
        filtered.roster()[j].name,
        picked.weight
    );

    let scores = solve_harmonic(&laplacian(&weights), &picked.anchors)?;
    let ranking = make_ranking(&scores, filtered.roster())?;

    let separated = ranking.rows()[..n_per_bloc]
        .iter()
        .all(|r| r.member.party == Party::Democrat)
        && ranking.rows()[n_per_bloc..]
            .iter()
            .all(|r| r.member.party == Party::Republican);
    println!("perfect bloc separation: {separated}");

    println!("\ntop 5 and bottom 5:");
    for row in ranking.rows().iter().take(5) {
        println!(
            "  {:>3}  {}  {}  {:+.4}",
            row.rank, row.member.name, row.member.party, row.score
        );
    }
    println!("  ...");
    for row in ranking.rows().iter().skip(ranking.len() - 5) {
        println!(
            "  {:>3}  {}  {}  {:+.4}",
            row.rank, row.member.name, row.member.party, row.score
        );
    }
    Ok(())
}
