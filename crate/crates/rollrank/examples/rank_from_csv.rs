//! Parse a CSV vote file, anchor two known members at the ends of the
//! scale, and print the resulting ranking table.
//!
//! ```bash
//! cargo run -p rollrank --example rank_from_csv
//! ```

#[path = "shared/votes.rs"]
mod votes;

use rollrank::anchors::anchors_by_name;
use rollrank::harmonic::{laplacian, solve_harmonic};
use rollrank::ingest::{filter_near_unanimous, parse_csv};
use rollrank::rank::{make_ranking, write_ranking, OutputFormat};
use rollrank::similarity::similarity_matrix;

fn main() -> rollrank::Result<()> {
    let raw = parse_csv(votes::STAIRCASE_CSV.as_bytes())?;
    let filtered = filter_near_unanimous(&raw, 0.95)?;
    println!(
        "{} members; {} of {} roll calls kept by the 95% filter\n",
        filtered.n_members(),
        filtered.n_rollcalls(),
        raw.n_rollcalls()
    );

    let weights = similarity_matrix(&filtered)?;
    let anchors = anchors_by_name(filtered.roster(), &["PAZ=+1".parse()?, "ZANE=-1".parse()?])?;
    let scores = solve_harmonic(&laplacian(&weights), &anchors)?;
    let ranking = make_ranking(&scores, filtered.roster())?;

    print!("{}", write_ranking(&ranking, OutputFormat::Text));

    // The staircase data orders members exactly by their cutpoint.
    assert_eq!(ranking.rows()[0].member.name, "PAZ");
    assert_eq!(ranking.rows()[10].member.name, "ZANE");
    println!("\nscores (most positive first):");
    for row in ranking.rows() {
        println!("  {:<8} {:+.6}", row.member.name, row.score);
    }
    Ok(())
}
