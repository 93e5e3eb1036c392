//! Show the near-unanimous filter at work and inspect the similarity
//! matrix it feeds: weights are 1/(d+1) for Hamming distance d, so they
//! decay along the ideological staircase.
//!
//! ```bash
//! cargo run -p rollrank --example filter_and_weights
//! ```

#[path = "shared/votes.rs"]
mod votes;

use rollrank::ingest::{filter_near_unanimous, parse_csv};
use rollrank::similarity::{hamming_distance, similarity_matrix};

fn main() -> rollrank::Result<()> {
    let raw = parse_csv(votes::STAIRCASE_CSV.as_bytes())?;
    println!("before filtering: {} roll calls", raw.n_rollcalls());
    for threshold in [0.95, 0.8, 0.6] {
        let kept = filter_near_unanimous(&raw, threshold)?;
        println!(
            "threshold {threshold}: {} kept ({:?})",
            kept.n_rollcalls(),
            kept.rollcall_ids()
        );
    }

    // v11 (unanimous) and v12 (all-abstain) are always dropped.
    let filtered = filter_near_unanimous(&raw, 0.95)?;
    assert!(!filtered
        .rollcall_ids()
        .iter()
        .any(|id| id == "v11" || id == "v12"));

    let weights = similarity_matrix(&filtered)?;
    let roster = filtered.roster();
    println!("\ndistances and weights from {}:", roster[0].name);
    for (k, member) in roster.iter().enumerate().skip(1) {
        let d = hamming_distance(filtered.row(0), filtered.row(k))?;
        println!(
            "  {:<8} distance {:>2}  weight {:.4}",
            member.name,
            d,
            weights.get(0, k)
        );
    }

    println!("\nfull weight matrix as CSV:");
    let mut out = Vec::new();
    weights.write_csv(roster, &mut out)?;
    print!("{}", String::from_utf8(out).expect("csv is UTF-8"));
    Ok(())
}
