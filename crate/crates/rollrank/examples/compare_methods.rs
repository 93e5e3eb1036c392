//! Run the two anchor policies (named exemplars vs the detected
//! least-similar pair) on the same noisy data and measure how much the
//! rankings agree.
//!
//! ```bash
//! cargo run -p rollrank --example compare_methods
//! ```

use rollrank::anchors::{anchors_by_name, anchors_internal};
use rollrank::harmonic::{laplacian, solve_harmonic};
use rollrank::ingest::{filter_near_unanimous, generate_synthetic};
use rollrank::rank::{kendall_tau, make_ranking, spearman_rho};
use rollrank::similarity::similarity_matrix;

fn main() -> rollrank::Result<()> {
    let votes = generate_synthetic(10, 40, 0.2, 9)?;
    let filtered = filter_near_unanimous(&votes, 0.95)?;
    let weights = similarity_matrix(&filtered)?;
    let lap = laplacian(&weights);
    let roster = filtered.roster();

    // Policy A: domain knowledge, here the first member of each bloc.
    let named = anchors_by_name(roster, &["D01=+1".parse()?, "R01=-1".parse()?])?;
    let ranking_a = make_ranking(&solve_harmonic(&lap, &named)?, roster)?;

    // Policy B: internal knowledge, the least-similar pair.
    let picked = anchors_internal(&weights, None)?;
    let (i, j) = picked.pair;
    let ranking_b = make_ranking(&solve_harmonic(&lap, &picked.anchors)?, roster)?;

    println!("policy A anchors: D01=+1, R01=-1");
    println!(
        "policy B anchors: least-similar pair {}=+1, {}=-1",
        roster[i].name, roster[j].name
    );

    let tau = kendall_tau(&ranking_a, &ranking_b)?;
    let rho = spearman_rho(&ranking_a, &ranking_b)?;
    println!("kendall_tau  = {tau:.4}");
    println!("spearman_rho = {rho:.4}");

    println!("\nrank under A -> rank under B:");
    for row in ranking_a.rows() {
        let pos_b = ranking_b.position_of(&row.member.id).unwrap() + 1;
        println!("  {:>2} -> {:>2}  {}", row.rank, pos_b, row.member.name);
    }
    Ok(())
}
