//! Two-bloc synthetic vote data for tests and demos.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ingest::{Member, Party, Vote, VoteMatrix};

/// Generate a two-bloc vote matrix: bloc A (party "D") ideally votes yea on
/// every roll call, bloc B (party "R") nay, and each individual vote flips
/// its bloc ideal independently with probability `flip_prob`.
///
/// Deterministic for a fixed seed. `flip_prob` must lie in [0, 0.5).
pub fn generate_synthetic(
    n_per_bloc: usize,
    n_rollcalls: usize,
    flip_prob: f64,
    seed: u64,
) -> Result<VoteMatrix> {
    if n_per_bloc < 1 {
        return Err(Error::EmptySyntheticDimension { what: "n_per_bloc" });
    }
    if n_rollcalls < 1 {
        return Err(Error::EmptySyntheticDimension {
            what: "n_rollcalls",
        });
    }
    if !(0.0..0.5).contains(&flip_prob) {
        return Err(Error::InvalidFlipProbability(flip_prob));
    }

    let width = n_per_bloc.to_string().len().max(2);
    let mut roster = Vec::with_capacity(2 * n_per_bloc);
    for i in 0..n_per_bloc {
        let id = format!("D{:0width$}", i + 1);
        roster.push(Member::new(id.clone(), id, Party::Democrat, ""));
    }
    for i in 0..n_per_bloc {
        let id = format!("R{:0width$}", i + 1);
        roster.push(Member::new(id.clone(), id, Party::Republican, ""));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..2 * n_per_bloc)
        .map(|i| {
            let ideal = if i < n_per_bloc { Vote::Yea } else { Vote::Nay };
            let flipped = match ideal {
                Vote::Yea => Vote::Nay,
                Vote::Nay => Vote::Yea,
                Vote::NotVoting => Vote::NotVoting,
            };
            (0..n_rollcalls)
                .map(|_| {
                    if rng.gen::<f64>() < flip_prob {
                        flipped
                    } else {
                        ideal
                    }
                })
                .collect()
        })
        .collect();

    let rollcall_ids = (1..=n_rollcalls).map(|k| format!("v{k}")).collect();
    VoteMatrix::new(roster, rollcall_ids, rows)
}
