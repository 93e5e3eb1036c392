//! Shared test support: random instance builders and the grid-refinement
//! energy oracle used to cross-check the harmonic solver.

#![allow(dead_code)]

use ndarray::Array2;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rollrank::harmonic::AnchorSet;
use rollrank::similarity::WeightMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random symmetric hollow weight matrix with off-diagonal entries in
/// `lo..hi` (all positive when `lo > 0`).
pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> WeightMatrix {
    let mut w = Array2::zeros((n, n));
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rng.gen_range(lo..hi);
            w[[i, j]] = v;
            w[[j, i]] = v;
        }
    }
    WeightMatrix::new(w).unwrap()
}

pub fn random_scores(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// Two distinct random indices anchored at +1 and -1.
pub fn random_pm_one_anchors(rng: &mut ChaCha8Rng, n: usize) -> AnchorSet {
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n);
    while j == i {
        j = rng.gen_range(0..n);
    }
    AnchorSet::new([(i, 1.0), (j, -1.0)]).unwrap()
}

/// Quadratic energy evaluated by its own double loop, independent of the
/// production implementation.
fn raw_energy(f: &[f64], w: &WeightMatrix) -> f64 {
    let n = w.n();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let d = f[i] - f[j];
            total += w.get(i, j) * d * d;
        }
    }
    total
}

/// Brute-force minimizer of the energy over the unanchored coordinates by
/// dense grid refinement.
///
/// Evaluates an 11-point grid per free coordinate inside a shrinking window:
/// the window re-centers on the best grid point, shrinking only when that
/// point is interior, until the grid step falls below `final_step`. Returns
/// the full score vector with anchors fixed.
pub fn grid_minimize_energy(w: &WeightMatrix, anchors: &AnchorSet, final_step: f64) -> Vec<f64> {
    const GRID_HALF: i64 = 5; // 11 points per dimension

    let n = w.n();
    let mut f = vec![0.0; n];
    let mut is_anchor = vec![false; n];
    for &(idx, score) in anchors.entries() {
        f[idx] = score;
        is_anchor[idx] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&i| !is_anchor[i]).collect();
    let k = free.len();
    if k == 0 {
        return f;
    }

    let mut center = vec![0.0f64; k];
    let mut half = 1.0f64;
    let mut evaluations = 0u64;
    loop {
        let step = half / GRID_HALF as f64;
        let mut best_offsets = vec![0i64; k];
        let mut best_e = f64::INFINITY;

        // Odometer over {-GRID_HALF..=GRID_HALF}^k.
        let mut offsets = vec![-GRID_HALF; k];
        loop {
            for (d, &idx) in free.iter().enumerate() {
                f[idx] = center[d] + offsets[d] as f64 * step;
            }
            let e = raw_energy(&f, w);
            evaluations += 1;
            if e < best_e {
                best_e = e;
                best_offsets = offsets.clone();
            }
            // increment
            let mut d = 0;
            loop {
                if d == k {
                    break;
                }
                offsets[d] += 1;
                if offsets[d] <= GRID_HALF {
                    break;
                }
                offsets[d] = -GRID_HALF;
                d += 1;
            }
            if d == k {
                break;
            }
        }

        for d in 0..k {
            center[d] += best_offsets[d] as f64 * step;
        }
        let on_edge = best_offsets.iter().any(|&o| o.abs() == GRID_HALF);
        if !on_edge {
            if step <= final_step {
                break;
            }
            half *= 0.4;
        }
        assert!(
            evaluations < 200_000_000,
            "grid refinement failed to converge"
        );
    }

    for (d, &idx) in free.iter().enumerate() {
        f[idx] = center[d];
    }
    f
}
