//! Graph-Laplacian assembly, the quadratic smoothness energy, and the
//! harmonic solve that pins anchor scores and minimizes the energy over the
//! remaining vertices.
//!
//! For a weight matrix `W` the combinatorial Laplacian is `Δ = D - W` with
//! `D` the diagonal of row sums. The energy of a score vector `f` is
//!
//! ```text
//! E(f) = Σ_i Σ_j W[i,j] (f_i - f_j)^2 = 2 f^T Δ f
//! ```
//!
//! Fixing the anchor entries `f_L` and minimizing over the free entries
//! `f_U` yields the linear system `Δ_UU f_U = -Δ_UL f_L`, whose solution is
//! harmonic: every free score is the weighted average of all other scores.
//! With strictly positive weights the free scores therefore lie strictly
//! between the extreme anchor values.

use std::collections::BTreeMap;

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::similarity::WeightMatrix;
use crate::solve::{cholesky_solve, lu_solve};

/// Relative residual bound the harmonic solve must meet.
const SOLVE_RESIDUAL_RTOL: f64 = 1e-9;

/// The combinatorial graph Laplacian `Δ = D - W`.
///
/// Symmetric, positive semi-definite, zero row sums, nonpositive
/// off-diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Laplacian {
    delta: Array2<f64>,
}

impl Laplacian {
    pub fn n(&self) -> usize {
        self.delta.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.delta[[i, j]]
    }

    pub fn as_array(&self) -> &Array2<f64> {
        &self.delta
    }
}

/// Assemble the Laplacian of a weight matrix: `diag(row sums) - W`.
pub fn laplacian(w: &WeightMatrix) -> Laplacian {
    let n = w.n();
    let mut delta = -w.as_array().clone();
    for i in 0..n {
        let degree: f64 = w.as_array().row(i).sum();
        delta[[i, i]] = degree;
    }
    Laplacian { delta }
}

/// Fixed scores for the labeled vertices, keyed by roster index.
///
/// At least two entries, each score in [-1, +1], with at least one positive
/// and one negative score. Entries are held in ascending index order, so
/// equal sets compare equal regardless of insertion order.
#[derive(Clone, Debug, PartialEq)]
pub struct AnchorSet {
    entries: Vec<(usize, f64)>,
}

impl AnchorSet {
    pub fn new(entries: impl IntoIterator<Item = (usize, f64)>) -> Result<AnchorSet> {
        let mut map = BTreeMap::new();
        for (index, score) in entries {
            if !(score.is_finite() && (-1.0..=1.0).contains(&score)) {
                return Err(Error::AnchorScoreOutOfRange(score));
            }
            if map.insert(index, score).is_some() {
                return Err(Error::DuplicateAnchor(format!("index {index}")));
            }
        }
        if map.len() < 2 {
            return Err(Error::TooFewAnchors);
        }
        let has_positive = map.values().any(|&s| s > 0.0);
        let has_negative = map.values().any(|&s| s < 0.0);
        if !has_positive || !has_negative {
            return Err(Error::DegenerateAnchors);
        }
        Ok(AnchorSet {
            entries: map.into_iter().collect(),
        })
    }

    /// (index, score) pairs in ascending index order.
    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least two entries
    }

    pub fn score_of(&self, index: usize) -> Option<f64> {
        self.entries
            .binary_search_by_key(&index, |&(i, _)| i)
            .ok()
            .map(|k| self.entries[k].1)
    }
}

/// The labeled/unlabeled block decomposition of a Laplacian.
#[derive(Clone, Debug)]
pub struct Partition {
    /// Principal submatrix on unlabeled indices, `(n-L) x (n-L)`.
    pub uu: Array2<f64>,
    /// Coupling block from unlabeled rows to labeled columns, `(n-L) x L`.
    pub ul: Array2<f64>,
    /// Anchor scores in labeled order.
    pub f_l: Array1<f64>,
    /// Original index of each unlabeled row, ascending.
    pub unlabeled: Vec<usize>,
    /// Original index of each labeled column, ascending.
    pub labeled: Vec<usize>,
}

/// Split a Laplacian into its unlabeled-unlabeled and unlabeled-labeled
/// blocks, with index maps back to original positions.
pub fn partition(lap: &Laplacian, anchors: &AnchorSet) -> Result<Partition> {
    let n = lap.n();
    for &(index, _) in anchors.entries() {
        if index >= n {
            return Err(Error::AnchorIndexOutOfRange { index, n });
        }
    }
    let labeled: Vec<usize> = anchors.entries().iter().map(|&(i, _)| i).collect();
    let f_l = Array1::from_iter(anchors.entries().iter().map(|&(_, s)| s));
    let unlabeled: Vec<usize> = (0..n).filter(|i| anchors.score_of(*i).is_none()).collect();

    let uu = Array2::from_shape_fn((unlabeled.len(), unlabeled.len()), |(r, c)| {
        lap.get(unlabeled[r], unlabeled[c])
    });
    let ul = Array2::from_shape_fn((unlabeled.len(), labeled.len()), |(r, c)| {
        lap.get(unlabeled[r], labeled[c])
    });
    Ok(Partition {
        uu,
        ul,
        f_l,
        unlabeled,
        labeled,
    })
}

/// The quadratic smoothness energy `Σ_i Σ_j W[i,j] (f_i - f_j)^2`, both
/// orderings of each pair counted.
pub fn energy(f: &[f64], w: &WeightMatrix) -> Result<f64> {
    let n = w.n();
    if f.len() != n {
        return Err(Error::DimensionMismatch {
            left: f.len(),
            right: n,
        });
    }
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let diff = f[i] - f[j];
            total += w.get(i, j) * diff * diff;
        }
    }
    Ok(total)
}

/// A full score vector with its anchor mask.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreVector {
    scores: Vec<f64>,
    labeled_mask: Vec<bool>,
}

impl ScoreVector {
    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Whether index `i` was an anchor.
    pub fn is_anchor(&self, i: usize) -> bool {
        self.labeled_mask[i]
    }

    pub fn labeled_mask(&self) -> &[bool] {
        &self.labeled_mask
    }
}

/// Minimize the energy subject to the anchors: hold `f_L` fixed and solve
/// `Δ_UU f_U = -Δ_UL f_L` for the free scores.
///
/// The system is solved by Cholesky factorization of the unlabeled block,
/// falling back to pivoted LU if a non-positive pivot appears; an explicit
/// inverse is never formed. Fails with a singular-system error when the
/// block cannot be solved to a relative residual of 1e-9, which happens
/// exactly when some unlabeled vertex has no positive coupling to the rest
/// of the graph.
pub fn solve_harmonic(lap: &Laplacian, anchors: &AnchorSet) -> Result<ScoreVector> {
    let part = partition(lap, anchors)?;
    let n = lap.n();
    let mut scores = vec![0.0; n];
    let mut labeled_mask = vec![false; n];
    for &(index, score) in anchors.entries() {
        scores[index] = score;
        labeled_mask[index] = true;
    }
    if part.unlabeled.is_empty() {
        return Ok(ScoreVector {
            scores,
            labeled_mask,
        });
    }

    let b = -part.ul.dot(&part.f_l);
    let f_u = match cholesky_solve(&part.uu, &b) {
        Some(x) => x,
        None => lu_solve(&part.uu, &b).ok_or_else(|| Error::SingularSystem {
            detail: format!("{}x{} unlabeled block", part.uu.nrows(), part.uu.ncols()),
        })?,
    };

    let residual = &part.uu.dot(&f_u) - &b;
    let residual_inf = residual.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
    let b_inf = b.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
    if residual_inf > SOLVE_RESIDUAL_RTOL * b_inf.max(1.0) {
        return Err(Error::SingularSystem {
            detail: format!("residual {residual_inf:.3e} exceeds tolerance"),
        });
    }

    for (k, &original) in part.unlabeled.iter().enumerate() {
        scores[original] = f_u[k];
    }
    Ok(ScoreVector {
        scores,
        labeled_mask,
    })
}
