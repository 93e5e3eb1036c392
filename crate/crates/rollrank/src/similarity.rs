//! Pairwise Hamming distances between vote vectors and the similarity
//! (weight) matrix they induce.
//!
//! Two voters' similarity is `1 / (d + 1)` where `d` is the Hamming distance
//! between their encoded vote vectors. Identical records get weight 1; every
//! pair gets strictly positive weight, so the similarity graph is complete.

use std::io::Write;

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::ingest::{Member, Vote, VoteMatrix};

/// Symmetric nonnegative member-by-member similarity matrix with a zero
/// diagonal.
///
/// Matrices built by [`similarity_matrix`] additionally have every
/// off-diagonal entry in (0, 1]; [`WeightMatrix::new`] accepts any symmetric
/// hollow nonnegative matrix so graphs can also be constructed directly.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightMatrix {
    w: Array2<f64>,
}

impl WeightMatrix {
    /// Validate and wrap a raw matrix: square, symmetric, zero diagonal,
    /// nonnegative finite entries.
    pub fn new(w: Array2<f64>) -> Result<WeightMatrix> {
        let (rows, cols) = w.dim();
        if rows != cols {
            return Err(Error::InvalidMatrix(format!(
                "weight matrix must be square, got {rows}x{cols}"
            )));
        }
        for i in 0..rows {
            if w[[i, i]] != 0.0 {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry ({i},{i}) is {}, expected 0",
                    w[[i, i]]
                )));
            }
            for j in 0..cols {
                let v = w[[i, j]];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({i},{j}) is {v}, expected a finite nonnegative value"
                    )));
                }
                if w[[i, j]] != w[[j, i]] {
                    return Err(Error::InvalidMatrix(format!(
                        "entries ({i},{j}) and ({j},{i}) differ: {} vs {}",
                        w[[i, j]],
                        w[[j, i]]
                    )));
                }
            }
        }
        Ok(WeightMatrix { w })
    }

    pub fn n(&self) -> usize {
        self.w.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.w[[i, j]]
    }

    pub fn as_array(&self) -> &Array2<f64> {
        &self.w
    }

    /// Row/column order follows the roster; header row and first column
    /// carry member ids.
    pub fn write_csv(&self, roster: &[Member], out: &mut impl Write) -> Result<()> {
        if roster.len() != self.n() {
            return Err(Error::DimensionMismatch {
                left: roster.len(),
                right: self.n(),
            });
        }
        write!(out, "id")?;
        for member in roster {
            write!(out, ",{}", member.id)?;
        }
        writeln!(out)?;
        for (i, member) in roster.iter().enumerate() {
            write!(out, "{}", member.id)?;
            for j in 0..self.n() {
                write!(out, ",{}", self.w[[i, j]])?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// Count the positions where two vote vectors differ. Any difference counts
/// as one, including a cast vote against a missing one.
pub fn hamming_distance(u: &[Vote], v: &[Vote]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.iter().zip(v).filter(|(a, b)| a != b).count())
}

/// The similarity assigned to a pair at Hamming distance `d`: `1 / (d + 1)`.
pub fn weight_from_distance(d: usize) -> f64 {
    1.0 / (d as f64 + 1.0)
}

/// Build the full pairwise similarity matrix for a vote matrix.
///
/// Each unordered pair is computed once and mirrored, so the result is
/// symmetric bit-for-bit. Requires at least two members.
pub fn similarity_matrix(m: &VoteMatrix) -> Result<WeightMatrix> {
    let n = m.n_members();
    if n < 2 {
        return Err(Error::InsufficientMembers { got: n, min: 2 });
    }
    let mut w = Array2::zeros((n, n));
    for i in 0..n {
        for j in (i + 1)..n {
            let d = hamming_distance(m.row(i), m.row(j))?;
            let weight = weight_from_distance(d);
            w[[i, j]] = weight;
            w[[j, i]] = weight;
        }
    }
    Ok(WeightMatrix { w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{Member, Party};
    use ndarray::array;

    fn vote(v: i8) -> Vote {
        match v {
            1 => Vote::Yea,
            -1 => Vote::Nay,
            0 => Vote::NotVoting,
            _ => unreachable!(),
        }
    }

    fn votes(vs: &[i8]) -> Vec<Vote> {
        vs.iter().map(|&v| vote(v)).collect()
    }

    fn matrix_of(rows: &[&[i8]]) -> VoteMatrix {
        let roster = (0..rows.len())
            .map(|i| Member::new(format!("m{i}"), format!("M{i}"), Party::Unknown, ""))
            .collect();
        let ids = (1..=rows[0].len()).map(|k| format!("v{k}")).collect();
        VoteMatrix::new(roster, ids, rows.iter().map(|r| votes(r)).collect()).unwrap()
    }

    #[test]
    fn worked_example_pair_has_distance_two_and_weight_one_third() {
        let u = votes(&[-1, 1, 0]);
        let v = votes(&[1, -1, 0]);
        assert_eq!(hamming_distance(&u, &v).unwrap(), 2);
        assert_eq!(weight_from_distance(2), 1.0 / 3.0);
    }

    #[test]
    fn identical_vectors_have_distance_zero() {
        let v = votes(&[1, -1, 0, 1]);
        assert_eq!(hamming_distance(&v, &v).unwrap(), 0);
        assert_eq!(weight_from_distance(0), 1.0);
    }

    #[test]
    fn cast_versus_missing_counts_as_a_difference() {
        let u = votes(&[1, 0, -1]);
        let v = votes(&[0, 0, -1]);
        assert_eq!(hamming_distance(&u, &v).unwrap(), 1);
    }

    #[test]
    fn distance_nine_gives_weight_one_tenth() {
        assert_eq!(weight_from_distance(9), 0.1);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let u = votes(&[1, 1]);
        let v = votes(&[1]);
        assert!(matches!(
            hamming_distance(&u, &v),
            Err(Error::DimensionMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn two_identical_members_weigh_one() {
        let m = matrix_of(&[&[1, -1, 0], &[1, -1, 0]]);
        let w = similarity_matrix(&m).unwrap();
        assert_eq!(w.get(0, 1), 1.0);
        assert_eq!(w.get(1, 0), 1.0);
        assert_eq!(w.get(0, 0), 0.0);
    }

    #[test]
    fn worked_example_as_two_member_matrix() {
        let m = matrix_of(&[&[-1, 1, 0], &[1, -1, 0]]);
        let w = similarity_matrix(&m).unwrap();
        assert_eq!(w.get(0, 1), 1.0 / 3.0);
    }

    #[test]
    fn three_member_matrix_matches_brute_force() {
        let rows: [&[i8]; 3] = [&[1, 1, -1, 0], &[1, -1, -1, 1], &[0, 1, 1, 0]];
        let m = matrix_of(&rows);
        let w = similarity_matrix(&m).unwrap();
        // Independent pairwise loop over the raw rows.
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    assert_eq!(w.get(i, j), 0.0);
                    continue;
                }
                let mut d = 0usize;
                for (a, b) in rows[i].iter().zip(rows[j]) {
                    if a != b {
                        d += 1;
                    }
                }
                assert_eq!(w.get(i, j), 1.0 / (d as f64 + 1.0), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn single_member_matrix_is_rejected() {
        let m = matrix_of(&[&[1, 1]]);
        assert!(matches!(
            similarity_matrix(&m),
            Err(Error::InsufficientMembers { got: 1, min: 2 })
        ));
    }

    #[test]
    fn raw_construction_validates_shape() {
        assert!(WeightMatrix::new(array![[0.0, 1.0]]).is_err());
        assert!(WeightMatrix::new(array![[0.0, 0.5], [0.4, 0.0]]).is_err());
        assert!(WeightMatrix::new(array![[0.1, 0.5], [0.5, 0.0]]).is_err());
        assert!(WeightMatrix::new(array![[0.0, -0.5], [-0.5, 0.0]]).is_err());
        // Zero off-diagonals are allowed for directly constructed graphs.
        let path = WeightMatrix::new(array![[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]);
        assert!(path.is_ok());
    }

    #[test]
    fn weights_csv_dump_is_labeled_and_ordered() {
        let m = matrix_of(&[&[1, -1], &[1, 1]]);
        let w = similarity_matrix(&m).unwrap();
        let mut buf = Vec::new();
        w.write_csv(m.roster(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "id,m0,m1");
        assert_eq!(lines[1], "m0,0,0.5");
        assert_eq!(lines[2], "m1,0.5,0");
    }
}
