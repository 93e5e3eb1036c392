//! Orderings over scored members: building rankings, comparing them with
//! rank correlations, and serializing them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::ScoreVector;
use crate::ingest::Member;

/// One line of a ranking table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankRow {
    /// 1-based rank; rank 1 is the most positive score.
    pub rank: usize,
    pub member: Member,
    pub score: f64,
    /// Whether this member's score was pinned as an anchor.
    pub anchored: bool,
}

/// Members ordered by descending score.
///
/// Ranks run 1..=n with no gaps; equal scores are ordered by ascending name,
/// then ascending id.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ranking {
    rows: Vec<RankRow>,
}

impl Ranking {
    pub fn rows(&self) -> &[RankRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Position (0-based) of the member with the given id, if present.
    pub fn position_of(&self, id: &str) -> Option<usize> {
        self.rows.iter().position(|r| r.member.id == id)
    }
}

/// Order members by score, most positive first.
pub fn make_ranking(scores: &ScoreVector, roster: &[Member]) -> Result<Ranking> {
    if scores.len() != roster.len() {
        return Err(Error::DimensionMismatch {
            left: scores.len(),
            right: roster.len(),
        });
    }
    let mut order: Vec<usize> = (0..roster.len()).collect();
    order.sort_by(|&a, &b| {
        scores.scores()[b]
            .total_cmp(&scores.scores()[a])
            .then_with(|| roster[a].name.cmp(&roster[b].name))
            .then_with(|| roster[a].id.cmp(&roster[b].id))
    });
    let rows = order
        .into_iter()
        .enumerate()
        .map(|(pos, i)| RankRow {
            rank: pos + 1,
            member: roster[i].clone(),
            score: scores.scores()[i],
            anchored: scores.is_anchor(i),
        })
        .collect();
    Ok(Ranking { rows })
}

/// Pair the two rankings' scores by member id; errors unless the member
/// sets are identical.
fn paired_scores(a: &Ranking, b: &Ranking) -> Result<(Vec<f64>, Vec<f64>)> {
    if a.len() != b.len() {
        return Err(Error::MemberSetMismatch);
    }
    let b_scores: HashMap<&str, f64> = b
        .rows
        .iter()
        .map(|r| (r.member.id.as_str(), r.score))
        .collect();
    if b_scores.len() != b.len() {
        return Err(Error::MemberSetMismatch);
    }
    let mut x = Vec::with_capacity(a.len());
    let mut y = Vec::with_capacity(a.len());
    for row in &a.rows {
        let other = b_scores
            .get(row.member.id.as_str())
            .ok_or(Error::MemberSetMismatch)?;
        x.push(row.score);
        y.push(*other);
    }
    Ok((x, y))
}

/// Kendall's tau-b between two rankings of the same member set.
///
/// `tau = (P - Q) / sqrt((P + Q + T) (P + Q + U))` with P/Q the concordant
/// and discordant pair counts, T the pairs tied only in the first ranking's
/// scores and U only in the second's.
pub fn kendall_tau(a: &Ranking, b: &Ranking) -> Result<f64> {
    let (x, y) = paired_scores(a, b)?;
    let n = x.len();
    let mut concordant = 0u64;
    let mut discordant = 0u64;
    let mut ties_x = 0u64;
    let mut ties_y = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = x[i] - x[j];
            let dy = y[i] - y[j];
            if dx == 0.0 && dy == 0.0 {
                // tied in both; excluded from T and U
            } else if dx == 0.0 {
                ties_x += 1;
            } else if dy == 0.0 {
                ties_y += 1;
            } else if (dx > 0.0) == (dy > 0.0) {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    let pq = (concordant + discordant) as f64;
    let denom = ((pq + ties_x as f64) * (pq + ties_y as f64)).sqrt();
    if denom == 0.0 {
        return Err(Error::CorrelationUndefined(
            "every pair is tied in at least one ranking",
        ));
    }
    Ok((concordant as f64 - discordant as f64) / denom)
}

/// Ascending midranks: tied values share the average of the positions they
/// occupy.
fn midranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && values[order[end + 1]] == values[order[start]] {
            end += 1;
        }
        // 1-based positions start+1 ..= end+1 averaged.
        let avg = (start + end + 2) as f64 / 2.0;
        for &idx in &order[start..=end] {
            ranks[idx] = avg;
        }
        start = end + 1;
    }
    ranks
}

/// Spearman's rho between two rankings of the same member set, with average
/// ranks assigned to ties.
pub fn spearman_rho(a: &Ranking, b: &Ranking) -> Result<f64> {
    let (x, y) = paired_scores(a, b)?;
    let rx = midranks(&x);
    let ry = midranks(&y);
    let n = rx.len() as f64;
    let mean = (n + 1.0) / 2.0;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for i in 0..rx.len() {
        let dx = rx[i] - mean;
        let dy = ry[i] - mean;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    let denom = (var_x * var_y).sqrt();
    if denom == 0.0 {
        return Err(Error::CorrelationUndefined(
            "all scores tied in one ranking",
        ));
    }
    Ok(cov / denom)
}

/// Serialization targets for a ranking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    /// Rank/Name/Party columns, mirroring the published-table layout.
    Text,
    /// `rank,name,party,score,anchored` rows; scores at six decimals.
    Csv,
    /// Array of row objects with all fields; scores at full precision so the
    /// output parses back to an equal ranking.
    Json,
}

/// Render a ranking. Output is byte-deterministic for a given ranking;
/// text and CSV scores use six decimal places (round-half-even).
pub fn write_ranking(r: &Ranking, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let name_w = r
                .rows
                .iter()
                .map(|row| row.member.name.len())
                .max()
                .unwrap_or(0)
                .max("Name".len());
            let rank_w = r.len().to_string().len().max("Rank".len());
            let mut out = format!("{:>rank_w$}  {:<name_w$}  Party\n", "Rank", "Name");
            for row in &r.rows {
                out.push_str(&format!(
                    "{:>rank_w$}  {:<name_w$}  {}\n",
                    row.rank, row.member.name, row.member.party
                ));
            }
            out
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["rank", "name", "party", "score", "anchored"])
                .expect("csv write to memory");
            for row in &r.rows {
                writer
                    .write_record([
                        row.rank.to_string(),
                        row.member.name.clone(),
                        row.member.party.to_string(),
                        format!("{:.6}", row.score),
                        row.anchored.to_string(),
                    ])
                    .expect("csv write to memory");
            }
            String::from_utf8(writer.into_inner().expect("flush csv")).expect("csv output is UTF-8")
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string(r).expect("ranking serializes");
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::{laplacian, solve_harmonic, AnchorSet};
    use crate::ingest::Party;
    use crate::similarity::WeightMatrix;
    use ndarray::Array2;

    fn member(id: &str, name: &str) -> Member {
        Member::new(id, name, Party::Unknown, "")
    }

    /// Rankings for tests are easiest to fabricate through the solver's
    /// fully-labeled degenerate case: every member anchored at its score.
    fn ranking_of(pairs: &[(&str, f64)]) -> Ranking {
        let roster: Vec<Member> = pairs
            .iter()
            .map(|(name, _)| member(&format!("id_{name}"), name))
            .collect();
        let n = pairs.len();
        let mut w = Array2::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    w[[i, j]] = 1.0;
                }
            }
        }
        let lap = laplacian(&WeightMatrix::new(w).unwrap());
        let anchors = AnchorSet::new(pairs.iter().enumerate().map(|(i, &(_, s))| (i, s))).unwrap();
        let scores = solve_harmonic(&lap, &anchors).unwrap();
        make_ranking(&scores, &roster).unwrap()
    }

    #[test]
    fn two_member_sort_is_descending() {
        let r = ranking_of(&[("A", 1.0), ("B", -1.0)]);
        assert_eq!(r.rows()[0].member.name, "A");
        assert_eq!(r.rows()[1].member.name, "B");
        assert_eq!(r.rows()[0].rank, 1);
        assert_eq!(r.rows()[1].rank, 2);
    }

    #[test]
    fn equal_scores_order_by_name() {
        let r = ranking_of(&[("ZULU", 0.5), ("ALPHA", 0.5), ("OMEGA", -0.5)]);
        assert_eq!(r.rows()[0].member.name, "ALPHA");
        assert_eq!(r.rows()[1].member.name, "ZULU");
    }

    #[test]
    fn equal_scores_and_names_order_by_id() {
        // Complete unit-weight graph on 4 nodes, ends anchored: the two free
        // members sit symmetrically and tie at score 0.
        let roster = vec![
            member("p", "PLUS"),
            member("m", "MINUS"),
            member("b", "SAME"),
            member("a", "SAME"),
        ];
        let mut w = Array2::zeros((4, 4));
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    w[[i, j]] = 1.0;
                }
            }
        }
        let lap = laplacian(&WeightMatrix::new(w).unwrap());
        let anchors = AnchorSet::new([(0, 1.0), (1, -1.0)]).unwrap();
        let scores = solve_harmonic(&lap, &anchors).unwrap();
        assert_eq!(scores.scores()[2], scores.scores()[3]);
        let r = make_ranking(&scores, &roster).unwrap();
        assert_eq!(r.rows()[1].member.id, "a");
        assert_eq!(r.rows()[2].member.id, "b");
    }

    #[test]
    fn ranks_are_one_to_n_without_gaps() {
        let r = ranking_of(&[("C", 0.3), ("A", 0.9), ("B", -0.2), ("D", -0.9)]);
        let ranks: Vec<usize> = r.rows().iter().map(|row| row.rank).collect();
        assert_eq!(ranks, vec![1, 2, 3, 4]);
        let scores: Vec<f64> = r.rows().iter().map(|row| row.score).collect();
        let mut sorted = scores.clone();
        sorted.sort_by(|a, b| b.total_cmp(a));
        assert_eq!(scores, sorted);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let scores = {
            let mut w = Array2::zeros((2, 2));
            w[[0, 1]] = 1.0;
            w[[1, 0]] = 1.0;
            let lap = laplacian(&WeightMatrix::new(w).unwrap());
            let anchors = AnchorSet::new([(0, 1.0), (1, -1.0)]).unwrap();
            solve_harmonic(&lap, &anchors).unwrap()
        };
        let roster = vec![member("a", "A")];
        assert!(matches!(
            make_ranking(&scores, &roster),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn tau_of_identical_rankings_is_one() {
        let r = ranking_of(&[("A", 0.9), ("B", 0.4), ("C", -0.2), ("D", -0.8)]);
        assert_eq!(kendall_tau(&r, &r).unwrap(), 1.0);
        assert_eq!(spearman_rho(&r, &r).unwrap(), 1.0);
    }

    #[test]
    fn tau_of_reversed_ranking_is_minus_one() {
        let fwd = ranking_of(&[("A", 0.9), ("B", 0.4), ("C", -0.2), ("D", -0.8)]);
        let rev = ranking_of(&[("A", -0.9), ("B", -0.4), ("C", 0.2), ("D", 0.8)]);
        assert_eq!(kendall_tau(&fwd, &rev).unwrap(), -1.0);
        assert_eq!(spearman_rho(&fwd, &rev).unwrap(), -1.0);
    }

    #[test]
    fn five_element_tau_matches_brute_force_count() {
        // Orderings ABCDE vs ACBED: discordant pairs are (B,C) and (D,E).
        let a = ranking_of(&[("A", 0.9), ("B", 0.6), ("C", 0.2), ("D", -0.3), ("E", -0.8)]);
        let b = ranking_of(&[("A", 0.9), ("C", 0.6), ("B", 0.2), ("E", -0.3), ("D", -0.8)]);
        // Independent oracle: enumerate all C(5,2)=10 pairs over the two
        // position lists and count agreements in order.
        let names = ["A", "B", "C", "D", "E"];
        let pos = |r: &Ranking, name: &str| r.position_of(&format!("id_{name}")).unwrap();
        let mut concordant = 0i64;
        let mut discordant = 0i64;
        for i in 0..names.len() {
            for j in (i + 1)..names.len() {
                let da = pos(&a, names[i]) as i64 - pos(&a, names[j]) as i64;
                let db = pos(&b, names[i]) as i64 - pos(&b, names[j]) as i64;
                if da * db > 0 {
                    concordant += 1;
                } else {
                    discordant += 1;
                }
            }
        }
        assert_eq!((concordant, discordant), (8, 2));
        let expected = (concordant - discordant) as f64 / 10.0;
        assert_eq!(kendall_tau(&a, &b).unwrap(), expected);
        assert_eq!(expected, 0.6);
    }

    #[test]
    fn five_element_rho_matches_rank_difference_formula() {
        let a = ranking_of(&[("A", 0.9), ("B", 0.6), ("C", 0.2), ("D", -0.3), ("E", -0.8)]);
        let b = ranking_of(&[("A", 0.9), ("C", 0.6), ("B", 0.2), ("E", -0.3), ("D", -0.8)]);
        // No ties, so rho = 1 - 6 Σd² / (n(n²-1)) over rank differences.
        let names = ["A", "B", "C", "D", "E"];
        let mut sum_d2 = 0.0;
        for name in names {
            let ra = a.position_of(&format!("id_{name}")).unwrap() as f64 + 1.0;
            let rb = b.position_of(&format!("id_{name}")).unwrap() as f64 + 1.0;
            sum_d2 += (ra - rb) * (ra - rb);
        }
        let n = names.len() as f64;
        let expected = 1.0 - 6.0 * sum_d2 / (n * (n * n - 1.0));
        let got = spearman_rho(&a, &b).unwrap();
        assert!((got - expected).abs() < 1e-12, "{got} vs {expected}");
    }

    #[test]
    fn member_set_mismatch_is_an_error() {
        let a = ranking_of(&[("A", 1.0), ("B", -1.0)]);
        let b = ranking_of(&[("A", 1.0), ("C", -1.0)]);
        assert!(matches!(kendall_tau(&a, &b), Err(Error::MemberSetMismatch)));
        assert!(matches!(
            spearman_rho(&a, &b),
            Err(Error::MemberSetMismatch)
        ));
    }

    #[test]
    fn csv_output_has_header_plus_one_line_per_row() {
        let r = ranking_of(&[("A", 1.0), ("B", -1.0)]);
        let csv_text = write_ranking(&r, OutputFormat::Csv);
        let lines: Vec<&str> = csv_text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "rank,name,party,score,anchored");
        assert_eq!(lines[1], "1,A,?,1.000000,true");
    }

    #[test]
    fn scores_render_at_six_decimals() {
        assert_eq!(format!("{:.6}", 0.1234565_f64), "0.123456");
        // Exact tie cases round half to even.
        assert_eq!(format!("{:.1}", 0.25_f64), "0.2");
        assert_eq!(format!("{:.1}", 0.75_f64), "0.8");
    }

    #[test]
    fn json_round_trips_to_an_equal_ranking() {
        let r = ranking_of(&[("A", 0.7), ("B", 0.123456789), ("C", -1.0)]);
        let json = write_ranking(&r, OutputFormat::Json);
        let parsed: Ranking = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, r);
    }

    #[test]
    fn text_table_mirrors_rank_name_party_layout() {
        let r = ranking_of(&[("FEINGOLD", 1.0), ("COBURN", -1.0)]);
        let text = write_ranking(&r, OutputFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "Rank  Name      Party");
        assert_eq!(lines[1], "   1  FEINGOLD  ?");
        assert_eq!(lines[2], "   2  COBURN    ?");
    }

    #[test]
    fn correlations_are_symmetric() {
        let a = ranking_of(&[("A", 0.9), ("B", 0.1), ("C", -0.4), ("D", -0.9)]);
        let b = ranking_of(&[("A", 0.2), ("B", 0.8), ("C", -0.9), ("D", -0.1)]);
        assert_eq!(kendall_tau(&a, &b).unwrap(), kendall_tau(&b, &a).unwrap());
        assert!((spearman_rho(&a, &b).unwrap() - spearman_rho(&b, &a).unwrap()).abs() < 1e-15);
    }
}
