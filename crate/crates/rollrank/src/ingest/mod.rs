//! Roll-call vote ingestion: member rosters, vote encoding, file parsing,
//! near-unanimous filtering, and synthetic test data.
//!
//! Votes are three-valued: yea, nay, or no vote registered (absent,
//! abstaining, not yet seated). They are encoded as +1 / -1 / 0 and held in a
//! [`VoteMatrix`], one row per member in roster order.

mod parse;
mod synthetic;

pub use parse::{parse_csv, parse_ord};
pub use synthetic::generate_synthetic;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Party affiliation as a single display code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Party {
    #[serde(rename = "D")]
    Democrat,
    #[serde(rename = "R")]
    Republican,
    #[serde(rename = "I")]
    Independent,
    #[serde(rename = "?")]
    Unknown,
}

impl Party {
    /// The one-character code used in tables and CSV output.
    pub fn code(self) -> char {
        match self {
            Party::Democrat => 'D',
            Party::Republican => 'R',
            Party::Independent => 'I',
            Party::Unknown => '?',
        }
    }

    /// Lenient mapping from a free-form cell: `D`, `R`, `I` map to their
    /// parties, anything else (including empty) to [`Party::Unknown`].
    pub fn from_cell(cell: &str) -> Party {
        match cell.trim() {
            "D" => Party::Democrat,
            "R" => Party::Republican,
            "I" => Party::Independent,
            _ => Party::Unknown,
        }
    }

    /// Mapping from the legacy numeric party codes: 100 is Democrat, 200 is
    /// Republican, anything else Independent.
    pub fn from_legacy_code(code: &str) -> Party {
        match code.trim() {
            "100" => Party::Democrat,
            "200" => Party::Republican,
            _ => Party::Independent,
        }
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// One voter: unique id, display name, party code, home state.
///
/// Identity is keyed on `id`; names may collide (rosters can carry two
/// distinct members with the same surname).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub id: String,
    pub name: String,
    pub party: Party,
    /// Two-letter state code, or empty when the source does not carry one.
    pub state: String,
}

impl Member {
    pub fn new(
        id: impl Into<String>,
        name: impl Into<String>,
        party: Party,
        state: impl Into<String>,
    ) -> Member {
        Member {
            id: id.into(),
            name: name.into(),
            party,
            state: state.into(),
        }
    }
}

/// A single recorded position: yea (+1), nay (-1), or no vote (0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vote {
    Yea,
    Nay,
    NotVoting,
}

impl Vote {
    /// The {-1, 0, +1} encoding.
    pub fn value(self) -> i8 {
        match self {
            Vote::Yea => 1,
            Vote::Nay => -1,
            Vote::NotVoting => 0,
        }
    }
}

/// Map a raw vote code in 0..=9 onto its three-way classification:
/// 1–3 are forms of yea, 4–6 forms of nay, and 0 or 7–9 mean no vote
/// was registered.
pub fn encode_vote(raw_code: u32) -> Result<Vote> {
    match raw_code {
        1..=3 => Ok(Vote::Yea),
        4..=6 => Ok(Vote::Nay),
        0 | 7..=9 => Ok(Vote::NotVoting),
        other => Err(Error::InvalidVoteCode(other)),
    }
}

/// A roster of members and their encoded votes on a set of roll calls.
///
/// Row `i` of the grid is `roster()[i]`; column `j` is `rollcall_ids()[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct VoteMatrix {
    roster: Vec<Member>,
    rollcall_ids: Vec<String>,
    /// Row-major `n_members x n_rollcalls`.
    votes: Vec<Vote>,
}

impl VoteMatrix {
    /// Assemble a matrix from per-member vote rows, validating shape and
    /// roster invariants (unique ids, non-empty names, rectangular grid).
    pub fn new(
        roster: Vec<Member>,
        rollcall_ids: Vec<String>,
        rows: Vec<Vec<Vote>>,
    ) -> Result<VoteMatrix> {
        if rows.len() != roster.len() {
            return Err(Error::DimensionMismatch {
                left: rows.len(),
                right: roster.len(),
            });
        }
        let m = rollcall_ids.len();
        let mut votes = Vec::with_capacity(roster.len() * m);
        for row in &rows {
            if row.len() != m {
                return Err(Error::DimensionMismatch {
                    left: row.len(),
                    right: m,
                });
            }
            votes.extend_from_slice(row);
        }
        let mut seen = HashSet::new();
        for member in &roster {
            if member.name.is_empty() {
                return Err(Error::InvalidMatrix(format!(
                    "member {} has an empty name",
                    member.id
                )));
            }
            if !seen.insert(member.id.as_str()) {
                return Err(Error::InvalidMatrix(format!(
                    "duplicate member id {}",
                    member.id
                )));
            }
        }
        Ok(VoteMatrix {
            roster,
            rollcall_ids,
            votes,
        })
    }

    pub fn n_members(&self) -> usize {
        self.roster.len()
    }

    pub fn n_rollcalls(&self) -> usize {
        self.rollcall_ids.len()
    }

    pub fn roster(&self) -> &[Member] {
        &self.roster
    }

    pub fn rollcall_ids(&self) -> &[String] {
        &self.rollcall_ids
    }

    /// The encoded vote row for member `i`, in roll-call order.
    pub fn row(&self, i: usize) -> &[Vote] {
        let m = self.n_rollcalls();
        &self.votes[i * m..(i + 1) * m]
    }

    pub fn get(&self, member: usize, rollcall: usize) -> Vote {
        self.votes[member * self.n_rollcalls() + rollcall]
    }

    /// Render the matrix in the CSV interchange layout
    /// (`id,name,party,state,v1,...`), using canonical digits 1/6/9 for
    /// yea/nay/no-vote.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,name,party,state");
        for id in &self.rollcall_ids {
            out.push(',');
            out.push_str(id);
        }
        out.push('\n');
        for (i, member) in self.roster.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{}",
                member.id, member.name, member.party, member.state
            ));
            for vote in self.row(i) {
                out.push(',');
                out.push(match vote {
                    Vote::Yea => '1',
                    Vote::Nay => '6',
                    Vote::NotVoting => '9',
                });
            }
            out.push('\n');
        }
        out
    }
}

/// Drop roll calls whose majority side exceeds `threshold` of the votes cast,
/// along with degenerate columns: all-abstain and zero-dissent ones.
///
/// The agreement ratio is `max(yea, nay) / (yea + nay)`; abstentions carry no
/// position and are excluded from the denominator. Zero-dissent columns have
/// ratio 1.0 and are removed at every threshold, so threshold 1.0 disables
/// the filter except for degenerate columns. The roster and the order of
/// surviving columns are unchanged. `threshold` must lie in (0.5, 1.0].
pub fn filter_near_unanimous(m: &VoteMatrix, threshold: f64) -> Result<VoteMatrix> {
    if !(threshold > 0.5 && threshold <= 1.0) {
        return Err(Error::InvalidThreshold(threshold));
    }
    let mut keep = Vec::new();
    for j in 0..m.n_rollcalls() {
        let mut yea = 0u64;
        let mut nay = 0u64;
        for i in 0..m.n_members() {
            match m.get(i, j) {
                Vote::Yea => yea += 1,
                Vote::Nay => nay += 1,
                Vote::NotVoting => {}
            }
        }
        if yea == 0 || nay == 0 {
            continue;
        }
        let agreement = yea.max(nay) as f64 / (yea + nay) as f64;
        if agreement <= threshold {
            keep.push(j);
        }
    }
    let rollcall_ids = keep.iter().map(|&j| m.rollcall_ids[j].clone()).collect();
    let rows = (0..m.n_members())
        .map(|i| keep.iter().map(|&j| m.get(i, j)).collect())
        .collect();
    VoteMatrix::new(m.roster.clone(), rollcall_ids, rows)
}
