//! Anchor selection: named domain-knowledge exemplars, or the least-similar
//! pair detected inside the weight matrix.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::harmonic::AnchorSet;
use crate::ingest::Member;
use crate::similarity::WeightMatrix;

/// One requested anchor: a member id or exact name, and the score to pin.
///
/// Parses from `NAME_OR_ID=SCORE`, e.g. `FEINGOLD=+1` or `49703=-0.5`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnchorSpec {
    pub query: String,
    pub score: f64,
}

impl FromStr for AnchorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<AnchorSpec> {
        let (query, score_text) = s
            .rsplit_once('=')
            .ok_or_else(|| Error::InvalidAnchorSpec(s.to_string()))?;
        let query = query.trim();
        let score: f64 = score_text
            .trim()
            .parse()
            .map_err(|_| Error::InvalidAnchorSpec(s.to_string()))?;
        if query.is_empty() || !score.is_finite() {
            return Err(Error::InvalidAnchorSpec(s.to_string()));
        }
        Ok(AnchorSpec {
            query: query.to_string(),
            score,
        })
    }
}

impl fmt::Display for AnchorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.query, self.score)
    }
}

/// Resolve a single query against the roster: exact id match first, then
/// case-insensitive exact name match.
pub fn resolve_member(roster: &[Member], query: &str) -> Result<usize> {
    if let Some(i) = roster.iter().position(|m| m.id == query) {
        return Ok(i);
    }
    let name_matches: Vec<usize> = roster
        .iter()
        .enumerate()
        .filter(|(_, m)| m.name.eq_ignore_ascii_case(query))
        .map(|(i, _)| i)
        .collect();
    match name_matches.len() {
        1 => Ok(name_matches[0]),
        0 => {
            let lowered = query.to_ascii_lowercase();
            let mut suggestions: Vec<String> = roster
                .iter()
                .filter(|m| {
                    let name = m.name.to_ascii_lowercase();
                    name.contains(&lowered) || lowered.contains(&name)
                })
                .map(|m| format!("{} ({})", m.name, m.id))
                .collect();
            suggestions.truncate(5);
            Err(Error::AnchorNotFound {
                query: query.to_string(),
                suggestions,
            })
        }
        _ => Err(Error::AmbiguousAnchor {
            query: query.to_string(),
            matches: name_matches
                .iter()
                .map(|&i| format!("{} [{}-{}]", roster[i].id, roster[i].party, roster[i].state))
                .collect(),
        }),
    }
}

/// Build an anchor set from named members and scores.
///
/// Each spec must resolve to exactly one roster member; resolution is by id,
/// then by exact name. Duplicate members, unresolvable or ambiguous names,
/// and score sets without both signs are rejected.
pub fn anchors_by_name(roster: &[Member], specs: &[AnchorSpec]) -> Result<AnchorSet> {
    let mut entries = Vec::with_capacity(specs.len());
    for spec in specs {
        let index = resolve_member(roster, &spec.query)?;
        if entries.iter().any(|&(i, _)| i == index) {
            return Err(Error::DuplicateAnchor(format!(
                "{} ({})",
                roster[index].name, roster[index].id
            )));
        }
        entries.push((index, spec.score));
    }
    AnchorSet::new(entries)
}

/// The outcome of least-similar-pair anchor selection.
#[derive(Clone, Debug, PartialEq)]
pub struct InternalAnchors {
    pub anchors: AnchorSet,
    /// The selected pair `(i, j)` with `i < j`.
    pub pair: (usize, usize),
    /// The pair's similarity, the global off-diagonal minimum.
    pub weight: f64,
    /// True when no orientation was requested and +1 went to the lower
    /// index purely by convention.
    pub orientation_arbitrary: bool,
}

/// Pick the two least-similar members as anchors at +1 and -1.
///
/// The minimizing pair `(i, j)` with `i < j` is found by a full scan; ties
/// break toward the smallest `i`, then the smallest `j`, so the result is
/// deterministic. If `orientation` names one member of the pair, that member
/// receives +1; otherwise the lower index does and the choice is flagged as
/// arbitrary.
pub fn anchors_internal(w: &WeightMatrix, orientation: Option<usize>) -> Result<InternalAnchors> {
    let n = w.n();
    if n < 2 {
        return Err(Error::InsufficientMembers { got: n, min: 2 });
    }
    let mut best = (0usize, 1usize);
    let mut best_weight = w.get(0, 1);
    for i in 0..n {
        for j in (i + 1)..n {
            if w.get(i, j) < best_weight {
                best_weight = w.get(i, j);
                best = (i, j);
            }
        }
    }
    let (i, j) = best;
    let (positive, negative, arbitrary) = match orientation {
        Some(o) if o == i => (i, j, false),
        Some(o) if o == j => (j, i, false),
        Some(o) => {
            return Err(Error::OrientationNotInPair {
                requested: o,
                a: i,
                b: j,
            })
        }
        None => (i, j, true),
    };
    Ok(InternalAnchors {
        anchors: AnchorSet::new([(positive, 1.0), (negative, -1.0)])?,
        pair: (i, j),
        weight: best_weight,
        orientation_arbitrary: arbitrary,
    })
}
