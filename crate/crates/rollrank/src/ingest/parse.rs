//! Parsers for the two supported vote-file layouts.
//!
//! CSV layout: header `id,name,party,state,v1,...,vm`, one row per member,
//! vote cells a single digit 0–9.
//!
//! Legacy fixed-width `.ord` layout: columns 1–36 are the member header
//! region, of which we extract id (cols 4–8), party code (cols 21–23) and
//! name (cols 26–36); columns 37+ carry one vote digit per roll call.

use std::collections::HashMap;
use std::io::Read;

use crate::error::{Error, Result};
use crate::ingest::{encode_vote, Member, Party, Vote, VoteMatrix};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn read_to_string(mut source: impl Read) -> Result<String> {
    let mut buf = String::new();
    source.read_to_string(&mut buf)?;
    // Tolerate a UTF-8 byte-order mark from spreadsheet exports.
    Ok(buf.trim_start_matches('\u{feff}').to_string())
}

fn encode_cell(cell: &str, line: usize) -> Result<Vote> {
    let code: u32 = cell
        .parse()
        .map_err(|_| parse_err(line, format!("vote cell '{cell}' is not a digit 0-9")))?;
    encode_vote(code).map_err(|_| parse_err(line, format!("vote code {code} is outside 0-9")))
}

/// Track first-seen lines so a duplicate id can cite the offending line.
fn check_duplicate(seen: &mut HashMap<String, usize>, id: &str, line: usize) -> Result<()> {
    if let Some(first) = seen.insert(id.to_string(), line) {
        return Err(parse_err(
            line,
            format!("duplicate member id {id} (first seen on line {first})"),
        ));
    }
    Ok(())
}

/// Parse the CSV vote layout.
///
/// Roster order equals file row order; roll-call ids come from the header's
/// vote-column names.
pub fn parse_csv(source: impl Read) -> Result<VoteMatrix> {
    let text = read_to_string(source)?;
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(false)
        .from_reader(text.as_bytes());

    let headers = reader
        .headers()
        .map_err(|e| csv_error_to_parse(e, 1))?
        .clone();
    let fixed = ["id", "name", "party", "state"];
    if headers.len() < fixed.len() {
        return Err(parse_err(1, "header must start with id,name,party,state"));
    }
    for (k, want) in fixed.iter().enumerate() {
        if headers[k].to_ascii_lowercase() != *want {
            return Err(parse_err(
                1,
                format!(
                    "header column {} is '{}', expected '{want}'",
                    k + 1,
                    &headers[k]
                ),
            ));
        }
    }
    let rollcall_ids: Vec<String> = headers.iter().skip(fixed.len()).map(String::from).collect();

    let mut roster = Vec::new();
    let mut rows = Vec::new();
    let mut seen = HashMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error_to_parse(e, 0))?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        let id = record[0].to_string();
        if id.is_empty() {
            return Err(parse_err(line, "empty member id"));
        }
        check_duplicate(&mut seen, &id, line)?;
        let name = record[1].to_string();
        if name.is_empty() {
            return Err(parse_err(line, format!("member {id} has an empty name")));
        }
        let party = Party::from_cell(&record[2]);
        let state = record[3].to_string();
        let votes = record
            .iter()
            .skip(4)
            .map(|cell| encode_cell(cell, line))
            .collect::<Result<Vec<Vote>>>()?;
        roster.push(Member::new(id, name, party, state));
        rows.push(votes);
    }
    VoteMatrix::new(roster, rollcall_ids, rows)
}

fn csv_error_to_parse(err: csv::Error, fallback_line: usize) -> Error {
    let line = err
        .position()
        .map(|p| p.line() as usize)
        .unwrap_or(fallback_line);
    match err.kind() {
        csv::ErrorKind::UnequalLengths {
            expected_len, len, ..
        } => parse_err(
            line,
            format!("ragged row: {len} fields, expected {expected_len}"),
        ),
        _ => parse_err(line, err.to_string()),
    }
}

const ORD_HEADER_WIDTH: usize = 36;

/// Parse the legacy fixed-width `.ord` vote layout.
///
/// Roll calls are assigned ids `v1..vm` in column order, mirroring the CSV
/// header convention, so equivalent content parses to an equal [`VoteMatrix`].
pub fn parse_ord(source: impl Read) -> Result<VoteMatrix> {
    let text = read_to_string(source)?;
    let mut roster = Vec::new();
    let mut rows: Vec<Vec<Vote>> = Vec::new();
    let mut seen = HashMap::new();
    let mut width = None;
    let mut first_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let record = raw.trim_end_matches('\r');
        if record.is_empty() {
            continue;
        }
        let chars: Vec<char> = record.chars().collect();
        if chars.len() <= ORD_HEADER_WIDTH {
            return Err(parse_err(
                line,
                format!(
                    "record is {} characters, need more than the {ORD_HEADER_WIDTH}-character header region",
                    chars.len()
                ),
            ));
        }
        let field = |lo: usize, hi: usize| -> String {
            chars[lo - 1..hi]
                .iter()
                .collect::<String>()
                .trim()
                .to_string()
        };
        let id = field(4, 8);
        if id.is_empty() {
            return Err(parse_err(line, "empty member id in columns 4-8"));
        }
        check_duplicate(&mut seen, &id, line)?;
        let party = Party::from_legacy_code(&field(21, 23));
        let name = field(26, 36);
        if name.is_empty() {
            return Err(parse_err(line, format!("member {id} has an empty name")));
        }

        let vote_region = &chars[ORD_HEADER_WIDTH..];
        match width {
            None => {
                width = Some(vote_region.len());
                first_line = line;
            }
            Some(w) if w != vote_region.len() => {
                return Err(parse_err(
                    line,
                    format!(
                        "ragged record: {} vote columns, expected {w} (as on line {first_line})",
                        vote_region.len()
                    ),
                ));
            }
            Some(_) => {}
        }
        let votes = vote_region
            .iter()
            .map(|&c| match c.to_digit(10) {
                Some(d) => encode_vote(d)
                    .map_err(|_| parse_err(line, format!("vote digit {d} is outside 0-9"))),
                None => Err(parse_err(
                    line,
                    format!("vote column holds '{c}', expected a digit 0-9"),
                )),
            })
            .collect::<Result<Vec<Vote>>>()?;
        roster.push(Member::new(id, name, party, ""));
        rows.push(votes);
    }

    let m = width.unwrap_or(0);
    let rollcall_ids = (1..=m).map(|k| format!("v{k}")).collect();
    VoteMatrix::new(roster, rollcall_ids, rows)
}
