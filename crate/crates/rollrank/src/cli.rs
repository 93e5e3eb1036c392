//! Command-line interface: `rank` scores one anchor policy, `compare` runs
//! two policies side by side and reports their rank correlations.
//!
//! Exit codes: 0 on success, 2 for parse/validation errors, 3 for numerical
//! (singular-system) errors.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::anchors::{anchors_by_name, anchors_internal, resolve_member, AnchorSpec};
use crate::error::Result;
use crate::harmonic::{laplacian, solve_harmonic, AnchorSet};
use crate::ingest::{filter_near_unanimous, parse_csv, parse_ord, VoteMatrix};
use crate::rank::{kendall_tau, make_ranking, spearman_rho, write_ranking, OutputFormat, Ranking};
use crate::similarity::{similarity_matrix, WeightMatrix};

#[derive(Parser, Debug)]
#[command(
    name = "rollrank",
    about = "Rank voters on a one-dimensional scale from their roll-call votes",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank all members from a vote file under one anchor policy.
    Rank(RankArgs),
    /// Rank under two anchor policies and report Kendall tau / Spearman rho.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Header `id,name,party,state,v1,...`; one digit 0-9 per vote cell.
    Csv,
    /// Legacy fixed-width records: 36-column header region, then one digit
    /// per roll call.
    Ord,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputKind {
    Text,
    Csv,
    Json,
}

impl From<OutputKind> for OutputFormat {
    fn from(kind: OutputKind) -> OutputFormat {
        match kind {
            OutputKind::Text => OutputFormat::Text,
            OutputKind::Csv => OutputFormat::Csv,
            OutputKind::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("anchoring").required(true).args(["anchor", "auto_anchors"]))]
pub struct RankArgs {
    /// Vote file to rank.
    #[arg(long)]
    pub input: PathBuf,

    /// Input layout; inferred from the file extension when omitted
    /// (`.ord` means ord, anything else csv).
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,

    /// Drop roll calls whose majority side exceeds this fraction of the
    /// votes cast; 1.0 keeps everything except unanimous and empty columns.
    #[arg(long, default_value_t = 0.95)]
    pub filter_threshold: f64,

    /// Anchor a member at a fixed score, as NAME_OR_ID=SCORE
    /// (e.g. FEINGOLD=+1). Repeat for each anchor; needs at least one
    /// positive and one negative score.
    #[arg(long = "anchor", value_name = "NAME_OR_ID=SCORE")]
    pub anchor: Vec<AnchorSpec>,

    /// Anchor the two least-similar members at +1 and -1.
    #[arg(long)]
    pub auto_anchors: bool,

    /// With --auto-anchors: which member of the detected pair gets +1.
    #[arg(long, conflicts_with = "anchor", value_name = "NAME_OR_ID")]
    pub orient: Option<String>,

    /// Ranking serialization written to stdout.
    #[arg(long, value_enum, default_value_t = OutputKind::Text)]
    pub output: OutputKind,

    /// Also write the similarity matrix to this file as CSV
    /// (rows/columns in roster order).
    #[arg(long, value_name = "FILE")]
    pub dump_weights: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Vote file to rank.
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,

    #[arg(long, default_value_t = 0.95)]
    pub filter_threshold: f64,

    /// Anchor policy A: NAME_OR_ID=SCORE entries (repeat), or the single
    /// word `auto`.
    #[arg(long = "anchors-a", required = true, value_name = "SPEC")]
    pub anchors_a: Vec<String>,

    /// Anchor policy B, same syntax as policy A.
    #[arg(long = "anchors-b", required = true, value_name = "SPEC")]
    pub anchors_b: Vec<String>,

    /// With `--anchors-a auto`: which member of the detected pair gets +1.
    #[arg(long, value_name = "NAME_OR_ID")]
    pub orient_a: Option<String>,

    /// With `--anchors-b auto`: which member of the detected pair gets +1.
    #[arg(long, value_name = "NAME_OR_ID")]
    pub orient_b: Option<String>,

    /// `text` prints both tables plus the correlations; `json` emits one
    /// object with both rankings and the correlations.
    #[arg(long, value_enum, default_value_t = OutputKind::Text)]
    pub output: OutputKind,
}

fn load_votes(path: &Path, format: Option<InputFormat>) -> Result<VoteMatrix> {
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("ord") => InputFormat::Ord,
        _ => InputFormat::Csv,
    });
    let reader = BufReader::new(File::open(path).map_err(|e| {
        std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))
    })?);
    match format {
        InputFormat::Csv => parse_csv(reader),
        InputFormat::Ord => parse_ord(reader),
    }
}

/// An anchor policy named on the command line.
enum AnchorPolicy {
    Named(Vec<AnchorSpec>),
    Auto { orient: Option<String> },
}

impl AnchorPolicy {
    fn parse(specs: &[String], orient: Option<String>) -> Result<AnchorPolicy> {
        if specs.len() == 1 && specs[0].eq_ignore_ascii_case("auto") {
            return Ok(AnchorPolicy::Auto { orient });
        }
        let parsed = specs
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<AnchorSpec>>>()?;
        Ok(AnchorPolicy::Named(parsed))
    }

    /// Resolve to a concrete anchor set plus a human-readable description.
    fn resolve(&self, votes: &VoteMatrix, weights: &WeightMatrix) -> Result<(AnchorSet, String)> {
        match self {
            AnchorPolicy::Named(specs) => {
                let anchors = anchors_by_name(votes.roster(), specs)?;
                let desc = specs
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                Ok((anchors, desc))
            }
            AnchorPolicy::Auto { orient } => {
                let orientation = orient
                    .as_deref()
                    .map(|q| resolve_member(votes.roster(), q))
                    .transpose()?;
                let picked = anchors_internal(weights, orientation)?;
                let (i, j) = picked.pair;
                let name = |k: usize| votes.roster()[k].name.clone();
                let plus = if picked.anchors.score_of(i) == Some(1.0) {
                    i
                } else {
                    j
                };
                let minus = if plus == i { j } else { i };
                let mut desc = format!(
                    "auto: least-similar pair {}={:+} / {}={:+} (similarity {})",
                    name(plus),
                    1,
                    name(minus),
                    -1,
                    picked.weight
                );
                if picked.orientation_arbitrary {
                    desc.push_str("; +1 side arbitrary, fix with --orient");
                }
                Ok((picked.anchors, desc))
            }
        }
    }
}

fn rank_with_policy(
    votes: &VoteMatrix,
    weights: &WeightMatrix,
    policy: &AnchorPolicy,
) -> Result<(Ranking, String)> {
    let (anchors, desc) = policy.resolve(votes, weights)?;
    let lap = laplacian(weights);
    let scores = solve_harmonic(&lap, &anchors)?;
    let ranking = make_ranking(&scores, votes.roster())?;
    Ok((ranking, desc))
}

fn run_rank(args: &RankArgs) -> Result<()> {
    let raw = load_votes(&args.input, args.format)?;
    let votes = filter_near_unanimous(&raw, args.filter_threshold)?;
    let weights = similarity_matrix(&votes)?;
    if let Some(path) = &args.dump_weights {
        let mut out = File::create(path)?;
        weights.write_csv(votes.roster(), &mut out)?;
    }

    let policy = if args.auto_anchors {
        AnchorPolicy::Auto {
            orient: args.orient.clone(),
        }
    } else {
        AnchorPolicy::Named(args.anchor.clone())
    };
    let (ranking, desc) = rank_with_policy(&votes, &weights, &policy)?;
    if args.auto_anchors {
        eprintln!("anchors: {desc}");
    }
    print!("{}", write_ranking(&ranking, args.output.into()));
    Ok(())
}

fn run_compare(args: &CompareArgs) -> Result<()> {
    let raw = load_votes(&args.input, args.format)?;
    let votes = filter_near_unanimous(&raw, args.filter_threshold)?;
    let weights = similarity_matrix(&votes)?;

    let policy_a = AnchorPolicy::parse(&args.anchors_a, args.orient_a.clone())?;
    let policy_b = AnchorPolicy::parse(&args.anchors_b, args.orient_b.clone())?;
    let (ranking_a, desc_a) = rank_with_policy(&votes, &weights, &policy_a)?;
    let (ranking_b, desc_b) = rank_with_policy(&votes, &weights, &policy_b)?;
    let tau = kendall_tau(&ranking_a, &ranking_b)?;
    let rho = spearman_rho(&ranking_a, &ranking_b)?;

    match args.output {
        OutputKind::Json => {
            let report = serde_json::json!({
                "anchors_a": desc_a,
                "anchors_b": desc_b,
                "ranking_a": ranking_a,
                "ranking_b": ranking_b,
                "kendall_tau": tau,
                "spearman_rho": rho,
            });
            println!("{report}");
        }
        _ => {
            let mut out = String::new();
            out.push_str(&format!("== Ranking A ({desc_a}) ==\n"));
            out.push_str(&write_ranking(&ranking_a, OutputFormat::Text));
            out.push_str(&format!("\n== Ranking B ({desc_b}) ==\n"));
            out.push_str(&write_ranking(&ranking_b, OutputFormat::Text));
            out.push_str(&format!("\nkendall_tau  = {tau:.6}\n"));
            out.push_str(&format!("spearman_rho = {rho:.6}\n"));
            print!("{out}");
        }
    }
    Ok(())
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Rank(args) => run_rank(args),
        Command::Compare(args) => run_compare(args),
    }
}
