//! Command-line front end. [`run`] parses arguments and returns what the
//! binary should print and its exit code, so the commands can be tested
//! without spawning a process.
//!
//! Exit codes: 0 on success or a verdict, 1 on usage and I/O errors,
//! 2 when a verifier reports violations.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::mahonian::{self, Report};
use crate::qseries::distribution;
use crate::relations::{
    extract_bipartition, forbidden_quadruple, is_bipartitional, is_kappa_extensible,
    is_kappa_extension, is_total_order, is_transitive, natural_order, GMap, Relation, SetAlphabet,
};
use crate::statistics::{stat_fg, MajInvStatistic, StatSpec};
use crate::transform::{psi, psi_inverse};
use crate::words::{Composition, Word};

#[derive(Debug, Parser)]
#[command(
    name = "majinv",
    version,
    about = "Graphical maj-inv statistics on words"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a statistic on a word
    Eval(EvalArgs),
    /// Apply the transformation psi^U (or its inverse) to a word
    Transform(TransformArgs),
    /// Decide a property of a relation
    Check(CheckArgs),
    /// Distribution polynomial of a statistic over a rearrangement class
    Distribution(DistributionArgs),
    /// Run an exhaustive verifier and print its report
    Verify(VerifyArgs),
    /// List the mahonian maj-inv statistics for a total order
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
pub struct StatArgs {
    /// inv, maj, kmaj:<k>, fg:<f>:<g>, pair:<U.json>:<V.json> or setmaj
    #[arg(long)]
    pub stat: String,
    /// Alphabet size, when the statistic does not fix it
    #[arg(long)]
    pub size: Option<usize>,
    /// Set alphabet for setmaj, as a JSON list of integer lists
    #[arg(long)]
    pub sets: Option<String>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub stat: StatArgs,
    /// Whitespace-separated letters
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Relation U as JSON
    #[arg(long)]
    pub relation: String,
    #[arg(long)]
    pub word: String,
    #[arg(long)]
    pub inverse: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Transitive,
    TotalOrder,
    Bipartitional,
    KappaExtensible,
    KappaExtension,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub kind: CheckKind,
    #[arg(long)]
    pub relation: Option<String>,
    /// Relation U for kappa-extension
    #[arg(long)]
    pub u: Option<String>,
    /// Candidate extension S for kappa-extension
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DistributionArgs {
    #[command(flatten)]
    pub stat: StatArgs,
    /// Letter multiplicities, e.g. "2,1,1"
    #[arg(long)]
    pub composition: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Macmahon,
    TheoremMajinv,
    Classification,
    Distinctness,
    Closure,
    ProductFormula,
    Applications,
    Psi,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long, default_value_t = 3)]
    pub size: usize,
    #[arg(long, default_value_t = 4)]
    pub max_weight: usize,
    /// Word length bound for distinctness and psi
    #[arg(long, default_value_t = 3)]
    pub max_len: usize,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Total order S as JSON
    #[arg(long)]
    pub order: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn error(message: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: message,
            code: 1,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::error(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(Error::TooLarge { what, size, cap }) => Outcome::error(format!(
            "refused: {what} at size {size} exceeds the cap of {cap}\n"
        )),
        Err(e) => Outcome::error(format!("error: {e}\n")),
    }
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Eval(a) => eval(a),
        Command::Transform(a) => transform(a),
        Command::Check(a) => check(a),
        Command::Distribution(a) => cmd_distribution(a),
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(Path::new(path))
        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))
}

fn read_relation(path: &str) -> Result<Relation> {
    Relation::from_json(&read_file(path)?)
}

enum Built {
    Stat(MajInvStatistic),
    Fg(GMap),
}

impl Built {
    fn size(&self) -> usize {
        match self {
            Built::Stat(s) => s.size(),
            Built::Fg(m) => m.size(),
        }
    }

    fn into_stat(self) -> MajInvStatistic {
        match self {
            Built::Stat(s) => s,
            Built::Fg(m) => MajInvStatistic::from_gmap(&m),
        }
    }
}

fn build_stat(args: &StatArgs, fallback_size: Option<usize>) -> Result<Built> {
    let spec: StatSpec = args.stat.parse()?;
    let size = args.size.or(fallback_size);
    let need_size =
        || size.ok_or_else(|| Error::Input(format!("--size is required for statistic {spec}")));
    let built = match &spec {
        StatSpec::Inv => Built::Stat(MajInvStatistic::inv(need_size()?)?),
        StatSpec::Maj => Built::Stat(MajInvStatistic::maj(need_size()?)?),
        StatSpec::KMaj(k) => Built::Stat(MajInvStatistic::k_maj(need_size()?, *k)?),
        StatSpec::Fg { f, g } => Built::Fg(GMap::new(f.clone(), g.clone())?),
        StatSpec::Pair { u_path, v_path } => Built::Stat(MajInvStatistic::new(
            read_relation(u_path)?,
            read_relation(v_path)?,
        )?),
        StatSpec::SetMaj => {
            let sets = args
                .sets
                .as_deref()
                .ok_or_else(|| Error::Input("--sets is required for setmaj".into()))?;
            Built::Stat(MajInvStatistic::set_maj(&SetAlphabet::from_json(sets)?))
        }
    };
    if let Some(s) = args.size {
        if s != built.size() {
            return Err(Error::SizeMismatch {
                left: s,
                right: built.size(),
            });
        }
    }
    Ok(built)
}

fn eval(a: EvalArgs) -> Result<Outcome> {
    let built = build_stat(&a.stat, None)?;
    let word = Word::parse(&a.word, built.size())?;
    let value = match &built {
        Built::Fg(m) => stat_fg(m, &word)?,
        Built::Stat(s) => s.eval(&word)?,
    };
    Ok(Outcome::ok(if a.json {
        format!("{}\n", json!({ "value": value }))
    } else {
        format!("{value}\n")
    }))
}

fn transform(a: TransformArgs) -> Result<Outcome> {
    let u = read_relation(&a.relation)?;
    let word = Word::parse(&a.word, u.size())?;
    let image = if a.inverse {
        psi_inverse(&u, &word)?
    } else {
        psi(&u, &word)?
    };
    Ok(Outcome::ok(if a.json {
        format!("{}\n", json!({ "word": image.letters() }))
    } else {
        format!("{image}\n")
    }))
}

fn check(a: CheckArgs) -> Result<Outcome> {
    let mut extra = serde_json::Map::new();
    let verdict = if a.kind == CheckKind::KappaExtension {
        let (Some(u), Some(s)) = (&a.u, &a.s) else {
            return Err(Error::Input(
                "kappa-extension needs both --u and --s".into(),
            ));
        };
        is_kappa_extension(&read_relation(s)?, &read_relation(u)?)?
    } else {
        let path = a
            .relation
            .as_deref()
            .ok_or_else(|| Error::Input("--relation is required".into()))?;
        let rel = read_relation(path)?;
        match a.kind {
            CheckKind::Transitive => is_transitive(&rel),
            CheckKind::TotalOrder => is_total_order(&rel),
            CheckKind::Bipartitional => {
                let bip = is_bipartitional(&rel);
                if bip {
                    let b = extract_bipartition(&rel)?;
                    extra.insert(
                        "bipartition".into(),
                        serde_json::to_value(&b).expect("serializes"),
                    );
                }
                bip
            }
            CheckKind::KappaExtensible => {
                let ext = is_kappa_extensible(&rel);
                if let (false, Some(q)) = (ext, forbidden_quadruple(&rel)) {
                    extra.insert("quadruple".into(), json!(q));
                }
                ext
            }
            CheckKind::KappaExtension => unreachable!(),
        }
    };
    let mut out = String::new();
    if a.json {
        extra.insert("verdict".into(), json!(verdict));
        writeln!(out, "{}", serde_json::Value::Object(extra)).expect("string write");
    } else {
        writeln!(out, "{verdict}").expect("string write");
        if let Some(b) = extra.get("bipartition") {
            writeln!(out, "{b}").expect("string write");
        }
    }
    Ok(Outcome::ok(out))
}

fn cmd_distribution(a: DistributionArgs) -> Result<Outcome> {
    let c: Composition = a.composition.parse()?;
    let stat = build_stat(&a.stat, Some(c.alphabet_size()))?.into_stat();
    let poly = distribution(&stat, &c)?;
    let value = json!({ "text": poly.to_string(), "coeffs": serde_json::to_value(&poly).expect("serializes")["coeffs"] });
    Ok(Outcome::ok(if a.json {
        format!("{value}\n")
    } else {
        format!("{poly}\n{}\n", poly.to_json())
    }))
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let report: Report = match a.suite {
        Suite::Macmahon => mahonian::verify_macmahon(a.size, a.max_weight)?,
        Suite::TheoremMajinv => mahonian::verify_theorem_majinv(a.size, a.max_weight)?,
        Suite::Classification => mahonian::verify_classification(a.size, a.max_weight)?,
        Suite::Distinctness => mahonian::verify_distinctness(a.size, a.max_len)?,
        Suite::Closure => mahonian::verify_kappa_machinery(a.size)?,
        Suite::ProductFormula => mahonian::verify_product_formula(a.size, a.max_weight)?,
        Suite::Applications => mahonian::verify_applications(a.max_weight)?,
        Suite::Psi => mahonian::verify_psi(a.size, a.max_len)?,
    };
    let mut out = Outcome::ok(format!("{}\n", report.to_json()));
    if !report.is_clean() {
        out.code = 2;
        out.stderr = format!("{} violation(s)\n", report.violations.len());
    }
    Ok(out)
}

fn enumerate(a: EnumerateArgs) -> Result<Outcome> {
    let s = read_relation(&a.order)?;
    let list = mahonian::statistics_json(&s)?;
    let items = list.as_array().expect("array");
    if a.json {
        return Ok(Outcome::ok(format!("{list}\n")));
    }
    let mut out = String::new();
    let default = natural_order(s.size())? == s;
    writeln!(
        out,
        "{} statistics{}",
        items.len(),
        if default {
            " for the natural order"
        } else {
            ""
        }
    )
    .expect("string write");
    for item in items {
        writeln!(out, "{item}").expect("string write");
    }
    Ok(Outcome::ok(out))
}
