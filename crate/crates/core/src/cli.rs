//! Command-line front end. [`run`] parses arguments and returns the exit code
//! together with everything that would be written to stdout and stderr, so the
//! binary is a thin wrapper and the behaviour is testable in-process.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::patterns::{
    is_minimal_nonseparable_fast, is_separable, minimal_nonseparable_elements, separable_elements, st_class,
    PatternSet,
};
use crate::quotients::{interval_splitting, quotient_of_interval};
use crate::root_system::{full_system, inversion_roots, is_separable_recursive};
use crate::signed_perm::SignedPermutation;
use crate::theorems::{check_info, checks, run_check, LemmaReport};
use crate::weak_order::{interval_right, lower_ideal_left, reduced_word_count, reduced_words};

/// Largest rank accepted by commands acting on a single element.
pub const MAX_ELEMENT_RANK: usize = 8;
/// Largest rank accepted by commands that enumerate `B_n`.
pub const MAX_EXHAUSTIVE_RANK: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "typeb", version, about = "Signed permutations, weak order ideals, separability and splittings")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for exhaustive runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether W avoids the six forbidden signed patterns.
    Separable {
        #[arg(allow_hyphen_values = true)]
        window: String,
    },
    /// Compares the pattern classifier against the recursive root-system definition on W.
    CrossCheck {
        #[arg(allow_hyphen_values = true)]
        window: String,
    },
    /// Whether W is minimal non-separable, or list all such elements of B_n.
    MinimalNonsep(MinimalArgs),
    /// Rank-generating polynomial of [e,W]_L or [e,W]_R.
    IdealPoly(IdealArgs),
    /// The generalized quotient W/[e,U]_R.
    Quotient {
        #[arg(allow_hyphen_values = true)]
        window: String,
    },
    /// Tests whether (W/[e,U]_R, [e,U]_R) is a splitting.
    SplitCheck {
        #[arg(allow_hyphen_values = true)]
        window: String,
    },
    /// Runs an exhaustive check, or every check valid at the given rank with `all`.
    Verify(VerifyArgs),
    /// Reduced words of W, as lists of simple reflection indices.
    ReducedWords {
        #[arg(allow_hyphen_values = true)]
        window: String,
        /// Maximum number of words to print.
        #[arg(long, default_value_t = 50)]
        limit: usize,
    },
    /// Worked examples: the separable elements of B_2, or the two standardization classes in B_4.
    Examples { which: Example },
    /// Lists the registered checks.
    Checks,
}

#[derive(Args, Debug)]
struct MinimalArgs {
    #[arg(allow_hyphen_values = true)]
    window: Option<String>,
    #[arg(long, requires = "n", conflicts_with = "window")]
    list: bool,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("side").required(true).args(["left", "right"])))]
struct IdealArgs {
    #[arg(allow_hyphen_values = true)]
    window: String,
    #[arg(long)]
    left: bool,
    #[arg(long)]
    right: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    id: String,
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Example {
    #[value(alias = "3.1")]
    B2Separable,
    #[value(alias = "3.5")]
    StClasses,
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

/// One command's result in all three renderings.
struct Rendered {
    failed: bool,
    text: String,
    json: Value,
    table: Table,
}

impl Rendered {
    fn to_stdout(&self, format: Format) -> String {
        let mut out = match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize"),
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer.write_record(&self.table.header).expect("in-memory write");
                for row in &self.table.rows {
                    writer.write_record(row).expect("in-memory write");
                }
                String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn parse_element(window: &str) -> Result<SignedPermutation, CliError> {
    let w: SignedPermutation = window.parse()?;
    if w.rank() > MAX_ELEMENT_RANK {
        return Err(Error::RankOutOfRange { n: w.rank(), min: 1, max: MAX_ELEMENT_RANK }.into());
    }
    Ok(w)
}

fn exhaustive_rank(n: usize) -> Result<usize, CliError> {
    if !(1..=MAX_EXHAUSTIVE_RANK).contains(&n) {
        return Err(Error::RankOutOfRange { n, min: 1, max: MAX_EXHAUSTIVE_RANK }.into());
    }
    Ok(n)
}

fn element_list(elements: &[SignedPermutation]) -> (String, Vec<Vec<String>>) {
    let lines: Vec<String> = elements.iter().map(ToString::to_string).collect();
    let rows = lines.iter().map(|l| vec![l.clone()]).collect();
    (lines.join("\n"), rows)
}

fn separable(window: &str) -> Result<Rendered, CliError> {
    let w = parse_element(window)?;
    let verdict = is_separable(&w);
    let pattern = PatternSet::named("sep-forbidden-6")?
        .first_contained(&w)
        .map(ToString::to_string);
    Ok(Rendered {
        failed: false,
        text: verdict.to_string(),
        json: json!({ "element": w, "separable": verdict, "forbidden_pattern": pattern }),
        table: Table {
            header: vec!["element", "separable", "forbidden_pattern"],
            rows: vec![vec![w.to_string(), verdict.to_string(), pattern.unwrap_or_default()]],
        },
    })
}

fn cross_check(window: &str) -> Result<Rendered, CliError> {
    let w = parse_element(window)?;
    let by_patterns = is_separable(&w);
    let by_roots = is_separable_recursive(&inversion_roots(&w), &full_system(w.rank())?)?;
    let agree = by_patterns == by_roots;
    Ok(Rendered {
        failed: !agree,
        text: format!("patterns: {by_patterns}\nroot system: {by_roots}\nagree: {agree}"),
        json: json!({ "element": w, "patterns": by_patterns, "root_system": by_roots, "agree": agree }),
        table: Table {
            header: vec!["element", "patterns", "root_system", "agree"],
            rows: vec![vec![w.to_string(), by_patterns.to_string(), by_roots.to_string(), agree.to_string()]],
        },
    })
}

fn minimal_nonsep(args: &MinimalArgs) -> Result<Rendered, CliError> {
    if args.list {
        let n = exhaustive_rank(args.n.expect("clap enforces --n with --list"))?;
        let elements = minimal_nonseparable_elements(n)?;
        let (text, rows) = element_list(&elements);
        return Ok(Rendered {
            failed: false,
            text,
            json: json!({ "n": n, "count": elements.len(), "elements": elements }),
            table: Table { header: vec!["element"], rows },
        });
    }
    let window = args
        .window
        .as_deref()
        .ok_or_else(|| CliError::Usage("give a window, or --list --n k".into()))?;
    let w = parse_element(window)?;
    let verdict = is_minimal_nonseparable_fast(&w);
    Ok(Rendered {
        failed: false,
        text: verdict.to_string(),
        json: json!({ "element": w, "minimal_nonseparable": verdict }),
        table: Table {
            header: vec!["element", "minimal_nonseparable"],
            rows: vec![vec![w.to_string(), verdict.to_string()]],
        },
    })
}

fn ideal_poly(args: &IdealArgs) -> Result<Rendered, CliError> {
    let w = parse_element(&args.window)?;
    let (ideal, side) = if args.left {
        (lower_ideal_left(&w), "left")
    } else {
        (interval_right(&w), "right")
    };
    let poly = ideal.rank_polynomial();
    Ok(Rendered {
        failed: false,
        text: poly.to_string(),
        json: json!({
            "element": w,
            "side": side,
            "size": ideal.len(),
            "polynomial": poly,
            "symmetric": poly.is_symmetric(),
            "unimodal": poly.is_unimodal(),
        }),
        table: Table {
            header: vec!["degree", "coefficient"],
            rows: poly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(d, c)| vec![d.to_string(), c.to_string()])
                .collect(),
        },
    })
}

fn quotient(window: &str) -> Result<Rendered, CliError> {
    let u = parse_element(window)?;
    let ideal = quotient_of_interval(&u);
    let (text, rows) = element_list(ideal.elements());
    Ok(Rendered {
        failed: false,
        text,
        json: json!({ "u": u, "apex": ideal.apex(), "size": ideal.len(), "elements": ideal.elements() }),
        table: Table { header: vec!["element"], rows },
    })
}

fn split_check(window: &str) -> Result<Rendered, CliError> {
    let u = parse_element(window)?;
    let report = interval_splitting(&u)?;
    let separable = is_separable(&u);
    let consistent = report.is_splitting == separable;
    let mut text = format!(
        "splitting: {}\nseparable: {separable}\n|W/U| = {}, |U| = {}, |W| = {}",
        report.is_splitting, report.counts.x, report.counts.y, report.counts.group
    );
    if let Some(witness) = &report.witness {
        text.push_str(&format!("\nwitness: {}", serde_json::to_string(witness).expect("witness serializes")));
    }
    let mut json = to_json(&report);
    json["u"] = to_json(&u);
    json["separable"] = Value::Bool(separable);
    Ok(Rendered {
        failed: !consistent,
        text,
        json,
        table: Table {
            header: vec!["u", "splitting", "separable", "quotient_size", "interval_size", "group_order"],
            rows: vec![vec![
                u.to_string(),
                report.is_splitting.to_string(),
                separable.to_string(),
                report.counts.x.to_string(),
                report.counts.y.to_string(),
                report.counts.group.to_string(),
            ]],
        },
    })
}

fn verify(args: &VerifyArgs) -> Result<Rendered, CliError> {
    let reports: Vec<LemmaReport> = if args.id == "all" {
        exhaustive_rank(args.n)?;
        checks()
            .iter()
            .filter(|c| (c.min_n..=c.max_n).contains(&args.n))
            .map(|c| run_check(c.id, args.n))
            .collect::<Result<_, _>>()?
    } else {
        let info = check_info(&args.id)?;
        if info.max_n > MAX_EXHAUSTIVE_RANK && args.n > MAX_ELEMENT_RANK {
            return Err(Error::RankOutOfRange { n: args.n, min: info.min_n, max: info.max_n }.into());
        }
        vec![run_check(info.id, args.n)?]
    };
    let failed = reports.iter().any(|r| !r.pass);
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.lemma_id.clone(),
                r.n.to_string(),
                r.universe.to_string(),
                r.checked.to_string(),
                r.pass.to_string(),
                r.vacuous.to_string(),
                r.witnesses.len().to_string(),
            ]
        })
        .collect();
    let json = if args.id == "all" { to_json(&reports) } else { to_json(&reports[0]) };
    Ok(Rendered {
        failed,
        text: serde_json::to_string_pretty(&json).expect("reports serialize"),
        json,
        table: Table {
            header: vec!["theorem", "n", "universe", "checked", "pass", "vacuous", "witnesses"],
            rows,
        },
    })
}

fn word_string(word: &[usize]) -> String {
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn reduced_words_cmd(window: &str, limit: usize) -> Result<Rendered, CliError> {
    let w = parse_element(window)?;
    let count = reduced_word_count(&w);
    let words = reduced_words(&w, limit);
    let mut text = format!("count: {count}");
    for word in &words {
        text.push('\n');
        text.push_str(&word_string(word));
    }
    Ok(Rendered {
        failed: false,
        text,
        json: json!({ "element": w, "length": w.length(), "count": count.to_string(), "words": words }),
        table: Table { header: vec!["word"], rows: words.iter().map(|word| vec![word_string(word)]).collect() },
    })
}

fn examples(which: Example) -> Result<Rendered, CliError> {
    match which {
        Example::B2Separable => {
            let elements = separable_elements(2)?;
            let rows: Vec<Vec<String>> = elements
                .iter()
                .map(|w| {
                    let roots: Vec<String> = inversion_roots(w).iter().map(ToString::to_string).collect();
                    vec![w.to_string(), format!("{{{}}}", roots.join(", "))]
                })
                .collect();
            let text = rows.iter().map(|r| format!("{}: {}", r[0], r[1])).collect::<Vec<_>>().join("\n");
            let json = Value::Array(
                rows.iter()
                    .map(|r| json!({ "element": r[0], "inversion_roots": r[1] }))
                    .collect(),
            );
            Ok(Rendered { failed: false, text, json, table: Table { header: vec!["element", "inversion_roots"], rows } })
        }
        Example::StClasses => {
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut json = serde_json::Map::new();
            for target in ["3 1 4 2", "2 4 1 3"] {
                let target: SignedPermutation = target.parse()?;
                let class = st_class(&target)?;
                text.push_str(&format!("st = {target}:\n"));
                for w in &class {
                    text.push_str(&format!("  {w}\n"));
                    rows.push(vec![target.to_string(), w.to_string()]);
                }
                json.insert(target.to_string(), to_json(&class));
            }
            Ok(Rendered {
                failed: false,
                text,
                json: Value::Object(json),
                table: Table { header: vec!["standardization", "element"], rows },
            })
        }
    }
}

fn list_checks() -> Rendered {
    let rows: Vec<Vec<String>> = checks()
        .iter()
        .map(|c| vec![c.id.to_string(), c.min_n.to_string(), c.max_n.to_string(), c.summary.to_string()])
        .collect();
    let text = rows
        .iter()
        .map(|r| format!("{:<24} n = {}..{}  {}", r[0], r[1], r[2], r[3]))
        .collect::<Vec<_>>()
        .join("\n");
    Rendered {
        failed: false,
        text,
        json: to_json(&checks()),
        table: Table { header: vec!["id", "min_n", "max_n", "summary"], rows },
    }
}

fn dispatch(command: &Command) -> Result<Rendered, CliError> {
    match command {
        Command::Separable { window } => separable(window),
        Command::CrossCheck { window } => cross_check(window),
        Command::MinimalNonsep(args) => minimal_nonsep(args),
        Command::IdealPoly(args) => ideal_poly(args),
        Command::Quotient { window } => quotient(window),
        Command::SplitCheck { window } => split_check(window),
        Command::Verify(args) => verify(args),
        Command::ReducedWords { window, limit } => reduced_words_cmd(window, *limit),
        Command::Examples { which } => examples(*which),
        Command::Checks => Ok(list_checks()),
    }
}

#[cfg(feature = "parallel")]
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        _ => Ok(f()),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match with_jobs(cli.jobs, || dispatch(&cli.command)).and_then(|r| r) {
        Ok(rendered) => Outcome {
            code: i32::from(rendered.failed),
            stdout: rendered.to_stdout(cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
