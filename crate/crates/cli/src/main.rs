use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shi_core::abacus::level_vector;
use shi_core::affine::{minimal_word, phi_map};
use shi_core::genfunc::{brute, recursion, recursion_trace, BivariatePolynomial, WallQuery};
use shi_core::partitions::Partition;
use shi_core::plot::plot_svg;
use shi_core::shi::{
    alcove_violation, enumerate_regions, fuss_catalan, psi, psi_inverse, stat_c, stat_r,
    AlcoveCoords, RegionTableau, Root, Tableau, DEFAULT_REGION_CAP,
};
use shi_core::verify::{run_suite, Bounds, Report, Suite};

const REGIONS_SCHEMA: &str = "shi.regions/1";
const WALLS_SCHEMA: &str = "shi.walls/1";
const BIJECTION_SCHEMA: &str = "shi.bijection/1";
const VERIFY_SCHEMA: &str = "shi.verify/1";

#[derive(Parser)]
#[command(name = "shi", version, about = "Separating walls of dominant regions of the m-Shi arrangement")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Reserved; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Shi tableaux of all dominant regions.
    Enumerate {
        /// Rank: the arrangement lives in R^n.
        #[arg(long)]
        n: usize,
        /// Extension parameter m >= 1.
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Refuse to enumerate more regions than this.
        #[arg(long = "max-regions", default_value_t = DEFAULT_REGION_CAP)]
        max_regions: usize,
    },
    /// Regions having H_{root,m} as a separating wall.
    Walls {
        /// Rank: the arrangement lives in R^n.
        #[arg(long)]
        n: usize,
        /// Extension parameter m >= 1.
        #[arg(long)]
        m: usize,
        /// Root as `u,v` with 1 <= u <= v <= n-1.
        #[arg(long, value_parser = parse_root)]
        root: (usize, usize),
        #[arg(long, value_enum, default_value_t = Mode::Count)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Engine::Recursion)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Refuse to enumerate more regions than this.
        #[arg(long = "max-regions", default_value_t = DEFAULT_REGION_CAP)]
        max_regions: usize,
    },
    /// Map a core to its alcove coordinates or back.
    Bijection {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        n: Option<usize>,
        /// Parts of the core, comma separated; empty for the empty core.
        #[arg(long, allow_hyphen_values = true)]
        core: Option<String>,
        /// Alcove coordinates as JSON, e.g. {"n":4,"k":[[3,1,1],[1,0],[1]]}.
        #[arg(long)]
        alcove: Option<String>,
    },
    /// Run property checks over bounded families.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long = "max-n", default_value_t = Bounds::default().max_n)]
        max_n: usize,
        #[arg(long = "max-m", default_value_t = Bounds::default().max_m)]
        max_m: usize,
        #[arg(long = "max-core-size", default_value_t = Bounds::default().max_core_size)]
        max_core_size: usize,
        #[arg(long = "max-entry", default_value_t = Bounds::default().max_entry)]
        max_entry: usize,
        /// Refuse to enumerate more regions than this.
        #[arg(long = "max-regions", default_value_t = DEFAULT_REGION_CAP)]
        max_regions: usize,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Draw the dominant chamber for n = 3 as SVG.
    Plot {
        /// Rank: the arrangement lives in R^n.
        #[arg(long)]
        n: usize,
        /// Extension parameter m >= 1.
        #[arg(long)]
        m: usize,
        /// Shade the regions having this root's m-wall as a separating wall.
        #[arg(long, value_parser = parse_root)]
        root: Option<(usize, usize)>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Count,
    Genfunc,
    List,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Recursion,
    Brute,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    CoreToAlcove,
    AlcoveToCore,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Bijection,
    Walls,
    Geometry,
    Genfunc,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Walls => Suite::Walls,
            SuiteArg::Geometry => Suite::Geometry,
            SuiteArg::Genfunc => Suite::Genfunc,
        }
    }
}

fn parse_root(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s
        .split_once(',')
        .ok_or_else(|| format!("expected u,v but got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(u)?, parse(v)?))
}

/// Failures, each with its own exit status.
enum Failure {
    /// A cross-check or verification did not hold.
    Check(String),
    Invalid(anyhow::Error),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<shi_core::Error> for Failure {
    fn from(e: shi_core::Error) -> Self {
        match e {
            shi_core::Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Invalid(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<shi_core::Error>() {
            Ok(core) => core.into(),
            Err(other) => Failure::Invalid(other),
        }
    }
}

/// What a command produced: text to emit, plus a failure to report after
/// emitting it.
struct Output {
    text: String,
    failure: Option<Failure>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failure: None }
    }
}

fn json_line(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn region_json(e: &RegionTableau) -> Value {
    json!({ "e": e.tableau().rows(), "r": stat_r(e), "c": stat_c(e) })
}

fn check_level(n: usize, m: usize) -> anyhow::Result<()> {
    if n < 2 {
        bail!("n must be at least 2, got {n}");
    }
    if m < 1 {
        bail!("m must be at least 1, got {m}");
    }
    Ok(())
}

fn csv_header(n: usize) -> String {
    let mut cols: Vec<String> = (1..n)
        .flat_map(|i| (i..n).rev().map(move |j| format!("e_{i}_{j}")))
        .collect();
    cols.push("r".into());
    cols.push("c".into());
    cols.join(",")
}

fn cmd_enumerate(n: usize, m: usize, format: Format, cap: usize) -> Result<Output, Failure> {
    check_level(n, m)?;
    let regions = enumerate_regions(n, m, cap)?;
    let count = regions.len() as u128;
    let catalan = fuss_catalan(n, m).expect("within cap, so no overflow");
    let text = match format {
        Format::Json => json_line(&json!({
            "schema": REGIONS_SCHEMA,
            "n": n,
            "m": m,
            "count": count as u64,
            "catalan": catalan as u64,
            "regions": regions.iter().map(region_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = format!("# schema={REGIONS_SCHEMA} n={n} m={m}\n{}\n", csv_header(n));
            for e in &regions {
                let mut fields: Vec<String> = e.tableau().reading_word().iter().map(i64::to_string).collect();
                fields.push(stat_r(e).to_string());
                fields.push(stat_c(e).to_string());
                s.push_str(&fields.join(","));
                s.push('\n');
            }
            s.push_str(&format!("# count={count} catalan={catalan}\n"));
            s
        }
        Format::Human => {
            let mut s = String::new();
            for e in &regions {
                s.push_str(&format!("{e}    r={} c={}\n", stat_r(e), stat_c(e)));
            }
            s.push_str(&format!("count={count} catalan={catalan}\n"));
            s
        }
    };
    let failure = (count != catalan)
        .then(|| Failure::Check(format!("found {count} regions but the formula gives {catalan}")));
    Ok(Output { text, failure })
}

#[allow(clippy::too_many_arguments)]
fn cmd_walls(
    n: usize,
    m: usize,
    (u, v): (usize, usize),
    mode: Mode,
    engine: Engine,
    format: Format,
    cap: usize,
) -> Result<Output, Failure> {
    check_level(n, m)?;
    let query = WallQuery::new(n, m, u, v)?;
    let root = query.root;

    if mode == Mode::List {
        let regions: Vec<RegionTableau> = enumerate_regions(n, m, cap)?
            .into_iter()
            .filter(|e| e.is_separating_wall(root))
            .collect();
        let text = match format {
            Format::Json => json_line(&json!({
                "schema": WALLS_SCHEMA,
                "n": n, "m": m, "root": [u, v], "mode": "list",
                "count": regions.len(),
                "regions": regions.iter().map(region_json).collect::<Vec<_>>(),
            })),
            Format::Csv => {
                let mut s = format!("# schema={WALLS_SCHEMA} n={n} m={m} root={u},{v}\n{}\n", csv_header(n));
                for e in &regions {
                    let mut fields: Vec<String> = e.tableau().reading_word().iter().map(i64::to_string).collect();
                    fields.push(stat_r(e).to_string());
                    fields.push(stat_c(e).to_string());
                    s.push_str(&fields.join(","));
                    s.push('\n');
                }
                s.push_str(&format!("# count={}\n", regions.len()));
                s
            }
            Format::Human => regions
                .iter()
                .map(|e| format!("{e}    r={} c={}\n", stat_r(e), stat_c(e)))
                .collect(),
        };
        return Ok(Output::ok(text));
    }

    let from_recursion = match engine {
        Engine::Recursion | Engine::Both => Some(recursion(&query)?),
        Engine::Brute => None,
    };
    let from_brute = match engine {
        Engine::Brute | Engine::Both => Some(brute(&query, cap)?),
        Engine::Recursion => None,
    };
    if let (Some(a), Some(b)) = (&from_recursion, &from_brute) {
        if a != b {
            return Err(Failure::Check(format!(
                "engines disagree for {root} (n={n}, m={m})\n  recursion: {a}\n  brute:     {b}"
            )));
        }
    }
    let f: BivariatePolynomial = from_recursion.or(from_brute).expect("some engine ran");
    let count = f.eval_at_one();
    let engine_name = match engine {
        Engine::Recursion => "recursion",
        Engine::Brute => "brute",
        Engine::Both => "both",
    };

    let text = match (format, mode) {
        (Format::Json, _) => {
            let mut value = json!({
                "schema": WALLS_SCHEMA,
                "n": n, "m": m, "root": [u, v],
                "mode": if mode == Mode::Count { "count" } else { "genfunc" },
                "engine": engine_name,
                "count": count.to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(count.to_string())),
            });
            if mode == Mode::Genfunc {
                value["genfunc"] = serde_json::to_value(&f).expect("polynomials serialize");
                value["human"] = Value::from(f.to_string());
                if engine != Engine::Brute {
                    value["steps"] = serde_json::to_value(recursion_trace(&query)?)
                        .expect("steps serialize");
                }
            }
            json_line(&value)
        }
        (Format::Csv, Mode::Count) => {
            format!("# schema={WALLS_SCHEMA}\nn,m,u,v,count\n{n},{m},{u},{v},{count}\n")
        }
        (Format::Csv, _) => {
            let mut s = format!("# schema={WALLS_SCHEMA} n={n} m={m} root={u},{v}\np,q,coeff\n");
            for (p, q, c) in f.terms() {
                s.push_str(&format!("{p},{q},{c}\n"));
            }
            s
        }
        (Format::Human, Mode::Count) => format!("{count}\n"),
        (Format::Human, _) => format!("{f}\n"),
    };
    Ok(Output::ok(text))
}

fn parse_core(s: &str) -> anyhow::Result<Partition> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().with_context(|| format!("bad part {x:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Partition::new(parts)?)
}

fn cmd_bijection(
    direction: Direction,
    n: Option<usize>,
    core: Option<String>,
    alcove: Option<String>,
) -> Result<Output, Failure> {
    let value = match direction {
        Direction::CoreToAlcove => {
            let n = n.ok_or_else(|| anyhow!("--n is required for core-to-alcove"))?;
            let core = core.ok_or_else(|| anyhow!("--core is required for core-to-alcove"))?;
            let lam = parse_core(&core)?;
            let k_psi = psi(&lam, n)?;
            let k_phi = phi_map(&lam, n)?;
            json!({
                "schema": BIJECTION_SCHEMA,
                "direction": "core-to-alcove",
                "n": n,
                "core": lam,
                "level_vector": level_vector(&lam, n)?.b,
                "word": minimal_word(&lam, n)?,
                "psi": k_psi,
                "phi": k_phi,
                "agree": k_psi == k_phi,
            })
        }
        Direction::AlcoveToCore => {
            let text = alcove.ok_or_else(|| anyhow!("--alcove is required for alcove-to-core"))?;
            let raw: Value = serde_json::from_str(&text).context("--alcove is not JSON")?;
            let n = raw["n"]
                .as_u64()
                .ok_or_else(|| anyhow!("alcove JSON needs an integer field \"n\""))? as usize;
            let rows: Vec<Vec<i64>> = serde_json::from_value(raw["k"].clone())
                .context("alcove JSON needs \"k\" as a list of integer rows")?;
            let tableau = Tableau::from_rows(n, &rows)?;
            if let Some(reason) = alcove_violation(&tableau) {
                return Err(Failure::Invalid(anyhow!(
                    "not alcove coordinates (Shi's inequalities fail): {reason}"
                )));
            }
            let k = AlcoveCoords::new(tableau)?;
            let lam = psi_inverse(&k)?;
            json!({
                "schema": BIJECTION_SCHEMA,
                "direction": "alcove-to-core",
                "n": n,
                "alcove": k,
                "core": lam,
                "round_trip": psi(&lam, n)? == k,
            })
        }
    };
    Ok(Output::ok(json_line(&value)))
}

fn report_human(report: &Report) -> String {
    let mut s = format!("suite: {}\n", report.suite);
    for c in &report.checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status}  {} ({} cases", c.name, c.cases));
        if !c.passed() {
            s.push_str(&format!(", {} failures", c.failures));
        }
        s.push_str(")\n");
        for ex in &c.examples {
            s.push_str(&format!("      {ex}\n"));
        }
    }
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    s.push_str(&format!("{} checks, {failed} failed\n", report.checks.len()));
    s
}

fn cmd_verify(suite: Suite, bounds: Bounds, format: Format) -> Result<Output, Failure> {
    let report = run_suite(suite, &bounds)?;
    let text = match format {
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            value["schema"] = Value::from(VERIFY_SCHEMA);
            value["passed"] = Value::from(report.passed());
            json_line(&value)
        }
        Format::Csv => {
            let mut s = format!("# schema={VERIFY_SCHEMA}\ncheck,cases,failures\n");
            for c in &report.checks {
                s.push_str(&format!("\"{}\",{},{}\n", c.name.replace('"', "\"\""), c.cases, c.failures));
            }
            s
        }
        Format::Human => report_human(&report),
    };
    let failure = (!report.passed()).then(|| Failure::Check("verification failed".into()));
    Ok(Output { text, failure })
}

fn cmd_plot(n: usize, m: usize, root: Option<(usize, usize)>) -> Result<Output, Failure> {
    let root = match root {
        Some((u, v)) => Some(Root::new(u, v, n)?),
        None => None,
    };
    Ok(Output::ok(plot_svg(n, m, root)?))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Enumerate { n, m, format, max_regions } => cmd_enumerate(n, m, format, max_regions),
        Command::Walls { n, m, root, mode, engine, format, max_regions } => {
            cmd_walls(n, m, root, mode, engine, format, max_regions)
        }
        Command::Bijection { direction, n, core, alcove } => cmd_bijection(direction, n, core, alcove),
        Command::Verify { suite, max_n, max_m, max_core_size, max_entry, max_regions, format } => {
            let bounds = Bounds { max_n, max_m, max_core_size, max_entry, cap: max_regions };
            cmd_verify(suite.into(), bounds, format)
        }
        Command::Plot { n, m, root } => cmd_plot(n, m, root),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let failure = match run(cli) {
        Ok(output) => match emit(&out, &output.text) {
            Ok(()) => output.failure,
            Err(e) => Some(Failure::Invalid(e)),
        },
        Err(f) => Some(f),
    };
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            match &f {
                Failure::Check(msg) | Failure::Cap(msg) => eprintln!("error: {msg}"),
                Failure::Invalid(e) => eprintln!("error: {e:#}"),
            }
            ExitCode::from(f.code())
        }
    }
}
