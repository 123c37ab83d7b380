//! Command-line front end for `class-spectrum`.
//!
//! Exit codes: 0 when every verdict is PASS (or the command has none), 1 when
//! at least one verdict is FAIL or INDETERMINATE, 2 on usage or internal errors.

pub mod cache;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use class_spectrum::verify::{self, omega_sweep, Certificate, HzTableRow, Verdict, Verifier, DEFAULT_SUPPORT_CAP};
use class_spectrum::{
    bound_report, check_omega_lemma, height, moved_class_sizes, omega_set, phi_set, primes, psi_set, spectrum_capped,
    Convention, GroupKind, Spectrum, DEFAULT_SPECTRUM_CAP,
};

use crate::cache::{Cache, CACHE_ENV};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "class-spectrum",
    version,
    about = "Class size spectra of Sym_n and Alt_n and the checks built on them"
)]
pub struct Cli {
    /// Cache directory (defaults to the platform cache location).
    #[arg(long, global = true, env = CACHE_ENV, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Do not read or write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class sizes of Sym_n or Alt_n, or one of the restricted families.
    Spectrum(SpectrumArgs),
    /// Longest divisibility chain among integers read from a file.
    Height(HeightArgs),
    /// The prime set Ω for degree n and the comparison 2^|Ω| vs n!/p!.
    Omega(OmegaArgs),
    /// Sums of chain heights over the fixed-point-free families R_i.
    HzTable(HzArgs),
    /// Per-degree certificates.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Prime counting and prime gap bound diagnostics.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Full,
    Moved,
    Phi,
    Psi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Sym,
    Alt,
}

impl From<KindArg> for GroupKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Sym => GroupKind::Sym,
            KindArg::Alt => GroupKind::Alt,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Vertices,
    Edges,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Vertices => Convention::Vertices,
            ConventionArg::Edges => Convention::Edges,
        }
    }
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Degree (for `--family moved`, the number of moved points).
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "full")]
    pub family: FamilyArg,
    /// Cycle length for `phi`, threshold for `psi`.
    #[arg(long)]
    pub t: Option<usize>,
    /// Largest support enumerated for `psi`.
    #[arg(long)]
    pub support_cap: Option<usize>,
    /// Largest degree `full` will enumerate.
    #[arg(long, default_value_t = DEFAULT_SPECTRUM_CAP)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct HeightArgs {
    /// File with one decimal integer per line; blank lines and `#` comments are skipped.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "vertices")]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct OmegaArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct HzArgs {
    #[arg(long)]
    pub max_m: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "sym,alt")]
    pub kinds: Vec<KindArg>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Certificate for one degree and group kind.
    Case {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = DEFAULT_SUPPORT_CAP)]
        support_cap: usize,
    },
    /// Certificates for every degree in a range.
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "sym,alt")]
        kinds: Vec<KindArg>,
        /// Worker threads (defaults to the available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for summary.json, certificates.json and certificates.csv.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SUPPORT_CAP)]
        support_cap: usize,
    },
    /// The comparison 2^|Ω| > n!/p! for every degree in a range.
    OmegaScan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub x: u64,
    /// Sweep every value from `--x` up to this one and summarise violations.
    #[arg(long)]
    pub to: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Errors surfaced to the user with exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        cli.cache_dir.clone().or_else(cache::default_dir).map_or_else(Cache::disabled, Cache::at)
    };
    match dispatch(&cli.command, &cache, out) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: &Command, cache: &Cache, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Spectrum(a) => cmd_spectrum(a, cache, out),
        Command::Height(a) => cmd_height(a, out),
        Command::Omega(a) => cmd_omega(a, out),
        Command::HzTable(a) => cmd_hz(a, cache, out),
        Command::Verify(v) => match v {
            VerifyCommand::Case { n, kind, support_cap } => {
                let cert = Verifier::with_support_cap(*n, *support_cap).check_case(*n, (*kind).into())?;
                writeln!(out, "{}", serde_json::to_string_pretty(&cert)?)?;
                Ok(exit_for(cert.verdict == Verdict::Pass))
            }
            VerifyCommand::Scan { from, to, kinds, jobs, out: dir, support_cap } => {
                cmd_scan(*from, *to, kinds, *jobs, dir.as_ref(), *support_cap, out)
            }
            VerifyCommand::OmegaScan { from, to, jobs } => {
                let sweep = omega_sweep(*from, *to, jobs_or_default(*jobs))?;
                writeln!(out, "{}", serde_json::to_string_pretty(&sweep)?)?;
                Ok(exit_for(sweep.fail == 0))
            }
        },
        Command::Bounds(a) => cmd_bounds(a, out),
    }
}

fn exit_for(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn jobs_or_default(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn require_t(t: Option<usize>, family: &str) -> CliResult<usize> {
    t.ok_or_else(|| CliError(format!("--family {family} needs --t")))
}

fn compute_spectrum(a: &SpectrumArgs) -> CliResult<Spectrum> {
    let kind = a.kind.into();
    Ok(match a.family {
        FamilyArg::Full => spectrum_capped(kind, a.n, a.max_n)?,
        FamilyArg::Moved => moved_class_sizes(kind, a.n),
        FamilyArg::Phi => phi_set(kind, a.n, require_t(a.t, "phi")?)?,
        FamilyArg::Psi => psi_set(kind, a.n, require_t(a.t, "psi")?, a.support_cap)?,
    })
}

fn cmd_spectrum(a: &SpectrumArgs, cache: &Cache, out: &mut dyn Write) -> CliResult<i32> {
    let family = format!("{:?}", a.family).to_lowercase();
    // the degree cap only changes whether `full` refuses, so it is not part of the key
    let key = Cache::key(&[
        "spectrum",
        &family,
        GroupKind::from(a.kind).as_str(),
        &format!("n={}", a.n),
        &format!("t={:?}", a.t),
        &format!("cap={:?}", a.support_cap),
    ]);
    let spec = if a.family == FamilyArg::Full && a.n > a.max_n {
        compute_spectrum(a)?
    } else {
        cache.get_or_compute(&key, || compute_spectrum(a))?
    };
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Values<'a> {
                #[serde(with = "class_spectrum::decimal::vec")]
                values: &'a [BigUint],
            }
            writeln!(out, "{}", serde_json::to_string(&Values { values: spec.values() })?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["value"])?;
            for v in spec.values() {
                w.write_record([v.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for v in spec.values() {
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn read_integers(path: &PathBuf) -> CliResult<Vec<BigUint>> {
    let text = fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ok = line.bytes().all(|b| b.is_ascii_digit());
        match BigUint::parse_bytes(line.as_bytes(), 10).filter(|_| ok) {
            Some(v) => values.push(v),
            None => return Err(CliError(format!("{}:{}: not a natural number: {line:?}", path.display(), i + 1))),
        }
    }
    Ok(values)
}

fn cmd_height(a: &HeightArgs, out: &mut dyn Write) -> CliResult<i32> {
    let values = read_integers(&a.input)?;
    let convention: Convention = a.convention.into();
    let r = height(&values, convention)?;
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["height", "convention", "witness"])?;
            let witness: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
            w.write_record([r.height.to_string(), convention.to_string(), witness.join(" ")])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "height: {} ({convention})", r.height)?;
            let witness: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
            writeln!(out, "witness: {}", witness.join(" "))?;
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_omega(a: &OmegaArgs, out: &mut dyn Write) -> CliResult<i32> {
    let data = omega_set(a.n)?;
    let check = check_omega_lemma(a.n)?;
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                omega: &'a class_spectrum::OmegaData,
                check: &'a verify::OmegaCheck,
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&Report { omega: &data, check: &check })?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "p", "omega_count", "power_bits", "ratio_bits", "verdict"])?;
            w.write_record([
                a.n.to_string(),
                data.p.to_string(),
                data.count.to_string(),
                check.power_bits.to_string(),
                check.ratio_bits.to_string(),
                check.verdict.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            let omega: Vec<String> = data.omega.iter().map(|t| t.to_string()).collect();
            writeln!(out, "n: {}", data.n)?;
            writeln!(out, "omega: {}", omega.join(" "))?;
            writeln!(out, "p: {}", data.p)?;
            writeln!(out, "|omega|: {}", data.count)?;
            writeln!(
                out,
                "2^|omega| vs n!/p!: {} bits vs {} bits (n!/p! = {})",
                check.power_bits, check.ratio_bits, check.ratio
            )?;
            writeln!(out, "verdict: {}", check.verdict)?;
        }
    }
    Ok(exit_for(check.verdict == Verdict::Pass))
}

fn cmd_hz(a: &HzArgs, cache: &Cache, out: &mut dyn Write) -> CliResult<i32> {
    if a.max_m < 2 {
        return Err(CliError("--max-m must be at least 2".into()));
    }
    let mut kinds: Vec<GroupKind> = a.kinds.iter().map(|&k| k.into()).collect();
    kinds.sort();
    kinds.dedup();
    let kinds_label: Vec<&str> = kinds.iter().map(|k| k.as_str()).collect();
    let key = Cache::key(&["hz-table", &format!("max_m={}", a.max_m), &kinds_label.join(",")]);
    let rows: Vec<HzTableRow> = cache.get_or_compute(&key, || Ok::<_, CliError>(verify::hz_table(a.max_m, &kinds)))?;
    let columns: Vec<String> =
        kinds.iter().flat_map(|&k| Convention::ALL.into_iter().map(move |c| verify::hz_key(k, c))).collect();
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["m".to_string(), "published_bound".to_string()];
            header.extend(columns.iter().cloned());
            w.write_record(&header)?;
            for row in &rows {
                let mut rec = vec![row.m.to_string(), row.published_bound.map(|b| b.to_string()).unwrap_or_default()];
                rec.extend(columns.iter().map(|c| row.computed[c].to_string()));
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut s = format!("{:>4} {:>6}", "m", "bound");
            for c in &columns {
                let _ = write!(s, " {c:>14}");
            }
            writeln!(out, "{s}")?;
            for row in &rows {
                let bound = row.published_bound.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
                let mut s = format!("{:>4} {:>6}", row.m, bound);
                for c in &columns {
                    let v = row.computed[c];
                    let mark = if row.published_bound.is_some_and(|b| v > b) { "*" } else { " " };
                    let _ = write!(s, " {:>13}{mark}", v);
                }
                writeln!(out, "{s}")?;
            }
            let exceeding: Vec<String> = rows
                .iter()
                .flat_map(|r| r.exceeding().into_iter().map(move |(k, v)| format!("m={} {k}={v}", r.m)))
                .collect();
            if !exceeding.is_empty() {
                writeln!(out, "above published bound (*): {}", exceeding.join(", "))?;
            }
        }
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct CsvCertificate<'a> {
    n: u64,
    kind: GroupKind,
    strategy: String,
    r: Option<u64>,
    p: u64,
    t_star: u64,
    support_m: u64,
    omega_count: usize,
    h_value: usize,
    h_value_edges: usize,
    h_sum_bound: usize,
    verdict: &'a str,
    witness_chain: String,
    witness_types: String,
}

impl<'a> From<&'a Certificate> for CsvCertificate<'a> {
    fn from(c: &'a Certificate) -> Self {
        let chain: Vec<String> = c.witness_chain.iter().map(|v| v.to_string()).collect();
        let types: Vec<String> = c.witness_types.iter().map(|t| t.to_string()).collect();
        CsvCertificate {
            n: c.n,
            kind: c.kind,
            strategy: c.strategy.to_string(),
            r: c.r,
            p: c.p,
            t_star: c.t_star,
            support_m: c.support_m,
            omega_count: c.omega_count,
            h_value: c.h_value,
            h_value_edges: c.h_value_edges,
            h_sum_bound: c.h_sum_bound,
            verdict: c.verdict.as_str(),
            witness_chain: chain.join(" "),
            witness_types: types.join(" "),
        }
    }
}

fn cmd_scan(
    from: u64,
    to: u64,
    kinds: &[KindArg],
    jobs: Option<usize>,
    dir: Option<&PathBuf>,
    support_cap: usize,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let mut kinds: Vec<GroupKind> = kinds.iter().map(|&k| k.into()).collect();
    kinds.dedup();
    let verifier = Verifier::with_support_cap(to, support_cap);
    let report = verifier.scan(from, to, &kinds, jobs_or_default(jobs))?;
    let summary = serde_json::to_string_pretty(&report.summary)?;
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("summary.json"), format!("{summary}\n"))?;
        fs::write(dir.join("certificates.json"), format!("{}\n", serde_json::to_string_pretty(&report.certificates)?))?;
        let mut w = csv::Writer::from_path(dir.join("certificates.csv"))?;
        for c in &report.certificates {
            w.serialize(CsvCertificate::from(c))?;
        }
        w.flush()?;
    }
    writeln!(out, "{summary}")?;
    Ok(exit_for(report.summary.all_pass()))
}

fn cmd_bounds(a: &BoundsArgs, out: &mut dyn Write) -> CliResult<i32> {
    if let Some(to) = a.to {
        let sweep = primes::bound_sweep(a.x, to)?;
        match a.format {
            Format::Json | Format::Csv => writeln!(out, "{}", serde_json::to_string_pretty(&sweep)?)?,
            Format::Text => {
                writeln!(out, "range: [{}, {}] ({} values)", sweep.from, sweep.to, sweep.checked)?;
                writeln!(
                    out,
                    "lower violations: {} (first {:?})",
                    sweep.lower_violations, sweep.first_lower_violation
                )?;
                writeln!(
                    out,
                    "upper violations: {} (first {:?})",
                    sweep.upper_violations, sweep.first_upper_violation
                )?;
                writeln!(out, "gap violations: {} (first {:?})", sweep.gap_violations, sweep.first_gap_violation)?;
            }
        }
        return Ok(EXIT_PASS);
    }
    let r = bound_report(a.x)?;
    match a.format {
        Format::Json | Format::Csv => writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?,
        Format::Text => {
            let word = |b: bool| if b { "holds" } else { "VIOLATED" };
            writeln!(out, "x: {}", r.x)?;
            writeln!(out, "pi(x): {}", r.pi_exact)?;
            writeln!(out, "lower 0.921 x/ln x = {:.6}: {}", r.lower, word(r.lower_holds))?;
            writeln!(out, "upper 1.106 x/ln x = {:.6}: {}", r.upper, word(r.upper_holds))?;
            writeln!(
                out,
                "gap x - p = {} - {} = {} vs x^0.525 = {:.6}: {}",
                r.x,
                r.p,
                r.gap,
                r.gap_bound,
                word(r.gap_bound_holds)
            )?;
        }
    }
    Ok(EXIT_PASS)
}
