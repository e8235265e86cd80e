//! Command-line front end for the `cdiff` library.
//!
//! [`run`] does all the work and returns the rendered output plus an exit
//! status, so the binary is a thin wrapper and the tests can drive commands
//! without spawning processes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use cdiff::cdiff::{classify, delta_row_histogram, scan_exponents, uniformity_full, uniformity_power, CdiffError};
use cdiff::families::{
    apn_crosscheck, corpus, lookup, verify_claim, ClaimEntry, FamilyError, Verdict, VerificationReport, VerifyOptions,
};
use cdiff::field::{BuildOptions, PolyDatabase, DEFAULT_ORDER_CAP};
use cdiff::report::{emit_report, Format};
use cdiff::{Element, Field, FieldError, FunctionUnderTest};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Environment variable naming a polynomial database that replaces the
/// bundled one.
pub const POLY_DB_ENV: &str = "CDIFF_POLY_DB";

/// Largest field order the default `--n-max` budget reaches (3^13).
pub const DEFAULT_BUDGET: u64 = 1_594_323;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Cdiff(#[from] CdiffError),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Parser)]
#[command(name = "cdiff", version, about = "c-differential uniformity over GF(p^n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format: human, json or csv.
    #[arg(long, global = true, default_value = "human")]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Leave elapsed_ms empty so reports are byte-reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the modulus, generator and order of GF(p^n).
    FieldInfo(FieldArgs),
    /// c-differential uniformity of x^d.
    Uniformity(PowerArgs),
    /// Histogram of b -> #{x : (x+a)^d - c x^d = b}.
    Spectrum {
        #[command(flatten)]
        power: PowerArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
    },
    /// Check corpus claims over a range of n.
    Verify(VerifyArgs),
    /// Every exponent d in [1, q-2] with uniformity at most --threshold.
    Scan {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 2)]
        threshold: u32,
    },
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub n: u32,
    /// Coefficients c0,c1,...,cn of a monic irreducible modulus.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub d: u64,
    /// Element literal: a code, -1, 0, 1 or g^k.
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub c: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim id (F1..F6, T1..T19, T10[k=2]) or `all`.
    #[arg(long, default_value = "all")]
    pub family: String,
    #[arg(long, default_value_t = 3)]
    pub p: u32,
    /// Single degree; overrides the range.
    #[arg(long)]
    pub n: Option<u32>,
    /// Largest degree checked (default: largest n with p^n <= 3^13).
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Only test this c (must satisfy the claim's condition).
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Test at most this many admissible c per claim.
    #[arg(long)]
    pub c_limit: Option<usize>,
    /// Run the classical (c = 1) APN cross-check instead.
    #[arg(long)]
    pub apn: bool,
}

pub struct Outcome {
    pub output: String,
    pub status: i32,
}

/// Parses `literal` as an element of `field`.
pub fn parse_element(literal: &str, field: &Field) -> Result<Element, CliError> {
    let s = literal.trim();
    if s == "-1" {
        return Ok(field.minus_one());
    }
    if let Some(k) = s.strip_prefix("g^") {
        let k: u64 = k.parse().map_err(|_| CliError::Usage(format!("malformed element literal `{literal}`")))?;
        return Ok(field.exp(k % (field.q() as u64 - 1)));
    }
    let code: u64 = s.parse().map_err(|_| CliError::Usage(format!("malformed element literal `{literal}`")))?;
    Ok(field.element(code)?)
}

fn parse_modulus(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("malformed modulus `{s}`"))))
        .collect()
}

fn database() -> Result<Option<PolyDatabase>, CliError> {
    match std::env::var_os(POLY_DB_ENV) {
        Some(path) => Ok(Some(PolyDatabase::from_path(path)?)),
        None => Ok(None),
    }
}

struct FieldFactory {
    db: Option<PolyDatabase>,
}

impl FieldFactory {
    fn build(&self, p: u32, n: u32, modulus: Option<&[u32]>) -> Result<Field, FieldError> {
        let db = self.db.as_ref().unwrap_or_else(|| PolyDatabase::bundled());
        Field::build(p, n, modulus, &BuildOptions { cap: DEFAULT_ORDER_CAP, database: db })
    }

    fn for_args(&self, a: &FieldArgs) -> Result<Field, CliError> {
        let modulus = a.modulus.as_deref().map(parse_modulus).transpose()?;
        Ok(self.build(a.p, a.n, modulus.as_deref())?)
    }
}

/// Largest `n` with `p^n <= DEFAULT_BUDGET`.
pub fn default_n_max(p: u32) -> u32 {
    let mut n = 0;
    let mut q = 1u64;
    while q * p as u64 <= DEFAULT_BUDGET {
        q *= p as u64;
        n += 1;
    }
    n.max(1)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if cli.workers == Some(0) {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    let factory = FieldFactory { db: database()? };
    let outcome = match cli.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| dispatch(cli, &factory))
        }
        None => dispatch(cli, &factory),
    }?;
    if let Some(path) = &cli.out {
        std::fs::write(path, &outcome.output).map_err(|source| CliError::Io { path: path.clone(), source })?;
        return Ok(Outcome { output: String::new(), status: outcome.status });
    }
    Ok(outcome)
}

fn ok(output: String) -> Result<Outcome, CliError> {
    Ok(Outcome { output, status: 0 })
}

fn dispatch(cli: &Cli, factory: &FieldFactory) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::FieldInfo(a) => ok(field_info(&factory.for_args(a)?, cli.format)),
        Command::Uniformity(a) => {
            let field = factory.for_args(&a.field)?;
            let c = parse_element(&a.c, &field)?;
            ok(uniformity(&field, a.d, c, cli.format)?)
        }
        Command::Spectrum { power, a } => {
            let field = factory.for_args(&power.field)?;
            let c = parse_element(&power.c, &field)?;
            let a = parse_element(a, &field)?;
            ok(spectrum(&field, power.d, a, c, cli.format)?)
        }
        Command::Scan { field, c, threshold } => {
            let field = factory.for_args(field)?;
            let c = parse_element(c, &field)?;
            ok(scan(&field, c, *threshold, cli.format)?)
        }
        Command::Verify(v) => {
            let reports = verify(v, factory, !cli.no_timing)?;
            let status = if reports.iter().any(|r| r.verdict == Verdict::Fail) { 1 } else { 0 };
            Ok(Outcome { output: emit_report(&reports, cli.format), status })
        }
    }
}

#[derive(Serialize)]
struct FieldInfo<'a> {
    p: u32,
    n: u32,
    q: u32,
    modulus: &'a [u32],
    generator: u32,
}

fn field_info(field: &Field, format: Format) -> String {
    let info = FieldInfo {
        p: field.p(),
        n: field.n(),
        q: field.q(),
        modulus: &field.spec().modulus,
        generator: field.generator().code(),
    };
    let modulus = info.modulus.iter().map(u32::to_string).collect::<Vec<_>>().join(";");
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(&info).expect("serializable")),
        Format::Csv => format!("p,n,q,modulus,generator\n{},{},{},{},{}\n", info.p, info.n, info.q, modulus, info.generator),
        Format::Human => format!(
            "GF({}^{}) q={} modulus={} generator={}\n",
            info.p,
            info.n,
            info.q,
            poly_string(info.modulus),
            info.generator
        ),
    }
}

fn poly_string(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    terms.join("+")
}

#[derive(Serialize)]
struct UniformityOut {
    p: u32,
    n: u32,
    d: u64,
    c: u32,
    value: u32,
    label: String,
    method: String,
    gcd: Option<u64>,
    witnesses: Vec<(u32, u32)>,
}

fn uniformity(field: &Field, d: u64, c: Element, format: Format) -> Result<String, CliError> {
    let r = if c == Element::ONE {
        uniformity_full(field, &FunctionUnderTest::power(d)?, c)
    } else {
        uniformity_power(field, d, c)?
    };
    let out = UniformityOut {
        p: field.p(),
        n: field.n(),
        d,
        c: c.code(),
        value: r.value,
        label: classify(&r).to_string(),
        method: r.method.to_string(),
        gcd: r.gcd_term,
        witnesses: r.witnesses.iter().map(|(a, b)| (a.code(), b.code())).collect(),
    };
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string(&out).expect("serializable")),
        Format::Csv => format!(
            "p,n,d,c,value,label,method,gcd\n{},{},{},{},{},{},{},{}\n",
            out.p,
            out.n,
            out.d,
            out.c,
            out.value,
            out.label,
            out.method,
            out.gcd.map(|g| g.to_string()).unwrap_or_default()
        ),
        Format::Human => {
            let mut s = format!(
                "x^{} over GF({}^{}), c={}: {} ({}, {})\n",
                out.d, out.p, out.n, out.c, out.value, out.label, out.method
            );
            if let Some(g) = out.gcd {
                let _ = writeln!(s, "  gcd(d, q-1) = {g}");
            }
            for (a, b) in &out.witnesses {
                let _ = writeln!(s, "  witness a={a} b={b}");
            }
            s
        }
    })
}

#[derive(Serialize)]
struct SpectrumOut<'a> {
    p: u32,
    n: u32,
    d: u64,
    a: u32,
    c: u32,
    max: u32,
    multiplicities: &'a BTreeMap<u32, u32>,
    counts: &'a [u32],
}

fn spectrum(field: &Field, d: u64, a: Element, c: Element, format: Format) -> Result<String, CliError> {
    let s = delta_row_histogram(field, &FunctionUnderTest::power(d)?, a, c);
    let out = SpectrumOut {
        p: field.p(),
        n: field.n(),
        d,
        a: a.code(),
        c: c.code(),
        max: s.uniformity_row,
        multiplicities: &s.multiplicities,
        counts: &s.counts,
    };
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string(&out).expect("serializable")),
        Format::Csv => {
            let mut t = String::from("b,count\n");
            for (b, k) in s.counts.iter().enumerate() {
                let _ = writeln!(t, "{b},{k}");
            }
            t
        }
        Format::Human => {
            let mut t = format!(
                "x^{} over GF({}^{}), a={}, c={}: max {}\n",
                d,
                field.p(),
                field.n(),
                out.a,
                out.c,
                out.max
            );
            for (k, m) in &s.multiplicities {
                let _ = writeln!(t, "  {m} values of b hit {k} times");
            }
            t
        }
    })
}

fn scan(field: &Field, c: Element, threshold: u32, format: Format) -> Result<String, CliError> {
    let hits = scan_exponents(field, c, threshold)?;
    Ok(match format {
        Format::Json => {
            let rows: Vec<BTreeMap<&str, u64>> = hits
                .iter()
                .map(|&(d, v)| BTreeMap::from([("d", d), ("value", v as u64)]))
                .collect();
            format!("{}\n", serde_json::to_string(&rows).expect("serializable"))
        }
        Format::Csv => {
            let mut t = String::from("d,value\n");
            for (d, v) in &hits {
                let _ = writeln!(t, "{d},{v}");
            }
            t
        }
        Format::Human => {
            let mut t = format!(
                "GF({}^{}), c={}: {} exponents with value <= {threshold}\n",
                field.p(),
                field.n(),
                c,
                hits.len()
            );
            for (d, v) in &hits {
                let _ = writeln!(t, "  d={d} value={v}");
            }
            t
        }
    })
}

fn verify(v: &VerifyArgs, factory: &FieldFactory, timing: bool) -> Result<Vec<VerificationReport>, CliError> {
    let degrees: Vec<u32> = match v.n {
        Some(n) => vec![n],
        None => (1..=v.n_max.unwrap_or_else(|| default_n_max(v.p))).collect(),
    };
    let k_max = degrees.iter().copied().max().unwrap_or(1);
    let entries: Vec<ClaimEntry> = if v.family.eq_ignore_ascii_case("all") {
        corpus(k_max)
    } else if v.family.contains("[k=") {
        vec![lookup(&v.family)?]
    } else {
        // A bare id for a k-parameterized row expands over k.
        let all = corpus(k_max);
        let base: Vec<ClaimEntry> = all
            .into_iter()
            .filter(|e| e.id.base().to_string().eq_ignore_ascii_case(&v.family))
            .collect();
        if base.is_empty() {
            return Err(FamilyError::UnknownId(v.family.clone()).into());
        }
        base
    };
    let explicit_n = v.n.is_some();

    let mut jobs = Vec::new();
    for &n in &degrees {
        let wanted: Vec<&ClaimEntry> = entries
            .iter()
            .filter(|e| !v.apn || e.apn.is_some())
            .filter(|e| explicit_n || if v.apn { e.apn_applies(v.p, n) } else { e.applies(v.p, n) })
            .collect();
        if !wanted.is_empty() {
            jobs.push((n, wanted));
        }
    }

    let mut reports = Vec::new();
    for (n, wanted) in jobs {
        let field = factory.build(v.p, n, None)?;
        let opts = VerifyOptions {
            c_filter: v.c.as_deref().map(|c| parse_element(c, &field).map(|e| vec![e])).transpose()?,
            c_limit: v.c_limit,
            timing,
        };
        let batch: Vec<VerificationReport> = wanted
            .par_iter()
            .map(|e| {
                if v.apn {
                    apn_crosscheck(&field, e, timing)
                } else {
                    verify_claim(&field, e, &opts)
                }
            })
            .collect();
        reports.extend(batch);
    }
    Ok(reports)
}
