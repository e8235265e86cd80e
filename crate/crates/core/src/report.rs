//! Report rendering: JSON, CSV and one-line human output.
//!
//! Records are sorted by (claim, p, n, first c code) before rendering and
//! every format has a fixed column order, so identical inputs give identical
//! bytes regardless of how the reports were produced.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::families::{ClaimId, ClaimKind, Claimed, Verdict, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(Format::Human),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected human, json or csv)")),
        }
    }
}

pub const CSV_HEADER: &str = "claim,p,n,q,d,gcd,c,computed,claimed_kind,claimed_value,verdict,elapsed_ms";

// Field order here is the JSON key order.
#[derive(Serialize)]
struct JsonRecord<'a> {
    claim: ClaimId,
    p: u32,
    n: u32,
    q: u64,
    d: Option<u64>,
    gcd: Option<u64>,
    c: Vec<u32>,
    computed: &'a [u32],
    claimed: Option<Claimed>,
    verdict: Verdict,
    elapsed_ms: Option<u64>,
}

fn sorted(reports: &[VerificationReport]) -> Vec<&VerificationReport> {
    let mut v: Vec<&VerificationReport> = reports.iter().collect();
    v.sort_by_key(|r| r.sort_key());
    v
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn joined<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

pub fn emit_report(reports: &[VerificationReport], format: Format) -> String {
    let reports = sorted(reports);
    let mut out = String::new();
    match format {
        Format::Json => {
            if reports.is_empty() {
                return "[]\n".into();
            }
            out.push_str("[\n");
            for (i, r) in reports.iter().enumerate() {
                let rec = JsonRecord {
                    claim: r.claim,
                    p: r.p,
                    n: r.n,
                    q: r.q,
                    d: r.d,
                    gcd: r.gcd,
                    c: r.c.iter().map(|c| c.code()).collect(),
                    computed: &r.computed,
                    claimed: r.claimed,
                    verdict: r.verdict,
                    elapsed_ms: r.elapsed_ms,
                };
                out.push_str(&serde_json::to_string(&rec).expect("report records always serialize"));
                out.push_str(if i + 1 < reports.len() { ",\n" } else { "\n" });
            }
            out.push_str("]\n");
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.claim,
                    r.p,
                    r.n,
                    r.q,
                    opt(r.d),
                    opt(r.gcd),
                    joined(r.c.iter().map(|c| c.code())),
                    joined(r.computed.iter()),
                    opt(r.claimed.map(|c| c.kind.tag())),
                    opt(r.claimed.map(|c| c.value)),
                    r.verdict,
                    opt(r.elapsed_ms),
                );
            }
        }
        Format::Human => {
            for r in reports {
                out.push_str(&human_line(r));
                out.push('\n');
            }
        }
    }
    out
}

fn human_line(r: &VerificationReport) -> String {
    let mut line = format!("{:<4} {:<9} GF({}^{})", r.verdict.to_string().to_uppercase(), r.claim.to_string(), r.p, r.n);
    if let Some(d) = r.d {
        let _ = write!(line, " d={d}");
    }
    if let Some(g) = r.gcd {
        let _ = write!(line, " gcd={g}");
    }
    if !r.c.is_empty() {
        let lo = r.computed.iter().min().copied().unwrap_or(0);
        let hi = r.computed.iter().max().copied().unwrap_or(0);
        if r.c.len() == 1 {
            let _ = write!(line, " c={} value={hi}", r.c[0]);
        } else if lo == hi {
            let _ = write!(line, " {} c tested, value={hi}", r.c.len());
        } else {
            let _ = write!(line, " {} c tested, values {lo}..{hi}", r.c.len());
        }
    }
    if let Some(cl) = r.claimed {
        let rel = match cl.kind {
            ClaimKind::Exact => "=",
            ClaimKind::UpperBound => "<=",
        };
        let _ = write!(line, " claim {rel}{}", cl.value);
    }
    if let Some(ms) = r.elapsed_ms {
        let _ = write!(line, " [{ms} ms]");
    }
    if let Some(note) = &r.note {
        let _ = write!(line, " ({note})");
    }
    line
}
