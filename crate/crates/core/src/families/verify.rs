//! Verification harness: evaluate a corpus entry on a concrete field.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use super::corpus::{enumerate_c, ClaimEntry, ClaimId, ClaimKind};
use crate::arith::gcd;
use crate::cdiff::{uniformity_full, uniformity_power, FunctionUnderTest};
use crate::field::{Element, Field};

/// Value the classical (c = 1) cross-check expects.
pub const APN_VALUE: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claimed {
    pub kind: ClaimKind,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub p: u32,
    pub n: u32,
    pub q: u64,
    pub d: Option<u64>,
    pub gcd: Option<u64>,
    pub c: Vec<Element>,
    pub computed: Vec<u32>,
    pub claimed: Option<Claimed>,
    pub verdict: Verdict,
    pub elapsed_ms: Option<u64>,
    /// Why a run was not applicable, or which cross-check produced it.
    pub note: Option<String>,
}

impl VerificationReport {
    fn skeleton(entry: &ClaimEntry, field: &Field) -> Self {
        VerificationReport {
            claim: entry.id,
            p: field.p(),
            n: field.n(),
            q: field.q() as u64,
            d: None,
            gcd: None,
            c: Vec::new(),
            computed: Vec::new(),
            claimed: None,
            verdict: Verdict::NotApplicable,
            elapsed_ms: None,
            note: None,
        }
    }

    fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::NotApplicable;
        self.note = Some(why.into());
        self
    }

    /// Sort key used for reproducible report order.
    pub fn sort_key(&self) -> (ClaimId, u32, u32, Option<u32>) {
        (self.claim, self.p, self.n, self.c.first().map(|c| c.code()))
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Restrict testing to these `c` (intersected with the entry's condition).
    pub c_filter: Option<Vec<Element>>,
    /// Test at most this many admissible `c`, smallest codes first.
    pub c_limit: Option<usize>,
    pub timing: bool,
}

/// Checks `entry` on `field` for every admissible `c`.
pub fn verify_claim(field: &Field, entry: &ClaimEntry, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::skeleton(entry, field);
    let (kind, value) = match entry.claimed_bound(field.p(), field.n()) {
        Ok(b) => b,
        Err(e) => return report.not_applicable(e.to_string()),
    };
    let d = match entry.exponent(field.p(), field.n()) {
        Ok(d) => d,
        Err(e) => return report.not_applicable(e.to_string()),
    };
    report.d = Some(d);
    report.gcd = Some(gcd(d, field.q() as u64 - 1));
    report.claimed = Some(Claimed { kind, value });

    let mut cs = enumerate_c(field, entry);
    if let Some(filter) = &opts.c_filter {
        cs.retain(|c| filter.contains(c));
    }
    if let Some(limit) = opts.c_limit {
        cs.truncate(limit);
    }
    if cs.is_empty() {
        return report.not_applicable(format!("no c in GF({}^{}) satisfies {}", field.p(), field.n(), entry.c_condition.tag()));
    }

    for &c in &cs {
        // c = 1 never reaches here: enumerate_c drops it.
        let computed = match uniformity_power(field, d, c) {
            Ok(r) => r.value,
            Err(e) => return report.not_applicable(e.to_string()),
        };
        report.computed.push(computed);
    }
    report.c = cs;
    report.verdict = if report.computed.iter().all(|&v| kind.accepts(value, v)) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    if opts.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

/// Classical differential uniformity of the entry's exponent, which must be
/// exactly 2 wherever the entry carries an APN claim.
pub fn apn_crosscheck(field: &Field, entry: &ClaimEntry, timing: bool) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::skeleton(entry, field);
    let Some(apn) = &entry.apn else {
        return report.not_applicable(format!("{} carries no APN claim", entry.id));
    };
    if let Some(pr) = apn.applicability.iter().find(|pr| !pr.holds(field.p(), field.n(), entry.id.k)) {
        return report.not_applicable(format!("APN claim requires {}", pr.tag()));
    }
    let d = match entry.exponent(field.p(), field.n()) {
        Ok(d) => d,
        Err(e) => return report.not_applicable(e.to_string()),
    };
    let f = match FunctionUnderTest::power(d) {
        Ok(f) => f,
        Err(e) => return report.not_applicable(e.to_string()),
    };
    let r = uniformity_full(field, &f, Element::ONE);
    report.d = Some(d);
    report.gcd = Some(gcd(d, field.q() as u64 - 1));
    report.c = vec![Element::ONE];
    report.computed = vec![r.value];
    report.claimed = Some(Claimed { kind: ClaimKind::Exact, value: APN_VALUE });
    report.verdict = if r.value == APN_VALUE { Verdict::Pass } else { Verdict::Fail };
    report.note = Some("apn".into());
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}
