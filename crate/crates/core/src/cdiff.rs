//! c-derivative counts, differential spectra and c-differential uniformity.
//!
//! For a function `F` on GF(q) and `a, c` in the field, the c-derivative is
//! `F(x + a) - c F(x)`. Its value histogram over all `x` is one row of the
//! c-differential table; the c-differential uniformity is the largest entry
//! over all `(a, b)`, where `a = 0` only counts when `c != 1`.
//!
//! For a power function `x^d` and `c != 1`, every row with `a != 0` is a
//! relabelling of the `a = 1` row, and the `a = 0` row peaks at
//! `gcd(d, q - 1)`. [`uniformity_power`] uses that to get the answer from a
//! single O(q) pass; [`uniformity_full`] is the O(q^2) brute force it is tested
//! against.
//!
//! Histogram passes split the x-domain into one contiguous range per rayon
//! worker and merge the per-range counts by addition, so results do not
//! depend on the thread count.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith;
use crate::field::{Element, Field};

/// At most this many `(a, b)` witnesses are kept, in `(a, b)` code order.
pub const MAX_WITNESSES: usize = 16;

/// Below this order a single thread does the whole pass.
const PAR_MIN_ORDER: usize = 1 << 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CdiffError {
    #[error("the power-function shortcut requires c != 1; use the full search for c = 1")]
    CIsOne,
    #[error("power exponent must be at least 1")]
    ZeroExponent,
    #[error("lookup table has {got} entries, field has {expected} elements")]
    TableLength { expected: usize, got: usize },
    #[error("lookup table entry {code} is not a field element")]
    TableEntry { code: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionUnderTest {
    Power(u64),
    Table(Vec<Element>),
}

impl FunctionUnderTest {
    pub fn power(d: u64) -> Result<Self, CdiffError> {
        if d == 0 {
            return Err(CdiffError::ZeroExponent);
        }
        Ok(FunctionUnderTest::Power(d))
    }

    pub fn table(field: &Field, values: Vec<Element>) -> Result<Self, CdiffError> {
        if values.len() != field.q() as usize {
            return Err(CdiffError::TableLength { expected: field.q() as usize, got: values.len() });
        }
        if let Some(bad) = values.iter().find(|v| v.code() >= field.q()) {
            return Err(CdiffError::TableEntry { code: bad.code() });
        }
        Ok(FunctionUnderTest::Table(values))
    }

    pub fn eval(&self, field: &Field, x: Element) -> Element {
        match self {
            FunctionUnderTest::Power(d) => field.pow(x, *d),
            FunctionUnderTest::Table(t) => t[x.code() as usize],
        }
    }

    fn tabulate(&self, field: &Field) -> Vec<u32> {
        match self {
            FunctionUnderTest::Power(d) => field.elements().map(|x| field.pow(x, *d).code()).collect(),
            FunctionUnderTest::Table(t) => t.iter().map(|e| e.code()).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FullBruteForce,
    PowerFastPath,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::FullBruteForce => "full-brute-force",
            Method::PowerFastPath => "power-fast-path",
        })
    }
}

/// Histogram `b -> #{x : F(x + a) - c F(x) = b}` for one `(a, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumResult {
    pub c: Element,
    pub a: Element,
    pub counts: Vec<u32>,
    pub uniformity_row: u32,
    /// `k -> #{b : counts[b] = k}`, including `k = 0`.
    pub multiplicities: BTreeMap<u32, u32>,
}

impl SpectrumResult {
    fn from_counts(a: Element, c: Element, counts: Vec<u32>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &k in &counts {
            *multiplicities.entry(k).or_insert(0) += 1;
        }
        let uniformity_row = counts.iter().copied().max().unwrap_or(0);
        SpectrumResult { c, a, counts, uniformity_row, multiplicities }
    }

    pub fn count(&self, b: Element) -> u32 {
        self.counts[b.code() as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformityResult {
    pub c: Element,
    pub value: u32,
    /// `(a, b)` pairs attaining `value`, first [`MAX_WITNESSES`] in code order.
    pub witnesses: Vec<(Element, Element)>,
    pub method: Method,
    pub gcd_term: Option<u64>,
}

/// PcN / APcN / general `(c, k)`-uniform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    PerfectNonlinear,
    AlmostPerfectNonlinear,
    Uniform(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::PerfectNonlinear => f.write_str("PcN"),
            Label::AlmostPerfectNonlinear => f.write_str("APcN"),
            Label::Uniform(k) => write!(f, "differentially (c,{k})-uniform"),
        }
    }
}

pub fn classify(r: &UniformityResult) -> Label {
    match r.value {
        1 => Label::PerfectNonlinear,
        2 => Label::AlmostPerfectNonlinear,
        k => Label::Uniform(k),
    }
}

/// `F(x + a) - c F(x)` at a single point.
pub fn derivative_value(field: &Field, f: &FunctionUnderTest, a: Element, c: Element, x: Element) -> Element {
    let shifted = f.eval(field, field.add(x, a));
    field.sub(shifted, field.mul(c, f.eval(field, x)))
}

/// `#{x : F(x + a) - c F(x) = b}`.
pub fn c_derivative_count(field: &Field, f: &FunctionUnderTest, a: Element, b: Element, c: Element) -> u32 {
    let values = f.tabulate(field);
    let scaled = scale(field, &values, field.neg(c));
    let add = |x: u32, y: u32| field.add(Element::from_code(x), Element::from_code(y)).code();
    (0..field.q())
        .filter(|&x| add(values[add(x, a.code()) as usize], scaled[x as usize]) == b.code())
        .count() as u32
}

pub fn delta_row_histogram(field: &Field, f: &FunctionUnderTest, a: Element, c: Element) -> SpectrumResult {
    let values = f.tabulate(field);
    let scaled = scale(field, &values, field.neg(c));
    let counts = row_counts(field, &values, &scaled, a);
    SpectrumResult::from_counts(a, c, counts)
}

/// Exhaustive maximum over every admissible `(a, b)`; no early exit.
pub fn uniformity_full(field: &Field, f: &FunctionUnderTest, c: Element) -> UniformityResult {
    let q = field.q() as usize;
    let values = f.tabulate(field);
    let scaled = scale(field, &values, field.neg(c));
    let first_a = if c == Element::ONE { 1 } else { 0 };

    let row = |buf: &mut Vec<u32>, a: u32| -> (u32, Vec<u32>) {
        buf.iter_mut().for_each(|v| *v = 0);
        fill_range(field, &values, &scaled, a, 0..q as u32, buf);
        let best = buf.iter().copied().max().unwrap_or(0);
        let bs = (0..q as u32).filter(|&b| buf[b as usize] == best).take(MAX_WITNESSES).collect();
        (best, bs)
    };
    let rows: Vec<(u32, Vec<u32>)> = if q < 256 {
        let mut buf = vec![0u32; q];
        (first_a..q as u32).map(|a| row(&mut buf, a)).collect()
    } else {
        (first_a..q as u32)
            .into_par_iter()
            .map_init(|| vec![0u32; q], |buf, a| row(buf, a))
            .collect()
    };

    let value = rows.iter().map(|(m, _)| *m).max().unwrap_or(0);
    let witnesses = rows
        .iter()
        .enumerate()
        .filter(|(_, (m, _))| *m == value)
        .flat_map(|(i, (_, bs))| {
            let a = Element::from_code(first_a + i as u32);
            bs.iter().map(move |&b| (a, Element::from_code(b)))
        })
        .take(MAX_WITNESSES)
        .collect();
    let gcd_term = match f {
        FunctionUnderTest::Power(d) => Some(arith::gcd(*d, (field.q() - 1) as u64)),
        FunctionUnderTest::Table(_) => None,
    };
    UniformityResult { c, value, witnesses, method: Method::FullBruteForce, gcd_term }
}

/// c-differential uniformity of `x^d` from the `a = 1` row and `gcd(d, q-1)`.
pub fn uniformity_power(field: &Field, d: u64, c: Element) -> Result<UniformityResult, CdiffError> {
    if c == Element::ONE {
        return Err(CdiffError::CIsOne);
    }
    let f = FunctionUnderTest::power(d)?;
    let spectrum = delta_row_histogram(field, &f, Element::ONE, c);
    let g = arith::gcd(d, (field.q() - 1) as u64);
    Ok(power_result(field, c, &spectrum, g))
}

fn power_result(field: &Field, c: Element, spectrum: &SpectrumResult, g: u64) -> UniformityResult {
    let value = (spectrum.uniformity_row as u64).max(g) as u32;
    let mut witnesses = Vec::new();
    if g == value as u64 {
        // a = 0: (1 - c) x^d = 1 - c has exactly gcd(d, q-1) solutions.
        witnesses.push((Element::ZERO, field.sub(Element::ONE, c)));
    }
    witnesses.extend(
        spectrum
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &k)| k == value)
            .map(|(b, _)| (Element::ONE, Element::from_code(b as u32))),
    );
    witnesses.truncate(MAX_WITNESSES);
    UniformityResult { c, value, witnesses, method: Method::PowerFastPath, gcd_term: Some(g) }
}

/// Every `d` in `[1, q-2]` whose c-differential uniformity is at most
/// `threshold`, ascending.
pub fn scan_exponents(field: &Field, c: Element, threshold: u32) -> Result<Vec<(u64, u32)>, CdiffError> {
    if c == Element::ONE {
        return Err(CdiffError::CIsOne);
    }
    let q = field.q() as usize;
    let order = (q - 1) as u64;
    let neg_c = field.neg(c);
    let shifted: Vec<u32> = (0..q as u32)
        .map(|x| field.add(Element::from_code(x), Element::ONE).code())
        .collect();
    let one_exponent = |buf: &mut Vec<u32>, d: u64| -> Option<(u64, u32)> {
        let g = arith::gcd(d, order);
        if g > threshold as u64 {
            return None;
        }
        buf.iter_mut().for_each(|v| *v = 0);
        let mut best = 0;
        for x in 0..q as u32 {
            let fx = field.pow(Element::from_code(x), d);
            let fy = field.pow(Element::from_code(shifted[x as usize]), d);
            let b = field.add(fy, field.mul(neg_c, fx)).code() as usize;
            buf[b] += 1;
            best = best.max(buf[b]);
            if best > threshold {
                return None;
            }
        }
        Some((d, (best as u64).max(g) as u32))
    };
    let hi = order.saturating_sub(1);
    Ok(if q < 256 {
        let mut buf = vec![0u32; q];
        (1..=hi).filter_map(|d| one_exponent(&mut buf, d)).collect()
    } else {
        (1..=hi)
            .into_par_iter()
            .map_init(|| vec![0u32; q], |buf, d| one_exponent(buf, d))
            .flatten()
            .collect()
    })
}

fn scale(field: &Field, values: &[u32], k: Element) -> Vec<u32> {
    values.iter().map(|&v| field.mul(k, Element::from_code(v)).code()).collect()
}

#[inline]
fn fill_range(field: &Field, values: &[u32], scaled: &[u32], a: u32, xs: std::ops::Range<u32>, counts: &mut [u32]) {
    let a = Element::from_code(a);
    for x in xs {
        let y = field.add(Element::from_code(x), a).code();
        let b = field.add(Element::from_code(values[y as usize]), Element::from_code(scaled[x as usize]));
        counts[b.code() as usize] += 1;
    }
}

fn row_counts(field: &Field, values: &[u32], scaled: &[u32], a: Element) -> Vec<u32> {
    let q = field.q() as usize;
    let workers = rayon::current_num_threads();
    if q < PAR_MIN_ORDER || workers == 1 {
        let mut counts = vec![0u32; q];
        fill_range(field, values, scaled, a.code(), 0..q as u32, &mut counts);
        return counts;
    }
    let step = q.div_ceil(workers);
    (0..workers)
        .into_par_iter()
        .map(|w| {
            let lo = (w * step).min(q) as u32;
            let hi = ((w + 1) * step).min(q) as u32;
            let mut local = vec![0u32; q];
            fill_range(field, values, scaled, a.code(), lo..hi, &mut local);
            local
        })
        .reduce(
            || vec![0u32; q],
            |mut acc, part| {
                acc.iter_mut().zip(part).for_each(|(s, v)| *s += v);
                acc
            },
        )
}
