//! Claim corpus: exponent families with their conditions and claimed values.
//!
//! Two groups of entries exist. `F1`..`F6` are the ternary families whose
//! (-1)-differential uniformity is bounded (the bound for `F1`..`F4` depends
//! on `n mod 4`); `T1`..`T19` are the previously known power functions with
//! low c-differential uniformity, each with its own condition on `p`, `n` and
//! `c`. Rows with a free parameter `k` are instantiated once per `k`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::gcd;
use crate::character::{chi, trace, ChiValue};
use crate::field::{Element, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{id} does not apply at p={p}, n={n}: requires {predicate}")]
    NotApplicable { id: ClaimId, p: u32, n: u32, predicate: &'static str },
    #[error("{id}: {reason}")]
    Malformed { id: ClaimId, reason: String },
    #[error("unknown claim id `{0}`")]
    UnknownId(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    /// The ternary families `F1`..`F6`.
    Family,
    /// Known power functions `T1`..`T19`.
    Known,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClaimId {
    pub group: Group,
    pub index: u8,
    pub k: Option<u32>,
}

impl ClaimId {
    pub const fn family(index: u8) -> Self {
        ClaimId { group: Group::Family, index, k: None }
    }

    pub const fn known(index: u8, k: Option<u32>) -> Self {
        ClaimId { group: Group::Known, index, k }
    }

    /// The id without its `k` instantiation.
    pub fn base(self) -> Self {
        ClaimId { k: None, ..self }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.group {
            Group::Family => 'F',
            Group::Known => 'T',
        };
        write!(f, "{letter}{}", self.index)?;
        if let Some(k) = self.k {
            write!(f, "[k={k}]")?;
        }
        Ok(())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ClaimId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::UnknownId(s.to_string());
        let (head, k) = match s.split_once("[k=") {
            Some((h, rest)) => {
                let k = rest.strip_suffix(']').and_then(|v| v.parse().ok()).ok_or_else(bad)?;
                (h, Some(k))
            }
            None => (s, None),
        };
        let group = match head.chars().next().map(|c| c.to_ascii_uppercase()) {
            Some('F') => Group::Family,
            Some('T') => Group::Known,
            _ => return Err(bad()),
        };
        let index: u8 = head[1..].parse().map_err(|_| bad())?;
        let id = ClaimId { group, index, k };
        let template = templates().into_iter().find(|t| t.id == id.base()).ok_or_else(bad)?;
        if template.exponent.uses_k() != k.is_some() || k == Some(0) {
            return Err(bad());
        }
        Ok(id)
    }
}

/// Exponent formulas. Evaluated with exact integer arithmetic; divisions are
/// checked to be exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentRule {
    /// `(3^((n+1)/2) - 1) / 2`
    HalfPowerHalfDegree,
    /// `(3^((n+1)/2) - 1) / 2 + (3^n - 1) / 2`
    HalfPowerHalfDegreeShifted,
    /// `(3^(n+1) - 1) / 8`
    EighthPower,
    /// `(3^(n+1) - 1) / 8 + (3^n - 1) / 2`
    EighthPowerShifted,
    /// `(3^m - 1)(3^(2m) + 1)`, `m = (n+1)/4`
    QuarterDegreeProduct,
    /// `(3^n + 1) / 4 + (3^n - 1) / 2`
    QuarterOrderShifted,
    Square,
    /// `p^n - 2`, the inverse map.
    Inverse,
    /// `(p^k + 1) / 2`
    HalfPkPlusOne,
    /// `(p^2 + 1) / 2`
    HalfPSquaredPlusOne,
    /// `p^2 - p + 1`
    PSquaredMinusPPlusOne,
    /// `p^k + 1`
    PkPlusOne,
    /// `(2p^n - 1) / 3`
    TwoThirdsOrder,
    /// `(p^n + 1) / 2`
    HalfOrderPlusOne,
    /// `(p^n + 3) / 2`
    HalfOrderPlusThree,
    /// `(p^n - 3) / 2`
    HalfOrderMinusThree,
}

impl ExponentRule {
    pub fn tag(self) -> &'static str {
        use ExponentRule::*;
        match self {
            HalfPowerHalfDegree => "(3^((n+1)/2)-1)/2",
            HalfPowerHalfDegreeShifted => "(3^((n+1)/2)-1)/2+(3^n-1)/2",
            EighthPower => "(3^(n+1)-1)/8",
            EighthPowerShifted => "(3^(n+1)-1)/8+(3^n-1)/2",
            QuarterDegreeProduct => "(3^m-1)(3^(2m)+1),m=(n+1)/4",
            QuarterOrderShifted => "(3^n+1)/4+(3^n-1)/2",
            Square => "2",
            Inverse => "p^n-2",
            HalfPkPlusOne => "(p^k+1)/2",
            HalfPSquaredPlusOne => "(p^2+1)/2",
            PSquaredMinusPPlusOne => "p^2-p+1",
            PkPlusOne => "p^k+1",
            TwoThirdsOrder => "(2p^n-1)/3",
            HalfOrderPlusOne => "(p^n+1)/2",
            HalfOrderPlusThree => "(p^n+3)/2",
            HalfOrderMinusThree => "(p^n-3)/2",
        }
    }

    pub fn uses_k(self) -> bool {
        matches!(self, ExponentRule::HalfPkPlusOne | ExponentRule::PkPlusOne)
    }

    /// Raw exponent; `Err` carries a reason when a division is not exact or
    /// the arithmetic overflows.
    fn eval(self, p: u32, n: u32, k: Option<u32>) -> Result<u64, String> {
        use ExponentRule::*;
        let pow = |b: u64, e: u32| b.checked_pow(e).ok_or_else(|| "exponent overflows u64".to_string());
        let exact = |num: u64, den: u64| {
            if num % den == 0 {
                Ok(num / den)
            } else {
                Err(format!("{den} does not divide {num}"))
            }
        };
        let p = p as u64;
        let q = pow(p, n)?;
        let half_order = (q - 1) / 2;
        let k = || k.ok_or_else(|| "missing k".to_string());
        match self {
            HalfPowerHalfDegree => exact(pow(3, exact(n as u64 + 1, 2)? as u32)? - 1, 2),
            HalfPowerHalfDegreeShifted => Ok(HalfPowerHalfDegree.eval(3, n, None)? + half_order),
            EighthPower => exact(pow(3, n + 1)? - 1, 8),
            EighthPowerShifted => Ok(EighthPower.eval(3, n, None)? + half_order),
            QuarterDegreeProduct => {
                let m = exact(n as u64 + 1, 4)? as u32;
                Ok((pow(3, m)? - 1) * (pow(3, 2 * m)? + 1))
            }
            QuarterOrderShifted => Ok(exact(q + 1, 4)? + half_order),
            Square => Ok(2),
            Inverse => Ok(q - 2),
            HalfPkPlusOne => exact(pow(p, k()?)? + 1, 2),
            HalfPSquaredPlusOne => exact(p * p + 1, 2),
            PSquaredMinusPPlusOne => Ok(p * p - p + 1),
            PkPlusOne => Ok(pow(p, k()?)? + 1),
            TwoThirdsOrder => exact(2 * q - 1, 3),
            HalfOrderPlusOne => exact(q + 1, 2),
            HalfOrderPlusThree => exact(q + 3, 2),
            HalfOrderMinusThree => exact(q.saturating_sub(3), 2),
        }
    }
}

/// Side conditions on `(p, n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    PrimeIs(u32),
    PrimeOdd,
    PrimeAboveThree,
    DegreeOdd,
    DegreeMod4(u32),
    DegreeIs(u32),
    DegreeAtLeast(u32),
    /// `1 <= k < n`
    KBelowDegree,
    KCoprimeDegree,
    KOdd,
    /// `k / gcd(k, n)` even
    KQuotientEven,
    /// `n / gcd(k, n) = 1`
    DegreeQuotientOne,
    OrderMod3(u64),
    OrderMod4(u64),
}

impl Predicate {
    pub fn tag(self) -> &'static str {
        use Predicate::*;
        match self {
            PrimeIs(2) => "p=2",
            PrimeIs(3) => "p=3",
            PrimeIs(_) => "p=?",
            PrimeOdd => "p-odd",
            PrimeAboveThree => "p>3",
            DegreeOdd => "n-odd",
            DegreeMod4(1) => "n%4=1",
            DegreeMod4(3) => "n%4=3",
            DegreeMod4(_) => "n%4=?",
            DegreeIs(3) => "n=3",
            DegreeIs(_) => "n=?",
            DegreeAtLeast(3) => "n>=3",
            DegreeAtLeast(_) => "n>=?",
            KBelowDegree => "k<n",
            KCoprimeDegree => "gcd(k,n)=1",
            KOdd => "k-odd",
            KQuotientEven => "k/gcd(k,n)-even",
            DegreeQuotientOne => "n/gcd(k,n)=1",
            OrderMod3(2) => "q%3=2",
            OrderMod3(_) => "q%3=?",
            OrderMod4(1) => "q%4=1",
            OrderMod4(3) => "q%4=3",
            OrderMod4(_) => "q%4=?",
        }
    }

    pub fn holds(self, p: u32, n: u32, k: Option<u32>) -> bool {
        use Predicate::*;
        let q = (p as u64).checked_pow(n);
        let k = k.unwrap_or(0) as u64;
        let n64 = n as u64;
        match self {
            PrimeIs(v) => p == v,
            PrimeOdd => p % 2 == 1,
            PrimeAboveThree => p > 3,
            DegreeOdd => n % 2 == 1,
            DegreeMod4(r) => n % 4 == r,
            DegreeIs(v) => n == v,
            DegreeAtLeast(v) => n >= v,
            KBelowDegree => k >= 1 && k < n64,
            KCoprimeDegree => k >= 1 && gcd(k, n64) == 1,
            KOdd => k % 2 == 1,
            KQuotientEven => k >= 1 && (k / gcd(k, n64)) % 2 == 0,
            DegreeQuotientOne => k >= 1 && n64 / gcd(k, n64) == 1,
            OrderMod3(r) => q.is_some_and(|q| q % 3 == r),
            OrderMod4(r) => q.is_some_and(|q| q % 4 == r),
        }
    }
}

/// Which `c` values an entry speaks about. Every condition except the fixed
/// `c = -1` / `c = 0` ones ranges over the whole field; `c = 1` is never
/// included.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CCondition {
    MinusOne,
    Zero,
    NotOne,
    NotPlusMinusOne,
    PrimeSubfieldNotOne,
    /// `c != 0`, `Tr(c) = Tr(1/c) = 1`
    TraceBothOne,
    /// `c != 0`, `Tr(c) = 0` or `Tr(1/c) = 0`
    TraceEitherZero,
    /// `c = 4`, `c = 1/4`, or `chi(c^2 - 4c) = chi(1 - 4c) = -1`
    InverseLow,
    /// `c != 0, 4, 1/4` and `chi(c^2 - 4c) = 1` or `chi(1 - 4c) = 1`
    InverseHigh,
    /// `c != +-1`, `chi((1 - c)/(1 + c)) = 1`
    RatioSquare,
}

impl CCondition {
    pub fn tag(self) -> &'static str {
        use CCondition::*;
        match self {
            MinusOne => "c=-1",
            Zero => "c=0",
            NotOne => "c!=1",
            NotPlusMinusOne => "c!=+-1",
            PrimeSubfieldNotOne => "c-in-GF(p),c!=1",
            TraceBothOne => "c!=0,Tr(c)=Tr(1/c)=1",
            TraceEitherZero => "c!=0,Tr(c)=0|Tr(1/c)=0",
            InverseLow => "c=4|c=1/4|chi(c^2-4c)=chi(1-4c)=-1",
            InverseHigh => "c!=0,4,1/4,chi(c^2-4c)=1|chi(1-4c)=1",
            RatioSquare => "c!=+-1,chi((1-c)/(1+c))=1",
        }
    }

    pub fn is_fixed(self) -> bool {
        matches!(self, CCondition::MinusOne | CCondition::Zero)
    }

    /// Whether `c` satisfies the condition in `field` (ignoring the global
    /// `c != 1` exclusion, which [`enumerate_c`] applies).
    pub fn admits(self, field: &Field, c: Element) -> bool {
        use CCondition::*;
        let one = Element::ONE;
        let chi_is = |x: Element, want: ChiValue| chi(field, x).is_ok_and(|v| v == want);
        let four = field.from_int(4);
        let quarter = field.inv(four).ok();
        // c^2 - 4c and 1 - 4c
        let disc = || (field.sub(field.mul(c, c), field.mul(four, c)), field.sub(one, field.mul(four, c)));
        match self {
            MinusOne => c == field.minus_one(),
            Zero => c.is_zero(),
            NotOne => true,
            NotPlusMinusOne => c != field.minus_one(),
            PrimeSubfieldNotOne => c.code() < field.p(),
            TraceBothOne => match field.inv(c) {
                Ok(ci) => trace(field, c) == 1 && trace(field, ci) == 1,
                Err(_) => false,
            },
            TraceEitherZero => match field.inv(c) {
                Ok(ci) => trace(field, c) == 0 || trace(field, ci) == 0,
                Err(_) => false,
            },
            InverseLow => {
                if c.is_zero() {
                    return false;
                }
                if c == four || Some(c) == quarter {
                    return true;
                }
                let (a, b) = disc();
                chi_is(a, ChiValue::MinusOne) && chi_is(b, ChiValue::MinusOne)
            }
            InverseHigh => {
                if c.is_zero() || c == four || Some(c) == quarter {
                    return false;
                }
                let (a, b) = disc();
                chi_is(a, ChiValue::One) || chi_is(b, ChiValue::One)
            }
            RatioSquare => {
                if c == field.minus_one() {
                    return false;
                }
                let ratio = field.div(field.sub(one, c), field.add(one, c));
                ratio.is_ok_and(|r| chi_is(r, ChiValue::One))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Exact,
    UpperBound,
}

impl ClaimKind {
    pub fn tag(self) -> &'static str {
        match self {
            ClaimKind::Exact => "exact",
            ClaimKind::UpperBound => "upper_bound",
        }
    }

    pub fn accepts(self, claimed: u32, computed: u32) -> bool {
        match self {
            ClaimKind::Exact => computed == claimed,
            ClaimKind::UpperBound => computed <= claimed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimedValue {
    Fixed(u32),
    /// Value for `n = 1 (mod 4)` and for `n = 3 (mod 4)`.
    ByDegreeMod4 { one: u32, three: u32 },
}

impl ClaimedValue {
    pub fn tag(self) -> String {
        match self {
            ClaimedValue::Fixed(v) => v.to_string(),
            ClaimedValue::ByDegreeMod4 { one, three } => format!("n%4=1:{one},n%4=3:{three}"),
        }
    }
}

/// Classical (c = 1) APN claim attached to a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApnClaim {
    pub applicability: Vec<Predicate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimEntry {
    pub id: ClaimId,
    pub exponent: ExponentRule,
    pub applicability: Vec<Predicate>,
    pub c_condition: CCondition,
    pub kind: ClaimKind,
    pub value: ClaimedValue,
    pub apn: Option<ApnClaim>,
}

impl ClaimEntry {
    fn k(&self) -> Option<u32> {
        self.id.k
    }

    /// First violated applicability predicate at `(p, n)`.
    pub fn violated(&self, p: u32, n: u32) -> Option<Predicate> {
        self.applicability.iter().copied().find(|pr| !pr.holds(p, n, self.k()))
    }

    pub fn applies(&self, p: u32, n: u32) -> bool {
        self.violated(p, n).is_none() && self.exponent(p, n).is_ok()
    }

    /// Whether the entry carries an APN claim at `(p, n)`.
    pub fn apn_applies(&self, p: u32, n: u32) -> bool {
        self.apn.as_ref().is_some_and(|a| a.applicability.iter().all(|pr| pr.holds(p, n, self.id.k))) && self.applies(p, n)
    }

    /// The exponent `d` at `(p, n)`, unreduced.
    pub fn exponent(&self, p: u32, n: u32) -> Result<u64, FamilyError> {
        if let Some(pr) = self.violated(p, n) {
            return Err(FamilyError::NotApplicable { id: self.id, p, n, predicate: pr.tag() });
        }
        match self.exponent.eval(p, n, self.k()) {
            Ok(0) => Err(FamilyError::NotApplicable { id: self.id, p, n, predicate: "d>=1" }),
            Ok(d) => Ok(d),
            Err(reason) => Err(FamilyError::Malformed { id: self.id, reason }),
        }
    }

    /// Manifest source tag: `new:<rows>` for the families (one family covers
    /// both of its `n mod 4` rows), `known:<row>` for the published rows.
    pub fn source(&self) -> String {
        match self.id.group {
            Group::Family => {
                let i = self.id.index;
                match i {
                    1..=4 => format!("new:{},{}", i, i + 4),
                    _ => format!("new:{}", i + 4),
                }
            }
            Group::Known => format!("known:{}", self.id.index),
        }
    }

    /// The entry rendered as a manifest record (without the padding).
    pub fn manifest_line(&self) -> String {
        let preds: Vec<&str> = self.applicability.iter().map(|p| p.tag()).collect();
        let preds = if preds.is_empty() { "-".to_string() } else { preds.join(",") };
        format!(
            "{} | {} | {} | {} | {} | {} | {}",
            self.id,
            self.source(),
            self.exponent.tag(),
            preds,
            self.c_condition.tag(),
            self.kind.tag(),
            self.value.tag()
        )
    }

    pub fn claimed_bound(&self, p: u32, n: u32) -> Result<(ClaimKind, u32), FamilyError> {
        self.exponent(p, n)?;
        let v = match self.value {
            ClaimedValue::Fixed(v) => v,
            ClaimedValue::ByDegreeMod4 { one, three } => match n % 4 {
                1 => one,
                3 => three,
                _ => return Err(FamilyError::NotApplicable { id: self.id, p, n, predicate: "n-odd" }),
            },
        };
        Ok((self.kind, v))
    }
}

/// Every `c` in `field` admitted by the entry's condition, ascending by code.
pub fn enumerate_c(field: &Field, entry: &ClaimEntry) -> Vec<Element> {
    let cond = entry.c_condition;
    let candidates: Vec<Element> = match cond {
        CCondition::MinusOne => vec![field.minus_one()],
        CCondition::Zero => vec![Element::ZERO],
        _ => field.elements().filter(|&c| cond.admits(field, c)).collect(),
    };
    candidates.into_iter().filter(|&c| c != Element::ONE).collect()
}

fn family(index: u8, exponent: ExponentRule, applicability: Vec<Predicate>, value: ClaimedValue, apn: Option<Vec<Predicate>>) -> ClaimEntry {
    ClaimEntry {
        id: ClaimId::family(index),
        exponent,
        applicability,
        c_condition: CCondition::MinusOne,
        kind: ClaimKind::UpperBound,
        value,
        apn: apn.map(|applicability| ApnClaim { applicability }),
    }
}

fn known(index: u8, exponent: ExponentRule, applicability: Vec<Predicate>, c_condition: CCondition, kind: ClaimKind, value: u32) -> ClaimEntry {
    ClaimEntry {
        id: ClaimId::known(index, None),
        exponent,
        applicability,
        c_condition,
        kind,
        value: ClaimedValue::Fixed(value),
        apn: None,
    }
}

/// One entry per family and per known row, with `k` left uninstantiated.
pub fn templates() -> Vec<ClaimEntry> {
    use CCondition as C;
    use ClaimKind::{Exact, UpperBound};
    use ExponentRule as E;
    use Predicate::*;
    let low_high = ClaimedValue::ByDegreeMod4 { one: 2, three: 4 };
    let high_low = ClaimedValue::ByDegreeMod4 { one: 4, three: 2 };
    let ternary_odd = || vec![PrimeIs(3), DegreeOdd];
    // GF(3) is excluded throughout: every map on three points is degenerate.
    let apn_one = || Some(vec![PrimeIs(3), DegreeMod4(1), DegreeAtLeast(3)]);
    let mut out = vec![
        family(1, E::HalfPowerHalfDegree, ternary_odd(), low_high, apn_one()),
        family(2, E::HalfPowerHalfDegreeShifted, ternary_odd(), high_low, None),
        family(3, E::EighthPower, ternary_odd(), low_high, apn_one()),
        family(4, E::EighthPowerShifted, ternary_odd(), high_low, None),
        family(5, E::QuarterDegreeProduct, vec![PrimeIs(3), DegreeMod4(3)], ClaimedValue::Fixed(4), Some(vec![PrimeIs(3), DegreeMod4(3)])),
        family(6, E::QuarterOrderShifted, ternary_odd(), ClaimedValue::Fixed(4), Some(vec![PrimeIs(3), DegreeOdd, DegreeAtLeast(3)])),
    ];
    out.extend([
        known(1, E::Square, vec![], C::NotOne, Exact, 2),
        known(2, E::Inverse, vec![], C::Zero, Exact, 1),
        known(3, E::Inverse, vec![PrimeIs(2)], C::TraceBothOne, Exact, 2),
        known(4, E::Inverse, vec![PrimeIs(2)], C::TraceEitherZero, Exact, 3),
        known(5, E::Inverse, vec![PrimeOdd], C::InverseLow, Exact, 2),
        known(6, E::Inverse, vec![PrimeOdd], C::InverseHigh, Exact, 3),
        known(7, E::HalfPkPlusOne, vec![PrimeIs(3), KBelowDegree, DegreeQuotientOne], C::MinusOne, Exact, 1),
        known(8, E::HalfPSquaredPlusOne, vec![PrimeOdd, DegreeOdd], C::MinusOne, Exact, 1),
        known(9, E::PSquaredMinusPPlusOne, vec![PrimeOdd, DegreeIs(3)], C::MinusOne, Exact, 1),
        known(10, E::PkPlusOne, vec![PrimeIs(2), KBelowDegree, KCoprimeDegree], C::NotOne, Exact, 3),
        known(11, E::PkPlusOne, vec![PrimeOdd, KBelowDegree, KCoprimeDegree], C::PrimeSubfieldNotOne, Exact, 2),
        known(12, E::HalfPkPlusOne, vec![PrimeOdd, KBelowDegree, KQuotientEven], C::MinusOne, Exact, 1),
        known(13, E::HalfPkPlusOne, vec![PrimeIs(3), KBelowDegree, KOdd, KCoprimeDegree], C::MinusOne, Exact, 2),
        known(14, E::TwoThirdsOrder, vec![OrderMod3(2)], C::NotOne, UpperBound, 3),
        known(15, E::HalfOrderPlusOne, vec![PrimeOdd], C::NotPlusMinusOne, UpperBound, 4),
        known(16, E::HalfOrderPlusOne, vec![PrimeOdd, OrderMod4(1)], C::RatioSquare, UpperBound, 2),
        known(17, E::HalfOrderPlusThree, vec![PrimeAboveThree, OrderMod4(3)], C::MinusOne, UpperBound, 3),
        known(18, E::HalfOrderPlusThree, vec![PrimeAboveThree, OrderMod4(1)], C::MinusOne, UpperBound, 4),
        known(19, E::HalfOrderMinusThree, vec![PrimeOdd], C::MinusOne, UpperBound, 4),
    ]);
    out
}

/// All entries, with each `k`-parameterized row instantiated for
/// `k = 1..=k_max`.
pub fn corpus(k_max: u32) -> Vec<ClaimEntry> {
    templates()
        .into_iter()
        .flat_map(|t| {
            if t.exponent.uses_k() {
                (1..=k_max)
                    .map(|k| ClaimEntry { id: ClaimId { k: Some(k), ..t.id }, ..t.clone() })
                    .collect()
            } else {
                vec![t]
            }
        })
        .collect()
}

/// Entry for an id such as `F1`, `T2` or `T10[k=3]`.
pub fn lookup(id: &str) -> Result<ClaimEntry, FamilyError> {
    let id: ClaimId = id.parse()?;
    let t = templates().into_iter().find(|t| t.id == id.base()).ok_or_else(|| FamilyError::UnknownId(id.to_string()))?;
    Ok(ClaimEntry { id, ..t })
}

/// `d` for a ternary family at degree `n`.
pub fn family_exponent(id: &str, n: u32) -> Result<u64, FamilyError> {
    lookup(id)?.exponent(3, n)
}
