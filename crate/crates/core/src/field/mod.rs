//! GF(p^n) with exp/log tables.
//!
//! Elements are packed base-p codes: the code `c0 + c1 p + ... + c_{n-1} p^{n-1}`
//! stands for the residue `c0 + c1 x + ... + c_{n-1} x^{n-1}` modulo the
//! field's modulus. Code 0 is zero, code 1 is one, and codes below `p` form the
//! prime subfield.
//!
//! Multiplication, inversion and powering go through a discrete-log table
//! (`log`, length q) and an antilog table (`exp`, length 2(q-1) so that a sum
//! of two logs indexes it without reduction). Addition is digit-wise.

mod database;
mod digits;
mod poly;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith;
pub use database::PolyDatabase;
use digits::DigitOps;
pub use poly::check_irreducible;
use poly::Zp;

/// Largest field order built unless the caller raises the cap.
pub const DEFAULT_ORDER_CAP: u64 = 43_046_721; // 3^16

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{n} exceeds the cap of {cap}")]
    TooLarge { p: u32, n: u32, cap: u64 },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("modulus {modulus:?} is reducible over GF({p})")]
    Reducible { p: u32, modulus: Vec<u32> },
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: u32, got: usize },
    #[error("no modulus for GF({p}^{n}) in the polynomial database")]
    DatabaseMiss { p: u32, n: u32 },
    #[error("polynomial database: {0}")]
    Database(String),
    #[error("code {code} is outside [0, {q})")]
    OutOfRange { code: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
}

/// Parameters of a field: characteristic, degree and monic modulus
/// (constant term first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    /// Wraps a code without a range check; use [`Field::element`] for input.
    pub const fn from_code(code: u32) -> Self {
        Element(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct BuildOptions<'a> {
    pub cap: u64,
    pub database: &'a PolyDatabase,
}

impl Default for BuildOptions<'static> {
    fn default() -> Self {
        BuildOptions { cap: DEFAULT_ORDER_CAP, database: PolyDatabase::bundled() }
    }
}

/// A fully tabulated finite field. Immutable once built.
#[derive(Clone)]
pub struct Field {
    spec: FieldSpec,
    q: u32,
    generator: Element,
    log: Vec<u32>,
    exp: Vec<u32>,
    digits: DigitOps,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.spec.p)
            .field("n", &self.spec.n)
            .field("modulus", &self.spec.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl Field {
    /// Builds GF(p^n) with the default size cap. Without an explicit modulus
    /// the bundled Conway polynomial is used.
    pub fn new(p: u32, n: u32, modulus: Option<&[u32]>) -> Result<Self, FieldError> {
        Self::build(p, n, modulus, &BuildOptions::default())
    }

    pub fn build(
        p: u32,
        n: u32,
        modulus: Option<&[u32]>,
        opts: &BuildOptions<'_>,
    ) -> Result<Self, FieldError> {
        if !arith::is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = match arith::checked_pow(p as u64, n) {
            Some(q) if q <= opts.cap && q <= u32::MAX as u64 / 2 => q as u32,
            _ => return Err(FieldError::TooLarge { p, n, cap: opts.cap }),
        };
        let modulus = match modulus {
            Some(m) => m.to_vec(),
            None => opts
                .database
                .get(p, n)
                .ok_or(FieldError::DatabaseMiss { p, n })?
                .to_vec(),
        };
        if modulus.len() != n as usize + 1 {
            return Err(FieldError::DegreeMismatch {
                expected: n,
                got: modulus.len().saturating_sub(1),
            });
        }
        if !check_irreducible(&modulus, p)? {
            return Err(FieldError::Reducible { p, modulus });
        }

        let zp = Zp::new(p);
        let order = (q - 1) as u64;
        let cofactors: Vec<u64> = arith::prime_divisors(order).into_iter().map(|l| order / l).collect();
        let to_digits = |code: u32| -> Vec<u32> {
            poly::trim((0..n).map(|i| (code / p.pow(i)) % p).collect())
        };
        // Candidates 2, 3, ... by code; GF(2) has the trivial group, generated by 1.
        let generator = if q == 2 {
            1
        } else {
            (2..q)
                .find(|&g| {
                    let gd = to_digits(g);
                    cofactors
                        .iter()
                        .all(|&e| poly::pow_mod(&gd, e, &modulus, zp) != [1])
                })
                .expect("the multiplicative group of a field is cyclic")
        };

        let (exp, log) = build_tables(p, n, q, &to_digits(generator), &modulus, zp);
        Ok(Field {
            spec: FieldSpec { p, n, modulus },
            q,
            generator: Element(generator),
            log,
            exp,
            digits: DigitOps::new(p, n),
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    /// Field order p^n.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn generator(&self) -> Element {
        self.generator
    }

    pub fn element(&self, code: u64) -> Result<Element, FieldError> {
        if code < self.q as u64 {
            Ok(Element(code as u32))
        } else {
            Err(FieldError::OutOfRange { code, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.q).map(Element)
    }

    pub fn minus_one(&self) -> Element {
        self.neg(Element::ONE)
    }

    /// Image of an integer in the prime subfield (so `4` is `1+1+1+1`).
    pub fn from_int(&self, v: i64) -> Element {
        Element(v.rem_euclid(self.spec.p as i64) as u32)
    }

    /// Base-p coefficients of `x`, constant term first, always `n` long.
    pub fn coefficients(&self, x: Element) -> Vec<u32> {
        let p = self.spec.p;
        (0..self.spec.n).map(|i| (x.0 / p.pow(i)) % p).collect()
    }

    #[inline]
    pub fn add(&self, x: Element, y: Element) -> Element {
        debug_assert!(x.0 < self.q && y.0 < self.q);
        Element(self.digits.add(x.0, y.0))
    }

    #[inline]
    pub fn neg(&self, x: Element) -> Element {
        debug_assert!(x.0 < self.q);
        Element(self.digits.neg(x.0))
    }

    #[inline]
    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        if x.0 == 0 || y.0 == 0 {
            return Element::ZERO;
        }
        Element(self.exp[(self.log[x.0 as usize] + self.log[y.0 as usize]) as usize])
    }

    pub fn inv(&self, x: Element) -> Result<Element, FieldError> {
        if x.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Element(self.exp[(self.q - 1 - self.log[x.0 as usize]) as usize]))
    }

    pub fn div(&self, x: Element, y: Element) -> Result<Element, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^d`, with `0^0 = 1` and `0^d = 0` for `d >= 1`.
    #[inline]
    pub fn pow(&self, x: Element, d: u64) -> Element {
        if x.0 == 0 {
            return if d == 0 { Element::ONE } else { Element::ZERO };
        }
        let order = (self.q - 1) as u64;
        let e = (self.log[x.0 as usize] as u64 * (d % order)) % order;
        Element(self.exp[e as usize])
    }

    /// Discrete log to the base of the generator; `None` for zero.
    #[inline]
    pub fn log(&self, x: Element) -> Option<u32> {
        match self.log[x.0 as usize] {
            NO_LOG => None,
            l => Some(l),
        }
    }

    /// `generator^k` for any `k`.
    pub fn exp(&self, k: u64) -> Element {
        Element(self.exp[(k % (self.q - 1) as u64) as usize])
    }
}

fn build_tables(p: u32, n: u32, q: u32, g: &[u32], modulus: &[u32], zp: Zp) -> (Vec<u32>, Vec<u32>) {
    let order = (q - 1) as usize;
    let pack = |ds: &[u32]| ds.iter().rev().fold(0u32, |acc, &d| acc * p + d);
    let mut exp = vec![0u32; 2 * order];
    let mut log = vec![NO_LOG; q as usize];
    let mut cur: Vec<u32> = vec![1];
    for (i, slot) in exp.iter_mut().take(order).enumerate() {
        let code = pack(&cur);
        assert_eq!(log[code as usize], NO_LOG, "generator order below q-1");
        *slot = code;
        log[code as usize] = i as u32;
        cur = mul_small(&cur, g, modulus, n as usize, zp);
    }
    assert_eq!(cur, [1], "generator order is not q-1");
    exp.copy_within(0..order, order);
    debug_assert!(log[1..].iter().all(|&l| l != NO_LOG));
    (exp, log)
}

/// `a * g mod m` as a sum of shifted copies of `a`; cheap when `g` has low degree.
fn mul_small(a: &[u32], g: &[u32], modulus: &[u32], n: usize, zp: Zp) -> Vec<u32> {
    let mut shifted = a.to_vec();
    let mut acc = vec![0u32; n];
    for (i, &gc) in g.iter().enumerate() {
        if gc != 0 {
            for (slot, &c) in acc.iter_mut().zip(&shifted) {
                *slot = zp.add(*slot, zp.mul(c, gc));
            }
        }
        if i + 1 < g.len() {
            shifted.insert(0, 0);
            if shifted.len() > n {
                shifted = poly::rem_monic(&shifted, modulus, zp);
            }
        }
    }
    poly::trim(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Reference product: schoolbook multiplication of coefficient vectors,
    /// reduced by the modulus, with no tables involved.
    fn naive_mul(f: &Field, x: Element, y: Element) -> Element {
        let zp = Zp::new(f.p());
        let prod = poly::mul_mod(
            &poly::trim(f.coefficients(x)),
            &poly::trim(f.coefficients(y)),
            &f.spec().modulus,
            zp,
        );
        Element(prod.iter().rev().fold(0, |acc, &d| acc * f.p() + d))
    }

    #[test]
    fn gf3_prime_field() {
        let f = Field::new(3, 1, None).unwrap();
        assert_eq!(f.q(), 3);
        assert_eq!(f.generator(), Element(2));
        assert_eq!(f.add(Element(2), Element(2)), Element(1));
        assert_eq!(f.minus_one(), Element(2));
    }

    #[test]
    fn gf9_with_x2_plus_1() {
        let f = Field::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f.q(), 9);
        let x = Element(3);
        let x_plus_1 = Element(4);
        // x + (x + 1) = 2x + 1
        assert_eq!(f.add(x, x_plus_1), Element(2 * 3 + 1));
        // x * x = -1
        assert_eq!(f.mul(x, x), Element(2));
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), naive_mul(&f, a, b));
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(
            Field::new(3, 2, Some(&[2, 0, 1])).unwrap_err(),
            FieldError::Reducible { p: 3, modulus: vec![2, 0, 1] }
        );
    }

    #[test]
    fn build_errors() {
        assert_eq!(Field::new(4, 2, None).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(3, 0, None).unwrap_err(), FieldError::ZeroDegree);
        assert_eq!(Field::new(11, 3, None).unwrap_err(), FieldError::DatabaseMiss { p: 11, n: 3 });
        assert!(matches!(Field::new(3, 17, None), Err(FieldError::TooLarge { .. })));
        assert!(matches!(
            Field::new(3, 2, Some(&[1, 1])),
            Err(FieldError::DegreeMismatch { expected: 2, got: 1 })
        ));
        let small = BuildOptions { cap: 100, ..BuildOptions::default() };
        assert!(matches!(Field::build(3, 5, None, &small), Err(FieldError::TooLarge { .. })));
        let f = Field::new(3, 2, None).unwrap();
        assert_eq!(f.element(9), Err(FieldError::OutOfRange { code: 9, q: 9 }));
        assert_eq!(f.inv(Element::ZERO), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn user_modulus_outside_database() {
        // x^3 + x + 4 over GF(11) has no root.
        let f = Field::new(11, 3, Some(&[4, 1, 0, 1])).unwrap();
        assert_eq!(f.q(), 1331);
        let g = f.generator();
        assert_eq!(f.pow(g, 1330), Element::ONE);
    }

    #[test]
    fn tables_round_trip_and_generator_order() {
        for (p, n) in [(2, 1), (2, 8), (3, 1), (3, 5), (3, 7), (5, 4), (7, 3)] {
            let f = Field::new(p, n, None).unwrap();
            let order = f.q() - 1;
            for code in 1..f.q() {
                let x = Element(code);
                let l = f.log(x).unwrap();
                assert!(l < order);
                assert_eq!(f.exp(l as u64), x);
            }
            for i in 0..2 * order as u64 {
                assert_eq!(f.log(f.exp(i)).unwrap() as u64, i % order as u64);
            }
            assert_eq!(f.log(Element::ZERO), None);
            let g = f.generator();
            for l in crate::arith::prime_divisors(order as u64) {
                assert_ne!(f.pow(g, order as u64 / l), Element::ONE);
            }
        }
    }

    #[test]
    fn products_match_schoolbook_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, n) in [(2, 10), (3, 6), (5, 5), (7, 4)] {
            let f = Field::new(p, n, None).unwrap();
            for _ in 0..2000 {
                let a = Element(rng.gen_range(0..f.q()));
                let b = Element(rng.gen_range(0..f.q()));
                assert_eq!(f.mul(a, b), naive_mul(&f, a, b));
            }
        }
    }

    #[test]
    fn field_axioms_on_sampled_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, n) in [(2, 5), (3, 5), (3, 9), (5, 3), (7, 2)] {
            let f = Field::new(p, n, None).unwrap();
            for _ in 0..10_000 {
                let [a, b, c] = [0; 3].map(|_| Element(rng.gen_range(0..f.q())));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, Element::ZERO), a);
                assert_eq!(f.mul(a, Element::ONE), a);
                assert_eq!(f.mul(a, Element::ZERO), Element::ZERO);
                assert_eq!(f.add(a, f.neg(a)), Element::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Element::ONE);
                }
                // Frobenius is additive.
                let pp = p as u64;
                assert_eq!(f.pow(f.add(a, b), pp), f.add(f.pow(a, pp), f.pow(b, pp)));
            }
        }
    }

    #[test]
    fn pow_conventions() {
        let f = Field::new(3, 4, None).unwrap();
        assert_eq!(f.pow(Element::ZERO, 0), Element::ONE);
        assert_eq!(f.pow(Element::ZERO, 5), Element::ZERO);
        for x in f.elements().skip(1) {
            assert_eq!(f.pow(x, (f.q() - 1) as u64), Element::ONE);
            assert_eq!(f.pow(x, 0), Element::ONE);
        }
    }

    #[test]
    fn power_13_permutes_gf3_5() {
        assert_eq!(crate::arith::gcd(13, 242), 1);
        let f = Field::new(3, 5, None).unwrap();
        let mut seen = vec![false; f.q() as usize];
        for x in f.elements() {
            seen[f.pow(x, 13).code() as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn roots_of_unity_count_is_gcd() {
        for n in 1..=7 {
            let f = Field::new(3, n, None).unwrap();
            let order = (f.q() - 1) as u64;
            for d in 0..=order + 2 {
                let ones = f.elements().skip(1).filter(|&x| f.pow(x, d) == Element::ONE).count();
                assert_eq!(ones as u64, crate::arith::gcd(d, order), "n={n} d={d}");
            }
        }
    }
}
