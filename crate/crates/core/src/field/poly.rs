//! Dense polynomials over the prime field GF(p).
//!
//! Coefficient vectors are stored constant term first and kept trimmed, so the
//! zero polynomial is the empty vector. These routines only run while a field
//! is being built (irreducibility test, generator search, table fill); every
//! per-element operation afterwards goes through the exp/log tables.

use super::FieldError;
use crate::arith;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Zp {
    p: u32,
}

impl Zp {
    pub(crate) fn new(p: u32) -> Self {
        Zp { p }
    }

    #[inline]
    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub(crate) fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn inv(self, a: u32) -> u32 {
        // a^(p-2) by Fermat; a != 0 is a caller invariant.
        let mut base = a as u64 % self.p as u64;
        let mut e = self.p as u64 - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }
}

pub(crate) fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn degree(v: &[u32]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo a monic `m`.
pub(crate) fn rem_monic(a: &[u32], m: &[u32], zp: Zp) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &mc) in m.iter().enumerate() {
            r[shift + i] = zp.sub(r[shift + i], zp.mul(lead, mc));
        }
        r = trim(r);
    }
    r
}

fn rem_general(a: &[u32], m: &[u32], zp: Zp) -> Vec<u32> {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = zp.inv(m[dm]);
    let mut r = trim(a.to_vec());
    while r.len() > dm {
        let factor = zp.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - dm;
        for (i, &mc) in m[..=dm].iter().enumerate() {
            r[shift + i] = zp.sub(r[shift + i], zp.mul(factor, mc));
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], zp: Zp) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        if ac == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            prod[i + j] = zp.add(prod[i + j], zp.mul(ac, bc));
        }
    }
    rem_monic(&prod, m, zp)
}

pub(crate) fn pow_mod(base: &[u32], mut e: u64, m: &[u32], zp: Zp) -> Vec<u32> {
    let mut acc = rem_monic(&[1], m, zp);
    let mut b = rem_monic(base, m, zp);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, zp);
        }
        e >>= 1;
        if e > 0 {
            b = mul_mod(&b, &b, m, zp);
        }
    }
    acc
}

fn gcd(a: &[u32], b: &[u32], zp: Zp) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem_general(&a, &b, zp);
        a = b;
        b = r;
    }
    a
}

/// Decides irreducibility of a monic polynomial over GF(p) (Ben-Or test:
/// `gcd(x^(p^k) - x, f) = 1` for every `k <= deg/2`).
pub fn check_irreducible(poly: &[u32], p: u32) -> Result<bool, FieldError> {
    if !arith::is_prime(p as u64) {
        return Err(FieldError::NotPrime(p as u64));
    }
    if poly.iter().any(|&c| c >= p) {
        return Err(FieldError::InvalidPolynomial(format!(
            "coefficients must lie in [0, {p})"
        )));
    }
    let deg = match degree(poly) {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(FieldError::InvalidPolynomial(
                "degree must be at least 1".into(),
            ))
        }
    };
    if poly.len() != deg + 1 || poly[deg] != 1 {
        return Err(FieldError::InvalidPolynomial(
            "polynomial must be monic".into(),
        ));
    }
    let zp = Zp::new(p);
    let x = [0, 1];
    let mut frob = rem_monic(&x, poly, zp);
    for _ in 1..=deg / 2 {
        frob = pow_mod(&frob, p as u64, poly, zp);
        let mut diff = frob.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = zp.sub(diff[1], 1);
        let g = gcd(&trim(diff), poly, zp);
        if degree(&g) != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}
