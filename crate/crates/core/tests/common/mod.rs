//! Table-free reference arithmetic for cross-checking the library.
//!
//! Elements are digit vectors over GF(p) reduced by schoolbook long division;
//! nothing here touches exp/log tables, so agreement with `Field` is evidence
//! that the tables were built correctly.
#![allow(dead_code)]

use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct Naive {
    pub p: u64,
    pub n: usize,
    pub q: u64,
    modulus: Vec<u64>,
}

impl Naive {
    /// `modulus` is monic, constant term first.
    pub fn new(p: u32, modulus: &[u32]) -> Self {
        let n = modulus.len() - 1;
        Naive { p: p as u64, n, q: (p as u64).pow(n as u32), modulus: modulus.iter().map(|&c| c as u64).collect() }
    }

    fn digits(&self, code: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.n);
        let mut c = code;
        for _ in 0..self.n {
            v.push(c % self.p);
            c /= self.p;
        }
        v
    }

    fn code(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.digits(x), self.digits(y));
        let s: Vec<u64> = a.iter().zip(&b).map(|(u, v)| (u + v) % self.p).collect();
        self.code(&s)
    }

    pub fn neg(&self, x: u64) -> u64 {
        let s: Vec<u64> = self.digits(x).iter().map(|u| (self.p - u) % self.p).collect();
        self.code(&s)
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0u64; 2 * self.n];
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        // Reduce from the top using the monic modulus.
        for top in (self.n..prod.len()).rev() {
            let lead = prod[top];
            if lead == 0 {
                continue;
            }
            for (k, m) in self.modulus.iter().enumerate() {
                let idx = top - self.n + k;
                prod[idx] = (prod[idx] + self.p * self.p - lead * m % self.p) % self.p;
            }
        }
        self.code(&prod[..self.n])
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut b = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// `max_{a,b} #{x : f(x + a) - c f(x) = b}` by direct counting, with
    /// `a = 0` skipped when `c = 1`.
    pub fn uniformity(&self, f: &dyn Fn(u64) -> u64, c: u64) -> u32 {
        let values: Vec<u64> = (0..self.q).map(f).collect();
        let mut best = 0;
        for a in 0..self.q {
            if a == 0 && c == 1 {
                continue;
            }
            let mut counts: HashMap<u64, u32> = HashMap::new();
            for x in 0..self.q {
                let b = self.sub(values[self.add(x, a) as usize], self.mul(c, values[x as usize]));
                *counts.entry(b).or_default() += 1;
            }
            best = best.max(counts.values().copied().max().unwrap_or(0));
        }
        best
    }
}
