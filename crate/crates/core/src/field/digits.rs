//! Digit-wise addition and negation on packed base-p codes.
//!
//! A code packs the coefficient vector of a residue polynomial as base-p
//! digits. Addition in GF(p^n) is coefficient-wise addition mod p, which for
//! odd p is done a byte-sized chunk at a time: `base = p^k <= 256`, with a
//! `base x base` lookup table for the chunk sum and a `base` table for negation.

#[derive(Clone, Debug)]
enum Kind {
    /// p = 2: addition is XOR, negation is the identity.
    Xor,
    /// n = 1: plain modular arithmetic.
    Prime,
    /// Odd p with p^k <= 256 for some k >= 1.
    Chunked { base: u32 },
    /// Odd p > 256 with n >= 2; one digit at a time.
    Digits,
}

#[derive(Clone, Debug)]
pub(crate) struct DigitOps {
    p: u32,
    kind: Kind,
    add: Vec<u8>,
    neg: Vec<u8>,
}

impl DigitOps {
    pub(crate) fn new(p: u32, n: u32) -> Self {
        if p == 2 {
            return DigitOps { p, kind: Kind::Xor, add: Vec::new(), neg: Vec::new() };
        }
        if n == 1 {
            return DigitOps { p, kind: Kind::Prime, add: Vec::new(), neg: Vec::new() };
        }
        if p > 256 {
            return DigitOps { p, kind: Kind::Digits, add: Vec::new(), neg: Vec::new() };
        }
        let mut k = 1;
        while p.pow(k + 1) <= 256 {
            k += 1;
        }
        let base = p.pow(k);
        let digits = |v: u32| (0..k).map(move |i| (v / p.pow(i)) % p);
        let pack = |ds: &mut dyn Iterator<Item = u32>| {
            ds.enumerate().map(|(i, d)| d * p.pow(i as u32)).sum::<u32>()
        };
        let mut add = vec![0u8; (base * base) as usize];
        for x in 0..base {
            for y in 0..base {
                let mut it = digits(x).zip(digits(y)).map(|(a, b)| (a + b) % p);
                add[(x * base + y) as usize] = pack(&mut it) as u8;
            }
        }
        let neg = (0..base)
            .map(|x| pack(&mut digits(x).map(|a| (p - a) % p)) as u8)
            .collect();
        DigitOps { p, kind: Kind::Chunked { base }, add, neg }
    }

    #[inline]
    pub(crate) fn add(&self, x: u32, y: u32) -> u32 {
        match self.kind {
            Kind::Xor => x ^ y,
            Kind::Prime => {
                let s = x as u64 + y as u64;
                if s >= self.p as u64 {
                    (s - self.p as u64) as u32
                } else {
                    s as u32
                }
            }
            Kind::Chunked { base } => match base {
                243 => self.add_chunked::<243>(x, y),
                125 => self.add_chunked::<125>(x, y),
                49 => self.add_chunked::<49>(x, y),
                _ => self.add_chunked_dyn(base, x, y),
            },
            Kind::Digits => self.add_digits(x, y),
        }
    }

    #[inline]
    pub(crate) fn neg(&self, x: u32) -> u32 {
        match self.kind {
            Kind::Xor => x,
            Kind::Prime => {
                if x == 0 {
                    0
                } else {
                    self.p - x
                }
            }
            Kind::Chunked { base } => {
                let (mut x, mut r, mut scale) = (x, 0u32, 1u32);
                while x != 0 {
                    r += self.neg[(x % base) as usize] as u32 * scale;
                    x /= base;
                    scale = scale.wrapping_mul(base);
                }
                r
            }
            Kind::Digits => {
                let (mut x, mut r, mut scale) = (x, 0u32, 1u32);
                while x != 0 {
                    r += ((self.p - x % self.p) % self.p) * scale;
                    x /= self.p;
                    scale = scale.wrapping_mul(self.p);
                }
                r
            }
        }
    }

    #[inline]
    fn add_chunked<const B: u32>(&self, mut x: u32, mut y: u32) -> u32 {
        let (mut r, mut scale) = (0u32, 1u32);
        while (x | y) != 0 {
            r += self.add[((x % B) * B + y % B) as usize] as u32 * scale;
            x /= B;
            y /= B;
            scale = scale.wrapping_mul(B);
        }
        r
    }

    fn add_chunked_dyn(&self, base: u32, mut x: u32, mut y: u32) -> u32 {
        let (mut r, mut scale) = (0u32, 1u32);
        while (x | y) != 0 {
            r += self.add[((x % base) * base + y % base) as usize] as u32 * scale;
            x /= base;
            y /= base;
            scale = scale.wrapping_mul(base);
        }
        r
    }

    fn add_digits(&self, mut x: u32, mut y: u32) -> u32 {
        let p = self.p;
        let (mut r, mut scale) = (0u32, 1u32);
        while (x | y) != 0 {
            r += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale = scale.wrapping_mul(p);
        }
        r
    }
}
