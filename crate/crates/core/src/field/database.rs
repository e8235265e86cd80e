//! Text database of modulus polynomials.
//!
//! One record per line: `p n c0 c1 ... cn`, coefficients constant term first.
//! Blank lines and anything after `#` are ignored.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use super::FieldError;

const BUNDLED: &str = include_str!("../../data/conway.txt");

#[derive(Clone, Debug, Default)]
pub struct PolyDatabase {
    records: BTreeMap<(u32, u32), Vec<u32>>,
}

impl PolyDatabase {
    /// The Conway polynomials shipped with the crate (p in {2, 3, 5, 7}).
    pub fn bundled() -> &'static PolyDatabase {
        static DB: OnceLock<PolyDatabase> = OnceLock::new();
        DB.get_or_init(|| PolyDatabase::parse(BUNDLED).expect("bundled database is well formed"))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, FieldError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| FieldError::Database(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, FieldError> {
        let mut records = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| FieldError::Database(format!("line {}: {msg}", lineno + 1));
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad("expected non-negative integers"))?;
            if nums.len() < 3 {
                return Err(bad("expected `p n c0 ... cn`"));
            }
            let (p, n) = (nums[0], nums[1]);
            let coeffs = nums[2..].to_vec();
            if coeffs.len() != n as usize + 1 {
                return Err(bad("coefficient count must be n + 1"));
            }
            if records.insert((p, n), coeffs).is_some() {
                return Err(bad("duplicate (p, n) record"));
            }
        }
        Ok(PolyDatabase { records })
    }

    pub fn get(&self, p: u32, n: u32) -> Option<&[u32]> {
        self.records.get(&(p, n)).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, &[u32])> {
        self.records.iter().map(|(&(p, n), c)| (p, n, c.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}
