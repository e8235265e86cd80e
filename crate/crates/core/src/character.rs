//! Quadratic character and absolute trace.

use serde::Serialize;
use thiserror::Error;

use crate::field::{Element, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("the quadratic character is undefined in characteristic 2")]
    EvenCharacteristic,
}

/// Value of the quadratic character. `Zero` marks the input 0, on which the
/// character is not defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChiValue {
    One,
    MinusOne,
    Zero,
}

impl ChiValue {
    /// `+1` / `-1` for nonzero inputs.
    pub fn sign(self) -> Option<i8> {
        match self {
            ChiValue::One => Some(1),
            ChiValue::MinusOne => Some(-1),
            ChiValue::Zero => None,
        }
    }
}

/// Quadratic character, read off the parity of the discrete log.
pub fn chi(field: &Field, x: Element) -> Result<ChiValue, CharacterError> {
    if field.p() == 2 {
        return Err(CharacterError::EvenCharacteristic);
    }
    Ok(match field.log(x) {
        None => ChiValue::Zero,
        Some(l) if l % 2 == 0 => ChiValue::One,
        Some(_) => ChiValue::MinusOne,
    })
}

/// Absolute trace `x + x^p + ... + x^(p^(n-1))`, returned as a prime-subfield
/// code in `[0, p)`.
pub fn trace(field: &Field, x: Element) -> u32 {
    let p = field.p() as u64;
    let order = (field.q() - 1) as u64;
    let mut acc = Element::ZERO;
    let mut e = 1u64;
    for _ in 0..field.n() {
        acc = field.add(acc, field.pow(x, e));
        e = e * p % order.max(1);
        if e == 0 {
            e = order;
        }
    }
    debug_assert!(acc.code() < field.p());
    acc.code()
}
