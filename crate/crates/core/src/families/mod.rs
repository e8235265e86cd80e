//! Exponent families, the claim corpus and the verification harness.

pub mod corpus;
pub mod verify;

pub use corpus::{
    corpus, enumerate_c, family_exponent, lookup, templates, CCondition, ClaimEntry, ClaimId, ClaimKind, ClaimedValue,
    ExponentRule, FamilyError, Predicate,
};
pub use verify::{apn_crosscheck, verify_claim, Claimed, Verdict, VerificationReport, VerifyOptions};

/// Bundled claim manifest, one line per table row.
pub const MANIFEST: &str = include_str!("../../data/claims.txt");
