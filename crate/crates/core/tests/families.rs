mod common;

use cdiff::arith::gcd;
use cdiff::families::{corpus, enumerate_c, lookup, verify_claim, Verdict, VerifyOptions};
use cdiff::Field;
use common::Naive;

/// Every computed value in a verification report, recomputed by direct
/// counting on small fields.
#[test]
fn reports_agree_with_naive_counting() {
    for (p, n) in [(2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 2)] {
        let f = Field::new(p, n, None).unwrap();
        let naive = Naive::new(p, &f.spec().modulus);
        for entry in corpus(n) {
            let r = verify_claim(&f, &entry, &VerifyOptions::default());
            if r.verdict == Verdict::NotApplicable {
                continue;
            }
            let d = r.d.unwrap();
            for (c, got) in r.c.iter().zip(&r.computed) {
                let want = naive.uniformity(&|x| naive.pow(x, d), c.code() as u64);
                assert_eq!(*got, want, "{} GF({p}^{n}) c={c}", entry.id);
            }
        }
    }
}

#[test]
fn gcd_side_conditions_hold_within_budget() {
    for n in (1..=13u32).filter(|n| n % 2 == 1) {
        let order = 3u64.pow(n) - 1;
        let g = |id: &str| gcd(lookup(id).unwrap().exponent(3, n).unwrap(), order);
        if n >= 3 {
            assert_eq!(g("F1"), if n % 4 == 1 { 1 } else { 2 }, "F1 n={n}");
        }
        assert!(g("F2") <= 2, "F2 n={n}");
        assert!(g("F4") <= 2, "F4 n={n}");
        let d6 = lookup("F6").unwrap().exponent(3, n).unwrap();
        assert_eq!(d6 % 2, 0);
        assert_eq!(g("F6"), 2, "F6 n={n}");
        if n % 4 == 3 {
            let d5 = lookup("F5").unwrap().exponent(3, n).unwrap();
            assert_eq!(d5 % 2, 0);
            assert_eq!(g("F5"), 2, "F5 n={n}");
        }
    }
}

/// F1's exponent is odd exactly when n = 1 (mod 4).
#[test]
fn f1_parity() {
    for n in (3..=13u32).filter(|n| n % 2 == 1) {
        let d = lookup("F1").unwrap().exponent(3, n).unwrap();
        assert_eq!(d % 2 == 1, n % 4 == 1, "n={n}");
    }
}

#[test]
fn family_bounds_small_degrees() {
    for n in [3, 5, 7] {
        let f = Field::new(3, n, None).unwrap();
        for id in ["F1", "F2", "F3", "F4", "F5", "F6"] {
            let e = lookup(id).unwrap();
            let r = verify_claim(&f, &e, &VerifyOptions::default());
            if e.applies(3, n) {
                assert_eq!(r.verdict, Verdict::Pass, "{id} n={n}");
                assert_eq!(r.c, vec![f.minus_one()]);
            } else {
                assert_eq!(r.verdict, Verdict::NotApplicable);
            }
        }
    }
}

#[test]
fn enumeration_matches_definitions_on_gf3_5() {
    use cdiff::character::{chi, ChiValue};
    let f = Field::new(3, 5, None).unwrap();
    let t16 = lookup("T16").unwrap();
    // q = 243 = 3 mod 4, so the row does not apply but the c set is still defined.
    assert!(!t16.applies(3, 5));
    let cs = enumerate_c(&f, &t16);
    for c in f.elements() {
        let expect = c != cdiff::Element::ONE
            && c != f.minus_one()
            && chi(&f, f.div(f.sub(cdiff::Element::ONE, c), f.add(cdiff::Element::ONE, c)).unwrap()).unwrap() == ChiValue::One;
        assert_eq!(cs.contains(&c), expect, "c={c}");
    }
}
