mod common;

use cdiff::cdiff::{delta_row_histogram, uniformity_full, uniformity_power};
use cdiff::character::{chi, ChiValue};
use cdiff::{Element, Field, FunctionUnderTest};
use common::Naive;
use proptest::prelude::*;

fn pair(p: u32, n: u32) -> (Field, Naive) {
    // GF(13^2) is outside the bundled database: x^2 - 2, 2 being a nonresidue mod 13.
    let modulus: Option<&[u32]> = if p == 13 { Some(&[11, 0, 1]) } else { None };
    let f = Field::new(p, n, modulus).unwrap();
    let naive = Naive::new(p, &f.spec().modulus);
    (f, naive)
}

const FIELDS: [(u32, u32); 6] = [(2, 8), (3, 5), (3, 7), (5, 4), (7, 3), (13, 2)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn arithmetic_matches_naive(idx in 0..FIELDS.len(), x in any::<u32>(), y in any::<u32>(), e in 0u64..100_000) {
        let (p, n) = FIELDS[idx];
        let (f, naive) = pair(p, n);
        let (x, y) = (x % f.q(), y % f.q());
        let (ex, ey) = (Element::from_code(x), Element::from_code(y));
        prop_assert_eq!(f.add(ex, ey).code() as u64, naive.add(x as u64, y as u64));
        prop_assert_eq!(f.sub(ex, ey).code() as u64, naive.sub(x as u64, y as u64));
        prop_assert_eq!(f.mul(ex, ey).code() as u64, naive.mul(x as u64, y as u64));
        prop_assert_eq!(f.pow(ex, e).code() as u64, naive.pow(x as u64, e));
        if y != 0 {
            let quotient = f.div(ex, ey).unwrap();
            prop_assert_eq!(naive.mul(quotient.code() as u64, y as u64), x as u64);
        }
    }

    #[test]
    fn derivative_counts_match_naive(d in 1u64..300, c in 0u32..27, a in 0u32..27) {
        let (f, naive) = pair(3, 3);
        let func = FunctionUnderTest::power(d).unwrap();
        let s = delta_row_histogram(&f, &func, Element::from_code(a), Element::from_code(c));
        let mut counts = vec![0u32; 27];
        for x in 0..27u64 {
            let lhs = naive.pow(naive.add(x, a as u64), d);
            let b = naive.sub(lhs, naive.mul(c as u64, naive.pow(x, d)));
            counts[b as usize] += 1;
        }
        prop_assert_eq!(s.counts, counts);
    }

    #[test]
    fn chi_is_multiplicative(x in 1u32..2187, y in 1u32..2187) {
        let f = Field::new(3, 7, None).unwrap();
        let (ex, ey) = (Element::from_code(x), Element::from_code(y));
        let s = |v: Element| chi(&f, v).unwrap().sign().unwrap();
        prop_assert_eq!(s(ex) * s(ey), s(f.mul(ex, ey)));
    }
}

#[test]
fn full_uniformity_matches_naive_on_small_fields() {
    for (p, n) in [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        let (f, naive) = pair(p, n);
        let order = f.q() as u64 - 1;
        for d in 1..order.max(2) {
            let func = FunctionUnderTest::power(d).unwrap();
            for c in f.elements() {
                let want = naive.uniformity(&|x| naive.pow(x, d), c.code() as u64);
                assert_eq!(uniformity_full(&f, &func, c).value, want, "GF({p}^{n}) d={d} c={c}");
                if c != Element::ONE {
                    assert_eq!(uniformity_power(&f, d, c).unwrap().value, want, "GF({p}^{n}) d={d} c={c}");
                }
            }
        }
    }
}

#[test]
fn table_function_matches_naive() {
    let (f, naive) = pair(3, 2);
    // An arbitrary non-monomial map: x -> x^3 + x + 1.
    let g = |x: u64| naive.add(naive.add(naive.pow(x, 3), x), 1);
    let values: Vec<Element> = (0..9).map(|x| Element::from_code(g(x) as u32)).collect();
    let func = FunctionUnderTest::table(&f, values).unwrap();
    for c in f.elements() {
        assert_eq!(uniformity_full(&f, &func, c).value, naive.uniformity(&g, c.code() as u64));
    }
}

#[test]
fn chi_is_zero_only_at_zero() {
    let f = Field::new(5, 3, None).unwrap();
    assert_eq!(chi(&f, Element::ZERO), Ok(ChiValue::Zero));
    assert!(f.elements().skip(1).all(|x| chi(&f, x).unwrap() != ChiValue::Zero));
}
