//! Shared strategies for property tests.

use proptest::prelude::*;
use sgforge::{NumericalSemigroup, RelativeIdeal};

fn gcd(a: i32, b: i32) -> i32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Semigroups of genus at most 12 from random generator lists.
pub fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i32..25, 1..5).prop_filter_map("gcd or genus", |mut gens| {
        gens.push(1 + gens.iter().copied().max().unwrap());
        if gens.iter().copied().fold(0, gcd) != 1 {
            return None;
        }
        let h = NumericalSemigroup::from_generators(&gens).ok()?;
        (h.genus() <= 12).then_some(h)
    })
}

/// A semigroup with a translated monomial ideal given by up to four
/// elements of `H`.
pub fn pair() -> impl Strategy<Value = (NumericalSemigroup, RelativeIdeal, i32)> {
    semigroup().prop_flat_map(|h| {
        let elements = h.small_elements();
        let pick = prop::sample::select(
            elements
                .into_iter()
                .chain([h.conductor(), h.conductor() + 1])
                .collect::<Vec<_>>(),
        );
        (
            Just(h),
            prop::collection::vec(pick, 1..5),
            -15i32..15,
            -15i32..15,
        )
            .prop_map(|(h, gens, shift, c)| {
                let e = RelativeIdeal::from_generators(&h, &gens)
                    .unwrap()
                    .translate(shift);
                (h, e, c)
            })
    })
}
