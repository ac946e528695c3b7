mod common;

use common::{pair, semigroup};
use proptest::prelude::*;
use sgforge::ideal::{canonical_ideal, dual};
use sgforge::RelativeIdeal;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn dual_is_an_involution((h, e, _c) in pair()) {
        prop_assert_eq!(dual(&h, &dual(&h, &e)), e);
    }

    #[test]
    fn dual_reverses_translation((h, e, c) in pair()) {
        prop_assert_eq!(dual(&h, &e.translate(c)), dual(&h, &e).translate(-c));
    }

    #[test]
    fn endomorphisms_of_maximal_ideal(h in semigroup()) {
        prop_assume!(!h.is_naturals());
        let m = RelativeIdeal::maximal(&h);
        prop_assert_eq!(m.quotient(&m), RelativeIdeal::whole(&h).quotient(&m));
    }

    #[test]
    fn canonical_ideal_is_self_dual(h in semigroup()) {
        let k = canonical_ideal(&h);
        prop_assert_eq!(dual(&h, &k), RelativeIdeal::whole(&h));
        prop_assert_eq!(dual(&h, &RelativeIdeal::whole(&h)), k);
    }
}
