use sgforge::ideal::dual;
use sgforge::search::{bg_bounds, enumerate_by_genus, min_selfdual_ideal_colength, LowerReason};
use sgforge::NumericalSemigroup;

/// Counts per genus from an independent gap-set enumeration.
const COUNTS: [u64; 11] = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204];

/// Gap sets of size `g` inside `[1, 2g - 1]` whose complement is additively
/// closed.
fn brute_force_count(g: u32) -> u64 {
    if g == 0 {
        return 1;
    }
    let top = 2 * g - 1;
    let mut n = 0;
    for mask in 0u64..(1 << top) {
        if mask.count_ones() != g {
            continue;
        }
        let gap = |z: u32| z >= 1 && z <= top && mask >> (z - 1) & 1 == 1;
        let closed = (1..=top)
            .filter(|&a| !gap(a))
            .all(|a| (1..=top).filter(|&b| !gap(b)).all(|b| !gap(a + b)));
        if closed {
            n += 1;
        }
    }
    n
}

#[test]
fn counts_match_gap_set_oracle() {
    let stats = enumerate_by_genus(8, |_| {});
    let oracle: Vec<u64> = (0..=8).map(brute_force_count).collect();
    assert_eq!(stats.counts, oracle);
    assert_eq!(&stats.counts[..], &COUNTS[..9]);
}

#[test]
fn counts_to_genus_ten() {
    assert_eq!(enumerate_by_genus(10, |_| {}).counts, COUNTS);
}

#[test]
fn parent_relation_is_consistent() {
    enumerate_by_genus(10, |node| {
        let h = &node.semigroup;
        assert_eq!(h.genus() as usize, node.depth());
        if let Some(a) = node.removed() {
            assert_eq!(a, h.frobenius());
            let parent = h.with_elements(&[a]).unwrap();
            assert_eq!(parent.genus() + 1, h.genus());
            assert_eq!(parent.remove_minimal_generator(a).unwrap(), *h);
        }
    });
}

#[test]
fn enumeration_is_unique() {
    let mut seen = std::collections::HashSet::new();
    enumerate_by_genus(10, |node| assert!(seen.insert(node.semigroup.gaps())));
}

#[test]
fn bg_interval_sound_to_genus_fourteen() {
    enumerate_by_genus(14, |node| {
        let h = &node.semigroup;
        let b = bg_bounds(h, Some(2));
        assert!(b.lower <= b.upper, "{h}: {b:?}");
        assert!(b.upper <= h.n_of_h(), "{h}: {b:?}");
        match b.lower_reason {
            LowerReason::Symmetric => assert_eq!((b.lower, b.upper), (0, 0)),
            LowerReason::Uesy => assert_eq!((b.lower, b.upper), (1, 1)),
            LowerReason::NotUesy => assert!(b.lower >= 2),
        }
    });
}

#[test]
fn selfdual_scan_is_monotone_and_certified() {
    enumerate_by_genus(9, |node| {
        let h: &NumericalSemigroup = &node.semigroup;
        let mut prev: Option<u32> = None;
        for bound in 0..=h.n_of_h() {
            let found = min_selfdual_ideal_colength(h, bound);
            if let Some(p) = prev {
                assert_eq!(
                    found.as_ref().map(|s| s.colength),
                    Some(p),
                    "{h} bound {bound}"
                );
            }
            if let Some(s) = &found {
                assert_eq!(s.ideal.is_isomorphic(&dual(h, &s.ideal)), Some(s.shift));
                prev = Some(s.colength);
            }
        }
        assert!(prev.is_some(), "{h}: conductor ideal should be self-dual");
    });
}
