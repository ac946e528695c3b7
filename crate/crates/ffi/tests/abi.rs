use std::ffi::{CStr, CString};
use std::ptr;

use sgforge_ffi::*;

fn parse(s: &str) -> *mut SgfSemigroup {
    let text = CString::new(s).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { sgf_semigroup_parse(text.as_ptr(), &mut h) },
        SgfStatus::Ok
    );
    h
}

fn last_error() -> String {
    let p = sgf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn invariants_and_membership() {
    let gens = [5, 7];
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(
            sgf_semigroup_new(gens.as_ptr(), gens.len(), &mut h),
            SgfStatus::Ok
        );
        let mut inv = SgfInvariants::default();
        assert_eq!(sgf_semigroup_invariants(h, &mut inv), SgfStatus::Ok);
        assert_eq!(inv.frobenius, 23);
        assert_eq!(inv.genus, 12);
        assert_eq!(inv.multiplicity, 5);
        assert_eq!(inv.semigroup_type, 1);
        let mut member = true;
        assert_eq!(sgf_semigroup_contains(h, 23, &mut member), SgfStatus::Ok);
        assert!(!member);
        assert_eq!(sgf_semigroup_contains(h, 24, &mut member), SgfStatus::Ok);
        assert!(member);
        sgf_semigroup_free(h);
    }
}

#[test]
fn buffers_report_required_length() {
    let h = parse("4,5,7");
    unsafe {
        let mut buf = [0i32; 2];
        let mut len = 0;
        assert_eq!(
            sgf_semigroup_generators(h, buf.as_mut_ptr(), buf.len(), &mut len),
            SgfStatus::BufferTooSmall
        );
        assert_eq!(len, 3);
        let mut buf = [0i32; 8];
        assert_eq!(
            sgf_semigroup_generators(h, buf.as_mut_ptr(), buf.len(), &mut len),
            SgfStatus::Ok
        );
        assert_eq!(&buf[..len], &[4, 5, 7]);
        assert_eq!(
            sgf_semigroup_pseudo_frobenius(h, buf.as_mut_ptr(), buf.len(), &mut len),
            SgfStatus::Ok
        );
        assert_eq!(&buf[..len], &[3, 6]);
        sgf_semigroup_free(h);
    }
}

#[test]
fn predicates_and_bounds() {
    let h = parse("4,5,11");
    unsafe {
        let mut p = SgfPredicates::default();
        assert_eq!(sgf_semigroup_predicates(h, &mut p), SgfStatus::Ok);
        assert!(p.uesy && p.self_dual_max && p.nearly_gorenstein);
        assert!(!p.symmetric && !p.almost_symmetric && !p.min_mult);
        sgf_semigroup_free(h);
    }
    let h = parse("3,4,5");
    unsafe {
        let (mut lo, mut hi) = (9, 9);
        assert_eq!(
            sgf_semigroup_bg_bounds(h, 0, &mut lo, &mut hi),
            SgfStatus::Ok
        );
        assert_eq!((lo, hi), (1, 1));
        sgf_semigroup_free(h);
    }
}

#[test]
fn classify_json_round_trip() {
    let h = parse("<5,6,7>");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sgf_semigroup_classify_json(h, &mut s), SgfStatus::Ok);
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["nearly_gorenstein"], true);
        assert_eq!(v["endo_type"], 4);
        assert_eq!(v["self_dual_max"], false);
        sgf_string_free(s);
        sgf_semigroup_free(h);
    }
}

#[test]
fn counts_and_verify() {
    unsafe {
        let mut buf = [0u64; 9];
        let mut len = 0;
        assert_eq!(
            sgf_counts_by_genus(8, buf.as_mut_ptr(), 4, &mut len),
            SgfStatus::BufferTooSmall
        );
        assert_eq!(len, 9);
        assert_eq!(
            sgf_counts_by_genus(8, buf.as_mut_ptr(), buf.len(), &mut len),
            SgfStatus::Ok
        );
        assert_eq!(buf, [1, 1, 2, 4, 7, 12, 23, 39, 67]);

        let id = CString::new("uesy-self-dual").unwrap();
        let mut pass = false;
        let mut report = ptr::null_mut();
        assert_eq!(
            sgf_verify(id.as_ptr(), 6, &mut pass, &mut report),
            SgfStatus::Ok
        );
        assert!(pass);
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(report).to_str().unwrap()).unwrap();
        assert_eq!(v["tested"], 1 + 1 + 2 + 4 + 7 + 12 + 23);
        sgf_string_free(report);

        let bogus = CString::new("no-such-check").unwrap();
        assert_eq!(
            sgf_verify(bogus.as_ptr(), 3, &mut pass, ptr::null_mut()),
            SgfStatus::UnknownTheorem
        );
        assert!(last_error().contains("no-such-check"));
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let gens = [4, 6];
        let mut h = ptr::null_mut();
        assert_eq!(
            sgf_semigroup_new(gens.as_ptr(), gens.len(), &mut h),
            SgfStatus::InvalidArgument
        );
        assert!(h.is_null());
        assert!(last_error().contains("gcd"));

        let text = CString::new("4,x").unwrap();
        assert_eq!(
            sgf_semigroup_parse(text.as_ptr(), &mut h),
            SgfStatus::InvalidArgument
        );
        assert_eq!(
            sgf_semigroup_parse(ptr::null(), &mut h),
            SgfStatus::NullPointer
        );

        let mut inv = SgfInvariants::default();
        assert_eq!(
            sgf_semigroup_invariants(ptr::null(), &mut inv),
            SgfStatus::NullPointer
        );

        let ok = parse("3,5");
        assert_eq!(sgf_semigroup_invariants(ok, &mut inv), SgfStatus::Ok);
        assert!(sgf_last_error().is_null());
        sgf_semigroup_free(ok);
        sgf_semigroup_free(ptr::null_mut());
        sgf_string_free(ptr::null_mut());
    }
}
