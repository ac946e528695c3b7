//! C ABI for `sgforge`.
//!
//! Every fallible function returns an [`SgfStatus`]. On failure a message is
//! stored per thread and can be read with [`sgf_last_error`]. Strings handed
//! out by the library must be released with [`sgf_string_free`], semigroup
//! handles with [`sgf_semigroup_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sgforge::classify::{
    classify, is_almost_symmetric, is_nearly_gorenstein, is_uesy, max_ideal_self_dual,
    minimal_multiplicity,
};
use sgforge::search::{bg_bounds, enumerate_by_genus};
use sgforge::verify::{verify, TheoremId};
use sgforge::{Error, NumericalSemigroup};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SgfStatus {
    Ok = 0,
    NullPointer = 1,
    /// Bad generators, non-UTF-8 text or a parse failure.
    InvalidArgument = 2,
    /// The caller's buffer is too short; the required length was written.
    BufferTooSmall = 3,
    UnknownTheorem = 4,
    PreconditionFailed = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque semigroup handle.
pub struct SgfSemigroup(NumericalSemigroup);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SgfInvariants {
    pub multiplicity: i32,
    pub embedding_dim: u32,
    pub semigroup_type: u32,
    pub genus: u32,
    pub frobenius: i32,
    pub conductor: i32,
    pub n_of_h: u32,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SgfPredicates {
    pub symmetric: bool,
    pub uesy: bool,
    pub self_dual_max: bool,
    pub almost_symmetric: bool,
    pub nearly_gorenstein: bool,
    pub min_mult: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SgfStatus, msg: impl Into<String>) -> SgfStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> SgfStatus {
    let status = match e {
        Error::UnknownTheorem(_) => SgfStatus::UnknownTheorem,
        Error::PreconditionFailed(_) | Error::AlreadyFull => SgfStatus::PreconditionFailed,
        Error::InternalDisagreement(_) | Error::TheoremViolation(_) => SgfStatus::Internal,
        _ => SgfStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> SgfStatus) -> SgfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SgfStatus::Panic, "panic inside sgforge"),
    }
}

unsafe fn handle<'a>(h: *const SgfSemigroup) -> Result<&'a NumericalSemigroup, SgfStatus> {
    h.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(SgfStatus::NullPointer, "null semigroup handle"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, SgfStatus> {
    if s.is_null() {
        return Err(fail(SgfStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(SgfStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> SgfStatus {
    if out.is_null() {
        return fail(SgfStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    SgfStatus::Ok
}

unsafe fn copy_out<T: Copy>(src: &[T], buf: *mut T, cap: usize, len: *mut usize) -> SgfStatus {
    if len.is_null() {
        return fail(SgfStatus::NullPointer, "null length pointer");
    }
    len.write(src.len());
    if src.len() > cap {
        return fail(
            SgfStatus::BufferTooSmall,
            format!("need {} elements, buffer holds {cap}", src.len()),
        );
    }
    if !src.is_empty() {
        if buf.is_null() {
            return fail(SgfStatus::NullPointer, "null buffer");
        }
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    SgfStatus::Ok
}

unsafe fn string_out(out: *mut *mut c_char, s: String) -> SgfStatus {
    if out.is_null() {
        return fail(SgfStatus::NullPointer, "null output pointer");
    }
    let c = CString::new(s).expect("JSON has no interior nul");
    out.write(c.into_raw());
    SgfStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Builds the semigroup generated by `gens[0..len]`.
///
/// # Safety
/// `gens` must point to `len` readable integers and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_new(
    gens: *const i32,
    len: usize,
    out: *mut *mut SgfSemigroup,
) -> SgfStatus {
    guard(|| {
        if gens.is_null() && len > 0 {
            return fail(SgfStatus::NullPointer, "null generator array");
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(gens, len)
        };
        match NumericalSemigroup::from_generators(slice) {
            Ok(h) => write_out(out, Box::into_raw(Box::new(SgfSemigroup(h)))),
            Err(e) => from_error(e),
        }
    })
}

/// Parses `"4,5,7"` or `"<4,5,7>"`.
///
/// # Safety
/// `gens` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_parse(
    gens: *const c_char,
    out: *mut *mut SgfSemigroup,
) -> SgfStatus {
    guard(|| match tri!(text(gens)).parse::<NumericalSemigroup>() {
        Ok(h) => write_out(out, Box::into_raw(Box::new(SgfSemigroup(h)))),
        Err(e) => from_error(e),
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_free(h: *mut SgfSemigroup) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_invariants(
    h: *const SgfSemigroup,
    out: *mut SgfInvariants,
) -> SgfStatus {
    guard(|| {
        let c = tri!(handle(h)).core_invariants();
        write_out(
            out,
            SgfInvariants {
                multiplicity: c.multiplicity,
                embedding_dim: c.embedding_dim,
                semigroup_type: c.semigroup_type,
                genus: c.genus,
                frobenius: c.frobenius,
                conductor: c.conductor,
                n_of_h: c.n_of_h,
            },
        )
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_contains(
    h: *const SgfSemigroup,
    x: i32,
    out: *mut bool,
) -> SgfStatus {
    guard(|| write_out(out, tri!(handle(h)).contains(x)))
}

/// Copies the minimal generators into `buf`. `*len` receives the count
/// even when the buffer is too small.
///
/// # Safety
/// `buf` must hold `cap` integers; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_generators(
    h: *const SgfSemigroup,
    buf: *mut i32,
    cap: usize,
    len: *mut usize,
) -> SgfStatus {
    guard(|| copy_out(tri!(handle(h)).generators(), buf, cap, len))
}

/// Copies the pseudo-Frobenius numbers into `buf`, as for
/// [`sgf_semigroup_generators`].
///
/// # Safety
/// `buf` must hold `cap` integers; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_pseudo_frobenius(
    h: *const SgfSemigroup,
    buf: *mut i32,
    cap: usize,
    len: *mut usize,
) -> SgfStatus {
    guard(|| copy_out(&tri!(handle(h)).pseudo_frobenius(), buf, cap, len))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_predicates(
    h: *const SgfSemigroup,
    out: *mut SgfPredicates,
) -> SgfStatus {
    guard(|| {
        let h = tri!(handle(h));
        let preds = (|| -> Result<SgfPredicates, Error> {
            Ok(SgfPredicates {
                symmetric: h.is_symmetric(),
                uesy: is_uesy(h).is_some(),
                self_dual_max: max_ideal_self_dual(h)?,
                almost_symmetric: is_almost_symmetric(h),
                nearly_gorenstein: is_nearly_gorenstein(h),
                min_mult: minimal_multiplicity(h)?,
            })
        })();
        match preds {
            Ok(p) => write_out(out, p),
            Err(e) => from_error(e),
        }
    })
}

/// Full classification report as a JSON object. Free with
/// [`sgf_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_classify_json(
    h: *const SgfSemigroup,
    out: *mut *mut c_char,
) -> SgfStatus {
    guard(|| match classify(tri!(handle(h))) {
        Ok(r) => string_out(out, serde_json::to_string(&r).expect("report serializes")),
        Err(e) => from_error(e),
    })
}

/// Certified bounds on the Gorenstein colength. `bound = 0` selects the
/// default search limits.
///
/// # Safety
/// `h` must be a live handle; `lower` and `upper` writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_semigroup_bg_bounds(
    h: *const SgfSemigroup,
    bound: u32,
    lower: *mut u32,
    upper: *mut u32,
) -> SgfStatus {
    guard(|| {
        if lower.is_null() || upper.is_null() {
            return fail(SgfStatus::NullPointer, "null output pointer");
        }
        let b = bg_bounds(tri!(handle(h)), (bound > 0).then_some(bound));
        lower.write(b.lower);
        upper.write(b.upper);
        SgfStatus::Ok
    })
}

/// Runs one theorem check up to `genus`. `*pass` receives the verdict and,
/// if `report` is not null, the JSON outcome is stored there.
///
/// # Safety
/// `theorem` must be a nul-terminated string; `pass` writable; `report`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_verify(
    theorem: *const c_char,
    genus: u32,
    pass: *mut bool,
    report: *mut *mut c_char,
) -> SgfStatus {
    guard(|| {
        let id: TheoremId = match tri!(text(theorem)).parse() {
            Ok(id) => id,
            Err(e) => return from_error(e),
        };
        let outcome = match verify(id, genus, None) {
            Ok(o) => o,
            Err(e) => return from_error(e),
        };
        tri!(match write_out(pass, outcome.pass) {
            SgfStatus::Ok => Ok(()),
            s => Err(s),
        });
        if report.is_null() {
            SgfStatus::Ok
        } else {
            string_out(
                report,
                serde_json::to_string(&outcome).expect("outcome serializes"),
            )
        }
    })
}

/// Number of semigroups of each genus `0..=g_max`, written to
/// `buf[0..=g_max]`.
///
/// # Safety
/// `buf` must hold `cap` integers; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sgf_counts_by_genus(
    g_max: u32,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> SgfStatus {
    guard(|| {
        if !len.is_null() && cap < g_max as usize + 1 {
            len.write(g_max as usize + 1);
            return fail(
                SgfStatus::BufferTooSmall,
                format!("need {} entries", g_max + 1),
            );
        }
        let stats = enumerate_by_genus(g_max, |_| {});
        copy_out(&stats.counts, buf, cap, len)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sgf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sgf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
