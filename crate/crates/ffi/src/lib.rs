//! C interface to `mldeg`.
//!
//! Inputs are parsed into opaque handles that the caller frees. Every call
//! returns an [`MldegStatus`]; on failure the message is available from
//! [`mldeg_last_error`] on the same thread. Integers leave the library as
//! `int64_t` and a value that does not fit yields `MLDEG_STATUS_OVERFLOW`.

use mldeg::arrangement::{self, Arrangement};
use mldeg::cli::{self, parse_arrangement, parse_laurent};
use mldeg::critical::{self, CountReport, CriticalError};
use mldeg::exactmath::BigInt;
use mldeg::newton::{self, HomogeneousPolynomial, LaurentPolynomial};
use num_traits::ToPrimitive;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MldegStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Overflow = 5,
    BufferTooSmall = 6,
    Uncertified = 7,
    Internal = 8,
}

pub struct MldegArrangement(Arrangement);
pub struct MldegLaurent(LaurentPolynomial);
pub struct MldegHomogeneous(HomogeneousPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(MldegStatus, String);

impl Failure {
    fn new(status: MldegStatus, msg: impl ToString) -> Self {
        Failure(status, msg.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Res<()>) -> MldegStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            MldegStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MldegStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Res<&'a str> {
    if s.is_null() {
        return Err(Failure::new(MldegStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure::new(MldegStatus::InvalidUtf8, e))
}

unsafe fn handle<'a, T>(h: *const T) -> Res<&'a T> {
    h.as_ref()
        .ok_or_else(|| Failure::new(MldegStatus::NullPointer, "null handle"))
}

unsafe fn store<T>(out: *mut T, value: T) -> Res<()> {
    if out.is_null() {
        return Err(Failure::new(
            MldegStatus::NullPointer,
            "null output pointer",
        ));
    }
    out.write(value);
    Ok(())
}

fn small(v: &BigInt) -> Res<i64> {
    v.to_i64().ok_or_else(|| {
        Failure::new(
            MldegStatus::Overflow,
            format!("{v} does not fit in 64 bits"),
        )
    })
}

/// Copies `values` into `buf`; `len` always receives the full length.
unsafe fn store_slice(values: &[BigInt], buf: *mut i64, cap: usize, len: *mut usize) -> Res<()> {
    store(len, values.len())?;
    if values.len() > cap {
        return Err(Failure::new(
            MldegStatus::BufferTooSmall,
            format!("need {} entries, have {cap}", values.len()),
        ));
    }
    if values.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Err(Failure::new(MldegStatus::NullPointer, "null buffer"));
    }
    let small: Vec<i64> = values.iter().map(small).collect::<Res<_>>()?;
    ptr::copy_nonoverlapping(small.as_ptr(), buf, small.len());
    Ok(())
}

fn domain(e: impl ToString) -> Failure {
    Failure::new(MldegStatus::Domain, e)
}

fn parse(e: impl ToString) -> Failure {
    Failure::new(MldegStatus::Parse, e)
}

/// Message for the last failing call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn mldeg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn mldeg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs the command line `argv[0..argc]` (without the program name) and
/// returns the JSON report in `*out`. `*exit_code` receives the CLI exit code.
///
/// # Safety
/// `argv` must point to `argc` valid C strings; `out` and `exit_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_report_json(
    argc: usize,
    argv: *const *const c_char,
    out: *mut *mut c_char,
    exit_code: *mut i32,
) -> MldegStatus {
    guard(|| {
        if argc > 0 && argv.is_null() {
            return Err(Failure::new(MldegStatus::NullPointer, "null argv"));
        }
        let mut args = vec!["mldeg".to_string(), "--json".to_string()];
        for i in 0..argc {
            args.push(text(*argv.add(i))?.to_string());
        }
        let outcome = cli::run(args);
        let body = if outcome.stdout.is_empty() {
            outcome.stderr
        } else {
            outcome.stdout
        };
        let s = CString::new(body).map_err(|e| Failure::new(MldegStatus::Internal, e))?;
        store(exit_code, outcome.code)?;
        store(out, s.into_raw())
    })
}

/// Parses a JSON arrangement `{"dim": r, "hyperplanes": [{"a": [...], "b": ...}]}`.
///
/// # Safety
/// `json` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_parse(
    json: *const c_char,
    out: *mut *mut MldegArrangement,
) -> MldegStatus {
    guard(|| {
        let a = parse_arrangement(text(json)?).map_err(parse)?;
        store(out, Box::into_raw(Box::new(MldegArrangement(a))))
    })
}

/// # Safety
/// `h` must come from `mldeg_arrangement_parse` or be null.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_free(h: *mut MldegArrangement) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `dim`, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_shape(
    h: *const MldegArrangement,
    dim: *mut usize,
    len: *mut usize,
) -> MldegStatus {
    guard(|| {
        let a = &handle(h)?.0;
        store(dim, a.dim())?;
        store(len, a.len())
    })
}

/// Coefficients of the characteristic polynomial, constant term first.
///
/// # Safety
/// `h` must be a live handle, `buf` must hold `cap` entries, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_char_poly(
    h: *const MldegArrangement,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> MldegStatus {
    guard(|| {
        store_slice(
            &arrangement::char_poly(&handle(h)?.0).coeffs(),
            buf,
            cap,
            len,
        )
    })
}

/// CSM vector `v_0, …, v_r` of an essential arrangement.
///
/// # Safety
/// As for `mldeg_arrangement_char_poly`.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_csm(
    h: *const MldegArrangement,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> MldegStatus {
    guard(|| {
        let v = arrangement::csm_vector_arrangement(&handle(h)?.0).map_err(domain)?;
        store_slice(v.values(), buf, cap, len)
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_ml_degree(
    h: *const MldegArrangement,
    out: *mut i64,
) -> MldegStatus {
    guard(|| {
        let d = arrangement::ml_degree_arrangement(&handle(h)?.0).map_err(domain)?;
        store(out, small(&d)?)
    })
}

/// Number of regions and of bounded regions of a real arrangement.
///
/// # Safety
/// `h` must be a live handle and both outputs writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_regions(
    h: *const MldegArrangement,
    regions: *mut i64,
    bounded: *mut i64,
) -> MldegStatus {
    guard(|| {
        let r = arrangement::region_counts(&handle(h)?.0);
        store(regions, small(&r.regions)?)?;
        store(bounded, small(&r.bounded)?)
    })
}

/// Points of the complement over the prime field `F_p`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_arrangement_count_fp(
    h: *const MldegArrangement,
    p: u64,
    out: *mut u64,
) -> MldegStatus {
    guard(|| {
        let n = arrangement::finite_field_complement_count(&handle(h)?.0, p).map_err(domain)?;
        store(out, n)
    })
}

fn certified(r: Result<CountReport, CriticalError>) -> Res<usize> {
    let r = r.map_err(domain)?;
    if !r.certified {
        return Err(Failure::new(
            MldegStatus::Uncertified,
            format!(
                "counts disagree or eliminant not squarefree: {:?}",
                r.counts
            ),
        ));
    }
    Ok(r.count)
}

/// Counts critical points of `Π f_i^(u_i)` on a line-arrangement complement.
///
/// # Safety
/// `h` must be a live handle, `u` must hold one exponent per line, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_critical_count_r2(
    h: *const MldegArrangement,
    u: *const i64,
    n: usize,
    seed: u64,
    out: *mut usize,
) -> MldegStatus {
    guard(|| {
        let a = &handle(h)?.0;
        if u.is_null() && n > 0 {
            return Err(Failure::new(MldegStatus::NullPointer, "null exponents"));
        }
        let u = if n == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(u, n)
        };
        store(out, certified(critical::critical_count_r2(a, u, seed))?)
    })
}

/// Parses a Laurent polynomial; `nvars = 0` infers the variable count.
///
/// # Safety
/// `s` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_laurent_parse(
    s: *const c_char,
    nvars: usize,
    out: *mut *mut MldegLaurent,
) -> MldegStatus {
    guard(|| {
        let p = parse_laurent(text(s)?, (nvars > 0).then_some(nvars)).map_err(parse)?;
        store(out, Box::into_raw(Box::new(MldegLaurent(p))))
    })
}

/// # Safety
/// `h` must come from `mldeg_laurent_parse` or be null.
#[no_mangle]
pub unsafe extern "C" fn mldeg_laurent_free(h: *mut MldegLaurent) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn hypersurface_csm(h: *const MldegLaurent) -> Res<mldeg::csm::CsmVector> {
    let g = &handle(h)?.0;
    let delta = g.newton_polytope().map_err(domain)?;
    newton::csm_hypersurface_vector(&delta, g.nvars()).map_err(domain)
}

/// CSM vector of a nondegenerate hypersurface in the torus, from its Newton polytope.
///
/// # Safety
/// `h` must be a live handle, `buf` must hold `cap` entries, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_laurent_csm(
    h: *const MldegLaurent,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> MldegStatus {
    guard(|| store_slice(hypersurface_csm(h)?.values(), buf, cap, len))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_laurent_ml_degree(
    h: *const MldegLaurent,
    out: *mut i64,
) -> MldegStatus {
    guard(|| store(out, small(hypersurface_csm(h)?.ml_degree())?))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_laurent_statistical_ml_degree(
    h: *const MldegLaurent,
    out: *mut i64,
) -> MldegStatus {
    guard(|| store(out, small(&hypersurface_csm(h)?.sum())?))
}

/// Counts critical points of `x^(u1) y^(u2)` on a plane curve in the torus.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_curve_critical_count(
    h: *const MldegLaurent,
    u1: i64,
    u2: i64,
    seed: u64,
    out: *mut usize,
) -> MldegStatus {
    guard(|| {
        let g = &handle(h)?.0;
        store(
            out,
            certified(critical::curve_critical_count(g, [u1, u2], seed))?,
        )
    })
}

/// Parses a homogeneous polynomial; `nvars = 0` infers the variable count.
///
/// # Safety
/// `s` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_homogeneous_parse(
    s: *const c_char,
    nvars: usize,
    out: *mut *mut MldegHomogeneous,
) -> MldegStatus {
    guard(|| {
        let p = parse_laurent(text(s)?, (nvars > 0).then_some(nvars)).map_err(parse)?;
        let h = HomogeneousPolynomial::from_laurent(p).map_err(domain)?;
        store(out, Box::into_raw(Box::new(MldegHomogeneous(h))))
    })
}

/// # Safety
/// `h` must come from `mldeg_homogeneous_parse` or be null.
#[no_mangle]
pub unsafe extern "C" fn mldeg_homogeneous_free(h: *mut MldegHomogeneous) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Milnor numbers `μ^0, …, μ^n`; the last is the degree of the gradient map.
///
/// # Safety
/// `h` must be a live handle, `buf` must hold `cap` entries, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_homogeneous_milnor(
    h: *const MldegHomogeneous,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> MldegStatus {
    guard(|| {
        let r = newton::gradient_degree(&handle(h)?.0).map_err(domain)?;
        store_slice(r.mu.values(), buf, cap, len)
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mldeg_homogeneous_gradient_degree(
    h: *const MldegHomogeneous,
    out: *mut i64,
) -> MldegStatus {
    guard(|| {
        let r = newton::gradient_degree(&handle(h)?.0).map_err(domain)?;
        store(out, small(&r.gradient_degree)?)
    })
}
