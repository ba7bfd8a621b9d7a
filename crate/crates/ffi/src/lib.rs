//! C ABI over `tqft-epoly`.
//!
//! Every function returns a [`TqftStatus`]. Results come back through out
//! pointers, and objects are opaque handles released with the matching
//! `*_free`. After a failure, `tqft_last_error_message` describes it; the
//! message belongs to the calling thread and lives until its next failing call.
//! Strings handed out by the library are released with `tqft_string_free`.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tqft_epoly::finite_group::{self, PunctureSet};
use tqft_epoly::{Error, FiniteGroup, LaurentPoly, SurfaceSpec};

/// Status codes shared by all entry points.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TqftStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    InvalidGroup = 5,
    InvalidDatum = 6,
    NonExactDivision = 7,
    BudgetExceeded = 8,
    Panic = 9,
}

/// Opaque Laurent polynomial.
pub struct TqftPoly(LaurentPoly);

/// Opaque finite group.
pub struct TqftGroup(FiniteGroup);

/// Opaque tube datum.
pub struct TqftDatum(TqftDatumInner);

type TqftDatumInner = tqft_epoly::TqftDatum;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

fn status_of(e: &Error) -> TqftStatus {
    match e {
        Error::NonExactDivision(_) | Error::DivisionByZero => TqftStatus::NonExactDivision,
        Error::Parse { .. } => TqftStatus::Parse,
        Error::NotAGroup(_) | Error::GroupTooLarge { .. } | Error::NotConjugationClosed(_) => TqftStatus::InvalidGroup,
        Error::InvalidDatum(_) | Error::MissingIdentityTube | Error::UnknownPunctureLabel(_) => {
            TqftStatus::InvalidDatum
        }
        Error::BudgetExceeded { .. } => TqftStatus::BudgetExceeded,
        _ => TqftStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), (TqftStatus, String)>) -> TqftStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TqftStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TqftStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (TqftStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TqftStatus, String) {
    (TqftStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (TqftStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (TqftStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, (TqftStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], (TqftStatus, String)> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null(what))
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (TqftStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (TqftStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).map_err(|e| (TqftStatus::InvalidInput, e.to_string()))?.into_raw();
    Ok(())
}

/// Message for the most recent failure on this thread; empty if none.
#[no_mangle]
pub extern "C" fn tqft_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tqft_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `"q^3 - q^2"` or `"u^2*v - 3"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_poly_parse(text: *const c_char, out: *mut *mut TqftPoly) -> TqftStatus {
    guard(|| {
        let p: LaurentPoly = str_arg(text, "text")?.parse().map_err(lib_err)?;
        put(out, TqftPoly(p))
    })
}

/// Renders a polynomial, in q when possible unless `force_uv` is set.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_poly_to_string(p: *const TqftPoly, force_uv: bool, out: *mut *mut c_char) -> TqftStatus {
    guard(|| {
        let p = &ref_arg(p, "poly")?.0;
        put_string(out, if force_uv { p.to_uv_string() } else { p.to_q_string() })
    })
}

/// Exact quotient `a / b`; fails with `NonExactDivision` when `b` does not divide `a`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_poly_exact_div(
    a: *const TqftPoly,
    b: *const TqftPoly,
    out: *mut *mut TqftPoly,
) -> TqftStatus {
    guard(|| {
        let q = ref_arg(a, "a")?.0.exact_div(&ref_arg(b, "b")?.0).map_err(lib_err)?;
        put(out, TqftPoly(q))
    })
}

/// # Safety
/// `a`, `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn tqft_poly_equal(a: *const TqftPoly, b: *const TqftPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tqft_poly_free(p: *mut TqftPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Builds a group from a row-major `n × n` Cayley table.
///
/// # Safety
/// `table` must point to `n * n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_group_from_table(table: *const u32, n: usize, out: *mut *mut TqftGroup) -> TqftStatus {
    guard(|| {
        let len = n.checked_mul(n).ok_or((TqftStatus::InvalidInput, "table too large".to_string()))?;
        let flat = slice_arg(table, len, "table")?;
        let rows: Vec<Vec<usize>> = flat.chunks(n.max(1)).map(|r| r.iter().map(|&x| x as usize).collect()).collect();
        let g = FiniteGroup::from_cayley_table(&rows).map_err(lib_err)?;
        put(out, TqftGroup(g))
    })
}

/// Builds a group from the JSON group format (a table or permutation generators).
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_group_from_json(json: *const c_char, out: *mut *mut TqftGroup) -> TqftStatus {
    guard(|| {
        let g = FiniteGroup::from_json(str_arg(json, "json")?).map_err(lib_err)?;
        put(out, TqftGroup(g))
    })
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn tqft_group_order(g: *const TqftGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn tqft_group_class_count(g: *const TqftGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.conjugacy_classes().len())
}

/// # Safety
/// `g` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tqft_group_free(g: *mut TqftGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// The Aff(C) datum.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_datum_affc(out: *mut *mut TqftDatum) -> TqftStatus {
    guard(|| put(out, TqftDatum(tqft_epoly::affc::affc_datum())))
}

/// Finite-group datum with one puncture tube per listed representative.
///
/// Representatives use the group's input numbering; each tube is labelled
/// `rep=K`. With `reduce` the datum works on class functions.
///
/// # Safety
/// `g` must be a live handle; `reps` must point to `n_reps` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_datum_finite(
    g: *const TqftGroup,
    reps: *const usize,
    n_reps: usize,
    reduce: bool,
    out: *mut *mut TqftDatum,
) -> TqftStatus {
    guard(|| {
        let g = &ref_arg(g, "group")?.0;
        let mut sets = BTreeMap::new();
        for &r in slice_arg(reps, n_reps, "reps")? {
            let set = PunctureSet::Representative(r);
            sets.insert(set.label(), set.resolve(g).map_err(lib_err)?);
        }
        let d = if reduce { finite_group::to_class_datum(g, &sets) } else { finite_group::to_tqft_datum(g, &sets) }
            .map_err(lib_err)?;
        put(out, TqftDatum(d))
    })
}

/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_datum_from_json(json: *const c_char, out: *mut *mut TqftDatum) -> TqftStatus {
    guard(|| {
        let d = TqftDatumInner::from_json(str_arg(json, "json")?).map_err(lib_err)?;
        put(out, TqftDatum(d))
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_datum_to_json(d: *const TqftDatum, out: *mut *mut c_char) -> TqftStatus {
    guard(|| put_string(out, ref_arg(d, "datum")?.0.to_json()))
}

/// # Safety
/// `d` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tqft_datum_free(d: *mut TqftDatum) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// E-polynomial of the genus-`genus` surface with the given puncture labels, in order.
///
/// # Safety
/// `d` must be a live handle; `labels` must point to `n_labels` nul-terminated
/// strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_epoly(
    d: *const TqftDatum,
    genus: u32,
    labels: *const *const c_char,
    n_labels: usize,
    out: *mut *mut TqftPoly,
) -> TqftStatus {
    guard(|| {
        let d = &ref_arg(d, "datum")?.0;
        let labels = slice_arg(labels, n_labels, "labels")?
            .iter()
            .map(|&l| str_arg(l, "label"))
            .collect::<Result<Vec<_>, _>>()?;
        let e = d.epoly_rep_variety(&SurfaceSpec::new(genus, labels)).map_err(lib_err)?;
        put(out, TqftPoly(e))
    })
}

/// Counts representations by enumeration; punctures are given by representatives.
///
/// # Safety
/// `g` must be a live handle; `reps` must point to `n_reps` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tqft_brute_force_count(
    g: *const TqftGroup,
    genus: u32,
    reps: *const usize,
    n_reps: usize,
    budget: u64,
    out: *mut u64,
) -> TqftStatus {
    guard(|| {
        let g = &ref_arg(g, "group")?.0;
        let sets = slice_arg(reps, n_reps, "reps")?
            .iter()
            .map(|&r| PunctureSet::Representative(r).resolve(g))
            .collect::<Result<Vec<_>, _>>()
            .map_err(lib_err)?;
        let n = finite_group::brute_force_count(g, genus, &sets, u128::from(budget)).map_err(lib_err)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = n;
        Ok(())
    })
}
