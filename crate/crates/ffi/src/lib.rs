//! C ABI for the crystarr library.
//!
//! All functions communicate through opaque handles and status codes.
//! Strings returned through `char**` out-parameters are allocated by
//! Rust and must be released with [`crystarr_string_free`]. On any
//! non-OK status, a human-readable message is available from
//! [`crystarr_last_error_message`] until the next failing call on the
//! same thread.

use crystarr::arrangement::{enumerate_chambers, ArrangementError, ChamberGraph, RootSet};
use crystarr::axioms::{arrangement_equivalence, check_additive, check_crystallographic};
use crystarr::io::{
    axiom_report_to_json, chamber_graph_to_json, root_set_from_json, scheme_to_json,
    verification_flags,
};
use crystarr::scheme::{
    build_scheme, is_connected, is_simply_connected, scheme_equivalence, verify_root_system,
    verify_scheme_axioms, CartanScheme,
};
use libc::c_char;
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrystarrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotSimplicial = 4,
    NotCrystallographic = 5,
    UnknownCatalogEntry = 6,
    OutOfRange = 7,
    InternalError = 8,
}

/// Opaque handle to a validated root set.
pub struct CrystarrArrangement {
    roots: RootSet,
}

/// Opaque handle to a built Cartan scheme.
pub struct CrystarrScheme {
    scheme: CartanScheme,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap();
    });
}

fn fail(status: CrystarrStatus, message: &str) -> CrystarrStatus {
    set_error(message);
    status
}

fn arrangement_status(err: &ArrangementError) -> CrystarrStatus {
    match err {
        ArrangementError::NotSimplicial { .. } => CrystarrStatus::NotSimplicial,
        _ => CrystarrStatus::InvalidInput,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, CrystarrStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(CrystarrStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        CrystarrStatus::InvalidUtf8
    })
}

fn graph_of(handle: &CrystarrArrangement) -> Result<ChamberGraph, CrystarrStatus> {
    enumerate_chambers(&handle.roots).map_err(|e| {
        set_error(&e.to_string());
        arrangement_status(&e)
    })
}

fn out_string(text: String, out: *mut *mut c_char) -> CrystarrStatus {
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            CrystarrStatus::Ok
        }
        Err(_) => fail(CrystarrStatus::InternalError, "output contained NUL"),
    }
}

/// Message for the most recent failure on this thread. Borrowed; do not
/// free. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn crystarr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parse a root set from the JSON schema
/// `{"rank": r, "positive_roots": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crystarr_arrangement_from_json(
    json: *const c_char,
    out: *mut *mut CrystarrArrangement,
) -> CrystarrStatus {
    if out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null out pointer");
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match root_set_from_json(text) {
        Ok(roots) => {
            *out = Box::into_raw(Box::new(CrystarrArrangement { roots }));
            CrystarrStatus::Ok
        }
        Err(e) => fail(CrystarrStatus::InvalidInput, &e.to_string()),
    }
}

/// Load a built-in catalog entry by name (e.g. "A2", "B3", "bad_2_1").
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crystarr_arrangement_from_catalog(
    name: *const c_char,
    out: *mut *mut CrystarrArrangement,
) -> CrystarrStatus {
    if out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null out pointer");
    }
    let name = match read_str(name) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match crystarr::catalog::lookup(name) {
        Ok(entry) => {
            *out = Box::into_raw(Box::new(CrystarrArrangement { roots: entry.roots }));
            CrystarrStatus::Ok
        }
        Err(e) => fail(CrystarrStatus::UnknownCatalogEntry, &e.to_string()),
    }
}

/// # Safety
/// `handle` must come from an arrangement constructor and not yet be freed.
#[no_mangle]
pub unsafe extern "C" fn crystarr_arrangement_free(handle: *mut CrystarrArrangement) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of chambers of the arrangement. Fails with `NotSimplicial`
/// when some chamber is not an open simplicial cone.
///
/// # Safety
/// `handle` must be a live arrangement handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_chamber_count(
    handle: *const CrystarrArrangement,
    out: *mut usize,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    match graph_of(&*handle) {
        Ok(graph) => {
            *out = graph.len();
            CrystarrStatus::Ok
        }
        Err(s) => s,
    }
}

/// Does the arrangement satisfy the crystallographic axiom?
///
/// # Safety
/// `handle` must be a live arrangement handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_is_crystallographic(
    handle: *const CrystarrArrangement,
    out: *mut bool,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    let roots = &(*handle).roots;
    let graph = match graph_of(&*handle) {
        Ok(g) => g,
        Err(s) => return s,
    };
    match check_crystallographic(roots, &graph) {
        Ok(report) => {
            *out = report.passed;
            CrystarrStatus::Ok
        }
        Err(e) => fail(CrystarrStatus::InternalError, &e.to_string()),
    }
}

/// Does the arrangement satisfy the additive axiom?
///
/// # Safety
/// `handle` must be a live arrangement handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_is_additive(
    handle: *const CrystarrArrangement,
    out: *mut bool,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    let roots = &(*handle).roots;
    let graph = match graph_of(&*handle) {
        Ok(g) => g,
        Err(s) => return s,
    };
    match check_additive(roots, &graph) {
        Ok(report) => {
            *out = report.passed;
            CrystarrStatus::Ok
        }
        Err(e) => fail(CrystarrStatus::InternalError, &e.to_string()),
    }
}

/// Chamber graph as a JSON document; free with `crystarr_string_free`.
///
/// # Safety
/// `handle` must be a live arrangement handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_chambers_json(
    handle: *const CrystarrArrangement,
    out: *mut *mut c_char,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    let roots = &(*handle).roots;
    let graph = match graph_of(&*handle) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let value = chamber_graph_to_json(roots, &graph);
    out_string(serde_json::to_string_pretty(&value).unwrap(), out)
}

/// Axiom reports (I) and (A) as a JSON document.
///
/// # Safety
/// `handle` must be a live arrangement handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_verify_json(
    handle: *const CrystarrArrangement,
    out: *mut *mut c_char,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    let roots = &(*handle).roots;
    let graph = match graph_of(&*handle) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let cryst = match check_crystallographic(roots, &graph) {
        Ok(r) => r,
        Err(e) => return fail(CrystarrStatus::InternalError, &e.to_string()),
    };
    let additive = match check_additive(roots, &graph) {
        Ok(r) => r,
        Err(e) => return fail(CrystarrStatus::InternalError, &e.to_string()),
    };
    let value = serde_json::json!({
        "crystallographic": axiom_report_to_json(&cryst),
        "additive": axiom_report_to_json(&additive),
        "passed": cryst.passed && additive.passed,
    });
    out_string(serde_json::to_string_pretty(&value).unwrap(), out)
}

/// Build the Cartan scheme anchored at `base_chamber`.
///
/// # Safety
/// `handle` must be a live arrangement handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_scheme_build(
    handle: *const CrystarrArrangement,
    base_chamber: usize,
    out: *mut *mut CrystarrScheme,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    let roots = &(*handle).roots;
    let graph = match graph_of(&*handle) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if base_chamber >= graph.len() {
        return fail(CrystarrStatus::OutOfRange, "base chamber id out of range");
    }
    match build_scheme(roots, &graph, base_chamber, None) {
        Ok(scheme) => {
            *out = Box::into_raw(Box::new(CrystarrScheme { scheme }));
            CrystarrStatus::Ok
        }
        Err(e) => fail(CrystarrStatus::NotCrystallographic, &e.to_string()),
    }
}

/// # Safety
/// `handle` must come from `crystarr_scheme_build` and not yet be freed.
#[no_mangle]
pub unsafe extern "C" fn crystarr_scheme_free(handle: *mut CrystarrScheme) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of objects of the Weyl groupoid.
///
/// # Safety
/// `handle` must be a live scheme handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_scheme_object_count(
    handle: *const CrystarrScheme,
    out: *mut usize,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    *out = (*handle).scheme.len();
    CrystarrStatus::Ok
}

/// Scheme dump with verification flags as a JSON document.
///
/// # Safety
/// `handle` must be a live scheme handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_scheme_json(
    handle: *const CrystarrScheme,
    out: *mut *mut c_char,
) -> CrystarrStatus {
    if handle.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    let scheme = &(*handle).scheme;
    let axioms = verify_scheme_axioms(scheme);
    let root_system = verify_root_system(scheme);
    let connected = is_connected(scheme);
    let (simply, _) = is_simply_connected(scheme);
    let flags = verification_flags(&axioms, &root_system, connected, simply);
    let value = scheme_to_json(scheme, &flags);
    out_string(serde_json::to_string_pretty(&value).unwrap(), out)
}

/// Are the two arrangements equivalent under a linear automorphism?
///
/// # Safety
/// Both handles must be live arrangement handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_arrangements_equivalent(
    a: *const CrystarrArrangement,
    b: *const CrystarrArrangement,
    out: *mut bool,
) -> CrystarrStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    match arrangement_equivalence(&(*a).roots, &(*b).roots) {
        Ok(psi) => {
            *out = psi.is_some();
            CrystarrStatus::Ok
        }
        Err(e) => fail(CrystarrStatus::InvalidInput, &e.to_string()),
    }
}

/// Are the two Cartan schemes equivalent?
///
/// # Safety
/// Both handles must be live scheme handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn crystarr_schemes_equivalent(
    a: *const CrystarrScheme,
    b: *const CrystarrScheme,
    out: *mut bool,
) -> CrystarrStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return fail(CrystarrStatus::NullPointer, "null argument");
    }
    *out = scheme_equivalence(&(*a).scheme, &(*b).scheme).is_some();
    CrystarrStatus::Ok
}

/// Release a string allocated by this library.
///
/// # Safety
/// `s` must have been returned through a `char**` out-parameter of this
/// library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn crystarr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// keeps the unused-field lint honest; handles are only ever used behind
// pointers
const _: () = {
    fn _assert_handles_used(a: &CrystarrArrangement, s: &CrystarrScheme) -> usize {
        a.roots.rank() + s.scheme.rank
    }
};
