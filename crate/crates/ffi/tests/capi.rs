//! Exercises the C ABI from Rust exactly as a foreign caller would:
//! through pointers, status codes, and JSON strings.

use crystarr_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn from_catalog(name: &str) -> *mut CrystarrArrangement {
    let name = CString::new(name).unwrap();
    let mut handle: *mut CrystarrArrangement = ptr::null_mut();
    let status = unsafe { crystarr_arrangement_from_catalog(name.as_ptr(), &mut handle) };
    assert_eq!(status, CrystarrStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(s: *mut libc::c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { crystarr_string_free(s) };
    text
}

#[test]
fn parse_json_and_count_chambers() {
    let json = CString::new(r#"{"rank": 2, "positive_roots": [[1,0],[0,1],[1,1]]}"#).unwrap();
    let mut handle: *mut CrystarrArrangement = ptr::null_mut();
    let status = unsafe { crystarr_arrangement_from_json(json.as_ptr(), &mut handle) };
    assert_eq!(status, CrystarrStatus::Ok);
    let mut count = 0usize;
    assert_eq!(
        unsafe { crystarr_chamber_count(handle, &mut count) },
        CrystarrStatus::Ok
    );
    assert_eq!(count, 6);
    unsafe { crystarr_arrangement_free(handle) };
}

#[test]
fn invalid_json_sets_error_message() {
    let json = CString::new(r#"{"rank": 2, "positive_roots": [[1,0],[2,0]]}"#).unwrap();
    let mut handle: *mut CrystarrArrangement = ptr::null_mut();
    let status = unsafe { crystarr_arrangement_from_json(json.as_ptr(), &mut handle) };
    assert_eq!(status, CrystarrStatus::InvalidInput);
    let message = unsafe { CStr::from_ptr(crystarr_last_error_message()) }
        .to_str()
        .unwrap();
    assert!(message.contains("parallel"), "message: {message}");
}

#[test]
fn null_arguments_are_rejected() {
    let mut count = 0usize;
    assert_eq!(
        unsafe { crystarr_chamber_count(ptr::null(), &mut count) },
        CrystarrStatus::NullPointer
    );
    let mut handle: *mut CrystarrArrangement = ptr::null_mut();
    assert_eq!(
        unsafe { crystarr_arrangement_from_json(ptr::null(), &mut handle) },
        CrystarrStatus::NullPointer
    );
}

#[test]
fn unknown_catalog_entry() {
    let name = CString::new("E8").unwrap();
    let mut handle: *mut CrystarrArrangement = ptr::null_mut();
    assert_eq!(
        unsafe { crystarr_arrangement_from_catalog(name.as_ptr(), &mut handle) },
        CrystarrStatus::UnknownCatalogEntry
    );
}

#[test]
fn axiom_checks_through_ffi() {
    let good = from_catalog("A2");
    let bad = from_catalog("bad_2_1");
    let mut flag = false;
    assert_eq!(
        unsafe { crystarr_is_crystallographic(good, &mut flag) },
        CrystarrStatus::Ok
    );
    assert!(flag);
    assert_eq!(
        unsafe { crystarr_is_additive(good, &mut flag) },
        CrystarrStatus::Ok
    );
    assert!(flag);
    assert_eq!(
        unsafe { crystarr_is_crystallographic(bad, &mut flag) },
        CrystarrStatus::Ok
    );
    assert!(!flag);
    unsafe {
        crystarr_arrangement_free(good);
        crystarr_arrangement_free(bad);
    }
}

#[test]
fn non_simplicial_reported_as_status() {
    let handle = from_catalog("nonsimplicial3");
    let mut count = 0usize;
    assert_eq!(
        unsafe { crystarr_chamber_count(handle, &mut count) },
        CrystarrStatus::NotSimplicial
    );
    unsafe { crystarr_arrangement_free(handle) };
}

#[test]
fn scheme_lifecycle_and_json() {
    let handle = from_catalog("A2");
    let mut scheme: *mut CrystarrScheme = ptr::null_mut();
    assert_eq!(
        unsafe { crystarr_scheme_build(handle, 0, &mut scheme) },
        CrystarrStatus::Ok
    );
    let mut objects = 0usize;
    assert_eq!(
        unsafe { crystarr_scheme_object_count(scheme, &mut objects) },
        CrystarrStatus::Ok
    );
    assert_eq!(objects, 6);

    let mut text: *mut libc::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { crystarr_scheme_json(scheme, &mut text) },
        CrystarrStatus::Ok
    );
    let parsed: serde_json::Value = serde_json::from_str(&take_string(text)).unwrap();
    assert_eq!(parsed["n_objects"], 6);
    assert_eq!(parsed["verified"]["R4"], true);

    unsafe {
        crystarr_scheme_free(scheme);
        crystarr_arrangement_free(handle);
    }
}

#[test]
fn scheme_build_rejects_non_crystallographic() {
    let handle = from_catalog("bad_2_1");
    let mut scheme: *mut CrystarrScheme = ptr::null_mut();
    assert_eq!(
        unsafe { crystarr_scheme_build(handle, 0, &mut scheme) },
        CrystarrStatus::NotCrystallographic
    );
    unsafe { crystarr_arrangement_free(handle) };
}

#[test]
fn equivalence_through_ffi() {
    let b3 = from_catalog("B3");
    let c3 = from_catalog("C3");
    let mut flag = true;
    assert_eq!(
        unsafe { crystarr_arrangements_equivalent(b3, c3, &mut flag) },
        CrystarrStatus::Ok
    );
    assert!(!flag);

    let mut s1: *mut CrystarrScheme = ptr::null_mut();
    let mut s2: *mut CrystarrScheme = ptr::null_mut();
    unsafe {
        assert_eq!(crystarr_scheme_build(b3, 0, &mut s1), CrystarrStatus::Ok);
        assert_eq!(crystarr_scheme_build(c3, 0, &mut s2), CrystarrStatus::Ok);
    }
    assert_eq!(
        unsafe { crystarr_schemes_equivalent(s1, s2, &mut flag) },
        CrystarrStatus::Ok
    );
    assert!(!flag);
    assert_eq!(
        unsafe { crystarr_schemes_equivalent(s1, s1, &mut flag) },
        CrystarrStatus::Ok
    );
    assert!(flag);
    unsafe {
        crystarr_scheme_free(s1);
        crystarr_scheme_free(s2);
        crystarr_arrangement_free(b3);
        crystarr_arrangement_free(c3);
    }
}

#[test]
fn verify_json_round_trips_as_json() {
    let handle = from_catalog("bad_2_1");
    let mut text: *mut libc::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { crystarr_verify_json(handle, &mut text) },
        CrystarrStatus::Ok
    );
    let parsed: serde_json::Value = serde_json::from_str(&take_string(text)).unwrap();
    assert_eq!(parsed["passed"], false);
    assert_eq!(parsed["crystallographic"]["axiom"], "I");
    unsafe { crystarr_arrangement_free(handle) };
}

#[test]
fn generated_header_exists_and_declares_the_api() {
    let header = include_str!("../include/crystarr.h");
    for symbol in [
        "crystarr_arrangement_from_json",
        "crystarr_scheme_build",
        "crystarr_string_free",
        "CrystarrStatus",
    ] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}
