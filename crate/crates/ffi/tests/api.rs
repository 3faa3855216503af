use std::ffi::{c_char, CStr, CString};
use std::ptr;

use pirgb_ffi::*;

const IDEAL: &str = "modulus 30\nvars x\norder degrevlex\n2*x\n3*x\n";

fn parse(text: &str) -> (i32, *mut PirgbIdeal) {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { pirgb_ideal_parse(text.as_ptr(), &mut out) };
    (status, out)
}

unsafe fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_string();
    pirgb_string_free(s);
    owned
}

fn last_error() -> String {
    let p = pirgb_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn compute_with_every_engine() {
    let (status, ideal) = parse(IDEAL);
    assert_eq!(status, PirgbStatus::Ok as i32);
    unsafe {
        assert_eq!(pirgb_ideal_modulus(ideal), 30);
        assert_eq!(pirgb_ideal_len(ideal), 2);
        for engine in [PirgbEngine::Split, PirgbEngine::Naive, PirgbEngine::Classic] {
            let mut basis = ptr::null_mut();
            assert_eq!(pirgb_compute(ideal, engine as u32, &mut basis), PirgbStatus::Ok as i32);
            assert_eq!(pirgb_basis_len(basis), 1);
            assert_eq!(take_string(pirgb_basis_to_string(basis)), "x\n");
            let mut elem = ptr::null_mut();
            assert_eq!(pirgb_basis_element(basis, 0, &mut elem), PirgbStatus::Ok as i32);
            assert_eq!(take_string(elem), "x");
            assert_eq!(pirgb_verify(ideal, basis, 0, ptr::null_mut()), PirgbStatus::Ok as i32);
            pirgb_basis_free(basis);
        }
        pirgb_ideal_free(ideal);
    }
}

#[test]
fn verify_reports_counterexample() {
    let (_, ideal) = parse(IDEAL);
    let text = CString::new("2*x\n3*x\n").unwrap();
    unsafe {
        let mut basis = ptr::null_mut();
        assert_eq!(
            pirgb_basis_parse(ideal, text.as_ptr(), &mut basis),
            PirgbStatus::Ok as i32
        );
        assert_eq!(pirgb_basis_len(basis), 2);
        let mut counter = ptr::null_mut();
        assert_eq!(
            pirgb_verify(ideal, basis, 1, &mut counter),
            PirgbStatus::NotStrong as i32
        );
        assert_eq!(take_string(counter), "x");
        assert!(last_error().ends_with(": x"));
        pirgb_basis_free(basis);
        pirgb_ideal_free(ideal);
    }
}

#[test]
fn parse_errors_carry_position() {
    let (status, ideal) = parse("modulus 6\nvars x\norder lex\nx + \n");
    assert_eq!(status, PirgbStatus::Parse as i32);
    assert!(ideal.is_null());
    assert!(last_error().contains("line 4"), "{}", last_error());

    let (status, _) = parse("modulus 1\nvars x\norder lex\nx\n");
    assert_eq!(status, PirgbStatus::Parse as i32);
}

#[test]
fn null_and_range_errors() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            pirgb_ideal_parse(ptr::null(), &mut out),
            PirgbStatus::NullPointer as i32
        );
        let mut basis = ptr::null_mut();
        assert_eq!(
            pirgb_compute(ptr::null(), 0, &mut basis),
            PirgbStatus::NullPointer as i32
        );
        assert!(pirgb_basis_to_string(ptr::null()).is_null());
        assert_eq!(pirgb_basis_len(ptr::null()), 0);
        assert_eq!(pirgb_ideal_modulus(ptr::null()), 0);
        pirgb_ideal_free(ptr::null_mut());
        pirgb_basis_free(ptr::null_mut());
        pirgb_string_free(ptr::null_mut());

        let (_, ideal) = parse(IDEAL);
        assert_eq!(pirgb_compute(ideal, 9, &mut basis), PirgbStatus::InvalidEngine as i32);
        assert!(basis.is_null());
        assert_eq!(pirgb_compute(ideal, 0, &mut basis), PirgbStatus::Ok as i32);
        let mut elem = ptr::null_mut();
        assert_eq!(
            pirgb_basis_element(basis, 5, &mut elem),
            PirgbStatus::IndexOutOfRange as i32
        );
        assert!(elem.is_null());
        pirgb_basis_free(basis);
        pirgb_ideal_free(ideal);
    }
}

#[test]
fn invalid_utf8_is_rejected() {
    let bytes = [0xffu8, 0xfe, 0];
    let mut out = ptr::null_mut();
    let status = unsafe { pirgb_ideal_parse(bytes.as_ptr() as *const c_char, &mut out) };
    assert_eq!(status, PirgbStatus::InvalidUtf8 as i32);
}

#[test]
fn verify_rejects_mismatched_rings() {
    let (_, ideal30) = parse(IDEAL);
    let (_, ideal6) = parse("modulus 6\nvars x\norder degrevlex\nx + 5\n");
    unsafe {
        let mut basis = ptr::null_mut();
        assert_eq!(pirgb_compute(ideal6, 0, &mut basis), PirgbStatus::Ok as i32);
        assert_eq!(
            pirgb_verify(ideal30, basis, 0, ptr::null_mut()),
            PirgbStatus::Domain as i32
        );
        pirgb_basis_free(basis);
        pirgb_ideal_free(ideal30);
        pirgb_ideal_free(ideal6);
    }
}
