//! C interface to `pirgb`.
//!
//! Ideals and bases are opaque heap handles released with their `_free`
//! function. Fallible calls return a [`PirgbStatus`]; the message of the
//! most recent failure on the calling thread is available from
//! [`pirgb_last_error`]. Strings returned to the caller are released with
//! [`pirgb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pirgb::parse::parse_basis_text;
use pirgb::verify::{default_degree, is_strong_gb};
use pirgb::{parse_ideal_file, Engine, Error, GeneratorSet, GroebnerBasis, IdealFile};

/// Result codes. Zero is success.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PirgbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    InvalidEngine = 5,
    IndexOutOfRange = 6,
    /// `pirgb_verify` found a counterexample.
    NotStrong = 7,
    Internal = 8,
}

/// Engine selector for [`pirgb_compute`].
#[repr(u32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PirgbEngine {
    Split = 0,
    Naive = 1,
    Classic = 2,
}

/// A parsed ideal file.
pub struct PirgbIdeal {
    file: IdealFile,
    gens: GeneratorSet,
}

/// A computed basis, printable with the variable names of its ideal.
pub struct PirgbBasis {
    basis: GroebnerBasis,
    vars: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: PirgbStatus, msg: impl Into<String>) -> i32 {
    set_error(msg);
    status as i32
}

fn status_of(e: &Error) -> PirgbStatus {
    match e {
        Error::Parse { .. } => PirgbStatus::Parse,
        _ => PirgbStatus::Domain,
    }
}

/// Runs `f`, turning panics into `Internal`.
fn guarded(f: impl FnOnce() -> i32) -> i32 {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(PirgbStatus::Internal, "internal panic"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failure on this thread, or NULL if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pirgb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an ideal file (`modulus`, `vars`, `order` lines, then one
/// polynomial per line) from a NUL-terminated string.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
/// or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn pirgb_ideal_parse(text: *const c_char, out: *mut *mut PirgbIdeal) -> i32 {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return fail(PirgbStatus::NullPointer, "null argument to pirgb_ideal_parse");
        }
        *out = ptr::null_mut();
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(PirgbStatus::InvalidUtf8, "ideal text is not UTF-8");
        };
        let parsed = parse_ideal_file(text).and_then(|file| {
            let gens = GeneratorSet::from_file(&file)?;
            Ok(PirgbIdeal { file, gens })
        });
        match parsed {
            Ok(ideal) => {
                *out = Box::into_raw(Box::new(ideal));
                PirgbStatus::Ok as i32
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Releases an ideal. NULL is ignored.
///
/// # Safety
/// `ideal` must be NULL or a handle from [`pirgb_ideal_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pirgb_ideal_free(ideal: *mut PirgbIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Modulus of the ideal's coefficient ring, or 0 for NULL.
///
/// # Safety
/// `ideal` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pirgb_ideal_modulus(ideal: *const PirgbIdeal) -> u64 {
    ideal.as_ref().map_or(0, |i| i.file.modulus())
}

/// Number of nonzero generators, or 0 for NULL.
///
/// # Safety
/// `ideal` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pirgb_ideal_len(ideal: *const PirgbIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.gens.generators().len())
}

/// Computes the minimal normalized strong Gröbner basis with the given
/// engine (a [`PirgbEngine`] value).
///
/// # Safety
/// `ideal` must be NULL or a live handle; `out` must be NULL or valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn pirgb_compute(ideal: *const PirgbIdeal, engine: u32, out: *mut *mut PirgbBasis) -> i32 {
    guarded(|| {
        let (Some(ideal), false) = (ideal.as_ref(), out.is_null()) else {
            return fail(PirgbStatus::NullPointer, "null argument to pirgb_compute");
        };
        *out = ptr::null_mut();
        let engine = match engine {
            e if e == PirgbEngine::Split as u32 => Engine::Split,
            e if e == PirgbEngine::Naive as u32 => Engine::Naive,
            e if e == PirgbEngine::Classic as u32 => Engine::Classic,
            other => return fail(PirgbStatus::InvalidEngine, format!("unknown engine {other}")),
        };
        match engine.run(&ideal.gens) {
            Ok(basis) => {
                *out = Box::into_raw(Box::new(PirgbBasis {
                    basis,
                    vars: ideal.file.vars.clone(),
                }));
                PirgbStatus::Ok as i32
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Reads a basis for `ideal` from text: bare polynomial lines, or a full
/// ideal file over the same ring and variables. The elements are taken as
/// given, without minimizing.
///
/// # Safety
/// `ideal` must be NULL or a live handle; `text` must be NULL or a valid
/// NUL-terminated string; `out` must be NULL or valid for writing one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pirgb_basis_parse(
    ideal: *const PirgbIdeal,
    text: *const c_char,
    out: *mut *mut PirgbBasis,
) -> i32 {
    guarded(|| {
        let (Some(ideal), false, false) = (ideal.as_ref(), text.is_null(), out.is_null()) else {
            return fail(PirgbStatus::NullPointer, "null argument to pirgb_basis_parse");
        };
        *out = ptr::null_mut();
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(PirgbStatus::InvalidUtf8, "basis text is not UTF-8");
        };
        match parse_basis_text(text, &ideal.file) {
            Ok(elements) => {
                let g = &ideal.gens;
                let basis = GroebnerBasis::from_elements(g.ring(), g.order(), g.nvars(), elements);
                *out = Box::into_raw(Box::new(PirgbBasis {
                    basis,
                    vars: ideal.file.vars.clone(),
                }));
                PirgbStatus::Ok as i32
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Releases a basis. NULL is ignored.
///
/// # Safety
/// `basis` must be NULL or a handle from [`pirgb_compute`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pirgb_basis_free(basis: *mut PirgbBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Number of basis elements, or 0 for NULL.
///
/// # Safety
/// `basis` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pirgb_basis_len(basis: *const PirgbBasis) -> usize {
    basis.as_ref().map_or(0, |b| b.basis.len())
}

/// The basis, one polynomial per line. Free with [`pirgb_string_free`].
/// Returns NULL for a NULL handle.
///
/// # Safety
/// `basis` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pirgb_basis_to_string(basis: *const PirgbBasis) -> *mut c_char {
    match basis.as_ref() {
        Some(b) => to_c_string(b.basis.display(&b.vars).to_string()),
        None => {
            set_error("null argument to pirgb_basis_to_string");
            ptr::null_mut()
        }
    }
}

/// Element `index` as text. Free with [`pirgb_string_free`].
///
/// # Safety
/// `basis` must be NULL or a live handle; `out` must be NULL or valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn pirgb_basis_element(basis: *const PirgbBasis, index: usize, out: *mut *mut c_char) -> i32 {
    guarded(|| {
        let (Some(b), false) = (basis.as_ref(), out.is_null()) else {
            return fail(PirgbStatus::NullPointer, "null argument to pirgb_basis_element");
        };
        *out = ptr::null_mut();
        let Some(g) = b.basis.elements().get(index) else {
            return fail(
                PirgbStatus::IndexOutOfRange,
                format!("index {index} out of range for a basis of {}", b.basis.len()),
            );
        };
        *out = to_c_string(g.display(&b.vars).to_string());
        PirgbStatus::Ok as i32
    })
}

/// Checks `basis` against `ideal` up to `degree` (0 picks two above the
/// largest input degree). Returns `Ok` or `NotStrong`; in the latter case a
/// counterexample is written to `counterexample` when it is not NULL (free
/// it with [`pirgb_string_free`]).
///
/// # Safety
/// `ideal` and `basis` must be NULL or live handles; `counterexample` must
/// be NULL or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn pirgb_verify(
    ideal: *const PirgbIdeal,
    basis: *const PirgbBasis,
    degree: u32,
    counterexample: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let (Some(ideal), Some(b)) = (ideal.as_ref(), basis.as_ref()) else {
            return fail(PirgbStatus::NullPointer, "null argument to pirgb_verify");
        };
        if !counterexample.is_null() {
            *counterexample = ptr::null_mut();
        }
        if b.basis.ring() != ideal.gens.ring() || b.basis.nvars() != ideal.gens.nvars() {
            return fail(PirgbStatus::Domain, "basis and ideal live in different rings");
        }
        let elements: Vec<_> = b
            .basis
            .elements()
            .iter()
            .map(|g| g.with_order(ideal.gens.order()))
            .collect();
        let gens = ideal.gens.generators();
        let degree = if degree == 0 {
            default_degree(&elements, gens)
        } else {
            degree
        };
        match is_strong_gb(&elements, gens, degree) {
            Ok(()) => PirgbStatus::Ok as i32,
            Err(failure) => {
                let text = failure.counterexample().display(&ideal.file.vars).to_string();
                set_error(format!("{}: {text}", failure.reason()));
                if !counterexample.is_null() {
                    *counterexample = to_c_string(text);
                }
                PirgbStatus::NotStrong as i32
            }
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pirgb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
