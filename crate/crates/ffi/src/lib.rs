//! C interface to multctl.
//!
//! Ideals cross the boundary as opaque `MultIdeal` handles, rationals as
//! strings such as `"5/6"`. Every call returns a `MultStatus`; on failure the
//! message is available from `mult_last_error` on the same thread.
//!
//! Strings returned through `char **` are owned by the caller and must be
//! released with `mult_string_free`; handles with `mult_ideal_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use multctl::harness::{verify_sum_inclusion, Verdict};
use multctl::newton::MultiplierSolver;
use multctl::parse::{infer_variables, parse_ideal, parse_variables, render_ideal};
use multctl::rational::parse_rational;
use multctl::{Error, MonomialIdeal};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InputError = 4,
    DomainError = 5,
    Inconclusive = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultVerdict {
    Holds = 0,
    HoldsWithEquality = 1,
    Inconclusive = 2,
    Fails = 3,
}

/// A monomial ideal together with the names of its variables.
pub struct MultIdeal {
    ideal: MonomialIdeal,
    vars: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(MultStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => MultStatus::ParseError,
            Error::Input(_) => MultStatus::InputError,
            Error::Domain(_) => MultStatus::DomainError,
            Error::Inconclusive(_) => MultStatus::Inconclusive,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> MultStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MultStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MultStatus::Panic
        }
    }
}

unsafe fn string_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(MultStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MultStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

unsafe fn ideal_arg<'a>(p: *const MultIdeal, name: &str) -> Result<&'a MultIdeal, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(MultStatus::NullPointer, format!("{name} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(MultStatus::NullPointer, format!("{name} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("rendered text has no nul").into_raw()
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn mult_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an ideal such as `"<x^2, y^3>"`. `vars` is a comma-separated list
/// of variable names, or NULL to infer them.
///
/// # Safety
/// `text` and `vars` must be NUL-terminated strings or NULL; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mult_ideal_parse(text: *const c_char, vars: *const c_char, out: *mut *mut MultIdeal) -> MultStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let text = string_arg(text, "text")?;
        let vars = if vars.is_null() {
            infer_variables(text)?
        } else {
            parse_variables(string_arg(vars, "vars")?)?
        };
        let ideal = parse_ideal(text, &vars)?;
        *out = Box::into_raw(Box::new(MultIdeal { ideal, vars }));
        Ok(())
    })
}

/// # Safety
/// `ideal` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mult_ideal_free(ideal: *mut MultIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// # Safety
/// `ideal` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mult_ideal_arity(ideal: *const MultIdeal, out: *mut usize) -> MultStatus {
    guard(|| {
        let ideal = ideal_arg(ideal, "ideal")?;
        *out_arg(out, "out")? = ideal.ideal.arity();
        Ok(())
    })
}

/// Canonical text of the ideal, generators in descending order.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mult_ideal_to_string(ideal: *const MultIdeal, out: *mut *mut c_char) -> MultStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let ideal = ideal_arg(ideal, "ideal")?;
        *out = c_string(render_ideal(&ideal.ideal, &ideal.vars));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mult_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Log canonical threshold as a rational string, `"inf"` for the unit ideal.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mult_lct(ideal: *const MultIdeal, out: *mut *mut c_char) -> MultStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let ideal = ideal_arg(ideal, "ideal")?;
        *out = c_string(MultiplierSolver::new(&ideal.ideal)?.lct().to_string());
        Ok(())
    })
}

/// The multiplier ideal `I(coeff·a)` as a new handle in the same variables.
///
/// # Safety
/// `ideal` must be a live handle, `coeff` a NUL-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mult_multiplier_ideal(
    ideal: *const MultIdeal,
    coeff: *const c_char,
    out: *mut *mut MultIdeal,
) -> MultStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let ideal = ideal_arg(ideal, "ideal")?;
        let c = parse_rational(string_arg(coeff, "coeff")?)?;
        let result = MultiplierSolver::new(&ideal.ideal)?.multiplier_ideal(&c)?;
        *out = Box::into_raw(Box::new(MultIdeal {
            ideal: result,
            vars: ideal.vars.clone(),
        }));
        Ok(())
    })
}

/// Jumping numbers in `(0, max]`, comma-separated in increasing order
/// (empty string when there are none).
///
/// # Safety
/// `ideal` must be a live handle, `max` a NUL-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mult_jumping_numbers(
    ideal: *const MultIdeal,
    max: *const c_char,
    out: *mut *mut c_char,
) -> MultStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let ideal = ideal_arg(ideal, "ideal")?;
        let t = parse_rational(string_arg(max, "max")?)?;
        let jumps = MultiplierSolver::new(&ideal.ideal)?.jumping_numbers(&t)?;
        let parts: Vec<String> = jumps.iter().map(ToString::to_string).collect();
        *out = c_string(parts.join(","));
        Ok(())
    })
}

/// Checks `I(γ·(a+b)) ⊆ Σ_{α+β=γ} I(α·a)·I(β·b)` for ideals in the same
/// variables.
///
/// # Safety
/// `a` and `b` must be live handles, `gamma` a NUL-terminated string and
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mult_verify_sum_inclusion(
    a: *const MultIdeal,
    b: *const MultIdeal,
    gamma: *const c_char,
    out: *mut MultVerdict,
) -> MultStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let (a, b) = (ideal_arg(a, "a")?, ideal_arg(b, "b")?);
        let g = parse_rational(string_arg(gamma, "gamma")?)?;
        let report = verify_sum_inclusion(&a.ideal, &b.ideal, &g)?;
        *out = match report.verdict {
            Verdict::Holds => MultVerdict::Holds,
            Verdict::HoldsWithEquality => MultVerdict::HoldsWithEquality,
            Verdict::Inconclusive => MultVerdict::Inconclusive,
            Verdict::Fails => MultVerdict::Fails,
        };
        Ok(())
    })
}
