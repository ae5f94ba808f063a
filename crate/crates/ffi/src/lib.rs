//! C ABI over `laplace_cycles`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `lc_*_free`. Every fallible call returns an
//! [`LcStatus`]; the message of the most recent failure on the calling
//! thread is available from [`lc_last_error`]. Strings returned by the
//! library are released with [`lc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use laplace_cycles::cli::{exit_code, EXIT_DEGENERATE, EXIT_IO, EXIT_USAGE, EXIT_VIOLATION};
use laplace_cycles::congruences::{is_w_congruence, LineCongruence};
use laplace_cycles::cycles::{diagonal_congruences, generate_cycle, verify_cycle, LaplaceCycle, NetName};
use laplace_cycles::io::{from_json, to_json, Document};
use laplace_cycles::nets::{laplace, DiscreteNet, Dir, NetWindow};
use laplace_cycles::Error;

/// Result of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    /// Bad arguments: null pointers, invalid UTF-8, out of range values.
    Usage = 1,
    /// Malformed JSON or a document of the wrong type.
    Parse = 2,
    /// The input is degenerate for the requested construction.
    Degenerate = 3,
    /// The input violates an identity the construction requires.
    Violation = 4,
    /// The library panicked. This is a bug.
    Internal = 5,
}

/// The four nets of a cycle.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcNetName {
    F = 0,
    H = 1,
    G = 2,
    K = 3,
}

/// A discrete net on a rectangular window.
pub struct LcNet(DiscreteNet);

/// A line congruence on a rectangular window.
pub struct LcCongruence(LineCongruence);

/// A Laplace cycle of period four.
pub struct LcCycle(LaplaceCycle);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(LcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match exit_code(&e) {
            EXIT_USAGE => LcStatus::Usage,
            EXIT_IO => LcStatus::Parse,
            EXIT_VIOLATION => LcStatus::Violation,
            EXIT_DEGENERATE => LcStatus::Degenerate,
            _ => LcStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn usage(msg: &str) -> Failure {
    Failure(LcStatus::Usage, msg.to_string())
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcStatus::Ok,
        Ok(Err(Failure(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal error");
            LcStatus::Internal
        }
    }
}

unsafe fn input<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(usage("null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| usage("string is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| usage("null handle"))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(usage("null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(usage("null output pointer"));
    }
    *out = CString::new(s).map_err(|_| usage("string contains NUL"))?.into_raw();
    Ok(())
}

unsafe fn emit_bool(out: *mut bool, b: bool) -> Result<(), Failure> {
    if out.is_null() {
        return Err(usage("null output pointer"));
    }
    *out = b;
    Ok(())
}

fn parse(json: &str) -> Result<Document, Failure> {
    Ok(from_json(json)?)
}

fn wrong_type(want: &str, got: &Document) -> Failure {
    Failure(LcStatus::Parse, format!("expected a {want} document, got {}", got.kind()))
}

/// Message of the last failed call on this thread, or an empty string if
/// nothing has failed yet. Successful calls leave it unchanged. The pointer
/// stays valid until the next failing call.
#[no_mangle]
pub extern "C" fn lc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Generates a cycle on the window `[i0, i1] × [j0, j1]` from a seed. The
/// window needs at least three vertices in each direction.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_cycle_generate(
    seed: u64,
    i0: i64,
    i1: i64,
    j0: i64,
    j1: i64,
    max_attempts: u32,
    out: *mut *mut LcCycle,
) -> LcStatus {
    guard(|| {
        let w = NetWindow::new(i0, i1, j0, j1).map_err(|e| usage(&e.to_string()))?;
        if w.width() < 3 || w.height() < 3 {
            return Err(usage("the window needs at least 3×3 vertices"));
        }
        let (c, _) = generate_cycle(seed, &w, max_attempts as usize)?;
        emit(out, LcCycle(c))
    })
}

/// Checks every identity of the cycle. `clean` is set to whether all held.
/// If `report` is not null it receives the text report, to be released
/// with [`lc_string_free`].
///
/// # Safety
/// `cycle` must be a live handle, `clean` a valid pointer and `report`
/// null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_cycle_verify(cycle: *const LcCycle, clean: *mut bool, report: *mut *mut c_char) -> LcStatus {
    guard(|| {
        let r = verify_cycle(&handle(cycle)?.0);
        emit_bool(clean, r.is_clean())?;
        if !report.is_null() {
            emit_string(report, r.to_string())?;
        }
        Ok(())
    })
}

/// A copy of one of the four nets of the cycle.
///
/// # Safety
/// `cycle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_cycle_net(cycle: *const LcCycle, name: LcNetName, out: *mut *mut LcNet) -> LcStatus {
    guard(|| {
        let n = match name {
            LcNetName::F => NetName::F,
            LcNetName::H => NetName::H,
            LcNetName::G => NetName::G,
            LcNetName::K => NetName::K,
        };
        emit(out, LcNet(handle(cycle)?.0.net(n).clone()))
    })
}

/// The two diagonal congruences `f ∨ g` and `h ∨ k`.
///
/// # Safety
/// `cycle` must be a live handle; `fg` and `hk` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lc_cycle_diagonals(
    cycle: *const LcCycle,
    fg: *mut *mut LcCongruence,
    hk: *mut *mut LcCongruence,
) -> LcStatus {
    guard(|| {
        if fg.is_null() || hk.is_null() {
            return Err(usage("null output pointer"));
        }
        let (a, b) = diagonal_congruences(&handle(cycle)?.0)?;
        emit(fg, LcCongruence(a))?;
        emit(hk, LcCongruence(b))
    })
}

/// Parses a cycle document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_cycle_from_json(json: *const c_char, out: *mut *mut LcCycle) -> LcStatus {
    guard(|| match parse(input(json)?)? {
        Document::Cycle(c) => emit(out, LcCycle(c)),
        d => Err(wrong_type("cycle", &d)),
    })
}

/// Serializes a cycle. Release the string with [`lc_string_free`].
///
/// # Safety
/// `cycle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_cycle_to_json(cycle: *const LcCycle, out: *mut *mut c_char) -> LcStatus {
    guard(|| emit_string(out, to_json(&Document::Cycle(handle(cycle)?.0.clone()))))
}

/// Parses a net document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_net_from_json(json: *const c_char, out: *mut *mut LcNet) -> LcStatus {
    guard(|| match parse(input(json)?)? {
        Document::Net(n) => emit(out, LcNet(n)),
        d => Err(wrong_type("net", &d)),
    })
}

/// Serializes a net. Release the string with [`lc_string_free`].
///
/// # Safety
/// `net` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_net_to_json(net: *const LcNet, out: *mut *mut c_char) -> LcStatus {
    guard(|| emit_string(out, to_json(&Document::Net(handle(net)?.0.clone()))))
}

/// Number of vertices of the net.
///
/// # Safety
/// `net` must be a live handle or null (giving 0).
#[no_mangle]
pub unsafe extern "C" fn lc_net_len(net: *const LcNet) -> usize {
    net.as_ref().map_or(0, |n| n.0.points().len())
}

/// Laplace transform in direction 1 or 2.
///
/// # Safety
/// `net` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_net_laplace(net: *const LcNet, dir: u32, out: *mut *mut LcNet) -> LcStatus {
    guard(|| {
        let d = match dir {
            1 => Dir::First,
            2 => Dir::Second,
            _ => return Err(usage("direction must be 1 or 2")),
        };
        emit(out, LcNet(laplace(&handle(net)?.0, d)?))
    })
}

/// Parses a congruence document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_congruence_from_json(json: *const c_char, out: *mut *mut LcCongruence) -> LcStatus {
    guard(|| match parse(input(json)?)? {
        Document::Congruence(c) => emit(out, LcCongruence(c)),
        d => Err(wrong_type("congruence", &d)),
    })
}

/// Serializes a congruence. Release the string with [`lc_string_free`].
///
/// # Safety
/// `cong` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_congruence_to_json(cong: *const LcCongruence, out: *mut *mut c_char) -> LcStatus {
    guard(|| emit_string(out, to_json(&Document::Congruence(handle(cong)?.0.clone()))))
}

/// Tests whether every face of the congruence is a regulus.
///
/// # Safety
/// `cong` must be a live handle and `result` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_congruence_is_w(cong: *const LcCongruence, result: *mut bool) -> LcStatus {
    guard(|| {
        let r = is_w_congruence(&handle(cong)?.0)?;
        emit_bool(result, r.is_clean())
    })
}

/// # Safety
/// `cycle` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_cycle_free(cycle: *mut LcCycle) {
    if !cycle.is_null() {
        drop(Box::from_raw(cycle));
    }
}

/// # Safety
/// `net` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_net_free(net: *mut LcNet) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// # Safety
/// `cong` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_congruence_free(cong: *mut LcCongruence) {
    if !cong.is_null() {
        drop(Box::from_raw(cong));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
