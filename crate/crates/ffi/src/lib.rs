//! C ABI for `juggling-cards`.
//!
//! Sequences are opaque handles created by `jc_sequence_parse` and released
//! with `jc_sequence_free`. Every fallible call returns a `JcStatus`; on
//! failure the message is kept per thread and read with
//! `jc_last_error_message`. Strings returned by the library are owned by the
//! caller and released with `jc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use juggling_cards::cards::{arrangement_of, crossings, sequence_permutation, siteswap_of};
use juggling_cards::counting::{gen_stirling, narayana, p4, stirling2};
use juggling_cards::render::{render_svg, RenderSpec};
use juggling_cards::{CardSequence, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    OutOfRange = 5,
    Unsupported = 6,
    BufferTooSmall = 7,
    Internal = 8,
    Panic = 9,
}

/// A parsed card sequence.
pub struct JcSequence {
    inner: CardSequence,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> JcStatus {
    match err {
        Error::Parse(_) => JcStatus::Parse,
        Error::OutOfRange { .. } => JcStatus::OutOfRange,
        Error::Unsupported(_) => JcStatus::Unsupported,
        Error::Internal(_) => JcStatus::Internal,
        Error::InvalidCard(_)
        | Error::InvalidPermutation(_)
        | Error::BallCountMismatch { .. }
        | Error::InvalidInput(_)
        | Error::NotInFamily(_) => JcStatus::InvalidInput,
    }
}

fn fail(status: JcStatus, msg: impl Into<String>) -> JcStatus {
    set_error(msg);
    status
}

/// Runs `f`, records its error, and turns a panic into `JcStatus::Panic`.
fn guard<F: FnOnce() -> Result<(), JcStatus> + UnwindSafe>(f: F) -> JcStatus {
    clear_error();
    match catch_unwind(f) {
        Ok(Ok(())) => JcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(JcStatus::Panic, "panic inside the library"),
    }
}

fn lib<T>(r: juggling_cards::Result<T>) -> Result<T, JcStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, JcStatus> {
    if p.is_null() {
        return Err(fail(JcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(JcStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn sequence<'a>(seq: *const JcSequence) -> Result<&'a CardSequence, JcStatus> {
    seq.as_ref()
        .map(|s| &s.inner)
        .ok_or_else(|| fail(JcStatus::NullPointer, "null sequence handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), JcStatus> {
    if out.is_null() {
        return Err(fail(JcStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), JcStatus> {
    let c = CString::new(s).map_err(|_| fail(JcStatus::Internal, "string contains a nul byte"))?;
    write_out(out, c.into_raw())
}

/// Copies `values` into `out[..cap]` and stores the full length in `len`.
/// Returns `BufferTooSmall` when `cap` is short; `len` is still set.
unsafe fn write_slice(
    values: &[usize],
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> Result<(), JcStatus> {
    write_out(len, values.len())?;
    if values.len() > cap {
        return Err(fail(
            JcStatus::BufferTooSmall,
            format!("need room for {} values, got {cap}", values.len()),
        ));
    }
    if !values.is_empty() {
        if out.is_null() {
            return Err(fail(JcStatus::NullPointer, "null output buffer"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    Ok(())
}

/// Message of the last failed call on this thread, or null if the last call
/// succeeded. The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn jc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn jc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `C3 C3 C2` style text. `b = 0` takes the ball count from the
/// largest target.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_parse(
    text: *const c_char,
    b: usize,
    out: *mut *mut JcSequence,
) -> JcStatus {
    guard(|| {
        let text = read_str(text)?;
        let inner = lib(CardSequence::parse(text, (b > 0).then_some(b)))?;
        write_out(out, Box::into_raw(Box::new(JcSequence { inner })))
    })
}

/// Releases a sequence handle. Null is ignored.
///
/// # Safety
/// `seq` must come from `jc_sequence_parse` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_free(seq: *mut JcSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Ball count, or 0 for a null handle.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_ball_count(seq: *const JcSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.inner.b())
}

/// Number of cards, or 0 for a null handle.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_len(seq: *const JcSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.inner.len())
}

/// Total crossings over all cards.
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_crossings(seq: *const JcSequence, out: *mut usize) -> JcStatus {
    guard(|| write_out(out, crossings(sequence(seq)?)))
}

/// Canonical text form, to be released with `jc_string_free`.
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_to_string(seq: *const JcSequence, out: *mut *mut c_char) -> JcStatus {
    guard(|| write_string(out, sequence(seq)?.to_string()))
}

/// Permutation of the sequence in cycle notation.
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_permutation(seq: *const JcSequence, out: *mut *mut c_char) -> JcStatus {
    guard(|| write_string(out, sequence_permutation(sequence(seq)?).to_string()))
}

/// Final arrangement of the balls, bottom level first. Needs `cap ≥ b`.
///
/// # Safety
/// `seq` must be a live handle, `out` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_arrangement(
    seq: *const JcSequence,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> JcStatus {
    guard(|| {
        let arr = arrangement_of(&sequence_permutation(sequence(seq)?));
        write_slice(arr.order(), out, cap, len)
    })
}

/// Siteswap of a single-throw sequence. Needs `cap ≥ n`.
///
/// # Safety
/// `seq` must be a live handle, `out` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_siteswap(
    seq: *const JcSequence,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> JcStatus {
    guard(|| {
        let ss = lib(siteswap_of(sequence(seq)?))?;
        write_slice(&ss.throws, out, cap, len)
    })
}

/// SVG diagram with the default layout.
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn jc_sequence_render_svg(seq: *const JcSequence, out: *mut *mut c_char) -> JcStatus {
    guard(|| {
        let svg = lib(render_svg(sequence(seq)?, &RenderSpec::default()))?;
        write_string(out, svg)
    })
}

/// Counting functions exposed as decimal strings, since values outgrow 64 bits.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JcCount {
    /// `S(n, k)`; arguments `(n, k)`.
    Stirling2 = 0,
    /// Generalized Stirling number; arguments `(n, k, m)`.
    GenStirling = 1,
    /// Minimal sequences; arguments `(b, n)`.
    Narayana = 2,
    /// Primitive sequences with four extra crossings; arguments `(n, b)`.
    P4 = 3,
}

/// Evaluates `kind` at `(a, b, c)` and returns the decimal value, to be
/// released with `jc_string_free`. Unused arguments are ignored.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jc_count(
    kind: JcCount,
    a: usize,
    b: usize,
    c: usize,
    out: *mut *mut c_char,
) -> JcStatus {
    guard(|| {
        let value = match kind {
            JcCount::Stirling2 => stirling2(a, b),
            JcCount::GenStirling => gen_stirling(a, b, c),
            JcCount::Narayana => lib(narayana(a, b))?,
            JcCount::P4 => lib(p4(a, b))?,
        };
        write_string(out, value.to_string())
    })
}
