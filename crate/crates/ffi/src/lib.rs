//! C ABI for `gammoid-lab`.
//!
//! Structures cross the boundary as opaque handles built from the same JSON
//! documents the command line reads. Every fallible call returns a
//! [`GlStatus`]; on failure the message is available from [`gl_last_error`].
//! Strings handed out by this library must be released with [`gl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gammoid_lab::bimaze::{mpt_decide, Bimaze, MptAnswer};
use gammoid_lab::dimaze::{link, Dimaze, LinkOutcome};
use gammoid_lab::duality::{to_bimaze, to_dimaze};
use gammoid_lab::io::{emit, linkage_value, parse, separator_value, BimazeDoc, DimazeDoc};
use gammoid_lab::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GlStatus {
    Ok = 0,
    /// A null pointer or a string that is not UTF-8.
    NullOrUtf8 = 1,
    /// Malformed document or unknown names.
    InvalidDocument = 2,
    /// The input is well formed but violates a precondition.
    Precondition = 3,
    /// A size limit was exceeded.
    TooLarge = 4,
    Internal = 5,
}

/// Opaque dimaze handle.
pub struct GlDimaze {
    inner: Dimaze,
}

/// Opaque bimaze handle.
pub struct GlBimaze {
    inner: Bimaze,
}

/// Three-valued answer of [`gl_bimaze_mpt`].
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GlAnswer {
    No = 0,
    Yes = 1,
    Inconclusive = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GlStatus {
    match e {
        Error::Document(_) | Error::Json(_) | Error::UnknownElement(_) | Error::DuplicateElement(_) => {
            GlStatus::InvalidDocument
        }
        Error::TooLarge { .. } | Error::GroundTooLarge(_) => GlStatus::TooLarge,
        Error::Internal(_) | Error::Io(_) => GlStatus::Internal,
        _ => GlStatus::Precondition,
    }
}

/// Runs `f`, recording its error and containing panics.
fn guard<F: FnOnce() -> Result<(), (GlStatus, String)>>(f: F) -> GlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GlStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside gammoid-lab".into());
            GlStatus::Internal
        }
    }
}

fn lift<T>(r: gammoid_lab::Result<T>) -> Result<T, (GlStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, (GlStatus, String)> {
    if s.is_null() {
        return Err((GlStatus::NullOrUtf8, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (GlStatus::NullOrUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (GlStatus, String)> {
    p.as_ref().ok_or_else(|| (GlStatus::NullOrUtf8, format!("{what} is null")))
}

fn out_ptr<T>(p: *mut T, what: &str) -> Result<(), (GlStatus, String)> {
    if p.is_null() {
        Err((GlStatus::NullOrUtf8, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).expect("JSON output has no nul bytes").into_raw()
}

fn names(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Message of the last failed call on this thread, or null. Free with [`gl_string_free`].
#[no_mangle]
pub extern "C" fn gl_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a dimaze document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_dimaze_parse(json: *const c_char, out: *mut *mut GlDimaze) -> GlStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let doc: DimazeDoc = lift(parse(text(json, "json")?, "dimaze document"))?;
        let inner = lift(doc.to_dimaze())?;
        *out = Box::into_raw(Box::new(GlDimaze { inner }));
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn gl_dimaze_free(d: *mut GlDimaze) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_dimaze_len(d: *const GlDimaze) -> usize {
    d.as_ref().map_or(0, |d| d.inner.len())
}

/// Serializes a dimaze as its document.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_dimaze_to_json(d: *const GlDimaze, out: *mut *mut c_char) -> GlStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let d = handle(d, "dimaze")?;
        *out = owned(lift(emit(&DimazeDoc::from_dimaze(&d.inner)))?);
        Ok(())
    })
}

/// Tries to link the comma-separated vertex set onto the exits.
///
/// `*linked` tells whether it succeeded; `*doc` receives the linkage, or the
/// maximal partial linkage with its separator.
///
/// # Safety
/// `d` must be a live handle, `set` a nul-terminated string, `linked` and `doc` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_dimaze_link(
    d: *const GlDimaze,
    set: *const c_char,
    linked: *mut bool,
    doc: *mut *mut c_char,
) -> GlStatus {
    guard(|| {
        out_ptr(linked, "linked")?;
        out_ptr(doc, "doc")?;
        let d = &handle(d, "dimaze")?.inner;
        let x = lift(d.vertices_of(&names(text(set, "set")?)))?;
        let (ok, v) = match lift(link(d, &x))? {
            LinkOutcome::Linked(p) => (true, linkage_value(d, &p)),
            LinkOutcome::Separated { partial, separator } => (false, separator_value(d, &partial, &separator)),
        };
        *doc = owned(lift(emit(&v))?);
        *linked = ok;
        Ok(())
    })
}

/// Independence in the strict gammoid of the dimaze.
///
/// # Safety
/// As for [`gl_dimaze_link`].
#[no_mangle]
pub unsafe extern "C" fn gl_dimaze_is_independent(
    d: *const GlDimaze,
    set: *const c_char,
    independent: *mut bool,
) -> GlStatus {
    guard(|| {
        out_ptr(independent, "independent")?;
        let d = &handle(d, "dimaze")?.inner;
        let x = lift(d.vertices_of(&names(text(set, "set")?)))?;
        *independent = lift(link(d, &x))?.is_linked();
        Ok(())
    })
}

/// The converted bimaze.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_dimaze_to_bimaze(d: *const GlDimaze, out: *mut *mut GlBimaze) -> GlStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let d = handle(d, "dimaze")?;
        let inner = lift(to_bimaze(&d.inner))?.bimaze;
        *out = Box::into_raw(Box::new(GlBimaze { inner }));
        Ok(())
    })
}

/// Parses a bimaze document; `m0` is required.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_bimaze_parse(json: *const c_char, out: *mut *mut GlBimaze) -> GlStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let doc: BimazeDoc = lift(parse(text(json, "json")?, "bimaze document"))?;
        let inner = lift(doc.to_bimaze())?;
        *out = Box::into_raw(Box::new(GlBimaze { inner }));
        Ok(())
    })
}

/// # Safety
/// `b` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn gl_bimaze_free(b: *mut GlBimaze) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_bimaze_to_json(b: *const GlBimaze, out: *mut *mut c_char) -> GlStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let b = handle(b, "bimaze")?;
        *out = owned(lift(emit(&BimazeDoc::from_bimaze(&b.inner)))?);
        Ok(())
    })
}

/// `m₀`-matchability of a comma-separated set of left vertices.
///
/// # Safety
/// `b` must be a live handle, `set` a nul-terminated string, `answer` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_bimaze_mpt(b: *const GlBimaze, set: *const c_char, answer: *mut GlAnswer) -> GlStatus {
    guard(|| {
        out_ptr(answer, "answer")?;
        let b = &handle(b, "bimaze")?.inner;
        let x = lift(b.graph.lefts_of(&names(text(set, "set")?)))?;
        *answer = match mpt_decide(b, &x) {
            MptAnswer::Yes(_) => GlAnswer::Yes,
            MptAnswer::No => GlAnswer::No,
            MptAnswer::Inconclusive => GlAnswer::Inconclusive,
        };
        Ok(())
    })
}

/// The converted dimaze.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_bimaze_to_dimaze(b: *const GlBimaze, out: *mut *mut GlDimaze) -> GlStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let b = handle(b, "bimaze")?;
        let (inner, _) = lift(to_dimaze(&b.inner))?;
        *out = Box::into_raw(Box::new(GlDimaze { inner }));
        Ok(())
    })
}
