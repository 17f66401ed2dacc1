//! C ABI over `sliceburn`. Every function returns an [`SbStatus`]; on failure
//! a message is kept per thread and read back with [`sb_last_error`]. Strings
//! handed out by the library are freed with [`sb_string_free`].

use serde_json::json;
use sliceburn::formats::{components_to_json, element_to_json, marks_to_json, units_to_json};
use sliceburn::group::prime_divisors;
use sliceburn::spectrum::Localization;
use sliceburn::verify::{self, Options, Suite};
use sliceburn::{Context, Error, RingKind};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    ParseError = 3,
    CapExceeded = 4,
    BufferTooSmall = 5,
    ComputationFailed = 6,
    VerificationFailed = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbRing {
    Slice = 0,
    Section = 1,
    Burnside = 2,
}

impl SbRing {
    fn kind(self) -> RingKind {
        match self {
            SbRing::Slice => RingKind::Slice,
            SbRing::Section => RingKind::Section,
            SbRing::Burnside => RingKind::Burnside,
        }
    }
}

/// Opaque handle to a group together with its subgroup lattice and rings.
pub struct SbContext {
    ctx: Context,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(SbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => SbStatus::ParseError,
            Error::CapExceeded { .. } => SbStatus::CapExceeded,
            Error::Invariant(_) => SbStatus::ComputationFailed,
            _ => SbStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SbStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SbStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(SbStatus::NullArgument, format!("{what} is null"))
}

unsafe fn context<'a>(ctx: *const SbContext) -> Result<&'a Context, Fail> {
    // SAFETY: the caller passes a handle from sb_context_new that is not yet freed.
    unsafe { ctx.as_ref() }.map(|c| &c.ctx).ok_or_else(|| null("context"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    // SAFETY: the caller passes a NUL-terminated string.
    unsafe { CStr::from_ptr(s) }.to_str().map_err(|_| Fail(SbStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: checked non-null; the caller provides writable storage.
    unsafe { out.write(value) };
    Ok(())
}

/// Message of the last failure on this thread; empty if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a context from a group description (e.g. "family symmetric 4").
///
/// # Safety
/// `description` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_context_new(description: *const c_char, cap: usize, out: *mut *mut SbContext) -> SbStatus {
    guard(|| {
        let desc = unsafe { text(description, "description") }?;
        let ctx = Context::from_description(desc, cap)?;
        let handle = Box::into_raw(Box::new(SbContext { ctx }));
        unsafe { write(out, handle) }.inspect_err(|_| {
            // SAFETY: just created above and not shared.
            drop(unsafe { Box::from_raw(handle) });
        })
    })
}

/// Frees a context; null is ignored.
///
/// # Safety
/// `ctx` must come from `sb_context_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sb_context_free(ctx: *mut SbContext) {
    if !ctx.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(ctx) });
    }
}

/// Frees a string returned by the library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sb_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `ctx` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_group_order(ctx: *const SbContext, out: *mut usize) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        unsafe { write(out, c.group().order()) }
    })
}

/// # Safety
/// `ctx` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_subgroup_count(ctx: *const SbContext, out: *mut usize) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        unsafe { write(out, c.lattice().len()) }
    })
}

/// Number of basis classes of the ring.
///
/// # Safety
/// `ctx` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_class_count(ctx: *const SbContext, ring: SbRing, out: *mut usize) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        unsafe { write(out, c.rank(ring.kind())) }
    })
}

/// GF(2) dimension of the unit group of the ring.
///
/// # Safety
/// `ctx` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_unit_dimension(ctx: *const SbContext, ring: SbRing, out: *mut usize) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        let dim = c.unit_group(ring.kind())?.dimension;
        unsafe { write(out, dim) }
    })
}

/// Connected components of Spec of the slice or section ring over Z
/// (`prime` = 0) or over Z localized at `prime`.
///
/// # Safety
/// `ctx` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_component_count(ctx: *const SbContext, ring: SbRing, prime: u32, out: *mut usize) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        let loc = if prime == 0 { Localization::Integers } else { Localization::AtPrime(prime as usize) };
        let n = c.components(ring.kind(), loc)?.len();
        unsafe { write(out, n) }
    })
}

/// Row-major table of marks. `out_len` always receives k²; if `buf` is null
/// or `capacity` is below k², nothing is written and BufferTooSmall is returned.
///
/// # Safety
/// `ctx` must be a live handle, `out_len` writable, and `buf` valid for
/// `capacity` values when non-null.
#[no_mangle]
pub unsafe extern "C" fn sb_mark_matrix(
    ctx: *const SbContext,
    ring: SbRing,
    buf: *mut i64,
    capacity: usize,
    out_len: *mut usize,
) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        let m = c.mark_matrix(ring.kind());
        let k = m.size();
        unsafe { write(out_len, k * k) }?;
        if buf.is_null() || capacity < k * k {
            return Err(Fail(SbStatus::BufferTooSmall, format!("need room for {} marks", k * k)));
        }
        // SAFETY: the caller guarantees `capacity` ≥ k² writable slots.
        let dst = unsafe { std::slice::from_raw_parts_mut(buf, k * k) };
        for i in 0..k {
            dst[i * k..(i + 1) * k].copy_from_slice(m.row(i));
        }
        Ok(())
    })
}

/// JSON report for `command` in {"info", "marks", "idempotents", "units",
/// "spectrum"}; free the result with `sb_string_free`.
///
/// # Safety
/// `ctx` must be a live handle, `command` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_report_json(ctx: *const SbContext, command: *const c_char, ring: SbRing, out: *mut *mut c_char) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        let kind = ring.kind();
        let value = match unsafe { text(command, "command") }? {
            "info" => json!({
                "group": c.group().name(),
                "order": c.group().order(),
                "subgroups": c.lattice().len(),
                "subgroup_classes": c.lattice().classes().len(),
                "slice_classes": c.rank(RingKind::Slice),
                "section_classes": c.rank(RingKind::Section),
            }),
            "marks" => marks_to_json(c, &c.mark_matrix(kind)),
            "idempotents" => {
                let list: Vec<_> = c.primitive_idempotents(kind)?.iter().map(|e| element_to_json(c, e)).collect();
                json!({"group": c.group().name(), "ring": kind.name(), "idempotents": list})
            }
            "units" => units_to_json(c, &c.unit_group(kind)?),
            "spectrum" => {
                let mut locs = vec![Localization::Integers];
                locs.extend(prime_divisors(c.group().order()).into_iter().map(Localization::AtPrime));
                let reports = locs
                    .into_iter()
                    .map(|loc| Ok(components_to_json(c, kind, loc, &c.components(kind, loc)?)))
                    .collect::<Result<Vec<_>, Error>>()?;
                json!(reports)
            }
            other => return Err(Fail(SbStatus::InvalidArgument, format!("unknown report {other:?}"))),
        };
        let s = CString::new(value.to_string()).expect("JSON has no NUL");
        unsafe { write(out, s.into_raw()) }
    })
}

/// Runs a verification suite ("all", "ring", "galois", "biset", "spectrum",
/// "units"). Writes the number of failed checks to `failed`, and returns
/// VerificationFailed when it is nonzero.
///
/// # Safety
/// `ctx` must be a live handle, `suite` NUL-terminated and `failed` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_verify(ctx: *const SbContext, suite: *const c_char, seed: u64, failed: *mut usize) -> SbStatus {
    guard(|| {
        let c = unsafe { context(ctx) }?;
        let name = unsafe { text(suite, "suite") }?;
        let suite = Suite::parse(name).ok_or_else(|| Fail(SbStatus::InvalidArgument, format!("unknown suite {name:?}")))?;
        let checks = verify::run(c, suite, &Options { seed, ..Options::default() });
        let bad: Vec<&str> = checks.iter().filter(|k| !k.passed).map(|k| k.name.as_str()).collect();
        unsafe { write(failed, bad.len()) }?;
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Fail(SbStatus::VerificationFailed, format!("failed checks: {}", bad.join(", "))))
        }
    })
}
