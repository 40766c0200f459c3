//! C ABI over the `splitlink` library.
//!
//! Digraphs and witnesses are opaque heap handles released with their
//! `*_free` function. Every entry point returns an [`SlStatus`]; on failure
//! a message is available from [`sl_last_error`] on the same thread.
//! Vertices are addressed by zero-based index.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use splitlink::connectivity::{is_k_strong, local_connectivity_without, strong_connectivity};
use splitlink::constructive::{link_with_certificate, Mode};
use splitlink::io::{parse, serialize};
use splitlink::linkage::{two_disjoint_paths, LinkageOutcome};
use splitlink::{v, Digraph, Error, LinkageQuery, LinkageWitness, SplitPartition};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Bad vertex, bad query or other domain error.
    Domain = 4,
    /// Premises of a certified linkage are not met.
    Hypothesis = 5,
    /// No linkage exists.
    NotLinked = 6,
    BudgetExceeded = 7,
    /// A certified linkage was refuted by exhaustive search.
    Refuted = 8,
    Panic = 9,
}

/// Class for certified linkage.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlMode {
    Split = 0,
    ScSplit = 1,
    Smp = 2,
}

/// Opaque digraph handle.
pub struct SlDigraph {
    digraph: Digraph,
    partition: Option<SplitPartition>,
}

/// Opaque linkage witness handle.
pub struct SlWitness {
    witness: LinkageWitness,
    provenance: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: SlStatus, msg: impl Into<String>) -> SlStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SlStatus {
    let status = match e {
        Error::Hypothesis(_) => SlStatus::Hypothesis,
        Error::BudgetExceeded(_) => SlStatus::BudgetExceeded,
        Error::TheoremRefuted(_) => SlStatus::Refuted,
        _ => SlStatus::Domain,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> SlStatus) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SlStatus::Panic, "internal panic"),
    }
}

fn query(d: &Digraph, s1: u32, t1: u32, s2: u32, t2: u32) -> Result<LinkageQuery, SlStatus> {
    let q = LinkageQuery::new(v(s1 as usize), v(t1 as usize), v(s2 as usize), v(t2 as usize)).map_err(from_error)?;
    q.check(d).map_err(from_error)?;
    Ok(q)
}

fn emit_witness(w: LinkageWitness, out: *mut *mut SlWitness) -> SlStatus {
    let provenance = CString::new(w.provenance.to_string()).unwrap_or_default();
    // SAFETY: callers check `out` for null before reaching here.
    unsafe { *out = Box::into_raw(Box::new(SlWitness { witness: w, provenance })) };
    SlStatus::Ok
}

/// Message for the most recent failure on this thread, or an empty string.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a digraph in the text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_digraph_parse(text: *const c_char, out: *mut *mut SlDigraph) -> SlStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(SlStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(SlStatus::InvalidUtf8, "input is not UTF-8");
        };
        match parse(text) {
            Ok((digraph, partition)) => {
                *out = Box::into_raw(Box::new(SlDigraph { digraph, partition }));
                SlStatus::Ok
            }
            Err(e) => fail(SlStatus::Parse, e.to_string()),
        }
    })
}

/// Releases a digraph. Null is ignored.
///
/// # Safety
/// `d` must come from [`sl_digraph_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_digraph_free(d: *mut SlDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_digraph_order(d: *const SlDigraph) -> usize {
    d.as_ref().map_or(0, |d| d.digraph.order())
}

/// Number of arcs, or 0 for null.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_digraph_arc_count(d: *const SlDigraph) -> usize {
    d.as_ref().map_or(0, |d| d.digraph.arc_count())
}

/// Canonical text form. Release the string with [`sl_string_free`].
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_digraph_serialize(d: *const SlDigraph, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            return fail(SlStatus::NullPointer, "null digraph");
        };
        if out.is_null() {
            return fail(SlStatus::NullPointer, "null output");
        }
        let text = serialize(&d.digraph, d.partition.as_ref());
        *out = CString::new(text).unwrap_or_default().into_raw();
        SlStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Maximum number of internally disjoint `(x, y)`-paths avoiding the
/// `deleted_len` vertices at `deleted` (which may be null when empty).
///
/// # Safety
/// `d` must be a live handle, `deleted` must point to `deleted_len` values
/// and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_local_connectivity(
    d: *const SlDigraph,
    x: u32,
    y: u32,
    deleted: *const u32,
    deleted_len: usize,
    out: *mut usize,
) -> SlStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            return fail(SlStatus::NullPointer, "null digraph");
        };
        if out.is_null() || (deleted.is_null() && deleted_len > 0) {
            return fail(SlStatus::NullPointer, "null argument");
        }
        let del: Vec<_> = if deleted_len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(deleted, deleted_len).iter().map(|&x| v(x as usize)).collect()
        };
        match local_connectivity_without(&d.digraph, v(x as usize), v(y as usize), &del) {
            Ok(k) => {
                *out = k;
                SlStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Whether the digraph is `k`-strong.
///
/// # Safety
/// `d` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sl_is_k_strong(d: *const SlDigraph, k: usize, out: *mut bool) -> SlStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            return fail(SlStatus::NullPointer, "null digraph");
        };
        if out.is_null() {
            return fail(SlStatus::NullPointer, "null output");
        }
        *out = is_k_strong(&d.digraph, k);
        SlStatus::Ok
    })
}

/// Largest `k` for which the digraph is `k`-strong.
///
/// # Safety
/// `d` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sl_strong_connectivity(d: *const SlDigraph, out: *mut usize) -> SlStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            return fail(SlStatus::NullPointer, "null digraph");
        };
        if out.is_null() {
            return fail(SlStatus::NullPointer, "null output");
        }
        *out = strong_connectivity(&d.digraph);
        SlStatus::Ok
    })
}

/// Exact search for disjoint `(s1, t1)`- and `(s2, t2)`-paths. Returns
/// `Ok` with a witness, `NotLinked`, or `BudgetExceeded` after `budget`
/// search nodes.
///
/// # Safety
/// `d` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sl_link2(
    d: *const SlDigraph,
    s1: u32,
    t1: u32,
    s2: u32,
    t2: u32,
    budget: u64,
    out: *mut *mut SlWitness,
) -> SlStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            return fail(SlStatus::NullPointer, "null digraph");
        };
        if out.is_null() {
            return fail(SlStatus::NullPointer, "null output");
        }
        let q = match query(&d.digraph, s1, t1, s2, t2) {
            Ok(q) => q,
            Err(s) => return s,
        };
        match two_disjoint_paths(&d.digraph, &q, budget) {
            Ok(LinkageOutcome::Linked(w)) => emit_witness(w, out),
            Ok(LinkageOutcome::NotLinked) => fail(SlStatus::NotLinked, "not linked"),
            Ok(LinkageOutcome::BudgetExceeded) => {
                fail(SlStatus::BudgetExceeded, format!("budget of {budget} exhausted"))
            }
            Err(e) => from_error(e),
        }
    })
}

/// Constructive linkage under the premises of the class `mode` (an
/// [`SlMode`] value), falling back to exact search when no template applies.
///
/// # Safety
/// `d` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sl_link2_certified(
    d: *const SlDigraph,
    s1: u32,
    t1: u32,
    s2: u32,
    t2: u32,
    mode: u32,
    budget: u64,
    out: *mut *mut SlWitness,
) -> SlStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            return fail(SlStatus::NullPointer, "null digraph");
        };
        if out.is_null() {
            return fail(SlStatus::NullPointer, "null output");
        }
        let q = match query(&d.digraph, s1, t1, s2, t2) {
            Ok(q) => q,
            Err(s) => return s,
        };
        let mode = match mode {
            m if m == SlMode::Split as u32 => Mode::Split,
            m if m == SlMode::ScSplit as u32 => Mode::ScSplit,
            m if m == SlMode::Smp as u32 => Mode::Smp,
            other => return fail(SlStatus::Domain, format!("unknown mode {other}")),
        };
        match link_with_certificate(&d.digraph, &q, mode, budget) {
            Ok(w) => emit_witness(w, out),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a witness. Null is ignored.
///
/// # Safety
/// `w` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_witness_free(w: *mut SlWitness) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Number of vertices on path `which` (0 or 1), or 0 for bad input.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_witness_path_len(w: *const SlWitness, which: u32) -> usize {
    match (w.as_ref(), which) {
        (Some(w), 0) => w.witness.p1.vertices().len(),
        (Some(w), 1) => w.witness.p2.vertices().len(),
        _ => 0,
    }
}

/// Copies path `which` (0 or 1) into `buf`, which must hold at least
/// [`sl_witness_path_len`] entries.
///
/// # Safety
/// `w` must be a live handle and `buf` valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn sl_witness_path(w: *const SlWitness, which: u32, buf: *mut u32, cap: usize) -> SlStatus {
    guard(|| {
        let Some(w) = w.as_ref() else {
            return fail(SlStatus::NullPointer, "null witness");
        };
        let path = match which {
            0 => &w.witness.p1,
            1 => &w.witness.p2,
            _ => return fail(SlStatus::Domain, "path index must be 0 or 1"),
        };
        let vs = path.vertices();
        if buf.is_null() {
            return fail(SlStatus::NullPointer, "null buffer");
        }
        if cap < vs.len() {
            return fail(SlStatus::Domain, format!("buffer holds {cap} entries, need {}", vs.len()));
        }
        for (i, x) in vs.iter().enumerate() {
            *buf.add(i) = x.index() as u32;
        }
        SlStatus::Ok
    })
}

/// How the witness was found: `exact-search`, `shortcut` or `template:ID`.
/// Owned by the witness.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_witness_provenance(w: *const SlWitness) -> *const c_char {
    w.as_ref().map_or(ptr::null(), |w| w.provenance.as_ptr())
}
