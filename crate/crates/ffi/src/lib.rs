//! C ABI over `primegraph`.
//!
//! Graphs cross the boundary as opaque `PgGraph` handles. Every call returns
//! a `PgStatus`; on failure `pg_last_error` describes the cause for the
//! calling thread. Strings and index arrays returned through out-pointers are
//! owned by the caller and must be released with `pg_string_free` and
//! `pg_indices_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use primegraph::chains::find_chain;
use primegraph::cli::outcome_json;
use primegraph::extraction::unavoidable_witness;
use primegraph::families::{generate, FamilyId};
use primegraph::graph6::{emit_graph6, parse_graph6};
use primegraph::homogeneous::{find_homogeneous_set, is_prime};
use primegraph::{Graph, VertexSet};

/// Result code of every exported function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    /// The query has no answer (prime graph, no chain).
    NotFound = 5,
    Internal = 6,
}

/// Opaque graph handle.
pub struct PgGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: PgStatus, msg: impl Into<String>) -> PgStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> PgStatus) -> PgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(PgStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PgStatus> {
    if s.is_null() {
        return Err(fail(PgStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(PgStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn graph_ref<'a>(g: *const PgGraph) -> Result<&'a Graph, PgStatus> {
    g.as_ref()
        .map(|h| &h.graph)
        .ok_or_else(|| fail(PgStatus::NullPointer, "null graph handle"))
}

fn new_handle(graph: Graph) -> *mut PgGraph {
    Box::into_raw(Box::new(PgGraph { graph }))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> PgStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            PgStatus::Ok
        }
        Err(_) => fail(PgStatus::Internal, "output contains a NUL byte"),
    }
}

unsafe fn write_indices(out: *mut *mut usize, out_len: *mut usize, v: Vec<usize>) {
    let boxed = v.into_boxed_slice();
    *out_len = boxed.len();
    *out = Box::into_raw(boxed) as *mut usize;
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! require_out {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(PgStatus::NullPointer, "null output pointer");
        })+
    };
}

/// Parses a graph6 string into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_from_graph6(text: *const c_char, out: *mut *mut PgGraph) -> PgStatus {
    guard(|| {
        require_out!(out);
        let s = try_status!(read_str(text));
        match parse_graph6(s.trim_end()) {
            Ok(g) => {
                *out = new_handle(g);
                PgStatus::Ok
            }
            Err(e) => fail(PgStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds a family member from a spec such as `half-graph:4` or `thin-spider:3!`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_family_generate(spec: *const c_char, out: *mut *mut PgGraph) -> PgStatus {
    guard(|| {
        require_out!(out);
        let s = try_status!(read_str(spec));
        let id: FamilyId = match s.parse() {
            Ok(id) => id,
            Err(e) => return fail(PgStatus::InvalidArgument, format!("{e}")),
        };
        match generate(id) {
            Ok(g) => {
                *out = new_handle(g.graph);
                PgStatus::Ok
            }
            Err(e) => fail(PgStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_free(g: *mut PgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Encodes a graph as graph6.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_to_graph6(g: *const PgGraph, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        require_out!(out);
        let g = try_status!(graph_ref(g));
        write_string(out, emit_graph6(g))
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_vertex_count(g: *const PgGraph, out: *mut usize) -> PgStatus {
    guard(|| {
        require_out!(out);
        *out = try_status!(graph_ref(g)).n();
        PgStatus::Ok
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_has_edge(g: *const PgGraph, u: usize, v: usize, out: *mut bool) -> PgStatus {
    guard(|| {
        require_out!(out);
        let g = try_status!(graph_ref(g));
        if u >= g.n() || v >= g.n() {
            return fail(PgStatus::InvalidArgument, format!("vertex out of range for {} vertices", g.n()));
        }
        *out = g.has_edge(u, v);
        PgStatus::Ok
    })
}

/// Graphs on fewer than 3 vertices report false.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_is_prime(g: *const PgGraph, out: *mut bool) -> PgStatus {
    guard(|| {
        require_out!(out);
        *out = is_prime(try_status!(graph_ref(g)));
        PgStatus::Ok
    })
}

/// Writes a homogeneous set in increasing order, or returns `NotFound`.
///
/// # Safety
/// `g` must be a live handle; `out` and `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_find_homogeneous_set(
    g: *const PgGraph,
    out: *mut *mut usize,
    out_len: *mut usize,
) -> PgStatus {
    guard(|| {
        require_out!(out, out_len);
        let g = try_status!(graph_ref(g));
        match find_homogeneous_set(g) {
            Some(set) => {
                write_indices(out, out_len, set.to_vec());
                PgStatus::Ok
            }
            None => fail(PgStatus::NotFound, "no homogeneous set"),
        }
    })
}

/// Writes a chain from the pair `{x, y}` to `target`, starting with the two
/// source vertices, or returns `NotFound`.
///
/// # Safety
/// `g` must be a live handle; `out` and `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_find_chain(
    g: *const PgGraph,
    x: usize,
    y: usize,
    target: usize,
    out: *mut *mut usize,
    out_len: *mut usize,
) -> PgStatus {
    guard(|| {
        require_out!(out, out_len);
        let g = try_status!(graph_ref(g));
        if x >= g.n() || y >= g.n() || x == y {
            return fail(PgStatus::InvalidArgument, "source must be two distinct vertices");
        }
        let source = VertexSet::from_slice(g.n(), &[x, y]);
        match find_chain(g, &source, target) {
            Ok(Some(c)) => {
                write_indices(out, out_len, c.seq);
                PgStatus::Ok
            }
            Ok(None) => fail(PgStatus::NotFound, "no chain"),
            Err(e) => fail(PgStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Runs the witness search with outcome size `n` and writes one JSON
/// object: a witness, a shortfall (`stage`, `needed`, `had`) or
/// `{"nonprime": [...]}`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_witness_json(g: *const PgGraph, n: usize, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        require_out!(out);
        let g = try_status!(graph_ref(g));
        match unavoidable_witness(g, n) {
            Ok(report) => write_string(out, outcome_json(&report.outcome).to_string()),
            Err(e) => fail(PgStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `ptr` and `len` must come from one call of this library, or `ptr` be null.
#[no_mangle]
pub unsafe extern "C" fn pg_indices_free(ptr: *mut usize, len: usize) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(ptr, len)));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn pg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
