//! C ABI for the eccentricity-matrix library.
//!
//! Conventions: every fallible function returns an [`EccStatus`] and writes
//! its result through an out-pointer. Handles are opaque and freed with the
//! matching `*_free` function; strings returned by the library are freed
//! with [`ecc_string_free`]. A thread-local message describing the most
//! recent error is available through [`ecc_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ecc_spectra::eccmat::IntSymMatrix;
use ecc_spectra::error::Error;
use ecc_spectra::gen::{self, Fixture};
use ecc_spectra::graph::{DistanceMatrix, Graph};
use ecc_spectra::report;
use ecc_spectra::theorems::{verify_graph, verify_matrix, AnalysisOptions};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EccStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidEdge = 4,
    VertexOutOfRange = 5,
    Disconnected = 6,
    NotInClass = 7,
    BadArgument = 8,
    NoConvergence = 9,
    UnknownFixture = 10,
    InternalError = 11,
}

/// Inertia triple of a symmetric matrix.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EccInertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

/// Opaque graph handle.
pub struct EccGraph {
    inner: Graph,
}

/// Opaque symmetric-matrix handle.
pub struct EccMatrix {
    inner: IntSymMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> EccStatus {
    match err {
        Error::InvalidEdge(_) => EccStatus::InvalidEdge,
        Error::VertexOutOfRange { .. } => EccStatus::VertexOutOfRange,
        Error::GraphDisconnected => EccStatus::Disconnected,
        Error::NotInCt(_) => EccStatus::NotInClass,
        Error::Parse { .. } | Error::Io(_) => EccStatus::ParseError,
        Error::NoConvergence => EccStatus::NoConvergence,
        Error::UnknownFixture(_) => EccStatus::UnknownFixture,
        Error::EvenDiameter(_)
        | Error::OddDiameter(_)
        | Error::MultipleCenters(_)
        | Error::DiameterTooSmall(_)
        | Error::OrderTooSmall(_)
        | Error::IndexOutOfRange { .. }
        | Error::OrderOne
        | Error::SizeOutOfRange { .. }
        | Error::KOutOfRange(_)
        | Error::InvalidParameter(_) => EccStatus::BadArgument,
        Error::ZeroPolynomial => EccStatus::InternalError,
    }
}

fn fail(err: &Error) -> EccStatus {
    let status = status_of(err);
    set_last_error(err.to_string());
    status
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, EccStatus> {
    if ptr.is_null() {
        set_last_error("null string pointer".into());
        return Err(EccStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| {
        set_last_error("string is not valid UTF-8".into());
        EccStatus::InvalidUtf8
    })
}

fn write_out<T>(out: *mut T, value: T) -> EccStatus {
    if out.is_null() {
        set_last_error("null out-pointer".into());
        return EccStatus::NullPointer;
    }
    unsafe { out.write(value) };
    EccStatus::Ok
}

/// Message describing the most recent error on this thread, or null.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ecc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// Library version string; statically allocated, do not free.
#[no_mangle]
pub extern "C" fn ecc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Builds a graph from `n_edges` pairs laid out as `u0 v0 u1 v1 ...`.
///
/// # Safety
/// `edges` must point to `2 * n_edges` readable `usize` values (or be null
/// with `n_edges == 0`); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_build(
    n: usize,
    edges: *const usize,
    n_edges: usize,
    out: *mut *mut EccGraph,
) -> EccStatus {
    if edges.is_null() && n_edges > 0 {
        set_last_error("null edge pointer".into());
        return EccStatus::NullPointer;
    }
    let pairs: Vec<(usize, usize)> = (0..n_edges)
        .map(|i| unsafe { (*edges.add(2 * i), *edges.add(2 * i + 1)) })
        .collect();
    match Graph::build(n, &pairs) {
        Ok(g) => write_out(out, Box::into_raw(Box::new(EccGraph { inner: g }))),
        Err(e) => fail(&e),
    }
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_parse(
    text: *const c_char,
    out: *mut *mut EccGraph,
) -> EccStatus {
    let text = match unsafe { read_str(text) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match Graph::from_edge_list_str(text) {
        Ok(g) => write_out(out, Box::into_raw(Box::new(EccGraph { inner: g }))),
        Err(e) => fail(&e),
    }
}

/// Loads a built-in graph fixture by name.
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_fixture_graph(
    name: *const c_char,
    out: *mut *mut EccGraph,
) -> EccStatus {
    let name = match unsafe { read_str(name) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match gen::fixture(name) {
        Ok(Fixture::Graph(g)) => write_out(out, Box::into_raw(Box::new(EccGraph { inner: g }))),
        Ok(Fixture::Matrix(_)) => {
            set_last_error(format!("fixture `{name}` is a matrix, not a graph"));
            EccStatus::BadArgument
        }
        Err(e) => fail(&e),
    }
}

/// Parses the matrix text format (`m <order>` header, then rows).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_matrix_parse(
    text: *const c_char,
    out: *mut *mut EccMatrix,
) -> EccStatus {
    let text = match unsafe { read_str(text) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match IntSymMatrix::parse(text) {
        Ok(m) => write_out(out, Box::into_raw(Box::new(EccMatrix { inner: m }))),
        Err(e) => fail(&e),
    }
}

/// Loads a built-in matrix fixture by name.
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_fixture_matrix(
    name: *const c_char,
    out: *mut *mut EccMatrix,
) -> EccStatus {
    let name = match unsafe { read_str(name) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match gen::fixture(name) {
        Ok(Fixture::Matrix(m)) => write_out(out, Box::into_raw(Box::new(EccMatrix { inner: m }))),
        Ok(Fixture::Graph(_)) => {
            set_last_error(format!("fixture `{name}` is a graph, not a matrix"));
            EccStatus::BadArgument
        }
        Err(e) => fail(&e),
    }
}

/// Frees a graph handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_free(g: *mut EccGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Frees a matrix handle. Null is ignored.
///
/// # Safety
/// `m` must be null or a pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ecc_matrix_free(m: *mut EccMatrix) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ecc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_order(g: *const EccGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.inner.order())
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_size(g: *const EccGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.inner.size())
}

/// Writes the diameter of a connected graph.
///
/// # Safety
/// `g` must be a valid graph handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_diameter(g: *const EccGraph, out: *mut u32) -> EccStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        set_last_error("null graph handle".into());
        return EccStatus::NullPointer;
    };
    match DistanceMatrix::all_pairs(&g.inner) {
        Ok(d) => write_out(out, d.eccentricity_profile().diameter()),
        Err(e) => fail(&e),
    }
}

/// Writes whether the graph is a clique tree whose blocks have at most two
/// cut-vertices.
///
/// # Safety
/// `g` must be a valid graph handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_in_class(g: *const EccGraph, out: *mut bool) -> EccStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        set_last_error("null graph handle".into());
        return EccStatus::NullPointer;
    };
    let d = match DistanceMatrix::all_pairs(&g.inner) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let dec = ecc_spectra::blocks::BlockDecomposition::decompose(&g.inner);
    let class = ecc_spectra::blocks::classify(&g.inner, &dec, &d.eccentricity_profile());
    write_out(out, class.in_ct)
}

/// Writes the exact inertia of the graph's eccentricity matrix.
///
/// # Safety
/// `g` must be a valid graph handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_inertia(
    g: *const EccGraph,
    out: *mut EccInertia,
) -> EccStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        set_last_error("null graph handle".into());
        return EccStatus::NullPointer;
    };
    match verify_graph("ffi", &g.inner, &AnalysisOptions::default()) {
        Ok(a) => write_out(
            out,
            EccInertia {
                n_plus: a.inertia.n_plus,
                n_minus: a.inertia.n_minus,
                n_zero: a.inertia.n_zero,
            },
        ),
        Err(e) => fail(&e),
    }
}

/// Writes the exact inertia of a symmetric matrix.
///
/// # Safety
/// `m` must be a valid matrix handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_matrix_inertia(
    m: *const EccMatrix,
    out: *mut EccInertia,
) -> EccStatus {
    let Some(m) = (unsafe { m.as_ref() }) else {
        set_last_error("null matrix handle".into());
        return EccStatus::NullPointer;
    };
    match verify_matrix("ffi", &m.inner, &AnalysisOptions::default()) {
        Ok(a) => write_out(
            out,
            EccInertia {
                n_plus: a.inertia.n_plus,
                n_minus: a.inertia.n_minus,
                n_zero: a.inertia.n_zero,
            },
        ),
        Err(e) => fail(&e),
    }
}

fn json_out(json: String, out: *mut *mut c_char) -> EccStatus {
    match CString::new(json) {
        Ok(c) => write_out(out, c.into_raw()),
        Err(_) => {
            set_last_error("report contains interior NUL".into());
            EccStatus::InternalError
        }
    }
}

/// Runs the full analysis on a graph and writes the JSON report. Free the
/// string with `ecc_string_free`.
///
/// # Safety
/// `g` must be a valid graph handle; `id` a valid string or null; `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_graph_analyze_json(
    g: *const EccGraph,
    id: *const c_char,
    out: *mut *mut c_char,
) -> EccStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        set_last_error("null graph handle".into());
        return EccStatus::NullPointer;
    };
    let id = if id.is_null() {
        "graph"
    } else {
        match unsafe { read_str(id) } {
            Ok(t) => t,
            Err(s) => return s,
        }
    };
    match verify_graph(id, &g.inner, &AnalysisOptions::default()) {
        Ok(a) => json_out(report::to_json(&a).to_string(), out),
        Err(e) => fail(&e),
    }
}

/// Runs the matrix analysis and writes the JSON report. Free the string
/// with `ecc_string_free`.
///
/// # Safety
/// `m` must be a valid matrix handle; `id` a valid string or null; `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn ecc_matrix_analyze_json(
    m: *const EccMatrix,
    id: *const c_char,
    out: *mut *mut c_char,
) -> EccStatus {
    let Some(m) = (unsafe { m.as_ref() }) else {
        set_last_error("null matrix handle".into());
        return EccStatus::NullPointer;
    };
    let id = if id.is_null() {
        "matrix"
    } else {
        match unsafe { read_str(id) } {
            Ok(t) => t,
            Err(s) => return s,
        }
    };
    match verify_matrix(id, &m.inner, &AnalysisOptions::default()) {
        Ok(a) => json_out(report::to_json(&a).to_string(), out),
        Err(e) => fail(&e),
    }
}
