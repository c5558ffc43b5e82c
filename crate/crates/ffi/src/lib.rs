//! C ABI over the homdens counting engine.
//!
//! Graphs are opaque [`HdGraph`] handles created by the `hd_graph_*`
//! constructors and released with [`hd_graph_free`]. Every fallible call
//! returns an [`HdStatus`]; on failure a message is kept per thread and can
//! be read with [`hd_last_error_message`]. Counts are unbounded, so they
//! cross the boundary as NUL-terminated decimal strings owned by the caller
//! and released with [`hd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use homdens::engine::{count_homomorphisms_naive_with, count_homomorphisms_with};
use homdens::io::{parse_edge_list, parse_graph6, write_graph6};
use homdens::{
    count_injective, count_mappings, Density, DensityError, EngineConfig, FastPath, Graph, HomError,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph = 2,
    ParseError = 3,
    EmptyCodomain = 4,
    BudgetExceeded = 5,
    InvalidUtf8 = 6,
    Internal = 7,
}

/// Dispatch branch reported by [`hd_count_homomorphisms`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdFastPath {
    None = 0,
    EdgelessDomain = 1,
    StrippedIsolated = 2,
    CompleteDomain = 3,
    CompleteCodomain = 4,
}

impl From<FastPath> for HdFastPath {
    fn from(p: FastPath) -> Self {
        match p {
            FastPath::None => HdFastPath::None,
            FastPath::EdgelessDomain => HdFastPath::EdgelessDomain,
            FastPath::StrippedIsolated => HdFastPath::StrippedIsolated,
            FastPath::CompleteDomain => HdFastPath::CompleteDomain,
            FastPath::CompleteCodomain => HdFastPath::CompleteCodomain,
        }
    }
}

/// Opaque graph handle.
pub struct HdGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(HdStatus, String);

impl From<DensityError> for Failure {
    fn from(e: DensityError) -> Self {
        let status = match &e {
            DensityError::EmptyCodomain { .. } => HdStatus::EmptyCodomain,
            DensityError::Hom(HomError::BudgetExceeded { .. }) => HdStatus::BudgetExceeded,
            _ => HdStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("NULs replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HdStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            HdStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(HdStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn graph_ref<'a>(g: *const HdGraph, what: &str) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

unsafe fn text_arg<'a>(s: *const c_char, what: &str) -> Result<&'a [u8], Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    Ok(CStr::from_ptr(s).to_bytes())
}

unsafe fn emit_graph(out: *mut *mut HdGraph, g: Graph) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(HdGraph { inner: g }));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s)
        .map_err(|_| Failure(HdStatus::Internal, "string contains NUL".into()))?
        .into_raw();
    Ok(())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`edges[2k]`, `edges[2k+1]`). `edges` may be NULL when
/// `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable `uint32_t` values and
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_new(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut HdGraph,
) -> HdStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<_> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        let g = Graph::new(n as usize, &pairs)
            .map_err(|e| Failure(HdStatus::InvalidGraph, e.to_string()))?;
        emit_graph(out, g)
    })
}

/// The complete graph `K_n`. Never returns NULL.
#[no_mangle]
pub extern "C" fn hd_graph_complete(n: u32) -> *mut HdGraph {
    Box::into_raw(Box::new(HdGraph {
        inner: Graph::complete(n as usize),
    }))
}

/// `n` isolated vertices. Never returns NULL.
#[no_mangle]
pub extern "C" fn hd_graph_edgeless(n: u32) -> *mut HdGraph {
    Box::into_raw(Box::new(HdGraph {
        inner: Graph::edgeless(n as usize),
    }))
}

/// The path on `n >= 1` vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_path(n: u32, out: *mut *mut HdGraph) -> HdStatus {
    guard(|| {
        let g = Graph::path(n as usize).map_err(|e| Failure(HdStatus::InvalidGraph, e.to_string()))?;
        emit_graph(out, g)
    })
}

/// The cycle on `n >= 3` vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_cycle(n: u32, out: *mut *mut HdGraph) -> HdStatus {
    guard(|| {
        let g = Graph::cycle(n as usize).map_err(|e| Failure(HdStatus::InvalidGraph, e.to_string()))?;
        emit_graph(out, g)
    })
}

/// Parses one graph6 record.
///
/// # Safety
/// `text` must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_from_graph6(text: *const c_char, out: *mut *mut HdGraph) -> HdStatus {
    guard(|| {
        let bytes = text_arg(text, "text")?;
        let g = parse_graph6(bytes).map_err(|d| Failure(HdStatus::ParseError, d.to_string()))?;
        emit_graph(out, g)
    })
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_from_edge_list(text: *const c_char, out: *mut *mut HdGraph) -> HdStatus {
    guard(|| {
        let bytes = text_arg(text, "text")?;
        let g = parse_edge_list(bytes).map_err(|d| Failure(HdStatus::ParseError, d.to_string()))?;
        emit_graph(out, g)
    })
}

/// Encodes a graph of at most 62 vertices as graph6.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_to_graph6(g: *const HdGraph, out: *mut *mut c_char) -> HdStatus {
    guard(|| {
        let g = graph_ref(g, "g")?;
        let bytes = write_graph6(g).map_err(|e| Failure(HdStatus::InvalidGraph, e.to_string()))?;
        emit_string(out, String::from_utf8(bytes).expect("graph6 is ASCII"))
    })
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_free(g: *mut HdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_vertex_count(g: *const HdGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.inner.vertex_count() as u32)
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hd_graph_edge_count(g: *const HdGraph) -> u64 {
    g.as_ref().map_or(0, |h| h.inner.edge_count() as u64)
}

/// `|M| = |V(f)|^|V(g)|` as a decimal string.
///
/// # Safety
/// `g` and `f` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_count_mappings(g: *const HdGraph, f: *const HdGraph, out: *mut *mut c_char) -> HdStatus {
    guard(|| {
        let (g, f) = (graph_ref(g, "g")?, graph_ref(f, "f")?);
        emit_string(out, count_mappings(g, f).to_string())
    })
}

/// `|I|`, the number of injective mappings, as a decimal string.
///
/// # Safety
/// `g` and `f` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_count_injective(g: *const HdGraph, f: *const HdGraph, out: *mut *mut c_char) -> HdStatus {
    guard(|| {
        let (g, f) = (graph_ref(g, "g")?, graph_ref(f, "f")?);
        emit_string(out, count_injective(g, f).to_string())
    })
}

/// `|H|` through the dispatched engine. `fast_path` may be NULL.
///
/// # Safety
/// `g` and `f` must be live handles, `out` a valid pointer, `fast_path`
/// NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn hd_count_homomorphisms(
    g: *const HdGraph,
    f: *const HdGraph,
    threads: u32,
    out: *mut *mut c_char,
    fast_path: *mut HdFastPath,
) -> HdStatus {
    guard(|| {
        let (g, f) = (graph_ref(g, "g")?, graph_ref(f, "f")?);
        let config = EngineConfig {
            threads: threads.max(1) as usize,
            ..EngineConfig::default()
        };
        let (count, stats) = count_homomorphisms_with(g, f, &config);
        emit_string(out, count.to_string())?;
        if let Some(slot) = fast_path.as_mut() {
            *slot = stats.fast_path.into();
        }
        Ok(())
    })
}

/// `|H|` by enumerating every mapping; fails with `BudgetExceeded` beyond
/// `budget` mappings.
///
/// # Safety
/// `g` and `f` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_count_homomorphisms_naive(
    g: *const HdGraph,
    f: *const HdGraph,
    budget: u64,
    out: *mut *mut c_char,
) -> HdStatus {
    guard(|| {
        let (g, f) = (graph_ref(g, "g")?, graph_ref(f, "f")?);
        let config = EngineConfig {
            budget,
            ..EngineConfig::default()
        };
        let (count, _) = count_homomorphisms_naive_with(g, f, &config)
            .map_err(|e| Failure(HdStatus::BudgetExceeded, e.to_string()))?;
        emit_string(out, count.to_string())
    })
}

/// `t(g, f)` as a reduced fraction of decimal strings.
///
/// # Safety
/// `g` and `f` must be live handles; `numerator` and `denominator` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hd_density(
    g: *const HdGraph,
    f: *const HdGraph,
    numerator: *mut *mut c_char,
    denominator: *mut *mut c_char,
) -> HdStatus {
    guard(|| {
        let (g, f) = (graph_ref(g, "g")?, graph_ref(f, "f")?);
        if numerator.is_null() || denominator.is_null() {
            return Err(null("output"));
        }
        let t: Density = homdens::density(g, f)?;
        emit_string(numerator, t.numerator().to_string())?;
        if let Err(e) = emit_string(denominator, t.denominator().to_string()) {
            hd_string_free(*numerator);
            *numerator = ptr::null_mut();
            return Err(e);
        }
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
