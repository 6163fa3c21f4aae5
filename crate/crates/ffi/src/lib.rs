//! C interface to `tcl-core`.
//!
//! Graphs and colorings are opaque handles released with their `_free`
//! function. Every call returns a [`TclStatus`]; on failure the message is
//! available from [`tcl_last_error`] on the same thread until the next call.
//! Strings returned by the library are released with [`tcl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tcl_core::coloring::{verify, TotalColoring};
use tcl_core::constructions::{
    block_parameters, odd_graph_total, poc_any_odd, poc_even, unitary_total, ConstructionResult,
};
use tcl_core::families::build_power_of_cycle;
use tcl_core::oracle::total_chromatic_exact;
use tcl_core::search::SearchLimits;
use tcl_core::{Error, Graph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TclStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    ConstructionFailed = 4,
    BudgetExhausted = 5,
    Panic = 6,
}

/// Opaque graph handle.
pub struct TclGraph(Graph);

/// Opaque total coloring handle.
pub struct TclColoring {
    coloring: TotalColoring,
    colors_used: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> TclStatus {
    match e {
        Error::Parse(_) | Error::Json(_) | Error::Csv(_) => TclStatus::Parse,
        Error::ConstructionFailed(_) | Error::NoFactorization { .. } => TclStatus::ConstructionFailed,
        Error::BudgetExhausted { .. } | Error::Cancelled => TclStatus::BudgetExhausted,
        _ => TclStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and panics.
fn guard(f: impl FnOnce() -> Result<(), (TclStatus, String)>) -> TclStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TclStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {message}"));
            TclStatus::Panic
        }
    }
}

fn lift(e: Error) -> (TclStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TclStatus, String) {
    (TclStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (TclStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), (TclStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn coloring_handle(r: ConstructionResult) -> *mut TclColoring {
    Box::into_raw(Box::new(TclColoring {
        coloring: r.coloring,
        colors_used: r.colors_used,
    }))
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn tcl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds `C_n^k`.
///
/// # Safety
/// `out` must be null or point to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn tcl_graph_power_of_cycle(n: usize, k: usize, out: *mut *mut TclGraph) -> TclStatus {
    guard(|| {
        let g = build_power_of_cycle(n, k).map_err(lift)?;
        put(out, Box::into_raw(Box::new(TclGraph(g))), "out")
    })
}

/// Parses a graph from its JSON form `{"n": .., "edges": [[u, v], ..]}`.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out` as above.
#[no_mangle]
pub unsafe extern "C" fn tcl_graph_from_json(json: *const c_char, out: *mut *mut TclGraph) -> TclStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| (TclStatus::Parse, e.to_string()))?;
        let g = Graph::from_json(text).map_err(lift)?;
        put(out, Box::into_raw(Box::new(TclGraph(g))), "out")
    })
}

/// Vertex count, edge count and maximum degree.
///
/// # Safety
/// `graph` must be a live handle or null; outputs must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn tcl_graph_stats(
    graph: *const TclGraph,
    vertices: *mut usize,
    edges: *mut usize,
    max_degree: *mut usize,
) -> TclStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        put(vertices, g.vertex_count(), "vertices")?;
        put(edges, g.edge_count(), "edges")?;
        put(max_degree, g.max_degree(), "max_degree")
    })
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tcl_graph_free(graph: *mut TclGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Colors `C_n^k`: even `n` by the base, block or augment construction, odd
/// `n` from a neighbouring even order.
///
/// # Safety
/// `out` must be null or point to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn tcl_color_power_of_cycle(n: usize, k: usize, out: *mut *mut TclColoring) -> TclStatus {
    guard(|| {
        let r = if n % 2 == 1 {
            poc_any_odd(n, k)
        } else {
            let g = build_power_of_cycle(n, k).map_err(lift)?;
            let method = if n % 4 == 2 && (n - 2) / 4 == k {
                "base"
            } else if block_parameters(n, k).is_some() {
                "block"
            } else {
                "augment"
            };
            poc_even(&g, n, k, method)
        };
        put(out, coloring_handle(r.map_err(lift)?), "out")
    })
}

/// Colors the unitary Cayley graph `X_n` with at most `φ(n) + 2` colors.
///
/// # Safety
/// `out` must be null or point to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn tcl_color_unitary(n: usize, out: *mut *mut TclColoring) -> TclStatus {
    guard(|| put(out, coloring_handle(unitary_total(n).map_err(lift)?), "out"))
}

/// Colors the odd graph `O_m` with at most `m + 2` colors.
///
/// # Safety
/// `out` must be null or point to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn tcl_color_odd_graph(m: usize, out: *mut *mut TclColoring) -> TclStatus {
    guard(|| put(out, coloring_handle(odd_graph_total(m).map_err(lift)?), "out"))
}

/// Number of distinct colors.
///
/// # Safety
/// `coloring` must be a live handle or null; `out` writable or null.
#[no_mangle]
pub unsafe extern "C" fn tcl_coloring_colors_used(coloring: *const TclColoring, out: *mut usize) -> TclStatus {
    guard(|| put(out, deref(coloring, "coloring")?.colors_used, "out"))
}

/// JSON form of the coloring; release with [`tcl_string_free`].
///
/// # Safety
/// `coloring` must be a live handle or null; `out` writable or null.
#[no_mangle]
pub unsafe extern "C" fn tcl_coloring_to_json(coloring: *const TclColoring, out: *mut *mut c_char) -> TclStatus {
    guard(|| {
        let text = deref(coloring, "coloring")?.coloring.to_json();
        let c = CString::new(text).expect("JSON has no NUL bytes");
        put(out, c.into_raw(), "out")
    })
}

/// Parses a coloring from JSON.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out` as above.
#[no_mangle]
pub unsafe extern "C" fn tcl_coloring_from_json(json: *const c_char, out: *mut *mut TclColoring) -> TclStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| (TclStatus::Parse, e.to_string()))?;
        let coloring = TotalColoring::from_json(text).map_err(lift)?;
        let colors_used = coloring.colors_used();
        put(out, Box::into_raw(Box::new(TclColoring { coloring, colors_used })), "out")
    })
}

/// # Safety
/// `coloring` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tcl_coloring_free(coloring: *mut TclColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tcl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks the three total-coloring conditions. `valid` receives 1 or 0 and
/// `violations` the number of violated pairs or missing elements.
///
/// # Safety
/// Handles must be live or null; outputs writable or null.
#[no_mangle]
pub unsafe extern "C" fn tcl_verify(
    graph: *const TclGraph,
    coloring: *const TclColoring,
    valid: *mut i32,
    violations: *mut usize,
) -> TclStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let c = &deref(coloring, "coloring")?.coloring;
        let report = verify(g, c);
        put(valid, report.is_valid as i32, "valid")?;
        put(violations, report.violations.len(), "violations")
    })
}

/// Exact total chromatic number within `budget` search nodes. When the budget
/// runs out the bounds are still written and `BudgetExhausted` is returned.
///
/// # Safety
/// `graph` must be a live handle or null; outputs writable or null.
#[no_mangle]
pub unsafe extern "C" fn tcl_oracle_total(
    graph: *const TclGraph,
    budget: u64,
    lower: *mut usize,
    upper: *mut usize,
) -> TclStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let outcome = total_chromatic_exact(g, &SearchLimits::with_budget(budget));
        put(lower, outcome.lower, "lower")?;
        put(upper, outcome.upper, "upper")?;
        if outcome.budget_hit {
            return Err(lift(Error::BudgetExhausted { budget }));
        }
        Ok(())
    })
}
