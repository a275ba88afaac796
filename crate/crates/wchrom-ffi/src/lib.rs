//! C ABI over the wchrom library: opaque handles, integer status codes, and
//! a thread-local last-error message. The matching header is generated into
//! `include/wchrom.h` when this crate builds.
//!
//! Ownership rules: every `*mut` handle returned through an out-parameter is
//! owned by the caller and must be released with the matching `_free`
//! function; strings returned through out-parameters are released with
//! `wchrom_string_free`. Handles are not thread-safe to mutate concurrently,
//! but all operations here only read them.

use std::cell::RefCell;
use std::collections::HashMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use wchrom::error::WchromError;
use wchrom::graph::{build_family, FamilySpec, Graph};
use wchrom::poly::{parse_rational, MPoly};
use wchrom::{partition, zeros};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WchromStatus {
    /// Success.
    Ok = 0,
    /// Malformed input: family spec, edge list, polynomial, or argument.
    InvalidInput = 1,
    /// The graph exceeds the edge-enumeration cap.
    CapExceeded = 2,
    /// A direct-sum evaluation exceeds its state budget.
    BudgetExceeded = 3,
    /// Numeric failure: degenerate slice or uncertified root residual.
    NumericFailure = 4,
    /// Internal invariant violation (or a caught panic).
    InternalError = 5,
    /// A required pointer argument was null.
    NullPointer = 6,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 7,
    /// The caller-provided buffer is too small; the required size was
    /// written to the length out-parameter.
    BufferTooSmall = 8,
}

/// Opaque graph handle.
#[repr(C)]
pub struct WchromGraph {
    _opaque: [u8; 0],
}

/// Opaque polynomial handle.
#[repr(C)]
pub struct WchromPoly {
    _opaque: [u8; 0],
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).unwrap_or_default();
    });
}

fn status_of(err: &WchromError) -> WchromStatus {
    match err {
        WchromError::InvalidFamily(_)
        | WchromError::EdgeListParse(_)
        | WchromError::PolyParse(_)
        | WchromError::UnboundVariable(_)
        | WchromError::InvalidArgument(_) => WchromStatus::InvalidInput,
        WchromError::EnumerationCap { .. } => WchromStatus::CapExceeded,
        WchromError::BudgetExceeded { .. } => WchromStatus::BudgetExceeded,
        WchromError::DegenerateSlice | WchromError::ResidualCertification { .. } => {
            WchromStatus::NumericFailure
        }
        WchromError::Internal(_) => WchromStatus::InternalError,
    }
}

fn fail(err: &WchromError) -> WchromStatus {
    set_error(&err.to_string());
    status_of(err)
}

fn guard(f: impl FnOnce() -> WchromStatus) -> WchromStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        WchromStatus::InternalError
    })
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, WchromStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(WchromStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        WchromStatus::InvalidUtf8
    })
}

unsafe fn graph_ref<'a>(p: *const WchromGraph) -> Result<&'a Graph, WchromStatus> {
    (p as *const Graph).as_ref().ok_or_else(|| {
        set_error("null graph handle");
        WchromStatus::NullPointer
    })
}

unsafe fn poly_ref<'a>(p: *const WchromPoly) -> Result<&'a MPoly, WchromStatus> {
    (p as *const MPoly).as_ref().ok_or_else(|| {
        set_error("null polynomial handle");
        WchromStatus::NullPointer
    })
}

fn emit_graph(g: Graph, out: *mut *mut WchromGraph) -> WchromStatus {
    if out.is_null() {
        set_error("null out-parameter");
        return WchromStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(g)) as *mut WchromGraph };
    WchromStatus::Ok
}

fn emit_poly(p: MPoly, out: *mut *mut WchromPoly) -> WchromStatus {
    if out.is_null() {
        set_error("null out-parameter");
        return WchromStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(p)) as *mut WchromPoly };
    WchromStatus::Ok
}

fn emit_string(s: String, out: *mut *mut c_char) -> WchromStatus {
    if out.is_null() {
        set_error("null out-parameter");
        return WchromStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            WchromStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL byte");
            WchromStatus::InternalError
        }
    }
}

/// Library version as a static string; never freed by the caller.
#[no_mangle]
pub extern "C" fn wchrom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread; never freed by the
/// caller.
#[no_mangle]
pub extern "C" fn wchrom_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Default edge-enumeration cap (after the WCHROM_CAP environment override).
#[no_mangle]
pub extern "C" fn wchrom_default_cap() -> usize {
    Graph::effective_cap(None)
}

/// Build a graph from a family spec such as "C:5", "K:4", or "sqcyc:2x4".
#[no_mangle]
pub extern "C" fn wchrom_graph_from_family(
    spec: *const c_char,
    out: *mut *mut WchromGraph,
) -> WchromStatus {
    guard(|| {
        let text = match unsafe { read_str(spec) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        match FamilySpec::parse(text).and_then(|f| build_family(&f)) {
            Ok(g) => emit_graph(g, out),
            Err(e) => fail(&e),
        }
    })
}

/// Parse the edge-list text format: `n m` header, then one `u v` line per
/// edge; `#` comments and blank lines are ignored.
#[no_mangle]
pub extern "C" fn wchrom_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut WchromGraph,
) -> WchromStatus {
    guard(|| {
        let text = match unsafe { read_str(text) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Graph::parse_edge_list(text) {
            Ok(g) => emit_graph(g, out),
            Err(e) => fail(&e),
        }
    })
}

/// Vertex count, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn wchrom_graph_vertex_count(g: *const WchromGraph) -> usize {
    unsafe { graph_ref(g) }.map(|g| g.n()).unwrap_or(0)
}

/// Edge count (loops and parallel edges included), or 0 for a null handle.
#[no_mangle]
pub extern "C" fn wchrom_graph_edge_count(g: *const WchromGraph) -> usize {
    unsafe { graph_ref(g) }.map(|g| g.edge_count()).unwrap_or(0)
}

/// Release a graph handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn wchrom_graph_free(g: *mut WchromGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g as *mut Graph) });
    }
}

fn cap_of(cap: usize) -> Option<usize> {
    if cap == 0 {
        None
    } else {
        Some(cap)
    }
}

/// Field-weighted proper-coloring polynomial in (q, w). `cap` of 0 means the
/// default edge-enumeration cap.
#[no_mangle]
pub extern "C" fn wchrom_ph(
    g: *const WchromGraph,
    cap: usize,
    out: *mut *mut WchromPoly,
) -> WchromStatus {
    guard(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(g) => g,
            Err(s) => return s,
        };
        match partition::ph_capped(graph, cap_of(cap)) {
            Ok(p) => emit_poly(p, out),
            Err(e) => fail(&e),
        }
    })
}

/// Full partition function in (q, v, w). `cap` of 0 means the default cap.
#[no_mangle]
pub extern "C" fn wchrom_potts_z(
    g: *const WchromGraph,
    cap: usize,
    out: *mut *mut WchromPoly,
) -> WchromStatus {
    guard(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(g) => g,
            Err(s) => return s,
        };
        match partition::potts_z_capped(graph, cap_of(cap)) {
            Ok(p) => emit_poly(p, out),
            Err(e) => fail(&e),
        }
    })
}

/// Zero-field chromatic polynomial in q.
#[no_mangle]
pub extern "C" fn wchrom_chromatic(
    g: *const WchromGraph,
    out: *mut *mut WchromPoly,
) -> WchromStatus {
    guard(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(g) => g,
            Err(s) => return s,
        };
        match partition::chromatic(graph) {
            Ok(p) => emit_poly(p, out),
            Err(e) => fail(&e),
        }
    })
}

/// Canonical text form of a polynomial; release with wchrom_string_free.
#[no_mangle]
pub extern "C" fn wchrom_poly_canonical(
    p: *const WchromPoly,
    out: *mut *mut c_char,
) -> WchromStatus {
    guard(|| {
        let poly = match unsafe { poly_ref(p) } {
            Ok(p) => p,
            Err(s) => return s,
        };
        emit_string(poly.to_canonical_string(), out)
    })
}

/// Exact evaluation at rational points. `bindings` looks like
/// "q=2,v=-1,w=1/3"; the result is the exact rational rendered as text.
#[no_mangle]
pub extern "C" fn wchrom_poly_eval(
    p: *const WchromPoly,
    bindings: *const c_char,
    out: *mut *mut c_char,
) -> WchromStatus {
    guard(|| {
        let poly = match unsafe { poly_ref(p) } {
            Ok(p) => p,
            Err(s) => return s,
        };
        let text = match unsafe { read_str(bindings) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let mut map = HashMap::new();
        for part in text.split(',').filter(|t| !t.trim().is_empty()) {
            let Some((name, value)) = part.split_once('=') else {
                return fail(&WchromError::InvalidArgument(format!(
                    "binding must look like var=value, got `{part}`"
                )));
            };
            match parse_rational(value) {
                Ok(r) => map.insert(name.trim().to_string(), r),
                Err(e) => return fail(&e),
            };
        }
        match poly.eval_rational(&map) {
            Ok(v) => emit_string(v.to_string(), out),
            Err(e) => fail(&e),
        }
    })
}

/// Degree in the named variable, or -1 on error.
#[no_mangle]
pub extern "C" fn wchrom_poly_degree(p: *const WchromPoly, var: *const c_char) -> i32 {
    let Ok(poly) = (unsafe { poly_ref(p) }) else {
        return -1;
    };
    let Ok(name) = (unsafe { read_str(var) }) else {
        return -1;
    };
    i32::from(poly.degree_in(name))
}

/// Number of monomials, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn wchrom_poly_term_count(p: *const WchromPoly) -> usize {
    unsafe { poly_ref(p) }.map(|p| p.term_count()).unwrap_or(0)
}

/// Release a polynomial handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn wchrom_poly_free(p: *mut WchromPoly) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p as *mut MPoly) });
    }
}

/// Release a string returned through an out-parameter. Null is a no-op.
#[no_mangle]
pub extern "C" fn wchrom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Direct coloring-sum evaluation (the independent oracle). `v` and `w` are
/// rational texts such as "-1" or "1/3"; the exact result is rendered as
/// text into `out`.
#[no_mangle]
pub extern "C" fn wchrom_oracle(
    g: *const WchromGraph,
    q: u32,
    v: *const c_char,
    w: *const c_char,
    out: *mut *mut c_char,
) -> WchromStatus {
    guard(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(g) => g,
            Err(s) => return s,
        };
        let (v, w) = match (unsafe { read_str(v) }, unsafe { read_str(w) }) {
            (Ok(v), Ok(w)) => (v, w),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let (v, w) = match (parse_rational(v), parse_rational(w)) {
            (Ok(v), Ok(w)) => (v, w),
            (Err(e), _) | (_, Err(e)) => return fail(&e),
        };
        match partition::brute_force_z(graph, q, &v, &w) {
            Ok(z) => emit_string(z.to_string(), out),
            Err(e) => fail(&e),
        }
    })
}

/// Certified zeros of a one-variable slice of a (q, w) polynomial. Fix
/// `fix_var` ("q" or "w") at the rational `fix_value`; zeros are taken in
/// the other variable and written, sorted by (re, im), into the caller's
/// arrays. On BufferTooSmall the required length is in `out_count`.
#[no_mangle]
pub extern "C" fn wchrom_roots(
    p: *const WchromPoly,
    fix_var: *const c_char,
    fix_value: *const c_char,
    out_re: *mut f64,
    out_im: *mut f64,
    out_mult: *mut u32,
    capacity: usize,
    out_count: *mut usize,
) -> WchromStatus {
    guard(|| {
        let poly = match unsafe { poly_ref(p) } {
            Ok(p) => p,
            Err(s) => return s,
        };
        if out_count.is_null() {
            set_error("null out_count");
            return WchromStatus::NullPointer;
        }
        let var = match unsafe { read_str(fix_var) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let keep = match var {
            "w" => "q",
            "q" => "w",
            other => {
                return fail(&WchromError::InvalidArgument(format!(
                    "zeros are taken in q or w; cannot fix `{other}`"
                )))
            }
        };
        let value = match unsafe { read_str(fix_value) }.map(|t| parse_rational(t)) {
            Ok(Ok(r)) => r,
            Ok(Err(e)) => return fail(&e),
            Err(s) => return s,
        };
        let mut fixed = HashMap::new();
        fixed.insert(var.to_string(), value);
        let slice = match poly.slice(keep, &fixed) {
            Ok(s) => s,
            Err(e) => return fail(&e),
        };
        let roots = match zeros::roots(&slice) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        unsafe { *out_count = roots.len() };
        if roots.len() > capacity {
            set_error("root buffer too small");
            return WchromStatus::BufferTooSmall;
        }
        if (out_re.is_null() || out_im.is_null() || out_mult.is_null()) && !roots.is_empty() {
            set_error("null root buffer");
            return WchromStatus::NullPointer;
        }
        for (i, r) in roots.iter().enumerate() {
            unsafe {
                *out_re.add(i) = r.value.re;
                *out_im.add(i) = r.value.im;
                *out_mult.add(i) = r.multiplicity as u32;
            }
        }
        WchromStatus::Ok
    })
}
