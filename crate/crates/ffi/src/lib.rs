//! C ABI over the antidim core: opaque graph handles, integer error codes
//! and caller-owned buffers, so other languages can bind without touching
//! Rust types.
//!
//! Conventions:
//! * every fallible call returns [`AntidimStatus`]; out-parameters are only
//!   written on `Ok`;
//! * graphs are opaque [`AntidimGraph`] pointers freed with
//!   [`antidim_graph_free`];
//! * strings returned through `char **` are owned by the library and freed
//!   with [`antidim_string_free`];
//! * [`antidim_last_error_message`] gives a thread-local detail for the most
//!   recent failure, valid until the next failing call on that thread;
//! * `ANTIDIM_UNBOUNDED` (`UINT64_MAX`) selects the solver's default search
//!   bound, `threads = 0` the machine default.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use antidim::antiresolution::{k_of, Semantics};
use antidim::closed::{family_adim, family_anonymity, kappa_closed, AdimValue};
use antidim::families::{build_family, FamilySpec};
use antidim::graph::Graph;
use antidim::ilp::{build_exactness_extension, build_f, build_fa, emit_lp};
use antidim::instances::{generate, render_instance, GenClass, GenSpec};
use antidim::solver::{default_threads, kappa, solve_kmad_threaded, KappaOutcome, SolveStatus};

/// Pass as `bound` to use the solver's default cardinality bound.
pub const ANTIDIM_UNBOUNDED: u64 = u64::MAX;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let cleaned: Vec<u8> = msg.bytes().filter(|&b| b != 0).collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).unwrap_or_default();
    });
}

/// Result codes shared by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntidimStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    Disconnected = 4,
    InvalidK = 5,
    BufferTooSmall = 6,
    GenerationFailed = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntidimSemantics {
    Exact = 0,
    AtLeast = 1,
}

impl From<AntidimSemantics> for Semantics {
    fn from(v: AntidimSemantics) -> Semantics {
        match v {
            AntidimSemantics::Exact => Semantics::Exact,
            AntidimSemantics::AtLeast => Semantics::AtLeast,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntidimFamily {
    Grid = 0,
    Cylinder = 1,
    Torus = 2,
    Hamming2 = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntidimGenClass {
    Tree = 0,
    Sparse = 1,
    Dense = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntidimVariant {
    F = 0,
    Fa = 1,
    Fx = 2,
}

/// How a solve ended.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntidimSolveState {
    Optimal = 0,
    Infeasible = 1,
    Unknown = 2,
}

/// Solve outcome; `cardinality` and the witness buffer are meaningful only
/// in the `Optimal` state.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct AntidimSolveResult {
    pub state: AntidimSolveState,
    pub cardinality: u64,
    pub explored_bound: u64,
    pub witness_len: u64,
}

/// Opaque graph handle.
pub struct AntidimGraph {
    inner: Graph,
}

fn family_spec(kind: AntidimFamily, r: u64, s: u64) -> Result<FamilySpec, String> {
    let (r, s) = (r as usize, s as usize);
    let built = match kind {
        AntidimFamily::Grid => FamilySpec::grid(r, s),
        AntidimFamily::Cylinder => FamilySpec::cylinder(r, s),
        AntidimFamily::Torus => FamilySpec::torus(r, s),
        AntidimFamily::Hamming2 => FamilySpec::hamming2(r),
    };
    built.map_err(|e| e.to_string())
}

fn gen_spec(class: AntidimGenClass, n: u64, delta: u64, seed: u64) -> GenSpec {
    let class = match class {
        AntidimGenClass::Tree => GenClass::Tree,
        AntidimGenClass::Sparse => GenClass::Sparse,
        AntidimGenClass::Dense => GenClass::Dense,
    };
    GenSpec {
        class,
        n: n as usize,
        delta: delta as usize,
        seed,
    }
}

/// Runs a closure, converting panics into `Internal` instead of unwinding
/// across the C boundary.
fn guarded<F: FnOnce() -> AntidimStatus>(f: F) -> AntidimStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            AntidimStatus::Internal
        }
    }
}

fn hand_out(graph: Graph, out: *mut *mut AntidimGraph) -> AntidimStatus {
    let boxed = Box::new(AntidimGraph { inner: graph });
    unsafe { *out = Box::into_raw(boxed) };
    AntidimStatus::Ok
}

/// Builds a graph from `edge_count` vertex pairs laid out `u0 v0 u1 v1 ...`
/// (1-indexed). `edges` may be null when `edge_count` is zero.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable u64 values and `out` to a
/// writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_from_edges(
    n: u64,
    edges: *const u64,
    edge_count: u64,
    out: *mut *mut AntidimGraph,
) -> AntidimStatus {
    if out.is_null() || (edges.is_null() && edge_count > 0) {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let pairs: Vec<(usize, usize)> = (0..edge_count as usize)
            .map(|i| unsafe { (*edges.add(2 * i) as usize, *edges.add(2 * i + 1) as usize) })
            .collect();
        match Graph::from_edge_list(n as usize, &pairs) {
            Ok(g) => hand_out(g, out),
            Err(e) => {
                set_error(&e.to_string());
                AntidimStatus::InvalidGraph
            }
        }
    })
}

/// Builds a product-family graph (`s` is ignored for `Hamming2`).
///
/// # Safety
/// `out` must point to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_from_family(
    kind: AntidimFamily,
    r: u64,
    s: u64,
    out: *mut *mut AntidimGraph,
) -> AntidimStatus {
    if out.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        match family_spec(kind, r, s)
            .and_then(|spec| build_family(&spec).map_err(|e| e.to_string()))
        {
            Ok(g) => hand_out(g, out),
            Err(msg) => {
                set_error(&msg);
                AntidimStatus::InvalidArgument
            }
        }
    })
}

/// Parses the edge-list text format (`n m` header, `u v` lines, `#`
/// comments).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_parse(
    text: *const c_char,
    out: *mut *mut AntidimGraph,
) -> AntidimStatus {
    if text.is_null() || out.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let text = match unsafe { CStr::from_ptr(text) }.to_str() {
            Ok(t) => t,
            Err(_) => {
                set_error("edge list text is not valid UTF-8");
                return AntidimStatus::InvalidArgument;
            }
        };
        match Graph::parse_edge_list(text) {
            Ok(g) => hand_out(g, out),
            Err(e) => {
                set_error(&e.to_string());
                AntidimStatus::InvalidGraph
            }
        }
    })
}

/// Generates a seeded random instance and returns it as a graph handle.
///
/// # Safety
/// `out` must point to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_generate(
    class: AntidimGenClass,
    n: u64,
    delta: u64,
    seed: u64,
    out: *mut *mut AntidimGraph,
) -> AntidimStatus {
    if out.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| match generate(&gen_spec(class, n, delta, seed)) {
        Ok(g) => hand_out(g, out),
        Err(e) => {
            set_error(&e.to_string());
            AntidimStatus::GenerationFailed
        }
    })
}

/// Frees a graph handle; null is a no-op.
///
/// # Safety
/// `g` must be null or a pointer previously returned by a graph constructor
/// and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_free(g: *mut AntidimGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_vertex_count(g: *const AntidimGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    unsafe { &*g }.inner.vertex_count() as u64
}

/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_edge_count(g: *const AntidimGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    unsafe { &*g }.inner.edge_count() as u64
}

/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_max_degree(g: *const AntidimGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    unsafe { &*g }.inner.max_degree() as u64
}

/// # Safety
/// `g` must be a live graph handle or null (returns false).
#[no_mangle]
pub unsafe extern "C" fn antidim_graph_is_connected(g: *const AntidimGraph) -> bool {
    if g.is_null() {
        return false;
    }
    unsafe { &*g }.inner.is_connected()
}

/// Searches for a minimum k-antiresolving set. The witness vertices (up to
/// `witness_cap`) are written to `witness` when the state is `Optimal`;
/// pass a buffer of `n` entries to be safe.
///
/// # Safety
/// `g` must be a live handle, `result` writable, and `witness` must point
/// to `witness_cap` writable u64 values (null allowed when the cap is 0).
#[no_mangle]
pub unsafe extern "C" fn antidim_solve(
    g: *const AntidimGraph,
    k: u64,
    semantics: AntidimSemantics,
    bound: u64,
    threads: u64,
    witness: *mut u64,
    witness_cap: u64,
    result: *mut AntidimSolveResult,
) -> AntidimStatus {
    if g.is_null() || result.is_null() || (witness.is_null() && witness_cap > 0) {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let graph = &unsafe { &*g }.inner;
        let bound = if bound == ANTIDIM_UNBOUNDED {
            None
        } else {
            Some(bound as usize)
        };
        let threads = if threads == 0 {
            default_threads()
        } else {
            threads as usize
        };
        let outcome = match solve_kmad_threaded(graph, k as usize, semantics.into(), bound, threads)
        {
            Ok(outcome) => outcome,
            Err(e) => {
                let status = match e {
                    antidim::solver::SolveError::InvalidK => AntidimStatus::InvalidK,
                    antidim::solver::SolveError::Graph(_) => AntidimStatus::Disconnected,
                };
                set_error(&e.to_string());
                return status;
            }
        };
        let mut packed = AntidimSolveResult {
            state: AntidimSolveState::Unknown,
            cardinality: 0,
            explored_bound: outcome.explored_bound as u64,
            witness_len: 0,
        };
        match &outcome.status {
            SolveStatus::Optimal {
                cardinality,
                witness: set,
            } => {
                if set.len() as u64 > witness_cap {
                    set_error("witness buffer too small");
                    return AntidimStatus::BufferTooSmall;
                }
                for (i, &v) in set.iter().enumerate() {
                    unsafe { *witness.add(i) = v as u64 };
                }
                packed.state = AntidimSolveState::Optimal;
                packed.cardinality = *cardinality as u64;
                packed.witness_len = set.len() as u64;
            }
            SolveStatus::InfeasibleProven => packed.state = AntidimSolveState::Infeasible,
            SolveStatus::UnknownUpToBound => packed.state = AntidimSolveState::Unknown,
        }
        unsafe { *result = packed };
        AntidimStatus::Ok
    })
}

/// Metric antidimensionality. `*out_exact` tells whether the value is
/// certified or only a lower bound for the explored cardinalities.
///
/// # Safety
/// `g` must be a live handle; `out_value` and `out_exact` writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_kappa(
    g: *const AntidimGraph,
    bound: u64,
    out_value: *mut u64,
    out_exact: *mut bool,
) -> AntidimStatus {
    if g.is_null() || out_value.is_null() || out_exact.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let graph = &unsafe { &*g }.inner;
        let bound = if bound == ANTIDIM_UNBOUNDED {
            None
        } else {
            Some(bound as usize)
        };
        match kappa(graph, bound) {
            Ok(KappaOutcome::Exact(v)) => {
                unsafe {
                    *out_value = v as u64;
                    *out_exact = true;
                }
                AntidimStatus::Ok
            }
            Ok(KappaOutcome::UnknownUpToBound { best_found, .. }) => {
                unsafe {
                    *out_value = best_found as u64;
                    *out_exact = false;
                }
                AntidimStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AntidimStatus::Disconnected
            }
        }
    })
}

/// Minimum equivalence-class size induced by a subject set (1-indexed).
///
/// # Safety
/// `g` must be a live handle, `set` must point to `set_len` readable u64
/// values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_k_of(
    g: *const AntidimGraph,
    set: *const u64,
    set_len: u64,
    out: *mut u64,
) -> AntidimStatus {
    if g.is_null() || set.is_null() || out.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let graph = &unsafe { &*g }.inner;
        let subject: Vec<usize> = (0..set_len as usize)
            .map(|i| unsafe { *set.add(i) } as usize)
            .collect();
        let dm = match graph.all_pairs_distances() {
            Ok(dm) => dm,
            Err(e) => {
                set_error(&e.to_string());
                return AntidimStatus::Disconnected;
            }
        };
        match k_of(&dm, &subject) {
            Ok(v) => {
                unsafe { *out = v as u64 };
                AntidimStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                AntidimStatus::InvalidArgument
            }
        }
    })
}

/// Closed-form k-metric antidimension of a product family. On success
/// either `*out_infinite` is set or `*out_value` holds the finite value.
///
/// # Safety
/// `out_value` and `out_infinite` must be writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_closed_adim(
    kind: AntidimFamily,
    r: u64,
    s: u64,
    k: u64,
    out_value: *mut u64,
    out_infinite: *mut bool,
) -> AntidimStatus {
    if out_value.is_null() || out_infinite.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let spec = match family_spec(kind, r, s) {
            Ok(spec) => spec,
            Err(msg) => {
                set_error(&msg);
                return AntidimStatus::InvalidArgument;
            }
        };
        match family_adim(&spec, k as usize) {
            Ok(AdimValue::Finite(v)) => unsafe {
                *out_value = v as u64;
                *out_infinite = false;
                AntidimStatus::Ok
            },
            Ok(AdimValue::Infinite) => unsafe {
                *out_value = 0;
                *out_infinite = true;
                AntidimStatus::Ok
            },
            Err(e) => {
                set_error(&e.to_string());
                AntidimStatus::InvalidK
            }
        }
    })
}

/// Closed-form metric antidimensionality of a product family.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_closed_kappa(
    kind: AntidimFamily,
    r: u64,
    s: u64,
    out: *mut u64,
) -> AntidimStatus {
    if out.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        match family_spec(kind, r, s)
            .and_then(|spec| kappa_closed(&spec).map_err(|e| e.to_string()))
        {
            Ok(v) => {
                unsafe { *out = v as u64 };
                AntidimStatus::Ok
            }
            Err(msg) => {
                set_error(&msg);
                AntidimStatus::InvalidArgument
            }
        }
    })
}

/// Smallest privacy threshold k whose antidimension is at most `ell`;
/// `*out_found` is false when no such k exists.
///
/// # Safety
/// `out_k` and `out_found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_closed_anonymity(
    kind: AntidimFamily,
    r: u64,
    s: u64,
    ell: u64,
    out_k: *mut u64,
    out_found: *mut bool,
) -> AntidimStatus {
    if out_k.is_null() || out_found.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let spec = match family_spec(kind, r, s) {
            Ok(spec) => spec,
            Err(msg) => {
                set_error(&msg);
                return AntidimStatus::InvalidArgument;
            }
        };
        match family_anonymity(&spec, ell as usize) {
            Ok(res) => unsafe {
                *out_found = res.k.is_some();
                *out_k = res.k.unwrap_or(0) as u64;
                AntidimStatus::Ok
            },
            Err(e) => {
                set_error(&e.to_string());
                AntidimStatus::InvalidArgument
            }
        }
    })
}

/// Renders the chosen model as LP text; free the string with
/// [`antidim_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_lp_emit(
    g: *const AntidimGraph,
    k: u64,
    variant: AntidimVariant,
    out: *mut *mut c_char,
) -> AntidimStatus {
    if g.is_null() || out.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| {
        let graph = &unsafe { &*g }.inner;
        let dm = match graph.all_pairs_distances() {
            Ok(dm) => dm,
            Err(e) => {
                set_error(&e.to_string());
                return AntidimStatus::Disconnected;
            }
        };
        let model = match variant {
            AntidimVariant::F => build_f(&dm, k as usize),
            AntidimVariant::Fa => build_fa(&dm, k as usize),
            AntidimVariant::Fx => build_fa(&dm, k as usize).map(|m| build_exactness_extension(&m)),
        };
        match model {
            Ok(model) => {
                let text = emit_lp(&model);
                match CString::new(text) {
                    Ok(cstr) => {
                        unsafe { *out = cstr.into_raw() };
                        AntidimStatus::Ok
                    }
                    Err(_) => {
                        set_error("LP text contained an interior NUL");
                        AntidimStatus::Internal
                    }
                }
            }
            Err(e) => {
                set_error(&e.to_string());
                AntidimStatus::InvalidK
            }
        }
    })
}

/// Renders a seeded instance as edge-list text (with its header comment);
/// free with [`antidim_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn antidim_render_instance(
    class: AntidimGenClass,
    n: u64,
    delta: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> AntidimStatus {
    if out.is_null() {
        set_error("null pointer argument");
        return AntidimStatus::NullPointer;
    }
    guarded(|| match render_instance(&gen_spec(class, n, delta, seed)) {
        Ok(text) => match CString::new(text) {
            Ok(cstr) => {
                unsafe { *out = cstr.into_raw() };
                AntidimStatus::Ok
            }
            Err(_) => {
                set_error("instance text contained an interior NUL");
                AntidimStatus::Internal
            }
        },
        Err(e) => {
            set_error(&e.to_string());
            AntidimStatus::GenerationFailed
        }
    })
}

/// Frees a string returned by this library; null is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn antidim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn antidim_status_message(status: AntidimStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        AntidimStatus::Ok => b"ok\0",
        AntidimStatus::NullPointer => b"null pointer argument\0",
        AntidimStatus::InvalidArgument => b"invalid argument\0",
        AntidimStatus::InvalidGraph => b"invalid graph\0",
        AntidimStatus::Disconnected => b"graph is disconnected\0",
        AntidimStatus::InvalidK => b"invalid k\0",
        AntidimStatus::BufferTooSmall => b"buffer too small\0",
        AntidimStatus::GenerationFailed => b"instance generation failed\0",
        AntidimStatus::Internal => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}

/// Thread-local detail for the most recent failure on this thread; valid
/// until the next failing call.
#[no_mangle]
pub extern "C" fn antidim_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}
