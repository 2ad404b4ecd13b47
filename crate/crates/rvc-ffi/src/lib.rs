//! C ABI over the rainbow vertex coloring toolkit.
//!
//! All functions exchange opaque handles created and freed here. Inputs
//! use the same plain-text formats as the `rvc` command-line tool.
//! Functions that can fail return an [`RvcStatus`]; the most recent error
//! message is kept per thread and readable via [`rvc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use rvc_core::error::Error;
use rvc_core::gadget::build_split_gadget;
use rvc_core::graph::Graph;
use rvc_core::io;
use rvc_core::oracle::{
    check_rainbow_with, check_strong_rainbow_with, exact_rvc_with, exact_srvc_with, OracleConfig,
    RainbowOutcome, VertexColoring,
};
use rvc_core::perm::{color_permutation, rainbow_witness, PermutationModel};
use rvc_core::splitsc::color_split_strongly_chordal;
use rvc_core::treepow::{color_tree_itself, color_tree_power, Tree};

/// Status codes mirroring the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum RvcStatus {
    Ok = 0,
    InvalidInput = 1,
    NotInClass = 2,
    VerificationFailed = 3,
    Inconclusive = 4,
    NullArgument = 5,
}

/// Opaque undirected graph handle.
pub struct RvcGraph(Graph);
/// Opaque permutation model handle.
pub struct RvcModel(PermutationModel);
/// Opaque tree-plus-exponent handle.
pub struct RvcTreePower(Tree, usize);
/// Opaque vertex coloring handle.
pub struct RvcColoring(VertexColoring);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = sanitized);
}

fn status_for(e: &Error) -> RvcStatus {
    match e {
        Error::NotSplit | Error::NotStronglyChordal | Error::NotConnected | Error::UseTreeItself => {
            RvcStatus::NotInClass
        }
        Error::OracleCapExceeded(..)
        | Error::ExactCapExceeded(..)
        | Error::Inconclusive(_)
        | Error::GenerationFailed(_) => RvcStatus::Inconclusive,
        _ => RvcStatus::InvalidInput,
    }
}

fn fail(e: &Error) -> RvcStatus {
    set_error(&e.to_string());
    status_for(e)
}

/// # Safety
/// `text` must be a valid NUL-terminated C string.
unsafe fn text_arg<'a>(text: *const c_char) -> Result<&'a str, RvcStatus> {
    if text.is_null() {
        set_error("null text argument");
        return Err(RvcStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("text argument is not valid UTF-8");
        RvcStatus::InvalidInput
    })
}

fn require<'a, T>(ptr: *const T) -> Result<&'a T, RvcStatus> {
    if ptr.is_null() {
        set_error("null handle argument");
        Err(RvcStatus::NullArgument)
    } else {
        Ok(unsafe { &*ptr })
    }
}

fn give<T>(out: *mut *mut T, value: T) -> RvcStatus {
    if out.is_null() {
        set_error("null output argument");
        return RvcStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    RvcStatus::Ok
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rvc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a `graph <n> <m>` text into a graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_parse(text: *const c_char, out: *mut *mut RvcGraph) -> RvcStatus {
    let text = match text_arg(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match io::parse_graph(text) {
        Ok(g) => give(out, RvcGraph(g)),
        Err(e) => fail(&e),
    }
}

/// # Safety
/// `g` must be a pointer previously returned by this library, not yet
/// freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_free(g: *mut RvcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_vertex_count(g: *const RvcGraph) -> usize {
    require(g).map_or(0, |g| g.0.n())
}

/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_edge_count(g: *const RvcGraph) -> usize {
    require(g).map_or(0, |g| g.0.edge_count())
}

/// Writes the diameter to `out`; fails on disconnected graphs.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_diameter(g: *const RvcGraph, out: *mut usize) -> RvcStatus {
    let g = match require(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output argument");
        return RvcStatus::NullArgument;
    }
    match g.0.diameter() {
        Ok(d) => {
            unsafe { *out = d };
            RvcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Writes the number of cut vertices to `out`.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_graph_cut_vertex_count(g: *const RvcGraph, out: *mut usize) -> RvcStatus {
    let g = match require(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output argument");
        return RvcStatus::NullArgument;
    }
    match g.0.cut_vertices() {
        Ok(c) => {
            unsafe { *out = c.len() };
            RvcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Parses a `perm <n>` model text.
///
/// # Safety
/// As [`rvc_graph_parse`].
#[no_mangle]
pub unsafe extern "C" fn rvc_model_parse(text: *const c_char, out: *mut *mut RvcModel) -> RvcStatus {
    let text = match text_arg(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match io::parse_model(text) {
        Ok(m) => give(out, RvcModel(m)),
        Err(e) => fail(&e),
    }
}

/// # Safety
/// As [`rvc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn rvc_model_free(m: *mut RvcModel) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_model_vertex_count(m: *const RvcModel) -> usize {
    require(m).map_or(0, |m| m.0.n())
}

/// The permutation graph induced by a model.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_model_to_graph(m: *const RvcModel, out: *mut *mut RvcGraph) -> RvcStatus {
    match require(m) {
        Ok(m) => give(out, RvcGraph(m.0.to_graph())),
        Err(s) => s,
    }
}

/// Optimal rainbow vertex coloring of a permutation graph given its model.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_color_permutation(
    m: *const RvcModel,
    out: *mut *mut RvcColoring,
) -> RvcStatus {
    let m = match require(m) {
        Ok(m) => m,
        Err(s) => return s,
    };
    match color_permutation(&m.0) {
        Ok(c) => give(out, RvcColoring(c)),
        Err(e) => fail(&e),
    }
}

/// Parses a `treepow <n> <k>` text.
///
/// # Safety
/// As [`rvc_graph_parse`].
#[no_mangle]
pub unsafe extern "C" fn rvc_tree_power_parse(
    text: *const c_char,
    out: *mut *mut RvcTreePower,
) -> RvcStatus {
    let text = match text_arg(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match io::parse_treepow(text) {
        Ok((t, k)) => give(out, RvcTreePower(t, k)),
        Err(e) => fail(&e),
    }
}

/// # Safety
/// As [`rvc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn rvc_tree_power_free(t: *mut RvcTreePower) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// The graph `T^k` of a tree-power handle.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_tree_power_graph(
    t: *const RvcTreePower,
    out: *mut *mut RvcGraph,
) -> RvcStatus {
    let t = match require(t) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match t.0.power(t.1) {
        Ok(g) => give(out, RvcGraph(g)),
        Err(e) => fail(&e),
    }
}

/// Optimal rainbow vertex coloring of `T^k` (the tree coloring for k = 1).
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_color_tree_power(
    t: *const RvcTreePower,
    out: *mut *mut RvcColoring,
) -> RvcStatus {
    let t = match require(t) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let coloring = if t.1 == 1 {
        Ok(color_tree_itself(&t.0))
    } else {
        color_tree_power(&t.0, t.1)
    };
    match coloring {
        Ok(c) => give(out, RvcColoring(c)),
        Err(e) => fail(&e),
    }
}

/// Optimal strong rainbow vertex coloring of a split strongly chordal
/// graph; rejects anything outside the class.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_color_split_strongly_chordal(
    g: *const RvcGraph,
    out: *mut *mut RvcColoring,
) -> RvcStatus {
    let g = match require(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    match color_split_strongly_chordal(&g.0) {
        Ok(c) => give(out, RvcColoring(c)),
        Err(e) => fail(&e),
    }
}

/// Builds the split-graph reduction gadget of a source graph.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_build_split_gadget(
    g: *const RvcGraph,
    out: *mut *mut RvcGraph,
) -> RvcStatus {
    match require(g) {
        Ok(g) => give(out, RvcGraph(build_split_gadget(&g.0).graph().clone())),
        Err(s) => s,
    }
}

/// # Safety
/// As [`rvc_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_free(c: *mut RvcColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of distinct colors actually used.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_color_count(c: *const RvcColoring) -> usize {
    require(c).map_or(0, |c| c.0.distinct_color_count())
}

/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_vertex_count(c: *const RvcColoring) -> usize {
    require(c).map_or(0, |c| c.0.len())
}

/// Color of a 0-indexed vertex (colors are 1-based); 0 on bad arguments.
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_color_of(c: *const RvcColoring, vertex: usize) -> usize {
    match require(c) {
        Ok(c) if vertex < c.0.len() => c.0.color(vertex),
        _ => 0,
    }
}

/// Serializes a coloring into a newly allocated string; free it with
/// [`rvc_string_free`].
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_coloring_to_text(c: *const RvcColoring, out: *mut *mut c_char) -> RvcStatus {
    let c = match require(c) {
        Ok(c) => c,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output argument");
        return RvcStatus::NullArgument;
    }
    match CString::new(io::serialize_coloring(&c.0)) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            RvcStatus::Ok
        }
        Err(_) => {
            set_error("serialized coloring contained an interior NUL");
            RvcStatus::InvalidInput
        }
    }
}

/// # Safety
/// `s` must originate from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rvc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks rainbow (or strong rainbow) vertex connectivity.
///
/// On success `*ok` says whether the coloring verifies; when it does not,
/// `*fail_u` / `*fail_v` carry the first failing pair (0-indexed).
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_verify(
    g: *const RvcGraph,
    c: *const RvcColoring,
    strong: bool,
    ok: *mut bool,
    fail_u: *mut usize,
    fail_v: *mut usize,
) -> RvcStatus {
    let g = match require(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let c = match require(c) {
        Ok(c) => c,
        Err(s) => return s,
    };
    if ok.is_null() {
        set_error("null output argument");
        return RvcStatus::NullArgument;
    }
    let cfg = OracleConfig {
        verify_color_cap: 64,
        ..OracleConfig::default()
    };
    let outcome = if strong {
        check_strong_rainbow_with(&g.0, &c.0, &cfg)
    } else {
        check_rainbow_with(&g.0, &c.0, &cfg)
    };
    match outcome {
        Ok(RainbowOutcome::Rainbow(_)) => {
            unsafe { *ok = true };
            RvcStatus::Ok
        }
        Ok(RainbowOutcome::NotRainbow { pair: (u, v) }) => {
            unsafe {
                *ok = false;
                if !fail_u.is_null() {
                    *fail_u = u;
                }
                if !fail_v.is_null() {
                    *fail_v = v;
                }
            }
            RvcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Exact minimum color count by exhaustive search (small graphs only).
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_exact(
    g: *const RvcGraph,
    strong: bool,
    max_colors: usize,
    out: *mut usize,
) -> RvcStatus {
    let g = match require(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output argument");
        return RvcStatus::NullArgument;
    }
    let cfg = OracleConfig::default();
    let found = if strong {
        exact_srvc_with(&g.0, max_colors, &cfg)
    } else {
        exact_rvc_with(&g.0, max_colors, &cfg)
    };
    match found {
        Ok(k) => {
            unsafe { *out = k };
            RvcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Rainbow witness path between two 0-indexed vertices under a coloring
/// produced by [`rvc_color_permutation`] on the same model. On success
/// `*out_path` points to a newly allocated array of `*out_len` vertex ids;
/// free it with [`rvc_path_free`].
/// # Safety
/// Handle arguments must be valid pointers obtained from this library
/// and not yet freed; output pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rvc_witness_permutation(
    m: *const RvcModel,
    c: *const RvcColoring,
    u: usize,
    v: usize,
    out_path: *mut *mut usize,
    out_len: *mut usize,
) -> RvcStatus {
    let m = match require(m) {
        Ok(m) => m,
        Err(s) => return s,
    };
    let c = match require(c) {
        Ok(c) => c,
        Err(s) => return s,
    };
    if out_path.is_null() || out_len.is_null() {
        set_error("null output argument");
        return RvcStatus::NullArgument;
    }
    match rainbow_witness(&m.0, &c.0, u, v) {
        Ok(path) => {
            let mut boxed = path.into_boxed_slice();
            unsafe {
                *out_len = boxed.len();
                *out_path = boxed.as_mut_ptr();
            }
            std::mem::forget(boxed);
            RvcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// # Safety
/// `path`/`len` must come from [`rvc_witness_permutation`].
#[no_mangle]
pub unsafe extern "C" fn rvc_path_free(path: *mut usize, len: usize) {
    if !path.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(path, len)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn graph_parse_and_stats_round_trip() {
        unsafe {
            let text = cstr("graph 4 4\n1 2\n2 3\n3 4\n4 1\n");
            let mut g: *mut RvcGraph = ptr::null_mut();
            assert!(rvc_graph_parse(text.as_ptr(), &mut g) == RvcStatus::Ok);
            assert_eq!(rvc_graph_vertex_count(g), 4);
            assert_eq!(rvc_graph_edge_count(g), 4);
            let mut d = 0usize;
            assert!(rvc_graph_diameter(g, &mut d) == RvcStatus::Ok);
            assert_eq!(d, 2);
            let mut cuts = 99usize;
            assert!(rvc_graph_cut_vertex_count(g, &mut cuts) == RvcStatus::Ok);
            assert_eq!(cuts, 0);
            rvc_graph_free(g);
        }
    }

    #[test]
    fn parse_errors_set_message_and_status() {
        unsafe {
            let text = cstr("graph 2 1\n1 5\n");
            let mut g: *mut RvcGraph = ptr::null_mut();
            let status = rvc_graph_parse(text.as_ptr(), &mut g);
            assert!(status == RvcStatus::InvalidInput);
            let msg = CStr::from_ptr(rvc_last_error());
            assert!(msg.to_str().unwrap().contains("line"));
        }
    }

    #[test]
    fn permutation_coloring_verifies_through_the_abi() {
        unsafe {
            let text = cstr("perm 4\n2 4 1 3\n");
            let mut m: *mut RvcModel = ptr::null_mut();
            assert!(rvc_model_parse(text.as_ptr(), &mut m) == RvcStatus::Ok);
            let mut c: *mut RvcColoring = ptr::null_mut();
            assert!(rvc_color_permutation(m, &mut c) == RvcStatus::Ok);
            assert_eq!(rvc_coloring_color_count(c), 2);

            let mut g: *mut RvcGraph = ptr::null_mut();
            assert!(rvc_model_to_graph(m, &mut g) == RvcStatus::Ok);
            let mut ok = false;
            let (mut fu, mut fv) = (0usize, 0usize);
            assert!(rvc_verify(g, c, false, &mut ok, &mut fu, &mut fv) == RvcStatus::Ok);
            assert!(ok);

            let mut path: *mut usize = ptr::null_mut();
            let mut len = 0usize;
            assert!(rvc_witness_permutation(m, c, 0, 3, &mut path, &mut len) == RvcStatus::Ok);
            assert!(len >= 2);
            rvc_path_free(path, len);

            let mut text_out: *mut c_char = ptr::null_mut();
            assert!(rvc_coloring_to_text(c, &mut text_out) == RvcStatus::Ok);
            let s = CStr::from_ptr(text_out).to_str().unwrap().to_string();
            assert!(s.starts_with("colors 2\n"));
            rvc_string_free(text_out);

            rvc_graph_free(g);
            rvc_coloring_free(c);
            rvc_model_free(m);
        }
    }

    #[test]
    fn tree_power_coloring_through_the_abi() {
        unsafe {
            let mut spec = String::from("treepow 16 2\n");
            for (u, v) in rvc_core::treepow::Tree::spider(&[5, 5, 5]).edges() {
                spec.push_str(&format!("{} {}\n", u + 1, v + 1));
            }
            let text = cstr(&spec);
            let mut t: *mut RvcTreePower = ptr::null_mut();
            assert!(rvc_tree_power_parse(text.as_ptr(), &mut t) == RvcStatus::Ok);
            let mut c: *mut RvcColoring = ptr::null_mut();
            assert!(rvc_color_tree_power(t, &mut c) == RvcStatus::Ok);
            assert_eq!(rvc_coloring_color_count(c), 5);
            let mut g: *mut RvcGraph = ptr::null_mut();
            assert!(rvc_tree_power_graph(t, &mut g) == RvcStatus::Ok);
            let mut ok = false;
            assert!(
                rvc_verify(g, c, false, &mut ok, ptr::null_mut(), ptr::null_mut())
                    == RvcStatus::Ok
            );
            assert!(ok);
            rvc_graph_free(g);
            rvc_coloring_free(c);
            rvc_tree_power_free(t);
        }
    }

    #[test]
    fn class_gate_maps_to_not_in_class() {
        unsafe {
            let text = cstr(
                "graph 6 9\n1 2\n2 3\n1 3\n4 1\n4 2\n5 2\n5 3\n6 3\n6 1\n", // a 3-sun
            );
            let mut g: *mut RvcGraph = ptr::null_mut();
            assert!(rvc_graph_parse(text.as_ptr(), &mut g) == RvcStatus::Ok);
            let mut c: *mut RvcColoring = ptr::null_mut();
            assert!(rvc_color_split_strongly_chordal(g, &mut c) == RvcStatus::NotInClass);
            rvc_graph_free(g);
        }
    }

    #[test]
    fn exact_through_the_abi() {
        unsafe {
            let text = cstr("graph 5 4\n1 2\n2 3\n3 4\n4 5\n");
            let mut g: *mut RvcGraph = ptr::null_mut();
            assert!(rvc_graph_parse(text.as_ptr(), &mut g) == RvcStatus::Ok);
            let mut k = 0usize;
            assert!(rvc_exact(g, false, 5, &mut k) == RvcStatus::Ok);
            assert_eq!(k, 3);
            assert!(rvc_exact(g, false, 2, &mut k) == RvcStatus::Inconclusive);
            rvc_graph_free(g);
        }
    }

    #[test]
    fn null_arguments_are_rejected() {
        unsafe {
            assert!(rvc_graph_parse(ptr::null(), ptr::null_mut()) == RvcStatus::NullArgument);
            assert_eq!(rvc_graph_vertex_count(ptr::null()), 0);
            assert_eq!(rvc_coloring_color_of(ptr::null(), 0), 0);
        }
    }
}
