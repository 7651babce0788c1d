//! C ABI over the deltaconv library.
//!
//! Graphs are opaque handles created by the `dc_graph_from_*` and
//! `dc_generate_*` constructors and released with `dc_graph_free`. Every
//! fallible call returns a [`DcStatus`]; results travel through caller
//! buffers (vertex ids as `uint32_t`) or library-allocated strings that
//! must be released with `dc_string_free`. The generated header lives in
//! `include/deltaconv.h`.
//!
//! Safety contract, uniform across the surface: pointer arguments must be
//! null or valid for the stated length; handles must come from this
//! library and not be used after `dc_graph_free`.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};

use deltaconv::graph::{Graph, VertexSet};
use deltaconv::numbers::InvariantError;
use deltaconv::scan::{audit_graph, emit_report, AuditCaps, AuditError, OutputFormat, ReportPayload};

/// Status code for every fallible entry point.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input text failed to parse as a graph.
    ParseError = 3,
    /// A vertex id or generator parameter was out of range.
    InvalidArgument = 4,
    /// The operation needs a connected graph.
    Disconnected = 5,
    /// The graph exceeds a search size cap; pass `force` to override.
    CapExceeded = 6,
    /// The caller buffer cannot hold the result; the required size was
    /// written to the length output.
    BufferTooSmall = 7,
    /// The operation is undefined on the empty graph.
    EmptyGraph = 8,
}

/// Invariant selector for `dc_invariant`.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcInvariant {
    /// Maximum independent set size.
    Alpha = 0,
    Helly = 1,
    Radon = 2,
    Caratheodory = 3,
    Rank = 4,
}

/// Opaque graph handle.
pub struct DcGraph {
    inner: Graph,
}

fn graph_ref<'a>(g: *const DcGraph) -> Result<&'a Graph, DcStatus> {
    if g.is_null() {
        return Err(DcStatus::NullPointer);
    }
    Ok(unsafe { &(*g).inner })
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, DcStatus> {
    if p.is_null() {
        return Err(DcStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| DcStatus::InvalidUtf8)
}

unsafe fn set_arg(g: &Graph, ids: *const u32, len: usize) -> Result<VertexSet, DcStatus> {
    if len > 0 && ids.is_null() {
        return Err(DcStatus::NullPointer);
    }
    let slice = if len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(ids, len)
    };
    VertexSet::from_ids(slice.iter().map(|&v| v as usize), g.vertex_count())
        .map_err(|_| DcStatus::InvalidArgument)
}

unsafe fn write_ids(
    set: VertexSet,
    out: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> DcStatus {
    if out_len.is_null() {
        return DcStatus::NullPointer;
    }
    *out_len = set.len();
    if set.len() > capacity {
        return DcStatus::BufferTooSmall;
    }
    if !set.is_empty() {
        if out.is_null() {
            return DcStatus::NullPointer;
        }
        for (i, v) in set.iter().enumerate() {
            *out.add(i) = v as u32;
        }
    }
    DcStatus::Ok
}

fn hand_out(g: Graph, out: *mut *mut DcGraph) -> DcStatus {
    if out.is_null() {
        return DcStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(DcGraph { inner: g })) };
    DcStatus::Ok
}

/// Parses one graph6 line (short form, up to 62 vertices).
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_graph6(
    line: *const c_char,
    out: *mut *mut DcGraph,
) -> DcStatus {
    let line = match str_arg(line) {
        Ok(s) => s,
        Err(e) => return e,
    };
    match deltaconv::parse_graph6(line) {
        Ok(g) => hand_out(g, out),
        Err(_) => DcStatus::ParseError,
    }
}

/// Parses edge-list text: header `n m`, then `m` lines `u v`, `#` comments.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut DcGraph,
) -> DcStatus {
    let text = match str_arg(text) {
        Ok(s) => s,
        Err(e) => return e,
    };
    match deltaconv::parse_edge_list(text) {
        Ok(g) => hand_out(g, out),
        Err(_) => DcStatus::ParseError,
    }
}

/// Builds the triangle-fan family member with invariant value `target`
/// (`target >= 3`).
#[no_mangle]
pub unsafe extern "C" fn dc_generate_fan(target: u32, out: *mut *mut DcGraph) -> DcStatus {
    match deltaconv::generate(&deltaconv::GeneratorSpec::triangle_fan(target as usize)) {
        Ok(g) => hand_out(g.graph, out),
        Err(_) => DcStatus::InvalidArgument,
    }
}

/// Builds the triangle-chain family member: `triangles` triangles whose
/// consecutive apexes are joined by paths with the given internal lengths
/// (`path_count` must be `triangles - 1`).
#[no_mangle]
pub unsafe extern "C" fn dc_generate_chain(
    triangles: u32,
    path_lengths: *const u32,
    path_count: usize,
    out: *mut *mut DcGraph,
) -> DcStatus {
    if path_count > 0 && path_lengths.is_null() {
        return DcStatus::NullPointer;
    }
    let lengths: Vec<usize> = if path_count == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(path_lengths, path_count)
            .iter()
            .map(|&l| l as usize)
            .collect()
    };
    match deltaconv::generate(&deltaconv::GeneratorSpec::triangle_chain(
        triangles as usize,
        lengths,
    )) {
        Ok(g) => hand_out(g.graph, out),
        Err(_) => DcStatus::InvalidArgument,
    }
}

/// Releases a graph handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_free(g: *mut DcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_vertex_count(g: *const DcGraph) -> u32 {
    graph_ref(g).map_or(0, |g| g.vertex_count() as u32)
}

/// Number of edges; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_edge_count(g: *const DcGraph) -> u32 {
    graph_ref(g).map_or(0, |g| g.edge_count() as u32)
}

/// 1 if the edge `{u, v}` exists, else 0.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_has_edge(g: *const DcGraph, u: u32, v: u32) -> i32 {
    graph_ref(g).map_or(0, |g| g.has_edge(u as usize, v as usize) as i32)
}

/// Encodes the graph as a NUL-terminated graph6 line. `written` receives
/// the byte count including the terminator; if it exceeds `capacity` the
/// call returns `BufferTooSmall` and writes nothing else.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_to_graph6(
    g: *const DcGraph,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    if written.is_null() {
        return DcStatus::NullPointer;
    }
    let encoded = match deltaconv::encode_graph6(graph) {
        Ok(s) => s,
        Err(_) => return DcStatus::InvalidArgument,
    };
    *written = encoded.len() + 1;
    if encoded.len() + 1 > capacity {
        return DcStatus::BufferTooSmall;
    }
    if buffer.is_null() {
        return DcStatus::NullPointer;
    }
    std::ptr::copy_nonoverlapping(encoded.as_ptr(), buffer as *mut u8, encoded.len());
    *buffer.add(encoded.len()) = 0;
    DcStatus::Ok
}

/// One closure step: the set plus every vertex adjacent to two adjacent
/// members. Ids are written ascending; `out_len` receives the size (also
/// on `BufferTooSmall`).
#[no_mangle]
pub unsafe extern "C" fn dc_delta_interval(
    g: *const DcGraph,
    members: *const u32,
    member_count: usize,
    out: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    let set = match set_arg(graph, members, member_count) {
        Ok(s) => s,
        Err(e) => return e,
    };
    write_ids(deltaconv::delta_interval(graph, set), out, capacity, out_len)
}

/// Smallest convex superset of the given vertices (iterated closure).
#[no_mangle]
pub unsafe extern "C" fn dc_delta_hull(
    g: *const DcGraph,
    members: *const u32,
    member_count: usize,
    out: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    let set = match set_arg(graph, members, member_count) {
        Ok(s) => s,
        Err(e) => return e,
    };
    write_ids(
        deltaconv::delta_hull(graph, set).final_set(),
        out,
        capacity,
        out_len,
    )
}

/// Writes 1 to `out` if the set is convex (fixed by one closure step).
#[no_mangle]
pub unsafe extern "C" fn dc_is_convex(
    g: *const DcGraph,
    members: *const u32,
    member_count: usize,
    out: *mut i32,
) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    let set = match set_arg(graph, members, member_count) {
        Ok(s) => s,
        Err(e) => return e,
    };
    if out.is_null() {
        return DcStatus::NullPointer;
    }
    *out = deltaconv::is_convex(graph, set) as i32;
    DcStatus::Ok
}

/// Exact invariant value with an optional witness. Pass a null `witness`
/// to skip it; otherwise ids are written ascending and `witness_len`
/// receives the count. `force` lifts the Caratheodory size cap.
#[no_mangle]
pub unsafe extern "C" fn dc_invariant(
    g: *const DcGraph,
    which: DcInvariant,
    force: i32,
    value: *mut u32,
    witness: *mut u32,
    witness_capacity: usize,
    witness_len: *mut usize,
) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    if value.is_null() {
        return DcStatus::NullPointer;
    }
    let result = match which {
        DcInvariant::Alpha => Ok(deltaconv::independence_number(graph)),
        DcInvariant::Helly => deltaconv::helly_number(graph),
        DcInvariant::Radon => deltaconv::radon_number(graph),
        DcInvariant::Rank => deltaconv::rank(graph),
        DcInvariant::Caratheodory => {
            if force != 0 {
                deltaconv::caratheodory_number_uncapped(graph)
            } else {
                deltaconv::caratheodory_number(graph)
            }
        }
    };
    match result {
        Ok(v) => {
            *value = v.value as u32;
            if witness.is_null() && witness_len.is_null() {
                DcStatus::Ok
            } else {
                write_ids(v.witness, witness, witness_capacity, witness_len)
            }
        }
        Err(InvariantError::EmptyGraph) => DcStatus::EmptyGraph,
        Err(InvariantError::SizeCapExceeded { .. }) => DcStatus::CapExceeded,
    }
}

/// Writes 1 if the graph is chordal.
#[no_mangle]
pub unsafe extern "C" fn dc_is_chordal(g: *const DcGraph, out: *mut i32) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    if out.is_null() {
        return DcStatus::NullPointer;
    }
    *out = deltaconv::is_chordal(graph) as i32;
    DcStatus::Ok
}

/// Writes 1 if every block is complete. Needs a connected graph.
#[no_mangle]
pub unsafe extern "C" fn dc_is_block_graph(g: *const DcGraph, out: *mut i32) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    if out.is_null() {
        return DcStatus::NullPointer;
    }
    match deltaconv::is_block_graph(graph) {
        Ok(b) => {
            *out = b as i32;
            DcStatus::Ok
        }
        Err(_) => DcStatus::Disconnected,
    }
}

/// Number of blocks (maximal 2-connected subgraphs; bridges count).
/// Needs a connected graph.
#[no_mangle]
pub unsafe extern "C" fn dc_block_count(g: *const DcGraph, out: *mut u32) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    if out.is_null() {
        return DcStatus::NullPointer;
    }
    match deltaconv::block_decomposition(graph) {
        Ok(d) => {
            *out = d.block_count() as u32;
            DcStatus::Ok
        }
        Err(_) => DcStatus::Disconnected,
    }
}

/// Runs the full audit (invariants, closed forms, inequality checks) and
/// returns the JSON report. `force` lifts the size caps. The string must
/// be released with `dc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn dc_audit_json(
    g: *const DcGraph,
    force: i32,
    out_json: *mut *mut c_char,
) -> DcStatus {
    let graph = match graph_ref(g) {
        Ok(graph) => graph,
        Err(e) => return e,
    };
    if out_json.is_null() {
        return DcStatus::NullPointer;
    }
    let caps = AuditCaps {
        force: force != 0,
        ..AuditCaps::default()
    };
    match audit_graph(graph, 0, &caps) {
        Ok(report) => {
            let json = emit_report(ReportPayload::Single(&report), OutputFormat::Json);
            let cstring = CString::new(json).expect("JSON has no interior NUL");
            *out_json = cstring.into_raw();
            DcStatus::Ok
        }
        Err(AuditError::Disconnected) => DcStatus::Disconnected,
        Err(AuditError::TooLarge { .. }) => DcStatus::CapExceeded,
        Err(AuditError::Invariant(InvariantError::EmptyGraph)) => DcStatus::EmptyGraph,
        Err(AuditError::Invariant(InvariantError::SizeCapExceeded { .. })) => {
            DcStatus::CapExceeded
        }
    }
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn dc_status_message(status: DcStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        DcStatus::Ok => c"ok",
        DcStatus::NullPointer => c"a required pointer argument was null",
        DcStatus::InvalidUtf8 => c"string argument was not valid UTF-8",
        DcStatus::ParseError => c"input failed to parse as a graph",
        DcStatus::InvalidArgument => c"argument out of range",
        DcStatus::Disconnected => c"operation needs a connected graph",
        DcStatus::CapExceeded => c"graph exceeds a search size cap",
        DcStatus::BufferTooSmall => c"caller buffer too small",
        DcStatus::EmptyGraph => c"operation undefined on the empty graph",
    };
    msg.as_ptr()
}
