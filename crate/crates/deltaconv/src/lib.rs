//! Exact computation of triangle-closure (Δ) convexity invariants on
//! small simple graphs.
//!
//! The toolkit covers:
//!
//! - graph ingestion (plain edge lists and graph6 short form) and the
//!   structural recognizers the closed forms need (connectivity, blocks,
//!   chordality, block graphs, independence number);
//! - the Δ-interval operator, hulls as iterated closure, and convexity
//!   predicates;
//! - exact Helly, Radon, Carathéodory, and rank values with certified
//!   witnesses, by pruned exhaustive search;
//! - closed-form values for chordal and block graphs, cross-validated
//!   against the searches;
//! - a batch scan harness that audits graph6 streams against the known
//!   inequalities and reports any graph where the Helly and Radon
//!   numbers differ.
//!
//! Graphs are capped at 64 vertices; the searches are meant for the
//! single-digit-to-low-teens range where exhaustive verification runs in
//! seconds.

pub mod alpha;
pub mod blocks;
pub mod chordal;
pub mod closed_form;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod hull;
pub mod independence;
pub mod numbers;
pub mod scan;

pub use alpha::independence_number;
pub use blocks::{block_decomposition, is_block_graph, is_two_connected, BlockDecomposition};
pub use chordal::{check_chordal, is_chordal, Chordality};
pub use closed_form::{
    check_pair_hull_property, closed_form_block_rank, closed_form_chordal, cross_validate,
    ClosedFormResult, CrossValidation,
};
pub use generators::{generate, GeneratedGraph, GeneratorSpec};
pub use graph::{parse_edge_list, to_edge_list, Graph, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use hull::{delta_hull, delta_interval, is_convex, HullTrace};
pub use independence::{
    is_caratheodory_independent, is_convexly_independent, is_helly_independent,
    is_radon_independent, IndependenceVerdict, VerdictWitness,
};
pub use numbers::{
    caratheodory_number, caratheodory_number_uncapped, helly_number, radon_number, rank,
    InvariantValue,
};
pub use scan::{
    audit_graph, emit_report, scan_stream, AuditCaps, InvariantReport, OutputFormat,
    ReportPayload, ScanOptions, ScanSummary,
};
