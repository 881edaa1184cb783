//! Degenerations: certificates that one superalgebra lies in the orbit
//! closure of another, certificates that it does not, and the graph they
//! assemble into.
//!
//! A curve certificate writes a basis `g(t)` of the source, checks that
//! `g(t)` is a basis change for all but finitely many `t`, transports the
//! structure constants along it and takes the limit `t -> 0`. The limit has to
//! equal the target's catalog constants entry by entry, after an optional
//! constant basis change on the target side.

mod cert;
mod graph;
mod verify;

use thiserror::Error;

pub use cert::{
    load_cert_file, parse_cert_file, shipped, shipped_all, Cert, CertFile, Expected, Method, ObstructionCert,
    RawCert, SpecializationCert, UndeterminedPair, SHIPPED,
};
pub use graph::{
    assemble, build_graph, check_properties, generic_structures, same_underlying_links, ComponentDiagram,
    Contradiction, DegenerationGraph, Edge, EdgeKind, Generic, GenericFlag, Node, Obstruction, OpenPair,
    TRIVIALLY_GRADED_GENERIC,
};
pub use verify::{
    closed_orbit_label, effective_orbit_dim, scaling_cert, separates, specialization_limit, transport_along,
    verify, verify_all, verify_obstruction, verify_specialization, Checked, CurvePoint, Stage,
    UnderlyingTable, Verdict,
};

use crate::catalog::CatalogError;

#[derive(Debug, Error)]
pub enum DegenError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("certificate {id}: {reason}")]
    Malformed { id: String, reason: String },
    #[error("certificate {id}: {detail}")]
    WrongComponent { id: String, detail: String },
    #[error("certificate file is not valid JSON at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("certificate {0} is not verified and cannot enter the graph")]
    Unverified(String),
    #[error("contradictory data: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Contradiction(Vec<Contradiction>),
}
