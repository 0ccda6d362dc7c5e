//! Exact combinatorics of morsification spaces of the singularities `B_n^l`:
//! one-variable monic polynomials of degree `n` together with `l` labelled
//! boundary points, considered up to the connected components of the space of
//! very nice M-morsifications.
//!
//! The crate computes the component counts `K_n^l` three independent ways and
//! cross-checks them:
//!
//! * a recurrence over the table of counts, seeded by two columns of
//!   Bernoulli-Euler updown numbers ([`table`]),
//! * direct enumeration of the finite combinatorial data (snake of critical
//!   values, segment assignment, rank order) that classifies a component
//!   ([`oracle`]),
//! * exact rational generating functions in one and two variables
//!   ([`series`]).
//!
//! [`verify`] packages the cross-checks into a reproducible report, and the
//! companion `morsify` binary exposes everything on the command line.

pub mod error;
pub mod euler;
pub mod oracle;
pub mod report;
pub mod series;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use euler::{euler_numbers, updown_count_bruteforce, EulerSequence};
pub use oracle::{
    adjacency_graph, count_components, count_components_naive, enumerate_components,
    exterior_contacts, neighbors, AdjacencyGraph, ComponentType, WallType,
};
pub use report::{Mismatch, ReportMeta, Section, Status, VerificationReport, GATED_CLAIMS};
pub use series::{
    compare_series, egf_column_closed, egf_column_from_table, egf_k, pde_residual, BiSeries,
    Comparison, Rat, Series,
};
pub use table::{corollary3_check, Cell, CellValue, MorseTable, Provenance, Recurrence};
pub use verify::{full_report, report_for, single_report, VerifyConfig, SECTION_IDS};

/// Signed arbitrary-precision integer used for all component counts.
pub type Count = num_bigint::BigInt;
