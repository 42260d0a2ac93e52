//! Exact Alon–Tarsi computations on small graphs.
//!
//! * [`algebra`]: the graph polynomial `P_G = prod_{uv in E, u < v} (x_v - x_u)`
//!   and its coefficients.
//! * [`eulerian`]: orientations and their even/odd Eulerian sub-digraph
//!   counts; `c_{G, d+(D)} = (-1)^r (|EE(D)| - |OE(D)|)`.
//! * [`atn`]: Alon–Tarsi numbers by exhaustive search, and restriction of
//!   witnesses to subgraphs.
//! * [`planar_cert`]: nice orientations of near-triangulations and
//!   independently checkable certificates of `AT(G) <= 5` for plane graphs.
//! * [`coloring`]: list colorings and exhaustive choice numbers.
//!
//! ```
//! use alon_tarsi::graph::generate;
//! use alon_tarsi::planar_cert::{certify_at5, verify_certificate};
//!
//! let cert = certify_at5(&generate::octahedron()).unwrap();
//! assert!(cert.max_out_degree <= 4 && cert.diff != 0);
//! assert!(verify_certificate(&cert).passed());
//! ```

pub mod algebra;
pub mod atn;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod eulerian;
pub mod graph;
pub mod planar_cert;

pub use algebra::{graph_coefficient, graph_polynomial, IndexFunction, SparsePolynomial};
pub use atn::{alon_tarsi_number, restrict_index, strip_added_edges, AtResult};
pub use coloring::{choice_number, find_list_coloring, Coloring, ListAssignment};
pub use error::{Error, Result};
pub use eulerian::{at_diff, eulerian_counts, orientation_from_index, signed_diff, EulerCounts, Orientation};
pub use graph::{Graph, PlaneGraph};
pub use planar_cert::{certify_at5, nice_orientation, verify_certificate, Certificate, NiceOrientation};
