//! Exact computation of symbolic powers of ideals of 0-dimensional subschemes
//! of projective space, containment checks `I^(m) ⊆ I^r` with witnesses, and
//! pushforward of ideals along same-degree homogeneous regular sequences.

/// Engine version recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod catalog;
pub mod coeff;
pub mod error;
pub mod expr;
pub mod groebner;
pub mod idealops;
pub mod linalg;
pub mod polyring;
pub mod symbolic;

pub use catalog::{catalog_entry, fibered_entry, paper_map, CatalogEntry};
pub use coeff::{FieldElement, FieldOp, FieldSpec};
pub use error::{Error, Result};
pub use groebner::{buchberger, reduce, s_polynomial, GroebnerBasis};
pub use idealops::{
    colon, degree, ideal_equal, ideal_member, ideal_power, ideal_product, ideal_sum, intersect,
    irrelevant_ideal, is_regular_sequence, krull_dim, pushforward, saturate, saturation, HilbertData, Ideal,
    SubstitutionMap,
};
pub use linalg::member_by_linalg;
pub use polyring::{Homogeneity, Monomial, MonomialOrder, PolyRing, Polynomial};
pub use symbolic::{
    check_containment, check_lemma3, check_roundtrip, invariant_suite, resurgence_scan, symbolic_power,
    ContainmentCertificate, ResurgenceBound, RoundTripReport, Verdict,
};
