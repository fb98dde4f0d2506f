//! Exact-arithmetic verification of crystallographic simplicial
//! arrangements and construction of their Weyl groupoids.
//!
//! Given a finite set of root covectors with rational coordinates, this
//! crate enumerates the chambers of the induced central hyperplane
//! arrangement, checks simpliciality, decides the crystallographic and
//! additive axioms, builds the attached connected simply connected
//! Cartan scheme with its root systems, verifies every scheme axiom,
//! and decides equivalence on both sides of the correspondence.
//!
//! All computation is exact: arbitrary-precision rationals, no floating
//! point anywhere.

pub mod arrangement;
pub mod axioms;
pub mod catalog;
pub mod exact;
pub mod feasibility;
pub mod io;
pub mod scheme;

pub use arrangement::{
    enumerate_chambers, seed_chamber, validate_root_set, walls_of_chamber, ArrangementError,
    Chamber, ChamberGraph, RootSet, SignedRoot,
};
pub use axioms::{
    arrangement_equivalence, check_additive, check_crystallographic, positive_system, Axiom,
    AxiomReport, AxiomsError,
};
pub use catalog::{negative_examples, weyl_entries, weyl_roots, CatalogEntry, Family};
pub use exact::{dual_basis, is_integer_vector, solve_linear, Covector, Rational, SquareMatrix};
pub use scheme::{
    arrangement_from_object, build_scheme, build_scheme_from_roots, gallery_closure,
    generator_matrix, is_connected, is_simply_connected, m_ij, morphism_of_word,
    reflection_matrix, scheme_equivalence, verify_root_system, verify_scheme_axioms,
    wall_crossing_map, CartanMatrix, CartanScheme, Morphism, SchemeError, SchemeObject,
    VerificationReport,
};
