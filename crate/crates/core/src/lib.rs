//! Exact-integer toolkit for reflexive lattice polygons and the twelve-point
//! theorem.
//!
//! A convex lattice polygon with exactly one interior lattice point is called
//! reflexive. Marking, for each edge, the primitive vector of that edge laid
//! out from the interior point yields the dual polygon, and the twelve-point
//! theorem says the boundary lattice-point counts of a reflexive polygon and
//! its dual always sum to 12.
//!
//! The crate implements the machinery around that statement:
//!
//! * [`polygon`] — exact integer polygons: areas, boundary and interior
//!   lattice-point counts (gcd and Pick formulas plus brute-force
//!   cross-checks), canonical STRICT and SUBDIVIDED vertex forms;
//! * [`reflexive`] — validation and origin normalization;
//! * [`duality`] — the dual construction and the `m + m* = 12` check;
//! * [`reduction`] — the elementary-operation calculus: removal and insertion
//!   of simple ears, the dual-transition check, and the full reduction of any
//!   reflexive polygon to a parallelogram with replayable traces;
//! * [`classify`] — unimodular equivalence, canonical forms, exhaustive
//!   enumeration of the 16 equivalence classes, and seeded random instances;
//! * [`text`] — the line-based polygon, trace, and census text formats.
//!
//! ```
//! use twelve_points::{verify_twelve, LatticePoint, ReflexivePolygon};
//!
//! let square = ReflexivePolygon::from_vertices(vec![
//!     LatticePoint::new(1, 1),
//!     LatticePoint::new(-1, 1),
//!     LatticePoint::new(-1, -1),
//!     LatticePoint::new(1, -1),
//! ])?;
//! let report = verify_twelve(&square)?;
//! assert_eq!((report.m, report.m_star), (8, 4));
//! assert!(report.ok);
//! # Ok::<(), twelve_points::Error>(())
//! ```

pub mod classify;
pub mod duality;
pub mod error;
pub mod point;
pub mod polygon;
pub mod reduction;
pub mod reflexive;
pub mod text;

pub use classify::{
    apply_unimodular, are_equivalent, enumerate_polygons, enumerate_reflexive, normal_form,
    random_reflexive, EquivalenceClass, UnimodularMap,
};
pub use duality::{dual_of_polygon, dual_polygon, primitive_vector, verify_twelve, DualResult, TwelveReport};
pub use error::{Error, OpViolation, Result};
pub use point::{LatticePoint, ORIGIN};
pub use polygon::{is_strictly_convex, Location, Polygon};
pub use reduction::{
    check_dual_transition, ear_removable, find_removable_ear, insert_vertex,
    is_simple_triangle, remove_ear, reduce_to_parallelogram, DualTransitionReport, ElementaryOp,
    OpKind, ReductionTrace, TraceStep,
};
pub use reflexive::ReflexivePolygon;
