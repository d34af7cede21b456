//! Exact determinant invariants of the multilinear forms carried by compact
//! 3-manifolds.
//!
//! A closed oriented 3-manifold's triple cup product on first cohomology is
//! an alternating trilinear form over `Z`; a manifold with boundary carries
//! the analogous form with relative classes in the first slot, and Massey
//! triple products give a higher-order generalization. Each of these forms
//! packs into a matrix `theta` over the symmetric algebra `S = Z[a1..an]`,
//! and all maximal minors of `theta` share a common polynomial factor `d` —
//! the *cohomology determinant*. This crate computes those determinants
//! exactly, together with their transformation laws and the identities they
//! satisfy when a solid torus is glued to a boundary torus.
//!
//! The crate is organized around its runnable examples; each major
//! capability has one:
//!
//! * `polynomial_ring` — arithmetic, exact division, fraction-free
//!   determinants, and linear substitution in `Z[a1..an]`
//!   (`cargo run --example polynomial_ring`);
//! * `closed_determinant` — determinants of alternating trilinear forms and
//!   their basis invariance over `Z`;
//! * `boundary_determinant` — determinants of boundary-type forms, change of
//!   basis, and sign refinement;
//! * `massey_determinant` — the Massey-product generalization and its
//!   reduction to the boundary case at order one;
//! * `solid_torus_gluing` — building and verifying the four gluing cases;
//! * `corpus_tour` — the bundled named examples and their expected values;
//! * `tensor_io` — the JSON interchange format for form tensors.
//!
//! The same functionality is scriptable through the thin `cohomdet` binary
//! (subcommands `det`, `verify`, `corpus`, `check`).
//!
//! # Modules
//!
//! * [`polyring`] — exact polynomial and matrix arithmetic.
//! * [`forms`] — validated input tensors and their theta matrices.
//! * [`det`] — determinant extraction, bases, and transformation laws.
//! * [`gluing`] — solid-torus gluing instances and identity verification.
//! * [`corpus`] — bundled regression examples with frozen expected values.
//! * [`random`] — seeded generators for property tests and demos.

// Index-driven loops and `% 2` parity tests mirror the matrix and sign
// notation the algorithms are written in; iterator rewrites would obscure it.
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

// Corpus lookups are cold startup paths; boxing their error sources would
// only complicate matching on them.
#[allow(clippy::result_large_err)]
pub mod corpus;
pub mod det;
pub mod forms;
pub mod gluing;
pub mod polyring;
pub mod random;

pub use det::{
    change_basis, det_boundary, det_closed, det_closed_z, det_form, det_massey,
    det_sign_refined, BasisPair, DetError, Orientation,
};
pub use forms::{massey_f0, BoundaryForm, ClosedForm, Form, FormError, MasseyForm};
pub use gluing::{classify_case, CaseTag, GluingError, GluingInstance, GluingReport, Verdict};
pub use polyring::{Homogeneity, IntMatrix, IntPoly, Monomial, PolyError, PolyMatrix};
