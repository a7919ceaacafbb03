//! Exact symbolic and numeric computations on the Cartan group, the stratified
//! Lie group modelling the flat (2,3,5)-distribution.
//!
//! The group is ℝ⁵ with coordinates (x1, x2, y, z1, z2), a polynomial product
//! of step 3, and dilations of weights (1, 1, 2, 3, 3). Everything symbolic in
//! this crate reduces to exact rational multivariate polynomial arithmetic:
//!
//! * [`rat`] — arbitrary-precision rational scalars;
//! * [`poly`] — sparse exact polynomials, derivatives, substitution;
//! * [`linalg`] — exact rational matrices, canonical echelon form, kernels;
//! * [`group`] — the group law, dilations, translations, BCH reconstruction;
//! * [`maps`] — polynomial self-maps with symbolically certified inverses;
//! * [`frames`] — the invariant frame/coframe, Lie brackets, pullbacks;
//! * [`pansu`] — the Pansu-derivative identities, the contact-map checker and
//!   a numeric difference-quotient estimator;
//! * [`symmetry`] — contact vector fields and the solver recovering the
//!   14-dimensional symmetry algebra (split g2);
//! * [`prolongation`] — generic Tanaka prolongation and rigidity detection;
//! * [`algebra`] — stratified Lie algebras given by structure constants;
//! * [`family`] — seeded generators for contact-map and polynomial-map
//!   test families.

pub mod algebra;
pub mod family;
pub mod frames;
pub mod group;
pub mod linalg;
pub mod maps;
pub mod pansu;
pub mod poly;
pub mod prolongation;
pub mod rat;
pub mod scalar;
pub mod symmetry;

pub use algebra::StratifiedAlgebra;
pub use frames::{PolyOneForm, PolyVectorField};
pub use group::GroupElement;
pub use maps::{PolyMap, PolyMapPair};
pub use pansu::{ContactReport, PansuMatrix};
pub use poly::MultiPoly;
pub use rat::Rat;
pub use symmetry::{ContactField, SymmetryAlgebra};
