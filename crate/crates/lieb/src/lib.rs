//! Exact rational computer algebra for the Grassmann algebra of a
//! finite-dimensional Lie algebra.
//!
//! The crate loads Lie algebras from structure constants and computes, with
//! exact rational arithmetic throughout:
//!
//! * adjoint maps, Killing and trace forms, structural series, ideals and
//!   derivations ([`algebra`]);
//! * wedge products, the algebraic Schouten bracket and exterior powers of
//!   linear maps ([`exterior`]);
//! * invariant multilinear forms on exterior powers and their extensions
//!   ([`forms`]);
//! * group gradations and the induced decompositions of `Λ^m g`
//!   ([`gradation`]);
//! * invariant multivectors, reduced spaces and the ideal/invariant
//!   correspondence ([`invariants`]);
//! * Yang-Baxter residuals, r-matrix certificates, cocommutators, orbit
//!   dimensions and the Chevalley-Eilenberg differential ([`ybe`]);
//! * a catalog of three-dimensional algebras, `so(2,2)` and `so(3,2)` with
//!   regression fixtures ([`catalog`]).
//!
//! ```
//! use lieb::catalog;
//! use lieb::io::{parse_multivector, Symbols};
//! use lieb::scalar::int;
//! use lieb::{killing_form, schouten};
//!
//! let (sl2, _) = catalog::get_algebra("sl2", &[])?;
//! let e = |t: &str| parse_multivector(sl2.basis_names(), t, &Symbols::new());
//! assert_eq!(schouten(&sl2, &e("e12")?, &e("e13")?)?, e("-2*e123")?);
//! assert_eq!(killing_form(&sl2).entry(&[0, 0]), &int(2));
//! # Ok::<(), lieb::Error>(())
//! ```

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exterior;
pub mod forms;
pub mod gradation;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod ybe;

pub use algebra::{adjoint, killing_form, load_algebra, EndoMap, LieAlgebra};
pub use error::{Error, Result};
pub use exterior::{schouten, wedge, MultiVector};
pub use forms::{MultiLinearForm, Symmetry};
pub use gradation::Gradation;
pub use invariants::{invariant_subspace, ReducedSpace};
pub use linalg::{Matrix, Subspace};
pub use scalar::Scalar;

/// Size limits guarding the dense tensor computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest arity accepted by the trace-form builder.
    pub max_trace_arity: usize,
    /// Largest number of tensor entries an invariant-form system may have.
    pub max_form_entries: usize,
    /// Largest number of products the permutation-sum extension may evaluate.
    pub max_extension_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_trace_arity: 4, max_form_entries: 10_000, max_extension_terms: 5_000_000 }
    }
}
