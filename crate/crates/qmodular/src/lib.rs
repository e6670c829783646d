//! Exact-arithmetic library for the three quantization representations of
//! the modular group into `PGL_2` over polynomial rings, the induced
//! q-deformations of rationals, their specializations, collapse-locus
//! analysis, and the Jimm involution.
//!
//! Everything is exact: arbitrary-precision integers, Eisenstein integers
//! `Z[w]`, golden surds `Q(sqrt 5)`, and dense polynomials over them.
//! Floating point appears only in the root finder and plot emission.

pub mod cli;
pub mod error;
pub mod jimm;
pub mod projective;
pub mod qrat;
pub mod reps;
pub mod ring;
pub mod special;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use jimm::{jimm, jimm_ext, jimm_flat, jimm_sharp};
pub use projective::{FixedPoints, ProjMatrix, ProjPoint};
pub use qrat::{quantize, verify_equivariance, BaseChoice, Branch, QuantizedPoint};
pub use reps::{mgo_eval, mgo_image, pm_eval, pm_image, q1_conjugation_check, rep_check_relations, RepId};
pub use ring::{cyclotomic, EisensteinInt, GoldenSurd, Poly};
pub use special::{
    collapse_condition, collapse_roots, golden_conjugacy_check, psi_at, quotient_eval,
    AffineValue, GoldenCase, SpecValue,
};
pub use words::{cf_expansion, cf_word, dyer_alpha, matrix_to_word, parse_word, ExtendedRational, Gen, GroupWord, IntMat};
