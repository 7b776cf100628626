//! Decision procedures: k-th roots and closedness, center membership,
//! algebraic dependence, degree-bounded center probes and Poisson-ideal
//! saturation.

mod center;
mod roots;
mod saturate;

use std::fmt::Display;

use thiserror::Error;

pub use center::{
    center_membership, center_membership_jacobian, center_membership_table, center_probe_ambient, center_probe_quotient,
    jacobian_dependence, monomials_up_to, CenterProbe, Defect, Dependence, Membership,
};
pub use roots::{is_closed_homogeneous, kth_root, minimal_root_homogeneous, Closedness, KthRoot, MinimalRoot, RootResult};
pub use saturate::{saturate_poisson_ideal, Round, SaturationConfig, SaturationReport, Verdict, DEFAULT_MAX_ROUNDS};

use crate::brackets::BracketError;
use crate::groebner::GroebnerError;
use crate::quotient::QuotientError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("`{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("`{0}` is constant")]
    Constant(String),
    #[error("root index must be at least 2, got {0}")]
    RootIndex(u32),
    #[error("no variable of `{0}` could be made leading by the shear schedule")]
    NoLeadingVariable(String),
    #[error("{k} polynomials in {n} variables")]
    TooManyPolynomials { k: usize, n: usize },
    #[error("no input polynomials")]
    EmptyInput,
    #[error("every seed vanishes in the quotient")]
    SeedsVanish,
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

pub(crate) fn display<T: Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn display_all<T: Display, S: serde::Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[cfg(test)]
mod tests;
