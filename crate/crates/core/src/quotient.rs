//! The quotient `S_C = P_C / (C − λ)`: canonical representatives, the
//! induced bracket, the `ℤ_m`-grading and the m-homogeneous lift.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::brackets::{Bracket, BracketError, BracketStructure};
use crate::groebner::{GroebnerBasis, GroebnerError, MonomialOrder};
use crate::poly::{same_context, Polynomial, Rational, VarContext};
use crate::random::{random_homogeneous, RandomShape};
use crate::structures::AlgebraSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("algebra `{0}` has no Casimir element")]
    NoCasimir(String),
    #[error("the Casimir element is constant")]
    ConstantCasimir,
    #[error("the Casimir element is not homogeneous, so the grading is undefined")]
    InhomogeneousCasimir,
    #[error("the bracket has no uniform degree shift")]
    UngradedBracket,
    #[error("`{0}` is not m-homogeneous")]
    NotMHomogeneous(String),
    #[error("the input vanishes in the quotient")]
    VanishesInQuotient,
    #[error("expected {expected} residues, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("polynomial lives in a different variable context")]
    ContextMismatch,
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Homogeneous-degree class modulo `m` with its representative.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GradedClass {
    pub residue: u32,
    #[serde(serialize_with = "serialize_display")]
    pub representative: Polynomial,
}

fn serialize_display<S: serde::Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// `S_C` with its precomputed modulus basis.
#[derive(Debug, Clone)]
pub struct QuotientContext {
    bracket: BracketStructure,
    casimir: Polynomial,
    lambda: Rational,
    modulus: GroebnerBasis,
    m: u32,
}

impl QuotientContext {
    pub fn new(bracket: BracketStructure, casimir: Polynomial, lambda: Rational, order: &MonomialOrder) -> Result<Self, QuotientError> {
        if lambda.is_zero() {
            return Err(QuotientError::ZeroLambda);
        }
        if !same_context(bracket.context(), casimir.context()) {
            return Err(QuotientError::ContextMismatch);
        }
        let m = match casimir.total_degree() {
            Some(d) if d > 0 => d,
            _ => return Err(QuotientError::ConstantCasimir),
        };
        let shifted = &casimir - &Polynomial::constant(casimir.context(), lambda.clone());
        let modulus = GroebnerBasis::principal(&shifted, order)?;
        Ok(Self { bracket, casimir, lambda, modulus, m })
    }

    /// Quotient of a built-in algebra by its Casimir element, grevlex order.
    pub fn from_spec(spec: &AlgebraSpec, lambda: Rational) -> Result<Self, QuotientError> {
        let c = spec.casimir.clone().ok_or_else(|| QuotientError::NoCasimir(spec.name.clone()))?;
        Self::new(spec.bracket.clone(), c, lambda, &MonomialOrder::grevlex())
    }

    pub fn bracket(&self) -> &BracketStructure {
        &self.bracket
    }

    pub fn casimir(&self) -> &Polynomial {
        &self.casimir
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn modulus(&self) -> &GroebnerBasis {
        &self.modulus
    }

    /// `C − λ`.
    pub fn modulus_generator(&self) -> Polynomial {
        &self.casimir - &Polynomial::constant(self.context(), self.lambda.clone())
    }

    /// Degree of `C`.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.casimir.context()
    }

    pub fn order(&self) -> &MonomialOrder {
        self.modulus.order()
    }

    /// Canonical representative of the class of `f`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.modulus.normal_form(f)
    }

    /// The induced bracket on classes, returned reduced.
    pub fn bracket_eval(&self, fs: &[Polynomial]) -> Result<Polynomial, QuotientError> {
        let reduced: Vec<Polynomial> = fs.iter().map(|f| self.reduce(f)).collect();
        Ok(self.reduce(&self.bracket.eval(&reduced)?))
    }

    /// Splits `f` into its `A_r` components, nonzero ones only, by residue.
    pub fn grade_decompose(&self, f: &Polynomial) -> Vec<GradedClass> {
        grade_decompose(f, self.m)
    }

    fn shift(&self) -> Result<i64, QuotientError> {
        if !self.casimir.is_homogeneous() {
            return Err(QuotientError::InhomogeneousCasimir);
        }
        self.bracket.degree_shift().ok_or(QuotientError::UngradedBracket)
    }

    /// Residue of `{A_{r_1}, …, A_{r_n}}`: `Σ (r_i − 1) + s (mod m)` where `s`
    /// is the bracket's degree shift (`m − 1` for a Jacobian bracket).
    pub fn predicted_residue(&self, residues: &[u32]) -> Result<u32, QuotientError> {
        let n = self.bracket.arity();
        if residues.len() != n {
            return Err(QuotientError::Arity { expected: n, got: residues.len() });
        }
        let total: i64 = residues.iter().map(|&r| i64::from(r) - 1).sum::<i64>() + self.shift()?;
        Ok(total.rem_euclid(i64::from(self.m)) as u32)
    }

    /// Homogeneous `f'` of the same degree with the same class, for `f ∈ A_r`:
    /// `f' = Σ_k f_k · (C/λ)^{(D − k)/m}` with `D` the top degree.
    pub fn lift(&self, f: &Polynomial) -> Result<Polynomial, QuotientError> {
        if !self.casimir.is_homogeneous() {
            return Err(QuotientError::InhomogeneousCasimir);
        }
        if !same_context(f.context(), self.context()) {
            return Err(QuotientError::ContextMismatch);
        }
        let classes = self.grade_decompose(f);
        if classes.len() > 1 {
            return Err(QuotientError::NotMHomogeneous(f.to_string()));
        }
        if self.reduce(f).is_zero() {
            return Err(QuotientError::VanishesInQuotient);
        }
        let comps = f.homogeneous_components();
        let top = *comps.keys().next_back().expect("nonzero");
        let unit = self.casimir.scale(&self.lambda.recip());
        let mut out = Polynomial::zero(self.context());
        for (d, fk) in comps {
            out = &out + &(&fk * &unit.pow((top - d) / self.m));
        }
        Ok(out)
    }
}

/// Components of `f` grouped by total degree modulo `m`.
pub fn grade_decompose(f: &Polynomial, m: u32) -> Vec<GradedClass> {
    let mut by: BTreeMap<u32, Polynomial> = BTreeMap::new();
    for (d, p) in f.homogeneous_components() {
        let slot = by.entry(d % m).or_insert_with(|| Polynomial::zero(f.context()));
        *slot = &*slot + &p;
    }
    by.into_iter().map(|(residue, representative)| GradedClass { residue, representative }).collect()
}

/// Random nonzero element of `A_r` with components of degree at most
/// `max_degree` (at least one component, of degree `≡ r`).
pub fn random_m_homogeneous<R: Rng>(rng: &mut R, ctx: &Arc<VarContext>, m: u32, r: u32, max_degree: u32, shape: RandomShape) -> Polynomial {
    let degrees: Vec<u32> = (0..=max_degree.max(r)).filter(|d| d % m == r % m).collect();
    loop {
        let mut p = Polynomial::zero(ctx);
        for &d in &degrees {
            if rng.gen_bool(0.6) {
                p = &p + &random_homogeneous(rng, ctx, d, shape);
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}
