//! Center membership, algebraic dependence and degree-bounded center
//! probes.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::AnalysisError;
use crate::brackets::{increasing_tuples, Bracket, BracketStructure, JacobianBracket};
use crate::poly::{same_context, Monomial, Polynomial, Rational};
use crate::quotient::QuotientContext;
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Defect {
    /// Variable pair for a minor, or generator tuple for a bracket.
    pub at: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub central: bool,
    pub checks: usize,
    pub defects: Vec<Defect>,
}

fn finish(checks: usize, defects: Vec<Defect>) -> Membership {
    Membership { central: defects.is_empty(), checks, defects }
}

fn reduce_in(q: Option<&QuotientContext>, p: Polynomial) -> Polynomial {
    match q {
        Some(q) => q.reduce(&p),
        None => p,
    }
}

/// Vanishing of every 2×2 minor `∂f/∂x_i ∂C/∂x_j − ∂f/∂x_j ∂C/∂x_i`, each
/// reduced modulo `C − λ` in quotient mode. Brackets with several defining
/// polynomials fall back to the generator-tuple test.
pub fn center_membership_jacobian(b: &JacobianBracket, f: &Polynomial, q: Option<&QuotientContext>) -> Membership {
    if b.casimirs().len() != 1 {
        return center_membership_table(b, f, q);
    }
    let ctx = b.context();
    let df = f.gradient();
    let dc = b.casimir().gradient();
    let pairs = increasing_tuples(ctx.len(), 2);
    let defects = pairs
        .par_iter()
        .filter_map(|ij| {
            let (i, j) = (ij[0], ij[1]);
            let minor = reduce_in(q, &(&df[i] * &dc[j]) - &(&df[j] * &dc[i]));
            (!minor.is_zero()).then(|| Defect { at: vec![ctx.name(i).into(), ctx.name(j).into()], value: minor.to_string() })
        })
        .collect();
    finish(pairs.len(), defects)
}

/// `{f, g_1, …, g_{n−1}} = 0` for every increasing tuple of generators,
/// reduced modulo `C − λ` in quotient mode.
pub fn center_membership_table<B: Bracket + ?Sized>(b: &B, f: &Polynomial, q: Option<&QuotientContext>) -> Membership {
    let ctx = b.context();
    let tuples = increasing_tuples(ctx.len(), b.arity() - 1);
    let defects = tuples
        .par_iter()
        .filter_map(|t| {
            let mut args = vec![f.clone()];
            args.extend(t.iter().map(|&i| Polynomial::var(ctx, i)));
            let v = reduce_in(q, b.eval(&args).expect("arity and context match"));
            (!v.is_zero()).then(|| Defect { at: t.iter().map(|&i| ctx.name(i).to_string()).collect(), value: v.to_string() })
        })
        .collect();
    finish(tuples.len(), defects)
}

/// Minor test for Jacobian brackets, generator-tuple test otherwise.
pub fn center_membership(b: &BracketStructure, f: &Polynomial, q: Option<&QuotientContext>) -> Membership {
    match b {
        BracketStructure::Jacobian(j) => center_membership_jacobian(j, f, q),
        BracketStructure::Table(t) => center_membership_table(t, f, q),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dependence {
    pub rank: usize,
    pub dependent: bool,
}

/// Rank of the `k × N` Jacobian matrix over the polynomial ring, by
/// fraction-free elimination (`R_i ← p·R_i − q·R_pivot`).
pub fn jacobian_dependence(fs: &[Polynomial]) -> Result<Dependence, AnalysisError> {
    let Some(first) = fs.first() else { return Err(AnalysisError::EmptyInput) };
    let ctx = first.context().clone();
    if fs.iter().any(|f| !same_context(f.context(), &ctx)) {
        return Err(AnalysisError::ContextMismatch);
    }
    let n = ctx.len();
    if fs.len() > n {
        return Err(AnalysisError::TooManyPolynomials { k: fs.len(), n });
    }
    let mut rows: Vec<Vec<Polynomial>> = fs.iter().map(|f| f.gradient().into_iter().map(|g| g.primitive_part()).collect()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let lead = row[col].clone();
            for (x, pv) in row.iter_mut().zip(&pivot) {
                *x = (&(&*x * &pivot[col]) - &(&lead * pv)).primitive_part();
            }
        }
        rank += 1;
    }
    Ok(Dependence { rank, dependent: rank < fs.len() })
}

/// Degree-bounded part of the center as a basis of polynomials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenterProbe {
    pub degree: u32,
    pub quotient: bool,
    pub unknowns: usize,
    #[serde(serialize_with = "super::display_all")]
    pub basis: Vec<Polynomial>,
}

impl CenterProbe {
    /// True iff the basis is `{1}`.
    pub fn constants_only(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }
}

/// All monomials in `nvars` variables of total degree at most `d`, by
/// degree.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    for deg in 0..=d {
        go(0, deg, &mut vec![0; nvars], &mut out);
    }
    out
}

fn probe<B, R>(b: &B, candidates: Vec<Monomial>, reduce: R, degree: u32, quotient: bool) -> CenterProbe
where
    B: Bracket + ?Sized,
    R: Fn(Polynomial) -> Polynomial + Sync,
{
    let ctx = b.context();
    let tuples = increasing_tuples(ctx.len(), b.arity() - 1);
    let images: Vec<Vec<Polynomial>> = candidates
        .par_iter()
        .map(|mu| {
            let f = Polynomial::monomial(ctx, mu.clone(), Rational::from_integer(1.into()));
            tuples
                .iter()
                .map(|t| {
                    let mut args = vec![f.clone()];
                    args.extend(t.iter().map(|&i| Polynomial::var(ctx, i)));
                    reduce(b.eval(&args).expect("arity and context match"))
                })
                .collect()
        })
        .collect();
    let mut row_of: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut matrix: linalg::Matrix = Vec::new();
    for (col, per_tuple) in images.iter().enumerate() {
        for (ti, v) in per_tuple.iter().enumerate() {
            for (m, c) in v.terms() {
                let r = *row_of.entry((ti, m.clone())).or_insert_with(|| {
                    matrix.push(vec![Rational::zero(); candidates.len()]);
                    matrix.len() - 1
                });
                matrix[r][col] = c.clone();
            }
        }
    }
    let basis = linalg::nullspace(&matrix, candidates.len())
        .into_iter()
        .map(|v| {
            let p = Polynomial::from_terms(ctx, candidates.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>());
            p.monic()
        })
        .collect();
    CenterProbe { degree, quotient, unknowns: candidates.len(), basis }
}

/// Elements of degree at most `d` in the center of `S_C`, over the standard
/// monomials of the modulus.
pub fn center_probe_quotient(q: &QuotientContext, d: u32) -> CenterProbe {
    let leads = q.modulus().leading_monomials();
    let candidates = monomials_up_to(q.context().len(), d).into_iter().filter(|m| !leads.iter().any(|l| l.divides(m))).collect();
    probe(q.bracket(), candidates, |p| q.reduce(&p), d, true)
}

/// Elements of degree at most `d` in the center of the ambient algebra.
pub fn center_probe_ambient<B: Bracket + ?Sized>(b: &B, d: u32) -> CenterProbe {
    probe(b, monomials_up_to(b.context().len(), d), |p| p, d, false)
}
