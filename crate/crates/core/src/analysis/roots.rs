//! k-th roots of homogeneous polynomials and closedness.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::AnalysisError;
use crate::poly::{int, Monomial, Polynomial, Rational};

/// `C = alpha · root^k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KthRoot {
    #[serde(serialize_with = "super::display")]
    pub root: Polynomial,
    #[serde(serialize_with = "super::display")]
    pub alpha: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootResult {
    pub k: u32,
    /// `None` when no root exists over the rationals.
    pub root: Option<KthRoot>,
}

/// Terms of `p` whose exponent in variable `j` is `s`, with that exponent
/// cleared.
fn coefficient_in(p: &Polynomial, j: usize, s: u32) -> Polynomial {
    let terms = p.terms().iter().filter(|(m, _)| m.exponents()[j] == s).map(|(m, c)| (m.with_exponent(j, 0), c.clone()));
    Polynomial::from_terms(p.context(), terms.collect::<Vec<_>>())
}

fn shear(p: &Polynomial, j: usize, t: &Rational) -> Polynomial {
    let ctx = p.context();
    let xj = Polynomial::var(ctx, j);
    let assignment: BTreeMap<usize, Polynomial> = (0..ctx.len())
        .map(|i| {
            let xi = Polynomial::var(ctx, i);
            (i, if i == j { xi } else { &xi + &xj.scale(t) })
        })
        .collect();
    p.substitute(&assignment).expect("every variable assigned")
}

/// Candidate `c` with `c^k = D` for `D` monic of degree `k·d` in `x_j`,
/// built coefficient by coefficient from the top.
fn recursion_candidate(d_poly: &Polynomial, j: usize, k: u32, d: u32) -> Polynomial {
    let ctx = d_poly.context();
    let xj = |e: u32| Monomial::var(ctx.len(), j).pow(e);
    let kq = int(i64::from(k));
    let mut partial = Polynomial::monomial(ctx, xj(d), Rational::one());
    for r in (0..d).rev() {
        let s = d * (k - 1) + r;
        let a_s = coefficient_in(d_poly, j, s);
        let known = coefficient_in(&partial.pow(k), j, s);
        let b_r = (&a_s - &known).scale(&kq.recip());
        partial = &partial + &b_r.mul_monomial(&xj(r));
    }
    partial
}

/// Attempts `C = α·c^k` exactly. Requires `C` homogeneous and non-constant.
pub fn kth_root(c: &Polynomial, k: u32) -> Result<RootResult, AnalysisError> {
    if k < 2 {
        return Err(AnalysisError::RootIndex(k));
    }
    let m = homogeneous_degree(c)?;
    if m % k != 0 {
        return Ok(RootResult { k, root: None });
    }
    let d = m / k;
    let nv = c.nvars();
    let pure = |p: &Polynomial, j: usize| p.coefficient(&Monomial::var(nv, j).pow(m));
    // leading variable: a pure power x_j^m, else after a shear
    let mut setup = (0..nv).find(|&j| !pure(c, j).is_zero()).map(|j| (j, Rational::zero(), c.clone()));
    'shears: for t in 1..=3 {
        if setup.is_some() {
            break;
        }
        for j in 0..nv {
            let tq = int(t);
            let sheared = shear(c, j, &tq);
            if !pure(&sheared, j).is_zero() {
                setup = Some((j, tq, sheared));
                break 'shears;
            }
        }
    }
    let Some((j, t, sheared)) = setup else {
        return Err(AnalysisError::NoLeadingVariable(c.to_string()));
    };
    let alpha = pure(&sheared, j);
    let monic = sheared.scale(&alpha.recip());
    let cand = recursion_candidate(&monic, j, k, d);
    if cand.pow(k) != monic {
        return Ok(RootResult { k, root: None });
    }
    let root = if t.is_zero() { cand } else { shear(&cand, j, &-t) };
    // never trusted: check against the original input
    if &root.pow(k).scale(&alpha) != c {
        return Ok(RootResult { k, root: None });
    }
    Ok(RootResult { k, root: Some(KthRoot { root, alpha }) })
}

fn homogeneous_degree(c: &Polynomial) -> Result<u32, AnalysisError> {
    if !c.is_homogeneous() {
        return Err(AnalysisError::NotHomogeneous(c.to_string()));
    }
    match c.total_degree() {
        Some(m) if m > 0 => Ok(m),
        _ => Err(AnalysisError::Constant(c.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Closedness {
    pub closed: bool,
    /// Largest `k` with `C = α·c^k`, and that root, when `C` is not closed.
    pub witness: Option<RootResult>,
}

/// Closed iff no `k ≥ 2` dividing `deg C` admits a root. The witness uses
/// the largest such `k`, i.e. the smallest root.
pub fn is_closed_homogeneous(c: &Polynomial) -> Result<Closedness, AnalysisError> {
    let m = homogeneous_degree(c)?;
    for k in (2..=m).rev().filter(|k| m % k == 0) {
        let r = kth_root(c, k)?;
        if r.root.is_some() {
            return Ok(Closedness { closed: false, witness: Some(r) });
        }
    }
    Ok(Closedness { closed: true, witness: None })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalRoot {
    /// Monic minimal root.
    #[serde(serialize_with = "super::display")]
    pub root: Polynomial,
    pub k: u32,
    #[serde(serialize_with = "super::display")]
    pub alpha: Rational,
}

/// The monic `c` of least degree with `C = α·c^k`; `k = 1` when `C` is
/// closed.
pub fn minimal_root_homogeneous(c: &Polynomial) -> Result<MinimalRoot, AnalysisError> {
    let closed = is_closed_homogeneous(c)?;
    let (root, k, alpha) = match closed.witness {
        Some(RootResult { k, root: Some(KthRoot { root, alpha }) }) => (root, k, alpha),
        _ => (c.clone(), 1, Rational::one()),
    };
    let lc = root.leading_coefficient().expect("nonzero").clone();
    let alpha = alpha * num_traits::pow(lc.clone(), k as usize);
    Ok(MinimalRoot { root: root.scale(&lc.recip()), k, alpha })
}
