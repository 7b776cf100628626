//! Fraction-free reduction on primitive integer polynomials.
//!
//! Terms are kept sorted decreasing under the active [`MonomialOrder`].
//! Every reduction step multiplies the working polynomial by an integer, so
//! the result is only determined up to a rational scale; [`Reduced::scale`]
//! records that factor when the caller needs exact normal forms.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{GroebnerError, MonomialOrder};
use crate::poly::{Monomial, Polynomial, Rational, VarContext};

pub(crate) type IntTerm = (Monomial, BigInt);

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub terms: Vec<IntTerm>,
}

impl IntPoly {
    /// Primitive integer associate of `p`, with positive leading coefficient.
    pub fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        Self::with_factor(p, order).0
    }

    /// Returns `(q, k)` with `p = k·q` and `q` primitive.
    pub fn with_factor(p: &Polynomial, order: &MonomialOrder) -> (Self, Rational) {
        if p.is_zero() {
            return (Self { terms: Vec::new() }, Rational::one());
        }
        let prim = p.primitive_part();
        let mut terms: Vec<IntTerm> = prim
            .terms()
            .iter()
            .map(|(m, c)| {
                debug_assert!(c.is_integer());
                (m.clone(), c.to_integer())
            })
            .collect();
        if !order.is_canonical() {
            terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
            if terms.first().is_some_and(|t| t.1.is_negative()) {
                terms.iter_mut().for_each(|t| t.1 = -&t.1);
            }
        }
        let (m0, c0) = &p.terms()[0];
        let q0 = terms.iter().find(|t| &t.0 == m0).map(|t| t.1.clone()).expect("same support");
        (Self { terms }, c0 / BigRational::from_integer(q0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &IntTerm {
        &self.terms[0]
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the factor divided out.
    pub fn make_primitive(&mut self) -> BigInt {
        let mut g = content(&self.terms);
        if g.is_zero() {
            return BigInt::one();
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            self.terms.iter_mut().for_each(|t| t.1 = &t.1 / &g);
        }
        g
    }

    /// Rational polynomial with leading coefficient one.
    pub fn to_monic(&self, ctx: &Arc<VarContext>) -> Polynomial {
        let lc = BigRational::from_integer(self.terms[0].1.clone());
        Polynomial::from_terms(ctx, self.terms.iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()) / &lc)))
    }
}

fn content(terms: &[IntTerm]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `a·p − c·(q·g)`, all sorted decreasing under `order`.
pub(crate) fn combine(a: &BigInt, p: &[IntTerm], c: &BigInt, q: &Monomial, g: &[IntTerm], order: &MonomialOrder) -> Vec<IntTerm> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut shifted = g.iter().map(|(m, v)| (m.mul(q), v));
    let mut next_g = shifted.next();
    while i < p.len() {
        let Some((gm, gv)) = &next_g else { break };
        match order.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push((p[i].0.clone(), a * &p[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.clone(), -(c * *gv)));
                next_g = shifted.next();
            }
            Ordering::Equal => {
                let v = a * &p[i].1 - c * *gv;
                if !v.is_zero() {
                    out.push((gm.clone(), v));
                }
                i += 1;
                next_g = shifted.next();
            }
        }
    }
    out.extend(p[i..].iter().map(|(m, v)| (m.clone(), a * v)));
    while let Some((gm, gv)) = next_g {
        out.push((gm, -(c * gv)));
        next_g = shifted.next();
    }
    out
}

/// Reduction step counter shared across calls.
#[derive(Debug, Clone)]
pub struct Steps {
    used: u64,
    limit: u64,
}

impl Steps {
    pub fn new(limit: u64) -> Self {
        Self { used: 0, limit }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub(crate) fn tick(&mut self) -> Result<(), GroebnerError> {
        self.used += 1;
        if self.used > self.limit {
            Err(GroebnerError::BudgetExhausted { steps: self.limit })
        } else {
            Ok(())
        }
    }
}

pub(crate) struct Reduced {
    pub poly: IntPoly,
    /// `poly ≡ scale · input` modulo the ideal.
    pub scale: Rational,
}

const CONTENT_EVERY: usize = 8;

/// Full reduction of `p` by `basis` (leading terms and tails).
pub(crate) fn reduce(p: &IntPoly, basis: &[&IntPoly], order: &MonomialOrder, steps: &mut Steps) -> Result<Reduced, GroebnerError> {
    let mut done: Vec<IntTerm> = Vec::new();
    let mut work: Vec<IntTerm> = p.terms.clone();
    let mut pos = 0;
    let mut scale_num = BigInt::one();
    let mut scale_den = BigInt::one();
    let mut since_content = 0;
    while pos < work.len() {
        let (lm, lc) = &work[pos];
        let hit = basis.iter().find_map(|g| g.lead().0.divide_into(lm).map(|q| (*g, q)));
        match hit {
            None => {
                done.push(work[pos].clone());
                pos += 1;
            }
            Some((g, q)) => {
                steps.tick()?;
                let gl = &g.lead().1;
                let d = gl.gcd(lc);
                let a = gl / &d;
                let c = lc / &d;
                work = combine(&a, &work[pos..], &c, &q, &g.terms, order);
                pos = 0;
                if !a.is_one() {
                    done.iter_mut().for_each(|t| t.1 = &a * &t.1);
                    scale_num *= &a;
                }
                since_content += 1;
                if since_content >= CONTENT_EVERY {
                    since_content = 0;
                    let g = content(&done).gcd(&content(&work));
                    if !g.is_zero() && !g.is_one() {
                        done.iter_mut().for_each(|t| t.1 = &t.1 / &g);
                        work.iter_mut().for_each(|t| t.1 = &t.1 / &g);
                        scale_den *= g;
                    }
                }
            }
        }
    }
    let mut poly = IntPoly { terms: done };
    let g = poly.make_primitive();
    scale_den *= g;
    Ok(Reduced { poly, scale: Rational::new(scale_num, scale_den) })
}

/// S-polynomial of two primitive polynomials.
pub(crate) fn s_poly(f: &IntPoly, g: &IntPoly, order: &MonomialOrder) -> IntPoly {
    let (lf, a) = f.lead();
    let (lg, b) = g.lead();
    let l = lf.lcm(lg);
    let d = a.gcd(b);
    let qf = lf.divide_into(&l).expect("lcm");
    let qg = lg.divide_into(&l).expect("lcm");
    let fshift: Vec<IntTerm> = f.terms.iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
    IntPoly { terms: combine(&(b / &d), &fshift, &(a / &d), &qg, &g.terms, order) }
}
