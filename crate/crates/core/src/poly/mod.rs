//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] keeps its terms strictly decreasing in graded reverse
//! lexicographic order with no zero coefficients, so structural equality is
//! mathematical equality.

mod context;
mod monomial;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use context::{is_identifier, VarContext};
pub(crate) use context::same_context;
pub use monomial::{grevlex_cmp, Monomial};

/// Coefficient field. `BigRational` is always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `n`, `-n` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::InvalidRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different variable contexts ({0} vs {1})")]
    ContextMismatch(String, String),
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("variable `{0}` has no assignment")]
    MissingAssignment(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("variable context must contain at least one name")]
    EmptyContext,
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
}

/// One term of a polynomial.
pub type Term = (Monomial, Rational);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: Arc<VarContext>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Self { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Arc<VarContext>, c: Rational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::one(ctx.len()), c)] };
        Self { ctx: ctx.clone(), terms }
    }

    pub fn var(ctx: &Arc<VarContext>, index: usize) -> Self {
        assert!(index < ctx.len(), "variable index {index} out of range");
        Self { ctx: ctx.clone(), terms: vec![(Monomial::var(ctx.len(), index), Rational::one())] }
    }

    /// All generators `x_0, …, x_{N-1}` of the ring.
    pub fn vars(ctx: &Arc<VarContext>) -> Vec<Self> {
        (0..ctx.len()).map(|i| Self::var(ctx, i)).collect()
    }

    pub fn monomial(ctx: &Arc<VarContext>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ctx.len());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Self { ctx: ctx.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms.
    pub fn from_terms<I: IntoIterator<Item = Term>>(ctx: &Arc<VarContext>, terms: I) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ctx.len());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &Arc<VarContext>, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| grevlex_cmp(&b.0, &a.0));
        Self { ctx: ctx.clone(), terms }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    /// Terms in decreasing grevlex order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| grevlex_cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[index]).max().unwrap_or(0)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.total_degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(m, _)| m.degree() == d),
        }
    }

    /// Leading term in grevlex.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Divides by the grevlex leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<(), PolyError> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch(self.ctx.to_string(), other.ctx.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match grevlex_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Self { ctx: self.ctx.clone(), terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Self::from_map(&self.ctx, acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Multiplies by a monomial; the term order is preserved.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Self, PolyError> {
        if index >= self.nvars() {
            return Err(PolyError::IndexOutOfRange { index, nvars: self.nvars() });
        }
        // Lowering one exponent can reorder terms, so re-canonicalize.
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            (e > 0).then(|| (m.with_exponent(index, e - 1), c * Rational::from_integer(e.into())))
        });
        Ok(Self::from_terms(&self.ctx, terms))
    }

    /// `∂/∂x_index`, panicking on a bad index.
    pub fn diff(&self, index: usize) -> Self {
        self.partial_derivative(index).expect("variable index in range")
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.diff(i)).collect()
    }

    /// Splits into homogeneous components keyed by degree. Summing the
    /// components gives back `self`.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut parts: BTreeMap<u32, Vec<Term>> = BTreeMap::new();
        for t in &self.terms {
            parts.entry(t.0.degree()).or_default().push(t.clone());
        }
        parts
            .into_iter()
            .map(|(d, terms)| (d, Self { ctx: self.ctx.clone(), terms }))
            .collect()
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == degree).cloned().collect();
        Self { ctx: self.ctx.clone(), terms }
    }

    /// Replaces every variable occurring in `self` by the assigned polynomial.
    /// All assigned polynomials must share one context, which becomes the
    /// context of the result.
    pub fn substitute(&self, assignment: &BTreeMap<usize, Polynomial>) -> Result<Self, PolyError> {
        let target = match assignment.values().next() {
            Some(p) => p.ctx.clone(),
            None => self.ctx.clone(),
        };
        for p in assignment.values() {
            if !same_context(&p.ctx, &target) {
                return Err(PolyError::ContextMismatch(p.ctx.to_string(), target.to_string()));
            }
        }
        for i in 0..self.nvars() {
            if self.degree_in(i) > 0 && !assignment.contains_key(&i) {
                return Err(PolyError::MissingAssignment(self.ctx.name(i).to_string()));
            }
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut result = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| assignment[&i].pow(e));
                term = term.product(pw);
            }
            result = result.merge(&term, false);
        }
        Ok(result)
    }

    /// `Σ x_i ∂C/∂x_i − m·C`, identically zero for homogeneous `C` of degree `m`.
    pub fn euler_defect(&self) -> Result<Self, PolyError> {
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous(self.to_string()));
        }
        let m = self.total_degree().unwrap_or(0);
        let mut acc = self.scale(&-Rational::from_integer(m.into()));
        for i in 0..self.nvars() {
            acc = acc.merge(&Self::var(&self.ctx, i).product(&self.diff(i)), false);
        }
        Ok(acc)
    }

    /// Same terms in another context with the same variable count.
    pub fn with_context(&self, ctx: &Arc<VarContext>) -> Self {
        assert_eq!(ctx.len(), self.nvars());
        Self { ctx: ctx.clone(), terms: self.terms.clone() }
    }

    /// Common denominator times the polynomial, divided by the integer
    /// content: the primitive integer associate, normalized to a positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let mut content = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den / c.denom());
            content = num_integer::Integer::gcd(&content, &n);
        }
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let f = Rational::new(den, content);
        self.scale(&f)
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics if the contexts differ; use [`Polynomial::checked_add`] otherwise.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Writes one monomial as `x^2*y`, or nothing for 1.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, ctx: &VarContext, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ctx.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text form: terms in grevlex order, `*` between factors,
/// coefficients as integers or `p/q`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, &self.ctx, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
