//! Monomial orders, multivariate division and Buchberger's algorithm.
//!
//! Basis construction runs on primitive integer polynomials (see
//! [`reduce`]) with the Gebauer–Möller pair criteria; the finished basis is
//! interreduced and every generator made monic.

mod division;
mod order;
mod reduce;

use std::sync::Arc;

use thiserror::Error;

pub use division::{divide, Division};
pub use order::{MonomialOrder, OrderKind};
pub use reduce::Steps;
use reduce::{reduce, s_poly, IntPoly};

use crate::poly::{same_context, Monomial, Polynomial, VarContext};

/// Default limit on elementary reduction steps per basis computation.
pub const DEFAULT_STEP_BUDGET: u64 = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("divisor {0} is the zero polynomial")]
    ZeroDivisor(usize),
    #[error("generators must not all be zero")]
    ZeroIdeal,
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("reduction budget of {steps} steps exhausted")]
    BudgetExhausted { steps: u64 },
}

/// A reduced Gröbner basis: monic generators sorted by decreasing leading
/// monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ctx: Arc<VarContext>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
    int_gens: Vec<IntPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.generators == other.generators
    }
}

impl GroebnerBasis {
    /// The basis of a principal ideal: its generator made monic.
    pub fn principal(p: &Polynomial, order: &MonomialOrder) -> Result<Self, GroebnerError> {
        if p.is_zero() {
            return Err(GroebnerError::ZeroIdeal);
        }
        let int = if p.is_constant() {
            IntPoly::from_poly(&Polynomial::one(p.context()), order)
        } else {
            IntPoly::from_poly(p, order)
        };
        Ok(Self::from_int(p.context(), vec![int], order))
    }

    fn from_int(ctx: &Arc<VarContext>, mut int_gens: Vec<IntPoly>, order: &MonomialOrder) -> Self {
        int_gens.sort_by(|a, b| order.cmp(&b.lead().0, &a.lead().0));
        let generators = int_gens.iter().map(|g| g.to_monic(ctx)).collect();
        Self { ctx: ctx.clone(), generators, order: order.clone(), reduced: true, int_gens }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.int_gens.iter().map(|g| g.lead().0.clone()).collect()
    }

    /// True iff the ideal is the whole ring.
    pub fn contains_one(&self) -> bool {
        self.int_gens.iter().any(IntPoly::is_constant)
    }

    /// Canonical representative of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut steps = Steps::new(u64::MAX);
        self.normal_form_counted(f, &mut steps).expect("unbounded budget")
    }

    pub fn normal_form_counted(&self, f: &Polynomial, steps: &mut Steps) -> Result<Polynomial, GroebnerError> {
        assert!(same_context(f.context(), &self.ctx), "normal_form: context mismatch");
        if f.is_zero() {
            return Ok(f.clone());
        }
        if self.contains_one() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let (p, k) = IntPoly::with_factor(f, &self.order);
        let refs: Vec<&IntPoly> = self.int_gens.iter().collect();
        let r = reduce(&p, &refs, &self.order, steps)?;
        if r.poly.is_zero() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let factor = k / r.scale;
        let terms = r.poly.terms.into_iter().map(|(m, c)| (m, num_rational::BigRational::from_integer(c) * &factor));
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Gröbner basis of the ideal generated by `gens`, failing once more than
/// `budget` reduction steps have been spent.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, budget: u64) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_counted(gens, order, &mut Steps::new(budget))
}

struct PairSet {
    pairs: Vec<(usize, usize, Monomial)>,
}

pub fn buchberger_counted(gens: &[Polynomial], order: &MonomialOrder, steps: &mut Steps) -> Result<GroebnerBasis, GroebnerError> {
    let ctx = match gens.iter().find(|g| !g.is_zero()) {
        Some(g) => g.context().clone(),
        None => return Err(GroebnerError::ZeroIdeal),
    };
    if gens.iter().any(|g| !same_context(g.context(), &ctx)) {
        return Err(GroebnerError::ContextMismatch);
    }
    let one = || GroebnerBasis::from_int(&ctx, vec![IntPoly::from_poly(&Polynomial::one(&ctx), order)], order);

    let mut polys: Vec<IntPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs = PairSet { pairs: Vec::new() };

    // Lower-degree generators first keeps the early basis small.
    let mut input: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    input.sort_by_key(|g| (g.total_degree(), g.len()));
    for g in input {
        let p = IntPoly::from_poly(g, order);
        let basis: Vec<&IntPoly> = active.iter().map(|&i| &polys[i]).collect();
        let r = reduce(&p, &basis, order, steps)?.poly;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(one());
        }
        polys.push(r);
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }

    while !pairs.pairs.is_empty() {
        let best = (0..pairs.pairs.len())
            .min_by(|&a, &b| order.cmp(&pairs.pairs[a].2, &pairs.pairs[b].2))
            .expect("nonempty");
        let (i, j, _) = pairs.pairs.swap_remove(best);
        let s = s_poly(&polys[i], &polys[j], order);
        if s.is_zero() {
            continue;
        }
        let basis: Vec<&IntPoly> = active.iter().map(|&k| &polys[k]).collect();
        let r = reduce(&s, &basis, order, steps)?.poly;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(one());
        }
        polys.push(r);
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }

    // Interreduce: the active leading monomials are already minimal, so only
    // tails change.
    let mut reduced = Vec::with_capacity(active.len());
    for (k, &i) in active.iter().enumerate() {
        let others: Vec<&IntPoly> = active.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, &j)| &polys[j]).collect();
        reduced.push(reduce(&polys[i], &others, order, steps)?.poly);
    }
    Ok(GroebnerBasis::from_int(&ctx, reduced, order))
}

/// Gebauer–Möller update after adding `polys[h]`.
fn update(polys: &[IntPoly], active: &mut Vec<usize>, pairs: &mut PairSet, h: usize) {
    let lh = polys[h].lead().0.clone();
    let cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&g| {
            let lg = &polys[g].lead().0;
            (g, lh.lcm(lg), lh.is_coprime(lg))
        })
        .collect();

    // Chain criterion among the new pairs, processed in order so that of
    // several pairs with equal lcm exactly one survives.
    let mut rest: Vec<(usize, Monomial, bool)> = cands;
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while !rest.is_empty() {
        let (g, l, coprime) = rest.remove(0);
        let covered = |l2: &Monomial| l2.divides(&l);
        if coprime || (!rest.iter().any(|(_, l2, _)| covered(l2)) && !kept.iter().any(|(_, l2, _)| covered(l2))) {
            kept.push((g, l, coprime));
        }
    }

    // Old pairs whose lcm is strictly divisible through lh.
    pairs.pairs.retain(|(a, b, l)| {
        !(lh.divides(l) && &polys[*a].lead().0.lcm(&lh) != l && &polys[*b].lead().0.lcm(&lh) != l)
    });

    // Product criterion.
    pairs.pairs.extend(kept.into_iter().filter(|(_, _, coprime)| !coprime).map(|(g, l, _)| (g, h, l)));

    active.retain(|&g| !lh.divides(&polys[g].lead().0));
    active.push(h);
}
