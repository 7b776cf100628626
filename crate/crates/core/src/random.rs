//! Seeded random polynomials for identity trials.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::poly::{int, Monomial, Polynomial, VarContext};

/// Shape of random trial inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomShape {
    pub max_degree: u32,
    pub coeff_bound: i64,
    pub max_terms: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        Self { max_degree: 3, coeff_bound: 9, max_terms: 4 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, degree: u32) -> Monomial {
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(e)
}

/// A nonzero polynomial with at most `max_terms` terms of total degree at
/// most `max_degree` and integer coefficients in `[-bound, bound] \ {0}`.
pub fn random_poly<R: Rng>(rng: &mut R, ctx: &Arc<VarContext>, shape: RandomShape) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=shape.max_terms);
        let terms = (0..k).map(|_| {
            let d = rng.gen_range(0..=shape.max_degree);
            (random_monomial(rng, ctx.len(), d), int(nonzero_coeff(rng, shape.coeff_bound)))
        });
        let p = Polynomial::from_terms(ctx, terms.collect::<Vec<_>>());
        if !p.is_zero() {
            return p;
        }
    }
}

/// A nonzero homogeneous polynomial of exactly the given degree.
pub fn random_homogeneous<R: Rng>(rng: &mut R, ctx: &Arc<VarContext>, degree: u32, shape: RandomShape) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=shape.max_terms);
        let terms: Vec<_> = (0..k)
            .map(|_| (random_monomial(rng, ctx.len(), degree), int(nonzero_coeff(rng, shape.coeff_bound))))
            .collect();
        let p = Polynomial::from_terms(ctx, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

fn nonzero_coeff<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}
