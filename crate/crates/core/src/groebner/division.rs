use num_traits::Zero;

use super::{GroebnerError, MonomialOrder};
use crate::poly::{same_context, Polynomial};

/// Quotients and remainder of multivariate division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division with remainder: `f = Σ q_i d_i + r` where no term
/// of `r` is divisible by a leading monomial of the divisors. Divisors are
/// tried in list order.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Division, GroebnerError> {
    let ctx = f.context();
    if let Some(i) = divisors.iter().position(Polynomial::is_zero) {
        return Err(GroebnerError::ZeroDivisor(i));
    }
    if divisors.iter().any(|d| !same_context(d.context(), ctx)) {
        return Err(GroebnerError::ContextMismatch);
    }
    let leads: Vec<_> = divisors.iter().map(|d| order.leading_term(d).expect("nonzero").clone()).collect();
    let mut quotients = vec![Polynomial::zero(ctx); divisors.len()];
    let mut remainder = Polynomial::zero(ctx);
    let mut p = f.clone();
    while let Some((m, c)) = order.leading_term(&p).cloned() {
        debug_assert!(!c.is_zero());
        let hit = leads.iter().enumerate().find_map(|(i, (lm, lc))| lm.divide_into(&m).map(|q| (i, q, &c / lc)));
        let lead = Polynomial::monomial(ctx, m, c);
        match hit {
            Some((i, q, coeff)) => {
                let t = Polynomial::monomial(ctx, q, coeff);
                p = &p - &(&t * &divisors[i]);
                quotients[i] = &quotients[i] + &t;
            }
            None => {
                p = &p - &lead;
                remainder = &remainder + &lead;
            }
        }
    }
    Ok(Division { quotients, remainder })
}
