use std::sync::Arc;

use super::minors::{mask_of, Minors};
use super::BracketError;
use crate::poly::{same_context, Polynomial, VarContext};

/// `det[∂f_i/∂x_j]` for exactly as many polynomials as variables.
pub fn jacobian(fs: &[Polynomial]) -> Result<Polynomial, BracketError> {
    let Some(first) = fs.first() else {
        return Err(BracketError::Arity { expected: 1, got: 0 });
    };
    let n = first.nvars();
    if fs.len() != n {
        return Err(BracketError::Arity { expected: n, got: fs.len() });
    }
    check_contexts(first.context(), fs)?;
    let rows: Vec<Vec<Polynomial>> = fs.iter().map(Polynomial::gradient).collect();
    Ok(Minors::new(&rows).get(mask_of(&(0..n).collect::<Vec<_>>())))
}

pub(crate) fn check_contexts(ctx: &Arc<VarContext>, fs: &[Polynomial]) -> Result<(), BracketError> {
    if fs.iter().all(|f| same_context(f.context(), ctx)) {
        Ok(())
    } else {
        Err(BracketError::ContextMismatch)
    }
}

/// The Nambu bracket `{f_1, …, f_n} = J(f_1, …, f_n, C_1, …, C_m)` on a ring
/// of `n + m` variables. The usual case is a single `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobianBracket {
    ctx: Arc<VarContext>,
    casimirs: Vec<Polynomial>,
}

impl JacobianBracket {
    /// Arity `N - 1` bracket determined by one non-constant `C` in `N ≥ 3`
    /// variables.
    pub fn new(casimir: Polynomial) -> Result<Self, BracketError> {
        Self::with_casimirs(vec![casimir])
    }

    pub fn with_casimirs(casimirs: Vec<Polynomial>) -> Result<Self, BracketError> {
        let Some(first) = casimirs.first() else {
            return Err(BracketError::NoCasimir);
        };
        let ctx = first.context().clone();
        check_contexts(&ctx, &casimirs)?;
        if let Some(c) = casimirs.iter().find(|c| c.is_constant()) {
            return Err(BracketError::ConstantCasimir(c.to_string()));
        }
        if ctx.len() < casimirs.len() + 2 {
            return Err(BracketError::Arity { expected: casimirs.len() + 2, got: ctx.len() });
        }
        Ok(Self { ctx, casimirs })
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn arity(&self) -> usize {
        self.ctx.len() - self.casimirs.len()
    }

    /// The first (usually only) defining polynomial.
    pub fn casimir(&self) -> &Polynomial {
        &self.casimirs[0]
    }

    pub fn casimirs(&self) -> &[Polynomial] {
        &self.casimirs
    }

    pub fn eval(&self, fs: &[Polynomial]) -> Result<Polynomial, BracketError> {
        if fs.len() != self.arity() {
            return Err(BracketError::Arity { expected: self.arity(), got: fs.len() });
        }
        check_contexts(&self.ctx, fs)?;
        // Casimir rows first: their sub-minors are shared by every expansion.
        let rows: Vec<Vec<Polynomial>> = self.casimirs.iter().chain(fs).map(Polynomial::gradient).collect();
        let det = Minors::new(&rows).get(mask_of(&(0..self.ctx.len()).collect::<Vec<_>>()));
        // Moving m casimir rows past n argument rows costs (-1)^(m·n).
        Ok(if (self.casimirs.len() * self.arity()) % 2 == 1 { -det } else { det })
    }

    pub(crate) fn degree_shift(&self) -> Option<i64> {
        let mut shift = 0i64;
        for c in &self.casimirs {
            if !c.is_homogeneous() {
                return None;
            }
            shift += i64::from(c.total_degree()?) - 1;
        }
        Some(shift)
    }
}
