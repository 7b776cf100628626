//! Jacobian (Nambu) brackets, structure-table brackets and exact identity
//! verifiers.

mod identities;
mod jacobian;
mod minors;
mod table;

use std::sync::Arc;

use thiserror::Error;

pub use identities::{
    verify_filippov, verify_leibniz, verify_skew, verify_strong, IdentityFailure, IdentityReport, TrialConfig,
};
pub use jacobian::{jacobian, JacobianBracket};
pub use table::{sort_sign, StructureTable, TableBracket};

use crate::poly::{Polynomial, VarContext};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("arguments live in different variable contexts")]
    ContextMismatch,
    #[error("a Jacobian bracket needs at least one defining polynomial")]
    NoCasimir,
    #[error("defining polynomial `{0}` is constant")]
    ConstantCasimir(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("structure constant `{0}` has degree above one")]
    NonLinearConstant(String),
    #[error("tuple {0:?} repeats a generator but was given a nonzero value")]
    RepeatedGenerator(Vec<usize>),
}

/// An n-ary skew-symmetric bracket on a polynomial ring that is a
/// derivation in every slot.
pub trait Bracket: Sync {
    fn arity(&self) -> usize;
    fn context(&self) -> &Arc<VarContext>;
    fn eval(&self, args: &[Polynomial]) -> Result<Polynomial, BracketError>;

    /// `s` with `deg{f_1,…,f_n} = Σ(deg f_i − 1) + s` on homogeneous inputs,
    /// when the bracket is graded.
    fn degree_shift(&self) -> Option<i64>;

    /// Bracket of generators by index.
    fn on_generators(&self, tuple: &[usize]) -> Result<Polynomial, BracketError> {
        let args: Vec<Polynomial> = tuple.iter().map(|&i| Polynomial::var(self.context(), i)).collect();
        self.eval(&args)
    }
}

impl Bracket for JacobianBracket {
    fn arity(&self) -> usize {
        JacobianBracket::arity(self)
    }
    fn context(&self) -> &Arc<VarContext> {
        JacobianBracket::context(self)
    }
    fn eval(&self, args: &[Polynomial]) -> Result<Polynomial, BracketError> {
        JacobianBracket::eval(self, args)
    }
    fn degree_shift(&self) -> Option<i64> {
        JacobianBracket::degree_shift(self)
    }
}

impl Bracket for TableBracket {
    fn arity(&self) -> usize {
        TableBracket::arity(self)
    }
    fn context(&self) -> &Arc<VarContext> {
        TableBracket::context(self)
    }
    fn eval(&self, args: &[Polynomial]) -> Result<Polynomial, BracketError> {
        TableBracket::eval(self, args)
    }
    fn degree_shift(&self) -> Option<i64> {
        TableBracket::degree_shift(self)
    }
    fn on_generators(&self, tuple: &[usize]) -> Result<Polynomial, BracketError> {
        if tuple.len() != self.arity() {
            return Err(BracketError::Arity { expected: self.arity(), got: tuple.len() });
        }
        Ok(self.table().get(tuple))
    }
}

/// Either bracket construction.
#[derive(Debug, Clone, PartialEq)]
pub enum BracketStructure {
    Jacobian(JacobianBracket),
    Table(TableBracket),
}

impl BracketStructure {
    pub fn as_jacobian(&self) -> Option<&JacobianBracket> {
        match self {
            Self::Jacobian(j) => Some(j),
            Self::Table(_) => None,
        }
    }

    pub fn as_table(&self) -> Option<&TableBracket> {
        match self {
            Self::Table(t) => Some(t),
            Self::Jacobian(_) => None,
        }
    }

    fn inner(&self) -> &dyn Bracket {
        match self {
            Self::Jacobian(j) => j,
            Self::Table(t) => t,
        }
    }
}

impl Bracket for BracketStructure {
    fn arity(&self) -> usize {
        self.inner().arity()
    }
    fn context(&self) -> &Arc<VarContext> {
        self.inner().context()
    }
    fn eval(&self, args: &[Polynomial]) -> Result<Polynomial, BracketError> {
        self.inner().eval(args)
    }
    fn degree_shift(&self) -> Option<i64> {
        self.inner().degree_shift()
    }
    fn on_generators(&self, tuple: &[usize]) -> Result<Polynomial, BracketError> {
        self.inner().on_generators(tuple)
    }
}

impl From<JacobianBracket> for BracketStructure {
    fn from(j: JacobianBracket) -> Self {
        Self::Jacobian(j)
    }
}

impl From<TableBracket> for BracketStructure {
    fn from(t: TableBracket) -> Self {
        Self::Table(t)
    }
}

/// `J(a,b,c) = {{a,b},c} − {{a,c},b} − {a,{b,c}}` for a binary bracket.
pub fn ternary_jacobian<B: Bracket + ?Sized>(b: &B, x: &Polynomial, y: &Polynomial, z: &Polynomial) -> Result<Polynomial, BracketError> {
    if b.arity() != 2 {
        return Err(BracketError::Arity { expected: 2, got: b.arity() });
    }
    let br = |p: &Polynomial, q: &Polynomial| b.eval(&[p.clone(), q.clone()]);
    let t1 = br(&br(x, y)?, z)?;
    let t2 = br(&br(x, z)?, y)?;
    let t3 = br(x, &br(y, z)?)?;
    Ok(&(&t1 - &t2) - &t3)
}

/// All strictly increasing `k`-tuples from `0..n`.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// The bracket on every increasing generator tuple, zero entries omitted.
pub fn generator_table<B: Bracket + ?Sized>(b: &B) -> Vec<(Vec<usize>, Polynomial)> {
    increasing_tuples(b.context().len(), b.arity())
        .into_iter()
        .filter_map(|t| {
            let v = b.on_generators(&t).expect("generator tuple has bracket arity");
            (!v.is_zero()).then_some((t, v))
        })
        .collect()
}

#[cfg(test)]
mod tests;
