use std::collections::BTreeMap;
use std::sync::Arc;

use super::jacobian::check_contexts;
use super::minors::{mask_of, Minors};
use super::BracketError;
use crate::poly::{same_context, Polynomial, VarContext};

/// Sign of the permutation sorting `tuple`, or `None` if an index repeats.
pub fn sort_sign(tuple: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut sorted = tuple.to_vec();
    let mut sign = 1i8;
    // insertion sort counting transpositions
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((sorted, sign))
    }
}

/// Skew-symmetric n-ary structure constants on the generators of a
/// polynomial ring, stored on strictly increasing index tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTable {
    ctx: Arc<VarContext>,
    arity: usize,
    constants: BTreeMap<Vec<usize>, Polynomial>,
}

impl StructureTable {
    pub fn new(ctx: &Arc<VarContext>, arity: usize) -> Result<Self, BracketError> {
        if arity < 2 || arity > ctx.len() {
            return Err(BracketError::Arity { expected: ctx.len(), got: arity });
        }
        Ok(Self { ctx: ctx.clone(), arity, constants: BTreeMap::new() })
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Sets `[e_{t_1}, …, e_{t_n}] = value`; any ordering of the tuple is
    /// accepted and normalized with the permutation sign.
    pub fn set(&mut self, tuple: &[usize], value: Polynomial) -> Result<(), BracketError> {
        if tuple.len() != self.arity {
            return Err(BracketError::Arity { expected: self.arity, got: tuple.len() });
        }
        if let Some(&i) = tuple.iter().find(|&&i| i >= self.ctx.len()) {
            return Err(BracketError::GeneratorOutOfRange(i));
        }
        if !same_context(value.context(), &self.ctx) {
            return Err(BracketError::ContextMismatch);
        }
        if value.total_degree().is_some_and(|d| d > 1) {
            return Err(BracketError::NonLinearConstant(value.to_string()));
        }
        let Some((key, sign)) = sort_sign(tuple) else {
            return if value.is_zero() { Ok(()) } else { Err(BracketError::RepeatedGenerator(tuple.to_vec())) };
        };
        let value = if sign < 0 { -value } else { value };
        if value.is_zero() {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, value);
        }
        Ok(())
    }

    /// `[e_{t_1}, …, e_{t_n}]` for any tuple; zero on repeats.
    pub fn get(&self, tuple: &[usize]) -> Polynomial {
        match sort_sign(tuple) {
            None => Polynomial::zero(&self.ctx),
            Some((key, sign)) => match self.constants.get(&key) {
                None => Polynomial::zero(&self.ctx),
                Some(v) if sign < 0 => -v,
                Some(v) => v.clone(),
            },
        }
    }

    /// Nonzero entries on increasing tuples.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.constants.iter()
    }

    pub fn len(&self) -> usize {
        self.constants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constants.is_empty()
    }

    /// Same entries over another context with the same generator count.
    pub fn renamed(&self, ctx: &Arc<VarContext>) -> Self {
        assert_eq!(ctx.len(), self.ctx.len());
        let constants = self.constants.iter().map(|(k, v)| (k.clone(), v.with_context(ctx))).collect();
        Self { ctx: ctx.clone(), arity: self.arity, constants }
    }
}

/// The unique multi-derivation extending a structure table:
/// `{f_1,…,f_n} = Σ_{i_1<…<i_n} det(∂f_a/∂e_{i_b}) · [e_{i_1},…,e_{i_n}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TableBracket {
    table: StructureTable,
}

impl TableBracket {
    pub fn new(table: StructureTable) -> Self {
        Self { table }
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.table.ctx
    }

    pub fn arity(&self) -> usize {
        self.table.arity
    }

    pub fn eval(&self, fs: &[Polynomial]) -> Result<Polynomial, BracketError> {
        if fs.len() != self.arity() {
            return Err(BracketError::Arity { expected: self.arity(), got: fs.len() });
        }
        check_contexts(self.context(), fs)?;
        let rows: Vec<Vec<Polynomial>> = fs.iter().map(Polynomial::gradient).collect();
        let mut minors = Minors::new(&rows);
        let mut acc = Polynomial::zero(self.context());
        for (key, value) in &self.table.constants {
            let d = minors.get(mask_of(key));
            if !d.is_zero() {
                acc = &acc + &(&d * value);
            }
        }
        Ok(acc)
    }

    pub(crate) fn degree_shift(&self) -> Option<i64> {
        let mut degrees = self.table.constants.values().map(|v| v.is_homogeneous().then(|| v.total_degree()).flatten());
        let first = degrees.next()?;
        if degrees.all(|d| d == first) {
            first.map(i64::from)
        } else {
            None
        }
    }
}
