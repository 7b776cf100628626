use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::poly::{grevlex_cmp, Monomial, Polynomial, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Grevlex,
    Lex,
}

/// A monomial order: graded reverse lexicographic or lexicographic, over a
/// priority list of variable indices (first entry is the largest variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        Self { kind: OrderKind::Grevlex, priority: None }
    }

    pub fn lex() -> Self {
        Self { kind: OrderKind::Lex, priority: None }
    }

    /// `priority` must be a permutation of `0..n`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { kind, priority: Some(priority) })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// True when this order sorts exactly like the canonical term order
    /// polynomials are stored in.
    pub fn is_canonical(&self) -> bool {
        self.kind == OrderKind::Grevlex && self.priority.is_none()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match (&self.kind, &self.priority) {
            (OrderKind::Grevlex, None) => grevlex_cmp(a, b),
            (OrderKind::Lex, None) => a.exponents().cmp(b.exponents()),
            (OrderKind::Grevlex, Some(p)) => {
                let (ea, eb) = (a.exponents(), b.exponents());
                a.degree().cmp(&b.degree()).then_with(|| {
                    for &i in p.iter().rev() {
                        if ea[i] != eb[i] {
                            return eb[i].cmp(&ea[i]);
                        }
                    }
                    Ordering::Equal
                })
            }
            (OrderKind::Lex, Some(p)) => {
                let (ea, eb) = (a.exponents(), b.exponents());
                for &i in p {
                    if ea[i] != eb[i] {
                        return ea[i].cmp(&eb[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn leading_term<'a>(&self, p: &'a Polynomial) -> Option<&'a Term> {
        if self.is_canonical() {
            p.leading_term()
        } else {
            p.terms().iter().max_by(|a, b| self.cmp(&a.0, &b.0))
        }
    }

    pub fn leading_monomial<'a>(&self, p: &'a Polynomial) -> Option<&'a Monomial> {
        self.leading_term(p).map(|t| &t.0)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::Grevlex => f.write_str("grevlex"),
            OrderKind::Lex => f.write_str("lex"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(Self::grevlex()),
            "lex" => Ok(Self::lex()),
            other => Err(format!("unknown monomial order `{other}` (expected grevlex or lex)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        let lex = MonomialOrder::lex();
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let grevlex = MonomialOrder::grevlex();
        assert_eq!(grevlex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Less);
    }

    #[test]
    fn priority_permutes_variables() {
        let o = MonomialOrder::with_priority(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        assert_eq!(o.cmp(&m(&[5, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
        let g = MonomialOrder::with_priority(OrderKind::Grevlex, vec![0, 1, 2]).unwrap();
        assert_eq!(g.cmp(&m(&[1, 1, 0]), &m(&[0, 1, 1])), grevlex_cmp(&m(&[1, 1, 0]), &m(&[0, 1, 1])));
        assert!(MonomialOrder::with_priority(OrderKind::Lex, vec![0, 0]).is_none());
    }
}
