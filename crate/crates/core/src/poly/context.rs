use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered, immutable list of variable names shared by every polynomial of
/// one ring. The index of a name never changes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

impl VarContext {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(PolyError::EmptyContext);
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(PolyError::DuplicateName(name.clone()));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// `x1, x2, …, x{count}`.
    pub fn numbered(prefix: &str, count: usize) -> Arc<Self> {
        Self::new((1..=count).map(|i| format!("{prefix}{i}"))).expect("numbered names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

/// Letters and digits starting with a letter, with at most one trailing prime.
pub fn is_identifier(s: &str) -> bool {
    let body = s.strip_suffix('\'').unwrap_or(s);
    let mut chars = body.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

pub(crate) fn same_context(a: &Arc<VarContext>, b: &Arc<VarContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
