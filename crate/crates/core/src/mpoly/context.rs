use std::collections::HashSet;
use std::sync::Arc;

use super::PolyError;

/// Ordered, duplicate-free list of variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

pub type Ctx = Arc<VarContext>;

impl VarContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ctx, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarContext { names }))
    }

    /// `prefix0, …, prefix{count−1}`.
    pub fn indexed(prefix: &str, count: usize) -> Ctx {
        Self::indexed_from(prefix, 0, count)
    }

    /// `prefix{start}, …, prefix{start+count−1}`.
    pub fn indexed_from(prefix: &str, start: usize, count: usize) -> Ctx {
        Arc::new(VarContext { names: (start..start + count).map(|i| format!("{prefix}{i}")).collect() })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A new context with `extra` appended.
    pub fn extended<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Ctx, PolyError> {
        let mut names = self.names.clone();
        names.extend(extra.into_iter().map(Into::into));
        Self::new(names)
    }
}

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}
