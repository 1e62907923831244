use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// An ordered, shared list of variable names.
#[derive(Clone)]
pub struct VarList(Arc<[String]>);

impl VarList {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(PolyError::EmptyVariableList);
        }
        for (i, n) in names.iter().enumerate() {
            if !is_valid_name(n) {
                return Err(PolyError::InvalidVariableName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarList(names.into()))
    }

    /// `prefix0, prefix1, ..., prefix{count-1}`.
    pub fn indexed(prefix: &str, count: usize) -> Self {
        VarList::new((0..count).map(|i| format!("{prefix}{i}"))).expect("valid indexed names")
    }

    /// Concatenation of two lists; names must stay distinct.
    pub fn concat(&self, other: &VarList) -> Result<Self, PolyError> {
        VarList::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Sub-list of the given index range.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Result<Self, PolyError> {
        VarList::new(self.0[range].iter().cloned())
    }

    /// List with the variables in `range` removed.
    pub fn without(&self, range: std::ops::Range<usize>) -> Result<Self, PolyError> {
        VarList::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !range.contains(i))
                .map(|(_, n)| n.clone()),
        )
    }
}

fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl PartialEq for VarList {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarList {}

impl fmt::Debug for VarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
