//! Variable registry: interns symbolic variable names and assigns them a
//! total order (the insertion order). The registry is append-only; clones of
//! the handle share the same underlying table.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub type VarId = u32;

#[derive(Default)]
struct Inner {
    names: Vec<String>,
    index: HashMap<String, VarId>,
}

/// Shared, append-only name table. Insertion order is the canonical variable
/// order used for term sorting and serialization.
#[derive(Clone, Default)]
pub struct VarRegistry {
    inner: Arc<RwLock<Inner>>,
}

impl VarRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Intern a name, returning its id (existing or fresh).
    pub fn intern(&self, name: &str) -> VarId {
        if let Some(&id) = self.inner.read().unwrap().index.get(name) {
            return id;
        }
        let mut inner = self.inner.write().unwrap();
        if let Some(&id) = inner.index.get(name) {
            return id;
        }
        let id = inner.names.len() as VarId;
        inner.names.push(name.to_string());
        inner.index.insert(name.to_string(), id);
        id
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.inner.read().unwrap().index.get(name).copied()
    }

    pub fn name(&self, id: VarId) -> String {
        self.inner.read().unwrap().names[id as usize].clone()
    }

    pub fn len(&self) -> usize {
        self.inner.read().unwrap().names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self) -> Vec<String> {
        self.inner.read().unwrap().names.clone()
    }
}
