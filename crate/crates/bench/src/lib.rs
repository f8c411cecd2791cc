//! Shared inputs for the criterion benches under `benches/`.

use std::sync::Arc;

use aspec_core::completion::default_order;
use aspec_core::module::simple_modules;
use aspec_core::{fixtures, Algebra, ModuleRep};

/// Catalog fixtures with their simple modules and default order.
pub fn workloads() -> Vec<(&'static str, Arc<Algebra>, Vec<ModuleRep>, usize)> {
    fixtures::catalog()
        .into_iter()
        .map(|(name, a)| {
            let a = Arc::new(a);
            let family = simple_modules(&a).expect("catalog algebras are split");
            let order = default_order(&a);
            (name, a, family, order)
        })
        .collect()
}
