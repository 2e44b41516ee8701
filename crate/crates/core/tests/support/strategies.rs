//! proptest strategies for ordinals.

use num_bigint::BigUint;
use ordpart::Ordinal;
use proptest::prelude::*;

/// Ordinals with nesting depth up to `depth`, at most `width` terms per level
/// and coefficients up to `max_coeff`.
pub fn ordinal(depth: u32, width: usize, max_coeff: u64) -> BoxedStrategy<Ordinal> {
    let leaf = (0..=max_coeff).prop_map(Ordinal::from).boxed();
    leaf.prop_recursive(depth, 64, width as u32, move |inner| {
        prop::collection::vec((inner, 1..=max_coeff), 0..=width)
            .prop_map(|mut terms| {
                terms.sort_by(|a, b| b.0.cmp(&a.0));
                terms.dedup_by(|a, b| a.0 == b.0);
                Ordinal::from_terms(terms.into_iter().map(|(e, c)| (e, BigUint::from(c))))
                    .expect("sorted and deduplicated")
            })
            .boxed()
    })
    .boxed()
}

pub fn small_ordinal() -> BoxedStrategy<Ordinal> {
    ordinal(2, 3, 4)
}

pub fn indecomposable() -> BoxedStrategy<Ordinal> {
    ordinal(2, 3, 3).prop_map(Ordinal::omega_pow).boxed()
}
