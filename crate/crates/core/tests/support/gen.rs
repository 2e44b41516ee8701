//! Seeded random generators shared by the property tests and the acceptance
//! runner.

use num_bigint::BigUint;
use ordpart::{IntervalSet, Ordinal};
use rand::Rng;

/// A random ordinal with nesting depth up to `depth`.
pub fn ordinal<R: Rng>(rng: &mut R, depth: u32, width: usize, max_coeff: u64) -> Ordinal {
    if depth == 0 || rng.gen_bool(0.25) {
        return Ordinal::from(rng.gen_range(0..=max_coeff));
    }
    let n = rng.gen_range(0..=width);
    let mut terms: Vec<(Ordinal, BigUint)> = (0..n)
        .map(|_| {
            (
                ordinal(rng, depth - 1, width, max_coeff),
                BigUint::from(rng.gen_range(1..=max_coeff.max(1))),
            )
        })
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    terms.dedup_by(|a, b| a.0 == b.0);
    Ordinal::from_terms(terms).expect("sorted and deduplicated")
}

/// A random ordinal strictly below `bound`, or `None` when `bound` is zero.
pub fn below<R: Rng>(rng: &mut R, bound: &Ordinal) -> Option<Ordinal> {
    let terms = bound.terms();
    if terms.is_empty() {
        return None;
    }
    let i = rng.gen_range(0..terms.len());
    let mut out = Ordinal::from_terms(
        terms[..i]
            .iter()
            .map(|t| (t.exponent().clone(), t.coefficient().clone())),
    )
    .expect("prefix of a canonical form");
    let t = &terms[i];
    let c: u64 = t.coefficient().try_into().unwrap_or(u64::MAX);
    let keep = rng.gen_range(0..c.min(8));
    out = out.add(&Ordinal::omega_pow(t.exponent().clone()).mul(&Ordinal::from(keep)));
    Some(out.add(&below_power(rng, t.exponent(), 3)))
}

/// A random ordinal below `ω^e`.
fn below_power<R: Rng>(rng: &mut R, e: &Ordinal, budget: u32) -> Ordinal {
    if e.is_zero() || budget == 0 || rng.gen_bool(0.3) {
        return Ordinal::zero();
    }
    let Some(e2) = below(rng, e) else {
        return Ordinal::zero();
    };
    let head = Ordinal::omega_pow(e2.clone()).mul(&Ordinal::from(rng.gen_range(1..=4u64)));
    head.add(&below_power(rng, &e2, budget - 1))
}

/// A random subset of `[0, bound)` made of up to `pieces` intervals.
pub fn interval_set<R: Rng>(rng: &mut R, bound: &Ordinal, pieces: usize) -> IntervalSet {
    let mut points: Vec<Ordinal> = (0..2 * pieces)
        .filter_map(|_| {
            if rng.gen_bool(0.1) {
                Some(bound.clone())
            } else {
                below(rng, bound)
            }
        })
        .collect();
    points.sort();
    points.dedup();
    IntervalSet::from_ranges(points.chunks_exact(2).map(|w| (w[0].clone(), w[1].clone())))
}

/// Shifts every element of `s` up by `offset` on the left.
pub fn shift(offset: &Ordinal, s: &IntervalSet) -> IntervalSet {
    IntervalSet::from_ranges(
        s.intervals()
            .iter()
            .map(|i| (offset.add(&i.lo), offset.add(&i.hi))),
    )
}

/// An admissible input `(A, A1, x)` for trimming with indecomposable `alpha`.
pub fn trim_instance<R: Rng>(rng: &mut R, alpha: &Ordinal) -> (IntervalSet, IntervalSet, Ordinal) {
    let start = ordinal(rng, 2, 2, 3);
    // A: an optional short prefix followed by a block of type alpha.
    let mut a = IntervalSet::empty();
    let mut cursor = start;
    if rng.gen_bool(0.5) {
        let len = below(rng, alpha).unwrap_or_else(Ordinal::zero);
        a = a.union(&IntervalSet::range(cursor.clone(), cursor.add(&len)));
        cursor = cursor.add(&len).add(&Ordinal::from(rng.gen_range(1..4u64)));
    }
    let block = IntervalSet::range(cursor.clone(), cursor.add(alpha));
    a = a.union(&block);
    // A1: A with some points and a short initial stretch of the block removed.
    let mut a1 = a.clone();
    if rng.gen_bool(0.5) {
        let pos = below(rng, alpha).unwrap_or_else(Ordinal::zero);
        let cut = block.element_at(&pos).expect("pos below alpha");
        a1 = a1.difference(&IntervalSet::range(cursor.clone(), cut));
    }
    for _ in 0..rng.gen_range(0..3) {
        let pos = below(rng, &a.order_type()).unwrap_or_else(Ordinal::zero);
        if let Some(p) = a.element_at(&pos) {
            a1 = a1.difference(&IntervalSet::singleton(p));
        }
    }
    if rng.gen_bool(0.3) {
        a1 = a1.intersect(&block);
    }
    let pos = below(rng, &a.order_type()).expect("A is nonempty");
    let x = a.element_at(&pos).expect("pos below tp A");
    (a, a1, x)
}

/// A strictly increasing finite sequence below `beta`.
pub fn cut_points<R: Rng>(rng: &mut R, beta: &Ordinal, max: usize) -> Vec<Ordinal> {
    let mut f: Vec<Ordinal> = (0..rng.gen_range(0..=max))
        .filter_map(|_| below(rng, beta))
        .collect();
    f.sort();
    f.dedup();
    f
}
