//! Sets of ordinals given as finite unions of half-open intervals `[lo, hi)`.
//!
//! Intervals are kept sorted, disjoint and non-adjacent, so each set has
//! exactly one representation. Position `δ` of a set is its `δ`-th element in
//! increasing order. This is the order isomorphism with its order type.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::expr::{Cursor, ParseError};
use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("{0} is not indecomposable")]
    NotIndecomposable(Ordinal),
    #[error("alpha must exceed 1, got {0}")]
    AlphaTooSmall(Ordinal),
    #[error("order type of {set} is {found}, expected {expected}")]
    OrderTypeMismatch {
        set: &'static str,
        expected: Ordinal,
        found: Ordinal,
    },
    #[error("{sub} is not a subset of {sup}")]
    NotSubset {
        sub: &'static str,
        sup: &'static str,
    },
    #[error("{x} is not an element of {set}")]
    NotMember { x: Ordinal, set: &'static str },
    #[error("{x} is not below {bound}")]
    OutOfRange { x: Ordinal, bound: Ordinal },
    #[error("cut points must be strictly increasing: {prev} then {next}")]
    NotIncreasing { prev: Ordinal, next: Ordinal },
    #[error("set is not contained in [0, {0})")]
    NotWithin(Ordinal),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Ordinal,
    pub hi: Ordinal,
}

impl Interval {
    pub fn order_type(&self) -> Ordinal {
        self.lo.sub_left(&self.hi).expect("lo < hi")
    }

    fn contains(&self, x: &Ordinal) -> bool {
        self.lo <= *x && *x < self.hi
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    /// `[lo, hi)`; empty when `lo >= hi`.
    pub fn range(lo: Ordinal, hi: Ordinal) -> Self {
        Self::from_ranges([(lo, hi)])
    }

    pub fn singleton(x: Ordinal) -> Self {
        let hi = x.successor();
        Self::range(x, hi)
    }

    /// Normalizes an arbitrary list of ranges, dropping empty ones and merging
    /// overlapping or adjacent ones.
    pub fn from_ranges(ranges: impl IntoIterator<Item = (Ordinal, Ordinal)>) -> Self {
        let mut raw: Vec<Interval> = ranges
            .into_iter()
            .filter(|(lo, hi)| lo < hi)
            .map(|(lo, hi)| Interval { lo, hi })
            .collect();
        raw.sort_by(|a, b| a.lo.cmp(&b.lo));
        let mut intervals: Vec<Interval> = Vec::with_capacity(raw.len());
        for r in raw {
            match intervals.last_mut() {
                Some(last) if r.lo <= last.hi => {
                    if r.hi > last.hi {
                        last.hi = r.hi;
                    }
                }
                _ => intervals.push(r),
            }
        }
        IntervalSet { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn min(&self) -> Option<&Ordinal> {
        self.intervals.first().map(|i| &i.lo)
    }

    /// Least upper edge: every element is below it.
    pub fn sup(&self) -> Option<&Ordinal> {
        self.intervals.last().map(|i| &i.hi)
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        let idx = self.intervals.partition_point(|i| i.hi <= *x);
        self.intervals.get(idx).is_some_and(|i| i.contains(x))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        Self::from_ranges(
            self.intervals
                .iter()
                .chain(&other.intervals)
                .map(|i| (i.lo.clone(), i.hi.clone())),
        )
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.intervals.len() && j < other.intervals.len() {
            let a = &self.intervals[i];
            let b = &other.intervals[j];
            let lo = (&a.lo).max(&b.lo);
            let hi = (&a.hi).min(&b.hi);
            if lo < hi {
                out.push((lo.clone(), hi.clone()));
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::from_ranges(out)
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let mut j = 0;
        for a in &self.intervals {
            let mut lo = a.lo.clone();
            while j < other.intervals.len() && other.intervals[j].hi <= lo {
                j += 1;
            }
            let mut k = j;
            while k < other.intervals.len() && other.intervals[k].lo < a.hi {
                let b = &other.intervals[k];
                if lo < b.lo {
                    out.push((lo.clone(), b.lo.clone()));
                }
                if b.hi > lo {
                    lo = b.hi.clone();
                }
                if lo >= a.hi {
                    break;
                }
                k += 1;
            }
            if lo < a.hi {
                out.push((lo, a.hi.clone()));
            }
        }
        Self::from_ranges(out)
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn order_type(&self) -> Ordinal {
        self.intervals
            .iter()
            .fold(Ordinal::zero(), |acc, i| acc.add(&i.order_type()))
    }

    /// `A < B`: every element of `A` lies below every element of `B`.
    pub fn sets_less(&self, other: &IntervalSet) -> bool {
        match (self.sup(), other.min()) {
            (Some(sup), Some(min)) => sup <= min,
            _ => true,
        }
    }

    /// Elements strictly greater than `x`.
    pub fn above(&self, x: &Ordinal) -> IntervalSet {
        let floor = x.successor();
        Self::from_ranges(
            self.intervals
                .iter()
                .map(|i| ((&i.lo).max(&floor).clone(), i.hi.clone())),
        )
    }

    /// The element at position `pos`, if the order type exceeds `pos`.
    pub fn element_at(&self, pos: &Ordinal) -> Option<Ordinal> {
        let mut before = Ordinal::zero();
        for i in &self.intervals {
            let after = before.add(&i.order_type());
            if *pos < after {
                let offset = before.sub_left(pos).expect("before <= pos");
                return Some(i.lo.add(&offset));
            }
            before = after;
        }
        None
    }

    /// Splits into the elements at positions below `pos` and the rest.
    pub fn split_at_position(&self, pos: &Ordinal) -> (IntervalSet, IntervalSet) {
        match self.element_at(pos) {
            None => (self.clone(), IntervalSet::empty()),
            Some(cut) => {
                let below = IntervalSet::range(Ordinal::zero(), cut.clone());
                (self.intersect(&below), self.difference(&below))
            }
        }
    }

    /// Given `A` of indecomposable type `alpha > 1`, `A1 ⊆ A` also of type
    /// `alpha` and `x ∈ A`, returns `A2 ⊆ A1` of type `alpha` lying entirely
    /// above `x`.
    pub fn trim_above(
        a: &IntervalSet,
        a1: &IntervalSet,
        x: &Ordinal,
        alpha: &Ordinal,
    ) -> Result<IntervalSet, IntervalError> {
        if !alpha.is_indecomposable() {
            return Err(IntervalError::NotIndecomposable(alpha.clone()));
        }
        if *alpha <= Ordinal::one() {
            return Err(IntervalError::AlphaTooSmall(alpha.clone()));
        }
        let tp = a.order_type();
        if tp != *alpha {
            return Err(IntervalError::OrderTypeMismatch {
                set: "A",
                expected: alpha.clone(),
                found: tp,
            });
        }
        if !a1.is_subset(a) {
            return Err(IntervalError::NotSubset {
                sub: "A1",
                sup: "A",
            });
        }
        let tp1 = a1.order_type();
        if tp1 != *alpha {
            return Err(IntervalError::OrderTypeMismatch {
                set: "A1",
                expected: alpha.clone(),
                found: tp1,
            });
        }
        if !a.contains(x) {
            return Err(IntervalError::NotMember {
                x: x.clone(),
                set: "A",
            });
        }
        let a2 = a1.above(x);
        debug_assert_eq!(a2.order_type(), *alpha);
        Ok(a2)
    }

    /// Cuts `[0, beta)` at the strictly increasing points `cuts`, returning
    /// `D₀, {ν₁}, D₁, …, {ν_p}, D_p`. Empty segments are kept.
    pub fn segment_partition(
        beta: &Ordinal,
        cuts: &[Ordinal],
    ) -> Result<Vec<IntervalSet>, IntervalError> {
        for w in cuts.windows(2) {
            if w[0] >= w[1] {
                return Err(IntervalError::NotIncreasing {
                    prev: w[0].clone(),
                    next: w[1].clone(),
                });
            }
        }
        if let Some(last) = cuts.last() {
            if last >= beta {
                return Err(IntervalError::OutOfRange {
                    x: last.clone(),
                    bound: beta.clone(),
                });
            }
        }
        let mut pieces = Vec::with_capacity(2 * cuts.len() + 1);
        let mut lo = Ordinal::zero();
        for nu in cuts {
            pieces.push(IntervalSet::range(lo, nu.clone()));
            pieces.push(IntervalSet::singleton(nu.clone()));
            lo = nu.successor();
        }
        pieces.push(IntervalSet::range(lo, beta.clone()));
        Ok(pieces)
    }

    /// Splits `D ⊆ [0, beta)` into consecutive pieces whose order types are
    /// the indecomposable summands of `tp D`, largest first.
    pub fn strong_decompose_set(
        d: &IntervalSet,
        beta: &Ordinal,
    ) -> Result<Vec<IntervalSet>, IntervalError> {
        if !d.is_subset(&IntervalSet::range(Ordinal::zero(), beta.clone())) {
            return Err(IntervalError::NotWithin(beta.clone()));
        }
        let mut rest = d.clone();
        let mut pieces = Vec::new();
        for summand in d.order_type().decompose_strong() {
            let (piece, tail) = rest.split_at_position(&summand);
            pieces.push(piece);
            rest = tail;
        }
        debug_assert!(rest.is_empty());
        Ok(pieces)
    }

    pub fn to_unicode_string(&self) -> String {
        self.render(|o| o.to_unicode_string())
    }

    fn render(&self, show: impl Fn(&Ordinal) -> String) -> String {
        if self.intervals.is_empty() {
            return "{}".to_string();
        }
        self.intervals
            .iter()
            .map(|i| format!("[{},{})", show(&i.lo), show(&i.hi)))
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|o| o.to_string()))
    }
}

/// Parses `[a,b)` ranges joined by `+`; `{}` is the empty set.
impl FromStr for IntervalSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        if c.eat('{') {
            c.expect('}', "'}'")?;
            c.finish(&["end of input"])?;
            return Ok(IntervalSet::empty());
        }
        let mut ranges = Vec::new();
        loop {
            c.expect('[', "'['")?;
            let lo = c.expr()?.eval();
            c.expect(',', "','")?;
            let at = c.offset();
            let hi = c.expr()?.eval();
            if hi < lo {
                return Err(ParseError {
                    offset: at,
                    expected: vec!["an upper bound not below the lower bound"],
                    found: s.chars().nth(at),
                });
            }
            c.expect(')', "')'")?;
            ranges.push((lo, hi));
            if !c.eat('+') {
                break;
            }
        }
        c.finish(&["'+'", "end of input"])?;
        Ok(IntervalSet::from_ranges(ranges))
    }
}
