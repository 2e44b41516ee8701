//! Pair colorings and the finite side of the partition calculus.
//!
//! A [`PairColoring`] is either an explicit table over a finite ground set or
//! a total 2-coloring rule on all pairs below a bound. Rule colorings carry
//! the negative relations: the code-order coloring shows `α ↛ (|α|+1, ω)` and
//! the split coloring shows `α ↛ (α, 3)` for decomposable `α`.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::interval::IntervalSet;
use crate::ordinal::{unpair_u64, Ordinal};

/// Largest `n` for which [`check_arrow_finite`] searches exhaustively.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 8;

/// Number of natural codes scanned by [`RepeatEnumeration`].
pub const DEFAULT_SCAN_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a pair needs two distinct elements, got {0} twice")]
    SamePoint(Ordinal),
    #[error("{0} is outside the domain of the coloring")]
    OutOfDomain(Ordinal),
    #[error("elements must be strictly increasing: {prev} then {next}")]
    NotIncreasing { prev: Ordinal, next: Ordinal },
    #[error("color {color} is out of range for {colors} colors")]
    ColorOutOfRange { color: usize, colors: usize },
    #[error("pair ({0}, {1}) is colored more than once")]
    DuplicatePair(Ordinal, Ordinal),
    #[error("pair ({0}, {1}) has no color")]
    MissingPair(Ordinal, Ordinal),
    #[error("a goal list needs at least one goal")]
    NoGoals,
    #[error("bound must exceed w, got {0}")]
    BoundTooSmall(Ordinal),
    #[error("{0} is indecomposable or below 2")]
    Indecomposable(Ordinal),
    #[error("{set} is not contained in [0, {alpha})")]
    NotBelow { set: IntervalSet, alpha: Ordinal },
    #[error("not 0-homogeneous: {0} meets both sides of the split")]
    NotZeroHomogeneous(IntervalSet),
    #[error("witness is not a coloring of {n} points in {colors} colors")]
    WitnessShape { n: usize, colors: usize },
    #[error("witness has a {color}-homogeneous set of size {size}")]
    WitnessFails { color: usize, size: usize },
    #[error("enumeration of an empty ordinal")]
    EmptyEnumeration,
}

/// A finite, strictly increasing set of ordinals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FinOrdSet(Vec<Ordinal>);

impl FinOrdSet {
    pub fn new(elements: Vec<Ordinal>) -> Result<Self, PartitionError> {
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(PartitionError::NotIncreasing {
                    prev: w[0].clone(),
                    next: w[1].clone(),
                });
            }
        }
        Ok(FinOrdSet(elements))
    }

    pub fn from_unsorted(mut elements: Vec<Ordinal>) -> Self {
        elements.sort();
        elements.dedup();
        FinOrdSet(elements)
    }

    /// `{0, 1, …, n-1}`.
    pub fn naturals(n: usize) -> Self {
        FinOrdSet((0..n as u64).map(Ordinal::from).collect())
    }

    pub fn elements(&self) -> &[Ordinal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, x: &Ordinal) -> Option<usize> {
        self.0.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        self.position(x).is_some()
    }
}

/// Index of the unordered pair `{i, j}`, `i < j`, in the triangular layout.
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// An explicit coloring of every pair of a finite ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableColoring {
    ground: FinOrdSet,
    colors: usize,
    table: Vec<usize>,
}

impl TableColoring {
    /// Colors each pair `x < y` of `ground` by `f(x, y)`.
    pub fn from_fn(
        ground: FinOrdSet,
        colors: usize,
        mut f: impl FnMut(&Ordinal, &Ordinal) -> usize,
    ) -> Result<Self, PartitionError> {
        let n = ground.len();
        let mut table = vec![0; n * n.saturating_sub(1) / 2];
        for j in 0..n {
            for i in 0..j {
                let c = f(&ground.0[i], &ground.0[j]);
                if c >= colors {
                    return Err(PartitionError::ColorOutOfRange { color: c, colors });
                }
                table[pair_index(i, j)] = c;
            }
        }
        Ok(TableColoring {
            ground,
            colors,
            table,
        })
    }

    /// Builds a table from an explicit pair list; every pair must appear once.
    pub fn from_pairs(
        ground: FinOrdSet,
        colors: usize,
        pairs: impl IntoIterator<Item = (Ordinal, Ordinal, usize)>,
    ) -> Result<Self, PartitionError> {
        let n = ground.len();
        let mut table: Vec<Option<usize>> = vec![None; n * n.saturating_sub(1) / 2];
        for (x, y, c) in pairs {
            if c >= colors {
                return Err(PartitionError::ColorOutOfRange { color: c, colors });
            }
            let (i, j) = Self::indices(&ground, &x, &y)?;
            let slot = &mut table[pair_index(i, j)];
            if slot.is_some() {
                return Err(PartitionError::DuplicatePair(x, y));
            }
            *slot = Some(c);
        }
        let mut filled = Vec::with_capacity(table.len());
        for j in 0..n {
            for i in 0..j {
                match table[pair_index(i, j)] {
                    Some(c) => filled.push(c),
                    None => {
                        return Err(PartitionError::MissingPair(
                            ground.0[i].clone(),
                            ground.0[j].clone(),
                        ))
                    }
                }
            }
        }
        Ok(TableColoring {
            ground,
            colors,
            table: filled,
        })
    }

    fn indices(
        ground: &FinOrdSet,
        x: &Ordinal,
        y: &Ordinal,
    ) -> Result<(usize, usize), PartitionError> {
        if x == y {
            return Err(PartitionError::SamePoint(x.clone()));
        }
        let i = ground
            .position(x)
            .ok_or_else(|| PartitionError::OutOfDomain(x.clone()))?;
        let j = ground
            .position(y)
            .ok_or_else(|| PartitionError::OutOfDomain(y.clone()))?;
        Ok((i.min(j), i.max(j)))
    }

    pub fn ground(&self) -> &FinOrdSet {
        &self.ground
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    /// Color of the pair of ground positions `i != j`.
    pub fn color_at(&self, i: usize, j: usize) -> usize {
        self.table[pair_index(i.min(j), i.max(j))]
    }

    /// All pairs `(x, y, color)` with `x < y`, ordered by `y` then `x`.
    pub fn pairs(&self) -> impl Iterator<Item = (&Ordinal, &Ordinal, usize)> + '_ {
        let g = &self.ground.0;
        (0..g.len()).flat_map(move |j| (0..j).map(move |i| (&g[i], &g[j], self.color_at(i, j))))
    }

    pub fn is_homogeneous(&self, positions: &[usize], color: usize) -> bool {
        positions.iter().enumerate().all(|(a, &i)| {
            positions[a + 1..]
                .iter()
                .all(|&j| self.color_at(i, j) == color)
        })
    }

    /// The lexicographically least `color`-homogeneous subset of size `size`.
    pub fn find_homogeneous(&self, color: usize, size: usize) -> Option<FinOrdSet> {
        let mut chosen = Vec::with_capacity(size);
        if self.extend_homogeneous(color, size, 0, &mut chosen) {
            Some(FinOrdSet(
                chosen.iter().map(|&i| self.ground.0[i].clone()).collect(),
            ))
        } else {
            None
        }
    }

    fn extend_homogeneous(
        &self,
        color: usize,
        size: usize,
        from: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == size {
            return true;
        }
        let n = self.ground.len();
        for v in from..n {
            if n - v < size - chosen.len() {
                break;
            }
            if chosen.iter().all(|&u| self.color_at(u, v) == color) {
                chosen.push(v);
                if self.extend_homogeneous(color, size, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringRule {
    /// For `x < y`: color 0 iff `code(x) < code(y)`.
    CodeOrder,
    /// Color 1 iff exactly one of the pair lies below `split`.
    Split { split: Ordinal },
}

/// A total 2-coloring of all pairs below `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleColoring {
    pub bound: Ordinal,
    pub rule: ColoringRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairColoring {
    Table(TableColoring),
    Rule(RuleColoring),
}

impl PairColoring {
    pub fn colors(&self) -> usize {
        match self {
            PairColoring::Table(t) => t.colors,
            PairColoring::Rule(_) => 2,
        }
    }

    pub fn in_domain(&self, x: &Ordinal) -> bool {
        match self {
            PairColoring::Table(t) => t.ground.contains(x),
            PairColoring::Rule(r) => *x < r.bound,
        }
    }

    pub fn color_of(&self, x: &Ordinal, y: &Ordinal) -> Result<usize, PartitionError> {
        match self {
            PairColoring::Table(t) => {
                let (i, j) = TableColoring::indices(&t.ground, x, y)?;
                Ok(t.color_at(i, j))
            }
            PairColoring::Rule(r) => {
                if x == y {
                    return Err(PartitionError::SamePoint(x.clone()));
                }
                for p in [x, y] {
                    if *p >= r.bound {
                        return Err(PartitionError::OutOfDomain(p.clone()));
                    }
                }
                let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                Ok(match &r.rule {
                    ColoringRule::CodeOrder => usize::from(lo.godel_code() > hi.godel_code()),
                    ColoringRule::Split { split } => usize::from((lo < split) != (hi < split)),
                })
            }
        }
    }

    /// `{y ∈ s : y ≠ x, color_of(x, y) = color}`.
    pub fn color_slice(
        &self,
        x: &Ordinal,
        color: usize,
        s: &FinOrdSet,
    ) -> Result<FinOrdSet, PartitionError> {
        if !self.in_domain(x) {
            return Err(PartitionError::OutOfDomain(x.clone()));
        }
        let mut out = Vec::new();
        for y in s.elements().iter().filter(|y| *y != x) {
            if self.color_of(x, y)? == color {
                out.push(y.clone());
            }
        }
        Ok(FinOrdSet(out))
    }

    /// Restricts the coloring to a finite sample of its domain.
    pub fn tabulate(&self, sample: &FinOrdSet) -> Result<TableColoring, PartitionError> {
        if let Some(x) = sample.elements().iter().find(|x| !self.in_domain(x)) {
            return Err(PartitionError::OutOfDomain(x.clone()));
        }
        TableColoring::from_fn(sample.clone(), self.colors(), |x, y| {
            self.color_of(x, y).expect("sample lies in the domain")
        })
    }
}

/// The code-order coloring below `bound > ω`: a pair `x < y` gets color 0
/// when the ordinal order agrees with the order of Gödel codes, else 1.
pub fn sierpinski_coloring(bound: &Ordinal) -> Result<PairColoring, PartitionError> {
    if *bound <= Ordinal::omega() {
        return Err(PartitionError::BoundTooSmall(bound.clone()));
    }
    Ok(PairColoring::Rule(RuleColoring {
        bound: bound.clone(),
        rule: ColoringRule::CodeOrder,
    }))
}

/// For decomposable `alpha = β + γ`, colors a pair 1 iff it straddles `β`.
pub fn decomposable_coloring(alpha: &Ordinal) -> Result<PairColoring, PartitionError> {
    let (split, _) = alpha
        .split_decomposable()
        .ok_or_else(|| PartitionError::Indecomposable(alpha.clone()))?;
    Ok(PairColoring::Rule(RuleColoring {
        bound: alpha.clone(),
        rule: ColoringRule::Split { split },
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroHomogVerdict {
    pub split: (Ordinal, Ordinal),
    pub segment: Segment,
    pub order_type: Ordinal,
    pub below_alpha: bool,
}

/// Checks that `h` is 0-homogeneous for the split coloring of `alpha`, which
/// confines it to `[0, β)` or `[β, alpha)` and so to order type below `alpha`.
pub fn check_zero_homog_segment(
    alpha: &Ordinal,
    h: &IntervalSet,
) -> Result<ZeroHomogVerdict, PartitionError> {
    let (beta, gamma) = alpha
        .split_decomposable()
        .ok_or_else(|| PartitionError::Indecomposable(alpha.clone()))?;
    if !h.is_subset(&IntervalSet::range(Ordinal::zero(), alpha.clone())) {
        return Err(PartitionError::NotBelow {
            set: h.clone(),
            alpha: alpha.clone(),
        });
    }
    let lower = IntervalSet::range(Ordinal::zero(), beta.clone());
    let segment = if h.is_subset(&lower) {
        Segment::Lower
    } else if h.intersect(&lower).is_empty() {
        Segment::Upper
    } else {
        return Err(PartitionError::NotZeroHomogeneous(h.clone()));
    };
    let order_type = h.order_type();
    let below_alpha = order_type < *alpha;
    Ok(ZeroHomogVerdict {
        split: (beta, gamma),
        segment,
        order_type,
        below_alpha,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowVerdict {
    /// Some goal is 0, or 1 with a non-empty ground set.
    HoldsDegenerate,
    /// Every coloring was examined.
    Holds,
    /// A coloring with no homogeneous set of the required sizes.
    Refuted(TableColoring),
    /// `n` exceeds the search cap and no witness was supplied.
    Inconclusive,
}

impl ArrowVerdict {
    pub fn holds(&self) -> Option<bool> {
        match self {
            ArrowVerdict::HoldsDegenerate | ArrowVerdict::Holds => Some(true),
            ArrowVerdict::Refuted(_) => Some(false),
            ArrowVerdict::Inconclusive => None,
        }
    }
}

/// Decides `n ⟶ (goals[0], …, goals[k-1])²` for finite `n` with the default cap.
pub fn check_arrow_finite(n: usize, goals: &[usize]) -> Result<ArrowVerdict, PartitionError> {
    check_arrow_finite_with(n, goals, DEFAULT_EXHAUSTIVE_CAP, None)
}

/// Decides a finite arrow relation. A supplied `witness` is checked and, if
/// it has no homogeneous set of any goal size, refutes the relation without
/// search. Otherwise the relation is searched exhaustively when `n <= cap`.
pub fn check_arrow_finite_with(
    n: usize,
    goals: &[usize],
    cap: usize,
    witness: Option<&TableColoring>,
) -> Result<ArrowVerdict, PartitionError> {
    if goals.is_empty() {
        return Err(PartitionError::NoGoals);
    }
    if goals.iter().any(|&g| g == 0 || (g == 1 && n >= 1)) {
        return Ok(ArrowVerdict::HoldsDegenerate);
    }
    if let Some(w) = witness {
        verify_counterexample(n, goals, w)?;
        return Ok(ArrowVerdict::Refuted(w.clone()));
    }
    if n > cap {
        return Ok(ArrowVerdict::Inconclusive);
    }
    let mut search = ArrowSearch {
        n,
        goals,
        colors: vec![usize::MAX; n * n.saturating_sub(1) / 2],
    };
    if search.run(1, 0) {
        let table = search.colors;
        let coloring = TableColoring {
            ground: FinOrdSet::naturals(n),
            colors: goals.len(),
            table,
        };
        Ok(ArrowVerdict::Refuted(coloring))
    } else {
        Ok(ArrowVerdict::Holds)
    }
}

/// Checks that `w` colors `{0..n-1}` and has no `i`-homogeneous set of size `goals[i]`.
pub fn verify_counterexample(
    n: usize,
    goals: &[usize],
    w: &TableColoring,
) -> Result<(), PartitionError> {
    if w.ground != FinOrdSet::naturals(n) || w.colors != goals.len() {
        return Err(PartitionError::WitnessShape {
            n,
            colors: goals.len(),
        });
    }
    for (color, &size) in goals.iter().enumerate() {
        if w.find_homogeneous(color, size).is_some() {
            return Err(PartitionError::WitnessFails { color, size });
        }
    }
    Ok(())
}

/// Depth-first search for a coloring of the pairs of `{0..n-1}` avoiding every
/// goal. Pairs are colored vertex by vertex; a branch is cut as soon as the
/// newest pair completes a homogeneous set.
struct ArrowSearch<'a> {
    n: usize,
    goals: &'a [usize],
    colors: Vec<usize>,
}

impl ArrowSearch<'_> {
    fn color(&self, i: usize, j: usize) -> usize {
        self.colors[pair_index(i.min(j), i.max(j))]
    }

    fn run(&mut self, j: usize, i: usize) -> bool {
        if j >= self.n {
            return true;
        }
        let (nj, ni) = if i + 1 == j { (j + 1, 0) } else { (j, i + 1) };
        for c in 0..self.goals.len() {
            self.colors[pair_index(i, j)] = c;
            if !self.completes_goal(i, j, c) && self.run(nj, ni) {
                return true;
            }
        }
        self.colors[pair_index(i, j)] = usize::MAX;
        false
    }

    /// Does the pair `{i, j}` (just colored `c`) lie in a `c`-homogeneous set
    /// of size `goals[c]` among the colored pairs?
    fn completes_goal(&self, i: usize, j: usize, c: usize) -> bool {
        let need = self.goals[c];
        if need <= 2 {
            return true;
        }
        let candidates: Vec<usize> = (0..i)
            .filter(|&v| self.color(v, i) == c && self.color(v, j) == c)
            .collect();
        self.has_clique(&candidates, need - 2, c)
    }

    fn has_clique(&self, candidates: &[usize], size: usize, c: usize) -> bool {
        if size == 0 {
            return true;
        }
        for (a, &v) in candidates.iter().enumerate() {
            if candidates.len() - a < size {
                break;
            }
            let next: Vec<usize> = candidates[a + 1..]
                .iter()
                .copied()
                .filter(|&u| self.color(v, u) == c)
                .collect();
            if self.has_clique(&next, size - 1, c) {
                return true;
            }
        }
        false
    }
}

/// Enumeration of the ordinals below `beta` in which every element recurs
/// infinitely often: index `m` unpairs to `(i, j)` and yields the `i`-th
/// ordinal below `beta` in Gödel-code order.
///
/// Only the first `scan_bound` codes are scanned; indices past the scanned
/// elements yield 0.
#[derive(Debug, Clone)]
pub struct RepeatEnumeration {
    beta: Ordinal,
    scan_bound: u64,
    next_code: u64,
    found: Vec<Ordinal>,
}

impl RepeatEnumeration {
    pub fn new(beta: Ordinal) -> Result<Self, PartitionError> {
        Self::with_scan_bound(beta, DEFAULT_SCAN_BOUND)
    }

    pub fn with_scan_bound(beta: Ordinal, scan_bound: u64) -> Result<Self, PartitionError> {
        if beta.is_zero() {
            return Err(PartitionError::EmptyEnumeration);
        }
        Ok(RepeatEnumeration {
            beta,
            scan_bound,
            next_code: 0,
            found: Vec::new(),
        })
    }

    pub fn get(&mut self, m: u64) -> Ordinal {
        let (i, _) = unpair_u64(m);
        let i = i as usize;
        // a finite beta has exactly beta elements
        let total = self.beta.to_natural().and_then(|n| n.to_u64());
        while self.found.len() <= i
            && self.next_code < self.scan_bound
            && total.is_none_or(|t| (self.found.len() as u64) < t)
        {
            if let Some(x) = Ordinal::godel_decode_u64(self.next_code) {
                if x < self.beta {
                    self.found.push(x);
                }
            }
            self.next_code += 1;
        }
        self.found.get(i).cloned().unwrap_or_else(Ordinal::zero)
    }
}

pub fn repeat_enum(beta: &Ordinal, m: u64) -> Result<Ordinal, PartitionError> {
    Ok(RepeatEnumeration::new(beta.clone())?.get(m))
}

/// Counts how often each ordinal occurs among the first `count` indices.
pub fn occurrence_counts(
    enumeration: &mut RepeatEnumeration,
    count: u64,
) -> BTreeMap<Ordinal, usize> {
    let mut counts = BTreeMap::new();
    for m in 0..count {
        *counts.entry(enumeration.get(m)).or_insert(0) += 1;
    }
    counts
}
