//! Independent sets of trapezoid graphs by left-to-right sweeps.
//!
//! An independent set is a chain `T(i1) << T(i2) << ...` of the "left of"
//! order. All sweeps below walk the upper coordinates `0..=2n+1` once:
//! when the sweep reaches `a(i)` every trapezoid `k` with `b(k) < a(i)` has
//! already been inserted into a Fenwick tree at its lower-right corner
//! `d(k)`, so a prefix query at `c(i)` sees exactly the `k << i`.
//!
//! The `O(n log n)` sweeps index their trees by [`Event`] slots, the ranks
//! of the lower-right corners, so a tree has `n` slots rather than `2n` and
//! the dummies never occupy one. Dummy 0 is accounted for arithmetically
//! (it precedes everything); dummy `n + 1` queries the whole tree. The
//! polynomial sweep uses raw lower coordinates.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign};

use num_traits::{One, Zero};

use crate::diagram::{AugmentedDiagram, Event};
use crate::fenwick::{MaxFenwick, SumFenwick};
use crate::BigCount;

/// Element type of the counting trees.
trait Count: Clone + Zero + for<'a> AddAssign<&'a Self> {
    fn unit() -> Self;
}

impl Count for BigCount {
    fn unit() -> Self {
        One::one()
    }
}

/// Saturating machine integer, tried before [`BigCount`]. All terms are
/// nonnegative, so a final sum below the maximum is exact and so is every
/// term feeding it; a saturated result means the count must be redone in
/// `BigCount`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Sat<U>(U);

macro_rules! saturating {
    ($($u:ty),*) => {$(
        impl Sat<$u> {
            fn exact(self) -> Option<BigCount> {
                (self.0 != <$u>::MAX).then(|| BigCount::from(self.0))
            }
        }

        impl Add for Sat<$u> {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Sat(self.0.saturating_add(rhs.0))
            }
        }

        impl AddAssign<&Sat<$u>> for Sat<$u> {
            fn add_assign(&mut self, rhs: &Self) {
                self.0 = self.0.saturating_add(rhs.0);
            }
        }

        impl Zero for Sat<$u> {
            fn zero() -> Self {
                Sat(0)
            }
            fn is_zero(&self) -> bool {
                self.0 == 0
            }
        }

        impl Count for Sat<$u> {
            fn unit() -> Self {
                Sat(1)
            }
        }
    )*};
}

saturating!(u64, u128);

/// Result of the maximum-independent-set sweep.
///
/// `max_ind[i]` is the size of the largest independent set among
/// trapezoids `0..=i` (in upper-left order) that ends with `T(i)`, counting
/// `T(i)` but not dummy 0. `predecessor[i]` is the previous element of one
/// such set, the smallest index among the candidates; it is 0 when `T(i)`
/// starts the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxIndProfile {
    pub max_ind: Vec<usize>,
    pub predecessor: Vec<usize>,
}

impl MaxIndProfile {
    /// Runs the sweep with a prefix-max tree. `O(n log n)`.
    pub fn sweep(d: &AugmentedDiagram) -> Self {
        let n = d.n();
        let mut max_ind = vec![0usize; n + 2];
        let mut predecessor = vec![0usize; n + 2];
        // Entries pack (max_ind, !index) into one word so ties go to the
        // smaller index; a compact tree keeps the sweep cache-friendly.
        assert!(
            n < u32::MAX as usize,
            "trapezoid indices must fit in 32 bits"
        );
        let pack = |value: usize, index: usize| ((value as u64) << 32) | u64::from(!(index as u32));
        let mut cum_max: MaxFenwick<u64> = MaxFenwick::new(n, 0);
        for event in d.events() {
            match event {
                Event::Open { index, slot } => {
                    // Dummy 0 is logically present with value 0 and the smallest index.
                    let found = cum_max.prefix_max_unchecked(slot).max(pack(0, 0));
                    max_ind[index] = (found >> 32) as usize + 1;
                    predecessor[index] = !(found as u32) as usize;
                }
                Event::Close { index, slot } => {
                    cum_max.raise_unchecked(slot, pack(max_ind[index], index))
                }
            }
        }
        MaxIndProfile {
            max_ind,
            predecessor,
        }
    }

    /// Same values by the direct double loop over trapezoids in upper-left
    /// order. `O(n^2)`.
    pub fn quadratic(d: &AugmentedDiagram) -> Self {
        let n = d.n();
        let order: Vec<usize> = d.by_upper_left().collect();
        let mut max_ind = vec![0usize; n + 2];
        let mut predecessor = vec![0usize; n + 2];
        for (p, &i) in order.iter().enumerate().skip(1) {
            let ti = d.get(i);
            let mut best = (0usize, 0usize);
            for &k in &order[..p] {
                if d.get(k).left_of(ti) {
                    let v = max_ind[k];
                    if v > best.0 || (v == best.0 && k < best.1) {
                        best = (v, k);
                    }
                }
            }
            max_ind[i] = best.0 + 1;
            predecessor[i] = best.1;
        }
        MaxIndProfile {
            max_ind,
            predecessor,
        }
    }

    /// The independence number `max_ind(n + 1) - 1`.
    pub fn alpha(&self) -> usize {
        self.max_ind[self.max_ind.len() - 1] - 1
    }

    /// A maximum independent set, ascending, found by following
    /// predecessors back from dummy `n + 1`.
    pub fn witness(&self) -> Vec<usize> {
        let mut set = Vec::with_capacity(self.alpha());
        let mut i = self.predecessor[self.max_ind.len() - 1];
        while i != 0 {
            set.push(i);
            i = self.predecessor[i];
        }
        set.sort_unstable();
        set
    }

    /// `S(k)` for `k = 1..=alpha` (stored at position `k - 1`): real
    /// trapezoids with `max_ind = k`, ascending by index.
    pub fn level_buckets(&self) -> Vec<Vec<usize>> {
        let n = self.max_ind.len() - 2;
        let mut buckets = vec![Vec::new(); self.alpha()];
        for i in 1..=n {
            buckets[self.max_ind[i] - 1].push(i);
        }
        buckets
    }
}

/// Independence number `alpha(G)`. `O(n log n)`.
pub fn max_is_size(d: &AugmentedDiagram) -> usize {
    MaxIndProfile::sweep(d).alpha()
}

/// Independence number by the quadratic recurrence.
pub fn max_is_quadratic(d: &AugmentedDiagram) -> usize {
    MaxIndProfile::quadratic(d).alpha()
}

/// A maximum independent set (ascending trapezoid indices).
pub fn max_is_witness(d: &AugmentedDiagram) -> Vec<usize> {
    MaxIndProfile::sweep(d).witness()
}

/// `num_ind[i]` for `i = 0..=n+1`: the number of independent sets among
/// trapezoids left of `T(i)` together with `T(i)` itself as the last
/// element, where dummy 0 stands for the empty prefix.
///
/// The recurrence is `num_ind(i) = sum over k << i of num_ind(k)` with
/// `num_ind(0) = 1`, so `num_ind(n + 1)` counts every independent set
/// including the empty one.
pub fn chain_counts(d: &AugmentedDiagram) -> Vec<BigCount> {
    let fast = chain_counts_in::<Sat<u128>>(d);
    if fast[fast.len() - 1].exact().is_some() {
        return fast.into_iter().map(|c| BigCount::from(c.0)).collect();
    }
    chain_counts_in::<BigCount>(d)
}

fn chain_counts_in<T: Count>(d: &AugmentedDiagram) -> Vec<T> {
    let n = d.n();
    let mut num_ind = vec![T::zero(); n + 2];
    num_ind[0] = T::unit();
    let one = T::unit();
    let mut tree: SumFenwick<T> = SumFenwick::new(n);
    for event in d.events() {
        match event {
            Event::Open { index, slot } => {
                let mut count = tree.prefix_sum_unchecked(slot);
                count += &one;
                num_ind[index] = count;
            }
            Event::Close { index, slot } => tree.add_unchecked(slot, &num_ind[index]),
        }
    }
    num_ind
}

/// Number of nonempty independent sets. Add one for the empty set.
pub fn count_independent_sets(d: &AugmentedDiagram) -> BigCount {
    let mut counts = chain_counts(d);
    let mut total = counts.pop().expect("dummy n + 1 is always present");
    total -= 1u32;
    total
}

/// How [`count_max_independent_sets_with`] obtains a clean tree for each level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelStorage {
    /// One tree for all levels; after each level only the inserted
    /// positions are cleared.
    Reuse,
    /// A newly allocated tree per level.
    Fresh,
}

/// Per-trapezoid insertion and removal counters from the level passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStats {
    /// Indexed `0..=n+1`; only real trapezoids are ever inserted.
    pub inserted: Vec<u32>,
    pub removed: Vec<u32>,
    pub allocations: usize,
}

/// Number of maximum independent sets. `O(n log n)`.
pub fn count_max_independent_sets(d: &AugmentedDiagram) -> BigCount {
    count_max_independent_sets_from(d, &MaxIndProfile::sweep(d))
}

/// [`count_max_independent_sets`] for an already computed profile, with
/// level-tree reuse and no instrumentation.
pub fn count_max_independent_sets_from(d: &AugmentedDiagram, profile: &MaxIndProfile) -> BigCount {
    let storage = LevelStorage::Reuse;
    count_levels::<Sat<u64>>(d, profile, storage, false)
        .0
        .exact()
        .unwrap_or_else(|| count_levels::<BigCount>(d, profile, storage, false).0)
}

/// Level-by-level count of maximum independent sets.
///
/// `num_max_ind(i)` for `max_ind(i) = 1` is 1. For the pair of levels
/// `(k, k + 1)` the sweep inserts `num_max_ind(j)` at `d(j)` when it passes
/// `b(j)` for `j` in `S(k)` and reads the prefix at `c(i)` when it passes
/// `a(i)` for `i` in `S(k + 1)`. Only a predecessor one level down can
/// extend a longest chain, so this yields `num_max_ind(i)`. Dummy `n + 1`
/// sits alone at level `alpha + 1` and collects the answer.
pub fn count_max_independent_sets_with(
    d: &AugmentedDiagram,
    profile: &MaxIndProfile,
    storage: LevelStorage,
) -> (BigCount, LevelStats) {
    let (fast, stats) = count_levels::<Sat<u64>>(d, profile, storage, true);
    match fast.exact() {
        Some(count) => (count, stats),
        None => count_levels::<BigCount>(d, profile, storage, true),
    }
}

fn count_levels<T: Count>(
    d: &AugmentedDiagram,
    profile: &MaxIndProfile,
    storage: LevelStorage,
    record: bool,
) -> (T, LevelStats) {
    let n = d.n();
    let alpha = profile.alpha();
    // Per-trapezoid counters cost two scattered writes each, so they are opt-in.
    let slots = if record { n + 2 } else { 0 };
    let mut stats = LevelStats {
        inserted: vec![0; slots],
        removed: vec![0; slots],
        allocations: 0,
    };
    if alpha == 0 {
        return (T::unit(), stats);
    }

    // Events bucketed by level with a counting sort, each bucket in sweep
    // order, as (sweep position, trapezoid, slot): opens of level k are
    // queries of pass k - 1, closes are inserts of pass k. Dummy n + 1 opens
    // level alpha + 1 on its own.
    let mut open_start = vec![0usize; alpha + 2];
    let mut close_start = vec![0usize; alpha + 1];
    let levels: Vec<(bool, usize)> = d
        .events()
        .map(|event| match event {
            Event::Open { index, .. } => (true, profile.max_ind[index] - 1),
            Event::Close { index, .. } => (false, profile.max_ind[index] - 1),
        })
        .collect();
    for &(open, level) in &levels {
        if open {
            open_start[level + 1] += 1;
        } else {
            close_start[level + 1] += 1;
        }
    }
    for k in 1..open_start.len() {
        open_start[k] += open_start[k - 1];
    }
    for k in 1..close_start.len() {
        close_start[k] += close_start[k - 1];
    }
    let mut opens = vec![(0u32, 0u32, 0u32); n + 1];
    let mut closes = vec![(0u32, 0u32, 0u32); n];
    let (mut open_fill, mut close_fill) = (open_start.clone(), close_start.clone());
    for (pos, (event, &(_, level))) in d.events().zip(&levels).enumerate() {
        match event {
            Event::Open { index, slot } => {
                opens[open_fill[level]] = (pos as u32, index as u32, slot as u32);
                open_fill[level] += 1;
            }
            Event::Close { index, slot } => {
                closes[close_fill[level]] = (pos as u32, index as u32, slot as u32);
                close_fill[level] += 1;
            }
        }
    }
    let opens_at = |k: usize| &opens[open_start[k]..open_start[k + 1]];
    let closes_at = |k: usize| &closes[close_start[k]..close_start[k + 1]];

    let mut num_max_ind = vec![T::zero(); n + 2];
    for &(_, i, _) in opens_at(0) {
        num_max_ind[i as usize] = T::unit();
    }

    let mut tree: SumFenwick<T> = SumFenwick::new(n);
    stats.allocations = 1;
    for k in 0..alpha {
        if storage == LevelStorage::Fresh && k > 0 {
            tree = SumFenwick::new(n);
            stats.allocations += 1;
        }
        let inserts = closes_at(k);
        let mut p = 0;
        for &(pos, i, slot) in opens_at(k + 1) {
            while p < inserts.len() && inserts[p].0 < pos {
                let (_, j, at) = inserts[p];
                tree.add_unchecked(at as usize, &num_max_ind[j as usize]);
                if record {
                    stats.inserted[j as usize] += 1;
                }
                p += 1;
            }
            num_max_ind[i as usize] = tree.prefix_sum_unchecked(slot as usize);
        }
        // Members closing after the last query of the next level still go
        // in, so every trapezoid is added and removed exactly once.
        for &(_, j, at) in &inserts[p..] {
            tree.add_unchecked(at as usize, &num_max_ind[j as usize]);
            if record {
                stats.inserted[j as usize] += 1;
            }
        }
        if storage == LevelStorage::Reuse {
            for &(_, j, at) in inserts {
                tree.reset_unchecked(at as usize);
                if record {
                    stats.removed[j as usize] += 1;
                }
            }
        }
    }

    (
        num_max_ind.pop().expect("dummy n + 1 is always present"),
        stats,
    )
}

/// Number of maximum independent sets by the quadratic double loop: over
/// trapezoids in upper-left order, `num_max_ind(i)` sums `num_max_ind(j)`
/// over earlier `j << i` with `max_ind(j) + 1 = max_ind(i)`, starting from
/// `num_max_ind(0) = 1`. Uses its own quadratic `max_ind`.
pub fn count_max_is_quadratic(d: &AugmentedDiagram) -> BigCount {
    count_max_is_quadratic_with(d, &MaxIndProfile::quadratic(d))
}

/// [`count_max_is_quadratic`] for an already computed profile.
pub fn count_max_is_quadratic_with(d: &AugmentedDiagram, profile: &MaxIndProfile) -> BigCount {
    quadratic_levels::<Sat<u64>>(d, profile)
        .exact()
        .unwrap_or_else(|| quadratic_levels::<BigCount>(d, profile))
}

fn quadratic_levels<T: Count>(d: &AugmentedDiagram, profile: &MaxIndProfile) -> T {
    let n = d.n();
    let max_ind = &profile.max_ind;
    let order: Vec<usize> = d.by_upper_left().collect();
    let mut num_max_ind = vec![T::zero(); n + 2];
    num_max_ind[0] = T::unit();
    for (p, &i) in order.iter().enumerate().skip(1) {
        let ti = d.get(i);
        let mut acc = T::zero();
        for &j in &order[..p] {
            if max_ind[j] + 1 == max_ind[i] && d.get(j).left_of(ti) {
                acc += &num_max_ind[j];
            }
        }
        num_max_ind[i] = acc;
    }
    num_max_ind.pop().expect("dummy n + 1 is always present")
}

/// Coefficients `s_0..=s_alpha` of the independence polynomial
/// `I(G, x) = sum s_k x^k`, where `s_k` counts independent sets of size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependencePolynomial {
    pub coefficients: Vec<BigCount>,
}

impl IndependencePolynomial {
    /// The degree, which is the independence number.
    pub fn alpha(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `I(G, x)` at an integer point. `I(G, 1)` counts all independent sets.
    pub fn evaluate(&self, x: &BigCount) -> BigCount {
        self.coefficients
            .iter()
            .rev()
            .fold(BigCount::zero(), |acc, s| acc * x + s)
    }
}

/// Independence polynomial by `alpha` sweeps: pass `k` counts chains of
/// length `k` ending at each trapezoid from the pass `k - 1` counts, reusing
/// one tree with targeted resets. `O(alpha * n log n)`.
pub fn independence_polynomial(d: &AugmentedDiagram) -> IndependencePolynomial {
    let n = d.n();
    let mut coefficients = vec![BigCount::one()];
    if n == 0 {
        return IndependencePolynomial { coefficients };
    }
    coefficients.push(BigCount::from(n));

    let mut previous = vec![BigCount::one(); n + 2];
    previous[0] = BigCount::zero();
    previous[n + 1] = BigCount::zero();
    let mut current = vec![BigCount::zero(); n + 2];
    let mut tree: SumFenwick<BigCount> = SumFenwick::new(2 * n);
    let mut touched = Vec::with_capacity(n);
    loop {
        let mut total = BigCount::zero();
        for (j, &i) in d.upper_index().iter().enumerate() {
            if i == 0 || i > n {
                continue;
            }
            let t = d.get(i);
            if t.a == j {
                current[i] = tree.prefix_sum_unchecked(t.c);
                total += &current[i];
            } else if !previous[i].is_zero() {
                tree.add_unchecked(t.d, &previous[i]);
                touched.push(t.d);
            }
        }
        for &pos in &touched {
            tree.reset_unchecked(pos);
        }
        touched.clear();
        if total.is_zero() {
            break;
        }
        coefficients.push(total);
        core::mem::swap(&mut previous, &mut current);
    }
    IndependencePolynomial { coefficients }
}

/// Every sweep quantity for one diagram.
///
/// `num_ind` and `num_max_ind` use dummy 0 as the empty prefix, so
/// `num_ind[n + 1]` counts independent sets including the empty one and
/// `num_max_ind[n + 1]` counts maximum independent sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepState {
    pub max_ind: Vec<usize>,
    pub num_ind: Vec<BigCount>,
    pub num_max_ind: BigCount,
    pub level_buckets: Vec<Vec<usize>>,
    pub witness: Vec<usize>,
}

impl SweepState {
    pub fn run(d: &AugmentedDiagram) -> Self {
        let profile = MaxIndProfile::sweep(d);
        let num_max_ind = count_max_independent_sets_from(d, &profile);
        SweepState {
            num_ind: chain_counts(d),
            num_max_ind,
            level_buckets: profile.level_buckets(),
            witness: profile.witness(),
            max_ind: profile.max_ind,
        }
    }

    pub fn alpha(&self) -> usize {
        self.max_ind[self.max_ind.len() - 1] - 1
    }

    /// Nonempty independent sets.
    pub fn independent_set_count(&self) -> BigCount {
        self.num_ind[self.num_ind.len() - 1].clone() - 1u32
    }

    pub fn max_independent_set_count(&self) -> &BigCount {
        &self.num_max_ind
    }
}
