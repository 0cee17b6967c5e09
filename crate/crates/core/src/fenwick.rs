//! Binary indexed trees over the logical array `A(1..=N)`.
//!
//! Node `i` of the tree stores the aggregate of `A(i - lowbit(i) + 1 ..= i)`.
//! A prefix query walks `i, i - lowbit(i), ...` down to zero and an update
//! walks `i, i + lowbit(i), ...` up past `N`, so both touch at most
//! `floor(log2 N) + 1` nodes. [`query_path`] and [`update_path`] expose those
//! walks; the trees use them internally, so counting the items they yield
//! counts node visits.
//!
//! [`SumFenwick`] is generic over any additive element (machine integers or
//! [`BigCount`](crate::BigCount)) and supports a targeted reset that clears
//! only the nodes a known set of updates touched. [`MaxFenwick`] keeps
//! prefix maxima under monotone point raises; it has no reset because a
//! maximum cannot be undone by re-visiting positions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::AddAssign;

use num_traits::Zero;

/// Largest power of two dividing `i`, i.e. `i AND (-i)`.
///
/// `lowbit(0)` is 0; callers never pass it.
#[inline]
pub fn lowbit(i: usize) -> usize {
    i & i.wrapping_neg()
}

/// Nodes read by a prefix query at `index`: strip the lowest set bit until zero.
pub fn query_path(index: usize) -> impl Iterator<Item = usize> {
    core::iter::successors(Some(index), |&i| Some(i - lowbit(i))).take_while(|&i| i > 0)
}

/// Nodes written by a point update at `index` in a tree of `len` elements.
pub fn update_path(index: usize, len: usize) -> impl Iterator<Item = usize> {
    core::iter::successors(Some(index), |&i| i.checked_add(lowbit(i)))
        .take_while(move |&i| i > 0 && i <= len)
}

/// An index outside the range accepted by an operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfRange {
    pub index: usize,
    pub len: usize,
    /// Smallest legal index (0 for queries, 1 for updates).
    pub min: usize,
}

impl fmt::Display for OutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "index {} outside {}..={} of a tree with {} elements",
            self.index, self.min, self.len, self.len
        )
    }
}

impl core::error::Error for OutOfRange {}

/// Fenwick tree for prefix sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumFenwick<T> {
    // tree[0] is unused.
    tree: Vec<T>,
}

impl<T> SumFenwick<T>
where
    T: Clone + Zero + for<'a> AddAssign<&'a T>,
{
    /// A tree over `A(1..=len)` with every element zero.
    pub fn new(len: usize) -> Self {
        SumFenwick {
            tree: vec![T::zero(); len + 1],
        }
    }

    pub fn len(&self) -> usize {
        self.tree.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `A(index) += delta`.
    pub fn add(&mut self, index: usize, delta: &T) -> Result<(), OutOfRange> {
        self.check_update(index)?;
        self.add_unchecked(index, delta);
        Ok(())
    }

    /// `A(1) + ... + A(index)`; index 0 gives zero.
    pub fn prefix_sum(&self, index: usize) -> Result<T, OutOfRange> {
        self.check_query(index)?;
        Ok(self.prefix_sum_unchecked(index))
    }

    /// Restores the all-zero state after updates at exactly the positions in
    /// `touched` (duplicates allowed).
    ///
    /// Every nonzero node lies on the update path of some touched position,
    /// so zeroing those paths is equivalent to reallocating, at a cost of
    /// `O(|touched| log N)`. If `touched` misses an updated position the tree
    /// is left inconsistent; that part of the contract is the caller's.
    pub fn reset<I>(&mut self, touched: I) -> Result<(), OutOfRange>
    where
        I: IntoIterator<Item = usize>,
    {
        for index in touched {
            self.check_update(index)?;
            self.reset_unchecked(index);
        }
        Ok(())
    }

    /// Raw node values `tree(1..=N)`.
    pub fn nodes(&self) -> &[T] {
        &self.tree[1..]
    }

    pub(crate) fn add_unchecked(&mut self, index: usize, delta: &T) {
        debug_assert!(index >= 1 && index <= self.len());
        let len = self.len();
        for node in update_path(index, len) {
            self.tree[node] += delta;
        }
    }

    pub(crate) fn prefix_sum_unchecked(&self, index: usize) -> T {
        debug_assert!(index <= self.len());
        let mut acc = T::zero();
        for node in query_path(index) {
            acc += &self.tree[node];
        }
        acc
    }

    pub(crate) fn reset_unchecked(&mut self, index: usize) {
        let len = self.len();
        for node in update_path(index, len) {
            if self.tree[node].is_zero() {
                // Everything above was cleared by an earlier position sharing this path.
                break;
            }
            self.tree[node].set_zero();
        }
    }

    fn check_update(&self, index: usize) -> Result<(), OutOfRange> {
        if index == 0 || index > self.len() {
            return Err(OutOfRange {
                index,
                len: self.len(),
                min: 1,
            });
        }
        Ok(())
    }

    fn check_query(&self, index: usize) -> Result<(), OutOfRange> {
        if index > self.len() {
            return Err(OutOfRange {
                index,
                len: self.len(),
                min: 0,
            });
        }
        Ok(())
    }
}

/// Default sentinel for `i64` prefix maxima: the value of an empty prefix.
pub const MAX_SENTINEL: i64 = -1;

/// Fenwick tree for prefix maxima under point raises.
///
/// Untouched elements hold `sentinel`, which is also what an empty prefix
/// returns. There is no reset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFenwick<T> {
    tree: Vec<T>,
    sentinel: T,
}

impl MaxFenwick<i64> {
    /// An `i64` tree whose sentinel is [`MAX_SENTINEL`].
    pub fn with_len(len: usize) -> Self {
        MaxFenwick::new(len, MAX_SENTINEL)
    }
}

impl<T: Ord + Clone> MaxFenwick<T> {
    pub fn new(len: usize, sentinel: T) -> Self {
        MaxFenwick {
            tree: vec![sentinel.clone(); len + 1],
            sentinel,
        }
    }

    pub fn len(&self) -> usize {
        self.tree.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sentinel(&self) -> &T {
        &self.sentinel
    }

    /// `A(index) = max(A(index), value)`.
    pub fn raise(&mut self, index: usize, value: T) -> Result<(), OutOfRange> {
        if index == 0 || index > self.len() {
            return Err(OutOfRange {
                index,
                len: self.len(),
                min: 1,
            });
        }
        self.raise_unchecked(index, value);
        Ok(())
    }

    /// `max(A(1..=index))`, or the sentinel for an empty prefix.
    pub fn prefix_max(&self, index: usize) -> Result<T, OutOfRange> {
        if index > self.len() {
            return Err(OutOfRange {
                index,
                len: self.len(),
                min: 0,
            });
        }
        Ok(self.prefix_max_unchecked(index))
    }

    pub fn nodes(&self) -> &[T] {
        &self.tree[1..]
    }

    pub(crate) fn raise_unchecked(&mut self, index: usize, value: T) {
        let len = self.len();
        for node in update_path(index, len) {
            if self.tree[node] < value {
                self.tree[node] = value.clone();
            }
        }
    }

    pub(crate) fn prefix_max_unchecked(&self, index: usize) -> T {
        let mut best = &self.sentinel;
        for node in query_path(index) {
            if self.tree[node] > *best {
                best = &self.tree[node];
            }
        }
        best.clone()
    }
}
