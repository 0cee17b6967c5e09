//! Exhaustive ground truth on explicit graphs.
//!
//! Nothing here knows about diagrams; callers pass [`Graph`]s, usually from
//! [`TrapezoidDiagram::to_graph`](crate::diagram::TrapezoidDiagram::to_graph).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::diagram::Graph;
use crate::matching::Matching;
use crate::BigCount;

/// Largest graph [`brute_enumerate`] accepts.
pub const SUBSET_LIMIT: usize = 22;
/// Largest graph (or component, for [`exact_max_matching`]) the matching search accepts.
pub const MATCHING_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeLimit {
    pub n: usize,
    pub limit: usize,
}

impl fmt::Display for SizeLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} vertices exceed the exhaustive search limit of {}",
            self.n, self.limit
        )
    }
}

impl core::error::Error for SizeLimit {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    /// Independent sets by size, `0..=alpha`.
    pub per_size_counts: Vec<BigCount>,
    pub alpha: usize,
    pub max_is_count: BigCount,
    /// Subsets touching every edge, the empty set included if it qualifies.
    pub vc_count: BigCount,
    pub min_vc_size: usize,
    pub min_vc_count: BigCount,
}

impl EnumerationResult {
    /// Nonempty independent sets.
    pub fn is_count(&self) -> BigCount {
        self.per_size_counts.iter().skip(1).sum()
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (1..=g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << (w - 1)))
        .collect()
}

/// Classifies all `2^n` vertex subsets as independent and/or covering.
///
/// Independence is built up by removing the lowest vertex; covering is
/// checked separately as "every vertex outside the set has all its
/// neighbors inside".
pub fn brute_enumerate(g: &Graph) -> Result<EnumerationResult, SizeLimit> {
    let n = g.n();
    if n > SUBSET_LIMIT {
        return Err(SizeLimit {
            n,
            limit: SUBSET_LIMIT,
        });
    }
    let adj = masks(g);
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    let mut per_size = vec![0u64; n + 1];
    let mut per_size_cover = vec![0u64; n + 1];
    for set in 0u32..=full {
        if set != 0 {
            let low = set.trailing_zeros() as usize;
            let rest = set & (set - 1);
            independent[set as usize] = independent[rest as usize] && adj[low] & set == 0;
        }
        let size = set.count_ones() as usize;
        if independent[set as usize] {
            per_size[size] += 1;
        }
        let outside = full & !set;
        let covers = (0..n).all(|v| outside & (1 << v) == 0 || adj[v] & outside == 0);
        if covers {
            per_size_cover[size] += 1;
        }
    }
    let alpha = per_size.iter().rposition(|&c| c > 0).unwrap_or(0);
    let min_vc_size = per_size_cover.iter().position(|&c| c > 0).unwrap_or(0);
    let vc_count: u64 = per_size_cover.iter().sum();
    debug_assert_eq!(vc_count, per_size.iter().sum::<u64>());
    Ok(EnumerationResult {
        per_size_counts: per_size[..=alpha]
            .iter()
            .map(|&c| BigCount::from(c))
            .collect(),
        alpha,
        max_is_count: per_size[alpha].into(),
        vc_count: vc_count.into(),
        min_vc_size,
        min_vc_count: per_size_cover[min_vc_size].into(),
    })
}

/// Maximum-cardinality matching by branch and bound.
///
/// Vertices are decided in increasing order: the lowest undecided vertex
/// is either left unmatched or matched to one of its undecided neighbors.
/// A branch is cut when even matching every remaining vertex in pairs
/// could not beat the best matching found so far.
pub fn brute_max_matching(g: &Graph) -> Result<Matching, SizeLimit> {
    let n = g.n();
    if n > MATCHING_LIMIT {
        return Err(SizeLimit {
            n,
            limit: MATCHING_LIMIT,
        });
    }
    let adj = masks(g);
    let mut search = MatchingSearch {
        adj: &adj,
        n,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.descend(0, 0);
    let mut pairs: Vec<(usize, usize)> = search.best.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
    pairs.sort_unstable();
    Ok(Matching::new(pairs))
}

struct MatchingSearch<'a> {
    adj: &'a [u32],
    n: usize,
    current: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
}

impl MatchingSearch<'_> {
    fn descend(&mut self, from: usize, used: u32) {
        let mut v = from;
        while v < self.n && used & (1 << v) != 0 {
            v += 1;
        }
        let remaining = (v..self.n).filter(|&w| used & (1 << w) == 0).count();
        if self.current.len() + remaining / 2 <= self.best.len() {
            return;
        }
        if v == self.n {
            self.best.clone_from(&self.current);
            return;
        }
        let mut free = self.adj[v] & !used & !((1u32 << v) - 1) & !(1 << v);
        while free != 0 {
            let w = free.trailing_zeros() as usize;
            free &= free - 1;
            self.current.push((v, w));
            self.descend(v + 1, used | 1 << v | 1 << w);
            self.current.pop();
        }
        self.descend(v + 1, used | 1 << v);
    }
}

/// Maximum matching assembled from [`brute_max_matching`] on each connected
/// component, so the size limit applies per component.
pub fn exact_max_matching(g: &Graph) -> Result<Matching, SizeLimit> {
    let mut pairs = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = brute_max_matching(&g.induced(&comp))?;
        pairs.extend(sub.pairs().iter().map(|&(u, v)| (comp[u - 1], comp[v - 1])));
    }
    pairs.sort_unstable();
    Ok(Matching::new(pairs))
}

/// Searches for an augmenting path by trying every simple alternating path
/// from every unmatched vertex. Exponential; for checking small results.
pub fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
    let n = g.n();
    let mut mate = vec![0usize; n + 1];
    for &(u, v) in m.pairs() {
        mate[u] = v;
        mate[v] = u;
    }
    fn extend(g: &Graph, mate: &[usize], on_path: &mut [bool], v: usize) -> bool {
        // v was reached by an unmatched edge; leave by any unmatched edge to w.
        for &w in g.neighbors(v) {
            if on_path[w] || mate[v] == w {
                continue;
            }
            if mate[w] == 0 {
                return true;
            }
            let x = mate[w];
            if on_path[x] {
                continue;
            }
            on_path[w] = true;
            on_path[x] = true;
            if extend(g, mate, on_path, x) {
                return true;
            }
            on_path[w] = false;
            on_path[x] = false;
        }
        false
    }
    let mut on_path = vec![false; n + 1];
    for s in 1..=n {
        if mate[s] != 0 {
            continue;
        }
        on_path[s] = true;
        let found = extend(g, &mate, &mut on_path, s);
        on_path[s] = false;
        if found {
            return true;
        }
    }
    false
}

/// Count of all vertex covers of `g` by definition, for spot checks of
/// the deletion recurrence on explicit graphs.
pub fn brute_vc_count(g: &Graph) -> Result<BigCount, SizeLimit> {
    let n = g.n();
    if n > SUBSET_LIMIT {
        return Err(SizeLimit {
            n,
            limit: SUBSET_LIMIT,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut count = BigCount::zero();
    for set in 0u32..(1u32 << n) {
        if edges
            .iter()
            .all(|&(u, v)| set & (1 << (u - 1)) != 0 || set & (1 << (v - 1)) != 0)
        {
            count += 1u32;
        }
    }
    Ok(count)
}
