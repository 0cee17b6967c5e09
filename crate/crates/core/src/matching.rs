//! The right-spread greedy matching and diagrams on which it falls short.
//!
//! The greedy sorts trapezoids by right spread `f(i) = max(b(i), d(i))`,
//! repeatedly takes the remaining trapezoid with the smallest spread and
//! pairs it with the first remaining trapezoid after it in spread order that
//! it intersects, or drops it when there is none. The result is always a
//! maximal matching but not always a maximum one.
//!
//! Because `f` compares an upper label with a lower label, it is the one
//! quantity in the crate that is not invariant under relabeling each line
//! separately. With rank labels no diagram of four trapezoids defeats the
//! greedy (all of them were checked), so the gadget used by
//! [`counterexample`] embeds the four-trapezoid pattern together with one
//! extra pair that forces the spread order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Graph, Trapezoid, TrapezoidDiagram};
use crate::oracle::{self, SizeLimit};

/// A set of vertex-disjoint edges `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Normalizes each pair to `(min, max)`; keeps the given order otherwise.
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Matching {
            pairs: pairs
                .into_iter()
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn cardinality(&self) -> usize {
        self.pairs.len()
    }

    /// Edges exist in `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n() + 1];
        for &(u, v) in &self.pairs {
            if u == v || v > g.n() || u == 0 || !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    /// No edge of `g` joins two unmatched vertices.
    pub fn is_maximal_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n() + 1];
        for &(u, v) in &self.pairs {
            used[u] = true;
            used[v] = true;
        }
        g.edges().all(|(u, v)| used[u] || used[v])
    }
}

/// `f = max(b, d)`.
pub fn right_spread(t: &Trapezoid) -> usize {
    t.b.max(t.d)
}

/// Trapezoid indices in ascending right spread; ties go to the smaller index.
pub fn spread_order(d: &TrapezoidDiagram) -> Vec<usize> {
    let mut order: Vec<usize> = (1..=d.n()).collect();
    order.sort_by_key(|&i| (right_spread(d.get(i)), i));
    order
}

/// The greedy, including its quadratic scan. Pairs appear in the order
/// they were formed.
pub fn right_spread_greedy(d: &TrapezoidDiagram) -> Matching {
    let order = spread_order(d);
    let mut removed = vec![false; d.n() + 1];
    let mut pairs = Vec::new();
    for (p, &i) in order.iter().enumerate() {
        if removed[i] {
            continue;
        }
        removed[i] = true;
        if let Some(&j) = order[p + 1..]
            .iter()
            .find(|&&j| !removed[j] && d.adjacent(i, j))
        {
            removed[j] = true;
            pairs.push((i, j));
        }
    }
    Matching::new(pairs)
}

/// Gadget: trapezoids 1-4 intersect pairwise except 3 and 4, with
/// `f(1) < f(2) < f(3) < f(4)`. The greedy pairs 1 with 2 and strands 3
/// and 4, while {1, 3}, {2, 4} is better. Trapezoid 5 has the smallest
/// spread and intersects only 6, which intersects everything; the greedy
/// and the optimum both use {5, 6}. Labels `1..=12` on each line.
pub const GADGET: [Trapezoid; 6] = [
    Trapezoid::new(5, 7, 4, 8),
    Trapezoid::new(8, 9, 5, 6),
    Trapezoid::new(3, 4, 7, 10),
    Trapezoid::new(6, 12, 11, 12),
    Trapezoid::new(1, 2, 2, 3),
    Trapezoid::new(10, 11, 1, 9),
];

/// The core gadget plus `k` shifted copies, `k / 2` to its left and the
/// rest to its right, each copy entirely left of the next.
///
/// The core keeps indices `1..=6`; copies follow in left-to-right order.
/// Each copy costs the greedy one edge, so the gap to the optimum is
/// exactly `k + 1`.
pub fn counterexample(k: usize) -> TrapezoidDiagram {
    let width = 2 * GADGET.len();
    let left = k / 2;
    let shifted = |slot: usize| {
        let off = slot * width;
        GADGET
            .iter()
            .map(move |t| Trapezoid::new(t.a + off, t.b + off, t.c + off, t.d + off))
    };
    let mut trapezoids: Vec<Trapezoid> = shifted(left).collect();
    for slot in (0..=k).filter(|&s| s != left) {
        trapezoids.extend(shifted(slot));
    }
    TrapezoidDiagram::new(trapezoids).expect("gadget copies form a valid diagram")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    pub greedy: Matching,
    pub exact: Matching,
}

impl Audit {
    pub fn gap(&self) -> usize {
        self.exact.cardinality() - self.greedy.cardinality()
    }
}

impl fmt::Display for Audit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "greedy {}, exact {}, gap {}",
            self.greedy.cardinality(),
            self.exact.cardinality(),
            self.gap()
        )
    }
}

/// Greedy against the exact optimum. The exhaustive matcher runs per
/// connected component, so the limit is on the largest component.
pub fn audit(d: &TrapezoidDiagram) -> Result<Audit, SizeLimit> {
    let g = d.to_graph();
    let exact = oracle::exact_max_matching(&g)?;
    let greedy = right_spread_greedy(d);
    debug_assert!(greedy.cardinality() <= exact.cardinality());
    Ok(Audit { greedy, exact })
}
