//! Trapezoid diagrams.
//!
//! Corners are integer ranks: on each line the `2n` corners of the `n`
//! trapezoids are labeled `1..=2n` exactly once. Every algorithm in the
//! crate except the right-spread greedy is purely ordinal, so ranks lose
//! nothing.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One trapezoid: `a`/`b` are its upper-left/upper-right corners and
/// `c`/`d` its lower-left/lower-right corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Trapezoid {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Trapezoid {
    pub const fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        Trapezoid { a, b, c, d }
    }

    /// `self` lies entirely to the left of `other`.
    #[inline]
    pub fn left_of(&self, other: &Trapezoid) -> bool {
        self.b < other.a && self.d < other.c
    }

    /// Two trapezoids between the same lines intersect iff neither is left of the other.
    #[inline]
    pub fn intersects(&self, other: &Trapezoid) -> bool {
        !self.left_of(other) && !other.left_of(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Upper,
    Lower,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Line::Upper => "upper",
            Line::Lower => "lower",
        })
    }
}

/// Why a set of trapezoids is not a valid diagram. Trapezoids are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationError {
    /// A corner label outside `1..=2n`.
    LabelOutOfRange {
        trapezoid: usize,
        corner: char,
        label: usize,
        max: usize,
    },
    /// `a >= b` on the upper line or `c >= d` on the lower line.
    CornersOutOfOrder {
        trapezoid: usize,
        line: Line,
        left: usize,
        right: usize,
    },
    /// Two corners on the same line share a label.
    DuplicateLabel {
        line: Line,
        label: usize,
        first: usize,
        second: usize,
    },
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ValidationError::LabelOutOfRange {
                trapezoid,
                corner,
                label,
                max,
            } => write!(
                f,
                "trapezoid {trapezoid}: label out of range: {corner} = {label} is not in 1..={max}"
            ),
            ValidationError::CornersOutOfOrder {
                trapezoid,
                line,
                left,
                right,
            } => {
                let rule = match line {
                    Line::Upper => "a ≥ b",
                    Line::Lower => "c ≥ d",
                };
                write!(f, "trapezoid {trapezoid}: {rule} ({left} ≥ {right})")
            }
            ValidationError::DuplicateLabel {
                line,
                label,
                first,
                second,
            } => write!(
                f,
                "duplicate {line} label {label} (trapezoids {first} and {second})"
            ),
        }
    }
}

impl core::error::Error for ValidationError {}

/// Checks that `trapezoids` form a diagram: on each line the corner labels
/// are exactly `1..=2n`, and every trapezoid has `a < b` and `c < d`.
pub fn validate(trapezoids: &[Trapezoid]) -> Result<(), ValidationError> {
    let max = 2 * trapezoids.len();
    // owner[label] = 1-based trapezoid index already using it.
    let mut upper = vec![0usize; max + 1];
    let mut lower = vec![0usize; max + 1];
    for (k, t) in trapezoids.iter().enumerate() {
        let idx = k + 1;
        for (corner, label) in [('a', t.a), ('b', t.b), ('c', t.c), ('d', t.d)] {
            if label == 0 || label > max {
                return Err(ValidationError::LabelOutOfRange {
                    trapezoid: idx,
                    corner,
                    label,
                    max,
                });
            }
        }
        if t.a >= t.b {
            return Err(ValidationError::CornersOutOfOrder {
                trapezoid: idx,
                line: Line::Upper,
                left: t.a,
                right: t.b,
            });
        }
        if t.c >= t.d {
            return Err(ValidationError::CornersOutOfOrder {
                trapezoid: idx,
                line: Line::Lower,
                left: t.c,
                right: t.d,
            });
        }
        for (line, label) in [
            (Line::Upper, t.a),
            (Line::Upper, t.b),
            (Line::Lower, t.c),
            (Line::Lower, t.d),
        ] {
            let owner = match line {
                Line::Upper => &mut upper,
                Line::Lower => &mut lower,
            };
            if owner[label] != 0 {
                return Err(ValidationError::DuplicateLabel {
                    line,
                    label,
                    first: owner[label],
                    second: idx,
                });
            }
            owner[label] = idx;
        }
    }
    Ok(())
}

/// A validated diagram of `n` trapezoids, indexed `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrapezoidDiagram {
    trapezoids: Vec<Trapezoid>,
}

impl TrapezoidDiagram {
    pub fn new(trapezoids: Vec<Trapezoid>) -> Result<Self, ValidationError> {
        validate(&trapezoids)?;
        Ok(TrapezoidDiagram { trapezoids })
    }

    pub fn n(&self) -> usize {
        self.trapezoids.len()
    }

    /// Trapezoid `i`, for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> &Trapezoid {
        &self.trapezoids[i - 1]
    }

    pub fn trapezoids(&self) -> &[Trapezoid] {
        &self.trapezoids
    }

    pub fn into_trapezoids(self) -> Vec<Trapezoid> {
        self.trapezoids
    }

    /// Real trapezoid `i` lies left of real trapezoid `j`.
    pub fn left_of(&self, i: usize, j: usize) -> bool {
        self.get(i).left_of(self.get(j))
    }

    /// Trapezoids `i != j` intersect, i.e. share an edge in the graph.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        debug_assert_ne!(i, j);
        self.get(i).intersects(self.get(j))
    }

    /// The intersection graph, with vertex `v` standing for trapezoid `v`.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for i in 1..=n {
            for j in i + 1..=n {
                if self.adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Attaches the two bounding dummy trapezoids.
    pub fn augment(&self) -> AugmentedDiagram {
        AugmentedDiagram::new(self)
    }

    /// Diagram of `n` trapezoids drawn deterministically from `seed`.
    ///
    /// The generator is ChaCha8 seeded with `seed` through
    /// `SeedableRng::seed_from_u64`. The upper labels `1..=2n` are shuffled
    /// with `SliceRandom::shuffle` and trapezoid `i` takes positions `2i - 2`
    /// and `2i - 1` of the result, smaller label first; the lower labels are
    /// then shuffled and assigned the same way. Each line is thus a uniform
    /// random perfect matching of its labels.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draw_line = |rng: &mut ChaCha8Rng| {
            let mut labels: Vec<usize> = (1..=2 * n).collect();
            labels.shuffle(rng);
            labels
        };
        let upper = draw_line(&mut rng);
        let lower = draw_line(&mut rng);
        let trapezoids = upper
            .chunks_exact(2)
            .zip(lower.chunks_exact(2))
            .map(|(u, l)| {
                Trapezoid::new(
                    u[0].min(u[1]),
                    u[0].max(u[1]),
                    l[0].min(l[1]),
                    l[0].max(l[1]),
                )
            })
            .collect();
        TrapezoidDiagram { trapezoids }
    }
}

/// A diagram with dummy trapezoid 0 (all corners 0) and `n + 1` (all
/// corners `2n + 1`) attached, plus the owner of every upper coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedDiagram {
    // Index 0..=n+1.
    corners: Vec<Trapezoid>,
    upper_index: Vec<usize>,
    events: Vec<PackedEvent>,
}

/// A corner met by a left-to-right sweep of the upper line.
///
/// `slot` locates the trapezoid's lower corner among the lower-right
/// corners of the `n` real trapezoids, so the sweeps can use trees of `n`
/// slots: `d(k) < c(i)` exactly when the close slot of `k` is at most the
/// open slot of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    /// Upper-left corner of `index`, for every trapezoid `1..=n+1`. `slot`
    /// is the number of lower-right corners below `c(index)`, in `0..=n`.
    Open { index: usize, slot: usize },
    /// Upper-right corner of a real trapezoid. `slot` is the rank of
    /// `d(index)` among the lower-right corners, in `1..=n`.
    Close { index: usize, slot: usize },
}

/// [`Event`] in eight bytes; the top bit of `index` marks a close.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PackedEvent {
    index: u32,
    slot: u32,
}

const CLOSE: u32 = 1 << 31;

impl PackedEvent {
    #[inline]
    fn unpack(self) -> Event {
        let (index, slot) = ((self.index & !CLOSE) as usize, self.slot as usize);
        if self.index & CLOSE == 0 {
            Event::Open { index, slot }
        } else {
            Event::Close { index, slot }
        }
    }
}

impl AugmentedDiagram {
    /// # Panics
    ///
    /// If `n >= 2^31 - 1`.
    pub fn new(d: &TrapezoidDiagram) -> Self {
        let n = d.n();
        let top = 2 * n + 1;
        let mut corners = Vec::with_capacity(n + 2);
        corners.push(Trapezoid::new(0, 0, 0, 0));
        corners.extend_from_slice(d.trapezoids());
        corners.push(Trapezoid::new(top, top, top, top));

        let mut upper_index = vec![0usize; top + 1];
        for (i, t) in corners.iter().enumerate() {
            upper_index[t.a] = i;
            upper_index[t.b] = i;
        }
        assert!(
            n < (CLOSE - 1) as usize,
            "diagram too large: {n} trapezoids"
        );
        // below[x] = number of lower-right corners of real trapezoids under x.
        let mut below = vec![0u32; top + 1];
        for t in d.trapezoids() {
            below[t.d] = 1;
        }
        let mut seen = 0;
        for x in below.iter_mut() {
            let here = *x;
            *x = seen;
            seen += here;
        }
        let events = upper_index[1..]
            .iter()
            .enumerate()
            .filter_map(|(j, &i)| {
                let t = &corners[i];
                if t.a == j + 1 {
                    Some(PackedEvent {
                        index: i as u32,
                        slot: below[t.c],
                    })
                } else if i <= n {
                    Some(PackedEvent {
                        index: i as u32 | CLOSE,
                        slot: below[t.d] + 1,
                    })
                } else {
                    None
                }
            })
            .collect();
        AugmentedDiagram {
            corners,
            upper_index,
            events,
        }
    }

    /// Number of real trapezoids.
    pub fn n(&self) -> usize {
        self.corners.len() - 2
    }

    /// Trapezoid `i` for `0 <= i <= n + 1`.
    #[inline]
    pub fn get(&self, i: usize) -> &Trapezoid {
        &self.corners[i]
    }

    #[inline]
    pub fn left_of(&self, i: usize, j: usize) -> bool {
        self.corners[i].left_of(&self.corners[j])
    }

    /// Owner of each upper coordinate `0..=2n+1`.
    pub fn upper_index(&self) -> &[usize] {
        &self.upper_index
    }

    /// Sweep events for upper coordinates `1..=2n+1`: an [`Event::Open`]
    /// for every trapezoid `1..=n+1` and an [`Event::Close`] for every real one.
    pub fn events(&self) -> impl ExactSizeIterator<Item = Event> + '_ {
        self.events.iter().map(|e| e.unpack())
    }

    /// The trapezoids `0..=n+1` ordered by upper-left corner.
    pub fn by_upper_left(&self) -> impl Iterator<Item = usize> + '_ {
        self.upper_index
            .iter()
            .enumerate()
            .filter(move |&(j, &i)| self.corners[i].a == j)
            .map(|(_, &i)| i)
    }
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    // adjacency[v - 1], sorted ascending.
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Adds `{u, v}`; duplicates and loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u >= 1 && u <= self.n() && v >= 1 && v <= self.n(),
            "vertex out of range"
        );
        if u == v || self.has_edge(u, v) {
            return;
        }
        for (x, y) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[x - 1];
            let pos = list.partition_point(|&w| w < y);
            list.insert(pos, y);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(k, list)| {
            let u = k + 1;
            list.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    /// The subgraph induced by `keep` (any order), relabeled `1..=keep.len()`
    /// in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut position = vec![0usize; self.n() + 1];
        for (k, &v) in keep.iter().enumerate() {
            position[v] = k + 1;
        }
        let mut g = Graph::new(keep.len());
        for &u in keep {
            for &v in self.neighbors(u) {
                if position[v] != 0 && u < v {
                    g.add_edge(position[u], position[v]);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}
