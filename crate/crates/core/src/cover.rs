//! Vertex covers by complementation: `C` is a (minimum) vertex cover iff
//! `V - C` is a (maximum) independent set.
//!
//! Counts include the empty cover, which is a cover exactly when the graph
//! has no edges.

use alloc::vec::Vec;

use crate::diagram::TrapezoidDiagram;
use crate::independence::{self, SweepState};
use crate::BigCount;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub min_vc_size: usize,
    pub num_min_vc: BigCount,
    pub num_vc: BigCount,
    /// A minimum vertex cover, ascending.
    pub witness: Vec<usize>,
}

impl CoverReport {
    pub fn new(d: &TrapezoidDiagram) -> Self {
        CoverReport::from_sweep(d.n(), &SweepState::run(&d.augment()))
    }

    /// Complements an existing sweep over a diagram of `n` trapezoids.
    pub fn from_sweep(n: usize, state: &SweepState) -> Self {
        CoverReport {
            min_vc_size: n - state.alpha(),
            num_min_vc: state.num_max_ind.clone(),
            num_vc: state.num_ind[n + 1].clone(),
            witness: complement(n, &state.witness),
        }
    }
}

/// `{1..=n}` minus an ascending set.
fn complement(n: usize, set: &[usize]) -> Vec<usize> {
    let mut rest = set.iter().peekable();
    (1..=n)
        .filter(|&v| {
            if rest.peek() == Some(&&v) {
                rest.next();
                false
            } else {
                true
            }
        })
        .collect()
}

pub fn min_vertex_cover_size(d: &TrapezoidDiagram) -> usize {
    d.n() - independence::max_is_size(&d.augment())
}

pub fn count_minimum_vertex_covers(d: &TrapezoidDiagram) -> BigCount {
    independence::count_max_independent_sets(&d.augment())
}

/// All vertex covers, the empty one included when the graph is edgeless.
pub fn count_vertex_covers(d: &TrapezoidDiagram) -> BigCount {
    independence::count_independent_sets(&d.augment()) + 1u32
}

/// The complement of [`independence::max_is_witness`].
pub fn min_vertex_cover_witness(d: &TrapezoidDiagram) -> Vec<usize> {
    complement(d.n(), &independence::max_is_witness(&d.augment()))
}
