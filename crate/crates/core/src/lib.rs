//! Independent sets, vertex covers and matchings on trapezoid graphs.
//!
//! A trapezoid diagram is two horizontal lines with `n` trapezoids whose
//! corners sit on them. Two trapezoids are adjacent in the trapezoid graph
//! exactly when they intersect, i.e. when neither lies entirely to the left
//! of the other. Independent sets are therefore chains of the "left of"
//! order, which is what lets a left-to-right sweep with a Fenwick tree count
//! them in `O(n log n)`.
//!
//! The crate is `no_std` and only needs `alloc`:
//!
//! * [`fenwick`]: prefix-sum and prefix-max binary indexed trees.
//! * [`diagram`]: the validated diagram model, random generation and the
//!   explicit graph.
//! * [`independence`]: sweeps for the independence number, independent-set
//!   counts and the independence polynomial, plus quadratic baselines.
//! * [`cover`]: vertex-cover quantities by complementation.
//! * [`matching`]: the right-spread greedy matching and a family of
//!   diagrams on which it is suboptimal.
//! * [`oracle`]: exhaustive ground truth for small graphs.
//!
//! ```
//! use trapgraph_core::diagram::{Trapezoid, TrapezoidDiagram};
//! use trapgraph_core::independence::SweepState;
//!
//! let d = TrapezoidDiagram::new(vec![
//!     Trapezoid::new(1, 2, 1, 2),
//!     Trapezoid::new(3, 4, 3, 4),
//! ])
//! .unwrap();
//! let state = SweepState::run(&d.augment());
//! assert_eq!(state.alpha(), 2);
//! assert_eq!(state.independent_set_count(), 3u32.into());
//! ```
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cover;
pub mod diagram;
pub mod fenwick;
pub mod independence;
pub mod matching;
pub mod oracle;

/// Arbitrary-precision count. Set counts grow like `2^n`.
pub type BigCount = num_bigint::BigUint;

pub use diagram::{AugmentedDiagram, Event, Graph, Trapezoid, TrapezoidDiagram, ValidationError};
