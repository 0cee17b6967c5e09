//! Wall-clock comparison of the sweep algorithms and the quadratic baselines.
//!
//! Both algorithms compute the same two quantities, the independence number
//! and the number of maximum independent sets, so timings are comparable
//! and the values ride along as a cross-check.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use trapgraph_core::independence::{self, MaxIndProfile};
use trapgraph_core::{AugmentedDiagram, BigCount, TrapezoidDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Algorithm {
    Sweep,
    Quadratic,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Sweep => "sweep",
            Algorithm::Quadratic => "quadratic",
        })
    }
}

/// `sweep`, `quadratic` or `both`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection(pub &'static [Algorithm]);

impl FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sweep" => Ok(Selection(&[Algorithm::Sweep])),
            "quadratic" => Ok(Selection(&[Algorithm::Quadratic])),
            "both" => Ok(Selection(&[Algorithm::Sweep, Algorithm::Quadratic])),
            other => Err(format!(
                "unknown algorithm {other:?}; expected sweep, quadratic or both"
            )),
        }
    }
}

/// Runs one algorithm, returning `(alpha, number of maximum independent sets)`.
pub fn run(algo: Algorithm, d: &AugmentedDiagram) -> (usize, BigCount) {
    match algo {
        Algorithm::Sweep => {
            let profile = MaxIndProfile::sweep(d);
            let count = independence::count_max_independent_sets_from(d, &profile);
            (profile.alpha(), count)
        }
        Algorithm::Quadratic => {
            let profile = MaxIndProfile::quadratic(d);
            let count = independence::count_max_is_quadratic_with(d, &profile);
            (profile.alpha(), count)
        }
    }
}

/// Median of `runs` timed executions (at least one).
pub fn time(algo: Algorithm, d: &AugmentedDiagram, runs: usize) -> (Duration, usize, BigCount) {
    let mut times = Vec::with_capacity(runs.max(1));
    let mut result = None;
    for _ in 0..runs.max(1) {
        let start = Instant::now();
        let r = run(algo, d);
        times.push(start.elapsed());
        result = Some(r);
    }
    times.sort_unstable();
    let (alpha, count) = result.expect("at least one run");
    (times[times.len() / 2], alpha, count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub algo: Algorithm,
    pub median: Duration,
    pub runs: usize,
    pub alpha: usize,
    pub num_max_is: BigCount,
}

pub const HEADER: &str = "n\talgo\tmedian_s\truns\talpha\tnum_max_is";

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{:.6}\t{}\t{}\t{}",
            self.n,
            self.algo,
            self.median.as_secs_f64(),
            self.runs,
            self.alpha,
            self.num_max_is
        )
    }
}

/// One random diagram per size (seeded by `seed`), timed under each selected algorithm.
pub fn table(sizes: &[usize], selection: Selection, runs: usize, seed: u64) -> Vec<Row> {
    let mut rows = Vec::new();
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    for &n in &sizes {
        let d = TrapezoidDiagram::random(n, seed).augment();
        for &algo in selection.0 {
            let (median, alpha, num_max_is) = time(algo, &d, runs);
            rows.push(Row {
                n,
                algo,
                median,
                runs: runs.max(1),
                alpha,
                num_max_is,
            });
        }
    }
    rows
}
