//! Randomized comparison of every fast algorithm against exhaustive enumeration.

use std::fmt;

use trapgraph_core::cover::CoverReport;
use trapgraph_core::independence::{self, SweepState};
use trapgraph_core::oracle::{self, SizeLimit, SUBSET_LIMIT};
use trapgraph_core::TrapezoidDiagram;

use crate::format;

/// Test hook: deliberately break one comparison so the failure path can be
/// exercised end to end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Treat the first alpha comparison as a mismatch.
    FlipAlphaComparison,
}

/// Seed of trial `trial` at size `n` in a campaign with base seed `base`.
pub fn trial_seed(base: u64, n: usize, trial: usize) -> u64 {
    base.wrapping_add((n as u64) * 1_000_000 + trial as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub seed: u64,
    pub quantity: &'static str,
    pub fast: String,
    pub oracle: String,
    pub diagram: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "mismatch in {} for n = {}, seed = {}: fast {} vs oracle {}",
            self.quantity, self.n, self.seed, self.fast, self.oracle
        )?;
        writeln!(
            f,
            "reproduce: trapgraph gen {} --seed {} --out case.trap && trapgraph analyze case.trap --polynomial",
            self.n, self.seed
        )?;
        write!(f, "diagram:\n{}", self.diagram)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    SizeLimit(SizeLimit),
    Mismatch(Box<Mismatch>),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::SizeLimit(e) => e.fmt(f),
            VerifyError::Mismatch(m) => m.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub diagrams: usize,
    pub max_n: usize,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pass: {} diagrams, n <= {}", self.diagrams, self.max_n)
    }
}

/// Checks one diagram: alpha, #IS, #max-IS (sweep and quadratic), the
/// polynomial, and the three cover quantities.
pub fn check_diagram(
    d: &TrapezoidDiagram,
    seed: u64,
    fault: &mut Fault,
) -> Result<(), VerifyError> {
    let truth = oracle::brute_enumerate(&d.to_graph()).map_err(VerifyError::SizeLimit)?;
    let aug = d.augment();
    let state = SweepState::run(&aug);
    let covers = CoverReport::from_sweep(d.n(), &state);
    let poly = independence::independence_polynomial(&aug).coefficients;

    let mismatch = |quantity, fast: String, oracle: String| {
        VerifyError::Mismatch(Box::new(Mismatch {
            n: d.n(),
            seed,
            quantity,
            fast,
            oracle,
            diagram: format::serialize(d),
        }))
    };
    macro_rules! check {
        ($name:expr, $fast:expr, $oracle:expr) => {
            if $fast != $oracle {
                return Err(mismatch($name, $fast.to_string(), $oracle.to_string()));
            }
        };
    }

    let alpha_ok = state.alpha() == truth.alpha;
    let alpha_ok = if *fault == Fault::FlipAlphaComparison {
        *fault = Fault::None;
        !alpha_ok
    } else {
        alpha_ok
    };
    if !alpha_ok {
        return Err(mismatch(
            "alpha",
            state.alpha().to_string(),
            truth.alpha.to_string(),
        ));
    }
    check!("num_is", state.independent_set_count(), truth.is_count());
    check!("num_max_is", state.num_max_ind, truth.max_is_count);
    check!(
        "num_max_is (quadratic)",
        independence::count_max_is_quadratic(&aug),
        truth.max_is_count
    );
    check!("min_vc_size", covers.min_vc_size, truth.min_vc_size);
    check!("num_min_vc", covers.num_min_vc, truth.min_vc_count);
    check!("num_vc", covers.num_vc, truth.vc_count);
    if poly != truth.per_size_counts {
        let show = |v: &[trapgraph_core::BigCount]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        return Err(mismatch(
            "polynomial",
            show(&poly),
            show(&truth.per_size_counts),
        ));
    }
    Ok(())
}

/// `trials` diagrams for every `n` in `1..=max_n`, seeded by [`trial_seed`].
/// Sizes run on separate threads; the first mismatch in size order wins.
pub fn campaign(
    trials: usize,
    max_n: usize,
    base_seed: u64,
    fault: Fault,
) -> Result<Summary, VerifyError> {
    if max_n > SUBSET_LIMIT {
        return Err(VerifyError::SizeLimit(SizeLimit {
            n: max_n,
            limit: SUBSET_LIMIT,
        }));
    }
    let results: Vec<Result<usize, VerifyError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=max_n)
            .map(|n| {
                // The injected fault fires on the smallest size only.
                let mut fault = if n == 1 { fault } else { Fault::None };
                scope.spawn(move || {
                    for trial in 0..trials {
                        let seed = trial_seed(base_seed, n, trial);
                        let d = TrapezoidDiagram::random(n, seed);
                        check_diagram(&d, seed, &mut fault)?;
                    }
                    Ok(trials)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });
    let mut diagrams = 0;
    for r in results {
        diagrams += r?;
    }
    Ok(Summary { diagrams, max_n })
}
