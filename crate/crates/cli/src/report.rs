//! Line-oriented `key: value` reports.

use std::fmt::{self, Write as _};

use trapgraph_core::cover::CoverReport;
use trapgraph_core::independence::{self, SweepState};
use trapgraph_core::matching::{Audit, Matching};
use trapgraph_core::{BigCount, TrapezoidDiagram};

/// Results of `analyze`. Counts are exact; `num_is` excludes the empty set
/// and `num_vc` includes the empty cover when there are no edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub n: usize,
    pub alpha: usize,
    pub num_max_is: BigCount,
    pub num_is: BigCount,
    pub min_vc_size: usize,
    pub num_min_vc: BigCount,
    pub num_vc: BigCount,
    pub polynomial: Option<Vec<BigCount>>,
    /// (maximum independent set, minimum vertex cover)
    pub witnesses: Option<(Vec<usize>, Vec<usize>)>,
}

impl AnalysisReport {
    pub fn build(d: &TrapezoidDiagram, polynomial: bool, witnesses: bool) -> Self {
        let aug = d.augment();
        let state = SweepState::run(&aug);
        let covers = CoverReport::from_sweep(d.n(), &state);
        let report = AnalysisReport {
            n: d.n(),
            alpha: state.alpha(),
            num_max_is: state.num_max_ind.clone(),
            num_is: state.independent_set_count(),
            min_vc_size: covers.min_vc_size,
            num_min_vc: covers.num_min_vc,
            num_vc: covers.num_vc,
            polynomial: polynomial
                .then(|| independence::independence_polynomial(&aug).coefficients),
            witnesses: witnesses.then(|| (state.witness.clone(), covers.witness)),
        };
        report.check_duality();
        report
    }

    /// Cover quantities must mirror independence quantities exactly.
    fn check_duality(&self) {
        assert_eq!(self.min_vc_size + self.alpha, self.n);
        assert_eq!(self.num_min_vc, self.num_max_is);
        assert_eq!(self.num_vc, &self.num_is + 1u32);
        if let Some(p) = &self.polynomial {
            assert_eq!(p.len(), self.alpha + 1);
            assert_eq!(p[self.alpha], self.num_max_is);
        }
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    let mut out = String::new();
    for (k, item) in items.iter().enumerate() {
        if k > 0 {
            out.push_str(sep);
        }
        write!(out, "{item}").unwrap();
    }
    out
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "alpha: {}", self.alpha)?;
        writeln!(f, "num_max_is: {}", self.num_max_is)?;
        writeln!(f, "num_is: {}", self.num_is)?;
        writeln!(f, "min_vc_size: {}", self.min_vc_size)?;
        writeln!(f, "num_min_vc: {}", self.num_min_vc)?;
        writeln!(f, "num_vc: {}", self.num_vc)?;
        if let Some(p) = &self.polynomial {
            writeln!(f, "polynomial: {}", join(p, " "))?;
        }
        if let Some((is, vc)) = &self.witnesses {
            writeln!(f, "{}", field("max_is_witness", &join(is, " ")))?;
            writeln!(f, "{}", field("min_vc_witness", &join(vc, " ")))?;
        }
        Ok(())
    }
}

/// `key: value`, or just `key:` when the value is empty.
fn field(key: &str, value: &str) -> String {
    if value.is_empty() {
        format!("{key}:")
    } else {
        format!("{key}: {value}")
    }
}

fn pairs(m: &Matching) -> String {
    let items: Vec<String> = m.pairs().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    join(&items, " ")
}

/// Output of `matching`: the greedy result and, when audited, the optimum.
pub fn matching_report(n: usize, greedy: &Matching, audit: Option<&Audit>) -> String {
    let mut out = String::new();
    writeln!(out, "n: {n}").unwrap();
    writeln!(out, "greedy: {}", greedy.cardinality()).unwrap();
    writeln!(out, "{}", field("greedy_pairs", &pairs(greedy))).unwrap();
    if let Some(a) = audit {
        writeln!(out, "exact: {}", a.exact.cardinality()).unwrap();
        writeln!(out, "{}", field("exact_pairs", &pairs(&a.exact))).unwrap();
        writeln!(out, "gap: {}", a.gap()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trapgraph_core::Trapezoid;

    #[test]
    fn disjoint_pair() {
        let d = TrapezoidDiagram::new(vec![Trapezoid::new(1, 2, 1, 2), Trapezoid::new(3, 4, 3, 4)])
            .unwrap();
        let text = AnalysisReport::build(&d, true, true).to_string();
        assert_eq!(
            text,
            "n: 2\nalpha: 2\nnum_max_is: 1\nnum_is: 3\nmin_vc_size: 0\nnum_min_vc: 1\nnum_vc: 4\n\
             polynomial: 1 2 1\nmax_is_witness: 1 2\nmin_vc_witness:\n"
        );
        let plain = AnalysisReport::build(&d, false, false).to_string();
        assert_eq!(plain.lines().count(), 7);
    }
}
