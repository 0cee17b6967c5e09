//! Fast algorithms against independent ground truth.

use trapgraph_core::cover::{self, CoverReport};
use trapgraph_core::diagram::{Graph, Trapezoid, TrapezoidDiagram};
use trapgraph_core::independence::{self, MaxIndProfile, SweepState};
use trapgraph_core::oracle;
use trapgraph_core::BigCount;

/// Closed-region intersection of two trapezoids drawn with y = 1 on the
/// upper line and y = 0 on the lower line, by the separating axis test.
fn regions_intersect(p: &Trapezoid, q: &Trapezoid) -> bool {
    fn polygon(t: &Trapezoid) -> [(i64, i64); 4] {
        [
            (t.c as i64, 0),
            (t.d as i64, 0),
            (t.b as i64, 1),
            (t.a as i64, 1),
        ]
    }
    let (pp, qq) = (polygon(p), polygon(q));
    for poly in [&pp, &qq] {
        for k in 0..4 {
            let (x0, y0) = poly[k];
            let (x1, y1) = poly[(k + 1) % 4];
            let axis = (y0 - y1, x1 - x0);
            let project = |pts: &[(i64, i64); 4]| {
                let vals = pts.iter().map(|&(x, y)| x * axis.0 + y * axis.1);
                (vals.clone().min().unwrap(), vals.max().unwrap())
            };
            let (lo1, hi1) = project(&pp);
            let (lo2, hi2) = project(&qq);
            if hi1 < lo2 || hi2 < lo1 {
                return false;
            }
        }
    }
    true
}

#[test]
fn adjacency_is_geometric_intersection() {
    for seed in 0..1000u64 {
        let n = 1 + (seed % 8) as usize;
        let d = TrapezoidDiagram::random(n, seed);
        for i in 1..=n {
            for j in i + 1..=n {
                assert_eq!(
                    d.adjacent(i, j),
                    regions_intersect(d.get(i), d.get(j)),
                    "seed {seed} pair {i} {j}"
                );
            }
        }
    }
}

/// Longest chain of an explicit strict order by memoized search.
fn longest_chain(n: usize, less: &dyn Fn(usize, usize) -> bool) -> usize {
    fn from(
        i: usize,
        n: usize,
        less: &dyn Fn(usize, usize) -> bool,
        memo: &mut [Option<usize>],
    ) -> usize {
        if let Some(v) = memo[i] {
            return v;
        }
        let best = (1..=n)
            .filter(|&j| less(i, j))
            .map(|j| from(j, n, less, memo))
            .max()
            .unwrap_or(0);
        memo[i] = Some(best + 1);
        best + 1
    }
    let mut memo = vec![None; n + 1];
    (1..=n)
        .map(|i| from(i, n, less, &mut memo))
        .max()
        .unwrap_or(0)
}

#[test]
fn alpha_is_longest_chain() {
    for seed in 0..300u64 {
        let n = (seed % 60) as usize;
        let d = TrapezoidDiagram::random(n, seed);
        let expected = longest_chain(n, &|i, j| d.left_of(i, j));
        assert_eq!(
            independence::max_is_size(&d.augment()),
            expected,
            "seed {seed}"
        );
    }
}

#[test]
fn everything_matches_enumeration() {
    for n in 0..=12usize {
        for trial in 0..150u64 {
            let seed = n as u64 * 1_000_000 + trial;
            let d = TrapezoidDiagram::random(n, seed);
            let aug = d.augment();
            let g = d.to_graph();
            let truth = oracle::brute_enumerate(&g).unwrap();

            let state = SweepState::run(&aug);
            assert_eq!(state.alpha(), truth.alpha, "seed {seed}");
            assert_eq!(
                state.independent_set_count(),
                truth.is_count(),
                "seed {seed}"
            );
            assert_eq!(state.num_max_ind, truth.max_is_count, "seed {seed}");
            assert_eq!(
                independence::independence_polynomial(&aug).coefficients,
                truth.per_size_counts,
                "seed {seed}"
            );
            assert_eq!(
                independence::count_max_is_quadratic(&aug),
                truth.max_is_count
            );

            let covers = CoverReport::new(&d);
            assert_eq!(covers.min_vc_size, truth.min_vc_size);
            assert_eq!(covers.num_min_vc, truth.min_vc_count);
            assert_eq!(covers.num_vc, truth.vc_count);

            // Witnesses.
            assert_eq!(state.witness.len(), truth.alpha);
            for (k, &u) in state.witness.iter().enumerate() {
                for &v in &state.witness[k + 1..] {
                    assert!(!g.has_edge(u, v), "seed {seed}: witness not independent");
                }
            }
            assert!(g
                .edges()
                .all(|(u, v)| covers.witness.contains(&u) || covers.witness.contains(&v)));
        }
    }
}

#[test]
fn polynomial_invariants() {
    for seed in 0..200u64 {
        let n = 1 + (seed % 40) as usize;
        let aug = TrapezoidDiagram::random(n, seed).augment();
        let poly = independence::independence_polynomial(&aug);
        assert_eq!(poly.coefficients[0], BigCount::from(1u32));
        assert_eq!(poly.coefficients[1], BigCount::from(n));
        assert!(poly.coefficients.iter().all(|s| *s > BigCount::from(0u32)));
        assert_eq!(poly.alpha(), independence::max_is_size(&aug));
        let nonempty: BigCount = poly.coefficients[1..].iter().sum();
        assert_eq!(nonempty, independence::count_independent_sets(&aug));
        assert_eq!(
            poly.coefficients[poly.alpha()],
            independence::count_max_independent_sets(&aug)
        );
    }
}

#[test]
fn sweep_agrees_with_quadratic_beyond_oracle_range() {
    for seed in 0..40u64 {
        let n = [100, 200, 500][seed as usize % 3];
        let aug = TrapezoidDiagram::random(n, seed).augment();
        assert_eq!(
            MaxIndProfile::sweep(&aug),
            MaxIndProfile::quadratic(&aug),
            "seed {seed}"
        );
        assert_eq!(
            independence::count_max_independent_sets(&aug),
            independence::count_max_is_quadratic(&aug),
            "seed {seed}"
        );
    }
}

#[test]
fn monotone_consistency() {
    for seed in 0..200u64 {
        let n = 1 + (seed % 50) as usize;
        let d = TrapezoidDiagram::random(n, seed);
        let state = SweepState::run(&d.augment());
        assert!(state.alpha() <= n && state.alpha() >= 1);
        assert!(state.num_max_ind >= BigCount::from(1u32));
        assert!(state.independent_set_count() >= BigCount::from(n));
        assert_eq!(cover::min_vertex_cover_size(&d) + state.alpha(), n);
    }
}

/// `G - v` and `G - v - N(v)`, relabeled.
fn delete(g: &Graph, removed: &[usize]) -> Graph {
    let keep: Vec<usize> = (1..=g.n()).filter(|v| !removed.contains(v)).collect();
    g.induced(&keep)
}

#[test]
fn vertex_cover_deletion_recurrence() {
    for seed in 0..200u64 {
        let n = 1 + (seed % 10) as usize;
        let g = TrapezoidDiagram::random(n, seed).to_graph();
        let v = 1 + (seed.wrapping_mul(2654435761) % n as u64) as usize;
        let mut closed = vec![v];
        closed.extend_from_slice(g.neighbors(v));
        let whole = oracle::brute_vc_count(&g).unwrap();
        let without_v = oracle::brute_vc_count(&delete(&g, &[v])).unwrap();
        let without_closed = oracle::brute_vc_count(&delete(&g, &closed)).unwrap();
        assert_eq!(whole, without_v + without_closed, "seed {seed}");
    }
}
