mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use pair014_core::export::readback::{parse_lp, parse_mps};
use pair014_core::{
    build_model, build_simple_cuts, chromatic_number, gen_gnp, is_k_colorable, max_independent_with, parse_dimacs,
    parse_sol, solution_from_coloring, solve, solve_with_observer, tangent_value, verify_solution, write_dimacs,
    write_lp, write_mps, write_sol, BigRational, BranchRule, Coloring, ConstraintTag, CutReport, Graph, IMaxMode,
    ModelOptions, PairAssignment, PairVars, Rational, SolveConfig, SolveStatus,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_with_coloring(max_n: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    (graph_strategy(max_n), any::<u64>()).prop_map(|(g, seed)| {
        let c = common::random_proper_coloring(&mut common::rng(seed), &g);
        (g, c)
    })
}

fn with_cuts() -> ModelOptions {
    ModelOptions { use_cuts: true, ..ModelOptions::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimacs_round_trip(g in graph_strategy(30)) {
        let back = parse_dimacs(&write_dimacs(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn generator_is_deterministic(n in 0usize..40, p in 0.0f64..=1.0, seed in any::<u64>()) {
        prop_assert_eq!(gen_gnp(n, p, seed).unwrap(), gen_gnp(n, p, seed).unwrap());
    }

    #[test]
    fn dsatur_is_proper_and_above_clique(g in graph_strategy(25)) {
        let c = g.dsatur_coloring();
        prop_assert!(c.is_proper(&g));
        let clique = g.greedy_clique();
        prop_assert!(g.is_clique(&clique));
        prop_assert!(c.num_colors() >= clique.len());
    }

    #[test]
    fn complement_involution(g in graph_strategy(20)) {
        let h = g.complement();
        prop_assert_eq!(h.complement(), g.clone());
        prop_assert_eq!(g.num_edges() + h.num_edges(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn pair_variable_count(g in graph_strategy(20)) {
        let pairs = PairVars::build(&g);
        prop_assert_eq!(pairs.len(), g.n() * g.n().saturating_sub(1) / 2 - g.num_edges());
        for (id, p) in pairs.vars().iter().enumerate() {
            prop_assert!(p.u < p.v && !g.has_edge(p.u, p.v));
            prop_assert_eq!(pairs.id(p.u, p.v), Some(id));
            prop_assert_eq!(pairs.id(p.v, p.u), Some(id));
        }
    }

    #[test]
    fn fractional_objective_counts_colors((g, c) in graph_with_coloring(15)) {
        let m = build_model(&g, ModelOptions::default()).unwrap();
        let x = m.coloring_to_x(&c).unwrap();
        prop_assert_eq!(x.values(), &common::x_of(m.pairs(), c.colors())[..]);
        let obj = m.fractional_objective(&x).unwrap();
        prop_assert_eq!(obj, BigRational::from_integer(BigInt::from(c.num_colors())));
        let classes = m.x_to_components(&x).unwrap();
        prop_assert_eq!(classes.len(), c.num_colors());
    }

    #[test]
    fn encoding_ignores_color_names((g, c) in graph_with_coloring(12), shift in 1usize..50) {
        let pairs = PairVars::build(&g);
        let k = g.n().max(1);
        // a permutation of 0..k applied to every color
        let renamed = Coloring::new(c.colors().iter().map(|&col| (col + shift) % k).collect());
        prop_assert!(renamed.is_proper(&g));
        prop_assert_eq!(
            pair014_core::coloring_to_x(&g, &pairs, &c).unwrap(),
            pair014_core::coloring_to_x(&g, &pairs, &renamed).unwrap()
        );
    }

    #[test]
    fn proper_colorings_satisfy_cuts((g, c) in graph_with_coloring(11), bumps in proptest::collection::vec(0usize..4, 11)) {
        let pairs = PairVars::build(&g);
        let report = CutReport::compute(&g, 1_000_000);
        let x = common::x_of(&pairs, c.colors());
        let fv = vec![Rational::from_integer(0); g.n()];
        for row in build_simple_cuts(&pairs, &report).unwrap() {
            prop_assert!(common::row_holds(&row, &x, &fv), "{}", row.label);
        }
        let loose = CutReport::from_sizes(report.sizes.iter().zip(&bumps).map(|(s, b)| s + b).collect());
        for row in build_simple_cuts(&pairs, &loose).unwrap() {
            prop_assert!(common::row_holds(&row, &x, &fv), "{}", row.label);
        }
    }

    #[test]
    fn independent_set_sizes_match_enumeration(g in graph_strategy(11)) {
        for v in 0..g.n() {
            let (size, exact) = max_independent_with(&g, v, 1_000_000);
            prop_assert!(exact);
            prop_assert_eq!(size, common::brute_max_independent_with(&g, v));
        }
    }

    #[test]
    fn budgeted_sizes_are_upper_bounds(g in graph_strategy(11), budget in 0u64..6) {
        for v in 0..g.n() {
            let (size, exact) = max_independent_with(&g, v, budget);
            let truth = common::brute_max_independent_with(&g, v);
            prop_assert!(size >= truth);
            if exact {
                prop_assert_eq!(size, truth);
            }
        }
    }

    #[test]
    fn oracle_is_monotone(g in graph_strategy(9)) {
        let chi = chromatic_number(&g).chromatic_number;
        prop_assert_eq!(chi, common::brute_chromatic(&g));
        for k in 0..=g.n() + 1 {
            prop_assert_eq!(is_k_colorable(&g, k).is_some(), k >= chi);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn feasible_set_is_the_set_of_partitions(g in graph_strategy(7).prop_filter("small search space", |g| {
        PairVars::build(g).len() <= 15
    })) {
        let m = build_model(&g, ModelOptions::default()).unwrap();
        let pairs = m.pairs();
        let mut feasible = BTreeSet::new();
        let mut best: Option<BigRational> = None;
        for mask in 0..1u64 << pairs.len() {
            let x = PairAssignment::from_values(common::from_mask(mask, pairs.len()));
            if m.check_feasibility(&x, None).unwrap().is_feasible() {
                let fv = m.fv_for(&x);
                prop_assert!(m.check_feasibility(&x, Some(&fv)).unwrap().is_feasible());
                let obj = m.fractional_objective(&x).unwrap();
                best = Some(best.map_or(obj.clone(), |b| b.min(obj)));
                feasible.insert(x.values().to_vec());
            }
        }
        let image: BTreeSet<Vec<bool>> =
            common::proper_partitions(&g).iter().map(|c| common::x_of(pairs, c)).collect();
        prop_assert_eq!(&feasible, &image);
        let chi = chromatic_number(&g).chromatic_number;
        prop_assert_eq!(best, Some(BigRational::from_integer(BigInt::from(chi))));
        prop_assert_eq!(solve(&g, &SolveConfig::default()).upper_bound, chi);
    }

    #[test]
    fn reduction_keeps_the_feasible_set(g in graph_strategy(6)) {
        let pairs = PairVars::build(&g);
        let rows = pair014_core::build_triangle_constraints(&g, &pairs);
        let fv = vec![Rational::from_integer(0); g.n()];
        for mask in 0..1u64 << pairs.len() {
            let x = common::from_mask(mask, pairs.len());
            let reduced = rows.iter().all(|r| common::row_holds(r, &x, &fv));
            prop_assert_eq!(reduced, common::full_triangle_system_holds(&g, &pairs, &x));
        }
    }

    #[test]
    fn solver_matches_oracle(g in graph_strategy(11), cuts in any::<bool>(), rule in 0usize..3) {
        let branching = [BranchRule::CommonNeighbors, BranchRule::CommonNonNeighbors, BranchRule::First][rule];
        let cfg = SolveConfig { use_cuts: cuts, branching, ..SolveConfig::default() };
        let r = solve(&g, &cfg);
        let chi = chromatic_number(&g).chromatic_number;
        prop_assert_eq!(r.status, SolveStatus::Optimal);
        prop_assert_eq!((r.lower_bound, r.upper_bound), (chi, chi));
        prop_assert!(r.incumbent.is_proper(&g));
        prop_assert_eq!(r.incumbent.num_colors(), r.upper_bound);
    }

    #[test]
    fn incumbent_is_feasible_for_the_milp(g in graph_strategy(11), cuts in any::<bool>(), node_limit in 1u64..40) {
        let cfg = SolveConfig { use_cuts: cuts, node_limit: Some(node_limit), ..SolveConfig::default() };
        let r = solve(&g, &cfg);
        prop_assert!(r.incumbent.is_proper(&g));
        prop_assert_eq!(r.incumbent.num_colors(), r.upper_bound);
        prop_assert!(r.lower_bound <= r.upper_bound);
        let opts = ModelOptions { use_cuts: cuts, ..ModelOptions::default() };
        let m = build_model(&g, opts).unwrap();
        let x = m.coloring_to_x(&r.incumbent).unwrap();
        let fv = m.fv_for(&x);
        prop_assert!(m.check_feasibility(&x, Some(&fv)).unwrap().is_feasible());
        prop_assert_eq!(m.fractional_objective(&x).unwrap(), BigRational::from_integer(BigInt::from(r.upper_bound)));
    }

    #[test]
    fn bounds_move_monotonically(seed in any::<u64>(), n in 15usize..35, p in 0.2f64..0.8, limit in 1u64..3000) {
        let g = gen_gnp(n, p, seed).unwrap();
        let cfg = SolveConfig { node_limit: Some(limit), ..SolveConfig::default() };
        let mut trace = Vec::new();
        let r = solve_with_observer(&g, &cfg, |lb, ub| trace.push((lb, ub)));
        for w in trace.windows(2) {
            prop_assert!(w[1].0 >= w[0].0 && w[1].1 <= w[0].1, "{:?}", trace);
        }
        for &(lb, ub) in &trace {
            prop_assert!(lb <= ub);
        }
        if let Some(&(lb, ub)) = trace.last() {
            prop_assert!(r.lower_bound >= lb && r.upper_bound <= ub);
        }
    }

    #[test]
    fn solves_are_deterministic(seed in any::<u64>(), n in 10usize..30, cuts in any::<bool>()) {
        let g = gen_gnp(n, 0.5, seed).unwrap();
        let cfg = SolveConfig { use_cuts: cuts, node_limit: Some(5_000), ..SolveConfig::default() };
        let a = solve(&g, &cfg);
        let b = solve(&g, &cfg);
        prop_assert_eq!((a.nodes, a.lower_bound, a.upper_bound, a.status), (b.nodes, b.lower_bound, b.upper_bound, b.status));
        prop_assert_eq!(a.incumbent, b.incumbent);
    }

    #[test]
    fn exported_models_accept_colorings((g, c) in graph_with_coloring(10), cuts in any::<bool>(), truncate in any::<bool>()) {
        let opts = ModelOptions {
            use_cuts: cuts,
            i_max_mode: if truncate { IMaxMode::Truncated } else { IMaxMode::Full },
            ..ModelOptions::default()
        };
        let m = build_model(&g, opts).unwrap();
        let sol = solution_from_coloring(&m, &c).unwrap();
        let back = parse_sol(&write_sol(&sol)).unwrap();
        let report = verify_solution(&m, &back, 1e-6).unwrap();
        prop_assert_eq!(report.colors, c.num_colors());

        let lp = parse_lp(&write_lp(&m)).unwrap();
        let values = common::solution_values(&g, c.colors());
        prop_assert!(lp.violated_rows(&values, 1e-6).is_empty());
        prop_assert!((lp.objective_value(&values) - c.num_colors() as f64).abs() <= 1e-6);
        prop_assert_eq!(lp.rows.len(), m.constraints().len());
    }

    #[test]
    fn lp_and_mps_agree(g in graph_strategy(9), cuts in any::<bool>()) {
        let opts = ModelOptions { use_cuts: cuts, ..ModelOptions::default() };
        let m = build_model(&g, opts).unwrap();
        prop_assert_eq!(parse_lp(&write_lp(&m)).unwrap(), parse_mps(&write_mps(&m)).unwrap());
    }
}

#[test]
fn tangent_envelope_peaks_on_the_diagonal() {
    let n = 60;
    for d in 0..n {
        let dr = Rational::from_integer(d as i64);
        let best = (0..n).map(|i| tangent_value(i, dr)).max().unwrap();
        assert_eq!(best, tangent_value(d, dr));
        assert_eq!(best, Rational::new(1, 1 + d as i64));
    }
}

#[test]
fn cut_rows_tighten_every_vertex_of_the_empty_graph() {
    let m = build_model(&Graph::empty(4), with_cuts()).unwrap();
    let stats = m.stats();
    assert_eq!((stats.pair_vars, stats.triangle, stats.cut), (6, 12, 4));
    // every vertex may share its color with all three others
    for row in m.constraints().iter().filter(|r| r.tag() == ConstraintTag::SimpleCut) {
        assert_eq!(row.rhs, Rational::from_integer(3));
    }
}

#[test]
fn oracle_solver_and_formulation_agree_on_a_fixed_instance() {
    let g = gen_gnp(10, 0.5, 1).unwrap();
    let chi = chromatic_number(&g).chromatic_number;
    assert_eq!(chi, common::brute_chromatic(&g));
    assert_eq!(solve(&g, &SolveConfig::default()).upper_bound, chi);
    assert_eq!(solve(&g, &SolveConfig { use_cuts: true, ..SolveConfig::default() }).upper_bound, chi);
    let m = build_model(&g, ModelOptions::default()).unwrap();
    let best = common::proper_partitions(&g)
        .iter()
        .map(|c| m.fractional_objective(&common::assignment(m.pairs(), c)).unwrap())
        .min()
        .unwrap();
    assert_eq!(best, BigRational::from_integer(BigInt::from(chi)));
}
