mod common;

use std::sync::Arc;

use smk_core::algorithms::{dla_query_bound, rla_query_bound, EXHAUSTIVE_LIMIT};
use smk_core::data::{
    gen_er, gen_random_submodular_instance, random_instance, GeneratorSpec, ObjectiveKind,
};
use smk_core::objectives::{MaxCut, Modular, WeightedGraph};
use smk_core::{
    density_greedy_baseline, dla, exhaustive, la, lar, rla, AlgParams, Algorithm, Error, Instance,
    RunResult,
};

const ALL_RUNNABLE: [Algorithm; 5] = [
    Algorithm::La,
    Algorithm::Lar,
    Algorithm::Dla,
    Algorithm::Rla,
    Algorithm::Baseline,
];

fn modular(weights: &[f64], costs: &[f64], budget: f64) -> Instance {
    Instance::new(
        Arc::new(Modular::new(weights.to_vec())),
        costs.to_vec(),
        budget,
    )
    .unwrap()
}

fn triangle(budget: f64) -> Instance {
    let g = WeightedGraph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
    Instance::new(Arc::new(MaxCut::new(Arc::new(g))), vec![1.0; 3], budget).unwrap()
}

fn er_instance(n: usize, seed: u64, fraction: f64) -> Instance {
    let graph = Arc::new(gen_er(&GeneratorSpec::er(n, 0.2, seed)).unwrap());
    let costs = smk_core::data::assign_costs(
        &smk_core::data::Source::Graph(graph.clone()),
        &smk_core::data::CostModel::Uniform01 { seed },
    )
    .unwrap();
    let budget = fraction * costs.iter().sum::<f64>();
    Instance::new(Arc::new(MaxCut::new(graph)), costs, budget).unwrap()
}

/// Solution invariants every run must satisfy.
fn check_run(inst: &Instance, run: &RunResult) {
    assert!(
        inst.feasible(&run.solution),
        "{}: infeasible",
        run.algorithm
    );
    let mut sorted = run.solution.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(
        sorted.len(),
        run.solution.len(),
        "{}: duplicates",
        run.algorithm
    );
    let fresh = inst.objective().value(&run.solution);
    assert!(
        common::close(run.value, fresh, 1e-9),
        "{}: reported {} fresh {fresh}",
        run.algorithm,
        run.value
    );
    assert!(common::close(
        run.cost,
        inst.total_cost(&run.solution),
        1e-9
    ));
}

#[test]
fn zero_objective() {
    let inst = Instance::new(Arc::new(Modular::zero(5)), vec![0.3; 5], 1.0).unwrap();
    for alg in ALL_RUNNABLE {
        let run = alg.run(&inst, &AlgParams::default()).unwrap();
        assert_eq!(run.value, 0.0, "{alg}");
        check_run(&inst, &run);
    }
    assert!(density_greedy_baseline(&inst).unwrap().solution.is_empty());
    // the zero-value guard skips both threshold phases
    assert_eq!(
        dla(&inst, &AlgParams::default()).unwrap().threshold_passes,
        0
    );
    assert_eq!(
        rla(&inst, &AlgParams::default()).unwrap().threshold_passes,
        0
    );
}

#[test]
fn single_element_at_budget() {
    let inst = modular(&[2.5], &[4.0], 4.0);
    for alg in ALL_RUNNABLE {
        for seed in 0..5 {
            let run = alg
                .run(&inst, &AlgParams::default().with_seed(seed))
                .unwrap();
            assert_eq!(run.solution, vec![0], "{alg}");
            assert_eq!(run.value, 2.5);
        }
    }
}

#[test]
fn empty_instance_runs() {
    let inst = Instance::new(Arc::new(Modular::zero(0)), vec![], 1.0).unwrap();
    for alg in Algorithm::ALL {
        let run = alg.run(&inst, &AlgParams::default()).unwrap();
        assert!(run.solution.is_empty());
        assert_eq!(run.value, 0.0);
    }
}

#[test]
fn lar_degenerate_parameters_admit_everything_light() {
    let weights = [1.0, 2.0, 3.0, 4.0, 5.0];
    let costs = [1.0, 1.0, 1.0, 1.0, 4.0];
    let inst = modular(&weights, &costs, 6.0);
    let params = AlgParams {
        p: 1.0,
        alpha: 0.0,
        ..AlgParams::default()
    };
    let run = lar(&inst, &params).unwrap();
    // light set is {0, 1, 2, 3}; all pass, suffix of cost <= 6 is everything
    assert_eq!(run.candidates_inspected, 4);
    assert_eq!(run.solution, vec![0, 1, 2, 3]);
    assert_eq!(run.value, 10.0);
}

#[test]
fn la_known_run() {
    // Light elements 0..3 all have density 1 and tie between X and Y, so X
    // takes every one; element 4 is heavy and only enters as e_max.
    let inst = modular(&[1.0, 1.0, 1.0, 1.0, 3.5], &[1.0, 1.0, 1.0, 1.0, 3.0], 4.0);
    let run = la(&inst).unwrap();
    assert_eq!(run.solution, vec![0, 1, 2, 3]);
    assert_eq!(run.value, 4.0);
    // 5 singletons + 2 gains per light element; X is feasible as a whole
    assert_eq!(run.query_count, 5 + 2 * 4);

    let inst = modular(&[1.0, 1.0, 1.0, 1.0, 4.5], &[1.0, 1.0, 1.0, 1.0, 3.0], 4.0);
    assert_eq!(la(&inst).unwrap().solution, vec![4]);
}

#[test]
fn baseline_is_exact_on_modular_examples() {
    let cases: [(&[f64], &[f64], f64); 3] = [
        (&[4.0, 3.0, 2.0, 1.0], &[2.0, 1.0, 1.0, 1.0], 3.0),
        (&[1.0, 1.0, 1.0, 5.0], &[1.0, 1.0, 1.0, 2.0], 3.0),
        (&[0.5, 2.0, 1.0, 3.0, 0.1], &[0.5, 1.0, 1.0, 1.5, 0.2], 2.5),
    ];
    for (w, c, b) in cases {
        let inst = modular(w, c, b);
        let run = density_greedy_baseline(&inst).unwrap();
        let exact = exhaustive(&inst).unwrap();
        assert_eq!(run.value, exact.opt_value, "{w:?}");
        // picks follow decreasing density
        let dens: Vec<f64> = run.solution.iter().map(|&e| w[e] / c[e]).collect();
        assert!(dens.windows(2).all(|p| p[0] >= p[1]), "{dens:?}");
    }
}

#[test]
fn exhaustive_examples() {
    let exact = exhaustive(&triangle(10.0)).unwrap();
    assert_eq!(exact.opt_set, vec![0]);
    assert_eq!(exact.opt_value, 2.0);
    assert_eq!(exact.r, Some(0));

    let empty = Instance::new(Arc::new(Modular::zero(0)), vec![], 1.0).unwrap();
    let exact = exhaustive(&empty).unwrap();
    assert!(exact.opt_set.is_empty());
    assert_eq!(exact.opt_value, 0.0);
    assert_eq!(exact.r, None);

    assert_eq!(
        exhaustive(&modular(&[0.7], &[1.0], 1.0)).unwrap().opt_set,
        vec![0]
    );
    assert!(exhaustive(&modular(&[0.0], &[1.0], 1.0))
        .unwrap()
        .opt_set
        .is_empty());

    let exact = exhaustive(&modular(&[1.0, 1.0, 1.0], &[0.5, 2.0, 2.0], 5.0)).unwrap();
    assert_eq!(exact.opt_set, vec![0, 1, 2]);
    assert_eq!(exact.r, Some(1));

    let big = Instance::new(Arc::new(Modular::zero(26)), vec![1.0; 26], 5.0).unwrap();
    assert!(matches!(
        exhaustive(&big),
        Err(Error::TooLarge {
            n: 26,
            limit: EXHAUSTIVE_LIMIT
        })
    ));
}

#[test]
fn exhaustive_dominates_brute_force_scan() {
    for seed in 0..10 {
        let inst = gen_random_submodular_instance(9, seed).unwrap();
        let exact = exhaustive(&inst).unwrap();
        let n = inst.n();
        let mut best = 0.0f64;
        for mask in 0u32..(1 << n) {
            let s: Vec<_> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if inst.feasible(&s) {
                best = best.max(inst.objective().value(&s));
            }
        }
        assert!(common::close(exact.opt_value, best, 1e-12));
        assert!(inst.feasible(&exact.opt_set));
    }
}

#[test]
fn ratios_on_small_random_instances() {
    let params = AlgParams::default();
    for (i, kind) in ObjectiveKind::ALL.into_iter().cycle().take(60).enumerate() {
        let inst = random_instance(kind, 4 + i % 9, 1000 + i as u64).unwrap();
        let exact = exhaustive(&inst).unwrap();
        let la_run = la(&inst).unwrap();
        let dla_run = dla(&inst, &params).unwrap();
        let base = density_greedy_baseline(&inst).unwrap();
        for run in [&la_run, &dla_run, &base] {
            check_run(&inst, run);
            assert!(run.value <= exact.opt_value + 1e-9);
        }
        assert!(
            la_run.value >= exact.opt_value / 19.0 - 1e-12,
            "{kind} #{i}"
        );
        assert!(
            dla_run.value >= exact.opt_value / 6.1 - 1e-12,
            "{kind} #{i}"
        );
        assert!(dla_run.value >= la_run.value);
        if inst.n() > 0 {
            assert!(base.value >= exact.opt_value / inst.n() as f64 - 1e-12);
        }
        for seed in 0..5 {
            let p = params.with_seed(seed);
            let lar_run = lar(&inst, &p).unwrap();
            let rla_run = rla(&inst, &p).unwrap();
            check_run(&inst, &lar_run);
            check_run(&inst, &rla_run);
            assert!(rla_run.value >= lar_run.value);
        }
    }
}

#[test]
fn la_query_bound() {
    for seed in 0..20 {
        let inst = er_instance(60, seed, 0.1);
        let run = la(&inst).unwrap();
        assert!(run.query_count <= 3 * inst.n() as u64 + 4);
    }
}

#[test]
fn threshold_query_bounds() {
    for n in [100, 500] {
        for eps in [0.1, 0.3] {
            let inst = er_instance(n, 7, 0.06);
            let params = AlgParams::with_epsilon(eps);
            let d = dla(&inst, &params).unwrap();
            assert!(
                d.query_count <= dla_query_bound(inst.n(), eps),
                "dla n={n} eps={eps}"
            );
            let r = rla(&inst, &params).unwrap();
            assert!(
                r.query_count <= rla_query_bound(inst.n(), eps),
                "rla n={n} eps={eps}"
            );
            check_run(&inst, &d);
            check_run(&inst, &r);
        }
    }
}

#[test]
fn query_counts_per_element_stay_bounded() {
    // count / n <= C · ln(1/eps) / eps with one C for every n
    let eps: f64 = 0.1;
    let scale = (1.0 / eps).ln() / eps;
    for alg in [Algorithm::Dla, Algorithm::Rla] {
        let mut per: Vec<f64> = Vec::new();
        for n in [100, 200, 400, 800] {
            let inst = er_instance(n, 3, 0.06);
            let run = alg.run(&inst, &AlgParams::with_epsilon(eps)).unwrap();
            per.push(run.query_count as f64 / inst.n() as f64 / scale);
        }
        let max = per.iter().cloned().fold(0.0, f64::max);
        assert!(max <= 250.0, "{alg}: {per:?}");
    }
}

fn expected_dla_passes(eps: f64) -> usize {
    let e = eps / 14.0;
    let x = (19.0 / (e * (1.0 - e))).ln() / -(1.0 - e).ln();
    x.floor() as usize + 1
}

#[test]
fn dla_pass_count_follows_threshold_schedule() {
    for eps in [0.1, 0.3, 0.5] {
        let inst = er_instance(40, 11, 0.2);
        let run = dla(&inst, &AlgParams::with_epsilon(eps)).unwrap();
        let expect = expected_dla_passes(eps);
        assert!(
            run.threshold_passes.abs_diff(expect) <= 1,
            "eps={eps}: {} vs {expect}",
            run.threshold_passes
        );
    }
    assert_eq!(expected_dla_passes(0.1), 1102);
}

#[test]
fn seed_determinism() {
    let inst = er_instance(80, 5, 0.08);
    let mut outputs = std::collections::HashSet::new();
    for seed in 0..50 {
        let p = AlgParams::default().with_seed(seed);
        for alg in [Algorithm::Lar, Algorithm::Rla] {
            let a = alg.run(&inst, &p).unwrap();
            let b = alg.run(&inst, &p).unwrap();
            assert_eq!(a.solution, b.solution);
            assert_eq!(a.value.to_bits(), b.value.to_bits());
            assert_eq!(a.query_count, b.query_count);
            outputs.insert((alg, a.solution));
        }
    }
    // different seeds do explore different outputs
    assert!(outputs.len() > 2);
}

#[test]
fn deterministic_algorithms_repeat() {
    let inst = er_instance(80, 6, 0.08);
    for alg in [Algorithm::La, Algorithm::Dla, Algorithm::Baseline] {
        let a = alg.run(&inst, &AlgParams::default()).unwrap();
        let b = alg.run(&inst, &AlgParams::default().with_seed(99)).unwrap();
        assert_eq!((a.solution, a.query_count), (b.solution, b.query_count));
    }
}

#[test]
fn rla_coin_is_fair() {
    let inst = er_instance(60, 8, 0.3);
    let (mut recorded, mut admitted) = (0usize, 0usize);
    for seed in 0..1000 {
        let run = rla(&inst, &AlgParams::default().with_seed(seed)).unwrap();
        recorded += run.candidates_inspected;
        admitted += run.admitted;
    }
    let n = recorded as f64;
    let z = (admitted as f64 - n / 2.0).abs() / (n / 4.0).sqrt();
    assert!(recorded > 1000, "too few coin flips: {recorded}");
    assert!(z <= 3.29, "z = {z}");
}

#[test]
fn invalid_params_are_rejected() {
    let inst = triangle(2.0);
    let bad = AlgParams::with_epsilon(1.5);
    assert!(dla(&inst, &bad).is_err());
    assert!(rla(&inst, &bad).is_err());
    assert!(lar(
        &inst,
        &AlgParams {
            p: 0.0,
            ..AlgParams::default()
        }
    )
    .is_err());
}
