//! Exit criteria. Each criterion prints one `PASS`/`FAIL` line; run with
//! `cargo test -p dlab-cli --test acceptance -- --nocapture` to see them.
//! All comparisons are exact: weights are fixed-point integers.

use std::path::PathBuf;
use std::process::Command;

use dlab_core::{
    bellman_ford, build_tree_matrix, compare, enumerate_distances, extract_path, fixtures,
    generate_graph, run, run_suite, EndpointPolicy, GraphSpec, SelectionStrategy, VertexId,
    VertexSet, Weight,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
/// Exit code, stdout, stderr.
type Captured = (Option<i32>, Vec<u8>, Vec<u8>);

fn v(i: usize) -> VertexId {
    VertexId::new(i)
}

fn units(values: &[u64]) -> Vec<Weight> {
    values.iter().map(|&u| Weight::from_units(u)).collect()
}

fn set(ids: &[usize]) -> VertexSet {
    ids.iter().map(|&i| v(i)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ac1_paper_distances() -> Outcome {
    let g = fixtures::paper8();
    let expected = units(&[0, 1, 2, 4, 3, 6, 10, 8]);
    for strategy in SelectionStrategy::ALL {
        let got = run(&g, v(1), None, false, strategy).map_err(|e| e.to_string())?.final_distances;
        ensure!(got == expected, "{strategy}: {got:?}");
    }
    let bf = bellman_ford(&g, v(1)).map_err(|e| e.to_string())?.distances;
    ensure!(bf == expected, "bellman-ford: {bf:?}");
    Ok(format!("all four give {expected:?}"))
}

fn ac2_fig2_golden_trace() -> Outcome {
    let g = fixtures::paper8_tora();
    let trace = run(&g, v(1), None, false, SelectionStrategy::SingleMin).map_err(|e| e.to_string())?;
    let expected: [(u64, Option<usize>); 8] = [
        (0, None),
        (1, Some(1)),
        (2, Some(2)),
        (4, Some(3)),
        (3, Some(2)),
        (6, Some(3)),
        (10, Some(5)),
        (8, Some(6)),
    ];
    for (i, (value, pred)) in expected.into_iter().enumerate() {
        let label = trace.final_labels.get(v(i + 1));
        ensure!(
            label.value == Weight::from_units(value) && label.predecessor() == pred.map(v),
            "vertex {}: [{}, {:?}]",
            i + 1,
            label.value,
            label.predecessor()
        );
        ensure!(label.is_permanent(), "vertex {} not permanent", i + 1);
    }
    ensure!(
        trace.rounds_count_incl_source == 8,
        "rounds incl. source = {}",
        trace.rounds_count_incl_source
    );
    Ok("final table matches, 8 iterations counting the source".into())
}

fn ac3_five_iteration_claim() -> Outcome {
    let g = fixtures::paper8();
    let stable = run(&g, v(1), Some(v(8)), false, SelectionStrategy::StableBatch).map_err(|e| e.to_string())?;
    let seq: Vec<VertexSet> = stable.rounds.iter().map(|r| r.newly_permanent.clone()).collect();
    let expected = vec![set(&[2]), set(&[3]), set(&[5]), set(&[4, 6]), set(&[7, 8])];
    ensure!(seq == expected, "stablebatch sequence {seq:?}");
    ensure!(stable.rounds_count == 5, "stablebatch rounds {}", stable.rounds_count);
    let tie = run(&g, v(1), Some(v(8)), false, SelectionStrategy::TieBatch).map_err(|e| e.to_string())?;
    let single = run(&g, v(1), Some(v(8)), false, SelectionStrategy::SingleMin).map_err(|e| e.to_string())?;
    ensure!(
        tie.rounds_count <= single.rounds_count,
        "tiebatch {} > singlemin {}",
        tie.rounds_count,
        single.rounds_count
    );
    Ok(format!(
        "stablebatch 5 rounds; literal tiebatch {} rounds vs singlemin {}",
        tie.rounds_count, single.rounds_count
    ))
}

fn ac4_tree_matrix_and_route() -> Outcome {
    let g = fixtures::paper8_tora();
    let trace = run(&g, v(1), None, false, SelectionStrategy::SingleMin).map_err(|e| e.to_string())?;
    let t = build_tree_matrix(&g, &trace).map_err(|e| e.to_string())?;
    let got: Vec<(usize, usize, Weight)> =
        t.nonzeros().into_iter().map(|(i, j, w)| (i.get(), j.get(), w)).collect();
    let expected: Vec<(usize, usize, Weight)> = [(1, 2, 1), (2, 3, 1), (2, 5, 2), (3, 4, 2), (3, 6, 4), (5, 7, 7), (6, 8, 2)]
        .into_iter()
        .map(|(i, j, w)| (i, j, Weight::from_units(w)))
        .collect();
    ensure!(got == expected, "nonzeros {got:?}");
    let path = extract_path(&t, v(8)).map_err(|e| e.to_string())?;
    ensure!(path.vertices == vec![v(1), v(2), v(3), v(6), v(8)], "route {path}");
    ensure!(path.total == Weight::from_units(8), "total {}", path.total);
    Ok(format!("T matches, route {path}"))
}

/// 3 sizes x 3 densities x 3 tie biases x 40 graphs = 1080 graphs.
fn fuzz_specs() -> Vec<GraphSpec> {
    let mut specs = Vec::new();
    let mut seed = 1000;
    for n in [4, 7, 10] {
        for density in [0.3, 0.7, 1.0] {
            for tie_bias in [0.0, 0.9, 1.0] {
                specs.push(GraphSpec::new(n, density, (1, 9), tie_bias, seed));
                seed += 1;
            }
        }
    }
    specs
}

const FUZZ_GRAPHS_PER_SPEC: u64 = 40;

fn ac5_oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for spec in fuzz_specs() {
        for index in 0..FUZZ_GRAPHS_PER_SPEC {
            let g = generate_graph(&spec, index).map_err(|e| e.to_string())?;
            let bf = bellman_ford(&g, v(1)).map_err(|e| e.to_string())?.distances;
            let en = enumerate_distances(&g, v(1)).map_err(|e| e.to_string())?.distances;
            ensure!(bf == en, "oracles disagree on {spec:?} #{index}");
            for strategy in [SelectionStrategy::SingleMin, SelectionStrategy::TieBatch] {
                let got = run(&g, v(1), None, false, strategy).map_err(|e| e.to_string())?.final_distances;
                ensure!(got == bf, "{strategy} mismatch on {spec:?} #{index}");
            }
            checked += 1;
        }
    }
    ensure!(checked >= 1000, "only {checked} graphs");
    Ok(format!("{checked} graphs, zero mismatches"))
}

fn ac6_iteration_reduction() -> Outcome {
    let mut graphs = 0;
    for spec in fuzz_specs() {
        let mut strict = 0;
        for index in 0..FUZZ_GRAPHS_PER_SPEC {
            let g = generate_graph(&spec, index).map_err(|e| e.to_string())?;
            let single = run(&g, v(1), None, false, SelectionStrategy::SingleMin).map_err(|e| e.to_string())?;
            let tie = run(&g, v(1), None, false, SelectionStrategy::TieBatch).map_err(|e| e.to_string())?;
            ensure!(
                tie.rounds_count <= single.rounds_count,
                "tiebatch {} > singlemin {} on {spec:?} #{index}",
                tie.rounds_count,
                single.rounds_count
            );
            let batched: usize = tie.batch_sizes().iter().sum();
            ensure!(
                batched == tie.settled_count() - 1,
                "batch sizes {batched} vs settled {} on {spec:?} #{index}",
                tie.settled_count() - 1
            );
            if tie.rounds_count < single.rounds_count {
                strict += 1;
            }
            graphs += 1;
        }
        if spec.tie_bias == 1.0 && spec.density == 1.0 && spec.n >= 3 {
            ensure!(strict > 0, "no strict reduction in batch {spec:?}");
        }
    }
    Ok(format!("{graphs} graphs, tiebatch never slower, every tie-saturated batch shows a strict reduction"))
}

fn ac7_round_bound() -> Outcome {
    for spec in fuzz_specs() {
        for index in 0..FUZZ_GRAPHS_PER_SPEC {
            let g = generate_graph(&spec, index).map_err(|e| e.to_string())?;
            for strategy in [SelectionStrategy::SingleMin, SelectionStrategy::TieBatch] {
                let trace = run(&g, v(1), None, false, strategy).map_err(|e| e.to_string())?;
                ensure!(
                    trace.rounds_count < g.n(),
                    "{strategy} took {} rounds on n={}",
                    trace.rounds_count,
                    g.n()
                );
            }
        }
    }
    Ok("rounds <= n - 1 everywhere".into())
}

fn ac8_stable_batch_unsoundness() -> Outcome {
    let g = fixtures::counterexample4();
    let stable = run(&g, v(1), None, false, SelectionStrategy::StableBatch).map_err(|e| e.to_string())?;
    ensure!(stable.distance(v(3)) == Weight::from_units(5), "stablebatch gives {}", stable.distance(v(3)));
    let bf = bellman_ford(&g, v(1)).map_err(|e| e.to_string())?.distances[2];
    let en = enumerate_distances(&g, v(1)).map_err(|e| e.to_string())?.distances[2];
    ensure!(bf == Weight::from_units(3) && en == Weight::from_units(3), "oracles give {bf} / {en}");
    let record = compare(&g, v(1), None).map_err(|e| e.to_string())?;
    ensure!(record.stable_batch_unsound, "record not flagged");
    Ok("stablebatch 5 vs oracles 3, flagged unsound".into())
}

fn dlab(args: &[&str]) -> Result<Captured, String> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    let o = Command::new(env!("CARGO_BIN_EXE_dlab"))
        .args(args)
        .current_dir(root)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((o.status.code(), o.stdout, o.stderr))
}

fn ac9_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out_a = dir.path().join("a.json");
    let out_b = dir.path().join("b.json");
    let bench = |out: &PathBuf| {
        vec![
            "bench".to_string(), "--nodes".into(), "8".into(), "--density".into(), "0.5".into(),
            "--graphs".into(), "50".into(), "--seed".into(), "7".into(), "--tie-bias".into(),
            "0.9".into(), "--weights".into(), "1:9".into(), "--out".into(), out.display().to_string(),
        ]
    };
    let invocations: Vec<Vec<String>> = [
        "trace fixtures/paper8_tora.mat --source 1 --algo classic --format text",
        "trace fixtures/paper8.mat --source 1 --algo stablebatch --format structured",
        "trace fixtures/tie4.edges --source 1 --target 4 --algo tiebatch --stop-at-target",
        "path fixtures/paper8_tora.mat --source 1 --target 8 --algo classic",
        "compare fixtures/paper8.mat --source 1 --target 8",
        "compare fixtures/counterexample4.edges --source 1 --format structured",
        "oracle fixtures/paper8.mat --source 1",
    ]
    .iter()
    .map(|s| s.split_whitespace().map(String::from).collect())
    .collect();
    for args in &invocations {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = dlab(&args)?;
        let second = dlab(&args)?;
        ensure!(first.0 == Some(0), "`{}` exited {:?}", args.join(" "), first.0);
        ensure!(first == second, "`{}` differs between runs", args.join(" "));
    }
    for out in [&out_a, &out_b] {
        let args = bench(out);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        ensure!(dlab(&args)?.0 == Some(0), "bench failed");
    }
    let a = std::fs::read(&out_a).map_err(|e| e.to_string())?;
    let b = std::fs::read(&out_b).map_err(|e| e.to_string())?;
    ensure!(a == b, "bench reports differ");

    let specs = fuzz_specs();
    let first = run_suite(&specs, 5, EndpointPolicy::FirstToLast).map_err(|e| e.to_string())?.without_timings();
    let second = run_suite(&specs, 5, EndpointPolicy::FirstToLast).map_err(|e| e.to_string())?.without_timings();
    ensure!(
        first.to_json().map_err(|e| e.to_string())? == second.to_json().map_err(|e| e.to_string())?,
        "run_suite JSON differs"
    );
    ensure!(
        first.to_csv().map_err(|e| e.to_string())? == second.to_csv().map_err(|e| e.to_string())?,
        "run_suite CSV differs"
    );
    Ok(format!("{} CLI invocations, bench and run_suite byte-identical", invocations.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("AC1 paper distances", ac1_paper_distances),
        ("AC2 golden classic trace", ac2_fig2_golden_trace),
        ("AC3 five-round stable batching", ac3_five_iteration_claim),
        ("AC4 tree matrix and route", ac4_tree_matrix_and_route),
        ("AC5 oracle equivalence", ac5_oracle_equivalence),
        ("AC6 iteration reduction", ac6_iteration_reduction),
        ("AC7 n-1 round bound", ac7_round_bound),
        ("AC8 stable batching unsoundness", ac8_stable_batch_unsoundness),
        ("AC9 determinism", ac9_determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
