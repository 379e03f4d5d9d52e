//! Acceptance gate. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits non-zero if any criterion fails.
//!
//! Pass criterion numbers as arguments to run a subset. Set `UPDATE_GOLDEN=1`
//! to rewrite the determinism digests instead of checking them.

mod support;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use sha2::{Digest, Sha256};

use slh::instances::{
    flower_snark, generalized_petersen, random_cubic, random_permutation, relabel_random, sheehan,
    Rng,
};
use slh::io::{
    parse_edge_list, parse_tsplib_hcp, parse_tsplib_hcp_file, read_tour, read_trace,
    write_edge_list, write_tour, write_trace, write_tsplib_hcp,
};
use slh::metrics::{distance_report, find_improving_generator_move, Thirds};
use slh::moves::MoveKind;
use slh::oracle::{count_hamiltonian_cycles, has_hamiltonian_path, is_hamiltonian, PathSearch};
use slh::solver::TraceEvent;
use slh::{
    solve, verify_hamiltonian_cycle, CircleOrdering, Cycle, Generator, Graph, SolveResult,
    SolverConfig, Verdict,
};
use support::{
    check_move_contract, connected_graphs, count_gaps, orderings_up_to_symmetry, random_graph,
    to_graph,
};

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn quiet() -> SolverConfig {
    SolverConfig {
        record_trace: false,
        ..SolverConfig::default()
    }
}

fn solved_and_verified(g: &Graph, r: &SolveResult) -> bool {
    r.verdict
        .cycle()
        .is_some_and(|c| verify_hamiltonian_cycle(g, c.as_slice()))
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

/// Solver verdict agrees with exhaustive search on every connected graph with
/// at most 8 vertices and minimum degree 2, from the identity arrangement and
/// from two seeded random ones.
fn oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let (mut graphs, mut hamiltonian, mut runs, mut agree) = (0usize, 0usize, 0usize, 0usize);
    let mut bad = Vec::new();
    for n in 3..=8 {
        for adj in connected_graphs(n) {
            if adj.iter().any(|m| m.count_ones() < 2) {
                continue;
            }
            let g = to_graph(&adj);
            let count = count_hamiltonian_cycles(&g, u64::MAX).expect("unbounded search completes");
            graphs += 1;
            hamiltonian += (count > 0) as usize;
            let starts = [
                None,
                Some(random_permutation(n, 2 * graphs as u64)),
                Some(random_permutation(n, 2 * graphs as u64 + 1)),
            ];
            for init in &starts {
                let r = solve(&g, &quiet(), init.as_deref()).expect("valid input");
                runs += 1;
                if solved_and_verified(&g, &r) == (count > 0) {
                    agree += 1;
                } else if bad.len() < 3 {
                    bad.push(format!("{:?} from {init:?}", g.edges()));
                }
            }
        }
    }
    let el = t.elapsed();
    outcome(
        agree == runs && el < Duration::from_secs(600),
        format!(
            "{agree}/{runs} runs agree over {graphs} graphs ({hamiltonian} Hamiltonian) in {}{}",
            secs(el),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; disagree on {bad:?}")
            }
        ),
    )
}

/// Scrambled GP(n,2) instances are solved; the reached stage is within one of
/// the published stage; GP(9,2) and GP(15,2) have exactly three cycles.
fn petersen_family() -> Outcome {
    let published = [(39, 1u8), (45, 1), (51, 1), (63, 1), (123, 2), (243, 3)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, stage) in published {
        let (g, _) = relabel_random(&generalized_petersen(n, 2).unwrap(), n as u64);
        let t = Instant::now();
        let r = solve(&g, &quiet(), None).unwrap();
        let el = t.elapsed();
        let good = solved_and_verified(&g, &r)
            && r.stats.stage_reached.abs_diff(stage) <= 1
            && (n != 243 || el < Duration::from_secs(7200));
        ok &= good;
        parts.push(format!(
            "GP({n},2) {} stage {} (published {stage}) {}",
            r.verdict.label(),
            r.stats.stage_reached,
            secs(el)
        ));
    }
    for n in [9, 15] {
        let c = count_hamiltonian_cycles(&generalized_petersen(n, 2).unwrap(), u64::MAX);
        ok &= c == Some(3);
        parts.push(format!("GP({n},2) has {c:?} cycles"));
    }
    outcome(ok, parts.join("; "))
}

/// Flower snarks are reported likely non-Hamiltonian; small ones are certified
/// cycle-free yet traceable by the oracle.
fn flower_snarks() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in [5, 15] {
        let g = flower_snark(k).unwrap();
        let t = Instant::now();
        let r = solve(&g, &quiet(), None).unwrap();
        let el = t.elapsed();
        ok &= r.verdict == Verdict::LikelyNonHamiltonian
            && (k != 15 || el < Duration::from_secs(1800));
        parts.push(format!(
            "J{k} {} stage {} {}",
            r.verdict.label(),
            r.stats.stage_reached,
            secs(el)
        ));
    }
    for k in [5, 7] {
        let g = flower_snark(k).unwrap();
        let c = count_hamiltonian_cycles(&g, u64::MAX);
        let path = match has_hamiltonian_path(&g, u64::MAX) {
            PathSearch::Yes(p) => {
                p.len() == g.vertex_count() && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
            }
            _ => false,
        };
        ok &= c == Some(0) && path;
        parts.push(format!("J{k}: {c:?} cycles, Hamiltonian path {path}"));
    }
    outcome(ok, parts.join("; "))
}

/// The uniquely Hamiltonian family: oracle count 1 on small members and the
/// solver recovers the planted cycle on large scrambled ones.
fn sheehan_family() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [10, 12, 14] {
        let c = count_hamiltonian_cycles(&sheehan(n).unwrap(), u64::MAX);
        ok &= c == Some(1);
        parts.push(format!("n={n}: {c:?} cycles"));
    }
    for n in [50, 60, 70, 80] {
        let (g, perm) = relabel_random(&sheehan(n).unwrap(), 1000 + n as u64);
        let planted = Cycle::new(perm.clone()).unwrap().normalized();
        let t = Instant::now();
        let r = solve(&g, &quiet(), None).unwrap();
        let el = t.elapsed();
        let same = r.verdict.cycle().map(|c| c.normalized()) == Some(planted);
        ok &= same && solved_and_verified(&g, &r) && el < Duration::from_secs(300);
        parts.push(format!(
            "n={n}: unique cycle {} stage {} {}",
            if same { "found" } else { "missed" },
            r.stats.stage_reached,
            secs(el)
        ));
    }
    outcome(ok, parts.join("; "))
}

/// Seeded uniform cubic graphs: every Hamiltonian instance is solved.
fn random_cubic_success() -> Outcome {
    let t = Instant::now();
    let (mut solved, mut non_ham, mut missed, mut unknown) = (0, 0, 0, 0);
    for seed in 0..1000 {
        let g = random_cubic(100, seed).unwrap();
        let r = solve(&g, &quiet(), None).unwrap();
        if solved_and_verified(&g, &r) {
            solved += 1;
            continue;
        }
        match is_hamiltonian(&g, 200_000_000) {
            Some(true) => missed += 1,
            Some(false) => non_ham += 1,
            None => unknown += 1,
        }
    }
    let small = format!(
        "n=100: {solved}/{} Hamiltonian solved, {non_ham} non-Hamiltonian, {unknown} undecided ({})",
        solved + missed,
        secs(t.elapsed())
    );
    let mut times = Vec::new();
    let mut big_solved = 0;
    for seed in 0..100 {
        let g = random_cubic(1000, 10_000 + seed).unwrap();
        let t = Instant::now();
        let r = solve(&g, &quiet(), None).unwrap();
        times.push(t.elapsed());
        big_solved += solved_and_verified(&g, &r) as usize;
    }
    times.sort();
    let median = (times[49] + times[50]) / 2;
    outcome(
        missed == 0 && unknown == 0 && big_solved == 100 && median < Duration::from_secs(5),
        format!(
            "{small}; n=1000: {big_solved}/100 solved, median {:.3}s",
            median.as_secs_f64()
        ),
    )
}

fn golden_fixtures() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut add = |name: &str, g: Graph| out.push((name.to_string(), g));
    add(
        "gp_39_2",
        relabel_random(&generalized_petersen(39, 2).unwrap(), 1).0,
    );
    add(
        "gp_45_2",
        relabel_random(&generalized_petersen(45, 2).unwrap(), 2).0,
    );
    add(
        "gp_123_2",
        relabel_random(&generalized_petersen(123, 2).unwrap(), 3).0,
    );
    add("gp_9_2", generalized_petersen(9, 2).unwrap());
    add("petersen", generalized_petersen(5, 2).unwrap());
    add("flower_5", flower_snark(5).unwrap());
    add("flower_7", flower_snark(7).unwrap());
    add("sheehan_12", sheehan(12).unwrap());
    add("sheehan_50", relabel_random(&sheehan(50).unwrap(), 4).0);
    add("cubic_100_s1", random_cubic(100, 1).unwrap());
    add("cubic_100_s2", random_cubic(100, 2).unwrap());
    add("cubic_200_s3", random_cubic(200, 3).unwrap());
    let text = std::fs::read_to_string(data_dir().join("alb1000_style.hcp")).unwrap();
    add("alb1000_style", parse_tsplib_hcp(&text).unwrap());
    add(
        "triangle",
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
    );
    let k4: Vec<_> = (0..4)
        .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
        .collect();
    add("k4", Graph::new(4, &k4).unwrap());
    add(
        "c5_shuffled",
        Graph::new(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap(),
    );
    add(
        "path_5",
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
    );
    add(
        "two_squares",
        Graph::new(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        )
        .unwrap(),
    );
    add(
        "bridged_triangles",
        Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap(),
    );
    let k34: Vec<_> = (0..3).flat_map(|u| (3..7).map(move |v| (u, v))).collect();
    add("k_3_4", Graph::new(7, &k34).unwrap());
    out
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
}

/// Byte content whose digest pins a run: verdict, final ordering, trace and tour.
fn run_bytes(g: &Graph) -> Vec<u8> {
    let r = solve(g, &SolverConfig::default(), None).unwrap();
    let mut out = serde_json::to_string(&r.verdict).unwrap();
    writeln!(out, "\n{:?}", r.final_ordering).unwrap();
    out.push_str(&write_trace(&r.trace));
    if let Some(c) = r.verdict.cycle() {
        out.push_str(&write_tour(c, "golden"));
    }
    out.into_bytes()
}

/// Three runs per fixture are byte-identical and match the recorded digest.
fn determinism() -> Outcome {
    let path = data_dir().join("golden_digests.txt");
    let mut lines = Vec::new();
    let mut unstable = Vec::new();
    for (name, g) in golden_fixtures() {
        let first = run_bytes(&g);
        if (0..2).any(|_| run_bytes(&g) != first) {
            unstable.push(name.clone());
        }
        let digest: String = Sha256::digest(&first)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        lines.push(format!("{name} {digest}"));
    }
    let current = lines.join("\n") + "\n";
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &current).unwrap();
        return outcome(
            unstable.is_empty(),
            format!("rewrote {} digests", lines.len()),
        );
    }
    let recorded = std::fs::read_to_string(&path).unwrap_or_default();
    let mismatched: Vec<&str> = current
        .lines()
        .filter(|l| !recorded.lines().any(|r| r == *l))
        .map(|l| l.split(' ').next().unwrap())
        .collect();
    outcome(
        unstable.is_empty() && mismatched.is_empty() && lines.len() == 20,
        format!(
            "{} fixtures, unstable {unstable:?}, differing from recorded digests {mismatched:?}",
            lines.len()
        ),
    )
}

/// Every move on every ordering of small connected graphs, plus random
/// mid-size pairs, respects its class bound and its predicted gap change.
fn move_contract() -> Outcome {
    let t = Instant::now();
    let mut checked = 0usize;
    let mut orderings = 0usize;
    let mut failure = None;
    'small: for n in 4..=7 {
        for adj in connected_graphs(n) {
            let g = to_graph(&adj);
            for seq in orderings_up_to_symmetry(n) {
                let o = CircleOrdering::new(&g, seq).unwrap();
                orderings += 1;
                match check_move_contract(&o) {
                    Ok(c) => checked += c,
                    Err(e) => {
                        failure = Some(e);
                        break 'small;
                    }
                }
            }
        }
    }
    let small = (orderings, checked);
    let mut rng = Rng::new(0xacce97);
    for i in 0..10_000u64 {
        if failure.is_some() {
            break;
        }
        let g = match i % 5 {
            0 => random_cubic(30, i).unwrap(),
            k => random_graph(30, [60, 100, 150, 250][k as usize - 1], &mut rng),
        };
        let mut seq: Vec<usize> = (0..30).collect();
        rng.shuffle(&mut seq);
        match check_move_contract(&CircleOrdering::new(&g, seq).unwrap()) {
            Ok(c) => checked += c,
            Err(e) => failure = Some(e),
        }
    }
    outcome(
        failure.is_none(),
        format!(
            "{} small orderings ({} moves), {} moves overall, {}{}",
            small.0,
            small.1,
            checked,
            secs(t.elapsed()),
            failure
                .map(|e| format!("; violation: {e}"))
                .unwrap_or_default()
        ),
    )
}

/// Chord sets of the n-cycle, one per orbit under the dihedral group when
/// `reduce` is set.
fn chord_sets(n: usize, reduce: bool) -> (Vec<(usize, usize)>, Vec<u32>) {
    let chords: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 2..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u == 0 && v == n - 1))
        .collect();
    let index: BTreeMap<(usize, usize), usize> =
        chords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let images: Vec<Vec<usize>> = (0..2 * n)
        .map(|s| {
            chords
                .iter()
                .map(|&(u, v)| {
                    let f = |x: usize| {
                        if s < n {
                            (x + s) % n
                        } else {
                            (s - n + n - x) % n
                        }
                    };
                    let (a, b) = (f(u), f(v));
                    index[&(a.min(b), a.max(b))]
                })
                .collect()
        })
        .collect();
    let all = 0..1u32 << chords.len();
    let sets = if reduce {
        all.filter(|&m| {
            images.iter().all(|img| {
                let mut t = 0u32;
                for (i, &j) in img.iter().enumerate() {
                    t |= (m >> i & 1) << j;
                }
                t >= m
            })
        })
        .collect()
    } else {
        all.collect()
    };
    (chords, sets)
}

/// From any non-Hamiltonian-aligned ordering some generator move gains a
/// common snake while adding at most one gap (two when there are none).
fn improving_move_sweep() -> Outcome {
    let t = Instant::now();
    let mut pairs = 0u64;
    let mut failures = Vec::new();
    for n in 4..=8 {
        let (chords, sets) = chord_sets(n, n == 8);
        let h = Cycle::new((0..n).collect()).unwrap();
        let on_h = |u: usize, v: usize| {
            let d = u.abs_diff(v);
            d == 1 || d == n - 1
        };
        let ords = orderings_up_to_symmetry(n);
        for &m in &sets {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend(
                (0..chords.len())
                    .filter(|&i| m >> i & 1 == 1)
                    .map(|i| chords[i]),
            );
            let g = Graph::new(n, &edges).unwrap();
            for seq in &ords {
                let common = (0..n).filter(|&i| on_h(seq[i], seq[(i + 1) % n])).count();
                if common == n {
                    continue;
                }
                pairs += 1;
                let o = CircleOrdering::new(&g, seq.clone()).unwrap();
                let gaps = count_gaps(&g, seq);
                let ok = match find_improving_generator_move(&o, &h) {
                    Ok(mv) => {
                        let after = &mv.result;
                        let c2 = (0..n)
                            .filter(|&i| on_h(after[i], after[(i + 1) % n]))
                            .count();
                        let g2 = count_gaps(&g, after);
                        let before_delta = Thirds((gaps + 3 * (n - common)) as i64);
                        let after_delta = Thirds((g2 + 3 * (n - c2)) as i64);
                        let need = if gaps > 0 { Thirds(2) } else { Thirds(1) };
                        c2 > common
                            && g2 <= gaps + if gaps > 0 { 1 } else { 2 }
                            && before_delta - after_delta >= need
                            && mv.after
                                == distance_report(
                                    &CircleOrdering::new(&g, after.clone()).unwrap(),
                                    &h,
                                )
                                .unwrap()
                    }
                    Err(_) => false,
                };
                if !ok && failures.len() < 3 {
                    failures.push(format!("n={n} chords={m:#x} ordering={seq:?}"));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{pairs} (graph, ordering) pairs in {}{}",
            secs(t.elapsed()),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failed on {failures:?}")
            }
        ),
    )
}

/// A tiny ordering budget on J15 stops with the budget flag raised and the
/// ordering list inside its cap.
fn budget_law() -> Outcome {
    let g = flower_snark(15).unwrap();
    let cfg = SolverConfig {
        budget_exponent: 1,
        ..quiet()
    };
    let r = solve(&g, &cfg, None).unwrap();
    let s = &r.stats;
    outcome(
        r.verdict == Verdict::LikelyNonHamiltonian
            && s.budget_exhausted
            && s.stop.is_budget()
            && s.peak_orderings_listed <= s.ordering_cap,
        format!(
            "{} stop {:?}, peak listed {} of cap {}",
            r.verdict.label(),
            s.stop,
            s.peak_orderings_listed,
            s.ordering_cap
        ),
    )
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..40).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::build(n, &edges).unwrap().graph
        })
    })
}

fn arb_cycle() -> impl Strategy<Value = Cycle> {
    (3usize..60)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|s| Cycle::new(s).unwrap())
}

fn arb_event() -> impl Strategy<Value = TraceEvent> {
    let generator = prop_oneof![
        (0usize..500, 0usize..500, 0usize..500).prop_map(|(y, x, a)| Generator::Gamma { y, x, a }),
        (0usize..500, 0usize..500, 0usize..500, 0usize..500)
            .prop_map(|(x, a, c, d)| Generator::Kappa { x, a, c, d }),
    ];
    (
        (any::<u64>(), any::<u64>(), 0u8..4, 0..MoveKind::ALL.len()),
        prop::collection::btree_map("[a-jxy]", 1usize..1000, 0..8),
        prop::collection::vec(generator, 0..4),
        (any::<usize>(), any::<usize>(), "[0-9a-f]{32}"),
    )
        .prop_map(
            |((step, from, stage, k), params, generators, (gaps, listed, hash))| TraceEvent {
                step,
                from,
                stage,
                kind: MoveKind::ALL[k],
                params,
                generators,
                gap_count_after: gaps,
                orderings_listed: listed,
                canonical_hash: hash,
            },
        )
}

fn same_cycle(a: &Cycle, b: &Cycle) -> bool {
    a.normalized() == b.normalized()
}

/// Every reader inverts its writer on 10^4 random values, and the ALB-style
/// fixture parses and solves.
fn io_round_trips() -> Outcome {
    let cases = 10_000;
    let runner = || {
        TestRunner::new(Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        })
    };
    let mut parts = Vec::new();
    let mut ok = true;
    let mut record = |label: &str, r: Result<(), String>| {
        ok &= r.is_ok();
        parts.push(match r {
            Ok(()) => format!("{label} {cases} ok"),
            Err(e) => format!("{label} failed: {e}"),
        });
    };
    record(
        "tsplib",
        runner()
            .run(
                &(
                    arb_graph(),
                    "[A-Za-z0-9_.]{1,12}",
                    proptest::option::of("[ -~]{0,40}"),
                ),
                |(g, name, comment)| {
                    let text = write_tsplib_hcp(&g, &name, comment.as_deref());
                    let f = parse_tsplib_hcp_file(&text)
                        .map_err(|e| TestCaseError::fail(e.to_string()))?;
                    prop_assert_eq!(&f.name, &name);
                    prop_assert_eq!(
                        f.comment.as_deref().map(str::trim),
                        comment.as_deref().map(str::trim).filter(|c| !c.is_empty())
                    );
                    prop_assert_eq!(f.to_graph().unwrap(), g.clone());
                    prop_assert_eq!(
                        write_tsplib_hcp(&f.to_graph().unwrap(), &name, comment.as_deref()),
                        text
                    );
                    Ok(())
                },
            )
            .map_err(|e| e.to_string()),
    );
    record(
        "edge list",
        runner()
            .run(&arb_graph(), |g| {
                let text = write_edge_list(&g);
                let back =
                    parse_edge_list(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
                prop_assert_eq!(write_edge_list(&back), text);
                prop_assert_eq!(back, g);
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    record(
        "tour",
        runner()
            .run(&arb_cycle(), |c| {
                let back = read_tour(&write_tour(&c, "t"))
                    .map_err(|e| TestCaseError::fail(e.to_string()))?;
                prop_assert!(same_cycle(&back, &c));
                prop_assert_eq!(back, c);
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    record(
        "trace",
        runner()
            .run(&prop::collection::vec(arb_event(), 0..6), |evs| {
                let text = write_trace(&evs);
                let back = read_trace(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
                prop_assert_eq!(write_trace(&back), text);
                prop_assert_eq!(back, evs);
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    let text = std::fs::read_to_string(data_dir().join("alb1000_style.hcp")).unwrap();
    let alb = match parse_tsplib_hcp(&text) {
        Ok(g) => {
            let r = solve(&g, &quiet(), None).unwrap();
            let good = solved_and_verified(&g, &r);
            ok &= good && g.vertex_count() == 1000;
            format!(
                "ALB-style n={} {} stage {}",
                g.vertex_count(),
                r.verdict.label(),
                r.stats.stage_reached
            )
        }
        Err(e) => {
            ok = false;
            format!("ALB-style fixture failed to parse: {e}")
        }
    };
    parts.push(alb);
    outcome(ok, parts.join("; "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence on all small graphs", oracle_equivalence),
        ("generalized Petersen family", petersen_family),
        ("flower snarks", flower_snarks),
        ("uniquely Hamiltonian family", sheehan_family),
        ("random cubic success rate", random_cubic_success),
        ("determinism against golden digests", determinism),
        ("move contract", move_contract),
        ("improving generator move exists", improving_move_sweep),
        ("budget law", budget_law),
        ("I/O round trips", io_round_trips),
    ];
    let wanted: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !wanted.is_empty() && !wanted.contains(&id) {
            continue;
        }
        let o = run();
        println!(
            "[{}] {id}. {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += !o.pass as usize;
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
