//! Exhaustive verification runs over enumerated graph families.
//!
//! Each run fans out over independent graphs on a worker pool and merges the
//! per-graph outcomes in enumeration order, so reports do not depend on the
//! number of jobs.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sigma_core::enumerate::{connected_graphs_up_to, free_trees_up_to, pm_trees_up_to};
use sigma_core::masks::MoveTable;
use sigma_core::theta::{is_nondegenerate, radical};
use sigma_core::{
    alpha_check, alternating_counts, apply_word, catalog, delta_project, edge_type,
    enumerate_perfect_matchings, eval_b, eval_q, lit_move, min_light_number, orbit,
    partition_orbits, reeder_move, rewrite_word_rho, theta_apply, theta_preimage,
    tree_perfect_matching, EdgeType, Error, F2Vector, Game, Graph, MoveWord, OrbitClass,
};

use crate::report::{Scope, VerificationReport};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
    pub capacity: usize,
}

impl VerifyOptions {
    pub fn new(max_n: usize) -> Self {
        VerifyOptions {
            max_n,
            trials: 1000,
            seed: 0,
            jobs: 1,
            capacity: sigma_core::DEFAULT_CAPACITY,
        }
    }
}

/// Per-graph outcome: number of cases checked and failure details.
#[derive(Default)]
struct Outcome {
    cases: u64,
    failures: Vec<String>,
    counters: Vec<(&'static str, u64)>,
}

fn run_parallel<F>(opts: &VerifyOptions, graphs: &[Graph], check: F) -> Vec<Outcome>
where
    F: Fn(&Graph) -> Result<Outcome, Error> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                check(g).unwrap_or_else(|e| Outcome {
                    cases: 1,
                    failures: vec![format!("error: {e}")],
                    counters: Vec::new(),
                })
            })
            .collect()
    })
}

fn merge(report: &mut VerificationReport, graphs: &[Graph], outcomes: Vec<Outcome>) {
    let mut totals: Vec<(&'static str, u64)> = Vec::new();
    for (g, out) in graphs.iter().zip(outcomes) {
        report.cases_checked += out.cases;
        for f in out.failures {
            report.fail(g.to_text(), f);
        }
        for (k, v) in out.counters {
            match totals.iter_mut().find(|(name, _)| *name == k) {
                Some(slot) => slot.1 += v,
                None => totals.push((k, v)),
            }
        }
    }
    for (k, v) in totals {
        report.note(k, v);
    }
}

fn check_capacity(n: usize, opts: &VerifyOptions) -> Result<(), Error> {
    let limit = opts.capacity.min(sigma_core::MAX_CAPACITY);
    if n > limit {
        Err(Error::Capacity { n, limit })
    } else {
        Ok(())
    }
}

fn pm_trees(min_n: usize, max_n: usize) -> Vec<Graph> {
    pm_trees_up_to(max_n)
        .into_iter()
        .skip(min_n)
        .flatten()
        .collect()
}

/// Every tree with a perfect matching on `2..=max_n` vertices has minimum
/// light number exactly 1.
pub fn verify_pm_trees_one_lit(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    check_capacity(opts.max_n, opts)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(Scope {
        check: "thm12".into(),
        min_n: 2,
        max_n: opts.max_n,
    });
    let graphs = pm_trees(2, opts.max_n);
    let outcomes = run_parallel(opts, &graphs, |t| {
        let (k, worst) = min_light_number(t, opts.capacity)?;
        let mut out = Outcome {
            cases: 1,
            ..Outcome::default()
        };
        if k != 1 {
            out.failures.push(format!(
                "min light number {k}, expected 1 (stuck configuration {worst})"
            ));
        }
        Ok(out)
    });
    merge(&mut report, &graphs, outcomes);
    report.note("trees", graphs.len() as u64);
    Ok(report.finish(start.elapsed()))
}

/// Subdividing an odd-type edge of a perfect-matching tree gives a 1-lit
/// tree; an even-type edge gives a 2-lit tree.
pub fn verify_subdivisions(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    check_capacity(opts.max_n + 1, opts)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(Scope {
        check: "thm14".into(),
        min_n: 2,
        max_n: opts.max_n,
    });
    let graphs = pm_trees(2, opts.max_n);
    let outcomes = run_parallel(opts, &graphs, |t| {
        let m = tree_perfect_matching(t)?.expect("enumerated with a perfect matching");
        let mut out = Outcome::default();
        let (mut odd, mut even1, mut even2) = (0, 0, 0);
        for e in t.edges() {
            let (x, y) = e.endpoints();
            let kind = edge_type(t, &m, x, y)?;
            let (k, worst) = min_light_number(&t.subdivide_edge(x, y)?, opts.capacity)?;
            out.cases += 1;
            let ok = match kind {
                EdgeType::Odd => {
                    odd += 1;
                    k == 1
                }
                EdgeType::Even => {
                    if k == 1 {
                        even1 += 1;
                    } else {
                        even2 += 1;
                    }
                    k <= 2
                }
            };
            if !ok {
                out.failures.push(format!(
                    "subdividing {kind} edge {e} gives min light number {k} (stuck configuration {worst})"
                ));
            }
        }
        out.counters = vec![
            ("odd_edges", odd),
            ("even_edges_min_light_1", even1),
            ("even_edges_min_light_2", even2),
        ];
        Ok(out)
    });
    merge(&mut report, &graphs, outcomes);

    // the E6 edge {1,2} (1-based) is even and its subdivision is not 1-lit
    let e6 = catalog::dynkin_e6();
    let m = tree_perfect_matching(&e6)?.expect("E6 has a perfect matching");
    let kind = edge_type(&e6, &m, 0, 1)?;
    let (k, _) = min_light_number(&e6.subdivide_edge(0, 1)?, opts.capacity)?;
    report.cases_checked += 1;
    report.note("e6_edge_0_1_type", kind.to_string());
    report.note("e6_edge_0_1_subdivision_min_light", k as u64);
    if kind != EdgeType::Even || k != 2 {
        report.fail(
            e6.to_text(),
            format!("edge {{0,1}}: type {kind}, subdivision min light {k}; expected even and 2"),
        );
    }
    Ok(report.finish(start.elapsed()))
}

/// Class of every state: by its θ-preimage for the lit game, by itself for
/// the Reeder game.
fn class_of_states(table: &MoveTable, game: Game) -> Vec<OrbitClass> {
    let n = table.n();
    let mut class = vec![OrbitClass::ZeroOrbit; 1 << n];
    for alpha in 0u64..1 << n {
        let c = OrbitClass::from_preimage(alpha == 0, table.q(alpha));
        let target = match game {
            Game::Lit => table.theta(alpha),
            Game::Reeder => alpha,
        };
        class[target as usize] = c;
    }
    class
}

/// Compares the orbit partition with the three-class partition; returns a
/// description of the first mismatch.
fn compare_with_classes(g: &Graph, game: Game, capacity: usize) -> Result<Option<String>, Error> {
    let table = MoveTable::new(g);
    let class = class_of_states(&table, game);
    let part = partition_orbits(g, game, capacity)?;
    let mut orbit_class: Vec<Option<OrbitClass>> = vec![None; part.orbit_count()];
    for (state, &c) in class.iter().enumerate() {
        let slot = &mut orbit_class[part.label(state as u64)];
        match slot {
            None => *slot = Some(c),
            Some(prev) if *prev != c => {
                return Ok(Some(format!(
                    "{game} orbit of {} mixes {prev} and {c}",
                    F2Vector::from_mask(g.vertex_count(), part.info(state as u64).min_rep)
                )))
            }
            Some(_) => {}
        }
    }
    let distinct: HashSet<OrbitClass> = class.iter().copied().collect();
    if part.orbit_count() != distinct.len() {
        return Ok(Some(format!(
            "{game}: {} orbits but {} classes",
            part.orbit_count(),
            distinct.len()
        )));
    }
    Ok(None)
}

/// On nondegenerate trees that are not paths, the lit-game orbits are exactly
/// `{0}`, `θ(Q⁻¹(0))∖{0}`, `θ(Q⁻¹(1))`, and the Reeder orbits are exactly
/// `{0}`, `Q⁻¹(0)∖{0}`, `Q⁻¹(1)`.
pub fn verify_orbit_structure(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    check_capacity(opts.max_n, opts)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(Scope {
        check: "orbit-structure".into(),
        min_n: 2,
        max_n: opts.max_n,
    });
    let all: Vec<Graph> = free_trees_up_to(opts.max_n)
        .into_iter()
        .flatten()
        .filter(is_nondegenerate)
        .collect();
    let paths = all.iter().filter(|t| t.is_path()).count();
    let graphs: Vec<Graph> = all.into_iter().filter(|t| !t.is_path()).collect();
    let outcomes = run_parallel(opts, &graphs, |t| {
        let mut out = Outcome {
            cases: 1,
            ..Outcome::default()
        };
        for game in [Game::Lit, Game::Reeder] {
            if let Some(msg) = compare_with_classes(t, game, opts.capacity)? {
                out.failures.push(msg);
            }
        }
        Ok(out)
    });
    merge(&mut report, &graphs, outcomes);
    report.note("trees", graphs.len() as u64);
    report.note("paths_skipped", paths as u64);
    Ok(report.finish(start.elapsed()))
}

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("simple graph")
}

fn random_vec<R: Rng>(rng: &mut R, n: usize) -> F2Vector {
    F2Vector::from_mask(n, rng.gen::<u64>())
}

/// Checks every algebraic identity of the two games on one random instance.
/// Returns the names of the identities that failed.
pub fn check_identities<R: Rng>(rng: &mut R, g: &Graph) -> Result<Vec<String>, Error> {
    let n = g.vertex_count();
    let mut failed = Vec::new();
    let len = rng.gen_range(0..=20);
    let w = MoveWord::new((0..len).map(|_| rng.gen_range(0..n)).collect());
    let (f, a, b) = (random_vec(rng, n), random_vec(rng, n), random_vec(rng, n));
    let s = rng.gen_range(0..n);

    let twice_lit = lit_move(g, &lit_move(g, &f, s)?, s)?;
    let twice_reeder = reeder_move(g, &reeder_move(g, &a, s)?, s)?;
    if twice_lit != f || twice_reeder != a {
        failed.push(format!("involution at {s}"));
    }

    if n >= 2 {
        let t = (s + rng.gen_range(1..n)) % n;
        let order = if g.has_edge(s, t) { 3 } else { 2 };
        let pair: MoveWord = [s, t].repeat(order).into();
        if apply_word(g, &pair, &f, Game::Lit)? != f || apply_word(g, &pair, &a, Game::Reeder)? != a
        {
            failed.push(format!("(st)^{order} relation at s={s} t={t}"));
        }
    }

    for v in 0..n {
        if lit_move(g, &f, v)?.dot(&a) != f.dot(&reeder_move(g, &a, v)?) {
            failed.push(format!("duality at {v}"));
            break;
        }
    }

    let ta = apply_word(g, &w, &a, Game::Reeder)?;
    let tb = apply_word(g, &w, &b, Game::Reeder)?;
    if eval_b(g, &ta, &tb)? != eval_b(g, &a, &b)? {
        failed.push(format!("B invariance under {w}"));
    }
    if eval_q(g, &ta)? != eval_q(g, &a)? {
        failed.push(format!("Q invariance under {w}"));
    }
    if theta_apply(g, &ta)? != apply_word(g, &w, &theta_apply(g, &a)?, Game::Lit)? {
        failed.push(format!("theta intertwiner under {w}"));
    }

    if g.edge_count() > 0 {
        let e = g
            .edges()
            .nth(rng.gen_range(0..g.edge_count()))
            .expect("edge index in range");
        let (x, y) = e.endpoints();
        let u = if rng.gen_bool(0.5) { x } else { y };
        let ghat = g.subdivide_edge(x, y)?;
        let h = random_vec(rng, n + 1);
        let lhs = apply_word(g, &w, &delta_project(&ghat, u, n, &h)?, Game::Lit)?;
        let moved = apply_word(&ghat, &rewrite_word_rho(&w, u, n), &h, Game::Lit)?;
        if lhs != delta_project(&ghat, u, n, &moved)? {
            failed.push(format!(
                "subdivision intertwiner on edge {e}, u={u}, word {w}"
            ));
        }
    }
    Ok(failed)
}

/// Seeded random identity checks on graphs with up to `max_n` vertices.
pub fn verify_identities(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let max_n = opts.max_n.clamp(1, 63);
    let mut report = VerificationReport::new(Scope {
        check: "identities".into(),
        min_n: 1,
        max_n,
    });
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.trials {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.1..0.8);
        let g = random_graph(&mut rng, n, p);
        for name in check_identities(&mut rng, &g)? {
            report.fail(g.to_text(), name);
        }
        report.cases_checked += 1;
    }
    report.note("seed", opts.seed);
    Ok(report.finish(start.elapsed()))
}

/// For nondegenerate `g`: `f` and `f + Σ_{st∈R} f_t` are never in the same
/// lit orbit when `s` is off in `f`. Returns the first counterexample.
pub fn distinct_orbit_counterexample(
    g: &Graph,
    capacity: usize,
) -> Result<Option<(usize, F2Vector)>, Error> {
    let n = g.vertex_count();
    let table = MoveTable::new(g);
    let part = partition_orbits(g, Game::Lit, capacity)?;
    for s in 0..n {
        for f in (0u64..1 << n).filter(|f| f >> s & 1 == 0) {
            if part.same_orbit(f, f ^ table.neighbors(s)) {
                return Ok(Some((s, F2Vector::from_mask(n, f))));
            }
        }
    }
    Ok(None)
}

fn one_based(v: &F2Vector) -> Vec<usize> {
    v.ones().map(|i| i + 1).collect()
}

/// The nondegenerate 8-vertex ladder that is not 1-lit, worked end to end.
pub fn verify_ladder_example(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let g = catalog::ladder_8();
    let text = g.to_text();
    let mut report = VerificationReport::new(Scope {
        check: "paper-example".into(),
        min_n: 8,
        max_n: 8,
    });
    let expect = |report: &mut VerificationReport, ok: bool, what: &str| {
        report.cases_checked += 1;
        if !ok {
            report.fail(text.clone(), what.to_string());
        }
    };

    let rank = radical(&g).rank;
    report.note("rank", rank as u64);
    expect(&mut report, rank == 8, "adjacency matrix has rank 8");

    let matchings = enumerate_perfect_matchings(&g, 16);
    let pairs: Vec<Vec<usize>> = matchings
        .first()
        .map(|m| m.pairs().map(|e| vec![e.lo() + 1, e.hi() + 1]).collect())
        .unwrap_or_default();
    report.note("perfect_matchings", matchings.len() as u64);
    report.note("perfect_matching_1based", serde_json::json!(pairs));
    expect(
        &mut report,
        matchings.len() == 1 && pairs == vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![7, 8]],
        "unique perfect matching {1,2},{3,4},{5,6},{7,8}",
    );

    // f = f2+f3+f6+f7 in 1-based labels
    let f = F2Vector::from_indices(8, [1, 2, 5, 6]);
    let alpha = theta_preimage(&g, &f)?;
    let q_alpha = eval_q(&g, &alpha)?;
    let a1 = theta_preimage(&g, &F2Vector::unit(8, 0))?;
    let a2 = theta_preimage(&g, &F2Vector::unit(8, 1))?;
    let (q1, q2) = (eval_q(&g, &a1)?, eval_q(&g, &a2)?);
    report.note("alpha_1based", serde_json::json!(one_based(&alpha)));
    report.note("alpha_check_1_1based", serde_json::json!(one_based(&a1)));
    report.note("alpha_check_2_1based", serde_json::json!(one_based(&a2)));
    report.note("Q(alpha)", q_alpha as u64);
    report.note("Q(alpha_check_1)", q1 as u64);
    report.note("Q(alpha_check_2)", q2 as u64);
    expect(
        &mut report,
        one_based(&alpha) == vec![1, 4, 5, 8],
        "theta(a1+a4+a5+a8) = f",
    );
    expect(
        &mut report,
        one_based(&a1) == vec![2, 4, 5],
        "theta(a2+a4+a5) = f1",
    );
    expect(&mut report, one_based(&a2) == vec![1], "theta(a1) = f2");
    expect(&mut report, !q_alpha && q1 && q2, "Q values 0, 1, 1");

    let sum = orbit(&g, &f, Game::Lit, opts.capacity)?;
    report.note("orbit_size", sum.orbit_size);
    report.note("orbit_min_on", sum.min_on as u64);
    expect(
        &mut report,
        sum.min_on >= 2,
        "orbit of f has no single light",
    );
    expect(
        &mut report,
        sum.q_class == Some(OrbitClass::QZeroClass),
        "orbit of f is in the Q = 0 class",
    );

    let (k, worst) = min_light_number(&g, opts.capacity)?;
    report.note("min_light_number", k as u64);
    report.note("worst_config", worst.to_bitstring());
    expect(&mut report, k == 2, "minimum light number is 2");

    Ok(report.finish(start.elapsed()))
}

/// Order of the orthogonal group `O^ε(2m, 2)`.
pub fn orthogonal_group_order(m: u32, plus_type: bool) -> u128 {
    let q: u128 = 2;
    let mut order = 2 * q.pow(m * (m - 1));
    order *= if plus_type {
        q.pow(m) - 1
    } else {
        q.pow(m) + 1
    };
    for i in 1..m {
        order *= q.pow(2 * i) - 1;
    }
    order
}

/// Group generated by the Reeder moves, compared with the orthogonal group
/// of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalCheck {
    pub n: usize,
    pub q_zeros: u64,
    pub plus_type: bool,
    pub expected_order: u128,
    pub closure_order: u128,
    pub preserves_q: bool,
}

/// Closes `{τ_s}` under composition by BFS. Elements are stored as their
/// columns packed into one `u64`, so `n <= 8`. Requires `Q` nondegenerate
/// (even `n`, nondegenerate graph).
pub fn reeder_group_closure(g: &Graph) -> Result<OrthogonalCheck, Error> {
    let n = g.vertex_count();
    assert!(
        n <= 8 && n.is_multiple_of(2),
        "closure check supports even n <= 8"
    );
    if !is_nondegenerate(g) {
        return Err(Error::Degenerate {
            radical_dim: radical(g).kernel.len(),
        });
    }
    let table = MoveTable::new(g);
    let pack = |cols: &[u64]| {
        cols.iter()
            .enumerate()
            .fold(0u64, |k, (i, &c)| k | c << (8 * i))
    };
    let identity: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let mut seen: HashSet<u64> = HashSet::from([pack(&identity)]);
    let mut queue = vec![identity];
    let mut preserves_q = true;
    while let Some(cols) = queue.pop() {
        for s in 0..n {
            let next: Vec<u64> = cols.iter().map(|&c| table.reeder(c, s)).collect();
            if seen.insert(pack(&next)) {
                // a linear map preserves Q iff it does on every vector
                preserves_q &= (0u64..1 << n).all(|x| {
                    let image = (0..n)
                        .filter(|&i| x >> i & 1 == 1)
                        .fold(0u64, |acc, i| acc ^ next[i]);
                    table.q(image) == table.q(x)
                });
                queue.push(next);
            }
        }
    }
    let q_zeros = (0u64..1 << n).filter(|&x| !table.q(x)).count() as u64;
    let m = (n / 2) as u32;
    let plus_type = q_zeros == (1u64 << (2 * m - 1)) + (1u64 << (m - 1));
    Ok(OrthogonalCheck {
        n,
        q_zeros,
        plus_type,
        expected_order: orthogonal_group_order(m, plus_type),
        closure_order: seen.len() as u128,
        preserves_q,
    })
}

/// `θ(α_s^∨) = f_s` and `Q(α_s^∨) ≡ a_s` for every vertex of every
/// perfect-matching tree with at most `max_n` vertices.
pub fn verify_alternating_sets(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let mut report = VerificationReport::new(Scope {
        check: "alternating".into(),
        min_n: 2,
        max_n: opts.max_n,
    });
    let graphs = pm_trees(2, opts.max_n);
    let outcomes = run_parallel(opts, &graphs, |t| {
        let m = tree_perfect_matching(t)?.expect("enumerated with a perfect matching");
        let n = t.vertex_count();
        let a = alternating_counts(t, &m)?;
        let mut out = Outcome::default();
        for (s, a_s) in a.into_iter().enumerate() {
            let check = alpha_check(t, &m, s)?;
            out.cases += 1;
            if theta_apply(t, &check)? != F2Vector::unit(n, s) {
                out.failures
                    .push(format!("theta(alpha_check({s})) != f_{s}"));
            }
            if eval_q(t, &check)? != (a_s % 2 == 1) {
                out.failures
                    .push(format!("Q(alpha_check({s})) != a_{s} mod 2"));
            }
        }
        Ok(out)
    });
    merge(&mut report, &graphs, outcomes);
    Ok(report.finish(start.elapsed()))
}

/// Distinct-orbit property over every nondegenerate connected graph with at most
/// `max_n` vertices (`max_n <= 10`), then over `opts.trials` seeded random
/// graphs with at most 12 vertices.
pub fn verify_distinct_orbits(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    check_capacity(opts.max_n.max(12), opts)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(Scope {
        check: "distinct-orbit".into(),
        min_n: 1,
        max_n: opts.max_n.max(12),
    });
    let mut graphs: Vec<Graph> = connected_graphs_up_to(opts.max_n)
        .into_iter()
        .flatten()
        .filter(is_nondegenerate)
        .collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut random = 0u64;
    while random < opts.trials as u64 {
        // alternating matrices of odd size are singular
        let n = 2 * rng.gen_range(1..=6);
        let p = rng.gen_range(0.15..0.7);
        let g = random_graph(&mut rng, n, p);
        if is_nondegenerate(&g) {
            graphs.push(g);
            random += 1;
        }
    }
    let outcomes = run_parallel(opts, &graphs, |g| {
        let mut out = Outcome {
            cases: 1,
            ..Outcome::default()
        };
        if let Some((s, f)) = distinct_orbit_counterexample(g, opts.capacity)? {
            out.failures
                .push(format!("f = {f} and f + nbr({s}) share an orbit"));
        }
        Ok(out)
    });
    merge(&mut report, &graphs, outcomes);
    report.note("connected_graphs", exhaustive as u64);
    report.note("random_graphs", random);
    Ok(report.finish(start.elapsed()))
}

/// Every path on `1..=max_n` vertices is 1-lit.
pub fn verify_paths(opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    check_capacity(opts.max_n, opts)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(Scope {
        check: "paths".into(),
        min_n: 1,
        max_n: opts.max_n,
    });
    let graphs: Vec<Graph> = (1..=opts.max_n).map(catalog::path).collect();
    let outcomes = run_parallel(opts, &graphs, |p| {
        let (k, worst) = min_light_number(p, opts.capacity)?;
        Ok(Outcome {
            cases: 1,
            failures: if k == 1 {
                Vec::new()
            } else {
                vec![format!(
                    "min light number {k} (stuck configuration {worst})"
                )]
            },
            counters: Vec::new(),
        })
    });
    merge(&mut report, &graphs, outcomes);
    Ok(report.finish(start.elapsed()))
}

/// Group closure of the Reeder moves on `g` against the orthogonal group order.
pub fn verify_orthogonal_closure(g: &Graph) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let mut report = VerificationReport::new(Scope {
        check: "orthogonal-closure".into(),
        min_n: g.vertex_count(),
        max_n: g.vertex_count(),
    });
    let c = reeder_group_closure(g)?;
    report.cases_checked = 1;
    report.note("q_zeros", c.q_zeros);
    report.note("type", if c.plus_type { "+" } else { "-" });
    report.note("expected_order", c.expected_order as u64);
    report.note("closure_order", c.closure_order as u64);
    report.note("preserves_q", c.preserves_q);
    if c.closure_order != c.expected_order || !c.preserves_q {
        report.fail(
            g.to_text(),
            format!(
                "closure order {} (preserves Q: {}), orthogonal group order {}",
                c.closure_order, c.preserves_q, c.expected_order
            ),
        );
    }
    Ok(report.finish(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_orders() {
        // O+(6,2) ≅ S8 and O-(6,2) ≅ W(E6)
        assert_eq!(orthogonal_group_order(3, true), 40320);
        assert_eq!(orthogonal_group_order(3, false), 51840);
        // O+(2,2) has order 2, O-(2,2) order 6
        assert_eq!(orthogonal_group_order(1, true), 2);
        assert_eq!(orthogonal_group_order(1, false), 6);
    }

    #[test]
    fn p2_closure() {
        let c = reeder_group_closure(&catalog::path(2)).unwrap();
        assert_eq!(c.q_zeros, 1);
        assert!(!c.plus_type);
        assert_eq!(c.closure_order, 6);
        assert!(c.preserves_q);
    }

    #[test]
    fn identities_hold_on_fixed_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for g in [
            catalog::ladder_8(),
            catalog::dynkin_e8(),
            catalog::star(5),
            Graph::empty(3),
        ] {
            for _ in 0..50 {
                assert!(check_identities(&mut rng, &g).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let mut opts = VerifyOptions::new(14);
        opts.capacity = 12;
        assert!(matches!(
            verify_pm_trees_one_lit(&opts),
            Err(Error::Capacity { n: 14, limit: 12 })
        ));
        opts.max_n = 12;
        assert!(matches!(
            verify_subdivisions(&opts),
            Err(Error::Capacity { n: 13, limit: 12 })
        ));
    }

    #[test]
    fn small_runs_pass() {
        let opts = VerifyOptions::new(8);
        for r in [
            verify_pm_trees_one_lit(&opts).unwrap(),
            verify_subdivisions(&opts).unwrap(),
            verify_orbit_structure(&opts).unwrap(),
            verify_alternating_sets(&opts).unwrap(),
            verify_ladder_example(&opts).unwrap(),
        ] {
            assert!(r.pass, "{}", r.to_text());
            assert!(r.cases_checked > 0);
        }
    }

    #[test]
    fn jobs_do_not_change_reports() {
        let mut opts = VerifyOptions::new(10);
        let one = verify_subdivisions(&opts).unwrap();
        opts.jobs = 4;
        let four = verify_subdivisions(&opts).unwrap();
        assert_eq!(one.cases_checked, four.cases_checked);
        assert_eq!(one.extra, four.extra);
    }
}
