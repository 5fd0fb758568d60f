//! Cross-check suites tying the combinatorics to independent linear-algebra
//! and finite-field computations.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{act, canonical_datum, canonical_point, jump_sets, sigma_invariant_sides};
use crate::field::{Field, PrimeField, Rationals};
use crate::points::{grassmannian_points, random_borel, random_subspace, simple_reflection_times_root};
use crate::poset::{
    binomial, build_graph, desingularization, enumerate_orbits, minimal_orbits, raise_candidate,
    WeakOrderGraph,
};
use crate::stabilizer::{orbit_dim_from_stabilizer, stabilizer_dim_oracle, stabilizer_system};
use crate::young::{hook_dimension, total_dimension, HookDirection, OrbitDatum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub prime: u64,
    pub trials: usize,
    pub max_dim_check_n: usize,
    pub seed: u64,
    pub hook: HookDirection,
}

impl VerifyConfig {
    pub fn new(n: usize, k: usize, l: usize) -> Self {
        VerifyConfig {
            n,
            k,
            l,
            prime: 1009,
            trials: 1000,
            max_dim_check_n: 6,
            seed: 0x5eed,
            hook: HookDirection::Inward,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub millis: u128,
}

type Outcome = Result<usize, String>;

fn report(suite: &str, started: Instant, outcome: Outcome) -> SuiteReport {
    let (passed, checked, counterexample) = match outcome {
        Ok(c) => (true, c, None),
        Err(e) => (false, 0, Some(e)),
    };
    SuiteReport {
        suite: suite.to_string(),
        passed,
        checked,
        skipped: None,
        counterexample,
        millis: started.elapsed().as_millis(),
    }
}

fn skipped(suite: &str, why: String) -> SuiteReport {
    SuiteReport {
        suite: suite.to_string(),
        passed: true,
        checked: 0,
        skipped: Some(why),
        counterexample: None,
        millis: 0,
    }
}

/// Checks `f` on every item in parallel; the first failure in item order is
/// reported.
fn check_all<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<(), String> + Sync) -> Outcome {
    let failures: Vec<(usize, String)> = items
        .par_iter()
        .enumerate()
        .filter_map(|(i, x)| f(x).err().map(|e| (i, e)))
        .collect();
    match failures.into_iter().min_by_key(|(i, _)| *i) {
        Some((_, e)) => Err(e),
        None => Ok(items.len()),
    }
}

/// Hook dimension against the stabilizer system and the Lie-algebra oracle.
pub fn dimension_agreement(data: &[OrbitDatum], hook: HookDirection) -> Outcome {
    check_all(data, |d| {
        let hook_dim = hook_dimension(d, hook).map_err(|e| format!("{d}: {e}"))?;
        let system = stabilizer_system(d).map_err(|e| format!("{d}: {e}"))?;
        let sys_dim = orbit_dim_from_stabilizer(d.n, system.nullity(&Rationals));
        let oracle_dim = orbit_dim_from_stabilizer(d.n, stabilizer_dim_oracle(d).map_err(|e| e.to_string())?);
        if hook_dim != sys_dim || hook_dim != oracle_dim {
            return Err(format!("{d}: hook {hook_dim}, system {sys_dim}, oracle {oracle_dim}"));
        }
        let toric = system.diagonal_nullity(&Rationals);
        if toric != d.n - d.rank() {
            return Err(format!("{d}: toric nullity {toric} != n - rank = {}", d.n - d.rank()));
        }
        Ok(())
    })
}

/// Minimal-orbit counts and shapes, and agreement with the graph's sources.
pub fn minimal_orbit_suite(graph: &WeakOrderGraph) -> Outcome {
    let (n, k, l) = (graph.n, graph.k, graph.l);
    let mut expected = BTreeSet::new();
    for d in graph.strata_range() {
        let mins = minimal_orbits(n, k, l, d).map_err(|e| e.to_string())?;
        if mins.len() != binomial(k + l - 2 * d, k - d) {
            return Err(format!("d = {d}: {} minimal orbits", mins.len()));
        }
        for m in mins {
            let dim = m.dimension().map_err(|e| e.to_string())?;
            if dim != (k - d) * (l - d) || m.rank() != 0 || m.stratum() != Ok(d) {
                return Err(format!("{m}: dim {dim}, rank {}", m.rank()));
            }
            expected.insert(m);
        }
    }
    let sources: BTreeSet<OrbitDatum> =
        graph.sources().into_iter().map(|v| graph.vertices()[v].clone()).collect();
    if let Some(extra) = sources.symmetric_difference(&expected).next() {
        let side = if sources.contains(extra) { "source that is not minimal" } else { "minimal orbit with an incoming edge" };
        return Err(format!("{extra}: {side}"));
    }
    Ok(expected.len())
}

/// One sink per stratum; the largest of them is the open orbit.
pub fn sink_suite(graph: &WeakOrderGraph) -> Outcome {
    let mut top = 0;
    for d in graph.strata_range() {
        let sinks = graph.sinks_in_stratum(d);
        if sinks.len() != 1 {
            return Err(format!("stratum d = {d} has {} sinks", sinks.len()));
        }
        top = top.max(graph.dim(sinks[0]));
    }
    let expected = total_dimension(graph.n, graph.k, graph.l);
    if top != expected {
        return Err(format!("largest sink has dim {top}, expected {expected}"));
    }
    Ok(graph.strata_range().count())
}

/// Edge invariants: dimension, stratum and the rank change matching the
/// edge kind. `WeakOrderGraph` enforces these on construction; this repeats
/// them on the exported edge list.
pub fn edge_suite(graph: &WeakOrderGraph) -> Outcome {
    use crate::poset::EdgeKind;
    check_all(graph.edges(), |e| {
        let (s, t) = (&graph.vertices()[e.source], &graph.vertices()[e.target]);
        let rank_step = t.rank() as isize - s.rank() as isize;
        let ok = graph.dim(e.target) == graph.dim(e.source) + 1
            && graph.stratum(e.target) == graph.stratum(e.source)
            && rank_step == if e.kind == EdgeKind::RankRaising { 1 } else { 0 };
        if ok {
            Ok(())
        } else {
            Err(format!("edge {s} -[{}]-> {t}", e.simple_index))
        }
    })
}

/// Random Borel translates leave the canonical datum unchanged.
pub fn b_invariance(n: usize, k: usize, l: usize, data: &[OrbitDatum], prime: u64, trials: usize, seed: u64) -> Outcome {
    let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
    let ids: Vec<usize> = (0..trials).collect();
    check_all(&ids, |&trial| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        // Even trials start from a known representative, odd ones from a
        // uniformly random pair.
        let (u, w, expected) = if trial % 2 == 0 {
            let d = &data[rng.gen_range(0..data.len())];
            let (u, w) = canonical_point(d, field).map_err(|e| e.to_string())?;
            let b = random_borel(&field, n, &mut rng);
            let (u, w) = act(&b, &u, &w).map_err(|e| e.to_string())?;
            (u, w, Some(d.clone()))
        } else {
            (random_subspace(&field, n, k, &mut rng), random_subspace(&field, n, l, &mut rng), None)
        };
        let base = canonical_datum(&u, &w).map_err(|e| e.to_string())?;
        if let Some(d) = expected {
            if base != d {
                return Err(format!("translate of the point of {d} classified as {base}"));
            }
        }
        let (a, bw) = jump_sets(&u, &w).map_err(|e| e.to_string())?;
        if a != base.alpha || bw != base.w_jumps() {
            return Err(format!("{base}: jump sets {a:?} / {bw:?} disagree"));
        }
        let b = random_borel(&field, n, &mut rng);
        let (u2, w2) = act(&b, &u, &w).map_err(|e| e.to_string())?;
        let moved = canonical_datum(&u2, &w2).map_err(|e| e.to_string())?;
        if moved != base {
            return Err(format!("trial {trial}: {base} became {moved} after a Borel translate"));
        }
        Ok(())
    })
}

/// Every `GF(q)` point pair is classified, and the set of data seen equals
/// the enumeration.
pub fn finite_field_sweep(n: usize, k: usize, l: usize, q: u64, data: &[OrbitDatum]) -> Outcome {
    let field = PrimeField::new(q).map_err(|e| e.to_string())?;
    let us = grassmannian_points(&field, n, k);
    let ws = grassmannian_points(&field, n, l);
    let seen: Result<BTreeSet<OrbitDatum>, String> = us
        .par_iter()
        .map(|u| {
            ws.iter()
                .map(|w| canonical_datum(u, w).map_err(|e| e.to_string()))
                .collect::<Result<BTreeSet<_>, _>>()
        })
        .try_reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        });
    let seen = seen?;
    let expected: BTreeSet<OrbitDatum> = data.iter().cloned().collect();
    if let Some(d) = seen.difference(&expected).next() {
        return Err(format!("GF({q}) point classified as non-enumerated {d}"));
    }
    if let Some(d) = expected.difference(&seen).next() {
        return Err(format!("{d} has no GF({q}) point"));
    }
    Ok(us.len() * ws.len())
}

/// Desingularization words replay to their vertex.
pub fn replay_suite(graph: &WeakOrderGraph) -> Outcome {
    check_all(graph.vertices(), |v| {
        let data = desingularization(graph, v).map_err(|e| format!("{v}: {e}"))?;
        data.check().map_err(|e| format!("{v}: {e}"))
    })
}

/// `canonical_datum(canonical_point(d)) = d` over a field.
pub fn round_trip<F: Field>(data: &[OrbitDatum], field: F) -> Outcome {
    check_all(data, |d| {
        let (u, w) = canonical_point(d, field.clone()).map_err(|e| e.to_string())?;
        let back = canonical_datum(&u, &w).map_err(|e| format!("{d}: {e}"))?;
        if &back != d {
            return Err(format!("{d} came back as {back} over {}", field.describe()));
        }
        Ok(())
    })
}

/// The pair invariant on every canonical point.
pub fn sigma_invariant_suite(data: &[OrbitDatum]) -> Outcome {
    check_all(data, |d| {
        let (u, w) = canonical_point(d, Rationals).map_err(|e| e.to_string())?;
        let sides = sigma_invariant_sides(&u, &w, d).map_err(|e| e.to_string())?;
        match sides.iter().zip(&d.sigma_pairs).find(|((a, b), _)| a != b) {
            Some(((a, b), p)) => Err(format!("{d}: pair {p:?} gives {a} vs {b}")),
            None => Ok(()),
        }
    })
}

/// Orbits met by `P_i · O` are `O` and those of `s_i u_i(t) x` over `t`.
/// The dense one is the raise; it must agree with [`raise_candidate`].
pub fn edge_oracle(data: &[OrbitDatum], prime: u64, samples: usize, seed: u64) -> Outcome {
    let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
    let exhaustive = (prime as usize) <= samples;
    let work: Vec<(usize, usize)> =
        (0..data.len()).flat_map(|d| (1..data.first().map_or(1, |x| x.n)).map(move |i| (d, i))).collect();
    check_all(&work, |&(di, i)| {
        let d = &data[di];
        let n = d.n;
        let dim = d.dimension().map_err(|e| e.to_string())?;
        let (u, w) = canonical_point(d, field).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((di * n + i) as u64));
        let ts: Vec<u64> = if exhaustive {
            (0..prime).collect()
        } else {
            (0..samples).map(|s| if s < 2 { s as u64 } else { rng.gen_range(0..prime) }).collect()
        };
        let mut best = (dim, d.clone());
        for t in ts {
            let g = simple_reflection_times_root(&field, n, i, t);
            let (u2, w2) = act(&g, &u, &w).map_err(|e| e.to_string())?;
            let e = canonical_datum(&u2, &w2).map_err(|e| e.to_string())?;
            let e_dim = e.dimension().map_err(|e| e.to_string())?;
            if e_dim > best.0 {
                best = (e_dim, e);
            } else if e_dim == best.0 && e != best.1 && e_dim > dim {
                return Err(format!("{d}, i = {i}: two top orbits {} and {e}", best.1));
            }
        }
        let predicted = raise_candidate(d, i).map(|(t, _)| t);
        let observed = (best.0 > dim).then_some(best.1);
        if best.0 > dim + 1 {
            return Err(format!("{d}, i = {i}: P_i raises dimension by {}", best.0 - dim));
        }
        if predicted != observed {
            return Err(format!("{d}, i = {i}: rule gives {predicted:?}, geometry gives {observed:?}"));
        }
        Ok(())
    })
}

/// Runs every suite for one `(n, k, l)`, in parallel; reports come back in
/// a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteReport>, String> {
    let (n, k, l) = (cfg.n, cfg.k, cfg.l);
    let data = enumerate_orbits(n, k, l).map_err(|e| e.to_string())?;
    PrimeField::new(cfg.prime).map_err(|e| e.to_string())?;
    let started = Instant::now();
    let graph = build_graph(n, k, l);
    let graph_report = report("graph", started, graph.as_ref().map(|g| g.edges().len()).map_err(|e| e.to_string()));
    let Ok(graph) = graph else {
        return Ok(vec![graph_report]);
    };
    let small = n <= cfg.max_dim_check_n;
    let budget = format!("n = {n} exceeds --max-dim-check-n {}", cfg.max_dim_check_n);

    type Job<'a> = Box<dyn Fn() -> SuiteReport + Send + Sync + 'a>;
    fn timed<'a>(name: &'static str, f: Box<dyn Fn() -> Outcome + Send + Sync + 'a>) -> Job<'a> {
        Box::new(move || {
            let t = Instant::now();
            report(name, t, f())
        })
    }
    let data = &data;
    let graph = &graph;
    let mut jobs: Vec<Job> = vec![
        timed("edges", Box::new(|| edge_suite(graph))),
        timed("minimal_orbits", Box::new(|| minimal_orbit_suite(graph))),
        timed("sinks", Box::new(|| sink_suite(graph))),
        timed("replay", Box::new(|| replay_suite(graph))),
        timed(
            "b_invariance",
            Box::new(move || b_invariance(n, k, l, data, cfg.prime, cfg.trials, cfg.seed)),
        ),
    ];
    if small {
        jobs.push(timed("dimension", Box::new(move || dimension_agreement(data, cfg.hook))));
        jobs.push(timed(
            "round_trip",
            Box::new(|| {
                let q = round_trip(data, Rationals)?;
                let p = round_trip(data, PrimeField::new(5).expect("5 is prime"))?;
                Ok(q + p)
            }),
        ));
        jobs.push(timed("sigma_invariant", Box::new(|| sigma_invariant_suite(data))));
        jobs.push(timed("edge_oracle", Box::new(move || edge_oracle(data, cfg.prime, 8, cfg.seed))));
    } else {
        for name in ["dimension", "round_trip", "sigma_invariant", "edge_oracle"] {
            let why = budget.clone();
            jobs.push(Box::new(move || skipped(name, why.clone())));
        }
    }
    if n <= 4 {
        for q in [2u64, 3, 5] {
            let name: &'static str = match q {
                2 => "finite_field_q2",
                3 => "finite_field_q3",
                _ => "finite_field_q5",
            };
            jobs.push(timed(name, Box::new(move || finite_field_sweep(n, k, l, q, data))));
        }
    } else {
        jobs.push(Box::new(|| skipped("finite_field", "sweep runs for n <= 4".into())));
    }
    let mut out = vec![graph_report];
    out.extend(jobs.par_iter().map(|job| job()).collect::<Vec<_>>());
    Ok(out)
}
