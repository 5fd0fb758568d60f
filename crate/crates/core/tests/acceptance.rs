//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! All comparisons are exact: integer equality, no tolerance. Each criterion also has a
//! wall-clock budget; overrunning it fails the criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use grass_orbits::field::{PrimeField, Rationals};
use grass_orbits::poset::{build_graph, enumerate_orbits, raise_candidate, EdgeKind};
use grass_orbits::verify::{
    b_invariance, dimension_agreement, finite_field_sweep, minimal_orbit_suite, replay_suite, round_trip,
    sink_suite,
};
use grass_orbits::young::{common_diagram, CommonDiagram, HookDirection, OrbitDatum};

const B_PRIME: u64 = 1009;
const B_TRIALS: usize = 1000;

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact(name: &str, got: usize, want: usize) -> Result<(), String> {
    ensure(got == want, || format!("{name}: got {got}, want {want}"))
}

fn sizes(max_n: usize) -> Vec<(usize, usize, usize)> {
    (2..=max_n)
        .flat_map(|n| (1..n).flat_map(move |k| (1..n).map(move |l| (n, k, l))))
        .collect()
}

fn datum(n: usize, alpha: &[usize], beta: &[usize], pairs: &[(usize, usize)]) -> Result<OrbitDatum, String> {
    OrbitDatum::from_parts(n, alpha.to_vec(), beta.to_vec(), pairs.to_vec()).map_err(|e| e.to_string())
}

fn c1_nine_example() -> Check {
    let d = datum(9, &[3, 5, 6, 9], &[2, 5], &[(7, 9)])?;
    let mp = d.marked_pair().map_err(|e| e.to_string())?;
    ensure(mp.first.rows() == [5, 3, 3, 2], || format!("Y1 rows {:?}", mp.first.rows()))?;
    ensure(mp.second.rows() == [6, 3, 1], || format!("Y2 rows {:?}", mp.second.rows()))?;
    ensure(mp.first_dot_cells() == [(1, 4)], || format!("Y1 dots {:?}", mp.first_dot_cells()))?;
    ensure(mp.second_dot_cells() == [(1, 5)], || format!("Y2 dots {:?}", mp.second_dot_cells()))?;
    let cd = common_diagram(&mp).map_err(|e| e.to_string())?;
    ensure(cd.shape() == [4, 2], || format!("common shape {:?}", cd.shape()))?;
    exact("dimension", d.dimension().map_err(|e| e.to_string())?, 20)?;
    Ok("Y1 (5,3,3,2) dot (1,4); Y2 (6,3,1) dot (1,5); Ycom (4,2)".into())
}

fn c2_hook_figure() -> Check {
    let rows = [8, 7, 5, 4, 2];
    let dots = [(2, 6), (3, 1), (4, 4)];
    let marked: BTreeSet<(usize, usize)> = [(1, 1), (1, 4), (1, 6)]
        .into_iter()
        .chain((1..=6).map(|c| (2, c)))
        .chain([(3, 1), (3, 4)])
        .chain((1..=4).map(|c| (4, c)))
        .collect();
    let drawn = CommonDiagram::from_shape(&rows, &dots).ok_or("shape rejected")?;
    // The same diagram as the common diagram of an actual datum: rows at the
    // vertical steps {3,6,8,11,13} of the shape's path, one pair per dot.
    let d = datum(13, &[3, 6, 8, 11, 13], &[3, 13], &[(9, 11), (1, 8), (5, 6)])?;
    let real = common_diagram(&d.marked_pair().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    for cd in [&drawn, &real] {
        exact("#Ycom", cd.box_count(), 26)?;
        let h = cd.hook_union_cells(HookDirection::Inward);
        exact("#H", h.len(), 15)?;
        ensure(h == marked, || format!("H differs: {:?}", h.symmetric_difference(&marked).collect::<Vec<_>>()))?;
        ensure(cd.dot_cells().iter().copied().collect::<BTreeSet<_>>() == dots.into_iter().collect(), || {
            format!("dots {:?}", cd.dot_cells())
        })?;
    }
    Ok("#Ycom = 26, #H = 15, H matches the starred boxes".into())
}

fn c3_raising_example() -> Check {
    let src = datum(7, &[2, 5, 7], &[3, 4, 6], &[(1, 7)])?;
    let mp = src.marked_pair().map_err(|e| e.to_string())?;
    ensure(mp.first.rows() == [4, 3, 1] && mp.first_dot_cells() == [(1, 1)], || format!("source Y1 {mp}"))?;
    ensure(mp.second.rows() == [3, 3, 2, 2] && mp.second_dot_cells() == [(1, 1)], || format!("source Y2 {mp}"))?;
    let (dst, kind) = raise_candidate(&src, 2).ok_or("P_2 does not raise")?;
    ensure(kind == EdgeKind::RankRaising, || format!("kind {kind:?}"))?;
    ensure(dst == datum(7, &[3, 5, 7], &[4, 6], &[(1, 7), (2, 3)])?, || format!("raised to {dst}"))?;
    let mp = dst.marked_pair().map_err(|e| e.to_string())?;
    ensure(mp.first.rows() == [4, 3, 2] && mp.first_dot_cells() == [(1, 1), (3, 2)], || format!("raised Y1 {mp}"))?;
    ensure(mp.second.rows() == [3, 3, 2, 2] && mp.second_dot_cells() == [(1, 1), (4, 2)], || {
        format!("raised Y2 {mp}")
    })?;
    let (d0, d1) = (src.dimension().map_err(|e| e.to_string())?, dst.dimension().map_err(|e| e.to_string())?);
    exact("source dim", d0, 18)?;
    exact("raised dim", d1, 19)?;
    exact("rank step", dst.rank() - src.rank(), 1)?;
    Ok(format!("dim {d0} -> {d1}, rank {} -> {}", src.rank(), dst.rank()))
}

fn c4_triple_agreement() -> Check {
    let mut checked = 0;
    for (n, k, l) in sizes(6) {
        let data = enumerate_orbits(n, k, l).map_err(|e| e.to_string())?;
        checked += dimension_agreement(&data, HookDirection::Inward)?;
    }
    Ok(format!("{checked} data with n <= 6: hook = system = oracle"))
}

fn c5_minimal_orbits() -> Check {
    let mut count = 0;
    for (n, k, l) in sizes(8) {
        let g = build_graph(n, k, l).map_err(|e| format!("({n},{k},{l}): {e}"))?;
        count += minimal_orbit_suite(&g).map_err(|e| format!("({n},{k},{l}): {e}"))?;
    }
    Ok(format!("{count} minimal orbits for n <= 8, all graph sources"))
}

fn c6_open_orbit() -> Check {
    let mut strata = 0;
    for (n, k, l) in sizes(8) {
        let g = build_graph(n, k, l).map_err(|e| format!("({n},{k},{l}): {e}"))?;
        strata += sink_suite(&g).map_err(|e| format!("({n},{k},{l}): {e}"))?;
    }
    let g = build_graph(8, 3, 4).map_err(|e| e.to_string())?;
    let top = g.strata_range().map(|d| g.dim(g.sinks_in_stratum(d)[0])).max().unwrap_or(0);
    exact("open orbit (8,3,4)", top, 31)?;
    let open = datum(8, &[6, 7, 8], &[5], &[(2, 8), (3, 7), (4, 6)])?;
    ensure(g.sinks_in_stratum(0) == [g.id_of(&open).ok_or("missing")?], || "wrong sink for d = 0".into())?;
    Ok(format!("{strata} strata with one sink each; (8,3,4) open orbit dim 31"))
}

fn c7_b_invariance() -> Check {
    let mut trials = 0;
    for (n, k, l) in sizes(6) {
        let data = enumerate_orbits(n, k, l).map_err(|e| e.to_string())?;
        trials += b_invariance(n, k, l, &data, B_PRIME, B_TRIALS, 0xacce97).map_err(|e| format!("({n},{k},{l}): {e}"))?;
    }
    Ok(format!("{trials} trials over GF({B_PRIME}), {B_TRIALS} per (n,k,l), 0 failures"))
}

fn c8_finite_field_sweep() -> Check {
    let plane: BTreeSet<OrbitDatum> = {
        let f = PrimeField::new(2).map_err(|e| e.to_string())?;
        let pts = grass_orbits::points::grassmannian_points(&f, 2, 1);
        pts.iter()
            .flat_map(|u| pts.iter().map(move |w| grass_orbits::canonical_datum(u, w)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?
    };
    exact("data of (2,1,1) over GF(2)", plane.len(), 5)?;
    let mut points = 0;
    for (n, k, l) in sizes(4) {
        let data = enumerate_orbits(n, k, l).map_err(|e| e.to_string())?;
        for q in [2, 3, 5] {
            points += finite_field_sweep(n, k, l, q, &data).map_err(|e| format!("({n},{k},{l}) q={q}: {e}"))?;
        }
    }
    Ok(format!("{points} point pairs, data sets equal the enumeration; (2,1,1) gives 5"))
}

fn c9_replay() -> Check {
    let mut vertices = 0;
    for (n, k, l) in sizes(6) {
        let g = build_graph(n, k, l).map_err(|e| e.to_string())?;
        vertices += replay_suite(&g).map_err(|e| format!("({n},{k},{l}): {e}"))?;
    }
    Ok(format!("{vertices} vertices replayed"))
}

fn c10_round_trip() -> Check {
    let gf5 = PrimeField::new(5).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for (n, k, l) in sizes(6) {
        let data = enumerate_orbits(n, k, l).map_err(|e| e.to_string())?;
        checked += round_trip(&data, Rationals)?;
        checked += round_trip(&data, gf5)?;
    }
    Ok(format!("{checked} round trips over Q and GF(5)"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("n=9 worked example", 1, c1_nine_example),
        ("hook-union figure", 1, c2_hook_figure),
        ("raising example n=7, P_2", 1, c3_raising_example),
        ("triple dimension agreement n<=6", 300, c4_triple_agreement),
        ("minimal orbits n<=8", 300, c5_minimal_orbits),
        ("unique sinks and open orbit n<=8", 300, c6_open_orbit),
        ("B-invariance n<=6", 300, c7_b_invariance),
        ("finite-field sweep n<=4", 120, c8_finite_field_sweep),
        ("desingularization replay n<=6", 300, c9_replay),
        ("round trip n<=6", 300, c10_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, budget_s, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let budget = Duration::from_secs(*budget_s);
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; over budget")),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!(
            "{status} [{:>2}] {name}: {detail} ({:.2}s / {budget_s}s, exact)",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
