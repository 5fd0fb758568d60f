use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use grass_orbits::canonical::{act, canonical_datum, canonical_point, jump_sets, verify_sigma_invariant};
use grass_orbits::field::{PrimeField, Rationals};
use grass_orbits::formats::OrbitDatumJson;
use grass_orbits::points::{random_borel, random_subspace};
use grass_orbits::poset::{binomial, build_graph, desingularization, enumerate_orbits, minimal_orbits, raise_candidate, EdgeKind, WeakOrderGraph};
use grass_orbits::stabilizer::{orbit_dim_from_stabilizer, stabilizer_dim_oracle, stabilizer_system};
use grass_orbits::words::{grassmannian_permutation, grassmannian_word};
use grass_orbits::young::{OrbitDatum, YoungDiagram};
use proptest::prelude::*;
use proptest::sample::Index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Key = (usize, usize, usize);

fn orbits(key: Key) -> Arc<Vec<OrbitDatum>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Vec<OrbitDatum>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    guard.entry(key).or_insert_with(|| Arc::new(enumerate_orbits(key.0, key.1, key.2).unwrap())).clone()
}

fn graph(key: Key) -> Arc<WeakOrderGraph> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<WeakOrderGraph>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    guard.entry(key).or_insert_with(|| Arc::new(build_graph(key.0, key.1, key.2).unwrap())).clone()
}

fn sizes(max_n: usize) -> impl Strategy<Value = Key> {
    (2..=max_n).prop_flat_map(|n| (Just(n), 1..n, 1..n))
}

fn datum(max_n: usize) -> impl Strategy<Value = OrbitDatum> {
    (sizes(max_n), any::<Index>()).prop_map(|(key, i)| {
        let all = orbits(key);
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn round_trip_over_q_and_gf5(d in datum(7)) {
        let (u, w) = canonical_point(&d, Rationals).unwrap();
        prop_assert_eq!(canonical_datum(&u, &w).unwrap(), d.clone());
        let (u, w) = canonical_point(&d, PrimeField::new(5).unwrap()).unwrap();
        prop_assert_eq!(canonical_datum(&u, &w).unwrap(), d);
    }

    #[test]
    fn borel_translates_keep_the_datum(d in datum(7), seed in any::<u64>()) {
        let f = PrimeField::new(1009).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, w) = canonical_point(&d, f).unwrap();
        let (u, w) = act(&random_borel(&f, d.n, &mut rng), &u, &w).unwrap();
        prop_assert_eq!(canonical_datum(&u, &w).unwrap(), d.clone());
        prop_assert!(verify_sigma_invariant(&u, &w, &d).unwrap());
    }

    #[test]
    fn random_pairs_are_classified_consistently((n, k, l) in sizes(7), seed in any::<u64>()) {
        let f = PrimeField::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_subspace(&f, n, k, &mut rng);
        let w = random_subspace(&f, n, l, &mut rng);
        let d = canonical_datum(&u, &w).unwrap();
        prop_assert!(d.is_valid());
        prop_assert_eq!(d.stratum().unwrap(), u.intersection(&w).unwrap().dim());
        let (a, bw) = jump_sets(&u, &w).unwrap();
        prop_assert_eq!(a, d.alpha.clone());
        prop_assert_eq!(bw, d.w_jumps());
        prop_assert!(verify_sigma_invariant(&u, &w, &d).unwrap());
        let (u2, w2) = act(&random_borel(&f, n, &mut rng), &u, &w).unwrap();
        prop_assert_eq!(canonical_datum(&u2, &w2).unwrap(), d);
    }

    #[test]
    fn hook_dimension_matches_both_stabilizers(d in datum(6)) {
        let hook = d.dimension().unwrap();
        let system = stabilizer_system(&d).unwrap();
        prop_assert_eq!(hook, orbit_dim_from_stabilizer(d.n, system.nullity(&Rationals)));
        prop_assert_eq!(hook, orbit_dim_from_stabilizer(d.n, stabilizer_dim_oracle(&d).unwrap()));
        prop_assert_eq!(system.diagonal_nullity(&Rationals), d.n - d.rank());
    }

    #[test]
    fn marked_pair_and_json_round_trip(d in datum(7)) {
        prop_assert_eq!(d.marked_pair().unwrap().to_datum().unwrap(), d.clone());
        let text = serde_json::to_string(&OrbitDatumJson::with_derived(&d).unwrap()).unwrap();
        prop_assert_eq!(OrbitDatumJson::parse(&text).unwrap(), d);
    }

    #[test]
    fn raisings_step_up_by_one(d in datum(7), i in 1usize..7) {
        prop_assume!(i < d.n);
        if let Some((t, kind)) = raise_candidate(&d, i) {
            prop_assert!(t.is_valid());
            prop_assert_eq!(t.dimension().unwrap(), d.dimension().unwrap() + 1);
            prop_assert_eq!(t.stratum().unwrap(), d.stratum().unwrap());
            let step = match kind { EdgeKind::RankRaising => 1, EdgeKind::Plain => 0 };
            prop_assert_eq!(t.rank(), d.rank() + step);
        }
    }

    #[test]
    fn desingularization_replays(key in sizes(5), i in any::<Index>()) {
        let g = graph(key);
        let v = &g.vertices()[i.index(g.vertices().len())];
        let data = desingularization(&g, v).unwrap();
        prop_assert_eq!(data.check(), Ok(()));
    }

    #[test]
    fn schubert_words_are_reduced(n in 2usize..10, bits in any::<u16>()) {
        let jumps: Vec<usize> = (1..=n).filter(|j| bits >> (j - 1) & 1 == 1).collect();
        prop_assume!(!jumps.is_empty());
        let w = grassmannian_word(n, jumps.len(), &jumps);
        prop_assert!(w.is_reduced());
        prop_assert_eq!(w.len(), YoungDiagram::from_vertical_set(n, &jumps).box_count());
        prop_assert_eq!(w.permutation(), grassmannian_permutation(n, &jumps));
    }

    #[test]
    fn minimal_orbit_counts((n, k, l) in sizes(8), pick in any::<Index>()) {
        let (lo, hi) = OrbitDatum::stratum_bounds(n, k, l);
        let d = lo + pick.index(hi - lo + 1);
        let mins = minimal_orbits(n, k, l, d).unwrap();
        prop_assert_eq!(mins.len(), binomial(k + l - 2 * d, k - d));
        for m in mins {
            prop_assert_eq!(m.dimension().unwrap(), (k - d) * (l - d));
            prop_assert_eq!(m.rank(), 0);
        }
    }
}
