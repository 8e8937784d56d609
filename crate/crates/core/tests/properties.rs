mod common;

use flagcheck_core::complex::{
    bfs_distances, canonical_cycle, enumerate_full_cycles, is_connected, load_complex_auto,
    DistanceMatrix,
};
use flagcheck_core::curvature::largeness_of_complex;
use flagcheck_core::generators::{gen_random_flag, gen_tiling_patch, GeneratorSpec};
use flagcheck_core::{
    fill_without_interior, find_minimal_filling, four_point_delta, DeltaMethod, Error, FlagComplex,
    Largeness, Loop, Vertex,
};
use proptest::prelude::*;

use common::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = FlagComplex> {
    (2..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, seed)| gen_random_flag(n, p, seed).unwrap())
}

fn relabel(x: &FlagComplex, perm: &[Vertex]) -> FlagComplex {
    FlagComplex::new(x.vertex_count(), x.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn delta_is_invariant_under_relabeling(x in graph_strategy(12), seed in any::<u64>()) {
        prop_assume!(is_connected(&x));
        let mut perm: Vec<Vertex> = x.vertices().collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = four_point_delta(&x, DeltaMethod::Exact).unwrap().delta;
        let b = four_point_delta(&relabel(&x, &perm), DeltaMethod::Exact).unwrap().delta;
        prop_assert_eq!(a, b);
        prop_assert_eq!(a.twice(), brute_delta_twice(&x));
    }

    #[test]
    fn sampled_delta_never_exceeds_exact(x in graph_strategy(14), samples in 1usize..300, seed in any::<u64>()) {
        prop_assume!(is_connected(&x));
        let exact = four_point_delta(&x, DeltaMethod::Exact).unwrap();
        let sampled = four_point_delta(&x, DeltaMethod::Sampled { samples, seed }).unwrap();
        prop_assert!(sampled.delta <= exact.delta);
    }

    #[test]
    fn metric_axioms(x in graph_strategy(12)) {
        let dm = DistanceMatrix::new(&x);
        for u in x.vertices() {
            prop_assert_eq!(dm.get(u, u), Some(0));
            for v in x.vertices() {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                for w in x.vertices() {
                    if let (Some(a), Some(b), Some(c)) = (dm.get(u, w), dm.get(u, v), dm.get(v, w)) {
                        prop_assert!(a <= b + c);
                    }
                }
            }
        }
    }

    #[test]
    fn span_is_idempotent_and_full(x in graph_strategy(12), mask in any::<u16>()) {
        let members: Vec<Vertex> = x.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        let sub = x.span(&members).unwrap();
        let again = sub.complex.span(&(0..members.len()).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(&again.complex, &sub.complex);
        let edges = sub.ambient_edges();
        prop_assert!(x.is_full_subcomplex(&members, &edges).unwrap());
    }

    #[test]
    fn full_cycles_are_chordless_and_distinct(x in graph_strategy(10)) {
        let cycles = enumerate_full_cycles(&x, 10);
        for c in &cycles {
            prop_assert!(is_chordless(&x, c.vertices()));
            prop_assert_eq!(canonical_cycle(c.vertices()), c.vertices().to_vec());
        }
        let mut sorted: Vec<_> = cycles.iter().map(|c| c.vertices().to_vec()).collect();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), cycles.len());
    }

    #[test]
    fn largeness_matches_subset_oracle(x in graph_strategy(11)) {
        let members: Vec<Vertex> = x.vertices().collect();
        let want = match induced_cycle_largeness(&x, &members) {
            Some(k) => Largeness::Finite(k as u32),
            None => Largeness::Infinite,
        };
        prop_assert_eq!(largeness_of_complex(&x), want);
    }

    #[test]
    fn minimal_filling_matches_oracle(x in graph_strategy(8), seed in any::<u64>()) {
        use rand::SeedableRng;
        let dm = DistanceMatrix::new(&x);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for len in 3..=5 {
            if let Some(gamma) = random_loop(&x, &dm, len, &mut rng) {
                let lp = Loop::new(&x, gamma.clone()).unwrap();
                let fast = match find_minimal_filling(&x, &lp, 5) {
                    Ok(m) => Some(m.area()),
                    Err(Error::BudgetExceeded { .. }) => None,
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                };
                prop_assert_eq!(fast, brute_min_filling_area(&x, &gamma, 5));
            }
        }
    }

    #[test]
    fn complete_graph_loops_fill_by_diagonals(n in 3usize..9, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let x = flagcheck_core::generators::gen_simplex(n);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut vs: Vec<Vertex> = (0..n).collect();
        vs.shuffle(&mut rng);
        let gamma = Loop::new(&x, vs).unwrap();
        let m = fill_without_interior(&x, &gamma, Largeness::Infinite).unwrap();
        prop_assert_eq!(m.area(), n - 2);
        prop_assert!(m.disc.interior().is_empty());
        prop_assert_eq!(m.disc.euler_characteristic(), 1);
    }

    #[test]
    fn documents_round_trip(x in graph_strategy(15)) {
        let json = x.to_json();
        let back = load_complex_auto(json.as_bytes()).unwrap();
        prop_assert_eq!(back.to_json(), json);
        prop_assert_eq!(back, x);
    }
}

#[test]
fn tiling_patches_follow_the_layer_recurrence() {
    for d in 6..=9 {
        for r in 1..=3 {
            let patch = gen_tiling_patch(d, r).unwrap();
            assert_eq!(patch.vertex_count() as i64, layer_recurrence_count(d as i64, r), "d={d} r={r}");
            let dist = bfs_distances(&patch, 0);
            for v in patch.vertices() {
                if dist[v].unwrap() < r as u32 {
                    assert_eq!(patch.degree(v), d);
                }
            }
        }
    }
}

#[test]
fn generator_specs_are_deterministic() {
    let specs = [
        GeneratorSpec::RandomFlag { n: 20, p: 0.3, seed: 42 },
        GeneratorSpec::TilingPatch { degree: 7, radius: 3 },
        GeneratorSpec::PolygonDisc { boundary_len: 8, interior_degrees: vec![4, 8] },
        GeneratorSpec::Cone { base: Box::new(GeneratorSpec::Cycle { n: 9 }) },
    ];
    for spec in specs {
        assert_eq!(spec.build().unwrap().to_json(), spec.build().unwrap().to_json());
    }
}
