mod common;

use common::*;
use inversion::basis::bounds_from_decrease;
use inversion::bfcore::chain::strictly_below;
use inversion::bfcore::{decrease, decrease_oracle, is_jump, nu_profile, Chain};
use inversion::circuit::{check_lemma1, parse_circuit, split_first_nonmonotone, write_circuit};
use inversion::synth::{decompose_step, synthesize};
use inversion::{Basis, FunctionSystem, PatternPool, TruthTable};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn table(n: u32) -> impl Strategy<Value = TruthTable> {
    any::<u64>().prop_map(move |w| table_from_bits(n, w))
}

fn system_of(n: u32) -> impl Strategy<Value = FunctionSystem> {
    prop::collection::vec(table(n), 1..=3).prop_map(|m| FunctionSystem::new(m).unwrap())
}

fn system(max_n: u32) -> impl Strategy<Value = FunctionSystem> {
    (0..=max_n).prop_flat_map(system_of)
}

fn any_basis() -> impl Strategy<Value = Basis> {
    any::<u64>().prop_map(|seed| random_basis(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn fixed_basis() -> impl Strategy<Value = Basis> {
    prop_oneof![
        Just(Basis::negation()),
        Just(nand2()),
        Just(xor2()),
        Just(b2())
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dp_matches_oracle(f in system(4)) {
        prop_assert_eq!(decrease(&f).unwrap().value, decrease_oracle(&f).unwrap());
    }

    #[test]
    fn witness_attains_the_value(f in system(6)) {
        let d = decrease(&f).unwrap();
        prop_assert_eq!(d.witness.jumps(&f), d.value);
        let pts = d.witness.points();
        for w in pts.windows(2) {
            prop_assert!(strictly_below(w[0], w[1]));
        }
    }

    #[test]
    fn nu_is_monotone_and_peaks_at_d(f in system(6)) {
        let nu = nu_profile(&f).unwrap();
        let size = 1usize << f.arity();
        for a in 0..size {
            for j in 0..f.arity() {
                let b = a | 1 << j;
                prop_assert!(nu.get(a) <= nu.get(b));
            }
        }
        prop_assert_eq!(nu.max(), decrease(&f).unwrap().value);
        prop_assert_eq!(nu.get(size - 1), nu.max());
    }

    #[test]
    fn zero_decrease_iff_monotone(f in system(5)) {
        let d = decrease(&f).unwrap().value;
        let all = f.members().iter().all(TruthTable::is_monotone);
        prop_assert_eq!(d == 0, all);
    }

    /// Inserting a point between the ends of a jump keeps at least one jump.
    #[test]
    fn jumps_survive_refinement(f in system_of(4), a in 0usize..16, b in 0usize..16, c in 0usize..16) {
        let (lo, hi) = (a & b & c, a | b | c);
        let mid = (a & b) | lo;
        prop_assume!(strictly_below(lo, mid) && strictly_below(mid, hi));
        if is_jump(&f, lo, hi).unwrap() {
            prop_assert!(is_jump(&f, lo, mid).unwrap() || is_jump(&f, mid, hi).unwrap());
        }
    }

    #[test]
    fn chain_jumps_never_exceed_d(f in system_of(3), picks in prop::collection::vec(0usize..8, 0..6)) {
        let mut points = vec![0usize];
        for p in picks {
            let next = points.last().unwrap() | p;
            if next != *points.last().unwrap() {
                points.push(next);
            }
        }
        let chain = Chain::new(3, points).unwrap();
        prop_assert!(chain.jumps(&f) <= decrease(&f).unwrap().value);
    }

    #[test]
    fn gadget_computes_negation(b in any_basis()) {
        let g = b.negation_gadget();
        prop_assert_eq!(g.function(&b), TruthTable::from_bit_string("10").unwrap());
    }

    #[test]
    fn bound_shape(d in 0u64..1 << 40, c in 1.0f64..12.0) {
        let (lower, upper) = bounds_from_decrease(d, c);
        prop_assert!(lower <= upper);
        prop_assert_eq!(upper == 0, d == 0);
        prop_assert!(d < 1u64 << upper);
        if upper > 0 {
            prop_assert!(d >= 1u64 << (upper - 1));
        }
    }

    #[test]
    fn projections_express_exactly_monotone(g in table(4)) {
        let pool = PatternPool::new(4).unwrap();
        prop_assert_eq!(pool.monotone_expressible(&g).unwrap(), g.is_monotone());
    }

    #[test]
    fn extension_reproduces_target(extra in prop::collection::vec(table(3), 0..3), g in table(3)) {
        let pool = PatternPool::with_signals(3, &extra).unwrap();
        if pool.monotone_expressible(&g).unwrap() {
            let ext = pool.monotone_extension(&g).unwrap();
            prop_assert!(ext.is_monotone());
            let signals = pool.signals();
            for x in 0..8 {
                let p = signals.iter().enumerate().fold(0usize, |acc, (i, s)| acc | (s.get(x) as usize) << i);
                prop_assert_eq!(ext.get(p), g.get(x));
            }
        } else {
            prop_assert!(pool.monotone_extension(&g).is_err());
        }
    }

    #[test]
    fn adding_signals_keeps_expressibility(extra in table(3), g in table(3)) {
        let mut pool = PatternPool::new(3).unwrap();
        let before = pool.monotone_expressible(&g).unwrap();
        pool.push(&extra).unwrap();
        prop_assert!(!before || pool.monotone_expressible(&g).unwrap());
        prop_assert!(pool.monotone_expressible(&extra).unwrap());
    }

    #[test]
    fn synthesis_is_exact(f in system(4), b in fixed_basis()) {
        let d = decrease(&f).unwrap().value as u64;
        let (c, trace) = synthesize(&f, &b).unwrap();
        prop_assert_eq!(c.realized_system(&b).unwrap(), f);
        prop_assert_eq!(c.inversion_weight() as u32, 64 - d.leading_zeros());
        for level in &trace.levels {
            prop_assert!(level.transformed_decrease < 1 << (level.k - 1));
        }
    }

    #[test]
    fn one_step_halves(f in system(4)) {
        let d = decrease(&f).unwrap().value;
        prop_assume!(d > 0);
        let (m, g) = decompose_step(&f).unwrap();
        prop_assert!(m.is_monotone());
        let k = 32 - d.leading_zeros();
        prop_assert!(decrease(&g).unwrap().value < 1 << (k - 1));
    }

    #[test]
    fn split_composes(seed in any::<u64>(), n in 1usize..=5, gates in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(&mut rng);
        let c = random_circuit(&mut rng, &b, n, gates);
        prop_assume!(c.inversion_weight() > 0);
        let s = split_first_nonmonotone(&c, &b).unwrap();
        prop_assert_eq!(s.reduced.inversion_weight(), c.inversion_weight() - 1);
        prop_assert_eq!(s.check_composition(&c, &b).unwrap(), None);
        // the removed gate is a basis gate on monotone inputs
        prop_assert!(decrease(&s.h.clone().into()).unwrap().value <= b.r());
    }

    #[test]
    fn weight_bounds_decrease(seed in any::<u64>(), n in 0usize..=5, gates in 0usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(&mut rng);
        let c = random_circuit(&mut rng, &b, n, gates);
        let report = check_lemma1(&c, &b).unwrap();
        prop_assert!(report.holds, "{:?}", report);
    }

    #[test]
    fn evaluation_matches_tables(seed in any::<u64>(), n in 0usize..=4, gates in 0usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(&mut rng);
        let c = random_circuit(&mut rng, &b, n, gates);
        let sys = c.realized_system(&b).unwrap();
        for x in 0..1usize << n {
            let bits: Vec<bool> = (0..n).map(|j| x >> j & 1 == 1).collect();
            let out = c.evaluate(&b, &bits).unwrap();
            let want: Vec<bool> = sys.members().iter().map(|t| t.get(x)).collect();
            prop_assert_eq!(out, want);
        }
    }

    #[test]
    fn circuit_text_round_trip(seed in any::<u64>(), n in 0usize..=4, gates in 0usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(&mut rng);
        let c = random_circuit(&mut rng, &b, n, gates);
        let text = write_circuit(&c);
        prop_assert_eq!(parse_circuit(&text).unwrap(), c);
    }

    #[test]
    fn hex_round_trip(n in 0u32..=8, seed in any::<u64>()) {
        let t = TruthTable::from_index_fn(n, |i| (seed.rotate_left(i as u32 % 64) ^ i as u64) & 1 == 1);
        prop_assert_eq!(TruthTable::from_hex(n, &t.to_hex()).unwrap(), t);
    }
}

#[test]
fn single_variable_functions() {
    // identity, constants: 0; negation: 1
    for (bits, d) in [("00", 0), ("11", 0), ("01", 0), ("10", 1)] {
        let f: FunctionSystem = TruthTable::from_bit_string(bits).unwrap().into();
        assert_eq!(decrease(&f).unwrap().value, d, "{bits}");
    }
}
