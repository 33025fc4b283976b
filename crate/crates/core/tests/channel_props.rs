mod common;

use std::collections::HashMap;

use common::*;
use proptest::prelude::*;
use stabcode::channel::{
    build_table, run, run_with, sample_error, trial_rng, wilson_interval, Coverage, PauliChannel,
    SimOptions,
};
use stabcode::{codes, PauliLetter, PauliOperator, StabilizerCode};

fn letter_probability(c: &PauliChannel, l: PauliLetter) -> f64 {
    match l {
        PauliLetter::I => c.p_i(),
        PauliLetter::X => c.p_x,
        PauliLetter::Y => c.p_y,
        PauliLetter::Z => c.p_z,
    }
}

/// Failure probability of the lookup decoder, summed over all `4^n` errors.
fn exact_failure_probability(code: &StabilizerCode, channel: &PauliChannel) -> f64 {
    let table = build_table(code, None);
    let stab = stabilizer_group(code);
    let mut fail = 0.0;
    for l in all_paulis(code.n()) {
        let p: f64 = l.iter().map(|x| letter_probability(channel, *x)).product();
        let e = PauliOperator::from_letters(&l);
        let r = table.get(&code.syndrome(&e).unwrap()).unwrap();
        if !stab.contains(&product_oracle(&r.letters(), &l)) {
            fail += p;
        }
    }
    fail
}

#[test]
fn monte_carlo_matches_exact_rate() {
    let channel = PauliChannel::depolarizing(0.05).unwrap();
    let trials = 100_000;
    for code in [codes::steane(), codes::shor()] {
        let exact = exact_failure_probability(&code, &channel);
        let opts = SimOptions {
            workers: 4,
            strict: false,
        };
        let sim = run_with(&code, &channel, trials, 99, &opts).unwrap();
        let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
        assert!(
            (sim.rate - exact).abs() < 4.0 * sigma,
            "{:?}: rate {} vs exact {exact}",
            code.label(),
            sim.rate
        );
    }
}

#[test]
fn shor_beats_steane_exactly_at_five_percent() {
    let channel = PauliChannel::depolarizing(0.05).unwrap();
    let steane = exact_failure_probability(&codes::steane(), &channel);
    let shor = exact_failure_probability(&codes::shor(), &channel);
    assert!(shor < steane, "shor {shor} steane {steane}");
}

#[test]
fn tables_hold_minimum_weight_representatives() {
    for code in [
        codes::steane(),
        codes::shor(),
        codes::five_qubit(),
        codes::bit_flip(),
    ] {
        let table = build_table(&code, None);
        assert_eq!(table.coverage(), Coverage::Full);
        assert_eq!(table.len(), 1 << code.num_generators());
        let mut best: HashMap<Vec<bool>, usize> = HashMap::new();
        for l in all_paulis(code.n()) {
            let s = syndrome_oracle(&code, &PauliOperator::from_letters(&l));
            let w = weight_oracle(&l);
            best.entry(s).and_modify(|b| *b = (*b).min(w)).or_insert(w);
        }
        for (s, r) in table.iter() {
            assert_eq!(&code.syndrome(r).unwrap(), s);
            assert_eq!(best[&s.bits().iter().collect::<Vec<_>>()], r.weight());
        }
    }
}

#[test]
fn sampled_weight_has_expected_mean() {
    let n = 20;
    let channel = PauliChannel::new(0.02, 0.05, 0.03).unwrap();
    let p = 0.1;
    let draws = 100_000;
    let mut counts = [0u64; 4];
    let mut total = 0u64;
    for i in 0..draws {
        let e = sample_error(&channel, n, &mut trial_rng(5, i));
        total += e.weight() as u64;
        for l in e.letters() {
            counts[l as usize] += 1;
        }
    }
    let mean = total as f64 / draws as f64;
    let sigma = (n as f64 * p * (1.0 - p) / draws as f64).sqrt();
    assert!((mean - n as f64 * p).abs() < 3.0 * sigma, "mean {mean}");
    let letters = (n as u64 * draws) as f64;
    for (l, q) in [
        (PauliLetter::X, 0.02),
        (PauliLetter::Y, 0.05),
        (PauliLetter::Z, 0.03),
    ] {
        let f = counts[l as usize] as f64 / letters;
        let s = (q * (1.0 - q) / letters).sqrt();
        assert!((f - q).abs() < 4.0 * s, "{l:?}: {f}");
    }
}

#[test]
fn steane_rate_grows_with_noise() {
    let code = codes::steane();
    let opts = SimOptions {
        workers: 4,
        strict: false,
    };
    let low = run_with(
        &code,
        &PauliChannel::depolarizing(0.01).unwrap(),
        100_000,
        3,
        &opts,
    )
    .unwrap();
    let high = run_with(
        &code,
        &PauliChannel::depolarizing(0.10).unwrap(),
        100_000,
        3,
        &opts,
    )
    .unwrap();
    assert!(low.rate < high.rate);
    assert!(low.ci95.1 < high.ci95.0);
}

#[test]
fn noiseless_channel_never_fails() {
    let r = run(&codes::shor(), &PauliChannel::noiseless(), 100, 7).unwrap();
    assert_eq!(r.logical_failures, 0);
    assert_eq!(r.rate, 0.0);
}

#[test]
fn strict_mismatches_bound_failures() {
    let opts = SimOptions {
        workers: 1,
        strict: true,
    };
    let ch = PauliChannel::depolarizing(0.1).unwrap();
    let r = run_with(&codes::shor(), &ch, 20_000, 1, &opts).unwrap();
    let m = r.exact_mismatches.unwrap();
    // Shor corrects many errors up to a stabilizer, not exactly.
    assert!(m > r.logical_failures);
}

#[test]
fn invalid_inputs() {
    assert!(PauliChannel::new(0.5, 0.5, 0.1).is_err());
    assert!(PauliChannel::new(-0.1, 0.0, 0.0).is_err());
    assert!(PauliChannel::depolarizing(1.2).is_err());
    assert!(run(&codes::steane(), &PauliChannel::noiseless(), 0, 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn results_independent_of_worker_count(seed in any::<u64>(), workers in 2usize..9, trials in 1u64..3000) {
        let code = code_from_seed(seed, 8);
        let ch = PauliChannel::depolarizing(0.2).unwrap();
        let one = run_with(&code, &ch, trials, seed, &SimOptions { workers: 1, strict: true }).unwrap();
        let many = run_with(&code, &ch, trials, seed, &SimOptions { workers, strict: true }).unwrap();
        prop_assert_eq!(one, many);
    }

    #[test]
    fn wilson_contains_rate(f in 0u64..1000, extra in 0u64..1000) {
        let n = f + extra + 1;
        let (lo, hi) = wilson_interval(f, n);
        let p = f as f64 / n as f64;
        prop_assert!(0.0 <= lo && lo <= p + 1e-12 && p <= hi + 1e-12 && hi <= 1.0);
    }
}
