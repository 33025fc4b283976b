mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use stabcode::degeneracy::{
    classify, classify_with, css_nondegeneracy, necessary_check, standard_form_shortcut,
    sufficient_nondegenerate, ClassifyOptions, Outcome, ScanMode, Verdict, DEFAULT_BUDGET,
};
use stabcode::enumerate::{correctable_count, enumerate_errors, ErrorEnumerator};
use stabcode::{codes, standard_form, StabilizerCode};

fn exhaustive() -> ClassifyOptions {
    ClassifyOptions {
        mode: ScanMode::Exhaustive,
        ..ClassifyOptions::default()
    }
}

fn ladder(code: &StabilizerCode, t: usize) -> Result<(), TestCaseError> {
    let verdict = classify(code, t).unwrap().verdict;
    if 4 * t <= 2 * code.n()
        && sufficient_nondegenerate(code, t, DEFAULT_BUDGET).unwrap()
            == Outcome::ProvenNondegenerate
    {
        prop_assert_eq!(verdict, Verdict::Nondegenerate);
    }
    if necessary_check(code, t, DEFAULT_BUDGET).unwrap() == Outcome::ProvenDegenerate {
        prop_assert_eq!(verdict, Verdict::Degenerate);
    }
    match css_nondegeneracy(code, t, DEFAULT_BUDGET) {
        Outcome::ProvenDegenerate => prop_assert_eq!(verdict, Verdict::Degenerate),
        Outcome::ProvenNondegenerate => prop_assert_eq!(verdict, Verdict::Nondegenerate),
        Outcome::NotCss => prop_assert!(code.is_css().is_none()),
        other => prop_assert!(false, "unexpected css outcome {:?}", other),
    }
    if standard_form_shortcut(&standard_form(code), t) == Outcome::ProvenDegenerate {
        prop_assert_eq!(verdict, Verdict::Degenerate);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn verdict_matches_brute_force(seed in any::<u64>(), t in 1usize..=2) {
        let code = code_from_seed(seed, 6);
        prop_assume!(t <= code.n());
        let r = classify(&code, t).unwrap();
        prop_assert_eq!(r.verdict == Verdict::Degenerate, degenerate_oracle(&code, t));
    }

    #[test]
    fn criteria_ladder(seed in any::<u64>(), t in 1usize..=2) {
        let code = code_from_seed(seed, 10);
        prop_assume!(t <= code.n());
        ladder(&code, t)?;
    }

    #[test]
    fn criteria_ladder_css(seed in any::<u64>(), t in 1usize..=2) {
        let code = css_from_seed(seed, 10);
        prop_assume!(t <= code.n());
        ladder(&code, t)?;
    }

    #[test]
    fn syndrome_count_bounds(seed in any::<u64>(), t in 1usize..=2) {
        let code = code_from_seed(seed, 9);
        prop_assume!(t <= code.n());
        let r = classify_with(&code, t, &exhaustive()).unwrap();
        let cap = (1u64 << code.num_generators()) - 1;
        prop_assert!(r.exhaustive);
        prop_assert!(r.syndrome_count <= r.expected_count.min(cap));
        prop_assert_eq!(r.expected_count, correctable_count(code.n(), t));
        prop_assert_eq!(
            r.syndrome_count == r.expected_count,
            r.verdict == Verdict::Nondegenerate
        );
        prop_assert_eq!(r.syndrome_count + r.collisions.unwrap(), r.expected_count);
    }

    #[test]
    fn witnesses_are_genuine_collisions(seed in any::<u64>(), t in 1usize..=2) {
        let code = code_from_seed(seed, 10);
        prop_assume!(t <= code.n());
        let r = classify(&code, t).unwrap();
        if let Some(w) = r.witness {
            prop_assert_eq!(r.verdict, Verdict::Degenerate);
            prop_assert!(w.e != w.f);
            prop_assert!(w.e.weight() <= t && w.f.weight() <= t);
            prop_assert_eq!(code.syndrome(&w.e).unwrap(), code.syndrome(&w.f).unwrap());
            let product = w.e.product(&w.f).unwrap();
            prop_assert_eq!(w.product_in_stabilizer, code.in_stabilizer(&product).unwrap());
        } else {
            prop_assert_eq!(r.verdict, Verdict::Nondegenerate);
        }
    }

    #[test]
    fn scan_modes_agree(seed in any::<u64>()) {
        let code = code_from_seed(seed, 8);
        let a = classify(&code, 1).unwrap();
        let b = classify_with(&code, 1, &exhaustive()).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.witness, b.witness);
    }
}

#[test]
fn enumeration_counts() {
    for n in 1..=8 {
        for t in 1..=3.min(n) {
            let expected: u64 = (1..=t)
                .map(|i| {
                    let c = (0..i).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64);
                    c * 3u64.pow(i as u32)
                })
                .sum();
            let errors: Vec<_> = enumerate_errors(n, t).unwrap().collect();
            assert_eq!(errors.len() as u64, expected, "n={n} t={t}");
            assert_eq!(correctable_count(n, t), expected);
            let distinct: std::collections::HashSet<String> =
                errors.iter().map(|e| e.to_string()).collect();
            assert_eq!(distinct.len(), errors.len());
            assert!(errors.iter().all(|e| (1..=t).contains(&e.weight())));
            assert!(errors.windows(2).all(|w| w[0].weight() <= w[1].weight()));
        }
    }
    assert!(ErrorEnumerator::new(3, 0).is_err());
    assert!(ErrorEnumerator::new(3, 4).is_err());
}

#[test]
fn fixture_verdicts() {
    let steane = classify(&codes::steane(), 1).unwrap();
    assert_eq!(
        (steane.verdict, steane.syndrome_count),
        (Verdict::Nondegenerate, 21)
    );
    let five = classify(&codes::five_qubit(), 1).unwrap();
    assert_eq!(
        (five.verdict, five.syndrome_count),
        (Verdict::Nondegenerate, 15)
    );
    let shor = classify(&codes::shor(), 1).unwrap();
    assert_eq!(shor.verdict, Verdict::Degenerate);
    assert!(shor.witness.unwrap().product_in_stabilizer);
}

#[test]
fn criteria_ladder_thousand_small_codes() {
    let mut r = rng(2024);
    for _ in 0..1000 {
        let n = r.gen_range(2..=8);
        let code = if r.gen_bool(0.3) {
            let total = r.gen_range(2..=n);
            let x = r.gen_range(1..total);
            codes::random_css_code(n, x, total - x, &mut r)
        } else {
            let m = r.gen_range(1..=n);
            codes::random_code(n, m, &mut r)
        };
        ladder(&code, 1).unwrap();
    }
}
