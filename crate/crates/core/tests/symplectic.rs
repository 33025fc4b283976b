mod common;

use common::*;
use proptest::prelude::*;
use stabcode::gf2::{kernel_basis, row_reduce, IncrementalBasis};
use stabcode::pauli::{
    commutes, pauli_from_string, pauli_product, pauli_to_string, symplectic_weight,
};
use stabcode::{BitVector, PauliLetter, PauliOperator};

fn pauli_string(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), 1..=max)
        .prop_map(|v| v.into_iter().collect())
}

fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    proptest::collection::vec(
        prop::sample::select(vec![
            PauliLetter::I,
            PauliLetter::X,
            PauliLetter::Y,
            PauliLetter::Z,
        ]),
        n,
    )
    .prop_map(|l| PauliOperator::from_letters(&l))
}

fn pauli_pair(max: usize) -> impl Strategy<Value = (PauliOperator, PauliOperator)> {
    (1..=max).prop_flat_map(|n| (pauli(n), pauli(n)))
}

proptest! {
    #[test]
    fn string_round_trip(s in pauli_string(80)) {
        prop_assert_eq!(pauli_to_string(&pauli_from_string(&s).unwrap()), s);
    }

    #[test]
    fn phase_prefix_is_dropped(s in pauli_string(20), prefix in prop::sample::select(vec!["+", "-", "i", "-i", "+i"])) {
        let with = pauli_from_string(&format!("{prefix}{s}")).unwrap();
        prop_assert_eq!(with, pauli_from_string(&s).unwrap());
    }

    #[test]
    fn weight_formula_matches_count(p in (1usize..=100).prop_flat_map(pauli)) {
        let v = p.symplectic();
        let formula = v.x().count_ones() + v.z().count_ones() - v.x().and_count(v.z());
        prop_assert_eq!(symplectic_weight(v), formula);
        prop_assert_eq!(p.weight(), weight_oracle(&p.letters()));
    }

    #[test]
    fn commutation_matches_letter_oracle((a, b) in pauli_pair(64)) {
        prop_assert_eq!(commutes(&a, &b).unwrap(), commutes_oracle(&a.letters(), &b.letters()));
    }

    #[test]
    fn product_matches_letter_oracle((a, b) in pauli_pair(64)) {
        let p = pauli_product(&a, &b).unwrap();
        prop_assert_eq!(p.letters(), product_oracle(&a.letters(), &b.letters()));
    }

    #[test]
    fn rank_matches_span_count(rows in 1usize..=10, cols in 1usize..=12, seed in any::<u64>()) {
        let m = random_matrix(rows, cols, &mut rng(seed));
        let rr = row_reduce(&m);
        prop_assert_eq!(rr.rank, rank_by_span(&m));
        prop_assert_eq!(m.rank(), rr.rank);
        prop_assert_eq!(rr.transform.mul(&m).unwrap(), rr.reduced);
    }

    #[test]
    fn kernel_vectors_are_null_and_independent(rows in 1usize..=12, cols in 1usize..=40, seed in any::<u64>()) {
        let m = random_matrix(rows, cols, &mut rng(seed));
        let ker = kernel_basis(&m);
        prop_assert_eq!(ker.len(), cols - m.rank());
        let mut basis = IncrementalBasis::new(cols);
        for v in &ker {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
            prop_assert!(basis.insert(v));
        }
    }

    #[test]
    fn distinct_half_subsets_have_distinct_sums(m in 1usize..=3, extra in 0usize..4, seed in any::<u64>()) {
        // 2m independent vectors of length 2m + extra.
        let len = 2 * m + extra;
        let mut r = rng(seed);
        let mut basis = IncrementalBasis::new(len);
        let mut vs: Vec<BitVector> = Vec::new();
        while vs.len() < 2 * m {
            let v = random_matrix(1, len, &mut r).row(0).clone();
            if basis.insert(&v) {
                vs.push(v);
            }
        }
        let mut sums = std::collections::HashSet::new();
        let mut subsets = 0;
        for mask in 0u32..(1 << (2 * m)) {
            if mask.count_ones() as usize != m {
                continue;
            }
            subsets += 1;
            let mut acc = BitVector::zeros(len);
            for (i, v) in vs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(v);
                }
            }
            prop_assert!(sums.insert(acc.to_bit_string()));
        }
        prop_assert_eq!(sums.len(), subsets);
    }
}

#[test]
fn commutation_exhaustive_small() {
    for n in 1..=3 {
        let all: Vec<Vec<PauliLetter>> = all_paulis(n).collect();
        for a in &all {
            for b in &all {
                let pa = PauliOperator::from_letters(a);
                let pb = PauliOperator::from_letters(b);
                assert_eq!(
                    commutes(&pa, &pb).unwrap(),
                    commutes_oracle(a, b),
                    "{pa} {pb}"
                );
            }
        }
    }
}

#[test]
fn product_laws_exhaustive_small() {
    for n in 1..=2 {
        let all: Vec<PauliOperator> = all_paulis(n)
            .map(|l| PauliOperator::from_letters(&l))
            .collect();
        let id = PauliOperator::identity(n);
        for a in &all {
            assert_eq!(&pauli_product(a, &id).unwrap(), a);
            assert!(pauli_product(a, a).unwrap().is_identity());
            for b in &all {
                let ab = pauli_product(a, b).unwrap();
                assert_eq!(ab, pauli_product(b, a).unwrap());
                for c in &all {
                    assert_eq!(
                        pauli_product(&ab, c).unwrap(),
                        pauli_product(a, &pauli_product(b, c).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn length_mismatch_is_an_error() {
    let a = pauli_from_string("XX").unwrap();
    let b = pauli_from_string("XXX").unwrap();
    assert!(commutes(&a, &b).is_err());
    assert!(pauli_product(&a, &b).is_err());
}
