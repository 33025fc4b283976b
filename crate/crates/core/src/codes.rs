//! Named small codes and random code generators.

use rand::Rng;

use crate::code::StabilizerCode;
use crate::gf2::{kernel_basis, BitVector, Gf2Matrix, IncrementalBasis};
use crate::pauli::{PauliOperator, SymplecticVector};

fn named(label: &str, d: usize, gens: &[&str]) -> StabilizerCode {
    StabilizerCode::from_strings(gens)
        .expect("built-in code is valid")
        .with_label(label)
        .with_designed_distance(d)
}

pub const STEANE: [&str; 6] = [
    "IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ",
];

pub const SHOR: [&str; 8] = [
    "ZZIIIIIII",
    "IZZIIIIII",
    "IIIZZIIII",
    "IIIIZZIII",
    "IIIIIIZZI",
    "IIIIIIIZZ",
    "XXXXXXIII",
    "IIIXXXXXX",
];

pub const FIVE_QUBIT: [&str; 4] = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"];

pub const BIT_FLIP: [&str; 2] = ["ZZI", "IZZ"];

/// Steane [[7,1,3]], built from the [7,4] Hamming parity checks.
pub fn steane() -> StabilizerCode {
    named("steane", 3, &STEANE)
}

/// Shor [[9,1,3]].
pub fn shor() -> StabilizerCode {
    named("shor", 3, &SHOR)
}

/// The perfect [[5,1,3]] code.
pub fn five_qubit() -> StabilizerCode {
    named("five-qubit", 3, &FIVE_QUBIT)
}

/// Three-qubit bit-flip repetition code `⟨Z₁Z₂, Z₂Z₃⟩`. It has no
/// designed distance as a quantum code: `Z₁` is already logical.
pub fn bit_flip() -> StabilizerCode {
    StabilizerCode::from_strings(&BIT_FLIP)
        .expect("built-in code is valid")
        .with_label("bit-flip")
}

/// Looks up a built-in code by name.
pub fn by_name(name: &str) -> Option<StabilizerCode> {
    match name {
        "steane" => Some(steane()),
        "shor" => Some(shor()),
        "five-qubit" | "five_qubit" | "5qubit" => Some(five_qubit()),
        "bit-flip" | "bit_flip" => Some(bit_flip()),
        _ => None,
    }
}

pub const NAMES: [&str; 4] = ["steane", "shor", "five-qubit", "bit-flip"];

fn random_combination<R: Rng + ?Sized>(basis: &[BitVector], len: usize, rng: &mut R) -> BitVector {
    let mut v = BitVector::zeros(len);
    for b in basis {
        if rng.gen::<bool>() {
            v.xor_assign(b);
        }
    }
    v
}

/// A random stabilizer code on `n` qubits with `generators` generators.
///
/// Each new generator is drawn uniformly from the symplectic complement of
/// the ones already chosen and rejected if it falls in their span.
///
/// # Panics
/// Panics if `generators == 0` or `generators > n`.
pub fn random_code<R: Rng + ?Sized>(n: usize, generators: usize, rng: &mut R) -> StabilizerCode {
    assert!(
        generators >= 1 && generators <= n,
        "need 1 <= generators <= n"
    );
    let mut rows: Vec<SymplecticVector> = Vec::with_capacity(generators);
    let mut span = IncrementalBasis::new(2 * n);
    while rows.len() < generators {
        // v commutes with row r iff (z_r | x_r) · v = 0.
        let swapped: Vec<BitVector> = rows.iter().map(|r| r.z().concat(r.x())).collect();
        let constraints = Gf2Matrix::from_rows(2 * n, swapped).expect("uniform rows");
        let complement = kernel_basis(&constraints);
        let v = random_combination(&complement, 2 * n, rng);
        if span.insert(&v) {
            rows.push(SymplecticVector::from_concatenated(&v).expect("even length"));
        }
    }
    let ops: Vec<PauliOperator> = rows
        .into_iter()
        .map(PauliOperator::from_symplectic)
        .collect();
    StabilizerCode::from_generators(&ops).expect("construction yields a valid code")
}

/// A random CSS code with `x_gens` X-type and `z_gens` Z-type generators.
///
/// # Panics
/// Panics if `x_gens + z_gens > n` or both are zero.
pub fn random_css_code<R: Rng + ?Sized>(
    n: usize,
    x_gens: usize,
    z_gens: usize,
    rng: &mut R,
) -> StabilizerCode {
    assert!(x_gens + z_gens <= n && x_gens + z_gens >= 1);
    let mut x_span = IncrementalBasis::new(n);
    let mut x_rows = Vec::new();
    while x_rows.len() < x_gens {
        let v = BitVector::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<_>>());
        if x_span.insert(&v) {
            x_rows.push(v);
        }
    }
    let hx = Gf2Matrix::from_rows(n, x_rows.clone()).expect("uniform rows");
    let complement = kernel_basis(&hx);
    let mut z_span = IncrementalBasis::new(n);
    let mut z_rows = Vec::new();
    while z_rows.len() < z_gens {
        let v = random_combination(&complement, n, rng);
        if z_span.insert(&v) {
            z_rows.push(v);
        }
    }
    let zero = BitVector::zeros(n);
    let ops: Vec<PauliOperator> = x_rows
        .into_iter()
        .map(|x| PauliOperator::from_xz(x, zero.clone()).expect("same length"))
        .chain(
            z_rows
                .into_iter()
                .map(|z| PauliOperator::from_xz(zero.clone(), z).expect("same length")),
        )
        .collect();
    StabilizerCode::from_generators(&ops).expect("construction yields a valid code")
}
