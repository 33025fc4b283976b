//! Logical error rates under i.i.d. Pauli noise.
//!
//! Each trial samples an error, looks up the minimum-weight representative
//! for its syndrome and counts a logical failure unless the residual
//! `R·E` is a stabilizer element. Trial `i` draws from ChaCha stream `i`
//! of the run seed, so results do not depend on how trials are split
//! across threads.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::code::{StabilizerCode, Syndrome};
use crate::enumerate::ErrorEnumerator;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::pauli::{PauliLetter, PauliOperator};

const SUM_TOLERANCE: f64 = 1e-12;

/// Independent single-qubit Pauli noise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PauliChannel {
    pub p_x: f64,
    pub p_y: f64,
    pub p_z: f64,
}

impl PauliChannel {
    pub fn new(p_x: f64, p_y: f64, p_z: f64) -> Result<Self> {
        for (name, p) in [("p_x", p_x), ("p_y", p_y), ("p_z", p_z)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidChannel(format!("{name} = {p} not in [0, 1]")));
            }
        }
        let total = p_x + p_y + p_z;
        if total > 1.0 + SUM_TOLERANCE {
            return Err(Error::InvalidChannel(format!(
                "p_x + p_y + p_z = {total} exceeds 1"
            )));
        }
        Ok(Self { p_x, p_y, p_z })
    }

    /// `p_x = p_y = p_z = p/3`.
    pub fn depolarizing(p: f64) -> Result<Self> {
        Self::new(p / 3.0, p / 3.0, p / 3.0)
    }

    pub fn noiseless() -> Self {
        Self {
            p_x: 0.0,
            p_y: 0.0,
            p_z: 0.0,
        }
    }

    pub fn p_i(&self) -> f64 {
        (1.0 - self.p_x - self.p_y - self.p_z).max(0.0)
    }

    fn letter(&self, u: f64) -> PauliLetter {
        if u < self.p_x {
            PauliLetter::X
        } else if u < self.p_x + self.p_y {
            PauliLetter::Y
        } else if u < self.p_x + self.p_y + self.p_z {
            PauliLetter::Z
        } else {
            PauliLetter::I
        }
    }
}

/// One uniform draw per qubit, mapped to `X`, `Y`, `Z` or `I` by
/// cumulative probability.
pub fn sample_error<R: Rng + ?Sized>(
    channel: &PauliChannel,
    n: usize,
    rng: &mut R,
) -> PauliOperator {
    let mut x = BitVector::zeros(n);
    let mut z = BitVector::zeros(n);
    for q in 0..n {
        let (bx, bz) = channel.letter(rng.gen::<f64>()).bits();
        if bx {
            x.set(q, true);
        }
        if bz {
            z.set(q, true);
        }
    }
    PauliOperator::from_xz(x, z).expect("equal lengths")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Coverage {
    Full,
    Partial { uncovered: u64 },
}

/// Syndrome → minimum-weight error.
#[derive(Clone, Debug)]
pub struct DecoderTable {
    entries: HashMap<Syndrome, PauliOperator>,
    coverage: Coverage,
    max_weight: usize,
}

impl DecoderTable {
    pub fn get(&self, s: &Syndrome) -> Option<&PauliOperator> {
        self.entries.get(s)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coverage(&self) -> Coverage {
        self.coverage
    }

    /// Largest representative weight stored.
    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Syndrome, &PauliOperator)> {
        self.entries.iter()
    }
}

/// Builds the table weight level by weight level, keeping the first error
/// seen for each syndrome. Stops once every syndrome is covered or after
/// `max_weight` (default `n`).
pub fn build_table(code: &StabilizerCode, max_weight: Option<usize>) -> DecoderTable {
    let n = code.n();
    let limit = max_weight.unwrap_or(n).min(n);
    let gens = code.num_generators();
    let total: Option<u64> = (gens < 64).then(|| 1u64 << gens);
    let mut entries = HashMap::new();
    let mut reached = 0;
    'levels: for w in 0..=limit {
        for e in ErrorEnumerator::exact_weight(n, w) {
            let s = code.syndrome_unchecked(&e);
            entries.entry(s).or_insert_with(|| {
                reached = w;
                e
            });
            if total == Some(entries.len() as u64) {
                break 'levels;
            }
        }
    }
    let coverage = match total {
        Some(t) if t == entries.len() as u64 => Coverage::Full,
        Some(t) => Coverage::Partial {
            uncovered: t - entries.len() as u64,
        },
        None => Coverage::Partial {
            uncovered: u64::MAX,
        },
    };
    DecoderTable {
        entries,
        coverage,
        max_weight: reached,
    }
}

/// Wilson score interval at 95% confidence.
pub fn wilson_interval(failures: u64, trials: u64) -> (f64, f64) {
    const Z: f64 = 1.959_963_984_540_054;
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub trials: u64,
    pub logical_failures: u64,
    pub rate: f64,
    pub ci95: (f64, f64),
    pub seed: u64,
    /// Trials whose correction differed from the sampled error at all,
    /// counted only when requested.
    pub exact_mismatches: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SimOptions {
    /// Worker threads; `0` or `1` runs on the calling thread.
    pub workers: usize,
    /// Also count corrections that differ from the error (`R ≠ E`).
    pub strict: bool,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    failures: u64,
    mismatches: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally {
            failures: self.failures + o.failures,
            mismatches: self.mismatches + o.mismatches,
        }
    }
}

/// RNG for trial `index`: stream `index` of the seeded ChaCha generator.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng.set_word_pos(0);
    rng
}

fn run_range(
    code: &StabilizerCode,
    table: &DecoderTable,
    channel: &PauliChannel,
    seed: u64,
    range: std::ops::Range<u64>,
) -> Tally {
    let n = code.n();
    let mut tally = Tally::default();
    for i in range {
        let mut rng = trial_rng(seed, i);
        let e = sample_error(channel, n, &mut rng);
        let s = code.syndrome_unchecked(&e);
        match table.get(&s) {
            Some(r) => {
                let mut residual = r.clone();
                residual.mul_assign(&e);
                debug_assert!(code.syndrome_unchecked(&residual).is_zero());
                if !code
                    .stabilizer_span()
                    .contains(&residual.symplectic().concatenated())
                {
                    tally.failures += 1;
                }
                if !residual.is_identity() {
                    tally.mismatches += 1;
                }
            }
            None => {
                tally.failures += 1;
                tally.mismatches += 1;
            }
        }
    }
    tally
}

/// Runs `trials` trials with the default single-threaded options.
pub fn run(
    code: &StabilizerCode,
    channel: &PauliChannel,
    trials: u64,
    seed: u64,
) -> Result<SimResult> {
    run_with(code, channel, trials, seed, &SimOptions::default())
}

pub fn run_with(
    code: &StabilizerCode,
    channel: &PauliChannel,
    trials: u64,
    seed: u64,
    opts: &SimOptions,
) -> Result<SimResult> {
    let table = build_table(code, None);
    run_with_table(code, &table, channel, trials, seed, opts)
}

/// Same as [`run_with`] but reuses a prebuilt table.
pub fn run_with_table(
    code: &StabilizerCode,
    table: &DecoderTable,
    channel: &PauliChannel,
    trials: u64,
    seed: u64,
    opts: &SimOptions,
) -> Result<SimResult> {
    let channel = PauliChannel::new(channel.p_x, channel.p_y, channel.p_z)?;
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let tally = tally_trials(code, table, &channel, trials, seed, opts.workers);
    Ok(SimResult {
        trials,
        logical_failures: tally.failures,
        rate: tally.failures as f64 / trials as f64,
        ci95: wilson_interval(tally.failures, trials),
        seed,
        exact_mismatches: opts.strict.then_some(tally.mismatches),
    })
}

#[cfg(feature = "parallel")]
fn tally_trials(
    code: &StabilizerCode,
    table: &DecoderTable,
    channel: &PauliChannel,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Tally {
    use rayon::prelude::*;
    if workers <= 1 {
        return run_range(code, table, channel, seed, 0..trials);
    }
    let chunk = trials.div_ceil(workers as u64 * 4).max(1);
    let chunks: Vec<std::ops::Range<u64>> = (0..trials)
        .step_by(chunk as usize)
        .map(|s| s..(s + chunk).min(trials))
        .collect();
    let work = || {
        chunks
            .par_iter()
            .map(|r| run_range(code, table, channel, seed, r.clone()))
            .reduce(Tally::default, |a, b| a + b)
    };
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(work),
        Err(_) => run_range(code, table, channel, seed, 0..trials),
    }
}

#[cfg(not(feature = "parallel"))]
fn tally_trials(
    code: &StabilizerCode,
    table: &DecoderTable,
    channel: &PauliChannel,
    trials: u64,
    seed: u64,
    _workers: usize,
) -> Tally {
    run_range(code, table, channel, seed, 0..trials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes;

    #[test]
    fn channel_validation() {
        assert!(PauliChannel::new(0.5, 0.5, 0.1).is_err());
        assert!(PauliChannel::new(-0.1, 0.0, 0.0).is_err());
        assert!(PauliChannel::new(1.0, 0.0, 0.0).is_ok());
        let d = PauliChannel::depolarizing(0.3).unwrap();
        assert!((d.p_i() - 0.7).abs() < 1e-12);
    }

    #[test]
    fn zero_syndrome_maps_to_identity() {
        let table = build_table(&codes::steane(), None);
        assert!(table.get(&Syndrome::zeros(6)).unwrap().is_identity());
    }

    #[test]
    fn steane_table_full_at_weight_three() {
        let steane = codes::steane();
        let table = build_table(&steane, Some(3));
        assert_eq!(table.coverage(), Coverage::Full);
        assert_eq!(table.len(), 64);
        let weight_one = table.iter().filter(|(_, e)| e.weight() == 1).count();
        assert_eq!(weight_one, 21);
        for (s, e) in table.iter() {
            assert_eq!(&steane.syndrome(e).unwrap(), s);
        }
    }

    #[test]
    fn five_qubit_table_full_at_weight_one() {
        let table = build_table(&codes::five_qubit(), Some(1));
        assert_eq!(table.coverage(), Coverage::Full);
        assert_eq!(table.len(), 16);
        assert_eq!(table.max_weight(), 1);
    }

    #[test]
    fn partial_table_reports_uncovered() {
        let table = build_table(&codes::shor(), Some(1));
        assert_eq!(
            table.coverage(),
            Coverage::Partial {
                uncovered: 256 - table.len() as u64
            }
        );
    }

    #[test]
    fn sampling_extremes() {
        let mut rng = trial_rng(1, 0);
        for _ in 0..100 {
            assert!(sample_error(&PauliChannel::noiseless(), 5, &mut rng).is_identity());
        }
        let all_x = PauliChannel::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(sample_error(&all_x, 4, &mut rng).to_string(), "XXXX");
    }

    #[test]
    fn noiseless_run_never_fails() {
        let r = run(&codes::shor(), &PauliChannel::noiseless(), 100, 7).unwrap();
        assert_eq!(r.logical_failures, 0);
        assert_eq!(r.rate, 0.0);
    }

    #[test]
    fn deterministic_all_x_is_corrected() {
        // All-X on the bit-flip code has zero syndrome and is XXX, a logical.
        // On Steane, X^7 is also logical; use a code where all-X is a
        // stabilizer instead.
        let code = StabilizerCode::from_strings(&["XXXX", "ZZZZ"]).unwrap();
        let ch = PauliChannel::new(1.0, 0.0, 0.0).unwrap();
        let r = run(&code, &ch, 50, 3).unwrap();
        assert_eq!(r.rate, 0.0);
    }

    #[test]
    fn errors_rejected() {
        let code = codes::steane();
        assert_eq!(
            run(&code, &PauliChannel::noiseless(), 0, 1),
            Err(Error::ZeroTrials)
        );
        let bad = PauliChannel {
            p_x: 0.9,
            p_y: 0.9,
            p_z: 0.0,
        };
        assert!(matches!(
            run(&code, &bad, 10, 1),
            Err(Error::InvalidChannel(_))
        ));
    }

    #[test]
    fn wilson_known_values() {
        let (lo, hi) = wilson_interval(0, 100);
        assert!(lo.abs() < 1e-12);
        assert!((hi - 0.036_994).abs() < 1e-5);
        let (lo, hi) = wilson_interval(50, 100);
        assert!((lo - 0.403_831).abs() < 1e-5);
        assert!((hi - 0.596_169).abs() < 1e-5);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let code = codes::steane();
        let ch = PauliChannel::depolarizing(0.1).unwrap();
        let one = run_with(
            &code,
            &ch,
            5000,
            11,
            &SimOptions {
                workers: 1,
                strict: true,
            },
        )
        .unwrap();
        let four = run_with(
            &code,
            &ch,
            5000,
            11,
            &SimOptions {
                workers: 4,
                strict: true,
            },
        )
        .unwrap();
        assert_eq!(one, four);
    }
}
