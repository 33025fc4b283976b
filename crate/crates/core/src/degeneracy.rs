//! Degenerate versus nondegenerate, for Pauli errors of weight at most `t`.
//!
//! A code is nondegenerate at `t` when the syndrome map is injective on the
//! set of Paulis of weight `≤ t`, identity included. A weight-`≤ t`
//! stabilizer element therefore counts as a collision with the identity.
//!
//! The exact test enumerates the set and hashes syndromes. Cheaper
//! column-independence tests on the check matrix give one-sided answers:
//!
//! * every `4t` columns of `[H_X | H_Z]` independent ⇒ nondegenerate;
//! * some `2t` columns of `[H_X | H_Z]` dependent ⇒ degenerate;
//! * for CSS codes: nondegenerate ⇔ every `2t` columns of each block
//!   independent;
//! * in standard form with `r = n − k`, a column of `B` of weight `≤ t − 1`
//!   ⇒ degenerate.
//!
//! The `4t` test has no converse. A dependent set of `4t` columns splits
//! into the supports of two Paulis with equal syndromes, but one of them may
//! have weight above `t`, so nondegenerate codes can have `4t` dependent
//! columns (the Steane code at `t = 1` is one).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::code::StabilizerCode;
use crate::enumerate::{alternate_count, correctable_count, ErrorEnumerator};
use crate::error::{Error, Result};
use crate::gf2::{BitVector, Gf2Matrix, IncrementalBasis};
use crate::pauli::PauliOperator;
use crate::standard_form::StandardForm;

/// Default cap on the number of column subsets visited by a search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Degenerate,
    Nondegenerate,
}

/// Two distinct errors of weight `≤ t` with equal syndromes. `e` precedes
/// `f` in enumeration order; `e` is the identity when `f` has zero syndrome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub e: PauliOperator,
    pub f: PauliOperator,
    /// Whether `e·f` is a stabilizer element (a harmless collision) rather
    /// than a logical operator.
    pub product_in_stabilizer: bool,
}

/// Which column block a subset search runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnBlock {
    /// All `2n` columns of `[H_X | H_Z]`; `0..n` are `H_X`, `n..2n` are `H_Z`.
    Full,
    XOnly,
    ZOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome", content = "subset")]
pub enum SubsetCheck {
    AllIndependent,
    /// A dependent subset of the requested size (0-based column indices).
    Dependent(Vec<usize>),
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    ProvenNondegenerate,
    ProvenDegenerate,
    Inconclusive,
    NotCss,
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Every `4t` columns of `[H_X | H_Z]` independent.
    #[serde(rename = "sufficient_4t")]
    Sufficient4t,
    /// Some `2t` columns of `[H_X | H_Z]` dependent.
    #[serde(rename = "necessary_2t")]
    Necessary2t,
    /// Block-wise `2t` independence for CSS codes.
    CssBlocks,
    /// Light column of `B` in standard form.
    StandardFormShortcut,
    /// Injectivity of the syndrome map by enumeration.
    ExactInjectivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionRecord {
    pub criterion: Criterion,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub t: usize,
    pub witness: Option<Witness>,
    pub criteria: Vec<CriterionRecord>,
    /// Distinct nonzero syndromes seen among the enumerated errors.
    pub syndrome_count: u64,
    /// `Σ_{i=1}^{t} C(n,i)·3^i`.
    pub expected_count: u64,
    /// `Σ_{j=0}^{t} C(n,j)·Σ_{l=1}^{t−j} C(2n−2j,l)`, for reference only.
    pub alternate_count: u64,
    /// Whether the whole error set was enumerated. When false the scan
    /// stopped at the first collision and `syndrome_count` is partial.
    pub exhaustive: bool,
    /// Errors whose syndrome was zero or already taken (exhaustive mode).
    pub collisions: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Stop at the first collision.
    FirstCollision,
    /// Enumerate everything and count collisions.
    Exhaustive,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub mode: ScanMode,
    /// Also evaluate the column-independence criteria.
    pub run_criteria: bool,
    pub budget: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            mode: ScanMode::FirstCollision,
            run_criteria: true,
            budget: DEFAULT_BUDGET,
        }
    }
}

fn check_t(code: &StabilizerCode, t: usize) -> Result<()> {
    if t < 1 || t > code.n() {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 1,
            max: code.n(),
        });
    }
    Ok(())
}

/// Classifies with default options.
pub fn classify(code: &StabilizerCode, t: usize) -> Result<ClassificationReport> {
    classify_with(code, t, &ClassifyOptions::default())
}

/// Enumerates every Pauli of weight `1..=t` and looks for two with the same
/// syndrome, or one with the zero syndrome.
///
/// Fails with [`Error::BudgetExhausted`] when there are more than
/// `opts.budget` such errors.
pub fn classify_with(
    code: &StabilizerCode,
    t: usize,
    opts: &ClassifyOptions,
) -> Result<ClassificationReport> {
    check_t(code, t)?;
    let n = code.n();
    if correctable_count(n, t) > opts.budget {
        return Err(Error::BudgetExhausted {
            budget: opts.budget,
        });
    }
    let identity = PauliOperator::identity(n);
    let mut seen: HashMap<BitVector, PauliOperator> = HashMap::new();
    let mut witness = None;
    let mut collisions = 0u64;
    let mut exhaustive = true;

    for f in ErrorEnumerator::new(n, t)? {
        let s = code.syndrome_unchecked(&f);
        let earlier = if s.is_zero() {
            Some(identity.clone())
        } else if let Some(e) = seen.get(s.bits()) {
            Some(e.clone())
        } else {
            seen.insert(s.bits().clone(), f.clone());
            None
        };
        if let Some(e) = earlier {
            collisions += 1;
            if witness.is_none() {
                let product = e.product(&f)?;
                witness = Some(Witness {
                    product_in_stabilizer: code.in_stabilizer(&product)?,
                    e,
                    f,
                });
            }
            if opts.mode == ScanMode::FirstCollision {
                exhaustive = false;
                break;
            }
        }
    }

    let verdict = if witness.is_some() {
        Verdict::Degenerate
    } else {
        Verdict::Nondegenerate
    };
    let mut criteria = Vec::new();
    if opts.run_criteria {
        criteria = evaluate_criteria(code, t, opts.budget);
    }
    criteria.push(CriterionRecord {
        criterion: Criterion::ExactInjectivity,
        outcome: match verdict {
            Verdict::Degenerate => Outcome::ProvenDegenerate,
            Verdict::Nondegenerate => Outcome::ProvenNondegenerate,
        },
    });

    Ok(ClassificationReport {
        verdict,
        t,
        witness,
        criteria,
        syndrome_count: seen.len() as u64,
        expected_count: correctable_count(n, t),
        alternate_count: alternate_count(n, t),
        exhaustive,
        collisions: exhaustive.then_some(collisions),
    })
}

fn evaluate_criteria(code: &StabilizerCode, t: usize, budget: u64) -> Vec<CriterionRecord> {
    let mut out = Vec::new();
    if let Ok(o) = sufficient_nondegenerate(code, t, budget) {
        out.push(CriterionRecord {
            criterion: Criterion::Sufficient4t,
            outcome: o,
        });
    }
    if let Ok(o) = necessary_check(code, t, budget) {
        out.push(CriterionRecord {
            criterion: Criterion::Necessary2t,
            outcome: o,
        });
    }
    out.push(CriterionRecord {
        criterion: Criterion::CssBlocks,
        outcome: css_nondegeneracy(code, t, budget),
    });
    let sf = crate::standard_form::standard_form(code);
    out.push(CriterionRecord {
        criterion: Criterion::StandardFormShortcut,
        outcome: standard_form_shortcut(&sf, t),
    });
    out
}

fn block_columns(code: &StabilizerCode, which: ColumnBlock) -> Vec<BitVector> {
    let h = code.check_matrix();
    match which {
        ColumnBlock::Full => h.matrix().columns(),
        ColumnBlock::XOnly => h.h_x().columns(),
        ColumnBlock::ZOnly => h.h_z().columns(),
    }
}

/// Searches for a linearly dependent subset of at most `max_size` columns.
///
/// Depth-first over index combinations in lexicographic order, growing an
/// echelon basis; a branch stops as soon as its newest column is dependent,
/// since every superset is dependent too. `visited` counts subsets tested.
fn find_dependent(
    cols: &[BitVector],
    max_size: usize,
    budget: u64,
    visited: &mut u64,
) -> SubsetCheck {
    fn go(
        cols: &[BitVector],
        max_size: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        basis: &mut IncrementalBasis,
        budget: u64,
        visited: &mut u64,
    ) -> Option<SubsetCheck> {
        for c in start..cols.len() {
            if *visited >= budget {
                return Some(SubsetCheck::BudgetExhausted);
            }
            *visited += 1;
            let dim = basis.dim();
            if !basis.insert(&cols[c]) {
                let mut found = chosen.clone();
                found.push(c);
                return Some(SubsetCheck::Dependent(found));
            }
            if chosen.len() + 1 < max_size {
                chosen.push(c);
                let r = go(cols, max_size, c + 1, chosen, basis, budget, visited);
                chosen.pop();
                if r.is_some() {
                    return r;
                }
            }
            basis.truncate(dim);
        }
        None
    }
    let rows = cols.first().map_or(0, BitVector::len);
    let mut basis = IncrementalBasis::new(rows);
    go(
        cols,
        max_size,
        0,
        &mut Vec::new(),
        &mut basis,
        budget,
        visited,
    )
    .unwrap_or(SubsetCheck::AllIndependent)
}

/// Pads a dependent subset with the smallest unused indices up to `size`.
fn pad_subset(mut subset: Vec<usize>, size: usize) -> Vec<usize> {
    let mut next = 0;
    while subset.len() < size {
        if !subset.contains(&next) {
            subset.push(next);
        }
        next += 1;
    }
    subset.sort_unstable();
    subset
}

/// Whether every `m`-subset of columns of `matrix` is independent.
pub fn columns_all_independent(matrix: &Gf2Matrix, m: usize, budget: u64) -> Result<SubsetCheck> {
    if m < 1 || m > matrix.cols() {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            min: 1,
            max: matrix.cols(),
        });
    }
    let cols = matrix.columns();
    let mut visited = 0;
    Ok(match find_dependent(&cols, m, budget, &mut visited) {
        SubsetCheck::Dependent(s) => SubsetCheck::Dependent(pad_subset(s, m)),
        other => other,
    })
}

/// Whether every `m`-subset of columns of the selected block is independent.
pub fn all_subsets_independent(
    code: &StabilizerCode,
    m: usize,
    which: ColumnBlock,
    budget: u64,
) -> Result<SubsetCheck> {
    let cols = block_columns(code, which);
    let matrix = Gf2Matrix::from_rows(cols.first().map_or(0, BitVector::len), cols)
        .expect("uniform column length")
        .transpose();
    columns_all_independent(&matrix, m, budget)
}

/// Largest `m` such that every `m`-subset of the columns is independent.
pub fn max_independence_order(matrix: &Gf2Matrix, budget: u64) -> Result<usize> {
    let cols = matrix.columns();
    let mut visited = 0;
    for m in 1..=cols.len() {
        match find_dependent(&cols, m, budget, &mut visited) {
            SubsetCheck::AllIndependent => continue,
            SubsetCheck::Dependent(_) => return Ok(m - 1),
            SubsetCheck::BudgetExhausted => return Err(Error::BudgetExhausted { budget }),
        }
    }
    Ok(cols.len())
}

fn dependent_within(cols: &[BitVector], m: usize, budget: u64) -> SubsetCheck {
    let mut visited = 0;
    find_dependent(cols, m, budget, &mut visited)
}

/// One-sided test: every `4t` columns independent proves nondegeneracy.
/// Never returns a degenerate verdict.
pub fn sufficient_nondegenerate(code: &StabilizerCode, t: usize, budget: u64) -> Result<Outcome> {
    check_t(code, t)?;
    if 4 * t > 2 * code.n() {
        return Err(Error::OutOfRange {
            name: "4t",
            value: 4 * t,
            min: 4,
            max: 2 * code.n(),
        });
    }
    Ok(
        match dependent_within(&block_columns(code, ColumnBlock::Full), 4 * t, budget) {
            SubsetCheck::AllIndependent => Outcome::ProvenNondegenerate,
            SubsetCheck::Dependent(_) => Outcome::Inconclusive,
            SubsetCheck::BudgetExhausted => Outcome::BudgetExhausted,
        },
    )
}

/// One-sided test: some `2t` dependent columns prove degeneracy.
pub fn necessary_check(code: &StabilizerCode, t: usize, budget: u64) -> Result<Outcome> {
    check_t(code, t)?;
    Ok(
        match dependent_within(&block_columns(code, ColumnBlock::Full), 2 * t, budget) {
            SubsetCheck::AllIndependent => Outcome::Inconclusive,
            SubsetCheck::Dependent(_) => Outcome::ProvenDegenerate,
            SubsetCheck::BudgetExhausted => Outcome::BudgetExhausted,
        },
    )
}

/// Exact verdict for CSS codes from block-wise `2t` column independence.
///
/// Column dependencies are invariant under row operations, so the blocks of
/// the split form can be tested directly.
pub fn css_nondegeneracy(code: &StabilizerCode, t: usize, budget: u64) -> Outcome {
    let Some(split) = code.is_css() else {
        return Outcome::NotCss;
    };
    let mut degenerate = false;
    for block in [&split.x_block, &split.z_block] {
        match dependent_within(&block.columns(), 2 * t, budget) {
            SubsetCheck::AllIndependent => {}
            SubsetCheck::Dependent(_) => degenerate = true,
            SubsetCheck::BudgetExhausted => return Outcome::BudgetExhausted,
        }
    }
    if degenerate {
        Outcome::ProvenDegenerate
    } else {
        Outcome::ProvenNondegenerate
    }
}

/// With `r = n − k`, a column of `B` of weight `≤ t − 1` proves degeneracy:
/// `X_i` then shares its syndrome with a product of at most `t − 1` phase
/// flips.
pub fn standard_form_shortcut(sf: &StandardForm, t: usize) -> Outcome {
    if sf.r != sf.n - sf.k || t == 0 {
        return Outcome::Inconclusive;
    }
    let light = (0..sf.b.cols()).any(|c| sf.b.column(c).count_ones() < t);
    if light {
        Outcome::ProvenDegenerate
    } else {
        Outcome::Inconclusive
    }
}
