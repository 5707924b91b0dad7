//! Hermitian and separable/entangled classification of permutation gates.
//!
//! Wire `w` is bit `w` of a basis index (wire 0 is the least significant
//! bit). A gate is separable across a [`Bipartition`] when it acts as
//! `U_A ⊗ U_B`, i.e. it sends `(i, j)` to `(A(i), B(j))` where `i` collects the
//! bits on block A and `j` the bits on block B. With more than two wires a
//! gate counts as separable if it splits across at least one bipartition.

use num_bigint::BigUint;

use crate::combinatorics::{BigCount, ExactRatio};
use crate::perm::Permutation;
use crate::{Error, Result, SizeCap};

/// Default qubit cap for exhaustive census work (`8! = 40320` gates).
pub const CENSUS_QUBIT_CAP: u32 = 3;

/// Hermitian test for permutation gates. Permutation matrices are real, so
/// the adjoint is the transpose and Hermiticity is the involution condition.
pub fn is_hermitian(p: &Permutation) -> bool {
    p.is_involution()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    n_wires: usize,
    block_a: Vec<usize>,
    block_b: Vec<usize>,
}

impl Bipartition {
    pub fn new(n_wires: usize, block_a: &[usize]) -> Result<Self> {
        if n_wires < 2 {
            return Err(Error::InvalidArgument(format!(
                "a bipartition needs at least two wires, got {n_wires}"
            )));
        }
        let mut mask = 0usize;
        for &w in block_a {
            if w >= n_wires {
                return Err(Error::InvalidArgument(format!(
                    "wire {w} out of range for {n_wires} wires"
                )));
            }
            mask |= 1 << w;
        }
        Self::from_mask(n_wires, mask)
    }

    fn from_mask(n_wires: usize, mask: usize) -> Result<Self> {
        let full = (1usize << n_wires) - 1;
        if mask == 0 || mask == full {
            return Err(Error::InvalidArgument(
                "block A must be a nonempty proper subset of the wires".into(),
            ));
        }
        let (block_a, block_b) = (0..n_wires).partition(|w| mask & (1 << w) != 0);
        Ok(Bipartition {
            n_wires,
            block_a,
            block_b,
        })
    }

    /// Every unordered bipartition of `n_wires` wires, once each; block A
    /// never contains the highest wire.
    pub fn all(n_wires: usize) -> Vec<Bipartition> {
        if n_wires < 2 {
            return Vec::new();
        }
        (1..1usize << (n_wires - 1))
            .map(|mask| Self::from_mask(n_wires, mask).expect("proper nonempty mask"))
            .collect()
    }

    pub fn n_wires(&self) -> usize {
        self.n_wires
    }

    pub fn block_a(&self) -> &[usize] {
        &self.block_a
    }

    pub fn block_b(&self) -> &[usize] {
        &self.block_b
    }

    /// Composite basis index from factor indices `(i, j)`.
    pub fn join(&self, i: usize, j: usize) -> usize {
        scatter(i, &self.block_a) | scatter(j, &self.block_b)
    }

    /// Factor indices `(i, j)` of a composite basis index.
    pub fn split(&self, x: usize) -> (usize, usize) {
        (gather(x, &self.block_a), gather(x, &self.block_b))
    }
}

fn scatter(value: usize, wires: &[usize]) -> usize {
    wires
        .iter()
        .enumerate()
        .fold(0, |acc, (bit, &w)| acc | (((value >> bit) & 1) << w))
}

fn gather(x: usize, wires: &[usize]) -> usize {
    wires
        .iter()
        .enumerate()
        .fold(0, |acc, (bit, &w)| acc | (((x >> w) & 1) << bit))
}

/// `A ⊗ B` laid out according to `split`.
pub fn tensor(split: &Bipartition, a: &Permutation, b: &Permutation) -> Result<Permutation> {
    let size_a = 1 << split.block_a.len();
    let size_b = 1 << split.block_b.len();
    if a.size() != size_a {
        return Err(Error::DimensionMismatch {
            expected: size_a,
            found: a.size(),
        });
    }
    if b.size() != size_b {
        return Err(Error::DimensionMismatch {
            expected: size_b,
            found: b.size(),
        });
    }
    let images = (0..1usize << split.n_wires)
        .map(|x| {
            let (i, j) = split.split(x);
            split.join(a.apply(i), b.apply(j))
        })
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// Factors `(A, B)` with `p = A ⊗ B` across `split`, if they exist.
///
/// The candidates are read off the slices `p(i, 0)` and `p(0, j)` and then
/// checked against every composite index.
pub fn is_separable(
    p: &Permutation,
    split: &Bipartition,
) -> Result<Option<(Permutation, Permutation)>> {
    let dimension = 1usize << split.n_wires;
    if p.size() != dimension {
        return Err(Error::DimensionMismatch {
            expected: dimension,
            found: p.size(),
        });
    }
    let size_a = 1usize << split.block_a.len();
    let size_b = 1usize << split.block_b.len();
    let a: Vec<usize> = (0..size_a)
        .map(|i| split.split(p.apply(split.join(i, 0))).0)
        .collect();
    let b: Vec<usize> = (0..size_b)
        .map(|j| split.split(p.apply(split.join(0, j))).1)
        .collect();

    let product_law = (0..dimension).all(|x| {
        let (i, j) = split.split(x);
        p.apply(x) == split.join(a[i], b[j])
    });
    if !product_law {
        return Ok(None);
    }
    // The product law on a bijection forces both factors to be bijections.
    Ok(Some((
        Permutation::from_images(a)?,
        Permutation::from_images(b)?,
    )))
}

/// Separable across some bipartition of `n_wires`; single-wire gates are
/// trivially separable.
pub fn is_separable_any(p: &Permutation, n_wires: usize) -> Result<bool> {
    if n_wires < 2 {
        let dimension = 1usize << n_wires;
        if p.size() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: p.size(),
            });
        }
        return Ok(true);
    }
    for split in Bipartition::all(n_wires) {
        if is_separable(p, &split)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateClassification {
    pub hermitian: bool,
    pub separable_factors: Option<(Permutation, Permutation)>,
}

pub fn classify(p: &Permutation, split: &Bipartition) -> Result<GateClassification> {
    Ok(GateClassification {
        hermitian: is_hermitian(p),
        separable_factors: is_separable(p, split)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n_qubits: u32,
    pub total: BigCount,
    pub hermitian_count: BigCount,
    pub non_hermitian_count: BigCount,
    pub separable_count: BigCount,
    pub entangled_count: BigCount,
    pub entangled_fraction: ExactRatio,
    pub non_hermitian_fraction: ExactRatio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateFilter {
    All,
    Hermitian,
    NonHermitian,
    Separable,
    Entangled,
}

fn census_dimension(n_qubits: u32, cap: SizeCap) -> Result<usize> {
    if n_qubits == 0 {
        return Err(Error::InvalidArgument(
            "qubit count must be at least 1".into(),
        ));
    }
    cap.check(
        "census (qubits)",
        n_qubits as usize,
        CENSUS_QUBIT_CAP as usize,
    )?;
    crate::combinatorics::register_dimension(n_qubits, SizeCap::Override)
}

/// Exhaustive census over every gate on `n_qubits` wires.
pub fn classify_all(n_qubits: u32, cap: SizeCap) -> Result<CensusReport> {
    let dimension = census_dimension(n_qubits, cap)?;
    let (mut total, mut hermitian, mut separable) = (0u64, 0u64, 0u64);
    for p in Permutation::enumerate(dimension, SizeCap::Override)? {
        total += 1;
        hermitian += u64::from(is_hermitian(&p));
        separable += u64::from(is_separable_any(&p, n_qubits as usize)?);
    }
    let total_big = BigUint::from(total);
    Ok(CensusReport {
        n_qubits,
        total: total_big.clone(),
        hermitian_count: hermitian.into(),
        non_hermitian_count: (total - hermitian).into(),
        separable_count: separable.into(),
        entangled_count: (total - separable).into(),
        entangled_fraction: ExactRatio::new((total - separable).into(), total_big.clone()),
        non_hermitian_fraction: ExactRatio::new((total - hermitian).into(), total_big),
    })
}

/// Gates of `S_{2ⁿ}` matching `filter`, in lexicographic order of images.
pub fn list_gates(n_qubits: u32, filter: GateFilter, cap: SizeCap) -> Result<Vec<Permutation>> {
    let dimension = census_dimension(n_qubits, cap)?;
    let n_wires = n_qubits as usize;
    let mut gates = Vec::new();
    for p in Permutation::enumerate(dimension, SizeCap::Override)? {
        let keep = match filter {
            GateFilter::All => true,
            GateFilter::Hermitian => is_hermitian(&p),
            GateFilter::NonHermitian => !is_hermitian(&p),
            GateFilter::Separable => is_separable_any(&p, n_wires)?,
            GateFilter::Entangled => !is_separable_any(&p, n_wires)?,
        };
        if keep {
            gates.push(p);
        }
    }
    Ok(gates)
}
