//! Exact counting: involutions, factorials and the non-Hermitian fraction.
//!
//! Nothing here touches floating point. The involution numbers `a[M]` (the
//! number of self-inverse permutations of `M` points) are sometimes called
//! "alternating permutations" in the physics literature; the values are the
//! involution numbers 1, 2, 4, 10, 26, 76, …, not the Euler zigzag numbers.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{Error, Result, SizeCap};

pub type BigCount = BigUint;

/// Largest qubit count accepted by [`non_hermitian_fraction`].
pub const MAX_QUBITS: u32 = 64;

/// Largest qubit count whose exact counts are computed without an override.
/// `(2¹⁶)!` already has about 287 000 decimal digits.
pub const EXACT_QUBIT_CAP: u32 = 16;

/// Reduced nonnegative rational.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(Ratio<BigUint>);

impl ExactRatio {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: BigCount, denominator: BigCount) -> Self {
        ExactRatio(Ratio::new(numerator, denominator))
    }

    pub fn zero() -> Self {
        ExactRatio::new(BigCount::zero(), BigCount::one())
    }

    pub fn numerator(&self) -> &BigCount {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigCount {
        self.0.denom()
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

/// `a[m]` via `a[m] = a[m−1] + (m−1)·a[m−2]`, `a[0] = a[1] = 1`.
pub fn involution_count(m: usize) -> BigCount {
    let (mut prev, mut current) = (BigCount::one(), BigCount::one());
    for k in 2..=m {
        let next = &current + &prev * (k - 1);
        prev = std::mem::replace(&mut current, next);
    }
    current
}

pub fn factorial(m: usize) -> BigCount {
    (2..=m).fold(BigCount::one(), |acc, k| acc * k)
}

/// `((2ⁿ)! − a[2ⁿ]) / (2ⁿ)!` as a reduced fraction.
pub fn non_hermitian_fraction(n_qubits: u32) -> Result<ExactRatio> {
    non_hermitian_fraction_with_cap(n_qubits, SizeCap::Default)
}

pub fn non_hermitian_fraction_with_cap(n_qubits: u32, cap: SizeCap) -> Result<ExactRatio> {
    let dimension = register_dimension(n_qubits, cap)?;
    let total = factorial(dimension);
    let hermitian = involution_count(dimension);
    Ok(ExactRatio::new(&total - hermitian, total))
}

/// `2ⁿ` after checking `1 ≤ n ≤ 64` and the exact-computation cap.
pub(crate) fn register_dimension(n_qubits: u32, cap: SizeCap) -> Result<usize> {
    if !(1..=MAX_QUBITS).contains(&n_qubits) {
        return Err(Error::InvalidArgument(format!(
            "qubit count {n_qubits} is outside 1..={MAX_QUBITS}"
        )));
    }
    cap.check(
        "exact gate count (qubits)",
        n_qubits as usize,
        EXACT_QUBIT_CAP as usize,
    )?;
    1usize
        .checked_shl(n_qubits)
        .filter(|_| n_qubits < usize::BITS)
        .ok_or_else(|| Error::InvalidArgument(format!("2^{n_qubits} overflows the index type")))
}

/// `ratio × 100` with `decimals` places, rounded half to even, plus `%`.
pub fn render_percent(ratio: &ExactRatio, decimals: usize) -> String {
    let scale = BigUint::from(10u32).pow(decimals as u32) * 100u32;
    let (quotient, remainder) = (ratio.numerator() * scale).div_rem(ratio.denominator());
    let twice = remainder << 1u32;
    let quotient = match twice.cmp(ratio.denominator()) {
        std::cmp::Ordering::Greater => quotient + 1u32,
        std::cmp::Ordering::Equal if quotient.is_odd() => quotient + 1u32,
        _ => quotient,
    };

    let digits = quotient.to_str_radix(10);
    if decimals == 0 {
        return format!("{digits}%");
    }
    let padded = format!("{digits:0>width$}", width = decimals + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - decimals);
    format!("{int_part}.{frac_part}%")
}
