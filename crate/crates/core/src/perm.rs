//! Permutations of basis indices.
//!
//! A [`Permutation`] of size `M` stores `images[j]`, the 0-based output basis
//! index reached from input basis index `j`. Text uses the 1-based one-line
//! notation `(k,l,…,n)`: the entry `k` at 1-based position `i` says that input
//! `k−1` is sent to output `i−1`. So `(2,1,3,4)` exchanges the first two basis
//! states and `(1,2,4,3)` is CNOT with the control on the most significant bit.
//!
//! Composition reads right to left: `p.compose(&q)` applies `q` first.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Largest `M` that [`Permutation::enumerate`] accepts under [`SizeCap::Default`].
pub const ENUMERATION_CAP: usize = 12;

/// Whether exhaustive routines enforce their default size caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SizeCap {
    #[default]
    Default,
    Override,
}

impl SizeCap {
    pub(crate) fn check(self, what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if self == SizeCap::Default && requested > cap {
            return Err(Error::CapExceeded {
                what,
                requested,
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidDimension(0));
        }
        Ok(Permutation {
            images: (0..size).collect(),
        })
    }

    /// Builds a permutation from its image array, checking that it is a
    /// bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let size = images.len();
        if size == 0 {
            return Err(Error::InvalidDimension(0));
        }
        let mut seen = vec![false; size];
        for (j, &image) in images.iter().enumerate() {
            if image >= size {
                return Err(Error::NotABijection(format!(
                    "image {image} of index {j} is out of range 0..{size}"
                )));
            }
            if std::mem::replace(&mut seen[image], true) {
                return Err(Error::NotABijection(format!("image {image} appears twice")));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Output basis index for input basis index `index`.
    #[inline]
    pub fn apply(&self, index: usize) -> usize {
        self.images[index]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| i == j)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: other.size(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    /// `other ∘ self`: apply `self`, then `other`. Handy for left-to-right
    /// circuit order.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        other.compose(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (j, &i) in self.images.iter().enumerate() {
            images[i] = j;
        }
        Permutation { images }
    }

    /// Self-inverse test; for a permutation gate this is exactly Hermiticity.
    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, &i)| self.images[i] == j)
    }

    pub fn to_matrix(&self) -> PermutationMatrix {
        let size = self.size();
        let mut entries = vec![0u8; size * size];
        for (j, &i) in self.images.iter().enumerate() {
            entries[i * size + j] = 1;
        }
        PermutationMatrix { size, entries }
    }

    /// Lexicographic stream (by image array) over all of `S_size`.
    pub fn enumerate(size: usize, cap: SizeCap) -> Result<Lexicographic> {
        if size == 0 {
            return Err(Error::InvalidDimension(0));
        }
        cap.check("enumeration", size, ENUMERATION_CAP)?;
        Ok(Lexicographic {
            next: Some((0..size).collect()),
        })
    }
}

/// Parses one-line notation such as `(2,1,3,4)`.
pub fn parse_one_line(text: &str) -> Result<Permutation> {
    text.parse()
}

/// Renders one-line notation without spaces, e.g. `(2,1,3,4)`.
pub fn render_one_line(p: &Permutation) -> String {
    p.to_string()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(trimmed, "expected a parenthesized list like (2,1,3)"))?;
        let tokens: Vec<&str> = inner.split(',').map(str::trim).collect();
        let size = tokens.len();
        let mut images = vec![usize::MAX; size];
        for (position, token) in tokens.iter().enumerate() {
            if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(*token, "expected a positive integer"));
            }
            let entry: usize = token
                .parse()
                .map_err(|_| Error::parse(*token, "integer too large"))?;
            if entry == 0 || entry > size {
                return Err(Error::parse(
                    *token,
                    format!("entry out of range 1..={size}"),
                ));
            }
            if images[entry - 1] != usize::MAX {
                return Err(Error::parse(*token, "duplicate entry"));
            }
            images[entry - 1] = position;
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Position i holds the 1-based input index that lands on output i.
        let inverse = self.inverse();
        f.write_str("(")?;
        for (position, input) in inverse.images.iter().enumerate() {
            if position > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", input + 1)?;
        }
        f.write_str(")")
    }
}

/// Iterator behind [`Permutation::enumerate`].
#[derive(Debug, Clone)]
pub struct Lexicographic {
    next: Option<Vec<usize>>,
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        if advance(&mut successor) {
            self.next = Some(successor);
        }
        Some(Permutation { images: current })
    }
}

/// Steps to the next permutation in lexicographic order; false at the last one.
fn advance(images: &mut [usize]) -> bool {
    let Some(pivot) = images.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let swap_with = images
        .iter()
        .rposition(|&v| v > images[pivot])
        .expect("a larger element exists right of the pivot");
    images.swap(pivot, swap_with);
    images[pivot + 1..].reverse();
    true
}

/// Dense 0/1 matrix of a permutation, `entry(i, j) = 1` iff `images[j] = i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMatrix {
    size: usize,
    entries: Vec<u8>,
}

impl PermutationMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.entries.chunks(self.size)
    }

    pub fn transpose(&self) -> PermutationMatrix {
        let n = self.size;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        PermutationMatrix { size: n, entries }
    }

    /// Ordinary integer matrix product.
    pub fn multiply(&self, other: &PermutationMatrix) -> Result<PermutationMatrix> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                found: other.size,
            });
        }
        let n = self.size;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                if self.entries[i * n + k] == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += self.entries[i * n + k] * other.entries[k * n + j];
                }
            }
        }
        Ok(PermutationMatrix { size: n, entries })
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.size;
        (0..n).all(|i| (0..n).all(|j| self.entries[i * n + j] == u8::from(i == j)))
    }

    /// Exactly one 1 in every row and every column, zeros elsewhere.
    pub fn is_permutation_matrix(&self) -> bool {
        let n = self.size;
        let mut col_sums = vec![0u32; n];
        for row in self.rows() {
            if row.iter().any(|&e| e > 1) || row.iter().map(|&e| u32::from(e)).sum::<u32>() != 1 {
                return false;
            }
            for (j, &e) in row.iter().enumerate() {
                col_sums[j] += u32::from(e);
            }
        }
        col_sums.iter().all(|&s| s == 1)
    }

    /// `M · Mᵀ = I`.
    pub fn is_unitary(&self) -> bool {
        self.multiply(&self.transpose())
            .map(|p| p.is_identity())
            .unwrap_or(false)
    }
}
