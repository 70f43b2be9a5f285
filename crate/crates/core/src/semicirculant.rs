//! Semicirculant (upper-triangular Toeplitz) matrices and their powers.
//!
//! `[a0, a1, ..., a_{N-1}]` is the `N × N` matrix with `a_{j-i}` at `(i, j)`
//! for `j >= i` and zero below the diagonal, i.e. `a0·I + a1·J + ... +
//! a_{N-1}·J^{N-1}` for the nilpotent shift `J`. Powers stay semicirculant, so
//! a power is represented by its first row.

use num_bigint::BigInt;

use crate::dense::DenseMatrix;
use crate::formal::{build_sequence, FormalSequence};
use crate::{Error, Result, Ring};

#[derive(Debug, Clone)]
pub struct Semicirculant<R: Ring> {
    ring: R,
    row: Vec<R::Elem>,
}

/// First row of `A^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerResult<E> {
    pub row: Vec<E>,
    pub k: u64,
}

impl<R: Ring> Semicirculant<R> {
    pub fn new(ring: R, row: Vec<R::Elem>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::EmptyRow);
        }
        Ok(Self { ring, row })
    }

    /// `row` zero-padded (or truncated) to `order`.
    pub fn with_order(ring: R, mut row: Vec<R::Elem>, order: usize) -> Result<Self> {
        row.resize(order, ring.zero());
        Self::new(ring, row)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn row(&self) -> &[R::Elem] {
        &self.row
    }

    pub fn order(&self) -> usize {
        self.row.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> R::Elem {
        if j >= i {
            self.row[j - i].clone()
        } else {
            self.ring.zero()
        }
    }

    pub fn to_dense(&self) -> DenseMatrix<R::Elem> {
        DenseMatrix::from_fn(self.order(), |i, j| self.entry(i, j))
    }

    /// Formal entries for every position of the first row.
    pub fn formal_sequence(&self) -> FormalSequence<R::Elem> {
        build_sequence(
            &self.ring,
            self.row[0].clone(),
            &self.row[1..],
            self.order() - 1,
        )
    }

    /// `A^k` through the formal recursion.
    pub fn power(&self, k: u64) -> PowerResult<R::Elem> {
        let n = self.order();
        if k == 0 {
            return PowerResult {
                row: identity_row(&self.ring, n),
                k,
            };
        }
        let ring = &self.ring;
        // entries past k·s vanish when a_j = 0 for all j > s
        let support = self.row[1..]
            .iter()
            .rposition(|a| !ring.is_zero(a))
            .map_or(0, |i| i + 1);
        let limit = (support as u128 * k as u128).min(n as u128 - 1) as usize;
        let seq = build_sequence(ring, self.row[0].clone(), &self.row[1..], limit);
        let mut row = seq.evaluate_all(ring, k);
        row.resize(n, ring.zero());
        PowerResult { row, k }
    }

    /// `A^k` by `k` dense multiplications.
    pub fn naive_power(&self, k: u64) -> PowerResult<R::Elem> {
        let dense = self.to_dense().pow_repeated(&self.ring, k);
        PowerResult {
            row: dense.row(0).to_vec(),
            k,
        }
    }

    /// `A^k` for a row whose first `shift` entries are zero: powers the row
    /// shifted left by `shift` and moves entry `m` of that power to
    /// `m + k·shift`.
    pub fn shifted_power(&self, shift: usize, k: u64) -> Result<PowerResult<R::Elem>> {
        let n = self.order();
        if shift >= n {
            return Err(Error::InvalidShift { shift, order: n });
        }
        if let Some(index) = self.row[..shift].iter().position(|a| !self.ring.is_zero(a)) {
            return Err(Error::NonZeroLeading { index, shift });
        }
        let shifted = Semicirculant::new(self.ring.clone(), self.row[shift..].to_vec())?;
        let inner = shifted.power(k);
        let mut row = vec![self.ring.zero(); n];
        let offset = shift as u128 * k as u128;
        for (m, v) in inner.row.into_iter().enumerate() {
            let pos = m as u128 + offset;
            if pos >= n as u128 {
                break;
            }
            row[pos as usize] = v;
        }
        Ok(PowerResult { row, k })
    }

    /// [`Self::shifted_power`] with the shift set to the number of leading
    /// zeros. The zero matrix is handled directly.
    pub fn power_by_shift(&self, k: u64) -> PowerResult<R::Elem> {
        let ring = &self.ring;
        match self.row.iter().position(|a| !ring.is_zero(a)) {
            Some(shift) => self
                .shifted_power(shift, k)
                .expect("shift bounded by the first nonzero entry"),
            None => {
                let row = if k == 0 {
                    identity_row(ring, self.order())
                } else {
                    vec![ring.zero(); self.order()]
                };
                PowerResult { row, k }
            }
        }
    }

    /// The classical recursion
    /// `a_m(k) = (m·a0)^{-1} Σ_{i=1}^{m} (ik - m + i)·a_i·a_{m-i}(k)`.
    ///
    /// Returns `None` unless `a0` and every index `1..N` are units in the ring.
    pub fn division_recursion_power(&self, k: u64) -> Option<PowerResult<R::Elem>> {
        let ring = &self.ring;
        let n = self.order();
        let a0_inv = ring.try_invert(&self.row[0])?;
        let index_inv = (1..n)
            .map(|m| ring.try_invert(&ring.from_integer(&BigInt::from(m))))
            .collect::<Option<Vec<_>>>()?;

        let mut out = Vec::with_capacity(n);
        out.push(ring.pow(&self.row[0], k));
        let kk = BigInt::from(k);
        for m in 1..n {
            let mut acc = ring.zero();
            for i in 1..=m {
                let factor = BigInt::from(i) * &kk - BigInt::from(m) + BigInt::from(i);
                let term = ring.mul(
                    &ring.from_integer(&factor),
                    &ring.mul(&self.row[i], &out[m - i]),
                );
                acc = ring.add(&acc, &term);
            }
            let scale = ring.mul(&index_inv[m - 1], &a0_inv);
            out.push(ring.mul(&acc, &scale));
        }
        Some(PowerResult { row: out, k })
    }
}

fn identity_row<R: Ring>(ring: &R, n: usize) -> Vec<R::Elem> {
    let mut row = vec![ring.zero(); n];
    row[0] = ring.one();
    row
}

/// First row of the product of two semicirculant matrices of equal order.
pub fn product_row<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|m| {
            let mut acc = ring.zero();
            for i in 0..=m {
                acc = ring.add(&acc, &ring.mul(&a[i], &b[m - i]));
            }
            acc
        })
        .collect()
}
