//! r-circulant matrices `circ_{n,r}(c0, ..., c_{n-1})`.
//!
//! Entry `(i, j)` is `c_{j-i}` on and above the diagonal and `r·c_{n+j-i}`
//! below it; `r = 1` gives the ordinary circulant. The matrix equals
//! `P(E)` where `P(x) = c0 + c1·x + ... + c_{n-1}·x^{n-1}` and `E = E_{n,r}`
//! satisfies `E^n = r·I`. Hence `C^k = P(x)^k` reduced by `x^n -> r`: the
//! coefficient of `x^m` in `P^k` is entry `m` of the semicirculant power
//! `[c0, ..., c_{n-1}, 0, ...]^k`, and it lands in strip `m mod n` with
//! weight `r^⌊m/n⌋`.

use num_bigint::BigInt;

use crate::compositions::binomial;
use crate::dense::DenseMatrix;
use crate::semicirculant::Semicirculant;
use crate::{Error, Result, Ring};

#[derive(Debug, Clone)]
pub struct RCirculant<R: Ring> {
    ring: R,
    r: R::Elem,
    row: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for RCirculant<R> {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.row == other.row
    }
}

impl<R: Ring> RCirculant<R> {
    pub fn new(ring: R, r: R::Elem, row: Vec<R::Elem>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::EmptyRow);
        }
        Ok(Self { ring, r, row })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn r(&self) -> &R::Elem {
        &self.r
    }

    /// The strips `c0, ..., c_{n-1}`.
    pub fn row(&self) -> &[R::Elem] {
        &self.row
    }

    pub fn order(&self) -> usize {
        self.row.len()
    }

    pub fn to_dense(&self) -> DenseMatrix<R::Elem> {
        let n = self.order();
        DenseMatrix::from_fn(n, |i, j| {
            if j >= i {
                self.row[j - i].clone()
            } else {
                self.ring.mul(&self.r, &self.row[n + j - i])
            }
        })
    }

    /// `E_{n,r}^k = r^⌊k/n⌋ · E_{n,r}^(k mod n)`.
    pub fn basic_permutation_power(ring: R, n: usize, r: R::Elem, k: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyRow);
        }
        let mut row = vec![ring.zero(); n];
        row[(k % n as u64) as usize] = ring.pow(&r, k / n as u64);
        Self::new(ring, r, row)
    }

    /// `C^k` folded out of the semicirculant power of `[c0, ..., c_{n-1}]`.
    pub fn power_via_fold(&self, k: u64) -> Result<Self> {
        let ring = &self.ring;
        let n = self.order();
        // P^k has degree at most (n-1)k
        let order = (n as u64 - 1)
            .checked_mul(k)
            .and_then(|d| d.checked_add(1))
            .and_then(|d| usize::try_from(d).ok())
            .ok_or_else(|| Error::Overflow(format!("(n-1)k+1 for n={n}, k={k}")))?;
        let semi = Semicirculant::with_order(ring.clone(), self.row.clone(), order)?;
        let entries = semi.power(k).row;
        Ok(self.fold(entries))
    }

    /// Sums `entries[m] · r^⌊m/n⌋` into strip `m mod n`.
    fn fold(&self, entries: Vec<R::Elem>) -> Self {
        let ring = &self.ring;
        let n = self.order();
        let mut strips = vec![ring.zero(); n];
        let mut weight = ring.one();
        for (block_idx, block) in entries.chunks(n).enumerate() {
            if block_idx > 0 {
                weight = ring.mul(&weight, &self.r);
            }
            for (p, c) in block.iter().enumerate() {
                if !ring.is_zero(c) {
                    strips[p] = ring.add(&strips[p], &ring.mul(c, &weight));
                }
            }
        }
        Self {
            ring: ring.clone(),
            r: self.r.clone(),
            row: strips,
        }
    }

    /// `C^k` by `k` dense multiplications.
    pub fn naive_power(&self, k: u64) -> DenseMatrix<R::Elem> {
        self.to_dense().pow_repeated(&self.ring, k)
    }

    /// Reads back the strips if `dense` has the r-circulant pattern for `r`.
    pub fn from_dense(ring: R, r: R::Elem, dense: &DenseMatrix<R::Elem>) -> Option<Self> {
        let row = dense.row(0).to_vec();
        let candidate = Self::new(ring, r, row).ok()?;
        (candidate.to_dense() == *dense).then_some(candidate)
    }

    /// `circ_{n,r}` with `a` at strip `p`, `b` at strip `q`, zero elsewhere,
    /// raised to the k-th power by the binomial closed form
    ///
    /// ```text
    /// strip i = Σ_{h=0}^{k} a^(k-h) · b^h · C(k, h) · r^⌊m/n⌋,  m = kp + h(q-p),  m ≡ i (mod n)
    /// ```
    #[allow(clippy::too_many_arguments)]
    pub fn two_strip_power(
        ring: R,
        n: usize,
        r: R::Elem,
        p: usize,
        q: usize,
        a: R::Elem,
        b: R::Elem,
        k: u64,
    ) -> Result<Self> {
        if !(p < q && q < n) {
            return Err(Error::StripOrdering { p, q, n });
        }
        let mut strips = vec![ring.zero(); n];
        let (n128, gap) = (n as u128, (q - p) as u128);
        for h in 0..=k {
            let m = k as u128 * p as u128 + h as u128 * gap;
            let strip = (m % n128) as usize;
            let blocks = u64::try_from(m / n128)
                .map_err(|_| Error::Overflow(format!("block index for m={m}")))?;
            let coeff = ring.from_integer(&binomial(k, h));
            let term = ring.mul(
                &ring.mul(&ring.pow(&a, k - h), &ring.pow(&b, h)),
                &ring.mul(&coeff, &ring.pow(&r, blocks)),
            );
            strips[strip] = ring.add(&strips[strip], &term);
        }
        Self::new(ring, r, strips)
    }

    /// The equivalent general r-circulant of a two-strip matrix.
    pub fn from_two_strips(
        ring: R,
        n: usize,
        r: R::Elem,
        p: usize,
        q: usize,
        a: R::Elem,
        b: R::Elem,
    ) -> Result<Self> {
        if !(p < q && q < n) {
            return Err(Error::StripOrdering { p, q, n });
        }
        let mut row = vec![ring.zero(); n];
        row[p] = a;
        row[q] = b;
        Self::new(ring, r, row)
    }

    pub fn from_integers(ring: R, r: &BigInt, row: &[BigInt]) -> Result<Self> {
        let r = ring.from_integer(r);
        let row = row.iter().map(|c| ring.from_integer(c)).collect();
        Self::new(ring, r, row)
    }
}

impl<R: Ring> std::fmt::Display for RCirculant<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "circ_{{{},{}}}(", self.order(), self.r)?;
        for (i, c) in self.row.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
