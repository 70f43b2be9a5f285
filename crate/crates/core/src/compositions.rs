//! Weighted compositions and the multinomial sums built on them.
//!
//! `Δ(m, q, p)` is the set of tuples `(k1, ..., km)` of nonnegative integers
//! with `Σ k_i = p` and `Σ i·k_i = q`. The sum
//!
//! ```text
//! L(m, p) = Σ_{Δ(m, m, p)} p! / (k1!···km!) · a1^k1 ··· am^km
//! ```
//!
//! is the coefficient of `a0^(k-p)·C(k, p)` in entry `m` of the k-th power of
//! the semicirculant matrix `[a0, a1, ...]`. Computing it this way means
//! enumerating compositions, which is exactly what the recursive engine in
//! [`crate::formal`] avoids; this module is kept as an oracle.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::{Error, Result, Ring};

/// Exact binomial coefficient `C(k, p)`; zero when `p > k`.
pub fn binomial(k: u64, p: u64) -> BigInt {
    if p > k {
        return BigInt::from(0);
    }
    let p = p.min(k - p);
    let mut acc = BigUint::one();
    for i in 0..p {
        acc *= k - i;
        acc /= i + 1;
    }
    BigInt::from(acc)
}

/// A tuple `(k1, ..., km)` from some `Δ(m, q, p)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionTuple(pub Vec<u64>);

impl CompositionTuple {
    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// `Σ k_i`.
    pub fn count(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `Σ i·k_i` with 1-based `i`.
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, k)| (i as u64 + 1) * k)
            .sum()
    }
}

/// Every tuple of `Δ(m, q, p)`, in lexicographic order of `(k1, ..., km)`.
///
/// Infeasible systems (negative `q` or `p`, `p > q`, ...) give an empty
/// iterator rather than an error.
pub fn enumerate_delta(m: usize, q: i64, p: i64) -> impl Iterator<Item = CompositionTuple> {
    let mut out = Vec::new();
    if m >= 1 && q >= 0 && p >= 0 {
        let mut ks = vec![0u64; m];
        descend(&mut ks, 0, p as u64, q as u64, &mut out);
    }
    out.into_iter()
}

// Fix k_{idx+1}; `count` and `weight` are what the remaining parts must
// still absorb. Parts at 1-based positions idx+1..=m can absorb a weight
// between (idx+1)·count and m·count.
fn descend(ks: &mut [u64], idx: usize, count: u64, weight: u64, out: &mut Vec<CompositionTuple>) {
    let m = ks.len();
    if idx == m {
        if count == 0 && weight == 0 {
            out.push(CompositionTuple(ks.to_vec()));
        }
        return;
    }
    let pos = idx as u64 + 1;
    let max_here = count.min(weight / pos);
    for k in 0..=max_here {
        let (c, w) = (count - k, weight - k * pos);
        let feasible = if c == 0 {
            w == 0
        } else {
            let lo = c.saturating_mul(pos + 1);
            let hi = c.saturating_mul(m as u64);
            idx + 1 < m && lo <= w && w <= hi
        };
        if feasible {
            ks[idx] = k;
            descend(ks, idx + 1, c, w, out);
        }
    }
    ks[idx] = 0;
}

/// `p! / (k1!···km!)`, requiring `Σ k_i = p`.
pub fn multinomial(p: u64, ks: &CompositionTuple) -> Result<BigInt> {
    let total = ks.count();
    if total != p {
        return Err(Error::CompositionSum {
            expected: p,
            actual: total,
        });
    }
    // product of binomials C(k1, k1)·C(k1+k2, k2)···
    let mut acc = BigInt::one();
    let mut running = 0u64;
    for &k in ks.parts() {
        running += k;
        acc *= binomial(running, k);
    }
    Ok(acc)
}

/// `L(m, p)` by direct multinomial expansion over `Δ(m, p)`.
///
/// `a[0]` holds `a1`, `a[1]` holds `a2`, and so on; at least `m` values are
/// required.
pub fn l_direct<R: Ring>(ring: &R, a: &[R::Elem], m: usize, p: i64) -> Result<R::Elem> {
    if p < 1 || p as u64 > m as u64 {
        return Err(Error::IndexOutOfRange { p, m });
    }
    if a.len() < m {
        return Err(Error::LengthMismatch(format!(
            "L({m}, {p}) needs {m} coefficients, got {}",
            a.len()
        )));
    }
    let mut acc = ring.zero();
    for tuple in enumerate_delta(m, m as i64, p) {
        let mut term = ring.from_integer(&multinomial(p as u64, &tuple)?);
        for (ai, &ki) in a.iter().zip(tuple.parts()) {
            if ki > 0 {
                term = ring.mul(&term, &ring.pow(ai, ki));
            }
        }
        acc = ring.add(&acc, &term);
    }
    Ok(acc)
}
