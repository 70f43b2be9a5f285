//! Square dense matrices over a [`Ring`], used as brute-force references.

use crate::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix<E> {
    n: usize,
    data: Vec<E>,
}

impl<E: Clone> DenseMatrix<E> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "order mismatch");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let mut acc = ring.zero();
            for l in 0..n {
                acc = ring.add(&acc, &ring.mul(self.get(i, l), other.get(l, j)));
            }
            acc
        })
    }

    /// `self^k` by `k` successive multiplications.
    pub fn pow_repeated<R: Ring<Elem = E>>(&self, ring: &R, k: u64) -> Self {
        let mut acc = Self::identity(ring, self.n);
        for _ in 0..k {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// `self^k` by binary exponentiation.
    pub fn pow_squaring<R: Ring<Elem = E>>(&self, ring: &R, mut k: u64) -> Self {
        let mut acc = Self::identity(ring, self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(ring, &base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(ring, &base);
            }
        }
        acc
    }
}
