//! Division-free engine for the entries of `[a0, a1, a2, ...]^k`.
//!
//! Entry `m` of the k-th power is `Σ_p L(m, p) · a0^(k-p) · C(k, p)`, with the
//! binomials `C(k, p)` treated as independent indeterminates until a concrete
//! `k` is chosen. A [`FormalEntry`] stores only the map `p -> L(m, p)`; the
//! factor `a0^(k-p)` is implied by the key. The hat transform sends every
//! `a0^(k-p)·C(k, p)` to `a0^(k-p-1)·C(k, p+1)`, which in this representation
//! is a pure key shift, and entry `m+1` is
//!
//! ```text
//! a_{m+1} · hat(entry 0) + a_m · hat(entry 1) + ... + a_1 · hat(entry m)
//! ```
//!
//! Nothing is ever divided, so the recursion is valid in any commutative ring,
//! including when `a0` is zero or a zero divisor. Evaluation uses the
//! convention `a^(k-p)·C(k, p) = δ(k, p)` whenever `k <= p`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result, Ring};

/// A sparse formal sum `Σ_p coeff_p · a0^(k-p) · C(k, p)`.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalEntry<E> {
    terms: BTreeMap<usize, E>,
}

impl<E: Clone> FormalEntry<E> {
    /// The empty sum.
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// `{0 ↦ 1}`, i.e. `a0^k · C(k, 0)`.
    pub fn initial<R: Ring<Elem = E>>(ring: &R) -> Self {
        Self::from_terms(ring, [(0, ring.one())])
    }

    /// Builds an entry from `(p, coeff)` pairs, summing repeated keys and
    /// dropping zeros.
    pub fn from_terms<R, I>(ring: &R, terms: I) -> Self
    where
        R: Ring<Elem = E>,
        I: IntoIterator<Item = (usize, E)>,
    {
        let mut map: BTreeMap<usize, E> = BTreeMap::new();
        for (p, c) in terms {
            let slot = map.entry(p).or_insert_with(|| ring.zero());
            *slot = ring.add(slot, &c);
        }
        map.retain(|_, c| !ring.is_zero(c));
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at binomial index `p`, if nonzero.
    pub fn coefficient(&self, p: usize) -> Option<&E> {
        self.terms.get(&p)
    }

    /// `(p, coeff)` pairs in ascending `p`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &E)> + '_ {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_key(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_key(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    /// Shifts every key `p` to `p + 1`.
    pub fn hat(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&p, c)| (p + 1, c.clone()))
                .collect(),
        }
    }
}

/// `Σ_{i=0}^{m} a[i] · hats[m - i]` where `m = hats.len() - 1`.
///
/// `a[i]` is the first-row element `a_{i+1}` and `hats[j]` the hat transform
/// of entry `j`, so the result is entry `m + 1`.
pub fn next_entry<R: Ring>(
    ring: &R,
    a: &[R::Elem],
    hats: &[FormalEntry<R::Elem>],
) -> Result<FormalEntry<R::Elem>> {
    if hats.is_empty() {
        return Err(Error::LengthMismatch(
            "at least one transformed entry is required".to_string(),
        ));
    }
    if a.len() < hats.len() {
        return Err(Error::LengthMismatch(format!(
            "{} transformed entries need {} row elements, got {}",
            hats.len(),
            hats.len(),
            a.len()
        )));
    }
    Ok(combine(ring, a, hats))
}

fn combine<R: Ring>(
    ring: &R,
    a: &[R::Elem],
    hats: &[FormalEntry<R::Elem>],
) -> FormalEntry<R::Elem> {
    let m = hats.len() - 1;
    let width = hats
        .iter()
        .filter_map(FormalEntry::max_key)
        .max()
        .unwrap_or(0)
        + 1;
    let mut acc: Vec<Option<R::Elem>> = vec![None; width];
    for (i, ai) in a.iter().take(m + 1).enumerate() {
        if ring.is_zero(ai) {
            continue;
        }
        for (p, c) in hats[m - i].terms() {
            let term = ring.mul(ai, c);
            acc[p] = Some(match acc[p].take() {
                Some(prev) => ring.add(&prev, &term),
                None => term,
            });
        }
    }
    let terms = acc
        .into_iter()
        .enumerate()
        .filter_map(|(p, c)| c.filter(|c| !ring.is_zero(c)).map(|c| (p, c)))
        .collect();
    FormalEntry { terms }
}

/// Formal entries `0..=max_m` of the powers of `[a0, a1, ...]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSequence<E> {
    a0: E,
    entries: Vec<FormalEntry<E>>,
}

impl<E: Clone> FormalSequence<E> {
    pub fn a0(&self) -> &E {
        &self.a0
    }

    pub fn entries(&self) -> &[FormalEntry<E>] {
        &self.entries
    }

    pub fn entry(&self, m: usize) -> Option<&FormalEntry<E>> {
        self.entries.get(m)
    }

    /// Every entry evaluated at exponent `k`.
    pub fn evaluate_all<R: Ring<Elem = E>>(&self, ring: &R, k: u64) -> Vec<E> {
        let max_p = self
            .entries
            .iter()
            .filter_map(FormalEntry::max_key)
            .max()
            .unwrap_or(0);
        let weights = BinomialWeights::new(ring, &self.a0, k, max_p);
        self.entries
            .iter()
            .map(|e| weights.apply(ring, e))
            .collect()
    }
}

/// Runs the recursion for positions `0..=max_m`. Row elements past the end of
/// `tail` are zero.
pub fn build_sequence<R: Ring>(
    ring: &R,
    a0: R::Elem,
    tail: &[R::Elem],
    max_m: usize,
) -> FormalSequence<R::Elem> {
    let mut a: Vec<R::Elem> = tail.iter().take(max_m).cloned().collect();
    a.resize(max_m, ring.zero());

    let mut entries = Vec::with_capacity(max_m + 1);
    let mut hats = Vec::with_capacity(max_m + 1);
    let first = FormalEntry::initial(ring);
    hats.push(first.hat());
    entries.push(first);
    for m in 0..max_m {
        let next = combine(ring, &a[..=m], &hats);
        hats.push(next.hat());
        entries.push(next);
    }
    FormalSequence { a0, entries }
}

/// Precomputed `a0^(k-p) · C(k, p)` for `0 <= p <= min(k, max_p)`.
struct BinomialWeights<E> {
    weights: Vec<E>,
}

impl<E: Clone> BinomialWeights<E> {
    fn new<R: Ring<Elem = E>>(ring: &R, a0: &E, k: u64, max_p: usize) -> Self {
        let top = (max_p as u64).min(k) as usize;
        // a0 powers from a0^(k-top) upwards
        let mut powers = Vec::with_capacity(top + 1);
        let mut pw = ring.pow(a0, k - top as u64);
        for _ in 0..=top {
            powers.push(pw.clone());
            pw = ring.mul(&pw, a0);
        }
        let mut weights = Vec::with_capacity(top + 1);
        let mut binom = BigUint::one();
        for p in 0..=top {
            if p > 0 {
                binom *= k - (p as u64 - 1);
                binom /= p as u64;
            }
            let c = ring.from_integer(&binom.clone().into());
            weights.push(ring.mul(&powers[top - p], &c));
        }
        Self { weights }
    }

    fn apply<R: Ring<Elem = E>>(&self, ring: &R, entry: &FormalEntry<E>) -> E {
        let mut acc = ring.zero();
        for (p, c) in entry.terms() {
            match self.weights.get(p) {
                Some(w) => acc = ring.add(&acc, &ring.mul(c, w)),
                // k < p
                None => break,
            }
        }
        acc
    }
}

/// Value of `entry` at exponent `k` for the given diagonal element `a0`.
///
/// Each term contributes `0` when `k < p`, its coefficient when `k = p`, and
/// `coeff · a0^(k-p) · C(k, p)` otherwise.
pub fn evaluate<R: Ring>(ring: &R, entry: &FormalEntry<R::Elem>, a0: &R::Elem, k: u64) -> R::Elem {
    let max_p = entry.max_key().unwrap_or(0);
    BinomialWeights::new(ring, a0, k, max_p).apply(ring, entry)
}

/// Human-readable form, highest binomial index first, with `a0` printed by
/// value: `16·5^(k-2)·C(k,2) + 3·5^(k-1)·C(k,1)`.
pub fn render<R: Ring>(ring: &R, entry: &FormalEntry<R::Elem>, a0: &R::Elem) -> String {
    render_with_label(ring, entry, &a0.to_string())
}

/// Like [`render`] but prints `label` in place of `a0`.
pub fn render_with_label<R: Ring>(ring: &R, entry: &FormalEntry<R::Elem>, label: &str) -> String {
    if entry.is_zero() {
        return "0".to_string();
    }
    let base = if label.starts_with('-') {
        format!("({label})")
    } else {
        label.to_string()
    };
    let one = ring.one();
    let mut out = String::new();
    for (idx, (p, c)) in entry.terms().rev().enumerate() {
        if idx > 0 {
            out.push_str(" + ");
        }
        if *c != one {
            let _ = write!(out, "{c}·");
        }
        if p == 0 {
            let _ = write!(out, "{base}^k·C(k,0)");
        } else {
            let _ = write!(out, "{base}^(k-{p})·C(k,{p})");
        }
    }
    out
}
