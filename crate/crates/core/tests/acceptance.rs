//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line.
//!
//! Random cases come from a fixed-seed ChaCha stream so every run checks the
//! same instances. All comparisons are exact.

use std::time::{Duration, Instant};

use circpow::compositions::l_direct;
use circpow::dense::DenseMatrix;
use circpow::formal::build_sequence;
use circpow::{Integers, Modular, RCirculant, Ring, Semicirculant};
use num_bigint::BigInt;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(id: u32, title: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!(
        "[{tag}] AC{id:02} {title}{}",
        if detail.is_empty() {
            String::new()
        } else {
            format!(" ({detail})")
        }
    );
    assert!(ok, "AC{id} failed: {detail}");
}

fn zs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_row<R: Ring>(ring: &R, rng: &mut ChaCha8Rng, len: usize) -> Vec<R::Elem> {
    (0..len)
        .map(|_| ring.from_i64(rng.gen_range(-50..=50)))
        .collect()
}

#[test]
fn ac01_order5_rcirculant_cube() {
    let t = Instant::now();
    let semi = Semicirculant::with_order(Integers, zs(&[5, 4, 3, 2, 1]), 16).unwrap();
    let vector = semi.power(3).row;
    let expect_vector = zs(&[
        125, 300, 465, 574, 594, 504, 369, 234, 126, 56, 21, 6, 1, 0, 0, 0,
    ]);
    let c = RCirculant::new(Integers, BigInt::from(-1), zs(&[5, 4, 3, 2, 1])).unwrap();
    let c3 = c.power_via_fold(3).unwrap();
    let strips_ok = c3.row() == zs(&[-358, -63, 232, 448, 538]).as_slice();
    let elapsed = t.elapsed();
    verdict(
        1,
        "circ_{5,-1}(5,4,3,2,1)^3 and its semicirculant vector",
        vector == expect_vector && strips_ok && elapsed < Duration::from_secs(1),
        &format!("{c3}, {elapsed:?}"),
    );
}

#[test]
fn ac02_z8_formal_vs_naive() {
    let t = Instant::now();
    let ring = Modular::new(8).unwrap();
    let a = Semicirculant::new(ring, vec![2, 4, 2, 3]).unwrap();
    let seq = a.formal_sequence();
    let mut ok = true;
    for k in 0..=8 {
        ok &= seq.evaluate_all(&ring, k) == a.naive_power(k).row;
    }
    let elapsed = t.elapsed();
    verdict(
        2,
        "[2,4,2,3] over Z/8: formal entries equal dense powers for k in 0..=8",
        ok && elapsed < Duration::from_secs(1),
        &format!("{elapsed:?}"),
    );
}

#[test]
fn ac03_shifted_entry_and_truncation() {
    let ring = Modular::new(8).unwrap();
    let b = Semicirculant::new(ring, vec![0, 2, 1, 1, 0]).unwrap();
    let b2 = b.power(2).row;
    let mut ok = b2[4] == 5 && b2 == b.naive_power(2).row;
    // last nonzero index is 3, so entry m of B^k vanishes for m >= 3k + 1
    let seq = build_sequence(&ring, 0, &[2, 1, 1], 40);
    for k in 0..=8u64 {
        let values = seq.evaluate_all(&ring, k);
        for (m, v) in values.iter().enumerate() {
            if m as u64 > 3 * k {
                ok &= *v == 0;
            }
        }
    }
    verdict(
        3,
        "[0,2,1,1,0] over Z/8: (B^2)_4 = 5 and support bound 3k",
        ok,
        &format!("B^2 = {b2:?}"),
    );
}

fn power_vs_naive_case<R: Ring>(ring: R, rng: &mut ChaCha8Rng) -> bool {
    let n = rng.gen_range(1..=7);
    let k = rng.gen_range(0..=8);
    let row = random_row(&ring, rng, n);
    let a = Semicirculant::new(ring, row).unwrap();
    a.power(k) == a.naive_power(k)
}

#[test]
fn ac04_power_equals_naive_power() {
    let t = Instant::now();
    let mut rng = rng(4);
    let mut failures = 0;
    for case in 0..500 {
        let ok = match case % 6 {
            0 => power_vs_naive_case(Integers, &mut rng),
            1 => power_vs_naive_case(Modular::new(2).unwrap(), &mut rng),
            2 => power_vs_naive_case(Modular::new(6).unwrap(), &mut rng),
            3 => power_vs_naive_case(Modular::new(8).unwrap(), &mut rng),
            4 => power_vs_naive_case(Modular::new(12).unwrap(), &mut rng),
            _ => power_vs_naive_case(Modular::new(101).unwrap(), &mut rng),
        };
        failures += usize::from(!ok);
    }
    let elapsed = t.elapsed();
    verdict(
        4,
        "500 random semicirculant powers match dense multiplication",
        failures == 0 && elapsed < Duration::from_secs(30),
        &format!("{failures} failures, {elapsed:?}"),
    );
}

fn coefficients_match_l_direct<R: Ring>(ring: R, rng: &mut ChaCha8Rng) -> bool {
    let max_m = 8;
    let len = rng.gen_range(1..=max_m);
    let tail = random_row(&ring, rng, len);
    let a0 = ring.from_i64(rng.gen_range(-50..=50));
    let seq = build_sequence(&ring, a0, &tail, max_m);
    let mut padded = tail.clone();
    padded.resize(max_m, ring.zero());
    (1..=max_m).all(|m| {
        (1..=m).all(|p| {
            let got = seq
                .entry(m)
                .unwrap()
                .coefficient(p)
                .cloned()
                .unwrap_or_else(|| ring.zero());
            got == l_direct(&ring, &padded, m, p as i64).unwrap()
        })
    })
}

#[test]
fn ac05_formal_coefficients_equal_multinomial_sums() {
    let mut rng = rng(5);
    let mut failures = 0;
    for case in 0..60 {
        let ok = match case % 3 {
            0 => coefficients_match_l_direct(Integers, &mut rng),
            1 => coefficients_match_l_direct(Modular::new(8).unwrap(), &mut rng),
            _ => coefficients_match_l_direct(Modular::new(12).unwrap(), &mut rng),
        };
        failures += usize::from(!ok);
    }
    verdict(
        5,
        "formal coefficient at key p equals L(m,p) for p <= m <= 8",
        failures == 0,
        &format!("{failures} failures in 60 rows"),
    );
}

fn l_recurrence_holds<R: Ring>(ring: R, rng: &mut ChaCha8Rng) -> bool {
    let a = random_row(&ring, rng, 9);
    let l = |m: usize, p: usize| l_direct(&ring, &a, m, p as i64).unwrap();
    (1..=8).all(|m| {
        (1..=m).all(|p| {
            let rhs = (1..=m - p + 1).fold(ring.zero(), |acc, i| {
                ring.add(&acc, &ring.mul(&l(m - i + 1, p), &a[i - 1]))
            });
            l(m + 1, p + 1) == rhs
        })
    })
}

#[test]
fn ac06_l_recurrence() {
    let mut rng = rng(6);
    let mut failures = 0;
    for case in 0..30 {
        let ok = match case % 3 {
            0 => l_recurrence_holds(Integers, &mut rng),
            1 => l_recurrence_holds(Modular::new(8).unwrap(), &mut rng),
            _ => l_recurrence_holds(Modular::new(12).unwrap(), &mut rng),
        };
        failures += usize::from(!ok);
    }
    verdict(
        6,
        "L(m+1,p+1) = Σ L(m-i+1,p)·a_i for 1 <= p <= m <= 8",
        failures == 0,
        &format!("{failures} failures in 30 sequences"),
    );
}

fn fold_case<R: Ring>(ring: R, rng: &mut ChaCha8Rng) -> bool {
    let n = rng.gen_range(1..=5);
    let k = rng.gen_range(0..=6);
    let r = ring.from_i64(rng.gen_range(-20..=20));
    let row = random_row(&ring, rng, n);
    let c = RCirculant::new(ring, r, row).unwrap();
    c.power_via_fold(k).unwrap().to_dense() == c.naive_power(k)
}

#[test]
fn ac07_fold_equals_dense_power() {
    let mut rng = rng(7);
    let mut failures = 0;
    for case in 0..200 {
        let ok = match case % 3 {
            0 => fold_case(Integers, &mut rng),
            1 => fold_case(Modular::new(8).unwrap(), &mut rng),
            _ => fold_case(Modular::new(12).unwrap(), &mut rng),
        };
        failures += usize::from(!ok);
    }
    verdict(
        7,
        "200 random r-circulant powers: fold equals dense multiplication",
        failures == 0,
        &format!("{failures} failures"),
    );
}

#[test]
fn ac08_two_strip_closed_form() {
    let mut rng = rng(8);
    let mut failures = 0;
    for _ in 0..100 {
        let n = rng.gen_range(2..=6usize);
        let p = rng.gen_range(0..n - 1);
        let q = rng.gen_range(p + 1..n);
        let k = rng.gen_range(0..=6);
        let v = |rng: &mut ChaCha8Rng| BigInt::from(rng.gen_range(-9i64..=9));
        let (a, b, r) = (v(&mut rng), v(&mut rng), v(&mut rng));
        let closed =
            RCirculant::two_strip_power(Integers, n, r.clone(), p, q, a.clone(), b.clone(), k)
                .unwrap();
        let general = RCirculant::from_two_strips(Integers, n, r, p, q, a, b).unwrap();
        failures += usize::from(closed != general.power_via_fold(k).unwrap());
    }
    verdict(
        8,
        "100 two-strip instances: closed form equals fold",
        failures == 0,
        &format!("{failures} failures"),
    );
}

#[test]
fn ac09_division_recursion_oracle() {
    let ring = Modular::new(101).unwrap();
    let mut rng = rng(9);
    let mut failures = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=7);
        let k = rng.gen_range(0..=8);
        let mut row = random_row(&ring, &mut rng, n);
        row[0] = rng.gen_range(1..101);
        let a = Semicirculant::new(ring, row).unwrap();
        failures += usize::from(a.division_recursion_power(k) != Some(a.power(k)));
    }
    let z8 = Modular::new(8).unwrap();
    let blocked = Semicirculant::new(z8, vec![2, 4, 2, 3]).unwrap();
    let refuses = (0..=8).all(|k| blocked.division_recursion_power(k).is_none());
    verdict(
        9,
        "division recursion agrees over Z/101 and refuses [2,4,2,3] over Z/8",
        failures == 0 && refuses,
        &format!("{failures} failures, refuses={refuses}"),
    );
}

fn basic_permutation_case<R: Ring>(ring: R, n: usize, r: R::Elem, k: u64) -> bool {
    let e = DenseMatrix::from_fn(n, |i, j| {
        if n == 1 {
            r.clone()
        } else if j == i + 1 {
            ring.one()
        } else if i == n - 1 && j == 0 {
            r.clone()
        } else {
            ring.zero()
        }
    });
    let fast = RCirculant::basic_permutation_power(ring.clone(), n, r, k).unwrap();
    fast.to_dense() == e.pow_repeated(&ring, k)
}

#[test]
fn ac10_basic_permutation_powers() {
    let mut rng = rng(10);
    let mut failures = 0;
    let mut cases = 0;
    for n in 1..=6usize {
        for k in 0..=3 * n as u64 {
            let r = rng.gen_range(-20i64..=20);
            failures += usize::from(!basic_permutation_case(Integers, n, BigInt::from(r), k));
            let z12 = Modular::new(12).unwrap();
            failures += usize::from(!basic_permutation_case(z12, n, z12.from_i64(r), k));
            cases += 2;
        }
    }
    verdict(
        10,
        "E_{n,r}^k = r^⌊k/n⌋·E^(k mod n) for n <= 6, k <= 3n",
        failures == 0,
        &format!("{failures} failures in {cases} cases"),
    );
}
