//! Dense univariate polynomials over the rationals and the integers.
//!
//! Coefficient vectors are stored lowest degree first. The zero polynomial is
//! the empty vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`. Panics if `b` is zero.
pub(crate) fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut q = Vec::new();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        if q.len() <= shift {
            q.resize(shift + 1, BigRational::zero());
        }
        q[shift] = c.clone();
        for (i, y) in b.iter().enumerate().take(db + 1) {
            if !y.is_zero() {
                let t = &c * y;
                r[i + shift] -= t;
            }
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
/// Returns `None` when `gcd(a, m)` is not a unit.
pub(crate) fn inverse_mod(a: &QPoly, m: &QPoly) -> Option<QPoly> {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    trim(&mut r1);
    let (mut t0, mut t1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    // r0 is the gcd; it must be a nonzero constant.
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = r0[0].clone();
    let (_, mut inv) = divrem(&t0.iter().map(|x| x / &c).collect(), m);
    trim(&mut inv);
    Some(inv)
}

fn int_divide_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "division was not exact");
    q
}

/// The `n`-th cyclotomic polynomial, lowest degree first.
///
/// Computed as `x^n - 1` divided exactly by `Phi_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = int_divide_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub(crate) fn to_qpoly(p: &[BigInt]) -> QPoly {
    p.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

#[cfg(test)]
pub(crate) fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degree_is_euler_phi() {
        for n in 1..=30u32 {
            assert_eq!(
                cyclotomic_polynomial(n).len() as u64 - 1,
                euler_phi(n as u64)
            );
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        // Independent check by multiplication instead of division.
        for n in 1..=12u32 {
            let mut acc: QPoly = vec![BigRational::one()];
            for d in 1..=n {
                if n % d == 0 {
                    acc = mul(&acc, &to_qpoly(&cyclotomic_polynomial(d)));
                }
            }
            let mut expect = vec![BigRational::zero(); n as usize + 1];
            expect[0] = -BigRational::one();
            expect[n as usize] = BigRational::one();
            assert_eq!(acc, expect, "n = {n}");
        }
    }

    #[test]
    fn inverse_mod_phi3() {
        let m = to_qpoly(&cyclotomic_polynomial(3));
        let x = vec![BigRational::zero(), BigRational::one()];
        let inv = inverse_mod(&x, &m).unwrap();
        let (_, r) = divrem(&mul(&x, &inv), &m);
        assert_eq!(r, vec![BigRational::one()]);
    }
}
