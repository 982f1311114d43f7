//! Exact field arithmetic: the rationals, cyclotomic fields `Q(zeta_N)` and
//! prime fields `F_p`.
//!
//! A [`Field`] is a handle on one of these fields; every [`Scalar`] carries
//! enough of its field to refuse arithmetic with elements of another one.
//! The operator impls (`&a + &b`, ...) panic on a field mismatch; the
//! `checked_*` methods report it as [`Error::FieldMismatch`].

mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use poly::cyclotomic_polynomial;

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rational,
    Cyclotomic(u32),
    Prime(u64),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "q"),
            FieldDescriptor::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
            FieldDescriptor::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rational") {
            return Ok(FieldDescriptor::Rational);
        }
        let bad = || Error::InvalidField(s.to_string());
        if let Some(rest) = s.strip_prefix("cyclotomic:") {
            let n: u32 = rest.parse().map_err(|_| bad())?;
            return Ok(FieldDescriptor::Cyclotomic(n));
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest.parse().map_err(|_| bad())?;
            return Ok(FieldDescriptor::Prime(p));
        }
        Err(bad())
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Precomputed reduction data for `Q(zeta_N)`.
#[derive(Debug)]
pub struct CyclotomicContext {
    order: u32,
    degree: usize,
    /// `x^k mod Phi_N` for `k < 2*degree - 1`, each of length `degree`.
    powers: Vec<Vec<BigRational>>,
    modulus: Vec<BigRational>,
}

impl CyclotomicContext {
    fn new(order: u32) -> Self {
        let modulus = poly::to_qpoly(&cyclotomic_polynomial(order));
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(2 * degree);
        for k in 0..(2 * degree).max(1) {
            let mut xk = vec![BigRational::zero(); k + 1];
            xk[k] = BigRational::one();
            let (_, mut r) = poly::divrem(&xk, &modulus);
            r.resize(degree, BigRational::zero());
            powers.push(r);
        }
        CyclotomicContext {
            order,
            degree,
            powers,
            modulus,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn reduce(&self, p: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree];
        for (k, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.degree {
                out[k] += c;
            } else {
                for (o, r) in out.iter_mut().zip(&self.powers[k]) {
                    if !r.is_zero() {
                        *o += c * r;
                    }
                }
            }
        }
        out
    }
}

/// An element of `Q(zeta_N)` in the power basis `1, z, ..., z^(phi(N)-1)`.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    ctx: Arc<CyclotomicContext>,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn order(&self) -> u32 {
        self.ctx.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// An element of `F_p`, `0 <= value < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeFieldElement {
    modulus: u64,
    value: u64,
}

impl PrimeFieldElement {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    fn new(modulus: u64, value: u64) -> Self {
        PrimeFieldElement {
            modulus,
            value: value % modulus,
        }
    }

    fn mul(self, o: Self) -> Self {
        let v = (self.value as u128 * o.value as u128) % self.modulus as u128;
        PrimeFieldElement::new(self.modulus, v as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = PrimeFieldElement::new(self.modulus, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}

/// An exact field element.
#[derive(Clone)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic(CyclotomicNumber),
    Prime(PrimeFieldElement),
}

/// A handle on a concrete field; hands out constants and parses input.
#[derive(Clone, Debug)]
pub struct Field {
    descriptor: FieldDescriptor,
    cyclotomic: Option<Arc<CyclotomicContext>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}

impl Eq for Field {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    pub fn new(descriptor: FieldDescriptor) -> Result<Field> {
        match descriptor {
            FieldDescriptor::Rational => Ok(Field {
                descriptor,
                cyclotomic: None,
            }),
            FieldDescriptor::Cyclotomic(n) => {
                if n == 0 {
                    return Err(Error::InvalidField("cyclotomic order must be >= 1".into()));
                }
                Ok(Field {
                    descriptor,
                    cyclotomic: Some(Arc::new(CyclotomicContext::new(n))),
                })
            }
            FieldDescriptor::Prime(p) => {
                if !is_prime(p) || p > (1 << 62) {
                    return Err(Error::InvalidField(format!("{p} is not a supported prime")));
                }
                Ok(Field {
                    descriptor,
                    cyclotomic: None,
                })
            }
        }
    }

    pub fn rational() -> Field {
        Field::new(FieldDescriptor::Rational).unwrap()
    }

    pub fn cyclotomic(n: u32) -> Result<Field> {
        Field::new(FieldDescriptor::Cyclotomic(n))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(FieldDescriptor::Prime(p))
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    /// Characteristic of the field (0 for the characteristic-zero fields).
    pub fn characteristic(&self) -> u64 {
        match self.descriptor {
            FieldDescriptor::Prime(p) => p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
            .expect("integers embed in every field")
    }

    /// Embeds a rational; fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(&self, r: BigRational) -> Result<Scalar> {
        match self.descriptor {
            FieldDescriptor::Rational => Ok(Scalar::Rational(r)),
            FieldDescriptor::Cyclotomic(_) => {
                let ctx = self.cyclotomic.clone().unwrap();
                let mut coeffs = vec![BigRational::zero(); ctx.degree];
                coeffs[0] = r;
                Ok(Scalar::Cyclotomic(CyclotomicNumber { ctx, coeffs }))
            }
            FieldDescriptor::Prime(p) => {
                let pm = BigInt::from(p);
                let num = r.numer().mod_floor(&pm).to_u64().unwrap();
                let den = r.denom().mod_floor(&pm).to_u64().unwrap();
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                let d = PrimeFieldElement::new(p, den).pow(p - 2);
                Ok(Scalar::Prime(PrimeFieldElement::new(p, num).mul(d)))
            }
        }
    }

    /// Order of the cyclic group of roots of unity this crate uses in the
    /// field: 2 for `Q`, `lcm(2, N)` for `Q(zeta_N)`, `p - 1` for `F_p`.
    pub fn roots_of_unity_order(&self) -> u64 {
        match self.descriptor {
            FieldDescriptor::Rational => 2,
            FieldDescriptor::Cyclotomic(n) => (n as u64).lcm(&2),
            FieldDescriptor::Prime(p) => p - 1,
        }
    }

    pub fn has_root_of_unity(&self, m: u64) -> bool {
        m >= 1 && self.roots_of_unity_order().is_multiple_of(m)
    }

    /// The canonical generator of the root-of-unity group of order
    /// [`Field::roots_of_unity_order`].
    fn root_generator(&self) -> Scalar {
        match self.descriptor {
            FieldDescriptor::Rational => self.from_i64(-1),
            FieldDescriptor::Cyclotomic(n) => {
                let z = self.generator_z();
                if n % 2 == 0 {
                    z
                } else {
                    // -z^((n+1)/2) has order 2n and squares to z.
                    -&z.pow((n as i64 + 1) / 2)
                }
            }
            FieldDescriptor::Prime(p) => {
                if p == 2 {
                    return self.one();
                }
                let factors = prime_factors(p - 1);
                let g = (2..p)
                    .find(|&g| {
                        let e = PrimeFieldElement::new(p, g);
                        factors.iter().all(|q| e.pow((p - 1) / q).value != 1)
                    })
                    .expect("every prime field has a primitive root");
                Scalar::Prime(PrimeFieldElement::new(p, g))
            }
        }
    }

    /// `z = zeta_N` itself for cyclotomic fields.
    fn generator_z(&self) -> Scalar {
        let ctx = self.cyclotomic.clone().expect("cyclotomic field");
        let mut p = vec![BigRational::zero(); 2];
        p[1] = BigRational::one();
        let coeffs = ctx.reduce(&p);
        Scalar::Cyclotomic(CyclotomicNumber { ctx, coeffs })
    }

    /// `xi^k` where `xi` is the canonical primitive `m`-th root of unity.
    /// In `Q(zeta_N)` with `m = N` this is exactly `zeta_N^k`.
    pub fn root_of_unity(&self, m: u64, k: i64) -> Result<Scalar> {
        if !self.has_root_of_unity(m) {
            return Err(Error::FieldLacksRoot {
                field: self.descriptor,
                order: m,
            });
        }
        let big = self.roots_of_unity_order();
        let step = big / m;
        let e = (k.rem_euclid(m as i64) as u64) * step;
        Ok(self.root_generator().pow(e as i64))
    }

    /// Parses `"3/4"`, `"-2"`, or (cyclotomic fields) sums like `"1 - 2*z + z^3"`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-')
                && bytes[i - 1] != b'^'
                && bytes[i - 1] != b'*'
            {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);
        let mut acc = self.zero();
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-1, &term[1..]),
                b'+' => (1, &term[1..]),
                _ => (1, term),
            };
            let value = if let Some(zpos) = body.find('z') {
                if self.cyclotomic.is_none() {
                    return Err(bad());
                }
                let coef = body[..zpos].trim_end_matches('*');
                let coef = if coef.is_empty() {
                    self.one()
                } else {
                    self.parse_rational(coef).ok_or_else(bad)?
                };
                let rest = &body[zpos + 1..];
                let exp: i64 = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse()
                        .map_err(|_| bad())?
                };
                &coef * &self.generator_z().pow(exp)
            } else {
                self.parse_rational(body).ok_or_else(bad)?
            };
            acc = if sign < 0 {
                &acc - &value
            } else {
                &acc + &value
            };
        }
        Ok(acc)
    }

    fn parse_rational(&self, s: &str) -> Option<Scalar> {
        let r = if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            BigRational::new(n, d)
        } else {
            BigRational::from_integer(s.parse().ok()?)
        };
        self.from_rational(r).ok()
    }
}

/// `zeta_N^k` in `Q(zeta_N)`.
pub fn root_of_unity(n: u32, k: i64) -> Scalar {
    let field = Field::cyclotomic(n).expect("n >= 1");
    field
        .root_of_unity(n as u64, k)
        .expect("Q(zeta_N) contains zeta_N")
}

impl Scalar {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rational,
            Scalar::Cyclotomic(c) => FieldDescriptor::Cyclotomic(c.ctx.order),
            Scalar::Prime(p) => FieldDescriptor::Prime(p.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.coeffs.iter().all(|x| x.is_zero()),
            Scalar::Prime(p) => p.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic(c) => {
                c.coeffs[0].is_one() && c.coeffs[1..].iter().all(|x| x.is_zero())
            }
            Scalar::Prime(p) => p.value == 1 % p.modulus,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        let (a, b) = (self.descriptor(), other.descriptor());
        if a != b {
            return Err(Error::FieldMismatch { left: a, right: b });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                Scalar::Cyclotomic(CyclotomicNumber {
                    ctx: a.ctx.clone(),
                    coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
                })
            }
            (Scalar::Prime(a), Scalar::Prime(b)) => {
                let v = (a.value as u128 + b.value as u128) % a.modulus as u128;
                Scalar::Prime(PrimeFieldElement::new(a.modulus, v as u64))
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                if a.ctx.degree == 1 {
                    return Ok(Scalar::Cyclotomic(CyclotomicNumber {
                        ctx: a.ctx.clone(),
                        coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
                    }));
                }
                let prod = poly::mul(&a.coeffs, &b.coeffs);
                Scalar::Cyclotomic(CyclotomicNumber {
                    ctx: a.ctx.clone(),
                    coeffs: a.ctx.reduce(&prod),
                })
            }
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.mul(*b)),
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse. Cyclotomic inverses come from the extended
    /// Euclidean algorithm in `Q[x]/Phi_N`.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Cyclotomic(c) => {
                let inv =
                    poly::inverse_mod(&c.coeffs, &c.ctx.modulus).ok_or(Error::DivisionByZero)?;
                let mut coeffs = inv;
                coeffs.resize(c.ctx.degree, BigRational::zero());
                Scalar::Cyclotomic(CyclotomicNumber {
                    ctx: c.ctx.clone(),
                    coeffs,
                })
            }
            Scalar::Prime(p) => Scalar::Prime(p.pow(p.modulus - 2)),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert (panics on `0^-k`).
    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// The zero of this element's field.
    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::zero()),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(CyclotomicNumber {
                ctx: c.ctx.clone(),
                coeffs: vec![BigRational::zero(); c.ctx.degree],
            }),
            Scalar::Prime(p) => Scalar::Prime(PrimeFieldElement::new(p.modulus, 0)),
        }
    }

    /// The one of this element's field.
    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
            Scalar::Cyclotomic(c) => {
                let mut coeffs = vec![BigRational::zero(); c.ctx.degree];
                coeffs[0] = BigRational::one();
                Scalar::Cyclotomic(CyclotomicNumber {
                    ctx: c.ctx.clone(),
                    coeffs,
                })
            }
            Scalar::Prime(p) => Scalar::Prime(PrimeFieldElement::new(p.modulus, 1)),
        }
    }

    /// Integer multiple `k * self`.
    pub fn mul_int(&self, k: i64) -> Scalar {
        let kk = match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::from_integer(k.into())),
            Scalar::Cyclotomic(c) => {
                let mut coeffs = vec![BigRational::zero(); c.ctx.degree];
                coeffs[0] = BigRational::from_integer(k.into());
                Scalar::Cyclotomic(CyclotomicNumber {
                    ctx: c.ctx.clone(),
                    coeffs,
                })
            }
            Scalar::Prime(p) => Scalar::Prime(PrimeFieldElement::new(
                p.modulus,
                k.rem_euclid(p.modulus as i64) as u64,
            )),
        };
        self * &kk
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                a.ctx.order == b.ctx.order && a.coeffs == b.coeffs
            }
            (Scalar::Prime(a), Scalar::Prime(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(CyclotomicNumber {
                ctx: c.ctx.clone(),
                coeffs: c.coeffs.iter().map(|x| -x).collect(),
            }),
            Scalar::Prime(p) => Scalar::Prime(PrimeFieldElement::new(
                p.modulus,
                (p.modulus - p.value) % p.modulus,
            )),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Prime(p) => write!(f, "{}", p.value),
            Scalar::Cyclotomic(c) => {
                let mut out = String::new();
                for (k, x) in c.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let neg = x.is_negative();
                    let mag = fmt_rational(&x.abs());
                    let body = match (k, mag.as_str()) {
                        (0, m) => m.to_string(),
                        (1, "1") => "z".to_string(),
                        (1, m) => format!("{m}*z"),
                        (_, "1") => format!("z^{k}"),
                        (_, m) => format!("{m}*z^{k}"),
                    };
                    if out.is_empty() {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if neg { " - " } else { " + " });
                    }
                    out.push_str(&body);
                }
                if out.is_empty() {
                    out.push('0');
                }
                write!(f, "{out}")
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
