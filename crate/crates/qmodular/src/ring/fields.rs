//! Field-side arithmetic for specialization: exact rationals, golden surds
//! `Q(sqrt 5)`, the quadratic extension by `w` over any base field, and
//! double-precision complex numbers.

use super::EisensteinInt;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// Minimal field interface used by specialization and conjugacy checks.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }
    fn to_complex(&self) -> Complex64;
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Field for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// `p + s*sqrt(5)` with rational `p`, `s`; the exact house of the golden
/// ratio `phi = (1 + sqrt 5)/2` and its conjugate.
#[derive(Clone, PartialEq, Eq)]
pub struct GoldenSurd {
    pub p: BigRational,
    pub s: BigRational,
}

impl GoldenSurd {
    pub fn new(p: BigRational, s: BigRational) -> Self {
        GoldenSurd { p, s }
    }

    pub fn from_rational(p: BigRational) -> Self {
        GoldenSurd { p, s: Field::zero() }
    }

    pub fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// `phi = (1 + sqrt 5)/2`
    pub fn phi() -> Self {
        GoldenSurd::new(Self::rational(1, 2), Self::rational(1, 2))
    }

    /// `phibar = (1 - sqrt 5)/2 = -1/phi`
    pub fn phi_bar() -> Self {
        GoldenSurd::new(Self::rational(1, 2), Self::rational(-1, 2))
    }

    /// Galois conjugation `sqrt5 -> -sqrt5`.
    pub fn galois_conj(&self) -> Self {
        GoldenSurd { p: self.p.clone(), s: -self.s.clone() }
    }

    /// Rational norm `x * conj(x) = p^2 - 5 s^2`.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - BigRational::from_integer(BigInt::from(5)) * &self.s * &self.s
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.s)
    }

    pub fn to_f64(&self) -> f64 {
        self.p.to_f64().unwrap_or(f64::NAN) + self.s.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

impl fmt::Debug for GoldenSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GoldenSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.s) {
            write!(f, "{}", self.p)
        } else if self.s.is_negative() {
            write!(f, "({} - {}*sqrt5)", self.p, -&self.s)
        } else {
            write!(f, "({} + {}*sqrt5)", self.p, self.s)
        }
    }
}

impl Field for GoldenSurd {
    fn zero() -> Self {
        GoldenSurd::new(Field::zero(), Field::zero())
    }
    fn one() -> Self {
        GoldenSurd::new(Field::one(), Field::zero())
    }
    fn from_i64(v: i64) -> Self {
        GoldenSurd::new(Field::from_i64(v), Field::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.p) && Zero::is_zero(&self.s)
    }
    fn add(&self, rhs: &Self) -> Self {
        GoldenSurd { p: &self.p + &rhs.p, s: &self.s + &rhs.s }
    }
    fn sub(&self, rhs: &Self) -> Self {
        GoldenSurd { p: &self.p - &rhs.p, s: &self.s - &rhs.s }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let five = BigRational::from_integer(BigInt::from(5));
        GoldenSurd {
            p: &self.p * &rhs.p + &five * &self.s * &rhs.s,
            s: &self.p * &rhs.s + &self.s * &rhs.p,
        }
    }
    fn neg(&self) -> Self {
        GoldenSurd { p: -&self.p, s: -&self.s }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.galois_conj();
        Some(GoldenSurd { p: &c.p / &n, s: &c.s / &n })
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

/// Quadratic extension `F(w)` of a field by the sixth root of unity,
/// `w^2 = w - 1`. With `F = Q` this is `Q(w)`; with `F = Q(sqrt 5)` it is
/// the quartic field where the golden conjugacy identities live.
#[derive(Clone, PartialEq)]
pub struct OmegaExt<F: Field> {
    pub a: F,
    pub b: F,
}

impl<F: Field> OmegaExt<F> {
    pub fn new(a: F, b: F) -> Self {
        OmegaExt { a, b }
    }

    pub fn from_base(a: F) -> Self {
        OmegaExt { a, b: F::zero() }
    }

    pub fn omega() -> Self {
        OmegaExt { a: F::zero(), b: F::one() }
    }

    pub fn omega_inv() -> Self {
        OmegaExt { a: F::one(), b: F::one().neg() }
    }

    /// Complex conjugation `w -> 1 - w` (fixes the base field).
    pub fn omega_conj(&self) -> Self {
        OmegaExt { a: self.a.add(&self.b), b: self.b.neg() }
    }

    /// Norm into the base field.
    pub fn norm(&self) -> F {
        // (a + bw)(a + b - bw) = a^2 + ab + b^2
        self.a.mul(&self.a).add(&self.a.mul(&self.b)).add(&self.b.mul(&self.b))
    }

    pub fn from_eisenstein(z: &EisensteinInt) -> Self
    where
        F: FromBigInt,
    {
        OmegaExt { a: F::from_bigint(&z.a), b: F::from_bigint(&z.b) }
    }

    pub fn is_in_base(&self) -> bool {
        self.b.is_zero()
    }
}

/// Conversion from arbitrary-precision integers into a field.
pub trait FromBigInt: Field {
    fn from_bigint(v: &BigInt) -> Self;
}

impl FromBigInt for BigRational {
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

impl FromBigInt for GoldenSurd {
    fn from_bigint(v: &BigInt) -> Self {
        GoldenSurd::from_rational(BigRational::from_integer(v.clone()))
    }
}

impl FromBigInt for Complex64 {
    fn from_bigint(v: &BigInt) -> Self {
        Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl<F: FromBigInt> FromBigInt for OmegaExt<F> {
    fn from_bigint(v: &BigInt) -> Self {
        OmegaExt::from_base(F::from_bigint(v))
    }
}

impl<F: Field> fmt::Debug for OmegaExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for OmegaExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({} + {}*w)", self.a, self.b)
        }
    }
}

impl<F: Field> Field for OmegaExt<F> {
    fn zero() -> Self {
        OmegaExt::new(F::zero(), F::zero())
    }
    fn one() -> Self {
        OmegaExt::new(F::one(), F::zero())
    }
    fn from_i64(v: i64) -> Self {
        OmegaExt::from_base(F::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        OmegaExt { a: self.a.add(&rhs.a), b: self.b.add(&rhs.b) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        OmegaExt { a: self.a.sub(&rhs.a), b: self.b.sub(&rhs.b) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let aa = self.a.mul(&rhs.a);
        let bb = self.b.mul(&rhs.b);
        let cross = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        OmegaExt { a: aa.sub(&bb), b: cross.add(&bb) }
    }
    fn neg(&self) -> Self {
        OmegaExt { a: self.a.neg(), b: self.b.neg() }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        let ni = n.inv()?;
        let c = self.omega_conj();
        Some(OmegaExt { a: c.a.mul(&ni), b: c.b.mul(&ni) })
    }
    fn to_complex(&self) -> Complex64 {
        let w = Complex64::new(0.5, 3f64.sqrt() / 2.0);
        self.a.to_complex() + self.b.to_complex() * w
    }
}
