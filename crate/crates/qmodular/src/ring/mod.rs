//! Exact coefficient rings: arbitrary-precision integers and Eisenstein
//! integers, plus the field-side types used by specialization.
//!
//! Everything downstream (polynomials, projective matrices, quantized
//! rationals) is generic over [`Coeff`]. The two instances that matter are
//! `BigInt` (for the Morier-Genoud--Ovsienko representation) and
//! [`EisensteinInt`] (for the conjugate pair of representations).

pub mod eisenstein;
pub mod fields;
pub mod poly;

pub use eisenstein::EisensteinInt;
pub use fields::{Field, FromBigInt, GoldenSurd, OmegaExt};
pub use poly::{cyclotomic, Poly};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// A commutative GCD domain usable as a polynomial coefficient ring.
///
/// `canon_unit` returns the unit `u` such that `self * u` is the canonical
/// associate (positive over the integers, argument in `[0, pi/3)` over the
/// Eisenstein integers). `canon_unit_square` restricts the correction to the
/// subgroup of unit squares, which is what the projective determinant is
/// allowed to absorb.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division; `None` when `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    /// A gcd of the two elements (any associate); `gcd(0, 0) = 0`.
    fn gcd(&self, rhs: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn canon_unit(&self) -> Self;
    fn canon_unit_square(&self) -> Self;
    /// Complex conjugation; the identity over the integers.
    fn conj(&self) -> Self;
    /// Some square root in the ring, or `None` when none exists.
    fn sqrt_exact(&self) -> Option<Self>;
    fn to_complex(&self) -> Complex64;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
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
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().to_u32() == Some(1)
    }
    fn canon_unit(&self) -> Self {
        if self.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        }
    }
    fn canon_unit_square(&self) -> Self {
        // the only unit square in Z is 1
        BigInt::from(1)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let r = Roots::sqrt(self);
        if &(&r * &r) == self {
            Some(r)
        } else {
            None
        }
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

/// Largest perfect-square divisor of `n` found by trial division (used to
/// reduce discriminants; the contents met in practice are tiny).
pub fn square_part(n: &BigInt) -> BigInt {
    let mut m = n.abs();
    if Zero::is_zero(&m) {
        return BigInt::from(1);
    }
    let mut s = BigInt::from(1);
    let mut p = BigInt::from(2);
    let cap = BigInt::from(100_000);
    while &p * &p <= m && p <= cap {
        loop {
            let p2 = &p * &p;
            if Zero::is_zero(&(&m % &p2)) {
                m /= &p2;
                s *= &p;
            } else {
                break;
            }
        }
        p += 1;
    }
    s
}
