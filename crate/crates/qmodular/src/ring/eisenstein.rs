//! Eisenstein integers `Z[w]` with `w = exp(2 pi i / 6)`, so `w^2 = w - 1`.
//!
//! The unit group is the cyclic group of order six generated by `w`; the
//! canonical associate of a nonzero element is the rotation landing in the
//! sextant `arg in [0, pi/3)`, which in coordinates is simply `a > 0, b >= 0`.

use super::Coeff;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// `a + b*w` with `w` a primitive sixth root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt { a: a.into(), b: b.into() }
    }

    /// The generator `w`.
    pub fn omega() -> Self {
        EisensteinInt::new(0, 1)
    }

    /// `w^-1 = 1 - w` (also the complex conjugate of `w`).
    pub fn omega_inv() -> Self {
        EisensteinInt::new(1, -1)
    }

    /// `w^k` for any integer exponent.
    pub fn omega_pow(k: i64) -> Self {
        let mut u = EisensteinInt::from_i64(1);
        let w = EisensteinInt::omega();
        for _ in 0..k.rem_euclid(6) {
            u = u.mul(&w);
        }
        u
    }

    /// Multiplicative norm `a^2 + ab + b^2 = x * conj(x)`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    /// Unit exponent k with `self * w^k` canonical (`a > 0, b >= 0`); self != 0.
    fn canon_exponent(&self) -> i64 {
        debug_assert!(!Coeff::is_zero(self));
        let mut z = self.clone();
        let w = EisensteinInt::omega();
        for k in 0..6 {
            if z.a.is_positive() && !z.b.is_negative() {
                return k;
            }
            z = z.mul(&w);
        }
        unreachable!("every nonzero Eisenstein integer has a canonical rotation")
    }

    /// Rounded division used by the Euclidean gcd: nearest lattice point of
    /// `self / rhs` in the `(1, w)` basis. The remainder then has norm
    /// strictly smaller than `norm(rhs)`.
    fn div_round(&self, rhs: &Self) -> Self {
        let n = rhs.norm();
        let num = self.mul(&rhs.conj());
        EisensteinInt { a: round_div(&num.a, &n), b: round_div(&num.b, &n) }
    }
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // round(a / b) for b > 0
    debug_assert!(b.is_positive());
    let two_a = a * 2;
    let (q, r) = num_integer::Integer::div_mod_floor(&two_a, &(b * 2));
    if (r * 2) >= (b * 2) {
        q + 1
    } else {
        q
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "({}-{}*w)", self.a, self.b.magnitude())
        } else {
            write!(f, "({}+{}*w)", self.a, self.b)
        }
    }
}

impl Coeff for EisensteinInt {
    fn zero() -> Self {
        EisensteinInt::new(0, 0)
    }
    fn one() -> Self {
        EisensteinInt::new(1, 0)
    }
    fn from_i64(v: i64) -> Self {
        EisensteinInt::new(v, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        EisensteinInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
    fn sub(&self, rhs: &Self) -> Self {
        EisensteinInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a1 + b1 w)(a2 + b2 w), w^2 = w - 1
        let aa = &self.a * &rhs.a;
        let bb = &self.b * &rhs.b;
        let cross = &self.a * &rhs.b + &self.b * &rhs.a;
        EisensteinInt { a: aa - &bb, b: cross + bb }
    }
    fn neg(&self) -> Self {
        EisensteinInt { a: -&self.a, b: -&self.b }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Coeff::is_zero(rhs) {
            return None;
        }
        let n = rhs.norm();
        let num = self.mul(&rhs.conj());
        let qa = Coeff::exact_div(&num.a, &n)?;
        let qb = Coeff::exact_div(&num.b, &n)?;
        Some(EisensteinInt { a: qa, b: qb })
    }
    fn gcd(&self, rhs: &Self) -> Self {
        let mut x = self.clone();
        let mut y = rhs.clone();
        while !Coeff::is_zero(&y) {
            let q = x.div_round(&y);
            let r = x.sub(&q.mul(&y));
            debug_assert!(r.norm() < y.norm());
            x = y;
            y = r;
        }
        x
    }
    fn is_unit(&self) -> bool {
        self.norm().to_u32() == Some(1)
    }
    fn canon_unit(&self) -> Self {
        EisensteinInt::omega_pow(self.canon_exponent())
    }
    fn canon_unit_square(&self) -> Self {
        let k = self.canon_exponent();
        EisensteinInt::omega_pow(k - (k % 2))
    }
    fn conj(&self) -> Self {
        // conj(a + b w) = (a + b) - b w
        EisensteinInt { a: &self.a + &self.b, b: -&self.b }
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            return Some(Coeff::zero());
        }
        let z = self.to_complex();
        let s = z.sqrt();
        // back to (a, b) coordinates: z = a + b/2 + i b sqrt(3)/2
        let b_est = s.im / (3f64.sqrt() / 2.0);
        let a_est = s.re - b_est / 2.0;
        for da in [0i64, -1, 1] {
            for db in [0i64, -1, 1] {
                let ca = BigInt::from((a_est.round() as i64) + da);
                let cb = BigInt::from((b_est.round() as i64) + db);
                let cand = EisensteinInt { a: ca, b: cb };
                if cand.mul(&cand) == *self {
                    return Some(cand);
                }
            }
        }
        None
    }
    fn to_complex(&self) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        Complex64::new(a + b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ei(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn omega_powers() {
        let w = EisensteinInt::omega();
        let w2 = w.mul(&w);
        assert_eq!(w2, ei(-1, 1)); // w^2 = w - 1
        let w3 = w2.mul(&w);
        assert_eq!(w3, ei(-1, 0)); // w^3 = -1
        let mut p = EisensteinInt::one();
        for _ in 0..6 {
            p = p.mul(&w);
        }
        assert!(Coeff::is_one(&p)); // w^6 = 1
        // (w^2)^2 = -w, so -w is a unit square
        assert_eq!(w2.mul(&w2), w.neg());
    }

    #[test]
    fn conj_and_norm() {
        // w * (1 - w) = 1, i.e. conj(w) = w^-1
        let w = EisensteinInt::omega();
        assert!(Coeff::is_one(&w.mul(&w.conj())));
        let z = ei(3, -5);
        assert_eq!(z.norm(), BigInt::from(9 - 15 + 25));
        let zc = z.conj();
        assert_eq!(z.mul(&zc), ei((9 - 15 + 25) as i64, 0));
    }

    #[test]
    fn units_are_norm_one() {
        let mut count = 0;
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                let z = ei(a, b);
                if !Coeff::is_zero(&z) && z.is_unit() {
                    count += 1;
                    // each unit times its canonical rotation is 1's sextant rep
                    let c = z.mul(&z.canon_unit());
                    assert!(Coeff::is_one(&c));
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn canonical_sextant() {
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                let z = ei(a, b);
                if Coeff::is_zero(&z) {
                    continue;
                }
                let c = z.mul(&z.canon_unit());
                assert!(c.a.is_positive() && !c.b.is_negative(), "{z} -> {c}");
            }
        }
    }

    #[test]
    fn euclidean_gcd() {
        // gcd(x * g, y * g) is an associate of g when x, y are coprime
        // (norms 13 and 19 here)
        let g = ei(2, 1);
        let x = ei(3, -4).mul(&g);
        let y = ei(2, 3).mul(&g);
        let d = Coeff::gcd(&x, &y);
        assert!(Coeff::exact_div(&x, &d).is_some());
        assert!(Coeff::exact_div(&y, &d).is_some());
        let ratio = Coeff::exact_div(&d, &g);
        assert!(ratio.is_some() && ratio.unwrap().is_unit());
    }

    #[test]
    fn exact_division() {
        let x = ei(7, 3);
        let y = ei(2, -1);
        let p = x.mul(&y);
        assert_eq!(Coeff::exact_div(&p, &y), Some(x.clone()));
        assert_eq!(Coeff::exact_div(&ei(1, 0), &ei(2, 0)), None);
    }

    #[test]
    fn sqrt_of_unit_square() {
        // -w = (w^2)^2
        let mw = EisensteinInt::omega().neg();
        let s = mw.sqrt_exact().expect("-w is a square");
        assert_eq!(s.mul(&s), mw);
        assert_eq!(ei(0, 1).sqrt_exact(), None); // w itself is not a square
    }
}
