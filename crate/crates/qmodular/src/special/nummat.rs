//! 2x2 matrices over a field, used by specialization, the q=1 conjugation
//! check, and the golden conjugacy identities.

use crate::ring::fields::Field;
use crate::words::{Gen, GroupWord, IntMat};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct FieldMat<F: Field> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: Field> FieldMat<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        FieldMat { a, b, c, d }
    }

    pub fn identity() -> Self {
        FieldMat::new(F::one(), F::zero(), F::zero(), F::one())
    }

    pub fn from_int(m: &IntMat) -> Self {
        let f = |v: &BigInt| F::from_i64(v.to_i64().expect("entry fits in i64"));
        FieldMat::new(f(&m.a), f(&m.b), f(&m.c), f(&m.d))
    }

    pub fn generator(g: Gen) -> Self {
        FieldMat::from_int(&IntMat::generator(g))
    }

    pub fn from_word(w: &GroupWord) -> Self {
        FieldMat::from_int(&w.int_matrix())
    }

    pub fn det(&self) -> F {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        FieldMat {
            a: self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            c: self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            d: self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        }
    }

    /// Adjugate; equals the inverse up to the (projectively irrelevant)
    /// determinant factor.
    pub fn adjugate(&self) -> Self {
        FieldMat { a: self.d.clone(), b: self.b.neg(), c: self.c.neg(), d: self.a.clone() }
    }

    pub fn conjugate_by(&self, m: &Self) -> Self {
        m.mul(self).mul(&m.adjugate())
    }

    /// Projective equality: all 2x2 minors of the stacked coefficient
    /// vectors vanish.
    pub fn proj_eq(&self, rhs: &Self) -> bool {
        let v = [&self.a, &self.b, &self.c, &self.d];
        let u = [&rhs.a, &rhs.b, &rhs.c, &rhs.d];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if !v[i].mul(u[j]).sub(&v[j].mul(u[i])).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Apply to a projective pair `[x : y]`.
    pub fn apply(&self, x: &F, y: &F) -> (F, F) {
        (
            self.a.mul(x).add(&self.b.mul(y)),
            self.c.mul(x).add(&self.d.mul(y)),
        )
    }

    /// Apply as a Mobius map to an affine value; `None` means the image is
    /// the point at infinity.
    pub fn mobius(&self, x: &F) -> Option<F> {
        let num = self.a.mul(x).add(&self.b);
        let den = self.c.mul(x).add(&self.d);
        num.div(&den)
    }
}

impl<F: Field> fmt::Display for FieldMat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl<F: Field> fmt::Debug for FieldMat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type QM = FieldMat<BigRational>;

    #[test]
    fn adjugate_inverts_projectively() {
        let m = QM::new(
            Field::from_i64(2),
            Field::from_i64(3),
            Field::from_i64(1),
            Field::from_i64(2),
        );
        assert!(m.mul(&m.adjugate()).proj_eq(&QM::identity()));
    }

    #[test]
    fn mobius_pole() {
        let m = QM::generator(Gen::S); // x -> -1/x
        assert_eq!(m.mobius(&Field::from_i64(2)), Some(BigRational::new((-1).into(), 2.into())));
        assert_eq!(m.mobius(&Field::zero()), None);
    }
}
