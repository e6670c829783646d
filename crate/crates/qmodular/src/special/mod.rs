//! Specialization of symbolic objects at numeric q, collapse-locus
//! analysis, quotient-ring kernel evaluation, and the golden conjugacy
//! verification.

pub mod aberth;
pub mod collapse;
pub mod golden;
pub mod nummat;
pub mod quotient;

pub use collapse::{collapse_condition, collapse_roots, CollapseCondition, CollapseReport};
pub use golden::{golden_conjugacy_check, GoldenCase, GoldenReport};
pub use quotient::{quotient_eval, QuotientMatrix};

use crate::error::{Error, Result};
use crate::projective::ProjMatrix;
use crate::qrat::{quantize, BaseChoice, QuantizedPoint};
use crate::reps::RepId;
use crate::ring::fields::{Field, FromBigInt, GoldenSurd, OmegaExt};
use crate::ring::{Coeff, EisensteinInt, Poly};
use crate::words::{ExtendedRational, Gen};
use nummat::FieldMat;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

/// `Q(w)` as a concrete field.
pub type EisRational = OmegaExt<BigRational>;

/// A specialization value for q. Exact variants never degrade to floating
/// point; the complex variant is double precision.
#[derive(Clone, PartialEq, Debug)]
pub enum SpecValue {
    Rational(BigRational),
    Golden(GoldenSurd),
    EisRat(EisRational),
    Complex(Complex64),
}

impl SpecValue {
    pub fn from_extended(x: &ExtendedRational) -> Result<Self> {
        if x.is_infinity() {
            return Err(Error::domain("cannot specialize at infinity"));
        }
        Ok(SpecValue::Rational(BigRational::new(x.num().clone(), x.den().clone())))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        SpecValue::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `omega` as an exact Eisenstein-rational value.
    pub fn omega() -> Self {
        SpecValue::EisRat(EisRational::omega())
    }

    pub fn omega_inv() -> Self {
        SpecValue::EisRat(EisRational::omega_inv())
    }

    /// `exp(2 pi i k / n)` in double precision.
    pub fn unit_circle(k: u32, n: u32) -> Self {
        let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
        SpecValue::Complex(Complex64::new(angle.cos(), angle.sin()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SpecValue::Rational(r) => Zero::is_zero(r),
            SpecValue::Golden(g) => Field::is_zero(g),
            SpecValue::EisRat(e) => Field::is_zero(e),
            SpecValue::Complex(c) => Field::is_zero(c),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            SpecValue::Rational(r) => r.to_complex(),
            SpecValue::Golden(g) => g.to_complex(),
            SpecValue::EisRat(e) => e.to_complex(),
            SpecValue::Complex(c) => *c,
        }
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecValue::Rational(r) => write!(f, "{r}"),
            SpecValue::Golden(g) => write!(f, "{g}"),
            SpecValue::EisRat(e) => write!(f, "{e}"),
            SpecValue::Complex(c) => write!(f, "{}", format_complex(*c)),
        }
    }
}

/// Ten significant digits, the reporting precision of root tables.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.*e}", 9, x);
    // normalize "1.234567890e0" style back to plain decimal when reasonable
    match s.split_once('e') {
        Some((_, exp)) => {
            let e: i32 = exp.parse().unwrap_or(0);
            if (-4..=10).contains(&e) {
                let val: f64 = s.parse().unwrap_or(x);
                let decimals = (9 - e).max(0) as usize;
                format!("{val:.*}", decimals)
            } else {
                s
            }
        }
        None => s,
    }
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format_sig(z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", format_sig(z.re), format_sig(-z.im))
    } else {
        format!("{} + {}i", format_sig(z.re), format_sig(z.im))
    }
}

fn eis_embed<F: FromBigInt>(omega: &F, c: &EisensteinInt) -> F {
    F::from_bigint(&c.a).add(&F::from_bigint(&c.b).mul(omega))
}

/// Evaluate an integer-coefficient polynomial at any field value.
pub fn eval_int_at<F: FromBigInt>(p: &Poly<BigInt>, x: &F) -> F {
    p.eval_map(x, |c| F::from_bigint(c))
}

/// Evaluate an Eisenstein polynomial; the caller supplies the image of
/// `omega` in the target field.
pub fn eval_eis_at<F: FromBigInt>(p: &Poly<EisensteinInt>, omega: &F, x: &F) -> F {
    p.eval_map(x, |c| eis_embed(omega, c))
}

/// A specialized projective matrix over one of the exact fields or the
/// complex numbers.
#[derive(Clone, Debug)]
pub enum SpecMatrix {
    Rational(FieldMat<BigRational>),
    Golden(FieldMat<GoldenSurd>),
    EisRat(FieldMat<EisRational>),
    Complex(FieldMat<Complex64>),
}

impl SpecMatrix {
    pub fn is_singular(&self) -> bool {
        match self {
            SpecMatrix::Rational(m) => m.is_singular(),
            SpecMatrix::Golden(m) => m.is_singular(),
            SpecMatrix::EisRat(m) => m.is_singular(),
            SpecMatrix::Complex(m) => m.det().norm() < 1e-12,
        }
    }
}

fn specialize_mat_in<R: Coeff, F: FromBigInt>(
    m: &ProjMatrix<R>,
    x: &F,
    embed: &impl Fn(&R) -> F,
) -> FieldMat<F> {
    let ev = |p: &Poly<R>| p.eval_map(x, embed);
    FieldMat::new(ev(m.a()), ev(m.b()), ev(m.c()), ev(m.d()))
}

/// Specialize an integer-coefficient projective matrix at `r`. Singular
/// results are reported as errors naming the object.
pub fn specialize_int_matrix(
    m: &ProjMatrix<BigInt>,
    r: &SpecValue,
    name: &str,
) -> Result<SpecMatrix> {
    let out = match r {
        SpecValue::Rational(x) => {
            SpecMatrix::Rational(specialize_mat_in(m, x, &|c| BigRational::from_integer(c.clone())))
        }
        SpecValue::Golden(x) => {
            SpecMatrix::Golden(specialize_mat_in(m, x, &|c| GoldenSurd::from_bigint(c)))
        }
        SpecValue::EisRat(x) => {
            SpecMatrix::EisRat(specialize_mat_in(m, x, &|c| EisRational::from_bigint(c)))
        }
        SpecValue::Complex(x) => SpecMatrix::Complex(specialize_mat_in(m, x, &|c| c.to_complex())),
    };
    if out.is_singular() {
        return Err(Error::Singular { object: name.to_string() });
    }
    Ok(out)
}

/// Specialize an Eisenstein-coefficient projective matrix at `r`. Golden
/// and plain-rational targets are rejected (the coefficients carry `omega`);
/// use the Eisenstein-rational or complex kinds.
pub fn specialize_eis_matrix(
    m: &ProjMatrix<EisensteinInt>,
    r: &SpecValue,
    name: &str,
) -> Result<SpecMatrix> {
    let out = match r {
        SpecValue::Rational(x) => {
            let xe = EisRational::from_base(x.clone());
            let w = EisRational::omega();
            SpecMatrix::EisRat(specialize_mat_in(m, &xe, &|c| eis_embed(&w, c)))
        }
        SpecValue::EisRat(x) => {
            let w = EisRational::omega();
            SpecMatrix::EisRat(specialize_mat_in(m, x, &|c| eis_embed(&w, c)))
        }
        SpecValue::Complex(x) => {
            let w = Complex64::new(0.5, 3f64.sqrt() / 2.0);
            SpecMatrix::Complex(specialize_mat_in(m, x, &|c: &EisensteinInt| {
                let _ = &w;
                c.to_complex()
            }))
        }
        SpecValue::Golden(_) => {
            return Err(Error::domain(
                "golden specialization requires integer coefficients",
            ))
        }
    };
    if out.is_singular() {
        return Err(Error::Singular { object: name.to_string() });
    }
    Ok(out)
}

/// Specialize a generator image of a representation, guarding the
/// singular loci (`V+-`, `K+-` at `q = omega^{+-1}`).
pub fn specialize_generator(rep: RepId, g: Gen, r: &SpecValue) -> Result<SpecMatrix> {
    if r.is_zero() {
        return Err(Error::domain("q = 0 is outside every specialization"));
    }
    let name = format!("{}({:?})", rep, g);
    match rep {
        RepId::Mgo => specialize_int_matrix(&crate::reps::mgo_image(g), r, &name),
        rep => specialize_eis_matrix(&crate::reps::pm_image(rep, g), r, &name),
    }
}

/// An affine specialized value: finite or the point at infinity.
#[derive(Clone, PartialEq, Debug)]
pub enum AffineValue {
    Finite(SpecValue),
    Infinity,
}

impl fmt::Display for AffineValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineValue::Finite(v) => write!(f, "{v}"),
            AffineValue::Infinity => write!(f, "inf"),
        }
    }
}

fn affine_from_pair<F: Field>(
    num: F,
    den: F,
    wrap: impl Fn(F) -> SpecValue,
) -> Result<AffineValue> {
    if den.is_zero() {
        if num.is_zero() {
            return Err(Error::domain(
                "degenerate specialization: both coordinates vanished",
            ));
        }
        return Ok(AffineValue::Infinity);
    }
    Ok(AffineValue::Finite(wrap(num.div(&den).expect("nonzero denominator"))))
}

/// The specialized quantization map `psi_r(x)`: quantize symbolically, then
/// evaluate both coordinates at `r` and divide.
pub fn psi_at(x: &ExtendedRational, r: &SpecValue, base: BaseChoice) -> Result<AffineValue> {
    if r.is_zero() {
        return Err(Error::domain("psi is undefined at q = 0"));
    }
    let point = quantize(x, base);
    match (&point, r) {
        (QuantizedPoint::Int(p), SpecValue::Rational(v)) => {
            let f = |q: &Poly<BigInt>| eval_int_at(q, v);
            affine_from_pair(f(p.x()), f(p.y()), SpecValue::Rational)
        }
        (QuantizedPoint::Int(p), SpecValue::Golden(v)) => {
            let f = |q: &Poly<BigInt>| eval_int_at(q, v);
            affine_from_pair(f(p.x()), f(p.y()), SpecValue::Golden)
        }
        (QuantizedPoint::Int(p), SpecValue::EisRat(v)) => {
            let f = |q: &Poly<BigInt>| eval_int_at(q, v);
            affine_from_pair(f(p.x()), f(p.y()), SpecValue::EisRat)
        }
        (QuantizedPoint::Int(p), SpecValue::Complex(v)) => {
            let f = |q: &Poly<BigInt>| q.eval_complex(*v);
            affine_from_pair(f(p.x()), f(p.y()), SpecValue::Complex)
        }
        (QuantizedPoint::Eis(p), SpecValue::Rational(v)) => {
            let w = EisRational::omega();
            let xe = EisRational::from_base(v.clone());
            let f = |q: &Poly<EisensteinInt>| eval_eis_at(q, &w, &xe);
            affine_from_pair(f(p.x()), f(p.y()), SpecValue::EisRat)
        }
        (QuantizedPoint::Eis(p), SpecValue::EisRat(v)) => {
            let w = EisRational::omega();
            let f = |q: &Poly<EisensteinInt>| eval_eis_at(q, &w, v);
            affine_from_pair(f(p.x()), f(p.y()), SpecValue::EisRat)
        }
        (QuantizedPoint::Eis(p), SpecValue::Complex(v)) => {
            let f = |q: &Poly<EisensteinInt>| q.eval_complex(*v);
            affine_from_pair(f(p.x()), f(p.y()), SpecValue::Complex)
        }
        (QuantizedPoint::Eis(_), SpecValue::Golden(_)) => Err(Error::domain(
            "golden specialization requires integer coefficients",
        )),
    }
}

/// Specialized quantization by folding the specialized generator matrices
/// along the anchor word, entirely inside the field `F`. For the
/// plus/minus representations `omega` must be the image of `w` in `F`
/// (the minus variant is derived as `1 - w`). Returns `Ok(None)` for the
/// point at infinity. Agrees with [`psi_at`] by the homomorphism property
/// (asserted in tests).
pub fn psi_value_in<F: Field>(
    x: &ExtendedRational,
    base: BaseChoice,
    r: &F,
    omega: Option<&F>,
) -> Result<Option<F>> {
    use crate::qrat::Branch;
    if r.is_zero() {
        return Err(Error::domain("psi is undefined at q = 0"));
    }
    let t = FieldMat::new(r.clone(), F::one(), F::zero(), F::one());
    let (s, mut px, mut py) = match base.rep {
        RepId::Mgo => {
            let s = FieldMat::new(F::zero(), F::one().neg(), r.clone(), F::zero());
            let pair = match base.branch {
                Branch::Sharp => (F::one(), F::zero()),
                Branch::Flat => (F::one(), F::one().sub(r)),
                _ => unreachable!("validated by BaseChoice"),
            };
            (s, pair.0, pair.1)
        }
        rep => {
            let w0 = omega
                .ok_or_else(|| Error::domain("plus/minus specialization needs the image of omega"))?;
            let w = match rep {
                RepId::Plus => w0.clone(),
                RepId::Minus => F::one().sub(w0),
                RepId::Mgo => unreachable!(),
            };
            // cleared S: [[r, 1], [r(w - r), -r]]
            let s = FieldMat::new(r.clone(), F::one(), r.mul(&w.sub(r)), r.neg());
            let pair = match base.branch {
                Branch::Unit => (
                    w.inv().ok_or_else(|| Error::domain("omega image must be invertible"))?,
                    F::one(),
                ),
                Branch::RatFn => (F::one(), F::one().add(&w.mul(&w).mul(r))),
                _ => unreachable!("validated by BaseChoice"),
            };
            (s, pair.0, pair.1)
        }
    };
    let word = crate::qrat::anchor_word(base, x);
    for &(g, e) in word.letters().iter().rev() {
        let m = match g {
            Gen::T => &t,
            Gen::S => &s,
            _ => unreachable!("anchor words contain only T and S letters"),
        };
        let step = if e < 0 { m.adjugate() } else { m.clone() };
        for _ in 0..e.unsigned_abs() {
            let (nx, ny) = step.apply(&px, &py);
            px = nx;
            py = ny;
        }
    }
    if py.is_zero() {
        if px.is_zero() {
            return Err(Error::domain(
                "degenerate specialization: both coordinates vanished",
            ));
        }
        return Ok(None);
    }
    Ok(Some(px.div(&py).expect("nonzero denominator")))
}

/// Exact rational fast path for plots and monotonicity sweeps.
pub fn psi_at_rational_fast(
    x: &ExtendedRational,
    r: &BigRational,
    base: BaseChoice,
) -> Result<AffineValue> {
    if base.rep != RepId::Mgo {
        // the plus/minus path carries omega: fold in Q(w)
        let re = EisRational::from_base(r.clone());
        let w = EisRational::omega();
        return Ok(match psi_value_in(x, base, &re, Some(&w))? {
            Some(v) => AffineValue::Finite(SpecValue::EisRat(v)),
            None => AffineValue::Infinity,
        });
    }
    Ok(match psi_value_in(x, base, r, None)? {
        Some(v) => AffineValue::Finite(SpecValue::Rational(v)),
        None => AffineValue::Infinity,
    })
}

/// Complex fast path (plot circle mode and complex r).
pub fn psi_at_complex_fast(
    x: &ExtendedRational,
    r: Complex64,
    base: BaseChoice,
) -> Result<Option<Complex64>> {
    let w = Complex64::new(0.5, 3f64.sqrt() / 2.0);
    psi_value_in(x, base, &r, Some(&w))
}

/// All reduced fractions with `|num| <= bound` and `1 <= den <= bound`
/// inside `[lo, hi]`, sorted ascending.
pub fn farey_interval(den_bound: u32, lo: &BigRational, hi: &BigRational) -> Vec<ExtendedRational> {
    let mut out = Vec::new();
    for den in 1..=den_bound as i64 {
        let lo_num = (lo * BigRational::from_integer(den.into()))
            .ceil()
            .to_integer();
        let hi_num = (hi * BigRational::from_integer(den.into()))
            .floor()
            .to_integer();
        let mut n = lo_num;
        while n <= hi_num {
            if num_integer::Integer::gcd(&n, &BigInt::from(den)) == BigInt::from(1) {
                out.push(ExtendedRational::new(n.clone(), den));
            }
            n += 1;
        }
    }
    out.sort_by(|a, b| a.cmp_value(b));
    out.dedup();
    out
}

/// All reduced fractions with `|num| <= bound`, `|den| <= bound` (plus
/// infinity), the sweep set of the equivariance criteria.
pub fn projective_sweep(bound: u32) -> Vec<ExtendedRational> {
    let mut out = vec![ExtendedRational::infinity()];
    let b = bound as i64;
    for den in 1..=b {
        for num in -b..=b {
            let g = num_integer::Integer::gcd(&BigInt::from(num), &BigInt::from(den));
            if g == BigInt::from(1) {
                out.push(ExtendedRational::new(num, den));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrat::Branch;

    fn sharp() -> BaseChoice {
        BaseChoice::new(RepId::Mgo, Branch::Sharp).unwrap()
    }

    fn xr(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(n, d)
    }

    #[test]
    fn t_at_one_is_classical_t() {
        let m = specialize_generator(RepId::Mgo, Gen::T, &SpecValue::rational(1, 1)).unwrap();
        match m {
            SpecMatrix::Rational(m) => {
                assert!(m.proj_eq(&FieldMat::generator(Gen::T)));
            }
            _ => panic!("rational kind expected"),
        }
    }

    #[test]
    fn singularity_guard() {
        // V+ and K+ are singular at q = omega
        for g in [Gen::V, Gen::K] {
            let err = specialize_generator(RepId::Plus, g, &SpecValue::omega());
            assert!(matches!(err, Err(Error::Singular { .. })), "{g:?}");
        }
        // V- and K- at q = omega^{-1}
        for g in [Gen::V, Gen::K] {
            let err = specialize_generator(RepId::Minus, g, &SpecValue::omega_inv());
            assert!(matches!(err, Err(Error::Singular { .. })), "{g:?}");
        }
        // the PSL images stay nonsingular there
        for g in [Gen::T, Gen::S, Gen::L] {
            assert!(specialize_generator(RepId::Plus, g, &SpecValue::omega()).is_ok());
            assert!(specialize_generator(RepId::Minus, g, &SpecValue::omega_inv()).is_ok());
        }
        assert!(specialize_generator(RepId::Mgo, Gen::T, &SpecValue::rational(0, 1)).is_err());
    }

    #[test]
    fn psi_at_examples() {
        // x = 10 at r = 1: the identity specialization
        let v = psi_at(&xr(10, 1), &SpecValue::rational(1, 1), sharp()).unwrap();
        assert_eq!(v, AffineValue::Finite(SpecValue::rational(10, 1)));
        // x = 3 at r = 1/2: 1 + 1/2 + 1/4 = 7/4
        let v = psi_at(&xr(3, 1), &SpecValue::rational(1, 2), sharp()).unwrap();
        assert_eq!(v, AffineValue::Finite(SpecValue::rational(7, 4)));
        // x = 1/2 at r = -1: q/(1+q) has a pole
        let v = psi_at(&xr(1, 2), &SpecValue::rational(-1, 1), sharp()).unwrap();
        assert_eq!(v, AffineValue::Infinity);
        // q = 0 rejected
        assert!(psi_at(&xr(1, 1), &SpecValue::rational(0, 1), sharp()).is_err());
    }

    #[test]
    fn fast_path_agrees() {
        for (n, d) in [(3i64, 1i64), (1, 2), (13, 8), (-22, 7), (1, 0), (0, 1)] {
            let x = ExtendedRational::new(n, d);
            for r in [(1i64, 2i64), (2, 1), (3, 2), (-2, 3)] {
                let rr = BigRational::new(BigInt::from(r.0), BigInt::from(r.1));
                for branch in [Branch::Sharp, Branch::Flat] {
                    let base = BaseChoice::new(RepId::Mgo, branch).unwrap();
                    let slow = psi_at(&x, &SpecValue::Rational(rr.clone()), base).unwrap();
                    let fast = psi_at_rational_fast(&x, &rr, base).unwrap();
                    assert_eq!(slow, fast, "x={x} r={rr} branch={branch}");
                }
            }
        }
    }

    #[test]
    fn sweep_sets() {
        let f = farey_interval(3, &BigRational::from_integer(0.into()), &BigRational::from_integer(1.into()));
        let vals: Vec<String> = f.iter().map(|x| x.to_string()).collect();
        assert_eq!(vals, ["0", "1/3", "1/2", "2/3", "1"]);
        let p = projective_sweep(2);
        assert!(p.contains(&ExtendedRational::infinity()));
        assert!(p.contains(&xr(-1, 2)));
        // reduced only
        assert_eq!(p.iter().filter(|x| **x == xr(1, 1)).count(), 1);
    }
}
