//! Word evaluation over the quotient ring `(Z/NZ)[q] / (modulus)`: the
//! kernel-evaluation tool for studying which relations hold modulo an
//! ideal.

use crate::error::{Error, Result};
use crate::reps::RepId;
use crate::ring::{Coeff, EisensteinInt, Poly};
use crate::words::{Gen, GroupWord};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Coefficient rings that can be reduced mod N componentwise.
pub trait ModReduce: Coeff {
    fn mod_n(&self, n: &BigInt) -> Self;
    /// Multiply by an integer residue.
    fn scale_int(&self, k: &BigInt) -> Self;
}

impl ModReduce for BigInt {
    fn mod_n(&self, n: &BigInt) -> Self {
        self.mod_floor(n)
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self * k
    }
}

impl ModReduce for EisensteinInt {
    fn mod_n(&self, n: &BigInt) -> Self {
        EisensteinInt { a: self.a.mod_floor(n), b: self.b.mod_floor(n) }
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        EisensteinInt { a: &self.a * k, b: &self.b * k }
    }
}

fn poly_mod_n<R: ModReduce>(p: &Poly<R>, n: &BigInt) -> Poly<R> {
    Poly::from_coeffs(p.coeffs().iter().map(|c| c.mod_n(n)).collect())
}

/// Inverse of `a` modulo `n`, when `gcd(a, n) = 1`.
fn inv_mod(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(n);
    if e.gcd == BigInt::from(1) {
        Some(e.x.mod_floor(n))
    } else {
        None
    }
}

/// Reduce a polynomial modulo (`modulus`, N): long division using the
/// inverted leading coefficient of the modulus.
fn reduce<R: ModReduce>(p: &Poly<R>, modulus: &Poly<BigInt>, n: &BigInt, lead_inv: &BigInt) -> Poly<R> {
    let md = modulus.degree().expect("nonzero modulus");
    let mut r = poly_mod_n(p, n);
    while let Some(d) = r.degree() {
        if d < md {
            break;
        }
        let lead = r.leading_coeff().unwrap().clone();
        let factor = lead.scale_int(lead_inv).mod_n(n);
        // r -= factor * q^(d - md) * modulus
        let mut sub = Poly::<R>::zero();
        for (i, mc) in modulus.coeffs().iter().enumerate() {
            let term = factor.scale_int(mc);
            sub = sub.add(&Poly::monomial(term, i + d - md));
        }
        r = poly_mod_n(&r.sub(&sub), n);
    }
    r
}

/// A word's matrix over `(Z/NZ)[q]/(modulus)` together with the identity
/// flag: off-diagonals zero, `a = d`, and `a` invertible in the quotient.
#[derive(Clone, Debug)]
pub enum QuotientMatrix {
    Int { entries: [Poly<BigInt>; 4], identity: bool },
    Eis { entries: [Poly<EisensteinInt>; 4], identity: bool },
}

impl QuotientMatrix {
    pub fn is_identity(&self) -> bool {
        match self {
            QuotientMatrix::Int { identity, .. } => *identity,
            QuotientMatrix::Eis { identity, .. } => *identity,
        }
    }

    pub fn entry_strings(&self) -> [String; 4] {
        match self {
            QuotientMatrix::Int { entries, .. } => {
                [0, 1, 2, 3].map(|i| entries[i].to_string())
            }
            QuotientMatrix::Eis { entries, .. } => {
                [0, 1, 2, 3].map(|i| entries[i].to_string())
            }
        }
    }
}

/// Invertibility of a reduced element in `(Z/NZ)[q]/(modulus)`, decided by
/// the polynomial extended Euclid over `Z/NZ`. An intermediate leading
/// coefficient that is not invertible mod N (possible for composite N) is
/// reported as non-invertible.
fn is_invertible_int(a: &Poly<BigInt>, modulus: &Poly<BigInt>, n: &BigInt) -> bool {
    if a.is_zero() {
        return false;
    }
    if let Some(d) = a.degree() {
        if d == 0 {
            return inv_mod(&a.coeff(0), n).is_some();
        }
    }
    // Euclid on (modulus, a) over Z/N
    let mut f = poly_mod_n(modulus, n);
    let mut g = a.clone();
    loop {
        if g.is_zero() {
            return false;
        }
        if let Some(0) = g.degree() {
            return inv_mod(&g.coeff(0), n).is_some();
        }
        let lead = g.leading_coeff().unwrap();
        let li = match inv_mod(lead, n) {
            Some(v) => v,
            None => return false,
        };
        let r = reduce(&f, &g.clone(), n, &li);
        f = g;
        g = r;
    }
}

fn eis_is_invertible(a: &Poly<EisensteinInt>, modulus: &Poly<BigInt>, n: &BigInt) -> bool {
    // norm-based reduction to the integer case: a is invertible iff
    // a * conj(a) is, and the norm has integer coefficients
    let norm = a.mul(&a.conj());
    let as_int = Poly::from_coeffs(
        norm.coeffs()
            .iter()
            .map(|c| {
                debug_assert!(Zero::is_zero(&c.b), "norm is rational");
                c.a.clone()
            })
            .collect(),
    );
    let li = inv_mod(modulus.leading_coeff().unwrap(), n).expect("checked by caller");
    let reduced = reduce(&as_int, modulus, n, &li);
    is_invertible_int(&reduced, modulus, n)
}

/// Evaluate a word with coefficients reduced mod `N` and polynomials
/// reduced mod `modulus`.
pub fn quotient_eval(
    w: &GroupWord,
    rep: RepId,
    n: &BigInt,
    modulus: &Poly<BigInt>,
) -> Result<QuotientMatrix> {
    if n < &BigInt::from(2) {
        return Err(Error::domain("modulus N must be at least 2"));
    }
    if modulus.is_zero() || modulus.degree() == Some(0) {
        return Err(Error::domain("polynomial modulus must have degree >= 1"));
    }
    let lead_inv = inv_mod(modulus.leading_coeff().unwrap(), n).ok_or_else(|| {
        Error::domain("modulus leading coefficient is not invertible mod N")
    })?;
    match rep {
        RepId::Mgo => {
            let m = eval_mod(n, modulus, &lead_inv, w, |g| {
                let im = crate::reps::mgo_image(g);
                [im.a().clone(), im.b().clone(), im.c().clone(), im.d().clone()]
            });
            let identity = quotient_identity(&m, modulus, n, is_invertible_int);
            Ok(QuotientMatrix::Int { entries: m, identity })
        }
        rep => {
            let m = eval_mod(n, modulus, &lead_inv, w, |g| {
                let im = crate::reps::pm_image(rep, g);
                [im.a().clone(), im.b().clone(), im.c().clone(), im.d().clone()]
            });
            let identity = quotient_identity(&m, modulus, n, eis_is_invertible);
            Ok(QuotientMatrix::Eis { entries: m, identity })
        }
    }
}

fn quotient_identity<R: ModReduce>(
    m: &[Poly<R>; 4],
    modulus: &Poly<BigInt>,
    n: &BigInt,
    invertible: impl Fn(&Poly<R>, &Poly<BigInt>, &BigInt) -> bool,
) -> bool {
    m[1].is_zero() && m[2].is_zero() && m[0] == m[3] && invertible(&m[0], modulus, n)
}

fn eval_mod<R: ModReduce>(
    n: &BigInt,
    modulus: &Poly<BigInt>,
    lead_inv: &BigInt,
    w: &GroupWord,
    image: impl Fn(Gen) -> [Poly<R>; 4],
) -> [Poly<R>; 4] {
    let red = |p: &Poly<R>| reduce(p, modulus, n, lead_inv);
    let mul = |x: &[Poly<R>; 4], y: &[Poly<R>; 4]| -> [Poly<R>; 4] {
        [
            red(&x[0].mul(&y[0]).add(&x[1].mul(&y[2]))),
            red(&x[0].mul(&y[1]).add(&x[1].mul(&y[3]))),
            red(&x[2].mul(&y[0]).add(&x[3].mul(&y[2]))),
            red(&x[2].mul(&y[1]).add(&x[3].mul(&y[3]))),
        ]
    };
    let mut acc = [Poly::one(), Poly::zero(), Poly::zero(), Poly::one()];
    for &(g, e) in w.letters() {
        let base = if e < 0 {
            // adjugate is the projective inverse
            let m = image(g);
            [m[3].clone(), m[1].neg(), m[2].neg(), m[0].clone()]
        } else {
            image(g)
        };
        for _ in 0..e.unsigned_abs() {
            acc = mul(&acc, &base);
        }
    }
    acc
}
