//! The three quantization representations as generator-image tables over
//! `Z[q]` and `Z[w][q]`, word evaluation, symbolic relation verification,
//! and the exact q=1 conjugation onto the classical generators.
//!
//! Only the images of `T`, `S` (resp. `S+-`) and `V` (resp. `V+-`) are
//! stored; `L = TS`, `U = SV`, `K = TV` are derived, so the remaining
//! generator images serve as cross-checks rather than inputs. Laurent
//! entries are cleared to polynomials by projective scaling.

use crate::error::Result;
use crate::projective::ProjMatrix;
use crate::ring::fields::{Field, OmegaExt};
use crate::ring::{Coeff, EisensteinInt, Poly};
use crate::special::nummat::FieldMat;
use crate::words::{Gen, GroupWord};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Which of the three representations.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum RepId {
    /// The Morier-Genoud--Ovsienko representation over `Z[q]`.
    Mgo,
    /// The conjugate representation over `Z[w][q]` with `omega^{+1}`.
    Plus,
    /// Its Eisenstein conjugate (`omega -> omega^{-1}`).
    Minus,
}

impl RepId {
    pub fn all() -> [RepId; 3] {
        [RepId::Mgo, RepId::Plus, RepId::Minus]
    }

    pub fn is_eisenstein(self) -> bool {
        self != RepId::Mgo
    }

    /// `omega^{+-1}`: the sixth root of unity attached to the
    /// representation.
    pub fn omega(self) -> EisensteinInt {
        match self {
            RepId::Mgo => panic!("MGO has no omega"),
            RepId::Plus => EisensteinInt::omega(),
            RepId::Minus => EisensteinInt::omega_inv(),
        }
    }
}

impl fmt::Display for RepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepId::Mgo => write!(f, "mgo"),
            RepId::Plus => write!(f, "plus"),
            RepId::Minus => write!(f, "minus"),
        }
    }
}

fn zp(c: &[i64]) -> Poly<BigInt> {
    Poly::from_i64s(c)
}

fn ep(c: &[(i64, i64)]) -> Poly<EisensteinInt> {
    Poly::from_coeffs(c.iter().map(|&(a, b)| EisensteinInt::new(a, b)).collect())
}

/// Integer-coefficient generator images of the MGO representation.
pub fn mgo_image(g: Gen) -> ProjMatrix<BigInt> {
    let m = |a: &[i64], b: &[i64], c: &[i64], d: &[i64]| {
        ProjMatrix::new(zp(a), zp(b), zp(c), zp(d))
    };
    match g {
        // T = [[q, 1], [0, 1]], S = [[0, -1], [q, 0]], V = [[q, 1-q], [q-q^2, -q]]
        Gen::T => m(&[0, 1], &[1], &[], &[1]),
        Gen::S => m(&[], &[-1], &[0, 1], &[]),
        Gen::V => m(&[0, 1], &[1, -1], &[0, 1, -1], &[0, -1]),
        Gen::L => mgo_image(Gen::T).compose(&mgo_image(Gen::S)),
        Gen::U => mgo_image(Gen::S).compose(&mgo_image(Gen::V)),
        Gen::K => mgo_image(Gen::T).compose(&mgo_image(Gen::V)),
    }
}

/// Eisenstein generator images of `Psi^{+-}`, with Laurent entries cleared:
/// `S+- = [[q, 1], [q(w^{+-1} - q), -q]]` and `V+-` scaled by `q(q - w^{+-1})`.
pub fn pm_image(rep: RepId, g: Gen) -> ProjMatrix<EisensteinInt> {
    assert!(rep.is_eisenstein());
    let w = rep.omega();
    match g {
        Gen::T => ProjMatrix::new(ep(&[(0, 0), (1, 0)]), ep(&[(1, 0)]), Poly::zero(), ep(&[(1, 0)])),
        Gen::S => {
            // [[q, 1], [q w - q^2, -q]]
            let c = Poly::from_coeffs(vec![EisensteinInt::new(0, 0), w.clone(), EisensteinInt::from_i64(-1)]);
            ProjMatrix::new(
                ep(&[(0, 0), (1, 0)]),
                ep(&[(1, 0)]),
                c,
                ep(&[(0, 0), (-1, 0)]),
            )
        }
        Gen::V => {
            // a = q(q - w), b = q + 1, c = q(1 - q)(q - w), d = -a
            let q = Poly::monomial(EisensteinInt::from_i64(1), 1);
            let q_minus_w = Poly::from_coeffs(vec![w.neg(), EisensteinInt::from_i64(1)]);
            let one_minus_q = ep(&[(1, 0), (-1, 0)]);
            let a = q.mul(&q_minus_w);
            let b = ep(&[(1, 0), (1, 0)]);
            let c = q.mul(&one_minus_q).mul(&q_minus_w);
            let d = a.neg();
            ProjMatrix::new(a, b, c, d)
        }
        Gen::L => pm_image(rep, Gen::T).compose(&pm_image(rep, Gen::S)),
        Gen::U => pm_image(rep, Gen::S).compose(&pm_image(rep, Gen::V)),
        Gen::K => pm_image(rep, Gen::T).compose(&pm_image(rep, Gen::V)),
    }
}

/// Word evaluation accumulates raw products and canonicalizes once at the
/// end; a cheap content/q-power strip after each letter keeps entry sizes
/// down without running the full polynomial gcd.
fn eval_in<R: Coeff>(image: impl Fn(Gen) -> ProjMatrix<R>, w: &GroupWord) -> ProjMatrix<R> {
    let raw_mul = |x: &[Poly<R>; 4], y: &[Poly<R>; 4]| -> [Poly<R>; 4] {
        [
            x[0].mul(&y[0]).add(&x[1].mul(&y[2])),
            x[0].mul(&y[1]).add(&x[1].mul(&y[3])),
            x[2].mul(&y[0]).add(&x[3].mul(&y[2])),
            x[2].mul(&y[1]).add(&x[3].mul(&y[3])),
        ]
    };
    let cheap_reduce = |m: [Poly<R>; 4]| -> [Poly<R>; 4] {
        let mut content = R::zero();
        let mut val = usize::MAX;
        for e in &m {
            if !e.is_zero() {
                content = content.gcd(&e.content());
                val = val.min(e.q_valuation());
            }
        }
        if (content.is_unit() && val == 0) || val == usize::MAX {
            return m;
        }
        m.map(|e| {
            if e.is_zero() {
                e
            } else {
                let stripped = e.shift_down(val);
                stripped
                    .exact_div(&Poly::constant(content.clone()))
                    .expect("common content divides")
            }
        })
    };
    let mut acc = [Poly::<R>::one(), Poly::zero(), Poly::zero(), Poly::one()];
    for &(g, e) in w.letters() {
        let img = image(g);
        let base: [Poly<R>; 4] = if e < 0 {
            let inv = img.inverse();
            [inv.a().clone(), inv.b().clone(), inv.c().clone(), inv.d().clone()]
        } else {
            [img.a().clone(), img.b().clone(), img.c().clone(), img.d().clone()]
        };
        for _ in 0..e.unsigned_abs() {
            acc = raw_mul(&acc, &base);
        }
        acc = cheap_reduce(acc);
    }
    let [a, b, c, d] = acc;
    ProjMatrix::new(a, b, c, d)
}

/// Evaluate a word in the MGO representation.
pub fn mgo_eval(w: &GroupWord) -> ProjMatrix<BigInt> {
    eval_in(mgo_image, w)
}

/// Evaluate a word in `Psi^{+-}`.
pub fn pm_eval(rep: RepId, w: &GroupWord) -> ProjMatrix<EisensteinInt> {
    eval_in(|g| pm_image(rep, g), w)
}

/// Raw (unreduced) product of the generator images, row-major. This is the
/// representative whose entry gcds the collapse examples quote: canonical
/// reduction would silently divide out the shared `q^k` factors.
fn eval_raw_in<R: Coeff>(image: impl Fn(Gen) -> ProjMatrix<R>, w: &GroupWord) -> [Poly<R>; 4] {
    let mut acc = [Poly::<R>::one(), Poly::zero(), Poly::zero(), Poly::one()];
    for &(g, e) in w.letters() {
        let img = image(g);
        let base: [Poly<R>; 4] = if e < 0 {
            // adjugate: the projective inverse without normalization
            [img.d().clone(), img.b().neg(), img.c().neg(), img.a().clone()]
        } else {
            [img.a().clone(), img.b().clone(), img.c().clone(), img.d().clone()]
        };
        for _ in 0..e.unsigned_abs() {
            acc = [
                acc[0].mul(&base[0]).add(&acc[1].mul(&base[2])),
                acc[0].mul(&base[1]).add(&acc[1].mul(&base[3])),
                acc[2].mul(&base[0]).add(&acc[3].mul(&base[2])),
                acc[2].mul(&base[1]).add(&acc[3].mul(&base[3])),
            ];
        }
    }
    acc
}

pub fn mgo_eval_raw(w: &GroupWord) -> [Poly<BigInt>; 4] {
    eval_raw_in(mgo_image, w)
}

pub fn pm_eval_raw(rep: RepId, w: &GroupWord) -> [Poly<EisensteinInt>; 4] {
    eval_raw_in(|g| pm_image(rep, g), w)
}

/// One verified relation in a report.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub pass: bool,
}

/// Verify the defining `PGL_2(Z)` relations symbolically for a generator
/// image table. Failures are entries, not errors.
pub fn check_relations_table<R: Coeff>(image: impl Fn(Gen) -> ProjMatrix<R>) -> Vec<RelationCheck> {
    let t = image(Gen::T);
    let s = image(Gen::S);
    let v = image(Gen::V);
    let u = image(Gen::U);
    let k = image(Gen::K);
    let ts = t.compose(&s);
    let tv = t.compose(&v);
    let sv = s.compose(&v);
    let ku = k.compose(&u);
    vec![
        RelationCheck { relation: "S^2 = 1", pass: s.pow(2).is_identity() },
        RelationCheck { relation: "(TS)^3 = 1", pass: ts.pow(3).is_identity() },
        RelationCheck { relation: "V^2 = 1", pass: v.pow(2).is_identity() },
        RelationCheck { relation: "(TV)^2 = 1", pass: tv.pow(2).is_identity() },
        RelationCheck { relation: "(SV)^2 = 1", pass: sv.pow(2).is_identity() },
        RelationCheck { relation: "U^2 = 1", pass: u.pow(2).is_identity() },
        RelationCheck { relation: "K^2 = 1", pass: k.pow(2).is_identity() },
        RelationCheck { relation: "(KU)^3 = 1", pass: ku.pow(3).is_identity() },
    ]
}

/// Relation report for one representation.
pub fn rep_check_relations(rep: RepId) -> Vec<RelationCheck> {
    match rep {
        RepId::Mgo => check_relations_table(mgo_image),
        _ => check_relations_table(|g| pm_image(rep, g)),
    }
}

/// The field `Q(w)` used for exact specialization at q = 1.
pub type Qw = OmegaExt<BigRational>;

fn eis_to_qw(z: &EisensteinInt) -> Qw {
    OmegaExt::new(
        BigRational::from_integer(z.a.clone()),
        BigRational::from_integer(z.b.clone()),
    )
}

/// Specialize an Eisenstein projective matrix at q = 1 into `Q(w)`.
pub fn pm_at_one(rep: RepId, g: Gen) -> FieldMat<Qw> {
    let m = pm_image(rep, g);
    let one: Qw = Field::one();
    let ev = |p: &Poly<EisensteinInt>| p.eval_map(&one, eis_to_qw);
    FieldMat::new(ev(m.a()), ev(m.b()), ev(m.c()), ev(m.d()))
}

/// One generator's q=1 conjugation outcome.
#[derive(Clone, Debug)]
pub struct ConjugationCheck {
    pub generator: Gen,
    pub pass: bool,
}

/// Specializes each `Psi^{+-}` generator image at q = 1 (exact Eisenstein
/// arithmetic), conjugates by `H = x + w^{+-1}`, and verifies equality with
/// the classical integer generators.
pub fn q1_conjugation_check(rep: RepId) -> Result<Vec<ConjugationCheck>> {
    if !rep.is_eisenstein() {
        return Err(crate::error::Error::domain(
            "q=1 conjugation applies to the plus/minus representations",
        ));
    }
    let w = eis_to_qw(&rep.omega());
    let h = FieldMat::new(Field::one(), w, Field::zero(), Field::one());
    let mut out = Vec::new();
    for g in [Gen::T, Gen::S, Gen::L, Gen::U, Gen::V, Gen::K] {
        let specialized = pm_at_one(rep, g);
        let conj = specialized.conjugate_by(&h);
        let classical = FieldMat::<Qw>::generator(g);
        out.push(ConjugationCheck { generator: g, pass: conj.proj_eq(&classical) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn mgo_derived_images_match_table() {
        // L = [[1, -1], [1, 0]]
        assert_eq!(
            mgo_image(Gen::L),
            ProjMatrix::new(zp(&[1]), zp(&[-1]), zp(&[1]), zp(&[]))
        );
        // U = [[q-1, 1], [q, 1-q]]
        assert_eq!(
            mgo_image(Gen::U),
            ProjMatrix::new(zp(&[-1, 1]), zp(&[1]), zp(&[0, 1]), zp(&[1, -1]))
        );
        // K = [[1, -q], [1-q, -1]]
        assert_eq!(
            mgo_image(Gen::K),
            ProjMatrix::new(zp(&[1]), zp(&[0, -1]), zp(&[1, -1]), zp(&[-1]))
        );
    }

    #[test]
    fn pm_derived_l_image() {
        // L+ = [[w, 0], [w - q, -1]]
        let l = pm_image(RepId::Plus, Gen::L);
        let expected = ProjMatrix::new(
            ep(&[(0, 1)]),
            Poly::zero(),
            ep(&[(0, 1), (-1, 0)]),
            ep(&[(-1, 0)]),
        );
        assert_eq!(l, expected);
        // minus is the coefficientwise conjugate of plus
        let lm = pm_image(RepId::Minus, Gen::L);
        let conj = ProjMatrix::new(
            expected.a().conj(),
            expected.b().conj(),
            expected.c().conj(),
            expected.d().conj(),
        );
        assert_eq!(lm, conj);
    }

    #[test]
    fn all_relations_pass() {
        for rep in RepId::all() {
            for chk in rep_check_relations(rep) {
                assert!(chk.pass, "{rep}: {}", chk.relation);
            }
        }
    }

    #[test]
    fn mutated_s_fails_ts_cubed() {
        // sign flip on one entry of S breaks (TS)^3 = 1
        let bad_s = ProjMatrix::new(zp(&[]), zp(&[1]), zp(&[0, 1]), zp(&[]));
        let checks = check_relations_table(|g| match g {
            Gen::S => bad_s.clone(),
            g => mgo_image(g),
        });
        let ts3 = checks.iter().find(|c| c.relation == "(TS)^3 = 1").unwrap();
        assert!(!ts3.pass);
    }

    #[test]
    fn eval_examples() {
        // A = Psi(T S T S T^-1) = [[0, q], [-1, q+1]]
        let a = mgo_eval(&parse_word("T S T S T^-1").unwrap());
        assert_eq!(
            a,
            ProjMatrix::new(zp(&[]), zp(&[0, 1]), zp(&[-1]), zp(&[1, 1]))
        );
        // A+ = [[-1, 1], [q - w, w + w^2 q]] (projectively)
        let ap = pm_eval(RepId::Plus, &parse_word("T S T S T^-1").unwrap());
        let expected = ProjMatrix::new(
            ep(&[(-1, 0)]),
            ep(&[(1, 0)]),
            ep(&[(0, -1), (1, 0)]),
            // w + w^2 q = w + (w - 1) q
            Poly::from_coeffs(vec![EisensteinInt::new(0, 1), EisensteinInt::new(-1, 1)]),
        );
        assert_eq!(ap, expected);
        assert!(mgo_eval(&GroupWord::identity()).is_identity());
    }

    #[test]
    fn traces_and_dets() {
        // TV has zero trace for MGO (eq. (TV)^2 = 1)
        assert!(mgo_image(Gen::K).is_trace_zero());
        assert!(mgo_image(Gen::U).is_trace_zero());
        assert!(pm_image(RepId::Plus, Gen::U).is_trace_zero());
    }

    #[test]
    fn mgo_specializes_to_classical_at_one() {
        use crate::words::GroupWord;
        let words = ["T S", "T^3 S T^-2", "S T S T S", "(T^2 S)^3"];
        for text in words {
            let w: GroupWord = text.parse().unwrap();
            let sym = mgo_eval(&w);
            let one = BigRational::from_integer(1.into());
            let ev = |p: &Poly<BigInt>| p.eval_map(&one, |c| BigRational::from_integer(c.clone()));
            let frozen = FieldMat::new(ev(sym.a()), ev(sym.b()), ev(sym.c()), ev(sym.d()));
            let classical = FieldMat::<BigRational>::from_word(&w);
            assert!(frozen.proj_eq(&classical), "{text}");
        }
    }

    #[test]
    fn q1_conjugation() {
        for rep in [RepId::Plus, RepId::Minus] {
            for chk in q1_conjugation_check(rep).unwrap() {
                assert!(chk.pass, "{rep}: {:?}", chk.generator);
            }
        }
        assert!(q1_conjugation_check(RepId::Mgo).is_err());
    }
}
