//! Golden conjugacy: at `r = -phibar^2` and `r = -phi^2` (and only there)
//! the specialized representations are conjugate to Dyer's outer
//! automorphism, and the conjugated quantization maps are exactly the
//! golden branches of Jimm.
//!
//! The MGO conjugators are `(x + t)/(-t x + t^2)` with `t = phi` (sharp
//! case) or `t = phibar` (flat case). For the plus/minus representations
//! the conjugators are
//!
//! ```text
//!   M = [[2, t^3 w - t^2], [-2t, t^2 w + t]],   w = omega^{+-1},
//! ```
//!
//! solved from the fixed-point correspondence (`fix(U_r) -> {1, -1}`,
//! `fix(K_r) -> {1/2, inf}`, `fix(L_r) -> {w, 1-w}`) and verified exactly
//! by the conjugation identities below.

use crate::error::Result;
use crate::jimm::{jimm_flat, jimm_sharp};
use crate::qrat::{BaseChoice, Branch};
use crate::reps::RepId;
use crate::ring::fields::{Field, GoldenSurd, OmegaExt};
use crate::special::nummat::FieldMat;
use crate::special::{specialize_generator, SpecMatrix, SpecValue};
use crate::words::{ExtendedRational, Gen};

/// `Q(sqrt5, omega)`.
pub type GoldenOmega = OmegaExt<GoldenSurd>;

/// Which of the two golden specialization values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GoldenCase {
    /// `r = -phibar^2`, target `Jsharp`.
    Sharp,
    /// `r = -phi^2`, target `Jflat`.
    Flat,
}

impl GoldenCase {
    /// The golden parameter `t`: `phi` for sharp, `phibar` for flat.
    pub fn t(self) -> GoldenSurd {
        match self {
            GoldenCase::Sharp => GoldenSurd::phi(),
            GoldenCase::Flat => GoldenSurd::phi_bar(),
        }
    }

    /// The specialization value `r = -t_conj^2` (sharp: `-phibar^2`).
    pub fn r(self) -> GoldenSurd {
        let tc = self.t().galois_conj();
        tc.mul(&tc).neg()
    }
}

/// Per-generator conjugation outcome plus the sweep result.
#[derive(Clone, Debug)]
pub struct GoldenReport {
    pub rep: RepId,
    pub case: GoldenCase,
    /// `M U_r M^-1 = U`
    pub u_conjugation: bool,
    /// `M K_r M^-1 = K`
    pub k_conjugation: bool,
    /// `M V_r M^-1 = UV`
    pub v_conjugation: bool,
    /// `M(psi_r(x)) = Jsharp(x)` (resp. `Jflat`) over the sweep.
    pub sweep_ok: bool,
    pub sweep_size: usize,
}

impl GoldenReport {
    pub fn all_pass(&self) -> bool {
        self.u_conjugation && self.k_conjugation && self.v_conjugation && self.sweep_ok
    }
}

fn golden_to_ext(g: &GoldenSurd) -> GoldenOmega {
    GoldenOmega::from_base(g.clone())
}

/// The MGO conjugator `[[1, t], [-t, t^2]]` over `Q(sqrt 5)`.
fn mgo_conjugator(case: GoldenCase) -> FieldMat<GoldenSurd> {
    let t = case.t();
    FieldMat::new(Field::one(), t.clone(), t.neg(), t.mul(&t))
}

/// The corrected plus/minus conjugator over `Q(sqrt5, omega)`.
fn pm_conjugator(rep: RepId, case: GoldenCase) -> FieldMat<GoldenOmega> {
    let w = match rep {
        RepId::Plus => GoldenOmega::omega(),
        RepId::Minus => GoldenOmega::omega_inv(),
        RepId::Mgo => unreachable!("plus/minus only"),
    };
    let t = golden_to_ext(&case.t());
    let t2 = t.mul(&t);
    let t3 = t2.mul(&t);
    let two = GoldenOmega::from_i64(2);
    FieldMat::new(
        two.clone(),
        t3.mul(&w).sub(&t2),
        two.mul(&t).neg(),
        t2.mul(&w).add(&t),
    )
}

fn spec_to_golden(m: SpecMatrix) -> FieldMat<GoldenOmega> {
    match m {
        SpecMatrix::Golden(m) => FieldMat::new(
            golden_to_ext(&m.a),
            golden_to_ext(&m.b),
            golden_to_ext(&m.c),
            golden_to_ext(&m.d),
        ),
        SpecMatrix::EisRat(m) => {
            let lift = |x: &crate::special::EisRational| {
                GoldenOmega::new(
                    GoldenSurd::from_rational(x.a.clone()),
                    GoldenSurd::from_rational(x.b.clone()),
                )
            };
            FieldMat::new(lift(&m.a), lift(&m.b), lift(&m.c), lift(&m.d))
        }
        _ => unreachable!("golden specializations are exact"),
    }
}

/// Specialized generator image over `Q(sqrt5, omega)`.
fn generator_at_r(rep: RepId, g: Gen, r: &GoldenSurd) -> Result<FieldMat<GoldenOmega>> {
    match rep {
        RepId::Mgo => Ok(spec_to_golden(specialize_generator(
            rep,
            g,
            &SpecValue::Golden(r.clone()),
        )?)),
        rep => {
            // evaluate the Eisenstein matrix directly in Q(sqrt5, omega)
            let m = crate::reps::pm_image(rep, g);
            let x = golden_to_ext(r);
            let ev = |p: &crate::ring::Poly<crate::ring::EisensteinInt>| {
                p.eval_map(&x, |c| {
                    GoldenOmega::new(
                        GoldenSurd::from_rational(num_rational::BigRational::from_integer(c.a.clone())),
                        GoldenSurd::from_rational(num_rational::BigRational::from_integer(c.b.clone())),
                    )
                })
            };
            Ok(FieldMat::new(ev(m.a()), ev(m.b()), ev(m.c()), ev(m.d())))
        }
    }
}

/// The branch of the quantization map that composes with `M` to give the
/// golden Jimm branches: sharp for MGO, the rational-function branch for
/// plus/minus.
pub fn golden_branch(rep: RepId) -> Branch {
    match rep {
        RepId::Mgo => Branch::Sharp,
        _ => Branch::RatFn,
    }
}

/// Verify the three generator conjugations exactly, then check
/// `M(psi_r(x))` against the golden branch over the sweep.
pub fn golden_conjugacy_check(
    rep: RepId,
    case: GoldenCase,
    sweep: &[ExtendedRational],
) -> Result<GoldenReport> {
    let r = case.r();
    let m = match rep {
        RepId::Mgo => {
            let m = mgo_conjugator(case);
            FieldMat::new(
                golden_to_ext(&m.a),
                golden_to_ext(&m.b),
                golden_to_ext(&m.c),
                golden_to_ext(&m.d),
            )
        }
        rep => pm_conjugator(rep, case),
    };

    let u_r = generator_at_r(rep, Gen::U, &r)?;
    let k_r = generator_at_r(rep, Gen::K, &r)?;
    let v_r = generator_at_r(rep, Gen::V, &r)?;
    let u = FieldMat::<GoldenOmega>::generator(Gen::U);
    let k = FieldMat::<GoldenOmega>::generator(Gen::K);
    let uv = u.mul(&FieldMat::generator(Gen::V));

    let u_conjugation = u_r.conjugate_by(&m).proj_eq(&u);
    let k_conjugation = k_r.conjugate_by(&m).proj_eq(&k);
    let v_conjugation = v_r.conjugate_by(&m).proj_eq(&uv);

    let base = BaseChoice::new(rep, golden_branch(rep))?;
    let r_ext = golden_to_ext(&r);
    let omega = GoldenOmega::omega();
    let mut sweep_ok = true;
    for x in sweep {
        let psi = crate::special::psi_value_in(x, base, &r_ext, Some(&omega))?;
        let target = match case {
            GoldenCase::Sharp => jimm_sharp(x),
            GoldenCase::Flat => jimm_flat(x),
        };
        let target = golden_to_ext(&target);
        let got = match psi {
            Some(v) => m.mobius(&v),
            None => {
                // psi_r(x) = infinity: M(infinity) = a/c
                m.a.div(&m.c)
            }
        };
        if got != Some(target) {
            sweep_ok = false;
            break;
        }
    }

    Ok(GoldenReport {
        rep,
        case,
        u_conjugation,
        k_conjugation,
        v_conjugation,
        sweep_ok,
        sweep_size: sweep.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_sweep() -> Vec<ExtendedRational> {
        let mut v: Vec<_> = (1..=8)
            .flat_map(|d| (-8i64..=8).map(move |n| (n, d)))
            .filter(|&(n, d)| num_integer::gcd(n, d) == 1)
            .map(|(n, d)| ExtendedRational::new(n, d))
            .collect();
        v.push(ExtendedRational::infinity());
        v
    }

    #[test]
    fn r_values() {
        // -phibar^2 = (-3 + sqrt5)/2, -phi^2 = (-3 - sqrt5)/2
        let sharp_r = GoldenCase::Sharp.r();
        assert_eq!(sharp_r.p, GoldenSurd::rational(-3, 2));
        assert_eq!(sharp_r.s, GoldenSurd::rational(1, 2));
        // (-phibar^2)(-phi^2) = (phi phibar)^2 = 1: the q <-> 1/q symmetry
        let prod = GoldenCase::Sharp.r().mul(&GoldenCase::Flat.r());
        assert_eq!(prod, GoldenSurd::from_i64(1));
    }

    #[test]
    fn mgo_cases() {
        for case in [GoldenCase::Sharp, GoldenCase::Flat] {
            let rep = golden_conjugacy_check(RepId::Mgo, case, &small_sweep()).unwrap();
            assert!(rep.u_conjugation, "{case:?} U");
            assert!(rep.k_conjugation, "{case:?} K");
            assert!(rep.v_conjugation, "{case:?} V");
            assert!(rep.sweep_ok, "{case:?} sweep");
        }
    }

    #[test]
    fn plus_minus_cases() {
        for rep_id in [RepId::Plus, RepId::Minus] {
            for case in [GoldenCase::Sharp, GoldenCase::Flat] {
                let rep = golden_conjugacy_check(rep_id, case, &small_sweep()).unwrap();
                assert!(rep.all_pass(), "{rep_id} {case:?}: {rep:?}");
            }
        }
    }

    #[test]
    fn wrong_r_fails_conjugation() {
        // at any other specialization the conjugation identities break;
        // spot-check r = -1 (a harmless involution elsewhere)
        let m = mgo_conjugator(GoldenCase::Sharp);
        let m = FieldMat::new(
            golden_to_ext(&m.a),
            golden_to_ext(&m.b),
            golden_to_ext(&m.c),
            golden_to_ext(&m.d),
        );
        let r = GoldenSurd::from_i64(-1);
        let u_r = generator_at_r(RepId::Mgo, Gen::U, &r).unwrap();
        let u = FieldMat::<GoldenOmega>::generator(Gen::U);
        assert!(!u_r.conjugate_by(&m).proj_eq(&u));
    }
}
