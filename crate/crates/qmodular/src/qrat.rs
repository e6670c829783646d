//! The quantization maps on `P^1(Z)`: the sharp/flat branches for the MGO
//! representation and the unit/ratfn branches for the conjugate pair,
//! anchored exactly where the consistency propositions prove
//! well-definedness, plus the equivariance oracle.

use crate::error::{Error, Result};
use crate::projective::{ProjMatrix, ProjPoint};
use crate::reps::{mgo_image, pm_image, RepId};
use crate::ring::{Coeff, EisensteinInt, Poly};
use crate::words::{cf_word, ExtendedRational, Gen, GroupWord};
use num_bigint::BigInt;
use std::fmt;

/// Branch of a quantization map. `Sharp`/`Flat` belong to the MGO
/// representation (`psi(1) = 1` resp. `psi(1) = q`); `Unit`/`RatFn` to the
/// plus/minus pair (`psi(1) = w^{-+1}` resp. `psi(1) = 1/(1 +- w^{+-2} q)`),
/// names coined here for the two branches of the conjugate pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Branch {
    Sharp,
    Flat,
    Unit,
    RatFn,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Sharp => write!(f, "sharp"),
            Branch::Flat => write!(f, "flat"),
            Branch::Unit => write!(f, "unit"),
            Branch::RatFn => write!(f, "ratfn"),
        }
    }
}

/// A representation together with a branch choice; the data determining one
/// quantization map.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct BaseChoice {
    pub rep: RepId,
    pub branch: Branch,
}

impl BaseChoice {
    pub fn new(rep: RepId, branch: Branch) -> Result<Self> {
        let ok = match rep {
            RepId::Mgo => matches!(branch, Branch::Sharp | Branch::Flat),
            _ => matches!(branch, Branch::Unit | Branch::RatFn),
        };
        if !ok {
            return Err(Error::domain(format!(
                "branch {branch} does not belong to representation {rep}"
            )));
        }
        Ok(BaseChoice { rep, branch })
    }

    pub fn all() -> [BaseChoice; 6] {
        [
            BaseChoice { rep: RepId::Mgo, branch: Branch::Sharp },
            BaseChoice { rep: RepId::Mgo, branch: Branch::Flat },
            BaseChoice { rep: RepId::Plus, branch: Branch::Unit },
            BaseChoice { rep: RepId::Plus, branch: Branch::RatFn },
            BaseChoice { rep: RepId::Minus, branch: Branch::Unit },
            BaseChoice { rep: RepId::Minus, branch: Branch::RatFn },
        ]
    }
}

impl fmt::Display for BaseChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.rep, self.branch)
    }
}

/// A quantized rational: a projective point over `Z[q]` or `Z[w][q]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuantizedPoint {
    Int(ProjPoint<BigInt>),
    Eis(ProjPoint<EisensteinInt>),
}

impl fmt::Display for QuantizedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuantizedPoint::Int(p) => write!(f, "{p}"),
            QuantizedPoint::Eis(p) => write!(f, "{p}"),
        }
    }
}

/// MGO base points at the anchor `infinity`: sharp fixes `[1 : 0]`, flat
/// `[1 : 1-q]` (equivalently `psi(1) = 1` resp. `psi(1) = q`).
fn mgo_base(branch: Branch) -> ProjPoint<BigInt> {
    match branch {
        Branch::Sharp => ProjPoint::infinity(),
        Branch::Flat => ProjPoint::new(Poly::one(), Poly::from_i64s(&[1, -1])),
        _ => unreachable!("validated by BaseChoice"),
    }
}

/// Plus/minus base points at the anchor `1`: unit is `psi(1) = w^{-+1}`,
/// ratfn is `psi(1) = 1/(1 + w^{+-2} q)`.
fn pm_base(rep: RepId, branch: Branch) -> ProjPoint<EisensteinInt> {
    let w = rep.omega();
    match branch {
        Branch::Unit => {
            // the inverse unit: omega^{-1} for plus, omega for minus
            let winv = EisensteinInt::one().exact_div(&w).expect("unit");
            ProjPoint::new(Poly::constant(winv), Poly::one())
        }
        Branch::RatFn => {
            // 1/(1 + w^{+-2} q): denominator polynomial 1 + w^2 q
            let w2 = w.mul(&w);
            ProjPoint::new(
                Poly::one(),
                Poly::from_coeffs(vec![EisensteinInt::one(), w2]),
            )
        }
        _ => unreachable!("validated by BaseChoice"),
    }
}

/// The word `g` with `g(anchor) = x` for the branch's anchor: `cf_word(x)`
/// for the infinity-anchored MGO branches, `cf_word(x) . (TS)^{-1}` for the
/// 1-anchored plus/minus branches.
pub fn anchor_word(base: BaseChoice, x: &ExtendedRational) -> GroupWord {
    let mut w = cf_word(x);
    if base.rep.is_eisenstein() {
        // (TS)^{-1} = S T^{-1} sends 1 to infinity
        w.push(Gen::S, 1);
        w.push(Gen::T, -1);
    }
    w
}

/// Apply a word's representation image to a point, letter by letter, using
/// the explicit forms of powers of T (cheap shifts) where possible. The
/// result is a raw (unnormalized) coordinate pair.
fn fold_word_raw<R: Coeff>(
    image: &impl Fn(Gen) -> ProjMatrix<R>,
    w: &GroupWord,
    base: &ProjPoint<R>,
) -> (Poly<R>, Poly<R>) {
    let mut x = base.x().clone();
    let mut y = base.y().clone();
    for &(g, e) in w.letters().iter().rev() {
        if g == Gen::T {
            // T^a = [[q^a, [a]_q], [0, 1]]: apply without a matrix product
            let a = e.unsigned_abs() as usize;
            let qa = Poly::monomial(R::one(), a);
            let qint = Poly::from_coeffs(vec![R::one(); a]);
            if e > 0 {
                x = qa.mul(&x).add(&qint.mul(&y));
            } else {
                // (T^a)^{-1} = [[1, -[a]_q], [0, q^a]]
                x = x.sub(&qint.mul(&y));
                y = qa.mul(&y);
            }
        } else {
            let m = image(g).pow(e);
            let nx = m.a().mul(&x).add(&m.b().mul(&y));
            let ny = m.c().mul(&x).add(&m.d().mul(&y));
            x = nx;
            y = ny;
        }
    }
    (x, y)
}

fn fold_word<R: Coeff>(
    image: &impl Fn(Gen) -> ProjMatrix<R>,
    w: &GroupWord,
    base: &ProjPoint<R>,
) -> ProjPoint<R> {
    let (x, y) = fold_word_raw(image, w, base);
    ProjPoint::new(x, y)
}

/// The quantization map: `psi(x) = Psi(g) . base` where `g` carries the
/// anchor to `x`. Returns a canonical projective point with coprime
/// coordinates.
pub fn quantize(x: &ExtendedRational, base: BaseChoice) -> QuantizedPoint {
    let w = anchor_word(base, x);
    match base.rep {
        RepId::Mgo => QuantizedPoint::Int(fold_word(&mgo_image, &w, &mgo_base(base.branch))),
        rep => QuantizedPoint::Eis(fold_word(
            &|g| pm_image(rep, g),
            &w,
            &pm_base(rep, base.branch),
        )),
    }
}

/// Action of a generator on `P^1(Z)`.
pub fn generator_action(g: Gen, x: &ExtendedRational) -> ExtendedRational {
    crate::words::IntMat::generator(g).apply(x)
}

/// The equivariance oracle: checks `psi(g x) = Psi(g) psi(x)` exactly.
/// Only the `PSL` generators are admitted; the PGL ones are obstructed
/// (forcing U-equivariance at x = 1 yields the contradiction 1 = q),
/// and the precondition enforces it.
pub fn verify_equivariance(base: BaseChoice, g: Gen, x: &ExtendedRational) -> Result<bool> {
    if !matches!(g, Gen::T | Gen::S | Gen::L) {
        return Err(Error::domain(
            "equivariance holds only for the PSL generators T, S, L",
        ));
    }
    let gx = generator_action(g, x);
    let lhs = quantize(&gx, base);
    let rhs = match (quantize(x, base), base.rep) {
        (QuantizedPoint::Int(p), RepId::Mgo) => QuantizedPoint::Int(mgo_image(g).apply(&p)),
        (QuantizedPoint::Eis(p), rep) => QuantizedPoint::Eis(pm_image(rep, g).apply(&p)),
        _ => unreachable!("representation and point kind always agree"),
    };
    Ok(lhs == rhs)
}

/// Outcome of a full equivariance sweep.
#[derive(Clone, Debug)]
pub struct EquivSweepReport {
    pub base: BaseChoice,
    pub checked: usize,
    pub failures: Vec<(Gen, ExtendedRational)>,
}

impl EquivSweepReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check `psi(g x) = Psi(g) psi(x)` for `g in {T, S, L}` over every `x` in
/// the sweep. Uses raw coordinate pairs and cross-product comparison, so no
/// polynomial gcds run in the loop.
pub fn equivariance_sweep(base: BaseChoice, xs: &[ExtendedRational]) -> EquivSweepReport {
    use rayon::prelude::*;
    fn sweep_in<R: Coeff + Send + Sync>(
        image: &(impl Fn(Gen) -> ProjMatrix<R> + Sync),
        base_pt: &ProjPoint<R>,
        base: BaseChoice,
        xs: &[ExtendedRational],
    ) -> EquivSweepReport {
        let gens = [Gen::T, Gen::S, Gen::L];
        let failures: Vec<(Gen, ExtendedRational)> = xs
            .par_iter()
            .flat_map_iter(|x| {
                let wx = anchor_word(base, x);
                let (px, py) = fold_word_raw(image, &wx, base_pt);
                let mut fails = Vec::new();
                for g in gens {
                    let gx = generator_action(g, x);
                    let wgx = anchor_word(base, &gx);
                    let (lx, ly) = fold_word_raw(image, &wgx, base_pt);
                    let m = image(g);
                    let rx = m.a().mul(&px).add(&m.b().mul(&py));
                    let ry = m.c().mul(&px).add(&m.d().mul(&py));
                    // projective equality without normalization
                    if !lx.mul(&ry).sub(&ly.mul(&rx)).is_zero() {
                        fails.push((g, x.clone()));
                    }
                }
                fails
            })
            .collect();
        EquivSweepReport { base, checked: xs.len() * gens.len(), failures }
    }
    match base.rep {
        RepId::Mgo => sweep_in(&mgo_image, &mgo_base(base.branch), base, xs),
        rep => sweep_in(&|g| pm_image(rep, g), &pm_base(rep, base.branch), base, xs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{mgo_eval, pm_eval};
    use crate::ring::poly::q_integer;
    use crate::words::parse_word;

    fn xr(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(n, d)
    }

    fn mgo_sharp() -> BaseChoice {
        BaseChoice::new(RepId::Mgo, Branch::Sharp).unwrap()
    }

    #[test]
    fn branch_validation() {
        assert!(BaseChoice::new(RepId::Mgo, Branch::Unit).is_err());
        assert!(BaseChoice::new(RepId::Plus, Branch::Sharp).is_err());
        assert!(BaseChoice::new(RepId::Plus, Branch::RatFn).is_ok());
    }

    #[test]
    fn quantization_condition() {
        // psi(m) = [1 + q + ... + q^(m-1) : 1]
        for m in 1..=20i64 {
            let p = quantize(&xr(m, 1), mgo_sharp());
            let expected = QuantizedPoint::Int(ProjPoint::new(q_integer(m as usize), Poly::one()));
            assert_eq!(p, expected, "m = {m}");
        }
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(
            quantize(&ExtendedRational::infinity(), mgo_sharp()),
            QuantizedPoint::Int(ProjPoint::infinity())
        );
        // psi(1/2) = [q : 1 + q]
        let p = quantize(&xr(1, 2), mgo_sharp());
        let expected =
            QuantizedPoint::Int(ProjPoint::new(Poly::from_i64s(&[0, 1]), Poly::from_i64s(&[1, 1])));
        assert_eq!(p, expected);
    }

    #[test]
    fn flat_value_at_one_is_q() {
        let flat = BaseChoice::new(RepId::Mgo, Branch::Flat).unwrap();
        let p = quantize(&xr(1, 1), flat);
        let expected =
            QuantizedPoint::Int(ProjPoint::new(Poly::from_i64s(&[0, 1]), Poly::one()));
        assert_eq!(p, expected);
    }

    #[test]
    fn pm_value_at_one_is_base() {
        let unit = BaseChoice::new(RepId::Plus, Branch::Unit).unwrap();
        let p = quantize(&xr(1, 1), unit);
        // omega^{-1} = 1 - omega
        let expected = QuantizedPoint::Eis(ProjPoint::new(
            Poly::constant(EisensteinInt::new(1, -1)),
            Poly::one(),
        ));
        assert_eq!(p, expected);
        let ratfn = BaseChoice::new(RepId::Minus, Branch::RatFn).unwrap();
        let p = quantize(&xr(1, 1), ratfn);
        // 1/(1 - w q): omega^{-2} = conj(omega^2) = conj(w - 1) = -w... times q
        let w = EisensteinInt::omega_inv();
        let w2 = w.mul(&w);
        let expected = QuantizedPoint::Eis(ProjPoint::new(
            Poly::one(),
            Poly::from_coeffs(vec![EisensteinInt::one(), w2]),
        ));
        assert_eq!(p, expected);
    }

    #[test]
    fn base_points_fixed_by_stabilizer_image() {
        // quantize(1) must be fixed by the image of A = T S T S T^-1
        let a_word = parse_word("T S T S T^-1").unwrap();
        for base in BaseChoice::all() {
            match quantize(&xr(1, 1), base) {
                QuantizedPoint::Int(p) => {
                    assert_eq!(mgo_eval(&a_word).apply(&p), p, "{base}");
                }
                QuantizedPoint::Eis(p) => {
                    assert_eq!(pm_eval(base.rep, &a_word).apply(&p), p, "{base}");
                }
            }
        }
    }

    #[test]
    fn equivariance_spot_checks() {
        for base in BaseChoice::all() {
            for g in [Gen::T, Gen::S, Gen::L] {
                for (n, d) in [(5i64, 1i64), (2, 3), (-7, 4), (0, 1), (1, 0), (1, 1)] {
                    let x = ExtendedRational::new(n, d);
                    assert!(
                        verify_equivariance(base, g, &x).unwrap(),
                        "base {base}, g {g:?}, x {x}"
                    );
                }
            }
        }
        assert!(verify_equivariance(mgo_sharp(), Gen::U, &xr(1, 1)).is_err());
    }

    #[test]
    fn pgl_equivariance_fails_at_one() {
        // the documented obstruction: U-equivariance would force psi(1) = q
        // while the quantization condition forces psi(1) = 1
        let base = mgo_sharp();
        let x = xr(1, 1);
        let u = mgo_image(Gen::U);
        let lhs = quantize(&generator_action(Gen::U, &x), base);
        let rhs = match quantize(&x, base) {
            QuantizedPoint::Int(p) => QuantizedPoint::Int(u.apply(&p)),
            _ => unreachable!(),
        };
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn coprime_coordinates() {
        use crate::ring::poly::poly_gcd;
        for (n, d) in [(3i64, 1i64), (1, 2), (22, 7), (-9, 5)] {
            if let QuantizedPoint::Int(p) = quantize(&xr(n, d), mgo_sharp()) {
                let g = poly_gcd(p.x(), p.y()).unwrap();
                assert!(g.is_one(), "{n}/{d}: gcd {g}");
            }
        }
    }
}
