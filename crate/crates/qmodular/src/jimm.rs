//! The Jimm involution of the positive rationals, its extension to the
//! negatives, and the two golden-valued branches induced by Dyer's outer
//! automorphism.

use crate::error::{Error, Result};
use crate::ring::fields::{Field, GoldenSurd};
use crate::special::nummat::FieldMat;
use crate::words::{cf_word, dyer_alpha, ExtendedRational, Gen, GroupWord};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `J` on positive rationals (and infinity) by recursion on the continued
/// fraction: `J(1) = 1`, `J(inf) = inf`, `J(1+x) = 1 + 1/J(x)`,
/// `J(1/x) = 1/J(x)`. Each step reduces the continued-fraction weight.
pub fn jimm(x: &ExtendedRational) -> Result<ExtendedRational> {
    if x.is_infinity() {
        return Ok(ExtendedRational::infinity());
    }
    if !x.is_positive() {
        return Err(Error::domain("jimm is defined on positive rationals; use jimm_ext"));
    }
    let mut num = x.num().clone();
    let mut den = x.den().clone();
    // iterative CF descent with a continuation stack: op 0 records the
    // pending "1 + 1/." , op 1 the pending "1/."
    let one = BigInt::from(1);
    let mut ops: Vec<u8> = Vec::new();
    loop {
        if den == one && num == one {
            break;
        }
        if num > den {
            // x = 1 + y
            num -= &den;
            ops.push(0);
        } else {
            // x < 1: x = 1/y
            std::mem::swap(&mut num, &mut den);
            ops.push(1);
        }
    }
    // J(1) = 1, unwind
    let mut jn = BigInt::from(1);
    let mut jd = BigInt::from(1);
    for op in ops.into_iter().rev() {
        match op {
            0 => {
                // J <- 1 + 1/J
                let nn = &jd + &jn;
                jd = std::mem::replace(&mut jn, nn);
            }
            _ => {
                // J <- 1/J
                std::mem::swap(&mut jn, &mut jd);
            }
        }
    }
    Ok(ExtendedRational::new(jn, jd))
}

/// Extension to nonzero rationals by `J(-x) = -1/J(x)`.
///
/// The PSL equivariance system does not always hold for the extension: it
/// has no consistent value at 0 (the L-equation at `x = 1` forces
/// `f(0) = 1 - 1/f(1) = 0`, while the defining rule at `x = 0` forces
/// `f(0)^2 = -1`), so the equations fail on every orbit step through 0.
/// At points where both sides are defined they do hold.
pub fn jimm_ext(x: &ExtendedRational) -> Result<ExtendedRational> {
    if x.is_zero() {
        return Err(Error::domain("jimm_ext(0) is obstructed (f(0)^2 = -1)"));
    }
    if x.is_infinity() || x.is_positive() {
        return jimm(x);
    }
    let pos = ExtendedRational::new(-x.num().clone(), x.den().clone());
    let j = jimm(&pos)?;
    // -1/J
    Ok(ExtendedRational::new(-j.den().clone(), j.num().clone()))
}

/// A golden-branch value: always finite (an integer Mobius map cannot send
/// the irrational `phi^2` to infinity).
pub fn jimm_sharp(x: &ExtendedRational) -> GoldenSurd {
    golden_branch(x, &phi_squared())
}

pub fn jimm_flat(x: &ExtendedRational) -> GoldenSurd {
    golden_branch(x, &phi_squared().galois_conj())
}

pub fn phi_squared() -> GoldenSurd {
    let phi = GoldenSurd::phi();
    phi.mul(&phi)
}

/// The word `g` with `g(1) = x` used by the golden branches and the
/// plus/minus quantization anchors.
pub fn anchor_word_at_one(x: &ExtendedRational) -> GroupWord {
    let mut w = cf_word(x);
    w.push(Gen::S, 1);
    w.push(Gen::T, -1);
    w
}

fn golden_branch(x: &ExtendedRational, base: &GoldenSurd) -> GoldenSurd {
    let g = anchor_word_at_one(x);
    let m = FieldMat::<GoldenSurd>::from_word(&dyer_alpha(&g));
    let (num, den) = m.apply(base, &Field::one());
    num.div(&den)
        .expect("integer Mobius maps keep phi^2 finite")
}

/// Report of the consistency checks around the golden branches.
#[derive(Clone, Debug)]
pub struct JimmConsistency {
    /// `phi^2` and `phibar^2` are exactly the fixed points of the integer
    /// matrix of `alpha((TSTST^-1)^2)`.
    pub alpha_fixed_points: bool,
    /// `Jsharp(1) = phi^2` and `Jflat(1) = phibar^2`.
    pub base_values: bool,
    /// `Jsharp(-1/x) = -Jsharp(x)` over the sweep.
    pub s_equivariance: bool,
    /// `Jsharp(1 - 1/x) = 1 - 1/Jsharp(x)` over the sweep.
    pub l_equivariance: bool,
    /// `galois_conj(Jsharp(x)) = Jflat(x)` over the sweep.
    pub galois_pairing: bool,
    pub sweep_size: usize,
}

impl JimmConsistency {
    pub fn all_pass(&self) -> bool {
        self.alpha_fixed_points
            && self.base_values
            && self.s_equivariance
            && self.l_equivariance
            && self.galois_pairing
    }
}

/// Fixed points of an integer matrix inside `Q(sqrt 5)`: solves
/// `c x^2 + (d - a) x - b = 0` exactly.
fn golden_fixed_points(m: &FieldMat<GoldenSurd>) -> Option<(GoldenSurd, GoldenSurd)> {
    let c = &m.c;
    let d_minus_a = m.d.sub(&m.a);
    if c.is_zero() {
        return None;
    }
    // x = [(a-d) +- sqrt((d-a)^2 + 4 b c)] / (2c)
    let four = GoldenSurd::from_i64(4);
    let disc = d_minus_a.mul(&d_minus_a).add(&four.mul(&m.b).mul(c));
    let root = golden_sqrt(&disc)?;
    let two_c = c.add(c);
    let x1 = d_minus_a.neg().add(&root).div(&two_c)?;
    let x2 = d_minus_a.neg().sub(&root).div(&two_c)?;
    Some((x1, x2))
}

/// Exact square root in `Q(sqrt 5)` of a rational (the only case needed:
/// discriminants of integer matrices are rational).
fn golden_sqrt(x: &GoldenSurd) -> Option<GoldenSurd> {
    if !x.is_rational() || x.p.is_negative() {
        return None;
    }
    // sqrt(p) in Q(sqrt5): either rational or t*sqrt5 with 5 t^2 = p
    let sq = |r: &BigRational| -> Option<BigRational> {
        use crate::ring::Coeff;
        let n = r.numer().sqrt_exact()?;
        let d = r.denom().sqrt_exact()?;
        Some(BigRational::new(n, d))
    };
    if let Some(r) = sq(&x.p) {
        return Some(GoldenSurd::from_rational(r));
    }
    let five = BigRational::from_integer(BigInt::from(5));
    if let Some(t) = sq(&(&x.p / &five)) {
        return Some(GoldenSurd::new(Zero::zero(), t));
    }
    None
}

/// Order statistics of `J` on consecutive Farey fractions: how often the
/// involution reverses the order of neighbours. Evidence-gathering for the
/// anti-monotonicity of the induced tree automorphism; exceptions are
/// returned, not asserted.
pub struct AntiMonotonicityProbe {
    pub pairs: usize,
    pub reversed: usize,
    pub exceptions: Vec<(ExtendedRational, ExtendedRational)>,
}

/// Probe order reversal of `J` on consecutive fractions of the Farey set
/// with denominators up to `den_bound`, restricted to the open interval
/// `(1, 2)`.
pub fn anti_monotonicity_probe(den_bound: u32) -> AntiMonotonicityProbe {
    use num_rational::BigRational as Q;
    let one = Q::from_integer(1.into());
    let two = Q::from_integer(2.into());
    let xs: Vec<ExtendedRational> = crate::special::farey_interval(den_bound, &one, &two)
        .into_iter()
        .filter(|x| {
            let v = Q::new(x.num().clone(), x.den().clone());
            v > one && v < two
        })
        .collect();
    let mut reversed = 0;
    let mut exceptions = Vec::new();
    let mut pairs = 0;
    for win in xs.windows(2) {
        let (a, b) = (&win[0], &win[1]);
        let ja = jimm(a).expect("positive");
        let jb = jimm(b).expect("positive");
        pairs += 1;
        // neighbours ascend, so reversal means J(a) > J(b)
        if ja.cmp_value(&jb) == std::cmp::Ordering::Greater {
            reversed += 1;
        } else {
            exceptions.push((a.clone(), b.clone()));
        }
    }
    AntiMonotonicityProbe { pairs, reversed, exceptions }
}

/// Verify the fixed-point characterization and the functional equations of
/// the golden branches over a sweep of rationals.
pub fn jimm_consistency_check(sweep: &[ExtendedRational]) -> JimmConsistency {
    let phi2 = phi_squared();
    let phib2 = phi2.galois_conj();

    // alpha(A^2) where A = T S T S T^-1
    let a_word: GroupWord = "T S T S T^-1".parse().expect("fixed word");
    let a2 = a_word.concat(&a_word);
    let alpha_a2 = FieldMat::<GoldenSurd>::from_word(&dyer_alpha(&a2));
    let alpha_fixed_points = match golden_fixed_points(&alpha_a2) {
        Some((x1, x2)) => {
            (x1 == phi2 && x2 == phib2) || (x1 == phib2 && x2 == phi2)
        }
        None => false,
    };

    let one = ExtendedRational::from_int(1);
    let base_values = jimm_sharp(&one) == phi2 && jimm_flat(&one) == phib2;

    let mut s_equivariance = true;
    let mut l_equivariance = true;
    let mut galois_pairing = true;
    let one_g: GoldenSurd = Field::one();
    for x in sweep {
        let js = jimm_sharp(x);
        // S: Jsharp(-1/x) = -Jsharp(x)
        let sx = crate::qrat::generator_action(Gen::S, x);
        if jimm_sharp(&sx) != js.neg() {
            s_equivariance = false;
        }
        // L: Jsharp(1 - 1/x) = 1 - 1/Jsharp(x)
        let lx = crate::qrat::generator_action(Gen::L, x);
        let expected = match js.inv() {
            Some(inv) => one_g.sub(&inv),
            None => continue,
        };
        if jimm_sharp(&lx) != expected {
            l_equivariance = false;
        }
        if js.galois_conj() != jimm_flat(x) {
            galois_pairing = false;
        }
    }

    JimmConsistency {
        alpha_fixed_points,
        base_values,
        s_equivariance,
        l_equivariance,
        galois_pairing,
        sweep_size: sweep.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xr(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(n, d)
    }

    #[test]
    fn jimm_examples() {
        assert_eq!(jimm(&xr(1, 1)).unwrap(), xr(1, 1));
        assert_eq!(jimm(&xr(5, 2)).unwrap(), xr(4, 3));
        assert_eq!(jimm(&xr(4, 3)).unwrap(), xr(5, 2));
        assert_eq!(jimm(&xr(3, 1)).unwrap(), xr(3, 2));
        assert_eq!(jimm(&ExtendedRational::infinity()).unwrap(), ExtendedRational::infinity());
        assert!(jimm(&xr(-2, 1)).is_err());
        assert!(jimm(&xr(0, 1)).is_err());
    }

    #[test]
    fn jimm_ext_examples() {
        assert_eq!(jimm_ext(&xr(-1, 1)).unwrap(), xr(-1, 1));
        assert_eq!(jimm_ext(&xr(-2, 1)).unwrap(), xr(-1, 2));
        assert!(jimm_ext(&xr(0, 1)).is_err());
    }

    #[test]
    fn extension_equivariance_fails_through_zero() {
        // the L-equation f(1 - 1/x) = 1 - 1/f(x) at x = 1 would need
        // f(0) = 0, but the extension rule f(-x) = -1/f(x) at x = 0 forces
        // f(0)^2 = -1: the system has no value at 0 and jimm_ext rejects it
        let x = xr(1, 1);
        let lx = crate::qrat::generator_action(Gen::L, &x);
        assert!(lx.is_zero());
        assert!(jimm_ext(&lx).is_err());
        let rhs_exists = jimm_ext(&x).unwrap() == xr(1, 1); // 1 - 1/1 = 0 is defined
        assert!(rhs_exists);
        // away from the zero orbit both equations do hold
        for n in 1..=15i64 {
            for d in 1..=15i64 {
                let x = xr(n, d);
                let sx = crate::qrat::generator_action(Gen::S, &x);
                let j = jimm_ext(&x).unwrap();
                let lhs = jimm_ext(&sx).unwrap();
                let rhs = ExtendedRational::new(-j.num().clone(), j.den().clone());
                assert_eq!(lhs, rhs, "S-equation at {x}");
            }
        }
    }

    #[test]
    fn sharp_values() {
        let phi2 = phi_squared();
        assert_eq!(jimm_sharp(&xr(1, 1)), phi2);
        // Jsharp(2) = 1 + 1/Jsharp(1) = (5 - sqrt5)/2
        let expected = GoldenSurd::new(
            GoldenSurd::rational(5, 2),
            GoldenSurd::rational(-1, 2),
        );
        assert_eq!(jimm_sharp(&xr(2, 1)), expected);
        // jump at 1: Jsharp(1) - Jflat(1) = sqrt5
        let jump = jimm_sharp(&xr(1, 1)).sub(&jimm_flat(&xr(1, 1)));
        assert_eq!(jump, GoldenSurd::new(GoldenSurd::rational(0, 1), GoldenSurd::rational(1, 1)));
    }

    #[test]
    fn anti_monotonicity_statistics() {
        // evidence gathering only: the ordering claim concerns the tree
        // automorphism, so exceptions on the linear order are logged, not
        // asserted
        let probe = anti_monotonicity_probe(50);
        assert!(probe.pairs > 100);
        assert_eq!(probe.reversed + probe.exceptions.len(), probe.pairs);
        assert!(probe.reversed > 0);
        println!(
            "anti-monotonicity probe: {}/{} neighbour pairs reversed, {} exceptions",
            probe.reversed,
            probe.pairs,
            probe.exceptions.len()
        );
    }

    #[test]
    fn consistency_small_sweep() {
        let sweep: Vec<_> = (1..=15)
            .flat_map(|d| (-15..=15).map(move |n| (n, d)))
            .filter(|&(n, d)| num_integer::gcd(n, d) == 1)
            .map(|(n, d)| xr(n, d))
            .chain([ExtendedRational::infinity()])
            .collect();
        let report = jimm_consistency_check(&sweep);
        assert!(report.alpha_fixed_points, "fixed points of alpha(A^2)");
        assert!(report.base_values);
        assert!(report.s_equivariance);
        assert!(report.l_equivariance);
        assert!(report.galois_pairing);
    }

    proptest! {
        #[test]
        fn prop_involution_and_functional_equations(n in 1i64..=200, d in 1i64..=200) {
            let x = xr(n, d);
            let j = jimm(&x).unwrap();
            // involution
            prop_assert_eq!(jimm(&j).unwrap(), x.clone());
            // J(1 + x) = 1 + 1/J(x)
            let xp1 = xr(n + d, d);
            let expect = ExtendedRational::new(j.num() + j.den(), j.num().clone());
            prop_assert_eq!(jimm(&xp1).unwrap(), expect);
            // J(1/x) = 1/J(x)
            let inv = xr(d, n);
            let expect = ExtendedRational::new(j.den().clone(), j.num().clone());
            prop_assert_eq!(jimm(&inv).unwrap(), expect);
        }
    }
}
