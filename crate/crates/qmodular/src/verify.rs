//! Named verification suites shared by the CLI and the acceptance tests.
//! Each suite returns one line per check; nothing here asserts, so the
//! caller decides between reporting and failing.

use crate::jimm::{jimm, jimm_consistency_check, jimm_flat, jimm_sharp};
use crate::projective::{reduce_pdet, ProjMatrix};
use crate::qrat::{equivariance_sweep, BaseChoice};
use crate::reps::{mgo_image, pm_image, q1_conjugation_check, rep_check_relations, RepId};
use crate::ring::{Coeff, EisensteinInt, Poly};
use crate::special::{farey_interval, golden_conjugacy_check, projective_sweep, GoldenCase};
use crate::words::{ExtendedRational, Gen};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub note: Option<String>,
}

impl Check {
    fn new(label: impl Into<String>, pass: bool) -> Self {
        Check { label: label.into(), pass, note: None }
    }

    fn with_note(label: impl Into<String>, pass: bool, note: impl Into<String>) -> Self {
        Check { label: label.into(), pass, note: Some(note.into()) }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("[{status}] {}", c.label));
            if let Some(n) = &c.note {
                out.push_str(&format!(" ({n})"));
            }
            out.push('\n');
        }
        let overall = if self.all_pass() { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "suite {}: {} ({} checks, {:.2?})\n",
            self.name,
            overall,
            self.checks.len(),
            self.elapsed
        ));
        out
    }
}

fn suite(name: &'static str, f: impl FnOnce(&mut Vec<Check>)) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    f(&mut checks);
    SuiteReport { name, checks, elapsed: start.elapsed() }
}

// ---------------------------------------------------------------------------
// relations
// ---------------------------------------------------------------------------

pub fn suite_relations() -> SuiteReport {
    suite("relations", |checks| {
        for rep in RepId::all() {
            for chk in rep_check_relations(rep) {
                checks.push(Check::new(format!("{rep}: {}", chk.relation), chk.pass));
            }
        }
    })
}

// ---------------------------------------------------------------------------
// table 1
// ---------------------------------------------------------------------------

fn zp(c: &[i64]) -> Poly<BigInt> {
    Poly::from_i64s(c)
}

fn ep(c: &[(i64, i64)]) -> Poly<EisensteinInt> {
    Poly::from_coeffs(c.iter().map(|&(a, b)| EisensteinInt::new(a, b)).collect())
}

/// Tabulated MGO generator images the table1 suite checks against.
fn mgo_table_matrix(g: Gen) -> ProjMatrix<BigInt> {
    let m = |a: &[i64], b: &[i64], c: &[i64], d: &[i64]| {
        ProjMatrix::new(zp(a), zp(b), zp(c), zp(d))
    };
    match g {
        Gen::T => m(&[0, 1], &[1], &[], &[1]),
        Gen::S => m(&[], &[-1], &[0, 1], &[]),
        Gen::L => m(&[1], &[-1], &[1], &[]),
        Gen::U => m(&[-1, 1], &[1], &[0, 1], &[1, -1]),
        Gen::V => m(&[0, 1], &[1, -1], &[0, 1, -1], &[0, -1]),
        Gen::K => m(&[1], &[0, -1], &[1, -1], &[-1]),
    }
}

/// Tabulated plus/minus generator images with denominators cleared. The
/// `U` entry is pinned by the product `U = S V`, which forces the
/// lower-left entry `q^2 w - q^2 + q`.
fn pm_table_matrix(rep: RepId, g: Gen) -> ProjMatrix<EisensteinInt> {
    let w = rep.omega();
    let wp = (w.a.clone(), w.b.clone());
    let wi = |k: i64| -> (i64, i64) {
        use num_traits::ToPrimitive;
        (
            (wp.0.to_i64().unwrap()) * k,
            (wp.1.to_i64().unwrap()) * k,
        )
    };
    let one = (1i64, 0i64);
    match g {
        Gen::T => ProjMatrix::new(ep(&[(0, 0), one]), ep(&[one]), Poly::zero(), ep(&[one])),
        // S: [[q, 1], [q(w - q), -q]]
        Gen::S => ProjMatrix::new(
            ep(&[(0, 0), one]),
            ep(&[one]),
            Poly::from_coeffs(vec![EisensteinInt::new(0, 0), w.clone(), EisensteinInt::from_i64(-1)]),
            ep(&[(0, 0), (-1, 0)]),
        ),
        // L: [[w, 0], [w - q, -1]]
        Gen::L => ProjMatrix::new(
            ep(&[wi(1)]),
            Poly::zero(),
            Poly::from_coeffs(vec![w.clone(), EisensteinInt::from_i64(-1)]),
            ep(&[(-1, 0)]),
        ),
        // U (corrected): [[q - w, w + 1], [q^2 w - q^2 + q, w - q]]
        Gen::U => ProjMatrix::new(
            Poly::from_coeffs(vec![w.neg(), EisensteinInt::one()]),
            Poly::constant(w.add(&EisensteinInt::one())),
            Poly::from_coeffs(vec![
                EisensteinInt::new(0, 0),
                EisensteinInt::one(),
                w.sub(&EisensteinInt::one()),
            ]),
            Poly::from_coeffs(vec![w.clone(), EisensteinInt::from_i64(-1)]),
        ),
        // V: [[q(q - w), q + 1], [q(1 - q)(q - w), -q(q - w)]]
        Gen::V => {
            let q = Poly::monomial(EisensteinInt::one(), 1);
            let q_minus_w = Poly::from_coeffs(vec![w.neg(), EisensteinInt::one()]);
            let a = q.mul(&q_minus_w);
            ProjMatrix::new(
                a.clone(),
                ep(&[one, one]),
                q.mul(&ep(&[one, (-1, 0)])).mul(&q_minus_w),
                a.neg(),
            )
        }
        // K cleared by (q - w): [[q - w, 1 + w], [(1 - q)(q - w), -(q - w)]]
        Gen::K => {
            let q_minus_w = Poly::from_coeffs(vec![w.neg(), EisensteinInt::one()]);
            ProjMatrix::new(
                q_minus_w.clone(),
                Poly::constant(EisensteinInt::one().add(&w)),
                ep(&[one, (-1, 0)]).mul(&q_minus_w),
                q_minus_w.neg(),
            )
        }
    }
}

/// Tabulated projective determinants.
fn mgo_table_pdet(g: Gen) -> Poly<BigInt> {
    match g {
        Gen::T | Gen::S => zp(&[0, 1]),
        Gen::L => zp(&[1]),
        _ => zp(&[-1, 1, -1]), // -q^2 + q - 1
    }
}

fn pm_table_pdet(g: Gen) -> Poly<EisensteinInt> {
    match g {
        Gen::T | Gen::S => ep(&[(0, 0), (1, 0)]),
        Gen::L => ep(&[(1, 0)]),
        _ => ep(&[(1, 0), (-1, 0), (1, 0)]), // q^2 - q + 1
    }
}

/// Compare a computed pdet against a table entry under the documented
/// allowances: `allow_q` admits one extra factor of `q` (the V column),
/// `allow_unit` admits a leftover unit (over `C(q)` every unit is a
/// square, while the unit squares of `Z[w]` form a proper subgroup, so an
/// odd power of `w` can survive the reduction).
fn pdet_cell<R: Coeff>(
    computed: &Poly<R>,
    table: &Poly<R>,
    allow_q: bool,
    allow_unit: bool,
) -> (bool, Option<String>) {
    let red = reduce_pdet(computed);
    let mut candidates = vec![(reduce_pdet(table), None::<String>)];
    if allow_q {
        candidates.push((
            reduce_pdet(&table.shift_up(1)),
            Some("single q factor (documented V-column discrepancy)".into()),
        ));
    }
    for (cand, note) in candidates {
        if red == cand {
            return (true, note);
        }
        if allow_unit && red.canon() == cand.canon() {
            let combined = match note {
                Some(n) => format!("{n}; up to a unit of Z[w]"),
                None => "up to a unit of Z[w] (over C(q) every unit is a square)".into(),
            };
            return (true, Some(combined));
        }
    }
    (false, Some(format!("computed {red}")))
}

pub fn suite_table1() -> SuiteReport {
    suite("table1", |checks| {
        let gens = [Gen::T, Gen::S, Gen::L, Gen::U, Gen::V, Gen::K];
        for g in gens {
            let got = mgo_image(g);
            checks.push(Check::new(
                format!("mgo matrix {:?}", g),
                got == mgo_table_matrix(g),
            ));
        }
        for g in gens {
            let (pass, note) = pdet_cell(
                &mgo_image(g).pdet(),
                &mgo_table_pdet(g),
                g == Gen::V,
                false,
            );
            checks.push(Check { label: format!("mgo pdet {:?}", g), pass, note });
        }
        for rep in [RepId::Plus, RepId::Minus] {
            for g in gens {
                let got = pm_image(rep, g);
                let label = match g {
                    Gen::U => format!("{rep} matrix {:?} (pinned by U = SV)", g),
                    _ => format!("{rep} matrix {:?}", g),
                };
                checks.push(Check::new(label, got == pm_table_matrix(rep, g)));
            }
            for g in gens {
                let (pass, note) = pdet_cell(
                    &pm_image(rep, g).pdet(),
                    &pm_table_pdet(g),
                    g == Gen::V,
                    matches!(g, Gen::U | Gen::V | Gen::K),
                );
                checks.push(Check { label: format!("{rep} pdet {:?}", g), pass, note });
            }
        }
    })
}

// ---------------------------------------------------------------------------
// equivariance
// ---------------------------------------------------------------------------

pub fn suite_equivariance(bound: u32) -> SuiteReport {
    suite("equivariance", |checks| {
        let xs = projective_sweep(bound);
        for base in BaseChoice::all() {
            let report = equivariance_sweep(base, &xs);
            let note = format!(
                "{} checks over |num|,|den| <= {bound}{}",
                report.checked,
                if report.failures.is_empty() {
                    String::new()
                } else {
                    format!("; first failure {:?}", report.failures[0])
                }
            );
            checks.push(Check::with_note(
                format!("psi(gx) = Psi(g) psi(x) for {base}"),
                report.all_pass(),
                note,
            ));
        }
    })
}

// ---------------------------------------------------------------------------
// golden conjugacy
// ---------------------------------------------------------------------------

pub fn suite_golden(bound: u32) -> SuiteReport {
    suite("golden", |checks| {
        let mut sweep = projective_sweep(bound);
        sweep.push(ExtendedRational::infinity());
        sweep.dedup();
        for rep in RepId::all() {
            for case in [GoldenCase::Sharp, GoldenCase::Flat] {
                match golden_conjugacy_check(rep, case, &sweep) {
                    Ok(r) => {
                        let target = match case {
                            GoldenCase::Sharp => "Jsharp",
                            GoldenCase::Flat => "Jflat",
                        };
                        checks.push(Check::with_note(
                            format!("{rep} {case:?}: M U_r M^-1 = U"),
                            r.u_conjugation,
                            "exact over the golden field",
                        ));
                        checks.push(Check::new(format!("{rep} {case:?}: M K_r M^-1 = K"), r.k_conjugation));
                        checks.push(Check::new(format!("{rep} {case:?}: M V_r M^-1 = UV"), r.v_conjugation));
                        checks.push(Check::with_note(
                            format!("{rep} {case:?}: M(psi_r(x)) = {target}(x)"),
                            r.sweep_ok,
                            format!("{} sweep points", r.sweep_size),
                        ));
                    }
                    Err(e) => checks.push(Check::new(format!("{rep} {case:?}: {e}"), false)),
                }
            }
        }
    })
}

// ---------------------------------------------------------------------------
// jimm
// ---------------------------------------------------------------------------

pub fn suite_jimm(bound: u32) -> SuiteReport {
    suite("jimm", |checks| {
        // positive sweep for the involution and functional equations
        let mut involution = true;
        let mut additive = true;
        let mut inversive = true;
        let mut count = 0usize;
        for d in 1..=bound as i64 {
            for n in 1..=bound as i64 {
                if num_integer::gcd(n, d) != 1 {
                    continue;
                }
                count += 1;
                let x = ExtendedRational::new(n, d);
                let j = jimm(&x).expect("positive");
                if jimm(&j).expect("positive") != x {
                    involution = false;
                }
                let xp1 = ExtendedRational::new(n + d, d);
                let expect = ExtendedRational::new(j.num() + j.den(), j.num().clone());
                if jimm(&xp1).expect("positive") != expect {
                    additive = false;
                }
                let inv = ExtendedRational::new(d, n);
                let expect = ExtendedRational::new(j.den().clone(), j.num().clone());
                if jimm(&inv).expect("positive") != expect {
                    inversive = false;
                }
            }
        }
        checks.push(Check::with_note(
            "J(J(x)) = x on Farey(bound)+",
            involution,
            format!("{count} points, bound {bound}"),
        ));
        checks.push(Check::new("J(1+x) = 1 + 1/J(x)", additive));
        checks.push(Check::new("J(1/x) = 1/J(x)", inversive));

        // golden branches over the full projective sweep
        let sweep = projective_sweep(bound.min(60));
        let report = jimm_consistency_check(&sweep);
        checks.push(Check::new(
            "phi^2, phibar^2 are the fixed points of alpha(A^2)",
            report.alpha_fixed_points,
        ));
        checks.push(Check::new("Jsharp(1) = phi^2, Jflat(1) = phibar^2", report.base_values));
        checks.push(Check::with_note(
            "Jsharp(-1/x) = -Jsharp(x)",
            report.s_equivariance,
            format!("{} sweep points", report.sweep_size),
        ));
        checks.push(Check::new("Jsharp(1 - 1/x) = 1 - 1/Jsharp(x)", report.l_equivariance));
        checks.push(Check::new("conj(Jsharp) = Jflat", report.galois_pairing));

        // the golden branches invert through J: J(Jsharp(x)) = x is outside
        // exact arithmetic (irrational input), but J applied to the
        // convergent of Jsharp's defining word recovers x; covered instead
        // by the involution plus equivariance above.
        use crate::ring::fields::Field;
        let jump = Field::sub(
            &jimm_sharp(&ExtendedRational::from_int(1)),
            &jimm_flat(&ExtendedRational::from_int(1)),
        );
        checks.push(Check::new(
            "jump at 1: Jsharp(1) - Jflat(1) = sqrt5",
            jump == crate::ring::GoldenSurd::new(BigRational::from_integer(0.into()), BigRational::from_integer(1.into())),
        ));
    })
}

// ---------------------------------------------------------------------------
// q = 1 conjugation
// ---------------------------------------------------------------------------

pub fn suite_q1conj() -> SuiteReport {
    suite("q1conj", |checks| {
        for rep in [RepId::Plus, RepId::Minus] {
            match q1_conjugation_check(rep) {
                Ok(list) => {
                    for c in list {
                        checks.push(Check::new(
                            format!("{rep}: H {:?}_1 H^-1 = {:?}", c.generator, c.generator),
                            c.pass,
                        ));
                    }
                }
                Err(e) => checks.push(Check::new(format!("{rep}: {e}"), false)),
            }
        }
    })
}

// ---------------------------------------------------------------------------
// monotonicity (exact rational comparisons)
// ---------------------------------------------------------------------------

pub fn monotonicity_check(r_values: &[(i64, i64)], den_bound: u32) -> SuiteReport {
    suite("monotonicity", |checks| {
        use crate::qrat::Branch;
        use crate::special::{psi_at_rational_fast, AffineValue, SpecValue};
        let base = BaseChoice::new(RepId::Mgo, Branch::Sharp).expect("valid");
        let lo = BigRational::from_integer(0.into());
        let hi = BigRational::from_integer(3.into());
        let xs = farey_interval(den_bound, &lo, &hi);
        for &(rn, rd) in r_values {
            let r = BigRational::new(BigInt::from(rn), BigInt::from(rd));
            let mut prev: Option<BigRational> = None;
            let mut strictly_increasing = true;
            let mut pole_free = true;
            for x in &xs {
                match psi_at_rational_fast(x, &r, base) {
                    Ok(AffineValue::Finite(SpecValue::Rational(v))) => {
                        if let Some(p) = &prev {
                            if &v <= p {
                                strictly_increasing = false;
                            }
                        }
                        prev = Some(v);
                    }
                    _ => pole_free = false,
                }
            }
            checks.push(Check::with_note(
                format!("psi_r strictly increasing on Farey({den_bound}) in [0,3], r = {rn}/{rd}"),
                strictly_increasing && pole_free,
                format!("{} points", xs.len()),
            ));
        }
    })
}

pub fn suite_by_name(name: &str) -> Option<SuiteReport> {
    Some(match name {
        "relations" => suite_relations(),
        "table1" => suite_table1(),
        "equivariance" => suite_equivariance(30),
        "golden" => suite_golden(40),
        "jimm" => suite_jimm(200),
        "q1conj" => suite_q1conj(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_suite_passes() {
        let r = suite_relations();
        assert!(r.all_pass(), "{}", r.render());
        assert_eq!(r.checks.len(), 24);
    }

    #[test]
    fn table1_suite_passes() {
        let r = suite_table1();
        assert!(r.all_pass(), "{}", r.render());
    }

    #[test]
    fn q1conj_suite_passes() {
        let r = suite_q1conj();
        assert!(r.all_pass(), "{}", r.render());
        assert_eq!(r.checks.len(), 12);
    }

    #[test]
    fn small_equivariance_suite() {
        let r = suite_equivariance(6);
        assert!(r.all_pass(), "{}", r.render());
    }

    #[test]
    fn small_golden_suite() {
        let r = suite_golden(5);
        assert!(r.all_pass(), "{}", r.render());
    }

    #[test]
    fn small_jimm_suite() {
        let r = suite_jimm(25);
        assert!(r.all_pass(), "{}", r.render());
    }

    #[test]
    fn small_monotonicity() {
        let r = monotonicity_check(&[(1, 2), (2, 1)], 12);
        assert!(r.all_pass(), "{}", r.render());
    }
}
