//! Collapse-locus analysis: the exact polynomial condition for a word to
//! specialize to the projective identity, cyclotomic trial division, and
//! root classification of the residual factor.

use super::aberth;
use crate::error::{Error, Result};
use crate::reps::RepId;
use crate::ring::poly::{cyclotomic, poly_gcd};
use crate::ring::{Coeff, Poly};
use crate::special::format_sig;
use crate::words::GroupWord;
use num_bigint::BigInt;
use num_complex::Complex64;
use std::fmt;

/// Exact collapse condition of a word under a representation.
#[derive(Clone, Debug)]
pub struct CollapseCondition<R: Coeff> {
    /// Primitive `gcd(b, c, a - d)`: the full projective-identity condition.
    pub condition: Poly<R>,
    /// Primitive `gcd(b, c)`: the raw off-diagonal condition, the
    /// classical collapse polynomial of a word.
    pub off_diagonal: Poly<R>,
    /// The word is already the identity symbolically (condition holds for
    /// every specialization).
    pub always: bool,
}

fn condition_of<R: Coeff>(m: &[Poly<R>; 4]) -> Result<CollapseCondition<R>> {
    let [a, b, c, d] = m;
    let a_minus_d = a.sub(d);
    if b.is_zero() && c.is_zero() && a_minus_d.is_zero() {
        return Ok(CollapseCondition {
            condition: Poly::zero(),
            off_diagonal: Poly::zero(),
            always: true,
        });
    }
    let pair = if b.is_zero() && c.is_zero() {
        // non-identity diagonal matrix: off-diagonals vanish identically
        Poly::zero()
    } else {
        poly_gcd(b, c)?
    };
    let triple = if pair.is_zero() {
        a_minus_d.primitive_part()
    } else if a_minus_d.is_zero() {
        pair.clone()
    } else {
        poly_gcd(&pair, &a_minus_d)?
    };
    Ok(CollapseCondition { condition: triple, off_diagonal: pair, always: false })
}

/// Collapse condition `gcd(b, c, a-d)` (and raw off-diagonal gcd) of the
/// word evaluated as the raw product of generator images. The raw
/// representative is the one whose entry gcds carry the `q^k` factors the
/// collapse examples quote; canonical reduction would divide them out.
pub fn collapse_condition(w: &GroupWord, rep: RepId) -> Result<CollapseConditionAny> {
    if w.is_empty() {
        return Err(Error::domain("collapse condition of the empty word"));
    }
    Ok(match rep {
        RepId::Mgo => CollapseConditionAny::Int(condition_of(&crate::reps::mgo_eval_raw(w))?),
        rep => CollapseConditionAny::Eis(condition_of(&crate::reps::pm_eval_raw(rep, w))?),
    })
}

/// The collapse condition over whichever coefficient ring the
/// representation lives in.
#[derive(Clone, Debug)]
pub enum CollapseConditionAny {
    Int(CollapseCondition<BigInt>),
    Eis(CollapseCondition<crate::ring::EisensteinInt>),
}

impl CollapseConditionAny {
    pub fn always(&self) -> bool {
        match self {
            CollapseConditionAny::Int(c) => c.always,
            CollapseConditionAny::Eis(c) => c.always,
        }
    }

    pub fn condition_string(&self) -> String {
        match self {
            CollapseConditionAny::Int(c) => c.condition.to_string(),
            CollapseConditionAny::Eis(c) => c.condition.to_string(),
        }
    }

    pub fn off_diagonal_string(&self) -> String {
        match self {
            CollapseConditionAny::Int(c) => c.off_diagonal.to_string(),
            CollapseConditionAny::Eis(c) => c.off_diagonal.to_string(),
        }
    }

    /// The integer condition, when the representation was MGO.
    pub fn as_int(&self) -> Option<&CollapseCondition<BigInt>> {
        match self {
            CollapseConditionAny::Int(c) => Some(c),
            _ => None,
        }
    }

    /// The off-diagonal gcd as an integer polynomial, available whenever
    /// its coefficients carry no `w` part (empirically always, matching
    /// the conjectured isomorphism of the specialized groups).
    pub fn off_diagonal_int(&self) -> Option<Poly<BigInt>> {
        match self {
            CollapseConditionAny::Int(c) => Some(c.off_diagonal.clone()),
            CollapseConditionAny::Eis(c) => eis_poly_to_int(&c.off_diagonal),
        }
    }
}

fn eis_poly_to_int(p: &Poly<crate::ring::EisensteinInt>) -> Option<Poly<BigInt>> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        if !c.is_real() {
            return None;
        }
        out.push(c.a.clone());
    }
    Some(Poly::from_coeffs(out))
}

/// One classified root of the residual factor.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInfo {
    pub value: Complex64,
    /// `|p(root)| / ||p||_1`
    pub residual: f64,
    pub on_unit_circle: bool,
    pub is_real: bool,
    /// Index of the partner root with `|r * r' - 1| <= 1e-9`, if any.
    pub reciprocal_partner: Option<usize>,
}

/// Factor structure and classified roots of a collapse polynomial.
#[derive(Clone, Debug)]
pub struct CollapseReport {
    pub input: Poly<BigInt>,
    pub q_power: usize,
    /// `(n, multiplicity)` for each cyclotomic factor divided out.
    pub cyclotomic_factors: Vec<(usize, usize)>,
    pub residual: Poly<BigInt>,
    pub residual_palindromic: Option<bool>,
    pub roots: Vec<RootInfo>,
}

pub const UNIT_CIRCLE_TOL: f64 = 1e-9;
pub const RECIPROCAL_TOL: f64 = 1e-9;
pub const REAL_TOL: f64 = 1e-12;
/// Trial-division bound for cyclotomic factors.
pub const CYCLOTOMIC_BOUND: usize = 120;

/// Strip powers of `q`, divide out cyclotomic factors by trial division for
/// `n <= 120`, refine the residual's roots and classify them.
pub fn collapse_roots(p: &Poly<BigInt>) -> Result<CollapseReport> {
    if p.is_zero() {
        return Err(Error::domain("collapse_roots of the zero polynomial"));
    }
    let q_power = p.q_valuation();
    let mut residual = p.shift_down(q_power).primitive_part();
    let mut cyclo = Vec::new();
    for n in 1..=CYCLOTOMIC_BOUND {
        if residual.is_constant() {
            break;
        }
        let phi = cyclotomic(n)?;
        if phi.degree() > residual.degree() {
            continue;
        }
        let mut mult = 0;
        while let Some(q) = residual.exact_div(&phi) {
            residual = q;
            mult += 1;
        }
        if mult > 0 {
            cyclo.push((n, mult));
        }
    }
    let residual_palindromic = residual.is_palindromic().ok();
    let roots = if residual.is_constant() {
        Vec::new()
    } else {
        let coeffs = residual.complex_coeffs();
        let raw = aberth::find_roots(&coeffs, aberth::DEFAULT_TOL, aberth::DEFAULT_MAX_ITER)?;
        classify_roots(&residual, &raw)
    };
    Ok(CollapseReport {
        input: p.clone(),
        q_power,
        cyclotomic_factors: cyclo,
        residual,
        residual_palindromic,
        roots,
    })
}

fn classify_roots(p: &Poly<BigInt>, roots: &[Complex64]) -> Vec<RootInfo> {
    let norm1: f64 = p.complex_coeffs().iter().map(|c| c.norm()).sum();
    let mut infos: Vec<RootInfo> = roots
        .iter()
        .map(|&z| RootInfo {
            value: z,
            residual: p.eval_complex(z).norm() / norm1,
            on_unit_circle: (z.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL,
            is_real: z.im.abs() <= REAL_TOL,
            reciprocal_partner: None,
        })
        .collect();
    for i in 0..infos.len() {
        if infos[i].reciprocal_partner.is_some() {
            continue;
        }
        for j in 0..infos.len() {
            if i == j {
                continue;
            }
            let prod = infos[i].value * infos[j].value;
            if (prod - Complex64::new(1.0, 0.0)).norm() <= RECIPROCAL_TOL {
                infos[i].reciprocal_partner = Some(j);
                break;
            }
        }
    }
    infos
}

impl fmt::Display for CollapseReport {
    /// Structured text record: condition polynomial, factor list, root
    /// table with 10-significant-digit floats.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "condition: {}", self.input)?;
        writeln!(f, "q_power: {}", self.q_power)?;
        for (n, m) in &self.cyclotomic_factors {
            writeln!(f, "cyclotomic: ({n}, {m})")?;
        }
        writeln!(f, "residual: {}", self.residual)?;
        if let Some(p) = self.residual_palindromic {
            writeln!(f, "palindromic: {p}")?;
        }
        for r in &self.roots {
            let mut flags = Vec::new();
            if r.on_unit_circle {
                flags.push("unit_circle".to_string());
            }
            if r.is_real {
                flags.push("real".to_string());
            }
            if let Some(j) = r.reciprocal_partner {
                flags.push(format!("reciprocal_of_{j}"));
            }
            writeln!(
                f,
                "root: re={} im={} residual={:.3e} flags={}",
                format_sig(r.value.re),
                format_sig(r.value.im),
                r.residual,
                if flags.is_empty() { "-".to_string() } else { flags.join(",") }
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::q_integer;
    use crate::words::parse_word;

    #[test]
    fn t_cubed_condition() {
        let cond = collapse_condition(&parse_word("T^3").unwrap(), RepId::Mgo).unwrap();
        let c = cond.as_int().unwrap();
        assert_eq!(c.condition, q_integer(3));
        assert_eq!(c.off_diagonal, q_integer(3));
        assert!(!c.always);
    }

    #[test]
    fn cyclotomic_collapse_proposition() {
        // condition(T^m) = [m]_q for 2 <= m <= 12
        for m in 2..=12 {
            let w = parse_word(&format!("T^{m}")).unwrap();
            let cond = collapse_condition(&w, RepId::Mgo).unwrap();
            assert_eq!(cond.as_int().unwrap().condition, q_integer(m), "m = {m}");
        }
    }

    #[test]
    fn identity_word_always_collapses() {
        let cond = collapse_condition(&parse_word("S^2").unwrap(), RepId::Mgo);
        // S^2 normalizes to the empty word, which is a domain error
        assert!(cond.is_err());
        // (TS)^3 is a nonempty word that evaluates to the identity
        let cond = collapse_condition(&parse_word("(T S)^3").unwrap(), RepId::Mgo).unwrap();
        assert!(cond.always());
    }

    #[test]
    fn t3s_power_report() {
        let cond = collapse_condition(&parse_word("(T^3 S)^4").unwrap(), RepId::Mgo).unwrap();
        let c = cond.as_int().unwrap();
        let report = collapse_roots(&c.off_diagonal).unwrap();
        assert_eq!(report.cyclotomic_factors, vec![(3, 1)]);
        assert_eq!(report.residual, Poly::from_i64s(&[1, 2, 1, 2, 1]));
        let roots = &report.roots;
        assert_eq!(roots.len(), 4);
        // reference roots to ten digits
        assert!((roots[0].value.re - -1.883203506).abs() < 1e-8 && roots[0].is_real);
        assert!((roots[1].value.re - -0.5310100565).abs() < 1e-8 && roots[1].is_real);
        assert!((roots[2].value.re - 0.2071067812).abs() < 1e-8);
        assert!((roots[2].value.im - -0.9783183435).abs() < 1e-8);
        assert!(roots[2].on_unit_circle && roots[3].on_unit_circle);
        // the two real roots form a reciprocal pair (indices after sorting)
        assert_eq!(roots[0].reciprocal_partner, Some(1));
        assert_eq!(roots[1].reciprocal_partner, Some(0));
    }

    #[test]
    fn report_display_is_deterministic() {
        let p = Poly::from_i64s(&[1, 2, 1, 2, 1]).mul(&q_integer(3)).shift_up(2);
        let a = collapse_roots(&p).unwrap().to_string();
        let b = collapse_roots(&p).unwrap().to_string();
        assert_eq!(a, b);
        assert!(a.contains("q_power: 2"));
        assert!(a.contains("cyclotomic: (3, 1)"));
    }

    #[test]
    fn plus_rep_condition_matches_mgo_for_t_powers() {
        // evidence for the conjectured isomorphism: identical conditions
        let w = parse_word("T^4").unwrap();
        let mgo = collapse_condition(&w, RepId::Mgo).unwrap();
        let plus = collapse_condition(&w, RepId::Plus).unwrap();
        assert_eq!(mgo.condition_string(), plus.condition_string());
    }
}
