//! Projective 2x2 matrices and points over the fraction field of `R[q]`,
//! kept in canonical polynomial form: entries share no common divisor and
//! the first nonzero entry in reading order carries the canonical leading
//! unit. Equality of canonical forms is projective equality.

use crate::error::{Error, Result};
use crate::ring::poly::{parse_poly_at, poly_gcd_full, ParseCoeff, Tokens};
use crate::ring::{Coeff, Poly};
use num_bigint::BigInt;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct ProjMatrix<R: Coeff> {
    a: Poly<R>,
    b: Poly<R>,
    c: Poly<R>,
    d: Poly<R>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint<R: Coeff> {
    x: Poly<R>,
    y: Poly<R>,
}

impl<R: Coeff> ProjMatrix<R> {
    /// Canonicalizes on construction. Panics on a singular matrix in debug
    /// builds; use [`ProjMatrix::try_new`] for fallible construction.
    pub fn new(a: Poly<R>, b: Poly<R>, c: Poly<R>, d: Poly<R>) -> Self {
        Self::try_new(a, b, c, d).expect("singular projective matrix")
    }

    pub fn try_new(a: Poly<R>, b: Poly<R>, c: Poly<R>, d: Poly<R>) -> Result<Self> {
        let det = a.mul(&d).sub(&b.mul(&c));
        if det.is_zero() {
            return Err(Error::domain("projective matrix must have nonzero determinant"));
        }
        let mut m = ProjMatrix { a, b, c, d };
        m.normalize();
        Ok(m)
    }

    pub fn identity() -> Self {
        ProjMatrix::new(Poly::one(), Poly::zero(), Poly::zero(), Poly::one())
    }

    pub fn entries(&self) -> [&Poly<R>; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn a(&self) -> &Poly<R> {
        &self.a
    }
    pub fn b(&self) -> &Poly<R> {
        &self.b
    }
    pub fn c(&self) -> &Poly<R> {
        &self.c
    }
    pub fn d(&self) -> &Poly<R> {
        &self.d
    }

    fn normalize(&mut self) {
        // divide out the full gcd (content and polynomial part) of all four
        // entries, then rotate by the unit canonicalizing the first nonzero
        // entry's leading coefficient
        let mut g = Poly::zero();
        for e in self.entries() {
            if g.is_one() {
                break;
            }
            g = poly_gcd_full(&g, e);
        }
        if !g.is_one() && !g.is_zero() {
            self.a = self.a.exact_div(&g).expect("gcd divides");
            self.b = self.b.exact_div(&g).expect("gcd divides");
            self.c = self.c.exact_div(&g).expect("gcd divides");
            self.d = self.d.exact_div(&g).expect("gcd divides");
        }
        let lead = self
            .entries()
            .iter()
            .find_map(|e| e.leading_coeff().cloned())
            .expect("nonsingular matrix has a nonzero entry");
        let u = lead.canon_unit();
        if !u.is_one() {
            self.a = self.a.scale(&u);
            self.b = self.b.scale(&u);
            self.c = self.c.scale(&u);
            self.d = self.d.scale(&u);
        }
    }

    /// Canonical form of the matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        ProjMatrix::new(
            self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        )
    }

    /// Adjugate in canonical form; `m.compose(&m.inverse()) == identity`.
    pub fn inverse(&self) -> Self {
        ProjMatrix::new(self.d.clone(), self.b.neg(), self.c.neg(), self.a.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = ProjMatrix::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// `[x : y] -> [a x + b y : c x + d y]` in canonical form.
    pub fn apply(&self, p: &ProjPoint<R>) -> ProjPoint<R> {
        ProjPoint::new(
            self.a.mul(&p.x).add(&self.b.mul(&p.y)),
            self.c.mul(&p.x).add(&self.d.mul(&p.y)),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Trace zero on the canonical representative characterizes the
    /// involutions.
    pub fn is_trace_zero(&self) -> bool {
        self.a.add(&self.d).is_zero()
    }

    pub fn det(&self) -> Poly<R> {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    /// Projective determinant: the determinant of the canonical
    /// representative reduced by `q^2k` and unit squares (over `Z[w]` the
    /// unit squares are `1`, `w^2` and `-w`).
    pub fn pdet(&self) -> Poly<R> {
        reduce_pdet(&self.det())
    }

    /// Solve `c x^2 + (d - a) x - b = 0` over the fraction field. Returns
    /// the fixed points when the discriminant is a square, otherwise the
    /// quadratic itself as a symbolic certificate.
    pub fn fixed_points(&self) -> Result<FixedPoints<R>> {
        if self.is_identity() {
            return Err(Error::domain("every point is fixed by the identity"));
        }
        if self.c.is_zero() {
            let infinity = ProjPoint::new(Poly::one(), Poly::zero());
            let diff = self.d.sub(&self.a);
            if diff.is_zero() {
                // parabolic: infinity is a double fixed point
                return Ok(FixedPoints::Pair(infinity.clone(), infinity));
            }
            let finite = ProjPoint::new(self.b.clone(), diff);
            return Ok(FixedPoints::pair_sorted(infinity, finite));
        }
        let d_minus_a = self.d.sub(&self.a);
        let disc = d_minus_a.mul(&d_minus_a).add(
            &Poly::constant(R::from_i64(4)).mul(&self.b).mul(&self.c),
        );
        match disc.sqrt_exact() {
            Some(s) => {
                let a_minus_d = d_minus_a.neg();
                let two_c = self.c.scale(&R::from_i64(2));
                let p1 = ProjPoint::new(a_minus_d.add(&s), two_c.clone());
                let p2 = ProjPoint::new(a_minus_d.sub(&s), two_c);
                Ok(FixedPoints::pair_sorted(p1, p2))
            }
            None => Ok(FixedPoints::Certificate {
                quadratic: [self.c.clone(), d_minus_a, self.b.neg()],
                discriminant: reduce_discriminant(&disc),
            }),
        }
    }
}

/// Result of a fixed-point computation: either the (unordered, but
/// deterministically sorted) pair of fixed points, or the quadratic
/// `c x^2 + (d-a) x - b` with its reduced discriminant when the roots do
/// not lie in the fraction field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FixedPoints<R: Coeff> {
    Pair(ProjPoint<R>, ProjPoint<R>),
    Certificate {
        /// `[x^2 coefficient, x coefficient, constant]`
        quadratic: [Poly<R>; 3],
        discriminant: Poly<R>,
    },
}

impl<R: Coeff> FixedPoints<R> {
    fn pair_sorted(p1: ProjPoint<R>, p2: ProjPoint<R>) -> Self {
        let k1 = format!("{p1}");
        let k2 = format!("{p2}");
        if k1 <= k2 {
            FixedPoints::Pair(p1, p2)
        } else {
            FixedPoints::Pair(p2, p1)
        }
    }

    pub fn contains(&self, p: &ProjPoint<R>) -> bool {
        match self {
            FixedPoints::Pair(a, b) => a == p || b == p,
            FixedPoints::Certificate { .. } => false,
        }
    }
}

/// Strip `q^{2k}` and normalize the leading unit within its square class.
pub fn reduce_pdet<R: Coeff>(det: &Poly<R>) -> Poly<R> {
    if det.is_zero() {
        return Poly::zero();
    }
    let v = det.q_valuation();
    let p = det.shift_down(v - (v % 2));
    let u = p.leading_coeff().unwrap().canon_unit_square();
    p.scale(&u)
}

/// Discriminant normal form: `q^{2k}`, integer square content, unit squares.
pub fn reduce_discriminant<R: Coeff>(disc: &Poly<R>) -> Poly<R> {
    if disc.is_zero() {
        return Poly::zero();
    }
    let v = disc.q_valuation();
    let mut p = disc.shift_down(v - (v % 2));
    // pull the largest integer square out of the content
    let content = p.content();
    let sq = content_square_part(&content);
    if !sq.is_one() {
        p = p
            .exact_div(&Poly::constant(sq.mul(&sq)))
            .expect("square part divides the content");
    }
    let u = p.leading_coeff().unwrap().canon_unit_square();
    p.scale(&u)
}

fn content_square_part<R: Coeff>(content: &R) -> R {
    // detect an integer square divisor through the ring's own arithmetic:
    // try small squares via exact division of repeated integer factors
    let mut result = R::one();
    let mut rem = content.clone();
    let mut p = 2i64;
    while p <= 1000 {
        let p2 = R::from_i64(p * p);
        while let Some(q) = rem.exact_div(&p2) {
            rem = q;
            result = result.mul(&R::from_i64(p));
        }
        p += 1;
    }
    result
}

impl<R: Coeff> ProjPoint<R> {
    pub fn new(x: Poly<R>, y: Poly<R>) -> Self {
        assert!(
            !(x.is_zero() && y.is_zero()),
            "projective point must be nonzero"
        );
        let mut p = ProjPoint { x, y };
        p.normalize();
        p
    }

    pub fn infinity() -> Self {
        ProjPoint::new(Poly::one(), Poly::zero())
    }

    pub fn x(&self) -> &Poly<R> {
        &self.x
    }
    pub fn y(&self) -> &Poly<R> {
        &self.y
    }

    fn normalize(&mut self) {
        let g = poly_gcd_full(&self.x, &self.y);
        if !g.is_one() {
            self.x = self.x.exact_div(&g).expect("gcd divides");
            self.y = self.y.exact_div(&g).expect("gcd divides");
        }
        let lead = self
            .x
            .leading_coeff()
            .or_else(|| self.y.leading_coeff())
            .cloned()
            .expect("nonzero point");
        let u = lead.canon_unit();
        if !u.is_one() {
            self.x = self.x.scale(&u);
            self.y = self.y.scale(&u);
        }
    }
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

impl<R: Coeff> fmt::Display for ProjMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl<R: Coeff> fmt::Debug for ProjMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Coeff> fmt::Display for ProjPoint<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.x, self.y)
    }
}

impl<R: Coeff> fmt::Debug for ProjPoint<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: ParseCoeff> std::str::FromStr for ProjMatrix<R> {
    type Err = Error;

    /// `[[p1, p2], [p3, p4]]` with the `ring` polynomial grammar inside.
    fn from_str(s: &str) -> Result<Self> {
        let mut t = Tokens::new(s);
        t.expect('[')?;
        t.expect('[')?;
        let a = parse_poly_at(&mut t)?;
        t.expect(',')?;
        let b = parse_poly_at(&mut t)?;
        t.expect(']')?;
        t.expect(',')?;
        t.expect('[')?;
        let c = parse_poly_at(&mut t)?;
        t.expect(',')?;
        let d = parse_poly_at(&mut t)?;
        t.expect(']')?;
        t.expect(']')?;
        if !t.at_end() {
            return Err(t.err("trailing input after matrix"));
        }
        ProjMatrix::try_new(a, b, c, d)
    }
}

impl<R: ParseCoeff> std::str::FromStr for ProjPoint<R> {
    type Err = Error;

    /// `[A : B]`
    fn from_str(s: &str) -> Result<Self> {
        let mut t = Tokens::new(s);
        t.expect('[')?;
        let x = parse_poly_at(&mut t)?;
        t.expect(':')?;
        let y = parse_poly_at(&mut t)?;
        t.expect(']')?;
        if !t.at_end() {
            return Err(t.err("trailing input after point"));
        }
        if x.is_zero() && y.is_zero() {
            return Err(t.err("projective point must be nonzero"));
        }
        Ok(ProjPoint::new(x, y))
    }
}

/// Convenience constructors for integer-coefficient objects.
pub type IntProjMatrix = ProjMatrix<BigInt>;
pub type IntProjPoint = ProjPoint<BigInt>;
