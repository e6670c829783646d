//! Dense univariate polynomials in `q` over a [`Coeff`] ring, with the
//! primitive pseudo-remainder gcd, cyclotomic polynomials, palindromicity,
//! and the bit-exact text format used by every serialization in the crate.

use super::{Coeff, Field, FromBigInt};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use std::fmt;

/// Coefficients ascending in powers of `q`, no trailing zeros.
/// The zero polynomial is the empty vector; its degree is `None`
/// (the "minus infinity" marker).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<R: Coeff> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Poly<R> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn q() -> Self {
        Poly::from_coeffs(vec![R::zero(), R::one()])
    }

    pub fn constant(c: R) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    /// `c * q^k`
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Poly { coeffs: v }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Largest `k` with `q^k | self`; 0 for the zero polynomial.
    pub fn q_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by `q^k` assuming exactness.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.q_valuation() >= k || self.is_zero());
        if self.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs[k..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::from_coeffs(v)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).sub(&rhs.coeff(i)));
        }
        Poly::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficient-wise complex conjugation (the ring automorphism that turns
    /// the plus representation into the minus one).
    pub fn conj(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    /// Content with the sign/unit convention: `self = content * primitive`
    /// where the primitive part carries the canonical leading unit.
    pub fn content(&self) -> R {
        if self.is_zero() {
            return R::zero();
        }
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        // orient so the primitive part's leading coefficient is canonical;
        // the gcd itself only fixes the content up to a unit
        let lead0 = self
            .leading_coeff()
            .unwrap()
            .exact_div(&g)
            .expect("gcd divides the leading coefficient");
        let u = lead0.canon_unit();
        g.exact_div(&u).expect("units divide everything")
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a.exact_div(&c).expect("content divides every coefficient"))
                .collect(),
        }
    }

    /// Multiply by the unit making the leading coefficient canonical.
    pub fn canon(&self) -> Self {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.canon_unit()),
        }
    }

    /// Exact division; `None` when `rhs` does not divide `self` in `R[q]`.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dr = rhs.degree().unwrap();
        let mut rem = self.clone();
        let mut q_coeffs = vec![R::zero(); self.coeffs.len().saturating_sub(dr)];
        let lead = rhs.leading_coeff().unwrap();
        while let Some(dn) = rem.degree() {
            if dn < dr {
                return None;
            }
            let c = rem.leading_coeff().unwrap().exact_div(lead)?;
            let k = dn - dr;
            q_coeffs[k] = c.clone();
            rem = rem.sub(&rhs.mul(&Poly::monomial(c, k)));
            if rem.is_zero() {
                return Some(Poly::from_coeffs(q_coeffs));
            }
        }
        None
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Pseudo-remainder: `lc(d)^(deg n - deg d + 1) * n = q*d + r`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lead = d.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        let mut dr = match r.degree() {
            Some(x) => x,
            None => return r,
        };
        if dr < dd {
            return r;
        }
        let mut steps = dr - dd + 1;
        while !r.is_zero() && dr >= dd {
            let c = r.leading_coeff().unwrap().clone();
            r = r.scale(&lead).sub(&d.mul(&Poly::monomial(c, dr - dd)));
            steps -= 1;
            dr = match r.degree() {
                Some(x) => x,
                None => break,
            };
        }
        // keep the classical normalization lc^(delta+1) * n = q d + r
        for _ in 0..steps {
            r = r.scale(&lead);
        }
        r
    }

    /// Horner evaluation into a field through an embedding of coefficients.
    pub fn eval_map<F: Field>(&self, x: &F, embed: impl Fn(&R) -> F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&embed(c));
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.eval_map(&x, |c| c.to_complex())
    }

    pub fn complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_complex()).collect()
    }

    /// Exact square root in `R[q]`, if one exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let d = self.degree().unwrap();
        if !d.is_multiple_of(2) {
            return None;
        }
        let n = d / 2;
        let lead = self.leading_coeff().unwrap();
        let sn = lead.sqrt_exact()?;
        let mut s = vec![R::zero(); n + 1];
        s[n] = sn.clone();
        let two_sn = sn.add(&sn);
        for i in (0..n).rev() {
            // coefficient of q^(n+i) in S^2: 2 s_i s_n plus terms with both
            // indices in (i, n), all already known
            let mut known = R::zero();
            for a in (i + 1)..n {
                let b = n + i - a;
                if b > i && b < n {
                    known = known.add(&s[a].mul(&s[b]));
                }
            }
            let target = self.coeff(n + i).sub(&known);
            s[i] = target.exact_div(&two_sn)?;
        }
        let cand = Poly::from_coeffs(s);
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }

    /// Reversal-invariance after stripping the largest power of `q`.
    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::domain("palindromicity is undefined for the zero polynomial"));
        }
        let p = self.shift_down(self.q_valuation());
        let v = &p.coeffs;
        Ok((0..v.len()).all(|i| v[i] == v[v.len() - 1 - i]))
    }
}

/// Primitive gcd with canonical leading unit, by the primitive-part
/// pseudo-remainder sequence. Contents are discarded: `gcd(6q^2-6, 4q-4)`
/// is `q - 1`.
pub fn poly_gcd<R: Coeff>(a: &Poly<R>, b: &Poly<R>) -> Result<Poly<R>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("gcd(0, 0) is undefined"));
    }
    if a.is_zero() {
        return Ok(b.primitive_part());
    }
    if b.is_zero() {
        return Ok(a.primitive_part());
    }
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = f.pseudo_rem(&g).primitive_part();
        f = g;
        g = r;
    }
    Ok(f.primitive_part())
}

/// Full gcd including contents, used by projective normalization.
pub fn poly_gcd_full<R: Coeff>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
    if a.is_zero() {
        return b.canon();
    }
    if b.is_zero() {
        return a.canon();
    }
    let content = a.content().gcd(&b.content());
    let prim = poly_gcd(a, b).expect("both nonzero");
    let g = prim.scale(&content);
    g.canon()
}

/// The `n`-th cyclotomic polynomial over the integers, by iterated exact
/// division of `q^n - 1` by the cyclotomics of proper divisors.
pub fn cyclotomic(n: usize) -> Result<Poly<BigInt>> {
    if n == 0 {
        return Err(Error::domain("cyclotomic polynomial index must be >= 1"));
    }
    let mut memo: Vec<Option<Poly<BigInt>>> = vec![None; n + 1];
    for m in 1..=n {
        if !n.is_multiple_of(m) {
            continue;
        }
        // q^m - 1
        let mut xm1 = Poly::<BigInt>::monomial(Coeff::one(), m);
        xm1 = xm1.sub(&Poly::one());
        let mut acc = xm1;
        for (d, phi_d) in memo.iter().enumerate().take(m).skip(1) {
            if m % d == 0 {
                let phi_d = phi_d.as_ref().expect("divisors filled in order");
                acc = acc.exact_div(phi_d).expect("cyclotomic division is exact");
            }
        }
        memo[m] = Some(acc);
    }
    Ok(memo[n].take().unwrap())
}

/// `[m]_q = 1 + q + ... + q^(m-1)`.
pub fn q_integer(m: usize) -> Poly<BigInt> {
    Poly::from_coeffs(vec![Coeff::one(); m])
}

/// Specialize a polynomial at a field value through [`FromBigInt`]-style
/// coefficient embeddings supplied by the caller.
pub fn eval_poly_in<R: Coeff, F: Field>(p: &Poly<R>, x: &F, embed: impl Fn(&R) -> F) -> F {
    p.eval_map(x, embed)
}

/// Embedding of integer polynomials into any field with `FromBigInt`.
pub fn eval_int_poly<F: FromBigInt>(p: &Poly<BigInt>, x: &F) -> F {
    p.eval_map(x, |c| F::from_bigint(c))
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

impl<R: Coeff> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Coeff> fmt::Display for Poly<R> {
    /// Descending powers, explicit signs: `q^2 - q + 1`, `(1-1*w)*q + 2`,
    /// `3*q^4 - 2`. Bit-exact for golden files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) if !s.starts_with("(-") && !s.contains('w') => (true, rest.to_string()),
                _ => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag == "1";
            match (k, unit_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Coefficient parsing hook for the polynomial grammar.
pub trait ParseCoeff: Coeff {
    /// Try to parse a coefficient at `pos`; integers are always accepted,
    /// Eisenstein coefficients additionally accept `(a+b*w)`.
    fn parse_coeff(t: &mut Tokens) -> Result<Self>;
}

impl ParseCoeff for BigInt {
    fn parse_coeff(t: &mut Tokens) -> Result<Self> {
        t.parse_int()
    }
}

impl ParseCoeff for super::EisensteinInt {
    fn parse_coeff(t: &mut Tokens) -> Result<Self> {
        if t.peek() == Some('(') {
            t.bump();
            let a = t.parse_int()?;
            let sign = match t.peek() {
                Some('+') => 1,
                Some('-') => -1,
                _ => return Err(t.err("expected '+' or '-' inside Eisenstein coefficient")),
            };
            t.bump();
            let mut b = t.parse_int()?;
            if sign < 0 {
                b = -b;
            }
            t.expect('*')?;
            t.expect('w')?;
            t.expect(')')?;
            Ok(super::EisensteinInt { a, b })
        } else {
            Ok(super::EisensteinInt { a: t.parse_int()?, b: BigInt::from(0) })
        }
    }
}

/// Minimal cursor over the input; shared by the polynomial, matrix and point
/// parsers.
pub struct Tokens {
    chars: Vec<char>,
    pub pos: usize,
}

impl Tokens {
    pub fn new(s: &str) -> Self {
        Tokens { chars: s.chars().collect(), pos: 0 }
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        match self.bump() {
            Some(x) if x == c => Ok(()),
            _ => Err(self.err(format!("expected '{c}'"))),
        }
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn parse_int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut s = String::new();
        if matches!(self.chars.get(self.pos), Some('-')) {
            s.push('-');
            self.pos += 1;
        }
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars[self.pos]);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        s.parse::<BigInt>().map_err(|e| self.err(e.to_string()))
    }
}

/// Parse one polynomial from the cursor (stops at a delimiter such as
/// `,`, `:`, `]`).
pub fn parse_poly_at<R: ParseCoeff>(t: &mut Tokens) -> Result<Poly<R>> {
    let mut acc: Poly<R> = Poly::zero();
    let mut first = true;
    loop {
        let sign = match t.peek() {
            Some('+') => {
                t.bump();
                 R::one()
            }
            Some('-') => {
                t.bump();
                R::one().neg()
            }
            None => {
                if first {
                    return Err(t.err("empty polynomial"));
                }
                break;
            }
            Some(c) => {
                if first {
                    R::one()
                } else if c == ',' || c == ':' || c == ']' || c == ')' {
                    break;
                } else {
                    return Err(t.err("expected '+' or '-' between terms"));
                }
            }
        };
        // term := coef ('*'? q ('^' int)?)? | q ('^' int)?
        let (coef, saw_coef) = match t.peek() {
            Some('q') => (R::one(), false),
            _ => (R::parse_coeff(t)?, true),
        };
        let mut power = 0usize;
        match t.peek() {
            Some('*') => {
                t.bump();
                t.expect('q')?;
                power = parse_power(t)?;
            }
            Some('q') => {
                t.bump();
                power = parse_power(t)?;
            }
            _ => {
                if !saw_coef {
                    return Err(t.err("expected a term"));
                }
            }
        }
        acc = acc.add(&Poly::monomial(sign.mul(&coef), power));
        first = false;
        match t.peek() {
            Some('+') | Some('-') => continue,
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_power(t: &mut Tokens) -> Result<usize> {
    if t.peek() == Some('^') {
        t.bump();
        let n = t.parse_int()?;
        use num_traits::ToPrimitive;
        n.to_usize().ok_or_else(|| t.err("exponent out of range"))
    } else {
        Ok(1)
    }
}

impl<R: ParseCoeff> std::str::FromStr for Poly<R> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut t = Tokens::new(s);
        let p = parse_poly_at(&mut t)?;
        if !t.at_end() {
            return Err(t.err("trailing input after polynomial"));
        }
        Ok(p)
    }
}
