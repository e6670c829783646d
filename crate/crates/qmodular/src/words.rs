//! Words in the generators `T, S, L, U, V, K`, the grammar and parser for
//! expressions such as `(T^2 S T^3 S T^5 S T^7 S)^5`, continued-fraction
//! word decompositions of rationals, the Euclidean decomposition of integer
//! matrices, and Dyer's substitution.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

/// Guard against pathological group exponents blowing a word up.
const MAX_EXPANDED_LETTERS: usize = 200_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Gen {
    T,
    S,
    L,
    U,
    V,
    K,
}

impl Gen {
    pub fn letter(self) -> char {
        match self {
            Gen::T => 'T',
            Gen::S => 'S',
            Gen::L => 'L',
            Gen::U => 'U',
            Gen::V => 'V',
            Gen::K => 'K',
        }
    }

    fn from_char(c: char) -> Option<Gen> {
        Some(match c {
            'T' => Gen::T,
            'S' => Gen::S,
            'L' => Gen::L,
            'U' => Gen::U,
            'V' => Gen::V,
            'K' => Gen::K,
            _ => return None,
        })
    }

    /// Reduce an exponent by the generator's order: the involutions to
    /// `{0, 1}`, `L` modulo 3, `T` untouched.
    fn reduce_exp(self, e: i64) -> i64 {
        match self {
            Gen::T => e,
            Gen::L => e.rem_euclid(3),
            _ => e.rem_euclid(2),
        }
    }
}

/// A normalized word: adjacent letters are distinct, involution exponents
/// are reduced to 1, `L` exponents to `{1, 2}`, `T` exponents are any
/// nonzero integer.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct GroupWord {
    letters: Vec<(Gen, i64)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut w = GroupWord::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Append one letter, merging with an equal top letter. Stored words
    /// keep adjacent letters distinct, so a single merge suffices.
    pub fn push(&mut self, g: Gen, e: i64) {
        let mut pending = g.reduce_exp(e);
        if pending == 0 {
            return;
        }
        if let Some(&(top, te)) = self.letters.last() {
            if top == g {
                self.letters.pop();
                pending = g.reduce_exp(te + pending);
            }
        }
        if pending != 0 {
            self.letters.push((g, pending));
        }
    }

    pub fn concat(&self, rhs: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for &(g, e) in &rhs.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> GroupWord {
        let mut w = GroupWord::identity();
        for &(g, e) in self.letters.iter().rev() {
            w.push(g, -e);
        }
        w
    }

    pub fn repeat(&self, n: i64) -> Result<GroupWord> {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let count = n.unsigned_abs() as usize;
        if base.len().saturating_mul(count) > MAX_EXPANDED_LETTERS {
            return Err(Error::domain("word exponent overflow"));
        }
        let mut w = GroupWord::identity();
        for _ in 0..count {
            w = w.concat(&base);
        }
        Ok(w)
    }

    /// Evaluate in the defining integer action.
    pub fn int_matrix(&self) -> IntMat {
        let mut m = IntMat::identity();
        for &(g, e) in &self.letters {
            m = m.mul(&IntMat::generator(g).pow(e));
        }
        m
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{}", g.letter())?;
            } else {
                write!(f, "{}^{}", g.letter(), e)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// parser: word := term+ ; term := letter exp? | '(' word ')' exp? ;
//         letter := 'T'|'S'|'L'|'U'|'V'|'K' ; exp := '^' '-'? digits
// ---------------------------------------------------------------------------

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> WordParser<'a> {
    fn new(src: &'a str) -> Self {
        WordParser { chars: src.chars().collect(), pos: 0, _src: src }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn parse_exp(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let neg = if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(c) = self.chars.get(self.pos) {
            if let Some(d) = c.to_digit(10) {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as i64))
                    .ok_or_else(|| self.err("exponent overflow"))?;
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected digits after '^'"));
        }
        Ok(if neg { -value } else { value })
    }

    fn parse_word(&mut self, depth: usize) -> Result<GroupWord> {
        if depth > 64 {
            return Err(self.err("nesting too deep"));
        }
        let mut acc = GroupWord::identity();
        let mut any = false;
        loop {
            match self.peek() {
                Some('(') => {
                    self.pos += 1;
                    let inner = self.parse_word(depth + 1)?;
                    if self.peek() != Some(')') {
                        return Err(self.err("expected ')'"));
                    }
                    self.pos += 1;
                    let e = self.parse_exp()?;
                    acc = acc.concat(&inner.repeat(e)?);
                    any = true;
                }
                Some(c) if Gen::from_char(c).is_some() => {
                    self.pos += 1;
                    let g = Gen::from_char(c).unwrap();
                    let e = self.parse_exp()?;
                    let mut w = GroupWord::identity();
                    w.push(g, e);
                    acc = acc.concat(&w);
                    any = true;
                }
                Some(')') | None => break,
                Some(c) => return Err(self.err(format!("unexpected character '{c}'"))),
            }
        }
        if !any {
            return Err(self.err("empty word"));
        }
        Ok(acc)
    }
}

/// Parse a word expression; `"1"` and `""` denote the identity.
pub fn parse_word(text: &str) -> Result<GroupWord> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(GroupWord::identity());
    }
    let mut p = WordParser::new(text);
    let w = p.parse_word(0)?;
    if p.peek().is_some() {
        return Err(p.err("trailing input after word"));
    }
    Ok(w)
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

// ---------------------------------------------------------------------------
// extended rationals and integer matrices
// ---------------------------------------------------------------------------

/// `P^1(Z)`: reduced `num/den` with `den >= 0`; infinity is `[1 : 0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    num: BigInt,
    den: BigInt,
}

impl ExtendedRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let mut num = num.into();
        let mut den = den.into();
        assert!(
            !(Zero::is_zero(&num) && Zero::is_zero(&den)),
            "[0 : 0] is not a projective point"
        );
        if Zero::is_zero(&den) {
            return ExtendedRational { num: BigInt::from(1), den };
        }
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        ExtendedRational { num, den }
    }

    pub fn infinity() -> Self {
        ExtendedRational { num: BigInt::from(1), den: BigInt::from(0) }
    }

    pub fn from_int(n: i64) -> Self {
        ExtendedRational::new(n, 1)
    }

    pub fn is_infinity(&self) -> bool {
        Zero::is_zero(&self.den)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_positive(&self) -> bool {
        !self.is_infinity() && self.num.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        Zero::is_zero(&self.num)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinity() {
            f64::INFINITY
        } else {
            self.num.to_f64().unwrap_or(f64::NAN) / self.den.to_f64().unwrap_or(f64::NAN)
        }
    }

    /// Total order on the finite rationals; infinity sorts last.
    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else if num_traits::One::is_one(&self.den) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    /// `num`, `num/den`, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "infinity" || s == "oo" {
            return Ok(ExtendedRational::infinity());
        }
        let parse_int = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Syntax { pos: 0, msg: format!("bad rational '{s}': {e}") })
        };
        match s.split_once('/') {
            None => Ok(ExtendedRational::new(parse_int(s)?, BigInt::from(1))),
            Some((n, d)) => {
                let den = parse_int(d)?;
                if Zero::is_zero(&den) {
                    return Err(Error::domain("zero denominator"));
                }
                Ok(ExtendedRational::new(parse_int(n)?, den))
            }
        }
    }
}

/// Integer 2x2 matrix acting projectively on `P^1(Z)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMat {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        IntMat { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        IntMat::new(1, 0, 0, 1)
    }

    pub fn generator(g: Gen) -> Self {
        match g {
            Gen::T => IntMat::new(1, 1, 0, 1),
            Gen::S => IntMat::new(0, -1, 1, 0),
            Gen::L => IntMat::new(1, -1, 1, 0),
            Gen::U => IntMat::new(0, 1, 1, 0),
            Gen::V => IntMat::new(-1, 0, 0, 1),
            Gen::K => IntMat::new(-1, 1, 0, 1),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        IntMat {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse up to scalar (adjugate); valid projectively for det = +-1.
    pub fn adjugate(&self) -> Self {
        IntMat { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.adjugate() } else { self.clone() };
        let mut acc = IntMat::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn apply(&self, x: &ExtendedRational) -> ExtendedRational {
        ExtendedRational::new(
            &self.a * x.num() + &self.b * x.den(),
            &self.c * x.num() + &self.d * x.den(),
        )
    }

    /// Projective equality over the integers.
    pub fn proj_eq(&self, rhs: &Self) -> bool {
        let v = [&self.a, &self.b, &self.c, &self.d];
        let u = [&rhs.a, &rhs.b, &rhs.c, &rhs.d];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if v[i] * u[j] != v[j] * u[i] {
                    return false;
                }
            }
        }
        // rule out the zero matrix pairing
        v.iter().any(|x| !Zero::is_zero(*x)) && u.iter().any(|x| !Zero::is_zero(*x))
    }

    pub fn is_proj_identity(&self) -> bool {
        self.proj_eq(&IntMat::identity())
    }
}

// ---------------------------------------------------------------------------
// continued fractions
// ---------------------------------------------------------------------------

/// Canonical continued fraction `[a0; a1, ..., an]` with `a0` integral,
/// `ai >= 1` for `i >= 1`, and `an >= 2` when `n >= 1`. Infinity yields the
/// empty expansion by convention.
pub fn cf_expansion(x: &ExtendedRational) -> Vec<BigInt> {
    if x.is_infinity() {
        return Vec::new();
    }
    let mut n = x.num().clone();
    let mut d = x.den().clone();
    let mut out = Vec::new();
    while !Zero::is_zero(&d) {
        let (q, r) = n.div_mod_floor(&d);
        out.push(q);
        n = d;
        d = r;
    }
    if out.len() > 1 && num_traits::One::is_one(out.last().unwrap()) {
        out.pop();
        let last = out.last_mut().unwrap();
        *last += 1;
    }
    out
}

/// Fold a continued fraction back to its value.
pub fn cf_value(cf: &[BigInt]) -> ExtendedRational {
    let mut acc = ExtendedRational::infinity();
    for a in cf.iter().rev() {
        // acc <- a + 1/acc
        if acc.is_infinity() {
            acc = ExtendedRational::new(a.clone(), 1);
        } else {
            acc = ExtendedRational::new(a * acc.num() + acc.den(), acc.num().clone());
        }
    }
    acc
}

/// A word `w` in `{T, S}` with `w(infinity) = x`, built from the canonical
/// continued fraction as `T^{a0} S T^{-a1} S T^{a2} S ...`.
pub fn cf_word(x: &ExtendedRational) -> GroupWord {
    let mut w = GroupWord::identity();
    if x.is_infinity() {
        return w;
    }
    let cf = cf_expansion(x);
    let mut sign = 1i64;
    for a in cf {
        let e = a.to_i64().expect("partial quotient fits in i64") * sign;
        if e != 0 {
            w.push(Gen::T, e);
        }
        w.push(Gen::S, 1);
        sign = -sign;
    }
    w
}

/// Euclidean decomposition of an integer matrix with determinant +-1 into a
/// word in `{T, S}` (det 1) or `{T, S, U}` with a single `U` (det -1).
pub fn matrix_to_word(m: &IntMat) -> Result<GroupWord> {
    let det = m.det();
    let det = det
        .to_i64()
        .filter(|d| d.abs() == 1)
        .ok_or_else(|| Error::domain("matrix_to_word requires determinant +-1"))?;
    let mut cur = m.clone();
    let mut word = GroupWord::identity();
    // reduce the first column by the Euclidean algorithm:
    // T^-n * M subtracts n times row 2 from row 1; S swaps rows projectively
    loop {
        if Zero::is_zero(&cur.c) {
            break;
        }
        if Zero::is_zero(&cur.a) {
            // S^-1 * cur brings a nonzero entry up; record S
            word.push(Gen::S, 1);
            cur = IntMat::generator(Gen::S).adjugate().mul(&cur);
            continue;
        }
        let n = cur.a.div_mod_floor(&cur.c).0;
        if !Zero::is_zero(&n) {
            word.push(Gen::T, n.to_i64().ok_or_else(|| Error::domain("entry overflow"))?);
            cur = IntMat::generator(Gen::T).pow(-n.to_i64().unwrap()).mul(&cur);
        } else {
            word.push(Gen::S, 1);
            cur = IntMat::generator(Gen::S).adjugate().mul(&cur);
        }
    }
    // now c = 0, so a*d = +-1
    let a = cur.a.to_i64().ok_or_else(|| Error::domain("entry overflow"))?;
    let b_over_a = (&cur.b * BigInt::from(a)).to_i64().ok_or_else(|| Error::domain("entry overflow"))?;
    if b_over_a != 0 {
        word.push(Gen::T, b_over_a);
    }
    if det == -1 {
        // residual [[1, 0], [0, -1]] = V = S U
        word.push(Gen::S, 1);
        word.push(Gen::U, 1);
    }
    debug_assert!(word.int_matrix().proj_eq(m));
    Ok(word)
}

/// Dyer's outer automorphism on words: `U -> U`, `K -> K`, `V -> UV`,
/// `T -> TU`, `S -> V`, `L -> L`.
pub fn dyer_alpha(w: &GroupWord) -> GroupWord {
    let mut out = GroupWord::identity();
    for &(g, e) in w.letters() {
        match g {
            Gen::U => out.push(Gen::U, e),
            Gen::K => out.push(Gen::K, e),
            Gen::L => out.push(Gen::L, e),
            Gen::S => out.push(Gen::V, e),
            Gen::V => {
                // involutions arrive with exponent 1
                out.push(Gen::U, 1);
                out.push(Gen::V, 1);
            }
            Gen::T => {
                // alpha(T) = TU, alpha(T^-1) = U T^-1
                if e > 0 {
                    for _ in 0..e {
                        out.push(Gen::T, 1);
                        out.push(Gen::U, 1);
                    }
                } else {
                    for _ in 0..(-e) {
                        out.push(Gen::U, 1);
                        out.push(Gen::T, -1);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xr(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(n, d)
    }

    #[test]
    fn parse_examples() {
        let w = parse_word("T^2 S").unwrap();
        assert_eq!(w.letters(), &[(Gen::T, 2), (Gen::S, 1)]);
        // (T^3 S)^4 expands then normalizes
        let w = parse_word("(T^3 S)^4").unwrap();
        assert_eq!(w.len(), 8);
        // involution reduction
        assert!(parse_word("S^2").unwrap().is_identity());
        assert!(parse_word("S^-1").unwrap().letters() == [(Gen::S, 1)]);
        assert_eq!(parse_word("L^4").unwrap().letters(), &[(Gen::L, 1)]);
        assert!(parse_word("T T^-1").unwrap().is_identity());
        assert!(parse_word("T^").is_err());
        assert!(parse_word("X").is_err());
        assert!(parse_word("(T S").is_err());
        assert!(parse_word("(T)^99999999999999999999").is_err());
    }

    #[test]
    fn word_display_round_trip() {
        for text in ["T^2 S T^-3 S", "L^2 K U V", "T S T S T^-1"] {
            let w = parse_word(text).unwrap();
            let back = parse_word(&w.to_string()).unwrap();
            assert_eq!(w, back);
        }
    }

    #[test]
    fn cf_expansion_examples() {
        // canonical convention: final quotient >= 2
        assert_eq!(cf_expansion(&xr(13, 8)), vec![1, 1, 1, 1, 2].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(cf_expansion(&xr(5, 2)), vec![BigInt::from(2), BigInt::from(2)]);
        assert_eq!(cf_expansion(&xr(-1, 2)), vec![BigInt::from(-1), BigInt::from(2)]);
        assert_eq!(cf_expansion(&ExtendedRational::infinity()), Vec::<BigInt>::new());
        // folding returns the value
        for (n, d) in [(13i64, 8i64), (5, 2), (-1, 2), (7, 1), (0, 1), (-22, 7)] {
            let x = xr(n, d);
            assert_eq!(cf_value(&cf_expansion(&x)), x);
        }
    }

    #[test]
    fn cf_word_sends_infinity_to_x() {
        for n in -20i64..=20 {
            for d in 0i64..=20 {
                if n == 0 && d == 0 {
                    continue;
                }
                let x = ExtendedRational::new(n, d);
                let w = cf_word(&x);
                let m = w.int_matrix();
                assert_eq!(m.apply(&ExtendedRational::infinity()), x, "x = {x}");
            }
        }
    }

    #[test]
    fn cf_word_of_one_is_ts() {
        let w = cf_word(&xr(1, 1));
        assert_eq!(w.letters(), &[(Gen::T, 1), (Gen::S, 1)]);
    }

    #[test]
    fn matrix_to_word_examples() {
        let t = IntMat::generator(Gen::T);
        assert_eq!(matrix_to_word(&t).unwrap().letters(), &[(Gen::T, 1)]);
        let s = IntMat::generator(Gen::S);
        let ws = matrix_to_word(&s).unwrap();
        assert!(ws.int_matrix().proj_eq(&s));
        // the stabilizer generator A = T S T S T^-1 = [[0, 1], [-1, 2]]
        let a = IntMat::new(0, 1, -1, 2);
        let wa = matrix_to_word(&a).unwrap();
        assert!(wa.int_matrix().proj_eq(&a));
        assert!(wa.int_matrix().proj_eq(&parse_word("T S T S T^-1").unwrap().int_matrix()));
        // det -1 needs exactly one U
        let u = IntMat::generator(Gen::U);
        let wu = matrix_to_word(&u).unwrap();
        assert!(wu.int_matrix().proj_eq(&u));
        let u_count: usize = wu.letters().iter().filter(|(g, _)| *g == Gen::U).count();
        assert_eq!(u_count, 1);
        assert!(matrix_to_word(&IntMat::new(2, 0, 0, 1)).is_err());
    }

    #[test]
    fn dyer_alpha_on_generators() {
        let alpha = |s: &str| dyer_alpha(&parse_word(s).unwrap());
        assert_eq!(alpha("T").letters(), &[(Gen::T, 1), (Gen::U, 1)]);
        assert_eq!(alpha("S").letters(), &[(Gen::V, 1)]);
        assert_eq!(alpha("L").letters(), &[(Gen::L, 1)]);
        assert_eq!(alpha("U").letters(), &[(Gen::U, 1)]);
        assert_eq!(alpha("K").letters(), &[(Gen::K, 1)]);
        assert_eq!(alpha("V").letters(), &[(Gen::U, 1), (Gen::V, 1)]);
        // alpha(A) = [[-1, 1], [-1, 2]]
        let m = alpha("T S T S T^-1").int_matrix();
        assert!(m.proj_eq(&IntMat::new(-1, 1, -1, 2)));
    }

    #[test]
    fn int_generators_satisfy_presentation() {
        let gm = |s: &str| parse_word(s).unwrap().int_matrix();
        assert!(gm("S^2").is_proj_identity());
        assert!(gm("(T S)^3").is_proj_identity());
        assert!(gm("U^2").is_proj_identity());
        assert!(gm("V^2").is_proj_identity());
        assert!(gm("K^2").is_proj_identity());
        assert!(gm("(U V)^2").is_proj_identity());
        assert!(gm("(K U)^3").is_proj_identity());
        // L = KU, T = KV, S = UV
        assert!(gm("L").proj_eq(&gm("K U")));
        assert!(gm("T").proj_eq(&gm("K V")));
        assert!(gm("S").proj_eq(&gm("U V")));
    }

    proptest! {
        #[test]
        fn prop_cf_word_soundness(n in -200i64..=200, d in 1i64..=200) {
            let x = ExtendedRational::new(n, d);
            let w = cf_word(&x);
            prop_assert_eq!(w.int_matrix().apply(&ExtendedRational::infinity()), x);
        }

        #[test]
        fn prop_matrix_word_round_trip(steps in prop::collection::vec((-4i64..=4, 0u8..=1), 1..8)) {
            let mut m = IntMat::identity();
            for (t_exp, use_s) in steps {
                if t_exp != 0 {
                    m = m.mul(&IntMat::generator(Gen::T).pow(t_exp));
                }
                if use_s == 1 {
                    m = m.mul(&IntMat::generator(Gen::S));
                }
            }
            let w = matrix_to_word(&m).unwrap();
            prop_assert!(w.int_matrix().proj_eq(&m));
        }

        #[test]
        fn prop_alpha_involutive_and_homomorphic(
            letters in prop::collection::vec((0usize..6, -3i64..=3), 0..30),
        ) {
            let gens = [Gen::T, Gen::S, Gen::L, Gen::U, Gen::V, Gen::K];
            let w = GroupWord::from_letters(
                letters.iter().filter(|(_, e)| *e != 0).map(|&(g, e)| (gens[g], e)),
            );
            // involution at the matrix level
            let twice = dyer_alpha(&dyer_alpha(&w));
            prop_assert!(twice.int_matrix().proj_eq(&w.int_matrix()));
        }

        #[test]
        fn prop_alpha_homomorphism(
            l1 in prop::collection::vec((0usize..6, -2i64..=2), 0..10),
            l2 in prop::collection::vec((0usize..6, -2i64..=2), 0..10),
        ) {
            let gens = [Gen::T, Gen::S, Gen::L, Gen::U, Gen::V, Gen::K];
            let mk = |ls: &[(usize, i64)]| GroupWord::from_letters(
                ls.iter().filter(|(_, e)| *e != 0).map(|&(g, e)| (gens[g], e)),
            );
            let w1 = mk(&l1);
            let w2 = mk(&l2);
            let lhs = dyer_alpha(&w1.concat(&w2)).int_matrix();
            let rhs = dyer_alpha(&w1).int_matrix().mul(&dyer_alpha(&w2).int_matrix());
            prop_assert!(lhs.proj_eq(&rhs));
        }
    }
}
