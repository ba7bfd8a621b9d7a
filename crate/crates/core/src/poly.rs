//! Exact Laurent polynomials in `u`, `v` with big-integer coefficients.
//!
//! Every E-polynomial handled by the crate lives in `Z[u^±1, v^±1]`. The class
//! of the affine line is `q = uv`, and most values of interest are polynomials
//! in `q` alone ("diagonal" polynomials).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The monomial `u^u * v^v`.
///
/// Ordered by total degree first, then by the `u` exponent. The order is
/// translation invariant, so leading and trailing terms are multiplicative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub u: i64,
    pub v: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, v: 0 };

    pub fn new(u: i64, v: i64) -> Self {
        Monomial { u, v }
    }

    pub fn q(k: i64) -> Self {
        Monomial { u: k, v: k }
    }

    pub fn total_degree(self) -> i64 {
        self.u + self.v
    }

    pub fn is_diagonal(self) -> bool {
        self.u == self.v
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.u + other.u, self.v + other.v)
    }

    fn over(self, other: Monomial) -> Monomial {
        Monomial::new(self.u - other.u, self.v - other.v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total_degree(), self.u).cmp(&(other.total_degree(), other.u))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `Z[u^±1, v^±1]` in canonical form: no stored coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn u() -> Self {
        LaurentPoly::monomial(1, Monomial::new(1, 0))
    }

    pub fn v() -> Self {
        LaurentPoly::monomial(1, Monomial::new(0, 1))
    }

    /// `q = uv`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, Monomial::q(1))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        LaurentPoly::monomial(1, Monomial::q(k))
    }

    /// Builds `Σ c_k q^k` from `(k, c_k)` pairs.
    pub fn from_q_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = (i64, C)>) -> Self {
        LaurentPoly::from_terms(coeffs.into_iter().map(|(k, c)| (Monomial::q(k), c.into())))
    }

    /// Builds a polynomial from arbitrary terms; repeated monomials are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn trailing_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Componentwise minimum and maximum exponents, `None` for zero.
    pub fn exponent_box(&self) -> Option<(Monomial, Monomial)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), m| {
            (Monomial::new(lo.u.min(m.u), lo.v.min(m.v)), Monomial::new(hi.u.max(m.u), hi.v.max(m.v)))
        }))
    }

    /// The value of a constant polynomial (zero counts as constant).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// True when every monomial is a power of `q`.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|m| m.is_diagonal())
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    fn shift_scale(&self, c: &BigInt, by: Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (m.times(by), x * c)).collect() }
    }

    /// `self^k` by binary exponentiation; `p^0 = 1`.
    pub fn pow(&self, mut k: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `NonExactDivision` when `divisor`
    /// does not divide `self` in `Z[u^±1, v^±1]`.
    ///
    /// Leading terms are eliminated one at a time. An exact quotient has its
    /// trailing monomial equal to `trail(self) / trail(divisor)` and, since
    /// Newton polygons add under multiplication, its exponents lie in the box
    /// `[min(self) - min(divisor), max(self) - max(divisor)]` in each variable.
    /// Either bound being crossed proves the division is not exact, and the box
    /// keeps the elimination finite.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (d_lead, d_lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let (d_trail, _) = divisor.trailing_term().expect("nonzero divisor");
        let Some((p_trail, _)) = self.trailing_term() else {
            return Ok(LaurentPoly::zero());
        };
        let floor = p_trail.over(d_trail);
        let (p_lo, p_hi) = self.exponent_box().expect("nonzero");
        let (d_lo, d_hi) = divisor.exponent_box().expect("nonzero");
        let lo = p_lo.over(d_lo);
        let hi = p_hi.over(d_hi);
        let in_box = |m: Monomial| lo.u <= m.u && m.u <= hi.u && lo.v <= m.v && m.v <= hi.v;

        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((r_lead, r_lead_c)) = rem.leading_term() {
            let m = r_lead.over(d_lead);
            if m < floor || !in_box(m) {
                return Err(Error::NonExactDivision(format!("{divisor} does not divide {self}")));
            }
            let (c, r) = r_lead_c.div_rem(d_lead_c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(format!(
                    "{divisor} does not divide {self}: coefficient {r_lead_c} not divisible by {d_lead_c}"
                )));
            }
            rem -= &divisor.shift_scale(&c, m);
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    /// Exact rational value at `u = u0`, `v = v0`.
    pub fn eval(&self, u0: &BigRational, v0: &BigRational) -> Result<BigRational> {
        fn power(base: &BigRational, e: i64) -> Result<BigRational> {
            if e < 0 && base.is_zero() {
                return Err(Error::ZeroBase);
            }
            let mut r = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
            if e < 0 {
                r = r.recip();
            }
            Ok(r)
        }
        let mut acc = BigRational::zero();
        for (m, c) in self.terms() {
            acc += power(u0, m.u)? * power(v0, m.v)? * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Evaluation at integer points, a convenience over [`LaurentPoly::eval`].
    pub fn eval_int(&self, u0: i64, v0: i64) -> Result<BigRational> {
        self.eval(&BigRational::from_integer(u0.into()), &BigRational::from_integer(v0.into()))
    }

    /// Prints in the variables `u`, `v` regardless of shape.
    pub fn to_uv_string(&self) -> String {
        self.render(false)
    }

    /// Prints in `q` when diagonal, otherwise in `u`, `v`.
    pub fn to_q_string(&self) -> String {
        self.render(self.is_diagonal())
    }

    fn render(&self, in_q: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = if in_q {
                power_str("q", m.u)
            } else {
                [power_str("u", m.u), power_str("v", m.v)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

fn power_str(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_q_string())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.to_uv_string())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<u64> for LaurentPoly {
    fn from(c: u64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

// Text format: `3*u^2*v - q^-1 + 7`. Factors are `u`, `v`, `q` with optional
// `^k` (k may be negative, optionally parenthesised). The `*` between a
// coefficient and its monomial may be omitted.
struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Parse { input: self.src.to_string(), reason: format!("{} at byte {}", reason.into(), self.pos) })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let Some(d) = self.digits() else {
            return self.fail("expected exponent");
        };
        let Ok(e) = d.parse::<i64>() else {
            return self.fail("exponent out of range");
        };
        if paren && !self.eat(b')') {
            return self.fail("expected ')'");
        }
        Ok(if neg { -e } else { e })
    }

    fn term(&mut self, sign: i32) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::ONE;
        let mut seen = false;
        if let Some(d) = self.digits() {
            coeff = d.parse::<BigInt>().expect("ascii digits");
            seen = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(b'u' | b'v' | b'q')) {
                    return self.fail("expected variable after '*'");
                }
            }
        }
        while let Some(var @ (b'u' | b'v' | b'q')) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            mono = match var {
                b'u' => mono.times(Monomial::new(e, 0)),
                b'v' => mono.times(Monomial::new(0, e)),
                _ => mono.times(Monomial::q(e)),
            };
            seen = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(b'u' | b'v' | b'q')) {
                    return self.fail("expected variable after '*'");
                }
            }
        }
        if !seen {
            return self.fail("expected a term");
        }
        if sign < 0 {
            coeff = -coeff;
        }
        Ok((mono, coeff))
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (m, c) = self.term(sign)?;
            p.add_term(m, c);
            sign = match self.peek() {
                None => break,
                Some(b'+') => 1,
                Some(b'-') => -1,
                Some(_) => return self.fail("unexpected character"),
            };
            self.pos += 1;
        }
        Ok(p)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

/// JSON form: a list of `[a, b, "coefficient"]` triples for `c * u^a * v^b`,
/// in decreasing monomial order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<(i64, i64, String)> =
            self.terms.iter().rev().map(|(m, c)| (m.u, m.v, c.to_string())).collect();
        triples.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<(i64, i64, String)>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(triples.len());
        for (a, b, c) in triples {
            let c = c.trim().parse::<BigInt>().map_err(|e| D::Error::custom(format!("bad coefficient {c:?}: {e}")))?;
            terms.push((Monomial::new(a, b), c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&q() + &p("q - 1"), p("2*q - 1"));
        assert_eq!(&p("q^2 - 3") + &LaurentPoly::zero(), p("q^2 - 3"));
        assert_eq!(&p("u*v") + &p("u*v"), p("2*u*v"));
        assert!((&p("q - 1") - &p("q - 1")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&q() * &p("q - 1"), p("q^2 - q"));
        let qm1 = p("q - 1");
        assert_eq!(&qm1 * &qm1, p("q^2 - 2*q + 1"));
        let e_aff = &LaurentPoly::q() * &(&LaurentPoly::q() - &LaurentPoly::one());
        assert_eq!(e_aff, p("q^2 - q"));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(q().pow(0), LaurentPoly::one());
        assert_eq!(p("q - 1").pow(2), p("q^2 - 2q + 1"));
        assert_eq!(q().pow(3), p("u^3*v^3"));
        assert_eq!(LaurentPoly::zero().pow(0), LaurentPoly::one());
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("q^3 - q^2").exact_div(&p("q^2")).unwrap(), p("q - 1"));
        assert_eq!(p("q^2 - q").exact_div(&p("q - 1")).unwrap(), q());
        assert!(matches!(p("q^2 + 1").exact_div(&p("q - 1")), Err(Error::NonExactDivision(_))));
        assert_eq!(p("q").exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
        assert!(LaurentPoly::zero().exact_div(&q()).unwrap().is_zero());
    }

    #[test]
    fn exact_div_by_integer_constant() {
        assert_eq!(p("12*q^2 - 6").exact_div(&p("6")).unwrap(), p("2q^2 - 1"));
        assert!(p("12*q^2 - 5").exact_div(&p("6")).is_err());
    }

    #[test]
    fn exact_div_laurent_quotient() {
        // q^-1 (q - 1)^2 / (q - 1) = 1 - q^-1
        let num = &p("q^-1") * &p("q - 1").pow(2);
        assert_eq!(num.exact_div(&p("q - 1")).unwrap(), p("1 - q^-1"));
        // 1 / (1 - q) has no Laurent polynomial quotient
        assert!(p("1").exact_div(&p("1 - q")).is_err());
        // descending within one total degree must still stop
        assert!(p("u^3*v^-3 + 1").exact_div(&p("u - v")).is_err());
        let quot = p("u*v^-5 + u^-4").exact_div(&p("u + v")).unwrap();
        assert_eq!(&quot * &p("u + v"), p("u*v^-5 + u^-4"));
        assert!(p("u*v^-5 - u^-4").exact_div(&p("u + v")).is_err());
        assert_eq!(p("u^4 - v^4").exact_div(&p("u - v")).unwrap(), p("u^3 + u^2*v + u*v^2 + v^3"));
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::one();
        assert_eq!(q().eval(&one, &one).unwrap(), one);
        assert_eq!(p("q^2 - q").eval_int(2, 1).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(p("17").eval_int(-5, 9).unwrap(), BigRational::from_integer(17.into()));
        assert_eq!(p("u^-1*v").eval_int(2, 3).unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(p("u^-1").eval_int(0, 1), Err(Error::ZeroBase));
        assert!(p("u^2").eval_int(0, 1).unwrap().is_zero());
    }

    #[test]
    fn display_orders_by_total_degree() {
        assert_eq!(p("-q^2 + q^3").to_string(), "q^3 - q^2");
        assert_eq!(p("2q - 2").to_string(), "2*q - 2");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("v + u + u*v").to_string(), "u*v + u + v");
        assert_eq!(p("q^2").to_uv_string(), "u^2*v^2");
        assert_eq!(p("3u^-1*v^2 - q^-2").to_string(), "3*u^-1*v^2 - u^-2*v^-2");
    }

    #[test]
    fn parser_accepts_both_forms() {
        assert_eq!(p("q^3"), p("u^3*v^3"));
        assert_eq!(p("q*u"), p("u^2*v"));
        assert_eq!(p("u^(-2) v"), p("u^-2*v"));
        assert_eq!(p(" - 3 * q ^ 2 + 0"), p("-3q^2"));
        assert_eq!(p("0"), LaurentPoly::zero());
    }

    #[test]
    fn parser_rejects_garbage() {
        for bad in ["", "q +", "2*", "x", "q^", "q^(2", "3 4", "q**2", "+-q"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_is_list_of_triples() {
        let json = serde_json::to_string(&p("q^2 - 3u")).unwrap();
        assert_eq!(json, r#"[[2,2,"1"],[1,0,"-3"]]"#);
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p("q^2 - 3u"));
        let merged: LaurentPoly = serde_json::from_str(r#"[[1,1,"2"],[1,1,"-2"]]"#).unwrap();
        assert!(merged.is_zero());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let big = p("q + 1").pow(200);
        let c: BigInt = big.coeff(Monomial::q(100));
        assert!(c.bits() > 190);
        assert_eq!(big.exact_div(&p("q + 1").pow(199)).unwrap(), p("q + 1"));
    }
}
