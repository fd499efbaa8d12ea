//! Laurent polynomials in `q` with rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// A finite sum `Σ c_e q^e` with `e ∈ ℤ`, stored sorted by exponent with no
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: Vec<(i32, Rational)>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, c)] }
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::from_terms([(0, Rational::from_integer(-1)), (1, Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut v: Vec<(i32, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    /// Builds from integer coefficients listed from exponent `low` upward.
    pub fn from_coeffs(low: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low + i as i32, Rational::from_integer(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i32, Rational)] {
        &self.terms
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Specialization at `q = 1`.
    pub fn eval_q1(&self) -> Rational {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    /// Invariance under `q ↦ q^{-1}`.
    pub fn is_q_symmetric(&self) -> bool {
        let n = self.terms.len();
        (0..n).all(|i| {
            let (e, c) = &self.terms[i];
            let (f, d) = &self.terms[n - 1 - i];
            *e == -*f && c == d
        })
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    /// `self += q^k · other`.
    pub fn add_shifted(&mut self, other: &LaurentScalar, k: i32) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.shift(k);
            return;
        }
        self.merge_with(other.terms.iter().map(|(e, c)| (e + k, c.clone())));
    }

    /// `self -= q^k · other`.
    pub fn sub_shifted(&mut self, other: &LaurentScalar, k: i32) {
        if other.is_zero() {
            return;
        }
        self.merge_with(other.terms.iter().map(|(e, c)| (e + k, -c)));
    }

    /// `self += a · b`.
    pub fn add_product(&mut self, a: &LaurentScalar, b: &LaurentScalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.terms.len() == 1 {
            let (e, c) = &a.terms[0];
            self.merge_with(b.terms.iter().map(|(f, d)| (e + f, c * d)));
        } else if b.terms.len() == 1 {
            let (f, d) = &b.terms[0];
            self.merge_with(a.terms.iter().map(|(e, c)| (e + f, c * d)));
        } else {
            let p = a * b;
            self.merge_with(p.terms.into_iter());
        }
    }

    fn merge_with<I: Iterator<Item = (i32, Rational)>>(&mut self, other: I) {
        let mut out = Vec::with_capacity(self.terms.len() + 4);
        let mut left = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut right = other.peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((a, _)), Some((b, _))) => a.cmp(b),
            };
            match ord {
                Ordering::Less => out.push(left.next().unwrap()),
                Ordering::Greater => {
                    let t = right.next().unwrap();
                    if !t.1.is_zero() {
                        out.push(t);
                    }
                }
                Ordering::Equal => {
                    let (e, c) = left.next().unwrap();
                    let (_, d) = right.next().unwrap();
                    let s = &c + &d;
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                }
            }
        }
        self.terms = out;
    }

    /// Exact division; `None` if `divisor` does not divide `self` in `ℚ[q, q^{-1}]`.
    pub fn div_exact(&self, divisor: &LaurentScalar) -> Option<LaurentScalar> {
        assert!(!divisor.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Both sides become ordinary polynomials after removing the lowest power of q.
        let (a_low, a) = self.to_dense();
        let (b_low, b) = divisor.to_dense();
        let (quot, rem) = super::ratfunc::poly_divrem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (a_low - b_low + i as i32, c)),
        ))
    }

    /// Lowest exponent and dense coefficient vector from that exponent upward.
    pub(crate) fn to_dense(&self) -> (i32, Vec<Rational>) {
        let Some(low) = self.min_exp() else {
            return (0, Vec::new());
        };
        let high = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - low) as usize] = c.clone();
        }
        (low, v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out.add_shifted(rhs, 0);
        out
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self.add_shifted(&rhs, 0);
        self
    }
}

impl Sub<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out.sub_shifted(rhs, 0);
        out
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self.sub_shifted(&rhs, 0);
        self
    }
}

impl Mul<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        if self.is_zero() || rhs.is_zero() {
            return LaurentScalar::zero();
        }
        let low = self.terms[0].0 + rhs.terms[0].0;
        let high = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut acc = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                acc[(e + f - low) as usize] += &(c * d);
            }
        }
        LaurentScalar {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (low + i as i32, c))
                .collect(),
        }
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        self.add_shifted(rhs, 0);
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        self.sub_shifted(rhs, 0);
    }
}

impl From<Rational> for LaurentScalar {
    fn from(r: Rational) -> Self {
        LaurentScalar::constant(r)
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders highest exponent first, e.g. `q + 2 + q^-1` or `3/2*q^2 - q`.
impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentScalar {
    type Err = Error;

    /// Parses sums of terms like `c`, `c*q`, `q^e`, `c*q^e` joined by `+`/`-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("laurent {s:?}: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let is_sign = (ch == '+' || ch == '-') && prev != Some('^');
            if is_sign {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad("trailing sign"));
        }
        pieces.push((neg, cur));

        let mut terms = Vec::new();
        for (neg, piece) in pieces {
            let (coeff, exp) = match piece.find('q') {
                None => (piece.parse::<Rational>()?, 0),
                Some(pos) => {
                    let head = piece[..pos].trim_end_matches('*');
                    let coeff = if head.is_empty() {
                        Rational::one()
                    } else {
                        head.parse::<Rational>()?
                    };
                    let tail = &piece[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        let t = tail.strip_prefix('^').ok_or_else(|| bad("expected ^"))?;
                        t.parse::<i32>().map_err(|_| bad("bad exponent"))?
                    };
                    (coeff, exp)
                }
            };
            terms.push((exp, if neg { -coeff } else { coeff }));
        }
        Ok(Self::from_terms(terms))
    }
}

/// Serialized as a list of `[exponent, "num/den"]` pairs, ascending exponent.
impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i32, String)> = self
            .terms
            .iter()
            .map(|(e, c)| (*e, c.to_fraction_string()))
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i32, String)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            terms.push((e, c.parse::<Rational>().map_err(D::Error::custom)?));
        }
        Ok(LaurentScalar::from_terms(terms))
    }
}
