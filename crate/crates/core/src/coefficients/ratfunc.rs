//! Rational functions in `q` over `ℚ`, used wherever a linear solve needs a field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{LaurentScalar, Rational};

/// Dense polynomial, lowest degree first, no trailing zeros.
type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_add(a: &[Rational], b: &[Rational]) -> Poly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_neg(a: &[Rational]) -> Poly {
    a.iter().map(|c| -c).collect()
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            out[i + j] += &(c * d);
        }
    }
    trim(out)
}

/// Euclidean division of dense polynomials; `b` must be nonzero.
pub(crate) fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            rem[i + shift] -= &(&factor * c);
        }
        quot[shift] = factor;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn make_monic(p: Poly) -> (Poly, Rational) {
    let lead = p.last().cloned().unwrap_or_else(Rational::one);
    let inv = lead.recip();
    (p.iter().map(|c| c * &inv).collect(), lead)
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return vec![Rational::one()];
    }
    make_monic(x).0
}

/// A quotient `num / den` of polynomials in `q` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { num: Vec::new(), den: vec![Rational::one()] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(vec![r], vec![Rational::one()])
    }

    /// Builds `num/den` from coefficient lists (lowest degree first) and normalizes.
    pub fn new(num: Vec<Rational>, den: Vec<Rational>) -> Self {
        let num = trim(num);
        let den = trim(den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let (num, _) = poly_divrem(&num, &g);
        let (den, _) = poly_divrem(&den, &g);
        let (den, lead) = make_monic(den);
        let inv = lead.recip();
        let num = num.iter().map(|c| c * &inv).collect();
        Self { num, den }
    }

    pub fn from_laurent(x: &LaurentScalar) -> Self {
        let (low, dense) = x.to_dense();
        if dense.is_empty() {
            return Self::zero();
        }
        if low >= 0 {
            let mut num = vec![Rational::zero(); low as usize];
            num.extend(dense);
            Self::new(num, vec![Rational::one()])
        } else {
            let mut den = vec![Rational::zero(); (-low) as usize];
            den.push(Rational::one());
            Self::new(dense, den)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn numerator(&self) -> &[Rational] {
        &self.num
    }

    pub fn denominator(&self) -> &[Rational] {
        &self.den
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// The Laurent polynomial equal to `self`, if the reduced denominator is a power of `q`.
    pub fn to_laurent(&self) -> Option<LaurentScalar> {
        let k = self.den.len() - 1;
        if self.den[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentScalar::from_terms(
            self.num
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i32 - k as i32, c.clone())),
        ))
    }

    /// `(q / (q - 1))^e` for `e ≥ 0`, or its inverse power for `e < 0`.
    pub fn q_over_q_minus_one_pow(e: i32) -> Self {
        let base = Self::new(
            vec![Rational::zero(), Rational::one()],
            vec![Rational::from_integer(-1), Rational::one()],
        );
        let b = if e >= 0 { base } else { base.recip() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &b;
        }
        acc
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(poly_add(&self.num, &rhs.num), self.den.clone());
        }
        RationalFunction::new(
            poly_add(&poly_mul(&self.num, &rhs.den), &poly_mul(&rhs.num, &self.den)),
            poly_mul(&self.den, &rhs.den),
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: poly_neg(&self.num), den: self.den.clone() }
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(poly_mul(&self.num, &rhs.num), poly_mul(&self.den, &rhs.den))
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.recip()
    }
}

impl From<&LaurentScalar> for RationalFunction {
    fn from(x: &LaurentScalar) -> Self {
        RationalFunction::from_laurent(x)
    }
}

fn fmt_poly(p: &[Rational]) -> String {
    let l = LaurentScalar::from_terms(p.iter().enumerate().map(|(i, c)| (i as i32, c.clone())));
    l.to_string()
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        write!(f, "({}) / ({})", fmt_poly(&self.num), fmt_poly(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> LaurentScalar {
        s.parse().unwrap()
    }

    #[test]
    fn normalizes_common_factors() {
        // (q^2 - 1) / (2q - 2) = (q + 1) / 2
        let f = RationalFunction::new(
            vec![Rational::from_integer(-1), Rational::zero(), Rational::one()],
            vec![Rational::from_integer(-2), Rational::from_integer(2)],
        );
        assert_eq!(f.to_laurent().unwrap(), l("1/2*q + 1/2"));
    }

    #[test]
    fn laurent_round_trip() {
        let x = l("q^2 - 3 + 1/2*q^-4");
        assert_eq!(RationalFunction::from_laurent(&x).to_laurent().unwrap(), x);
    }

    #[test]
    fn power_of_q_over_q_minus_one_cancels() {
        let d = RationalFunction::q_over_q_minus_one_pow(2);
        let back = &d * &RationalFunction::q_over_q_minus_one_pow(-2);
        assert_eq!(back, RationalFunction::one());
        assert!(d.to_laurent().is_none());
    }
}
