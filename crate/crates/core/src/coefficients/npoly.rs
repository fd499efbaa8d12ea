//! Polynomials in `n` whose coefficients are Laurent polynomials in `q`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentScalar, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct NPolynomial {
    coeffs: BTreeMap<u32, LaurentScalar>,
}

impl NPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentScalar::one())
    }

    pub fn constant(c: LaurentScalar) -> Self {
        Self::from_coeffs([(0, c)])
    }

    /// The polynomial `n`.
    pub fn n() -> Self {
        Self::from_coeffs([(1, LaurentScalar::one())])
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, LaurentScalar)>>(it: I) -> Self {
        let mut coeffs: BTreeMap<u32, LaurentScalar> = BTreeMap::new();
        for (d, c) in it {
            *coeffs.entry(d).or_default() += &c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    /// Builds a polynomial in `n` with rational coefficients, lowest degree first.
    pub fn from_rationals(cs: &[Rational]) -> Self {
        Self::from_coeffs(
            cs.iter()
                .enumerate()
                .map(|(d, c)| (d as u32, LaurentScalar::constant(c.clone()))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, LaurentScalar> {
        &self.coeffs
    }

    pub fn coeff(&self, d: u32) -> LaurentScalar {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    pub fn eval(&self, n: i64) -> LaurentScalar {
        let nr = Rational::from_integer(n);
        let mut acc = LaurentScalar::zero();
        let mut power = Rational::one();
        let mut deg = 0u32;
        for (&d, c) in &self.coeffs {
            while deg < d {
                power = &power * &nr;
                deg += 1;
            }
            acc += &c.scale(&power);
        }
        acc
    }

    /// Specializes every coefficient at `q = 1`, leaving a polynomial in `n` over `ℚ`.
    pub fn eval_q1(&self) -> NPolynomial {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|(&d, c)| (d, LaurentScalar::constant(c.eval_q1()))),
        )
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(&d, x)| (d, x * c)))
    }

    pub fn map_coeffs<F: FnMut(&LaurentScalar) -> Option<LaurentScalar>>(
        &self,
        mut f: F,
    ) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (&d, c) in &self.coeffs {
            out.push((d, f(c)?));
        }
        Some(Self::from_coeffs(out))
    }
}

impl Add<&NPolynomial> for &NPolynomial {
    type Output = NPolynomial;
    fn add(self, rhs: &NPolynomial) -> NPolynomial {
        NPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .chain(rhs.coeffs.iter())
                .map(|(&d, c)| (d, c.clone())),
        )
    }
}

impl Neg for &NPolynomial {
    type Output = NPolynomial;
    fn neg(self) -> NPolynomial {
        NPolynomial::from_coeffs(self.coeffs.iter().map(|(&d, c)| (d, -c)))
    }
}

impl Sub<&NPolynomial> for &NPolynomial {
    type Output = NPolynomial;
    fn sub(self, rhs: &NPolynomial) -> NPolynomial {
        self + &(-rhs)
    }
}

impl Mul<&NPolynomial> for &NPolynomial {
    type Output = NPolynomial;
    fn mul(self, rhs: &NPolynomial) -> NPolynomial {
        let mut out = Vec::new();
        for (&d, c) in &self.coeffs {
            for (&e, x) in &rhs.coeffs {
                out.push((d + e, c * x));
            }
        }
        NPolynomial::from_coeffs(out)
    }
}

impl fmt::Debug for NPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*n")?,
                _ => write!(f, "({c})*n^{d}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as a list of `[n-degree, LaurentScalar]` pairs, ascending degree.
impl Serialize for NPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(&u32, &LaurentScalar)> = self.coeffs.iter().collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(u32, LaurentScalar)> = Vec::deserialize(d)?;
        Ok(NPolynomial::from_coeffs(pairs))
    }
}

/// Coefficients (lowest degree first) of the unique polynomial of degree
/// `< xs.len()` through the given rational points, by Newton divided differences.
fn newton_fit(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let k = xs.len();
    let mut table = ys.to_vec();
    let mut newton = Vec::with_capacity(k);
    for level in 0..k {
        newton.push(table[0].clone());
        let next: Vec<Rational> = (0..table.len().saturating_sub(1))
            .map(|i| &(&table[i + 1] - &table[i]) / &(&xs[i + level + 1] - &xs[i]))
            .collect();
        table = next;
    }
    // Expand Σ newton[j] Π_{i<j} (x - xs[i]) into the monomial basis.
    let mut coeffs = vec![Rational::zero(); k];
    let mut basis = vec![Rational::one()];
    for (j, a) in newton.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += &(a * b);
        }
        if j + 1 < k {
            let mut nb = vec![Rational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                nb[i + 1] += b;
                nb[i] -= &(b * &xs[j]);
            }
            basis = nb;
        }
    }
    coeffs
}

/// Fits the unique polynomial in `n` of degree at most `degree_bound` through
/// the first `degree_bound + 1` points, exponent by exponent in `q`, and checks
/// every remaining point against it.
pub fn interpolate(points: &[(i64, LaurentScalar)], degree_bound: usize) -> Result<NPolynomial> {
    let needed = degree_bound + 1;
    if points.len() < needed {
        return Err(Error::Interpolation(format!(
            "{} points cannot determine a polynomial of degree {degree_bound}",
            points.len()
        )));
    }
    let distinct: BTreeSet<i64> = points.iter().map(|(n, _)| *n).collect();
    if distinct.len() != points.len() {
        return Err(Error::Interpolation("repeated node".into()));
    }
    let fit = &points[..needed];
    let xs: Vec<Rational> = fit.iter().map(|(n, _)| Rational::from_integer(*n)).collect();
    let exps: BTreeSet<i32> = fit
        .iter()
        .flat_map(|(_, v)| v.terms().iter().map(|(e, _)| *e))
        .collect();
    let mut out = Vec::new();
    for e in exps {
        let ys: Vec<Rational> = fit.iter().map(|(_, v)| v.coeff(e)).collect();
        for (d, c) in newton_fit(&xs, &ys).into_iter().enumerate() {
            out.push((d as u32, LaurentScalar::monomial(c, e)));
        }
    }
    let poly = NPolynomial::from_coeffs(out);
    for (n, v) in &points[needed..] {
        let got = poly.eval(*n);
        if &got != v {
            return Err(Error::Interpolation(format!(
                "inconsistent at n = {n}: fitted {got}, observed {v}"
            )));
        }
    }
    Ok(poly)
}
