//! Scalar tower: arbitrary-precision rationals, Gaussian rationals, and
//! truncated polynomials in the formal deformation parameter ħ.
//!
//! All arithmetic is exact. An [`HPoly`] fixes a truncation order `N` and
//! computes in `Q(i)[ħ]/(ħ^{N+1})`; combining polynomials of different
//! orders is a programming error and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always reduced with positive denominator.
pub type Rational = BigRational;

/// Element of Q(i): `re + im·i` with `i² = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: Rational::zero(),
            im: Rational::from_integer(BigInt::from(1)),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: Rational::from_integer(BigInt::from(n)),
            im: Rational::zero(),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRat {
            re,
            im: Rational::zero(),
        }
    }

    /// `p/q` as a real rational.
    pub fn ratio(p: i64, q: i64) -> Self {
        GaussRat {
            re: Rational::new(BigInt::from(p), BigInt::from(q)),
            im: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re == Rational::from_integer(BigInt::from(1))
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonInvertibleScalar);
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Ok(GaussRat {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        // Purely real values dominate in practice; skip the cross terms then.
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRat {
                re: &self.re * &rhs.re,
                im: Rational::zero(),
            };
        }
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for GaussRat {
    /// Canonical form `p/q` or `p/q±r/si`; denominators always explicit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.re))?;
        if !self.im.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{}i", fmt_rational(&self.im.abs()))?;
            } else {
                write!(f, "+{}i", fmt_rational(&self.im))?;
            }
        }
        Ok(())
    }
}

fn parse_plain_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl FromStr for GaussRat {
    type Err = Error;

    /// Accepts `p`, `p/q`, `p/qi`, and `p/q±r/si`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let (real_part, imag_part) = match s.strip_suffix('i') {
            None => (Some(s), None),
            Some(body) => {
                // Split at the last top-level sign that separates the two parts.
                let mut split = None;
                for (pos, ch) in body.char_indices().skip(1) {
                    if ch == '+' || ch == '-' {
                        split = Some(pos);
                    }
                }
                match split {
                    Some(pos) => (Some(&body[..pos]), Some(&body[pos..])),
                    None => (None, Some(body)),
                }
            }
        };
        let re = match real_part {
            Some(r) => parse_plain_rational(r)?,
            None => Rational::zero(),
        };
        let im = match imag_part {
            Some(i) => {
                let i = i.strip_prefix('+').unwrap_or(i);
                parse_plain_rational(i)?
            }
            None => Rational::zero(),
        };
        Ok(GaussRat { re, im })
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Polynomial in ħ truncated at a fixed order: coefficients for ħ^0..=ħ^N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPoly {
    coeffs: Vec<GaussRat>,
}

impl HPoly {
    pub fn zero(order: usize) -> Self {
        HPoly {
            coeffs: vec![GaussRat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        HPoly::constant(GaussRat::one(), order)
    }

    pub fn constant(c: GaussRat, order: usize) -> Self {
        let mut coeffs = vec![GaussRat::zero(); order + 1];
        coeffs[0] = c;
        HPoly { coeffs }
    }

    /// `c·ħ^deg`, zero when `deg` exceeds the order.
    pub fn monomial(c: GaussRat, deg: usize, order: usize) -> Self {
        let mut coeffs = vec![GaussRat::zero(); order + 1];
        if deg <= order {
            coeffs[deg] = c;
        }
        HPoly { coeffs }
    }

    /// The generator ħ itself (zero at order 0).
    pub fn hbar(order: usize) -> Self {
        HPoly::monomial(GaussRat::one(), 1, order)
    }

    pub fn from_coeffs(coeffs: Vec<GaussRat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("HPoly needs at least the ħ^0 coefficient".into()));
        }
        Ok(HPoly { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, deg: usize) -> &GaussRat {
        &self.coeffs[deg]
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussRat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(GaussRat::is_zero)
    }

    /// Lowest ħ-degree with nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-truncate to a new order: pads with zeros or reduces mod ħ^{order+1}.
    pub fn retruncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, GaussRat::zero());
        HPoly { coeffs }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        HPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn assert_same_order(&self, rhs: &HPoly) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "truncation order mismatch: {} vs {}",
            self.order(),
            rhs.order()
        );
    }

    /// Multiplicative inverse mod ħ^{N+1}; requires invertible degree-0 part.
    ///
    /// Writes `a = a₀(1 + e)` with `e` of positive valuation and expands the
    /// finite geometric series for `(1 + e)^{-1}`.
    pub fn invert(&self) -> Result<Self> {
        let order = self.order();
        let a0_inv = self.coeffs[0].inv()?;
        let scaled = self.scale(&a0_inv); // 1 + e
        let mut e = scaled;
        e.coeffs[0] = GaussRat::zero();
        let neg_e = -&e;
        let mut acc = HPoly::one(order);
        let mut pow = HPoly::one(order);
        for _ in 1..=order {
            pow = &pow * &neg_e;
            if pow.is_zero() {
                break;
            }
            acc = &acc + &pow;
        }
        Ok(acc.scale(&a0_inv))
    }
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        self.assert_same_order(rhs);
        HPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        self.assert_same_order(rhs);
        HPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        self.assert_same_order(rhs);
        let order = self.order();
        let mut coeffs = vec![GaussRat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        HPoly { coeffs }
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, rhs: &HPoly) {
        self.assert_same_order(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})ħ")?,
                d => write!(f, "({c})ħ^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        if strings.is_empty() {
            return Err(D::Error::custom("HPoly needs at least one coefficient"));
        }
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<GaussRat>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(HPoly { coeffs })
    }
}
