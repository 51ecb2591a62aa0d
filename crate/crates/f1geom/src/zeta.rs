//! Counting polynomials and the zeta functions they determine.
//!
//! A toric variety assembled from a fan has a counting polynomial N with
//! N(q) = #X(F_q) for prime powers q and N(2n + 1) equal to the number of
//! points over the degree-n extension of the one-element field. When
//! N(x) = sum a_i x^i, the attached zeta function is the finite product
//! prod_i (s - i)^{a_i}, and N(1) recovers the Euler characteristic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fan::{dual_monoid, Cone, Fan};

/// Integer polynomial in one variable, stored low degree first with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CountPolynomial {
    coeffs: Vec<BigInt>,
}

impl CountPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CountPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        CountPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CountPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial x^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        CountPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        CountPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients, constant term first, no trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().expect("coefficient fits in f64");
        }
        acc
    }

    pub fn add(&self, other: &CountPolynomial) -> CountPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        CountPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &CountPolynomial) -> CountPolynomial {
        if self.is_zero() || other.is_zero() {
            return CountPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CountPolynomial::new(coeffs)
    }

    pub fn pow(&self, e: usize) -> CountPolynomial {
        let mut acc = CountPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Finite product prod (s - i)^{a_i} recorded as the list of pairs
/// (i, a_i) with a_i != 0, sorted by i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZetaFunction {
    factors: Vec<(u32, BigInt)>,
}

impl ZetaFunction {
    /// Pairs (root, multiplicity), multiplicities nonzero, roots strictly
    /// increasing.
    pub fn factors(&self) -> &[(u32, BigInt)] {
        &self.factors
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        let mut acc = 1.0;
        for (i, a) in &self.factors {
            let base = s - f64::from(*i);
            if a.is_negative() && base.abs() < 1e-9 {
                return Err(Error::PoleAt(*i));
            }
            let e = a.to_i32().expect("multiplicity fits in i32");
            acc *= base.powi(e);
        }
        Ok(acc)
    }
}

impl fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        if let [(i, a)] = self.factors.as_slice() {
            if a.is_one() && *i != 0 {
                return write!(f, "s - {i}");
            }
        }
        let mut first = true;
        for (i, a) in &self.factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let base = match i {
                0 => "s".to_string(),
                _ => format!("(s - {i})"),
            };
            if a.is_one() {
                write!(f, "{base}")?;
            } else if *i == 0 {
                write!(f, "s^{a}")?;
            } else {
                write!(f, "{base}^{a}")?;
            }
        }
        Ok(())
    }
}

/// Zeta function attached to a counting polynomial: each coefficient a_i
/// of x^i contributes the factor (s - i)^{a_i}.
pub fn zeta(n: &CountPolynomial) -> ZetaFunction {
    let factors = n
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| (u32::try_from(i).expect("degree fits in u32"), a.clone()))
        .collect();
    ZetaFunction { factors }
}

/// Counting polynomial of the affine chart of a regular cone: a factor x
/// per affine generator and a factor (x - 1) per unit generator, so a cone
/// of dimension r in rank d yields x^r (x - 1)^{d - r}.
pub fn chart_count_poly(c: &Cone) -> Result<CountPolynomial> {
    let pres = dual_monoid(c)?;
    let x = CountPolynomial::monomial(1);
    let xm1 = CountPolynomial::from_i64(&[-1, 1]);
    Ok(x.pow(pres.affine_gens().len())
        .mul(&xm1.pow(pres.unit_gens().len())))
}

/// Counting polynomial of the toric variety of a fan: the charts are glued
/// along torus orbits, one orbit per cone, and the orbit of a cone of
/// dimension r contributes (x - 1)^{d - r}.
pub fn fan_count_poly(f: &Fan) -> CountPolynomial {
    let xm1 = CountPolynomial::from_i64(&[-1, 1]);
    let mut acc = CountPolynomial::zero();
    for c in f.cones() {
        acc = acc.add(&xm1.pow(f.rank() - c.dim()));
    }
    acc
}

/// Euler characteristic, i.e. the counting polynomial evaluated at 1.
pub fn euler_char(n: &CountPolynomial) -> BigInt {
    n.eval(&BigInt::one())
}

pub const DEFAULT_WEIL_EPS: f64 = 1e-3;

/// Limit formula recovering the zeta value from the counting polynomial:
///
///   F(q) = prod_i (1 - q^{i - s})^{a_i} / (q - 1)^{N(1)}
///
/// tends, as q decreases to 1, to a nonzero multiple of prod (s - i)^{a_i}
/// whose constant is eliminated here by one step of Richardson
/// extrapolation: the returned value is 2 F(1 + eps / 2) - F(1 + eps),
/// divided by the same combination for the constant. Smaller eps means
/// less truncation error; eps around 1e-4 gives roughly eight significant
/// digits in double precision.
pub fn weil_limit(n: &CountPolynomial, s: f64, eps: f64) -> Result<f64> {
    if !eps.is_finite() || eps <= 0.0 {
        return Err(Error::BadIndex(format!("eps must be positive, got {eps}")));
    }
    let z = zeta(n);
    for (i, a) in z.factors() {
        if a.is_negative() && (s - f64::from(*i)).abs() < 1e-9 {
            return Err(Error::PoleAt(*i));
        }
    }
    let chi = euler_char(n)
        .to_i32()
        .expect("Euler characteristic fits in i32");
    let f = |q: f64| -> f64 {
        let mut acc = 1.0;
        for (i, a) in z.factors() {
            let e = a.to_i32().expect("multiplicity fits in i32");
            acc *= (1.0 - q.powf(f64::from(*i) - s)).powi(e);
        }
        acc / (q - 1.0).powi(chi)
    };
    // F(1 + t) = zeta(s) (1 + c1 t + O(t^2)), so one Richardson step
    // cancels the linear error term
    Ok(2.0 * f(1.0 + eps / 2.0) - f(1.0 + eps))
}

/// Polynomial in one variable with exact rational coefficients, stored
/// low degree first with no trailing zeros. Counting functions that are
/// integer valued without having integer coefficients (they exist, see
/// the short-vector counts) live here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The same polynomial with integer coefficients, if it has them.
    pub fn to_count_poly(&self) -> Result<CountPolynomial> {
        if !self.is_integral() {
            return Err(Error::NonIntegralCoefficient);
        }
        Ok(CountPolynomial::new(
            self.coeffs.iter().map(|c| c.to_integer()).collect(),
        ))
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Recover the unique polynomial of degree <= `bound` through integer
/// point samples, exactly, with rational coefficients.
///
/// The first `bound` + 1 distinct samples pin the polynomial down by
/// Lagrange interpolation; any further samples must agree with it.
/// Repeated x with differing y, or extra samples off the curve, are
/// reported as inconsistent.
pub fn interpolate_rational_poly(
    samples: &[(BigInt, BigInt)],
    bound: usize,
) -> Result<RationalPolynomial> {
    let mut dedup: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for (x, y) in samples {
        if let Some(prev) = dedup.get(x) {
            if prev != y {
                return Err(Error::InconsistentSamples);
            }
        } else {
            dedup.insert(x.clone(), y.clone());
        }
    }
    let needed = bound + 1;
    if dedup.len() < needed {
        return Err(Error::InsufficientSamples {
            needed,
            got: dedup.len(),
        });
    }
    let pts: Vec<(BigRational, BigRational)> = dedup
        .iter()
        .map(|(x, y)| {
            (
                BigRational::from_integer(x.clone()),
                BigRational::from_integer(y.clone()),
            )
        })
        .collect();
    // Lagrange basis over the first `needed` points
    let mut coeffs = vec![BigRational::zero(); needed];
    for i in 0..needed {
        // numerator polynomial prod_{j != i} (x - x_j), scaled by
        // y_i / prod_{j != i} (x_i - x_j)
        let mut basis = vec![BigRational::zero(); needed];
        basis[0] = BigRational::one();
        let mut deg = 0;
        let mut denom = BigRational::one();
        for j in 0..needed {
            if j == i {
                continue;
            }
            denom *= &pts[i].0 - &pts[j].0;
            // multiply basis by (x - x_j) in place, high degree first
            for k in (0..=deg).rev() {
                let t = basis[k].clone();
                basis[k + 1] += &t;
                basis[k] = -&pts[j].0 * t;
            }
            deg += 1;
        }
        let scale = &pts[i].1 / denom;
        for (c, b) in coeffs.iter_mut().zip(basis.iter()) {
            *c += b * &scale;
        }
    }
    let poly = RationalPolynomial::new(coeffs);
    for (x, y) in pts.iter().skip(needed) {
        if poly.eval(x) != *y {
            return Err(Error::InconsistentSamples);
        }
    }
    Ok(poly)
}

/// Interpolation restricted to integer coefficients; a fractional
/// coefficient is an error.
pub fn interpolate_count_poly(
    samples: &[(BigInt, BigInt)],
    bound: usize,
) -> Result<CountPolynomial> {
    interpolate_rational_poly(samples, bound)?.to_count_poly()
}
