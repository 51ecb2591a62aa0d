//! Points of toric varieties over extensions of the one-element field.
//!
//! The degree-n extension has ring of functions Z[T]/(T^n - 1), whose
//! roots of unity are the 2n monomials +-T^i. A point of an affine chart
//! assigns a root of unity or zero to each affine generator of the dual
//! monoid and a root of unity to each unit generator; gluing the charts of
//! a fan identifies points along shared torus orbits. Evaluation maps a
//! point to the complex chart through T -> exp(2 pi i k / n).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::fan::{dual_monoid, Cone, Fan, LatticeVector, MonoidPresentation};

/// Absolute tolerance for compact membership of evaluated characters.
pub const COMPACT_TOL: f64 = 1e-9;

/// Extension degree n of the coefficient ring Z[T]/(T^n - 1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclotomicIndex(u32);

impl CyclotomicIndex {
    pub fn new(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadIndex("extension degree must be >= 1".into()));
        }
        Ok(CyclotomicIndex(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for CyclotomicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flip_if(self, flip: bool) -> Sign {
        match (self, flip) {
            (Sign::Plus, false) | (Sign::Minus, true) => Sign::Plus,
            (Sign::Plus, true) | (Sign::Minus, false) => Sign::Minus,
        }
    }

    fn to_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// A root of unity +-T^e of the degree-n extension, e in [0, n).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MuElement {
    sign: Sign,
    exponent: u32,
}

impl MuElement {
    pub fn new(sign: Sign, exponent: u32, n: CyclotomicIndex) -> Result<Self> {
        if exponent >= n.get() {
            return Err(Error::BadIndex(format!(
                "exponent {exponent} out of range for degree {n}"
            )));
        }
        Ok(MuElement { sign, exponent })
    }

    pub fn one() -> Self {
        MuElement {
            sign: Sign::Plus,
            exponent: 0,
        }
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn mul(self, other: MuElement, n: CyclotomicIndex) -> MuElement {
        MuElement {
            sign: self.sign.flip_if(other.sign == Sign::Minus),
            exponent: (self.exponent + other.exponent) % n.get(),
        }
    }

    /// Integer power, negative exponents included: the roots of unity form
    /// a group.
    pub fn pow(self, e: &BigInt, n: CyclotomicIndex) -> MuElement {
        let flip = self.sign == Sign::Minus && e.is_odd();
        let exp = (BigInt::from(self.exponent) * e)
            .mod_floor(&BigInt::from(n.get()))
            .to_u32()
            .expect("reduced exponent fits in u32");
        MuElement {
            sign: Sign::Plus.flip_if(flip),
            exponent: exp,
        }
    }

    /// Image under T -> exp(2 pi i k / n).
    pub fn to_complex(self, k: u32, n: CyclotomicIndex) -> Complex64 {
        let angle = 2.0 * std::f64::consts::PI * f64::from(k) * f64::from(self.exponent)
            / f64::from(n.get());
        Complex64::from_polar(1.0, angle) * self.sign.to_f64()
    }
}

impl fmt::Display for MuElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => "+",
            Sign::Minus => "-",
        };
        match self.exponent {
            0 => write!(f, "{sign}1"),
            1 => write!(f, "{sign}T"),
            e => write!(f, "{sign}T^{e}"),
        }
    }
}

/// Value of a character at a point: a root of unity or zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MuOrZero {
    Zero,
    Mu(MuElement),
}

impl MuOrZero {
    pub fn is_zero(self) -> bool {
        matches!(self, MuOrZero::Zero)
    }
}

impl fmt::Display for MuOrZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuOrZero::Zero => write!(f, "0"),
            MuOrZero::Mu(m) => write!(f, "{m}"),
        }
    }
}

/// The 2n roots of unity in a fixed order: +T^0..+T^{n-1}, then the same
/// with minus signs.
pub fn mu_elements(n: CyclotomicIndex) -> Vec<MuElement> {
    let mut out = Vec::with_capacity(2 * n.get() as usize);
    for sign in [Sign::Plus, Sign::Minus] {
        for e in 0..n.get() {
            out.push(MuElement { sign, exponent: e });
        }
    }
    out
}

/// A point of the affine chart of a regular cone: one value per dual
/// monoid generator, zero allowed only on affine generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartPoint {
    presentation: MonoidPresentation,
    affine_values: Vec<MuOrZero>,
    unit_values: Vec<MuElement>,
    n: CyclotomicIndex,
}

impl ChartPoint {
    pub fn presentation(&self) -> &MonoidPresentation {
        &self.presentation
    }

    pub fn affine_values(&self) -> &[MuOrZero] {
        &self.affine_values
    }

    pub fn unit_values(&self) -> &[MuElement] {
        &self.unit_values
    }

    pub fn n(&self) -> CyclotomicIndex {
        self.n
    }
}

/// All points of the chart: affine generators range over the 2n + 1
/// values of mu union zero, unit generators over the 2n values of mu, in
/// odometer order with the last generator varying fastest.
pub fn chart_points(m: &MonoidPresentation, n: CyclotomicIndex) -> Vec<ChartPoint> {
    let mus = mu_elements(n);
    let r = m.affine_gens().len();
    let u = m.unit_gens().len();
    let affine_radix = mus.len() + 1;
    let unit_radix = mus.len();
    let mut total = 1usize;
    for _ in 0..r {
        total *= affine_radix;
    }
    for _ in 0..u {
        total *= unit_radix;
    }
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0usize; r + u];
    loop {
        let affine_values: Vec<MuOrZero> = digits[..r]
            .iter()
            .map(|&d| {
                if d == 0 {
                    MuOrZero::Zero
                } else {
                    MuOrZero::Mu(mus[d - 1])
                }
            })
            .collect();
        let unit_values: Vec<MuElement> = digits[r..].iter().map(|&d| mus[d]).collect();
        out.push(ChartPoint {
            presentation: m.clone(),
            affine_values,
            unit_values,
            n,
        });
        // increment the odometer, last digit fastest
        let mut pos = r + u;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            let radix = if pos < r { affine_radix } else { unit_radix };
            digits[pos] += 1;
            if digits[pos] < radix {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Value of the character of `m` at the point, as an element of mu or
/// zero.
///
/// The character is a product of the generator values raised to the
/// coordinates of `m` in the presentation basis. A positive power of a
/// zero value makes the product zero; a negative power of a zero value is
/// undefined and reported as NotInMonoid; negative powers of roots of
/// unity are fine.
pub fn character_value(p: &ChartPoint, m: &LatticeVector) -> Result<MuOrZero> {
    let (a, u) = p.presentation().express(m);
    for (coeff, value) in a.iter().zip(p.affine_values()) {
        if value.is_zero() && coeff.is_negative() {
            return Err(Error::NotInMonoid);
        }
    }
    if a.iter()
        .zip(p.affine_values())
        .any(|(coeff, value)| value.is_zero() && coeff.is_positive())
    {
        return Ok(MuOrZero::Zero);
    }
    let mut acc = MuElement::one();
    for (coeff, value) in a.iter().zip(p.affine_values()) {
        if let MuOrZero::Mu(mu) = value {
            acc = acc.mul(mu.pow(coeff, p.n()), p.n());
        }
    }
    for (coeff, value) in u.iter().zip(p.unit_values()) {
        acc = acc.mul(value.pow(coeff, p.n()), p.n());
    }
    Ok(MuOrZero::Mu(acc))
}

/// Complex value of the character of `m` at the point under the embedding
/// T -> exp(2 pi i k / n).
///
/// `m` must lie in the dual monoid of the chart: nonnegative coordinates
/// on the affine generators, any coordinates on the unit generators.
pub fn evaluate(p: &ChartPoint, k: u32, m: &LatticeVector) -> Result<Complex64> {
    if k >= p.n().get() {
        return Err(Error::BadIndex(format!(
            "embedding index {k} out of range for degree {}",
            p.n()
        )));
    }
    let (a, _) = p.presentation().express(m);
    if a.iter().any(|c| c.is_negative()) {
        return Err(Error::NotInMonoid);
    }
    Ok(match character_value(p, m)? {
        MuOrZero::Zero => Complex64::new(0.0, 0.0),
        MuOrZero::Mu(mu) => mu.to_complex(k, p.n()),
    })
}

/// True iff every generator of the dual monoid evaluates inside the
/// closed unit disk (within COMPACT_TOL) at the point under the k-th
/// complex embedding.
pub fn in_compact(p: &ChartPoint, k: u32) -> Result<bool> {
    let gens: Vec<LatticeVector> = p
        .presentation()
        .affine_gens()
        .iter()
        .chain(p.presentation().unit_gens())
        .cloned()
        .collect();
    for g in &gens {
        let v = evaluate(p, k, g)?;
        if v.norm() > 1.0 + COMPACT_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A glued point of a toric variety: the cone whose orbit it lies on,
/// plus root-of-unity values on the canonical basis of characters
/// vanishing on that cone.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct OrbitPoint {
    support: Cone,
    torus_values: Vec<MuElement>,
    n: CyclotomicIndex,
}

impl OrbitPoint {
    pub fn support(&self) -> &Cone {
        &self.support
    }

    pub fn torus_values(&self) -> &[MuElement] {
        &self.torus_values
    }

    pub fn n(&self) -> CyclotomicIndex {
        self.n
    }
}

impl fmt::Display for OrbitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.support)?;
        for (i, v) in self.torus_values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// All points listed orbit by orbit: each cone contributes one point per
/// assignment of roots of unity to the canonical basis of its annihilator
/// lattice, (2n)^{d - dim} points in total.
pub fn orbit_points(f: &Fan, n: CyclotomicIndex) -> Vec<OrbitPoint> {
    let mus = mu_elements(n);
    let mut out = Vec::new();
    for c in f.cones() {
        let slots = f.rank() - c.dim();
        let mut digits = vec![0usize; slots];
        loop {
            out.push(OrbitPoint {
                support: c.clone(),
                torus_values: digits.iter().map(|&d| mus[d]).collect(),
                n,
            });
            let mut pos = slots;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < mus.len() {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    out
}

/// Canonical form of a chart point inside its fan: the support cone is
/// spanned by the rays whose dual affine generator vanishes at the point,
/// and the point is coordinatized by the values of the canonical
/// annihilator basis of that cone. Two chart points of different charts
/// are the same glued point exactly when their canonical forms agree.
pub fn canonical_orbit_point(p: &ChartPoint) -> OrbitPoint {
    let cone = p.presentation().cone();
    let support_rays: Vec<LatticeVector> = cone
        .rays()
        .iter()
        .zip(p.affine_values())
        .filter(|(_, v)| v.is_zero())
        .map(|(r, _)| r.clone())
        .collect();
    let support =
        Cone::new(cone.rank(), support_rays).expect("rays of a valid cone stay valid in subsets");
    let torus_values: Vec<MuElement> = support
        .annihilator_basis()
        .iter()
        .map(
            |b| match character_value(p, b).expect("basis avoids zero values by construction") {
                MuOrZero::Mu(mu) => mu,
                MuOrZero::Zero => unreachable!("annihilator characters are units on the orbit"),
            },
        )
        .collect();
    OrbitPoint {
        support,
        torus_values,
        n: p.n(),
    }
}

/// The points of the glued toric variety: chart points of all maximal
/// cones, identified by canonical form.
pub fn glued_points(f: &Fan, n: CyclotomicIndex) -> Result<BTreeSet<OrbitPoint>> {
    let mut out = BTreeSet::new();
    for c in f.maximal_cones() {
        let pres = dual_monoid(c)?;
        for p in chart_points(&pres, n) {
            out.insert(canonical_orbit_point(&p));
        }
    }
    Ok(out)
}
