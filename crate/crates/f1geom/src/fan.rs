//! Fans of regular rational cones and their dual monoid presentations.
//!
//! A cone lives in the lattice N = Z^d and is stored by its primitive,
//! linearly independent rays, kept sorted so equal cones compare equal.
//! "Regular" means the rays extend to a basis of N; equivalently every
//! elementary divisor of the ray matrix is 1. A fan is a finite,
//! face-closed collection of regular cones any two of which meet exactly
//! in the cone spanned by their common rays.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMat, RatMat};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector {
            coords: coords.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector {
            coords: vec![BigInt::zero(); rank],
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn negated(&self) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Divide out the gcd of the coordinates; signs are untouched because the
/// gcd is positive. The zero vector spans no ray.
pub fn primitive(v: &LatticeVector) -> Result<LatticeVector> {
    if v.is_zero() {
        return Err(Error::DegenerateRay);
    }
    let mut g = BigInt::zero();
    for c in v.coords() {
        g = g.gcd(c);
    }
    Ok(LatticeVector::new(
        v.coords().iter().map(|c| c / &g).collect(),
    ))
}

/// A simplicial rational cone with primitive, sorted rays.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cone {
    rank: usize,
    rays: Vec<LatticeVector>,
}

impl Cone {
    pub fn new(rank: usize, rays: Vec<LatticeVector>) -> Result<Self> {
        if rank < 1 {
            return Err(Error::BadRank(rank));
        }
        let mut prim = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: r.len(),
                });
            }
            prim.push(primitive(r)?);
        }
        prim.sort();
        for w in prim.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidCone(format!("duplicate ray {}", w[0])));
            }
        }
        let c = Cone { rank, rays: prim };
        if c.dim() > 0 && linalg::rank(&c.ray_matrix()) != c.dim() {
            return Err(Error::InvalidCone("rays are linearly dependent".into()));
        }
        Ok(c)
    }

    pub fn zero(rank: usize) -> Self {
        Cone {
            rank,
            rays: Vec::new(),
        }
    }

    /// Internal constructor for rays already known to be primitive,
    /// distinct, and independent.
    fn from_normalized_rays(rank: usize, mut rays: Vec<LatticeVector>) -> Self {
        rays.sort();
        Cone { rank, rays }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    /// Ray matrix, one ray per row (`dim x rank`).
    pub fn ray_matrix(&self) -> IntMat {
        self.rays.iter().map(|r| r.coords().to_vec()).collect()
    }

    /// True iff the rays extend to a basis of Z^rank, i.e. every elementary
    /// divisor of the ray matrix is 1.
    pub fn is_regular(&self) -> bool {
        if self.dim() == 0 {
            return true;
        }
        let divisors = linalg::snf_divisors(&self.ray_matrix());
        divisors.len() == self.dim() && divisors.iter().all(|d| d.is_one())
    }

    /// All faces, i.e. the cones on all 2^dim subsets of the rays, ordered
    /// by (dimension, rays).
    pub fn faces(&self) -> Vec<Cone> {
        let d = self.dim();
        let mut out: Vec<Cone> = (0u32..1 << d)
            .map(|mask| {
                let rays = self
                    .rays
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, r)| r.clone())
                    .collect();
                // subsets of a sorted list stay sorted
                Cone {
                    rank: self.rank,
                    rays,
                }
            })
            .collect();
        out.sort_by(|a, b| (a.dim(), &a.rays).cmp(&(b.dim(), &b.rays)));
        out
    }

    /// Subset test on rays; for simplicial cones this is exactly the face
    /// relation.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        self.rays.iter().all(|r| other.rays.contains(r))
    }

    /// The cone on the rays shared with `other`.
    pub fn common_face(&self, other: &Cone) -> Cone {
        let rays = self
            .rays
            .iter()
            .filter(|r| other.rays.contains(r))
            .cloned()
            .collect();
        Cone {
            rank: self.rank,
            rays,
        }
    }

    /// Exact membership: is `v` a nonnegative rational combination of the
    /// rays?
    pub fn contains(&self, v: &LatticeVector) -> bool {
        if v.is_zero() {
            return true;
        }
        if self.dim() == 0 {
            return false;
        }
        // solve rays^T c = v; the rays are independent, so the solution is
        // unique when it exists
        let a: RatMat = (0..self.rank)
            .map(|i| {
                self.rays
                    .iter()
                    .map(|r| BigRational::from_integer(r.coords()[i].clone()))
                    .collect()
            })
            .collect();
        let b: Vec<BigRational> = v
            .coords()
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        match linalg::solve_rational(&a, &b) {
            None => false,
            Some(c) => c.iter().all(|x| !x.is_negative()),
        }
    }

    /// Canonical (HNF) basis of the characters vanishing on the whole cone,
    /// i.e. of the lattice `{ m : <m, ray> = 0 for every ray }`.
    pub fn annihilator_basis(&self) -> Vec<LatticeVector> {
        linalg::kernel_basis(&self.ray_matrix(), self.rank)
            .into_iter()
            .map(LatticeVector::new)
            .collect()
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone[")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// Generators of the monoid of characters nonnegative on a regular cone.
///
/// `affine_gens[i]` pairs to 1 with ray i and to 0 with every other ray;
/// `unit_gens` is the canonical basis of characters vanishing on the cone.
/// Stacked, the two lists form a basis of the full character lattice, so
/// the monoid is generated freely by the affine generators over N and by
/// the unit generators over Z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonoidPresentation {
    cone: Cone,
    rank: usize,
    affine_gens: Vec<LatticeVector>,
    unit_gens: Vec<LatticeVector>,
    basis_inv: IntMat,
}

impl MonoidPresentation {
    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn affine_gens(&self) -> &[LatticeVector] {
        &self.affine_gens
    }

    pub fn unit_gens(&self) -> &[LatticeVector] {
        &self.unit_gens
    }

    /// Coordinates of `m` in the presentation basis, split into the affine
    /// part and the unit part. Always integral because the basis is a basis
    /// of the full character lattice.
    pub fn express(&self, m: &LatticeVector) -> (Vec<BigInt>, Vec<BigInt>) {
        assert_eq!(m.len(), self.rank, "character has wrong rank");
        let coords: Vec<BigInt> = (0..self.rank)
            .map(|j| {
                m.coords()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &self.basis_inv[i][j])
                    .sum()
            })
            .collect();
        let (a, u) = coords.split_at(self.affine_gens.len());
        (a.to_vec(), u.to_vec())
    }
}

/// Dual presentation of a regular cone: affine generators dual to the rays
/// plus the canonical unit-generator basis.
pub fn dual_monoid(c: &Cone) -> Result<MonoidPresentation> {
    if !c.is_regular() {
        return Err(Error::NotRegular);
    }
    let d = c.rank();
    let r = c.dim();
    let (affine, unit) = if r == 0 {
        (Vec::new(), linalg::identity(d))
    } else {
        let at = linalg::transpose(&c.ray_matrix(), d);
        let (h, u) = linalg::row_hnf(&at);
        // regularity is exactly "the rows of rays^T generate Z^r", so the
        // HNF of rays^T is the identity on top
        debug_assert!((0..r).all(|i| (0..r).all(|j| {
            if i == j {
                h[i][j].is_one()
            } else {
                h[i][j].is_zero()
            }
        })));
        let affine: IntMat = u[..r].to_vec();
        let lower = u[r..].to_vec();
        let unit: IntMat = if lower.is_empty() {
            Vec::new()
        } else {
            linalg::row_hnf(&lower).0
        };
        (affine, unit)
    };
    // reduce each affine generator modulo the unit lattice so the
    // presentation does not depend on the HNF transform's internals
    let mut affine = affine;
    for m in &mut affine {
        for k in &unit {
            let pivot_col = k.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let q = m[pivot_col].div_floor(&k[pivot_col]);
            if !q.is_zero() {
                for (x, y) in m.iter_mut().zip(k.iter()) {
                    *x -= &q * y;
                }
            }
        }
    }
    let mut basis = affine.clone();
    basis.extend(unit.iter().cloned());
    let basis_inv =
        linalg::invert_unimodular(&basis).expect("dual basis of a regular cone is unimodular");
    Ok(MonoidPresentation {
        cone: c.clone(),
        rank: d,
        affine_gens: affine.into_iter().map(LatticeVector::new).collect(),
        unit_gens: unit.into_iter().map(LatticeVector::new).collect(),
        basis_inv,
    })
}

/// A finite face-closed collection of regular cones meeting along common
/// faces. Cones are stored sorted by (dimension, rays).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    rank: usize,
    cones: Vec<Cone>,
}

impl Fan {
    /// Build a fan from its maximal cones: faces are added automatically,
    /// then the whole collection is validated.
    pub fn from_maximal_cones(rank: usize, maximal: Vec<Cone>) -> Result<Fan> {
        if rank < 1 {
            return Err(Error::BadRank(rank));
        }
        let mut set = BTreeSet::new();
        set.insert(Cone::zero(rank));
        for c in &maximal {
            if c.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: c.rank(),
                });
            }
            for f in c.faces() {
                set.insert(f);
            }
        }
        let fan = Fan {
            rank,
            cones: set.into_iter().collect(),
        };
        validate_cones(rank, &fan.cones)?;
        Ok(fan)
    }

    /// Sort and deduplicate only; no fan axioms are checked. Useful for
    /// assembling deliberately broken inputs and for products of fans that
    /// are valid by construction.
    pub fn from_cones_unchecked(rank: usize, cones: Vec<Cone>) -> Fan {
        let set: BTreeSet<Cone> = cones.into_iter().collect();
        Fan {
            rank,
            cones: set.into_iter().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn maximal_cones(&self) -> Vec<&Cone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|o| o.dim() > c.dim() && c.is_face_of(o))
            })
            .collect()
    }

    /// Sorted union of all rays.
    pub fn rays(&self) -> Vec<LatticeVector> {
        let set: BTreeSet<LatticeVector> = self
            .cones
            .iter()
            .flat_map(|c| c.rays().iter().cloned())
            .collect();
        set.into_iter().collect()
    }

    /// Check the fan axioms: face closure, regularity of every cone, and
    /// pairwise intersection in the common face.
    pub fn is_valid(&self) -> bool {
        validate_cones(self.rank, &self.cones).is_ok()
    }

    /// Wall criterion for completeness: all maximal cones have full
    /// dimension, every (d-1)-cone bounds exactly two maximal cones, and
    /// the dual graph is connected. Assumes the fan is valid.
    pub fn is_complete(&self) -> bool {
        let d = self.rank;
        let maximal = self.maximal_cones();
        if maximal.is_empty() || maximal.iter().any(|c| c.dim() != d) {
            return false;
        }
        for wall in self.cones.iter().filter(|c| c.dim() + 1 == d) {
            let incident = maximal.iter().filter(|m| wall.is_face_of(m)).count();
            if incident != 2 {
                return false;
            }
        }
        // dual graph connectivity
        let n = maximal.len();
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        while let Some(i) = queue.pop() {
            for j in 0..n {
                if !seen[j] && maximal[i].common_face(maximal[j]).dim() + 1 == d {
                    seen[j] = true;
                    queue.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn validate_cones(rank: usize, cones: &[Cone]) -> Result<()> {
    if cones.is_empty() {
        return Err(Error::InvalidFan("no cones".into()));
    }
    for c in cones {
        if c.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: c.rank(),
            });
        }
        if !c.is_regular() {
            return Err(Error::InvalidFan(format!("{c} is not regular")));
        }
        for f in c.faces() {
            if cones.binary_search(&f).is_err() {
                return Err(Error::InvalidFan(format!("missing face {f} of {c}")));
            }
        }
    }
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let (a, b) = (&cones[i], &cones[j]);
            if a.is_face_of(b) || b.is_face_of(a) {
                continue;
            }
            if !pair_meets_in_common_face(a, b) {
                return Err(Error::InvalidFan(format!(
                    "{a} and {b} do not meet in a common face"
                )));
            }
        }
    }
    Ok(())
}

/// Exact check that two simplicial cones intersect exactly in the cone on
/// their shared rays.
fn pair_meets_in_common_face(a: &Cone, b: &Cone) -> bool {
    let sigma = a.common_face(b);
    cone_intersection_generators(a, b)
        .iter()
        .all(|g| sigma.contains(g))
}

/// Generators of the intersection of two simplicial cones.
///
/// Points of the intersection are images of `{ (l, m) >= 0 : sum l_i u_i =
/// sum m_j w_j }`. Every extreme ray of that cone has a support on which
/// the equality system has a one-dimensional kernel with a positive
/// generator, so enumerating column supports finds a generating set.
fn cone_intersection_generators(a: &Cone, b: &Cone) -> Vec<LatticeVector> {
    let r = a.dim();
    let s = b.dim();
    let d = a.rank();
    if r == 0 || s == 0 {
        return Vec::new();
    }
    let m: RatMat = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> = Vec::with_capacity(r + s);
            for u in a.rays() {
                row.push(BigRational::from_integer(u.coords()[i].clone()));
            }
            for w in b.rays() {
                row.push(BigRational::from_integer(-w.coords()[i].clone()));
            }
            row
        })
        .collect();
    let mut out = BTreeSet::new();
    for mask in 1u32..1 << (r + s) {
        let k = mask.count_ones() as usize;
        // supports of extreme rays have at most rank+1 columns, and a
        // support confined to one side forces the zero solution
        if k > d + 1 || mask >> r == 0 || mask & ((1 << r) - 1) == 0 {
            continue;
        }
        let cols: Vec<usize> = (0..r + s).filter(|&c| mask >> c & 1 == 1).collect();
        let sub: RatMat = m
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let ker = linalg::rational_kernel(&sub, cols.len());
        if ker.len() != 1 {
            continue;
        }
        let mut gen = ker.into_iter().next().unwrap();
        if let Some(first) = gen.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in &mut gen {
                    *x = -x.clone();
                }
            }
        }
        if gen.iter().any(|x| x.is_negative()) {
            continue;
        }
        // image point under the first cone's rays
        let mut point = vec![BigRational::zero(); d];
        for (pos, &c) in cols.iter().enumerate() {
            if c < r {
                for (i, x) in point.iter_mut().enumerate() {
                    *x += &gen[pos] * BigRational::from_integer(a.rays()[c].coords()[i].clone());
                }
            }
        }
        if point.iter().all(|x| x.is_zero()) {
            continue;
        }
        let denom_lcm = point
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = point
            .iter()
            .map(|x| (x * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let v = primitive(&LatticeVector::new(ints)).expect("nonzero by the check above");
        out.insert(v);
    }
    out.into_iter().collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StandardFanKind {
    /// Rays e_1..e_d and -(e_1+..+e_d); maximal cones on all d-subsets.
    Projective,
    /// The single cone on e_1..e_d.
    Affine,
    /// Only the zero cone.
    Torus,
}

pub fn standard_fan(kind: StandardFanKind, d: usize) -> Result<Fan> {
    if d < 1 {
        return Err(Error::BadRank(d));
    }
    let basis: Vec<LatticeVector> = (0..d)
        .map(|i| {
            LatticeVector::new(
                (0..d)
                    .map(|j| {
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let maximal = match kind {
        StandardFanKind::Torus => Vec::new(),
        StandardFanKind::Affine => vec![Cone::new(d, basis)?],
        StandardFanKind::Projective => {
            let mut rays = basis;
            rays.push(LatticeVector::new((0..d).map(|_| -BigInt::one()).collect()));
            let mut cones = Vec::new();
            for mask in 0u32..1 << (d + 1) {
                if mask.count_ones() as usize != d {
                    continue;
                }
                let subset: Vec<LatticeVector> = rays
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, r)| r.clone())
                    .collect();
                cones.push(Cone::new(d, subset)?);
            }
            cones
        }
    };
    Fan::from_maximal_cones(d, maximal)
}

/// Product fan on the orthogonal direct sum of the two lattices; its cones
/// are exactly the pairwise products, so the result is valid whenever both
/// inputs are.
pub fn fan_product(a: &Fan, b: &Fan) -> Fan {
    let rank = a.rank() + b.rank();
    let mut cones = Vec::with_capacity(a.cones().len() * b.cones().len());
    for ca in a.cones() {
        for cb in b.cones() {
            let mut rays: Vec<LatticeVector> = Vec::with_capacity(ca.dim() + cb.dim());
            for r in ca.rays() {
                let mut coords = r.coords().to_vec();
                coords.extend(std::iter::repeat_with(BigInt::zero).take(b.rank()));
                rays.push(LatticeVector::new(coords));
            }
            for r in cb.rays() {
                let mut coords = vec![BigInt::zero(); a.rank()];
                coords.extend(r.coords().iter().cloned());
                rays.push(LatticeVector::new(coords));
            }
            cones.push(Cone::from_normalized_rays(rank, rays));
        }
    }
    Fan::from_cones_unchecked(rank, cones)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    fn cone(rank: usize, rays: &[&[i64]]) -> Cone {
        Cone::new(rank, rays.iter().map(|r| lv(r)).collect()).unwrap()
    }

    #[test]
    fn primitive_divides_out_gcd() {
        assert_eq!(primitive(&lv(&[2, 4])).unwrap(), lv(&[1, 2]));
        assert_eq!(primitive(&lv(&[-2, 4])).unwrap(), lv(&[-1, 2]));
        assert_eq!(primitive(&lv(&[0, -3])).unwrap(), lv(&[0, -1]));
        assert_eq!(primitive(&lv(&[0, 0])), Err(Error::DegenerateRay));
    }

    #[test]
    fn cone_construction_normalizes() {
        let c = cone(2, &[&[0, 2], &[1, 0]]);
        assert_eq!(c.rays(), &[lv(&[0, 1]), lv(&[1, 0])]);
        assert_eq!(c.dim(), 2);
        assert!(matches!(
            Cone::new(2, vec![lv(&[1, 0]), lv(&[2, 0])]),
            Err(Error::InvalidCone(_))
        ));
        assert!(matches!(
            Cone::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])]),
            Err(Error::InvalidCone(_))
        ));
    }

    #[test]
    fn regularity_by_elementary_divisors() {
        assert!(cone(2, &[&[1, 0], &[0, 1]]).is_regular());
        assert!(cone(2, &[&[1, 2]]).is_regular());
        assert!(cone(3, &[&[1, 0, 0], &[0, 1, 1]]).is_regular());
        // determinant 2 forces elementary divisor 2
        assert!(!cone(2, &[&[1, 0], &[1, 2]]).is_regular());
        assert!(Cone::zero(3).is_regular());
    }

    #[test]
    fn regularity_is_basis_independent() {
        // images under a few determinant +-1 maps keep their regularity
        let unimodular = [
            [[1i64, 1], [0, 1]],
            [[0, 1], [1, 0]],
            [[2, 1], [1, 1]],
            [[1, 0], [-3, 1]],
        ];
        for rays in [
            vec![lv(&[1, 0]), lv(&[0, 1])],
            vec![lv(&[1, 0]), lv(&[1, 2])],
        ] {
            let before = Cone::new(2, rays.clone()).unwrap().is_regular();
            for m in &unimodular {
                let mapped: Vec<LatticeVector> = rays
                    .iter()
                    .map(|r| {
                        lv(&[0, 1].map(|i| {
                            let c: i64 = r.coords()[0].clone().try_into().unwrap();
                            let d: i64 = r.coords()[1].clone().try_into().unwrap();
                            m[i][0] * c + m[i][1] * d
                        }))
                    })
                    .collect();
                assert_eq!(Cone::new(2, mapped).unwrap().is_regular(), before);
            }
        }
    }

    #[test]
    fn faces_enumerate_all_subsets() {
        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let faces = c.faces();
        assert_eq!(faces.len(), 8);
        assert_eq!(faces[0], Cone::zero(3));
        assert_eq!(faces[7], c);
    }

    #[test]
    fn membership_is_exact() {
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        assert!(c.contains(&lv(&[1, 1])));
        assert!(c.contains(&lv(&[3, 2])));
        assert!(!c.contains(&lv(&[0, 1])));
        assert!(!c.contains(&lv(&[-1, 0])));
        assert!(c.contains(&lv(&[0, 0])));
        assert!(!Cone::zero(2).contains(&lv(&[1, 0])));
    }

    #[test]
    fn dual_monoid_of_single_ray() {
        let pres = dual_monoid(&cone(2, &[&[1, 2]])).unwrap();
        assert_eq!(pres.affine_gens().len(), 1);
        assert_eq!(pres.unit_gens().len(), 1);
        // affine generator pairs to 1 with the ray, unit generator to 0
        assert_eq!(pres.affine_gens()[0].dot(&lv(&[1, 2])), BigInt::one());
        assert_eq!(pres.unit_gens()[0].dot(&lv(&[1, 2])), BigInt::zero());
        assert_eq!(pres.unit_gens()[0], lv(&[2, -1]));
    }

    #[test]
    fn dual_monoid_requires_regularity() {
        assert_eq!(
            dual_monoid(&cone(2, &[&[1, 0], &[1, 2]])),
            Err(Error::NotRegular)
        );
    }

    #[test]
    fn dual_monoid_pairings_and_basis() {
        for c in [
            cone(2, &[&[1, 0], &[0, 1]]),
            cone(2, &[&[0, 1], &[1, -1]]),
            cone(3, &[&[1, 0, 0], &[1, 1, 0]]),
            cone(3, &[&[1, 2, 3]]),
            Cone::zero(3),
        ] {
            let pres = dual_monoid(&c).unwrap();
            assert_eq!(pres.affine_gens().len(), c.dim());
            assert_eq!(pres.unit_gens().len(), c.rank() - c.dim());
            for (i, m) in pres.affine_gens().iter().enumerate() {
                for (j, ray) in c.rays().iter().enumerate() {
                    let expected = if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(m.dot(ray), expected);
                }
            }
            for u in pres.unit_gens() {
                for ray in c.rays() {
                    assert!(u.dot(ray).is_zero());
                }
            }
            // stacked generators form a basis of the character lattice
            let basis: IntMat = pres
                .affine_gens()
                .iter()
                .chain(pres.unit_gens())
                .map(|v| v.coords().to_vec())
                .collect();
            assert_eq!(linalg::det(&basis).abs(), BigInt::one());
        }
    }

    #[test]
    fn express_inverts_the_basis() {
        let pres = dual_monoid(&cone(2, &[&[0, 1], &[1, -1]])).unwrap();
        let m = lv(&[3, -2]);
        let (a, u) = pres.express(&m);
        let mut rebuilt = LatticeVector::zero(2);
        for (coeff, g) in a.iter().zip(pres.affine_gens()) {
            rebuilt = LatticeVector::new(
                rebuilt
                    .coords()
                    .iter()
                    .zip(g.coords())
                    .map(|(x, y)| x + coeff * y)
                    .collect(),
            );
        }
        for (coeff, g) in u.iter().zip(pres.unit_gens()) {
            rebuilt = LatticeVector::new(
                rebuilt
                    .coords()
                    .iter()
                    .zip(g.coords())
                    .map(|(x, y)| x + coeff * y)
                    .collect(),
            );
        }
        assert_eq!(rebuilt, m);
    }

    #[test]
    fn standard_fan_shapes() {
        assert_eq!(
            standard_fan(StandardFanKind::Projective, 1)
                .unwrap()
                .cones()
                .len(),
            3
        );
        assert_eq!(
            standard_fan(StandardFanKind::Projective, 2)
                .unwrap()
                .cones()
                .len(),
            7
        );
        assert_eq!(
            standard_fan(StandardFanKind::Affine, 2)
                .unwrap()
                .cones()
                .len(),
            4
        );
        assert_eq!(
            standard_fan(StandardFanKind::Torus, 3)
                .unwrap()
                .cones()
                .len(),
            1
        );
        assert_eq!(
            standard_fan(StandardFanKind::Projective, 0),
            Err(Error::BadRank(0))
        );
    }

    #[test]
    fn projective_plane_fan_is_valid_and_complete() {
        let fan = standard_fan(StandardFanKind::Projective, 2).unwrap();
        assert!(fan.is_valid());
        assert!(fan.is_complete());
        assert_eq!(fan.maximal_cones().len(), 3);
    }

    #[test]
    fn affine_and_torus_fans_are_not_complete() {
        assert!(!standard_fan(StandardFanKind::Affine, 1)
            .unwrap()
            .is_complete());
        assert!(!standard_fan(StandardFanKind::Affine, 2)
            .unwrap()
            .is_complete());
        assert!(!standard_fan(StandardFanKind::Torus, 2)
            .unwrap()
            .is_complete());
    }

    #[test]
    fn overlapping_cones_are_rejected() {
        // quadrant and the cone on (1,1),(1,0) overlap in a 2-dimensional
        // region but share only the ray (1,0)
        let a = cone(2, &[&[1, 0], &[0, 1]]);
        let b = cone(2, &[&[1, 1], &[1, 0]]);
        let fan = Fan::from_cones_unchecked(2, a.faces().into_iter().chain(b.faces()).collect());
        assert!(!fan.is_valid());
        assert!(Fan::from_maximal_cones(2, vec![a, b]).is_err());
    }

    #[test]
    fn missing_face_is_rejected() {
        let a = cone(2, &[&[1, 0], &[0, 1]]);
        let fan = Fan::from_cones_unchecked(2, vec![a, Cone::zero(2)]);
        assert!(!fan.is_valid());
    }

    #[test]
    fn crossing_planes_in_space_are_rejected() {
        // two 2-dimensional cones in rank 3 crossing in the ray (1,1,1),
        // which is a ray of neither; no ray of one lies inside the other
        let a = cone(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let b = cone(3, &[&[0, 1, 0], &[1, 0, 1]]);
        let fan = Fan::from_cones_unchecked(3, a.faces().into_iter().chain(b.faces()).collect());
        assert!(!fan.is_valid());
    }

    #[test]
    fn product_fan_counts() {
        let p1 = standard_fan(StandardFanKind::Projective, 1).unwrap();
        let p1xp1 = fan_product(&p1, &p1);
        assert_eq!(p1xp1.rank(), 2);
        assert_eq!(p1xp1.cones().len(), 9);
        assert!(p1xp1.is_valid());
        assert!(p1xp1.is_complete());
        assert_eq!(p1xp1.maximal_cones().len(), 4);
    }

    #[test]
    fn annihilator_bases() {
        assert_eq!(
            Cone::zero(2).annihilator_basis(),
            vec![lv(&[1, 0]), lv(&[0, 1])]
        );
        assert_eq!(cone(2, &[&[1, 2]]).annihilator_basis(), vec![lv(&[2, -1])]);
        assert!(cone(2, &[&[1, 0], &[0, 1]]).annihilator_basis().is_empty());
    }
}
