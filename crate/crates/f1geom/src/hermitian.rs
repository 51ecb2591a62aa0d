//! Point counts of the varieties attached to a lattice with a positive
//! definite quadratic form.
//!
//! The data is the set Phi of short vectors (norm at most 1, one of each
//! antipodal pair). A point over the degree-n extension assigns a root of
//! unity or zero to each vector of Phi and is identified with the lattice
//! element it represents; the count is a polynomial in 2n + 1 computed
//! both by signed-sum combinatorics and by direct enumeration.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fan::LatticeVector;
use crate::linalg::{self, RatMat};
use crate::points::{mu_elements, CyclotomicIndex, MuElement};
use crate::zeta::{interpolate_rational_poly, zeta, RationalPolynomial, ZetaFunction};

const ORACLE_BUDGET: u128 = 1_000_000;

/// Exact symmetric positive definite form on Z^m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramForm {
    rank: usize,
    gram: RatMat,
}

impl GramForm {
    pub fn new(gram: RatMat) -> Result<Self> {
        let m = gram.len();
        if m == 0 || gram.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidGram(
                "matrix must be square and nonempty".into(),
            ));
        }
        for (i, row) in gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate().take(i) {
                if *entry != gram[j][i] {
                    return Err(Error::InvalidGram(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        // positive definiteness: every leading principal minor is positive
        for k in 1..=m {
            let sub: RatMat = gram[..k].iter().map(|row| row[..k].to_vec()).collect();
            if rational_det(&sub) <= BigRational::zero() {
                return Err(Error::InvalidGram(format!(
                    "leading {k}x{k} minor is not positive"
                )));
            }
        }
        Ok(GramForm { rank: m, gram })
    }

    pub fn from_i64(entries: &[&[i64]]) -> Result<Self> {
        GramForm::new(
            entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// v^T G v, exactly.
    pub fn norm(&self, v: &LatticeVector) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, vi) in v.coords().iter().enumerate() {
            for (j, vj) in v.coords().iter().enumerate() {
                acc += &self.gram[i][j] * BigRational::from_integer(vi * vj);
            }
        }
        acc
    }
}

fn rational_det(a: &RatMat) -> BigRational {
    // scale to an integer matrix; det(L a) = L^k det(a) with L > 0
    let mut lcm = BigInt::one();
    for row in a {
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
    }
    let scaled: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    let mut scale = BigRational::one();
    for _ in 0..a.len() {
        scale *= BigRational::from_integer(lcm.clone());
    }
    BigRational::from_integer(linalg::det(&scaled)) / scale
}

/// All nonzero lattice vectors of norm at most 1, found by exhaustive
/// search over the exact box |v_i| <= ceil(sqrt((G^{-1})_{ii})).
pub fn ball_points(g: &GramForm) -> Vec<LatticeVector> {
    let m = g.rank();
    let inv = linalg::invert_rational(&g.gram).expect("positive definite forms are invertible");
    let bounds: Vec<i64> = (0..m)
        .map(|i| {
            let r = inv[i][i].clone();
            // smallest b with b^2 >= r
            let mut b = r.ceil().to_integer().sqrt();
            while BigRational::from_integer(&b * &b) < r {
                b += 1;
            }
            b.to_i64().expect("box bound fits in i64")
        })
        .collect();
    let mut out = Vec::new();
    let mut digits = vec![0i64; m];
    for (d, b) in digits.iter_mut().zip(&bounds) {
        *d = -b;
    }
    loop {
        let v = LatticeVector::new(digits.iter().map(|&x| BigInt::from(x)).collect());
        if !v.is_zero() && g.norm(&v) <= BigRational::one() {
            out.push(v);
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                out.sort();
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] <= bounds[pos] {
                break;
            }
            digits[pos] = -bounds[pos];
        }
    }
}

/// A finite antipodal-free system of distinct nonzero integer vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhiSystem {
    rank: usize,
    vectors: Vec<LatticeVector>,
}

impl PhiSystem {
    pub fn new(rank: usize, mut vectors: Vec<LatticeVector>) -> Result<Self> {
        vectors.sort();
        for v in &vectors {
            if v.len() != rank {
                return Err(Error::InvalidPhi(format!(
                    "vector {v} has length {} in rank {rank}",
                    v.len()
                )));
            }
            if v.is_zero() {
                return Err(Error::InvalidPhi("zero vector not allowed".into()));
            }
        }
        for w in vectors.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidPhi(format!("duplicate vector {}", w[0])));
            }
        }
        let set: BTreeSet<&LatticeVector> = vectors.iter().collect();
        for v in &vectors {
            if set.contains(&v.negated()) {
                return Err(Error::InvalidPhi(format!(
                    "antipodal pair {v} and {}",
                    v.negated()
                )));
            }
        }
        Ok(PhiSystem { rank, vectors })
    }

    /// The numbers 1..t on the line, the system behind the rank-1 zeta
    /// family.
    pub fn segment(t: u32) -> Self {
        let vectors = (1..=i64::from(t))
            .map(|k| LatticeVector::from_i64(&[k]))
            .collect();
        PhiSystem { rank: 1, vectors }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn t(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[LatticeVector] {
        &self.vectors
    }
}

/// Keep one vector of each antipodal pair: the one whose first nonzero
/// coordinate is positive.
pub fn choose_phi(rank: usize, points: &[LatticeVector]) -> Result<PhiSystem> {
    let chosen: Vec<LatticeVector> = points
        .iter()
        .filter(|v| {
            v.coords()
                .iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.is_positive())
        })
        .cloned()
        .collect();
    PhiSystem::new(rank, chosen)
}

/// Short-vector system of a form: ball points, one per antipodal pair.
pub fn from_gram(g: &GramForm) -> Result<PhiSystem> {
    choose_phi(g.rank(), &ball_points(g))
}

/// V(Phi'): the nonzero values of sum epsilon_v v over all sign patterns
/// epsilon: Phi' -> {+1, -1}.
pub fn signed_sums(phi_subset: &[LatticeVector]) -> BTreeSet<LatticeVector> {
    let mut out = BTreeSet::new();
    if phi_subset.is_empty() {
        return out;
    }
    let rank = phi_subset[0].len();
    for mask in 0u32..1 << phi_subset.len() {
        let mut acc = vec![BigInt::zero(); rank];
        for (i, v) in phi_subset.iter().enumerate() {
            let sign = if mask >> i & 1 == 1 { -1 } else { 1 };
            for (a, c) in acc.iter_mut().zip(v.coords()) {
                *a += c * BigInt::from(sign);
            }
        }
        let v = LatticeVector::new(acc);
        if !v.is_zero() {
            out.insert(v);
        }
    }
    out
}

/// #T(k): the number of distinct ordered k-tuples of nonzero vectors
/// (v_1, .., v_k) with v_j a signed sum of a block Phi_j, over all
/// partitions of a subset of Phi into disjoint blocks Phi_1, .., Phi_k.
///
/// Enumerated by assigning each vector of Phi independently to unused or
/// to a (slot, sign) pair and collecting the distinct tuples of slot sums
/// in which every slot is nonzero.
pub fn tuple_count(phi: &PhiSystem, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    if k > phi.t() {
        return 0;
    }
    let rank = phi.rank();
    let choices = 2 * k + 1;
    let mut tuples: HashSet<Vec<BigInt>> = HashSet::new();
    let mut digits = vec![0usize; phi.t()];
    loop {
        let mut sums = vec![BigInt::zero(); k * rank];
        for (v, &d) in phi.vectors().iter().zip(&digits) {
            if d > 0 {
                let slot = (d - 1) / 2;
                let sign = if d & 1 == 1 { 1 } else { -1 };
                for (i, c) in v.coords().iter().enumerate() {
                    sums[slot * rank + i] += c * BigInt::from(sign);
                }
            }
        }
        let all_nonzero = (0..k).all(|slot| {
            sums[slot * rank..(slot + 1) * rank]
                .iter()
                .any(|c| !c.is_zero())
        });
        if all_nonzero {
            tuples.insert(sums);
        }
        let mut pos = phi.t();
        loop {
            if pos == 0 {
                return tuples.len() as u64;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < choices {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Point count over the degree-n extension by the tuple formula:
/// 1 + sum_{k=1}^{t} #T(k) C(n, k).
pub fn count_points_formula(phi: &PhiSystem, n: CyclotomicIndex) -> BigInt {
    let mut acc = BigInt::one();
    for k in 1..=phi.t() {
        let tk = BigInt::from(tuple_count(phi, k));
        acc += tk * binomial(BigInt::from(n.get()), BigInt::from(k as u32));
    }
    acc
}

/// Point count over the degree-n extension by direct enumeration: every
/// assignment of mu union {0} to the vectors of Phi determines an m x n
/// coefficient array, and distinct arrays are distinct points.
pub fn count_points_oracle(phi: &PhiSystem, n: CyclotomicIndex) -> Result<BigInt> {
    let assignments = u128::from(2 * n.get() + 1).pow(phi.t() as u32);
    if assignments > ORACLE_BUDGET {
        return Err(Error::TooLarge {
            size: assignments,
            budget: ORACLE_BUDGET,
        });
    }
    let m = phi.rank();
    let cols = n.get() as usize;
    let mus = mu_elements(n);
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut digits = vec![0usize; phi.t()];
    loop {
        let mut array = vec![BigInt::zero(); m * cols];
        for (v, &d) in phi.vectors().iter().zip(&digits) {
            if d > 0 {
                let mu: MuElement = mus[d - 1];
                let col = mu.exponent() as usize;
                let sign = match mu.sign() {
                    crate::points::Sign::Plus => 1,
                    crate::points::Sign::Minus => -1,
                };
                for (i, c) in v.coords().iter().enumerate() {
                    array[i * cols + col] += c * BigInt::from(sign);
                }
            }
        }
        seen.insert(array);
        let mut pos = phi.t();
        loop {
            if pos == 0 {
                return Ok(BigInt::from(seen.len()));
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < mus.len() + 1 {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Counting polynomial in x = 2n + 1, recovered exactly from the formula
/// counts at n = 1..t+1.
///
/// The result is always monic of degree t with N(1) = 1, but its
/// coefficients are not integers in general: from t = 3 on, two disjoint
/// blocks of Phi can produce the same signed sum (in {1, 2, 3} both {1}
/// and {2, 3} sum to 1), the tuple counts then miss the k! divisibility,
/// and the exact polynomial picks up half-integer coefficients.
pub fn count_poly(phi: &PhiSystem) -> Result<RationalPolynomial> {
    let t = phi.t();
    let samples: Vec<(BigInt, BigInt)> = (1..=t as u32 + 1)
        .map(|n| {
            let idx = CyclotomicIndex::new(n).expect("n >= 1");
            (BigInt::from(2 * n + 1), count_points_formula(phi, idx))
        })
        .collect();
    interpolate_rational_poly(&samples, t)
}

/// The zeta function of the system {1, .., t} on the line.
///
/// The factorization prod (s - i)^{a_i} needs integer exponents, so this
/// exists only while the counting polynomial has integer coefficients:
/// t <= 2. Larger t up to 6 reports the fractional coefficient instead
/// of inventing a value.
pub fn zeta_rank1(t: u32) -> Result<ZetaFunction> {
    if t > 6 {
        return Err(Error::BadIndex(format!(
            "rank-1 zeta is tabulated for t <= 6, got {t}"
        )));
    }
    let poly = count_poly(&PhiSystem::segment(t))?;
    Ok(zeta(&poly.to_count_poly()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::CountPolynomial;

    fn lv(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    fn idx(n: u32) -> CyclotomicIndex {
        CyclotomicIndex::new(n).unwrap()
    }

    #[test]
    fn gram_validation() {
        assert!(GramForm::from_i64(&[&[1, 0], &[0, 1]]).is_ok());
        assert!(matches!(
            GramForm::from_i64(&[&[1, 2], &[0, 1]]),
            Err(Error::InvalidGram(_))
        ));
        assert!(matches!(
            GramForm::from_i64(&[&[0, 0], &[0, 1]]),
            Err(Error::InvalidGram(_))
        ));
        assert!(matches!(
            GramForm::from_i64(&[&[1, 2], &[2, 1]]),
            Err(Error::InvalidGram(_))
        ));
    }

    #[test]
    fn ball_points_examples() {
        // norm v^2 / 4: vectors with |v| <= 2
        let quarter =
            GramForm::new(vec![vec![BigRational::new(BigInt::one(), BigInt::from(4))]]).unwrap();
        assert_eq!(
            ball_points(&quarter),
            vec![lv(&[-2]), lv(&[-1]), lv(&[1]), lv(&[2])]
        );
        let four = GramForm::from_i64(&[&[4]]).unwrap();
        assert!(ball_points(&four).is_empty());
        let id2 = GramForm::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(
            ball_points(&id2),
            vec![lv(&[-1, 0]), lv(&[0, -1]), lv(&[0, 1]), lv(&[1, 0])]
        );
    }

    #[test]
    fn choose_phi_examples() {
        let phi = choose_phi(1, &[lv(&[-2]), lv(&[-1]), lv(&[1]), lv(&[2])]).unwrap();
        assert_eq!(phi.vectors(), &[lv(&[1]), lv(&[2])]);
        assert_eq!(phi.t(), 2);
        assert_eq!(choose_phi(1, &[]).unwrap().t(), 0);
        let phi = choose_phi(2, &[lv(&[-1, 0]), lv(&[0, -1]), lv(&[0, 1]), lv(&[1, 0])]).unwrap();
        assert_eq!(phi.vectors(), &[lv(&[0, 1]), lv(&[1, 0])]);
    }

    #[test]
    fn from_gram_respects_the_norm() {
        let id2 = GramForm::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(from_gram(&id2).unwrap().t(), 2);
        let four = GramForm::from_i64(&[&[4]]).unwrap();
        assert_eq!(from_gram(&four).unwrap().t(), 0);
    }

    #[test]
    fn phi_system_validation() {
        assert!(matches!(
            PhiSystem::new(1, vec![lv(&[1]), lv(&[-1])]),
            Err(Error::InvalidPhi(_))
        ));
        assert!(matches!(
            PhiSystem::new(1, vec![lv(&[0])]),
            Err(Error::InvalidPhi(_))
        ));
        assert!(matches!(
            PhiSystem::new(2, vec![lv(&[1])]),
            Err(Error::InvalidPhi(_))
        ));
        assert!(matches!(
            PhiSystem::new(1, vec![lv(&[1]), lv(&[1])]),
            Err(Error::InvalidPhi(_))
        ));
    }

    #[test]
    fn signed_sum_examples() {
        let sums = signed_sums(&[lv(&[1])]);
        assert_eq!(sums, BTreeSet::from([lv(&[-1]), lv(&[1])]));
        let sums = signed_sums(&[lv(&[1]), lv(&[2])]);
        assert_eq!(
            sums,
            BTreeSet::from([lv(&[-3]), lv(&[-1]), lv(&[1]), lv(&[3])])
        );
        assert!(signed_sums(&[]).is_empty());
        // cancelling pattern drops out: {1, 2, 3} with +1 +2 -3 = 0
        let sums = signed_sums(&[lv(&[1]), lv(&[2]), lv(&[3])]);
        assert_eq!(sums.len(), 6);
    }

    #[test]
    fn tuple_count_examples() {
        let phi = PhiSystem::segment(2);
        assert_eq!(tuple_count(&phi, 0), 1);
        assert_eq!(tuple_count(&phi, 1), 6);
        assert_eq!(tuple_count(&phi, 2), 8);
        assert_eq!(tuple_count(&phi, 3), 0);
    }

    #[test]
    fn tuple_counts_divisible_by_2_to_k() {
        for phi in [
            PhiSystem::segment(3),
            PhiSystem::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])]).unwrap(),
        ] {
            for k in 1..=phi.t() {
                let tk = tuple_count(&phi, k);
                assert_eq!(tk % (1 << k), 0, "T({k}) = {tk} not divisible");
            }
        }
    }

    #[test]
    fn formula_count_examples() {
        assert_eq!(
            count_points_formula(&PhiSystem::segment(2), idx(1)),
            BigInt::from(7)
        );
        assert_eq!(
            count_points_formula(&PhiSystem::segment(1), idx(2)),
            BigInt::from(5)
        );
        assert_eq!(
            count_points_formula(&PhiSystem::segment(0), idx(4)),
            BigInt::one()
        );
    }

    #[test]
    fn oracle_count_examples() {
        assert_eq!(
            count_points_oracle(&PhiSystem::segment(2), idx(1)).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            count_points_oracle(&PhiSystem::segment(1), idx(3)).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            count_points_oracle(&PhiSystem::segment(0), idx(5)).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn oracle_budget_is_enforced() {
        let phi = PhiSystem::segment(6);
        assert!(matches!(
            count_points_oracle(&phi, idx(20)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn formula_matches_oracle_on_small_systems() {
        let systems = [
            PhiSystem::segment(1),
            PhiSystem::segment(2),
            PhiSystem::segment(3),
            PhiSystem::new(2, vec![lv(&[1, 0]), lv(&[0, 1])]).unwrap(),
            PhiSystem::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])]).unwrap(),
        ];
        for phi in &systems {
            for n in 1..=3 {
                let n = idx(n);
                assert_eq!(
                    count_points_formula(phi, n),
                    count_points_oracle(phi, n).unwrap(),
                    "phi = {:?}, n = {n}",
                    phi.vectors()
                );
            }
        }
    }

    #[test]
    fn counts_do_not_depend_on_antipodal_choice() {
        let phi = PhiSystem::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])]).unwrap();
        let flipped = PhiSystem::new(2, vec![lv(&[-1, 0]), lv(&[0, 1]), lv(&[1, 1])]).unwrap();
        for n in 1..=2 {
            let n = idx(n);
            assert_eq!(
                count_points_oracle(&phi, n).unwrap(),
                count_points_oracle(&flipped, n).unwrap()
            );
        }
    }

    #[test]
    fn count_poly_examples() {
        assert_eq!(
            count_poly(&PhiSystem::segment(2))
                .unwrap()
                .to_count_poly()
                .unwrap(),
            CountPolynomial::from_i64(&[1, -1, 1])
        );
        assert_eq!(
            count_poly(&PhiSystem::segment(1))
                .unwrap()
                .to_count_poly()
                .unwrap(),
            CountPolynomial::from_i64(&[0, 1])
        );
        assert_eq!(
            count_poly(&PhiSystem::segment(0))
                .unwrap()
                .to_count_poly()
                .unwrap(),
            CountPolynomial::one()
        );
    }

    #[test]
    fn count_poly_turns_fractional_at_t_three() {
        // frozen from exhaustive enumeration: counts 13, 77, 241, 553 at
        // n = 1..4 interpolate to x^3 - 5/2 x^2 + 3x - 1/2
        let poly = count_poly(&PhiSystem::segment(3)).unwrap();
        let expected = RationalPolynomial::new(vec![
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            BigRational::from_integer(BigInt::from(3)),
            BigRational::new(BigInt::from(-5), BigInt::from(2)),
            BigRational::one(),
        ]);
        assert_eq!(poly, expected);
        assert!(!poly.is_integral());
        assert_eq!(poly.to_count_poly(), Err(Error::NonIntegralCoefficient));
    }

    #[test]
    fn count_poly_shape() {
        for t in 0..=4u32 {
            let poly = count_poly(&PhiSystem::segment(t)).unwrap();
            assert_eq!(poly.degree(), Some(t as usize));
            assert!(poly.coeffs().last().unwrap().is_one());
            assert_eq!(
                poly.eval(&BigRational::one()),
                BigRational::one(),
                "N(1) at t = {t}"
            );
        }
    }

    #[test]
    fn rank1_zeta_family() {
        assert_eq!(zeta_rank1(0).unwrap().to_string(), "s");
        assert_eq!(zeta_rank1(1).unwrap().to_string(), "s - 1");
        let z2 = zeta_rank1(2).unwrap();
        assert_eq!(
            z2.factors(),
            &[
                (0, BigInt::one()),
                (1, BigInt::from(-1)),
                (2, BigInt::one())
            ]
        );
        assert_eq!(zeta_rank1(3), Err(Error::NonIntegralCoefficient));
        assert!(matches!(zeta_rank1(7), Err(Error::BadIndex(_))));
    }
}
