//! Brute-force point counts over prime fields, used as independent ground
//! truth for every closed-form count in the crate.
//!
//! Everything here enumerates; nothing reuses the polynomial machinery it
//! is meant to check.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fan::{dual_monoid, Cone, Fan};
use crate::zeta::CountPolynomial;

const PRIME_BOUND: u64 = 10_000;
const ENUMERATION_BUDGET: u128 = 10_000_000;

/// A prime field F_p with p checked by trial division.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > PRIME_BOUND {
            return Err(Error::TooLarge {
                size: u128::from(p),
                budget: u128::from(PRIME_BOUND),
            });
        }
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// a^e for a nonzero residue, with e any integer; the exponent is
    /// reduced modulo p - 1.
    fn pow_unit(self, a: u64, e: &BigInt) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        let mut e = e
            .mod_floor(&BigInt::from(self.p - 1))
            .to_u64()
            .expect("reduced exponent fits in u64");
        let mut base = a % self.p;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inverse(self, a: u64) -> u64 {
        self.pow_unit(a, &BigInt::from(-1))
    }
}

/// Number of F_p-points of the toric variety of a fan, by enumeration.
///
/// Each maximal cone contributes the monoid homomorphisms from its dual
/// monoid to (F_p, *): affine generators take any value, unit generators
/// any nonzero value. A homomorphism is keyed by the cone spanned by the
/// rays whose affine generator maps to zero together with the values of
/// the canonical annihilator basis of that cone, which identifies points
/// glued between charts.
pub fn toric_count_fq(f: &Fan, field: PrimeField) -> Result<u64> {
    let p = field.p();
    let mut seen: BTreeSet<(Cone, Vec<u64>)> = BTreeSet::new();
    for cone in f.maximal_cones() {
        let pres = dual_monoid(cone)?;
        let r = pres.affine_gens().len();
        let u = pres.unit_gens().len();
        let mut digits = vec![0u64; r + u];
        loop {
            // digit ranges: affine 0..p, unit 1..p
            let affine: Vec<u64> = digits[..r].to_vec();
            let unit: Vec<u64> = digits[r..].iter().map(|&d| d + 1).collect();
            let support_rays: Vec<_> = cone
                .rays()
                .iter()
                .zip(&affine)
                .filter(|(_, &v)| v == 0)
                .map(|(ray, _)| ray.clone())
                .collect();
            let support = Cone::new(cone.rank(), support_rays)
                .expect("subset of a regular cone's rays is a valid cone");
            let values: Vec<u64> = support
                .annihilator_basis()
                .iter()
                .map(|b| {
                    let (a, e) = pres.express(b);
                    let mut acc = 1;
                    for (coeff, &v) in a.iter().zip(&affine) {
                        if !coeff.is_zero() {
                            debug_assert!(v != 0, "annihilator characters avoid zero values");
                            acc = field.mul(acc, field.pow_unit(v, coeff));
                        }
                    }
                    for (coeff, &v) in e.iter().zip(&unit) {
                        acc = field.mul(acc, field.pow_unit(v, coeff));
                    }
                    acc
                })
                .collect();
            seen.insert((support, values));
            let mut pos = r + u;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                let radix = if pos < r { p } else { p - 1 };
                digits[pos] += 1;
                if digits[pos] < radix {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    Ok(seen.len() as u64)
}

/// Number of F_p-points of the quadric x y - z t + u v = 0 in P^5, by
/// enumeration of one representative per projective class (first nonzero
/// coordinate scaled to 1).
pub fn quadric_count_fq(field: PrimeField) -> Result<u64> {
    let p = field.p();
    let classes: u128 = (0..6).map(|i| u128::from(p).pow(i)).sum();
    if classes > ENUMERATION_BUDGET {
        return Err(Error::TooLarge {
            size: classes,
            budget: ENUMERATION_BUDGET,
        });
    }
    let mut count = 0u64;
    let mut coords = [0u64; 6];
    // leading index: first nonzero coordinate, normalized to 1
    for lead in 0..6 {
        for c in coords.iter_mut().take(lead) {
            *c = 0;
        }
        coords[lead] = 1;
        let free = 5 - lead;
        let mut digits = vec![0u64; free];
        loop {
            for (slot, &d) in digits.iter().enumerate() {
                coords[lead + 1 + slot] = d;
            }
            let [x, y, z, t, u, v] = coords;
            let lhs = (field.mul(x, y) + p - field.mul(z, t) + field.mul(u, v)) % p;
            if lhs == 0 {
                count += 1;
            }
            let mut pos = free;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    Ok(count)
}

/// Number of points of P^d(F_p) by orbit enumeration: all nonzero vectors
/// of F_p^{d+1}, deduplicated by scaling the first nonzero coordinate
/// to 1.
pub fn projective_count_fq(d: usize, field: PrimeField) -> Result<u64> {
    let p = field.p();
    let vectors = u128::from(p).pow(d as u32 + 1);
    if vectors > ENUMERATION_BUDGET {
        return Err(Error::TooLarge {
            size: vectors,
            budget: ENUMERATION_BUDGET,
        });
    }
    let mut reps: HashSet<Vec<u64>> = HashSet::new();
    let mut digits = vec![0u64; d + 1];
    loop {
        if let Some(lead) = digits.iter().position(|&c| c != 0) {
            let scale = field.inverse(digits[lead]);
            let rep: Vec<u64> = digits.iter().map(|&c| field.mul(c, scale)).collect();
            reps.insert(rep);
        }
        let mut pos = d + 1;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
        }
        if digits.iter().all(|&d| d == 0) {
            break;
        }
    }
    Ok(reps.len() as u64)
}

/// Check a counting polynomial against enumeration over several prime
/// fields; the first mismatch is reported with both values.
pub fn compare_counts(poly: &CountPolynomial, f: &Fan, primes: &[u64]) -> Result<()> {
    for &p in primes {
        let field = PrimeField::new(p)?;
        let enumerated = toric_count_fq(f, field)?;
        let closed_form = poly.eval(&BigInt::from(p));
        if closed_form != BigInt::from(enumerated) {
            return Err(Error::CountMismatch {
                modulus: p,
                closed_form,
                enumerated: BigInt::from(enumerated),
            });
        }
    }
    Ok(())
}
