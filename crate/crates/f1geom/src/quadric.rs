//! The quadric hypersurface x y - z t + u v = 0 in P^5 and its cell
//! decomposition.
//!
//! Slicing by the vanishing pattern of x, z, u cuts the quadric into four
//! strata isomorphic to A^4, A^3, A^2, and P^2, so counts over any
//! coefficient system are sums of the four stratum counts.

use num_bigint::BigInt;

use crate::error::Result;
use crate::fan::{standard_fan, StandardFanKind};
use crate::oracle::PrimeField;
use crate::points::{glued_points, CyclotomicIndex};
use crate::zeta::CountPolynomial;

/// One locally closed piece of the quadric with its counting polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stratum {
    pub name: &'static str,
    pub condition: &'static str,
    pub count_poly: CountPolynomial,
}

/// The four strata in sweep order of the coordinates x, z, u.
pub fn strata() -> [Stratum; 4] {
    [
        Stratum {
            name: "S1",
            condition: "x != 0 (an affine 4-space)",
            count_poly: CountPolynomial::monomial(4),
        },
        Stratum {
            name: "S2",
            condition: "x = 0, z != 0 (an affine 3-space)",
            count_poly: CountPolynomial::monomial(3),
        },
        Stratum {
            name: "S3",
            condition: "x = z = 0, u != 0 (an affine plane)",
            count_poly: CountPolynomial::monomial(2),
        },
        Stratum {
            name: "S4",
            condition: "x = z = u = 0 (a projective plane)",
            count_poly: CountPolynomial::from_i64(&[1, 1, 1]),
        },
    ]
}

/// Counting polynomial of the whole quadric: the sum over strata,
/// x^4 + x^3 + 2 x^2 + x + 1.
pub fn quadric_count_poly() -> CountPolynomial {
    strata()
        .iter()
        .fold(CountPolynomial::zero(), |acc, s| acc.add(&s.count_poly))
}

/// Point count over the degree-n extension: the counting polynomial at
/// x = 2n + 1.
pub fn quadric_f1_count(n: CyclotomicIndex) -> BigInt {
    quadric_count_poly().eval(&BigInt::from(2 * n.get() + 1))
}

/// Stratum-by-stratum counts over the degree-n extension. The three
/// affine strata are free coordinate assignments; the projective stratum
/// is counted by actually gluing the charts of the plane, not by its
/// polynomial.
pub fn quadric_f1_strata_counts(n: CyclotomicIndex) -> Result<[BigInt; 4]> {
    let x = BigInt::from(2 * n.get() + 1);
    let plane = standard_fan(StandardFanKind::Projective, 2)?;
    let plane_count = BigInt::from(glued_points(&plane, n)?.len());
    Ok([x.pow(4), x.pow(3), x.pow(2), plane_count])
}

/// Stratum-by-stratum counts over F_p by enumeration of projective
/// representatives, classifying each solution of x y - z t + u v = 0 by
/// the vanishing pattern of (x, z, u).
pub fn stratum_counts_fq(field: PrimeField) -> [u64; 4] {
    let p = field.p();
    let mut counts = [0u64; 4];
    let mut coords = [0u64; 6];
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
            let lhs = (x * y % p + p - z * t % p + u * v % p) % p;
            if lhs == 0 {
                let stratum = if x != 0 {
                    0
                } else if z != 0 {
                    1
                } else if u != 0 {
                    2
                } else {
                    3
                };
                counts[stratum] += 1;
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
    counts
}
