//! Bernoulli numbers and the image-of-J orders w_i, computed two
//! independent ways: as denominators of b_i / 2i and as gcds of the
//! numbers n^j (n^i - 1).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The i-th Bernoulli number (b_1 = -1/2 convention), by the exact
/// recurrence sum_{j=0}^{m} C(m+1, j) b_j = 0.
pub fn bernoulli(i: u32) -> BigRational {
    let mut b: Vec<BigRational> = Vec::with_capacity(i as usize + 1);
    for m in 0..=i as usize {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        // C(m+1, j) column by column via the multiplicative recurrence
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            // C(m+1, j+1) = C(m+1, j) (m+1-j) / (j+1)
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b.pop().expect("loop pushes i + 1 entries")
}

/// w_i as the denominator of b_i / 2i in lowest terms.
pub fn w_bernoulli(i: u32) -> Result<BigInt> {
    if i < 2 || !i.is_multiple_of(2) {
        return Err(Error::BadIndex(format!(
            "w is defined for even i >= 2, got {i}"
        )));
    }
    let ratio = bernoulli(i) / BigRational::from_integer(BigInt::from(2 * i));
    Ok(ratio.denom().clone())
}

/// w_i as the gcd of n^j (n^i - 1) over n = 2..nmax.
pub fn w_gcd(i: u32, j: u32, nmax: u32) -> Result<BigInt> {
    if i < 2 || !i.is_multiple_of(2) {
        return Err(Error::BadIndex(format!(
            "w is defined for even i >= 2, got {i}"
        )));
    }
    if j < 1 {
        return Err(Error::BadIndex("j must be >= 1".into()));
    }
    if nmax < 3 {
        return Err(Error::BadIndex(format!(
            "need nmax >= 3 to see more than one term, got {nmax}"
        )));
    }
    let mut g = BigInt::zero();
    for n in 2..=nmax {
        let n = BigInt::from(n);
        let term = n.pow(j) * (n.pow(i) - BigInt::one());
        g = g.gcd(&term);
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// The gcd form of w_i with j raised from i + 8 until the value repeats,
/// j capped at 40. Returns the stable value and the last j used.
pub fn w_gcd_stable(i: u32, nmax: u32) -> Result<(BigInt, u32)> {
    let mut j = i + 8;
    let mut g = w_gcd(i, j, nmax)?;
    while j < 40 {
        let next = w_gcd(i, j + 1, nmax)?;
        if next == g {
            return Ok((g, j + 1));
        }
        j += 1;
        g = next;
    }
    Ok((g, j))
}
