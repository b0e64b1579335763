//! Certified isolation of the largest real root of an integer polynomial.
//!
//! Bisection is driven by Sturm-chain root counting over exact rationals, so
//! the returned bracket is a certificate: the largest real root lies inside
//! it, and multiple roots (which defeat naive sign-change bisection) are
//! handled by working with the square-free part.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Default bracket width for root isolation.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// The largest real root of a polynomial, with a certified enclosure.
#[derive(Debug, Clone)]
pub struct RootResult {
    value: f64,
    bracket: (BigRational, BigRational),
    tolerance: f64,
}

impl RootResult {
    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn bracket(&self) -> (&BigRational, &BigRational) {
        (&self.bracket.0, &self.bracket.1)
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn width(&self) -> BigRational {
        &self.bracket.1 - &self.bracket.0
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.bracket.0 <= x && x <= &self.bracket.1
    }

    /// Square both endpoints (valid for nonnegative brackets); encloses value^2.
    pub fn squared_bracket(&self) -> (BigRational, BigRational) {
        (
            &self.bracket.0 * &self.bracket.0,
            &self.bracket.1 * &self.bracket.1,
        )
    }
}

struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    fn new(p: &IntPolynomial) -> Self {
        let mut polys = vec![p.primitive(), p.derivative().primitive()];
        loop {
            let n = polys.len();
            if polys[n - 1].is_zero() {
                polys.pop();
                break;
            }
            if polys[n - 1].degree() == 0 {
                break;
            }
            let r = polys[n - 2].signed_pseudo_rem(&polys[n - 1]).primitive();
            polys.push(r.neg());
        }
        SturmChain { polys }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for q in &self.polys {
            let s = q.sign_at(x);
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Number of distinct real roots in (a, b]; requires p(a) != 0.
    fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }
}

/// Cauchy bound: every root z satisfies |z| < 1 + max |c_i| / |c_lead|.
fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().abs();
    let mut max = BigInt::zero();
    for c in &p.coeffs()[..p.degree()] {
        let a = c.abs();
        if a > max {
            max = a;
        }
    }
    BigRational::one() + BigRational::new(max, lead)
}

/// Isolate the largest real root of `p` to a bracket of width <= `tolerance`.
///
/// Factors of z are deflated first. If the deflated part has no root in
/// (0, bound] the root 0 is reported when present, otherwise the polynomial
/// has no nonnegative root at all and `NoPositiveRoot` is signalled.
pub fn largest_root(p: &IntPolynomial, tolerance: f64) -> Result<RootResult> {
    assert!(tolerance > 0.0, "tolerance must be positive");
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (q, zero_mult) = p.deflate_zero_root();
    if q.degree() == 0 {
        if zero_mult > 0 {
            return Ok(exact_root(BigRational::zero(), tolerance));
        }
        return Err(Error::NoPositiveRoot);
    }

    let sf = q.square_free();
    let chain = SturmChain::new(&sf);
    let bound = cauchy_bound(&sf);
    let zero = BigRational::zero();
    if chain.count_in(&zero, &bound) == 0 {
        if zero_mult > 0 {
            return Ok(exact_root(BigRational::zero(), tolerance));
        }
        return Err(Error::NoPositiveRoot);
    }

    let tol = BigRational::from_float(tolerance).expect("finite tolerance");
    let mut lo = zero;
    let mut hi = bound.clone();
    let two = BigRational::from(BigInt::from(2));
    // invariant: sf(lo) != 0 and the largest root lies in (lo, hi]
    while (&hi - &lo) > tol {
        let mid = (&lo + &hi) / &two;
        if sf.sign_at(&mid) == 0 {
            // mid is a root; the largest one iff nothing remains above it
            let above = sf
                .div_exact(&linear_factor(&mid))
                .expect("exact rational root divides");
            if above.degree() == 0 || SturmChain::new(&above).count_in(&mid, &bound) == 0 {
                return Ok(exact_root(mid, tolerance));
            }
            lo = mid;
        } else if chain.count_in(&mid, &bound) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mid = (&lo + &hi) / &two;
    Ok(RootResult {
        value: rational_to_f64(&mid),
        bracket: (lo, hi),
        tolerance,
    })
}

/// z - r cleared of denominators: denom(r) * z - numer(r).
fn linear_factor(r: &BigRational) -> IntPolynomial {
    IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()])
}

fn exact_root(r: BigRational, tolerance: f64) -> RootResult {
    RootResult {
        value: rational_to_f64(&r),
        bracket: (r.clone(), r),
        tolerance,
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back on a scaled division when numerator/denominator overflow f64
        let nbits = r.numer().bits() as i64;
        let dbits = r.denom().bits() as i64;
        let shift = (nbits.max(dbits) - 500).max(0) as u64;
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::MAX);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    fn root_of(cs: &[i64]) -> f64 {
        largest_root(&p(cs), 1e-12).unwrap().value()
    }

    #[test]
    fn simple_roots() {
        assert!((root_of(&[-1, 0, 1]) - 1.0).abs() < 1e-12); // z^2 - 1
        assert!((root_of(&[0, 4, 0, -5, 0, 1]) - 2.0).abs() < 1e-12); // z(z^2-1)(z^2-4)
        assert!((root_of(&[-2, 0, 1]) - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn repeated_largest_root_is_found() {
        // (z^2 - 2)^2 has sqrt(2) with multiplicity 2: no sign change there
        let q = p(&[-2, 0, 1]).mul(&p(&[-2, 0, 1]));
        let r = largest_root(&q, 1e-12).unwrap();
        assert!((r.value() - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn zero_root_only() {
        let r = largest_root(&p(&[0, 0, 0, 1]), 1e-12).unwrap(); // z^3
        assert_eq!(r.value(), 0.0);
        assert_eq!(r.width(), BigRational::zero());
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            largest_root(&IntPolynomial::zero(), 1e-9),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            largest_root(&p(&[1, 1]), 1e-9), // root -1
            Err(Error::NoPositiveRoot)
        ));
        assert!(matches!(
            largest_root(&p(&[1, 0, 1]), 1e-9), // no real roots
            Err(Error::NoPositiveRoot)
        ));
        assert!(matches!(
            largest_root(&p(&[5]), 1e-9),
            Err(Error::NoPositiveRoot)
        ));
    }

    #[test]
    fn bracket_certifies_the_root() {
        let q = p(&[-1, -1, 0, 0, 0, 1]); // z^5 - z - 1, root ~1.1673
        let r = largest_root(&q, 1e-10).unwrap();
        let (lo, hi) = r.bracket();
        assert!(q.sign_at(lo) != q.sign_at(hi) || q.sign_at(lo) == 0 || q.sign_at(hi) == 0);
        assert!(r.width() <= BigRational::from_float(1e-10).unwrap());
        assert!((r.value() - 1.167303978261419).abs() < 1e-9);
    }

    #[test]
    fn exact_rational_root_hit_by_bisection() {
        // root exactly at 3/2 can be hit by a dyadic midpoint
        let q = p(&[-3, 2]).mul(&p(&[-1, 1])); // (2z-3)(z-1)
        let r = largest_root(&q, 1e-12).unwrap();
        assert!((r.value() - 1.5).abs() < 1e-12);
    }
}
