//! Exact polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending degree. The zero polynomial is
//! represented as a single zero coefficient, so the leading coefficient of a
//! nonzero polynomial is always nonzero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from ascending-degree coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree of a nonzero polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("coeffs never empty")
    }

    /// Coefficient of z^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by z^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// Remove all factors of z; returns (reduced polynomial, multiplicity of the root 0).
    pub fn deflate_zero_root(&self) -> (Self, usize) {
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        let s = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a nonzero coefficient");
        (Self::new(self.coeffs[s..].to_vec()), s)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Sign of p(a/b) computed without leaving the integers:
    /// sign(sum c_k a^k b^(d-k)) for b > 0.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let a = x.numer();
        let b = x.denom();
        debug_assert!(b.is_positive());
        let d = self.degree();
        let mut acc = BigInt::zero();
        let mut apow = BigInt::one();
        // b^(d-k) built by a second pass from the top
        let mut terms: Vec<BigInt> = Vec::with_capacity(d + 1);
        for c in &self.coeffs {
            terms.push(c * &apow);
            apow *= a;
        }
        let mut bpow = BigInt::one();
        for k in (0..=d).rev() {
            acc += &terms[k] * &bpow;
            bpow *= b;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Content (gcd of coefficients), always nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        if g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division; returns None when `other` does not divide `self` in Z[z].
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let lead = BigRational::from(other.leading().clone());
        let dq = self.degree() - other.degree();
        let mut q = vec![BigRational::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + other.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let f = top / &lead;
            for (j, oc) in other.coeffs.iter().enumerate() {
                let t = &f * BigRational::from(oc.clone());
                rem[k + j] -= t;
            }
            q[k] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(Self::new(out))
    }

    /// Pseudo-remainder scaled by a positive constant, so its sign agrees with
    /// the true remainder of self / other at every evaluation point.
    pub fn signed_pseudo_rem(&self, other: &Self) -> Self {
        assert!(!other.is_zero());
        let mut r = self.clone();
        let lead = other.leading().clone();
        let mut negations = 0usize;
        while !r.is_zero() && r.degree() >= other.degree() {
            let delta = r.degree() - other.degree();
            let r_lead = r.leading().clone();
            // lead * r - r_lead * z^delta * other cancels the top term
            r = r.scale(&lead).sub(&other.shift_up(delta).scale(&r_lead));
            if lead.is_negative() {
                negations += 1;
            }
        }
        if negations % 2 == 1 {
            r = r.neg();
        }
        r
    }

    /// Primitive gcd in Z[z] with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return normalize_sign(b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        normalize_sign(a)
    }

    /// Square-free part self / gcd(self, self').
    pub fn square_free(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides the primitive part")
    }

    /// Coefficients as decimal strings, ascending degree (the wire format).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(strs: &[String]) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(strs.len());
        for (k, s) in strs.iter().enumerate() {
            let c: BigInt = s.parse().map_err(|_| Error::BadToken {
                line: 1,
                col: k + 1,
                token: s.clone(),
            })?;
            coeffs.push(c);
        }
        if coeffs.is_empty() {
            return Ok(Self::zero());
        }
        Ok(Self::new(coeffs))
    }
}

fn normalize_sign(p: IntPolynomial) -> IntPolynomial {
    if p.leading().is_negative() {
        p.neg()
    } else {
        p
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(de)?;
        IntPolynomial::from_decimal_strings(&strs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), 1);
        assert!(p(&[0, 0]).is_zero());
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn arithmetic_basics() {
        // (z - 1)(z + 1) = z^2 - 1
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(a.add(&b), p(&[0, 2]));
        assert_eq!(p(&[-1, 0, 1]).derivative(), p(&[0, 2]));
    }

    #[test]
    fn eval_and_sign() {
        let q = p(&[0, 4, 0, -5, 0, 1]); // z^5 - 5z^3 + 4z
        assert_eq!(q.eval_int(&BigInt::from(2)), BigInt::zero());
        let x = BigRational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(q.sign_at(&x), -1);
        assert_eq!(
            q.eval_rational(&x),
            BigRational::new(BigInt::from(-105), BigInt::from(32))
        );
    }

    #[test]
    fn exact_division_and_gcd() {
        let prod = p(&[-1, 0, 1]).mul(&p(&[-4, 0, 1])); // (z^2-1)(z^2-4)
        assert_eq!(prod.div_exact(&p(&[-1, 0, 1])).unwrap(), p(&[-4, 0, 1]));
        assert!(prod.div_exact(&p(&[3, 1])).is_none());
        assert!(prod.div_exact(&p(&[1, 1, 1])).is_none());

        let a = p(&[-1, 0, 1]).mul(&p(&[2, 1]));
        let b = p(&[2, 1]).mul(&p(&[5, 1]));
        assert_eq!(a.gcd(&b), p(&[2, 1]));
    }

    #[test]
    fn square_free_strips_multiplicity() {
        let sq = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[3, 1]));
        let sf = sq.square_free();
        assert_eq!(sf, p(&[-1, 1]).mul(&p(&[3, 1])));
    }

    #[test]
    fn decimal_round_trip() {
        let q = p(&[0, 4, 0, -5, 0, 1]);
        let s = q.to_decimal_strings();
        assert_eq!(s, vec!["0", "4", "0", "-5", "0", "1"]);
        assert_eq!(IntPolynomial::from_decimal_strings(&s).unwrap(), q);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[0, 4, 0, -5, 0, 1]).to_string(), "z^5 - 5z^3 + 4z");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "z^2 - 1");
    }
}
