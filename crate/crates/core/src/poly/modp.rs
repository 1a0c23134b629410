use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::primes::is_prime_u64;

/// Multiply two residues mod p without overflow; p < 2^63 so the product
/// fits in u128.
#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}

#[inline]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b { a - b } else { a + p - b }
}

pub fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue mod prime p (Fermat).
pub fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

/// Univariate polynomial over F_p, p prime, coefficients ascending and
/// canonical (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPPolynomial {
    /// Reduce an integer polynomial mod p. Rejects composite or zero p.
    pub fn reduce(f: &IntPolynomial, p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let pb = num_bigint::BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                // r is in [0, p), fits u64.
                let (_, digits) = r.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        Ok(ModPPolynomial::new(p, coeffs))
    }

    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPPolynomial { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPPolynomial { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPPolynomial { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        ModPPolynomial { p, coeffs: vec![0, 1] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        ModPPolynomial::new(p, vec![c])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| addmod(self.coeff(k), other.coeff(k), self.p)).collect();
        ModPPolynomial::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| submod(self.coeff(k), other.coeff(k), self.p)).collect();
        ModPPolynomial::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return ModPPolynomial::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = addmod(coeffs[i + j], mulmod(a, b, self.p), self.p);
            }
        }
        ModPPolynomial::new(self.p, coeffs)
    }

    pub fn scale(&self, c: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| mulmod(a, c, self.p)).collect();
        ModPPolynomial::new(self.p, coeffs)
    }

    /// Divide by a nonzero divisor, returning (quotient, remainder).
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        debug_assert_eq!(self.p, divisor.p);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = divisor.degree().unwrap();
        if self.degree().map_or(true, |sd| sd < dd) {
            return (ModPPolynomial::zero(p), self.clone());
        }
        let inv_lead = invmod(divisor.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = vec![0u64; qlen];
        for k in (0..qlen).rev() {
            let c = mulmod(rem[k + dd], inv_lead, p);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = submod(rem[k + i], mulmod(c, dc, p), p);
            }
        }
        (ModPPolynomial::new(p, quot), ModPPolynomial::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divmod(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(invmod(self.leading_coeff(), self.p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mulmod(c, (k as u64) % p, p))
            .collect();
        ModPPolynomial::new(p, coeffs)
    }

    /// self^exp mod modulus, exponent arbitrary precision.
    pub fn powmod(&self, exp: &BigUint, modulus: &Self) -> Self {
        let p = self.p;
        let mut acc = ModPPolynomial::one(p).rem(modulus);
        let mut base = self.rem(modulus);
        if exp.is_zero() {
            return acc;
        }
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = addmod(mulmod(acc, x, p), c, p);
        }
        acc
    }

    /// Whether gcd(f, f') = 1, i.e. f is squarefree over F_p.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == Some(0) {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Lift back to an integer polynomial with coefficients in [0, p).
    pub fn lift(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|&c| num_bigint::BigInt::from(c)).collect())
    }
}

/// Displays coefficient representatives in [0, p) using the integer
/// polynomial formatting.
impl fmt::Display for ModPPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}
