use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IMat;

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order and kept canonical:
/// no trailing zeros, so the leading coefficient of a nonzero polynomial is
/// nonzero and the zero polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPolynomial { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPolynomial::new(coeffs)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Remainder of division by a monic polynomial; exact over Z.
    pub fn rem_by_monic(&self, m: &Self) -> Self {
        assert!(m.is_monic(), "divisor must be monic");
        let dm = m.degree().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let c = r.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let k = r.len() - dm;
            for (i, mc) in m.coeffs.iter().take(dm).enumerate() {
                r[k + i] -= &c * mc;
            }
        }
        IntPolynomial::new(r)
    }

    /// Quotient of exact division by a monic polynomial; panics if the
    /// division leaves a remainder.
    pub fn div_exact_by_monic(&self, m: &Self) -> Self {
        assert!(m.is_monic(), "divisor must be monic");
        let dm = m.degree().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = Vec::new();
        while r.len() > dm {
            let c = r.pop().unwrap();
            if !c.is_zero() {
                let k = r.len() - dm;
                for (i, mc) in m.coeffs.iter().take(dm).enumerate() {
                    r[k + i] -= &c * mc;
                }
            }
            q.push(c);
        }
        assert!(r.iter().all(Zero::is_zero), "division not exact");
        q.reverse();
        IntPolynomial::new(q)
    }

    /// Resultant of `self` and `other` via the Sylvester matrix determinant.
    pub fn resultant(&self, other: &Self) -> BigInt {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            // Res against the zero polynomial is zero unless both are constants.
            _ => return BigInt::zero(),
        };
        if m == 0 && n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut s = IMat::zero(size, size);
        // First n rows: shifts of self's coefficients (descending degree).
        for i in 0..n {
            for k in 0..=m {
                s[(i, i + k)] = self.coeff(m - k);
            }
        }
        // Next m rows: shifts of other's coefficients.
        for i in 0..m {
            for k in 0..=n {
                s[(n + i, i + k)] = other.coeff(n - k);
            }
        }
        s.det()
    }

    /// Discriminant of a monic polynomial of degree >= 1:
    /// `(-1)^(n(n-1)/2) * Res(f, f')`.
    pub fn discriminant(&self) -> Result<BigInt> {
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        let n = self.degree().unwrap();
        if n == 0 {
            return Err(Error::DegreeZero);
        }
        if n == 1 {
            return Ok(BigInt::one());
        }
        let res = self.resultant(&self.derivative());
        Ok(if (n * (n - 1) / 2) % 2 == 0 { res } else { -res })
    }

    /// Integer roots of a monic polynomial, for the rational-root report.
    ///
    /// Candidates are divisors of the constant term discovered by trial
    /// division up to 10^6 (always including 1 and |a0| themselves), so a
    /// constant term whose divisors all exceed that bound can hide a root;
    /// callers treat the result as evidence, not proof of irreducibility.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let mut roots = Vec::new();
        if self.is_zero() || self.degree() == Some(0) {
            return roots;
        }
        let a0 = self.coeff(0);
        if a0.is_zero() {
            roots.push(BigInt::zero());
            // Remaining roots divide the trailing nonzero coefficient; peel x off.
            let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
            let rest = IntPolynomial::new(self.coeffs[k..].to_vec());
            for r in rest.integer_roots() {
                if !r.is_zero() {
                    roots.push(r);
                }
            }
            roots.sort();
            roots.dedup();
            return roots;
        }
        let mut candidates = vec![BigInt::one(), a0.abs()];
        let limit = BigInt::from(1_000_000u64);
        let mut d = BigInt::from(2u64);
        while &d * &d <= a0.abs() && d <= limit {
            if (a0.abs() % &d).is_zero() {
                candidates.push(d.clone());
                candidates.push(a0.abs() / &d);
            }
            d += 1;
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            for r in [c.clone(), -c] {
                if self.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

/// Exact product of two integer polynomials.
pub fn poly_mul_int(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a.mul(b)
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
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parse the text format: integer coefficients, variable `x`, powers
    /// with `^`, e.g. `x^3 - x - 1` or `2x^2 + 3`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0usize;
        let n = bytes.len();
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut any_term = false;

        let skip_ws = |i: &mut usize| {
            while *i < n && bytes[*i].is_whitespace() {
                *i += 1;
            }
        };

        loop {
            skip_ws(&mut i);
            if i >= n {
                break;
            }
            // Sign.
            let mut sign = 1i32;
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -1;
                }
                i += 1;
                skip_ws(&mut i);
            } else if any_term {
                return Err(err("expected '+' or '-' between terms"));
            }
            if i >= n {
                return Err(err("dangling sign"));
            }
            // Optional integer coefficient.
            let mut num = String::new();
            while i < n && bytes[i].is_ascii_digit() {
                num.push(bytes[i]);
                i += 1;
            }
            if i < n && (bytes[i] == '.' || bytes[i] == '/') {
                return Err(err("non-integer coefficient"));
            }
            skip_ws(&mut i);
            if i < n && bytes[i] == '*' {
                if num.is_empty() {
                    return Err(err("unexpected '*'"));
                }
                i += 1;
                skip_ws(&mut i);
            }
            // Optional variable with power.
            let mut power = 0usize;
            let has_var = i < n && bytes[i] == 'x';
            if has_var {
                i += 1;
                power = 1;
                skip_ws(&mut i);
                if i < n && bytes[i] == '^' {
                    i += 1;
                    skip_ws(&mut i);
                    let mut exp = String::new();
                    while i < n && bytes[i].is_ascii_digit() {
                        exp.push(bytes[i]);
                        i += 1;
                    }
                    if exp.is_empty() {
                        return Err(err("missing exponent after '^'"));
                    }
                    power = exp.parse().map_err(|_| err("exponent too large"))?;
                }
            }
            if num.is_empty() && !has_var {
                return Err(err("expected coefficient or 'x'"));
            }
            let mut c = if num.is_empty() {
                BigInt::one()
            } else {
                BigInt::parse_bytes(num.as_bytes(), 10).ok_or_else(|| err("bad integer"))?
            };
            if sign < 0 {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;
            any_term = true;
        }
        if !any_term {
            return Err(err("empty polynomial"));
        }
        Ok(IntPolynomial::new(coeffs))
    }
}
