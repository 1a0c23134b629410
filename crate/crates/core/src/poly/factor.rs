use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, ModPPolynomial};
use crate::rng::{splitmix64, SeqRng};

/// Complete factorization of a polynomial over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationModP {
    pub p: u64,
    /// Leading coefficient of the input; the monic factors multiply to
    /// input/unit.
    pub unit: u64,
    /// Monic irreducible factors with multiplicities, pairwise distinct,
    /// sorted by degree then by coefficient sequence.
    pub factors: Vec<(ModPPolynomial, u32)>,
}

impl FactorizationModP {
    /// Recombine unit * prod factor^multiplicity.
    pub fn product(&self) -> ModPPolynomial {
        let mut acc = ModPPolynomial::constant(self.p, self.unit);
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|(g, m)| g.degree().unwrap_or(0) * *m as usize).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factor f mod p into monic irreducibles. The equal-degree stage is
/// randomized; the seed is derived from (p, f) so equal inputs give equal
/// transcripts, and the canonical sort makes the result seed-independent
/// anyway.
pub fn factor_mod_p(f: &IntPolynomial, p: u64) -> Result<FactorizationModP> {
    let g = ModPPolynomial::reduce(f, p)?;
    let seed = seed_for(&g);
    factor_reduced(&g, seed)
}

/// As factor_mod_p but with a caller-chosen seed for the equal-degree stage.
pub fn factor_mod_p_seeded(f: &IntPolynomial, p: u64, seed: u64) -> Result<FactorizationModP> {
    let g = ModPPolynomial::reduce(f, p)?;
    factor_reduced(&g, seed)
}

fn seed_for(g: &ModPPolynomial) -> u64 {
    let mut s = splitmix64(g.modulus() ^ 0x9e37_79b9_7f4a_7c15);
    for &c in g.coeffs() {
        s = splitmix64(s ^ c);
    }
    s
}

fn factor_reduced(g: &ModPPolynomial, seed: u64) -> Result<FactorizationModP> {
    let p = g.modulus();
    if g.is_zero() {
        return Err(Error::ZeroModP(p));
    }
    let unit = g.leading_coeff();
    let monic = g.monic();
    let mut factors: Vec<(ModPPolynomial, u32)> = Vec::new();
    if monic.degree() > Some(0) {
        let mut rng = SeqRng::new(seed);
        for (part, mult) in squarefree_parts(&monic) {
            for (block, d) in distinct_degree(&part) {
                for irr in equal_degree(&block, d, &mut rng) {
                    factors.push((irr, mult));
                }
            }
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(FactorizationModP { p, unit, factors })
}

/// Squarefree decomposition of a monic polynomial: pairwise-coprime monic
/// squarefree parts with their multiplicities in f.
fn squarefree_parts(f: &ModPPolynomial) -> Vec<(ModPPolynomial, u32)> {
    let p = f.modulus();
    let mut result = Vec::new();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p); over the prime field the p-th root just contracts
        // exponents.
        for (g, m) in squarefree_parts(&pth_root(f)) {
            result.push((g, m * p as u32));
        }
        return result;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.divmod(&c).0;
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.divmod(&y).0;
        if z.degree() != Some(0) {
            result.push((z, i));
        }
        i += 1;
        w = y;
        c = c.divmod(&w).0;
    }
    if c.degree() != Some(0) {
        // c collects the factors with multiplicity divisible by p.
        for (g, m) in squarefree_parts(&pth_root(&c)) {
            result.push((g, m * p as u32));
        }
    }
    result
}

/// p-th root of a polynomial in x^p over the prime field F_p.
fn pth_root(f: &ModPPolynomial) -> ModPPolynomial {
    let p = f.modulus();
    let coeffs: Vec<u64> = f.coeffs().iter().step_by(p as usize).copied().collect();
    ModPPolynomial::new(p, coeffs)
}

/// Distinct-degree stage on a monic squarefree polynomial: (product of all
/// irreducible factors of degree d, d) pairs in increasing d.
fn distinct_degree(f: &ModPPolynomial) -> Vec<(ModPPolynomial, usize)> {
    let p = f.modulus();
    let mut result = Vec::new();
    let mut fstar = f.clone();
    let mut xp = ModPPolynomial::x(p).rem(&fstar);
    let mut i = 1usize;
    while fstar.degree().unwrap() >= 2 * i {
        // xp = x^(p^i) mod f* after this step.
        xp = xp.powmod(&BigUint::from(p), &fstar);
        let g = fstar.gcd(&xp.sub(&ModPPolynomial::x(p)));
        if g.degree() != Some(0) {
            fstar = fstar.divmod(&g).0;
            xp = xp.rem(&fstar);
            result.push((g, i));
        }
        i += 1;
    }
    if fstar.degree() != Some(0) {
        let d = fstar.degree().unwrap();
        result.push((fstar, d));
    }
    result
}

/// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, all
/// irreducible factors of degree d.
fn equal_degree(f: &ModPPolynomial, d: usize, rng: &mut SeqRng) -> Vec<ModPPolynomial> {
    let p = f.modulus();
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let split = loop {
        let a = random_poly(p, n, rng);
        if a.degree().map_or(true, |da| da == 0) {
            continue;
        }
        // A nontrivial gcd with the random element is already a split.
        let g = f.gcd(&a);
        if is_proper(&g, n) {
            break g;
        }
        let g = if p == 2 {
            // Trace map over F_2: a + a^2 + ... + a^(2^(d-1)) lands in F_2 on
            // each factor, so its gcd with f splits the factors by trace.
            let mut t = a.clone();
            let mut cur = a.clone();
            for _ in 1..d {
                cur = cur.mul(&cur).rem(f);
                t = t.add(&cur);
            }
            f.gcd(&t)
        } else {
            // a^((p^d-1)/2) is +-1 mod each factor; gcd with the -1 shift
            // separates the two signs.
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
            let b = a.powmod(&e, f);
            f.gcd(&b.sub(&ModPPolynomial::one(p)))
        };
        if is_proper(&g, n) {
            break g;
        }
    };
    let rest = f.divmod(&split).0;
    let mut out = equal_degree(&split, d, rng);
    out.extend(equal_degree(&rest, d, rng));
    out
}

fn is_proper(g: &ModPPolynomial, n: usize) -> bool {
    g.degree().map_or(false, |dg| dg > 0 && dg < n)
}

fn random_poly(p: u64, len: usize, rng: &mut SeqRng) -> ModPPolynomial {
    let coeffs = (0..len).map(|_| rng.below(p)).collect();
    ModPPolynomial::new(p, coeffs)
}

/// Outcome of the mod-p irreducibility search over Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityEvidence {
    /// f is irreducible mod the witness prime (which does not divide
    /// disc(f)), hence irreducible over Q.
    Certified { witness: u64 },
    /// No witness prime <= the budget; the integer-root check result is
    /// reported so obvious reducibility is still visible.
    Uncertified { rational_roots: Vec<BigInt> },
}

impl IrreducibilityEvidence {
    pub fn is_certified(&self) -> bool {
        matches!(self, IrreducibilityEvidence::Certified { .. })
    }
}

/// Search primes p <= prime_budget for one with f irreducible mod p. A hit
/// certifies irreducibility over Q (monic f keeps its degree mod p, and an
/// irreducible image forces irreducibility upstairs). Misses prove nothing:
/// x^4+1 is irreducible over Q yet reducible mod every prime.
pub fn irreducibility_evidence(
    f: &IntPolynomial,
    prime_budget: u64,
) -> Result<IrreducibilityEvidence> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let n = f.degree().unwrap();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    for p in crate::primes::primes_up_to(prime_budget) {
        let fac = factor_mod_p(f, p)?;
        // Single factor of full degree with multiplicity 1 also certifies
        // p does not divide disc(f).
        if fac.is_irreducible() && fac.factors[0].0.degree() == Some(n) {
            return Ok(IrreducibilityEvidence::Certified { witness: p });
        }
    }
    Ok(IrreducibilityEvidence::Uncertified { rational_roots: f.integer_roots() })
}
