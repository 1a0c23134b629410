use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::{ideal_from_generators, HNFIdeal, Ideal};
use crate::order::{BasisView, NumberFieldOrder};
use crate::poly::{factor_mod_p, IntPolynomial, ModPPolynomial};
use crate::primes::is_prime_u64;

/// One prime ideal above p: inertia degree, ramification index, and the
/// generator polynomial with (p, g(theta)) generating the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitFactor {
    pub d: usize,
    pub e: u32,
    pub gen_poly: ModPPolynomial,
}

/// Decomposition of a rational prime in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSplit {
    pub p: u64,
    /// Sorted by (degree, coefficients); sum of e*d equals the field degree.
    pub factors: Vec<SplitFactor>,
}

impl PrimeSplit {
    pub fn lambda(&self) -> usize {
        self.factors.len()
    }

    /// Sum of inertia degrees of the distinct primes above p.
    pub fn big_d(&self) -> usize {
        self.factors.iter().map(|f| f.d).sum()
    }

    /// (e_j, d_j) pairs in factor order; what the zeta product and the
    /// disk cache need.
    pub fn summary(&self) -> Vec<(u32, u32)> {
        self.factors.iter().map(|f| (f.e, f.d as u32)).collect()
    }
}

/// Dedekind's criterion: is Z[theta] maximal at p?
///
/// Factor f = prod g_i^{e_i} mod p, set g = prod g_i, h = f/g mod p, lift
/// both monically to Z, and put T = (g*h - f)/p. The criterion holds iff
/// gcd(T mod p, g, h) = 1.
pub fn dedekind_p_maximal(f: &IntPolynomial, p: u64) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let fac = factor_mod_p(f, p)?;
    let mut g_bar = ModPPolynomial::one(p);
    for (gi, _) in &fac.factors {
        g_bar = g_bar.mul(gi);
    }
    let f_bar = ModPPolynomial::reduce(f, p)?;
    let (h_bar, rem) = f_bar.divmod(&g_bar);
    debug_assert!(rem.is_zero());
    let g_lift = g_bar.lift();
    let h_lift = h_bar.lift();
    let gh_minus_f = g_lift.mul(&h_lift).sub(f);
    // Every coefficient is divisible by p because gh = f mod p.
    let pb = BigInt::from(p);
    let t_coeffs: Vec<BigInt> = gh_minus_f
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!((c % &pb).is_zero());
            c / &pb
        })
        .collect();
    let t_bar = ModPPolynomial::reduce(&IntPolynomial::new(t_coeffs), p)?;
    let common = t_bar.gcd(&g_bar).gcd(&h_bar);
    Ok(common.degree() == Some(0))
}

/// Split p in the order. For p dividing disc(f) the Dedekind criterion is
/// checked first; failure means the monogenic order is not the maximal
/// order at p and the field is refused.
pub fn split_prime(order: &NumberFieldOrder, p: u64) -> Result<PrimeSplit> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let f = order.defining_poly();
    if (order.disc_f() % BigInt::from(p)).is_zero() && !dedekind_p_maximal(f, p)? {
        return Err(Error::NonMaximalAtP(p));
    }
    let fac = factor_mod_p(f, p)?;
    let factors = fac
        .factors
        .into_iter()
        .map(|(g, e)| SplitFactor { d: g.degree().unwrap_or(0), e, gen_poly: g })
        .collect::<Vec<_>>();
    let split = PrimeSplit { p, factors };
    debug_assert_eq!(
        split.factors.iter().map(|f| f.e as usize * f.d).sum::<usize>(),
        order.degree(),
        "e*d sum must equal the field degree"
    );
    Ok(split)
}

/// The j-th prime ideal above p, as the HNF ideal generated by
/// {p, g_j(theta)}.
pub fn prime_ideal(view: &BasisView, split: &PrimeSplit, j: usize) -> Result<HNFIdeal> {
    let Some(factor) = split.factors.get(j) else {
        return Err(Error::PrimeIndexOutOfRange {
            p: split.p,
            index: j,
            count: split.factors.len(),
        });
    };
    let f = view.order().defining_poly();
    let reduced = factor.gen_poly.lift().rem_by_monic(f);
    let n = view.degree();
    let mut coords = vec![BigInt::zero(); n];
    for (k, slot) in coords.iter_mut().enumerate() {
        *slot = reduced.coeff(k);
    }
    let gens = [view.from_integer(split.p as i64), view.from_power_coords(&coords)];
    match ideal_from_generators(view, &gens)? {
        Ideal::NonZero(h) => Ok(h),
        Ideal::Zero => unreachable!("p is a nonzero generator"),
    }
}

/// Memoized prime splitting for one order, with an optional human-diffable
/// disk cache of the (e, d) summaries.
///
/// Cache format: a first line `poly: <defining polynomial>`, then one line
/// per prime, `p;e1,d1;e2,d2;...`.
pub struct SplittingTable<'a> {
    order: &'a NumberFieldOrder,
    full: Mutex<BTreeMap<u64, Arc<PrimeSplit>>>,
    summaries: Mutex<BTreeMap<u64, Vec<(u32, u32)>>>,
}

impl<'a> SplittingTable<'a> {
    pub fn new(order: &'a NumberFieldOrder) -> Self {
        SplittingTable {
            order,
            full: Mutex::new(BTreeMap::new()),
            summaries: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn order(&self) -> &'a NumberFieldOrder {
        self.order
    }

    /// Full split with generator polynomials, memoized.
    pub fn split(&self, p: u64) -> Result<Arc<PrimeSplit>> {
        if let Some(hit) = self.full.lock().unwrap().get(&p) {
            return Ok(hit.clone());
        }
        let computed = Arc::new(split_prime(self.order, p)?);
        self.summaries.lock().unwrap().insert(p, computed.summary());
        self.full.lock().unwrap().insert(p, computed.clone());
        Ok(computed)
    }

    /// (e_j, d_j) pairs for p; served from the summary cache when present
    /// so zeta sweeps can run off a loaded file without refactoring.
    pub fn summary(&self, p: u64) -> Result<Vec<(u32, u32)>> {
        if let Some(hit) = self.summaries.lock().unwrap().get(&p) {
            return Ok(hit.clone());
        }
        Ok(self.split(p)?.summary())
    }

    pub fn poly_header(&self) -> String {
        format!("poly: {}", self.order.defining_poly())
    }

    /// Load summaries from a cache file. Entries under a header naming a
    /// different polynomial are ignored (the file belongs to another
    /// field); malformed lines under a matching header are an error.
    /// Returns the number of entries loaded.
    pub fn load_cache(&self, path: &Path) -> Result<usize> {
        let file = match std::fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut lines = BufReader::new(file).lines();
        let header = match lines.next() {
            Some(h) => h?,
            None => return Ok(0),
        };
        let Some(poly_text) = header.strip_prefix("poly: ") else {
            return Err(Error::Parse(format!("cache header not recognized: {header:?}")));
        };
        let cached_poly: IntPolynomial = poly_text.trim().parse()?;
        if &cached_poly != self.order.defining_poly() {
            return Ok(0);
        }
        let n = self.order.degree() as u64;
        let mut loaded = 0usize;
        for line in lines {
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(';');
            let p: u64 = parts
                .next()
                .unwrap()
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in cache line {line:?}")))?;
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p));
            }
            let mut ed = Vec::new();
            for pair in parts {
                let (e, d) = pair
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad factor pair in {line:?}")))?;
                let e: u32 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad ramification index in {line:?}")))?;
                let d: u32 = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad inertia degree in {line:?}")))?;
                ed.push((e, d));
            }
            let total: u64 = ed.iter().map(|&(e, d)| e as u64 * d as u64).sum();
            if total != n || ed.is_empty() {
                return Err(Error::Parse(format!(
                    "cache line {line:?}: e*d sum {total} does not match degree {n}"
                )));
            }
            self.summaries.lock().unwrap().insert(p, ed);
            loaded += 1;
        }
        Ok(loaded)
    }

    /// Write every known summary, sorted by p, under this field's header.
    /// Returns the number of entries written.
    pub fn save_cache(&self, path: &Path) -> Result<usize> {
        let summaries = self.summaries.lock().unwrap().clone();
        let mut out = std::fs::File::create(path)?;
        writeln!(out, "{}", self.poly_header())?;
        for (p, ed) in &summaries {
            let pairs: Vec<String> = ed.iter().map(|(e, d)| format!("{e},{d}")).collect();
            writeln!(out, "{p};{}", pairs.join(";"))?;
        }
        Ok(summaries.len())
    }

    pub fn known_primes(&self) -> Vec<u64> {
        self.summaries.lock().unwrap().keys().copied().collect()
    }
}
