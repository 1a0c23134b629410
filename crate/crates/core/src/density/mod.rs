//! Densities over coordinate boxes: empirical measurement of the coprime
//! tuple set (exhaustive and sampled), exact counts and densities for the
//! sets avoiding a finite list of rational primes, a lattice point-count
//! diagnostic, and convergence tables.
//!
//! A box O[B] is the set of elements whose coordinates in the active basis
//! all lie in [-B, B); tuples are enumerated in odometer order with the
//! last coordinate moving fastest.

mod kernel;

use std::cell::RefCell;
use std::fmt;
use std::io;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::ideal::{self, HNFIdeal};
use crate::order::BasisView;
use crate::poly::ModPPolynomial;
use crate::primes::{is_prime_u64, primes_up_to};
use crate::splitting::SplittingTable;
use crate::zeta;

/// Largest prime used by the non-coprimality residue sieve unless the
/// caller picks another bound.
pub const DEFAULT_SIEVE_BOUND: u64 = 37;

/// Default cap on exhaustive enumeration size (number of tuples).
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1_000_000_000;

/// 99% two-sided normal quantile, used for sampled confidence intervals.
const Z99: f64 = 2.5758293035489004;

/// Coordinates are kept in machine words; boxes beyond this are refused.
const MAX_B: u64 = 1 << 31;

/// How a density estimate was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => write!(f, "exhaustive"),
            Mode::Sampled => write!(f, "sampled"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "sampled" => Ok(Mode::Sampled),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// Sampling parameters; required whenever `Mode::Sampled` is requested.
#[derive(Clone, Copy, Debug)]
pub struct SampleParams {
    pub samples: u64,
    pub seed: u64,
}

/// A coordinate box [-B, B)^{mn}: side parameter and tuple length. The
/// basis the coordinates refer to is carried by the `BasisView` each
/// operation receives; reports record its fingerprint.
#[derive(Clone, Copy, Debug)]
pub struct BoxSpec {
    pub b: u64,
    pub m: u32,
}

impl BoxSpec {
    pub fn new(b: u64, m: u32) -> Result<Self> {
        if b == 0 || m == 0 {
            return Err(Error::Invalid("box needs B >= 1 and m >= 1".into()));
        }
        if b > MAX_B {
            return Err(Error::Invalid(format!("B = {b} exceeds the 2^31 coordinate limit")));
        }
        Ok(BoxSpec { b, m })
    }

    /// Total number of tuples, (2B)^{mn}, exactly.
    pub fn total_points(&self, n: usize) -> BigInt {
        BigInt::from(2 * self.b).pow(self.m * n as u32)
    }

    fn digits(&self, n: usize) -> usize {
        self.m as usize * n
    }
}

/// Result of one empirical density run.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub mode: Mode,
    pub hits: u64,
    pub trials: u64,
    /// hits/trials as an exact fraction; exhaustive runs only.
    pub exact: Option<Ratio<BigInt>>,
    pub estimate: f64,
    /// 99% normal-approximation halfwidth; sampled runs only.
    pub ci_halfwidth: Option<f64>,
    /// Seed used to draw; sampled runs only.
    pub seed: Option<u64>,
    pub b: u64,
    pub m: u32,
    pub basis_fingerprint: u64,
}

impl DensityReport {
    /// JSON with the exact estimate rendered as a `"num/den"` string in
    /// exhaustive mode and as a float in sampled mode.
    pub fn to_json(&self) -> serde_json::Value {
        let estimate = match &self.exact {
            Some(r) => json!(format!("{}/{}", r.numer(), r.denom())),
            None => json!(self.estimate),
        };
        json!({
            "mode": self.mode.to_string(),
            "hits": self.hits,
            "trials": self.trials,
            "estimate": estimate,
            "ci_halfwidth": self.ci_halfwidth,
            "seed": self.seed,
            "B": self.b,
            "m": self.m,
            "basis_fingerprint": self.basis_fingerprint.to_string(),
        })
    }
}

/// A finite set of rational primes together with their exact product.
#[derive(Clone, Debug)]
pub struct PrimeSet {
    primes: Vec<u64>,
    modulus: BigInt,
}

impl PrimeSet {
    /// Sorts and deduplicates; rejects non-primes.
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut list: Vec<u64> = primes.into_iter().collect();
        list.sort_unstable();
        list.dedup();
        for &p in &list {
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p));
            }
        }
        let modulus = list.iter().fold(BigInt::one(), |acc, &p| acc * BigInt::from(p));
        Ok(PrimeSet { primes: list, modulus })
    }

    pub fn empty() -> Self {
        PrimeSet { primes: Vec::new(), modulus: BigInt::one() }
    }

    /// The first t primes 2, 3, 5, ...
    pub fn first_t(t: usize) -> Self {
        let mut bound = 32u64;
        loop {
            let ps = primes_up_to(bound);
            if ps.len() >= t {
                return PrimeSet::new(ps.into_iter().take(t)).expect("sieve output is prime");
            }
            bound *= 2;
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// N, the product of the members (1 for the empty set).
    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn modulus_u64(&self) -> Option<u64> {
        self.modulus.to_u64()
    }
}

/// Per-prime residue data: the image of each basis vector in each residue
/// field O/P_j = F_p[x]/(g_j), as a coefficient vector of length d_j.
struct ResiduePrime {
    p: u64,
    /// forms[j][t] is the residue of basis vector e_t modulo P_j.
    forms: Vec<Vec<Vec<u64>>>,
}

/// Decides membership of box elements in the prime ideals above a fixed
/// list of rational primes, entirely in machine words. An element lies in
/// P_j = (p, g_j(theta)) exactly when its image in F_p[x]/(g_j) vanishes.
pub struct ResidueTester {
    primes: Vec<ResiduePrime>,
    n: usize,
}

impl ResidueTester {
    pub fn new(view: &BasisView, table: &SplittingTable, primes: &[u64]) -> Result<Self> {
        if table.order().defining_poly() != view.order().defining_poly() {
            return Err(Error::Invalid(
                "splitting table and basis view describe different fields".into(),
            ));
        }
        let n = view.degree();
        let mut data = Vec::with_capacity(primes.len());
        for &p in primes {
            let split = table.split(p)?;
            let mut forms = Vec::with_capacity(split.factors.len());
            for factor in &split.factors {
                let mut per_basis = Vec::with_capacity(n);
                for t in 0..n {
                    let mut unit = vec![BigInt::zero(); n];
                    unit[t] = BigInt::one();
                    let power = view.basis().to_power(&unit);
                    let as_poly = crate::poly::IntPolynomial::new(power);
                    let reduced = ModPPolynomial::reduce(&as_poly, p)?;
                    let residue = reduced.rem(&factor.gen_poly);
                    let mut coeffs = residue.coeffs().to_vec();
                    coeffs.resize(factor.d, 0);
                    per_basis.push(coeffs);
                }
                forms.push(per_basis);
            }
            data.push(ResiduePrime { p, forms });
        }
        Ok(ResidueTester { primes: data, n })
    }

    /// True when some listed prime p has a prime ideal above it containing
    /// every element of the tuple (coordinates flat, n per element). Such
    /// a tuple is certainly not coprime; the converse needs the arbiter.
    pub fn shares_listed_prime(&self, tuple: &[i64]) -> bool {
        let n = self.n;
        debug_assert_eq!(tuple.len() % n, 0);
        let m = tuple.len() / n;
        for rp in &self.primes {
            let p = rp.p;
            'factor: for forms_j in &rp.forms {
                let d = forms_j[0].len();
                for i in 0..m {
                    // residue of element i modulo this prime ideal
                    let mut zero = true;
                    for s in 0..d {
                        let mut acc = 0u64;
                        for t in 0..n {
                            let c = tuple[i * n + t].rem_euclid(p as i64) as u64;
                            acc += c * forms_j[t][s];
                        }
                        if acc % p != 0 {
                            zero = false;
                            break;
                        }
                    }
                    if !zero {
                        // element i escapes this prime ideal
                        continue 'factor;
                    }
                }
                return true;
            }
        }
        false
    }
}

struct MultTables {
    /// mats[t] is the n x n matrix of multiplication by basis vector e_t,
    /// row-major, in basis coordinates.
    mats: Vec<Vec<i64>>,
    one: Vec<i64>,
    minus_one: Vec<i64>,
}

thread_local! {
    static HNF_SCRATCH: RefCell<Vec<i64>> = const { RefCell::new(Vec::new()) };
}

/// Full coprimality decision for tuples of box elements. Pipeline: a
/// tuple containing +-1 is coprime outright; a small-prime residue sieve
/// rejects tuples sharing a visible prime; everything else goes to the
/// lattice index arbiter (machine words first, arbitrary precision if a
/// product overflows). The sieve only ever rejects, so the arbiter's
/// verdict is the one that counts.
pub struct CoprimalityTester<'a> {
    view: &'a BasisView<'a>,
    sieve: ResidueTester,
    fast: Option<MultTables>,
}

impl<'a> CoprimalityTester<'a> {
    pub fn new(view: &'a BasisView<'a>, table: &SplittingTable) -> Result<Self> {
        Self::with_sieve_bound(view, table, DEFAULT_SIEVE_BOUND)
    }

    pub fn with_sieve_bound(
        view: &'a BasisView<'a>,
        table: &SplittingTable,
        bound: u64,
    ) -> Result<Self> {
        let sieve = ResidueTester::new(view, table, &primes_up_to(bound))?;
        Ok(CoprimalityTester { view, sieve, fast: build_mult_tables(view) })
    }

    pub fn view(&self) -> &'a BasisView<'a> {
        self.view
    }

    /// Coordinates flat: m elements of n entries each.
    pub fn is_coprime(&self, tuple: &[i64]) -> bool {
        let n = self.view.degree();
        if let Some(fast) = &self.fast {
            for z in tuple.chunks_exact(n) {
                if z == fast.one || z == fast.minus_one {
                    return true;
                }
            }
        }
        if self.sieve.shares_listed_prime(tuple) {
            return false;
        }
        self.arbiter(tuple)
    }

    /// Lattice index test alone, skipping the unit and sieve shortcuts.
    /// Exists so tests can verify the shortcuts never change a count.
    pub fn is_coprime_hnf_only(&self, tuple: &[i64]) -> bool {
        self.arbiter(tuple)
    }

    fn arbiter(&self, tuple: &[i64]) -> bool {
        match self.arbiter_i64(tuple) {
            Some(v) => v,
            None => self.arbiter_big(tuple),
        }
    }

    /// Rows of the tuple's ideal lattice: coordinates of z_i * e_t for all
    /// i, t. Index 1 means the ideal is the whole ring.
    fn arbiter_i64(&self, tuple: &[i64]) -> Option<bool> {
        let fast = self.fast.as_ref()?;
        let n = self.view.degree();
        let m = tuple.len() / n;
        HNF_SCRATCH.with(|cell| {
            let mut buf = cell.borrow_mut();
            buf.clear();
            buf.resize(m * n * n, 0);
            for i in 0..m {
                let z = &tuple[i * n..(i + 1) * n];
                for t in 0..n {
                    let mat = &fast.mats[t];
                    for s in 0..n {
                        let mut acc = 0i64;
                        for j in 0..n {
                            acc = acc.checked_add(mat[s * n + j].checked_mul(z[j])?)?;
                        }
                        buf[(i * n + t) * n + s] = acc;
                    }
                }
            }
            kernel::rows_span_unit_lattice(&mut buf, m * n, n)
        })
    }

    fn arbiter_big(&self, tuple: &[i64]) -> bool {
        let n = self.view.degree();
        let elems: Vec<_> = tuple
            .chunks_exact(n)
            .map(|c| self.view.element_i64(c).expect("coordinate count matches the view"))
            .collect();
        ideal::is_coprime_tuple(self.view, &elems).expect("elements carry the view's own stamp")
    }
}

fn build_mult_tables(view: &BasisView) -> Option<MultTables> {
    let n = view.degree();
    let mut mats = Vec::with_capacity(n);
    for t in 0..n {
        let m = view.mult_by_basis(t);
        let mut flat = Vec::with_capacity(n * n);
        for s in 0..n {
            for j in 0..n {
                flat.push(m[(s, j)].to_i64()?);
            }
        }
        mats.push(flat);
    }
    let one: Option<Vec<i64>> = view.one().coords().iter().map(|c| c.to_i64()).collect();
    let one = one?;
    let minus_one = one.iter().map(|&c| -c).collect();
    Some(MultTables { mats, one, minus_one })
}

fn check_budget(total: &BigInt, budget: u64) -> Result<u64> {
    match total.to_u64() {
        Some(t) if t <= budget => Ok(t),
        _ => Err(Error::BudgetExceeded { needed: total.clone(), budget }),
    }
}

fn finish_report(
    mode: Mode,
    hits: u64,
    trials: u64,
    total_exact: Option<BigInt>,
    seed: Option<u64>,
    spec: &BoxSpec,
    stamp: u64,
) -> DensityReport {
    let estimate = hits as f64 / trials as f64;
    let (exact, ci) = match mode {
        Mode::Exhaustive => {
            let denom = total_exact.expect("exhaustive runs know the exact total");
            (Some(Ratio::new(BigInt::from(hits), denom)), None)
        }
        Mode::Sampled => {
            let half = Z99 * (estimate * (1.0 - estimate) / trials as f64).sqrt();
            (None, Some(half))
        }
    };
    DensityReport {
        mode,
        hits,
        trials,
        exact,
        estimate,
        ci_halfwidth: ci,
        seed,
        b: spec.b,
        m: spec.m,
        basis_fingerprint: stamp,
    }
}

fn run_counter(
    spec: &BoxSpec,
    n: usize,
    mode: Mode,
    sampling: Option<SampleParams>,
    budget: u64,
    stamp: u64,
    decide: impl Fn(&[i64]) -> bool + Sync,
) -> Result<DensityReport> {
    match mode {
        Mode::Exhaustive => {
            let total = spec.total_points(n);
            let trials = check_budget(&total, budget)?;
            let hits = kernel::exhaustive_count(spec.b, spec.digits(n), trials, decide);
            Ok(finish_report(mode, hits, trials, Some(total), None, spec, stamp))
        }
        Mode::Sampled => {
            let params = sampling.ok_or(Error::MissingSeed)?;
            if params.samples == 0 {
                return Err(Error::Invalid("sampled mode needs a positive sample count".into()));
            }
            let hits =
                kernel::sampled_count(spec.b, spec.digits(n), params.samples, params.seed, decide);
            Ok(finish_report(mode, hits, params.samples, None, Some(params.seed), spec, stamp))
        }
    }
}

/// Measure the density of coprime m-tuples in the box.
pub fn empirical_density_e(
    tester: &CoprimalityTester,
    spec: &BoxSpec,
    mode: Mode,
    sampling: Option<SampleParams>,
    budget: u64,
) -> Result<DensityReport> {
    let view = tester.view();
    run_counter(spec, view.degree(), mode, sampling, budget, view.stamp(), |t| {
        tester.is_coprime(t)
    })
}

/// Measure the density of m-tuples whose ideal is coprime to every prime
/// in S. Unlike the full coprime test this is decided entirely by
/// residues: the tuple must escape every prime ideal above every p in S.
pub fn empirical_density_es(
    view: &BasisView,
    table: &SplittingTable,
    s: &PrimeSet,
    spec: &BoxSpec,
    mode: Mode,
    sampling: Option<SampleParams>,
    budget: u64,
) -> Result<DensityReport> {
    let tester = ResidueTester::new(view, table, s.primes())?;
    run_counter(spec, view.degree(), mode, sampling, budget, view.stamp(), |t| {
        !tester.shares_listed_prime(t)
    })
}

/// Exact number of S-coprime m-tuples in the box with B = qN, N the
/// product of S: (2q)^{mn} * prod_p [ p^{nm - m D_p} * prod_j (p^{d_j m} - 1) ].
pub fn exact_count_es(table: &SplittingTable, s: &PrimeSet, q: u64, m: u32) -> Result<BigInt> {
    if q == 0 || m == 0 {
        return Err(Error::Invalid("exact count needs q >= 1 and m >= 1".into()));
    }
    let n = table.order().degree() as u32;
    let mut acc = BigInt::from(2 * q).pow(m * n);
    for &p in s.primes() {
        let summary = table.summary(p)?;
        let d_p: u32 = summary.iter().map(|&(_, d)| d).sum();
        acc *= BigInt::from(p).pow(n * m - m * d_p);
        for &(_, d) in &summary {
            acc *= BigInt::from(p).pow(d * m) - BigInt::one();
        }
    }
    Ok(acc)
}

/// Exact density of S-coprime m-tuples: prod_{p in S} prod_j (1 - p^{-d_j m}).
/// Equals `exact_count_es(q)` divided by (2qN)^{mn} for every q.
pub fn exact_density_es(table: &SplittingTable, s: &PrimeSet, m: u32) -> Result<Ratio<BigInt>> {
    if m == 0 {
        return Err(Error::Invalid("density needs m >= 1".into()));
    }
    let mut acc = Ratio::one();
    for &p in s.primes() {
        for &(_, d) in &table.summary(p)? {
            let q = BigInt::from(p).pow(d * m);
            acc *= Ratio::new(&q - BigInt::one(), q);
        }
    }
    Ok(acc)
}

/// Lattice point-count diagnostic for an ideal.
#[derive(Clone, Debug)]
pub struct LatticeCheck {
    pub count: BigInt,
    /// (2B)^n / N(I), the volume heuristic.
    pub main_term: Ratio<BigInt>,
    pub abs_deviation: Ratio<BigInt>,
    /// |count - main| / (2B)^{n-1}.
    pub normalized_deviation: f64,
    pub b: u64,
}

impl LatticeCheck {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "B": self.b,
            "count": self.count.to_string(),
            "main_term": format!("{}/{}", self.main_term.numer(), self.main_term.denom()),
            "abs_deviation": format!("{}/{}", self.abs_deviation.numer(), self.abs_deviation.denom()),
            "normalized_deviation": self.normalized_deviation,
        })
    }
}

/// Count |I intersect O[B]| by enumeration and compare with (2B)^n / N(I).
pub fn lattice_count_check(
    view: &BasisView,
    ideal: &HNFIdeal,
    b: u64,
    budget: u64,
) -> Result<LatticeCheck> {
    let spec = BoxSpec::new(b, 1)?;
    let n = view.degree();
    let total = spec.total_points(n);
    let trials = check_budget(&total, budget)?;
    let count = kernel::exhaustive_count(b, n, trials, |coords| {
        let big: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        ideal.contains_coords(&big)
    });
    let main_term = Ratio::new(total.clone(), ideal.norm());
    let abs_deviation = (Ratio::from_integer(BigInt::from(count)) - &main_term).abs();
    let scale = BigInt::from(2 * b).pow(n as u32 - 1);
    let normalized = &abs_deviation / Ratio::from_integer(scale);
    Ok(LatticeCheck {
        count: BigInt::from(count),
        main_term,
        abs_deviation,
        normalized_deviation: normalized.to_f64().unwrap_or(f64::INFINITY),
        b,
    })
}

/// Count the box elements of Z[i] lying in the open first quadrant
/// (both power coordinates at least 1). A demonstration that plain
/// geometric sets can have basis-dependent densities; specific to the
/// field defined by x^2 + 1.
pub fn quadrant_count(view: &BasisView, b: u64, budget: u64) -> Result<u64> {
    let gaussian = crate::poly::IntPolynomial::new(vec![
        BigInt::one(),
        BigInt::zero(),
        BigInt::one(),
    ]);
    if view.order().defining_poly() != &gaussian {
        return Err(Error::Invalid("the quadrant demo is specific to x^2+1".into()));
    }
    let spec = BoxSpec::new(b, 1)?;
    let n = view.degree();
    let trials = check_budget(&spec.total_points(n), budget)?;
    // power coordinates of the basis vectors
    let mut cols = Vec::with_capacity(n);
    for t in 0..n {
        let mut unit = vec![BigInt::zero(); n];
        unit[t] = BigInt::one();
        let power = view.basis().to_power(&unit);
        let col: Option<Vec<i64>> = power.iter().map(|c| c.to_i64()).collect();
        cols.push(col.ok_or_else(|| Error::Invalid("basis too large for the demo".into()))?);
    }
    Ok(kernel::exhaustive_count(b, n, trials, |coords| {
        let mut x = 0i128;
        let mut y = 0i128;
        for (t, &c) in coords.iter().enumerate() {
            x += c as i128 * cols[t][0] as i128;
            y += c as i128 * cols[t][1] as i128;
        }
        x >= 1 && y >= 1
    }))
}

/// One line of a convergence table.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub b: u64,
    /// Number of primes in S for S-rows; None for full-coprimality rows.
    pub t: Option<usize>,
    pub estimate: f64,
    pub reference: f64,
    pub abs_diff: f64,
    pub mode: Mode,
    pub seed: Option<u64>,
}

/// What a convergence table tracks.
pub enum TableKind<'s> {
    /// Coprime density against 1/zeta_K(m) over a B schedule.
    CoprimeTarget { zeta_prime_bound: u64, bs: &'s [u64] },
    /// S_t-coprime density (S_t = first t primes) against its exact value
    /// over a B schedule.
    AvoidFirstT { t: usize, bs: &'s [u64] },
    /// S_t-coprime density at fixed B as t grows.
    FirstTSchedule { b: u64, ts: &'s [usize] },
}

pub fn density_convergence_table(
    view: &BasisView,
    table: &SplittingTable,
    m: u32,
    kind: &TableKind,
    mode: Mode,
    sampling: Option<SampleParams>,
    budget: u64,
) -> Result<Vec<ConvergenceRow>> {
    let mut rows = Vec::new();
    match *kind {
        TableKind::CoprimeTarget { zeta_prime_bound, bs } => {
            if bs.is_empty() {
                return Err(Error::Invalid("empty B schedule".into()));
            }
            let est = zeta::zeta_k(table, m as i64, zeta_prime_bound)?;
            let reference = zeta::reciprocal_density(&est)?.0.to_f64();
            let tester = CoprimalityTester::new(view, table)?;
            for &b in bs {
                let spec = BoxSpec::new(b, m)?;
                let rep = empirical_density_e(&tester, &spec, mode, sampling, budget)?;
                rows.push(row_from(&rep, None, reference));
            }
        }
        TableKind::AvoidFirstT { t, bs } => {
            if bs.is_empty() {
                return Err(Error::Invalid("empty B schedule".into()));
            }
            let s = PrimeSet::first_t(t);
            let reference = ratio_to_f64(&exact_density_es(table, &s, m)?);
            for &b in bs {
                let spec = BoxSpec::new(b, m)?;
                let rep = empirical_density_es(view, table, &s, &spec, mode, sampling, budget)?;
                rows.push(row_from(&rep, Some(t), reference));
            }
        }
        TableKind::FirstTSchedule { b, ts } => {
            if ts.is_empty() {
                return Err(Error::Invalid("empty t schedule".into()));
            }
            for &t in ts {
                let s = PrimeSet::first_t(t);
                let reference = ratio_to_f64(&exact_density_es(table, &s, m)?);
                let spec = BoxSpec::new(b, m)?;
                let rep = empirical_density_es(view, table, &s, &spec, mode, sampling, budget)?;
                rows.push(row_from(&rep, Some(t), reference));
            }
        }
    }
    Ok(rows)
}

fn row_from(rep: &DensityReport, t: Option<usize>, reference: f64) -> ConvergenceRow {
    ConvergenceRow {
        b: rep.b,
        t,
        estimate: rep.estimate,
        reference,
        abs_diff: (rep.estimate - reference).abs(),
        mode: rep.mode,
        seed: rep.seed,
    }
}

fn ratio_to_f64(r: &Ratio<BigInt>) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

/// CSV projection of a convergence table.
pub fn write_convergence_csv<W: io::Write>(w: &mut W, rows: &[ConvergenceRow]) -> io::Result<()> {
    writeln!(w, "B,t,estimate,reference,abs_diff,mode,seed")?;
    for r in rows {
        let t = r.t.map(|v| v.to_string()).unwrap_or_default();
        let seed = r.seed.map(|v| v.to_string()).unwrap_or_default();
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.b, t, r.estimate, r.reference, r.abs_diff, r.mode, seed
        )?;
    }
    Ok(())
}
