use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IMat;
use crate::poly::{irreducibility_evidence, IntPolynomial, IrreducibilityEvidence};
use crate::rng::splitmix64;

/// Primes searched for an irreducibility witness when an order is built.
pub const DEFAULT_WITNESS_BUDGET: u64 = 200;

/// The monogenic order Z[theta] for theta a root of a monic integer
/// polynomial f of degree n. Elements live in Z^n via the power basis
/// 1, theta, ..., theta^(n-1).
#[derive(Debug)]
pub struct NumberFieldOrder {
    f: IntPolynomial,
    n: usize,
    /// powers[k] = power-basis coordinates of theta^k, k = 0..2n-2; the
    /// multiplication tensor is table(i,j) = powers[i+j].
    powers: Vec<Vec<BigInt>>,
    disc_f: BigInt,
    evidence: IrreducibilityEvidence,
}

impl NumberFieldOrder {
    pub fn new(f: IntPolynomial) -> Result<Self> {
        let disc_f = f.discriminant()?; // rejects non-monic and degree 0
        let n = f.degree().unwrap();
        let evidence = irreducibility_evidence(&f, DEFAULT_WITNESS_BUDGET)?;

        // Powers of theta by the shift-and-reduce recurrence.
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(2 * n - 1);
        let mut cur = vec![BigInt::zero(); n];
        cur[0] = BigInt::one();
        powers.push(cur.clone());
        for _ in 1..(2 * n - 1) {
            let lead = cur[n - 1].clone();
            let mut next = vec![BigInt::zero(); n];
            for t in 1..n {
                next[t] = cur[t - 1].clone();
            }
            if !lead.is_zero() {
                // x^n = -(f_0 + f_1 x + ... + f_{n-1} x^{n-1})
                for (t, slot) in next.iter_mut().enumerate() {
                    *slot -= &lead * f.coeff(t);
                }
            }
            powers.push(next.clone());
            cur = next;
        }

        // Cross-check every row against an independent polynomial reduction.
        for (k, row) in powers.iter().enumerate() {
            let mut mono = vec![BigInt::zero(); k + 1];
            mono[k] = BigInt::one();
            let reduced = IntPolynomial::new(mono).rem_by_monic(&f);
            for t in 0..n {
                assert_eq!(row[t], reduced.coeff(t), "power table row {k} disagrees at {t}");
            }
        }

        Ok(NumberFieldOrder { f, n, powers, disc_f, evidence })
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn disc_f(&self) -> &BigInt {
        &self.disc_f
    }

    pub fn evidence(&self) -> &IrreducibilityEvidence {
        &self.evidence
    }

    /// Power-basis coordinates of theta^i * theta^j.
    pub fn table(&self, i: usize, j: usize) -> &[BigInt] {
        &self.powers[i + j]
    }

    /// All rows theta^k, k = 0..2n-2.
    pub fn power_rows(&self) -> &[Vec<BigInt>] {
        &self.powers
    }

    /// Product in power-basis coordinates.
    pub fn mul_power(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        let mut c = vec![BigInt::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = ai * bj;
                for (t, pt) in self.powers[i + j].iter().enumerate() {
                    c[t] += &prod * pt;
                }
            }
        }
        c
    }

    /// Matrix of multiplication by a (power coords) on the power basis;
    /// its determinant is the field norm.
    fn mul_matrix_power(&self, a: &[BigInt]) -> IMat {
        let n = self.n;
        let mut m = IMat::zero(n, n);
        for j in 0..n {
            let mut theta_j = vec![BigInt::zero(); n];
            theta_j[j] = BigInt::one();
            let col = self.mul_power(a, &theta_j);
            for s in 0..n {
                m[(s, j)] = col[s].clone();
            }
        }
        m
    }
}

/// A Z-basis E of the order, stored as the unimodular transform U taking
/// power-basis coordinates to E-coordinates.
#[derive(Debug, Clone)]
pub struct IntegralBasis {
    u: IMat,
    u_inv: IMat,
}

impl IntegralBasis {
    pub fn power(n: usize) -> Self {
        IntegralBasis { u: IMat::identity(n), u_inv: IMat::identity(n) }
    }

    /// Build from basis rows: row t holds the power-basis coordinates of
    /// e_t. Rejects non-square and non-unimodular input.
    pub fn from_rows(rows: &IMat) -> Result<Self> {
        if rows.rows != rows.cols {
            return Err(Error::Invalid(format!(
                "basis matrix must be square, got {}x{}",
                rows.rows,
                rows.cols
            )));
        }
        // E-coords a map to power coords R^T a, so U = (R^T)^(-1).
        let rt = rows.transpose();
        match rt.inverse_unimodular() {
            Some(u) => Ok(IntegralBasis { u, u_inv: rt }),
            None => Err(Error::NonUnimodular(rows.det())),
        }
    }

    pub fn dim(&self) -> usize {
        self.u.rows
    }

    /// Power coords -> E coords.
    pub fn to_e(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.u.mul_vec(v)
    }

    /// E coords -> power coords.
    pub fn to_power(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.u_inv.mul_vec(v)
    }

    pub fn transform(&self) -> &IMat {
        &self.u
    }

    pub fn transform_inv(&self) -> &IMat {
        &self.u_inv
    }
}

/// Element of the order, held as exact integer coordinates in the basis
/// that created it. The stamp ties it to that basis so cross-basis
/// arithmetic is rejected instead of silently misread.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicInt {
    coords: Vec<BigInt>,
    stamp: u64,
}

impl AlgebraicInt {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn stamp(&self) -> u64 {
        self.stamp
    }
}

/// Sparse integer polynomial in the coordinate variables a_1..a_n, used
/// for the symbolic norm form.
pub type NormForm = BTreeMap<Vec<u16>, BigInt>;

/// An order viewed through a fixed Z-basis: all coordinate I/O (elements,
/// boxes, enumeration) is interpreted in this basis. Ring results are
/// basis-independent; coordinates are not.
#[derive(Debug)]
pub struct BasisView<'a> {
    order: &'a NumberFieldOrder,
    basis: IntegralBasis,
    /// mult_by[t] = matrix of multiplication by e_t acting on E-coordinate
    /// vectors.
    mult_by: Vec<IMat>,
    one_coords: Vec<BigInt>,
    norm_form: NormForm,
    norm_l1: BigInt,
    stamp: u64,
}

impl<'a> BasisView<'a> {
    /// The default view: E = power basis.
    pub fn power_basis(order: &'a NumberFieldOrder) -> Self {
        Self::with_basis(order, IntegralBasis::power(order.degree()))
            .expect("power basis is always unimodular")
    }

    /// View through a different Z-basis; the basis must match the order's
    /// degree.
    pub fn with_basis(order: &'a NumberFieldOrder, basis: IntegralBasis) -> Result<Self> {
        let n = order.degree();
        if basis.dim() != n {
            return Err(Error::Invalid(format!(
                "basis dimension {} does not match field degree {n}",
                basis.dim()
            )));
        }

        // Structure constants in E: column j of mult_by[t] holds the
        // E-coords of e_t * e_j.
        let e_power: Vec<Vec<BigInt>> = (0..n)
            .map(|t| {
                let mut unit = vec![BigInt::zero(); n];
                unit[t] = BigInt::one();
                basis.to_power(&unit)
            })
            .collect();
        let mut mult_by = Vec::with_capacity(n);
        for t in 0..n {
            let mut m = IMat::zero(n, n);
            for j in 0..n {
                let prod = order.mul_power(&e_power[t], &e_power[j]);
                for (s, c) in basis.to_e(&prod).into_iter().enumerate() {
                    m[(s, j)] = c;
                }
            }
            mult_by.push(m);
        }

        let mut one_power = vec![BigInt::zero(); n];
        one_power[0] = BigInt::one();
        let one_coords = basis.to_e(&one_power);

        let norm_form = symbolic_norm_form(&mult_by, n);
        let norm_l1 = norm_form.values().map(Signed::abs).sum();

        let stamp = view_stamp(order, &basis);
        Ok(BasisView { order, basis, mult_by, one_coords, norm_form, norm_l1, stamp })
    }

    pub fn order(&self) -> &'a NumberFieldOrder {
        self.order
    }

    pub fn basis(&self) -> &IntegralBasis {
        &self.basis
    }

    pub fn degree(&self) -> usize {
        self.order.degree()
    }

    pub fn stamp(&self) -> u64 {
        self.stamp
    }

    /// Matrix of multiplication by e_t on E-coordinates.
    pub fn mult_by_basis(&self, t: usize) -> &IMat {
        &self.mult_by[t]
    }

    pub fn one(&self) -> AlgebraicInt {
        AlgebraicInt { coords: self.one_coords.clone(), stamp: self.stamp }
    }

    pub fn zero(&self) -> AlgebraicInt {
        AlgebraicInt { coords: vec![BigInt::zero(); self.degree()], stamp: self.stamp }
    }

    /// theta itself (power coords (0,1,0,...)), converted to this basis.
    pub fn theta(&self) -> AlgebraicInt {
        let n = self.degree();
        let mut v = vec![BigInt::zero(); n];
        if n > 1 {
            v[1] = BigInt::one();
        } else {
            // Degree 1: theta is the integer root of f, i.e. -f(0).
            v[0] = -self.order.defining_poly().coeff(0);
        }
        self.from_power_coords(&v)
    }

    /// Wrap raw coordinates given in this view's basis.
    pub fn element(&self, coords: Vec<BigInt>) -> Result<AlgebraicInt> {
        if coords.len() != self.degree() {
            return Err(Error::Invalid(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(AlgebraicInt { coords, stamp: self.stamp })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<AlgebraicInt> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_integer(&self, k: i64) -> AlgebraicInt {
        let coords = self.one_coords.iter().map(|c| c * k).collect();
        AlgebraicInt { coords, stamp: self.stamp }
    }

    pub fn from_power_coords(&self, v: &[BigInt]) -> AlgebraicInt {
        AlgebraicInt { coords: self.basis.to_e(v), stamp: self.stamp }
    }

    pub fn to_power_coords(&self, a: &AlgebraicInt) -> Result<Vec<BigInt>> {
        self.check(a)?;
        Ok(self.basis.to_power(&a.coords))
    }

    fn check(&self, a: &AlgebraicInt) -> Result<()> {
        if a.stamp != self.stamp {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &AlgebraicInt, b: &AlgebraicInt) -> Result<AlgebraicInt> {
        self.check(a)?;
        self.check(b)?;
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        Ok(AlgebraicInt { coords, stamp: self.stamp })
    }

    pub fn sub(&self, a: &AlgebraicInt, b: &AlgebraicInt) -> Result<AlgebraicInt> {
        self.check(a)?;
        self.check(b)?;
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        Ok(AlgebraicInt { coords, stamp: self.stamp })
    }

    pub fn neg(&self, a: &AlgebraicInt) -> Result<AlgebraicInt> {
        self.check(a)?;
        Ok(AlgebraicInt { coords: a.coords.iter().map(|x| -x).collect(), stamp: self.stamp })
    }

    /// Ring product, computed through the power-basis multiplication table.
    pub fn mul(&self, a: &AlgebraicInt, b: &AlgebraicInt) -> Result<AlgebraicInt> {
        self.check(a)?;
        self.check(b)?;
        let pa = self.basis.to_power(&a.coords);
        let pb = self.basis.to_power(&b.coords);
        let prod = self.order.mul_power(&pa, &pb);
        Ok(AlgebraicInt { coords: self.basis.to_e(&prod), stamp: self.stamp })
    }

    /// Field norm: determinant of multiplication by a. Exact, and
    /// independent of the viewing basis.
    pub fn norm(&self, a: &AlgebraicInt) -> Result<BigInt> {
        self.check(a)?;
        let pa = self.basis.to_power(&a.coords);
        Ok(self.order.mul_matrix_power(&pa).det())
    }

    /// Whether every coordinate lies in [-B, B).
    pub fn box_contains(&self, a: &AlgebraicInt, b: u64) -> Result<bool> {
        self.check(a)?;
        let lo = -BigInt::from(b);
        let hi = BigInt::from(b);
        Ok(a.coords.iter().all(|c| *c >= lo && *c < hi))
    }

    /// a is the ring element 1 or -1.
    pub fn is_pm_one(&self, a: &AlgebraicInt) -> Result<bool> {
        self.check(a)?;
        let plus = a.coords == self.one_coords;
        let minus = a.coords.iter().zip(&self.one_coords).all(|(x, y)| *x == -y);
        Ok(plus || minus)
    }

    pub fn is_zero_elem(&self, a: &AlgebraicInt) -> Result<bool> {
        self.check(a)?;
        Ok(a.coords.iter().all(Zero::is_zero))
    }

    /// The norm as a degree-n form in the E-coordinates.
    pub fn norm_form(&self) -> &NormForm {
        &self.norm_form
    }

    /// Sum of absolute coefficients of the norm form: the effective
    /// constant C with |N(a)| <= C * B^n on the box O[B,E].
    pub fn norm_form_l1(&self) -> &BigInt {
        &self.norm_l1
    }

    /// Evaluate the norm form at given coordinates (test oracle against
    /// `norm`).
    pub fn norm_form_eval(&self, coords: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (exps, c) in &self.norm_form {
            let mut term = c.clone();
            for (t, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &coords[t];
                }
            }
            total += term;
        }
        total
    }
}

/// Fingerprint of (defining polynomial, basis transform); FNV-1a over the
/// decimal coordinate dumps, mixed through splitmix.
fn view_stamp(order: &NumberFieldOrder, basis: &IntegralBasis) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |s: &str| {
        for byte in s.bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    for c in order.defining_poly().coeffs() {
        eat(&c.to_string());
        eat(";");
    }
    eat("|");
    let u = basis.transform();
    for i in 0..u.rows {
        for j in 0..u.cols {
            eat(&u[(i, j)].to_string());
            eat(",");
        }
    }
    splitmix64(h)
}

/// Determinant of the multiplication-by-a matrix with a left symbolic:
/// entry (s,j) is the linear form sum_t a_t * mult_by[t][(s,j)]. Laplace
/// expansion memoized on the set of unused columns.
fn symbolic_norm_form(mult_by: &[IMat], n: usize) -> NormForm {
    // linear[s][j][t] = coefficient of a_t in M(a)_{s,j}
    let linear: Vec<Vec<Vec<BigInt>>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|j| (0..n).map(|t| mult_by[t][(s, j)].clone()).collect())
                .collect()
        })
        .collect();
    let mut memo: HashMap<u32, NormForm> = HashMap::new();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    det_rec(&linear, n, full, &mut memo)
}

fn det_rec(
    linear: &[Vec<Vec<BigInt>>],
    n: usize,
    mask: u32,
    memo: &mut HashMap<u32, NormForm>,
) -> NormForm {
    if mask == 0 {
        let mut unit = NormForm::new();
        unit.insert(vec![0u16; n], BigInt::one());
        return unit;
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let row = n - mask.count_ones() as usize;
    let mut acc = NormForm::new();
    let mut pos = 0u32;
    for j in 0..n {
        if mask & (1 << j) == 0 {
            continue;
        }
        let sub = det_rec(linear, n, mask & !(1 << j), memo);
        let form = &linear[row][j];
        let negate = pos % 2 == 1;
        for (exps, c) in &sub {
            for (t, coef) in form.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let mut e = exps.clone();
                e[t] += 1;
                let term = if negate { -(coef * c) } else { coef * c };
                *acc.entry(e).or_insert_with(BigInt::zero) += term;
            }
        }
        pos += 1;
    }
    acc.retain(|_, v| !v.is_zero());
    memo.insert(mask, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> NumberFieldOrder {
        NumberFieldOrder::new(s.parse().unwrap()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gaussian_table_entry() {
        let o = order("x^2+1");
        assert_eq!(o.degree(), 2);
        assert_eq!(o.table(1, 1), &big(&[-1, 0])[..]);
        assert_eq!(*o.disc_f(), BigInt::from(-4));
    }

    #[test]
    fn rational_case_degree_one() {
        let o = order("x");
        assert_eq!(o.degree(), 1);
        let v = BasisView::power_basis(&o);
        let a = v.from_integer(7);
        assert_eq!(v.norm(&a).unwrap(), BigInt::from(7));
        assert_eq!(v.theta(), v.from_integer(0));
    }

    #[test]
    fn golden_ratio_table_entry() {
        let o = order("x^2-x-1");
        assert_eq!(o.table(1, 1), &big(&[1, 1])[..]);
    }

    #[test]
    fn gaussian_products() {
        let o = order("x^2+1");
        let v = BasisView::power_basis(&o);
        let a = v.element(big(&[1, 1])).unwrap(); // 1+i
        let b = v.element(big(&[1, -1])).unwrap(); // 1-i
        assert_eq!(v.mul(&a, &b).unwrap(), v.from_integer(2));
        // theta^2 = theta + 1 in the golden ratio order
        let o2 = order("x^2-x-1");
        let v2 = BasisView::power_basis(&o2);
        let th = v2.theta();
        assert_eq!(v2.mul(&th, &th).unwrap(), v2.element(big(&[1, 1])).unwrap());
    }

    #[test]
    fn mul_identity() {
        let o = order("x^3-x-1");
        let v = BasisView::power_basis(&o);
        let a = v.element(big(&[4, -7, 2])).unwrap();
        assert_eq!(v.mul(&a, &v.one()).unwrap(), a);
    }

    #[test]
    fn norm_examples() {
        let o = order("x^2+1");
        let v = BasisView::power_basis(&o);
        let a = v.element(big(&[3, 4])).unwrap();
        assert_eq!(v.norm(&a).unwrap(), BigInt::from(25));
        assert_eq!(v.norm(&v.one()).unwrap(), BigInt::from(1));
        assert_eq!(v.norm(&v.zero()).unwrap(), BigInt::from(0));
    }

    #[test]
    fn norm_multiplicative_samples() {
        let o = order("x^3-x-1");
        let v = BasisView::power_basis(&o);
        let pairs = [([1, 2, 3], [-4, 0, 5]), ([7, -1, 0], [2, 2, -3]), ([0, 0, 1], [1, 1, 1])];
        for (ca, cb) in pairs {
            let a = v.element_i64(&ca).unwrap();
            let b = v.element_i64(&cb).unwrap();
            let ab = v.mul(&a, &b).unwrap();
            assert_eq!(v.norm(&ab).unwrap(), v.norm(&a).unwrap() * v.norm(&b).unwrap());
        }
    }

    #[test]
    fn basis_change_example() {
        // E' = {1, -1+i}: rows in power coords.
        let o = order("x^2+1");
        let rows = IMat::from_rows(vec![big(&[1, 0]), big(&[-1, 1])]);
        let basis = IntegralBasis::from_rows(&rows).unwrap();
        let v = BasisView::with_basis(&o, basis).unwrap();
        // i = 1*e1 + 1*e2
        let i_elem = v.from_power_coords(&big(&[0, 1]));
        assert_eq!(i_elem.coords(), &big(&[1, 1])[..]);
        // ring results unchanged: N(i) = 1, i^2 = -1
        assert_eq!(v.norm(&i_elem).unwrap(), BigInt::from(1));
        let sq = v.mul(&i_elem, &i_elem).unwrap();
        assert_eq!(sq, v.from_integer(-1));
    }

    #[test]
    fn non_unimodular_rejected() {
        let rows = IMat::from_rows(vec![big(&[2, 0]), big(&[0, 1])]);
        match IntegralBasis::from_rows(&rows) {
            Err(Error::NonUnimodular(d)) => assert_eq!(d, BigInt::from(2)),
            other => panic!("expected NonUnimodular, got {other:?}"),
        }
    }

    #[test]
    fn basis_mismatch_detected() {
        let o = order("x^2+1");
        let v1 = BasisView::power_basis(&o);
        let rows = IMat::from_rows(vec![big(&[1, 0]), big(&[-1, 1])]);
        let v2 = BasisView::with_basis(&o, IntegralBasis::from_rows(&rows).unwrap()).unwrap();
        let a = v1.element(big(&[1, 1])).unwrap();
        let b = v2.element(big(&[1, 1])).unwrap();
        assert!(matches!(v1.add(&a, &b), Err(Error::BasisMismatch)));
        assert!(matches!(v2.norm(&a), Err(Error::BasisMismatch)));
    }

    #[test]
    fn box_endpoints() {
        let o = order("x^2+1");
        let v = BasisView::power_basis(&o);
        let left = v.element(big(&[-5, 0])).unwrap();
        let right = v.element(big(&[5, 0])).unwrap();
        assert!(v.box_contains(&left, 5).unwrap());
        assert!(!v.box_contains(&right, 5).unwrap());
        assert!(v.box_contains(&v.zero(), 1).unwrap());
    }

    #[test]
    fn round_trip_basis_coords() {
        let o = order("x^3-x-1");
        let rows = IMat::from_rows(vec![big(&[1, 0, 0]), big(&[2, 1, 0]), big(&[-3, 5, 1])]);
        let v = BasisView::with_basis(&o, IntegralBasis::from_rows(&rows).unwrap()).unwrap();
        let a = v.element(big(&[9, -2, 4])).unwrap();
        let p = v.to_power_coords(&a).unwrap();
        assert_eq!(v.from_power_coords(&p), a);
    }

    #[test]
    fn norm_form_gaussian() {
        let o = order("x^2+1");
        let v = BasisView::power_basis(&o);
        // N(a + bi) = a^2 + b^2: coefficient mass 2.
        assert_eq!(*v.norm_form_l1(), BigInt::from(2));
        let rows = IMat::from_rows(vec![big(&[1, 0]), big(&[-1, 1])]);
        let v2 = BasisView::with_basis(&o, IntegralBasis::from_rows(&rows).unwrap()).unwrap();
        // In E' = {1, -1+i}: N(a e1 + b e2) = (a-b)^2 + b^2 = a^2 - 2ab + 2b^2.
        assert_eq!(*v2.norm_form_l1(), BigInt::from(5));
    }

    #[test]
    fn norm_form_matches_norm() {
        let o = order("x^3-x-1");
        let rows = IMat::from_rows(vec![big(&[1, 0, 0]), big(&[1, 1, 0]), big(&[0, 1, 1])]);
        let v = BasisView::with_basis(&o, IntegralBasis::from_rows(&rows).unwrap()).unwrap();
        for coords in [[1i64, 2, 3], [-4, 0, 1], [5, -5, 2], [0, 0, 0]] {
            let a = v.element_i64(&coords).unwrap();
            assert_eq!(v.norm_form_eval(a.coords()), v.norm(&a).unwrap());
        }
    }

    #[test]
    fn norm_bound_on_box() {
        let o = order("x^2-2");
        let v = BasisView::power_basis(&o);
        let b = 6u64;
        let c = v.norm_form_l1().clone();
        let bound = &c * BigInt::from(b).pow(2);
        for x in -(b as i64)..(b as i64) {
            for y in -(b as i64)..(b as i64) {
                let a = v.element_i64(&[x, y]).unwrap();
                assert!(v.norm(&a).unwrap().abs() <= bound);
            }
        }
    }

    #[test]
    fn pm_one_detection() {
        let o = order("x^2+1");
        let rows = IMat::from_rows(vec![big(&[1, 0]), big(&[-1, 1])]);
        let v = BasisView::with_basis(&o, IntegralBasis::from_rows(&rows).unwrap()).unwrap();
        assert!(v.is_pm_one(&v.from_integer(1)).unwrap());
        assert!(v.is_pm_one(&v.from_integer(-1)).unwrap());
        assert!(!v.is_pm_one(&v.from_power_coords(&big(&[0, 1]))).unwrap());
        assert!(!v.is_pm_one(&v.zero()).unwrap());
    }
}
