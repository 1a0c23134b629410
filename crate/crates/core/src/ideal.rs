use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{hnf_rows, IMat};
use crate::order::{AlgebraicInt, BasisView};

/// Nonzero integral ideal as a canonical row-style HNF basis of its
/// coordinate lattice: upper triangular, positive pivots, entries above
/// each pivot reduced mod the pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HNFIdeal {
    mat: IMat,
    stamp: u64,
}

/// Result of generating an ideal: the zero tuple spans (0), which has no
/// HNF basis and no positive norm, so it gets its own variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ideal {
    Zero,
    NonZero(HNFIdeal),
}

impl Ideal {
    pub fn as_hnf(&self) -> Option<&HNFIdeal> {
        match self {
            Ideal::Zero => None,
            Ideal::NonZero(i) => Some(i),
        }
    }
}

impl HNFIdeal {
    /// The whole order O as an ideal.
    pub fn unit(view: &BasisView) -> Self {
        HNFIdeal { mat: IMat::identity(view.degree()), stamp: view.stamp() }
    }

    pub fn matrix(&self) -> &IMat {
        &self.mat
    }

    pub fn stamp(&self) -> u64 {
        self.stamp
    }

    /// [O : I], the product of the HNF pivots.
    pub fn norm(&self) -> BigInt {
        let mut acc = BigInt::one();
        for i in 0..self.mat.rows {
            acc *= &self.mat[(i, i)];
        }
        acc
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Whether the coordinate vector lies in the row span, by forward
    /// substitution down the triangle.
    pub fn contains_coords(&self, coords: &[BigInt]) -> bool {
        lattice_contains(&self.mat, coords)
    }

    pub fn contains(&self, view: &BasisView, a: &AlgebraicInt) -> Result<bool> {
        if a.stamp() != self.stamp || view.stamp() != self.stamp {
            return Err(Error::BasisMismatch);
        }
        Ok(self.contains_coords(a.coords()))
    }

    /// Rows as plain vectors, for serialization.
    pub fn rows_vec(&self) -> Vec<Vec<BigInt>> {
        (0..self.mat.rows).map(|i| self.mat.row(i).to_vec()).collect()
    }
}

fn lattice_contains(mat: &IMat, coords: &[BigInt]) -> bool {
    let n = mat.rows;
    debug_assert_eq!(coords.len(), n);
    let mut v = coords.to_vec();
    for i in 0..n {
        let (q, r) = v[i].div_rem(&mat[(i, i)]);
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for j in i..n {
                let t = &q * &mat[(i, j)];
                v[j] -= t;
            }
        }
    }
    v.iter().all(Zero::is_zero)
}

/// The ideal generated by a tuple: the Z-span of { z_i * e_t } over all
/// generators and basis elements, put into HNF. The result is checked to
/// be closed under multiplication by every basis element.
pub fn ideal_from_generators(view: &BasisView, gens: &[AlgebraicInt]) -> Result<Ideal> {
    let n = view.degree();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for z in gens {
        if z.stamp() != view.stamp() {
            return Err(Error::BasisMismatch);
        }
        if z.coords().iter().all(Zero::is_zero) {
            continue;
        }
        for t in 0..n {
            rows.push(view.mult_by_basis(t).mul_vec(z.coords()));
        }
    }
    if rows.is_empty() {
        return Ok(Ideal::Zero);
    }
    let h = hnf_rows(&IMat::from_rows(rows));
    if h.rows != n {
        return Err(Error::Invalid(format!(
            "generator span has rank {} < {n}; not an ideal basis",
            h.rows
        )));
    }
    // Closure under the order action: e_t * (row) stays in the span.
    for i in 0..n {
        for t in 0..n {
            let image = view.mult_by_basis(t).mul_vec(h.row(i));
            if !lattice_contains(&h, &image) {
                return Err(Error::Invalid(
                    "generated lattice not closed under ring multiplication".into(),
                ));
            }
        }
    }
    Ok(Ideal::NonZero(HNFIdeal { mat: h, stamp: view.stamp() }))
}

/// Sum of ideals: HNF of the stacked bases.
pub fn ideal_add(a: &HNFIdeal, b: &HNFIdeal) -> Result<HNFIdeal> {
    if a.stamp != b.stamp {
        return Err(Error::BasisMismatch);
    }
    let mut rows = a.rows_vec();
    rows.extend(b.rows_vec());
    let h = hnf_rows(&IMat::from_rows(rows));
    Ok(HNFIdeal { mat: h, stamp: a.stamp })
}

/// The coprimality test: I_z = O, i.e. the generated ideal has norm 1.
/// The all-zero tuple generates (0) and is not coprime.
pub fn is_coprime_tuple(view: &BasisView, z: &[AlgebraicInt]) -> Result<bool> {
    match ideal_from_generators(view, z)? {
        Ideal::Zero => Ok(false),
        Ideal::NonZero(i) => Ok(i.is_unit()),
    }
}
