//! Enumeration and sampling drivers plus the machine-word coprimality
//! arbiter. Tuple coordinates are i64 (boxes are validated to fit);
//! arithmetic that could overflow is checked and reported so callers can
//! fall back to arbitrary precision for the offending tuple.

use rayon::prelude::*;

use crate::rng::CounterRng;

/// Walk all `(2b)^digits` coordinate vectors with every entry in [-b, b),
/// last coordinate fastest, counting those accepted. `total` must equal
/// `(2b)^digits` and fit in u64 (callers check it against the budget).
pub fn exhaustive_count(
    b: u64,
    digits: usize,
    total: u64,
    decide: impl Fn(&[i64]) -> bool + Sync,
) -> u64 {
    let side = 2 * b;
    const CHUNK: u64 = 1 << 16;
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let lo = ci * CHUNK;
            let hi = (lo + CHUNK).min(total);
            let mut odo = decode_odometer(lo, side, digits);
            let mut coords: Vec<i64> = odo.iter().map(|&d| d as i64 - b as i64).collect();
            let mut hits = 0u64;
            for _ in lo..hi {
                if decide(&coords) {
                    hits += 1;
                }
                // increment, last digit fastest
                for k in (0..digits).rev() {
                    odo[k] += 1;
                    if odo[k] < side {
                        coords[k] = odo[k] as i64 - b as i64;
                        break;
                    }
                    odo[k] = 0;
                    coords[k] = -(b as i64);
                }
            }
            hits
        })
        .sum()
}

fn decode_odometer(index: u64, side: u64, digits: usize) -> Vec<u64> {
    let mut odo = vec![0u64; digits];
    let mut rest = index;
    for k in (0..digits).rev() {
        odo[k] = rest % side;
        rest /= side;
    }
    odo
}

/// Count accepted among `samples` independent tuples with coordinates
/// uniform on [-b, b). Sample i is a pure function of (seed, i), so the
/// count is identical for any thread count.
pub fn sampled_count(
    b: u64,
    digits: usize,
    samples: u64,
    seed: u64,
    decide: impl Fn(&[i64]) -> bool + Sync,
) -> u64 {
    let side = 2 * b;
    const CHUNK: u64 = 1 << 12;
    let chunks = samples.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let lo = ci * CHUNK;
            let hi = (lo + CHUNK).min(samples);
            let mut coords = vec![0i64; digits];
            let mut hits = 0u64;
            for i in lo..hi {
                let rng = CounterRng::new(seed, i);
                let mut k = 0u64;
                for slot in coords.iter_mut() {
                    let (v, used) = rng.uniform_at(k, side);
                    k += used;
                    *slot = v as i64 - b as i64;
                }
                if decide(&coords) {
                    hits += 1;
                }
            }
            hits
        })
        .sum()
}

/// Whether the Z-span of the `nrows` rows (stored flat, stride `n`) is all
/// of Z^n, i.e. the generated lattice has index 1. Euclidean column-by-
/// column elimination; the index is the product of the echelon pivots, so
/// the answer is yes exactly when every pivot is +-1. Returns None if an
/// intermediate product overflows i64 (caller retries in arbitrary
/// precision). The buffer is clobbered.
pub fn rows_span_unit_lattice(flat: &mut [i64], nrows: usize, n: usize) -> Option<bool> {
    debug_assert_eq!(flat.len(), nrows * n);
    let mut top = 0usize;
    for col in 0..n {
        loop {
            // Pick the row with the smallest nonzero |entry| in this column
            // among the rows below the placed pivots.
            let mut best: Option<usize> = None;
            for r in top..nrows {
                let v = flat[r * n + col];
                if v != 0
                    && best.map_or(true, |b| v.unsigned_abs() < flat[b * n + col].unsigned_abs())
                {
                    best = Some(r);
                }
            }
            let Some(pivot_row) = best else {
                // No nonzero entry left: rank < n, index is not even finite.
                return Some(false);
            };
            if pivot_row != top {
                for c in 0..n {
                    flat.swap(top * n + c, pivot_row * n + c);
                }
            }
            let pivot = flat[top * n + col];
            let mut done = true;
            for r in top + 1..nrows {
                let q = flat[r * n + col].div_euclid(pivot);
                if q != 0 {
                    for c in col..n {
                        let sub = flat[top * n + c].checked_mul(q)?;
                        flat[r * n + c] = flat[r * n + c].checked_sub(sub)?;
                    }
                }
                if flat[r * n + col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if flat[top * n + col].unsigned_abs() != 1 {
            // Pivot exceeds 1, so the index (product of all pivots) does too.
            return Some(false);
        }
        top += 1;
    }
    Some(true)
}
