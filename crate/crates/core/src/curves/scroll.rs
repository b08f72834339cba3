//! The rational normal scroll `S_(2k, k-1)` and dimension bookkeeping.

use crate::algebra::Rat;
use crate::error::{Error, Result};

/// Affine parametrization `(1 : x : ... : x^n : y : xy : ... : x^m y)` with
/// `n = 2k`, `m = k - 1`; `3k + 1` coordinates.
pub fn scroll_point(k: usize, x: &Rat, y: &Rat) -> Vec<Rat> {
    let (n, m) = (2 * k, k - 1);
    let mut z: Vec<Rat> = (0..=n).map(|i| x.pow(i as i64)).collect();
    z.extend((0..=m).map(|i| x.pow(i as i64) * y));
    z
}

/// Variant of [`scroll_point`] whose second block starts with
/// `x` instead of `y`: `(1 : x : ... : x^n : x : xy : ... : x^m y)`.
///
/// Kept only to show that it does not land on the scroll for `k >= 2`.
pub fn scroll_point_x_block(k: usize, x: &Rat, y: &Rat) -> Vec<Rat> {
    let (n, m) = (2 * k, k - 1);
    let mut z: Vec<Rat> = (0..=n).map(|i| x.pow(i as i64)).collect();
    z.push(x.clone());
    z.extend((1..=m).map(|i| x.pow(i as i64) * y));
    z
}

/// Whether `z` lies on `S_(2k, k-1)`: every 2x2 minor of
///
/// ```text
/// z_0 .. z_(n-1)  z_(n+1) .. z_(n+m)
/// z_1 .. z_n      z_(n+2) .. z_(n+m+1)
/// ```
///
/// vanishes. `z` must have `3k + 1` entries for some `k >= 1`.
pub fn scroll_rank_ok(z: &[Rat]) -> Result<bool> {
    if z.len() < 4 || !(z.len() - 1).is_multiple_of(3) {
        return Err(Error::InvalidArgument(format!(
            "scroll coordinates need 3k+1 entries, got {}",
            z.len()
        )));
    }
    let k = (z.len() - 1) / 3;
    let (n, m) = (2 * k, k - 1);
    let cols: Vec<usize> = (0..n).chain(n + 1..n + m + 1).collect();
    let top: Vec<&Rat> = cols.iter().map(|&c| &z[c]).collect();
    let bottom: Vec<&Rat> = cols.iter().map(|&c| &z[c + 1]).collect();
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            if top[a] * bottom[b] != top[b] * bottom[a] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(dim H(2g-2), dim of the maximal-Maroni trigonal locus, dim of its
/// total-ramification divisor)` for genus `g = 3k + 1`.
pub fn dims(k: i64) -> Result<(i64, i64, i64)> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    Ok((6 * k + 1, 5 * k + 3, 5 * k + 2))
}
