//! Resultants with respect to `y` via the subresultant pseudo-remainder sequence.
//!
//! Polynomials are viewed in `Q[x][y]`. The sign convention is the Sylvester
//! determinant with the rows of `f` first.

use super::bipoly::BiPoly;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

type YPoly = Vec<UniPoly>;

fn trim(mut p: YPoly) -> YPoly {
    while p.last().is_some_and(UniPoly::is_zero) {
        p.pop();
    }
    p
}

fn ydeg(p: &YPoly) -> usize {
    p.len() - 1
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` in `Q[x][y]`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let n = ydeg(b);
    let lb = b[n].clone();
    let mut r = a.clone();
    let mut e = ydeg(a) + 1 - n;
    while !r.is_empty() && ydeg(&r) >= n {
        let shift = ydeg(&r) - n;
        let lr = r[ydeg(&r)].clone();
        let mut next: YPoly = r.iter().map(|c| c * &lb).collect();
        for (j, bj) in b.iter().enumerate() {
            next[j + shift] = &next[j + shift] - &(&lr * bj);
        }
        r = trim(next);
        e -= 1;
    }
    let f = lb.pow(e as u32);
    r.iter().map(|c| c * &f).collect()
}

/// `res_y(f, g)`, a polynomial in `x`.
///
/// Both inputs must have positive degree in `y`.
pub fn resultant_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly> {
    let a = trim(f.y_coeffs());
    let b = trim(g.y_coeffs());
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::InvalidArgument("resultant_y needs positive degree in y".into()));
    }
    Ok(subresultant(a, b))
}

fn subresultant(mut a: YPoly, mut b: YPoly) -> UniPoly {
    let odd = |d: usize| d % 2 == 1;
    let mut negate = false;
    if ydeg(&a) < ydeg(&b) {
        if odd(ydeg(&a)) && odd(ydeg(&b)) {
            negate = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = UniPoly::one();
    let mut h = UniPoly::one();
    loop {
        let delta = ydeg(&a) - ydeg(&b);
        if odd(ydeg(&a)) && odd(ydeg(&b)) {
            negate = !negate;
        }
        let r = trim(prem(&a, &b));
        a = b;
        if r.is_empty() {
            return UniPoly::zero();
        }
        let divisor = &g * &h.pow(delta as u32);
        b = r
            .iter()
            .map(|c| c.exact_div(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a[ydeg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d as u32)
                .exact_div(&h.pow(d as u32 - 1))
                .expect("subresultant division is exact"),
        };
        if ydeg(&b) == 0 {
            let da = ydeg(&a) as u32;
            let res = b[0]
                .pow(da)
                .exact_div(&h.pow(da - 1))
                .expect("subresultant division is exact");
            return if negate { -&res } else { res };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, Rat};

    /// Determinant of the formal Sylvester matrix of two univariate
    /// polynomials given by coefficient lists (index = degree), f-rows first.
    fn sylvester_det(f: &[Rat], g: &[Rat]) -> Rat {
        let m = f.len() - 1;
        let n = g.len() - 1;
        let size = m + n;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for i in 0..n {
            let mut row = vec![Rat::zero(); size];
            for (d, c) in f.iter().enumerate() {
                row[i + m - d] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![Rat::zero(); size];
            for (d, c) in g.iter().enumerate() {
                row[i + n - d] = c.clone();
            }
            rows.push(row);
        }
        det(rows)
    }

    fn det(mut a: Vec<Vec<Rat>>) -> Rat {
        let n = a.len();
        let mut sign = Rat::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rat::zero();
            };
            if piv != col {
                a.swap(piv, col);
                sign = -sign;
            }
            for r in col + 1..n {
                let fac = &a[r][col] / &a[col][col];
                let (pivot, rest) = a.split_at_mut(r);
                for (x, y) in rest[0][col..n].iter_mut().zip(&pivot[col][col..n]) {
                    *x -= &(&fac * y);
                }
            }
        }
        (0..n).map(|i| a[i][i].clone()).product::<Rat>() * sign
    }

    #[test]
    fn spec_examples() {
        let f = BiPoly::from_ints(&[(1, 0, 2), (-1, 1, 0)]);
        let g = BiPoly::from_ints(&[(1, 0, 1)]);
        assert_eq!(resultant_y(&f, &g).unwrap(), UniPoly::from_ints(&[0, -1]));

        let f = BiPoly::from_ints(&[(1, 0, 1), (-1, 0, 0)]);
        let g = BiPoly::from_ints(&[(1, 0, 1), (1, 0, 0)]);
        assert_eq!(resultant_y(&f, &g).unwrap(), UniPoly::from_ints(&[2]));

        let f = BiPoly::from_ints(&[(1, 0, 2), (-1, 1, 0)]);
        let g = BiPoly::from_ints(&[(1, 0, 2), (-2, 1, 0)]);
        assert_eq!(resultant_y(&f, &g).unwrap(), UniPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn constant_in_y_rejected() {
        let f = BiPoly::from_ints(&[(1, 3, 0)]);
        let g = BiPoly::from_ints(&[(1, 0, 1)]);
        assert!(resultant_y(&f, &g).is_err());
        assert!(resultant_y(&g, &f).is_err());
    }

    #[test]
    fn agrees_with_sylvester_determinant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let dy_f = rng.gen_range(1..=4u32);
            let dy_g = rng.gen_range(1..=4u32);
            let mut rand_poly = |dy: u32| {
                let mut terms = vec![(rng.gen_range(1..4i64), rng.gen_range(0..3u32), dy)];
                for _ in 0..5 {
                    terms.push((rng.gen_range(-3..4i64), rng.gen_range(0..4u32), rng.gen_range(0..dy)));
                }
                BiPoly::from_ints(&terms)
            };
            let f = rand_poly(dy_f);
            let g = rand_poly(dy_g);
            let res = resultant_y(&f, &g).unwrap();
            for x0 in [-2i64, -1, 0, 1, 3] {
                let x0 = rat(x0);
                let fc: Vec<Rat> = f.y_coeffs().iter().map(|c| c.eval(&x0)).collect();
                let gc: Vec<Rat> = g.y_coeffs().iter().map(|c| c.eval(&x0)).collect();
                assert_eq!(res.eval(&x0), sylvester_det(&fc, &gc), "f={f:?} g={g:?} x0={x0}");
            }
        }
    }

    #[test]
    fn vanishing_matches_common_root() {
        // f(x0, .) and g(x0, .) share the root y = x0 exactly when x0^2 = 4.
        let f = BiPoly::from_ints(&[(1, 0, 2), (-1, 2, 0)]); // y^2 - x^2
        let g = BiPoly::from_ints(&[(1, 0, 1), (-2, 0, 0)]); // y - 2
        let r = resultant_y(&f, &g).unwrap();
        for x0 in -4..=4i64 {
            assert_eq!(r.eval(&rat(x0)).is_zero(), x0 * x0 == 4);
        }
    }
}
