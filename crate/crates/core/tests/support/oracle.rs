//! Smoothness decided without Gröbner bases.
//!
//! Affine part: every singular point has `x` among the roots of
//! `gcd(res_y(f, f_y), res_y(f_x, f_y))`. Over each squarefree factor `h` of
//! that gcd the `y`-gcd of `f, f_x, f_y` is computed in `Q[x]/(h)[y]`,
//! splitting `h` whenever a coefficient is a zero divisor.
//! Along `L0`: univariate gcd of `F(0,v)`, `F_u(0,v)`, `F_v(0,v)` from a
//! chart built here by reindexing monomials.

use trigonal::algebra::{resultant_y, BiPoly, Rat, UniPoly};
use trigonal::curves::TrigonalForm;

/// A nontrivial factorization `h = g1 * g2` found while inverting.
struct Split(UniPoly, UniPoly);

fn reduce(a: &UniPoly, h: &UniPoly) -> UniPoly {
    a.div_rem(h).unwrap().1
}

/// `(g, s)` with `s a = g (mod b)` and `g = gcd(a, b)` monic.
fn half_xgcd(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).unwrap();
        let s = &s0 - &(&q * &s1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    let lc = r0.lc().recip();
    (r0.scale(&lc), s0.scale(&lc))
}

/// `None` if `a = 0 mod h`, else the inverse of `a` mod `h`.
fn classify_coeff(a: &UniPoly, h: &UniPoly) -> Result<Option<UniPoly>, Split> {
    let a = reduce(a, h);
    if a.is_zero() {
        return Ok(None);
    }
    let (g, s) = half_xgcd(&a, h);
    if g.is_constant() {
        Ok(Some(reduce(&s, h)))
    } else {
        let other = h.exact_div(&g).unwrap();
        Err(Split(g, other))
    }
}

/// Drops leading coefficients that vanish mod `h`; returns the inverse of
/// the new leading coefficient.
fn trim(p: &mut Vec<UniPoly>, h: &UniPoly) -> Result<Option<UniPoly>, Split> {
    while let Some(top) = p.last() {
        match classify_coeff(top, h)? {
            None => {
                p.pop();
            }
            Some(inv) => return Ok(Some(inv)),
        }
    }
    Ok(None)
}

fn y_rem(a: &[UniPoly], b: &[UniPoly], b_lc_inv: &UniPoly, h: &UniPoly) -> Result<Vec<UniPoly>, Split> {
    let mut a: Vec<UniPoly> = a.iter().map(|c| reduce(c, h)).collect();
    trim(&mut a, h)?;
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let factor = reduce(&(a.last().unwrap() * b_lc_inv), h);
        for (j, bj) in b.iter().enumerate() {
            a[shift + j] = reduce(&(&a[shift + j] - &(&factor * bj)), h);
        }
        a.pop();
        trim(&mut a, h)?;
    }
    Ok(a)
}

fn y_gcd(a: Vec<UniPoly>, b: Vec<UniPoly>, h: &UniPoly) -> Result<Vec<UniPoly>, Split> {
    let (mut a, mut b) = (a, b);
    trim(&mut a, h)?;
    loop {
        let Some(inv) = trim(&mut b, h)? else {
            return Ok(a);
        };
        let r = y_rem(&a, &b, &inv, h)?;
        a = b;
        b = r;
    }
}

fn attempt(h: &UniPoly, polys: &[Vec<UniPoly>]) -> Result<bool, Split> {
    let mut g: Vec<UniPoly> = Vec::new();
    for p in polys {
        g = y_gcd(g, p.clone(), h)?;
    }
    // zero or positive degree in y: a common root over every root of h
    Ok(g.len() != 1)
}

fn common_y_root(h: &UniPoly, polys: &[Vec<UniPoly>]) -> bool {
    match attempt(h, polys) {
        Ok(found) => found,
        Err(Split(g1, g2)) => common_y_root(&g1, polys) || common_y_root(&g2, polys),
    }
}

fn as_x_poly(p: &BiPoly) -> UniPoly {
    let coeffs = p.y_coeffs();
    coeffs.into_iter().next().unwrap_or_else(UniPoly::zero)
}

fn elimination(p: &BiPoly, fy: &BiPoly) -> UniPoly {
    if p.degree_y().unwrap_or(0) == 0 {
        as_x_poly(p)
    } else {
        resultant_y(p, fy).unwrap()
    }
}

/// Whether `f = f_x = f_y = 0` has a solution in `C^2`. Requires `s != 0`.
pub fn affine_singular(f: &TrigonalForm) -> bool {
    assert!(!f.s().is_zero());
    let poly = f.to_bipoly();
    let fx = poly.diff_x();
    let fy = poly.diff_y();
    let g = elimination(&poly, &fy).gcd(&elimination(&fx, &fy));
    if g.is_zero() {
        // f has a repeated factor of positive y-degree
        return true;
    }
    if g.is_constant() {
        return false;
    }
    let h = g.exact_div(&g.gcd(&g.derivative())).unwrap();
    let polys: Vec<Vec<UniPoly>> = [&poly, &fx, &fy].iter().map(|p| p.y_coeffs()).collect();
    common_y_root(&h, &polys)
}

/// Whether the curve is singular at some point of `u = 0` in the chart
/// `u = 1/x`, `v = y / x^(k+1)`.
pub fn l0_singular(f: &TrigonalForm) -> bool {
    let k = f.k() as u32;
    let chart = BiPoly::from_terms(TrigonalForm::monomials(f.k()).into_iter().map(|(i, j)| {
        let (i, j) = (i as u32, j as u32);
        ((3 * k + 3 - i - (k + 1) * j, j), f.coeff(i as usize, j as usize))
    }));
    let zero = Rat::zero();
    let c = chart.at_x(&zero);
    let cu = chart.diff_x().at_x(&zero);
    let cv = chart.diff_y().at_x(&zero);
    !c.gcd(&cu).gcd(&cv).is_constant()
}

pub fn regular(f: &TrigonalForm) -> bool {
    !f.s().is_zero() && !affine_singular(f) && !l0_singular(f)
}
