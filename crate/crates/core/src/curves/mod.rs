//! Curves in `|3 sigma_0|` on the Hirzebruch surface `F_(k+1)`, modelled by
//! the coefficient space `V^k`.
//!
//! The affine chart has coordinates `(x, y)`. The fibre at infinity `L0` is
//! covered by the chart `u = 1/x`, `v = y / x^(k+1)`. The negative section
//! `E` (`y = infinity`) never meets the curve when `s != 0`, so these two
//! charts suffice for smoothness.

mod form;
mod scroll;

pub use form::TrigonalForm;
pub use scroll::{dims, scroll_point, scroll_point_x_block, scroll_rank_ok};

use serde::{Deserialize, Serialize};

use crate::algebra::{root_multiplicities, unit_ideal_2var, BiPoly, Rat, UniPoly};
use crate::error::{Error, Result};

/// `F(u, v) = u^(3k+3) f(1/u, v/u^(k+1))`.
pub fn chart_at_infinity(f: &TrigonalForm) -> BiPoly {
    let k = f.k();
    let rev = |c: &[Rat], n: usize| UniPoly::new(c.to_vec()).reversed(n).expect("length fixed by k");
    BiPoly::from_y_coeffs(&[
        rev(f.q(), 3 * k + 3),
        rev(f.p(), 2 * k + 2),
        rev(f.r(), k + 1),
        UniPoly::constant(f.s().clone()),
    ])
}

/// `c(v) = s v^3 + r_(k+1) v^2 + p_(2k+2) v + q_(3k+3)`, the restriction of
/// the curve to `L0`.
pub fn l0_restriction(f: &TrigonalForm) -> UniPoly {
    let k = f.k();
    UniPoly::new(vec![
        f.q()[3 * k + 3].clone(),
        f.p()[2 * k + 2].clone(),
        f.r()[k + 1].clone(),
        f.s().clone(),
    ])
}

/// How the curve meets the fibre at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct L0Profile {
    pub restriction: UniPoly,
    pub distinct_points: usize,
    /// Sorted in decreasing order; sums to 3.
    pub multiplicities: Vec<usize>,
}

pub fn l0_profile(f: &TrigonalForm) -> Result<L0Profile> {
    if f.s().is_zero() {
        return Err(Error::DegenerateOnL0);
    }
    let restriction = l0_restriction(f);
    let multiplicities = root_multiplicities(&restriction)?;
    Ok(L0Profile {
        distinct_points: multiplicities.len(),
        multiplicities,
        restriction,
    })
}

/// Whether `f` defines a smooth curve on `F_(k+1)`: `s != 0`, smooth in the
/// affine chart, and smooth along `L0`.
pub fn is_regular(f: &TrigonalForm) -> bool {
    !f.s().is_zero() && smooth_on_l0(f) && affine_smooth(f)
}

/// No point of the curve on `L0` has vanishing gradient in the `(u, v)` chart.
pub fn smooth_on_l0(f: &TrigonalForm) -> bool {
    let k = f.k();
    let c = l0_restriction(f);
    if c.is_zero() {
        return false;
    }
    // dF/du at u = 0 is the coefficient of u^1
    let du = UniPoly::new(vec![
        f.q()[3 * k + 2].clone(),
        f.p()[2 * k + 1].clone(),
        f.r()[k].clone(),
    ]);
    c.gcd(&c.derivative()).gcd(&du).is_constant()
}

/// `{f = f_x = f_y = 0}` is empty in `C^2`, i.e. `1 in (f, f_x, f_y)`.
pub fn affine_smooth(f: &TrigonalForm) -> bool {
    let poly = f.to_bipoly();
    let fy = poly.diff_y();
    let fx = poly.diff_x();
    if f.s().is_zero() {
        return unit_ideal_2var(&[poly, fx, fy]);
    }
    // f_y has the nonzero constant 3s as leading coefficient in y, so f and
    // f_x can be reduced modulo f_y without changing the ideal.
    let f_red = reduce_mod_monic_y(&poly, &fy);
    let fx_red = reduce_mod_monic_y(&fx, &fy);
    unit_ideal_2var(&[fy, f_red, fx_red])
}

/// Remainder of `a` divided by `b` as polynomials in `y`, where the
/// `y`-leading coefficient of `b` is a nonzero constant.
fn reduce_mod_monic_y(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let bc = b.y_coeffs();
    let db = bc.len() - 1;
    let lead = bc[db].coeffs()[0].recip();
    let mut ac = a.y_coeffs();
    while ac.len() > db {
        let top = ac.len() - 1;
        let factor = ac[top].scale(&lead);
        for (j, bj) in bc.iter().enumerate() {
            let idx = top - db + j;
            ac[idx] = &ac[idx] - &(&factor * bj);
        }
        ac.pop();
        while ac.last().is_some_and(UniPoly::is_zero) {
            ac.pop();
        }
    }
    BiPoly::from_y_coeffs(&ac)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StratumKind {
    OnePoint,
    TwoPoint,
    ThreePoint,
}

impl StratumKind {
    pub fn from_points(n: usize) -> Result<StratumKind> {
        match n {
            1 => Ok(StratumKind::OnePoint),
            2 => Ok(StratumKind::TwoPoint),
            3 => Ok(StratumKind::ThreePoint),
            _ => Err(Error::Internal(format!("{n} points on L0"))),
        }
    }

    pub fn points(self) -> usize {
        match self {
            StratumKind::OnePoint => 1,
            StratumKind::TwoPoint => 2,
            StratumKind::ThreePoint => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StratumKind::OnePoint => "one-point",
            StratumKind::TwoPoint => "two-point",
            StratumKind::ThreePoint => "three-point",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinParity {
    Even,
    Odd,
}

impl SpinParity {
    /// Parity of `h^0(kL|_C) = k + 1`.
    pub fn for_k(k: usize) -> SpinParity {
        if (k + 1).is_multiple_of(2) {
            SpinParity::Even
        } else {
            SpinParity::Odd
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SpinParity::Even => "even",
            SpinParity::Odd => "odd",
        }
    }
}

/// The stratum of abelian differentials a regular form belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub kind: StratumKind,
    pub genus: usize,
    /// Zero orders: `(6k)`, `(4k, 2k)` or `(2k, 2k, 2k)`.
    pub signature: Vec<usize>,
    pub spin_parity: SpinParity,
}

impl Stratum {
    pub fn new(k: usize, kind: StratumKind) -> Stratum {
        let signature = match kind {
            StratumKind::OnePoint => vec![6 * k],
            StratumKind::TwoPoint => vec![4 * k, 2 * k],
            StratumKind::ThreePoint => vec![2 * k; 3],
        };
        Stratum {
            kind,
            genus: 3 * k + 1,
            signature,
            spin_parity: SpinParity::for_k(k),
        }
    }
}

/// Stratum of a regular form; refuses forms in the discriminant.
pub fn classify(f: &TrigonalForm) -> Result<Stratum> {
    if !is_regular(f) {
        return Err(Error::NotRegular);
    }
    let profile = l0_profile(f)?;
    Ok(Stratum::new(f.k(), StratumKind::from_points(profile.distinct_points)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    fn form(k: usize, t: &[(i64, u32, u32)]) -> TrigonalForm {
        TrigonalForm::from_ints(k, t).unwrap()
    }

    #[test]
    fn chart_examples() {
        let f = form(1, &[(1, 0, 3), (1, 6, 0), (1, 0, 0)]);
        assert_eq!(
            chart_at_infinity(&f),
            BiPoly::from_ints(&[(1, 0, 3), (1, 6, 0), (1, 0, 0)])
        );
        let f = form(1, &[(1, 0, 3), (1, 5, 0), (1, 1, 0)]);
        assert_eq!(
            chart_at_infinity(&f),
            BiPoly::from_ints(&[(1, 0, 3), (1, 1, 0), (1, 5, 0)])
        );
        let f = form(2, &[(1, 0, 3)]);
        assert_eq!(chart_at_infinity(&f), BiPoly::from_ints(&[(1, 0, 3)]));
    }

    #[test]
    fn chart_matches_substitution() {
        // u^(3k+3) f(1/u, v/u^(k+1)) checked monomial by monomial
        let f = form(2, &[(2, 0, 3), (-1, 3, 2), (5, 1, 2), (7, 6, 1), (1, 9, 0), (3, 4, 0)]);
        let k = 2u32;
        let expect = BiPoly::from_terms(
            f.to_bipoly()
                .terms()
                .map(|(&(i, j), c)| ((3 * k + 3 - i - (k + 1) * j, j), c.clone())),
        );
        assert_eq!(chart_at_infinity(&f), expect);
    }

    #[test]
    fn profile_examples() {
        let p = l0_profile(&form(1, &[(1, 0, 3), (1, 5, 0), (1, 1, 0)])).unwrap();
        assert_eq!(p.restriction, UniPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!((p.distinct_points, p.multiplicities), (1, vec![3]));

        let p = l0_profile(&form(1, &[(1, 0, 3), (1, 2, 2), (1, 5, 0), (1, 1, 0)])).unwrap();
        assert_eq!(p.restriction, UniPoly::from_ints(&[0, 0, 1, 1]));
        assert_eq!((p.distinct_points, p.multiplicities), (2, vec![2, 1]));

        let p = l0_profile(&form(1, &[(1, 0, 3), (1, 6, 0), (1, 0, 0)])).unwrap();
        assert_eq!((p.distinct_points, p.multiplicities), (3, vec![1, 1, 1]));

        assert_eq!(l0_profile(&form(1, &[(1, 6, 0)])), Err(Error::DegenerateOnL0));
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular(&form(1, &[(1, 0, 3), (1, 5, 0), (1, 1, 0)])));
        assert!(!is_regular(&form(1, &[(1, 0, 3), (1, 5, 0)])));
        assert!(is_regular(&form(1, &[(1, 0, 3), (1, 6, 0), (1, 0, 0)])));
        assert!(!is_regular(&form(1, &[(1, 6, 0), (1, 0, 0)])));
        // singular at infinity: triple root at v=0 and q_(3k+2) = 0
        assert!(!is_regular(&form(1, &[(1, 0, 3), (1, 1, 0), (1, 0, 0)])));
    }

    #[test]
    fn classify_examples() {
        let s = classify(&form(1, &[(1, 0, 3), (1, 5, 0), (1, 1, 0)])).unwrap();
        assert_eq!(
            s,
            Stratum {
                kind: StratumKind::OnePoint,
                genus: 4,
                signature: vec![6],
                spin_parity: SpinParity::Even
            }
        );
        let s = classify(&form(1, &[(1, 0, 3), (1, 6, 0), (1, 0, 0)])).unwrap();
        assert_eq!(s.kind, StratumKind::ThreePoint);
        assert_eq!(s.signature, vec![2, 2, 2]);
        let s = classify(&form(2, &[(1, 0, 3), (1, 8, 0), (1, 1, 0)])).unwrap();
        assert_eq!(
            s,
            Stratum {
                kind: StratumKind::OnePoint,
                genus: 7,
                signature: vec![12],
                spin_parity: SpinParity::Odd
            }
        );
        assert_eq!(classify(&form(1, &[(1, 0, 3), (1, 5, 0)])), Err(Error::NotRegular));
    }

    #[test]
    fn reduction_mod_fy_keeps_ideal_membership() {
        let f = form(1, &[(1, 0, 3), (3, 2, 2), (-2, 1, 1), (1, 5, 0), (1, 0, 0)]);
        let poly = f.to_bipoly();
        let fy = poly.diff_y();
        let red = reduce_mod_monic_y(&poly, &fy);
        assert!(red.degree_y().unwrap_or(0) < 2);
        // the difference is a multiple of f_y: check through the Groebner basis
        let gb = crate::algebra::groebner_basis(std::slice::from_ref(&fy));
        let diff = &poly - &red;
        let gb2 = crate::algebra::groebner_basis(&[fy, diff]);
        assert_eq!(gb, gb2);
    }
}
