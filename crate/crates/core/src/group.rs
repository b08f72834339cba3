//! The group `G` of substitutions `x -> a x + a0`, `y -> b y + B(x)` with
//! `deg B <= k+1`, and the three-dimensional torus acting diagonally on `V^k`.
//!
//! A group element acts on forms by substitution: `(g . f)(x, y) = f(g(x, y))`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{IntMatrix, Rat, UniPoly};
use crate::curves::TrigonalForm;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawG", into = "RawG")]
pub struct GElement {
    a: Rat,
    a0: Rat,
    b: Rat,
    /// `b_0 .. b_(k+1)`
    bcoef: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawG {
    a: Rat,
    a0: Rat,
    b: Rat,
    bcoef: Vec<Rat>,
}

impl TryFrom<RawG> for GElement {
    type Error = Error;
    fn try_from(raw: RawG) -> Result<GElement> {
        GElement::new(raw.a, raw.a0, raw.b, raw.bcoef)
    }
}

impl From<GElement> for RawG {
    fn from(g: GElement) -> RawG {
        RawG {
            a: g.a,
            a0: g.a0,
            b: g.b,
            bcoef: g.bcoef,
        }
    }
}

impl GElement {
    pub fn new(a: Rat, a0: Rat, b: Rat, bcoef: Vec<Rat>) -> Result<GElement> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidArgument("a and b must be nonzero".into()));
        }
        if bcoef.len() < 3 {
            return Err(Error::LengthMismatch(format!(
                "bcoef needs k+2 >= 3 entries, got {}",
                bcoef.len()
            )));
        }
        Ok(GElement { a, a0, b, bcoef })
    }

    pub fn identity(k: usize) -> GElement {
        GElement::affine_x(k, Rat::one(), Rat::zero())
    }

    /// `x -> a x + a0`, `y -> y`.
    pub fn affine_x(k: usize, a: Rat, a0: Rat) -> GElement {
        assert!(!a.is_zero(), "a must be nonzero");
        GElement {
            a,
            a0,
            b: Rat::one(),
            bcoef: vec![Rat::zero(); k + 2],
        }
    }

    /// `x -> x`, `y -> y + shift(x)`.
    pub fn y_shift(k: usize, shift: &UniPoly) -> Result<GElement> {
        Ok(GElement {
            a: Rat::one(),
            a0: Rat::zero(),
            b: Rat::one(),
            bcoef: shift.padded(k + 2)?,
        })
    }

    /// `x -> a x`, `y -> b y`.
    pub fn scaling(k: usize, a: Rat, b: Rat) -> Result<GElement> {
        GElement::new(a, Rat::zero(), b, vec![Rat::zero(); k + 2])
    }

    pub fn k(&self) -> usize {
        self.bcoef.len() - 2
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn a0(&self) -> &Rat {
        &self.a0
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn bcoef(&self) -> &[Rat] {
        &self.bcoef
    }

    pub fn shift_poly(&self) -> UniPoly {
        UniPoly::new(self.bcoef.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.a0.is_zero() && self.b.is_one() && self.bcoef.iter().all(Rat::is_zero)
    }

    /// Flat parameter list `[a, a0, b, b_0, ..., b_(k+1)]`.
    pub fn params(&self) -> Vec<Rat> {
        let mut v = vec![self.a.clone(), self.a0.clone(), self.b.clone()];
        v.extend(self.bcoef.iter().cloned());
        v
    }

    pub fn from_params(params: &[Rat]) -> Result<GElement> {
        if params.len() < 6 {
            return Err(Error::LengthMismatch(format!(
                "group element needs at least 6 parameters, got {}",
                params.len()
            )));
        }
        GElement::new(
            params[0].clone(),
            params[1].clone(),
            params[2].clone(),
            params[3..].to_vec(),
        )
    }
}

/// A random element with small rational parameters: `a` and `b` from
/// `{+-1, +-2, +-3, +-1/2}`, the rest with numerators in `-2..=2` and
/// denominators in `{1, 2}`.
pub fn random_small<R: Rng + ?Sized>(k: usize, rng: &mut R) -> GElement {
    const UNITS: [(i64, i64); 7] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (-3, 1), (1, 2)];
    let unit = |rng: &mut R| {
        let (n, d) = UNITS[rng.gen_range(0..UNITS.len())];
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        Rat::new(sign * n, d)
    };
    let a = unit(rng);
    let b = unit(rng);
    let small = |rng: &mut R| Rat::new(rng.gen_range(-2..=2), rng.gen_range(1..=2));
    let a0 = small(rng);
    let bcoef = (0..k + 2).map(|_| small(rng)).collect();
    GElement { a, a0, b, bcoef }
}

/// `f(a x + a0, b y + B(x))`, re-read as an element of `V^k`.
pub fn act(g: &GElement, f: &TrigonalForm) -> Result<TrigonalForm> {
    let k = f.k();
    if g.k() != k {
        return Err(Error::LengthMismatch(format!(
            "group element for k = {} applied to form with k = {k}",
            g.k()
        )));
    }
    let xs = UniPoly::linear(g.a.clone(), g.a0.clone());
    let r = f.r_poly().compose(&xs);
    let p = f.p_poly().compose(&xs);
    let q = f.q_poly().compose(&xs);
    let s = f.s();
    let bb = g.shift_poly();
    let bb2 = &bb * &bb;
    let b = &g.b;
    let b2 = b * b;

    let s3 = UniPoly::constant(s * Rat::from_int(3));
    // s Y^3 + r Y^2 + p Y + q with Y = b y + B
    let new_s = s * &b2 * b;
    let new_r = (&(&s3 * &bb) + &r).scale(&b2);
    let cross = (&r * &bb).scale(&Rat::from_int(2));
    let new_p = (&(&(&s3 * &bb2) + &cross) + &p).scale(b);
    let new_q = &(&(&(&bb2 * &bb).scale(s) + &(&r * &bb2)) + &(&p * &bb)) + &q;

    TrigonalForm::from_polys(k, new_s, &new_r, &new_p, &new_q)
        .map_err(|e| Error::Internal(format!("G-action left V^k: {e}")))
}

/// The element whose substitution is "apply `g2`, then `g1`" on forms:
/// `act(compose(g1, g2), f) == act(g1, act(g2, f))`.
pub fn compose(g1: &GElement, g2: &GElement) -> Result<GElement> {
    if g1.k() != g2.k() {
        return Err(Error::LengthMismatch("group elements for different k".into()));
    }
    // As maps of the plane this is g2 o g1.
    let a = &g2.a * &g1.a;
    let a0 = &(&g2.a * &g1.a0) + &g2.a0;
    let b = &g2.b * &g1.b;
    let inner = g2.shift_poly().compose_affine(&g1.a, &g1.a0);
    let shift = &g1.shift_poly().scale(&g2.b) + &inner;
    GElement::new(a, a0, b, shift.padded(g1.k() + 2)?)
}

/// A point of `(C*)^3` with rational coordinates.
///
/// Under [`TorusConvention::Lmr`] the fields are `(lambda, mu, rho)`; under
/// [`TorusConvention::Abc`] they are read as `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusElement {
    pub lambda: Rat,
    pub mu: Rat,
    pub rho: Rat,
}

impl TorusElement {
    pub fn new(lambda: Rat, mu: Rat, rho: Rat) -> Result<TorusElement> {
        if lambda.is_zero() || mu.is_zero() || rho.is_zero() {
            return Err(Error::InvalidArgument("torus coordinates must be nonzero".into()));
        }
        Ok(TorusElement { lambda, mu, rho })
    }

    pub fn identity() -> TorusElement {
        TorusElement {
            lambda: Rat::one(),
            mu: Rat::one(),
            rho: Rat::one(),
        }
    }

    pub fn coords(&self) -> [&Rat; 3] {
        [&self.lambda, &self.mu, &self.rho]
    }

    pub fn is_identity(&self) -> bool {
        self.coords().iter().all(|c| c.is_one())
    }

    fn monomial(&self, e: [i64; 3]) -> Rat {
        self.lambda.pow(e[0]) * self.mu.pow(e[1]) * self.rho.pow(e[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusConvention {
    /// `x^i y^j -> a^i b^j c x^i y^j`
    Abc,
    /// `x^i y^j -> lambda^(6k+4-2i-2kj-j) mu^(3k+3-i-kj-j) rho^(9k+6-3i-3kj-2j) x^i y^j`
    Lmr,
}

/// Exponents of `(lambda, mu, rho)` scaling the monomial `x^i y^j`.
pub fn lmr_exponents(k: usize, i: usize, j: usize) -> [i64; 3] {
    let (k, i, j) = (k as i64, i as i64, j as i64);
    [
        6 * k + 4 - 2 * i - 2 * k * j - j,
        3 * k + 3 - i - k * j - j,
        9 * k + 6 - 3 * i - 3 * k * j - 2 * j,
    ]
}

/// Exponents of `(a, b, c)` scaling the monomial `x^i y^j`.
pub fn abc_exponents(i: usize, j: usize) -> [i64; 3] {
    [i as i64, j as i64, 1]
}

pub fn act_torus(t: &TorusElement, f: &TrigonalForm, convention: TorusConvention) -> TrigonalForm {
    let k = f.k();
    let mut out = f.clone();
    for (i, j) in TrigonalForm::monomials(k) {
        let c = f.coeff(i, j);
        if c.is_zero() {
            continue;
        }
        let e = match convention {
            TorusConvention::Abc => abc_exponents(i, j),
            TorusConvention::Lmr => lmr_exponents(k, i, j),
        };
        out.set(i, j, c * t.monomial(e)).expect("monomial of V^k");
    }
    out
}

/// Rows are the `(lambda, mu, rho)`-exponents of `a`, `b` and `c`.
///
/// Fails with an internal error if the matrix is not unimodular.
pub fn torus_translate(k: usize) -> Result<IntMatrix> {
    let k = k as i64;
    let m = IntMatrix::from_rows(
        &[
            vec![-2, -1, -3],
            vec![-(2 * k + 1), -(k + 1), -(3 * k + 2)],
            vec![6 * k + 4, 3 * k + 3, 9 * k + 6],
        ],
        3,
    )?;
    let det = m.determinant()?;
    if det != 1.into() && det != (-1).into() {
        return Err(Error::Internal(format!(
            "torus translation matrix has determinant {det} for k = {k}"
        )));
    }
    Ok(m)
}

fn apply_exponent_matrix(m: &IntMatrix, t: &TorusElement) -> Result<TorusElement> {
    let row = |i: usize| -> Result<[i64; 3]> {
        let mut e = [0i64; 3];
        for (j, slot) in e.iter_mut().enumerate() {
            *slot = (&m[(i, j)])
                .try_into()
                .map_err(|_| Error::Internal("exponent overflow".into()))?;
        }
        Ok(e)
    };
    TorusElement::new(t.monomial(row(0)?), t.monomial(row(1)?), t.monomial(row(2)?))
}

/// `(lambda, mu, rho) -> (a, b, c)`.
pub fn lmr_to_abc(k: usize, t: &TorusElement) -> Result<TorusElement> {
    apply_exponent_matrix(&torus_translate(k)?, t)
}

/// `(a, b, c) -> (lambda, mu, rho)`, through the integer inverse matrix.
pub fn abc_to_lmr(k: usize, t: &TorusElement) -> Result<TorusElement> {
    apply_exponent_matrix(&torus_translate(k)?.unimodular_inverse()?, t)
}
