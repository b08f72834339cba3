//! Sparse bivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rat::Rat;
use super::unipoly::UniPoly;

/// Sparse polynomial in two variables; key `(i, j)` is the monomial `x^i y^j`
/// (or `u^i v^j` in the chart at infinity). Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn constant(c: Rat) -> BiPoly {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(Rat::one())
    }

    /// `c * x^i * y^j`
    pub fn monomial(c: Rat, i: u32, j: u32) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> BiPoly {
        BiPoly::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> BiPoly {
        BiPoly::monomial(Rat::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(terms: I) -> BiPoly {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Builds a polynomial from integer triples `(coeff, i, j)`.
    pub fn from_ints(terms: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(c, i, j)| ((i, j), Rat::from_int(c))))
    }

    /// Embeds a univariate polynomial in `x`.
    pub fn from_x_poly(p: &UniPoly) -> BiPoly {
        BiPoly::from_y_coeffs(std::slice::from_ref(p))
    }

    /// Builds `sum_j coeffs[j](x) * y^j`.
    pub fn from_y_coeffs(coeffs: &[UniPoly]) -> BiPoly {
        let mut p = BiPoly::zero();
        for (j, cj) in coeffs.iter().enumerate() {
            for (i, c) in cj.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), c);
            }
        }
        p
    }

    /// Coefficients as a polynomial in `y` over `Q[x]`, index = power of `y`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut dense: Vec<Vec<Rat>> = vec![Vec::new(); dy as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut dense[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rat::zero());
            }
            row[i as usize] = c.clone();
        }
        dense.into_iter().map(UniPoly::new).collect()
    }

    fn add_term(&mut self, m: (u32, u32), c: &Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&m, a)| (m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn diff_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * Rat::from_int(i as i64))),
        )
    }

    pub fn diff_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * Rat::from_int(j as i64))),
        )
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i as i64) * y.pow(j as i64))
            .sum()
    }

    /// Substitutes `x := x_img`, `y := y_img` by full expansion.
    pub fn substitute(&self, x_img: &BiPoly, y_img: &BiPoly) -> BiPoly {
        let mut xpow: Vec<BiPoly> = vec![BiPoly::one()];
        let mut ypow: Vec<BiPoly> = vec![BiPoly::one()];
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            while xpow.len() <= i as usize {
                let next = xpow.last().unwrap() * x_img;
                xpow.push(next);
            }
            while ypow.len() <= j as usize {
                let next = ypow.last().unwrap() * y_img;
                ypow.push(next);
            }
            let t = (&xpow[i as usize] * &ypow[j as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    /// Restriction to `x = x0`, as a polynomial in `y`.
    pub fn at_x(&self, x0: &Rat) -> UniPoly {
        UniPoly::new(self.y_coeffs().iter().map(|c| c.eval(x0)).collect())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| format!("{c}*x^{i}*y^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, &-c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(a * b));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&Rat::from_int(-1))
    }
}
