//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> UniPoly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::new(vec![c])
    }

    /// `c * x^d`
    pub fn monomial(c: Rat, d: usize) -> UniPoly {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        UniPoly::new(coeffs)
    }

    /// `a * x + b`
    pub fn linear(a: Rat, b: Rat) -> UniPoly {
        UniPoly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    ///
    /// Fails if the polynomial has degree `>= len`.
    pub fn padded(&self, len: usize) -> Result<Vec<Rat>> {
        if self.coeffs.len() > len {
            return Err(Error::DegreeBound(format!(
                "degree {} exceeds bound {}",
                self.coeffs.len() - 1,
                len.saturating_sub(1)
            )));
        }
        let mut out = self.coeffs.clone();
        out.resize(len, Rat::zero());
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let inv = d.lc().recip();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = &c * dj;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &(&acc * g) + &UniPoly::constant(c.clone()))
    }

    /// `self(a x + b)`
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> UniPoly {
        self.compose(&UniPoly::linear(a.clone(), b.clone()))
    }

    /// Degree-reversal with respect to the formal degree `n`:
    /// `sum c_i x^(n-i)`.
    pub fn reversed(&self, n: usize) -> Result<UniPoly> {
        let mut c = self.padded(n + 1)?;
        c.reverse();
        Ok(UniPoly::new(c))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `c / gcd(c, c')`, made monic. Its degree is the number of distinct
/// complex roots of `c`.
pub fn squarefree_part(c: &UniPoly) -> Result<UniPoly> {
    if c.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = c.gcd(&c.derivative());
    Ok(c.exact_div(&g)?.monic())
}

/// Yun's squarefree decomposition: monic `(a_i, i)` with `c = lc * prod a_i^i`,
/// the `a_i` pairwise coprime and squarefree. Factors equal to 1 are omitted.
pub fn squarefree_decomposition(c: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if c.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if c.is_constant() {
        return Ok(out);
    }
    let d = c.derivative();
    let a0 = c.gcd(&d);
    let mut b = c.exact_div(&a0)?;
    let mut cc = d.exact_div(&a0)?;
    let mut dd = &cc - &b.derivative();
    let mut i = 1;
    loop {
        let a = b.gcd(&dd);
        b = b.exact_div(&a)?;
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        if b.is_constant() {
            break;
        }
        cc = dd.exact_div(&a)?;
        dd = &cc - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Root multiplicities of `c`, sorted in decreasing order.
pub fn root_multiplicities(c: &UniPoly) -> Result<Vec<usize>> {
    let mut m: Vec<usize> = squarefree_decomposition(c)?
        .into_iter()
        .flat_map(|(a, i)| std::iter::repeat_n(i, a.degree().unwrap_or(0)))
        .collect();
    m.sort_unstable_by(|a, b| b.cmp(a));
    Ok(m)
}
