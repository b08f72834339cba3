use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{BiPoly, Rat, UniPoly};
use crate::error::{Error, Result};

/// A polynomial `f = s y^3 + r(x) y^2 + p(x) y + q(x)` in the space `V^k`,
/// i.e. spanned by the monomials `x^i y^j` with `i + (k+1) j <= 3k+3`.
///
/// `r`, `p`, `q` always hold exactly `k+2`, `2k+3` and `3k+4` coefficients,
/// lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawForm", into = "RawForm")]
pub struct TrigonalForm {
    k: usize,
    s: Rat,
    r: Vec<Rat>,
    p: Vec<Rat>,
    q: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForm {
    k: usize,
    s: Rat,
    r: Vec<Rat>,
    p: Vec<Rat>,
    q: Vec<Rat>,
}

impl TryFrom<RawForm> for TrigonalForm {
    type Error = Error;
    fn try_from(raw: RawForm) -> Result<TrigonalForm> {
        TrigonalForm::new(raw.k, raw.s, raw.r, raw.p, raw.q)
    }
}

impl From<TrigonalForm> for RawForm {
    fn from(f: TrigonalForm) -> RawForm {
        RawForm {
            k: f.k,
            s: f.s,
            r: f.r,
            p: f.p,
            q: f.q,
        }
    }
}

impl TrigonalForm {
    /// Validates coefficient list lengths against `k`.
    pub fn new(k: usize, s: Rat, r: Vec<Rat>, p: Vec<Rat>, q: Vec<Rat>) -> Result<TrigonalForm> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        let check = |name: &str, v: &[Rat], len: usize| {
            if v.len() != len {
                Err(Error::DegreeBound(format!(
                    "{name} has {} coefficients, expected {len} for k = {k}",
                    v.len()
                )))
            } else {
                Ok(())
            }
        };
        check("r", &r, k + 2)?;
        check("p", &p, 2 * k + 3)?;
        check("q", &q, 3 * k + 4)?;
        Ok(TrigonalForm { k, s, r, p, q })
    }

    /// Builds a form from polynomial coefficients, padding with zeros.
    pub fn from_polys(k: usize, s: Rat, r: &UniPoly, p: &UniPoly, q: &UniPoly) -> Result<TrigonalForm> {
        TrigonalForm::new(k, s, r.padded(k + 2)?, p.padded(2 * k + 3)?, q.padded(3 * k + 4)?)
    }

    /// Reads a form from a bivariate polynomial, rejecting monomials outside `V^k`.
    pub fn from_bipoly(k: usize, f: &BiPoly) -> Result<TrigonalForm> {
        let mut out = TrigonalForm::zero(k)?;
        for (&(i, j), c) in f.terms() {
            out.set(i as usize, j as usize, c.clone())?;
        }
        Ok(out)
    }

    /// Builds a form from integer triples `(coeff, i, j)` for `coeff * x^i y^j`.
    pub fn from_ints(k: usize, terms: &[(i64, u32, u32)]) -> Result<TrigonalForm> {
        TrigonalForm::from_bipoly(k, &BiPoly::from_ints(terms))
    }

    pub fn zero(k: usize) -> Result<TrigonalForm> {
        TrigonalForm::new(
            k,
            Rat::zero(),
            vec![Rat::zero(); k + 2],
            vec![Rat::zero(); 2 * k + 3],
            vec![Rat::zero(); 3 * k + 4],
        )
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> &Rat {
        &self.s
    }

    pub fn r(&self) -> &[Rat] {
        &self.r
    }

    pub fn p(&self) -> &[Rat] {
        &self.p
    }

    pub fn q(&self) -> &[Rat] {
        &self.q
    }

    pub fn r_poly(&self) -> UniPoly {
        UniPoly::new(self.r.clone())
    }

    pub fn p_poly(&self) -> UniPoly {
        UniPoly::new(self.p.clone())
    }

    pub fn q_poly(&self) -> UniPoly {
        UniPoly::new(self.q.clone())
    }

    /// Number of coefficients, `1 + (k+2) + (2k+3) + (3k+4)`.
    pub fn dimension(&self) -> usize {
        6 * self.k + 10
    }

    fn slot(&self, i: usize, j: usize) -> Option<&Rat> {
        match j {
            0 => self.q.get(i),
            1 => self.p.get(i),
            2 => self.r.get(i),
            3 if i == 0 => Some(&self.s),
            _ => None,
        }
    }

    /// Coefficient of `x^i y^j`; zero outside `V^k`.
    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.slot(i, j).cloned().unwrap_or_default()
    }

    /// Sets the coefficient of `x^i y^j`.
    pub fn set(&mut self, i: usize, j: usize, c: Rat) -> Result<()> {
        let k = self.k;
        let slot = match j {
            0 => self.q.get_mut(i),
            1 => self.p.get_mut(i),
            2 => self.r.get_mut(i),
            3 if i == 0 => Some(&mut self.s),
            _ => None,
        };
        match slot {
            Some(v) => {
                *v = c;
                Ok(())
            }
            None => Err(Error::DegreeBound(format!(
                "monomial x^{i} y^{j} has weighted degree {} > {} for k = {k}",
                i + (k + 1) * j,
                3 * k + 3
            ))),
        }
    }

    /// Monomials `(i, j)` of `V^k` in a fixed order: `s`, then `r`, `p`, `q`.
    pub fn monomials(k: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 3)];
        out.extend((0..k + 2).map(|i| (i, 2)));
        out.extend((0..2 * k + 3).map(|i| (i, 1)));
        out.extend((0..3 * k + 4).map(|i| (i, 0)));
        out
    }

    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms(
            TrigonalForm::monomials(self.k)
                .into_iter()
                .map(|(i, j)| ((i as u32, j as u32), self.coeff(i, j))),
        )
    }

    /// Scalar multiple of the whole form.
    pub fn scale(&self, c: &Rat) -> TrigonalForm {
        let m = |v: &[Rat]| v.iter().map(|a| a * c).collect();
        TrigonalForm {
            k: self.k,
            s: &self.s * c,
            r: m(&self.r),
            p: m(&self.p),
            q: m(&self.q),
        }
    }
}

impl fmt::Debug for TrigonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V^{}[{:?}]", self.k, self.to_bipoly())
    }
}

impl fmt::Display for TrigonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, j) in TrigonalForm::monomials(self.k) {
            let c = self.coeff(i, j);
            if c.is_zero() {
                continue;
            }
            let xs = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let ys = match j {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{j}"),
            };
            let mono = format!("{xs}{ys}");
            parts.push(if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else {
                format!("({c}){mono}")
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn make_form_lengths() {
        let f = TrigonalForm::new(1, rat(1), ints(&[0, 0, 0]), ints(&[0; 5]), ints(&[0, 1, 0, 0, 0, 1, 0]));
        assert!(f.is_ok());
        let bad = TrigonalForm::new(1, rat(1), ints(&[0, 0, 0, 0]), ints(&[0; 5]), ints(&[0; 7]));
        assert!(matches!(bad, Err(Error::DegreeBound(_))));
        assert!(TrigonalForm::zero(0).is_err());
    }

    #[test]
    fn weighted_degree_bound() {
        assert!(TrigonalForm::from_ints(1, &[(1, 0, 3), (1, 5, 0), (1, 1, 0)]).is_ok());
        // x y^3 and x^7 lie outside V^1
        assert!(TrigonalForm::from_ints(1, &[(1, 1, 3)]).is_err());
        assert!(TrigonalForm::from_ints(1, &[(1, 7, 0)]).is_err());
        assert!(TrigonalForm::from_ints(1, &[(1, 3, 2)]).is_err());
        for k in 1..5 {
            for (i, j) in TrigonalForm::monomials(k) {
                assert!(i + (k + 1) * j <= 3 * k + 3);
            }
            assert_eq!(TrigonalForm::monomials(k).len(), 6 * k + 10);
        }
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let f = TrigonalForm::from_ints(1, &[(1, 0, 3), (1, 5, 0), (1, 1, 0)]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"k":1,"s":"1","r":["0","0","0"],"p":["0","0","0","0","0"],"q":["0","1","0","0","0","1","0"]}"#
        );
        let back: TrigonalForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"k":1,"s":"1","r":["0","0"],"p":["0","0","0","0","0"],"q":["0","1","0","0","0","1","0"]}"#;
        assert!(serde_json::from_str::<TrigonalForm>(bad).is_err());
    }

    #[test]
    fn display() {
        let f = TrigonalForm::from_ints(1, &[(1, 0, 3), (1, 5, 0), (2, 1, 0)]).unwrap();
        assert_eq!(f.to_string(), "y^3 + (2)x + x^5");
    }
}
