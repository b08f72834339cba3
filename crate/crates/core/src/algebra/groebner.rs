//! Buchberger's algorithm in two variables, graded-lex order with `y > x`.
//!
//! Polynomials are kept primitive with integer coefficients during the run,
//! which keeps reduction fraction free. Pair selection uses the normal
//! strategy and the Gebauer–Möller update (coprime and chain criteria).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bipoly::BiPoly;
use super::lehmer;
use super::rat::Rat;

/// `(i, j)` for `x^i y^j`.
type Mono = (u32, u32);

fn cmp_mono(a: &Mono, b: &Mono) -> Ordering {
    (a.0 + a.1, a.1, a.0).cmp(&(b.0 + b.1, b.1, b.0))
}

fn divides(a: &Mono, b: &Mono) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn lcm(a: &Mono, b: &Mono) -> Mono {
    (a.0.max(b.0), a.1.max(b.1))
}

fn coprime(a: &Mono, b: &Mono) -> bool {
    (a.0 == 0 || b.0 == 0) && (a.1 == 0 || b.1 == 0)
}

/// Terms sorted by decreasing monomial; primitive with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl IPoly {
    fn from_bipoly(p: &BiPoly) -> IPoly {
        let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Vec<(Mono, BigInt)> = p.terms().map(|(&m, c)| (m, c.numer() * (&den / c.denom()))).collect();
        terms.sort_by(|a, b| cmp_mono(&b.0, &a.0));
        let mut out = IPoly { terms };
        out.normalize();
        out
    }

    fn to_bipoly(&self) -> BiPoly {
        let lc = Rat::from_int(self.terms[0].1.clone());
        BiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, Rat::from_int(c.clone()) / &lc)))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> Mono {
        self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_constant(&self) -> bool {
        !self.is_zero() && self.lm() == (0, 0)
    }

    fn normalize(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = lehmer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    /// `a * self - b * m * other`, where `m` is a monomial multiplier.
    fn combine(&self, a: &BigInt, other: &IPoly, b: &BigInt, m: Mono) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut it1 = self.terms.iter().peekable();
        let mut it2 = other
            .terms
            .iter()
            .map(|(mm, c)| ((mm.0 + m.0, mm.1 + m.1), c))
            .peekable();
        loop {
            match (it1.peek(), it2.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    let (mm, c) = it1.next().unwrap();
                    out.push((*mm, a * c));
                }
                (None, Some(_)) => {
                    let (mm, c) = it2.next().unwrap();
                    out.push((mm, -(b * c)));
                }
                (Some((m1, _)), Some((m2, _))) => match cmp_mono(m1, m2) {
                    Ordering::Greater => {
                        let (mm, c) = it1.next().unwrap();
                        out.push((*mm, a * c));
                    }
                    Ordering::Less => {
                        let (mm, c) = it2.next().unwrap();
                        out.push((mm, -(b * c)));
                    }
                    Ordering::Equal => {
                        let (mm, c1) = it1.next().unwrap();
                        let (_, c2) = it2.next().unwrap();
                        let c = a * c1 - b * c2;
                        if !c.is_zero() {
                            out.push((*mm, c));
                        }
                    }
                },
            }
        }
        IPoly { terms: out }
    }

    /// Cancels the term with monomial `t` and coefficient `c` using `g`.
    fn reduce_term(&self, t: Mono, c: &BigInt, g: &IPoly) -> IPoly {
        let lm = g.lm();
        let m = (t.0 - lm.0, t.1 - lm.1);
        self.combine(g.lc(), g, c, m)
    }
}

/// Full normal form of `p` modulo `basis` (all terms reduced), primitive.
fn normal_form(p: &IPoly, basis: &[&IPoly]) -> IPoly {
    let mut p = p.clone();
    let mut idx = 0;
    while idx < p.terms.len() {
        let (t, c) = p.terms[idx].clone();
        match basis.iter().find(|g| divides(&g.lm(), &t)) {
            Some(g) => {
                p = p.reduce_term(t, &c, g);
                // terms before idx are unaffected: reducer terms are all below t
            }
            None => idx += 1,
        }
    }
    p.normalize();
    p
}

fn s_poly(f: &IPoly, g: &IPoly) -> IPoly {
    let l = lcm(&f.lm(), &g.lm());
    let mf = (l.0 - f.lm().0, l.1 - f.lm().1);
    let mg = (l.0 - g.lm().0, l.1 - g.lm().1);
    let d = lehmer::gcd(f.lc(), g.lc());
    let a = g.lc() / &d;
    let b = f.lc() / &d;
    // a * mf * f - b * mg * g
    let shifted = IPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| ((m.0 + mf.0, m.1 + mf.1), c.clone()))
            .collect(),
    };
    let mut s = shifted.combine(&a, g, &b, mg);
    s.normalize();
    s
}

struct Engine {
    polys: Vec<IPoly>,
    active: Vec<bool>,
    pairs: Vec<(usize, usize)>,
}

impl Engine {
    fn pair_lcm(&self, p: &(usize, usize)) -> Mono {
        lcm(&self.polys[p.0].lm(), &self.polys[p.1].lm())
    }

    /// Gebauer–Möller update with new polynomial index `h`.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lm();
        let others: Vec<usize> = (0..self.polys.len()).filter(|&i| i != h && self.active[i]).collect();

        let mut c: Vec<(usize, Mono)> = others.iter().map(|&g| (g, lcm(&lh, &self.polys[g].lm()))).collect();
        let mut d: Vec<(usize, Mono)> = Vec::new();
        while let Some((g1, l1)) = c.pop() {
            let cop = coprime(&lh, &self.polys[g1].lm());
            let dominated = c.iter().chain(d.iter()).any(|(_, l2)| divides(l2, &l1));
            if cop || !dominated {
                d.push((g1, l1));
            }
        }
        let e: Vec<(usize, usize)> = d
            .into_iter()
            .filter(|(g, _)| !coprime(&lh, &self.polys[*g].lm()))
            .map(|(g, _)| (h, g))
            .collect();

        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let l = self.pair_lcm(&p);
            let l1h = lcm(&self.polys[p.0].lm(), &lh);
            let l2h = lcm(&self.polys[p.1].lm(), &lh);
            let redundant = divides(&lh, &l) && l1h != l && l2h != l;
            if !redundant {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(e);

        for g in others {
            if divides(&lh, &self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn basis(&self) -> Vec<&IPoly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Runs Buchberger; returns early with `true` once a constant appears.
    fn run(&mut self, stop_on_unit: bool) -> bool {
        while !self.pairs.is_empty() {
            let (best, _) = self
                .pairs
                .iter()
                .enumerate()
                .min_by(|a, b| cmp_mono(&self.pair_lcm(a.1), &self.pair_lcm(b.1)))
                .unwrap();
            let (i, j) = self.pairs.swap_remove(best);
            let s = s_poly(&self.polys[i], &self.polys[j]);
            if s.is_zero() {
                continue;
            }
            let r = normal_form(&s, &self.basis());
            if r.is_zero() {
                continue;
            }
            let unit = r.is_constant();
            self.polys.push(r);
            self.active.push(false);
            self.update(self.polys.len() - 1);
            if unit && stop_on_unit {
                return true;
            }
        }
        self.basis().iter().any(|p| p.is_constant())
    }

    fn new(gens: &[BiPoly]) -> Engine {
        let mut e = Engine {
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        };
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let p = IPoly::from_bipoly(g);
            let r = normal_form(&p, &e.basis());
            if r.is_zero() {
                continue;
            }
            e.polys.push(r);
            e.active.push(false);
            e.update(e.polys.len() - 1);
        }
        e
    }
}

/// Whether `1` lies in the ideal generated by `gens` over `Q`.
pub fn unit_ideal_2var(gens: &[BiPoly]) -> bool {
    if gens.iter().all(BiPoly::is_zero) {
        log::warn!("unit_ideal_2var called with only zero generators");
        return false;
    }
    let mut engine = Engine::new(gens);
    if engine.basis().iter().any(|p| p.is_constant()) {
        return true;
    }
    engine.run(true)
}

/// Reduced Gröbner basis (monic) of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[BiPoly]) -> Vec<BiPoly> {
    let mut engine = Engine::new(gens);
    engine.run(false);
    let basis: Vec<IPoly> = engine.basis().into_iter().cloned().collect();
    let mut reduced: Vec<IPoly> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let others: Vec<&IPoly> = basis
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, q)| q)
            .collect();
        let r = normal_form(p, &others);
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    reduced.sort_by(|a, b| cmp_mono(&a.lm(), &b.lm()));
    reduced.iter().map(IPoly::to_bipoly).collect()
}
