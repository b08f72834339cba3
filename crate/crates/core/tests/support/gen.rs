//! Seeded generators for random forms and group elements.

use rand::rngs::StdRng;
use rand::Rng;
use trigonal::algebra::Rat;
use trigonal::curves::{is_regular, StratumKind, TrigonalForm};

/// Numerator in `-3..=3`, denominator in `{1, 2}`.
pub fn small_rat(rng: &mut StdRng) -> Rat {
    Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn nonzero_rat(rng: &mut StdRng) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Distinct nonzero small rationals.
fn distinct(rng: &mut StdRng, n: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    while out.len() < n {
        let r = small_rat(rng);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Coefficients of `s (v - a)(v - b)(v - c)` as `(v^2, v, 1)`.
fn cubic(s: &Rat, roots: [&Rat; 3]) -> [Rat; 3] {
    let [a, b, c] = roots;
    let e1 = a + b + c;
    let e2 = &(a * b) + &(&(a * c) + &(b * c));
    let e3 = &(a * b) * c;
    [-(s * &e1), s * &e2, -(s * &e3)]
}

/// Random form with `L0` restriction `s (v-a)(v-b)(v-c)` given by `kind`, and
/// each other coefficient nonzero with probability `density`.
pub fn form_with_l0(k: usize, kind: StratumKind, density: f64, rng: &mut StdRng) -> TrigonalForm {
    let s = nonzero_rat(rng);
    let roots = distinct(rng, 3);
    let (a, b, c) = match kind {
        StratumKind::OnePoint => (&roots[0], &roots[0], &roots[0]),
        StratumKind::TwoPoint => (&roots[0], &roots[0], &roots[1]),
        StratumKind::ThreePoint => (&roots[0], &roots[1], &roots[2]),
    };
    let top = cubic(&s, [a, b, c]);
    let mut f = TrigonalForm::zero(k).unwrap();
    for (i, j) in TrigonalForm::monomials(k) {
        if rng.gen_bool(density) {
            f.set(i, j, small_rat(rng)).unwrap();
        }
    }
    f.set(0, 3, s).unwrap();
    f.set(k + 1, 2, top[0].clone()).unwrap();
    f.set(2 * k + 2, 1, top[1].clone()).unwrap();
    f.set(3 * k + 3, 0, top[2].clone()).unwrap();
    f
}

/// A regular form in the given stratum.
pub fn regular_form(k: usize, kind: StratumKind, rng: &mut StdRng) -> TrigonalForm {
    loop {
        let f = form_with_l0(k, kind, 0.35, rng);
        if is_regular(&f) {
            return f;
        }
    }
}

/// Each coefficient nonzero with probability `density`; `s != 0`.
pub fn random_form(k: usize, density: f64, rng: &mut StdRng) -> TrigonalForm {
    let mut f = TrigonalForm::zero(k).unwrap();
    for (i, j) in TrigonalForm::monomials(k) {
        if rng.gen_bool(density) {
            f.set(i, j, small_rat(rng)).unwrap();
        }
    }
    f.set(0, 3, nonzero_rat(rng)).unwrap();
    f
}
