//! Normal forms for regular forms under `G` and the torus.
//!
//! Each stratum has a slice of `V^k` meeting every orbit: `V1` (one point on
//! `L0`) up to a residual `C*`, `V2` (two points) exactly once, and `V3`
//! (three points) up to the residual `(a, a0, t)` action. Pipelines record a
//! [`TransformLog`] whose replay reproduces the normal form exactly.

use serde::{Deserialize, Serialize};

use crate::algebra::{multiplicative_consistency, Rat, UniPoly};
use crate::curves::{classify, is_regular, l0_profile, l0_restriction, StratumKind, TrigonalForm};
use crate::error::{Error, Result};
use crate::group::{abc_to_lmr, act, act_torus, lmr_exponents, GElement, TorusConvention, TorusElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum StepTag {
    /// `y -> y - (r(x) - r0 x^(k+1)) / 3s`; params start with `r0`.
    Yr,
    /// Clears `p_(2k+1)` by a `y`-shift.
    Yp,
    /// Clears `r_k` by an `x`-shift.
    Xr,
    /// Clears `q_(3k+1)` by an `x`-shift.
    Xq,
    /// Moves the double point on `L0` to `v = 0`.
    L0,
    /// Torus element in `(lambda, mu, rho)` coordinates.
    Torus,
    /// Any other element of `G`.
    Gshift,
}

/// One logged transformation. Group steps carry `[a, a0, b, b_0, ..., b_(k+1)]`
/// (preceded by `r0` for [`StepTag::Yr`]); torus steps carry `[lambda, mu, rho]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawStep", into = "RawStep")]
pub struct TransformStep {
    tag: StepTag,
    params: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStep {
    tag: StepTag,
    params: Vec<Rat>,
}

impl TryFrom<RawStep> for TransformStep {
    type Error = Error;
    fn try_from(raw: RawStep) -> Result<TransformStep> {
        let step = TransformStep {
            tag: raw.tag,
            params: raw.params,
        };
        step.action()?;
        Ok(step)
    }
}

impl From<TransformStep> for RawStep {
    fn from(s: TransformStep) -> RawStep {
        RawStep {
            tag: s.tag,
            params: s.params,
        }
    }
}

enum Action {
    Group(GElement),
    Torus(TorusElement),
}

impl TransformStep {
    /// A group step; use [`TransformStep::yr`] for [`StepTag::Yr`].
    pub fn group(tag: StepTag, g: &GElement) -> TransformStep {
        assert!(!matches!(tag, StepTag::Torus | StepTag::Yr), "not a plain group tag");
        TransformStep {
            tag,
            params: g.params(),
        }
    }

    pub fn yr(r0: &Rat, g: &GElement) -> TransformStep {
        let mut params = vec![r0.clone()];
        params.extend(g.params());
        TransformStep {
            tag: StepTag::Yr,
            params,
        }
    }

    pub fn torus(t: &TorusElement) -> TransformStep {
        TransformStep {
            tag: StepTag::Torus,
            params: t.coords().into_iter().cloned().collect(),
        }
    }

    pub fn tag(&self) -> StepTag {
        self.tag
    }

    pub fn params(&self) -> &[Rat] {
        &self.params
    }

    fn action(&self) -> Result<Action> {
        match self.tag {
            StepTag::Torus => {
                let [l, m, r] = self.params.as_slice() else {
                    return Err(Error::LengthMismatch(format!(
                        "torus step needs 3 parameters, got {}",
                        self.params.len()
                    )));
                };
                Ok(Action::Torus(TorusElement::new(l.clone(), m.clone(), r.clone())?))
            }
            StepTag::Yr => {
                if self.params.is_empty() {
                    return Err(Error::LengthMismatch("YR step is missing r0".into()));
                }
                Ok(Action::Group(GElement::from_params(&self.params[1..])?))
            }
            _ => Ok(Action::Group(GElement::from_params(&self.params)?)),
        }
    }

    pub fn apply(&self, f: &TrigonalForm) -> Result<TrigonalForm> {
        match self.action()? {
            Action::Group(g) => act(&g, f),
            Action::Torus(t) => Ok(act_torus(&t, f, TorusConvention::Lmr)),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TransformLog {
    steps: Vec<TransformStep>,
}

impl TransformLog {
    pub fn new() -> TransformLog {
        TransformLog::default()
    }

    pub fn steps(&self) -> &[TransformStep] {
        &self.steps
    }

    pub fn push(&mut self, step: TransformStep) {
        self.steps.push(step);
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Applies the steps in order.
    pub fn replay(&self, f: &TrigonalForm) -> Result<TrigonalForm> {
        self.steps.iter().try_fold(f.clone(), |g, step| step.apply(&g))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SliceTag {
    V1,
    V2,
    V3,
}

impl SliceTag {
    pub fn for_kind(kind: StratumKind) -> SliceTag {
        match kind {
            StratumKind::OnePoint => SliceTag::V1,
            StratumKind::TwoPoint => SliceTag::V2,
            StratumKind::ThreePoint => SliceTag::V3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SliceTag::V1 => "V1",
            SliceTag::V2 => "V2",
            SliceTag::V3 => "V3",
        }
    }

    /// Monomials `(i, j)` pinned by the slice, with their values.
    pub fn fixed_coefficients(self, k: usize) -> Vec<((usize, usize), Rat)> {
        let one = Rat::one;
        let zero = Rat::zero;
        let mut out = vec![((0, 3), one())];
        match self {
            SliceTag::V1 => {
                out.extend((0..k + 2).map(|i| ((i, 2), zero())));
                out.push(((2 * k + 2, 1), zero()));
                out.push(((3 * k + 1, 0), zero()));
                out.push(((3 * k + 2, 0), one()));
                out.push(((3 * k + 3, 0), zero()));
            }
            SliceTag::V2 => {
                out.extend((0..k + 1).map(|i| ((i, 2), zero())));
                out.push(((k + 1, 2), one()));
                out.push(((2 * k + 1, 1), zero()));
                out.push(((2 * k + 2, 1), zero()));
                out.push(((3 * k + 2, 0), one()));
                out.push(((3 * k + 3, 0), zero()));
            }
            SliceTag::V3 => out.extend((0..k + 2).map(|i| ((i, 2), zero()))),
        }
        out
    }

    pub fn free_monomials(self, k: usize) -> Vec<(usize, usize)> {
        let fixed: Vec<_> = self.fixed_coefficients(k).into_iter().map(|(m, _)| m).collect();
        TrigonalForm::monomials(k)
            .into_iter()
            .filter(|m| !fixed.contains(m))
            .collect()
    }

    pub fn contains(self, f: &TrigonalForm) -> bool {
        self.fixed_coefficients(f.k())
            .iter()
            .all(|((i, j), c)| f.coeff(*i, *j) == *c)
    }
}

fn ratio(a: &Rat, b: &Rat) -> Rat {
    a * &b.recip()
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

fn nonzero_s(f: &TrigonalForm) -> Result<()> {
    if f.s().is_zero() {
        Err(Error::DegenerateOnL0)
    } else {
        Ok(())
    }
}

/// `q_(3k+3) = p_(2k+2) = 0` and `s r_(k+1) q_(3k+2) != 0`.
fn require_split_hypotheses(f: &TrigonalForm) -> Result<()> {
    let k = f.k();
    nonzero_s(f)?;
    require(
        f.q()[3 * k + 3].is_zero() && f.p()[2 * k + 2].is_zero(),
        "q_(3k+3) and p_(2k+2) must vanish",
    )?;
    require(
        !f.r()[k + 1].is_zero() && !f.q()[3 * k + 2].is_zero(),
        "r_(k+1) and q_(3k+2) must be nonzero",
    )
}

fn check_post(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("postcondition failed: {what}")))
    }
}

fn yr_element(f: &TrigonalForm, r0: &Rat) -> Result<GElement> {
    nonzero_s(f)?;
    let k = f.k();
    let rest = &f.r_poly() - &UniPoly::monomial(r0.clone(), k + 1);
    let factor = -(Rat::from_int(3) * f.s()).recip();
    GElement::y_shift(k, &rest.scale(&factor))
}

/// `y -> y - (r(x) - r0 x^(k+1)) / 3s`, leaving `r = r0 x^(k+1)`.
pub fn tschirnhaus_y_r(f: &TrigonalForm, r0: &Rat) -> Result<TrigonalForm> {
    let out = act(&yr_element(f, r0)?, f)?;
    check_post(
        out.r_poly() == UniPoly::monomial(r0.clone(), f.k() + 1),
        "r = r0 x^(k+1)",
    )?;
    Ok(out)
}

fn yp_element(f: &TrigonalForm) -> Result<GElement> {
    require_split_hypotheses(f)?;
    let k = f.k();
    let c = -ratio(&f.p()[2 * k + 1], &(Rat::from_int(2) * &f.r()[k + 1]));
    GElement::y_shift(k, &UniPoly::monomial(c, k))
}

/// Clears `p_(2k+1)` with `y -> y - p_(2k+1) x^k / (2 r_(k+1))`.
pub fn tschirnhaus_y_p(f: &TrigonalForm) -> Result<TrigonalForm> {
    let out = act(&yp_element(f)?, f)?;
    check_post(out.p()[2 * f.k() + 1].is_zero(), "p_(2k+1) = 0")?;
    Ok(out)
}

fn xr_element(f: &TrigonalForm) -> Result<GElement> {
    require_split_hypotheses(f)?;
    let k = f.k();
    require(f.p()[2 * k + 1].is_zero(), "p_(2k+1) must vanish")?;
    // x^k-coefficient of r(x + d) is r_k + (k+1) d r_(k+1)
    let d = -ratio(&f.r()[k], &(Rat::from_int(k as i64 + 1) * &f.r()[k + 1]));
    Ok(GElement::affine_x(k, Rat::one(), d))
}

/// Clears `r_k` with `x -> x + d`.
pub fn shift_x_r(f: &TrigonalForm) -> Result<TrigonalForm> {
    let out = act(&xr_element(f)?, f)?;
    check_post(out.r()[f.k()].is_zero(), "r_k = 0")?;
    Ok(out)
}

fn xq_element(f: &TrigonalForm) -> Result<GElement> {
    let k = f.k();
    nonzero_s(f)?;
    require(
        f.q()[3 * k + 3].is_zero() && f.p()[2 * k + 2].is_zero(),
        "q_(3k+3) and p_(2k+2) must vanish",
    )?;
    require(!f.q()[3 * k + 2].is_zero(), "q_(3k+2) must be nonzero")?;
    let d = -ratio(
        &f.q()[3 * k + 1],
        &(Rat::from_int(3 * k as i64 + 2) * &f.q()[3 * k + 2]),
    );
    Ok(GElement::affine_x(k, Rat::one(), d))
}

/// Clears `q_(3k+1)` with `x -> x + d`.
pub fn shift_x_q(f: &TrigonalForm) -> Result<TrigonalForm> {
    let out = act(&xq_element(f)?, f)?;
    check_post(out.q()[3 * f.k() + 1].is_zero(), "q_(3k+1) = 0")?;
    Ok(out)
}

fn l0_element(f: &TrigonalForm) -> Result<GElement> {
    let k = f.k();
    nonzero_s(f)?;
    require(f.r().iter().all(Rat::is_zero), "r must vanish")?;
    require(l0_profile(f)?.distinct_points == 2, "need exactly two points on L0")?;
    let p = &f.p()[2 * k + 2];
    require(!p.is_zero(), "p_(2k+2) must be nonzero")?;
    // double root of s v^3 + p v + q
    let root = -ratio(&(Rat::from_int(3) * &f.q()[3 * k + 3]), &(Rat::from_int(2) * p));
    GElement::y_shift(k, &UniPoly::monomial(root, k + 1))
}

/// For `r = 0` and two points on `L0`, moves the double point to `v = 0`.
pub fn split_double_root(f: &TrigonalForm) -> Result<TrigonalForm> {
    let g = l0_element(f)?;
    if !is_regular(f) {
        return Err(Error::NotRegular);
    }
    let out = act(&g, f)?;
    check_post(split_post(&out), "double root at v = 0")?;
    Ok(out)
}

fn split_post(f: &TrigonalForm) -> bool {
    let k = f.k();
    f.q()[3 * k + 3].is_zero()
        && f.p()[2 * k + 2].is_zero()
        && !f.r()[k + 1].is_zero()
        && f.r()[..=k].iter().all(Rat::is_zero)
}

/// Whether `q_(3k+2) != 0`. For regular forms whose restriction to `L0` has
/// a multiple zero at `v = 0` this always holds.
pub fn q_nonvanish_check(f: &TrigonalForm) -> bool {
    let k = f.k();
    let holds = !f.q()[3 * k + 2].is_zero();
    let c = l0_restriction(f);
    let multiple_at_zero = !c.is_zero() && c.coeff(0).is_zero() && c.coeff(1).is_zero();
    if multiple_at_zero && !holds {
        debug_assert!(
            !is_regular(f),
            "regular form with q_(3k+2) = 0 and multiple zero at v = 0"
        );
    }
    holds
}

struct Pipeline {
    form: TrigonalForm,
    log: TransformLog,
}

impl Pipeline {
    fn new(f: &TrigonalForm) -> Pipeline {
        Pipeline {
            form: f.clone(),
            log: TransformLog::new(),
        }
    }

    fn group(&mut self, tag: StepTag, g: GElement) -> Result<()> {
        if !g.is_identity() {
            self.form = act(&g, &self.form)?;
            self.log.push(TransformStep::group(tag, &g));
        }
        Ok(())
    }

    fn yr(&mut self, r0: &Rat) -> Result<()> {
        let g = yr_element(&self.form, r0)?;
        if !g.is_identity() {
            self.form = act(&g, &self.form)?;
            self.log.push(TransformStep::yr(r0, &g));
        }
        Ok(())
    }

    fn torus(&mut self, t: TorusElement) {
        if !t.is_identity() {
            self.form = act_torus(&t, &self.form, TorusConvention::Lmr);
            self.log.push(TransformStep::torus(&t));
        }
    }

    fn finish(self, slice: SliceTag) -> Result<(TrigonalForm, TransformLog)> {
        check_post(slice.contains(&self.form), slice.as_str())?;
        Ok((self.form, self.log))
    }
}

fn require_points(f: &TrigonalForm, points: usize) -> Result<()> {
    nonzero_s(f)?;
    if !is_regular(f) {
        return Err(Error::NotRegular);
    }
    let n = l0_profile(f)?.distinct_points;
    require(n == points, &format!("expected {points} point(s) on L0, found {n}"))
}

fn one_point(f: &TrigonalForm) -> Result<(TrigonalForm, TransformLog)> {
    let k = f.k();
    let mut pl = Pipeline::new(f);
    pl.yr(&Rat::zero())?;
    // the triple root of s v^3 + p v + q has zero sum, so sits at v = 0
    check_post(
        pl.form.p()[2 * k + 2].is_zero() && pl.form.q()[3 * k + 3].is_zero(),
        "triple point at v = 0",
    )?;
    let g = xq_element(&pl.form)?;
    pl.group(StepTag::Xq, g)?;
    let t = TorusElement::new(pl.form.s().recip(), pl.form.q()[3 * k + 2].recip(), Rat::one())?;
    pl.torus(t);
    pl.finish(SliceTag::V1)
}

fn two_point(f: &TrigonalForm) -> Result<(TrigonalForm, TransformLog)> {
    let k = f.k();
    let mut pl = Pipeline::new(f);
    pl.yr(&Rat::zero())?;
    let g = l0_element(&pl.form)?;
    pl.group(StepTag::L0, g)?;
    let g = yp_element(&pl.form)?;
    pl.group(StepTag::Yp, g)?;
    let g = xr_element(&pl.form)?;
    pl.group(StepTag::Xr, g)?;
    let lead = pl.form.r()[k + 1].clone();
    pl.yr(&lead)?;
    let t = TorusElement::new(
        pl.form.s().recip(),
        pl.form.q()[3 * k + 2].recip(),
        pl.form.r()[k + 1].clone(),
    )?;
    pl.torus(t);
    pl.finish(SliceTag::V2)
}

fn three_point(f: &TrigonalForm) -> Result<(TrigonalForm, TransformLog)> {
    let mut pl = Pipeline::new(f);
    pl.yr(&Rat::zero())?;
    // overall scalar 1/s, i.e. (a, b, c) = (1, 1, 1/s)
    let abc = TorusElement::new(Rat::one(), Rat::one(), pl.form.s().recip())?;
    pl.torus(abc_to_lmr(f.k(), &abc)?);
    pl.finish(SliceTag::V3)
}

/// Normal form in `V1` of a regular form with one point on `L0`.
pub fn normalize_one_point(f: &TrigonalForm) -> Result<(TrigonalForm, TransformLog)> {
    require_points(f, 1)?;
    one_point(f)
}

/// The unique form of `V2` in the orbit of a regular form with two points on `L0`.
pub fn normalize_two_point(f: &TrigonalForm) -> Result<(TrigonalForm, TransformLog)> {
    require_points(f, 2)?;
    two_point(f)
}

/// Normal form in `V3` of a regular form with three points on `L0`.
pub fn normalize_three_point(f: &TrigonalForm) -> Result<(TrigonalForm, TransformLog)> {
    require_points(f, 3)?;
    three_point(f)
}

/// Classifies and normalizes in one pass.
pub fn normalize(f: &TrigonalForm) -> Result<(SliceTag, TrigonalForm, TransformLog)> {
    let kind = classify(f)?.kind;
    let (g, log) = normalize_classified(f, kind)?;
    Ok((SliceTag::for_kind(kind), g, log))
}

fn normalize_classified(f: &TrigonalForm, kind: StratumKind) -> Result<(TrigonalForm, TransformLog)> {
    match kind {
        StratumKind::OnePoint => one_point(f),
        StratumKind::TwoPoint => two_point(f),
        StratumKind::ThreePoint => three_point(f),
    }
}

fn same_k(f1: &TrigonalForm, f2: &TrigonalForm) -> Result<()> {
    if f1.k() != f2.k() {
        return Err(Error::LengthMismatch(format!(
            "forms have k = {} and k = {}",
            f1.k(),
            f2.k()
        )));
    }
    Ok(())
}

/// Collects `(weight, f2/f1)` over coordinates nonzero on both sides; `None`
/// if some coordinate vanishes on exactly one side.
fn paired_ratios(
    f1: &TrigonalForm,
    f2: &TrigonalForm,
    weight: impl Fn(usize, usize) -> Vec<i64>,
) -> Option<(Vec<Vec<i64>>, Vec<Rat>)> {
    let mut weights = Vec::new();
    let mut ratios = Vec::new();
    for (i, j) in TrigonalForm::monomials(f1.k()) {
        let (a, b) = (f1.coeff(i, j), f2.coeff(i, j));
        match (a.is_zero(), b.is_zero()) {
            (true, true) => {}
            (false, false) => {
                weights.push(weight(i, j));
                ratios.push(ratio(&b, &a));
            }
            _ => return None,
        }
    }
    Some((weights, ratios))
}

/// Whether two `V1` members differ by the residual `C*`, which scales
/// `p_i` by `t^(6k+4-3i)` and `q_i` by `t^(9k+6-3i)`.
pub fn residual_equiv_one_point(f1: &TrigonalForm, f2: &TrigonalForm) -> Result<bool> {
    same_k(f1, f2)?;
    require(
        SliceTag::V1.contains(f1) && SliceTag::V1.contains(f2),
        "forms must lie in V1",
    )?;
    let k = f1.k();
    // the residual torus is rho with lambda = mu = 1
    match paired_ratios(f1, f2, |i, j| vec![lmr_exponents(k, i, j)[2]]) {
        Some((w, r)) => multiplicative_consistency(&w, &r),
        None => Ok(false),
    }
}

/// Applies `x -> x + d` so that `q_(3k+2) = 0` when `q_(3k+3) != 0`, and
/// otherwise so that `p_(2k+1) = 0`.
fn center_three_point(f: &TrigonalForm) -> Result<TrigonalForm> {
    let k = f.k();
    let (q_top, p_top) = (&f.q()[3 * k + 3], &f.p()[2 * k + 2]);
    let d = if !q_top.is_zero() {
        -ratio(&f.q()[3 * k + 2], &(Rat::from_int(3 * k as i64 + 3) * q_top))
    } else if !p_top.is_zero() {
        -ratio(&f.p()[2 * k + 1], &(Rat::from_int(2 * k as i64 + 2) * p_top))
    } else {
        return Err(Error::Precondition("q_(3k+3) and p_(2k+2) both vanish".into()));
    };
    act(&GElement::affine_x(k, Rat::one(), d), f)
}

/// Whether two `V3` members differ by `p -> t^2 p(a x + a0)`,
/// `q -> t^3 q(a x + a0)` for some complex `a`, `t` nonzero and `a0`.
pub fn residual_equiv_three_point(f1: &TrigonalForm, f2: &TrigonalForm) -> Result<bool> {
    same_k(f1, f2)?;
    require(
        SliceTag::V3.contains(f1) && SliceTag::V3.contains(f2),
        "forms must lie in V3",
    )?;
    for f in [f1, f2] {
        require(l0_profile(f)?.distinct_points == 3, "need three points on L0")?;
    }
    let k = f1.k();
    if f1.q()[3 * k + 3].is_zero() != f2.q()[3 * k + 3].is_zero() {
        return Ok(false);
    }
    let (g1, g2) = (center_three_point(f1)?, center_three_point(f2)?);
    // weights in (a, t): (i, 2) on p_i, (i, 3) on q_i; s = 1 gets (0, 0)
    match paired_ratios(&g1, &g2, |i, j| vec![i as i64, 3 - j as i64]) {
        Some((w, r)) => multiplicative_consistency(&w, &r),
        None => Ok(false),
    }
}

/// Whether two regular forms lie in the same `G x torus` orbit.
pub fn orbit_equal(f1: &TrigonalForm, f2: &TrigonalForm) -> Result<bool> {
    same_k(f1, f2)?;
    let (c1, c2) = (classify(f1)?, classify(f2)?);
    if c1.kind != c2.kind {
        return Ok(false);
    }
    let (n1, _) = normalize_classified(f1, c1.kind)?;
    let (n2, _) = normalize_classified(f2, c2.kind)?;
    match c1.kind {
        StratumKind::OnePoint => residual_equiv_one_point(&n1, &n2),
        StratumKind::TwoPoint => Ok(n1 == n2),
        StratumKind::ThreePoint => residual_equiv_three_point(&n1, &n2),
    }
}
