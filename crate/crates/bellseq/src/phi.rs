//! The boundary function φ and the quadruple (b⁺, b⁻, c, φ): admissibility
//! checks, necessary-condition screens, Wiener–Hopf and PF/AM–CM splits, and
//! the classification corollaries.
//!
//! φ is integer-valued and piecewise constant on (−∞, 0) and described by a
//! gapless list of pieces on (0, ∞); each piece is a constant, a sampled
//! grid with linear interpolation, or a registered closed form.

use crate::quad::integrate_real;
use crate::{r, ri, Error, Real, Result};

/// One step of the negative-axis part: `value` holds on `[break_at, next)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegStep<R> {
    pub break_at: R,
    pub value: i64,
}

/// Registered closed-form piece expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExprKind {
    /// ±(1/π)·arccot((4−s−s⁻¹)/(√(s+s⁻¹−2)·√(6−s−s⁻¹))), sign of s−1;
    /// extends continuously by ∓1 outside the central band.
    RwArccot,
    /// (1/π)·arctan((s^{1/2} − s^{−1/2})/2).
    RrwArctan,
}

impl ExprKind {
    pub fn eval<R: Real>(&self, s: R) -> R {
        match self {
            ExprKind::RwArccot => {
                let inv = R::one() / s;
                let num = r::<R>(4.0) - s - inv;
                let d1 = (s + inv - r::<R>(2.0)).max(R::zero()).sqrt();
                let d2 = (r::<R>(6.0) - s - inv).max(R::zero()).sqrt();
                let den = d1 * d2;
                // arccot into (0, π); den = 0 yields the ±1 plateaus.
                let ratio = num / den;
                let arccot = if ratio.is_nan() {
                    R::FRAC_PI_2()
                } else {
                    R::FRAC_PI_2() - ratio.atan()
                };
                let sign = if s < R::one() { -R::one() } else { R::one() };
                sign * arccot / R::PI()
            }
            ExprKind::RrwArctan => {
                let root = s.sqrt();
                ((root - R::one() / root) / r::<R>(2.0)).atan() / R::PI()
            }
        }
    }

    fn limit_at_infinity<R: Real>(&self) -> R {
        match self {
            ExprKind::RwArccot => R::one(),
            ExprKind::RrwArctan => r(0.5),
        }
    }
}

/// Functional form of a positive-axis piece.
#[derive(Debug, Clone, PartialEq)]
pub enum PieceKind<R> {
    Constant(R),
    /// Piecewise-linear interpolation through (s, value) pairs sorted by s;
    /// constant extension beyond the end points.
    Sampled(Vec<(R, R)>),
    Expr(ExprKind),
    Scaled { inner: Box<PieceKind<R>>, factor: R },
    Shifted { inner: Box<PieceKind<R>>, offset: R },
    ClipPos(Box<PieceKind<R>>),
    ClipNeg(Box<PieceKind<R>>),
}

impl<R: Real> PieceKind<R> {
    pub fn eval(&self, s: R) -> R {
        match self {
            PieceKind::Constant(v) => *v,
            PieceKind::Sampled(points) => sampled_eval(points, s),
            PieceKind::Expr(e) => e.eval(s),
            PieceKind::Scaled { inner, factor } => inner.eval(s) * *factor,
            PieceKind::Shifted { inner, offset } => inner.eval(s) + *offset,
            PieceKind::ClipPos(inner) => inner.eval(s).max(R::zero()),
            PieceKind::ClipNeg(inner) => inner.eval(s).min(R::zero()),
        }
    }

    /// Whether |φ| is bounded on an unbounded piece, together with the value
    /// approached at +∞ where known. Sampled grids extend as constants, so
    /// every registered kind is bounded.
    fn limit_at_infinity(&self) -> R {
        match self {
            PieceKind::Constant(v) => *v,
            PieceKind::Sampled(points) => points.last().map(|p| p.1).unwrap_or(R::zero()),
            PieceKind::Expr(e) => e.limit_at_infinity(),
            PieceKind::Scaled { inner, factor } => inner.limit_at_infinity() * *factor,
            PieceKind::Shifted { inner, offset } => inner.limit_at_infinity() + *offset,
            PieceKind::ClipPos(inner) => inner.limit_at_infinity().max(R::zero()),
            PieceKind::ClipNeg(inner) => inner.limit_at_infinity().min(R::zero()),
        }
    }
}

fn sampled_eval<R: Real>(points: &[(R, R)], s: R) -> R {
    if points.is_empty() {
        return R::zero();
    }
    if s <= points[0].0 {
        return points[0].1;
    }
    if s >= points[points.len() - 1].0 {
        return points[points.len() - 1].1;
    }
    let mut i = 0;
    while points[i + 1].0 < s {
        i += 1;
    }
    let (s0, v0) = points[i];
    let (s1, v1) = points[i + 1];
    if s1 == s0 {
        return v0;
    }
    v0 + (v1 - v0) * (s - s0) / (s1 - s0)
}

/// One piece of the positive-axis part, covering `[from, to)`;
/// `to = None` means +∞.
#[derive(Debug, Clone, PartialEq)]
pub struct PositivePiece<R> {
    pub from: R,
    pub to: Option<R>,
    pub kind: PieceKind<R>,
}

impl<R: Real> PositivePiece<R> {
    pub fn is_unbounded(&self) -> bool {
        self.to.is_none()
    }

    pub fn contains(&self, s: R) -> bool {
        s >= self.from && self.to.map_or(true, |t| s < t)
    }
}

/// Piecewise descriptor of the boundary function φ: integer steps on
/// (−∞, 0), general pieces tiling (0, ∞).
#[derive(Debug, Clone, PartialEq)]
pub struct PhiFunction<R> {
    /// Value on (−∞, first breakpoint), or on all of (−∞, 0) with no steps.
    pub negative_tail_value: i64,
    /// Breakpoints ascending, all < 0; each value holds up to the next
    /// breakpoint (the last one up to 0).
    pub negative_steps: Vec<NegStep<R>>,
    pub positive_pieces: Vec<PositivePiece<R>>,
}

impl<R: Real> PhiFunction<R> {
    pub fn new(
        negative_tail_value: i64,
        negative_steps: Vec<NegStep<R>>,
        positive_pieces: Vec<PositivePiece<R>>,
    ) -> Result<Self> {
        for w in negative_steps.windows(2) {
            if w[0].break_at >= w[1].break_at {
                return Err(Error::InvalidPhi("negative breakpoints not ascending".into()));
            }
        }
        if negative_steps.iter().any(|s| s.break_at >= R::zero()) {
            return Err(Error::InvalidPhi("negative breakpoint not below zero".into()));
        }
        if positive_pieces.is_empty() {
            return Err(Error::InvalidPhi("positive pieces must tile (0, inf)".into()));
        }
        if positive_pieces[0].from != R::zero() {
            return Err(Error::InvalidPhi("first positive piece must start at 0".into()));
        }
        for w in positive_pieces.windows(2) {
            match w[0].to {
                Some(t) if t == w[1].from => {}
                _ => return Err(Error::InvalidPhi("positive pieces leave a gap".into())),
            }
        }
        if positive_pieces.last().unwrap().to.is_some() {
            return Err(Error::InvalidPhi("last positive piece must be unbounded".into()));
        }
        Ok(PhiFunction {
            negative_tail_value,
            negative_steps,
            positive_pieces,
        })
    }

    /// φ ≡ 0.
    pub fn zero() -> Self {
        PhiFunction {
            negative_tail_value: 0,
            negative_steps: Vec::new(),
            positive_pieces: vec![PositivePiece {
                from: R::zero(),
                to: None,
                kind: PieceKind::Constant(R::zero()),
            }],
        }
    }

    /// Simple one-interval descriptor: `value` on `[from, to)`, zero
    /// elsewhere on the positive axis.
    pub fn indicator(from: R, to: Option<R>, value: R) -> Self {
        let mut pieces = Vec::new();
        if from > R::zero() {
            pieces.push(PositivePiece {
                from: R::zero(),
                to: Some(from),
                kind: PieceKind::Constant(R::zero()),
            });
        }
        pieces.push(PositivePiece {
            from,
            to,
            kind: PieceKind::Constant(value),
        });
        if let Some(t) = to {
            pieces.push(PositivePiece {
                from: t,
                to: None,
                kind: PieceKind::Constant(R::zero()),
            });
        }
        PhiFunction {
            negative_tail_value: 0,
            negative_steps: Vec::new(),
            positive_pieces: pieces,
        }
    }

    /// Integer step descriptor on the negative axis only (zero on (0, ∞)).
    pub fn negative_indicator(tail_value: i64, steps: Vec<NegStep<R>>) -> Self {
        PhiFunction {
            negative_tail_value: tail_value,
            negative_steps: steps,
            positive_pieces: vec![PositivePiece {
                from: R::zero(),
                to: None,
                kind: PieceKind::Constant(R::zero()),
            }],
        }
    }

    /// Evaluate φ(s) for s ≠ 0.
    pub fn eval(&self, s: R) -> R {
        if s < R::zero() {
            let mut v = self.negative_tail_value;
            for step in &self.negative_steps {
                if s >= step.break_at {
                    v = step.value;
                } else {
                    break;
                }
            }
            ri(v)
        } else {
            for piece in &self.positive_pieces {
                if piece.contains(s) {
                    return piece.kind.eval(s);
                }
            }
            // s beyond the last (unbounded) piece cannot happen; s == 0 or
            // negative-zero falls through to the first piece.
            self.positive_pieces
                .last()
                .map(|p| p.kind.eval(s))
                .unwrap_or(R::zero())
        }
    }

    /// The integer values taken on (−∞, 0), left to right.
    pub fn negative_values(&self) -> Vec<i64> {
        let mut v = vec![self.negative_tail_value];
        v.extend(self.negative_steps.iter().map(|s| s.value));
        v
    }

    /// φ multiplied by a positive integer y.
    pub fn scaled_by_int(&self, y: i64) -> Self {
        let negative_steps = self
            .negative_steps
            .iter()
            .map(|s| NegStep {
                break_at: s.break_at,
                value: s.value * y,
            })
            .collect();
        let positive_pieces = self
            .positive_pieces
            .iter()
            .map(|p| PositivePiece {
                from: p.from,
                to: p.to,
                kind: match &p.kind {
                    PieceKind::Constant(v) => PieceKind::Constant(*v * ri(y)),
                    other => PieceKind::Scaled {
                        inner: Box::new(other.clone()),
                        factor: ri(y),
                    },
                },
            })
            .collect();
        PhiFunction {
            negative_tail_value: self.negative_tail_value * y,
            negative_steps,
            positive_pieces,
        }
    }

    /// Ascending sample grid over (0, ∞) with φ values: `density` samples
    /// per piece (endpoints included; unbounded pieces compactified).
    pub fn sample_positive(&self, density: usize) -> Vec<(R, R)> {
        let d = density.max(2);
        let mut out = Vec::new();
        for piece in &self.positive_pieces {
            match piece.to {
                Some(to) => {
                    for j in 0..d {
                        let t = ri::<R>(j as i64) / ri::<R>((d - 1) as i64);
                        let s = piece.from + (to - piece.from) * t;
                        let s = guard_sample(s, piece.from, to);
                        out.push((s, piece.kind.eval(s)));
                    }
                }
                None => {
                    // u ∈ [0, u_max], s = from + u/(1−u); reaches s ≈ 1e8.
                    let u_max = R::one() - r::<R>(1e-8);
                    for j in 0..d {
                        let u = u_max * ri::<R>(j as i64) / ri::<R>((d - 1) as i64);
                        let mut s = piece.from + u / (R::one() - u);
                        if j == 0 && s == R::zero() {
                            s = r(1e-12);
                        }
                        out.push((s, piece.kind.eval(s)));
                    }
                }
            }
        }
        out
    }

    /// Supremum of φ on (0, 1) and infimum on (1, ∞), estimated on piece
    /// grids (constants are exact).
    fn band_extremes(&self, density: usize) -> (R, R) {
        let mut sup_inner = R::neg_infinity();
        let mut inf_outer = R::infinity();
        for piece in &self.positive_pieces {
            let from = piece.from;
            let to = piece.to;
            if let PieceKind::Constant(v) = piece.kind {
                if from < R::one() {
                    sup_inner = sup_inner.max(v);
                }
                if to.map_or(true, |t| t > R::one()) {
                    inf_outer = inf_outer.min(v);
                }
                continue;
            }
            let lo_in = from.min(R::one());
            let hi_in = to.map_or(R::one(), |t| t.min(R::one()));
            if lo_in < hi_in {
                for j in 0..density {
                    let t = ri::<R>(j as i64) / ri::<R>((density - 1) as i64);
                    let s = guard_sample(lo_in + (hi_in - lo_in) * t, lo_in, hi_in);
                    sup_inner = sup_inner.max(piece.kind.eval(s));
                }
            }
            let lo_out = from.max(R::one());
            if to.map_or(true, |t| t > lo_out) {
                match to {
                    Some(t) => {
                        for j in 0..density {
                            let w = ri::<R>(j as i64) / ri::<R>((density - 1) as i64);
                            let s = guard_sample(lo_out + (t - lo_out) * w, lo_out, t);
                            inf_outer = inf_outer.min(piece.kind.eval(s));
                        }
                    }
                    None => {
                        let u_max = R::one() - r::<R>(1e-8);
                        for j in 0..density {
                            let u = u_max * ri::<R>(j as i64) / ri::<R>((density - 1) as i64);
                            let s = lo_out + u / (R::one() - u);
                            inf_outer = inf_outer.min(piece.kind.eval(s));
                        }
                        inf_outer = inf_outer.min(piece.kind.limit_at_infinity());
                    }
                }
            }
        }
        if sup_inner == R::neg_infinity() {
            sup_inner = R::zero();
        }
        if inf_outer == R::infinity() {
            inf_outer = R::zero();
        }
        (sup_inner, inf_outer)
    }
}

/// Nudge endpoint samples slightly inward so closed forms with removable
/// endpoint singularities evaluate finitely.
fn guard_sample<R: Real>(s: R, lo: R, hi: R) -> R {
    let width = hi - lo;
    let eps = width * r::<R>(1e-12);
    if s <= lo {
        lo + eps
    } else if s >= hi {
        hi - eps
    } else {
        s
    }
}

/// Quadruple (b⁺, b⁻, c, φ) parameterising the exponential representation of
/// a generating function.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialRep<R> {
    pub b_plus: R,
    pub b_minus: R,
    pub c: R,
    pub phi: PhiFunction<R>,
}

impl<R: Real> ExponentialRep<R> {
    pub fn new(b_plus: R, b_minus: R, c: R, phi: PhiFunction<R>) -> Result<Self> {
        if b_plus < R::zero() || b_minus < R::zero() {
            return Err(Error::ParameterOutOfRange("b± must be nonnegative".into()));
        }
        if !c.is_finite() {
            return Err(Error::ParameterOutOfRange("c must be finite".into()));
        }
        Ok(ExponentialRep {
            b_plus,
            b_minus,
            c,
            phi,
        })
    }

    /// Representation of the y-th convolution power: (y·b⁺, y·b⁻, y·c, y·φ).
    pub fn power(&self, y: i64) -> Self {
        ExponentialRep {
            b_plus: self.b_plus * ri(y),
            b_minus: self.b_minus * ri(y),
            c: self.c * ri(y),
            phi: self.phi.scaled_by_int(y),
        }
    }

    /// Measure-form view σ = b⁺δ_∞ − b⁻δ₀ + φ(s)/(s²+1) ds.
    pub fn boundary_measure(&self) -> SignedBoundaryMeasure<R> {
        SignedBoundaryMeasure {
            atom_at_infinity: self.b_plus,
            atom_at_zero: -self.b_minus,
            phi: self.phi.clone(),
        }
    }
}

/// σ(ds) = b⁺δ_∞(ds) − b⁻δ₀(ds) + φ(s)/(s²+1) ds.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedBoundaryMeasure<R> {
    pub atom_at_infinity: R,
    pub atom_at_zero: R,
    pub phi: PhiFunction<R>,
}

impl<R: Real> SignedBoundaryMeasure<R> {
    pub fn density(&self, s: R) -> R {
        self.phi.eval(s) / (s * s + R::one())
    }
}

/// Pass/fail with an optional witness location.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionCheck<R> {
    pub pass: bool,
    pub witness: Option<(R, String)>,
}

impl<R> ConditionCheck<R> {
    fn pass() -> Self {
        ConditionCheck {
            pass: true,
            witness: None,
        }
    }

    fn fail(at: R, what: impl Into<String>) -> Self {
        ConditionCheck {
            pass: false,
            witness: Some((at, what.into())),
        }
    }
}

/// Per-condition report of [`check_admissible`].
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport<R> {
    /// (i) stepwise decreasing on (−∞, 0).
    pub stepwise_decreasing: ConditionCheck<R>,
    /// (ii) increasing-after-rounding on (0, ∞).
    pub increasing_after_rounding: ConditionCheck<R>,
    /// (iii) φ ≤ 0 on (0, 1), φ ≥ 0 on (1, ∞).
    pub sign_bands: ConditionCheck<R>,
    /// (iv) ∫ |φ(s)|/(s²+1) ds < ∞, with the numeric value when finite.
    pub integrable: ConditionCheck<R>,
    pub integral_value: Option<R>,
}

impl<R> AdmissibilityReport<R> {
    pub fn all_pass(&self) -> bool {
        self.stepwise_decreasing.pass
            && self.increasing_after_rounding.pass
            && self.sign_bands.pass
            && self.integrable.pass
    }
}

/// Check conditions (i)–(iv) on the quadruple. Condition (v) is a property
/// of F near z = 1 and is probed separately (see `genfun::check_c5`).
pub fn check_admissible<R: Real>(
    rep: &ExponentialRep<R>,
    grid_density: usize,
) -> Result<AdmissibilityReport<R>> {
    if grid_density < 2 {
        return Err(Error::GridTooCoarse {
            need: 2,
            got: grid_density,
        });
    }
    let phi = &rep.phi;
    let eps = r::<R>(1e-12);

    // (i) integer by construction; values must not increase as s grows.
    let mut cond_i = ConditionCheck::pass();
    let neg = phi.negative_values();
    for (idx, w) in neg.windows(2).enumerate() {
        if w[1] > w[0] {
            let at = phi.negative_steps[idx].break_at;
            cond_i = ConditionCheck::fail(at, format!("step rises from {} to {}", w[0], w[1]));
            break;
        }
    }

    let samples = phi.sample_positive(grid_density.max(8));

    // (ii) running criterion φ(t) ≥ ⌈sup_{s≤t} φ(s)⌉ − 1.
    let mut cond_ii = ConditionCheck::pass();
    let mut running_sup = R::neg_infinity();
    for &(s, v) in &samples {
        running_sup = running_sup.max(v);
        let floor_allowed = (running_sup - r::<R>(1e-9)).ceil() - R::one();
        if v < floor_allowed - r::<R>(1e-9) {
            cond_ii = ConditionCheck::fail(
                s,
                format!("phi = {v} falls below rounded running maximum {floor_allowed}"),
            );
            break;
        }
    }

    // (iii) sign bands.
    let mut cond_iii = ConditionCheck::pass();
    for &(s, v) in &samples {
        if s < R::one() && v > eps {
            cond_iii = ConditionCheck::fail(s, format!("phi = {v} positive on (0, 1)"));
            break;
        }
        if s > R::one() && v < -eps {
            cond_iii = ConditionCheck::fail(s, format!("phi = {v} negative on (1, inf)"));
            break;
        }
    }

    // (iv) structural: bounded pieces integrate finitely; unbounded pieces
    // are bounded for every registered kind. Quadrature confirms the value.
    let mut cond_iv = ConditionCheck::pass();
    let mut integral = R::zero();
    {
        let mut neg_bounds = vec![R::neg_infinity()];
        neg_bounds.extend(phi.negative_steps.iter().map(|s| s.break_at));
        neg_bounds.push(R::zero());
        let values = phi.negative_values();
        for (i, &v) in values.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let lo = neg_bounds[i];
            let hi = neg_bounds[i + 1];
            // ∫ |v|/(s²+1) ds = |v| (atan hi − atan lo).
            let lo_at = if lo == R::neg_infinity() {
                -R::FRAC_PI_2()
            } else {
                lo.atan()
            };
            integral = integral + ri::<R>(v.abs()) * (hi.atan() - lo_at);
        }
    }
    for piece in &phi.positive_pieces {
        let f = |s: R| piece.kind.eval(s).abs() / (s * s + R::one());
        let contribution = match piece.to {
            Some(to) => integrate_real(f, piece.from, to, r(1e-10)).map(|x| x.0),
            None => crate::quad::integrate_semi_infinite(
                |s| num_complex::Complex::new(f(s), R::zero()),
                piece.from,
                r(1e-10),
            )
            .map(|x| x.value.re),
        };
        match contribution {
            Ok(v) => integral = integral + v,
            Err(_) => {
                cond_iv = ConditionCheck::fail(piece.from, "piece integral did not converge");
                break;
            }
        }
    }

    let integral_value = cond_iv.pass.then_some(integral);
    Ok(AdmissibilityReport {
        stepwise_decreasing: cond_i,
        increasing_after_rounding: cond_ii,
        sign_bands: cond_iii,
        integrable: cond_iv,
        integral_value,
    })
}

/// Outcome of the necessary screen extracted from the p + q < 1 lemma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryMassReport<R> {
    /// Largest p with φ ≤ −p on (0, 1).
    pub p: R,
    /// Largest q with φ ≥ q on (1, ∞).
    pub q: R,
    pub pass: bool,
}

/// p = inf(−φ) on (0, 1), q = inf(φ) on (1, ∞); passes iff p + q < 1.
pub fn check_boundary_mass<R: Real>(phi: &PhiFunction<R>) -> BoundaryMassReport<R> {
    let (sup_inner, inf_outer) = phi.band_extremes(257);
    let p = -sup_inner;
    let q = inf_outer;
    BoundaryMassReport {
        p,
        q,
        pass: p + q < R::one(),
    }
}

/// Split a piece at interior point x, when it straddles x.
fn split_piece_at<R: Real>(piece: &PositivePiece<R>, x: R) -> Vec<PositivePiece<R>> {
    let straddles = piece.from < x && piece.to.map_or(true, |t| t > x);
    if !straddles {
        return vec![piece.clone()];
    }
    vec![
        PositivePiece {
            from: piece.from,
            to: Some(x),
            kind: piece.kind.clone(),
        },
        PositivePiece {
            from: x,
            to: piece.to,
            kind: piece.kind.clone(),
        },
    ]
}

#[derive(PartialEq)]
enum PieceSign {
    NonNegative,
    NonPositive,
    Mixed,
}

fn classify_piece_sign<R: Real>(piece: &PositivePiece<R>) -> PieceSign {
    if let PieceKind::Constant(v) = piece.kind {
        return if v >= R::zero() {
            PieceSign::NonNegative
        } else {
            PieceSign::NonPositive
        };
    }
    let tiny = r::<R>(1e-12);
    let probe = PhiFunction {
        negative_tail_value: 0,
        negative_steps: Vec::new(),
        positive_pieces: vec![PositivePiece {
            from: piece.from,
            to: piece.to,
            kind: piece.kind.clone(),
        }],
    };
    let mut any_pos = false;
    let mut any_neg = false;
    // Fake tiling is irrelevant here; sample only this piece's range.
    for (_, v) in probe_samples(&probe, 65) {
        if v > tiny {
            any_pos = true;
        }
        if v < -tiny {
            any_neg = true;
        }
    }
    match (any_pos, any_neg) {
        (true, true) => PieceSign::Mixed,
        (false, true) => PieceSign::NonPositive,
        _ => PieceSign::NonNegative,
    }
}

fn probe_samples<R: Real>(phi: &PhiFunction<R>, density: usize) -> Vec<(R, R)> {
    phi.sample_positive(density)
}

/// Pointwise positive/negative parts φ = φ₊ + φ₋. Pieces straddling s = 1
/// are split there first; sub-pieces of mixed sign are wrapped in clip
/// kinds so the identity holds exactly at every sample point.
pub fn wiener_hopf_split<R: Real>(phi: &PhiFunction<R>) -> (PhiFunction<R>, PhiFunction<R>) {
    let mut pos_pieces = Vec::new();
    let mut neg_pieces = Vec::new();
    for piece in &phi.positive_pieces {
        for part in split_piece_at(piece, R::one()) {
            match classify_piece_sign(&part) {
                PieceSign::NonNegative => {
                    pos_pieces.push(part.clone());
                    neg_pieces.push(PositivePiece {
                        from: part.from,
                        to: part.to,
                        kind: PieceKind::Constant(R::zero()),
                    });
                }
                PieceSign::NonPositive => {
                    neg_pieces.push(part.clone());
                    pos_pieces.push(PositivePiece {
                        from: part.from,
                        to: part.to,
                        kind: PieceKind::Constant(R::zero()),
                    });
                }
                PieceSign::Mixed => {
                    pos_pieces.push(PositivePiece {
                        from: part.from,
                        to: part.to,
                        kind: PieceKind::ClipPos(Box::new(part.kind.clone())),
                    });
                    neg_pieces.push(PositivePiece {
                        from: part.from,
                        to: part.to,
                        kind: PieceKind::ClipNeg(Box::new(part.kind)),
                    });
                }
            }
        }
    }
    let pos_steps: Vec<NegStep<R>> = phi
        .negative_steps
        .iter()
        .map(|s| NegStep {
            break_at: s.break_at,
            value: s.value.max(0),
        })
        .collect();
    let neg_steps: Vec<NegStep<R>> = phi
        .negative_steps
        .iter()
        .map(|s| NegStep {
            break_at: s.break_at,
            value: s.value.min(0),
        })
        .collect();
    let phi_pos = PhiFunction {
        negative_tail_value: phi.negative_tail_value.max(0),
        negative_steps: pos_steps,
        positive_pieces: pos_pieces,
    };
    let phi_neg = PhiFunction {
        negative_tail_value: phi.negative_tail_value.min(0),
        negative_steps: neg_steps,
        positive_pieces: neg_pieces,
    };
    (phi_pos, phi_neg)
}

/// Decomposition φ = φ_pf + φ_amcm: a stepwise part (integer steps, zero
/// near 1) plus a banded part (in [−1, 0] on (0, 1) and [0, 1] on (1, ∞)).
///
/// The stepwise witness φ̃ is taken from the rounded running maximum on a
/// grid, clipped to ≤ −1 on (0, 1) and ≥ 0 on [1, ∞); then
/// φ_pf = φ̃ + 1 on (0, 1) and φ_pf = φ̃ on [1, ∞). Jump locations are
/// resolved to grid resolution.
pub fn pf_amcm_split<R: Real>(
    phi: &PhiFunction<R>,
    grid_density: usize,
) -> Result<(PhiFunction<R>, PhiFunction<R>)> {
    let rep = ExponentialRep::new(R::zero(), R::zero(), R::zero(), phi.clone())?;
    let adm = check_admissible(&rep, grid_density.max(64))?;
    if !adm.all_pass() {
        return Err(Error::NotAdmissible(
            "conditions (i)-(iv) must hold before splitting".into(),
        ));
    }
    let bm = check_boundary_mass(phi);
    if !bm.pass {
        return Err(Error::NotAdmissible(format!(
            "boundary mass screen fails: p + q = {}",
            bm.p + bm.q
        )));
    }

    let samples = phi.sample_positive(grid_density.max(257));
    // Stepwise witness on the grid.
    let mut witness: Vec<(R, i64)> = Vec::with_capacity(samples.len());
    let mut running_sup = R::neg_infinity();
    for &(s, v) in &samples {
        running_sup = running_sup.max(v);
        let tilde = (running_sup - r::<R>(1e-9)).ceil() - R::one();
        let tilde = tilde.to_i64().unwrap_or(0);
        let adjusted = if s < R::one() {
            tilde.min(-1)
        } else {
            tilde.max(0)
        };
        witness.push((s, adjusted));
    }

    // φ_pf step values on (0, ∞): witness + 1 below 1, witness above.
    let pf_value = |s: R, w: i64| -> i64 {
        if s < R::one() {
            w + 1
        } else {
            w
        }
    };

    let mut jump_points: Vec<(R, i64)> = Vec::new();
    let mut current = pf_value(witness[0].0, witness[0].1);
    jump_points.push((R::zero(), current));
    for &(s, w) in witness.iter().skip(1) {
        let v = pf_value(s, w);
        if v != current {
            jump_points.push((s, v));
            current = v;
        }
    }

    // Build φ_pf pieces from the jump list.
    let mut pf_pieces = Vec::new();
    for (i, &(s, v)) in jump_points.iter().enumerate() {
        let to = jump_points.get(i + 1).map(|&(t, _)| t);
        pf_pieces.push(PositivePiece {
            from: s,
            to,
            kind: PieceKind::Constant(ri::<R>(v)),
        });
    }
    let phi_pf = PhiFunction {
        negative_tail_value: phi.negative_tail_value,
        negative_steps: phi.negative_steps.clone(),
        positive_pieces: pf_pieces,
    };

    // φ_amcm = φ − φ_pf on (0, ∞); zero on the negative axis.
    let mut boundaries: Vec<R> = Vec::new();
    for p in &phi.positive_pieces {
        boundaries.push(p.from);
    }
    for &(s, _) in &jump_points {
        boundaries.push(s);
    }
    boundaries.sort_by(|a, b| a.partial_cmp(b).unwrap());
    boundaries.dedup_by(|a, b| *a == *b);

    let mut amcm_pieces = Vec::new();
    for (i, &from) in boundaries.iter().enumerate() {
        let to = boundaries.get(i + 1).copied();
        let probe = match to {
            Some(t) => (from + t) * r::<R>(0.5),
            None => from + R::one(),
        };
        let step = phi_pf.eval(probe);
        let base = phi
            .positive_pieces
            .iter()
            .find(|p| p.contains(probe))
            .expect("pieces tile the positive axis");
        let kind = match &base.kind {
            PieceKind::Constant(v) => PieceKind::Constant(*v - step),
            other => PieceKind::Shifted {
                inner: Box::new(other.clone()),
                offset: -step,
            },
        };
        amcm_pieces.push(PositivePiece { from, to, kind });
    }
    let phi_amcm = PhiFunction {
        negative_tail_value: 0,
        negative_steps: Vec::new(),
        positive_pieces: amcm_pieces,
    };
    Ok((phi_pf, phi_amcm))
}

/// A bell-shaped pmf is infinitely divisible iff φ vanishes on (−∞, 0).
pub fn classify_infinitely_divisible<R: Real>(phi: &PhiFunction<R>) -> bool {
    phi.negative_values().iter().all(|&v| v == 0)
}

/// All convolution powers stay bell-shaped iff φ is nondecreasing on (0, ∞).
pub fn classify_powers_bellshaped<R: Real>(phi: &PhiFunction<R>) -> bool {
    let samples = phi.sample_positive(257);
    let slack = r::<R>(1e-9);
    samples.windows(2).all(|w| w[1].1 >= w[0].1 - slack)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn admissible_phi() -> PhiFunction<f64> {
        // φ = −1 on (0, ½), 0 on (½, 2), 1 on (2, ∞): a PF-style step shape.
        PhiFunction::new(
            0,
            vec![],
            vec![
                PositivePiece {
                    from: 0.0,
                    to: Some(0.5),
                    kind: PieceKind::Constant(-1.0),
                },
                PositivePiece {
                    from: 0.5,
                    to: Some(2.0),
                    kind: PieceKind::Constant(0.0),
                },
                PositivePiece {
                    from: 2.0,
                    to: None,
                    kind: PieceKind::Constant(1.0),
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn admissible_steps_pass_all_four() {
        let rep = ExponentialRep::new(0.0, 0.0, 0.0, admissible_phi()).unwrap();
        let report = check_admissible(&rep, 33).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert!(report.integral_value.unwrap() > 0.0);
    }

    #[test]
    fn positive_phi_on_inner_band_fails_sign_check() {
        let phi = PhiFunction::indicator(0.0, Some(1.0), 0.5f64);
        let rep = ExponentialRep::new(0.0, 0.0, 0.0, phi).unwrap();
        let report = check_admissible(&rep, 33).unwrap();
        assert!(!report.sign_bands.pass);
    }

    #[test]
    fn rising_negative_steps_fail() {
        let phi = PhiFunction::negative_indicator(
            2,
            vec![
                NegStep {
                    break_at: -2.0,
                    value: 3,
                },
                NegStep {
                    break_at: -1.0,
                    value: 0,
                },
            ],
        );
        let rep = ExponentialRep::new(0.0f64, 0.0, 0.0, phi).unwrap();
        let report = check_admissible(&rep, 33).unwrap();
        assert!(!report.stepwise_decreasing.pass);
    }

    #[test]
    fn boundary_mass_borderline_fails() {
        // φ = −0.5 on (0, 1), +0.5 on (1, ∞): p + q = 1 exactly.
        let phi = PhiFunction::new(
            0,
            vec![],
            vec![
                PositivePiece {
                    from: 0.0,
                    to: Some(1.0),
                    kind: PieceKind::Constant(-0.5f64),
                },
                PositivePiece {
                    from: 1.0,
                    to: None,
                    kind: PieceKind::Constant(0.5),
                },
            ],
        )
        .unwrap();
        let report = check_boundary_mass(&phi);
        assert!((report.p - 0.5).abs() < 1e-12);
        assert!((report.q - 0.5).abs() < 1e-12);
        assert!(!report.pass);
    }

    #[test]
    fn geometric_phi_passes_boundary_mass() {
        let phi = PhiFunction::indicator(2.0, None, 1.0f64);
        let report = check_boundary_mass(&phi);
        assert!(report.p.abs() < 1e-12);
        assert!(report.q.abs() < 1e-12);
        assert!(report.pass);
    }

    #[test]
    fn wiener_hopf_split_resums() {
        let phi = PhiFunction::new(
            1,
            vec![NegStep {
                break_at: -1.5,
                value: -2,
            }],
            vec![
                PositivePiece {
                    from: 0.0,
                    to: Some(0.5),
                    kind: PieceKind::Constant(-1.0f64),
                },
                PositivePiece {
                    from: 0.5,
                    to: None,
                    kind: PieceKind::Expr(ExprKind::RrwArctan),
                },
            ],
        )
        .unwrap();
        let (pos, neg) = wiener_hopf_split(&phi);
        for &s in &[-2.0, -1.2, 0.3, 0.7, 0.99, 1.5, 4.0, 100.0] {
            let total = pos.eval(s) + neg.eval(s);
            assert!(
                (total - phi.eval(s)).abs() < 1e-12,
                "resum failed at s = {s}"
            );
            assert!(pos.eval(s) >= 0.0);
            assert!(neg.eval(s) <= 0.0);
        }
    }

    #[test]
    fn pf_amcm_split_constant_example() {
        // φ = −1.5 on (0, ½), 0 on (½, 1), 0 on (1, ∞).
        let phi = PhiFunction::new(
            0,
            vec![],
            vec![
                PositivePiece {
                    from: 0.0,
                    to: Some(0.5),
                    kind: PieceKind::Constant(-1.5f64),
                },
                PositivePiece {
                    from: 0.5,
                    to: Some(1.0),
                    kind: PieceKind::Constant(0.0),
                },
                PositivePiece {
                    from: 1.0,
                    to: None,
                    kind: PieceKind::Constant(0.0),
                },
            ],
        )
        .unwrap();
        let (pf, amcm) = pf_amcm_split(&phi, 1025).unwrap();
        assert!((pf.eval(0.25) - (-1.0)).abs() < 1e-12);
        assert!((amcm.eval(0.25) - (-0.5)).abs() < 1e-12);
        // Near the split grid point ½ the step must return to zero.
        assert!(pf.eval(0.75).abs() < 1e-12);
        assert!(amcm.eval(0.75).abs() < 1e-12);
        assert!(pf.eval(3.0).abs() < 1e-12);
    }

    #[test]
    fn classifiers() {
        let phi = admissible_phi();
        assert!(classify_infinitely_divisible(&phi));
        assert!(classify_powers_bellshaped(&phi));
        let with_neg = PhiFunction::negative_indicator(
            0,
            vec![NegStep {
                break_at: -1.0f64,
                value: -1,
            }],
        );
        assert!(!classify_infinitely_divisible(&with_neg));
        // A down-step inside (1, ∞).
        let down = PhiFunction::new(
            0,
            vec![],
            vec![
                PositivePiece {
                    from: 0.0,
                    to: Some(2.0),
                    kind: PieceKind::Constant(0.0f64),
                },
                PositivePiece {
                    from: 2.0,
                    to: Some(3.0),
                    kind: PieceKind::Constant(2.0),
                },
                PositivePiece {
                    from: 3.0,
                    to: None,
                    kind: PieceKind::Constant(1.0),
                },
            ],
        )
        .unwrap();
        assert!(!classify_powers_bellshaped(&down));
    }

    #[test]
    fn scaled_phi_stays_admissible() {
        let phi = admissible_phi();
        for y in 1..=5 {
            let rep = ExponentialRep::new(0.0, 0.0, 0.0, phi.scaled_by_int(y)).unwrap();
            let report = check_admissible(&rep, 65).unwrap();
            assert!(report.all_pass(), "y = {y}: {report:?}");
        }
    }
}
