//! Sequence constructors: Pólya frequency factors, AM–CM measure pairs,
//! named pmf families, discrete stable laws, and convolution.

use crate::seq::{TailMode, TwoSidedSequence};
use crate::{r, ri, Error, Real, Result};
use num_complex::Complex;

/// Closed integer index range `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexWindow {
    pub lo: i64,
    pub hi: i64,
}

impl IndexWindow {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "window bounds out of order");
        IndexWindow { lo, hi }
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Parameters of a Pólya frequency generating function
/// z^m · exp(b⁺z + b⁻/z + c) · Π (1+γ⁺z)(1+γ⁻/z) / ((1−δ⁺z)(1−δ⁻/z)).
#[derive(Debug, Clone, PartialEq)]
pub struct PolyaFrequencyParams<R> {
    pub m: i64,
    pub b_plus: R,
    pub b_minus: R,
    pub c: R,
    pub gamma_plus: Vec<R>,
    pub gamma_minus: Vec<R>,
    pub delta_plus: Vec<R>,
    pub delta_minus: Vec<R>,
}

impl<R: Real> Default for PolyaFrequencyParams<R> {
    fn default() -> Self {
        PolyaFrequencyParams {
            m: 0,
            b_plus: R::zero(),
            b_minus: R::zero(),
            c: R::zero(),
            gamma_plus: Vec::new(),
            gamma_minus: Vec::new(),
            delta_plus: Vec::new(),
            delta_minus: Vec::new(),
        }
    }
}

impl<R: Real> PolyaFrequencyParams<R> {
    fn validate(&self) -> Result<()> {
        if self.b_plus < R::zero() || self.b_minus < R::zero() {
            return Err(Error::ParameterOutOfRange("b± must be nonnegative".into()));
        }
        if !self.c.is_finite() {
            return Err(Error::ParameterOutOfRange("c must be finite".into()));
        }
        for &g in self.gamma_plus.iter().chain(&self.gamma_minus) {
            if g < R::zero() || g > R::one() {
                return Err(Error::ParameterOutOfRange(format!(
                    "gamma = {g} outside [0, 1]"
                )));
            }
        }
        for &d in self.delta_plus.iter().chain(&self.delta_minus) {
            if d < R::zero() || d >= R::one() {
                return Err(Error::ParameterOutOfRange(format!(
                    "delta = {d} outside [0, 1)"
                )));
            }
        }
        Ok(())
    }

    /// ℓ¹ norm of the full product (every factor has nonnegative coefficients).
    fn total_norm(&self) -> R {
        let mut n = (self.b_plus + self.b_minus + self.c).exp();
        for &g in self.gamma_plus.iter().chain(&self.gamma_minus) {
            n = n * (R::one() + g);
        }
        for &d in self.delta_plus.iter().chain(&self.delta_minus) {
            n = n / (R::one() - d);
        }
        n
    }
}

/// Finite atomic measure on [0, 1): Hausdorff representation of a completely
/// monotone sequence that converges to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure<R> {
    atoms: Vec<(R, R)>,
}

impl<R: Real> DiscreteMeasure<R> {
    /// Atoms are (location, weight) pairs with locations in [0, 1), distinct,
    /// and weights positive.
    pub fn new(mut atoms: Vec<(R, R)>) -> Result<Self> {
        for &(s, w) in &atoms {
            if s < R::zero() || s >= R::one() {
                return Err(Error::ParameterOutOfRange(format!(
                    "atom location {s} outside [0, 1)"
                )));
            }
            if w <= R::zero() || !w.is_finite() {
                return Err(Error::ParameterOutOfRange(format!(
                    "atom weight {w} not positive"
                )));
            }
        }
        atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        if atoms.windows(2).any(|p| p[0].0 == p[1].0) {
            return Err(Error::ParameterOutOfRange(
                "duplicate atom locations".into(),
            ));
        }
        Ok(DiscreteMeasure { atoms })
    }

    pub fn atoms(&self) -> &[(R, R)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> R {
        self.atoms.iter().fold(R::zero(), |acc, &(_, w)| acc + w)
    }

    /// k-th moment Σ wᵢ sᵢᵏ with the 0⁰ = 1 convention.
    pub fn moment(&self, k: u32) -> R {
        self.atoms.iter().fold(R::zero(), |acc, &(s, w)| {
            let p = if k == 0 { R::one() } else { s.powi(k as i32) };
            acc + w * p
        })
    }
}

/// Convolution (a*b)(k) = Σⱼ a(j) b(k−j) on the Minkowski sum of the windows.
pub fn convolve<R: Real>(
    a: &TwoSidedSequence<R>,
    b: &TwoSidedSequence<R>,
) -> TwoSidedSequence<R> {
    let n = a.len() + b.len() - 1;
    let mut values = vec![R::zero(); n];
    for (i, &av) in a.values().iter().enumerate() {
        if av == R::zero() {
            continue;
        }
        for (j, &bv) in b.values().iter().enumerate() {
            values[i + j] = values[i + j] + av * bv;
        }
    }
    let tail_mode = combine_tails(a, b);
    TwoSidedSequence::with_tail(a.offset() + b.offset(), values, tail_mode)
        .expect("convolution of valid sequences")
}

fn combine_tails<R: Real>(a: &TwoSidedSequence<R>, b: &TwoSidedSequence<R>) -> TailMode<R> {
    match (a.tail_mode(), b.tail_mode()) {
        (TailMode::ExactZero, TailMode::ExactZero) => TailMode::ExactZero,
        (ta, tb) => {
            let (da, ea) = (ta.deficit(), ta.entry_bound());
            let (db, eb) = (tb.deficit(), tb.entry_bound());
            let (na, nb) = (a.l1_norm(), b.l1_norm());
            TailMode::Truncated {
                deficit: da * (nb + db) + db * na,
                entry_bound: ea * nb + eb * na + ea * db + eb * da,
            }
        }
    }
}

/// n-fold convolution power; n = 0 gives the delta sequence.
pub fn convolution_power<R: Real>(a: &TwoSidedSequence<R>, n: u32) -> TwoSidedSequence<R> {
    let mut out = TwoSidedSequence::delta(0);
    for _ in 0..n {
        out = convolve(&out, a);
    }
    out
}

/// Rescale so the entries sum to one.
pub fn normalize<R: Real>(a: &TwoSidedSequence<R>) -> Result<TwoSidedSequence<R>> {
    let mass = a.mass();
    if mass <= R::zero() {
        return Err(Error::InvalidSequence("nonpositive total mass".into()));
    }
    Ok(a.scaled(R::one() / mass))
}

/// Coefficients of the Pólya frequency generating function over `window`,
/// built by convolving elementary factor sequences.
///
/// Factors are convolved shortest-support first so intermediate windows stay
/// tight; each truncated factor gets an equal share of the deficit budget.
pub fn pf_sequence<R: Real>(
    params: &PolyaFrequencyParams<R>,
    window: IndexWindow,
    tol: R,
) -> Result<TwoSidedSequence<R>> {
    params.validate()?;
    if tol <= R::zero() {
        return Err(Error::ParameterOutOfRange("tol must be positive".into()));
    }

    let total_norm = params.total_norm();
    let n_truncated = params.delta_plus.len()
        + params.delta_minus.len()
        + usize::from(params.b_plus > R::zero())
        + usize::from(params.b_minus > R::zero());

    let mut factors: Vec<TwoSidedSequence<R>> = Vec::new();
    for &g in &params.gamma_plus {
        factors.push(TwoSidedSequence::new(0, vec![R::one(), g])?);
    }
    for &g in &params.gamma_minus {
        factors.push(TwoSidedSequence::new(-1, vec![g, R::one()])?);
    }
    if n_truncated > 0 {
        // Per-factor tail budget: tail_f · (total_norm / norm_f) summed over
        // factors must stay below tol/2.
        let budget = tol / (r::<R>(2.0) * ri::<R>(n_truncated as i64));
        if params.b_plus > R::zero() {
            factors.push(exp_factor(params.b_plus, budget / total_norm * params.b_plus.exp(), false)?);
        }
        if params.b_minus > R::zero() {
            factors.push(exp_factor(params.b_minus, budget / total_norm * params.b_minus.exp(), true)?);
        }
        for &d in &params.delta_plus {
            factors.push(geometric_factor(d, budget / total_norm / (R::one() - d), false)?);
        }
        for &d in &params.delta_minus {
            factors.push(geometric_factor(d, budget / total_norm / (R::one() - d), true)?);
        }
    }

    factors.sort_by_key(|f| f.len());
    let mut out = TwoSidedSequence::delta(params.m);
    for f in &factors {
        out = convolve(&out, f);
    }
    out = out.scaled(params.c.exp());

    clip_to_window(&out, window, tol)
}

/// Series of exp(b·z) (or exp(b/z) when mirrored), truncated once the tail
/// mass drops below `tail_budget`.
fn exp_factor<R: Real>(b: R, tail_budget: R, mirrored: bool) -> Result<TwoSidedSequence<R>> {
    let mut values = vec![R::one()];
    let mut term = R::one();
    let mut k = 0i64;
    loop {
        k += 1;
        term = term * b / ri::<R>(k);
        values.push(term);
        // For k+1 > b the remaining tail is a sub-geometric series.
        if k > 4 && ri::<R>(k + 1) > b {
            let ratio = b / ri::<R>(k + 1);
            let tail = term * ratio / (R::one() - ratio);
            if tail < tail_budget {
                let seq = TwoSidedSequence::with_tail(
                    0,
                    values,
                    TailMode::Truncated {
                        deficit: tail,
                        entry_bound: term * ratio,
                    },
                )?;
                return Ok(if mirrored { seq.mirror() } else { seq });
            }
        }
        if k > 10_000 {
            return Err(Error::ParameterOutOfRange(format!(
                "exp factor b = {b} too large"
            )));
        }
    }
}

/// Series of 1/(1−δz) (or the mirrored version), truncated at tail mass
/// below `tail_budget`.
fn geometric_factor<R: Real>(d: R, tail_budget: R, mirrored: bool) -> Result<TwoSidedSequence<R>> {
    if d == R::zero() {
        return Ok(TwoSidedSequence::delta(0));
    }
    let mut values = vec![R::one()];
    let mut term = R::one();
    let mut count = 0usize;
    loop {
        term = term * d;
        values.push(term);
        count += 1;
        let tail = term * d / (R::one() - d);
        if tail < tail_budget {
            let seq = TwoSidedSequence::with_tail(
                0,
                values,
                TailMode::Truncated {
                    deficit: tail,
                    entry_bound: term * d,
                },
            )?;
            return Ok(if mirrored { seq.mirror() } else { seq });
        }
        if count > 2_000_000 {
            return Err(Error::ParameterOutOfRange(format!(
                "delta = {d} too close to 1 for tolerance"
            )));
        }
    }
}

/// Restrict to `window`, folding clipped mass into the deficit. Errors when
/// the resulting deficit exceeds `tol`.
fn clip_to_window<R: Real>(
    seq: &TwoSidedSequence<R>,
    window: IndexWindow,
    tol: R,
) -> Result<TwoSidedSequence<R>> {
    let lo = window.lo.max(seq.min_k());
    let hi = window.hi.min(seq.max_k());
    if lo > hi {
        return Err(Error::WindowTooNarrow {
            deficit: seq.l1_norm().to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut clipped_mass = R::zero();
    let mut clipped_max = R::zero();
    let mut values = Vec::with_capacity((hi - lo + 1) as usize);
    for (k, v) in seq.iter() {
        if k < lo || k > hi {
            clipped_mass = clipped_mass + v.abs();
            clipped_max = clipped_max.max(v.abs());
        } else {
            values.push(v);
        }
    }
    let tail_mode = if clipped_mass == R::zero() && seq.tail_mode().is_exact() {
        TailMode::ExactZero
    } else {
        TailMode::Truncated {
            deficit: clipped_mass + seq.tail_mode().deficit(),
            entry_bound: clipped_max.max(seq.tail_mode().entry_bound()),
        }
    };
    let deficit = tail_mode.deficit();
    if deficit > tol {
        return Err(Error::WindowTooNarrow {
            deficit: deficit.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    TwoSidedSequence::with_tail(lo, values, tail_mode)
}

/// AM–CM sequence from a Hausdorff measure pair: a(k) = Σ wᵢsᵢᵏ for k ≥ 0 and
/// a(k) = Σ wᵢsᵢ^{−k} for k ≤ 0, with matching total masses.
pub fn amcm_sequence<R: Real>(
    mu_plus: &DiscreteMeasure<R>,
    mu_minus: &DiscreteMeasure<R>,
    window: IndexWindow,
    tol: R,
) -> Result<TwoSidedSequence<R>> {
    let mass_plus = mu_plus.total_mass();
    let mass_minus = mu_minus.total_mass();
    if (mass_plus - mass_minus).abs() > tol {
        return Err(Error::MassMismatch {
            plus: mass_plus.to_f64().unwrap_or(f64::NAN),
            minus: mass_minus.to_f64().unwrap_or(f64::NAN),
        });
    }
    if window.lo > 0 || window.hi < 0 {
        return Err(Error::ParameterOutOfRange(
            "window must contain index 0".into(),
        ));
    }
    let mut values = vec![R::zero(); window.len()];
    for k in window.lo..=window.hi {
        let v = if k >= 0 {
            mu_plus.moment(k as u32)
        } else {
            mu_minus.moment((-k) as u32)
        };
        values[(k - window.lo) as usize] = v;
    }
    // Geometric tails beyond the window on each side.
    let tail = |m: &DiscreteMeasure<R>, k: u32| -> (R, R) {
        let mut mass = R::zero();
        let mut bound = R::zero();
        for &(s, w) in m.atoms() {
            if s > R::zero() {
                let head = w * s.powi(k as i32 + 1);
                mass = mass + head / (R::one() - s);
                bound = bound.max(head);
            }
        }
        (mass, bound)
    };
    let (dp, ep) = tail(mu_plus, window.hi as u32);
    let (dm, em) = tail(mu_minus, (-window.lo) as u32);
    let tail_mode = TailMode::Truncated {
        deficit: dp + dm,
        entry_bound: ep.max(em),
    };
    TwoSidedSequence::with_tail(window.lo, values, tail_mode)
}

/// Generating function of an AM–CM pair at z by the two-integral formula
/// F(z) = ∫ sz/(1−sz) μ₊(ds) + ∫ 1/(1−s/z) μ₋(ds).
pub fn amcm_gf_closed<R: Real>(
    mu_plus: &DiscreteMeasure<R>,
    mu_minus: &DiscreteMeasure<R>,
    z: Complex<R>,
) -> Complex<R> {
    let one = Complex::new(R::one(), R::zero());
    let mut f = Complex::new(R::zero(), R::zero());
    for &(s, w) in mu_plus.atoms() {
        if s > R::zero() {
            let sz = z * s;
            f = f + sz / (one - sz) * w;
        }
    }
    for &(s, w) in mu_minus.atoms() {
        f = f + one / (one - one * s / z) * w;
    }
    f
}

/// Binomial pmf over {0, …, n}.
pub fn binomial_pmf<R: Real>(n: u32, p: R) -> Result<TwoSidedSequence<R>> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange("n must be at least 1".into()));
    }
    if p <= R::zero() || p >= R::one() {
        return Err(Error::ParameterOutOfRange(format!("p = {p} outside (0, 1)")));
    }
    let q = R::one() - p;
    let mut values = Vec::with_capacity(n as usize + 1);
    let mut v = q.powi(n as i32);
    values.push(v);
    for k in 0..n {
        v = v * ri::<R>((n - k) as i64) / ri::<R>(k as i64 + 1) * p / q;
        values.push(v);
    }
    TwoSidedSequence::new(0, values)
}

/// Poisson pmf e^{−λ} λᵏ/k! over `[0, k_max]`; errors when the dropped tail
/// mass exceeds `tol`.
pub fn poisson_pmf<R: Real>(lambda: R, k_max: u32, tol: R) -> Result<TwoSidedSequence<R>> {
    if lambda <= R::zero() {
        return Err(Error::ParameterOutOfRange(format!(
            "lambda = {lambda} not positive"
        )));
    }
    let mut values = Vec::with_capacity(k_max as usize + 1);
    let mut v = (-lambda).exp();
    values.push(v);
    for k in 0..k_max {
        v = v * lambda / ri::<R>(k as i64 + 1);
        values.push(v);
    }
    truncated_pmf(values, lambda / ri::<R>(k_max as i64 + 2), tol)
}

/// Negative binomial pmf C(λ+k−1, k) p^λ (1−p)ᵏ over `[0, k_max]`.
pub fn negative_binomial_pmf<R: Real>(
    lambda: R,
    p: R,
    k_max: u32,
    tol: R,
) -> Result<TwoSidedSequence<R>> {
    if lambda <= R::zero() {
        return Err(Error::ParameterOutOfRange(format!(
            "lambda = {lambda} not positive"
        )));
    }
    if p <= R::zero() || p >= R::one() {
        return Err(Error::ParameterOutOfRange(format!("p = {p} outside (0, 1)")));
    }
    let q = R::one() - p;
    let mut values = Vec::with_capacity(k_max as usize + 1);
    let mut v = p.powf(lambda);
    values.push(v);
    for k in 0..k_max {
        let kf = ri::<R>(k as i64);
        v = v * (lambda + kf) / (kf + R::one()) * q;
        values.push(v);
    }
    let next_ratio = (lambda + ri::<R>(k_max as i64)) / ri::<R>(k_max as i64 + 1) * q;
    truncated_pmf(values, next_ratio.min(r(0.999_999)), tol)
}

fn truncated_pmf<R: Real>(values: Vec<R>, next_ratio: R, tol: R) -> Result<TwoSidedSequence<R>> {
    let sum = values.iter().fold(R::zero(), |a, &b| a + b);
    let deficit = (R::one() - sum).max(R::zero());
    if deficit > tol {
        return Err(Error::WindowTooNarrow {
            deficit: deficit.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    let entry_bound = (*values.last().unwrap() * next_ratio).min(deficit);
    TwoSidedSequence::with_tail(
        0,
        values,
        TailMode::Truncated {
            deficit,
            entry_bound,
        },
    )
}

/// Geometric sequence qᵏ over `[0, k_max]` (not normalised; mass 1/(1−q)).
pub fn geometric_seq<R: Real>(q: R, k_max: u32, tol: R) -> Result<TwoSidedSequence<R>> {
    if q <= R::zero() || q >= R::one() {
        return Err(Error::ParameterOutOfRange(format!("q = {q} outside (0, 1)")));
    }
    let mut values = Vec::with_capacity(k_max as usize + 1);
    let mut v = R::one();
    values.push(v);
    for _ in 0..k_max {
        v = v * q;
        values.push(v);
    }
    let deficit = v * q / (R::one() - q);
    if deficit > tol {
        return Err(Error::WindowTooNarrow {
            deficit: deficit.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    TwoSidedSequence::with_tail(
        0,
        values,
        TailMode::Truncated {
            deficit,
            entry_bound: v * q,
        },
    )
}

/// One-sided discrete stable pmf: coefficients of exp(−λ(1−z)^ν) over
/// `[0, n_max]`, by power-series exponentiation.
///
/// With g the series of −λ(1−z)^ν, the recurrence reads a(0) = e^{g₀},
/// a(k) = (1/k) Σ_{j=1}^{k} j g_j a(k−j). The binomial coefficients C(ν, k)
/// come from the ratio recurrence C(ν, k) = C(ν, k−1)(ν−k+1)/k.
pub fn discrete_stable<R: Real>(lambda: R, nu: R, n_max: u32) -> Result<TwoSidedSequence<R>> {
    if lambda <= R::zero() {
        return Err(Error::ParameterOutOfRange(format!(
            "lambda = {lambda} not positive"
        )));
    }
    if nu <= R::zero() || nu > R::one() {
        return Err(Error::ParameterOutOfRange(format!("nu = {nu} outside (0, 1]")));
    }
    let n = n_max as usize;
    // g[k] = −λ C(ν,k) (−1)^k; positive for k ≥ 1.
    let mut g = vec![R::zero(); n + 1];
    g[0] = -lambda;
    let mut binom = R::one();
    for k in 1..=n {
        let kf = ri::<R>(k as i64);
        binom = binom * (nu - kf + R::one()) / kf;
        let sign = if k % 2 == 0 { R::one() } else { -R::one() };
        g[k] = -lambda * binom * sign;
    }
    let mut a = vec![R::zero(); n + 1];
    a[0] = g[0].exp();
    for k in 1..=n {
        let mut acc = R::zero();
        for j in 1..=k {
            acc = acc + ri::<R>(j as i64) * g[j] * a[k - j];
        }
        a[k] = acc / ri::<R>(k as i64);
    }
    let sum = a.iter().fold(R::zero(), |x, &y| x + y);
    let deficit = (R::one() - sum).max(R::zero());
    // Omitted entries are positive, sum to the deficit, and (past the mode)
    // sit below the last stored entry.
    let entry_bound = a[n].max(R::zero()).min(deficit);
    TwoSidedSequence::with_tail(
        0,
        a,
        TailMode::Truncated {
            deficit,
            entry_bound,
        },
    )
}

/// Two-sided discrete stable pmf: one-sided law with weight λ₊ convolved with
/// the mirror image of the one-sided law with weight λ₋, same ν on both
/// sides. A zero weight degenerates that side to the delta sequence.
pub fn two_sided_discrete_stable<R: Real>(
    lambda_plus: R,
    lambda_minus: R,
    nu: R,
    n_max: u32,
) -> Result<TwoSidedSequence<R>> {
    let side = |lam: R| -> Result<TwoSidedSequence<R>> {
        if lam == R::zero() {
            Ok(TwoSidedSequence::delta(0))
        } else {
            discrete_stable(lam, nu, n_max)
        }
    };
    if lambda_plus < R::zero() || lambda_minus < R::zero() {
        return Err(Error::ParameterOutOfRange(
            "lambda weights must be nonnegative".into(),
        ));
    }
    let plus = side(lambda_plus)?;
    let minus = side(lambda_minus)?.mirror();
    Ok(convolve(&plus, &minus))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convolve_identity_and_square() {
        let d = TwoSidedSequence::<f64>::delta(0);
        let b = TwoSidedSequence::new(2, vec![0.5, 0.25, 0.125]).unwrap();
        assert_eq!(convolve(&d, &b), b);
        let ones = TwoSidedSequence::new(0, vec![1.0, 1.0]).unwrap();
        let sq = convolve(&ones, &ones);
        assert_eq!(sq.values(), &[1.0, 2.0, 1.0]);
    }

    #[test]
    fn bernoulli_power_is_binomial() {
        let p = 0.3f64;
        let bern = TwoSidedSequence::new(0, vec![1.0 - p, p]).unwrap();
        let four = convolution_power(&bern, 4);
        let pmf = binomial_pmf(4, p).unwrap();
        for k in 0..=4 {
            assert!((four.get(k) - pmf.get(k)).abs() < 1e-15);
        }
    }

    #[test]
    fn pf_geometric_matches_powers_of_half() {
        let params = PolyaFrequencyParams {
            delta_plus: vec![0.5f64],
            ..Default::default()
        };
        let seq = pf_sequence(&params, IndexWindow::new(0, 60), 1e-12).unwrap();
        for k in 0..=20 {
            assert!((seq.get(k) - 0.5f64.powi(k as i32)).abs() < 1e-14);
        }
    }

    #[test]
    fn pf_exponential_matches_poisson() {
        let lambda = 1.5f64;
        let params = PolyaFrequencyParams {
            b_plus: lambda,
            c: -lambda,
            ..Default::default()
        };
        let seq = pf_sequence(&params, IndexWindow::new(0, 50), 1e-12).unwrap();
        let pois = poisson_pmf(lambda, 50, 1e-12).unwrap();
        for k in 0..=30 {
            assert!((seq.get(k) - pois.get(k)).abs() < 1e-15);
        }
    }

    #[test]
    fn pf_single_gamma_is_bernoulli_like() {
        let params = PolyaFrequencyParams {
            gamma_plus: vec![1.0f64],
            ..Default::default()
        };
        let seq = pf_sequence(&params, IndexWindow::new(-2, 2), 1e-12).unwrap();
        assert_eq!(seq.get(0), 1.0);
        assert_eq!(seq.get(1), 1.0);
        assert_eq!(seq.get(2), 0.0);
    }

    #[test]
    fn pf_constant_only_is_scaled_delta() {
        let params = PolyaFrequencyParams {
            c: 0.7f64,
            ..Default::default()
        };
        let seq = pf_sequence(&params, IndexWindow::new(-1, 1), 1e-12).unwrap();
        assert!((seq.get(0) - 0.7f64.exp()).abs() < 1e-15);
        assert_eq!(seq.get(1), 0.0);
    }

    #[test]
    fn amcm_two_geometric_tails() {
        let mu_plus = DiscreteMeasure::new(vec![(0.5f64, 1.0)]).unwrap();
        let mu_minus = DiscreteMeasure::new(vec![(1.0 / 3.0, 1.0)]).unwrap();
        let seq = amcm_sequence(&mu_plus, &mu_minus, IndexWindow::new(-40, 40), 1e-9).unwrap();
        assert!((seq.get(3) - 0.125).abs() < 1e-15);
        assert!((seq.get(-2) - 1.0 / 9.0).abs() < 1e-15);
        assert!((seq.get(0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn amcm_delta_measures_give_delta_sequence() {
        let m = DiscreteMeasure::new(vec![(0.0f64, 1.0)]).unwrap();
        let seq = amcm_sequence(&m, &m, IndexWindow::new(-5, 5), 1e-12).unwrap();
        assert_eq!(seq.get(0), 1.0);
        for k in 1..=5 {
            assert_eq!(seq.get(k), 0.0);
            assert_eq!(seq.get(-k), 0.0);
        }
    }

    #[test]
    fn amcm_mass_mismatch_rejected() {
        let mu_plus = DiscreteMeasure::new(vec![(0.5f64, 1.0)]).unwrap();
        let mu_minus = DiscreteMeasure::new(vec![(0.5f64, 2.0)]).unwrap();
        assert!(matches!(
            amcm_sequence(&mu_plus, &mu_minus, IndexWindow::new(-5, 5), 1e-9),
            Err(Error::MassMismatch { .. })
        ));
    }

    #[test]
    fn binomial_two_half() {
        let pmf = binomial_pmf(2, 0.5f64).unwrap();
        assert_eq!(pmf.values(), &[0.25, 0.5, 0.25]);
    }

    #[test]
    fn poisson_at_zero() {
        let pmf = poisson_pmf(1.0f64, 40, 1e-12).unwrap();
        assert!((pmf.get(0) - (-1.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn negative_binomial_at_zero() {
        let pmf = negative_binomial_pmf(0.5f64, 0.5, 80, 1e-9).unwrap();
        assert!((pmf.get(0) - 0.5f64.powf(0.5)).abs() < 1e-15);
    }

    #[test]
    fn discrete_stable_nu_one_is_poisson() {
        let ds = discrete_stable(2.0f64, 1.0, 40).unwrap();
        let pois = poisson_pmf(2.0f64, 40, 1e-9).unwrap();
        for k in 0..=40 {
            assert!((ds.get(k) - pois.get(k)).abs() < 1e-14);
        }
    }

    #[test]
    fn discrete_stable_at_zero() {
        let ds = discrete_stable(0.7f64, 0.5, 100).unwrap();
        assert!((ds.get(0) - (-0.7f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn two_sided_stable_degenerate_and_symmetric() {
        let one_sided = discrete_stable(1.0f64, 0.5, 200).unwrap();
        let two = two_sided_discrete_stable(1.0f64, 0.0, 0.5, 200).unwrap();
        for k in 0..=200 {
            assert!((two.get(k) - one_sided.get(k)).abs() < 1e-15);
        }
        let sym = two_sided_discrete_stable(0.8f64, 0.8, 0.5, 150).unwrap();
        for k in 1..=100 {
            assert!((sym.get(k) - sym.get(-k)).abs() < 1e-14);
        }
    }
}
