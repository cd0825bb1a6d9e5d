//! Moduli of continuity and membership checks for the Dini families.
//!
//! A modulus is a nondecreasing `phi: [0, cap] -> [0, inf)` with `phi(0) = 0`.
//! Two numeric checks matter here:
//!
//! - the Dini integral `int_0^1 phi(s)/s ds`, whose finiteness is decided
//!   heuristically from a ladder of partial integrals (see
//!   [`check_dini_integral`]);
//! - midpoint concavity of `phi^2`, sampled on a user grid (see
//!   [`check_concavity_sq`]).
//!
//! The composed Holder-Dini modulus `s -> s^beta * phi(s)` used for drift
//! regularity is built by [`holder_dini`].

use crate::error::{Error, Result};

/// Default tolerance for the midpoint concavity test.
pub const DEFAULT_CONCAVITY_TOL: f64 = 1e-12;

/// Partial integrals beyond this are declared divergent outright.
pub const DIVERGENCE_THRESHOLD: f64 = 1e3;

/// Functional form of a modulus of continuity.
#[derive(Debug, Clone, PartialEq)]
pub enum ModulusKind {
    /// `phi(s) = c * s`, `c >= 0`.
    Linear(f64),
    /// `phi(s) = s^alpha`, `alpha` in (0, 1].
    Power(f64),
    /// `phi(s) = (log(e/s))^(-gamma)`, `gamma > 0`; increasing, zero at zero,
    /// Dini exactly when `gamma > 1`.
    LogPower(f64),
    /// `phi(s) = s^beta * inner(s)`, `beta` in (0, 1).
    Product(f64, Box<ModulusSpec>),
    /// Tabulated `(s, phi(s))` points, piecewise-linear with an implicit
    /// anchor at the origin; flat beyond the last point.
    Custom(Vec<(f64, f64)>),
}

/// A parametric modulus of continuity with its evaluation cap.
///
/// Evaluation clamps the argument at `domain_cap` (moduli are only ever
/// applied to small arguments; the Dini integral runs over (0, 1)).
#[derive(Debug, Clone, PartialEq)]
pub struct ModulusSpec {
    pub kind: ModulusKind,
    pub domain_cap: f64,
}

impl ModulusSpec {
    /// Build a spec with the default cap 1 and validate it.
    pub fn new(kind: ModulusKind) -> Result<Self> {
        Self::with_cap(kind, 1.0)
    }

    /// Build a spec with an explicit cap and validate it.
    pub fn with_cap(kind: ModulusKind, domain_cap: f64) -> Result<Self> {
        let spec = ModulusSpec { kind, domain_cap };
        spec.validate()?;
        Ok(spec)
    }

    /// Check parameter ranges plus `phi(0) = 0` and monotonicity on a sample
    /// grid. All violations are reported, not just the first.
    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if !self.domain_cap.is_finite() || self.domain_cap <= 0.0 {
            problems.push(format!("domain_cap must be positive, got {}", self.domain_cap));
        }
        self.kind.collect_problems(self.domain_cap, &mut problems);
        if problems.is_empty() {
            // sampled sanity: zero at zero, nondecreasing, finite
            if self.eval(0.0) != 0.0 {
                problems.push("phi(0) != 0".to_string());
            }
            let n = 64;
            let mut prev = 0.0;
            for i in 1..=n {
                let s = self.domain_cap * i as f64 / n as f64;
                let v = self.eval(s);
                if !v.is_finite() {
                    problems.push(format!("phi({s}) is not finite"));
                    break;
                }
                if v < prev - 1e-12 {
                    problems.push(format!("phi is decreasing near s={s}"));
                    break;
                }
                prev = v;
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Config(format!("invalid modulus: {}", problems.join("; "))))
        }
    }

    /// Evaluate `phi(min(s, domain_cap))`; exactly 0 at `s = 0`.
    pub fn eval(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        self.kind.eval_raw(s.min(self.domain_cap))
    }

    /// Parse a spec from its configuration syntax, e.g. `power:0.5`,
    /// `linear:2`, `logpower:1`, `product:0.5:power:0.5`. An optional
    /// `@cap` suffix overrides the default cap 1: `power:0.5@4`.
    pub fn parse(text: &str) -> Result<Self> {
        let (body, cap) = match text.split_once('@') {
            Some((b, c)) => {
                let cap: f64 = c
                    .trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("modulus cap `{c}` is not a number")))?;
                (b.trim(), cap)
            }
            None => (text.trim(), 1.0),
        };
        let kind = Self::parse_kind(body)?;
        Self::with_cap(kind, cap)
    }

    fn parse_kind(body: &str) -> Result<ModulusKind> {
        let (name, rest) = body
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("modulus `{body}` must look like kind:params")))?;
        let num = |s: &str| -> Result<f64> {
            s.trim()
                .parse()
                .map_err(|_| Error::Config(format!("modulus parameter `{s}` is not a number")))
        };
        match name.trim() {
            "linear" => Ok(ModulusKind::Linear(num(rest)?)),
            "power" => Ok(ModulusKind::Power(num(rest)?)),
            "logpower" => Ok(ModulusKind::LogPower(num(rest)?)),
            "product" => {
                let (beta, inner) = rest.split_once(':').ok_or_else(|| {
                    Error::Config("product modulus needs `product:beta:inner-spec`".to_string())
                })?;
                let inner_kind = Self::parse_kind(inner)?;
                Ok(ModulusKind::Product(
                    num(beta)?,
                    Box::new(ModulusSpec { kind: inner_kind, domain_cap: 1.0 }),
                ))
            }
            other => Err(Error::Config(format!(
                "unknown modulus kind `{other}` (expected linear | power | logpower | product)"
            ))),
        }
    }
}

impl std::fmt::Display for ModulusSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            ModulusKind::Linear(c) => write!(f, "linear:{c}")?,
            ModulusKind::Power(a) => write!(f, "power:{a}")?,
            ModulusKind::LogPower(g) => write!(f, "logpower:{g}")?,
            ModulusKind::Product(b, inner) => write!(f, "product:{b}:{inner}")?,
            ModulusKind::Custom(pts) => write!(f, "custom[{} pts]", pts.len())?,
        }
        if self.domain_cap != 1.0 {
            write!(f, "@{}", self.domain_cap)?;
        }
        Ok(())
    }
}

impl ModulusKind {
    fn collect_problems(&self, cap: f64, problems: &mut Vec<String>) {
        match self {
            ModulusKind::Linear(c) => {
                if !c.is_finite() || *c < 0.0 {
                    problems.push(format!("linear coefficient must be finite and >= 0, got {c}"));
                }
            }
            ModulusKind::Power(a) => {
                if !a.is_finite() || *a <= 0.0 || *a > 1.0 {
                    problems.push(format!("power exponent must lie in (0, 1], got {a}"));
                }
            }
            ModulusKind::LogPower(g) => {
                if !g.is_finite() || *g <= 0.0 {
                    problems.push(format!("logpower exponent must be > 0, got {g}"));
                }
                // log(e/s) must stay positive on the evaluation range
                if cap > 1.0 {
                    problems.push(format!(
                        "logpower modulus requires domain_cap <= 1, got {cap}"
                    ));
                }
            }
            ModulusKind::Product(b, inner) => {
                if !b.is_finite() || *b <= 0.0 || *b >= 1.0 {
                    problems.push(format!("product exponent must lie in (0, 1), got {b}"));
                }
                if let Err(Error::Config(msg)) = inner.validate() {
                    problems.push(format!("inner modulus: {msg}"));
                }
            }
            ModulusKind::Custom(pts) => {
                if pts.is_empty() {
                    problems.push("custom modulus needs at least one point".to_string());
                }
                let mut prev_s = 0.0;
                let mut prev_v = 0.0;
                for &(s, v) in pts {
                    if !s.is_finite() || !v.is_finite() {
                        problems.push("custom modulus has a non-finite entry".to_string());
                        break;
                    }
                    if s <= prev_s {
                        problems.push(format!("custom abscissae must be strictly increasing (at s={s})"));
                        break;
                    }
                    if v < prev_v {
                        problems.push(format!("custom values must be nondecreasing (at s={s})"));
                        break;
                    }
                    prev_s = s;
                    prev_v = v;
                }
            }
        }
    }

    fn eval_raw(&self, s: f64) -> f64 {
        match self {
            ModulusKind::Linear(c) => c * s,
            ModulusKind::Power(a) => s.powf(*a),
            ModulusKind::LogPower(g) => (1.0 - s.ln()).powf(-g),
            ModulusKind::Product(b, inner) => s.powf(*b) * inner.eval(s),
            ModulusKind::Custom(pts) => {
                // piecewise linear through (0,0) and the table; flat beyond
                let mut lo = (0.0, 0.0);
                for &(x, v) in pts {
                    if s <= x {
                        let (x0, v0) = lo;
                        return v0 + (v - v0) * (s - x0) / (x - x0);
                    }
                    lo = (x, v);
                }
                lo.1
            }
        }
    }
}

/// Verdict status of the Dini-integral check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiniStatus {
    Convergent,
    Divergent,
    Inconclusive,
}

/// Outcome of [`check_dini_integral`].
///
/// `integral_estimate` is meaningful only when the status is `Convergent`;
/// `tail_growth_exponent` is a diagnostic: the fitted exponent `rho` such
/// that successive partial-integral increments behave like `u^rho` in
/// `u = log(1/cutoff)` (`rho ~ 0` signals logarithmic-type divergence).
#[derive(Debug, Clone)]
pub struct DiniVerdict {
    pub status: DiniStatus,
    pub integral_estimate: f64,
    pub tail_growth_exponent: f64,
}

/// Estimate `int_c^1 phi(s)/s ds` along a decreasing cutoff ladder and decide
/// Dini membership heuristically.
///
/// Internally substitutes `s = exp(-u)` so each partial integral becomes
/// `int_0^{log(1/c)} phi(exp(-u)) du`, which adaptive Simpson handles even
/// for cutoffs near the bottom of the f64 range. The verdict is:
///
/// - `Convergent` when the last two partials agree within `quad_tol`
///   (the estimate is then the deepest partial);
/// - `Divergent` when the partials pass [`DIVERGENCE_THRESHOLD`], or keep
///   growing with a fitted growth law that does not decay;
/// - `Inconclusive` otherwise. Divergence is never proven, only suggested.
pub fn check_dini_integral(spec: &ModulusSpec, cutoffs: &[f64], quad_tol: f64) -> Result<DiniVerdict> {
    if cutoffs.len() < 2 {
        return Err(Error::Config("need at least two cutoffs".to_string()));
    }
    if !(quad_tol > 0.0) {
        return Err(Error::Config(format!("quad_tol must be > 0, got {quad_tol}")));
    }
    let mut prev = 1.0;
    for &c in cutoffs {
        if !(c > 0.0 && c < prev) {
            return Err(Error::Config(
                "cutoffs must be strictly decreasing inside (0, 1)".to_string(),
            ));
        }
        prev = c;
    }

    let integrand = |u: f64| spec.eval((-u).exp());
    let seg_tol = (quad_tol * 1e-3).max(1e-13);

    // partial integrals at each cutoff, accumulated over u-segments
    let mut partials = Vec::with_capacity(cutoffs.len());
    let mut total = 0.0;
    let mut u_lo = 0.0;
    for &c in cutoffs {
        let u_hi = (1.0 / c).ln();
        total += adaptive_simpson(&integrand, u_lo, u_hi, seg_tol)?;
        partials.push(total);
        u_lo = u_hi;
    }

    let n = partials.len();
    let last_increment = partials[n - 1] - partials[n - 2];
    let u: Vec<f64> = cutoffs.iter().map(|c| (1.0 / c).ln()).collect();

    // Fit the integrand's decay from segment averages: if the average of
    // phi(exp(-u)) over a segment behaves like u^q, partial integrals grow
    // like u^(1+q) (like log u when 1+q = 0). The fit is independent of the
    // ladder's spacing.
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for j in 1..n {
        let inc = partials[j] - partials[j - 1];
        let du = u[j] - u[j - 1];
        if inc > 0.0 && du > 0.0 {
            xs.push((0.5 * (u[j] + u[j - 1])).ln());
            ys.push((inc / du).ln());
        }
    }
    let tail_growth_exponent =
        if xs.len() >= 2 { 1.0 + ols_slope(&xs, &ys) } else { f64::NAN };

    let status = if last_increment.abs() <= quad_tol {
        DiniStatus::Convergent
    } else if partials[n - 1] > DIVERGENCE_THRESHOLD
        || (last_increment > 10.0 * quad_tol
            && tail_growth_exponent.is_finite()
            && tail_growth_exponent >= -0.01)
    {
        DiniStatus::Divergent
    } else {
        DiniStatus::Inconclusive
    };

    Ok(DiniVerdict {
        status,
        integral_estimate: partials[n - 1],
        tail_growth_exponent,
    })
}

fn ols_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    sxy / sxx
}

fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        if !flm.is_finite() || !frm.is_finite() {
            return Err(Error::Numeric(format!(
                "non-finite integrand sample near u={lm} / u={rm}"
            )));
        }
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        Ok(recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
    }

    if b <= a {
        return Ok(0.0);
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    if !fa.is_finite() || !fm.is_finite() || !fb.is_finite() {
        return Err(Error::Numeric("non-finite integrand sample at segment ends".to_string()));
    }
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// One failed midpoint-concavity test of `phi^2`.
#[derive(Debug, Clone, Copy)]
pub struct ConcavityViolation {
    pub s_lo: f64,
    pub s_hi: f64,
    pub midpoint: f64,
    /// How far below the chord the midpoint value fell.
    pub deficit: f64,
}

/// Midpoint concavity test for `phi^2` on a sample grid.
///
/// Returns every pair `(s_i, s_j)` whose midpoint violates
/// `phi^2((s_i+s_j)/2) >= (phi^2(s_i)+phi^2(s_j))/2 - tol`. An empty result
/// certifies midpoint concavity on the sample only.
pub fn check_concavity_sq(spec: &ModulusSpec, grid: &[f64], tol: f64) -> Result<Vec<ConcavityViolation>> {
    if grid.is_empty() {
        return Err(Error::Config("concavity grid is empty".to_string()));
    }
    let mut prev = 0.0;
    for &s in grid {
        if !(s > prev) {
            return Err(Error::Config("concavity grid must be sorted, strictly positive".to_string()));
        }
        if s > spec.domain_cap * (1.0 + 1e-12) {
            return Err(Error::Config(format!(
                "concavity grid point {s} exceeds domain_cap {}",
                spec.domain_cap
            )));
        }
        prev = s;
    }
    let sq: Vec<f64> = grid.iter().map(|&s| spec.eval(s).powi(2)).collect();
    let mut violations = Vec::new();
    for i in 0..grid.len() {
        for j in (i + 1)..grid.len() {
            let mid = 0.5 * (grid[i] + grid[j]);
            let chord = 0.5 * (sq[i] + sq[j]);
            let val = spec.eval(mid).powi(2);
            if val < chord - tol {
                violations.push(ConcavityViolation {
                    s_lo: grid[i],
                    s_hi: grid[j],
                    midpoint: mid,
                    deficit: chord - val,
                });
            }
        }
    }
    Ok(violations)
}

/// Compose the Holder-Dini modulus `s -> s^beta * inner(s)`.
pub fn holder_dini(beta: f64, inner: &ModulusSpec) -> Result<ModulusSpec> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::Config(format!("holder exponent must lie in (0, 1), got {beta}")));
    }
    inner.validate()?;
    ModulusSpec::with_cap(
        ModulusKind::Product(beta, Box::new(inner.clone())),
        inner.domain_cap,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power(alpha: f64) -> ModulusSpec {
        ModulusSpec::new(ModulusKind::Power(alpha)).unwrap()
    }

    fn logpower(gamma: f64) -> ModulusSpec {
        ModulusSpec::new(ModulusKind::LogPower(gamma)).unwrap()
    }

    /// Default cutoff ladder: geometric in u = log(1/c).
    fn ladder() -> Vec<f64> {
        vec![1e-2, 1e-4, 1e-8, 1e-16, 1e-32, 1e-64]
    }

    #[test]
    fn eval_examples() {
        assert_eq!(power(1.0).eval(0.25), 0.25);
        assert!((power(0.5).eval(0.04) - 0.2).abs() < 1e-15);
        assert!((logpower(1.0).eval(1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eval_zero_is_exact() {
        for spec in [
            power(1.0),
            power(0.37),
            logpower(2.0),
            ModulusSpec::new(ModulusKind::Linear(3.0)).unwrap(),
            holder_dini(0.5, &power(0.5)).unwrap(),
            ModulusSpec::new(ModulusKind::Custom(vec![(0.5, 0.1), (1.0, 0.2)])).unwrap(),
        ] {
            assert_eq!(spec.eval(0.0), 0.0);
        }
    }

    #[test]
    fn eval_clamps_at_cap() {
        let m = power(0.5);
        assert_eq!(m.eval(4.0), m.eval(1.0));
        let wide = ModulusSpec::with_cap(ModulusKind::Power(0.5), 4.0).unwrap();
        assert!((wide.eval(4.0) - 2.0).abs() < 1e-15);
        assert_eq!(wide.eval(9.0), wide.eval(4.0));
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(ModulusSpec::new(ModulusKind::Power(0.0)).is_err());
        assert!(ModulusSpec::new(ModulusKind::Power(1.5)).is_err());
        assert!(ModulusSpec::new(ModulusKind::LogPower(-1.0)).is_err());
        assert!(ModulusSpec::new(ModulusKind::Linear(f64::NAN)).is_err());
        assert!(ModulusSpec::with_cap(ModulusKind::LogPower(1.0), 2.0).is_err());
        assert!(ModulusSpec::new(ModulusKind::Custom(vec![(0.5, 0.2), (0.4, 0.3)])).is_err());
        assert!(ModulusSpec::new(ModulusKind::Custom(vec![(0.2, 0.3), (0.4, 0.1)])).is_err());
    }

    // Dini-checker soundness on analytic cases: int_0^1 s^(alpha-1) ds = 1/alpha.
    #[test]
    fn dini_power_family_convergent() {
        for alpha in [1.0, 0.5, 0.25] {
            let v = check_dini_integral(&power(alpha), &ladder(), 1e-6).unwrap();
            assert_eq!(v.status, DiniStatus::Convergent, "alpha={alpha}");
            assert!(
                (v.integral_estimate - 1.0 / alpha).abs() < 1e-6,
                "alpha={alpha}: estimate {} vs {}",
                v.integral_estimate,
                1.0 / alpha
            );
        }
    }

    // Antiderivative oracle for alpha = 1/2: int_c^1 s^(-1/2) ds = 2(1 - sqrt(c)).
    #[test]
    fn dini_partial_matches_antiderivative() {
        let c = 1e-4;
        let v = check_dini_integral(&power(0.5), &[1e-2, c], 1e-8).unwrap();
        let exact = 2.0 * (1.0 - c.sqrt());
        assert!((v.integral_estimate - exact).abs() < 1e-9);
    }

    #[test]
    fn dini_logpower_one_divergent() {
        // partial integrals grow like log log(1/c); confirmed on the spec ladder...
        let shallow: Vec<f64> = (1..=6).map(|k| 10f64.powi(-2 * k)).collect();
        let v = check_dini_integral(&logpower(1.0), &shallow, 1e-6).unwrap();
        assert_eq!(v.status, DiniStatus::Divergent);
        // ...and on the default deep ladder
        let v = check_dini_integral(&logpower(1.0), &ladder(), 1e-6).unwrap();
        assert_eq!(v.status, DiniStatus::Divergent);
        assert!(v.tail_growth_exponent > -0.01 && v.tail_growth_exponent < 0.2);
    }

    #[test]
    fn dini_logpower_slowly_convergent_is_inconclusive() {
        // gamma = 2 converges, but too slowly to certify at this tolerance;
        // the checker must not claim divergence either.
        let v = check_dini_integral(&logpower(2.0), &ladder(), 1e-6).unwrap();
        assert_ne!(v.status, DiniStatus::Divergent);
    }

    #[test]
    fn dini_rejects_bad_inputs() {
        assert!(check_dini_integral(&power(1.0), &[1e-2], 1e-6).is_err());
        assert!(check_dini_integral(&power(1.0), &[1e-2, 1e-1], 1e-6).is_err());
        assert!(check_dini_integral(&power(1.0), &[1e-2, 1e-4], 0.0).is_err());
    }

    #[test]
    fn concavity_examples() {
        let grid: Vec<f64> = (1..=40).map(|i| i as f64 / 40.0).collect();
        // phi^2 = s is linear, hence concave
        assert!(check_concavity_sq(&power(0.5), &grid, DEFAULT_CONCAVITY_TOL)
            .unwrap()
            .is_empty());
        // phi^2 = s^2 is strictly convex: the midpoint test must fail somewhere
        let violations = check_concavity_sq(&power(1.0), &grid, DEFAULT_CONCAVITY_TOL).unwrap();
        assert!(!violations.is_empty());
        assert!(violations.iter().any(|v| v.deficit > 1e-3));
        // a tabulated modulus built from sqrt(s) keeps phi^2 concave
        let pts: Vec<(f64, f64)> = (1..=64).map(|i| {
            let s = i as f64 / 64.0;
            (s, s.sqrt())
        }).collect();
        let custom = ModulusSpec::new(ModulusKind::Custom(pts)).unwrap();
        // piecewise-linear interpolation of a concave function stays below the
        // curve, so allow a small slack
        assert!(check_concavity_sq(&custom, &grid, 1e-3).unwrap().is_empty());
    }

    #[test]
    fn holder_dini_examples() {
        let hd = holder_dini(0.5, &power(1.0)).unwrap();
        assert!((hd.eval(0.04) - 0.008).abs() < 1e-15);
        let hd = holder_dini(0.5, &logpower(2.0)).unwrap();
        assert!((hd.eval(1.0) - 1.0).abs() < 1e-15);
        assert_eq!(hd.eval(0.0), 0.0);
        assert!(holder_dini(0.0, &power(1.0)).is_err());
        assert!(holder_dini(1.0, &power(1.0)).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for text in ["power:0.5", "linear:2", "logpower:1", "product:0.5:power:0.5", "power:0.5@4"] {
            let spec = ModulusSpec::parse(text).unwrap();
            let again = ModulusSpec::parse(&spec.to_string()).unwrap();
            assert_eq!(spec, again);
        }
        assert!(ModulusSpec::parse("frobnicate:1").is_err());
        assert!(ModulusSpec::parse("power").is_err());
    }
}
