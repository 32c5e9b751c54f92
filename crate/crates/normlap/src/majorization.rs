//! Minimization of the h-th largest coordinate over the constraint set
//! `S = { x in R_+^{n-1} : x_1 >= ... >= x_{n-1} >= 0, sum x_i = n, sum x_i^p = b }`
//! and the closed forms the p = 2 case admits.
//!
//! The minimum localizes eigenvalues: applied to the normalized-Laplacian
//! spectrum (which satisfies both constraints with `b` equal to the second
//! spectral moment), the optimum for `h = 1` is a lower bound on the largest
//! eigenvalue and the optimum for `h = 2` bounds the second largest. The two
//! p = 2 optima are available in closed form ([`q_closed_form`] and
//! [`r_closed_form`]) and are cross-checked against bracketed bisection.
//!
//! Unless `b` sits at its minimum `n^p/(n-1)^(p-1)` (the degenerate case,
//! where every coordinate equals `n/(n-1)`), there is a unique integer `h*`
//! with `n^p/(h*+1)^(p-1) < b <= n^p/(h*)^(p-1)`, and the optimum is:
//!
//! * `h = 1`: the unique root of `h* d^p + (n - h* d)^p - b` in
//!   `(n/(h*+1), n/h*]`;
//! * `1 < h <= h*+1`: the unique root of
//!   `(n-h) d^p + (n - (n-h) d)^p / (h-1)^(p-1) - b` in `(0, n/(n-1)]`;
//! * `h > h*+1`: zero.

use thiserror::Error;

/// Relative tolerance for detecting the degenerate `b = n^p/(n-1)^(p-1)`.
pub const DEGENERATE_B_REL_TOL: f64 = 1e-12;

/// Bisection stops once the bracket is narrower than this factor times `n`.
const INTERVAL_TOL_FACTOR: f64 = 1e-13;

/// Open bracket endpoints are widened outward by this factor times `n`
/// before bisecting, then the root is clamped back into the interval.
const BRACKET_WIDENING_FACTOR: f64 = 1e-12;

const MAX_BISECTION_ITERATIONS: usize = 200;

/// Agreement required between a p = 2 closed form and its bisection route.
const CLOSED_FORM_CROSS_CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MajorizationError {
    #[error("problem order n={n} below minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("power-sum exponent p={0} must be an integer >= 2 (and small enough for f64)")]
    InvalidExponent(u32),
    #[error("target index h={h} outside 1..={max}")]
    TargetIndexOutOfRange { h: usize, max: usize },
    #[error("b={b} is degenerate for n={n}, p={p}: the optimum is n/(n-1) at every index")]
    DegenerateB { n: usize, p: u32, b: f64 },
    #[error("b={b} outside the feasible range [{min}, {max}) for n={n}, p={p}")]
    InfeasibleB {
        n: usize,
        p: u32,
        b: f64,
        min: f64,
        max: f64,
    },
    #[error("no unique integer brackets b={b} for n={n}, p={p}")]
    BracketVerificationFailed { n: usize, p: u32, b: f64 },
    #[error("no sign change on [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("closed form {closed_form} disagrees with bisection {bisection}")]
    ClosedFormMismatch { closed_form: f64, bisection: f64 },
}

/// The tuple `(n, b, p, h)` defining one minimization instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MajorizationInstance {
    n: usize,
    b: f64,
    p: u32,
    h: usize,
}

impl MajorizationInstance {
    /// Validates order, exponent, target index, and feasibility of `b`.
    pub fn new(n: usize, b: f64, p: u32, h: usize) -> Result<Self, MajorizationError> {
        let (b_min, b_max) = feasible_b_range(n, p)?;
        if h < 1 || h > n - 1 {
            return Err(MajorizationError::TargetIndexOutOfRange { h, max: n - 1 });
        }
        if !b.is_finite() || b < b_min * (1.0 - DEGENERATE_B_REL_TOL) || b >= b_max {
            return Err(MajorizationError::InfeasibleB {
                n,
                p,
                b,
                min: b_min,
                max: b_max,
            });
        }
        Ok(MajorizationInstance { n, b, p, h })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn power_sum(&self) -> f64 {
        self.b
    }

    pub fn exponent(&self) -> u32 {
        self.p
    }

    pub fn target_index(&self) -> usize {
        self.h
    }
}

/// Which branch of the case split produced the solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveCase {
    /// `b` at its minimum: every coordinate is `n/(n-1)`.
    Degenerate,
    /// `h = 1`: root in `(n/(h*+1), n/h*]`.
    HEqualOne,
    /// `1 < h <= h*+1`: root in `(0, n/(n-1)]`.
    HMid,
    /// `h > h*+1`: the minimum is zero.
    HBeyond,
}

/// Solution of one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverResult {
    /// The minimum value of the h-th largest coordinate.
    pub delta_star: f64,
    pub case: SolveCase,
    /// The interval the case statement assigns to the root.
    pub bracket: (f64, f64),
    /// `|f(delta_star)|` for the root cases, 0 otherwise.
    pub residual: f64,
}

/// Feasible range `[n^p/(n-1)^(p-1), n^p)` of the power sum.
fn feasible_b_range(n: usize, p: u32) -> Result<(f64, f64), MajorizationError> {
    if n < 2 {
        return Err(MajorizationError::OrderTooSmall { n, min: 2 });
    }
    if p < 2 {
        return Err(MajorizationError::InvalidExponent(p));
    }
    let nf = n as f64;
    let b_min = nf.powi(p as i32) / (nf - 1.0).powi(p as i32 - 1);
    let b_max = nf.powi(p as i32);
    if !b_min.is_finite() || !b_max.is_finite() {
        return Err(MajorizationError::InvalidExponent(p));
    }
    Ok((b_min, b_max))
}

fn is_degenerate(b: f64, b_min: f64) -> bool {
    (b - b_min).abs() <= DEGENERATE_B_REL_TOL * b_min
}

/// The unique integer `h*` with `n^p/(h*+1)^(p-1) < b <= n^p/(h*)^(p-1)`.
///
/// Computed as `floor((n^p/b)^(1/(p-1)))` and then verified against the
/// bracketing inequality itself, trying the two neighbors as well, so an
/// exactly-boundary `b` cannot be mis-floored. `h* = n-1` is accepted when
/// the verified bracket puts `b` there (only possible within rounding of the
/// degenerate value).
pub fn h_star(n: usize, b: f64, p: u32) -> Result<usize, MajorizationError> {
    let (b_min, b_max) = feasible_b_range(n, p)?;
    if is_degenerate(b, b_min) {
        return Err(MajorizationError::DegenerateB { n, p, b });
    }
    if !b.is_finite() || b < b_min || b >= b_max {
        return Err(MajorizationError::InfeasibleB {
            n,
            p,
            b,
            min: b_min,
            max: b_max,
        });
    }
    let nf = n as f64;
    let x = if p == 2 {
        nf * nf / b
    } else {
        (nf.powi(p as i32) / b).powf(1.0 / (p as f64 - 1.0))
    };
    let guess = (x.floor() as usize).clamp(1, n - 1);
    let bound = |h: usize| nf.powi(p as i32) / (h as f64).powi(p as i32 - 1);
    for h in [guess.saturating_sub(1), guess, guess + 1] {
        if (1..=n - 1).contains(&h) && bound(h + 1) < b && b <= bound(h) {
            return Ok(h);
        }
    }
    Err(MajorizationError::BracketVerificationFailed { n, p, b })
}

/// Bracketed bisection; `f` must change sign across `[lo, hi]`.
///
/// Returns the midpoint once the interval is below `interval_tol`, together
/// with `|f|` there. Endpoints whose residual is within rounding of zero
/// (relative to `zero_scale`) are accepted as roots when no sign change is
/// visible.
fn bisect(
    f: &dyn Fn(f64) -> f64,
    mut lo: f64,
    hi: f64,
    interval_tol: f64,
    zero_scale: f64,
) -> Result<(f64, f64), MajorizationError> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok((lo, 0.0));
    }
    if f_hi == 0.0 {
        return Ok((hi, 0.0));
    }
    if f_lo.signum() == f_hi.signum() {
        let tol = 1e-12 * zero_scale;
        if f_lo.abs() <= tol {
            return Ok((lo, f_lo.abs()));
        }
        if f_hi.abs() <= tol {
            return Ok((hi, f_hi.abs()));
        }
        return Err(MajorizationError::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let mut hi = hi;
    for _ in 0..MAX_BISECTION_ITERATIONS {
        if hi - lo < interval_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok((mid, 0.0));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let mid = 0.5 * (lo + hi);
    Ok((mid, f(mid).abs()))
}

/// Solves one instance per the case split in the module docs.
///
/// Roots are found by bracketed bisection; for `p = 2` with `h` in `{1, 2}`
/// the closed forms are used and cross-checked against the bisection route.
pub fn solve_min_lambda(inst: &MajorizationInstance) -> Result<SolverResult, MajorizationError> {
    let (n, b, p, h) = (inst.n, inst.b, inst.p, inst.h);
    let nf = n as f64;
    let (b_min, _) = feasible_b_range(n, p)?;
    if is_degenerate(b, b_min) {
        let value = nf / (nf - 1.0);
        return Ok(SolverResult {
            delta_star: value,
            case: SolveCase::Degenerate,
            bracket: (value, value),
            residual: 0.0,
        });
    }
    let hs = h_star(n, b, p)?;
    let pi = p as i32;
    let widen = BRACKET_WIDENING_FACTOR * nf;
    let interval_tol = INTERVAL_TOL_FACTOR * nf;

    type CaseFn = Box<dyn Fn(f64) -> f64>;
    let (case, bracket, f): (SolveCase, (f64, f64), CaseFn) = if h == 1 {
        let hf = hs as f64;
        let f = move |d: f64| hf * d.powi(pi) + (nf - hf * d).powi(pi) - b;
        (
            SolveCase::HEqualOne,
            (nf / (hf + 1.0), nf / hf),
            Box::new(f),
        )
    } else if h <= hs + 1 {
        let hf = h as f64;
        let scale = (hf - 1.0).powi(pi - 1);
        let f = move |d: f64| (nf - hf) * d.powi(pi) + (nf - (nf - hf) * d).powi(pi) / scale - b;
        (SolveCase::HMid, (0.0, nf / (nf - 1.0)), Box::new(f))
    } else {
        return Ok(SolverResult {
            delta_star: 0.0,
            case: SolveCase::HBeyond,
            bracket: (0.0, 0.0),
            residual: 0.0,
        });
    };

    let (root, _) = bisect(f.as_ref(), bracket.0 - widen, bracket.1, interval_tol, b)?;
    let root = root.clamp(bracket.0, bracket.1);

    let delta_star = if p == 2 && h == 1 {
        let cf = q_closed_form(n, b)?;
        if (cf - root).abs() > CLOSED_FORM_CROSS_CHECK_TOL * cf.abs().max(1.0) {
            return Err(MajorizationError::ClosedFormMismatch {
                closed_form: cf,
                bisection: root,
            });
        }
        cf
    } else if p == 2 && h == 2 {
        let cf = r_closed_form(n, b)?;
        if (cf - root).abs() > CLOSED_FORM_CROSS_CHECK_TOL * cf.abs().max(1.0) {
            return Err(MajorizationError::ClosedFormMismatch {
                closed_form: cf,
                bisection: root,
            });
        }
        cf
    } else {
        root
    };

    Ok(SolverResult {
        delta_star,
        case,
        bracket,
        residual: f(delta_star).abs(),
    })
}

/// Closed-form p = 2 optimum for `h = 1`:
/// `(n + sqrt((b(h*+1) - n^2)/h*)) / (1 + h*)`, a lower bound for the
/// largest normalized-Laplacian eigenvalue when `b` is the second spectral
/// moment.
pub fn q_closed_form(n: usize, b: f64) -> Result<f64, MajorizationError> {
    let hs = h_star(n, b, 2)? as f64;
    let nf = n as f64;
    let radicand = (b * (hs + 1.0) - nf * nf) / hs;
    debug_assert!(
        radicand > -1e-9 * nf * nf,
        "radicand {radicand} for n={n} b={b}"
    );
    Ok((nf + radicand.max(0.0).sqrt()) / (1.0 + hs))
}

/// Closed-form p = 2 optimum for `h = 2`:
/// `(n - sqrt((b(n-1) - n^2)/(n-2))) / (n-1)`, a lower bound for the second
/// largest eigenvalue. Satisfies `R <= n/(n-1)`, hence `R <= Q`. Unlike
/// [`q_closed_form`], the degenerate `b` is in-domain and yields `n/(n-1)`.
pub fn r_closed_form(n: usize, b: f64) -> Result<f64, MajorizationError> {
    if n < 3 {
        return Err(MajorizationError::OrderTooSmall { n, min: 3 });
    }
    let (b_min, b_max) = feasible_b_range(n, 2)?;
    if !b.is_finite() || b < b_min * (1.0 - DEGENERATE_B_REL_TOL) || b >= b_max {
        return Err(MajorizationError::InfeasibleB {
            n,
            p: 2,
            b,
            min: b_min,
            max: b_max,
        });
    }
    let nf = n as f64;
    // Snap the degenerate case: the square root would amplify rounding in a
    // barely-positive radicand to ~sqrt(eps), far above the value's accuracy.
    if is_degenerate(b, b_min) {
        return Ok(nf / (nf - 1.0));
    }
    let radicand = (b * (nf - 1.0) - nf * nf) / (nf - 2.0);
    debug_assert!(
        radicand > -1e-9 * nf * nf,
        "radicand {radicand} for n={n} b={b}"
    );
    Ok((nf - radicand.max(0.0).sqrt()) / (nf - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn h_star_examples() {
        assert_eq!(h_star(4, 6.5, 2).unwrap(), 2);
        assert_eq!(h_star(4, 11.5, 3).unwrap(), 2);
        assert!(matches!(
            h_star(4, 16.0 / 3.0, 2),
            Err(MajorizationError::DegenerateB { .. })
        ));
        assert!(matches!(
            h_star(4, 17.0, 2),
            Err(MajorizationError::InfeasibleB { .. })
        ));
        assert!(matches!(
            h_star(4, 4.0, 2),
            Err(MajorizationError::InfeasibleB { .. })
        ));
    }

    #[test]
    fn h_star_exact_boundary() {
        // b = n^2/h^(p-1) exactly must give h* = h (right inequality tight).
        let n = 10usize;
        for h in 2..=8usize {
            let b = (n * n) as f64 / h as f64;
            assert_eq!(h_star(n, b, 2).unwrap(), h, "boundary at h={h}");
        }
    }

    #[test]
    fn h_star_bracket_holds_post_hoc() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..2000 {
            let n = rng.random_range(3usize..=200);
            let nf = n as f64;
            let b_min = nf * nf / (nf - 1.0);
            let b = b_min + (2.0 * nf - b_min) * rng.random_range(1e-6..1.0);
            let h = h_star(n, b, 2).unwrap();
            assert!(nf * nf / (h as f64 + 1.0) < b);
            assert!(b <= nf * nf / h as f64);
        }
    }

    #[test]
    fn closed_forms_match_frozen_values() {
        // P4: b = 13/2
        assert!((q_closed_form(4, 6.5).unwrap() - 1.7742918851774318).abs() < 1e-12);
        assert!((r_closed_form(4, 6.5).unwrap() - 0.8923747814892349).abs() < 1e-12);
        // paw: b = 35/6
        assert!((q_closed_form(4, 35.0 / 6.0).unwrap() - 1.6220084679281462).abs() < 1e-12);
        assert!((r_closed_form(4, 35.0 / 6.0).unwrap() - 1.0446581987385205).abs() < 1e-12);
    }

    #[test]
    fn closed_forms_at_degenerate_b() {
        for n in 3usize..=12 {
            let nf = n as f64;
            let b = nf * nf / (nf - 1.0);
            assert!(matches!(
                q_closed_form(n, b),
                Err(MajorizationError::DegenerateB { .. })
            ));
            // R's radicand vanishes and the degenerate value comes out directly.
            assert!((r_closed_form(n, b).unwrap() - nf / (nf - 1.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn solver_cases_on_p4_instance() {
        // h = 1: the Q value.
        let inst = MajorizationInstance::new(4, 6.5, 2, 1).unwrap();
        let res = solve_min_lambda(&inst).unwrap();
        assert_eq!(res.case, SolveCase::HEqualOne);
        assert!((res.delta_star - 1.7742918851774318).abs() < 1e-9);
        assert!((res.bracket.0 - 4.0 / 3.0).abs() < 1e-15 && res.bracket.1 == 2.0);
        assert!(res.delta_star > res.bracket.0 && res.delta_star <= res.bracket.1);
        assert!(res.residual < 1e-10 * 6.5);

        // h = 2: the R value.
        let inst = MajorizationInstance::new(4, 6.5, 2, 2).unwrap();
        let res = solve_min_lambda(&inst).unwrap();
        assert_eq!(res.case, SolveCase::HMid);
        assert!((res.delta_star - 0.8923747814892349).abs() < 1e-9);

        // h = 3 = h*+1: still the middle case; value frozen from an
        // independent high-precision root solve.
        let inst = MajorizationInstance::new(4, 6.5, 2, 3).unwrap();
        let res = solve_min_lambda(&inst).unwrap();
        assert_eq!(res.case, SolveCase::HMid);
        assert!((res.delta_star - 0.45141622964513647).abs() < 1e-9);
    }

    #[test]
    fn solver_beyond_case_is_zero() {
        // n=5, b=9.9: h* = floor(25/9.9) = 2, so h = 4 > h*+1.
        let inst = MajorizationInstance::new(5, 9.9, 2, 4).unwrap();
        let res = solve_min_lambda(&inst).unwrap();
        assert_eq!(res.case, SolveCase::HBeyond);
        assert_eq!(res.delta_star, 0.0);
    }

    #[test]
    fn solver_degenerate_case() {
        for h in 1..=3usize {
            let inst = MajorizationInstance::new(4, 16.0 / 3.0, 2, h).unwrap();
            let res = solve_min_lambda(&inst).unwrap();
            assert_eq!(res.case, SolveCase::Degenerate);
            assert!((res.delta_star - 4.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn solver_cubic_instance() {
        // p=3 instance of the P4 third moment b = 2^3 + 1.5^3 + 0.5^3 = 11.5.
        let inst = MajorizationInstance::new(4, 11.5, 3, 1).unwrap();
        let res = solve_min_lambda(&inst).unwrap();
        assert_eq!(res.case, SolveCase::HEqualOne);
        assert!(res.delta_star > 4.0 / 3.0 && res.delta_star <= 2.0);
        assert!((res.delta_star - 1.7875304506478172).abs() < 1e-9);
        assert!(res.residual < 1e-10 * 11.5);
    }

    #[test]
    fn instance_validation() {
        assert!(matches!(
            MajorizationInstance::new(1, 2.0, 2, 1),
            Err(MajorizationError::OrderTooSmall { .. })
        ));
        assert!(matches!(
            MajorizationInstance::new(4, 6.5, 1, 1),
            Err(MajorizationError::InvalidExponent(1))
        ));
        assert!(matches!(
            MajorizationInstance::new(4, 6.5, 2, 0),
            Err(MajorizationError::TargetIndexOutOfRange { .. })
        ));
        assert!(matches!(
            MajorizationInstance::new(4, 6.5, 2, 4),
            Err(MajorizationError::TargetIndexOutOfRange { .. })
        ));
        assert!(matches!(
            MajorizationInstance::new(4, 64.0, 2, 1),
            Err(MajorizationError::InfeasibleB { .. })
        ));
    }

    #[test]
    fn closed_forms_agree_with_bisection_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let n = rng.random_range(4usize..=100);
            let nf = n as f64;
            let b_min = nf * nf / (nf - 1.0);
            let b = b_min + (2.0 * nf - b_min) * rng.random_range(1e-6..1.0);
            for h in [1usize, 2] {
                let inst = MajorizationInstance::new(n, b, 2, h).unwrap();
                let res = solve_min_lambda(&inst).unwrap();
                assert!(
                    res.residual < 1e-10 * b,
                    "residual {} at n={n} b={b} h={h}",
                    res.residual
                );
                let cf = if h == 1 {
                    q_closed_form(n, b).unwrap()
                } else {
                    r_closed_form(n, b).unwrap()
                };
                assert!((cf - res.delta_star).abs() < 1e-9);
            }
            // Ordering R <= n/(n-1) <= Q.
            let q = q_closed_form(n, b).unwrap();
            let r = r_closed_form(n, b).unwrap();
            assert!(r <= nf / (nf - 1.0) + 1e-12);
            assert!(q >= nf / (nf - 1.0) - 1e-12);
            assert!(r <= q + 1e-12);
        }
    }

    #[test]
    fn q_is_increasing_in_b_within_segments() {
        for n in [5usize, 12, 30] {
            let nf = n as f64;
            let b_min = nf * nf / (nf - 1.0);
            let lo = b_min * (1.0 + 1e-9);
            let hi = 2.0 * nf;
            let steps = 400;
            let mut prev: Option<(usize, f64)> = None;
            for i in 0..=steps {
                let b = lo + (hi - lo) * i as f64 / steps as f64;
                let h = h_star(n, b, 2).unwrap();
                let q = q_closed_form(n, b).unwrap();
                if let Some((ph, pq)) = prev {
                    if ph == h {
                        assert!(q > pq, "Q not increasing at n={n}, b={b}");
                    }
                }
                prev = Some((h, q));
            }
        }
    }
}
