//! Bounds on the power-sum index from eigenvalue localization.
//!
//! Both bound families take a certified lower bound `theta` on the largest
//! eigenvalue (and, for the three-term family, a lower bound `beta` on the
//! second largest) and evaluate a Schur-convexity extremal expression. The
//! direction follows from the curvature of `x^alpha`: for `0 < alpha < 1`
//! the expressions are upper bounds, for `alpha < 0` or `alpha > 1` lower
//! bounds.
//!
//! Three `theta` sources are supported: the majorization optimum `Q`, the
//! classical degree-based localization `P = 1 + sqrt(t/(n(n-1)))`, and the
//! exact value 2 that bipartite graphs attain.

use crate::graph::{Graph, GraphError};
use crate::majorization::{h_star, q_closed_form, r_closed_form, MajorizationError};
use crate::spectral::{
    degree_pair_sum, normalized_laplacian, s_alpha_star, spectrum, SpectralError,
};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("alpha = {0} is excluded (bounds are undefined at 0 and 1)")]
    InvalidAlpha(f64),
    #[error("order n={n} below minimum {min} for this bound")]
    NTooSmall { n: usize, min: usize },
    #[error("theta = {theta} outside (0, {n})")]
    ThetaOutOfRange { theta: f64, n: usize },
    #[error("beta = {0} must be positive")]
    BetaOutOfRange(f64),
    #[error("beta = {beta} exceeds theta = {theta}")]
    BetaExceedsTheta { beta: f64, theta: f64 },
    #[error("theta + beta = {} must stay below n = {n}", theta + beta)]
    ThetaBetaTooLarge { theta: f64, beta: f64, n: usize },
    #[error("t = {t} outside [n/(n-1), n) for n = {n}")]
    InfeasibleT { t: f64, n: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Majorization(#[from] MajorizationError),
}

/// Which side of the exact value a bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    One,
    Two,
}

/// Where the `theta` plugged into a bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaSource {
    Q,
    P,
    BipartiteTwo,
}

impl std::fmt::Display for ThetaSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThetaSource::Q => write!(f, "Q"),
            ThetaSource::P => write!(f, "P"),
            ThetaSource::BipartiteTwo => write!(f, "bipartite_two"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaSource {
    None,
    R,
}

/// Hypotheses the two-eigenvalue bound carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `theta >= beta`.
    ThetaGeBeta,
    /// `theta + beta (n-2) > n`.
    ThetaBetaSum,
}

/// One evaluated bound with its provenance and hypothesis bookkeeping.
///
/// The value is computed even when a hypothesis fails; `hypotheses_ok`
/// and `violated` record the status so soundness claims stay honest.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub kind: BoundKind,
    pub theorem: TheoremId,
    pub theta_source: ThetaSource,
    pub beta_source: BetaSource,
    pub hypotheses_ok: bool,
    pub violated: Vec<Hypothesis>,
}

/// Maps `alpha` to the bound direction; `alpha` in `{0, 1}` is rejected.
pub fn bound_kind(alpha: f64) -> Result<BoundKind, BoundsError> {
    if !alpha.is_finite() || alpha == 0.0 || alpha == 1.0 {
        return Err(BoundsError::InvalidAlpha(alpha));
    }
    if 0.0 < alpha && alpha < 1.0 {
        Ok(BoundKind::Upper)
    } else {
        Ok(BoundKind::Lower)
    }
}

/// The classical degree-based localization `P = 1 + sqrt(t/(n(n-1)))` of the
/// largest eigenvalue, where `t` is the degree-pair sum.
pub fn p_bozkurt(n: usize, t: f64) -> Result<f64, BoundsError> {
    if n < 2 {
        return Err(BoundsError::NTooSmall { n, min: 2 });
    }
    let nf = n as f64;
    if !t.is_finite() || t < nf / (nf - 1.0) * (1.0 - 1e-12) || t >= nf {
        return Err(BoundsError::InfeasibleT { t, n });
    }
    Ok(1.0 + (t / (nf * (nf - 1.0))).sqrt())
}

/// One-eigenvalue bound: `theta^alpha + (n - theta)^alpha / (n-2)^(alpha-1)`.
///
/// Valid whenever the largest eigenvalue is at least `theta`; an upper bound
/// for `0 < alpha < 1`, a lower bound otherwise. `theta` is restricted to
/// `(0, n)` so both powers stay real; values of interest all lie in `(1, 2]`.
pub fn theorem1_bound(
    n: usize,
    alpha: f64,
    theta: f64,
    theta_source: ThetaSource,
) -> Result<BoundValue, BoundsError> {
    let kind = bound_kind(alpha)?;
    if n < 3 {
        return Err(BoundsError::NTooSmall { n, min: 3 });
    }
    if !(theta > 0.0 && theta < n as f64) {
        return Err(BoundsError::ThetaOutOfRange { theta, n });
    }
    let nf = n as f64;
    let value = theta.powf(alpha) + (nf - theta).powf(alpha) / (nf - 2.0).powf(alpha - 1.0);
    Ok(BoundValue {
        value,
        kind,
        theorem: TheoremId::One,
        theta_source,
        beta_source: BetaSource::None,
        hypotheses_ok: true,
        violated: Vec::new(),
    })
}

/// Two-eigenvalue bound:
/// `theta^alpha + beta^alpha + (n - theta - beta)^alpha / (n-3)^(alpha-1)`.
///
/// Stated for non-complete graphs with largest eigenvalue >= `theta` and
/// second largest >= `beta`, under `theta >= beta` and
/// `theta + beta (n-2) > n`. The second hypothesis routinely fails for the
/// `(Q, R)` pair; the value is still computed, with `hypotheses_ok` false
/// and the violation listed.
pub fn theorem2_bound(
    n: usize,
    alpha: f64,
    theta: f64,
    beta: f64,
    theta_source: ThetaSource,
) -> Result<BoundValue, BoundsError> {
    let kind = bound_kind(alpha)?;
    if n < 4 {
        return Err(BoundsError::NTooSmall { n, min: 4 });
    }
    if !beta.is_finite() || beta <= 0.0 {
        return Err(BoundsError::BetaOutOfRange(beta));
    }
    if beta > theta {
        return Err(BoundsError::BetaExceedsTheta { beta, theta });
    }
    if !(theta > 0.0 && theta < n as f64) {
        return Err(BoundsError::ThetaOutOfRange { theta, n });
    }
    let nf = n as f64;
    if theta + beta >= nf {
        return Err(BoundsError::ThetaBetaTooLarge { theta, beta, n });
    }
    let value = theta.powf(alpha)
        + beta.powf(alpha)
        + (nf - theta - beta).powf(alpha) / (nf - 3.0).powf(alpha - 1.0);
    let sum_ok = theta + beta * (nf - 2.0) > nf;
    let violated = if sum_ok {
        Vec::new()
    } else {
        vec![Hypothesis::ThetaBetaSum]
    };
    Ok(BoundValue {
        value,
        kind,
        theorem: TheoremId::Two,
        theta_source,
        beta_source: BetaSource::R,
        hypotheses_ok: sum_ok,
        violated,
    })
}

/// A bound together with its relative error against the exact value.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportedBound {
    pub bound: BoundValue,
    /// `|bound - exact| / exact`.
    pub relative_error: f64,
}

/// Everything computed for one graph at one `alpha`: the derived scalars,
/// the localizations, the exact index, and the evaluated bounds.
///
/// For complete graphs the localizations all degenerate to `n/(n-1)`; only
/// the exact value is reported and `bounds` stays empty.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub d1: usize,
    pub alpha: f64,
    /// Exact value of the index from the computed spectrum.
    pub exact: f64,
    pub t: f64,
    pub b: f64,
    /// `None` exactly in the degenerate (complete-graph) case.
    pub h_star: Option<usize>,
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub bipartite: bool,
    pub complete: bool,
    /// Ordering: one-eigenvalue bound with theta, one-eigenvalue bound with
    /// `P`, two-eigenvalue bound with `(theta, R)`. Empty for complete graphs.
    pub bounds: Vec<ReportedBound>,
}

impl BoundReport {
    /// The theta source used for the non-P bounds.
    pub fn theta_source(&self) -> Option<ThetaSource> {
        if self.complete {
            None
        } else if self.bipartite {
            Some(ThetaSource::BipartiteTwo)
        } else {
            Some(ThetaSource::Q)
        }
    }

    fn find(&self, theorem: TheoremId, source_is_p: bool) -> Option<&ReportedBound> {
        self.bounds.iter().find(|rb| {
            rb.bound.theorem == theorem && (rb.bound.theta_source == ThetaSource::P) == source_is_p
        })
    }

    /// One-eigenvalue bound with theta in `{Q, 2}`.
    pub fn theorem1_theta(&self) -> Option<&ReportedBound> {
        self.find(TheoremId::One, false)
    }

    /// One-eigenvalue bound with `P`.
    pub fn theorem1_p(&self) -> Option<&ReportedBound> {
        self.find(TheoremId::One, true)
    }

    /// Two-eigenvalue bound with `(theta, R)`.
    pub fn theorem2(&self) -> Option<&ReportedBound> {
        self.find(TheoremId::Two, false)
    }
}

/// Computes the full [`BoundReport`] for a connected graph with `n >= 4`.
///
/// Uses `theta = 2` when the graph is bipartite (its largest eigenvalue is
/// exactly 2), `theta = Q` otherwise; `Q`, `R` and `P` are computed and
/// reported either way.
pub fn bound_report(g: &Graph, alpha: f64) -> Result<BoundReport, BoundsError> {
    bound_kind(alpha)?;
    let n = g.vertex_count();
    if n < 4 {
        return Err(BoundsError::NTooSmall { n, min: 4 });
    }
    let class = g.classify().map_err(|e| match e {
        GraphError::NotConnected => BoundsError::NotConnected,
        // classify only fails on disconnected input
        _ => BoundsError::NotConnected,
    })?;

    let degrees = g.degree_sequence();
    let scalars = degree_pair_sum(g);
    let lap = normalized_laplacian(g)?;
    let eigenvalues = spectrum(&lap)?;
    let exact = s_alpha_star(&eigenvalues, alpha)?;
    let nf = n as f64;

    if class.complete {
        let degenerate = nf / (nf - 1.0);
        return Ok(BoundReport {
            n,
            m: g.edge_count(),
            d1: degrees.max(),
            alpha,
            exact,
            t: scalars.t,
            b: scalars.b,
            h_star: None,
            p: degenerate,
            q: degenerate,
            r: degenerate,
            bipartite: class.bipartite,
            complete: true,
            bounds: Vec::new(),
        });
    }

    let hs = h_star(n, scalars.b, 2)?;
    let q = q_closed_form(n, scalars.b)?;
    let r = r_closed_form(n, scalars.b)?;
    let p = p_bozkurt(n, scalars.t)?;
    let (theta, source) = if class.bipartite {
        (2.0, ThetaSource::BipartiteTwo)
    } else {
        (q, ThetaSource::Q)
    };

    let with_error = |bound: BoundValue| ReportedBound {
        relative_error: (bound.value - exact).abs() / exact,
        bound,
    };
    let bounds = vec![
        with_error(theorem1_bound(n, alpha, theta, source)?),
        with_error(theorem1_bound(n, alpha, p, ThetaSource::P)?),
        with_error(theorem2_bound(n, alpha, theta, r, source)?),
    ];

    Ok(BoundReport {
        n,
        m: g.edge_count(),
        d1: degrees.max(),
        alpha,
        exact,
        t: scalars.t,
        b: scalars.b,
        h_star: Some(hs),
        p,
        q,
        r,
        bipartite: class.bipartite,
        complete: false,
        bounds,
    })
}
