//! Normalized Laplacian construction, its spectrum, and the power-sum index.
//!
//! For a connected graph with degree matrix `D` and adjacency `A`, the
//! normalized Laplacian is `D^{-1/2} (D - A) D^{-1/2}`: unit diagonal and
//! `-1/sqrt(d_i d_j)` wherever `{i, j}` is an edge. Its eigenvalues lie in
//! `[0, 2]`, sum to `n`, and exactly one of them is zero when the graph is
//! connected. The index computed here is the sum of the `alpha`-th powers of
//! the `n-1` non-zero eigenvalues.

use crate::graph::Graph;
use thiserror::Error;

/// Eigenvalues with magnitude below this are treated as the structural zero.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

/// Sweep budget per matrix order for the Jacobi iteration.
const MAX_SWEEPS_PER_ORDER: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("vertex {0} has degree zero")]
    ZeroDegreeVertex(usize),
    #[error("eigensolver failed to converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("alpha = {0} is excluded (the index is undefined at 0 and 1)")]
    InvalidAlpha(f64),
    #[error(
        "unexpected near-zero eigenvalue {value} at position {index}; input looks disconnected"
    )]
    UnexpectedZeroEigenvalue { index: usize, value: f64 },
    #[error("negative eigenvalue {0} beyond tolerance")]
    NegativeEigenvalue(f64),
}

/// Dense real symmetric matrix, stored row-major with both triangles kept
/// exactly equal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Writes the same value to `(i, j)` and `(j, i)`.
    pub fn set_symmetric(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }
}

/// Builds the normalized Laplacian of a graph.
///
/// Diagonal entries are 1; entry `(i, j)` is `-1/sqrt(d_i d_j)` iff `{i, j}`
/// is an edge. Fails on degree-zero vertices (unreachable for connected
/// input).
pub fn normalized_laplacian(g: &Graph) -> Result<SymmetricMatrix, SpectralError> {
    let n = g.vertex_count();
    let degrees = g.degree_sequence();
    if let Some(v) = (1..=n).find(|&v| degrees.degree_of(v) == 0) {
        return Err(SpectralError::ZeroDegreeVertex(v));
    }
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        m.set_symmetric(i, i, 1.0);
    }
    for &(u, v) in g.edges() {
        let w = -1.0 / ((degrees.degree_of(u) * degrees.degree_of(v)) as f64).sqrt();
        m.set_symmetric(u - 1, v - 1, w);
    }
    Ok(m)
}

/// Real eigenvalues sorted in non-increasing order; values within
/// [`ZERO_EIGENVALUE_TOL`] of zero are clamped to exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Sorts descending and clamps near-zero noise to exactly zero.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        for v in values.iter_mut() {
            if v.abs() < ZERO_EIGENVALUE_TOL {
                *v = 0.0;
            }
        }
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue.
    pub fn lambda1(&self) -> f64 {
        self.values[0]
    }

    /// Second largest eigenvalue.
    pub fn lambda2(&self) -> f64 {
        self.values[1]
    }
}

/// Computes all eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Classic rotation scheme with accumulated diagonal corrections: sweeps
/// annihilate each off-diagonal entry in turn until the off-diagonal mass is
/// exactly exhausted at working precision, which for symmetric input gives
/// eigenvalues accurate to a few ulps of the matrix norm. Deterministic:
/// identical input bits give identical output bits.
pub fn spectrum(m: &SymmetricMatrix) -> Result<Spectrum, SpectralError> {
    let n = m.order();
    if n == 0 {
        return Ok(Spectrum::from_values(Vec::new()));
    }
    if n == 1 {
        return Ok(Spectrum::from_values(vec![m.get(0, 0)]));
    }
    let mut a = m.data.clone();
    let idx = |i: usize, j: usize| i * n + j;

    // Running eigenvalue estimates (d), their base values (b) and the
    // per-sweep corrections (z), per Numerical Recipes' jacobi.
    let mut d: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let max_sweeps = MAX_SWEEPS_PER_ORDER * n;
    let mut converged = false;
    for sweep in 0..max_sweeps {
        let mut off_sum = 0.0;
        for i in 0..n - 1 {
            for j in (i + 1)..n {
                off_sum += a[idx(i, j)].abs();
            }
        }
        if off_sum == 0.0 {
            converged = true;
            break;
        }
        // Threshold rotations during the first sweeps, then rotate on any
        // non-zero entry.
        let tresh = if sweep < 3 {
            0.2 * off_sum / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                let g = 100.0 * apq.abs();
                // Once the element is negligible relative to both diagonal
                // entries, zero it outright.
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[idx(p, q)] = 0.0;
                    a[idx(q, p)] = 0.0;
                    continue;
                }
                if apq.abs() <= tresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
                let rotate = |a: &mut Vec<f64>, ij: usize, kl: usize| {
                    let g = a[ij];
                    let h = a[kl];
                    a[ij] = g - s * (h + g * tau);
                    a[kl] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(&mut a, idx(j, p), idx(j, q));
                }
                for j in (p + 1)..q {
                    rotate(&mut a, idx(p, j), idx(j, q));
                }
                for j in (q + 1)..n {
                    rotate(&mut a, idx(p, j), idx(q, j));
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if !converged {
        return Err(SpectralError::ConvergenceFailure { sweeps: max_sweeps });
    }
    Ok(Spectrum::from_values(d))
}

/// The degree-pair sum `t` and the second spectral moment `b = n + t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScalars {
    /// `2 * sum over edges of 1/(d_i d_j)`.
    pub t: f64,
    /// `n + t`; equals the sum of squared normalized-Laplacian eigenvalues.
    pub b: f64,
}

/// Computes `t = 2 * sum_{(i,j) in E} 1/(d_i d_j)` and `b = n + t`.
///
/// Requires every degree to be positive (any connected graph qualifies). For
/// a connected graph, `n/(n-1) <= t < n` with the left equality exactly for
/// the complete graph.
pub fn degree_pair_sum(g: &Graph) -> DerivedScalars {
    let degrees = g.degree_sequence();
    let t = 2.0
        * g.edges()
            .iter()
            .map(|&(u, v)| 1.0 / ((degrees.degree_of(u) * degrees.degree_of(v)) as f64))
            .sum::<f64>();
    DerivedScalars {
        t,
        b: g.vertex_count() as f64 + t,
    }
}

/// Sum of the `alpha`-th powers of the non-zero eigenvalues.
///
/// Excludes exactly the smallest eigenvalue (the structural zero of a
/// connected graph). Any other eigenvalue within the zero tolerance signals a
/// disconnected input and is an error, as is `alpha` in `{0, 1}`.
pub fn s_alpha_star(s: &Spectrum, alpha: f64) -> Result<f64, SpectralError> {
    if !alpha.is_finite() || alpha == 0.0 || alpha == 1.0 {
        return Err(SpectralError::InvalidAlpha(alpha));
    }
    let values = s.values();
    let nonzero = &values[..values.len() - 1];
    let mut sum = 0.0;
    for (i, &lambda) in nonzero.iter().enumerate() {
        if lambda.abs() <= ZERO_EIGENVALUE_TOL {
            return Err(SpectralError::UnexpectedZeroEigenvalue {
                index: i + 1,
                value: lambda,
            });
        }
        if lambda < 0.0 {
            return Err(SpectralError::NegativeEigenvalue(lambda));
        }
        sum += lambda.powf(alpha);
    }
    Ok(sum)
}

/// One validation check with its residual.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumCheck {
    pub name: &'static str,
    pub passed: bool,
    pub residual: f64,
}

/// Outcome of [`validate_spectrum`]; failures are data, not errors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumValidation {
    pub checks: Vec<SpectrumCheck>,
}

impl SpectrumValidation {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks a spectrum against the identities its graph implies: trace `n`,
/// second moment `b`, spectral radius at most 2, a single structural zero,
/// and the largest eigenvalue hitting 2 exactly for bipartite graphs.
pub fn validate_spectrum(s: &Spectrum, g: &Graph) -> SpectrumValidation {
    let n = g.vertex_count() as f64;
    let scalars = degree_pair_sum(g);
    let values = s.values();

    let mut checks = Vec::with_capacity(6);
    let order_ok = values.len() == g.vertex_count();
    checks.push(SpectrumCheck {
        name: "order",
        passed: order_ok,
        residual: (values.len() as f64 - n).abs(),
    });
    if !order_ok {
        return SpectrumValidation { checks };
    }

    let trace: f64 = values.iter().sum();
    checks.push(SpectrumCheck {
        name: "trace",
        passed: (trace - n).abs() <= 1e-8,
        residual: (trace - n).abs(),
    });

    let second: f64 = values.iter().map(|v| v * v).sum();
    checks.push(SpectrumCheck {
        name: "second_moment",
        passed: (second - scalars.b).abs() <= 1e-8,
        residual: (second - scalars.b).abs(),
    });

    let lambda1 = s.lambda1();
    checks.push(SpectrumCheck {
        name: "lambda_max",
        passed: lambda1 <= 2.0 + 1e-10,
        residual: (lambda1 - 2.0).max(0.0),
    });

    let zeros = values
        .iter()
        .filter(|v| v.abs() < ZERO_EIGENVALUE_TOL)
        .count();
    checks.push(SpectrumCheck {
        name: "single_zero",
        passed: zeros == 1,
        residual: (zeros as f64 - 1.0).abs(),
    });

    let gap = (lambda1 - 2.0).abs();
    let bipartite = g.is_bipartite();
    checks.push(SpectrumCheck {
        name: "bipartite_iff_lambda1_eq_2",
        passed: if bipartite { gap <= 1e-8 } else { gap > 1e-8 },
        residual: gap,
    });

    SpectrumValidation { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    // Analytic spectra used as independent references.
    fn path_spectrum(n: usize) -> Vec<f64> {
        (0..n)
            .map(|k| 1.0 - (k as f64 * std::f64::consts::PI / (n - 1) as f64).cos())
            .collect()
    }
    fn cycle_spectrum(n: usize) -> Vec<f64> {
        (0..n)
            .map(|k| 1.0 - (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect()
    }

    fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_unstable_by(|a, b| b.total_cmp(a));
        v
    }

    fn graph_spectrum(g: &Graph) -> Spectrum {
        spectrum(&normalized_laplacian(g).unwrap()).unwrap()
    }

    #[test]
    fn laplacian_entries() {
        let k2 = make_named(NamedGraph::Complete(2)).unwrap();
        let m = normalized_laplacian(&k2).unwrap();
        assert_eq!(m.get(0, 0), 1.0);
        assert_eq!(m.get(0, 1), -1.0);
        assert_eq!(m.get(1, 0), -1.0);

        let p3 = make_named(NamedGraph::Path(3)).unwrap();
        let m = normalized_laplacian(&p3).unwrap();
        let w = -1.0 / 2.0f64.sqrt();
        assert_eq!(m.get(0, 1), w);
        assert_eq!(m.get(1, 2), w);
        assert_eq!(m.get(0, 2), 0.0);

        let k4 = make_named(NamedGraph::Complete(4)).unwrap();
        let m = normalized_laplacian(&k4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { 1.0 } else { -1.0 / 3.0 };
                assert!((m.get(i, j) - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn laplacian_rejects_isolated_vertex() {
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        assert_eq!(
            normalized_laplacian(&g),
            Err(SpectralError::ZeroDegreeVertex(3))
        );
    }

    #[test]
    fn spectrum_of_p4_matches_analytic() {
        let p4 = make_named(NamedGraph::Path(4)).unwrap();
        let s = graph_spectrum(&p4);
        let expected = sorted_desc(path_spectrum(4)); // {2, 1.5, 0.5, 0}
        for (got, want) in s.values().iter().zip(&expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
        assert_eq!(s.values()[3], 0.0);
    }

    #[test]
    fn spectrum_of_complete_graph() {
        for n in [3usize, 4, 10, 25] {
            let g = make_named(NamedGraph::Complete(n)).unwrap();
            let s = graph_spectrum(&g);
            let expected = n as f64 / (n as f64 - 1.0);
            for &v in &s.values()[..n - 1] {
                assert!((v - expected).abs() < 1e-12);
            }
            assert_eq!(s.values()[n - 1], 0.0);
        }
    }

    #[test]
    fn spectrum_of_c4_matches_analytic() {
        let c4 = make_named(NamedGraph::Cycle(4)).unwrap();
        let s = graph_spectrum(&c4);
        let expected = sorted_desc(cycle_spectrum(4)); // {2, 1, 1, 0}
        for (got, want) in s.values().iter().zip(&expected) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn degree_pair_sums() {
        let p4 = make_named(NamedGraph::Path(4)).unwrap();
        let ds = degree_pair_sum(&p4);
        assert!((ds.t - 2.5).abs() < 1e-15);
        assert!((ds.b - 6.5).abs() < 1e-15);

        for n in [3usize, 7, 12] {
            let g = make_named(NamedGraph::Complete(n)).unwrap();
            let ds = degree_pair_sum(&g);
            let nf = n as f64;
            assert!((ds.t - nf / (nf - 1.0)).abs() < 1e-12);
            assert!((ds.b - nf * nf / (nf - 1.0)).abs() < 1e-12);
        }

        let paw = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let ds = degree_pair_sum(&paw);
        assert!((ds.t - 11.0 / 6.0).abs() < 1e-15);
        assert!((ds.b - 35.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn s_alpha_star_values() {
        let p4 = make_named(NamedGraph::Path(4)).unwrap();
        let s = graph_spectrum(&p4);
        let got = s_alpha_star(&s, 0.5).unwrap();
        // sqrt(2) + sqrt(3/2) + sqrt(1/2)
        assert!((got - 3.3460652149512316).abs() < 1e-12);

        let k4 = make_named(NamedGraph::Complete(4)).unwrap();
        let got = s_alpha_star(&graph_spectrum(&k4), 0.5).unwrap();
        assert!((got - 3.0 * (4.0f64 / 3.0).sqrt()).abs() < 1e-12);

        let star = make_named(NamedGraph::Star(4)).unwrap();
        let got = s_alpha_star(&graph_spectrum(&star), 0.5).unwrap();
        assert!((got - (2.0 + 2.0f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn s_alpha_star_rejects_bad_alpha() {
        let s = graph_spectrum(&make_named(NamedGraph::Path(4)).unwrap());
        assert_eq!(s_alpha_star(&s, 0.0), Err(SpectralError::InvalidAlpha(0.0)));
        assert_eq!(s_alpha_star(&s, 1.0), Err(SpectralError::InvalidAlpha(1.0)));
        assert!(s_alpha_star(&s, f64::NAN).is_err());
    }

    #[test]
    fn s_alpha_star_flags_disconnection() {
        // Two components give two zero eigenvalues.
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let s = graph_spectrum(&g);
        assert!(matches!(
            s_alpha_star(&s, 0.5),
            Err(SpectralError::UnexpectedZeroEigenvalue { .. })
        ));
    }

    #[test]
    fn validation_report() {
        let p4 = make_named(NamedGraph::Path(4)).unwrap();
        let report = validate_spectrum(&graph_spectrum(&p4), &p4);
        assert!(report.all_passed(), "{report:?}");

        // Trees are bipartite: lambda1 must be 2.
        let tree = crate::graph::generate_random_tree(40, 3).unwrap();
        let s = graph_spectrum(&tree);
        assert!((s.lambda1() - 2.0).abs() < 1e-8);
        assert!(validate_spectrum(&s, &tree).all_passed());

        // The paw graph is not bipartite: lambda1 strictly below 2.
        let paw = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let s = graph_spectrum(&paw);
        assert!(s.lambda1() < 2.0 - 1e-8);
        assert!(validate_spectrum(&s, &paw).all_passed());

        // A disconnected graph fails the single-zero check.
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let report = validate_spectrum(&graph_spectrum(&g), &g);
        assert!(!report.all_passed());
        let zero_check = report
            .checks
            .iter()
            .find(|c| c.name == "single_zero")
            .unwrap();
        assert!(!zero_check.passed);
    }

    #[test]
    fn spectrum_invariant_under_relabeling() {
        let g = crate::graph::generate_er_connected(24, 0.4, 9, 10_000).unwrap();
        let reference = graph_spectrum(&g);
        // Relabel via the permutation v -> n + 1 - v.
        let n = g.vertex_count();
        let permuted: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (n + 1 - u, n + 1 - v))
            .collect();
        let h = Graph::new(n, &permuted).unwrap();
        let s = graph_spectrum(&h);
        for (a, b) in reference.values().iter().zip(s.values()) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}
