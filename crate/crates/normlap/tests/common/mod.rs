//! Shared oracles for the integration tests: analytic spectra, exhaustive
//! small-graph enumeration, an independent bisection, and corpus builders.
//! Everything here stays independent of the library paths it checks.
#![allow(dead_code)]

use normlap::graph::{generate_er_connected, generate_random_tree, Graph};
use normlap::spectral::{normalized_laplacian, spectrum, Spectrum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn graph_spectrum(g: &Graph) -> Spectrum {
    spectrum(&normalized_laplacian(g).expect("laplacian")).expect("spectrum")
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_unstable_by(|a, b| b.total_cmp(a));
    v
}

/// Path: 1 - cos(k pi / (n-1)), k = 0..n-1.
pub fn path_spectrum(n: usize) -> Vec<f64> {
    sorted_desc(
        (0..n)
            .map(|k| 1.0 - (k as f64 * std::f64::consts::PI / (n - 1) as f64).cos())
            .collect(),
    )
}

/// Cycle: 1 - cos(2 pi k / n), k = 0..n-1.
pub fn cycle_spectrum(n: usize) -> Vec<f64> {
    sorted_desc(
        (0..n)
            .map(|k| 1.0 - (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect(),
    )
}

/// Star: {2, 1 (n-2 times), 0}.
pub fn star_spectrum(n: usize) -> Vec<f64> {
    let mut v = vec![1.0; n];
    v[0] = 2.0;
    v[n - 1] = 0.0;
    v
}

/// Complete graph: {n/(n-1) (n-1 times), 0}.
pub fn complete_spectrum(n: usize) -> Vec<f64> {
    let mut v = vec![n as f64 / (n as f64 - 1.0); n];
    v[n - 1] = 0.0;
    v
}

/// All connected labeled graphs on `n <= 6` vertices.
pub fn enumerate_connected(n: usize) -> Vec<Graph> {
    assert!(
        (2..=6).contains(&n),
        "enumeration is exhaustive only for small n"
    );
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .collect();
    let mut graphs = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("enumerated edges are valid");
        if g.is_connected() {
            graphs.push(g);
        }
    }
    graphs
}

/// Deterministic mixed corpus: `er_count` connected ER graphs with
/// `n in 4..=60` and `q` cycling over {0.1, 0.5, 0.9}, plus `tree_count`
/// uniform random trees with `n in 4..=60`.
pub fn random_corpus(er_count: usize, tree_count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let qs = [0.1, 0.5, 0.9];
    let mut corpus = Vec::with_capacity(er_count + tree_count);
    for i in 0..er_count {
        let n = rng.random_range(4usize..=60);
        let q = qs[i % qs.len()];
        let seed = 700_000 + i as u64;
        corpus.push(generate_er_connected(n, q, seed, 10_000).expect("corpus generation"));
    }
    for i in 0..tree_count {
        let n = rng.random_range(4usize..=60);
        let seed = 800_000 + i as u64;
        corpus.push(generate_random_tree(n, seed).expect("corpus generation"));
    }
    corpus
}

/// Plain bisection, independent of the library's root finder.
pub fn oracle_bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = f(lo);
    assert!(
        f_lo == 0.0 || f(hi) == 0.0 || f_lo.signum() != f(hi).signum(),
        "oracle bracket must change sign"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid).signum() == f(lo).signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
