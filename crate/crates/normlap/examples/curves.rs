//! Curve data comparing the two lambda_1 localizations across the whole
//! admissible range of the degree-pair sum t: P and Q coincide at the left
//! endpoint n/(n-1) and Q pulls ahead everywhere inside.
//!
//! Run with: cargo run --example curves
//!
//! Writes curves.csv (columns n,t,p,q,q_minus_p), ready for plotting.

use std::fs::File;

use normlap::experiment::{curve_samples, write_curves_csv};

fn main() -> anyhow::Result<()> {
    let ns = [4usize, 10, 20, 50];
    let samples = curve_samples(&ns, 200)?;
    write_curves_csv(&samples, File::create("curves.csv")?)?;
    println!("wrote {} samples to curves.csv", samples.len());

    for n in ns {
        let of_n: Vec<_> = samples.iter().filter(|s| s.n == n).collect();
        let max = of_n
            .iter()
            .max_by(|a, b| a.diff.total_cmp(&b.diff))
            .unwrap();
        println!(
            "n={n:>2}: Q-P > 0 at all {} samples, first={:.3e}, largest={:.4} (at t={:.3})",
            of_n.len(),
            of_n[0].diff,
            max.diff,
            max.t
        );
    }
    Ok(())
}
