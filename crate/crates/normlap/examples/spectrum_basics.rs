//! Normalized-Laplacian spectra of the standard families and the power-sum
//! index s*_alpha.
//!
//! Run with: cargo run --example spectrum_basics

use normlap::graph::{make_named, NamedGraph};
use normlap::spectral::{
    degree_pair_sum, normalized_laplacian, s_alpha_star, spectrum, validate_spectrum,
};

fn main() -> anyhow::Result<()> {
    let families = [
        ("path P6", make_named(NamedGraph::Path(6))?),
        ("cycle C6", make_named(NamedGraph::Cycle(6))?),
        ("star K_{1,5}", make_named(NamedGraph::Star(6))?),
        ("complete K6", make_named(NamedGraph::Complete(6))?),
        (
            "complete bipartite K_{2,4}",
            make_named(NamedGraph::CompleteBipartite(2, 4))?,
        ),
    ];

    for (name, g) in &families {
        let s = spectrum(&normalized_laplacian(g)?)?;
        let scalars = degree_pair_sum(g);
        println!("{name}: n={} m={}", g.vertex_count(), g.edge_count());
        print!("  eigenvalues:");
        for v in s.values() {
            print!(" {v:.6}");
        }
        println!();
        println!("  t = {:.6}, b = n + t = {:.6}", scalars.t, scalars.b);
        for alpha in [0.5, 1.5, -1.0, 2.0] {
            println!("  s*_{{{alpha}}} = {:.6}", s_alpha_star(&s, alpha)?);
        }
        let validation = validate_spectrum(&s, g);
        println!("  identities hold: {}", validation.all_passed());
        for check in &validation.checks {
            println!("    {:<28} residual {:.3e}", check.name, check.residual);
        }
    }
    Ok(())
}
