//! Localizing the two largest normalized-Laplacian eigenvalues from nothing
//! but `n` and the degree-pair sum: the majorization optima Q (for lambda_1)
//! and R (for lambda_2), compared against the classical P and the true
//! eigenvalues.
//!
//! Run with: cargo run --example eigenvalue_localization

use normlap::bounds::p_bozkurt;
use normlap::graph::{generate_er_connected, generate_random_tree, Graph};
use normlap::majorization::{
    h_star, q_closed_form, r_closed_form, solve_min_lambda, MajorizationInstance,
};
use normlap::spectral::{degree_pair_sum, normalized_laplacian, spectrum};

fn main() -> anyhow::Result<()> {
    let graphs: Vec<(String, Graph)> = vec![
        (
            "paw".into(),
            Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])?,
        ),
        (
            "ER(30, 0.5)".into(),
            generate_er_connected(30, 0.5, 11, 10_000)?,
        ),
        (
            "ER(30, 0.1)".into(),
            generate_er_connected(30, 0.1, 11, 10_000)?,
        ),
        ("tree(30)".into(), generate_random_tree(30, 11)?),
    ];

    println!(
        "{:<12} {:>3} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "graph", "h*", "P", "Q", "lambda1", "R", "lambda2", "Q-P"
    );
    for (name, g) in &graphs {
        let n = g.vertex_count();
        let scalars = degree_pair_sum(g);
        let s = spectrum(&normalized_laplacian(g)?)?;
        let hs = h_star(n, scalars.b, 2)?;
        let q = q_closed_form(n, scalars.b)?;
        let r = r_closed_form(n, scalars.b)?;
        let p = p_bozkurt(n, scalars.t)?;
        assert!(
            s.lambda1() >= q && q >= p,
            "Q localizes lambda1 and dominates P"
        );
        assert!(s.lambda2() >= r, "R localizes lambda2");
        println!(
            "{:<12} {:>3} {:>9.5} {:>9.5} {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
            name,
            hs,
            p,
            q,
            s.lambda1(),
            r,
            s.lambda2(),
            q - p
        );
    }

    // The general solver behind the closed forms, here with a cubic power
    // sum: minimize the h-th largest coordinate subject to sum = n and
    // sum of cubes = b.
    println!("\ncubic-constraint solver on (n=4, b=11.5):");
    for h in 1..=3usize {
        let inst = MajorizationInstance::new(4, 11.5, 3, h)?;
        let result = solve_min_lambda(&inst)?;
        println!(
            "  min lambda_{h} = {:.9}  [{:?}, bracket ({:.4}, {:.4}), residual {:.2e}]",
            result.delta_star, result.case, result.bracket.0, result.bracket.1, result.residual
        );
    }
    Ok(())
}
