//! Full per-graph bound reports: exact index, localizations, the three
//! bound variants with hypothesis flags and relative errors.
//!
//! Run with: cargo run --example bound_report

use normlap::bounds::bound_report;
use normlap::experiment::render_text_report;
use normlap::graph::{generate_er_connected, make_named, Graph, NamedGraph};

fn main() -> anyhow::Result<()> {
    // Triangle with a pendant vertex; lower bounds since alpha > 1.
    let paw = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])?;
    println!("--- paw graph, alpha = 1.5 ---");
    print!("{}", render_text_report(&bound_report(&paw, 1.5)?));

    // A bipartite graph switches theta to the exact value 2.
    let p4 = make_named(NamedGraph::Path(4))?;
    println!("\n--- path P4, alpha = 0.5 ---");
    print!("{}", render_text_report(&bound_report(&p4, 0.5)?));

    // A denser random graph; upper bounds since 0 < alpha < 1.
    let er = generate_er_connected(24, 0.5, 5, 10_000)?;
    println!("\n--- ER(24, 0.5), alpha = 0.5 ---");
    print!("{}", render_text_report(&bound_report(&er, 0.5)?));

    // Complete graphs degenerate: every localization equals n/(n-1).
    let k8 = make_named(NamedGraph::Complete(8))?;
    println!("\n--- complete K8, alpha = 0.5 ---");
    print!("{}", render_text_report(&bound_report(&k8, 0.5)?));
    Ok(())
}
