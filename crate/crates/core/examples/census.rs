//! Connected cubic graphs on 4, 6 and 8 vertices, filtered by triangle and
//! independence number.

use cdgraph::census::{enumerate_regular_connected, filter_census, Constraint, Constraints};
use cdgraph::classify::describe;

fn main() -> cdgraph::Result<()> {
    let filter = Constraints::new(vec![Constraint::TriangleRequired, Constraint::MaxAlpha(3)]);
    for n in [4, 6, 8] {
        let census = enumerate_regular_connected(n, 3)?;
        let out = filter_census(&census.graphs, &filter);
        println!("n={n}: {} cubic graphs", census.graphs.len());
        for g in &out.survivors {
            println!("  keep {} ({} triangles, alpha {})", describe(g), g.triangle_count(), g.independence_number());
        }
        for (g, failed) in &out.exclusions {
            println!("  drop {}: {}", describe(g), failed.failure_reason());
        }
    }
    Ok(())
}
