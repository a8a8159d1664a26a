//! k-regular prime graphs on k+2 primes from direct products.

use cdgraph::primegraph::{cocktail_party, construct_regular_product};

fn main() -> cdgraph::Result<()> {
    for k in [2, 4, 6, 8] {
        let (group, pg) = construct_regular_product(k, None)?;
        let same = pg.graph.is_isomorphic(&cocktail_party((k + 2) / 2)?);
        println!("k={k}: {group}");
        println!("  order {} regular {:?} cocktail-party {same}", pg.graph.order(), pg.graph.regular_degree());
    }
    Ok(())
}
