//! Prime graphs of a few tabulated groups and of PSL2(q).

use cdgraph::degrees::{DegreeTable, GroupDescriptor};
use cdgraph::primegraph::{check_conditions, prime_graph_of};

fn main() -> cdgraph::Result<()> {
    let table = DegreeTable::builtin();
    let groups = [
        GroupDescriptor::Tabulated { name: "A7".into() },
        GroupDescriptor::Tabulated { name: "M11".into() },
        GroupDescriptor::Psl2 { q: 17 },
        GroupDescriptor::Suzuki { q2: 8 },
    ];
    for group in groups {
        let pg = prime_graph_of(&group, &table)?;
        let cond = check_conditions(&pg, false);
        println!("{group}: primes {:?}, edges {:?}", pg.primes(), pg.prime_edges());
        println!("  alpha {} k4-free {} conditions hold {}", cond.independence_number, cond.k4_free, cond.all_ok());
    }
    Ok(())
}
