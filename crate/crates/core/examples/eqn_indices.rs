//! Maximal-subgroup indices of PSL2(2^f) and whether any is a prime power.

use cdgraph::arith::{both_sides_composite_support, no_prime_power_index, psl2_even_maximal_indices};

fn main() -> cdgraph::Result<()> {
    for f in 10..=31 {
        let set = psl2_even_maximal_indices(f)?;
        let relevant = both_sides_composite_support(f)?;
        let hit = no_prime_power_index(f)?;
        println!("f={f:2} relevant={relevant:<5} indices={:?} prime-power={:?}", set.values(), hit.map(|i| i.value));
    }
    Ok(())
}
