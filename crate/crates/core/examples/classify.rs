//! Regular prime-graph candidates for valencies 0 to 3 under both hypotheses.

use cdgraph::classify::{classify_regular_candidates, Hypothesis};

fn main() -> cdgraph::Result<()> {
    for k in 0..=3 {
        for h in [Hypothesis::Solvable, Hypothesis::General] {
            let r = classify_regular_candidates(k, h)?;
            let remaining: Vec<_> = r.remaining().iter().map(|s| s.name.clone()).collect();
            println!("k={k} {h}: combinatorial {:?}, remaining {:?}", r.survivor_names(), remaining);
        }
    }
    Ok(())
}
