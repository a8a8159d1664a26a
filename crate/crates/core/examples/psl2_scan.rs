//! K4-freeness of PSL2(q) for prime powers q up to 8192.

use cdgraph::classify::psl2_scan_summary;

fn main() -> cdgraph::Result<()> {
    let s = psl2_scan_summary(8192)?;
    println!("{} prime powers, {} K4-free, mismatches {:?}", s.rows.len(), s.k4_free_count, s.criterion_mismatches);
    if let Some(r) = s.first_not_k4_free {
        println!("first with a K4: q={} (|pi(q-1)|={}, |pi(q+1)|={})", r.q, r.pi_minus, r.pi_plus);
    }
    Ok(())
}
