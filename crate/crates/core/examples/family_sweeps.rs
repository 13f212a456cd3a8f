//! Exhaustive checks on parallel edge families and the reduced edge bounds.

use ratgenus::graph::{
    edge_bound_sweep, euler_chain_sweep, extended_s_cycle_sweep, pair_count_sweep, parity_sweep, reduced_edge_bound,
    s_cycle_sweep, ParallelFamily,
};
use ratgenus::value::int;

fn main() -> Result<(), ratgenus::error::Error> {
    let f = ParallelFamily { n: 8, k: 5, start: 0, size: 5 };
    println!("labels {:?}, S-cycle at {:?}", (0..f.size).map(|t| f.end_labels(t)).collect::<Vec<_>>(), f.find_s_cycle()?);

    let mut all = pair_count_sweep(8, 2);
    all.extend(parity_sweep(10));
    all.extend(s_cycle_sweep(12));
    all.extend(extended_s_cycle_sweep(12));
    all.extend(edge_bound_sweep(40, 6));
    all.push(euler_chain_sweep(15));
    for r in &all {
        println!("{:?}  {} ({})  {}", r.verdict, r.lemma, r.parameters, r.witness.as_deref().unwrap_or(""));
    }

    let b = reduced_edge_bound(3, 10, Some(int(7)), None)?;
    println!("p = 3, n = 10, cap 7: e >= {}, -chi >= {}, genus >= {}", b.e_bar_lower, b.neg_chi_lower, b.genus_lower);
    Ok(())
}
