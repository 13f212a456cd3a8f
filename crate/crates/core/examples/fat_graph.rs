//! Face tracing and bigon collapse on small fat graphs.

use ratgenus::graph::{BeachballKind, FatGraph, Reduction, Slot, Surface};

fn main() -> Result<(), ratgenus::error::Error> {
    // One vertex on a torus, ten slots, five chords.
    let slot = |pos| Slot { vertex: 0, pos };
    let g = FatGraph {
        surface: Surface { genus: 1, boundary_count: 0 },
        q_vertices: 1,
        n: 10,
        r: 1,
        interior_edges: [(0, 6), (1, 5), (2, 8), (3, 7), (4, 9)].map(|(a, b)| (slot(a), slot(b))).to_vec(),
        boundary_edges: vec![],
    };
    println!("counts ok: {}", g.check_counts().ok);
    for f in g.faces() {
        println!("face with {} sides", f.sides());
    }
    if let Reduction::Reduced(red) = g.reduce()? {
        println!("reduced: {:?}, family sizes {:?}", red.counts, red.family_sizes());
    }
    for (name, g) in [("sphere", FatGraph::beachball_first(6)), ("disk", FatGraph::beachball_second(6))] {
        match g.reduce()? {
            Reduction::Beachball(BeachballKind::First) => println!("{name}: beachball of the first kind"),
            Reduction::Beachball(BeachballKind::Second) => println!("{name}: beachball of the second kind"),
            Reduction::Reduced(r) => println!("{name}: reduced to {:?}", r.counts),
        }
    }
    Ok(())
}
