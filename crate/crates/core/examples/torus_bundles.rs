//! Fiber curves in torus bundles: parabolic, Anosov and the small-trace gap.

use ratgenus::torus_bundle::{fiber_curve_genus, horizontal_solution, knot_order, small_trace_gap, UnimodularMatrix};

fn main() -> Result<(), ratgenus::error::Error> {
    for p in 1..=5 {
        let a = UnimodularMatrix::parabolic(p);
        println!("{a}: genus {}, order {}", fiber_curve_genus(&a)?, knot_order(&a)?);
    }
    let b = UnimodularMatrix::new(2, 1, 1, 1)?;
    let conj = UnimodularMatrix::parabolic(4).conjugate_by(&b);
    println!("{conj} (conjugate of [1 4; 0 1]): genus {}", fiber_curve_genus(&conj)?);

    for a in [UnimodularMatrix::new(2, 1, 1, 1)?, UnimodularMatrix::new(5, 2, 7, 3)?] {
        let h = horizontal_solution(&a)?;
        let bound = h.seifert_bound().map(|r| r.to_string()).unwrap_or_else(|| "nothing".into());
        println!("{a}: genus {}, horizontal surface gives {bound}", fiber_curve_genus(&a)?);
    }

    let mut small = 0;
    for a in -6..=6 {
        for b in -6..=6 {
            for c in -6..=6 {
                for d in -6..=6 {
                    let Ok(m) = UnimodularMatrix::new(a, b, c, d) else { continue };
                    if !m.is_identity() && (m.trace() == -2 || m.trace().abs() <= 1) {
                        assert!(small_trace_gap(&m)?);
                        small += 1;
                    }
                }
            }
        }
    }
    println!("{small} small-trace matrices, none with genus in (0, 1/8)");
    Ok(())
}
