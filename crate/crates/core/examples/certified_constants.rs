//! Certified enclosures of the tube and cusp constants.

use ratgenus::certify::{constants_suite, maximize_h, DEFAULT_PRECISION};

fn main() -> Result<(), ratgenus::error::Error> {
    let prec = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_PRECISION);
    let m = maximize_h(prec)?;
    let (lo, hi) = m.r_star.to_decimal(10);
    println!("argmax h in [{lo}, {hi}]");
    let (lo, hi) = m.h_star.to_decimal(10);
    println!("max h in [{lo}, {hi}]");
    println!(
        "h' > 0 certified on {} pieces, h' < 0 on {} pieces",
        m.rising_pieces, m.falling_pieces
    );
    for c in constants_suite(prec)? {
        println!("{:?}  {}  [{}, {}]", c.verdict, c.claim, c.interval_lo, c.interval_hi);
    }
    Ok(())
}
