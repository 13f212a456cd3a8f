//! Which structures can carry a small rational genus.

use ratgenus::classify::{classify, vanishing_classify, ManifoldClass};
use ratgenus::spec::KnotSpec;
use ratgenus::torus_bundle::UnimodularMatrix;
use ratgenus::value::{rat, GenusValue};

fn main() -> Result<(), ratgenus::error::Error> {
    let classes = [
        ManifoldClass::Reducible,
        ManifoldClass::LensSpace { p: 8, q: 3 },
        ManifoldClass::Hyperbolic,
        ManifoldClass::SmallSFS,
        ManifoldClass::Toroidal,
        ManifoldClass::TorusBundle(UnimodularMatrix::new(2, 1, 1, 1)?),
    ];
    let v = GenusValue::exact(rat(1, 500));
    for mc in &classes {
        let c = classify(mc, &v, rat(1, 402));
        println!("{mc}: genus 1/500 forces one of {:?}", c.forms);
    }
    let above = classify(&ManifoldClass::Hyperbolic, &GenusValue::at_least(rat(1, 100)), rat(1, 402));
    println!("hyperbolic, genus >= 1/100: {:?}", above.forms);

    let rp = KnotSpec::surgery(KnotSpec::Unknot, 2, 1);
    println!("zero genus of {rp}: {:?}", vanishing_classify(&rp)?);
    Ok(())
}
