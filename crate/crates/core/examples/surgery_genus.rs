//! Rational genus of surgery cores and connected sums.

use ratgenus::eval::eval_spec;
use ratgenus::spec::KnotSpec;

fn main() -> Result<(), ratgenus::error::Error> {
    let pretzel = KnotSpec::surgery(KnotSpec::seed(5, false), 19, 1);
    let rp3 = KnotSpec::surgery(KnotSpec::Unknot, 2, 1);
    let fig = KnotSpec::surgery(KnotSpec::seed(1, true), 1, 1);
    let specs = [
        pretzel,
        KnotSpec::connect_sum(rp3.clone(), rp3.clone()),
        KnotSpec::connect_sum(fig.clone(), rp3),
        KnotSpec::connect_sum(fig.clone(), fig),
        KnotSpec::surgery(KnotSpec::TorusKnot { u: 2, v: 3 }, 7, 1),
        KnotSpec::satellite(KnotSpec::seed(2, true), 3),
    ];
    for k in &specs {
        let r = eval_spec(k)?;
        println!("{k}\n    genus {}  order {}  {:?}", r.value, r.order, r.triviality);
    }
    Ok(())
}
