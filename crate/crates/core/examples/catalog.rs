//! Generate the construction catalog, check it, and write it as JSON lines.

use ratgenus::classify::{catalog, consistency_check, generate_case, generate_sweep, CaseParams};
use ratgenus::value::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = generate_case(CaseParams::A { genus: 5, m: 19, n: 1 })?;
    println!("case {}: {} expected {} ({:?} in {})", e.case_id, e.spec, e.expected, e.claimed_form, e.manifold);

    let entries = generate_sweep(20, 10, 10)?;
    let failures = entries.iter().filter(|e| !consistency_check(e, rat(1, 402)).pass).count();
    println!("{} entries, {failures} inconsistent", entries.len());

    let path = std::env::temp_dir().join("ratgenus-catalog.jsonl");
    std::fs::write(&path, catalog::to_jsonl(&entries))?;
    let back = catalog::from_jsonl(&std::fs::read_to_string(&path)?)?;
    println!("wrote and reread {} entries at {}", back.len(), path.display());
    Ok(())
}
