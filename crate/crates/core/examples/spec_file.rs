//! Parse and run a spec file in-process.

use ratgenus::dsl::{parse, run, ReportFormat, RunOptions};

const SRC: &str = "\
knot k = surgery(s3knot(genus=5), 19/1)
assert rational_genus(k) == 9/38
knot b = torusbundle([1 3; 0 1])
assert rational_genus(b) == 1/6
assert rational_genus(b) > 1/6
verify bounds
";

fn main() {
    let file = match parse(SRC) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report = run(&file, &RunOptions::default());
    print!("{}", report.render(ReportFormat::Text));
    println!("exit code would be {}", report.exit_code());
    if let Err(e) = parse("knot k = cable(unknot 2, 3)") {
        println!("parse error: {e}");
    }
}
