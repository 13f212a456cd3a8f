#![allow(dead_code)]

use rand::Rng;
use ratgenus::dsl::{Cmp, Expr, SpecFile, Stmt, StmtKind};
use ratgenus::torus_bundle::UnimodularMatrix;
use ratgenus::value::Rational;

pub fn random_matrix<R: Rng>(rng: &mut R, steps: usize) -> UnimodularMatrix {
    let mut m = UnimodularMatrix::IDENTITY;
    for _ in 0..steps {
        let k = rng.gen_range(-2i64..=2);
        let e = if rng.gen_bool(0.5) {
            UnimodularMatrix::new(1, k, 0, 1).unwrap()
        } else {
            UnimodularMatrix::new(1, 0, k, 1).unwrap()
        };
        m = m * e;
    }
    m
}

pub fn random_expr<R: Rng>(rng: &mut R, depth: u32, names: &[String]) -> Expr {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    let choice = if leaf { rng.gen_range(0..5) } else { rng.gen_range(5..9) };
    let sub = |rng: &mut R| Box::new(random_expr(rng, depth - 1, names));
    match choice {
        0 => Expr::Unknot,
        1 => Expr::Seed { genus: rng.gen_range(0..20), hyperbolic: rng.gen_bool(0.5) },
        2 => Expr::TorusKnot { u: rng.gen_range(-9..10), v: rng.gen_range(-9..10) },
        3 => Expr::TorusBundle([0; 4].map(|_| rng.gen_range(-30..30))),
        4 => match names.len() {
            0 => Expr::Unknot,
            n => Expr::Ref(names[rng.gen_range(0..n)].clone()),
        },
        5 => Expr::Surgery { base: sub(rng), m: rng.gen_range(1..60), n: rng.gen_range(-60..60) },
        6 => Expr::ConnectSum(sub(rng), sub(rng)),
        7 => Expr::Cable { base: sub(rng), p: rng.gen_range(-20..20), q: rng.gen_range(-20..20) },
        _ => Expr::Satellite { base: sub(rng), winding: rng.gen_range(-5..9) },
    }
}

pub fn random_file<R: Rng>(rng: &mut R) -> SpecFile {
    let mut names: Vec<String> = Vec::new();
    let mut statements = Vec::new();
    for line in 1..=rng.gen_range(1..8) {
        let kind = match rng.gen_range(0..4) {
            0 | 1 => {
                let expr = random_expr(rng, 4, &names);
                let name = format!("k{line}");
                names.push(name.clone());
                StmtKind::Knot { name, expr }
            }
            2 if !names.is_empty() => {
                let cmp = [Cmp::Eq, Cmp::Ge, Cmp::Le, Cmp::Gt, Cmp::Lt][rng.gen_range(0..5)];
                let value = Rational::new(rng.gen_range(-50..50), rng.gen_range(1..50));
                StmtKind::Assert { name: names[rng.gen_range(0..names.len())].clone(), cmp, value }
            }
            _ => StmtKind::Verify { suite: ["constants", "catalog", "lemma34", "bounds"][rng.gen_range(0..4)].into() },
        };
        statements.push(Stmt { line, kind });
    }
    SpecFile { statements }
}

pub fn kinds(f: &SpecFile) -> Vec<StmtKind> {
    f.statements.iter().map(|s| s.kind.clone()).collect()
}

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_ratgenus")
}

pub fn spec_path(name: &str) -> String {
    format!("{}/specs/{name}", env!("CARGO_MANIFEST_DIR"))
}
