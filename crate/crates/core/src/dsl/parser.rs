use std::collections::HashSet;
use std::fmt;

use super::lexer::{lex, Cmp, Spanned, Tok};
use super::ParseError;
use crate::error::{Error, Result};
use crate::spec::KnotSpec;
use crate::torus_bundle::UnimodularMatrix;
use crate::value::Rational;

/// A knot expression; like [`KnotSpec`] but may name earlier definitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Ref(String),
    Unknot,
    Seed { genus: u32, hyperbolic: bool },
    TorusKnot { u: i64, v: i64 },
    /// Slope normalized to `m > 0`.
    Surgery { base: Box<Expr>, m: i64, n: i64 },
    ConnectSum(Box<Expr>, Box<Expr>),
    Cable { base: Box<Expr>, p: i64, q: i64 },
    Satellite { base: Box<Expr>, winding: i64 },
    TorusBundle([i64; 4]),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    Knot { name: String, expr: Expr },
    Assert { name: String, cmp: Cmp, value: Rational },
    Verify { suite: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stmt {
    pub line: usize,
    pub kind: StmtKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecFile {
    pub statements: Vec<Stmt>,
}

impl Expr {
    /// Converts to a [`KnotSpec`], looking names up with `env`.
    pub fn resolve(&self, env: &dyn Fn(&str) -> Option<KnotSpec>) -> Result<KnotSpec> {
        let boxed = |e: &Expr| e.resolve(env);
        Ok(match self {
            Expr::Ref(name) => env(name).ok_or_else(|| Error::InvalidSpec(format!("`{name}` has no value")))?,
            Expr::Unknot => KnotSpec::Unknot,
            Expr::Seed { genus, hyperbolic } => KnotSpec::seed(*genus, *hyperbolic),
            Expr::TorusKnot { u, v } => KnotSpec::TorusKnot { u: *u, v: *v },
            Expr::Surgery { base, m, n } => {
                if *m <= 0 {
                    return Err(Error::InvalidSpec(format!("surgery slope {m}/{n} has zero numerator")));
                }
                KnotSpec::surgery(boxed(base)?, *m as u64, *n)
            }
            Expr::ConnectSum(a, b) => KnotSpec::connect_sum(boxed(a)?, boxed(b)?),
            Expr::Cable { base, p, q } => KnotSpec::cable(boxed(base)?, *p, *q),
            Expr::Satellite { base, winding } => {
                if *winding <= 0 {
                    return Err(Error::InvalidSpec("satellite winding must be positive".into()));
                }
                KnotSpec::satellite(boxed(base)?, *winding as u64)
            }
            Expr::TorusBundle([a, b, c, d]) => KnotSpec::TorusBundleFiber(UnimodularMatrix::new(*a, *b, *c, *d)?),
        })
    }

    /// The expression for a spec with no named parts.
    pub fn from_spec(k: &KnotSpec) -> Expr {
        let b = |k: &KnotSpec| Box::new(Expr::from_spec(k));
        match k {
            KnotSpec::Unknot => Expr::Unknot,
            KnotSpec::Seed { genus, hyperbolic, .. } => Expr::Seed { genus: *genus, hyperbolic: *hyperbolic },
            KnotSpec::TorusKnot { u, v } => Expr::TorusKnot { u: *u, v: *v },
            KnotSpec::Surgery { base, m, n } => Expr::Surgery { base: b(base), m: *m as i64, n: *n },
            KnotSpec::ConnectSum(x, y) => Expr::ConnectSum(b(x), b(y)),
            KnotSpec::Cable { base, p, q } => Expr::Cable { base: b(base), p: *p, q: *q },
            KnotSpec::Satellite { base, winding } => Expr::Satellite { base: b(base), winding: *winding as i64 },
            KnotSpec::TorusBundleFiber(a) => Expr::TorusBundle([a.alpha, a.beta, a.gamma, a.delta]),
        }
    }

    fn refs<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Ref(n) => out.push(n),
            Expr::Surgery { base, .. } | Expr::Cable { base, .. } | Expr::Satellite { base, .. } => base.refs(out),
            Expr::ConnectSum(a, b) => {
                a.refs(out);
                b.refs(out);
            }
            _ => {}
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Ref(n) => f.write_str(n),
            Expr::Unknot => f.write_str("unknot"),
            Expr::Seed { genus, hyperbolic } => {
                write!(f, "s3knot(genus={genus}")?;
                if *hyperbolic {
                    f.write_str(", hyperbolic")?;
                }
                f.write_str(")")
            }
            Expr::TorusKnot { u, v } => write!(f, "torusknot({u}, {v})"),
            Expr::Surgery { base, m, n } => write!(f, "surgery({base}, {m}/{n})"),
            Expr::ConnectSum(a, b) => write!(f, "connectsum({a}, {b})"),
            Expr::Cable { base, p, q } => write!(f, "cable({base}, {p}, {q})"),
            Expr::Satellite { base, winding } => write!(f, "satellite({base}, {winding})"),
            Expr::TorusBundle([a, b, c, d]) => write!(f, "torusbundle([{a} {b}; {c} {d}])"),
        }
    }
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Knot { name, expr } => write!(f, "knot {name} = {expr}"),
            StmtKind::Assert { name, cmp, value } => write!(f, "assert rational_genus({name}) {cmp} {value}"),
            StmtKind::Verify { suite } => write!(f, "verify {suite}"),
        }
    }
}

impl fmt::Display for SpecFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.kind)?;
        }
        Ok(())
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> PResult<T> {
        let t = self.peek();
        Err(ParseError::Syntax {
            line: t.line,
            col: t.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.to_string(),
        })
    }

    fn expect(&mut self, tok: Tok, shown: &str) -> PResult<()> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&[shown])
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => self.error(&[&format!("`{kw}`")]),
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.error(&["identifier"]),
        }
    }

    fn int(&mut self) -> PResult<i64> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.error(&["integer"]),
        }
    }

    fn rat_parts(&mut self) -> PResult<(i64, i64)> {
        let n = self.int()?;
        if self.peek().tok == Tok::Slash {
            self.bump();
            let d = self.int()?;
            return Ok((n, d));
        }
        Ok((n, 1))
    }

    fn rational(&mut self) -> PResult<Rational> {
        let at = self.peek().clone();
        let (n, d) = self.rat_parts()?;
        if d == 0 {
            return Err(ParseError::Syntax {
                line: at.line,
                col: at.col,
                expected: vec!["nonzero denominator".into()],
                found: format!("`{n}/0`"),
            });
        }
        Ok(Rational::new(n as i128, d as i128))
    }

    fn expr(&mut self) -> PResult<Expr> {
        const STARTS: [&str; 9] = [
            "`unknot`",
            "`s3knot`",
            "`torusknot`",
            "`surgery`",
            "`connectsum`",
            "`cable`",
            "`satellite`",
            "`torusbundle`",
            "knot name",
        ];
        let Tok::Ident(head) = self.peek().tok.clone() else { return self.error(&STARTS) };
        self.bump();
        let e = match head.as_str() {
            "unknot" => Expr::Unknot,
            "s3knot" => {
                self.expect(Tok::LParen, "`(`")?;
                self.keyword("genus")?;
                self.expect(Tok::Assign, "`=`")?;
                let at = self.peek().clone();
                let g = self.int()?;
                let genus = u32::try_from(g).map_err(|_| ParseError::Syntax {
                    line: at.line,
                    col: at.col,
                    expected: vec!["non-negative genus".into()],
                    found: format!("`{g}`"),
                })?;
                let mut hyperbolic = false;
                if self.peek().tok == Tok::Comma {
                    self.bump();
                    self.keyword("hyperbolic")?;
                    hyperbolic = true;
                }
                self.expect(Tok::RParen, "`)`")?;
                Expr::Seed { genus, hyperbolic }
            }
            "torusknot" => {
                self.expect(Tok::LParen, "`(`")?;
                let u = self.int()?;
                self.expect(Tok::Comma, "`,`")?;
                let v = self.int()?;
                self.expect(Tok::RParen, "`)`")?;
                Expr::TorusKnot { u, v }
            }
            "surgery" => {
                self.expect(Tok::LParen, "`(`")?;
                let base = Box::new(self.expr()?);
                self.expect(Tok::Comma, "`,`")?;
                let (mut m, mut n) = self.rat_parts()?;
                if m < 0 {
                    (m, n) = (-m, -n);
                }
                self.expect(Tok::RParen, "`)`")?;
                Expr::Surgery { base, m, n }
            }
            "connectsum" => {
                self.expect(Tok::LParen, "`(`")?;
                let a = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Expr::ConnectSum(Box::new(a), Box::new(b))
            }
            "cable" => {
                self.expect(Tok::LParen, "`(`")?;
                let base = Box::new(self.expr()?);
                self.expect(Tok::Comma, "`,`")?;
                let p = self.int()?;
                self.expect(Tok::Comma, "`,`")?;
                let q = self.int()?;
                self.expect(Tok::RParen, "`)`")?;
                Expr::Cable { base, p, q }
            }
            "satellite" => {
                self.expect(Tok::LParen, "`(`")?;
                let base = Box::new(self.expr()?);
                self.expect(Tok::Comma, "`,`")?;
                let winding = self.int()?;
                self.expect(Tok::RParen, "`)`")?;
                Expr::Satellite { base, winding }
            }
            "torusbundle" => {
                self.expect(Tok::LParen, "`(`")?;
                self.expect(Tok::LBracket, "`[`")?;
                let a = self.int()?;
                let b = self.int()?;
                self.expect(Tok::Semi, "`;`")?;
                let c = self.int()?;
                let d = self.int()?;
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::RParen, "`)`")?;
                Expr::TorusBundle([a, b, c, d])
            }
            _ => Expr::Ref(head),
        };
        Ok(e)
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let line = self.peek().line;
        let kind = match &self.peek().tok {
            Tok::Ident(s) if s == "knot" => {
                self.bump();
                let name = self.ident()?;
                self.expect(Tok::Assign, "`=`")?;
                StmtKind::Knot { name, expr: self.expr()? }
            }
            Tok::Ident(s) if s == "assert" => {
                self.bump();
                self.keyword("rational_genus")?;
                self.expect(Tok::LParen, "`(`")?;
                let name = self.ident()?;
                self.expect(Tok::RParen, "`)`")?;
                let cmp = match self.peek().tok {
                    Tok::Cmp(c) => {
                        self.bump();
                        c
                    }
                    _ => return self.error(&["`==`", "`>=`", "`<=`", "`>`", "`<`"]),
                };
                StmtKind::Assert { name, cmp, value: self.rational()? }
            }
            Tok::Ident(s) if s == "verify" => {
                self.bump();
                StmtKind::Verify { suite: self.ident()? }
            }
            _ => return self.error(&["`knot`", "`assert`", "`verify`"]),
        };
        Ok(Stmt { line, kind })
    }
}

const RESERVED: [&str; 12] = [
    "knot", "assert", "verify", "unknot", "s3knot", "torusknot", "surgery", "connectsum", "cable", "satellite",
    "torusbundle", "rational_genus",
];

/// Parses a spec file and checks that names are defined once, before use.
pub fn parse(src: &str) -> PResult<SpecFile> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut statements = Vec::new();
    let mut defined: HashSet<String> = HashSet::new();
    while p.peek().tok != Tok::Eof {
        let at = p.peek().clone();
        let stmt = p.stmt()?;
        match &stmt.kind {
            StmtKind::Knot { name, expr } => {
                let mut refs = Vec::new();
                expr.refs(&mut refs);
                if let Some(r) = refs.iter().find(|r| !defined.contains(**r)) {
                    return Err(ParseError::UnknownName { line: at.line, name: r.to_string() });
                }
                if RESERVED.contains(&name.as_str()) || !defined.insert(name.clone()) {
                    return Err(ParseError::DuplicateName { line: at.line, name: name.clone() });
                }
            }
            StmtKind::Assert { name, .. } => {
                if !defined.contains(name) {
                    return Err(ParseError::UnknownName { line: at.line, name: name.clone() });
                }
            }
            StmtKind::Verify { .. } => {}
        }
        statements.push(stmt);
    }
    Ok(SpecFile { statements })
}
