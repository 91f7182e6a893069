//! Text front end: polynomial expressions and job files.
//!
//! Expression grammar (whitespace-insensitive, `#` starts a comment):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] atom ['^' integer]
//! atom   := var | integer ['/' integer] | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit. The `integer '/' integer` form is only a
//! rational constant, so canonical output over `QQ` parses back unchanged.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::polyring::{PolyRing, Polynomial};

/// Parsed expression; `pos` fields are byte offsets into the source line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Var { name: String, pos: usize },
    Int(BigInt),
    Frac { num: BigInt, den: BigInt, pos: usize },
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
    Paren(Box<ExprAst>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Parser { src: src.as_bytes(), pos: 0, base }
    }

    fn here(&self) -> usize {
        self.base + self.pos
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' => self.pos += 1,
                b'#' => {
                    while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Some(digits.parse().expect("decimal digits"))
    }

    fn identifier(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                return None;
            }
            self.pos += 1;
        }
        (start != self.pos).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let negated = self.eat(b'-');
        let mut atom = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.here();
            let e = self.integer().ok_or_else(|| Error::parse(at, &["non-negative integer exponent"]))?;
            let e = u16::try_from(&e).map_err(|_| Error::parse(at, &["exponent <= 65535"]))?;
            atom = ExprAst::Pow(Box::new(atom), e as u32);
        }
        Ok(if negated { ExprAst::Neg(Box::new(atom)) } else { atom })
    }

    fn atom(&mut self) -> Result<ExprAst> {
        self.skip_ws();
        let at = self.here();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::parse(self.here(), &["')'", "operator"]));
                }
                Ok(ExprAst::Paren(Box::new(inner)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer().expect("digit present");
                if self.eat(b'/') {
                    self.skip_ws();
                    let den_at = self.here();
                    let den = self.integer().ok_or_else(|| Error::parse(den_at, &["integer denominator"]))?;
                    if den.is_zero() {
                        return Err(Error::parse(den_at, &["nonzero denominator"]));
                    }
                    Ok(ExprAst::Frac { num, den, pos: at })
                } else {
                    Ok(ExprAst::Int(num))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.identifier().expect("identifier start present");
                Ok(ExprAst::Var { name, pos: at })
            }
            _ => Err(Error::parse(at, &["variable", "integer", "'('"])),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(Error::parse(self.here(), &["operator", "end of input"]))
        } else {
            Ok(())
        }
    }
}

/// Parses an expression without resolving variables.
pub fn parse_expr(text: &str) -> Result<ExprAst> {
    parse_expr_at(text, 0)
}

fn parse_expr_at(text: &str, base: usize) -> Result<ExprAst> {
    let mut p = Parser::new(text, base);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

impl ExprAst {
    /// Variable names referenced by the expression, with positions.
    pub fn variables(&self) -> Vec<(&str, usize)> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut Vec<(&'a str, usize)>) {
        match self {
            ExprAst::Var { name, pos } => out.push((name, *pos)),
            ExprAst::Int(_) | ExprAst::Frac { .. } => {}
            ExprAst::Neg(a) | ExprAst::Pow(a, _) | ExprAst::Paren(a) => a.collect_vars(out),
            ExprAst::Add(a, b) | ExprAst::Sub(a, b) | ExprAst::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Evaluates the expression in `ring`. Integer literals are reduced into
    /// the coefficient field.
    pub fn to_polynomial(&self, ring: &PolyRing) -> Result<Polynomial> {
        let field = ring.field();
        Ok(match self {
            ExprAst::Var { name, pos } => {
                let i = ring
                    .var_index(name)
                    .ok_or_else(|| Error::UnknownVariable { name: name.clone(), pos: *pos })?;
                ring.variable(i)
            }
            ExprAst::Int(n) => Polynomial::constant(ring, field.from_bigint(n)),
            ExprAst::Frac { num, den, pos } => Polynomial::constant(
                ring,
                field
                    .from_fraction(num, den)
                    .map_err(|_| Error::parse(*pos, &["denominator invertible in the field"]))?,
            ),
            ExprAst::Neg(a) => a.to_polynomial(ring)?.neg(),
            ExprAst::Paren(a) => a.to_polynomial(ring)?,
            ExprAst::Add(a, b) => a.to_polynomial(ring)?.add(&b.to_polynomial(ring)?)?,
            ExprAst::Sub(a, b) => a.to_polynomial(ring)?.sub(&b.to_polynomial(ring)?)?,
            ExprAst::Mul(a, b) => a.to_polynomial(ring)?.mul(&b.to_polynomial(ring)?)?,
            ExprAst::Pow(a, e) => a.to_polynomial(ring)?.pow(*e)?,
        })
    }
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &PolyRing) -> Result<Polynomial> {
    parse_expr(text)?.to_polynomial(ring)
}

/// Parses a `;`-separated list of polynomials.
pub fn parse_polynomial_list(text: &str, ring: &PolyRing) -> Result<Vec<Polynomial>> {
    split_list(text, 0)?.into_iter().map(|e| e.to_polynomial(ring)).collect()
}

fn split_list(text: &str, base: usize) -> Result<Vec<ExprAst>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(';') {
        out.push(parse_expr_at(piece, base + offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// The ring declared by a job: `ring QQ[x,y,z]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub field: FieldSpec,
    pub variables: Vec<String>,
}

impl RingDecl {
    pub fn build(&self, field_override: Option<FieldSpec>) -> Result<PolyRing> {
        PolyRing::grevlex(field_override.unwrap_or(self.field), self.variables.clone())
    }
}

/// Right-hand side of an `ideal` or `map` statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definition {
    /// `@name` or `@name(arg)`.
    Catalog {
        name: String,
        arg: Option<u32>,
    },
    Exprs(Vec<ExprAst>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TaskKind {
    Check { ideal: String, m: u32, r: u32 },
    Roundtrip { ideal: String, map: String, m: u32, r: u32 },
    Scan { ideal: String, smax: u32, tmax: u32 },
    Invariants { ideal: String },
    Lemma3 { ideal: String, map: String, m: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub line: usize,
    pub kind: TaskKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedDefinition {
    pub name: String,
    pub line: usize,
    pub definition: Definition,
}

/// A validated job file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobFile {
    pub ring: RingDecl,
    pub ideals: Vec<NamedDefinition>,
    pub maps: Vec<NamedDefinition>,
    pub tasks: Vec<Task>,
}

impl JobFile {
    pub fn ideal(&self, name: &str) -> Option<&NamedDefinition> {
        self.ideals.iter().find(|d| d.name == name)
    }

    pub fn map(&self, name: &str) -> Option<&NamedDefinition> {
        self.maps.iter().find(|d| d.name == name)
    }
}

const IDEAL_CATALOG: &[(&str, bool)] = &[("cehh", false), ("fermat", true), ("char3", false)];
const MAP_CATALOG: &[(&str, bool)] = &[("ex1", false), ("ex2", false), ("ex4", false), ("ex4b", false)];

fn parse_ring_decl(rest: &str, col: usize) -> Result<RingDecl> {
    let open = rest.find('[').ok_or_else(|| Error::parse(col + rest.len(), &["'['"]))?;
    let field: FieldSpec = rest[..open].trim().parse().map_err(|e| match e {
        Error::Parse { expected, .. } => Error::Parse { pos: col, expected },
        other => other,
    })?;
    let inner = rest[open + 1..]
        .trim_end()
        .strip_suffix(']')
        .ok_or_else(|| Error::parse(col + rest.len(), &["']'"]))?;
    let variables: Vec<String> = inner.split(',').map(|v| v.trim().to_string()).collect();
    // validates names
    PolyRing::grevlex(field, variables.clone())?;
    Ok(RingDecl { field, variables })
}

fn parse_definition(body: &str, col: usize, catalog: &[(&str, bool)]) -> Result<Definition> {
    let trimmed = body.trim();
    if let Some(rest) = trimmed.strip_prefix('@') {
        let (name, arg) = match rest.find('(') {
            Some(open) => {
                let inner = rest[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::parse(col + body.len(), &["')'"]))?;
                let arg: u32 = inner.trim().parse().map_err(|_| Error::parse(col, &["integer argument"]))?;
                (rest[..open].trim(), Some(arg))
            }
            None => (rest, None),
        };
        let Some(&(_, takes_arg)) = catalog.iter().find(|(n, _)| *n == name) else {
            return Err(Error::UnknownName(format!("@{name}")));
        };
        if takes_arg != arg.is_some() {
            return Err(Error::parse(col, &[if takes_arg { "@name(arg)" } else { "@name" }]));
        }
        return Ok(Definition::Catalog { name: name.to_string(), arg });
    }
    Ok(Definition::Exprs(split_list(body, col)?))
}

fn parse_count(word: Option<(usize, &str)>, end: usize) -> Result<u32> {
    let (col, w) = word.ok_or_else(|| Error::parse(end, &["positive integer"]))?;
    let v: u32 = w.parse().map_err(|_| Error::parse(col, &["positive integer"]))?;
    if v == 0 {
        return Err(Error::InvalidExponent(0));
    }
    Ok(v)
}

/// Splits on whitespace, keeping byte offsets.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Parses and validates a job file.
pub fn parse_job(text: &str) -> Result<JobFile> {
    let mut ring: Option<RingDecl> = None;
    let mut ideals: Vec<NamedDefinition> = Vec::new();
    let mut maps: Vec<NamedDefinition> = Vec::new();
    let mut tasks = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        parse_statement(line, lineno, &mut ring, &mut ideals, &mut maps, &mut tasks)
            .map_err(|e| e.at_line(lineno))?;
    }
    let ring = ring.ok_or_else(|| Error::parse(0, &["`ring` declaration"]))?;
    Ok(JobFile { ring, ideals, maps, tasks })
}

fn parse_statement(
    line: &str,
    lineno: usize,
    ring: &mut Option<RingDecl>,
    ideals: &mut Vec<NamedDefinition>,
    maps: &mut Vec<NamedDefinition>,
    tasks: &mut Vec<Task>,
) -> Result<()> {
    let ws = words(line);
    let (kw_col, keyword) = ws[0];
    let after_kw = kw_col + keyword.len();
    let defined = |name: &str, ideals: &[NamedDefinition], maps: &[NamedDefinition]| {
        ideals.iter().chain(maps).any(|d| d.name == name)
    };
    let need_ideal = |name: &str| -> Result<String> {
        if ideals.iter().any(|d| d.name == name) {
            Ok(name.to_string())
        } else {
            Err(Error::UnknownName(name.to_string()))
        }
    };
    let need_map = |name: &str| -> Result<String> {
        if maps.iter().any(|d| d.name == name) {
            Ok(name.to_string())
        } else {
            Err(Error::UnknownName(name.to_string()))
        }
    };
    let name_at = |i: usize| -> Result<&str> {
        ws.get(i).map(|w| w.1).ok_or_else(|| Error::parse(line.len(), &["name"]))
    };

    match keyword {
        "ring" => {
            if ring.is_some() {
                return Err(Error::DuplicateName("ring".into()));
            }
            *ring = Some(parse_ring_decl(&line[after_kw..], after_kw)?);
        }
        "ideal" | "map" => {
            let decl = ring.as_ref().ok_or_else(|| Error::parse(kw_col, &["`ring` declaration first"]))?;
            let eq = line.find('=').ok_or_else(|| Error::parse(line.len(), &["'='"]))?;
            let name = line[after_kw..eq].trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::parse(after_kw, &["name"]));
            }
            if defined(name, ideals, maps) {
                return Err(Error::DuplicateName(name.to_string()));
            }
            let catalog = if keyword == "ideal" { IDEAL_CATALOG } else { MAP_CATALOG };
            let definition = parse_definition(&line[eq + 1..], eq + 1, catalog)?;
            if let Definition::Exprs(exprs) = &definition {
                for e in exprs {
                    for (v, pos) in e.variables() {
                        if !decl.variables.iter().any(|d| d == v) {
                            return Err(Error::UnknownVariable { name: v.to_string(), pos });
                        }
                    }
                }
                if keyword == "map" && exprs.len() != decl.variables.len() {
                    return Err(Error::ArityMismatch { expected: decl.variables.len(), found: exprs.len() });
                }
            }
            let nd = NamedDefinition { name: name.to_string(), line: lineno, definition };
            if keyword == "ideal" {
                ideals.push(nd);
            } else {
                maps.push(nd);
            }
        }
        "check" | "roundtrip" | "scan" | "invariants" | "lemma3" => {
            let arity = match keyword {
                "check" | "scan" => 4,
                "roundtrip" => 5,
                "lemma3" => 4,
                _ => 2,
            };
            if ws.len() > arity {
                return Err(Error::parse(ws[arity].0, &["end of line"]));
            }
            let end = line.trim_end().len();
            let kind = match keyword {
                "check" => TaskKind::Check {
                    ideal: need_ideal(name_at(1)?)?,
                    m: parse_count(ws.get(2).copied(), end)?,
                    r: parse_count(ws.get(3).copied(), end)?,
                },
                "roundtrip" => TaskKind::Roundtrip {
                    ideal: need_ideal(name_at(1)?)?,
                    map: need_map(name_at(2)?)?,
                    m: parse_count(ws.get(3).copied(), end)?,
                    r: parse_count(ws.get(4).copied(), end)?,
                },
                "scan" => TaskKind::Scan {
                    ideal: need_ideal(name_at(1)?)?,
                    smax: parse_count(ws.get(2).copied(), end)?,
                    tmax: parse_count(ws.get(3).copied(), end)?,
                },
                "lemma3" => TaskKind::Lemma3 {
                    ideal: need_ideal(name_at(1)?)?,
                    map: need_map(name_at(2)?)?,
                    m: parse_count(ws.get(3).copied(), end)?,
                },
                _ => TaskKind::Invariants { ideal: need_ideal(name_at(1)?)? },
            };
            tasks.push(Task { line: lineno, kind });
        }
        _ => {
            return Err(Error::parse(
                kw_col,
                &["ring", "ideal", "map", "check", "roundtrip", "scan", "invariants", "lemma3"],
            ))
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::grevlex(FieldSpec::rationals(), ["x", "y", "z"]).unwrap()
    }

    #[test]
    fn fermat_generator() {
        let r = ring();
        let p = parse_polynomial("x*(y^3 - z^3)", &r).unwrap();
        assert_eq!(p.to_string(), "x*y^3 - x*z^3");
    }

    #[test]
    fn cehh_witness() {
        let r = ring();
        let p = parse_polynomial("x^2*y^2*z^2", &r).unwrap();
        assert_eq!(p.to_string(), "x^2*y^2*z^2");
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn unary_minus_binds_after_power() {
        let r = ring();
        assert_eq!(parse_polynomial("-x^2", &r).unwrap().to_string(), "-x^2");
        assert_eq!(parse_polynomial("(-x)^3 + x^3", &r).unwrap().to_string(), "0");
        assert_eq!(parse_polynomial("2 - -y", &r).unwrap().to_string(), "y + 2");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        assert_eq!(
            parse_polynomial("x + ", &r).unwrap_err(),
            Error::parse(4, &["variable", "integer", "'('"])
        );
        assert!(matches!(
            parse_polynomial("x + w", &r),
            Err(Error::UnknownVariable { ref name, pos: 4 }) if name == "w"
        ));
        assert!(matches!(parse_polynomial("x^-1", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_polynomial("2x", &r), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_polynomial("x^70000", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("(x", &r), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn literals_reduce_into_prime_field() {
        let r = PolyRing::grevlex(FieldSpec::prime(7).unwrap(), ["x", "y"]).unwrap();
        assert_eq!(parse_polynomial("8*x + 14", &r).unwrap().to_string(), "x");
        assert_eq!(parse_polynomial("1/2*x", &r).unwrap().to_string(), "-3*x");
        assert!(parse_polynomial("1/7*x", &r).is_err());
    }

    #[test]
    fn rational_coefficients_roundtrip() {
        let r = ring();
        let p = parse_polynomial("3/4*x^2 - 1/3*y*z + 5", &r).unwrap();
        assert_eq!(p.to_string(), "3/4*x^2 - 1/3*y*z + 5");
    }

    #[test]
    fn comments_and_whitespace() {
        let r = ring();
        let p = parse_polynomial("  x *\ty # trailing\n", &r).unwrap();
        assert_eq!(p.to_string(), "x*y");
    }

    #[test]
    fn smallest_job() {
        let job = parse_job("ring QQ[x,y,z]\nideal I = x*y; y*z\ncheck I 3 2\n").unwrap();
        assert_eq!(job.ring.variables, ["x", "y", "z"]);
        assert_eq!(job.ideals.len(), 1);
        assert_eq!(
            job.tasks,
            vec![Task { line: 3, kind: TaskKind::Check { ideal: "I".into(), m: 3, r: 2 } }]
        );
    }

    #[test]
    fn undefined_ideal() {
        let err = parse_job("ring QQ[x,y,z]\ncheck J 3 2\n").unwrap_err();
        assert_eq!(err.root(), &Error::UnknownName("J".into()));
        assert!(matches!(err, Error::AtLine { line: 2, .. }));
    }

    #[test]
    fn duplicate_and_malformed() {
        let err = parse_job("ring QQ[x,y]\nideal I = x\nmap I = x; y\n").unwrap_err();
        assert_eq!(err.root(), &Error::DuplicateName("I".into()));
        assert!(matches!(parse_job("ring QQ(x,y)\n").unwrap_err().root(), Error::Parse { .. }));
        assert!(matches!(parse_job("ring GF(8)[x,y]\n").unwrap_err().root(), Error::InvalidModulus(8)));
        assert!(parse_job("ideal I = x\n").is_err());
        assert!(matches!(
            parse_job("ring QQ[x,y]\nring QQ[x,y]\n").unwrap_err().root(),
            Error::DuplicateName(_)
        ));
        assert!(matches!(
            parse_job("ring QQ[x,y]\nideal I = x + q\n").unwrap_err().root(),
            Error::UnknownVariable { pos: 14, .. }
        ));
        assert!(matches!(
            parse_job("ring QQ[x,y]\nmap f = x\n").unwrap_err().root(),
            Error::ArityMismatch { .. }
        ));
        assert!(matches!(
            parse_job("ring QQ[x,y]\nideal I = @nope\n").unwrap_err().root(),
            Error::UnknownName(_)
        ));
        assert!(matches!(
            parse_job("ring QQ[x,y]\nideal I = x\ncheck I 0 2\n").unwrap_err().root(),
            Error::InvalidExponent(0)
        ));
    }

    #[test]
    fn example1_job() {
        let text = "\
# fibered Fermat configuration
ring QQ[x,y,z]
ideal I = x*(y^3 - z^3); y*(x^3 - z^3); z*(x^3 - y^3)
map phi = x^2 + y^2; y^2 + z^2; x^2 + z^2
roundtrip I phi 3 2
";
        let job = parse_job(text).unwrap();
        assert_eq!(job.ideals.len(), 1);
        assert_eq!(job.maps.len(), 1);
        assert_eq!(job.tasks.len(), 1);
        let Definition::Exprs(images) = &job.map("phi").unwrap().definition else {
            panic!("expected expressions")
        };
        let r = job.ring.build(None).unwrap();
        assert_eq!(images[0].to_polynomial(&r).unwrap().to_string(), "x^2 + y^2");
    }

    #[test]
    fn catalog_references() {
        let job =
            parse_job("ring GF(9001)[x,y,z]\nideal I = @fermat(4)\nmap p = @ex1\nscan I 3 2\n").unwrap();
        assert_eq!(
            job.ideal("I").unwrap().definition,
            Definition::Catalog { name: "fermat".into(), arg: Some(4) }
        );
        assert!(parse_job("ring QQ[x,y,z]\nideal I = @fermat\n").is_err());
    }

    proptest! {
        #[test]
        fn never_panics_on_arbitrary_input(s in "\\PC{0,40}") {
            let _ = parse_polynomial(&s, &ring());
            let _ = parse_job(&s);
        }

        #[test]
        fn never_panics_on_bytes(bytes in proptest::collection::vec(any::<u8>(), 0..60)) {
            let s = String::from_utf8_lossy(&bytes);
            let _ = parse_polynomial(&s, &ring());
            let _ = parse_job(&format!("ring QQ[x,y,z]\nideal I = {s}\ncheck I 2 1"));
        }

        #[test]
        fn parse_print_roundtrip(coeffs in proptest::collection::vec(-20i64..20, 1..8),
                                 exps in proptest::collection::vec((0u32..4, 0u32..4, 0u32..4), 8)) {
            let r = ring();
            let mut p = Polynomial::zero(&r);
            for (c, (a, b, d)) in coeffs.iter().zip(exps) {
                let m = crate::polyring::Monomial::new(&[a, b, d]).unwrap();
                p = p.add(&Polynomial::monomial(&r, m, r.field().from_i64(*c))).unwrap();
            }
            let q = parse_polynomial(&p.to_string(), &r).unwrap();
            prop_assert_eq!(q, p);
        }
    }
}
