//! Declarative workspace files: named rings, modules, homomorphisms and a
//! task list, in a block format built for diffable golden files.
//!
//! ```text
//! ring R { char=2 vars=[x:1, y:1] relations=["x^2", "x*y"] truncate=20 }
//! module N over R { gens=[0] relations_matrix=[["x"]] }
//! hom f from R to R { frobenius=1 }
//! defaults { nmax=10 guard=2 }
//! task betti_over { hom=f module=N }
//! ```
//!
//! `#` starts a comment running to the end of the line. A bare variable
//! name in `vars` means degree 1. Errors carry the line and column of the
//! offending token.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::module::GradedModule;
use crate::phi::LocalHom;
use crate::ring::{GradedRing, RingElement};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Defaults {
    pub nmax: usize,
    pub guard: i64,
}

impl Default for Defaults {
    fn default() -> Self {
        Defaults { nmax: 10, guard: 2 }
    }
}

/// One setting value. Lists nest, so a matrix is a list of lists.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    /// Bare word: either a reference to a named object or a keyword.
    Name(String),
    Str(String),
    /// `x:1` inside a list; used for variable declarations.
    Pair(String, i64),
    List(Vec<Value>),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Int(_) => "integer",
            Value::Name(_) => "name",
            Value::Str(_) => "string",
            Value::Pair(..) => "name:degree pair",
            Value::List(_) => "list",
        }
    }
}

/// A task as written: kind, stable label, raw arguments. The task layer
/// resolves references and checks the per-kind schema.
#[derive(Debug, Clone)]
pub struct TaskSpec {
    pub kind: String,
    pub label: String,
    pub line: usize,
    pub args: BTreeMap<String, Value>,
}

impl TaskSpec {
    pub fn arg_int(&self, key: &str) -> Option<i64> {
        match self.args.get(key) {
            Some(Value::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn arg_name(&self, key: &str) -> Option<&str> {
        match self.args.get(key) {
            Some(Value::Name(s)) | Some(Value::Str(s)) => Some(s),
            _ => None,
        }
    }

    pub fn arg_strings(&self, key: &str) -> Option<Vec<String>> {
        match self.args.get(key) {
            Some(Value::List(items)) => {
                let mut out = Vec::with_capacity(items.len());
                for it in items {
                    match it {
                        Value::Str(s) | Value::Name(s) => out.push(s.clone()),
                        _ => return None,
                    }
                }
                Some(out)
            }
            _ => None,
        }
    }
}

/// Parsed and validated workspace: every named object is built, every
/// task reference resolves. Declaration order is preserved.
pub struct Workspace {
    pub rings: Vec<(String, Arc<GradedRing>)>,
    pub modules: Vec<(String, GradedModule)>,
    pub homs: Vec<(String, LocalHom)>,
    pub tasks: Vec<TaskSpec>,
    pub defaults: Defaults,
}

impl std::fmt::Debug for Workspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Workspace")
            .field("rings", &self.rings.iter().map(|(n, _)| n).collect::<Vec<_>>())
            .field("modules", &self.modules.iter().map(|(n, _)| n).collect::<Vec<_>>())
            .field("homs", &self.homs.iter().map(|(n, _)| n).collect::<Vec<_>>())
            .field("tasks", &self.tasks.iter().map(|t| &t.label).collect::<Vec<_>>())
            .finish()
    }
}

impl Workspace {
    pub fn ring(&self, name: &str) -> Option<&Arc<GradedRing>> {
        self.rings.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn module(&self, name: &str) -> Option<&GradedModule> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn hom(&self, name: &str) -> Option<&LocalHom> {
        self.homs.iter().find(|(n, _)| n == name).map(|(_, h)| h)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Eq,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(v) => write!(f, "`{v}`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Eq => write!(f, "`=`"),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    col: usize,
}

fn bump(c: char, line: &mut usize, col: &mut usize) {
    if c == '\n' {
        *line += 1;
        *col = 1;
    } else {
        *col += 1;
    }
}

fn lex(text: &str) -> Result<Vec<Lexed>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        match ch {
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            '#' => {
                for c in chars.by_ref() {
                    bump(c, &mut line, &mut col);
                    if c == '\n' {
                        break;
                    }
                }
            }
            '{' | '}' | '[' | ']' | ',' | ':' | '=' => {
                chars.next();
                bump(ch, &mut line, &mut col);
                let tok = match ch {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    ':' => Tok::Colon,
                    _ => Tok::Eq,
                };
                out.push(Lexed { tok, line: tline, col: tcol });
            }
            '"' => {
                chars.next();
                bump('"', &mut line, &mut col);
                let mut s = String::new();
                let mut closed = false;
                for c in chars.by_ref() {
                    bump(c, &mut line, &mut col);
                    if c == '"' {
                        closed = true;
                        break;
                    }
                    if c == '\n' {
                        break;
                    }
                    s.push(c);
                }
                if !closed {
                    return Err(Error::Parse {
                        line: tline,
                        col: tcol,
                        msg: "unterminated string".into(),
                    });
                }
                out.push(Lexed { tok: Tok::Str(s), line: tline, col: tcol });
            }
            c if c.is_ascii_digit() || c == '-' => {
                let mut s = String::new();
                s.push(c);
                chars.next();
                bump(c, &mut line, &mut col);
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                        bump(d, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let v: i64 = s.parse().map_err(|_| Error::Parse {
                    line: tline,
                    col: tcol,
                    msg: format!("bad integer `{s}`"),
                })?;
                out.push(Lexed { tok: Tok::Int(v), line: tline, col: tcol });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                        bump(d, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                out.push(Lexed { tok: Tok::Ident(s), line: tline, col: tcol });
            }
            c => {
                return Err(Error::Parse {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
}

impl Parser {
    fn err_here(&self, msg: String) -> Error {
        let (line, col) = self
            .toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .or_else(|| self.toks.last().map(|t| (t.line, t.col + 1)))
            .unwrap_or((1, 1));
        Error::Parse { line, col, msg }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.line).unwrap_or(1)
    }

    fn next(&mut self, what: &str) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .map(|t| t.tok.clone())
            .ok_or_else(|| self.err_here(format!("expected {what}, found end of input")))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let got = self.next(&format!("{tok}"))?;
        if got != tok {
            self.pos -= 1;
            return Err(self.err_here(format!("expected {tok}, found {got}")));
        }
        Ok(())
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.next(what)? {
            Tok::Ident(s) => Ok(s),
            got => {
                self.pos -= 1;
                Err(self.err_here(format!("expected {what}, found {got}")))
            }
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let got = self.ident(&format!("`{word}`"))?;
        if got != word {
            self.pos -= 1;
            return Err(self.err_here(format!("expected `{word}`, found `{got}`")));
        }
        Ok(())
    }

    /// Scalar or list; lists nest and tolerate being empty.
    fn value(&mut self) -> Result<Value> {
        match self.next("a value")? {
            Tok::Int(v) => Ok(Value::Int(v)),
            Tok::Str(s) => Ok(Value::Str(s)),
            Tok::Ident(s) => {
                if self.peek() == Some(&Tok::Colon) {
                    self.pos += 1;
                    match self.next("a degree")? {
                        Tok::Int(d) => Ok(Value::Pair(s, d)),
                        got => {
                            self.pos -= 1;
                            Err(self.err_here(format!("expected a degree after `{s}:`, found {got}")))
                        }
                    }
                } else {
                    Ok(Value::Name(s))
                }
            }
            Tok::LBracket => {
                let mut items = Vec::new();
                if self.peek() == Some(&Tok::RBracket) {
                    self.pos += 1;
                    return Ok(Value::List(items));
                }
                loop {
                    items.push(self.value()?);
                    match self.next("`,` or `]`")? {
                        Tok::Comma => continue,
                        Tok::RBracket => break,
                        got => {
                            self.pos -= 1;
                            return Err(self.err_here(format!("expected `,` or `]`, found {got}")));
                        }
                    }
                }
                Ok(Value::List(items))
            }
            got => {
                self.pos -= 1;
                Err(self.err_here(format!("expected a value, found {got}")))
            }
        }
    }

    /// `{ key=value ... }` with duplicate keys rejected.
    fn block_body(&mut self) -> Result<Vec<(String, usize, Value)>> {
        self.expect(Tok::LBrace)?;
        let mut out: Vec<(String, usize, Value)> = Vec::new();
        loop {
            if self.peek() == Some(&Tok::RBrace) {
                self.pos += 1;
                return Ok(out);
            }
            let line = self.line();
            let key = self.ident("a setting name or `}`")?;
            if out.iter().any(|(k, _, _)| *k == key) {
                return Err(Error::Parse {
                    line,
                    col: 1,
                    msg: format!("setting `{key}` appears twice in one block"),
                });
            }
            self.expect(Tok::Eq)?;
            let val = self.value()?;
            out.push((key, line, val));
        }
    }
}

type Body = [(String, usize, Value)];

fn duplicate(kind: &str, name: &str, line: usize) -> Error {
    Error::Parse { line, col: 1, msg: format!("{kind} `{name}` is defined twice") }
}

fn unknown(name: &str, line: usize) -> Error {
    Error::UnknownReference { name: name.to_string(), line }
}

fn bad(line: usize, msg: String) -> Error {
    Error::Parse { line, col: 1, msg }
}

fn take<'a>(body: &'a Body, key: &str) -> Option<&'a Value> {
    body.iter().find(|(k, _, _)| k == key).map(|(_, _, v)| v)
}

fn need_int(body: &Body, key: &str, ctx: &str, line: usize) -> Result<i64> {
    match take(body, key) {
        Some(Value::Int(v)) => Ok(*v),
        Some(v) => Err(bad(line, format!("{ctx}: `{key}` must be an integer, found {}", v.type_name()))),
        None => Err(bad(line, format!("{ctx}: missing `{key}`"))),
    }
}

fn string_list(v: &Value, key: &str, ctx: &str, line: usize) -> Result<Vec<String>> {
    let Value::List(items) = v else {
        return Err(bad(line, format!("{ctx}: `{key}` must be a list, found {}", v.type_name())));
    };
    items
        .iter()
        .map(|it| match it {
            Value::Str(s) => Ok(s.clone()),
            other => Err(bad(
                line,
                format!("{ctx}: `{key}` entries must be quoted strings, found {}", other.type_name()),
            )),
        })
        .collect()
}

fn int_list(v: &Value, key: &str, ctx: &str, line: usize) -> Result<Vec<i64>> {
    let Value::List(items) = v else {
        return Err(bad(line, format!("{ctx}: `{key}` must be a list, found {}", v.type_name())));
    };
    items
        .iter()
        .map(|it| match it {
            Value::Int(d) => Ok(*d),
            other => Err(bad(
                line,
                format!("{ctx}: `{key}` entries must be integers, found {}", other.type_name()),
            )),
        })
        .collect()
}

fn reject_unknown_keys(body: &Body, allowed: &[&str], ctx: &str) -> Result<()> {
    for (k, line, _) in body {
        if !allowed.contains(&k.as_str()) {
            return Err(bad(
                *line,
                format!("{ctx}: unknown setting `{k}` (expected one of {})", allowed.join(", ")),
            ));
        }
    }
    Ok(())
}

fn build_ring(body: &Body, line: usize) -> Result<Arc<GradedRing>> {
    reject_unknown_keys(body, &["char", "vars", "relations", "truncate"], "ring")?;
    let charp = need_int(body, "char", "ring", line)?;
    if charp < 2 {
        return Err(bad(line, format!("ring: char must be a prime, found {charp}")));
    }
    let truncate = need_int(body, "truncate", "ring", line)?;
    let vars = match take(body, "vars") {
        Some(Value::List(items)) => items
            .iter()
            .map(|it| match it {
                Value::Pair(name, d) if *d >= 1 && *d <= u32::MAX as i64 => {
                    Ok((name.clone(), *d as u32))
                }
                Value::Pair(name, d) => {
                    Err(bad(line, format!("ring: variable `{name}` has bad degree {d}")))
                }
                Value::Name(name) => Ok((name.clone(), 1)),
                other => Err(bad(
                    line,
                    format!("ring: `vars` entries look like `x:1`, found {}", other.type_name()),
                )),
            })
            .collect::<Result<Vec<_>>>()?,
        Some(v) => return Err(bad(line, format!("ring: `vars` must be a list, found {}", v.type_name()))),
        None => return Err(bad(line, "ring: missing `vars`".into())),
    };
    let rels = match take(body, "relations") {
        Some(v) => string_list(v, "relations", "ring", line)?,
        None => Vec::new(),
    };
    GradedRing::new(FieldSpec::new(charp as u64)?, vars, &rels, truncate)
}

fn build_module(ring: Arc<GradedRing>, body: &Body, line: usize) -> Result<GradedModule> {
    reject_unknown_keys(body, &["gens", "relations_matrix"], "module")?;
    let gens = match take(body, "gens") {
        Some(v) => int_list(v, "gens", "module", line)?,
        None => return Err(bad(line, "module: missing `gens`".into())),
    };
    let rows: Vec<Vec<RingElement>> = match take(body, "relations_matrix") {
        None => Vec::new(),
        Some(Value::List(rows)) => rows
            .iter()
            .map(|row| {
                string_list(row, "relations_matrix", "module", line)?
                    .iter()
                    .map(|s| ring.parse_element(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?,
        Some(v) => {
            return Err(bad(
                line,
                format!("module: `relations_matrix` must be a list of rows, found {}", v.type_name()),
            ))
        }
    };
    GradedModule::from_presentation(ring, gens, &rows)
}

fn build_hom(
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    same_name: bool,
    body: &Body,
    line: usize,
) -> Result<LocalHom> {
    reject_unknown_keys(body, &["images", "scale", "frobenius"], "hom")?;
    if let Some(v) = take(body, "frobenius") {
        let Value::Int(i) = v else {
            return Err(bad(line, "hom: `frobenius` must be an integer power".into()));
        };
        if take(body, "images").is_some() || take(body, "scale").is_some() {
            return Err(bad(line, "hom: `frobenius` excludes `images` and `scale`".into()));
        }
        if !same_name {
            return Err(bad(line, "hom: `frobenius` needs the same ring on both sides".into()));
        }
        if *i < 1 || *i > u32::MAX as i64 {
            return Err(bad(line, format!("hom: frobenius power must be at least 1, found {i}")));
        }
        return LocalHom::frobenius(target, *i as u32);
    }
    let images: Vec<RingElement> = match take(body, "images") {
        Some(v) => string_list(v, "images", "hom", line)?
            .iter()
            .map(|s| target.parse_element(s))
            .collect::<Result<_>>()?,
        None => return Err(bad(line, "hom: missing `images` (or `frobenius`)".into())),
    };
    let scale = match take(body, "scale") {
        Some(Value::Int(v)) => *v,
        None => 1,
        Some(v) => return Err(bad(line, format!("hom: `scale` must be an integer, found {}", v.type_name()))),
    };
    LocalHom::new(source, target, images, scale)
}

pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let mut ws = Workspace {
        rings: Vec::new(),
        modules: Vec::new(),
        homs: Vec::new(),
        tasks: Vec::new(),
        defaults: Defaults::default(),
    };
    let mut kind_counts: BTreeMap<String, usize> = BTreeMap::new();

    while p.peek().is_some() {
        let line = p.line();
        let word = p.ident("`ring`, `module`, `hom`, `defaults` or `task`")?;
        match word.as_str() {
            "ring" => {
                let name = p.ident("a ring name")?;
                if ws.ring(&name).is_some() {
                    return Err(duplicate("ring", &name, line));
                }
                let body = p.block_body()?;
                ws.rings.push((name, build_ring(&body, line)?));
            }
            "module" => {
                let name = p.ident("a module name")?;
                if ws.module(&name).is_some() {
                    return Err(duplicate("module", &name, line));
                }
                p.keyword("over")?;
                let rname = p.ident("a ring name")?;
                let ring = ws.ring(&rname).ok_or_else(|| unknown(&rname, line))?.clone();
                let body = p.block_body()?;
                ws.modules.push((name, build_module(ring, &body, line)?));
            }
            "hom" => {
                let name = p.ident("a homomorphism name")?;
                if ws.hom(&name).is_some() {
                    return Err(duplicate("hom", &name, line));
                }
                p.keyword("from")?;
                let rname = p.ident("a source ring name")?;
                p.keyword("to")?;
                let sname = p.ident("a target ring name")?;
                let source = ws.ring(&rname).ok_or_else(|| unknown(&rname, line))?.clone();
                let target = ws.ring(&sname).ok_or_else(|| unknown(&sname, line))?.clone();
                let body = p.block_body()?;
                ws.homs.push((name, build_hom(source, target, rname == sname, &body, line)?));
            }
            "defaults" => {
                let body = p.block_body()?;
                reject_unknown_keys(&body, &["nmax", "guard"], "defaults")?;
                if take(&body, "nmax").is_some() {
                    let v = need_int(&body, "nmax", "defaults", line)?;
                    if v < 0 {
                        return Err(bad(line, format!("defaults: nmax must be non-negative, found {v}")));
                    }
                    ws.defaults.nmax = v as usize;
                }
                if take(&body, "guard").is_some() {
                    ws.defaults.guard = need_int(&body, "guard", "defaults", line)?;
                }
            }
            "task" => {
                let kind = p.ident("a task kind")?;
                let tline = line;
                let body = p.block_body()?;
                let n = kind_counts.entry(kind.clone()).or_insert(0);
                *n += 1;
                let label = if *n == 1 { kind.clone() } else { format!("{kind}.{n}") };
                let mut args = BTreeMap::new();
                for (k, _, v) in body {
                    args.insert(k, v);
                }
                ws.tasks.push(TaskSpec { kind, label, line: tline, args });
            }
            other => {
                p.pos -= 1;
                return Err(p.err_here(format!(
                    "expected `ring`, `module`, `hom`, `defaults` or `task`, found `{other}`"
                )));
            }
        }
    }
    crate::tasks::validate_tasks(&ws)?;
    Ok(ws)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file_defines_ring_and_task() {
        let ws = parse_workspace(
            "ring R { char=2 vars=[x:1] relations=[\"x^2\"] truncate=8 }\n\
             task hilbert { ring=R }\n",
        )
        .unwrap();
        assert_eq!(ws.rings.len(), 1);
        assert_eq!(ws.tasks.len(), 1);
        assert_eq!(ws.tasks[0].kind, "hilbert");
        assert_eq!(ws.ring("R").unwrap().edim(), 1);
    }

    #[test]
    fn full_object_zoo_parses() {
        let ws = parse_workspace(
            "# a comment\n\
             ring R { char=2 vars=[x, y:1] relations=[\"x^2\", \"y^2\"] truncate=8 }\n\
             module N over R { gens=[0, 1] relations_matrix=[[\"x\", \"0\"], [\"0\", \"y\"]] }\n\
             hom f from R to R { frobenius=1 }\n\
             hom g from R to R { images=[\"x\", \"y\"] scale=1 }\n\
             defaults { nmax=6 guard=3 }\n\
             task betti_over { hom=f module=N }\n\
             task betti_over { hom=g module=N nmax=4 }\n",
        )
        .unwrap();
        assert_eq!(ws.defaults, Defaults { nmax: 6, guard: 3 });
        assert_eq!(ws.tasks[0].label, "betti_over");
        assert_eq!(ws.tasks[1].label, "betti_over.2");
        assert_eq!(ws.tasks[1].arg_int("nmax"), Some(4));
        assert!(ws.hom("f").unwrap().is_endomorphism());
    }

    #[test]
    fn undefined_reference_is_an_error() {
        let err = parse_workspace(
            "ring R { char=2 vars=[x] truncate=6 }\n\
             module N over missing { gens=[0] }\n",
        )
        .unwrap_err();
        match err {
            Error::UnknownReference { name, line } => {
                assert_eq!(name, "missing");
                assert_eq!(line, 2);
            }
            other => panic!("wrong error: {other}"),
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_workspace("ring R { char=2 vars=[x truncate=6 }").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col > 20);
            }
            other => panic!("wrong error: {other}"),
        }
        let err = parse_workspace("widget W { }").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, col: 1, .. }));
    }

    #[test]
    fn bad_relation_text_fails_at_parse_time() {
        let err = parse_workspace("ring R { char=2 vars=[x] relations=[\"z^2\"] truncate=6 }");
        assert!(err.is_err());
    }
}
