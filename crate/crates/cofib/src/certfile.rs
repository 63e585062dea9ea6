//! Certificate files.
//!
//! A file is one s-expression. Posets are listed once in a table and
//! referred to by name; maps are written `P1 P4 [s0->t3 s1->t0]` with
//! positional indices. The certified object also carries its canonical
//! key so a certificate can be matched against any relabeling of it.
//!
//! ```text
//! (cofibrant
//!   (posets (P0 1) (P1 3 0<2 1<2))
//!   (object P1 <key>)
//!   (via terminal)
//!   (AX_SD_VERTEX (conclusion P0 P1 [s0->t0]) (n 1) (k 0)))
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::certificate::{CofibrantCertificate, CofibrationCertificate, Leg, Rule, Via};
use crate::colimit::Span;
use crate::error::{Error, Result};
use crate::poset::{MonotoneMap, Poset};

/// A parsed certificate file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateFile {
    Cofibrant { cert: CofibrantCertificate, key: Option<CanonicalForm> },
    Cofibration(CofibrationCertificate),
}

struct Table {
    posets: Vec<Arc<Poset>>,
    by_shape: HashMap<(usize, usize), Vec<usize>>,
}

impl Table {
    fn new() -> Table {
        Table { posets: Vec::new(), by_shape: HashMap::new() }
    }

    fn name(&mut self, p: &Arc<Poset>) -> String {
        let shape = (p.len(), p.strict_relation_count());
        let bucket = self.by_shape.entry(shape).or_default();
        if let Some(&i) = bucket.iter().find(|&&i| *self.posets[i] == **p) {
            return format!("P{i}");
        }
        let i = self.posets.len();
        bucket.push(i);
        self.posets.push(p.clone());
        format!("P{i}")
    }

    fn map(&mut self, m: &MonotoneMap) -> String {
        let s = self.name(&m.source);
        let t = self.name(&m.target);
        let entries: Vec<String> = m.image.iter().enumerate().map(|(i, y)| format!("s{i}->t{y}")).collect();
        format!("{s} {t} [{}]", entries.join(" "))
    }
}

fn write_node(c: &CofibrationCertificate, t: &mut Table, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let _ = write!(out, "{pad}({} (conclusion {})", c.rule.name(), t.map(&c.conclusion));
    match &c.rule {
        Rule::SdVertex { n, k } => {
            let _ = write!(out, " (n {n}) (k {k})");
        }
        Rule::Sd2Mono { faces } => {
            let _ = write!(out, " (faces {})", t.map(faces));
        }
        Rule::SdMono { base } => {
            let _ = write!(out, " (base {})", t.map(base));
        }
        Rule::Pushout { span, certified } => {
            let side = if *certified == Leg::Left { "left" } else { "right" };
            let _ = write!(
                out,
                "\n{pad}  (certified {side}) (left {})\n{pad}  (right {})",
                t.map(&span.left),
                t.map(&span.right)
            );
        }
        Rule::Retract { top_in, top_out, bottom_in, bottom_out } => {
            for (k, m) in
                [("top-in", top_in), ("top-out", top_out), ("bottom-in", bottom_in), ("bottom-out", bottom_out)]
            {
                let _ = write!(out, "\n{pad}  ({k} {})", t.map(m));
            }
        }
        Rule::SeqCompose => {
            let _ = write!(out, " (stages {})", c.premises.len());
        }
        Rule::Iso | Rule::Compose | Rule::Coproduct => {}
    }
    for p in &c.premises {
        out.push('\n');
        write_node(p, t, depth + 1, out);
    }
    out.push(')');
}

fn poset_table(t: &Table) -> String {
    let mut s = String::from("  (posets");
    for (i, p) in t.posets.iter().enumerate() {
        let _ = write!(s, "\n    (P{i} {}", p.len());
        for (a, b) in p.covers() {
            let _ = write!(s, " {a}<{b}");
        }
        s.push(')');
    }
    s.push(')');
    s
}

pub fn serialize(c: &CofibrationCertificate) -> String {
    let mut t = Table::new();
    let mut body = String::new();
    write_node(c, &mut t, 1, &mut body);
    format!("(cofibration\n{}\n{body})\n", poset_table(&t))
}

pub fn serialize_cofibrant(c: &CofibrantCertificate) -> String {
    let mut t = Table::new();
    let obj = t.name(&c.object);
    let key = canonical_form(&c.object).map(|k| k.to_hex()).unwrap_or_else(|_| "-".into());
    let (via, proof) = match &c.via {
        Via::FromInitial(p) => ("initial", p),
        Via::FromTerminal(p) => ("terminal", p),
    };
    let mut body = String::new();
    write_node(proof, &mut t, 1, &mut body);
    format!("(cofibrant\n{}\n  (object {obj} {key})\n  (via {via})\n{body})\n", poset_table(&t))
}

#[derive(Debug)]
enum Sx {
    Atom(String, usize, usize),
    List(Vec<Sx>, usize, usize),
    Bracket(Vec<(String, usize, usize)>, usize, usize),
}

impl Sx {
    fn pos(&self) -> (usize, usize) {
        match self {
            Sx::Atom(_, l, c) | Sx::List(_, l, c) | Sx::Bracket(_, l, c) => (*l, *c),
        }
    }
}

fn perr(pos: (usize, usize), message: impl Into<String>) -> Error {
    Error::ParseError { line: pos.0, column: pos.1, message: message.into() }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Lexer<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == ';' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn atom(&mut self) -> String {
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() || "()[];".contains(c) {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    fn expr(&mut self) -> Result<Sx> {
        self.skip_ws();
        let pos = (self.line, self.col);
        match self.chars.peek().copied() {
            None => Err(perr(pos, "unexpected end of input")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.chars.peek() {
                        None => return Err(perr((self.line, self.col), "unclosed `(`")),
                        Some(')') => {
                            self.bump();
                            return Ok(Sx::List(items, pos.0, pos.1));
                        }
                        _ => items.push(self.expr()?),
                    }
                }
            }
            Some('[') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    let p = (self.line, self.col);
                    match self.chars.peek() {
                        None => return Err(perr(p, "unclosed `[`")),
                        Some(']') => {
                            self.bump();
                            return Ok(Sx::Bracket(items, pos.0, pos.1));
                        }
                        Some('(') | Some(')') | Some('[') => return Err(perr(p, "unexpected delimiter in map")),
                        _ => items.push((self.atom(), p.0, p.1)),
                    }
                }
            }
            Some(')') | Some(']') => Err(perr(pos, "unexpected closing delimiter")),
            Some(_) => Ok(Sx::Atom(self.atom(), pos.0, pos.1)),
        }
    }
}

fn read_sx(text: &str) -> Result<Sx> {
    let mut lx = Lexer { chars: text.chars().peekable(), line: 1, col: 1 };
    let e = lx.expr()?;
    lx.skip_ws();
    if lx.chars.peek().is_some() {
        return Err(perr((lx.line, lx.col), "trailing input after certificate"));
    }
    Ok(e)
}

struct Reader {
    posets: HashMap<String, Arc<Poset>>,
}

fn list(sx: &Sx) -> Result<&[Sx]> {
    match sx {
        Sx::List(v, _, _) => Ok(v),
        other => Err(perr(other.pos(), "expected a list")),
    }
}

fn atom(sx: &Sx) -> Result<&str> {
    match sx {
        Sx::Atom(s, _, _) => Ok(s),
        other => Err(perr(other.pos(), "expected an atom")),
    }
}

fn number(sx: &Sx) -> Result<usize> {
    atom(sx)?.parse().map_err(|_| perr(sx.pos(), "expected a number"))
}

fn head<'a>(sx: &'a Sx, want: &str) -> Result<&'a [Sx]> {
    let items = list(sx)?;
    match items.first() {
        Some(Sx::Atom(s, _, _)) if s == want => Ok(&items[1..]),
        _ => Err(perr(sx.pos(), format!("expected `({want} ...)`"))),
    }
}

fn read_poset(sx: &Sx) -> Result<(String, Poset)> {
    let items = list(sx)?;
    let (name, n) = match items {
        [name, n, ..] => (atom(name)?.to_string(), number(n)?),
        _ => return Err(perr(sx.pos(), "expected `(name size covers...)`")),
    };
    let mut covers = Vec::new();
    for c in &items[2..] {
        let s = atom(c)?;
        let (a, b) = s.split_once('<').ok_or_else(|| perr(c.pos(), "expected a<b"))?;
        let a = a.parse().map_err(|_| perr(c.pos(), "bad index"))?;
        let b = b.parse().map_err(|_| perr(c.pos(), "bad index"))?;
        covers.push((a, b));
    }
    let p = Poset::from_index_covers(n, &covers).map_err(|e| perr(sx.pos(), e.to_string()))?;
    Ok((name, p))
}

impl Reader {
    fn poset(&self, sx: &Sx) -> Result<Arc<Poset>> {
        let name = atom(sx)?;
        self.posets.get(name).cloned().ok_or_else(|| perr(sx.pos(), format!("unknown poset {name}")))
    }

    fn map(&self, items: &[Sx], at: (usize, usize)) -> Result<MonotoneMap> {
        let [s, t, Sx::Bracket(entries, _, _)] = items else {
            return Err(perr(at, "expected `SRC TGT [s0->tN ...]`"));
        };
        let source = self.poset(s)?;
        let target = self.poset(t)?;
        let mut image = Vec::with_capacity(entries.len());
        for (i, (e, l, c)) in entries.iter().enumerate() {
            let bad = || perr((*l, *c), format!("malformed map entry {e:?}"));
            let (lhs, rhs) = e.split_once("->").ok_or_else(bad)?;
            let si: usize = lhs.strip_prefix('s').and_then(|x| x.parse().ok()).ok_or_else(bad)?;
            let ti: usize = rhs.strip_prefix('t').and_then(|x| x.parse().ok()).ok_or_else(bad)?;
            if si != i {
                return Err(perr((*l, *c), format!("expected entry for s{i}")));
            }
            image.push(ti);
        }
        Ok(MonotoneMap::raw(source, target, image))
    }

    fn tagged_map(&self, sx: &Sx, tag: &str) -> Result<MonotoneMap> {
        self.map(head(sx, tag)?, sx.pos())
    }

    fn tagged_number(&self, sx: &Sx, tag: &str) -> Result<usize> {
        match head(sx, tag)? {
            [n] => number(n),
            _ => Err(perr(sx.pos(), format!("expected `({tag} N)`"))),
        }
    }

    fn node(&self, sx: &Sx) -> Result<CofibrationCertificate> {
        let items = list(sx)?;
        let rule_name = items.first().map(atom).transpose()?.ok_or_else(|| perr(sx.pos(), "empty node"))?;
        let concl = items.get(1).ok_or_else(|| perr(sx.pos(), "missing conclusion"))?;
        let conclusion = self.tagged_map(concl, "conclusion")?;
        let rest = &items[2..];
        let side_count = match rule_name {
            "AX_SD_VERTEX" => 2,
            "AX_SD2_MONO" | "AX_SD_MONO" | "R_SEQ_COMPOSE" => 1,
            "AX_ISO" | "R_COMPOSE" | "R_COPRODUCT" => 0,
            "R_PUSHOUT" => 3,
            "R_RETRACT" => 4,
            other => return Err(perr(sx.pos(), format!("unknown rule {other}"))),
        };
        if rest.len() < side_count {
            return Err(perr(sx.pos(), format!("{rule_name} is missing arguments")));
        }
        let (side, children) = rest.split_at(side_count);
        let rule = match rule_name {
            "AX_SD_VERTEX" => {
                Rule::SdVertex { n: self.tagged_number(&side[0], "n")?, k: self.tagged_number(&side[1], "k")? }
            }
            "AX_SD2_MONO" => Rule::Sd2Mono { faces: self.tagged_map(&side[0], "faces")? },
            "AX_SD_MONO" => Rule::SdMono { base: self.tagged_map(&side[0], "base")? },
            "AX_ISO" => Rule::Iso,
            "R_COMPOSE" => Rule::Compose,
            "R_COPRODUCT" => Rule::Coproduct,
            "R_SEQ_COMPOSE" => {
                let k = self.tagged_number(&side[0], "stages")?;
                if k != children.len() {
                    return Err(perr(side[0].pos(), format!("{k} stages declared, {} given", children.len())));
                }
                Rule::SeqCompose
            }
            "R_PUSHOUT" => {
                let certified = match head(&side[0], "certified")? {
                    [s] if atom(s)? == "left" => Leg::Left,
                    [s] if atom(s)? == "right" => Leg::Right,
                    _ => return Err(perr(side[0].pos(), "expected `(certified left|right)`")),
                };
                let left = self.tagged_map(&side[1], "left")?;
                let right = self.tagged_map(&side[2], "right")?;
                let span = Span { apex: left.source.clone(), left, right };
                Rule::Pushout { span, certified }
            }
            "R_RETRACT" => Rule::Retract {
                top_in: self.tagged_map(&side[0], "top-in")?,
                top_out: self.tagged_map(&side[1], "top-out")?,
                bottom_in: self.tagged_map(&side[2], "bottom-in")?,
                bottom_out: self.tagged_map(&side[3], "bottom-out")?,
            },
            _ => unreachable!(),
        };
        let premises = children.iter().map(|c| self.node(c)).collect::<Result<Vec<_>>>()?;
        Ok(CofibrationCertificate { conclusion, rule, premises })
    }
}

pub fn deserialize(text: &str) -> Result<CertificateFile> {
    let sx = read_sx(text)?;
    let items = list(&sx)?;
    let kind = items.first().map(atom).transpose()?.ok_or_else(|| perr(sx.pos(), "empty file"))?;
    let table = items.get(1).ok_or_else(|| perr(sx.pos(), "missing poset table"))?;
    let mut posets = HashMap::new();
    for p in head(table, "posets")? {
        let (name, poset) = read_poset(p)?;
        posets.insert(name, Arc::new(poset));
    }
    let reader = Reader { posets };
    match kind {
        "cofibration" => {
            let [_, _, node] = items else {
                return Err(perr(sx.pos(), "expected one proof node"));
            };
            Ok(CertificateFile::Cofibration(reader.node(node)?))
        }
        "cofibrant" => {
            let [_, _, object, via, node] = items else {
                return Err(perr(sx.pos(), "expected object, via and one proof node"));
            };
            let (obj, key) = match head(object, "object")? {
                [o, k] => (reader.poset(o)?, atom(k)?),
                _ => return Err(perr(object.pos(), "expected `(object P key)`")),
            };
            let key = CanonicalForm::from_hex(key);
            let proof = reader.node(node)?;
            let via = match head(via, "via")? {
                [v] if atom(v)? == "initial" => Via::FromInitial(proof),
                [v] if atom(v)? == "terminal" => Via::FromTerminal(proof),
                _ => return Err(perr(via.pos(), "expected `(via initial|terminal)`")),
            };
            Ok(CertificateFile::Cofibrant { cert: CofibrantCertificate { object: obj, via }, key })
        }
        other => Err(perr(sx.pos(), format!("unknown certificate kind {other}"))),
    }
}
