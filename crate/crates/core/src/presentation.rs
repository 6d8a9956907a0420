//! Finitely presented groups: a small presentation DSL, builders for the
//! symmetric/braid-group presentations and the relation tables, the generic
//! extension-presentation constructor, and the elementwise enumeration of
//! the mod 4 braid group.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::braid::{BraidLetter, BraidWord};
use crate::ext::{elem_from_word, ext_mul, ExtElement, ExtError, RingTag};
use crate::perm::{Permutation, UPair};
use crate::strand::PairVector;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresError {
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("missing conjugation word for ({0}, {1}, {2})")]
    MissingConjugation(String, String, char),
    #[error("missing lifted value for relator {0}")]
    MissingLiftedValue(usize),
    #[error("missing lift for generator {0:?}")]
    MissingLift(String),
    #[error("enumeration guard exceeded: n = {0} > {1}")]
    GuardExceeded(usize, usize),
}

/// One relator, kept both as the structural expression the parser saw (so
/// formatting round-trips) and as a flattened word of signed generator
/// indices (1-based; negative means inverse).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    expr: RelExpr,
    word: Vec<i32>,
}

impl Relator {
    pub fn word(&self) -> &[i32] {
        &self.word
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum RelExpr {
    Gen { index: usize, exp: i64 },
    Paren { inner: Vec<RelExpr>, exp: i64 },
    Comm { left: Vec<RelExpr>, right: Vec<RelExpr>, exp: i64 },
}

fn flatten_seq(seq: &[RelExpr], out: &mut Vec<i32>) {
    for e in seq {
        flatten(e, out);
    }
}

fn flatten(e: &RelExpr, out: &mut Vec<i32>) {
    let powered = |base: Vec<i32>, exp: i64, out: &mut Vec<i32>| {
        let body: Vec<i32> = if exp >= 0 {
            base
        } else {
            base.iter().rev().map(|&l| -l).collect()
        };
        for _ in 0..exp.unsigned_abs() {
            out.extend(&body);
        }
    };
    match e {
        RelExpr::Gen { index, exp } => {
            powered(vec![*index as i32 + 1], *exp, out);
        }
        RelExpr::Paren { inner, exp } => {
            let mut base = Vec::new();
            flatten_seq(inner, &mut base);
            powered(base, *exp, out);
        }
        RelExpr::Comm { left, right, exp } => {
            let mut x = Vec::new();
            flatten_seq(left, &mut x);
            let mut y = Vec::new();
            flatten_seq(right, &mut y);
            let mut base = Vec::new();
            base.extend(&x);
            base.extend(&y);
            base.extend(x.iter().rev().map(|&l| -l));
            base.extend(y.iter().rev().map(|&l| -l));
            powered(base, *exp, out);
        }
    }
}

/// A finitely presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Relator>,
}

impl Presentation {
    pub fn new(generators: Vec<String>) -> Self {
        Presentation {
            generators,
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Adds a relator given as a word of (generator name, exponent) factors.
    pub fn push_named(&mut self, word: &[(&str, i64)]) -> Result<(), PresError> {
        let mut seq = Vec::new();
        for &(name, exp) in word {
            if exp == 0 {
                continue;
            }
            let index = self
                .gen_index(name)
                .ok_or_else(|| PresError::UnknownGenerator(name.to_string()))?;
            seq.push(RelExpr::Gen { index, exp });
        }
        let mut flat = Vec::new();
        flatten_seq(&seq, &mut flat);
        self.relators.push(Relator {
            expr: RelExpr::Paren {
                inner: seq,
                exp: 1,
            },
            word: flat,
        });
        Ok(())
    }

    /// The relator word as (name, sign) letters, for cross-presentation
    /// comparison.
    pub fn named_word(&self, r: &Relator) -> Vec<(String, i8)> {
        r.word
            .iter()
            .map(|&l| {
                (
                    self.generators[(l.unsigned_abs() - 1) as usize].clone(),
                    if l > 0 { 1 } else { -1 },
                )
            })
            .collect()
    }

    /// Relator set normalized up to free reduction, cyclic rotation, and
    /// inversion, over generator names.
    pub fn canonical_relator_set(&self) -> BTreeSet<Vec<(String, i8)>> {
        self.relators
            .iter()
            .map(|r| canonical_relator(&self.named_word(r)))
            .collect()
    }

    pub fn format(&self) -> String {
        let mut out = String::from("gens: ");
        out.push_str(&self.generators.join(", "));
        out.push_str("; rels: ");
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| self.format_expr(&r.expr))
            .collect();
        out.push_str(&rels.join(", "));
        out
    }

    fn format_expr(&self, e: &RelExpr) -> String {
        let pow = |s: String, exp: i64| {
            if exp == 1 {
                s
            } else {
                format!("{s}^{exp}")
            }
        };
        match e {
            RelExpr::Gen { index, exp } => pow(self.generators[*index].clone(), *exp),
            RelExpr::Paren { inner, exp } => {
                let body = inner
                    .iter()
                    .map(|x| self.format_expr(x))
                    .collect::<Vec<_>>()
                    .join(" ");
                if *exp == 1 && inner.len() == 1 {
                    body
                } else if *exp == 1 {
                    // A bare top-level word needs no parentheses.
                    body
                } else {
                    format!("({body})^{exp}")
                }
            }
            RelExpr::Comm { left, right, exp } => {
                let l = left
                    .iter()
                    .map(|x| self.format_expr(x))
                    .collect::<Vec<_>>()
                    .join(" ");
                let r = right
                    .iter()
                    .map(|x| self.format_expr(x))
                    .collect::<Vec<_>>()
                    .join(" ");
                pow(format!("[{l},{r}]"), *exp)
            }
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// Free reduction, cyclic reduction, then the lexicographically smallest
/// rotation of the word or its inverse. Two relators are the same relation
/// up to these moves exactly when their canonical forms agree.
pub fn canonical_relator(word: &[(String, i8)]) -> Vec<(String, i8)> {
    let mut w: Vec<(String, i8)> = Vec::new();
    for l in word {
        if let Some(top) = w.last() {
            if top.0 == l.0 && top.1 == -l.1 {
                w.pop();
                continue;
            }
        }
        w.push(l.clone());
    }
    while w.len() >= 2 {
        let first = w.first().unwrap().clone();
        let last = w.last().unwrap().clone();
        if first.0 == last.0 && first.1 == -last.1 {
            w.remove(0);
            w.pop();
        } else {
            break;
        }
    }
    if w.is_empty() {
        return w;
    }
    let inverse: Vec<(String, i8)> = w.iter().rev().map(|(g, s)| (g.clone(), -s)).collect();
    let mut best: Option<Vec<(String, i8)>> = None;
    for base in [&w, &inverse] {
        for r in 0..base.len() {
            let mut rot = base[r..].to_vec();
            rot.extend_from_slice(&base[..r]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

// ---------------------------------------------------------------------------
// DSL parser
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Comma,
    Semi,
    Colon,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize, usize)>, PresError> {
        let mut tokens = Vec::new();
        let mut line = 1usize;
        let mut col = 1usize;
        let mut chars = src.chars().peekable();
        while let Some(&c) = chars.peek() {
            let (tline, tcol) = (line, col);
            let bump = |chars: &mut std::iter::Peekable<std::str::Chars>,
                            line: &mut usize,
                            col: &mut usize| {
                let c = chars.next().unwrap();
                if c == '\n' {
                    *line += 1;
                    *col = 1;
                } else {
                    *col += 1;
                }
                c
            };
            if c.is_whitespace() {
                bump(&mut chars, &mut line, &mut col);
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(bump(&mut chars, &mut line, &mut col));
                    } else {
                        break;
                    }
                }
                tokens.push((Tok::Ident(name), tline, tcol));
                continue;
            }
            if c.is_ascii_digit() || c == '-' {
                let mut text = String::new();
                text.push(bump(&mut chars, &mut line, &mut col));
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        text.push(bump(&mut chars, &mut line, &mut col));
                    } else {
                        break;
                    }
                }
                let value = text.parse::<i64>().map_err(|_| PresError::Parse {
                    line: tline,
                    col: tcol,
                    message: format!("bad integer {text:?}"),
                })?;
                tokens.push((Tok::Int(value), tline, tcol));
                continue;
            }
            let tok = match c {
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                ':' => Tok::Colon,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                other => {
                    return Err(PresError::Parse {
                        line: tline,
                        col: tcol,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            };
            bump(&mut chars, &mut line, &mut col);
            tokens.push((tok, tline, tcol));
        }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Tok, usize, usize)>,
    pos: usize,
    generators: Vec<String>,
    gen_index: HashMap<String, usize>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((1, 1))
    }

    fn error(&self, message: impl Into<String>) -> PresError {
        let (line, col) = self.here();
        PresError::Parse {
            line,
            col,
            message: message.into(),
        }
    }

    fn eat(&mut self, want: Tok, what: &str) -> Result<(), PresError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn ident(&mut self) -> Result<String, PresError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(name)
            }
            _ => Err(self.error("expected identifier")),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), PresError> {
        match self.peek() {
            Some(Tok::Ident(name)) if name == word => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected keyword {word:?}"))),
        }
    }

    fn exponent(&mut self) -> Result<i64, PresError> {
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(v)) => {
                    self.pos += 1;
                    Ok(v)
                }
                _ => Err(self.error("expected integer exponent after '^'")),
            }
        } else {
            Ok(1)
        }
    }

    /// A word is a nonempty sequence of atoms; it stops at `,`, `;`, `]`,
    /// `)`, or end of input.
    fn word(&mut self) -> Result<Vec<RelExpr>, PresError> {
        let mut out = Vec::new();
        while let Some(Tok::Ident(_) | Tok::LParen | Tok::LBracket) = self.peek() {
            out.push(self.atom()?);
        }
        if out.is_empty() {
            return Err(self.error("expected a word"));
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<RelExpr, PresError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let exp = self.exponent()?;
                let index = *self
                    .gen_index
                    .get(&name)
                    .ok_or_else(|| self.error(format!("unknown generator {name:?}")))?;
                Ok(RelExpr::Gen { index, exp })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.word()?;
                self.eat(Tok::RParen, "')'")?;
                let exp = self.exponent()?;
                Ok(RelExpr::Paren { inner, exp })
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let left = self.word()?;
                self.eat(Tok::Comma, "',' between commutator arguments")?;
                let right = self.word()?;
                self.eat(Tok::RBracket, "']'")?;
                let exp = self.exponent()?;
                Ok(RelExpr::Comm { left, right, exp })
            }
            _ => Err(self.error("expected generator, '(' or '['")),
        }
    }
}

/// Parses the presentation DSL:
/// `gens: a, b; rels: a^2, [a,b], (a b)^3, a b a^-1 b^-1`.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        generators: Vec::new(),
        gen_index: HashMap::new(),
    };
    p.keyword("gens")?;
    p.eat(Tok::Colon, "':'")?;
    loop {
        let name = p.ident()?;
        if p.gen_index.contains_key(&name) {
            return Err(p.error(format!("duplicate generator {name:?}")));
        }
        p.gen_index.insert(name.clone(), p.generators.len());
        p.generators.push(name);
        if p.peek() == Some(&Tok::Comma) {
            p.pos += 1;
        } else {
            break;
        }
    }
    p.eat(Tok::Semi, "';' after generator list")?;
    p.keyword("rels")?;
    p.eat(Tok::Colon, "':'")?;
    let mut relators = Vec::new();
    loop {
        let seq = p.word()?;
        let mut flat = Vec::new();
        flatten_seq(&seq, &mut flat);
        let expr = if seq.len() == 1 {
            seq.into_iter().next().unwrap()
        } else {
            RelExpr::Paren {
                inner: seq,
                exp: 1,
            }
        };
        relators.push(Relator { expr, word: flat });
        match p.peek() {
            Some(Tok::Comma) => p.pos += 1,
            Some(Tok::Semi) => {
                p.pos += 1;
                break;
            }
            None => break,
            _ => return Err(p.error("expected ',' or end of relator list")),
        }
    }
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input after relator list"));
    }
    Ok(Presentation {
        generators: p.generators,
        relators,
    })
}

// ---------------------------------------------------------------------------
// Builders for the named presentations
// ---------------------------------------------------------------------------

/// Which built-in presentation to construct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// Symmetric group on adjacent transpositions.
    Sn3 { n: usize },
    /// Symmetric group on all transpositions.
    Sn4 { n: usize },
    /// Braid group on Artin generators.
    Artin2 { n: usize },
    /// Braid group on band generators.
    Bn5 { n: usize },
    /// The winding-coefficient extension.
    Table1 { n: usize },
    /// Its t-scaled variant.
    Table2 { n: usize, t: i64 },
    /// The mod 4 braid group on transposition lifts.
    Table3 { n: usize },
    /// The mod 4 braid group on Artin generators.
    Pres11 { n: usize },
}

fn s_name(p: UPair) -> String {
    format!("s_{}_{}", p.lo(), p.hi())
}

fn g_name(p: UPair) -> String {
    format!("g_{}_{}", p.lo(), p.hi())
}

/// Renders a kernel vector as a word over the `g` generators, pairs in
/// lexicographic order. Both the table builders and the extension
/// constructor use this, so relator sets compare letter for letter.
pub fn kernel_word(v: &PairVector) -> Vec<(String, i64)> {
    v.iter().map(|(p, c)| (g_name(p), c)).collect()
}

fn push_relator(pres: &mut Presentation, word: &[(String, i64)]) {
    let borrowed: Vec<(&str, i64)> = word.iter().map(|(s, e)| (s.as_str(), *e)).collect();
    pres.push_named(&borrowed).expect("builder names are declared");
}

fn conjugation_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for k in 1..=n {
            for j in 1..=n {
                if i != k && k != j && i != j {
                    out.push((i, k, j));
                }
            }
        }
    }
    out
}

fn r3_case(i: usize, k: usize, j: usize) -> bool {
    (k < i && i < j) || (i < j && j < k) || (j < k && k < i)
}

/// Disjoint unordered pairs of canonical pairs, first lexicographically
/// smaller. Under that normalization the only interleaved pattern is
/// `i < k < j < l`.
fn disjoint_pair_pairs(n: usize) -> Vec<(UPair, UPair)> {
    let pairs = UPair::all(n);
    let mut out = Vec::new();
    for (ai, &a) in pairs.iter().enumerate() {
        for &b in &pairs[ai + 1..] {
            if a.is_disjoint(&b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn interleaved_value(a: UPair, b: UPair, t: i64) -> Option<Vec<(String, i64)>> {
    let (i, j, k, l) = (a.lo(), a.hi(), b.lo(), b.hi());
    if i < k && k < j && j < l {
        Some(vec![
            (g_name(UPair::new(i, k)), t),
            (g_name(UPair::new(i, l)), -t),
            (g_name(UPair::new(j, k)), -t),
            (g_name(UPair::new(j, l)), t),
        ])
    } else {
        None
    }
}

/// Constructs one of the named presentations with all relators instantiated
/// over their valid index tuples.
pub fn build_presentation(which: Builtin) -> Presentation {
    match which {
        Builtin::Sn3 { n } => {
            let gens: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
            let mut pres = Presentation::new(gens);
            for i in 1..n {
                push_relator(&mut pres, &[(format!("s{i}"), 2)]);
            }
            for i in 1..n.saturating_sub(1) {
                braid_relator(&mut pres, &format!("s{i}"), &format!("s{}", i + 1));
            }
            for i in 1..n {
                for j in i + 2..n {
                    commutator_relator(&mut pres, &format!("s{i}"), &format!("s{j}"));
                }
            }
            pres
        }
        Builtin::Sn4 { n } => {
            let pairs = UPair::all(n);
            let gens: Vec<String> = pairs.iter().map(|&p| s_name(p)).collect();
            let mut pres = Presentation::new(gens);
            for &a in &pairs {
                push_relator(&mut pres, &[(s_name(a), 2)]);
            }
            for (a, b) in disjoint_pair_pairs(n) {
                commutator_relator(&mut pres, &s_name(a), &s_name(b));
            }
            // The conjugation relation, written per index pattern in the
            // orientation that lifts without kernel correction. Since every
            // generator is an involution the two spellings present the same
            // relation.
            conjugation_relators(&mut pres, n);
            pres
        }
        Builtin::Artin2 { n } => {
            let gens: Vec<String> = (1..n).map(|i| format!("b{i}")).collect();
            let mut pres = Presentation::new(gens);
            for i in 1..n.saturating_sub(1) {
                braid_relator(&mut pres, &format!("b{i}"), &format!("b{}", i + 1));
            }
            for i in 1..n {
                for j in i + 2..n {
                    commutator_relator(&mut pres, &format!("b{i}"), &format!("b{j}"));
                }
            }
            pres
        }
        Builtin::Bn5 { n } => {
            let pairs = UPair::all(n);
            let gens: Vec<String> = pairs.iter().map(|&p| format!("b_{}_{}", p.lo(), p.hi())).collect();
            let mut pres = Presentation::new(gens);
            let name = |p: UPair| format!("b_{}_{}", p.lo(), p.hi());
            for (ai, &a) in pairs.iter().enumerate() {
                for &b in &pairs[ai + 1..] {
                    if !a.is_disjoint(&b) {
                        continue;
                    }
                    let (i, j, k, l) = (
                        a.lo() as i64,
                        a.hi() as i64,
                        b.lo() as i64,
                        b.hi() as i64,
                    );
                    if (j - k) * (j - l) * (i - k) * (i - l) > 0 {
                        commutator_relator(&mut pres, &name(a), &name(b));
                    }
                }
            }
            for (i, k, j) in conjugation_triples(n) {
                // Band conjugation relations, both orientations as printed.
                let bij = name(UPair::new(i, j));
                let bjk = name(UPair::new(j, k));
                let bik = name(UPair::new(i, k));
                if (i < j && j < k) || (k < i && i < j) || (j < k && k < i) {
                    push_relator(
                        &mut pres,
                        &[(bij.clone(), 1), (bjk, 1), (bij, -1), (bik, -1)],
                    );
                } else {
                    push_relator(
                        &mut pres,
                        &[(bij.clone(), -1), (bjk, 1), (bij, 1), (bik, -1)],
                    );
                }
            }
            pres
        }
        Builtin::Table1 { n } => build_table(n, 1, false),
        Builtin::Table2 { n, t } => build_table(n, t, false),
        Builtin::Table3 { n } => build_table(n, 1, true),
        Builtin::Pres11 { n } => {
            let gens: Vec<String> = (1..n).map(|i| format!("b{i}")).collect();
            let mut pres = Presentation::new(gens);
            for i in 1..n {
                push_relator(&mut pres, &[(format!("b{i}"), 4)]);
            }
            for i in 1..n.saturating_sub(1) {
                let a = format!("b{i}");
                let b = format!("b{}", i + 1);
                push_relator(
                    &mut pres,
                    &[
                        (a.clone(), 2),
                        (b.clone(), 2),
                        (a.clone(), -2),
                        (b.clone(), -2),
                    ],
                );
            }
            // [b_{i,i+2}^2, b_{i+1,i+3}^2], expanded to Artin letters.
            for i in 1..=n.saturating_sub(4) {
                let band_sq = |p: UPair, invert: bool| -> Vec<(String, i64)> {
                    let w = crate::braid::band_expand(p, n);
                    let mut letters: Vec<(String, i64)> = Vec::new();
                    for _ in 0..2 {
                        for l in w.letters() {
                            if let crate::braid::Generator::Artin(idx) = l.gen {
                                letters.push((format!("b{idx}"), l.exponent as i64));
                            }
                        }
                    }
                    if invert {
                        letters.reverse();
                        for l in &mut letters {
                            l.1 = -l.1;
                        }
                    }
                    letters
                };
                let mut word = band_sq(UPair::new(i, i + 2), false);
                word.extend(band_sq(UPair::new(i + 1, i + 3), false));
                word.extend(band_sq(UPair::new(i, i + 2), true));
                word.extend(band_sq(UPair::new(i + 1, i + 3), true));
                push_relator(&mut pres, &word);
            }
            for i in 1..n.saturating_sub(1) {
                braid_relator(&mut pres, &format!("b{i}"), &format!("b{}", i + 1));
            }
            for i in 1..n {
                for j in i + 2..n {
                    commutator_relator(&mut pres, &format!("b{i}"), &format!("b{j}"));
                }
            }
            pres
        }
    }
}

fn braid_relator(pres: &mut Presentation, a: &str, b: &str) {
    push_relator(
        pres,
        &[
            (a.to_string(), 1),
            (b.to_string(), 1),
            (a.to_string(), 1),
            (b.to_string(), -1),
            (a.to_string(), -1),
            (b.to_string(), -1),
        ],
    );
}

fn commutator_relator(pres: &mut Presentation, a: &str, b: &str) {
    push_relator(
        pres,
        &[
            (a.to_string(), 1),
            (b.to_string(), 1),
            (a.to_string(), -1),
            (b.to_string(), -1),
        ],
    );
}

/// Emits the conjugation family split by index pattern: the positive
/// orientation where it lifts cleanly, the inverse orientation otherwise.
fn conjugation_relators(pres: &mut Presentation, n: usize) {
    for (i, k, j) in conjugation_triples(n) {
        let sij = s_name(UPair::new(i, j));
        let sjk = s_name(UPair::new(j, k));
        let sik = s_name(UPair::new(i, k));
        if r3_case(i, k, j) {
            push_relator(
                pres,
                &[(sij.clone(), 1), (sjk, 1), (sij, -1), (sik, -1)],
            );
        } else {
            push_relator(
                pres,
                &[(sij.clone(), -1), (sjk, 1), (sij, 1), (sik, -1)],
            );
        }
    }
}

fn build_table(n: usize, t: i64, mod2: bool) -> Presentation {
    let pairs = UPair::all(n);
    let mut gens: Vec<String> = pairs.iter().map(|&p| g_name(p)).collect();
    gens.extend(pairs.iter().map(|&p| s_name(p)));
    let mut pres = Presentation::new(gens);

    if mod2 {
        for &a in &pairs {
            push_relator(&mut pres, &[(g_name(a), 2)]);
        }
    }
    for (ai, &a) in pairs.iter().enumerate() {
        for &b in &pairs[ai + 1..] {
            commutator_relator(&mut pres, &g_name(a), &g_name(b));
        }
    }
    for &a in &pairs {
        push_relator(
            &mut pres,
            &[(s_name(a), 2), (g_name(a), if mod2 { -1 } else { -t })],
        );
    }
    conjugation_relators(&mut pres, n);
    for (a, b) in disjoint_pair_pairs(n) {
        let mut word = vec![
            (s_name(a), 1),
            (s_name(b), 1),
            (s_name(a), -1),
            (s_name(b), -1),
        ];
        if let Some(value) = interleaved_value(a, b, t) {
            let value = if mod2 {
                value.into_iter().map(|(g, c)| (g, c.rem_euclid(2))).collect()
            } else {
                value
            };
            // Append the inverse of the value word.
            for (g, c) in value.into_iter().rev() {
                if c != 0 {
                    word.push((g, -c));
                }
            }
        }
        push_relator(&mut pres, &word);
    }
    // Conjugation action on kernel generators, general relabeling form.
    for &a in &pairs {
        let sa = Permutation::transposition(a, n);
        for &b in &pairs {
            let image = crate::perm::pair_action(&sa, b);
            push_relator(
                &mut pres,
                &[
                    (s_name(a), 1),
                    (g_name(b), 1),
                    (s_name(a), -1),
                    (g_name(image), -1),
                ],
            );
        }
    }
    pres
}

// ---------------------------------------------------------------------------
// Generic extension-presentation constructor
// ---------------------------------------------------------------------------

/// Data for building a presentation of an extension `1 -> K -> G -> Q -> 1`:
/// a fresh name for the lift of each Q-generator, a K-word for each
/// conjugate `s k s^{-1}` and `s^{-1} k s`, and the K-value of each lifted
/// Q-relator.
pub struct ExtensionData {
    /// Q-generator name -> name of its lift in the output.
    pub lift: BTreeMap<String, String>,
    /// (Q-generator, K-generator, sign) -> K-word. Sign '+' stands for
    /// `s k s^{-1}`, '-' for `s^{-1} k s`.
    pub conj: BTreeMap<(String, String, char), Vec<(String, i64)>>,
    /// Relator index in `presQ` -> K-word for the kernel value of its lift.
    pub lifted_rel_values: BTreeMap<usize, Vec<(String, i64)>>,
}

/// Builds the presentation of the extension from presentations of kernel
/// and quotient: generators are the K-generators plus the lifts, relators
/// are the K-relators, the lifted Q-relators corrected by their kernel
/// values, and the conjugation relators for both signs.
pub fn build_extension_presentation(
    pres_k: &Presentation,
    pres_q: &Presentation,
    data: &ExtensionData,
) -> Result<Presentation, PresError> {
    let mut gens: Vec<String> = pres_k.generators.clone();
    let mut lifted_names = Vec::new();
    for q_gen in &pres_q.generators {
        let lifted = data
            .lift
            .get(q_gen)
            .ok_or_else(|| PresError::MissingLift(q_gen.clone()))?;
        lifted_names.push(lifted.clone());
        gens.push(lifted.clone());
    }
    let mut out = Presentation::new(gens);

    // R_K.
    for r in &pres_k.relators {
        let word: Vec<(String, i64)> = pres_k
            .named_word(r)
            .into_iter()
            .map(|(g, s)| (g, s as i64))
            .collect();
        push_relator(&mut out, &word);
    }

    // Lifted Q-relators with kernel corrections.
    for (idx, r) in pres_q.relators.iter().enumerate() {
        let value = data
            .lifted_rel_values
            .get(&idx)
            .ok_or(PresError::MissingLiftedValue(idx))?;
        let mut word: Vec<(String, i64)> = pres_q
            .named_word(r)
            .into_iter()
            .map(|(g, s)| {
                let gi = pres_q.gen_index(&g).expect("named_word uses own gens");
                (lifted_names[gi].clone(), s as i64)
            })
            .collect();
        for (g, c) in value.iter().rev() {
            if *c != 0 {
                word.push((g.clone(), -c));
            }
        }
        push_relator(&mut out, &word);
    }

    // Conjugation relators, both signs.
    for q_gen in &pres_q.generators {
        let lifted = data.lift[q_gen].clone();
        for k_gen in &pres_k.generators {
            for sign in ['+', '-'] {
                let key = (q_gen.clone(), k_gen.clone(), sign);
                let value = data.conj.get(&key).ok_or_else(|| {
                    PresError::MissingConjugation(q_gen.clone(), k_gen.clone(), sign)
                })?;
                let e = if sign == '+' { 1 } else { -1 };
                let mut word = vec![
                    (lifted.clone(), e),
                    (k_gen.clone(), 1),
                    (lifted.clone(), -e),
                ];
                for (g, c) in value.iter().rev() {
                    if *c != 0 {
                        word.push((g.clone(), -c));
                    }
                }
                push_relator(&mut out, &word);
            }
        }
    }
    Ok(out)
}

fn pair_of_name(name: &str) -> Option<UPair> {
    let mut it = name.splitn(3, '_');
    let _head = it.next()?;
    let a: usize = it.next()?.parse().ok()?;
    let b: usize = it.next()?.parse().ok()?;
    Some(UPair::new(a, b))
}

/// Presentation of the elementary abelian kernel of the mod 4 braid group:
/// commuting involutions, one per pair.
pub fn kernel_presentation_z2(n: usize) -> Presentation {
    let pairs = UPair::all(n);
    let gens: Vec<String> = pairs.iter().map(|&p| g_name(p)).collect();
    let mut pres = Presentation::new(gens);
    for &a in &pairs {
        push_relator(&mut pres, &[(g_name(a), 2)]);
    }
    for (ai, &a) in pairs.iter().enumerate() {
        for &b in &pairs[ai + 1..] {
            commutator_relator(&mut pres, &g_name(a), &g_name(b));
        }
    }
    pres
}

/// Computes the extension data for the mod 4 braid group over the symmetric
/// group through the braid-word oracle: conjugates and lifted relator values
/// are evaluated with `elem_from_word` rather than copied from any table.
pub fn zn_extension_data(n: usize, pres_q: &Presentation) -> Result<ExtensionData, ExtError> {
    let mut lift = BTreeMap::new();
    for g in &pres_q.generators {
        lift.insert(g.clone(), g.clone());
    }
    let mut conj = BTreeMap::new();
    let pairs = UPair::all(n);
    for &a in &pairs {
        for &b in &pairs {
            for sign in ['+', '-'] {
                let e: i8 = if sign == '+' { 1 } else { -1 };
                let mut w = BraidWord::empty(n);
                w.push(BraidLetter::band(a, e));
                w.push(BraidLetter::band(b, 1));
                w.push(BraidLetter::band(b, 1));
                w.push(BraidLetter::band(a, -e));
                let elem = elem_from_word(&w, RingTag::Z2)?;
                debug_assert!(elem.perm.is_identity());
                let value: Vec<(String, i64)> = kernel_word(&elem.vec);
                conj.insert((s_name(a), g_name(b), sign), value);
            }
        }
    }
    let mut lifted_rel_values = BTreeMap::new();
    for (idx, r) in pres_q.relators.iter().enumerate() {
        let mut w = BraidWord::empty(n);
        for (name, s) in pres_q.named_word(r) {
            let pair = pair_of_name(&name).expect("transposition generator names");
            w.push(BraidLetter::band(pair, s));
        }
        let elem = elem_from_word(&w, RingTag::Z2)?;
        debug_assert!(elem.perm.is_identity(), "Q-relator lifts to the kernel");
        lifted_rel_values.insert(idx, kernel_word(&elem.vec));
    }
    Ok(ExtensionData {
        lift,
        conj,
        lifted_rel_values,
    })
}

// ---------------------------------------------------------------------------
// Elementwise enumeration of Z_n
// ---------------------------------------------------------------------------

pub const ENUMERATE_GUARD: usize = 4;

/// Closure of the adjacent transposition lifts under the group law of the
/// mod 4 braid group. Exact order, guarded to small degree.
pub fn enumerate_zn(n: usize) -> Result<usize, PresError> {
    if n > ENUMERATE_GUARD {
        return Err(PresError::GuardExceeded(n, ENUMERATE_GUARD));
    }
    let ring = RingTag::Z2;
    let gens: Vec<ExtElement> = (1..n)
        .map(|i| ExtElement::sigma(UPair::new(i, i + 1), n, ring))
        .collect();
    let mut seen: HashSet<ExtElement> = HashSet::new();
    let identity = ExtElement::identity(n, ring);
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in &gens {
                let product = ext_mul(e, g).expect("same ring and degree");
                if seen.insert(product.clone()) {
                    next.push(product);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}
