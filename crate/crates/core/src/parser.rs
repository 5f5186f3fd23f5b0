//! Line-based presentation files.
//!
//! ```text
//! # Example: K<x, y | x^2 + y^2>
//! ring noncommutative
//! vars x y
//! order deglex
//! rel x^2 + y^2
//! ```
//!
//! Directives are `ring`, `vars`, `deg`, `order` and `rel`, one per line.
//! Relations are flat sums of scaled monomials: rational literals (`-3`,
//! `2/5`), generator names, positive `^` powers and explicit `*` products.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    CommMonomial, CommPolynomial, Monomial, NcPolynomial, Polynomial, Rational, RingContext,
    RingKind, Word,
};
use crate::ordering::OrderScheme;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line; `None` for problems with the file as a whole.
    pub line: Option<usize>,
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            column,
            message: message.into(),
        }
    }

    fn whole(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            column: 0,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {}, column {}: {}", l, self.column, self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    Commutative(Vec<CommPolynomial>),
    NonCommutative(Vec<NcPolynomial>),
}

impl Relations {
    pub fn len(&self) -> usize {
        match self {
            Relations::Commutative(v) => v.len(),
            Relations::NonCommutative(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A ring together with the defining relations of a quotient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub ring: RingContext,
    pub relations: Relations,
}

impl Presentation {
    pub fn commutative(ring: RingContext, relations: Vec<CommPolynomial>) -> Self {
        debug_assert_eq!(ring.kind(), RingKind::Commutative);
        Presentation {
            ring,
            relations: Relations::Commutative(relations),
        }
    }

    pub fn noncommutative(ring: RingContext, relations: Vec<NcPolynomial>) -> Self {
        debug_assert_eq!(ring.kind(), RingKind::NonCommutative);
        Presentation {
            ring,
            relations: Relations::NonCommutative(relations),
        }
    }

    /// Index and text of the first relation that is not homogeneous with
    /// respect to the generator degrees.
    pub fn first_inhomogeneous(&self) -> Option<(usize, String)> {
        let weights = self.ring.degrees();
        match &self.relations {
            Relations::Commutative(v) => v
                .iter()
                .position(|p| !p.is_homogeneous(weights))
                .map(|i| (i, format_polynomial(&v[i], &self.ring))),
            Relations::NonCommutative(v) => v
                .iter()
                .position(|p| !p.is_homogeneous(weights))
                .map(|i| (i, format_polynomial(&v[i], &self.ring))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Tokens of one line with their 1-based columns. `offset` is the column of
/// `text`'s first character.
fn tokenize(text: &str, line: usize, offset: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && is_ident_start(chars[i]) {
                    return Err(ParseError::at(
                        line,
                        offset + i,
                        "expected `*` between a number and a generator",
                    ));
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Num(digits.parse().expect("ascii digits")), col));
                continue;
            }
            _ if is_ident_start(c) => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            _ => {
                return Err(ParseError::at(
                    line,
                    col,
                    format!("unexpected character `{c}`"),
                ));
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

/// A parsed monomial before it is committed to a ring kind: the ordered
/// sequence of generator indices with multiplicity.
struct TermAst {
    coefficient: Rational,
    letters: Vec<usize>,
}

struct ExprParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
    ring: &'a RingContext,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn err_here(&self, message: impl Into<String>) -> ParseError {
        let col = self.peek().map_or(self.end_col, |t| t.1);
        ParseError::at(self.line, col, message)
    }

    fn expr(&mut self) -> Result<Vec<TermAst>, ParseError> {
        if self.peek().is_none() {
            return Err(self.err_here("empty relation"));
        }
        let mut terms = Vec::new();
        let mut negative = false;
        if let Some((Tok::Minus, _)) = self.peek() {
            negative = true;
            self.pos += 1;
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coefficient = -t.coefficient;
            }
            terms.push(t);
            match self.peek() {
                None => break,
                Some((Tok::Plus, _)) => negative = false,
                Some((Tok::Minus, _)) => negative = true,
                Some((tok, _)) => {
                    let msg = format!("expected `+`, `-` or `*`, found {tok}");
                    return Err(self.err_here(msg));
                }
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<TermAst, ParseError> {
        let mut t = TermAst {
            coefficient: Rational::one(),
            letters: Vec::new(),
        };
        self.factor(&mut t)?;
        while let Some((Tok::Star, _)) = self.peek() {
            self.pos += 1;
            self.factor(&mut t)?;
        }
        if let Some((tok @ (Tok::Num(_) | Tok::Ident(_)), _)) = self.peek() {
            let msg = format!("expected `*` before {tok}");
            return Err(self.err_here(msg));
        }
        Ok(t)
    }

    fn positive_integer(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some((Tok::Num(n), _)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            Some((Tok::Minus, _)) => Err(self.err_here(format!("{what} must be positive"))),
            Some((tok, _)) => {
                let msg = format!("expected {what}, found {tok}");
                Err(self.err_here(msg))
            }
            None => Err(self.err_here(format!("expected {what}"))),
        }
    }

    fn factor(&mut self, t: &mut TermAst) -> Result<(), ParseError> {
        match self.peek().cloned() {
            Some((Tok::Num(n), _)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if let Some((Tok::Slash, _)) = self.peek() {
                    self.pos += 1;
                    let d = self.positive_integer("a denominator")?;
                    if d.is_zero() {
                        self.pos -= 1;
                        return Err(self.err_here("zero denominator"));
                    }
                    value /= Rational::from_integer(d);
                }
                t.coefficient *= value;
                Ok(())
            }
            Some((Tok::Ident(name), col)) => {
                self.pos += 1;
                let Some(index) = self.ring.generator_index(&name) else {
                    return Err(ParseError::at(
                        self.line,
                        col,
                        format!("unknown variable `{name}`"),
                    ));
                };
                let mut power = 1usize;
                if let Some((Tok::Caret, _)) = self.peek() {
                    self.pos += 1;
                    let exp_pos = self.pos;
                    let e = self.positive_integer("an exponent")?;
                    if e.is_zero() {
                        self.pos = exp_pos;
                        return Err(self.err_here("exponent must be positive"));
                    }
                    power = usize::try_from(&e).map_err(|_| {
                        self.pos = exp_pos;
                        self.err_here("exponent too large")
                    })?;
                }
                t.letters.extend(std::iter::repeat_n(index, power));
                Ok(())
            }
            Some((tok, _)) => {
                let msg = format!("expected a number or a generator, found {tok}");
                Err(self.err_here(msg))
            }
            None => Err(self.err_here("expected a number or a generator")),
        }
    }
}

fn to_comm(ring: &RingContext, terms: Vec<TermAst>) -> CommPolynomial {
    let n = ring.nvars();
    let mut p = Polynomial::zero(n);
    for t in terms {
        let mut e = vec![0u32; n];
        for l in t.letters {
            e[l] += 1;
        }
        p.add_term(CommMonomial::new(e), t.coefficient);
    }
    p
}

fn to_nc(ring: &RingContext, terms: Vec<TermAst>) -> NcPolynomial {
    let mut p = Polynomial::zero(ring.nvars());
    for t in terms {
        p.add_term(Word::new(t.letters), t.coefficient);
    }
    p
}

struct PendingRel {
    line: usize,
    column: usize,
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

/// Parses a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut kind: Option<RingKind> = None;
    let mut vars: Option<(Vec<String>, usize)> = None;
    let mut degrees: Vec<(String, u32, usize, usize)> = Vec::new();
    let mut order: Option<(OrderScheme, usize, usize)> = None;
    let mut rels: Vec<PendingRel> = Vec::new();

    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        };
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let lead = line.chars().count() - trimmed.chars().count();
        let keyword: String = trimmed.chars().take_while(|c| !c.is_whitespace()).collect();
        let rest = &trimmed[keyword.len()..];
        let rest_col = lead + keyword.chars().count() + 1;
        let kw_col = lead + 1;
        let words: Vec<(String, usize)> = {
            let mut v = Vec::new();
            let mut cur = String::new();
            let mut start = rest_col;
            for (col, c) in (rest_col..).zip(rest.chars()) {
                if c.is_whitespace() {
                    if !cur.is_empty() {
                        v.push((std::mem::take(&mut cur), start));
                    }
                } else {
                    if cur.is_empty() {
                        start = col;
                    }
                    cur.push(c);
                }
            }
            if !cur.is_empty() {
                v.push((cur, start));
            }
            v
        };
        let end_col = lead + trimmed.trim_end().chars().count() + 1;
        match keyword.as_str() {
            "ring" => {
                if kind.is_some() {
                    return Err(ParseError::at(
                        line_no,
                        kw_col,
                        "duplicate `ring` directive",
                    ));
                }
                kind = Some(match words.as_slice() {
                    [(w, _)] if w == "commutative" => RingKind::Commutative,
                    [(w, _)] if w == "noncommutative" => RingKind::NonCommutative,
                    [(w, c)] => {
                        return Err(ParseError::at(
                            line_no,
                            *c,
                            format!("unknown ring kind `{w}`"),
                        ))
                    }
                    _ => {
                        return Err(ParseError::at(
                            line_no,
                            rest_col,
                            "expected `commutative` or `noncommutative`",
                        ))
                    }
                });
            }
            "vars" => {
                if vars.is_some() {
                    return Err(ParseError::at(
                        line_no,
                        kw_col,
                        "duplicate `vars` directive",
                    ));
                }
                if words.is_empty() {
                    return Err(ParseError::at(
                        line_no,
                        rest_col,
                        "expected generator names",
                    ));
                }
                let mut names = Vec::new();
                for (w, c) in &words {
                    let mut chars = w.chars();
                    let valid =
                        chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char);
                    if !valid {
                        return Err(ParseError::at(
                            line_no,
                            *c,
                            format!("invalid generator name `{w}`"),
                        ));
                    }
                    if names.contains(w) {
                        return Err(ParseError::at(
                            line_no,
                            *c,
                            format!("duplicate generator `{w}`"),
                        ));
                    }
                    names.push(w.clone());
                }
                vars = Some((names, line_no));
            }
            "deg" => match words.as_slice() {
                [(name, _), (d, dc)] => {
                    let value: u32 = d.parse().map_err(|_| {
                        ParseError::at(line_no, *dc, format!("invalid degree `{d}`"))
                    })?;
                    if value == 0 {
                        return Err(ParseError::at(line_no, *dc, "degree must be positive"));
                    }
                    degrees.push((name.clone(), value, line_no, words[0].1));
                }
                _ => {
                    return Err(ParseError::at(
                        line_no,
                        rest_col,
                        "expected `deg <name> <positive integer>`",
                    ))
                }
            },
            "order" => {
                let scheme = match words.as_slice() {
                    [(w, _)] if w == "lex" => OrderScheme::Lex,
                    [(w, _)] if w == "deglex" => OrderScheme::DegLex,
                    [(w, c)] => {
                        return Err(ParseError::at(line_no, *c, format!("unknown order `{w}`")))
                    }
                    _ => {
                        return Err(ParseError::at(
                            line_no,
                            rest_col,
                            "expected `lex` or `deglex`",
                        ))
                    }
                };
                order = Some((scheme, line_no, words[0].1));
            }
            "rel" => {
                let toks = tokenize(rest, line_no, rest_col)?;
                rels.push(PendingRel {
                    line: line_no,
                    column: kw_col,
                    toks,
                    end_col,
                });
            }
            other => {
                return Err(ParseError::at(
                    line_no,
                    kw_col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let kind = kind.ok_or_else(|| ParseError::whole("missing `ring` directive"))?;
    let (names, _) = vars.ok_or_else(|| ParseError::whole("missing `vars` directive"))?;
    let mut degs = vec![1u32; names.len()];
    for (name, value, line, col) in degrees {
        match names.iter().position(|n| *n == name) {
            Some(i) => degs[i] = value,
            None => {
                return Err(ParseError::at(
                    line,
                    col,
                    format!("unknown variable `{name}`"),
                ))
            }
        }
    }
    let (scheme, order_line, order_col) = order.unwrap_or((OrderScheme::DegLex, 0, 0));
    let ring =
        RingContext::with_degrees(kind, names, degs, scheme).map_err(|e| match order_line {
            0 => ParseError::whole(e.to_string()),
            l => ParseError::at(l, order_col, e.to_string()),
        })?;

    let mut comm = Vec::new();
    let mut nc = Vec::new();
    for rel in rels {
        let mut parser = ExprParser {
            toks: &rel.toks,
            pos: 0,
            line: rel.line,
            end_col: rel.end_col,
            ring: &ring,
        };
        let terms = parser.expr()?;
        let zero = |_| ParseError::at(rel.line, rel.column, "relation is zero");
        match kind {
            RingKind::Commutative => {
                let p = to_comm(&ring, terms);
                if p.is_zero() {
                    return Err(zero(()));
                }
                comm.push(p);
            }
            RingKind::NonCommutative => {
                let p = to_nc(&ring, terms);
                if p.is_zero() {
                    return Err(zero(()));
                }
                nc.push(p);
            }
        }
    }
    Ok(match kind {
        RingKind::Commutative => Presentation::commutative(ring, comm),
        RingKind::NonCommutative => Presentation::noncommutative(ring, nc),
    })
}

/// Monomials that know how to print themselves with generator names.
pub trait RenderMonomial: Monomial {
    /// Factors as `(generator, power)` runs in print order.
    fn runs(&self) -> Vec<(usize, usize)>;
}

impl RenderMonomial for CommMonomial {
    fn runs(&self) -> Vec<(usize, usize)> {
        self.exponents()
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| (i, *e as usize))
            .collect()
    }
}

impl RenderMonomial for Word {
    fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &l in self.letters() {
            match runs.last_mut() {
                Some((g, k)) if *g == l => *k += 1,
                _ => runs.push((l, 1)),
            }
        }
        runs
    }
}

/// `x*y^2*x`-style rendering; the unit prints as `1`.
pub fn format_monomial<M: RenderMonomial>(m: &M, names: &[String]) -> String {
    let runs = m.runs();
    if runs.is_empty() {
        return "1".to_string();
    }
    runs.iter()
        .map(|&(g, k)| match k {
            1 => names[g].clone(),
            _ => format!("{}^{}", names[g], k),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders `p` with terms in strictly decreasing order under the ring's
/// monomial order. The output parses back to `p`.
pub fn format_polynomial<M: RenderMonomial>(p: &Polynomial<M>, ring: &RingContext) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms(ring.order()).into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&format_monomial(m, ring.generators()));
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&format_monomial(m, ring.generators()));
        }
    }
    out
}

/// Renders a whole presentation in the file format.
pub fn format_presentation(p: &Presentation) -> String {
    let ring = &p.ring;
    let mut out = format!(
        "ring {}\nvars {}\n",
        ring.kind(),
        ring.generators().join(" ")
    );
    for (name, d) in ring.generators().iter().zip(ring.degrees()) {
        if *d != 1 {
            out.push_str(&format!("deg {name} {d}\n"));
        }
    }
    out.push_str(&format!("order {}\n", ring.order().scheme()));
    let rels: Vec<String> = match &p.relations {
        Relations::Commutative(v) => v.iter().map(|r| format_polynomial(r, ring)).collect(),
        Relations::NonCommutative(v) => v.iter().map(|r| format_polynomial(r, ring)).collect(),
    };
    for r in rels {
        out.push_str(&format!("rel {r}\n"));
    }
    out
}
