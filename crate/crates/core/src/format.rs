//! Text formats for algebras (`.lie`) and operator realizations (`.real`).
//!
//! ```text
//! algebra l43 dim 4
//! [1,2] = v3
//! [1,3] = v4        # comments run to end of line
//! ```
//!
//! ```text
//! realization l55
//! target L5_5       # or an inline `algebra` block
//! flavor pseudo
//! modes 2
//! v1 = a1
//! v2 = a2 + 1/2*b1^2
//! v3 = b1
//! v4 = b2
//! v5 = I
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::catalog;
use crate::error::Error;
use crate::lie::{LieAlgebra, Relation};
use crate::scalar::Scalar;
use crate::weyl::{Flavor, Realization, WeylElement};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Eq,
    Imag,
    /// `v`, `a` or `b` with its 1-based index.
    Gen(char, usize),
    Identity,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
}

fn strip_comment(text: &str) -> &str {
    text.split_once('#').map_or(text, |(t, _)| t)
}

fn lex(text: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let simple = match c {
            '/' => Some(Tok::Slash),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, col });
            k += 1;
            continue;
        }
        let start = k;
        while k < chars.len() && chars[k].is_ascii_alphanumeric() {
            k += 1;
        }
        let word: String = chars[start..k].iter().collect();
        if word.is_empty() {
            return err(line, col, format!("unexpected character `{c}`"));
        }
        let tok = if word.bytes().all(|b| b.is_ascii_digit()) {
            Tok::Int(word.parse().expect("digits"))
        } else if word == "i" {
            Tok::Imag
        } else if word == "I" {
            Tok::Identity
        } else if word.bytes().next().is_some_and(|b| b.is_ascii_digit()) && word.ends_with('i') {
            // `2i` lexes as `2` then `i`.
            let digits = &word[..word.len() - 1];
            if !digits.bytes().all(|b| b.is_ascii_digit()) {
                return err(line, col, format!("unexpected `{word}`"));
            }
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digits")),
                col,
            });
            Tok::Imag
        } else {
            let mut cs = word.chars();
            let head = cs.next().expect("nonempty");
            let rest = cs.as_str();
            if !matches!(head, 'v' | 'a' | 'b')
                || rest.is_empty()
                || !rest.bytes().all(|b| b.is_ascii_digit())
            {
                return err(line, col, format!("unexpected `{word}`"));
            }
            let idx = rest
                .parse::<usize>()
                .or_else(|_| err(line, col, format!("index too large in `{word}`")))?;
            if idx == 0 {
                return err(line, col, "generator indices start at 1");
            }
            Tok::Gen(head, idx)
        };
        let col = if tok == Tok::Imag && word != "i" {
            k
        } else {
            col
        };
        out.push(Token { tok, col });
    }
    out.push(Token {
        tok: Tok::End,
        col: chars.len() + 1,
    });
    Ok(out)
}

struct Cursor {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(text: &str, line: usize) -> Result<Self, ParseError> {
        Ok(Cursor {
            toks: lex(text, line)?,
            pos: 0,
            line,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let k = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[k].tok
    }

    fn col(&self) -> usize {
        self.toks[self.pos].col
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        err(self.line, self.col(), message)
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail("unexpected trailing input")
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(format!("expected {what}")),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<usize, ParseError> {
        let col = self.col();
        let n = self.int(what)?;
        n.to_usize()
            .map_or_else(|| err(self.line, col, format!("{what} too large")), Ok)
    }

    /// `INT ['/' INT]`, unsigned.
    fn rat(&mut self) -> Result<BigRational, ParseError> {
        let num = self.int("a number")?;
        if !self.eat(&Tok::Slash) {
            return Ok(BigRational::from_integer(num));
        }
        let col = self.col();
        let den = self.int("a denominator")?;
        if den.is_zero() {
            return err(self.line, col, "zero denominator");
        }
        Ok(BigRational::new(num, den))
    }

    /// Whether `('+'|'-') [INT ['/' INT]] 'i'` starts at the cursor.
    fn imaginary_tail_ahead(&self) -> bool {
        if !matches!(self.peek(), Tok::Plus | Tok::Minus) {
            return false;
        }
        match self.peek_at(1) {
            Tok::Imag => return true,
            Tok::Int(_) => {}
            _ => return false,
        }
        match self.peek_at(2) {
            Tok::Imag => true,
            Tok::Slash => matches!(self.peek_at(3), Tok::Int(_)) && *self.peek_at(4) == Tok::Imag,
            _ => false,
        }
    }
}

/// Scalar literal at the head of an algebra term: `RAT`, `RAT i`, `i` or
/// `RAT ± RAT i`. `negate_first` is a leading `-` that belongs to the first
/// RAT. Returns `None` when the term has no explicit coefficient.
fn literal(c: &mut Cursor, negate_first: bool) -> Result<Option<Scalar>, ParseError> {
    let sign = |r: BigRational| if negate_first { -r } else { r };
    match c.peek() {
        Tok::Imag => {
            c.bump();
            Ok(Some(Scalar::new(
                BigRational::zero(),
                sign(BigRational::from_integer(1.into())),
            )))
        }
        Tok::Int(_) => {
            let first = sign(c.rat()?);
            if c.eat(&Tok::Imag) {
                return Ok(Some(Scalar::new(BigRational::zero(), first)));
            }
            if c.imaginary_tail_ahead() {
                let negative = c.bump() == Tok::Minus;
                let im = if c.eat(&Tok::Imag) {
                    BigRational::from_integer(1.into())
                } else {
                    let im = c.rat()?;
                    c.bump();
                    im
                };
                return Ok(Some(Scalar::new(first, if negative { -im } else { im })));
            }
            Ok(Some(Scalar::from(first)))
        }
        _ => Ok(None),
    }
}

struct BracketLine {
    relation: Relation,
    line: usize,
}

fn parse_bracket(text: &str, line: usize, dim: usize) -> Result<BracketLine, ParseError> {
    let mut c = Cursor::new(text, line)?;
    c.expect(Tok::LBrack, "`[`")?;
    let index = |c: &mut Cursor| -> Result<usize, ParseError> {
        let col = c.col();
        let k = c.small_int("a basis index")?;
        if k == 0 || k > dim {
            return err(line, col, format!("basis index {k} outside 1..{dim}"));
        }
        Ok(k)
    };
    let i = index(&mut c)?;
    c.expect(Tok::Comma, "`,`")?;
    let j = index(&mut c)?;
    c.expect(Tok::RBrack, "`]`")?;
    c.expect(Tok::Eq, "`=`")?;
    if i == j {
        return err(line, 1, format!("bracket [{i},{i}] is always zero"));
    }

    let mut terms = Vec::new();
    if matches!(c.peek(), Tok::Int(n) if n.is_zero()) && *c.peek_at(1) == Tok::End {
        c.bump();
    } else {
        let mut first = true;
        loop {
            let negative = match c.peek() {
                Tok::Plus => {
                    c.bump();
                    false
                }
                Tok::Minus => {
                    c.bump();
                    true
                }
                _ if first => false,
                _ => return c.fail("expected `+`, `-` or end of line"),
            };
            let coef = if first {
                literal(&mut c, negative)?.unwrap_or_else(|| {
                    if negative {
                        Scalar::from_int(-1)
                    } else {
                        Scalar::one()
                    }
                })
            } else {
                let lit = literal(&mut c, false)?.unwrap_or_else(Scalar::one);
                if negative {
                    -lit
                } else {
                    lit
                }
            };
            c.eat(&Tok::Star);
            let col = c.col();
            match c.bump() {
                Tok::Gen('v', k) if k <= dim => terms.push((coef, k)),
                Tok::Gen('v', k) => {
                    return err(line, col, format!("basis index v{k} outside 1..{dim}"))
                }
                _ => return err(line, col, "expected a basis vector `vK`"),
            }
            first = false;
            if *c.peek() == Tok::End {
                break;
            }
        }
    }
    c.expect_end()?;
    let relation = if i < j {
        Relation::new(i, j, terms)
    } else {
        Relation::new(j, i, terms.into_iter().map(|(s, k)| (-s, k)).collect())
    };
    Ok(BracketLine { relation, line })
}

/// Accumulates an `algebra` block.
struct AlgebraBlock {
    name: String,
    dim: usize,
    header_line: usize,
    brackets: Vec<BracketLine>,
}

impl AlgebraBlock {
    fn header(text: &str, line: usize) -> Result<Self, ParseError> {
        let words: Vec<&str> = text.split_whitespace().collect();
        match words.as_slice() {
            ["algebra", name, "dim", n] => {
                let dim = n
                    .parse::<usize>()
                    .or_else(|_| err(line, 1, format!("invalid dimension `{n}`")))?;
                Ok(AlgebraBlock {
                    name: name.to_string(),
                    dim,
                    header_line: line,
                    brackets: Vec::new(),
                })
            }
            _ => err(line, 1, "expected `algebra NAME dim N`"),
        }
    }

    fn push(&mut self, text: &str, line: usize) -> Result<(), ParseError> {
        let b = parse_bracket(text, line, self.dim)?;
        let (i, j) = (b.relation.i, b.relation.j);
        if let Some(prev) = self
            .brackets
            .iter()
            .find(|p| (p.relation.i, p.relation.j) == (i, j))
        {
            return err(
                line,
                1,
                format!("bracket [{i},{j}] already given on line {}", prev.line),
            );
        }
        self.brackets.push(b);
        Ok(())
    }

    fn finish(self) -> Result<LieAlgebra, ParseError> {
        let relations: Vec<Relation> = self.brackets.iter().map(|b| b.relation.clone()).collect();
        match LieAlgebra::from_brackets(self.dim, &relations) {
            Ok(l) => Ok(l.with_label(self.name)),
            Err(e @ Error::JacobiViolation { .. }) => {
                // Blame the first line whose addition breaks the identity.
                let line = (1..=relations.len())
                    .find(|&k| LieAlgebra::from_brackets(self.dim, &relations[..k]).is_err())
                    .map_or(self.header_line, |k| self.brackets[k - 1].line);
                err(line, 1, e.to_string())
            }
            Err(e) => err(self.header_line, 1, e.to_string()),
        }
    }
}

/// Non-blank lines with comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra, ParseError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return err(1, 1, "empty document");
    };
    let mut block = AlgebraBlock::header(header, line)?;
    for (line, text) in lines {
        block.push(text, line)?;
    }
    block.finish()
}

/// Unsigned literal for a coefficient and whether it follows a `-`.
fn signed_literal(c: &Scalar) -> (bool, String) {
    if c.is_real() {
        (c.re().is_negative(), Scalar::from(c.re().abs()).to_string())
    } else if c.re().is_zero() {
        let im = c.im().abs();
        let body = if im == BigRational::from_integer(1.into()) {
            "i".to_string()
        } else {
            format!("{}i", Scalar::from(im))
        };
        (c.im().is_negative(), body)
    } else if c.re().is_negative() {
        (true, (-c).to_string())
    } else {
        (false, c.to_string())
    }
}

fn term_body(lit: &str, k: usize) -> String {
    if lit == "1" {
        format!("v{k}")
    } else {
        format!("{lit} v{k}")
    }
}

/// Writes the algebra in the `.lie` syntax; the name comes from the label.
pub fn serialize_algebra(l: &LieAlgebra) -> String {
    let name: String = l
        .label()
        .unwrap_or("unnamed")
        .chars()
        .map(|c| if c.is_whitespace() { '_' } else { c })
        .collect();
    let mut out = format!("algebra {name} dim {}\n", l.dim());
    for rel in l.relations() {
        let mut line = format!("[{},{}] =", rel.i, rel.j);
        for (n, (c, k)) in rel.terms.iter().filter(|(c, _)| !c.is_zero()).enumerate() {
            let (negative, lit) = signed_literal(c);
            if n == 0 {
                // A leading `-` only negates the real part of `RAT±RATi`.
                if !c.is_real() && !c.re().is_zero() {
                    write!(line, " {}", term_body(&c.to_string(), *k)).unwrap();
                } else {
                    let sign = if negative { "-" } else { "" };
                    write!(line, " {sign}{}", term_body(&lit, *k)).unwrap();
                }
            } else {
                let sign = if negative { '-' } else { '+' };
                write!(line, " {sign} {}", term_body(&lit, *k)).unwrap();
            }
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

struct ExprParser<'a> {
    c: &'a mut Cursor,
    modes: usize,
}

impl ExprParser<'_> {
    fn expr(&mut self) -> Result<WeylElement, ParseError> {
        let mut acc = match self.c.peek() {
            Tok::Minus => {
                self.c.bump();
                -&self.term()?
            }
            Tok::Plus => {
                self.c.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.c.peek() {
                Tok::Plus => {
                    self.c.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.c.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.c.peek(),
            Tok::Int(_) | Tok::Imag | Tok::Gen(..) | Tok::Identity | Tok::LParen
        )
    }

    fn term(&mut self) -> Result<WeylElement, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.c.eat(&Tok::Star) || self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<WeylElement, ParseError> {
        let mut base = self.atom()?;
        while self.c.eat(&Tok::Caret) {
            let col = self.c.col();
            let e = self.c.int("a positive exponent")?;
            match e.to_u32() {
                Some(e) if (1..=MAX_EXPONENT).contains(&e) => base = base.pow(e),
                _ => {
                    return err(
                        self.c.line,
                        col,
                        format!("exponent must lie in 1..={MAX_EXPONENT}"),
                    )
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<WeylElement, ParseError> {
        let col = self.c.col();
        match self.c.peek().clone() {
            Tok::Int(_) => {
                let r = self.c.rat()?;
                let s = if self.c.eat(&Tok::Imag) {
                    Scalar::new(BigRational::zero(), r)
                } else {
                    Scalar::from(r)
                };
                Ok(WeylElement::constant(self.modes, s))
            }
            Tok::Imag => {
                self.c.bump();
                Ok(WeylElement::constant(self.modes, Scalar::i()))
            }
            Tok::Identity => {
                self.c.bump();
                Ok(WeylElement::identity(self.modes))
            }
            Tok::Gen(g @ ('a' | 'b'), j) => {
                self.c.bump();
                if j > self.modes {
                    return err(
                        self.c.line,
                        col,
                        format!("{g}{j} needs mode {j} but only {} declared", self.modes),
                    );
                }
                Ok(if g == 'a' {
                    WeylElement::lower(self.modes, j)
                } else {
                    WeylElement::raise(self.modes, j)
                })
            }
            Tok::Gen(g, j) => err(
                self.c.line,
                col,
                format!("`{g}{j}` is not an operator; use aK, bK or I"),
            ),
            Tok::LParen => {
                self.c.bump();
                let e = self.expr()?;
                self.c.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => self
                .c
                .fail("expected a number, `i`, `I`, `aK`, `bK` or `(`"),
        }
    }
}

fn parse_expr_at(
    text: &str,
    line: usize,
    column_offset: usize,
    modes: usize,
) -> Result<WeylElement, ParseError> {
    let mut c = Cursor::new(text, line)?;
    for t in &mut c.toks {
        t.col += column_offset;
    }
    let e = ExprParser { c: &mut c, modes }.expr()?;
    c.expect_end()?;
    Ok(e)
}

/// Parses one operator expression over `modes` modes.
pub fn parse_expr(text: &str, modes: usize) -> Result<WeylElement, ParseError> {
    parse_expr_at(text, 1, 0, modes)
}

fn parse_flavor(word: &str, line: usize) -> Result<Flavor, ParseError> {
    match word {
        "bosonic" => Ok(Flavor::Bosonic),
        "pseudo" => Ok(Flavor::Pseudo),
        _ => err(
            line,
            1,
            format!("unknown flavor `{word}` (bosonic or pseudo)"),
        ),
    }
}

fn one_word<'a>(rest: &'a str, line: usize, key: &str) -> Result<&'a str, ParseError> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    match words.as_slice() {
        [w] => Ok(w),
        _ => err(line, 1, format!("expected `{key} VALUE`")),
    }
}

/// Parses a `.real` document. The name line comes first; `target`/inline
/// algebra and `modes` must precede the assignments.
pub fn parse_realization(text: &str) -> Result<Realization, ParseError> {
    let mut lines = content_lines(text).peekable();
    let Some((line, header)) = lines.next() else {
        return err(1, 1, "empty document");
    };
    let name = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["realization", name] => name.to_string(),
        _ => return err(line, 1, "expected `realization NAME`"),
    };
    let mut algebra: Option<LieAlgebra> = None;
    let mut modes: Option<usize> = None;
    let mut flavor = Flavor::Bosonic;
    let mut slots: Vec<Option<(WeylElement, usize)>> = Vec::new();
    let mut last_line = line;

    while let Some((line, text)) = lines.next() {
        last_line = line;
        let (key, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        match key {
            "target" | "algebra" if algebra.is_some() => {
                return err(line, 1, "target algebra given twice");
            }
            "target" => {
                let t = one_word(rest, line, "target")?;
                let entry = catalog::get(t).or_else(|e| err(line, 1, e.to_string()))?;
                algebra = Some(entry.algebra);
            }
            "algebra" => {
                let mut block = AlgebraBlock::header(text, line)?;
                while let Some((l, t)) = lines.next_if(|(_, t)| t.starts_with('[')) {
                    block.push(t, l)?;
                    last_line = l;
                }
                algebra = Some(block.finish()?);
            }
            "modes" => {
                if modes.is_some() {
                    return err(line, 1, "modes given twice");
                }
                let m = one_word(rest, line, "modes")?;
                let m: usize = m
                    .parse()
                    .or_else(|_| err(line, 1, format!("invalid mode count `{m}`")))?;
                if m == 0 {
                    return err(line, 1, "need at least one mode");
                }
                modes = Some(m);
            }
            "flavor" => flavor = parse_flavor(one_word(rest, line, "flavor")?, line)?,
            _ => {
                let (Some(l), Some(m)) = (&algebra, modes) else {
                    return err(
                        line,
                        1,
                        "assignments need `target` (or `algebra`) and `modes` first",
                    );
                };
                if slots.is_empty() {
                    slots = vec![None; l.dim()];
                }
                let Some((lhs, rhs)) = text.split_once('=') else {
                    return err(line, 1, "expected `vK = EXPR`");
                };
                let mut c = Cursor::new(lhs, line)?;
                let col = c.col();
                let k = match c.bump() {
                    Tok::Gen('v', k) => k,
                    _ => return err(line, col, "expected a generator `vK`"),
                };
                c.expect_end()?;
                if k > l.dim() {
                    return err(
                        line,
                        col,
                        format!(
                            "unknown generator v{k}: the target has dimension {}",
                            l.dim()
                        ),
                    );
                }
                if let Some((_, prev)) = &slots[k - 1] {
                    return err(line, col, format!("v{k} already assigned on line {prev}"));
                }
                let offset = text.len() - rhs.len();
                let e = parse_expr_at(rhs, line, offset, m)?;
                slots[k - 1] = Some((e, line));
            }
        }
    }

    let Some(algebra) = algebra else {
        return err(last_line, 1, "missing `target` or `algebra`");
    };
    let Some(modes) = modes else {
        return err(last_line, 1, "missing `modes`");
    };
    if slots.is_empty() {
        slots = vec![None; algebra.dim()];
    }
    let mut assignment = Vec::with_capacity(slots.len());
    for (k, slot) in slots.into_iter().enumerate() {
        match slot {
            Some((e, _)) => assignment.push(e),
            None => return err(last_line, 1, format!("v{} is never assigned", k + 1)),
        }
    }
    Ok(Realization {
        name,
        algebra,
        modes,
        flavor,
        assignment,
        warnings: Vec::new(),
    })
}

/// Writes a realization in the `.real` syntax, naming the target when it is
/// a catalog entry and inlining the algebra otherwise.
pub fn serialize_realization(r: &Realization) -> String {
    let mut out = format!("realization {}\n", r.name);
    let named = r
        .algebra
        .label()
        .and_then(|lab| catalog::get(lab).ok())
        .filter(|e| e.algebra == r.algebra);
    match named {
        Some(e) => writeln!(out, "target {}", e.name).unwrap(),
        None => out.push_str(&serialize_algebra(&r.algebra)),
    }
    let flavor = match r.flavor {
        Flavor::Bosonic => "bosonic",
        Flavor::Pseudo => "pseudo",
    };
    writeln!(out, "flavor {flavor}\nmodes {}", r.modes).unwrap();
    for (k, v) in r.assignment.iter().enumerate() {
        writeln!(out, "v{} = {v}", k + 1).unwrap();
    }
    out
}

/// Parses `(i,j)=SCALAR, …` into 1-based cocycle entries.
pub fn parse_cocycle_entries(text: &str) -> Result<Vec<(usize, usize, Scalar)>, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut out = Vec::new();
    let pos = |rest: &str| compact.len() - rest.len() + 1;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return err(1, pos(rest), "expected `(i,j)=SCALAR`");
        };
        let Some((pair, tail)) = body.split_once(')') else {
            return err(1, pos(rest), "unclosed `(`");
        };
        let index = |t: &str| t.parse::<usize>().ok().filter(|&k| k >= 1);
        let (i, j) = match pair.split_once(',') {
            Some((i, j)) => match (index(i), index(j)) {
                (Some(i), Some(j)) => (i, j),
                _ => return err(1, pos(body), format!("invalid index pair `({pair})`")),
            },
            None => return err(1, pos(body), format!("invalid index pair `({pair})`")),
        };
        let Some(tail) = tail.strip_prefix('=') else {
            return err(1, pos(tail), "expected `=`");
        };
        let end = tail.find(",(").unwrap_or(tail.len());
        let value: Scalar = tail[..end]
            .parse()
            .or_else(|e: crate::scalar::ParseScalarError| err(1, pos(tail), e.to_string()))?;
        out.push((i, j, value));
        rest = tail[end..].strip_prefix(',').unwrap_or(&tail[end..]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::builtin_realization;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn heisenberg_document() {
        let l = parse_algebra("algebra h1 dim 3\n[1,2] = v3").unwrap();
        assert_eq!(l, catalog::heisenberg(1).unwrap().with_label("h1"));
        let a = parse_algebra("algebra a dim 2").unwrap();
        assert!(a.is_abelian());
    }

    #[test]
    fn coefficients_and_jacobi() {
        let l = parse_algebra("algebra x dim 3\n[1,2] = 1/2 v3 + i v1").unwrap();
        assert_eq!(*l.structure_constant(0, 1, 2), Scalar::ratio(1, 2));
        assert_eq!(*l.structure_constant(0, 1, 0), Scalar::i());
        let e = parse_algebra("algebra x dim 4\n[1,2] = v3\n\n[3,4] = v1").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("Jacobi"), "{e}");

        let l = parse_algebra("algebra y dim 4\n[1,2] = -1+2i v3 - 2/3i*v4\n[1,3]=v4").unwrap();
        assert_eq!(*l.structure_constant(0, 1, 2), Scalar::gaussian(-1, 2));
        assert_eq!(
            *l.structure_constant(0, 1, 3),
            Scalar::new(BigRational::zero(), BigRational::new((-2).into(), 3.into()))
        );
        assert_eq!(*l.structure_constant(0, 2, 3), Scalar::one());
    }

    #[test]
    fn positioned_errors() {
        let e = parse_algebra("algebra x dim 3\n# c\n[1,4] = v3").unwrap_err();
        assert_eq!((e.line, e.column), (3, 4));
        let e = parse_algebra("algebra x dim 3\n[1,2] = v3 v2").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_algebra("algebra x dim 3\n[1,2] = v3\n[2,1] = v3").unwrap_err();
        assert!(e.message.contains("already"));
        assert!(parse_algebra("").is_err());
        assert!(parse_algebra("algebra x dim 3\n[1,2] = w3").is_err());
    }

    #[test]
    fn reversed_bracket_is_negated() {
        let l = parse_algebra("algebra h dim 3\n[2,1] = v3").unwrap();
        assert_eq!(*l.structure_constant(0, 1, 2), Scalar::from_int(-1));
    }

    #[test]
    fn serialization_round_trips() {
        for e in catalog::list() {
            let text = serialize_algebra(&e.algebra);
            assert_eq!(parse_algebra(&text).unwrap(), e.algebra, "{text}");
        }
        let tricky =
            parse_algebra("algebra t dim 4\n[1,2] = -1-2i v3 + 1-i v4 - 1/2i v3\n[1,3] = -i v4")
                .unwrap();
        assert_eq!(parse_algebra(&serialize_algebra(&tricky)).unwrap(), tricky);
    }

    #[test]
    fn cocycle_entries() {
        let e = parse_cocycle_entries("(1,3)=1, (2,4) = -1/2+i").unwrap();
        assert_eq!(e, vec![(1, 3, s(1)), (2, 4, "-1/2+i".parse().unwrap())]);
        assert!(parse_cocycle_entries("(1,3)").is_err());
        assert!(parse_cocycle_entries("(0,3)=1").is_err());
        assert!(parse_cocycle_entries("(1,3)=x").is_err());
        assert_eq!(parse_cocycle_entries("").unwrap(), vec![]);
    }

    #[test]
    fn expressions() {
        let half_b2 = parse_expr("1/2 * b1^2", 1).unwrap();
        assert_eq!(
            half_b2,
            WeylElement::raise(1, 1).pow(2).scale(&Scalar::ratio(1, 2))
        );
        assert_eq!(parse_expr("I", 2).unwrap(), WeylElement::identity(2));
        let ba = parse_expr("b1 * a2", 2).unwrap();
        assert_eq!(ba, &WeylElement::raise(2, 1) * &WeylElement::lower(2, 2));
        assert_eq!(
            parse_expr("a1 b1 - b1 a1", 1).unwrap(),
            WeylElement::identity(1)
        );
        assert_eq!(
            parse_expr("-(2i)*a1^2", 1).unwrap(),
            WeylElement::lower(1, 1)
                .pow(2)
                .scale(&Scalar::gaussian(0, -2))
        );
        assert!(parse_expr("a3", 2).is_err());
        assert!(parse_expr("b1^0", 1).is_err());
        assert!(parse_expr("v1", 1).is_err());
        assert!(parse_expr("(a1", 1).is_err());
    }

    #[test]
    fn display_is_parseable() {
        let x = parse_expr("(1+i)*I - a2 + 1/2*b1^2 - i b1 a2 + 3 b2^2 a1", 2).unwrap();
        assert_eq!(parse_expr(&x.to_string(), 2).unwrap(), x);
    }

    const L55: &str = "realization l55\ntarget L5_5\nmodes 2\nv1 = a1\nv2 = a2 + 1/2*b1^2\nv3 = b1\nv4 = b2\nv5 = I\n";

    #[test]
    fn realization_document() {
        let r = parse_realization(L55).unwrap();
        assert_eq!(
            r.assignment,
            builtin_realization("L5_5-bosonic").unwrap().assignment
        );
        assert!(r.verify().unwrap().is_homomorphism);

        let inline =
            "realization h\nalgebra h1 dim 3\n[1,2] = v3\nmodes 1\nv1 = a1\nv2 = b1\nv3 = I";
        let r = parse_realization(inline).unwrap();
        assert_eq!(r.algebra.dim(), 3);
        assert!(r.verify().unwrap().is_homomorphism);
    }

    #[test]
    fn realization_errors() {
        let e = parse_realization(&L55.replace("v5 = I", "v6 = I")).unwrap_err();
        assert!(e.message.contains("unknown generator"), "{e}");
        let e = parse_realization(&L55.replace("v4 = b2", "v4 = b3")).unwrap_err();
        assert_eq!((e.line, e.column), (7, 6));
        let e = parse_realization(&L55.replace("v5 = I", "v1 = I")).unwrap_err();
        assert!(e.message.contains("already assigned"));
        let e = parse_realization(&L55.replace("v5 = I\n", "")).unwrap_err();
        assert!(e.message.contains("v5 is never assigned"));
        assert!(parse_realization(&L55.replace("L5_5", "L9_9")).is_err());
    }

    #[test]
    fn realization_round_trip() {
        for name in [
            "L4_3-pseudo",
            "L5_8-bosonic",
            "L5_5-pseudo",
            "H(2)-shifted",
            "H(1)+A(2)",
        ] {
            let r = builtin_realization(name).unwrap();
            let text = serialize_realization(&r);
            let back = parse_realization(&text).unwrap();
            assert_eq!(back.assignment, r.assignment, "{text}");
            assert_eq!(back.algebra, r.algebra);
            assert_eq!(back.flavor, r.flavor);
        }
    }
}
