//! The ideal-file format.
//!
//! ```text
//! # comments run to the end of the line
//! ring: x, y, z
//! char: 0
//! ideal:
//! z^2 - x*y
//! y*z
//! ```
//!
//! Variables are listed in ring order: the first name is x₁. Every
//! polynomial line must be homogeneous and nonzero, products need an
//! explicit `*`, and coefficients are integers or fractions like `3/4`.

use crate::exponent::ExponentVector;
use crate::ring::{RingContext, RingError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A parsed file: ring data plus generators in a field-independent form
/// (rational coefficients attached to exponent vectors, already combined
/// and zero-free).
#[derive(Clone, Debug, PartialEq)]
pub struct IdealFile {
    pub context: RingContext,
    pub generators: Vec<Vec<(BigRational, ExponentVector)>>,
    /// Original line number of each generator, for error reporting.
    pub generator_lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut names_line = 0usize;
    let mut characteristic: u64 = 0;
    let mut in_ideal = false;
    let mut generators = Vec::new();
    let mut generator_lines = Vec::new();
    let mut raw_polys: Vec<(usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("ring:") {
            if names.is_some() {
                return Err(ParseError::new(line_no, 1, "duplicate `ring:` section"));
            }
            let list: Vec<String> = rest
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if list.is_empty() {
                return Err(ParseError::new(line_no, 1, "`ring:` needs variable names"));
            }
            for name in &list {
                if !is_identifier(name) {
                    return Err(ParseError::new(
                        line_no,
                        1,
                        format!("`{name}` is not a valid variable name"),
                    ));
                }
            }
            names = Some(list);
            names_line = line_no;
        } else if let Some(rest) = trimmed.strip_prefix("char:") {
            characteristic = rest.trim().parse::<u64>().map_err(|_| {
                ParseError::new(line_no, 1, "`char:` expects a non-negative integer")
            })?;
        } else if trimmed == "ideal:" {
            in_ideal = true;
        } else if in_ideal {
            raw_polys.push((line_no, trimmed.to_string()));
        } else {
            return Err(ParseError::new(
                line_no,
                1,
                "expected `ring:`, `char:` or `ideal:`",
            ));
        }
    }

    let names = names.ok_or_else(|| ParseError::new(1, 1, "missing `ring:` section"))?;
    if !in_ideal {
        return Err(ParseError::new(1, 1, "missing `ideal:` section"));
    }
    let context = RingContext::new(names, characteristic).map_err(|e| match e {
        RingError::DuplicateName(name) => ParseError::new(
            names_line,
            1,
            format!("variable `{name}` is declared twice"),
        ),
        RingError::BadCharacteristic(p) => {
            ParseError::new(names_line, 1, format!("characteristic {p} is not prime"))
        }
        RingError::NoVariables => ParseError::new(names_line, 1, "no variables declared"),
    })?;

    for (line_no, source) in raw_polys {
        let terms = parse_polynomial(&source, &context, line_no)?;
        if terms.is_empty() {
            return Err(ParseError::new(line_no, 1, "zero polynomial generator"));
        }
        let degree = terms[0].1.degree();
        if terms.iter().any(|(_, e)| e.degree() != degree) {
            return Err(ParseError::new(
                line_no,
                1,
                "generator is not homogeneous",
            ));
        }
        generators.push(terms);
        generator_lines.push(line_no);
    }
    Ok(IdealFile {
        context,
        generators,
        generator_lines,
    })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Tokenizer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Tokenizer<'a> {
    fn tokenize(source: &'a str, line: usize) -> Result<Vec<(Token, usize)>, ParseError> {
        let mut t = Tokenizer {
            src: source.as_bytes(),
            pos: 0,
            line,
        };
        let mut out = Vec::new();
        while t.pos < t.src.len() {
            let column = t.pos + 1;
            let c = t.src[t.pos];
            match c {
                b' ' | b'\t' => {
                    t.pos += 1;
                }
                b'+' => {
                    out.push((Token::Plus, column));
                    t.pos += 1;
                }
                b'-' => {
                    out.push((Token::Minus, column));
                    t.pos += 1;
                }
                b'*' => {
                    out.push((Token::Star, column));
                    t.pos += 1;
                }
                b'^' => {
                    out.push((Token::Caret, column));
                    t.pos += 1;
                }
                b'/' => {
                    out.push((Token::Slash, column));
                    t.pos += 1;
                }
                b'(' => {
                    out.push((Token::LParen, column));
                    t.pos += 1;
                }
                b')' => {
                    out.push((Token::RParen, column));
                    t.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = t.pos;
                    while t.pos < t.src.len() && t.src[t.pos].is_ascii_digit() {
                        t.pos += 1;
                    }
                    let digits = std::str::from_utf8(&t.src[start..t.pos]).unwrap();
                    out.push((Token::Number(digits.parse().unwrap()), column));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = t.pos;
                    while t.pos < t.src.len()
                        && (t.src[t.pos].is_ascii_alphanumeric() || t.src[t.pos] == b'_')
                    {
                        t.pos += 1;
                    }
                    let ident = std::str::from_utf8(&t.src[start..t.pos]).unwrap();
                    out.push((Token::Ident(ident.to_string()), column));
                }
                other => {
                    return Err(ParseError::new(
                        t.line,
                        column,
                        format!("unexpected character `{}`", other as char),
                    ));
                }
            }
        }
        Ok(out)
    }
}

/// Recursive-descent parser over sparse term lists with exact rational
/// coefficients. Expansion happens here so the result is field
/// independent.
struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    context: &'a RingContext,
    line: usize,
}

type TermList = Vec<(BigRational, ExponentVector)>;

fn parse_polynomial(
    source: &str,
    context: &RingContext,
    line: usize,
) -> Result<TermList, ParseError> {
    let tokens = Tokenizer::tokenize(source, line)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        context,
        line,
    };
    let terms = parser.expression()?;
    if parser.pos != parser.tokens.len() {
        let (_, column) = parser.tokens[parser.pos];
        return Err(ParseError::new(
            line,
            column,
            "trailing input after polynomial (products need an explicit `*`)",
        ));
    }
    Ok(normalize_terms(terms, context))
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.tokens.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column(), message)
    }

    fn expression(&mut self) -> Result<TermList, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            negate_terms(&mut acc);
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc.extend(t);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let mut t = self.term()?;
                    negate_terms(&mut t);
                    acc.extend(t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TermList, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = multiply_terms(&acc, &rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TermList, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exponent = match self.peek() {
                Some(Token::Number(n)) => {
                    let e: u32 = n
                        .to_string()
                        .parse()
                        .map_err(|_| self.error("exponent out of range"))?;
                    self.pos += 1;
                    e
                }
                _ => return Err(self.error("`^` expects a non-negative integer exponent")),
            };
            let mut acc = vec![(
                BigRational::one(),
                ExponentVector::zeros(self.context.num_vars()),
            )];
            for _ in 0..exponent {
                acc = multiply_terms(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<TermList, ParseError> {
        let n = self.context.num_vars();
        match self.peek().cloned() {
            Some(Token::Number(num)) => {
                self.pos += 1;
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Number(den)) => {
                            self.pos += 1;
                            if den.is_zero() {
                                return Err(self.error("zero denominator"));
                            }
                            value /= BigRational::from_integer(den);
                        }
                        _ => return Err(self.error("`/` expects an integer denominator")),
                    }
                }
                Ok(vec![(value, ExponentVector::zeros(n))])
            }
            Some(Token::Ident(name)) => {
                let var = self
                    .context
                    .variable_index(&name)
                    .ok_or_else(|| self.error(format!("undeclared variable `{name}`")))?;
                self.pos += 1;
                Ok(vec![(BigRational::one(), ExponentVector::variable(n, var))])
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.error("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("expected a coefficient, variable or `(`")),
        }
    }
}

fn negate_terms(terms: &mut TermList) {
    for (c, _) in terms.iter_mut() {
        *c = -c.clone();
    }
}

fn multiply_terms(a: &TermList, b: &TermList) -> TermList {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (ca, ea) in a {
        for (cb, eb) in b {
            out.push((ca * cb, ea.mul(eb)));
        }
    }
    out
}

fn normalize_terms(terms: TermList, context: &RingContext) -> TermList {
    use std::collections::HashMap;
    let mut map: HashMap<ExponentVector, BigRational> = HashMap::new();
    for (c, e) in terms {
        debug_assert_eq!(e.len(), context.num_vars());
        *map.entry(e).or_insert_with(BigRational::zero) += c;
    }
    let mut out: TermList = map
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (c, e))
        .collect();
    out.sort_by(|(_, a), (_, b)| crate::order::TermOrder::DegRevLexReversed.compare(b, a));
    out
}

impl IdealFile {
    /// Render a generator for display with the declared variable names.
    pub fn is_monomial_input(&self) -> bool {
        self.generators.iter().all(|g| g.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GORENSTEIN: &str = "ring: x, y, z\nideal:\nz^2 - x*y\ny*z\ny^2\nx*z\nx^2\n";

    #[test]
    fn parses_the_gorenstein_file() {
        let file = parse_ideal_file(GORENSTEIN).unwrap();
        assert_eq!(file.context.num_vars(), 3);
        assert_eq!(file.context.characteristic(), 0);
        assert_eq!(file.generators.len(), 5);
        assert_eq!(file.generators[0].len(), 2);
        assert!(!file.is_monomial_input());
    }

    #[test]
    fn parses_the_monomial_pair() {
        let file = parse_ideal_file("ring: x, y\nideal:\nx^2\ny^2\n").unwrap();
        assert_eq!(file.generators.len(), 2);
        assert!(file.is_monomial_input());
    }

    #[test]
    fn missing_ideal_section_is_an_error() {
        let err = parse_ideal_file("ring: x, y\nx^2\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_ideal_file("ring: x, y\n").unwrap_err();
        assert!(err.message.contains("ideal"));
    }

    #[test]
    fn undeclared_variable_reports_position() {
        let err = parse_ideal_file("ring: x, y\nideal:\nx*w\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.column, 3);
        assert!(err.message.contains("undeclared"));
    }

    #[test]
    fn inhomogeneous_and_zero_generators_rejected() {
        let err = parse_ideal_file("ring: x, y\nideal:\nx^2 + y\n").unwrap_err();
        assert!(err.message.contains("homogeneous"));
        let err = parse_ideal_file("ring: x, y\nideal:\nx - x\n").unwrap_err();
        assert!(err.message.contains("zero polynomial"));
    }

    #[test]
    fn juxtaposition_is_rejected() {
        let err = parse_ideal_file("ring: x, y\nideal:\n2x\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("explicit `*`"));
    }

    #[test]
    fn rational_coefficients_and_parentheses() {
        let file = parse_ideal_file("ring: x, y\nideal:\n1/2*x^2 - 3/4*(x*y + y^2)\n").unwrap();
        assert_eq!(file.generators[0].len(), 3);
    }

    #[test]
    fn comments_and_char_line() {
        let file =
            parse_ideal_file("# fixture\nring: x, y # names\nchar: 7\nideal:\nx^2 # square\n")
                .unwrap();
        assert_eq!(file.context.characteristic(), 7);
        assert_eq!(file.generators.len(), 1);
        let err = parse_ideal_file("ring: x, y\nchar: 6\nideal:\nx^2\n").unwrap_err();
        assert!(err.message.contains("not prime"));
    }

    mod fuzz {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // arbitrary input may fail to parse but must never panic
            #[test]
            fn parser_never_panics(chars in proptest::collection::vec(any::<char>(), 0..120)) {
                let text: String = chars.into_iter().collect();
                let _ = parse_ideal_file(&text);
                let framed = format!("ring: x, y\nideal:\n{text}\n");
                let _ = parse_ideal_file(&framed);
            }
        }
    }
}
