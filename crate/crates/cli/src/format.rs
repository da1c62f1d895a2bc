//! Text formats for networks and digraphs.
//!
//! A network file is either a TABLE:
//!
//! ```text
//! n 3
//! 000 000
//! 001 000
//! ...
//! ```
//!
//! with the `2^n` rows in lexicographic order, or a list of FORMULAS:
//!
//! ```text
//! f1 = x1 & x2 & x3
//! f2 = x1 & !x3
//! f3 = x2 & !x1
//! ```
//!
//! A digraph file is a header `n <int>` followed by one `i j` line per arc.
//! In every format `#` starts a comment and blank lines are ignored.

use std::fmt;

use bnfix_core::{BooleanNetwork, Digraph, State};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Non-blank lines with comments stripped, as (1-based line number, text).
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let body = line.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((k + 1, body))
    })
}

fn column_of(line: &str, token: &str) -> usize {
    // Tokens are subslices of `line`.
    (token.as_ptr() as usize - line.as_ptr() as usize) + 1
}

fn parse_header(line_no: usize, line: &str) -> Result<usize, ParseError> {
    let mut tokens = line.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some("n"), Some(v), None) => v
            .parse::<usize>()
            .map_err(|_| ParseError::new(line_no, column_of(line, v), format!("`{v}` is not a count"))),
        _ => Err(ParseError::new(line_no, 1, "expected header `n <int>`")),
    }
}

/// Parses either network form; the form is chosen by the first line.
pub fn parse_network(text: &str) -> Result<BooleanNetwork, ParseError> {
    match significant_lines(text).next() {
        None => Err(ParseError::new(1, 1, "empty network file")),
        Some((_, line)) if line.trim_start().starts_with("n ") || line.trim() == "n" => {
            parse_table(text)
        }
        Some(_) => parse_formulas(text),
    }
}

fn parse_table(text: &str) -> Result<BooleanNetwork, ParseError> {
    let mut lines = significant_lines(text);
    let (header_no, header) = lines.next().expect("caller checked");
    let n = parse_header(header_no, header)?;
    if n == 0 || n > bnfix_core::network::MAX_COMPONENTS {
        return Err(ParseError::new(header_no, 1, format!("unsupported component count {n}")));
    }
    let size = 1usize << n;
    let mut images = Vec::with_capacity(size);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(line_no, 1, "expected `<state> <image>`"));
        }
        let mut states = [0u32; 2];
        for (slot, tok) in states.iter_mut().zip(&tokens) {
            let col = column_of(line, tok);
            if tok.len() != n {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("`{tok}` has {} bits, expected {n}", tok.len()),
                ));
            }
            *slot = tok
                .parse::<State>()
                .map_err(|e| ParseError::new(line_no, col, e.to_string()))?
                .index();
        }
        let expected = images.len();
        if expected >= size {
            return Err(ParseError::new(line_no, 1, "more rows than states"));
        }
        if states[0] as usize != expected {
            let want = State::new(n, expected as u32).expect("in range");
            return Err(ParseError::new(
                line_no,
                column_of(line, tokens[0]),
                format!("expected row for state {want} (rows are in lexicographic order)"),
            ));
        }
        images.push(states[1]);
    }
    if images.len() != size {
        let want = State::new(n, images.len() as u32).expect("in range");
        return Err(ParseError::new(last_line, 1, format!("missing row for state {want}")));
    }
    BooleanNetwork::from_images(n, images).map_err(|e| ParseError::new(header_no, 1, e.to_string()))
}

/// Boolean expression over the components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Var(usize),
    Not(Box<Expr>),
    And(Vec<Expr>),
    Or(Vec<Expr>),
}

impl Expr {
    pub fn eval(&self, x: State) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(i) => x.get(*i),
            Expr::Not(e) => !e.eval(x),
            Expr::And(es) => es.iter().all(|e| e.eval(x)),
            Expr::Or(es) => es.iter().any(|e| e.eval(x)),
        }
    }

    fn max_var(&self) -> usize {
        match self {
            Expr::Const(_) => 0,
            Expr::Var(i) => *i,
            Expr::Not(e) => e.max_var(),
            Expr::And(es) | Expr::Or(es) => es.iter().map(Expr::max_var).max().unwrap_or(0),
        }
    }
}

struct ExprParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line_no: usize,
    line: &'a str,
}

impl ExprParser<'_> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        let byte = self.chars.get(self.pos).map_or(self.line.len(), |&(b, _)| b);
        let column = self.line[..byte].chars().count() + 1;
        ParseError::new(self.line_no, column, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while matches!(self.peek(), Some('|' | '∨')) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Or(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Some('&' | '∧')) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::And(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('!' | '¬') => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.factor()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('0') => {
                self.pos += 1;
                Ok(Expr::Const(false))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Expr::Const(true))
            }
            Some('x') => {
                let start = self.pos;
                self.pos += 1;
                let mut digits = String::new();
                while let Some(&(_, c)) = self.chars.get(self.pos) {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    digits.push(c);
                    self.pos += 1;
                }
                match digits.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(Expr::Var(i)),
                    _ => {
                        self.pos = start;
                        Err(self.err("expected a variable `x<i>` with i >= 1"))
                    }
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parses one Boolean expression on its own.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    parse_expr_at(1, text, 0)
}

fn parse_expr_at(line_no: usize, line: &str, offset: usize) -> Result<Expr, ParseError> {
    let mut p = ExprParser {
        chars: line.char_indices().filter(|&(b, _)| b >= offset).collect(),
        pos: 0,
        line_no,
        line,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

fn parse_formulas(text: &str) -> Result<BooleanNetwork, ParseError> {
    let mut defs: Vec<Option<(usize, Expr)>> = Vec::new();
    let mut last_line = 1;
    for (line_no, line) in significant_lines(text) {
        last_line = line_no;
        let Some(eq) = line.find('=') else {
            return Err(ParseError::new(line_no, 1, "expected `f<i> = <expr>`"));
        };
        let lhs = line[..eq].trim();
        let index = lhs
            .strip_prefix('f')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| {
                ParseError::new(line_no, column_of(line, lhs), format!("`{lhs}` is not a component name"))
            })?;
        let expr = parse_expr_at(line_no, line, eq + 1)?;
        if defs.len() < index {
            defs.resize(index, None);
        }
        if defs[index - 1].is_some() {
            return Err(ParseError::new(line_no, 1, format!("f{index} is defined twice")));
        }
        defs[index - 1] = Some((line_no, expr));
    }
    let n = defs.len();
    if n == 0 {
        return Err(ParseError::new(last_line, 1, "no component defined"));
    }
    if n > bnfix_core::network::MAX_COMPONENTS {
        return Err(ParseError::new(last_line, 1, format!("unsupported component count {n}")));
    }
    let mut exprs = Vec::with_capacity(n);
    for (k, d) in defs.into_iter().enumerate() {
        let (line_no, e) =
            d.ok_or_else(|| ParseError::new(last_line, 1, format!("undefined component f{}", k + 1)))?;
        if e.max_var() > n {
            return Err(ParseError::new(
                line_no,
                1,
                format!("variable x{} exceeds the {n} defined components", e.max_var()),
            ));
        }
        exprs.push(e);
    }
    BooleanNetwork::from_components(n, |i, x| exprs[i - 1].eval(x))
        .map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Canonical TABLE text.
pub fn emit_network(f: &BooleanNetwork) -> String {
    let mut out = format!("n {}\n", f.n());
    for x in State::all(f.n()) {
        out.push_str(&format!("{} {}\n", x, f.eval(x)));
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = significant_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty digraph file"))?;
    let n = parse_header(header_no, header)?;
    let mut g = Digraph::new(n);
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(line_no, 1, "expected `<i> <j>`"));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            let col = column_of(line, tok);
            let v = tok
                .parse::<usize>()
                .map_err(|_| ParseError::new(line_no, col, format!("`{tok}` is not a vertex")))?;
            if v == 0 || v > n {
                return Err(ParseError::new(line_no, col, format!("vertex {v} out of range 1..={n}")));
            }
            *slot = v;
        }
        let fresh = g.add_arc(ends[0], ends[1]).expect("checked range");
        if !fresh {
            return Err(ParseError::new(line_no, 1, format!("duplicate arc {} {}", ends[0], ends[1])));
        }
    }
    Ok(g)
}

/// Canonical digraph text: header, then arcs in lexicographic order.
pub fn emit_digraph(g: &Digraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (i, j) in g.arcs() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
