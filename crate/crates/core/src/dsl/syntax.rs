//! Lexer, recursive-descent parser and canonical renderer for the expression
//! language.

use std::fmt;

use super::builtins;
use super::DslError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            let v = s.parse::<u64>().map_err(|_| DslError::Syntax {
                line: l0,
                col: c0,
                msg: format!("integer `{s}` is too large"),
            })?;
            out.push(Token {
                tok: Tok::Int(v),
                line: l0,
                col: c0,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                col: c0,
            });
            continue;
        }
        if ";=+*&:^<>,()".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line: l0,
                col: c0,
            });
            i += 1;
            col += 1;
            continue;
        }
        return Err(DslError::Syntax {
            line: l0,
            col: c0,
            msg: format!("unexpected character `{c}`"),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// A monomial literal as written: `(variable, exponent)` factors with
/// 1-based variables. No factors means `1`.
pub type MonoLit = Vec<(usize, u32)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Mul,
    Meet,
    Colon,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Mul => '*',
            BinOp::Meet => '&',
            BinOp::Colon => ':',
        }
    }

    fn level(self) -> u8 {
        match self {
            BinOp::Add => 0,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    Int(u64),
    /// Generator list; empty for `<0>`.
    Ideal(Vec<MonoLit>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Call(String, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring(usize),
    Assign(String, Expr),
    Expr(Expr),
}

pub type Program = Vec<Stmt>;

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: String) -> Result<T, DslError> {
        let t = self.peek();
        Err(DslError::Syntax {
            line: t.line,
            col: t.col,
            msg,
        })
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), DslError> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected `{c}`, found {}", self.peek().tok))
        }
    }

    fn expect_int(&mut self) -> Result<u64, DslError> {
        match self.peek().tok {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            ref t => self.error(format!("expected an integer, found {t}")),
        }
    }

    fn expect_u32(&mut self) -> Result<u32, DslError> {
        let v = self.expect_int()?;
        u32::try_from(v).or_else(|_| self.error(format!("exponent {v} is too large")))
    }

    fn program(&mut self) -> Result<Program, DslError> {
        let mut out = Vec::new();
        loop {
            while self.is_sym(';') {
                self.bump();
            }
            if self.peek().tok == Tok::Eof {
                return Ok(out);
            }
            out.push(self.stmt()?);
            if self.peek().tok != Tok::Eof {
                self.expect_sym(';')?;
            }
        }
    }

    fn stmt(&mut self) -> Result<Stmt, DslError> {
        if let Tok::Ident(name) = &self.peek().tok {
            if name == "ring" {
                if let Tok::Int(_) = self.peek_at(1) {
                    self.bump();
                    let n = self.expect_int()?;
                    return Ok(Stmt::Ring(n as usize));
                }
            }
            if *self.peek_at(1) == Tok::Sym('=') {
                let name = name.clone();
                if name == "ring" || builtins::lookup(&name).is_some() {
                    return self.error(format!("`{name}` is reserved"));
                }
                self.bump();
                self.bump();
                return Ok(Stmt::Assign(name, self.expr()?));
            }
        }
        Ok(Stmt::Expr(self.expr()?))
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        while self.is_sym('+') {
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Binary(BinOp::Add, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek().tok {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('&') => BinOp::Meet,
                Tok::Sym(':') => BinOp::Colon,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if self.is_sym('^') {
            self.bump();
            let k = self.expect_u32()?;
            return Ok(Expr::Power(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::Int(v))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Sym('<') => self.ideal_lit(),
            Tok::Ident(name) => {
                self.bump();
                if !self.is_sym('(') {
                    return Ok(Expr::Name(name));
                }
                let spec = builtins::lookup(&name).ok_or_else(|| DslError::UnknownName {
                    line: t.line,
                    col: t.col,
                    name: name.clone(),
                })?;
                self.bump();
                let mut args = Vec::new();
                if !self.is_sym(')') {
                    args.push(self.expr()?);
                    while self.is_sym(',') {
                        self.bump();
                        args.push(self.expr()?);
                    }
                }
                self.expect_sym(')')?;
                if args.len() < spec.min_args || args.len() > spec.max_args {
                    return Err(DslError::Arity {
                        line: t.line,
                        col: t.col,
                        name,
                        expected: spec.signature,
                        got: args.len(),
                    });
                }
                Ok(Expr::Call(name, args))
            }
            ref other => self.error(format!("expected an expression, found {other}")),
        }
    }

    fn ideal_lit(&mut self) -> Result<Expr, DslError> {
        self.expect_sym('<')?;
        if self.peek().tok == Tok::Int(0) && *self.peek_at(1) == Tok::Sym('>') {
            self.bump();
            self.bump();
            return Ok(Expr::Ideal(Vec::new()));
        }
        let mut gens = vec![self.mono()?];
        while self.is_sym(',') {
            self.bump();
            gens.push(self.mono()?);
        }
        self.expect_sym('>')?;
        Ok(Expr::Ideal(gens))
    }

    fn mono(&mut self) -> Result<MonoLit, DslError> {
        if self.peek().tok == Tok::Int(1) {
            self.bump();
            return Ok(Vec::new());
        }
        let mut factors = vec![self.var()?];
        while self.is_sym('*') {
            self.bump();
            factors.push(self.var()?);
        }
        Ok(factors)
    }

    fn var(&mut self) -> Result<(usize, u32), DslError> {
        let index = match &self.peek().tok {
            Tok::Ident(s) => parse_var_name(s),
            _ => None,
        };
        let Some(index) = index else {
            return self.error(format!(
                "expected a variable like `x1`, found {}",
                self.peek().tok
            ));
        };
        self.bump();
        let exp = if self.is_sym('^') {
            self.bump();
            self.expect_u32()?
        } else {
            1
        };
        Ok((index, exp))
    }
}

fn parse_var_name(s: &str) -> Option<usize> {
    let digits = s.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

pub fn parse(text: &str) -> Result<Program, DslError> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.program()
}

/// Parses a single expression.
pub fn parse_expr(text: &str) -> Result<Expr, DslError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return p.error(format!("unexpected {}", p.peek().tok));
    }
    Ok(e)
}

fn render_mono(m: &MonoLit, out: &mut String) {
    if m.is_empty() {
        out.push('1');
    }
    for (k, &(v, e)) in m.iter().enumerate() {
        if k > 0 {
            out.push('*');
        }
        out.push_str(&format!("x{v}"));
        if e != 1 {
            out.push_str(&format!("^{e}"));
        }
    }
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Binary(op, ..) => op.level(),
        Expr::Power(..) => 2,
        _ => 3,
    }
}

fn render_at(e: &Expr, min: u8, out: &mut String) {
    if level(e) < min {
        out.push('(');
        render_at(e, 0, out);
        out.push(')');
        return;
    }
    match e {
        Expr::Name(n) => out.push_str(n),
        Expr::Int(i) => out.push_str(&i.to_string()),
        Expr::Ideal(gens) => {
            out.push('<');
            if gens.is_empty() {
                out.push('0');
            }
            for (k, m) in gens.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                render_mono(m, out);
            }
            out.push('>');
        }
        Expr::Binary(op, l, r) => {
            render_at(l, op.level(), out);
            out.push_str(&format!(" {} ", op.symbol()));
            render_at(r, op.level() + 1, out);
        }
        Expr::Power(b, k) => {
            render_at(b, 3, out);
            out.push_str(&format!("^{k}"));
        }
        Expr::Call(name, args) => {
            out.push_str(name);
            out.push('(');
            for (k, a) in args.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                render_at(a, 0, out);
            }
            out.push(')');
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        render_at(self, 0, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring(n) => write!(f, "ring {n}"),
            Stmt::Assign(name, e) => write!(f, "{name} = {e}"),
            Stmt::Expr(e) => write!(f, "{e}"),
        }
    }
}

/// Largest variable index in ideal literals, 1-based; 0 if none.
pub fn max_variable(e: &Expr) -> usize {
    match e {
        Expr::Name(_) | Expr::Int(_) => 0,
        Expr::Ideal(gens) => gens.iter().flatten().map(|&(v, _)| v).max().unwrap_or(0),
        Expr::Binary(_, l, r) => max_variable(l).max(max_variable(r)),
        Expr::Power(b, _) => max_variable(b),
        Expr::Call(_, args) => args.iter().map(max_variable).max().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn precedence() {
        let e = parse_expr("I + J * K ^ 2 : L").unwrap();
        assert_eq!(e.to_string(), "I + J * K^2 : L");
        match e {
            Expr::Binary(BinOp::Add, _, r) => match *r {
                Expr::Binary(BinOp::Colon, l, _) => {
                    assert!(matches!(*l, Expr::Binary(BinOp::Mul, _, _)))
                }
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_expr("I : (J * K)").unwrap().to_string(),
            "I : (J * K)"
        );
        assert_eq!(parse_expr("(I + J)^2").unwrap().to_string(), "(I + J)^2");
    }

    #[test]
    fn ideal_literals() {
        assert_eq!(
            parse_expr("<x1^3, x1*x2^2>").unwrap(),
            Expr::Ideal(vec![vec![(1, 3)], vec![(1, 1), (2, 2)]])
        );
        assert_eq!(parse_expr("<1>").unwrap(), Expr::Ideal(vec![vec![]]));
        assert_eq!(parse_expr("<0>").unwrap(), Expr::Ideal(vec![]));
        assert!(parse_expr("<y1>").is_err());
        assert!(parse_expr("<x0>").is_err());
    }

    #[test]
    fn program_statements() {
        let p = parse("ring 3; I = <x1^3, x1*x2^2>; I : <x2>").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p[0], Stmt::Ring(3));
        assert!(matches!(p[1], Stmt::Assign(..)));
        assert_eq!(p[2].to_string(), "I : <x2>");
        assert!(parse("ring 3;\n# comment\nI = <x1>;;").is_ok());
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse("ring 3;\nI = <x1 x2>") {
            Err(DslError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 9)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("frobnicate(<x1>)"),
            Err(DslError::UnknownName { .. })
        ));
        assert!(matches!(
            parse("radical(<x1>, <x2>)"),
            Err(DslError::Arity { .. })
        ));
        assert!(matches!(parse("I = $"), Err(DslError::Syntax { .. })));
        assert!(parse("radical = <x1>").is_err());
    }

    fn arb_mono() -> impl Strategy<Value = MonoLit> {
        proptest::collection::vec((1usize..6, 1u32..4), 0..3)
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            "[A-Z][a-z0-9]{0,2}".prop_map(Expr::Name),
            proptest::collection::vec(arb_mono(), 0..3).prop_map(Expr::Ideal),
        ];
        leaf.prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                (
                    prop_oneof![
                        Just(BinOp::Add),
                        Just(BinOp::Mul),
                        Just(BinOp::Meet),
                        Just(BinOp::Colon)
                    ],
                    inner.clone(),
                    inner.clone()
                )
                    .prop_map(|(op, l, r)| Expr::Binary(
                        op,
                        Box::new(l),
                        Box::new(r)
                    )),
                (inner.clone(), 1u32..4).prop_map(|(b, k)| Expr::Power(Box::new(b), k)),
                (inner.clone(), 1u64..4)
                    .prop_map(|(a, k)| Expr::Call("symbolic".into(), vec![a, Expr::Int(k)])),
                inner.prop_map(|a| Expr::Call("radical".into(), vec![a])),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(e in arb_expr()) {
            let text = e.to_string();
            let back = parse_expr(&text).unwrap();
            prop_assert_eq!(&back, &e);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
