use std::f64::consts::{E, PI};

use super::token::{tokenize, Spanned, Tok};
use super::{BinOp, Func, Node};
use crate::error::{Error, Result};

/// Recursive-descent parser with the usual precedence:
/// `^` (right-associative) binds tighter than unary minus, which binds
/// tighter than `*`/`/`, which bind tighter than `+`/`-`.
pub(crate) struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    src_len: usize,
    declared: Option<String>,
    inferred: Option<String>,
}

impl Parser {
    pub(crate) fn new(src: &str, declared: Option<&str>) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            src_len: src.len(),
            declared: declared.map(str::to_owned),
            inferred: None,
        })
    }

    pub(crate) fn parse(mut self) -> Result<(Node, Option<String>)> {
        if self.toks.is_empty() {
            return Err(Error::Syntax {
                offset: 0,
                expected: "an expression".into(),
            });
        }
        let node = self.expr()?;
        if let Some(sp) = self.toks.get(self.pos) {
            return Err(Error::Syntax {
                offset: sp.offset,
                expected: "an operator or end of input".into(),
            });
        }
        let var = self.declared.or(self.inferred);
        Ok((node, var))
    }

    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let sp = self.toks.get(self.pos).cloned();
        if sp.is_some() {
            self.pos += 1;
        }
        sp
    }

    fn offset_here(&self) -> usize {
        self.peek().map(|s| s.offset).unwrap_or(self.src_len)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(sp) if sp.tok == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(Error::Syntax {
                offset: self.offset_here(),
                expected: what.into(),
            }),
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().map(|s| &s.tok) {
                Some(Tok::Plus) => BinOp::Add,
                Some(Tok::Minus) => BinOp::Sub,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek().map(|s| &s.tok) {
                Some(Tok::Star) => BinOp::Mul,
                Some(Tok::Slash) => BinOp::Div,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Node> {
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Minus)) {
            self.pos += 1;
            let inner = self.factor()?;
            return Ok(Node::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
            self.pos += 1;
            // The exponent goes back through `factor` so `x^-2` works and
            // `x^y^z` associates to the right.
            let exp = self.factor()?;
            return Ok(Node::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        let sp = match self.bump() {
            Some(sp) => sp,
            None => {
                return Err(Error::Syntax {
                    offset: self.src_len,
                    expected: "a number, identifier, or `(`".into(),
                })
            }
        };
        match sp.tok {
            Tok::Num(v) => Ok(Node::Const(v)),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => self.ident(name, sp.offset),
            _ => Err(Error::Syntax {
                offset: sp.offset,
                expected: "a number, identifier, or `(`".into(),
            }),
        }
    }

    fn ident(&mut self, name: String, offset: usize) -> Result<Node> {
        if let Some(func) = Func::from_name(&name) {
            self.expect(Tok::LParen, "`(` after function name")?;
            let arg = self.expr()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(Node::Call(func, Box::new(arg)));
        }
        match name.as_str() {
            "pi" => return Ok(Node::Const(PI)),
            "e" => return Ok(Node::Const(E)),
            _ => {}
        }
        if let Some(declared) = &self.declared {
            if *declared == name {
                return Ok(Node::Var);
            }
            return Err(Error::UnknownIdentifier { name, offset });
        }
        match &self.inferred {
            None => {
                self.inferred = Some(name);
                Ok(Node::Var)
            }
            Some(v) if *v == name => Ok(Node::Var),
            Some(_) => Err(Error::UnknownIdentifier { name, offset }),
        }
    }
}
