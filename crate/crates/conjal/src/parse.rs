//! Expression grammar shared by every CLI subcommand:
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '~' factor | 'inv' '(' expr ')' | '(' expr ')' | 'x'
//!         | scalar | basisname
//! ```
//!
//! Conjugation binds tighter than `*`, which binds tighter than `+`/`-`;
//! `*` associates to the left and the parser keeps the tree, so
//! nonassociative ambients evaluate exactly what was written. `~x` is the
//! conjugated variable. Scalar literals are integers everywhere and `p/q`
//! over the rationals. Basis names come from the ambient algebra, with
//! `e<k>` accepted as an alias in every algebra.

use crate::algebra::{AlgebraSpec, Element};
use crate::error::{Error, Result};
use crate::polynomial::{MixedPolynomial, Polynomial};
use crate::rational::RationalExpr;
use crate::scalar::Scalar;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
pub enum ExprAst {
    Num(Scalar),
    Basis(usize),
    Var,
    ConjVar,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Conj(Box<ExprAst>),
    Inv(Box<ExprAst>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Tilde,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let at = self.pos;
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((at, Tok::Plus));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((at, Tok::Minus));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((at, Tok::Star));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((at, Tok::LParen));
                    self.pos += 1;
                }
                b')' => {
                    out.push((at, Tok::RParen));
                    self.pos += 1;
                }
                b'~' => {
                    out.push((at, Tok::Tilde));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    // eat `/digits` as part of one rational literal
                    if self.pos + 1 < self.src.len()
                        && self.src[self.pos] == b'/'
                        && self.src[self.pos + 1].is_ascii_digit()
                    {
                        self.pos += 1;
                        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                            self.pos += 1;
                        }
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos])
                        .expect("ascii digits")
                        .to_string();
                    out.push((start, Tok::Num(text)));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos])
                        .expect("ascii ident")
                        .to_string();
                    out.push((start, Tok::Ident(text)));
                }
                other => {
                    return Err(Error::Syntax {
                        offset: at,
                        expected: format!("a token, found {:?}", other as char),
                    });
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    ambient: &'a Arc<AlgebraSpec>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(Error::Syntax { offset: self.offset(), expected: what.into() }),
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut node = if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            ExprAst::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    node = ExprAst::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    node = ExprAst::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut node = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            node = ExprAst::Mul(Box::new(node), Box::new(self.factor()?));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let offset = self.offset();
        match self.bump() {
            Some((_, Tok::Tilde)) => {
                let inner = self.factor()?;
                Ok(match inner {
                    ExprAst::Var => ExprAst::ConjVar,
                    other => ExprAst::Conj(Box::new(other)),
                })
            }
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some((at, Tok::Num(text))) => {
                let scalar = self.ambient.scalar().parse_literal(&text).map_err(|_| {
                    Error::Syntax {
                        offset: at,
                        expected: format!(
                            "a scalar literal valid in {}",
                            self.ambient.scalar()
                        ),
                    }
                })?;
                Ok(ExprAst::Num(scalar))
            }
            Some((at, Tok::Ident(name))) => match name.as_str() {
                "x" => Ok(ExprAst::Var),
                "inv" => {
                    self.expect(Tok::LParen, "'(' after inv")?;
                    let inner = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(ExprAst::Inv(Box::new(inner)))
                }
                _ => match self.ambient.basis_index(&name) {
                    Some(i) => Ok(ExprAst::Basis(i)),
                    None => Err(Error::UnknownBasisName { offset: at, name }),
                },
            },
            _ => Err(Error::Syntax {
                offset,
                expected: "'~', 'inv', '(', 'x', a scalar or a basis name".into(),
            }),
        }
    }
}

/// Parses an expression against an ambient algebra, which supplies the
/// scalar ring for literals and the basis names for the lexer.
pub fn parse_expr(src: &str, ambient: &Arc<AlgebraSpec>) -> Result<ExprAst> {
    let tokens = Lexer::new(src).tokens()?;
    let mut parser = Parser { tokens, pos: 0, ambient, end: src.len() };
    let ast = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Syntax { offset: parser.offset(), expected: "end of input".into() });
    }
    Ok(ast)
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

fn precedence(ast: &ExprAst) -> u8 {
    match ast {
        ExprAst::Add(..) | ExprAst::Sub(..) | ExprAst::Neg(_) => 1,
        ExprAst::Mul(..) => 2,
        _ => 3,
    }
}

/// Canonical printer for the same grammar; output reparses to an equal AST.
pub struct ExprPrinter<'a> {
    pub ast: &'a ExprAst,
    pub ambient: &'a Arc<AlgebraSpec>,
}

impl fmt::Display for ExprPrinter<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.ast)
    }
}

impl ExprPrinter<'_> {
    fn write_child(&self, f: &mut fmt::Formatter<'_>, child: &ExprAst, min: u8) -> fmt::Result {
        if precedence(child) < min {
            write!(f, "(")?;
            self.write(f, child)?;
            write!(f, ")")
        } else {
            self.write(f, child)
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, ast: &ExprAst) -> fmt::Result {
        match ast {
            ExprAst::Num(s) => {
                if s.is_negative() {
                    write!(f, "-{}", s.abs())
                } else {
                    write!(f, "{s}")
                }
            }
            ExprAst::Basis(i) => write!(f, "{}", self.ambient.basis_name(*i)),
            ExprAst::Var => write!(f, "x"),
            ExprAst::ConjVar => write!(f, "~x"),
            ExprAst::Neg(inner) => {
                write!(f, "-")?;
                self.write_child(f, inner, 2)
            }
            ExprAst::Add(l, r) => {
                self.write_child(f, l, 1)?;
                write!(f, " + ")?;
                self.write_child(f, r, 2)
            }
            ExprAst::Sub(l, r) => {
                self.write_child(f, l, 1)?;
                write!(f, " - ")?;
                self.write_child(f, r, 2)
            }
            ExprAst::Mul(l, r) => {
                self.write_child(f, l, 2)?;
                write!(f, "*")?;
                self.write_child(f, r, 3)
            }
            ExprAst::Conj(inner) => {
                write!(f, "~")?;
                self.write_child(f, inner, 3)
            }
            ExprAst::Inv(inner) => {
                write!(f, "inv(")?;
                self.write(f, inner)?;
                write!(f, ")")
            }
        }
    }
}

pub fn print_expr(ast: &ExprAst, ambient: &Arc<AlgebraSpec>) -> String {
    ExprPrinter { ast, ambient }.to_string()
}

// ---------------------------------------------------------------------------
// Compilation
// ---------------------------------------------------------------------------

/// Evaluates a variable-free expression to an element. Multiplication
/// follows the parse tree, so this is safe in nonassociative ambients.
pub fn eval_element(ast: &ExprAst, ambient: &Arc<AlgebraSpec>) -> Result<Element> {
    match ast {
        ExprAst::Var | ExprAst::ConjVar => Err(Error::Usage(
            "the expression mentions the variable x; an element expression was expected".into(),
        )),
        ExprAst::Inv(_) => Err(Error::Usage(
            "inv(...) is only available in rational expressions (reval)".into(),
        )),
        ExprAst::Num(s) => Element::from_scalar(ambient, s.clone()),
        ExprAst::Basis(i) => Element::basis(ambient, *i),
        ExprAst::Neg(e) => Ok(eval_element(e, ambient)?.neg()),
        ExprAst::Add(l, r) => eval_element(l, ambient)?.add(&eval_element(r, ambient)?),
        ExprAst::Sub(l, r) => eval_element(l, ambient)?.sub(&eval_element(r, ambient)?),
        ExprAst::Mul(l, r) => eval_element(l, ambient)?.mul(&eval_element(r, ambient)?),
        ExprAst::Conj(e) => Ok(eval_element(e, ambient)?.conj()),
    }
}

/// Evaluates an expression with the variable bound to a point, following
/// the parse tree node for node. This is monomial-tree evaluation extended
/// with sums, and the nonassociative-safe route for `polyeval`.
pub fn eval_at_point(ast: &ExprAst, v: &Element) -> Result<Element> {
    let ambient = v.algebra();
    match ast {
        ExprAst::Var => Ok(v.clone()),
        ExprAst::ConjVar => Ok(v.conj()),
        ExprAst::Inv(_) => Err(Error::Usage(
            "inv(...) is only available in rational expressions (reval)".into(),
        )),
        ExprAst::Num(s) => Element::from_scalar(ambient, s.clone()),
        ExprAst::Basis(i) => Element::basis(ambient, *i),
        ExprAst::Neg(e) => Ok(eval_at_point(e, v)?.neg()),
        ExprAst::Add(l, r) => eval_at_point(l, v)?.add(&eval_at_point(r, v)?),
        ExprAst::Sub(l, r) => eval_at_point(l, v)?.sub(&eval_at_point(r, v)?),
        ExprAst::Mul(l, r) => eval_at_point(l, v)?.mul(&eval_at_point(r, v)?),
        ExprAst::Conj(e) => Ok(eval_at_point(e, v)?.conj()),
    }
}

/// Compiles to a polynomial in `x` and the conjugated variable; requires an
/// associative ambient (polynomial arithmetic canonicalizes).
pub fn compile_mixed(ast: &ExprAst, ambient: &Arc<AlgebraSpec>) -> Result<MixedPolynomial> {
    match ast {
        ExprAst::Var => Ok(Polynomial::var(ambient).to_mixed()),
        ExprAst::ConjVar => Ok(MixedPolynomial::conj_var(ambient)),
        ExprAst::Num(s) => {
            Ok(Polynomial::constant(Element::from_scalar(ambient, s.clone())?).to_mixed())
        }
        ExprAst::Basis(i) => Ok(Polynomial::constant(Element::basis(ambient, *i)?).to_mixed()),
        ExprAst::Neg(e) => Ok(compile_mixed(e, ambient)?.neg()),
        ExprAst::Add(l, r) => compile_mixed(l, ambient)?.add(&compile_mixed(r, ambient)?),
        ExprAst::Sub(l, r) => compile_mixed(l, ambient)?.sub(&compile_mixed(r, ambient)?),
        ExprAst::Mul(l, r) => compile_mixed(l, ambient)?.mul(&compile_mixed(r, ambient)?),
        ExprAst::Conj(e) => compile_mixed(e, ambient)?.conj(),
        ExprAst::Inv(_) => Err(Error::Usage(
            "inv(...) is only available in rational expressions (reval)".into(),
        )),
    }
}

/// Compiles to a pure polynomial; rejects the conjugated variable.
pub fn compile_poly(ast: &ExprAst, ambient: &Arc<AlgebraSpec>) -> Result<Polynomial> {
    compile_mixed(ast, ambient)?.try_into_pure().ok_or_else(|| {
        Error::Usage(
            "the expression mentions the conjugated variable ~x; a pure polynomial was expected"
                .into(),
        )
    })
}

/// Compiles to a rational expression; `inv(...)` takes a pure polynomial
/// body and conjugation applies to constant subexpressions only.
pub fn compile_rational(ast: &ExprAst, ambient: &Arc<AlgebraSpec>) -> Result<RationalExpr> {
    match ast {
        ExprAst::Var => Ok(RationalExpr::var()),
        ExprAst::ConjVar => Err(Error::Usage(
            "the conjugated variable is not part of the rational expression grammar".into(),
        )),
        ExprAst::Num(s) => {
            Ok(RationalExpr::constant(Element::from_scalar(ambient, s.clone())?))
        }
        ExprAst::Basis(i) => Ok(RationalExpr::constant(Element::basis(ambient, *i)?)),
        ExprAst::Neg(e) => {
            let minus_one = Element::from_scalar(ambient, ambient.scalar().from_i64(-1))?;
            Ok(RationalExpr::prod(
                RationalExpr::constant(minus_one),
                compile_rational(e, ambient)?,
            ))
        }
        ExprAst::Add(l, r) => Ok(RationalExpr::sum(
            compile_rational(l, ambient)?,
            compile_rational(r, ambient)?,
        )),
        ExprAst::Sub(l, r) => {
            let minus_one = Element::from_scalar(ambient, ambient.scalar().from_i64(-1))?;
            Ok(RationalExpr::sum(
                compile_rational(l, ambient)?,
                RationalExpr::prod(
                    RationalExpr::constant(minus_one),
                    compile_rational(r, ambient)?,
                ),
            ))
        }
        ExprAst::Mul(l, r) => Ok(RationalExpr::prod(
            compile_rational(l, ambient)?,
            compile_rational(r, ambient)?,
        )),
        ExprAst::Conj(e) => Ok(RationalExpr::constant(eval_element(e, ambient)?.conj())),
        ExprAst::Inv(e) => RationalExpr::inv_poly(compile_poly(e, ambient)?),
    }
}
