use super::ast::{PolyExpr, Script, Stmt, StmtKind, TermExpr};
use super::lexer::{tokenize, Pos, Tok, Token};
use crate::error::{Error, Result};

pub fn parse_script(text: &str) -> Result<Script> {
    let mut p = Parser::new(text)?;
    let mut statements = Vec::new();
    while p.peek() != &Tok::Eof {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

/// Parses a bare polynomial such as `3x^2*y - y + 1`.
pub fn parse_poly_expr(text: &str) -> Result<PolyExpr> {
    let mut p = Parser::new(text)?;
    let e = p.poly()?;
    p.expect(&[Tok::Eof])?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> Error {
        let pos = self.pos();
        Error::Parse {
            line: pos.line,
            column: pos.column,
            message: format!(
                "expected one of {{{}}}, found {}",
                expected.join(", "),
                self.peek().describe()
            ),
        }
    }

    fn expect(&mut self, toks: &[Tok]) -> Result<Token> {
        if toks.contains(self.peek()) {
            return Ok(self.bump());
        }
        let names: Vec<String> = toks.iter().map(|t| t.describe()).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Err(self.error(&refs))
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error(&[&format!("`{kw}`")])),
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn statement(&mut self) -> Result<Stmt> {
        let pos = self.pos();
        let head = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => {
                return Err(self.error(&[
                    "`ring`",
                    "`ideal`",
                    "`quotient`",
                    "`module`",
                    "`flags`",
                    "`set`",
                    "`task`",
                ]))
            }
        };
        let kind = match head.as_str() {
            "ring" => {
                self.bump();
                let name = self.ident()?;
                self.expect(&[Tok::Eq])?;
                self.keyword("char")?;
                let c = self.int()?;
                let characteristic = u32::try_from(c).map_err(|_| Error::Parse {
                    line: pos.line,
                    column: pos.column,
                    message: format!("characteristic {c} out of range"),
                })?;
                self.expect(&[Tok::Comma])?;
                self.keyword("vars")?;
                let mut vars = vec![self.ident()?];
                while let Tok::Ident(_) = self.peek() {
                    vars.push(self.ident()?);
                }
                StmtKind::Ring {
                    name,
                    characteristic,
                    vars,
                }
            }
            "ideal" => {
                self.bump();
                let name = self.ident()?;
                self.expect(&[Tok::Eq])?;
                let mut gens = vec![self.poly()?];
                while self.peek() == &Tok::Comma {
                    self.bump();
                    gens.push(self.poly()?);
                }
                StmtKind::Ideal { name, gens }
            }
            "quotient" => {
                self.bump();
                let name = self.ident()?;
                self.expect(&[Tok::Eq])?;
                let base = self.ident()?;
                self.expect(&[Tok::Slash])?;
                let ideal = self.ident()?;
                StmtKind::Quotient { name, base, ideal }
            }
            "module" => {
                self.bump();
                let name = self.ident()?;
                self.expect(&[Tok::Eq])?;
                let mut gens = vec![self.vector()?];
                while self.peek() == &Tok::Comma {
                    self.bump();
                    gens.push(self.vector()?);
                }
                StmtKind::Module { name, gens }
            }
            "flags" => {
                self.bump();
                let target = self.ident()?;
                let mut flags = Vec::new();
                while let Tok::Ident(_) = self.peek() {
                    let key = self.ident()?;
                    self.expect(&[Tok::Eq])?;
                    let v = match self.peek() {
                        Tok::Ident(s) if s == "true" => true,
                        Tok::Ident(s) if s == "false" => false,
                        _ => return Err(self.error(&["`true`", "`false`"])),
                    };
                    self.bump();
                    flags.push((key, v));
                }
                StmtKind::Flags { target, flags }
            }
            "set" => {
                self.bump();
                let key = self.ident()?;
                self.expect(&[Tok::Eq])?;
                let value = self.int()?;
                StmtKind::Set { key, value }
            }
            "task" => {
                self.bump();
                let kind = self.ident()?;
                let mut args = Vec::new();
                let mut options = Vec::new();
                while let Tok::Ident(_) = self.peek() {
                    let word = self.ident()?;
                    if self.peek() == &Tok::Eq {
                        self.bump();
                        options.push((word, self.int()?));
                    } else if options.is_empty() {
                        args.push(word);
                    } else {
                        return Err(self.error(&["`=`"]));
                    }
                }
                StmtKind::Task {
                    kind,
                    args,
                    options,
                }
            }
            _ => {
                return Err(self.error(&[
                    "`ring`",
                    "`ideal`",
                    "`quotient`",
                    "`module`",
                    "`flags`",
                    "`set`",
                    "`task`",
                ]))
            }
        };
        self.expect(&[Tok::Semi])?;
        Ok(Stmt { kind, pos })
    }

    fn vector(&mut self) -> Result<Vec<PolyExpr>> {
        self.expect(&[Tok::LBracket])?;
        let mut comps = vec![self.poly()?];
        while self.peek() == &Tok::Comma {
            self.bump();
            comps.push(self.poly()?);
        }
        self.expect(&[Tok::RBracket])?;
        Ok(comps)
    }

    fn poly(&mut self) -> Result<PolyExpr> {
        let pos = self.pos();
        let mut negative = false;
        match self.peek() {
            Tok::Minus => {
                negative = true;
                self.bump();
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut terms = vec![self.term(negative)?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term(false)?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(self.term(true)?);
                }
                _ => break,
            }
        }
        Ok(PolyExpr { terms, pos })
    }

    fn term(&mut self, negative: bool) -> Result<TermExpr> {
        let mut coeff = None;
        let mut factors = Vec::new();
        match self.peek() {
            Tok::Int(n) => {
                coeff = Some(*n);
                self.bump();
                match self.peek() {
                    Tok::Star => {
                        self.bump();
                        factors.push(self.factor()?);
                    }
                    Tok::Ident(_) => factors.push(self.factor()?),
                    _ => {
                        return Ok(TermExpr {
                            negative,
                            coeff,
                            factors,
                        })
                    }
                }
            }
            Tok::Ident(_) => factors.push(self.factor()?),
            _ => return Err(self.error(&["integer", "identifier"])),
        }
        while self.peek() == &Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        if let Tok::Ident(_) | Tok::Int(_) = self.peek() {
            return Err(self.error(&["`*`", "`+`", "`-`", "`,`", "`;`"]));
        }
        Ok(TermExpr {
            negative,
            coeff,
            factors,
        })
    }

    fn factor(&mut self) -> Result<(String, u32)> {
        let name = self.ident()?;
        let mut e = 1;
        if self.peek() == &Tok::Caret {
            self.bump();
            let pos = self.pos();
            let v = self.int()?;
            e = u32::try_from(v).map_err(|_| Error::Parse {
                line: pos.line,
                column: pos.column,
                message: format!("exponent {v} out of range"),
            })?;
        }
        Ok((name, e))
    }
}
