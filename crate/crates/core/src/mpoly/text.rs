use crate::exactalg::Domain;

use super::context::Ctx;
use super::poly::MPoly;
use super::PolyError;

/// Parses sums of products such as `3/2*x0^2 + -1*x0*x1 + (1+2*xi)*x2`.
///
/// Accepts integers, `a/b` with constant divisors, parentheses, `^` with a
/// nonnegative integer exponent, unary minus, and the symbol `xi` for the
/// domain's square root of −3 unless `xi` is itself a context variable.
pub fn parse_poly<D: Domain>(ctx: &Ctx, domain: &D, src: &str) -> Result<MPoly<D>, PolyError> {
    let mut p = Parser { ctx, domain, src: src.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a, D: Domain> {
    ctx: &'a Ctx,
    domain: &'a D,
    src: &'a [u8],
    pos: usize,
}

impl<D: Domain> Parser<'_, D> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly<D>, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<D>, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let div = self.unary()?;
                if !div.is_constant() {
                    return Err(PolyError::Parse { pos: at, msg: "divisor must be a constant".into() });
                }
                let inv = self
                    .domain
                    .inv(&div.constant_term())
                    .ok_or(PolyError::Parse { pos: at, msg: "division by zero".into() })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly<D>, PolyError> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| PolyError::Parse { pos: start, msg: "integer out of range".into() })
    }

    fn atom(&mut self) -> Result<MPoly<D>, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MPoly::from_int(self.ctx, self.domain, n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.ctx.index_of(name) {
                    return Ok(MPoly::var(self.ctx, self.domain, i));
                }
                if name == "xi" {
                    let xi = self
                        .domain
                        .sqrt_minus_three()
                        .ok_or(PolyError::Parse { pos: start, msg: "xi is not in the coefficient domain".into() })?;
                    return Ok(MPoly::constant(self.ctx, self.domain, xi));
                }
                Err(PolyError::UnknownVariable(name.into()))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}
