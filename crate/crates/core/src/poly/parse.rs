//! Recursive-descent parser for the ASCII polynomial grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | INT '/' UINT | VAR | VAR '^' UINT | '(' expr ')' | '-' factor
//! ```
//!
//! Whitespace is insignificant and implicit multiplication is rejected.
//! `INT '/' UINT` is a rational literal so printed polynomials parse back.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MonomialOrder, Poly, PolyError, Rat, VarList};

pub fn parse_polynomial(text: &str, vars: &VarList) -> Result<Poly, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(p.pos, format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarList,
}

const ORDER: MonomialOrder = MonomialOrder::GrevLex;

impl<'a> Parser<'a> {
    fn error(&self, offset: usize, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            offset,
            message: message.into(),
        }
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

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(self.error(self.pos, "implicit multiplication is not allowed"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            None => Err(self.error(self.pos, "unexpected end of input")),
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = match self.expr() {
                    Ok(e) => e,
                    Err(PolyError::Syntax { offset, .. }) if offset >= self.src.len() => {
                        return Err(self.error(open, "unclosed parenthesis"));
                    }
                    Err(e) => return Err(e),
                };
                if self.peek() != Some(b')') {
                    return Err(self.error(open, "unclosed parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(self.error(at, "zero denominator"));
                    }
                    return Ok(Poly::constant(Rat::new(n, d), self.vars, ORDER));
                }
                Ok(Poly::constant(Rat::from_integer(n), self.vars, ORDER))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let idx = self
                    .vars
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                let v = Poly::var(idx, self.vars, ORDER);
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let at = self.pos;
                    let e = self.uint()?;
                    let e: u32 = e
                        .try_into()
                        .ok()
                        .filter(|&e: &u32| e <= u16::MAX as u32)
                        .ok_or_else(|| self.error(at, "exponent too large"))?;
                    return Ok(v.pow(e));
                }
                Ok(v)
            }
            Some(c) => Err(self.error(self.pos, format!("unexpected `{}`", c as char))),
        }
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected an unsigned integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars3() -> VarList {
        VarList::indexed("x", 3)
    }

    #[test]
    fn basic_cubic() {
        let f = parse_polynomial("x0^3 - 2*x1*x2^2", &vars3()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.total_degree(), 3);
    }

    #[test]
    fn unbalanced_paren_reports_open_offset() {
        let v = VarList::new(["x0"]).unwrap();
        match parse_polynomial("x0 + (", &v) {
            Err(PolyError::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cancellation_gives_zero() {
        let v = VarList::new(["x0"]).unwrap();
        assert!(parse_polynomial("x0*x0 - x0^2", &v).unwrap().is_zero());
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            parse_polynomial("x0 + y", &vars3()),
            Err(PolyError::UnknownVariable("y".into()))
        );
    }

    #[test]
    fn implicit_multiplication_rejected() {
        assert!(matches!(
            parse_polynomial("2 x0", &vars3()),
            Err(PolyError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_polynomial("x0(x1)", &vars3()),
            Err(PolyError::Syntax { .. })
        ));
    }

    #[test]
    fn nested_and_negated() {
        let a = parse_polynomial("-(x0 - x1)*(x0 + -x1)", &vars3()).unwrap();
        let b = parse_polynomial("-x0^2 + 2*x0*x1 - x1^2", &vars3()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_literal() {
        let a = parse_polynomial("3/6*x0", &vars3()).unwrap();
        assert_eq!(a.to_string(), "1/2*x0");
        assert!(parse_polynomial("1/0", &vars3()).is_err());
    }
}
