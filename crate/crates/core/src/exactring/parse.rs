use num_bigint::BigInt;

use super::fraction::QTFraction;
use super::laurent::QTLaurent;
use super::ExactError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ExactError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().unwrap()));
            }
            'q' | 't' => {
                out.push(Tok::Var(c));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(c));
                i += 1;
            }
            _ => return Err(ExactError::Parse(format!("unexpected character '{c}' in \"{s}\""))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> ExactError {
        ExactError::Parse(format!("{what} at token {} in \"{}\"", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<QTFraction, ExactError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QTFraction, ExactError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QTFraction, ExactError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<QTFraction, ExactError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let e: i32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                base.pow(if neg { -e } else { e })
            }
            _ => Err(self.err("expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<QTFraction, ExactError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(QTFraction::from(QTLaurent::constant(
                    num_rational::BigRational::from_integer(n),
                )))
            }
            Some(Tok::Var('q')) => {
                self.pos += 1;
                Ok(QTLaurent::q().into())
            }
            Some(Tok::Var(_)) => {
                self.pos += 1;
                Ok(QTLaurent::t().into())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected number, variable or '('")),
        }
    }
}

/// Parse an expression in `q`, `t` with `+ - * / ^` and parentheses.
///
/// Accepts everything the `Display` impls print, e.g. `"q^2*t - 2*q + 1"`,
/// `"q^-1"`, `"(q)/(1 + q)"`.
pub fn parse_fraction(s: &str) -> Result<QTFraction, ExactError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(ExactError::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        src: s,
    };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parse an expression that must denote a Laurent polynomial.
pub fn parse_laurent(s: &str) -> Result<QTLaurent, ExactError> {
    parse_fraction(s)?.to_laurent()
}
