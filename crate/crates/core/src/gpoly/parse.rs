use super::GPolynomial;
use crate::arith::{CycNum, Rat};
use crate::error::{Error, Result};
use crate::group::{GroupAction, GroupElem, GroupKind, GroupSpec, Op};

/// Parse an expression such as `"e0(x1)*e1(x2) - 2*e1(x2)*e0(x1)"`.
///
/// Grammar: sums and differences of products; factors are scalars
/// (integers, fractions `p/q`, `z` for `zeta_N`, `z^k`), parenthesized
/// expressions, commutators `[p, q]`, bare variables `x<k>`, and operator
/// applications `op(x<k>)` with `op` one of `id`, `g`, `g^k`, `h`, `hg`,
/// `hg^k`, `e<i>`, `he<i>`, `eps<i><j>`, `pi0`, `pi1`. Juxtaposition
/// multiplies.
pub fn parse(text: &str, spec: &GroupSpec) -> Result<GPolynomial> {
    let mut p = Parser {
        chars: text.char_indices().map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c })).collect(),
        pos: 0,
        len: text.len(),
        spec,
        action: GroupAction::get(spec),
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    spec: &'a GroupSpec,
    action: &'a GroupAction,
}

impl Parser<'_> {
    fn n(&self) -> u32 {
        self.spec.conductor
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.offset(), msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<GPolynomial> {
        self.skip_ws();
        let mut acc = if self.eat('-') {
            -self.product()?
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '(' || c == '[')
    }

    fn product(&mut self) -> Result<GPolynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().map_err(|_| {
            self.pos = start;
            self.err("number out of range")
        })
    }

    fn signed_number(&mut self) -> Result<i64> {
        if self.peek() == Some('-') {
            self.pos += 1;
            Ok(-self.number()?)
        } else {
            self.number()
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().map(|&(_, c)| c).collect()
    }

    fn factor(&mut self) -> Result<GPolynomial> {
        self.skip_ws();
        let n = self.n();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let p = self.expr()?;
                self.expect(',')?;
                let q = self.expr()?;
                self.expect(']')?;
                Ok(GPolynomial::commutator(&p, &q))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let r = if self.eat('/') {
                    let den = self.number()?;
                    if den == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    Rat::new(num, den)
                } else {
                    Rat::from_int(num)
                };
                Ok(GPolynomial::scalar(CycNum::from_rat(n, r)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                if name == "x" {
                    let v = self.var_index()?;
                    return Ok(GPolynomial::letter(n, Op::ID, v));
                }
                if name == "z" {
                    let k = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.signed_number()?
                    } else {
                        1
                    };
                    return Ok(GPolynomial::scalar(CycNum::zeta_pow(n, k)));
                }
                let (op, scale) = self.operator(&name, start)?;
                self.expect('(')?;
                self.skip_ws();
                if self.ident() != "x" {
                    return Err(self.err("expected a variable x<k>"));
                }
                let v = self.var_index()?;
                self.expect(')')?;
                Ok(GPolynomial::letter(n, op, v).scale_rat(&Rat::from_int(scale)))
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn var_index(&mut self) -> Result<u32> {
        let k = self.number()?;
        if k < 1 || k > u32::MAX as i64 {
            return Err(self.err("variable indices start at 1"));
        }
        Ok(k as u32)
    }

    /// Resolve an operator name; returns the operator and an integer scale
    /// (`pi0 = 2 e0`, `pi1 = 2 e1`).
    fn operator(&mut self, name: &str, start: usize) -> Result<(Op, i64)> {
        let unknown = |p: &Self, shown: String| Error::UnknownOperator { name: shown, group: p.spec.to_string() };
        let order = self.action.g_order() as i64;
        let power = |p: &mut Self| -> Result<u32> {
            if p.peek() == Some('^') {
                p.pos += 1;
                Ok(p.signed_number()?.rem_euclid(order) as u32)
            } else {
                Ok(1 % order as u32)
            }
        };
        let op = match name {
            "id" => Op::ID,
            "g" => Op::Group(GroupElem::g(power(self)?)),
            "h" => Op::Group(GroupElem::hg(0)),
            "hg" => Op::Group(GroupElem::hg(power(self)?)),
            "e" | "he" => {
                let i = self.signed_number()?;
                if self.spec.kind.cyclic_order().is_none() {
                    return Err(unknown(self, format!("{name}{i}")));
                }
                let i = self.action.normalize_index(i);
                if name == "e" {
                    Op::E(i)
                } else {
                    Op::HE(i)
                }
            }
            "eps" => {
                let s = self.number()?;
                if !(11..=33).contains(&s) {
                    return Err(unknown(self, format!("eps{s}")));
                }
                Op::Eps((s / 10) as u8, (s % 10) as u8)
            }
            "pi" => {
                let i = self.number()?;
                if self.spec.kind != GroupKind::Cyclic(2) || i > 1 {
                    return Err(unknown(self, format!("pi{i}")));
                }
                return Ok((Op::E(i), 2));
            }
            _ => {
                self.pos = start;
                return Err(unknown(self, name.to_string()));
            }
        };
        if !self.action.contains(&op) {
            return Err(unknown(self, op.to_string()));
        }
        Ok((op, 1))
    }
}
