//! Text form of Laurent polynomials: `3/2*t^-1*u^2 - 1 + t`.
//!
//! Canonical output lists terms by decreasing exponent (lexicographic for two
//! variables), writes every non-constant term as `coef*var^exp`, and uses `0`
//! for the zero polynomial.

use num_traits::{One, Signed, Zero};

use super::{format_rational, parse_rational, Laurent, Monomial, ParseError, Rational};

pub fn format_laurent<M: Monomial>(p: &Laurent<M>, vars: &[&str]) -> String {
    assert_eq!(vars.len(), M::ARITY, "variable count");
    if p.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&format_rational(&c.abs()));
        for (v, e) in vars.iter().zip(m.exponents()) {
            if e != 0 {
                out.push_str(&format!("*{v}^{e}"));
            }
        }
    }
    out
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err(&self, why: &str) -> ParseError {
        ParseError::BadPolynomial(format!("{} (at {} in {:?})", why, self.pos, self.src))
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && f(self.chars[self.pos]) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let mut sign = 1;
        if let Some(c) = self.peek() {
            if c == '-' {
                sign = -1;
                self.pos += 1;
            } else if c == '+' {
                self.pos += 1;
            }
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.err("expected integer exponent"));
        }
        digits
            .parse::<i64>()
            .map(|v| sign * v)
            .map_err(|_| self.err("exponent out of range"))
    }

    fn ident(&mut self) -> String {
        let first = self.peek();
        if !first.is_some_and(|c| c.is_ascii_alphabetic()) {
            return String::new();
        }
        self.take_while(|c| c.is_ascii_alphanumeric())
    }
}

/// Parses a Laurent polynomial in the named variables.
///
/// Accepts `+`/`-` (also U+2212) between terms, optional whitespace,
/// omitted coefficients (`t^2`), and omitted exponents (`t` meaning `t^1`).
pub fn parse_laurent<M: Monomial>(s: &str, vars: &[&str]) -> Result<Laurent<M>, ParseError> {
    assert_eq!(vars.len(), M::ARITY, "variable count");
    let norm = s.replace('\u{2212}', "-");
    let mut cur = Cursor {
        chars: norm.chars().collect(),
        pos: 0,
        src: s,
    };
    let mut out = Laurent::zero();
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match cur.peek() {
            None if first => return Err(cur.err("empty polynomial")),
            None => break,
            Some('+') => cur.pos += 1,
            Some('-') => {
                sign = -sign;
                cur.pos += 1;
            }
            Some(_) if !first => return Err(cur.err("expected '+' or '-'")),
            Some(_) => {}
        }
        first = false;
        let mut coef = Rational::one();
        let mut exps = vec![0i64; M::ARITY];
        let mut any = false;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let mut text = cur.take_while(|c| c.is_ascii_digit());
            if cur.peek() == Some('/') {
                cur.pos += 1;
                let den = cur.take_while(|c| c.is_ascii_digit());
                if den.is_empty() {
                    return Err(cur.err("expected denominator"));
                }
                text = format!("{text}/{den}");
            }
            coef = parse_rational(&text)?;
            any = true;
        }
        loop {
            let star = cur.peek() == Some('*');
            if star {
                cur.pos += 1;
            }
            let name = cur.ident();
            if name.is_empty() {
                if star {
                    return Err(cur.err("expected variable"));
                }
                break;
            }
            let Some(idx) = vars.iter().position(|v| *v == name) else {
                return Err(ParseError::UnknownVariable(name));
            };
            exps[idx] += if cur.peek() == Some('^') {
                cur.pos += 1;
                cur.integer()?
            } else {
                1
            };
            any = true;
        }
        if !any {
            return Err(cur.err("expected term"));
        }
        out.add_term(M::from_exponents(&exps), sign * coef);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{frac, rat, LaurentPoly1, LaurentPoly2};

    #[test]
    fn round_trip_univariate() {
        let p = LaurentPoly1::from_terms([(-1, rat(1)), (2, frac(-3, 2)), (0, rat(4))]);
        let s = format_laurent(&p, &["t"]);
        assert_eq!(s, "-3/2*t^2 + 4 + 1*t^-1");
        assert_eq!(parse_laurent::<i64>(&s, &["t"]).unwrap(), p);
    }

    #[test]
    fn lenient_input() {
        let p: LaurentPoly1 = parse_laurent(" t − 2 t^-1 + t ", &["t"]).unwrap();
        assert_eq!(p, LaurentPoly1::from_terms([(1, rat(2)), (-1, rat(-2))]));
        let z: LaurentPoly1 = parse_laurent("0", &["t"]).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn bivariate() {
        let p: LaurentPoly2 = parse_laurent("-3*t^2*u^-1 + t^-1*u^-1", &["t", "u"]).unwrap();
        assert_eq!(format_laurent(&p, &["t", "u"]), "-3*t^2*u^-1 + 1*t^-1*u^-1");
        let q: LaurentPoly2 = parse_laurent("s1^-1*s2", &["s1", "s2"]).unwrap();
        assert_eq!(q.coeff((-1, 1)), rat(1));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_laurent::<i64>("1/0*t", &["t"]).is_err());
        assert!(parse_laurent::<i64>("x^2", &["t"]).is_err());
        assert!(parse_laurent::<i64>("", &["t"]).is_err());
        assert!(parse_laurent::<i64>("t^", &["t"]).is_err());
        assert!(parse_laurent::<i64>("2 3", &["t"]).is_err());
    }
}
