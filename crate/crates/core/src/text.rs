//! Text syntax for scalars, points and lines.
//!
//! Lines are linear equations in `x` and `y` with rational coefficients:
//! `y=2x+4`, `x=-2`, `y=1/2`, `2x+3y=1/2`, `2*x + 3*y = 1/2`. Terms may appear
//! on either side. Points are `(p/q, p/q)`.

use std::fmt;

use num::{BigInt, One, Zero};

use crate::kernel::{Line, Point};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub expected: &'static str,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.found {
            Some(c) => write!(
                f,
                "at position {}: expected {}, found '{}'",
                self.pos, self.expected, c
            ),
            None => write!(
                f,
                "at position {}: expected {}, found end of input",
                self.pos, self.expected
            ),
        }
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn fail(&mut self, expected: &'static str) -> ParseError {
        let found = self.peek();
        ParseError {
            pos: self.pos,
            expected,
            found,
        }
    }

    fn expect(&mut self, want: char, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.fail(expected))
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.fail("end of input")),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            None
        } else {
            self.src[start..self.pos].parse().ok()
        }
    }

    /// Unsigned `digits[/digits]`.
    fn magnitude(&mut self) -> Result<Option<Scalar>, ParseError> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if self.eat('/') {
            self.skip_ws();
            let den_pos = self.pos;
            let Some(den) = self.digits() else {
                return Err(self.fail("denominator digits"));
            };
            if den.is_zero() {
                return Err(ParseError {
                    pos: den_pos,
                    expected: "nonzero denominator",
                    found: Some('0'),
                });
            }
            Ok(Some(Scalar::new(num, den)))
        } else {
            Ok(Some(Scalar::from_integer(num)))
        }
    }

    fn signed_scalar(&mut self) -> Result<Scalar, ParseError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        match self.magnitude()? {
            Some(v) => Ok(if neg { -v } else { v }),
            None => Err(self.fail("a rational number")),
        }
    }
}

#[derive(Default)]
struct Linear {
    x: Scalar,
    y: Scalar,
    k: Scalar,
}

fn parse_side(cur: &mut Cursor<'_>) -> Result<Linear, ParseError> {
    let mut acc = Linear::default();
    let mut first = true;
    loop {
        let neg = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            break;
        };
        first = false;
        let coeff = cur.magnitude()?;
        if coeff.is_some() {
            cur.eat('*');
        }
        let var = match cur.peek() {
            Some(c @ ('x' | 'y')) => {
                cur.bump();
                Some(c)
            }
            _ => None,
        };
        let value = match (coeff, var) {
            (Some(v), _) => v,
            (None, Some(_)) => Scalar::one(),
            (None, None) => return Err(cur.fail("a number or a variable x, y")),
        };
        let value = if neg { -value } else { value };
        match var {
            Some('x') => acc.x += value,
            Some(_) => acc.y += value,
            None => acc.k += value,
        }
        match cur.peek() {
            Some('+' | '-') => continue,
            _ => break,
        }
    }
    Ok(acc)
}

pub fn parse_line(text: &str) -> Result<Line, ParseError> {
    let mut cur = Cursor::new(text);
    let lhs = parse_side(&mut cur)?;
    cur.expect('=', "'=' or an operator")?;
    let rhs = parse_side(&mut cur)?;
    cur.end()?;
    let a = lhs.x - rhs.x;
    let b = lhs.y - rhs.y;
    let c = rhs.k - lhs.k;
    Line::new(a, b, c).map_err(|_| ParseError {
        pos: 0,
        expected: "an equation with a nonzero x or y coefficient",
        found: text.chars().next(),
    })
}

pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let mut cur = Cursor::new(text);
    let v = cur.signed_scalar()?;
    cur.end()?;
    Ok(v)
}

pub fn parse_point(text: &str) -> Result<Point, ParseError> {
    let mut cur = Cursor::new(text);
    let paren = cur.eat('(');
    let x = cur.signed_scalar()?;
    cur.expect(',', "','")?;
    let y = cur.signed_scalar()?;
    if paren {
        cur.expect(')', "')'")?;
    }
    cur.end()?;
    Ok(Point::new(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn slope_intercept_form() {
        let l = parse_line("y=2x+4").unwrap();
        assert_eq!(l, Line::new(int(-2), int(1), int(4)).unwrap());
        assert_eq!(
            parse_line("y = 2*x - 4").unwrap(),
            Line::slope_intercept(int(2), int(-4))
        );
        assert_eq!(
            parse_line("y=-1/2x-3").unwrap(),
            Line::slope_intercept(rat(-1, 2), int(-3))
        );
        assert_eq!(
            parse_line("y=x").unwrap(),
            Line::slope_intercept(int(1), int(0))
        );
    }

    #[test]
    fn axis_parallel_forms() {
        let l = parse_line("x=-2").unwrap();
        assert!(l.is_vertical());
        assert_eq!(l.x_intercept(), Some(int(-2)));
        assert_eq!(parse_line("y=1").unwrap(), Line::horizontal(int(1)));
    }

    #[test]
    fn general_form() {
        let l = parse_line("2x+3y=1/2").unwrap();
        assert_eq!(l, Line::new(int(2), int(3), rat(1, 2)).unwrap());
        assert_eq!(parse_line("2*x+3*y=1/2").unwrap(), l);
        assert_eq!(
            parse_line("-x + y = 0").unwrap(),
            Line::slope_intercept(int(1), int(0))
        );
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_line("y=2x+").unwrap_err();
        assert_eq!(e.pos, 5);
        assert_eq!(e.found, None);
        let e = parse_line("y=2z").unwrap_err();
        assert_eq!(e.pos, 3);
        assert_eq!(e.found, Some('z'));
        assert!(parse_line("y=1/0").is_err());
        assert!(parse_line("3=4").is_err());
        assert!(parse_line("y 2").is_err());
    }

    #[test]
    fn points_and_scalars() {
        assert_eq!(
            parse_point("(-5/2, 1)").unwrap(),
            Point::new(rat(-5, 2), int(1))
        );
        assert_eq!(parse_point("3,-4").unwrap(), Point::from_ints(3, -4));
        assert_eq!(parse_scalar("-7/21").unwrap(), rat(-1, 3));
        assert!(parse_point("(1, 2").is_err());
        assert!(parse_scalar("1.5").is_err());
    }

    fn scalar_strategy() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn line_print_parse_round_trip(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
            prop_assume!(!(a == int(0) && b == int(0)));
            let l = Line::new(a, b, c).unwrap();
            let printed = l.to_string();
            let back = parse_line(&printed).unwrap();
            prop_assert_eq!(&back, &l);
            prop_assert_eq!(back.to_string(), printed);
        }

        #[test]
        fn point_print_parse_round_trip(x in scalar_strategy(), y in scalar_strategy()) {
            let p = Point::new(x, y);
            prop_assert_eq!(parse_point(&p.to_string()).unwrap(), p);
        }
    }
}
