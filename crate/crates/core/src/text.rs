// Element grammar: `x`, `x+y<u>`, `x-y<u>`, `y<u>` with <u> in {i, j, k}.
// A missing coefficient before the unit means 1 (`2+k`, `-j`). Whitespace
// between tokens is ignored.

use alloc::format;
use alloc::string::ToString;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Element, RingKind};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.text[start..self.pos].parse().expect("ascii digits"))
    }

    fn error(&self, message: impl ToString) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected `{}`", c))),
        }
    }

    fn unit(&mut self, hint: Option<RingKind>) -> Result<RingKind> {
        self.skip_ws();
        let at = self.pos;
        let c = self
            .bump()
            .ok_or_else(|| self.error("expected i, j or k"))?;
        let kind = RingKind::from_symbol(c).ok_or_else(|| Error::Parse {
            position: at,
            message: format!("expected i, j or k, found `{}`", c),
        })?;
        match hint {
            Some(h) if h != kind => Err(Error::Parse {
                position: at,
                message: format!("unit `{}` contradicts ring {}", c, h.name()),
            }),
            _ => Ok(kind),
        }
    }
}

fn signed(negative: Option<bool>, magnitude: BigInt) -> BigInt {
    if negative == Some(true) {
        -magnitude
    } else {
        magnitude
    }
}

impl Element {
    /// Parses the element grammar. A plain integer such as `7` needs a
    /// ring `hint`; otherwise the unit letter decides the ring and must
    /// agree with the hint when both are present.
    pub fn parse(text: &str, hint: Option<RingKind>) -> Result<Element> {
        let mut cur = Cursor { text, pos: 0 };
        let first_sign = cur.sign();
        let first = cur.digits();
        cur.skip_ws();
        match cur.peek() {
            None => {
                let n = first.ok_or_else(|| cur.error("expected a number"))?;
                let kind = hint.ok_or(Error::AmbiguousRing)?;
                Ok(Element::new(kind, signed(first_sign, n), 0))
            }
            Some(c) if RingKind::from_symbol(c).is_some() => {
                let kind = cur.unit(hint)?;
                cur.finish()?;
                let y = signed(first_sign, first.unwrap_or_else(|| BigInt::from(1)));
                Ok(Element::new(kind, 0, y))
            }
            Some('+') | Some('-') => {
                let x = first.ok_or_else(|| cur.error("expected a number"))?;
                let second_sign = cur.sign();
                let y = cur.digits().unwrap_or_else(|| BigInt::from(1));
                let kind = cur.unit(hint)?;
                cur.finish()?;
                Ok(Element::new(kind, signed(first_sign, x), signed(second_sign, y)))
            }
            Some(c) => Err(cur.error(format!("unexpected `{}`", c))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;
    use RingKind::*;

    fn e(kind: RingKind, x: i64, y: i64) -> Element {
        Element::from_i64(kind, x, y)
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(Element::parse("3-1j", None).unwrap(), e(Hyperbolic, 3, -1));
        assert_eq!(Element::parse("7", Some(Hyperbolic)).unwrap(), e(Hyperbolic, 7, 0));
        assert_eq!(Element::parse("2+k", None).unwrap(), e(Parabolic, 2, 1));
        assert_eq!(Element::parse("k", None).unwrap(), e(Parabolic, 0, 1));
        assert_eq!(Element::parse("-j", None).unwrap(), e(Hyperbolic, 0, -1));
        assert_eq!(Element::parse("-2+0k", None).unwrap(), e(Parabolic, -2, 0));
        assert_eq!(Element::parse(" 5 - 12 i ", None).unwrap(), e(Elliptic, 5, -12));
        assert_eq!(Element::parse("-4i", Some(Elliptic)).unwrap(), e(Elliptic, 0, -4));
        assert_eq!(Element::parse("+3", Some(Parabolic)).unwrap(), e(Parabolic, 3, 0));
    }

    #[test]
    fn plain_integer_needs_hint() {
        assert_eq!(Element::parse("7", None), Err(Error::AmbiguousRing));
        assert_eq!("12".parse::<Element>(), Err(Error::AmbiguousRing));
    }

    #[test]
    fn parse_errors_carry_position() {
        match Element::parse("3+1q", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match Element::parse("3+1j", Some(Parabolic)) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match Element::parse("1+2j3", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(Element::parse("", Some(Elliptic)).is_err());
        assert!(Element::parse("+", Some(Elliptic)).is_err());
        assert!(Element::parse("+j", None).is_ok());
        assert!(Element::parse("1 2j", None).is_err());
        assert!(Element::parse("j+1", None).is_err());
    }

    proptest! {
        #[test]
        fn format_then_parse_round_trips(x in any::<i64>(), y in any::<i64>(), k in 0usize..3) {
            let z = e(RingKind::ALL[k], x, y);
            let text = z.to_string();
            prop_assert_eq!(Element::parse(&text, None).unwrap(), z);
        }
    }
}
