//! Text syntax for alphabets, Lie expressions and associative words.
//!
//! ```text
//! alphabet := decl ( (ws | ',') decl )*        decl := name ':' (0 | 1 | even | odd)
//! expr     := ['+' | '-'] summand ( ('+' | '-') summand )*
//! summand  := [int '*'] atom | '0'
//! atom     := name | '[' expr ( ',' expr )+ ']'
//! ```
//!
//! `[e1, e2, ..., ek]` is the left-normed bracket `[[e1, e2], ...], ek]`,
//! extended bilinearly when the entries are sums.

use num_bigint::BigInt;
use num_traits::One;

use crate::alphabet::{is_reserved_char, Alphabet, Parity};
use crate::error::{Error, Result};
use crate::poly::{AssocWord, LiePoly};
use crate::reduce::bracket;
use crate::term::LieTerm;

pub fn parse_parity(token: &str) -> Option<Parity> {
    match token {
        "0" | "even" => Some(Parity::Even),
        "1" | "odd" => Some(Parity::Odd),
        _ => None,
    }
}

/// Parses declarations such as `"a:even b:odd"` (commas also separate).
pub fn parse_alphabet(s: &str) -> Result<Alphabet> {
    let mut decls: Vec<(String, Parity)> = Vec::new();
    let mut pos = 0;
    for token in s.split(|c: char| c.is_whitespace() || c == ',') {
        let here = pos;
        pos += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let (name, parity) = token
            .split_once(':')
            .ok_or_else(|| Error::parse(here, format!("expected name:parity, found `{token}`")))?;
        let parity = parse_parity(parity).ok_or_else(|| {
            Error::parse(
                here + name.len() + 1,
                format!("bad parity `{parity}` (use 0, 1, even or odd)"),
            )
        })?;
        if decls.iter().any(|(n, _)| n == name) {
            return Err(Error::parse(here, format!("duplicate generator `{name}`")));
        }
        decls.push((name.to_string(), parity));
    }
    if decls.is_empty() {
        return Err(Error::parse(0, "empty alphabet"));
    }
    Alphabet::new(decls).map_err(|e| match e {
        Error::Structural(msg) => Error::parse(0, msg),
        other => other,
    })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{want}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("expected {wanted}, found `{c}`")),
            None => Error::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<LiePoly> {
        let mut out = LiePoly::zero();
        let mut sign = if self.eat('-') {
            -BigInt::one()
        } else {
            self.eat('+');
            BigInt::one()
        };
        loop {
            let s = self.summand()?;
            out.add_scaled(&s, &sign);
            if self.eat('+') {
                sign = BigInt::one();
            } else if self.eat('-') {
                sign = -BigInt::one();
            } else {
                return Ok(out);
            }
        }
    }

    fn summand(&mut self) -> Result<LiePoly> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .chars()
            .take_while(char::is_ascii_digit)
            .count();
        if digits == 0 {
            return self.atom();
        }
        self.pos += digits;
        let n: BigInt = self.src[start..self.pos].parse().expect("ascii digits");
        if self.eat('*') {
            Ok(self.atom()?.scaled(&n))
        } else if n == BigInt::from(0) {
            Ok(LiePoly::zero())
        } else {
            Err(self.unexpected("`*` after coefficient"))
        }
    }

    fn atom(&mut self) -> Result<LiePoly> {
        self.skip_ws();
        if self.eat('[') {
            let mut acc = self.expr()?;
            let mut entries = 1;
            while self.eat(',') {
                let next = self.expr()?;
                acc = bracket(&acc, &next);
                entries += 1;
            }
            if entries < 2 {
                return Err(self.unexpected("`,`"));
            }
            self.expect(']')?;
            return Ok(acc);
        }
        let start = self.pos;
        let len: usize = self.src[start..]
            .chars()
            .take_while(|&c| !is_reserved_char(c))
            .map(char::len_utf8)
            .sum();
        if len == 0 {
            return Err(self.unexpected("a generator or `[`"));
        }
        let name = &self.src[start..start + len];
        let index = self
            .alphabet
            .lookup(name)
            .ok_or_else(|| Error::parse(start, format!("unknown generator `{name}`")))?;
        self.pos += len;
        Ok(LiePoly::monomial(LieTerm::leaf(self.alphabet, index)?))
    }
}

/// Parses a Lie expression such as `"3*[x,[y,x]] - [y,x,x]"`.
pub fn parse_expression(s: &str, alphabet: &Alphabet) -> Result<LiePoly> {
    let mut p = Parser {
        src: s,
        pos: 0,
        alphabet,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != s.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok(out)
}

/// Parses a word: juxtaposed names when every name is one character,
/// otherwise names separated by `·` (or whitespace).
pub fn parse_word(s: &str, alphabet: &Alphabet) -> Result<AssocWord> {
    let s = s.trim();
    let pieces: Vec<(usize, &str)> = if s.contains('·') || s.contains(char::is_whitespace) {
        let mut out = Vec::new();
        let mut pos = 0;
        for piece in s.split(|c: char| c == '·' || c.is_whitespace()) {
            if !piece.is_empty() {
                out.push((pos, piece));
            }
            pos += piece.len() + 1;
        }
        out
    } else if alphabet.single_char_names() {
        s.char_indices()
            .map(|(i, c)| (i, &s[i..i + c.len_utf8()]))
            .collect()
    } else {
        vec![(0, s)]
    };
    if pieces.is_empty() {
        return Err(Error::parse(0, "empty word"));
    }
    let letters = pieces
        .into_iter()
        .map(|(pos, name)| {
            alphabet
                .lookup(name)
                .ok_or_else(|| Error::parse(pos, format!("unknown generator `{name}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AssocWord::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parity::*;

    #[test]
    fn alphabets() {
        let a = parse_alphabet("a:even b:odd").unwrap();
        assert_eq!(a.generators().len(), 2);
        assert_eq!(a.parity(0).unwrap(), Even);
        assert_eq!(a.parity(1).unwrap(), Odd);
        let x = parse_alphabet("x:1").unwrap();
        assert_eq!(x.parity(0).unwrap(), Odd);
        assert!(matches!(
            parse_alphabet("a:even a:odd"),
            Err(Error::Parse { pos: 7, .. })
        ));
        assert!(matches!(
            parse_alphabet("a:maybe"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(parse_alphabet("a").is_err());
        assert!(parse_alphabet("  ").is_err());
        assert_eq!(parse_alphabet("p:0,q:1").unwrap().len(), 2);
    }

    #[test]
    fn expressions() {
        let a = parse_alphabet("a:even b:even c:even").unwrap();
        let p = parse_expression("[b,a,a]", &a).unwrap();
        let t = p.keys().next().unwrap();
        assert_eq!(p.len(), 1);
        let (l, r) = t.children().unwrap();
        assert_eq!(r.as_leaf(), Some(0));
        assert_eq!(l.leaves(), vec![1, 0]);

        let xy = parse_alphabet("x:odd y:even").unwrap();
        let p = parse_expression("3*[x,[y,x]] - [y,x,x]", &xy).unwrap();
        let coeffs: Vec<_> = p.iter().map(|(_, c)| c.clone()).collect();
        assert_eq!(p.len(), 2);
        assert!(coeffs.contains(&BigInt::from(3)) && coeffs.contains(&BigInt::from(-1)));

        assert!(matches!(
            parse_expression("[b,c]", &xy),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_expression("[x,y", &xy),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(parse_expression("[x]", &xy).is_err());
        assert!(parse_expression("x y", &xy).is_err());
        assert!(parse_expression("0", &xy).unwrap().is_zero());
        assert_eq!(
            parse_expression("[x + y, y]", &xy)
                .unwrap()
                .display(&xy)
                .to_string(),
            "[x,y] + [y,y]"
        );
        assert_eq!(
            parse_expression("-[y,x,x]", &xy)
                .unwrap()
                .display(&xy)
                .to_string(),
            "-[y,x,x]"
        );
    }

    #[test]
    fn words() {
        let a = parse_alphabet("a:even b:even").unwrap();
        assert_eq!(parse_word("baba", &a).unwrap().letters(), &[1, 0, 1, 0]);
        assert!(matches!(
            parse_word("bac", &a),
            Err(Error::Parse { pos: 2, .. })
        ));
        let long = parse_alphabet("x1:0 x2:1").unwrap();
        assert_eq!(parse_word("x2·x1·x1", &long).unwrap().letters(), &[1, 0, 0]);
        assert_eq!(parse_word("x2", &long).unwrap().letters(), &[1]);
        assert!(parse_word("", &a).is_err());
    }
}
