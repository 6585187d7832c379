//! Graded alphabets: ordered generators, each even or odd.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// The Z/2 degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^(|self|·|other|)`: `-1` exactly when both are odd.
    pub fn koszul_sign(self, other: Parity) -> i32 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: usize,
    pub name: String,
    pub parity: Parity,
}

/// An ordered list of generators. The listing order is the total order on
/// generators used everywhere else (words, basic commutators, collection).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    generators: Vec<Generator>,
}

pub(crate) fn is_reserved_char(c: char) -> bool {
    c.is_whitespace() || "[](),+-*:·".contains(c)
}

pub(crate) fn validate_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    match chars.next() {
        None => return Err(Error::Structural("empty generator name".into())),
        Some(c) if c.is_ascii_digit() => {
            return Err(Error::Structural(format!(
                "generator name `{name}` starts with a digit"
            )))
        }
        _ => {}
    }
    if let Some(bad) = name.chars().find(|&c| is_reserved_char(c)) {
        return Err(Error::Structural(format!(
            "generator name `{name}` contains reserved character `{bad}`"
        )));
    }
    Ok(())
}

impl Alphabet {
    pub fn new<S: Into<String>>(decls: impl IntoIterator<Item = (S, Parity)>) -> Result<Self> {
        let mut generators: Vec<Generator> = Vec::new();
        for (index, (name, parity)) in decls.into_iter().enumerate() {
            let name = name.into();
            validate_name(&name)?;
            if generators.iter().any(|g| g.name == name) {
                return Err(Error::Structural(format!("duplicate generator `{name}`")));
            }
            generators.push(Generator {
                index,
                name,
                parity,
            });
        }
        if generators.is_empty() {
            return Err(Error::Structural("alphabet has no generators".into()));
        }
        Ok(Alphabet { generators })
    }

    /// Generators named `a0, a1, ...` with the given parities.
    pub fn with_parities(parities: &[Parity]) -> Result<Self> {
        Self::new(
            parities
                .iter()
                .enumerate()
                .map(|(i, &p)| (format!("a{i}"), p)),
        )
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn get(&self, index: usize) -> Result<&Generator> {
        self.generators.get(index).ok_or_else(|| {
            Error::Structural(format!(
                "generator index {index} out of range for alphabet of size {}",
                self.len()
            ))
        })
    }

    pub fn parity(&self, index: usize) -> Result<Parity> {
        self.get(index).map(|g| g.parity)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.generators[index].name
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// True when every name is one character, so words can be written by juxtaposition.
    pub fn single_char_names(&self) -> bool {
        self.generators.iter().all(|g| g.name.chars().count() == 1)
    }

    pub fn has_odd(&self) -> bool {
        self.generators.iter().any(|g| g.parity.is_odd())
    }
}

/// Renders as the declaration list accepted by `parse_alphabet`.
impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", g.name, g.parity)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_addition_is_mod_two() {
        use Parity::*;
        assert_eq!(Even + Even, Even);
        assert_eq!(Even + Odd, Odd);
        assert_eq!(Odd + Even, Odd);
        assert_eq!(Odd + Odd, Even);
    }

    #[test]
    fn koszul_sign_only_flips_for_two_odds() {
        use Parity::*;
        assert_eq!(Odd.koszul_sign(Odd), -1);
        assert_eq!(Odd.koszul_sign(Even), 1);
        assert_eq!(Even.koszul_sign(Even), 1);
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::new(Vec::<(String, Parity)>::new()).is_err());
        assert!(Alphabet::new([("a", Parity::Even), ("a", Parity::Odd)]).is_err());
        assert!(Alphabet::new([("a b", Parity::Even)]).is_err());
        assert!(Alphabet::new([("[", Parity::Even)]).is_err());
        assert!(Alphabet::new([("1x", Parity::Even)]).is_err());
    }

    #[test]
    fn order_is_declaration_order() {
        let a = Alphabet::new([("y", Parity::Odd), ("x", Parity::Even)]).unwrap();
        assert_eq!(a.lookup("y"), Some(0));
        assert_eq!(a.lookup("x"), Some(1));
        assert_eq!(a.to_string(), "y:odd x:even");
    }
}
