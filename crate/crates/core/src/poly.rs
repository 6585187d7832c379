//! Exact integer linear combinations, associative words, and the two
//! polynomial types built from them.

use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::alphabet::{Alphabet, Parity};
use crate::error::Result;
use crate::term::LieTerm;

/// A finite Z-linear combination of keys. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(key: K) -> Self {
        Self::term(key, BigInt::one())
    }

    pub fn term(key: K, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff.into());
        out
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &LinComb<K>, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        self.add_scaled(other, &BigInt::one());
    }

    pub fn sub_assign(&mut self, other: &LinComb<K>) {
        self.add_scaled(other, &-BigInt::one());
    }

    pub fn scaled(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-BigInt::one())
    }

    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord> LinComb<K> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigInt> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, BigInt> {
        self.terms.keys()
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, BigInt);
    type IntoIter = btree_map::IntoIter<K, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, K, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Writes `c1*t1 + c2*t2 - ...`, eliding unit coefficients; `0` when empty.
pub fn write_combination<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (String, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (text, c) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        let mag = c.abs();
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        f.write_str(&text)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub type LiePoly = LinComb<LieTerm>;

impl LiePoly {
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> LiePolyDisplay<'a> {
        LiePolyDisplay {
            poly: self,
            alphabet,
        }
    }

    /// Parity shared by every term, or `None` for a mixed or zero polynomial.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut it = self.keys().map(LieTerm::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

pub struct LiePolyDisplay<'a> {
    poly: &'a LiePoly,
    alphabet: &'a Alphabet,
}

impl fmt::Display for LiePolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(
            f,
            self.poly
                .iter()
                .map(|(t, c)| (t.display(self.alphabet).to_string(), c)),
        )
    }
}

/// A word in the generators. The empty word is the unit of the free
/// associative algebra and only appears inside intermediate computations.
///
/// Ordered by length, then lexicographically by generator order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AssocWord(Vec<usize>);

impl AssocWord {
    pub fn new(letters: Vec<usize>) -> Self {
        AssocWord(letters)
    }

    pub fn unit() -> Self {
        AssocWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &AssocWord) -> AssocWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        AssocWord(v)
    }

    /// `a_{i+1} ... a_n a_1 ... a_i`
    pub fn rotation(&self, i: usize) -> AssocWord {
        let mut v = self.0[i..].to_vec();
        v.extend_from_slice(&self.0[..i]);
        AssocWord(v)
    }

    pub fn parity(&self, alphabet: &Alphabet) -> Result<Parity> {
        self.0
            .iter()
            .try_fold(Parity::Even, |acc, &i| Ok(acc + alphabet.parity(i)?))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

/// Letter counts per generator; the entries sum to the word length.
pub fn multidegree(word: &AssocWord, alphabet: &Alphabet) -> Result<Vec<usize>> {
    let mut counts = vec![0; alphabet.len()];
    for &i in word.letters() {
        alphabet.get(i)?;
        counts[i] += 1;
    }
    Ok(counts)
}

impl Ord for AssocWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AssocWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WordDisplay<'a> {
    word: &'a AssocWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let sep = if self.alphabet.single_char_names() {
            ""
        } else {
            "·"
        };
        for (k, &i) in self.word.letters().iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            f.write_str(self.alphabet.name(i))?;
        }
        Ok(())
    }
}

pub type AssocPoly = LinComb<AssocWord>;

impl AssocPoly {
    /// Product in the free associative algebra (concatenation of words).
    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (u, a) in self {
            for (v, b) in other {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> AssocPolyDisplay<'a> {
        AssocPolyDisplay {
            poly: self,
            alphabet,
        }
    }
}

pub struct AssocPolyDisplay<'a> {
    poly: &'a AssocPoly,
    alphabet: &'a Alphabet,
}

impl fmt::Display for AssocPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(
            f,
            self.poly
                .iter()
                .map(|(w, c)| (w.display(self.alphabet).to_string(), c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Parity::*;

    fn ab() -> Alphabet {
        Alphabet::new([("a", Even), ("b", Odd)]).unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = LinComb::<u8>::zero();
        p.add_term(1, BigInt::from(3));
        p.add_term(1, BigInt::from(-3));
        assert!(p.is_zero());
        p.add_term(2, BigInt::zero());
        assert!(p.is_zero());
        let q = LinComb::term(4u8, 2);
        assert!(q.scaled(&BigInt::zero()).is_zero());
        let mut r = q.clone();
        r.sub_assign(&q);
        assert!(r.is_zero());
    }

    #[test]
    fn multidegree_examples() {
        let a = ab();
        assert_eq!(
            multidegree(&AssocWord::new(vec![1, 0, 1, 0]), &a).unwrap(),
            vec![2, 2]
        );
        assert_eq!(
            multidegree(&AssocWord::new(vec![0, 0, 0]), &a).unwrap(),
            vec![3, 0]
        );
        assert_eq!(multidegree(&AssocWord::unit(), &a).unwrap(), vec![0, 0]);
        assert!(multidegree(&AssocWord::new(vec![2]), &a).is_err());
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let w = |v: &[usize]| AssocWord::new(v.to_vec());
        assert!(w(&[1]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[1, 0]));
        assert_eq!(w(&[0, 1, 1]).rotation(1), w(&[1, 1, 0]));
        assert_eq!(w(&[1, 0, 1]).parity(&ab()).unwrap(), Even);
    }

    #[test]
    fn products_and_rendering() {
        let a = ab();
        let p: AssocPoly = [
            (AssocWord::new(vec![0]), BigInt::from(1)),
            (AssocWord::new(vec![1]), BigInt::from(-2)),
        ]
        .into_iter()
        .collect();
        let sq = p.mul(&p);
        assert_eq!(sq.display(&a).to_string(), "aa - 2*ab - 2*ba + 4*bb");
        assert_eq!(AssocPoly::zero().display(&a).to_string(), "0");
        let long = Alphabet::new([("x1", Even), ("x2", Even)]).unwrap();
        assert_eq!(
            AssocWord::new(vec![1, 0]).display(&long).to_string(),
            "x2·x1"
        );
    }
}
