//! Binary bracket trees over the generators of an alphabet.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde_json::Value;

use crate::alphabet::{Alphabet, Parity};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf(usize),
    Node(LieTerm, LieTerm),
}

#[derive(Debug)]
struct TermData {
    shape: Shape,
    weight: usize,
    parity: Parity,
}

/// A Lie monomial: a generator or the bracket of two monomials.
///
/// Weight and parity are cached at construction. Cloning is cheap (shared
/// subtrees).
#[derive(Clone)]
pub struct LieTerm(Arc<TermData>);

impl LieTerm {
    pub fn leaf(alphabet: &Alphabet, index: usize) -> Result<Self> {
        let parity = alphabet.parity(index)?;
        Ok(Self::leaf_with_parity(index, parity))
    }

    pub(crate) fn leaf_with_parity(index: usize, parity: Parity) -> Self {
        LieTerm(Arc::new(TermData {
            shape: Shape::Leaf(index),
            weight: 1,
            parity,
        }))
    }

    /// The formal bracket `[left, right]`; no simplification is applied.
    pub fn bracket(left: &LieTerm, right: &LieTerm) -> Self {
        LieTerm(Arc::new(TermData {
            weight: left.weight() + right.weight(),
            parity: left.parity() + right.parity(),
            shape: Shape::Node(left.clone(), right.clone()),
        }))
    }

    /// `[t1, t2, ..., tk] = [[...[t1, t2], ...], tk]`.
    ///
    /// Panics on an empty slice.
    pub fn left_normed(terms: &[LieTerm]) -> Self {
        let (first, rest) = terms.split_first().expect("left_normed of no terms");
        rest.iter()
            .fold(first.clone(), |acc, t| LieTerm::bracket(&acc, t))
    }

    pub fn shape(&self) -> &Shape {
        &self.0.shape
    }

    pub fn weight(&self) -> usize {
        self.0.weight
    }

    pub fn parity(&self) -> Parity {
        self.0.parity
    }

    pub fn as_leaf(&self) -> Option<usize> {
        match self.shape() {
            Shape::Leaf(i) => Some(*i),
            Shape::Node(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&LieTerm, &LieTerm)> {
        match self.shape() {
            Shape::Leaf(_) => None,
            Shape::Node(l, r) => Some((l, r)),
        }
    }

    /// Generator indices read left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<usize>) {
        match self.shape() {
            Shape::Leaf(i) => out.push(*i),
            Shape::Node(l, r) => {
                l.push_leaves(out);
                r.push_leaves(out);
            }
        }
    }

    /// Occurrence count of each generator.
    pub fn multidegree(&self, rank: usize) -> Vec<usize> {
        let mut counts = vec![0; rank];
        for i in self.leaves() {
            counts[i] += 1;
        }
        counts
    }

    /// True for `[...[[a1, a2], a3], ..., ak]` with every `ai` a generator.
    pub fn is_left_comb(&self) -> bool {
        match self.shape() {
            Shape::Leaf(_) => true,
            Shape::Node(l, r) => r.as_leaf().is_some() && l.is_left_comb(),
        }
    }

    /// Checks every leaf against `alphabet` and that the cached parities agree with it.
    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        match self.shape() {
            Shape::Leaf(i) => {
                let p = alphabet.parity(*i)?;
                if p != self.parity() {
                    return Err(crate::Error::Structural(format!(
                        "leaf {i} carries parity {} but the alphabet says {p}",
                        self.parity()
                    )));
                }
                Ok(())
            }
            Shape::Node(l, r) => {
                l.validate(alphabet)?;
                r.validate(alphabet)
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> TermDisplay<'a> {
        TermDisplay {
            term: self,
            alphabet,
        }
    }

    /// A generator name, or a two-element array `[left, right]`.
    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        match self.shape() {
            Shape::Leaf(i) => Value::String(alphabet.name(*i).to_string()),
            Shape::Node(l, r) => Value::Array(vec![l.to_json(alphabet), r.to_json(alphabet)]),
        }
    }

    /// Left spine `[head, args...]` of a left-normed reading.
    fn spine(&self) -> (&LieTerm, Vec<&LieTerm>) {
        let mut args = Vec::new();
        let mut cur = self;
        while let Shape::Node(l, r) = cur.shape() {
            args.push(r);
            cur = l;
        }
        args.reverse();
        (cur, args)
    }
}

/// Sum of leaf parities, after checking every leaf exists in `alphabet`.
pub fn parity_of(term: &LieTerm, alphabet: &Alphabet) -> Result<Parity> {
    term.validate(alphabet)?;
    Ok(term.parity())
}

pub fn weight_of(term: &LieTerm) -> usize {
    term.weight()
}

impl PartialEq for LieTerm {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.weight() == other.weight() && self.shape() == other.shape())
    }
}

impl Eq for LieTerm {}

impl Hash for LieTerm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.shape().hash(state);
    }
}

/// Canonical order: weight first, then leaves before brackets, leaves by
/// generator index, brackets lexicographically on `(left, right)`.
impl Ord for LieTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.weight()
            .cmp(&other.weight())
            .then_with(|| match (self.shape(), other.shape()) {
                (Shape::Leaf(a), Shape::Leaf(b)) => a.cmp(b),
                (Shape::Leaf(_), Shape::Node(..)) => Ordering::Less,
                (Shape::Node(..), Shape::Leaf(_)) => Ordering::Greater,
                (Shape::Node(l1, r1), Shape::Node(l2, r2)) => l1.cmp(l2).then_with(|| r1.cmp(r2)),
            })
    }
}

impl PartialOrd for LieTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LieTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape() {
            Shape::Leaf(i) => write!(f, "g{i}"),
            Shape::Node(l, r) => write!(f, "[{l:?},{r:?}]"),
        }
    }
}

pub struct TermDisplay<'a> {
    term: &'a LieTerm,
    alphabet: &'a Alphabet,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, args) = self.term.spine();
        if args.is_empty() {
            // a bare generator
            let i = head.as_leaf().expect("spine head is a leaf");
            return f.write_str(self.alphabet.name(i));
        }
        f.write_str("[")?;
        write!(f, "{}", head.display(self.alphabet))?;
        for a in args {
            write!(f, ",{}", a.display(self.alphabet))?;
        }
        f.write_str("]")
    }
}
