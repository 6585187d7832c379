//! Basic commutators (a Hall set) and the super basis obtained by adjoining
//! `[c, c]` for every odd basic commutator `c`.
//!
//! Weight one: the generators, in alphabet order. Weight `k >= 2`: brackets
//! `[c, d]` of lower basic commutators with `wt(c) + wt(d) = k`, `c > d`, and
//! `f <= d` whenever `c = [e, f]`. Within a weight, elements are ordered by
//! `(index(c), index(d))`; every weight follows all smaller weights.

use std::collections::HashMap;
use std::ops::Range;

use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Parity};
use crate::error::{Error, Result};
use crate::term::LieTerm;

/// Version tag of the within-weight order; part of every basis fingerprint.
pub const ORDER_VERSION: &str = "hall-order-v1";

/// Upper bound on `rank^max_weight` accepted when building a basis.
pub const MAX_WORD_SPACE: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCommutator {
    pub term: LieTerm,
    pub index: usize,
    pub weight: usize,
    pub parity: Parity,
    /// `(index(c), index(d))` for `[c, d]`; `None` for generators.
    pub parts: Option<(usize, usize)>,
}

/// The basic commutators of weight at most `max_weight`, with lookups.
#[derive(Debug, Clone)]
pub struct HallBasis {
    alphabet: Alphabet,
    max_weight: usize,
    elements: Vec<BasicCommutator>,
    by_weight: Vec<Range<usize>>,
    by_term: HashMap<LieTerm, usize>,
    by_parts: HashMap<(usize, usize), usize>,
}

/// Largest weight `n` with `rank^n <= bound` (unbounded for rank <= 1).
pub(crate) fn weight_limit(rank: usize, bound: u128) -> usize {
    if rank <= 1 {
        return usize::MAX;
    }
    let mut n = 0;
    while (rank as u128).pow(n as u32 + 1) <= bound {
        n += 1;
    }
    n
}

pub(crate) fn check_word_space(rank: usize, weight: usize) -> Result<()> {
    let limit = weight_limit(rank, MAX_WORD_SPACE);
    if weight > limit {
        return Err(Error::capacity(
            format!("alphabet of rank {rank}"),
            weight,
            limit,
        ));
    }
    Ok(())
}

impl HallBasis {
    pub fn new(alphabet: &Alphabet, max_weight: usize) -> Result<Self> {
        if max_weight == 0 {
            return Err(Error::Domain("max_weight must be at least 1".into()));
        }
        check_word_space(alphabet.len(), max_weight)?;

        let mut basis = HallBasis {
            alphabet: alphabet.clone(),
            max_weight,
            elements: Vec::new(),
            // weight 0 is empty
            by_weight: std::iter::once(0..0).collect(),
            by_term: HashMap::new(),
            by_parts: HashMap::new(),
        };
        for g in alphabet.generators() {
            basis.push(LieTerm::leaf(alphabet, g.index)?, None);
        }
        basis.by_weight.push(0..basis.elements.len());

        for k in 2..=max_weight {
            let start = basis.elements.len();
            let mut fresh = Vec::new();
            for c in &basis.elements {
                if c.weight >= k {
                    break;
                }
                let d_weight = k - c.weight;
                if d_weight > c.weight {
                    continue;
                }
                for d in &basis.elements[basis.by_weight[d_weight].clone()] {
                    if d.index >= c.index {
                        break;
                    }
                    let admissible = match c.parts {
                        Some((_, f)) => f <= d.index,
                        None => true,
                    };
                    if admissible {
                        fresh.push((c.index, d.index));
                    }
                }
            }
            for (c, d) in fresh {
                let term = LieTerm::bracket(&basis.elements[c].term, &basis.elements[d].term);
                basis.push(term, Some((c, d)));
            }
            basis.by_weight.push(start..basis.elements.len());
        }
        Ok(basis)
    }

    fn push(&mut self, term: LieTerm, parts: Option<(usize, usize)>) {
        let index = self.elements.len();
        self.by_term.insert(term.clone(), index);
        if let Some(p) = parts {
            self.by_parts.insert(p, index);
        }
        self.elements.push(BasicCommutator {
            weight: term.weight(),
            parity: term.parity(),
            term,
            index,
            parts,
        });
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn elements(&self) -> &[BasicCommutator] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, index: usize) -> &BasicCommutator {
        &self.elements[index]
    }

    /// Basic commutators of exactly `weight`.
    pub fn of_weight(&self, weight: usize) -> &[BasicCommutator] {
        match self.by_weight.get(weight) {
            Some(r) => &self.elements[r.clone()],
            None => &[],
        }
    }

    pub fn index_of(&self, term: &LieTerm) -> Option<usize> {
        self.by_term.get(term).copied()
    }

    /// Index of the basic commutator `[c, d]`, if it is one.
    pub fn bracket_index(&self, c: usize, d: usize) -> Option<usize> {
        self.by_parts.get(&(c, d)).copied()
    }

    pub fn require_weight(&self, what: &str, weight: usize) -> Result<()> {
        if weight > self.max_weight {
            return Err(Error::capacity(what, weight, self.max_weight));
        }
        Ok(())
    }

    pub fn fingerprint(&self) -> String {
        format!(
            "{}|max_weight={}|{}",
            self.alphabet, self.max_weight, ORDER_VERSION
        )
    }
}

/// The basic commutators of weight at most `max_weight`, in basis order.
pub fn enum_basic(alphabet: &Alphabet, max_weight: usize) -> Result<Vec<BasicCommutator>> {
    Ok(HallBasis::new(alphabet, max_weight)?.elements)
}

/// Position of `term` in `basis`, if it is a listed basic commutator.
pub fn basic_index(term: &LieTerm, basis: &HallBasis) -> Option<usize> {
    basis.index_of(term)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuperBasisElement {
    Plain(BasicCommutator),
    /// `[c, c]` for an odd basic commutator `c`.
    OddSquare(BasicCommutator),
}

impl SuperBasisElement {
    pub fn commutator(&self) -> &BasicCommutator {
        match self {
            SuperBasisElement::Plain(c) | SuperBasisElement::OddSquare(c) => c,
        }
    }

    pub fn is_square(&self) -> bool {
        matches!(self, SuperBasisElement::OddSquare(_))
    }

    pub fn weight(&self) -> usize {
        match self {
            SuperBasisElement::Plain(c) => c.weight,
            SuperBasisElement::OddSquare(c) => 2 * c.weight,
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            SuperBasisElement::Plain(c) => c.parity,
            SuperBasisElement::OddSquare(_) => Parity::Even,
        }
    }

    pub fn term(&self) -> LieTerm {
        match self {
            SuperBasisElement::Plain(c) => c.term.clone(),
            SuperBasisElement::OddSquare(c) => LieTerm::bracket(&c.term, &c.term),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        if self.is_square() {
            "odd_square"
        } else {
            "plain"
        }
    }

    pub fn to_json(&self, alphabet: &Alphabet, ordinal: usize) -> Value {
        json!({
            "kind": self.kind_name(),
            "term": self.term().to_json(alphabet),
            "weight": self.weight(),
            "parity": self.parity().bit(),
            "index": ordinal,
        })
    }
}

/// Basic commutators together with the squares of the odd ones, ordered by
/// weight, then plain before square, then basic-commutator index.
#[derive(Debug, Clone)]
pub struct SuperBasis {
    hall: HallBasis,
    elements: Vec<SuperBasisElement>,
    plain_ordinal: Vec<usize>,
    square_ordinal: HashMap<usize, usize>,
}

impl SuperBasis {
    pub fn new(alphabet: &Alphabet, max_weight: usize) -> Result<Self> {
        Ok(Self::from_hall(HallBasis::new(alphabet, max_weight)?))
    }

    pub fn from_hall(hall: HallBasis) -> Self {
        let mut elements = Vec::new();
        for k in 1..=hall.max_weight() {
            elements.extend(
                hall.of_weight(k)
                    .iter()
                    .cloned()
                    .map(SuperBasisElement::Plain),
            );
            if k % 2 == 0 {
                elements.extend(
                    hall.of_weight(k / 2)
                        .iter()
                        .filter(|c| c.parity.is_odd())
                        .cloned()
                        .map(SuperBasisElement::OddSquare),
                );
            }
        }
        let mut plain_ordinal = vec![0; hall.len()];
        let mut square_ordinal = HashMap::new();
        for (ord, e) in elements.iter().enumerate() {
            match e {
                SuperBasisElement::Plain(c) => plain_ordinal[c.index] = ord,
                SuperBasisElement::OddSquare(c) => {
                    square_ordinal.insert(c.index, ord);
                }
            }
        }
        SuperBasis {
            hall,
            elements,
            plain_ordinal,
            square_ordinal,
        }
    }

    pub fn hall(&self) -> &HallBasis {
        &self.hall
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.hall.alphabet()
    }

    pub fn max_weight(&self) -> usize {
        self.hall.max_weight()
    }

    pub fn elements(&self) -> &[SuperBasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, ordinal: usize) -> Option<&SuperBasisElement> {
        self.elements.get(ordinal)
    }

    pub fn plain_ordinal(&self, basic: usize) -> usize {
        self.plain_ordinal[basic]
    }

    pub fn square_ordinal(&self, basic: usize) -> Option<usize> {
        self.square_ordinal.get(&basic).copied()
    }

    pub fn of_weight(&self, weight: usize) -> impl Iterator<Item = (usize, &SuperBasisElement)> {
        self.elements
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.weight() == weight)
    }

    /// Element counts for weights `1..=max_weight`.
    pub fn dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.max_weight()];
        for e in &self.elements {
            dims[e.weight() - 1] += 1;
        }
        dims
    }

    pub fn fingerprint(&self) -> String {
        self.hall.fingerprint()
    }
}

/// The super basis up to `max_weight`.
pub fn super_basis(alphabet: &Alphabet, max_weight: usize) -> Result<Vec<SuperBasisElement>> {
    Ok(SuperBasis::new(alphabet, max_weight)?.elements)
}
