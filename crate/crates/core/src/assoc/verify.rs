//! Per-weight independence and spanning certificates for the three basis
//! constructions.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Parity};
use crate::assoc::collect::enum_basic_products;
use crate::assoc::expand::{expand_term, Expander};
use crate::assoc::rank::rank_over_integers;
use crate::error::{Error, Result};
use crate::hall::{HallBasis, SuperBasis};
use crate::poly::AssocPoly;
use crate::term::LieTerm;
use crate::words::{word_super_basis, WordKind};

/// Largest `rank^weight` for which the basic-product census builds its matrix.
pub const MAX_CENSUS_COLUMNS: usize = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Hall,
    Lyndon,
    Shirshov,
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hall" => Ok(Scheme::Hall),
            "lyndon" => Ok(Scheme::Lyndon),
            "shirshov" | "regular" => Ok(Scheme::Shirshov),
            _ => Err(Error::parse(0, format!("unknown scheme `{s}`"))),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Hall => "hall",
            Scheme::Lyndon => "lyndon",
            Scheme::Shirshov => "shirshov",
        })
    }
}

/// A super-basis element of any scheme: a plain bracketing, or `[t, t]` for an odd one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeElement {
    pub term: LieTerm,
    pub odd_square: bool,
}

impl SchemeElement {
    pub fn weight(&self) -> usize {
        self.term.weight()
    }

    pub fn parity(&self) -> Parity {
        self.term.parity()
    }

    pub fn to_json(&self, alphabet: &Alphabet, ordinal: usize) -> Value {
        json!({
            "kind": if self.odd_square { "odd_square" } else { "plain" },
            "term": self.term.to_json(alphabet),
            "weight": self.weight(),
            "parity": self.parity().bit(),
            "index": ordinal,
        })
    }
}

fn is_square(t: &LieTerm) -> bool {
    matches!(t.children(), Some((l, r)) if l == r)
}

/// The super basis of `scheme` up to `max_weight`, ordered by weight.
pub fn scheme_basis(
    alphabet: &Alphabet,
    max_weight: usize,
    scheme: Scheme,
) -> Result<Vec<SchemeElement>> {
    let from_words = |kind| -> Result<Vec<SchemeElement>> {
        crate::hall::check_word_space(alphabet.len(), max_weight)?;
        Ok(word_super_basis(alphabet, kind, max_weight)
            .into_iter()
            .map(|term| SchemeElement {
                odd_square: is_square(&term),
                term,
            })
            .collect())
    };
    match scheme {
        Scheme::Hall => Ok(SuperBasis::new(alphabet, max_weight)?
            .elements()
            .iter()
            .map(|e| SchemeElement {
                term: e.term(),
                odd_square: e.is_square(),
            })
            .collect()),
        Scheme::Lyndon => from_words(WordKind::Lyndon),
        Scheme::Shirshov => from_words(WordKind::Regular),
    }
}

/// Count and rank of the weight-`n` basic products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCensus {
    pub count: usize,
    pub rank: usize,
    /// `rank^n`, the dimension of the weight-`n` part of the free associative algebra.
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightReport {
    pub weight: usize,
    pub count: usize,
    pub rank: usize,
    pub independent: bool,
    pub products: Option<ProductCensus>,
}

impl WeightReport {
    pub fn ok(&self) -> bool {
        self.independent
            && self
                .products
                .as_ref()
                .is_none_or(|p| p.count == p.expected && p.rank == p.expected)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "weight": self.weight,
            "count": self.count,
            "rank": self.rank,
            "independent": self.independent,
        });
        if let Some(p) = &self.products {
            v["expected"] = json!(p.expected);
            v["products"] = json!(p.count);
            v["products_rank"] = json!(p.rank);
        }
        v
    }
}

impl fmt::Display for WeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight {}: count {}, rank {}, {}",
            self.weight,
            self.count,
            self.rank,
            if self.independent {
                "independent"
            } else {
                "DEPENDENT"
            }
        )?;
        if let Some(p) = &self.products {
            write!(
                f,
                "; basic products {} (rank {}, expected {})",
                p.count, p.rank, p.expected
            )?;
        }
        Ok(())
    }
}

fn product_census(hall: &HallBasis, ex: &Expander, weight: usize) -> Result<ProductCensus> {
    let expected = hall.alphabet().len().pow(weight as u32);
    let products = enum_basic_products(hall, weight)?;
    let rows: Vec<AssocPoly> = products.iter().map(|p| ex.product(p.factors())).collect();
    Ok(ProductCensus {
        count: products.len(),
        rank: rank_over_integers(&rows).rank,
        expected,
    })
}

/// For every weight up to `max_weight`: the number of super-basis elements
/// of `scheme` and the exact rank of their expansions. For the Hall scheme
/// the basic products of each weight are counted and ranked as well.
pub fn verify_basis(
    alphabet: &Alphabet,
    max_weight: usize,
    scheme: Scheme,
) -> Result<Vec<WeightReport>> {
    let elements = scheme_basis(alphabet, max_weight, scheme)?;
    let census_hall = match scheme {
        Scheme::Hall => {
            let limit = crate::hall::weight_limit(alphabet.len(), MAX_CENSUS_COLUMNS as u128);
            if max_weight > limit {
                return Err(Error::capacity("basic-product census", max_weight, limit));
            }
            Some(HallBasis::new(alphabet, max_weight)?)
        }
        _ => None,
    };
    let expander = census_hall.as_ref().map(Expander::new);

    let mut reports = Vec::with_capacity(max_weight);
    for n in 1..=max_weight {
        let rows: Vec<AssocPoly> = elements
            .iter()
            .filter(|e| e.weight() == n)
            .map(|e| expand_term(&e.term))
            .collect();
        let r = rank_over_integers(&rows);
        let products = match (&census_hall, &expander) {
            (Some(h), Some(ex)) => Some(product_census(h, ex, n)?),
            _ => None,
        };
        reports.push(WeightReport {
            weight: n,
            count: r.inputs,
            rank: r.rank,
            independent: r.independent,
            products,
        });
    }
    Ok(reports)
}
