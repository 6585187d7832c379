use num_bigint::BigInt;

use crate::hall::{HallBasis, SuperBasisElement};
use crate::poly::{AssocPoly, AssocWord, LiePoly};
use crate::term::{LieTerm, Shape};

/// Image of a Lie monomial under `a -> a`, `[u, v] -> uv - (-1)^{|u||v|} vu`.
pub fn expand_term(term: &LieTerm) -> AssocPoly {
    match term.shape() {
        Shape::Leaf(i) => AssocPoly::monomial(AssocWord::new(vec![*i])),
        Shape::Node(u, v) => {
            let (eu, ev) = (expand_term(u), expand_term(v));
            let mut out = eu.mul(&ev);
            let sign = u.parity().koszul_sign(v.parity());
            out.add_scaled(&ev.mul(&eu), &BigInt::from(-sign));
            out
        }
    }
}

pub fn expand_poly(p: &LiePoly) -> AssocPoly {
    let mut out = AssocPoly::zero();
    for (t, c) in p {
        out.add_scaled(&expand_term(t), c);
    }
    out
}

/// `[c, c]` for an odd square, which expands to `2 c^2`.
pub fn expand_element(e: &SuperBasisElement) -> AssocPoly {
    expand_term(&e.term())
}

/// Caches the expansions of every basic commutator of a [`HallBasis`].
pub struct Expander<'h> {
    hall: &'h HallBasis,
    cache: Vec<AssocPoly>,
}

impl<'h> Expander<'h> {
    pub fn new(hall: &'h HallBasis) -> Self {
        let mut cache: Vec<AssocPoly> = Vec::with_capacity(hall.len());
        for c in hall.elements() {
            let e = match c.parts {
                None => expand_term(&c.term),
                Some((l, r)) => {
                    let (el, er) = (&cache[l], &cache[r]);
                    let sign = hall.get(l).parity.koszul_sign(hall.get(r).parity);
                    let mut out = el.mul(er);
                    out.add_scaled(&er.mul(el), &BigInt::from(-sign));
                    out
                }
            };
            cache.push(e);
        }
        Expander { hall, cache }
    }

    pub fn hall(&self) -> &'h HallBasis {
        self.hall
    }

    pub fn basic(&self, index: usize) -> &AssocPoly {
        &self.cache[index]
    }

    /// The associative product of the listed basic commutators.
    pub fn product(&self, factors: &[usize]) -> AssocPoly {
        factors
            .iter()
            .fold(AssocPoly::monomial(AssocWord::unit()), |acc, &f| {
                acc.mul(&self.cache[f])
            })
    }
}
