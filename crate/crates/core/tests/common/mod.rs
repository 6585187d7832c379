#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use superlie::{Alphabet, LiePoly, LieTerm, Parity};

pub fn alphabet(decl: &[(&str, Parity)]) -> Alphabet {
    Alphabet::new(decl.iter().map(|&(n, p)| (n, p))).unwrap()
}

/// Random bracket tree with exactly `weight` leaves.
pub fn random_term<R: Rng>(rng: &mut R, alphabet: &Alphabet, weight: usize) -> LieTerm {
    if weight == 1 {
        return LieTerm::leaf(alphabet, rng.gen_range(0..alphabet.len())).unwrap();
    }
    let left = rng.gen_range(1..weight);
    LieTerm::bracket(
        &random_term(rng, alphabet, left),
        &random_term(rng, alphabet, weight - left),
    )
}

/// A sum of one to three random terms with small nonzero coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_weight: usize) -> LiePoly {
    let mut p = LiePoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w = rng.gen_range(1..=max_weight);
        let c = *[-3, -2, -1, 1, 2, 3].choose(rng).unwrap();
        let t = random_term(rng, alphabet, w);
        p.add_term(t, BigInt::from(c));
    }
    p
}

/// A random nonzero element all of whose terms have parity `parity`.
///
/// Returns `None` when the alphabet cannot produce that parity.
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    parity: Parity,
    max_weight: usize,
) -> Option<LiePoly> {
    if parity.is_odd() && !alphabet.has_odd() {
        return None;
    }
    let mut p = LiePoly::zero();
    let wanted = rng.gen_range(1..=2);
    let mut attempts = 0;
    while p.len() < wanted && attempts < 10_000 {
        attempts += 1;
        let w = rng.gen_range(1..=max_weight);
        let t = random_term(rng, alphabet, w);
        if t.parity() == parity {
            p.add_term(t, BigInt::from(rng.gen_range(1..=3)));
        }
    }
    (!p.is_zero()).then_some(p)
}
