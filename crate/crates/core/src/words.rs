//! Lyndon and regular (Shirshov) words, their standard factorizations, and
//! the bracketings `theta` (Lyndon) and `pi` (regular).
//!
//! A word is Lyndon when it is strictly smaller than each of its proper
//! cyclic rotations, and regular when it is strictly larger. Regular words
//! are exactly the Lyndon words for the reversed generator order, which is
//! how enumeration handles them.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::poly::AssocWord;
use crate::term::LieTerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordKind {
    Lyndon,
    Regular,
}

impl WordKind {
    pub fn admits(self, w: &AssocWord) -> bool {
        match self {
            WordKind::Lyndon => is_lyndon(w),
            WordKind::Regular => is_regular(w),
        }
    }
}

/// Rotations have the same length as `w`, so plain lexicographic comparison applies.
pub fn is_lyndon(w: &AssocWord) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w.letters() < w.rotation(i).letters())
}

pub fn is_regular(w: &AssocWord) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w.letters() > w.rotation(i).letters())
}

/// Lyndon words over `0..rank` of length at most `max_len`, in plain
/// lexicographic order (Fredricksen–Kessler–Maiorana successor).
fn lyndon_lex(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if rank == 0 || max_len == 0 {
        return out;
    }
    let mut w = vec![0usize];
    loop {
        out.push(w.clone());
        // extend periodically to max_len, then strip maximal letters and bump
        let m = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(rank - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

/// All words of `kind` with length `1..=max_len`, sorted by (length, lex).
pub fn enum_words(alphabet: &Alphabet, kind: WordKind, max_len: usize) -> Vec<AssocWord> {
    let rank = alphabet.len();
    let flip = |v: Vec<usize>| match kind {
        WordKind::Lyndon => v,
        WordKind::Regular => v.into_iter().map(|i| rank - 1 - i).collect(),
    };
    let mut words: Vec<AssocWord> = lyndon_lex(rank, max_len)
        .into_iter()
        .map(|v| AssocWord::new(flip(v)))
        .collect();
    words.sort();
    words
}

/// Splits `w = uv` with `v` the longest proper suffix of the same kind.
pub fn standard_factorization(w: &AssocWord, kind: WordKind) -> Result<(AssocWord, AssocWord)> {
    if !kind.admits(w) {
        return Err(Error::Domain(format!("{w:?} is not a {kind:?} word")));
    }
    if w.len() < 2 {
        return Err(Error::Domain(
            "standard factorization needs a word of length at least 2".into(),
        ));
    }
    let letters = w.letters();
    for start in 1..letters.len() {
        let v = AssocWord::new(letters[start..].to_vec());
        if kind.admits(&v) {
            let u = AssocWord::new(letters[..start].to_vec());
            debug_assert!(kind.admits(&u), "left factor of {w:?} is not {kind:?}");
            return Ok((u, v));
        }
    }
    unreachable!("the last letter is always a proper suffix of either kind")
}

fn bracketing(w: &AssocWord, kind: WordKind, alphabet: &Alphabet) -> Result<LieTerm> {
    if w.len() == 1 {
        return LieTerm::leaf(alphabet, w.letters()[0]);
    }
    let (u, v) = standard_factorization(w, kind)?;
    Ok(LieTerm::bracket(
        &bracketing(&u, kind, alphabet)?,
        &bracketing(&v, kind, alphabet)?,
    ))
}

/// Lyndon bracketing: `theta(uv) = [theta(u), theta(v)]` on the standard factorization.
pub fn theta(w: &AssocWord, alphabet: &Alphabet) -> Result<LieTerm> {
    if !is_lyndon(w) {
        return Err(Error::Domain(format!(
            "`{}` is not a Lyndon word",
            w.display(alphabet)
        )));
    }
    bracketing(w, WordKind::Lyndon, alphabet)
}

/// Shirshov bracketing: `pi(uv) = [pi(u), pi(v)]` on the standard factorization.
pub fn pi(w: &AssocWord, alphabet: &Alphabet) -> Result<LieTerm> {
    if !is_regular(w) {
        return Err(Error::Domain(format!(
            "`{}` is not a regular word",
            w.display(alphabet)
        )));
    }
    bracketing(w, WordKind::Regular, alphabet)
}

/// Bracketed words of `kind` up to `max_weight`, plus `[t, t]` for each odd
/// one whose square still fits, in canonical term order.
pub fn word_super_basis(alphabet: &Alphabet, kind: WordKind, max_weight: usize) -> Vec<LieTerm> {
    let mut out = Vec::new();
    for w in enum_words(alphabet, kind, max_weight) {
        let t = bracketing(&w, kind, alphabet).expect("enumerated words have the requested kind");
        if t.parity().is_odd() && 2 * t.weight() <= max_weight {
            out.push(LieTerm::bracket(&t, &t));
        }
        out.push(t);
    }
    out.sort();
    out
}

/// The Shirshov basis `S` with the squares of its odd elements adjoined.
pub fn shirshov_super_basis(alphabet: &Alphabet, max_weight: usize) -> Vec<LieTerm> {
    word_super_basis(alphabet, WordKind::Regular, max_weight)
}

/// The Lyndon analogue of [`shirshov_super_basis`].
pub fn lyndon_super_basis(alphabet: &Alphabet, max_weight: usize) -> Vec<LieTerm> {
    word_super_basis(alphabet, WordKind::Lyndon, max_weight)
}
