//! Graded bracket arithmetic and straightening of Lie expressions into
//! coordinates over the super basis of basic commutators.
//!
//! A product of basic commutators is first rewritten as a combination of
//! left-normed products starting with its smallest factor `m`. In
//! `[m, e, ...]`:
//!
//! * `m < e`: `[m, e] = -(-1)^{|m||e|} [e, m]`, and `[e, m]` is basic, so the
//!   product shrinks by one factor;
//! * `m = e` even: the product vanishes;
//! * `m = e` odd, nothing else: the odd square `[m, m]`;
//! * `m = e` odd, followed by `m`: `[m, m, m] = 0`;
//! * `m = e` odd, followed by `g > m`: `[m, m, g] = -2 [g, m, m]`, again basic,
//!   so the product shrinks by two factors.
//!
//! Every factor `d = [e, f]` produced this way keeps `f <= ` every other
//! factor, which is what makes the new brackets basic.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Parity};
use crate::assoc::expand_poly;
use crate::error::{Error, Result};
use crate::hall::SuperBasis;
use crate::poly::{write_combination, LiePoly, LinComb};
use crate::term::{LieTerm, Shape};

/// Bilinear extension of the formal bracket; no normalization.
pub fn bracket(p: &LiePoly, q: &LiePoly) -> LiePoly {
    let mut out = LiePoly::zero();
    for (u, a) in p {
        for (v, b) in q {
            out.add_term(LieTerm::bracket(u, v), a * b);
        }
    }
    out
}

/// Bracket tree over arbitrary factors (generators or basic commutators),
/// with one leaf marked as the factor that must come first.
#[derive(Debug)]
enum Tree {
    Leaf {
        id: usize,
        parity: Parity,
        mark: bool,
    },
    Node {
        left: Rc<Tree>,
        right: Rc<Tree>,
        parity: Parity,
        mark: bool,
    },
}

impl Tree {
    fn leaf(id: usize, parity: Parity, mark: bool) -> Rc<Tree> {
        Rc::new(Tree::Leaf { id, parity, mark })
    }

    fn node(left: &Rc<Tree>, right: &Rc<Tree>) -> Rc<Tree> {
        Rc::new(Tree::Node {
            parity: left.parity() + right.parity(),
            mark: left.marked() || right.marked(),
            left: left.clone(),
            right: right.clone(),
        })
    }

    fn parity(&self) -> Parity {
        match self {
            Tree::Leaf { parity, .. } | Tree::Node { parity, .. } => *parity,
        }
    }

    fn marked(&self) -> bool {
        match self {
            Tree::Leaf { mark, .. } | Tree::Node { mark, .. } => *mark,
        }
    }

    /// Left-normed tree `[f1, f2, ..., fk]` with `f1` marked.
    fn left_normed(factors: &[(usize, Parity)]) -> Rc<Tree> {
        let (first, rest) = factors.split_first().expect("non-empty product");
        rest.iter()
            .fold(Tree::leaf(first.0, first.1, true), |acc, &(id, p)| {
                Tree::node(&acc, &Tree::leaf(id, p, false))
            })
    }
}

/// Rewrites `tree` as a combination of left-normed products whose first
/// entry is the marked leaf, adding `coeff` times the result into `out`.
fn left_normed_expansion(tree: &Rc<Tree>, coeff: &BigInt, out: &mut LinComb<Vec<usize>>) {
    let (u, v) = match &**tree {
        Tree::Leaf { id, .. } => {
            out.add_term(vec![*id], coeff.clone());
            return;
        }
        Tree::Node { left, right, .. } => (left, right),
    };
    // [u, v] = -(-1)^{|u||v|} [v, u]; keep the mark on the left
    let (u, v, coeff) = if v.marked() {
        let sign = -u.parity().koszul_sign(v.parity());
        (v, u, coeff * sign)
    } else {
        (u, v, coeff.clone())
    };
    match &**v {
        Tree::Leaf { id, .. } => {
            let mut inner = LinComb::zero();
            left_normed_expansion(u, &coeff, &mut inner);
            for (mut seq, c) in inner {
                seq.push(*id);
                out.add_term(seq, c);
            }
        }
        Tree::Node {
            left: x, right: y, ..
        } => {
            // [u, [x, y]] = [[u, x], y] - (-1)^{|x||y|} [[u, y], x]
            left_normed_expansion(&Tree::node(&Tree::node(u, x), y), &coeff, out);
            let sign = -x.parity().koszul_sign(y.parity());
            left_normed_expansion(&Tree::node(&Tree::node(u, y), x), &(&coeff * sign), out);
        }
    }
}

fn term_tree(term: &LieTerm, mark_at: usize, next: &mut usize) -> Rc<Tree> {
    match term.shape() {
        Shape::Leaf(i) => {
            let here = *next;
            *next += 1;
            Tree::leaf(*i, term.parity(), here == mark_at)
        }
        Shape::Node(l, r) => {
            let l = term_tree(l, mark_at, next);
            let r = term_tree(r, mark_at, next);
            Tree::node(&l, &r)
        }
    }
}

/// Position (in left-to-right leaf order) of the first occurrence of the
/// smallest leaf.
fn first_minimal_leaf(leaves: &[usize]) -> usize {
    let min = leaves.iter().min().expect("terms have at least one leaf");
    leaves.iter().position(|l| l == min).unwrap()
}

/// Writes `term` as a combination of left-normed generator products whose
/// first entry is the leftmost occurrence of the smallest generator in it.
pub fn left_normalize(term: &LieTerm, alphabet: &Alphabet) -> Result<LiePoly> {
    term.validate(alphabet)?;
    let mark = first_minimal_leaf(&term.leaves());
    let tree = term_tree(term, mark, &mut 0);
    let mut seqs = LinComb::zero();
    left_normed_expansion(&tree, &BigInt::one(), &mut seqs);
    seqs.into_iter()
        .map(|(seq, c)| {
            let leaves = seq
                .into_iter()
                .map(|i| LieTerm::leaf(alphabet, i))
                .collect::<Result<Vec<_>>>()?;
            Ok((LieTerm::left_normed(&leaves), c))
        })
        .collect()
}

/// Integer coordinates over a [`SuperBasis`], keyed by element ordinal.
#[derive(Debug, Clone)]
pub struct Coordinates<'b> {
    basis: &'b SuperBasis,
    coeffs: LinComb<usize>,
}

impl PartialEq for Coordinates<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.basis.fingerprint() == other.basis.fingerprint()
    }
}

impl<'b> Coordinates<'b> {
    pub fn basis(&self) -> &'b SuperBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &LinComb<usize> {
        &self.coeffs
    }

    pub fn get(&self, ordinal: usize) -> BigInt {
        self.coeffs.coeff(&ordinal)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// The represented element, written with basis terms.
    pub fn to_lie_poly(&self) -> LiePoly {
        self.coeffs
            .iter()
            .map(|(&ord, c)| (self.basis.elements()[ord].term(), c.clone()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let alphabet = self.basis.alphabet();
        let coords: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&ord, c)| {
                json!({
                    "index": ord,
                    "coeff": crate::bigint_json(c),
                    "term": self.basis.elements()[ord].term().to_json(alphabet),
                })
            })
            .collect();
        json!({
            "fingerprint": self.basis.fingerprint(),
            "coordinates": coords,
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for Coordinates<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.basis.alphabet();
        write_combination(
            f,
            self.coeffs.iter().map(|(&ord, c)| {
                (
                    self.basis.elements()[ord]
                        .term()
                        .display(alphabet)
                        .to_string(),
                    c,
                )
            }),
        )
    }
}

struct Reducer<'b> {
    basis: &'b SuperBasis,
    memo: HashMap<Vec<usize>, LinComb<usize>>,
}

impl<'b> Reducer<'b> {
    fn parity(&self, basic: usize) -> Parity {
        self.basis.hall().get(basic).parity
    }

    fn basic_bracket(&self, c: usize, d: usize) -> Result<usize> {
        self.basis.hall().bracket_index(c, d).ok_or_else(|| {
            Error::Structural(format!(
                "[{:?}, {:?}] is not a basic commutator",
                self.basis.hall().get(c).term,
                self.basis.hall().get(d).term
            ))
        })
    }

    /// Coordinates of the product `tree` of basic commutators.
    fn reduce_tree(
        &mut self,
        tree: Rc<Tree>,
        out: &mut LinComb<usize>,
        coeff: &BigInt,
    ) -> Result<()> {
        let mut seqs = LinComb::zero();
        left_normed_expansion(&tree, coeff, &mut seqs);
        for (seq, c) in seqs {
            let coords = self.reduce_left_normed(seq)?;
            out.add_scaled(&coords, &c);
        }
        Ok(())
    }

    /// Coordinates of `[seq[0], seq[1], ...]`, where `seq[0]` is a smallest factor.
    fn reduce_left_normed(&mut self, seq: Vec<usize>) -> Result<LinComb<usize>> {
        if let Some(hit) = self.memo.get(&seq) {
            return Ok(hit.clone());
        }
        let mut out = LinComb::zero();
        if seq.len() == 1 {
            out.add_term(self.basis.plain_ordinal(seq[0]), BigInt::one());
        } else {
            let (m, e) = (seq[0], seq[1]);
            debug_assert!(m <= e, "left-normed products start with a smallest factor");
            let shrunk = if m < e {
                let sign = -self.parity(m).koszul_sign(self.parity(e));
                Some((self.basic_bracket(e, m)?, 2, BigInt::from(sign)))
            } else if !self.parity(m).is_odd() {
                None
            } else if seq.len() == 2 {
                let ord = self.basis.square_ordinal(m).ok_or_else(|| {
                    Error::capacity(
                        "odd square",
                        2 * self.basis.hall().get(m).weight,
                        self.basis.max_weight(),
                    )
                })?;
                out.add_term(ord, BigInt::one());
                None
            } else if seq[2] == m {
                None
            } else {
                let gm = self.basic_bracket(seq[2], m)?;
                Some((self.basic_bracket(gm, m)?, 3, BigInt::from(-2)))
            };
            if let Some((head, used, factor)) = shrunk {
                let mut rest = vec![head];
                rest.extend_from_slice(&seq[used..]);
                if rest.len() == 1 {
                    out.add_term(self.basis.plain_ordinal(head), factor);
                } else {
                    let mark = first_minimal_leaf(&rest);
                    let factors: Vec<(usize, Parity)> =
                        rest.iter().map(|&i| (i, self.parity(i))).collect();
                    let tree = marked_left_normed(&factors, mark);
                    self.reduce_tree(tree, &mut out, &factor)?;
                }
            }
        }
        self.memo.insert(seq, out.clone());
        Ok(out)
    }
}

/// Left-normed tree over `factors` with the leaf at `mark` marked.
fn marked_left_normed(factors: &[(usize, Parity)], mark: usize) -> Rc<Tree> {
    if mark == 0 {
        return Tree::left_normed(factors);
    }
    let leaf = |k: usize| Tree::leaf(factors[k].0, factors[k].1, k == mark);
    (1..factors.len()).fold(leaf(0), |acc, k| Tree::node(&acc, &leaf(k)))
}

/// Coordinates of `p` over `basis`, following the straightening procedure
/// described in the module docs.
pub fn normal_form<'b>(p: &LiePoly, basis: &'b SuperBasis) -> Result<Coordinates<'b>> {
    let alphabet = basis.alphabet();
    let mut reducer = Reducer {
        basis,
        memo: HashMap::new(),
    };
    let mut coeffs = LinComb::zero();
    for (term, c) in p {
        term.validate(alphabet)?;
        basis.hall().require_weight("normal_form", term.weight())?;
        // generators are the first basic commutators, in the same order
        let leaves = term.leaves();
        if leaves.len() == 1 {
            coeffs.add_term(basis.plain_ordinal(leaves[0]), c.clone());
            continue;
        }
        let tree = term_tree(term, first_minimal_leaf(&leaves), &mut 0);
        reducer.reduce_tree(tree, &mut coeffs, c)?;
    }
    Ok(Coordinates { basis, coeffs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `[b, a] + (-1)^{|a||b|} [a, b]`
    Antisymmetry,
    /// `(-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]`
    Jacobi,
    /// `[a, a]` for even `a`
    EvenSquare,
    /// `[a, a, a]` for odd `a`
    OddCube,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub identity: Identity,
    /// Positions in the sample.
    pub args: Vec<usize>,
    pub zero_by_normal_form: bool,
    pub zero_by_expansion: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_zero(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.zero_by_normal_form && c.zero_by_expansion)
    }
}

/// Evaluates the superalgebra identities on every pair and triple drawn
/// from `sample` (and the square/cube rules on each element), through both
/// `normal_form` and associative expansion.
pub fn check_axioms(sample: &[LiePoly], basis: &SuperBasis) -> Result<AxiomReport> {
    let parities = sample
        .iter()
        .enumerate()
        .map(|(i, p)| {
            p.homogeneous_parity()
                .ok_or_else(|| Error::Domain(format!("sample element {i} is not homogeneous")))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = AxiomReport::default();
    let mut record = |identity, args: Vec<usize>, expr: LiePoly| -> Result<()> {
        report.checks.push(AxiomCheck {
            identity,
            args,
            zero_by_normal_form: normal_form(&expr, basis)?.is_zero(),
            zero_by_expansion: expand_poly(&expr).is_zero(),
        });
        Ok(())
    };
    let sign = |x: usize, y: usize| BigInt::from(parities[x].koszul_sign(parities[y]));
    let br = |x: usize, y: usize| bracket(&sample[x], &sample[y]);

    for (a, pa) in sample.iter().enumerate() {
        let sq = bracket(pa, pa);
        if parities[a].is_odd() {
            record(Identity::OddCube, vec![a], bracket(&sq, pa))?;
        } else {
            record(Identity::EvenSquare, vec![a], sq)?;
        }
    }
    for a in 0..sample.len() {
        for b in 0..sample.len() {
            let mut expr = br(b, a);
            expr.add_scaled(&br(a, b), &sign(a, b));
            record(Identity::Antisymmetry, vec![a, b], expr)?;
        }
    }
    for a in 0..sample.len() {
        for b in 0..sample.len() {
            for c in 0..sample.len() {
                let mut expr = bracket(&sample[a], &br(b, c)).scaled(&sign(a, c));
                expr.add_scaled(&bracket(&sample[b], &br(c, a)), &sign(b, a));
                expr.add_scaled(&bracket(&sample[c], &br(a, b)), &sign(c, b));
                record(Identity::Jacobi, vec![a, b, c], expr)?;
            }
        }
    }
    Ok(report)
}
