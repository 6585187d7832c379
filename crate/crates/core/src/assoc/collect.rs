//! Collection of associative words into products of basic commutators.
//!
//! Basic commutators `b_0 < b_1 < ...` are collected to the left one at a
//! time. While collecting `b_s`, the leftmost adjacent pair `c b_s` with
//! `c > b_s` in the uncollected tail is rewritten with
//! `c b_s = [c, b_s] + (-1)^{|c||b_s|} b_s c`; the new factor `[c, b_s]` is
//! again basic and lies above `b_s`.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hall::HallBasis;
use crate::poly::{write_combination, AssocWord, LinComb};

/// A product `c_1 c_2 ... c_m` of basic commutators, by index.
///
/// Fully collected products are nondecreasing; partial collection (see
/// [`collect_through`]) can leave larger factors out of order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicProduct(Vec<usize>);

impl BasicProduct {
    pub fn new(factors: Vec<usize>) -> Self {
        BasicProduct(factors)
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self, hall: &HallBasis) -> usize {
        self.0.iter().map(|&i| hall.get(i).weight).sum()
    }

    /// `c_1 <= c_2 <= ... <= c_m`
    pub fn is_basic(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn render(&self, hall: &HallBasis) -> String {
        let alphabet = hall.alphabet();
        let sep = if alphabet.single_char_names() {
            ""
        } else {
            "·"
        };
        self.0
            .iter()
            .map(|&i| hall.get(i).term.display(alphabet).to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

pub type CollectedPoly = LinComb<BasicProduct>;

pub struct CollectedDisplay<'a> {
    pub poly: &'a CollectedPoly,
    pub hall: &'a HallBasis,
}

impl fmt::Display for CollectedDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.poly.iter().map(|(p, c)| (p.render(self.hall), c)))
    }
}

impl CollectedDisplay<'_> {
    pub fn to_json(&self) -> Value {
        let alphabet = self.hall.alphabet();
        let terms: Vec<Value> = self
            .poly
            .iter()
            .map(|(p, c)| {
                json!({
                    "coeff": crate::bigint_json(c),
                    "factors": p.factors().iter().map(|&i| self.hall.get(i).term.to_json(alphabet)).collect::<Vec<_>>(),
                    "indices": p.factors(),
                    "text": p.render(self.hall),
                })
            })
            .collect();
        json!({ "terms": terms, "text": self.to_string() })
    }
}

/// All nondecreasing products of basic commutators of total weight `weight`.
pub fn enum_basic_products(hall: &HallBasis, weight: usize) -> Result<Vec<BasicProduct>> {
    hall.require_weight("basic products", weight)?;
    fn extend(
        hall: &HallBasis,
        remaining: usize,
        min_index: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<BasicProduct>,
    ) {
        if remaining == 0 {
            out.push(BasicProduct(prefix.clone()));
            return;
        }
        for c in &hall.elements()[min_index..] {
            if c.weight > remaining {
                break;
            }
            prefix.push(c.index);
            extend(hall, remaining - c.weight, c.index, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if weight > 0 {
        extend(hall, weight, 0, &mut Vec::new(), &mut out);
    }
    Ok(out)
}

/// Collects every occurrence of `stage` to the left of the uncollected tail.
fn collect_stage(
    hall: &HallBasis,
    stage: usize,
    input: LinComb<Vec<usize>>,
) -> Result<LinComb<Vec<usize>>> {
    let stage_parity = hall.get(stage).parity;
    let mut done = LinComb::zero();
    let mut work = input;
    while let Some((seq, coeff)) = pop_first(&mut work) {
        let start = seq.iter().take_while(|&&f| f < stage).count();
        let hit =
            (start..seq.len().saturating_sub(1)).find(|&j| seq[j] > stage && seq[j + 1] == stage);
        let Some(j) = hit else {
            done.add_term(seq, coeff);
            continue;
        };
        let c = seq[j];
        let commutator = hall.bracket_index(c, stage).ok_or_else(|| {
            Error::Structural(format!("[{c}, {stage}] is not a basic commutator"))
        })?;
        let mut bracketed = seq[..j].to_vec();
        bracketed.push(commutator);
        bracketed.extend_from_slice(&seq[j + 2..]);
        work.add_term(bracketed, coeff.clone());

        let mut swapped = seq;
        swapped.swap(j, j + 1);
        let sign = hall.get(c).parity.koszul_sign(stage_parity);
        work.add_term(swapped, coeff * sign);
    }
    Ok(done)
}

fn pop_first(work: &mut LinComb<Vec<usize>>) -> Option<(Vec<usize>, BigInt)> {
    let key = work.keys().next()?.clone();
    let c = work.coeff(&key);
    work.add_term(key.clone(), -c.clone());
    Some((key, c))
}

fn run(word: &AssocWord, hall: &HallBasis, last_stage: Option<usize>) -> Result<CollectedPoly> {
    hall.require_weight("collect", word.len())?;
    let alphabet = hall.alphabet();
    for &l in word.letters() {
        alphabet.get(l)?;
    }
    if word.is_empty() {
        return Err(Error::Domain("cannot collect the empty word".into()));
    }
    let mut state = LinComb::monomial(word.letters().to_vec());
    let stages = match last_stage {
        Some(s) => s + 1,
        None => hall.len(),
    };
    for stage in 0..stages.min(hall.len()) {
        if state
            .keys()
            .all(|seq: &Vec<usize>| seq.windows(2).all(|w| w[0] <= w[1]))
        {
            break;
        }
        state = collect_stage(hall, stage, state)?;
    }
    Ok(state.map_keys(|seq| BasicProduct(seq.clone())))
}

/// Writes `word` as a combination of basic products (nondecreasing
/// products of basic commutators).
pub fn collect(word: &AssocWord, hall: &HallBasis) -> Result<CollectedPoly> {
    run(word, hall, None)
}

/// Collects only the basic commutators with index `<= last_stage`,
/// leaving the tail of each product uncollected.
///
/// With `last_stage = 0` this moves every copy of the first generator to
/// the left, e.g. `baba = aabb + ab[b,a] + 2a[b,a]b + [b,a][b,a] + [b,a,a]b`.
pub fn collect_through(
    word: &AssocWord,
    hall: &HallBasis,
    last_stage: usize,
) -> Result<CollectedPoly> {
    run(word, hall, Some(last_stage))
}
