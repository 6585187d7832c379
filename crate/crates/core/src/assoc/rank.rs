//! Exact rank and exact solving for families of associative polynomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{AssocPoly, AssocWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub inputs: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub independent: bool,
    /// Pivot monomials, one per independent row.
    pub pivots: Vec<AssocWord>,
}

impl RankReport {
    pub fn to_json(&self) -> Value {
        json!({
            "count": self.inputs,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "independent": self.independent,
        })
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// `ka * a - kb * b`, dropping cancelled entries.
fn combine(a: &[(usize, BigInt)], ka: &BigInt, b: &[(usize, BigInt)], kb: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, ka * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(kb * &b[j].1)));
            j += 1;
        } else {
            let v = ka * &a[i].1 - kb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn remove_content(row: &mut SparseRow) {
    let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Incremental row echelon form over the integers. Each new row is reduced
/// against existing pivots by integer-preserving combinations
/// `p * row - r * pivot` followed by division by the row content.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    /// Returns the pivot column if the row is independent of those seen so far.
    fn insert(&mut self, mut row: SparseRow) -> Option<usize> {
        loop {
            let (lead, _) = row.first()?;
            let lead = *lead;
            match self.pivots.get(&lead) {
                None => {
                    remove_content(&mut row);
                    self.pivots.insert(lead, row);
                    return Some(lead);
                }
                Some(p) => {
                    let (pv, rv) = (&p[0].1, &row[0].1);
                    let g = pv.gcd(rv);
                    row = combine(&row, &(pv / &g), p, &(rv / &g));
                    remove_content(&mut row);
                }
            }
        }
    }
}

/// Exact rank of the coefficient matrix of `rows` (one row per polynomial,
/// one column per monomial). Independence over the rationals coincides with
/// independence over the integers for integer vectors.
pub fn rank_over_integers(rows: &[AssocPoly]) -> RankReport {
    let columns: BTreeSet<&AssocWord> = rows.iter().flat_map(|r| r.keys()).collect();
    let words: Vec<&AssocWord> = columns.into_iter().collect();
    let col_of: BTreeMap<&AssocWord, usize> =
        words.iter().enumerate().map(|(i, w)| (*w, i)).collect();

    let mut echelon = Echelon::default();
    let mut pivots = Vec::new();
    for r in rows {
        let row: SparseRow = r.iter().map(|(w, c)| (col_of[w], c.clone())).collect();
        if let Some(col) = echelon.insert(row) {
            pivots.push(words[col].clone());
        }
    }
    let rank = pivots.len();
    RankReport {
        inputs: rows.len(),
        rows: rows.len(),
        cols: words.len(),
        rank,
        independent: rank == rows.len(),
        pivots,
    }
}

/// Integer coefficients `x` with `p = sum x_i basis_i`, or `None` when `p`
/// is outside the integer span of `basis`.
///
/// `basis` must be linearly independent.
pub fn solve_coordinates(p: &AssocPoly, basis: &[AssocPoly]) -> Result<Option<Vec<BigInt>>> {
    let report = rank_over_integers(basis);
    if !report.independent {
        return Err(Error::Domain(format!(
            "basis of {} polynomials has rank {}",
            report.inputs, report.rank
        )));
    }
    let k = basis.len();
    if p.is_zero() {
        return Ok(Some(vec![BigInt::zero(); k]));
    }
    let words: BTreeSet<&AssocWord> = basis
        .iter()
        .chain(std::iter::once(p))
        .flat_map(|r| r.keys())
        .collect();

    // one equation per monomial: sum_j basis_j[w] x_j = p[w]
    let mut rows: Vec<Vec<BigRational>> = words
        .iter()
        .map(|w| {
            basis
                .iter()
                .map(|b| BigRational::from_integer(b.coeff(w)))
                .chain(std::iter::once(BigRational::from_integer(p.coeff(w))))
                .collect()
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..k {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            unreachable!("independent columns always have a pivot");
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot) {
                *v = &*v - &f * pv;
            }
        }
        pivot_row += 1;
    }
    if rows[k..].iter().any(|row| !row[k].is_zero()) {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(k);
    for row in &rows[..k] {
        let x = &row[k];
        if !x.is_integer() {
            return Ok(None);
        }
        out.push(x.to_integer());
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{Alphabet, Parity::*};
    use crate::assoc::expand_term;
    use crate::hall::SuperBasis;
    use crate::term::LieTerm;

    fn w(v: &[usize]) -> AssocWord {
        AssocWord::new(v.to_vec())
    }

    fn poly(terms: &[(&[usize], i64)]) -> AssocPoly {
        terms
            .iter()
            .map(|(v, c)| (w(v), BigInt::from(*c)))
            .collect()
    }

    /// Rank by exhaustive determinant search over square minors.
    fn brute_rank(m: &[Vec<i64>]) -> usize {
        fn det(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(c, _)| c != j)
                                .map(|(_, &v)| v)
                                .collect()
                        })
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * det(&minor)
                })
                .sum()
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            (0..n)
                .flat_map(|last| {
                    subsets(last, k - 1).into_iter().map(move |mut s| {
                        s.push(last);
                        s
                    })
                })
                .collect()
        }
        let (r, c) = (m.len(), m[0].len());
        for k in (1..=r.min(c)).rev() {
            for rows in subsets(r, k) {
                for cols in subsets(c, k) {
                    let sub: Vec<Vec<i64>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| m[i][j]).collect())
                        .collect();
                    if det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_over_integers(&[poly(&[(&[0], 1)])]).rank, 1);
        let r = rank_over_integers(&[
            poly(&[(&[0, 1], 1), (&[1, 0], 1)]),
            poly(&[(&[0, 1], 1), (&[1, 0], -1)]),
        ]);
        assert_eq!((r.rank, r.independent), (2, true));
        let empty = rank_over_integers(&[]);
        assert_eq!((empty.rank, empty.independent), (0, true));
        let dep = rank_over_integers(&[poly(&[(&[0], 2)]), poly(&[(&[0], -3)])]);
        assert_eq!((dep.rank, dep.independent), (1, false));
        assert!(!rank_over_integers(&[AssocPoly::zero()]).independent);

        let x = Alphabet::new([("x", Odd)]).unwrap();
        let t = LieTerm::leaf(&x, 0).unwrap();
        let rows = [expand_term(&t), expand_term(&LieTerm::bracket(&t, &t))];
        assert_eq!(rank_over_integers(&rows).rank, 2);
    }

    #[test]
    fn rank_matches_minor_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            let base: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            // sometimes force a dependency
            let mut m = base.clone();
            if r > 1 && rng.gen_bool(0.4) {
                m[r - 1] = m[0].iter().zip(&m[1 % r]).map(|(a, b)| 2 * a - b).collect();
            }
            let rows: Vec<AssocPoly> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &v)| (w(&[j]), BigInt::from(v)))
                        .collect()
                })
                .collect();
            assert_eq!(rank_over_integers(&rows).rank, brute_rank(&m), "{m:?}");
        }
    }

    #[test]
    fn solve_examples() {
        let a = Alphabet::new([("x", Odd), ("y", Even)]).unwrap();
        let sb = SuperBasis::new(&a, 3).unwrap();
        let w3: Vec<_> = sb.of_weight(3).map(|(_, e)| e).collect();
        let rows: Vec<AssocPoly> = w3.iter().map(|e| expand_term(&e.term())).collect();

        let (x, y) = (LieTerm::leaf(&a, 0).unwrap(), LieTerm::leaf(&a, 1).unwrap());
        let target = expand_term(&LieTerm::left_normed(&[x.clone(), x.clone(), y.clone()]));
        let coords = solve_coordinates(&target, &rows).unwrap().unwrap();
        let yxx = LieTerm::left_normed(&[y.clone(), x.clone(), x.clone()]);
        for (e, c) in w3.iter().zip(&coords) {
            let want = if e.term() == yxx { -2 } else { 0 };
            assert_eq!(c, &BigInt::from(want));
        }

        assert_eq!(
            solve_coordinates(&AssocPoly::zero(), &rows)
                .unwrap()
                .unwrap(),
            vec![BigInt::zero(); rows.len()]
        );
        for (i, r) in rows.iter().enumerate() {
            let unit = solve_coordinates(r, &rows).unwrap().unwrap();
            for (j, c) in unit.iter().enumerate() {
                assert_eq!(c, &BigInt::from((i == j) as i64));
            }
        }

        // half of [x,x] is 'xx': in the rational span but not the integer span
        let sq = SuperBasis::new(&Alphabet::new([("x", Odd)]).unwrap(), 2).unwrap();
        let rows2: Vec<AssocPoly> = sq
            .of_weight(2)
            .map(|(_, e)| expand_term(&e.term()))
            .collect();
        assert_eq!(
            solve_coordinates(&poly(&[(&[0, 0], 1)]), &rows2).unwrap(),
            None
        );
        assert_eq!(
            solve_coordinates(&poly(&[(&[0, 1], 1)]), &rows2).unwrap(),
            None
        );

        let dep = [poly(&[(&[0], 1)]), poly(&[(&[0], 2)])];
        assert!(matches!(
            solve_coordinates(&poly(&[(&[0], 1)]), &dep),
            Err(Error::Domain(_))
        ));
    }
}
