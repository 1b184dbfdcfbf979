//! The matrix crystal: nonnegative integer matrices indexed by pairs of
//! letters (entries at most one in mixed-parity positions), their two
//! biword encodings, the commuting row and column crystal structures, the
//! RSK map onto pairs of quasi-ribbon tableaux, and descent-pair counting.

use std::collections::BTreeMap;

use serde_json::json;

use crate::alphabet::{GradedAlphabet, Letter, Parity, SimpleRoot};
use crate::crystal::{self, CrystalOp};
use crate::error::{Error, Result};
use crate::insertion::qr_p;
use crate::shape::Composition;
use crate::tableau::{qr_highest, QuasiRibbonTableau};
use crate::weight::Weight;
use crate::word::Word;

/// A finitely supported matrix of nonnegative integers over letter pairs
/// `(row, col)`, with entries at most one when the parities differ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SuperMatrix {
    entries: BTreeMap<(Letter, Letter), u64>,
}

impl SuperMatrix {
    pub fn zero() -> Self {
        SuperMatrix::default()
    }

    pub fn from_entries(
        entries: impl IntoIterator<Item = ((Letter, Letter), u64)>,
        alphabet: &GradedAlphabet,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((r, s), c) in entries {
            if c == 0 {
                continue;
            }
            alphabet.check_letter(r)?;
            alphabet.check_letter(s)?;
            *map.entry((r, s)).or_insert(0) += c;
        }
        let m = SuperMatrix { entries: map };
        m.check(alphabet)?;
        Ok(m)
    }

    pub fn check(&self, alphabet: &GradedAlphabet) -> Result<()> {
        for (&(r, s), &c) in &self.entries {
            if alphabet.parity(r) != alphabet.parity(s) && c > 1 {
                return Err(Error::BadMatrix(format!(
                    "entry ({},{}) = {c} exceeds 1 for mixed parity",
                    alphabet.display(r),
                    alphabet.display(s)
                )));
            }
        }
        Ok(())
    }

    pub fn entry(&self, r: Letter, s: Letter) -> u64 {
        self.entries.get(&(r, s)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Letter, Letter), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Row-sum weight: `wt(A)`.
    pub fn row_weight(&self) -> Weight {
        let mut w = Weight::zero();
        for (&(r, _), &c) in &self.entries {
            w.add_letter(r, c as i64);
        }
        w
    }

    /// Column-sum weight: `wt*(A)`.
    pub fn col_weight(&self) -> Weight {
        let mut w = Weight::zero();
        for (&(_, s), &c) in &self.entries {
            w.add_letter(s, c as i64);
        }
        w
    }

    pub fn to_json(&self, alphabet: &GradedAlphabet) -> serde_json::Value {
        json!({
            "entries": self
                .iter()
                .map(|((r, s), c)| {
                    json!([alphabet.display(r), alphabet.display(s), c])
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value, alphabet: &GradedAlphabet) -> Result<Self> {
        let arr = value
            .get("entries")
            .and_then(|e| e.as_array())
            .ok_or_else(|| Error::BadMatrix("missing `entries` array".into()))?;
        let mut entries = Vec::new();
        for item in arr {
            let triple = item.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
                Error::BadMatrix("entry is not a [row, col, count] triple".into())
            })?;
            let r = triple[0]
                .as_str()
                .ok_or_else(|| Error::BadMatrix("row letter is not a string".into()))?;
            let s = triple[1]
                .as_str()
                .ok_or_else(|| Error::BadMatrix("col letter is not a string".into()))?;
            let c = triple[2]
                .as_u64()
                .ok_or_else(|| Error::BadMatrix("count is not a nonnegative integer".into()))?;
            entries.push(((alphabet.parse_letter(r)?, alphabet.parse_letter(s)?), c));
        }
        SuperMatrix::from_entries(entries, alphabet)
    }
}

/// A biword: a sorted sequence of letter pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Biword(pub Vec<(Letter, Letter)>);

impl Biword {
    pub fn first_word(&self) -> Word {
        Word(self.0.iter().map(|&(a, _)| a).collect())
    }

    pub fn second_word(&self) -> Word {
        Word(self.0.iter().map(|&(_, b)| b).collect())
    }
}

fn pair_multiset(m: &SuperMatrix) -> Vec<(Letter, Letter)> {
    let mut out = Vec::new();
    for ((r, s), c) in m.iter() {
        out.extend(std::iter::repeat_n((r, s), c as usize));
    }
    out
}

/// Super lexicographic comparison of pairs keyed by the `key` component
/// (the other component breaks ties, descending when the key letter is
/// even and ascending when odd).
fn super_lex(
    alphabet: &GradedAlphabet,
    key: Letter,
    other_a: Letter,
    other_b: Letter,
) -> std::cmp::Ordering {
    match alphabet.parity(key) {
        Parity::Even => other_b.cmp(&other_a),
        Parity::Odd => other_a.cmp(&other_b),
    }
}

/// The biword in Omega: pairs sorted by column letter, ties broken by row
/// letter (descending under an even column, ascending under an odd one).
pub fn omega_biword(m: &SuperMatrix, alphabet: &GradedAlphabet) -> Biword {
    let mut pairs = pair_multiset(m);
    pairs.sort_by(|&(r1, s1), &(r2, s2)| s1.cmp(&s2).then_with(|| super_lex(alphabet, s1, r1, r2)));
    Biword(pairs)
}

/// The biword in Omega*: pairs sorted by row letter, ties broken by
/// column letter (descending under an even row, ascending under an odd
/// one).
pub fn omega_star_biword(m: &SuperMatrix, alphabet: &GradedAlphabet) -> Biword {
    let mut pairs = pair_multiset(m);
    pairs.sort_by(|&(r1, s1), &(r2, s2)| r1.cmp(&r2).then_with(|| super_lex(alphabet, r1, s1, s2)));
    Biword(pairs)
}

/// Both biword encodings of a matrix: the Omega biword (sorted by
/// column letter) and the Omega* biword (sorted by row letter). Each
/// round-trips with the matrix.
pub fn biwords(m: &SuperMatrix, alphabet: &GradedAlphabet) -> (Biword, Biword) {
    (omega_biword(m, alphabet), omega_star_biword(m, alphabet))
}

/// The row crystal operator `x_i`: acts on the first word of the Omega
/// biword and re-encodes.
pub fn row_apply(
    op: CrystalOp,
    root: &SimpleRoot,
    m: &SuperMatrix,
    alphabet: &GradedAlphabet,
) -> Result<Option<SuperMatrix>> {
    let bw = omega_biword(m, alphabet);
    match crystal::apply(op, alphabet, root, &bw.first_word())? {
        None => Ok(None),
        Some(w) => {
            let pairs = w
                .letters()
                .iter()
                .copied()
                .zip(bw.0.iter().map(|&(_, s)| s));
            Ok(Some(SuperMatrix::from_entries(
                pairs.map(|p| (p, 1)),
                alphabet,
            )?))
        }
    }
}

/// The column crystal operator `x_j^*`: acts on the second word of the
/// Omega* biword and re-encodes.
pub fn col_apply(
    op: CrystalOp,
    root: &SimpleRoot,
    m: &SuperMatrix,
    alphabet: &GradedAlphabet,
) -> Result<Option<SuperMatrix>> {
    let bw = omega_star_biword(m, alphabet);
    match crystal::apply(op, alphabet, root, &bw.second_word())? {
        None => Ok(None),
        Some(w) => {
            let pairs =
                bw.0.iter()
                    .map(|&(k, _)| k)
                    .zip(w.letters().iter().copied());
            Ok(Some(SuperMatrix::from_entries(
                pairs.map(|p| (p, 1)),
                alphabet,
            )?))
        }
    }
}

pub fn is_row_highest(m: &SuperMatrix, alphabet: &GradedAlphabet) -> Result<bool> {
    crystal::is_highest(alphabet, &omega_biword(m, alphabet).first_word())
}

pub fn is_col_highest(m: &SuperMatrix, alphabet: &GradedAlphabet) -> Result<bool> {
    crystal::is_highest(alphabet, &omega_star_biword(m, alphabet).second_word())
}

/// The RSK pair of a matrix: the quasi P-tableaux of the Omega first word
/// and the Omega* second word.
pub fn rsk(
    m: &SuperMatrix,
    alphabet: &GradedAlphabet,
) -> Result<(QuasiRibbonTableau, QuasiRibbonTableau)> {
    m.check(alphabet)?;
    let p1 = qr_p(&omega_biword(m, alphabet).first_word(), alphabet)?;
    let p2 = qr_p(&omega_star_biword(m, alphabet).second_word(), alphabet)?;
    Ok((p1, p2))
}

/// All matrices over the alphabet with a given total.
pub fn matrices_with_total(alphabet: &GradedAlphabet, total: u64) -> Vec<SuperMatrix> {
    let cells: Vec<(Letter, Letter)> = alphabet
        .letters()
        .flat_map(|r| alphabet.letters().map(move |s| (r, s)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        cells: &[(Letter, Letter)],
        idx: usize,
        left: u64,
        alphabet: &GradedAlphabet,
        cur: &mut Vec<((Letter, Letter), u64)>,
        out: &mut Vec<SuperMatrix>,
    ) {
        if idx == cells.len() {
            if left == 0 {
                out.push(
                    SuperMatrix::from_entries(cur.iter().copied(), alphabet).expect("within caps"),
                );
            }
            return;
        }
        let (r, s) = cells[idx];
        let cap = if alphabet.parity(r) != alphabet.parity(s) {
            1.min(left)
        } else {
            left
        };
        for c in 0..=cap {
            if c > 0 {
                cur.push(((r, s), c));
            }
            rec(cells, idx + 1, left - c, alphabet, cur, out);
            if c > 0 {
                cur.pop();
            }
        }
    }
    rec(&cells, 0, total, alphabet, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All matrices with the given row-sum and column-sum weights.
pub fn matrices_with_weights(
    alphabet: &GradedAlphabet,
    row_wt: &Weight,
    col_wt: &Weight,
) -> Vec<SuperMatrix> {
    let total: i64 = row_wt.iter().map(|(_, c)| c).sum();
    if total != col_wt.iter().map(|(_, c)| c).sum::<i64>() || total < 0 {
        return Vec::new();
    }
    matrices_with_total(alphabet, total as u64)
        .into_iter()
        .filter(|m| &m.row_weight() == row_wt && &m.col_weight() == col_wt)
        .collect()
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 1..=k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k + 1], &mut out);
    out
}

/// Descent set of a permutation given in one-line notation (1-based).
pub fn permutation_descents(sigma: &[usize]) -> std::collections::BTreeSet<usize> {
    (1..sigma.len())
        .filter(|&i| sigma[i - 1] > sigma[i])
        .collect()
}

pub fn permutation_inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &v) in sigma.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// Counts, for descent sets `s` and `s_prime` inside {1..k-1}: the
/// permutations in S_k with descents `s` whose inverse has descents
/// `s_prime`, and the doubly-highest matrices of total k whose row and
/// column weights are the highest weights of the corresponding descent
/// compositions. The truncation must support both highest weights.
pub fn gessel_count(
    s: &std::collections::BTreeSet<usize>,
    s_prime: &std::collections::BTreeSet<usize>,
    k: usize,
    alphabet: &GradedAlphabet,
) -> Result<(u64, u64)> {
    let alpha_s = Composition::from_subset(s, k)?;
    let alpha_sp = Composition::from_subset(s_prime, k)?;

    let perm_count = all_permutations(k)
        .into_iter()
        .filter(|sigma| {
            permutation_descents(sigma) == *s
                && permutation_descents(&permutation_inverse(sigma)) == *s_prime
        })
        .count() as u64;

    let row_wt = qr_highest(&alpha_s, alphabet)
        .map_err(|_| {
            Error::TruncationTooSmall(format!(
                "highest weight of {alpha_s} is not supported over {}",
                alphabet.name()
            ))
        })?
        .weight();
    let col_wt = qr_highest(&alpha_sp, alphabet)
        .map_err(|_| {
            Error::TruncationTooSmall(format!(
                "highest weight of {alpha_sp} is not supported over {}",
                alphabet.name()
            ))
        })?
        .weight();

    let mut matrix_count = 0u64;
    for m in matrices_with_weights(alphabet, &row_wt, &col_wt) {
        if is_row_highest(&m, alphabet)? && is_col_highest(&m, alphabet)? {
            matrix_count += 1;
        }
    }
    Ok((perm_count, matrix_count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::BOTH_OPS;

    fn alpha(spec: &str) -> GradedAlphabet {
        GradedAlphabet::parse(spec).unwrap()
    }

    fn mat(a: &GradedAlphabet, entries: &[(&str, &str, u64)]) -> SuperMatrix {
        SuperMatrix::from_entries(
            entries
                .iter()
                .map(|&(r, s, c)| ((a.parse_letter(r).unwrap(), a.parse_letter(s).unwrap()), c)),
            a,
        )
        .unwrap()
    }

    #[test]
    fn matrix_invariants() {
        let a = alpha("half:1");
        assert!(SuperMatrix::from_entries(
            [(
                (a.parse_letter("1/2").unwrap(), a.parse_letter("1").unwrap()),
                2
            )],
            &a
        )
        .is_err());
        let m = mat(&a, &[("1/2", "1/2", 3), ("1", "1", 1)]);
        assert_eq!(m.total(), 4);
    }

    #[test]
    fn biword_sort_examples() {
        let a = alpha("half:1");
        // Zero matrix gives empty biwords.
        let z = SuperMatrix::zero();
        assert!(omega_biword(&z, &a).0.is_empty());
        assert!(omega_star_biword(&z, &a).0.is_empty());

        // a_{1,1/2} = a_{1/2,1} = 1: the Omega order puts (1,1/2) first.
        let m = mat(&a, &[("1", "1/2", 1), ("1/2", "1", 1)]);
        let bw = omega_biword(&m, &a);
        assert_eq!(bw.first_word().display(&a), "1 1/2");
        assert_eq!(bw.second_word().display(&a), "1/2 1");

        // Repeated same-parity pairs are fine and adjacent.
        let m = mat(&a, &[("1/2", "1/2", 2)]);
        assert_eq!(omega_biword(&m, &a).0.len(), 2);
    }

    #[test]
    fn biwords_round_trip_through_the_matrix() {
        let a = alpha("half:1");
        for m in matrices_with_total(&a, 3) {
            for bw in [omega_biword(&m, &a), omega_star_biword(&m, &a)] {
                let back = SuperMatrix::from_entries(bw.0.iter().map(|&p| (p, 1)), &a).unwrap();
                assert_eq!(back, m);
            }
        }
    }

    #[test]
    fn omega_biword_is_sorted_super_lexicographically() {
        // Eq-style check of the published ordering: (i,j) <= (k,l) iff
        // j < l, or j = l even and i >= k, or j = l odd and i <= k.
        let a = alpha("half:2");
        for m in matrices_with_total(&a, 3) {
            let bw = omega_biword(&m, &a);
            for w in bw.0.windows(2) {
                let ((i, j), (k, l)) = (w[0], w[1]);
                let ok = j < l
                    || (j == l
                        && match a.parity(j) {
                            Parity::Even => i >= k,
                            Parity::Odd => i <= k,
                        });
                assert!(ok);
                // Mixed-parity pairs never repeat adjacently.
                if a.parity(i) != a.parity(j) {
                    assert_ne!((i, j), (k, l));
                }
            }
        }
    }

    #[test]
    fn rsk_trivial_cases() {
        let a = alpha("half:1");
        let (p1, p2) = rsk(&SuperMatrix::zero(), &a).unwrap();
        assert_eq!(p1.size(), 0);
        assert_eq!(p2.size(), 0);

        let m = mat(&a, &[("1/2", "1/2", 1)]);
        let (p1, p2) = rsk(&m, &a).unwrap();
        assert_eq!(p1.reading_word().display(&a), "1/2");
        assert_eq!(p2.reading_word().display(&a), "1/2");
    }

    #[test]
    fn rsk_injective_on_small_totals() {
        let a = alpha("half:1");
        let mut seen = std::collections::HashSet::new();
        for m in matrices_with_total(&a, 2) {
            let pair = rsk(&m, &a).unwrap();
            // Same shape on both sides via a common standard pair.
            assert!(seen.insert(pair), "collision for {m:?}");
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn matrix_operators_preserve_the_other_tableau() {
        // P1 is unchanged by column operators, P2 by row operators.
        let a = alpha("half:1");
        for m in matrices_with_total(&a, 3) {
            let (p1, p2) = rsk(&m, &a).unwrap();
            for r in 0..a.num_roots() {
                let root = a.root(r);
                for op in BOTH_OPS {
                    if let Some(m2) = col_apply(op, &root, &m, &a).unwrap() {
                        assert_eq!(rsk(&m2, &a).unwrap().0, p1);
                    }
                    if let Some(m2) = row_apply(op, &root, &m, &a).unwrap() {
                        assert_eq!(rsk(&m2, &a).unwrap().1, p2);
                    }
                }
            }
        }
    }

    #[test]
    fn bicrystal_commutation_small() {
        let a = alpha("half:1");
        let root = a.root(0);
        for m in matrices_with_total(&a, 3) {
            for op_row in BOTH_OPS {
                for op_col in BOTH_OPS {
                    let rc = match row_apply(op_row, &root, &m, &a).unwrap() {
                        Some(mm) => col_apply(op_col, &root, &mm, &a).unwrap(),
                        None => None,
                    };
                    let cr = match col_apply(op_col, &root, &m, &a).unwrap() {
                        Some(mm) => row_apply(op_row, &root, &mm, &a).unwrap(),
                        None => None,
                    };
                    assert_eq!(rc, cr, "commutation failed on {m:?}");
                }
            }
        }
    }

    #[test]
    fn gessel_small_counts() {
        use std::collections::BTreeSet;
        let a = alpha("half:2");
        let empty = BTreeSet::new();
        assert_eq!(gessel_count(&empty, &empty, 1, &a).unwrap(), (1, 1));
        let one: BTreeSet<usize> = [1].into_iter().collect();
        let two: BTreeSet<usize> = [2].into_iter().collect();
        assert_eq!(gessel_count(&one, &one, 3, &a).unwrap(), (1, 1));
        assert_eq!(gessel_count(&one, &two, 3, &a).unwrap(), (1, 1));
    }

    #[test]
    fn gessel_needs_a_big_enough_truncation() {
        use std::collections::BTreeSet;
        let a = alpha("half:1");
        // alpha({1,2,3}) = (1,1,1,1)... fits; use a descent set whose
        // composition needs 3 corners: {1} in S_3 gives (1,2).
        let s: BTreeSet<usize> = [2].into_iter().collect();
        // (2,1) has 3 corners; over half:1 the highest weight does not fit.
        assert!(matches!(
            gessel_count(&s, &s, 3, &a),
            Err(Error::TruncationTooSmall(_))
        ));
    }

    #[test]
    fn matrix_json_round_trip() {
        let a = alpha("half:1");
        let m = mat(&a, &[("1/2", "1", 1), ("1", "1", 2)]);
        let j = m.to_json(&a);
        assert_eq!(SuperMatrix::from_json(&j, &a).unwrap(), m);
        assert!(SuperMatrix::from_json(&json!({"entries": [["1/2"]]}), &a).is_err());
    }
}
