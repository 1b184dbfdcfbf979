//! Insertion algorithms: quasi-ribbon insertion with its P/Q
//! correspondence over truncations of N, and column bumping insertion into
//! semistandard tableaux with the equivalence contract `w ~ P(w)`.

use crate::alphabet::{GradedAlphabet, Letter, Parity};
use crate::error::{Error, Result};
use crate::shape::{Composition, Step};
use crate::tableau::{QuasiRibbonTableau, SemistandardTableau, StandardRibbonTableau};
use crate::word::Word;

/// Splices `value` into a ribbon at position `k` (1-based; `k = r + 1`
/// appends after the last cell): the new cell sits below the last cell of
/// the prefix, and the old k-th cell continues to its right.
fn splice<T: Copy>(
    shape: &Composition,
    entries: &[T],
    k: usize,
    value: T,
) -> (Composition, Vec<T>) {
    let r = entries.len();
    let steps = shape.ribbon_steps();
    let mut new_entries = Vec::with_capacity(r + 1);
    new_entries.extend_from_slice(&entries[..k - 1]);
    new_entries.push(value);
    new_entries.extend_from_slice(&entries[k - 1..]);

    let mut new_steps = Vec::with_capacity(r);
    new_steps.extend_from_slice(&steps[..k.saturating_sub(2)]);
    if k >= 2 {
        new_steps.push(Step::Down);
    }
    if k <= r {
        new_steps.push(Step::Right);
        new_steps.extend_from_slice(&steps[k - 1..]);
    }
    (Composition::from_steps(&new_steps, false), new_entries)
}

/// Finds the insertion position for a letter: the first entry (NW→SE)
/// weakly above `b` when `b` is even, strictly above when odd; `r + 1`
/// when none qualifies.
fn insertion_position(b: Letter, entries: &[Letter], alphabet: &GradedAlphabet) -> usize {
    let strict = alphabet.parity(b) == Parity::Odd;
    for (i, &t) in entries.iter().enumerate() {
        if (strict && b < t) || (!strict && b <= t) {
            return i + 1;
        }
    }
    entries.len() + 1
}

/// Quasi-ribbon insertion of a letter into a tableau over a truncation of
/// N.
pub fn qr_insert(
    b: Letter,
    t: &QuasiRibbonTableau,
    alphabet: &GradedAlphabet,
) -> Result<QuasiRibbonTableau> {
    if !alphabet.is_half_family() {
        return Err(Error::NotHalfTruncation(alphabet.name().to_string()));
    }
    alphabet.check_letter(b)?;
    if t.size() == 0 {
        return QuasiRibbonTableau::new(Composition::new(vec![1]).unwrap(), vec![b]);
    }
    let k = insertion_position(b, t.entries(), alphabet);
    let (shape, entries) = splice(t.shape(), t.entries(), k, b);
    let out = QuasiRibbonTableau::new(shape, entries)?;
    debug_assert_eq!(out.validate(alphabet), Ok(()));
    Ok(out)
}

/// The quasi P/Q pair of a word: insert the letters left to right; the
/// recording tableau keeps, at every cell, the index of the step that
/// created it.
pub fn qr_pq(
    w: &Word,
    alphabet: &GradedAlphabet,
) -> Result<(QuasiRibbonTableau, StandardRibbonTableau)> {
    if !alphabet.is_half_family() {
        return Err(Error::NotHalfTruncation(alphabet.name().to_string()));
    }
    w.check(alphabet)?;
    let mut shape = Composition::empty();
    let mut entries: Vec<Letter> = Vec::new();
    let mut record: Vec<usize> = Vec::new();
    for (step, &b) in w.letters().iter().enumerate() {
        let k = if entries.is_empty() {
            1
        } else {
            insertion_position(b, &entries, alphabet)
        };
        let (new_shape, new_entries) = splice(&shape, &entries, k, b);
        let (_, new_record) = splice(&shape, &record, k, step + 1);
        shape = new_shape;
        entries = new_entries;
        record = new_record;
    }
    let p = QuasiRibbonTableau::new(shape.clone(), entries)?;
    debug_assert_eq!(p.validate(alphabet), Ok(()));
    let q = StandardRibbonTableau::new(shape, record)?;
    Ok((p, q))
}

/// The quasi P-tableau of a word.
pub fn qr_p(w: &Word, alphabet: &GradedAlphabet) -> Result<QuasiRibbonTableau> {
    Ok(qr_pq(w, alphabet)?.0)
}

/// Column bumping insertion into a semistandard tableau: in each column
/// the incoming letter displaces the topmost entry strictly above it, or
/// equal to it when the letter is even; with no candidate it lands at the
/// bottom of the column.
pub fn column_insert(
    b: Letter,
    t: &SemistandardTableau,
    alphabet: &GradedAlphabet,
) -> Result<SemistandardTableau> {
    alphabet.check_letter(b)?;
    // Column-major copy.
    let rows = t.rows();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut cols: Vec<Vec<Letter>> = (0..ncols)
        .map(|j| rows.iter().filter_map(|row| row.get(j).copied()).collect())
        .collect();

    let mut cur = b;
    let mut j = 0;
    loop {
        if j == cols.len() {
            cols.push(vec![cur]);
            break;
        }
        let even = alphabet.parity(cur) == Parity::Even;
        let hit = cols[j].iter().position(|&y| cur < y || (cur == y && even));
        match hit {
            Some(p) => {
                std::mem::swap(&mut cols[j][p], &mut cur);
                j += 1;
            }
            None => {
                cols[j].push(cur);
                break;
            }
        }
    }

    let nrows = cols.iter().map(Vec::len).max().unwrap_or(0);
    let new_rows: Vec<Vec<Letter>> = (0..nrows)
        .map(|i| cols.iter().filter_map(|col| col.get(i).copied()).collect())
        .collect();
    let out = SemistandardTableau::from_rows(new_rows)?;
    debug_assert_eq!(out.validate(alphabet), Ok(()));
    Ok(out)
}

/// The column-insertion P-tableau of a word: letters inserted left to
/// right.
pub fn column_p(w: &Word, alphabet: &GradedAlphabet) -> Result<SemistandardTableau> {
    let mut t = SemistandardTableau::empty();
    for &b in w.letters() {
        t = column_insert(b, &t, alphabet)?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{equivalent, DEFAULT_CAP};
    use crate::shape::Composition;
    use crate::tableau::{enumerate_qr, standard_ribbon_tableaux};
    use crate::word::words_up_to_length;

    fn alpha(spec: &str) -> GradedAlphabet {
        GradedAlphabet::parse(spec).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn qr(a: &GradedAlphabet, shape: &[usize], entries: &str) -> QuasiRibbonTableau {
        QuasiRibbonTableau::new(comp(shape), Word::parse(entries, a).unwrap().0).unwrap()
    }

    #[test]
    fn worked_insertions() {
        let a = alpha("half:3");
        let t = qr(&a, &[3, 2], "1 1 5/2 5/2 3");

        // Inserting 2 splices before the first 5/2.
        let two = a.parse_letter("2").unwrap();
        let got = qr_insert(two, &t, &a).unwrap();
        assert_eq!(got, qr(&a, &[2, 2, 2], "1 1 2 5/2 5/2 3"));

        // Inserting 5/2 splices before the 3.
        let fh = a.parse_letter("5/2").unwrap();
        let got = qr_insert(fh, &t, &a).unwrap();
        assert_eq!(got, qr(&a, &[3, 1, 2], "1 1 5/2 5/2 5/2 3"));

        // Insertion into the empty tableau makes a single cell.
        let empty = QuasiRibbonTableau::empty();
        let got = qr_insert(two, &empty, &a).unwrap();
        assert_eq!(got, qr(&a, &[1], "2"));
    }

    #[test]
    fn insertion_with_no_bump_extends_downward() {
        let a = alpha("half:2");
        // 2 into [1] must give the column [1;2]: its reading word "1 2" is
        // the tensor word itself.
        let two = a.parse_letter("2").unwrap();
        let t = qr(&a, &[1], "1");
        let got = qr_insert(two, &t, &a).unwrap();
        assert_eq!(got, qr(&a, &[1, 1], "1 2"));
        // An equal odd letter also goes below (a row would be invalid).
        let fh = a.parse_letter("3/2").unwrap();
        let t = qr(&a, &[1], "3/2");
        assert_eq!(qr_insert(fh, &t, &a).unwrap(), qr(&a, &[1, 1], "3/2 3/2"));
    }

    #[test]
    fn worked_pq_pair() {
        let a = alpha("half:3");
        let w = Word::parse("1 1/2 1 5/2 2 2", &a).unwrap();
        let (p, q) = qr_pq(&w, &a).unwrap();
        assert_eq!(p, qr(&a, &[1, 2, 3], "1/2 1 1 2 2 5/2"));
        assert_eq!(q.shape(), &comp(&[1, 2, 3]));
        assert_eq!(q.entries(), &[2, 3, 1, 6, 5, 4]);

        let (p0, q0) = qr_pq(&Word::empty(), &a).unwrap();
        assert_eq!(p0.size(), 0);
        assert_eq!(q0.entries().len(), 0);

        let (p1, q1) = qr_pq(&Word::parse("1/2", &a).unwrap(), &a).unwrap();
        assert_eq!(p1, qr(&a, &[1], "1/2"));
        assert_eq!(q1.entries(), &[1]);
    }

    #[test]
    fn pq_is_a_bijection_on_small_words() {
        let a = alpha("half:2");
        let words = words_up_to_length(&a, 4);
        let mut seen = std::collections::HashSet::new();
        for w in &words {
            let (p, q) = qr_pq(w, &a).unwrap();
            assert_eq!(p.shape(), q.shape(), "shapes differ for {}", w.display(&a));
            assert!(
                seen.insert((p.clone(), q.clone())),
                "collision at {}",
                w.display(&a)
            );
        }
        // Surjectivity onto same-shape pairs over the truncation.
        let mut expected = 0usize;
        for r in 0..=4 {
            for shape in Composition::all_of(r) {
                expected += enumerate_qr(&shape, &a).len() * standard_ribbon_tableaux(&shape).len();
            }
        }
        assert_eq!(seen.len(), expected);
    }

    #[test]
    fn insert_equivalence_lemma_small() {
        // (b -> T) is equivalent to T (x) b, for all T with at most 4
        // cells over half:2.
        let a = alpha("half:2");
        for r in 0..=4usize {
            for shape in Composition::all_of(r) {
                for t in enumerate_qr(&shape, &a) {
                    for b in a.letters() {
                        let ins = qr_insert(b, &t, &a).unwrap();
                        let left = ins.reading_word();
                        let right = t.reading_word().push(b);
                        assert!(
                            equivalent(&a, &left, &right, DEFAULT_CAP).unwrap(),
                            "failed at {} <- {}",
                            t.reading_word().display(&a),
                            a.display(b)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn p_tableau_is_equivalent_to_the_word() {
        let a = alpha("half:2");
        for w in words_up_to_length(&a, 4) {
            let p = qr_p(&w, &a).unwrap();
            assert!(
                equivalent(&a, &w, &p.reading_word(), DEFAULT_CAP).unwrap(),
                "w = {}",
                w.display(&a)
            );
        }
    }

    #[test]
    fn q_is_invariant_under_operators() {
        use crate::crystal::{apply, BOTH_OPS};
        let a = alpha("half:2");
        for w in words_up_to_length(&a, 4) {
            let q = qr_pq(&w, &a).unwrap().1;
            for r in 0..a.num_roots() {
                let root = a.root(r);
                for op in BOTH_OPS {
                    if let Some(w2) = apply(op, &a, &root, &w).unwrap() {
                        assert_eq!(qr_pq(&w2, &a).unwrap().1, q);
                    }
                }
            }
        }
    }

    #[test]
    fn column_insert_small_cases() {
        let b = alpha("mn:2,1");
        let neg1 = b.parse_letter("-1").unwrap();
        // -1 then -1 gives the row [-1 -1]: even letters repeat in rows.
        let t = column_insert(neg1, &SemistandardTableau::empty(), &b).unwrap();
        let t = column_insert(neg1, &t, &b).unwrap();
        assert_eq!(t.shape().parts(), &[2]);

        // An odd letter stacked on itself forms a column.
        let one = b.parse_letter("1").unwrap();
        let t = column_insert(one, &SemistandardTableau::empty(), &b).unwrap();
        let t = column_insert(one, &t, &b).unwrap();
        assert_eq!(t.shape().parts(), &[1, 1]);
    }

    #[test]
    fn column_p_equivalence_contract() {
        // Over both a half and an mn alphabet, the column-insertion P of a
        // word stays crystal-equivalent to the word.
        for spec in ["half:2", "mn:2,1"] {
            let a = alpha(spec);
            for w in words_up_to_length(&a, 4) {
                let p = column_p(&w, &a).unwrap();
                assert!(
                    equivalent(&a, &w, &p.reading_word(), DEFAULT_CAP).unwrap(),
                    "w = {} over {}",
                    w.display(&a),
                    a.name()
                );
            }
        }
    }
}
