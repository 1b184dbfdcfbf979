//! The tableau models: quasi-ribbon tableaux on compositions, semistandard
//! tableaux on partitions, kite tableaux on (partition, composition)
//! pairs, standard ribbon tableaux, and standard Young tableaux with
//! descent data.

use std::collections::{BTreeSet, HashMap};

use serde_json::json;

use crate::alphabet::{Family, GradedAlphabet, Letter, Parity, SimpleRoot};
use crate::crystal::{self, CrystalOp};
use crate::error::{Error, Result};
use crate::shape::{Composition, KiteShape, Partition, SkewShape, Step};
use crate::weight::Weight;
use crate::word::Word;

// ---------------------------------------------------------------------------
// Shared cell-grid machinery
// ---------------------------------------------------------------------------

/// Checks the semistandard conditions on an arbitrary cell set: rows and
/// columns weakly increase, even letters are strict down columns, odd
/// letters strict along rows. Returns the first violation, scanning cells
/// in the given order.
fn grid_violation(
    cells: &[(usize, usize)],
    entries: &[Letter],
    alphabet: &GradedAlphabet,
) -> Option<String> {
    let at: HashMap<(usize, usize), Letter> =
        cells.iter().copied().zip(entries.iter().copied()).collect();
    for (&(r, c), &x) in cells.iter().zip(entries.iter()) {
        if let Some(&y) = at.get(&(r, c.wrapping_sub(1))) {
            if x < y {
                return Some(format!("row decreases at ({r},{c})"));
            }
            if x == y && alphabet.parity(x) == Parity::Odd {
                return Some(format!("odd letter repeats in row at ({r},{c})"));
            }
        }
        if let Some(&y) = at.get(&(r.wrapping_sub(1), c)) {
            if x < y {
                return Some(format!("column decreases at ({r},{c})"));
            }
            if x == y && alphabet.parity(x) == Parity::Even {
                return Some(format!("even letter repeats in column at ({r},{c})"));
            }
        }
    }
    None
}

/// Backtracking enumeration of all semistandard fillings of a cell set.
/// The cell order must list the left and upper neighbor of every cell
/// before the cell itself. `extra` can impose further per-cell conditions
/// (given the prefix already placed).
fn enumerate_fillings<F>(
    cells: &[(usize, usize)],
    alphabet: &GradedAlphabet,
    extra: F,
) -> Vec<Vec<Letter>>
where
    F: Fn(&[Letter], usize, Letter) -> bool,
{
    let pos: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| pos.get(&(r, c.wrapping_sub(1))).copied())
        .collect();
    let up: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| pos.get(&(r.wrapping_sub(1), c)).copied())
        .collect();

    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(&[Letter], usize, Letter) -> bool>(
        k: usize,
        cells_len: usize,
        alphabet: &GradedAlphabet,
        left: &[Option<usize>],
        up: &[Option<usize>],
        extra: &F,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if k == cells_len {
            out.push(cur.clone());
            return;
        }
        for x in alphabet.letters() {
            if let Some(i) = left[k] {
                let y = cur[i];
                if x < y || (x == y && alphabet.parity(x) == Parity::Odd) {
                    continue;
                }
            }
            if let Some(i) = up[k] {
                let y = cur[i];
                if x < y || (x == y && alphabet.parity(x) == Parity::Even) {
                    continue;
                }
            }
            if !extra(cur, k, x) {
                continue;
            }
            cur.push(x);
            rec(k + 1, cells_len, alphabet, left, up, extra, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        cells.len(),
        alphabet,
        &left,
        &up,
        &extra,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Row reading order of a cell set: rows top to bottom, right to left
/// within each row. This reads every cell before its lower and left
/// neighbors, so it is admissible.
fn row_reading_order(cells: &[(usize, usize)]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..cells.len()).collect();
    idx.sort_by_key(|&i| (cells[i].0, std::cmp::Reverse(cells[i].1)));
    idx
}

fn read_by(entries: &[Letter], order: &[usize]) -> Word {
    Word(order.iter().map(|&i| entries[i]).collect())
}

fn unread_by(order: &[usize], word: &Word) -> Vec<Letter> {
    let mut entries = vec![Letter(0); order.len()];
    for (w, &i) in word.letters().iter().zip(order.iter()) {
        entries[i] = *w;
    }
    entries
}

/// The zigzag filling rule shared by quasi-ribbon and kite-tail highest
/// elements: the first cell takes the first positive letter; a Down step
/// after an odd letter and a Right step after an even letter keep the
/// letter, anything else advances to the next one.
fn zigzag_entries(
    shape: &Composition,
    alphabet: &GradedAlphabet,
    start: usize,
) -> Result<Vec<Letter>> {
    if shape.is_empty() {
        return Ok(Vec::new());
    }
    let check = |idx: usize| -> Result<Letter> {
        if idx < alphabet.len() {
            Ok(Letter(idx as u32))
        } else {
            Err(Error::InadmissibleShape(
                alphabet.name().to_string(),
                format!(
                    "{shape} has {} corners, too many for the truncation",
                    shape.corners()
                ),
            ))
        }
    };
    let mut idx = start;
    let mut out = Vec::with_capacity(shape.size());
    out.push(check(idx)?);
    for s in shape.ribbon_steps() {
        let parity = alphabet.parity(Letter(idx as u32));
        let keep = matches!(
            (s, parity),
            (Step::Down, Parity::Odd) | (Step::Right, Parity::Even)
        );
        if !keep {
            idx += 1;
        }
        out.push(check(idx)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Quasi-ribbon tableaux
// ---------------------------------------------------------------------------

/// A quasi-ribbon tableau: a semistandard filling of the ribbon diagram of
/// a composition. Entries are stored NW→SE.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuasiRibbonTableau {
    shape: Composition,
    entries: Vec<Letter>,
}

impl QuasiRibbonTableau {
    pub fn new(shape: Composition, entries: Vec<Letter>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::BadShape(format!(
                "{} entries for shape {shape}",
                entries.len()
            )));
        }
        Ok(QuasiRibbonTableau { shape, entries })
    }

    pub fn empty() -> Self {
        QuasiRibbonTableau {
            shape: Composition::empty(),
            entries: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> Vec<&[Letter]> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut idx = 0;
        for &len in self.shape.parts() {
            out.push(&self.entries[idx..idx + len]);
            idx += len;
        }
        out
    }

    pub fn validate(&self, alphabet: &GradedAlphabet) -> std::result::Result<(), String> {
        match grid_violation(&self.shape.ribbon_cells(), &self.entries, alphabet) {
            None => Ok(()),
            Some(v) => Err(v),
        }
    }

    /// Row reading: rows top to bottom, right to left in each row.
    pub fn reading_word(&self) -> Word {
        read_by(
            &self.entries,
            &row_reading_order(&self.shape.ribbon_cells()),
        )
    }

    pub fn from_reading_word(shape: Composition, word: &Word) -> Result<Self> {
        if word.len() != shape.size() {
            return Err(Error::BadShape(format!(
                "word length {} for shape {shape}",
                word.len()
            )));
        }
        let cells = shape.ribbon_cells();
        let entries = unread_by(&row_reading_order(&cells), word);
        QuasiRibbonTableau::new(shape, entries)
    }

    pub fn weight(&self) -> Weight {
        Weight::from_letters(self.entries.iter().copied())
    }

    /// Operator action through the reading word. A result that fails to
    /// be a quasi-ribbon tableau indicates a bug, and panics.
    pub fn apply_op(
        &self,
        op: CrystalOp,
        root: &SimpleRoot,
        alphabet: &GradedAlphabet,
    ) -> Result<Option<Self>> {
        match crystal::apply(op, alphabet, root, &self.reading_word())? {
            None => Ok(None),
            Some(w) => {
                let t = QuasiRibbonTableau::from_reading_word(self.shape.clone(), &w)?;
                if let Err(v) = t.validate(alphabet) {
                    panic!("operator left the quasi-ribbon family: {v}");
                }
                Ok(Some(t))
            }
        }
    }

    pub fn to_json(&self, alphabet: &GradedAlphabet) -> serde_json::Value {
        json!({
            "kind": "qr",
            "shape": self.shape.parts(),
            "rows": self.rows().iter().map(|row| {
                row.iter().map(|l| alphabet.display(*l)).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// The highest-weight quasi-ribbon tableau of a composition over a
/// truncation of N. Errors when the shape needs more corners than the
/// truncation affords.
pub fn qr_highest(shape: &Composition, alphabet: &GradedAlphabet) -> Result<QuasiRibbonTableau> {
    if !alphabet.is_half_family() {
        return Err(Error::NotHalfTruncation(alphabet.name().to_string()));
    }
    let entries = zigzag_entries(shape, alphabet, 0)?;
    QuasiRibbonTableau::new(shape.clone(), entries)
}

/// All quasi-ribbon tableaux of a shape, sorted by reading word. Empty
/// when the shape is inadmissible for the truncation.
pub fn enumerate_qr(shape: &Composition, alphabet: &GradedAlphabet) -> Vec<QuasiRibbonTableau> {
    let fillings = enumerate_fillings(&shape.ribbon_cells(), alphabet, |_, _, _| true);
    let mut out: Vec<QuasiRibbonTableau> = fillings
        .into_iter()
        .map(|entries| QuasiRibbonTableau {
            shape: shape.clone(),
            entries,
        })
        .collect();
    out.sort_by_key(|t| t.reading_word());
    out
}

// ---------------------------------------------------------------------------
// Semistandard tableaux
// ---------------------------------------------------------------------------

/// A semistandard tableau of partition shape over a graded alphabet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SemistandardTableau {
    shape: Partition,
    /// Row-major entries.
    entries: Vec<Letter>,
}

impl SemistandardTableau {
    pub fn new(shape: Partition, entries: Vec<Letter>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::BadShape(format!(
                "{} entries for shape {shape}",
                entries.len()
            )));
        }
        Ok(SemistandardTableau { shape, entries })
    }

    pub fn empty() -> Self {
        SemistandardTableau {
            shape: Partition::empty(),
            entries: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> Vec<&[Letter]> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut idx = 0;
        for &len in self.shape.parts() {
            out.push(&self.entries[idx..idx + len]);
            idx += len;
        }
        out
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<Letter> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let before: usize = self.shape.parts()[..row - 1].iter().sum();
        Some(self.entries[before + col - 1])
    }

    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Ok(SemistandardTableau {
            shape,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn validate(&self, alphabet: &GradedAlphabet) -> std::result::Result<(), String> {
        match grid_violation(&self.shape.cells(), &self.entries, alphabet) {
            None => Ok(()),
            Some(v) => Err(v),
        }
    }

    /// Row reading: rows top to bottom, right to left in each row (an
    /// admissible reading).
    pub fn reading_word(&self) -> Word {
        read_by(&self.entries, &row_reading_order(&self.shape.cells()))
    }

    /// Column reading: columns right to left, top to bottom within each
    /// column; the other admissible reading, used for cross-checks.
    pub fn column_reading_word(&self) -> Word {
        read_by(&self.entries, &column_reading_order(&self.shape.cells()))
    }

    pub fn from_reading_word(shape: Partition, word: &Word) -> Result<Self> {
        if word.len() != shape.size() {
            return Err(Error::BadShape(format!(
                "word length {} for shape {shape}",
                word.len()
            )));
        }
        let cells = shape.cells();
        let entries = unread_by(&row_reading_order(&cells), word);
        SemistandardTableau::new(shape, entries)
    }

    pub fn weight(&self) -> Weight {
        Weight::from_letters(self.entries.iter().copied())
    }

    pub fn apply_op(
        &self,
        op: CrystalOp,
        root: &SimpleRoot,
        alphabet: &GradedAlphabet,
    ) -> Result<Option<Self>> {
        match crystal::apply(op, alphabet, root, &self.reading_word())? {
            None => Ok(None),
            Some(w) => {
                let t = SemistandardTableau::from_reading_word(self.shape.clone(), &w)?;
                if let Err(v) = t.validate(alphabet) {
                    panic!("operator left the semistandard family: {v}");
                }
                Ok(Some(t))
            }
        }
    }

    pub fn to_json(&self, alphabet: &GradedAlphabet) -> serde_json::Value {
        json!({
            "kind": "ssyt",
            "shape": self.shape.parts(),
            "rows": self.rows().iter().map(|row| {
                row.iter().map(|l| alphabet.display(*l)).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

fn column_reading_order(cells: &[(usize, usize)]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..cells.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(cells[i].1), cells[i].0));
    idx
}

/// The highest-weight semistandard tableau over `[m|n]`: row i of the
/// first m rows holds the i-th letter, and below row m the cell in column
/// j holds the letter `j`.
pub fn ssyt_highest(shape: &Partition, alphabet: &GradedAlphabet) -> Result<SemistandardTableau> {
    let (m, n) = match *alphabet.family() {
        Family::Mn { m, n } => (m, n),
        _ => {
            return Err(Error::InadmissibleShape(
                alphabet.name().to_string(),
                "the highest semistandard tableau needs an mn alphabet".into(),
            ))
        }
    };
    if !shape.is_hook(m, n) {
        return Err(Error::InadmissibleShape(
            alphabet.name().to_string(),
            format!("{shape} is not an ({m},{n})-hook partition"),
        ));
    }
    let mut entries = Vec::with_capacity(shape.size());
    for (r, c) in shape.cells() {
        let idx = if r <= m { r - 1 } else { m + c - 1 };
        entries.push(Letter(idx as u32));
    }
    SemistandardTableau::new(shape.clone(), entries)
}

/// All semistandard tableaux of a partition shape, sorted by reading word.
pub fn enumerate_ssyt(shape: &Partition, alphabet: &GradedAlphabet) -> Vec<SemistandardTableau> {
    let fillings = enumerate_fillings(&shape.cells(), alphabet, |_, _, _| true);
    let mut out: Vec<SemistandardTableau> = fillings
        .into_iter()
        .map(|entries| SemistandardTableau {
            shape: shape.clone(),
            entries,
        })
        .collect();
    out.sort_by_key(|t| t.reading_word());
    out
}

// ---------------------------------------------------------------------------
// Kite tableaux
// ---------------------------------------------------------------------------

/// A semistandard filling of a kite shape over a truncation of N(m),
/// subject to the joint conditions: an even joint entry exceeds every body
/// entry strictly, an odd one weakly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KiteTableau {
    shape: KiteShape,
    /// Entries aligned with `shape.cells()`: body row-major, then tail
    /// NW→SE.
    entries: Vec<Letter>,
}

impl KiteTableau {
    pub fn new(shape: KiteShape, entries: Vec<Letter>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::BadShape(format!(
                "{} entries for shape {shape}",
                entries.len()
            )));
        }
        Ok(KiteTableau { shape, entries })
    }

    pub fn shape(&self) -> &KiteShape {
        &self.shape
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    fn body_len(&self) -> usize {
        self.shape.body().size()
    }

    pub fn joint_entry(&self) -> Option<Letter> {
        self.shape.joint().map(|_| self.entries[self.body_len()])
    }

    pub fn validate(&self, alphabet: &GradedAlphabet) -> std::result::Result<(), String> {
        if let Some(v) = grid_violation(&self.shape.cells(), &self.entries, alphabet) {
            return Err(v);
        }
        if let Some(b) = self.joint_entry() {
            let strict = alphabet.parity(b) == Parity::Even;
            for (i, &x) in self.entries[..self.body_len()].iter().enumerate() {
                let bad = if strict { x >= b } else { x > b };
                if bad {
                    let (r, c) = self.shape.cells()[i];
                    return Err(format!(
                        "body entry at ({r},{c}) is not {} the joint",
                        if strict { "below" } else { "at most" }
                    ));
                }
            }
        }
        Ok(())
    }

    /// Row reading over the glued diagram.
    pub fn reading_word(&self) -> Word {
        read_by(&self.entries, &row_reading_order(&self.shape.cells()))
    }

    pub fn from_reading_word(shape: KiteShape, word: &Word) -> Result<Self> {
        if word.len() != shape.size() {
            return Err(Error::BadShape(format!(
                "word length {} for shape {shape}",
                word.len()
            )));
        }
        let cells = shape.cells();
        let entries = unread_by(&row_reading_order(&cells), word);
        KiteTableau::new(shape, entries)
    }

    pub fn weight(&self) -> Weight {
        Weight::from_letters(self.entries.iter().copied())
    }

    pub fn apply_op(
        &self,
        op: CrystalOp,
        root: &SimpleRoot,
        alphabet: &GradedAlphabet,
    ) -> Result<Option<Self>> {
        match crystal::apply(op, alphabet, root, &self.reading_word())? {
            None => Ok(None),
            Some(w) => {
                let t = KiteTableau::from_reading_word(self.shape.clone(), &w)?;
                if let Err(v) = t.validate(alphabet) {
                    panic!("operator left the kite family: {v}");
                }
                Ok(Some(t))
            }
        }
    }

    pub fn to_json(&self, alphabet: &GradedAlphabet) -> serde_json::Value {
        let cells = self.shape.cells();
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut last_row = 0;
        for (&(r, _), &l) in cells.iter().zip(self.entries.iter()) {
            if r != last_row {
                rows.push(Vec::new());
                last_row = r;
            }
            rows.last_mut()
                .unwrap()
                .push(alphabet.display(l).to_string());
        }
        json!({
            "kind": "kite",
            "shape": {"body": self.shape.body().parts(), "tail": self.shape.tail().parts()},
            "rows": rows,
        })
    }
}

/// The highest kite tableau: the body glued from the highest `[m|0]`
/// filling (row i constant at the i-th negative letter), the tail from the
/// zigzag rule starting at the first positive letter.
pub fn kite_highest(shape: &KiteShape, alphabet: &GradedAlphabet) -> Result<KiteTableau> {
    let m = match *alphabet.family() {
        Family::Mixed { m, .. } => m,
        Family::Half { .. } => 0,
        _ => {
            return Err(Error::InadmissibleShape(
                alphabet.name().to_string(),
                "kite tableaux live over mixed truncations".into(),
            ))
        }
    };
    if shape.m() != m {
        return Err(Error::InadmissibleShape(
            alphabet.name().to_string(),
            format!("kite over N({}) used with alphabet N({m})", shape.m()),
        ));
    }
    let mut entries = Vec::with_capacity(shape.size());
    for (i, &len) in shape.body().parts().iter().enumerate() {
        entries.extend(std::iter::repeat_n(Letter(i as u32), len));
    }
    entries.extend(zigzag_entries(shape.tail(), alphabet, m)?);
    let t = KiteTableau::new(shape.clone(), entries)?;
    debug_assert_eq!(t.validate(alphabet), Ok(()));
    Ok(t)
}

/// All kite tableaux of a shape over a mixed truncation, sorted by
/// reading word.
pub fn enumerate_kite(shape: &KiteShape, alphabet: &GradedAlphabet) -> Vec<KiteTableau> {
    let body_len = shape.body().size();
    let has_tail = shape.joint().is_some();
    let fillings = enumerate_fillings(&shape.cells(), alphabet, |cur, k, x| {
        if !has_tail || k != body_len {
            return true;
        }
        // Placing the joint: every body entry must be below it (strictly
        // for an even joint).
        let strict = alphabet.parity(x) == Parity::Even;
        cur[..body_len]
            .iter()
            .all(|&y| if strict { y < x } else { y <= x })
    });
    let mut out: Vec<KiteTableau> = fillings
        .into_iter()
        .map(|entries| KiteTableau {
            shape: shape.clone(),
            entries,
        })
        .collect();
    out.sort_by_key(|t| t.reading_word());
    out
}

// ---------------------------------------------------------------------------
// Standard ribbon tableaux
// ---------------------------------------------------------------------------

/// A bijective filling of a ribbon by 1..r with rows decreasing left to
/// right and columns increasing top to bottom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardRibbonTableau {
    shape: Composition,
    /// Values NW→SE.
    entries: Vec<usize>,
}

impl StandardRibbonTableau {
    pub fn new(shape: Composition, entries: Vec<usize>) -> Result<Self> {
        let t = StandardRibbonTableau { shape, entries };
        match t.validate() {
            Ok(()) => Ok(t),
            Err(v) => Err(Error::BadShape(v)),
        }
    }

    pub fn empty() -> Self {
        StandardRibbonTableau {
            shape: Composition::empty(),
            entries: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        let mut idx = 0;
        for &len in self.shape.parts() {
            out.push(&self.entries[idx..idx + len]);
            idx += len;
        }
        out
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        let r = self.shape.size();
        if self.entries.len() != r {
            return Err(format!(
                "{} entries for shape {}",
                self.entries.len(),
                self.shape
            ));
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for &v in &self.entries {
            if v < 1 || v > r || !seen.insert(v) {
                return Err(format!("entries are not a permutation of 1..{r}"));
            }
        }
        let cells = self.shape.ribbon_cells();
        for (k, s) in self.shape.ribbon_steps().iter().enumerate() {
            let (a, b) = (self.entries[k], self.entries[k + 1]);
            let (r1, c1) = cells[k + 1];
            match s {
                Step::Right if b >= a => {
                    return Err(format!("row does not decrease at ({r1},{c1})"));
                }
                Step::Down if b <= a => {
                    return Err(format!("column does not increase at ({r1},{c1})"));
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": "standard-ribbon",
            "shape": self.shape.parts(),
            "rows": self.rows(),
        })
    }
}

/// All standard ribbon tableaux of a shape.
pub fn standard_ribbon_tableaux(shape: &Composition) -> Vec<StandardRibbonTableau> {
    let r = shape.size();
    if r == 0 {
        return vec![StandardRibbonTableau::empty()];
    }
    let steps = shape.ribbon_steps();
    fn rec(
        k: usize,
        r: usize,
        steps: &[Step],
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == r {
            out.push(cur.clone());
            return;
        }
        for v in 1..=r {
            if used[v] {
                continue;
            }
            if k > 0 {
                let prev = cur[k - 1];
                let ok = match steps[k - 1] {
                    Step::Right => v < prev,
                    Step::Down => v > prev,
                };
                if !ok {
                    continue;
                }
            }
            used[v] = true;
            cur.push(v);
            rec(k + 1, r, steps, used, cur, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut raw = Vec::new();
    rec(
        0,
        r,
        &steps,
        &mut vec![false; r + 1],
        &mut Vec::with_capacity(r),
        &mut raw,
    );
    let mut out: Vec<StandardRibbonTableau> = raw
        .into_iter()
        .map(|entries| StandardRibbonTableau {
            shape: shape.clone(),
            entries,
        })
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Standard Young tableaux (straight and skew) with descent data
// ---------------------------------------------------------------------------

/// A standard Young tableau of (skew) shape: a bijective order-preserving
/// filling by 1..r.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardTableau {
    shape: SkewShape,
    /// Values aligned with `shape.cells()` (row-major).
    entries: Vec<usize>,
}

impl StandardTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Cell of a value, 1-based.
    pub fn cell_of(&self, value: usize) -> Option<(usize, usize)> {
        let i = self.entries.iter().position(|&v| v == value)?;
        Some(self.shape.cells()[i])
    }

    /// `k` is a descent when the column of k is at least the column of
    /// k+1.
    pub fn descents(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for k in 1..self.size() {
            let (_, ck) = self.cell_of(k).unwrap();
            let (_, ck1) = self.cell_of(k + 1).unwrap();
            if ck >= ck1 {
                out.insert(k);
            }
        }
        out
    }

    /// The descent composition alpha(T).
    pub fn descent_composition(&self) -> Composition {
        Composition::from_subset(&self.descents(), self.size()).unwrap()
    }

    /// Whether the entry 1 lies in the first column of the outer shape.
    /// Vacuously true for the empty tableau.
    pub fn one_in_first_column(&self) -> bool {
        match self.cell_of(1) {
            None => true,
            Some((_, c)) => c == 1,
        }
    }
}

/// All standard Young tableaux of a (skew) shape.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<StandardTableau> {
    let cells = shape.cells();
    let r = cells.len();
    let pos: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    fn rec(
        v: usize,
        r: usize,
        cells: &[(usize, usize)],
        pos: &HashMap<(usize, usize), usize>,
        entries: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v > r {
            out.push(entries.clone());
            return;
        }
        for i in 0..r {
            if entries[i] != 0 {
                continue;
            }
            let (row, col) = cells[i];
            let left_ok = match pos.get(&(row, col.wrapping_sub(1))) {
                Some(&j) => entries[j] != 0,
                None => true,
            };
            let up_ok = match pos.get(&(row.wrapping_sub(1), col)) {
                Some(&j) => entries[j] != 0,
                None => true,
            };
            if left_ok && up_ok {
                entries[i] = v;
                rec(v + 1, r, cells, pos, entries, out);
                entries[i] = 0;
            }
        }
    }
    let mut raw = Vec::new();
    rec(1, r, &cells, &pos, &mut vec![0usize; r], &mut raw);
    let mut tabs: Vec<StandardTableau> = raw
        .into_iter()
        .map(|entries| StandardTableau {
            shape: shape.clone(),
            entries,
        })
        .collect();
    tabs.sort();
    tabs
}
