//! Shapes: partitions, compositions and their ribbon diagrams, skew
//! shapes, and kite shapes (a partition body with a ribbon tail).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::BadShape("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::BadShape(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The i-th part, 1-based; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Cells as (row, col), 1-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.0.iter().enumerate() {
            for j in 1..=len {
                out.push((i + 1, j));
            }
        }
        out
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// `(m,n)`-hook condition: the (m+1)-st part is at most n.
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n
    }

    /// All partitions of exactly `n`.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n` (including the empty one).
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }

    /// All partitions contained in `self` (as Young diagrams).
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            if let Some((&first, rest)) = outer.split_first() {
                for p in 1..=first.min(max) {
                    prefix.push(p);
                    rec(rest, p, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&self.0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A composition: positive parts in any order. The empty composition is
/// allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::BadShape("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// The composition of `r` with partial sums `S ⊆ {1..r-1}`:
    /// `(i1, i2-i1, ..., r-is)`.
    pub fn from_subset(s: &BTreeSet<usize>, r: usize) -> Result<Composition> {
        if s.iter().any(|&i| i == 0 || i >= r) {
            return Err(Error::BadShape(format!(
                "descent set must lie in 1..{}",
                r.saturating_sub(1)
            )));
        }
        if r == 0 {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::with_capacity(s.len() + 1);
        let mut prev = 0;
        for &i in s {
            parts.push(i - prev);
            prev = i;
        }
        parts.push(r - prev);
        Ok(Composition(parts))
    }

    /// Partial sums, the inverse of [`Composition::from_subset`].
    pub fn to_subset(&self) -> (BTreeSet<usize>, usize) {
        let mut s = BTreeSet::new();
        let mut run = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            run += p;
            s.insert(run);
        }
        (s, self.size())
    }

    /// Ribbon cells as (row, col), 1-based, northwest to southeast: row
    /// i+1 starts in the column where row i ends.
    pub fn ribbon_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        let mut col = 1;
        for (i, &len) in self.0.iter().enumerate() {
            for j in 0..len {
                out.push((i + 1, col + j));
            }
            col += len - 1;
        }
        out
    }

    /// Steps between consecutive ribbon cells in NW→SE order.
    pub fn ribbon_steps(&self) -> Vec<Step> {
        let mut out = Vec::new();
        for (i, &len) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(Step::Down);
            }
            out.extend(std::iter::repeat_n(Step::Right, len - 1));
        }
        out
    }

    /// Rebuilds a composition from a NW→SE step sequence (for `n+1` cells
    /// there are `n` steps). `empty` distinguishes the empty ribbon from a
    /// single cell, both of which have no steps.
    pub fn from_steps(steps: &[Step], empty: bool) -> Composition {
        if empty {
            return Composition::empty();
        }
        let mut parts = vec![1usize];
        for s in steps {
            match s {
                Step::Right => *parts.last_mut().unwrap() += 1,
                Step::Down => parts.push(1),
            }
        }
        Composition(parts)
    }

    /// Number of corners: the leftmost and rightmost cells of each row
    /// with at least two cells, plus the final cell if not already
    /// counted.
    pub fn corners(&self) -> usize {
        let mut marked = BTreeSet::new();
        let cells = self.ribbon_cells();
        let mut idx = 0;
        for &len in &self.0 {
            if len >= 2 {
                marked.insert(cells[idx]);
                marked.insert(cells[idx + len - 1]);
            }
            idx += len;
        }
        if let Some(last) = cells.last() {
            marked.insert(*last);
        }
        marked.len()
    }

    /// All compositions of exactly `r` (the 2^{r-1} subsets of {1..r-1}).
    pub fn all_of(r: usize) -> Vec<Composition> {
        if r == 0 {
            return vec![Composition::empty()];
        }
        let positions: Vec<usize> = (1..r).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << positions.len()) {
            let s: BTreeSet<usize> = positions
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &i)| i)
                .collect();
            out.push(Composition::from_subset(&s, r).unwrap());
        }
        out.sort();
        out
    }

    pub fn all_up_to(r: usize) -> Vec<Composition> {
        (0..=r).flat_map(Composition::all_of).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// One step along a ribbon, NW→SE.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Right,
    Down,
}

/// A skew shape `outer / inner`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::BadShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.len() {
            for j in (self.inner.part(i) + 1)..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A kite shape over N(m): a partition body with at most `m` rows and a
/// ribbon tail glued below the first column of row `m`. The tail may be
/// nonempty only when the body has exactly `m` nonzero rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KiteShape {
    m: usize,
    body: Partition,
    tail: Composition,
}

impl KiteShape {
    pub fn new(m: usize, body: Partition, tail: Composition) -> Result<Self> {
        if body.len() > m {
            return Err(Error::BadShape(format!(
                "body {body} has more than {m} rows"
            )));
        }
        if !tail.is_empty() && body.len() != m {
            return Err(Error::BadShape(format!(
                "tail {tail} requires a body with exactly {m} nonzero rows, got {body}"
            )));
        }
        Ok(KiteShape { m, body, tail })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn body(&self) -> &Partition {
        &self.body
    }

    pub fn tail(&self) -> &Composition {
        &self.tail
    }

    pub fn size(&self) -> usize {
        self.body.size() + self.tail.size()
    }

    /// Body cells then tail cells, the tail offset so that its first cell
    /// (the joint) sits at (m+1, 1).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = self.body.cells();
        for (r, c) in self.tail.ribbon_cells() {
            out.push((self.m + r, c));
        }
        out
    }

    /// The joint's cell, if the tail is nonempty.
    pub fn joint(&self) -> Option<(usize, usize)> {
        if self.tail.is_empty() {
            None
        } else {
            Some((self.m + 1, 1))
        }
    }

    /// All kite shapes over N(m) with body and tail sizes bounded.
    pub fn all_up_to(m: usize, body_max: usize, tail_max: usize) -> Vec<KiteShape> {
        let mut out = Vec::new();
        for body in Partition::all_up_to(body_max) {
            if body.len() > m {
                continue;
            }
            out.push(KiteShape::new(m, body.clone(), Composition::empty()).unwrap());
            if body.len() == m {
                for tail in Composition::all_up_to(tail_max) {
                    if !tail.is_empty() {
                        out.push(KiteShape::new(m, body.clone(), tail).unwrap());
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for KiteShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.body, self.tail)
    }
}
