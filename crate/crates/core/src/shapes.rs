//! Partitions, skew shapes and corner detection.
//!
//! Cells are 1-based, matrix convention (row 1 on top). Partitions are kept
//! normalized: weakly decreasing positive parts, the empty sequence for the
//! empty partition, printed as `-`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition; trailing zeros are stripped, any other violation
    /// of weak decrease is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Shape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 1-based; 0 beyond the height.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 || row > self.parts.len() {
            0
        } else {
            self.parts[row - 1]
        }
    }

    /// Conjugate partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True iff the Young diagram of `self` is contained in that of `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.height()).all(|i| self.part(i) <= other.part(i))
    }

    /// Adds one box to the given 1-based row.
    pub fn add_box(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.height() + 1 {
            return Err(Error::Shape(format!(
                "cannot add a box at row {row} of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition::new(parts)
    }

    /// Removes one box from the given 1-based row.
    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.height() {
            return Err(Error::Shape(format!(
                "cannot remove a box at row {row} of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Partition::new(parts)
    }

    /// The removable corner cells: (i, λ_i) with λ_i > λ_{i+1}.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.height())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// The addable positions: cells whose addition keeps a partition.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.height() + 1)
            .filter(|&i| i == 1 || self.part(i) < self.part(i - 1))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    /// True iff the cell lies in the Young diagram.
    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// All cells of the Young diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    /// All partitions of exactly `n`, largest part first.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All sub-partitions μ ⊆ self.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn rec(
            lam: &[usize],
            row: usize,
            prev: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if row == lam.len() {
                out.push(Partition::new(prefix.clone()).unwrap());
                return;
            }
            for p in 0..=lam[row].min(prev) {
                prefix.push(p);
                rec(lam, row + 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let joined = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{joined}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: 1,
                    msg: format!("invalid partition part {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A 1-based box position.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A skew shape λ/μ with μ ⊆ λ. λ/∅ is identified with λ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of boxes of λ/μ.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn height(&self) -> usize {
        self.outer.height()
    }

    /// True iff the cell lies in Y(λ/μ).
    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of Y(λ/μ) in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.height() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    /// Boxes of Y(μ) whose south and east neighbours are outside Y(μ),
    /// sorted by (row, col).
    pub fn inner_corners(&self) -> Vec<Cell> {
        self.inner.corners()
    }

    /// Boxes of Y(λ/μ) whose south and east neighbours are outside Y(λ/μ),
    /// sorted by (row, col).
    pub fn outer_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for cell in self.cells() {
            let east = Cell::new(cell.row, cell.col + 1);
            let south = Cell::new(cell.row + 1, cell.col);
            if !self.contains_cell(east) && !self.contains_cell(south) {
                out.push(cell);
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewShape::new(outer.parse()?, inner.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}
