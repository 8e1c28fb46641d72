//! Fomin growth diagrams for the super jeu de taquin: the local rule,
//! diagram completion from two borders, the Grw correspondence and its
//! inverse, dual equivalence, and the Ψ bijection between rectification
//! fibers.
//!
//! Diagram orientation: the topmost row is the chain of
//! the initial skew tableau, the bottom-most row the chain of its
//! rectification, the leftmost column (read bottom to top) the recording
//! tableau R and the rightmost column the skew recording R'.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableau::{Chain, SkewTableau, Tableau};
use crate::taquin::{forward_slide, rectify, reverse_slide};

/// Largest inner-shape size accepted by [`dual_equivalent`], which
/// enumerates every standard recording of that shape.
pub const DUAL_EQUIVALENCE_BUDGET: usize = 6;

/// A recording tableau: an injective filling of a (possibly skew) shape by
/// the labels 1..m, strictly increasing along rows and columns. Label k
/// marks the k-th box added along the encoded chain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Recording {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Recording {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.outer().height() {
            return Err(Error::Shape(format!(
                "expected {} rows for recording shape {shape}",
                shape.outer().height()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = shape.outer().part(i + 1) - shape.inner().part(i + 1);
            if row.len() != want {
                return Err(Error::Shape(format!(
                    "row {} of recording shape {shape} must hold {want} labels",
                    i + 1
                )));
            }
        }
        let rec = Recording { shape, rows };
        let m = rec.len();
        let mut seen = vec![false; m + 1];
        for cell in rec.shape.cells() {
            let label = rec.label(cell).unwrap();
            if label == 0 || label > m || seen[label] {
                return Err(Error::Shape(format!(
                    "labels must be a permutation of 1..{m}"
                )));
            }
            seen[label] = true;
            if let Some(l) = rec.label(Cell::new(cell.row, cell.col + 1)) {
                if l <= label {
                    return Err(Error::Shape(format!(
                        "labels must increase along rows (cell {cell})"
                    )));
                }
            }
            if let Some(l) = rec.label(Cell::new(cell.row + 1, cell.col)) {
                if l <= label {
                    return Err(Error::Shape(format!(
                        "labels must increase along columns (cell {cell})"
                    )));
                }
            }
        }
        Ok(rec)
    }

    pub fn empty() -> Self {
        Recording::default()
    }

    /// The label-free skew recording of shape λ/λ, the R' of a run with no
    /// slides.
    pub fn empty_over(shape: &Partition) -> Self {
        Recording {
            shape: SkewShape::new(shape.clone(), shape.clone()).expect("λ/λ is a skew shape"),
            rows: vec![Vec::new(); shape.height()],
        }
    }

    /// The recording encoding a chain: label k at the k-th added box.
    pub fn from_chain(chain: &Chain) -> Self {
        let shape = SkewShape::new(chain.last().clone(), chain.first().clone())
            .expect("chain endpoints are nested");
        let mut labels: BTreeMap<Cell, usize> = BTreeMap::new();
        for k in 1..=chain.steps() {
            labels.insert(chain.added_cell(k), k);
        }
        let rows = (1..=shape.outer().height())
            .map(|i| {
                (shape.inner().part(i) + 1..=shape.outer().part(i))
                    .map(|j| labels[&Cell::new(i, j)])
                    .collect()
            })
            .collect();
        Recording { shape, rows }
    }

    /// Row-major canonical standard recording of a straight shape.
    pub fn row_major(shape: &Partition) -> Self {
        let mut rows = Vec::new();
        let mut next = 1;
        for i in 1..=shape.height() {
            rows.push((0..shape.part(i)).map(|k| next + k).collect());
            next += shape.part(i);
        }
        Recording {
            shape: SkewShape::straight(shape.clone()),
            rows,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Number of labels.
    pub fn len(&self) -> usize {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains_cell(cell) {
            return None;
        }
        let offset = self.shape.inner().part(cell.row);
        self.rows[cell.row - 1].get(cell.col - 1 - offset).copied()
    }

    pub fn cell_of(&self, label: usize) -> Option<Cell> {
        self.shape
            .cells()
            .into_iter()
            .find(|&c| self.label(c) == Some(label))
    }

    /// The encoded chain, from the inner to the outer shape.
    pub fn chain(&self) -> Chain {
        let mut cells: Vec<(usize, Cell)> = self
            .shape
            .cells()
            .into_iter()
            .map(|c| (self.label(c).unwrap(), c))
            .collect();
        cells.sort();
        let mut partitions = vec![self.shape.inner().clone()];
        for (_, cell) in cells {
            partitions.push(
                partitions
                    .last()
                    .unwrap()
                    .add_box(cell.row)
                    .expect("standard labels grow through partitions"),
            );
        }
        Chain::new(partitions).expect("one box per step")
    }

    /// All standard recordings of a straight shape.
    pub fn all_standard(shape: &Partition) -> Vec<Recording> {
        fn rec(
            current: Partition,
            target: &Partition,
            chain: &mut Vec<Partition>,
            out: &mut Vec<Recording>,
        ) {
            if current == *target {
                out.push(Recording::from_chain(
                    &Chain::new(chain.clone()).expect("built one box at a time"),
                ));
                return;
            }
            for cell in current.addable_cells() {
                if target.part(cell.row) >= cell.col {
                    let next = current.add_box(cell.row).unwrap();
                    chain.push(next.clone());
                    rec(next, target, chain, out);
                    chain.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(
            Partition::empty(),
            shape,
            &mut vec![Partition::empty()],
            &mut out,
        );
        out
    }
}

impl fmt::Display for Recording {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.outer().is_empty() {
            return writeln!(f, "-");
        }
        for i in 1..=self.shape.outer().height() {
            let mut toks: Vec<String> = vec![".".into(); self.shape.inner().part(i)];
            for j in self.shape.inner().part(i) + 1..=self.shape.outer().part(i) {
                toks.push(self.label(Cell::new(i, j)).unwrap().to_string());
            }
            writeln!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}

/// Parses a recording in TBL syntax with integer labels.
pub fn parse_recording(text: &str) -> Result<Recording> {
    let mut inner_parts = Vec::new();
    let mut outer_parts = Vec::new();
    let mut rows = Vec::new();
    let mut saw_any = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "-" && !saw_any {
            saw_any = true;
            continue;
        }
        saw_any = true;
        let mut inner = 0usize;
        let mut labels = Vec::new();
        for tok in line.split_whitespace() {
            if tok == "." {
                if !labels.is_empty() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "inner-cell marker `.` after a filled cell".into(),
                    });
                }
                inner += 1;
            } else {
                let label = tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid label {tok:?}"),
                })?;
                labels.push(label);
            }
        }
        inner_parts.push(inner);
        outer_parts.push(inner + labels.len());
        rows.push(labels);
    }
    if !saw_any {
        return Err(Error::Parse {
            line: 1,
            msg: "empty recording".into(),
        });
    }
    let shape = SkewShape::new(Partition::new(outer_parts)?, Partition::new(inner_parts)?)?;
    Recording::new(shape, rows)
}

/// Fomin's local rule. Given the bottom-left ν, top-left μ and top-right ρ
/// of a square with |μ| = |ν|+1 and |ρ| = |ν|+2, returns the bottom-right:
/// the partition of size |ν|+1 between ν and ρ that is μ itself when μ is
/// the only candidate, and the other candidate otherwise. The rule is
/// symmetric in μ and λ.
pub fn local_rule(nu: &Partition, mu: &Partition, rho: &Partition) -> Result<Partition> {
    if mu.size() != nu.size() + 1 || rho.size() != nu.size() + 2 {
        return Err(Error::Precondition(format!(
            "local rule needs |mu| = |nu|+1 and |rho| = |nu|+2, got {nu} / {mu} / {rho}"
        )));
    }
    if !nu.contained_in(mu) || !mu.contained_in(rho) {
        return Err(Error::Precondition(format!(
            "local rule needs nu ⊂ mu ⊂ rho, got {nu} / {mu} / {rho}"
        )));
    }
    let mut candidates = Vec::new();
    for row in 1..=rho.height() {
        if rho.part(row) > nu.part(row) {
            if let Ok(p) = nu.add_box(row) {
                if p.contained_in(rho) && !candidates.contains(&p) {
                    candidates.push(p);
                }
            }
        }
    }
    debug_assert!(
        candidates.len() == 1 || candidates.len() == 2,
        "the candidate set always has size 1 or 2"
    );
    if candidates.len() == 1 {
        Ok(mu.clone())
    } else {
        Ok(candidates
            .into_iter()
            .find(|p| p != mu)
            .expect("two distinct candidates, one differs from mu"))
    }
}

/// A rectangular array of partitions where every row grows by one box left
/// to right, every column grows by one box bottom to top, and every unit
/// square satisfies the local rule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthDiagram {
    grid: Vec<Vec<Partition>>,
}

impl GrowthDiagram {
    pub fn grid(&self) -> &[Vec<Partition>] {
        &self.grid
    }

    pub fn row_count(&self) -> usize {
        self.grid.len()
    }

    pub fn col_count(&self) -> usize {
        self.grid[0].len()
    }

    pub fn top_row(&self) -> Chain {
        Chain::new(self.grid[0].clone()).expect("diagram rows are chains")
    }

    pub fn bottom_row(&self) -> Chain {
        Chain::new(self.grid[self.grid.len() - 1].clone()).expect("diagram rows are chains")
    }

    /// Leftmost column read bottom to top, a chain from ∅ to μ.
    pub fn left_chain(&self) -> Chain {
        let col: Vec<Partition> = self.grid.iter().rev().map(|row| row[0].clone()).collect();
        Chain::new(col).expect("diagram columns are chains")
    }

    /// Rightmost column read bottom to top, a chain from ν to λ.
    pub fn right_chain(&self) -> Chain {
        let last = self.col_count() - 1;
        let col: Vec<Partition> = self
            .grid
            .iter()
            .rev()
            .map(|row| row[last].clone())
            .collect();
        Chain::new(col).expect("diagram columns are chains")
    }

    /// The recording tableau R encoded by the leftmost column.
    pub fn recording(&self) -> Recording {
        Recording::from_chain(&self.left_chain())
    }

    /// The skew recording R' encoded by the rightmost column.
    pub fn skew_recording(&self) -> Recording {
        Recording::from_chain(&self.right_chain())
    }
}

impl fmt::Display for GrowthDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.grid {
            let line = row
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" | ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Completes a growth diagram from its topmost row (the chain of a skew
/// tableau, μ to λ) and leftmost column (the recording chain, ∅ to μ, read
/// bottom to top) using the local rule.
pub fn build_diagram(top: &Chain, left: &Chain) -> Result<GrowthDiagram> {
    if left.last() != top.first() {
        return Err(Error::Precondition(format!(
            "left chain must end at the top chain's start, got {} vs {}",
            left.last(),
            top.first()
        )));
    }
    let rows = left.partitions().len();
    let cols = top.partitions().len();
    let mut grid = vec![vec![Partition::empty(); cols]; rows];
    grid[0] = top.partitions().to_vec();
    for (i, row) in grid.iter_mut().enumerate() {
        row[0] = left.partitions()[rows - 1 - i].clone();
    }
    for i in 1..rows {
        for j in 1..cols {
            let mu = grid[i - 1][j - 1].clone();
            let rho = grid[i - 1][j].clone();
            let nu = grid[i][j - 1].clone();
            grid[i][j] = local_rule(&nu, &mu, &rho)?;
        }
    }
    Ok(GrowthDiagram { grid })
}

/// Rebuilds a growth diagram from its bottom-most row and rightmost column
/// (read bottom to top), exploiting the symmetry of the local rule.
pub fn build_diagram_reverse(bottom: &Chain, right: &Chain) -> Result<GrowthDiagram> {
    if right.first() != bottom.last() {
        return Err(Error::Precondition(format!(
            "right chain must start at the bottom chain's end, got {} vs {}",
            right.first(),
            bottom.last()
        )));
    }
    let rows = right.partitions().len();
    let cols = bottom.partitions().len();
    let mut grid = vec![vec![Partition::empty(); cols]; rows];
    grid[rows - 1] = bottom.partitions().to_vec();
    for (i, row) in grid.iter_mut().enumerate() {
        row[cols - 1] = right.partitions()[rows - 1 - i].clone();
    }
    for i in (1..rows).rev() {
        for j in (1..cols).rev() {
            let nu = grid[i][j - 1].clone();
            let lam = grid[i][j].clone();
            let rho = grid[i - 1][j].clone();
            grid[i - 1][j - 1] = local_rule(&nu, &lam, &rho)?;
        }
    }
    Ok(GrowthDiagram { grid })
}

/// The Grw correspondence by direct sliding: rectifies `s`, choosing inner
/// corners in decreasing label order of `r`, and records in R' the outer
/// cell vacated by each slide. Returns (Rec(S), R').
pub fn grw(r: &Recording, s: &SkewTableau) -> Result<(Tableau, Recording)> {
    let (t, rp, _) = grw_traced(r, s)?;
    Ok((t, rp))
}

/// [`grw`] plus the growth diagram assembled from the standardization
/// chains of every intermediate tableau, one row per slide.
pub fn grw_traced(r: &Recording, s: &SkewTableau) -> Result<(Tableau, Recording, GrowthDiagram)> {
    if !r.shape().is_straight() || r.shape().outer() != s.shape().inner() {
        return Err(Error::Precondition(format!(
            "recording shape {} does not match the inner shape of {}",
            r.shape(),
            s.shape()
        )));
    }
    let lambda = s.shape().outer().clone();
    let mut current = s.clone();
    let mut grid = vec![current.standardization_chain().partitions().to_vec()];
    let mut vacated_labels: BTreeMap<Cell, usize> = BTreeMap::new();
    for label in (1..=r.len()).rev() {
        let corner = r.cell_of(label).expect("labels 1..m are present");
        let (next, vacated, _) = forward_slide(&current, corner)?;
        vacated_labels.insert(vacated, label);
        current = next;
        grid.push(current.standardization_chain().partitions().to_vec());
    }
    let rectified = current
        .into_tableau()
        .expect("all inner corners were slid away");
    let rp_shape = SkewShape::new(lambda, rectified.shape())?;
    let rp_rows = (1..=rp_shape.outer().height())
        .map(|i| {
            (rp_shape.inner().part(i) + 1..=rp_shape.outer().part(i))
                .map(|j| vacated_labels[&Cell::new(i, j)])
                .collect()
        })
        .collect();
    let rp = Recording::new(rp_shape, rp_rows)?;
    Ok((rectified, rp, GrowthDiagram { grid }))
}

/// Inverse of [`grw`]: reverse slides on `t` guided by `rp` in increasing
/// label order. Returns (R, S) with grw(R, S) = (t, rp).
pub fn grw_inverse(t: &Tableau, rp: &Recording) -> Result<(Recording, SkewTableau)> {
    if rp.shape().inner() != &t.shape() {
        return Err(Error::Precondition(format!(
            "skew recording {} does not stack onto a tableau of shape {}",
            rp.shape(),
            t.shape()
        )));
    }
    let mut current = SkewTableau::from(t.clone());
    let mut created_labels: BTreeMap<Cell, usize> = BTreeMap::new();
    for label in 1..=rp.len() {
        let outer_cell = rp.cell_of(label).expect("labels 1..m are present");
        let (next, created, _) = reverse_slide(&current, outer_cell)?;
        created_labels.insert(created, label);
        current = next;
    }
    let mu = current.shape().inner().clone();
    let r_rows = (1..=mu.height())
        .map(|i| {
            (1..=mu.part(i))
                .map(|j| created_labels[&Cell::new(i, j)])
                .collect()
        })
        .collect();
    let r = Recording::new(SkewShape::straight(mu), r_rows)?;
    Ok((r, current))
}

/// Dual equivalence: `s` and `u` must have the same shape, and every
/// standard recording of the inner shape must drive both to identical skew
/// recordings, i.e. the same sequence of slides always vacates the same
/// cells.
pub fn dual_equivalent(s: &SkewTableau, u: &SkewTableau) -> Result<bool> {
    if s.shape() != u.shape() {
        return Err(Error::Precondition(format!(
            "dual equivalence needs equal shapes, got {} and {}",
            s.shape(),
            u.shape()
        )));
    }
    let mu = s.shape().inner();
    if mu.size() > DUAL_EQUIVALENCE_BUDGET {
        return Err(Error::Resource(format!(
            "dual equivalence enumerates recordings of the inner shape; |mu| <= \
             {DUAL_EQUIVALENCE_BUDGET}, got {}",
            mu.size()
        )));
    }
    for r in Recording::all_standard(mu) {
        let (_, rp_s) = grw(&r, s)?;
        let (_, rp_u) = grw(&r, u)?;
        if rp_s != rp_u {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Ψ bijection: given `s` and a target tableau `tp` of the same shape
/// as Rec(S), returns the unique skew tableau of the same shape as `s` that
/// is dual equivalent to `s` and rectifies to `tp`.
pub fn psi(s: &SkewTableau, tp: &Tableau) -> Result<SkewTableau> {
    let t = rectify(s);
    if t.shape() != tp.shape() {
        return Err(Error::Precondition(format!(
            "psi needs rectify(S) and the target to share a shape, got {} and {}",
            t.shape(),
            tp.shape()
        )));
    }
    let r0 = Recording::row_major(s.shape().inner());
    let (_, skew_record) = grw(&r0, s)?;
    let (r_back, result) = grw_inverse(tp, &skew_record)?;
    debug_assert_eq!(
        r_back, r0,
        "growth-diagram symmetry returns the chosen recording"
    );
    Ok(result)
}
