//! The super jeu de taquin: elementary slides, forward and reverse sliding,
//! confluent rectification, and skew concatenation.
//!
//! With south entry `s` and east entry `e` next to the hole, a forward step
//! is vertical (s moves up) when `row_ok(s, e)` and horizontal (e moves
//! left) when `col_ok(e, s)`; exactly one applies when both neighbours are
//! present, and a missing neighbour forces the other move. A hole with no
//! south or east neighbour is an outer corner and the slide is complete.

use serde::Serialize;

use crate::alphabet::{row_ok, Letter};
use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableau::{SkewTableau, Tableau};

/// One forward slide for the JSON-lines trace: the chosen inner corner, the
/// hole path, and the vacated outer corner.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SlideRecord {
    pub corner: [usize; 2],
    pub path: Vec<[usize; 2]>,
    pub vacated: [usize; 2],
}

/// A skew tableau with one empty box, stepped one sliding operation at a
/// time.
#[derive(Clone, Debug)]
pub struct Slider {
    inner: Partition,
    outer: Partition,
    grid: Vec<Vec<Option<Letter>>>,
    hole: Cell,
    path: Vec<Cell>,
}

/// Outcome of one sliding operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideStep {
    /// The hole moved to this cell.
    Moved(Cell),
    /// The hole is an outer corner; the slide is complete at this cell.
    Done(Cell),
}

impl Slider {
    /// Starts a forward slide by removing `corner` from the inner shape.
    pub fn start_forward(s: &SkewTableau, corner: Cell) -> Result<Self> {
        if !s.shape().inner_corners().contains(&corner) {
            return Err(Error::Precondition(format!(
                "{corner} is not an inner corner of {}",
                s.shape()
            )));
        }
        let inner = s.shape().inner().remove_box(corner.row)?;
        let outer = s.shape().outer().clone();
        let mut grid = grid_of(s);
        grid[corner.row - 1][corner.col - 1] = None;
        Ok(Slider {
            inner,
            outer,
            grid,
            hole: corner,
            path: vec![corner],
        })
    }

    pub fn hole(&self) -> Cell {
        self.hole
    }

    fn entry(&self, cell: Cell) -> Option<Letter> {
        if !self.outer.contains_cell(cell) {
            return None;
        }
        self.grid[cell.row - 1][cell.col - 1]
    }

    /// Performs one sliding operation.
    pub fn step(&mut self) -> SlideStep {
        let east_cell = Cell::new(self.hole.row, self.hole.col + 1);
        let south_cell = Cell::new(self.hole.row + 1, self.hole.col);
        let east = self
            .outer
            .contains_cell(east_cell)
            .then(|| self.entry(east_cell).expect("filled cell"));
        let south = self
            .outer
            .contains_cell(south_cell)
            .then(|| self.entry(south_cell).expect("filled cell"));
        let vertical = match (south, east) {
            (None, None) => return SlideStep::Done(self.hole),
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(s), Some(e)) => row_ok(s, e),
        };
        let from = if vertical { south_cell } else { east_cell };
        self.grid[self.hole.row - 1][self.hole.col - 1] = self.grid[from.row - 1][from.col - 1];
        self.grid[from.row - 1][from.col - 1] = None;
        self.hole = from;
        self.path.push(from);
        SlideStep::Moved(from)
    }

    /// Runs the slide to completion and reassembles the skew tableau.
    pub fn finish(mut self) -> (SkewTableau, Cell, Vec<Cell>) {
        loop {
            if let SlideStep::Done(vacated) = self.step() {
                let outer = self
                    .outer
                    .remove_box(vacated.row)
                    .expect("the vacated cell is an outer corner");
                let tableau = tableau_of_grid(&self.grid, outer, self.inner);
                return (tableau, vacated, self.path);
            }
        }
    }
}

fn grid_of(s: &SkewTableau) -> Vec<Vec<Option<Letter>>> {
    let outer = s.shape().outer();
    (1..=outer.height())
        .map(|i| {
            (1..=outer.part(i))
                .map(|j| s.entry(Cell::new(i, j)))
                .collect()
        })
        .collect()
}

fn tableau_of_grid(
    grid: &[Vec<Option<Letter>>],
    outer: Partition,
    inner: Partition,
) -> SkewTableau {
    let rows = (1..=outer.height())
        .map(|i| {
            (inner.part(i) + 1..=outer.part(i))
                .map(|j| grid[i - 1][j - 1].expect("cell of the frame is filled"))
                .collect()
        })
        .collect();
    let shape = SkewShape::new(outer, inner).expect("sliding keeps containment");
    SkewTableau::new(shape, rows).expect("sliding preserves the tableau conditions")
}

/// One forward sliding from an inner corner: returns the new skew tableau,
/// the vacated outer corner, and the hole path.
pub fn forward_slide(s: &SkewTableau, corner: Cell) -> Result<(SkewTableau, Cell, Vec<Cell>)> {
    Ok(Slider::start_forward(s, corner)?.finish())
}

/// One reverse sliding from an addable outer position: returns the new skew
/// tableau, the created inner corner, and the hole path.
pub fn reverse_slide(s: &SkewTableau, outer_cell: Cell) -> Result<(SkewTableau, Cell, Vec<Cell>)> {
    if !s.shape().outer().addable_cells().contains(&outer_cell) {
        return Err(Error::Precondition(format!(
            "{outer_cell} cannot be added to the outer shape {}",
            s.shape().outer()
        )));
    }
    let outer = s.shape().outer().add_box(outer_cell.row)?;
    let inner = s.shape().inner().clone();
    let mut grid: Vec<Vec<Option<Letter>>> = grid_of(s);
    if outer_cell.row > grid.len() {
        grid.push(Vec::new());
    }
    grid[outer_cell.row - 1].push(None);
    let mut hole = outer_cell;
    let mut path = vec![hole];
    loop {
        let north_cell = Cell::new(hole.row.wrapping_sub(1), hole.col);
        let west_cell = Cell::new(hole.row, hole.col.wrapping_sub(1));
        let in_frame = |cell: Cell| {
            cell.row >= 1
                && cell.col >= 1
                && outer.contains_cell(cell)
                && !inner.contains_cell(cell)
                && cell != hole
        };
        let north = in_frame(north_cell)
            .then(|| grid[north_cell.row - 1][north_cell.col - 1].expect("frame cell is filled"));
        let west = in_frame(west_cell)
            .then(|| grid[west_cell.row - 1][west_cell.col - 1].expect("frame cell is filled"));
        let vertical = match (west, north) {
            (None, None) => break,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(w), Some(n)) => row_ok(w, n),
        };
        let from = if vertical { north_cell } else { west_cell };
        grid[hole.row - 1][hole.col - 1] = grid[from.row - 1][from.col - 1];
        grid[from.row - 1][from.col - 1] = None;
        hole = from;
        path.push(from);
    }
    let new_inner = inner.add_box(hole.row)?;
    Ok((tableau_of_grid(&grid, outer, new_inner), hole, path))
}

/// Rectifies with the default corner policy: bottom-most, then rightmost.
pub fn rectify(s: &SkewTableau) -> Tableau {
    rectify_traced(s).0
}

/// Rectifies and returns the slide trace.
pub fn rectify_traced(s: &SkewTableau) -> (Tableau, Vec<SlideRecord>) {
    rectify_with(s, |corners| *corners.last().expect("nonempty"))
}

/// Rectifies, choosing the inner corner with a caller-supplied policy. The
/// chooser receives the inner corners sorted by (row, col) and must return
/// one of them; by confluence the result does not depend on the policy.
pub fn rectify_with<F>(s: &SkewTableau, mut choose: F) -> (Tableau, Vec<SlideRecord>)
where
    F: FnMut(&[Cell]) -> Cell,
{
    let mut current = s.clone();
    let mut trace = Vec::new();
    loop {
        let corners = current.shape().inner_corners();
        if corners.is_empty() {
            let tableau = current
                .into_tableau()
                .expect("no inner corners means a straight shape");
            return (tableau, trace);
        }
        let corner = choose(&corners);
        assert!(corners.contains(&corner), "chooser returned a non-corner");
        let (next, vacated, path) =
            forward_slide(&current, corner).expect("corner comes from inner_corners");
        trace.push(SlideRecord {
            corner: [corner.row, corner.col],
            path: path.iter().map(|c| [c.row, c.col]).collect(),
            vacated: [vacated.row, vacated.col],
        });
        current = next;
    }
}

/// The concatenation [S, U]: U translated right by the width of S and
/// placed above it. Its row reading is R_row(S)·R_row(U).
pub fn concat(s: &SkewTableau, u: &SkewTableau) -> SkewTableau {
    let width = s.shape().outer().part(1);
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for i in 1..=u.shape().outer().height() {
        outer.push(u.shape().outer().part(i) + width);
        inner.push(u.shape().inner().part(i) + width);
    }
    for i in 1..=s.shape().outer().height() {
        outer.push(s.shape().outer().part(i));
        inner.push(s.shape().inner().part(i));
    }
    let shape = SkewShape::new(
        Partition::new(outer).expect("concatenated outer shape is a partition"),
        Partition::new(inner).expect("concatenated inner shape is a partition"),
    )
    .expect("concatenated inner fits in outer");
    let mut rows = Vec::new();
    for i in 1..=u.shape().outer().height() {
        rows.push(row_letters(u, i));
    }
    for i in 1..=s.shape().outer().height() {
        rows.push(row_letters(s, i));
    }
    SkewTableau::new(shape, rows).expect("concatenation preserves the tableau conditions")
}

fn row_letters(s: &SkewTableau, row: usize) -> Vec<Letter> {
    (s.shape().inner().part(row) + 1..=s.shape().outer().part(row))
        .map(|j| s.entry(Cell::new(row, j)).expect("cell in frame"))
        .collect()
}
