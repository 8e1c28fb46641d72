//! Schensted-like right (row) and left (column) insertion, the
//! word-to-tableau map, and the insertion products.
//!
//! Right insertion of `x` into a row: append when the row's last entry may
//! precede `x` ([`row_ok`]), otherwise bump the leftmost entry that may not.
//! Left insertion is the same algorithm run on the transposed tableau with
//! [`col_ok`]. Both searches use `partition_point`, sharing the exact
//! predicates used by tableau validation.

use crate::alphabet::{col_ok, row_ok, Letter, Word};
use crate::tableau::{SkewTableau, Tableau};

/// Inserts `x` into `rows` under `ok(previous, inserted)`, bumping displaced
/// entries into later rows. `rows` must stay weakly increasing under `ok`.
fn bump_insert(rows: &mut Vec<Vec<Letter>>, x: Letter, ok: fn(Letter, Letter) -> bool) {
    let mut carry = x;
    let mut i = 0;
    loop {
        if i == rows.len() {
            rows.push(vec![carry]);
            return;
        }
        let row = &mut rows[i];
        match row.last() {
            Some(&last) if !ok(last, carry) => {
                let pos = row.partition_point(|&y| ok(y, carry));
                std::mem::swap(&mut row[pos], &mut carry);
                i += 1;
            }
            _ => {
                row.push(carry);
                return;
            }
        }
    }
}

fn transpose(rows: &[Vec<Letter>]) -> Vec<Vec<Letter>> {
    let cols = rows.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| rows.iter().filter_map(|row| row.get(j)).copied().collect())
        .collect()
}

/// Right insertion t → x.
pub fn insert_right(t: &Tableau, x: Letter) -> Tableau {
    let mut rows = t.rows().to_vec();
    bump_insert(&mut rows, x, row_ok);
    Tableau::new(rows).expect("right insertion preserves validity")
}

/// Left insertion x ← t.
pub fn insert_left(x: Letter, t: &Tableau) -> Tableau {
    let mut cols = transpose(t.rows());
    bump_insert(&mut cols, x, col_ok);
    Tableau::new(transpose(&cols)).expect("left insertion preserves validity")
}

/// The map C: inserts the letters of `w` from left to right into the empty
/// tableau using right insertion.
pub fn tableau_of_word(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    for &x in w {
        t = insert_right(&t, x);
    }
    t
}

/// The insertion product t ⋆ u = (t → R_row(u)).
pub fn product(t: &Tableau, u: &Tableau) -> Tableau {
    let mut out = t.clone();
    for &x in &u.read_row() {
        out = insert_right(&out, x);
    }
    out
}

/// The skew insertion product S ⋆ U = (∅ → R_row(S) R_row(U)).
pub fn skew_product(s: &SkewTableau, u: &SkewTableau) -> Tableau {
    tableau_of_word(&s.read_row().concat(&u.read_row()))
}
