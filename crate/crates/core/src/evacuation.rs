//! The super evacuation procedure: an involution sending a tableau over Σ
//! to a tableau of the same shape over the opposite alphabet Σ^op.
//!
//! Each round deletes the top-left box, slides the hole out, and writes the
//! starred letter into the output frame at the cell vacated from the
//! shrinking tableau.

use std::collections::BTreeMap;

use crate::alphabet::{Letter, SignedAlphabet};
use crate::insertion::{insert_left, insert_right, tableau_of_word};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableau::{SkewTableau, Tableau};
use crate::taquin::forward_slide;

/// Evacuates `t` by jeu de taquin, producing t^op over `a.opposite()`.
pub fn evacuate(t: &Tableau, a: &SignedAlphabet) -> Tableau {
    let shape = t.shape();
    let mut current = t.clone();
    let mut output: BTreeMap<Cell, Letter> = BTreeMap::new();
    while !current.is_empty() {
        let x = current.entry(Cell::new(1, 1)).expect("nonempty tableau");
        let skew_shape = SkewShape::new(current.shape(), Partition::new(vec![1]).unwrap())
            .expect("(1) fits in any nonempty shape");
        let mut rows: Vec<Vec<Letter>> = current.rows().to_vec();
        rows[0].remove(0);
        let punctured = SkewTableau::new(skew_shape, rows)
            .expect("removing the top-left box keeps the conditions");
        let (slid, vacated, _) = forward_slide(&punctured, Cell::new(1, 1))
            .expect("(1,1) is the inner corner of shape (1)");
        output.insert(vacated, a.star_letter(x));
        current = slid.into_tableau().expect("inner shape is exhausted");
    }
    let rows = (1..=shape.height())
        .map(|i| {
            (1..=shape.part(i))
                .map(|j| output[&Cell::new(i, j)])
                .collect()
        })
        .collect();
    Tableau::new(rows).expect("evacuation yields a valid super tableau")
}

/// The congruence-defined opposite: the unique tableau over Σ^op whose row
/// reading is equivalent to the starred row reading of `t`. Computed by
/// insertion; equals [`evacuate`].
pub fn opposite_via_congruence(t: &Tableau, a: &SignedAlphabet) -> Tableau {
    tableau_of_word(&a.star_word(&t.read_row()))
}

/// Checks the duality between left insertion over Σ and right insertion
/// over Σ^op:
/// (x_k ← … ← (x_1 ← t)) = ((t^op → x_1^*) → … → x_k^*)^op.
pub fn duality_check(t: &Tableau, xs: &[Letter], a: &SignedAlphabet) -> bool {
    let mut lhs = t.clone();
    for &x in xs {
        lhs = insert_left(x, &lhs);
    }
    let mut rhs = evacuate(t, a);
    for &x in xs {
        rhs = insert_right(&rhs, a.star_letter(x));
    }
    lhs == evacuate(&rhs, &a.opposite())
}
