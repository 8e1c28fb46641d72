//! Shared helpers for unit tests.

use crate::alphabet::{Parity, SignedAlphabet, Word};
use crate::shapes::{Partition, SkewShape};
use crate::tableau::{enumerate_skew, SkewTableau};

/// The alphabet {1<...<n} with even numbers of parity 0.
pub fn naturals(n: usize) -> SignedAlphabet {
    SignedAlphabet::new(
        (1..=n)
            .map(|i| {
                (
                    i.to_string(),
                    if i % 2 == 0 {
                        Parity::Even
                    } else {
                        Parity::Odd
                    },
                )
            })
            .collect(),
    )
    .unwrap()
}

/// A 3-letter alphabet for each parity bit pattern 0..8.
pub fn three_letters(pattern: u32) -> SignedAlphabet {
    SignedAlphabet::new(
        (0..3)
            .map(|i| {
                let p = if pattern >> i & 1 == 0 {
                    Parity::Even
                } else {
                    Parity::Odd
                };
                (format!("{}", i + 1), p)
            })
            .collect(),
    )
    .unwrap()
}

pub fn words_of_length(a: &SignedAlphabet, k: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                a.letters().map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn all_words(a: &SignedAlphabet, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|k| words_of_length(a, k)).collect()
}

/// All skew shapes λ/μ with |λ| ≤ max_outer and |λ/μ| ≤ max_cells.
pub fn skew_shapes(max_outer: usize, max_cells: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for outer in Partition::all_up_to(max_outer) {
        for inner in outer.sub_partitions() {
            let shape = SkewShape::new(outer.clone(), inner).unwrap();
            if shape.size() <= max_cells {
                out.push(shape);
            }
        }
    }
    out
}

/// All skew tableaux over `a` whose shape satisfies the given bounds.
pub fn small_skew_tableaux(
    a: &SignedAlphabet,
    max_outer: usize,
    max_cells: usize,
) -> Vec<SkewTableau> {
    skew_shapes(max_outer, max_cells)
        .iter()
        .flat_map(|shape| enumerate_skew(shape, a))
        .collect()
}
