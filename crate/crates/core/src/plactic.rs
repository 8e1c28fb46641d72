//! The super plactic congruence: relation-level rewriting oracle, the
//! insertion-based decision procedure, and Greene invariants.
//!
//! The two Knuth-like relation families act on three adjacent letters:
//!
//! * xzy = zxy for x ≤ y ≤ z, x = y only for even y, y = z only for odd y
//! * yxz = yzx for x ≤ y ≤ z, x = y only for odd y, y = z only for even y
//!
//! In predicate form the first family needs `row_ok(x, y) && col_ok(y, z)`
//! and the second `col_ok(x, y) && row_ok(y, z)`; both families just swap
//! two adjacent letters of the word.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::alphabet::{col_ok, row_ok, Letter, Word};
use crate::error::{Error, Result};
use crate::insertion::tableau_of_word;
use crate::shapes::Partition;

/// Default bound on the size of a BFS congruence class.
pub const DEFAULT_MAX_CLASS: usize = 100_000;

/// Longest word accepted by the Greene-invariant brute force.
pub const GREENE_BUDGET: usize = 10;

/// All words reachable from `w` by one relation of either family, in either
/// direction.
pub fn knuth_neighbors(w: &Word) -> BTreeSet<Word> {
    let letters = w.letters();
    let mut out = BTreeSet::new();
    if letters.len() < 3 {
        return out;
    }
    for i in 0..letters.len() - 2 {
        let (a, b, c) = (letters[i], letters[i + 1], letters[i + 2]);
        // xzy <-> zxy swaps the first two letters of the window
        if swap_first_two_applies(a, b, c) {
            let mut v = letters.to_vec();
            v.swap(i, i + 1);
            out.insert(Word::new(v));
        }
        // yxz <-> yzx swaps the last two letters of the window
        if swap_last_two_applies(a, b, c) {
            let mut v = letters.to_vec();
            v.swap(i + 1, i + 2);
            out.insert(Word::new(v));
        }
    }
    out
}

fn swap_first_two_applies(a: Letter, b: Letter, c: Letter) -> bool {
    // (a,b,c) = (x,z,y): xzy -> zxy, or (a,b,c) = (z,x,y): zxy -> xzy
    (row_ok(a, c) && col_ok(c, b)) || (row_ok(b, c) && col_ok(c, a))
}

fn swap_last_two_applies(a: Letter, b: Letter, c: Letter) -> bool {
    // (a,b,c) = (y,x,z): yxz -> yzx, or (a,b,c) = (y,z,x): yzx -> yxz
    (col_ok(b, a) && row_ok(a, c)) || (col_ok(c, a) && row_ok(a, b))
}

/// The full congruence class of `w` under the relations, bounded by
/// `max_class_size`.
pub fn bfs_class(w: &Word, max_class_size: usize) -> Result<BTreeSet<Word>> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for next in knuth_neighbors(&current) {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= max_class_size {
                return Err(Error::Resource(format!(
                    "congruence class of a length-{} word exceeds {max_class_size} elements",
                    w.len()
                )));
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(seen.into_iter().collect())
}

/// Breadth-first decision of the congruence, the independent oracle for
/// [`equivalent`]. Words of different lengths are never equivalent.
pub fn equivalent_bfs(w: &Word, v: &Word, max_class_size: usize) -> Result<bool> {
    if w.len() != v.len() {
        return Ok(false);
    }
    if w == v {
        return Ok(true);
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for next in knuth_neighbors(&current) {
            if next == *v {
                return Ok(true);
            }
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= max_class_size {
                return Err(Error::Resource(format!(
                    "congruence class of a length-{} word exceeds {max_class_size} elements",
                    w.len()
                )));
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(false)
}

/// Decides the congruence through the cross-section property: two words are
/// equivalent iff they insert to the same super tableau.
pub fn equivalent(w: &Word, v: &Word) -> bool {
    tableau_of_word(w) == tableau_of_word(v)
}

/// Greene row invariant l_k(w): the maximal total length of k disjoint
/// subsequences of `w` that are rows. Exhaustive subset search, budgeted.
pub fn greene_row(w: &Word, k: usize) -> Result<usize> {
    greene(w, k, row_ok)
}

/// Greene column invariant: k disjoint subsequences that are columns.
pub fn greene_col(w: &Word, k: usize) -> Result<usize> {
    // a column word weakly decreases, repeating only odd letters
    greene(w, k, |a, b| col_ok(b, a))
}

fn greene(w: &Word, k: usize, ok: fn(Letter, Letter) -> bool) -> Result<usize> {
    let n = w.len();
    if n > GREENE_BUDGET {
        return Err(Error::Resource(format!(
            "Greene invariants are brute-forced for |w| <= {GREENE_BUDGET}, got {n}"
        )));
    }
    if k == 0 || n == 0 {
        return Ok(0);
    }
    let letters = w.letters();
    // chain[mask]: positions of mask, in order, form a row (resp. column)
    let full = 1usize << n;
    let mut chain = vec![false; full];
    chain[0] = true;
    for mask in 1..full {
        let last = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let rest = mask & !(1 << last);
        if rest == 0 {
            chain[mask] = true;
            continue;
        }
        let prev = usize::BITS as usize - 1 - rest.leading_zeros() as usize;
        chain[mask] = chain[rest] && ok(letters[prev], letters[last]);
    }
    // best[mask]: max total length of up to `round` disjoint chains in mask
    let mut best = vec![0usize; full];
    for _ in 0..k.min(n) {
        let mut next = vec![0usize; full];
        for mask in 0..full {
            // iterate over submasks of mask
            let mut sub = mask;
            loop {
                if chain[sub] {
                    let val = sub.count_ones() as usize + best[mask & !sub];
                    if val > next[mask] {
                        next[mask] = val;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        best = next;
    }
    Ok(best[full - 1])
}

/// Recovers the shape of the insertion tableau of `w` from the Greene row
/// invariants: λ_k = l_k − l_{k−1}.
pub fn shape_from_greene(w: &Word) -> Result<Partition> {
    let mut parts = Vec::new();
    let mut prev = 0usize;
    for k in 1..=w.len() {
        let lk = greene_row(w, k)?;
        if lk == prev {
            break;
        }
        parts.push(lk - prev);
        prev = lk;
    }
    Partition::new(parts)
        .map_err(|_| Error::Invariant("Greene differences are not a partition".into()))
}
