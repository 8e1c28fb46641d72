//! Super Littlewood-Richardson coefficients, rectification fibers, formal
//! tableau sums and the desk-scale verification of the LR identity
//! S_{λ/μ} = Σ_ν c_{λ,μ}^ν S_ν.
//!
//! Everything here is exhaustive enumeration over a finite alphabet, with
//! explicit budgets instead of silent truncation.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::alphabet::{Letter, SignedAlphabet};
use crate::error::{Error, Result};
use crate::insertion::product;
use crate::shapes::{Partition, SkewShape};
use crate::tableau::{enumerate, enumerate_skew, Tableau};
use crate::taquin::rectify;

/// Enumeration budgets for the fiber and identity computations.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Largest |λ| enumerated.
    pub max_outer_size: usize,
    /// Largest alphabet enumerated.
    pub max_alphabet: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_outer_size: 8,
            max_alphabet: 5,
        }
    }
}

fn check_budget(shape: &SkewShape, a: &SignedAlphabet, budget: &Budget) -> Result<()> {
    if shape.outer().size() > budget.max_outer_size {
        return Err(Error::Resource(format!(
            "|lambda| = {} exceeds the enumeration budget {}",
            shape.outer().size(),
            budget.max_outer_size
        )));
    }
    if a.len() > budget.max_alphabet {
        return Err(Error::Resource(format!(
            "alphabet size {} exceeds the enumeration budget {}",
            a.len(),
            budget.max_alphabet
        )));
    }
    Ok(())
}

/// For each rectified tableau t, the number of skew tableaux of the given
/// shape with Rec(S) = t.
pub fn rectification_fibers(
    shape: &SkewShape,
    a: &SignedAlphabet,
    budget: &Budget,
) -> Result<BTreeMap<Tableau, usize>> {
    check_budget(shape, a, budget)?;
    let mut fibers: BTreeMap<Tableau, usize> = BTreeMap::new();
    for s in enumerate_skew(shape, a) {
        *fibers.entry(rectify(&s)).or_insert(0) += 1;
    }
    Ok(fibers)
}

/// The super Littlewood-Richardson coefficient c_{λ,μ}^ν: the fiber count
/// over any tableau of shape ν. Independence of the choice is verified, not
/// assumed.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &SignedAlphabet,
    budget: &Budget,
) -> Result<usize> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    if nu.size() != shape.size() {
        return Ok(0);
    }
    let fibers = rectification_fibers(&shape, a, budget)?;
    let targets = enumerate(nu, a);
    if targets.is_empty() {
        return Ok(0);
    }
    let counts: Vec<usize> = targets
        .iter()
        .map(|t| fibers.get(t).copied().unwrap_or(0))
        .collect();
    let first = counts[0];
    if counts.iter().any(|&c| c != first) {
        return Err(Error::Invariant(format!(
            "fiber count over shape {nu} depends on the target tableau"
        )));
    }
    Ok(first)
}

/// A formal integer combination of super tableaux, the desk-scale image of
/// the tableau ring. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TableauSum {
    terms: BTreeMap<Tableau, i64>,
}

impl TableauSum {
    pub fn zero() -> Self {
        TableauSum::default()
    }

    /// The unit of the ring: the empty tableau with coefficient 1.
    pub fn unit() -> Self {
        let mut s = TableauSum::zero();
        s.add(Tableau::empty(), 1);
        s
    }

    pub fn add(&mut self, t: Tableau, coefficient: i64) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(slot) => {
                if coefficient != 0 {
                    slot.insert(coefficient);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Tableau, i64> {
        &self.terms
    }

    pub fn coefficient(&self, t: &Tableau) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn plus(&self, other: &TableauSum) -> TableauSum {
        let mut out = self.clone();
        for (t, &c) in &other.terms {
            out.add(t.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> TableauSum {
        let mut out = TableauSum::zero();
        for (t, &c) in &self.terms {
            out.add(t.clone(), c * k);
        }
        out
    }

    /// Bilinear extension of the insertion product.
    pub fn times(&self, other: &TableauSum) -> TableauSum {
        let mut out = TableauSum::zero();
        for (t, &ct) in &self.terms {
            for (u, &cu) in &other.terms {
                out.add(product(t, u), ct * cu);
            }
        }
        out
    }
}

/// The formal sum of all super tableaux of a straight shape, or of the
/// rectifications of all skew tableaux of a skew shape (count-preserving).
pub fn schur_sum(shape: &SkewShape, a: &SignedAlphabet, budget: &Budget) -> Result<TableauSum> {
    check_budget(shape, a, budget)?;
    let mut out = TableauSum::zero();
    for s in enumerate_skew(shape, a) {
        out.add(rectify(&s), 1);
    }
    Ok(out)
}

/// One line of an LR report: a target shape and its coefficient.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LrEntry {
    pub nu: String,
    pub coefficient: usize,
    /// Number of super tableaux of shape ν over the alphabet.
    pub tableau_count: usize,
}

/// Desk-scale verification of the identity S_{λ/μ} = Σ_ν c_{λ,μ}^ν S_ν.
///
/// Records the alphabet alongside the coefficients, since they are only
/// meaningful relative to a fixed Σ.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LrReport {
    pub lambda: String,
    pub mu: String,
    pub alphabet: String,
    /// One entry per ν of the right size with at least one tableau over the
    /// alphabet, sorted lexicographically by ν.
    pub entries: Vec<LrEntry>,
    pub skew_tableau_count: usize,
    /// Σ_ν c_{λ,μ}^ν · #T(Σ,ν); equals `skew_tableau_count`.
    pub weighted_total: usize,
}

impl fmt::Display for LrReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{} {}", entry.nu, entry.coefficient)?;
        }
        writeln!(
            f,
            "total {} = {} skew tableaux",
            self.weighted_total, self.skew_tableau_count
        )
    }
}

/// Computes every c_{λ,μ}^ν by fiber counting, verifies that fibers do not
/// depend on the target tableau, and checks the counting identity
/// #SkewT(λ/μ) = Σ_ν c_{λ,μ}^ν · #T(Σ,ν).
pub fn verify_lr_identity(
    lambda: &Partition,
    mu: &Partition,
    a: &SignedAlphabet,
    budget: &Budget,
) -> Result<LrReport> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let fibers = rectification_fibers(&shape, a, budget)?;
    let skew_tableau_count: usize = fibers.values().sum();

    let mut entries = Vec::new();
    let mut weighted_total = 0usize;
    let mut nus = Partition::all_of_size(shape.size());
    nus.sort_by(|x, y| x.parts().cmp(y.parts()));
    for nu in nus {
        let targets = enumerate(&nu, a);
        if targets.is_empty() {
            // no tableau of this shape exists over the alphabet, so no
            // skew tableau may rectify there either
            if fibers.keys().any(|t| t.shape() == nu) {
                return Err(Error::Invariant(format!(
                    "rectification reached shape {nu} which has no tableaux"
                )));
            }
            continue;
        }
        let counts: Vec<usize> = targets
            .iter()
            .map(|t| fibers.get(t).copied().unwrap_or(0))
            .collect();
        let coefficient = counts[0];
        if counts.iter().any(|&c| c != coefficient) {
            return Err(Error::Invariant(format!(
                "fiber count over shape {nu} depends on the target tableau"
            )));
        }
        weighted_total += coefficient * targets.len();
        entries.push(LrEntry {
            nu: nu.to_string(),
            coefficient,
            tableau_count: targets.len(),
        });
    }
    if weighted_total != skew_tableau_count {
        return Err(Error::Invariant(format!(
            "LR identity fails for {shape}: {weighted_total} != {skew_tableau_count}"
        )));
    }
    Ok(LrReport {
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        alphabet: a.to_sigma(),
        entries,
        skew_tableau_count,
        weighted_total,
    })
}

/// The content monomial x^t: each letter with its multiplicity in t.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exponents: BTreeMap<Letter, usize>,
}

impl Monomial {
    pub fn exponents(&self) -> &BTreeMap<Letter, usize> {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.values().sum()
    }

    pub fn format(&self, a: &SignedAlphabet) -> String {
        if self.exponents.is_empty() {
            return "1".into();
        }
        self.exponents
            .iter()
            .map(|(&x, &e)| {
                if e == 1 {
                    a.symbol(x).to_string()
                } else {
                    format!("{}^{e}", a.symbol(x))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// The monomial of a tableau.
pub fn monomial(t: &Tableau) -> Monomial {
    let mut exponents = BTreeMap::new();
    for row in t.rows() {
        for &x in row {
            *exponents.entry(x).or_insert(0) += 1;
        }
    }
    Monomial { exponents }
}

/// The image of a tableau sum in the polynomial ring: monomials with their
/// accumulated coefficients. Applied to [`schur_sum`] of a straight shape
/// this is the super Schur polynomial.
pub fn sum_to_polynomial(s: &TableauSum) -> BTreeMap<Monomial, i64> {
    let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
    for (t, &c) in s.terms() {
        let m = monomial(t);
        let entry = out.entry(m.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            out.remove(&m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::SignedAlphabet;
    use crate::tableau::parse_tableau;
    use crate::testutil::three_letters;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn classical3() -> SignedAlphabet {
        SignedAlphabet::parse("1 0\n2 0\n3 0").unwrap()
    }

    #[test]
    fn straight_fibers_are_singletons() {
        let a = three_letters(0b011);
        let shape: SkewShape = "2,1".parse().unwrap();
        let fibers = rectification_fibers(&shape, &a, &Budget::default()).unwrap();
        for (t, count) in &fibers {
            assert_eq!(*count, 1);
            assert_eq!(t.shape(), p("2,1"));
        }
    }

    #[test]
    fn classical_hook_fibers() {
        let a = classical3();
        let shape: SkewShape = "2,1/1".parse().unwrap();
        let fibers = rectification_fibers(&shape, &a, &Budget::default()).unwrap();
        // s_{(2,1)/(1)} = s_(2) + s_(1,1): every fiber has count 1
        for (t, count) in &fibers {
            assert_eq!(*count, 1, "tableau {t:?}");
            assert!(t.shape() == p("2") || t.shape() == p("1,1"));
        }
    }

    #[test]
    fn lr_coefficient_examples() {
        let a = classical3();
        let budget = Budget::default();
        assert_eq!(
            lr_coefficient(&p("2,1"), &p("1"), &p("2"), &a, &budget).unwrap(),
            1
        );
        assert_eq!(
            lr_coefficient(&p("2,1"), &p("1"), &p("1,1"), &a, &budget).unwrap(),
            1
        );
        assert_eq!(
            lr_coefficient(&p("2,1"), &p("1"), &p("3"), &a, &budget).unwrap(),
            0
        );
        for lam in Partition::all_up_to(5) {
            // 0 when the alphabet admits no tableau of shape lam at all
            let expected = if enumerate(&lam, &a).is_empty() { 0 } else { 1 };
            assert_eq!(
                lr_coefficient(&lam, &Partition::empty(), &lam, &a, &budget).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let a = classical3();
        let tight = Budget {
            max_outer_size: 2,
            max_alphabet: 5,
        };
        assert!(matches!(
            lr_coefficient(&p("2,1"), &p("1"), &p("2"), &a, &tight),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn schur_sum_examples() {
        let a = three_letters(0b101);
        let single: SkewShape = "1".parse().unwrap();
        let s = schur_sum(&single, &a, &Budget::default()).unwrap();
        assert_eq!(s.terms().len(), 3);
        assert_eq!(s.total(), 3);

        let empty = schur_sum(&SkewShape::default(), &a, &Budget::default()).unwrap();
        assert_eq!(empty, TableauSum::unit());
    }

    #[test]
    fn skew_schur_projects_to_straight_sums() {
        let a = classical3();
        let budget = Budget::default();
        let skew: SkewShape = "2,1/1".parse().unwrap();
        let lhs = schur_sum(&skew, &a, &budget).unwrap();
        let s2 = schur_sum(&"2".parse().unwrap(), &a, &budget).unwrap();
        let s11 = schur_sum(&"1,1".parse().unwrap(), &a, &budget).unwrap();
        assert_eq!(lhs, s2.plus(&s11));
    }

    #[test]
    fn verify_identity_for_straight_shapes() {
        let a = three_letters(0b110);
        for lam in Partition::all_up_to(4) {
            if lam.is_empty() {
                continue;
            }
            let report =
                verify_lr_identity(&lam, &Partition::empty(), &a, &Budget::default()).unwrap();
            for entry in &report.entries {
                let expected = if entry.nu == lam.to_string() { 1 } else { 0 };
                assert_eq!(entry.coefficient, expected);
            }
        }
    }

    #[test]
    fn verify_identity_hook_example() {
        let a = classical3();
        let report = verify_lr_identity(&p("2,1"), &p("1"), &a, &Budget::default()).unwrap();
        let coeffs: BTreeMap<&str, usize> = report
            .entries
            .iter()
            .map(|e| (e.nu.as_str(), e.coefficient))
            .collect();
        assert_eq!(coeffs["2"], 1);
        assert_eq!(coeffs["1,1"], 1);
        assert_eq!(report.weighted_total, report.skew_tableau_count);
    }

    #[test]
    fn monomial_examples() {
        let a = SignedAlphabet::parse("1 0\n2 0\n3 1\n4 0\n5 1").unwrap();
        let t = parse_tableau("1 1 2\n3 4 4\n5\n5\n", &a).unwrap();
        let m = monomial(&t);
        let expected: Vec<(u32, usize)> = vec![(0, 2), (1, 1), (2, 1), (3, 2), (4, 2)];
        let got: Vec<(u32, usize)> = m.exponents().iter().map(|(&x, &e)| (x.rank(), e)).collect();
        assert_eq!(got, expected);

        let single = parse_tableau("4\n", &a).unwrap();
        assert_eq!(monomial(&single).degree(), 1);
    }

    #[test]
    fn polynomial_of_single_box_sum() {
        let a = three_letters(0b001);
        let sum = schur_sum(&"1".parse().unwrap(), &a, &Budget::default()).unwrap();
        let poly = sum_to_polynomial(&sum);
        assert_eq!(poly.len(), 3);
        assert!(poly.values().all(|&c| c == 1));
    }

    #[test]
    fn polynomial_is_multiplicative_on_small_products() {
        let a = three_letters(0b010);
        let budget = Budget::default();
        for lam in Partition::all_up_to(2) {
            for mu in Partition::all_up_to(2) {
                let sl = schur_sum(&SkewShape::straight(lam.clone()), &a, &budget).unwrap();
                let sm = schur_sum(&SkewShape::straight(mu.clone()), &a, &budget).unwrap();
                let lhs = sum_to_polynomial(&sl.times(&sm));
                // multiply the polynomials directly
                let pl = sum_to_polynomial(&sl);
                let pm = sum_to_polynomial(&sm);
                let mut rhs: BTreeMap<Monomial, i64> = BTreeMap::new();
                for (m1, c1) in &pl {
                    for (m2, c2) in &pm {
                        let mut exp = m1.exponents().clone();
                        for (&x, &e) in m2.exponents() {
                            *exp.entry(x).or_insert(0) += e;
                        }
                        *rhs.entry(Monomial { exponents: exp }).or_insert(0) += c1 * c2;
                    }
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tableau_sum_ring_basics() {
        let a = three_letters(0b100);
        let x = parse_tableau("1\n", &a).unwrap();
        let mut s = TableauSum::zero();
        s.add(x.clone(), 2);
        s.add(x.clone(), -2);
        assert_eq!(s, TableauSum::zero());

        let unit = TableauSum::unit();
        let mut sum = TableauSum::zero();
        sum.add(x.clone(), 3);
        assert_eq!(unit.times(&sum), sum);
        assert_eq!(sum.times(&unit), sum);
        assert_eq!(sum.scale(2).coefficient(&x), 6);
    }
}
