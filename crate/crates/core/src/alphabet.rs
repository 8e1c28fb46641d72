//! Finite signed alphabets and words over them.
//!
//! A signed alphabet is a finite totally ordered symbol set where every
//! symbol carries a parity in Z2. Letters are compared by rank only; the
//! symbol token is display-level. The opposite alphabet reverses the order
//! and stars every symbol, keeping parities.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Z2-degree of a letter.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_bit())
    }
}

/// A letter of a signed alphabet: its 0-based rank in the total order plus
/// its parity. Within one alphabet the rank determines the parity, so
/// ordering by (rank, parity) coincides with ordering by rank.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    rank: u32,
    parity: Parity,
}

impl Letter {
    pub fn new(rank: u32, parity: Parity) -> Self {
        Letter { rank, parity }
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn parity(self) -> Parity {
        self.parity
    }

    pub fn is_even(self) -> bool {
        self.parity == Parity::Even
    }
}

/// `a` may sit immediately left of `b` in a row: a < b, or a = b with even
/// parity. This single predicate backs tableau validation, insertion
/// bumping, sliding and the Knuth-like relations.
pub fn row_ok(a: Letter, b: Letter) -> bool {
    a.rank < b.rank || (a == b && a.parity == Parity::Even)
}

/// `a` may sit immediately above `b` in a column: a < b, or a = b with odd
/// parity.
pub fn col_ok(a: Letter, b: Letter) -> bool {
    a.rank < b.rank || (a == b && a.parity == Parity::Odd)
}

/// A finite totally ordered symbol set with a parity per symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedAlphabet {
    symbols: Vec<String>,
    parities: Vec<Parity>,
    index: HashMap<String, u32>,
}

impl SignedAlphabet {
    /// Builds an alphabet from `(symbol, parity)` pairs in order.
    pub fn new<S: Into<String>>(letters: Vec<(S, Parity)>) -> Result<Self> {
        let mut symbols = Vec::with_capacity(letters.len());
        let mut parities = Vec::with_capacity(letters.len());
        let mut index = HashMap::new();
        for (i, (sym, parity)) in letters.into_iter().enumerate() {
            let sym = sym.into();
            if sym.is_empty() || sym.chars().any(char::is_whitespace) {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("invalid symbol {sym:?}"),
                });
            }
            if index.insert(sym.clone(), i as u32).is_some() {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("duplicate symbol {sym:?}"),
                });
            }
            symbols.push(sym);
            parities.push(parity);
        }
        if symbols.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "empty alphabet".into(),
            });
        }
        Ok(SignedAlphabet {
            symbols,
            parities,
            index,
        })
    }

    /// Parses the SIGMA format: one `<symbol> <0|1>` per line, line order is
    /// the total order; `#` comments and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut seen = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let sym = fields.next().unwrap();
            let parity_tok = fields.next().ok_or_else(|| Error::Parse {
                line: lineno + 1,
                msg: format!("expected `<symbol> <0|1>`, got {line:?}"),
            })?;
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("trailing fields in {line:?}"),
                });
            }
            let parity = match parity_tok {
                "0" => Parity::Even,
                "1" => Parity::Odd,
                other => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("parity must be 0 or 1, got {other:?}"),
                    })
                }
            };
            if let Some(prev) = seen.insert(sym.to_string(), lineno + 1) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("duplicate symbol {sym:?} (first seen at line {prev})"),
                });
            }
            letters.push((sym.to_string(), parity));
        }
        if letters.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "empty alphabet file".into(),
            });
        }
        SignedAlphabet::new(letters)
    }

    /// Renders the alphabet back in SIGMA format.
    pub fn to_sigma(&self) -> String {
        let mut out = String::new();
        for (sym, parity) in self.symbols.iter().zip(&self.parities) {
            out.push_str(sym);
            out.push(' ');
            out.push_str(&parity.to_string());
            out.push('\n');
        }
        out
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letter(&self, rank: usize) -> Letter {
        Letter::new(rank as u32, self.parities[rank])
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(|r| self.letter(r))
    }

    pub fn get(&self, symbol: &str) -> Option<Letter> {
        self.index.get(symbol).map(|&r| self.letter(r as usize))
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter.rank as usize]
    }

    /// True if the letter's rank and parity both match this alphabet.
    pub fn owns(&self, letter: Letter) -> bool {
        (letter.rank as usize) < self.len() && self.parities[letter.rank as usize] == letter.parity
    }

    /// The opposite alphabet: order reversed, symbols starred, parities kept.
    pub fn opposite(&self) -> SignedAlphabet {
        let letters = self
            .symbols
            .iter()
            .zip(&self.parities)
            .rev()
            .map(|(sym, &p)| (format!("{sym}*"), p))
            .collect();
        SignedAlphabet::new(letters).expect("opposite of a valid alphabet is valid")
    }

    /// The letter of the opposite alphabet corresponding to `letter`.
    pub fn star_letter(&self, letter: Letter) -> Letter {
        debug_assert!(self.owns(letter));
        Letter::new(self.len() as u32 - 1 - letter.rank, letter.parity)
    }

    /// Star transform of a word: letters reversed and individually starred.
    pub fn star_word(&self, word: &Word) -> Word {
        Word::new(word.iter().rev().map(|&x| self.star_letter(x)).collect())
    }

    /// Parses a whitespace-separated word over this alphabet.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let letter = self.get(tok).ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("unknown symbol {tok:?}"),
            })?;
            letters.push(letter);
        }
        Ok(Word::new(letters))
    }

    pub fn format_word(&self, word: &Word) -> String {
        word.iter()
            .map(|&x| self.symbol(x))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A finite sequence of letters, all from one alphabet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Z2-degree: sum of letter parities mod 2.
    pub fn degree(&self) -> Parity {
        let odd = self.0.iter().filter(|x| !x.is_even()).count();
        if odd % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
