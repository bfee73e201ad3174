//! Freely reduced words and cyclic words over the three-sorted alphabet.
//!
//! A `Word` is always freely reduced; constructors perform the reduction.
//! Formal (unreduced) words are plain `Vec<Letter>` and only turned into
//! `Word`s explicitly.

use std::fmt;

use crate::error::ParseError;
use crate::symbol::{Letter, Sign, Sort, Symbol};

/// A freely reduced word. The empty word is valid everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Free reduction of a letter sequence, single stack pass.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut stack: Vec<Letter> = Vec::new();
    for l in letters {
        if stack.last().is_some_and(|t| t.is_inverse_of(&l)) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    Word { letters: stack }
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    /// Builds a word from letters, freely reducing.
    pub fn new(letters: Vec<Letter>) -> Word {
        free_reduce(letters)
    }

    /// Wraps a letter sequence known to be reduced.
    pub fn from_reduced(letters: Vec<Letter>) -> Word {
        debug_assert!(is_reduced(&letters));
        Word { letters }
    }

    pub fn single(letter: Letter) -> Word {
        Word { letters: vec![letter] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(parts: &[&Word]) -> Word {
        free_reduce(parts.iter().flat_map(|w| w.letters.iter().cloned()))
    }

    pub fn append(&self, other: &Word) -> Word {
        Word::concat(&[self, other])
    }

    /// `u^-1 self u` reduced, matching the paper's right conjugation.
    pub fn conjugated_by(&self, u: &Word) -> Word {
        Word::concat(&[&u.inverse(), self, u])
    }

    /// Subword by letter range (panics on bad range).
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::from_reduced(self.letters[range].to_vec())
    }

    /// Total occurrences of `symbol` counting either sign.
    pub fn count_symbol(&self, symbol: &Symbol) -> usize {
        self.letters.iter().filter(|l| &l.symbol == symbol).count()
    }

    pub fn contains_symbol(&self, symbol: &Symbol) -> bool {
        self.letters.iter().any(|l| &l.symbol == symbol)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.letters.iter().map(|l| &l.symbol)
    }

    /// Distinct variable symbols, in order of first occurrence.
    pub fn variables(&self) -> Vec<Symbol> {
        let mut seen = Vec::new();
        for l in &self.letters {
            if l.symbol.is_variable() && !seen.contains(&l.symbol) {
                seen.push(l.symbol.clone());
            }
        }
        seen
    }

    /// Splits off the cyclically reducing conjugator: returns `(core, v)`
    /// with `self = v^-1 core v` and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo].is_inverse_of(&self.letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        let core = Word::from_reduced(self.letters[lo..hi].to_vec());
        let conj = Word::from_reduced(self.letters[hi..].to_vec());
        debug_assert_eq!(core.conjugated_by(&conj), *self);
        (CyclicWord::from_cyclically_reduced(core), conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() < 2 || !self.letters[0].is_inverse_of(self.letters.last().unwrap())
    }
}

fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| !w[0].is_inverse_of(&w[1]))
}

/// `|w|_S`: occurrences of letters (either sign) whose symbol lies in `s`.
pub fn occurrence_count(w: &Word, s: &[Symbol]) -> usize {
    w.letters.iter().filter(|l| s.contains(&l.symbol)).count()
}

/// True iff the cyclic reductions of `u` and `v` are rotation-equal.
pub fn is_conjugate(u: &Word, v: &Word) -> bool {
    let (cu, _) = u.cyclic_reduce();
    let (cv, _) = v.cyclic_reduce();
    cu == cv
}

/// A cyclically reduced word up to rotation.
#[derive(Clone, Eq)]
pub struct CyclicWord {
    rep: Word,
}

impl CyclicWord {
    /// Cyclically reduces an arbitrary word, dropping the conjugator.
    pub fn new(w: &Word) -> CyclicWord {
        w.cyclic_reduce().0
    }

    pub fn from_cyclically_reduced(rep: Word) -> CyclicWord {
        debug_assert!(rep.is_cyclically_reduced());
        CyclicWord { rep }
    }

    pub fn empty() -> CyclicWord {
        CyclicWord { rep: Word::empty() }
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    /// The stored linearization.
    pub fn rep(&self) -> &Word {
        &self.rep
    }

    pub fn rotated(&self, k: usize) -> CyclicWord {
        if self.rep.is_empty() {
            return self.clone();
        }
        let n = self.rep.len();
        let k = k % n;
        let mut letters = self.rep.letters()[k..].to_vec();
        letters.extend_from_slice(&self.rep.letters()[..k]);
        CyclicWord { rep: Word::from_reduced(letters) }
    }

    pub fn rotations(&self) -> Vec<Word> {
        if self.rep.is_empty() {
            return vec![Word::empty()];
        }
        (0..self.rep.len()).map(|k| self.rotated(k).rep.clone()).collect()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord { rep: self.rep.inverse() }
    }

    /// Lexicographically least rotation under the fixed letter order.
    pub fn canonical(&self) -> Word {
        self.rotations().into_iter().min().unwrap()
    }

    /// Least among rotations of the word and of its inverse.
    pub fn canonical_up_to_inversion(&self) -> Word {
        let a = self.canonical();
        let b = self.inverse().canonical();
        a.min(b)
    }

    pub fn count_symbol(&self, symbol: &Symbol) -> usize {
        self.rep.count_symbol(symbol)
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        if self.rep.len() != other.rep.len() {
            return false;
        }
        if self.rep.is_empty() {
            return true;
        }
        (0..self.rep.len()).any(|k| self.rotated(k).rep == other.rep)
    }
}

impl std::hash::Hash for CyclicWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rep)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Classifies a bare identifier per the text grammar: `x`/`y`/`z` with an
/// optional index are variables, `c` with a mandatory index is a formal
/// coefficient, any other lowercase identifier is a constant.
pub fn classify_name(name: &str) -> Result<Sort, ParseError> {
    let mut chars = name.chars();
    let first = chars.next().ok_or_else(|| ParseError::BadToken(name.into()))?;
    if !first.is_ascii_lowercase() {
        return Err(ParseError::BadToken(name.into()));
    }
    if !name.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_') {
        return Err(ParseError::BadToken(name.into()));
    }
    let rest: String = chars.collect();
    let indexed = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    match first {
        'x' | 'y' | 'z' if indexed(&rest) => Ok(Sort::Variable),
        'c' if !rest.is_empty() && indexed(&rest) => Ok(Sort::Coefficient),
        _ => Ok(Sort::Constant),
    }
}

/// Parses one token of the word grammar (`a`, `x1`, `c2^-1`, ...).
pub fn parse_letter(token: &str) -> Result<Letter, ParseError> {
    let (base, sign) = match token.strip_suffix("^-1") {
        Some(base) => (base, Sign::Minus),
        None => (token, Sign::Plus),
    };
    let sort = classify_name(base)?;
    Ok(Letter::new(Symbol::new(sort, base), sign))
}

/// Parses a whitespace-separated word. `1` denotes the empty word.
pub fn parse_word(input: &str) -> Result<Word, ParseError> {
    let mut letters = Vec::new();
    for token in input.split_whitespace() {
        if token == "1" {
            continue;
        }
        letters.push(parse_letter(token)?);
    }
    Ok(Word::new(letters))
}
