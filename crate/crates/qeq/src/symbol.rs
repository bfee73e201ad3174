//! Three-sorted alphabet: constants, variables, formal coefficients.

use std::fmt;
use std::sync::Arc;

/// Sort of a symbol. The sort is part of the symbol's identity and never
/// changes; substitutions only ever rewrite variables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sort {
    Constant,
    Variable,
    Coefficient,
}

/// An interned name with a sort tag. Names are unique within a sort.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    sort: Sort,
    name: Arc<str>,
}

impl Symbol {
    pub fn new(sort: Sort, name: &str) -> Self {
        debug_assert!(!name.is_empty(), "symbol name must be nonempty");
        Symbol { sort, name: Arc::from(name) }
    }

    pub fn constant(name: &str) -> Self {
        Symbol::new(Sort::Constant, name)
    }

    pub fn variable(name: &str) -> Self {
        Symbol::new(Sort::Variable, name)
    }

    pub fn coefficient(name: &str) -> Self {
        Symbol::new(Sort::Coefficient, name)
    }

    pub fn sort(&self) -> Sort {
        self.sort
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_variable(&self) -> bool {
        self.sort == Sort::Variable
    }

    pub fn is_constant(&self) -> bool {
        self.sort == Sort::Constant
    }

    pub fn is_coefficient(&self) -> bool {
        self.sort == Sort::Coefficient
    }

    /// Positive letter on this symbol.
    pub fn pos(&self) -> Letter {
        Letter { symbol: self.clone(), sign: Sign::Plus }
    }

    /// Negative letter on this symbol.
    pub fn neg(&self) -> Letter {
        Letter { symbol: self.clone(), sign: Sign::Minus }
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort
            .cmp(&other.sort)
            .then_with(|| self.name.as_ref().cmp(other.name.as_ref()))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A signed symbol, the atom of a word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub symbol: Symbol,
    pub sign: Sign,
}

impl Letter {
    pub fn new(symbol: Symbol, sign: Sign) -> Self {
        Letter { symbol, sign }
    }

    pub fn inverse(&self) -> Letter {
        Letter { symbol: self.symbol.clone(), sign: self.sign.flip() }
    }

    pub fn is_inverse_of(&self, other: &Letter) -> bool {
        self.symbol == other.symbol && self.sign != other.sign
    }

    pub fn sort(&self) -> Sort {
        self.symbol.sort()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.symbol),
            Sign::Minus => write!(f, "{}^-1", self.symbol),
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
