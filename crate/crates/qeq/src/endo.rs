//! Substitution homomorphisms: coefficient maps, endomorphisms fixing
//! constants and coefficients, elementary automorphisms and their products.
//!
//! Endomorphisms act on the right, matching exponent notation: composing
//! `e1` then `e2` gives `w^(e1 e2) = (w^e1)^e2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{QeqError, Result};
use crate::symbol::{Letter, Sign, Symbol};
use crate::word::{free_reduce, Word};

/// Assignment of constant words to formal coefficient symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoefficientMap {
    map: BTreeMap<Symbol, Word>,
}

impl CoefficientMap {
    pub fn new() -> Self {
        CoefficientMap::default()
    }

    pub fn insert(&mut self, coeff: Symbol, image: Word) -> Result<()> {
        if !coeff.is_coefficient() {
            return Err(QeqError::Precondition(format!("`{coeff}` is not a coefficient symbol")));
        }
        if image.letters().iter().any(|l| !l.symbol.is_constant()) {
            return Err(QeqError::NonConstantImage(coeff));
        }
        self.map.insert(coeff, image);
        Ok(())
    }

    pub fn get(&self, coeff: &Symbol) -> Option<&Word> {
        self.map.get(coeff)
    }

    /// Replaces formal coefficients by their images and reduces.
    pub fn expand(&self, w: &Word) -> Result<Word> {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for l in w.letters() {
            if l.symbol.is_coefficient() {
                let image = self
                    .map
                    .get(&l.symbol)
                    .ok_or_else(|| QeqError::MissingCoefficient(l.symbol.clone()))?;
                match l.sign {
                    Sign::Plus => out.extend(image.letters().iter().cloned()),
                    Sign::Minus => out.extend(image.inverse().into_letters()),
                }
            } else {
                out.push(l.clone());
            }
        }
        Ok(free_reduce(out))
    }

    /// Total expanded length of the coefficient letters occurring in `w`,
    /// plus the constant letters of `w` itself: the quantity `c(Q)`.
    pub fn coefficient_length(&self, w: &Word) -> Result<usize> {
        let mut total = 0usize;
        for l in w.letters() {
            if l.symbol.is_coefficient() {
                let image = self
                    .map
                    .get(&l.symbol)
                    .ok_or_else(|| QeqError::MissingCoefficient(l.symbol.clone()))?;
                total += image.len();
            } else if l.symbol.is_constant() {
                total += 1;
            }
        }
        Ok(total)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &Word)> {
        self.map.iter()
    }
}

/// A finitely supported substitution of variables; constants and formal
/// coefficients are always fixed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Endomorphism {
    support: BTreeMap<Symbol, Word>,
}

impl Endomorphism {
    pub fn identity() -> Self {
        Endomorphism::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Symbol, Word)>>(pairs: I) -> Result<Self> {
        let mut support = BTreeMap::new();
        for (var, image) in pairs {
            if !var.is_variable() {
                return Err(QeqError::Precondition(format!("`{var}` is not a variable")));
            }
            if image.len() == 1 && image.letters()[0] == var.pos() {
                continue;
            }
            support.insert(var, image);
        }
        Ok(Endomorphism { support })
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Symbol, &Word)> {
        self.support.iter()
    }

    /// Image of a single variable.
    pub fn image(&self, var: &Symbol) -> Word {
        self.support.get(var).cloned().unwrap_or_else(|| Word::single(var.pos()))
    }

    /// Image of a signed letter, as a word.
    pub fn image_of_letter(&self, l: &Letter) -> Word {
        if !l.symbol.is_variable() {
            return Word::single(l.clone());
        }
        match self.support.get(&l.symbol) {
            None => Word::single(l.clone()),
            Some(w) => match l.sign {
                Sign::Plus => w.clone(),
                Sign::Minus => w.inverse(),
            },
        }
    }

    /// Substitutes and freely reduces.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for l in w.letters() {
            out.extend(self.image_of_letter(l).into_letters());
        }
        free_reduce(out)
    }

    /// Right-action composition: `apply(e1.compose(e2), w) = e2.apply(e1.apply(w))`.
    pub fn compose(&self, after: &Endomorphism) -> Endomorphism {
        let mut support = BTreeMap::new();
        let vars: BTreeSet<&Symbol> = self.support.keys().chain(after.support.keys()).collect();
        for var in vars {
            let image = after.apply(&self.image(var));
            if !(image.len() == 1 && image.letters()[0] == var.pos()) {
                support.insert(var.clone(), image);
            }
        }
        Endomorphism { support }
    }

    /// `max_x |x^e|` over the support (1 for the identity elsewhere).
    pub fn norm(&self) -> usize {
        self.support.values().map(Word::len).max().unwrap_or(1).max(1)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "(id)");
        }
        write!(f, "(")?;
        let mut first = true;
        for (v, w) in &self.support {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{v} -> {w}")?;
            first = false;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Elementary automorphism `x^e -> W x^e` where `W` omits `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementaryAuto {
    target: Letter,
    prefix: Word,
}

impl ElementaryAuto {
    pub fn new(target: Letter, prefix: Word) -> Result<Self> {
        if !target.symbol.is_variable() {
            return Err(QeqError::Precondition(format!(
                "elementary target `{target}` is not a variable"
            )));
        }
        if prefix.contains_symbol(&target.symbol) {
            return Err(QeqError::Precondition(format!(
                "prefix `{prefix}` mentions the target variable `{}`",
                target.symbol
            )));
        }
        Ok(ElementaryAuto { target, prefix })
    }

    pub fn target(&self) -> &Letter {
        &self.target
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    /// The variable changed by this automorphism.
    pub fn changed(&self) -> &Symbol {
        &self.target.symbol
    }

    /// Variables occurring in the prefix.
    pub fn touched(&self) -> Vec<Symbol> {
        self.prefix.variables()
    }

    /// Inverse: `x^e -> W^-1 x^e`.
    pub fn inverse(&self) -> ElementaryAuto {
        ElementaryAuto { target: self.target.clone(), prefix: self.prefix.inverse() }
    }

    pub fn to_endomorphism(&self) -> Endomorphism {
        let image = match self.target.sign {
            // x -> W x
            Sign::Plus => self.prefix.append(&Word::single(self.target.clone())),
            // x^-1 -> W x^-1, i.e. x -> x W^-1
            Sign::Minus => Word::single(self.target.inverse()).append(&self.prefix.inverse()),
        };
        Endomorphism::from_pairs([(self.target.symbol.clone(), image)]).unwrap()
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.to_endomorphism().apply(w)
    }
}

impl fmt::Display for ElementaryAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -> {} {})", self.target, self.prefix, self.target)
    }
}

impl fmt::Debug for ElementaryAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Triangularity {
    Triangular,
    ReverseTriangular,
    Both,
    None,
}

/// Ordered product of elementary automorphisms, applied left to right.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ElementaryProduct {
    factors: Vec<ElementaryAuto>,
}

impl ElementaryProduct {
    pub fn identity() -> Self {
        ElementaryProduct::default()
    }

    pub fn new(factors: Vec<ElementaryAuto>) -> Self {
        ElementaryProduct { factors }
    }

    pub fn push(&mut self, factor: ElementaryAuto) {
        self.factors.push(factor);
    }

    pub fn factors(&self) -> &[ElementaryAuto] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Once a factor touches `x`, no later factor may change `x`.
    pub fn is_triangular(&self) -> bool {
        let mut touched: BTreeSet<Symbol> = BTreeSet::new();
        for f in &self.factors {
            if touched.contains(f.changed()) {
                return false;
            }
            touched.extend(f.touched());
        }
        true
    }

    /// Once a factor changes `x`, no later factor may touch `x`.
    pub fn is_reverse_triangular(&self) -> bool {
        let mut changed: BTreeSet<Symbol> = BTreeSet::new();
        for f in &self.factors {
            if f.touched().iter().any(|v| changed.contains(v)) {
                return false;
            }
            changed.insert(f.changed().clone());
        }
        true
    }

    pub fn triangularity(&self) -> Triangularity {
        match (self.is_triangular(), self.is_reverse_triangular()) {
            (true, true) => Triangularity::Both,
            (true, false) => Triangularity::Triangular,
            (false, true) => Triangularity::ReverseTriangular,
            (false, false) => Triangularity::None,
        }
    }

    /// Reverse the factor order and invert each prefix.
    pub fn inverse(&self) -> ElementaryProduct {
        ElementaryProduct {
            factors: self.factors.iter().rev().map(ElementaryAuto::inverse).collect(),
        }
    }

    pub fn to_endomorphism(&self) -> Endomorphism {
        let mut endo = Endomorphism::identity();
        for f in &self.factors {
            endo = endo.compose(&f.to_endomorphism());
        }
        endo
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut out = w.clone();
        for f in &self.factors {
            out = f.apply(&out);
        }
        out
    }
}

impl fmt::Debug for ElementaryProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.factors).finish()
    }
}

/// Variable renaming with optional sign flips; injective on its support.
/// Used as the final canonical-naming stage of a normalization.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Relabel {
    map: BTreeMap<Symbol, Letter>,
}

impl Relabel {
    pub fn identity() -> Self {
        Relabel::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Symbol, Letter)>>(pairs: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut targets = BTreeSet::new();
        for (var, image) in pairs {
            if !var.is_variable() || !image.symbol.is_variable() {
                return Err(QeqError::Precondition("relabel must map variables to variables".into()));
            }
            if !targets.insert(image.symbol.clone()) {
                return Err(QeqError::Precondition("relabel target repeated".into()));
            }
            map.insert(var, image);
        }
        Ok(Relabel { map })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(v, l)| l == &v.pos())
    }

    pub fn to_endomorphism(&self) -> Endomorphism {
        Endomorphism::from_pairs(
            self.map.iter().map(|(v, l)| (v.clone(), Word::single(l.clone()))),
        )
        .unwrap()
    }

    pub fn inverse(&self) -> Relabel {
        let map = self
            .map
            .iter()
            .map(|(v, l)| {
                (l.symbol.clone(), Letter::new(v.clone(), l.sign))
            })
            .collect();
        Relabel { map }
    }
}

/// First variable named `{stem}{k}` (k = 1, 2, ...) not in `used`.
pub fn fresh_variable(used: &BTreeSet<Symbol>, stem: &str) -> Symbol {
    for k in 1.. {
        let candidate = Symbol::variable(&format!("{stem}{k}"));
        if !used.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn var(s: &str) -> Symbol {
        Symbol::variable(s)
    }

    fn endo(pairs: &[(&str, &str)]) -> Endomorphism {
        Endomorphism::from_pairs(pairs.iter().map(|(v, img)| (var(v), w(img)))).unwrap()
    }

    #[test]
    fn gamma_identity_squares_from_commutator() {
        // gamma = (x -> x^2 y z x^-1, y -> x y z x^-1, z -> x z) carries
        // x^2 [y,z] to x^2 y^2 z^2, with [y,z] = y^-1 z^-1 y z.
        let gamma = endo(&[("x", "x x y z x^-1"), ("y", "x y z x^-1"), ("z", "x z")]);
        let source = w("x x y^-1 z^-1 y z");
        assert_eq!(gamma.apply(&source), w("x x y y z z"));
    }

    #[test]
    fn identity_and_trivial_cancellation() {
        let id = Endomorphism::identity();
        let u = w("x a y^-1");
        assert_eq!(id.apply(&u), u);
        let e = endo(&[("x", "a b")]);
        assert_eq!(e.apply(&w("x x^-1")), Word::empty());
    }

    #[test]
    fn composition_is_right_action() {
        let e1 = endo(&[("x", "x y")]);
        let e2 = endo(&[("y", "a")]);
        let c = e1.compose(&e2);
        for probe in [w("x"), w("y x^-1"), w("x y x")] {
            assert_eq!(c.apply(&probe), e2.apply(&e1.apply(&probe)));
        }
    }

    #[test]
    fn composition_associates() {
        let es = [
            endo(&[("x", "x y")]),
            endo(&[("y", "y^-1")]),
            endo(&[("x", "a x"), ("y", "y b")]),
        ];
        let left = es[0].compose(&es[1]).compose(&es[2]);
        let right = es[0].compose(&es[1].compose(&es[2]));
        for probe in [w("x y"), w("y^-1 x y x^-1"), w("x")] {
            assert_eq!(left.apply(&probe), right.apply(&probe));
        }
    }

    #[test]
    fn elementary_inverse_simple() {
        // inverse of (x -> a x) is (x -> a^-1 x)
        let f = ElementaryAuto::new(var("x").pos(), w("a")).unwrap();
        let g = f.inverse();
        assert_eq!(g.prefix(), &w("a^-1"));
        let round = f.to_endomorphism().compose(&g.to_endomorphism());
        assert!(round.is_identity());
    }

    #[test]
    fn negative_target_semantics() {
        // (x^-1 -> W x^-1) means x -> x W^-1
        let f = ElementaryAuto::new(var("x").neg(), w("a b")).unwrap();
        assert_eq!(f.to_endomorphism().image(&var("x")), w("x b^-1 a^-1"));
    }

    #[test]
    fn product_inversion_roundtrip() {
        let p = ElementaryProduct::new(vec![
            ElementaryAuto::new(var("x").pos(), w("y a")).unwrap(),
            ElementaryAuto::new(var("z").neg(), w("x b")).unwrap(),
            ElementaryAuto::new(var("y").pos(), w("b")).unwrap(),
        ]);
        let round = p.to_endomorphism().compose(&p.inverse().to_endomorphism());
        assert!(round.is_identity(), "got {round}");
    }

    #[test]
    fn triangularity_flags() {
        let tri = ElementaryProduct::new(vec![
            ElementaryAuto::new(var("x").pos(), w("y")).unwrap(),
            ElementaryAuto::new(var("z").pos(), w("y x")).unwrap(),
        ]);
        assert!(tri.is_triangular());
        assert!(!tri.is_reverse_triangular());

        let rev = ElementaryProduct::new(vec![
            ElementaryAuto::new(var("x").pos(), w("y")).unwrap(),
            ElementaryAuto::new(var("y").pos(), w("z")).unwrap(),
        ]);
        assert!(rev.is_reverse_triangular());
        assert!(!rev.is_triangular());
    }

    /// Lemma on triangular products: `x^phi` is the interleaved product of
    /// the prefixes of the factors changing `x`, so for `y != x` the count
    /// `|x^phi|_y` is bounded by the occurrences of `y` in those prefixes.
    #[test]
    fn triangular_bound_lemma() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let vars: Vec<Symbol> = ["x", "y", "z", "u"].iter().map(|s| var(s)).collect();
        for _ in 0..200 {
            // build a random triangular product
            let mut touched: BTreeSet<Symbol> = BTreeSet::new();
            let mut factors = Vec::new();
            for _ in 0..rng.gen_range(1..=8) {
                let candidates: Vec<&Symbol> =
                    vars.iter().filter(|v| !touched.contains(*v)).collect();
                if candidates.is_empty() {
                    break;
                }
                let target = candidates[rng.gen_range(0..candidates.len())].clone();
                let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
                let mut prefix = Vec::new();
                for _ in 0..rng.gen_range(0..=3) {
                    let s = vars[rng.gen_range(0..vars.len())].clone();
                    if s == target {
                        continue;
                    }
                    prefix.push(if rng.gen() { s.pos() } else { s.neg() });
                }
                let prefix = Word::new(prefix);
                touched.extend(prefix.variables());
                factors.push(ElementaryAuto::new(Letter::new(target, sign), prefix).unwrap());
            }
            let p = ElementaryProduct::new(factors);
            assert!(p.is_triangular());
            let endo = p.to_endomorphism();
            for x in &vars {
                let image = endo.image(x);
                for y in &vars {
                    if y == x {
                        continue;
                    }
                    let allowed: usize = p
                        .factors()
                        .iter()
                        .filter(|f| f.changed() == x)
                        .map(|f| f.prefix().count_symbol(y))
                        .sum();
                    assert!(
                        image.count_symbol(y) <= allowed,
                        "lemma violated: |{x}^phi|_{y} = {} > {allowed} for {p:?}",
                        image.count_symbol(y)
                    );
                }
            }
        }
    }

    #[test]
    fn coefficient_map_expansion() {
        let mut gamma = CoefficientMap::new();
        gamma.insert(Symbol::coefficient("c1"), w("a b")).unwrap();
        assert_eq!(gamma.expand(&w("c1")).unwrap(), w("a b"));
        let mut trivial = CoefficientMap::new();
        trivial.insert(Symbol::coefficient("c1"), Word::empty()).unwrap();
        assert_eq!(trivial.expand(&w("x c1 x^-1")).unwrap(), Word::empty());
        assert!(gamma.expand(&w("c2")).is_err());
        assert!(gamma
            .clone()
            .insert(Symbol::coefficient("c2"), w("x"))
            .is_err());
    }

    #[test]
    fn relabel_roundtrip_on_source_words() {
        let r = Relabel::from_pairs([(var("u"), var("x1").neg()), (var("v"), var("y1").pos())])
            .unwrap();
        let e = r.to_endomorphism().compose(&r.inverse().to_endomorphism());
        for probe in [w("u v"), w("v^-1 u v u^-1"), w("u a v")] {
            assert_eq!(e.apply(&probe), probe);
        }
    }
}
