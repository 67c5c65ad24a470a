//! Integer linear combinations of cyclic words and of ordered pairs of
//! cyclic words. Terms are keyed by canonical representative and zero
//! coefficients are never stored, so equality is plain map equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Word};

fn bump<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) {
    if c == 0 {
        return;
    }
    let entry = map.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

fn bracketed(w: &CyclicWord) -> String {
    if w.is_trivial() {
        "[1]".to_string()
    } else {
        format!("[{w}]")
    }
}

/// An element of the free abelian group on cyclic words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb {
    genus: u32,
    terms: BTreeMap<CyclicWord, i64>,
}

impl LinComb {
    pub fn zero(genus: u32) -> Self {
        LinComb {
            genus,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: CyclicWord) -> Self {
        let mut x = LinComb::zero(w.genus());
        x.add_term(w, 1);
        x
    }

    /// The class of `w` with coefficient 1.
    pub fn from_word(w: &Word) -> Self {
        LinComb::basis(w.canonical())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn same_genus(&self, genus: u32) -> Result<()> {
        if self.genus == genus {
            Ok(())
        } else {
            Err(Error::GenusMismatch(self.genus, genus))
        }
    }

    pub fn add_term(&mut self, w: CyclicWord, c: i64) {
        debug_assert_eq!(w.genus(), self.genus);
        bump(&mut self.terms, w, c);
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &LinComb, c: i64) -> Result<()> {
        self.same_genus(other.genus)?;
        for (w, d) in &other.terms {
            bump(&mut self.terms, w.clone(), c * d);
        }
        Ok(())
    }

    pub fn scaled(&self, c: i64) -> LinComb {
        let mut out = LinComb::zero(self.genus);
        for (w, d) in &self.terms {
            bump(&mut out.terms, w.clone(), c * d);
        }
        out
    }

    pub fn coeff(&self, w: &CyclicWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending word order.
    pub fn iter(&self) -> impl Iterator<Item = (&CyclicWord, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    /// Image in the quotient by the trivial class.
    pub fn without_trivial(&self) -> LinComb {
        let mut out = self.clone();
        out.terms.retain(|w, _| !w.is_trivial());
        out
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(w, c)| format!("{c:+}·{}", bracketed(w)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An element of the tensor square, as a map on ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorComb {
    genus: u32,
    terms: BTreeMap<(CyclicWord, CyclicWord), i64>,
}

impl TensorComb {
    pub fn zero(genus: u32) -> Self {
        TensorComb {
            genus,
            terms: BTreeMap::new(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn add_term(&mut self, left: CyclicWord, right: CyclicWord, c: i64) {
        debug_assert_eq!(left.genus(), self.genus);
        debug_assert_eq!(right.genus(), self.genus);
        bump(&mut self.terms, (left, right), c);
    }

    /// `c * (left ⊗ right - right ⊗ left)`.
    pub fn add_wedge(&mut self, left: CyclicWord, right: CyclicWord, c: i64) {
        self.add_term(right.clone(), left.clone(), -c);
        self.add_term(left, right, c);
    }

    pub fn add_scaled(&mut self, other: &TensorComb, c: i64) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        for (k, d) in &other.terms {
            bump(&mut self.terms, k.clone(), c * d);
        }
        Ok(())
    }

    pub fn scaled(&self, c: i64) -> TensorComb {
        let mut out = TensorComb::zero(self.genus);
        out.add_scaled(self, c).expect("same genus");
        out
    }

    pub fn coeff(&self, left: &CyclicWord, right: &CyclicWord) -> i64 {
        self.terms
            .get(&(left.clone(), right.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CyclicWord, &CyclicWord, i64)> {
        self.terms.iter().map(|((l, r), c)| (l, r, *c))
    }

    /// `u ⊗ v -> v ⊗ u`.
    pub fn swap(&self) -> TensorComb {
        let terms = self
            .terms
            .iter()
            .map(|((l, r), c)| ((r.clone(), l.clone()), *c))
            .collect();
        TensorComb {
            genus: self.genus,
            terms,
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.terms.iter().all(|((l, r), c)| self.coeff(r, l) == -c)
    }

    /// Drops every term with a trivial factor.
    pub fn quotient_by_trivial(&self) -> TensorComb {
        let mut out = self.clone();
        out.terms
            .retain(|(l, r), _| !l.is_trivial() && !r.is_trivial());
        out
    }

    /// Each antisymmetric pair once, as `(c, u, v)` with `u < v`, standing for
    /// `c * (u ⊗ v - v ⊗ u)`.
    pub fn wedge_terms(&self) -> Result<Vec<(i64, &CyclicWord, &CyclicWord)>> {
        if !self.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        Ok(self
            .iter()
            .filter(|(l, r, _)| l < r)
            .map(|(l, r, c)| (c, l, r))
            .collect())
    }

    /// Text form with `∧`; fails unless antisymmetric.
    pub fn wedge_string(&self) -> Result<String> {
        let terms = self.wedge_terms()?;
        if terms.is_empty() {
            return Ok("0".into());
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(c, l, r)| format!("{c:+}·{}∧{}", bracketed(l), bracketed(r)))
            .collect();
        Ok(parts.join(" + "))
    }
}

impl fmt::Display for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(l, r, c)| format!("{c:+}·{}⊗{}", bracketed(l), bracketed(r)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s, 2).unwrap()
    }

    #[test]
    fn collects_and_prunes() {
        let mut x = LinComb::zero(2);
        x.add_term(cw("a1 b1"), 2);
        x.add_term(cw("b1 a1"), -2);
        assert!(x.is_zero());
        x.add_term(cw("b1"), -1);
        x.add_term(cw(""), 3);
        x.add_term(cw("a1 b1"), 1);
        assert_eq!(x.to_string(), "+3·[1] + +1·[a1 b1] + -1·[b1]");
        assert_eq!(x.without_trivial().len(), 2);
        assert_eq!(x.scaled(0), LinComb::zero(2));
        assert_eq!(LinComb::zero(2).to_string(), "0");
    }

    #[test]
    fn genus_checked() {
        let mut x = LinComb::zero(1);
        assert_eq!(
            x.add_scaled(&LinComb::zero(2), 1),
            Err(Error::GenusMismatch(1, 2))
        );
    }

    #[test]
    fn tensor_quotient() {
        let mut t = TensorComb::zero(2);
        t.add_wedge(cw("a1"), cw(""), 1);
        assert_eq!(t.len(), 2);
        assert!(t.quotient_by_trivial().is_zero());

        let mut u = TensorComb::zero(2);
        u.add_wedge(cw("a1"), cw("b1"), 1);
        assert_eq!(u.quotient_by_trivial(), u);
        assert!(TensorComb::zero(2).quotient_by_trivial().is_zero());
    }

    #[test]
    fn wedge_form() {
        let mut t = TensorComb::zero(2);
        t.add_wedge(cw("b1"), cw("a1"), 2);
        assert!(t.is_antisymmetric());
        assert_eq!(t.swap(), t.scaled(-1));
        assert_eq!(t.wedge_string().unwrap(), "-2·[a1]∧[b1]");
        assert_eq!(t.to_string(), "-2·[a1]⊗[b1] + +2·[b1]⊗[a1]");
        t.add_term(cw("a1"), cw("a1"), 1);
        assert_eq!(t.wedge_terms().unwrap_err(), Error::NotAntisymmetric);
    }
}
