//! Letters, words and cyclic words over the surface-group alphabet
//! `{a_k, b_k, a_k^-1, b_k^-1 : 1 <= k <= g}`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
}

/// One generator symbol with an inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub family: Family,
    pub index: u32,
    pub inverted: bool,
}

impl Letter {
    pub const fn new(family: Family, index: u32, inverted: bool) -> Self {
        Letter {
            family,
            index,
            inverted,
        }
    }

    pub const fn a(index: u32) -> Self {
        Letter::new(Family::A, index, false)
    }

    pub const fn b(index: u32) -> Self {
        Letter::new(Family::B, index, false)
    }

    pub const fn inverse(self) -> Self {
        Letter {
            inverted: !self.inverted,
            ..self
        }
    }

    /// `a_k` or `b_k`, as opposed to their inverses.
    pub const fn is_positive(self) -> bool {
        !self.inverted
    }

    /// Position in the boundary order
    /// `a_1 < b_1 < a_1^-1 < b_1^-1 < a_2 < ...`.
    pub const fn rank(self) -> u32 {
        let fam = match self.family {
            Family::A => 0,
            Family::B => 1,
        };
        let inv = if self.inverted { 2 } else { 0 };
        4 * (self.index - 1) + inv + fam
    }

    /// Inverse of [`Letter::rank`].
    pub fn from_rank(rank: u32) -> Self {
        let family = if rank.is_multiple_of(2) { Family::A } else { Family::B };
        Letter::new(family, rank / 4 + 1, rank % 4 >= 2)
    }

    /// The `4g` letters of the alphabet in rank order.
    pub fn alphabet(genus: u32) -> Vec<Letter> {
        (0..4 * genus).map(Letter::from_rank).collect()
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::A => 'a',
            Family::B => 'b',
        };
        write!(f, "{c}{}", self.index)?;
        if self.inverted {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

fn check_genus(genus: u32) -> Result<()> {
    if genus == 0 {
        Err(Error::InvalidGenus(genus))
    } else {
        Ok(())
    }
}

fn format_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    for (n, x) in letters.iter().enumerate() {
        if n > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A finite, not necessarily reduced, sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    genus: u32,
}

impl Word {
    pub fn new(letters: Vec<Letter>, genus: u32) -> Result<Self> {
        check_genus(genus)?;
        for x in &letters {
            if x.index == 0 || x.index > genus {
                return Err(Error::IndexOutOfRange {
                    index: x.index,
                    genus,
                });
            }
        }
        Ok(Word { letters, genus })
    }

    pub fn empty(genus: u32) -> Result<Self> {
        Word::new(Vec::new(), genus)
    }

    /// Letters are validated by the caller.
    pub(crate) fn from_parts(letters: Vec<Letter>, genus: u32) -> Self {
        debug_assert!(letters.iter().all(|x| x.index >= 1 && x.index <= genus));
        Word { letters, genus }
    }

    /// Parses `a1 B1 a2^-1 ...`. Tokens may be separated by whitespace,
    /// commas, or simply juxtaposed. No reduction is performed.
    pub fn parse(text: &str, genus: u32) -> Result<Self> {
        check_genus(genus)?;
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut pos = 0;
        // a comma must be followed by a token
        let mut pending_comma: Option<usize> = None;

        while pos < bytes.len() {
            let c = bytes[pos];
            if c.is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            if c == b',' {
                if letters.is_empty() || pending_comma.is_some() {
                    return Err(Error::EmptyToken { offset: pos });
                }
                pending_comma = Some(pos);
                pos += 1;
                continue;
            }
            let start = pos;
            let (family, upper) = match c {
                b'a' => (Family::A, false),
                b'b' => (Family::B, false),
                b'A' => (Family::A, true),
                b'B' => (Family::B, true),
                _ => return Err(unknown(text, start)),
            };
            pos += 1;
            let digits = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits {
                return Err(unknown(text, start));
            }
            let index: u32 = text[digits..pos]
                .parse()
                .map_err(|_| unknown(text, start))?;
            let mut inverted = upper;
            if text[pos..].starts_with("^-1") {
                if upper {
                    return Err(unknown(text, start));
                }
                inverted = true;
                pos += 3;
            }
            if index == 0 || index > genus {
                return Err(Error::IndexOutOfRange { index, genus });
            }
            letters.push(Letter::new(family, index, inverted));
            pending_comma = None;
        }
        if let Some(offset) = pending_comma {
            return Err(Error::EmptyToken { offset });
        }
        Ok(Word { letters, genus })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based, cyclic: `letter(p + 1) == letter(1)`.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[(i + self.len() - 1) % self.len()]
    }

    pub fn same_genus(&self, other: &Word) -> Result<()> {
        if self.genus == other.genus {
            Ok(())
        } else {
            Err(Error::GenusMismatch(self.genus, other.genus))
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_genus(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_parts(letters, self.genus))
    }

    /// Free-group inverse.
    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|x| x.inverse()).collect();
        Word::from_parts(letters, self.genus)
    }

    /// `x^-1 w x`.
    pub fn conjugate(&self, x: Letter) -> Result<Word> {
        if x.index == 0 || x.index > self.genus {
            return Err(Error::IndexOutOfRange {
                index: x.index,
                genus: self.genus,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + 2);
        letters.push(x.inverse());
        letters.extend_from_slice(&self.letters);
        letters.push(x);
        Ok(Word::from_parts(letters, self.genus))
    }

    /// Inserts the cancelling pair `x x^-1` before the 0-based position `at`.
    pub fn insert_cancelling_pair(&self, at: usize, x: Letter) -> Result<Word> {
        if x.index == 0 || x.index > self.genus {
            return Err(Error::IndexOutOfRange {
                index: x.index,
                genus: self.genus,
            });
        }
        let at = at.min(self.len());
        let mut letters = self.letters.clone();
        letters.splice(at..at, [x, x.inverse()]);
        Ok(Word::from_parts(letters, self.genus))
    }

    /// Free reduction.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &x in &self.letters {
            if out.last() == Some(&x.inverse()) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word::from_parts(out, self.genus)
    }

    /// Free reduction followed by stripping inverse pairs across the wrap.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.reduce();
        let letters = &reduced.letters;
        let (mut lo, mut hi) = (0, letters.len());
        while hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word::from_parts(letters[lo..hi].to_vec(), self.genus)
    }

    /// `nu^k`: moves the first `k` letters (mod length) to the end.
    pub fn rotate(&self, k: i64) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let k = k.rem_euclid(self.len() as i64) as usize;
        let mut letters = self.letters.clone();
        letters.rotate_left(k);
        Word::from_parts(letters, self.genus)
    }

    /// The cyclic segment `x_s ... x_t`, inclusive, indices 1-based mod length.
    /// Wraps through the end when `s > t`.
    pub fn subword(&self, s: i64, t: i64) -> Result<Word> {
        let p = self.len() as i64;
        if p == 0 {
            return Err(Error::EmptyWord);
        }
        let s = (s - 1).rem_euclid(p) as usize;
        let t = (t - 1).rem_euclid(p) as usize;
        let letters = if s <= t {
            self.letters[s..=t].to_vec()
        } else {
            let mut v = self.letters[s..].to_vec();
            v.extend_from_slice(&self.letters[..=t]);
            v
        };
        Ok(Word::from_parts(letters, self.genus))
    }

    pub fn canonical(&self) -> CyclicWord {
        CyclicWord::from_word(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_letters(f, &self.letters)
    }
}

fn unknown(text: &str, start: usize) -> Error {
    let token: String = text[start..]
        .chars()
        .take_while(|c| !c.is_whitespace() && *c != ',')
        .collect();
    Error::UnknownToken {
        token,
        offset: start,
    }
}

/// Canonical representative of a conjugacy class: cyclically reduced and
/// rotated to the lexicographically least rotation under the letter rank.
///
/// The empty cyclic word is the trivial class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<Letter>,
    genus: u32,
}

impl CyclicWord {
    pub fn from_word(w: &Word) -> Self {
        let mut letters = w.cyclic_reduce().letters;
        let n = letters.len();
        if n > 1 {
            let best = (1..n).fold(0, |best, r| {
                let cand = letters[r..].iter().chain(&letters[..r]);
                let cur = letters[best..].iter().chain(&letters[..best]);
                if cand.cmp(cur) == Ordering::Less {
                    r
                } else {
                    best
                }
            });
            letters.rotate_left(best);
        }
        CyclicWord {
            letters,
            genus: w.genus,
        }
    }

    pub fn trivial(genus: u32) -> Self {
        CyclicWord {
            letters: Vec::new(),
            genus,
        }
    }

    pub fn parse(text: &str, genus: u32) -> Result<Self> {
        Ok(Word::parse(text, genus)?.canonical())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// The canonical letters as a plain word.
    pub fn to_word(&self) -> Word {
        Word::from_parts(self.letters.clone(), self.genus)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_letters(f, &self.letters)
    }
}
