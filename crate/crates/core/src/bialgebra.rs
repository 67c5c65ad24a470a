//! The cobracket and bracket on cyclic words, computed from linking numbers
//! of partitions, together with checkers for the Lie bialgebra identities.
//!
//! Raw values of [`cobracket_word`] live in the tensor square of the full
//! module; everything else about the cobracket is reported modulo the trivial
//! class. Bracket values keep the trivial class.

use std::collections::BTreeMap;

use crate::diagram::{lk_pair, lk_self};
use crate::error::Result;
use crate::lincomb::{LinComb, TensorComb};
use crate::word::{CyclicWord, Letter, Word};

/// Sum over partition pairs `i < j` of
/// `lk(i, j) * (|w_{i+1,j}| ⊗ |w_{j+1,i}| - |w_{j+1,i}| ⊗ |w_{i+1,j}|)`.
///
/// The input is not reduced; only the output factors are canonicalized.
/// Words of length at most 1 give zero.
pub fn cobracket_word(w: &Word) -> TensorComb {
    let mut out = TensorComb::zero(w.genus());
    let p = w.len();
    if p <= 1 {
        return out;
    }
    for i in 1..p {
        for j in i + 1..=p {
            let lk = lk_self(w, i, j).expect("indices in range");
            if lk == 0 {
                continue;
            }
            let inner = w
                .subword(i as i64 + 1, j as i64)
                .expect("nonempty")
                .canonical();
            let outer = w
                .subword(j as i64 + 1, i as i64)
                .expect("nonempty")
                .canonical();
            out.add_wedge(inner, outer, lk);
        }
    }
    out
}

/// Linear extension of the cobracket, modulo the trivial class. Each basis
/// element is evaluated on its canonical representative.
pub fn cobracket(x: &LinComb) -> TensorComb {
    let mut out = TensorComb::zero(x.genus());
    for (w, c) in x.iter() {
        out.add_scaled(&cobracket_word(&w.to_word()).quotient_by_trivial(), c)
            .expect("same genus");
    }
    out
}

/// Sum over all `i`, `j` of `lk(phi_i v, phi_j w) * |nu^i(v) nu^j(w)|`.
pub fn bracket_words(v: &Word, w: &Word) -> Result<LinComb> {
    v.same_genus(w)?;
    let mut out = LinComb::zero(v.genus());
    for i in 1..=v.len() {
        let vi = v.rotate(i as i64);
        for j in 1..=w.len() {
            let lk = lk_pair(v, i, w, j)?;
            if lk != 0 {
                let term = vi.concat(&w.rotate(j as i64))?.canonical();
                out.add_term(term, lk);
            }
        }
    }
    Ok(out)
}

/// Bilinear extension of [`bracket_words`].
pub fn bracket(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    x.same_genus(y.genus())?;
    let mut out = LinComb::zero(x.genus());
    for (u, c) in x.iter() {
        let u = u.to_word();
        for (v, d) in y.iter() {
            out.add_scaled(&bracket_words(&u, &v.to_word())?, c * d)?;
        }
    }
    Ok(out)
}

/// `a · t`, the adjoint action on the tensor square, modulo the trivial
/// class: `a · (u ⊗ z) = <a, u> ⊗ z + u ⊗ <a, z>`.
pub fn act(a: &LinComb, t: &TensorComb) -> Result<TensorComb> {
    a.same_genus(t.genus())?;
    let mut out = TensorComb::zero(a.genus());
    for (u, z, c) in t.iter() {
        let au = bracket(a, &LinComb::basis(u.clone()))?;
        for (s, d) in au.iter() {
            out.add_term(s.clone(), z.clone(), c * d);
        }
        let az = bracket(a, &LinComb::basis(z.clone()))?;
        for (s, d) in az.iter() {
            out.add_term(u.clone(), s.clone(), c * d);
        }
    }
    Ok(out.quotient_by_trivial())
}

fn quotiented(w: &Word) -> TensorComb {
    cobracket_word(w).quotient_by_trivial()
}

pub fn check_rotation_invariance(w: &Word) -> bool {
    check_rotation_invariance_by(w, 1)
}

/// Compares the cobracket of `nu^k(w)` with that of `w`.
pub fn check_rotation_invariance_by(w: &Word, k: i64) -> bool {
    quotiented(&w.rotate(k)) == quotiented(w)
}

/// Compares the cobracket of `x^-1 w x` with that of `w`.
pub fn check_conjugation_invariance(w: &Word, x: Letter) -> Result<bool> {
    Ok(quotiented(&w.conjugate(x)?) == quotiented(w))
}

/// Compares the cobracket after inserting `x x^-1` at position `at`.
pub fn check_insertion_invariance(w: &Word, at: usize, x: Letter) -> Result<bool> {
    Ok(quotiented(&w.insert_cancelling_pair(at, x)?) == quotiented(w))
}

/// `<v, w>` is unchanged when either argument is rotated.
pub fn check_bracket_rotation_invariance(v: &Word, w: &Word, kv: i64, kw: i64) -> Result<bool> {
    let base = bracket_words(v, w)?;
    Ok(bracket_words(&v.rotate(kv), w)? == base && bracket_words(v, &w.rotate(kw))? == base)
}

/// `<v, w>` is unchanged when either argument is conjugated.
pub fn check_bracket_conjugation_invariance(v: &Word, w: &Word, x: Letter) -> Result<bool> {
    let base = bracket_words(v, w)?;
    Ok(bracket_words(&v.conjugate(x)?, w)? == base && bracket_words(v, &w.conjugate(x)?)? == base)
}

/// `<v, w>` is unchanged when a cancelling pair is inserted into either argument.
pub fn check_bracket_insertion_invariance(
    v: &Word,
    w: &Word,
    at: usize,
    x: Letter,
) -> Result<bool> {
    let base = bracket_words(v, w)?;
    Ok(bracket_words(&v.insert_cancelling_pair(at, x)?, w)? == base
        && bracket_words(v, &w.insert_cancelling_pair(at, x)?)? == base)
}

/// `<v, w> + <w, v> = 0`.
pub fn check_antisymmetry(v: &Word, w: &Word) -> Result<bool> {
    let mut sum = bracket_words(v, w)?;
    sum.add_scaled(&bracket_words(w, v)?, 1)?;
    Ok(sum.is_zero())
}

/// `<<u, v>, w> + <<v, w>, u> + <<w, u>, v> = 0`.
pub fn check_jacobi(u: &Word, v: &Word, w: &Word) -> Result<bool> {
    let (u, v, w) = (
        LinComb::from_word(u),
        LinComb::from_word(v),
        LinComb::from_word(w),
    );
    let mut sum = bracket(&bracket(&u, &v)?, &w)?;
    sum.add_scaled(&bracket(&bracket(&v, &w)?, &u)?, 1)?;
    sum.add_scaled(&bracket(&bracket(&w, &u)?, &v)?, 1)?;
    Ok(sum.is_zero())
}

type Tensor3 = BTreeMap<(CyclicWord, CyclicWord, CyclicWord), i64>;

/// `(id + rho + rho^2)((delta ⊗ id)(delta(w)))`, with `rho` the cyclic
/// shift of tensor factors. Zero for a Lie cobracket.
pub fn cojacobi_defect(w: &Word) -> Tensor3 {
    let mut raw = Tensor3::new();
    for (u, z, c) in cobracket_word(w).quotient_by_trivial().iter() {
        for (s, t, d) in cobracket(&LinComb::basis(u.clone())).iter() {
            *raw.entry((s.clone(), t.clone(), z.clone())).or_default() += c * d;
        }
    }
    let mut out = Tensor3::new();
    for ((a, b, c), k) in raw {
        *out.entry((a.clone(), b.clone(), c.clone())).or_default() += k;
        *out.entry((c.clone(), a.clone(), b.clone())).or_default() += k;
        *out.entry((b, c, a)).or_default() += k;
    }
    out.retain(|_, k| *k != 0);
    out
}

pub fn check_cojacobi(w: &Word) -> bool {
    cojacobi_defect(w).is_empty()
}

/// `delta(<v, w>) = v · delta(w) - w · delta(v)`, all modulo the trivial class.
pub fn check_compatibility(v: &Word, w: &Word) -> Result<bool> {
    let (x, y) = (LinComb::from_word(v), LinComb::from_word(w));
    let lhs = cobracket(&bracket(&x, &y)?);
    let mut rhs = act(&x, &cobracket(&y))?;
    rhs.add_scaled(&act(&y, &cobracket(&x))?, -1)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn w(s: &str, g: u32) -> Word {
        Word::parse(s, g).unwrap()
    }

    fn cw(s: &str, g: u32) -> CyclicWord {
        CyclicWord::parse(s, g).unwrap()
    }

    #[test]
    fn cobracket_short_words_vanish() {
        assert!(cobracket_word(&w("", 1)).is_zero());
        assert!(cobracket_word(&w("a1", 1)).is_zero());
        assert!(cobracket_word(&w("a1 a1", 1)).is_zero());
        for n in 1..=4 {
            let word = Word::new(vec![Letter::a(1); n], 1).unwrap();
            assert!(cobracket_word(&word).quotient_by_trivial().is_zero());
        }
    }

    #[test]
    fn cobracket_is_antisymmetric() {
        let d = cobracket_word(&w("a1 B1 a2 a1", 2));
        assert!(d.is_antisymmetric());
        assert!(d.quotient_by_trivial().is_antisymmetric());
    }

    #[test]
    fn bracket_of_generators() {
        let b = bracket_words(&w("a1", 1), &w("b1", 1)).unwrap();
        let mut expected = LinComb::zero(1);
        expected.add_term(cw("a1 b1", 1), 1);
        assert_eq!(b, expected);
        assert_eq!(b.to_string(), "+1·[a1 b1]");
        assert!(bracket_words(&w("a1", 1), &w("a1", 1)).unwrap().is_zero());
        assert!(bracket_words(&w("", 1), &w("a1", 1)).unwrap().is_zero());
    }

    #[test]
    fn bracket_genus_mismatch() {
        assert_eq!(
            bracket_words(&w("a1", 1), &w("a1", 2)),
            Err(Error::GenusMismatch(1, 2))
        );
    }

    #[test]
    fn linear_extensions() {
        let y = LinComb::from_word(&w("a1 b1", 1));
        assert!(bracket(&LinComb::zero(1), &y).unwrap().is_zero());
        let word = w("a1 B1 a2 a1", 2);
        let twice = LinComb::from_word(&word).scaled(2);
        assert_eq!(cobracket(&twice), quotiented(&word).scaled(2));
    }

    #[test]
    fn sample_word_invariances() {
        let word = w("a1 B1 a2 a1", 2);
        assert!(check_rotation_invariance(&word));
        assert!(check_conjugation_invariance(&word, Letter::a(2)).unwrap());
        assert!(check_rotation_invariance(&w("", 1)));
        assert!(check_conjugation_invariance(&w("", 1), Letter::b(1)).unwrap());
    }

    #[test]
    fn identities_on_small_words() {
        let words = ["a1", "b1", "a1 b1", "A2 b1"].map(|s| w(s, 2));
        for u in &words {
            assert!(check_cojacobi(u));
            for v in &words {
                assert!(check_antisymmetry(u, v).unwrap());
                assert!(check_compatibility(u, v).unwrap());
                for x in &words {
                    assert!(check_jacobi(u, v, x).unwrap());
                }
            }
        }
        assert!(check_jacobi(&words[2], &words[2], &words[3]).unwrap());
    }
}
