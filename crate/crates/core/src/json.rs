//! JSON forms of linear combinations:
//! `{"terms":[{"coeff":1,"word":"a1 b1"}]}` and, for tensors,
//! `{"terms":[{"coeff":1,"left":"a1","right":"b1"}]}`. The trivial class is
//! the empty string. Terms appear in ascending word order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, TensorComb};
use crate::word::CyclicWord;

#[derive(Debug, Serialize, Deserialize)]
struct Term {
    coeff: i64,
    word: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct Terms<T> {
    terms: Vec<T>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PairTerm {
    coeff: i64,
    left: String,
    right: String,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Json(e.to_string())
}

fn render<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

impl LinComb {
    pub fn to_json(&self) -> String {
        let terms = self
            .iter()
            .map(|(w, c)| Term {
                coeff: c,
                word: w.to_string(),
            })
            .collect();
        render(&Terms { terms })
    }

    /// Words are re-canonicalized and repeated words are summed.
    pub fn from_json(text: &str, genus: u32) -> Result<LinComb> {
        let parsed: Terms<Term> = serde_json::from_str(text).map_err(json_err)?;
        let mut out = LinComb::zero(genus);
        for t in parsed.terms {
            out.add_term(CyclicWord::parse(&t.word, genus)?, t.coeff);
        }
        Ok(out)
    }
}

impl TensorComb {
    pub fn to_json(&self) -> String {
        let terms = self
            .iter()
            .map(|(l, r, c)| PairTerm {
                coeff: c,
                left: l.to_string(),
                right: r.to_string(),
            })
            .collect();
        render(&Terms { terms })
    }

    /// Same schema, listing each antisymmetric pair once with `left < right`.
    pub fn to_wedge_json(&self) -> Result<String> {
        let terms = self
            .wedge_terms()?
            .into_iter()
            .map(|(c, l, r)| PairTerm {
                coeff: c,
                left: l.to_string(),
                right: r.to_string(),
            })
            .collect();
        Ok(render(&Terms { terms }))
    }

    pub fn from_json(text: &str, genus: u32) -> Result<TensorComb> {
        let parsed: Terms<PairTerm> = serde_json::from_str(text).map_err(json_err)?;
        let mut out = TensorComb::zero(genus);
        for t in parsed.terms {
            out.add_term(
                CyclicWord::parse(&t.left, genus)?,
                CyclicWord::parse(&t.right, genus)?,
                t.coeff,
            );
        }
        Ok(out)
    }

    /// Reads the wedge listing back into the full tensor.
    pub fn from_wedge_json(text: &str, genus: u32) -> Result<TensorComb> {
        let parsed: Terms<PairTerm> = serde_json::from_str(text).map_err(json_err)?;
        let mut out = TensorComb::zero(genus);
        for t in parsed.terms {
            out.add_wedge(
                CyclicWord::parse(&t.left, genus)?,
                CyclicWord::parse(&t.right, genus)?,
                t.coeff,
            );
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{bracket_words, cobracket_word};
    use crate::word::Word;

    #[test]
    fn lincomb_schema() {
        let b = bracket_words(
            &Word::parse("a1", 1).unwrap(),
            &Word::parse("b1", 1).unwrap(),
        )
        .unwrap();
        assert_eq!(b.to_json(), r#"{"terms":[{"coeff":1,"word":"a1 b1"}]}"#);
        assert_eq!(LinComb::zero(1).to_json(), r#"{"terms":[]}"#);
        let mut t = LinComb::zero(1);
        t.add_term(CyclicWord::trivial(1), 2);
        assert_eq!(t.to_json(), r#"{"terms":[{"coeff":2,"word":""}]}"#);
        assert_eq!(LinComb::from_json(&t.to_json(), 1).unwrap(), t);
    }

    #[test]
    fn tensor_round_trip() {
        let d = cobracket_word(&Word::parse("a1 B1 a2 a1", 2).unwrap());
        assert_eq!(TensorComb::from_json(&d.to_json(), 2).unwrap(), d);
        let wedge = d.to_wedge_json().unwrap();
        assert_eq!(TensorComb::from_wedge_json(&wedge, 2).unwrap(), d);
    }

    #[test]
    fn bad_json() {
        assert!(matches!(LinComb::from_json("{", 1), Err(Error::Json(_))));
        assert!(matches!(
            LinComb::from_json(r#"{"terms":[{"coeff":1,"word":"c1"}]}"#, 1),
            Err(Error::UnknownToken { .. })
        ));
    }
}
