//! Exhaustive and seeded-random sweeps that cross-check the linking number
//! against the chord oracle and exercise the invariance and Lie bialgebra
//! identities over many words.
//!
//! Every sweep is an indexed map-reduce. With the `parallel` feature the map
//! runs on the rayon pool; [`Exec::Sequential`] (or building without the
//! feature) runs the same closure in a plain loop. Random cases are seeded
//! per index, so both paths give identical reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialgebra::{
    check_antisymmetry, check_bracket_conjugation_invariance, check_bracket_insertion_invariance,
    check_bracket_rotation_invariance, check_cojacobi, check_compatibility,
    check_conjugation_invariance, check_insertion_invariance, check_jacobi,
    check_rotation_invariance_by,
};
use crate::diagram::{lk_pair, lk_self, Diagram, Partition, Tag};
use crate::error::Result;
use crate::word::{CyclicWord, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential without the `parallel` feature.
    #[default]
    Parallel,
}

/// Outcome of a sweep: how many checks ran and the lowest-indexed failure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<(u64, String)>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.checked += other.checked;
        self.failures += other.failures;
        self.first_failure = match (self.first_failure.take(), other.first_failure) {
            (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }

    fn check(&mut self, index: u64, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some((index, what()));
            }
        }
    }

    fn check_result(&mut self, index: u64, res: Result<bool>, what: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.check(index, ok, what),
            Err(e) => self.check(index, false, || format!("{} ({e})", what())),
        }
    }
}

/// Runs `f` on `0..n` and merges the reports.
pub fn map_reduce<F>(exec: Exec, n: u64, f: F) -> Report
where
    F: Fn(u64) -> Report + Sync + Send,
{
    match exec {
        Exec::Sequential => map_reduce_seq(n, f),
        Exec::Parallel => map_reduce_par(n, f),
    }
}

fn map_reduce_seq<F: Fn(u64) -> Report>(n: u64, f: F) -> Report {
    (0..n).map(f).fold(Report::default(), Report::merge)
}

#[cfg(feature = "parallel")]
fn map_reduce_par<F>(n: u64, f: F) -> Report
where
    F: Fn(u64) -> Report + Sync + Send,
{
    use rayon::prelude::*;
    (0..n)
        .into_par_iter()
        .map(f)
        .reduce(Report::default, Report::merge)
}

#[cfg(not(feature = "parallel"))]
fn map_reduce_par<F>(n: u64, f: F) -> Report
where
    F: Fn(u64) -> Report + Sync + Send,
{
    map_reduce_seq(n, f)
}

/// The `index`-th word of length `len` over `alphabet`, in mixed radix.
pub fn word_from_index(alphabet: &[Letter], len: usize, mut index: u64, genus: u32) -> Word {
    let base = alphabet.len() as u64;
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        letters.push(alphabet[(index % base) as usize]);
        index /= base;
    }
    Word::new(letters, genus).expect("alphabet fits genus")
}

/// All words of length `0..=max_len` over `alphabet`.
pub fn all_words(alphabet: &[Letter], max_len: usize, genus: u32) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| {
            let count = (alphabet.len() as u64).pow(len as u32);
            (0..count).map(move |i| word_from_index(alphabet, len, i, genus))
        })
        .collect()
}

/// Distinct nontrivial classes among words of length `<= max_len`,
/// as their canonical words.
pub fn class_representatives(genus: u32, max_len: usize) -> Vec<Word> {
    let mut classes: Vec<CyclicWord> = all_words(&Letter::alphabet(genus), max_len, genus)
        .iter()
        .map(Word::canonical)
        .filter(|c| !c.is_trivial())
        .collect();
    classes.sort();
    classes.dedup();
    classes.iter().map(CyclicWord::to_word).collect()
}

pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_word<R: Rng>(rng: &mut R, genus: u32, min_len: usize, max_len: usize) -> Word {
    let len = rng.gen_range(min_len..=max_len.max(min_len));
    let letters = (0..len)
        .map(|_| Letter::from_rank(rng.gen_range(0..4 * genus)))
        .collect();
    Word::new(letters, genus).expect("ranks fit genus")
}

pub fn random_letter<R: Rng>(rng: &mut R, genus: u32) -> Letter {
    Letter::from_rank(rng.gen_range(0..4 * genus))
}

/// Letter-level linking number against the chain route and the chord
/// oracle, for every partition pair of `w`.
pub fn check_word_against_oracle(report: &mut Report, index: u64, w: &Word) {
    let d = Diagram::single(w);
    let p = w.len();
    for i in 1..=p {
        for j in i + 1..=p {
            let (a, b) = (Partition::new(Tag::First, i), Partition::new(Tag::First, j));
            let lk = lk_self(w, i, j);
            let ok = match (&lk, d.lk(a, b), d.chord_sign(a, b)) {
                (Ok(lk), Ok(chain), Ok(oracle)) => *lk == chain && *lk == oracle && lk.abs() <= 1,
                _ => false,
            };
            report.check(index, ok, || {
                format!("word `{w}` partitions ({i},{j}): lk={lk:?}")
            });
        }
    }
}

/// Same as [`check_word_against_oracle`] for the pair diagram of `(v, w)`.
pub fn check_pair_against_oracle(report: &mut Report, index: u64, v: &Word, w: &Word) {
    let d = match Diagram::pair(v, w) {
        Ok(d) => d,
        Err(e) => return report.check(index, false, || e.to_string()),
    };
    for i in 1..=v.len() {
        for j in 1..=w.len() {
            let (a, b) = (
                Partition::new(Tag::First, i),
                Partition::new(Tag::Second, j),
            );
            let lk = lk_pair(v, i, w, j);
            let ok = match (&lk, d.lk(a, b), d.chord_sign(a, b)) {
                (Ok(lk), Ok(chain), Ok(oracle)) => *lk == chain && *lk == oracle && lk.abs() <= 1,
                _ => false,
            };
            report.check(index, ok, || {
                format!("pair `{v}` | `{w}` partitions ({i},{j}): lk={lk:?}")
            });
        }
    }
}

/// Every word of length `<= max_len` over `alphabet`, every partition pair.
pub fn oracle_exhaustive(alphabet: &[Letter], genus: u32, max_len: usize, exec: Exec) -> Report {
    let base = alphabet.len() as u64;
    (2..=max_len).fold(Report::default(), |acc, len| {
        let count = base.pow(len as u32);
        acc.merge(map_reduce(exec, count, |i| {
            let mut r = Report::default();
            check_word_against_oracle(&mut r, i, &word_from_index(alphabet, len, i, genus));
            r
        }))
    })
}

/// `samples` random words (and random word pairs) of length `1..=max_len`,
/// genus drawn from `1..=max_genus`.
pub fn oracle_random(
    seed: u64,
    samples: u64,
    max_len: usize,
    max_genus: u32,
    exec: Exec,
) -> Report {
    map_reduce(exec, samples, |i| {
        let mut rng = case_rng(seed, i);
        let genus = rng.gen_range(1..=max_genus);
        let w = random_word(&mut rng, genus, 1, max_len);
        let v = random_word(&mut rng, genus, 1, max_len);
        let mut r = Report::default();
        check_word_against_oracle(&mut r, i, &w);
        check_pair_against_oracle(&mut r, i, &v, &w);
        r
    })
}

/// Homotopy invariance: rotation, conjugation and cancelling-pair insertion
/// leave the quotiented cobracket and the bracket unchanged.
pub fn invariance_random(
    seed: u64,
    samples: u64,
    max_len: usize,
    max_genus: u32,
    exec: Exec,
) -> Report {
    map_reduce(exec, samples, |i| {
        let mut rng = case_rng(seed, i);
        let genus = rng.gen_range(1..=max_genus);
        let w = random_word(&mut rng, genus, 0, max_len);
        let v = random_word(&mut rng, genus, 0, max_len);
        let k = rng.gen_range(0..=max_len as i64);
        let kv = rng.gen_range(0..=max_len as i64);
        let x = random_letter(&mut rng, genus);
        let at = rng.gen_range(0..=w.len().max(v.len()));
        let mut r = Report::default();
        r.check(i, check_rotation_invariance_by(&w, k), || {
            format!("cobracket rotation: `{w}` by {k}")
        });
        r.check_result(i, check_conjugation_invariance(&w, x), || {
            format!("cobracket conjugation: `{w}` by {x}")
        });
        r.check_result(i, check_insertion_invariance(&w, at, x), || {
            format!("cobracket insertion: `{w}` at {at} of {x}")
        });
        r.check_result(i, check_bracket_rotation_invariance(&v, &w, kv, k), || {
            format!("bracket rotation: `{v}` by {kv}, `{w}` by {k}")
        });
        r.check_result(i, check_bracket_conjugation_invariance(&v, &w, x), || {
            format!("bracket conjugation: `{v}`, `{w}` by {x}")
        });
        r.check_result(i, check_bracket_insertion_invariance(&v, &w, at, x), || {
            format!("bracket insertion: `{v}`, `{w}` at {at} of {x}")
        });
        r
    })
}

/// Antisymmetry and compatibility on every ordered pair of words of length
/// `<= max_len`, co-Jacobi on every such word, and Jacobi on every unordered
/// triple (with repetition) of nontrivial classes of length `<= max_len`.
pub fn identities_exhaustive(genus: u32, max_len: usize, exec: Exec) -> Report {
    let words = all_words(&Letter::alphabet(genus), max_len, genus);
    let n = words.len() as u64;

    let pairs = map_reduce(exec, n * n, |k| {
        let (u, v) = (&words[(k / n) as usize], &words[(k % n) as usize]);
        let mut r = Report::default();
        r.check_result(k, check_antisymmetry(u, v), || {
            format!("antisymmetry `{u}`, `{v}`")
        });
        r.check_result(k, check_compatibility(u, v), || {
            format!("compatibility `{u}`, `{v}`")
        });
        r
    });

    let singles = map_reduce(exec, n, |k| {
        let u = &words[k as usize];
        let mut r = Report::default();
        r.check(k, check_cojacobi(u), || format!("co-Jacobi `{u}`"));
        r
    });

    let classes = class_representatives(genus, max_len);
    let m = classes.len();
    let triples: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|a| (a..m).flat_map(move |b| (b..m).map(move |c| (a, b, c))))
        .collect();
    let jacobi = map_reduce(exec, triples.len() as u64, |k| {
        let (a, b, c) = triples[k as usize];
        let (u, v, w) = (&classes[a], &classes[b], &classes[c]);
        let mut r = Report::default();
        r.check_result(k, check_jacobi(u, v, w), || {
            format!("Jacobi `{u}`, `{v}`, `{w}`")
        });
        r
    });

    pairs.merge(singles).merge(jacobi)
}

/// All four identities on `samples` random triples of length `1..=max_len`.
pub fn identities_random(
    seed: u64,
    samples: u64,
    max_len: usize,
    max_genus: u32,
    exec: Exec,
) -> Report {
    map_reduce(exec, samples, |i| {
        let mut rng = case_rng(seed, i);
        let genus = rng.gen_range(1..=max_genus);
        let u = random_word(&mut rng, genus, 1, max_len);
        let v = random_word(&mut rng, genus, 1, max_len);
        let w = random_word(&mut rng, genus, 1, max_len);
        let mut r = Report::default();
        r.check_result(i, check_antisymmetry(&u, &v), || {
            format!("antisymmetry `{u}`, `{v}`")
        });
        r.check_result(i, check_jacobi(&u, &v, &w), || {
            format!("Jacobi `{u}`, `{v}`, `{w}`")
        });
        r.check(i, check_cojacobi(&u), || format!("co-Jacobi `{u}`"));
        r.check_result(i, check_compatibility(&u, &v), || {
            format!("compatibility `{u}`, `{v}`")
        });
        r
    })
}
