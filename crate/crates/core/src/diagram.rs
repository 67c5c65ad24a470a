//! Arc diagrams: the gates of one word (or a pair of words) lined up on the
//! boundary arc of a small disk around the base point, and the oriented
//! chords given by the partitions of the words.
//!
//! Two independent routes compute the linking number of two partitions:
//!
//! * [`lk_self`] / [`lk_pair`] evaluate half the alternating form on the two
//!   boundary chains, comparing gates letter by letter without building a
//!   diagram;
//! * [`Diagram::chord_sign`] places the sorted gates on a convex arc and
//!   intersects the two chords as straight segments.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Which word of the diagram a gate or partition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    First,
    Second,
}

/// A point on the boundary arc. `label` is the letter written at the gate:
/// `x_i` for the entry gate of occurrence `i`, `x_i^-1` for its exit gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    pub tag: Tag,
    pub occ: usize,
    pub label: Letter,
}

impl Gate {
    pub const fn new(tag: Tag, occ: usize, label: Letter) -> Self {
        Gate { tag, occ, label }
    }

    /// The other gate of the same occurrence.
    pub const fn partner(self) -> Self {
        Gate {
            label: self.label.inverse(),
            ..self
        }
    }
}

/// Position of two gates along the oriented boundary arc.
///
/// Distinct labels compare by letter rank. Equal labels in the same word
/// compare by occurrence, ascending for `a_k`/`b_k` and descending for their
/// inverses. Equal labels in different words put the first word's gate first
/// for `a_k`/`b_k` and last otherwise, whatever the occurrences.
pub fn gate_order(g1: &Gate, g2: &Gate) -> Ordering {
    let by_rank = g1.label.rank().cmp(&g2.label.rank());
    if by_rank != Ordering::Equal {
        return by_rank;
    }
    let ord = if g1.tag == g2.tag {
        g1.occ.cmp(&g2.occ)
    } else {
        g1.tag.cmp(&g2.tag)
    };
    if g1.label.is_positive() {
        ord
    } else {
        ord.reverse()
    }
}

/// The alternating form on single gates: `+1` if `g1 < g2`, `-1` if
/// `g1 > g2`, `0` on the same gate.
pub fn gate_dot(g1: &Gate, g2: &Gate) -> i64 {
    match gate_order(g1, g2) {
        Ordering::Less => 1,
        Ordering::Equal => 0,
        Ordering::Greater => -1,
    }
}

/// Degree-0 chain: a finite formal sum of gates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Chain0 {
    terms: Vec<(Gate, i64)>,
}

impl Chain0 {
    pub fn zero() -> Self {
        Chain0::default()
    }

    pub fn gate(g: Gate) -> Self {
        Chain0 {
            terms: vec![(g, 1)],
        }
    }

    pub fn add_term(&mut self, g: Gate, c: i64) {
        if let Some(t) = self.terms.iter_mut().find(|(h, _)| *h == g) {
            t.1 += c;
        } else {
            self.terms.push((g, c));
        }
        self.terms.retain(|(_, c)| *c != 0);
    }

    /// `end - start`, the boundary of an arc from `start` to `end`.
    pub fn arc_boundary(start: Gate, end: Gate) -> Self {
        let mut c = Chain0::gate(end);
        c.add_term(start, -1);
        c
    }

    pub fn terms(&self) -> &[(Gate, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Bilinear extension of [`gate_dot`].
    pub fn dot(&self, other: &Chain0) -> i64 {
        self.terms
            .iter()
            .flat_map(|(g, c)| other.terms.iter().map(move |(h, d)| c * d * gate_dot(g, h)))
            .sum()
    }
}

/// The `index`-th partition of one word, i.e. the chord from the exit gate
/// of `x_index` to the entry gate of `x_{index+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    pub tag: Tag,
    pub index: usize,
}

impl Partition {
    pub const fn new(tag: Tag, index: usize) -> Self {
        Partition { tag, index }
    }
}

/// Start and end gate of partition `i` of `w` (1-based, cyclic).
fn chord_ends(w: &Word, tag: Tag, i: usize) -> (Gate, Gate) {
    let p = w.len();
    let next = i % p + 1;
    (
        Gate::new(tag, i, w.letter(i).inverse()),
        Gate::new(tag, next, w.letter(next)),
    )
}

fn check_index(w: &Word, i: usize) -> Result<()> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if i == 0 || i > w.len() {
        return Err(Error::PartitionOutOfRange {
            index: i,
            len: w.len(),
        });
    }
    Ok(())
}

/// Half the form on two boundaries, given as (start, end) gate pairs.
fn half_boundary_product(a: (Gate, Gate), b: (Gate, Gate)) -> Result<i64> {
    let full =
        gate_dot(&a.1, &b.1) - gate_dot(&a.1, &b.0) - gate_dot(&a.0, &b.1) + gate_dot(&a.0, &b.0);
    if full % 2 != 0 {
        return Err(Error::OddLinking(full));
    }
    Ok(full / 2)
}

/// Linking number of partitions `i < j` of one word.
pub fn lk_self(w: &Word, i: usize, j: usize) -> Result<i64> {
    check_index(w, i)?;
    check_index(w, j)?;
    if i == j {
        return Err(Error::SamePartition(i));
    }
    half_boundary_product(chord_ends(w, Tag::First, i), chord_ends(w, Tag::First, j))
}

/// Linking number of partition `i` of `v` with partition `j` of `w` in the
/// pair diagram of `(v, w)`.
pub fn lk_pair(v: &Word, i: usize, w: &Word, j: usize) -> Result<i64> {
    v.same_genus(w)?;
    check_index(v, i)?;
    check_index(w, j)?;
    half_boundary_product(chord_ends(v, Tag::First, i), chord_ends(w, Tag::Second, j))
}

/// The diagram of a single word or of an ordered pair of words, with its
/// gates sorted along the boundary arc.
#[derive(Debug, Clone)]
pub struct Diagram {
    words: Vec<Word>,
    gates: Vec<Gate>,
}

impl Diagram {
    pub fn single(w: &Word) -> Self {
        Diagram::build(vec![w.clone()])
    }

    pub fn pair(v: &Word, w: &Word) -> Result<Self> {
        v.same_genus(w)?;
        Ok(Diagram::build(vec![v.clone(), w.clone()]))
    }

    fn build(words: Vec<Word>) -> Self {
        let mut gates = Vec::new();
        for (w, tag) in words.iter().zip([Tag::First, Tag::Second]) {
            for (n, &x) in w.letters().iter().enumerate() {
                // entry and exit gate of one occurrence never share a label
                debug_assert_ne!(x, x.inverse());
                gates.push(Gate::new(tag, n + 1, x));
                gates.push(Gate::new(tag, n + 1, x.inverse()));
            }
        }
        gates.sort_by(gate_order);
        Diagram { words, gates }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn is_pair(&self) -> bool {
        self.words.len() == 2
    }

    /// All gates, in boundary order.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn word(&self, tag: Tag) -> Option<&Word> {
        match tag {
            Tag::First => self.words.first(),
            Tag::Second => self.words.get(1),
        }
    }

    pub fn contains(&self, g: &Gate) -> bool {
        match self.word(g.tag) {
            Some(w) if g.occ >= 1 && g.occ <= w.len() => {
                let x = w.letter(g.occ);
                g.label == x || g.label == x.inverse()
            }
            _ => false,
        }
    }

    /// [`gate_order`] restricted to gates of this diagram.
    pub fn compare(&self, g1: &Gate, g2: &Gate) -> Result<Ordering> {
        if !self.contains(g1) || !self.contains(g2) {
            return Err(Error::ForeignGate);
        }
        Ok(gate_order(g1, g2))
    }

    pub fn partitions(&self) -> Vec<Partition> {
        [Tag::First, Tag::Second]
            .into_iter()
            .filter_map(|tag| self.word(tag).map(|w| (tag, w.len())))
            .flat_map(|(tag, p)| (1..=p).map(move |i| Partition::new(tag, i)))
            .collect()
    }

    pub fn chord(&self, p: Partition) -> Result<(Gate, Gate)> {
        let w = self.word(p.tag).ok_or(Error::ForeignGate)?;
        check_index(w, p.index)?;
        Ok(chord_ends(w, p.tag, p.index))
    }

    /// `x_{i+1} - x_i^-1` as a chain.
    pub fn boundary(&self, p: Partition) -> Result<Chain0> {
        let (start, end) = self.chord(p)?;
        Ok(Chain0::arc_boundary(start, end))
    }

    /// Linking number through the boundary chains of this diagram.
    pub fn lk(&self, p1: Partition, p2: Partition) -> Result<i64> {
        let full = self.boundary(p1)?.dot(&self.boundary(p2)?);
        if full % 2 != 0 {
            return Err(Error::OddLinking(full));
        }
        Ok(full / 2)
    }

    fn position(&self, g: &Gate) -> Result<usize> {
        self.gates
            .iter()
            .position(|h| h == g)
            .ok_or(Error::ForeignGate)
    }

    /// Algebraic intersection number of two chords drawn as straight
    /// segments between gates placed in boundary order on a convex arc.
    pub fn chord_sign(&self, p1: Partition, p2: Partition) -> Result<i64> {
        let (s1, e1) = self.chord(p1)?;
        let (s2, e2) = self.chord(p2)?;
        let pos = [s1, e1, s2, e2]
            .iter()
            .map(|g| self.position(g))
            .collect::<Result<Vec<_>>>()?;
        for a in 0..4 {
            for b in a + 1..4 {
                if pos[a] == pos[b] {
                    return Err(Error::SharedEndpoint);
                }
            }
        }
        let [a, b, c, d] = [pos[0], pos[1], pos[2], pos[3]].map(arc_point);
        Ok(segment_crossing_sign(a, b, c, d))
    }

    /// Graphviz rendering: gates as boundary nodes in order, chords as edges.
    pub fn to_dot(&self) -> String {
        let mut out =
            String::from("digraph arc_diagram {\n  rankdir=LR;\n  node [shape=circle];\n");
        for (k, g) in self.gates.iter().enumerate() {
            let _ = writeln!(out, "  g{k} [label=\"{}\"];", self.gate_caption(g));
        }
        if self.gates.len() > 1 {
            let chain: Vec<String> = (0..self.gates.len()).map(|k| format!("g{k}")).collect();
            let _ = writeln!(
                out,
                "  {} [style=dashed, arrowhead=none];",
                chain.join(" -> ")
            );
        }
        for p in self.partitions() {
            let (s, e) = self.chord(p).expect("own partition");
            let (ks, ke) = (self.position(&s).unwrap(), self.position(&e).unwrap());
            let _ = writeln!(
                out,
                "  g{ks} -> g{ke} [label=\"{}\"];",
                self.partition_caption(p)
            );
        }
        out.push_str("}\n");
        out
    }

    /// SVG rendering: a disk with the gates at equal angles along the upper
    /// boundary arc and one arrow per chord.
    pub fn to_svg(&self) -> String {
        const SIZE: f64 = 400.0;
        const R: f64 = 150.0;
        let c = SIZE / 2.0;
        let n = self.gates.len();
        let at = |k: usize| {
            let theta = std::f64::consts::PI * (k as f64 + 1.0) / (n as f64 + 1.0);
            (c + R * theta.cos(), c - R * theta.sin())
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
        );
        out.push_str(
            "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" \
             markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\
             <path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n",
        );
        let _ = writeln!(
            out,
            "  <circle cx=\"{c}\" cy=\"{c}\" r=\"{R}\" fill=\"none\" stroke=\"black\"/>"
        );
        let _ = writeln!(
            out,
            "  <circle cx=\"{c}\" cy=\"{:.2}\" r=\"4\" fill=\"black\"/>",
            c + R
        );
        for p in self.partitions() {
            let (s, e) = self.chord(p).expect("own partition");
            let (x1, y1) = at(self.position(&s).unwrap());
            let (x2, y2) = at(self.position(&e).unwrap());
            let colour = if p.tag == Tag::First {
                "steelblue"
            } else {
                "firebrick"
            };
            let _ = writeln!(
                out,
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{colour}\" \
                 marker-end=\"url(#arrow)\"><title>{}</title></line>",
                self.partition_caption(p)
            );
        }
        for (k, g) in self.gates.iter().enumerate() {
            let (x, y) = at(k);
            let (lx, ly) = (c + (x - c) * 1.12, c + (y - c) * 1.12);
            let _ = writeln!(out, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\"/>");
            let _ = writeln!(
                out,
                "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
                self.gate_caption(g)
            );
        }
        out.push_str("</svg>\n");
        out
    }

    fn gate_caption(&self, g: &Gate) -> String {
        let who = match (self.is_pair(), g.tag) {
            (false, _) => "",
            (true, Tag::First) => "v",
            (true, Tag::Second) => "w",
        };
        format!("{} ({}{})", g.label, who, g.occ)
    }

    fn partition_caption(&self, p: Partition) -> String {
        match (self.is_pair(), p.tag) {
            (false, _) => format!("phi{}", p.index),
            (true, Tag::First) => format!("phi{} v", p.index),
            (true, Tag::Second) => format!("phi{} w", p.index),
        }
    }
}

/// The `k`-th boundary slot on the convex arc `y = x^2`.
fn arc_point(k: usize) -> (i64, i64) {
    let x = k as i64;
    (x, x * x)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Sign of the crossing of segment `a -> b` with segment `c -> d`, or 0 if
/// they do not cross. Points are in convex position, so no three collinear.
fn segment_crossing_sign(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> i64 {
    let straddles_cd = cross(c, d, a).signum() * cross(c, d, b).signum() < 0;
    let straddles_ab = cross(a, b, c).signum() * cross(a, b, d).signum() < 0;
    if !(straddles_cd && straddles_ab) {
        return 0;
    }
    let dir1 = (b.0 - a.0, b.1 - a.1);
    let dir2 = (d.0 - c.0, d.1 - c.1);
    (dir1.0 * dir2.1 - dir1.1 * dir2.0).signum()
}
