//! `SL(2,Z)`-orbits of origamis and generators of their stabilizers.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::perm::Permutation;
use crate::sl2z::{CosetTable, GroupWord, Letter};

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// Canonical image of `o` under a letter, with the relabeling from raw image to canonical labels.
pub fn apply_letter(o: &Origami, letter: Letter) -> (Origami, Permutation) {
    o.apply_letter_raw(letter).canonical_form()
}

/// Applies a word to a surface without relabeling (rightmost letter first).
pub fn apply_word_raw(o: &Origami, w: &GroupWord) -> Origami {
    w.letters().iter().rev().fold(o.clone(), |acc, &l| acc.apply_letter_raw(l))
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub target: usize,
    pub relabeling: Permutation,
}

#[derive(Clone, Debug)]
pub struct OrbitGraph {
    pub nodes: Vec<Origami>,
    /// `edges[u][l]` for `l` in `Letter::ALL` order.
    pub edges: Vec<[Edge; 4]>,
    pub base: usize,
    /// Parent node and the letter leading from it, for the breadth-first tree.
    pub parent: Vec<Option<(usize, Letter)>>,
    /// `tree_words[u] · base = u`.
    pub tree_words: Vec<GroupWord>,
}

fn letter_slot(l: Letter) -> usize {
    Letter::ALL.iter().position(|&x| x == l).expect("letter")
}

impl OrbitGraph {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn step(&self, node: usize, l: Letter) -> usize {
        self.edges[node][letter_slot(l)].target
    }

    /// Node reached from `node` by a word.
    pub fn trace(&self, node: usize, w: &GroupWord) -> usize {
        w.letters().iter().rev().fold(node, |u, &l| self.step(u, l))
    }

    pub fn stabilizes(&self, w: &GroupWord) -> bool {
        self.trace(self.base, w) == self.base
    }

    pub fn check_stabilizes(&self, w: &GroupWord) -> Result<()> {
        if self.stabilizes(w) {
            Ok(())
        } else {
            Err(Error::WordDoesNotStabilize(w.to_string()))
        }
    }

    pub fn index_of(&self, o: &Origami) -> Option<usize> {
        let c = o.canonical_form().0;
        self.nodes.iter().position(|x| *x == c)
    }
}

/// Breadth-first closure of the orbit under `T, S, T⁻¹, S⁻¹`.
pub fn orbit(o: &Origami, cap: usize) -> Result<OrbitGraph> {
    let base = o.canonical_form().0;
    let mut index: HashMap<Origami, usize> = HashMap::from([(base.clone(), 0)]);
    let mut nodes = vec![base];
    let mut parent = vec![None];
    let mut tree_words = vec![GroupWord::empty()];
    let mut edges: Vec<Option<[Edge; 4]>> = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let images: Vec<(Origami, Permutation)> = Letter::ALL.iter().map(|&l| apply_letter(&nodes[u], l)).collect();
        let mut out = Vec::with_capacity(4);
        for (&l, (img, relabeling)) in Letter::ALL.iter().zip(images) {
            let target = match index.get(&img) {
                Some(&t) => t,
                None => {
                    if nodes.len() >= cap {
                        return Err(Error::OrbitTooLarge(cap));
                    }
                    let t = nodes.len();
                    index.insert(img.clone(), t);
                    nodes.push(img);
                    parent.push(Some((u, l)));
                    let mut letters = vec![l];
                    letters.extend_from_slice(tree_words[u].letters());
                    tree_words.push(GroupWord::new(letters).reduced());
                    edges.push(None);
                    queue.push_back(t);
                    t
                }
            };
            out.push(Edge { target, relabeling });
        }
        edges[u] = Some(out.try_into().expect("four letters"));
    }
    Ok(OrbitGraph {
        nodes,
        edges: edges.into_iter().map(|e| e.expect("every node expanded")).collect(),
        base: 0,
        parent,
        tree_words,
    })
}

/// Schreier generators `w_{u'}⁻¹ · l · w_u` for each edge `u → u'` labelled `l ∈ {T, S}`, trivial ones dropped.
pub fn veech_generators(g: &OrbitGraph) -> Vec<GroupWord> {
    let mut out: Vec<GroupWord> = Vec::new();
    for u in 0..g.size() {
        for l in [Letter::T, Letter::S] {
            let v = g.step(u, l);
            let w = g.tree_words[v].inverse().concat(&GroupWord::new(vec![l])).concat(&g.tree_words[u]);
            if !w.is_empty() && !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

fn coset_cap(g: &OrbitGraph) -> usize {
    (64 * g.size()).max(4096)
}

/// Coset table of the subgroup generated by words stabilizing the base node.
pub fn stabilizer_table(words: &[GroupWord], g: &OrbitGraph) -> Result<CosetTable> {
    for w in words {
        g.check_stabilizes(w)?;
    }
    CosetTable::enumerate(words, coset_cap(g))
}

/// Whether two families of stabilizing words generate the same subgroup.
pub fn subgroup_equals(words_a: &[GroupWord], words_b: &[GroupWord], g: &OrbitGraph) -> Result<bool> {
    let ta = stabilizer_table(words_a, g)?;
    let tb = stabilizer_table(words_b, g)?;
    Ok(ta.index() == tb.index() && words_b.iter().all(|w| ta.contains(w)) && words_a.iter().all(|w| tb.contains(w)))
}

/// Whether the words generate the full stabilizer, i.e. have index equal to the orbit size.
pub fn generates_stabilizer(words: &[GroupWord], g: &OrbitGraph) -> Result<bool> {
    match stabilizer_table(words, g) {
        Ok(t) => Ok(t.index() == g.size()),
        Err(Error::CosetLimit(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Reduced words in the four letters, by length then letter order, up to `max_len`.
pub fn words_up_to(max_len: usize) -> Vec<GroupWord> {
    let mut out = vec![GroupWord::empty()];
    let mut frontier = vec![GroupWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &Letter::ALL {
                if w.letters().last() == Some(&l.inverse()) {
                    continue;
                }
                let mut letters = w.letters().to_vec();
                letters.push(l);
                next.push(GroupWord::new(letters));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A short generating set for the stabilizer: greedily picks short stabilizing words,
/// falls back on Schreier generators, then drops redundant members.
pub fn short_generators(g: &OrbitGraph, max_len: usize) -> Result<Vec<GroupWord>> {
    let mut candidates: Vec<GroupWord> = Vec::new();
    for w in words_up_to(max_len) {
        if w.is_empty() || !g.stabilizes(&w) {
            continue;
        }
        // skip inverses and cyclic duplicates of words already seen
        if candidates.iter().any(|c| *c == w.inverse()) {
            continue;
        }
        candidates.push(w);
    }
    candidates.extend(veech_generators(g));
    let mut chosen: Vec<GroupWord> = Vec::new();
    let mut current_index: Option<usize> = None;
    for w in candidates {
        if let Some(t) = chosen_table(&chosen, g) {
            if t.contains(&w) {
                continue;
            }
        }
        chosen.push(w);
        current_index = chosen_table(&chosen, g).map(|t| t.index());
        if current_index == Some(g.size()) {
            break;
        }
    }
    if current_index != Some(g.size()) {
        return Ok(veech_generators(g));
    }
    let mut i = 0;
    while i < chosen.len() {
        let mut rest = chosen.clone();
        rest.remove(i);
        if !rest.is_empty() && generates_stabilizer(&rest, g)? {
            chosen = rest;
        } else {
            i += 1;
        }
    }
    Ok(chosen)
}

fn chosen_table(words: &[GroupWord], g: &OrbitGraph) -> Option<CosetTable> {
    if words.is_empty() {
        return None;
    }
    CosetTable::enumerate(words, coset_cap(g)).ok()
}
