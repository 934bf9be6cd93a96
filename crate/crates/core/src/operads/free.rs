//! Tree monomials of free operads on graded generators with symmetries.
//!
//! A term stands for the tensor product of its vertex decorations taken in
//! increasing `id` order, so reordering vertices costs the Koszul sign of
//! the odd generators involved. A canonical term has the children of every
//! symmetric or skew vertex sorted by smallest leaf and ids equal to preorder
//! ranks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Skew,
    /// No symmetry: every ordering of the inputs is a distinct operation.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub arity: usize,
    #[serde(default)]
    pub degree: i32,
    pub symmetry: Symmetry,
}

impl Generator {
    pub fn new(name: &str, arity: usize, degree: i32, symmetry: Symmetry) -> Self {
        Generator { name: name.to_string(), arity, degree, symmetry }
    }

    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Leaf(u8),
    Node { gen: usize, id: usize, children: Vec<Term> },
}

/// Linear combination of canonical terms.
pub type TermChain = BTreeMap<Term, Rational>;

pub fn chain_add(chain: &mut TermChain, t: Term, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let e = chain.entry(t.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        chain.remove(&t);
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TermError {
    #[error("cannot parse term {0:?}")]
    Parse(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {name} has arity {arity} but was given {given} inputs")]
    Arity { name: String, arity: usize, given: usize },
    #[error("leaves must be labelled 1..n without repetition")]
    Labels,
    #[error("arity {n} exceeds the supported bound {max}")]
    Bound { n: usize, max: usize },
}

impl Term {
    pub fn leaf(l: u8) -> Term {
        Term::Leaf(l)
    }

    pub fn node(gen: usize, children: Vec<Term>) -> Term {
        Term::Node { gen, id: 0, children }
    }

    pub fn min_leaf(&self) -> u8 {
        match self {
            Term::Leaf(l) => *l,
            Term::Node { children, .. } => children.iter().map(Term::min_leaf).min().unwrap(),
        }
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.visit_leaves(&mut |l| out.push(l));
        out
    }

    fn visit_leaves(&self, f: &mut dyn FnMut(u8)) {
        match self {
            Term::Leaf(l) => f(*l),
            Term::Node { children, .. } => children.iter().for_each(|c| c.visit_leaves(f)),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::Node { children, .. } => children.iter().map(Term::arity).sum(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Term::Leaf(_) => 0,
            Term::Node { children, .. } => 1 + children.iter().map(Term::vertex_count).sum::<usize>(),
        }
    }

    /// Number of vertices labelled by each generator.
    pub fn generator_counts(&self, gens: usize) -> Vec<usize> {
        let mut out = vec![0; gens];
        self.visit_nodes(&mut |g, _| out[g] += 1);
        out
    }

    pub fn degree(&self, gens: &[Generator]) -> i32 {
        let mut d = 0;
        self.visit_nodes(&mut |g, _| d += gens[g].degree);
        d
    }

    /// Preorder visit of `(generator, id)`.
    pub fn visit_nodes(&self, f: &mut dyn FnMut(usize, usize)) {
        if let Term::Node { gen, id, children } = self {
            f(*gen, *id);
            children.iter().for_each(|c| c.visit_nodes(f));
        }
    }

    /// Relabel leaves through `map[old] = new`.
    pub fn relabel(&self, map: &dyn Fn(u8) -> u8) -> Term {
        match self {
            Term::Leaf(l) => Term::Leaf(map(*l)),
            Term::Node { gen, id, children } => {
                Term::Node { gen: *gen, id: *id, children: children.iter().map(|c| c.relabel(map)).collect() }
            }
        }
    }

    /// Shift every vertex id by `offset`.
    pub fn shift_ids(&self, offset: usize) -> Term {
        match self {
            Term::Leaf(l) => Term::Leaf(*l),
            Term::Node { gen, id, children } => Term::Node {
                gen: *gen,
                id: id + offset,
                children: children.iter().map(|c| c.shift_ids(offset)).collect(),
            },
        }
    }

    fn assign_preorder_ids(&mut self, next: &mut usize) {
        if let Term::Node { id, children, .. } = self {
            *id = *next;
            *next += 1;
            children.iter_mut().for_each(|c| c.assign_preorder_ids(next));
        }
    }

    pub fn with_preorder_ids(mut self) -> Term {
        self.assign_preorder_ids(&mut 0);
        self
    }

    pub fn display<'a>(&'a self, gens: &'a [Generator]) -> TermDisplay<'a> {
        TermDisplay { term: self, gens }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(l) => write!(f, "{l}"),
            Term::Node { gen, children, .. } => {
                write!(f, "g{gen}(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c:?}")?;
                }
                write!(f, ")")
            }
        }
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    gens: &'a [Generator],
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term {
            Term::Leaf(l) => write!(f, "{l}"),
            Term::Node { gen, children, .. } => {
                write!(f, "{}(", self.gens[*gen].name)?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", c.display(self.gens))?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses `name(child, ...)` with integer leaves; ids follow preorder.
pub fn parse_term(s: &str, gens: &[Generator]) -> Result<Term, TermError> {
    let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let t = parse_rec(&toks, &mut pos, gens, s)?;
    if pos != toks.len() {
        return Err(TermError::Parse(s.to_string()));
    }
    let leaves = t.leaves();
    let n = leaves.len();
    if leaves.iter().sorted().copied().ne(1..=n as u8) {
        return Err(TermError::Labels);
    }
    Ok(t.with_preorder_ids())
}

fn parse_rec(toks: &[char], pos: &mut usize, gens: &[Generator], src: &str) -> Result<Term, TermError> {
    let err = || TermError::Parse(src.to_string());
    let start = *pos;
    while *pos < toks.len() && (toks[*pos].is_alphanumeric() || toks[*pos] == '_') {
        *pos += 1;
    }
    let word: String = toks[start..*pos].iter().collect();
    if word.is_empty() {
        return Err(err());
    }
    if word.chars().all(|c| c.is_ascii_digit()) {
        return word.parse().map(Term::Leaf).map_err(|_| err());
    }
    let gen = gens.iter().position(|g| g.name == word).ok_or(TermError::UnknownGenerator(word.clone()))?;
    if toks.get(*pos) != Some(&'(') {
        return Err(err());
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        children.push(parse_rec(toks, pos, gens, src)?);
        match toks.get(*pos) {
            Some(',') => *pos += 1,
            Some(')') => {
                *pos += 1;
                break;
            }
            _ => return Err(err()),
        }
    }
    if children.len() != gens[gen].arity {
        return Err(TermError::Arity { name: word, arity: gens[gen].arity, given: children.len() });
    }
    Ok(Term::node(gen, children))
}

fn permutation_parity(p: &[usize]) -> bool {
    let mut parity = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                parity = !parity;
            }
        }
    }
    parity
}

/// Canonical form and the sign relating it to `t`.
pub fn normalize(t: &Term, gens: &[Generator]) -> (Term, i32) {
    let mut sign = 1;
    let mut sorted = sort_children(t, gens, &mut sign);
    // Koszul sign of moving from id order to preorder
    let mut seq = Vec::new();
    sorted.visit_nodes(&mut |g, id| {
        if gens[g].is_odd() {
            seq.push(id);
        }
    });
    if permutation_parity(&seq) {
        sign = -sign;
    }
    sorted.assign_preorder_ids(&mut 0);
    (sorted, sign)
}

fn sort_children(t: &Term, gens: &[Generator], sign: &mut i32) -> Term {
    match t {
        Term::Leaf(l) => Term::Leaf(*l),
        Term::Node { gen, id, children } => {
            let children: Vec<Term> = children.iter().map(|c| sort_children(c, gens, sign)).collect();
            let g = &gens[*gen];
            if g.symmetry == Symmetry::None {
                return Term::Node { gen: *gen, id: *id, children };
            }
            let mut order: Vec<usize> = (0..children.len()).collect();
            order.sort_by_key(|&i| children[i].min_leaf());
            if g.symmetry == Symmetry::Skew && permutation_parity(&order) {
                *sign = -*sign;
            }
            Term::Node { gen: *gen, id: *id, children: order.into_iter().map(|i| children[i].clone()).collect() }
        }
    }
}

/// Normalize every term of a raw combination.
pub fn normalize_chain(raw: impl IntoIterator<Item = (Term, Rational)>, gens: &[Generator]) -> TermChain {
    let mut out = TermChain::new();
    for (t, c) in raw {
        let (n, s) = normalize(&t, gens);
        let c = if s < 0 { -c } else { c };
        let e = out.entry(n).or_insert_with(Rational::zero);
        *e += &c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// All set partitions of `items` into exactly `k` blocks, blocks ordered by
/// their first element.
pub fn set_partitions(items: &[u8], k: usize) -> Vec<Vec<Vec<u8>>> {
    fn go(items: &[u8], k: usize, acc: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        let Some((&first, rest)) = items.split_first() else {
            if acc.len() == k {
                out.push(acc.clone());
            }
            return;
        };
        if acc.len() + items.len() < k {
            return;
        }
        for i in 0..acc.len() {
            acc[i].push(first);
            go(rest, k, acc, out);
            acc[i].pop();
        }
        if acc.len() < k {
            acc.push(vec![first]);
            go(rest, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, &mut Vec::new(), &mut out);
    out
}

/// Canonical monomials on a leaf set, with an optional extra generator that
/// must occur exactly `marked` times (0 or 1).
pub struct MonomialEnumerator<'a> {
    gens: &'a [Generator],
    marked: Option<usize>,
    memo: HashMap<Vec<u8>, (Vec<Term>, Vec<Term>)>,
}

impl<'a> MonomialEnumerator<'a> {
    pub fn new(gens: &'a [Generator], marked: Option<usize>) -> Self {
        MonomialEnumerator { gens, marked, memo: HashMap::new() }
    }

    /// `(terms without the marked generator, terms with it exactly once)`.
    pub fn on(&mut self, set: &[u8]) -> (Vec<Term>, Vec<Term>) {
        if let Some(r) = self.memo.get(set) {
            return r.clone();
        }
        let mut plain = Vec::new();
        let mut once = Vec::new();
        if set.len() == 1 {
            plain.push(Term::Leaf(set[0]));
        } else {
            for (g, gen) in self.gens.iter().enumerate() {
                if gen.arity > set.len() {
                    continue;
                }
                let is_marked = self.marked == Some(g);
                let mut blockings = set_partitions(set, gen.arity);
                if gen.symmetry == Symmetry::None {
                    blockings = blockings
                        .into_iter()
                        .flat_map(|b| b.into_iter().permutations(gen.arity).collect::<Vec<_>>())
                        .collect();
                }
                for blocks in blockings {
                    let parts: Vec<(Vec<Term>, Vec<Term>)> = blocks.iter().map(|b| self.on(b)).collect();
                    // all children plain
                    for choice in parts.iter().map(|p| p.0.iter()).multi_cartesian_product() {
                        let t = Term::node(g, choice.into_iter().cloned().collect()).with_preorder_ids();
                        if is_marked {
                            once.push(t);
                        } else {
                            plain.push(t);
                        }
                    }
                    if is_marked || self.marked.is_none() {
                        continue;
                    }
                    // exactly one child carries the mark
                    for j in 0..parts.len() {
                        let lists: Vec<&Vec<Term>> =
                            parts.iter().enumerate().map(|(i, p)| if i == j { &p.1 } else { &p.0 }).collect();
                        for choice in lists.iter().map(|p| p.iter()).multi_cartesian_product() {
                            once.push(Term::node(g, choice.into_iter().cloned().collect()).with_preorder_ids());
                        }
                    }
                }
            }
        }
        self.memo.insert(set.to_vec(), (plain.clone(), once.clone()));
        (plain, once)
    }
}

pub const MAX_ARITY: usize = 7;

/// All canonical monomials of arity `n`.
pub fn free_operad_basis(gens: &[Generator], n: usize) -> Result<Vec<Term>, TermError> {
    if n > MAX_ARITY {
        return Err(TermError::Bound { n, max: MAX_ARITY });
    }
    let set: Vec<u8> = (1..=n as u8).collect();
    let mut terms = MonomialEnumerator::new(gens, None).on(&set).0;
    terms.sort();
    Ok(terms)
}

/// Replace the vertex with id `at` in `outer` by `inner`, whose leaf `i` is
/// attached to the `i`-th child of that vertex. The tensor factor of the
/// replaced vertex is replaced by the factors of `inner` in place.
pub fn substitute(outer: &Term, at: usize, inner: &Term) -> Term {
    let width = inner.vertex_count();
    fn shift_outer(t: &Term, at: usize, width: usize) -> Term {
        match t {
            Term::Leaf(l) => Term::Leaf(*l),
            Term::Node { gen, id, children } => Term::Node {
                gen: *gen,
                id: if *id > at { id + width - 1 } else { *id },
                children: children.iter().map(|c| shift_outer(c, at, width)).collect(),
            },
        }
    }
    fn graft(t: &Term, args: &[Term]) -> Term {
        match t {
            Term::Leaf(l) => args[*l as usize - 1].clone(),
            Term::Node { gen, id, children } => {
                Term::Node { gen: *gen, id: *id, children: children.iter().map(|c| graft(c, args)).collect() }
            }
        }
    }
    fn go(t: &Term, at: usize, inner: &Term) -> Term {
        match t {
            Term::Leaf(l) => Term::Leaf(*l),
            Term::Node { id, children, .. } if *id == at => graft(inner, children),
            Term::Node { gen, id, children } => Term::Node {
                gen: *gen,
                id: *id,
                children: children.iter().map(|c| go(c, at, inner)).collect(),
            },
        }
    }
    let shifted = shift_outer(outer, at, width);
    go(&shifted, at, &inner.shift_ids(at))
}

/// Id of the first vertex labelled `gen`.
pub fn find_generator(t: &Term, gen: usize) -> Option<usize> {
    let mut found = None;
    t.visit_nodes(&mut |g, id| {
        if g == gen && found.is_none() {
            found = Some(id);
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu3() -> Vec<Generator> {
        vec![Generator::new("nu3", 3, -1, Symmetry::Skew)]
    }

    #[test]
    fn symmetric_binary_count() {
        let g = vec![Generator::new("mu2", 2, 0, Symmetry::Symmetric)];
        assert_eq!(free_operad_basis(&g, 3).unwrap().len(), 3);
        assert_eq!(free_operad_basis(&g, 4).unwrap().len(), 15);
    }

    #[test]
    fn ternary_skew_count() {
        assert_eq!(free_operad_basis(&nu3(), 5).unwrap().len(), 10);
        assert_eq!(free_operad_basis(&nu3(), 4).unwrap().len(), 0);
        assert!(free_operad_basis(&nu3(), 8).is_err());
    }

    #[test]
    fn skew_normalization_sign() {
        let g = nu3();
        let t = parse_term("nu3(2,1,3)", &g).unwrap();
        let (n, s) = normalize(&t, &g);
        assert_eq!(s, -1);
        assert_eq!(n.display(&g).to_string(), "nu3(1,2,3)");
        let t = parse_term("nu3(nu3(3,4,5),1,2)", &g).unwrap();
        let (n, s) = normalize(&t, &g);
        assert_eq!(n.display(&g).to_string(), "nu3(1,2,nu3(3,4,5))");
        // a cyclic rotation of the three slots is even
        assert_eq!(s, 1);
    }

    #[test]
    fn odd_subterms_anticommute_under_symmetric_vertex() {
        let g = vec![Generator::new("mu2", 2, 0, Symmetry::Symmetric), Generator::new("nu3", 3, -1, Symmetry::Skew)];
        let a = parse_term("mu2(nu3(4,5,6),nu3(1,2,3))", &g).unwrap();
        let (n, s) = normalize(&a, &g);
        assert_eq!(n.display(&g).to_string(), "mu2(nu3(1,2,3),nu3(4,5,6))");
        assert_eq!(s, -1);
    }

    #[test]
    fn partitions() {
        assert_eq!(set_partitions(&[1, 2, 3, 4], 2).len(), 7);
        assert_eq!(set_partitions(&[1, 2, 3, 4, 5], 3).len(), 25);
    }

    #[test]
    fn substitution_grafts_children() {
        let g = vec![Generator::new("mu2", 2, 0, Symmetry::Symmetric), Generator::new("r", 3, 0, Symmetry::None)];
        let outer = parse_term("mu2(r(3,1,4),2)", &g).unwrap();
        let inner = parse_term("mu2(mu2(2,3),1)", &g).unwrap();
        let t = substitute(&outer, 1, &inner);
        let (n, _) = normalize(&t, &g);
        assert_eq!(n.display(&g).to_string(), "mu2(mu2(mu2(1,4),3),2)");
    }
}
