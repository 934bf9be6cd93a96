//! Planar leaf-labelled trees, cells of the associahedra and the mosaic
//! cell complex obtained by gluing them along subtree reflections.
//!
//! A tree with `k` internal vertices indexes a cell of dimension `n-1-k`,
//! the product of the associahedra `K_m` over its vertices taken in planar
//! preorder; a vertex with `m` children contributes a factor of dimension
//! `m-2`. The boundary of `K_m` is oriented by the A∞ rule
//! `∂μ_m = Σ (-1)^{p+qr} μ_{p+1+r} ∘_{p+1} μ_q`, and reordering factors
//! into preorder costs the Koszul sign of the factor dimensions.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::chain::{ChainComplex, ChainGroup};
use crate::exact::{RationalMatrix, SparseVec};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanarTree {
    Leaf(u8),
    Node(Vec<PlanarTree>),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("vertex {vertex} does not exist in a tree with {count} vertices")]
    InvalidVertex { vertex: usize, count: usize },
    #[error("arity must be at least {min}, got {n}")]
    Arity { n: usize, min: usize },
}

/// A signed combination of trees.
pub type Chain = Vec<(i32, PlanarTree)>;

/// Token encoding used for ordering: `(` = 0, `)` = 1, leaf `l` = `l + 1`.
pub type Encoding = Vec<u8>;

impl PlanarTree {
    pub fn node(children: Vec<PlanarTree>) -> Self {
        PlanarTree::Node(children)
    }

    pub fn corolla(n: usize) -> Self {
        PlanarTree::Node((1..=n as u8).map(PlanarTree::Leaf).collect())
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            PlanarTree::Leaf(l) => out.push(*l),
            PlanarTree::Node(cs) => cs.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            PlanarTree::Leaf(_) => 1,
            PlanarTree::Node(cs) => cs.iter().map(PlanarTree::arity).sum(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            PlanarTree::Leaf(_) => 1,
            PlanarTree::Node(cs) => 1 + cs.iter().map(PlanarTree::vertex_count).sum::<usize>(),
        }
    }

    /// Child counts of internal vertices in preorder.
    pub fn internal_arities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_arities(&mut out);
        out
    }

    fn collect_arities(&self, out: &mut Vec<usize>) {
        if let PlanarTree::Node(cs) = self {
            out.push(cs.len());
            cs.iter().for_each(|c| c.collect_arities(out));
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            PlanarTree::Leaf(_) => 0,
            PlanarTree::Node(cs) => 1 + cs.iter().map(PlanarTree::internal_count).sum::<usize>(),
        }
    }

    /// Dimension of the cell: `n - 1 - #internal vertices`.
    pub fn cell_dimension(&self) -> usize {
        self.arity() - 1 - self.internal_count()
    }

    /// Sum of `m - 2` over internal vertices.
    fn factor_degree(&self) -> usize {
        match self {
            PlanarTree::Leaf(_) => 0,
            PlanarTree::Node(cs) => cs.len() - 2 + cs.iter().map(PlanarTree::factor_degree).sum::<usize>(),
        }
    }

    pub fn encode(&self) -> Encoding {
        let mut out = Vec::new();
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut Encoding) {
        match self {
            PlanarTree::Leaf(l) => out.push(l + 1),
            PlanarTree::Node(cs) => {
                out.push(0);
                cs.iter().for_each(|c| c.encode_into(out));
                out.push(1);
            }
        }
    }

    /// Mirror image: every vertex's children reversed.
    pub fn mirrored(&self) -> PlanarTree {
        match self {
            PlanarTree::Leaf(l) => PlanarTree::Leaf(*l),
            PlanarTree::Node(cs) => PlanarTree::Node(cs.iter().rev().map(PlanarTree::mirrored).collect()),
        }
    }

    /// Reflects the maximal subtree at vertex `v`, numbered in preorder over
    /// all vertices (leaves included, root = 0).
    pub fn reflect_at_vertex(&self, v: usize) -> Result<PlanarTree, TreeError> {
        let count = self.vertex_count();
        if v >= count {
            return Err(TreeError::InvalidVertex { vertex: v, count });
        }
        Ok(self.map_at(v, &|t| t.mirrored()))
    }

    fn map_at(&self, v: usize, f: &dyn Fn(&PlanarTree) -> PlanarTree) -> PlanarTree {
        if v == 0 {
            return f(self);
        }
        match self {
            PlanarTree::Leaf(_) => unreachable!("vertex index checked by caller"),
            PlanarTree::Node(cs) => {
                let mut offset = 1;
                let mut out = Vec::with_capacity(cs.len());
                for c in cs {
                    let size = c.vertex_count();
                    if (offset..offset + size).contains(&v) {
                        out.push(c.map_at(v - offset, f));
                    } else {
                        out.push(c.clone());
                    }
                    offset += size;
                }
                PlanarTree::Node(out)
            }
        }
    }

    /// Preorder indices (over all vertices) of internal vertices.
    pub fn internal_vertex_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut next = 0;
        self.collect_internal_indices(&mut next, &mut out);
        out
    }

    fn collect_internal_indices(&self, next: &mut usize, out: &mut Vec<usize>) {
        let me = *next;
        *next += 1;
        if let PlanarTree::Node(cs) = self {
            out.push(me);
            cs.iter().for_each(|c| c.collect_internal_indices(next, out));
        }
    }

    /// Parses the nested-list JSON form, e.g. `[[1,2,3],4]`.
    pub fn from_json(v: &serde_json::Value) -> Option<PlanarTree> {
        match v {
            serde_json::Value::Number(l) => l.as_u64().and_then(|l| u8::try_from(l).ok()).map(PlanarTree::Leaf),
            serde_json::Value::Array(items) => {
                let cs: Option<Vec<_>> = items.iter().map(PlanarTree::from_json).collect();
                cs.filter(|c| c.len() >= 2).map(PlanarTree::Node)
            }
            _ => None,
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf(l) => write!(f, "{l}"),
            PlanarTree::Node(cs) => {
                write!(f, "(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON form: a leaf is its label, a vertex the list of its children.
impl Serialize for PlanarTree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PlanarTree::Leaf(l) => s.serialize_u8(*l),
            PlanarTree::Node(cs) => cs.serialize(s),
        }
    }
}

/// Planar shapes with `n` unlabelled leaves; leaves are numbered `1..=n`
/// left to right as placeholders.
pub fn planar_shapes(n: usize) -> Vec<PlanarTree> {
    fn shapes(n: usize, memo: &mut HashMap<usize, Vec<PlanarTree>>) -> Vec<PlanarTree> {
        if let Some(s) = memo.get(&n) {
            return s.clone();
        }
        let out = if n == 1 {
            vec![PlanarTree::Leaf(0)]
        } else {
            let mut out = Vec::new();
            for comp in compositions(n) {
                if comp.len() < 2 {
                    continue;
                }
                let parts: Vec<Vec<PlanarTree>> = comp.iter().map(|&k| shapes(k, memo)).collect();
                for choice in parts.iter().map(|p| p.iter()).multi_cartesian_product() {
                    out.push(PlanarTree::Node(choice.into_iter().cloned().collect()));
                }
            }
            out
        };
        memo.insert(n, out.clone());
        out
    }
    let mut memo = HashMap::new();
    shapes(n, &mut memo).into_iter().map(|t| relabel(&t, &(1..=n as u8).collect::<Vec<_>>())).collect()
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Replace the leaves, left to right, by `labels`.
pub fn relabel(t: &PlanarTree, labels: &[u8]) -> PlanarTree {
    fn go(t: &PlanarTree, labels: &[u8], next: &mut usize) -> PlanarTree {
        match t {
            PlanarTree::Leaf(_) => {
                *next += 1;
                PlanarTree::Leaf(labels[*next - 1])
            }
            PlanarTree::Node(cs) => PlanarTree::Node(cs.iter().map(|c| go(c, labels, next)).collect()),
        }
    }
    go(t, labels, &mut 0)
}

/// All of `T_n`: planar shapes times leaf labellings.
pub fn enumerate_planar_trees(n: usize) -> Result<Vec<PlanarTree>, TreeError> {
    if n < 1 {
        return Err(TreeError::Arity { n, min: 1 });
    }
    let shapes = planar_shapes(n);
    let perms: Vec<Vec<u8>> = (1..=n as u8).permutations(n).collect();
    Ok(shapes.iter().flat_map(|s| perms.iter().map(move |p| relabel(s, p))).collect())
}

fn koszul_parity(order: &[usize], odd: &[bool]) -> bool {
    let mut parity = false;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] && odd[order[i]] && odd[order[j]] {
                parity = !parity;
            }
        }
    }
    parity
}

/// Orientation sign of the reversal symmetry of `K_m`.
pub fn flip_sign(m: usize) -> i32 {
    if ((m - 1) * (m - 2) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Orientation sign picked up by the cell of `t` under the reflection at
/// vertex `v`: the reversal sign of each reflected vertex factor, times the
/// Koszul sign of the induced reordering of factors.
pub fn reflection_sign(t: &PlanarTree, v: usize) -> i32 {
    let arities = t.internal_arities();
    let idx = t.internal_vertex_indices();
    // tag each internal vertex with its preorder rank, reflect, reread
    let tagged = tag_internal(t);
    let reflected = tagged.map_at(v, &|s| s.mirrored());
    let order: Vec<usize> = reflected.internal_tags();
    let odd: Vec<bool> = arities.iter().map(|m| (m - 2) % 2 == 1).collect();
    let mut sign = if koszul_parity(&order, &odd) { -1 } else { 1 };
    // reflected internal vertices are those inside the subtree at v
    let size = subtree_size(t, v);
    for (rank, &pos) in idx.iter().enumerate() {
        if (v..v + size).contains(&pos) {
            sign *= flip_sign(arities[rank]);
        }
    }
    sign
}

fn subtree_size(t: &PlanarTree, v: usize) -> usize {
    fn find(t: &PlanarTree, v: usize) -> usize {
        if v == 0 {
            return t.vertex_count();
        }
        let PlanarTree::Node(cs) = t else { unreachable!() };
        let mut offset = 1;
        for c in cs {
            let s = c.vertex_count();
            if (offset..offset + s).contains(&v) {
                return find(c, v - offset);
            }
            offset += s;
        }
        unreachable!()
    }
    find(t, v)
}

/// Copy of `t` whose internal vertices remember their preorder rank through
/// an extra leaf `255 - rank` appended as last child (never a real label).
fn tag_internal(t: &PlanarTree) -> TaggedTree {
    fn go(t: &PlanarTree, next: &mut usize) -> TaggedTree {
        match t {
            PlanarTree::Leaf(l) => TaggedTree { tag: None, leaf: *l, children: vec![] },
            PlanarTree::Node(cs) => {
                let me = *next;
                *next += 1;
                TaggedTree { tag: Some(me), leaf: 0, children: cs.iter().map(|c| go(c, next)).collect() }
            }
        }
    }
    go(t, &mut 0)
}

#[derive(Clone)]
struct TaggedTree {
    tag: Option<usize>,
    leaf: u8,
    children: Vec<TaggedTree>,
}

impl TaggedTree {
    fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(TaggedTree::vertex_count).sum::<usize>()
    }

    fn mirrored(&self) -> TaggedTree {
        TaggedTree {
            tag: self.tag,
            leaf: self.leaf,
            children: self.children.iter().rev().map(TaggedTree::mirrored).collect(),
        }
    }

    fn map_at(&self, v: usize, f: &dyn Fn(&TaggedTree) -> TaggedTree) -> TaggedTree {
        if v == 0 {
            return f(self);
        }
        let mut offset = 1;
        let mut out = self.clone();
        for (i, c) in self.children.iter().enumerate() {
            let s = c.vertex_count();
            if (offset..offset + s).contains(&v) {
                out.children[i] = c.map_at(v - offset, f);
            }
            offset += s;
        }
        out
    }

    fn internal_tags(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn go(t: &TaggedTree, out: &mut Vec<usize>) {
            if let Some(tag) = t.tag {
                out.push(tag);
            }
            t.children.iter().for_each(|c| go(c, out));
        }
        go(self, &mut out);
        out
    }
}

/// All codimension-one faces of the cell of `t`, with orientation signs.
pub fn associahedron_boundary(t: &PlanarTree) -> Chain {
    let mut out = Vec::new();
    let mut preceding = 0usize;
    boundary_rec(t, &mut preceding, &mut |sign, face| out.push((sign, face)), &mut Vec::new(), t);
    out
}

/// Walks internal vertices in preorder; `path` locates the current vertex.
fn boundary_rec(
    node: &PlanarTree,
    preceding: &mut usize,
    emit: &mut dyn FnMut(i32, PlanarTree),
    path: &mut Vec<usize>,
    root: &PlanarTree,
) {
    let PlanarTree::Node(cs) = node else { return };
    let m = cs.len();
    // d passes the factors of all earlier vertices
    let base = if *preceding % 2 == 1 { -1 } else { 1 };
    for q in 2..m {
        for p in 0..=m - q {
            let r = m - p - q;
            let mut sign = base * if (p + q * r) % 2 == 1 { -1 } else { 1 };
            // the new inner factor (dim q-2) moves past the subtrees of the
            // first p children
            let between: usize = cs[..p].iter().map(PlanarTree::factor_degree).sum();
            if (q - 2) * between % 2 == 1 {
                sign = -sign;
            }
            let mut children: Vec<PlanarTree> = cs[..p].to_vec();
            children.push(PlanarTree::Node(cs[p..p + q].to_vec()));
            children.extend_from_slice(&cs[p + q..]);
            emit(sign, replace_at_path(root, path, PlanarTree::Node(children)));
        }
    }
    *preceding += m - 2;
    for (i, c) in cs.iter().enumerate() {
        path.push(i);
        boundary_rec(c, preceding, emit, path, root);
        path.pop();
    }
}

pub(crate) fn replace_at_path(t: &PlanarTree, path: &[usize], new: PlanarTree) -> PlanarTree {
    match path.split_first() {
        None => new,
        Some((&i, rest)) => {
            let PlanarTree::Node(cs) = t else { unreachable!() };
            let mut cs = cs.clone();
            cs[i] = replace_at_path(&cs[i], rest, new);
            PlanarTree::Node(cs)
        }
    }
}

/// A reflection class of trees, i.e. one cell of the mosaic complex.
#[derive(Clone, Debug, Serialize)]
pub struct MosaicCell {
    pub representative: PlanarTree,
    #[serde(serialize_with = "ser_encoding")]
    pub class_id: Encoding,
    pub orbit_size: usize,
}

fn ser_encoding<S: Serializer>(e: &Encoding, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&encoding_string(e))
}

pub fn encoding_string(e: &Encoding) -> String {
    e.iter()
        .map(|&t| match t {
            0 => "(".to_string(),
            1 => ")".to_string(),
            l => format!("{} ", l - 1),
        })
        .collect::<String>()
        .replace(" )", ")")
}

/// Orbit of `t` under subtree reflections with the sign of each member
/// relative to `t`. `None` when some member is reached with both signs,
/// i.e. the cell is identified with its own negative.
pub fn reflection_orbit(t: &PlanarTree) -> Option<Vec<(PlanarTree, i32)>> {
    let mut seen: HashMap<PlanarTree, i32> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(t.clone(), 1);
    queue.push_back(t.clone());
    let mut consistent = true;
    while let Some(s) = queue.pop_front() {
        let sign = seen[&s];
        for v in s.internal_vertex_indices() {
            let r = s.reflect_at_vertex(v).unwrap();
            let rs = sign * reflection_sign(&s, v);
            match seen.get(&r) {
                Some(&old) => consistent &= old == rs,
                None => {
                    seen.insert(r.clone(), rs);
                    queue.push_back(r);
                }
            }
        }
    }
    consistent.then(|| seen.into_iter().collect())
}

/// Canonical class form: the orbit member with the least encoding, and the
/// sign of `t` relative to it.
pub fn canonical_class(t: &PlanarTree) -> Option<(PlanarTree, i32)> {
    let orbit = reflection_orbit(t)?;
    orbit.into_iter().min_by(|a, b| a.0.encode().cmp(&b.0.encode()))
}

/// Partition of `T_n` into reflection classes, ordered by encoding.
pub fn mosaic_classes(n: usize) -> Result<Vec<MosaicCell>, TreeError> {
    if n < 2 {
        return Err(TreeError::Arity { n, min: 2 });
    }
    let index = ClassIndex::build(n);
    Ok(index.cells)
}

/// Every tree of `T_n` mapped to its class with a relative sign.
struct ClassIndex {
    cells: Vec<MosaicCell>,
    lookup: HashMap<PlanarTree, (usize, i32)>,
}

impl ClassIndex {
    fn build(n: usize) -> ClassIndex {
        let trees = enumerate_planar_trees(n).unwrap();
        let mut lookup: HashMap<PlanarTree, (usize, i32)> = HashMap::with_capacity(trees.len());
        let mut cells: Vec<(MosaicCell, Vec<(PlanarTree, i32)>)> = Vec::new();
        for t in trees {
            if lookup.contains_key(&t) {
                continue;
            }
            let orbit = reflection_orbit(&t).expect("reflection action is free on cells");
            let (rep, rep_sign) = orbit.iter().min_by(|a, b| a.0.encode().cmp(&b.0.encode())).cloned().unwrap();
            let members: Vec<(PlanarTree, i32)> = orbit.into_iter().map(|(s, sg)| (s, sg * rep_sign)).collect();
            for (s, _) in &members {
                lookup.insert(s.clone(), (usize::MAX, 0));
            }
            let cell = MosaicCell { class_id: rep.encode(), representative: rep, orbit_size: members.len() };
            cells.push((cell, members));
        }
        // deterministic order: by dimension, then encoding
        cells.sort_by(|a, b| {
            (a.0.representative.cell_dimension(), &a.0.class_id).cmp(&(b.0.representative.cell_dimension(), &b.0.class_id))
        });
        for (i, (_, members)) in cells.iter().enumerate() {
            for (s, sg) in members {
                lookup.insert(s.clone(), (i, *sg));
            }
        }
        ClassIndex { cells: cells.into_iter().map(|c| c.0).collect(), lookup }
    }
}

/// Cellular chain complex of the associahedron `K_n` (leaves in order).
pub fn associahedron_chain_complex(n: usize) -> ChainComplex {
    let labels: Vec<u8> = (1..=n as u8).collect();
    let trees: Vec<PlanarTree> = planar_shapes(n).iter().map(|s| relabel(s, &labels)).collect();
    complex_from_cells(n, &trees, |t| Some((t.clone(), 1)))
}

/// Chain complex with basis `cells` (one per degree bucket) and boundary
/// induced by `associahedron_boundary`; `resolve` maps a face to a basis
/// tree and sign.
fn complex_from_cells(
    n: usize,
    cells: &[PlanarTree],
    resolve: impl Fn(&PlanarTree) -> Option<(PlanarTree, i32)> + Sync,
) -> ChainComplex {
    let top = n.saturating_sub(2);
    let mut by_degree: Vec<Vec<PlanarTree>> = vec![Vec::new(); top + 1];
    for t in cells {
        by_degree[t.cell_dimension()].push(t.clone());
    }
    for d in &mut by_degree {
        d.sort_by_key(PlanarTree::encode);
    }
    let index: Vec<HashMap<PlanarTree, usize>> = by_degree
        .iter()
        .map(|d| d.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect())
        .collect();
    let groups = (0..=top)
        .map(|k| {
            let columns: Vec<SparseVec> = by_degree[k]
                .par_iter()
                .map(|t| {
                    if k == 0 {
                        return SparseVec::new();
                    }
                    SparseVec::from_pairs(associahedron_boundary(t).into_iter().filter_map(|(s, f)| {
                        let (rep, sg) = resolve(&f)?;
                        Some((index[k - 1][&rep], ((s * sg) as i64).into()))
                    }))
                })
                .collect();
            let rows = if k == 0 { 0 } else { by_degree[k - 1].len() };
            ChainGroup {
                basis: by_degree[k].iter().map(|t| t.to_string()).collect(),
                boundary: RationalMatrix::from_columns(rows, columns).unwrap(),
            }
        })
        .collect();
    ChainComplex::new(groups).unwrap()
}

/// Cellular chains of `M̄_{0,n+1}(ℝ)`: one cell per reflection class, degree
/// `n-1-#internal`, boundary induced from the associahedra.
pub fn mosaic_chain_complex(n: usize) -> Result<ChainComplex, TreeError> {
    if n < 2 {
        return Err(TreeError::Arity { n, min: 2 });
    }
    let index = ClassIndex::build(n);
    let reps: Vec<PlanarTree> = index.cells.iter().map(|c| c.representative.clone()).collect();
    Ok(complex_from_cells(n, &reps, |f| {
        let (i, sg) = index.lookup[f];
        Some((index.cells[i].representative.clone(), sg))
    }))
}

/// Checks that the boundary is compatible with the identifications: for
/// every tree, the boundary of the tree pushed to classes equals its sign
/// times the boundary of its class representative.
pub fn reflection_is_chain_map(n: usize) -> bool {
    let index = ClassIndex::build(n);
    let push = |t: &PlanarTree| -> HashMap<usize, i32> {
        let mut acc: HashMap<usize, i32> = HashMap::new();
        for (s, f) in associahedron_boundary(t) {
            let (i, sg) = index.lookup[&f];
            *acc.entry(i).or_default() += s * sg;
        }
        acc.retain(|_, v| *v != 0);
        acc
    };
    index.lookup.par_iter().all(|(t, &(i, sg))| {
        let rep = &index.cells[i].representative;
        let a = push(t);
        let mut b = push(rep);
        b.values_mut().for_each(|v| *v *= sg);
        a == b
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(l: u8) -> PlanarTree {
        PlanarTree::Leaf(l)
    }

    fn node(cs: Vec<PlanarTree>) -> PlanarTree {
        PlanarTree::Node(cs)
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_planar_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 18, 264, 5400]);
        let shapes: Vec<usize> = (1..=6).map(|n| planar_shapes(n).len()).collect();
        assert_eq!(shapes, vec![1, 1, 3, 11, 45, 197]);
    }

    #[test]
    fn displayed_reflection_chain() {
        let t = node(vec![node(vec![leaf(1), leaf(2), leaf(3)]), leaf(4)]);
        let r = t.reflect_at_vertex(0).unwrap();
        assert_eq!(r.to_string(), "(4 (3 2 1))");
        // preorder: 0 root, 1 leaf 4, 2 inner vertex
        let rr = r.reflect_at_vertex(2).unwrap();
        assert_eq!(rr.to_string(), "(4 (1 2 3))");
        assert_eq!(t.reflect_at_vertex(1).unwrap().reflect_at_vertex(1).unwrap(), t);
        assert_eq!(t.reflect_at_vertex(2).unwrap(), t.reflect_at_vertex(2).unwrap());
        assert_eq!(t.reflect_at_vertex(4).unwrap(), t);
        assert!(t.reflect_at_vertex(6).is_err());
    }

    #[test]
    fn corolla_boundaries() {
        assert!(associahedron_boundary(&PlanarTree::corolla(2)).is_empty());
        let b = associahedron_boundary(&PlanarTree::corolla(3));
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].0, -b[1].0);
        assert_eq!(associahedron_boundary(&PlanarTree::corolla(4)).len(), 5);
    }

    #[test]
    fn associahedra_are_balls() {
        for n in 2..=6 {
            let c = associahedron_chain_complex(n);
            assert!(c.check_d_squared(), "n = {n}");
            let mut want = vec![0; n - 1];
            want[0] = 1;
            assert_eq!(c.homology_ranks(), want, "n = {n}");
        }
    }

    #[test]
    fn mosaic_small() {
        let c3 = mosaic_classes(3).unwrap();
        assert_eq!(c3.len(), 6);
        assert_eq!(c3.iter().filter(|c| c.representative.internal_count() == 1).count(), 3);
        assert_eq!(mosaic_classes(2).unwrap().len(), 1);
        let m4 = mosaic_chain_complex(4).unwrap();
        assert_eq!(m4.euler_characteristic(), -3);
        for (n, want) in [(3, vec![1, 1]), (4, vec![1, 4, 0])] {
            let c = mosaic_chain_complex(n).unwrap();
            assert!(c.check_d_squared());
            assert_eq!(c.homology_ranks(), want, "n = {n}");
            assert!(reflection_is_chain_map(n));
        }
    }

    #[test]
    fn json_form() {
        let t = node(vec![node(vec![leaf(1), leaf(2), leaf(3)]), leaf(4)]);
        let v: serde_json::Value = serde_json::from_str("[[1,2,3],4]").unwrap();
        assert_eq!(PlanarTree::from_json(&v).unwrap(), t);
    }
}
