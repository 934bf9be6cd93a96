//! Presentations by generators and relations, evaluation into concrete
//! models, and quotient dimensions by rank.
//!
//! The ideal generated by the relations is spanned in arity `n` by all
//! monomials containing one relation vertex, with the relation's inputs in
//! every order. The quotient dimension is `dim F(n) - rank I(n)`.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{Echelon, Rational, RationalMatrix, SparseVec};

use super::assoc::{as_basis, as_invariant_dimension, as_vector, basis_index, AsElement, Flip};
use super::free::{
    chain_add, find_generator, free_operad_basis, normalize, normalize_chain, parse_term, substitute, Generator,
    MonomialEnumerator, Symmetry, Term, TermChain, TermError,
};
use super::pois::{pois_basis, pois_invariant_dimension, pois_vector, PoisElement, PoisMonomial};

#[derive(Debug, thiserror::Error)]
pub enum PresentationError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("invalid presentation JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("relation {name:?} mixes arities {a} and {b}")]
    Inhomogeneous { name: String, a: usize, b: usize },
    #[error("relation {0:?} is empty")]
    EmptyRelation(String),
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error("generator {name:?} has no value in {target:?}")]
    Unassigned { name: String, target: Target },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub arity: usize,
    /// Normalized combination.
    pub terms: TermChain,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct RawTerm {
    coeff: RawCoeff,
    term: String,
}

#[derive(Deserialize)]
struct RawRelation {
    name: String,
    terms: Vec<RawTerm>,
}

#[derive(Deserialize)]
struct RawPresentation {
    name: String,
    generators: Vec<Generator>,
    #[serde(default)]
    relations: Vec<RawRelation>,
}

#[derive(Serialize)]
struct OutTerm {
    coeff: String,
    term: String,
}

#[derive(Serialize)]
struct OutRelation {
    name: String,
    terms: Vec<OutTerm>,
}

#[derive(Serialize)]
struct OutPresentation<'a> {
    name: &'a str,
    generators: &'a [Generator],
    relations: Vec<OutRelation>,
}

impl Relation {
    pub fn new(name: &str, raw: Vec<(Rational, Term)>, gens: &[Generator]) -> Result<Self, PresentationError> {
        let arities: Vec<usize> = raw.iter().map(|(_, t)| t.arity()).unique().collect();
        match arities.as_slice() {
            [] => return Err(PresentationError::EmptyRelation(name.into())),
            [_] => {}
            [a, b, ..] => return Err(PresentationError::Inhomogeneous { name: name.into(), a: *a, b: *b }),
        }
        let terms = normalize_chain(raw.into_iter().map(|(c, t)| (t, c)), gens);
        if terms.is_empty() {
            return Err(PresentationError::EmptyRelation(name.into()));
        }
        Ok(Relation { name: name.into(), arity: arities[0], terms })
    }

    fn parsed(name: &str, raw: &[(i64, &str)], gens: &[Generator]) -> Result<Self, PresentationError> {
        let terms =
            raw.iter().map(|(c, s)| Ok((Rational::from_int(*c), parse_term(s, gens)?))).collect::<Result<_, TermError>>()?;
        Relation::new(name, terms, gens)
    }

    pub fn degree(&self, gens: &[Generator]) -> i32 {
        self.terms.keys().next().map_or(0, |t| t.degree(gens))
    }
}

fn node(g: usize, children: Vec<Term>) -> Term {
    Term::node(g, children)
}

fn leaves(ls: &[u8]) -> Vec<Term> {
    ls.iter().map(|&l| Term::Leaf(l)).collect()
}

fn perm_sign(p: &[u8]) -> i64 {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{σ ∈ S₅} sgn(σ) ν₃(x_σ1, x_σ2, ν₃(x_σ3, x_σ4, x_σ5))`.
fn generalized_jacobi(nu3: usize, gens: &[Generator]) -> Result<Relation, PresentationError> {
    let raw = (1..=5u8)
        .permutations(5)
        .map(|p| {
            let inner = node(nu3, leaves(&p[2..]));
            let t = node(nu3, vec![Term::Leaf(p[0]), Term::Leaf(p[1]), inner]).with_preorder_ids();
            (Rational::from_int(perm_sign(&p)), t)
        })
        .collect();
    Relation::new("generalized_jacobi", raw, gens)
}

/// Jacobi written over the even shuffles of `S₅/(S₂×S₃)`, without signs.
pub fn even_shuffle_jacobi(nu3: usize, gens: &[Generator]) -> Result<Relation, PresentationError> {
    let raw = (1..=5u8)
        .permutations(5)
        .filter(|p| p[0] < p[1] && p[2] < p[3] && p[3] < p[4] && perm_sign(p) == 1)
        .map(|p| {
            let inner = node(nu3, leaves(&p[2..]));
            (Rational::one(), node(nu3, vec![Term::Leaf(p[0]), Term::Leaf(p[1]), inner]).with_preorder_ids())
        })
        .collect();
    Relation::new("even_shuffle_jacobi", raw, gens)
}

pub const PRESET_NAMES: [&str; 8] = ["Com", "Lie", "Pois1", "As", "ComZ2", "LieOdd", "PoisOdd", "AsZ2"];

impl Presentation {
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn preset(name: &str) -> Result<Presentation, PresentationError> {
        use Symmetry::*;
        let mu2 = || Generator::new("mu2", 2, 0, Symmetric);
        let nu2 = || Generator::new("nu2", 2, 0, Skew);
        let mu3 = || Generator::new("mu3", 3, 0, Symmetric);
        let nu3 = || Generator::new("nu3", 3, -1, Skew);
        let assoc = [(1, "mu2(mu2(1,2),3)"), (-1, "mu2(1,mu2(2,3))")];
        let jacobi = [(1, "nu2(nu2(1,2),3)"), (1, "nu2(nu2(2,3),1)"), (1, "nu2(nu2(3,1),2)")];
        let leibniz = [(1, "nu2(mu2(1,2),3)"), (-1, "mu2(1,nu2(2,3))"), (-1, "mu2(nu2(1,3),2)")];
        let cubic_leibniz = [
            (1, "nu2(mu3(1,2,3),4)"),
            (-1, "mu3(1,2,nu2(3,4))"),
            (-1, "mu3(1,nu2(2,4),3)"),
            (-1, "mu3(nu2(1,4),2,3)"),
        ];
        let odd_leibniz = [(1, "nu3(mu2(1,2),3,4)"), (-1, "mu2(1,nu3(2,3,4))"), (-1, "mu2(nu3(1,3,4),2)")];
        let p = |name: &str, generators: Vec<Generator>, rels: &[(&str, &[(i64, &str)])]| {
            let relations =
                rels.iter().map(|(n, r)| Relation::parsed(n, r, &generators)).collect::<Result<Vec<_>, _>>()?;
            Ok::<_, PresentationError>(Presentation { name: name.into(), generators, relations })
        };
        match name {
            "Com" => p(name, vec![mu2()], &[("associativity", &assoc)]),
            "Lie" => p(name, vec![nu2()], &[("jacobi", &jacobi)]),
            "Pois1" => {
                p(name, vec![mu2(), nu2()], &[("associativity", &assoc), ("jacobi", &jacobi), ("leibniz", &leibniz)])
            }
            "As" => p(
                name,
                vec![Generator::new("mu", 2, 0, None)],
                &[("associativity", &[(1, "mu(mu(1,2),3)"), (-1, "mu(1,mu(2,3))")])],
            ),
            "ComZ2" => p(
                name,
                vec![mu3()],
                &[("all_quadratic_equal", &[(1, "mu3(mu3(1,2,4),3,5)"), (-1, "mu3(mu3(1,2,3),4,5)")])],
            ),
            "LieOdd" => {
                let mut pr = p(name, vec![nu3()], &[])?;
                pr.relations.push(generalized_jacobi(0, &pr.generators)?);
                Ok(pr)
            }
            "PoisOdd" => {
                let mut pr = p(name, vec![mu2(), nu3()], &[("associativity", &assoc), ("leibniz", &odd_leibniz)])?;
                pr.relations.push(generalized_jacobi(1, &pr.generators)?);
                Ok(pr)
            }
            "AsZ2" => p(name, vec![nu2(), mu3()], &[("jacobi", &jacobi), ("leibniz", &cubic_leibniz)]),
            _ => Err(PresentationError::UnknownPreset(name.into())),
        }
    }

    pub fn from_json(s: &str) -> Result<Presentation, PresentationError> {
        let raw: RawPresentation = serde_json::from_str(s)?;
        let generators = raw.generators;
        let relations = raw
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .terms
                    .iter()
                    .map(|t| {
                        let c = match &t.coeff {
                            RawCoeff::Int(i) => Rational::from_int(*i),
                            RawCoeff::Text(s) => {
                                s.parse().map_err(|_| PresentationError::Coefficient(s.clone()))?
                            }
                        };
                        Ok((c, parse_term(&t.term, &generators)?))
                    })
                    .collect::<Result<Vec<_>, PresentationError>>()?;
                Relation::new(&r.name, terms, &generators)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation { name: raw.name, generators, relations })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let relations = self
            .relations
            .iter()
            .map(|r| OutRelation {
                name: r.name.clone(),
                terms: r
                    .terms
                    .iter()
                    .map(|(t, c)| OutTerm { coeff: c.to_string(), term: t.display(&self.generators).to_string() })
                    .collect(),
            })
            .collect();
        serde_json::to_value(OutPresentation { name: &self.name, generators: &self.generators, relations }).unwrap()
    }

    /// Spanning set of the ideal in arity `n`, as normalized chains.
    pub fn ideal_spanning_set(&self, n: usize) -> Result<Vec<TermChain>, PresentationError> {
        free_operad_basis(&self.generators, n)?;
        let set: Vec<u8> = (1..=n as u8).collect();
        let mut out = Vec::new();
        for rel in &self.relations {
            if rel.arity > n {
                continue;
            }
            let mut gens = self.generators.clone();
            gens.push(Generator::new("R", rel.arity, rel.degree(&self.generators), Symmetry::None));
            let marked = gens.len() - 1;
            let monomials = MonomialEnumerator::new(&gens, Some(marked)).on(&set).1;
            let expanded: Vec<TermChain> = monomials
                .par_iter()
                .map(|m| {
                    let at = find_generator(m, marked).expect("marked vertex");
                    let mut chain = TermChain::new();
                    for (t, c) in &rel.terms {
                        let (nt, s) = normalize(&substitute(m, at, t), &self.generators);
                        chain_add(&mut chain, nt, &if s < 0 { -c } else { c.clone() });
                    }
                    chain
                })
                .filter(|c| !c.is_empty())
                .collect();
            out.extend(expanded);
        }
        Ok(out)
    }
}

pub fn chain_vector(chain: &TermChain, index: &HashMap<Term, usize>) -> SparseVec {
    SparseVec::from_pairs(chain.iter().map(|(t, c)| (index[t], c.clone())))
}

pub fn term_index(basis: &[Term]) -> HashMap<Term, usize> {
    basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Echelon form of `I(n)` in the coordinates of `free_operad_basis(n)`.
pub fn ideal_echelon(p: &Presentation, n: usize) -> Result<(Vec<Term>, Echelon), PresentationError> {
    let basis = free_operad_basis(&p.generators, n)?;
    let index = term_index(&basis);
    let mut ech = Echelon::new();
    for chain in p.ideal_spanning_set(n)? {
        ech.insert(chain_vector(&chain, &index));
    }
    Ok((basis, ech))
}

pub fn ideal_rank(p: &Presentation, n: usize) -> Result<usize, PresentationError> {
    Ok(ideal_echelon(p, n)?.1.rank())
}

/// `dim F(n) - rank I(n)`.
pub fn quotient_dimension(p: &Presentation, n: usize) -> Result<usize, PresentationError> {
    let (basis, ech) = ideal_echelon(p, n)?;
    Ok(basis.len() - ech.rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    As,
    Pois1,
    Com,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    As(AsElement),
    Pois(PoisElement),
    Com(Rational),
}

fn unassigned(g: &Generator, target: Target) -> PresentationError {
    PresentationError::Unassigned { name: g.name.clone(), target }
}

/// Image of a generator in `As`, on letters `1..arity`.
pub fn as_generator_value(name: &str) -> Option<AsElement> {
    let w = |ws: &[(&[u8], i64)]| AsElement::from_terms(ws.iter().map(|(w, c)| (w.to_vec(), Rational::from_int(*c))));
    Some(match name {
        "mu" => w(&[(&[1, 2], 1)]),
        "mu2" => w(&[(&[1, 2], 1), (&[2, 1], 1)]),
        "nu2" => w(&[(&[1, 2], 1), (&[2, 1], -1)]),
        "mu3" => AsElement::from_terms(as_basis(3).into_iter().map(|p| (p, Rational::one()))),
        _ => return None,
    })
}

fn eval_as(t: &Term, gens: &[Generator]) -> Result<AsElement, PresentationError> {
    match t {
        Term::Leaf(l) => Ok(AsElement::word(&[*l])),
        Term::Node { gen, children, .. } => {
            let g = &gens[*gen];
            let v = as_generator_value(&g.name).ok_or_else(|| unassigned(g, Target::As))?;
            let args = children.iter().map(|c| eval_as(c, gens)).collect::<Result<Vec<_>, _>>()?;
            Ok(v.substitute(&args))
        }
    }
}

fn eval_pois(t: &Term, gens: &[Generator]) -> Result<PoisElement, PresentationError> {
    match t {
        Term::Leaf(l) => Ok(PoisElement::variable(*l)),
        Term::Node { gen, children, .. } => {
            let g = &gens[*gen];
            let args = children.iter().map(|c| eval_pois(c, gens)).collect::<Result<Vec<_>, _>>()?;
            match g.name.as_str() {
                "mu2" | "mu3" => Ok(args[1..].iter().fold(args[0].clone(), |acc, a| acc.product(a))),
                "nu2" => Ok(args[0].bracket(&args[1])),
                _ => Err(unassigned(g, Target::Pois1)),
            }
        }
    }
}

fn eval_com(t: &Term, gens: &[Generator]) -> Result<Rational, PresentationError> {
    if let Term::Node { gen, children, .. } = t {
        let g = &gens[*gen];
        if !matches!(g.name.as_str(), "mu" | "mu2" | "mu3") {
            return Err(unassigned(g, Target::Com));
        }
        for c in children {
            eval_com(c, gens)?;
        }
    }
    Ok(Rational::one())
}

/// Operadic evaluation: `mu ↦ x₁x₂`, `mu2 ↦ x₁x₂+x₂x₁`, `nu2 ↦ x₁x₂-x₂x₁`,
/// `mu3 ↦ Σ_{S₃}` in `As`; product, bracket and triple product in `Pois₁`;
/// every product is `1` in `Com`.
pub fn evaluate(t: &Term, gens: &[Generator], target: Target) -> Result<Value, PresentationError> {
    Ok(match target {
        Target::As => Value::As(eval_as(t, gens)?),
        Target::Pois1 => Value::Pois(eval_pois(t, gens)?),
        Target::Com => Value::Com(eval_com(t, gens)?),
    })
}

/// Coordinates of target elements of arity `n`.
pub struct TargetCoordinates {
    words: BTreeMap<Vec<u8>, usize>,
    pois: BTreeMap<PoisMonomial, usize>,
    pub dim: usize,
}

impl TargetCoordinates {
    pub fn new(target: Target, n: usize) -> Self {
        let mut c = TargetCoordinates { words: BTreeMap::new(), pois: BTreeMap::new(), dim: 1 };
        match target {
            Target::As => {
                c.words = basis_index(&as_basis(n));
                c.dim = c.words.len();
            }
            Target::Pois1 => {
                c.pois = pois_basis(n).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
                c.dim = c.pois.len();
            }
            Target::Com => {}
        }
        c
    }

    pub fn vector(&self, v: &Value) -> SparseVec {
        match v {
            Value::As(e) => as_vector(e, &self.words),
            Value::Pois(e) => pois_vector(e, &self.pois),
            Value::Com(c) => SparseVec::from_pairs([(0, c.clone())]),
        }
    }
}

/// Columns: evaluations of `terms`.
pub fn evaluation_matrix(
    terms: &[Term],
    gens: &[Generator],
    target: Target,
    n: usize,
) -> Result<RationalMatrix, PresentationError> {
    let coords = TargetCoordinates::new(target, n);
    let columns = terms
        .par_iter()
        .map(|t| Ok(coords.vector(&evaluate(t, gens, target)?)))
        .collect::<Result<Vec<_>, PresentationError>>()?;
    Ok(RationalMatrix::from_columns(coords.dim, columns).unwrap())
}

/// Basis of the kernel of evaluation on the free operad in arity `n`.
pub fn relation_kernel(p: &Presentation, target: Target, n: usize) -> Result<Vec<TermChain>, PresentationError> {
    let basis = free_operad_basis(&p.generators, n)?;
    let m = evaluation_matrix(&basis, &p.generators, target, n)?;
    Ok(m.kernel_basis()
        .into_iter()
        .map(|v| v.entries().iter().map(|(i, c)| (basis[*i].clone(), c.clone())).collect())
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperadModel {
    As,
    Pois1,
}

/// Dimension of the fixed space of the involution.
pub fn invariant_dimension(model: OperadModel, variant: Flip, n: usize) -> usize {
    match model {
        OperadModel::As => as_invariant_dimension(variant, n),
        OperadModel::Pois1 => pois_invariant_dimension(variant, n),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub n: usize,
    pub free_count: usize,
    pub image_rank: usize,
    pub invariant_dim: usize,
    pub image_is_invariant: bool,
    pub kernel_dim: usize,
}

/// Image of the `{ν₂, μ₃}`-free operad in `As(n)` against the invariants of
/// the signed flip.
pub fn as_z2_generation(n: usize) -> Result<GenerationReport, PresentationError> {
    let p = Presentation::preset("AsZ2")?;
    let basis = free_operad_basis(&p.generators, n)?;
    let m = evaluation_matrix(&basis, &p.generators, Target::As, n)?;
    let image_is_invariant = basis.iter().all(|t| {
        let Ok(Value::As(e)) = evaluate(t, &p.generators, Target::As) else { return false };
        e.tau(Flip::SignedFlip) == e
    });
    let image_rank = m.rank();
    Ok(GenerationReport {
        n,
        free_count: basis.len(),
        image_rank,
        invariant_dim: as_invariant_dimension(Flip::SignedFlip, n),
        image_is_invariant,
        kernel_dim: basis.len() - image_rank,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Eq11Report {
    /// `μ₃(μ₃(x₁,x₂,x₄),x₃,x₅) - μ₃(μ₃(x₁,x₂,x₃),x₄,x₅)` evaluated in `As(5)`.
    pub lhs_nonzero: bool,
    /// The evaluated left side lies in the span of evaluated monomials with
    /// at least three vertices.
    pub in_higher_image: bool,
    /// Some kernel element of the evaluation has the left side as its
    /// two-vertex part.
    pub kernel_witness: bool,
    pub higher_monomials: usize,
    /// The left side with all inputs equal.
    pub diagonal_vanishes: bool,
    /// Left side at `(a,a,a,b,b)`, over the ten words with three `a` and two `b`.
    pub lhs_at_aaabb: Vec<(String, Rational)>,
    /// `3μ₃([a,b],[a,b],a) + 6μ₃([a,[a,b]],a,b) + 6/5[b,[a,[a,[a,b]]]] + 18/5[a,[b,[a,[b,a]]]]`
    /// over the same words.
    pub cubic_candidate_at_aaabb: Vec<(String, Rational)>,
}

fn ab_words() -> Vec<Vec<u8>> {
    (0..5).combinations(2).map(|bs| (0..5).map(|i| if bs.contains(&i) { 2 } else { 1 }).collect()).sorted().collect()
}

fn ab_report(e: &AsElement) -> Vec<(String, Rational)> {
    ab_words()
        .into_iter()
        .map(|w| {
            let s: String = w.iter().map(|&l| if l == 1 { 'a' } else { 'b' }).collect();
            (s, e.terms.get(&w).cloned().unwrap_or_else(Rational::zero))
        })
        .collect()
}

fn cubic_candidate() -> AsElement {
    let nu = |x: &AsElement, y: &AsElement| as_generator_value("nu2").unwrap().substitute(&[x.clone(), y.clone()]);
    let mu = |x: &AsElement, y: &AsElement, z: &AsElement| {
        as_generator_value("mu3").unwrap().substitute(&[x.clone(), y.clone(), z.clone()])
    };
    let (a, b) = (AsElement::word(&[1]), AsElement::word(&[2]));
    let ab = nu(&a, &b);
    let t1 = mu(&ab, &ab, &a).scale(&Rational::from_int(3));
    let t2 = mu(&nu(&a, &ab), &a, &b).scale(&Rational::from_int(6));
    let t3 = nu(&b, &nu(&a, &nu(&a, &ab))).scale(&Rational::new(6, 5));
    let t4 = nu(&a, &nu(&b, &nu(&a, &nu(&b, &a)))).scale(&Rational::new(18, 5));
    t1.add(&t2).add(&t3).add(&t4)
}

/// Checks that the two-vertex relation between `μ₃`-composites in `As(5)`
/// is corrected by monomials with at least one `ν₂`.
pub fn verify_eq11_shape() -> Result<Eq11Report, PresentationError> {
    let p = Presentation::preset("AsZ2")?;
    let gens = &p.generators;
    let lhs_terms = [(1, "mu3(mu3(1,2,4),3,5)"), (-1, "mu3(mu3(1,2,3),4,5)")];
    let mut lhs = AsElement::zero();
    let mut lhs_chain = Vec::new();
    for (c, s) in lhs_terms {
        let t = parse_term(s, gens)?;
        let Value::As(e) = evaluate(&t, gens, Target::As)? else { unreachable!() };
        lhs = lhs.add(&e.scale(&Rational::from_int(c)));
        lhs_chain.push((t, Rational::from_int(c)));
    }
    let basis = free_operad_basis(gens, 5)?;
    let higher: Vec<Term> = basis.iter().filter(|t| t.vertex_count() >= 3).cloned().collect();
    let m = evaluation_matrix(&higher, gens, Target::As, 5)?;
    let coords = TargetCoordinates::new(Target::As, 5);
    let in_higher_image = m.image_membership(&coords.vector(&Value::As(lhs.clone()))).unwrap();

    // project the evaluation kernel onto two-vertex coordinates
    let index = term_index(&basis);
    let full = evaluation_matrix(&basis, gens, Target::As, 5)?;
    let quadratic = |v: &SparseVec| {
        SparseVec::from_pairs(v.entries().iter().filter(|(i, _)| basis[*i].vertex_count() == 2).cloned())
    };
    let mut proj = Echelon::new();
    for k in full.kernel_basis() {
        proj.insert(quadratic(&k));
    }
    let target = chain_vector(&normalize_chain(lhs_chain, gens), &index);
    let kernel_witness = proj.contains(&target);

    Ok(Eq11Report {
        lhs_nonzero: !lhs.is_zero(),
        in_higher_image,
        kernel_witness,
        higher_monomials: higher.len(),
        diagonal_vanishes: lhs.specialize(&|_| 1).is_zero(),
        lhs_at_aaabb: ab_report(&lhs.specialize(&|l| if l <= 3 { 1 } else { 2 })),
        cubic_candidate_at_aaabb: ab_report(&cubic_candidate()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_load() {
        for name in PRESET_NAMES {
            let p = Presentation::preset(name).unwrap();
            let back = Presentation::from_json(&p.to_json().to_string()).unwrap();
            assert_eq!(back.relations, p.relations, "{name}");
        }
        assert!(Presentation::preset("Foo").is_err());
    }

    #[test]
    fn displayed_evaluations() {
        let p = Presentation::preset("AsZ2").unwrap();
        let t = parse_term("nu2(1,2)", &p.generators).unwrap();
        let want = as_generator_value("nu2").unwrap();
        assert_eq!(evaluate(&t, &p.generators, Target::As).unwrap(), Value::As(want));
        let t = parse_term("mu3(1,2,3)", &p.generators).unwrap();
        let Value::As(e) = evaluate(&t, &p.generators, Target::As).unwrap() else { panic!() };
        assert_eq!(e.terms.len(), 6);
        let q = Presentation::preset("Pois1").unwrap();
        assert!(relation_kernel(&q, Target::Pois1, 3).unwrap().len() >= 2);
        let lie_odd = Presentation::preset("LieOdd").unwrap();
        let t = parse_term("nu3(1,2,3)", &lie_odd.generators).unwrap();
        assert!(matches!(evaluate(&t, &lie_odd.generators, Target::As), Err(PresentationError::Unassigned { .. })));
    }

    #[test]
    fn relations_hold_in_models() {
        let q = Presentation::preset("Pois1").unwrap();
        let coords = TargetCoordinates::new(Target::Pois1, 3);
        for r in &q.relations {
            let mut total = SparseVec::new();
            for (t, c) in &r.terms {
                total = total.add(&coords.vector(&evaluate(t, &q.generators, Target::Pois1).unwrap()).scaled(c));
            }
            assert!(total.is_zero(), "{}", r.name);
        }
    }

    #[test]
    fn com_kernel() {
        let p = Presentation::preset("Com").unwrap();
        assert_eq!(relation_kernel(&p, Target::Com, 3).unwrap().len(), 2);
        assert_eq!(quotient_dimension(&p, 3).unwrap(), 1);
        assert_eq!(quotient_dimension(&p, 4).unwrap(), 1);
    }

    #[test]
    fn classical_quotients() {
        let lie = Presentation::preset("Lie").unwrap();
        assert_eq!(quotient_dimension(&lie, 4).unwrap(), 6);
        let pois = Presentation::preset("Pois1").unwrap();
        assert_eq!(quotient_dimension(&pois, 4).unwrap(), 24);
        let as_ = Presentation::preset("As").unwrap();
        assert_eq!(quotient_dimension(&as_, 4).unwrap(), 24);
        let com_z2 = Presentation::preset("ComZ2").unwrap();
        assert_eq!(quotient_dimension(&com_z2, 5).unwrap(), 1);
    }

    #[test]
    fn odd_quotients() {
        let lie_odd = Presentation::preset("LieOdd").unwrap();
        assert_eq!(free_operad_basis(&lie_odd.generators, 5).unwrap().len(), 10);
        assert_eq!(quotient_dimension(&lie_odd, 3).unwrap(), 1);
        assert_eq!(quotient_dimension(&lie_odd, 5).unwrap(), 9);
        let pois_odd = Presentation::preset("PoisOdd").unwrap();
        let dims: Vec<usize> = (1..=5).map(|n| quotient_dimension(&pois_odd, n).unwrap()).collect();
        assert_eq!(dims, vec![1, 1, 2, 5, 20]);
    }

    #[test]
    fn as_z2_in_low_arity() {
        for n in 2..=4 {
            let r = as_z2_generation(n).unwrap();
            assert!(r.image_is_invariant);
            assert_eq!(r.image_rank, r.invariant_dim);
        }
        let r = as_z2_generation(4).unwrap();
        assert_eq!(r.free_count, 25);
        assert_eq!(r.kernel_dim, 13);
        let p = Presentation::preset("AsZ2").unwrap();
        assert_eq!(ideal_rank(&p, 4).unwrap(), 13);
    }
}
