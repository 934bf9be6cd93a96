//! The coproduct `Δ(μ₂) = μ₂⊗μ₂`,
//! `Δ(ν₃) = μ₂(μ₂(-,-),-)⊗ν₃ + ν₃⊗μ₂(μ₂(-,-),-)` on the free operad of the
//! odd Poisson presentation, and the check that it preserves the ideal.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{Echelon, Rational, SparseVec};

use super::free::{chain_add, normalize, parse_term, substitute, Term, TermChain};
use super::presentation::{chain_vector, ideal_echelon, Presentation, PresentationError};

/// `Σ c · left ⊗ right` over pairs of normalized terms.
pub type TensorChain = BTreeMap<(Term, Term), Rational>;

fn node_ids(t: &Term) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    t.visit_nodes(&mut |g, id| out.push((id, g)));
    out.sort();
    out
}

/// `Δ(t)` with the Koszul sign `(-1)^{Σ_{i<j} |b_i||a_j|}` of regrouping
/// `⊗_i (a_i ⊗ b_i)` into `(⊗ a_i) ⊗ (⊗ b_i)`.
fn coproduct_term(t: &Term, p: &Presentation) -> TensorChain {
    let mu2 = p.generator_index("mu2").expect("mu2");
    let nu3 = p.generator_index("nu3").expect("nu3");
    let gens = &p.generators;
    let triple = parse_term("mu2(mu2(1,2),3)", gens).unwrap();
    let corolla = parse_term("nu3(1,2,3)", gens).unwrap();
    let vertices = node_ids(t);
    let nu_positions: Vec<usize> = vertices.iter().filter(|(_, g)| *g == nu3).map(|(id, _)| *id).collect();
    debug_assert!(vertices.iter().all(|(_, g)| *g == mu2 || *g == nu3));
    let k = nu_positions.len();
    let mut out = TensorChain::new();
    for mask in 0..1u32 << k {
        // bit set: ν₃ goes to the right factor at that vertex
        let right_odd: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
        let mut sign_odd = false;
        for i in 0..k {
            for j in i + 1..k {
                // b_i odd and a_j odd
                if right_odd[i] && !right_odd[j] {
                    sign_odd = !sign_odd;
                }
            }
        }
        let mut left = t.clone();
        let mut right = t.clone();
        for i in (0..k).rev() {
            let at = nu_positions[i];
            if right_odd[i] {
                left = substitute(&left, at, &triple);
                right = substitute(&right, at, &corolla);
            } else {
                left = substitute(&left, at, &corolla);
                right = substitute(&right, at, &triple);
            }
        }
        let (l, sl) = normalize(&left, gens);
        let (r, sr) = normalize(&right, gens);
        let s = if sign_odd { -1 } else { 1 } * sl * sr;
        let e = out.entry((l, r)).or_insert_with(Rational::zero);
        *e += &Rational::from_int(s as i64);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn coproduct(chain: &TermChain, p: &Presentation) -> TensorChain {
    let mut out = TensorChain::new();
    for (t, c) in chain {
        for (k, x) in coproduct_term(t, p) {
            let e = out.entry(k).or_insert_with(Rational::zero);
            *e += &(c * &x);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub n: usize,
    pub ideal_elements: usize,
    pub failures: usize,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `(π⊗π)Δ(r) = 0` for every spanning element `r` of the ideal in arity
/// `n`, where `π` is reduction modulo the ideal.
pub fn hopf_coideal_report(n: usize) -> Result<HopfReport, PresentationError> {
    let p = Presentation::preset("PoisOdd")?;
    let (basis, ech) = ideal_echelon(&p, n)?;
    let index: HashMap<Term, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let spanning = p.ideal_spanning_set(n)?;
    let reduce = |t: &Term, ech: &Echelon| -> SparseVec {
        let mut c = TermChain::new();
        chain_add(&mut c, t.clone(), &Rational::one());
        ech.reduce_full(&chain_vector(&c, &index))
    };
    let failures = spanning
        .par_iter()
        .filter(|r| {
            let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
            for ((l, rt), c) in coproduct(r, &p) {
                let (vl, vr) = (reduce(&l, &ech), reduce(&rt, &ech));
                for (i, x) in vl.entries() {
                    for (j, y) in vr.entries() {
                        let e = acc.entry((*i, *j)).or_insert_with(Rational::zero);
                        *e += &(&c * &(x * y));
                    }
                }
            }
            acc.values().any(|c| !c.is_zero())
        })
        .count();
    Ok(HopfReport { n, ideal_elements: spanning.len(), failures })
}

pub fn check_hopf_coideal(n: usize) -> Result<bool, PresentationError> {
    Ok(hopf_coideal_report(n)?.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_of_generators() {
        let p = Presentation::preset("PoisOdd").unwrap();
        let t = parse_term("nu3(1,2,3)", &p.generators).unwrap();
        assert_eq!(coproduct_term(&t, &p).len(), 2);
        let t = parse_term("mu2(1,2)", &p.generators).unwrap();
        assert_eq!(coproduct_term(&t, &p).len(), 1);
    }

    #[test]
    fn low_arities() {
        for n in 2..=4 {
            assert!(check_hopf_coideal(n).unwrap(), "arity {n}");
        }
    }
}
