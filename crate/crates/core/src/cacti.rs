//! Interval reversals `s_pq` in `S_n` and the cacti relations they satisfy.
//!
//! Permutations are in one-line notation, 1-based values in a 0-based vec.
//! Words compose left to right: the first letter is applied first, so the
//! composite of `(a, b)` is `i ↦ b(a(i))`.

use serde::Serialize;

pub type Perm = Vec<usize>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CactiError {
    #[error("generator s_{p}{q} is out of range for n = {n}")]
    OutOfRange { n: usize, p: usize, q: usize },
    #[error("cannot parse generator {0:?}; expected \"p-q\"")]
    Parse(String),
}

/// One generator `s_pq`, `1 ≤ p < q ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Generator {
    pub p: usize,
    pub q: usize,
}

pub type CactiWord = Vec<Generator>;

pub fn identity(n: usize) -> Perm {
    (1..=n).collect()
}

pub fn spq_permutation(n: usize, p: usize, q: usize) -> Result<Perm, CactiError> {
    if !(1 <= p && p < q && q <= n) {
        return Err(CactiError::OutOfRange { n, p, q });
    }
    Ok((1..=n).map(|i| if (p..=q).contains(&i) { p + q - i } else { i }).collect())
}

/// `a` first, then `b`.
pub fn then(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&i| b[i - 1]).collect()
}

pub fn word_permutation(n: usize, w: &[Generator]) -> Result<Perm, CactiError> {
    w.iter().try_fold(identity(n), |acc, g| Ok(then(&acc, &spq_permutation(n, g.p, g.q)?)))
}

pub fn is_pure(w: &[Generator], n: usize) -> Result<bool, CactiError> {
    Ok(word_permutation(n, w)? == identity(n))
}

/// Parses `"1-2,2-4"`. An empty string is the empty word.
pub fn parse_word(s: &str) -> Result<CactiWord, CactiError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (p, q) = t.split_once('-').ok_or_else(|| CactiError::Parse(t.to_string()))?;
            let p = p.trim().parse().map_err(|_| CactiError::Parse(t.to_string()))?;
            let q = q.trim().parse().map_err(|_| CactiError::Parse(t.to_string()))?;
            Ok(Generator { p, q })
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub involutions: usize,
    pub disjoint_pairs: usize,
    pub nested_pairs: usize,
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn generators(n: usize) -> Vec<Generator> {
    (1..=n).flat_map(|p| (p + 1..=n).map(move |q| Generator { p, q })).collect()
}

/// Checks every instance of the three relation families in `S_n`:
/// `s_pq² = 1`; `s_pq s_kl = s_kl s_pq` for disjoint intervals;
/// `s_pq s_kl = s_{p+q-l, p+q-k} s_pq` for `[k,l] ⊂ [p,q]`.
pub fn verify_cacti_relations(n: usize) -> RelationReport {
    let s = |g: Generator| spq_permutation(n, g.p, g.q).unwrap();
    let mut rep = RelationReport { n, ..Default::default() };
    let gens = generators(n);
    for &g in &gens {
        rep.involutions += 1;
        if then(&s(g), &s(g)) != identity(n) {
            rep.violations.push(format!("s_{}{} is not an involution", g.p, g.q));
        }
    }
    for &a in &gens {
        for &b in &gens {
            if a.q < b.p || b.q < a.p {
                rep.disjoint_pairs += 1;
                if then(&s(a), &s(b)) != then(&s(b), &s(a)) {
                    rep.violations.push(format!("s_{}{} and s_{}{} do not commute", a.p, a.q, b.p, b.q));
                }
            } else if a.p <= b.p && b.q <= a.q && a != b {
                rep.nested_pairs += 1;
                let c = Generator { p: a.p + a.q - b.q, q: a.p + a.q - b.p };
                if then(&s(a), &s(b)) != then(&s(c), &s(a)) {
                    rep.violations.push(format!(
                        "s_{}{} s_{}{} != s_{}{} s_{}{}",
                        a.p, a.q, b.p, b.q, c.p, c.q, a.p, a.q
                    ));
                }
            }
        }
    }
    rep
}

/// Position permutation swapping the adjacent blocks `[start, start+a)` and
/// `[start+a, start+a+b)` (1-based), as the arrangement map
/// `new[i] = old[perm[i]]`.
fn block_swap(n: usize, start: usize, a: usize, b: usize) -> Perm {
    let mut perm = identity(n);
    for i in 0..b {
        perm[start - 1 + i] = start + a + i;
    }
    for i in 0..a {
        perm[start - 1 + b + i] = start + i;
    }
    perm
}

/// Realizes `s_pq` as the chain of commutors
/// `c_{(X_{q-1}…X_p), X_q} ∘ … ∘ c_{X_{p+1}X_p, X_{p+2}} ∘ c_{X_p, X_{p+1}}`:
/// at step `j` the already reversed prefix of length `j` is swapped with the
/// next factor. Returns whether the composite equals `s_pq`.
pub fn commutor_factorization_check(n: usize, p: usize, q: usize) -> Result<bool, CactiError> {
    let target = spq_permutation(n, p, q)?;
    let mut arrangement = identity(n);
    for j in 1..=q - p {
        let swap = block_swap(n, p, j, 1);
        arrangement = swap.iter().map(|&i| arrangement[i - 1]).collect();
    }
    Ok(arrangement == target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_images() {
        assert_eq!(spq_permutation(3, 1, 3).unwrap(), vec![3, 2, 1]);
        assert_eq!(spq_permutation(5, 2, 4).unwrap(), vec![1, 4, 3, 2, 5]);
        assert!(spq_permutation(3, 2, 2).is_err());
        assert!(spq_permutation(3, 1, 4).is_err());
    }

    #[test]
    fn small_relations() {
        let s = |p, q| spq_permutation(4, p, q).unwrap();
        assert_eq!(then(&s(1, 3), &s(1, 2)), then(&s(2, 3), &s(1, 3)));
        assert_eq!(then(&s(1, 2), &s(3, 4)), then(&s(3, 4), &s(1, 2)));
        for n in 2..=8 {
            let r = verify_cacti_relations(n);
            assert!(r.passed(), "{:?}", r.violations);
        }
    }

    #[test]
    fn left_to_right_is_pinned() {
        // s12 then s23 sends 1 -> 2 -> 3
        let w = parse_word("1-2,2-3").unwrap();
        assert_eq!(word_permutation(3, &w).unwrap(), vec![3, 1, 2]);
    }

    #[test]
    fn commutors() {
        assert!(commutor_factorization_check(4, 1, 4).unwrap());
        assert!(commutor_factorization_check(5, 3, 4).unwrap());
        for n in 2..=7 {
            for p in 1..n {
                for q in p + 1..=n {
                    assert!(commutor_factorization_check(n, p, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn purity() {
        assert!(is_pure(&[], 3).unwrap());
        assert!(!is_pure(&parse_word("1-2").unwrap(), 3).unwrap());
        assert!(is_pure(&parse_word("1-2,1-2").unwrap(), 3).unwrap());
        let w = parse_word("1-2,1-3,2-3,1-3").unwrap();
        let direct = word_permutation(3, &w).unwrap() == identity(3);
        assert_eq!(is_pure(&w, 3).unwrap(), direct);
        assert!(parse_word("1+2").is_err());
    }
}
