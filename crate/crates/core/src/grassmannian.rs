//! Plücker coordinates of the Grassmannian `Gr_d^n`: van der Waerden
//! syzygies, straightening to standard monomials and standard-monomial
//! counts.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::schur_polynomial;
use crate::combinatorics::{enumerate_ssyt, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::linalg::{int_determinant, RowSpace};
use crate::rational::{format_rational, int, Rational};

pub const STRAIGHTEN_STEP_CAP: usize = 1_000_000;

/// A Plücker coordinate `[i_1 … i_d]` with strictly increasing indices.
pub type Bracket = Vec<u32>;

/// Canonical form of a bracket: sorted indices and the sign of the sorting
/// permutation, or `None` for a repeated index.
pub fn canonical_bracket(indices: &[u32]) -> Option<(Bracket, i32)> {
    let mut b = indices.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..b.len() {
        let mut j = i;
        while j > 0 && b[j - 1] > b[j] {
            b.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if b.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((b, sign))
}

/// A product of brackets, kept sorted.
pub type Monomial = Vec<Bracket>;

/// Adjacent brackets are rowwise weakly increasing, so the brackets are the
/// columns of a semistandard tableau.
pub fn is_standard(m: &[Bracket]) -> bool {
    m.windows(2).all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a <= b))
}

/// A linear combination of bracket monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BracketPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl BracketPolynomial {
    pub fn zero() -> Self {
        BracketPolynomial::default()
    }

    /// The product of the given brackets, canonicalized.
    pub fn monomial(brackets: &[Vec<u32>], coeff: Rational) -> Self {
        let mut p = BracketPolynomial::zero();
        p.add_product(brackets, coeff);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[Bracket]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `coeff · Π brackets`, canonicalizing each bracket.
    pub fn add_product(&mut self, brackets: &[Vec<u32>], coeff: Rational) {
        let mut sign = 1;
        let mut m = Vec::with_capacity(brackets.len());
        for b in brackets {
            match canonical_bracket(b) {
                None => return,
                Some((c, s)) => {
                    sign *= s;
                    m.push(c);
                }
            }
        }
        m.sort();
        self.add_term(m, coeff * int(sign as i64));
    }

    fn add_term(&mut self, m: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &BracketPolynomial) -> BracketPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> BracketPolynomial {
        let mut out = BracketPolynomial::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn is_standard(&self) -> bool {
        self.terms.keys().all(|m| is_standard(m))
    }

    /// Value on the maximal minors of a `d × n` integer matrix.
    pub fn evaluate(&self, matrix: &[Vec<i64>]) -> Result<Rational> {
        let d = matrix.len();
        let n = matrix.first().map_or(0, |r| r.len());
        let mut minors: HashMap<Bracket, BigInt> = HashMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = BigInt::one();
            for b in m {
                if b.len() != d || b.iter().any(|&i| i == 0 || i as usize > n) {
                    return Err(Error::SizeMismatch(format!("bracket {b:?} does not fit a {d}×{n} matrix")));
                }
                let minor = minors.entry(b.clone()).or_insert_with(|| {
                    let sub: Vec<Vec<BigInt>> = matrix
                        .iter()
                        .map(|row| b.iter().map(|&i| BigInt::from(row[i as usize - 1])).collect())
                        .collect();
                    int_determinant(&sub)
                });
                value *= &*minor;
            }
            total += c * Rational::from_integer(value);
        }
        Ok(total)
    }
}

impl Serialize for BracketPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let key = serde_json::to_string(m).map_err(serde::ser::Error::custom)?;
            map.serialize_entry(&key, &format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for BracketPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Coeff(#[serde(with = "crate::rational::serde_str")] Rational);
        let raw = BTreeMap::<String, Coeff>::deserialize(d)?;
        let mut p = BracketPolynomial::zero();
        for (k, Coeff(c)) in raw {
            let m: Vec<Vec<u32>> = serde_json::from_str(&k).map_err(serde::de::Error::custom)?;
            p.add_product(&m, c);
        }
        Ok(p)
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The syzygy `Σ_τ sgn(τ, τ*) [α, β_τ*][β_τ, γ]`, the sum over `s`-subsets
/// `τ` of the positions of `β`.
pub fn vdw_syzygy(s: usize, alpha: &[u32], beta: &[u32], gamma: &[u32], n: usize, d: usize) -> Result<BracketPolynomial> {
    if s < 1 || s > d {
        return Err(Error::InvalidArgument(format!("s = {s} outside 1..{d}")));
    }
    if alpha.len() != s - 1 || beta.len() != d + 1 || gamma.len() != d - s {
        return Err(Error::SizeMismatch(format!(
            "expected |α| = {}, |β| = {}, |γ| = {}, got {}, {}, {}",
            s - 1,
            d + 1,
            d - s,
            alpha.len(),
            beta.len(),
            gamma.len()
        )));
    }
    if let Some(&i) = alpha.iter().chain(beta).chain(gamma).find(|&&i| i == 0 || i as usize > n) {
        return Err(Error::InvalidArgument(format!("index {i} outside 1..{n}")));
    }
    let mut out = BracketPolynomial::zero();
    for tau in subsets(d + 1, s) {
        let star: Vec<usize> = (0..=d).filter(|i| !tau.contains(i)).collect();
        let perm: Vec<usize> = tau.iter().chain(&star).copied().collect();
        let sign = permutation_sign(&perm);
        let first: Vec<u32> = alpha.iter().copied().chain(star.iter().map(|&i| beta[i])).collect();
        let second: Vec<u32> = tau.iter().map(|&i| beta[i]).chain(gamma.iter().copied()).collect();
        out.add_product(&[first, second], int(sign as i64));
    }
    Ok(out)
}

/// Rewrites `[c1][c2]`, whose first rowwise violation is at row `s`
/// (1-based), as the other terms of the syzygy containing it.
fn straighten_pair(c1: &[u32], c2: &[u32], s: usize) -> BracketPolynomial {
    let d = c1.len();
    let alpha = &c1[..s - 1];
    let beta: Vec<u32> = c1[s - 1..].iter().chain(&c2[..s]).copied().collect();
    let gamma = &c2[s..];
    let mut out = BracketPolynomial::zero();
    let pinned: Vec<usize> = (d + 1 - s..=d).collect();
    let pinned_sign = {
        let star: Vec<usize> = (0..d + 1 - s).collect();
        let perm: Vec<usize> = pinned.iter().chain(&star).copied().collect();
        permutation_sign(&perm)
    };
    for tau in subsets(d + 1, s) {
        if tau == pinned {
            continue;
        }
        let star: Vec<usize> = (0..=d).filter(|i| !tau.contains(i)).collect();
        let perm: Vec<usize> = tau.iter().chain(&star).copied().collect();
        let sign = permutation_sign(&perm) * pinned_sign;
        let first: Vec<u32> = alpha.iter().copied().chain(star.iter().map(|&i| beta[i])).collect();
        let second: Vec<u32> = tau.iter().map(|&i| beta[i]).chain(gamma.iter().copied()).collect();
        out.add_product(&[first, second], int(-sign as i64));
    }
    out
}

/// Rewrites `p` in the basis of standard monomials.
pub fn straighten(p: &BracketPolynomial) -> Result<BracketPolynomial> {
    let mut done = BracketPolynomial::zero();
    let mut work = p.clone();
    let mut steps = 0;
    while let Some((m, c)) = work.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        work.terms.remove(&m);
        let violation = m.windows(2).enumerate().find_map(|(k, w)| {
            w[0].iter().zip(&w[1]).position(|(a, b)| a > b).map(|row| (k, row + 1))
        });
        let Some((k, s)) = violation else {
            done.add_term(m, c);
            continue;
        };
        steps += 1;
        if steps > STRAIGHTEN_STEP_CAP {
            return Err(Error::IterationCap(format!("straightening exceeded {STRAIGHTEN_STEP_CAP} steps")));
        }
        let rest: Vec<Bracket> = m.iter().enumerate().filter(|&(i, _)| i != k && i != k + 1).map(|(_, b)| b.clone()).collect();
        for (pair, pc) in straighten_pair(&m[k], &m[k + 1], s).terms {
            let mut brackets = rest.clone();
            brackets.extend(pair);
            work.add_product(&brackets, &c * pc);
        }
    }
    Ok(done)
}

/// Number of standard monomials of degree `s` in the brackets of `Gr_d^n`.
pub fn standard_monomial_count(n: usize, d: usize, s: usize) -> u64 {
    if d > n {
        return if s == 0 { 1 } else { 0 };
    }
    let brackets: Vec<Bracket> = subsets(n, d).into_iter().map(|b| b.into_iter().map(|i| i as u32 + 1).collect()).collect();
    let le = |a: &Bracket, b: &Bracket| a.iter().zip(b).all(|(x, y)| x <= y);
    // chains of length s, counted by dynamic programming on the last bracket
    let mut ways = vec![1u64; brackets.len()];
    if s == 0 {
        return 1;
    }
    for _ in 1..s {
        ways = (0..brackets.len())
            .map(|j| (0..brackets.len()).filter(|&i| le(&brackets[i], &brackets[j])).map(|i| ways[i]).sum())
            .collect();
    }
    ways.iter().sum()
}

/// The standard-monomial count of degree `s` equals the number of
/// semistandard tableaux of the `d × s` rectangle with entries at most `n`,
/// and the dimension of the Schur module of that shape.
pub fn borel_weil_check(n: usize, d: usize, s: usize) -> bool {
    let count = standard_monomial_count(n, d, s);
    let shape = Partition::rectangle(d, s);
    let ssyt = enumerate_ssyt(&SkewShape::straight(shape.clone()), n as u32).len() as u64;
    let ones = vec![int(1); n];
    let schur = schur_polynomial(&shape, n).poly().eval(&ones);
    count == ssyt && schur == int(count as i64)
}

/// All degree-two syzygies with increasing `α`, `β`, `γ`.
pub fn degree_two_syzygies(n: usize, d: usize) -> Vec<BracketPolynomial> {
    let mut out = Vec::new();
    let tuples = |k: usize| -> Vec<Vec<u32>> {
        subsets(n, k).into_iter().map(|t| t.into_iter().map(|i| i as u32 + 1).collect()).collect()
    };
    for s in 1..=d {
        for alpha in tuples(s - 1) {
            for beta in tuples(d + 1) {
                for gamma in tuples(d - s) {
                    if let Ok(p) = vdw_syzygy(s, &alpha, &beta, &gamma, n, d) {
                        if !p.is_zero() {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Dimension of the span of the degree-two syzygies, and of the space of
/// degree-two bracket monomials.
pub fn degree_two_syzygy_rank(n: usize, d: usize) -> (usize, usize) {
    let brackets: Vec<Bracket> = subsets(n, d).into_iter().map(|b| b.into_iter().map(|i| i as u32 + 1).collect()).collect();
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for i in 0..brackets.len() {
        for j in i..brackets.len() {
            let next = index.len();
            index.insert(vec![brackets[i].clone(), brackets[j].clone()], next);
        }
    }
    let mut space = RowSpace::new();
    for p in degree_two_syzygies(n, d) {
        let mut v = vec![Rational::zero(); index.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        space.insert(v);
    }
    (space.rank(), index.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, d: usize, n: usize) -> Vec<Vec<i64>> {
        (0..d).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect()
    }

    #[test]
    fn plucker_relation() {
        let p = vdw_syzygy(1, &[], &[1, 2, 3], &[4], 4, 2).unwrap();
        assert_eq!(p.terms().len(), 3);
        let c12 = p.coefficient(&[vec![1, 2], vec![3, 4]]);
        let c13 = p.coefficient(&[vec![1, 3], vec![2, 4]]);
        let c14 = p.coefficient(&[vec![1, 4], vec![2, 3]]);
        assert_eq!(c12, int(1));
        assert_eq!(c13, int(-1));
        assert_eq!(c14, int(1));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            assert!(p.evaluate(&random_matrix(&mut rng, 2, 4)).unwrap().is_zero());
        }
    }

    #[test]
    fn repeated_beta_collapses() {
        assert!(vdw_syzygy(1, &[], &[1, 1, 1], &[2], 4, 2).unwrap().is_zero());
        assert!(vdw_syzygy(1, &[1], &[1, 2, 3], &[4], 4, 2).is_err());
    }

    #[test]
    fn straightening_examples() {
        let std = BracketPolynomial::monomial(&[vec![1, 2], vec![3, 4]], int(1));
        assert_eq!(straighten(&std).unwrap(), std);
        let p = BracketPolynomial::monomial(&[vec![1, 4], vec![2, 3]], int(1));
        let q = straighten(&p).unwrap();
        assert!(q.is_standard());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let m = random_matrix(&mut rng, 2, 4);
            assert_eq!(p.evaluate(&m).unwrap(), q.evaluate(&m).unwrap());
        }
    }

    #[test]
    fn straightening_random_degree_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (n, d) in [(5, 2), (6, 3), (6, 2)] {
            for _ in 0..10 {
                let brackets: Vec<Vec<u32>> = (0..3)
                    .map(|_| {
                        let mut b: Vec<u32> = (1..=n as u32).collect();
                        for i in 0..d {
                            let j = rng.gen_range(i..n);
                            b.swap(i, j);
                        }
                        b.truncate(d);
                        b
                    })
                    .collect();
                let p = BracketPolynomial::monomial(&brackets, int(1));
                let q = straighten(&p).unwrap();
                assert!(q.is_standard());
                for _ in 0..5 {
                    let m = random_matrix(&mut rng, d, n);
                    assert_eq!(p.evaluate(&m).unwrap(), q.evaluate(&m).unwrap());
                }
            }
        }
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_monomial_count(4, 2, 0), 1);
        assert_eq!(standard_monomial_count(4, 2, 1), 6);
        assert_eq!(standard_monomial_count(4, 2, 2), 20);
        assert_eq!(standard_monomial_count(4, 2, 3), 50);
        for n in 1..=5 {
            for d in 1..=n {
                for s in 0..=3 {
                    assert!(borel_weil_check(n, d, s), "n={n} d={d} s={s}");
                }
            }
        }
    }

    #[test]
    fn syzygy_span_codimension() {
        assert_eq!(degree_two_syzygy_rank(4, 2), (1, 21));
        assert_eq!(degree_two_syzygy_rank(5, 2), (5, 55));
    }

    #[test]
    fn json_round_trip() {
        let p = vdw_syzygy(1, &[], &[1, 2, 3], &[4], 4, 2).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"[[1,2],[3,4]]\":\"1\""));
        let q: BracketPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }
}
