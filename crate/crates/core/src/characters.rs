//! Characters of the symmetric group and symmetric polynomials.
//!
//! Characters are computed by coefficient extraction from the Frobenius
//! generating function `Δ(X) · Π_j P_j(X)^{i_j}`; Schur polynomials come
//! from semistandard tableaux. Kronecker coefficients are class-function
//! inner products of characters, and plethysm constants are read off the
//! Schur expansion of a Schur polynomial evaluated at the monomials of
//! another.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_ssyt, for_each_ssyt, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::linalg::{determinant, RowSpace};
use crate::poly::{Exponent, Poly};
use crate::rational::Rational;

/// Conjugacy class of `S_n`: `multiplicities[j - 1]` is the number of `j`-cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType {
    multiplicities: Vec<usize>,
}

impl CycleType {
    pub fn new(multiplicities: Vec<usize>) -> Self {
        let mut multiplicities = multiplicities;
        while multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        CycleType { multiplicities }
    }

    pub fn from_cycle_lengths(lengths: &Partition) -> Self {
        let mut m = vec![0; lengths.part(0)];
        for &l in lengths.parts() {
            m[l - 1] += 1;
        }
        CycleType::new(m)
    }

    pub fn identity(n: usize) -> Self {
        CycleType::new(vec![n])
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of `j`-cycles.
    pub fn count(&self, j: usize) -> usize {
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.multiplicities.iter().enumerate().map(|(j, &m)| (j + 1) * m).sum()
    }

    pub fn cycle_lengths(&self) -> Partition {
        let mut parts = Vec::new();
        for (j, &m) in self.multiplicities.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(j + 1, m));
        }
        Partition::from_parts(&parts)
    }

    /// Centralizer order `Π_j j^{i_j} i_j!`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (j, &m) in self.multiplicities.iter().enumerate() {
            for k in 1..=m {
                z *= BigInt::from(j + 1) * BigInt::from(k);
            }
        }
        z
    }

    pub fn class_size(&self) -> BigInt {
        factorial(self.degree()) / self.centralizer_order()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Power sum `P_j = X_1^j + ... + X_n^j`.
pub fn power_sum(j: u32, nvars: usize) -> Poly {
    Poly::from_terms(
        nvars,
        (0..nvars).map(|i| {
            let mut e = vec![0; nvars];
            e[i] = j;
            (e, Rational::one())
        }),
    )
}

/// Elementary symmetric polynomial `e_k` in `nvars` variables.
pub fn elementary(k: usize, nvars: usize) -> Poly {
    let mut p = Poly::zero(nvars);
    for mask in 0u64..(1 << nvars) {
        if mask.count_ones() as usize == k {
            let e = (0..nvars).map(|i| ((mask >> i) & 1) as u32).collect();
            p.add_term(e, Rational::one());
        }
    }
    p
}

/// The Vandermonde product `Π_{i<j} (X_i - X_j)`.
pub fn vandermonde(nvars: usize) -> Poly {
    let mut d = Poly::one(nvars);
    for i in 0..nvars {
        for j in i + 1..nvars {
            d = d.mul(&Poly::var(nvars, i).sub(&Poly::var(nvars, j)));
        }
    }
    d
}

/// `χ_λ` on the class `c`, as the coefficient of `X^{λ + δ}` in
/// `Δ(X) · Π_j P_j(X)^{i_j}` over `height(λ)` variables.
pub fn frobenius_character(lambda: &Partition, c: &CycleType) -> Result<BigInt> {
    let n = lambda.size();
    if c.degree() != n {
        return Err(Error::SizeMismatch(format!(
            "partition {lambda} has size {n} but the cycle type has degree {}",
            c.degree()
        )));
    }
    let k = lambda.height();
    if k == 0 {
        return Ok(BigInt::one());
    }
    let target: Exponent = (0..k).map(|i| (lambda.part(i) + k - 1 - i) as u32).collect();
    let bound = Some(target[0]);
    let mut acc = vandermonde(k);
    for (j, &m) in c.multiplicities().iter().enumerate() {
        let pj = power_sum(j as u32 + 1, k);
        for _ in 0..m {
            acc = acc.mul_bounded(&pj, bound);
        }
    }
    Ok(acc.coefficient(&target).to_integer())
}

/// Full character table of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    /// Row labels, starting with `(n)`.
    pub partitions: Vec<Partition>,
    /// Column labels, starting with the identity class.
    pub cycle_types: Vec<CycleType>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("character table needs n >= 1".into()));
        }
        let partitions = Partition::all(n);
        let cycle_types: Vec<CycleType> =
            partitions.iter().rev().map(CycleType::from_cycle_lengths).collect();
        let mut values = Vec::with_capacity(partitions.len());
        for lambda in &partitions {
            let row = cycle_types
                .iter()
                .map(|c| {
                    let v = frobenius_character(lambda, c)?;
                    v.to_i64().ok_or_else(|| Error::TooLarge(format!("character value {v}")))
                })
                .collect::<Result<Vec<_>>>()?;
            values.push(row);
        }
        Ok(CharacterTable { n, partitions, cycle_types, values })
    }

    pub fn row_index(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    pub fn value(&self, lambda: &Partition, c: &CycleType) -> Option<i64> {
        let i = self.row_index(lambda)?;
        let j = self.cycle_types.iter().position(|x| x == c)?;
        Some(self.values[i][j])
    }

    /// Class-function inner product `Σ_c χ_a(c) χ_b(c) / z(c)` of two rows.
    pub fn inner_product(&self, a: usize, b: usize) -> Rational {
        self.cycle_types
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, c)| {
                acc + Rational::new(
                    BigInt::from(self.values[a][j]) * BigInt::from(self.values[b][j]),
                    c.centralizer_order(),
                )
            })
    }

    /// `κ = Σ_c χ_λ(c) χ_μ(c) χ_π(c) / z(c)` for row indices.
    pub fn kronecker_by_index(&self, l: usize, m: usize, p: usize) -> Result<u64> {
        let total = self.cycle_types.iter().enumerate().fold(Rational::zero(), |acc, (j, c)| {
            let num = BigInt::from(self.values[l][j]) * self.values[m][j] * self.values[p][j];
            acc + Rational::new(num, c.centralizer_order())
        });
        if !total.is_integer() || total.is_negative() {
            return Err(Error::ValidationFailed(format!(
                "Kronecker sum {total} is not a nonnegative integer"
            )));
        }
        total
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::TooLarge(format!("Kronecker coefficient {total}")))
    }

    pub fn kronecker(&self, lambda: &Partition, mu: &Partition, pi: &Partition) -> Result<u64> {
        let idx = |p: &Partition| {
            self.row_index(p).ok_or_else(|| {
                Error::SizeMismatch(format!("{p} is not a partition of {}", self.n))
            })
        };
        self.kronecker_by_index(idx(lambda)?, idx(mu)?, idx(pi)?)
    }

    /// Dimension `χ_λ(identity)` of each irreducible.
    pub fn dimension(&self, row: usize) -> i64 {
        self.values[row][0]
    }
}

pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, pi: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || pi.size() != n {
        return Err(Error::SizeMismatch(format!(
            "Kronecker coefficient needs partitions of one size, got {lambda}, {mu}, {pi}"
        )));
    }
    if n == 0 {
        return Ok(1);
    }
    CharacterTable::compute(n)?.kronecker(lambda, mu, pi)
}

/// A polynomial known to be invariant under permuting its variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolynomial(Poly);

impl SymmetricPolynomial {
    pub fn new(p: Poly) -> Result<Self> {
        if !p.is_symmetric() {
            return Err(Error::NotSymmetric("not invariant under adjacent transpositions".into()));
        }
        Ok(SymmetricPolynomial(p))
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars()
    }
}

/// `S_λ(X_1..X_n) = Σ_T x^T` over semistandard tableaux with entries `≤ n`.
pub fn schur_polynomial(lambda: &Partition, nvars: usize) -> SymmetricPolynomial {
    let mut p = Poly::zero(nvars);
    if lambda.height() <= nvars {
        let shape = SkewShape::straight(lambda.clone());
        for_each_ssyt(&shape, nvars as u32, |rows| {
            let mut e = vec![0u32; nvars];
            for &x in rows.iter().flatten() {
                e[x as usize - 1] += 1;
            }
            p.add_term(e, Rational::one());
        });
    }
    SymmetricPolynomial(p)
}

/// Checks `S_λ(x) · det(x_j^{n-i}) = det(x_j^{λ_i + n - i})` at a point with
/// distinct coordinates.
pub fn schur_bialternant_check(lambda: &Partition, nvars: usize, point: &[Rational]) -> Result<bool> {
    if point.len() != nvars {
        return Err(Error::SizeMismatch(format!("point has {} coordinates, expected {nvars}", point.len())));
    }
    if lambda.height() > nvars {
        return Err(Error::InvalidArgument(format!("{lambda} has more than {nvars} rows")));
    }
    for i in 0..nvars {
        for j in i + 1..nvars {
            if point[i] == point[j] {
                return Err(Error::DegeneratePoint(format!(
                    "coordinates {} and {} coincide; the Vandermonde determinant vanishes",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let alternant = |shift: &dyn Fn(usize) -> usize| {
        let m: Vec<Vec<Rational>> = (0..nvars)
            .map(|i| point.iter().map(|x| pow(x, shift(i))).collect())
            .collect();
        determinant(&m)
    };
    let vdm = alternant(&|i| nvars - 1 - i);
    let top = alternant(&|i| lambda.part(i) + nvars - 1 - i);
    let s = schur_polynomial(lambda, nvars).0.eval(point);
    Ok(s * vdm == top)
}

fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<u64> {
    let total: usize = mu.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch(format!(
            "{lambda} has size {} but the content sums to {total}",
            lambda.size()
        )));
    }
    let shape = SkewShape::straight(lambda.clone());
    let mut count = 0;
    let mut c = vec![0usize; mu.len()];
    for_each_ssyt(&shape, mu.len() as u32, |rows| {
        c.iter_mut().for_each(|x| *x = 0);
        for &x in rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        if c == mu {
            count += 1;
        }
    });
    Ok(count)
}

/// Coefficients `c_λ` with `p = Σ c_λ S_λ`, peeling off the lexicographically
/// largest exponent (which is dominance-maximal) at every step.
pub fn decompose_into_schur(p: &Poly) -> Result<BTreeMap<Partition, Rational>> {
    let nvars = p.nvars();
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    let mut last: Option<Exponent> = None;
    while let Some(lead) = rest.leading_exponent().cloned() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(format!("leading exponent {lead:?} is not a partition")));
        }
        if last.as_ref().is_some_and(|l| &lead >= l) {
            return Err(Error::NotSymmetric("leading exponent failed to decrease".into()));
        }
        let c = rest.coefficient(&lead);
        let lambda = Partition::from_parts(&lead.iter().map(|&x| x as usize).collect::<Vec<_>>());
        let s = schur_polynomial(&lambda, nvars);
        rest = rest.sub(&s.0.scale(&c));
        out.insert(lambda, c);
        last = Some(lead);
    }
    Ok(out)
}

/// The multiplicities `a_{λ,μ}^π` of `V_π` in `V_λ(V_μ(C^n))` for every `π`
/// of height at most `n`.
pub fn plethysm_decomposition(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<BTreeMap<Partition, u64>> {
    if mu.height() > nvars {
        return Err(Error::InvalidArgument(format!("{mu} has more than {nvars} rows")));
    }
    // weights of V_μ, one per semistandard tableau
    let weights: Vec<Vec<u32>> = enumerate_ssyt(&SkewShape::straight(mu.clone()), nvars as u32)
        .iter()
        .map(|t| {
            let mut e = vec![0u32; nvars];
            for &x in t.rows().iter().flatten() {
                e[x as usize - 1] += 1;
            }
            e
        })
        .collect();
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_ssyt(&SkewShape::straight(lambda.clone()), weights.len() as u32, |rows| {
        let mut e = vec![0u32; nvars];
        for &x in rows.iter().flatten() {
            for (a, b) in e.iter_mut().zip(&weights[x as usize - 1]) {
                *a += b;
            }
        }
        *counts.entry(e).or_default() += 1;
    });
    let composite = Poly::from_terms(nvars, counts.into_iter().map(|(e, c)| (e, Rational::from_integer(c.into()))));
    let coeffs = decompose_into_schur(&composite)?;
    coeffs
        .into_iter()
        .map(|(p, c)| {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::NotSymmetric(format!("multiplicity {c} of {p} is not a natural number")));
            }
            Ok((p, c.to_integer().to_u64().ok_or_else(|| Error::TooLarge(c.to_string()))?))
        })
        .collect()
}

/// The plethysm constant `a_{λ,μ}^π` computed with `n` inner variables.
pub fn plethysm_constant(lambda: &Partition, mu: &Partition, pi: &Partition, nvars: usize) -> Result<u64> {
    if pi.size() != lambda.size() * mu.size() {
        return Ok(0);
    }
    if pi.height() > nvars {
        return Err(Error::Undetermined(format!(
            "{pi} has more than {nvars} rows; rerun with at least {} variables",
            pi.height()
        )));
    }
    Ok(plethysm_decomposition(lambda, mu, nvars)?.get(pi).copied().unwrap_or(0))
}

/// Rank of the span of the polynomials `f_T` over all numberings `T` of `λ`.
pub fn specht_rank(lambda: &Partition) -> Result<usize> {
    let n = lambda.size();
    if n > 8 {
        return Err(Error::TooLarge(format!("specht_rank enumerates {n}! numberings; n must be at most 8")));
    }
    if n == 0 {
        return Ok(1);
    }
    let conj = lambda.conjugate();
    let mut polys: Vec<Poly> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // columns of the numbering T, filled row-major by perm
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); conj.height()];
        let mut k = 0;
        for &len in lambda.parts() {
            for col in cols.iter_mut().take(len) {
                col.push(perm[k]);
                k += 1;
            }
        }
        let key: Vec<Vec<usize>> = cols
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort();
                s
            })
            .collect();
        if seen.insert(key) {
            let mut f = Poly::one(n);
            for col in &cols {
                for a in 0..col.len() {
                    for b in a + 1..col.len() {
                        f = f.mul(&Poly::var(n, col[a]).sub(&Poly::var(n, col[b])));
                    }
                }
            }
            polys.push(f);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let mut index: BTreeMap<Exponent, usize> = BTreeMap::new();
    for f in &polys {
        for e in f.terms().keys() {
            let next = index.len();
            index.entry(e.clone()).or_insert(next);
        }
    }
    let mut space = RowSpace::new();
    for f in &polys {
        let mut v = vec![Rational::zero(); index.len()];
        for (e, c) in f.terms() {
            v[index[e]] = c.clone();
        }
        space.insert(v);
    }
    Ok(space.rank())
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
