//! Finite groups and tori acting on polynomials: Reynolds averaging, Molien
//! series, polarization, torus weights, the null-cone criterion and Kempf's
//! optimal one-parameter subgroup.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{determinant, identity, mat_mul, solve_unique, Matrix};
use crate::poly::Poly;
use crate::polyhedra::lp::{maximize, LpOutcome};
use crate::rational::{int, primitive_integer_vector, Rational};

pub const GROUP_CAP: usize = 10_000;

/// A finite group of invertible rational matrices, stored with all its
/// elements.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    dim: usize,
}

impl FiniteMatrixGroup {
    /// Closes the generators under multiplication.
    pub fn new(generators: Vec<Matrix>) -> Result<Self> {
        let dim = generators.first().map_or(0, |g| g.len());
        if dim == 0 {
            return Err(Error::InvalidArgument("a group needs at least one nonempty generator".into()));
        }
        for g in &generators {
            if g.len() != dim || g.iter().any(|r| r.len() != dim) {
                return Err(Error::SizeMismatch(format!("generators must all be {dim}×{dim}")));
            }
            if determinant(g).is_zero() {
                return Err(Error::InvalidArgument("generator is singular".into()));
            }
        }
        let id = identity(dim);
        let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = mat_mul(&x, g);
                if seen.insert(y.clone()) {
                    if seen.len() > GROUP_CAP {
                        return Err(Error::GroupTooLarge(GROUP_CAP));
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(FiniteMatrixGroup { generators, elements, dim })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// The permutation matrices of `S_n`.
    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut m = identity(n);
            m.swap(i, i + 1);
            gens.push(m);
        }
        if gens.is_empty() {
            gens.push(identity(n.max(1)));
        }
        FiniteMatrixGroup::new(gens)
    }
}

fn check_vars(g: &FiniteMatrixGroup, p: &Poly) -> Result<()> {
    if p.nvars() != g.dim {
        return Err(Error::SizeMismatch(format!("polynomial in {} variables, group acts on {}", p.nvars(), g.dim)));
    }
    Ok(())
}

/// `p · g`: the substitution `X_i ↦ Σ_j g_ij X_j`.
pub fn act(g: &Matrix, p: &Poly) -> Poly {
    p.linear_substitute(g)
}

/// `(1/|G|) Σ_g p·g`.
pub fn reynolds(g: &FiniteMatrixGroup, p: &Poly) -> Result<Poly> {
    check_vars(g, p)?;
    let mut sum = Poly::zero(p.nvars());
    for m in &g.elements {
        sum = sum.add(&act(m, p));
    }
    Ok(sum.scale(&Rational::new(BigInt::one(), BigInt::from(g.order()))))
}

pub fn is_invariant(g: &FiniteMatrixGroup, p: &Poly) -> bool {
    g.generators.iter().all(|m| act(m, p) == *p)
}

/// Coefficients `1 = c_0, c_1, …, c_n` of `det(I − zM)`, by Faddeev-LeVerrier.
pub fn det_one_minus_zm(m: &Matrix) -> Vec<Rational> {
    let n = m.len();
    let mut coeffs = vec![Rational::one()];
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = M M_{k-1} + a_{k-1} I
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[k - 1];
        }
        let prod = mat_mul(m, &next);
        let trace: Rational = (0..n).map(|i| prod[i][i].clone()).sum();
        coeffs.push(-trace / int(k as i64));
        mk = next;
    }
    coeffs
}

/// Power-series inverse of `a` through degree `cap`; `a_0` must be nonzero.
pub fn invert_series(a: &[Rational], cap: usize) -> Result<Vec<Rational>> {
    let a0 = a.first().filter(|x| !x.is_zero()).ok_or_else(|| {
        Error::InvalidArgument("series with zero constant term is not invertible".into())
    })?;
    let mut out: Vec<Rational> = Vec::with_capacity(cap + 1);
    for k in 0..=cap {
        let mut s = if k == 0 { Rational::one() } else { Rational::zero() };
        for j in 1..=k.min(a.len() - 1) {
            s -= &a[j] * &out[k - j];
        }
        out.push(s / a0);
    }
    Ok(out)
}

/// Hilbert series of the invariant ring through `z^cap`.
pub fn molien_series(g: &FiniteMatrixGroup, cap: usize) -> Result<Vec<Rational>> {
    let mut total = vec![Rational::zero(); cap + 1];
    for m in &g.elements {
        let s = invert_series(&det_one_minus_zm(m), cap)?;
        for (t, x) in total.iter_mut().zip(s) {
            *t += x;
        }
    }
    let order = int(g.order() as i64);
    Ok(total.into_iter().map(|x| x / &order).collect())
}

/// `Σ_i Y_i ∂p/∂X_i` with `X_i = from[i]`, `Y_i = to[i]`.
pub fn polarize(p: &Poly, from: &[usize], to: &[usize]) -> Result<Poly> {
    if from.len() != to.len() {
        return Err(Error::SizeMismatch(format!("{} source and {} target variables", from.len(), to.len())));
    }
    if from.iter().any(|i| to.contains(i)) {
        return Err(Error::InvalidArgument("source and target variables must be disjoint".into()));
    }
    if let Some(&i) = from.iter().chain(to).find(|&&i| i >= p.nvars()) {
        return Err(Error::InvalidArgument(format!("variable {i} outside 0..{}", p.nvars())));
    }
    let mut out = Poly::zero(p.nvars());
    for (&x, &y) in from.iter().zip(to) {
        out = out.add(&p.derivative(x).mul(&Poly::var(p.nvars(), y)));
    }
    Ok(out)
}

/// An integer weight of the diagonal torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn trace_zero(&self) -> bool {
        self.0.iter().sum::<i64>() == 0
    }

    pub fn dot(&self, other: &WeightVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

/// Exponent vectors of the monomials of `f`.
pub fn support_weights(f: &Poly) -> Result<Vec<WeightVector>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("the zero polynomial has no support".into()));
    }
    Ok(f.terms().keys().map(|e| WeightVector(e.iter().map(|&x| x as i64).collect())).collect())
}

/// Weight of the coordinate function `E_ij` under conjugation by the torus.
pub fn matrix_entry_weight(i: usize, j: usize, n: usize) -> WeightVector {
    let mut w = vec![0; n];
    w[i] += 1;
    w[j] -= 1;
    WeightVector(w)
}

/// Partial sums `[m_1, m_1 + m_2, …, m_1 + … + m_{n-1}]` of a trace-zero weight.
pub fn theta(m: &WeightVector) -> Result<Vec<i64>> {
    if !m.trace_zero() {
        return Err(Error::InvalidArgument("θ is defined on trace-zero weights".into()));
    }
    let n = m.0.len();
    Ok(m.0[..n.saturating_sub(1)]
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect())
}

pub fn theta_inv(a: &[i64]) -> WeightVector {
    let mut out = Vec::with_capacity(a.len() + 1);
    let mut prev = 0;
    for &x in a {
        out.push(x - prev);
        prev = x;
    }
    out.push(-prev);
    WeightVector(out)
}

fn check_support(support: &[WeightVector]) -> Result<usize> {
    let n = support.first().ok_or_else(|| Error::InvalidArgument("empty support".into()))?.0.len();
    if support.iter().any(|w| w.0.len() != n) {
        return Err(Error::SizeMismatch("weights of different lengths".into()));
    }
    Ok(n)
}

/// A trace-zero `λ` with `⟨λ, χ⟩ > 0` on the whole support, if one exists.
/// Found by maximizing `m` subject to `⟨λ, χ⟩ ≥ m`, `|λ_i| ≤ 1`, `Σ λ_i = 0`.
pub fn torus_nullcone(support: &[WeightVector]) -> Result<Option<WeightVector>> {
    let n = check_support(support)?;
    // variables (λ_1..λ_n, m)
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    for chi in support {
        let mut row: Vec<Rational> = chi.0.iter().map(|&x| int(-x)).collect();
        row.push(int(1));
        a.push(row);
        b.push(int(0));
    }
    for i in 0..n {
        for s in [1, -1] {
            let mut row = vec![int(0); n + 1];
            row[i] = int(s);
            a.push(row);
            b.push(int(1));
        }
    }
    for s in [1, -1] {
        let mut row = vec![int(s); n];
        row.push(int(0));
        a.push(row);
        b.push(int(0));
    }
    let mut c = vec![int(0); n + 1];
    c[n] = int(1);
    match maximize(&a, &b, false, &c) {
        LpOutcome::Optimal { value, point } if value.is_positive() => {
            let lambda = primitive_integer_vector(&point[..n]);
            Ok(Some(WeightVector(lambda.iter().map(to_i64).collect::<Result<_>>()?)))
        }
        LpOutcome::Optimal { .. } => Ok(None),
        _ => Err(Error::ValidationFailed("null-cone LP is bounded and feasible by construction".into())),
    }
}

fn to_i64(x: &BigInt) -> Result<i64> {
    i64::try_from(x.clone()).map_err(|_| Error::TooLarge(format!("weight entry {x}")))
}

/// Kempf's optimal one-parameter subgroup of the diagonal torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempfResult {
    pub lambda: WeightVector,
    /// `e(λ)^2 = m(λ)^2 / ‖λ‖^2`, equal to the squared norm of the closest point.
    #[serde(with = "crate::rational::serde_str")]
    pub efficiency_sq: Rational,
    /// `m(λ) = min_χ ⟨λ, χ⟩`.
    pub m: i64,
    pub norm_sq: i64,
    /// Closest point to the origin in the hull of the projected support.
    #[serde(with = "crate::rational::serde_vec")]
    pub closest_point: Vec<Rational>,
}

/// Orthogonal projection onto `Σ x_i = 0`.
pub fn project_trace_zero(w: &WeightVector) -> Vec<Rational> {
    let n = w.0.len() as i64;
    let mean = Rational::new(BigInt::from(w.0.iter().sum::<i64>()), BigInt::from(n));
    w.0.iter().map(|&x| int(x) - &mean).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimum-norm point of the convex hull of `points`, by enumerating
/// affinely independent subsets and solving the least-squares system on
/// each affine hull.
pub fn min_norm_point(points: &[Vec<Rational>]) -> Vec<Rational> {
    let mut pts: Vec<Vec<Rational>> = Vec::new();
    for p in points {
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    let dim = pts.first().map_or(0, |p| p.len());
    let max_size = pts.len().min(dim + 1);
    let optimal = |q: &[Rational]| {
        let qq = dot(q, q);
        pts.iter().all(|p| dot(p, q) >= qq)
    };
    let mut subset = Vec::new();
    for size in 1..=max_size {
        if let Some(q) = search_subsets(&pts, size, 0, &mut subset, &optimal) {
            return q;
        }
    }
    unreachable!("the minimum-norm point lies in the hull of an affinely independent subset")
}

fn search_subsets(
    pts: &[Vec<Rational>],
    size: usize,
    start: usize,
    subset: &mut Vec<usize>,
    optimal: &dyn Fn(&[Rational]) -> bool,
) -> Option<Vec<Rational>> {
    if subset.len() == size {
        return affine_min_norm(pts, subset).filter(|q| optimal(q));
    }
    for i in start..pts.len() {
        subset.push(i);
        let found = search_subsets(pts, size, i + 1, subset, optimal);
        subset.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Closest point to 0 on the affine hull of the subset, if it lies in the
/// relative interior of the simplex and the subset is affinely independent.
fn affine_min_norm(pts: &[Vec<Rational>], subset: &[usize]) -> Option<Vec<Rational>> {
    let k = subset.len();
    // [G 1; 1ᵀ 0] [w; ν] = [0; 1]
    let mut m = vec![vec![Rational::zero(); k + 1]; k + 1];
    for (a, &i) in subset.iter().enumerate() {
        for (b, &j) in subset.iter().enumerate() {
            m[a][b] = dot(&pts[i], &pts[j]);
        }
        m[a][k] = int(1);
        m[k][a] = int(1);
    }
    let mut rhs = vec![Rational::zero(); k + 1];
    rhs[k] = int(1);
    let sol = solve_unique(&m, &rhs)?;
    if sol[..k].iter().any(|w| w.is_negative()) {
        return None;
    }
    let dim = pts[subset[0]].len();
    let mut q = vec![Rational::zero(); dim];
    for (w, &i) in sol.iter().zip(subset) {
        for (qc, pc) in q.iter_mut().zip(&pts[i]) {
            *qc += w * pc;
        }
    }
    Some(q)
}

/// The most efficient `λ` for the given support, or `None` when the
/// projected support has 0 in its convex hull.
pub fn kempf_optimal(support: &[WeightVector]) -> Result<Option<KempfResult>> {
    check_support(support)?;
    let projected: Vec<Vec<Rational>> = support.iter().map(project_trace_zero).collect();
    let p = min_norm_point(&projected);
    if p.iter().all(|x| x.is_zero()) {
        return Ok(None);
    }
    let lambda = WeightVector(primitive_integer_vector(&p).iter().map(to_i64).collect::<Result<_>>()?);
    let m = support.iter().map(|chi| lambda.dot(chi)).min().expect("support is nonempty");
    let norm_sq = lambda.dot(&lambda);
    Ok(Some(KempfResult { efficiency_sq: dot(&p, &p), lambda, m, norm_sq, closest_point: p }))
}
