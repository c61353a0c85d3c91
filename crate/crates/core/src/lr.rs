//! Littlewood-Richardson coefficients: the LR rule, the LR polytope, the
//! nonvanishing decision, stretching polynomials and the cross-engine sweep.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{decompose_into_schur, schur_polynomial};
use crate::combinatorics::Partition;
use crate::crystals::lr_via_crystals_all;
use crate::error::{Error, Result};
use crate::lattice::z2_feasible_polytope;
use crate::polyhedra::ehrhart::{eval_poly, interpolate};
use crate::polyhedra::{LatticeCounter, Quasipolynomial, RationalPolytope};
use crate::rational::{int, Rational};

/// The triple `(α, β, γ)` of `c_{αβ}^γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LRInstance {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

impl LRInstance {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Self {
        LRInstance { alpha, beta, gamma }
    }

    pub fn from_parts(alpha: &[usize], beta: &[usize], gamma: &[usize]) -> Self {
        LRInstance::new(Partition::from_parts(alpha), Partition::from_parts(beta), Partition::from_parts(gamma))
    }

    /// `|γ| = |α| + |β|` and `α ⊆ γ`.
    pub fn is_well_posed(&self) -> bool {
        self.gamma.size() == self.alpha.size() + self.beta.size() && self.gamma.contains(&self.alpha)
    }

    pub fn scaled(&self, k: usize) -> LRInstance {
        LRInstance::new(self.alpha.scaled(k), self.beta.scaled(k), self.gamma.scaled(k))
    }

    pub fn max_height(&self) -> usize {
        self.alpha.height().max(self.beta.height()).max(self.gamma.height())
    }
}

/// Number of LR skew tableaux of shape `γ/α` and content `β`.
pub fn lr_count(inst: &LRInstance) -> u64 {
    if !inst.is_well_posed() {
        return 0;
    }
    let (alpha, beta, gamma) = (&inst.alpha, &inst.beta, &inst.gamma);
    // boxes in reading order: rows top to bottom, each row right to left
    let mut cells = Vec::new();
    for r in 0..gamma.height() {
        for c in (alpha.part(r)..gamma.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let rows = gamma.height();
    let mut filling: Vec<Vec<u32>> = (0..rows).map(|r| vec![0; gamma.part(r)]).collect();
    let mut counts = vec![0usize; beta.height() + 2];
    let mut total = 0;
    lr_fill(0, &cells, alpha, beta, gamma, &mut filling, &mut counts, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn lr_fill(
    t: usize,
    cells: &[(usize, usize)],
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    filling: &mut [Vec<u32>],
    counts: &mut [usize],
    total: &mut u64,
) {
    if t == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[t];
    let mut hi = beta.height() as u32;
    if c + 1 < gamma.part(r) {
        hi = hi.min(filling[r][c + 1]);
    }
    let mut lo = 1;
    if r > 0 && c >= alpha.part(r - 1) {
        lo = filling[r - 1][c] + 1;
    }
    for v in lo..=hi {
        let vi = v as usize;
        if counts[vi] + 1 > beta.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        filling[r][c] = v;
        lr_fill(t + 1, cells, alpha, beta, gamma, filling, counts, total);
        counts[vi] -= 1;
    }
    filling[r][c] = 0;
}

/// Index of the variable `r^i_j` (1-based `i`, `j`) in a rank-`n` LR polytope.
pub fn lr_variable(i: usize, j: usize, n: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// The polytope in the variables `r^i_j` (the number of `j`s in row `i`) whose
/// lattice points are the LR tableaux of the instance.
pub fn lr_polytope(inst: &LRInstance, rank: Option<usize>) -> Result<RationalPolytope> {
    let height = inst.max_height();
    let n = rank.unwrap_or(height);
    if n < height {
        return Err(Error::RankTooSmall { rank: n, height });
    }
    let n = n.max(1);
    let d = n * n;
    let v = |i: usize, j: usize| lr_variable(i, j, n);
    let part = |p: &Partition, i: usize| p.part(i - 1) as i64;
    let mut a: Vec<Vec<i64>> = Vec::new();
    let mut b: Vec<i64> = Vec::new();
    let equal = |row: Vec<i64>, rhs: i64, a: &mut Vec<Vec<i64>>, b: &mut Vec<i64>| {
        a.push(row.iter().map(|x| -x).collect());
        b.push(-rhs);
        a.push(row);
        b.push(rhs);
    };
    // shape
    for i in 1..=n {
        let mut row = vec![0; d];
        for j in 1..=n {
            row[v(i, j)] = 1;
        }
        equal(row, part(&inst.gamma, i) - part(&inst.alpha, i), &mut a, &mut b);
    }
    // content
    for j in 1..=n {
        let mut row = vec![0; d];
        for i in 1..=n {
            row[v(i, j)] = 1;
        }
        equal(row, part(&inst.beta, j), &mut a, &mut b);
    }
    // tableau: columns strictly increase
    for i in 1..n {
        for j in 1..=n {
            let mut row = vec![0; d];
            for k in 1..=j {
                row[v(i + 1, k)] += 1;
            }
            for k in 1..j {
                row[v(i, k)] -= 1;
            }
            a.push(row);
            b.push(part(&inst.alpha, i) - part(&inst.alpha, i + 1));
        }
    }
    // reverse lattice word
    for i in 1..=n {
        for j in i + 1..=n {
            let mut row = vec![0; d];
            row[v(i, j)] = 1;
            a.push(row);
            b.push(0);
        }
    }
    for i in 1..=n {
        for j in 2..=n {
            let mut row = vec![0; d];
            for k in 1..=i {
                row[v(k, j)] += 1;
            }
            for k in 1..i {
                row[v(k, j - 1)] -= 1;
            }
            a.push(row);
            b.push(0);
        }
    }
    RationalPolytope::with_dim(a, b, true, d)
}

/// `c_{αβ}^γ ≠ 0`, decided by rational feasibility of the LR polytope. By
/// the saturation theorem a nonempty polytope always holds a lattice point.
pub fn decide_nonvanishing(inst: &LRInstance) -> bool {
    if !inst.is_well_posed() {
        return false;
    }
    lr_polytope(inst, None).map(|p| p.feasible().is_some()).unwrap_or(false)
}

/// `c_{kα,kβ}^{kγ}`.
pub fn stretch_lr(inst: &LRInstance, k: usize) -> u64 {
    lr_count(&inst.scaled(k))
}

/// Fits the stretching polynomial through `k = 1..kmax-1` and checks the
/// prediction at `k = kmax`.
pub fn fit_stretching(inst: &LRInstance, kmax: usize) -> Result<Quasipolynomial> {
    if kmax < 2 {
        return Err(Error::InvalidArgument(format!("kmax must be at least 2, got {kmax}")));
    }
    let xs: Vec<i64> = (1..kmax as i64).collect();
    let ys: Vec<Rational> = xs.iter().map(|&k| int(stretch_lr(inst, k as usize) as i64)).collect();
    let coeffs = interpolate(&xs, &ys);
    let held_out = stretch_lr(inst, kmax);
    let predicted = eval_poly(&coeffs, &int(kmax as i64));
    if predicted != int(held_out as i64) {
        return Err(Error::ValidationFailed(format!(
            "stretching polynomial predicts {predicted} at k = {kmax} but the count is {held_out}"
        )));
    }
    Ok(Quasipolynomial::polynomial(coeffs))
}

/// Dimension of the LR polytope plus two samples: enough for
/// [`fit_stretching`] whatever the degree. Zero for an empty polytope.
pub fn stretching_kmax(inst: &LRInstance) -> Result<usize> {
    let p = lr_polytope(inst, None)?;
    match p.affine_span() {
        Ok(aff) => Ok(aff.dimension() + 2),
        Err(Error::EmptyPolytope) => Ok(0),
        Err(e) => Err(e),
    }
}

/// `P ∩ Z_(2)^d ≠ ∅`. For a polytope whose dilation counts form a
/// quasipolynomial of period at most 2 with nonnegative coefficients this
/// decides whether some dilation holds a lattice point.
pub fn decide_nonvanishing_z2(p: &RationalPolytope) -> Result<bool> {
    z2_feasible_polytope(p)
}

/// Sweep settings for [`run_corpus`].
#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub max_size: usize,
    pub max_height: usize,
    /// Dilations checked for saturation counterexamples.
    pub saturation_ks: Vec<usize>,
    /// Fit stretching polynomials for every nonzero triple.
    pub stretch: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { max_size: 8, max_height: 4, saturation_ks: vec![2, 3], stretch: false }
    }
}

/// The four engine values for one triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineValues {
    pub instance: LRInstance,
    pub lr_rule: u64,
    pub polytope: u64,
    pub crystal: u64,
    pub schur: u64,
}

impl EngineValues {
    pub fn agree(&self) -> bool {
        self.lr_rule == self.polytope && self.lr_rule == self.crystal && self.lr_rule == self.schur
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StretchFailure {
    pub instance: LRInstance,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub triples: usize,
    pub nonzero: usize,
    pub engine_mismatches: Vec<EngineValues>,
    pub nonvanishing_mismatches: Vec<LRInstance>,
    pub saturation_checked: usize,
    pub saturation_counterexamples: Vec<(LRInstance, usize)>,
    pub stretch_fitted: usize,
    pub stretch_failures: Vec<StretchFailure>,
    /// Fitted polynomials with a negative coefficient.
    pub stretch_negative: Vec<LRInstance>,
    pub max_stretch_degree: usize,
}

impl CorpusReport {
    pub fn is_clean(&self) -> bool {
        self.engine_mismatches.is_empty()
            && self.nonvanishing_mismatches.is_empty()
            && self.saturation_counterexamples.is_empty()
            && self.stretch_failures.is_empty()
    }
}

/// All pairs `(α, β)` with `|α| + |β| ≤ max_size` and heights at most
/// `max_height`, in a fixed order.
pub fn corpus_pairs(max_size: usize, max_height: usize) -> Vec<(Partition, Partition)> {
    let by_size: Vec<Vec<Partition>> = (0..=max_size).map(|s| Partition::all_with_max_height(s, max_height)).collect();
    let mut out = Vec::new();
    for total in 0..=max_size {
        for sa in 0..=total {
            for alpha in &by_size[sa] {
                for beta in &by_size[total - sa] {
                    out.push((alpha.clone(), beta.clone()));
                }
            }
        }
    }
    out
}

/// Runs the four LR engines on every triple of the corpus: the LR rule, the
/// lattice points of the LR polytope, highest-weight pairs in the crystal
/// `B_α ⊗ B_β` and the Schur expansion of `s_α s_β`.
pub fn run_corpus(opts: &CorpusOptions) -> Result<CorpusReport> {
    let n = opts.max_height.max(1);
    let mut schur_cache: HashMap<Partition, crate::poly::Poly> = HashMap::new();
    let mut schur = |p: &Partition| -> crate::poly::Poly {
        schur_cache.entry(p.clone()).or_insert_with(|| schur_polynomial(p, n).into_poly()).clone()
    };
    let mut report = CorpusReport::default();
    for (alpha, beta) in corpus_pairs(opts.max_size, opts.max_height) {
        let product = schur(&alpha).mul(&schur(&beta));
        let expansion: BTreeMap<Partition, Rational> = decompose_into_schur(&product)?;
        let crystal = lr_via_crystals_all(&alpha, &beta, n)?;
        for gamma in Partition::all_with_max_height(alpha.size() + beta.size(), opts.max_height) {
            let inst = LRInstance::new(alpha.clone(), beta.clone(), gamma.clone());
            let lr_rule = lr_count(&inst);
            let polytope = lr_polytope(&inst, None)?.count_lattice_points()?;
            let crystal_value = crystal.get(&gamma).copied().unwrap_or(0);
            let schur_value = match expansion.get(&gamma) {
                None => 0,
                Some(c) if c.is_integer() && !c.is_negative() => c.to_integer().to_u64().unwrap_or(u64::MAX),
                Some(c) => {
                    return Err(Error::ValidationFailed(format!("Schur coefficient {c} for {inst:?}")));
                }
            };
            let values = EngineValues { instance: inst.clone(), lr_rule, polytope, crystal: crystal_value, schur: schur_value };
            report.triples += 1;
            if lr_rule > 0 {
                report.nonzero += 1;
            }
            if !values.agree() {
                report.engine_mismatches.push(values);
            }
            if decide_nonvanishing(&inst) != (lr_rule > 0) {
                report.nonvanishing_mismatches.push(inst.clone());
            }
            if lr_rule == 0 {
                for &k in &opts.saturation_ks {
                    report.saturation_checked += 1;
                    if stretch_lr(&inst, k) != 0 {
                        report.saturation_counterexamples.push((inst.clone(), k));
                    }
                }
            } else if opts.stretch {
                let kmax = stretching_kmax(&inst)?.max(3);
                match fit_stretching(&inst, kmax) {
                    Ok(q) => {
                        report.stretch_fitted += 1;
                        report.max_stretch_degree = report.max_stretch_degree.max(q.degree().unwrap_or(0));
                        if !q.is_positive() || q.period != 1 {
                            report.stretch_negative.push(inst.clone());
                        }
                        if q.eval(1).is_zero() {
                            report.stretch_failures.push(StretchFailure {
                                instance: inst.clone(),
                                reason: "fitted polynomial vanishes at k = 1".into(),
                            });
                        }
                    }
                    Err(e) => report.stretch_failures.push(StretchFailure { instance: inst.clone(), reason: e.to_string() }),
                }
            }
        }
    }
    Ok(report)
}

/// Lattice points of [`lr_polytope`].
pub fn count_polytope_points(inst: &LRInstance, rank: Option<usize>) -> Result<u64> {
    let p = lr_polytope(inst, rank)?;
    Ok(match LatticeCounter::new(&p)? {
        None => 0,
        Some(c) => c.count(1),
    })
}
