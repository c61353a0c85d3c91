//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Problems have the form `max c·x  s.t.  A x ≤ b`, with `x ≥ 0` optional.
//! Free variables are split as `x = u - v`. Phase one runs once per
//! constraint system; [`FeasibleBasis::maximize`] then warm-starts phase two
//! from the stored basis for every new objective.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

impl LpOutcome {
    pub fn optimum(&self) -> Option<(&Rational, &[Rational])> {
        match self {
            LpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize, obj: &mut [Rational], obj_val: &mut Rational) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let nz: Vec<usize> = (0..self.ncols).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for &j in &nz {
                let t = &f * &prow[j];
                self.rows[i][j] -= t;
            }
            let t = &f * &prhs;
            self.rhs[i] -= t;
        }
        if !obj[c].is_zero() {
            let f = obj[c].clone();
            for &j in &nz {
                let t = &f * &prow[j];
                obj[j] -= t;
            }
            *obj_val += &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Runs Bland's-rule simplex on reduced costs `obj` (maximization);
    /// columns `>= allowed` never enter. Returns false if unbounded.
    fn run(&mut self, obj: &mut [Rational], obj_val: &mut Rational, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = &self.rhs[i] / a;
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c, obj, obj_val);
        }
    }
}

/// A feasible basis for `A x ≤ b` (plus `x ≥ 0` when `nonneg`), ready to
/// optimize any objective.
#[derive(Clone, Debug)]
pub struct FeasibleBasis {
    tableau: Tableau,
    dim: usize,
    nonneg: bool,
}

impl FeasibleBasis {
    /// Phase one. Returns `None` when the system is infeasible.
    pub fn new(a: &[Vec<Rational>], b: &[Rational], dim: usize, nonneg: bool) -> Option<Self> {
        let m = a.len();
        let nx = if nonneg { dim } else { 2 * dim };
        let n_struct = nx + m;
        let n_art = b.iter().filter(|x| x.is_negative()).count();
        let ncols = n_struct + n_art;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut art = n_struct;
        for (i, (row, bi)) in a.iter().zip(b).enumerate() {
            let mut t = vec![Rational::zero(); ncols];
            for (j, aij) in row.iter().enumerate() {
                t[j] = aij.clone();
                if !nonneg {
                    t[dim + j] = -aij;
                }
            }
            t[nx + i] = Rational::one();
            if bi.is_negative() {
                for x in t.iter_mut() {
                    *x = -&*x;
                }
                t[art] = Rational::one();
                basis.push(art);
                art += 1;
                rhs.push(-bi);
            } else {
                basis.push(nx + i);
                rhs.push(bi.clone());
            }
            rows.push(t);
        }
        let mut tab = Tableau { rows, rhs, basis, ncols };
        if n_art > 0 {
            // maximize -Σ artificials; reduced costs are the column sums of artificial rows
            let mut obj = vec![Rational::zero(); ncols];
            let mut val = Rational::zero();
            for i in 0..m {
                if tab.basis[i] >= n_struct {
                    for j in 0..n_struct {
                        obj[j] += &tab.rows[i][j];
                    }
                    val -= &tab.rhs[i];
                }
            }
            tab.run(&mut obj, &mut val, n_struct);
            if val.is_negative() {
                return None;
            }
            // drive remaining artificials out of the basis, dropping redundant rows
            let mut i = 0;
            while i < tab.rows.len() {
                if tab.basis[i] >= n_struct {
                    match (0..n_struct).find(|&j| !tab.rows[i][j].is_zero()) {
                        Some(j) => {
                            let mut dummy = vec![Rational::zero(); ncols];
                            let mut dv = Rational::zero();
                            tab.pivot(i, j, &mut dummy, &mut dv);
                            i += 1;
                        }
                        None => {
                            tab.rows.remove(i);
                            tab.rhs.remove(i);
                            tab.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
            for row in tab.rows.iter_mut() {
                row.truncate(n_struct);
            }
            tab.ncols = n_struct;
        }
        Some(FeasibleBasis { tableau: tab, dim, nonneg })
    }

    /// The basic feasible solution of the stored basis.
    pub fn point(&self) -> Vec<Rational> {
        Self::extract(&self.tableau, self.dim, self.nonneg)
    }

    fn extract(tab: &Tableau, dim: usize, nonneg: bool) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); dim];
        for (i, &bv) in tab.basis.iter().enumerate() {
            if bv < dim {
                x[bv] += &tab.rhs[i];
            } else if !nonneg && bv < 2 * dim {
                x[bv - dim] -= &tab.rhs[i];
            }
        }
        x
    }

    /// Phase two from the stored basis.
    pub fn maximize(&self, c: &[Rational]) -> LpOutcome {
        assert_eq!(c.len(), self.dim, "objective length must match the dimension");
        let mut tab = self.tableau.clone();
        let mut cost = vec![Rational::zero(); tab.ncols];
        for (j, cj) in c.iter().enumerate() {
            cost[j] = cj.clone();
            if !self.nonneg {
                cost[self.dim + j] = -cj;
            }
        }
        // reduced costs r = c - c_B B^{-1} A, objective value c_B B^{-1} b
        let mut obj = cost.clone();
        let mut val = Rational::zero();
        for (i, &bv) in tab.basis.iter().enumerate() {
            let cb = &cost[bv];
            if cb.is_zero() {
                continue;
            }
            for j in 0..tab.ncols {
                if !tab.rows[i][j].is_zero() {
                    obj[j] -= cb * &tab.rows[i][j];
                }
            }
            val += cb * &tab.rhs[i];
        }
        let ncols = tab.ncols;
        if !tab.run(&mut obj, &mut val, ncols) {
            return LpOutcome::Unbounded;
        }
        let point = Self::extract(&tab, self.dim, self.nonneg);
        LpOutcome::Optimal { value: val, point }
    }
}

/// One-shot `max c·x  s.t.  A x ≤ b` (and `x ≥ 0` if `nonneg`).
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], nonneg: bool, c: &[Rational]) -> LpOutcome {
    match FeasibleBasis::new(a, b, c.len(), nonneg) {
        None => LpOutcome::Infeasible,
        Some(fb) => fb.maximize(c),
    }
}
