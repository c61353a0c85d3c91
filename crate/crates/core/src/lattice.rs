//! Smith normal form, odd-denominator feasibility and the quasipolynomial
//! index of a polytope.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedra::{AffineSubspace, RationalPolytope};
use crate::rational::{two_adic_valuation, Rational};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `C = U · S · V` with `U`, `V` unimodular and `S` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub original: IntMatrix,
    /// `U^{-1}`, kept so right-hand sides can be transformed without inverting.
    pub u_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries of `S`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.len().min(self.s.first().map_or(0, |r| r.len()));
        (0..n).map(|i| self.s[i][i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

#[derive(Serialize, Deserialize)]
pub struct SmithJson {
    #[serde(rename = "U")]
    pub u: Vec<Vec<i64>>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<i64>>,
    #[serde(rename = "V")]
    pub v: Vec<Vec<i64>>,
}

impl SmithDecomposition {
    pub fn to_json(&self) -> Result<SmithJson> {
        let conv = |m: &IntMatrix| -> Result<Vec<Vec<i64>>> {
            m.iter()
                .map(|r| {
                    r.iter()
                        .map(|x| i64::try_from(x.clone()).map_err(|_| Error::TooLarge(format!("entry {x}"))))
                        .collect()
                })
                .collect()
        };
        Ok(SmithJson { u: conv(&self.u)?, s: conv(&self.s)?, v: conv(&self.v)? })
    }
}

pub fn to_int_matrix(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn int_mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(BigInt::zero(), |acc, (x, br)| acc + x * &br[j]))
                .collect()
        })
        .collect()
}

/// Working state: `P C Q = A` with `U = P^{-1}`, `V = Q^{-1}` tracked alongside.
struct SnfState {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    rows: usize,
    cols: usize,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u_inv.swap(i, j);
        for row in self.u.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        self.v.swap(i, j);
    }

    /// row_i += k row_j
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        for c in 0..self.cols {
            let t = k * &self.a[j][c];
            self.a[i][c] += t;
        }
        for c in 0..self.rows {
            let t = k * &self.u_inv[j][c];
            self.u_inv[i][c] += t;
        }
        // U ← U E^{-1}: column j of U -= k column i
        for r in 0..self.rows {
            let t = k * &self.u[r][i];
            self.u[r][j] -= t;
        }
    }

    /// col_i += k col_j
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        for r in 0..self.rows {
            let t = k * &self.a[r][j];
            self.a[r][i] += t;
        }
        // V ← F^{-1} V: row j of V -= k row i
        for c in 0..self.cols {
            let t = k * &self.v[i][c];
            self.v[j][c] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -&*x;
        }
        for x in self.u_inv[i].iter_mut() {
            *x = -&*x;
        }
        for r in 0..self.rows {
            self.u[r][i] = -&self.u[r][i];
        }
    }
}

/// Smith normal form by elementary row and column operations, pivoting on
/// the smallest nonzero entry in absolute value.
pub fn smith_normal_form(c: &IntMatrix) -> SmithDecomposition {
    let rows = c.len();
    let cols = c.first().map_or(0, |r| r.len());
    let mut st = SnfState { a: c.clone(), u: identity(rows), u_inv: identity(rows), v: identity(cols), rows, cols };
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !st.a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| st.a[i][j].abs() < st.a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                if !st.a[i][t].is_zero() {
                    let q = st.a[i][t].div_floor(&st.a[t][t]);
                    st.add_row(i, t, &-q);
                    if !st.a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !st.a[t][j].is_zero() {
                    let q = st.a[t][j].div_floor(&st.a[t][t]);
                    st.add_col(j, t, &-q);
                    if !st.a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !st.a[i][j].is_multiple_of(&st.a[t][t])));
            match offending {
                Some(i) => st.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if t < rows && st.a[t][t].is_negative() {
            st.negate_row(t);
        }
    }
    SmithDecomposition { u: st.u, s: st.a, v: st.v, original: c.clone(), u_inv: st.u_inv }
}

fn pad_square(c: &[Vec<i64>], d: &[i64], dim: usize) -> (IntMatrix, Vec<BigInt>) {
    let n = c.len().max(dim);
    let mut m = to_int_matrix(c);
    for row in m.iter_mut() {
        row.resize(n, BigInt::zero());
    }
    m.resize(n, vec![BigInt::zero(); n]);
    let mut rhs: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
    rhs.resize(n, BigInt::zero());
    (m, rhs)
}

/// The diagonal system `s_i z_i = r_i` equivalent to `C x = d` (`z = V x`).
fn diagonal_system(c: &[Vec<i64>], d: &[i64], dim: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if c.len() != d.len() {
        return Err(Error::SizeMismatch(format!("{} rows in C but {} entries in d", c.len(), d.len())));
    }
    if let Some(r) = c.iter().position(|r| r.len() != dim) {
        return Err(Error::SizeMismatch(format!("row {} of C has length {}, expected {dim}", r + 1, c[r].len())));
    }
    let (m, rhs) = pad_square(c, d, dim);
    let snf = smith_normal_form(&m);
    let r: Vec<BigInt> = snf
        .u_inv
        .iter()
        .map(|row| row.iter().zip(&rhs).fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
        .collect();
    Ok((snf.diagonal(), r))
}

/// Whether `{x : C x = d}` has a point all of whose coordinates have odd
/// denominator.
pub fn z2_feasible_affine(c: &[Vec<i64>], d: &[i64], dim: usize) -> Result<bool> {
    let (s, r) = diagonal_system(c, d, dim)?;
    Ok(s.iter().zip(&r).all(|(si, ri)| {
        if si.is_zero() {
            ri.is_zero()
        } else {
            match (two_adic_valuation(ri), two_adic_valuation(si)) {
                (None, _) => true,
                (Some(vr), Some(vs)) => vr >= vs,
                (Some(_), None) => unreachable!(),
            }
        }
    }))
}

pub fn z2_feasible_subspace(aff: &AffineSubspace) -> Result<bool> {
    z2_feasible_affine(&aff.c, &aff.d, aff.dim)
}

/// `P ∩ Z_(2)^d ≠ ∅`: rational feasibility plus an odd-denominator point in
/// the affine hull.
pub fn z2_feasible_polytope(p: &RationalPolytope) -> Result<bool> {
    if p.feasible().is_none() {
        return Ok(false);
    }
    z2_feasible_subspace(&p.affine_span()?)
}

/// The index `c̃ = lcm(c̄_i)` of the Ehrhart quasipolynomial, from the
/// Smith form of the affine hull `C x = d` reduced to coprime equations
/// `c̄_i z_i = d̄_i`.
pub fn quasipolynomial_index(p: &RationalPolytope) -> Result<BigInt> {
    let aff = p.affine_span()?;
    let (s, r) = diagonal_system(&aff.c, &aff.d, aff.dim)?;
    let mut idx = BigInt::one();
    for (si, ri) in s.iter().zip(&r) {
        if si.is_zero() {
            if !ri.is_zero() {
                return Err(Error::InconsistentAffineHull(format!("equation 0 = {ri}")));
            }
            continue;
        }
        let g = si.gcd(ri);
        let reduced = (si / &g).abs();
        idx = idx.lcm(&reduced);
    }
    Ok(idx)
}

/// Decides whether some dilation of `P` contains a lattice point, for
/// saturated integer programs. With `saturation_assumed` the answer is
/// rational feasibility: a nonempty `P` has `f_P(index) ≠ 0`, so
/// `index(P)·P` holds a lattice point. Without the assumption the
/// question falls back to exhaustive lattice enumeration of `P` itself.
pub fn decide_saturated_ip(p: &RationalPolytope, saturation_assumed: bool) -> Result<bool> {
    if saturation_assumed {
        Ok(p.feasible().is_some())
    } else {
        Ok(p.count_lattice_points()? > 0)
    }
}

pub fn in_z2_vector(x: &[Rational]) -> bool {
    x.iter().all(crate::rational::in_z2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_of(m: &[&[i64]]) -> SmithDecomposition {
        smith_normal_form(&to_int_matrix(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()))
    }

    fn diag(d: &[i64]) -> IntMatrix {
        let n = d.len();
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::from(d[i]) } else { BigInt::zero() }).collect())
            .collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf_of(&[&[1, 0], &[0, 1]]).s, diag(&[1, 1]));
        assert_eq!(snf_of(&[&[2, 0], &[0, 3]]).s, diag(&[1, 6]));
        assert_eq!(snf_of(&[&[4, 2], &[2, 4]]).s, diag(&[2, 6]));
        let d = snf_of(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(d.s, diag(&[2, 6, 12]));
        assert_eq!(int_mat_mul(&int_mat_mul(&d.u, &d.s), &d.v), d.original);
        assert_eq!(int_mat_mul(&d.u, &d.u_inv), identity(3));
    }

    #[test]
    fn snf_rectangular_and_zero() {
        let d = snf_of(&[&[0, 0, 0], &[0, 0, 0]]);
        assert!(d.invariant_factors().is_empty());
        let d = snf_of(&[&[6, 4, 2]]);
        assert_eq!(d.invariant_factors(), vec![BigInt::from(2)]);
        assert_eq!(int_mat_mul(&int_mat_mul(&d.u, &d.s), &d.v), d.original);
    }

    #[test]
    fn z2_affine_examples() {
        assert!(z2_feasible_affine(&[vec![1]], &[1], 1).unwrap());
        assert!(!z2_feasible_affine(&[vec![2]], &[1], 1).unwrap());
        assert!(z2_feasible_affine(&[vec![3]], &[1], 1).unwrap());
        assert!(!z2_feasible_affine(&[vec![0]], &[1], 1).unwrap());
        assert!(z2_feasible_affine(&[], &[], 2).unwrap());
    }

    fn poly(a: &[&[i64]], b: &[i64], nonneg: bool) -> RationalPolytope {
        RationalPolytope::new(a.iter().map(|r| r.to_vec()).collect(), b.to_vec(), nonneg).unwrap()
    }

    #[test]
    fn z2_polytope_examples() {
        assert!(!z2_feasible_polytope(&poly(&[&[1], &[-1]], &[1, -2], false)).unwrap());
        assert!(!z2_feasible_polytope(&poly(&[&[2], &[-2]], &[1, -1], false)).unwrap());
        assert!(z2_feasible_polytope(&poly(&[&[3], &[-3]], &[2, -1], false)).unwrap());
    }

    #[test]
    fn index_examples() {
        assert_eq!(quasipolynomial_index(&poly(&[&[1, 0], &[0, 1]], &[1, 1], true)).unwrap(), BigInt::from(1));
        assert_eq!(quasipolynomial_index(&poly(&[&[2], &[-2]], &[1, -1], false)).unwrap(), BigInt::from(2));
        let p = poly(&[&[3, 0], &[-3, 0], &[0, 2], &[0, -2]], &[2, -2, 1, -1], false);
        assert_eq!(quasipolynomial_index(&p).unwrap(), BigInt::from(6));
        assert_eq!(
            quasipolynomial_index(&poly(&[&[1], &[-1]], &[1, -2], false)),
            Err(Error::EmptyPolytope)
        );
    }

    #[test]
    fn saturated_ip_examples() {
        assert!(!decide_saturated_ip(&poly(&[&[1], &[-1]], &[1, -2], false), true).unwrap());
        let half = poly(&[&[2], &[-2]], &[1, -1], false);
        assert!(decide_saturated_ip(&half, true).unwrap());
        assert!(!decide_saturated_ip(&half, false).unwrap());
    }
}
