//! Exact rational polytopes `{x : A x ≤ b}` (optionally with `x ≥ 0`).

pub mod ehrhart;
pub mod lp;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{solve_unique, RowSpace};
use crate::rational::{int, Rational};

pub use ehrhart::{ehrhart_quasipolynomial, ehrhart_series, EhrhartSeries, Quasipolynomial};
pub use lp::{FeasibleBasis, LpOutcome};

/// The polytope `{x ∈ Q^d : A x ≤ b}`, intersected with the nonnegative
/// orthant when `nonneg` is set. Dilation by `k` replaces `b` with `k b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolytope {
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
    nonneg: bool,
    dim: usize,
}

impl RationalPolytope {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<i64>, nonneg: bool) -> Result<Self> {
        let dim = a.first().map_or(0, |r| r.len());
        Self::with_dim(a, b, nonneg, dim)
    }

    /// Like [`RationalPolytope::new`] but with an explicit ambient dimension,
    /// needed when there are no constraint rows.
    pub fn with_dim(a: Vec<Vec<i64>>, b: Vec<i64>, nonneg: bool, dim: usize) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::SizeMismatch(format!("{} rows in A but {} entries in b", a.len(), b.len())));
        }
        if let Some(r) = a.iter().position(|r| r.len() != dim) {
            return Err(Error::SizeMismatch(format!("row {} of A has length {}, expected {dim}", r + 1, a[r].len())));
        }
        Ok(RationalPolytope { a, b, nonneg, dim })
    }

    pub fn a(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn nonneg(&self) -> bool {
        self.nonneg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dilate(&self, k: i64) -> RationalPolytope {
        RationalPolytope { b: self.b.iter().map(|x| x * k).collect(), ..self.clone() }
    }

    /// All constraint rows, including `-x_j ≤ 0` when `nonneg` is set.
    pub fn all_rows(&self) -> (Vec<Vec<i64>>, Vec<i64>) {
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        if self.nonneg {
            for j in 0..self.dim {
                let mut row = vec![0; self.dim];
                row[j] = -1;
                a.push(row);
                b.push(0);
            }
        }
        (a, b)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if self.nonneg && x.iter().any(|v| v.is_negative()) {
            return false;
        }
        self.a.iter().zip(&self.b).all(|(row, &bi)| dot_i64(row, x) <= int(bi))
    }

    fn rational_system(&self) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let a = self.a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let b = self.b.iter().map(|&x| int(x)).collect();
        (a, b)
    }

    /// Phase one of the simplex method; `None` if the polytope is empty.
    pub fn feasible_basis(&self) -> Option<FeasibleBasis> {
        let (a, b) = self.rational_system();
        FeasibleBasis::new(&a, &b, self.dim, self.nonneg)
    }

    /// A rational point of the polytope, if it is nonempty.
    pub fn feasible(&self) -> Option<Vec<Rational>> {
        self.feasible_basis().map(|fb| fb.point())
    }

    pub fn maximize(&self, c: &[Rational]) -> Result<LpOutcome> {
        if c.len() != self.dim {
            return Err(Error::SizeMismatch(format!("objective has length {}, expected {}", c.len(), self.dim)));
        }
        Ok(match self.feasible_basis() {
            None => LpOutcome::Infeasible,
            Some(fb) => fb.maximize(c),
        })
    }

    /// Exact `[min x_j, max x_j]` for every coordinate; `None` if empty.
    pub fn bounding_box(&self) -> Result<Option<Vec<(Rational, Rational)>>> {
        let Some(fb) = self.feasible_basis() else {
            return Ok(None);
        };
        let mut bx = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut e = vec![Rational::zero(); self.dim];
            e[j] = int(1);
            let hi = match fb.maximize(&e) {
                LpOutcome::Optimal { value, .. } => value,
                _ => return Err(Error::Unbounded),
            };
            e[j] = int(-1);
            let lo = match fb.maximize(&e) {
                LpOutcome::Optimal { value, .. } => -value,
                _ => return Err(Error::Unbounded),
            };
            bx.push((lo, hi));
        }
        Ok(Some(bx))
    }

    /// `|P ∩ Z^d|` by enumeration over the integer bounding box.
    pub fn count_lattice_points(&self) -> Result<u64> {
        match LatticeCounter::new(self)? {
            None => Ok(0),
            Some(c) => Ok(c.count(1)),
        }
    }

    /// The affine hull, from the implicit equalities of the system.
    pub fn affine_span(&self) -> Result<AffineSubspace> {
        let fb = self.feasible_basis().ok_or(Error::EmptyPolytope)?;
        let (rows, rhs) = self.all_rows();
        let m = rows.len();
        let mut loose = vec![false; m];
        let mark = |x: &[Rational], loose: &mut Vec<bool>| {
            for i in 0..m {
                if !loose[i] && dot_i64(&rows[i], x) < int(rhs[i]) {
                    loose[i] = true;
                }
            }
        };
        mark(&fb.point(), &mut loose);
        let mut implicit = Vec::new();
        for i in 0..m {
            if loose[i] {
                continue;
            }
            let neg: Vec<Rational> = rows[i].iter().map(|&x| int(-x)).collect();
            match fb.maximize(&neg) {
                LpOutcome::Optimal { value, point } => {
                    // max slack = b_i + max(-a_i x)
                    if (int(rhs[i]) + value).is_zero() {
                        implicit.push(i);
                    } else {
                        mark(&point, &mut loose);
                    }
                }
                _ => loose[i] = true,
            }
        }
        let mut space = RowSpace::new();
        let mut c = Vec::new();
        let mut d = Vec::new();
        for i in implicit {
            if space.insert(rows[i].iter().map(|&x| int(x)).collect()) {
                c.push(rows[i].clone());
                d.push(rhs[i]);
            }
        }
        Ok(AffineSubspace { c, d, dim: self.dim })
    }

    /// Vertices, by enumerating basic solutions of `d` independent tight rows.
    pub fn vertices(&self) -> Result<Vec<Vec<Rational>>> {
        const NODE_CAP: usize = 2_000_000;
        let (rows, rhs) = self.all_rows();
        let rows_q: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let rhs_q: Vec<Rational> = rhs.iter().map(|&x| int(x)).collect();
        let mut found = BTreeSet::new();
        let mut nodes = 0usize;
        let mut chosen = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn rec(
            start: usize,
            space: &RowSpace,
            chosen: &mut Vec<usize>,
            p: &RationalPolytope,
            rows_q: &[Vec<Rational>],
            rhs_q: &[Rational],
            found: &mut BTreeSet<Vec<Rational>>,
            nodes: &mut usize,
        ) -> Result<()> {
            *nodes += 1;
            if *nodes > NODE_CAP {
                return Err(Error::TooLarge("vertex enumeration exceeded its node budget".into()));
            }
            if chosen.len() == p.dim {
                let m: Vec<Vec<Rational>> = chosen.iter().map(|&i| rows_q[i].clone()).collect();
                let r: Vec<Rational> = chosen.iter().map(|&i| rhs_q[i].clone()).collect();
                if let Some(x) = solve_unique(&m, &r) {
                    let all_ok = rows_q.iter().zip(rhs_q).all(|(row, bi)| {
                        row.iter().zip(&x).fold(Rational::zero(), |acc, (a, v)| acc + a * v) <= *bi
                    });
                    if all_ok {
                        found.insert(x);
                    }
                }
                return Ok(());
            }
            let need = p.dim - chosen.len();
            for i in start..rows_q.len() {
                if rows_q.len() - i < need {
                    break;
                }
                let mut next = space.clone();
                if next.insert(rows_q[i].clone()) {
                    chosen.push(i);
                    rec(i + 1, &next, chosen, p, rows_q, rhs_q, found, nodes)?;
                    chosen.pop();
                }
            }
            Ok(())
        }
        rec(0, &RowSpace::new(), &mut chosen, self, &rows_q, &rhs_q, &mut found, &mut nodes)?;
        Ok(found.into_iter().collect())
    }
}

fn dot_i64(row: &[i64], x: &[Rational]) -> Rational {
    row.iter()
        .zip(x)
        .filter(|(a, _)| **a != 0)
        .fold(Rational::zero(), |acc, (&a, v)| acc + int(a) * v)
}

/// Counts lattice points of the dilations `kP`, reusing one exact bounding
/// box of `P` (the box of `kP` is `k` times it).
#[derive(Clone, Debug)]
pub struct LatticeCounter {
    a: Vec<Vec<i128>>,
    b: Vec<i128>,
    bbox: Vec<(Rational, Rational)>,
}

impl LatticeCounter {
    /// `None` when the polytope is empty.
    pub fn new(p: &RationalPolytope) -> Result<Option<Self>> {
        let Some(bbox) = p.bounding_box()? else {
            return Ok(None);
        };
        Ok(Some(LatticeCounter {
            a: p.a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect(),
            b: p.b.iter().map(|&x| x as i128).collect(),
            bbox,
        }))
    }

    pub fn count(&self, k: i64) -> u64 {
        let mut n = 0;
        self.for_each_point(k, |_| n += 1);
        n
    }

    /// Smallest `k ≥ 1` up to `limit` with a lattice point in `kP`.
    pub fn first_nonempty_dilation(&self, limit: i64) -> Option<i64> {
        (1..=limit).find(|&k| self.has_point(k))
    }

    pub fn has_point(&self, k: i64) -> bool {
        let mut found = false;
        self.search(k, &mut |_| {
            found = true;
            false
        });
        found
    }

    pub fn for_each_point(&self, k: i64, mut visit: impl FnMut(&[i128])) {
        self.search(k, &mut |x| {
            visit(x);
            true
        });
    }

    fn search(&self, k: i64, visit: &mut dyn FnMut(&[i128]) -> bool) {
        let kq = int(k);
        let d = self.bbox.len();
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for (l, h) in &self.bbox {
            let l = (l * &kq).ceil().to_integer();
            let h = (h * &kq).floor().to_integer();
            if l > h {
                return;
            }
            lo.push(to_i128(&l));
            hi.push(to_i128(&h));
        }
        let b: Vec<i128> = self.b.iter().map(|x| x * k as i128).collect();
        // rest_min[r][t] = Σ_{j ≥ t} min over the box of a_rj x_j
        let m = self.a.len();
        let mut rest_min = vec![vec![0i128; d + 1]; m];
        for r in 0..m {
            for t in (0..d).rev() {
                let a = self.a[r][t];
                rest_min[r][t] = rest_min[r][t + 1] + (a * lo[t]).min(a * hi[t]);
            }
            if d == 0 && b[r] < 0 {
                return;
            }
        }
        let mut x = vec![0i128; d];
        let mut partial = vec![0i128; m];
        dfs(0, &self.a, &b, &lo, &hi, &rest_min, &mut x, &mut partial, visit);
    }
}

fn to_i128(x: &BigInt) -> i128 {
    x.to_i128().expect("lattice box coordinate exceeds i128")
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    t: usize,
    a: &[Vec<i128>],
    b: &[i128],
    lo: &[i128],
    hi: &[i128],
    rest_min: &[Vec<i128>],
    x: &mut Vec<i128>,
    partial: &mut Vec<i128>,
    visit: &mut dyn FnMut(&[i128]) -> bool,
) -> bool {
    let d = lo.len();
    if t == d {
        return visit(x);
    }
    let (mut l, mut h) = (lo[t], hi[t]);
    for r in 0..a.len() {
        let c = a[r][t];
        if c == 0 {
            continue;
        }
        let room = b[r] - partial[r] - rest_min[r][t + 1];
        if c > 0 {
            h = h.min(room.div_euclid(c));
        } else {
            // c x ≤ room  ⇔  x ≥ ceil(room / c)
            l = l.max(-((room).div_euclid(-c)));
        }
        if l > h {
            return true;
        }
    }
    for v in l..=h {
        x[t] = v;
        for r in 0..a.len() {
            partial[r] += a[r][t] * v;
        }
        let go_on = dfs(t + 1, a, b, lo, hi, rest_min, x, partial, visit);
        for r in 0..a.len() {
            partial[r] -= a[r][t] * v;
        }
        if !go_on {
            return false;
        }
    }
    true
}

/// The affine subspace `{x : C x = d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineSubspace {
    #[serde(rename = "C")]
    pub c: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub dim: usize,
}

impl AffineSubspace {
    pub fn is_consistent(&self) -> bool {
        let a: Vec<Vec<Rational>> = self.c.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let b: Vec<Rational> = self.d.iter().map(|&x| int(x)).collect();
        self.c.is_empty() || crate::linalg::solve_any(&a, &b).is_some()
    }

    /// Dimension of the subspace (ambient dimension minus the rank of `C`).
    pub fn dimension(&self) -> usize {
        let a: Vec<Vec<Rational>> = self.c.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        self.dim - crate::linalg::rank(&a)
    }
}

impl Serialize for RationalPolytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeRepr { a: self.a.clone(), b: self.b.clone(), nonneg: self.nonneg, dim: Some(self.dim) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolytopeRepr::deserialize(d)?;
        let dim = r.dim.unwrap_or_else(|| r.a.first().map_or(0, |row| row.len()));
        RationalPolytope::with_dim(r.a, r.b, r.nonneg, dim).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PolytopeRepr {
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
    #[serde(default)]
    nonneg: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
}
