//! Ehrhart quasipolynomials and series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LatticeCounter, RationalPolytope};
use crate::error::{Error, Result};
use crate::linalg::solve_unique;
use crate::rational::{denominator_lcm, int, Rational};

pub const DEFAULT_PERIOD_CAP: u64 = 64;

/// `f(k) = f_i(k)` for `k ≡ i (mod period)`, `i = 1..=period`.
///
/// `coeffs[i - 1]` lists the coefficients of `f_i` in ascending powers of
/// `k`, with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quasipolynomial {
    pub period: u64,
    #[serde(with = "coeff_serde")]
    pub coeffs: Vec<Vec<Rational>>,
}

mod coeff_serde {
    pub use crate::rational::serde_mat::{deserialize, serialize};
}

impl Quasipolynomial {
    pub fn new(coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a quasipolynomial needs period >= 1".into()));
        }
        let coeffs = coeffs.into_iter().map(trim).collect::<Vec<_>>();
        Ok(Quasipolynomial { period: coeffs.len() as u64, coeffs })
    }

    pub fn polynomial(coeffs: Vec<Rational>) -> Self {
        Quasipolynomial { period: 1, coeffs: vec![trim(coeffs)] }
    }

    /// The constituent `f_i`, `1 ≤ i ≤ period`.
    pub fn constituent(&self, i: u64) -> &[Rational] {
        &self.coeffs[(i - 1) as usize]
    }

    pub fn eval(&self, k: i64) -> Rational {
        let r = k.rem_euclid(self.period as i64);
        let i = if r == 0 { self.period } else { r as u64 };
        eval_poly(self.constituent(i), &int(k))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().filter(|c| !c.is_empty()).map(|c| c.len() - 1).max()
    }

    /// Smallest `i` whose constituent is not identically zero; 0 if none.
    pub fn index(&self) -> u64 {
        self.coeffs
            .iter()
            .position(|c| !c.is_empty())
            .map_or(0, |i| i as u64 + 1)
    }

    /// Every coefficient of every constituent is nonnegative.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| !c.is_negative())
    }

    /// `f(index(f)) ≠ 0`; the zero quasipolynomial counts as saturated.
    pub fn is_saturated(&self) -> bool {
        match self.index() {
            0 => true,
            i => !self.eval(i as i64).is_zero(),
        }
    }
}

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

pub(crate) fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Interpolates the polynomial of degree `< xs.len()` through the samples.
pub(crate) fn interpolate(xs: &[i64], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let m: Vec<Vec<Rational>> = xs
        .iter()
        .map(|&x| {
            let mut row = Vec::with_capacity(n);
            let mut p = Rational::one();
            for _ in 0..n {
                row.push(p.clone());
                p *= int(x);
            }
            row
        })
        .collect();
    solve_unique(&m, ys).expect("distinct sample points give an invertible Vandermonde system")
}

/// Fits `k ↦ |kP ∩ Z^d|` per residue class and validates on one more round
/// of samples, doubling the period on failure up to `period_cap`.
pub fn ehrhart_quasipolynomial(p: &RationalPolytope, period_cap: u64) -> Result<Quasipolynomial> {
    let counter = LatticeCounter::new(p)?.ok_or(crate::Error::EmptyPolytope)?;
    let dim = p.affine_span()?.dimension();
    let verts = p.vertices()?;
    let lcm = denominator_lcm(verts.iter().flatten());
    let mut period: u64 = lcm.clone()
        .try_into()
        .map_err(|_| Error::TooLarge(format!("vertex denominator lcm {lcm}")))?;
    let mut cache: BTreeMap<i64, Rational> = BTreeMap::new();
    let mut count = |k: i64| -> Rational {
        cache.entry(k).or_insert_with(|| int(counter.count(k) as i64)).clone()
    };
    while period <= period_cap {
        let l = period as i64;
        let samples = dim as i64 + 1;
        let mut coeffs = Vec::with_capacity(period as usize);
        let mut ok = true;
        for r in 1..=l {
            let xs: Vec<i64> = (0..samples).map(|s| r + s * l).collect();
            let ys: Vec<Rational> = xs.iter().map(|&k| count(k)).collect();
            let f = interpolate(&xs, &ys);
            let check = r + samples * l;
            if eval_poly(&f, &int(check)) != count(check) {
                ok = false;
                break;
            }
            coeffs.push(f);
        }
        if ok {
            return Quasipolynomial::new(coeffs);
        }
        period *= 2;
    }
    Err(Error::ValidationFailed(format!("no quasipolynomial with period at most {period_cap} fits the counts")))
}

/// `Σ_k f(k) t^k = A(t) / B(t)` with `B(t) = (1 - t^ℓ)^{D+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartSeries {
    /// Ascending coefficients of `A`.
    pub numerator: Vec<i64>,
    /// Ascending coefficients of `B`.
    pub denominator: Vec<i64>,
}

impl EhrhartSeries {
    /// Power-series coefficients of `A/B` through `t^cap`.
    pub fn expand(&self, cap: usize) -> Vec<Rational> {
        let b0 = int(self.denominator[0]);
        let mut out: Vec<Rational> = Vec::with_capacity(cap + 1);
        for k in 0..=cap {
            let mut v = self.numerator.get(k).map_or_else(Rational::zero, |&a| int(a));
            for j in 1..=k.min(self.denominator.len() - 1) {
                v -= int(self.denominator[j]) * &out[k - j];
            }
            out.push(v / &b0);
        }
        out
    }
}

pub fn ehrhart_series(q: &Quasipolynomial, dim: usize, degree_cap: usize) -> Result<EhrhartSeries> {
    let l = q.period as usize;
    // B = (1 - t^ℓ)^{D+1}
    let mut b = vec![BigInt::one()];
    for _ in 0..=dim {
        let mut next = vec![BigInt::zero(); b.len() + l];
        for (i, c) in b.iter().enumerate() {
            next[i] += c;
            next[i + l] -= c;
        }
        b = next;
    }
    let deg_b = b.len() - 1;
    let top = degree_cap.max(deg_b) + deg_b;
    let values: Vec<Rational> = (0..=top as i64).map(|k| q.eval(k)).collect();
    let mut product = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut s = Rational::zero();
        for j in 0..=k.min(deg_b) {
            if !b[j].is_zero() {
                s += Rational::from_integer(b[j].clone()) * &values[k - j];
            }
        }
        product.push(s);
    }
    if let Some(k) = (deg_b..=top).find(|&k| !product[k].is_zero()) {
        return Err(Error::ValidationFailed(format!("series numerator has a nonzero term of degree {k} >= deg B = {deg_b}")));
    }
    let mut numerator: Vec<i64> = Vec::with_capacity(deg_b);
    for c in &product[..deg_b] {
        if !c.is_integer() {
            return Err(Error::ValidationFailed(format!("non-integral numerator coefficient {c}")));
        }
        numerator.push(c.to_integer().try_into().map_err(|_| Error::TooLarge(c.to_string()))?);
    }
    while numerator.last() == Some(&0) {
        numerator.pop();
    }
    let denominator = b
        .iter()
        .map(|c| i64::try_from(c.clone()).map_err(|_| Error::TooLarge(c.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let series = EhrhartSeries { numerator, denominator };
    let expanded = series.expand(degree_cap);
    if let Some(k) = (0..=degree_cap).find(|&k| expanded[k] != values[k]) {
        return Err(Error::ValidationFailed(format!("series disagrees with f at degree {k}")));
    }
    Ok(series)
}
