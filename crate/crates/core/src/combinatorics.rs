//! Partitions, skew shapes, tableaux and lattice words.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (trailing zeros trimmed).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts known to be weakly decreasing.
    ///
    /// Panics otherwise; meant for literals and internal construction.
    pub fn from_parts(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero-based), zero beyond the height.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height() && (0..other.height()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn scaled(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition { parts: self.parts.iter().map(|p| p * k).collect() }
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition {
            parts: (0..w).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect(),
        }
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.height().max(other.height());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        Partition::all_with_max_height(n, usize::MAX)
    }

    pub fn all_with_max_height(n: usize, max_height: usize) -> Vec<Partition> {
        fn rec(rem: usize, max_part: usize, max_height: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == max_height {
                return;
            }
            for p in (1..=rem.min(max_part)).rev() {
                cur.push(p);
                rec(rem - p, p, max_height, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_height, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux of this shape, by removing corners.
    pub fn standard_tableaux_count(&self) -> u64 {
        fn rec(parts: &mut Vec<usize>, memo: &mut std::collections::HashMap<Vec<usize>, u64>) -> u64 {
            if parts.iter().all(|&p| p == 0) {
                return 1;
            }
            if let Some(&v) = memo.get(parts.as_slice()) {
                return v;
            }
            let mut total = 0;
            for i in 0..parts.len() {
                let next = parts.get(i + 1).copied().unwrap_or(0);
                if parts[i] > next {
                    parts[i] -= 1;
                    total += rec(parts, memo);
                    parts[i] += 1;
                }
            }
            memo.insert(parts.clone(), total);
            total
        }
        rec(&mut self.parts.clone(), &mut Default::default())
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(rows: usize, width: usize) -> Partition {
        if width == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![width; rows] }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    // inner padded to the height of outer
    padded_inner: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!("{inner} is not contained in {outer}")));
        }
        let padded_inner = (0..outer.height()).map(|i| inner.part(i)).collect();
        Ok(SkewShape { outer, inner, padded_inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape::new(shape, Partition::empty()).expect("empty partition is contained in every shape")
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.height()
    }

    /// Column range `[start, end)` of row `i`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.padded_inner[i], self.outer.part(i))
    }

    pub fn row_len(&self, i: usize) -> usize {
        let (a, b) = self.row_range(i);
        b - a
    }

    pub fn num_boxes(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row < self.rows() && {
            let (a, b) = self.row_range(row);
            a <= col && col < b
        }
    }
}

/// A filling of a skew shape by positive integers, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        // rows beyond the shape must be empty
        let mut rows = rows;
        while rows.len() > shape.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() != shape.rows() {
            return Err(Error::InvalidArgument(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != shape.row_len(i) {
                return Err(Error::InvalidArgument(format!(
                    "row {} has {} entries, shape needs {}",
                    i + 1,
                    r.len(),
                    shape.row_len(i)
                )));
            }
            if r.contains(&0) {
                return Err(Error::InvalidArgument("entries must be positive".into()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// A straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let parts: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let shape = SkewShape::straight(Partition::new(parts)?);
        Tableau::new(shape, rows)
    }

    pub fn empty() -> Self {
        Tableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at an absolute (row, column) position, if that box is in the shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        if !self.shape.contains_box(row, col) {
            return None;
        }
        let (a, _) = self.shape.row_range(row);
        Some(self.rows[row][col - a])
    }

    pub fn is_semistandard(&self) -> bool {
        for (i, r) in self.rows.iter().enumerate() {
            if r.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i > 0 {
                let (a, b) = self.shape.row_range(i);
                for c in a..b {
                    if let Some(above) = self.entry(i - 1, c) {
                        if above >= self.entry(i, c).unwrap() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        let n = self.shape.num_boxes() as u32;
        let mut seen = vec![false; n as usize + 1];
        for &e in self.rows.iter().flatten() {
            if e > n || seen[e as usize] {
                return false;
            }
            seen[e as usize] = true;
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        self.is_semistandard()
    }

    /// Reading word: rows left to right, bottom row first.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `content[i]` counts the entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        content_of_word(&self.row_word())
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            outer: self.shape.outer.clone(),
            inner: self.shape.inner.clone(),
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TableauRepr::deserialize(d)?;
        let shape = SkewShape::new(r.outer, r.inner).map_err(serde::de::Error::custom)?;
        Tableau::new(shape, r.rows).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

pub fn content_of_word(w: &[u32]) -> Vec<usize> {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; max];
    for &x in w {
        c[x as usize - 1] += 1;
    }
    c
}

/// Read right to left, every prefix has at least as many `i` as `i + 1`.
pub fn is_reverse_lattice_word(w: &[u32]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max + 2];
    for &x in w.iter().rev() {
        let x = x as usize;
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// All semistandard fillings of `shape` with entries in `1..=max_entry`,
/// in lexicographic order of the row-major entry sequence.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, max_entry, |rows| {
        out.push(Tableau { shape: shape.clone(), rows: rows.to_vec() });
    });
    out
}

/// Visits the semistandard fillings in the order of [`enumerate_ssyt`]
/// without materializing them.
pub fn for_each_ssyt(shape: &SkewShape, max_entry: u32, mut visit: impl FnMut(&[Vec<u32>])) {
    let mut rows: Vec<Vec<u32>> = (0..shape.rows()).map(|i| vec![0; shape.row_len(i)]).collect();
    let boxes: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|i| {
            let (a, b) = shape.row_range(i);
            (a..b).map(move |c| (i, c))
        })
        .collect();
    fill(shape, max_entry, &boxes, 0, &mut rows, &mut visit);
}

fn fill(
    shape: &SkewShape,
    max_entry: u32,
    boxes: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    visit: &mut impl FnMut(&[Vec<u32>]),
) {
    if k == boxes.len() {
        visit(rows);
        return;
    }
    let (i, c) = boxes[k];
    let (start, _) = shape.row_range(i);
    let mut lo = 1;
    if c > start {
        lo = lo.max(rows[i][c - start - 1]);
    }
    if i > 0 && shape.contains_box(i - 1, c) {
        let (up_start, _) = shape.row_range(i - 1);
        lo = lo.max(rows[i - 1][c - up_start] + 1);
    }
    for v in lo..=max_entry {
        rows[i][c - start] = v;
        fill(shape, max_entry, boxes, k + 1, rows, visit);
    }
    rows[i][c - start] = 0;
}
