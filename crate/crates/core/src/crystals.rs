//! Type A crystals on words: the signature rule, highest-weight elements and
//! the Littlewood-Richardson coefficient as a count of highest-weight pairs.
//!
//! Convention: in the signature for `i`, each letter `i` is a `+` and each
//! `i+1` a `−`. Adjacent pairs `−+` cancel until the survivors read
//! `+…+−…−`. `f_i` changes the rightmost surviving `+` to `i+1`, `e_i` the
//! leftmost surviving `−` to `i`. A word is then highest weight exactly when
//! it is a reverse lattice word.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{content_of_word, for_each_ssyt, Partition, SkewShape, Tableau};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalWord {
    letters: Vec<u32>,
    rank: usize,
}

impl CrystalWord {
    pub fn new(letters: Vec<u32>, rank: usize) -> Result<Self> {
        if let Some(&x) = letters.iter().find(|&&x| x == 0 || x as usize > rank) {
            return Err(Error::InvalidArgument(format!("letter {x} outside the alphabet 1..{rank}")));
        }
        Ok(CrystalWord { letters, rank })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Content vector of length `rank`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = content_of_word(&self.letters);
        w.resize(self.rank, 0);
        w
    }

    /// Concatenation `self ⊗ other`.
    pub fn tensor(&self, other: &CrystalWord) -> CrystalWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        CrystalWord { letters, rank: self.rank.max(other.rank) }
    }

    pub fn e(&self, i: u32) -> Option<CrystalWord> {
        e_word(&self.letters, i).map(|letters| CrystalWord { letters, rank: self.rank })
    }

    pub fn f(&self, i: u32) -> Option<CrystalWord> {
        if i as usize >= self.rank {
            return None;
        }
        f_word(&self.letters, i).map(|letters| CrystalWord { letters, rank: self.rank })
    }

    pub fn is_highest_weight(&self) -> bool {
        is_highest_weight(&self.letters, self.rank)
    }
}

impl Serialize for CrystalWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CrystalWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let letters = Vec::<u32>::deserialize(d)?;
        let rank = letters.iter().copied().max().unwrap_or(0) as usize;
        Ok(CrystalWord { letters, rank })
    }
}

/// Positions of the surviving `+` and `−` marks for operator index `i`.
pub fn signature(w: &[u32], i: u32) -> (Vec<usize>, Vec<usize>) {
    let mut plus = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (p, &x) in w.iter().enumerate() {
        if x == i + 1 {
            minus.push(p);
        } else if x == i && minus.pop().is_none() {
            plus.push(p);
        }
    }
    (plus, minus)
}

pub fn e_word(w: &[u32], i: u32) -> Option<Vec<u32>> {
    if i == 0 {
        return None;
    }
    let (_, minus) = signature(w, i);
    let &p = minus.first()?;
    let mut out = w.to_vec();
    out[p] = i;
    Some(out)
}

pub fn f_word(w: &[u32], i: u32) -> Option<Vec<u32>> {
    if i == 0 {
        return None;
    }
    let (plus, _) = signature(w, i);
    let &p = plus.last()?;
    let mut out = w.to_vec();
    out[p] = i + 1;
    Some(out)
}

/// Killed by every `e_i`, `1 ≤ i < rank`.
pub fn is_highest_weight(w: &[u32], rank: usize) -> bool {
    (1..rank as u32).all(|i| signature(w, i).1.is_empty())
}

/// An element of `B_λ`: a semistandard tableau of straight shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalElement {
    tableau: Tableau,
    rank: usize,
}

impl CrystalElement {
    pub fn new(tableau: Tableau, rank: usize) -> Result<Self> {
        if !tableau.shape().inner().is_empty() {
            return Err(Error::InvalidArgument("crystal elements need a straight shape".into()));
        }
        if !tableau.is_semistandard() {
            return Err(Error::InvalidArgument("tableau is not semistandard".into()));
        }
        CrystalWord::new(tableau.row_word(), rank)?;
        Ok(CrystalElement { tableau, rank })
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn word(&self) -> CrystalWord {
        CrystalWord { letters: self.tableau.row_word(), rank: self.rank }
    }

    pub fn weight(&self) -> Vec<usize> {
        self.word().weight()
    }

    pub fn e(&self, i: u32) -> Option<CrystalElement> {
        let w = self.word().e(i)?;
        self.rebuild(w.letters())
    }

    pub fn f(&self, i: u32) -> Option<CrystalElement> {
        let w = self.word().f(i)?;
        self.rebuild(w.letters())
    }

    fn rebuild(&self, word: &[u32]) -> Option<CrystalElement> {
        let t = tableau_from_row_word(self.tableau.shape().outer(), word)?;
        Some(CrystalElement { tableau: t, rank: self.rank })
    }
}

/// Inverse of `row_word` on straight shapes; `None` on a length mismatch.
pub fn tableau_from_row_word(shape: &Partition, word: &[u32]) -> Option<Tableau> {
    if word.len() != shape.size() {
        return None;
    }
    let mut rows = vec![Vec::new(); shape.height()];
    let mut pos = 0;
    for r in (0..shape.height()).rev() {
        rows[r] = word[pos..pos + shape.part(r)].to_vec();
        pos += shape.part(r);
    }
    Tableau::from_rows(rows).ok()
}

/// Row words of all elements of `B_λ` with letters in `1..rank`.
pub fn crystal_words(lambda: &Partition, rank: usize) -> Vec<Vec<u32>> {
    let shape = SkewShape::straight(lambda.clone());
    let mut out = Vec::new();
    for_each_ssyt(&shape, rank as u32, |rows| {
        out.push(rows.iter().rev().flatten().copied().collect());
    });
    out
}

fn check_rank(parts: &[&Partition], rank: usize) -> Result<()> {
    let height = parts.iter().map(|p| p.height()).max().unwrap_or(0);
    if rank < height {
        return Err(Error::RankTooSmall { rank, height });
    }
    Ok(())
}

/// Number of pairs `(b, b')` in `B_α × B_β` with `b ⊗ b'` highest weight of
/// weight `γ`.
pub fn lr_via_crystals(alpha: &Partition, beta: &Partition, gamma: &Partition, rank: usize) -> Result<u64> {
    check_rank(&[alpha, beta, gamma], rank)?;
    if gamma.size() != alpha.size() + beta.size() {
        return Ok(0);
    }
    let mut target = gamma.parts().to_vec();
    target.resize(rank, 0);
    let right = crystal_words(beta, rank);
    let mut by_weight: HashMap<Vec<usize>, Vec<&Vec<u32>>> = HashMap::new();
    for w in &right {
        let mut c = content_of_word(w);
        c.resize(rank, 0);
        by_weight.entry(c).or_default().push(w);
    }
    let mut count = 0;
    for left in crystal_words(alpha, rank) {
        let mut c = content_of_word(&left);
        c.resize(rank, 0);
        if c.iter().zip(&target).any(|(a, g)| a > g) {
            continue;
        }
        let need: Vec<usize> = target.iter().zip(&c).map(|(g, a)| g - a).collect();
        for w in by_weight.get(&need).into_iter().flatten() {
            let mut word = left.clone();
            word.extend_from_slice(w);
            if is_highest_weight(&word, rank) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Highest-weight counts of `B_α ⊗ B_β` for every weight at once.
pub fn lr_via_crystals_all(alpha: &Partition, beta: &Partition, rank: usize) -> Result<BTreeMap<Partition, u64>> {
    check_rank(&[alpha, beta], rank)?;
    let right = crystal_words(beta, rank);
    let mut out = BTreeMap::new();
    for left in crystal_words(alpha, rank) {
        for w in &right {
            let mut word = left.clone();
            word.extend_from_slice(w);
            if is_highest_weight(&word, rank) {
                let gamma = Partition::new(content_of_word(&word))?;
                *out.entry(gamma).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// A connected component of a crystal graph on words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub highest_weights: Vec<Vec<u32>>,
    pub size: usize,
}

/// Connected components of `B_α ⊗ B_β` under the `e_i` and `f_i` edges.
pub fn tensor_components(alpha: &Partition, beta: &Partition, rank: usize) -> Result<Vec<Component>> {
    check_rank(&[alpha, beta], rank)?;
    let right = crystal_words(beta, rank);
    let mut words = Vec::new();
    for left in crystal_words(alpha, rank) {
        for w in &right {
            let mut word = left.clone();
            word.extend_from_slice(w);
            words.push(word);
        }
    }
    let index: HashMap<&Vec<u32>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, w) in words.iter().enumerate() {
        for i in 1..rank as u32 {
            if let Some(v) = f_word(w, i) {
                let b = *index.get(&v).ok_or_else(|| {
                    Error::ValidationFailed(format!("f_{i} leaves the tensor product at {w:?}"))
                })?;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut comps: BTreeMap<usize, Component> = BTreeMap::new();
    for (a, w) in words.iter().enumerate() {
        let r = find(&mut parent, a);
        let c = comps.entry(r).or_insert(Component { highest_weights: Vec::new(), size: 0 });
        c.size += 1;
        if is_highest_weight(w, rank) {
            c.highest_weights.push(w.clone());
        }
    }
    Ok(comps.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::is_reverse_lattice_word;

    fn p(x: &[usize]) -> Partition {
        Partition::from_parts(x)
    }

    #[test]
    fn operator_examples() {
        assert_eq!(e_word(&[], 1), None);
        assert_eq!(f_word(&[1], 1), Some(vec![2]));
        assert_eq!(e_word(&[2], 1), Some(vec![1]));
        assert_eq!(f_word(&[1, 1], 1), Some(vec![1, 2]));
        assert!(is_highest_weight(&[2, 1], 2));
        assert!(!is_highest_weight(&[1, 2], 2));
        assert!(is_highest_weight(&[], 3));
    }

    #[test]
    fn superstandard_is_highest_weight() {
        for lambda in Partition::all(6) {
            let rows: Vec<Vec<u32>> =
                (0..lambda.height()).map(|r| vec![r as u32 + 1; lambda.part(r)]).collect();
            let t = Tableau::from_rows(rows).unwrap();
            assert!(is_highest_weight(&t.row_word(), lambda.height().max(1)));
        }
    }

    #[test]
    fn highest_weight_matches_lattice_words() {
        let mut w = vec![1u32; 5];
        loop {
            assert_eq!(is_highest_weight(&w, 3), is_reverse_lattice_word(&w), "{w:?}");
            let Some(i) = w.iter().rposition(|&x| x < 3) else { break };
            w[i] += 1;
            for x in &mut w[i + 1..] {
                *x = 1;
            }
        }
    }

    #[test]
    fn element_operators_stay_semistandard() {
        let lambda = p(&[2, 1]);
        let words = crystal_words(&lambda, 3);
        for w in &words {
            let el = CrystalElement::new(tableau_from_row_word(&lambda, w).unwrap(), 3).unwrap();
            for i in 1..3 {
                if let Some(g) = el.f(i) {
                    assert!(g.tableau().is_semistandard());
                    assert_eq!(g.e(i).unwrap(), el);
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_via_crystals(&p(&[2, 1]), &p(&[]), &p(&[2, 1]), 2).unwrap(), 1);
        assert_eq!(lr_via_crystals(&p(&[2, 1]), &p(&[]), &p(&[3]), 2).unwrap(), 0);
        assert_eq!(lr_via_crystals(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3).unwrap(), 2);
        assert!(matches!(
            lr_via_crystals(&p(&[1, 1, 1]), &p(&[1]), &p(&[2, 1, 1]), 2),
            Err(Error::RankTooSmall { .. })
        ));
    }

    #[test]
    fn components_have_one_highest_weight() {
        let comps = tensor_components(&p(&[2, 1]), &p(&[1, 1]), 3).unwrap();
        let mut total = 0;
        for c in &comps {
            assert_eq!(c.highest_weights.len(), 1);
            let gamma = Partition::new(content_of_word(&c.highest_weights[0])).unwrap();
            assert_eq!(c.size, crystal_words(&gamma, 3).len());
            total += c.size;
        }
        assert_eq!(total, 8 * 3);
    }
}
