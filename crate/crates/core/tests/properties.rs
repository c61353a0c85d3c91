//! Property tests for the invariants of each module.

use proptest::prelude::*;

use gct_core::characters::schur_polynomial;
use gct_core::combinatorics::{
    content_of_word, enumerate_ssyt, is_reverse_lattice_word, Partition, SkewShape, Tableau,
};
use gct_core::crystals::{crystal_words, e_word, f_word, is_highest_weight, lr_via_crystals};
use gct_core::grassmannian::{straighten, vdw_syzygy, BracketPolynomial};
use gct_core::lattice::{int_mat_mul, smith_normal_form, to_int_matrix};
use gct_core::lr::{count_polytope_points, decide_nonvanishing, lr_count, LRInstance};
use gct_core::poly::Poly;
use gct_core::polyhedra::{ehrhart_quasipolynomial, LatticeCounter, RationalPolytope};
use gct_core::rational::{int, Rational};
use gct_core::stability::{kempf_optimal, reynolds, is_invariant, torus_nullcone, FiniteMatrixGroup, WeightVector};
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn word(max_len: usize, max_letter: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max_letter, 0..=max_len)
}

fn lattice_brute_force(w: &[u32]) -> bool {
    (0..=w.len()).all(|start| {
        let suffix = &w[start..];
        let max = suffix.iter().copied().max().unwrap_or(0);
        (1..max).all(|i| {
            suffix.iter().filter(|&&x| x == i).count() >= suffix.iter().filter(|&&x| x == i + 1).count()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partitions_are_canonical(p in partition(6, 5)) {
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(p.parts().last().map_or(true, |&x| x > 0));
        prop_assert_eq!(p.size(), p.parts().iter().sum::<usize>());
        prop_assert_eq!(p.height(), p.parts().len());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn ssyt_enumeration(lambda in partition(3, 3), n in 1u32..=3) {
        let shape = SkewShape::straight(lambda.clone());
        let all = enumerate_ssyt(&shape, n);
        prop_assert!(all.iter().all(|t| t.is_semistandard()));
        prop_assert!(all.iter().all(|t| t.row_word().len() == lambda.size()));
        let mut rows: Vec<_> = all.iter().map(|t| t.rows().to_vec()).collect();
        rows.dedup();
        prop_assert_eq!(rows.len(), all.len());
        let ones = vec![int(1); n as usize];
        let dim = if lambda.height() > n as usize { int(0) } else { schur_polynomial(&lambda, n as usize).poly().eval(&ones) };
        prop_assert_eq!(int(all.len() as i64), dim);
    }

    #[test]
    fn skew_row_words(outer in partition(4, 4), inner in partition(4, 4)) {
        if let Ok(shape) = SkewShape::new(outer, inner) {
            for t in enumerate_ssyt(&shape, 3).into_iter().take(20) {
                prop_assert_eq!(t.row_word().len(), shape.num_boxes());
                let json = serde_json::to_string(&t).unwrap();
                prop_assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
            }
        }
    }

    #[test]
    fn reverse_lattice_matches_brute_force(w in word(9, 4)) {
        prop_assert_eq!(is_reverse_lattice_word(&w), lattice_brute_force(&w));
    }

    #[test]
    fn crystal_operators_are_partial_inverses(w in word(10, 4), i in 1u32..4) {
        if let Some(v) = f_word(&w, i) {
            prop_assert_eq!(e_word(&v, i), Some(w.clone()));
            let (cw, cv) = (content_of_word(&w), content_of_word(&v));
            let at = |c: &Vec<usize>, k: u32| c.get(k as usize - 1).copied().unwrap_or(0);
            prop_assert_eq!(at(&cv, i) + 1, at(&cw, i));
            prop_assert_eq!(at(&cv, i + 1), at(&cw, i + 1) + 1);
        }
        if let Some(v) = e_word(&w, i) {
            prop_assert_eq!(f_word(&v, i), Some(w.clone()));
        }
    }

    #[test]
    fn highest_weight_is_reverse_lattice(w in word(10, 4)) {
        prop_assert_eq!(is_highest_weight(&w, 4), is_reverse_lattice_word(&w));
    }

    #[test]
    fn crystal_closure_on_tableaux(lambda in partition(3, 3)) {
        let words = crystal_words(&lambda, 3);
        let set: std::collections::HashSet<_> = words.iter().cloned().collect();
        for w in &words {
            for i in 1..3 {
                for v in [f_word(w, i), e_word(w, i)].into_iter().flatten() {
                    prop_assert!(set.contains(&v), "{:?} -> {:?} leaves B_{}", w, v, lambda);
                }
            }
        }
    }

    #[test]
    fn lr_engines_agree(alpha in partition(3, 3), beta in partition(3, 2), gamma in partition(4, 4)) {
        let inst = LRInstance::new(alpha.clone(), beta.clone(), gamma.clone());
        let c = lr_count(&inst);
        prop_assert_eq!(decide_nonvanishing(&inst), c > 0);
        prop_assert_eq!(lr_count(&LRInstance::new(beta.clone(), alpha.clone(), gamma.clone())), c);
        let n = inst.max_height().max(1);
        prop_assert_eq!(lr_via_crystals(&alpha, &beta, &gamma, n).unwrap(), c);
        let base = count_polytope_points(&inst, None).unwrap();
        prop_assert_eq!(base, c);
        prop_assert_eq!(count_polytope_points(&inst, Some(n + 1)).unwrap(), c);
    }

    #[test]
    fn smith_form(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-6i64..=6, 16)) {
        let c: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
        let d = smith_normal_form(&to_int_matrix(&c));
        prop_assert_eq!(int_mat_mul(&int_mat_mul(&d.u, &d.s), &d.v), to_int_matrix(&c));
        let diag = d.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            prop_assert!(divides);
        }
        prop_assert_eq!(int_mat_mul(&d.u, &d.u_inv), to_int_matrix(&(0..rows).map(|i| (0..rows).map(|j| (i == j) as i64).collect()).collect::<Vec<_>>()));
    }

    #[test]
    fn ehrhart_fits_counts(q in 1i64..=4, lo in 0i64..=3, width in 1i64..=5, slope in 1i64..=3) {
        // lo/q <= x <= (lo + width)/q, 0 <= y <= slope x
        let p = RationalPolytope::new(
            vec![vec![q, 0], vec![-q, 0], vec![-slope, 1], vec![0, -1]],
            vec![lo + width, -lo, 0, 0],
            false,
        ).unwrap();
        let f = ehrhart_quasipolynomial(&p, 16).unwrap();
        let counter = LatticeCounter::new(&p).unwrap().unwrap();
        for k in 1..=(2 * f.period as i64 + 2) {
            prop_assert_eq!(f.eval(k), int(counter.count(k) as i64));
        }
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<gct_core::polyhedra::Quasipolynomial>(&json).unwrap(), f);
    }

    #[test]
    fn reynolds_projects_onto_invariants(coeffs in prop::collection::vec(-3i64..=3, 10)) {
        let g = FiniteMatrixGroup::symmetric(3).unwrap();
        let mut p = Poly::zero(3);
        let exps = [[2, 0, 0], [1, 1, 0], [0, 1, 1], [0, 0, 2], [1, 0, 1], [3, 0, 0], [1, 2, 0], [0, 0, 1], [1, 1, 1], [0, 2, 1]];
        for (e, &c) in exps.iter().zip(&coeffs) {
            p.add_term(e.to_vec(), int(c));
        }
        let r = reynolds(&g, &p).unwrap();
        prop_assert!(is_invariant(&g, &r));
        prop_assert_eq!(reynolds(&g, &r).unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), r);
    }

    #[test]
    fn kempf_properties(raw in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=6), scale in 1i64..=4) {
        let support: Vec<WeightVector> = raw.iter().map(|w| WeightVector(w.clone())).collect();
        let result = kempf_optimal(&support).unwrap();
        prop_assert_eq!(result.is_some(), torus_nullcone(&support).unwrap().is_some());
        let scaled: Vec<WeightVector> = raw.iter().map(|w| WeightVector(w.iter().map(|x| x * scale).collect())).collect();
        let scaled_result = kempf_optimal(&scaled).unwrap();
        prop_assert_eq!(result.as_ref().map(|r| r.lambda.clone()), scaled_result.map(|r| r.lambda));
        if let Some(r) = result {
            prop_assert!(r.lambda.trace_zero());
            let dots: Vec<i64> = support.iter().map(|chi| r.lambda.dot(chi)).collect();
            prop_assert!(dots.iter().all(|&d| d >= r.m && d > 0));
            prop_assert!(dots.contains(&r.m));
            prop_assert_eq!(Rational::new((r.m * r.m).into(), r.norm_sq.into()), r.efficiency_sq);
        }
    }

    #[test]
    fn syzygies_vanish(beta in prop::collection::vec(1u32..=5, 3), gamma in 1u32..=5, m in prop::collection::vec(-9i64..=9, 10)) {
        let p = vdw_syzygy(1, &[], &beta, &[gamma], 5, 2).unwrap();
        let mat = vec![m[..5].to_vec(), m[5..].to_vec()];
        prop_assert!(p.evaluate(&mat).unwrap().is_zero());
    }

    #[test]
    fn straightening_preserves_values(b1 in prop::collection::vec(1u32..=5, 2), b2 in prop::collection::vec(1u32..=5, 2), m in prop::collection::vec(-9i64..=9, 10)) {
        let p = BracketPolynomial::monomial(&[b1, b2], int(1));
        let q = straighten(&p).unwrap();
        prop_assert!(q.is_standard());
        let mat = vec![m[..5].to_vec(), m[5..].to_vec()];
        prop_assert_eq!(p.evaluate(&mat).unwrap(), q.evaluate(&mat).unwrap());
        let json = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<BracketPolynomial>(&json).unwrap(), q);
    }
}
