use std::collections::BTreeMap;

use verma_lkb::gtbasis::{
    act_eij_det, act_unit_det, casimir_check, casimir_sweep, det_two_route, expand_det, expand_det_vector,
    gt_vector, infbraid_relations_check, sample_det_monomials, DetMonomial, GTPattern,
};
use verma_lkb::linalg::{rank, Matrix};
use verma_lkb::qgroup::{act_gln_classical, GlnGen};
use verma_lkb::scalar::{FieldElement, Mono, Poly, Ring, Var};
use verma_lkb::sparse::SparseVector;
use verma_lkb::verma::sample_monomials;

type DetVec = SparseVector<DetMonomial, Poly>;

fn lambda(i: usize, c: i64) -> Poly {
    Poly::var(Var::lambda(i)).add(&Poly::from_i64(c))
}

/// `sum_{k<=i} (lambda_k + r_k) + c`.
fn partial(r: &[i32], i: usize, c: i64) -> Poly {
    (1..=i).fold(Poly::from_i64(c), |acc, k| acc.add(&lambda(k, r[k - 1] as i64)))
}

#[test]
fn adjacent_units_agree_with_expansion() {
    for n in 2..=4 {
        for m in sample_det_monomials(n, 40, n as u64) {
            assert!(det_two_route(&m).is_empty(), "{m}");
        }
    }
}

#[test]
fn commutator_units_agree_with_expansion() {
    for m in sample_det_monomials(4, 15, 9) {
        let v = DetVec::basis(m.clone());
        for (i, j) in [(1, 3), (3, 1), (1, 4), (4, 2)] {
            let via_det = expand_det_vector(&act_unit_det(i, j, &v));
            let via_monomials = expand_det(&m).apply(|x| act_gln_classical(GlnGen::Unit(i, j), x));
            assert_eq!(via_det, via_monomials, "e{i}{j} on {m}");
        }
    }
}

#[test]
fn determinant_relations_by_hand() {
    // e_11 X^{lambda} a_1 = (lambda_1 + 1) X^{lambda} a_1
    let m = DetMonomial::new(vec![0, 0], vec![1]);
    let image = act_eij_det(GlnGen::Unit(1, 1), &m).unwrap();
    assert_eq!(image, SparseVector::term(m.clone(), lambda(1, 1)));
    // e_12 X^{lambda} = lambda_2 X^{lambda + alpha_1}
    let top = DetMonomial::new(vec![0, 0], vec![0]);
    let image = act_eij_det(GlnGen::Unit(1, 2), &top).unwrap();
    assert_eq!(image, SparseVector::term(DetMonomial::new(vec![1, -1], vec![0]), lambda(2, 0)));
    assert!(act_eij_det(GlnGen::Unit(1, 3), &DetMonomial::new(vec![0; 3], vec![0; 2])).is_err());
    assert!(act_eij_det(GlnGen::E(1), &top).is_err());
}

fn multinomial_by_expansion(d: &[i32], s: &[i32]) -> Poly {
    let mut acc = Poly::one();
    for (i, &di) in d.iter().enumerate() {
        let factor = (1..=i + 1).fold(Poly::zero(), |p, j| p.add(&Poly::var(Var::u(j))));
        acc = acc.mul(&factor.pow(di as u32));
    }
    let target = Mono::from_pairs(s.iter().enumerate().map(|(i, &e)| (Var::u(i + 1), e)));
    let c = acc.terms().iter().find(|(m, _)| *m == target).map(|(_, c)| c.clone()).unwrap_or_default();
    Poly::constant(c)
}

fn rising(base: &Poly, len: i32) -> Poly {
    let mut acc = Poly::one();
    let mut b = base.clone();
    for _ in 0..len {
        acc = acc.mul(&b);
        b = b.add(&Poly::one());
    }
    acc
}

#[test]
fn gt_vector_three_strands_by_enumeration() {
    for p in GTPattern::enumerate(3, 3, 1) {
        let d = p.d();
        let r = p.r();
        let mut expected = DetVec::zero();
        for j in 0..12 {
            let l = [d[0] + j, d[1] - j];
            if l[1] < 0 {
                continue;
            }
            let coeff = multinomial_by_expansion(&d, &l)
                .mul(&rising(&partial(r, 1, 1 - j as i64), l[0]))
                .mul(&rising(&partial(r, 2, 1), l[1]));
            let mono = DetMonomial::new(vec![r[0] - j, r[1], r[2] + j], l.to_vec());
            expected.add_term(mono, coeff);
        }
        assert_eq!(gt_vector(&p), expected, "{p}");
    }
}

#[test]
fn raising_operator_on_gt_vectors() {
    let n = 3;
    let mut checked = 0;
    for p in GTPattern::enumerate(n, 3, 1) {
        let d = p.d();
        let r = p.r().to_vec();
        let c = p.c().to_vec();
        let g = gt_vector(&p);
        for i in 1..n {
            let d_at = |k: usize| if (1..n).contains(&k) { d[k - 1] as i64 } else { 0 };
            let s_i = partial(&r, i, 0);
            let denom = s_i.add(&Poly::from_i64(d_at(i) + 1));
            let lhs = act_unit_det(i, i + 1, &g).scale(&denom);
            let mut r_up = r.clone();
            r_up[i - 1] += 1;
            r_up[i] -= 1;
            let first = s_i
                .add(&Poly::one())
                .mul(&lambda(i + 1, r[i] as i64 + d_at(i + 1)));
            let mut rhs = gt_vector(&GTPattern::new(c.clone(), r_up).unwrap()).scale(&first);
            if i > 1 && d_at(i) > 0 {
                let mut c_shift = c.clone();
                c_shift[i - 1] += 1;
                let mut r_down = r.clone();
                r_down[i - 2] -= 1;
                r_down[i - 1] += 1;
                let second = partial(&r, i + 1, d_at(i) + d_at(i + 1) + 1).mul(&Poly::from_i64(d_at(i)));
                rhs = rhs.add(&gt_vector(&GTPattern::new(c_shift, r_down).unwrap()).scale(&second));
            }
            assert_eq!(lhs, rhs, "e{}{} on {p}", i, i + 1);
            checked += 1;
        }
    }
    assert!(checked > 100);
}

/// `e_ii` eigenvalues shifted by `lambda_i`, read off the top term of a GT vector.
fn weight(p: &GTPattern) -> Vec<i32> {
    let d = p.d();
    let n = p.n();
    let d_at = |k: usize| if (1..n).contains(&k) { d[k - 1] } else { 0 };
    (1..=n).map(|i| p.r()[i - 1] + d_at(i - 1) + d_at(i)).collect()
}

#[test]
fn gt_vectors_in_a_weight_space_are_independent() {
    let mut spaces: BTreeMap<Vec<i32>, Vec<GTPattern>> = BTreeMap::new();
    for p in GTPattern::enumerate(3, 3, 2) {
        spaces.entry(weight(&p)).or_default().push(p);
    }
    let mut multi = 0;
    for (w, patterns) in &spaces {
        let vectors: Vec<DetVec> = patterns.iter().map(gt_vector).collect();
        for (p, v) in patterns.iter().zip(&vectors) {
            for i in 1..=3 {
                let shifted = act_unit_det(i, i, v);
                assert_eq!(shifted, v.scale(&lambda(i, w[i - 1] as i64)), "{p}");
            }
        }
        if patterns.len() < 2 {
            continue;
        }
        multi += 1;
        let keys: Vec<DetMonomial> = {
            let mut k: Vec<DetMonomial> = vectors.iter().flat_map(|v| v.keys().cloned()).collect();
            k.sort();
            k.dedup();
            k
        };
        let rows = vectors
            .iter()
            .map(|v| keys.iter().map(|k| FieldElement::from_poly(v.coeff(k))).collect())
            .collect();
        assert_eq!(rank(&Matrix::from_rows(rows)), patterns.len(), "weight {w:?}");
    }
    assert!(multi > 5);
}

#[test]
fn casimir_small_sweep() {
    let results = casimir_sweep(3, 2, 1);
    assert!(results.len() > 200);
    for r in &results {
        assert!(r.passed, "{} k={}", r.pattern, r.k);
    }
    let p: GTPattern = "GT{n=4; c=[0,1,1,3]; r=[2,-1,0,1]}".parse().unwrap();
    for k in 1..=4 {
        assert!(casimir_check(&p, k).passed);
    }
}

#[test]
fn pattern_text_round_trip() {
    for p in GTPattern::enumerate(3, 2, 1) {
        assert_eq!(p.to_string().parse::<GTPattern>().unwrap(), p);
    }
    assert!("GT{n=2; c=[1,2]; r=[0,0]}".parse::<GTPattern>().is_err());
    assert!("GT{n=2; c=[0,2,1]; r=[0,0,0]}".parse::<GTPattern>().is_err());
}

#[test]
fn infinitesimal_braid_relations() {
    for n in 2..=4 {
        let report = infbraid_relations_check(n, &sample_monomials(n, 20, 40 + n as u64));
        assert!(report.passed(), "{:?}", report.failures.first());
        assert!(report.identities_checked > 0);
    }
}
