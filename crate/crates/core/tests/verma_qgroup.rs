use num::BigInt;
use verma_lkb::linalg::{nullspace, rank};
use verma_lkb::qgroup::{
    act_gln_classical, act_gln_quantum, binomial, commuting_actions_check, duality_dimension_check, e_matrix,
    highest_weight_basis, GlnGen, Mode,
};
use verma_lkb::scalar::{Field, FieldElement, Poly, QuantumParams, Ring, Symbolic, Var};
use verma_lkb::sparse::SparseVector;
use verma_lkb::verma::{
    act_gl2_classical, act_gl2_quantum, sample_monomials, tensor_basis, weight_and_grade, Gl2Gen, MBasisIndex,
    Monomial,
};

type QVec = SparseVector<Monomial, FieldElement>;
type CVec = SparseVector<Monomial, Poly>;

fn q2(colors: &[usize], g: Gl2Gen, v: &QVec) -> QVec {
    v.apply(|m| act_gl2_quantum(&Symbolic, colors, g, m))
}

fn qn(colors: &[usize], g: GlnGen, v: &QVec) -> QVec {
    v.apply(|m| act_gln_quantum(&Symbolic, colors, g, m))
}

fn cn(g: GlnGen, v: &CVec) -> CVec {
    v.apply(|m| act_gln_classical(g, m))
}

/// Scalar by which a diagonal generator acts on `m`.
fn eigenvalue(image: QVec, m: &Monomial) -> FieldElement {
    assert_eq!(image.len(), 1);
    image.coeff(m)
}

fn qv_minus_inv() -> FieldElement {
    FieldElement::v_pow(1).sub(&FieldElement::v_pow(-1))
}

#[test]
fn quantum_actions_commute() {
    for n in 2..=3 {
        let sample = sample_monomials(n, 25, n as u64);
        for report in commuting_actions_check(n, Mode::Quantum, &sample) {
            assert!(report.passed(), "{report:?}");
        }
    }
}

#[test]
fn classical_actions_commute() {
    for n in 2..=4 {
        let sample = sample_monomials(n, 25, 10 + n as u64);
        for report in commuting_actions_check(n, Mode::Classical, &sample) {
            assert!(report.passed(), "{report:?}");
        }
    }
}

#[test]
fn gl2_quantum_relations() {
    let colors = [1, 2, 1];
    for m in sample_monomials(3, 20, 3) {
        let x = QVec::basis(m.clone());
        let ef = q2(&colors, Gl2Gen::E, &q2(&colors, Gl2Gen::F, &x));
        let fe = q2(&colors, Gl2Gen::F, &q2(&colors, Gl2Gen::E, &x));
        let k = eigenvalue(q2(&colors, Gl2Gen::K, &x), &m);
        let l1 = eigenvalue(q2(&colors, Gl2Gen::L1, &x), &m);
        let l2 = eigenvalue(q2(&colors, Gl2Gen::L2, &x), &m);
        assert_eq!(k, l1.div(&l2));
        let expected = k.sub(&k.inv().unwrap()).div(&qv_minus_inv());
        assert_eq!(ef.sub(&fe), x.scale(&expected), "at {m}");
    }
}

#[test]
fn gl2_classical_relations() {
    for m in sample_monomials(3, 20, 4) {
        let x = CVec::basis(m.clone());
        let op = |g, v: &CVec| v.apply(|y| act_gl2_classical(g, y));
        let bracket = op(Gl2Gen::E, &op(Gl2Gen::F, &x)).sub(&op(Gl2Gen::F, &op(Gl2Gen::E, &x)));
        assert_eq!(bracket, op(Gl2Gen::K, &x));
        let h = op(Gl2Gen::L1, &x).sub(&op(Gl2Gen::L2, &x));
        assert_eq!(h, op(Gl2Gen::K, &x));
    }
}

#[test]
fn gln_quantum_relations() {
    let n = 3;
    let colors = [1, 2, 3];
    let two = Symbolic.qint(2);
    for m in sample_monomials(n, 15, 5) {
        let x = QVec::basis(m.clone());
        for i in 1..n {
            for j in 1..n {
                let ef = qn(&colors, GlnGen::E(i), &qn(&colors, GlnGen::F(j), &x));
                let fe = qn(&colors, GlnGen::F(j), &qn(&colors, GlnGen::E(i), &x));
                let expected = if i == j {
                    let li = eigenvalue(qn(&colors, GlnGen::L(i), &x), &m);
                    let lj = eigenvalue(qn(&colors, GlnGen::L(i + 1), &x), &m);
                    let k = li.div(&lj);
                    x.scale(&k.sub(&k.inv().unwrap()).div(&qv_minus_inv()))
                } else {
                    QVec::zero()
                };
                assert_eq!(ef.sub(&fe), expected, "E{i} F{j} at {m}");
            }
        }
        for (a, b) in [(1, 2), (2, 1)] {
            for gen in [GlnGen::E as fn(usize) -> GlnGen, GlnGen::F] {
                let aa = |v: &QVec| qn(&colors, gen(a), v);
                let bb = |v: &QVec| qn(&colors, gen(b), v);
                let serre = aa(&aa(&bb(&x)))
                    .sub(&aa(&bb(&aa(&x))).scale(&two))
                    .add(&bb(&aa(&aa(&x))));
                assert!(serre.is_zero(), "Serre relation fails at {m}");
            }
        }
    }
}

#[test]
fn gln_classical_relations() {
    let n = 3;
    for m in sample_monomials(n, 10, 6) {
        let x = CVec::basis(m.clone());
        for (i, j, k, l) in index_quadruples(n) {
            let a = GlnGen::Unit(i, j);
            let b = GlnGen::Unit(k, l);
            let bracket = cn(a, &cn(b, &x)).sub(&cn(b, &cn(a, &x)));
            let mut expected = CVec::zero();
            if j == k {
                expected = expected.add(&cn(GlnGen::Unit(i, l), &x));
            }
            if l == i {
                expected = expected.sub(&cn(GlnGen::Unit(k, j), &x));
            }
            assert_eq!(bracket, expected, "[e{i}{j}, e{k}{l}] at {m}");
        }
    }
}

fn index_quadruples(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

#[test]
fn e_is_locally_nilpotent_and_actions_preserve_grade() {
    let colors = [1, 2, 3];
    for m in sample_monomials(3, 20, 7) {
        let total: i32 = m.s.iter().sum();
        let mut x = QVec::basis(m.clone());
        for _ in 0..=total {
            x = q2(&colors, Gl2Gen::E, &x);
        }
        assert!(x.is_zero());
        let d = weight_and_grade(&m).d;
        for g in Gl2Gen::ALL {
            for y in act_gl2_quantum(&Symbolic, &colors, g, &m).keys() {
                assert_eq!(y.grade(), d);
            }
        }
        for g in [GlnGen::E(1), GlnGen::F(2), GlnGen::L(3)] {
            for y in act_gln_quantum(&Symbolic, &colors, g, &m).keys() {
                assert_eq!(weight_and_grade(y).l2, weight_and_grade(&m).l2);
            }
        }
    }
}

#[test]
fn single_strand_by_hand() {
    // E X^{mu} Y^2 = [2] X^{mu+1} Y, F X^{mu} Y^2 = [mu] X^{mu-1} Y^3,
    // K X^{mu} Y^2 = v^{mu-2} X^{mu} Y^2.
    let m = Monomial::new(vec![0], vec![2]);
    let p = Symbolic;
    let two = FieldElement::v_pow(1).add(&FieldElement::v_pow(-1));
    assert_eq!(
        act_gl2_quantum(&p, &[1], Gl2Gen::E, &m),
        SparseVector::term(Monomial::new(vec![1], vec![1]), two)
    );
    let u = FieldElement::var(Var::u(1));
    let mu = u.sub(&u.inv().unwrap()).div(&qv_minus_inv());
    assert_eq!(
        act_gl2_quantum(&p, &[1], Gl2Gen::F, &m),
        SparseVector::term(Monomial::new(vec![-1], vec![3]), mu)
    );
    assert_eq!(
        act_gl2_quantum(&p, &[1], Gl2Gen::K, &m),
        SparseVector::term(m.clone(), u.mul(&FieldElement::v_pow(-2)))
    );
}

#[test]
fn highest_weight_dimensions() {
    for n in 2..=6usize {
        let colors: Vec<usize> = (1..=n).collect();
        for l in 0..=4u32 {
            let basis = highest_weight_basis(&Symbolic, &colors, l);
            assert_eq!(BigInt::from(basis.len()), binomial((n + l as usize - 2) as u64, l as u64));
            if n <= 4 && l <= 3 {
                for b in &basis {
                    let image: QVec = b.apply(|k| act_gl2_quantum(&Symbolic, &colors, Gl2Gen::E, &k.to_monomial()));
                    assert!(image.is_zero(), "n={n} l={l}");
                }
            }
        }
    }
}

#[test]
fn structured_kernel_matches_generic_nullspace() {
    for (n, l) in [(2, 1), (2, 3), (3, 1), (3, 2)] {
        let colors: Vec<usize> = (1..=n).collect();
        let e = e_matrix(&Symbolic, &colors, l);
        let generic = nullspace(&e);
        assert_eq!(generic.len(), e.cols() - rank(&e));
        let structured = highest_weight_basis(&Symbolic, &colors, l);
        assert_eq!(generic.len(), structured.len());
        let labels = tensor_basis(n, l);
        for b in &structured {
            let column: Vec<FieldElement> = labels.iter().map(|k: &MBasisIndex| b.coeff(k)).collect();
            for r in 0..e.rows() {
                let dot = (0..e.cols()).fold(FieldElement::zero(), |acc, c| acc.add(&e.get(r, c).mul(&column[c])));
                assert!(dot.is_zero());
            }
        }
    }
}

#[test]
fn duality_slices() {
    for n in 2..=4 {
        let report = duality_dimension_check(n, 4, 1).unwrap();
        assert!(report.passed(), "{report:?}");
    }
}
