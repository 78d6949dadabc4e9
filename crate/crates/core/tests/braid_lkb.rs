use num::BigRational;
use verma_lkb::braid::{colored_read, colored_read_vector, purity, BraidWord, Partition, SliceVector};
use verma_lkb::linalg::Matrix;
use verma_lkb::lkb::{commutant_dimension, commutant_dimension_symbolic, lkb_basis, pure_generators, simplicity_report, word_matrix};
use verma_lkb::qgroup::admissible_params;
use verma_lkb::scalar::{parse_field_element, specialize, FieldElement, QuantumParams, Ring, Specialization, GeneratorSet, Specialized, Symbolic};
use verma_lkb::sparse::SparseVector;
use verma_lkb::verma::{act_gl2_quantum, tensor_basis, Gl2Gen, MBasisIndex};

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

fn read<P: QuantumParams>(p: &P, w: &BraidWord, colors: &[usize], l: u32) -> Vec<Vec<P::S>> {
    colored_read(p, w, colors, l).to_rows()
}

#[test]
fn yang_baxter_symbolic() {
    let p = Symbolic;
    for l in 0..=2 {
        let a = read(&p, &word(3, &[1, 2, 1]), &[1, 2, 3], l);
        let b = read(&p, &word(3, &[2, 1, 2]), &[1, 2, 3], l);
        assert_eq!(a, b, "level {l}");
    }
}

#[test]
fn inverse_letters_cancel() {
    let p = Symbolic;
    for l in 0..=3 {
        for w in [[1, -1], [-1, 1]] {
            let m = colored_read(&p, &word(2, &w), &[1, 2], l);
            let id: Vec<Vec<FieldElement>> = Matrix::identity(m.basis.len()).to_rows();
            assert_eq!(m.to_rows(), id, "level {l}, word {w:?}");
        }
    }
}

#[test]
fn r_matrix_commutes_with_gl2() {
    let p = Symbolic;
    let colors = [1, 2];
    for sign in [1, -1] {
        for l in 0..=2u32 {
            for k in tensor_basis(2, l) {
                let v: SliceVector<FieldElement> = SparseVector::basis(k.clone());
                for g in [Gl2Gen::E, Gl2Gen::F, Gl2Gen::K] {
                    let act = |cols: &[usize], x: &SliceVector<FieldElement>| {
                        x.apply(|k| {
                            act_gl2_quantum(&p, cols, g, &k.to_monomial())
                                .iter()
                                .map(|(m, c)| (MBasisIndex::from_monomial(m).unwrap(), c.clone()))
                                .collect()
                        })
                    };
                    let (rv, tcols) = colored_read_vector(&p, &word(2, &[sign]), &colors, &v);
                    let lhs = act(&tcols, &rv);
                    let (rhs, _) = colored_read_vector(&p, &word(2, &[sign]), &colors, &act(&colors, &v));
                    assert_eq!(lhs, rhs, "{g:?} on {k}");
                }
            }
        }
    }
}

#[test]
fn burau_value_equal_colors() {
    // Hand computation: R(m1 x m0) = v^-mu m0 x m1 + v^-mu (v - v^-1)[mu] m1 x m0 and
    // R(m0 x m1) = v^-mu m1 x m0, so m1 x m0 - v^mu m0 x m1 has eigenvalue -v^{-2 mu}.
    let p = Symbolic;
    let space = lkb_basis(&p, 1, &[1, 1]);
    assert_eq!(space.dim(), 1);
    let m = word_matrix(&p, &word(2, &[1]), &space).unwrap();
    assert_eq!(m.matrix.get(0, 0), &parse_field_element("-U1^-2").unwrap());
}

#[test]
fn reduced_burau_quadratic_relation() {
    let p = Symbolic;
    let space = lkb_basis(&p, 1, &[1, 1, 1]);
    let q = parse_field_element("U1^-2").unwrap();
    for i in 1..=2 {
        let m = word_matrix(&p, &word(3, &[i]), &space).unwrap().matrix;
        let id = Matrix::identity(2);
        let shifted = m.sub(&Matrix::identity(2).map(|x: &FieldElement| x.mul(&q).neg()));
        assert!(m.sub(&id).mul(&shifted).is_zero(), "sigma_{i}");
    }
}

#[test]
fn braid_relation_equal_colors() {
    let p = Symbolic;
    for l in 1..=2 {
        let space = lkb_basis(&p, l, &[1, 1, 1]);
        let a = word_matrix(&p, &word(3, &[1, 2, 1]), &space).unwrap();
        let b = word_matrix(&p, &word(3, &[2, 1, 2]), &space).unwrap();
        assert_eq!(a.matrix, b.matrix);
    }
}

#[test]
fn word_matrices_multiply_and_invert() {
    let params = admissible_params(3, 5, 4).unwrap();
    let colors = [1, 2, 3];
    let s = Partition::discrete(3);
    let gens = pure_generators(3, &s);
    let space = lkb_basis(&params, 2, &colors);
    let mats: Vec<Matrix<BigRational>> = gens.iter().map(|w| word_matrix(&params, w, &space).unwrap().matrix).collect();
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate() {
            let ab = word_matrix(&params, &a.then(b), &space).unwrap().matrix;
            assert_eq!(ab, mats[i].mul(&mats[j]), "{a} then {b}");
        }
        let inv = word_matrix(&params, &a.inverse(), &space).unwrap().matrix;
        assert_eq!(mats[i].mul(&inv), Matrix::identity(space.dim()));
    }
}

#[test]
fn symbolic_and_specialized_routes_agree() {
    let sp = Specialization::draw(GeneratorSet::Quantum(3), 3);
    let params = Specialized::new(&sp, 3, 3).unwrap();
    let colors = [1, 2, 3];
    let sym = lkb_basis(&Symbolic, 2, &colors);
    let num = lkb_basis(&params, 2, &colors);
    for w in pure_generators(3, &Partition::discrete(3)) {
        let a = word_matrix(&Symbolic, &w, &sym).unwrap().matrix.try_map(|x| specialize(x, &sp)).unwrap();
        let b = word_matrix(&params, &w, &num).unwrap().matrix;
        assert_eq!(a, b, "{w}");
    }
}

#[test]
fn symbolic_commutant_small() {
    let p = Symbolic;
    let space = lkb_basis(&p, 1, &[1, 2, 3]);
    let mats: Vec<Matrix<FieldElement>> = pure_generators(3, &Partition::discrete(3))
        .iter()
        .map(|w| word_matrix(&p, w, &space).unwrap().matrix)
        .collect();
    let refs: Vec<&Matrix<FieldElement>> = mats.iter().collect();
    assert_eq!(commutant_dimension_symbolic(&refs).unwrap(), 1);
}

#[test]
fn simplicity_small_cases() {
    for (n, l) in [(2, 1), (3, 1), (3, 2)] {
        let r = simplicity_report(n, l, &Partition::discrete(n), 3, 7).unwrap();
        assert!(r.trials.iter().all(|t| t.commutant_dim == Some(1)), "{r:?}");
    }
    let r = simplicity_report(3, 2, &Partition::full(3), 2, 7).unwrap();
    assert!(r.certified());
}

#[test]
fn pure_words_are_square_maps() {
    let s = Partition::from_colors(&[1, 2, 1]);
    let w = word(3, &[1, 2, 2, 1]);
    assert!(purity(&w, &Partition::discrete(3)));
    let m = colored_read(&Symbolic, &w, &[1, 2, 1], 1);
    assert!(m.is_endomorphism());
    let gens = pure_generators(3, &s);
    let params = admissible_params(2, 1, 3).unwrap();
    let space = lkb_basis(&params, 2, &[1, 2, 1]);
    let mats: Vec<Matrix<BigRational>> = gens.iter().map(|w| word_matrix(&params, w, &space).unwrap().matrix).collect();
    let refs: Vec<&Matrix<BigRational>> = mats.iter().collect();
    assert_eq!(commutant_dimension(&refs).unwrap(), 1);
}

#[test]
fn relation_suites_pass() {
    use verma_lkb::braid::{braid_relations_check, canonical_colorings, rmatrix_inverse_check};
    assert_eq!(canonical_colorings(3).len(), 5);
    assert_eq!(canonical_colorings(4).len(), 15);
    let checks = braid_relations_check(&Symbolic, 3, 1);
    assert!(checks.iter().all(|c| c.passed), "{:?}", checks.iter().find(|c| !c.passed));
    let params = admissible_params(4, 3, 4).unwrap();
    let checks = braid_relations_check(&params, 4, 1);
    assert!(checks.iter().any(|c| c.relation == "s1 s3 = s3 s1"));
    assert!(checks.iter().all(|c| c.passed));
    assert!(rmatrix_inverse_check(&Symbolic, 3).iter().all(|c| c.passed));
}
