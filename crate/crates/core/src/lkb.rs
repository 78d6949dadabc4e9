//! Colored Lawrence-Krammer-Bigelow representations: the braid action on
//! highest-weight vectors of level `l`, and simplicity certificates.

use num::BigRational;
use rayon::prelude::*;

use crate::braid::{colored_read_vector, purity, relation_pairs, BraidWord, Partition, RelationCheck, SliceVector};
use crate::error::{Error, Result};
use crate::linalg::{bareiss_rank, clear_denominators, rank, Matrix};
use crate::qgroup::highest_weight_basis;
use crate::scalar::{Field, FieldElement, GeneratorSet, QuantumParams, Ring, Specialization, Specialized};
use crate::verma::MBasisIndex;

/// `ker E` on the level-`l` slice of `V_{mu_{c_1}} x ... x V_{mu_{c_n}}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LkbSpace<S: Ring> {
    pub n: usize,
    pub l: u32,
    pub colors: Vec<usize>,
    pub basis: Vec<SliceVector<S>>,
    /// Label at which each basis vector has its leading coefficient 1.
    pub leading: Vec<MBasisIndex>,
}

impl<S: Ring> LkbSpace<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn lkb_basis<P: QuantumParams>(p: &P, l: u32, colors: &[usize]) -> LkbSpace<P::S> {
    let basis = highest_weight_basis(p, colors, l);
    let leading = basis
        .iter()
        .map(|b| b.keys().max().expect("basis vectors are nonzero").clone())
        .collect();
    LkbSpace {
        n: colors.len(),
        l,
        colors: colors.to_vec(),
        basis,
        leading,
    }
}

/// Matrix of a braid word on an LKB space; row `i` holds the coordinates of
/// the image of basis vector `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix<S: Ring> {
    pub word: BraidWord,
    pub n: usize,
    pub l: u32,
    pub colors: Vec<usize>,
    pub matrix: Matrix<S>,
}

/// Reads `w` on every basis vector of `space` and expresses the images in
/// the basis. The word must be pure on the color partition; a nonzero
/// residual outside the span is reported as an internal inconsistency.
pub fn word_matrix<P: QuantumParams>(p: &P, w: &BraidWord, space: &LkbSpace<P::S>) -> Result<RepMatrix<P::S>> {
    let colors = Partition::from_colors(&space.colors);
    if w.n() != space.n {
        return Err(Error::argument(format!("word on {} strands, space on {}", w.n(), space.n)));
    }
    if !purity(w, &colors) {
        return Err(Error::Purity(format!("'{w}' on {colors}")));
    }
    let d = space.dim();
    let mut rows = Vec::with_capacity(d);
    for b in &space.basis {
        let (image, _) = colored_read_vector(p, w, &space.colors, b);
        let coords: Vec<P::S> = space.leading.iter().map(|k| image.coeff(k)).collect();
        let mut residual = image;
        for (c, bj) in coords.iter().zip(&space.basis) {
            residual.add_scaled(bj, &c.neg());
        }
        if !residual.is_zero() {
            return Err(Error::Consistency(format!(
                "image of a highest-weight vector under '{w}' leaves the LKB space"
            )));
        }
        rows.push(coords);
    }
    Ok(RepMatrix {
        word: w.clone(),
        n: space.n,
        l: space.l,
        colors: space.colors.clone(),
        matrix: if d == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows) },
    })
}

/// `sigma_{j-1} ... sigma_{i+1} x sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}` (1-based `i < j`).
fn conjugated(n: usize, i: usize, j: usize, core: &[i32]) -> BraidWord {
    let mut letters: Vec<i32> = ((i + 1)..j).rev().map(|k| k as i32).collect();
    letters.extend_from_slice(core);
    letters.extend(((i + 1)..j).map(|k| -(k as i32)));
    BraidWord::new(n, letters).expect("indices in range")
}

/// Generators of the braids pure on `s`: the Artin generators if `s` has a
/// single block, otherwise the pure braid generators `A_ij` together with
/// the half twists `B_ij` for `i < j` in a common block.
pub fn pure_generators(n: usize, s: &Partition) -> Vec<BraidWord> {
    if n < 2 {
        return Vec::new();
    }
    if s.blocks().len() == 1 {
        return (1..n).map(|k| BraidWord::new(n, vec![k as i32]).unwrap()).collect();
    }
    let block = s.block_of();
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            out.push(conjugated(n, i, j, &[i as i32, i as i32]));
        }
    }
    for i in 1..n {
        for j in i + 1..=n {
            if block[i - 1] == block[j - 1] {
                out.push(conjugated(n, i, j, &[i as i32]));
            }
        }
    }
    debug_assert!(out.iter().all(|w| purity(w, s)));
    out
}

/// The braid relations at the level of LKB matrices, with all strands of
/// one color so that every word is pure.
pub fn lkb_relations_check<P: QuantumParams>(p: &P, n: usize, l: u32) -> Result<Vec<RelationCheck>> {
    let colors = vec![1; n];
    let space = lkb_basis(p, l, &colors);
    relation_pairs(n)
        .into_iter()
        .map(|(a, b)| {
            let lhs = word_matrix(p, &a, &space)?;
            let rhs = word_matrix(p, &b, &space)?;
            Ok(RelationCheck {
                relation: format!("{a} = {}", if b.letters().is_empty() { "1".to_string() } else { b.to_string() }),
                colors: colors.clone(),
                level: l,
                passed: lhs.matrix == rhs.matrix,
            })
        })
        .collect()
}

/// Rows of the linear system `X M = M X` in the unknowns `X_ab` (index `a d + b`).
fn sylvester_rows<F: Field>(mats: &[&Matrix<F>], d: usize) -> Vec<Vec<F>> {
    let mut rows = Vec::new();
    for m in mats {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![F::zero(); d * d];
                for k in 0..d {
                    row[i * d + k] = row[i * d + k].add(m.get(k, j));
                    row[k * d + j] = row[k * d + j].sub(m.get(i, k));
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

fn check_square<S: Ring>(mats: &[&Matrix<S>]) -> Result<usize> {
    let d = mats.first().map_or(0, |m| m.rows());
    if mats.iter().any(|m| !m.is_square() || m.rows() != d) {
        return Err(Error::argument("commutant needs square matrices of one size"));
    }
    Ok(d)
}

/// Dimension of `{X : X M = M X for all M}` over the rationals.
pub fn commutant_dimension(mats: &[&Matrix<BigRational>]) -> Result<usize> {
    let d = check_square(mats)?;
    let rows = sylvester_rows(mats, d)
        .iter()
        .map(|r| clear_denominators(r))
        .collect();
    Ok(d * d - bareiss_rank(rows))
}

/// The same dimension over the formal field; slow, meant for small `d`.
pub fn commutant_dimension_symbolic(mats: &[&Matrix<FieldElement>]) -> Result<usize> {
    let d = check_square(mats)?;
    let rows = sylvester_rows(mats, d);
    if rows.is_empty() {
        return Ok(d * d);
    }
    Ok(d * d - rank(&Matrix::from_rows(rows)))
}

/// One specialization tried by the simplicity certifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityTrial {
    pub seed: u64,
    /// `(generator name, value)` in generator order.
    pub values: Vec<(String, String)>,
    pub commutant_dim: Option<usize>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub n: usize,
    pub l: u32,
    pub partition: Partition,
    pub dim: usize,
    pub generators: Vec<String>,
    pub trials: Vec<SimplicityTrial>,
}

impl SimplicityReport {
    /// Generic simplicity is certified once some specialization has a
    /// one-dimensional commutant: specializing can only enlarge the solution
    /// space of the linear system.
    pub fn certified(&self) -> bool {
        self.trials.iter().any(|t| t.commutant_dim == Some(1))
    }
}

/// Seed stride between trials so their redraw ranges do not overlap.
const TRIAL_STRIDE: u64 = crate::scalar::MAX_REDRAWS + 1;

fn run_trial(n: usize, l: u32, colors: &[usize], gens: &[BraidWord], seed: u64) -> SimplicityTrial {
    let ncolors = colors.iter().copied().max().unwrap_or(0);
    let drawn = Specialization::draw_where(GeneratorSet::Quantum(ncolors), seed, |sp| {
        sp.is_admissible(colors) && Specialized::new(sp, ncolors, l as i64 + 1).is_ok()
    });
    let sp = match drawn {
        Ok(sp) => sp,
        Err(e) => {
            return SimplicityTrial {
                seed,
                values: Vec::new(),
                commutant_dim: None,
                error: Some(e.to_string()),
            }
        }
    };
    let values = sp.values().iter().map(|(x, q)| (x.name(), q.to_string())).collect();
    let result = (|| -> Result<usize> {
        let params = Specialized::new(&sp, ncolors, l as i64 + 1)?;
        let space = lkb_basis(&params, l, colors);
        debug_assert_eq!(space.n, n);
        let mats = gens
            .iter()
            .map(|w| word_matrix(&params, w, &space).map(|m| m.matrix))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&Matrix<BigRational>> = mats.iter().collect();
        commutant_dimension(&refs)
    })();
    let (commutant_dim, error) = match result {
        Ok(d) => (Some(d), None),
        Err(e) => (None, Some(e.to_string())),
    };
    SimplicityTrial {
        seed: sp.seed(),
        values,
        commutant_dim,
        error,
    }
}

/// Builds the pure generators of `s`, and for each of `trials` admissible
/// specializations computes the commutant of their LKB matrices.
pub fn simplicity_report(n: usize, l: u32, s: &Partition, trials: usize, seed: u64) -> Result<SimplicityReport> {
    if s.n() != n {
        return Err(Error::argument(format!("partition of {} strands for n = {n}", s.n())));
    }
    let colors = s.colors();
    let gens = pure_generators(n, s);
    let trials: Vec<SimplicityTrial> = (0..trials as u64)
        .into_par_iter()
        .map(|t| run_trial(n, l, &colors, &gens, seed.wrapping_add(t * TRIAL_STRIDE)))
        .collect();
    let binom = crate::qgroup::binomial(n as u64 + l as u64 - 2, l as u64);
    Ok(SimplicityReport {
        n,
        l,
        partition: s.clone(),
        dim: binom.try_into().unwrap_or(usize::MAX),
        generators: gens.iter().map(BraidWord::to_string).collect(),
        trials,
    })
}
