//! Braid words, partitions of strands, and the colored R-matrix action on
//! the grade-zero slices of tensor products of Verma modules.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{Field, QuantumParams, Ring};
use crate::sparse::SparseVector;
use crate::verma::{tensor_basis, MBasisIndex};

/// A word in the Artin generators: `+i` is `sigma_i`, `-i` its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("a braid needs at least one strand"));
        }
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x.unsigned_abs() as usize >= n) {
            return Err(Error::argument(format!("generator index {bad} outside 1..={}", n - 1)));
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// `self` followed by `other` (the letters of `self` act first).
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|x| -x).collect(),
        }
    }

    /// Underlying permutation: `perm[p]` is the final position of the strand
    /// starting at position `p` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.n).collect();
        for &x in &self.letters {
            let k = x.unsigned_abs() as usize - 1;
            for p in at.iter_mut() {
                if *p == k {
                    *p = k + 1;
                } else if *p == k + 1 {
                    *p = k;
                }
            }
        }
        at
    }

    /// Parses whitespace-separated tokens `sK`, `sK^-1` or signed integers.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let pos = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = pos + token.len();
            let bad = |msg: &str| Error::parse(pos, format!("{msg}: '{token}'"));
            let letter = if let Some(rest) = token.strip_prefix('s') {
                let (idx, inv) = match rest.split_once('^') {
                    Some((idx, "-1")) => (idx, true),
                    Some((idx, "1")) => (idx, false),
                    Some(_) => return Err(bad("only the exponents 1 and -1 are allowed")),
                    None => (rest, false),
                };
                let k: i32 = idx.parse().map_err(|_| bad("malformed generator"))?;
                if k <= 0 {
                    return Err(bad("generator index must be positive"));
                }
                if inv {
                    -k
                } else {
                    k
                }
            } else {
                token.parse().map_err(|_| bad("malformed generator"))?
            };
            if letter == 0 || letter.unsigned_abs() as usize >= n {
                return Err(bad(&format!("generator index outside 1..={}", n.saturating_sub(1))));
            }
            letters.push(letter);
        }
        BraidWord::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&x| if x > 0 { format!("s{x}") } else { format!("s{}^-1", -x) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A set partition of the strand labels `1..=n`, blocks sorted by least element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::argument("empty block"));
            }
            b.sort_unstable();
        }
        blocks.sort();
        let all: Vec<usize> = blocks.iter().flatten().copied().collect();
        let n = all.len();
        let set: BTreeSet<usize> = all.into_iter().collect();
        if set.len() != n || set.iter().next() != Some(&1) || set.iter().last() != Some(&n) {
            return Err(Error::argument("blocks must be disjoint and cover 1..=n"));
        }
        Ok(Partition { blocks })
    }

    /// Every strand on its own.
    pub fn discrete(n: usize) -> Self {
        Partition {
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// One block with every strand.
    pub fn full(n: usize) -> Self {
        Partition {
            blocks: vec![(1..=n).collect()],
        }
    }

    /// Strands are in one block iff they have the same color.
    pub fn from_colors(colors: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for (p, &c) in colors.iter().enumerate() {
            match seen.iter().position(|&x| x == c) {
                Some(b) => blocks[b].push(p + 1),
                None => {
                    seen.push(c);
                    blocks.push(vec![p + 1]);
                }
            }
        }
        Partition { blocks }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index of each strand label, 0-based.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i - 1] = b;
            }
        }
        out
    }

    /// A coloring realizing this partition: strand `i` gets `1 + block index`.
    pub fn colors(&self) -> Vec<usize> {
        self.block_of().into_iter().map(|b| b + 1).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let parts: Vec<String> = b.iter().map(usize::to_string).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[1,2][3]` (commas or spaces inside blocks; optional outer braces).
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let t = t.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(t);
        let mut blocks = Vec::new();
        let mut rest = t;
        let mut pos = text.len() - text.trim_start().len();
        loop {
            let trimmed = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
            pos += rest.len() - trimmed.len();
            rest = trimmed;
            if rest.is_empty() {
                break;
            }
            let Some(inner) = rest.strip_prefix('[') else {
                return Err(Error::parse(pos, "expected '['"));
            };
            let end = inner.find(']').ok_or_else(|| Error::parse(pos, "unclosed block"))?;
            let block: Vec<usize> = inner[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| Error::parse(pos, format!("bad strand label '{s}'"))))
                .collect::<Result<_>>()?;
            blocks.push(block);
            pos += end + 2;
            rest = &inner[end + 1..];
        }
        Partition::new(blocks)
    }
}

/// Whether the underlying permutation maps each block to itself.
pub fn purity(w: &BraidWord, s: &Partition) -> bool {
    if s.n() != w.n() {
        return false;
    }
    let block = s.block_of();
    w.permutation().iter().enumerate().all(|(p, &q)| block[p] == block[q])
}

/// The orbit partition of the underlying permutation.
pub fn finest_partition(w: &BraidWord) -> Partition {
    let perm = w.permutation();
    let mut seen = vec![false; w.n()];
    let mut blocks = Vec::new();
    for start in 0..w.n() {
        if seen[start] {
            continue;
        }
        let mut block = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            block.push(p + 1);
            p = perm[p];
        }
        blocks.push(block);
    }
    Partition::new(blocks).expect("orbits form a partition")
}

/// A vector on the grade-zero slice of a tensor product of Verma modules.
pub type SliceVector<S> = SparseVector<MBasisIndex, S>;

/// `E^t m_k = [k][k-1]...[k-t+1] m_{k-t}`.
fn e_power<P: QuantumParams>(p: &P, k: u32, t: u32) -> P::S {
    (0..t).fold(P::S::one(), |acc, i| acc.mul(&p.qint((k - i) as i64)))
}

/// `F^{[t]} m_l = (v - v^{-1})^t / [t]! [mu - l]...[mu - l - t + 1] m_{l+t}`.
fn f_divided_power<P: QuantumParams>(p: &P, color: usize, l: u32, t: u32) -> P::S {
    let v_minus = p.v_pow(1).sub(&p.v_pow(-1));
    let mut acc = P::S::one();
    for i in 0..t {
        acc = acc
            .mul(&v_minus)
            .mul(&p.qweight(color, -((l + i) as i64)))
            .div(&p.qint((i + 1) as i64));
    }
    acc
}

/// The scaling `m_k x m_l -> v^{-l mu_a - k mu_b + 2kl} m_k x m_l` on `V_a x V_b`.
fn scaling<P: QuantumParams>(p: &P, a: usize, b: usize, k: u32, l: u32) -> P::S {
    p.power(&[(a, -(l as i64)), (b, -(k as i64))], 2 * k as i64 * l as i64)
}

/// One R-matrix step on the two-factor basis vector `m_k x m_l`.
///
/// With `sign = +1` and colors `(a, b)`, applies
/// `R = swap . scaling . Theta : V_a x V_b -> V_b x V_a` with
/// `Theta = sum_t v^{t(t-1)/2} E^t x F^{[t]}`.
/// With `sign = -1` and colors `(a, b)`, applies the inverse of the
/// `(b, a)` R-matrix, again `V_a x V_b -> V_b x V_a`.
pub fn rmatrix_pair<P: QuantumParams>(
    p: &P,
    sign: i32,
    colors: (usize, usize),
    k: u32,
    l: u32,
) -> Vec<((u32, u32), P::S)> {
    let (a, b) = colors;
    let mut out = Vec::with_capacity(k as usize + 1);
    if sign > 0 {
        for t in 0..=k {
            let (k2, l2) = (k - t, l + t);
            let theta = p
                .v_pow((t * t.saturating_sub(1) / 2) as i64)
                .mul(&e_power(p, k, t))
                .mul(&f_divided_power(p, b, l, t));
            let c = theta.mul(&scaling(p, a, b, k2, l2));
            out.push(((l2, k2), c));
        }
    } else {
        // swap to V_b x V_a, undo the (b, a) scaling, then apply Theta^{-1}.
        let (k1, l1) = (l, k);
        let unscale = scaling(p, b, a, k1, l1).inv().expect("scaling is a unit");
        for t in 0..=k1 {
            let (k2, l2) = (k1 - t, l1 + t);
            let sign = if t % 2 == 0 { P::S::one() } else { P::S::one().neg() };
            let theta = sign
                .mul(&p.v_pow(-((t * t.saturating_sub(1) / 2) as i64)))
                .mul(&e_power(p, k1, t))
                .mul(&f_divided_power(p, a, l1, t));
            out.push(((k2, l2), theta.mul(&unscale)));
        }
    }
    out
}

/// Applies one letter at positions `(pos, pos+1)` (0-based) of a slice vector.
pub fn rmatrix_step<P: QuantumParams>(
    p: &P,
    sign: i32,
    colors: (usize, usize),
    pos: usize,
    v: &SliceVector<P::S>,
) -> SliceVector<P::S> {
    v.apply(|k| {
        let mut out = SparseVector::zero();
        for ((x, y), c) in rmatrix_pair(p, sign, colors, k.0[pos], k.0[pos + 1]) {
            let mut idx = k.0.clone();
            idx[pos] = x;
            idx[pos + 1] = y;
            out.add_term(MBasisIndex(idx), c);
        }
        out
    })
}

/// Reads a braid word letter by letter (leftmost first) on a slice vector
/// whose strands carry `colors`; returns the image and the final coloring.
pub fn colored_read_vector<P: QuantumParams>(
    p: &P,
    w: &BraidWord,
    colors: &[usize],
    v: &SliceVector<P::S>,
) -> (SliceVector<P::S>, Vec<usize>) {
    assert_eq!(colors.len(), w.n(), "one color per strand");
    let mut colors = colors.to_vec();
    let mut v = v.clone();
    for &x in w.letters() {
        let pos = x.unsigned_abs() as usize - 1;
        v = rmatrix_step(p, x.signum(), (colors[pos], colors[pos + 1]), pos, &v);
        colors.swap(pos, pos + 1);
    }
    (v, colors)
}

/// The linear map of a braid word on the level-`l` slice: images of
/// `tensor_basis(n, l)` in order, with source and target colorings.
#[derive(Clone, Debug, PartialEq)]
pub struct ColoredMap<S: Ring> {
    pub basis: Vec<MBasisIndex>,
    pub images: Vec<SliceVector<S>>,
    pub source_colors: Vec<usize>,
    pub target_colors: Vec<usize>,
}

impl<S: Ring> ColoredMap<S> {
    /// Square when the target coloring equals the source coloring.
    pub fn is_endomorphism(&self) -> bool {
        self.source_colors == self.target_colors
    }

    /// Row `i` holds the coordinates of the image of basis vector `i`.
    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.images
            .iter()
            .map(|img| self.basis.iter().map(|k| img.coeff(k)).collect())
            .collect()
    }
}

pub fn colored_read<P: QuantumParams>(p: &P, w: &BraidWord, colors: &[usize], l: u32) -> ColoredMap<P::S> {
    let basis = tensor_basis(w.n(), l);
    let mut target = colors.to_vec();
    let images = basis
        .iter()
        .map(|k| {
            let (img, t) = colored_read_vector(p, w, colors, &SparseVector::basis(k.clone()));
            target = t;
            img
        })
        .collect();
    if basis.is_empty() {
        target = permute_colors(w, colors);
    }
    ColoredMap {
        basis,
        images,
        source_colors: colors.to_vec(),
        target_colors: target,
    }
}

/// Coloring after the strands have moved along `w`.
pub fn permute_colors(w: &BraidWord, colors: &[usize]) -> Vec<usize> {
    let mut out = vec![0; colors.len()];
    for (p, &q) in w.permutation().iter().enumerate() {
        out[q] = colors[p];
    }
    out
}

/// Colors for the handlebody preset: `g` strands of color 1 followed by `n`
/// strands of color 2.
pub fn handlebody_colors(g: usize, n: usize) -> Vec<usize> {
    std::iter::repeat_n(1, g).chain(std::iter::repeat_n(2, n)).collect()
}

/// All colorings of `n` strands up to renaming colors, as restricted growth
/// strings with first color 1.
pub fn canonical_colorings(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|c| {
                let top = c.iter().copied().max().unwrap_or(0);
                (1..=top + 1).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    out
}

/// One relation between two braid words, checked on a colored slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub colors: Vec<usize>,
    pub level: u32,
    pub passed: bool,
}

/// Defining relations of the braid group on `n` strands as word pairs.
pub fn relation_pairs(n: usize) -> Vec<(BraidWord, BraidWord)> {
    let w = |letters: Vec<i32>| BraidWord::new(n, letters).expect("letters in range");
    let mut out = Vec::new();
    for i in 1..n as i32 {
        out.push((w(vec![i, -i]), BraidWord::identity(n)));
        out.push((w(vec![-i, i]), BraidWord::identity(n)));
        if i + 1 < n as i32 {
            out.push((w(vec![i, i + 1, i]), w(vec![i + 1, i, i + 1])));
        }
        for j in i + 2..n as i32 {
            out.push((w(vec![i, j]), w(vec![j, i])));
        }
    }
    out
}

/// Checks `s_i s_i^-1 = s_i^-1 s_i = 1`, `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`
/// and `s_i s_j = s_j s_i` for `|i - j| >= 2` as maps on the level-`l` slices,
/// `l <= l_max`, for every coloring of `n` strands.
pub fn braid_relations_check<P: QuantumParams>(p: &P, n: usize, l_max: u32) -> Vec<RelationCheck> {
    let pairs = relation_pairs(n);
    let mut out = Vec::new();
    for colors in canonical_colorings(n) {
        for l in 0..=l_max {
            for (a, b) in &pairs {
                let lhs = colored_read(p, a, &colors, l);
                let rhs = colored_read(p, b, &colors, l);
                out.push(RelationCheck {
                    relation: format!("{a} = {}", if b.letters().is_empty() { "1".to_string() } else { b.to_string() }),
                    colors: colors.clone(),
                    level: l,
                    passed: lhs == rhs,
                });
            }
        }
    }
    out
}

/// Checks that the two-factor R-matrix and its inverse compose to the identity
/// in both orders on `m_k x m_l` for `k + l <= deg_max`, for equal and for
/// distinct colors.
pub fn rmatrix_inverse_check<P: QuantumParams>(p: &P, deg_max: u32) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    for colors in [[1, 1], [1, 2], [2, 1]] {
        for deg in 0..=deg_max {
            for (first, second) in [(1, -1), (-1, 1)] {
                let w = BraidWord::new(2, vec![first, second]).expect("two strands");
                let passed = tensor_basis(2, deg).into_iter().all(|k| {
                    let v: SliceVector<P::S> = SparseVector::basis(k);
                    let (image, target) = colored_read_vector(p, &w, &colors, &v);
                    image == v && target == colors
                });
                out.push(RelationCheck {
                    relation: format!("{w} = 1"),
                    colors: colors.to_vec(),
                    level: deg,
                    passed,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{FieldElement, Symbolic};

    #[test]
    fn parse_words() {
        let w = BraidWord::parse("s1 s2^-1", 3).unwrap();
        assert_eq!(w.letters(), &[1, -2]);
        assert_eq!(w.to_string(), "s1 s2^-1");
        assert_eq!(BraidWord::parse(&w.to_string(), 3).unwrap(), w);
        assert!(BraidWord::parse("s3", 3).is_err());
        let w = BraidWord::parse("-1 1", 2).unwrap();
        assert_eq!(w.letters(), &[-1, 1]);
        assert_eq!(w.permutation(), vec![0, 1]);
        match BraidWord::parse("s1 x2", 3) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn purity_examples() {
        let sq = BraidWord::new(2, vec![1, 1]).unwrap();
        assert!(purity(&sq, &Partition::discrete(2)));
        let s1 = BraidWord::new(2, vec![1]).unwrap();
        assert!(!purity(&s1, &Partition::discrete(2)));
        assert!(purity(&s1, &Partition::full(2)));
        let w = BraidWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(finest_partition(&w), Partition::full(3));
    }

    #[test]
    fn partition_text() {
        let p: Partition = "[3][1,2]".parse().unwrap();
        assert_eq!(p.to_string(), "[1,2][3]");
        assert_eq!("{[1],[2],[3]}".parse::<Partition>().unwrap(), Partition::discrete(3));
        assert!("[1][1]".parse::<Partition>().is_err());
        assert!("[1][3]".parse::<Partition>().is_err());
        assert_eq!(Partition::from_colors(&[2, 1, 2]).to_string(), "[1,3][2]");
    }

    #[test]
    fn r_matrix_on_small_vectors() {
        let p = Symbolic;
        let m00 = SparseVector::basis(MBasisIndex(vec![0, 0]));
        assert_eq!(rmatrix_step(&p, 1, (1, 2), 0, &m00), m00);
        let m10 = SparseVector::basis(MBasisIndex(vec![1, 0]));
        let image = rmatrix_step(&p, 1, (1, 2), 0, &m10);
        let mut expected = SparseVector::<MBasisIndex, FieldElement>::zero();
        expected.add_term(MBasisIndex(vec![0, 1]), p.power(&[(2, -1)], 0));
        let vm = p.v_pow(1).sub(&p.v_pow(-1));
        expected.add_term(MBasisIndex(vec![1, 0]), p.power(&[(1, -1)], 0).mul(&vm).mul(&p.qweight(2, 0)));
        assert_eq!(image, expected);
    }

    #[test]
    fn handlebody_preset() {
        assert_eq!(handlebody_colors(2, 3), vec![1, 1, 2, 2, 2]);
    }
}
