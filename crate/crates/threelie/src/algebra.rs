//! 3-Lie algebras: structure constants, bracket evaluation, the fundamental
//! identity, the circle operation on the fundamental set, and the adjoint
//! representation.
//!
//! Structure constants are stored on strictly increasing triples only;
//! skewness is realized by sign-adjusted lookup, never by validated data.
//! Checks iterate canonical basis tuples, which suffices because every
//! identity here is multilinear and appropriately skew in its argument
//! groups.

use crate::basis::{sort_with_sign, BasisIndexer};
use crate::linalg::{
    basis_vector, vec_add_scaled, vec_is_zero, vec_scale, vec_sub, zero_vector, Matrix, Rational,
    Vector,
};
use crate::report::Report;
use crate::representation::Representation;
use crate::Error;
use num::traits::Zero;
use std::collections::BTreeMap;

/// A totally skew trilinear map from triples of basis vectors of a
/// `dim`-dimensional space back into that space, stored on canonical
/// triples. This is both the shape of a 3-Lie bracket table and of a
/// deformation candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTrilinear {
    dim: usize,
    entries: BTreeMap<[usize; 3], Vector>,
}

impl SkewTrilinear {
    pub fn zero(dim: usize) -> Self {
        SkewTrilinear {
            dim,
            entries: BTreeMap::new(),
        }
    }

    /// Builds from sparse entries `(canonical triple, [(output index, coefficient)])`.
    /// Rejects non-canonical triples and out-of-range indices.
    pub fn from_entries(
        dim: usize,
        entries: &[([usize; 3], Vec<(usize, Rational)>)],
    ) -> Result<Self, String> {
        let mut out = SkewTrilinear::zero(dim);
        for (triple, values) in entries {
            let [i, j, k] = *triple;
            if !(i < j && j < k) {
                return Err(format!("triple {:?} is not strictly increasing", triple));
            }
            if k >= dim {
                return Err(format!("triple {:?} out of range for dim {}", triple, dim));
            }
            let mut v = zero_vector(dim);
            for (l, c) in values {
                if *l >= dim {
                    return Err(format!("output index {} out of range for dim {}", l, dim));
                }
                v[*l] = c.clone();
            }
            out.insert(*triple, v);
        }
        Ok(out)
    }

    /// Stores the value on a canonical triple, dropping zero vectors so that
    /// structural equality is meaningful.
    pub fn insert(&mut self, triple: [usize; 3], value: Vector) {
        debug_assert!(triple[0] < triple[1] && triple[1] < triple[2] && triple[2] < self.dim);
        debug_assert_eq!(value.len(), self.dim);
        if vec_is_zero(&value) {
            self.entries.remove(&triple);
        } else {
            self.entries.insert(triple, value);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &Vector)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Value on basis vectors in any order; zero on repeated indices.
    pub fn eval_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        match sort_with_sign(&[i, j, k]) {
            None => zero_vector(self.dim),
            Some((sorted, sign)) => {
                let key = [sorted[0], sorted[1], sorted[2]];
                match self.entries.get(&key) {
                    None => zero_vector(self.dim),
                    Some(v) if sign > 0 => v.clone(),
                    Some(v) => v.iter().map(|x| -x).collect(),
                }
            }
        }
    }

    /// Full trilinear expansion on arbitrary coordinate vectors.
    pub fn eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vector, Error> {
        for len in [x.len(), y.len(), z.len()] {
            if len != self.dim {
                return Err(Error::DimensionMismatch {
                    context: "trilinear evaluation",
                    expected: self.dim,
                    got: len,
                });
            }
        }
        let mut out = zero_vector(self.dim);
        for (&[i, j, k], value) in &self.entries {
            // expand the skew determinant of the three arguments on (i,j,k)
            let det = det3(x, y, z, i, j, k);
            if !det.is_zero() {
                vec_add_scaled(&mut out, &det, value);
            }
        }
        Ok(out)
    }

    /// Evaluation with one basis slot replaced by a coordinate vector:
    /// `slot` 0, 1, or 2 is substituted by `v`, the others stay basis
    /// vectors `a` and `b` in order.
    pub fn eval_subst(&self, v: &[Rational], slot: usize, a: usize, b: usize) -> Vector {
        let mut out = zero_vector(self.dim);
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match slot {
                0 => self.eval_basis(l, a, b),
                1 => self.eval_basis(a, l, b),
                _ => self.eval_basis(a, b, l),
            };
            vec_add_scaled(&mut out, c, &t);
        }
        out
    }

    pub fn add(&self, other: &SkewTrilinear) -> SkewTrilinear {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (triple, v) in &other.entries {
            let mut cur = out
                .entries
                .get(triple)
                .cloned()
                .unwrap_or_else(|| zero_vector(self.dim));
            for (c, x) in cur.iter_mut().zip(v) {
                *c += x;
            }
            out.insert(*triple, cur);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SkewTrilinear {
        let mut out = SkewTrilinear::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (triple, v) in &self.entries {
            out.insert(*triple, vec_scale(c, v));
        }
        out
    }

    pub fn sub(&self, other: &SkewTrilinear) -> SkewTrilinear {
        let neg_one = -<Rational as num::traits::One>::one();
        self.add(&other.scale(&neg_one))
    }
}

/// 3x3 minor of the column triple `(i, j, k)` of the three argument vectors.
fn det3(x: &[Rational], y: &[Rational], z: &[Rational], i: usize, j: usize, k: usize) -> Rational {
    let m = |r: &[Rational], c: usize| r[c].clone();
    m(x, i) * (m(y, j) * m(z, k) - m(y, k) * m(z, j))
        - m(x, j) * (m(y, i) * m(z, k) - m(y, k) * m(z, i))
        + m(x, k) * (m(y, i) * m(z, j) - m(y, j) * m(z, i))
}

/// A finite-dimensional 3-Lie algebra presented by structure constants.
///
/// Construction does not verify the fundamental identity; run
/// [`check_fundamental_identity`](Self::check_fundamental_identity) for
/// that. This keeps the type usable for candidate tables that are being
/// tested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeLieAlgebra {
    structure: SkewTrilinear,
}

impl ThreeLieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        ThreeLieAlgebra {
            structure: SkewTrilinear::zero(dim),
        }
    }

    pub fn new(structure: SkewTrilinear) -> Self {
        ThreeLieAlgebra { structure }
    }

    pub fn from_entries(
        dim: usize,
        entries: &[([usize; 3], Vec<(usize, Rational)>)],
    ) -> Result<Self, String> {
        Ok(ThreeLieAlgebra {
            structure: SkewTrilinear::from_entries(dim, entries)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.structure.dim
    }

    pub fn structure(&self) -> &SkewTrilinear {
        &self.structure
    }

    pub fn indexer(&self) -> BasisIndexer {
        BasisIndexer::new(self.dim())
    }

    /// `[e_i, e_j, e_k]` for arbitrary index order.
    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        self.structure.eval_basis(i, j, k)
    }

    /// `[x, y, z]` by trilinear expansion.
    pub fn bracket(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vector, Error> {
        self.structure.eval(x, y, z)
    }

    /// Checks the fundamental identity
    /// `[x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3] + [y1,[x1,x2,y2],y3] + [y1,y2,[x1,x2,y3]]`
    /// over canonical pairs `(x1,x2)` and canonical triples `(y1,y2,y3)`.
    /// Both sides are multilinear, skew in the pair and skew in the triple,
    /// so basis tuples in canonical position suffice.
    ///
    /// Violations carry the tuple `[x1, x2, y1, y2, y3]` and the defect
    /// `LHS - RHS`.
    pub fn check_fundamental_identity(&self) -> Report {
        let ix = self.indexer();
        let mut report = Report::new();
        for (x1, x2) in ix.pairs() {
            for [y1, y2, y3] in ix.triples() {
                let inner = self.bracket_basis(y1, y2, y3);
                let lhs = self.structure.eval_subst(&inner, 2, x1, x2);
                let t1 = self
                    .structure
                    .eval_subst(&self.bracket_basis(x1, x2, y1), 0, y2, y3);
                let t2 = self
                    .structure
                    .eval_subst(&self.bracket_basis(x1, x2, y2), 1, y1, y3);
                let t3 = self
                    .structure
                    .eval_subst(&self.bracket_basis(x1, x2, y3), 2, y1, y2);
                let mut rhs = t1;
                vec_add_scaled(&mut rhs, &num::traits::One::one(), &t2);
                vec_add_scaled(&mut rhs, &num::traits::One::one(), &t3);
                report.record(vec![x1, x2, y1, y2, y3], vec_sub(&lhs, &rhs));
            }
        }
        report
    }

    /// The circle operation on fundamental objects,
    /// `x ∘ y = ([x1,x2,y1], y2) + (y1, [x1,x2,y2])`,
    /// extended bilinearly to the canonical pair basis.
    pub fn circle(&self, x: &PairElement, y: &PairElement) -> PairElement {
        debug_assert_eq!(x.dim, self.dim());
        debug_assert_eq!(y.dim, self.dim());
        let ix = self.indexer();
        let mut out = PairElement::zero(self.dim());
        for (xp, xc) in x.iter_nonzero(&ix) {
            for (yp, yc) in y.iter_nonzero(&ix) {
                let c = &xc * &yc;
                let (x1, x2) = xp;
                let (y1, y2) = yp;
                let b1 = self.bracket_basis(x1, x2, y1);
                for (l, coeff) in b1.iter().enumerate() {
                    if !coeff.is_zero() {
                        out.add_signed(l, y2, &(coeff * &c));
                    }
                }
                let b2 = self.bracket_basis(x1, x2, y2);
                for (l, coeff) in b2.iter().enumerate() {
                    if !coeff.is_zero() {
                        out.add_signed(y1, l, &(coeff * &c));
                    }
                }
            }
        }
        out
    }

    /// Checks the Leibniz rule `x∘(y∘z) = (x∘y)∘z + y∘(x∘z)` over canonical
    /// basis pairs. Violations carry `[x1, x2, y1, y2, z1, z2]` and the
    /// defect as pair-basis coefficients.
    pub fn check_leibniz_rule(&self) -> Report {
        let ix = self.indexer();
        let pairs = ix.pairs();
        let mut report = Report::new();
        for &(x1, x2) in &pairs {
            let x = PairElement::basis_pair(self.dim(), x1, x2);
            for &(y1, y2) in &pairs {
                let y = PairElement::basis_pair(self.dim(), y1, y2);
                let xy = self.circle(&x, &y);
                for &(z1, z2) in &pairs {
                    let z = PairElement::basis_pair(self.dim(), z1, z2);
                    let lhs = self.circle(&x, &self.circle(&y, &z));
                    let mut rhs = self.circle(&xy, &z);
                    rhs = rhs.add(&self.circle(&y, &self.circle(&x, &z)));
                    report.record(
                        vec![x1, x2, y1, y2, z1, z2],
                        vec_sub(&lhs.coeffs, &rhs.coeffs),
                    );
                }
            }
        }
        report
    }

    /// Action of a fundamental object on the algebra, `ad(x)w` extended
    /// linearly over the pair coefficients of `x`.
    pub fn ad_apply(&self, x: &PairElement, w: &[Rational]) -> Vector {
        debug_assert_eq!(w.len(), self.dim());
        let ix = self.indexer();
        let mut out = zero_vector(self.dim());
        for ((i, j), c) in x.iter_nonzero(&ix) {
            let t = self.structure.eval_subst(w, 2, i, j);
            vec_add_scaled(&mut out, &c, &t);
        }
        out
    }

    /// `ad(x)ad(y)w - ad(y)ad(x)w - ad(x∘y)w`; identically zero exactly when
    /// ad is a homomorphism of Leibniz algebras, which the fundamental
    /// identity guarantees.
    pub fn ad_homomorphism_defect(
        &self,
        x: &PairElement,
        y: &PairElement,
        w: &[Rational],
    ) -> Vector {
        let a = self.ad_apply(x, &self.ad_apply(y, w));
        let b = self.ad_apply(y, &self.ad_apply(x, w));
        let c = self.ad_apply(&self.circle(x, y), w);
        vec_sub(&vec_sub(&a, &b), &c)
    }

    /// Matrix of `w -> [e_i, e_j, w]` for a canonical pair.
    pub fn ad_matrix(&self, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim(), self.dim());
        for k in 0..self.dim() {
            m.set_col(k, &self.bracket_basis(i, j, k));
        }
        m
    }

    /// The adjoint representation: `V = g` with `rho(e_i, e_j) = ad(e_i, e_j)`.
    pub fn adjoint_rep(&self) -> Representation {
        let mut rep = Representation::zero(self.dim(), self.dim());
        for (i, j) in self.indexer().pairs() {
            rep.set_pair_matrix(i, j, self.ad_matrix(i, j));
        }
        rep
    }
}

/// An element of the fundamental set, i.e. of the second exterior power of
/// the algebra, stored as coefficients on canonical pairs `(i, j)`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairElement {
    dim: usize,
    coeffs: Vector,
}

impl PairElement {
    pub fn zero(dim: usize) -> Self {
        PairElement {
            dim,
            coeffs: zero_vector(BasisIndexer::new(dim).pair_count()),
        }
    }

    /// The canonical pair `(e_i, e_j)` with `i < j`.
    pub fn basis_pair(dim: usize, i: usize, j: usize) -> Self {
        assert!(i < j && j < dim);
        let mut out = PairElement::zero(dim);
        out.coeffs[BasisIndexer::new(dim).pair_index(i, j)] = num::traits::One::one();
        out
    }

    /// Wedge of two coordinate vectors.
    pub fn from_vectors(x: &[Rational], y: &[Rational]) -> Self {
        assert_eq!(x.len(), y.len());
        let dim = x.len();
        let mut out = PairElement::zero(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let c = &x[i] * &y[j] - &x[j] * &y[i];
                out.add_signed(i, j, &c);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &Vector {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.coeffs)
    }

    /// Adds `c · (e_i, e_j)` with sign reduction to the canonical basis;
    /// `(e_i, e_i)` collapses to zero.
    pub fn add_signed(&mut self, i: usize, j: usize, c: &Rational) {
        if i == j || c.is_zero() {
            return;
        }
        let ix = BasisIndexer::new(self.dim);
        if i < j {
            self.coeffs[ix.pair_index(i, j)] += c;
        } else {
            self.coeffs[ix.pair_index(j, i)] -= c;
        }
    }

    pub fn add(&self, other: &PairElement) -> PairElement {
        debug_assert_eq!(self.dim, other.dim);
        PairElement {
            dim: self.dim,
            coeffs: crate::linalg::vec_add(&self.coeffs, &other.coeffs),
        }
    }

    pub fn scale(&self, c: &Rational) -> PairElement {
        PairElement {
            dim: self.dim,
            coeffs: vec_scale(c, &self.coeffs),
        }
    }

    fn iter_nonzero<'a>(
        &'a self,
        ix: &'a BasisIndexer,
    ) -> impl Iterator<Item = ((usize, usize), Rational)> + 'a {
        ix.pairs()
            .into_iter()
            .enumerate()
            .filter(|(p, _)| !self.coeffs[*p].is_zero())
            .map(|(p, pair)| (pair, self.coeffs[p].clone()))
    }
}

/// The four-dimensional algebra with `[e_i, e_j, e_k] = sum_l eps_{ijkl} e_l`
/// (Levi-Civita structure constants).
pub fn a4() -> ThreeLieAlgebra {
    use crate::linalg::rat_int;
    ThreeLieAlgebra::from_entries(
        4,
        &[
            ([0, 1, 2], vec![(3, rat_int(1))]),
            ([0, 1, 3], vec![(2, rat_int(-1))]),
            ([0, 2, 3], vec![(1, rat_int(1))]),
            ([1, 2, 3], vec![(0, rat_int(-1))]),
        ],
    )
    .unwrap()
}

/// The four-dimensional Heisenberg-type algebra with only `[e0,e1,e2] = e3`.
pub fn h4() -> ThreeLieAlgebra {
    use crate::linalg::rat_int;
    ThreeLieAlgebra::from_entries(4, &[([0, 1, 2], vec![(3, rat_int(1))])]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};

    /// Brute-force fundamental-identity check over all index tuples, not
    /// just canonical ones; the independent oracle for the optimized
    /// checker.
    fn fi_defects_brute(a: &ThreeLieAlgebra) -> Vec<(Vec<usize>, Vector)> {
        let n = a.dim();
        let mut out = Vec::new();
        for x1 in 0..n {
            for x2 in 0..n {
                for y1 in 0..n {
                    for y2 in 0..n {
                        for y3 in 0..n {
                            let inner = a.bracket_basis(y1, y2, y3);
                            let lhs = a.structure.eval_subst(&inner, 2, x1, x2);
                            let mut rhs =
                                a.structure
                                    .eval_subst(&a.bracket_basis(x1, x2, y1), 0, y2, y3);
                            vec_add_scaled(
                                &mut rhs,
                                &rat_int(1),
                                &a.structure
                                    .eval_subst(&a.bracket_basis(x1, x2, y2), 1, y1, y3),
                            );
                            vec_add_scaled(
                                &mut rhs,
                                &rat_int(1),
                                &a.structure
                                    .eval_subst(&a.bracket_basis(x1, x2, y3), 2, y1, y2),
                            );
                            let d = vec_sub(&lhs, &rhs);
                            if !vec_is_zero(&d) {
                                out.push((vec![x1, x2, y1, y2, y3], d));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// A4 with a cross perturbation `c^0_{012} += 1`; genuinely violates the
    /// fundamental identity (checked by hand at `x=(e1,e3), y=(e0,e1,e2)`).
    pub fn a4_broken() -> ThreeLieAlgebra {
        ThreeLieAlgebra::from_entries(
            4,
            &[
                ([0, 1, 2], vec![(0, rat_int(1)), (3, rat_int(1))]),
                ([0, 1, 3], vec![(2, rat_int(-1))]),
                ([0, 2, 3], vec![(1, rat_int(1))]),
                ([1, 2, 3], vec![(0, rat_int(-1))]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn abelian_bracket_is_zero() {
        let a = ThreeLieAlgebra::abelian(3);
        let x = vec![rat_int(1), rat(2, 3), rat_int(-4)];
        let y = vec![rat_int(5), rat_int(0), rat(1, 2)];
        let z = vec![rat_int(-1), rat_int(7), rat_int(2)];
        assert!(vec_is_zero(&a.bracket(&x, &y, &z).unwrap()));
    }

    #[test]
    fn bracket_repeated_argument_vanishes() {
        let a = a4();
        let x = vec![rat_int(1), rat(2, 5), rat_int(0), rat_int(3)];
        let y = vec![rat_int(2), rat_int(-1), rat(7, 2), rat_int(1)];
        assert!(vec_is_zero(&a.bracket(&x, &x, &y).unwrap()));
    }

    #[test]
    fn a4_bracket_basis_values() {
        let a = a4();
        assert_eq!(a.bracket_basis(0, 1, 2), basis_vector(4, 3));
        // epsilon expansion: [e0,e1,e3] = -e2, [e0,e2,e3] = e1, [e1,e2,e3] = -e0
        assert_eq!(
            a.bracket_basis(0, 1, 3),
            vec_scale(&rat_int(-1), &basis_vector(4, 2))
        );
        assert_eq!(a.bracket_basis(0, 2, 3), basis_vector(4, 1));
        assert_eq!(
            a.bracket_basis(1, 2, 3),
            vec_scale(&rat_int(-1), &basis_vector(4, 0))
        );
        // odd permutation flips the sign
        assert_eq!(
            a.bracket_basis(1, 0, 2),
            vec_scale(&rat_int(-1), &basis_vector(4, 3))
        );
    }

    #[test]
    fn bracket_dimension_mismatch_is_an_error() {
        let a = a4();
        let short = vec![rat_int(1); 3];
        let ok = vec![rat_int(1); 4];
        assert!(matches!(
            a.bracket(&short, &ok, &ok),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fundamental_identity_fixtures() {
        assert!(ThreeLieAlgebra::abelian(5)
            .check_fundamental_identity()
            .is_empty());
        assert!(a4().check_fundamental_identity().is_empty());
        assert!(h4().check_fundamental_identity().is_empty());
        assert!(!a4_broken().check_fundamental_identity().is_empty());
    }

    #[test]
    fn fundamental_identity_agrees_with_brute_force() {
        for a in [a4(), h4(), a4_broken(), ThreeLieAlgebra::abelian(4)] {
            let canonical_empty = a.check_fundamental_identity().is_empty();
            let brute_empty = fi_defects_brute(&a).is_empty();
            assert_eq!(canonical_empty, brute_empty);
        }
    }

    #[test]
    fn broken_a4_violation_hand_value() {
        // x = (e1, e3), y = (e0, e1, e2): LHS = [e1,e3,e0+e3] = -e2, RHS = 0.
        let report = a4_broken().check_fundamental_identity();
        let hit = report
            .violations()
            .iter()
            .find(|v| v.tuple == vec![1, 3, 0, 1, 2])
            .expect("hand-computed violating tuple present");
        assert_eq!(hit.defect, vec_scale(&rat_int(-1), &basis_vector(4, 2)));
    }

    #[test]
    fn circle_on_abelian_is_zero() {
        let a = ThreeLieAlgebra::abelian(4);
        let x = PairElement::basis_pair(4, 0, 1);
        let y = PairElement::basis_pair(4, 2, 3);
        assert!(a.circle(&x, &y).is_zero());
    }

    #[test]
    fn circle_a4_hand_values() {
        let a = a4();
        // (e0,e1)∘(e2,e3): ([e0,e1,e2], e3) = (e3,e3) -> 0 and (e2, [e0,e1,e3]) = (e2,-e2) -> 0
        let x = PairElement::basis_pair(4, 0, 1);
        let y = PairElement::basis_pair(4, 2, 3);
        assert!(a.circle(&x, &y).is_zero());
        // (e0,e1)∘(e0,e2) = ([e0,e1,e0], e2) + (e0, [e0,e1,e2]) = (e0, e3)
        let y2 = PairElement::basis_pair(4, 0, 2);
        assert_eq!(a.circle(&x, &y2), PairElement::basis_pair(4, 0, 3));
    }

    #[test]
    fn circle_is_bilinear() {
        let a = a4();
        let x = PairElement::basis_pair(4, 0, 2);
        let xp = PairElement::basis_pair(4, 1, 3);
        let y = PairElement::basis_pair(4, 0, 1);
        let s = rat(3, 2);
        let t = rat(-5, 7);
        let combo = x.scale(&s).add(&xp.scale(&t));
        let lhs = a.circle(&combo, &y);
        let rhs = a.circle(&x, &y).scale(&s).add(&a.circle(&xp, &y).scale(&t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz_rule_fixtures() {
        assert!(ThreeLieAlgebra::abelian(4).check_leibniz_rule().is_empty());
        assert!(a4().check_leibniz_rule().is_empty());
        assert!(h4().check_leibniz_rule().is_empty());
    }

    #[test]
    fn ad_homomorphism_defect_values() {
        let a = a4();
        let ix = a.indexer();
        for (x1, x2) in ix.pairs() {
            for (y1, y2) in ix.pairs() {
                for w in 0..4 {
                    let d = a.ad_homomorphism_defect(
                        &PairElement::basis_pair(4, x1, x2),
                        &PairElement::basis_pair(4, y1, y2),
                        &basis_vector(4, w),
                    );
                    assert!(vec_is_zero(&d));
                }
            }
        }
        // hand value on the broken algebra:
        // ad(e1,e3)ad(e0,e1)e2 - ad(e0,e1)ad(e1,e3)e2 - ad((e1,e3)∘(e0,e1))e2 = -e2
        let b = a4_broken();
        let d = b.ad_homomorphism_defect(
            &PairElement::basis_pair(4, 1, 3),
            &PairElement::basis_pair(4, 0, 1),
            &basis_vector(4, 2),
        );
        assert_eq!(d, vec_scale(&rat_int(-1), &basis_vector(4, 2)));
    }

    #[test]
    fn adjoint_matrices() {
        let a = a4();
        let m = a.ad_matrix(0, 1);
        // e2 -> e3, e3 -> -e2, e0 and e1 -> 0
        assert_eq!(m.col(2), basis_vector(4, 3));
        assert_eq!(m.col(3), vec_scale(&rat_int(-1), &basis_vector(4, 2)));
        assert!(vec_is_zero(&m.col(0)));
        assert!(vec_is_zero(&m.col(1)));

        let h = h4();
        let mh = h.ad_matrix(0, 1);
        assert_eq!(mh.col(2), basis_vector(4, 3));
        assert!(vec_is_zero(&mh.col(0)));
        assert!(vec_is_zero(&mh.col(1)));
        assert!(vec_is_zero(&mh.col(3)));
    }

    #[test]
    fn pair_element_from_vectors_matches_wedge() {
        let x = vec![rat_int(1), rat_int(2), rat_int(0), rat_int(-1)];
        let y = vec![rat_int(0), rat_int(1), rat_int(3), rat_int(2)];
        let p = PairElement::from_vectors(&x, &y);
        let ix = BasisIndexer::new(4);
        assert_eq!(p.coeffs()[ix.pair_index(0, 1)], rat_int(1));
        assert_eq!(p.coeffs()[ix.pair_index(0, 2)], rat_int(3));
        assert_eq!(p.coeffs()[ix.pair_index(1, 2)], rat_int(6));
        assert_eq!(p.coeffs()[ix.pair_index(0, 3)], rat_int(2));
    }

    #[test]
    fn skew_trilinear_rejects_bad_entries() {
        assert!(SkewTrilinear::from_entries(4, &[([2, 1, 3], vec![])]).is_err());
        assert!(SkewTrilinear::from_entries(4, &[([0, 1, 4], vec![])]).is_err());
        assert!(SkewTrilinear::from_entries(4, &[([0, 1, 2], vec![(4, rat_int(1))])]).is_err());
    }
}
