//! Representations of 3-Lie algebras: the map `rho` from canonical pairs to
//! endomorphisms of a module `V`, the (R1)/(R2) conditions that make it a
//! representation, the induced left and right actions on `Hom(g, V)`, and
//! the Leibniz-module axioms those actions satisfy.

use crate::algebra::{PairElement, ThreeLieAlgebra};
use crate::linalg::{Matrix, Rational, Vector};
use crate::report::Report;
use crate::Error;
use num::traits::Zero;
use std::collections::BTreeMap;

/// Action matrices `rho(e_i, e_j)` on a module of dimension `dim_v`,
/// indexed by canonical basis pairs of a `dim_g`-dimensional algebra.
/// Absent pairs act as zero; `rho` extends skew-bilinearly, so
/// `rho(x, x) = 0` structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    dim_g: usize,
    dim_v: usize,
    action: BTreeMap<(usize, usize), Matrix>,
}

impl Representation {
    /// The zero representation on a `dim_v`-dimensional module.
    pub fn zero(dim_g: usize, dim_v: usize) -> Self {
        Representation {
            dim_g,
            dim_v,
            action: BTreeMap::new(),
        }
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// Stores the action matrix of a canonical pair, dropping zero matrices.
    pub fn set_pair_matrix(&mut self, i: usize, j: usize, m: Matrix) {
        assert!(i < j && j < self.dim_g, "pair ({}, {}) not canonical", i, j);
        assert_eq!((m.rows(), m.cols()), (self.dim_v, self.dim_v));
        if m.is_zero() {
            self.action.remove(&(i, j));
        } else {
            self.action.insert((i, j), m);
        }
    }

    pub fn pair_matrices(&self) -> impl Iterator<Item = (&(usize, usize), &Matrix)> {
        self.action.iter()
    }

    /// `rho(e_i, e_j)` for arbitrary index order; zero when `i == j`.
    pub fn rho_basis(&self, i: usize, j: usize) -> Matrix {
        if i == j {
            return Matrix::zero(self.dim_v, self.dim_v);
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.action.get(&key) {
            None => Matrix::zero(self.dim_v, self.dim_v),
            Some(m) if flip => m.neg(),
            Some(m) => m.clone(),
        }
    }

    /// Linear extension of the stored pair matrices to a pair element.
    pub fn rho(&self, x: &PairElement) -> Result<Matrix, Error> {
        if x.dim() != self.dim_g {
            return Err(Error::DimensionMismatch {
                context: "rho argument",
                expected: self.dim_g,
                got: x.dim(),
            });
        }
        let ix = crate::basis::BasisIndexer::new(self.dim_g);
        let mut out = Matrix::zero(self.dim_v, self.dim_v);
        for (p, (i, j)) in ix.pairs().into_iter().enumerate() {
            let c = &x.coeffs()[p];
            if !c.is_zero() {
                out = out.add(&self.rho_basis(i, j).scale(c));
            }
        }
        Ok(out)
    }

    /// `rho(e_i, v)` by expanding the second slot over the coordinates of `v`.
    pub fn rho_basis_vec(&self, i: usize, v: &[Rational]) -> Matrix {
        let mut out = Matrix::zero(self.dim_v, self.dim_v);
        for (l, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.rho_basis(i, l).scale(c));
            }
        }
        out
    }
}

/// Checks (R1): `[rho(x1,x2), rho(y1,y2)] = rho((x1,x2) ∘ (y1,y2))` over
/// canonical pairs. Violations carry `[x1, x2, y1, y2]` and the defect
/// matrix flattened row major.
pub fn check_r1(algebra: &ThreeLieAlgebra, rep: &Representation) -> Report {
    let mut report = Report::new();
    let pairs = algebra.indexer().pairs();
    for &(x1, x2) in &pairs {
        let px = PairElement::basis_pair(algebra.dim(), x1, x2);
        let rx = rep.rho_basis(x1, x2);
        for &(y1, y2) in &pairs {
            let py = PairElement::basis_pair(algebra.dim(), y1, y2);
            let ry = rep.rho_basis(y1, y2);
            let lhs = rx.commutator(&ry);
            let rhs = rep.rho(&algebra.circle(&px, &py)).expect("validated dims");
            report.record(
                vec![x1, x2, y1, y2],
                lhs.sub(&rhs).entries().to_vec(),
            );
        }
    }
    report
}

/// Checks (R2):
/// `rho(x1, [y1,y2,y3]) = rho(y2,y3) rho(x1,y1) + rho(y3,y1) rho(x1,y2) + rho(y1,y2) rho(x1,y3)`
/// over basis vectors `x1` and canonical triples. The left side expands
/// `rho` bilinearly on the pair `(x1, [y1,y2,y3])`. Violations carry
/// `[x1, y1, y2, y3]`.
pub fn check_r2(algebra: &ThreeLieAlgebra, rep: &Representation) -> Report {
    let mut report = Report::new();
    for x1 in 0..algebra.dim() {
        for [y1, y2, y3] in algebra.indexer().triples() {
            let inner = algebra.bracket_basis(y1, y2, y3);
            let lhs = rep.rho_basis_vec(x1, &inner);
            let rhs = rep
                .rho_basis(y2, y3)
                .mul(&rep.rho_basis(x1, y1))
                .add(&rep.rho_basis(y3, y1).mul(&rep.rho_basis(x1, y2)))
                .add(&rep.rho_basis(y1, y2).mul(&rep.rho_basis(x1, y3)));
            report.record(
                vec![x1, y1, y2, y3],
                lhs.sub(&rhs).entries().to_vec(),
            );
        }
    }
    report
}

/// The left action `[(x1,x2), phi]_L(x3) = rho(x1,x2) phi(x3) - phi([x1,x2,x3])`
/// extended linearly over the pair coefficients of `x`, returned as a matrix
/// in `Hom(g, V)`.
pub fn action_l(
    algebra: &ThreeLieAlgebra,
    rep: &Representation,
    x: &PairElement,
    phi: &Matrix,
) -> Matrix {
    let ix = crate::basis::BasisIndexer::new(algebra.dim());
    let mut out = Matrix::zero(rep.dim_v(), algebra.dim());
    for (p, (i, j)) in ix.pairs().into_iter().enumerate() {
        let c = &x.coeffs()[p];
        if c.is_zero() {
            continue;
        }
        let term = rep
            .rho_basis(i, j)
            .mul(phi)
            .sub(&phi.mul(&algebra.ad_matrix(i, j)));
        out = out.add(&term.scale(c));
    }
    out
}

/// The right action
/// `[phi, (x1,x2)]_R(x3) = phi([x1,x2,x3]) - rho(x1,x2) phi(x3) - rho(x2,x3) phi(x1) - rho(x3,x1) phi(x2)`
/// extended linearly over the pair coefficients of `x`. The last two terms
/// involve `rho` at pairs containing the evaluation point `x3`, so the
/// result is assembled column by column.
pub fn action_r(
    algebra: &ThreeLieAlgebra,
    rep: &Representation,
    phi: &Matrix,
    x: &PairElement,
) -> Matrix {
    let ix = crate::basis::BasisIndexer::new(algebra.dim());
    let mut out = Matrix::zero(rep.dim_v(), algebra.dim());
    for (p, (x1, x2)) in ix.pairs().into_iter().enumerate() {
        let c = &x.coeffs()[p];
        if c.is_zero() {
            continue;
        }
        let head = phi
            .mul(&algebra.ad_matrix(x1, x2))
            .sub(&rep.rho_basis(x1, x2).mul(phi));
        let phi_x1 = phi.col(x1);
        let phi_x2 = phi.col(x2);
        let mut term = head;
        for x3 in 0..algebra.dim() {
            let mut col = term.col(x3);
            let t1 = rep.rho_basis(x2, x3).mul_vec(&phi_x1).expect("dims");
            let t2 = rep.rho_basis(x3, x1).mul_vec(&phi_x2).expect("dims");
            for ((c0, a), b) in col.iter_mut().zip(&t1).zip(&t2) {
                *c0 -= a;
                *c0 -= b;
            }
            term.set_col(x3, &col);
        }
        out = out.add(&term.scale(c));
    }
    out
}

/// Per-axiom reports for the four Leibniz-module axioms satisfied by the
/// actions on `Hom(g, V)`.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub llm: Report,
    pub lml: Report,
    pub mll: Report,
    pub mmm: Report,
}

impl AxiomReport {
    pub fn all_empty(&self) -> bool {
        self.llm.is_empty() && self.lml.is_empty() && self.mll.is_empty() && self.mmm.is_empty()
    }
}

/// Evaluates the axioms
///
/// - (LLM) `[x∘y, m]_L = [x, [y, m]_L]_L - [y, [x, m]_L]_L`
/// - (LML) `[m, x∘y]_R = [[m, x]_R, y]_R + [x, [m, y]_R]_L`
/// - (MLL) `[m, x∘y]_R = [x, [m, y]_R]_L - [[x, m]_L, y]_R`
/// - (MMM) `[[m, x]_R, y]_R + [[x, m]_L, y]_R = 0`
///
/// over canonical basis pairs `x`, `y` and matrix units `m` of `Hom(g, V)`;
/// the axioms are linear in `m`, so matrix units span all cases. Violation
/// tuples are `[x1, x2, y1, y2, row, col]` where `(row, col)` names the
/// matrix unit.
pub fn check_leibniz_module_axioms(algebra: &ThreeLieAlgebra, rep: &Representation) -> AxiomReport {
    let pairs = algebra.indexer().pairs();
    let mut out = AxiomReport {
        llm: Report::new(),
        lml: Report::new(),
        mll: Report::new(),
        mmm: Report::new(),
    };
    for &(x1, x2) in &pairs {
        let x = PairElement::basis_pair(algebra.dim(), x1, x2);
        for &(y1, y2) in &pairs {
            let y = PairElement::basis_pair(algebra.dim(), y1, y2);
            let xy = algebra.circle(&x, &y);
            for row in 0..rep.dim_v() {
                for col in 0..algebra.dim() {
                    let mut m = Matrix::zero(rep.dim_v(), algebra.dim());
                    m[(row, col)] = num::traits::One::one();
                    let tuple = vec![x1, x2, y1, y2, row, col];

                    let llm = action_l(algebra, rep, &xy, &m)
                        .sub(&action_l(algebra, rep, &x, &action_l(algebra, rep, &y, &m)))
                        .add(&action_l(algebra, rep, &y, &action_l(algebra, rep, &x, &m)));
                    out.llm.record(tuple.clone(), llm.entries().to_vec());

                    let m_xr = action_r(algebra, rep, &m, &x);
                    let m_yr = action_r(algebra, rep, &m, &y);
                    let xm_l = action_l(algebra, rep, &x, &m);

                    let lml = action_r(algebra, rep, &m, &xy)
                        .sub(&action_r(algebra, rep, &m_xr, &y))
                        .sub(&action_l(algebra, rep, &x, &m_yr));
                    out.lml.record(tuple.clone(), lml.entries().to_vec());

                    let mll = action_r(algebra, rep, &m, &xy)
                        .sub(&action_l(algebra, rep, &x, &m_yr))
                        .add(&action_r(algebra, rep, &xm_l, &y));
                    out.mll.record(tuple.clone(), mll.entries().to_vec());

                    let mmm = action_r(algebra, rep, &m_xr, &y)
                        .add(&action_r(algebra, rep, &xm_l, &y));
                    out.mmm.record(tuple, mmm.entries().to_vec());
                }
            }
        }
    }
    out
}

/// A validated algebra/representation pair: the algebra passes the
/// fundamental identity and the representation passes (R1) and (R2).
/// Cohomology, deformation, and extension operations require this as their
/// precondition, so they take a `Module` and cannot be called on invalid
/// data.
#[derive(Debug, Clone)]
pub struct Module {
    algebra: ThreeLieAlgebra,
    rep: Representation,
}

impl Module {
    pub fn new(algebra: ThreeLieAlgebra, rep: Representation) -> Result<Self, Error> {
        if rep.dim_g() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                context: "module over algebra",
                expected: algebra.dim(),
                got: rep.dim_g(),
            });
        }
        let fi = algebra.check_fundamental_identity();
        if !fi.is_empty() {
            return Err(Error::InvalidAlgebra(fi));
        }
        let r1 = check_r1(&algebra, &rep);
        if !r1.is_empty() {
            return Err(Error::InvalidRepresentation {
                context: "(R1)",
                report: r1,
            });
        }
        let r2 = check_r2(&algebra, &rep);
        if !r2.is_empty() {
            return Err(Error::InvalidRepresentation {
                context: "(R2)",
                report: r2,
            });
        }
        Ok(Module { algebra, rep })
    }

    /// The adjoint module of a fundamental-identity-checked algebra.
    pub fn adjoint(algebra: ThreeLieAlgebra) -> Result<Self, Error> {
        let rep = algebra.adjoint_rep();
        Module::new(algebra, rep)
    }

    /// The zero representation on a `dim_v`-dimensional module.
    pub fn with_zero_rep(algebra: ThreeLieAlgebra, dim_v: usize) -> Result<Self, Error> {
        let rep = Representation::zero(algebra.dim(), dim_v);
        Module::new(algebra, rep)
    }

    pub fn algebra(&self) -> &ThreeLieAlgebra {
        &self.algebra
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn dim_g(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim_v()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{a4, h4};
    use crate::linalg::{basis_vector, rat_int, vec_is_zero, vec_scale, Vector};

    fn identity_on_pairs(algebra: &ThreeLieAlgebra, dim_v: usize) -> Representation {
        let mut rep = Representation::zero(algebra.dim(), dim_v);
        for (i, j) in algebra.indexer().pairs() {
            rep.set_pair_matrix(i, j, Matrix::identity(dim_v));
        }
        rep
    }

    #[test]
    fn rho_of_degenerate_pair_is_zero() {
        let rep = a4().adjoint_rep();
        assert!(rep.rho_basis(2, 2).is_zero());
        assert_eq!(rep.rho_basis(1, 0), rep.rho_basis(0, 1).neg());
    }

    #[test]
    fn rho_zero_representation() {
        let rep = Representation::zero(4, 2);
        let x = PairElement::basis_pair(4, 0, 3);
        assert!(rep.rho(&x).unwrap().is_zero());
    }

    #[test]
    fn adjoint_rho_a4_hand_value() {
        let rep = a4().adjoint_rep();
        let m = rep
            .rho(&PairElement::basis_pair(4, 0, 1))
            .unwrap();
        assert_eq!(m.col(2), basis_vector(4, 3));
        assert_eq!(m.col(3), vec_scale(&rat_int(-1), &basis_vector(4, 2)));
    }

    #[test]
    fn r1_r2_fixtures() {
        for alg in [a4(), h4()] {
            let rep = alg.adjoint_rep();
            assert!(check_r1(&alg, &rep).is_empty());
            assert!(check_r2(&alg, &rep).is_empty());
        }
        let ab = ThreeLieAlgebra::abelian(4);
        let zero = Representation::zero(4, 3);
        assert!(check_r1(&ab, &zero).is_empty());
        assert!(check_r2(&ab, &zero).is_empty());
    }

    #[test]
    fn identity_on_pairs_breaks_r1() {
        let alg = h4();
        let rep = identity_on_pairs(&alg, 2);
        assert!(!check_r1(&alg, &rep).is_empty());
    }

    #[test]
    fn action_l_edge_cases() {
        let alg = ThreeLieAlgebra::abelian(4);
        let rep = Representation::zero(4, 2);
        let x = PairElement::basis_pair(4, 0, 1);
        let phi = Matrix::from_fn(2, 4, |i, j| rat_int((i + j) as i64));
        assert!(action_l(&alg, &rep, &x, &phi).is_zero());

        let alg = h4();
        let rep = alg.adjoint_rep();
        let zero_phi = Matrix::zero(4, 4);
        assert!(action_l(&alg, &rep, &x, &zero_phi).is_zero());
        // phi = id: rho(e0,e1)w - phi([e0,e1,w]) = 0
        assert!(action_l(&alg, &rep, &x, &Matrix::identity(4)).is_zero());
    }

    #[test]
    fn action_r_hand_value() {
        // A4 adjoint, phi = id, x = (e0,e1), at e2:
        // [e0,e1,e2] - [e0,e1,e2] - [e1,e2,e0] - [e2,e0,e1] = -2 e3
        let alg = a4();
        let rep = alg.adjoint_rep();
        let x = PairElement::basis_pair(4, 0, 1);
        let m = action_r(&alg, &rep, &Matrix::identity(4), &x);
        let expected: Vector = vec_scale(&rat_int(-2), &basis_vector(4, 3));
        assert_eq!(m.col(2), expected);
    }

    #[test]
    fn action_r_zero_cases() {
        let alg = ThreeLieAlgebra::abelian(3);
        let rep = Representation::zero(3, 2);
        let x = PairElement::basis_pair(3, 0, 2);
        let phi = Matrix::from_fn(2, 3, |i, j| rat_int((2 * i + j) as i64));
        assert!(action_r(&alg, &rep, &phi, &x).is_zero());
        let alg4 = a4();
        let rep4 = alg4.adjoint_rep();
        assert!(action_r(&alg4, &rep4, &Matrix::zero(4, 4), &PairElement::basis_pair(4, 0, 1)).is_zero());
    }

    #[test]
    fn axioms_hold_for_valid_modules() {
        let ab = ThreeLieAlgebra::abelian(3);
        let zero = Representation::zero(3, 2);
        assert!(check_leibniz_module_axioms(&ab, &zero).all_empty());

        let alg = a4();
        let rep = alg.adjoint_rep();
        assert!(check_leibniz_module_axioms(&alg, &rep).all_empty());
    }

    #[test]
    fn axioms_fail_for_broken_rho() {
        let alg = h4();
        let rep = identity_on_pairs(&alg, 2);
        let axioms = check_leibniz_module_axioms(&alg, &rep);
        assert!(!axioms.all_empty());
        // Prop-2.1 direction: R1 or R2 must fail as well.
        assert!(!check_r1(&alg, &rep).is_empty() || !check_r2(&alg, &rep).is_empty());
    }

    #[test]
    fn module_rejects_invalid_inputs() {
        let alg = h4();
        let rep = identity_on_pairs(&alg, 2);
        assert!(matches!(
            Module::new(alg, rep),
            Err(Error::InvalidRepresentation { .. })
        ));

        let broken = ThreeLieAlgebra::from_entries(
            4,
            &[
                ([0, 1, 2], vec![(0, rat_int(1)), (3, rat_int(1))]),
                ([0, 1, 3], vec![(2, rat_int(-1))]),
                ([0, 2, 3], vec![(1, rat_int(1))]),
                ([1, 2, 3], vec![(0, rat_int(-1))]),
            ],
        )
        .unwrap();
        assert!(matches!(
            Module::adjoint(broken),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn actions_are_bilinear() {
        let alg = a4();
        let rep = alg.adjoint_rep();
        let x = PairElement::basis_pair(4, 0, 2);
        let y = PairElement::basis_pair(4, 1, 3);
        let s = crate::linalg::rat(2, 3);
        let combo = x.scale(&s).add(&y);
        let phi = Matrix::from_fn(4, 4, |i, j| rat_int((i * 4 + j) as i64 % 3 - 1));
        let lhs = action_l(&alg, &rep, &combo, &phi);
        let rhs = action_l(&alg, &rep, &x, &phi)
            .scale(&s)
            .add(&action_l(&alg, &rep, &y, &phi));
        assert_eq!(lhs, rhs);
        let lhs_r = action_r(&alg, &rep, &phi, &combo);
        let rhs_r = action_r(&alg, &rep, &phi, &x)
            .scale(&s)
            .add(&action_r(&alg, &rep, &phi, &y));
        assert_eq!(lhs_r, rhs_r);
        assert!(vec_is_zero(
            action_l(&alg, &rep, &PairElement::zero(4), &phi).entries()
        ));
    }
}
