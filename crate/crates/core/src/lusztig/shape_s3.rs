//! Structural characterization of S_3-invariant matrices over A = K[x,y]:
//! a 4×4 matrix over End(T) ⊗ A (T = triv ⊕ V ⊕ sgn with the explicit
//! 2-dimensional model) is invariant exactly when its entries satisfy a
//! short list of linear conditions — corner entries (anti)invariant, the
//! middle block controlled by one invariant, one anti-invariant and one
//! entry annihilated by s₁ − ω s₂, and the mixed entries annihilated by
//! s₁ − ω^{±1} s₂ with partner entries determined by s₁.
//!
//! This module checks that characterization against direct invariance on
//! the space of matrices with polynomial entries of bounded degree.

use crate::cyclotomic::Cyclo;
use crate::linalg::{echelon_basis, nullspace, Mat};

/// Truncated commutative polynomials in x, y with Cyclo coefficients over a
/// fixed monomial basis.
pub struct PolySpace {
    pub max_degree: usize,
    /// (a, b) exponent pairs, graded then x-power descending
    pub monomials: Vec<(usize, usize)>,
}

impl PolySpace {
    pub fn new(max_degree: usize) -> Self {
        let mut monomials = Vec::new();
        for d in 0..=max_degree {
            for a in (0..=d).rev() {
                monomials.push((a, d - a));
            }
        }
        PolySpace { max_degree, monomials }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    fn index(&self, a: usize, b: usize) -> usize {
        self.monomials.iter().position(|&m| m == (a, b)).unwrap()
    }

    fn mul_linear(&self, poly: &[Cyclo], cx: &Cyclo, cy: &Cyclo) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); self.dim()];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = self.monomials[k];
            if a + b + 1 > self.max_degree {
                continue;
            }
            if !cx.is_zero() {
                let i = self.index(a + 1, b);
                out[i] = &out[i] + &(c * cx);
            }
            if !cy.is_zero() {
                let i = self.index(a, b + 1);
                out[i] = &out[i] + &(c * cy);
            }
        }
        out
    }

    /// Operator matrix of the substitution x ↦ S·x, y ↦ S·y on the monomial
    /// basis (S acts by columns: g(x) = S[0][0]x + S[1][0]y).
    pub fn substitution_operator(&self, s: &Mat) -> Mat {
        let dim = self.dim();
        let mut op = Mat::zeros(dim, dim);
        for (k, &(a, b)) in self.monomials.iter().enumerate() {
            let mut poly = vec![Cyclo::zero(); dim];
            poly[self.index(0, 0)] = Cyclo::one();
            for _ in 0..a {
                poly = self.mul_linear(&poly, s.get(0, 0), s.get(1, 0));
            }
            for _ in 0..b {
                poly = self.mul_linear(&poly, s.get(0, 1), s.get(1, 1));
            }
            for (i, c) in poly.into_iter().enumerate() {
                op.set(i, k, c);
            }
        }
        op
    }
}

fn s3_generators() -> (Mat, Mat) {
    let w = Cyclo::zeta(3);
    let w2 = &w * &w;
    let s1 = Mat::from_rows(vec![
        vec![Cyclo::zero(), Cyclo::one()],
        vec![Cyclo::one(), Cyclo::zero()],
    ]);
    let s2 = Mat::from_rows(vec![
        vec![Cyclo::zero(), w],
        vec![w2, Cyclo::zero()],
    ]);
    (s1, s2)
}

fn rho_t(g: &Mat, sign: i64) -> Mat {
    // blockdiag(1, g, sign) on T = triv ⊕ V ⊕ sgn
    let mut m = Mat::zeros(4, 4);
    m.set(0, 0, Cyclo::one());
    for a in 0..2 {
        for b in 0..2 {
            m.set(1 + a, 1 + b, g.get(a, b).clone());
        }
    }
    m.set(3, 3, Cyclo::from_integer(sign));
    m
}

struct Shape {
    poly: PolySpace,
    op_s1: Mat,
    op_s2: Mat,
    rho1: Mat,
    rho2: Mat,
}

impl Shape {
    fn new(max_degree: usize) -> Self {
        let poly = PolySpace::new(max_degree);
        let (s1, s2) = s3_generators();
        let op_s1 = poly.substitution_operator(&s1);
        let op_s2 = poly.substitution_operator(&s2);
        let rho1 = rho_t(&s1, -1);
        let rho2 = rho_t(&s2, -1);
        Shape { poly, op_s1, op_s2, rho1, rho2 }
    }

    fn pdim(&self) -> usize {
        self.poly.dim()
    }

    fn total_dim(&self) -> usize {
        16 * self.pdim()
    }

    fn entry_offset(&self, i: usize, j: usize) -> usize {
        (i * 4 + j) * self.pdim()
    }

    /// Rows of (T_g − 1) for direct invariance under one generator.
    fn invariance_rows(&self, rho: &Mat, op: &Mat) -> Vec<Vec<Cyclo>> {
        let pd = self.pdim();
        let total = self.total_dim();
        let rho_inv = rho.inverse().unwrap();
        let mut rows = Vec::with_capacity(total);
        for i in 0..4 {
            for j in 0..4 {
                for c in 0..pd {
                    let mut row = vec![Cyclo::zero(); total];
                    for ip in 0..4 {
                        let lv = rho.get(i, ip);
                        if lv.is_zero() {
                            continue;
                        }
                        for jp in 0..4 {
                            let rv = rho_inv.get(jp, j);
                            if rv.is_zero() {
                                continue;
                            }
                            let f = lv * rv;
                            let off = self.entry_offset(ip, jp);
                            for cp in 0..pd {
                                let o = op.get(c, cp);
                                if !o.is_zero() {
                                    row[off + cp] = &row[off + cp] + &(&f * o);
                                }
                            }
                        }
                    }
                    let diag = self.entry_offset(i, j) + c;
                    row[diag] = &row[diag] - &Cyclo::one();
                    rows.push(row);
                }
            }
        }
        rows
    }

    /// Adds the rows of “Σ_k op_k(entry e_k) = 0” as pd constraint rows.
    fn condition_rows(
        &self,
        rows: &mut Vec<Vec<Cyclo>>,
        terms: &[(usize, usize, Mat)],
    ) {
        let pd = self.pdim();
        let total = self.total_dim();
        for c in 0..pd {
            let mut row = vec![Cyclo::zero(); total];
            for (i, j, op) in terms {
                let off = self.entry_offset(*i, *j);
                for cp in 0..pd {
                    let v = op.get(c, cp);
                    if !v.is_zero() {
                        row[off + cp] = &row[off + cp] + v;
                    }
                }
            }
            rows.push(row);
        }
    }

    /// The structural conditions of the characterization, as constraint rows.
    fn structural_rows(&self) -> Vec<Vec<Cyclo>> {
        let pd = self.pdim();
        let id = Mat::identity(pd);
        let neg_id = id.scale(&Cyclo::from_integer(-1));
        let w = Cyclo::zeta(3);
        let w2 = &w * &w;
        let s1 = &self.op_s1;
        let s2 = &self.op_s2;
        let s1_minus = |c: &Cyclo| s1.add(&s2.scale(&-c)); // s1 − c·s2
        let mut rows = Vec::new();
        let inv_conditions = |rows: &mut Vec<Vec<Cyclo>>, shape: &Shape, i: usize, j: usize| {
            shape.condition_rows(rows, &[(i, j, s1.add(&neg_id))]);
            shape.condition_rows(rows, &[(i, j, s2.add(&neg_id))]);
        };
        let anti_conditions = |rows: &mut Vec<Vec<Cyclo>>, shape: &Shape, i: usize, j: usize| {
            shape.condition_rows(rows, &[(i, j, s1.add(&id))]);
            shape.condition_rows(rows, &[(i, j, s2.add(&id))]);
        };
        // corners
        inv_conditions(&mut rows, self, 0, 0);
        inv_conditions(&mut rows, self, 3, 3);
        anti_conditions(&mut rows, self, 0, 3);
        anti_conditions(&mut rows, self, 3, 0);
        // middle block: m11 + m22 invariant, m11 − m22 anti-invariant
        self.condition_rows(&mut rows, &[(1, 1, s1.add(&neg_id)), (2, 2, s1.add(&neg_id))]);
        self.condition_rows(&mut rows, &[(1, 1, s2.add(&neg_id)), (2, 2, s2.add(&neg_id))]);
        self.condition_rows(&mut rows, &[(1, 1, s1.add(&id)), (2, 2, s1.add(&id).scale(&Cyclo::from_integer(-1)))]);
        self.condition_rows(&mut rows, &[(1, 1, s2.add(&id)), (2, 2, s2.add(&id).scale(&Cyclo::from_integer(-1)))]);
        // c = m12 with partner m21 = s1(c), and (s1 − ω s2)c = 0
        self.condition_rows(&mut rows, &[(2, 1, id.clone()), (1, 2, s1.scale(&Cyclo::from_integer(-1)))]);
        self.condition_rows(&mut rows, &[(1, 2, s1_minus(&w))]);
        // first column pair (a10, a20): a20 = s1 a10, (s1 − ω² s2)a10 = 0
        self.condition_rows(&mut rows, &[(2, 0, id.clone()), (1, 0, s1.scale(&Cyclo::from_integer(-1)))]);
        self.condition_rows(&mut rows, &[(1, 0, s1_minus(&w2))]);
        // last column pair: a23 = −s1 a13, (s1 − ω² s2)a13 = 0
        self.condition_rows(&mut rows, &[(2, 3, id.clone()), (1, 3, s1.clone())]);
        self.condition_rows(&mut rows, &[(1, 3, s1_minus(&w2))]);
        // first row pair: a02 = s1 a01, (s1 − ω s2)a01 = 0
        self.condition_rows(&mut rows, &[(0, 2, id.clone()), (0, 1, s1.scale(&Cyclo::from_integer(-1)))]);
        self.condition_rows(&mut rows, &[(0, 1, s1_minus(&w))]);
        // last row pair: a32 = −s1 a31, (s1 − ω s2)a31 = 0
        self.condition_rows(&mut rows, &[(3, 2, id), (3, 1, s1.clone())]);
        self.condition_rows(&mut rows, &[(3, 1, s1_minus(&w))]);
        rows
    }

    fn flatten(&self, m: &[Vec<Vec<Cyclo>>]) -> Vec<Cyclo> {
        let mut v = Vec::with_capacity(self.total_dim());
        for row in m {
            for entry in row {
                v.extend(entry.iter().cloned());
            }
        }
        v
    }

    fn is_in_nullspace(&self, rows: Vec<Vec<Cyclo>>, v: &[Cyclo]) -> bool {
        let mat = Mat::from_rows(rows);
        mat.mul_vec(v).iter().all(|x| x.is_zero())
    }
}

/// Whether a 4×4 matrix of truncated polynomials is invariant under the
/// S_3-action (checked on both generators).
pub fn is_direct_invariant(m: &[Vec<Vec<Cyclo>>], max_degree: usize) -> bool {
    let shape = Shape::new(max_degree);
    let v = shape.flatten(m);
    shape.is_in_nullspace(shape.invariance_rows(&shape.rho1, &shape.op_s1), &v)
        && shape.is_in_nullspace(shape.invariance_rows(&shape.rho2, &shape.op_s2), &v)
}

/// Whether the matrix satisfies the structural characterization.
pub fn satisfies_structural_conditions(m: &[Vec<Vec<Cyclo>>], max_degree: usize) -> bool {
    let shape = Shape::new(max_degree);
    let v = shape.flatten(m);
    shape.is_in_nullspace(shape.structural_rows(), &v)
}

/// Verifies that the structural characterization and direct invariance cut
/// out the same subspace of 4×4 matrices over polynomials of degree
/// ≤ max_degree; returns the common dimension.
pub fn verify_invariant_shape_s3(max_degree: usize) -> Result<usize, (usize, usize)> {
    let shape = Shape::new(max_degree);
    let mut inv_rows = shape.invariance_rows(&shape.rho1, &shape.op_s1);
    inv_rows.extend(shape.invariance_rows(&shape.rho2, &shape.op_s2));
    let direct = echelon_basis(nullspace(&Mat::from_rows(inv_rows)));
    let structural = echelon_basis(nullspace(&Mat::from_rows(shape.structural_rows())));
    if direct == structural {
        Ok(direct.len())
    } else {
        Err((direct.len(), structural.len()))
    }
}
