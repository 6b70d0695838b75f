//! Explicit irreducible matrix models: Young's seminormal form for S_n
//! (exact rational entries, basis indexed by standard tableaux) and its
//! wreath-product extension for G(r,1,n) on r-tuples of standard tableaux.
//! For G(r,p,n) with p > 1, restricted models are split along the
//! eigenspaces of the component-shift intertwiner.

use crate::cyclotomic::{Cyclo, Rational};
use crate::linalg::{nullspace, solve, Mat};
use crate::partitions::{MultiPartition, Partition};

/// A standard multitableau: for each label 1..n (index k−1) the cell
/// (component, row, col), all 0-based.
type Fill = Vec<(usize, usize, usize)>;

/// All standard fillings of the multipartition, in a fixed recursive order
/// (labels placed in increasing order; candidate cells scanned by component,
/// then row).
fn standard_multitableaux(shape: &MultiPartition) -> Vec<Fill> {
    let n = shape.size() as usize;
    let comps: Vec<&[u32]> = shape.components().iter().map(|p| p.parts()).collect();
    let mut row_len: Vec<Vec<usize>> = comps.iter().map(|p| vec![0; p.len()]).collect();
    let mut current: Fill = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn rec(
        comps: &[&[u32]],
        row_len: &mut Vec<Vec<usize>>,
        current: &mut Fill,
        n: usize,
        out: &mut Vec<Fill>,
    ) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for c in 0..comps.len() {
            for i in 0..comps[c].len() {
                let legal = row_len[c][i] < comps[c][i] as usize
                    && (i == 0 || row_len[c][i] < row_len[c][i - 1]);
                if legal {
                    current.push((c, i, row_len[c][i]));
                    row_len[c][i] += 1;
                    rec(comps, row_len, current, n, out);
                    row_len[c][i] -= 1;
                    current.pop();
                }
            }
        }
    }
    rec(&comps, &mut row_len, &mut current, n, &mut out);
    out
}

fn rational(n: i64, d: i64) -> Cyclo {
    Cyclo::from_rational(Rational::new(n.into(), d.into()))
}

/// Matrix of the adjacent transposition s_k = (k−1 k), k ≥ 2, in the
/// seminormal basis. Cells in the same component follow Young's rule with
/// axial distance d: the tableau with d < 0 sends weight 1 to its partner,
/// the one with d > 0 sends 1 − 1/d². Cells in different components swap
/// plainly.
fn transposition_matrix(fills: &[Fill], k: usize) -> Mat {
    let dim = fills.len();
    let mut m = Mat::zeros(dim, dim);
    for (ti, f) in fills.iter().enumerate() {
        let a = f[k - 2]; // label k−1
        let b = f[k - 1]; // label k
        if a.0 == b.0 {
            if a.1 == b.1 {
                m.set(ti, ti, Cyclo::one());
                continue;
            }
            if a.2 == b.2 {
                m.set(ti, ti, Cyclo::from_integer(-1));
                continue;
            }
            let d = (b.2 as i64 - b.1 as i64) - (a.2 as i64 - a.1 as i64);
            let mut swapped = f.clone();
            swapped.swap(k - 2, k - 1);
            let tj = fills.iter().position(|g| *g == swapped).expect("standard partner");
            m.set(ti, ti, rational(1, d));
            let c = if d < 0 { Cyclo::one() } else { rational(d * d - 1, d * d) };
            m.set(tj, ti, c);
        } else {
            let mut swapped = f.clone();
            swapped.swap(k - 2, k - 1);
            let tj = fills.iter().position(|g| *g == swapped).expect("cross-component partner");
            m.set(tj, ti, Cyclo::one());
        }
    }
    m
}

/// Seminormal matrices for the S_n-irreducible of the given shape, one per
/// generator s_2, …, s_n.
pub fn sn_seminormal(shape: &Partition) -> Vec<Mat> {
    let mp = MultiPartition::new(vec![shape.clone()]);
    let fills = standard_multitableaux(&mp);
    let n = shape.size() as usize;
    (2..=n).map(|k| transposition_matrix(&fills, k)).collect()
}

/// Ariki–Koike matrices for the G(r,1,n)-irreducible V_λ, one per generator
/// s_1 (diagonal, label 1's component picks the power of ζ_r), s_2, …, s_n.
pub fn gr1n_seminormal(shape: &MultiPartition) -> Vec<Mat> {
    let fills = standard_multitableaux(shape);
    let dim = fills.len();
    let r = shape.r() as u32;
    let n = shape.size() as usize;
    let mut gens = Vec::with_capacity(n);
    let mut s1 = Mat::zeros(dim, dim);
    for (ti, f) in fills.iter().enumerate() {
        s1.set(ti, ti, Cyclo::root_of_unity(r, f[0].0 as i64));
    }
    gens.push(s1);
    for k in 2..=n {
        gens.push(transposition_matrix(&fills, k));
    }
    gens
}

/// The permutation matrix realizing v_T ↦ v_{T shifted by s components};
/// it intertwines ρ_λ ⊗ δ_s with ρ_λ when λ is s-shift-symmetric, and its
/// order divides r/s … in the symmetric case it has order u.
pub fn shift_intertwiner(shape: &MultiPartition, s: usize) -> Mat {
    let fills = standard_multitableaux(shape);
    let r = shape.r();
    let dim = fills.len();
    let mut m = Mat::zeros(dim, dim);
    for (ti, f) in fills.iter().enumerate() {
        let shifted: Fill = f.iter().map(|&(c, i, j)| ((c + s) % r, i, j)).collect();
        let tj = fills
            .iter()
            .position(|g| *g == shifted)
            .expect("shape must be shift-symmetric");
        m.set(tj, ti, Cyclo::one());
    }
    m
}

/// Restriction of a representation to the span of `basis` (columns), which
/// must be invariant: returns the matrices in the sub-basis.
pub fn restrict_to_subspace(images: &[Mat], basis: &[Vec<Cyclo>]) -> Vec<Mat> {
    let dim = basis.len();
    let ambient = basis[0].len();
    let mut bmat = Mat::zeros(ambient, dim);
    for (j, v) in basis.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            bmat.set(i, j, x.clone());
        }
    }
    images
        .iter()
        .map(|g| {
            let gb = g.matmul(&bmat);
            let mut out = Mat::zeros(dim, dim);
            for col in 0..dim {
                let rhs: Vec<Cyclo> = (0..ambient).map(|i| gb.get(i, col).clone()).collect();
                let coords = solve(&bmat, &rhs).expect("subspace must be invariant");
                for (i, x) in coords.into_iter().enumerate() {
                    out.set(i, col, x);
                }
            }
            out
        })
        .collect()
}

/// Eigenspace basis of `m` for eigenvalue `ev`, echelonized.
pub fn eigenspace(m: &Mat, ev: &Cyclo) -> Vec<Vec<Cyclo>> {
    let dim = m.nrows();
    let mut shifted = m.clone();
    for i in 0..dim {
        shifted.set(i, i, &*shifted.get(i, i) - ev);
    }
    nullspace(&shifted)
}
