//! Dense exact linear algebra over cyclotomic fields: reduced row echelon
//! form, nullspaces, solving, inversion. Small matrices only; everything is
//! exact rational/cyclotomic arithmetic with first-nonzero pivoting.

use crate::cyclotomic::Cyclo;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Cyclo>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Cyclo::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cyclo::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo>>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        let data = rows.into_iter().flatten().collect();
        Mat { rows: 0, cols, data }.fix_rows()
    }

    fn fix_rows(mut self) -> Self {
        self.rows = self.data.len() / self.cols;
        self
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclo {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclo) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Cyclo] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        out.set(i, j, &*out.get(i, j) + &t);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cyclo]) -> Vec<Cyclo> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = &acc + &(self.get(i, j) * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclo {
        assert_eq!(self.rows, self.cols);
        let mut acc = Cyclo::zero();
        for i in 0..self.rows {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    pub fn scale(&self, c: &Cyclo) -> Mat {
        let data = self.data.iter().map(|v| v * c).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug: Vec<Vec<Cyclo>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Cyclo::one()
                    } else {
                        Cyclo::zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug);
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let rows: Vec<Vec<Cyclo>> = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Mat::from_rows(rows))
    }
}

/// In-place reduction of `rows` to reduced row echelon form; returns the
/// pivot column of each nonzero row, in order.
pub fn rref_in_place(rows: &mut Vec<Vec<Cyclo>>) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        if row >= rows.len() {
            break;
        }
        let Some(pr) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pr);
        let inv = rows[row][col].inverse().unwrap();
        for c in col..ncols {
            if !rows[row][c].is_zero() {
                rows[row][c] = &rows[row][c] * &inv;
            }
        }
        for i in 0..rows.len() {
            if i != row && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..ncols {
                    if !rows[row][c].is_zero() {
                        let t = &f * &rows[row][c];
                        rows[i][c] = &rows[i][c] - &t;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    rows.truncate(pivots.len());
    pivots
}

/// Canonical reduced echelon basis of the span of the given vectors.
pub fn echelon_basis(vectors: Vec<Vec<Cyclo>>) -> Vec<Vec<Cyclo>> {
    let mut rows = vectors;
    rows.retain(|v| v.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return rows;
    }
    rref_in_place(&mut rows);
    rows
}

pub fn span_dim(vectors: Vec<Vec<Cyclo>>) -> usize {
    echelon_basis(vectors).len()
}

/// Residual of `v` after reduction against an echelonized basis; zero iff v
/// lies in the span.
pub fn reduce_against(basis: &[Vec<Cyclo>], pivots: &[usize], v: &[Cyclo]) -> Vec<Cyclo> {
    let mut out = v.to_vec();
    for (row, &pc) in basis.iter().zip(pivots.iter()) {
        if !out[pc].is_zero() {
            let f = out[pc].clone();
            for (o, b) in out.iter_mut().zip(row.iter()) {
                if !b.is_zero() {
                    let t = &f * b;
                    *o = &*o - &t;
                }
            }
        }
    }
    out
}

/// Whether `v` lies in the span of `vectors`.
pub fn span_contains(vectors: &[Vec<Cyclo>], v: &[Cyclo]) -> bool {
    let mut basis: Vec<Vec<Cyclo>> = vectors.to_vec();
    basis.retain(|x| x.iter().any(|c| !c.is_zero()));
    if basis.is_empty() {
        return v.iter().all(|c| c.is_zero());
    }
    let pivots = rref_in_place(&mut basis);
    reduce_against(&basis, &pivots, v).iter().all(|c| c.is_zero())
}

/// Reduced echelon nullspace basis of A (solutions of A·x = 0): one basis
/// vector per free column, entry 1 at that column, ordered by free column.
pub fn nullspace(a: &Mat) -> Vec<Vec<Cyclo>> {
    let mut rows: Vec<Vec<Cyclo>> = (0..a.nrows()).map(|i| a.row(i).to_vec()).collect();
    rows.retain(|v| v.iter().any(|x| !x.is_zero()));
    let n = a.ncols();
    if rows.is_empty() {
        return (0..n)
            .map(|j| {
                let mut v = vec![Cyclo::zero(); n];
                v[j] = Cyclo::one();
                v
            })
            .collect();
    }
    let pivots = rref_in_place(&mut rows);
    let pivot_set: Vec<usize> = pivots.clone();
    let mut out = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Cyclo::zero(); n];
        v[free] = Cyclo::one();
        for (row, &pc) in rows.iter().zip(pivot_set.iter()) {
            if !row[free].is_zero() {
                v[pc] = -&row[free];
            }
        }
        out.push(v);
    }
    out
}

/// One solution of A·x = b, or None when inconsistent.
pub fn solve(a: &Mat, b: &[Cyclo]) -> Option<Vec<Cyclo>> {
    assert_eq!(a.nrows(), b.len());
    let mut rows: Vec<Vec<Cyclo>> = (0..a.nrows())
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(&mut rows);
    let n = a.ncols();
    if pivots.iter().any(|&c| c == n) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Cyclo::zero(); n];
    for (row, &pc) in rows.iter().zip(pivots.iter()) {
        x[pc] = row[n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Rational;

    fn c(v: i64) -> Cyclo {
        Cyclo::from_integer(v)
    }

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| c(x)).collect()).collect())
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Mat::identity(2));
        let x = solve(&a, &[c(3), c(2)]).unwrap();
        assert_eq!(x, vec![c(1), c(1)]);
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[c(0), c(1)]).is_none());
    }

    #[test]
    fn nullspace_shapes() {
        let a = m(&[&[1, 2, 3], &[0, 0, 1]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        // echelon convention: entry 1 at the free column
        assert_eq!(ns[0][1], Cyclo::one());
        let full = nullspace(&Mat::zeros(2, 3));
        assert_eq!(full.len(), 3);
    }

    #[test]
    fn span_membership() {
        let basis = vec![
            vec![c(1), c(0), c(1)],
            vec![c(0), c(1), c(1)],
        ];
        assert!(span_contains(&basis, &[c(2), c(3), c(5)]));
        assert!(!span_contains(&basis, &[c(0), c(0), c(1)]));
        assert_eq!(span_dim(basis), 2);
    }

    #[test]
    fn cyclotomic_entries() {
        let i = Cyclo::zeta(4);
        let a = Mat::from_rows(vec![vec![i.clone(), c(1)], vec![c(-1), i.clone()]]);
        // det = i·i − (−1) = 0 ⇒ singular
        assert!(a.inverse().is_none());
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
        let half = Cyclo::from_rational(Rational::new(1.into(), 2.into()));
        let b = Mat::from_rows(vec![vec![half, c(0)], vec![c(0), c(1)]]);
        let binv = b.inverse().unwrap();
        assert_eq!(*binv.get(0, 0), c(2));
    }
}
