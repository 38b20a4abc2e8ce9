//! Dense matrices over a prime field `F_p`.

use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn random(p: u64, rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for x in &mut m.data {
            *x = rng.gen_range(0..p);
        }
        m
    }

    pub fn from_columns(p: u64, rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(p, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = (*x + y) % self.p;
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = (*x * (c % self.p)) % self.p;
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(self.p - 1)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(piv * m.cols + j, r * m.cols + j);
            }
            let inv = inverse(m.get(r, c), p);
            for j in 0..m.cols {
                let v = m.get(r, j) * inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i != r && f != 0 {
                    for j in 0..m.cols {
                        let v = m.get(i, j) + p - (f * m.get(r, j)) % p;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}` as the columns of the result.
    pub fn nullspace(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, self.p - r.get(row, f));
            }
        }
        out
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = Self::zeros(self.p, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.get(i, j));
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.p, self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(row, self.cols + j));
            }
        }
        Some(x)
    }

    /// Rows spanning the annihilator of the column space: `Q` with
    /// `Q * self = 0` and `rank Q = rows - rank self`.
    pub fn cokernel_projection(&self) -> Self {
        self.transpose().nullspace().transpose()
    }
}

fn inverse(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, SeedableRng};

    #[test]
    fn rank_nullspace_solve() {
        let p = 101;
        let a = Matrix::from_columns(p, 3, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let n = a.nullspace();
        assert_eq!(n.cols, 1);
        assert!(a.mul(&n).is_zero());
        let b = a.mul(&Matrix::from_columns(p, 3, &[vec![1, 1, 1]]));
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let q = a.cokernel_projection();
        assert_eq!(q.rows, 1);
        assert!(q.mul(&a).is_zero());
        assert!(a.solve(&Matrix::from_columns(p, 3, &[vec![1, 0, 0]])).is_none());
    }

    #[test]
    fn random_rank_consistency() {
        let mut rng = StdRng::seed_from_u64(7);
        for p in [2, 101] {
            for _ in 0..20 {
                let m = Matrix::random(p, 4, 6, &mut rng);
                assert_eq!(m.rank() + m.nullspace().cols, 6);
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }
}
