//! Small dense matrices: complex multiprecision and integer.

use crate::error::{Error, Result};
use crate::mp::Complex;
use rug::Float;

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    pub n: usize,
    pub data: Vec<Complex>,
}

impl CMatrix {
    pub fn zero(n: usize, prec: u32) -> Self {
        CMatrix {
            n,
            data: vec![Complex::zero(prec); n * n],
        }
    }

    pub fn identity(n: usize, prec: u32) -> Self {
        let mut m = Self::zero(n, prec);
        for i in 0..n {
            m.data[i * n + i] = Complex::one(prec);
        }
        m
    }

    pub fn from_int(m: &IMatrix, prec: u32) -> Self {
        CMatrix {
            n: m.n,
            data: m
                .data
                .iter()
                .map(|&x| Complex::real(Float::with_val(prec, x)))
                .collect(),
        }
    }

    pub fn prec(&self) -> u32 {
        self.data.iter().map(|c| c.prec()).max().unwrap_or(53)
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.data[j * n + i].clone();
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n, self.prec().max(o.prec()));
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex::zero(out.prec());
                for k in 0..n {
                    s = &s + &(self.get(i, k) * o.get(k, j));
                }
                out.data[i * n + j] = s;
            }
        }
        out
    }

    pub fn mul_int_left(m: &IMatrix, x: &Self) -> Self {
        Self::from_int(m, x.prec()).mul(x)
    }

    /// `(M + M^T) / 2`.
    pub fn symmetrize(&self) -> Self {
        let n = self.n;
        let half = Float::with_val(self.prec(), 0.5);
        let mut out = self.clone();
        for i in 0..n {
            for j in i + 1..n {
                let v = (self.get(i, j) + self.get(j, i)).scale(&half);
                out.data[i * n + j] = v.clone();
                out.data[j * n + i] = v;
            }
        }
        out
    }

    pub fn re(&self) -> Vec<Float> {
        self.data.iter().map(|c| c.re.clone()).collect()
    }

    pub fn im(&self) -> Vec<Float> {
        self.data.iter().map(|c| c.im.clone()).collect()
    }

    /// Gaussian elimination with partial pivoting; `(det, inverse)`.
    pub fn det_inverse(&self) -> Result<(Complex, Self)> {
        let n = self.n;
        let prec = self.prec();
        let mut a = self.clone();
        let mut inv = Self::identity(n, prec);
        let mut det = Complex::one(prec);
        for c in 0..n {
            let p = (c..n)
                .max_by(|&x, &y| {
                    a.get(x, c)
                        .norm_sqr()
                        .partial_cmp(&a.get(y, c).norm_sqr())
                        .unwrap()
                })
                .unwrap();
            if a.get(p, c).is_zero() {
                return Err(Error::Singular("matrix is singular".into()));
            }
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det = &det * &piv;
            let r = piv.recip();
            for j in 0..n {
                a.data[c * n + j] = &a.data[c * n + j] * &r;
                inv.data[c * n + j] = &inv.data[c * n + j] * &r;
            }
            for i in 0..n {
                if i == c {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &f * a.get(c, j);
                    a.data[i * n + j] = &a.data[i * n + j] - &t;
                    let t = &f * inv.get(c, j);
                    inv.data[i * n + j] = &inv.data[i * n + j] - &t;
                }
            }
        }
        Ok((det, inv))
    }

    pub fn det(&self) -> Result<Complex> {
        Ok(self.det_inverse()?.0)
    }

    /// Largest entrywise distance.
    pub fn max_dist(&self, o: &Self) -> f64 {
        self.data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| (a - b).abs().to_f64())
            .fold(0.0, f64::max)
    }
}

/// Real symmetric matrix helpers on row-major `Float` data.
pub mod real {
    use super::*;

    /// Cholesky factor `L` with `A = L L^T`, or `None` if not positive definite.
    pub fn cholesky(a: &[Float], n: usize) -> Option<Vec<Float>> {
        let prec = a[0].prec();
        let mut l = vec![Float::new(prec); n * n];
        for i in 0..n {
            for j in 0..=i {
                let mut s = a[i * n + j].clone();
                for k in 0..j {
                    s -= Float::with_val(prec, &l[i * n + k] * &l[j * n + k]);
                }
                if i == j {
                    if s <= 0 {
                        return None;
                    }
                    l[i * n + i] = s.sqrt();
                } else {
                    l[i * n + j] = s / &l[j * n + j];
                }
            }
        }
        Some(l)
    }

    pub fn det_spd(a: &[Float], n: usize) -> Option<Float> {
        let l = cholesky(a, n)?;
        let prec = a[0].prec();
        let mut d = Float::with_val(prec, 1);
        for i in 0..n {
            d *= &l[i * n + i];
        }
        Some(d.square())
    }

    /// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations in f64.
    pub fn sym_eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
        let mut m = a.to_vec();
        for _ in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| m[i * n + j] * m[i * n + j])
                .sum();
            if off < 1e-30 * (1.0 + m.iter().map(|x| x * x).sum::<f64>()) {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = m[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = m[k * n + p];
                        let akq = m[k * n + q];
                        m[k * n + p] = c * akp - s * akq;
                        m[k * n + q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = m[p * n + k];
                        let aqk = m[q * n + k];
                        m[p * n + k] = c * apk - s * aqk;
                        m[q * n + k] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut ev: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ev
    }
}

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IMatrix {
    pub n: usize,
    pub data: Vec<i64>,
}

impl IMatrix {
    pub fn zero(n: usize) -> Self {
        IMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IMatrix {
            n,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.data[j * n + i];
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        IMatrix {
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        IMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = (0..n).map(|k| self.get(i, k) * o.get(k, j)).sum();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn diag(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|k| self.get(i, k) * v[k]).sum())
            .collect()
    }
}
