use super::matrix::{real, CMatrix};
use crate::error::{Error, Result};
use crate::mp::Complex;
use rug::Float;
use std::fmt;

/// A point of the Siegel upper half space: symmetric `tau` with positive
/// definite imaginary part.
#[derive(Clone, PartialEq)]
pub struct SiegelPoint {
    tau: CMatrix,
}

impl SiegelPoint {
    /// Checks exact symmetry and positive definiteness of `Im tau`.
    pub fn new(tau: CMatrix) -> Result<Self> {
        let n = tau.n;
        if n == 0 {
            return Err(Error::Domain("genus must be at least 1".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if tau.get(i, j) != tau.get(j, i) {
                    return Err(Error::Domain(format!("tau is not symmetric at ({i}, {j})")));
                }
            }
        }
        if real::cholesky(&tau.im(), n).is_none() {
            return Err(Error::Domain("Im tau is not positive definite".into()));
        }
        Ok(SiegelPoint { tau })
    }

    /// Symmetrises first; for results of floating-point computations.
    pub fn new_symmetrized(tau: CMatrix) -> Result<Self> {
        Self::new(tau.symmetrize())
    }

    /// Row-major `(re, im)` pairs.
    pub fn from_f64(g: usize, entries: &[(f64, f64)], prec: u32) -> Result<Self> {
        if entries.len() != g * g {
            return Err(Error::Domain(format!("expected {} entries, got {}", g * g, entries.len())));
        }
        let data = entries
            .iter()
            .map(|&(re, im)| Complex::from_f64(prec, re, im))
            .collect();
        Self::new(CMatrix { n: g, data })
    }

    /// `i` times the identity.
    pub fn i_identity(g: usize, prec: u32) -> Self {
        let mut m = CMatrix::zero(g, prec);
        for k in 0..g {
            m.set(k, k, Complex::i(prec));
        }
        SiegelPoint { tau: m }
    }

    pub fn genus(&self) -> usize {
        self.tau.n
    }

    pub fn prec(&self) -> u32 {
        self.tau.prec()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.tau
    }

    pub fn entry(&self, i: usize, j: usize) -> &Complex {
        self.tau.get(i, j)
    }

    pub fn im(&self) -> Vec<Float> {
        self.tau.im()
    }

    pub fn det_im(&self) -> Float {
        real::det_spd(&self.tau.im(), self.genus()).expect("validated positive definite")
    }

    pub fn log_det_im(&self) -> f64 {
        self.det_im().ln().to_f64()
    }

    /// Smallest eigenvalue of `Im tau`.
    pub fn lambda_min(&self) -> f64 {
        let y: Vec<f64> = self.im().iter().map(|x| x.to_f64()).collect();
        real::sym_eigenvalues(&y, self.genus())[0]
    }

    pub fn to_f64_pairs(&self) -> Vec<(f64, f64)> {
        self.tau
            .data
            .iter()
            .map(|c| (c.re.to_f64(), c.im.to_f64()))
            .collect()
    }
}

impl fmt::Debug for SiegelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SiegelPoint{:?}", self.to_f64_pairs())
    }
}
