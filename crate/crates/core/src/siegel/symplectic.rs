use super::matrix::{CMatrix, IMatrix};
use super::point::SiegelPoint;
use super::theta::ThetaCharacteristic;
use crate::elliptic::periods::Sl2;
use crate::error::{Error, Result};
use std::fmt;

/// `(alpha, beta; gamma, delta)` in `Sp_2g(Z)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    pub alpha: IMatrix,
    pub beta: IMatrix,
    pub gamma: IMatrix,
    pub delta: IMatrix,
}

impl SymplecticMatrix {
    /// Verifies `M^T J M = J` exactly.
    pub fn new(alpha: IMatrix, beta: IMatrix, gamma: IMatrix, delta: IMatrix) -> Result<Self> {
        let g = alpha.n;
        if [&beta, &gamma, &delta].iter().any(|m| m.n != g) {
            return Err(Error::Domain("blocks must share one size".into()));
        }
        let m = SymplecticMatrix {
            alpha,
            beta,
            gamma,
            delta,
        };
        if !m.is_symplectic() {
            return Err(Error::Domain(format!("{m:?} is not symplectic")));
        }
        Ok(m)
    }

    fn unchecked(alpha: IMatrix, beta: IMatrix, gamma: IMatrix, delta: IMatrix) -> Self {
        SymplecticMatrix {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    pub fn genus(&self) -> usize {
        self.alpha.n
    }

    pub fn is_symplectic(&self) -> bool {
        let (a, b, c, d) = (&self.alpha, &self.beta, &self.gamma, &self.delta);
        a.transpose().mul(c).is_symmetric()
            && b.transpose().mul(d).is_symmetric()
            && a.transpose().mul(d).sub(&c.transpose().mul(b)) == IMatrix::identity(a.n)
    }

    pub fn identity(g: usize) -> Self {
        Self::unchecked(IMatrix::identity(g), IMatrix::zero(g), IMatrix::zero(g), IMatrix::identity(g))
    }

    /// `tau -> -tau^{-1}`.
    pub fn inversion(g: usize) -> Self {
        Self::unchecked(
            IMatrix::zero(g),
            IMatrix::identity(g).neg(),
            IMatrix::identity(g),
            IMatrix::zero(g),
        )
    }

    /// `tau -> tau + b` for symmetric integral `b`.
    pub fn translation(b: IMatrix) -> Result<Self> {
        if !b.is_symmetric() {
            return Err(Error::Domain("translation must be symmetric".into()));
        }
        let g = b.n;
        Ok(Self::unchecked(IMatrix::identity(g), b, IMatrix::zero(g), IMatrix::identity(g)))
    }

    /// `tau -> u tau u^T` for `u` in `GL_g(Z)` with integral inverse `u_inv`.
    pub fn rotation(u: IMatrix, u_inv: IMatrix) -> Result<Self> {
        let g = u.n;
        if u.mul(&u_inv) != IMatrix::identity(g) {
            return Err(Error::Domain("u_inv is not the inverse of u".into()));
        }
        Ok(Self::unchecked(u, IMatrix::zero(g), IMatrix::zero(g), u_inv.transpose()))
    }

    pub fn from_sl2(m: &Sl2) -> Self {
        let [[a, b], [c, d]] = m.0;
        let one = |x: i64| IMatrix::from_rows(&[&[x]]);
        Self::unchecked(one(a), one(b), one(c), one(d))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (&self.alpha, &self.beta, &self.gamma, &self.delta);
        let (e, f, g, h) = (&o.alpha, &o.beta, &o.gamma, &o.delta);
        Self::unchecked(
            a.mul(e).add(&b.mul(g)),
            a.mul(f).add(&b.mul(h)),
            c.mul(e).add(&d.mul(g)),
            c.mul(f).add(&d.mul(h)),
        )
    }

    /// `(delta^T, -beta^T; -gamma^T, alpha^T)`.
    pub fn inverse(&self) -> Self {
        Self::unchecked(
            self.delta.transpose(),
            self.beta.transpose().neg(),
            self.gamma.transpose().neg(),
            self.alpha.transpose(),
        )
    }

    /// `gamma tau + delta`.
    pub fn cocycle(&self, tau: &SiegelPoint) -> CMatrix {
        let prec = tau.prec();
        CMatrix::mul_int_left(&self.gamma, tau.matrix()).add(&CMatrix::from_int(&self.delta, prec))
    }

    /// `(alpha tau + beta)(gamma tau + delta)^{-1}`.
    pub fn act(&self, tau: &SiegelPoint) -> Result<SiegelPoint> {
        let prec = tau.prec();
        let num = CMatrix::mul_int_left(&self.alpha, tau.matrix())
            .add(&CMatrix::from_int(&self.beta, prec));
        let (_, inv) = self.cocycle(tau).det_inverse()?;
        SiegelPoint::new_symmetrized(num.mul(&inv))
    }

    /// Action on characteristics in doubled coordinates, before reduction:
    /// `2 sigma u = (delta, -gamma; -beta, alpha) 2u + (diag(gamma delta^T); diag(alpha beta^T))`.
    pub fn act_char_doubled(&self, a2: &[i64], b2: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let da = self.delta.mul_vec(a2);
        let cb = self.gamma.mul_vec(b2);
        let ba = self.beta.mul_vec(a2);
        let ab = self.alpha.mul_vec(b2);
        let d1 = self.gamma.mul(&self.delta.transpose()).diag();
        let d2 = self.alpha.mul(&self.beta.transpose()).diag();
        let g = self.genus();
        let top = (0..g).map(|i| da[i] - cb[i] + d1[i]).collect();
        let bottom = (0..g).map(|i| -ba[i] + ab[i] + d2[i]).collect();
        (top, bottom)
    }

    /// Action on characteristics, reduced mod 1.
    pub fn act_char(&self, u: &ThetaCharacteristic) -> ThetaCharacteristic {
        let (a, b) = self.act_char_doubled(&u.a2_i64(), &u.b2_i64());
        ThetaCharacteristic::from_doubled(&a, &b)
    }
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Sp(a={:?}, b={:?}, c={:?}, d={:?})",
            self.alpha.data, self.beta.data, self.gamma.data, self.delta.data
        )
    }
}
