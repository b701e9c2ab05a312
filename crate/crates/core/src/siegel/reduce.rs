use super::matrix::{CMatrix, IMatrix};
use super::point::SiegelPoint;
use super::symplectic::SymplecticMatrix;
use crate::elliptic::periods::reduce_sl2;
use crate::error::{Error, Result};
use crate::mp::Complex;
use rug::Float;

pub const MAX_REDUCTION_STEPS: usize = 10_000;
/// Slack in the `|det(gamma tau + delta)| >= 1` test.
pub const GOTTSCHLING_SLACK: f64 = 1e-12;

/// Gottschling-type boundary matrices for genus two: `gamma = I` with every
/// symmetric `delta` having entries in `{-1, 0, 1}`, and the four embedded
/// genus-one inversions. This contains Gottschling's 19.
pub fn gottschling_matrices() -> Vec<SymplecticMatrix> {
    let mut out = Vec::new();
    for d11 in -1..=1 {
        for d12 in -1..=1 {
            for d22 in -1..=1 {
                let s = IMatrix::from_rows(&[&[d11, d12], &[d12, d22]]);
                out.push(
                    SymplecticMatrix::new(
                        IMatrix::zero(2),
                        IMatrix::identity(2).neg(),
                        IMatrix::identity(2),
                        s,
                    )
                    .expect("symplectic"),
                );
            }
        }
    }
    for d in -1..=1 {
        let d_ = |x: i64, y: i64| IMatrix::from_rows(&[&[x, 0], &[0, y]]);
        out.push(
            SymplecticMatrix::new(d_(0, 1), d_(-1, 0), d_(1, 0), d_(d, 1)).expect("symplectic"),
        );
        out.push(
            SymplecticMatrix::new(d_(1, 0), d_(0, -1), d_(0, 1), d_(1, d)).expect("symplectic"),
        );
    }
    out
}

/// Move `tau` into the Siegel fundamental domain for `g <= 2`. Returns the
/// reduced point and `sigma` with `sigma tau = reduced`.
pub fn reduce_to_fundamental(tau: &SiegelPoint) -> Result<(SiegelPoint, SymplecticMatrix)> {
    match tau.genus() {
        1 => {
            let (t, m) = reduce_sl2(tau.entry(0, 0))?;
            let mut c = CMatrix::zero(1, tau.prec());
            c.set(0, 0, t);
            Ok((SiegelPoint::new(c)?, SymplecticMatrix::from_sl2(&m)))
        }
        2 => reduce_genus2(tau),
        g => Err(Error::Unsupported(format!("reduction in genus {g}"))),
    }
}

fn reduce_genus2(tau: &SiegelPoint) -> Result<(SiegelPoint, SymplecticMatrix)> {
    let boundary = gottschling_matrices();
    let mut t = tau.clone();
    let mut sigma = SymplecticMatrix::identity(2);
    for _ in 0..MAX_REDUCTION_STEPS {
        let (u, u_inv) = minkowski_2(&t.im());
        if u != IMatrix::identity(2) {
            let r = SymplecticMatrix::rotation(u, u_inv)?;
            t = r.act(&t)?;
            sigma = r.mul(&sigma);
        }
        let b = round_real(&t);
        if b != IMatrix::zero(2) {
            let tr = SymplecticMatrix::translation(b.neg())?;
            t = translate(&t, &b)?;
            sigma = tr.mul(&sigma);
        }
        let mut best: Option<(f64, &SymplecticMatrix)> = None;
        for m in &boundary {
            let d = m.cocycle(&t).det()?.abs().to_f64();
            if best.map_or(true, |(b, _)| d < b) {
                best = Some((d, m));
            }
        }
        match best {
            Some((d, m)) if d < 1.0 - GOTTSCHLING_SLACK => {
                t = m.act(&t)?;
                sigma = m.mul(&sigma);
            }
            _ => return Ok((t, sigma)),
        }
    }
    Err(Error::Reduction(MAX_REDUCTION_STEPS))
}

/// `tau - b` computed entrywise, exact in the real part.
fn translate(t: &SiegelPoint, b: &IMatrix) -> Result<SiegelPoint> {
    let prec = t.prec();
    let mut m = t.matrix().clone();
    for (c, &x) in m.data.iter_mut().zip(&b.data) {
        *c = &*c - &Complex::real(Float::with_val(prec, x));
    }
    SiegelPoint::new(m)
}

fn round_real(t: &SiegelPoint) -> IMatrix {
    let g = t.genus();
    let mut b = IMatrix::zero(g);
    for i in 0..g {
        for j in 0..g {
            b.data[i * g + j] = t.entry(i, j).re.to_f64().round() as i64;
        }
    }
    b
}

/// `U` with `U Y U^T` Minkowski reduced: `0 <= 2 y12 <= y11 <= y22`.
fn minkowski_2(y: &[Float]) -> (IMatrix, IMatrix) {
    let (mut a, mut b, mut c) = (y[0].to_f64(), y[1].to_f64(), y[3].to_f64());
    let mut u = IMatrix::identity(2);
    let mut u_inv = IMatrix::identity(2);
    for _ in 0..MAX_REDUCTION_STEPS {
        let k = (b / a).round();
        if k != 0.0 && (2.0 * b).abs() > a {
            let k = k as i64;
            // row2 -= k row1
            let e = IMatrix::from_rows(&[&[1, 0], &[-k, 1]]);
            let e_inv = IMatrix::from_rows(&[&[1, 0], &[k, 1]]);
            u = e.mul(&u);
            u_inv = u_inv.mul(&e_inv);
            c += k as f64 * k as f64 * a - 2.0 * k as f64 * b;
            b -= k as f64 * a;
        }
        if a > c {
            let e = IMatrix::from_rows(&[&[0, 1], &[1, 0]]);
            u = e.mul(&u);
            u_inv = u_inv.mul(&e);
            std::mem::swap(&mut a, &mut c);
            continue;
        }
        break;
    }
    if b < 0.0 {
        let e = IMatrix::from_rows(&[&[1, 0], &[0, -1]]);
        u = e.mul(&u);
        u_inv = u_inv.mul(&e);
    }
    (u, u_inv)
}

/// Postconditions of the fundamental domain, for reporting.
pub fn is_reduced(t: &SiegelPoint, tol: f64) -> bool {
    let re_ok = t
        .matrix()
        .data
        .iter()
        .all(|c| c.re.to_f64().abs() <= 0.5 + tol);
    match t.genus() {
        1 => re_ok && t.entry(0, 0).norm_sqr().to_f64() >= 1.0 - tol,
        2 => {
            let y: Vec<f64> = t.im().iter().map(|x| x.to_f64()).collect();
            let mink = -tol <= 2.0 * y[1] && 2.0 * y[1] <= y[0] + tol && y[0] <= y[3] + tol;
            let gott = gottschling_matrices().iter().all(|m| {
                m.cocycle(t)
                    .det()
                    .map(|d| d.abs().to_f64() >= 1.0 - 1e-9)
                    .unwrap_or(false)
            });
            re_ok && mink && gott
        }
        _ => false,
    }
}
