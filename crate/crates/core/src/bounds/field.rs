use crate::error::{Error, Result};
use crate::exactmath::integer::ln_integer;
use rug::Integer;

/// Degree, absolute discriminant and class number of the base field, all
/// supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    pub d: u32,
    pub dk: Integer,
    pub hk: Integer,
}

impl FieldContext {
    /// Rejects inputs violating `h_K <= 5 (4d)^d D_K^{3/2}`.
    pub fn new(d: u32, dk: Integer, hk: Integer) -> Result<Self> {
        if d == 0 || dk < 1 || hk < 1 {
            return Err(Error::Domain(format!("need d, D_K, h_K >= 1, got ({d}, {dk}, {hk})")));
        }
        if d == 1 && (dk != 1 || hk != 1) {
            return Err(Error::Domain("Q has D_K = h_K = 1".into()));
        }
        let ctx = FieldContext { d, dk, hk };
        let rhs = 5f64.ln() + d as f64 * (4.0 * d as f64).ln() + 1.5 * ctx.log_dk();
        if ctx.log_hk() > rhs + 1e-12 {
            return Err(Error::Domain(format!(
                "h_K = {} exceeds 5 (4d)^d D_K^(3/2)",
                ctx.hk
            )));
        }
        Ok(ctx)
    }

    pub fn rationals() -> Self {
        FieldContext {
            d: 1,
            dk: Integer::from(1),
            hk: Integer::from(1),
        }
    }

    /// Parse `d,DK,hK`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Domain(format!("field spec `{s}` is not d,DK,hK")));
        }
        let d = parts[0]
            .parse::<u32>()
            .map_err(|e| Error::Domain(format!("degree `{}`: {e}", parts[0])))?;
        let int = |x: &str| {
            x.parse::<Integer>()
                .map_err(|e| Error::Domain(format!("integer `{x}`: {e}")))
        };
        Self::new(d, int(parts[1])?, int(parts[2])?)
    }

    pub fn df(&self) -> f64 {
        self.d as f64
    }

    pub fn log_dk(&self) -> f64 {
        ln_integer(&self.dk)
    }

    pub fn log_hk(&self) -> f64 {
        ln_integer(&self.hk)
    }
}
