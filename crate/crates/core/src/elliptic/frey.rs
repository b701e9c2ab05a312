use super::model::EllipticModel;
use crate::error::{Error, Result};
use crate::exactmath::integer::radical;
use rug::{Integer, Rational};

/// The curve `y^2 = x(x + a)(x - b)` attached to `a + b = c`.
pub fn frey_curve(a: &Integer, b: &Integer, c: &Integer) -> Result<EllipticModel> {
    check_triple(a, b, c)?;
    let a2 = Rational::from(Integer::from(a - b));
    let a4 = Rational::from(-Integer::from(a * b));
    EllipticModel::new(Rational::new(), a2, Rational::new(), a4, Rational::new())
}

pub fn check_triple(a: &Integer, b: &Integer, c: &Integer) -> Result<()> {
    if *a == 0 || *b == 0 || *c == 0 {
        return Err(Error::Domain(format!("({a}, {b}, {c}) has a zero entry")));
    }
    if Integer::from(a + b) != *c {
        return Err(Error::Domain(format!("{a} + {b} != {c}")));
    }
    if Integer::from(a.gcd_ref(b)) != 1 {
        return Err(Error::Domain(format!("({a}, {b}, {c}) is not coprime")));
    }
    Ok(())
}

/// `S_Q(a, b, c) = rad(abc)`.
pub fn support_radical(a: &Integer, b: &Integer, c: &Integer) -> Result<Integer> {
    radical(&(Integer::from(a * b) * c))
}
