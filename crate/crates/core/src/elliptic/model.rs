use crate::error::{Error, Result};
use rug::{Integer, Rational};
use std::fmt;

/// A Weierstrass model `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over Q
/// together with its standard invariants.
#[derive(Clone, PartialEq, Eq)]
pub struct EllipticModel {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
    pub b2: Rational,
    pub b4: Rational,
    pub b6: Rational,
    pub b8: Rational,
    pub c4: Rational,
    pub c6: Rational,
    pub disc: Rational,
    pub j: Rational,
}

impl fmt::Debug for EllipticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

impl EllipticModel {
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational) -> Result<Self> {
        let b2 = Rational::from(&a1 * &a1) + Rational::from(&a2 * 4u32);
        let b4 = Rational::from(&a1 * &a3) + Rational::from(&a4 * 2u32);
        let b6 = Rational::from(&a3 * &a3) + Rational::from(&a6 * 4u32);
        let b8 = Rational::from(&a1 * &a1) * &a6 + Rational::from(&a2 * &a6) * 4u32
            - Rational::from(&a1 * &a3) * &a4
            + Rational::from(&a2 * &a3) * &a3
            - Rational::from(&a4 * &a4);
        let c4 = Rational::from(&b2 * &b2) - Rational::from(&b4 * 24u32);
        let c6 = -Rational::from(&b2 * &b2) * &b2 + Rational::from(&b2 * &b4) * 36u32
            - Rational::from(&b6 * 216u32);
        let disc = -Rational::from(&b2 * &b2) * &b8 - Rational::from(&b4 * &b4) * &b4 * 8u32
            - Rational::from(&b6 * &b6) * 27u32
            + Rational::from(&b2 * &b4) * &b6 * 9u32;
        if disc == 0 {
            return Err(Error::Singular(format!(
                "[{a1}, {a2}, {a3}, {a4}, {a6}] has zero discriminant"
            )));
        }
        let j = Rational::from(&c4 * &c4) * &c4 / &disc;
        Ok(EllipticModel {
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
            j,
        })
    }

    pub fn from_i64(a: [i64; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(Rational::from);
        Self::new(a1, a2, a3, a4, a6)
    }

    pub fn from_integers(a: &[Integer; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.clone().map(Rational::from);
        Self::new(a1, a2, a3, a4, a6)
    }

    pub fn a_invariants(&self) -> [Rational; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn is_integral(&self) -> bool {
        self.a_invariants().iter().all(|a| *a.denom() == 1)
    }

    /// Integer a-invariants; panics on a non-integral model.
    pub fn integer_a(&self) -> [Integer; 5] {
        assert!(self.is_integral(), "model is not integral");
        self.a_invariants().map(|a| a.into_numer_denom().0)
    }

    /// The model in coordinates `x = u^2 x' + r`, `y = u^3 y' + s u^2 x' + t`.
    pub fn transform(&self, u: &Rational, r: &Rational, s: &Rational, t: &Rational) -> Result<Self> {
        if *u == 0 {
            return Err(Error::Domain("scaling u must be nonzero".into()));
        }
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let na1 = Rational::from(a1 + Rational::from(s * 2u32));
        let na2 = Rational::from(a2 - Rational::from(s * a1)) + Rational::from(r * 3u32)
            - Rational::from(s * s);
        let na3 = Rational::from(a3 + Rational::from(r * a1)) + Rational::from(t * 2u32);
        let na4 = Rational::from(a4 - Rational::from(s * a3))
            + Rational::from(r * a2) * 2u32
            - (Rational::from(t + Rational::from(r * s))) * a1
            + Rational::from(r * r) * 3u32
            - Rational::from(s * t) * 2u32;
        let na6 = Rational::from(a6 + Rational::from(r * a4))
            + Rational::from(r * r) * a2
            + Rational::from(r * r) * r
            - Rational::from(t * a3)
            - Rational::from(t * t)
            - Rational::from(r * t) * a1;
        let up = |k: u32| {
            let mut v = Rational::from(1);
            for _ in 0..k {
                v *= u;
            }
            v
        };
        Self::new(
            na1 / up(1),
            na2 / up(2),
            na3 / up(3),
            na4 / up(4),
            na6 / up(6),
        )
    }

    /// An integral model `x = x'/u^2` with the least positive integer `u`.
    pub fn integral_model(&self) -> Self {
        if self.is_integral() {
            return self.clone();
        }
        let weights = [1u32, 2, 3, 4, 6];
        let mut u = Integer::from(1);
        for (a, &w) in self.a_invariants().iter().zip(&weights) {
            // Need u^w * a integral: for each prime power in den(a) raise u.
            let d = a.denom().clone();
            if d == 1 {
                continue;
            }
            let fac = crate::exactmath::integer::factor(&d).unwrap_or_default();
            for (p, e) in fac {
                let need = e.div_ceil(w);
                let have = crate::exactmath::integer::valuation(&u, &p).unwrap_or(0);
                for _ in have..need {
                    u *= &p;
                }
            }
        }
        let ui = Rational::from((Integer::from(1), u));
        let z = Rational::new();
        self.transform(&ui, &z, &z, &z).expect("scaling keeps the model nonsingular")
    }

    /// The 2-division polynomial `4x^3 + b2 x^2 + 2 b4 x + b6`, constant
    /// term first.
    pub fn two_division(&self) -> [Rational; 4] {
        [
            self.b6.clone(),
            Rational::from(&self.b4 * 2u32),
            self.b2.clone(),
            Rational::from(4),
        ]
    }
}
