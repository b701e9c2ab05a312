//! Tate's algorithm over Z_p.

use super::model::EllipticModel;
use crate::error::{Error, Result};
use crate::exactmath::integer::{valuation, valuation_q};
use rug::Integer;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kodaira {
    I0,
    In(u32),
    II,
    III,
    IV,
    I0Star,
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    /// Number of irreducible components of the special fibre of the
    /// minimal regular model, counted without multiplicity.
    pub fn components(self) -> u32 {
        match self {
            Kodaira::I0 => 1,
            Kodaira::In(n) => n,
            Kodaira::II => 1,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::I0Star => 5,
            Kodaira::InStar(n) => n + 5,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }

    pub fn is_semistable(self) -> bool {
        matches!(self, Kodaira::I0 | Kodaira::In(_))
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I0 => write!(f, "I0"),
            Kodaira::In(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::I0Star => write!(f, "I0*"),
            Kodaira::InStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

impl std::str::FromStr for Kodaira {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unknown Kodaira symbol {s:?}"));
        Ok(match s {
            "I0" => Kodaira::I0,
            "II" => Kodaira::II,
            "III" => Kodaira::III,
            "IV" => Kodaira::IV,
            "I0*" => Kodaira::I0Star,
            "IV*" => Kodaira::IVStar,
            "III*" => Kodaira::IIIStar,
            "II*" => Kodaira::IIStar,
            _ => {
                let body = s.strip_prefix('I').ok_or_else(bad)?;
                if let Some(n) = body.strip_suffix('*') {
                    Kodaira::InStar(n.parse().map_err(|_| bad())?)
                } else {
                    Kodaira::In(body.parse().map_err(|_| bad())?)
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalReductionData {
    pub p: Integer,
    pub kodaira: Kodaira,
    /// Conductor exponent.
    pub f_p: u32,
    /// Valuation of the minimal discriminant.
    pub n_p: u32,
    /// Components of the special fibre, without multiplicity.
    pub m_p: u32,
    /// Tamagawa number.
    pub c_p: u32,
    pub potential_good: bool,
    /// Valuation of the discriminant of the input model at `p`.
    pub model_valuation: u32,
}

impl LocalReductionData {
    pub fn ogg_holds(&self) -> bool {
        self.n_p + 1 == self.m_p + self.f_p
    }
}

struct Ctx {
    p: Integer,
}

impl Ctx {
    fn val(&self, x: &Integer) -> u32 {
        valuation(x, &self.p).unwrap_or(u32::MAX)
    }
    fn divides(&self, x: &Integer) -> bool {
        x.is_divisible(&self.p)
    }
    fn reduce(&self, x: &Integer) -> Integer {
        md(x, &self.p)
    }
    fn inv(&self, x: &Integer) -> Integer {
        Integer::from(self.reduce(x).invert_ref(&self.p).expect("unit mod p"))
    }
    fn pow(&self, k: u32) -> Integer {
        crate::exactmath::integer::ipow(&self.p, k)
    }
    /// Does `a x^2 + b x + c` have a root mod p?
    fn quad_roots(&self, a: &Integer, b: &Integer, c: &Integer) -> bool {
        let (a, b, c) = (self.reduce(a), self.reduce(b), self.reduce(c));
        if a == 0 {
            return b != 0 || c == 0;
        }
        if self.p == 2 {
            // x in {0, 1}
            return c == 0 || (Integer::from(&a + &b) + &c).is_even();
        }
        let d = Integer::from(&b * &b) - Integer::from(&a * &c) * 4u32;
        d.legendre(&self.p) >= 0
    }
    /// Roots of the monic cubic `x^3 + b x^2 + c x + d` mod p, with
    /// multiplicity.
    fn cubic_roots(&self, b: &Integer, c: &Integer, d: &Integer) -> u32 {
        let p = &self.p;
        let f = [self.reduce(d), self.reduce(c), self.reduce(b), Integer::from(1)];
        if *p < 1000 {
            let mut count = 0;
            let mut poly = f.to_vec();
            let pu = p.to_u32().unwrap();
            for x in 0..pu {
                let xi = Integer::from(x);
                loop {
                    if poly.len() <= 1 {
                        break;
                    }
                    let v = horner_mod(&poly, &xi, p);
                    if v != 0 {
                        break;
                    }
                    poly = synth_div(&poly, &xi, p);
                    count += 1;
                }
            }
            return count;
        }
        // Distinct roots from gcd(x^p - x, f); the cubic is square-free in
        // the only case this is used (three distinct roots).
        let xp = pow_x_mod(p, &f, p);
        let mut g = xp;
        while g.len() < 2 {
            g.push(Integer::new());
        }
        g[1] -= 1;
        for c in g.iter_mut() {
            *c = md(c, p);
        }
        let d = gcd_mod(&f, &g, p);
        (d.len() - 1) as u32
    }
}

fn md(x: &Integer, p: &Integer) -> Integer {
    let mut r = Integer::from(x % p);
    if r < 0 {
        r += p;
    }
    r
}

fn horner_mod(poly: &[Integer], x: &Integer, p: &Integer) -> Integer {
    let mut acc = Integer::new();
    for c in poly.iter().rev() {
        acc = Integer::from(&acc * x) + c;
        acc = md(&acc, p);
    }
    acc
}

fn synth_div(poly: &[Integer], x: &Integer, p: &Integer) -> Vec<Integer> {
    let n = poly.len() - 1;
    let mut out = vec![Integer::new(); n];
    let mut acc = Integer::new();
    for k in (1..=n).rev() {
        acc = Integer::from(&acc * x) + &poly[k];
        acc = md(&acc, p);
        out[k - 1] = acc.clone();
    }
    out
}

fn trim(a: &mut Vec<Integer>) {
    while a.last().is_some_and(|c| *c == 0) {
        a.pop();
    }
}

fn rem_mod(a: &[Integer], m: &[Integer], p: &Integer) -> Vec<Integer> {
    let mut r: Vec<Integer> = a.iter().map(|c| md(c, p)).collect();
    trim(&mut r);
    let dm = m.len() - 1;
    let li = Integer::from(m[dm].invert_ref(p).unwrap());
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = Integer::from(r.last().unwrap() * &li);
        for (j, mj) in m.iter().enumerate() {
            r[k + j] -= Integer::from(&c * mj);
            r[k + j] = md(&r[k + j], p);
        }
        trim(&mut r);
    }
    r
}

fn mul_mod(a: &[Integer], b: &[Integer], m: &[Integer], p: &Integer) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += Integer::from(x * y);
        }
    }
    rem_mod(&out, m, p)
}

fn pow_x_mod(e: &Integer, m: &[Integer], p: &Integer) -> Vec<Integer> {
    let mut result = vec![Integer::from(1)];
    let mut base = rem_mod(&[Integer::new(), Integer::from(1)], m, p);
    let bits = e.significant_bits();
    for i in 0..bits {
        if e.get_bit(i) {
            result = mul_mod(&result, &base, m, p);
        }
        base = mul_mod(&base, &base, m, p);
    }
    result
}

fn gcd_mod(a: &[Integer], b: &[Integer], p: &Integer) -> Vec<Integer> {
    let mut x: Vec<Integer> = a.to_vec();
    let mut y: Vec<Integer> = b.iter().map(|c| md(c, p)).collect();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem_mod(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Integer model with `[a1, a2, a3, a4, a6]`.
#[derive(Clone, Debug)]
struct IntModel([Integer; 5]);

impl IntModel {
    fn rst(&self, r: &Integer, s: &Integer, t: &Integer) -> IntModel {
        let [a1, a2, a3, a4, a6] = &self.0;
        let na1 = Integer::from(a1 + Integer::from(s * 2u32));
        let na2 = Integer::from(a2 - Integer::from(s * a1)) + Integer::from(r * 3u32)
            - Integer::from(s * s);
        let na3 = Integer::from(a3 + Integer::from(r * a1)) + Integer::from(t * 2u32);
        let na4 = Integer::from(a4 - Integer::from(s * a3)) + Integer::from(r * a2) * 2u32
            - Integer::from(t + Integer::from(r * s)) * a1
            + Integer::from(r * r) * 3u32
            - Integer::from(s * t) * 2u32;
        let na6 = Integer::from(a6 + Integer::from(r * a4))
            + Integer::from(r * r) * a2
            + Integer::from(r * r) * r
            - Integer::from(t * a3)
            - Integer::from(t * t)
            - Integer::from(r * t) * a1;
        IntModel([na1, na2, na3, na4, na6])
    }

    fn b(&self) -> (Integer, Integer, Integer, Integer) {
        let [a1, a2, a3, a4, a6] = &self.0;
        let b2 = Integer::from(a1 * a1) + Integer::from(a2 * 4u32);
        let b4 = Integer::from(a1 * a3) + Integer::from(a4 * 2u32);
        let b6 = Integer::from(a3 * a3) + Integer::from(a6 * 4u32);
        let b8 = Integer::from(a1 * a1) * a6 + Integer::from(a2 * a6) * 4u32
            - Integer::from(a1 * a3) * a4
            + Integer::from(a2 * a3) * a3
            - Integer::from(a4 * a4);
        (b2, b4, b6, b8)
    }

    fn c_disc(&self) -> (Integer, Integer, Integer) {
        let (b2, b4, b6, b8) = self.b();
        let c4 = Integer::from(&b2 * &b2) - Integer::from(&b4 * 24u32);
        let c6 = -Integer::from(&b2 * &b2) * &b2 + Integer::from(&b2 * &b4) * 36u32
            - Integer::from(&b6 * 216u32);
        let d = -Integer::from(&b2 * &b2) * &b8 - Integer::from(&b4 * &b4) * &b4 * 8u32
            - Integer::from(&b6 * &b6) * 27u32
            + Integer::from(&b2 * &b4) * &b6 * 9u32;
        (c4, c6, d)
    }
}

/// Local reduction data at `p` for an integral model.
pub fn tate_local(model: &EllipticModel, p: &Integer) -> Result<LocalReductionData> {
    if !model.is_integral() {
        return Err(Error::Domain("Tate's algorithm needs an integral model".into()));
    }
    if *p < 2 || p.is_probably_prime(30) == rug::integer::IsPrime::No {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let ctx = Ctx { p: p.clone() };
    let model_valuation = valuation_q(&model.disc, p).unwrap() as u32;
    let potential_good = valuation_q(&model.j, p).is_none_or(|v| v >= 0);
    let mut c = IntModel(model.integer_a());
    let p2 = ctx.pow(2);
    let p3 = ctx.pow(3);
    let p4 = ctx.pow(4);
    let half = if *p == 2 { Integer::new() } else { ctx.inv(&Integer::from(2)) };
    let pi = p.clone();

    let done = |kodaira: Kodaira, f_p: u32, n_p: u32, c_p: u32| LocalReductionData {
        p: p.clone(),
        kodaira,
        f_p,
        n_p,
        m_p: kodaira.components(),
        c_p,
        potential_good,
        model_valuation,
    };

    loop {
        let (c4, c6, disc) = c.c_disc();
        let vd = ctx.val(&disc);
        if vd == 0 {
            return Ok(done(Kodaira::I0, 0, 0, 1));
        }
        let (b2, b4, b6, _) = c.b();
        let [a1, a2, a3, a4, a6] = c.0.clone();

        // Move the singular point to (0, 0): p | a3, a4, a6.
        let (r, t) = if *p == 2 {
            if ctx.divides(&b2) {
                let r = ctx.reduce(&a4);
                let t = ctx.reduce(
                    &(Integer::from(&(Integer::from(&r + &a2) * &r + &a4) * &r) + &a6),
                );
                (r, t)
            } else {
                let temp = ctx.inv(&a1);
                let r = Integer::from(&temp * &a3);
                let t = temp * (Integer::from(&a4) + Integer::from(&r * &r));
                (r, t)
            }
        } else if *p == 3 {
            let r = if ctx.divides(&b2) {
                -b6.clone()
            } else {
                -ctx.inv(&b2) * &b4
            };
            let t = Integer::from(&a1 * &r) + &a3;
            (r, t)
        } else {
            let r = if ctx.divides(&c4) {
                -ctx.inv(&Integer::from(12)) * &b2
            } else {
                -ctx.inv(&Integer::from(&c4 * 12u32)) * (Integer::from(&c6 + Integer::from(&b2 * &c4)))
            };
            let t = -Integer::from(&half * (Integer::from(&a1 * &r) + &a3));
            (r, t)
        };
        let (r, t) = (ctx.reduce(&r), ctx.reduce(&t));
        c = c.rst(&r, &Integer::new(), &t);
        let [a1, a2, a3, a4, a6] = c.0.clone();
        let (_, _, b6, b8) = c.b();
        debug_assert!(ctx.divides(&a3) && ctx.divides(&a4) && ctx.divides(&a6));

        if !ctx.divides(&c4) {
            let c_p = if ctx.quad_roots(&Integer::from(1), &a1, &-a2.clone()) {
                vd
            } else if vd % 2 == 0 {
                2
            } else {
                1
            };
            return Ok(done(Kodaira::In(vd), 1, vd, c_p));
        }
        if ctx.val(&a6) < 2 {
            return Ok(done(Kodaira::II, vd, vd, 1));
        }
        if ctx.val(&b8) < 3 {
            return Ok(done(Kodaira::III, vd - 1, vd, 2));
        }
        if ctx.val(&b6) < 3 {
            let a3t = Integer::from(&a3 / &pi);
            let a6t = Integer::from(&a6 / &p2);
            let c_p = if ctx.quad_roots(&Integer::from(1), &a3t, &-a6t) { 3 } else { 1 };
            return Ok(done(Kodaira::IV, vd - 2, vd, c_p));
        }

        // p | a1, a2; p^2 | a3, a4; p^3 | a6.
        let (s, t) = if *p == 2 {
            (ctx.reduce(&a2), Integer::from(&pi * ctx.reduce(&Integer::from(&a6 / &p2))))
        } else if *p == 3 {
            (a1.clone(), a3.clone())
        } else {
            (
                ctx.reduce(&-Integer::from(&a1 * &half)),
                ctx.reduce(&-Integer::from(&a3 * &half)),
            )
        };
        c = c.rst(&Integer::new(), &s, &t);
        let [_, a2, _, a4, a6] = c.0.clone();

        // The cubic T^3 + b T^2 + c T + d with b = a2/p, c = a4/p^2, d = a6/p^3.
        let b = Integer::from(&a2 / &pi);
        let cc = Integer::from(&a4 / &p2);
        let d = Integer::from(&a6 / &p3);
        let bb = Integer::from(&b * &b);
        let c2 = Integer::from(&cc * &cc);
        let bc = Integer::from(&b * &cc);
        let w = Integer::from(&d * &d) * 27u32 - Integer::from(&bb * &c2)
            + Integer::from(&b * &bb) * &d * 4u32
            - Integer::from(&bc * &d) * 18u32
            + Integer::from(&cc * &c2) * 4u32;
        let x = Integer::from(&cc * 3u32) - &bb;
        let sw = if ctx.divides(&w) {
            if ctx.divides(&x) { 3 } else { 2 }
        } else {
            1
        };

        if sw == 1 {
            let c_p = 1 + ctx.cubic_roots(&b, &cc, &d);
            return Ok(done(Kodaira::I0Star, vd - 4, vd, c_p));
        }
        if sw == 2 {
            // Move the double root to T = 0.
            let r = if *p == 2 {
                ctx.reduce(&cc)
            } else if *p == 3 {
                ctx.reduce(&Integer::from(&cc * ctx.inv(&b)))
            } else {
                ctx.reduce(&(Integer::from(&bc - Integer::from(&d * 9u32)) * ctx.inv(&Integer::from(&x * 2u32))))
            };
            c = c.rst(&Integer::from(&pi * &r), &Integer::new(), &Integer::new());
            let mut ix = 3u32;
            let mut iy = 3u32;
            let mut mx = p2.clone();
            let mut my = p2.clone();
            let c_p;
            loop {
                let [_, _, a3, _, a6] = c.0.clone();
                let a3t = Integer::from(&a3 / &my);
                let a6t = Integer::from(&a6 / Integer::from(&mx * &my));
                if ctx.divides(&(Integer::from(&a3t * &a3t) + Integer::from(&a6t * 4u32))) {
                    let t = if *p == 2 {
                        Integer::from(&my * ctx.reduce(&a6t))
                    } else {
                        Integer::from(&my * ctx.reduce(&-Integer::from(&a3t * &half)))
                    };
                    c = c.rst(&Integer::new(), &Integer::new(), &t);
                    my *= &pi;
                    iy += 1;
                    let [_, a2, _, a4, a6] = c.0.clone();
                    let a2t = Integer::from(&a2 / &pi);
                    let a4t = Integer::from(&a4 / Integer::from(&pi * &mx));
                    let a6t = Integer::from(&a6 / Integer::from(&mx * &my));
                    if ctx.divides(&(Integer::from(&a4t * &a4t) - Integer::from(&a6t * &a2t) * 4u32)) {
                        let r = if *p == 2 {
                            Integer::from(&mx * ctx.reduce(&Integer::from(&a6t * ctx.inv(&a2t))))
                        } else {
                            Integer::from(
                                &mx * ctx.reduce(&-Integer::from(&a4t * ctx.inv(&Integer::from(&a2t * 2u32)))),
                            )
                        };
                        c = c.rst(&r, &Integer::new(), &Integer::new());
                        mx *= &pi;
                        ix += 1;
                    } else {
                        c_p = if ctx.quad_roots(&a2t, &a4t, &a6t) { 4 } else { 2 };
                        break;
                    }
                } else {
                    c_p = if ctx.quad_roots(&Integer::from(1), &a3t, &-a6t) { 4 } else { 2 };
                    break;
                }
            }
            let n = ix + iy - 5;
            return Ok(done(Kodaira::InStar(n), vd + 1 - ix - iy, vd, c_p));
        }

        // Triple root: move it to T = 0.
        let r = if *p == 2 {
            ctx.reduce(&b)
        } else if *p == 3 {
            ctx.reduce(&-d.clone())
        } else {
            ctx.reduce(&-Integer::from(&b * ctx.inv(&Integer::from(3))))
        };
        c = c.rst(&Integer::from(&pi * &r), &Integer::new(), &Integer::new());
        let [_, _, a3, _, a6] = c.0.clone();
        let a3t = Integer::from(&a3 / &p2);
        let a6t = Integer::from(&a6 / &p4);
        if !ctx.divides(&(Integer::from(&a3t * &a3t) + Integer::from(&a6t * 4u32))) {
            let c_p = if ctx.quad_roots(&Integer::from(1), &a3t, &-a6t) { 3 } else { 1 };
            return Ok(done(Kodaira::IVStar, vd - 6, vd, c_p));
        }
        let t = if *p == 2 {
            -Integer::from(&p2 * ctx.reduce(&a6t))
        } else {
            Integer::from(&p2 * ctx.reduce(&-Integer::from(&a3t * &half)))
        };
        c = c.rst(&Integer::new(), &Integer::new(), &t);
        let [_, _, _, a4, a6] = c.0.clone();
        if ctx.val(&a4) < 4 {
            return Ok(done(Kodaira::IIIStar, vd - 7, vd, 2));
        }
        if ctx.val(&a6) < 6 {
            return Ok(done(Kodaira::IIStar, vd - 8, vd, 1));
        }
        // Non-minimal at p: scale by u = p and start again.
        let [a1, a2, a3, a4, a6] = c.0.clone();
        c = IntModel([
            a1 / &pi,
            a2 / &p2,
            a3 / &p3,
            a4 / &p4,
            a6 / ctx.pow(6),
        ]);
    }
}
