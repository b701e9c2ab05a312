#![allow(dead_code)]

use rand::Rng;
use rug::Integer;

/// Corpus lines as `(label, [a1, a2, a3, a4, a6])`.
pub fn corpus() -> Vec<(String, [i64; 5])> {
    szpiro_core::DESK_CORPUS
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let w: Vec<&str> = l.split_whitespace().collect();
            let a: Vec<i64> = w[1..].iter().map(|s| s.parse().unwrap()).collect();
            (w[0].to_string(), [a[0], a[1], a[2], a[3], a[4]])
        })
        .collect()
}

/// Conductor encoded in a curve label such as `37a1`.
pub fn label_conductor(label: &str) -> u64 {
    label.chars().take_while(|c| c.is_ascii_digit()).collect::<String>().parse().unwrap()
}

fn disc(a: &[i128; 5]) -> i128 {
    let [a1, a2, a3, a4, a6] = *a;
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
}

/// The model `x = p^2 x' + r`, `y = p^3 y' + s p^2 x' + t`, when integral.
fn step(a: &[i128; 5], p: i128, r: i128, s: i128, t: i128) -> Option<[i128; 5]> {
    let [a1, a2, a3, a4, a6] = *a;
    let n1 = a1 + 2 * s;
    let n2 = a2 - s * a1 + 3 * r - s * s;
    let n3 = a3 + r * a1 + 2 * t;
    let n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    let n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    let pw = |k: u32| p.pow(k);
    if n1 % pw(1) != 0 || n2 % pw(2) != 0 || n3 % pw(3) != 0 || n4 % pw(4) != 0 || n6 % pw(6) != 0 {
        return None;
    }
    Some([n1 / pw(1), n2 / pw(2), n3 / pw(3), n4 / pw(4), n6 / pw(6)])
}

fn vp(mut n: i128, p: i128) -> u32 {
    let mut v = 0;
    n = n.abs();
    while n != 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Minimal discriminant by exhaustive search over integral changes of
/// variables at each prime, reducing one power of `p` at a time.
pub fn brute_force_min_disc(a: [i64; 5]) -> Integer {
    let mut m = a.map(i128::from);
    let d0 = disc(&m);
    let mut primes = Vec::new();
    let mut n = d0.abs();
    let mut q = 2i128;
    while q * q <= n {
        if n % q == 0 {
            primes.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    for &p in &primes {
        'outer: while vp(disc(&m), p) >= 12 {
            for r in 0..p * p {
                for s in 0..p {
                    for t in 0..p * p * p {
                        if let Some(nm) = step(&m, p, r, s, t) {
                            m = nm;
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
    }
    Integer::from(disc(&m).abs())
}

/// A coprime triple `a + b = c` with `|c| <= bound`, signs mixed.
pub fn random_triple(rng: &mut impl Rng, bound: i64) -> (Integer, Integer, Integer) {
    loop {
        let a = rng.gen_range(-bound..=bound);
        let b = rng.gen_range(-bound..=bound);
        let c = a + b;
        if a == 0 || b == 0 || c == 0 || c.abs() > bound {
            continue;
        }
        if Integer::from(a).gcd(&Integer::from(b)) != 1 {
            continue;
        }
        return (Integer::from(a), Integer::from(b), Integer::from(c));
    }
}

use szpiro_core::siegel::{reduce_to_fundamental, IMatrix, SiegelPoint, SymplecticMatrix};

/// A word of length `len` in inversions, translations and rotations.
pub fn random_sp(g: usize, rng: &mut impl Rng, len: usize) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(g);
    for _ in 0..len {
        let step = match rng.gen_range(0..3) {
            0 => SymplecticMatrix::inversion(g),
            1 => {
                let mut b = IMatrix::zero(g);
                for i in 0..g {
                    for j in i..g {
                        let x = rng.gen_range(-2..=2);
                        b.data[i * g + j] = x;
                        b.data[j * g + i] = x;
                    }
                }
                SymplecticMatrix::translation(b).unwrap()
            }
            _ if g == 1 => SymplecticMatrix::inversion(1),
            _ => {
                let k = rng.gen_range(-2..=2);
                let u = IMatrix::from_rows(&[&[1, k], &[0, 1]]);
                let ui = IMatrix::from_rows(&[&[1, -k], &[0, 1]]);
                SymplecticMatrix::rotation(u, ui).unwrap()
            }
        };
        m = step.mul(&m);
    }
    m
}

/// A point of the upper half space with moderate imaginary part.
pub fn random_tau(g: usize, rng: &mut impl Rng) -> SiegelPoint {
    match g {
        1 => SiegelPoint::from_f64(1, &[(rng.gen_range(-2.0..2.0), rng.gen_range(0.3..3.0))], 256).unwrap(),
        2 => loop {
            let y11: f64 = rng.gen_range(0.3..3.0);
            let y22: f64 = rng.gen_range(0.3..3.0);
            let y12: f64 = rng.gen_range(-1.0..1.0) * (y11 * y22).sqrt() * 0.9;
            let x: [f64; 3] = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let e = [(x[0], y11), (x[1], y12), (x[1], y12), (x[2], y22)];
            if let Ok(t) = SiegelPoint::from_f64(2, &e, 256) {
                if t.lambda_min() > 0.05 {
                    return t;
                }
            }
        },
        _ => unimplemented!("genus {g}"),
    }
}

/// `random_tau` moved to the fundamental domain.
pub fn random_reduced_tau(g: usize, rng: &mut impl Rng) -> SiegelPoint {
    reduce_to_fundamental(&random_tau(g, rng)).unwrap().0
}
