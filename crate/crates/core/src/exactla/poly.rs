//! Univariate polynomials over F_p, only as much as root finding needs.
//! Coefficients run from the constant term upwards.

use rand::Rng;

use super::field::{Field, PrimeField};

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mul_mod(f: &PrimeField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    rem(f, &out, m)
}

fn rem(f: &PrimeField, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let inv = f.inv(&m[dm]).expect("nonzero modulus");
    while a.len() > dm {
        let lead = f.mul(a.last().unwrap(), &inv);
        let shift = a.len() - 1 - dm;
        for (k, c) in m.iter().enumerate() {
            a[shift + k] = f.sub(&a[shift + k], &f.mul(&lead, c));
        }
        a = trim(a);
    }
    a
}

fn gcd(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last() {
        let inv = f.inv(l).unwrap();
        a.iter_mut().for_each(|c| *c = f.mul(c, &inv));
    }
    a
}

fn pow_mod(f: &PrimeField, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(f, &acc, &b, m);
        }
        b = mul_mod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

fn sub_poly(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&0), b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

/// Some root of `poly` in F_p, if there is one. Equal-degree splitting of
/// `gcd(poly, x^p - x)`, randomised through `rng`.
pub fn find_root<R: Rng>(f: &PrimeField, poly: &[u32], rng: &mut R) -> Option<u32> {
    let poly = trim(poly.to_vec());
    if poly.len() <= 1 {
        return None;
    }
    let p = f.characteristic() as u64;
    let xp = pow_mod(f, &[0, 1], p, &poly);
    let mut g = gcd(f, &poly, &sub_poly(f, &xp, &[0, 1]));
    if g.len() <= 1 {
        return None;
    }
    if p == 2 {
        return [0u32, 1].into_iter().find(|&x| super::eval_poly(f, &g, &x) == 0);
    }
    while g.len() > 2 {
        let a = rng.gen_range(0..f.characteristic());
        let h = pow_mod(f, &[a, 1], (p - 1) / 2, &g);
        let d = gcd(f, &g, &sub_poly(f, &h, &[1]));
        if d.len() > 1 && d.len() < g.len() {
            g = if d.len() <= g.len() / 2 + 1 { d } else { divide(f, &g, &d) };
        }
    }
    // Monic linear factor x + c.
    Some(f.neg(&g[0]))
}

fn divide(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let inv = f.inv(&b[db]).unwrap();
    let mut q = vec![0u32; a.len().saturating_sub(db)];
    while a.len() > db {
        let lead = f.mul(a.last().unwrap(), &inv);
        let shift = a.len() - 1 - db;
        q[shift] = lead;
        for (k, c) in b.iter().enumerate() {
            a[shift + k] = f.sub(&a[shift + k], &f.mul(&lead, c));
        }
        a = trim(a);
    }
    let g = trim(q);
    let inv = f.inv(g.last().unwrap()).unwrap();
    g.into_iter().map(|c| f.mul(&c, &inv)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::eval_poly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn finds_roots_of_split_polynomials() {
        let f = PrimeField::new(32003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (x - 5)(x - 17)(x^2 + 1); -1 is not a square mod 32003.
        let quad = [85u32, f.from_i64(-22), 1];
        let mut p = vec![0u32; 5];
        for (i, x) in quad.iter().enumerate() {
            for (j, y) in [1u32, 0, 1].iter().enumerate() {
                p[i + j] = f.add(&p[i + j], &f.mul(x, y));
            }
        }
        for _ in 0..10 {
            let r = find_root(&f, &p, &mut rng).unwrap();
            assert!(r == 5 || r == 17);
            assert_eq!(eval_poly(&f, &p, &r), 0);
        }
        assert_eq!(find_root(&f, &[1, 0, 1], &mut rng), None);
    }

    #[test]
    fn large_prime() {
        let f = PrimeField::new(2_147_483_629).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = [f.from_i64(-6), 1, 1]; // (x + 3)(x - 2)
        let r = find_root(&f, &p, &mut rng).unwrap();
        assert!(r == 2 || r == f.from_i64(-3));
    }
}
