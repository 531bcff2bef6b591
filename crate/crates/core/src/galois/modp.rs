//! Dense polynomial arithmetic over `F_p` for primes below `2^31`.
//!
//! Polynomials are `Vec<u64>`, lowest degree first, with no trailing zeros.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn derivative(a: &[u64], p: u64) -> Vec<u64> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect(),
    )
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let inv_lead = inv_mod(b[db], p);
    let mut quot = vec![0u64; rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = mul_mod(rem[i], inv_lead, p);
        if c == 0 {
            continue;
        }
        quot[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let k = i - db + j;
            rem[k] = (rem[k] + p - mul_mod(c, bj, p)) % p;
        }
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    div_rem(a, b, p).1
}

pub(crate) fn make_monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = inv_mod(lead, p);
            a.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&x, p)
}

fn mul_rem(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), modulus, p)
}

/// `base^exp mod modulus`.
pub(crate) fn pow_rem(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_rem(&acc, &b, modulus, p);
        }
        b = mul_rem(&b, &b, modulus, p);
        exp >>= 1;
    }
    acc
}

/// Degrees of the irreducible factors of a monic squarefree `f`, by
/// distinct-degree factorization. Returned in nondecreasing order.
pub(crate) fn distinct_degree_pattern(f: &[u64], p: u64) -> Vec<u32> {
    let mut f = make_monic(f, p);
    let x = vec![0, 1];
    let mut h = rem(&x, &f, p);
    let mut parts = Vec::new();
    let mut d = 1usize;
    while degree(&f).is_some_and(|n| n >= 2 * d) {
        // h = x^(p^d) mod f
        h = pow_rem(&h, p, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 {
            parts.extend(std::iter::repeat_n(d as u32, dg / d));
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
        d += 1;
    }
    if let Some(n) = degree(&f).filter(|&n| n > 0) {
        parts.push(n as u32);
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let p = 101;
        let a = vec![5, 0, 3, 7, 1];
        let b = vec![2, 9, 1];
        let (q, r) = div_rem(&a, &b, p);
        let back = trim(
            (0..a.len())
                .map(|i| {
                    let qb = mul(&q, &b, p);
                    (qb.get(i).copied().unwrap_or(0) + r.get(i).copied().unwrap_or(0)) % p
                })
                .collect(),
        );
        assert_eq!(back, a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_shared_root() {
        // (x - 1)(x - 2) and (x - 1)(x - 3) mod 7
        let p = 7;
        let a = vec![2, 4, 1];
        let b = vec![3, 3, 1];
        assert_eq!(gcd(&a, &b, p), vec![6, 1]);
    }

    #[test]
    fn patterns_for_small_cases() {
        assert_eq!(distinct_degree_pattern(&[1, 0, 1], 3), vec![2]);
        assert_eq!(distinct_degree_pattern(&[6, 0, 1], 7), vec![1, 1]);
        // x^3 - x - 1 has no roots mod 3
        assert_eq!(distinct_degree_pattern(&[2, 2, 0, 1], 3), vec![3]);
        // (x^2 + 1)(x - 1)(x - 2) mod 3
        let f = mul(&mul(&[1, 0, 1], &[2, 1], 3), &[1, 1], 3);
        assert_eq!(distinct_degree_pattern(&f, 3), vec![1, 1, 2]);
    }
}
