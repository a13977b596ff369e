//! Small-prime modular arithmetic on `u64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    add(a, p - b % p, p)
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (Fermat).
pub fn inv(a: u64, p: u64) -> Option<u64> {
    (a % p != 0).then(|| pow(a, p - 2, p))
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((x % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational number in F_p, if the denominator is a unit.
pub fn rational_mod(c: &BigRational, p: u64) -> Option<u64> {
    let n = bigint_mod(c.numer(), p);
    let d = inv(bigint_mod(c.denom(), p), p)?;
    Some(mul(n, d, p))
}

/// Rank of a matrix over F_p (rows consumed).
pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let iv = inv(rows[r][c], p).expect("nonzero pivot");
        for j in c..ncols {
            rows[r][j] = mul(rows[r][j], iv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in c..ncols {
                    let v = mul(f, rows[r][j], p);
                    rows[i][j] = sub(rows[i][j], v, p);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
