use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

use super::{ExactMatrix, Rational};
use crate::error::{Error, Result};

/// Deterministic trial division; inputs here stay below 2^32.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Uniform random prime in `(2^20, 2^31)`.
pub fn random_prime<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range((1u64 << 20) + 1..(1u64 << 31)) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(v: &Rational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let to_u64 = |x: &BigInt| x.mod_floor(&pb).to_u64().expect("residue fits in u64");
    let d = to_u64(v.denom());
    if d.is_zero() {
        return Err(Error::UnluckyPrime(p));
    }
    Ok(to_u64(v.numer()) * inv_mod(d, p) % p)
}

type ModRow = Vec<(usize, u64)>;

fn axpy_mod(a: &[(usize, u64)], f: u64, b: &[(usize, u64)], p: u64) -> ModRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f * b[j].1 % p));
            j += 1;
        } else {
            let v = (a[i].1 + f * b[j].1) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn rank_mod_p(m: &ExactMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) || p >= (1u64 << 32) {
        return Err(Error::NotPrime(p));
    }
    let mut pivots: BTreeMap<usize, ModRow> = BTreeMap::new();
    let mut rank = 0;
    for i in 0..m.rows() {
        let mut row: ModRow = Vec::with_capacity(m.row(i).len());
        for (c, v) in m.row(i) {
            let r = reduce(v, p)?;
            if r != 0 {
                row.push((*c, r));
            }
        }
        while let Some(&(lead, val)) = row.first() {
            match pivots.get(&lead) {
                Some(piv) => row = axpy_mod(&row, p - val, piv, p),
                None => {
                    let inv = inv_mod(val, p);
                    for (_, v) in row.iter_mut() {
                        *v = *v * inv % p;
                    }
                    pivots.insert(lead, row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Ok(rank)
}

/// Ranks of one matrix modulo two distinct primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularRank {
    pub primes: [u64; 2],
    pub ranks: [usize; 2],
}

impl ModularRank {
    pub fn agree(&self) -> bool {
        self.ranks[0] == self.ranks[1]
    }

    /// A matrix rank mod p never exceeds its rational rank, so the larger of
    /// the two residue ranks is the best lower bound.
    pub fn rank(&self) -> usize {
        self.ranks[0].max(self.ranks[1])
    }
}

/// Rank modulo two distinct random primes above 2^20, drawn from `rng`.
pub fn two_prime_rank<R: Rng>(m: &ExactMatrix, rng: &mut R) -> ModularRank {
    let mut primes = [0u64; 2];
    let mut ranks = [0usize; 2];
    let mut k = 0;
    while k < 2 {
        let p = random_prime(rng);
        if k == 1 && p == primes[0] {
            continue;
        }
        match rank_mod_p(m, p) {
            Ok(r) => {
                primes[k] = p;
                ranks[k] = r;
                k += 1;
            }
            Err(Error::UnluckyPrime(_)) => continue,
            Err(e) => unreachable!("random_prime produced a bad modulus: {e}"),
        }
    }
    ModularRank { primes, ranks }
}
