//! Exact modular and 2-adic arithmetic primitives.
//!
//! Everything here is plain integer arithmetic with u128 intermediates, so
//! there is no silent wraparound anywhere: `pow_mod` for evaluating terms
//! like 2^x + b^y mod q, the Carmichael function and multiplicative orders
//! for choosing exponent-residue moduli, and CRT merging of residue classes
//! across sieve moduli.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A residue class `residue mod modulus` with `0 <= residue < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    residue: u64,
    modulus: u64,
}

impl ResidueClass {
    pub fn new(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if residue >= modulus {
            return Err(Error::InvalidResidue { residue, modulus });
        }
        Ok(ResidueClass { residue, modulus })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl std::fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// base^exponent mod modulus by binary exponentiation, O(log exponent) steps.
///
/// Modulus 1 yields 0.
pub fn pow_mod(base: u64, exponent: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "pow_mod requires modulus >= 1");
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut sq = (base as u128) % m;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * sq % m;
        }
        sq = sq * sq % m;
        e >>= 1;
    }
    acc as u64
}

/// 2-adic valuation: the greatest t with 2^t | n.
pub fn v2(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(n.trailing_zeros())
}

/// Prime factorization by trial division, ascending. Desk-scale inputs only.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Carmichael function: the exponent of the unit group mod m.
///
/// lambda(p^k) = p^(k-1)(p-1) for odd p; lambda(2) = 1, lambda(4) = 2,
/// lambda(2^k) = 2^(k-2) for k >= 3; lcm over prime powers.
pub fn carmichael_lambda(m: u64) -> u64 {
    assert!(m >= 1, "carmichael_lambda requires m >= 1");
    let mut lam = 1u64;
    for (p, k) in factor(m) {
        let contrib = if p == 2 {
            match k {
                1 => 1,
                2 => 2,
                _ => 1u64 << (k - 2),
            }
        } else {
            p.pow(k - 1) * (p - 1)
        };
        lam = lam.lcm(&contrib);
    }
    lam
}

/// Least t >= 1 with a^t = 1 mod m. Requires gcd(a, m) = 1.
///
/// Always divides carmichael_lambda(m).
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let a = a % m.max(1);
    if m == 1 {
        return Ok(1);
    }
    if a.gcd(&m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    let mut t = carmichael_lambda(m);
    for (p, _) in factor(t) {
        while t % p == 0 && pow_mod(a, t / p, m) == 1 {
            t /= p;
        }
    }
    Ok(t)
}

/// Merges two residue classes into the unique class mod lcm(m1, m2), or
/// `None` when they are incompatible (r1 != r2 mod gcd(m1, m2)).
pub fn crt_merge(r1: ResidueClass, r2: ResidueClass) -> Option<ResidueClass> {
    let ctx = CrtContext::new(r1.modulus, r2.modulus)
        .expect("crt_merge modulus pair overflows u64 lcm");
    ctx.merge(r1.residue, r2.residue).map(|r| ResidueClass {
        residue: r,
        modulus: ctx.lcm(),
    })
}

/// Precomputed CRT data for one (m1, m2) pair, for merging many residue
/// pairs against the same moduli.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CrtContext {
    m1: u64,
    g: u64,
    m2_div_g: u64,
    // inverse of (m1/g) mod (m2/g)
    inv: u64,
    lcm: u64,
}

impl CrtContext {
    /// `None` when lcm(m1, m2) does not fit in u64.
    pub(crate) fn new(m1: u64, m2: u64) -> Option<Self> {
        assert!(m1 >= 1 && m2 >= 1);
        let g = m1.gcd(&m2);
        let m2_div_g = m2 / g;
        let lcm = m1.checked_mul(m2_div_g)?;
        let inv = if m2_div_g == 1 {
            0
        } else {
            mod_inverse(m1 / g % m2_div_g, m2_div_g)
                .expect("m1/g and m2/g are coprime by construction")
        };
        Some(CrtContext { m1, g, m2_div_g, inv, lcm })
    }

    pub(crate) fn lcm(&self) -> u64 {
        self.lcm
    }

    /// Residue mod lcm congruent to a mod m1 and b mod m2, if consistent.
    pub(crate) fn merge(&self, a: u64, b: u64) -> Option<u64> {
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        if (hi - lo) % self.g != 0 {
            return None;
        }
        if self.m2_div_g == 1 {
            return Some(a);
        }
        // x = a + m1 * t with t = (b - a)/g * inv mod (m2/g)
        let bg = (b / self.g) % self.m2_div_g;
        let ag = (a / self.g) % self.m2_div_g;
        let t = (bg + self.m2_div_g - ag) % self.m2_div_g;
        let t = (t as u128 * self.inv as u128 % self.m2_div_g as u128) as u64;
        let x = (a as u128 + self.m1 as u128 * t as u128) % self.lcm as u128;
        Some(x as u64)
    }
}

/// Inverse of a mod m, if it exists.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
