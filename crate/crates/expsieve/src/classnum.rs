//! Class numbers of imaginary quadratic fields.
//!
//! Two independent routes: direct counting of reduced primitive binary
//! quadratic forms, and the finite character-sum form of the class number
//! formula (Kronecker symbol weighted sum over residues). For a prime
//! b = 1 mod 4 the field Q(sqrt(-b)) has fundamental discriminant -4b, and
//! the odd divisors > 1 of its class number are the admissible z2 exponents
//! for the sieve.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::primes::is_prime;

/// A negative discriminant: d < 0 and d = 0 or 1 mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self> {
        if value >= 0 || value.rem_euclid(4) > 1 {
            return Err(Error::NotDiscriminant(value));
        }
        Ok(Discriminant(value))
    }

    pub fn value(&self) -> i64 {
        self.0
    }

    /// d = 1 mod 4 squarefree, or d = 4m with m = 2 or 3 mod 4 squarefree.
    pub fn is_fundamental(&self) -> bool {
        let d = self.0;
        if d.rem_euclid(4) == 1 {
            return is_squarefree(d.unsigned_abs());
        }
        let m = d / 4;
        let r = m.rem_euclid(4);
        (r == 2 || r == 3) && is_squarefree(m.unsigned_abs())
    }
}

fn is_squarefree(n: u64) -> bool {
    crate::modarith::factor(n).iter().all(|&(_, k)| k == 1)
}

/// Number of reduced primitive forms (A, B, C) with B^2 - 4AC = d:
/// |B| <= A <= C, gcd(A, B, C) = 1, and B >= 0 whenever |B| = A or A = C.
pub fn class_number_forms(d: Discriminant) -> u64 {
    let disc = d.value();
    let abs_d = disc.unsigned_abs() as i64;
    let mut count = 0u64;
    let mut a = 1i64;
    // reduction forces 3A^2 <= |d|
    while 3 * a * a <= abs_d {
        let mut b = -a;
        if (b - disc).rem_euclid(2) != 0 {
            b += 1; // b must share the parity of d
        }
        while b <= a {
            let num = b * b - disc;
            debug_assert!(num > 0);
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a {
                    let boundary = b.abs() == a || a == c;
                    if !(boundary && b < 0)
                        && (a as u64).gcd(&b.unsigned_abs()).gcd(&c.unsigned_abs()) == 1
                    {
                        count += 1;
                    }
                }
            }
            b += 2;
        }
        a += 1;
    }
    count
}

/// Kronecker symbol (d | n) for n >= 0.
pub fn kronecker(d: i64, n: u64) -> i64 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut result = 1i64;
    let mut n = n;
    while n % 2 == 0 {
        n /= 2;
        if d % 2 == 0 {
            return 0;
        }
        match d.rem_euclid(8) {
            3 | 5 => result = -result,
            _ => {}
        }
    }
    if n == 1 {
        return result;
    }
    result * jacobi(d.rem_euclid(n as i64) as u64, n)
}

/// Jacobi symbol (a | n) for odd n >= 1, a reduced mod n.
fn jacobi(mut a: u64, mut n: u64) -> i64 {
    debug_assert!(n % 2 == 1);
    if n == 1 {
        return 1;
    }
    let mut result = 1i64;
    a %= n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            match n % 8 {
                3 | 5 => result = -result,
                _ => {}
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Class number of a fundamental discriminant d < 0 via the finite sum
///
///   h(d) = w(d) * sum_{0 < r < |d|/2} (d|r) / (2 * (2 - (d|2)))
///
/// with w(-3) = 6, w(-4) = 4, w = 2 otherwise. Independent of the form count.
pub fn class_number_analytic(d: Discriminant) -> Result<u64> {
    if !d.is_fundamental() {
        return Err(Error::NotFundamental(d.value()));
    }
    let disc = d.value();
    let abs_d = disc.unsigned_abs();
    let w: i64 = match disc {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let mut sum = 0i64;
    let mut r = 1u64;
    while 2 * r < abs_d {
        sum += kronecker(disc, r);
        r += 1;
    }
    let denom = 2 * (2 - kronecker(disc, 2));
    let h = w * sum / denom;
    debug_assert!(h > 0 && (w * sum) % denom == 0, "formula must divide exactly");
    Ok(h as u64)
}

/// Admissible second-solution exponents for prime b = 1 mod 4: all odd
/// divisors > 1 of the class number of Q(sqrt(-b)), ascending.
pub fn z2_candidates(b: u64) -> Result<Vec<u64>> {
    if !is_prime(b) || b % 4 != 1 {
        return Err(Error::BadClassNumberBase(b));
    }
    let d = Discriminant::new(-4 * b as i64)?;
    let h = class_number_forms(d);
    let mut out = Vec::new();
    let mut z = 3;
    while z <= h {
        if h % z == 0 {
            out.push(z);
        }
        z += 2;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::primes_up_to;

    /// Oracle: same enumeration under the equivalent boundary convention
    /// -A < B <= A < C or 0 <= B <= A = C.
    fn class_number_forms_alt(d: Discriminant) -> u64 {
        let disc = d.value();
        let abs_d = -disc;
        let mut count = 0u64;
        for a in 1..=(1 + (abs_d / 3).isqrt()) {
            for b in -a..=a {
                if (b - disc).rem_euclid(2) != 0 {
                    continue;
                }
                let num = b * b - disc;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                let reduced = (b > -a && b <= a && a < c) || (b >= 0 && b <= a && a == c);
                if reduced
                    && (a as u64)
                        .gcd(&b.unsigned_abs())
                        .gcd(&c.unsigned_abs())
                        == 1
                {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn rejects_non_discriminants() {
        assert!(Discriminant::new(-5).is_err());
        assert!(Discriminant::new(-6).is_err());
        assert!(Discriminant::new(4).is_err());
        assert!(Discriminant::new(0).is_err());
        assert!(Discriminant::new(-4).is_ok());
        assert!(Discriminant::new(-3).is_ok());
    }

    #[test]
    fn forms_examples() {
        assert_eq!(class_number_forms(Discriminant::new(-4).unwrap()), 1);
        assert_eq!(class_number_forms(Discriminant::new(-52).unwrap()), 2);
        assert_eq!(class_number_forms(Discriminant::new(-244).unwrap()), 6);
    }

    #[test]
    fn forms_known_values() {
        // classical table: h(-3)=1, h(-7)=1, h(-8)=1, h(-15)=2, h(-20)=2,
        // h(-23)=3, h(-47)=5, h(-71)=7
        for (d, h) in [(-3, 1), (-7, 1), (-8, 1), (-15, 2), (-20, 2), (-23, 3), (-47, 5), (-71, 7)]
        {
            assert_eq!(class_number_forms(Discriminant::new(d).unwrap()), h, "d = {d}");
        }
    }

    #[test]
    fn analytic_examples() {
        assert_eq!(class_number_analytic(Discriminant::new(-4).unwrap()).unwrap(), 1);
        assert_eq!(class_number_analytic(Discriminant::new(-52).unwrap()).unwrap(), 2);
        assert_eq!(class_number_analytic(Discriminant::new(-148).unwrap()).unwrap(), 2);
        assert!(class_number_analytic(Discriminant::new(-12).unwrap()).is_err());
        assert!(class_number_analytic(Discriminant::new(-27).unwrap()).is_err());
    }

    #[test]
    fn boundary_convention_agrees() {
        for b in primes_up_to(500) {
            if b % 4 != 1 {
                continue;
            }
            let d = Discriminant::new(-4 * b as i64).unwrap();
            assert_eq!(class_number_forms(d), class_number_forms_alt(d), "b = {b}");
        }
        for v in [-3i64, -7, -15, -23, -47, -71, -103] {
            let d = Discriminant::new(v).unwrap();
            assert_eq!(class_number_forms(d), class_number_forms_alt(d), "d = {v}");
        }
    }

    #[test]
    fn analytic_matches_forms_small() {
        for b in primes_up_to(1000) {
            if b % 4 != 1 {
                continue;
            }
            let d = Discriminant::new(-4 * b as i64).unwrap();
            assert!(d.is_fundamental());
            assert_eq!(
                class_number_forms(d),
                class_number_analytic(d).unwrap(),
                "b = {b}"
            );
        }
    }

    #[test]
    fn z2_examples() {
        assert!(z2_candidates(13).unwrap().is_empty());
        assert_eq!(z2_candidates(61).unwrap(), vec![3]);
        assert!(z2_candidates(5).unwrap().is_empty());
        assert!(z2_candidates(12).is_err());
        assert!(z2_candidates(7).is_err()); // 7 = 3 mod 4
    }

    #[test]
    fn z2_closed_under_odd_divisors() {
        for b in primes_up_to(3000) {
            if b % 4 != 1 {
                continue;
            }
            let h = class_number_forms(Discriminant::new(-4 * b as i64).unwrap());
            let zs = z2_candidates(b).unwrap();
            for &z in &zs {
                assert!(z % 2 == 1 && z > 1 && h % z == 0);
                let mut q = 3;
                while q < z {
                    if z % q == 0 {
                        assert!(zs.contains(&q), "divisor {q} of {z} missing for b = {b}");
                    }
                    q += 2;
                }
            }
            let mut sorted = zs.clone();
            sorted.sort_unstable();
            assert_eq!(zs, sorted);
        }
    }
}
