//! Exact brute-force enumeration of a^x + b^y = c^z.
//!
//! All equality tests run on arbitrary-precision integers; no floating point
//! is involved anywhere. Enumeration iterates (x, y), computes a^x + b^y
//! exactly, and looks the sum up in a sorted table of powers of c, so a
//! reported solution is verified by construction. Completeness is always
//! relative to the supplied exponent bound.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::primes::{is_prime, primes_up_to};

/// Largest exponent bound accepted by the enumerator.
pub const MAX_BOUND: u32 = 1000;

/// A coprime base triple (a, b, c) with min > 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: u64,
    b: u64,
    c: u64,
}

impl Triple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        let coprime = |x: u64, y: u64| num_integer::gcd(x, y) == 1;
        if a < 2 || b < 2 || c < 2 || !coprime(a, b) || !coprime(a, c) || !coprime(b, c) {
            return Err(Error::InvalidTriple { a, b, c });
        }
        Ok(Triple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// An exponent triple with a^x + b^y = c^z exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Solution {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Solution {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Solution { x, y, z }
    }
}

impl std::fmt::Display for Solution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// One of the four solution classes by the parities of x and y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParityClass {
    pub x: Parity,
    pub y: Parity,
}

pub fn parity_class(s: Solution) -> ParityClass {
    ParityClass {
        x: Parity::of(s.x),
        y: Parity::of(s.y),
    }
}

fn powers(base: u64, bound: u32) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(bound as usize + 1);
    out.push(BigUint::one());
    let b = BigUint::from(base);
    for _ in 0..bound {
        let next = out.last().unwrap() * &b;
        out.push(next);
    }
    out
}

/// All solutions with max(x, y, z) <= bound, lexicographic by (x, y, z).
pub fn find_solutions(t: &Triple, bound: u32) -> Result<Vec<Solution>> {
    if bound == 0 || bound > MAX_BOUND {
        return Err(Error::BoundOutOfRange {
            got: bound as u64,
            min: 1,
            max: MAX_BOUND as u64,
        });
    }
    let pa = powers(t.a, bound);
    let pb = powers(t.b, bound);
    let max_sum = &pa[bound as usize] + &pb[bound as usize];
    // powers of c from exponent 1, ascending, capped by bound and max_sum
    let mut pc: Vec<BigUint> = Vec::new();
    let c = BigUint::from(t.c);
    let mut v = c.clone();
    while v <= max_sum && pc.len() < bound as usize {
        pc.push(v.clone());
        v *= &c;
    }
    let mut out = Vec::new();
    let mut sum = BigUint::default();
    for x in 1..=bound as usize {
        for y in 1..=bound as usize {
            sum.clone_from(&pa[x]);
            sum += &pb[y];
            if let Ok(i) = pc.binary_search(&sum) {
                out.push(Solution::new(x as u32, y as u32, (i + 1) as u32));
            }
        }
    }
    Ok(out)
}

/// Parity classes holding at least two solutions within the bound.
///
/// Requires c to be an odd prime; the only coprime triples for which this
/// returns anything are (3,10,13) and (10,3,13).
pub fn check_parity_uniqueness(t: &Triple, bound: u32) -> Result<Vec<ParityClass>> {
    if t.c % 2 == 0 || !is_prime(t.c) {
        return Err(Error::CompositeOrEvenC(t.c));
    }
    let mut by_class: BTreeMap<ParityClass, u32> = BTreeMap::new();
    for s in find_solutions(t, bound)? {
        *by_class.entry(parity_class(s)).or_default() += 1;
    }
    Ok(by_class
        .into_iter()
        .filter(|&(_, n)| n >= 2)
        .map(|(cl, _)| cl)
        .collect())
}

/// One row of the exception table: a triple and its complete solution set.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub label: &'static str,
    pub triple: Triple,
    pub expected: Vec<Solution>,
}

/// The thirteen exceptional triples with N(a,b,c) > 1, the family row
/// (2, 2^r - 1, 2^r + 1) instantiated for r = 2..=8.
pub fn exception_table() -> Vec<TableEntry> {
    let sol = |x, y, z| Solution::new(x, y, z);
    let mut entries = Vec::new();
    static FAMILY_LABELS: [&str; 7] = [
        "i (r=2)", "i (r=3)", "i (r=4)", "i (r=5)", "i (r=6)", "i (r=7)", "i (r=8)",
    ];
    for r in 2..=8u32 {
        let b = (1u64 << r) - 1;
        let c = (1u64 << r) + 1;
        entries.push(TableEntry {
            label: FAMILY_LABELS[(r - 2) as usize],
            triple: Triple::new(2, b, c).expect("family triple"),
            expected: vec![sol(1, 1, 1), sol(r + 2, 2, 2)],
        });
    }
    let fixed: [(&'static str, (u64, u64, u64), &[(u32, u32, u32)]); 12] = [
        ("ii", (2, 3, 11), &[(1, 2, 1), (3, 1, 1)]),
        ("iii", (2, 3, 35), &[(3, 3, 1), (5, 1, 1)]),
        ("iv", (2, 3, 259), &[(4, 5, 1), (8, 1, 1)]),
        ("v", (2, 5, 3), &[(1, 2, 3), (2, 1, 2)]),
        ("vi", (2, 5, 133), &[(3, 3, 1), (7, 1, 1)]),
        ("vii", (2, 7, 3), &[(1, 1, 2), (5, 2, 4)]),
        ("viii", (2, 89, 91), &[(1, 1, 1), (13, 1, 2)]),
        ("ix", (2, 91, 8283), &[(1, 2, 1), (13, 1, 1)]),
        ("x", (3, 5, 2), &[(1, 1, 3), (1, 3, 7), (3, 1, 5)]),
        ("xi", (3, 10, 13), &[(1, 1, 1), (7, 1, 3)]),
        ("xii", (3, 13, 2), &[(1, 1, 4), (5, 1, 8)]),
        ("xiii", (3, 13, 2200), &[(1, 3, 1), (7, 1, 1)]),
    ];
    for (label, (a, b, c), sols) in fixed {
        entries.push(TableEntry {
            label,
            triple: Triple::new(a, b, c).expect("table triple"),
            expected: sols.iter().map(|&(x, y, z)| sol(x, y, z)).collect(),
        });
    }
    entries
}

/// Result of re-deriving one table entry by brute force.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub entry: TableEntry,
    pub found: Vec<Solution>,
    pub matched: bool,
}

/// Recomputes every exception-table entry within the bound and compares the
/// found solution set against the listed one (equality, no extras).
pub fn verify_exception_table(bound: u32) -> Result<Vec<TableReport>> {
    if bound < 16 {
        return Err(Error::BoundOutOfRange {
            got: bound as u64,
            min: 16,
            max: MAX_BOUND as u64,
        });
    }
    exception_table()
        .into_iter()
        .map(|entry| {
            let found = find_solutions(&entry.triple, bound)?;
            let matched = found == entry.expected;
            Ok(TableReport { entry, found, matched })
        })
        .collect()
}

/// All d with two distinct representations 3^m - 2^n = 3^x - 2^y = d,
/// m != x, over exponents in [1, exp_bound].
pub fn pillai_collisions(exp_bound: u32) -> BTreeSet<BigInt> {
    let mut reps: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut p3 = vec![BigInt::one()];
    let mut p2 = vec![BigInt::one()];
    for _ in 0..exp_bound {
        p3.push(p3.last().unwrap() * 3);
        p2.push(p2.last().unwrap() * 2);
    }
    for m in 1..=exp_bound as usize {
        for n in 1..=exp_bound as usize {
            let d = &p3[m] - &p2[n];
            *reps.entry(d).or_default() += 1;
        }
    }
    // equal d with equal m forces equal n, so two representations already
    // imply distinct leading exponents
    reps.into_iter()
        .filter(|&(_, n)| n >= 2)
        .map(|(d, _)| d)
        .collect()
}

/// Pairs (X, n), X odd, 1 < n <= n_bound, with |X^2 - 2^n| <= 2^(0.26 n).
///
/// The threshold is evaluated exactly: |X^2 - 2^n|^50 <= 2^(13 n).
/// Every returned pair must have X^2 - 2^n equal to 1 or -7.
pub fn gap_lemma_exceptions(x_bound: u64, n_bound: u32) -> Result<Vec<(u64, u32)>> {
    if x_bound < 8 || n_bound < 8 {
        return Err(Error::BoundOutOfRange {
            got: x_bound.min(n_bound as u64),
            min: 8,
            max: u64::MAX,
        });
    }
    let mut out = Vec::new();
    for x in (1..=x_bound).step_by(2) {
        let xx = BigInt::from(x) * x;
        for n in 2..=n_bound {
            let diff = &xx - (BigInt::one() << n);
            let lhs = diff.magnitude().pow(50);
            let rhs = BigUint::one() << (13 * n);
            if lhs <= rhs {
                out.push((x, n));
            }
        }
    }
    Ok(out)
}

/// Number of pairs (z, y) with exponents in [1, exp_bound] satisfying
/// 0 < |c^z - b^y| < max(c^(z/2), b^(y/2)) / 4.
///
/// The fractional bound is compared exactly as 16 (c^z - b^y)^2 < max(c^z, b^y).
/// By Bennett's theorem the count never exceeds 1.
pub fn bennett_pair_count(c: u64, b: u64, exp_bound: u32) -> Result<u32> {
    if c < 2 || b < 2 || exp_bound == 0 || exp_bound > 100 {
        return Err(Error::BoundOutOfRange {
            got: exp_bound as u64,
            min: 1,
            max: 100,
        });
    }
    let pc = powers(c, exp_bound);
    let pb = powers(b, exp_bound);
    let mut count = 0;
    for z in 1..=exp_bound as usize {
        for y in 1..=exp_bound as usize {
            let (hi, max) = if pc[z] >= pb[y] {
                (&pc[z] - &pb[y], &pc[z])
            } else {
                (&pb[y] - &pc[z], &pb[y])
            };
            if hi != BigUint::default() && &(hi.pow(2) * 16u32) < max {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Distinct-prime triples (a, b, c) with a < b, all parts below `max_prime`,
/// holding at least two solutions within the bound. Sorted by (a, b, c).
pub fn multi_solution_prime_triples(
    max_prime: u64,
    bound: u32,
) -> Result<Vec<(Triple, Vec<Solution>)>> {
    let primes = primes_up_to(max_prime.saturating_sub(1));
    let mut out = Vec::new();
    for (i, &a) in primes.iter().enumerate() {
        for &b in &primes[i + 1..] {
            for &c in &primes {
                if c == a || c == b {
                    continue;
                }
                let t = Triple::new(a, b, c).expect("distinct primes are coprime");
                let sols = find_solutions(&t, bound)?;
                if sols.len() >= 2 {
                    out.push((t, sols));
                }
            }
        }
    }
    Ok(out)
}

/// Sweeps coprime triples with 2 <= a < b <= max_base and odd prime
/// c < max_c, returning every triple whose parity-uniqueness check reports
/// a class with two or more solutions.
pub fn parity_uniqueness_sweep(
    max_base: u64,
    max_c: u64,
    bound: u32,
) -> Result<Vec<(Triple, Vec<ParityClass>)>> {
    let cs: Vec<u64> = primes_up_to(max_c.saturating_sub(1))
        .into_iter()
        .filter(|&c| c % 2 == 1)
        .collect();
    let mut out = Vec::new();
    for a in 2..max_base {
        for b in a + 1..=max_base {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            for &c in &cs {
                let Ok(t) = Triple::new(a, b, c) else { continue };
                let classes = check_parity_uniqueness(&t, bound)?;
                if !classes.is_empty() {
                    out.push((t, classes));
                }
            }
        }
    }
    Ok(out)
}
