//! Integer helpers shared across the crate: gcd/lcm, modular exponentiation,
//! deterministic primality, factorization, integer square roots done by
//! bisection, and a small exact rational type for distance bounds.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// lcm with overflow check; orders and exponents stay well inside u64 for
/// every supported group, so a panic here indicates misuse.
pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// base^exp mod m. For m = 1 the result is 0 (the only residue).
pub(crate) fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the listed witnesses decide primality
/// exactly up to 3.3 * 10^24).
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // n is odd, composite, and has no factor below the trial-division bound.
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of n as (prime, multiplicity) pairs, sorted by prime.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|e| e.0 == p) {
        Some(e) => e.1 += 1,
        None => out.push((p, 1)),
    };
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            push(p, &mut out);
            n /= p;
        }
    }
    let mut d = 7u64;
    let mut step = [4u64, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d <= 1_000_000 && d * d <= n {
        while n % d == 0 {
            push(d, &mut out);
            n /= d;
        }
        d += step.next().unwrap();
    }
    // Whatever is left is either 1, a prime, or a product of primes all
    // above the trial bound; split it recursively with Pollard rho.
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    let mut phi = 1u64;
    for (p, e) in factorize(n) {
        phi *= (p - 1) * p.pow(e - 1);
    }
    if n == 1 {
        1
    } else {
        phi
    }
}

/// Floor of the square root, by monotone bisection (no floating point).
pub(crate) fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut lo = 1u64;
    let mut hi = 1u64 << (n.ilog2() / 2 + 1);
    // Invariant: lo² ≤ n < (hi+1)²
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if (mid as u128) * (mid as u128) <= n as u128 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Largest n with n² * f ≤ gamma, i.e. floor(sqrt(gamma / f)) for the exact
/// rational gamma / f.
pub(crate) fn floor_sqrt_div(gamma: u64, f: u64) -> u64 {
    let mut lo = 0u64;
    let mut hi = isqrt(gamma) + 1;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if (mid as u128) * (mid as u128) * (f as u128) <= gamma as u128 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Smallest n with n² * s ≥ gamma, i.e. ceil(sqrt(gamma / s)).
pub(crate) fn ceil_sqrt_div(gamma: u64, s: u64) -> u64 {
    let f = floor_sqrt_div(gamma, s);
    if (f as u128) * (f as u128) * (s as u128) == gamma as u128 {
        f
    } else {
        f + 1
    }
}

/// Small deterministic PRNG (splitmix64) used for sampled structure checks;
/// the seed is fixed and recorded so identical inputs give identical reports.
pub(crate) struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Exact non-negative rational with normalized representation.  Used for
/// distance bounds such as |G|/t_w or the totient product, which the
/// analysis keeps as rationals and only ceils when comparing to integer
/// distances.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio {
            num: num / g.max(1),
            den: den / g.max(1),
        }
    }

    pub fn from_int(n: u64) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn mul(&self, other: &Ratio) -> Ratio {
        // Cross-reduce first so u64 stays sufficient for every supported size.
        let g1 = gcd(self.num, other.den).max(1);
        let g2 = gcd(other.num, self.den).max(1);
        Ratio::new(
            (self.num / g1) * (other.num / g2),
            (self.den / g2) * (other.den / g1),
        )
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// self ≤ k for an integer k, by cross multiplication.
    pub fn le_int(&self, k: u64) -> bool {
        self.num as u128 <= k as u128 * self.den as u128
    }

    /// k < self for an integer k.
    pub fn gt_int(&self, k: u64) -> bool {
        !self.le_int(k)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Ratio {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((n, d)) => {
                let num = n.trim().parse::<u64>().map_err(|e| e.to_string())?;
                let den = d.trim().parse::<u64>().map_err(|e| e.to_string())?;
                if den == 0 {
                    return Err("zero denominator".into());
                }
                Ok(Ratio::new(num, den))
            }
            None => {
                let num = s.trim().parse::<u64>().map_err(|e| e.to_string())?;
                Ok(Ratio::from_int(num))
            }
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
        assert!(is_prime(390001));
        assert!(!is_prime(390001 * 3));
    }

    #[test]
    fn factorization_roundtrip() {
        for n in [1u64, 2, 12, 144, 864, 9216, 95040, 59604644775390624] {
            let f = factorize(n);
            let back: u128 = f.iter().map(|&(p, e)| (p as u128).pow(e)).product();
            if n == 1 {
                assert!(f.is_empty());
            } else {
                assert_eq!(back, n as u128);
            }
        }
    }

    #[test]
    fn isqrt_bisection() {
        for n in 0..2000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        assert_eq!(isqrt(95039), 308);
        assert_eq!(isqrt(21), 4);
        assert_eq!(ceil_sqrt_div(95039, 14), 83);
        assert_eq!(floor_sqrt_div(21, 5), 2);
    }

    #[test]
    fn ratio_arithmetic() {
        let r = Ratio::new(24, 5);
        assert_eq!(r.to_string(), "24/5");
        assert_eq!(r.ceil(), 5);
        assert!(r.le_int(5));
        assert!(r.gt_int(4));
        let p = Ratio::new(2, 1).mul(&Ratio::new(3, 2));
        assert_eq!(p, Ratio::from_int(3));
        assert_eq!("24/5".parse::<Ratio>().unwrap(), r);
        assert!(Ratio::new(6, 4) == Ratio::new(3, 2));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(144), 48);
    }
}
