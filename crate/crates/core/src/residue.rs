//! Exact integer and residue-class arithmetic for `Z/nZ`.
//!
//! Residues are stored as canonical representatives in `[0, n)`. Moduli are
//! bounded by `2^63` so that every intermediate product fits in `u128` and
//! every Bézout computation fits in `i128`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported modulus (exclusive).
pub const MODULUS_LIMIT: u64 = 1 << 63;

/// Default bound for [`trial_factor`].
pub const DEFAULT_TRIAL_BOUND: u64 = 1 << 20;

/// The residue class ring `Z/nZ` with `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueRing {
    modulus: u64,
}

impl ResidueRing {
    pub fn new(modulus: u64) -> Result<Self> {
        if !(2..MODULUS_LIMIT).contains(&modulus) {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(ResidueRing { modulus })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn element(&self, value: u64) -> ResidueElement {
        ResidueElement {
            value: value % self.modulus,
            ring: *self,
        }
    }

    /// Reduces an arbitrary signed integer to its canonical representative.
    #[inline]
    pub fn reduce(&self, value: i128) -> u64 {
        value.rem_euclid(self.modulus as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.modulus as u128) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    pub fn is_unit(&self, a: u64) -> bool {
        gcd(a, self.modulus) == 1
    }

    pub fn inverse(&self, a: u64) -> Option<u64> {
        mod_inverse(a, self.modulus)
    }

    /// Canonical generator of the ideal `aZ/n + bZ/n`, a divisor of `n`
    /// (returned as `0` when the ideal is zero).
    pub fn ideal_gcd(&self, a: u64, b: u64) -> u64 {
        let g = gcd(gcd(a, b), self.modulus);
        g % self.modulus
    }

    /// Canonical generator of the ideal `aZ/n ∩ bZ/n`.
    pub fn ideal_lcm(&self, a: u64, b: u64) -> u64 {
        let da = gcd(a, self.modulus);
        let db = gcd(b, self.modulus);
        let l = (da as u128 / gcd(da, db) as u128) * db as u128;
        (l % self.modulus as u128) as u64
    }

    /// Does `a` divide `b` in `Z/nZ`?
    pub fn divides(&self, a: u64, b: u64) -> bool {
        b.is_multiple_of(gcd(a, self.modulus))
    }

    /// Smallest non-negative `c` with `c * a ≡ b (mod n)`, if one exists.
    pub fn solve_linear(&self, a: u64, b: u64) -> Option<u64> {
        let n = self.modulus;
        let g = gcd(a, n);
        if !b.is_multiple_of(g) {
            return None;
        }
        let reduced_n = n / g;
        if reduced_n == 1 {
            return Some(0);
        }
        let inv = mod_inverse((a / g) % reduced_n, reduced_n)?;
        Some(((b / g) as u128 * inv as u128 % reduced_n as u128) as u64)
    }
}

impl fmt::Display for ResidueRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}Z", self.modulus)
    }
}

/// An element of `Z/nZ` in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElement {
    value: u64,
    ring: ResidueRing,
}

impl ResidueElement {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Outcome of [`try_invert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invertibility {
    Inverse(ResidueElement),
    /// Lifted value `a` of a nonzero zero divisor: `1 < gcd(a, n) < n`.
    NonInvertibleWitness(u64),
}

/// Result of splitting a modulus from a non-invertible witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModulusSplit {
    /// `n = p * q` with `gcd(p, q) = 1` and `p, q >= 2`.
    CoprimePair { p: u64, q: u64 },
    /// `n = base^exponent` with `exponent >= 2`; `witness` is the refined
    /// element `a'` with `gcd(a', base) = base`.
    PerfectPower { base: u64, exponent: u32, witness: u64 },
}

impl ModulusSplit {
    /// Product of the split parts; always equals the split modulus.
    pub fn reassemble(&self) -> Option<u64> {
        match *self {
            ModulusSplit::CoprimePair { p, q } => p.checked_mul(q),
            ModulusSplit::PerfectPower { base, exponent, .. } => base.checked_pow(exponent),
        }
    }
}

/// Result of [`trial_factor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factorization {
    /// Prime powers `(p, e)` in increasing order of `p`.
    Complete(Vec<(u64, u32)>),
    /// Primes found below the bound plus the unfactored cofactor.
    Incomplete { found: Vec<(u64, u32)>, cofactor: u64 },
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(a, b) >= 0` and
/// `s*a + t*b = g`.
///
/// For `a == b` the coefficients are `(1, 0)` (up to sign), so that the
/// GCD-polynomial of a polynomial with itself is the polynomial.
pub fn xgcd(a: i128, b: i128) -> Result<(i128, i128, i128)> {
    if a == 0 && b == 0 {
        return Err(Error::domain("xgcd(0, 0) is undefined"));
    }
    if a == b {
        return Ok((a.abs(), a.signum(), 0));
    }
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        Ok((-old_r, -old_s, -old_t))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, s, _) = xgcd(a as i128, m as i128).ok()?;
    (g == 1).then(|| s.rem_euclid(m as i128) as u64)
}

/// Generator `n / gcd(c, n)` of the annihilator of `c`; zero iff `c` is a unit.
pub fn annihilator(c: ResidueElement) -> ResidueElement {
    let n = c.ring.modulus;
    c.ring.element(n / gcd(c.value, n))
}

pub fn try_invert(c: ResidueElement) -> Result<Invertibility> {
    if c.value == 0 {
        return Err(Error::domain("cannot invert zero"));
    }
    Ok(match c.ring.inverse(c.value) {
        Some(inv) => Invertibility::Inverse(c.ring.element(inv)),
        None => Invertibility::NonInvertibleWitness(c.value),
    })
}

/// Largest divisor of `n` coprime to `m`.
fn coprime_part(mut n: u64, m: u64) -> u64 {
    let mut g = gcd(n, m);
    while g > 1 {
        n /= g;
        g = gcd(n, g);
    }
    n
}

/// A unit `u` of `Z/nZ` with `u * c ≡ gcd(c, n) (mod n)`.
///
/// Writes `c = g c'`, `n = g n'`, takes `u0 = c'^{-1} mod n'`, then moves
/// `u0` along `u0 + t n'` so it becomes `1` modulo the part of `n` coprime
/// to `n'`. That fixes every prime of `n` not already covered by `n'`.
pub fn unit_stabilizer(c: i128, n: u64) -> u64 {
    assert!(n >= 2, "unit_stabilizer needs n >= 2");
    let c = c.rem_euclid(n as i128) as u64;
    let g = gcd(c, n);
    let reduced_n = n / g;
    let u0 = if reduced_n == 1 {
        0
    } else {
        mod_inverse((c / g) % reduced_n, reduced_n).expect("c/g is coprime to n/g")
    };
    let r = coprime_part(n, reduced_n);
    if r == 1 {
        return u0 % n;
    }
    let nr_inv = mod_inverse(reduced_n % r, r).expect("n/g is coprime to its coprime part");
    let diff = (1i128 - u0 as i128).rem_euclid(r as i128) as u128;
    let t = (diff * nr_inv as u128 % r as u128) as u64;
    ((u0 as u128 + t as u128 * reduced_n as u128) % n as u128) as u64
}

/// Pairwise gcd refinement into a coprime base; every input factors over the
/// output. Sorted ascending, no ones.
pub fn refine_coprime_base(items: &[u64]) -> Vec<u64> {
    let mut base: Vec<u64> = items.to_vec();
    loop {
        base.retain(|&x| x > 1);
        base.sort_unstable();
        base.dedup();
        let mut split = None;
        'search: for i in 0..base.len() {
            for j in i + 1..base.len() {
                let d = gcd(base[i], base[j]);
                if d > 1 {
                    split = Some((i, j, d));
                    break 'search;
                }
            }
        }
        let Some((i, j, d)) = split else {
            return base;
        };
        let (x, y) = (base[i], base[j]);
        base.swap_remove(j);
        base.swap_remove(i);
        base.extend([d, x / d, y / d]);
    }
}

/// Splits `n` from a witness `a` with `1 < gcd(a, n) < n`.
pub fn factor_refine_split(a: u64, n: u64) -> Result<ModulusSplit> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let g = gcd(a, n);
    if g <= 1 || g >= n {
        return Err(Error::domain(format!("gcd({a}, {n}) = {g} is not a proper divisor")));
    }
    let base = refine_coprime_base(&[g, n / g]);
    let m = *base
        .iter()
        .find(|&&s| n.is_multiple_of(s))
        .expect("refined base of n's divisors contains a divisor of n");
    let mut rest = n;
    let mut power = 1u64;
    let mut k = 0u32;
    while rest.is_multiple_of(m) {
        rest /= m;
        power *= m;
        k += 1;
    }
    if rest == 1 {
        Ok(ModulusSplit::PerfectPower {
            base: m,
            exponent: k,
            witness: a % n,
        })
    } else {
        Ok(ModulusSplit::CoprimePair { p: rest, q: power })
    }
}

/// Trial division by all integers up to `bound`. A cofactor below the square
/// of the next trial divisor is prime and completes the factorization.
pub fn trial_factor(n: u64, bound: u64) -> Factorization {
    let mut rest = n;
    let mut found = Vec::new();
    let mut p = 2u64;
    while p <= bound && (p as u128) * (p as u128) <= rest as u128 {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            found.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest == 1 {
        return Factorization::Complete(found);
    }
    if (p as u128) * (p as u128) > rest as u128 {
        found.push((rest, 1));
        found.sort_unstable();
        return Factorization::Complete(found);
    }
    Factorization::Incomplete { found, cofactor: rest }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: u64) -> ResidueRing {
        ResidueRing::new(n).unwrap()
    }

    #[test]
    fn xgcd_examples() {
        assert_eq!(xgcd(2, 3).unwrap(), (1, -1, 1));
        assert_eq!(xgcd(0, 5).unwrap(), (5, 0, 1));
        assert_eq!(xgcd(12, 18).unwrap(), (6, -1, 1));
        assert_eq!(xgcd(7, 7).unwrap(), (7, 1, 0));
        assert!(xgcd(0, 0).is_err());
    }

    #[test]
    fn xgcd_negative_inputs() {
        for (a, b) in [(-4, 6), (4, -6), (-9, -12), (0, -3), (-5, -5)] {
            let (g, s, t) = xgcd(a, b).unwrap();
            assert!(g > 0);
            assert_eq!(s * a + t * b, g);
            assert_eq!(a % g, 0);
            assert_eq!(b % g, 0);
        }
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(annihilator(ring(6).element(2)).value(), 3);
        assert_eq!(annihilator(ring(6).element(5)).value(), 0);
        assert_eq!(annihilator(ring(12).element(4)).value(), 3);
        assert_eq!(annihilator(ring(12).element(0)).value(), 1);
    }

    #[test]
    fn try_invert_examples() {
        assert_eq!(
            try_invert(ring(6).element(5)).unwrap(),
            Invertibility::Inverse(ring(6).element(5))
        );
        assert_eq!(
            try_invert(ring(6).element(2)).unwrap(),
            Invertibility::NonInvertibleWitness(2)
        );
        assert_eq!(
            try_invert(ring(9).element(3)).unwrap(),
            Invertibility::NonInvertibleWitness(3)
        );
        assert!(try_invert(ring(9).element(0)).is_err());
    }

    #[test]
    fn unit_stabilizer_examples() {
        assert_eq!(unit_stabilizer(8, 12), 5);
        assert_eq!(unit_stabilizer(5, 6), 5);
        assert_eq!(unit_stabilizer(3, 9), 1);
        assert_eq!(unit_stabilizer(0, 9), 1);
        assert_eq!(unit_stabilizer(-4, 12), unit_stabilizer(8, 12));
    }

    #[test]
    fn factor_refine_split_examples() {
        assert_eq!(
            factor_refine_split(4, 12).unwrap(),
            ModulusSplit::CoprimePair { p: 4, q: 3 }
        );
        assert!(matches!(
            factor_refine_split(2, 8).unwrap(),
            ModulusSplit::PerfectPower {
                base: 2,
                exponent: 3,
                ..
            }
        ));
        assert!(matches!(
            factor_refine_split(6, 36).unwrap(),
            ModulusSplit::PerfectPower {
                base: 6,
                exponent: 2,
                ..
            }
        ));
        assert!(factor_refine_split(5, 6).is_err());
        assert!(factor_refine_split(0, 6).is_err());
        assert!(factor_refine_split(6, 6).is_err());
    }

    #[test]
    fn trial_factor_examples() {
        assert_eq!(
            trial_factor(30, 10),
            Factorization::Complete(vec![(2, 1), (3, 1), (5, 1)])
        );
        assert_eq!(trial_factor(72, 10), Factorization::Complete(vec![(2, 3), (3, 2)]));
        assert!(matches!(
            trial_factor(32771 * 32779, 100),
            Factorization::Incomplete { cofactor, .. } if cofactor == 32771 * 32779
        ));
        assert_eq!(
            trial_factor(32771 * 32779, DEFAULT_TRIAL_BOUND),
            Factorization::Complete(vec![(32771, 1), (32779, 1)])
        );
        assert_eq!(trial_factor(97, 10), Factorization::Complete(vec![(97, 1)]));
        assert!(matches!(trial_factor(97, 5), Factorization::Incomplete { .. }));
    }

    #[test]
    fn solve_linear_picks_smallest() {
        let r = ring(6);
        assert_eq!(r.solve_linear(2, 4), Some(2));
        assert_eq!(r.solve_linear(2, 3), None);
        assert_eq!(ring(30).solve_linear(3, 1), None);
        assert_eq!(r.solve_linear(5, 1), Some(5));
        assert_eq!(r.solve_linear(0, 0), Some(0));
    }

    #[test]
    fn ideal_gcd_lcm_generate_sum_and_intersection() {
        // Exhaustive ideal comparison for small moduli; ideals are enumerated
        // as sets of multiples, and sums/intersections computed on those sets.
        for n in 2..=60u64 {
            let r = ring(n);
            let ideals: Vec<Vec<u64>> = (0..n)
                .map(|g| {
                    let mut v: Vec<u64> = (0..n).map(|k| r.mul(k, g)).collect();
                    v.sort_unstable();
                    v.dedup();
                    v
                })
                .collect();
            let mut seen = std::collections::HashMap::new();
            for a in 0..n {
                for b in 0..n {
                    let ia = &ideals[a as usize];
                    let ib = &ideals[b as usize];
                    let (sum, meet) = seen
                        .entry((ia.clone(), ib.clone()))
                        .or_insert_with(|| {
                            let mut sum: Vec<u64> =
                                ia.iter().flat_map(|&x| ib.iter().map(move |&y| (x + y) % n)).collect();
                            sum.sort_unstable();
                            sum.dedup();
                            let meet: Vec<u64> = ia.iter().copied().filter(|x| ib.contains(x)).collect();
                            (sum, meet)
                        })
                        .clone();
                    assert_eq!(ideals[r.ideal_gcd(a, b) as usize], sum, "gcd n={n} a={a} b={b}");
                    assert_eq!(ideals[r.ideal_lcm(a, b) as usize], meet, "lcm n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn modulus_bounds() {
        assert!(ResidueRing::new(0).is_err());
        assert!(ResidueRing::new(1).is_err());
        assert!(ResidueRing::new(MODULUS_LIMIT).is_err());
        assert!(ResidueRing::new(MODULUS_LIMIT - 1).is_ok());
    }
}
