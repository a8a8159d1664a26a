//! Exact integer arithmetic on 64-bit values: primality, factorisation,
//! prime-divisor sets, prime-power recognition, and the maximal-subgroup
//! indices of `PSL2(2^f)`.
//!
//! Factorisation runs trial division up to 10^6 and falls back to Brent's
//! variant of Pollard rho with a deterministic Miller–Rabin test, which is
//! exact for every `u64`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// `n = product of p^e`, primes increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }

    pub fn recompose(&self) -> u64 {
        self.factors.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the first twelve prime bases are exact below 2^64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
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

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A non-trivial divisor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let mut q = 1u64;
        let mut r = 1u64;
        let mut g = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot: walk back one step at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_large(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_default() += 1;
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Domain("cannot factor 0".into()));
    }
    let mut rest = n;
    let mut map = BTreeMap::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            map.insert(p, e);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        if rest < TRIAL_LIMIT * TRIAL_LIMIT {
            // no factor below sqrt(rest) remained, so rest is prime
            *map.entry(rest).or_default() += 1;
        } else {
            split_large(rest, &mut map);
        }
    }
    Ok(Factorization { value: n, factors: map.into_iter().collect() })
}

/// The set of prime divisors of `n`, increasing; empty for `n = 1`.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.primes())
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let f = factorize(n).ok()?;
    match f.factors.as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Product of prime powers kept in factored form, for values that may not fit
/// in 64 bits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactoredInt {
    factors: BTreeMap<u64, i64>,
}

impl FactoredInt {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of(n: u64) -> Result<Self> {
        let mut out = Self::one();
        out.mul_assign(n)?;
        Ok(out)
    }

    pub fn mul_assign(&mut self, n: u64) -> Result<()> {
        for (p, e) in factorize(n)?.factors {
            *self.factors.entry(p).or_default() += e as i64;
        }
        Ok(())
    }

    /// Exact division; fails when `n` does not divide the value.
    pub fn div_assign(&mut self, n: u64) -> Result<()> {
        for (p, e) in factorize(n)?.factors {
            let slot = self.factors.entry(p).or_default();
            *slot -= e as i64;
            if *slot < 0 {
                return Err(Error::Domain(format!("{n} does not divide the value")));
            }
        }
        self.factors.retain(|_, e| *e > 0);
        Ok(())
    }

    pub fn factors(&self) -> Vec<(u64, u32)> {
        self.factors.iter().map(|(&p, &e)| (p, e as u32)).collect()
    }

    pub fn prime_count(&self) -> usize {
        self.factors.len()
    }

    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors() .as_slice() {
            [(p, e)] => Some((*p, *e)),
            _ => None,
        }
    }

    /// The value, when it fits in 128 bits.
    pub fn value(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p as u128)?;
            }
        }
        Some(acc)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    /// `2^(f-1)(2^f+1)`
    DihedralMinus,
    /// `2^(f-1)(2^f-1)`
    DihedralPlus,
    /// `2^f+1`, the Borel subgroup
    Borel,
    /// `|PSL2(2^f)| / |PSL2(2^b)|` for a subfield with `f/b` prime
    Subfield { b: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalIndex {
    pub kind: IndexKind,
    pub value: u128,
    pub factored: FactoredInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalIndexSet {
    pub f: u32,
    pub indices: Vec<MaximalIndex>,
}

impl MaximalIndexSet {
    pub fn values(&self) -> Vec<u128> {
        self.indices.iter().map(|i| i.value).collect()
    }
}

pub const F_MIN: u32 = 2;
pub const F_MAX: u32 = 31;

fn check_f(f: u32) -> Result<()> {
    if !(F_MIN..=F_MAX).contains(&f) {
        return Err(Error::Domain(format!("f = {f} outside {F_MIN}..={F_MAX}")));
    }
    Ok(())
}

/// `(2^(2f) - 1)` in factored form, via `(2^f - 1)(2^f + 1)`.
fn factored_two_pow_2f_minus_one(f: u32) -> Result<FactoredInt> {
    let mut x = FactoredInt::of((1u64 << f) - 1)?;
    x.mul_assign((1u64 << f) + 1)?;
    Ok(x)
}

/// Indices of the maximal subgroups of `PSL2(2^f)`: the two dihedral
/// normalisers, the Borel subgroup, and one subfield subgroup `PSL2(2^b)` for
/// each prime `f/b`.
pub fn psl2_even_maximal_indices(f: u32) -> Result<MaximalIndexSet> {
    check_f(f)?;
    let q = 1u64 << f;
    let half = 1u64 << (f - 1);
    let mut indices = Vec::new();
    for (kind, odd) in [(IndexKind::DihedralMinus, q + 1), (IndexKind::DihedralPlus, q - 1)] {
        let mut x = FactoredInt::of(half)?;
        x.mul_assign(odd)?;
        indices.push(MaximalIndex { kind, value: half as u128 * odd as u128, factored: x });
    }
    indices.push(MaximalIndex { kind: IndexKind::Borel, value: (q + 1) as u128, factored: FactoredInt::of(q + 1)? });
    for n in prime_divisors(f as u64)? {
        let b = f / n as u32;
        let mut x = factored_two_pow_2f_minus_one(f)?;
        x.mul_assign(1u64 << (f - b))?;
        x.div_assign((1u64 << b) - 1)?;
        x.div_assign((1u64 << b) + 1)?;
        let value = x.value().ok_or_else(|| Error::Overflow(format!("subfield index for f={f}, b={b}")))?;
        indices.push(MaximalIndex { kind: IndexKind::Subfield { b }, value, factored: x });
    }
    Ok(MaximalIndexSet { f, indices })
}

/// `Ok(None)` when no maximal index of `PSL2(2^f)` is a prime power,
/// otherwise the first index that is.
pub fn no_prime_power_index(f: u32) -> Result<Option<MaximalIndex>> {
    let set = psl2_even_maximal_indices(f)?;
    Ok(set.indices.into_iter().find(|i| i.factored.as_prime_power().is_some()))
}

/// Whether `(2^(2f) - 1) / (2^(2b) - 1)` is a prime power.
pub fn ratio_prime_power_check(f: u32, b: u32) -> Result<bool> {
    check_f(f)?;
    if b == 0 || !f.is_multiple_of(b) {
        return Err(Error::Domain(format!("b = {b} does not divide f = {f}")));
    }
    if f == b {
        return Err(Error::Domain("ratio is 1 when b = f".into()));
    }
    let mut x = factored_two_pow_2f_minus_one(f)?;
    x.div_assign((1u64 << b) - 1)?;
    x.div_assign((1u64 << b) + 1)?;
    Ok(x.as_prime_power().is_some())
}

/// Whether `|pi(2^f - 1)| >= 2` and `|pi(2^f + 1)| >= 2`, the side condition
/// under which the index scan is meaningful.
pub fn both_sides_composite_support(f: u32) -> Result<bool> {
    check_f(f)?;
    let q = 1u64 << f;
    Ok(prime_divisors(q - 1)?.len() >= 2 && prime_divisors(q + 1)?.len() >= 2)
}
