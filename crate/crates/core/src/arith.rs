//! Integer arithmetic primitives: gcd and modular inverses, deterministic
//! factorization, p-adic valuations, multiplicative orders, and a solver for
//! systems of congruence classes.
//!
//! All public inputs are expected to stay below 2^63; internal products are
//! carried out in 128-bit intermediates.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{a} has no inverse modulo {modulus}")]
    NotInvertible { a: i64, modulus: u64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    let l = a as u128 / gcd(a, b) as u128 * b as u128;
    u64::try_from(l).expect("lcm overflows u64")
}

pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    base %= m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Same as [`mod_pow`] for exponents that do not fit in a `u64`.
pub fn mod_pow_wide(mut base: u64, mut exp: u128, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    base %= m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Canonical residue of a signed integer modulo `m`.
pub fn reduce_i64(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin; the base set is exact for all n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for a in MR_BASES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho. Returns a nontrivial factor of composite odd `n`,
/// or `n` itself when the parameter `c` fails.
fn pollard_brent(n: u64, c: u64) -> u64 {
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = 0u64;
    let mut ys = 0u64;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = (mod_mul(y, y, n) + c) % n;
        }
        let mut k = 0u64;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = (mod_mul(y, y, n) + c) % n;
                q = mod_mul(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r <<= 1;
    }
    if g == n {
        loop {
            ys = (mod_mul(ys, ys, n) + c) % n;
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    g
}

fn split(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let mut c = 1u64;
    let d = loop {
        let d = pollard_brent(n, c);
        if d != 1 && d != n {
            break d;
        }
        c += 1;
    };
    split(d, out);
    split(n / d, out);
}

/// A prime-power factorization; pairs `(p, e)` sorted ascending by `p`.
/// The empty factorization represents 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    /// All positive divisors, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = out.clone();
            let mut pe = 1u64;
            for _ in 0..e {
                pe *= p;
                out.extend(prev.iter().map(|d| d * pe));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Deterministic factorization: trial division to 2^16, then Pollard rho with
/// Brent cycling on the remaining cofactor.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize: argument must be positive");
    let mut map = BTreeMap::new();
    let mut rem = n;
    let mut e = rem.trailing_zeros();
    if e > 0 {
        map.insert(2u64, e);
        rem >>= e;
    }
    let mut p = 3u64;
    while p <= 1 << 16 && p * p <= rem {
        if rem % p == 0 {
            e = 0;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            map.insert(p, e);
        }
        p += 2;
    }
    if rem > 1 {
        split(rem, &mut map);
    }
    Factorization {
        factors: map.into_iter().collect(),
    }
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(p: u64, n: i64) -> u32 {
    assert!(is_prime(p), "valuation: {p} is not prime");
    assert!(n != 0, "valuation: argument must be nonzero");
    let mut x = n.unsigned_abs();
    let mut e = 0;
    while x % p == 0 {
        x /= p;
        e += 1;
    }
    e
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .factors()
        .iter()
        .fold(1u64, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Carmichael function: the exponent of the unit group modulo `n`.
pub fn carmichael(n: u64) -> u64 {
    let mut l = 1u64;
    for &(p, e) in factorize(n).factors() {
        let comp = if p == 2 {
            match e {
                1 => 1,
                2 => 2,
                _ => 1u64 << (e - 2),
            }
        } else {
            (p - 1) * p.pow(e - 1)
        };
        l = lcm(l, comp);
    }
    l
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inv(a: i64, m: u64) -> Result<u64, ArithError> {
    assert!(m >= 1, "mod_inv: modulus must be positive");
    if m == 1 {
        return Ok(0);
    }
    mod_inv_u(reduce_i64(a, m), m).ok_or(ArithError::NotInvertible { a, modulus: m })
}

pub(crate) fn mod_inv_u(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `a` modulo `m`, computed by factoring the group
/// exponent and stripping prime factors (never by linear scan).
pub fn mult_order(a: i64, m: u64) -> Result<u64, ArithError> {
    assert!(m >= 1, "mult_order: modulus must be positive");
    if m == 1 {
        return Ok(1);
    }
    let x = reduce_i64(a, m);
    if gcd(x, m) != 1 {
        return Err(ArithError::NotInvertible { a, modulus: m });
    }
    let mut t = carmichael(m);
    for &(r, _) in factorize(t).factors() {
        while t % r == 0 && mod_pow(x, t / r, m) == 1 {
            t /= r;
        }
    }
    Ok(t)
}

/// Order of `a*b^-1` modulo `p^e` for an odd prime `p`, lifted from the order
/// modulo `p`.
///
/// Computes `lambda = v_p((a*b^-1)^ord_p - 1)` with the power taken modulo
/// `p^(e+1)` when that fits in a `u64` (modulo `p^e` otherwise), capping the
/// valuation at `e`; only the comparison `e <= lambda` matters for the result.
pub fn lift_order(p: u64, e: u32, a: i64, b: i64) -> Result<u64, ArithError> {
    if p == 2 || !is_prime(p) {
        return Err(ArithError::NotOddPrime(p));
    }
    assert!(e >= 1, "lift_order: exponent must be positive");
    if reduce_i64(a, p) == 0 {
        return Err(ArithError::NotInvertible { a, modulus: p });
    }
    if reduce_i64(b, p) == 0 {
        return Err(ArithError::NotInvertible { a: b, modulus: p });
    }
    let x1 = mod_mul(reduce_i64(a, p), mod_inv(b, p)?, p);
    let base_order = mult_order(x1 as i64, p)?;
    if e == 1 {
        return Ok(base_order);
    }
    let pe = checked_prime_power(p, e);
    let probe = pe.checked_mul(p).unwrap_or(pe);
    let x = mod_mul(reduce_i64(a, probe), mod_inv(b, probe)?, probe);
    let t = mod_pow(x, base_order, probe);
    let lambda = if t == 1 {
        e
    } else {
        let mut v = 0u32;
        let mut y = t - 1;
        while y % p == 0 {
            y /= p;
            v += 1;
        }
        v.min(e)
    };
    Ok(if e <= lambda {
        base_order
    } else {
        base_order * p.pow(e - lambda)
    })
}

pub(crate) fn checked_prime_power(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("prime power overflows u64")
}

/// The residue class `{r + t*L : t in Z}` with `0 <= r < L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceClass {
    residue: u64,
    modulus: u64,
}

impl CongruenceClass {
    pub fn new(residue: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "congruence class needs a positive modulus");
        Self {
            residue: residue % modulus,
            modulus,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, x: u64) -> bool {
        x % self.modulus == self.residue
    }

    /// Smallest member of the class that is >= 1.
    pub fn smallest_positive(&self) -> u64 {
        if self.residue == 0 {
            self.modulus
        } else {
            self.residue
        }
    }
}

impl fmt::Display for CongruenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

/// Intersection of two congruence classes. `None` when they are incompatible,
/// i.e. the residues differ modulo `gcd` of the moduli.
pub fn crt_merge(c1: CongruenceClass, c2: CongruenceClass) -> Option<CongruenceClass> {
    let g = gcd(c1.modulus, c2.modulus);
    let diff = c2.residue as i128 - c1.residue as i128;
    if diff.rem_euclid(g as i128) != 0 {
        return None;
    }
    let l = c1.modulus as u128 / g as u128 * c2.modulus as u128;
    let l = u64::try_from(l).expect("combined modulus overflows u64");
    let m2g = c2.modulus / g;
    if m2g == 1 {
        return Some(CongruenceClass::new(c1.residue, l));
    }
    let step = (c1.modulus / g) % m2g;
    let inv = mod_inv_u(step, m2g).expect("coprime cofactors");
    let dd = diff.rem_euclid(c2.modulus as i128) as u64;
    let t = mod_mul(dd / g % m2g, inv, m2g);
    let r = (c1.residue as u128 + c1.modulus as u128 * t as u128) % l as u128;
    Some(CongruenceClass::new(r as u64, l))
}

/// Left fold of [`crt_merge`] over a nonempty list; the result is independent
/// of the order of the inputs.
pub fn crt_system(classes: &[CongruenceClass]) -> Option<CongruenceClass> {
    assert!(!classes.is_empty(), "crt_system: empty system");
    let mut acc = classes[0];
    for &c in &classes[1..] {
        acc = crt_merge(acc, c)?;
    }
    Some(acc)
}
