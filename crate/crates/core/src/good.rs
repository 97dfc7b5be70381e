//! Membership of an integer `d` in the divisor family of the sequence
//! `a^(k*s+T) + b^(k*s+T)`, `s >= 1`, for coprime nonzero `a`, `b` and
//! `0 <= T < k`.
//!
//! [`decide`] is the production route: it reduces the question to linear
//! congruences on the multiplicative orders of `a*b^-1` at the odd prime
//! powers dividing `d`, merges them by CRT, and handles the power of two in
//! `d` through the 2-adic valuation of `a + b` plus a parity constraint on
//! the exponent. The `check_*` functions are the independent theorem-level
//! characterizations used to cross-check it, and [`brute_force_member`] is
//! the direct search oracle.

use thiserror::Error;

use crate::arith::{
    checked_prime_power, crt_merge, crt_system, factorize, gcd, gcd_i64, lcm, mod_inv, mod_mul,
    mod_pow, mod_pow_wide, mult_order, reduce_i64, CongruenceClass,
};

/// The quadruple `(a, b, k, T)` defining the sequence `a^(k*s+T) + b^(k*s+T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoodParams {
    pub a: i64,
    pub b: i64,
    pub k: u64,
    pub t: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("a and b must be nonzero")]
    ZeroBase,
    #[error("a and b must be coprime")]
    BasesNotCoprime,
    #[error("offset T={t} out of range: need 0 <= T < k={k}")]
    OffsetOutOfRange { t: u64, k: u64 },
}

impl GoodParams {
    pub fn new(a: i64, b: i64, k: u64, t: u64) -> Result<Self, ParamError> {
        if a == 0 || b == 0 {
            return Err(ParamError::ZeroBase);
        }
        if gcd_i64(a, b) != 1 {
            return Err(ParamError::BasesNotCoprime);
        }
        if k == 0 || t >= k {
            return Err(ParamError::OffsetOutOfRange { t, k });
        }
        Ok(Self { a, b, k, t })
    }
}

/// The distinct "no" sites of the decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rejection {
    /// `gcd(d, ab) != 1`; no term of the sequence is divisible by `d`.
    NotCoprimeToAb,
    /// Some odd prime power of `d` has `ord(a*b^-1)` odd.
    OddOrderObstruction,
    /// The local congruence `k*s = ord/2 - T (mod ord)` is unsolvable.
    CongruenceObstruction,
    /// The power of two in `d` exceeds the 2-adic valuation of `a + b`.
    TwoAdicOverflow,
    /// `k*s + T` is even for every `s` in the solution class.
    ParityObstruction,
    /// The per-prime solution classes are pairwise inconsistent.
    CrtIncompatible,
}

impl Rejection {
    pub fn slug(&self) -> &'static str {
        match self {
            Rejection::NotCoprimeToAb => "not-coprime-to-ab",
            Rejection::OddOrderObstruction => "odd-order-obstruction",
            Rejection::CongruenceObstruction => "congruence-obstruction",
            Rejection::TwoAdicOverflow => "two-adic-overflow",
            Rejection::ParityObstruction => "parity-obstruction",
            Rejection::CrtIncompatible => "crt-incompatible",
        }
    }
}

impl std::fmt::Display for Rejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.slug())
    }
}

/// Outcome of [`decide`]: membership plus, on success, the smallest witness
/// exponent and the full solution class of valid exponents `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub witness: Option<u64>,
    pub solution_class: Option<CongruenceClass>,
    pub reason: Option<Rejection>,
}

impl Verdict {
    fn no(reason: Rejection) -> Self {
        Verdict {
            member: false,
            witness: None,
            solution_class: None,
            reason: Some(reason),
        }
    }

    fn yes(d: u64, params: &GoodParams, class: CongruenceClass) -> Self {
        let witness = class.smallest_positive();
        debug_assert!(witness_holds(d, params, witness), "invalid witness {witness} for d={d}");
        Verdict {
            member: true,
            witness: Some(witness),
            solution_class: Some(class),
            reason: None,
        }
    }
}

/// Direct modular check that `d | a^(k*s+T) + b^(k*s+T)`.
pub fn witness_holds(d: u64, params: &GoodParams, s: u64) -> bool {
    let n = params.k as u128 * s as u128 + params.t as u128;
    let av = mod_pow_wide(reduce_i64(params.a, d), n, d);
    let bv = mod_pow_wide(reduce_i64(params.b, d), n, d);
    (av + bv) % d == 0
}

/// Decide whether `d` divides some term of the sequence, producing the
/// smallest witness exponent when it does.
pub fn decide(d: u64, params: &GoodParams) -> Verdict {
    assert!(d >= 1, "decide: d must be positive");
    if d == 1 {
        return Verdict::yes(d, params, CongruenceClass::new(0, 1));
    }
    if gcd(params.a.unsigned_abs() % d, d) != 1 || gcd(params.b.unsigned_abs() % d, d) != 1 {
        return Verdict::no(Rejection::NotCoprimeToAb);
    }

    let eps = d.trailing_zeros();
    let d0 = d >> eps;

    let class = if d0 > 1 {
        let mut locals = Vec::new();
        for &(p, e) in factorize(d0).factors() {
            let pe = checked_prime_power(p, e);
            let x = mod_mul(
                reduce_i64(params.a, pe),
                mod_inv(params.b, pe).expect("coprime to d"),
                pe,
            );
            let ord = mult_order(x as i64, pe).expect("unit");
            if ord % 2 == 1 {
                return Verdict::no(Rejection::OddOrderObstruction);
            }
            let g = gcd(params.k, ord);
            let c = (ord / 2) as i128 - params.t as i128;
            let c_mod = c.rem_euclid(ord as i128) as u64;
            if c_mod % g != 0 {
                return Verdict::no(Rejection::CongruenceObstruction);
            }
            // One solution class of k*s = c (mod ord): s = s_i (mod ord/g).
            let l = ord / g;
            let s_i = if l == 1 {
                0
            } else {
                let inv = mod_inv((params.k / g % l) as i64, l).expect("coprime cofactor");
                mod_mul(c_mod / g % l, inv, l)
            };
            locals.push(CongruenceClass::new(s_i, l));
        }
        match crt_system(&locals) {
            Some(c) => c,
            None => return Verdict::no(Rejection::CrtIncompatible),
        }
    } else {
        CongruenceClass::new(0, 1)
    };

    if eps <= 1 {
        // `2 | a^N + b^N` for all N once a, b are odd, which the gate ensures
        // whenever d is even.
        return Verdict::yes(d, params, class);
    }

    // eps >= 2: need v2(a^N + b^N) = v2(a + b) >= eps, which forces N odd.
    let sum = params.a as i128 + params.b as i128;
    if sum != 0 {
        let nu2 = sum.unsigned_abs().trailing_zeros();
        if eps > nu2 {
            return Verdict::no(Rejection::TwoAdicOverflow);
        }
    }
    if params.k % 2 == 0 {
        if params.t % 2 == 0 {
            return Verdict::no(Rejection::ParityObstruction);
        }
        Verdict::yes(d, params, class)
    } else {
        let want = (params.t + 1) % 2; // s = T+1 (mod 2) makes k*s+T odd
        match crt_merge(class, CongruenceClass::new(want, 2)) {
            Some(merged) => Verdict::yes(d, params, merged),
            None => Verdict::no(Rejection::ParityObstruction),
        }
    }
}

/// Scan for the smallest `s` in `[1, s_max]` with `d | a^(k*s+T) + b^(k*s+T)`,
/// by direct modular evaluation.
///
/// The pair of residues evolves by fixed multipliers, so once the state
/// repeats no new values can appear; the scan stops early at that point with
/// the same answer the full scan would give. With `s_max >= 2*d*k` this is a
/// complete membership oracle for the sizes used here.
pub fn brute_force_member(d: u64, params: &GoodParams, s_max: u64) -> Option<u64> {
    assert!(d >= 1 && s_max >= 1);
    if d == 1 {
        return Some(1);
    }
    let a = reduce_i64(params.a, d);
    let b = reduce_i64(params.b, d);
    let step_a = mod_pow(a, params.k, d);
    let step_b = mod_pow(b, params.k, d);
    let mut xa = mod_pow(a, params.k.checked_add(params.t).expect("k+T overflows"), d);
    let mut xb = mod_pow(b, params.k + params.t, d);
    let mut cp = (xa, xb);
    let mut next_cp = 2u64;
    let mut s = 1u64;
    loop {
        if (xa + xb) % d == 0 {
            return Some(s);
        }
        if s == s_max {
            return None;
        }
        s += 1;
        xa = mod_mul(xa, step_a, d);
        xb = mod_mul(xb, step_b, d);
        if (xa, xb) == cp {
            return None;
        }
        if s == next_cp {
            cp = (xa, xb);
            next_cp = next_cp.saturating_mul(2);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is even; this check only applies to odd integers")]
    EvenInput(u64),
    #[error("input shares a factor with a*b")]
    SharesFactorWithAb,
    #[error("k={0} is not odd")]
    KNotOdd(u64),
    #[error("k={0} is not a power of two >= 2")]
    KNotTwoPower(u64),
}

fn local_orders(p: u64, e: u32, params: &GoodParams) -> Result<(u64, u64), CheckError> {
    if p == 2 || !crate::arith::is_prime(p) {
        return Err(CheckError::NotOddPrime(p));
    }
    if reduce_i64(params.a, p) == 0 || reduce_i64(params.b, p) == 0 {
        return Err(CheckError::SharesFactorWithAb);
    }
    let x1 = mod_mul(reduce_i64(params.a, p), mod_inv(params.b, p).unwrap(), p);
    let ord_p = mult_order(x1 as i64, p).unwrap();
    let pe = checked_prime_power(p, e);
    let xe = mod_mul(reduce_i64(params.a, pe), mod_inv(params.b, pe).unwrap(), pe);
    let ord_pe = mult_order(xe as i64, pe).unwrap();
    Ok((ord_p, ord_pe))
}

/// Local membership test at an odd prime power: `ord_p(a*b^-1)` must be even
/// and `T = ord_{p^e}(a*b^-1)/2 (mod gcd(k, ord_{p^e}(a*b^-1)))`.
pub fn check_local(p: u64, e: u32, params: &GoodParams) -> Result<bool, CheckError> {
    let (ord_p, ord_pe) = local_orders(p, e, params)?;
    if ord_p % 2 == 1 {
        return Ok(false);
    }
    let g = gcd(params.k, ord_pe);
    Ok(params.t % g == (ord_pe / 2) % g)
}

/// The same local test rephrased through the 2-adic valuation
/// `alpha = v2(ord_p(a*b^-1))`; agrees with [`check_local`] everywhere.
pub fn check_local_2adic(p: u64, e: u32, params: &GoodParams) -> Result<bool, CheckError> {
    let (ord_p, ord_pe) = local_orders(p, e, params)?;
    let alpha = ord_p.trailing_zeros();
    if alpha == 0 {
        return Ok(false);
    }
    let twopart = 1u64 << alpha.min(params.k.trailing_zeros());
    if params.t % twopart != (1u64 << (alpha - 1)) % twopart {
        return Ok(false);
    }
    let k_odd = params.k >> params.k.trailing_zeros();
    let ord_odd = ord_pe >> alpha;
    Ok(params.t % gcd(k_odd, ord_odd) == 0)
}

fn global_alpha_and_lcm(d: u64, params: &GoodParams) -> Result<Option<(u32, u64)>, CheckError> {
    if d % 2 == 0 {
        return Err(CheckError::EvenInput(d));
    }
    if gcd(params.a.unsigned_abs() % d, d) != 1 || gcd(params.b.unsigned_abs() % d, d) != 1 {
        return Err(CheckError::SharesFactorWithAb);
    }
    let mut alpha: Option<u32> = None;
    let mut l = 1u64;
    for &(p, e) in factorize(d).factors() {
        let (ord_p, ord_pe) = local_orders(p, e, params)?;
        let a_p = ord_p.trailing_zeros();
        if a_p == 0 {
            return Ok(None);
        }
        match alpha {
            None => alpha = Some(a_p),
            Some(a) if a != a_p => return Ok(None),
            _ => {}
        }
        l = lcm(l, ord_pe);
    }
    Ok(alpha.map(|a| (a, l)))
}

/// Global membership test for odd `d >= 3`: a constant 2-adic valuation
/// `alpha` of the local orders, a congruence on `T` modulo a power of two,
/// and a divisibility condition on the odd parts.
pub fn check_odd_global(d: u64, params: &GoodParams) -> Result<bool, CheckError> {
    assert!(d >= 3, "check_odd_global: d must be >= 3");
    let Some((alpha, l)) = global_alpha_and_lcm(d, params)? else {
        return Ok(false);
    };
    let twopart = 1u64 << (alpha).min(params.k.trailing_zeros());
    if params.t % twopart != (1u64 << (alpha - 1)) % twopart {
        return Ok(false);
    }
    let k_odd = params.k >> params.k.trailing_zeros();
    Ok(params.t % gcd(k_odd, l >> alpha) == 0)
}

/// Specialization of [`check_odd_global`] for odd `k`: the power-of-two
/// congruence is vacuous.
pub fn check_special_k_odd(d: u64, params: &GoodParams) -> Result<bool, CheckError> {
    if params.k % 2 == 0 {
        return Err(CheckError::KNotOdd(params.k));
    }
    assert!(d >= 3);
    let Some((alpha, l)) = global_alpha_and_lcm(d, params)? else {
        return Ok(false);
    };
    Ok(params.t % gcd(params.k, l >> alpha) == 0)
}

/// Specialization of [`check_odd_global`] for `k = 2^r`, `r >= 1`: membership
/// is controlled entirely by the constant valuation `alpha`.
pub fn check_special_k_2power(d: u64, params: &GoodParams) -> Result<bool, CheckError> {
    if params.k < 2 || !params.k.is_power_of_two() {
        return Err(CheckError::KNotTwoPower(params.k));
    }
    assert!(d >= 3);
    let r = params.k.trailing_zeros();
    let Some((alpha, _)) = global_alpha_and_lcm(d, params)? else {
        return Ok(false);
    };
    if params.t == 0 {
        Ok(alpha >= r + 1)
    } else {
        Ok(alpha == params.t.trailing_zeros() + 1)
    }
}

/// The set of residues of odd multiples of `T` modulo `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CkTSet {
    pub k: u64,
    pub t: u64,
    elements: Vec<u64>,
}

impl CkTSet {
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Compute `{(2i+1)*T mod k : i >= 0}` by iterating to closure.
pub fn ckt(k: u64, t: u64) -> CkTSet {
    assert!(k >= 1 && t < k, "ckt: need 0 <= T < k");
    let mut seen = std::collections::BTreeSet::new();
    let mut x = t; // i = 0
    let step = (2 * t as u128 % k as u128) as u64;
    loop {
        if !seen.insert(x) {
            break;
        }
        x = ((x as u128 + step as u128) % k as u128) as u64;
    }
    let elements: Vec<u64> = seen.into_iter().collect();
    debug_assert_eq!(
        elements.len() as u64,
        k / gcd(k, 2 * gcd(t, k)),
        "cardinality formula violated for k={k} T={t}"
    );
    CkTSet { k, t, elements }
}

/// All members of the family in `[1, limit]`, sorted ascending.
pub fn good_range(limit: u64, params: &GoodParams) -> Vec<u64> {
    (1..=limit).filter(|&d| decide(d, params).member).collect()
}
