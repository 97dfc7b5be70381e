//! Finite fields `GF(p^m)` in polynomial basis, dense univariate polynomial
//! arithmetic over them, the Galois maps `theta: c -> c^(q^T)` and the
//! theta-reciprocal of a polynomial, and splitting-field machinery producing
//! the irreducible factors of `x^n - 1` from cyclotomic classes.
//!
//! Field elements are packed base-p digit vectors (low digit least
//! significant), so an element is a single `u64` below the field size. The
//! canonical element order is the packed integer order; small fields carry
//! log/exp tables over the canonical generator.

use thiserror::Error;

use crate::arith::{factorize, gcd, is_prime, mod_pow, mult_order};

/// Packed field element: base-p digits of the coefficient vector.
pub type FfElem = u64;

pub const FIELD_SIZE_LIMIT: u64 = 1 << 31;
const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {size} exceeds the supported bound {limit}")]
    SizeExceeded { size: u128, limit: u64 },
    #[error("n={n} is not coprime to q={q}")]
    NotCoprime { n: u64, q: u64 },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("coefficient is not fixed by the q^k-power map")]
    SubfieldViolation,
    #[error("q={q} is not a power of the field characteristic {p}")]
    NotPowerOfChar { q: u64, p: u64 },
}

// --- arithmetic on raw F_p[x] coefficient vectors (modulus search only) ---

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

/// Remainder modulo a monic polynomial.
fn fp_rem(p: u64, a: &[u64], f: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if c != 0 {
            for j in 0..df {
                r[shift + j] = (r[shift + j] + c * (p - f[j])) % p;
            }
        }
        r.pop();
        fp_trim(&mut r);
    }
    r
}

fn fp_powmod(p: u64, base: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = fp_rem(p, base, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_rem(p, &fp_mul(p, &acc, &b), f);
        }
        b = fp_rem(p, &fp_mul(p, &b, &b), f);
        e >>= 1;
    }
    acc
}

fn fp_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    fp_trim(&mut out);
    out
}

fn fp_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        // make b monic before reducing
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = crate::arith::mod_inv_u(lead, p).expect("prime modulus");
            for c in &mut b {
                *c = *c * inv % p;
            }
        }
        let r = fp_rem(p, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of a monic polynomial over F_p by the Frobenius-power test:
/// `x^(p^m) = x (mod f)` and `gcd(x^(p^(m/r)) - x, f) = 1` for primes `r | m`.
fn fp_is_irreducible(p: u64, f: &[u64]) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false; // divisible by x
    }
    let x = vec![0u64, 1];
    // frob[j] = x^(p^(j+1)) mod f
    let mut frob = Vec::with_capacity(m);
    let mut cur = x.clone();
    for _ in 0..m {
        cur = fp_powmod(p, &cur, p, f);
        frob.push(cur.clone());
    }
    if frob[m - 1] != x {
        return false;
    }
    for &(r, _) in factorize(m as u64).factors() {
        let j = m / r as usize;
        let diff = fp_sub(p, &frob[j - 1], &x);
        let g = fp_gcd(p, f, &diff);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

// --- the field proper ---

struct Tables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

/// `GF(p^m)` with a deterministic monic irreducible modulus (the
/// lexicographically smallest, scanning coefficient tuples as base-p
/// integers) and a deterministic multiplicative generator (the smallest
/// element, in packed order, of maximal order).
pub struct FiniteField {
    p: u64,
    m: usize,
    size: u64,
    modulus: Vec<u64>,
    generator: FfElem,
    tables: Option<Tables>,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    pub fn new(p: u64, m: usize) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        assert!(m >= 1, "extension degree must be positive");
        let size = (1..=m).try_fold(1u64, |acc, _| acc.checked_mul(p)).ok_or(
            FieldError::SizeExceeded {
                size: (p as u128).pow(m as u32),
                limit: FIELD_SIZE_LIMIT,
            },
        )?;
        if size > FIELD_SIZE_LIMIT {
            return Err(FieldError::SizeExceeded {
                size: size as u128,
                limit: FIELD_SIZE_LIMIT,
            });
        }
        let modulus = Self::find_modulus(p, m, size);
        let mut field = FiniteField {
            p,
            m,
            size,
            modulus,
            generator: 0,
            tables: None,
        };
        field.generator = field.find_generator();
        if size <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    fn find_modulus(p: u64, m: usize, size: u64) -> Vec<u64> {
        for c in 0..size {
            let mut f = unpack(p, m, c);
            f.push(1);
            if fp_is_irreducible(p, &f) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial of degree {m} over F_{p} exists")
    }

    fn find_generator(&self) -> FfElem {
        if self.size == 2 {
            return 1;
        }
        let group = self.size - 1;
        let primes = factorize(group);
        'cand: for cand in 2..self.size {
            for &(r, _) in primes.factors() {
                if self.pow(cand, group / r) == 1 {
                    continue 'cand;
                }
            }
            return cand;
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> Tables {
        let group = (self.size - 1) as usize;
        let mut exp = vec![0u64; group];
        let mut log = vec![u32::MAX; self.size as usize];
        let mut acc = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_schoolbook(acc, self.generator);
        }
        debug_assert_eq!(acc, 1);
        Tables { exp, log }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Modulus coefficients, low to high; length `m + 1`, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> FfElem {
        self.generator
    }

    pub fn zero(&self) -> FfElem {
        0
    }

    pub fn one(&self) -> FfElem {
        1
    }

    pub fn elements(&self) -> impl Iterator<Item = FfElem> {
        0..self.size
    }

    pub fn digits(&self, x: FfElem) -> Vec<u64> {
        unpack(self.p, self.m, x)
    }

    pub fn from_digits(&self, digits: &[u64]) -> FfElem {
        assert!(digits.len() <= self.m, "too many digits");
        let mut acc = 0u64;
        for &d in digits.iter().rev() {
            assert!(d < self.p, "digit out of range");
            acc = acc * self.p + d;
        }
        acc
    }

    /// Embedding of a prime-field scalar.
    pub fn scalar(&self, c: u64) -> FfElem {
        c % self.p
    }

    pub fn add(&self, x: FfElem, y: FfElem) -> FfElem {
        if self.p == 2 {
            return x ^ y;
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut x, mut y) = (x, y);
        for _ in 0..self.m {
            out += (x % self.p + y % self.p) % self.p * mult;
            x /= self.p;
            y /= self.p;
            mult *= self.p;
        }
        out
    }

    pub fn neg(&self, x: FfElem) -> FfElem {
        if self.p == 2 {
            return x;
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut x = x;
        for _ in 0..self.m {
            out += (self.p - x % self.p) % self.p * mult;
            x /= self.p;
            mult *= self.p;
        }
        out
    }

    pub fn sub(&self, x: FfElem, y: FfElem) -> FfElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FfElem, y: FfElem) -> FfElem {
        if x == 0 || y == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let group = self.size - 1;
            let idx = (t.log[x as usize] as u64 + t.log[y as usize] as u64) % group;
            return t.exp[idx as usize];
        }
        self.mul_schoolbook(x, y)
    }

    fn mul_schoolbook(&self, x: FfElem, y: FfElem) -> FfElem {
        let xd = self.digits(x);
        let yd = self.digits(y);
        let mut conv = vec![0u64; 2 * self.m - 1];
        for (i, &a) in xd.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in yd.iter().enumerate() {
                conv[i + j] = (conv[i + j] + a * b) % self.p;
            }
        }
        for i in (self.m..conv.len()).rev() {
            let c = conv[i];
            if c != 0 {
                for j in 0..self.m {
                    conv[i - self.m + j] =
                        (conv[i - self.m + j] + c * (self.p - self.modulus[j])) % self.p;
                }
            }
        }
        self.from_digits(&conv[..self.m])
    }

    pub fn inv(&self, x: FfElem) -> FfElem {
        assert!(x != 0, "inverse of zero");
        if let Some(t) = &self.tables {
            let group = self.size - 1;
            let idx = (group - t.log[x as usize] as u64) % group;
            return t.exp[idx as usize];
        }
        self.pow(x, self.size - 2)
    }

    pub fn div(&self, x: FfElem, y: FfElem) -> FfElem {
        self.mul(x, self.inv(y))
    }

    pub fn pow(&self, x: FfElem, mut e: u64) -> FfElem {
        if e == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        let mut base = x;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, x: FfElem) -> FfElem {
        self.pow(x, self.p)
    }

    /// `[d0,d1,...]` rendering of an element's digit vector.
    pub fn elem_string(&self, x: FfElem) -> String {
        let digits: Vec<String> = self.digits(x).iter().map(u64::to_string).collect();
        format!("[{}]", digits.join(","))
    }
}

fn unpack(p: u64, m: usize, x: u64) -> Vec<u64> {
    let mut v = vec![0u64; m];
    let mut x = x;
    for slot in v.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    v
}

// --- dense polynomials over a field ---

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`, no trailing
/// zeros, the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FfElem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FfElem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![0, 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FfElem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[FfElem] {
        &self.coeffs
    }

    pub fn leading(&self) -> FfElem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }
}

impl FiniteField {
    pub fn poly_add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..n).map(|i| self.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn poly_sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..n).map(|i| self.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn poly_scale(&self, c: FfElem, a: &Poly) -> Poly {
        Poly::new(a.coeffs.iter().map(|&x| self.mul(c, x)).collect())
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn poly_divrem(&self, num: &Poly, den: &Poly) -> (Poly, Poly) {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let dd = den.degree().unwrap();
        if num.degree().map_or(true, |dn| dn < dd) {
            return (Poly::zero(), num.clone());
        }
        let dn = num.degree().unwrap();
        let lead_inv = self.inv(den.leading());
        let mut rem = num.coeffs.clone();
        let mut quo = vec![0u64; dn - dd + 1];
        for i in (dd..=dn).rev() {
            let c = self.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quo[i - dd] = c;
            for j in 0..=dd {
                rem[i - dd + j] = self.sub(rem[i - dd + j], self.mul(c, den.coeff(j)));
            }
        }
        (Poly::new(quo), Poly::new(rem))
    }

    pub fn poly_rem(&self, num: &Poly, den: &Poly) -> Poly {
        self.poly_divrem(num, den).1
    }

    pub fn poly_monic(&self, a: &Poly) -> Poly {
        if a.is_zero() || a.is_monic() {
            return a.clone();
        }
        self.poly_scale(self.inv(a.leading()), a)
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(f, 0)` is monic `f`.
    pub fn poly_gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.poly_monic(&a)
    }

    pub fn poly_pow(&self, base: &Poly, mut e: u64) -> Poly {
        let mut acc = Poly::one();
        let mut b = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.poly_mul(&b, &b);
            }
        }
        acc
    }

    pub fn poly_eval(&self, f: &Poly, x: FfElem) -> FfElem {
        let mut acc = 0u64;
        for &c in f.coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }

    pub fn xn_minus_one(&self, n: usize) -> Poly {
        assert!(n >= 1);
        let mut coeffs = vec![0u64; n + 1];
        coeffs[0] = self.neg(1);
        coeffs[n] = 1;
        Poly::new(coeffs)
    }

    /// Dense `c0 + c1*x + ...` rendering with elements as digit vectors.
    pub fn poly_string(&self, f: &Poly) -> String {
        match f.degree() {
            None => "0".to_string(),
            Some(deg) => {
                let terms: Vec<String> = (0..=deg)
                    .map(|i| {
                        let e = self.elem_string(f.coeff(i));
                        match i {
                            0 => e,
                            1 => format!("{e}*x"),
                            _ => format!("{e}*x^{i}"),
                        }
                    })
                    .collect();
                terms.join(" + ")
            }
        }
    }
}

// --- theta maps ---

fn power_of_char(field: &FiniteField, q: u64) -> Result<u32, FieldError> {
    let p = field.p();
    if q < 2 {
        return Err(FieldError::NotPowerOfChar { q, p });
    }
    let mut qq = q;
    let mut nu = 0u32;
    while qq % p == 0 {
        qq /= p;
        nu += 1;
    }
    if qq != 1 {
        return Err(FieldError::NotPowerOfChar { q, p });
    }
    Ok(nu)
}

/// `theta(c) = c^(q^T)`, the Galois automorphism attached to `(q, T)`.
pub fn theta_apply(field: &FiniteField, x: FfElem, q: u64, t: u64) -> Result<FfElem, FieldError> {
    power_of_char(field, q)?;
    if x == 0 {
        return Ok(0);
    }
    if field.size() == 2 {
        return Ok(x);
    }
    let group = field.size() - 1;
    let e = mod_pow(q % group, t, group);
    let e = if e == 0 { group } else { e };
    Ok(field.pow(x, e))
}

/// `f^{*,theta}(x) = theta(f0)^-1 * x^deg(f) * theta(f)(1/x)`; requires a
/// nonzero constant term. Monic output of the same degree; the roots are the
/// theta-images of the inverted roots of `f`.
pub fn theta_reciprocal(
    field: &FiniteField,
    f: &Poly,
    q: u64,
    t: u64,
) -> Result<Poly, FieldError> {
    let deg = f.degree().ok_or(FieldError::ZeroConstantTerm)?;
    if f.coeff(0) == 0 {
        return Err(FieldError::ZeroConstantTerm);
    }
    let c0 = theta_apply(field, f.coeff(0), q, t)?;
    let c0_inv = field.inv(c0);
    let mut coeffs = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        let mapped = theta_apply(field, f.coeff(deg - i), q, t)?;
        coeffs.push(field.mul(c0_inv, mapped));
    }
    Ok(Poly::new(coeffs))
}

// --- splitting fields and the factors of x^n - 1 ---

/// The data needed to factor `x^n - 1` over `GF(q^k)`: the target field, the
/// splitting field `GF(q^(k*t))` with `t = ord_n(q^k)`, a primitive n-th root
/// of unity `zeta = gamma^((q^(k*t)-1)/n)` over the canonical generator
/// `gamma`, and a change of basis identifying the `GF(q^k)`-subfield of the
/// splitting field.
#[derive(Debug)]
pub struct SplittingField {
    n: u64,
    q: u64,
    k: u64,
    t: u64,
    small: FiniteField,
    big: FiniteField,
    zeta: FfElem,
    /// digits of beta^j in the big field, for beta the smallest root of the
    /// small modulus, j in 0..m_small
    basis: Vec<Vec<u64>>,
}

impl SplittingField {
    pub fn new(n: u64, q: u64, k: u64) -> Result<Self, FieldError> {
        assert!(n >= 1 && k >= 1);
        let fac = factorize(q);
        if fac.factors().len() != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        let (p, nu) = fac.factors()[0];
        if gcd(n, q) != 1 {
            return Err(FieldError::NotCoprime { n, q });
        }
        let m_small = (nu as u64)
            .checked_mul(k)
            .and_then(|m| usize::try_from(m).ok())
            .expect("extension degree overflows");
        check_size(p, m_small as u128)?;
        let qk_mod = mod_pow(q % n.max(1), k, n);
        let t = if n == 1 {
            1
        } else {
            mult_order(qk_mod as i64, n).expect("q coprime to n")
        };
        let m_big = m_small
            .checked_mul(usize::try_from(t).expect("t fits usize"))
            .expect("splitting degree overflows");
        check_size(p, m_big as u128)?;
        let small = FiniteField::new(p, m_small)?;
        let big = FiniteField::new(p, m_big)?;
        let zeta = big.pow(big.generator(), (big.size() - 1) / n);
        debug_assert!(zeta_order_is(&big, zeta, n));
        // beta: smallest root of the small modulus inside the big field.
        let beta = find_root(&big, small.modulus(), small.size());
        let mut basis = Vec::with_capacity(m_small);
        let mut pw = big.one();
        for _ in 0..m_small {
            basis.push(big.digits(pw));
            pw = big.mul(pw, beta);
        }
        Ok(SplittingField {
            n,
            q,
            k,
            t,
            small,
            big,
            zeta,
            basis,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `ord_n(q^k)`: the degree of the splitting field over `GF(q^k)`.
    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn small(&self) -> &FiniteField {
        &self.small
    }

    pub fn big(&self) -> &FiniteField {
        &self.big
    }

    pub fn into_small(self) -> FiniteField {
        self.small
    }

    pub fn zeta(&self) -> FfElem {
        self.zeta
    }

    /// Map a Frobenius-fixed element of the big field into the standalone
    /// `GF(q^k)` representation.
    fn to_small(&self, x: FfElem) -> Result<FfElem, FieldError> {
        if self.big.pow(x, self.small.size()) != x {
            return Err(FieldError::SubfieldViolation);
        }
        let target = self.big.digits(x);
        let coords = solve_mod_p(self.big.p(), &self.basis, &target)
            .ok_or(FieldError::SubfieldViolation)?;
        Ok(self.small.from_digits(&coords))
    }

    /// `prod_{i in Q} (x - zeta^i)` as a polynomial over `GF(q^k)`.
    ///
    /// The product is computed in the splitting field; every coefficient must
    /// be fixed by the `q^k`-power map, which is checked before conversion.
    pub fn factor_of_class(&self, residues: &[u64]) -> Result<Poly, FieldError> {
        let mut f = Poly::one();
        for &i in residues {
            let root = self.big.pow(self.zeta, i % self.n);
            let lin = Poly::new(vec![self.big.neg(root), 1]);
            f = self.big.poly_mul(&f, &lin);
        }
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for &c in f.coeffs() {
            coeffs.push(self.to_small(c)?);
        }
        Ok(Poly::new(coeffs))
    }
}

fn zeta_order_is(big: &FiniteField, zeta: FfElem, n: u64) -> bool {
    if big.pow(zeta, n) != 1 {
        return false;
    }
    factorize(n)
        .factors()
        .iter()
        .all(|&(r, _)| big.pow(zeta, n / r) != 1)
}

fn check_size(p: u64, m: u128) -> Result<(), FieldError> {
    let mut size = 1u128;
    for _ in 0..m {
        size = size.saturating_mul(p as u128);
        if size > FIELD_SIZE_LIMIT as u128 {
            return Err(FieldError::SizeExceeded {
                size,
                limit: FIELD_SIZE_LIMIT,
            });
        }
    }
    Ok(())
}

/// Smallest root (in packed element order) of a monic polynomial with
/// coefficients in the prime field, searched by direct evaluation.
///
/// All roots lie in the subfield of size `subfield_size`, whose nonzero
/// elements are the powers of `gamma^((size-1)/(subfield_size-1))`; only
/// those candidates are evaluated.
fn find_root(field: &FiniteField, modulus: &[u64], subfield_size: u64) -> FfElem {
    let lifted = Poly::new(modulus.iter().map(|&c| field.scalar(c)).collect());
    let mut best: Option<FfElem> = None;
    let mut consider = |x: FfElem| {
        if field.poly_eval(&lifted, x) == 0 && best.map_or(true, |b| x < b) {
            best = Some(x);
        }
    };
    consider(0);
    let delta = field.pow(field.generator(), (field.size() - 1) / (subfield_size - 1));
    let mut x = field.one();
    for _ in 0..subfield_size - 1 {
        consider(x);
        x = field.mul(x, delta);
    }
    best.expect("the splitting field contains a root of every subfield modulus")
}

/// Solve `cols * c = target` over F_p by Gaussian elimination; `cols` are the
/// column vectors. Returns the coordinate vector when consistent.
fn solve_mod_p(p: u64, cols: &[Vec<u64>], target: &[u64]) -> Option<Vec<u64>> {
    let rows = target.len();
    let ncols = cols.len();
    // augmented matrix rows
    let mut a = vec![vec![0u64; ncols + 1]; rows];
    for (j, col) in cols.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            a[i][j] = v % p;
        }
    }
    for (i, &v) in target.iter().enumerate() {
        a[i][ncols] = v % p;
    }
    let mut pivot_row_of_col = vec![usize::MAX; ncols];
    let mut r = 0usize;
    for j in 0..ncols {
        let Some(pr) = (r..rows).find(|&i| a[i][j] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = crate::arith::mod_inv_u(a[r][j], p).expect("prime modulus");
        for v in a[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows {
            if i != r && a[i][j] != 0 {
                let f = a[i][j];
                for jj in 0..=ncols {
                    a[i][jj] = (a[i][jj] + (p - f) * a[r][jj]) % p;
                }
            }
        }
        pivot_row_of_col[j] = r;
        r += 1;
    }
    // inconsistent if any zero row has nonzero rhs
    for i in r..rows {
        if a[i][ncols] != 0 {
            return None;
        }
    }
    let mut coords = vec![0u64; ncols];
    for j in 0..ncols {
        if pivot_row_of_col[j] != usize::MAX {
            coords[j] = a[pivot_row_of_col[j]][ncols];
        }
    }
    Some(coords)
}
