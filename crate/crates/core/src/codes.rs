//! Cyclic codes of length `n = n0 * p^r` over `GF(q^k)` and their Galois
//! duality for `theta(c) = c^(q^T)`.
//!
//! The permutation `sigma(Q) = -q^T * Q` acts on the `q^k`-cyclotomic classes
//! modulo `n0`; its orbit decomposition drives the factorization of
//! `x^n - 1` into self-reciprocal blocks and, from there, the enumeration of
//! Galois LCD and Galois self-dual cyclic codes. Every emitted code can be
//! re-verified through the defining gcd / equality conditions on its
//! generator and check polynomials, which never consult the enumeration
//! theory.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{factorize, mod_mul, mod_pow};
use crate::cyclo::{all_classes, AbelianGroup, CycClass};
use crate::gfpoly::{theta_reciprocal, FieldError, FiniteField, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("q={0} is not a prime power")]
    NotPrimePower(u64),
    #[error("offset T={t} out of range: need 0 <= T < k={k}")]
    OffsetOutOfRange { t: u64, k: u64 },
    #[error("code length must be positive")]
    ZeroLength,
    #[error("generator is not a monic divisor of x^n - 1")]
    NotADivisor,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Parameters of a cyclic-code family: field `GF(q^k)`, Galois offset `T`,
/// length `n = n0 * p^r` with `gcd(n0, p) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub q: u64,
    pub k: u64,
    pub t: u64,
    pub n: u64,
    /// field characteristic, `q = p^nu`
    pub p: u64,
    pub nu: u32,
    /// p-free part of `n`
    pub n0: u64,
    /// `r = v_p(n)`
    pub r: u32,
}

impl CodeParams {
    pub fn new(q: u64, k: u64, t: u64, n: u64) -> Result<Self, CodeError> {
        let fac = factorize(q.max(1));
        if q < 2 || fac.factors().len() != 1 {
            return Err(CodeError::NotPrimePower(q));
        }
        let (p, nu) = fac.factors()[0];
        if k == 0 || t >= k {
            return Err(CodeError::OffsetOutOfRange { t, k });
        }
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        let mut n0 = n;
        let mut r = 0u32;
        while n0 % p == 0 {
            n0 /= p;
            r += 1;
        }
        Ok(CodeParams {
            q,
            k,
            t,
            n,
            p,
            nu,
            n0,
            r,
        })
    }

    /// `p^r`, the multiplicity of every irreducible factor of `x^n - 1`.
    pub fn multiplicity(&self) -> u64 {
        self.p.pow(self.r)
    }

    pub fn field(&self) -> Result<FiniteField, CodeError> {
        let m = self
            .nu
            .checked_mul(u32::try_from(self.k).expect("k fits u32"))
            .expect("extension degree overflows");
        Ok(FiniteField::new(self.p, m as usize)?)
    }
}

/// The sigma-orbit decomposition of the `q^k`-cyclotomic classes modulo `n0`.
///
/// Orbits are listed in ascending order of their smallest class
/// representative, each starting at that class and following sigma
/// (`sigma(orbit[i]) = orbit[i+1]` cyclically). `omega1` and `omega2` index
/// the orbits of size one and of larger size.
#[derive(Debug, Clone)]
pub struct OrbitStructure {
    pub params: CodeParams,
    pub classes: Vec<CycClass>,
    /// class index -> class index under `Q -> -q^T Q`
    pub sigma: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    pub omega1: Vec<usize>,
    pub omega2: Vec<usize>,
}

impl OrbitStructure {
    pub fn class_residues(&self, class_idx: usize) -> Vec<u64> {
        self.classes[class_idx]
            .members
            .iter()
            .map(|m| m[0])
            .collect()
    }
}

pub fn orbit_structure(params: CodeParams) -> Result<OrbitStructure, CodeError> {
    let group = AbelianGroup::cyclic(params.n0);
    let classes = all_classes(&group, params.q, params.k).expect("n0 is coprime to q");
    let mut class_of_residue: HashMap<u64, usize> = HashMap::new();
    for (i, class) in classes.iter().enumerate() {
        for m in &class.members {
            class_of_residue.insert(m[0], i);
        }
    }
    let neg_qt = if params.n0 == 1 {
        0
    } else {
        let m = mod_pow(params.q % params.n0, params.t, params.n0);
        (params.n0 - m % params.n0) % params.n0
    };
    let sigma: Vec<usize> = classes
        .iter()
        .map(|c| class_of_residue[&mod_mul(neg_qt, c.rep[0], params.n0)])
        .collect();
    let mut visited = vec![false; classes.len()];
    let mut orbits = Vec::new();
    for start in 0..classes.len() {
        if visited[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = start;
        loop {
            visited[cur] = true;
            orbit.push(cur);
            cur = sigma[cur];
            if cur == start {
                break;
            }
        }
        orbits.push(orbit);
    }
    let omega1 = (0..orbits.len()).filter(|&i| orbits[i].len() == 1).collect();
    let omega2 = (0..orbits.len()).filter(|&i| orbits[i].len() > 1).collect();
    Ok(OrbitStructure {
        params,
        classes,
        sigma,
        orbits,
        omega1,
        omega2,
    })
}

/// `x^n - 1` over `GF(q^k)`, presented as the class factors `f_Q` of
/// `x^n0 - 1` together with the common multiplicity `p^r`.
pub struct XnFactorization {
    pub params: CodeParams,
    pub structure: OrbitStructure,
    pub field: Arc<FiniteField>,
    /// `class_factors[i]` is the irreducible factor attached to `classes[i]`
    pub class_factors: Vec<Poly>,
    pub multiplicity: u64,
}

pub fn factor_xn_minus_1(params: CodeParams) -> Result<XnFactorization, CodeError> {
    let structure = orbit_structure(params)?;
    let splitting = crate::gfpoly::SplittingField::new(params.n0, params.q, params.k)?;
    let mut class_factors = Vec::with_capacity(structure.classes.len());
    for i in 0..structure.classes.len() {
        let f = splitting.factor_of_class(&structure.class_residues(i))?;
        class_factors.push(f);
    }
    let field = Arc::new(splitting.into_small());
    let product = class_factors
        .iter()
        .fold(Poly::one(), |acc, f| field.poly_mul(&acc, f));
    debug_assert_eq!(product, field.xn_minus_one(params.n0 as usize));
    Ok(XnFactorization {
        params,
        structure,
        field,
        class_factors,
        multiplicity: params.multiplicity(),
    })
}

impl XnFactorization {
    /// `F_Q`: the product of the class factors along one orbit.
    pub fn orbit_product(&self, orbit_idx: usize) -> Poly {
        self.structure.orbits[orbit_idx]
            .iter()
            .fold(Poly::one(), |acc, &c| {
                self.field.poly_mul(&acc, &self.class_factors[c])
            })
    }

    pub fn xn_minus_one(&self) -> Poly {
        self.field.xn_minus_one(self.params.n as usize)
    }

    /// Build the code generated by `prod f_Q^(exps[Q])`; exponents are per
    /// class index and must not exceed `p^r`.
    pub fn code_from_exponents(&self, exps: &[u32]) -> Result<CyclicCode, CodeError> {
        assert_eq!(exps.len(), self.class_factors.len());
        assert!(exps.iter().all(|&e| e as u64 <= self.multiplicity));
        let mut g = Poly::one();
        for (f, &e) in self.class_factors.iter().zip(exps) {
            if e > 0 {
                g = self.field.poly_mul(&g, &self.field.poly_pow(f, e as u64));
            }
        }
        CyclicCode::from_generator(self.params, Arc::clone(&self.field), g)
    }
}

/// A cyclic code with its monic generator `g | x^n - 1` and check polynomial
/// `h = (x^n - 1) / g`.
#[derive(Clone)]
pub struct CyclicCode {
    pub params: CodeParams,
    pub field: Arc<FiniteField>,
    pub generator: Poly,
    pub check: Poly,
}

impl CyclicCode {
    pub fn from_generator(
        params: CodeParams,
        field: Arc<FiniteField>,
        generator: Poly,
    ) -> Result<Self, CodeError> {
        if !generator.is_monic() {
            return Err(CodeError::NotADivisor);
        }
        let xn = field.xn_minus_one(params.n as usize);
        let (check, rem) = field.poly_divrem(&xn, &generator);
        if !rem.is_zero() {
            return Err(CodeError::NotADivisor);
        }
        Ok(CyclicCode {
            params,
            field,
            generator,
            check,
        })
    }

    pub fn dimension(&self) -> u64 {
        self.params.n - self.generator.degree().unwrap_or(0) as u64
    }

    fn check_reciprocal(&self) -> Poly {
        theta_reciprocal(&self.field, &self.check, self.params.q, self.params.t)
            .expect("check polynomial divides x^n - 1, so its constant term is nonzero")
    }

    /// Galois LCD test: `gcd(g, h^{*,theta}) = 1`.
    pub fn is_lcd(&self) -> bool {
        self.field
            .poly_gcd(&self.generator, &self.check_reciprocal())
            .is_one()
    }

    /// Galois self-duality test: `g = h^{*,theta}` exactly.
    pub fn is_selfdual(&self) -> bool {
        self.generator == self.check_reciprocal()
    }

    /// The Galois dual code, generated by `h^{*,theta}`.
    pub fn galois_dual(&self) -> CyclicCode {
        let g = self.check_reciprocal();
        CyclicCode::from_generator(self.params, Arc::clone(&self.field), g)
            .expect("the reciprocal of the check polynomial divides x^n - 1")
    }
}

/// Galois self-dual cyclic codes of length `n` over a field of size `q_card`
/// exist iff both are even.
pub fn selfdual_exists(q_card: u64, n: u64) -> bool {
    q_card % 2 == 0 && n % 2 == 0
}

// --- censuses ---

/// Number of Galois LCD cyclic codes: `2^(|omega1| + |omega2|)`.
pub fn lcd_count(structure: &OrbitStructure) -> u128 {
    let units = structure.omega1.len() + structure.omega2.len();
    assert!(units < 128, "LCD census count overflows u128");
    1u128 << units
}

/// Stream of all Galois LCD cyclic codes, in canonical order: one choice per
/// orbit (0 or `p^r` on the whole unit), orbits ordered by smallest class
/// representative, later orbits varying fastest, exponent 0 first.
pub fn lcd_enumerate(fact: &XnFactorization) -> LcdCodes<'_> {
    let mult = fact.multiplicity;
    let unit_polys = (0..fact.structure.orbits.len())
        .map(|oi| fact.field.poly_pow(&fact.orbit_product(oi), mult))
        .collect();
    LcdCodes {
        fact,
        unit_polys,
        odometer: vec![0u8; fact.structure.orbits.len()],
        done: false,
    }
}

pub struct LcdCodes<'a> {
    fact: &'a XnFactorization,
    unit_polys: Vec<Poly>,
    odometer: Vec<u8>,
    done: bool,
}

impl Iterator for LcdCodes<'_> {
    type Item = CyclicCode;

    fn next(&mut self) -> Option<CyclicCode> {
        if self.done {
            return None;
        }
        let mut g = Poly::one();
        for (poly, &take) in self.unit_polys.iter().zip(&self.odometer) {
            if take == 1 {
                g = self.fact.field.poly_mul(&g, poly);
            }
        }
        let code =
            CyclicCode::from_generator(self.fact.params, Arc::clone(&self.fact.field), g)
                .expect("product of factor blocks divides x^n - 1");
        // advance, last unit fastest
        let mut i = self.odometer.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.odometer[i] == 0 {
                self.odometer[i] = 1;
                break;
            }
            self.odometer[i] = 0;
        }
        Some(code)
    }
}

/// Number of Galois self-dual cyclic codes, or `None` when they cannot exist
/// (field or length odd). On each even-length orbit the exponents alternate
/// between `b` and `2^r - b`, giving `2^r + 1` choices; odd-length orbits and
/// the self-paired classes are forced to `2^(r-1)`.
pub fn selfdual_count(fact: &XnFactorization) -> Option<u128> {
    if !selfdual_exists(fact.field.size(), fact.params.n) {
        return None;
    }
    let even_orbits = fact
        .structure
        .omega2
        .iter()
        .filter(|&&oi| fact.structure.orbits[oi].len() % 2 == 0)
        .count() as u32;
    Some((fact.multiplicity as u128 + 1).pow(even_orbits))
}

/// Stream of all Galois self-dual cyclic codes in canonical order, or `None`
/// when they cannot exist.
pub fn selfdual_enumerate(fact: &XnFactorization) -> Option<SelfDualCodes<'_>> {
    if !selfdual_exists(fact.field.size(), fact.params.n) {
        return None;
    }
    let half = fact.multiplicity / 2;
    let mut fixed = Poly::one();
    let mut free_orbits = Vec::new();
    for (oi, orbit) in fact.structure.orbits.iter().enumerate() {
        if orbit.len() == 1 || orbit.len() % 2 == 1 {
            for &c in orbit {
                let f = fact.field.poly_pow(&fact.class_factors[c], half);
                fixed = fact.field.poly_mul(&fixed, &f);
            }
        } else {
            free_orbits.push(oi);
        }
    }
    let free_len = free_orbits.len();
    Some(SelfDualCodes {
        fact,
        fixed,
        free_orbits,
        odometer: vec![0u64; free_len],
        done: false,
    })
}

pub struct SelfDualCodes<'a> {
    fact: &'a XnFactorization,
    fixed: Poly,
    free_orbits: Vec<usize>,
    odometer: Vec<u64>,
    done: bool,
}

impl SelfDualCodes<'_> {
    fn orbit_block(&self, orbit_idx: usize, b: u64) -> Poly {
        let mult = self.fact.multiplicity;
        let mut out = Poly::one();
        for (pos, &class) in self.fact.structure.orbits[orbit_idx].iter().enumerate() {
            let e = if pos % 2 == 0 { b } else { mult - b };
            if e > 0 {
                let f = self
                    .fact
                    .field
                    .poly_pow(&self.fact.class_factors[class], e);
                out = self.fact.field.poly_mul(&out, &f);
            }
        }
        out
    }
}

impl Iterator for SelfDualCodes<'_> {
    type Item = CyclicCode;

    fn next(&mut self) -> Option<CyclicCode> {
        if self.done {
            return None;
        }
        let mut g = self.fixed.clone();
        for (&oi, &b) in self.free_orbits.iter().zip(&self.odometer) {
            g = self.fact.field.poly_mul(&g, &self.orbit_block(oi, b));
        }
        let code =
            CyclicCode::from_generator(self.fact.params, Arc::clone(&self.fact.field), g)
                .expect("self-dual assignment divides x^n - 1");
        let mult = self.fact.multiplicity;
        let mut i = self.odometer.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.odometer[i] < mult {
                self.odometer[i] += 1;
                break;
            }
            self.odometer[i] = 0;
        }
        Some(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, k: u64, t: u64, n: u64) -> CodeParams {
        CodeParams::new(q, k, t, n).unwrap()
    }

    #[test]
    fn params_decomposition() {
        let p = params(2, 4, 1, 34);
        assert_eq!((p.p, p.nu, p.n0, p.r), (2, 1, 17, 1));
        assert_eq!(p.multiplicity(), 2);
        let p = params(9, 2, 1, 45);
        assert_eq!((p.p, p.nu, p.n0, p.r), (3, 2, 5, 2));
        assert!(CodeParams::new(6, 2, 0, 10).is_err());
        assert!(CodeParams::new(2, 2, 2, 10).is_err());
    }

    fn orbit_reps(s: &OrbitStructure) -> Vec<Vec<u64>> {
        s.orbits
            .iter()
            .map(|orbit| orbit.iter().map(|&c| s.classes[c].rep[0]).collect())
            .collect()
    }

    #[test]
    fn orbits_for_n17_over_f16() {
        let s = orbit_structure(params(2, 4, 0, 17)).unwrap();
        assert_eq!(s.orbits.len(), 9);
        assert!(s.orbits.iter().all(|o| o.len() == 1));

        let s = orbit_structure(params(2, 4, 1, 17)).unwrap();
        assert_eq!(
            orbit_reps(&s),
            vec![vec![0], vec![1, 2, 4, 8], vec![3, 6, 5, 7]]
        );
        assert_eq!(s.omega1.len(), 1);
        assert_eq!(s.omega2.len(), 2);

        let s = orbit_structure(params(2, 4, 2, 17)).unwrap();
        assert_eq!(
            orbit_reps(&s),
            vec![vec![0], vec![1, 4], vec![2, 8], vec![3, 5], vec![6, 7]]
        );

        let s = orbit_structure(params(2, 4, 3, 17)).unwrap();
        assert_eq!(
            orbit_reps(&s),
            vec![vec![0], vec![1, 8, 4, 2], vec![3, 7, 5, 6]]
        );
    }

    #[test]
    fn omega1_matches_membership_of_element_orders() {
        use crate::good::{decide, GoodParams};
        for (q, k, n) in [(2u64, 4u64, 17u64), (2, 2, 15), (3, 2, 8), (4, 2, 17)] {
            for t in 0..k {
                let s = orbit_structure(params(q, k, t, n)).unwrap();
                for (oi, orbit) in s.orbits.iter().enumerate() {
                    for &c in orbit {
                        let order = s.classes[c].elem_order;
                        let member =
                            decide(order, &GoodParams::new(q as i64, 1, k, t).unwrap()).member;
                        assert_eq!(
                            member,
                            s.orbits[oi].len() == 1,
                            "q={q} k={k} T={t} n={n} class order {order}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_of_x34_minus_1() {
        let fact = factor_xn_minus_1(params(2, 4, 1, 34)).unwrap();
        assert_eq!(fact.multiplicity, 2);
        // (x^17 - 1)^2 = x^34 - 1 over characteristic 2
        let f17 = fact
            .class_factors
            .iter()
            .fold(Poly::one(), |acc, f| fact.field.poly_mul(&acc, f));
        assert_eq!(f17, fact.field.xn_minus_one(17));
        let squared = fact.field.poly_mul(&f17, &f17);
        assert_eq!(squared, fact.xn_minus_one());
        // each orbit product is theta-self-reciprocal
        for oi in 0..fact.structure.orbits.len() {
            let block = fact.orbit_product(oi);
            let rec = theta_reciprocal(&fact.field, &block, 2, 1).unwrap();
            assert_eq!(rec, block, "orbit {oi}");
        }
    }

    #[test]
    fn lcd_census_for_n34_t1() {
        let fact = factor_xn_minus_1(params(2, 4, 1, 34)).unwrap();
        assert_eq!(lcd_count(&fact.structure), 8);
        let codes: Vec<CyclicCode> = lcd_enumerate(&fact).collect();
        assert_eq!(codes.len(), 8);
        assert!(codes.iter().all(|c| c.is_lcd()));
        // first element of the census is the full space
        assert!(codes[0].generator.is_one());
        // the census contains (x-1)^2 * A(x)^2
        let a_squared = {
            let orbit_a = 1; // orbit [1,2,4,8]
            let block = fact.orbit_product(orbit_a);
            let xm1 = &fact.class_factors[0];
            let g = fact.field.poly_mul(&xm1, &block);
            fact.field.poly_mul(&g, &g)
        };
        assert!(
            codes.iter().any(|c| c.generator == a_squared),
            "missing (x-1)^2 A(x)^2"
        );
        // distinct generators
        for i in 0..codes.len() {
            for j in i + 1..codes.len() {
                assert_ne!(codes[i].generator, codes[j].generator);
            }
        }
    }

    #[test]
    fn selfdual_existence() {
        assert!(selfdual_exists(16, 34));
        assert!(!selfdual_exists(3, 35));
        assert!(!selfdual_exists(2, 17));
        let fact = factor_xn_minus_1(params(2, 4, 0, 17)).unwrap();
        assert_eq!(selfdual_count(&fact), None);
        assert!(selfdual_enumerate(&fact).is_none());
    }

    #[test]
    fn selfdual_census_for_n34_t2() {
        let fact = factor_xn_minus_1(params(2, 4, 2, 34)).unwrap();
        assert_eq!(selfdual_count(&fact), Some(81));
        let codes: Vec<CyclicCode> = selfdual_enumerate(&fact).unwrap().collect();
        assert_eq!(codes.len(), 81);
        for c in &codes {
            assert!(c.is_selfdual());
            assert_eq!(c.generator.degree(), Some(17));
        }
        // x^17 - 1 is among them (all middle exponents b = 1)
        let x17 = fact.field.xn_minus_one(17);
        assert!(codes.iter().any(|c| c.generator == x17));
    }

    #[test]
    fn selfdual_census_for_n34_t1_contains_the_alternating_generator() {
        let fact = factor_xn_minus_1(params(2, 4, 1, 34)).unwrap();
        // two orbits of length 4: count is 3^2
        assert_eq!(selfdual_count(&fact), Some(9));
        let rep_index = |r: u64| {
            fact.structure
                .classes
                .iter()
                .position(|c| c.rep[0] == r)
                .unwrap()
        };
        // exponents: class 0 -> 1; orbit [1,2,4,8] -> (0,2,0,2); orbit [3,6,5,7] -> all 1
        let mut exps = vec![0u32; fact.structure.classes.len()];
        exps[rep_index(0)] = 1;
        exps[rep_index(2)] = 2;
        exps[rep_index(8)] = 2;
        for r in [3, 5, 6, 7] {
            exps[rep_index(r)] = 1;
        }
        let expected = fact.code_from_exponents(&exps).unwrap();
        assert!(expected.is_selfdual());
        let codes: Vec<CyclicCode> = selfdual_enumerate(&fact).unwrap().collect();
        assert_eq!(codes.len(), 9);
        assert!(codes
            .iter()
            .any(|c| c.generator == expected.generator));
    }

    #[test]
    fn exhaustive_scan_small_matches_enumeration() {
        // n0 = 5 over GF(4), r = 1: 3 classes, 27 assignments.
        for t in 0..2u64 {
            let fact = factor_xn_minus_1(params(2, 2, t, 10)).unwrap();
            let nclasses = fact.structure.classes.len();
            assert_eq!(nclasses, 3);
            let mut lcd_found = Vec::new();
            let mut sd_found = Vec::new();
            let mut exps = vec![0u32; nclasses];
            loop {
                let code = fact.code_from_exponents(&exps).unwrap();
                if code.is_lcd() {
                    lcd_found.push(code.generator.clone());
                }
                if code.is_selfdual() {
                    sd_found.push(code.generator.clone());
                }
                let mut i = nclasses;
                let done = loop {
                    if i == 0 {
                        break true;
                    }
                    i -= 1;
                    if exps[i] < 2 {
                        exps[i] += 1;
                        break false;
                    }
                    exps[i] = 0;
                };
                if done {
                    break;
                }
            }
            let lcd: Vec<Poly> = lcd_enumerate(&fact).map(|c| c.generator).collect();
            assert_eq!(lcd.len() as u128, lcd_count(&fact.structure));
            let mut a = lcd_found.clone();
            let mut b = lcd.clone();
            a.sort_by_key(|p| p.coeffs().to_vec());
            b.sort_by_key(|p| p.coeffs().to_vec());
            assert_eq!(a, b, "LCD census mismatch at T={t}");

            let sd: Vec<Poly> = selfdual_enumerate(&fact)
                .unwrap()
                .map(|c| c.generator)
                .collect();
            assert_eq!(sd.len() as u128, selfdual_count(&fact).unwrap());
            let mut a = sd_found.clone();
            let mut b = sd.clone();
            a.sort_by_key(|p| p.coeffs().to_vec());
            b.sort_by_key(|p| p.coeffs().to_vec());
            assert_eq!(a, b, "self-dual census mismatch at T={t}");
        }
    }

    #[test]
    fn duality_basics() {
        let fact = factor_xn_minus_1(params(2, 4, 1, 34)).unwrap();
        // zero code <-> full space
        let zero = CyclicCode::from_generator(
            fact.params,
            Arc::clone(&fact.field),
            fact.xn_minus_one(),
        )
        .unwrap();
        let full = zero.galois_dual();
        assert!(full.generator.is_one());
        assert!(zero.is_lcd());
        assert!(full.is_lcd());
        assert!(!full.is_selfdual());
        // dimension identity
        let some = fact
            .code_from_exponents(&vec![1u32; fact.structure.classes.len()])
            .unwrap();
        let dual = some.galois_dual();
        assert_eq!(
            dual.generator.degree().unwrap() as u64,
            some.params.n - some.generator.degree().unwrap() as u64
        );
        // double dual preserves dimension; for 2T = 0 (mod k) it is exact
        let dd = dual.galois_dual();
        assert_eq!(dd.dimension(), dual.params.n - dual.dimension());
        let fact2 = factor_xn_minus_1(params(2, 4, 2, 34)).unwrap();
        let c = fact2
            .code_from_exponents(&vec![1u32; fact2.structure.classes.len()])
            .unwrap();
        assert_eq!(c.galois_dual().galois_dual().generator, c.generator);
        // a self-dual code equals its dual
        let sd = selfdual_enumerate(&fact2).unwrap().next().unwrap();
        assert_eq!(sd.galois_dual().generator, sd.generator);
    }

    #[test]
    fn simple_root_lengths_have_multiplicity_one() {
        let fact = factor_xn_minus_1(params(2, 4, 1, 17)).unwrap();
        assert_eq!(fact.multiplicity, 1);
        assert_eq!(lcd_count(&fact.structure), 8);
        for c in lcd_enumerate(&fact) {
            assert!(c.is_lcd());
        }
    }
}
