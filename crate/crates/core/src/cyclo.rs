//! `q^k`-cyclotomic classes of finite abelian groups: orbits of elements
//! under multiplication by `q^k`, their classification as stable or not
//! under `g -> -q^T * g` (by two independent routes), and counting formulas
//! for the number of classes of each kind.

use std::collections::HashSet;

use thiserror::Error;

use crate::arith::{factorize, gcd, lcm, mod_mul, mod_pow, mult_order};
use crate::good::{decide, GoodParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("group must have at least one cyclic factor, each of positive order")]
    BadGroup,
    #[error("group order {order} is not coprime to q={q}")]
    NotCoprime { q: u64, order: u64 },
    #[error("group order overflows u64")]
    Overflow,
}

/// A finite abelian group given as a product of cyclic groups; elements are
/// tuples `(g_1, ..., g_t)` with `g_i` in `[0, n_i)`, written additively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    orders: Vec<u64>,
}

pub type GroupElem = Vec<u64>;

impl AbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self, CycloError> {
        if orders.is_empty() || orders.iter().any(|&n| n == 0) {
            return Err(CycloError::BadGroup);
        }
        let mut prod = 1u64;
        for &n in &orders {
            prod = prod.checked_mul(n).ok_or(CycloError::Overflow)?;
        }
        if prod > i64::MAX as u64 {
            return Err(CycloError::Overflow);
        }
        Ok(Self { orders })
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(vec![n]).expect("positive order")
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    pub fn zero(&self) -> GroupElem {
        vec![0; self.orders.len()]
    }

    fn reduce(&self, g: &[u64]) -> GroupElem {
        assert_eq!(g.len(), self.orders.len(), "element rank mismatch");
        g.iter().zip(&self.orders).map(|(&x, &n)| x % n).collect()
    }

    /// Additive order of an element.
    pub fn elem_order(&self, g: &[u64]) -> u64 {
        self.reduce(g)
            .iter()
            .zip(&self.orders)
            .map(|(&x, &n)| n / gcd(x, n))
            .fold(1, lcm)
    }

    /// Componentwise scalar multiple `s * g`, with `s` given per component
    /// already reduced by the caller or not.
    pub fn scalar_mul(&self, s: u64, g: &[u64]) -> GroupElem {
        self.reduce(g)
            .iter()
            .zip(&self.orders)
            .map(|(&x, &n)| mod_mul(s % n, x, n))
            .collect()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            group: self,
            next: Some(self.zero()),
        }
    }

    /// `-q^T * g`, computed componentwise.
    pub fn neg_power_mul(&self, q: u64, t: u64, g: &[u64]) -> GroupElem {
        self.reduce(g)
            .iter()
            .zip(&self.orders)
            .map(|(&x, &n)| {
                let m = mod_pow(q % n, t, n);
                mod_mul((n - m % n) % n, x, n)
            })
            .collect()
    }
}

pub struct Elements<'a> {
    group: &'a AbelianGroup,
    next: Option<GroupElem>,
}

impl Iterator for Elements<'_> {
    type Item = GroupElem;

    fn next(&mut self) -> Option<GroupElem> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let orders = self.group.orders();
        let mut i = succ.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < orders[i] {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// One `q^k`-cyclotomic class: the orbit of an element under `g -> q^k * g`.
/// Members are sorted lexicographically and the representative is the
/// smallest member; the size equals the order of `q^k` modulo the common
/// element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycClass {
    pub rep: GroupElem,
    pub members: Vec<GroupElem>,
    pub elem_order: u64,
}

impl CycClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        self.members.binary_search(g).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTag {
    /// The class is stable under `g -> -q^T * g`.
    TypeT,
    /// It is not.
    TypeTPrime,
}

fn require_coprime(group: &AbelianGroup, q: u64) -> Result<(), CycloError> {
    let order = group.order();
    if gcd(q, order) != 1 {
        return Err(CycloError::NotCoprime { q, order });
    }
    Ok(())
}

/// The class of `g` under multiplication by `q^k`.
pub fn class_of(
    group: &AbelianGroup,
    g: &[u64],
    q: u64,
    k: u64,
) -> Result<CycClass, CycloError> {
    require_coprime(group, q)?;
    // per-component multiplier q^k mod n_i
    let mults: Vec<u64> = group
        .orders()
        .iter()
        .map(|&n| mod_pow(q % n, k, n))
        .collect();
    let start = group.reduce(g);
    let mut members = Vec::new();
    let mut cur = start.clone();
    loop {
        members.push(cur.clone());
        cur = cur
            .iter()
            .zip(&mults)
            .zip(group.orders())
            .map(|((&x, &m), &n)| mod_mul(x, m, n))
            .collect();
        if cur == start {
            break;
        }
    }
    members.sort_unstable();
    let elem_order = group.elem_order(&start);
    let class = CycClass {
        rep: members[0].clone(),
        members,
        elem_order,
    };
    debug_assert_eq!(
        class.size() as u64,
        order_of_qk_mod(q, k, class.elem_order),
        "class size must equal ord_d(q^k)"
    );
    Ok(class)
}

pub(crate) fn order_of_qk_mod(q: u64, k: u64, d: u64) -> u64 {
    if d == 1 {
        return 1;
    }
    mult_order(mod_pow(q % d, k, d) as i64, d).expect("q coprime to d")
}

/// The partition of the group into `q^k`-cyclotomic classes, ordered by
/// representative.
pub fn all_classes(group: &AbelianGroup, q: u64, k: u64) -> Result<Vec<CycClass>, CycloError> {
    require_coprime(group, q)?;
    let mut seen: HashSet<GroupElem> = HashSet::with_capacity(group.order() as usize);
    let mut out = Vec::new();
    for g in group.elements() {
        if seen.contains(&g) {
            continue;
        }
        let class = class_of(group, &g, q, k)?;
        for m in &class.members {
            seen.insert(m.clone());
        }
        out.push(class);
    }
    Ok(out)
}

/// Stability test by direct orbit membership: the class is stable iff
/// `-q^T * rep` lies in it.
pub fn type_of_direct(
    group: &AbelianGroup,
    class: &CycClass,
    q: u64,
    t: u64,
) -> Result<TypeTag, CycloError> {
    require_coprime(group, q)?;
    let image = group.neg_power_mul(q, t, &class.rep);
    Ok(if class.contains(&image) {
        TypeTag::TypeT
    } else {
        TypeTag::TypeTPrime
    })
}

/// Stability test through arithmetic: the class is stable iff the common
/// element order is a member for parameters `(q, 1, k, T)`.
pub fn type_of_arith(class: &CycClass, q: u64, k: u64, t: u64) -> TypeTag {
    let params = GoodParams::new(q as i64, 1, k, t).expect("q >= 2 is coprime to 1");
    if decide(class.elem_order, &params).member {
        TypeTag::TypeT
    } else {
        TypeTag::TypeTPrime
    }
}

fn vp(p: u64, mut n: u64) -> u32 {
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// Number of elements of the group whose order is exactly `d`, computed
/// multiplicatively prime by prime.
pub fn count_elements_of_order(group: &AbelianGroup, d: u64) -> u64 {
    assert!(d >= 1);
    if d == 1 {
        return 1;
    }
    if group.exponent() % d != 0 {
        return 0;
    }
    let mut total = 1u64;
    for &(p, a) in factorize(d).factors() {
        let count_dividing = |j: u32| -> u64 {
            group
                .orders()
                .iter()
                .map(|&n| p.pow(j.min(vp(p, n))))
                .product()
        };
        total *= count_dividing(a) - count_dividing(a - 1);
    }
    total
}

/// Counts of classes that are stable / not stable under `g -> -q^T g`,
/// summed over divisors of the exponent.
pub fn count_types(
    group: &AbelianGroup,
    q: u64,
    k: u64,
    t: u64,
) -> Result<(u64, u64), CycloError> {
    require_coprime(group, q)?;
    let params = GoodParams::new(q as i64, 1, k, t).expect("q coprime to 1");
    let mut stable = 0u64;
    let mut split = 0u64;
    for d in factorize(group.exponent()).divisors() {
        let elems = count_elements_of_order(group, d);
        let size = order_of_qk_mod(q, k, d);
        assert_eq!(elems % size, 0, "class count must be integral at d={d}");
        let classes = elems / size;
        if decide(d, &params).member {
            stable += classes;
        } else {
            split += classes;
        }
    }
    Ok((stable, split))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> AbelianGroup {
        AbelianGroup::cyclic(n)
    }

    #[test]
    fn class_of_examples() {
        let c = class_of(&z(35), &[1], 3, 4).unwrap();
        assert_eq!(c.members, vec![vec![1], vec![11], vec![16]]);
        assert_eq!(c.elem_order, 35);

        let c = class_of(&z(35), &[0], 3, 4).unwrap();
        assert_eq!(c.members, vec![vec![0]]);
        assert_eq!(c.elem_order, 1);

        let c = class_of(&z(17), &[1], 2, 4).unwrap();
        assert_eq!(c.members, vec![vec![1], vec![16]]);
    }

    #[test]
    fn class_of_rejects_shared_factor() {
        assert_eq!(
            class_of(&z(35), &[1], 5, 1),
            Err(CycloError::NotCoprime { q: 5, order: 35 })
        );
    }

    #[test]
    fn all_classes_examples() {
        assert_eq!(all_classes(&z(35), 3, 4).unwrap().len(), 15);
        assert_eq!(all_classes(&z(17), 2, 4).unwrap().len(), 9);
        assert_eq!(all_classes(&z(1), 7, 2).unwrap().len(), 1);
    }

    #[test]
    fn partition_covers_group() {
        for n in [1u64, 17, 35, 70, 140, 280] {
            let g = z(n);
            let classes = all_classes(&g, 3, 4).unwrap();
            if n % 3 == 0 {
                continue;
            }
            let total: usize = classes.iter().map(|c| c.size()).sum();
            assert_eq!(total as u64, n);
            // representatives strictly increasing
            for w in classes.windows(2) {
                assert!(w[0].rep < w[1].rep);
            }
        }
    }

    #[test]
    fn type_direct_examples() {
        let g = z(35);
        let classes = all_classes(&g, 3, 4).unwrap();
        let find = |r: u64| classes.iter().find(|c| c.rep == vec![r]).unwrap();
        assert_eq!(type_of_direct(&g, find(5), 3, 1).unwrap(), TypeTag::TypeT);
        assert_eq!(type_of_direct(&g, find(7), 3, 2).unwrap(), TypeTag::TypeT);
        assert_eq!(
            type_of_direct(&g, find(1), 3, 0).unwrap(),
            TypeTag::TypeTPrime
        );
    }

    #[test]
    fn type_arith_examples() {
        let g = z(35);
        let classes = all_classes(&g, 3, 4).unwrap();
        let find = |r: u64| classes.iter().find(|c| c.rep == vec![r]).unwrap();
        assert_eq!(type_of_arith(find(5), 3, 4, 2), TypeTag::TypeTPrime); // order 7
        assert_eq!(type_of_arith(find(7), 3, 4, 2), TypeTag::TypeT); // order 5
        for t in 0..4 {
            assert_eq!(type_of_arith(find(0), 3, 4, t), TypeTag::TypeT);
            assert_eq!(type_of_arith(find(1), 3, 4, t), TypeTag::TypeTPrime); // order 35
        }
    }

    #[test]
    fn full_type_grid_for_z35() {
        let g = z(35);
        let classes = all_classes(&g, 3, 4).unwrap();
        let reps: Vec<u64> = classes.iter().map(|c| c.rep[0]).collect();
        assert_eq!(reps, vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 12, 14, 15, 19, 21, 28]);
        let expected: Vec<(u64, [bool; 4])> = vec![
            (0, [true, true, true, true]),
            (1, [false, false, false, false]),
            (2, [false, false, false, false]),
            (3, [false, false, false, false]),
            (4, [false, false, false, false]),
            (5, [false, true, false, true]),
            (6, [false, false, false, false]),
            (7, [false, false, true, false]),
            (8, [false, false, false, false]),
            (12, [false, false, false, false]),
            (14, [false, false, true, false]),
            (15, [false, true, false, true]),
            (19, [false, false, false, false]),
            (21, [false, false, true, false]),
            (28, [false, false, true, false]),
        ];
        for (class, (rep, kinds)) in classes.iter().zip(&expected) {
            assert_eq!(class.rep[0], *rep);
            for t in 0..4u64 {
                let want = if kinds[t as usize] {
                    TypeTag::TypeT
                } else {
                    TypeTag::TypeTPrime
                };
                assert_eq!(
                    type_of_direct(&g, class, 3, t).unwrap(),
                    want,
                    "rep={rep} T={t}"
                );
            }
        }
    }

    #[test]
    fn routes_agree_on_cyclic_groups() {
        for q in [2u64, 3, 4, 5] {
            for n in 1..=300u64 {
                if gcd(n, q) != 1 {
                    continue;
                }
                let g = z(n);
                for k in 1..=4u64 {
                    let classes = all_classes(&g, q, k).unwrap();
                    for t in 0..k {
                        for class in &classes {
                            assert_eq!(
                                type_of_direct(&g, class, q, t).unwrap(),
                                type_of_arith(class, q, k, t),
                                "n={n} q={q} k={k} T={t} rep={:?}",
                                class.rep
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn propagation_and_symmetry_of_types() {
        use crate::good::ckt;
        let g = z(91); // 7 * 13, coprime to 3
        for k in 1..=4u64 {
            let classes = all_classes(&g, 3, k).unwrap();
            for t in 0..k {
                let set = ckt(k, t);
                for class in &classes {
                    let at_t = type_of_direct(&g, class, 3, t).unwrap();
                    let all = set
                        .elements()
                        .iter()
                        .all(|&i| type_of_direct(&g, class, 3, i).unwrap() == TypeTag::TypeT);
                    assert_eq!(at_t == TypeTag::TypeT, all, "k={k} T={t} rep={:?}", class.rep);
                    let mirror = type_of_direct(&g, class, 3, (k - t) % k).unwrap();
                    assert_eq!(at_t, mirror, "symmetry k={k} T={t}");
                }
            }
        }
    }

    #[test]
    fn order_counts() {
        assert_eq!(count_elements_of_order(&z(70), 14), 6);
        assert_eq!(count_elements_of_order(&z(70), 1), 1);
        assert_eq!(
            count_elements_of_order(&AbelianGroup::new(vec![2, 2]).unwrap(), 2),
            3
        );
        assert_eq!(count_elements_of_order(&z(10), 3), 0);
    }

    #[test]
    fn order_counts_match_brute_force() {
        let groups = [
            AbelianGroup::new(vec![35]).unwrap(),
            AbelianGroup::new(vec![2, 2]).unwrap(),
            AbelianGroup::new(vec![4, 6]).unwrap(),
            AbelianGroup::new(vec![2, 3, 4]).unwrap(),
            AbelianGroup::new(vec![9, 27]).unwrap(),
            AbelianGroup::new(vec![100]).unwrap(),
        ];
        for g in &groups {
            let expo = g.exponent();
            for d in factorize(expo).divisors() {
                let direct = g.elements().filter(|e| g.elem_order(e) == d).count() as u64;
                assert_eq!(
                    count_elements_of_order(g, d),
                    direct,
                    "orders={:?} d={d}",
                    g.orders()
                );
            }
            let total: u64 = factorize(expo)
                .divisors()
                .into_iter()
                .map(|d| count_elements_of_order(g, d))
                .sum();
            assert_eq!(total, g.order());
        }
    }

    #[test]
    fn count_types_examples() {
        assert_eq!(count_types(&z(35), 3, 4, 2).unwrap(), (5, 10));
        // Z_140 and Z_280 have 60 and 120 classes in total; the split counts
        // below are pinned by the direct-tally test over these exact groups.
        assert_eq!(count_types(&z(140), 3, 4, 1).unwrap(), (12, 48));
        assert_eq!(count_types(&z(280), 3, 4, 0).unwrap(), (2, 118));
    }

    #[test]
    fn count_types_match_direct_tally() {
        let groups = [
            AbelianGroup::new(vec![35]).unwrap(),
            AbelianGroup::new(vec![70]).unwrap(),
            AbelianGroup::new(vec![140]).unwrap(),
            AbelianGroup::new(vec![280]).unwrap(),
            AbelianGroup::new(vec![5, 7]).unwrap(),
            AbelianGroup::new(vec![2, 35]).unwrap(),
        ];
        for g in &groups {
            for k in 1..=4u64 {
                let classes = all_classes(g, 3, k).unwrap();
                for t in 0..k {
                    let stable = classes
                        .iter()
                        .filter(|c| type_of_direct(g, c, 3, t).unwrap() == TypeTag::TypeT)
                        .count() as u64;
                    let (s, sp) = count_types(g, 3, k, t).unwrap();
                    assert_eq!(s, stable, "orders={:?} k={k} T={t}", g.orders());
                    assert_eq!(s + sp, classes.len() as u64);
                }
            }
        }
    }

    #[test]
    fn elements_iteration_is_lexicographic() {
        let g = AbelianGroup::new(vec![2, 3]).unwrap();
        let all: Vec<GroupElem> = g.elements().collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
    }
}
