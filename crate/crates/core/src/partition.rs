//! Partition combinatorics and the closed-form partition-indexed quantities:
//! hooks, deformed Pochhammer symbols, C-factors, binomial coefficients and
//! operator eigenvalues.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CmsError;
use crate::scalar::{alpha, Generator, Scalar};

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored; two inputs differing by a string of zeros are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Validating constructor: parts must be weakly decreasing once the
    /// trailing zeros are removed.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, CmsError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(CmsError::NotAPartition(format!("{:?}", parts)));
        }
        Ok(Partition(parts))
    }

    /// Sorts the given multiset of positive integers into a partition.
    pub fn from_multiset(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 1-based part access; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.0.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition(out)
    }

    /// Cells (i, j) of the diagram, both 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    /// Inclusion of diagrams: every part of `other` fits inside `self`.
    pub fn includes(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Dominance order at equal weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.weight(), other.weight());
        let mut a = 0i64;
        let mut b = 0i64;
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i) as i64;
            b += other.part(i) as i64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Adds one box in row `i` (1-based); `i` may exceed the length by one.
    pub fn add_box(&self, i: usize) -> Result<Partition, CmsError> {
        if i == 0 || i > self.len() + 1 {
            return Err(CmsError::NotAPartition(format!("row {} of {}", i, self)));
        }
        let mut v = self.0.clone();
        if i == self.len() + 1 {
            v.push(1);
        } else {
            v[i - 1] += 1;
        }
        Partition::new(v)
    }

    /// Removes one box from row `i` (1-based).
    pub fn remove_box(&self, i: usize) -> Result<Partition, CmsError> {
        if i == 0 || i > self.len() {
            return Err(CmsError::NotAPartition(format!("row {} of {}", i, self)));
        }
        let mut v = self.0.clone();
        v[i - 1] -= 1;
        Partition::new(v)
    }

    /// `self + e_{J_plus} - e_{J_minus}` when that is a partition.
    pub fn shift_rows(&self, plus: &BTreeSet<usize>, minus: &BTreeSet<usize>) -> Option<Partition> {
        let max_row = plus
            .iter()
            .chain(minus.iter())
            .copied()
            .max()
            .unwrap_or(0)
            .max(self.len());
        let mut v: Vec<i64> = (1..=max_row).map(|i| self.part(i) as i64).collect();
        for &j in plus {
            v[j - 1] += 1;
        }
        for &j in minus {
            v[j - 1] -= 1;
        }
        if v.iter().any(|&p| p < 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        // weakly decreasing non-negative entries: positives form a prefix
        Some(Partition(
            v.into_iter().take_while(|&p| p > 0).map(|p| p as u32).collect(),
        ))
    }

    /// All sub-partitions mu with mu_i <= self_i, including self and empty.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        fn rec(lambda: &Partition, row: usize, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row > lambda.len() {
                out.push(Partition(cur.iter().copied().take_while(|&p| p > 0).collect()));
                return;
            }
            let hi = lambda.part(row).min(prev);
            for v in (0..=hi).rev() {
                cur.push(v);
                rec(lambda, row + 1, v, cur, out);
                cur.pop();
            }
        }
        rec(self, 1, u32::MAX, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Proper sub-partitions, strictly included in self.
    pub fn proper_sub_partitions(&self) -> Vec<Partition> {
        self.sub_partitions().into_iter().filter(|m| m != self).collect()
    }
}

/// Total order: weight ascending, then the part vectors compared
/// lexicographically. Within a weight class this extends dominance, which
/// the triangular solvers rely on.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// All partitions of exactly weight `w`, in the total order.
pub fn partitions_of_weight(w: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(w, w, &mut cur, &mut out);
    out.sort();
    out
}

/// All partitions of weight at most `w`, in the total order.
pub fn partitions_up_to_weight(w: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=w {
        out.extend(partitions_of_weight(k));
    }
    out
}

/// Disjoint row index sets carrying signs, used by the Pieri recurrences.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedIndexSet {
    pub plus: BTreeSet<usize>,
    pub minus: BTreeSet<usize>,
}

impl SignedIndexSet {
    pub fn new(plus: BTreeSet<usize>, minus: BTreeSet<usize>) -> SignedIndexSet {
        debug_assert!(plus.is_disjoint(&minus));
        SignedIndexSet { plus, minus }
    }

    pub fn size(&self) -> usize {
        self.plus.len() + self.minus.len()
    }
}

/// Arm, leg, co-arm and co-leg of a cell of the diagram.
pub fn arm_leg(lambda: &Partition, i: usize, j: usize) -> Result<(u32, u32, u32, u32), CmsError> {
    if !lambda.contains_cell(i, j) {
        return Err(CmsError::CellOutsideDiagram(i, j));
    }
    let conj = lambda.conjugate();
    let arm = lambda.part(i) - j as u32;
    let leg = conj.part(j) - i as u32;
    Ok((arm, leg, j as u32 - 1, i as u32 - 1))
}

/// Product of alpha-deformed hook lengths `prod (1 + arm + leg/alpha)`.
pub fn hook_product(lambda: &Partition) -> Scalar {
    hook_product_at(lambda, &alpha())
}

/// Hook product with an explicit deformation parameter.
pub fn hook_product_at(lambda: &Partition, alpha_val: &Scalar) -> Scalar {
    let conj = lambda.conjugate();
    let mut out = Scalar::one();
    let inv_alpha = alpha_val.inv().unwrap();
    for (i, j) in lambda.cells() {
        let arm = lambda.part(i) - j as u32;
        let leg = conj.part(j) - i as u32;
        let f = Scalar::int(1 + arm as i64).add(&inv_alpha.mul_int(leg as i64));
        out = out.mul(&f);
    }
    out
}

/// Dual hook product `prod (alpha*arm + leg + 1)`; equals
/// `alpha^|lambda|` times `c_minus_factor` at `z = 1/alpha`. Used to
/// renormalise the Hermite and Laguerre families.
pub fn dual_hook_product(lambda: &Partition) -> Scalar {
    let conj = lambda.conjugate();
    let mut out = Scalar::one();
    for (i, j) in lambda.cells() {
        let arm = lambda.part(i) - j as u32;
        let leg = conj.part(j) - i as u32;
        let f = alpha().mul_int(arm as i64).add(&Scalar::int(leg as i64 + 1));
        out = out.mul(&f);
    }
    out
}

/// Deformed Pochhammer symbol, cell-product form:
/// `prod_{(i,j)} (x + (j-1) - (i-1)/alpha)`.
pub fn deformed_pochhammer(x: &Scalar, lambda: &Partition) -> Scalar {
    deformed_pochhammer_at(x, lambda, &alpha())
}

/// Deformed Pochhammer symbol with an explicit deformation parameter.
pub fn deformed_pochhammer_at(x: &Scalar, lambda: &Partition, alpha_val: &Scalar) -> Scalar {
    let inv_alpha = alpha_val.inv().unwrap();
    let mut out = Scalar::one();
    for (i, j) in lambda.cells() {
        let f = x
            .add(&Scalar::int(j as i64 - 1))
            .sub(&inv_alpha.mul_int(i as i64 - 1));
        out = out.mul(&f);
    }
    out
}

/// Deformed Pochhammer symbol, row-product form:
/// `prod_i (x - (i-1)/alpha)_{lambda_i}` with the rising factorial.
pub fn deformed_pochhammer_rows(x: &Scalar, lambda: &Partition) -> Scalar {
    let inv_alpha = alpha().inv().unwrap();
    let mut out = Scalar::one();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let base = x.sub(&inv_alpha.mul_int(idx as i64));
        for k in 0..part as i64 {
            out = out.mul(&base.add(&Scalar::int(k)));
        }
    }
    out
}

/// `b_lambda = prod (leg + 1 + alpha*arm) / (leg + alpha + alpha*arm)`,
/// the factor relating the two standard Jack normalisations.
pub fn b_coefficient(lambda: &Partition) -> Scalar {
    let conj = lambda.conjugate();
    let mut out = Scalar::one();
    for (i, j) in lambda.cells() {
        let arm = lambda.part(i) as i64 - j as i64;
        let leg = conj.part(j) as i64 - i as i64;
        let num = Scalar::int(leg + 1).add(&alpha().mul_int(arm));
        let den = Scalar::int(leg).add(&alpha()).add(&alpha().mul_int(arm));
        out = out.mul(&num.div(&den).unwrap());
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CKind {
    Plus,
    Minus,
    Zero,
}

/// The three specialisation products C^+, C^-, C^0 evaluated at `z`.
pub fn c_factor(kind: CKind, lambda: &Partition, z: &Scalar) -> Scalar {
    let conj = lambda.conjugate();
    let inv_alpha = alpha().inv().unwrap();
    let mut out = Scalar::one();
    for (i, j) in lambda.cells() {
        let li = lambda.part(i) as i64;
        let cj = conj.part(j) as i64;
        let f = match kind {
            CKind::Plus => Scalar::int(li + j as i64)
                .sub(&inv_alpha.mul_int(cj + i as i64))
                .add(z),
            CKind::Minus => Scalar::int(li - j as i64)
                .add(&inv_alpha.mul_int(cj - i as i64))
                .add(z),
            CKind::Zero => Scalar::int(j as i64 - 1)
                .sub(&inv_alpha.mul_int(i as i64 - 1))
                .add(z),
        };
        out = out.mul(&f);
    }
    out
}

/// One-box generalised binomial coefficient `binom(lambda + e_i, lambda)`:
/// `(lambda_i + 1 + (l - i)/alpha) * prod_{j != i, j <= l}
/// (alpha(lambda_i+1-lambda_j) + j - i - 1) / (alpha(lambda_i+1-lambda_j) + j - i)`
/// where `l` is the length of `lambda + e_i`.
pub fn binomial_one_box(lambda: &Partition, i: usize) -> Result<Scalar, CmsError> {
    let upper = lambda.add_box(i)?;
    let l = upper.len();
    let inv_alpha = alpha().inv().unwrap();
    let li = lambda.part(i) as i64;
    let mut out = Scalar::int(li + 1).add(&inv_alpha.mul_int(l as i64 - i as i64));
    for j in 1..=l {
        if j == i {
            continue;
        }
        let lj = lambda.part(j) as i64;
        let base = alpha().mul_int(li + 1 - lj).add(&Scalar::int(j as i64 - i as i64));
        let num = base.sub(&Scalar::one());
        out = out.mul(&num.div(&base).unwrap());
    }
    Ok(out)
}

/// Shifted power sum evaluated at a partition:
/// `sum_i ((lambda_i - i/alpha)^r - (-i/alpha)^r)`.
pub fn shifted_power_sum(r: u32, lambda: &Partition) -> Scalar {
    let inv_alpha = alpha().inv().unwrap();
    let mut out = Scalar::zero();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let i = (idx + 1) as i64;
        let shift = inv_alpha.mul_int(-i);
        let t = Scalar::int(part as i64).add(&shift).pow(r).sub(&shift.pow(r));
        out = out.add(&t);
    }
    out
}

/// Eigenvalue data of a second-order CMS operator
/// `a2 * D^2-part + b1 * E^1-part`: the eigenvalue at `lambda` is
/// `a2 * d_lambda + b1 * |lambda|` with
/// `d_lambda = sum_i lambda_i (lambda_i - 1 + (2/alpha)(p0 - i))`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigData {
    pub a2: Scalar,
    pub b1: Scalar,
}

impl EigData {
    pub fn eigenvalue(&self, lambda: &Partition) -> Scalar {
        self.a2
            .mul(&d_lambda(lambda))
            .add(&self.b1.mul_int(lambda.weight() as i64))
    }
}

/// `d_lambda = sum_i lambda_i (lambda_i - 1 + (2/alpha)(p0 - i))`, the
/// diagonal action of the second-order generator `D^2` on the Jack basis.
pub fn d_lambda(lambda: &Partition) -> Scalar {
    let two_over_alpha = Scalar::int(2).div(&alpha()).unwrap();
    let p0 = Scalar::gen(Generator::P0);
    let mut out = Scalar::zero();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let i = (idx + 1) as i64;
        let t = Scalar::int(part as i64 - 1).add(&two_over_alpha.mul(&p0.sub(&Scalar::int(i))));
        out = out.add(&t.mul_int(part as i64));
    }
    out
}

#[derive(Clone, Debug)]
pub enum EigKind {
    /// `-2 nu^2 |lambda|`; `nu_sq` carries the square of the parameter.
    Hermite { nu_sq: Scalar },
    /// `-nu |lambda|`.
    Laguerre { nu: Scalar },
    /// `d_lambda - (p + 2q - 1)|lambda|`.
    Jacobi { p: Scalar, q: Scalar },
    /// `d_lambda`.
    D2,
    Generic { a2: Scalar, b1: Scalar },
}

impl EigKind {
    pub fn data(&self) -> EigData {
        match self {
            EigKind::Hermite { nu_sq } => EigData {
                a2: Scalar::zero(),
                b1: nu_sq.mul_int(-2),
            },
            EigKind::Laguerre { nu } => EigData {
                a2: Scalar::zero(),
                b1: nu.neg(),
            },
            EigKind::Jacobi { p, q } => EigData {
                a2: Scalar::one(),
                b1: p.add(&q.mul_int(2)).sub(&Scalar::one()).neg(),
            },
            EigKind::D2 => EigData {
                a2: Scalar::one(),
                b1: Scalar::zero(),
            },
            EigKind::Generic { a2, b1 } => EigData {
                a2: a2.clone(),
                b1: b1.clone(),
            },
        }
    }

    pub fn eigenvalue(&self, lambda: &Partition) -> Scalar {
        self.data().eigenvalue(lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::p0;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(pt(&[2, 2]).conjugate(), pt(&[2, 2]));
        for lam in partitions_up_to_weight(6) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn arms_and_legs() {
        assert_eq!(arm_leg(&pt(&[3, 1]), 1, 1).unwrap(), (2, 1, 0, 0));
        assert_eq!(arm_leg(&pt(&[1]), 1, 1).unwrap(), (0, 0, 0, 0));
        assert_eq!(arm_leg(&pt(&[2, 2]), 1, 2).unwrap(), (0, 1, 1, 0));
        assert!(matches!(
            arm_leg(&pt(&[1]), 1, 2),
            Err(CmsError::CellOutsideDiagram(1, 2))
        ));
    }

    #[test]
    fn hooks() {
        assert!(hook_product(&Partition::empty()).is_one());
        assert_eq!(hook_product(&pt(&[2])), Scalar::int(2));
        let expect = Scalar::one().add(&alpha().inv().unwrap());
        assert_eq!(hook_product(&pt(&[1, 1])), expect);
    }

    #[test]
    fn pochhammer() {
        let x = Scalar::gen(Generator::X);
        assert_eq!(deformed_pochhammer(&x, &pt(&[1])), x);
        assert_eq!(
            deformed_pochhammer(&x, &pt(&[2])),
            x.mul(&x.add(&Scalar::one()))
        );
        let expect = x.mul(&x.sub(&alpha().inv().unwrap()));
        assert_eq!(deformed_pochhammer(&x, &pt(&[1, 1])), expect);
        // the two product forms agree
        for lam in partitions_up_to_weight(6) {
            assert_eq!(
                deformed_pochhammer(&x, &lam),
                deformed_pochhammer_rows(&x, &lam),
                "pochhammer forms differ at {lam}"
            );
        }
    }

    #[test]
    fn b_values() {
        assert!(b_coefficient(&Partition::empty()).is_one());
        assert_eq!(b_coefficient(&pt(&[1])), alpha().inv().unwrap());
        let expect = Scalar::one()
            .add(&alpha())
            .div(&alpha().pow(2).mul_int(2))
            .unwrap();
        assert_eq!(b_coefficient(&pt(&[2])), expect);
    }

    #[test]
    fn b_duality() {
        // b_lambda(alpha) * b_lambda'(1/alpha) = 1
        let inv = alpha().inv().unwrap();
        for lam in partitions_up_to_weight(6) {
            let b = b_coefficient(&lam);
            let bconj = b_coefficient(&lam.conjugate())
                .substitute_one(Generator::Alpha, &inv)
                .unwrap();
            assert!(b.mul(&bconj).is_one(), "b duality fails at {lam}");
        }
    }

    #[test]
    fn c_factors() {
        let z = Scalar::gen(Generator::X);
        assert_eq!(c_factor(CKind::Zero, &pt(&[1]), &z), z);
        assert_eq!(c_factor(CKind::Minus, &pt(&[1]), &z), z);
        let expect = Scalar::int(2)
            .sub(&alpha().inv().unwrap().mul_int(2))
            .add(&z);
        assert_eq!(c_factor(CKind::Plus, &pt(&[1]), &z), expect);
        // dual hook product is alpha^|lambda| * C^-(1/alpha)
        for lam in partitions_up_to_weight(5) {
            let lhs = dual_hook_product(&lam);
            let rhs = c_factor(CKind::Minus, &lam, &alpha().inv().unwrap())
                .mul(&alpha().pow(lam.weight()));
            assert_eq!(lhs, rhs, "dual hook mismatch at {lam}");
        }
    }

    #[test]
    fn one_box_binomials() {
        assert!(binomial_one_box(&Partition::empty(), 1).unwrap().is_one());
        assert_eq!(binomial_one_box(&pt(&[1]), 1).unwrap(), Scalar::int(2));
        assert_eq!(binomial_one_box(&pt(&[1]), 2).unwrap(), Scalar::int(2));
        assert!(binomial_one_box(&pt(&[1]), 3).is_err());
    }

    #[test]
    fn shifted_power_sums() {
        for lam in partitions_up_to_weight(5) {
            assert_eq!(
                shifted_power_sum(1, &lam),
                Scalar::int(lam.weight() as i64)
            );
        }
        assert!(shifted_power_sum(1, &Partition::empty()).is_zero());
        let expect = Scalar::one().sub(&Scalar::int(2).div(&alpha()).unwrap());
        assert_eq!(shifted_power_sum(2, &pt(&[1])), expect);
    }

    #[test]
    fn eigenvalues() {
        let h = EigKind::Hermite { nu_sq: Scalar::one() };
        assert_eq!(h.eigenvalue(&pt(&[3])), Scalar::int(-6));
        let d2 = EigKind::D2;
        let expect = Scalar::int(2)
            .div(&alpha())
            .unwrap()
            .mul(&p0().sub(&Scalar::one()));
        assert_eq!(d2.eigenvalue(&pt(&[1])), expect);
        let j = EigKind::Jacobi {
            p: Scalar::gen(Generator::P),
            q: Scalar::gen(Generator::Q),
        };
        assert!(j.eigenvalue(&Partition::empty()).is_zero());
    }

    #[test]
    fn dominance_conjugation() {
        for w in 0..=6u32 {
            let parts = partitions_of_weight(w);
            for a in &parts {
                for b in &parts {
                    assert_eq!(
                        a.dominates(b),
                        b.conjugate().dominates(&a.conjugate()),
                        "dominance/conjugate mismatch at {a}, {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn total_order_extends_dominance() {
        for w in 0..=6u32 {
            let parts = partitions_of_weight(w);
            for a in &parts {
                for b in &parts {
                    if a != b && b.dominates(a) && a.dominates(b) {
                        panic!("two distinct comparable-equal partitions");
                    }
                    if a != b && b.dominates(a) {
                        assert!(a < b, "total order does not extend dominance: {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn sub_partition_enumeration() {
        let subs = pt(&[2, 1]).sub_partitions();
        let expect: Vec<Partition> = vec![
            Partition::empty(),
            pt(&[1]),
            pt(&[1, 1]),
            pt(&[2]),
            pt(&[2, 1]),
        ];
        assert_eq!(subs, expect);
    }

    #[test]
    fn shift_rows_targets() {
        use std::collections::BTreeSet;
        let lam = pt(&[2, 1]);
        let plus: BTreeSet<usize> = [1].into_iter().collect();
        let minus: BTreeSet<usize> = [2].into_iter().collect();
        assert_eq!(lam.shift_rows(&plus, &minus), Some(pt(&[3])));
        let plus: BTreeSet<usize> = [3].into_iter().collect();
        assert_eq!(lam.shift_rows(&plus, &BTreeSet::new()), Some(pt(&[2, 1, 1])));
        let minus: BTreeSet<usize> = [1].into_iter().collect();
        assert_eq!(lam.shift_rows(&BTreeSet::new(), &minus), Some(pt(&[1, 1])));
        // adding below the first row of the empty partition is not a partition
        let plus: BTreeSet<usize> = [2].into_iter().collect();
        assert_eq!(Partition::empty().shift_rows(&plus, &BTreeSet::new()), None);
    }
}
