//! Differential operators on the symmetric function ring: the derivations
//! `pd(r)` dual to the power sums, the first-order family `E^l`, the
//! second-order family `D^k`, formal sums/compositions, truncated
//! exponentials, Jack-diagonal eigenoperators, the triangular eigenfunction
//! solver for second-order operators, and conjugated eigenoperator towers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::context::Context;
use crate::error::CmsError;
use crate::partition::{partitions_up_to_weight, shifted_power_sum, EigData, Partition};
use crate::scalar::{alpha, Generator, Scalar};
use crate::symfunc::{Basis, SymFunc};

/// Polynomial in the shifted power sums `pi_r`, evaluable at partitions.
/// Keys are multisets of indices; `pi_r` has filtration degree `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedSymSpec {
    terms: BTreeMap<Partition, Scalar>,
}

impl ShiftedSymSpec {
    pub fn zero() -> ShiftedSymSpec {
        ShiftedSymSpec { terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> ShiftedSymSpec {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Partition::empty(), c);
        }
        ShiftedSymSpec { terms }
    }

    pub fn pi(r: u32) -> ShiftedSymSpec {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::new(vec![r]).unwrap(), Scalar::one());
        ShiftedSymSpec { terms }
    }

    pub fn scale(&self, c: &Scalar) -> ShiftedSymSpec {
        if c.is_zero() {
            return ShiftedSymSpec::zero();
        }
        ShiftedSymSpec {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect(),
        }
    }

    pub fn add(&self, other: &ShiftedSymSpec) -> ShiftedSymSpec {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            let sum = out.terms.get(k).map_or(v.clone(), |w| w.add(v));
            if sum.is_zero() {
                out.terms.remove(k);
            } else {
                out.terms.insert(k.clone(), sum);
            }
        }
        out
    }

    pub fn mul(&self, other: &ShiftedSymSpec) -> ShiftedSymSpec {
        let mut out = ShiftedSymSpec::zero();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let mut parts = k1.parts().to_vec();
                parts.extend_from_slice(k2.parts());
                let key = Partition::from_multiset(parts);
                let add = v1.mul(v2);
                let sum = out.terms.get(&key).map_or(add.clone(), |w| w.add(&add));
                if sum.is_zero() {
                    out.terms.remove(&key);
                } else {
                    out.terms.insert(key, sum);
                }
            }
        }
        out
    }

    /// Filtration degree: the maximal weight of a key.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|k| k.weight()).max().unwrap_or(0)
    }

    pub fn eval(&self, lambda: &Partition) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            let mut prod = c.clone();
            for &r in k.parts() {
                prod = prod.mul(&shifted_power_sum(r, lambda));
            }
            out = out.add(&prod);
        }
        out
    }
}

/// Formal differential operator expression. Composition applies right to
/// left: `Compose([A, B])` means `A` after `B`.
#[derive(Clone, Debug)]
pub enum OpExpr {
    /// Derivation dual to `p_r`.
    Pd(u32),
    /// Multiplication by a power-sum basis element.
    Mul(SymFunc),
    /// First-order CMS generator of degree `l - 1`.
    E(u32),
    /// Second-order CMS generator of degree `k - 2`.
    D(u32),
    /// Operator acting diagonally on the Jack basis with eigenvalue `f(lambda)`.
    JackDiag(ShiftedSymSpec),
    Scale(Scalar),
    Sum(Vec<OpExpr>),
    Compose(Vec<OpExpr>),
}

impl OpExpr {
    /// Structural degree-shift interval `[d_min, d_max]`.
    pub fn degree_shift(&self) -> (i64, i64) {
        match self {
            OpExpr::Pd(r) => (-(*r as i64), -(*r as i64)),
            OpExpr::Mul(f) => {
                let lo = f.terms().map(|(l, _)| l.weight() as i64).min().unwrap_or(0);
                let hi = f.terms().map(|(l, _)| l.weight() as i64).max().unwrap_or(0);
                (lo, hi)
            }
            OpExpr::E(l) => (*l as i64 - 1, *l as i64 - 1),
            OpExpr::D(k) => (*k as i64 - 2, *k as i64 - 2),
            OpExpr::JackDiag(_) | OpExpr::Scale(_) => (0, 0),
            OpExpr::Sum(v) => v.iter().fold((i64::MAX, i64::MIN), |(lo, hi), e| {
                let (a, b) = e.degree_shift();
                (lo.min(a), hi.max(b))
            }),
            OpExpr::Compose(v) => v.iter().fold((0, 0), |(lo, hi), e| {
                let (a, b) = e.degree_shift();
                (lo + a, hi + b)
            }),
        }
    }

    pub fn scaled(self, c: Scalar) -> OpExpr {
        OpExpr::Compose(vec![OpExpr::Scale(c), self])
    }

    /// Formal commutator `[A, B] = A B - B A`.
    pub fn commutator(a: OpExpr, b: OpExpr) -> OpExpr {
        OpExpr::Sum(vec![
            OpExpr::Compose(vec![a.clone(), b.clone()]),
            OpExpr::Compose(vec![OpExpr::Scale(Scalar::int(-1)), b, a]),
        ])
    }
}

/// Power sum with index `idx` as a multiplier: the basis element for
/// `idx >= 1`, the scalar generator `p0` for `idx == 0`.
fn psym_multiplier(idx: i64) -> (Option<u32>, Scalar) {
    debug_assert!(idx >= 0);
    if idx == 0 {
        (None, Scalar::gen(Generator::P0))
    } else {
        (Some(idx as u32), Scalar::one())
    }
}

fn push_part(base: &Partition, idx: Option<u32>) -> Partition {
    match idx {
        None => base.clone(),
        Some(r) => {
            let mut parts = base.parts().to_vec();
            parts.push(r);
            Partition::from_multiset(parts)
        }
    }
}

/// Derivation with respect to the power sum `p_r` (Leibniz over `p_lambda`).
pub fn pd_apply(r: u32, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis(), Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (lam, c) in f.terms() {
        let mult = lam.parts().iter().filter(|&&p| p == r).count();
        if mult == 0 {
            continue;
        }
        let mut parts = lam.parts().to_vec();
        let pos = parts.iter().position(|&p| p == r).unwrap();
        parts.remove(pos);
        out.insert_add(Partition::from_multiset(parts), c.mul_int(mult as i64));
    }
    out
}

/// `E^l = sum_r r p_{r+l-1} pd(p_r)`, truncated to the support of `f`.
pub fn e_apply(l: u32, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis(), Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (lam, c) in f.terms() {
        let mut done = std::collections::BTreeSet::new();
        for &r in lam.parts() {
            if !done.insert(r) {
                continue;
            }
            let mult = lam.parts().iter().filter(|&&p| p == r).count() as i64;
            let mut rest = lam.parts().to_vec();
            let pos = rest.iter().position(|&p| p == r).unwrap();
            rest.remove(pos);
            let base = Partition::from_multiset(rest);
            let (part, scal) = psym_multiplier(r as i64 + l as i64 - 1);
            out.insert_add(
                push_part(&base, part),
                c.mul_int(r as i64 * mult).mul(&scal),
            );
        }
    }
    out
}

/// `D^k`, the second-order CMS generator, acting on the power-sum basis.
pub fn d_apply(k: u32, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis(), Basis::PowerSum);
    let inv_alpha = alpha().inv().unwrap();
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (lam, c) in f.terms() {
        // second derivative terms: r q p_{r+q+k-2} pd(r) pd(q)
        let mut done_q = std::collections::BTreeSet::new();
        for &q in lam.parts() {
            if !done_q.insert(q) {
                continue;
            }
            let mult_q = lam.parts().iter().filter(|&&p| p == q).count() as i64;
            let mut rest_q = lam.parts().to_vec();
            let pos = rest_q.iter().position(|&p| p == q).unwrap();
            rest_q.remove(pos);
            let mut done_r = std::collections::BTreeSet::new();
            for &r in &rest_q {
                if !done_r.insert(r) {
                    continue;
                }
                let mult_r = rest_q.iter().filter(|&&p| p == r).count() as i64;
                let mut rest = rest_q.clone();
                let pos = rest.iter().position(|&p| p == r).unwrap();
                rest.remove(pos);
                let base = Partition::from_multiset(rest);
                let (part, scal) = psym_multiplier(r as i64 + q as i64 + k as i64 - 2);
                out.insert_add(
                    push_part(&base, part),
                    c.mul_int(r as i64 * q as i64 * mult_q * mult_r).mul(&scal),
                );
            }
        }
        // first-order terms
        let mut done = std::collections::BTreeSet::new();
        for &r in lam.parts() {
            if !done.insert(r) {
                continue;
            }
            let mult = lam.parts().iter().filter(|&&p| p == r).count() as i64;
            let mut rest = lam.parts().to_vec();
            let pos = rest.iter().position(|&p| p == r).unwrap();
            rest.remove(pos);
            let base = Partition::from_multiset(rest);
            let coeff = c.mul_int(r as i64 * mult);
            // r (r - 1) p_{r+k-2} pd(r), r >= 2
            if r >= 2 {
                let (part, scal) = psym_multiplier(r as i64 + k as i64 - 2);
                out.insert_add(
                    push_part(&base, part),
                    coeff.mul_int(r as i64 - 1).mul(&scal),
                );
            }
            // (1/alpha) r sum_{m=0..r+k-2} (p_{r+k-2-m} p_m - p_{r+k-2}) pd(r)
            let top = r as i64 + k as i64 - 2;
            for m in 0..=top {
                let (pa, sa) = psym_multiplier(top - m);
                let (pb, sb) = psym_multiplier(m);
                let with_both = push_part(&push_part(&base, pa), pb);
                out.insert_add(with_both, coeff.mul(&inv_alpha).mul(&sa).mul(&sb));
                let (pc, sc) = psym_multiplier(top);
                out.insert_add(
                    push_part(&base, pc),
                    coeff.mul(&inv_alpha).mul(&sc).mul_int(-1),
                );
            }
        }
    }
    out
}

/// Applies an operator expression to a power-sum basis element combination.
pub fn op_apply(ctx: &Context, op: &OpExpr, f: &SymFunc) -> Result<SymFunc, CmsError> {
    debug_assert_eq!(f.basis(), Basis::PowerSum);
    match op {
        OpExpr::Pd(r) => Ok(pd_apply(*r, f)),
        OpExpr::Mul(g) => Ok(f.mul(g)),
        OpExpr::E(l) => Ok(e_apply(*l, f)),
        OpExpr::D(k) => Ok(d_apply(*k, f)),
        OpExpr::Scale(c) => Ok(f.scale(c)),
        OpExpr::JackDiag(spec) => {
            let jf = ctx.to_jack(f)?;
            let mut scaled = SymFunc::zero(Basis::Jack);
            for (lam, c) in jf.terms() {
                scaled.insert_add(lam.clone(), c.mul(&spec.eval(lam)));
            }
            ctx.convert(&scaled, Basis::PowerSum)
        }
        OpExpr::Sum(v) => {
            let mut acc = SymFunc::zero(Basis::PowerSum);
            for e in v {
                acc = acc.add(&op_apply(ctx, e, f)?)?;
            }
            Ok(acc)
        }
        OpExpr::Compose(v) => {
            let mut acc = f.clone();
            for e in v.iter().rev() {
                acc = op_apply(ctx, e, &acc)?;
            }
            Ok(acc)
        }
    }
}

/// Matrix of an operator on the power-sum basis of weight at most `d`:
/// the map `column partition -> image`.
pub fn op_images(
    ctx: &Context,
    op: &OpExpr,
    d: u32,
) -> Result<BTreeMap<Partition, SymFunc>, CmsError> {
    let mut out = BTreeMap::new();
    for mu in partitions_up_to_weight(d) {
        let f = SymFunc::basis_elem(Basis::PowerSum, mu.clone());
        out.insert(mu, op_apply(ctx, op, &f)?);
    }
    Ok(out)
}

/// Matrix entries of the commutator `[A, B]` on `p_mu`, `|mu| <= d`, as a
/// map from (row, column) partition pairs to scalars.
pub fn commutator_eval(
    ctx: &Context,
    a: &OpExpr,
    b: &OpExpr,
    d: u32,
) -> Result<BTreeMap<(Partition, Partition), Scalar>, CmsError> {
    let comm = OpExpr::commutator(a.clone(), b.clone());
    let mut out = BTreeMap::new();
    for (mu, image) in op_images(ctx, &comm, d)? {
        for (row, c) in image.terms() {
            out.insert((row.clone(), mu.clone()), c.clone());
        }
    }
    Ok(out)
}

/// True when `A` and `B` act identically on all `p_mu` with `|mu| <= d`.
pub fn ops_equal_on(ctx: &Context, a: &OpExpr, b: &OpExpr, d: u32) -> Result<bool, CmsError> {
    for mu in partitions_up_to_weight(d) {
        let f = SymFunc::basis_elem(Basis::PowerSum, mu);
        let ia = op_apply(ctx, a, &f)?;
        let ib = op_apply(ctx, b, &f)?;
        if ia.sub(&ib)? != SymFunc::zero(Basis::PowerSum) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Truncated exponential `exp_L(A) f = sum_{k=0..L} A^k f / k!`.
pub fn exp_truncated(
    ctx: &Context,
    op: &OpExpr,
    l: u32,
    f: &SymFunc,
) -> Result<SymFunc, CmsError> {
    let mut acc = f.clone();
    let mut term = f.clone();
    for k in 1..=l {
        term = op_apply(ctx, op, &term)?.scale(&Scalar::from_rat(BigRational::new(
            BigInt::from(1),
            BigInt::from(k),
        )));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// A second-order CMS operator together with its eigenvalue data.
#[derive(Clone, Debug)]
pub struct CmsOperator {
    pub expr: OpExpr,
    pub eig: EigData,
}

impl CmsOperator {
    pub fn eigenvalue(&self, lambda: &Partition) -> Scalar {
        self.eig.eigenvalue(lambda)
    }

    /// `D^0 - 2 nu^2 E^1`; `nu_sq` is the squared parameter.
    pub fn hermite(nu_sq: &Scalar) -> CmsOperator {
        CmsOperator {
            expr: OpExpr::Sum(vec![
                OpExpr::D(0),
                OpExpr::E(1).scaled(nu_sq.mul_int(-2)),
            ]),
            eig: EigData {
                a2: Scalar::zero(),
                b1: nu_sq.mul_int(-2),
            },
        }
    }

    /// `D^1 + (a+1) E^0 - nu E^1`.
    pub fn laguerre(a: &Scalar, nu: &Scalar) -> CmsOperator {
        CmsOperator {
            expr: OpExpr::Sum(vec![
                OpExpr::D(1),
                OpExpr::E(0).scaled(a.add(&Scalar::one())),
                OpExpr::E(1).scaled(nu.neg()),
            ]),
            eig: EigData {
                a2: Scalar::zero(),
                b1: nu.neg(),
            },
        }
    }

    /// `D^2 + 2 D^1 - (p + 2q - 1) E^1 - (2p + 2q - 1) E^0`.
    pub fn jacobi(p: &Scalar, q: &Scalar) -> CmsOperator {
        let b1 = p.add(&q.mul_int(2)).sub(&Scalar::one()).neg();
        let b0 = p.mul_int(2).add(&q.mul_int(2)).sub(&Scalar::one()).neg();
        CmsOperator {
            expr: OpExpr::Sum(vec![
                OpExpr::D(2),
                OpExpr::D(1).scaled(Scalar::int(2)),
                OpExpr::E(1).scaled(b1.clone()),
                OpExpr::E(0).scaled(b0),
            ]),
            eig: EigData { a2: Scalar::one(), b1 },
        }
    }

    /// The stable Jack operator `D^2 - (2/alpha)(p0 - 1) E^1`.
    pub fn jack() -> CmsOperator {
        let b1 = Scalar::int(-2)
            .div(&alpha())
            .unwrap()
            .mul(&Scalar::gen(Generator::P0).sub(&Scalar::one()));
        CmsOperator {
            expr: OpExpr::Sum(vec![OpExpr::D(2), OpExpr::E(1).scaled(b1.clone())]),
            eig: EigData { a2: Scalar::one(), b1 },
        }
    }

    /// Generic operator `a2 D^2 + a1 D^1 + a0 D^0 + b1 E^1 + b0 E^0`.
    pub fn generic(coeffs: &[Scalar; 5]) -> CmsOperator {
        let [a2, a1, a0, b1, b0] = coeffs;
        CmsOperator {
            expr: OpExpr::Sum(vec![
                OpExpr::D(2).scaled(a2.clone()),
                OpExpr::D(1).scaled(a1.clone()),
                OpExpr::D(0).scaled(a0.clone()),
                OpExpr::E(1).scaled(b1.clone()),
                OpExpr::E(0).scaled(b0.clone()),
            ]),
            eig: EigData { a2: a2.clone(), b1: b1.clone() },
        }
    }
}

/// Unique eigenfunction `F = P_lambda + sum_{mu strictly included} u_mu P_mu`
/// of a second-order CMS operator, solved by back substitution along the
/// inclusion order. Jack-basis output.
pub fn triangular_eigenfunction(
    ctx: &Context,
    op: &CmsOperator,
    lambda: &Partition,
) -> Result<SymFunc, CmsError> {
    let subs = lambda.sub_partitions();
    // images of P_nu in the Jack basis
    let mut action: BTreeMap<Partition, SymFunc> = BTreeMap::new();
    for nu in &subs {
        let p_nu = ctx.jack_in_p(nu)?;
        let image = op_apply(ctx, &op.expr, &p_nu)?;
        action.insert(nu.clone(), ctx.to_jack(&image)?);
    }
    let eig_top = op.eigenvalue(lambda);
    let mut u: BTreeMap<Partition, Scalar> = BTreeMap::new();
    u.insert(lambda.clone(), Scalar::one());
    for mu in subs.iter().rev() {
        if mu == lambda {
            continue;
        }
        let mut num = Scalar::zero();
        for (nu, unu) in &u {
            if !nu.includes(mu) || nu == mu {
                continue;
            }
            num = num.add(&unu.mul(&action[nu].coeff(mu)));
        }
        if num.is_zero() {
            continue;
        }
        let gap = eig_top.sub(&op.eigenvalue(mu));
        if gap.is_zero() {
            return Err(CmsError::DegenerateEigenvalue(
                lambda.to_string(),
                mu.to_string(),
            ));
        }
        u.insert(mu.clone(), num.div(&gap)?);
    }
    let mut out = SymFunc::zero(Basis::Jack);
    for (mu, c) in u {
        out.insert_add(mu, c);
    }
    Ok(out)
}

/// Product representation of the same eigenfunction:
/// `prod_{mu strictly included} (L - eps_mu) / (eps_lambda - eps_mu)`
/// applied to `P_lambda`. Jack-basis output.
pub fn frep_eigenfunction(
    ctx: &Context,
    op: &CmsOperator,
    lambda: &Partition,
) -> Result<SymFunc, CmsError> {
    let eig_top = op.eigenvalue(lambda);
    let mut v = ctx.jack_in_p(lambda)?;
    for mu in lambda.proper_sub_partitions() {
        let eps = op.eigenvalue(&mu);
        let gap = eig_top.sub(&eps);
        if gap.is_zero() {
            return Err(CmsError::DegenerateEigenvalue(
                lambda.to_string(),
                mu.to_string(),
            ));
        }
        let image = op_apply(ctx, &op.expr, &v)?;
        v = image.sub(&v.scale(&eps))?.scale(&gap.inv()?);
    }
    ctx.to_jack(&v)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConjugationKind {
    Hermite,
    Laguerre,
}

/// Eigenoperator for the Hermite or Laguerre family attached to a shifted
/// symmetric polynomial `f`: the finite conjugation series
/// `sum_{j=0..deg f} c_j ad_A^j (L_f)` with `A = D^0` (Hermite,
/// `c_j = (-1)^j / (4^j j!)`) or `A = D^1 + (a+1) E^0` (Laguerre,
/// `c_j = (-1)^j / j!`).
pub fn conjugated_eigenop(kind: ConjugationKind, f: &ShiftedSymSpec, a: &Scalar) -> OpExpr {
    let k = f.degree();
    let base = OpExpr::JackDiag(f.clone());
    let conjugator = match kind {
        ConjugationKind::Hermite => OpExpr::D(0),
        ConjugationKind::Laguerre => OpExpr::Sum(vec![
            OpExpr::D(1),
            OpExpr::E(0).scaled(a.add(&Scalar::one())),
        ]),
    };
    let mut terms = vec![base.clone()];
    let mut nested = base;
    let mut factorial = BigInt::from(1);
    for j in 1..=k {
        nested = OpExpr::commutator(conjugator.clone(), nested);
        factorial *= BigInt::from(j);
        let denom = match kind {
            ConjugationKind::Hermite => BigInt::from(4).pow(j) * &factorial,
            ConjugationKind::Laguerre => factorial.clone(),
        };
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = Scalar::from_rat(BigRational::new(BigInt::from(sign), denom));
        terms.push(nested.clone().scaled(c));
    }
    OpExpr::Sum(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::p0;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn p_elem(parts: &[u32]) -> SymFunc {
        SymFunc::basis_elem(Basis::PowerSum, pt(parts))
    }

    #[test]
    fn derivations() {
        assert_eq!(pd_apply(2, &p_elem(&[2])), SymFunc::one(Basis::PowerSum));
        assert!(pd_apply(2, &p_elem(&[1, 1])).is_zero());
        assert_eq!(pd_apply(1, &p_elem(&[1, 1])), p_elem(&[1]).scale(&Scalar::int(2)));
    }

    #[test]
    fn e_family() {
        // E^0 p_1 = p0 (the scalar)
        let f = e_apply(0, &p_elem(&[1]));
        assert_eq!(f, SymFunc::constant(Basis::PowerSum, p0()));
        // E^1 acts as the degree
        for lam in partitions_up_to_weight(5) {
            let f = SymFunc::basis_elem(Basis::PowerSum, lam.clone());
            assert_eq!(e_apply(1, &f), f.scale(&Scalar::int(lam.weight() as i64)));
        }
        // E^2 p_1 = p_2
        assert_eq!(e_apply(2, &p_elem(&[1])), p_elem(&[2]));
    }

    #[test]
    fn d_family() {
        // D^0 p_1 = 0
        assert!(d_apply(0, &p_elem(&[1])).is_zero());
        // D^0 p_2 = 2 p0 + (2/alpha)(p0^2 - p0)
        let f = d_apply(0, &p_elem(&[2]));
        let expect = p0()
            .mul_int(2)
            .add(&Scalar::int(2).div(&alpha()).unwrap().mul(&p0().pow(2).sub(&p0())));
        assert_eq!(f, SymFunc::constant(Basis::PowerSum, expect));
        // D^1 p_1 = (1/alpha)(p0^2 - p0)
        let f = d_apply(1, &p_elem(&[1]));
        let expect = p0().pow(2).sub(&p0()).div(&alpha()).unwrap();
        assert_eq!(f, SymFunc::constant(Basis::PowerSum, expect));
    }

    #[test]
    fn degree_shifts() {
        assert_eq!(OpExpr::Pd(3).degree_shift(), (-3, -3));
        assert_eq!(OpExpr::E(0).degree_shift(), (-1, -1));
        assert_eq!(OpExpr::D(3).degree_shift(), (1, 1));
        let sum = OpExpr::Sum(vec![OpExpr::E(2), OpExpr::D(0)]);
        assert_eq!(sum.degree_shift(), (-2, 1));
        let comp = OpExpr::Compose(vec![OpExpr::E(0), OpExpr::D(0)]);
        assert_eq!(comp.degree_shift(), (-3, -3));
    }

    #[test]
    fn shifted_spec_eval() {
        let pi1 = ShiftedSymSpec::pi(1);
        assert_eq!(pi1.eval(&pt(&[2, 1])), Scalar::int(3));
        let sq = pi1.mul(&pi1);
        assert_eq!(sq.eval(&pt(&[2, 1])), Scalar::int(9));
        assert_eq!(sq.degree(), 2);
        assert_eq!(ShiftedSymSpec::pi(2).degree(), 2);
    }
}
