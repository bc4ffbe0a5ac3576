//! Degree-truncated hypergeometric series in Jack arguments, the tensor
//! square of the symmetric function ring, lifted operators, and residual
//! checks of the hypergeometric differential equations and generating
//! function identities.

use std::collections::BTreeMap;

use crate::context::Context;
use crate::error::CmsError;
use crate::family::{eps_p0_jack, family_element, FamilySpec};
use crate::ops::{op_apply, OpExpr};
use crate::partition::{deformed_pochhammer, hook_product, partitions_up_to_weight, Partition};
use crate::scalar::{alpha, Generator, Scalar};
use crate::symfunc::{Basis, SymFunc};

/// Degree-truncated element of the completed tensor square. Every stored
/// pair satisfies `|left| + |right| <= max_deg`, and every retained
/// coefficient is exact for the series it truncates.
#[derive(Clone, Debug)]
pub struct TensorSeries {
    pub max_deg: u32,
    pub left_basis: Basis,
    pub right_basis: Basis,
    terms: BTreeMap<(Partition, Partition), Scalar>,
}

impl TensorSeries {
    pub fn zero(max_deg: u32, left_basis: Basis, right_basis: Basis) -> TensorSeries {
        TensorSeries { max_deg, left_basis, right_basis, terms: BTreeMap::new() }
    }

    pub fn one(max_deg: u32, basis: Basis) -> TensorSeries {
        let mut t = TensorSeries::zero(max_deg, basis, basis);
        t.insert_add(Partition::empty(), Partition::empty(), Scalar::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn insert_add(&mut self, left: Partition, right: Partition, c: Scalar) {
        if c.is_zero() || left.weight() + right.weight() > self.max_deg {
            return;
        }
        let key = (left, right);
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn truncate_to(&mut self, max_deg: u32) {
        self.max_deg = max_deg;
        self.terms
            .retain(|(l, r), _| l.weight() + r.weight() <= max_deg);
    }

    pub fn add(&self, other: &TensorSeries) -> TensorSeries {
        assert_eq!(self.left_basis, other.left_basis);
        assert_eq!(self.right_basis, other.right_basis);
        let mut out = self.clone();
        out.truncate_to(self.max_deg.min(other.max_deg));
        for ((l, r), c) in &other.terms {
            out.insert_add(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorSeries) -> TensorSeries {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TensorSeries {
        let mut out = TensorSeries::zero(self.max_deg, self.left_basis, self.right_basis);
        for ((l, r), k) in &self.terms {
            out.insert_add(l.clone(), r.clone(), k.mul(c));
        }
        out
    }

    /// Converts one slot to another basis.
    pub fn convert_slot(
        &self,
        ctx: &Context,
        left: bool,
        target: Basis,
    ) -> Result<TensorSeries, CmsError> {
        let source = if left { self.left_basis } else { self.right_basis };
        if source == target {
            return Ok(self.clone());
        }
        let mut out = TensorSeries::zero(
            self.max_deg,
            if left { target } else { self.left_basis },
            if left { self.right_basis } else { target },
        );
        for ((l, r), c) in &self.terms {
            let key = if left { l } else { r };
            let expanded = ctx.convert(&SymFunc::basis_elem(source, key.clone()), target)?;
            for (nu, d) in expanded.terms() {
                if left {
                    out.insert_add(nu.clone(), r.clone(), c.mul(d));
                } else {
                    out.insert_add(l.clone(), nu.clone(), c.mul(d));
                }
            }
        }
        Ok(out)
    }

    pub fn to_power_sum_slots(&self, ctx: &Context) -> Result<TensorSeries, CmsError> {
        self.convert_slot(ctx, true, Basis::PowerSum)?
            .convert_slot(ctx, false, Basis::PowerSum)
    }

    /// Product; both operands must have power-sum slots. The validity
    /// degree is the minimum of the operands'.
    pub fn mul(&self, other: &TensorSeries) -> TensorSeries {
        assert_eq!(self.left_basis, Basis::PowerSum);
        assert_eq!(self.right_basis, Basis::PowerSum);
        assert_eq!(other.left_basis, Basis::PowerSum);
        assert_eq!(other.right_basis, Basis::PowerSum);
        let mut out = TensorSeries::zero(
            self.max_deg.min(other.max_deg),
            Basis::PowerSum,
            Basis::PowerSum,
        );
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let mut lp = l1.parts().to_vec();
                lp.extend_from_slice(l2.parts());
                let mut rp = r1.parts().to_vec();
                rp.extend_from_slice(r2.parts());
                out.insert_add(
                    Partition::from_multiset(lp),
                    Partition::from_multiset(rp),
                    c1.mul(c2),
                );
            }
        }
        out
    }
}

/// Applies an operator in one slot. The validity degree drops by the
/// most-lowering component of the operator's shift interval, so every
/// retained coefficient stays exact.
pub fn tensor_op_apply(
    ctx: &Context,
    left: bool,
    op: &OpExpr,
    f: &TensorSeries,
) -> Result<TensorSeries, CmsError> {
    let as_p = if left {
        f.convert_slot(ctx, true, Basis::PowerSum)?
    } else {
        f.convert_slot(ctx, false, Basis::PowerSum)?
    };
    let (lo, _hi) = op.degree_shift();
    let new_deg = (as_p.max_deg as i64 + lo.min(0)).max(0) as u32;
    let mut out = TensorSeries::zero(
        new_deg,
        if left { Basis::PowerSum } else { as_p.left_basis },
        if left { as_p.right_basis } else { Basis::PowerSum },
    );
    // group by acted slot key to apply the operator once per key
    let mut images: BTreeMap<Partition, SymFunc> = BTreeMap::new();
    for ((l, r), c) in as_p.terms() {
        let key = if left { l } else { r };
        if !images.contains_key(key) {
            let image = op_apply(
                ctx,
                op,
                &SymFunc::basis_elem(Basis::PowerSum, key.clone()),
            )?;
            images.insert(key.clone(), image);
        }
        let image = &images[key];
        for (nu, d) in image.terms() {
            if left {
                out.insert_add(nu.clone(), r.clone(), c.mul(d));
            } else {
                out.insert_add(l.clone(), nu.clone(), c.mul(d));
            }
        }
    }
    Ok(out)
}

fn pochhammer_or_pole(b: &Scalar, lambda: &Partition) -> Result<Scalar, CmsError> {
    let v = deformed_pochhammer(b, lambda);
    if !v.is_zero() {
        return Ok(v);
    }
    let inv_alpha = alpha().inv().unwrap();
    for (i, j) in lambda.cells() {
        let f = b
            .add(&Scalar::int(j as i64 - 1))
            .sub(&inv_alpha.mul_int(i as i64 - 1));
        if f.is_zero() {
            return Err(CmsError::PochhammerPole {
                parameter: b.to_text(),
                row: i,
                col: j,
            });
        }
    }
    unreachable!("zero product must have a zero factor")
}

fn series_coefficient(
    a_list: &[Scalar],
    b_list: &[Scalar],
    lambda: &Partition,
) -> Result<Scalar, CmsError> {
    let mut num = Scalar::one();
    for a in a_list {
        num = num.mul(&deformed_pochhammer(a, lambda));
    }
    let mut den = hook_product(lambda);
    for b in b_list {
        den = den.mul(&pochhammer_or_pole(b, lambda)?);
    }
    num.div(&den)
}

/// Two-argument hypergeometric series, truncated at total degree `2 * D` in
/// the sense that all diagonal terms with `|lambda| <= D` are present:
/// `sum (coefficient) P_lambda (x) P_lambda / eps_{p0}(P_lambda)`.
pub fn pfq_two_set(
    a_list: &[Scalar],
    b_list: &[Scalar],
    d: u32,
) -> Result<TensorSeries, CmsError> {
    let mut out = TensorSeries::zero(2 * d, Basis::Jack, Basis::Jack);
    for lambda in partitions_up_to_weight(d) {
        let c = series_coefficient(a_list, b_list, &lambda)?;
        let c = c.div(&eps_p0_jack(&lambda))?;
        out.insert_add(lambda.clone(), lambda, c);
    }
    Ok(out)
}

/// One-argument hypergeometric series truncated at degree `D`.
pub fn pfq_one_set(a_list: &[Scalar], b_list: &[Scalar], d: u32) -> Result<SymFunc, CmsError> {
    let mut out = SymFunc::zero(Basis::Jack);
    for lambda in partitions_up_to_weight(d) {
        out.insert_add(lambda.clone(), series_coefficient(a_list, b_list, &lambda)?);
    }
    Ok(out)
}

/// Exponential factor `sum_n (1 (x) f^n) / n!` truncated at degree `d`.
pub fn exp_right_factor(f: &SymFunc, d: u32) -> TensorSeries {
    debug_assert_eq!(f.basis(), Basis::PowerSum);
    let min_deg = f.terms().map(|(l, _)| l.weight()).min().unwrap_or(0).max(1);
    let mut acc = TensorSeries::one(d, Basis::PowerSum);
    let mut fk = TensorSeries::one(d, Basis::PowerSum);
    let mut factor = TensorSeries::zero(d, Basis::PowerSum, Basis::PowerSum);
    for (l, c) in f.terms() {
        factor.insert_add(Partition::empty(), l.clone(), c.clone());
    }
    let mut n = 1u32;
    while n * min_deg <= d {
        fk = fk.mul(&factor).scale(&Scalar::ratio(1, n as i64));
        acc = acc.add(&fk);
        n += 1;
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HyperKind {
    TwoSet2F1,
    TwoSet1F1,
    TwoSet0F1,
    TwoSet0F0,
    OneSet2F1,
}

impl HyperKind {
    pub fn name(self) -> &'static str {
        match self {
            HyperKind::TwoSet2F1 => "2F1_two_set",
            HyperKind::TwoSet1F1 => "1F1",
            HyperKind::TwoSet0F1 => "0F1",
            HyperKind::TwoSet0F0 => "0F0",
            HyperKind::OneSet2F1 => "2F1_one_set",
        }
    }

    pub fn from_name(s: &str) -> Option<HyperKind> {
        match s {
            "2F1_two_set" | "2F1" => Some(HyperKind::TwoSet2F1),
            "1F1" => Some(HyperKind::TwoSet1F1),
            "0F1" => Some(HyperKind::TwoSet0F1),
            "0F0" => Some(HyperKind::TwoSet0F0),
            "2F1_one_set" => Some(HyperKind::OneSet2F1),
            _ => None,
        }
    }
}

/// Residual report of a differential-equation or generating-function
/// identity on a truncated series.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ResidualReport {
    pub which: String,
    pub degree: u32,
    pub valid_to: u32,
    pub zero: bool,
    pub nonzero_terms: Vec<String>,
}

fn residual_report_tensor(
    which: &str,
    degree: u32,
    valid_to: u32,
    residual: &TensorSeries,
) -> ResidualReport {
    let nonzero: Vec<String> = residual
        .terms()
        .map(|((l, r), c)| format!("({l},{r}) -> {}", c.to_text()))
        .collect();
    ResidualReport {
        which: which.to_string(),
        degree,
        valid_to,
        zero: nonzero.is_empty(),
        nonzero_terms: nonzero,
    }
}

/// Left-minus-right of the hypergeometric differential equation satisfied
/// by the chosen series, evaluated on the truncation. The residual degree
/// is adjusted by the operators' shifts.
pub fn check_hyper_ode(
    ctx: &Context,
    which: HyperKind,
    params: &[Scalar],
    d: u32,
) -> Result<ResidualReport, CmsError> {
    let p0 = Scalar::gen(Generator::P0);
    let shift = p0.sub(&Scalar::one()).div(&alpha())?;
    let p1 = Partition::new(vec![1]).unwrap();
    match which {
        HyperKind::TwoSet0F0 => {
            let f = pfq_two_set(&[], &[], d)?;
            let lhs = tensor_op_apply(ctx, true, &OpExpr::E(0), &f)?;
            let rhs = tensor_op_apply(
                ctx,
                false,
                &OpExpr::Mul(SymFunc::basis_elem(Basis::PowerSum, p1)),
                &f,
            )?;
            let residual = lhs.to_power_sum_slots(ctx)?.sub(&rhs.to_power_sum_slots(ctx)?);
            Ok(residual_report_tensor(which.name(), d, d.saturating_sub(1), &residual))
        }
        HyperKind::TwoSet0F1 => {
            let c = params[0].clone();
            let f = pfq_two_set(&[], &[c.clone()], d)?;
            let t1 = tensor_op_apply(ctx, true, &OpExpr::D(1), &f)?;
            let t2 = tensor_op_apply(ctx, true, &OpExpr::E(0), &f)?.scale(&c.sub(&shift));
            let rhs = tensor_op_apply(
                ctx,
                false,
                &OpExpr::Mul(SymFunc::basis_elem(Basis::PowerSum, p1)),
                &f,
            )?;
            let residual = t1
                .to_power_sum_slots(ctx)?
                .add(&t2.to_power_sum_slots(ctx)?)
                .sub(&rhs.to_power_sum_slots(ctx)?);
            Ok(residual_report_tensor(which.name(), d, d.saturating_sub(2), &residual))
        }
        HyperKind::TwoSet1F1 => {
            let a = params[0].clone();
            let c = params[1].clone();
            let f = pfq_two_set(&[a.clone()], &[c.clone()], d)?;
            let t1 = tensor_op_apply(ctx, true, &OpExpr::D(1), &f)?;
            let t2 = tensor_op_apply(ctx, true, &OpExpr::E(0), &f)?.scale(&c.sub(&shift));
            let t3 = tensor_op_apply(ctx, false, &OpExpr::E(2), &f)?;
            let rhs = tensor_op_apply(
                ctx,
                false,
                &OpExpr::Mul(SymFunc::basis_elem(Basis::PowerSum, p1)),
                &f,
            )?
            .scale(&a);
            let residual = t1
                .to_power_sum_slots(ctx)?
                .add(&t2.to_power_sum_slots(ctx)?)
                .sub(&t3.to_power_sum_slots(ctx)?)
                .sub(&rhs.to_power_sum_slots(ctx)?);
            Ok(residual_report_tensor(which.name(), d, d.saturating_sub(2), &residual))
        }
        HyperKind::TwoSet2F1 => {
            let a = params[0].clone();
            let b = params[1].clone();
            let c = params[2].clone();
            let f = pfq_two_set(&[a.clone(), b.clone()], &[c.clone()], d)?;
            let t1 = tensor_op_apply(ctx, true, &OpExpr::D(1), &f)?;
            let t2 = tensor_op_apply(ctx, true, &OpExpr::E(0), &f)?.scale(&c.sub(&shift));
            let t3 = tensor_op_apply(ctx, false, &OpExpr::D(3), &f)?;
            let coeff_e2 = a
                .add(&b)
                .add(&Scalar::one())
                .sub(&shift.mul_int(2));
            let t4 = tensor_op_apply(ctx, false, &OpExpr::E(2), &f)?.scale(&coeff_e2);
            let rhs = tensor_op_apply(
                ctx,
                false,
                &OpExpr::Mul(SymFunc::basis_elem(Basis::PowerSum, p1)),
                &f,
            )?
            .scale(&a.mul(&b));
            let residual = t1
                .to_power_sum_slots(ctx)?
                .add(&t2.to_power_sum_slots(ctx)?)
                .sub(&t3.to_power_sum_slots(ctx)?)
                .sub(&t4.to_power_sum_slots(ctx)?)
                .sub(&rhs.to_power_sum_slots(ctx)?);
            Ok(residual_report_tensor(which.name(), d, d.saturating_sub(2), &residual))
        }
        HyperKind::OneSet2F1 => {
            let a = params[0].clone();
            let b = params[1].clone();
            let c = params[2].clone();
            let f = pfq_one_set(&[a.clone(), b.clone()], &[c.clone()], d)?;
            let fp = ctx.convert(&f, Basis::PowerSum)?;
            let t1 = op_apply(ctx, &OpExpr::D(1), &fp)?;
            let t2 = op_apply(ctx, &OpExpr::D(2), &fp)?;
            let t3 = op_apply(ctx, &OpExpr::E(0), &fp)?.scale(&c.sub(&shift));
            let coeff_e1 = a.add(&b).add(&Scalar::one()).sub(&shift);
            let t4 = op_apply(ctx, &OpExpr::E(1), &fp)?.scale(&coeff_e1);
            let rhs = fp.scale(&a.mul(&b).mul(&p0));
            let residual_full = t1.sub(&t2)?.add(&t3)?.sub(&t4)?.sub(&rhs)?;
            let window = d.saturating_sub(1);
            let nonzero: Vec<String> = residual_full
                .terms()
                .filter(|(l, _)| l.weight() <= window)
                .map(|(l, c)| format!("{l} -> {}", c.to_text()))
                .collect();
            Ok(ResidualReport {
                which: which.name().to_string(),
                degree: d,
                valid_to: d.saturating_sub(2),
                zero: nonzero.is_empty(),
                nonzero_terms: nonzero,
            })
        }
    }
}

/// Generating-function residual for the Hermite or Laguerre family at
/// truncation degree `d`:
/// `sum_lambda F_lambda (x) P_lambda / (normalisation) - series * exp-factor`.
pub fn generating_function_check(
    ctx: &Context,
    hermite: bool,
    d: u32,
) -> Result<ResidualReport, CmsError> {
    let mut lhs = TensorSeries::zero(d, Basis::Jack, Basis::Jack);
    for lam in partitions_up_to_weight(d) {
        let norm = if hermite {
            hook_product(&lam).mul(&eps_p0_jack(&lam))
        } else {
            let q = Scalar::one().add(
                &Scalar::gen(Generator::P0)
                    .sub(&Scalar::one())
                    .div(&alpha())?,
            );
            let a_plus_q = Scalar::gen(Generator::A).add(&q);
            hook_product(&lam)
                .mul(&deformed_pochhammer(&a_plus_q, &lam))
                .mul(&eps_p0_jack(&lam))
        };
        let spec = if hermite {
            FamilySpec::Hermite { nu_sq: Scalar::one() }
        } else {
            FamilySpec::Laguerre { a: Scalar::gen(Generator::A), nu: Scalar::one() }
        };
        let elem = family_element(ctx, &spec, &lam)?;
        for (mu, c) in elem.value.terms() {
            lhs.insert_add(mu.clone(), lam.clone(), c.div(&norm)?);
        }
    }
    let lhs = lhs.to_power_sum_slots(ctx)?;

    let rhs_series = if hermite {
        pfq_two_set(&[], &[], d)?
    } else {
        let q = Scalar::one().add(
            &Scalar::gen(Generator::P0)
                .sub(&Scalar::one())
                .div(&alpha())?,
        );
        pfq_two_set(&[], &[Scalar::gen(Generator::A).add(&q)], d)?
    };
    let rhs_series = rhs_series.to_power_sum_slots(ctx)?;
    let exp_arg = if hermite {
        SymFunc::term(
            Basis::PowerSum,
            Partition::new(vec![2]).unwrap(),
            Scalar::ratio(-1, 4),
        )
    } else {
        SymFunc::term(
            Basis::PowerSum,
            Partition::new(vec![1]).unwrap(),
            Scalar::int(-1),
        )
    };
    let rhs = rhs_series.mul(&exp_right_factor(&exp_arg, d));
    let residual = lhs.sub(&rhs);
    Ok(residual_report_tensor(
        if hermite { "generating_hermite" } else { "generating_laguerre" },
        d,
        d,
        &residual,
    ))
}

/// Term-wise scaling limit: the coefficients of `(1 (x) sigma_{1/b}) 2F1`
/// tend to those of `1F1` as `b` grows.
pub fn sigma_limit_two_one(
    ctx: &Context,
    a: &Scalar,
    c: &Scalar,
    d: u32,
) -> Result<bool, CmsError> {
    let _ = ctx;
    let b = Scalar::gen(Generator::Q);
    let f21 = pfq_two_set(&[a.clone(), b.clone()], &[c.clone()], d)?;
    let f11 = pfq_two_set(&[a.clone()], &[c.clone()], d)?;
    for ((l, r), coeff) in f21.terms() {
        let scaled = coeff.mul(&b.inv()?.pow(r.weight()));
        let lim = scaled.limit_at_infinity(Generator::Q)?;
        if lim != f11.coeff(l, r) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves the one-box coefficient recurrence from the constant term and
/// compares with the Pochhammer-quotient closed form.
pub fn uniqueness_recurrence(a: &Scalar, b: &Scalar, c: &Scalar, max_weight: u32) -> bool {
    let inv_alpha = alpha().inv().unwrap();
    let mut known: BTreeMap<Partition, Scalar> = BTreeMap::new();
    known.insert(Partition::empty(), Scalar::one());
    for w in 1..=max_weight {
        for lam in crate::partition::partitions_of_weight(w) {
            // find a parent: remove the last box of some row
            let mut found = None;
            for i in (1..=lam.len()).rev() {
                if let Ok(mu) = lam.remove_box(i) {
                    found = Some((mu, i));
                    break;
                }
            }
            let (mu, i) = found.expect("non-empty partition has a removable box");
            let step = Scalar::int(mu.part(i) as i64).sub(&inv_alpha.mul_int(i as i64 - 1));
            let value = known[&mu]
                .mul(&a.add(&step))
                .mul(&b.add(&step))
                .div(&c.add(&step))
                .unwrap();
            let closed = deformed_pochhammer(a, &lam)
                .mul(&deformed_pochhammer(b, &lam))
                .div(&deformed_pochhammer(c, &lam))
                .unwrap();
            if value != closed {
                return false;
            }
            known.insert(lam, value);
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::p0;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_f_zero_low_degree() {
        // D = 1: 1 (x) 1 + P1 (x) P1 / p0
        let f = pfq_two_set(&[], &[], 1).unwrap();
        assert!(f.coeff(&Partition::empty(), &Partition::empty()).is_one());
        assert_eq!(
            f.coeff(&pt(&[1]), &pt(&[1])),
            p0().inv().unwrap()
        );
        // D = 0 keeps the constant only
        let f = pfq_two_set(&[], &[], 0).unwrap();
        assert_eq!(f.terms().count(), 1);
    }

    #[test]
    fn one_set_zero_f_zero() {
        let f = pfq_one_set(&[], &[], 2).unwrap();
        assert!(f.coeff(&Partition::empty()).is_one());
        assert!(f.coeff(&pt(&[1])).is_one());
        assert_eq!(f.coeff(&pt(&[2])), Scalar::ratio(1, 2));
        let expect = alpha().div(&alpha().add(&Scalar::one())).unwrap();
        assert_eq!(f.coeff(&pt(&[1, 1])), expect);
    }

    #[test]
    fn pochhammer_cancellation() {
        // matching upper and lower parameters cancel
        let a = Scalar::gen(Generator::A);
        let b = Scalar::gen(Generator::S);
        let f = pfq_one_set(&[a.clone(), b.clone()], &[a], 3).unwrap();
        let g = pfq_one_set(&[b], &[], 3).unwrap();
        assert_eq!(f.sub(&g).unwrap(), SymFunc::zero(Basis::Jack));
    }

    #[test]
    fn pochhammer_pole_detection() {
        // b = -1 vanishes on the cell (1, 2)
        let err = pfq_one_set(&[], &[Scalar::int(-1)], 3).unwrap_err();
        assert!(matches!(err, CmsError::PochhammerPole { row: 1, col: 2, .. }));
        // symbolic parameters always pass
        assert!(pfq_one_set(&[], &[Scalar::gen(Generator::S)], 3).is_ok());
    }

    #[test]
    fn zero_f_zero_ode() {
        let ctx = Context::new();
        let report = check_hyper_ode(&ctx, HyperKind::TwoSet0F0, &[], 3).unwrap();
        assert!(report.zero, "nonzero residual: {:?}", report.nonzero_terms);
        assert_eq!(report.valid_to, 2);
    }

    #[test]
    fn one_set_pair_matches_two_set() {
        // applying eps_{p0} in the right slot reduces the pair series to the
        // one-argument series
        let ctx = Context::new();
        let a = Scalar::gen(Generator::A);
        let c = Scalar::gen(Generator::S);
        let two = pfq_two_set(&[a.clone()], &[c.clone()], 3).unwrap();
        let one = pfq_one_set(&[a], &[c], 3).unwrap();
        let mut collapsed = SymFunc::zero(Basis::Jack);
        for ((l, r), coeff) in two.terms() {
            // right slot P_r evaluated by eps_{p0}
            if l == r {
                collapsed.insert_add(l.clone(), coeff.mul(&eps_p0_jack(r)));
            }
        }
        let _ = ctx;
        assert_eq!(collapsed.sub(&one).unwrap(), SymFunc::zero(Basis::Jack));
    }

    #[test]
    fn uniqueness_small() {
        let a = Scalar::gen(Generator::A);
        let b = Scalar::gen(Generator::S);
        let c = Scalar::gen(Generator::X);
        assert!(uniqueness_recurrence(&a, &b, &c, 3));
    }
}
