//! The graded ring of symmetric functions over `Scalar`: basis-tagged linear
//! combinations, ring arithmetic, conversions between the power-sum,
//! monomial and elementary bases, and the standard homomorphisms (scaling,
//! involution, translation, evaluation).
//!
//! `p0` is never a basis key: the zeroth power sum is promoted to a scalar
//! generator, so constants carry any `p0` dependence in their coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::CmsError;
use crate::partition::{partitions_of_weight, Partition};
use crate::scalar::{alpha, Generator, Rat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, serde::Serialize, serde::Deserialize)]
pub enum Basis {
    PowerSum,
    Monomial,
    Elementary,
    Jack,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::PowerSum => "p",
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Jack => "j",
        }
    }
}

/// Finite linear combination of basis elements indexed by partitions.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Scalar>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> SymFunc {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> SymFunc {
        SymFunc::term(basis, Partition::empty(), Scalar::one())
    }

    pub fn constant(basis: Basis, c: Scalar) -> SymFunc {
        SymFunc::term(basis, Partition::empty(), c)
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: Scalar) -> SymFunc {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(lambda, coeff);
        }
        SymFunc { basis, terms }
    }

    /// Single basis element with coefficient one.
    pub fn basis_elem(basis: Basis, lambda: Partition) -> SymFunc {
        SymFunc::term(basis, lambda, Scalar::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.terms.get(lambda).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest key in the partition total order, if any.
    pub fn leading_partition(&self) -> Option<&Partition> {
        self.terms.keys().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|l| l.weight()).max()
    }

    pub fn insert_add(&mut self, lambda: Partition, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc, CmsError> {
        if self.basis != other.basis && !self.is_zero() && !other.is_zero() {
            return Err(CmsError::BasisMismatch {
                expected: self.basis.name().into(),
                got: other.basis.name().into(),
            });
        }
        let basis = if self.is_zero() { other.basis } else { self.basis };
        let mut out = SymFunc { basis, terms: self.terms.clone() };
        for (l, c) in &other.terms {
            out.insert_add(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc, CmsError> {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, k)| (l.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&Scalar::int(-1))
    }

    /// Applies `f` to every coefficient, pruning zeros; used for parameter
    /// substitutions.
    pub fn map_coeffs(
        &self,
        mut f: impl FnMut(&Scalar) -> Result<Scalar, CmsError>,
    ) -> Result<SymFunc, CmsError> {
        let mut out = SymFunc::zero(self.basis);
        for (l, c) in &self.terms {
            out.insert_add(l.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Product in a multiplicatively free basis (power sums or elementary):
    /// keys combine by multiset union.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        assert!(
            matches!(self.basis, Basis::PowerSum | Basis::Elementary) && self.basis == other.basis,
            "free-basis multiplication requires matching p or e basis"
        );
        let mut out = SymFunc::zero(self.basis);
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                let mut parts = l1.parts().to_vec();
                parts.extend_from_slice(l2.parts());
                out.insert_add(Partition::from_multiset(parts), c1.mul(c2));
            }
        }
        out
    }

    /// Conversion between the context-free bases (p, m, e). Jack requires a
    /// provider; use `Context::convert`.
    pub fn convert_free(&self, target: Basis) -> Result<SymFunc, CmsError> {
        if self.basis == target {
            return Ok(self.clone());
        }
        if self.basis == Basis::Jack || target == Basis::Jack {
            return Err(CmsError::NoJackProvider);
        }
        let as_p = match self.basis {
            Basis::PowerSum => self.clone(),
            Basis::Monomial => m_to_p(self),
            Basis::Elementary => e_to_p(self),
            Basis::Jack => unreachable!(),
        };
        Ok(match target {
            Basis::PowerSum => as_p,
            Basis::Monomial => p_to_m(&as_p),
            Basis::Elementary => p_to_e(&as_p),
            Basis::Jack => unreachable!(),
        })
    }

    pub fn to_power_sum_free(&self) -> Result<SymFunc, CmsError> {
        self.convert_free(Basis::PowerSum)
    }

    /// Deterministic text form: terms in the partition total order.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let tag = self.basis.name();
        self.terms
            .iter()
            .map(|(l, c)| format!("({})*{}{}", c.to_text(), tag, l))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl std::fmt::Display for SymFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Multiplies a monomial-basis function by the power sum `p_r`:
/// `p_r * m_nu = sum_mu c * m_mu` where `mu` runs over results of adding
/// `r` to one distinct entry of `nu` (or zero), and `c` counts the parts of
/// `mu` equal to the enlarged entry.
fn mul_p_into_m(r: u32, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::Monomial);
    let mut out = SymFunc::zero(Basis::Monomial);
    for (nu, c) in &f.terms {
        let mut values: Vec<u32> = nu.parts().to_vec();
        values.push(0);
        values.dedup();
        let mut seen = std::collections::BTreeSet::new();
        for &u in &values {
            if !seen.insert(u) {
                continue;
            }
            let mut parts = nu.parts().to_vec();
            if u > 0 {
                let pos = parts.iter().position(|&p| p == u).unwrap();
                parts[pos] = u + r;
            } else {
                parts.push(r);
            }
            let mu = Partition::from_multiset(parts);
            let v = u + r;
            let mult = mu.parts().iter().filter(|&&p| p == v).count() as i64;
            out.insert_add(mu, c.mul_int(mult));
        }
    }
    out
}

/// Power-sum basis to monomial basis by iterated multiplication.
pub fn p_to_m(f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::Monomial);
    for (lam, c) in &f.terms {
        let mut acc = SymFunc::one(Basis::Monomial);
        for &r in lam.parts() {
            acc = mul_p_into_m(r, &acc);
        }
        out = out.add(&acc.scale(c)).unwrap();
    }
    out
}

/// Transition matrix of a single homogeneous degree: rows are power-sum
/// partitions, columns monomial partitions (both in total order).
pub fn p_in_m_matrix(degree: u32) -> (Vec<Partition>, Vec<Vec<Scalar>>) {
    let parts = partitions_of_weight(degree);
    let rows = parts
        .iter()
        .map(|mu| {
            let exp = p_to_m(&SymFunc::basis_elem(Basis::PowerSum, mu.clone()));
            parts.iter().map(|l| exp.coeff(l)).collect()
        })
        .collect();
    (parts, rows)
}

/// Exact inverse of a triangular scalar matrix by back substitution. The
/// transition matrices between bases of one degree are triangular in the
/// partition total order (dominance-compatible), so full elimination -- and
/// its fraction blowup without gcd -- is never needed.
pub fn invert_triangular(mat: &[Vec<Scalar>], lower: bool) -> Vec<Vec<Scalar>> {
    let n = mat.len();
    let mut inv: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        debug_assert!(!mat[i][i].is_zero(), "singular transition matrix");
        inv[i][i] = mat[i][i].inv().unwrap();
    }
    if lower {
        // S[i][j] = -(sum_{j <= k < i} L[i][k] S[k][j]) / L[i][i], i > j
        for i in 1..n {
            for j in (0..i).rev() {
                let mut acc = Scalar::zero();
                for k in j..i {
                    if !mat[i][k].is_zero() && !inv[k][j].is_zero() {
                        acc = acc.add(&mat[i][k].mul(&inv[k][j]));
                    }
                }
                if !acc.is_zero() {
                    inv[i][j] = acc.div(&mat[i][i]).unwrap().neg();
                }
            }
        }
    } else {
        // S[i][j] = -(sum_{i < k <= j} U[i][k] S[k][j]) / U[i][i], j > i
        for j in 1..n {
            for i in (0..j).rev() {
                let mut acc = Scalar::zero();
                for k in i + 1..=j {
                    if !mat[i][k].is_zero() && !inv[k][j].is_zero() {
                        acc = acc.add(&mat[i][k].mul(&inv[k][j]));
                    }
                }
                if !acc.is_zero() {
                    inv[i][j] = acc.div(&mat[i][i]).unwrap().neg();
                }
            }
        }
    }
    inv
}

/// Monomial to power-sum basis by inverting the per-degree transition
/// matrix. Uncached; `Context` keeps the cached version.
pub fn m_to_p(f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::Monomial);
    let mut out = SymFunc::zero(Basis::PowerSum);
    let mut by_degree: BTreeMap<u32, Vec<(Partition, Scalar)>> = BTreeMap::new();
    for (l, c) in &f.terms {
        by_degree.entry(l.weight()).or_default().push((l.clone(), c.clone()));
    }
    for (d, terms) in by_degree {
        let (parts, rows) = p_in_m_matrix(d);
        let inv = invert_triangular(&rows, false);
        for (l, c) in terms {
            let col = parts.iter().position(|x| *x == l).unwrap();
            // m_l = sum_i inv[col? ][i] ... rows: p = T m  =>  m = T^{-1} p,
            // with (T^{-1})[l][mu] read off the inverse's row for l
            for (i, mu) in parts.iter().enumerate() {
                out.insert_add(mu.clone(), c.mul(&inv[col][i]));
            }
        }
    }
    out
}

fn e_r_in_p(r: u32) -> SymFunc {
    // r e_r = sum_{k=1..r} (-1)^(k-1) e_{r-k} p_k
    if r == 0 {
        return SymFunc::one(Basis::PowerSum);
    }
    let mut acc = SymFunc::zero(Basis::PowerSum);
    for k in 1..=r {
        let prev = e_r_in_p(r - k);
        let pk = SymFunc::basis_elem(Basis::PowerSum, Partition::new(vec![k]).unwrap());
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&prev.mul(&pk).scale(&Scalar::int(sign))).unwrap();
    }
    acc.scale(&Scalar::ratio(1, r as i64))
}

/// Elementary to power-sum basis via the Newton recurrence.
pub fn e_to_p(f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::Elementary);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (lam, c) in &f.terms {
        let mut acc = SymFunc::one(Basis::PowerSum);
        for &r in lam.parts() {
            acc = acc.mul(&e_r_in_p(r));
        }
        out = out.add(&acc.scale(c)).unwrap();
    }
    out
}

fn p_r_in_e(r: u32) -> SymFunc {
    // p_r = (-1)^(r-1) r e_r + sum_{k=1..r-1} (-1)^(k-1) e_k p_{r-k}
    debug_assert!(r >= 1);
    let mut acc = SymFunc::term(
        Basis::Elementary,
        Partition::new(vec![r]).unwrap(),
        Scalar::int(if (r - 1) % 2 == 0 { r as i64 } else { -(r as i64) }),
    );
    for k in 1..r {
        let ek = SymFunc::basis_elem(Basis::Elementary, Partition::new(vec![k]).unwrap());
        let rest = p_r_in_e(r - k);
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&ek.mul(&rest).scale(&Scalar::int(sign))).unwrap();
    }
    acc
}

/// Power-sum to elementary basis via the Newton recurrence.
pub fn p_to_e(f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::Elementary);
    for (lam, c) in &f.terms {
        let mut acc = SymFunc::one(Basis::Elementary);
        for &r in lam.parts() {
            acc = acc.mul(&p_r_in_e(r));
        }
        out = out.add(&acc.scale(c)).unwrap();
    }
    out
}

fn binom(n: u32, k: u32) -> Rat {
    BigRational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// `sigma_gamma`: `p_r -> gamma^r p_r`.
pub fn apply_sigma(gamma: &Scalar, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (l, c) in f.terms() {
        out.insert_add(l.clone(), c.mul(&gamma.pow(l.weight())));
    }
    out
}

/// `omega_gamma`: `p_r -> (-1)^(r-1) gamma p_r` for `r >= 1`, extended by
/// `p0 -> -gamma p0` inside every coefficient.
pub fn apply_omega(gamma: &Scalar, f: &SymFunc) -> Result<SymFunc, CmsError> {
    debug_assert_eq!(f.basis, Basis::PowerSum);
    let image_p0 = gamma.neg().mul(&Scalar::gen(Generator::P0));
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (l, c) in f.terms() {
        let sub = c.substitute_one(Generator::P0, &image_p0)?;
        let sign = l.weight() as i64 - l.len() as i64;
        let factor = gamma
            .pow(l.len() as u32)
            .mul_int(if sign % 2 == 0 { 1 } else { -1 });
        out.insert_add(l.clone(), sub.mul(&factor));
    }
    Ok(out)
}

/// Translation homomorphism `t_gamma`:
/// `p_r -> sum_{m=0..r} gamma^(r-m) C(r,m) p_m`, with `p_0` the scalar
/// generator.
pub fn apply_t(gamma: &Scalar, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::PowerSum);
    let p0 = Scalar::gen(Generator::P0);
    let image = |r: u32| -> SymFunc {
        let mut acc = SymFunc::constant(Basis::PowerSum, gamma.pow(r).mul(&p0));
        for m in 1..=r {
            let c = gamma.pow(r - m).mul(&Scalar::from_rat(binom(r, m)));
            acc.insert_add(Partition::new(vec![m]).unwrap(), c);
        }
        acc
    };
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (l, c) in f.terms() {
        let mut acc = SymFunc::one(Basis::PowerSum);
        for &r in l.parts() {
            acc = acc.mul(&image(r));
        }
        out = out.add(&acc.scale(c)).unwrap();
    }
    out
}

/// Evaluation homomorphism `eps_X`: every `p_r -> X`.
pub fn eps_x(x: &Scalar, f: &SymFunc) -> Scalar {
    debug_assert_eq!(f.basis, Basis::PowerSum);
    let mut out = Scalar::zero();
    for (l, c) in f.terms() {
        out = out.add(&c.mul(&x.pow(l.len() as u32)));
    }
    out
}

/// Product-form evaluation of `eps_X` on a Jack basis element:
/// `prod_{(i,j)} (X + alpha(j-1) - (i-1)) / (alpha*arm + leg + 1)`.
pub fn eps_x_jack_product(lambda: &Partition, x: &Scalar) -> Scalar {
    let conj = lambda.conjugate();
    let mut out = Scalar::one();
    for (i, j) in lambda.cells() {
        let arm = (lambda.part(i) - j as u32) as i64;
        let leg = (conj.part(j) - i as u32) as i64;
        let num = x
            .add(&alpha().mul_int(j as i64 - 1))
            .sub(&Scalar::int(i as i64 - 1));
        let den = alpha().mul_int(arm).add(&Scalar::int(leg + 1));
        out = out.mul(&num.div(&den).unwrap());
    }
    out
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
    fn free_multiplication() {
        let f = p_elem(&[2]).mul(&p_elem(&[1]));
        assert_eq!(f, p_elem(&[2, 1]));
        let one = SymFunc::one(Basis::PowerSum);
        assert_eq!(one.mul(&f), f);
    }

    #[test]
    fn monomial_products() {
        // m1 * m1 = m2 + 2 m11
        let m1 = SymFunc::basis_elem(Basis::Monomial, pt(&[1]));
        let as_p = m_to_p(&m1);
        let sq = p_to_m(&as_p.mul(&as_p));
        assert_eq!(sq.coeff(&pt(&[2])), Scalar::one());
        assert_eq!(sq.coeff(&pt(&[1, 1])), Scalar::int(2));
    }

    #[test]
    fn p_to_m_examples() {
        let f = p_to_m(&p_elem(&[2]));
        assert_eq!(f, SymFunc::basis_elem(Basis::Monomial, pt(&[2])));
        let g = p_to_m(&p_elem(&[1, 1]));
        assert_eq!(g.coeff(&pt(&[2])), Scalar::one());
        assert_eq!(g.coeff(&pt(&[1, 1])), Scalar::int(2));
    }

    #[test]
    fn e_to_p_examples() {
        let e2 = SymFunc::basis_elem(Basis::Elementary, pt(&[2]));
        let f = e_to_p(&e2);
        assert_eq!(f.coeff(&pt(&[1, 1])), Scalar::ratio(1, 2));
        assert_eq!(f.coeff(&pt(&[2])), Scalar::ratio(-1, 2));
    }

    #[test]
    fn conversion_round_trips() {
        for d in 0..=8u32 {
            for lam in partitions_of_weight(d) {
                let f = SymFunc::basis_elem(Basis::PowerSum, lam.clone());
                let back = m_to_p(&p_to_m(&f));
                assert_eq!(back, f, "p->m->p failed at {lam}");
                let back = e_to_p(&p_to_e(&f));
                assert_eq!(back, f, "p->e->p failed at {lam}");
            }
        }
    }

    #[test]
    fn sigma_t_omega() {
        let nu = Scalar::gen(Generator::Nu);
        let f = p_elem(&[2, 1]);
        assert_eq!(apply_sigma(&nu, &f), f.scale(&nu.pow(3)));
        // t_gamma(p1) = p1 + gamma p0
        let gamma = Scalar::gen(Generator::S);
        let t = apply_t(&gamma, &p_elem(&[1]));
        assert_eq!(t.coeff(&pt(&[1])), Scalar::one());
        assert_eq!(t.coeff(&Partition::empty()), gamma.mul(&p0()));
        // omega_{1/alpha} . omega_alpha = id including p0 handling
        let a = alpha();
        for lam in crate::partition::partitions_up_to_weight(6) {
            let f = SymFunc::term(Basis::PowerSum, lam.clone(), p0().add(&Scalar::one()));
            let w = apply_omega(&a, &f).unwrap();
            let back = apply_omega(&a.inv().unwrap(), &w).unwrap();
            assert_eq!(back, f, "omega involution failed at {lam}");
        }
    }

    #[test]
    fn t_is_additive_in_gamma() {
        // t_gamma . t_delta = t_{gamma+delta} on p_mu, |mu| <= 6
        let gamma = Scalar::gen(Generator::S);
        let delta = Scalar::gen(Generator::Q);
        for lam in crate::partition::partitions_up_to_weight(6) {
            let f = SymFunc::basis_elem(Basis::PowerSum, lam.clone());
            let lhs = apply_t(&gamma, &apply_t(&delta, &f));
            let rhs = apply_t(&gamma.add(&delta), &f);
            assert_eq!(lhs, rhs, "translation composition failed at {lam}");
        }
    }

    #[test]
    fn sigma_is_multiplicative_in_gamma() {
        let gamma = Scalar::gen(Generator::S);
        let delta = Scalar::gen(Generator::Q);
        for lam in crate::partition::partitions_up_to_weight(6) {
            let f = SymFunc::basis_elem(Basis::PowerSum, lam.clone());
            let lhs = apply_sigma(&gamma, &apply_sigma(&delta, &f));
            let rhs = apply_sigma(&gamma.mul(&delta), &f);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eps_x_on_power_sums() {
        let x = Scalar::gen(Generator::X);
        let f = p_elem(&[2, 1]).scale(&Scalar::int(3));
        assert_eq!(eps_x(&x, &f), x.pow(2).mul_int(3));
    }

    #[test]
    fn jack_product_small() {
        let x = Scalar::gen(Generator::X);
        assert!(eps_x_jack_product(&Partition::empty(), &x).is_one());
        assert_eq!(eps_x_jack_product(&pt(&[1]), &x), x);
        // eps_X(P_2) = X(X+alpha)/(1+alpha)
        let expect = x
            .mul(&x.add(&alpha()))
            .div(&Scalar::one().add(&alpha()))
            .unwrap();
        assert_eq!(eps_x_jack_product(&pt(&[2]), &x), expect);
    }

    #[test]
    fn basis_mismatch_is_an_error() {
        let p = p_elem(&[1]);
        let m = SymFunc::basis_elem(Basis::Monomial, pt(&[1]));
        assert!(p.add(&m).is_err());
    }

    #[test]
    fn jack_conversion_needs_provider() {
        let j = SymFunc::basis_elem(Basis::Jack, pt(&[1]));
        assert!(matches!(
            j.convert_free(Basis::PowerSum),
            Err(CmsError::NoJackProvider)
        ));
    }
}
