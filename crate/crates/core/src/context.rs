//! Session context: per-degree transition matrices between the power-sum,
//! monomial and Jack bases, plus a memo of computed family elements.
//! Caches are internally synchronized; readers may run concurrently and the
//! same inputs always produce semantically equal outputs.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::CmsError;
use crate::ops::CmsOperator;
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::symfunc::{invert_triangular, p_in_m_matrix, Basis, SymFunc};

const CACHE_SCHEMA_VERSION: u32 = 1;

struct DegreeTables {
    parts: Vec<Partition>,
    /// rows: p_mu expanded over m (row index = mu, column = m-partition)
    p_in_m: Vec<Vec<Scalar>>,
    /// rows: m_mu expanded over p
    m_in_p: Vec<Vec<Scalar>>,
}

struct DegreeJack {
    parts: Vec<Partition>,
    /// rows: P_lambda expanded over m
    jack_in_m: Vec<Vec<Scalar>>,
    /// rows: m_lambda expanded over P
    m_in_jack: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize)]
struct JackCacheFile {
    schema_version: u32,
    degree: u32,
    partitions: Vec<Vec<u32>>,
    jack_in_m: Vec<Vec<Scalar>>,
}

/// Shared session state. Construction is cheap; all tables are computed on
/// demand and retained.
pub struct Context {
    mp: RwLock<BTreeMap<u32, Arc<DegreeTables>>>,
    jack: RwLock<BTreeMap<u32, Arc<DegreeJack>>>,
    family_memo: Mutex<HashMap<String, SymFunc>>,
    cache_dir: Option<PathBuf>,
}

impl Default for Context {
    fn default() -> Self {
        Context::new()
    }
}

impl Context {
    pub fn new() -> Context {
        Context {
            mp: RwLock::new(BTreeMap::new()),
            jack: RwLock::new(BTreeMap::new()),
            family_memo: Mutex::new(HashMap::new()),
            cache_dir: None,
        }
    }

    /// Enables the on-disk cache of Jack transition tables. Cold start
    /// works without it; unreadable or mismatched files are recomputed.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Context {
        let mut ctx = Context::new();
        ctx.cache_dir = Some(dir.into());
        ctx
    }

    fn degree_tables(&self, d: u32) -> Arc<DegreeTables> {
        if let Some(t) = self.mp.read().unwrap().get(&d) {
            return t.clone();
        }
        let (parts, p_in_m) = p_in_m_matrix(d);
        let m_in_p = invert_triangular(&p_in_m, false);
        let t = Arc::new(DegreeTables { parts, p_in_m, m_in_p });
        self.mp.write().unwrap().entry(d).or_insert_with(|| t.clone());
        self.mp.read().unwrap().get(&d).unwrap().clone()
    }

    fn jack_cache_path(&self, d: u32) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|dir| dir.join(format!("jack_d{}_v{}.json", d, CACHE_SCHEMA_VERSION)))
    }

    fn load_jack_from_disk(&self, d: u32, parts: &[Partition]) -> Option<Vec<Vec<Scalar>>> {
        let path = self.jack_cache_path(d)?;
        let data = std::fs::read_to_string(path).ok()?;
        let file: JackCacheFile = serde_json::from_str(&data).ok()?;
        if file.schema_version != CACHE_SCHEMA_VERSION || file.degree != d {
            return None;
        }
        let stored: Vec<Partition> = file
            .partitions
            .iter()
            .map(|p| Partition::new(p.clone()).ok())
            .collect::<Option<_>>()?;
        if stored != parts {
            return None;
        }
        (file.jack_in_m.len() == parts.len()).then_some(file.jack_in_m)
    }

    fn store_jack_to_disk(&self, d: u32, parts: &[Partition], rows: &[Vec<Scalar>]) {
        let Some(path) = self.jack_cache_path(d) else {
            return;
        };
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let file = JackCacheFile {
            schema_version: CACHE_SCHEMA_VERSION,
            degree: d,
            partitions: parts.iter().map(|p| p.parts().to_vec()).collect(),
            jack_in_m: rows.to_vec(),
        };
        if let Ok(json) = serde_json::to_string(&file) {
            let _ = std::fs::write(path, json);
        }
    }

    fn degree_jack(&self, d: u32) -> Result<Arc<DegreeJack>, CmsError> {
        if let Some(t) = self.jack.read().unwrap().get(&d) {
            return Ok(t.clone());
        }
        let tables = self.degree_tables(d);
        let parts = tables.parts.clone();
        let jack_in_m = match self.load_jack_from_disk(d, &parts) {
            Some(rows) => rows,
            None => {
                let rows = self.compute_jack_degree(d, &tables)?;
                self.store_jack_to_disk(d, &parts, &rows);
                rows
            }
        };
        let m_in_jack = invert_triangular(&jack_in_m, true);
        let t = Arc::new(DegreeJack { parts, jack_in_m, m_in_jack });
        self.jack.write().unwrap().entry(d).or_insert_with(|| t.clone());
        Ok(self.jack.read().unwrap().get(&d).unwrap().clone())
    }

    /// Solves for the monic, dominance-triangular eigenfunctions of the
    /// stable Jack operator on the monomial basis of one degree.
    fn compute_jack_degree(
        &self,
        d: u32,
        tables: &DegreeTables,
    ) -> Result<Vec<Vec<Scalar>>, CmsError> {
        let parts = &tables.parts;
        let n = parts.len();
        let op = CmsOperator::jack();
        // column nu: image of m_nu over the m basis
        let mut action = vec![vec![Scalar::zero(); n]; n];
        for (col, _nu) in parts.iter().enumerate() {
            let mut as_p = SymFunc::zero(Basis::PowerSum);
            for (i, mu) in parts.iter().enumerate() {
                as_p.insert_add(mu.clone(), tables.m_in_p[col][i].clone());
            }
            let image = crate::ops::op_apply(self, &op.expr, &as_p)?;
            // image is homogeneous of the same degree
            let mut row_acc = vec![Scalar::zero(); n];
            for (mu, c) in image.terms() {
                let i = parts.iter().position(|x| x == mu).expect("degree preserved");
                for (j, v) in tables.p_in_m[i].iter().enumerate() {
                    row_acc[j] = row_acc[j].add(&c.mul(v));
                }
            }
            for (row, v) in row_acc.into_iter().enumerate() {
                action[row][col] = v;
            }
        }
        let mut rows = Vec::with_capacity(n);
        for (li, lam) in parts.iter().enumerate() {
            let eig_top = op.eigenvalue(lam);
            let mut u = vec![Scalar::zero(); n];
            u[li] = Scalar::one();
            for mi in (0..li).rev() {
                let mu = &parts[mi];
                if !lam.dominates(mu) {
                    continue;
                }
                let mut num = Scalar::zero();
                for ni in mi + 1..=li {
                    if u[ni].is_zero() || action[mi][ni].is_zero() {
                        continue;
                    }
                    num = num.add(&u[ni].mul(&action[mi][ni]));
                }
                if num.is_zero() {
                    continue;
                }
                let gap = eig_top.sub(&op.eigenvalue(mu));
                if gap.is_zero() {
                    return Err(CmsError::DegenerateEigenvalue(
                        lam.to_string(),
                        mu.to_string(),
                    ));
                }
                u[mi] = num.div(&gap)?;
            }
            rows.push(u);
        }
        let _ = d;
        Ok(rows)
    }

    /// Jack basis element expanded over monomials.
    pub fn jack_in_m(&self, lambda: &Partition) -> Result<SymFunc, CmsError> {
        let d = lambda.weight();
        let t = self.degree_jack(d)?;
        let li = t.parts.iter().position(|x| x == lambda).unwrap();
        let mut out = SymFunc::zero(Basis::Monomial);
        for (i, mu) in t.parts.iter().enumerate() {
            out.insert_add(mu.clone(), t.jack_in_m[li][i].clone());
        }
        Ok(out)
    }

    /// Jack basis element expanded over power sums.
    pub fn jack_in_p(&self, lambda: &Partition) -> Result<SymFunc, CmsError> {
        let f = self.jack_in_m(lambda)?;
        self.convert(&f, Basis::PowerSum)
    }

    /// Converts between any two bases. The Jack transitions are cached per
    /// degree; the monomial pivot is used for Jack conversions.
    pub fn convert(&self, f: &SymFunc, target: Basis) -> Result<SymFunc, CmsError> {
        if f.basis() == target {
            return Ok(f.clone());
        }
        match (f.basis(), target) {
            (Basis::Jack, _) => {
                let mut out = SymFunc::zero(Basis::Monomial);
                for (lam, c) in f.terms() {
                    let t = self.degree_jack(lam.weight())?;
                    let li = t.parts.iter().position(|x| x == lam).unwrap();
                    for (i, mu) in t.parts.iter().enumerate() {
                        out.insert_add(mu.clone(), c.mul(&t.jack_in_m[li][i]));
                    }
                }
                self.convert(&out, target)
            }
            (_, Basis::Jack) => {
                let as_m = self.convert(f, Basis::Monomial)?;
                let mut out = SymFunc::zero(Basis::Jack);
                for (lam, c) in as_m.terms() {
                    let t = self.degree_jack(lam.weight())?;
                    let li = t.parts.iter().position(|x| x == lam).unwrap();
                    for (i, mu) in t.parts.iter().enumerate() {
                        out.insert_add(mu.clone(), c.mul(&t.m_in_jack[li][i]));
                    }
                }
                Ok(out)
            }
            (Basis::PowerSum, Basis::Monomial) => {
                let mut out = SymFunc::zero(Basis::Monomial);
                for (lam, c) in f.terms() {
                    let t = self.degree_tables(lam.weight());
                    let li = t.parts.iter().position(|x| x == lam).unwrap();
                    for (i, mu) in t.parts.iter().enumerate() {
                        out.insert_add(mu.clone(), c.mul(&t.p_in_m[li][i]));
                    }
                }
                Ok(out)
            }
            (Basis::Monomial, Basis::PowerSum) => {
                let mut out = SymFunc::zero(Basis::PowerSum);
                for (lam, c) in f.terms() {
                    let t = self.degree_tables(lam.weight());
                    let li = t.parts.iter().position(|x| x == lam).unwrap();
                    for (i, mu) in t.parts.iter().enumerate() {
                        out.insert_add(mu.clone(), c.mul(&t.m_in_p[li][i]));
                    }
                }
                Ok(out)
            }
            (Basis::Elementary, _) => {
                let as_p = crate::symfunc::e_to_p(f);
                self.convert(&as_p, target)
            }
            (_, Basis::Elementary) => {
                let as_p = self.convert(f, Basis::PowerSum)?;
                Ok(crate::symfunc::p_to_e(&as_p))
            }
            _ => unreachable!(),
        }
    }

    pub fn to_jack(&self, f: &SymFunc) -> Result<SymFunc, CmsError> {
        self.convert(f, Basis::Jack)
    }

    /// Ring product of two functions in any bases; power-sum result.
    pub fn multiply(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc, CmsError> {
        let fp = self.convert(f, Basis::PowerSum)?;
        let gp = self.convert(g, Basis::PowerSum)?;
        Ok(fp.mul(&gp))
    }

    pub fn memo_get(&self, key: &str) -> Option<SymFunc> {
        self.family_memo.lock().unwrap().get(key).cloned()
    }

    pub fn memo_put(&self, key: String, value: SymFunc) {
        self.family_memo.lock().unwrap().insert(key, value);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of_weight;
    use crate::scalar::{alpha, Generator};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn jack_small() {
        let ctx = Context::new();
        // P_(1) = m_(1)
        let j1 = ctx.jack_in_m(&pt(&[1])).unwrap();
        assert_eq!(j1, SymFunc::basis_elem(Basis::Monomial, pt(&[1])));
        // P_(2) = m_(2) + (2/(1+alpha)) m_(1,1)
        let j2 = ctx.jack_in_m(&pt(&[2])).unwrap();
        assert_eq!(j2.coeff(&pt(&[2])), Scalar::one());
        let expect = Scalar::int(2).div(&Scalar::one().add(&alpha())).unwrap();
        assert_eq!(j2.coeff(&pt(&[1, 1])), expect);
        // P_(1,1) = m_(1,1)
        let j11 = ctx.jack_in_m(&pt(&[1, 1])).unwrap();
        assert_eq!(j11, SymFunc::basis_elem(Basis::Monomial, pt(&[1, 1])));
    }

    #[test]
    fn jack_round_trip() {
        let ctx = Context::new();
        for d in 0..=5u32 {
            for lam in partitions_of_weight(d) {
                let f = SymFunc::basis_elem(Basis::Jack, lam.clone());
                let p = ctx.convert(&f, Basis::PowerSum).unwrap();
                let back = ctx.convert(&p, Basis::Jack).unwrap();
                assert_eq!(back, f, "jack round trip failed at {lam}");
            }
        }
    }

    #[test]
    fn jack_integrality_at_alpha_one() {
        // Schur specialisation: monomial coefficients are integers at alpha = 1
        let ctx = Context::new();
        for lam in crate::partition::partitions_up_to_weight(5) {
            let j = ctx.jack_in_m(&lam).unwrap();
            for (_, c) in j.terms() {
                let v = c.substitute_one(Generator::Alpha, &Scalar::one()).unwrap();
                assert!(
                    v.denominator().is_one(),
                    "non-integer Schur coefficient at {lam}: {v}"
                );
            }
        }
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("cms-jack-cache-{}", std::process::id()));
        let ctx = Context::with_cache_dir(&dir);
        let a = ctx.jack_in_m(&pt(&[2, 1])).unwrap();
        let ctx2 = Context::with_cache_dir(&dir);
        let b = ctx2.jack_in_m(&pt(&[2, 1])).unwrap();
        assert_eq!(a, b);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
