//! Jack symmetric functions J_λ in the power-sum basis. The coefficient
//! θ^λ_μ(α) = [p_μ] J_λ is the Jack character.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlphaPoly, RatFunc};
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg;
use crate::partition::{generate_partitions, Partition};
use crate::psum::{d_matrix, PSumVector};

pub use crate::psum::power_weight;

/// ⟨u, v⟩_α on the power-sum basis.
pub fn inner_product(u: &PSumVector, v: &PSumVector) -> Result<RatFunc> {
    u.inner_product(v)
}

/// J_λ expanded in power sums, normalized by [p_{1^n}] J_λ = 1.
pub fn jack_in_p(lambda: &Partition) -> Result<PSumVector> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument("J_λ needs |λ| ≥ 1".into()));
    }
    limits::check_degree(lambda.n())?;
    solve(lambda, &d_matrix(lambda.n()))
}

fn to_vector(n: usize, basis: &[Partition], coords: Vec<RatFunc>) -> PSumVector {
    PSumVector::from_terms(n, basis.iter().cloned().zip(coords)).expect("basis has degree n")
}

fn solve(lambda: &Partition, d: &[Vec<AlphaPoly>]) -> Result<PSumVector> {
    let n = lambda.n();
    let basis = generate_partitions(n);
    let e = lambda.eigenvalue();
    let mut m = d.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= &e;
    }
    let kernel: Vec<PSumVector> =
        linalg::nullspace_poly(m, basis.len()).into_iter().map(|c| to_vector(n, &basis, c)).collect();
    let v = match kernel.len() {
        1 => kernel.into_iter().next().expect("one vector"),
        0 => return Err(Error::DegenerateSystem { lambda: lambda.to_string(), dim: 0 }),
        k => {
            // eigenvalue collision: impose [m_μ] J_λ = 0 for μ not below λ
            let expansions = kernel.iter().map(PSumVector::to_monomial).collect::<Result<Vec<_>>>()?;
            let constraints: Vec<Vec<RatFunc>> = basis
                .iter()
                .filter(|mu| !lambda.dominates(mu))
                .map(|mu| expansions.iter().map(|x| x.coeff(mu)).collect())
                .collect();
            let sol = linalg::nullspace(&constraints, k);
            if sol.len() != 1 {
                return Err(Error::DegenerateSystem { lambda: lambda.to_string(), dim: sol.len() });
            }
            kernel.iter().zip(&sol[0]).fold(PSumVector::zero(n), |acc, (v, c)| {
                acc.checked_add(&v.scale(c)).expect("same degree")
            })
        }
    };
    let lead = v.coeff(&Partition::column(n));
    if lead.is_zero() {
        return Err(Error::DegenerateSystem { lambda: lambda.to_string(), dim: 1 });
    }
    let v = v.scale(&lead.recip()?);
    check_row(lambda, &v)?;
    Ok(v)
}

/// Polynomiality, the eigen-equation, monomial triangularity and
/// [m_λ] J_λ = h_λ.
fn check_row(lambda: &Partition, v: &PSumVector) -> Result<()> {
    let fail = |what: &str| Err(Error::Invariant(format!("J_{lambda}: {what}")));
    if let Some((mu, _)) = v.terms().find(|(_, c)| !c.is_polynomial()) {
        return fail(&format!("θ_{mu} is not a polynomial"));
    }
    let e = RatFunc::from(lambda.eigenvalue());
    if v.apply_d() != v.scale(&e) {
        return fail("not an eigenvector of D");
    }
    let m = v.to_monomial()?;
    if let Some((mu, _)) = m.terms().find(|(mu, _)| !lambda.dominates(mu)) {
        return fail(&format!("nonzero [m_{mu}]"));
    }
    if m.coeff(lambda) != RatFunc::from(lambda.hooks().0) {
        return fail("[m_λ] differs from h_λ");
    }
    Ok(())
}

/// Every J_λ for λ ⊢ n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackTable {
    n: usize,
    rows: BTreeMap<Partition, PSumVector>,
}

impl JackTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rows in partition order, `(n)` first.
    pub fn rows(&self) -> impl Iterator<Item = (&Partition, &PSumVector)> {
        self.rows.iter()
    }

    pub fn row(&self, lambda: &Partition) -> Option<&PSumVector> {
        self.rows.get(lambda)
    }

    /// θ^λ_μ(α) as a polynomial.
    pub fn theta(&self, lambda: &Partition, mu: &Partition) -> AlphaPoly {
        self.rows
            .get(lambda)
            .map(|r| r.coeff(mu).into_polynomial().expect("Jack characters are polynomials"))
            .unwrap_or_else(AlphaPoly::zero)
    }

    /// Re-checks the table invariants: unit coefficient on p_{1^n} and
    /// polynomial entries.
    pub fn verify(&self) -> Result<()> {
        let col = Partition::column(self.n);
        for (lambda, row) in &self.rows {
            if !row.coeff(&col).is_one() {
                return Err(Error::Invariant(format!("θ^{lambda}_{col} ≠ 1")));
            }
            if row.terms().any(|(_, c)| !c.is_polynomial()) {
                return Err(Error::Invariant(format!("row {lambda} has a non-polynomial entry")));
            }
        }
        Ok(())
    }
}

/// The cached table for degree `n`; rows are solved in parallel against a
/// shared matrix of D.
pub fn jack_table(n: usize) -> Result<Arc<JackTable>> {
    if n == 0 {
        return Err(Error::InvalidArgument("jack table needs n ≥ 1".into()));
    }
    limits::check_degree(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<JackTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(t.clone());
    }
    let d = d_matrix(n);
    let rows = generate_partitions(n)
        .into_par_iter()
        .map(|lambda| solve(&lambda, &d).map(|v| (lambda, v)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let table = JackTable { n, rows };
    table.verify()?;
    Ok(cache.lock().expect("cache lock").entry(n).or_insert_with(|| Arc::new(table)).clone())
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    lambda: Partition,
    theta: PSumVector,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    rows: Vec<RowJson>,
}

impl Serialize for JackTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            n: self.n,
            rows: self.rows.iter().map(|(l, t)| RowJson { lambda: l.clone(), theta: t.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for JackTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableJson::deserialize(d)?;
        let table = JackTable { n: j.n, rows: j.rows.into_iter().map(|r| (r.lambda, r.theta)).collect() };
        table.verify().map_err(serde::de::Error::custom)?;
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(c: &[i64]) -> AlphaPoly {
        AlphaPoly::from_ints(c)
    }

    #[test]
    fn degree_two() {
        let j2 = jack_in_p(&pt("2")).unwrap();
        assert_eq!(j2.coeff(&pt("1,1")), RatFunc::one());
        assert_eq!(j2.coeff(&pt("2")), RatFunc::alpha());
        let j11 = jack_in_p(&pt("1,1")).unwrap();
        assert_eq!(j11.coeff(&pt("1,1")), RatFunc::one());
        assert_eq!(j11.coeff(&pt("2")), RatFunc::from(-1));
        assert!(inner_product(&j2, &j11).unwrap().is_zero());
        assert_eq!(inner_product(&j2, &j2).unwrap(), RatFunc::from(poly(&[0, 0, 2, 2])));
    }

    #[test]
    fn small_tables() {
        let t1 = jack_table(1).unwrap();
        assert_eq!(t1.rows().count(), 1);
        assert!(t1.theta(&pt("1"), &pt("1")).is_one());
        let t2 = jack_table(2).unwrap();
        assert_eq!(t2.row(&pt("2")).unwrap(), &jack_in_p(&pt("2")).unwrap());
    }

    #[test]
    fn collision_at_six() {
        let a = pt("2,2,2");
        let b = pt("3,1,1,1");
        assert_eq!(a.eigenvalue(), b.eigenvalue());
        assert_eq!(a.eigenvalue(), poly(&[-6, 3]));
        let t = jack_table(6).unwrap();
        assert_eq!(t.rows().count(), 11);
        assert_ne!(t.row(&a), t.row(&b));
        assert!(inner_product(t.row(&a).unwrap(), t.row(&b).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn orthogonality_and_norms() {
        for n in 1..=6 {
            let t = jack_table(n).unwrap();
            for (l, u) in t.rows() {
                for (m, v) in t.rows() {
                    let ip = inner_product(u, v).unwrap();
                    if l == m {
                        assert_eq!(ip, RatFunc::from(l.hooks().2), "norm of J_{l}");
                    } else {
                        assert!(ip.is_zero(), "⟨J_{l}, J_{m}⟩");
                    }
                }
            }
        }
    }

    #[test]
    fn special_characters() {
        for n in 2..=6 {
            let t = jack_table(n).unwrap();
            let mut second = vec![2];
            second.resize(n - 1, 1);
            let second = Partition::new(second).unwrap();
            for (l, _) in t.rows() {
                assert!(t.theta(l, &Partition::column(n)).is_one());
                assert_eq!(t.theta(l, &second), l.eigenvalue(), "θ^{l}_(2,1^(n−2))");
                assert_eq!(t.theta(l, &Partition::row(n)), l.theta_top(), "θ^{l}_({n})");
            }
        }
    }

    #[test]
    fn monomial_normalization() {
        for n in 1..=6 {
            for (l, row) in jack_table(n).unwrap().rows() {
                let m = row.to_monomial().unwrap();
                assert_eq!(m.coeff(l), RatFunc::from(l.hooks().0));
            }
        }
    }

    #[test]
    fn symmetric_group_characters_at_alpha_one() {
        // J_λ(α=1) = H_λ s_λ, so χ^λ_μ = θ^λ_μ(1) z_μ / H_λ; these must be
        // integers obeying column orthogonality Σ_λ χ^λ_μ χ^λ_ν = z_μ δ_{μν}
        use crate::algebra::{rat, BigRational};
        use num_traits::Zero;
        for n in 1..=6 {
            let t = jack_table(n).unwrap();
            let basis = generate_partitions(n);
            let chi = |l: &Partition, mu: &Partition| {
                let h = l.hooks().0.eval(&rat(1));
                t.theta(l, mu).eval(&rat(1)) * BigRational::from_integer(mu.z()) / h
            };
            for l in &basis {
                assert_eq!(chi(l, &Partition::column(n)) * l.hooks().0.eval(&rat(1)), BigRational::from_integer(crate::partition::factorial(n)));
            }
            for mu in &basis {
                for nu in &basis {
                    let s = basis.iter().fold(BigRational::zero(), |acc, l| {
                        let a = chi(l, mu);
                        assert!(a.is_integer());
                        acc + a * chi(l, nu)
                    });
                    let want = if mu == nu { BigRational::from_integer(mu.z()) } else { BigRational::zero() };
                    assert_eq!(s, want, "μ={mu} ν={nu}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let t = jack_table(3).unwrap();
        let s = serde_json::to_string(&*t).unwrap();
        let back: JackTable = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, &*t);
        assert!(s.starts_with(r#"{"n":3,"rows":[{"lambda":"3","theta":{"degree":3"#));
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(jack_table(limits::max_degree() + 1), Err(Error::DegreeTooLarge { .. })));
    }
}
