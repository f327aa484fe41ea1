//! Jack connection coefficients a^{λ¹}_{λ²…λˢ}(α), with a^λ_{nn} short for
//! a^λ_{(n),(n)} and a_λ^{l,r} for l lower indices (n) and r lower indices
//! [1^{n−2}2].

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{AlphaPoly, RatFunc};
use crate::error::{Error, Result};
use crate::jack::jack_table;
use crate::limits;
use crate::partition::{factorial, generate_partitions, Partition};
use crate::psum::PSumVector;

/// The index partitions of a^{λ¹}_{λ²,…,λˢ}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionQuery {
    lambda1: Partition,
    others: Vec<Partition>,
}

impl ConnectionQuery {
    pub fn new(lambda1: Partition, others: Vec<Partition>) -> Result<Self> {
        if others.is_empty() {
            return Err(Error::InvalidArgument("a connection coefficient needs at least two partitions".into()));
        }
        if let Some(p) = others.iter().find(|p| p.n() != lambda1.n()) {
            return Err(Error::DegreeMismatch(lambda1.n(), p.n()));
        }
        if lambda1.is_empty() {
            return Err(Error::InvalidArgument("partitions must be nonempty".into()));
        }
        Ok(ConnectionQuery { lambda1, others })
    }

    /// a^λ_{nn}
    pub fn nn(lambda: &Partition) -> Self {
        let n = Partition::row(lambda.n());
        ConnectionQuery { lambda1: lambda.clone(), others: vec![n.clone(), n] }
    }

    /// a_λ^{l,r}
    pub fn lr(lambda: &Partition, l: usize, r: usize) -> Self {
        let n = lambda.n();
        let mut others = vec![Partition::row(n); l];
        if r > 0 {
            others.extend(std::iter::repeat_n(Partition::transposition(n), r));
        }
        ConnectionQuery { lambda1: lambda.clone(), others }
    }

    pub fn lambda1(&self) -> &Partition {
        &self.lambda1
    }

    pub fn others(&self) -> &[Partition] {
        &self.others
    }

    pub fn n(&self) -> usize {
        self.lambda1.n()
    }
}

/// A coefficient together with its expansion in β = α − 1 when it is a
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffResult {
    pub value: RatFunc,
    pub beta_form: Option<AlphaPoly>,
}

impl CoeffResult {
    pub fn new(value: RatFunc) -> Self {
        let beta_form = value.to_beta().ok();
        CoeffResult { value, beta_form }
    }
}

impl From<AlphaPoly> for CoeffResult {
    fn from(p: AlphaPoly) -> Self {
        CoeffResult::new(RatFunc::from(p))
    }
}

/// α^{ℓ(λ¹)} z_{λ¹} Σ_γ Π_i θ^γ_{λⁱ}(α) / j_γ(α), with the product over all
/// index partitions including λ¹.
pub fn a_cauchy(q: &ConnectionQuery) -> Result<RatFunc> {
    let n = q.n();
    let table = jack_table(n)?;
    let mut sum = RatFunc::zero();
    for (gamma, _) in table.rows() {
        let mut num = table.theta(gamma, &q.lambda1);
        for mu in &q.others {
            if num.is_zero() {
                break;
            }
            num = &num * &table.theta(gamma, mu);
        }
        if num.is_zero() {
            continue;
        }
        sum += &RatFunc::new(num, gamma.hooks().2)?;
    }
    let weight = AlphaPoly::monomial(BigRational::from_integer(q.lambda1.z()), q.lambda1.len());
    Ok(sum.mul_poly(&weight))
}

/// The linear combination inside the recurrence bracket for the part at
/// position `pos` of λ: pairs (coefficient, partition of |λ| − 1).
pub fn bracket_terms(lambda: &Partition, pos: usize) -> Vec<(AlphaPoly, Partition)> {
    let parts = lambda.parts();
    let k = parts[pos];
    let mut out = Vec::new();
    if k >= 2 {
        out.push((AlphaPoly::linear(1 - k as i64, k as i64 - 1), lambda.down_k(k).expect("has part k")));
    }
    for d in 1..k.saturating_sub(1) {
        out.push((AlphaPoly::one(), lambda.up_kl(k - 1 - d, d).expect("has part k")));
    }
    for (j, &pj) in parts.iter().enumerate() {
        if j != pos {
            out.push((AlphaPoly::linear(0, pj as i64), lambda.down_kl(k, pj).expect("has parts k and λ_j")));
        }
    }
    out
}

fn memo() -> &'static Mutex<HashMap<Partition, AlphaPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, AlphaPoly>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// a^λ_{nn}(α) by the recurrence on the largest part, from a^{(1)}_{11} = 1.
pub fn a_nn_recurrence(lambda: &Partition) -> AlphaPoly {
    assert!(!lambda.is_empty(), "a_nn needs |λ| ≥ 1");
    if lambda.n() == 1 {
        return AlphaPoly::one();
    }
    if let Some(v) = memo().lock().expect("memo lock").get(lambda) {
        return v.clone();
    }
    let v = eval_bracket(lambda, 0);
    memo().lock().expect("memo lock").entry(lambda.clone()).or_insert(v).clone()
}

fn eval_bracket(lambda: &Partition, pos: usize) -> AlphaPoly {
    bracket_terms(lambda, pos)
        .into_iter()
        .fold(AlphaPoly::zero(), |acc, (c, mu)| &acc + &(&c * &a_nn_recurrence(&mu)))
}

/// The recurrence bracket evaluated at each distinct part value of λ,
/// largest part first.
pub fn brackets_by_part(lambda: &Partition) -> Vec<(usize, AlphaPoly)> {
    let parts = lambda.parts();
    (0..parts.len())
        .filter(|&p| p == 0 || parts[p] != parts[p - 1])
        .map(|p| (parts[p], eval_bracket(lambda, p)))
        .collect()
}

/// Whether the recurrence bracket agrees for every distinct part value of λ.
pub fn verify_i_independence(lambda: &Partition) -> bool {
    if lambda.n() < 2 {
        return true;
    }
    let b = brackets_by_part(lambda);
    b.iter().all(|(_, v)| v == &b[0].1)
}

/// Both sides of the general recurrence for λ ⊢ n+1 and ν ⊢ n:
/// Σ_{i: m_{i−1}(ν)≥1} i(m_i(ν)+1) a^λ_{n+1, ν↑(i−1)} against
/// Σ_i λ_i [bracket_i] with each a^{·}_{n,ν}.
pub fn thm_rec_sides(lambda: &Partition, nu: &Partition) -> Result<(RatFunc, RatFunc)> {
    let n = nu.n();
    if lambda.n() != n + 1 || n == 0 {
        return Err(Error::DegreeMismatch(lambda.n(), n + 1));
    }
    let mut lhs = RatFunc::zero();
    for prev in nu.distinct_parts() {
        let i = prev + 1;
        let q = ConnectionQuery::new(lambda.clone(), vec![Partition::row(n + 1), nu.up_k(prev)?])?;
        let c = (i * (nu.multiplicity(i) + 1)) as i64;
        lhs += &a_cauchy(&q)?.scale_int(c);
    }
    let mut rhs = RatFunc::zero();
    let row = Partition::row(n);
    for (pos, &li) in lambda.parts().iter().enumerate() {
        for (c, mu) in bracket_terms(lambda, pos) {
            let a = a_cauchy(&ConnectionQuery::new(mu, vec![row.clone(), nu.clone()])?)?;
            rhs += &a.mul_poly(&c).scale_int(li as i64);
        }
    }
    Ok((lhs, rhs))
}

pub fn verify_thm_rec(lambda: &Partition, nu: &Partition) -> Result<bool> {
    let (l, r) = thm_rec_sides(lambda, nu)?;
    Ok(l == r)
}

/// Checks, for μ ⊢ m:
/// a^{μ∪(1)}_{m+1} = α m a^μ_m;
/// a^λ_n = α^{m₁} (n−1)!/(n−m₁−1)! a^{λ'}_{n−m₁} for λ = μ∪(1,1) with its
/// parts 1 stripped to λ' (one part 1 kept when λ has no other parts);
/// a^{μ∪(2)}_{m+2} = α(α−1) m a^μ_m + α Σ_j μ_j a^{μ↑(μ_j)}_{m+1}.
pub fn remark_identities(mu: &Partition) -> bool {
    let m = mu.n() as i64;
    let a = a_nn_recurrence;
    let first = a(&mu.with_part(1)) == &AlphaPoly::linear(0, m) * &a(mu);

    let lambda = mu.with_part(1).with_part(1);
    let n = lambda.n();
    let mut m1 = lambda.multiplicity(1);
    let mut rest: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 1).collect();
    if rest.is_empty() {
        rest.push(1);
        m1 -= 1;
    }
    let rest = Partition::from_parts_lossy(rest);
    let ratio = BigRational::new(factorial(n - 1), factorial(n - m1 - 1));
    let second = a(&lambda) == AlphaPoly::monomial(ratio, m1) * a(&rest);

    let mut rhs = &AlphaPoly::from_ints(&[0, -m, m]) * &a(mu);
    for &p in mu.parts() {
        rhs += &(&AlphaPoly::linear(0, p as i64) * &a(&mu.up_k(p).expect("has part")));
    }
    let third = a(&mu.with_part(2)) == rhs;
    first && second && third
}

/// One step Γ^l_n = (1/n) Δ_l(Γ^l_{n−1}).
pub fn gamma_step(l: usize, v: &PSumVector) -> PSumVector {
    let n = v.degree() as i64 + 1;
    v.apply_delta(l).scale(&RatFunc::from(BigRational::new(BigInt::from(1), BigInt::from(n))))
}

/// Γ^l_n, starting from Γ^l_1 = p₁/α.
pub fn gamma(l: usize, n: usize) -> Result<PSumVector> {
    limits::check_degree(n)?;
    let mut g = PSumVector::p1_over_alpha();
    for _ in 1..n {
        g = gamma_step(l, &g);
    }
    Ok(g)
}

/// a_λ^{l,r} for every λ ⊢ n from α^{−ℓ(λ)}|C_λ| a_λ^{l,r} = [p_λ] D^r Δ_l^{n−1}(p₁/α).
pub fn a_lr_all(n: usize, l: usize, r: usize) -> Result<BTreeMap<Partition, RatFunc>> {
    if n == 0 {
        return Err(Error::InvalidArgument("a_lr needs n ≥ 1".into()));
    }
    limits::check_degree(n)?;
    let mut v = PSumVector::p1_over_alpha();
    for _ in 1..n {
        v = v.apply_delta(l);
    }
    let v = v.apply_d_pow(r);
    Ok(generate_partitions(n)
        .into_iter()
        .map(|lambda| {
            let w = AlphaPoly::monomial(BigRational::new(BigInt::from(1), lambda.class_size()), lambda.len());
            let a = v.coeff(&lambda).mul_poly(&w);
            (lambda, a)
        })
        .collect())
}

pub fn a_lr(lambda: &Partition, l: usize, r: usize) -> Result<RatFunc> {
    Ok(a_lr_all(lambda.n(), l, r)?.remove(lambda).expect("λ ⊢ n"))
}

/// For |C_λ| a_λ^{l,r}: integer coefficients, degree at most (n−1)(l−1)+r,
/// and [α^i] = (−1)^E [α^{E−i}] with E = (l−1)(n−1)+r+ℓ(λ)−1.
pub fn check_lr_shape(lambda: &Partition, l: usize, r: usize, value: &RatFunc) -> std::result::Result<(), String> {
    let n = lambda.n();
    let p = value
        .scale(&BigRational::from_integer(lambda.class_size()))
        .into_polynomial()
        .map_err(|e| e.to_string())?;
    if !p.is_integral() {
        return Err(format!("|C_{lambda}|·a has non-integer coefficients"));
    }
    let bound = (n - 1) * (l - 1) + r;
    if p.degree().is_some_and(|d| d > bound) {
        return Err(format!("|C_{lambda}|·a has degree above {bound}"));
    }
    let e = bound + lambda.len() - 1;
    let sign = if e % 2 == 0 { 1 } else { -1 };
    for i in 0..=e {
        if p.coeff(i) != p.coeff(e - i) * BigInt::from(sign) {
            return Err(format!("|C_{lambda}|·a breaks the symmetry at α^{i}"));
        }
    }
    Ok(())
}

/// Coefficients of a polynomial in β are nonnegative integers.
pub fn is_nonnegative_integral(p: &AlphaPoly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && !c.is_negative())
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

    fn cauchy(l: &str, others: &[&str]) -> RatFunc {
        a_cauchy(&ConnectionQuery::new(pt(l), others.iter().map(|s| pt(s)).collect()).unwrap()).unwrap()
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy("2", &["2", "2"]), RatFunc::from(poly(&[-1, 1])));
        assert_eq!(cauchy("1,1", &["2", "2"]), RatFunc::alpha());
        let a3 = cauchy("3", &["3", "3"]);
        assert_eq!(a3, RatFunc::from(poly(&[2, -3, 2])));
        // β-form 2β² + β + 1
        assert_eq!(CoeffResult::new(a3).beta_form, Some(poly(&[1, 1, 2])));
    }

    #[test]
    fn query_validation() {
        assert!(matches!(ConnectionQuery::new(pt("2"), vec![]), Err(Error::InvalidArgument(_))));
        assert!(matches!(ConnectionQuery::new(pt("2"), vec![pt("3")]), Err(Error::DegreeMismatch(2, 3))));
    }

    #[test]
    fn recurrence_examples() {
        assert!(a_nn_recurrence(&pt("1")).is_one());
        assert_eq!(a_nn_recurrence(&pt("2")), poly(&[-1, 1]));
        assert_eq!(a_nn_recurrence(&pt("1,1")), poly(&[0, 1]));
        assert_eq!(a_nn_recurrence(&pt("3")), poly(&[2, -3, 2]));
        assert_eq!(a_nn_recurrence(&pt("2,1")), poly(&[0, -2, 2]));
        assert_eq!(a_nn_recurrence(&pt("1,1,1")), poly(&[0, 0, 2]));
        assert_eq!(a_nn_recurrence(&pt("5")).eval(&crate::algebra::rat(1)), crate::algebra::rat(8));
    }

    #[test]
    fn recurrence_matches_cauchy() {
        for n in 1..=6 {
            for l in generate_partitions(n) {
                assert_eq!(RatFunc::from(a_nn_recurrence(&l)), a_cauchy(&ConnectionQuery::nn(&l)).unwrap(), "λ={l}");
            }
        }
    }

    #[test]
    fn i_independence() {
        assert!(verify_i_independence(&pt("2,1")));
        assert!(verify_i_independence(&pt("3,2,1")));
        for n in 2..=7 {
            for l in generate_partitions(n) {
                assert!(verify_i_independence(&l), "λ={l}");
            }
        }
    }

    #[test]
    fn general_recurrence() {
        let (l, r) = thm_rec_sides(&pt("2"), &pt("1")).unwrap();
        assert_eq!(l, RatFunc::from(poly(&[-2, 2])));
        assert_eq!(l, r);
        assert!(verify_thm_rec(&pt("2,1"), &pt("1,1")).unwrap());
        for n in 1..=4 {
            for l in generate_partitions(n + 1) {
                for nu in generate_partitions(n) {
                    assert!(verify_thm_rec(&l, &nu).unwrap(), "λ={l} ν={nu}");
                }
            }
        }
    }

    #[test]
    fn remark_examples() {
        assert_eq!(a_nn_recurrence(&pt("2,1")), &poly(&[0, 2]) * &poly(&[-1, 1]));
        assert_eq!(a_nn_recurrence(&pt("1,1")), poly(&[0, 1]));
        let rhs = &(&poly(&[0, -2, 2]) * &a_nn_recurrence(&pt("2"))) + &(&poly(&[0, 2]) * &a_nn_recurrence(&pt("3")));
        assert_eq!(a_nn_recurrence(&pt("2,2")), rhs);
        for n in 1..=6 {
            for mu in generate_partitions(n) {
                assert!(remark_identities(&mu), "μ={mu}");
            }
        }
    }

    #[test]
    fn beta_positivity_and_top_coefficient() {
        for n in 1..=7 {
            let top = BigRational::from_integer(factorial(n - 1));
            for l in generate_partitions(n) {
                let b = a_nn_recurrence(&l).to_beta();
                assert!(is_nonnegative_integral(&b), "λ={l}");
                assert!(b.degree().unwrap() <= n - 1);
                assert_eq!(b.coeff(n - 1), top, "λ={l}");
            }
        }
    }

    #[test]
    fn operator_formula_matches_recurrence() {
        for n in 1..=6 {
            for (l, a) in a_lr_all(n, 2, 0).unwrap() {
                assert_eq!(a, RatFunc::from(a_nn_recurrence(&l)), "λ={l}");
            }
        }
        assert_eq!(a_lr(&pt("3"), 2, 0).unwrap(), RatFunc::from(poly(&[2, -3, 2])));
    }

    #[test]
    fn operator_formula_matches_cauchy() {
        for n in 1..=4 {
            for l in 2..=3 {
                for r in 0..=2 {
                    if n == 1 && r > 0 {
                        continue;
                    }
                    for (lambda, a) in a_lr_all(n, l, r).unwrap() {
                        assert_eq!(a, a_cauchy(&ConnectionQuery::lr(&lambda, l, r)).unwrap(), "λ={lambda} l={l} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn lr_shape() {
        for n in 1..=5 {
            for l in 2..=3 {
                for r in 0..=2 {
                    for (lambda, a) in a_lr_all(n, l, r).unwrap() {
                        check_lr_shape(&lambda, l, r, &a).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn l_one_has_no_column_term() {
        for n in 2..=5 {
            assert!(a_lr(&Partition::column(n), 1, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn gamma_recursion() {
        for l in 1..=3 {
            assert_eq!(gamma(l, 1).unwrap(), PSumVector::p1_over_alpha());
        }
        let g2 = gamma(2, 2).unwrap();
        let inv2a = RatFunc::from(poly(&[0, 2])).recip().unwrap();
        assert_eq!(g2.coeff(&pt("2")), RatFunc::from(poly(&[-1, 1])) * inv2a.clone());
        assert_eq!(g2.coeff(&pt("1,1")), inv2a);
        let g3 = gamma(2, 3).unwrap();
        for l in generate_partitions(3) {
            let readout = g3.coeff(&l).mul_poly(&AlphaPoly::monomial(BigRational::from_integer(l.z()), l.len()));
            assert_eq!(readout, RatFunc::from(a_nn_recurrence(&l)));
        }
    }
}
