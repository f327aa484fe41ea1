//! Homogeneous symmetric functions in the power-sum basis and the
//! differential operators acting on them.
//!
//! Every operator is term rewriting on the partition-indexed map: a
//! derivative ∂/∂p_i acting on p_μ picks one of the m_i(μ) parts equal to `i`,
//! so iterating over part *positions* supplies the multiplicity factors.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlphaPoly, RatFunc};
use crate::error::{Error, Result};
use crate::limits;
use crate::partition::{generate_partitions, Partition};

/// A homogeneous element Σ_μ c_μ p_μ with coefficients in ℚ(α).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSumVector {
    degree: usize,
    terms: BTreeMap<Partition, RatFunc>,
}

/// A homogeneous element Σ_μ c_μ m_μ in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialVector {
    degree: usize,
    terms: BTreeMap<Partition, RatFunc>,
}

fn accumulate(terms: &mut BTreeMap<Partition, RatFunc>, mu: Partition, c: &RatFunc) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&mu) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                terms.remove(&mu);
            }
        }
        None => {
            terms.insert(mu, c.clone());
        }
    }
}

impl PSumVector {
    pub fn zero(degree: usize) -> Self {
        PSumVector { degree, terms: BTreeMap::new() }
    }

    /// The basis element p_μ.
    pub fn basis(mu: Partition) -> Self {
        Self::term(mu, RatFunc::one())
    }

    pub fn term(mu: Partition, c: RatFunc) -> Self {
        let mut v = Self::zero(mu.n());
        v.add_term(mu, &c);
        v
    }

    /// The degree-1 vector p₁/α.
    pub fn p1_over_alpha() -> Self {
        Self::term(Partition::row(1), RatFunc::alpha().recip().expect("α ≠ 0"))
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, RatFunc)>) -> Result<Self> {
        let mut v = Self::zero(degree);
        for (mu, c) in terms {
            if mu.n() != degree {
                return Err(Error::DegreeMismatch(mu.n(), degree));
            }
            v.add_term(mu, &c);
        }
        Ok(v)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in partition order (`(n)` first).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    /// [p_μ] of this vector.
    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.terms.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, mu: Partition, c: &RatFunc) {
        debug_assert_eq!(mu.n(), self.degree, "inhomogeneous term");
        accumulate(&mut self.terms, mu, c);
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        PSumVector { degree: self.degree, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&RatFunc::from(c))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = if self.is_zero() { Self::zero(other.degree) } else { self.clone() };
        for (mu, c) in &other.terms {
            accumulate(&mut out.terms, mu.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale_int(-1))
    }

    /// Applies a linear map given on basis elements. `image(μ)` lists
    /// `(ν, k)` pairs meaning p_μ ↦ Σ k·p_ν.
    fn map_basis<F>(&self, out_degree: usize, image: F) -> Self
    where
        F: Fn(&Partition) -> Vec<(Partition, AlphaPoly)>,
    {
        let mut out = Self::zero(out_degree);
        for (mu, c) in &self.terms {
            for (nu, k) in image(mu) {
                debug_assert_eq!(nu.n(), out_degree, "operator broke homogeneity");
                accumulate(&mut out.terms, nu, &c.mul_poly(&k));
            }
        }
        out
    }

    /// N = ½ Σ i(i−1) p_i ∂/∂p_i
    pub fn apply_n(&self) -> Self {
        self.map_basis(self.degree, |mu| vec![(mu.clone(), int(n_eigen(mu) as i64))])
    }

    /// U = ½ Σ ij p_{i+j} ∂²/∂p_i∂p_j
    pub fn apply_u(&self) -> Self {
        self.map_basis(self.degree, |mu| merges(mu, 0).into_iter().map(|(nu, k)| (nu, int(k))).collect())
    }

    /// S = ½ Σ (i+j) p_i p_j ∂/∂p_{i+j}
    pub fn apply_s(&self) -> Self {
        self.map_basis(self.degree, |mu| {
            splits(mu).into_iter().map(|(nu, k)| (nu, AlphaPoly::constant(k))).collect()
        })
    }

    /// The Laplace–Beltrami operator D(α) = (α−1)N + αU + S.
    pub fn apply_d(&self) -> Self {
        self.map_basis(self.degree, d_image)
    }

    /// D(α)^r
    pub fn apply_d_pow(&self, r: usize) -> Self {
        (0..r).fold(self.clone(), |v, _| v.apply_d())
    }

    /// E₂ = Σ k p_{k+1} ∂/∂p_k
    pub fn apply_e2(&self) -> Self {
        self.map_basis(self.degree + 1, |mu| {
            positions(mu).map(|(pos, k)| (replace_part(mu, pos, &[k + 1]), int(k as i64))).collect()
        })
    }

    /// E₂⊥ = Σ (k+1) p_k ∂/∂p_{k+1}
    pub fn apply_e2_perp(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        self.map_basis(self.degree - 1, |mu| {
            positions(mu)
                .filter(|&(_, m)| m >= 2)
                .map(|(pos, m)| (replace_part(mu, pos, &[m - 1]), int(m as i64)))
                .collect()
        })
    }

    /// Multiplication by p₁.
    pub fn multiply_p1(&self) -> Self {
        self.map_basis(self.degree + 1, |mu| vec![(mu.with_part(1), AlphaPoly::one())])
    }

    /// p₁⊥ = α ∂/∂p₁, the adjoint of multiplication by p₁ for ⟨·,·⟩_α.
    pub fn apply_p1_perp(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        self.map_basis(self.degree - 1, |mu| {
            let m1 = mu.multiplicity(1);
            if m1 == 0 {
                return vec![];
            }
            let nu = mu.down_k(1).expect("has a part 1");
            vec![(nu, AlphaPoly::linear(0, m1 as i64))]
        })
    }

    /// [D, E₂] by its closed form:
    /// (α−1) Σ (i−1)² p_i ∂/∂p_{i−1} + Σ (i+j−1) p_i p_j ∂/∂p_{i+j−1}
    /// + α Σ ij p_{i+j+1} ∂²/∂p_i∂p_j.
    pub fn apply_de2_commutator(&self) -> Self {
        self.map_basis(self.degree + 1, |mu| {
            let mut out = Vec::new();
            for (pos, k) in positions(mu) {
                let k2 = (k * k) as i64;
                out.push((replace_part(mu, pos, &[k + 1]), AlphaPoly::linear(-k2, k2)));
                // ordered pairs (i, j) with i + j − 1 = k
                for i in 1..=k {
                    out.push((replace_part(mu, pos, &[i, k + 1 - i]), int(k as i64)));
                }
            }
            for (nu, w) in merges(mu, 1) {
                out.push((nu, AlphaPoly::linear(0, 2 * w)));
            }
            out
        })
    }

    /// Δ_l = [D, [D, …, [D, p₁/α]…]] (l commutators), via
    /// (1/α) Σ_k C(l,k) (−1)^{l−k} D^k p₁ D^{l−k}.
    pub fn apply_delta(&self, l: usize) -> Self {
        let inv_alpha = RatFunc::alpha().recip().expect("α ≠ 0");
        // D^{l−k} v for k = l..0, reusing successive powers
        let mut powers = Vec::with_capacity(l + 1);
        powers.push(self.clone());
        for _ in 0..l {
            let next = powers.last().expect("nonempty").apply_d();
            powers.push(next);
        }
        let mut acc = Self::zero(self.degree + 1);
        let mut binom = BigInt::one();
        for k in 0..=l {
            // binom = C(l, k)
            let sign = if (l - k) % 2 == 0 { 1 } else { -1 };
            let term = powers[l - k].multiply_p1().apply_d_pow(k);
            let c = RatFunc::from(BigRational::from_integer(&binom * sign));
            acc = acc.checked_add(&term.scale(&c)).expect("same degree");
            binom = binom * (l - k) / (k + 1);
        }
        acc.scale(&inv_alpha)
    }

    /// ⟨u, v⟩_α with ⟨p_λ, p_μ⟩_α = α^{ℓ(λ)} z_λ δ_{λμ}.
    pub fn inner_product(&self, other: &Self) -> Result<RatFunc> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut acc = RatFunc::zero();
        for (mu, c) in &self.terms {
            if let Some(d) = other.terms.get(mu) {
                acc += &(c * d).mul_poly(&power_weight(mu));
            }
        }
        Ok(acc)
    }

    /// Expands in the monomial basis.
    pub fn to_monomial(&self) -> Result<MonomialVector> {
        let t = transition(self.degree)?;
        let mut out = MonomialVector { degree: self.degree, terms: BTreeMap::new() };
        for (mu, c) in &self.terms {
            for (lambda, k) in &t.columns[mu] {
                accumulate(&mut out.terms, lambda.clone(), &c.scale(&BigRational::from_integer(k.clone())));
            }
        }
        Ok(out)
    }
}

/// α^{ℓ(μ)} z_μ
pub fn power_weight(mu: &Partition) -> AlphaPoly {
    AlphaPoly::monomial(BigRational::from_integer(mu.z()), mu.len())
}

/// Eigenvalue of N on p_μ: Σ C(μ_k, 2).
fn n_eigen(mu: &Partition) -> usize {
    mu.parts().iter().map(|&k| k * (k - 1) / 2).sum()
}

fn int(k: i64) -> AlphaPoly {
    AlphaPoly::from_int(k)
}

fn positions(mu: &Partition) -> impl Iterator<Item = (usize, usize)> + '_ {
    mu.parts().iter().copied().enumerate()
}

/// Replaces the part at `pos` with `new` parts (zeros dropped).
fn replace_part(mu: &Partition, pos: usize, new: &[usize]) -> Partition {
    let mut v = mu.parts().to_vec();
    v.remove(pos);
    v.extend_from_slice(new);
    Partition::from_parts_lossy(v)
}

/// All unordered pairs of part positions merged into `μ_a + μ_b + extra`,
/// weighted by μ_a μ_b.
fn merges(mu: &Partition, extra: usize) -> Vec<(Partition, i64)> {
    let p = mu.parts();
    let mut out = Vec::new();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let mut v: Vec<usize> = p.iter().enumerate().filter(|&(i, _)| i != a && i != b).map(|(_, &x)| x).collect();
            v.push(p[a] + p[b] + extra);
            out.push((Partition::from_parts_lossy(v), (p[a] * p[b]) as i64));
        }
    }
    out
}

/// Each part m split into ordered pairs (i, m − i), weighted m/2.
fn splits(mu: &Partition) -> Vec<(Partition, BigRational)> {
    let mut out = Vec::new();
    for (pos, m) in positions(mu) {
        let w = BigRational::new(BigInt::from(m), BigInt::from(2));
        for i in 1..m {
            out.push((replace_part(mu, pos, &[i, m - i]), w.clone()));
        }
    }
    out
}

fn d_image(mu: &Partition) -> Vec<(Partition, AlphaPoly)> {
    let mut out = Vec::new();
    let ne = n_eigen(mu) as i64;
    if ne != 0 {
        out.push((mu.clone(), AlphaPoly::linear(-ne, ne)));
    }
    for (nu, k) in merges(mu, 0) {
        out.push((nu, AlphaPoly::linear(0, k)));
    }
    for (nu, k) in splits(mu) {
        out.push((nu, AlphaPoly::constant(k)));
    }
    out
}

/// Matrix of D(α) on the power-sum basis of degree `n`, indexed in
/// [`generate_partitions`] order: entry `[row][col]` is [p_row] D(p_col).
pub fn d_matrix(n: usize) -> Vec<Vec<AlphaPoly>> {
    let basis = generate_partitions(n);
    let index: HashMap<&Partition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut m = vec![vec![AlphaPoly::zero(); basis.len()]; basis.len()];
    for (col, mu) in basis.iter().enumerate() {
        for (nu, k) in d_image(mu) {
            let row = index[&nu];
            m[row][col] += &k;
        }
    }
    m
}

impl MonomialVector {
    pub fn zero(degree: usize) -> Self {
        MonomialVector { degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, RatFunc)>) -> Result<Self> {
        let mut v = Self::zero(degree);
        for (mu, c) in terms {
            if mu.n() != degree {
                return Err(Error::DegreeMismatch(mu.n(), degree));
            }
            accumulate(&mut v.terms, mu, &c);
        }
        Ok(v)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    /// [m_μ] of this vector.
    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.terms.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Solves the dominance-triangular system back to the power-sum basis.
    pub fn to_power_sum(&self) -> Result<PSumVector> {
        let t = transition(self.degree)?;
        let mut out = PSumVector::zero(self.degree);
        // [m_λ] p_μ ≠ 0 only for λ ≥ μ; ascending lexicographic order is a
        // linear extension of dominance, so each λ sees its lower terms first.
        let mut residual = self.terms.clone();
        for lambda in t.order.iter().rev() {
            let r = match residual.get(lambda) {
                Some(r) if !r.is_zero() => r.clone(),
                _ => continue,
            };
            let col = &t.columns[lambda];
            let diag = col.iter().find(|(l, _)| l == lambda).expect("diagonal entry").1.clone();
            let c = r.scale(&BigRational::new(BigInt::one(), diag));
            for (l, k) in col {
                accumulate(&mut residual, l.clone(), &c.scale(&BigRational::from_integer(-k.clone())));
            }
            out.add_term(lambda.clone(), &c);
        }
        debug_assert!(residual.is_empty());
        Ok(out)
    }
}

/// The integer matrix R with p_μ = Σ_λ R_{λμ} m_λ for one degree.
#[derive(Debug)]
pub struct Transition {
    order: Vec<Partition>,
    columns: HashMap<Partition, Vec<(Partition, BigInt)>>,
}

impl Transition {
    fn build(n: usize) -> Self {
        let order = generate_partitions(n);
        let columns = order
            .iter()
            .map(|mu| {
                let col = order
                    .iter()
                    .filter_map(|lambda| {
                        let k = monomial_coefficient(mu, lambda);
                        (!k.is_zero()).then(|| (lambda.clone(), k))
                    })
                    .collect();
                (mu.clone(), col)
            })
            .collect();
        Transition { order, columns }
    }

    /// R_{λμ} = [m_λ] p_μ.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        self.columns
            .get(mu)
            .and_then(|c| c.iter().find(|(l, _)| l == lambda))
            .map(|(_, k)| k.clone())
            .unwrap_or_else(BigInt::zero)
    }
}

/// Coefficient of x^λ in p_μ = Π_j (Σ_i x_i^{μ_j}): the number of ways to
/// send each factor's variable to a row so that row `i` collects degree λ_i.
fn monomial_coefficient(mu: &Partition, lambda: &Partition) -> BigInt {
    fn rec(parts: &[usize], cap: &mut [usize]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return 1;
        };
        let mut total = 0;
        for i in 0..cap.len() {
            if cap[i] >= first {
                cap[i] -= first;
                total += rec(rest, cap);
                cap[i] += first;
            }
        }
        total
    }
    let mut cap = lambda.parts().to_vec();
    BigInt::from(rec(mu.parts(), &mut cap))
}

/// The cached transition matrix for degree `n`.
pub fn transition(n: usize) -> Result<Arc<Transition>> {
    limits::check_degree(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(Transition::build(n));
    Ok(cache.lock().expect("cache lock").entry(n).or_insert(built).clone())
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    mu: Partition,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct VectorJson {
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for PSumVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VectorJson {
            degree: self.degree,
            terms: self.terms.iter().map(|(mu, c)| TermJson { mu: mu.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PSumVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = VectorJson::deserialize(d)?;
        PSumVector::from_terms(j.degree, j.terms.into_iter().map(|t| (t.mu, t.coeff))).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> PSumVector {
        PSumVector::basis(pt(s))
    }

    fn vec_of(degree: usize, terms: &[(&str, &[i64])]) -> PSumVector {
        PSumVector::from_terms(degree, terms.iter().map(|(m, c)| (pt(m), RatFunc::from(AlphaPoly::from_ints(c))))).unwrap()
    }

    #[test]
    fn n_u_s_on_small_vectors() {
        assert_eq!(p("2").apply_n(), p("2"));
        assert!(p("1,1").apply_n().is_zero());
        assert_eq!(p("1,1").apply_u(), p("2"));
        assert!(p("2").apply_u().is_zero());
        assert_eq!(p("2").apply_s(), p("1,1"));
        assert!(p("1,1").apply_s().is_zero());
    }

    #[test]
    fn laplace_beltrami_examples() {
        assert!(p("1").apply_d().is_zero());
        assert_eq!(p("2").apply_d(), vec_of(2, &[("2", &[-1, 1]), ("1,1", &[1])]));
        // J_(2) = p_1² + α p_2 is an eigenvector with eigenvalue α
        let j2 = vec_of(2, &[("1,1", &[1]), ("2", &[0, 1])]);
        assert_eq!(j2.apply_d(), j2.scale(&RatFunc::alpha()));
    }

    #[test]
    fn raising_and_lowering() {
        assert_eq!(p("2").apply_e2(), p("3").scale_int(2));
        assert_eq!(p("3").apply_e2_perp(), p("2").scale_int(3));
        assert_eq!(p("1,1").apply_p1_perp(), p("1").scale(&RatFunc::from(AlphaPoly::linear(0, 2))));
        // E₂ = [D, p₁/α] on p_2
        let lhs = p("2").multiply_p1().apply_d().checked_sub(&p("2").apply_d().multiply_p1()).unwrap();
        let lhs = lhs.scale(&RatFunc::alpha().recip().unwrap());
        assert_eq!(lhs, p("3").scale_int(2));
    }

    #[test]
    fn commutator_examples() {
        let c = p("1").apply_de2_commutator();
        assert_eq!(c, vec_of(2, &[("2", &[-1, 1]), ("1,1", &[1])]));
        let at_one = c.coeff(&pt("2")).eval_int(1).unwrap();
        assert!(at_one.is_zero());
        let oracle = p("2").apply_e2().apply_d().checked_sub(&p("2").apply_d().apply_e2()).unwrap();
        assert_eq!(p("2").apply_de2_commutator(), oracle);
    }

    #[test]
    fn delta_examples() {
        let v = p("2,1");
        assert_eq!(v.apply_delta(0), v.multiply_p1().scale(&RatFunc::alpha().recip().unwrap()));
        assert_eq!(p("1").apply_delta(1), p("2"));
        assert_eq!(p("1").apply_delta(2), p("1").apply_de2_commutator());
    }

    #[test]
    fn monomial_expansion() {
        let m = p("1").to_monomial().unwrap();
        assert_eq!(m.coeff(&pt("1")), RatFunc::one());
        let m = p("2").to_monomial().unwrap();
        assert_eq!(m.terms().count(), 1);
        assert_eq!(m.coeff(&pt("2")), RatFunc::one());
        let m = p("1,1").to_monomial().unwrap();
        assert_eq!(m.coeff(&pt("2")), RatFunc::one());
        assert_eq!(m.coeff(&pt("1,1")), RatFunc::from(2));
    }

    #[test]
    fn degree_bound_enforced() {
        let n = limits::max_degree() + 1;
        assert!(matches!(PSumVector::basis(Partition::row(n)).to_monomial(), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn inner_product_basics() {
        assert_eq!(p("2").inner_product(&p("2")).unwrap(), RatFunc::from(AlphaPoly::linear(0, 2)));
        assert!(matches!(p("2").inner_product(&p("1")), Err(Error::DegreeMismatch(2, 1))));
    }

    #[test]
    fn json_shape() {
        let v = vec_of(2, &[("1,1", &[1]), ("2", &[0, 1])]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"degree":2,"terms":[{"mu":"2","coeff":{"num":[["0","1"],["1","1"]],"den":[["1","1"]]}},{"mu":"1,1","coeff":{"num":[["1","1"]],"den":[["1","1"]]}}]}"#
        );
        let back: PSumVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    fn all_basis(n: usize) -> Vec<PSumVector> {
        generate_partitions(n).into_iter().map(PSumVector::basis).collect()
    }

    #[test]
    fn commutator_matches_composition() {
        for n in 1..=6 {
            for v in all_basis(n) {
                let oracle = v.apply_e2().apply_d().checked_sub(&v.apply_d().apply_e2()).unwrap();
                assert_eq!(v.apply_de2_commutator(), oracle);
            }
        }
    }

    #[test]
    fn delta_matches_nested_commutators() {
        // [D, X](v) = D X v − X D v
        fn nested(v: &PSumVector, l: usize) -> PSumVector {
            if l == 0 {
                return v.multiply_p1().scale(&RatFunc::alpha().recip().unwrap());
            }
            nested(v, l - 1).apply_d().checked_sub(&nested(&v.apply_d(), l - 1)).unwrap()
        }
        for n in 1..=5 {
            for v in all_basis(n) {
                for l in 0..=3 {
                    assert_eq!(v.apply_delta(l), nested(&v, l), "l={l} v={v:?}");
                }
            }
        }
    }

    #[test]
    fn p1_adjoint_pair() {
        for n in 1..=6 {
            for u in all_basis(n - 1) {
                for v in all_basis(n) {
                    let lhs = u.multiply_p1().inner_product(&v).unwrap();
                    let rhs = u.inner_product(&v.apply_p1_perp()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn d_is_self_adjoint() {
        for n in 1..=5 {
            for u in all_basis(n) {
                for v in all_basis(n) {
                    assert_eq!(u.apply_d().inner_product(&v).unwrap(), u.inner_product(&v.apply_d()).unwrap());
                }
            }
        }
    }

    /// p_μ expanded in n variables by explicit multiplication.
    fn brute_force_monomials(mu: &Partition, nvars: usize) -> HashMap<Vec<usize>, u64> {
        let mut poly: HashMap<Vec<usize>, u64> = HashMap::from([(vec![0; nvars], 1)]);
        for &k in mu.parts() {
            let mut next = HashMap::new();
            for (exp, c) in &poly {
                for i in 0..nvars {
                    let mut e = exp.clone();
                    e[i] += k;
                    *next.entry(e).or_insert(0) += c;
                }
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn transition_matches_expansion() {
        for n in 1..=6 {
            let t = transition(n).unwrap();
            for mu in generate_partitions(n) {
                let poly = brute_force_monomials(&mu, n);
                for lambda in generate_partitions(n) {
                    let mut exp = lambda.parts().to_vec();
                    exp.resize(n, 0);
                    let want = poly.get(&exp).copied().unwrap_or(0);
                    assert_eq!(t.entry(&lambda, &mu), BigInt::from(want), "λ={lambda} μ={mu}");
                    if !lambda.dominates(&mu) {
                        assert!(t.entry(&lambda, &mu).is_zero());
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn monomial_round_trip(n in 1usize..=7, seed in proptest::collection::vec(-4i64..=4, 15)) {
            let basis = generate_partitions(n);
            let v = PSumVector::from_terms(
                n,
                basis.iter().zip(seed.iter().cycle()).enumerate().map(|(i, (mu, &c))| {
                    (mu.clone(), RatFunc::from(AlphaPoly::from_ints(&[c, (i as i64) % 3])))
                }),
            ).unwrap();
            let back = v.to_monomial().unwrap().to_power_sum().unwrap();
            proptest::prop_assert_eq!(back, v);
        }
    }
}
