//! Integer partitions, Young-diagram box statistics and the constants
//! attached to a partition (z_λ, class sizes, hook products, character
//! special values).
//!
//! Text form is a comma-separated list of decreasing parts, `"3,2,2,1"`; the
//! empty partition is written `"-"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::AlphaPoly;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering: first by weight, then reverse-lexicographically, so that within a
/// fixed weight `(n)` comes first and `[1^n]` last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

/// Position and arm/leg statistics of one box of a Young diagram (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxStats {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

/// The four modification operators λ↓(k), λ↑(k), λ↓(k,l), λ↑(k,l).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modify {
    /// Replace a part `k` by `k − 1` (dropped when it becomes 0).
    DownK(usize),
    /// Replace a part `k` by `k + 1`.
    UpK(usize),
    /// Replace parts `k` and `l` by one part `k + l − 1`.
    DownKl(usize, usize),
    /// Replace a part `k + l + 1` by parts `k` and `l` (zero parts dropped).
    UpKl(usize, usize),
}

impl Partition {
    /// Sorts the parts; rejects zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Like [`Partition::new`] but drops zero parts instead of failing.
    pub fn from_parts_lossy(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        Self::new(parts).expect("zero parts removed")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The one-part partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    /// `[1^n]`
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n], n }
    }

    /// `[1^{n−2} 2]`
    pub fn transposition(n: usize) -> Self {
        assert!(n >= 2);
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        Partition { parts, n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|
    pub fn n(&self) -> usize {
        self.n
    }

    /// ℓ(λ)
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// m_i(λ)
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.dedup();
        v
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts, n: self.n }
    }

    /// n(λ) = Σ (i − 1) λ_i.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Dominance order: `self ≥ other` (same weight assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.n != other.n {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All boxes with their statistics, row by row.
    pub fn boxes(&self) -> Vec<BoxStats> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.n);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                out.push(BoxStats {
                    row: r + 1,
                    col: c + 1,
                    arm: len - c - 1,
                    leg: conj.parts[c] - r - 1,
                    coarm: c,
                    coleg: r,
                });
            }
        }
        out
    }

    /// Aut_λ = Π m_i!.
    pub fn aut(&self) -> BigInt {
        self.multiplicity_runs().map(|(_, m)| factorial(m)).product()
    }

    /// z_λ = Π i^{m_i} m_i!.
    pub fn z(&self) -> BigInt {
        self.multiplicity_runs()
            .map(|(i, m)| BigInt::from(i).pow(m as u32) * factorial(m))
            .product()
    }

    /// |C_λ| = n! / z_λ.
    pub fn class_size(&self) -> BigInt {
        factorial(self.n) / self.z()
    }

    fn multiplicity_runs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.distinct_parts().into_iter().map(|v| (v, self.multiplicity(v)))
    }

    fn missing(&self, part: usize) -> Error {
        Error::MissingPart { partition: self.to_string(), part }
    }

    fn without(&self, part: usize) -> Result<Vec<usize>> {
        let pos = self.parts.iter().position(|&p| p == part).ok_or_else(|| self.missing(part))?;
        let mut v = self.parts.clone();
        v.remove(pos);
        Ok(v)
    }

    /// Applies one of the four modification operators.
    pub fn modify(&self, op: Modify) -> Result<Partition> {
        let parts = match op {
            Modify::DownK(k) => {
                let mut v = self.without(k)?;
                v.push(k - 1);
                v
            }
            Modify::UpK(k) => {
                let mut v = self.without(k)?;
                v.push(k + 1);
                v
            }
            Modify::DownKl(k, l) => {
                let mut v = self.without(k)?;
                let pos = v.iter().position(|&p| p == l).ok_or_else(|| self.missing(l))?;
                v.remove(pos);
                v.push(k + l - 1);
                v
            }
            Modify::UpKl(k, l) => {
                let mut v = self.without(k + l + 1)?;
                v.push(k);
                v.push(l);
                v
            }
        };
        Ok(Partition::from_parts_lossy(parts))
    }

    pub fn down_k(&self, k: usize) -> Result<Partition> {
        self.modify(Modify::DownK(k))
    }

    pub fn up_k(&self, k: usize) -> Result<Partition> {
        self.modify(Modify::UpK(k))
    }

    pub fn down_kl(&self, k: usize, l: usize) -> Result<Partition> {
        self.modify(Modify::DownKl(k, l))
    }

    pub fn up_kl(&self, k: usize, l: usize) -> Result<Partition> {
        self.modify(Modify::UpKl(k, l))
    }

    /// Appends a part.
    pub fn with_part(&self, k: usize) -> Partition {
        let mut v = self.parts.clone();
        v.push(k);
        Partition::from_parts_lossy(v)
    }

    /// `(h_λ, h′_λ, j_λ)` with h = Π(α·a + l + 1), h′ = Π(α(a + 1) + l).
    pub fn hooks(&self) -> (AlphaPoly, AlphaPoly, AlphaPoly) {
        let mut h = AlphaPoly::one();
        let mut hp = AlphaPoly::one();
        for b in self.boxes() {
            h = &h * &AlphaPoly::linear((b.leg + 1) as i64, b.arm as i64);
            hp = &hp * &AlphaPoly::linear(b.leg as i64, (b.arm + 1) as i64);
        }
        let j = &h * &hp;
        (h, hp, j)
    }

    /// Σ_s (α a′(s) − l′(s)): the Laplace–Beltrami eigenvalue of J_λ and the
    /// Jack character at `[1^{n−2} 2]`.
    pub fn eigenvalue(&self) -> AlphaPoly {
        AlphaPoly::linear(-(self.n_statistic() as i64), self.conjugate().n_statistic() as i64)
    }

    /// Π_{s ≠ (1,1)} (α a′(s) − l′(s)): the Jack character at `(n)`.
    pub fn theta_top(&self) -> AlphaPoly {
        self.boxes()
            .into_iter()
            .filter(|b| (b.row, b.col) != (1, 1))
            .fold(AlphaPoly::one(), |acc, b| &acc * &AlphaPoly::linear(-(b.coleg as i64), b.coarm as i64))
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(z_λ, Aut_λ, |C_λ|)`.
pub fn z_aut_class(lambda: &Partition) -> (BigInt, BigInt, BigInt) {
    (lambda.z(), lambda.aut(), lambda.class_size())
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `[1^n]` last.
pub fn generate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone(), n: cur.iter().sum() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        let p = Partition::new(parts.clone())?;
        if p.parts != parts {
            return Err(Error::Parse(format!("partition `{s}` is not weakly decreasing")));
        }
        Ok(p)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Brute force: all weakly decreasing sequences via compositions of n.
    fn brute_force_count(n: usize) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        // every composition of n corresponds to a bitmask of cut points
        for mask in 0u32..(1 << n.saturating_sub(1)) {
            let mut parts = Vec::new();
            let mut cur = 1;
            for i in 0..n.saturating_sub(1) {
                if mask & (1 << i) != 0 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            if n > 0 {
                parts.push(cur);
            }
            parts.sort_unstable();
            seen.insert(parts);
        }
        seen.len()
    }

    #[test]
    fn generation() {
        assert_eq!(generate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = generate_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(generate_partitions(7).len(), 15);
        for n in 1..=10 {
            assert_eq!(generate_partitions(n).len(), brute_force_count(n));
        }
        // generation order agrees with the Ord impl
        let v = generate_partitions(6);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn z_and_class_sizes() {
        assert_eq!(z_aut_class(&pt("1")), (1.into(), 1.into(), 1.into()));
        assert_eq!(z_aut_class(&pt("3,2,2,1")), (24.into(), 2.into(), 1680.into()));
        let (z, _, c) = z_aut_class(&pt("2,2"));
        assert_eq!((z, c), (8.into(), 3.into()));
    }

    #[test]
    fn classes_partition_the_group() {
        for n in 1..=9 {
            let total: BigInt = generate_partitions(n).iter().map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn modifications() {
        assert_eq!(pt("3,2").down_kl(3, 2).unwrap(), pt("4"));
        assert_eq!(pt("4").up_kl(1, 2).unwrap(), pt("2,1"));
        assert_eq!(pt("2,1").down_k(1).unwrap(), pt("2"));
        assert_eq!(pt("2,2").down_kl(2, 2).unwrap(), pt("3"));
        assert!(matches!(pt("2,1").down_kl(2, 2), Err(Error::MissingPart { .. })));
        assert!(matches!(pt("3").up_kl(1, 2), Err(Error::MissingPart { .. })));
        assert!(matches!(pt("3").down_k(2), Err(Error::MissingPart { .. })));
    }

    #[test]
    fn hook_products() {
        let a = |c: &[i64]| AlphaPoly::from_ints(c);
        assert_eq!(pt("1").hooks(), (a(&[1]), a(&[0, 1]), a(&[0, 1])));
        assert_eq!(pt("2").hooks(), (a(&[1, 1]), a(&[0, 0, 2]), a(&[0, 0, 2, 2])));
        assert_eq!(pt("1,1").hooks(), (a(&[2]), a(&[0, 1, 1]), a(&[0, 2, 2])));
    }

    #[test]
    fn box_statistics() {
        let b = pt("3,1").boxes();
        assert_eq!(b[0], BoxStats { row: 1, col: 1, arm: 2, leg: 1, coarm: 0, coleg: 0 });
        assert_eq!(b[3], BoxStats { row: 2, col: 1, arm: 0, leg: 0, coarm: 0, coleg: 1 });
    }

    #[test]
    fn eigenvalues_and_top_character() {
        let a = |c: &[i64]| AlphaPoly::from_ints(c);
        assert_eq!(pt("2").eigenvalue(), a(&[0, 1]));
        assert_eq!(pt("1,1").eigenvalue(), a(&[-1]));
        assert_eq!(pt("2,2,2").eigenvalue(), a(&[-6, 3]));
        assert_eq!(pt("3,1,1,1").eigenvalue(), a(&[-6, 3]));
        assert_eq!(pt("1").theta_top(), a(&[1]));
        assert_eq!(pt("2").theta_top(), a(&[0, 1]));
        assert_eq!(pt("1,1").theta_top(), a(&[-1]));
        assert_eq!(pt("2,1").theta_top(), a(&[0, -1]));
    }

    #[test]
    fn eigenvalue_matches_box_sum() {
        for n in 1..=8 {
            for p in generate_partitions(n) {
                let sum = p
                    .boxes()
                    .iter()
                    .fold(AlphaPoly::zero(), |acc, b| &acc + &AlphaPoly::linear(-(b.coleg as i64), b.coarm as i64));
                assert_eq!(p.eigenvalue(), sum);
            }
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(pt("-"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance() {
        assert!(pt("3,1").dominates(&pt("2,2")));
        assert!(!pt("2,2,2").dominates(&pt("3,1,1,1")));
        assert!(!pt("3,1,1,1").dominates(&pt("2,2,2")));
        assert!(pt("2,2").dominates(&pt("2,2")));
    }

    fn any_partition() -> impl Strategy<Value = Partition> {
        (1usize..=10, any::<prop::sample::Index>()).prop_map(|(n, i)| {
            let all = generate_partitions(n);
            all[i.index(all.len())].clone()
        })
    }

    proptest! {
        #[test]
        fn conjugation_duality(p in any_partition()) {
            // e(λ) = α·A − B  ⇒  e(λ′) = α·B − A
            let e = p.eigenvalue();
            let e_conj = p.conjugate().eigenvalue();
            prop_assert_eq!(e_conj.coeff(1), -e.coeff(0));
            prop_assert_eq!(e_conj.coeff(0), -e.coeff(1));
        }

        #[test]
        fn modification_round_trips(p in any_partition()) {
            for k in p.distinct_parts() {
                if k >= 2 {
                    prop_assert_eq!(p.down_k(k).unwrap().up_k(k - 1).unwrap(), p.clone());
                }
                for l in p.distinct_parts() {
                    if l != k || p.multiplicity(k) >= 2 {
                        let q = p.down_kl(k, l).unwrap();
                        prop_assert_eq!(q.n(), p.n() - 1);
                        // splitting the merged part back restores λ
                        let merged = k + l - 1;
                        let mut rest = q.parts().to_vec();
                        let pos = rest.iter().position(|&x| x == merged).unwrap();
                        rest.remove(pos);
                        rest.extend([k, l]);
                        prop_assert_eq!(Partition::new(rest).unwrap(), p.clone());
                    }
                }
            }
            if p.parts()[0] >= 3 {
                let top = p.parts()[0];
                for d in 1..top - 1 {
                    let q = p.up_kl(top - 1 - d, d).unwrap();
                    prop_assert_eq!(q.n(), p.n() - 1);
                    prop_assert_eq!(q.len(), p.len() + 1);
                }
            }
        }

        #[test]
        fn hook_degrees(p in any_partition()) {
            let (h, hp, j) = p.hooks();
            // boxes ending a row contribute constant factors to h
            prop_assert_eq!(h.degree(), Some(p.n() - p.len()));
            prop_assert_eq!(hp.degree(), Some(p.n()));
            prop_assert_eq!(j.degree(), Some(2 * p.n() - p.len()));
            prop_assert!(j.leading_coeff().unwrap() > &crate::algebra::rat(0));
            prop_assert!(h.coeffs().iter().chain(hp.coeffs()).all(|c| c.is_integer() && c >= &crate::algebra::rat(0)));
        }
    }
}
