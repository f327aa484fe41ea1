//! λ-graphs, good matchings and the weight statistic.
//!
//! Vertices of a graph on 2n vertices are encoded 0-based: the unhatted
//! vertex k is `2k − 2` and the hatted vertex k̂ is `2k − 1`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlphaPoly;
use crate::error::{Error, Result};
use crate::limits;
use crate::partition::Partition;

pub fn is_hatted(v: usize) -> bool {
    v % 2 == 1
}

/// `3` or `3^` for a vertex.
pub fn vertex_label(v: usize) -> String {
    let k = v / 2 + 1;
    if is_hatted(v) {
        format!("{k}^")
    } else {
        k.to_string()
    }
}

/// A perfect matching stored as a fixed-point-free involution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        let len = partner.len();
        if len % 2 != 0 {
            return Err(Error::InvalidArgument("matching needs an even vertex count".into()));
        }
        for (v, &p) in partner.iter().enumerate() {
            if p >= len || p == v || partner[p] != v {
                return Err(Error::InvalidArgument(format!("vertex {} is not properly matched", vertex_label(v))));
            }
        }
        Ok(Matching { partner })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(u, v) in pairs {
            if u >= 2 * n || v >= 2 * n || partner[u] != usize::MAX || partner[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("bad pair {}-{}", vertex_label(u), vertex_label(v))));
            }
            partner[u] = v;
            partner[v] = u;
        }
        Self::from_partner(partner)
    }

    /// Number of edges, i.e. n.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Edges `(u, v)` with u < v, ordered by u.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner.iter().enumerate().filter(|&(u, &v)| u < v).map(|(u, &v)| (u, v)).collect()
    }

    /// Every edge joins an unhatted and a hatted vertex.
    pub fn is_bipartite(&self) -> bool {
        self.partner.iter().enumerate().all(|(u, &v)| is_hatted(u) != is_hatted(v))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> =
            self.pairs().into_iter().map(|(u, v)| format!("{}-{}", vertex_label(u), vertex_label(v))).collect();
        f.write_str(&s.join(","))
    }
}

/// Cycle type of m1 ∪ m2: each alternating cycle of length 2k contributes a
/// part k.
pub fn union_cycle_type(m1: &Matching, m2: &Matching) -> Result<Partition> {
    if m1.partner.len() != m2.partner.len() {
        return Err(Error::DegreeMismatch(m1.n(), m2.n()));
    }
    Ok(Partition::from_parts_lossy(cycles(&m1.partner, &m2.partner).into_iter().map(|c| c.len() / 2).collect()))
}

/// Alternating cycles of two involutions on the same (possibly partial)
/// vertex set; `usize::MAX` marks absent vertices. Each cycle starts at its
/// smallest vertex and leaves it along `first`.
fn cycles(first: &[usize], second: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; first.len()];
    let mut out = Vec::new();
    for start in 0..first.len() {
        if seen[start] || first[start] == usize::MAX {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = start;
        let mut use_first = true;
        loop {
            seen[v] = true;
            cyc.push(v);
            v = if use_first { first[v] } else { second[v] };
            use_first = !use_first;
            if v == start && use_first {
                break;
            }
        }
        out.push(cyc);
    }
    out
}

/// Two perfect matchings whose union has cycle type λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaGraph {
    lambda: Partition,
    gray: Matching,
    black: Matching,
}

/// Result of [`LambdaGraph::reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: LambdaGraph,
    pub delta: Matching,
    pub case: ReductionCase,
    /// new label of each old vertex; `None` for the two removed ones
    pub relabel: Vec<Option<usize>>,
}

/// Which branch of the reduction applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ReductionCase {
    /// same cycle, vertices of the same kind: λ↓(λ_i)
    SameCycleOddGap = 1,
    /// same cycle, opposite kinds: two cycles split off
    SameCycleEvenGap = 2,
    /// different cycles: λ↓(λ_i, λ_j)
    DifferentCycles = 3,
}

impl LambdaGraph {
    /// The canonically labelled λ-graph: cycle i carries s+1, ŝ+1, s+2, …
    /// with s = λ_1 + … + λ_{i−1}, gray edges {k, k̂} and black edges
    /// {k̂, k+1} closing back to s+1.
    pub fn build_canonical(lambda: &Partition) -> Self {
        let n = lambda.n();
        let gray = (0..2 * n).map(|v| v ^ 1).collect();
        let mut black = vec![0; 2 * n];
        let mut s = 0;
        for &p in lambda.parts() {
            for k in 0..p {
                let hat = 2 * (s + k) + 1;
                let next = 2 * (s + (k + 1) % p);
                black[hat] = next;
                black[next] = hat;
            }
            s += p;
        }
        LambdaGraph { lambda: lambda.clone(), gray: Matching { partner: gray }, black: Matching { partner: black } }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn gray(&self) -> &Matching {
        &self.gray
    }

    pub fn black(&self) -> &Matching {
        &self.black
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// Both gray ∪ δ and black ∪ δ are a single 2n-cycle.
    pub fn is_good(&self, delta: &Matching) -> bool {
        let n = self.n();
        delta.n() == n
            && cycles(&self.gray.partner, &delta.partner).len() == 1
            && cycles(&self.black.partner, &delta.partner).len() == 1
    }

    /// Removes `a` and its δ-partner `b`, joining their gray neighbours by a
    /// gray edge and their black neighbours by a black edge, then relabels
    /// canonically: cycles by length (descending, ties by smallest old
    /// vertex), each started at its smallest old vertex (smallest unhatted
    /// one when a and b have opposite kinds, which keeps every vertex's kind)
    /// and walked gray edge first.
    pub fn reduce(&self, delta: &Matching, a: usize) -> Result<Reduction> {
        let size = self.gray.partner.len();
        if delta.partner.len() != size || a >= size {
            return Err(Error::InvalidArgument("matching does not fit the graph".into()));
        }
        let b = delta.partner[a];
        if self.gray.partner[a] == b || self.black.partner[a] == b {
            return Err(Error::AdjacentPair(vertex_label(a), vertex_label(b)));
        }
        let old_cycles = cycles(&self.gray.partner, &self.black.partner);
        let cycle_of = |v: usize| old_cycles.iter().position(|c| c.contains(&v)).expect("vertex on a cycle");
        let case = match (cycle_of(a) == cycle_of(b), is_hatted(a) == is_hatted(b)) {
            (true, true) => ReductionCase::SameCycleOddGap,
            (true, false) => ReductionCase::SameCycleEvenGap,
            (false, _) => ReductionCase::DifferentCycles,
        };
        let preserve_kinds = is_hatted(a) != is_hatted(b);

        let mut gray = self.gray.partner.clone();
        let mut black = self.black.partner.clone();
        let mut dl = delta.partner.clone();
        let (a1, b1) = (gray[a], gray[b]);
        let (a2, b2) = (black[a], black[b]);
        gray[a1] = b1;
        gray[b1] = a1;
        black[a2] = b2;
        black[b2] = a2;
        for v in [a, b] {
            gray[v] = usize::MAX;
            black[v] = usize::MAX;
            dl[v] = usize::MAX;
        }

        let mut cyc = cycles(&gray, &black);
        cyc.sort_by(|x, y| match y.len().cmp(&x.len()) {
            Ordering::Equal => x[0].cmp(&y[0]),
            o => o,
        });
        let mut relabel = vec![usize::MAX; size];
        let mut offset = 0;
        for c in &cyc {
            let start = if preserve_kinds {
                *c.iter().filter(|&&v| !is_hatted(v)).min().expect("alternating cycle has an unhatted vertex")
            } else {
                c[0]
            };
            let mut v = start;
            for pos in 0..c.len() {
                relabel[v] = offset + pos;
                v = if pos % 2 == 0 { gray[v] } else { black[v] };
            }
            debug_assert_eq!(v, start);
            offset += c.len();
        }
        let lambda = Partition::from_parts_lossy(cyc.iter().map(|c| c.len() / 2).collect());
        let graph = LambdaGraph::build_canonical(&lambda);
        let mut new_delta = vec![0; size - 2];
        for v in 0..size {
            if dl[v] != usize::MAX {
                new_delta[relabel[v]] = relabel[dl[v]];
            }
        }
        let new_delta = Matching { partner: new_delta };
        debug_assert!(relabel_is_canonical(&graph, &gray, &black, &relabel));
        let relabel = relabel.into_iter().map(|v| (v != usize::MAX).then_some(v)).collect();
        Ok(Reduction { graph, delta: new_delta, case, relabel })
    }
}

fn relabel_is_canonical(g: &LambdaGraph, gray: &[usize], black: &[usize], relabel: &[usize]) -> bool {
    (0..gray.len()).filter(|&v| gray[v] != usize::MAX).all(|v| {
        g.gray.partner[relabel[v]] == relabel[gray[v]] && g.black.partner[relabel[v]] == relabel[black[v]]
    })
}

/// Good matchings of the canonical λ-graph, sorted by partner array.
/// `prune` cuts partial matchings that already close a cycle with the gray
/// or black edges; without it all (2n−1)!! matchings are filtered.
pub fn enumerate_good_matchings(lambda: &Partition, prune: bool) -> Result<Vec<Matching>> {
    let n = lambda.n();
    limits::check_degree(n)?;
    if n == 0 {
        return Ok(vec![]);
    }
    let g = LambdaGraph::build_canonical(lambda);
    let mut out: Vec<Matching> = (1..2 * n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut st = Search::new(&g);
            let mut found = Vec::new();
            if st.try_link(0, v, prune) {
                st.extend(prune, &g, &mut found);
            }
            found
        })
        .collect();
    out.sort();
    Ok(out)
}

struct Search {
    partner: Vec<usize>,
    /// other end of the gray/black alternating path through each unmatched vertex
    end_g: Vec<usize>,
    end_b: Vec<usize>,
    matched: usize,
}

impl Search {
    fn new(g: &LambdaGraph) -> Self {
        Search {
            partner: vec![usize::MAX; g.gray.partner.len()],
            end_g: g.gray.partner.clone(),
            end_b: g.black.partner.clone(),
            matched: 0,
        }
    }

    /// Adds {u, v}; returns false (and changes nothing) when pruning rejects it.
    fn try_link(&mut self, u: usize, v: usize, prune: bool) -> bool {
        let last = self.matched + 2 == self.partner.len();
        if prune && !last && (self.end_g[u] == v || self.end_b[u] == v) {
            return false;
        }
        self.partner[u] = v;
        self.partner[v] = u;
        self.matched += 2;
        if prune {
            for ends in [&mut self.end_g, &mut self.end_b] {
                let (x, y) = (ends[u], ends[v]);
                ends[x] = y;
                ends[y] = x;
            }
        }
        true
    }

    fn unlink(&mut self, u: usize, v: usize, prune: bool) {
        if prune {
            // the path ends x, y still point at each other; restore them to u, v
            for ends in [&mut self.end_g, &mut self.end_b] {
                let (x, y) = (ends[u], ends[v]);
                ends[x] = u;
                ends[y] = v;
            }
        }
        self.partner[u] = usize::MAX;
        self.partner[v] = usize::MAX;
        self.matched -= 2;
    }

    fn extend(&mut self, prune: bool, g: &LambdaGraph, found: &mut Vec<Matching>) {
        let Some(u) = self.partner.iter().position(|&p| p == usize::MAX) else {
            let m = Matching { partner: self.partner.clone() };
            if prune || g.is_good(&m) {
                debug_assert!(g.is_good(&m));
                found.push(m);
            }
            return;
        };
        for v in u + 1..self.partner.len() {
            if self.partner[v] != usize::MAX {
                continue;
            }
            if self.try_link(u, v, prune) {
                self.extend(prune, g, found);
                self.unlink(u, v, prune);
            }
        }
    }
}

/// wt_λ(δ): reduce along vertex 1 until n = 1, counting the steps whose
/// δ-partner of vertex 1 is unhatted.
pub fn weight(lambda: &Partition, delta: &Matching) -> Result<usize> {
    let mut g = LambdaGraph::build_canonical(lambda);
    if !g.is_good(delta) {
        return Err(Error::NotGoodMatching(lambda.to_string()));
    }
    let mut d = delta.clone();
    let mut wt = 0;
    while g.n() > 1 {
        let v = d.partner[0];
        if !is_hatted(v) {
            wt += 1;
        }
        let r = g.reduce(&d, 0)?;
        g = r.graph;
        d = r.delta;
    }
    Ok(wt)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedMatching {
    pub matching: Matching,
    pub weight: usize,
    pub bipartite: bool,
}

impl Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// 𝒢(λ) with weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedMatchingSet {
    pub lambda: Partition,
    pub entries: Vec<WeightedMatching>,
}

impl WeightedMatchingSet {
    pub fn bipartite_count(&self) -> usize {
        self.entries.iter().filter(|e| e.bipartite).count()
    }

    /// Σ_δ β^{wt(δ)} as a polynomial in β.
    pub fn distribution(&self) -> AlphaPoly {
        let mut counts = Vec::new();
        for e in &self.entries {
            if counts.len() <= e.weight {
                counts.resize(e.weight + 1, 0i64);
            }
            counts[e.weight] += 1;
        }
        AlphaPoly::from_ints(&counts)
    }
}

pub fn enumerate_good(lambda: &Partition) -> Result<WeightedMatchingSet> {
    let entries = enumerate_good_matchings(lambda, true)?
        .into_par_iter()
        .map(|m| {
            let weight = weight(lambda, &m)?;
            let bipartite = m.is_bipartite();
            Ok(WeightedMatching { matching: m, weight, bipartite })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightedMatchingSet { lambda: lambda.clone(), entries })
}

/// Σ_{δ∈𝒢(λ)} β^{wt_λ(δ)}.
pub fn weight_distribution(lambda: &Partition) -> Result<AlphaPoly> {
    Ok(enumerate_good(lambda)?.distribution())
}

/// (|𝒢(λ)|, #bipartite), cached.
pub fn good_counts(lambda: &Partition) -> Result<(u64, u64)> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, (u64, u64)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&c) = cache.lock().expect("cache lock").get(lambda) {
        return Ok(c);
    }
    let all = enumerate_good_matchings(lambda, true)?;
    let c = (all.len() as u64, all.iter().filter(|m| m.is_bipartite()).count() as u64);
    cache.lock().expect("cache lock").insert(lambda.clone(), c);
    Ok(c)
}

/// One counted group of the split of 𝒢(λ) by the partner of a pivot vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub description: String,
    pub enumerated: u64,
    pub predicted: u64,
}

impl CountCheck {
    pub fn passed(&self) -> bool {
        self.enumerated == self.predicted
    }
}

/// Splits 𝒢(λ) by the δ-partner of the first vertex of cycle `pos` and
/// compares each group, and the totals b̃ and c, with the counts for the
/// reduced partitions.
pub fn comb_recurrence_checks(lambda: &Partition, pos: usize) -> Result<Vec<CountCheck>> {
    let parts = lambda.parts();
    if lambda.n() < 2 || pos >= parts.len() {
        return Err(Error::InvalidArgument(format!("no recurrence for {lambda} at position {pos}")));
    }
    let k = parts[pos];
    let start: usize = parts[..pos].iter().sum();
    let pivot = 2 * start;
    let all = enumerate_good_matchings(lambda, true)?;
    let mut by_partner: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
    for m in &all {
        let e = by_partner.entry(m.partner[pivot]).or_default();
        e.0 += 1;
        e.1 += m.is_bipartite() as u64;
    }
    let group = |v: usize| by_partner.get(&v).copied().unwrap_or((0, 0));
    let mut checks = Vec::new();
    let mut push = |description: String, enumerated: u64, predicted: u64| {
        checks.push(CountCheck { description, enumerated, predicted });
    };
    let (mut b_total, mut c_total) = (0, 0);

    // case 1: v = d, d ∈ 2..=k
    if k >= 2 {
        let target = lambda.down_k(k)?;
        let (b, _) = good_counts(&target)?;
        for d in 2..=k {
            let v = 2 * (start + d - 1);
            let (gb, gc) = group(v);
            push(format!("{lambda}: v={} → {target}", vertex_label(v)), gb, b);
            push(format!("{lambda}: v={} bipartite", vertex_label(v)), gc, 0);
        }
        b_total += (k as u64 - 1) * b;
    }
    // case 2: v = d̂, d ∈ 2..k−1
    for d in 2..k {
        let target = lambda.up_kl(k - d, d - 1)?;
        let (b, c) = good_counts(&target)?;
        let v = 2 * (start + d - 1) + 1;
        let (gb, gc) = group(v);
        push(format!("{lambda}: v={} → {target}", vertex_label(v)), gb, b);
        push(format!("{lambda}: v={} bipartite", vertex_label(v)), gc, c);
        b_total += b;
        c_total += c;
    }
    // case 3: v on another cycle
    let mut other_start = 0;
    for (j, &pj) in parts.iter().enumerate() {
        if j != pos {
            let target = lambda.down_kl(k, pj)?;
            let (b, c) = good_counts(&target)?;
            for t in 0..2 * pj {
                let v = 2 * other_start + t;
                let (gb, gc) = group(v);
                push(format!("{lambda}: v={} → {target}", vertex_label(v)), gb, b);
                push(format!("{lambda}: v={} bipartite", vertex_label(v)), gc, if is_hatted(v) { c } else { 0 });
            }
            b_total += 2 * pj as u64 * b;
            c_total += pj as u64 * c;
        }
        other_start += pj;
    }
    let (b, c) = (all.len() as u64, all.iter().filter(|m| m.is_bipartite()).count() as u64);
    push(format!("b̃^{lambda} total (part {k})"), b, b_total);
    push(format!("c^{lambda} total (part {k})"), c, c_total);
    Ok(checks)
}

/// Shares a cache of weighted sets between callers.
pub fn enumerate_good_cached(lambda: &Partition) -> Result<Arc<WeightedMatchingSet>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<WeightedMatchingSet>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().expect("cache lock").get(lambda) {
        return Ok(s.clone());
    }
    let s = Arc::new(enumerate_good(lambda)?);
    Ok(cache.lock().expect("cache lock").entry(lambda.clone()).or_insert(s).clone())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::a_nn_recurrence;
    use crate::partition::generate_partitions;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// 1-based vertex: `k` unhatted or `k^` hatted.
    fn vx(s: &str) -> usize {
        match s.strip_suffix('^') {
            Some(k) => 2 * k.parse::<usize>().unwrap() - 1,
            None => 2 * s.parse::<usize>().unwrap() - 2,
        }
    }

    fn matching(n: usize, pairs: &[(&str, &str)]) -> Matching {
        Matching::from_pairs(n, &pairs.iter().map(|(a, b)| (vx(a), vx(b))).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn canonical_graphs() {
        let g = LambdaGraph::build_canonical(&pt("3,2,2,1"));
        assert_eq!(union_cycle_type(g.gray(), g.black()).unwrap(), pt("3,2,2,1"));
        let g1 = LambdaGraph::build_canonical(&pt("1"));
        assert_eq!(g1.gray(), g1.black());
        let g3 = LambdaGraph::build_canonical(&pt("3"));
        assert_eq!(g3.black().partner(vx("1^")), vx("2"));
        assert_eq!(g3.black().partner(vx("3^")), vx("1"));
        for n in 1..=6 {
            for l in generate_partitions(n) {
                let g = LambdaGraph::build_canonical(&l);
                assert_eq!(union_cycle_type(g.gray(), g.black()).unwrap(), l);
                assert!((0..n).all(|k| g.gray().partner(2 * k) == 2 * k + 1));
            }
        }
    }

    #[test]
    fn cycle_types() {
        let m = matching(3, &[("1", "2^"), ("2", "3^"), ("3", "1^")]);
        assert_eq!(union_cycle_type(&m, &m).unwrap(), pt("1,1,1"));
        let g = LambdaGraph::build_canonical(&pt("3"));
        assert_eq!(union_cycle_type(g.gray(), &m).unwrap(), pt("3"));
        assert!(Matching::from_partner(vec![0, 1]).is_err());
        assert!(Matching::from_partner(vec![1, 2, 0]).is_err());
    }

    #[test]
    fn small_enumerations() {
        let counts = |s: &str| {
            let all = enumerate_good_matchings(&pt(s), true).unwrap();
            (all.len(), all.iter().filter(|m| m.is_bipartite()).count())
        };
        assert_eq!(counts("1"), (1, 1));
        assert_eq!(counts("2"), (1, 0));
        assert_eq!(counts("1,1"), (2, 1));
        assert_eq!(counts("3"), (4, 1));
    }

    #[test]
    fn pruning_is_exhaustive() {
        for n in 1..=6 {
            for l in generate_partitions(n) {
                assert_eq!(enumerate_good_matchings(&l, true).unwrap(), enumerate_good_matchings(&l, false).unwrap(), "λ={l}");
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let g3 = LambdaGraph::build_canonical(&pt("3"));
        let d = matching(3, &[("1", "2"), ("1^", "3"), ("2^", "3^")]);
        let r = g3.reduce(&d, vx("1")).unwrap();
        assert_eq!(r.graph.lambda(), &pt("2"));
        assert_eq!(r.case, ReductionCase::SameCycleOddGap);

        let d = matching(3, &[("1", "2^"), ("1^", "3"), ("2", "3^")]);
        let r = g3.reduce(&d, vx("1")).unwrap();
        assert_eq!(r.graph.lambda(), &pt("1,1"));
        assert_eq!(r.case, ReductionCase::SameCycleEvenGap);

        let g21 = LambdaGraph::build_canonical(&pt("2,1"));
        let d = matching(3, &[("1", "3"), ("1^", "2^"), ("2", "3^")]);
        let r = g21.reduce(&d, vx("1")).unwrap();
        assert_eq!(r.graph.lambda(), &pt("2"));
        assert_eq!(r.case, ReductionCase::DifferentCycles);

        let d = matching(3, &[("1", "1^"), ("2", "3"), ("2^", "3^")]);
        assert!(matches!(g3.reduce(&d, vx("1")), Err(Error::AdjacentPair(..))));
    }

    #[test]
    fn reduction_soundness() {
        for n in 2..=5 {
            for l in generate_partitions(n) {
                let g = LambdaGraph::build_canonical(&l);
                for d in enumerate_good_matchings(&l, true).unwrap() {
                    for a in 0..2 * n {
                        let b = d.partner(a);
                        let r = g.reduce(&d, a).unwrap();
                        assert_eq!(r.graph.n(), n - 1);
                        assert!(r.graph.is_good(&r.delta), "λ={l} δ={d} a={a}");
                        if is_hatted(a) != is_hatted(b) {
                            for (old, new) in r.relabel.iter().enumerate() {
                                if let Some(new) = new {
                                    assert_eq!(is_hatted(old), is_hatted(*new));
                                }
                            }
                            assert_eq!(r.delta.is_bipartite(), d.is_bipartite());
                        }
                        let (i_same, kinds_same) = (r.case != ReductionCase::DifferentCycles, is_hatted(a) == is_hatted(b));
                        let expect = match (i_same, kinds_same) {
                            (true, true) => l.down_k(part_of(&l, a)).unwrap(),
                            (true, false) => {
                                // 2e vertices strictly between a and b going forward
                                let k = part_of(&l, a);
                                let gap = (b + 2 * k - a - 1) % (2 * k);
                                l.up_kl(k - 1 - gap / 2, gap / 2).unwrap()
                            }
                            (false, _) => l.down_kl(part_of(&l, a), part_of(&l, b)).unwrap(),
                        };
                        assert_eq!(r.graph.lambda(), &expect);
                    }
                }
            }
        }
    }

    /// Size of the canonical cycle containing vertex `v`.
    fn part_of(l: &Partition, v: usize) -> usize {
        let mut s = 0;
        for &p in l.parts() {
            s += p;
            if v < 2 * s {
                return p;
            }
        }
        unreachable!()
    }

    #[test]
    fn weights_of_small_graphs() {
        let one = enumerate_good(&pt("1")).unwrap();
        assert_eq!(one.entries.len(), 1);
        assert_eq!(one.entries[0].weight, 0);
        let three = enumerate_good(&pt("3")).unwrap();
        let mut w: Vec<usize> = three.entries.iter().filter(|e| !e.bipartite).map(|e| e.weight).collect();
        w.sort();
        assert_eq!(w, vec![1, 2, 2]);
        assert_eq!(three.entries.iter().find(|e| e.bipartite).unwrap().weight, 0);
        assert_eq!(three.distribution(), AlphaPoly::from_ints(&[1, 1, 2]));
        assert_eq!(weight_distribution(&pt("2")).unwrap(), AlphaPoly::from_ints(&[0, 1]));
        assert_eq!(weight_distribution(&pt("1,1")).unwrap(), AlphaPoly::from_ints(&[1, 1]));
        let g = LambdaGraph::build_canonical(&pt("3"));
        let bad = matching(3, &[("1", "1^"), ("2", "2^"), ("3", "3^")]);
        assert!(!g.is_good(&bad));
        assert!(matches!(weight(&pt("3"), &bad), Err(Error::NotGoodMatching(_))));
    }

    #[test]
    fn matchings_jack_small() {
        for n in 1..=5 {
            for l in generate_partitions(n) {
                let set = enumerate_good(&l).unwrap();
                assert_eq!(set.distribution(), a_nn_recurrence(&l).to_beta(), "λ={l}");
                for e in &set.entries {
                    assert_eq!(e.weight == 0, e.bipartite);
                    assert!(e.weight < n);
                }
            }
        }
    }

    #[test]
    fn comb_recurrences() {
        for n in 2..=6 {
            for l in generate_partitions(n) {
                for pos in 0..l.len() {
                    for c in comb_recurrence_checks(&l, pos).unwrap() {
                        assert!(c.passed(), "{c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn pair_format() {
        let m = matching(2, &[("1", "2"), ("1^", "2^")]);
        assert_eq!(m.to_string(), "1-2,1^-2^");
        assert_eq!(vertex_label(vx("3^")), "3^");
    }

    #[test]
    fn degree_bound() {
        assert!(matches!(
            enumerate_good_matchings(&Partition::row(limits::max_degree() + 1), true),
            Err(Error::DegreeTooLarge { .. })
        ));
    }
}
