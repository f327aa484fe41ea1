//! Verification suites and rendering of results as text, JSON or CSV.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rat, AlphaPoly, BigRational, RatFunc};
use crate::connection::{self, a_nn_recurrence, CoeffResult};
use crate::error::{Error, Result};
use crate::jack::{inner_product, jack_table, JackTable};
use crate::limits;
use crate::matchings::{self, WeightedMatching};
use crate::partition::{factorial, generate_partitions, Partition};
use crate::psum::PSumVector;

/// Descending form with superscript exponents, e.g. `2β²+β+1`.
pub fn pretty(p: &AlphaPoly, var: &str) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if k == 0 || mag != rat(1) {
            write!(out, "{mag}").expect("write to string");
        }
        if k > 0 {
            out.push_str(var);
        }
        if k > 1 {
            out.extend(k.to_string().bytes().map(|b| SUP[(b - b'0') as usize]));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

/// Something that can be written out in the three formats.
pub trait Emit: Serialize {
    const KIND: &'static str;

    fn text(&self) -> String;

    fn csv(&self) -> Result<String> {
        Err(Error::UnsupportedFormat { format: "csv".into(), payload: Self::KIND })
    }

    fn json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.text()),
            Format::Json => self.json(),
            Format::Csv => self.csv(),
        }
    }
}

/// Renders `payload` to `path`, or to stdout when no path is given.
pub fn emit<T: Emit>(payload: &T, format: Format, path: Option<&Path>) -> Result<()> {
    let s = payload.render(format)?;
    match path {
        Some(p) => std::fs::write(p, s)?,
        None => std::io::stdout().lock().write_all(s.as_bytes())?,
    }
    Ok(())
}

fn csv_string<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Partitions of n with their class constants.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionTable {
    pub n: usize,
    pub rows: Vec<PartitionRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionRow {
    pub partition: Partition,
    pub length: usize,
    pub z: String,
    pub aut: String,
    pub class_size: String,
}

impl PartitionTable {
    pub fn new(n: usize) -> Self {
        let rows = generate_partitions(n)
            .into_iter()
            .map(|p| PartitionRow {
                length: p.len(),
                z: p.z().to_string(),
                aut: p.aut().to_string(),
                class_size: p.class_size().to_string(),
                partition: p,
            })
            .collect();
        PartitionTable { n, rows }
    }
}

impl Emit for PartitionTable {
    const KIND: &'static str = "partitions";

    fn text(&self) -> String {
        let mut s = format!("{:<16} {:>3} {:>10} {:>10} {:>10}\n", "partition", "len", "z", "aut", "class");
        for r in &self.rows {
            writeln!(s, "{:<16} {:>3} {:>10} {:>10} {:>10}", r.partition.to_string(), r.length, r.z, r.aut, r.class_size)
                .expect("write to string");
        }
        s
    }

    fn csv(&self) -> Result<String> {
        csv_string(&self.rows)
    }
}

/// One row θ^λ_• of the character table.
#[derive(Clone, Debug, Serialize)]
pub struct JackRow {
    pub lambda: Partition,
    pub theta: PSumVector,
}

#[derive(Serialize)]
struct ThetaCsv<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    theta: String,
}

impl Emit for JackRow {
    const KIND: &'static str = "jack row";

    fn text(&self) -> String {
        let mut s = format!("J_{} in power sums:\n", self.lambda);
        for (mu, c) in self.theta.terms() {
            writeln!(s, "  {:<14} {}", mu.to_string(), c).expect("write to string");
        }
        s
    }

    fn csv(&self) -> Result<String> {
        csv_string(self.theta.terms().map(|(mu, c)| ThetaCsv { lambda: &self.lambda, mu, theta: c.to_string() }))
    }
}

impl Emit for JackTable {
    const KIND: &'static str = "jack table";

    fn text(&self) -> String {
        self.rows()
            .map(|(l, r)| JackRow { lambda: l.clone(), theta: r.clone() }.text())
            .collect::<Vec<_>>()
            .join("")
    }

    fn csv(&self) -> Result<String> {
        csv_string(
            self.rows().flat_map(|(l, r)| r.terms().map(move |(mu, c)| ThetaCsv { lambda: l, mu, theta: c.to_string() })),
        )
    }
}

/// Named coefficients with their α- and β-forms.
#[derive(Clone, Debug, Serialize)]
pub struct CoeffTable {
    pub rows: Vec<CoeffRow>,
    /// show the β-form in text output
    #[serde(skip)]
    pub show_beta: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoeffRow {
    pub lambda: String,
    #[serde(flatten)]
    pub result: CoeffResult,
}

#[derive(Serialize)]
struct CoeffCsv<'a> {
    lambda: &'a str,
    alpha: String,
    beta: String,
}

impl Emit for CoeffTable {
    const KIND: &'static str = "coefficients";

    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let alpha = match r.result.value.as_polynomial() {
                Ok(p) => pretty(p, "α"),
                Err(_) => r.result.value.to_string(),
            };
            if self.show_beta {
                let beta = r.result.beta_form.as_ref().map(|b| pretty(b, "β")).unwrap_or_else(|| "-".into());
                writeln!(s, "{:<16} {:<32} {}", r.lambda, alpha, beta).expect("write to string");
            } else {
                writeln!(s, "{:<16} {}", r.lambda, alpha).expect("write to string");
            }
        }
        s
    }

    fn csv(&self) -> Result<String> {
        csv_string(self.rows.iter().map(|r| CoeffCsv {
            lambda: &r.lambda,
            alpha: r.result.value.to_string(),
            beta: r.result.beta_form.as_ref().map(|b| b.display_in("b").to_string()).unwrap_or_default(),
        }))
    }
}

/// Good matchings of a λ-graph, possibly filtered.
#[derive(Clone, Debug, Serialize)]
pub struct MatchingListing {
    pub lambda: Partition,
    pub total: usize,
    pub bipartite: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distribution: Option<AlphaPoly>,
    pub entries: Vec<WeightedMatching>,
}

#[derive(Serialize)]
struct MatchingCsv {
    matching: String,
    weight: usize,
    bipartite: bool,
}

impl Emit for MatchingListing {
    const KIND: &'static str = "matchings";

    fn text(&self) -> String {
        let mut s = format!("{}-graph: {} good matchings, {} bipartite\n", self.lambda, self.total, self.bipartite);
        if let Some(d) = &self.distribution {
            writeln!(s, "sum of beta^wt: {}", pretty(d, "β")).expect("write to string");
        }
        for e in &self.entries {
            let tag = if e.bipartite { " bipartite" } else { "" };
            writeln!(s, "{:<40} wt={}{}", e.matching.to_string(), e.weight, tag).expect("write to string");
        }
        s
    }

    fn csv(&self) -> Result<String> {
        csv_string(self.entries.iter().map(|e| MatchingCsv {
            matching: e.matching.to_string(),
            weight: e.weight,
            bipartite: e.bipartite,
        }))
    }
}

/// One comparison inside a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub description: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    fn eq<T: PartialEq + std::fmt::Display>(description: String, lhs: T, rhs: T) -> Self {
        Check { description, passed: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_range: [usize; 2],
    pub passed: bool,
    pub checks: Vec<Check>,
    /// wall time; kept out of the rendered output so reruns are byte-identical
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Serialize)]
struct CheckCsv<'a> {
    suite: &'a str,
    description: &'a str,
    passed: bool,
    lhs: &'a str,
    rhs: &'a str,
}

impl Emit for VerificationReport {
    const KIND: &'static str = "verification report";

    fn text(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let mut s = format!(
            "suite {} (n {}..={}): {} ({}/{} checks)\n",
            self.suite,
            self.n_range[0],
            self.n_range[1],
            if self.passed { "PASS" } else { "FAIL" },
            ok,
            self.checks.len()
        );
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.passed {
                writeln!(s, "{mark} {}", c.description).expect("write to string");
            } else {
                writeln!(s, "{mark} {}: {} != {}", c.description, c.lhs, c.rhs).expect("write to string");
            }
        }
        s
    }

    fn csv(&self) -> Result<String> {
        csv_string(self.checks.iter().map(|c| CheckCsv {
            suite: &self.suite,
            description: &c.description,
            passed: c.passed,
            lhs: &c.lhs,
            rhs: &c.rhs,
        }))
    }
}

pub const SUITES: [&str; 7] = ["matchings-jack", "thm-rec", "i-indep", "orthogonality", "comb-rec", "gen-coeff", "thm34"];

pub fn default_max_n(suite: &str) -> Result<usize> {
    match suite {
        "matchings-jack" | "orthogonality" | "comb-rec" => Ok(6),
        "gen-coeff" | "thm-rec" | "thm34" => Ok(5),
        "i-indep" => Ok(7),
        _ => Err(Error::UnknownSuite(suite.into())),
    }
}

/// Runs a named suite up to degree `max_n` (the suite's default when `None`).
pub fn run_suite(name: &str, max_n: Option<usize>) -> Result<VerificationReport> {
    let max_n = match max_n {
        Some(m) => m,
        None => default_max_n(name)?,
    };
    if max_n > limits::max_degree() {
        return Err(Error::DegreeTooLarge { n: max_n, bound: limits::max_degree() });
    }
    let start = Instant::now();
    let (lo, checks) = match name {
        "matchings-jack" => (1, matchings_jack(max_n)?),
        "thm-rec" => (2, thm_rec(max_n)?),
        "i-indep" => (2, i_indep(max_n)),
        "orthogonality" => (1, orthogonality(max_n)?),
        "comb-rec" => (1, comb_rec(max_n)?),
        "gen-coeff" => (1, gen_coeff(max_n)?),
        "thm34" => {
            let mut c = matchings_jack(max_n)?;
            c.extend(gen_coeff(max_n)?);
            (1, c)
        }
        _ => return Err(Error::UnknownSuite(name.into())),
    };
    Ok(VerificationReport {
        suite: name.into(),
        n_range: [lo, max_n],
        passed: checks.iter().all(|c| c.passed),
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn partitions_up_to(lo: usize, hi: usize) -> Vec<Partition> {
    (lo..=hi).flat_map(generate_partitions).collect()
}

/// Runs `f` on each item in parallel and concatenates the results in order.
fn par_checks<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<Check>> + Sync + Send) -> Result<Vec<Check>> {
    let parts = items.par_iter().map(&f).collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().flatten().collect())
}

fn matchings_jack(max_n: usize) -> Result<Vec<Check>> {
    par_checks(&partitions_up_to(1, max_n), |l| {
        let n = l.n();
        let set = matchings::enumerate_good_cached(l)?;
        let dist = set.distribution();
        let a = a_nn_recurrence(l).to_beta();
        let zero_wt = set.entries.iter().filter(|e| e.weight == 0).count();
        let pointwise = set.entries.iter().all(|e| (e.weight == 0) == e.bipartite);
        Ok(vec![
            Check::eq(format!("{l}: {}", pretty(&dist, "β")), dist.display_in("b").to_string(), a.display_in("b").to_string()),
            Check {
                description: format!("{l}: wt = 0 iff bipartite"),
                passed: pointwise,
                lhs: zero_wt.to_string(),
                rhs: set.bipartite_count().to_string(),
            },
            Check::eq(
                format!("{l}: [β^{}] = {}!", n - 1, n - 1),
                a.coeff(n - 1),
                BigRational::from_integer(factorial(n - 1)),
            ),
        ])
    })
}

fn thm_rec(max_n: usize) -> Result<Vec<Check>> {
    let pairs: Vec<(Partition, Partition)> = (1..max_n)
        .flat_map(|n| {
            let nus = generate_partitions(n);
            generate_partitions(n + 1)
                .into_iter()
                .flat_map(move |l| nus.clone().into_iter().map(move |nu| (l.clone(), nu)))
        })
        .collect();
    par_checks(&pairs, |(l, nu)| {
        let (lhs, rhs) = connection::thm_rec_sides(l, nu)?;
        Ok(vec![Check::eq(format!("λ={l} ν={nu}"), lhs, rhs)])
    })
}

fn i_indep(max_n: usize) -> Vec<Check> {
    partitions_up_to(2, max_n)
        .par_iter()
        .map(|l| {
            let b = connection::brackets_by_part(l);
            let first = &b[0].1;
            let other = b.iter().find(|(_, v)| v != first).unwrap_or(&b[0]);
            Check::eq(format!("{l}: bracket at parts {:?}", b.iter().map(|x| x.0).collect::<Vec<_>>()), first.clone(), other.1.clone())
        })
        .collect()
}

fn orthogonality(max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let t = jack_table(n)?;
        let rows: Vec<(&Partition, &PSumVector)> = t.rows().collect();
        let pairs: Vec<(usize, usize)> = (0..rows.len()).flat_map(|i| (i..rows.len()).map(move |j| (i, j))).collect();
        checks.extend(par_checks(&pairs, |&(i, j)| {
            let (l, u) = rows[i];
            let (m, v) = rows[j];
            let ip = inner_product(u, v)?;
            let want = if i == j { RatFunc::from(l.hooks().2) } else { RatFunc::zero() };
            let shown = match want.as_polynomial() {
                Ok(p) => pretty(p, "α"),
                Err(_) => want.to_string(),
            };
            Ok(vec![Check::eq(format!("<J{l},J{m}> = {shown}"), ip, want)])
        })?);
    }
    Ok(checks)
}

fn comb_rec(max_n: usize) -> Result<Vec<Check>> {
    let all = partitions_up_to(1, max_n);
    let mut checks = par_checks(&all, |l| {
        let n = l.n();
        let (b, c) = matchings::good_counts(l)?;
        let a = a_nn_recurrence(l);
        let nn = format!("{n}{n}");
        Ok(vec![
            Check::eq(format!("b̃^{l}_{nn} = {b}"), BigRational::from_integer(b.into()), a.eval(&rat(2))),
            Check::eq(format!("c^{l}_{nn} = {c}"), BigRational::from_integer(c.into()), a.eval(&rat(1))),
        ])
    })?;
    let with_pivots: Vec<(Partition, usize)> =
        partitions_up_to(2, max_n).into_iter().flat_map(|l| (0..l.len()).map(move |p| (l.clone(), p))).collect();
    checks.extend(par_checks(&with_pivots, |(l, pos)| {
        Ok(matchings::comb_recurrence_checks(l, *pos)?
            .into_iter()
            .map(|c| Check::eq(format!("{} (pivot part #{})", c.description, pos + 1), c.enumerated, c.predicted))
            .collect())
    })?);
    Ok(checks)
}

fn gen_coeff(max_n: usize) -> Result<Vec<Check>> {
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for l in 2..=3 {
            for r in 0..=2 {
                jobs.push((n, l, r));
            }
        }
    }
    par_checks(&jobs, |&(n, l, r)| {
        let all = connection::a_lr_all(n, l, r)?;
        let mut out = Vec::new();
        for (lambda, a) in &all {
            let verdict = connection::check_lr_shape(lambda, l, r, a);
            out.push(Check {
                description: format!("{lambda}: |C|·a^({l},{r}) integral, deg ≤ {}, symmetric", (n - 1) * (l - 1) + r),
                passed: verdict.is_ok(),
                lhs: a.to_string(),
                rhs: verdict.err().unwrap_or_default(),
            });
            if (l, r) == (2, 0) {
                out.push(Check::eq(format!("{lambda}: a^(2,0) = a_nn"), a.clone(), RatFunc::from(a_nn_recurrence(lambda))));
            }
        }
        Ok(out)
    })
}

/// a^λ_{nn} for every λ ⊢ n from the recurrence.
pub fn a_nn_table(n: usize) -> CoeffTable {
    CoeffTable {
        rows: generate_partitions(n)
            .into_iter()
            .map(|l| CoeffRow { lambda: l.to_string(), result: CoeffResult::from(a_nn_recurrence(&l)) })
            .collect(),
        show_beta: true,
    }
}
