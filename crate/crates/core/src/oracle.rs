//! Brute-force verifiers and parameter sweeps.
//!
//! The tabloid-space oracle works directly in the permutation module `M^λ`:
//! the Garnir relation vectors span the kernel of `M^λ → S^λ`, so a claimed
//! straightening `e_t = Σ c_s e_s` is correct iff `{t} − Σ c_s {s}` lies in
//! that span. Everything else is a sweep comparing two independent
//! computations over a parameter range.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{
    colour_semistandard_tableaux, dominates_unchecked, enumerate_standard, hook_length_count, ColourProfile,
    KlsParams, Partition, Tableau,
};
use crate::exec::Execution;
use crate::formulas::{
    check_four_reductions, d_remove_one_node, denom_add_one, denom_general_upper_bound, denom_hook,
    denom_k_2_2, denom_remove_node, denom_row_removal, denom_tableau_upper_bound, denom_truncate,
    denom_two_row, divides, divisibility_bounds, f_add_one, f_hook, f_two_row, reduce_kls, row_split,
    summary_dispatch, upper_bound_kls, Divisibility,
};
use crate::permalg::{d_of, AlgebraElement, Permutation};
use crate::rational::Rational;
use crate::seminormal::{random_chain, Engine};
use crate::specht::{SpechtModule, SpechtVector};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Tabloid space

/// A vector of `M^λ`, indexed by row-standard representatives.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TabloidVector {
    pub coords: BTreeMap<Tableau, Rational>,
}

impl TabloidVector {
    pub fn basis(t: &Tableau) -> Self {
        let mut v = TabloidVector::default();
        v.add(&t.row_standardize(), &Rational::one());
        v
    }

    pub fn add(&mut self, t: &Tableau, c: &Rational) {
        let key = t.row_standardize();
        let entry = self.coords.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// All row-standard `λ`-tableaux (tabloid representatives), sorted.
pub fn all_tabloids(lambda: &Partition) -> Vec<Tableau> {
    fn rec(lambda: &Partition, row: usize, left: Vec<usize>, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if row > lambda.len() {
            out.push(Tableau::from_rows(acc).expect("rows partition 1..=n"));
            return;
        }
        for chosen in left.iter().copied().combinations(lambda.part(row)) {
            let rest: Vec<usize> = left.iter().copied().filter(|x| !chosen.contains(x)).collect();
            acc.push(chosen);
            rec(lambda, row + 1, rest, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 1, (1..=lambda.size()).collect(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// For every tabloid `{t}`, row `i` and `k`-subset `X` of row `i+1`:
/// `{t} − (−1)^k Σ_Y {t_Y}`, where `t_Y` swaps `X` with a `k`-subset `Y`
/// of row `i`.
pub fn garnir_relation_vectors(lambda: &Partition) -> Vec<TabloidVector> {
    let mut out = Vec::new();
    for t in all_tabloids(lambda) {
        let rows = t.to_rows();
        for i in 0..rows.len().saturating_sub(1) {
            for k in 1..=rows[i + 1].len() {
                let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                for x in rows[i + 1].iter().copied().combinations(k) {
                    let mut v = TabloidVector::basis(&t);
                    for y in rows[i].iter().copied().combinations(k) {
                        let mut new_rows = rows.clone();
                        new_rows[i] = rows[i].iter().copied().filter(|e| !y.contains(e)).chain(x.iter().copied()).collect();
                        new_rows[i + 1] =
                            rows[i + 1].iter().copied().filter(|e| !x.contains(e)).chain(y.iter().copied()).collect();
                        let s = Tableau::from_rows(&new_rows).expect("swap keeps a bijection");
                        v.add(&s, &-sign.clone());
                    }
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Incremental row echelon form over `Q`, with columns indexed by tabloids.
#[derive(Debug, Default)]
pub struct RationalEchelon {
    /// pivot column → row with a 1 in that column
    rows: BTreeMap<Tableau, BTreeMap<Tableau, Rational>>,
}

impl RationalEchelon {
    pub fn new() -> Self {
        RationalEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &TabloidVector) -> BTreeMap<Tableau, Rational> {
        let mut r = v.coords.clone();
        loop {
            let Some((col, c)) = r.iter().find(|(col, _)| self.rows.contains_key(*col)).map(|(a, b)| (a.clone(), b.clone())) else {
                return r;
            };
            for (k, x) in &self.rows[&col] {
                let e = r.entry(k.clone()).or_insert_with(Rational::zero);
                *e -= &c * x;
                if e.is_zero() {
                    r.remove(k);
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &TabloidVector) -> bool {
        let r = self.reduce(v);
        let Some((pivot, c)) = r.iter().next().map(|(a, b)| (a.clone(), b.clone())) else {
            return false;
        };
        let row: BTreeMap<Tableau, Rational> = r.into_iter().map(|(k, x)| (k, x / &c)).collect();
        // keep rows fully reduced against the new pivot
        for other in self.rows.values_mut() {
            if let Some(f) = other.get(&pivot).cloned() {
                for (k, x) in &row {
                    let e = other.entry(k.clone()).or_insert_with(Rational::zero);
                    *e -= &f * x;
                    if e.is_zero() {
                        other.remove(k);
                    }
                }
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: &TabloidVector) -> bool {
        self.reduce(v).is_empty()
    }
}

/// The span of all Garnir relation vectors of `M^λ`.
pub fn garnir_span(lambda: &Partition) -> RationalEchelon {
    let mut ech = RationalEchelon::new();
    for v in garnir_relation_vectors(lambda) {
        ech.insert(&v);
    }
    ech
}

/// `#tabloids − rank(relations) = |STab(λ)|`.
pub fn basis_dimension_holds(lambda: &Partition, span: &RationalEchelon) -> bool {
    let quotient = all_tabloids(lambda).len() - span.rank();
    BigInt::from(quotient) == BigInt::from(hook_length_count(lambda))
}

/// Checks every `λ`-tableau's straightening against the Garnir span.
pub fn straightening_consistent(lambda: &Partition) -> Result<bool> {
    straightening_consistent_with(lambda, &garnir_span(lambda))
}

pub fn straightening_consistent_with(lambda: &Partition, span: &RationalEchelon) -> Result<bool> {
    let module = SpechtModule::new(lambda);
    let base = Tableau::initial_of(lambda);
    let n = lambda.size();
    for images in (1..=n).permutations(n) {
        let t = Permutation::from_one_line(&images)?.act_on_tableau(&base)?;
        let mut v = TabloidVector::basis(&t);
        for (s, c) in module.polytabloid(&t)?.iter() {
            v.add(s, &-c.clone());
        }
        if !span.contains(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Sweeps

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    GarnirSpan,
    ActionProperty,
    ChainIndependence,
    Unitriangularity,
    DElements,
    FormulaVsRecursion,
    ColourTypes,
    FourReductions,
    KlsReduction,
    Divisibility,
    Transport,
    WorkedExample,
    Dispatch,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::GarnirSpan,
        Suite::ActionProperty,
        Suite::ChainIndependence,
        Suite::Unitriangularity,
        Suite::DElements,
        Suite::FormulaVsRecursion,
        Suite::ColourTypes,
        Suite::FourReductions,
        Suite::KlsReduction,
        Suite::Divisibility,
        Suite::Transport,
        Suite::WorkedExample,
        Suite::Dispatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GarnirSpan => "garnir-span",
            Suite::ActionProperty => "action-property",
            Suite::ChainIndependence => "chain-independence",
            Suite::Unitriangularity => "unitriangularity",
            Suite::DElements => "d-elements",
            Suite::FormulaVsRecursion => "formula-vs-recursion",
            Suite::ColourTypes => "colour-types",
            Suite::FourReductions => "four-reductions",
            Suite::KlsReduction => "kls-reduction",
            Suite::Divisibility => "divisibility",
            Suite::Transport => "transport",
            Suite::WorkedExample => "worked-example",
            Suite::Dispatch => "dispatch",
        }
    }

    /// Default `max_n` when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::GarnirSpan => 5,
            Suite::ActionProperty | Suite::ChainIndependence | Suite::DElements => 6,
            Suite::Unitriangularity => 7,
            Suite::FormulaVsRecursion | Suite::ColourTypes => 8,
            Suite::Divisibility | Suite::Transport | Suite::Dispatch => 9,
            Suite::FourReductions | Suite::KlsReduction | Suite::WorkedExample => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct SweepLimits {
    pub max_n: Option<usize>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub s: Option<usize>,
    pub m: Option<usize>,
    pub seed: u64,
    pub seeds: usize,
    /// Recursion cap handed to the dispatcher.
    pub cap: usize,
    /// Largest `|ν|` the `(k,ℓ^s)` sweeps will compute by recursion.
    pub max_size: usize,
    pub exec: Execution,
}

impl Default for SweepLimits {
    fn default() -> Self {
        SweepLimits {
            max_n: None,
            k: None,
            l: None,
            s: None,
            m: None,
            seed: 0,
            seeds: 5,
            cap: 12,
            max_size: DEFAULT_KLS_MAX_SIZE,
            exec: Execution::Parallel,
        }
    }
}

/// Largest `|ν|` computed by recursion in the `(k,ℓ^s)+(m)` sweeps.
pub const DEFAULT_KLS_MAX_SIZE: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub suite: &'static str,
    pub family: &'static str,
    pub input: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub suite: &'static str,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub suite: Suite,
    pub cases: Vec<CaseRecord>,
}

impl SweepReport {
    fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skipped)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }

    pub fn summary(&self) -> SweepSummary {
        SweepSummary {
            suite: self.suite.name(),
            total: self.cases.len(),
            passed: self.passed(),
            failed: self.failed(),
            skipped: self.skipped(),
        }
    }

    /// One JSON object per case, then `{"summary": …}`.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&serde_json::to_string(c).expect("records serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&json!({ "summary": self.summary() })).expect("summary serializes"));
        out.push('\n');
        out
    }
}

/// A unit of work: `Ok(None)` passes, `Ok(Some(msg))` fails with a message.
type Check<'a> = Box<dyn Fn() -> Result<Option<String>> + Send + Sync + 'a>;

struct Case<'a> {
    family: &'static str,
    input: Value,
    check: Option<Check<'a>>,
    skip_reason: Option<String>,
}

impl<'a> Case<'a> {
    fn new(family: &'static str, input: Value, check: impl Fn() -> Result<Option<String>> + Send + Sync + 'a) -> Self {
        Case {
            family,
            input,
            check: Some(Box::new(check)),
            skip_reason: None,
        }
    }

    fn skipped(family: &'static str, input: Value, reason: String) -> Self {
        Case {
            family,
            input,
            check: None,
            skip_reason: Some(reason),
        }
    }
}

fn run_cases(suite: Suite, cases: Vec<Case<'_>>, exec: Execution) -> SweepReport {
    let records = exec.map(cases, |case| {
        let (status, detail) = match &case.check {
            None => (Status::Skipped, case.skip_reason.clone()),
            Some(check) => match check() {
                Ok(None) => (Status::Pass, None),
                Ok(Some(msg)) => (Status::Fail, Some(msg)),
                Err(e) => (Status::Fail, Some(format!("error: {e}"))),
            },
        };
        CaseRecord {
            suite: suite.name(),
            family: case.family,
            input: case.input,
            status,
            detail,
        }
    });
    SweepReport { suite, cases: records }
}

fn fail_unless(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(msg())
    }
}

fn partitions_up_to(max_n: usize) -> Vec<Partition> {
    (0..=max_n).flat_map(Partition::all_of_size).collect()
}

fn pairs_up_to(max_n: usize) -> Vec<(Partition, Partition)> {
    partitions_up_to(max_n)
        .into_iter()
        .flat_map(|nu| nu.sub_partitions().into_iter().map(move |lambda| (lambda, nu.clone())))
        .collect()
}

fn shape_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn pair_json(lambda: &Partition, nu: &Partition) -> Value {
    json!({ "lambda": lambda.parts(), "nu": nu.parts() })
}

/// Runs one verification suite.
pub fn sweep(suite: Suite, limits: &SweepLimits) -> Result<SweepReport> {
    let max_n = limits.max_n.unwrap_or_else(|| suite.default_max_n());
    let engine = Engine::new(limits.exec);
    let engine = &engine;
    let cases: Vec<Case<'_>> = match suite {
        Suite::GarnirSpan => garnir_cases(max_n),
        Suite::ActionProperty => action_cases(engine, max_n),
        Suite::ChainIndependence => chain_cases(engine, max_n, limits),
        Suite::Unitriangularity => unitriangular_cases(engine, max_n),
        Suite::DElements => d_element_cases(engine, max_n),
        Suite::FormulaVsRecursion => formula_cases(engine, max_n, limits),
        Suite::ColourTypes => colour_type_cases(engine, max_n),
        Suite::FourReductions => four_reduction_cases(engine, limits),
        Suite::KlsReduction => kls_reduction_cases(engine, limits),
        Suite::Divisibility => divisibility_cases(engine, max_n),
        Suite::Transport => transport_cases(engine, max_n),
        Suite::WorkedExample => worked_example_cases(engine),
        Suite::Dispatch => dispatch_cases(engine, max_n, limits.cap),
    };
    Ok(run_cases(suite, cases, limits.exec))
}

fn garnir_cases<'a>(max_n: usize) -> Vec<Case<'a>> {
    partitions_up_to(max_n)
        .into_iter()
        .map(|lambda| {
            Case::new("basis-theorem", shape_json(&lambda), move || {
                let span = garnir_span(&lambda);
                if !basis_dimension_holds(&lambda, &span) {
                    return Ok(Some(format!(
                        "quotient dimension {} but {} standard tableaux",
                        all_tabloids(&lambda).len() - span.rank(),
                        hook_length_count(&lambda)
                    )));
                }
                Ok(fail_unless(straightening_consistent_with(&lambda, &span)?, || {
                    "a polytabloid expansion is outside the Garnir span".into()
                }))
            })
        })
        .collect()
}

fn action_cases<'a>(engine: &'a Engine, max_n: usize) -> Vec<Case<'a>> {
    partitions_up_to(max_n)
        .into_iter()
        .filter(|l| !l.is_empty())
        .map(|lambda| {
            Case::new("action-identity", shape_json(&lambda), move || {
                let basis = engine.basis(&lambda);
                basis.all_vectors(Execution::Sequential)?;
                for s in enumerate_standard(&lambda) {
                    for i in 1..s.n() {
                        let c = basis.action_check(&s, i)?;
                        if !c.holds {
                            return Ok(Some(format!("s = {s}, i = {i}, r = {}", c.r)));
                        }
                    }
                }
                Ok(None)
            })
        })
        .collect()
}

fn chain_cases<'a>(engine: &'a Engine, max_n: usize, limits: &SweepLimits) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for lambda in partitions_up_to(max_n).into_iter().filter(|l| !l.is_empty()) {
        for k in 0..limits.seeds as u64 {
            let seed = limits.seed.wrapping_add(k);
            let lambda = lambda.clone();
            out.push(Case::new("random-chains", json!({ "shape": lambda.parts(), "seed": seed }), move || {
                let basis = engine.basis(&lambda);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for s in enumerate_standard(&lambda) {
                    let chain = random_chain(&s, &mut rng)?;
                    let along = basis.seminormal_vector_along(&s, &chain)?;
                    if along != *basis.seminormal_vector(&s)? {
                        return Ok(Some(format!("s = {s}, chain = {chain:?}")));
                    }
                }
                Ok(None)
            }));
        }
    }
    out
}

fn unitriangular_cases<'a>(engine: &'a Engine, max_n: usize) -> Vec<Case<'a>> {
    partitions_up_to(max_n)
        .into_iter()
        .filter(|l| !l.is_empty())
        .map(|lambda| {
            Case::new("dominance-support", shape_json(&lambda), move || {
                let rows = engine.basis(&lambda).all_transition_rows(Execution::Sequential)?;
                for row in rows {
                    let s = &row.source;
                    if row.coeffs.coeff(s) != Rational::one() {
                        return Ok(Some(format!("q_(s,s) ≠ 1 at {s}")));
                    }
                    if let Some((t, _)) = row.coeffs.iter().find(|(t, _)| !dominates_unchecked(t, s)) {
                        return Ok(Some(format!("q_(s,t) ≠ 0 with t ⋭ s: s = {s}, t = {t}")));
                    }
                    if row.denominator != row.coeffs.denominator() {
                        return Ok(Some(format!("denominator field mismatch at {s}")));
                    }
                }
                Ok(None)
            })
        })
        .collect()
}

/// Points `i` with `d([1,i]) = [1,i]`.
fn stable_prefixes(p: &Permutation) -> BTreeSet<usize> {
    let mut max = 0;
    let mut out = BTreeSet::new();
    for i in 1..=p.n() {
        max = max.max(p.apply(i));
        if max == i {
            out.insert(i);
        }
    }
    out
}

fn d_element_cases<'a>(engine: &'a Engine, max_n: usize) -> Vec<Case<'a>> {
    partitions_up_to(max_n)
        .into_iter()
        .filter(|l| !l.is_empty())
        .map(|lambda| {
            Case::new("d-element", shape_json(&lambda), move || {
                let basis = engine.basis(&lambda);
                let module = basis.module();
                let e = SpechtVector::unit(&Tableau::initial_of(&lambda))?;
                for s in enumerate_standard(&lambda) {
                    let d = basis.d_element(&s)?;
                    if module.act_alg(&d, &e)? != *basis.seminormal_vector(&s)? {
                        return Ok(Some(format!("D(s) e ≠ f_s at {s}")));
                    }
                    let keep = stable_prefixes(&d_of(&s));
                    for (p, _) in d.terms() {
                        if !keep.is_subset(&stable_prefixes(p)) {
                            return Ok(Some(format!("D({s}) leaves the parabolic subgroup of d(s)")));
                        }
                    }
                }
                Ok(None)
            })
        })
        .collect()
}

fn compare_vectors(label: &str, formula: &SpechtVector, recursion: &SpechtVector) -> Option<String> {
    fail_unless(formula == recursion, || {
        format!("{label}: formula {} terms, recursion {} terms", formula.len(), recursion.len())
    })
}

fn formula_cases<'a>(engine: &'a Engine, max_n: usize, limits: &SweepLimits) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for lambda in partitions_up_to(max_n) {
        out.push(Case::new("add-one", shape_json(&lambda), move || {
            let nu = lambda.add_to_first_row(1);
            let rec = engine.up_arrow_vector(&lambda, &nu)?;
            let formula = f_add_one(&lambda)?;
            if let Some(msg) = compare_vectors("f_add_one", &formula, &rec) {
                return Ok(Some(msg));
            }
            let d = denom_add_one(&lambda);
            Ok(fail_unless(d == rec.denominator() && d == formula.denominator(), || {
                format!("residue product {d}, recursion {}", rec.denominator())
            }))
        }));
    }

    let pick = |given: Option<usize>, range: std::ops::RangeInclusive<usize>| -> Vec<usize> {
        match given {
            Some(v) => vec![v],
            None => range.collect(),
        }
    };
    for k in pick(limits.k, 1..=6) {
        for l in pick(limits.l, 1..=k) {
            for m in pick(limits.m, 1..=4) {
                if l == 0 || l > k || m == 0 {
                    continue;
                }
                out.push(Case::new("two-row", json!({ "k": k, "l": l, "m": m }), move || {
                    let p = KlsParams::new(k, l, 1, m)?;
                    let rec = engine.up_arrow_vector(&p.lambda(), &p.nu())?;
                    if let Some(msg) = compare_vectors("f_two_row", &f_two_row(k, l, m)?, &rec) {
                        return Ok(Some(msg));
                    }
                    let d = denom_two_row(k, l, m)?;
                    Ok(fail_unless(d == rec.denominator(), || format!("lcm formula {d}, recursion {}", rec.denominator())))
                }));
            }
        }
    }
    for k in pick(limits.k, 1..=5) {
        for s in pick(limits.s, 1..=3) {
            for m in pick(limits.m, 1..=3) {
                if k == 0 || s == 0 || m == 0 {
                    continue;
                }
                out.push(Case::new("hook", json!({ "k": k, "s": s, "m": m }), move || {
                    let p = KlsParams::new(k, 1, s, m)?;
                    let rec = engine.up_arrow_vector(&p.lambda(), &p.nu())?;
                    if let Some(msg) = compare_vectors("f_hook", &f_hook(k, s, m)?, &rec) {
                        return Ok(Some(msg));
                    }
                    let d = denom_hook(k, s);
                    Ok(fail_unless(d == rec.denominator(), || format!("k+s = {d}, recursion {}", rec.denominator())))
                }));
            }
        }
    }
    for nu in partitions_up_to(max_n.min(8)) {
        for node in nu.removable_nodes() {
            let nu = nu.clone();
            let row = node.row;
            out.push(Case::new("remove-node", json!({ "nu": nu.parts(), "row": row }), move || {
                let lambda = nu.remove_node(row)?;
                let d = denom_remove_node(&nu, row)?;
                let rec = engine.up_arrow_denominator(&lambda, &nu)?;
                if d != rec {
                    return Ok(Some(format!("residue product {d}, recursion {rec}")));
                }
                let formula = d_remove_one_node(&nu, row)?;
                Ok(fail_unless(formula == engine.up_arrow_d_element(&lambda, &nu)?, || {
                    "shifted D element differs from the recursion".into()
                }))
            }));
        }
    }
    out
}

fn colour_type_cases<'a>(engine: &'a Engine, max_n: usize) -> Vec<Case<'a>> {
    pairs_up_to(max_n)
        .into_iter()
        .map(|(lambda, nu)| {
            Case::new("colour-constancy", pair_json(&lambda, &nu), move || {
                let f = engine.up_arrow_vector(&lambda, &nu)?;
                let profile = ColourProfile::new(&lambda, &nu)?;
                let sst: BTreeSet<Tableau> = colour_semistandard_tableaux(&lambda, &nu)?.into_iter().collect();
                if let Some(t) = f.support().find(|t| !sst.contains(*t)) {
                    return Ok(Some(format!("non-zero coefficient off SSTab at {t}")));
                }
                let mut by_type: HashMap<Vec<usize>, Rational> = HashMap::new();
                for t in &sst {
                    let colours: Vec<usize> = t.reading_word().iter().map(|&x| profile.colour_of(x as usize)).collect();
                    let c = f.coeff(t);
                    match by_type.get(&colours) {
                        Some(prev) if *prev != c => return Ok(Some(format!("colour type of {t} is not constant"))),
                        Some(_) => {}
                        None => {
                            by_type.insert(colours, c);
                        }
                    }
                }
                Ok(None)
            })
        })
        .collect()
}

fn kls_tuples(limits: &SweepLimits) -> Vec<KlsParams> {
    let ks: Vec<usize> = limits.k.map(|k| vec![k]).unwrap_or_else(|| (1..=5).collect());
    let mut out = Vec::new();
    for &k in &ks {
        let ls: Vec<usize> = limits.l.map(|l| vec![l]).unwrap_or_else(|| (1..=k).collect());
        for &l in &ls {
            for s in limits.s.map(|s| vec![s]).unwrap_or_else(|| (1..=3).collect()) {
                for m in limits.m.map(|m| vec![m]).unwrap_or_else(|| (1..=3).collect()) {
                    if let Ok(p) = KlsParams::new(k, l, s, m) {
                        if s >= 1 && m >= 1 {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

fn kls_json(p: &KlsParams) -> Value {
    json!({ "k": p.k, "l": p.l, "s": p.s, "m": p.m })
}

/// Largest `|ν|` touched by the four reduction identities for `p`.
fn four_reduction_size(p: &KlsParams) -> usize {
    let mut size = p.nu().size();
    if p.s > p.l.min(p.m) {
        size = size.max(p.k + 1 + p.m + p.l * (p.s - 1));
    }
    size
}

fn four_reduction_cases<'a>(engine: &'a Engine, limits: &SweepLimits) -> Vec<Case<'a>> {
    let max_size = limits.max_size;
    kls_tuples(limits)
        .into_iter()
        .map(|p| {
            let size = four_reduction_size(&p);
            if size > max_size {
                return Case::skipped("four-reductions", kls_json(&p), format!("|ν| = {size} exceeds {max_size}"));
            }
            Case::new("four-reductions", kls_json(&p), move || {
                let outcomes = check_four_reductions(engine, p)?;
                let failed: Vec<u8> = outcomes.iter().filter(|o| !o.holds).map(|o| o.part).collect();
                Ok(fail_unless(failed.is_empty(), || {
                    format!("parts {failed:?} fail: {}", serde_json::to_string(&outcomes).unwrap_or_default())
                }))
            })
        })
        .collect()
}

fn kls_reduction_cases<'a>(engine: &'a Engine, limits: &SweepLimits) -> Vec<Case<'a>> {
    let max_size = limits.max_size;
    kls_tuples(limits)
        .into_iter()
        .map(|p| {
            let size = p.nu().size();
            if size > max_size {
                return Case::skipped("kls-reduction", kls_json(&p), format!("|ν| = {size} exceeds {max_size}"));
            }
            Case::new("kls-reduction", kls_json(&p), move || {
                let red = reduce_kls(p.k, p.l, p.s, p.m)?;
                if !(red.k_tilde >= red.l_tilde && red.l_tilde >= red.s_tilde) {
                    return Ok(Some("k̃ ≥ ℓ̃ ≥ s̃ violated".into()));
                }
                let q = red.params();
                let left = engine.up_arrow_denominator(&p.lambda(), &p.nu())?;
                let right = engine.up_arrow_denominator(&q.lambda(), &q.nu())?;
                Ok(fail_unless(left == right, || {
                    format!("d = {left} but reduced ({},{},{}) gives {right}", red.k_tilde, red.l_tilde, red.s_tilde)
                }))
            })
        })
        .collect()
}

fn divisibility_cases<'a>(engine: &'a Engine, max_n: usize) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for (lambda, nu) in pairs_up_to(max_n) {
        out.push(Case::new("denominator-bounds", pair_json(&lambda, &nu), move || {
            let d = engine.up_arrow_denominator(&lambda, &nu)?;
            for m in 1..=nu.part(1) - lambda.part(1) {
                let (left, right) = divisibility_bounds(engine, &lambda, &nu, Divisibility::AddRow { m })?;
                if left != d || !divides(&left, &right) {
                    return Ok(Some(format!("add-row m = {m}: {left} ∤ {right}")));
                }
            }
            let chain = denom_general_upper_bound(&lambda, &nu)?;
            if !divides(&d, &chain) {
                return Ok(Some(format!("node-chain bound: {d} ∤ {chain}")));
            }
            let bound = crate::formulas::denominator_bound(&lambda, &nu)?;
            if !divides(&d, &bound) {
                return Ok(Some(format!("combined bound: {d} ∤ {bound}")));
            }
            let s = Engine::up_arrow(&lambda, &nu)?;
            let tab_bound = denom_tableau_upper_bound(&s)?;
            Ok(fail_unless(divides(&d, &tab_bound), || format!("restriction-chain bound: {d} ∤ {tab_bound}")))
        }));
    }
    for lambda in partitions_up_to(max_n) {
        let r = lambda.len();
        if r < 3 {
            continue;
        }
        for m in 1..=max_n.saturating_sub(lambda.size()) {
            for i in 2..r {
                let lambda = lambda.clone();
                out.push(Case::new("row-split", json!({ "lambda": lambda.parts(), "i": i, "m": m }), move || {
                    let (left, right) = divisibility_bounds(engine, &lambda, &lambda, Divisibility::Split { i, m })?;
                    Ok(fail_unless(divides(&left, &right), || format!("{left} ∤ {right}")))
                }));
            }
        }
    }
    for k in 1..=max_n {
        for l in 1..=k {
            for s in 1..=l {
                if k + l * (s + 1) > max_n {
                    continue;
                }
                out.push(Case::new("gcd-bound", json!({ "k": k, "l": l, "s": s }), move || {
                    let p = KlsParams::new(k, l, s, l)?;
                    let d = engine.up_arrow_denominator(&p.lambda(), &p.nu())?;
                    let bound = upper_bound_kls(k, l, s)?;
                    Ok(fail_unless(divides(&d, &bound), || format!("{d} ∤ {bound}")))
                }));
            }
        }
    }
    out
}

fn transport_cases<'a>(engine: &'a Engine, max_n: usize) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for (lambda, nu) in pairs_up_to(max_n) {
        if lambda.is_empty() {
            continue;
        }
        let (lam2, nu2) = (lambda.clone(), nu.clone());
        out.push(Case::new("truncation", pair_json(&lambda, &nu), move || {
            let small = denom_truncate(&lam2, &nu2)?;
            let big = engine.up_arrow_d_element(&lam2, &nu2)?;
            let reduced = engine.up_arrow_d_element(&lam2, &small)?.shift(0, nu2.size())?;
            Ok(fail_unless(big == reduced, || format!("D differs after truncation to ({small})")))
        }));
        if lambda.len() >= 2 && lambda.part(1) == nu.part(1) {
            let (lam2, nu2) = (lambda.clone(), nu.clone());
            out.push(Case::new("row-removal", pair_json(&lambda, &nu), move || {
                let (a, b) = denom_row_removal(&lam2, &nu2)?;
                let big = engine.up_arrow_d_element(&lam2, &nu2)?;
                let shifted = engine.up_arrow_d_element(&a, &b)?.shift(lam2.part(1), nu2.size())?;
                Ok(fail_unless(big == shifted, || format!("D differs from the shift of D(({a})↑({b}))")))
            }));
        }
        out.push(Case::new("add-row-factorisation", pair_json(&lambda, &nu), move || {
            let module = engine.module(&nu);
            let f = engine.up_arrow_vector(&lambda, &nu)?;
            for m in 1..=nu.part(1) - lambda.part(1) {
                let mid = lambda.add_to_first_row(m);
                let d = engine.up_arrow_d_element(&lambda, &mid)?.shift(0, nu.size())?;
                let rest = engine.up_arrow_vector(&mid, &nu)?;
                if module.act_alg(&d, &rest)? != *f {
                    return Ok(Some(format!("f ≠ D(λ↑{m}) f_((λ+({m}))↑ν)")));
                }
            }
            Ok(None)
        }));
    }
    for lambda in partitions_up_to(max_n) {
        let r = lambda.len();
        if r < 3 {
            continue;
        }
        for m in 1..=max_n.saturating_sub(lambda.size()) {
            for i in 2..r {
                let lambda = lambda.clone();
                out.push(Case::new("row-split-factorisation", json!({ "lambda": lambda.parts(), "i": i, "m": m }), move || {
                    let nu = lambda.add_to_first_row(m);
                    let n = nu.size();
                    let (upper, lower) = row_split(&lambda, i)?;
                    let z = lambda.size() - upper.size();
                    let a = engine.up_arrow_d_element(&upper, &upper.add_to_first_row(m))?.shift(z, n)?;
                    let b = engine.up_arrow_d_element(&lower, &lower.add_to_first_row(m))?.shift(0, n)?;
                    let e = SpechtVector::unit(&Tableau::initial_of(&nu))?;
                    let got = engine.module(&nu).act_alg(&a.mul(&b)?, &e)?;
                    Ok(fail_unless(got == *engine.up_arrow_vector(&lambda, &nu)?, || "row-split identity fails".into()))
                }));
            }
        }
    }
    for lambda in partitions_up_to(max_n.min(7)).into_iter().filter(|l| !l.is_empty()) {
        out.push(Case::new("node-chain-estimate", shape_json(&lambda), move || {
            let module = engine.module(&lambda);
            let e = SpechtVector::unit(&Tableau::initial_of(&lambda))?;
            let n = lambda.size();
            for s in enumerate_standard(&lambda) {
                let pos = s.positions();
                let mut shape = Partition::empty();
                let mut product = AlgebraElement::unit(n);
                for &(r, _) in pos.iter().skip(1) {
                    let row = r + 1;
                    shape = shape.add_node(row).expect("standard tableaux grow by addable nodes");
                    product = product.mul(&d_remove_one_node(&shape, row)?.shift(0, n)?)?;
                }
                if module.act_alg(&product, &e)? != *engine.seminormal_vector(&s)? {
                    return Ok(Some(format!("product of one-node D elements misses f_s at {s}")));
                }
            }
            Ok(None)
        }));
    }
    out
}

fn worked_example_cases(engine: &Engine) -> Vec<Case<'_>> {
    [2usize, 3]
        .into_iter()
        .map(|k| {
            Case::new("k-2-2", json!({ "k": k }), move || {
                let p = KlsParams::new(k, 2, 2, 2)?;
                let d = engine.up_arrow_denominator(&p.lambda(), &p.nu())?;
                let closed = denom_k_2_2(k)?;
                let bound = upper_bound_kls(k, 2, 2)?;
                Ok(fail_unless(d == closed && d == bound, || {
                    format!("recursion {d}, (k+1)(k+2) = {closed}, gcd bound {bound}")
                }))
            })
        })
        .collect()
}

fn dispatch_cases(engine: &Engine, max_n: usize, cap: usize) -> Vec<Case<'_>> {
    pairs_up_to(max_n)
        .into_iter()
        .map(|(lambda, nu)| {
            Case::new("dispatch", pair_json(&lambda, &nu), move || {
                let report = summary_dispatch(engine, &lambda, &nu, cap)?;
                let d = engine.up_arrow_denominator(&lambda, &nu)?;
                if let Some(v) = &report.value {
                    if *v != d {
                        return Ok(Some(format!("{:?} gives {v}, recursion {d}", report.route)));
                    }
                }
                if let Some(b) = &report.bound {
                    if !divides(&d, b) {
                        return Ok(Some(format!("bound {b} is not a multiple of {d}")));
                    }
                }
                Ok(None)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn relation_counts() {
        assert!(garnir_relation_vectors(&part("4")).is_empty());
        let rels = garnir_relation_vectors(&part("1,1"));
        // {(1|2)} + {(2|1)} from each of the two tabloids
        assert_eq!(rels.len(), 2);
        let span = garnir_span(&part("1,1"));
        assert_eq!(span.rank(), 1);
        assert!(basis_dimension_holds(&part("1,1"), &span));
    }

    #[test]
    fn straightening_is_consistent_small() {
        for s in ["2,1", "2,2", "3", "3,1,1"] {
            assert!(straightening_consistent(&part(s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn a_wrong_expansion_is_detected() {
        let lambda = part("2,2");
        let span = garnir_span(&lambda);
        let t = Tableau::from_rows(&[vec![1, 4], vec![2, 3]]).unwrap();
        let mut v = TabloidVector::basis(&t);
        // e_t = −e_[13|24] − e_[12|34]; drop one term on purpose
        v.add(&Tableau::from_rows(&[vec![1, 3], vec![2, 4]]).unwrap(), &Rational::one());
        assert!(!span.contains(&v));
        v.add(&Tableau::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap(), &Rational::one());
        assert!(span.contains(&v));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn small_sweeps_pass() {
        let limits = SweepLimits {
            max_n: Some(4),
            ..SweepLimits::default()
        };
        for suite in [
            Suite::GarnirSpan,
            Suite::ActionProperty,
            Suite::ChainIndependence,
            Suite::Unitriangularity,
            Suite::DElements,
            Suite::ColourTypes,
            Suite::Divisibility,
            Suite::Transport,
            Suite::Dispatch,
        ] {
            let report = sweep(suite, &limits).unwrap();
            assert!(report.is_success(), "{suite}: {:?}", report.failures().next());
            assert!(report.passed() > 0, "{suite}");
        }
    }
}
