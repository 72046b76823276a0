//! Closed formulas and reduction rules for seminormal vectors `f_{λ↑ν}` and
//! their denominators.
//!
//! The vector formulas here never call the recursion, so they can be checked
//! against it. The functions that do need recursion (weight extraction, the
//! reduction checks, divisibility pairs, dispatch fallback) take an
//! [`Engine`].

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::combinat::{
    colour_semistandard_tableaux, qp_sets, residue, tableau_from_weight, weight_of, KlsParams, Node, Partition,
    Tableau, Weight,
};
use crate::permalg::{d_of, AlgebraElement};
use crate::rational::{binomial, lcm_range, Rational};
use crate::seminormal::Engine;
use crate::specht::SpechtVector;
use crate::{Error, Result};

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn recip(v: &BigInt) -> Rational {
    Rational::new(BigInt::one(), v.clone())
}

// ---------------------------------------------------------------------------
// Adding one node to the first row

/// The coefficient `a_s` of `e_s` in `f_{λ↑1}` for `s ∈ SSTab(λ;1)`.
pub fn add_one_coefficient(lambda: &Partition, s: &Tableau) -> Result<Rational> {
    let qp = qp_sets(s, lambda)?;
    let mut a = Rational::one();
    for &i in &qp.p {
        let block = &qp.blocks[&lambda.part(i)];
        let max_q = *block.iter().max().expect("blocks are non-empty");
        a /= Rational::from_integer(big(lambda.part(1) - lambda.part(i) + max_q));
    }
    if (qp.q.len() - qp.p.len()) % 2 == 1 {
        a = -a;
    }
    Ok(a)
}

/// `f_{λ↑1} = Σ_{s ∈ SSTab(λ;1)} a_s e_s`.
pub fn f_add_one(lambda: &Partition) -> Result<SpechtVector> {
    let nu = lambda.add_to_first_row(1);
    let terms = colour_semistandard_tableaux(lambda, &nu)?
        .into_iter()
        .map(|s| add_one_coefficient(lambda, &s).map(|a| (s, a)))
        .collect::<Result<Vec<_>>>()?;
    SpechtVector::from_coords(&nu, terms)
}

/// `d_{λ↑1} = Π (res(A₀) − res(A_i))` over the removable nodes `A_i` of
/// `λ+(1)` below its top removable node `A₀`.
pub fn denom_add_one(lambda: &Partition) -> BigInt {
    let nu = lambda.add_to_first_row(1);
    denom_remove_node(&nu, 1).expect("the first row of λ+(1) ends in a removable node")
}

/// `d_{λ↑ν}` where `λ` is `ν` minus the removable node at the end of `row`:
/// the product of `res(A) − res(B)` over removable nodes `B` below it.
pub fn denom_remove_node(nu: &Partition, row: usize) -> Result<BigInt> {
    nu.remove_node(row)?;
    let a = Node::new(row, nu.part(row));
    Ok(nu
        .removable_nodes()
        .into_iter()
        .filter(|b| b.row > row)
        .map(|b| BigInt::from(residue(a) - residue(b)))
        .product())
}

/// `D(λ↑ν)` for `λ = ν` minus the removable node on `row`, as the shift of
/// `D((λ_row, …)↑1)` built from the closed formula for `f_{λ↑1}`.
pub fn d_remove_one_node(nu: &Partition, row: usize) -> Result<AlgebraElement> {
    let lambda = nu.remove_node(row)?;
    let tail = lambda.rows_from(row);
    let offset: usize = lambda.parts()[..row - 1].iter().sum();
    let f = f_add_one(&tail)?;
    let local = AlgebraElement::from_terms(tail.size() + 1, f.iter().map(|(s, a)| (d_of(s), a.clone())))?;
    local.shift(offset, nu.size())
}

// ---------------------------------------------------------------------------
// (k, ℓ) + (m) and hooks

/// `lcm(a, …, a+b)/a`, which equals `lcm{C(a+r, a) : r ∈ [0, b]}`.
pub fn lcm_binom(a: u64, b: u64) -> Result<BigInt> {
    if a == 0 {
        return Err(Error::OutOfRange("lcm_binom needs a ≥ 1".into()));
    }
    Ok(lcm_range(a, a + b) / BigInt::from(a))
}

/// `f_{(k,ℓ)↑m} = Σ e_s / C(k−ℓ+1+wt(s), wt(s))` over `SSTab((k,ℓ);m)`.
pub fn f_two_row(k: usize, l: usize, m: usize) -> Result<SpechtVector> {
    let params = KlsParams::new(k, l, 1, m)?;
    let nu = params.nu();
    let terms = colour_semistandard_tableaux(&params.lambda(), &nu)?
        .into_iter()
        .map(|s| {
            let w = weight_of(&s, params)?.total() as u64;
            let c = binomial((k - l + 1) as u64 + w, w);
            Ok((s, recip(&c)))
        })
        .collect::<Result<Vec<_>>>()?;
    SpechtVector::from_coords(&nu, terms)
}

/// `d_{(k,ℓ)↑m} = lcm(k−ℓ+1, …, k−ℓ+1+min(ℓ,m))/(k−ℓ+1)`.
pub fn denom_two_row(k: usize, l: usize, m: usize) -> Result<BigInt> {
    KlsParams::new(k, l, 1, m)?;
    lcm_binom((k - l + 1) as u64, l.min(m) as u64)
}

/// `f_{(k,1^s)↑m}`: coefficient 1 at weight 0 and `(−1)^{s−j}/(k+s)` at
/// weight `e_j`.
pub fn f_hook(k: usize, s: usize, m: usize) -> Result<SpechtVector> {
    if k == 0 || s == 0 || m == 0 {
        return Err(Error::Precondition("f_hook needs k, s, m ≥ 1".into()));
    }
    let params = KlsParams::new(k, 1, s, m)?;
    let nu = params.nu();
    let denom = big(k + s);
    let terms = colour_semistandard_tableaux(&params.lambda(), &nu)?
        .into_iter()
        .map(|t| {
            let w = weight_of(&t, params)?;
            let c = match w.0.iter().position(|&x| x == 1) {
                None => Rational::one(),
                Some(idx) => {
                    let j = idx + 1;
                    let c = recip(&denom);
                    if (s - j) % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                }
            };
            Ok((t, c))
        })
        .collect::<Result<Vec<_>>>()?;
    SpechtVector::from_coords(&nu, terms)
}

/// `d_{(k,1^s)↑m} = k + s`.
pub fn denom_hook(k: usize, s: usize) -> BigInt {
    big(k + s)
}

// ---------------------------------------------------------------------------
// (k, ℓ^s) + (m)

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct KlsReduction {
    pub k_tilde: usize,
    pub l_tilde: usize,
    pub s_tilde: usize,
}

impl KlsReduction {
    /// The reduced family member `(k̃, ℓ̃^s̃) + (ℓ̃)`.
    pub fn params(&self) -> KlsParams {
        KlsParams {
            k: self.k_tilde,
            l: self.l_tilde,
            s: self.s_tilde,
            m: self.l_tilde,
        }
    }
}

/// `d_{(k,ℓ^s)↑m} = d_{(k̃,ℓ̃^s̃)↑ℓ̃}` with `k̃ = k−ℓ+max(s, min(ℓ,m))`,
/// `ℓ̃ = min(ℓ,m)`, `s̃ = min(ℓ,m,s)`.
pub fn reduce_kls(k: usize, l: usize, s: usize, m: usize) -> Result<KlsReduction> {
    KlsParams::new(k, l, s, m)?;
    if s == 0 || m == 0 {
        return Err(Error::Precondition("reduce_kls needs s, m ≥ 1".into()));
    }
    let lm = l.min(m);
    Ok(KlsReduction {
        k_tilde: k - l + s.max(lm),
        l_tilde: lm,
        s_tilde: lm.min(s),
    })
}

/// `gcd(Π_{i=1}^{ℓ}(k−ℓ+s+i), Π_{j=1}^{s} lcm(k−ℓ+j, …, k+j)/(k−ℓ+j))`, a
/// multiple of `d_{(k,ℓ^s)↑ℓ}`.
pub fn upper_bound_kls(k: usize, l: usize, s: usize) -> Result<BigInt> {
    if !(k >= l && l >= s && s >= 1) {
        return Err(Error::Precondition(format!("need k ≥ ℓ ≥ s ≥ 1, got ({k},{l},{s})")));
    }
    let first: BigInt = (1..=l).map(|i| big(k - l + s + i)).product();
    let second: BigInt = (1..=s)
        .map(|j| lcm_range((k - l + j) as u64, (k + j) as u64) / big(k - l + j))
        .product();
    Ok(first.gcd(&second))
}

/// `d_{(k,2²)↑2} = (k+1)(k+2)` for `k ≥ 2`.
pub fn denom_k_2_2(k: usize) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::Precondition("need k ≥ 2".into()));
    }
    Ok(big(k + 1) * big(k + 2))
}

/// The coefficients `a^{k,ℓ}_{m,w}` of `f_{(k,ℓ^s)↑m}`, read off at the
/// representatives `s_w`.
pub fn weights_kls(engine: &Engine, params: KlsParams) -> Result<BTreeMap<Weight, Rational>> {
    let f = engine.up_arrow_vector(&params.lambda(), &params.nu())?;
    params
        .weights()
        .into_iter()
        .map(|w| {
            let t = tableau_from_weight(&w, params.k, params.l, params.m)?;
            Ok((w, f.coeff(&t)))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionOutcome {
    pub part: u8,
    pub applicable: bool,
    pub holds: bool,
    /// The first failing weight, if any.
    pub counterexample: Option<Vec<usize>>,
}

/// The four weight identities for one `(k, ℓ, s, m)`:
///
/// 1. `|a_w|` is invariant under permuting the entries of `w`;
/// 2. `a^{k,ℓ}_{m,(0,w)} = a^{k+1,ℓ}_{m,w}` for `w` of length `s−1 ≥ min(ℓ,m)`;
/// 3. `a^{k,ℓ}_{m,w} = a^{k,ℓ}_{m−1,w}` if `m > ℓ`;
/// 4. `a^{k,ℓ}_{m,w} = a^{k−1,ℓ−1}_{m,w}` if `ℓ > m`.
pub fn check_four_reductions(engine: &Engine, params: KlsParams) -> Result<Vec<ReductionOutcome>> {
    let KlsParams { k, l, s, m } = params;
    if s == 0 || m == 0 {
        return Err(Error::Precondition("need s, m ≥ 1".into()));
    }
    let a = weights_kls(engine, params)?;
    let mut out = Vec::with_capacity(4);

    let mut bad = None;
    'outer: for (w, c) in &a {
        for perm in w.0.iter().copied().permutations(s).unique() {
            let other = &a[&Weight(perm.clone())];
            if c.abs() != other.abs() {
                bad = Some(w.0.clone());
                break 'outer;
            }
        }
    }
    out.push(outcome(1, true, bad));

    let lm = l.min(m);
    if s > lm {
        let b = weights_kls(engine, KlsParams::new(k + 1, l, s - 1, m)?)?;
        let bad = b
            .iter()
            .find(|(w, c)| {
                let mut padded = vec![0];
                padded.extend(&w.0);
                a[&Weight(padded)] != **c
            })
            .map(|(w, _)| w.0.clone());
        out.push(outcome(2, true, bad));
    } else {
        out.push(outcome(2, false, None));
    }

    if m > l {
        let b = weights_kls(engine, KlsParams::new(k, l, s, m - 1)?)?;
        out.push(outcome(3, true, first_mismatch(&a, &b)));
    } else {
        out.push(outcome(3, false, None));
    }

    if l > m {
        let b = weights_kls(engine, KlsParams::new(k - 1, l - 1, s, m)?)?;
        out.push(outcome(4, true, first_mismatch(&a, &b)));
    } else {
        out.push(outcome(4, false, None));
    }
    Ok(out)
}

fn outcome(part: u8, applicable: bool, counterexample: Option<Vec<usize>>) -> ReductionOutcome {
    ReductionOutcome {
        part,
        applicable,
        holds: counterexample.is_none(),
        counterexample,
    }
}

fn first_mismatch(a: &BTreeMap<Weight, Rational>, b: &BTreeMap<Weight, Rational>) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return Some(Vec::new());
    }
    a.iter().find(|(w, c)| b.get(*w) != Some(*c)).map(|(w, _)| w.0.clone())
}

// ---------------------------------------------------------------------------
// General shapes

/// `ν̃ = (ν₁, …, ν_{r−1}, λ_r)` with `r = len(λ)`; `D(λ↑ν) = D(λ↑ν̃)`.
pub fn denom_truncate(lambda: &Partition, nu: &Partition) -> Result<Partition> {
    nu.check_contains(lambda)?;
    let r = lambda.len();
    if r == 0 {
        return Ok(Partition::empty());
    }
    let mut parts: Vec<usize> = nu.parts()[..r - 1].to_vec();
    parts.push(lambda.part(r));
    Partition::new(parts)
}

/// Drops the common first row when `λ₁ = ν₁`; `D(λ↑ν)` is then the shift by
/// `λ₁` of the smaller pair's `D`.
pub fn denom_row_removal(lambda: &Partition, nu: &Partition) -> Result<(Partition, Partition)> {
    nu.check_contains(lambda)?;
    if lambda.len() < 2 || lambda.part(1) != nu.part(1) {
        return Err(Error::Precondition(format!(
            "row removal needs λ₁ = ν₁ and at least two rows, got ({lambda}) ⊆ ({nu})"
        )));
    }
    Ok((lambda.rows_from(2), nu.rows_from(2)))
}

/// `(λ^{(i)}, λ^{≤i})` with `λ^{(i)} = (λ₁+i−1, λ_{i+1}, …)` and
/// `λ^{≤i} = (λ₁, …, λ_i)`.
pub fn row_split(lambda: &Partition, i: usize) -> Result<(Partition, Partition)> {
    let r = lambda.len();
    if i < 2 || i + 1 > r {
        return Err(Error::OutOfRange(format!("split row {i} needs 2 ≤ i ≤ {}", r.saturating_sub(1))));
    }
    let mut upper = vec![lambda.part(1) + i - 1];
    upper.extend(&lambda.parts()[i..]);
    Ok((Partition::new(upper)?, lambda.rows_to(i)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Divisibility {
    /// `d_{λ↑ν} | d_{λ↑m} · d_{(λ+(m))↑ν}` for `m ∈ [1, ν₁−λ₁]`.
    AddRow { m: usize },
    /// `d_{λ↑m} | d_{λ^{(i)}↑m} · d_{λ^{≤i}↑m}` for `i ∈ [2, r−1]`.
    Split { i: usize, m: usize },
}

/// `(left, right)` for the chosen divisibility statement, every denominator
/// computed by recursion.
pub fn divisibility_bounds(
    engine: &Engine,
    lambda: &Partition,
    nu: &Partition,
    which: Divisibility,
) -> Result<(BigInt, BigInt)> {
    nu.check_contains(lambda)?;
    match which {
        Divisibility::AddRow { m } => {
            if m == 0 || m > nu.part(1) - lambda.part(1) {
                return Err(Error::OutOfRange(format!("m = {m} outside [1, ν₁−λ₁]")));
            }
            let mid = lambda.add_to_first_row(m);
            let left = engine.up_arrow_denominator(lambda, nu)?;
            let right = engine.up_arrow_denominator(lambda, &mid)? * engine.up_arrow_denominator(&mid, nu)?;
            Ok((left, right))
        }
        Divisibility::Split { i, m } => {
            if m == 0 {
                return Err(Error::OutOfRange("m must be positive".into()));
            }
            let (upper, lower) = row_split(lambda, i)?;
            let up = |p: &Partition| engine.up_arrow_denominator(p, &p.add_to_first_row(m));
            Ok((up(lambda)?, up(&upper)? * up(&lower)?))
        }
    }
}

/// Product of single-node denominators along the chain that adds the nodes
/// of `[ν] ∖ [λ]` in the order `λ↑ν` numbers them (row by row).
pub fn denom_general_upper_bound(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    nu.check_contains(lambda)?;
    let mut mu = lambda.clone();
    let mut acc = BigInt::one();
    for row in 1..=nu.len() {
        while mu.part(row) < nu.part(row) {
            let next = mu.add_node(row).expect("row-by-row filling stays a partition");
            acc *= denom_remove_node(&next, row)?;
            mu = next;
        }
    }
    Ok(acc)
}

/// `d_s | Π d_{λ^i↑λ^{i+1}}` where `λ^i = Shape(s↓i)`, for any standard `s`.
pub fn denom_tableau_upper_bound(s: &Tableau) -> Result<BigInt> {
    if !s.is_standard() {
        return Err(Error::InvalidTableau(format!("{s} is not standard")));
    }
    let pos = s.positions();
    let mut shape = Partition::empty();
    let mut acc = BigInt::one();
    for &(r, _) in pos.iter().skip(1) {
        let row = r + 1;
        shape = shape.add_node(row).expect("standard tableaux grow by addable nodes");
        acc *= denom_remove_node(&shape, row)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Dispatch

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    ExactFormula,
    ReductionThenFormula,
    RecursionFallback,
    DivisorBoundOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenominatorReport {
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_big")]
    pub value: Option<BigInt>,
    pub route: Route,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_big")]
    pub bound: Option<BigInt>,
}

fn opt_big<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

/// Closed-form `d_{λ↑ν}` from the single-node, two-row and `(k,ℓ^s)` rules,
/// without recursion. The flag says whether a reduction was needed.
fn closed_form(lambda: &Partition, nu: &Partition) -> Option<(BigInt, bool)> {
    if lambda == nu {
        return Some((BigInt::one(), false));
    }
    if nu.size() == lambda.size() + 1 {
        let row = (1..=nu.len()).find(|&r| nu.part(r) != lambda.part(r))?;
        return denom_remove_node(nu, row).ok().map(|d| (d, false));
    }
    let r = lambda.len();
    if r <= 1 {
        // λ↑ν̃ is the initial tableau once ν is truncated to one row.
        return Some((BigInt::one(), true));
    }
    if r == 2 {
        let (l1, l2) = (lambda.part(1), lambda.part(2));
        let m = nu.part(1) - l1;
        return lcm_binom((l1 - l2 + 1) as u64, l2.min(m) as u64).ok().map(|d| (d, false));
    }
    let l2 = lambda.part(2);
    if (2..=r).all(|i| lambda.part(i) == l2 && nu.part(i) == l2) {
        let m = nu.part(1) - lambda.part(1);
        if m == 0 {
            return Some((BigInt::one(), true));
        }
        let red = reduce_kls(lambda.part(1), l2, r - 1, m).ok()?;
        if red.s_tilde == 1 {
            return denom_two_row(red.k_tilde, red.l_tilde, red.l_tilde).ok().map(|d| (d, true));
        }
        if red.l_tilde == 2 && red.s_tilde == 2 {
            return denom_k_2_2(red.k_tilde).ok().map(|d| (d, true));
        }
    }
    None
}

/// Applies truncation and row removal until neither changes the pair.
pub fn normalize_pair(lambda: &Partition, nu: &Partition) -> Result<(Partition, Partition)> {
    nu.check_contains(lambda)?;
    let (mut lam, mut nu) = (lambda.clone(), nu.clone());
    loop {
        let truncated = denom_truncate(&lam, &nu)?;
        let changed = truncated != nu;
        nu = truncated;
        if lam.len() >= 2 && lam.part(1) == nu.part(1) {
            let (a, b) = denom_row_removal(&lam, &nu)?;
            lam = a;
            nu = b;
            continue;
        }
        if !changed {
            return Ok((lam, nu));
        }
    }
}

/// A multiple of `d_{λ↑ν}` assembled from closed forms and the
/// divisibility rules (first-row extension, row splits), intersected with
/// the node-chain bound.
pub fn denominator_bound(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    let chain = denom_general_upper_bound(lambda, nu)?;
    let (lam, nu) = normalize_pair(lambda, nu)?;
    if let Some((d, _)) = closed_form(&lam, &nu) {
        return Ok(d);
    }
    let m = nu.part(1) - lam.part(1);
    let mid = lam.add_to_first_row(m);
    let rule = add_row_bound(&lam, m)? * denominator_bound(&mid, &nu)?;
    Ok(rule.gcd(&chain))
}

/// A multiple of `d_{λ↑m}`.
fn add_row_bound(lambda: &Partition, m: usize) -> Result<BigInt> {
    let nu = lambda.add_to_first_row(m);
    if let Some((d, _)) = closed_form(lambda, &nu) {
        return Ok(d);
    }
    let steps: BigInt = (0..m).map(|j| denom_add_one(&lambda.add_to_first_row(j))).product();
    if lambda.len() < 3 {
        return Ok(steps);
    }
    let (upper, lower) = row_split(lambda, 2)?;
    let split = add_row_bound(&upper, m)? * add_row_bound(&lower, m)?;
    Ok(steps.gcd(&split))
}

/// Routes `d_{λ↑ν}` through the closed formulas, then through truncation and
/// row removal, then through recursion when `|ν| ≤ cap`; otherwise reports
/// only a multiple of the denominator.
pub fn summary_dispatch(engine: &Engine, lambda: &Partition, nu: &Partition, cap: usize) -> Result<DenominatorReport> {
    nu.check_contains(lambda)?;
    let bound = denominator_bound(lambda, nu)?;
    if let Some((value, reduced)) = closed_form(lambda, nu) {
        let route = if reduced { Route::ReductionThenFormula } else { Route::ExactFormula };
        return Ok(report(Some(value), route, bound));
    }
    let (lam, small) = normalize_pair(lambda, nu)?;
    if let Some((value, _)) = closed_form(&lam, &small) {
        return Ok(report(Some(value), Route::ReductionThenFormula, bound));
    }
    // Recurse on the smallest equivalent pair available.
    let mut target = (lam.clone(), small.clone());
    let r = lam.len();
    let l2 = lam.part(2);
    if r >= 2 && (2..=r).all(|i| lam.part(i) == l2 && small.part(i) == l2) {
        if let Ok(red) = reduce_kls(lam.part(1), l2, r - 1, small.part(1) - lam.part(1)) {
            let p = red.params();
            if p.nu().size() < small.size() {
                target = (p.lambda(), p.nu());
            }
        }
    }
    if target.1.size() <= cap {
        let value = engine.up_arrow_denominator(&target.0, &target.1)?;
        return Ok(report(Some(value), Route::RecursionFallback, bound));
    }
    Ok(DenominatorReport {
        value: None,
        route: Route::DivisorBoundOnly,
        bound: Some(bound),
    })
}

fn report(value: Option<BigInt>, route: Route, bound: BigInt) -> DenominatorReport {
    DenominatorReport {
        value,
        route,
        bound: Some(bound),
    }
}

/// `true` iff `a` divides `b`.
pub fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        return b.is_zero();
    }
    (b % a).is_zero()
}
