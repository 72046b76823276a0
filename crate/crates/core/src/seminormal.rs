//! Young's seminormal basis via its characterising recursion.
//!
//! `f_{t^λ} = e_{t^λ}`, and whenever `s_i·u` is standard with `s_i·u ⊲ u`,
//! `f_{s_i·u} = −(1/r) f_u + s_i f_u` where `r = res_u(i+1) − res_u(i)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::combinat::{enumerate_standard, Partition, Tableau};
use crate::exec::Execution;
use crate::permalg::{d_of, AlgebraElement};
use crate::rational::{int, Rational};
use crate::specht::{SpechtModule, SpechtVector};
use crate::{Error, Result};

/// Indices `i` such that swapping `i, i+1` in `u` stays standard and
/// strictly raises dominance, i.e. `i+1` sits in a higher row than `i`.
fn raising_indices(u: &Tableau) -> Vec<usize> {
    let rows = u.row_of_entries();
    (1..u.n()).filter(|&i| rows[i + 1] < rows[i]).collect()
}

fn canonical_raise(u: &Tableau) -> Option<usize> {
    let rows = u.row_of_entries();
    (1..u.n()).find(|&i| rows[i + 1] < rows[i])
}

/// Indices `i₁, …, i_ℓ` such that applying `s_{i₁}`, then `s_{i₂}`, … to
/// `t^λ` passes through standard tableaux, strictly descending in dominance,
/// and ends at `s`.
pub fn chain_to_initial(s: &Tableau) -> Result<Vec<usize>> {
    require_standard(s)?;
    let mut u = s.clone();
    let mut walk = Vec::new();
    while let Some(i) = canonical_raise(&u) {
        walk.push(i);
        u = u.swap_entries(i);
    }
    walk.reverse();
    Ok(walk)
}

/// A chain as in [`chain_to_initial`], choosing a uniformly random raising
/// index at every step of the upward walk.
pub fn random_chain<R: Rng>(s: &Tableau, rng: &mut R) -> Result<Vec<usize>> {
    require_standard(s)?;
    let mut u = s.clone();
    let mut walk = Vec::new();
    loop {
        let choices = raising_indices(&u);
        let Some(&i) = choices.choose(rng) else { break };
        walk.push(i);
        u = u.swap_entries(i);
    }
    walk.reverse();
    Ok(walk)
}

fn require_standard(s: &Tableau) -> Result<Partition> {
    let shape = s.partition_shape()?;
    if !s.is_standard() {
        return Err(Error::InvalidTableau(format!("{s} is not standard")));
    }
    Ok(shape)
}

/// `res_u(i+1) − res_u(i)`.
pub fn axial_distance(u: &Tableau, i: usize) -> i64 {
    let pos = u.positions();
    let (ra, ca) = pos[i];
    let (rb, cb) = pos[i + 1];
    (cb as i64 - rb as i64) - (ca as i64 - ra as i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionRow {
    pub source: Tableau,
    pub coeffs: SpechtVector,
    #[serde(serialize_with = "crate::rational::serialize_bigint")]
    pub denominator: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionBranch {
    /// `r = ±1`: `s_i f_s = r f_s`.
    Scalar,
    /// `r ≤ −2`: `s_i f_s = (1/r) f_s + f_{s_i·s}`.
    Descending,
    /// `r ≥ 2`: `s_i f_s = (1/r) f_s + (1 − 1/r²) f_{s_i·s}`.
    Ascending,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionCheck {
    pub r: i64,
    pub branch: ActionBranch,
    pub holds: bool,
}

/// Seminormal vectors of one shape, memoized per tableau.
#[derive(Debug)]
pub struct SeminormalBasis {
    module: Arc<SpechtModule>,
    initial: Tableau,
    vectors: DashMap<Tableau, Arc<SpechtVector>>,
}

impl SeminormalBasis {
    pub fn new(module: Arc<SpechtModule>) -> Self {
        let initial = Tableau::initial_of(module.shape());
        SeminormalBasis {
            module,
            initial,
            vectors: DashMap::new(),
        }
    }

    pub fn for_shape(shape: &Partition) -> Self {
        SeminormalBasis::new(Arc::new(SpechtModule::new(shape)))
    }

    pub fn module(&self) -> &Arc<SpechtModule> {
        &self.module
    }

    pub fn shape(&self) -> &Partition {
        self.module.shape()
    }

    fn check(&self, s: &Tableau) -> Result<()> {
        let shape = require_standard(s)?;
        if &shape != self.shape() {
            return Err(Error::ShapeMismatch(format!("{s} is not a ({})-tableau", self.shape())));
        }
        Ok(())
    }

    fn cached(&self, s: &Tableau) -> Option<Arc<SpechtVector>> {
        if s == &self.initial {
            return Some(Arc::new(SpechtVector::unit(s).expect("initial tableau is standard")));
        }
        self.vectors.get(s).map(|v| Arc::clone(v.value()))
    }

    /// One recursion step from `f_u` to `f_{s_i·u}`.
    fn step(&self, u: &Tableau, f_u: &SpechtVector, i: usize) -> Result<SpechtVector> {
        let r = axial_distance(u, i);
        let mut next = self.module.act_basic(i, f_u)?;
        next.add_scaled(f_u, &-Rational::new(BigInt::one(), BigInt::from(r)))?;
        Ok(next)
    }

    /// `f_s` in the standard basis.
    pub fn seminormal_vector(&self, s: &Tableau) -> Result<Arc<SpechtVector>> {
        self.check(s)?;
        if let Some(v) = self.cached(s) {
            return Ok(v);
        }
        let mut path: Vec<(Tableau, usize)> = Vec::new();
        let mut u = s.clone();
        let mut f = loop {
            if let Some(v) = self.cached(&u) {
                break v;
            }
            let i = canonical_raise(&u).expect("non-initial standard tableau can be raised");
            let up = u.swap_entries(i);
            path.push((up.clone(), i));
            u = up;
        };
        for (up, i) in path.into_iter().rev() {
            f = Arc::new(self.step(&up, &f, i)?);
        }
        Ok(Arc::clone(self.vectors.entry(s.clone()).or_insert(f).value()))
    }

    /// `f_s` recomputed along an explicit chain from `t^λ`, bypassing the memo.
    pub fn seminormal_vector_along(&self, s: &Tableau, chain: &[usize]) -> Result<SpechtVector> {
        self.check(s)?;
        let mut u = self.initial.clone();
        let mut f = SpechtVector::unit(&u)?;
        for &i in chain {
            if i == 0 || i >= u.n() {
                return Err(Error::OutOfRange(format!("chain index {i}")));
            }
            let down = u.swap_entries(i);
            let rows = u.row_of_entries();
            if rows[i] >= rows[i + 1] || !down.is_standard() {
                return Err(Error::Precondition(format!("s_{i} does not descend from {u}")));
            }
            f = self.step(&u, &f, i)?;
            u = down;
        }
        if &u != s {
            return Err(Error::Precondition(format!("chain ends at {u}, not {s}")));
        }
        Ok(f)
    }

    pub fn transition_row(&self, s: &Tableau) -> Result<TransitionRow> {
        let coeffs = (*self.seminormal_vector(s)?).clone();
        let denominator = coeffs.denominator();
        Ok(TransitionRow {
            source: s.clone(),
            coeffs,
            denominator,
        })
    }

    pub fn denominator(&self, s: &Tableau) -> Result<BigInt> {
        Ok(self.seminormal_vector(s)?.denominator())
    }

    /// `D(s) = Σ_v q_{s,v} δ_{d(v)}`.
    pub fn d_element(&self, s: &Tableau) -> Result<AlgebraElement> {
        let f = self.seminormal_vector(s)?;
        AlgebraElement::from_terms(s.n(), f.iter().map(|(v, q)| (d_of(v), q.clone())))
    }

    /// Compares `s_i f_s` with the case split on `r = res_s(i+1) − res_s(i)`.
    pub fn action_check(&self, s: &Tableau, i: usize) -> Result<ActionCheck> {
        self.check(s)?;
        if i == 0 || i >= s.n() {
            return Err(Error::OutOfRange(format!("s_{i} is not a basic transposition of S_{}", s.n())));
        }
        let f = self.seminormal_vector(s)?;
        let lhs = self.module.act_basic(i, &f)?;
        let r = axial_distance(s, i);
        let inv_r = Rational::new(BigInt::one(), BigInt::from(r));
        let (branch, rhs) = match r {
            1 | -1 => (ActionBranch::Scalar, f.scale(&int(r))),
            _ => {
                let other = self.seminormal_vector(&s.swap_entries(i))?;
                let (branch, c) = if r <= -2 {
                    (ActionBranch::Descending, Rational::one())
                } else {
                    (ActionBranch::Ascending, Rational::one() - &inv_r * &inv_r)
                };
                let mut rhs = f.scale(&inv_r);
                rhs.add_scaled(&other, &c)?;
                (branch, rhs)
            }
        };
        Ok(ActionCheck {
            r,
            branch,
            holds: lhs == rhs,
        })
    }

    /// Every `f_s` of the shape, computed level by level in the length of
    /// `d(s)`; tableaux within a level are independent. Results are memoized
    /// and returned in reading-word order.
    pub fn all_vectors(&self, exec: Execution) -> Result<Vec<(Tableau, Arc<SpechtVector>)>> {
        let mut levels: BTreeMap<usize, Vec<Tableau>> = BTreeMap::new();
        for t in enumerate_standard(self.shape()) {
            levels.entry(inversions(&t)).or_default().push(t);
        }
        for level in levels.values() {
            let computed = exec.map_ref(level, |s| -> Result<()> {
                if self.cached(s).is_some() {
                    return Ok(());
                }
                let i = canonical_raise(s).expect("non-initial tableau can be raised");
                let up = s.swap_entries(i);
                let f_up = self.cached(&up).expect("previous level is complete");
                let f = Arc::new(self.step(&up, &f_up, i)?);
                self.vectors.entry(s.clone()).or_insert(f);
                Ok(())
            });
            computed.into_iter().collect::<Result<Vec<()>>>()?;
        }
        let mut out: Vec<(Tableau, Arc<SpechtVector>)> = levels
            .into_values()
            .flatten()
            .map(|s| {
                let f = self.cached(&s).expect("computed above");
                (s, f)
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Every transition row of the shape, in reading-word order.
    pub fn all_transition_rows(&self, exec: Execution) -> Result<Vec<TransitionRow>> {
        Ok(self
            .all_vectors(exec)?
            .into_iter()
            .map(|(s, f)| {
                let denominator = f.denominator();
                TransitionRow {
                    source: s,
                    coeffs: (*f).clone(),
                    denominator,
                }
            })
            .collect())
    }
}

/// Length of `d(s)`: inversions of the reading word.
fn inversions(s: &Tableau) -> usize {
    let w = s.reading_word();
    let mut count = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                count += 1;
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------

/// Shape-indexed cache of modules and bases, shared across computations.
#[derive(Debug, Default)]
pub struct Engine {
    exec: Execution,
    bases: DashMap<Partition, Arc<SeminormalBasis>>,
}

impl Engine {
    pub fn new(exec: Execution) -> Self {
        Engine {
            exec,
            bases: DashMap::new(),
        }
    }

    pub fn exec(&self) -> Execution {
        self.exec
    }

    pub fn basis(&self, shape: &Partition) -> Arc<SeminormalBasis> {
        if let Some(b) = self.bases.get(shape) {
            return Arc::clone(b.value());
        }
        let b = Arc::new(SeminormalBasis::for_shape(shape));
        Arc::clone(self.bases.entry(shape.clone()).or_insert(b).value())
    }

    pub fn module(&self, shape: &Partition) -> Arc<SpechtModule> {
        Arc::clone(self.basis(shape).module())
    }

    /// Drops every cached basis.
    pub fn clear(&self) {
        self.bases.clear();
    }

    pub fn seminormal_vector(&self, s: &Tableau) -> Result<Arc<SpechtVector>> {
        self.basis(&s.partition_shape()?).seminormal_vector(s)
    }

    pub fn transition_row(&self, s: &Tableau) -> Result<TransitionRow> {
        self.basis(&s.partition_shape()?).transition_row(s)
    }

    pub fn d_element(&self, s: &Tableau) -> Result<AlgebraElement> {
        self.basis(&s.partition_shape()?).d_element(s)
    }

    /// `λ↑ν = t^λ↑ν`.
    pub fn up_arrow(lambda: &Partition, nu: &Partition) -> Result<Tableau> {
        Tableau::initial_of(lambda).up_arrow(nu)
    }

    /// `f_{λ↑ν}`.
    pub fn up_arrow_vector(&self, lambda: &Partition, nu: &Partition) -> Result<Arc<SpechtVector>> {
        self.basis(nu).seminormal_vector(&Engine::up_arrow(lambda, nu)?)
    }

    /// `d_{λ↑ν}`.
    pub fn up_arrow_denominator(&self, lambda: &Partition, nu: &Partition) -> Result<BigInt> {
        Ok(self.up_arrow_vector(lambda, nu)?.denominator())
    }

    /// `D(λ↑ν)`.
    pub fn up_arrow_d_element(&self, lambda: &Partition, nu: &Partition) -> Result<AlgebraElement> {
        self.basis(nu).d_element(&Engine::up_arrow(lambda, nu)?)
    }
}
