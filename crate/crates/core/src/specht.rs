//! The dual Specht module in its standard basis.
//!
//! A polytabloid `e_t` depends only on the tabloid of `t`, so every tableau is
//! row-standardized before straightening. Straightening uses the Garnir
//! exchange at the first column violation (topmost, then leftmost) and is
//! memoized per module in a concurrent map.

use std::collections::BTreeMap;
use std::sync::Arc;

use dashmap::DashMap;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinat::{dominates_unchecked, Partition, Tableau};
use crate::permalg::{AlgebraElement, Permutation};
use crate::rational::{lcm_denominators, FractionRecord, Rational};
use crate::{Error, Result};

/// Integer expansion of a polytabloid in the standard basis, sorted.
pub type Expansion = Vec<(Tableau, BigInt)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtVector {
    shape: Partition,
    coords: BTreeMap<Tableau, Rational>,
}

impl SpechtVector {
    pub fn zero(shape: &Partition) -> Self {
        SpechtVector {
            shape: shape.clone(),
            coords: BTreeMap::new(),
        }
    }

    /// `e_t` for a standard `t`.
    pub fn unit(t: &Tableau) -> Result<Self> {
        let shape = t.partition_shape()?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!("{t} is not standard")));
        }
        let mut v = SpechtVector::zero(&shape);
        v.coords.insert(t.clone(), Rational::one());
        Ok(v)
    }

    /// Builds a vector from standard tableaux of shape `shape`.
    pub fn from_coords<I>(shape: &Partition, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Tableau, Rational)>,
    {
        let mut v = SpechtVector::zero(shape);
        for (t, c) in coords {
            if t.partition_shape()? != *shape || !t.is_standard() {
                return Err(Error::InvalidTableau(format!("{t} is not a standard ({shape})-tableau")));
            }
            v.add_term(&t, &c);
        }
        Ok(v)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn coeff(&self, t: &Tableau) -> Rational {
        self.coords.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    /// Non-zero coordinates in reading-word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Tableau, &Rational)> {
        self.coords.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Tableau> {
        self.coords.keys()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub(crate) fn add_term(&mut self, t: &Tableau, c: &Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(v) = self.coords.get_mut(t) {
            *v += c;
            if v.is_zero() {
                self.coords.remove(t);
            }
        } else {
            self.coords.insert(t.clone(), c.clone());
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SpechtVector, c: &Rational) -> Result<()> {
        self.check_shape(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (t, v) in &other.coords {
            self.add_term(t, &(v * c));
        }
        Ok(())
    }

    pub fn add(&self, other: &SpechtVector) -> Result<SpechtVector> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &SpechtVector) -> Result<SpechtVector> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SpechtVector {
        if c.is_zero() {
            return SpechtVector::zero(&self.shape);
        }
        SpechtVector {
            shape: self.shape.clone(),
            coords: self.coords.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    /// Least positive `k` with `k·v` integral; 1 for the zero vector.
    pub fn denominator(&self) -> BigInt {
        lcm_denominators(self.coords.values())
    }

    fn check_shape(&self, other: &SpechtVector) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("({}) vs ({})", self.shape, other.shape)))
        }
    }
}

pub fn vector_denominator(v: &SpechtVector) -> BigInt {
    v.denominator()
}

#[derive(Serialize)]
struct CoordRecord<'a> {
    tableau: &'a Tableau,
    num: String,
    den: String,
}

impl Serialize for SpechtVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for (t, c) in &self.coords {
            let f = FractionRecord::from(c);
            seq.serialize_element(&CoordRecord {
                tableau: t,
                num: f.num,
                den: f.den,
            })?;
        }
        seq.end()
    }
}

// ---------------------------------------------------------------------------
// Garnir exchanges

/// Column violations `(i, j)` (0-based) with `t(i,j) > t(i+1,j)`, in reading order.
pub fn violations(t: &Tableau) -> Vec<(usize, usize)> {
    let rows = t.rows();
    let mut out = Vec::new();
    for i in 0..rows.len().saturating_sub(1) {
        for (j, (&a, &b)) in rows[i].iter().zip(rows[i + 1]).enumerate() {
            if a > b {
                out.push((i, j));
            }
        }
    }
    out
}

fn first_violation(t: &Tableau) -> Option<(usize, usize)> {
    let rows = t.rows();
    for i in 0..rows.len().saturating_sub(1) {
        for (j, (&a, &b)) in rows[i].iter().zip(rows[i + 1]).enumerate() {
            if a > b {
                return Some((i, j));
            }
        }
    }
    None
}

/// The exchanges `τ·t`, `τ ∈ G_{X,Y} ∖ {1}`, at the violation `(i, j)`, with
/// `X` the entries of row `i` from column `j` on and `Y` those of row `i+1`
/// up to column `j`. Outputs are row-standard, and `e_t = −Σ e_{τ·t}`.
pub fn garnir_exchanges(t: &Tableau, i: usize, j: usize) -> Vec<Tableau> {
    let rows = t.rows();
    let upper = rows[i];
    let lower = rows[i + 1];
    let x: Vec<u8> = upper[j..].to_vec();
    let mut pool: Vec<u8> = x.iter().chain(&lower[..=j]).copied().collect();
    pool.sort_unstable();
    let mut out = Vec::new();
    for z in pool.iter().copied().combinations(x.len()) {
        let mut zs = z.clone();
        zs.sort_unstable();
        let mut xs = x.clone();
        xs.sort_unstable();
        if zs == xs {
            continue;
        }
        let mut new_upper: Vec<u8> = upper[..j].iter().copied().chain(z.iter().copied()).collect();
        let mut new_lower: Vec<u8> = pool
            .iter()
            .copied()
            .filter(|e| !z.contains(e))
            .chain(lower[j + 1..].iter().copied())
            .collect();
        new_upper.sort_unstable();
        new_lower.sort_unstable();
        let mut new_rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        new_rows[i] = new_upper;
        new_rows[i + 1] = new_lower;
        let shape = t.raw_shape().to_vec();
        out.push(Tableau::from_raw(shape, new_rows.concat()));
    }
    out
}

/// One straightening step at the first violation: `e_t = Σ sign · e_u` over
/// the returned `(sign, u)`, every sign being `−1`.
pub fn garnir_step(t: &Tableau) -> Result<Vec<(i8, Tableau)>> {
    t.partition_shape()?;
    if !t.is_row_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not row-standard")));
    }
    let (i, j) = first_violation(t).ok_or(Error::AlreadyStandard)?;
    Ok(garnir_exchanges(t, i, j).into_iter().map(|u| (-1, u)).collect())
}

// ---------------------------------------------------------------------------

/// The dual Specht module of one shape, with its straightening memo.
#[derive(Debug)]
pub struct SpechtModule {
    shape: Partition,
    memo: DashMap<Tableau, Arc<Expansion>>,
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Self {
        SpechtModule {
            shape: shape.clone(),
            memo: DashMap::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn check_tableau(&self, t: &Tableau) -> Result<()> {
        if t.partition_shape().ok().as_ref() != Some(&self.shape) {
            return Err(Error::ShapeMismatch(format!("{t} is not a ({})-tableau", self.shape)));
        }
        Ok(())
    }

    /// `e_t` in the standard basis; integer coefficients.
    pub fn polytabloid(&self, t: &Tableau) -> Result<SpechtVector> {
        let exp = self.expansion(t)?;
        let mut v = SpechtVector::zero(&self.shape);
        for (s, c) in exp.iter() {
            v.coords.insert(s.clone(), Rational::from_integer(c.clone()));
        }
        Ok(v)
    }

    /// The integer expansion of `e_t`, sorted by reading word.
    pub fn expansion(&self, t: &Tableau) -> Result<Arc<Expansion>> {
        self.check_tableau(t)?;
        Ok(self.straighten(&t.row_standardize()))
    }

    fn straighten(&self, t: &Tableau) -> Arc<Expansion> {
        if t.is_column_standard() {
            return Arc::new(vec![(t.clone(), BigInt::one())]);
        }
        if let Some(hit) = self.memo.get(t) {
            return Arc::clone(hit.value());
        }
        let (i, j) = first_violation(t).expect("row-standard, non-standard tableau has a violation");
        let mut acc: BTreeMap<Tableau, BigInt> = BTreeMap::new();
        for u in garnir_exchanges(t, i, j) {
            debug_assert!(dominates_unchecked(&u, t) && u != *t);
            for (s, c) in self.straighten(&u).iter() {
                *acc.entry(s.clone()).or_insert_with(BigInt::zero) -= c;
            }
        }
        let exp: Expansion = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let exp = Arc::new(exp);
        Arc::clone(self.memo.entry(t.clone()).or_insert(exp).value())
    }

    /// `e_t` computed with a random violation at every step and no memo.
    pub fn polytabloid_randomized<R: Rng>(&self, t: &Tableau, rng: &mut R) -> Result<SpechtVector> {
        self.check_tableau(t)?;
        let mut acc: BTreeMap<Tableau, BigInt> = BTreeMap::new();
        straighten_randomized(&t.row_standardize(), &BigInt::one(), rng, &mut acc);
        let mut v = SpechtVector::zero(&self.shape);
        for (s, c) in acc {
            v.add_term(&s, &Rational::from_integer(c));
        }
        Ok(v)
    }

    /// `σ · v`, extending `σ e_t = e_{σ·t}` linearly.
    pub fn act_perm(&self, sigma: &Permutation, v: &SpechtVector) -> Result<SpechtVector> {
        self.check_vector(v)?;
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: sigma.n(),
                right: self.n(),
            });
        }
        let mut out = SpechtVector::zero(&self.shape);
        for (t, c) in v.iter() {
            let u = sigma.act_on_tableau(t)?.row_standardize();
            self.accumulate(&u, c, &mut out);
        }
        Ok(out)
    }

    /// `s_i · v` for the basic transposition `s_i`.
    pub fn act_basic(&self, i: usize, v: &SpechtVector) -> Result<SpechtVector> {
        self.check_vector(v)?;
        if i == 0 || i >= self.n() {
            return Err(Error::OutOfRange(format!("s_{i} is not a basic transposition of S_{}", self.n())));
        }
        let mut out = SpechtVector::zero(&self.shape);
        for (t, c) in v.iter() {
            let u = t.swap_entries(i).row_standardize();
            self.accumulate(&u, c, &mut out);
        }
        Ok(out)
    }

    /// `A · v = Σ_σ A(σ) σ·v`.
    pub fn act_alg(&self, a: &AlgebraElement, v: &SpechtVector) -> Result<SpechtVector> {
        self.check_vector(v)?;
        if a.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: a.n(),
                right: self.n(),
            });
        }
        let mut out = SpechtVector::zero(&self.shape);
        for (sigma, coeff) in a.terms() {
            for (t, c) in v.iter() {
                let u = sigma.act_on_tableau(t)?.row_standardize();
                self.accumulate(&u, &(coeff * c), &mut out);
            }
        }
        Ok(out)
    }

    fn accumulate(&self, row_standard: &Tableau, c: &Rational, out: &mut SpechtVector) {
        if row_standard.is_column_standard() {
            out.add_term(row_standard, c);
            return;
        }
        for (s, k) in self.straighten(row_standard).iter() {
            out.add_term(s, &(c * Rational::from_integer(k.clone())));
        }
    }

    fn check_vector(&self, v: &SpechtVector) -> Result<()> {
        if v.shape() == &self.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("({}) vs ({})", v.shape(), self.shape)))
        }
    }
}

fn straighten_randomized<R: Rng>(
    t: &Tableau,
    coeff: &BigInt,
    rng: &mut R,
    acc: &mut BTreeMap<Tableau, BigInt>,
) {
    let vs = violations(t);
    let Some(&(i, j)) = vs.choose(rng) else {
        *acc.entry(t.clone()).or_insert_with(BigInt::zero) += coeff;
        return;
    };
    let neg = -coeff;
    for u in garnir_exchanges(t, i, j) {
        straighten_randomized(&u, &neg, rng, acc);
    }
}
