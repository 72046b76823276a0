//! Permutations in one-line form and the sparse rational group algebra.
//!
//! Composition is right to left: `(a∘b)(x) = a(b(x))`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::combinat::{Tableau, MAX_BOXES};
use crate::rational::{lcm_denominators, FractionRecord, Rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// From the one-line form `[σ(1), …, σ(n)]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_BOXES {
            return Err(Error::OutOfRange(format!("at most {MAX_BOXES} points supported")));
        }
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// The transposition `(a, b)` on `[1, n]`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::OutOfRange(format!("({a},{b}) outside [1,{n}]")));
        }
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The basic transposition `s_i = (i, i+1)`.
    pub fn basic(n: usize, i: usize) -> Result<Self> {
        Permutation::transposition(n, i, i + 1)
    }

    /// Product of cycles, applied right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (1..=n).collect();
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange(format!("cycle entry {x} outside [1,{n}]")));
                }
                images[x - 1] = cycle[(i + 1) % cycle.len()];
            }
            acc = Permutation::from_one_line(&images)?.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { images }
    }

    /// `σ^{+k}` on `[1, ambient]`: fixes `[1,k]` and `(x+k) ↦ σ(x)+k`.
    pub fn shift(&self, k: usize, ambient: usize) -> Result<Permutation> {
        if ambient < self.n() + k || ambient > MAX_BOXES {
            return Err(Error::OutOfRange(format!(
                "shift by {k} of a permutation of [1,{}] does not fit in [1,{ambient}]",
                self.n()
            )));
        }
        let mut images: Vec<u8> = (1..=ambient as u8).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + k] = x + k as u8;
        }
        Ok(Permutation { images })
    }

    /// The same permutation on a larger ground set.
    pub fn extend(&self, ambient: usize) -> Result<Permutation> {
        self.shift(0, ambient)
    }

    /// `σ·t`: replaces every entry `x` of `t` by `σ(x)`.
    pub fn act_on_tableau(&self, t: &Tableau) -> Result<Tableau> {
        if self.n() != t.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: t.n(),
            });
        }
        Ok(t.relabel(&self.images))
    }

    /// Smallest and largest points moved, if any.
    pub fn moved_range(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (1..=self.n()).filter(|&x| self.apply(x) != x).collect();
        Some((*moved.first()?, *moved.last()?))
    }
}

/// `d(s)`, the permutation with `d(s)·t^λ = s`. Its one-line form is the
/// reading word of `s`.
pub fn d_of(s: &Tableau) -> Permutation {
    Permutation {
        images: s.reading_word().to_vec(),
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

// ---------------------------------------------------------------------------

/// A finitely supported map `S_n → Q`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: HashMap<Permutation, Rational>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        AlgebraElement::delta(Permutation::identity(n))
    }

    pub fn delta(sigma: Permutation) -> Self {
        AlgebraElement::scaled_delta(sigma, Rational::one())
    }

    pub fn scaled_delta(sigma: Permutation, c: Rational) -> Self {
        let mut a = AlgebraElement::zero(sigma.n());
        a.add_term(sigma, c);
        a
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut a = AlgebraElement::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::SizeMismatch { left: n, right: p.n() });
            }
            a.add_term(p, c);
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, sigma: &Permutation) -> Rational {
        self.terms.get(sigma).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms sorted by one-line form.
    pub fn terms(&self) -> Vec<(&Permutation, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, sigma: Permutation, c: Rational) {
        debug_assert_eq!(sigma.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(sigma) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Convolution product `self · other`.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_size(other)?;
        let mut out = AlgebraElement::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.compose(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Term-wise `σ ↦ σ^{+k}` into `S_ambient`.
    pub fn shift(&self, k: usize, ambient: usize) -> Result<AlgebraElement> {
        if ambient < self.n + k {
            return Err(Error::OutOfRange(format!("shift by {k} does not fit in [1,{ambient}]")));
        }
        let mut out = AlgebraElement::zero(ambient);
        for (p, c) in &self.terms {
            out.add_term(p.shift(k, ambient)?, c.clone());
        }
        Ok(out)
    }

    /// lcm of the coefficient denominators.
    pub fn denominator(&self) -> BigInt {
        lcm_denominators(self.terms.values())
    }

    /// Points moved by some permutation in the support.
    pub fn moved_points(&self) -> Vec<usize> {
        let mut moved = vec![false; self.n + 1];
        for p in self.terms.keys() {
            for (x, flag) in moved.iter_mut().enumerate().skip(1) {
                if p.apply(x) != x {
                    *flag = true;
                }
            }
        }
        (1..=self.n).filter(|&x| moved[x]).collect()
    }

    fn check_size(&self, other: &AlgebraElement) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms()).finish()
    }
}

#[derive(Serialize)]
struct TermRecord {
    perm: Vec<usize>,
    num: String,
    den: String,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms()
            .into_iter()
            .map(|(p, c)| {
                let f = FractionRecord::from(c);
                TermRecord {
                    perm: p.one_line(),
                    num: f.num,
                    den: f.den,
                }
            })
            .collect();
        records.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Permutation::transposition(3, 1, 2).unwrap();
        let b = Permutation::transposition(3, 2, 3).unwrap();
        let ab = a.compose(&b).unwrap();
        // pointwise: 1 ↦ b:1 ↦ a:2, 2 ↦ 3 ↦ 3, 3 ↦ 2 ↦ 1
        assert_eq!(ab.one_line(), vec![2, 3, 1]);
        assert_eq!(ab, Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap());
        assert!(a.compose(&a).unwrap().is_identity());
        assert_eq!(Permutation::identity(3).compose(&b).unwrap(), b);
        assert!(a.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn inverse_and_bijection_checks() {
        let p = perm(&[3, 1, 4, 2]);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
    }

    #[test]
    fn d_of_examples() {
        let t = Tableau::from_rows(&[vec![1, 3], vec![2]]).unwrap();
        assert_eq!(d_of(&t), Permutation::transposition(3, 2, 3).unwrap());
        let t = Tableau::from_rows(&[vec![1, 2, 4], vec![3]]).unwrap();
        assert_eq!(d_of(&t), Permutation::transposition(4, 3, 4).unwrap());
        let init = Tableau::from_rows(&[vec![1, 2], vec![3]]).unwrap();
        assert!(d_of(&init).is_identity());
        assert_eq!(d_of(&t).act_on_tableau(&Tableau::from_rows(&[vec![1, 2, 3], vec![4]]).unwrap()).unwrap(), t);
    }

    #[test]
    fn shifts() {
        let id = Permutation::identity(2);
        assert!(id.shift(5, 7).unwrap().is_identity());
        let t = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(t.shift(3, 5).unwrap(), Permutation::transposition(5, 4, 5).unwrap());
        assert!(t.shift(3, 4).is_err());
        let a = AlgebraElement::from_terms(2, [(t.clone(), rat(1, 2)), (id, int(3))]).unwrap();
        let sa = a.shift(2, 4).unwrap();
        assert_eq!(sa.len(), 2);
        assert_eq!(sa.coeff(&Permutation::transposition(4, 3, 4).unwrap()), rat(1, 2));
        assert_eq!(sa.coeff(&Permutation::identity(4)), int(3));
    }

    #[test]
    fn action_on_tableaux() {
        let t = Tableau::from_rows(&[vec![1, 2, 3], vec![4]]).unwrap();
        let p = Permutation::transposition(4, 3, 4).unwrap();
        assert_eq!(p.act_on_tableau(&t).unwrap(), Tableau::from_rows(&[vec![1, 2, 4], vec![3]]).unwrap());
        let t = Tableau::from_rows(&[vec![1, 2], vec![3]]).unwrap();
        let p = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(p.act_on_tableau(&t).unwrap(), Tableau::from_rows(&[vec![2, 1], vec![3]]).unwrap());
        assert_eq!(Permutation::identity(3).act_on_tableau(&t).unwrap(), t);
    }

    #[test]
    fn algebra_products() {
        let t12 = Permutation::transposition(3, 1, 2).unwrap();
        let t23 = Permutation::transposition(3, 2, 3).unwrap();
        let x = AlgebraElement::from_terms(3, [(t12.clone(), int(1)), (t23.clone(), int(1))]).unwrap();
        assert_eq!(AlgebraElement::unit(3).mul(&x).unwrap(), x);
        let half = AlgebraElement::scaled_delta(t12.clone(), rat(1, 2));
        let two = AlgebraElement::scaled_delta(t12.clone(), int(2));
        assert_eq!(half.mul(&two).unwrap(), AlgebraElement::unit(3));
        let prod = x.mul(&AlgebraElement::delta(t12.clone())).unwrap();
        let expected = AlgebraElement::from_terms(
            3,
            [(Permutation::identity(3), int(1)), (t23.compose(&t12).unwrap(), int(1))],
        )
        .unwrap();
        assert_eq!(prod, expected);
        assert!(x.mul(&AlgebraElement::unit(4)).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let t = Permutation::transposition(2, 1, 2).unwrap();
        let a = AlgebraElement::delta(t.clone());
        let b = AlgebraElement::scaled_delta(t, int(-1));
        assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn serialization_is_sorted() {
        let a = AlgebraElement::from_terms(
            2,
            [(Permutation::transposition(2, 1, 2).unwrap(), rat(-1, 3)), (Permutation::identity(2), int(1))],
        )
        .unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"[{"perm":[1,2],"num":"1","den":"1"},{"perm":[2,1],"num":"-1","den":"3"}]"#
        );
    }
}
