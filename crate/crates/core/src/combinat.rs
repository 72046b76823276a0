//! Partitions, compositions, tableaux and the colour/weight bookkeeping.
//!
//! Tableaux are stored densely: the row lengths plus the entries in row
//! reading order. The derived `Ord` therefore compares shapes first and then
//! reading words lexicographically, which is the total order used for every
//! enumeration in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Hard limit on the number of boxes; entries are stored as `u8`.
pub const MAX_BOXES: usize = 255;

// ---------------------------------------------------------------------------
// Compositions and partitions

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `row`-th part (1-based); zero past the end.
    pub fn part(&self, row: usize) -> usize {
        row.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1]) && self.parts.iter().all(|&p| p > 0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::new(self.parts.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts.clone(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// `true` iff `lambda` dominates `mu`: every prefix sum of `lambda` is at
/// least the corresponding prefix sum of `mu`.
pub fn dominance_leq(mu: &Composition, lambda: &Composition) -> bool {
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0usize, 0usize);
    for row in 1..=len {
        sm += mu.part(row);
        sl += lambda.part(row);
        if sl < sm {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts trailing zeros; rejects increasing or interior-zero sequences.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let p = Partition { parts };
        if p.size() > MAX_BOXES {
            return Err(Error::OutOfRange(format!("at most {MAX_BOXES} boxes supported")));
        }
        Ok(p)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `row`-th part (1-based); zero past the end.
    pub fn part(&self, row: usize) -> usize {
        row.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Number of non-zero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `[other] ⊆ [self]`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn check_contains(&self, inner: &Partition) -> Result<()> {
        if self.contains(inner) {
            Ok(())
        } else {
            Err(Error::NotContained {
                lambda: inner.to_string(),
                nu: self.to_string(),
            })
        }
    }

    /// `(λ₁+m, λ₂, …)`.
    pub fn add_to_first_row(&self, m: usize) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            if m > 0 {
                parts.push(m);
            }
        } else {
            parts[0] += m;
        }
        Partition { parts }
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&a| self.part(a + 1) < self.part(a))
            .map(|a| Node::new(a, self.part(a)))
            .collect()
    }

    /// Removes the last node of `row`, which must be removable.
    pub fn remove_node(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.len() || self.part(row + 1) >= self.part(row) {
            return Err(Error::Precondition(format!(
                "row {row} of ({self}) has no removable node"
            )));
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Partition::new(parts)
    }

    /// Adds a node at the end of `row` if the result is a partition.
    pub fn add_node(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 {
            return None;
        }
        if row > 1 && self.part(row - 1) <= self.part(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Rows `from..=len` (1-based), dropping the rows above.
    pub fn rows_from(&self, from: usize) -> Partition {
        Partition {
            parts: self.parts.iter().skip(from.saturating_sub(1)).copied().collect(),
        }
    }

    /// Rows `1..=to` (1-based).
    pub fn rows_to(&self, to: usize) -> Partition {
        Partition {
            parts: self.parts.iter().take(to).copied().collect(),
        }
    }

    /// `ν − λ` as a composition.
    pub fn skew_difference(&self, inner: &Partition) -> Result<Composition> {
        self.check_contains(inner)?;
        Ok(Composition::new(
            (1..=self.len()).map(|r| self.part(r) - inner.part(r)).collect(),
        ))
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions whose diagram lies inside `[self]`, including the empty one.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn rec(outer: &Partition, row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if row > outer.len() {
                return;
            }
            for p in (1..=max.min(outer.part(row))).rev() {
                cur.push(p);
                rec(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 1, self.part(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Number of standard tableaux of shape `lambda`, by the hook length formula.
pub fn hook_length_count(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut num = BigUint::one();
    for i in 2..=n {
        num *= BigUint::from(i);
    }
    let mut den = BigUint::one();
    for row in 1..=lambda.len() {
        for col in 1..=lambda.part(row) {
            let arm = lambda.part(row) - col;
            let leg = (row + 1..=lambda.len()).filter(|&r| lambda.part(r) >= col).count();
            den *= BigUint::from(arm + leg + 1);
        }
    }
    num / den
}

// ---------------------------------------------------------------------------
// Nodes

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    pub fn residue(&self) -> i64 {
        residue(*self)
    }
}

pub fn residue(node: Node) -> i64 {
    node.col as i64 - node.row as i64
}

pub fn removable_nodes(lambda: &Partition) -> Vec<Node> {
    lambda.removable_nodes()
}

// ---------------------------------------------------------------------------
// Tableaux

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Vec<u8>,
    entries: Vec<u8>,
}

impl Tableau {
    /// Builds a tableau from its rows; the entries must be exactly `1..=n`.
    /// Empty rows are allowed (the shape is then a composition).
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Tableau> {
        let mut shape: Vec<u8> = Vec::with_capacity(rows.len());
        let mut entries = Vec::new();
        for row in rows {
            let row = row.as_ref();
            if row.len() > MAX_BOXES {
                return Err(Error::OutOfRange(format!("at most {MAX_BOXES} boxes supported")));
            }
            shape.push(row.len() as u8);
            for &x in row {
                if x == 0 || x > MAX_BOXES {
                    return Err(Error::InvalidTableau(format!("entry {x} out of range")));
                }
                entries.push(x as u8);
            }
        }
        while shape.last() == Some(&0) {
            shape.pop();
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &x in &entries {
            let x = x as usize;
            if x > n || seen[x] {
                return Err(Error::InvalidTableau(format!(
                    "entries are not a bijection onto 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Tableau { shape, entries })
    }

    pub(crate) fn from_raw(shape: Vec<u8>, entries: Vec<u8>) -> Tableau {
        debug_assert_eq!(shape.iter().map(|&r| r as usize).sum::<usize>(), entries.len());
        Tableau { shape, entries }
    }

    /// Rows filled left to right, top to bottom with `1..=n`.
    pub fn initial(shape: &Composition) -> Tableau {
        let n = shape.size();
        Tableau {
            shape: shape.parts().iter().map(|&p| p as u8).collect(),
            entries: (1..=n as u8).collect(),
        }
    }

    pub fn initial_of(lambda: &Partition) -> Tableau {
        Tableau::initial(&Composition::from(lambda))
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.shape.iter().map(|&r| r as usize).collect())
    }

    /// The shape as a partition, if it is one.
    pub fn partition_shape(&self) -> Result<Partition> {
        Partition::new(self.shape.iter().map(|&r| r as usize).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.shape.len()
    }

    pub fn row_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.shape.iter().map(|&r| r as usize)
    }

    /// The entries in reading order (row 1 left to right, then row 2, ...).
    pub fn reading_word(&self) -> &[u8] {
        &self.entries
    }

    /// Row `i` (0-based) as a slice.
    pub fn row(&self, i: usize) -> &[u8] {
        let start: usize = self.shape[..i].iter().map(|&r| r as usize).sum();
        &self.entries[start..start + self.shape[i] as usize]
    }

    pub fn rows(&self) -> Vec<&[u8]> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut start = 0;
        for &len in &self.shape {
            out.push(&self.entries[start..start + len as usize]);
            start += len as usize;
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows()
            .into_iter()
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// The entry at a 1-based node.
    pub fn entry(&self, node: Node) -> Option<usize> {
        if node.row == 0 || node.col == 0 || node.row > self.shape.len() {
            return None;
        }
        self.row(node.row - 1).get(node.col - 1).map(|&x| x as usize)
    }

    /// `pos[x]` is the 0-based `(row, col)` of entry `x`; index 0 is unused.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.n() + 1];
        let mut idx = 0;
        for (r, &len) in self.shape.iter().enumerate() {
            for c in 0..len as usize {
                pos[self.entries[idx] as usize] = (r, c);
                idx += 1;
            }
        }
        pos
    }

    /// `rows[x]` is the 0-based row of entry `x`; index 0 is unused.
    pub fn row_of_entries(&self) -> Vec<usize> {
        let mut out = vec![0; self.n() + 1];
        let mut idx = 0;
        for (r, &len) in self.shape.iter().enumerate() {
            for _ in 0..len {
                out[self.entries[idx] as usize] = r;
                idx += 1;
            }
        }
        out
    }

    /// The 1-based node holding `x`.
    pub fn position_of(&self, x: usize) -> Option<Node> {
        let idx = self.entries.iter().position(|&e| e as usize == x)?;
        let mut start = 0;
        for (r, &len) in self.shape.iter().enumerate() {
            if idx < start + len as usize {
                return Some(Node::new(r + 1, idx - start + 1));
            }
            start += len as usize;
        }
        None
    }

    /// `res_t(x) = col − row` of the node holding `x`.
    pub fn residue_of(&self, x: usize) -> Option<i64> {
        self.position_of(x).map(residue)
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        let rows = self.rows();
        rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len() && pair[1].iter().zip(pair[0]).all(|(b, a)| a < b)
        })
    }

    pub fn is_standard(&self) -> bool {
        self.shape.windows(2).all(|w| w[0] >= w[1])
            && self.is_row_standard()
            && self.is_column_standard()
    }

    /// The row-standard representative of the tabloid of `self`.
    pub fn row_standardize(&self) -> Tableau {
        let mut entries = self.entries.clone();
        let mut start = 0;
        for &len in &self.shape {
            entries[start..start + len as usize].sort_unstable();
            start += len as usize;
        }
        Tableau {
            shape: self.shape.clone(),
            entries,
        }
    }

    /// The subtableau on the entries `1..=r`; its shape is a composition.
    pub fn restrict(&self, r: usize) -> Result<Tableau> {
        if r == 0 || r > self.n() {
            return Err(Error::OutOfRange(format!("restriction to {r} of a tableau of size {}", self.n())));
        }
        let rows: Vec<Vec<usize>> = self
            .rows()
            .into_iter()
            .map(|row| row.iter().filter(|&&x| x as usize <= r).map(|&x| x as usize).collect())
            .collect();
        Tableau::from_rows(&rows)
    }

    /// `s↑ν`: the skew nodes of `[ν] ∖ [Shape(s)]` are filled row by row with
    /// `n+1, n+2, …`.
    pub fn up_arrow(&self, nu: &Partition) -> Result<Tableau> {
        let lambda = self.partition_shape()?;
        if !self.is_standard() {
            return Err(Error::InvalidTableau("up-arrow needs a standard tableau".into()));
        }
        nu.check_contains(&lambda)?;
        let rows = self.rows();
        let mut next = self.n() as u8;
        let mut out_rows: Vec<Vec<u8>> = Vec::with_capacity(nu.len());
        for r in 0..nu.len() {
            let mut row: Vec<u8> = rows.get(r).map(|s| s.to_vec()).unwrap_or_default();
            while row.len() < nu.part(r + 1) {
                next += 1;
                row.push(next);
            }
            out_rows.push(row);
        }
        Ok(Tableau {
            shape: out_rows.iter().map(|r| r.len() as u8).collect(),
            entries: out_rows.concat(),
        })
    }

    /// Swaps the entries `i` and `i+1`.
    pub fn swap_entries(&self, i: usize) -> Tableau {
        let mut entries = self.entries.clone();
        for e in entries.iter_mut() {
            if *e as usize == i {
                *e = (i + 1) as u8;
            } else if *e as usize == i + 1 {
                *e = i as u8;
            }
        }
        Tableau {
            shape: self.shape.clone(),
            entries,
        }
    }

    /// Relabels entries by `images` (1-based: `x ↦ images[x-1]`).
    pub(crate) fn relabel(&self, images: &[u8]) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&x| images[x as usize - 1]).collect(),
        }
    }

    pub(crate) fn raw_shape(&self) -> &[u8] {
        &self.shape
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        Tableau::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// `true` iff `s ⊵ t`: for every `r`, `Shape(s↓r) ⊵ Shape(t↓r)`.
pub fn dominance_tableau_leq(t: &Tableau, s: &Tableau) -> Result<bool> {
    if t.raw_shape() != s.raw_shape() {
        return Err(Error::ShapeMismatch(format!("{t} vs {s}")));
    }
    Ok(dominates_unchecked(s, t))
}

/// `s ⊵ t` for tableaux of a common shape.
pub(crate) fn dominates_unchecked(s: &Tableau, t: &Tableau) -> bool {
    let rows = s.num_rows();
    let rs = s.row_of_entries();
    let rt = t.row_of_entries();
    let mut cs = vec![0usize; rows];
    let mut ct = vec![0usize; rows];
    for x in 1..=s.n() {
        cs[rs[x]] += 1;
        ct[rt[x]] += 1;
        let (mut ps, mut pt) = (0, 0);
        for r in 0..rows {
            ps += cs[r];
            pt += ct[r];
            if ps < pt {
                return false;
            }
        }
    }
    true
}

/// All standard tableaux of shape `lambda`, sorted by reading word.
pub fn enumerate_standard(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let rows = lambda.len();
    let mut filled = vec![0usize; rows];
    let mut grid: Vec<Vec<u8>> = lambda.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fn rec(
        x: usize,
        n: usize,
        lambda: &Partition,
        filled: &mut [usize],
        grid: &mut [Vec<u8>],
        out: &mut Vec<Tableau>,
    ) {
        if x > n {
            out.push(Tableau {
                shape: lambda.parts().iter().map(|&p| p as u8).collect(),
                entries: grid.concat(),
            });
            return;
        }
        for r in 0..filled.len() {
            if filled[r] < lambda.part(r + 1) && (r == 0 || filled[r - 1] > filled[r]) {
                filled[r] += 1;
                grid[r].push(x as u8);
                rec(x + 1, n, lambda, filled, grid, out);
                grid[r].pop();
                filled[r] -= 1;
            }
        }
    }
    rec(1, n, lambda, &mut filled, &mut grid, &mut out);
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Colours

/// Colours of `1..=|ν|` relative to `λ ⊆ ν`: the colour of `x` is its
/// (1-based) row in the initial tableau of the composition `ν_λ`, the
/// concatenation of `λ` and `ν − λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourProfile {
    lambda: Partition,
    nu: Partition,
    content: Vec<usize>,
    colour_of: Vec<usize>,
}

impl ColourProfile {
    pub fn new(lambda: &Partition, nu: &Partition) -> Result<Self> {
        nu.check_contains(lambda)?;
        let mut content: Vec<usize> = lambda.parts().to_vec();
        content.extend((1..=nu.len()).map(|r| nu.part(r) - lambda.part(r)));
        while content.last() == Some(&0) {
            content.pop();
        }
        let mut colour_of = vec![0; nu.size() + 1];
        let mut x = 1;
        for (c, &count) in content.iter().enumerate() {
            for _ in 0..count {
                colour_of[x] = c + 1;
                x += 1;
            }
        }
        Ok(ColourProfile {
            lambda: lambda.clone(),
            nu: nu.clone(),
            content,
            colour_of,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    /// `ν_λ`: how many integers carry each colour `c_1, c_2, …`.
    pub fn content(&self) -> &[usize] {
        &self.content
    }

    pub fn colour_of(&self, x: usize) -> usize {
        self.colour_of[x]
    }

    /// Integers carrying colour `c`, increasing.
    pub fn integers_of_colour(&self, c: usize) -> std::ops::RangeInclusive<usize> {
        let start: usize = self.content[..c - 1].iter().sum::<usize>() + 1;
        start..=start + self.content.get(c - 1).copied().unwrap_or(0) - 1
    }

    /// Colours strictly increase down every column.
    pub fn is_colour_semistandard(&self, t: &Tableau) -> bool {
        let rows = t.rows();
        rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(pair[0])
                .all(|(&b, &a)| self.colour_of[a as usize] < self.colour_of[b as usize])
        })
    }
}

/// `SSTab(λ; ν−λ)`: standard `ν`-tableaux whose colours strictly increase down
/// columns, sorted by reading word.
///
/// Generated directly: first the semistandard colour fillings of `[ν]` with
/// content `ν_λ` (each colour a horizontal strip), then every way of
/// distributing a colour's integers among the rows it occupies.
pub fn colour_semistandard_tableaux(lambda: &Partition, nu: &Partition) -> Result<Vec<Tableau>> {
    let profile = ColourProfile::new(lambda, nu)?;
    let rows = nu.len();
    let mut strips: Vec<Vec<Vec<usize>>> = Vec::new();
    colour_strips(nu, profile.content(), 0, &mut vec![0; rows], &mut Vec::new(), &mut strips);

    let mut out = Vec::new();
    for counts in strips {
        let mut grid: Vec<Vec<u8>> = vec![Vec::new(); rows];
        distribute(&profile, &counts, 0, &mut grid, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Enumerates, colour by colour, how many cells of each row receive that
/// colour so that the filling is a semistandard tableau of shape `nu`.
fn colour_strips(
    nu: &Partition,
    content: &[usize],
    c: usize,
    shape: &mut Vec<usize>,
    acc: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if c == content.len() {
        if (1..=nu.len()).all(|r| shape[r - 1] == nu.part(r)) {
            out.push(acc.clone());
        }
        return;
    }
    let mut add = vec![0; shape.len()];
    #[allow(clippy::too_many_arguments)]
    fn rows_rec(
        nu: &Partition,
        content: &[usize],
        c: usize,
        r: usize,
        left: usize,
        shape: &mut Vec<usize>,
        add: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if r == shape.len() {
            if left == 0 {
                for i in 0..shape.len() {
                    shape[i] += add[i];
                }
                acc.push(add.clone());
                colour_strips(nu, content, c + 1, shape, acc, out);
                acc.pop();
                for i in 0..shape.len() {
                    shape[i] -= add[i];
                }
            }
            return;
        }
        // horizontal strip: new length of row r at most the old length of row r-1
        let cap_above = if r == 0 { usize::MAX } else { shape[r - 1] };
        let max_new = nu.part(r + 1).min(cap_above);
        let max_add = max_new.saturating_sub(shape[r]).min(left);
        for a in 0..=max_add {
            add[r] = a;
            rows_rec(nu, content, c, r + 1, left - a, shape, add, acc, out);
        }
        add[r] = 0;
    }
    rows_rec(nu, content, c, 0, content[c], shape, &mut add, acc, out);
}

fn distribute(
    profile: &ColourProfile,
    counts: &[Vec<usize>],
    c: usize,
    grid: &mut Vec<Vec<u8>>,
    out: &mut Vec<Tableau>,
) {
    if c == counts.len() {
        out.push(Tableau {
            shape: grid.iter().map(|r| r.len() as u8).collect(),
            entries: grid.concat(),
        });
        return;
    }
    let ints: Vec<u8> = profile.integers_of_colour(c + 1).map(|x| x as u8).collect();
    let per_row = &counts[c];
    #[allow(clippy::too_many_arguments)]
    fn assign(
        profile: &ColourProfile,
        counts: &[Vec<usize>],
        c: usize,
        ints: &[u8],
        idx: usize,
        remaining: &mut Vec<usize>,
        grid: &mut Vec<Vec<u8>>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == ints.len() {
            distribute(profile, counts, c + 1, grid, out);
            return;
        }
        for r in 0..remaining.len() {
            if remaining[r] > 0 {
                remaining[r] -= 1;
                grid[r].push(ints[idx]);
                assign(profile, counts, c, ints, idx + 1, remaining, grid, out);
                grid[r].pop();
                remaining[r] += 1;
            }
        }
    }
    let mut remaining = per_row.clone();
    assign(profile, counts, c, &ints, 0, &mut remaining, grid, out);
}

// ---------------------------------------------------------------------------
// Weights for shapes (k, ℓ^s) + (m)

/// Parameters of the family `λ = (k, ℓ^s)`, `ν = λ + (m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KlsParams {
    pub k: usize,
    pub l: usize,
    pub s: usize,
    pub m: usize,
}

impl KlsParams {
    pub fn new(k: usize, l: usize, s: usize, m: usize) -> Result<Self> {
        if l == 0 || k < l {
            return Err(Error::Precondition(format!("need k ≥ ℓ ≥ 1, got k={k}, ℓ={l}")));
        }
        Ok(KlsParams { k, l, s, m })
    }

    pub fn lambda(&self) -> Partition {
        let mut parts = vec![self.k];
        parts.extend(std::iter::repeat_n(self.l, self.s));
        Partition { parts }
    }

    pub fn nu(&self) -> Partition {
        self.lambda().add_to_first_row(self.m)
    }

    /// `min(ℓ, m)`: the bound on the weight sum.
    pub fn weight_bound(&self) -> usize {
        self.l.min(self.m)
    }

    /// `W^{min(ℓ,m)}_s`, in lexicographic order.
    pub fn weights(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        fn rec(len: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Weight>) {
            if cur.len() == len {
                out.push(Weight(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur.push(v);
                rec(len, left - v, cur, out);
                cur.pop();
            }
        }
        rec(self.s, self.weight_bound(), &mut Vec::new(), &mut out);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn unit(len: usize, j: usize) -> Weight {
        let mut v = vec![0; len];
        v[j - 1] = 1;
        Weight(v)
    }
}

/// The weight of a colour-semistandard tableau of shape `(k+m, ℓ^s)`:
/// entry `i` counts the first-row integers with colour `c_{i+1}`.
pub fn weight_of(t: &Tableau, params: KlsParams) -> Result<Weight> {
    let nu = params.nu();
    if t.partition_shape()? != nu {
        return Err(Error::ShapeMismatch(format!("{t} is not of shape ({nu})")));
    }
    let profile = ColourProfile::new(&params.lambda(), &nu)?;
    if !t.is_standard() || !profile.is_colour_semistandard(t) {
        return Err(Error::NotColourSemistandard(t.to_string()));
    }
    let mut w = vec![0; params.s];
    for &x in t.row(0) {
        let c = profile.colour_of(x as usize);
        if (2..=params.s + 1).contains(&c) {
            w[c - 2] += 1;
        }
    }
    Ok(Weight(w))
}

/// The representative `s_w` of weight `w`: starting from `λ↑m`, for
/// `j = s, …, 1` swap the rightmost `w_1+…+w_j` integers of colour `c_{j+1}`
/// in row `j+1` with the leftmost as many integers of colour `c_{j+2}` in
/// row 1.
pub fn tableau_from_weight(w: &Weight, k: usize, l: usize, m: usize) -> Result<Tableau> {
    let params = KlsParams::new(k, l, w.0.len(), m)?;
    if w.total() > params.weight_bound() {
        return Err(Error::OutOfRange(format!(
            "weight sum {} exceeds min(ℓ,m) = {}",
            w.total(),
            params.weight_bound()
        )));
    }
    let lambda = params.lambda();
    let nu = params.nu();
    let profile = ColourProfile::new(&lambda, &nu)?;
    let start = Tableau::initial_of(&lambda).up_arrow(&nu)?;
    let mut rows: Vec<Vec<u8>> = start.rows().iter().map(|r| r.to_vec()).collect();
    for j in (1..=params.s).rev() {
        let cnt: usize = w.0[..j].iter().sum();
        if cnt == 0 {
            continue;
        }
        let lower: Vec<usize> = rows[j]
            .iter()
            .enumerate()
            .filter(|(_, &x)| profile.colour_of(x as usize) == j + 1)
            .map(|(i, _)| i)
            .collect();
        let upper: Vec<usize> = rows[0]
            .iter()
            .enumerate()
            .filter(|(_, &x)| profile.colour_of(x as usize) == j + 2)
            .map(|(i, _)| i)
            .collect();
        if lower.len() < cnt || upper.len() < cnt {
            return Err(Error::Precondition(format!("weight {:?} cannot be realised", w.0)));
        }
        let lower = &lower[lower.len() - cnt..];
        let upper = &upper[..cnt];
        for (&a, &b) in lower.iter().zip(upper) {
            let tmp = rows[j][a];
            rows[j][a] = rows[0][b];
            rows[0][b] = tmp;
        }
        rows[0].sort_unstable();
        rows[j].sort_unstable();
    }
    Ok(Tableau {
        shape: rows.iter().map(|r| r.len() as u8).collect(),
        entries: rows.concat(),
    })
}

// ---------------------------------------------------------------------------
// Q(s) and P(s) for SSTab(λ; 1)

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QpSets {
    /// Rows `i ≥ 2` holding an integer whose colour is not `c_i`.
    pub q: Vec<usize>,
    /// The minimum of each block of `q`.
    pub p: Vec<usize>,
    /// `q` split by the part size `λ_i` of its rows.
    pub blocks: BTreeMap<usize, Vec<usize>>,
}

pub fn qp_sets(t: &Tableau, lambda: &Partition) -> Result<QpSets> {
    let nu = lambda.add_to_first_row(1);
    let profile = ColourProfile::new(lambda, &nu)?;
    if t.partition_shape()? != nu || !t.is_standard() || !profile.is_colour_semistandard(t) {
        return Err(Error::NotColourSemistandard(t.to_string()));
    }
    let q: Vec<usize> = (2..=lambda.len())
        .filter(|&i| t.row(i - 1).iter().any(|&x| profile.colour_of(x as usize) != i))
        .collect();
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in &q {
        blocks.entry(lambda.part(i)).or_default().push(i);
    }
    let mut p: Vec<usize> = blocks.values().map(|b| b[0]).collect();
    p.sort_unstable();
    Ok(QpSets { q, p, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::from_rows(rows).unwrap()
    }

    #[test]
    fn dominance_on_compositions() {
        let c = |v: &[usize]| Composition::new(v.to_vec());
        assert!(dominance_leq(&c(&[2, 2]), &c(&[3, 1])));
        assert!(!dominance_leq(&c(&[3, 1]), &c(&[2, 2])));
        assert!(dominance_leq(&c(&[1, 1, 1]), &c(&[1, 1, 1])));
        assert!(dominance_leq(&c(&[0, 2]), &c(&[1, 1])));
        assert_eq!(c(&[2, 0, 0]), c(&[2]));
    }

    #[test]
    fn removable_nodes_and_residues() {
        assert_eq!(part("4,3,3").removable_nodes(), vec![Node::new(1, 4), Node::new(3, 3)]);
        assert_eq!(part("1").removable_nodes(), vec![Node::new(1, 1)]);
        assert_eq!(part("3,1").removable_nodes(), vec![Node::new(1, 3), Node::new(2, 1)]);
        assert_eq!(residue(Node::new(2, 3)), 1);
        assert_eq!(residue(Node::new(1, 1)), 0);
        assert_eq!(residue(Node::new(4, 1)), -3);
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(part("4,3,3").parts(), &[4, 3, 3]);
        assert_eq!(part(" 2, 1 ").to_string(), "2,1");
        assert!(part("").is_empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn initial_tableaux() {
        assert_eq!(Tableau::initial_of(&part("2,1")), tab(&[&[1, 2], &[3]]));
        assert_eq!(Tableau::initial_of(&part("3")), tab(&[&[1, 2, 3]]));
        assert_eq!(Tableau::initial_of(&part("2,2")), tab(&[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn up_arrow_examples() {
        let t = Tableau::initial_of(&part("2,2"));
        assert_eq!(
            t.up_arrow(&part("4,3,2")).unwrap(),
            tab(&[&[1, 2, 5, 6], &[3, 4, 7], &[8, 9]])
        );
        let t = Tableau::initial_of(&part("2,1"));
        assert_eq!(t.up_arrow(&part("3,1")).unwrap(), tab(&[&[1, 2, 4], &[3]]));
        assert_eq!(t.up_arrow(&part("2,1")).unwrap(), t);
        assert!(matches!(t.up_arrow(&part("3")), Err(Error::NotContained { .. })));
    }

    #[test]
    fn restriction_and_standardization() {
        let t = tab(&[&[1, 2, 4], &[3]]);
        assert_eq!(t.restrict(3).unwrap(), tab(&[&[1, 2], &[3]]));
        assert_eq!(t.restrict(4).unwrap(), t);
        assert_eq!(tab(&[&[1, 3], &[2, 4]]).restrict(2).unwrap(), tab(&[&[1], &[2]]));
        assert!(t.restrict(0).is_err());
        assert!(t.restrict(5).is_err());
        assert_eq!(tab(&[&[2, 1], &[3, 4]]).row_standardize(), tab(&[&[1, 2], &[3, 4]]));
        assert_eq!(tab(&[&[4, 1, 2], &[3]]).row_standardize(), tab(&[&[1, 2, 4], &[3]]));
    }

    #[test]
    fn restriction_can_leave_empty_rows() {
        let t = tab(&[&[1, 2], &[3]]);
        let r = t.restrict(2).unwrap();
        assert_eq!(r.shape(), Composition::new(vec![2]));
    }

    #[test]
    fn from_rows_rejects_non_bijections() {
        assert!(Tableau::from_rows(&[vec![1, 1]]).is_err());
        assert!(Tableau::from_rows(&[vec![1, 3]]).is_err());
        assert!(Tableau::from_rows(&[vec![0]]).is_err());
    }

    #[test]
    fn standard_counts_match_hook_lengths() {
        assert_eq!(enumerate_standard(&part("2,1")).len(), 2);
        assert_eq!(enumerate_standard(&part("2,2")).len(), 2);
        assert_eq!(enumerate_standard(&part("5")).len(), 1);
        for n in 0..=7 {
            for lambda in Partition::all_of_size(n) {
                let all = enumerate_standard(&lambda);
                assert_eq!(BigUint::from(all.len()), hook_length_count(&lambda), "{lambda}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(Tableau::is_standard));
            }
        }
    }

    #[test]
    fn partitions_of_small_sizes() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(part("2,1").sub_partitions().len(), 5);
    }

    #[test]
    fn tableau_dominance() {
        let t = tab(&[&[1, 3], &[2, 4]]);
        let s = tab(&[&[1, 2], &[3, 4]]);
        assert!(dominance_tableau_leq(&t, &t).unwrap());
        assert!(dominance_tableau_leq(&t, &s).unwrap());
        assert!(!dominance_tableau_leq(&s, &t).unwrap());
        assert!(dominance_tableau_leq(&t, &tab(&[&[1, 2, 3], &[4]])).is_err());
        let lambda = part("3,2,1");
        let top = Tableau::initial_of(&lambda);
        for u in enumerate_standard(&lambda) {
            assert!(dominance_tableau_leq(&u, &top).unwrap());
        }
    }

    #[test]
    fn colour_semistandard_examples() {
        let got = colour_semistandard_tableaux(&part("2,1"), &part("3,1")).unwrap();
        assert_eq!(got, vec![tab(&[&[1, 2, 3], &[4]]), tab(&[&[1, 2, 4], &[3]])]);
        let lambda = part("3,2");
        assert_eq!(
            colour_semistandard_tableaux(&lambda, &lambda).unwrap(),
            vec![Tableau::initial_of(&lambda)]
        );
        assert_eq!(
            colour_semistandard_tableaux(&part("3"), &part("5")).unwrap(),
            vec![Tableau::initial_of(&part("5"))]
        );
    }

    #[test]
    fn colour_semistandard_matches_filtered_enumeration() {
        for n in 0..=7 {
            for nu in Partition::all_of_size(n) {
                let all = enumerate_standard(&nu);
                for lambda in nu.sub_partitions() {
                    let profile = ColourProfile::new(&lambda, &nu).unwrap();
                    let expected: Vec<Tableau> = all
                        .iter()
                        .filter(|t| profile.is_colour_semistandard(t))
                        .cloned()
                        .collect();
                    let got = colour_semistandard_tableaux(&lambda, &nu).unwrap();
                    assert_eq!(got, expected, "λ=({lambda}) ν=({nu})");
                }
            }
        }
    }

    #[test]
    fn colour_profile_counts() {
        let p = ColourProfile::new(&part("2,1"), &part("3,1")).unwrap();
        assert_eq!(p.content(), &[2, 1, 1]);
        assert_eq!((1..=4).map(|x| p.colour_of(x)).collect::<Vec<_>>(), vec![1, 1, 2, 3]);
        let p = ColourProfile::new(&part("2,2"), &part("3,3")).unwrap();
        assert_eq!(p.content(), &[2, 2, 1, 1]);
        assert_eq!(p.integers_of_colour(4), 6..=6);
    }

    #[test]
    fn weights_and_representatives() {
        let w = Weight(vec![2, 1]);
        let t = tableau_from_weight(&w, 3, 3, 3).unwrap();
        assert_eq!(t, tab(&[&[1, 2, 3, 5, 6, 9], &[4, 7, 8], &[10, 11, 12]]));
        let params = KlsParams::new(3, 3, 2, 3).unwrap();
        assert_eq!(weight_of(&t, params).unwrap(), w);

        let t = tableau_from_weight(&Weight(vec![0, 1]), 3, 1, 1).unwrap();
        assert_eq!(t, tab(&[&[1, 2, 3, 5], &[4], &[6]]));

        let p = KlsParams::new(2, 1, 1, 1).unwrap();
        assert_eq!(weight_of(&tab(&[&[1, 2, 3], &[4]]), p).unwrap(), Weight(vec![1]));

        let zero = tableau_from_weight(&Weight(vec![0, 0]), 4, 2, 1).unwrap();
        let lambda = KlsParams::new(4, 2, 2, 1).unwrap().lambda();
        assert_eq!(zero, Tableau::initial_of(&lambda).up_arrow(&lambda.add_to_first_row(1)).unwrap());
        assert!(tableau_from_weight(&Weight(vec![1, 1]), 3, 1, 3).is_err());
    }

    #[test]
    fn weight_round_trip_small() {
        for k in 1..=4 {
            for l in 1..=k {
                for s in 1..=3 {
                    for m in 1..=3 {
                        let params = KlsParams::new(k, l, s, m).unwrap();
                        for w in params.weights() {
                            let t = tableau_from_weight(&w, k, l, m).unwrap();
                            assert_eq!(weight_of(&t, params).unwrap(), w);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn qp_examples() {
        let lambda = part("2,1");
        let top = Tableau::initial_of(&lambda).up_arrow(&part("3,1")).unwrap();
        let qp = qp_sets(&top, &lambda).unwrap();
        assert!(qp.q.is_empty() && qp.p.is_empty());
        let qp = qp_sets(&tab(&[&[1, 2, 3], &[4]]), &lambda).unwrap();
        assert_eq!(qp.q, vec![2]);
        assert_eq!(qp.p, vec![2]);
    }
}
