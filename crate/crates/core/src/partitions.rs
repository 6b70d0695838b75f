//! Partitions, Young diagrams, standard-tableau counts, and r-tuples of
//! diagrams (multipartitions), the index set of Irrep(G(r,1,n)).
//!
//! Canonical orders are fixed so that all emitted output is byte-stable:
//! partitions of a given size are listed in reverse-lexicographic order
//! ((4), (3,1), (2,2), (2,1,1), (1,1,1,1)); across sizes, larger diagrams
//! sort first. Multipartitions compare componentwise, left to right.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("restriction of an empty multipartition")]
    EmptyRestriction,
}

/// A partition: weakly decreasing sequence of positive integers. The empty
/// partition (size 0) is printed as "-".
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of distinct part values; 0 for the empty partition.
    pub fn distinct_parts(&self) -> usize {
        let mut count = 0;
        let mut prev = None;
        for &p in &self.parts {
            if Some(p) != prev {
                count += 1;
                prev = Some(p);
            }
        }
        count
    }

    /// Conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts }
    }

    /// Row-end cells whose removal leaves a valid diagram, as 1-indexed
    /// (row, col) pairs, top to bottom. There are `distinct_parts` of them.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let is_last = i + 1 == self.parts.len();
            if is_last || self.parts[i] > self.parts[i + 1] {
                out.push((i + 1, self.parts[i] as usize));
            }
        }
        out
    }

    /// Positions where a cell may be added, as 1-indexed (row, col) pairs.
    /// There are `distinct_parts + 1` of them.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i == 0 || self.parts[i] < self.parts[i - 1] {
                out.push((i + 1, self.parts[i] as usize + 1));
            }
        }
        out.push((self.parts.len() + 1, 1));
        out
    }

    /// Removes the row-end cell of the given 1-indexed row.
    pub fn remove_cell(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        assert!(row >= 1 && row <= parts.len(), "row out of range");
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.remove(row - 1);
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "illegal removal");
        Partition { parts }
    }

    /// Adds a cell at the end of the given 1-indexed row (which may be one
    /// past the last row).
    pub fn add_cell(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        assert!(row >= 1 && row <= parts.len() + 1, "row out of range");
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "illegal addition");
        Partition { parts }
    }

    /// All partitions τ ≠ λ of the same size reachable by removing one
    /// removable cell and re-adding a cell to the intermediate diagram.
    pub fn block_move_neighbors(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for (row, _) in self.removable_cells() {
            let intermediate = self.remove_cell(row);
            for (arow, _) in intermediate.addable_cells() {
                let target = intermediate.add_cell(arow);
                if target != *self {
                    out.insert(target);
                }
            }
        }
        out
    }

    /// Hook length of the 0-indexed cell (i, j).
    fn hook_length(&self, conj: &Partition, i: usize, j: usize) -> u64 {
        let arm = self.parts[i] as u64 - j as u64 - 1;
        let leg = conj.parts[j] as u64 - i as u64 - 1;
        arm + leg + 1
    }

    /// Number of standard Young tableaux of this shape, n!/Π(hooks); equals
    /// the dimension of the corresponding S_n-irreducible.
    pub fn syt_count(&self) -> u64 {
        let n = self.size() as u128;
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] as usize {
                hooks *= self.hook_length(&conj, i, j) as u128;
            }
        }
        let fact: u128 = (1..=n).product();
        let dim = fact / hooks;
        debug_assert_eq!(dim * hooks, fact, "hook lengths must divide n!");
        dim as u64
    }

    /// All standard Young tableaux of this shape, each given as the cell
    /// (row, col) of every label 1..n, 0-indexed cells. Used as a brute-force
    /// oracle and as the seminormal basis.
    pub fn standard_tableaux(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.size() as usize;
        let mut fills = Vec::new();
        let mut row_len = vec![0usize; self.parts.len()];
        let mut current = Vec::with_capacity(n);
        fn rec(
            shape: &[u32],
            row_len: &mut Vec<usize>,
            current: &mut Vec<(usize, usize)>,
            n: usize,
            fills: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if current.len() == n {
                fills.push(current.clone());
                return;
            }
            for i in 0..shape.len() {
                let legal = row_len[i] < shape[i] as usize
                    && (i == 0 || row_len[i] < row_len[i - 1]);
                if legal {
                    current.push((i, row_len[i]));
                    row_len[i] += 1;
                    rec(shape, row_len, current, n, fills);
                    row_len[i] -= 1;
                    current.pop();
                }
            }
        }
        rec(&self.parts, &mut row_len, &mut current, n, &mut fills);
        fills
    }
}

/// Canonical total order: larger size first, then reverse-lexicographic on
/// the parts. Matches the order produced by `enumerate_partitions`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.parts.cmp(&self.parts))
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
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

/// All partitions of n, in reverse-lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(n: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let top = n.min(max);
        for k in (1..=top).rev() {
            current.push(k);
            rec(n - k, k, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// A reference to a cell of a multipartition; all indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRef {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

/// An r-tuple of partitions with total size n. Components are 1-indexed in
/// all printed forms, matching the λ⁽¹⁾..λ⁽ʳ⁾ convention; the character
/// oracle's colors 0..r−1 correspond to component index − 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "multipartition needs at least one component");
        MultiPartition { components }
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(|p| p.size()).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// 1-indexed component access.
    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i - 1]
    }

    /// All removable cells across components, in component order.
    pub fn removable_cells(&self) -> Vec<CellRef> {
        let mut out = Vec::new();
        for (ci, p) in self.components.iter().enumerate() {
            for (row, col) in p.removable_cells() {
                out.push(CellRef { component: ci + 1, row, col });
            }
        }
        out
    }

    pub fn with_cell_removed(&self, component: usize, row: usize) -> MultiPartition {
        let mut components = self.components.clone();
        components[component - 1] = components[component - 1].remove_cell(row);
        MultiPartition { components }
    }

    pub fn with_cell_added(&self, component: usize, row: usize) -> MultiPartition {
        let mut components = self.components.clone();
        components[component - 1] = components[component - 1].add_cell(row);
        MultiPartition { components }
    }

    /// dim V_λ = multinomial(n; n_1..n_r) · Π syt(λ⁽ⁱ⁾).
    pub fn dim(&self) -> u64 {
        let n = self.size() as u128;
        let mut fact: u128 = (1..=n).product();
        for p in &self.components {
            let k = p.size() as u128;
            let kfact: u128 = (1..=k).product();
            fact /= kfact;
        }
        let mut dim = fact;
        for p in &self.components {
            dim *= p.syt_count() as u128;
        }
        dim as u64
    }

    /// The trivial tuple ((n), -, …, -).
    pub fn trivial(r: usize, n: u32) -> Self {
        let mut components = vec![Partition::empty(); r];
        components[0] = Partition::single_row(n);
        MultiPartition { components }
    }

    /// The standard tuple ((n−1), (1), -, …, -), the defining representation
    /// of G(r,1,n) for r ≥ 2.
    pub fn standard(r: usize, n: u32) -> Self {
        assert!(r >= 2 && n >= 1);
        let mut components = vec![Partition::empty(); r];
        components[0] = Partition::single_row(n - 1);
        components[1] = Partition::single_row(1);
        MultiPartition { components }
    }
}

impl Ord for MultiPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.components.cmp(&other.components)
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join("|"))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for MultiPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        let components: Result<Vec<Partition>, _> =
            inner.split('|').map(|c| c.parse::<Partition>()).collect();
        Ok(MultiPartition::new(components?))
    }
}

/// All compositions of n into r nonnegative parts, lexicographically
/// decreasing; (n,0,…,0) first, (0,…,0,n) last.
fn compositions(r: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; r];
    fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == current.len() {
            current[pos] = left;
            out.push(current.clone());
            return;
        }
        for k in (0..=left).rev() {
            current[pos] = k;
            rec(pos + 1, left - k, current, out);
        }
    }
    rec(0, n, &mut current, &mut out);
    out
}

/// All r-tuples of partitions with total size n, in canonical order:
/// compositions of n in decreasing lexicographic order, then the cartesian
/// product of per-component partition lists with the last component varying
/// fastest. This order coincides with the `Ord` on `MultiPartition`.
pub fn enumerate_multipartitions(r: usize, n: u32) -> Vec<MultiPartition> {
    assert!(r >= 1);
    let per_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    for comp in compositions(r, n) {
        let lists: Vec<&Vec<Partition>> = comp.iter().map(|&k| &per_size[k as usize]).collect();
        let mut idx = vec![0usize; r];
        loop {
            let components: Vec<Partition> =
                idx.iter().zip(lists.iter()).map(|(&i, l)| l[i].clone()).collect();
            out.push(MultiPartition { components });
            // advance odometer, last component fastest
            let mut pos = r;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < lists[pos].len() {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_matches_reverse_lex() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        let four = enumerate_partitions(4);
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        // Independent count via the dynamic-programming partition numbers.
        let mut table = vec![vec![0u64; 9]; 9];
        for k in 0..=8 {
            table[0][k] = 1;
        }
        for n in 1..=8usize {
            for k in 1..=8usize {
                table[n][k] = table[n][k - 1] + if n >= k { table[n - k][k] } else { 0 };
            }
        }
        for n in 0..=8usize {
            assert_eq!(enumerate_partitions(n as u32).len() as u64, table[n][8]);
        }
    }

    #[test]
    fn distinct_parts_examples() {
        assert_eq!(p(&[3, 3, 2]).distinct_parts(), 2);
        assert_eq!(p(&[7]).distinct_parts(), 1);
        assert_eq!(p(&[2, 1, 1]).distinct_parts(), 2);
        assert_eq!(Partition::empty().distinct_parts(), 0);
    }

    #[test]
    fn removable_and_addable_cells() {
        assert_eq!(p(&[2, 2]).removable_cells(), vec![(2, 2)]);
        assert_eq!(p(&[3, 1]).removable_cells().len(), 2);
        assert_eq!(Partition::empty().addable_cells(), vec![(1, 1)]);
        assert_eq!(p(&[2, 2]).addable_cells(), vec![(1, 3), (3, 1)]);
    }

    #[test]
    fn block_moves_match_s4_quiver_edges() {
        let neighbors = |x: &Partition| -> Vec<Partition> {
            x.block_move_neighbors().into_iter().collect()
        };
        assert_eq!(neighbors(&p(&[4])), vec![p(&[3, 1])]);
        assert_eq!(neighbors(&p(&[2, 2])), vec![p(&[3, 1]), p(&[2, 1, 1])]);
        assert!(neighbors(&p(&[1])).is_empty());
    }

    #[test]
    fn syt_counts() {
        assert_eq!(p(&[2, 2]).syt_count(), 2);
        assert_eq!(p(&[9]).syt_count(), 1);
        // brute force oracle for (3,1)
        assert_eq!(p(&[3, 1]).standard_tableaux().len(), 3);
        assert_eq!(p(&[3, 1]).syt_count(), 3);
    }

    #[test]
    fn multipartition_enumeration_count_and_order() {
        let mps = enumerate_multipartitions(2, 2);
        let strings: Vec<String> = mps.iter().map(|m| m.to_string()).collect();
        assert_eq!(strings, vec!["[2|-]", "[1,1|-]", "[1|1]", "[-|2]", "[-|1,1]"]);
        assert_eq!(
            enumerate_multipartitions(1, 4)
                .into_iter()
                .map(|m| m.components()[0].clone())
                .collect::<Vec<_>>(),
            enumerate_partitions(4)
        );
        assert_eq!(enumerate_multipartitions(3, 0).len(), 1);
        assert_eq!(enumerate_multipartitions(3, 0)[0].to_string(), "[-|-|-]");
    }

    #[test]
    fn multipartition_dims() {
        let m: MultiPartition = "[2,1|1|-]".parse().unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(MultiPartition::trivial(3, 7).dim(), 1);
        assert_eq!(MultiPartition::standard(4, 6).dim(), 6);
    }

    #[test]
    fn squared_dims_sum_to_group_order() {
        for n in 0..=8u32 {
            let total: u64 = enumerate_partitions(n).iter().map(|p| p.syt_count().pow(2)).sum();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(total, fact);
        }
        for (r, n) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3), (4, 3), (2, 4)] {
            let total: u64 = enumerate_multipartitions(r as usize, n)
                .iter()
                .map(|m| m.dim().pow(2))
                .sum();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(total, (r as u64).pow(n) * fact, "r={} n={}", r, n);
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in ["[3,1|1|-]", "[-|-|-]", "[2,2,1|-]"] {
            let m: MultiPartition = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert!("(3,1)".parse::<MultiPartition>().is_err());
        assert!("[3,1|x]".parse::<MultiPartition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let mps = enumerate_multipartitions(3, 3);
        let mut sorted = mps.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), mps.len());
    }

    fn arb_partition(max_n: u32) -> impl Strategy<Value = Partition> {
        (0..=max_n).prop_flat_map(|n| {
            let all = enumerate_partitions(n);
            let len = all.len();
            (0..len).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn cell_counts_match_distinct_parts(lam in arb_partition(12)) {
            prop_assert_eq!(lam.removable_cells().len(), lam.distinct_parts());
            prop_assert_eq!(lam.addable_cells().len(), lam.distinct_parts() + 1);
        }

        #[test]
        fn block_move_is_symmetric(lam in arb_partition(9)) {
            for tau in lam.block_move_neighbors() {
                prop_assert!(tau.block_move_neighbors().contains(&lam));
            }
        }

        #[test]
        fn conjugate_is_involutive(lam in arb_partition(12)) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }
}
