//! Exact character-theoretic oracle for G(r,1,n): conjugacy classes of the
//! wreath product μ_r ≀ S_n, Murnaghan–Nakayama character values, inner
//! products, tensor multiplicities, and the verification routines that
//! compare every combinatorial quiver against character arithmetic.
//!
//! Character values live in ℚ(ζ_r); no floating point anywhere.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::clifford::irreps_grpn;
use crate::cyclotomic::{Cyclo, Rational};
use crate::mckay::{mckay_grpn, mckay_quiver};
use crate::partitions::{enumerate_multipartitions, MultiPartition, Partition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("size mismatch: character of shape with {shape} cells evaluated on class with {class} cells")]
    SizeMismatch { shape: u32, class: u32 },
    #[error("group order {size} exceeds the oracle bound {bound}")]
    SizeBoundExceeded { size: u64, bound: u64 },
    #[error("class functions defined on different class lists")]
    ClassListMismatch,
    #[error(transparent)]
    Clifford(#[from] crate::clifford::CliffordError),
    #[error(transparent)]
    Quiver(#[from] crate::mckay::QuiverError),
}

/// A conjugacy class of G(r,1,n): for each color j = 0..r−1 the partition of
/// cycle lengths whose cycle product is ζ_r^j. Total cells = n.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct WreathClass {
    cycles: Vec<Partition>,
}

impl WreathClass {
    pub fn new(cycles: Vec<Partition>) -> Self {
        assert!(!cycles.is_empty());
        WreathClass { cycles }
    }

    pub fn r(&self) -> usize {
        self.cycles.len()
    }

    pub fn total(&self) -> u32 {
        self.cycles.iter().map(|p| p.size()).sum()
    }

    pub fn cycles(&self) -> &[Partition] {
        &self.cycles
    }

    pub fn is_identity(&self) -> bool {
        self.total() == 0
            || (self.cycles[0].parts().iter().all(|&l| l == 1)
                && self.cycles[1..].iter().all(|p| p.is_empty()))
    }

    /// Centralizer order Π_{j,l} (l·r)^{m_{jl}} · m_{jl}!.
    pub fn centralizer_order(&self) -> u64 {
        let r = self.r() as u128;
        let mut cent: u128 = 1;
        for p in &self.cycles {
            let mut mult: HashMap<u32, u64> = HashMap::new();
            for &l in p.parts() {
                *mult.entry(l).or_insert(0) += 1;
            }
            for (l, m) in mult {
                cent *= (l as u128 * r).pow(m as u32);
                cent *= (1..=m as u128).product::<u128>();
            }
        }
        cent as u64
    }

    pub fn class_size(&self, group_order: u64) -> u64 {
        group_order / self.centralizer_order()
    }

    /// The class with one fewer cycle: removes one part `len` at `color`.
    fn without_cycle(&self, color: usize, len: u32) -> WreathClass {
        let mut cycles = self.cycles.clone();
        let mut parts = cycles[color].parts().to_vec();
        let pos = parts.iter().position(|&l| l == len).expect("cycle present");
        parts.remove(pos);
        cycles[color] = Partition::new(parts).unwrap();
        WreathClass { cycles }
    }

    /// Adds a single fixed point of the given color; the class fusion map of
    /// the embedding G(r,1,n−1) × μ_r ↪ G(r,1,n).
    pub fn with_fixed_point(&self, color: usize) -> WreathClass {
        let mut cycles = self.cycles.clone();
        let mut parts = cycles[color].parts().to_vec();
        parts.push(1);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        cycles[color] = Partition::new(parts).unwrap();
        WreathClass { cycles }
    }

    /// The largest cycle over all colors, as (color, length); ties broken by
    /// smaller color. None for the empty class.
    fn largest_cycle(&self) -> Option<(usize, u32)> {
        let mut best: Option<(usize, u32)> = None;
        for (j, p) in self.cycles.iter().enumerate() {
            if let Some(&l) = p.parts().first() {
                match best {
                    Some((_, bl)) if bl >= l => {}
                    _ => best = Some((j, l)),
                }
            }
        }
        best
    }
}

impl fmt::Display for WreathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.cycles.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join("|"))
    }
}

/// All conjugacy classes of G(r,1,n), in the canonical multipartition
/// enumeration order reinterpreted with color indices 0..r−1.
pub fn enumerate_classes(r: usize, n: u32) -> Vec<WreathClass> {
    enumerate_multipartitions(r, n)
        .into_iter()
        .map(|mp| WreathClass { cycles: mp.components().to_vec() })
        .collect()
}

/// Border strips (connected skew shapes with no 2×2 square) of size `len`
/// removable from `shape`, via beta-numbers: returns (smaller shape, height).
pub fn border_strips(shape: &Partition, len: u32) -> Vec<(Partition, usize)> {
    if len == 0 || shape.size() < len {
        return Vec::new();
    }
    let k = shape.rows();
    let betas: Vec<i64> = (0..k)
        .map(|i| shape.parts()[i] as i64 + (k - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for i in 0..k {
        let b = betas[i];
        let t = b - len as i64;
        if t < 0 || betas.contains(&t) {
            continue;
        }
        let mut new_betas = betas.clone();
        new_betas[i] = t;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<u32> = Vec::new();
        for (j, &nb) in new_betas.iter().enumerate() {
            let part = nb - (k - 1 - j) as i64;
            debug_assert!(part >= 0);
            if part > 0 {
                parts.push(part as u32);
            }
        }
        let height = betas.iter().filter(|&&x| t < x && x < b).count();
        out.push((Partition::new(parts).unwrap(), height));
    }
    out
}

/// Murnaghan–Nakayama for S_n: χ_λ(ρ) by recursive border-strip removal.
pub fn mn_character_sn(lambda: &Partition, rho: &Partition) -> Result<i64, OracleError> {
    if lambda.size() != rho.size() {
        return Err(OracleError::SizeMismatch { shape: lambda.size(), class: rho.size() });
    }
    fn rec(lambda: &Partition, parts: &[u32]) -> i64 {
        match parts.first() {
            None => 1,
            Some(&l) => {
                let rest = &parts[1..];
                border_strips(lambda, l)
                    .into_iter()
                    .map(|(mu, h)| if h % 2 == 0 { rec(&mu, rest) } else { -rec(&mu, rest) })
                    .sum()
            }
        }
    }
    Ok(rec(lambda, rho.parts()))
}

/// Memoizing evaluator for wreath-product Murnaghan–Nakayama values.
///
/// One cycle of length l and color j is peeled per step (largest cycle
/// first): χ_λ = Σ_k ζ_r^{jk} Σ_{strips T of size l in λ⁽ᵏ⁾} (−1)^{ht T}
/// χ_{λ∖T}. At n = 1 this reduces to the ξ^{i−1} eigenvalue of the diagonal
/// generator on a single box in component i.
pub struct CharacterEvaluator {
    r: usize,
    memo: HashMap<(MultiPartition, WreathClass), Cyclo>,
}

impl CharacterEvaluator {
    pub fn new(r: usize) -> Self {
        CharacterEvaluator { r, memo: HashMap::new() }
    }

    pub fn value(
        &mut self,
        lambda: &MultiPartition,
        class: &WreathClass,
    ) -> Result<Cyclo, OracleError> {
        if lambda.size() != class.total() {
            return Err(OracleError::SizeMismatch {
                shape: lambda.size(),
                class: class.total(),
            });
        }
        assert_eq!(lambda.r(), self.r);
        assert_eq!(class.r(), self.r);
        Ok(self.eval(lambda, class))
    }

    fn eval(&mut self, lambda: &MultiPartition, class: &WreathClass) -> Cyclo {
        let (color, len) = match class.largest_cycle() {
            None => return Cyclo::one(),
            Some(cl) => cl,
        };
        let key = (lambda.clone(), class.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let smaller_class = class.without_cycle(color, len);
        let mut total = Cyclo::zero();
        for k in 0..self.r {
            let mut inner = Cyclo::zero();
            for (mu, height) in border_strips(lambda.component(k + 1), len) {
                let mut comps = lambda.components().to_vec();
                comps[k] = mu;
                let sub = self.eval(&MultiPartition::new(comps), &smaller_class);
                inner = if height % 2 == 0 { &inner + &sub } else { &inner - &sub };
            }
            if !inner.is_zero() {
                let root = Cyclo::root_of_unity(self.r as u32, (color * k) as i64);
                total = &total + &(&root * &inner);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// mn_character_gr1n without table context; builds a throwaway evaluator.
pub fn mn_character_gr1n(
    lambda: &MultiPartition,
    class: &WreathClass,
) -> Result<Cyclo, OracleError> {
    CharacterEvaluator::new(lambda.r()).value(lambda, class)
}

/// Full exact character table of G(r,1,n).
pub struct CharacterTable {
    pub r: usize,
    pub n: u32,
    pub group_order: u64,
    pub classes: Vec<WreathClass>,
    pub class_sizes: Vec<u64>,
    pub irreps: Vec<MultiPartition>,
    /// values[i][c] = χ_{irreps[i]}(classes[c]), exact in ℚ(ζ_r).
    pub values: Vec<Vec<Cyclo>>,
}

pub fn group_order_gr1n(r: usize, n: u32) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    (r as u64).pow(n) * fact
}

impl CharacterTable {
    pub fn build(r: usize, n: u32) -> Result<Self, OracleError> {
        let classes = enumerate_classes(r, n);
        let irreps = enumerate_multipartitions(r, n);
        let group_order = group_order_gr1n(r, n);
        let class_sizes: Vec<u64> = classes.iter().map(|c| c.class_size(group_order)).collect();
        let mut evaluator = CharacterEvaluator::new(r);
        let mut values = Vec::with_capacity(irreps.len());
        for lam in &irreps {
            let mut row = Vec::with_capacity(classes.len());
            for c in &classes {
                row.push(evaluator.value(lam, c)?);
            }
            values.push(row);
        }
        Ok(CharacterTable { r, n, group_order, classes, class_sizes, irreps, values })
    }

    pub fn identity_class_index(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.is_identity())
            .expect("identity class present")
    }

    pub fn irrep_index(&self, lambda: &MultiPartition) -> Option<usize> {
        self.irreps.iter().position(|m| m == lambda)
    }

    /// ⟨χ, φ⟩ = (1/|G|) Σ_c |c| χ(c) conj(φ(c)); exact, and rational whenever
    /// both arguments are virtual characters.
    pub fn inner_product(&self, chi: &[Cyclo], phi: &[Cyclo]) -> Result<Rational, OracleError> {
        if chi.len() != self.classes.len() || phi.len() != self.classes.len() {
            return Err(OracleError::ClassListMismatch);
        }
        let mut total = Cyclo::zero();
        for ((x, y), &size) in chi.iter().zip(phi.iter()).zip(self.class_sizes.iter()) {
            let term = x * &y.conjugate();
            if !term.is_zero() {
                let scaled = term.mul_rational(&Rational::from_integer(size.into()));
                total = &total + &scaled;
            }
        }
        let avg = total.mul_rational(&Rational::new(1.into(), self.group_order.into()));
        Ok(avg
            .as_rational()
            .or_else(|| avg.reduced().as_rational())
            .expect("inner product of characters must be rational"))
    }

    /// Values of the defining reflection representation on every class: the
    /// multipartition ((n−1),(1),-,…) for r ≥ 2, the partition (n−1,1) for
    /// r = 1 (the quiver convention for S_n).
    pub fn standard_character(&self) -> Vec<Cyclo> {
        let std = standard_vertex(self.r, self.n);
        let i = self.irrep_index(&std).expect("standard representation present");
        self.values[i].clone()
    }

    /// Multiplicity of V_μ inside V_α ⊗ V_std; a nonnegative integer.
    pub fn tensor_multiplicity(
        &self,
        alpha: &MultiPartition,
        mu: &MultiPartition,
    ) -> Result<u64, OracleError> {
        let std = self.standard_character();
        let ia = self.irrep_index(alpha).ok_or(OracleError::ClassListMismatch)?;
        let im = self.irrep_index(mu).ok_or(OracleError::ClassListMismatch)?;
        let product: Vec<Cyclo> = self.values[ia]
            .iter()
            .zip(std.iter())
            .map(|(a, s)| a * s)
            .collect();
        let m = self.inner_product(&product, &self.values[im])?;
        assert!(
            m.is_integer() && m >= Rational::from_integer(0.into()),
            "tensor multiplicity must be a nonnegative integer, got {}",
            m
        );
        Ok(m.to_integer().try_into().unwrap())
    }

    /// Row orthogonality: ⟨χ_i, χ_j⟩ = δ_ij, exactly.
    pub fn check_row_orthogonality(&self) -> bool {
        for i in 0..self.irreps.len() {
            for j in 0..self.irreps.len() {
                let expect = if i == j { 1 } else { 0 };
                match self.inner_product(&self.values[i], &self.values[j]) {
                    Ok(v) if v == Rational::from_integer(expect.into()) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Column orthogonality: Σ_λ χ_λ(c) conj(χ_λ(c')) = δ_{cc'} |centralizer|.
    pub fn check_column_orthogonality(&self) -> bool {
        for c in 0..self.classes.len() {
            for c2 in 0..self.classes.len() {
                let mut total = Cyclo::zero();
                for row in &self.values {
                    total = &total + &(&row[c] * &row[c2].conjugate());
                }
                let expect = if c == c2 {
                    Cyclo::from_integer(self.classes[c].centralizer_order() as i64)
                } else {
                    Cyclo::zero()
                };
                if total != expect {
                    return false;
                }
            }
        }
        true
    }
}

/// The multipartition (or partition, for r = 1) labelling the defining
/// reflection representation used in every McKay quiver here.
pub fn standard_vertex(r: usize, n: u32) -> MultiPartition {
    if r == 1 {
        let parts = if n >= 2 { vec![n - 1, 1] } else { vec![] };
        MultiPartition::new(vec![Partition::new(parts).unwrap()])
    } else {
        MultiPartition::standard(r, n)
    }
}

/// Classes, sizes and irreducible characters of H = G(r,1,n−1) × μ_r,
/// together with the class-fusion map into G(r,1,n). Supports the Frobenius
/// reciprocity checks for the branching chain.
pub struct ProductSubgroup {
    pub r: usize,
    pub n: u32,
    /// (class of G(r,1,n−1), power of ζ_r)
    pub classes: Vec<(WreathClass, usize)>,
    pub class_sizes: Vec<u64>,
    pub order: u64,
    inner_table: CharacterTable,
}

impl ProductSubgroup {
    pub fn build(r: usize, n: u32) -> Result<Self, OracleError> {
        assert!(n >= 1);
        let inner_table = CharacterTable::build(r, n - 1)?;
        let mut classes = Vec::new();
        let mut class_sizes = Vec::new();
        for (ci, c) in inner_table.classes.iter().enumerate() {
            for j in 0..r {
                classes.push((c.clone(), j));
                class_sizes.push(inner_table.class_sizes[ci]);
            }
        }
        let order = inner_table.group_order * r as u64;
        Ok(ProductSubgroup { r, n, classes, class_sizes, order, inner_table })
    }

    /// Character of the irreducible β ⊠ i on every class of the product.
    pub fn character(&self, beta: &MultiPartition, i: usize) -> Vec<Cyclo> {
        let bi = self.inner_table.irrep_index(beta).expect("inner irrep");
        self.classes
            .iter()
            .enumerate()
            .map(|(k, (_, j))| {
                let root = Cyclo::root_of_unity(self.r as u32, (i * j) as i64);
                let ci = k / self.r;
                &self.inner_table.values[bi][ci] * &root
            })
            .collect()
    }

    pub fn inner_product(&self, chi: &[Cyclo], phi: &[Cyclo]) -> Rational {
        let mut total = Cyclo::zero();
        for ((x, y), &size) in chi.iter().zip(phi.iter()).zip(self.class_sizes.iter()) {
            let term = x * &y.conjugate();
            if !term.is_zero() {
                total = &total + &term.mul_rational(&Rational::from_integer(size.into()));
            }
        }
        total
            .mul_rational(&Rational::new(1.into(), self.order.into()))
            .as_rational()
            .expect("rational inner product")
    }

    /// Restriction of a G(r,1,n) class function along the embedding: the
    /// fused class of (h, ξ^j) gains one fixed point of color j.
    pub fn restrict_class_function(&self, table: &CharacterTable, chi: &[Cyclo]) -> Vec<Cyclo> {
        self.classes
            .iter()
            .map(|(c, j)| {
                let fused = c.with_fixed_point(*j);
                let gi = table.classes.iter().position(|x| *x == fused).unwrap();
                chi[gi].clone()
            })
            .collect()
    }

    /// Induced character: Ind φ(c) = (|C_G(c)|/|H|) Σ_{fused(k)=c} |k| φ(k).
    pub fn induce_class_function(&self, table: &CharacterTable, phi: &[Cyclo]) -> Vec<Cyclo> {
        table
            .classes
            .iter()
            .enumerate()
            .map(|(gi, gc)| {
                let centralizer = table.group_order / table.class_sizes[gi];
                let mut total = Cyclo::zero();
                for (k, (c, j)) in self.classes.iter().enumerate() {
                    if c.with_fixed_point(*j) == *gc {
                        let w = Rational::from_integer(self.class_sizes[k].into());
                        total = &total + &phi[k].mul_rational(&w);
                    }
                }
                total.mul_rational(&Rational::new(centralizer.into(), self.order.into()))
            })
            .collect()
    }
}

/// One discrepancy between a combinatorial quiver and the oracle.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub source: String,
    pub target: String,
    pub combinatorial: u64,
    pub oracle: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum VerifyStatus {
    Pass,
    Fail,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub r: usize,
    pub p: usize,
    pub n: u32,
    pub status: VerifyStatus,
    pub checked_pairs: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == VerifyStatus::Pass
    }
}

/// Compares every arrow multiplicity of the box-moving quiver Γ(G(r,1,n))
/// (Γ(S_n) for r = 1) with ⟨χ_α·χ_std, χ_β⟩. Exact integers, zero tolerance.
pub fn verify_quiver_gr1n(r: usize, n: u32, bound: u64) -> Result<VerifyReport, OracleError> {
    let size = group_order_gr1n(r, n);
    if size > bound {
        return Err(OracleError::SizeBoundExceeded { size, bound });
    }
    let quiver = mckay_quiver(r, 1, n)?;
    let table = CharacterTable::build(r, n)?;
    let std = table.standard_character();
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for (ia, _alpha) in table.irreps.iter().enumerate() {
        let product: Vec<Cyclo> = table.values[ia]
            .iter()
            .zip(std.iter())
            .map(|(a, s)| a * s)
            .collect();
        for (ib, _beta) in table.irreps.iter().enumerate() {
            let oracle_m = table.inner_product(&product, &table.values[ib])?;
            let oracle_m: u64 = oracle_m.to_integer().try_into().unwrap();
            let comb = quiver.arrow_mult(ia, ib) as u64;
            checked += 1;
            if comb != oracle_m {
                mismatches.push(Mismatch {
                    source: quiver.vertex_name(ia),
                    target: quiver.vertex_name(ib),
                    combinatorial: comb,
                    oracle: oracle_m,
                });
            }
        }
    }
    Ok(VerifyReport {
        family: if r == 1 { "Sn".into() } else { "Gr1n".into() },
        r,
        p: 1,
        n,
        status: if mismatches.is_empty() { VerifyStatus::Pass } else { VerifyStatus::Fail },
        checked_pairs: checked,
        mismatches,
    })
}

/// Verifies Γ(G(r,p,n)) against the oracle at the orbit-aggregate level:
/// for a source orbit [α] and target vertex ([β],δ'), the total arrow count
/// from the u(α) conjugate sources equals Σ_{μ ≃ β} ⟨χ_α·χ_std, χ_μ⟩, is
/// divisible by u(α), and is shared equally among the conjugates.
pub fn verify_quiver_grpn(
    r: usize,
    p: usize,
    n: u32,
    bound: u64,
) -> Result<VerifyReport, OracleError> {
    let size = group_order_gr1n(r, n);
    if size > bound {
        return Err(OracleError::SizeBoundExceeded { size, bound });
    }
    let quiver = mckay_grpn(r, p, n)?;
    let hirreps = irreps_grpn(r, p, n)?;
    let table = CharacterTable::build(r, n)?;
    let std = table.standard_character();
    let mut mismatches = Vec::new();
    let mut checked = 0u64;

    // Source orbits: one representative per orbit, with the quiver indices
    // of its u(α) conjugate vertices.
    let mut source_orbits: Vec<(MultiPartition, usize, Vec<usize>)> = Vec::new();
    for (vi, h) in hirreps.iter().enumerate() {
        if h.t == 0 {
            source_orbits.push((h.orbit.rep.clone(), h.orbit.u, vec![vi]));
        } else {
            source_orbits.last_mut().unwrap().2.push(vi);
        }
    }

    for (alpha, u_alpha, conjugates) in &source_orbits {
        let ia = table.irrep_index(alpha).unwrap();
        let product: Vec<Cyclo> = table.values[ia]
            .iter()
            .zip(std.iter())
            .map(|(a, s)| a * s)
            .collect();
        for (wi, w) in hirreps.iter().enumerate() {
            // Total multiplicity of Ind([β],δ') = ⊕_{μ ≃ β} V_μ in α ⊗ std.
            let mut total: u64 = 0;
            for mu in w.orbit.members() {
                let im = table.irrep_index(&mu).unwrap();
                let m = table.inner_product(&product, &table.values[im])?;
                let m: u64 = m.to_integer().try_into().unwrap();
                total += m;
            }
            checked += 1;
            let comb_total: u64 = conjugates
                .iter()
                .map(|&src| quiver.arrow_mult(src, wi) as u64)
                .sum();
            let equal_shares = conjugates
                .iter()
                .all(|&src| quiver.arrow_mult(src, wi) as u64 * (*u_alpha as u64) == total);
            if total % *u_alpha as u64 != 0 || comb_total != total || !equal_shares {
                mismatches.push(Mismatch {
                    source: format!("{} (orbit)", alpha),
                    target: quiver.vertex_name(wi),
                    combinatorial: comb_total,
                    oracle: total,
                });
            }
        }
    }
    Ok(VerifyReport {
        family: "Grpn".into(),
        r,
        p,
        n,
        status: if mismatches.is_empty() { VerifyStatus::Pass } else { VerifyStatus::Fail },
        checked_pairs: checked,
        mismatches,
    })
}
