//! McKay quivers Γ(G(1,1,n)), Γ(G(r,1,n)), Γ(G(r,p,n)) built by box-moving
//! on (multi)partitions, plus the restriction/induction operations the
//! constructions rest on.
//!
//! Arrow convention: one arrow per distinct legal move, aggregated into a
//! multiplicity per (source, target) pair. Vertices are listed in the
//! canonical enumeration orders of the partitions/clifford modules so DOT
//! and JSON output is byte-stable.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::clifford::{irreps_grpn, orbit_of, shift, vertex_index_map, CliffordError, HIrrep};
use crate::partitions::{
    enumerate_multipartitions, enumerate_partitions, MultiPartition, Partition,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("Γ(S_n) needs n ≥ 2, got n = {0}")]
    SnTooSmall(u32),
    #[error("Γ(G(r,p,n)) with p > 1 needs n ≥ 2, got n = {0}")]
    GrpnTooSmall(u32),
    #[error("invalid parameters: r = {r}, p = {p} (p must divide r)")]
    BadParameters { r: usize, p: usize },
    #[error("restriction of an empty multipartition")]
    EmptyRestriction,
    #[error("vertex count {count} exceeds the guardrail {bound}; pass the override to proceed")]
    VertexBound { count: u64, bound: u64 },
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuiverFamily {
    Sn,
    Gr1n,
    Grpn,
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexLabel {
    Sn(Partition),
    Gr1n(MultiPartition),
    Grpn(HIrrep),
    Named(String),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Sn(p) => write!(f, "[{}]", p),
            VertexLabel::Gr1n(m) => write!(f, "{}", m),
            VertexLabel::Grpn(h) => write!(f, "{}", h),
            VertexLabel::Named(s) => write!(f, "{}", s),
        }
    }
}

/// A McKay quiver: vertices tagged with representation labels and
/// dimensions, directed arrows with multiplicities, and the (family, r, p,
/// n) metadata plus the dimension of the representation that was tensored.
#[derive(Debug, Clone)]
pub struct Quiver {
    pub family: QuiverFamily,
    pub r: usize,
    pub p: usize,
    pub n: u32,
    /// Dimension of the defining representation: n−1 for S_n, n otherwise.
    pub std_dim: u64,
    vertices: Vec<(VertexLabel, u64)>,
    arrows: BTreeMap<(usize, usize), u32>,
    pub warnings: Vec<String>,
}

impl Quiver {
    fn new(family: QuiverFamily, r: usize, p: usize, n: u32, std_dim: u64) -> Self {
        Quiver {
            family,
            r,
            p,
            n,
            std_dim,
            vertices: Vec::new(),
            arrows: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn generic(name_dims: Vec<(String, u64)>, std_dim: u64) -> Self {
        let mut q = Quiver::new(QuiverFamily::Generic, 0, 0, 0, std_dim);
        for (name, dim) in name_dims {
            q.push_vertex(VertexLabel::Named(name), dim);
        }
        q
    }

    pub fn push_vertex(&mut self, label: VertexLabel, dim: u64) -> usize {
        self.vertices.push((label, dim));
        self.vertices.len() - 1
    }

    pub fn add_arrows(&mut self, src: usize, dst: usize, mult: u32) {
        if mult > 0 {
            *self.arrows.entry((src, dst)).or_insert(0) += mult;
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, i: usize) -> &VertexLabel {
        &self.vertices[i].0
    }

    pub fn vertex_dim(&self, i: usize) -> u64 {
        self.vertices[i].1
    }

    pub fn vertex_name(&self, i: usize) -> String {
        self.vertices[i].0.to_string()
    }

    pub fn vertex_index_by_name(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|(l, _)| l.to_string() == name)
    }

    pub fn arrow_mult(&self, src: usize, dst: usize) -> u32 {
        self.arrows.get(&(src, dst)).copied().unwrap_or(0)
    }

    /// Arrows in canonical (src, dst) order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.arrows.iter().map(|(&(s, d), &m)| (s, d, m))
    }

    pub fn out_arrows(&self, src: usize) -> Vec<(usize, u32)> {
        self.arrows
            .range((src, 0)..(src + 1, 0))
            .map(|(&(_, d), &m)| (d, m))
            .collect()
    }

    pub fn loop_count(&self, v: usize) -> u32 {
        self.arrow_mult(v, v)
    }

    pub fn total_arrows(&self) -> u64 {
        self.arrows.values().map(|&m| m as u64).sum()
    }

    /// Master sanity check: Σ over out-arrows (v→w, m) of m·dim(w) must equal
    /// dim(V_std)·dim(v) at every vertex (decomposition of V_v ⊗ V_std).
    pub fn check_dimension_bookkeeping(&self) -> Result<(), String> {
        for v in 0..self.num_vertices() {
            let outflow: u64 = self
                .out_arrows(v)
                .iter()
                .map(|&(w, m)| m as u64 * self.vertex_dim(w))
                .sum();
            let expected = self.std_dim * self.vertex_dim(v);
            if outflow != expected {
                return Err(format!(
                    "vertex {}: out-flow {} ≠ {}·{}",
                    self.vertex_name(v),
                    outflow,
                    self.std_dim,
                    self.vertex_dim(v)
                ));
            }
        }
        Ok(())
    }

    pub fn sum_dim_squared(&self) -> u64 {
        self.vertices.iter().map(|(_, d)| d * d).sum()
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for (&(s, d), _) in &self.arrows {
            adj[s].push(d);
            adj[d].push(s);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz DOT output; multiplicity is rendered as parallel edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mckay {\n");
        for (i, (label, dim)) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{} ({})\"];\n", i, label, dim));
        }
        for (&(s, d), &m) in &self.arrows {
            for _ in 0..m {
                out.push_str(&format!("  v{} -> v{};\n", s, d));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": "mckay-quiver/1",
            "family": self.family,
            "r": self.r,
            "p": self.p,
            "n": self.n,
            "std_dim": self.std_dim,
            "vertices": self.vertices.iter().map(|(l, d)| json!({
                "label": l.to_string(),
                "dim": d,
            })).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|(&(s, d), &m)| json!({
                "src": s, "dst": d, "mult": m,
            })).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

/// Γ(S_n) with the (n−1)-dimensional reflection representation: vertices are
/// partitions of n; an arrow λ→τ for every single-block move; p(λ)−1 loops.
pub fn mckay_sn(n: u32) -> Result<Quiver, QuiverError> {
    if n < 2 {
        return Err(QuiverError::SnTooSmall(n));
    }
    let vertices = enumerate_partitions(n);
    let index: BTreeMap<&Partition, usize> =
        vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut q = Quiver::new(QuiverFamily::Sn, 1, 1, n, (n - 1) as u64);
    for p in &vertices {
        q.push_vertex(VertexLabel::Sn(p.clone()), p.syt_count());
    }
    for (i, p) in vertices.iter().enumerate() {
        for tau in p.block_move_neighbors() {
            q.add_arrows(i, index[&tau], 1);
        }
        let loops = p.distinct_parts() as u32 - 1;
        q.add_arrows(i, i, loops);
    }
    Ok(q)
}

/// One summand of the restriction to G(r,1,n−1) × μ_r: the diagram with one
/// cell deleted, tagged with color = (component of the deleted cell) − 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResSummand {
    pub diagram: MultiPartition,
    pub color: usize,
}

/// Branching to G(r,1,n−1): one summand per removable cell.
pub fn restrict_to_gr1n_minus_1(
    lambda: &MultiPartition,
) -> Result<Vec<MultiPartition>, QuiverError> {
    Ok(restrict_to_product(lambda)?.into_iter().map(|s| s.diagram).collect())
}

/// Restriction to the product subgroup G(r,1,n−1) × μ_r.
pub fn restrict_to_product(lambda: &MultiPartition) -> Result<Vec<ResSummand>, QuiverError> {
    if lambda.size() == 0 {
        return Err(QuiverError::EmptyRestriction);
    }
    let mut out = Vec::new();
    for cell in lambda.removable_cells() {
        out.push(ResSummand {
            diagram: lambda.with_cell_removed(cell.component, cell.row),
            color: cell.component - 1,
        });
    }
    Ok(out)
}

/// Induction from the product subgroup: β ⊠ i induces to all legal
/// single-cell additions to component i+1 (1-indexed; i runs over colors
/// 0..r−1, so no wrap occurs here — the cyclic step of the quiver comes
/// from first tensoring with triv ⊠ 1, which shifts the color).
pub fn induce_from_product(summand: &ResSummand) -> Vec<MultiPartition> {
    let target_comp = summand.color + 1;
    summand
        .diagram
        .component(target_comp)
        .addable_cells()
        .into_iter()
        .map(|(row, _)| summand.diagram.with_cell_added(target_comp, row))
        .collect()
}

/// Γ(G(r,1,n)) for r ≥ 2: an arrow α→β for every legal (delete from
/// component i, add to component i+1 mod r) move. No loops, no parallel
/// arrows.
pub fn mckay_gr1n(r: usize, n: u32) -> Result<Quiver, QuiverError> {
    if r < 2 {
        return mckay_sn(n);
    }
    let vertices = enumerate_multipartitions(r, n);
    let index: BTreeMap<&MultiPartition, usize> =
        vertices.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut q = Quiver::new(QuiverFamily::Gr1n, r, 1, n, n as u64);
    for m in &vertices {
        q.push_vertex(VertexLabel::Gr1n(m.clone()), m.dim());
    }
    for (i, alpha) in vertices.iter().enumerate() {
        if alpha.size() == 0 {
            continue;
        }
        for summand in restrict_to_product(alpha)? {
            // Tensoring with triv ⊠ 1 bumps the color before inducing; the
            // net effect moves the deleted cell one component to the right.
            let shifted = ResSummand {
                diagram: summand.diagram,
                color: (summand.color + 1) % r,
            };
            for beta in induce_from_product(&shifted) {
                q.add_arrows(i, index[&beta], 1);
            }
        }
    }
    Ok(q)
}

/// Γ(G(r,p,n)) for p ≥ 2: vertices are the pairs ([α],t); a move takes a
/// removable cell inside the fundamental domain of ([α],t) to the cyclically
/// next component. A target with u(μ) = w > 1 receives one arrow to each of
/// its w conjugates (forced by dimension bookkeeping).
pub fn mckay_grpn(r: usize, p: usize, n: u32) -> Result<Quiver, QuiverError> {
    if p == 0 || r % p != 0 {
        return Err(QuiverError::BadParameters { r, p });
    }
    if p == 1 {
        return mckay_gr1n(r, n);
    }
    if n < 2 {
        return Err(QuiverError::GrpnTooSmall(n));
    }
    let hirreps = irreps_grpn(r, p, n)?;
    let index = vertex_index_map(&hirreps);
    let mut q = Quiver::new(QuiverFamily::Grpn, r, p, n, n as u64);
    if (r, p, n) == (2, 2, 2) {
        q.warnings.push(
            "G(2,2,2) is not irreducible as a reflection group; quiver computed anyway".into(),
        );
    }
    for h in &hirreps {
        q.push_vertex(VertexLabel::Grpn(h.clone()), h.dim());
    }
    for (src, h) in hirreps.iter().enumerate() {
        let rep = &h.orbit.rep;
        for comp in h.fundamental_domain() {
            for (row, _) in rep.component(comp).removable_cells() {
                let deleted = rep.with_cell_removed(comp, row);
                let target_comp = comp % r + 1;
                for (arow, _) in deleted.component(target_comp).addable_cells() {
                    let mu = deleted.with_cell_added(target_comp, arow);
                    let orbit = orbit_of(&mu, p)?;
                    debug_assert!(
                        h.orbit.u == 1 || orbit.u == 1,
                        "a move from a symmetric source must break the symmetry"
                    );
                    for t in 0..orbit.u {
                        let dst = index[&(orbit.rep.clone(), t)];
                        q.add_arrows(src, dst, 1);
                    }
                }
            }
        }
    }
    Ok(q)
}

/// Dispatcher: Γ(S_n) for (1,1,n), Γ(G(r,1,n)) for p = 1, Γ(G(r,p,n))
/// otherwise.
pub fn mckay_quiver(r: usize, p: usize, n: u32) -> Result<Quiver, QuiverError> {
    if p == 0 || r % p != 0 {
        return Err(QuiverError::BadParameters { r, p });
    }
    if r == 1 {
        mckay_sn(n)
    } else if p == 1 {
        mckay_gr1n(r, n)
    } else {
        mckay_grpn(r, p, n)
    }
}

/// Restriction of a G(r,1,n)-irreducible to G(r,p,n): the u(λ) summands
/// ([λ], t) for t = 0..u−1.
pub fn res_g_to_h(lambda: &MultiPartition, p: usize) -> Result<Vec<HIrrep>, CliffordError> {
    let orbit = orbit_of(lambda, p)?;
    Ok((0..orbit.u).map(|t| HIrrep::new(orbit.clone(), t)).collect())
}

/// Induction of an H-irreducible back to G(r,1,n): the b(λ) distinct shifts
/// of the canonical representative, each exactly once.
pub fn ind_h_to_g(h: &HIrrep) -> Vec<MultiPartition> {
    h.orbit.members()
}

/// The vertex permutation λ ↦ λ^{⟨ℓ⟩} on Γ(G(r,1,n)) given by tensoring with
/// the linear character δ_ℓ; always a quiver automorphism.
pub fn twist_by_linear_character(q: &Quiver, ell: usize) -> Vec<usize> {
    assert_eq!(q.family, QuiverFamily::Gr1n, "twist acts on Γ(G(r,1,n))");
    assert!(ell < q.r);
    let mut perm = Vec::with_capacity(q.num_vertices());
    for i in 0..q.num_vertices() {
        let lam = match q.vertex_label(i) {
            VertexLabel::Gr1n(m) => m,
            _ => unreachable!(),
        };
        let shifted = shift(lam, ell);
        let target = (0..q.num_vertices())
            .find(|&j| matches!(q.vertex_label(j), VertexLabel::Gr1n(m) if *m == shifted))
            .expect("shift permutes the vertex set");
        perm.push(target);
    }
    perm
}

/// Whether a vertex permutation preserves the arrow multiset.
pub fn permutation_preserves_arrows(q: &Quiver, perm: &[usize]) -> bool {
    q.arrows()
        .all(|(s, d, m)| q.arrow_mult(perm[s], perm[d]) == m)
}
