//! Shift action, orbits, stabilizers, and fundamental domains indexing
//! Irrep(G(r,p,n)).
//!
//! The quotient G(r,1,n)/G(r,p,n) ≅ μ_p acts on multipartitions by cyclic
//! shifts in steps of d = r/p. An orbit [λ] has length b(λ) and stabilizer
//! order u(λ) = p/b(λ); the irreducible H-representations are the pairs
//! ([λ], t) with t ∈ 0..u(λ).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::{enumerate_multipartitions, MultiPartition, Partition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("p = {p} does not divide r = {r}")]
    Divisibility { r: usize, p: usize },
}

/// Cyclic rotation of the components by i steps to the right (mod r);
/// realizes tensoring with the linear character δ_i.
pub fn shift(lambda: &MultiPartition, i: usize) -> MultiPartition {
    let r = lambda.r();
    let s = i % r;
    let comps = lambda.components();
    let mut rotated: Vec<Partition> = Vec::with_capacity(r);
    for k in 0..r {
        rotated.push(comps[(k + r - s) % r].clone());
    }
    MultiPartition::new(rotated)
}

/// The shift-orbit of a multipartition under μ_p, with its canonical
/// representative (the least of the p shifts by multiples of d under the
/// canonical multipartition order), orbit length b and stabilizer order u.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitClass {
    pub rep: MultiPartition,
    pub r: usize,
    pub p: usize,
    pub d: usize,
    pub b: usize,
    pub u: usize,
}

impl OrbitClass {
    /// All distinct members of the orbit, starting from the canonical
    /// representative and shifting by d each step.
    pub fn members(&self) -> Vec<MultiPartition> {
        (0..self.b).map(|i| shift(&self.rep, i * self.d)).collect()
    }
}

pub fn orbit_of(lambda: &MultiPartition, p: usize) -> Result<OrbitClass, CliffordError> {
    let r = lambda.r();
    if p == 0 || r % p != 0 {
        return Err(CliffordError::Divisibility { r, p });
    }
    let d = r / p;
    let mut seen: Vec<MultiPartition> = Vec::with_capacity(p);
    for i in 0..p {
        let s = shift(lambda, i * d);
        if !seen.contains(&s) {
            seen.push(s);
        }
    }
    let b = seen.len();
    debug_assert_eq!(p % b, 0, "orbit length must divide p");
    let rep = seen.into_iter().min().unwrap();
    Ok(OrbitClass { rep, r, p, d, b, u: p / b })
}

/// An irreducible representation of G(r,p,n): an orbit together with a
/// stabilizer label t ∈ 0..u. The label is defined relative to the canonical
/// orbit representative (the paper's choice of δ is basis-dependent and is
/// fixed here combinatorially).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HIrrep {
    pub orbit: OrbitClass,
    pub t: usize,
}

impl HIrrep {
    pub fn new(orbit: OrbitClass, t: usize) -> Self {
        assert!(t < orbit.u, "stabilizer label out of range");
        debug_assert_eq!(
            orbit.rep.dim() % orbit.u as u64,
            0,
            "split dimension must be an integer"
        );
        HIrrep { orbit, t }
    }

    pub fn dim(&self) -> u64 {
        self.orbit.rep.dim() / self.orbit.u as u64
    }

    /// The active components of the canonical representative: the (t+1)-st
    /// block of b·d consecutive components. The u blocks of length b·d tile
    /// all r components; for u = 1 this is the full range 1..=r.
    pub fn fundamental_domain(&self) -> RangeInclusive<usize> {
        let block = self.orbit.b * self.orbit.d;
        (self.t * block + 1)..=((self.t + 1) * block)
    }
}

impl fmt::Display for HIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbit.u == 1 {
            write!(f, "{}", self.orbit.rep)
        } else {
            write!(f, "{}@{}", self.orbit.rep, self.t)
        }
    }
}

/// All irreducible representations of G(r,p,n), one (orbit, t) pair per
/// split summand, ordered by the canonical position of the orbit
/// representative and then by t.
pub fn irreps_grpn(r: usize, p: usize, n: u32) -> Result<Vec<HIrrep>, CliffordError> {
    if p == 0 || r % p != 0 {
        return Err(CliffordError::Divisibility { r, p });
    }
    let mut out = Vec::new();
    for lambda in enumerate_multipartitions(r, n) {
        let orbit = orbit_of(&lambda, p)?;
        if orbit.rep == lambda {
            for t in 0..orbit.u {
                out.push(HIrrep::new(orbit.clone(), t));
            }
        }
    }
    Ok(out)
}

/// Index of an orbit representative within the vertex list produced by
/// `irreps_grpn`, keyed by (canonical representative, t).
pub fn vertex_index_map(irreps: &[HIrrep]) -> BTreeMap<(MultiPartition, usize), usize> {
    irreps
        .iter()
        .enumerate()
        .map(|(i, h)| ((h.orbit.rep.clone(), h.t), i))
        .collect()
}
