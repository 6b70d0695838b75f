//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Everything is exact — integer and cyclotomic arithmetic with zero
//! tolerance throughout.

use std::collections::BTreeMap;
use std::panic::AssertUnwindSafe;

use mckay::characters::{
    mn_character_sn, standard_vertex, verify_quiver_gr1n, verify_quiver_grpn, CharacterTable,
    ProductSubgroup,
};
use mckay::clifford::{irreps_grpn, orbit_of, HIrrep};
use mckay::cyclotomic::Rational;
use mckay::linalg::{reduce_against, rref_in_place, span_contains, Mat};
use mckay::lusztig::{
    builtin_reps, invariant_degree1, relations_degree2, seminormal, shape_s3, ArrowMatrix,
    BuiltinGroup, DegreeOnePart, QuadraticIdeal, RelationSet,
};
use mckay::mckay::{
    ind_h_to_g, mckay_gr1n, mckay_grpn, mckay_sn, permutation_preserves_arrows,
    res_g_to_h, twist_by_linear_character, Quiver, VertexLabel,
};
use mckay::partitions::{enumerate_multipartitions, enumerate_partitions, MultiPartition, Partition};
use mckay::Cyclo;

const ORACLE_BOUND: u64 = 100_000;

fn report<F: FnOnce()>(number: u32, label: &str, body: F) {
    let outcome = std::panic::catch_unwind(AssertUnwindSafe(body));
    match outcome {
        Ok(()) => println!("criterion {:>2} {}: PASS", number, label),
        Err(e) => {
            println!("criterion {:>2} {}: FAIL", number, label);
            std::panic::resume_unwind(e);
        }
    }
}

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

fn vertex(q: &Quiver, name: &str) -> usize {
    q.vertex_index_by_name(name)
        .unwrap_or_else(|| panic!("vertex {} not found", name))
}

fn orbit_vertex(q: &Quiver, diagram: &str, p: usize, t: usize) -> usize {
    let rep = orbit_of(&mp(diagram), p).unwrap();
    let label = HIrrep::new(rep, t).to_string();
    vertex(q, &label)
}

fn out_degree(q: &Quiver, v: usize) -> u32 {
    q.out_arrows(v).iter().map(|&(_, m)| m).sum()
}

fn group_order(q: &Quiver) -> u64 {
    let fact: u64 = (1..=q.n as u64).product();
    match q.family {
        mckay::mckay::QuiverFamily::Sn => fact,
        mckay::mckay::QuiverFamily::Gr1n => (q.r as u64).pow(q.n) * fact,
        mckay::mckay::QuiverFamily::Grpn => (q.r as u64).pow(q.n) * fact / q.p as u64,
        mckay::mckay::QuiverFamily::Generic => q.sum_dim_squared(),
    }
}

/// Quivers named by criteria 1–4, used again by criterion 5.
fn quivers_from_criteria_1_to_4() -> Vec<Quiver> {
    let mut out = vec![mckay_sn(4).unwrap()];
    for n in 2..=4u32 {
        out.push(mckay_sn(n).unwrap());
    }
    for r in 2..=4usize {
        for n in 1..=4u32 {
            out.push(mckay_gr1n(r, n).unwrap());
        }
    }
    for (r, p, n) in GRPN_GRID {
        out.push(mckay_grpn(r, p, n).unwrap());
    }
    out.push(mckay_gr1n(3, 5).unwrap());
    out.push(mckay_grpn(4, 4, 6).unwrap());
    for p in 3..=9usize {
        out.push(mckay_grpn(p, p, 2).unwrap());
    }
    out
}

const GRPN_GRID: [(usize, usize, u32); 7] =
    [(2, 2, 2), (2, 2, 3), (3, 3, 3), (3, 3, 4), (4, 2, 3), (4, 4, 3), (4, 4, 4)];

#[test]
fn criterion_01_s4_quiver_reproduction() {
    report(1, "Γ(S₄) arrow-for-arrow", || {
        let q = mckay_sn(4).unwrap();
        assert_eq!(q.num_vertices(), 5);
        let mut expected: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (a, b) in [
            ("[4]", "[3,1]"),
            ("[3,1]", "[2,1,1]"),
            ("[2,1,1]", "[1,1,1,1]"),
            ("[3,1]", "[2,2]"),
            ("[2,1,1]", "[2,2]"),
        ] {
            expected.insert((vertex(&q, a), vertex(&q, b)), 1);
            expected.insert((vertex(&q, b), vertex(&q, a)), 1);
        }
        expected.insert((vertex(&q, "[3,1]"), vertex(&q, "[3,1]")), 1);
        expected.insert((vertex(&q, "[2,1,1]"), vertex(&q, "[2,1,1]")), 1);
        let actual: BTreeMap<(usize, usize), u32> =
            q.arrows().map(|(s, d, m)| ((s, d), m)).collect();
        assert_eq!(actual, expected);
    });
}

#[test]
fn criterion_02_oracle_equivalence_grid() {
    report(2, "oracle equivalence grid", || {
        for n in 2..=4u32 {
            let rep = verify_quiver_gr1n(1, n, ORACLE_BOUND).unwrap();
            assert!(rep.passed(), "Γ(S_{}) vs oracle: {:?}", n, rep.mismatches);
        }
        for r in 2..=4usize {
            for n in 1..=4u32 {
                let rep = verify_quiver_gr1n(r, n, ORACLE_BOUND).unwrap();
                assert!(rep.passed(), "Γ(G({},1,{})) vs oracle: {:?}", r, n, rep.mismatches);
            }
        }
        for (r, p, n) in GRPN_GRID {
            let rep = verify_quiver_grpn(r, p, n, ORACLE_BOUND).unwrap();
            assert!(rep.passed(), "Γ(G({},{},{})) vs oracle: {:?}", r, p, n, rep.mismatches);
        }
    });
}

#[test]
fn criterion_03_worked_examples() {
    report(3, "worked quiver examples", || {
        // G(3,1,5): the five targets of ((3,1),(1),−).
        let q = mckay_gr1n(3, 5).unwrap();
        let src = vertex(&q, "[3,1|1|-]");
        assert_eq!(out_degree(&q, src), 5);
        for t in ["[3|2|-]", "[3|1,1|-]", "[2,1|2|-]", "[2,1|1,1|-]", "[3,1|-|1]"] {
            assert_eq!(q.arrow_mult(src, vertex(&q, t)), 1, "missing target {}", t);
        }

        // G(4,4,6): eight out-arrows from the orbit of ((1),(2,1),(1,1),−),
        // landing on the eight listed orbits with multiplicity one.
        let q = mckay_grpn(4, 4, 6).unwrap();
        let src = orbit_vertex(&q, "[1|2,1|1,1|-]", 4, 0);
        assert_eq!(out_degree(&q, src), 8);
        for t in [
            "[-|2,2|1,1|-]",
            "[-|3,1|1,1|-]",
            "[-|2,1,1|1,1|-]",
            "[1|2|2,1|-]",
            "[1|2|1,1,1|-]",
            "[1|1,1|2,1|-]",
            "[1|1,1|1,1,1|-]",
            "[1|2,1|1|1]",
        ] {
            let dst = orbit_vertex(&q, t, 4, 0);
            assert_eq!(q.arrow_mult(src, dst), 1, "missing target {}", t);
        }

        // G(3,3,4): loop at the orbit of ((1),(1,1),(1)).
        let q = mckay_grpn(3, 3, 4).unwrap();
        let v = orbit_vertex(&q, "[1|1,1|1]", 3, 0);
        assert!(q.loop_count(v) > 0);

        // G(3,3,3): double arrow from [(2),(1),−]; the split vertex
        // ([1|1|1],0) has out-degree 2 with the two listed targets.
        let q = mckay_grpn(3, 3, 3).unwrap();
        let src = orbit_vertex(&q, "[2|1|-]", 3, 0);
        let double_target = orbit_vertex(&q, "[1|2|-]", 3, 0);
        assert_eq!(q.arrow_mult(src, double_target), 2);
        let split = orbit_vertex(&q, "[1|1|1]", 3, 0);
        assert_eq!(out_degree(&q, split), 2);
        assert_eq!(q.arrow_mult(split, orbit_vertex(&q, "[-|1,1|1]", 3, 0)), 1);
        assert_eq!(q.arrow_mult(split, orbit_vertex(&q, "[-|2|1]", 3, 0)), 1);
    });
}

/// The dihedral quiver of G(p,p,2) built directly from its closed-form
/// description: a chain with a two-vertex fork at the standard end, and at
/// the far end a loop (odd p) or a second fork onto the two split vertices
/// (even p).
fn expected_dihedral(p: usize) -> BTreeMap<(usize, usize), u32> {
    let q = mckay_grpn(p, p, 2).unwrap();
    let k = if p % 2 == 1 { (p - 1) / 2 } else { p / 2 };
    let gap_vertex = |gap: usize| -> usize {
        let mut comps = vec![Partition::empty(); p];
        comps[0] = Partition::single_row(1);
        comps[gap + 1] = Partition::single_row(1);
        let label = mp(&MultiPartition::new(comps).to_string());
        orbit_vertex(&q, &label.to_string(), p, 0)
    };
    let two = orbit_vertex(&q, &format!("[2{}]", "|-".repeat(p - 1)), p, 0);
    let oneone = orbit_vertex(&q, &format!("[1,1{}]", "|-".repeat(p - 1)), p, 0);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let std = gap_vertex(0);
    edges.push((two, std));
    edges.push((oneone, std));
    if p % 2 == 1 {
        // chain over gaps 0..k−1, loop at the end
        for gap in 0..k - 1 {
            edges.push((gap_vertex(gap), gap_vertex(gap + 1)));
        }
        let last = gap_vertex(k - 1);
        edges.push((last, last));
    } else {
        for gap in 0..k - 2 {
            edges.push((gap_vertex(gap), gap_vertex(gap + 1)));
        }
        let last_chain = gap_vertex(k - 2);
        // the two split vertices at gap k−1
        let mut comps = vec![Partition::empty(); p];
        comps[0] = Partition::single_row(1);
        comps[k] = Partition::single_row(1);
        let sym = MultiPartition::new(comps);
        for t in 0..2 {
            let split = orbit_vertex(&q, &sym.to_string(), p, t);
            edges.push((last_chain, split));
        }
    }
    let mut out = BTreeMap::new();
    for (a, b) in edges {
        *out.entry((a, b)).or_insert(0) += 1;
        if a != b {
            *out.entry((b, a)).or_insert(0) += 1;
        }
    }
    out
}

#[test]
fn criterion_04_dihedral_quivers() {
    report(4, "dihedral quivers G(p,p,2)", || {
        for p in 3..=9usize {
            let q = mckay_grpn(p, p, 2).unwrap();
            let k = if p % 2 == 1 { (p - 1) / 2 } else { p / 2 };
            let expected_count = if p % 2 == 1 { k + 2 } else { k + 3 };
            assert_eq!(q.num_vertices(), expected_count, "vertex count for p={}", p);
            let actual: BTreeMap<(usize, usize), u32> =
                q.arrows().map(|(s, d, m)| ((s, d), m)).collect();
            assert_eq!(actual, expected_dihedral(p), "arrow multiset for p={}", p);
            let loops: u32 = (0..q.num_vertices()).map(|v| q.loop_count(v)).sum();
            assert_eq!(loops, if p % 2 == 1 { 1 } else { 0 }, "loops for p={}", p);
        }
    });
}

#[test]
fn criterion_05_dimension_bookkeeping() {
    report(5, "dimension bookkeeping", || {
        for q in quivers_from_criteria_1_to_4() {
            q.check_dimension_bookkeeping()
                .unwrap_or_else(|e| panic!("bookkeeping ({:?},{},{},{}): {}", q.family, q.r, q.p, q.n, e));
            assert_eq!(
                q.sum_dim_squared(),
                group_order(&q),
                "Σ dim² for ({:?},{},{},{})",
                q.family,
                q.r,
                q.p,
                q.n
            );
        }
    });
}

#[test]
fn criterion_06_structural_properties() {
    report(6, "structural properties", || {
        // r ≥ 2: no loops, no parallel arrows; opposite pairs only for r = 2.
        for r in 2..=4usize {
            for n in 1..=4u32 {
                let q = mckay_gr1n(r, n).unwrap();
                for (s, d, m) in q.arrows() {
                    assert_ne!(s, d, "loop in Γ(G({},1,{}))", r, n);
                    assert_eq!(m, 1, "parallel arrows in Γ(G({},1,{}))", r, n);
                    if r > 2 {
                        assert_eq!(q.arrow_mult(d, s), 0, "two-way arrows need r = 2");
                    }
                }
            }
        }
        // r = 1: loop count is p(λ) − 1.
        for n in 2..=6u32 {
            let q = mckay_sn(n).unwrap();
            for i in 0..q.num_vertices() {
                let lam = match q.vertex_label(i) {
                    VertexLabel::Sn(p) => p,
                    _ => unreachable!(),
                };
                assert_eq!(q.loop_count(i), lam.distinct_parts() as u32 - 1);
            }
        }
        // p > 1: no arrow joins two split vertices.
        for (r, p, n) in GRPN_GRID {
            let q = mckay_grpn(r, p, n).unwrap();
            for (s, d, _) in q.arrows() {
                let u_of = |v: usize| match q.vertex_label(v) {
                    VertexLabel::Grpn(h) => h.orbit.u,
                    _ => unreachable!(),
                };
                assert!(u_of(s) == 1 || u_of(d) == 1, "split-split arrow in ({},{},{})", r, p, n);
            }
        }
        // Twisting by any linear character is a quiver automorphism.
        for r in [3usize, 4] {
            let q = mckay_gr1n(r, 2).unwrap();
            for ell in 0..r {
                let perm = twist_by_linear_character(&q, ell);
                assert!(permutation_preserves_arrows(&q, &perm), "twist ℓ={} on r={}", ell, r);
            }
        }
    });
}

#[test]
fn criterion_07_character_oracle_internals() {
    report(7, "character oracle internals", || {
        // Orthogonality over the full grid.
        let mut grid: Vec<(usize, u32)> = vec![(1, 2), (1, 3), (1, 4)];
        for r in 2..=4usize {
            for n in 1..=4u32 {
                grid.push((r, n));
            }
        }
        for (r, n) in grid {
            let table = CharacterTable::build(r, n).unwrap();
            assert!(table.check_row_orthogonality(), "row orthogonality r={} n={}", r, n);
            assert!(table.check_column_orthogonality(), "column orthogonality r={} n={}", r, n);
        }
        // Murnaghan–Nakayama values equal seminormal traces for n ≤ 5.
        for n in 2..=5u32 {
            for lam in enumerate_partitions(n) {
                let gens = seminormal::sn_seminormal(&lam);
                let dim = lam.syt_count() as usize;
                for rho in enumerate_partitions(n) {
                    let mut word: Vec<usize> = Vec::new();
                    let mut offset = 0usize;
                    for &l in rho.parts() {
                        for j in 1..l as usize {
                            word.push(offset + j - 1);
                        }
                        offset += l as usize;
                    }
                    let mut m = Mat::identity(dim);
                    for w in word {
                        m = m.matmul(&gens[w]);
                    }
                    assert_eq!(
                        m.trace(),
                        Cyclo::from_integer(mn_character_sn(&lam, &rho).unwrap()),
                        "λ={:?} ρ={:?}",
                        lam,
                        rho
                    );
                }
            }
        }
        // Frobenius reciprocity on the product chain, combinatorial left side
        // against character arithmetic on the right.
        for (r, n) in [(2usize, 2u32), (3, 2), (2, 3), (3, 3)] {
            let table = CharacterTable::build(r, n).unwrap();
            let sub = ProductSubgroup::build(r, n).unwrap();
            for alpha in &table.irreps {
                let ia = table.irrep_index(alpha).unwrap();
                let summands = mckay::mckay::restrict_to_product(alpha).unwrap();
                for beta in enumerate_multipartitions(r, n - 1) {
                    for i in 0..r {
                        let lhs = summands
                            .iter()
                            .filter(|s| s.diagram == beta && s.color == i)
                            .count() as i64;
                        let phi = sub.character(&beta, i);
                        let ind = sub.induce_class_function(&table, &phi);
                        let rhs = table.inner_product(&ind, &table.values[ia]).unwrap();
                        assert_eq!(Rational::from_integer(lhs.into()), rhs);
                    }
                }
            }
        }
    });
}

// ---------------------------------------------------------------------------
// Lusztig golden data. Arrows are pinned against the known closed-form
// matrices for D4 and S3 (same bases as the built-in models); S4 uses the
// solved arrow rescaling recorded below.
// ---------------------------------------------------------------------------

/// A matrix of single-term linear forms: entry (coeff, variable index) or
/// None for zero. Enough to express the D4 and S3 reference arrows.
type RefMatrix<'a> = &'a [&'a [Option<(i64, usize)>]];

fn ref_to_vec(entries: RefMatrix, n: usize) -> Vec<Cyclo> {
    let mut out = Vec::new();
    for row in entries {
        for cell in *row {
            let mut form = vec![Cyclo::zero(); n];
            if let Some((c, l)) = cell {
                form[*l] = Cyclo::from_integer(*c);
            }
            out.extend(form);
        }
    }
    out
}

fn arrow_to_vec(a: &ArrowMatrix) -> Vec<Cyclo> {
    let mut out = Vec::new();
    for row in &a.entries {
        for form in row {
            out.extend(form.iter().cloned());
        }
    }
    out
}

/// The scalar σ with reference = σ·ours; panics unless proportional.
fn arrow_scaling(reference: &[Cyclo], ours: &[Cyclo]) -> Cyclo {
    let k = ours.iter().position(|c| !c.is_zero()).expect("nonzero arrow");
    let sigma = &reference[k] / &ours[k];
    for (r, o) in reference.iter().zip(ours.iter()) {
        assert_eq!(*r, &sigma * o, "arrow not proportional to the reference");
    }
    sigma
}

type Term = (i64, usize, usize); // coefficient, first arrow, second arrow
struct RefRelation {
    start: usize,
    end: usize,
    terms: Vec<Term>,
}

/// Transforms a reference relation by the arrow scalings and checks it spans
/// (part of) the computed kernel of its block.
fn check_relation(
    deg1: &DegreeOnePart,
    rs: &RelationSet,
    sigma: &[Cyclo],
    rel: &RefRelation,
) {
    let block = &rs.blocks[&(rel.start, rel.end)];
    let mut vec = vec![Cyclo::zero(); block.paths.len()];
    for (c, f, s) in &rel.terms {
        let pos = block
            .paths
            .iter()
            .position(|p| p.first == *f && p.second == *s)
            .unwrap_or_else(|| {
                panic!(
                    "path {}∘{} not composable in block ({},{})",
                    deg1.arrows[*s].name, deg1.arrows[*f].name, rel.start, rel.end
                )
            });
        vec[pos] = &Cyclo::from_integer(*c) * &(&sigma[*f] * &sigma[*s]);
    }
    assert!(
        span_contains(&block.relations, &vec),
        "relation at block ({},{}) not in the computed kernel",
        rel.start,
        rel.end
    );
}

/// Checks that a set of reference relations spans exactly the computed
/// relation space: memberships, per-block counts, and nothing extra.
fn check_relation_set(
    deg1: &DegreeOnePart,
    rs: &RelationSet,
    sigma: &[Cyclo],
    rels: &[RefRelation],
) {
    let mut per_block: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for rel in rels {
        check_relation(deg1, rs, sigma, rel);
        *per_block.entry((rel.start, rel.end)).or_insert(0) += 1;
    }
    for (key, block) in &rs.blocks {
        let expected = per_block.get(key).copied().unwrap_or(0);
        assert_eq!(
            block.relations.len(),
            expected,
            "block {:?} has {} relations, reference lists {}",
            key,
            block.relations.len(),
            expected
        );
    }
}

fn d4_reference() -> (Vec<Vec<Cyclo>>, Vec<&'static str>) {
    let x = |c: i64| Some((c, 0usize));
    let y = |c: i64| Some((c, 1usize));
    let refs: Vec<(&str, Vec<Vec<Option<(i64, usize)>>>)> = vec![
        ("A", vec![vec![x(1), y(1)]]),
        ("B", vec![vec![x(1), y(-1)]]),
        ("C", vec![vec![y(1), x(1)]]),
        ("D", vec![vec![y(1), x(-1)]]),
        ("E", vec![vec![y(1)], vec![x(1)]]),
        ("F", vec![vec![y(1)], vec![x(-1)]]),
        ("G", vec![vec![x(1)], vec![y(1)]]),
        ("H", vec![vec![x(1)], vec![y(-1)]]),
    ];
    let mut vectors = Vec::new();
    let mut names = Vec::new();
    for (name, rows) in refs {
        let slices: Vec<&[Option<(i64, usize)>]> = rows.iter().map(|r| r.as_slice()).collect();
        vectors.push(ref_to_vec(&slices, 2));
        names.push(name);
    }
    (vectors, names)
}

#[test]
fn criterion_08_lusztig_d4() {
    report(8, "Lusztig D4", || {
        let model = builtin_reps(&BuiltinGroup::D4).unwrap();
        let deg1 = invariant_degree1(&model).unwrap();
        assert_eq!(deg1.arrows.len(), 8, "degree-1 dimension");
        // Block support exactly: one-dimensionals ↔ V4 only.
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(deg1.block_dims[&(i, j)], 0);
            }
            assert_eq!(deg1.block_dims[&(i, 4)], 1);
            assert_eq!(deg1.block_dims[&(4, i)], 1);
        }
        assert_eq!(deg1.block_dims[&(4, 4)], 0);

        // σ per arrow, lifted from the reference matrices (same basis).
        let (ref_vecs, _names) = d4_reference();
        // arrow indices: 0..3 = A..D (4→i), 4..7 = E..H (i→4)
        let sigma: Vec<Cyclo> = (0..8)
            .map(|k| arrow_scaling(&ref_vecs[k], &arrow_to_vec(&deg1.arrows[k])))
            .collect();
        let expected_sigma: Vec<i64> = vec![1, -1, 1, -1, 1, -1, 1, -1];
        for (s, e) in sigma.iter().zip(expected_sigma.iter()) {
            assert_eq!(*s, Cyclo::from_integer(*e), "documented scaling");
        }

        // Symmetric ideal: AF, BE, CH, DG, EA+FB−GC−HD.
        // Arrow indices: A..D = 0..3 (4→i), E..H = 4..7 (i→4).
        let sym = relations_degree2(&model, &deg1, &QuadraticIdeal::symmetric(2)).unwrap();
        assert_eq!(sym.total_relations(), 5);
        let rels = vec![
            RefRelation { start: 1, end: 0, terms: vec![(1, 5, 0)] }, // AF
            RefRelation { start: 0, end: 1, terms: vec![(1, 4, 1)] }, // BE
            RefRelation { start: 3, end: 2, terms: vec![(1, 7, 2)] }, // CH
            RefRelation { start: 2, end: 3, terms: vec![(1, 6, 3)] }, // DG
            RefRelation {
                start: 4,
                end: 4,
                terms: vec![(1, 0, 4), (1, 1, 5), (-1, 2, 6), (-1, 3, 7)], // EA+FB−GC−HD
            },
        ];
        check_relation_set(&deg1, &sym, &sigma, &rels);

        // Exterior ideal: the 15 listed relations.
        let ext = relations_degree2(&model, &deg1, &QuadraticIdeal::exterior(2)).unwrap();
        assert_eq!(ext.total_relations(), 15);
        let one_term: Vec<(usize, usize, usize, usize)> = vec![
            // (start, end, first, second): AE, AG, AH, BF, BG, BH,
            // CE, CF, CG, DE, DF, DH
            (0, 0, 4, 0),
            (2, 0, 6, 0),
            (3, 0, 7, 0),
            (1, 1, 5, 1),
            (2, 1, 6, 1),
            (3, 1, 7, 1),
            (0, 2, 4, 2),
            (1, 2, 5, 2),
            (2, 2, 6, 2),
            (0, 3, 4, 3),
            (1, 3, 5, 3),
            (3, 3, 7, 3),
        ];
        let mut rels: Vec<RefRelation> = one_term
            .into_iter()
            .map(|(start, end, f2, s2)| RefRelation { start, end, terms: vec![(1, f2, s2)] })
            .collect();
        rels.push(RefRelation { start: 4, end: 4, terms: vec![(1, 0, 4), (1, 3, 7)] }); // EA+HD
        rels.push(RefRelation { start: 4, end: 4, terms: vec![(1, 1, 5), (1, 3, 7)] }); // FB+HD
        rels.push(RefRelation { start: 4, end: 4, terms: vec![(1, 2, 6), (-1, 3, 7)] }); // GC−HD
        check_relation_set(&deg1, &ext, &sigma, &rels);
    });
}

fn s3_reference() -> Vec<Vec<Cyclo>> {
    let x = |c: i64| Some((c, 0usize));
    let y = |c: i64| Some((c, 1usize));
    let none: Option<(i64, usize)> = None;
    // our arrow order: 0 = B (1→0), 1 = A (0→1), 2 = E (loop), 3 = D (2→1),
    // 4 = C (1→2)
    let refs: Vec<Vec<Vec<Option<(i64, usize)>>>> = vec![
        vec![vec![x(1), y(1)]],            // B
        vec![vec![y(1)], vec![x(1)]],      // A
        vec![vec![none, x(1)], vec![y(1), none]], // E
        vec![vec![y(1)], vec![x(-1)]],     // D
        vec![vec![x(1), y(-1)]],           // C
    ];
    refs.into_iter()
        .map(|rows| {
            let slices: Vec<&[Option<(i64, usize)>]> =
                rows.iter().map(|r| r.as_slice()).collect();
            ref_to_vec(&slices, 2)
        })
        .collect()
}

#[test]
fn criterion_09_lusztig_s3() {
    report(9, "Lusztig S3", || {
        let model = builtin_reps(&BuiltinGroup::S3).unwrap();
        let deg1 = invariant_degree1(&model).unwrap();
        assert_eq!(deg1.arrows.len(), 5, "degree-1 dimension");
        let refs = s3_reference();
        let sigma: Vec<Cyclo> = (0..5)
            .map(|k| arrow_scaling(&refs[k], &arrow_to_vec(&deg1.arrows[k])))
            .collect();
        let expected_sigma = [1i64, 1, 1, -1, -1]; // B, A, E, D, C
        for (s, e) in sigma.iter().zip(expected_sigma.iter()) {
            assert_eq!(*s, Cyclo::from_integer(*e), "documented scaling");
        }
        // arrows: B=0, A=1, E=2, D=3, C=4
        let (b, a, e, d, c) = (0usize, 1usize, 2usize, 3usize, 4usize);

        let i1 = QuadraticIdeal::custom(2, vec![two_form(&[(1, 0, 1), (1, 1, 0)])]); // xy+yx
        let i2 = QuadraticIdeal::custom(
            2,
            vec![two_form(&[(1, 0, 0)]), two_form(&[(1, 1, 1)])], // x², y²
        );
        let i3 = QuadraticIdeal::symmetric(2); // xy−yx

        let cases: Vec<(QuadraticIdeal, Vec<RefRelation>)> = vec![
            (QuadraticIdeal::free(2), vec![]),
            (
                i1.clone(),
                vec![
                    RefRelation { start: 0, end: 0, terms: vec![(1, a, b)] }, // BA
                    RefRelation { start: 2, end: 2, terms: vec![(1, d, c)] }, // CD
                    RefRelation {
                        start: 1,
                        end: 1,
                        terms: vec![(1, b, a), (1, c, d), (2, e, e)], // AB+DC+2E²
                    },
                ],
            ),
            (
                i2.clone(),
                vec![
                    RefRelation { start: 1, end: 0, terms: vec![(1, e, b)] }, // BE
                    RefRelation { start: 2, end: 1, terms: vec![(1, d, e)] }, // ED
                    RefRelation { start: 1, end: 2, terms: vec![(1, e, c)] }, // CE
                    RefRelation { start: 0, end: 1, terms: vec![(1, a, e)] }, // EA
                    RefRelation {
                        start: 1,
                        end: 1,
                        terms: vec![(1, b, a), (-1, c, d)], // AB−DC
                    },
                ],
            ),
            (
                i3.clone(),
                vec![
                    RefRelation { start: 2, end: 0, terms: vec![(1, d, b)] }, // BD
                    RefRelation { start: 0, end: 2, terms: vec![(1, a, c)] }, // CA
                    RefRelation {
                        start: 1,
                        end: 1,
                        terms: vec![(1, b, a), (1, c, d), (-2, e, e)], // AB+DC−2E²
                    },
                ],
            ),
            (
                i1.plus(&i2),
                vec![
                    RefRelation { start: 0, end: 0, terms: vec![(1, a, b)] }, // BA
                    RefRelation { start: 1, end: 0, terms: vec![(1, e, b)] }, // BE
                    RefRelation { start: 0, end: 1, terms: vec![(1, a, e)] }, // EA
                    RefRelation { start: 2, end: 1, terms: vec![(1, d, e)] }, // ED
                    RefRelation { start: 1, end: 2, terms: vec![(1, e, c)] }, // CE
                    RefRelation { start: 2, end: 2, terms: vec![(1, d, c)] }, // CD
                    RefRelation { start: 1, end: 1, terms: vec![(1, b, a), (1, e, e)] }, // AB+E²
                    RefRelation { start: 1, end: 1, terms: vec![(1, c, d), (1, e, e)] }, // DC+E²
                ],
            ),
            (
                i1.plus(&i3),
                vec![
                    RefRelation { start: 0, end: 0, terms: vec![(1, a, b)] }, // BA
                    RefRelation { start: 2, end: 0, terms: vec![(1, d, b)] }, // BD
                    RefRelation { start: 0, end: 2, terms: vec![(1, a, c)] }, // CA
                    RefRelation { start: 2, end: 2, terms: vec![(1, d, c)] }, // CD
                    RefRelation { start: 1, end: 1, terms: vec![(1, b, a), (1, c, d)] }, // AB+DC
                    RefRelation { start: 1, end: 1, terms: vec![(1, e, e)] }, // E²
                ],
            ),
            (
                i2.plus(&i3),
                vec![
                    RefRelation { start: 1, end: 0, terms: vec![(1, e, b)] }, // BE
                    RefRelation { start: 0, end: 1, terms: vec![(1, a, e)] }, // EA
                    RefRelation { start: 2, end: 1, terms: vec![(1, d, e)] }, // ED
                    RefRelation { start: 1, end: 2, terms: vec![(1, e, c)] }, // CE
                    RefRelation { start: 0, end: 2, terms: vec![(1, a, c)] }, // CA
                    RefRelation { start: 2, end: 0, terms: vec![(1, d, b)] }, // BD
                    RefRelation { start: 1, end: 1, terms: vec![(1, b, a), (-1, e, e)] }, // AB−E²
                    RefRelation { start: 1, end: 1, terms: vec![(1, c, d), (-1, e, e)] }, // DC−E²
                ],
            ),
        ];
        for (k, (ideal, rels)) in cases.iter().enumerate() {
            let rs = relations_degree2(&model, &deg1, ideal).unwrap();
            check_relation_set(&deg1, &rs, &sigma, rels);
            let _ = k;
        }
        // Case 8: everything quadratic dies; all length-2 paths are relations.
        let all = i1.plus(&i2).plus(&i3);
        let rs = relations_degree2(&model, &deg1, &all).unwrap();
        for block in rs.blocks.values() {
            assert_eq!(block.relations.len(), block.paths.len());
        }
        assert_eq!(rs.total_relations(), 11);

        // The invariance characterization for entries of degree ≤ 3.
        let dim = shape_s3::verify_invariant_shape_s3(3)
            .expect("structural and direct invariance must agree");
        assert!(dim > 0);
    });
}

fn two_form(terms: &[(i64, usize, usize)]) -> Vec<Cyclo> {
    let mut v = vec![Cyclo::zero(); 4];
    for (c, l, m) in terms {
        v[l * 2 + m] = Cyclo::from_integer(*c);
    }
    v
}

/// Composite of two arrows (first then second) with entries in V⊗V reduced
/// against the ideal span; asserting a relation directly by substitution.
fn composite_reduced(
    first: &ArrowMatrix,
    second: &ArrowMatrix,
    ideal: &QuadraticIdeal,
    n: usize,
) -> Vec<Vec<Cyclo>> {
    assert_eq!(first.dst, second.src);
    let mut basis = ideal.basis.clone();
    basis.retain(|v| v.iter().any(|c| !c.is_zero()));
    let pivots = rref_in_place(&mut basis);
    let d_end = second.entries.len();
    let d_start = first.entries[0].len();
    let d_mid = first.entries.len();
    let mut out = Vec::new();
    for ci in 0..d_end {
        let mut row = Vec::new();
        for ai in 0..d_start {
            let mut entry = vec![Cyclo::zero(); n * n];
            for bi in 0..d_mid {
                let sf = &second.entries[ci][bi];
                let ff = &first.entries[bi][ai];
                for l in 0..n {
                    for m in 0..n {
                        if !sf[l].is_zero() && !ff[m].is_zero() {
                            entry[l * n + m] = &entry[l * n + m] + &(&sf[l] * &ff[m]);
                        }
                    }
                }
            }
            row.push(if basis.is_empty() {
                entry
            } else {
                reduce_against(&basis, &pivots, &entry)
            });
        }
        out.push(row);
    }
    out.into_iter().map(|r| r.into_iter().flatten().collect()).collect()
}

#[test]
fn criterion_10_lusztig_s4() {
    report(10, "Lusztig S4", || {
        let model = builtin_reps(&BuiltinGroup::Sn(4)).unwrap();
        let deg1 = invariant_degree1(&model).unwrap();
        // The induced quiver is Γ(S₄).
        let reference = mckay_sn(4).unwrap();
        assert_eq!(deg1.quiver.num_vertices(), reference.num_vertices());
        for i in 0..5 {
            assert_eq!(deg1.quiver.vertex_name(i), reference.vertex_name(i));
            assert_eq!(deg1.quiver.vertex_dim(i), reference.vertex_dim(i));
            for j in 0..5 {
                assert_eq!(
                    deg1.quiver.arrow_mult(i, j),
                    reference.arrow_mult(i, j),
                    "arrow ({},{})",
                    i,
                    j
                );
            }
        }

        let sym = relations_degree2(&model, &deg1, &QuadraticIdeal::symmetric(3)).unwrap();
        assert_eq!(sym.total_relations(), 12);
        // Distribution over vertex pairs (enforced against the trace oracle
        // inside relations_degree2; re-asserted here) and term profile.
        let mut profile: BTreeMap<usize, usize> = BTreeMap::new();
        for block in sym.blocks.values() {
            for rel in &block.relations {
                let terms = rel.iter().filter(|c| !c.is_zero()).count();
                *profile.entry(terms).or_insert(0) += 1;
            }
        }
        let expected_profile: BTreeMap<usize, usize> =
            [(1, 4), (2, 4), (3, 2), (4, 2)].into_iter().collect();
        assert_eq!(profile, expected_profile, "term-count profile");

        // Arrow letters → indices (block-scan order of the computed arrows):
        // A* = 0 (1→0), A = 1 (0→1), F = 2 (loop at 1), B* = 3 (2→1),
        // G* = 4 (3→1), B = 5 (1→2), C* = 6 (3→2), G = 7 (1→3), C = 8 (2→3),
        // E = 9 (loop at 3), D* = 10 (4→3), D = 11 (3→4).
        let (astar, a, f, bstar, gstar, b, cstar, g, c, e, dstar, d) =
            (0usize, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11);
        // Documented solved rescaling (gauge: σ_A = σ_B = σ_G = σ_D = σ_C* = 1).
        let q = |num: i64, den: i64| {
            Cyclo::from_rational(Rational::new(num.into(), den.into()))
        };
        let sigma: Vec<Cyclo> = vec![
            q(1, 4),  // A*
            q(1, 1),  // A
            q(1, 2),  // F
            q(3, 8),  // B*
            q(-3, 2), // G*
            q(1, 1),  // B
            q(1, 1),  // C*
            q(1, 1),  // G
            q(1, 4),  // C
            q(4, 3),  // E
            q(-1, 3), // D*
            q(1, 1),  // D
        ];

        // Ten relations of the reference presentation hold verbatim under
        // the rescaling; the mirror pair of two-term relations appears with
        // a corrected sign/coefficient (their printed source forms are not
        // composable as written) — checked afterwards by direct substitution.
        let rels = vec![
            RefRelation { start: 0, end: 3, terms: vec![(1, a, g)] },      // GA
            RefRelation { start: 3, end: 0, terms: vec![(1, gstar, astar)] }, // A*G*
            RefRelation { start: 4, end: 1, terms: vec![(1, dstar, gstar)] }, // G*D*
            RefRelation { start: 1, end: 4, terms: vec![(1, g, d)] },      // DG
            RefRelation {
                start: 2,
                end: 1,
                terms: vec![(2, bstar, f), (1, c, gstar)], // 2FB*+G*C
            },
            RefRelation {
                start: 1,
                end: 2,
                terms: vec![(-2, f, b), (1, g, cstar)], // −2BF+C*G
            },
            RefRelation {
                start: 3,
                end: 1,
                terms: vec![(2, gstar, f), (4, cstar, bstar), (-1, e, gstar)], // 2FG*+4B*C*−G*E
            },
            RefRelation {
                start: 1,
                end: 3,
                terms: vec![(-2, f, g), (4, b, c), (1, g, e)], // −2GF+4CB+EG
            },
            RefRelation {
                start: 3,
                end: 3,
                terms: vec![(3, gstar, g), (12, cstar, c), (3, e, e), (16, d, dstar)],
            }, // 3GG*+12CC*+3E²+16D*D
            RefRelation {
                start: 1,
                end: 1,
                terms: vec![(-32, astar, a), (12, f, f), (4, b, bstar), (3, g, gstar)],
            }, // −32AA*+12F²+4B*B+3G*G
        ];
        for rel in &rels {
            check_relation(&deg1, &sym, &sigma, rel);
        }
        // The two-term mirror pair, as exact substitution identities in the
        // computed normalization: 3·B∘G* = −8·C*∘E and G∘B* = E∘C.
        let ideal = QuadraticIdeal::symmetric(3);
        let bg = composite_reduced(&deg1.arrows[gstar], &deg1.arrows[b], &ideal, 3);
        let ce = composite_reduced(&deg1.arrows[e], &deg1.arrows[cstar], &ideal, 3);
        for (r1, r2) in bg.iter().zip(ce.iter()) {
            for (v1, v2) in r1.iter().zip(r2.iter()) {
                assert_eq!(&(&Cyclo::from_integer(3) * v1), &(&Cyclo::from_integer(-8) * v2));
            }
        }
        let gb = composite_reduced(&deg1.arrows[bstar], &deg1.arrows[g], &ideal, 3);
        let ec = composite_reduced(&deg1.arrows[c], &deg1.arrows[e], &ideal, 3);
        assert_eq!(gb, ec);
        // … and both blocks carry exactly one relation supported on both paths.
        for key in [(3usize, 2usize), (2usize, 3usize)] {
            let block = &sym.blocks[&key];
            assert_eq!(block.relations.len(), 1);
            assert_eq!(block.relations[0].iter().filter(|c| !c.is_zero()).count(), 2);
        }
    });
}

#[test]
fn criterion_11_lusztig_abelian() {
    report(11, "Lusztig abelian", || {
        for (order, weights, label) in [
            (3u32, vec![vec![1u32, 2u32]], "μ₃ weights (1,2)"),
            (2, vec![vec![1, 0], vec![0, 1]], "μ₂×μ₂ diagonal"),
        ] {
            let model =
                builtin_reps(&BuiltinGroup::Abelian { order, weights: weights.clone() }).unwrap();
            let deg1 = invariant_degree1(&model).unwrap();
            let group_order = model.order();
            assert_eq!(deg1.arrows.len(), 2 * group_order, "{}", label);
            // Every arrow is a monomial x_l with unit coefficient, and its
            // source character is dst ⊗ ρ_l.
            for arrow in &deg1.arrows {
                let form = &arrow.entries[0][0];
                let support: Vec<usize> =
                    (0..2).filter(|&l| !form[l].is_zero()).collect();
                assert_eq!(support.len(), 1, "{}: monomial arrows", label);
                let l = support[0];
                assert!(form[l].is_one(), "{}: echelon normalization", label);
                for (gi, w) in weights.iter().enumerate() {
                    let dst_val = model.irrep_image(arrow.dst, 0).get(0, 0).clone();
                    let _ = dst_val;
                    let src = model.irreps[arrow.src].gen_images[gi].get(0, 0).clone();
                    let dst = model.irreps[arrow.dst].gen_images[gi].get(0, 0).clone();
                    let rho_l = Cyclo::root_of_unity(order, w[l] as i64);
                    assert_eq!(src, &dst * &rho_l, "{}: ρ_src = ρ_dst ⊗ ρ_l", label);
                }
            }
            // Symmetric ideal: commuting-square relations with coefficients
            // (1, −1), one per vertex pair connected by both variable orders.
            let rs = relations_degree2(&model, &deg1, &QuadraticIdeal::symmetric(2)).unwrap();
            assert_eq!(rs.total_relations(), group_order, "{}", label);
            for block in rs.blocks.values() {
                for rel in &block.relations {
                    let support: Vec<usize> =
                        (0..rel.len()).filter(|&i| !rel[i].is_zero()).collect();
                    assert_eq!(support.len(), 2, "{}: two-term relations", label);
                    let (p1, p2) = (support[0], support[1]);
                    let sum = &rel[p1] + &rel[p2];
                    assert!(sum.is_zero(), "{}: coefficients 1, −1", label);
                    // the two paths use the variables in opposite orders
                    let var_of = |arrow: usize| {
                        deg1.arrows[arrow].entries[0][0]
                            .iter()
                            .position(|c| !c.is_zero())
                            .unwrap()
                    };
                    let path1 = &block.paths[p1];
                    let path2 = &block.paths[p2];
                    assert_eq!(var_of(path1.first), var_of(path2.second), "{}", label);
                    assert_eq!(var_of(path1.second), var_of(path2.first), "{}", label);
                }
            }
        }
    });
}

#[test]
fn criterion_12_clifford_bookkeeping() {
    report(12, "Clifford bookkeeping", || {
        for (r, p, n) in GRPN_GRID {
            // res then ind reproduces the full orbit, each member once.
            for lambda in enumerate_multipartitions(r, n) {
                let orbit = orbit_of(&lambda, p).unwrap();
                let summands = res_g_to_h(&lambda, p).unwrap();
                assert_eq!(summands.len(), orbit.u);
                for h in &summands {
                    let mut back = ind_h_to_g(h);
                    back.sort();
                    let mut members = orbit.members();
                    members.sort();
                    assert_eq!(back, members, "({},{},{}) λ={}", r, p, n, lambda);
                }
            }
            // Arrow totals from the u(α) conjugates of a source orbit to any
            // target are shared equally (hence divisible by u(α)).
            let q = mckay_grpn(r, p, n).unwrap();
            let hirreps = irreps_grpn(r, p, n).unwrap();
            let mut orbit_starts: BTreeMap<String, Vec<usize>> = BTreeMap::new();
            for (vi, h) in hirreps.iter().enumerate() {
                orbit_starts.entry(h.orbit.rep.to_string()).or_default().push(vi);
            }
            for conjugates in orbit_starts.values() {
                for w in 0..q.num_vertices() {
                    let counts: Vec<u32> =
                        conjugates.iter().map(|&s| q.arrow_mult(s, w)).collect();
                    assert!(
                        counts.windows(2).all(|x| x[0] == x[1]),
                        "unequal shares in ({},{},{})",
                        r,
                        p,
                        n
                    );
                }
            }
        }
    });
}

#[test]
fn acceptance_quiver_vertices_match_irreps() {
    // Cross-check: the Lusztig quiver of the monomial G(3,1,2) model has the
    // same arrow counts as the box-moving quiver.
    let model = builtin_reps(&BuiltinGroup::Grpn { r: 3, p: 1, n: 2 }).unwrap();
    let deg1 = invariant_degree1(&model).unwrap();
    let comb = mckay_gr1n(3, 2).unwrap();
    assert_eq!(deg1.quiver.num_vertices(), comb.num_vertices());
    for i in 0..comb.num_vertices() {
        for j in 0..comb.num_vertices() {
            assert_eq!(
                deg1.quiver.arrow_mult(i, j),
                comb.arrow_mult(i, j),
                "block ({},{})",
                i,
                j
            );
        }
    }
    // Also check that the vertex labels line up with the multipartitions.
    for i in 0..comb.num_vertices() {
        assert_eq!(deg1.quiver.vertex_name(i), comb.vertex_name(i));
    }
}

#[test]
fn acceptance_standard_vertex_sanity() {
    assert_eq!(standard_vertex(1, 4).to_string(), "[3,1]");
    assert_eq!(standard_vertex(3, 5).to_string(), "[4|1|-]");
}
