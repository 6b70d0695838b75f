//! Lusztig algebras of explicit finite matrix groups: the degree-1
//! invariant matrix space (End(T) ⊗ V)^G, whose basis elements are the
//! labelled arrows of the McKay quiver, and the quadratic relations of the
//! basic algebra KQ/⟨I⟩ for a G-stable quadratic ideal I ⊆ V⊗V.
//!
//! Block convention: the block M^{ij} of a matrix over End(T) sits in
//! Hom(V_j, V_i ⊗ A) and encodes the arrows j → i; composing blocks
//! multiplies the entry of the later arrow on the left, so a length-2 path
//! a → b → c contributes (second form) ⊗ (first form) to V⊗V.

pub mod seminormal;
pub mod shape_s3;

use std::collections::{BTreeMap, HashMap};

use serde_json::json;
use thiserror::Error;

use crate::clifford::irreps_grpn;
use crate::cyclotomic::{Cyclo, Rational};
use crate::linalg::{self, nullspace, reduce_against, rref_in_place, Mat};
use crate::mckay::{Quiver, QuiverFamily, VertexLabel};
use crate::partitions::{enumerate_partitions, MultiPartition, Partition};

#[derive(Debug, Error)]
pub enum LusztigError {
    #[error("group closure exceeded the bound of {0} elements")]
    ClosureBound(usize),
    #[error("generator images of {0} do not define a representation")]
    NotARepresentation(String),
    #[error("Σ deg² = {sum} does not match the group order {order}")]
    DimensionCount { sum: u64, order: u64 },
    #[error("ideal is not stable under the group action")]
    IdealNotStable,
    #[error("block ({dst},{src}): solved dimension {solved} ≠ trace multiplicity {expected}")]
    BlockDimMismatch { dst: usize, src: usize, solved: usize, expected: usize },
    #[error("relations ({start}→{end}): kernel dimension {solved} ≠ trace prediction {expected}")]
    RelationDimMismatch { start: usize, end: usize, solved: usize, expected: usize },
    #[error("unsupported group specification: {0}")]
    UnsupportedGroup(String),
    #[error(transparent)]
    Clifford(#[from] crate::clifford::CliffordError),
}

/// An explicit irreducible: images of the model's abstract generators.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub name: String,
    pub degree: usize,
    pub gen_images: Vec<Mat>,
}

/// A finite matrix group with its defining representation and a complete
/// list of irreducibles, all over cyclotomic fields. Elements are fully
/// enumerated; every irreducible carries images for every element.
pub struct GroupModel {
    pub name: String,
    /// defining dimension n = dim V
    pub dim: usize,
    pub gens: Vec<Mat>,
    pub elements: Vec<Mat>,
    pub irreps: Vec<MatrixRep>,
    /// irrep_images[i][g] = ρ_i(elements[g])
    irrep_images: Vec<Vec<Mat>>,
    inverse_index: Vec<usize>,
}

fn mat_key(m: &Mat) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let v = m.get(i, j).reduced();
            let _ = write!(s, "{}:{:?};", v.order(), v.coeffs());
        }
    }
    s
}

/// Enumerates the group generated by the given invertible matrices; returns
/// the element list (identity first) and, per element, the recipe
/// (parent index, generator index) that produced it.
pub fn group_closure(
    gens: &[Mat],
    bound: usize,
) -> Result<(Vec<Mat>, Vec<Option<(usize, usize)>>), LusztigError> {
    let n = if gens.is_empty() { 1 } else { gens[0].nrows() };
    let mut elements = vec![Mat::identity(n)];
    let mut recipes: Vec<Option<(usize, usize)>> = vec![None];
    let mut index: HashMap<String, usize> = HashMap::new();
    index.insert(mat_key(&elements[0]), 0);
    let mut head = 0usize;
    while head < elements.len() {
        for (gi, g) in gens.iter().enumerate() {
            let prod = elements[head].matmul(g);
            let key = mat_key(&prod);
            if !index.contains_key(&key) {
                if elements.len() >= bound {
                    return Err(LusztigError::ClosureBound(bound));
                }
                index.insert(key, elements.len());
                elements.push(prod);
                recipes.push(Some((head, gi)));
            }
        }
        head += 1;
    }
    Ok((elements, recipes))
}

impl GroupModel {
    pub fn new(
        name: String,
        gens: Vec<Mat>,
        irreps: Vec<MatrixRep>,
        bound: usize,
    ) -> Result<Self, LusztigError> {
        let dim = if gens.is_empty() { 1 } else { gens[0].nrows() };
        let (elements, recipes) = group_closure(&gens, bound)?;
        let mut irrep_images = Vec::with_capacity(irreps.len());
        for rep in &irreps {
            let mut images = vec![Mat::identity(rep.degree)];
            for recipe in recipes.iter().skip(1) {
                let (parent, gi) = recipe.unwrap();
                images.push(images[parent].matmul(&rep.gen_images[gi]));
            }
            irrep_images.push(images);
        }
        let index: HashMap<String, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (mat_key(m), i))
            .collect();
        let inverse_index = elements
            .iter()
            .map(|m| index[&mat_key(&m.inverse().expect("group element invertible"))])
            .collect();
        let model = GroupModel { name, dim, gens, elements, irreps, irrep_images, inverse_index };
        model.validate(&index)?;
        Ok(model)
    }

    fn validate(&self, index: &HashMap<String, usize>) -> Result<(), LusztigError> {
        let order = self.order() as u64;
        let sum: u64 = self.irreps.iter().map(|r| (r.degree * r.degree) as u64).sum();
        if sum != order {
            return Err(LusztigError::DimensionCount { sum, order });
        }
        // Representation property on 100 deterministic pseudo-random pairs.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..100 {
            let a = next() % self.order();
            let b = next() % self.order();
            let ab = index[&mat_key(&self.elements[a].matmul(&self.elements[b]))];
            for (ri, rep) in self.irreps.iter().enumerate() {
                let lhs = self.irrep_images[ri][a].matmul(&self.irrep_images[ri][b]);
                if lhs != self.irrep_images[ri][ab] {
                    return Err(LusztigError::NotARepresentation(rep.name.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn irrep_image(&self, irrep: usize, element: usize) -> &Mat {
        &self.irrep_images[irrep][element]
    }

    pub fn inverse_of(&self, element: usize) -> usize {
        self.inverse_index[element]
    }

    pub fn irrep_traces(&self, irrep: usize) -> Vec<Cyclo> {
        self.irrep_images[irrep].iter().map(|m| m.trace()).collect()
    }

    pub fn defining_traces(&self) -> Vec<Cyclo> {
        self.elements.iter().map(|m| m.trace()).collect()
    }

    /// dim Hom(V_j, V_i ⊗ V) = (1/|G|) Σ_g χ_i(g) χ_V(g) conj(χ_j(g)).
    pub fn hom_multiplicity(&self, i: usize, j: usize, extra: &[Cyclo]) -> usize {
        let mut total = Cyclo::zero();
        for g in 0..self.order() {
            let term = &(&self.irrep_images[i][g].trace() * &extra[g])
                * &self.irrep_images[j][g].trace().conjugate();
            if !term.is_zero() {
                total = &total + &term;
            }
        }
        let avg = total.mul_rational(&Rational::new(1.into(), (self.order() as i64).into()));
        let q = avg
            .as_rational()
            .or_else(|| avg.reduced().as_rational())
            .expect("multiplicity must be rational");
        assert!(q.is_integer() && q >= Rational::from_integer(0.into()));
        let v: i64 = q.to_integer().try_into().unwrap();
        v as usize
    }
}

/// The built-in group models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinGroup {
    /// The dihedral reflection group of order 8 in GL(2).
    D4,
    /// S_3 acting irreducibly on 2 dimensions.
    S3,
    /// S_n with its (n−1)-dimensional reflection representation.
    Sn(u32),
    /// Diagonal abelian subgroup: generator k acts as diag(ζ_order^{w[k][j]}).
    Abelian { order: u32, weights: Vec<Vec<u32>> },
    /// The monomial reflection group G(r,p,n) in its defining representation.
    Grpn { r: usize, p: usize, n: u32 },
}

const CLOSURE_BOUND: usize = 200_000;

pub fn builtin_reps(spec: &BuiltinGroup) -> Result<GroupModel, LusztigError> {
    match spec {
        BuiltinGroup::D4 => build_d4(),
        BuiltinGroup::S3 => build_s3(),
        BuiltinGroup::Sn(n) => build_sn(*n),
        BuiltinGroup::Abelian { order, weights } => build_abelian(*order, weights),
        BuiltinGroup::Grpn { r, p, n } => build_grpn(*r, *p, *n),
    }
}

fn scalar_rep(name: &str, values: Vec<Cyclo>) -> MatrixRep {
    let gen_images = values
        .into_iter()
        .map(|v| {
            let mut m = Mat::zeros(1, 1);
            m.set(0, 0, v);
            m
        })
        .collect();
    MatrixRep { name: name.to_string(), degree: 1, gen_images }
}

fn build_d4() -> Result<GroupModel, LusztigError> {
    let i = Cyclo::zeta(4);
    let alpha = Mat::from_rows(vec![
        vec![i.clone(), Cyclo::zero()],
        vec![Cyclo::zero(), -&i],
    ]);
    let beta = Mat::from_rows(vec![
        vec![Cyclo::zero(), Cyclo::one()],
        vec![Cyclo::one(), Cyclo::zero()],
    ]);
    let one = Cyclo::one;
    let neg = || Cyclo::from_integer(-1);
    let irreps = vec![
        scalar_rep("V0", vec![one(), one()]),
        scalar_rep("V1", vec![one(), neg()]),
        scalar_rep("V2", vec![neg(), one()]),
        scalar_rep("V3", vec![neg(), neg()]),
        MatrixRep {
            name: "V4".into(),
            degree: 2,
            gen_images: vec![alpha.clone(), beta.clone()],
        },
    ];
    GroupModel::new("D4".into(), vec![alpha, beta], irreps, CLOSURE_BOUND)
}

fn build_s3() -> Result<GroupModel, LusztigError> {
    let w = Cyclo::zeta(3);
    let w2 = &w * &w;
    let s1 = Mat::from_rows(vec![
        vec![Cyclo::zero(), Cyclo::one()],
        vec![Cyclo::one(), Cyclo::zero()],
    ]);
    let s2 = Mat::from_rows(vec![
        vec![Cyclo::zero(), w.clone()],
        vec![w2, Cyclo::zero()],
    ]);
    let irreps = vec![
        scalar_rep("triv", vec![Cyclo::one(), Cyclo::one()]),
        MatrixRep { name: "V".into(), degree: 2, gen_images: vec![s1.clone(), s2.clone()] },
        scalar_rep("sgn", vec![Cyclo::from_integer(-1), Cyclo::from_integer(-1)]),
    ];
    GroupModel::new("S3".into(), vec![s1, s2], irreps, CLOSURE_BOUND)
}

fn build_sn(n: u32) -> Result<GroupModel, LusztigError> {
    if n < 2 {
        return Err(LusztigError::UnsupportedGroup(format!("sn({})", n)));
    }
    let std_shape = Partition::new(vec![n - 1, 1]).unwrap();
    let gens = seminormal::sn_seminormal(&std_shape);
    let irreps = enumerate_partitions(n)
        .into_iter()
        .map(|lam| MatrixRep {
            name: format!("[{}]", lam),
            degree: lam.syt_count() as usize,
            gen_images: seminormal::sn_seminormal(&lam),
        })
        .collect();
    GroupModel::new(format!("S{}", n), gens, irreps, CLOSURE_BOUND)
}

fn build_abelian(order: u32, weights: &[Vec<u32>]) -> Result<GroupModel, LusztigError> {
    if order == 0 || weights.is_empty() {
        return Err(LusztigError::UnsupportedGroup("abelian".into()));
    }
    let n = weights[0].len();
    if n == 0 || weights.iter().any(|w| w.len() != n) {
        return Err(LusztigError::UnsupportedGroup("abelian".into()));
    }
    let gens: Vec<Mat> = weights
        .iter()
        .map(|w| {
            let mut m = Mat::zeros(n, n);
            for (j, &wj) in w.iter().enumerate() {
                m.set(j, j, Cyclo::root_of_unity(order, wj as i64));
            }
            m
        })
        .collect();
    let (elements, _) = group_closure(&gens, CLOSURE_BOUND)?;
    let group_order = elements.len();
    // Characters χ_w(gen_k) = ζ^{Σ_l w_l·weights[k][l]}; the defining
    // characters ρ_1..ρ_n come first, then unseen candidates in lex order.
    let mut char_values: Vec<Vec<Cyclo>> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let push_char = |w: &[u32], char_values: &mut Vec<Vec<Cyclo>>, names: &mut Vec<String>| {
        let values: Vec<Cyclo> = weights
            .iter()
            .map(|row| {
                let e: u64 = row.iter().zip(w.iter()).map(|(&a, &b)| a as u64 * b as u64).sum();
                Cyclo::root_of_unity(order, (e % order as u64) as i64)
            })
            .collect();
        if !char_values.contains(&values) {
            names.push(format!("rho{}", char_values.len() + 1));
            char_values.push(values);
        }
    };
    for l in 0..n {
        let mut w = vec![0u32; n];
        w[l] = 1;
        push_char(&w, &mut char_values, &mut names);
    }
    let mut w = vec![0u32; n];
    'scan: loop {
        push_char(&w, &mut char_values, &mut names);
        if char_values.len() == group_order {
            break;
        }
        for i in 0..n {
            w[i] += 1;
            if w[i] < order {
                continue 'scan;
            }
            w[i] = 0;
        }
        break;
    }
    if char_values.len() != group_order {
        return Err(LusztigError::UnsupportedGroup(
            "abelian generators must be diagonal of order dividing the given order".into(),
        ));
    }
    let irreps = names
        .into_iter()
        .zip(char_values)
        .map(|(name, values)| scalar_rep(&name, values))
        .collect();
    GroupModel::new(format!("abelian({})", order), gens, irreps, CLOSURE_BOUND)
}

/// Monomial defining matrices of the generators of G(r,1,n):
/// s_1 = diag(ζ_r, 1, …, 1) and the adjacent transpositions s_2..s_n.
fn gr1n_monomial_gens(r: usize, n: u32) -> Vec<Mat> {
    let n = n as usize;
    let mut gens = Vec::with_capacity(n);
    let mut s1 = Mat::identity(n);
    s1.set(0, 0, Cyclo::zeta(r as u32));
    gens.push(s1);
    for k in 2..=n {
        let mut m = Mat::identity(n);
        m.set(k - 2, k - 2, Cyclo::zero());
        m.set(k - 1, k - 1, Cyclo::zero());
        m.set(k - 2, k - 1, Cyclo::one());
        m.set(k - 1, k - 2, Cyclo::one());
        gens.push(m);
    }
    gens
}

fn eval_word(gen_images: &[Mat], word: &[usize], degree: usize) -> Mat {
    let mut m = Mat::identity(degree);
    for &w in word {
        m = m.matmul(&gen_images[w]);
    }
    m
}

/// Generator words for G(r,p,n) inside G(r,1,n): the transpositions, the
/// diagonal u = s_1^p (p < r) and v = s_1 s_2 s_1^{r−1} s_2 = diag(ζ,ζ^{−1},1,…)
/// for n ≥ 2.
fn grpn_generator_words(r: usize, p: usize, n: u32) -> Vec<Vec<usize>> {
    let n = n as usize;
    if p == 1 {
        return (0..n).map(|k| vec![k]).collect();
    }
    let mut words: Vec<Vec<usize>> = Vec::new();
    if p < r {
        words.push(vec![0; p]);
    }
    if n >= 2 {
        let mut v = vec![0, 1];
        v.extend(std::iter::repeat(0).take(r - 1));
        v.push(1);
        words.push(v);
        for k in 2..=n {
            words.push(vec![k - 1]);
        }
    }
    words
}

fn build_grpn(r: usize, p: usize, n: u32) -> Result<GroupModel, LusztigError> {
    if r == 0 || p == 0 || r % p != 0 || n == 0 {
        return Err(LusztigError::UnsupportedGroup(format!("grpn:{},{},{}", r, p, n)));
    }
    let g_gens = gr1n_monomial_gens(r, n);
    let words = grpn_generator_words(r, p, n);
    let gens: Vec<Mat> = words.iter().map(|w| eval_word(&g_gens, w, n as usize)).collect();
    let mut irreps: Vec<MatrixRep> = Vec::new();
    let hirreps = irreps_grpn(r, p, n)?;
    let mut cached: Option<(MultiPartition, Vec<Mat>, Mat)> = None;
    for h in &hirreps {
        let lam = &h.orbit.rep;
        let need_rebuild = match &cached {
            Some((cl, _, _)) => cl != lam,
            None => true,
        };
        if need_rebuild {
            let ak = seminormal::gr1n_seminormal(lam);
            let dim = lam.dim() as usize;
            let h_images: Vec<Mat> = words.iter().map(|w| eval_word(&ak, w, dim)).collect();
            let intertwiner = if h.orbit.u > 1 {
                seminormal::shift_intertwiner(lam, h.orbit.b * h.orbit.d)
            } else {
                Mat::identity(1)
            };
            cached = Some((lam.clone(), h_images, intertwiner));
        }
        let (_, h_images, intertwiner) = cached.as_ref().unwrap();
        if h.orbit.u == 1 {
            irreps.push(MatrixRep {
                name: h.to_string(),
                degree: lam.dim() as usize,
                gen_images: h_images.clone(),
            });
        } else {
            // Split along the eigenspaces of the shift intertwiner; the
            // label t is attached to the eigenvalue ζ_u^t.
            let ev = Cyclo::root_of_unity(h.orbit.u as u32, h.t as i64);
            let basis = seminormal::eigenspace(intertwiner, &ev);
            let sub = seminormal::restrict_to_subspace(h_images, &basis);
            irreps.push(MatrixRep { name: h.to_string(), degree: basis.len(), gen_images: sub });
        }
    }
    GroupModel::new(format!("G({},{},{})", r, p, n), gens, irreps, CLOSURE_BOUND)
}

/// A matrix of linear forms: entries[a][b] is the coefficient vector of the
/// form over the basis x_1..x_n of V.
pub type FormMatrix = Vec<Vec<Vec<Cyclo>>>;

/// One arrow of the labelled McKay quiver: a basis element of the degree-1
/// block Hom(V_src, V_dst ⊗ V).
#[derive(Debug, Clone)]
pub struct ArrowMatrix {
    pub src: usize,
    pub dst: usize,
    pub index: usize,
    pub name: String,
    /// entries[a][b][l]: row a < deg(dst), col b < deg(src), coefficient of x_{l+1}
    pub entries: FormMatrix,
}

/// Result of the degree-1 computation: the arrow basis and the quiver it
/// spans. block_dims is keyed by (dst, src).
pub struct DegreeOnePart {
    pub arrows: Vec<ArrowMatrix>,
    pub quiver: Quiver,
    pub block_dims: BTreeMap<(usize, usize), usize>,
}

impl DegreeOnePart {
    pub fn arrows_between(&self, src: usize, dst: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.src == src && a.dst == dst)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Applies one group generator to a coefficient tensor: C ↦ ρ_i(g)·g(C)·ρ_j(g)^{-1},
/// where g acts on the linear forms through the defining matrix S (columns
/// are images of basis vectors: g(x_l) = Σ_m S[m][l] x_m).
fn block_generator_action(
    c: &FormMatrix,
    rho_i: &Mat,
    rho_j_inv: &Mat,
    s: &Mat,
) -> FormMatrix {
    let di = c.len();
    let dj = c[0].len();
    let n = c[0][0].len();
    // form transform first
    let mut t: FormMatrix = vec![vec![vec![Cyclo::zero(); n]; dj]; di];
    for a in 0..di {
        for b in 0..dj {
            for m in 0..n {
                let mut acc = Cyclo::zero();
                for l in 0..n {
                    let sv = s.get(m, l);
                    if !sv.is_zero() && !c[a][b][l].is_zero() {
                        acc = &acc + &(sv * &c[a][b][l]);
                    }
                }
                t[a][b][m] = acc;
            }
        }
    }
    // sandwich ρ_i · t · ρ_j^{-1}
    let mut out: FormMatrix = vec![vec![vec![Cyclo::zero(); n]; dj]; di];
    for a in 0..di {
        for b in 0..dj {
            for ap in 0..di {
                let lv = rho_i.get(a, ap);
                if lv.is_zero() {
                    continue;
                }
                for bp in 0..dj {
                    let rv = rho_j_inv.get(bp, b);
                    if rv.is_zero() {
                        continue;
                    }
                    let f = lv * rv;
                    for m in 0..n {
                        if !t[ap][bp][m].is_zero() {
                            out[a][b][m] = &out[a][b][m] + &(&f * &t[ap][bp][m]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Solves the degree-1 invariance system block by block and assembles the
/// labelled quiver. Every block dimension is checked against the
/// character-theoretic multiplicity from trace averaging.
pub fn invariant_degree1(model: &GroupModel) -> Result<DegreeOnePart, LusztigError> {
    let nv = model.irreps.len();
    let n = model.dim;
    let defining = model.defining_traces();
    let mut arrows: Vec<ArrowMatrix> = Vec::new();
    let mut block_dims = BTreeMap::new();
    let gen_inverses: Vec<Vec<Mat>> = model
        .irreps
        .iter()
        .map(|rep| {
            rep.gen_images
                .iter()
                .map(|g| g.inverse().expect("generator invertible"))
                .collect()
        })
        .collect();
    for i in 0..nv {
        let di = model.irreps[i].degree;
        for j in 0..nv {
            let dj = model.irreps[j].degree;
            let unknowns = di * dj * n;
            // rows of (T_g − 1) stacked over generators
            let mut rows: Vec<Vec<Cyclo>> = Vec::new();
            for (gi, s) in model.gens.iter().enumerate() {
                let rho_i = &model.irreps[i].gen_images[gi];
                let rho_j_inv = &gen_inverses[j][gi];
                // columns: action on each basis tensor
                let mut cols: Vec<FormMatrix> = Vec::with_capacity(unknowns);
                for a in 0..di {
                    for b in 0..dj {
                        for l in 0..n {
                            let mut c: FormMatrix =
                                vec![vec![vec![Cyclo::zero(); n]; dj]; di];
                            c[a][b][l] = Cyclo::one();
                            cols.push(block_generator_action(&c, rho_i, rho_j_inv, s));
                        }
                    }
                }
                for a in 0..di {
                    for b in 0..dj {
                        for m in 0..n {
                            let mut row = Vec::with_capacity(unknowns);
                            for (u, col) in cols.iter().enumerate() {
                                let mut v = col[a][b][m].clone();
                                if u == (a * dj + b) * n + m {
                                    v = &v - &Cyclo::one();
                                }
                                row.push(v);
                            }
                            rows.push(row);
                        }
                    }
                }
            }
            let basis = if rows.is_empty() {
                // trivial group: everything is invariant
                (0..unknowns)
                    .map(|u| {
                        let mut v = vec![Cyclo::zero(); unknowns];
                        v[u] = Cyclo::one();
                        v
                    })
                    .collect()
            } else {
                nullspace(&Mat::from_rows(rows))
            };
            let expected = model.hom_multiplicity(i, j, &defining);
            if basis.len() != expected {
                return Err(LusztigError::BlockDimMismatch {
                    dst: i,
                    src: j,
                    solved: basis.len(),
                    expected,
                });
            }
            block_dims.insert((i, j), basis.len());
            for (index, v) in basis.into_iter().enumerate() {
                let mut entries: FormMatrix = vec![vec![vec![Cyclo::zero(); n]; dj]; di];
                for a in 0..di {
                    for b in 0..dj {
                        for l in 0..n {
                            entries[a][b][l] = v[(a * dj + b) * n + l].clone();
                        }
                    }
                }
                let name = if expected == 1 {
                    format!("a{}_{}", j, i)
                } else {
                    format!("a{}_{}_{}", j, i, index)
                };
                arrows.push(ArrowMatrix { src: j, dst: i, index, name, entries });
            }
        }
    }
    let mut quiver = Quiver::generic(
        model
            .irreps
            .iter()
            .map(|r| (r.name.clone(), r.degree as u64))
            .collect(),
        model.dim as u64,
    );
    for (&(i, j), &m) in &block_dims {
        quiver.add_arrows(j, i, m as u32);
    }
    Ok(DegreeOnePart { arrows, quiver, block_dims })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    Free,
    Symmetric,
    Exterior,
    Custom,
}

/// A G-stable quadratic ideal: a basis of V⊗V coefficient vectors,
/// coordinates indexed by x_l ⊗ x_m ↦ l·n + m.
#[derive(Debug, Clone)]
pub struct QuadraticIdeal {
    pub n: usize,
    pub kind: IdealKind,
    pub basis: Vec<Vec<Cyclo>>,
}

impl QuadraticIdeal {
    pub fn free(n: usize) -> Self {
        QuadraticIdeal { n, kind: IdealKind::Free, basis: Vec::new() }
    }

    /// Commutators x_l x_m − x_m x_l (l < m): A = Sym(V).
    pub fn symmetric(n: usize) -> Self {
        let mut basis = Vec::new();
        for l in 0..n {
            for m in l + 1..n {
                let mut v = vec![Cyclo::zero(); n * n];
                v[l * n + m] = Cyclo::one();
                v[m * n + l] = Cyclo::from_integer(-1);
                basis.push(v);
            }
        }
        QuadraticIdeal { n, kind: IdealKind::Symmetric, basis }
    }

    /// Squares x_l² and anticommutators x_l x_m + x_m x_l: A = Λ(V).
    pub fn exterior(n: usize) -> Self {
        let mut basis = Vec::new();
        for l in 0..n {
            let mut v = vec![Cyclo::zero(); n * n];
            v[l * n + l] = Cyclo::one();
            basis.push(v);
        }
        for l in 0..n {
            for m in l + 1..n {
                let mut v = vec![Cyclo::zero(); n * n];
                v[l * n + m] = Cyclo::one();
                v[m * n + l] = Cyclo::one();
                basis.push(v);
            }
        }
        QuadraticIdeal { n, kind: IdealKind::Exterior, basis }
    }

    pub fn custom(n: usize, basis: Vec<Vec<Cyclo>>) -> Self {
        assert!(basis.iter().all(|v| v.len() == n * n));
        QuadraticIdeal { n, kind: IdealKind::Custom, basis }
    }

    /// Sum of two ideals over the same V.
    pub fn plus(&self, other: &QuadraticIdeal) -> QuadraticIdeal {
        assert_eq!(self.n, other.n);
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        QuadraticIdeal { n: self.n, kind: IdealKind::Custom, basis }
    }
}

/// g acting on V⊗V: x_l ⊗ x_m ↦ g(x_l) ⊗ g(x_m).
fn deg2_action(s: &Mat, v: &[Cyclo]) -> Vec<Cyclo> {
    let n = s.nrows();
    let mut out = vec![Cyclo::zero(); n * n];
    for l in 0..n {
        for m in 0..n {
            let c = &v[l * n + m];
            if c.is_zero() {
                continue;
            }
            for lp in 0..n {
                let a = s.get(lp, l);
                if a.is_zero() {
                    continue;
                }
                for mp in 0..n {
                    let b = s.get(mp, m);
                    if !b.is_zero() {
                        out[lp * n + mp] = &out[lp * n + mp] + &(&(a * b) * c);
                    }
                }
            }
        }
    }
    out
}

/// A reference to a length-2 path: `first` is the arrow applied first
/// (start → mid), `second` the arrow applied second (mid → end), both
/// global indices into DegreeOnePart::arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathRef {
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone)]
pub struct RelationBlock {
    pub start: usize,
    pub end: usize,
    /// composable pairs, ordered by (intermediate vertex, first-arrow index,
    /// second-arrow index)
    pub paths: Vec<PathRef>,
    /// reduced echelon basis of the relation space, coefficients over paths
    pub relations: Vec<Vec<Cyclo>>,
}

pub struct RelationSet {
    pub blocks: BTreeMap<(usize, usize), RelationBlock>,
}

impl RelationSet {
    pub fn total_relations(&self) -> usize {
        self.blocks.values().map(|b| b.relations.len()).sum()
    }
}

/// Computes the quadratic relations of KQ/⟨I⟩: for each ordered vertex pair,
/// the kernel of the map sending a combination of length-2 paths to its
/// matrix over (V⊗V)/span(I). Kernel dimensions are checked against
/// dim Hom(V_start, V_end ⊗ span I) from trace averaging.
pub fn relations_degree2(
    model: &GroupModel,
    deg1: &DegreeOnePart,
    ideal: &QuadraticIdeal,
) -> Result<RelationSet, LusztigError> {
    let n = model.dim;
    assert_eq!(ideal.n, n);
    // G-stability of the span, checked on generators.
    let mut ideal_rref: Vec<Vec<Cyclo>> = ideal.basis.clone();
    ideal_rref.retain(|v| v.iter().any(|c| !c.is_zero()));
    let pivots = rref_in_place(&mut ideal_rref);
    for s in &model.gens {
        for v in &ideal_rref {
            let image = deg2_action(s, v);
            let residual = reduce_against(&ideal_rref, &pivots, &image);
            if residual.iter().any(|c| !c.is_zero()) {
                return Err(LusztigError::IdealNotStable);
            }
        }
    }
    // χ_{span I}(g): trace of g on the ideal span, via the RREF basis.
    let ideal_traces: Vec<Cyclo> = (0..model.order())
        .map(|g| {
            let mut tr = Cyclo::zero();
            for (k, v) in ideal_rref.iter().enumerate() {
                let image = deg2_action(&model.elements[g], v);
                tr = &tr + &image[pivots[k]];
            }
            tr
        })
        .collect();

    let nv = model.irreps.len();
    let mut blocks = BTreeMap::new();
    for start in 0..nv {
        let d_start = model.irreps[start].degree;
        for end in 0..nv {
            let d_end = model.irreps[end].degree;
            let mut paths = Vec::new();
            for mid in 0..nv {
                for &f in &deg1.arrows_between(start, mid) {
                    for &s in &deg1.arrows_between(mid, end) {
                        paths.push(PathRef { first: f, second: s });
                    }
                }
            }
            let expected = model.hom_multiplicity(end, start, &ideal_traces);
            if paths.is_empty() {
                if expected != 0 {
                    return Err(LusztigError::RelationDimMismatch {
                        start,
                        end,
                        solved: 0,
                        expected,
                    });
                }
                blocks.insert(
                    (start, end),
                    RelationBlock { start, end, paths, relations: Vec::new() },
                );
                continue;
            }
            // Column per path: the composite matrix over (V⊗V)/I, flattened.
            let mut columns: Vec<Vec<Cyclo>> = Vec::with_capacity(paths.len());
            for path in &paths {
                let f = &deg1.arrows[path.first];
                let s = &deg1.arrows[path.second];
                let d_mid = model.irreps[f.dst].degree;
                let mut col = Vec::with_capacity(d_end * d_start * n * n);
                for ci in 0..d_end {
                    for ai in 0..d_start {
                        let mut entry = vec![Cyclo::zero(); n * n];
                        for bi in 0..d_mid {
                            let sf = &s.entries[ci][bi];
                            let ff = &f.entries[bi][ai];
                            for l in 0..n {
                                if sf[l].is_zero() {
                                    continue;
                                }
                                for m in 0..n {
                                    if !ff[m].is_zero() {
                                        entry[l * n + m] =
                                            &entry[l * n + m] + &(&sf[l] * &ff[m]);
                                    }
                                }
                            }
                        }
                        let reduced = if ideal_rref.is_empty() {
                            entry
                        } else {
                            reduce_against(&ideal_rref, &pivots, &entry)
                        };
                        col.extend(reduced);
                    }
                }
                columns.push(col);
            }
            let coord_count = columns[0].len();
            let mut rows: Vec<Vec<Cyclo>> = Vec::with_capacity(coord_count);
            for c in 0..coord_count {
                rows.push(columns.iter().map(|col| col[c].clone()).collect());
            }
            let relations = nullspace(&Mat::from_rows(rows));
            if relations.len() != expected {
                return Err(LusztigError::RelationDimMismatch {
                    start,
                    end,
                    solved: relations.len(),
                    expected,
                });
            }
            blocks.insert((start, end), RelationBlock { start, end, paths, relations });
        }
    }
    Ok(RelationSet { blocks })
}

/// Reynolds projection of a full End(T)-matrix of linear forms:
/// (1/|G|) Σ_g ρ_T(g)·g(M)·ρ_T(g)^{-1}. Idempotent; fixes exactly the
/// invariants.
pub fn reynolds_project(m: &FormMatrix, model: &GroupModel) -> FormMatrix {
    let d: usize = model.irreps.iter().map(|r| r.degree).sum();
    assert_eq!(m.len(), d);
    let n = model.dim;
    let offsets: Vec<usize> = {
        let mut o = vec![0usize];
        for r in &model.irreps {
            o.push(o.last().unwrap() + r.degree);
        }
        o
    };
    let block_diag = |g: usize| -> Mat {
        let mut out = Mat::zeros(d, d);
        for (ri, rep) in model.irreps.iter().enumerate() {
            let img = model.irrep_image(ri, g);
            for a in 0..rep.degree {
                for b in 0..rep.degree {
                    out.set(offsets[ri] + a, offsets[ri] + b, img.get(a, b).clone());
                }
            }
        }
        out
    };
    let mut total: FormMatrix = vec![vec![vec![Cyclo::zero(); n]; d]; d];
    for g in 0..model.order() {
        let rho = block_diag(g);
        let rho_inv = block_diag(model.inverse_of(g));
        let term = block_generator_action(m, &rho, &rho_inv, &model.elements[g]);
        for a in 0..d {
            for b in 0..d {
                for l in 0..n {
                    if !term[a][b][l].is_zero() {
                        total[a][b][l] = &total[a][b][l] + &term[a][b][l];
                    }
                }
            }
        }
    }
    let scale = Rational::new(1.into(), (model.order() as i64).into());
    for row in &mut total {
        for entry in row {
            for c in entry {
                *c = c.mul_rational(&scale);
            }
        }
    }
    total
}

/// Assembles the block matrix of all arrows with symbolic labels replaced by
/// the given scalars; used by tests and the JSON output.
pub fn arrows_to_form_matrix(
    model: &GroupModel,
    deg1: &DegreeOnePart,
    scalars: &[Cyclo],
) -> FormMatrix {
    assert_eq!(scalars.len(), deg1.arrows.len());
    let d: usize = model.irreps.iter().map(|r| r.degree).sum();
    let n = model.dim;
    let offsets: Vec<usize> = {
        let mut o = vec![0usize];
        for r in &model.irreps {
            o.push(o.last().unwrap() + r.degree);
        }
        o
    };
    let mut out: FormMatrix = vec![vec![vec![Cyclo::zero(); n]; d]; d];
    for (arrow, c) in deg1.arrows.iter().zip(scalars.iter()) {
        if c.is_zero() {
            continue;
        }
        let oi = offsets[arrow.dst];
        let oj = offsets[arrow.src];
        for (a, row) in arrow.entries.iter().enumerate() {
            for (b, form) in row.iter().enumerate() {
                for (l, v) in form.iter().enumerate() {
                    if !v.is_zero() {
                        out[oi + a][oj + b][l] = &out[oi + a][oj + b][l] + &(c * v);
                    }
                }
            }
        }
    }
    out
}

/// JSON rendering of the degree-1 part and relations (schema lusztig/1).
pub fn lusztig_to_json(
    model: &GroupModel,
    deg1: &DegreeOnePart,
    relations: Option<(&QuadraticIdeal, &RelationSet)>,
) -> serde_json::Value {
    let arrows: Vec<serde_json::Value> = deg1
        .arrows
        .iter()
        .map(|a| {
            json!({
                "name": a.name,
                "src": a.src,
                "dst": a.dst,
                "index": a.index,
                "matrix": a.entries,
            })
        })
        .collect();
    let rel_json = relations.map(|(ideal, rs)| {
        let blocks: Vec<serde_json::Value> = rs
            .blocks
            .values()
            .filter(|b| !b.relations.is_empty())
            .map(|b| {
                json!({
                    "start": b.start,
                    "end": b.end,
                    "paths": b.paths.iter().map(|p| json!({
                        "first": deg1.arrows[p.first].name,
                        "second": deg1.arrows[p.second].name,
                    })).collect::<Vec<_>>(),
                    "relations": b.relations,
                })
            })
            .collect();
        json!({
            "ideal": format!("{:?}", ideal.kind),
            "blocks": blocks,
        })
    });
    json!({
        "schema": "lusztig/1",
        "group": model.name,
        "defining_dim": model.dim,
        "order": model.order(),
        "vertices": model.irreps.iter().map(|r| json!({
            "name": r.name, "degree": r.degree,
        })).collect::<Vec<_>>(),
        "quiver": deg1.quiver.to_json(),
        "arrows": arrows,
        "relations": rel_json,
    })
}

/// Marks the quiver family for downstream consumers; the generic family is
/// produced by the Lusztig engine.
pub fn is_generic_quiver(q: &Quiver) -> bool {
    q.family == QuiverFamily::Generic
        && q
            .arrows()
            .all(|(s, d, _)| matches!(q.vertex_label(s), VertexLabel::Named(_)) || s == d)
}

pub use linalg::span_contains;
