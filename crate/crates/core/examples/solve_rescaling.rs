//! Development tool: solves the per-arrow rescaling between the paper's
//! printed relations and the computed kernels, then reports which printed
//! relations are consistent. Output gets frozen into the acceptance tests.

use mckay::cyclotomic::Rational;
use mckay::linalg::span_contains;
use mckay::lusztig::{
    builtin_reps, invariant_degree1, relations_degree2, BuiltinGroup, DegreeOnePart,
    QuadraticIdeal, RelationSet,
};
use mckay::Cyclo;

type Term = (i64, &'static str, &'static str); // coeff, first arrow, second arrow
type PaperRelation = (&'static str, &'static str, Vec<Term>); // start, end, terms

fn arrow_index(deg1: &DegreeOnePart, names: &[(&str, usize)], letter: &str) -> usize {
    let _ = deg1;
    names.iter().find(|(l, _)| *l == letter).unwrap().1
}

/// Finds the kernel-coefficient vector of a paper relation over the block's
/// path list, with σ applied: coeff · σ(first) · σ(second) at each path.
fn transformed(
    deg1: &DegreeOnePart,
    rs: &RelationSet,
    names: &[(&str, usize)],
    rel: &PaperRelation,
    sigma: &[Option<Cyclo>],
    vertex_of: &dyn Fn(&str) -> usize,
) -> Option<(Vec<Cyclo>, (usize, usize))> {
    let block_key = (vertex_of(rel.0), vertex_of(rel.1));
    let block = rs.blocks.get(&block_key)?;
    let mut vec = vec![Cyclo::zero(); block.paths.len()];
    for (c, f, s) in &rel.2 {
        let fi = arrow_index(deg1, names, f);
        let si = arrow_index(deg1, names, s);
        let pos = block
            .paths
            .iter()
            .position(|p| p.first == fi && p.second == si)
            .unwrap_or_else(|| panic!("path {}→{} missing in block {:?}", f, s, block_key));
        let sf = sigma[fi].clone()?;
        let ss = sigma[si].clone()?;
        vec[pos] = &Cyclo::from_integer(*c) * &(&sf * &ss);
    }
    Some((vec, block_key))
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    use num_traits::Signed;
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    let cand = Rational::new(num, den);
    if &(&cand * &cand) == q {
        Some(cand)
    } else {
        None
    }
}

fn main() {
    let model = builtin_reps(&BuiltinGroup::Sn(4)).unwrap();
    let deg1 = invariant_degree1(&model).unwrap();
    let rs = relations_degree2(&model, &deg1, &QuadraticIdeal::symmetric(3)).unwrap();

    // arrow letters → global indices (S4 ordering as dumped)
    let names: Vec<(&str, usize)> = vec![
        ("A*", 0),
        ("A", 1),
        ("F", 2),
        ("B*", 3),
        ("G*", 4),
        ("B", 5),
        ("C*", 6),
        ("G", 7),
        ("C", 8),
        ("E", 9),
        ("D*", 10),
        ("D", 11),
    ];
    let vertex_of = |v: &str| -> usize {
        match v {
            "triv" => 0,
            "V" => 1,
            "W" => 2,
            "Vp" => 3,
            "det" => 4,
            _ => panic!(),
        }
    };

    let relations: Vec<PaperRelation> = vec![
        ("triv", "Vp", vec![(1, "A", "G")]),
        ("Vp", "triv", vec![(1, "G*", "A*")]),
        ("det", "V", vec![(1, "D*", "G*")]),
        ("V", "det", vec![(1, "G", "D")]),
        ("Vp", "W", vec![(1, "G*", "B"), (3, "E", "C*")]),
        ("W", "Vp", vec![(-1, "B*", "G"), (3, "C", "E")]),
        ("W", "V", vec![(2, "B*", "F"), (1, "C", "G*")]),
        ("V", "W", vec![(-2, "F", "B"), (1, "G", "C*")]),
        ("Vp", "V", vec![(2, "G*", "F"), (4, "C*", "B*"), (-1, "E", "G*")]),
        ("V", "Vp", vec![(-2, "F", "G"), (4, "B", "C"), (1, "G", "E")]),
        (
            "Vp",
            "Vp",
            vec![(3, "G*", "G"), (12, "C*", "C"), (3, "E", "E"), (16, "D", "D*")],
        ),
        (
            "V",
            "V",
            vec![(-32, "A*", "A"), (12, "F", "F"), (4, "B", "B*"), (3, "G", "G*")],
        ),
    ];

    // σ per arrow index; seed a spanning tree + one loop-free extra.
    let mut sigma: Vec<Option<Cyclo>> = vec![None; deg1.arrows.len()];
    for seed in ["A", "B", "G", "D", "C*"] {
        sigma[arrow_index(&deg1, &names, seed)] = Some(Cyclo::one());
    }

    // Propagation: for each relation, each pair of terms gives
    // σ(f_p)σ(s_p)/σ(f_q)σ(s_q) = (k_p c_q)/(k_q c_p).
    for _ in 0..20 {
        let mut progress = false;
        for (ri, rel) in relations.iter().enumerate() {
            if ri == 5 {
                continue; // the corrupt one; solve from the rest
            }
            let key = (vertex_of(rel.0), vertex_of(rel.1));
            let block = &rs.blocks[&key];
            if block.relations.len() != 1 {
                continue;
            }
            let kernel = &block.relations[0];
            let path_pos = |f: &str, s: &str| {
                let fi = arrow_index(&deg1, &names, f);
                let si = arrow_index(&deg1, &names, s);
                block
                    .paths
                    .iter()
                    .position(|p| p.first == fi && p.second == si)
                    .unwrap()
            };
            for (ci, (c1, f1, s1)) in rel.2.iter().enumerate() {
                for (c2, f2, s2) in rel.2.iter().skip(ci + 1) {
                    let k1 = &kernel[path_pos(f1, s1)];
                    let k2 = &kernel[path_pos(f2, s2)];
                    // σ(p1)/σ(p2) = (k1 c2)/(k2 c1)
                    let ratio = &(k1 * &Cyclo::from_integer(*c2))
                        / &(k2 * &Cyclo::from_integer(*c1));
                    let idx = [
                        arrow_index(&deg1, &names, f1),
                        arrow_index(&deg1, &names, s1),
                        arrow_index(&deg1, &names, f2),
                        arrow_index(&deg1, &names, s2),
                    ];
                    // product σ[0]σ[1] = ratio · σ[2]σ[3]
                    let known: Vec<Option<Cyclo>> = idx.iter().map(|&i| sigma[i].clone()).collect();
                    let unknowns: Vec<usize> =
                        (0..4).filter(|&k| known[k].is_none()).collect();
                    match unknowns.len() {
                        0 => {}
                        1 => {
                            let u = unknowns[0];
                            let mut lhs = ratio.clone();
                            // move the knowns across
                            if u < 2 {
                                lhs = &lhs * &known[2].clone().unwrap();
                                lhs = &lhs * &known[3].clone().unwrap();
                                let other = known[1 - u].clone().unwrap();
                                lhs = &lhs / &other;
                            } else {
                                let num = &known[0].clone().unwrap() * &known[1].clone().unwrap();
                                lhs = &num / &ratio;
                                let other = known[if u == 2 { 3 } else { 2 }].clone().unwrap();
                                lhs = &lhs / &other;
                            }
                            sigma[idx[u]] = Some(lhs);
                            progress = true;
                        }
                        2 => {
                            // σ_X² case: same unknown twice (loops)
                            if idx[unknowns[0]] == idx[unknowns[1]] {
                                let u = idx[unknowns[0]];
                                let mut val = ratio.clone();
                                if unknowns == [0, 1] {
                                    val = &(&val * &known[2].clone().unwrap())
                                        * &known[3].clone().unwrap();
                                } else if unknowns == [2, 3] {
                                    let num =
                                        &known[0].clone().unwrap() * &known[1].clone().unwrap();
                                    val = &num / &ratio;
                                } else {
                                    continue;
                                }
                                if let Some(q) = val.as_rational() {
                                    if let Some(root) = rational_sqrt(&q) {
                                        sigma[u] = Some(Cyclo::from_rational(root));
                                        progress = true;
                                    } else {
                                        println!(
                                            "σ² = {} for arrow {} has no rational root",
                                            q, u
                                        );
                                    }
                                }
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }

    println!("solved σ:");
    for (letter, idx) in &names {
        match &sigma[*idx] {
            Some(v) => println!("  σ_{} = {}", letter, v),
            None => println!("  σ_{} = <unsolved>", letter),
        }
    }

    for (ri, rel) in relations.iter().enumerate() {
        match transformed(&deg1, &rs, &names, rel, &sigma, &vertex_of) {
            Some((vec, key)) => {
                let block = &rs.blocks[&key];
                let ok = span_contains(&block.relations, &vec);
                println!("relation {}: block {:?} membership {}", ri + 1, key, ok);
            }
            None => println!("relation {}: undetermined σ", ri + 1),
        }
    }
}
