//! Development dump: prints arrows and relation kernels for the worked
//! models so golden tests can pin the normalizations.

use mckay::lusztig::{
    builtin_reps, invariant_degree1, relations_degree2, BuiltinGroup, QuadraticIdeal,
};

fn main() {
    for (name, spec, n) in [
        ("D4", BuiltinGroup::D4, 2usize),
        ("S3", BuiltinGroup::S3, 2),
        ("S4", BuiltinGroup::Sn(4), 3),
    ] {
        let model = builtin_reps(&spec).unwrap();
        let deg1 = invariant_degree1(&model).unwrap();
        println!("==== {} ====", name);
        for (k, a) in deg1.arrows.iter().enumerate() {
            println!("arrow {} {}: {} -> {}", k, a.name, a.src, a.dst);
            for row in &a.entries {
                let cells: Vec<String> = row
                    .iter()
                    .map(|form| {
                        form.iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(l, c)| format!("{}·x{}", c, l + 1))
                            .collect::<Vec<_>>()
                            .join("+")
                    })
                    .collect();
                println!("   [{}]", cells.join(" , "));
            }
        }
        for (label, ideal) in [
            ("sym", QuadraticIdeal::symmetric(n)),
            ("ext", QuadraticIdeal::exterior(n)),
        ] {
            let rs = relations_degree2(&model, &deg1, &ideal).unwrap();
            println!("-- ideal {} : {} relations", label, rs.total_relations());
            for block in rs.blocks.values() {
                if block.relations.is_empty() {
                    continue;
                }
                let paths: Vec<String> = block
                    .paths
                    .iter()
                    .map(|p| {
                        format!(
                            "{}∘{}",
                            deg1.arrows[p.second].name, deg1.arrows[p.first].name
                        )
                    })
                    .collect();
                println!("block {}->{} paths {:?}", block.start, block.end, paths);
                for rel in &block.relations {
                    let s: Vec<String> = rel.iter().map(|c| format!("{}", c)).collect();
                    println!("   rel [{}]", s.join(", "));
                }
            }
        }
    }
}
