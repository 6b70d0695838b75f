//! Command-line front end: McKay quivers of G(r,p,n), irreducible listings,
//! branching, oracle verification, character tables and Lusztig algebras,
//! with text, JSON and DOT output.

use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mckay::characters::{verify_quiver_gr1n, verify_quiver_grpn, CharacterTable, OracleError};
use mckay::clifford::{irreps_grpn, orbit_of};
use mckay::lusztig::{
    builtin_reps, invariant_degree1, lusztig_to_json, relations_degree2, BuiltinGroup,
    QuadraticIdeal,
};
use mckay::mckay::{
    ind_h_to_g, induce_from_product, mckay_quiver, res_g_to_h, restrict_to_product, Quiver,
    ResSummand,
};
use mckay::partitions::MultiPartition;
use mckay::Cyclo;

const DEFAULT_ORACLE_BOUND: u64 = 100_000;
const VERTEX_GUARDRAIL: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "mckay", version, about = "McKay quivers of G(r,p,n) and Lusztig algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct GroupArgs {
    /// Number of roots of unity r
    #[arg(long)]
    r: usize,
    /// Index divisor p (p | r)
    #[arg(long, default_value_t = 1)]
    p: usize,
    /// Rank n
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the McKay quiver Γ(G(r,p,n))
    Quiver {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Override the vertex-count guardrail
        #[arg(long)]
        force: bool,
    },
    /// List the irreducible representations (vertices) with dimensions,
    /// orbits, stabilizers and fundamental domains
    Irreps {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Branching: restriction and induction of a given representation
    Branch {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: u32,
        /// Representation in the [a,b|c|-] syntax
        #[arg(long)]
        rep: String,
        /// res-product | ind-product:<color> | res-H:<p> | ind-H:<p>
        #[arg(long)]
        direction: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check the combinatorial quiver against the character oracle
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// Largest group order the oracle will accept
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: u64,
    },
    /// Print the exact character table of G(r,1,n)
    Chartable {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lusztig algebra: labelled quiver and quadratic relations
    Lusztig {
        /// d4 | s3 | s4 | sn:<n> | abelian:<m>:<w11,w12;w21,w22> | grpn:<r>,<p>,<n>
        #[arg(long)]
        group: String,
        /// free | sym | ext | custom:<file>
        #[arg(long, default_value = "sym")]
        ideal: String,
        #[arg(long, value_enum, default_value = "text")]
        out: Format,
    },
}

fn parse_group_spec(spec: &str) -> Result<BuiltinGroup> {
    match spec {
        "d4" => return Ok(BuiltinGroup::D4),
        "s3" => return Ok(BuiltinGroup::S3),
        "s4" => return Ok(BuiltinGroup::Sn(4)),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("sn:") {
        let n: u32 = rest.parse().context("sn:<n> needs an integer")?;
        return Ok(BuiltinGroup::Sn(n));
    }
    if let Some(rest) = spec.strip_prefix("abelian:") {
        let (m, weights) = rest
            .split_once(':')
            .ok_or_else(|| anyhow!("abelian:<order>:<weights> expected"))?;
        let order: u32 = m.parse().context("abelian order")?;
        let weights: Result<Vec<Vec<u32>>> = weights
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|w| w.trim().parse::<u32>().map_err(|e| anyhow!("weight: {}", e)))
                    .collect()
            })
            .collect();
        return Ok(BuiltinGroup::Abelian { order, weights: weights? });
    }
    if let Some(rest) = spec.strip_prefix("grpn:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 3 {
            bail!("grpn:<r>,<p>,<n> expected");
        }
        return Ok(BuiltinGroup::Grpn {
            r: parts[0].trim().parse().context("r")?,
            p: parts[1].trim().parse().context("p")?,
            n: parts[2].trim().parse().context("n")?,
        });
    }
    bail!("unknown group specification {:?}", spec)
}

fn parse_ideal_spec(spec: &str, n: usize) -> Result<QuadraticIdeal> {
    match spec {
        "free" => return Ok(QuadraticIdeal::free(n)),
        "sym" => return Ok(QuadraticIdeal::symmetric(n)),
        "ext" => return Ok(QuadraticIdeal::exterior(n)),
        _ => {}
    }
    if let Some(path) = spec.strip_prefix("custom:") {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading ideal file {}", path))?;
        let mut basis = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let coeffs: Result<Vec<Cyclo>> = line
                .split_whitespace()
                .map(|tok| parse_scalar(tok).with_context(|| format!("line {}", ln + 1)))
                .collect();
            let coeffs = coeffs?;
            if coeffs.len() != n * n {
                bail!(
                    "ideal line {} has {} entries, expected n² = {}",
                    ln + 1,
                    coeffs.len(),
                    n * n
                );
            }
            basis.push(coeffs);
        }
        return Ok(QuadraticIdeal::custom(n, basis));
    }
    bail!("unknown ideal specification {:?}", spec)
}

/// Scalars in custom ideal files: `p/q` rationals, `z<m>^<k>` roots of
/// unity, or products `p/q*z<m>^<k>`.
fn parse_scalar(tok: &str) -> Result<Cyclo> {
    fn parse_rational(s: &str) -> Result<mckay::Rational> {
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s, "1"),
        };
        Ok(mckay::Rational::new(
            num.parse().map_err(|e| anyhow!("numerator: {}", e))?,
            den.parse().map_err(|e| anyhow!("denominator: {}", e))?,
        ))
    }
    fn parse_root(s: &str) -> Result<Cyclo> {
        let body = s.strip_prefix('z').ok_or_else(|| anyhow!("expected z<m>^<k>"))?;
        let (m, k) = match body.split_once('^') {
            Some((m, k)) => (m.parse()?, k.parse()?),
            None => (body.parse()?, 1),
        };
        Ok(Cyclo::root_of_unity(m, k))
    }
    if let Some((q, root)) = tok.split_once('*') {
        Ok(&Cyclo::from_rational(parse_rational(q)?) * &parse_root(root)?)
    } else if tok.starts_with('z') {
        parse_root(tok)
    } else {
        Ok(Cyclo::from_rational(parse_rational(tok)?))
    }
}

fn print_quiver_text(q: &Quiver) {
    println!(
        "McKay quiver: family {:?}, r={}, p={}, n={}, {} vertices, std dim {}",
        q.family,
        q.r,
        q.p,
        q.n,
        q.num_vertices(),
        q.std_dim
    );
    for w in &q.warnings {
        eprintln!("warning: {}", w);
    }
    for i in 0..q.num_vertices() {
        println!("  v{}: {} (dim {})", i, q.vertex_name(i), q.vertex_dim(i));
    }
    for (s, d, m) in q.arrows() {
        let mult = if m > 1 { format!("  (x{})", m) } else { String::new() };
        println!("  {} -> {}{}", q.vertex_name(s), q.vertex_name(d), mult);
    }
}

fn emit_quiver(q: &Quiver, format: Format) {
    match format {
        Format::Text => print_quiver_text(q),
        Format::Json => println!("{}", serde_json::to_string_pretty(&q.to_json()).unwrap()),
        Format::Dot => print!("{}", q.to_dot()),
    }
}

fn cmd_quiver(group: &GroupArgs, format: Format, force: bool) -> Result<()> {
    let vertex_estimate =
        mckay::partitions::enumerate_multipartitions(group.r.max(1), group.n).len() as u64;
    if vertex_estimate > VERTEX_GUARDRAIL && !force {
        bail!(
            "the quiver would have up to {} vertices (> {}); pass --force to proceed",
            vertex_estimate,
            VERTEX_GUARDRAIL
        );
    }
    let q = mckay_quiver(group.r, group.p, group.n)?;
    emit_quiver(&q, format);
    Ok(())
}

fn cmd_irreps(group: &GroupArgs, format: Format) -> Result<()> {
    let hirreps = irreps_grpn(group.r, group.p, group.n)?;
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = hirreps
                .iter()
                .map(|h| {
                    json!({
                        "label": h.to_string(),
                        "orbit_rep": h.orbit.rep.to_string(),
                        "dim": h.dim(),
                        "b": h.orbit.b,
                        "u": h.orbit.u,
                        "t": h.t,
                        "fundamental_domain": [
                            *h.fundamental_domain().start(),
                            *h.fundamental_domain().end()
                        ],
                    })
                })
                .collect();
            let doc = json!({
                "schema": "mckay-irreps/1",
                "r": group.r, "p": group.p, "n": group.n,
                "irreps": rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        _ => {
            println!(
                "Irreducible representations of G({},{},{}): {}",
                group.r,
                group.p,
                group.n,
                hirreps.len()
            );
            for h in &hirreps {
                let fd = h.fundamental_domain();
                println!(
                    "  {}  dim {}  b={} u={} t={}  domain components {}..{}",
                    h,
                    h.dim(),
                    h.orbit.b,
                    h.orbit.u,
                    h.t,
                    fd.start(),
                    fd.end()
                );
            }
        }
    }
    Ok(())
}

fn cmd_branch(r: usize, n: u32, rep: &str, direction: &str, format: Format) -> Result<()> {
    let lambda = MultiPartition::from_str(rep).map_err(|e| anyhow!("{}", e))?;
    if lambda.r() != r || lambda.size() != n {
        bail!("representation {} does not have r = {} and n = {}", lambda, r, n);
    }
    let mut lines: Vec<String> = Vec::new();
    if direction == "res-product" {
        for s in restrict_to_product(&lambda)? {
            lines.push(format!("{} (x) {}", s.diagram, s.color));
        }
    } else if let Some(color) = direction.strip_prefix("ind-product:") {
        let color: usize = color.parse().context("color")?;
        if color >= r {
            bail!("color must lie in 0..{}", r);
        }
        let summand = ResSummand { diagram: lambda.clone(), color };
        for t in induce_from_product(&summand) {
            lines.push(t.to_string());
        }
    } else if let Some(p) = direction.strip_prefix("res-H:") {
        let p: usize = p.parse().context("p")?;
        for h in res_g_to_h(&lambda, p)? {
            lines.push(h.to_string());
        }
    } else if let Some(p) = direction.strip_prefix("ind-H:") {
        let p: usize = p.parse().context("p")?;
        let orbit = orbit_of(&lambda, p)?;
        let h = mckay::clifford::HIrrep::new(orbit, 0);
        for t in ind_h_to_g(&h) {
            lines.push(t.to_string());
        }
    } else {
        bail!("unknown direction {:?}", direction);
    }
    match format {
        Format::Json => {
            let doc = json!({
                "schema": "mckay-branch/1",
                "rep": lambda.to_string(),
                "direction": direction,
                "summands": lines,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        _ => {
            println!("{} --{}-->", lambda, direction);
            for l in lines {
                println!("  {}", l);
            }
        }
    }
    Ok(())
}

fn cmd_verify(group: &GroupArgs, bound: u64) -> Result<bool> {
    let report = if group.p == 1 {
        verify_quiver_gr1n(group.r, group.n, bound)
    } else {
        verify_quiver_grpn(group.r, group.p, group.n, bound)
    };
    match report {
        Ok(rep) => {
            println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            Ok(rep.passed())
        }
        Err(OracleError::SizeBoundExceeded { size, bound }) => {
            bail!("refusing to verify: group order {} exceeds the bound {}", size, bound)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_chartable(r: usize, n: u32, format: Format) -> Result<()> {
    let table = CharacterTable::build(r, n)?;
    match format {
        Format::Json => {
            let doc = json!({
                "schema": "mckay-chartable/1",
                "r": r, "n": n,
                "group_order": table.group_order,
                "classes": table.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "class_sizes": table.class_sizes,
                "irreps": table.irreps.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "values": table.values,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        _ => {
            println!("Character table of G({},1,{}), |G| = {}", r, n, table.group_order);
            let header: Vec<String> = table.classes.iter().map(|c| c.to_string()).collect();
            println!("  class     {}", header.join("  "));
            println!("  size      {:?}", table.class_sizes);
            for (i, lam) in table.irreps.iter().enumerate() {
                let row: Vec<String> = table.values[i].iter().map(|v| v.to_string()).collect();
                println!("  {:<9} {}", lam.to_string(), row.join("  "));
            }
        }
    }
    Ok(())
}

fn cmd_lusztig(group: &str, ideal: &str, out: Format) -> Result<()> {
    let spec = parse_group_spec(group)?;
    let model = builtin_reps(&spec).map_err(|e| anyhow!("{}", e))?;
    let deg1 = invariant_degree1(&model).map_err(|e| anyhow!("{}", e))?;
    let ideal_spec = parse_ideal_spec(ideal, model.dim)?;
    let relations =
        relations_degree2(&model, &deg1, &ideal_spec).map_err(|e| anyhow!("{}", e))?;
    match out {
        Format::Json => {
            let doc = lusztig_to_json(&model, &deg1, Some((&ideal_spec, &relations)));
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Dot => print!("{}", deg1.quiver.to_dot()),
        Format::Text => {
            println!("Lusztig algebra data for {} (|G| = {})", model.name, model.order());
            println!("vertices:");
            for (i, rep) in model.irreps.iter().enumerate() {
                println!("  {}: {} (dim {})", i, rep.name, rep.degree);
            }
            println!("arrows (degree-1 invariant basis, {} total):", deg1.arrows.len());
            for a in &deg1.arrows {
                println!(
                    "  {}: {} -> {}",
                    a.name, model.irreps[a.src].name, model.irreps[a.dst].name
                );
                for row in &a.entries {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|form| {
                            let terms: Vec<String> = form
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(l, c)| format!("({})*x{}", c, l + 1))
                                .collect();
                            if terms.is_empty() {
                                "0".into()
                            } else {
                                terms.join(" + ")
                            }
                        })
                        .collect();
                    println!("      [ {} ]", cells.join(" , "));
                }
            }
            println!("relations for the {} ideal: {} total", ideal, relations.total_relations());
            for block in relations.blocks.values() {
                for rel in &block.relations {
                    let terms: Vec<String> = rel
                        .iter()
                        .zip(block.paths.iter())
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, p)| {
                            format!(
                                "({})*{}.{}",
                                c, deg1.arrows[p.second].name, deg1.arrows[p.first].name
                            )
                        })
                        .collect();
                    println!(
                        "  {} -> {}: {} = 0",
                        model.irreps[block.start].name,
                        model.irreps[block.end].name,
                        terms.join(" + ")
                    );
                }
            }
        }
    }
    Ok(())
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Quiver { group, format, force } => {
            cmd_quiver(&group, format, force)?;
            Ok(true)
        }
        Command::Irreps { group, format } => {
            cmd_irreps(&group, format)?;
            Ok(true)
        }
        Command::Branch { r, n, rep, direction, format } => {
            cmd_branch(r, n, &rep, &direction, format)?;
            Ok(true)
        }
        Command::Verify { group, bound } => cmd_verify(&group, bound),
        Command::Chartable { r, n, format } => {
            cmd_chartable(r, n, format)?;
            Ok(true)
        }
        Command::Lusztig { group, ideal, out } => {
            cmd_lusztig(&group, &ideal, out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
