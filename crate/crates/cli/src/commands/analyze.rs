use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use magma_forge_core::analysis::congruence::{all_congruences, is_simple};
use magma_forge_core::analysis::iso::automorphisms;
use magma_forge_core::analysis::lattice::is_distributive;
use magma_forge_core::hypertournament::{double_tournament, embed_regular};
use magma_forge_core::io::{parse_htour, parse_magma, parse_pointing, write_htour, write_magma};
use magma_forge_core::term::{check_identity, IdentityCheck};
use magma_forge_core::{FiniteMagma, PointedHypertournament, Term};

use crate::args::{Analysis, Input};
use crate::error::CliResult;
use crate::read_input;

fn magma(input: &Input) -> CliResult<FiniteMagma> {
    Ok(parse_magma(&read_input(input.file.as_deref())?)?)
}

/// Accepts hypertournament, magma or pointing text, told apart by the first word.
fn htour(input: &Input) -> CliResult<PointedHypertournament> {
    let text = read_input(input.file.as_deref())?;
    let first = text.split_whitespace().next().unwrap_or("");
    Ok(match first {
        "magma" => PointedHypertournament::from_magma(&parse_magma(&text)?)?,
        "htour" => parse_htour(&text)?,
        _ => PointedHypertournament::new(parse_pointing(&text, None, None)?)?,
    })
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| json!(x.to_string())).collect())
}

fn render(json: bool, obj: Map<String, Value>, text: String) -> String {
    if json {
        format!("{}\n", Value::Object(obj))
    } else {
        text
    }
}

fn map_comments(map: &[usize]) -> String {
    map.iter().enumerate().map(|(u, x)| format!("# vertex {u} -> {x}\n")).collect()
}

pub fn run(what: &Analysis) -> CliResult<String> {
    match what {
        Analysis::Verify(input) => {
            let report = magma(input)?.classify();
            let mut obj = Map::new();
            let mut text = String::new();
            for (name, value) in report.flags() {
                obj.insert(name.into(), json!(value));
                let _ = writeln!(text, "{name}: {value}");
            }
            obj.insert("preimage_sizes".into(), strings(report.preimage_sizes()));
            obj.insert("per_k_counts".into(), Value::Array(report.per_k_counts.iter().map(strings).collect()));
            Ok(render(input.json, obj, text))
        }
        Analysis::Aut { input, list } => {
            let auts = automorphisms(&magma(input)?)?;
            let mut text = format!("order {}\n", auts.len());
            if *list {
                for p in &auts {
                    let _ = writeln!(text, "{p}");
                }
            }
            let mut obj = Map::new();
            obj.insert("order".into(), json!(auts.len().to_string()));
            obj.insert("automorphisms".into(), strings(&auts));
            Ok(render(input.json, obj, text))
        }
        Analysis::Con(input) => {
            let con = all_congruences(&magma(input)?)?;
            let distributive = is_distributive(&con);
            let mut text = format!("congruences {}\n", con.len());
            for theta in con.elements() {
                let _ = writeln!(text, "{theta}");
            }
            let _ = writeln!(text, "distributive: {distributive}");
            let mut obj = Map::new();
            obj.insert("count".into(), json!(con.len().to_string()));
            obj.insert("congruences".into(), strings(con.elements()));
            obj.insert("distributive".into(), json!(distributive));
            Ok(render(input.json, obj, text))
        }
        Analysis::Simple(input) => {
            let simple = is_simple(&magma(input)?)?;
            let mut obj = Map::new();
            obj.insert("simple".into(), json!(simple));
            Ok(render(input.json, obj, format!("simple: {simple}\n")))
        }
        Analysis::Identity { input, lhs, rhs, vars } => {
            let a = magma(input)?;
            let (l, r) = (Term::parse(lhs)?, Term::parse(rhs)?);
            let vars = vars.unwrap_or_else(|| l.variable_count().max(r.variable_count()));
            let mut obj = Map::new();
            let text = match check_identity(&a, &l, &r, vars)? {
                IdentityCheck::Holds => {
                    obj.insert("holds".into(), json!(true));
                    "HOLDS\n".to_string()
                }
                IdentityCheck::Fails { assignment, lhs, rhs } => {
                    let named: Vec<String> =
                        assignment.iter().enumerate().map(|(i, x)| format!("x{}={x}", i + 1)).collect();
                    let values: Map<String, Value> =
                        assignment.iter().enumerate().map(|(i, x)| (format!("x{}", i + 1), json!(x.to_string()))).collect();
                    obj.insert("holds".into(), json!(false));
                    obj.insert("assignment".into(), Value::Object(values));
                    obj.insert("lhs".into(), json!(lhs.to_string()));
                    obj.insert("rhs".into(), json!(rhs.to_string()));
                    format!("FAILS at {}\n", named.join(","))
                }
            };
            Ok(render(input.json, obj, text))
        }
        Analysis::Embed { input, moduli } => {
            let t = htour(input)?;
            let (target, witness) = embed_regular(&t, moduli.as_deref())?;
            let text = map_comments(&witness.map) + &write_magma(&target);
            let mut obj = Map::new();
            obj.insert("map".into(), strings(&witness.map));
            obj.insert("order".into(), json!(target.order().to_string()));
            obj.insert("magma".into(), json!(write_magma(&target)));
            Ok(render(input.json, obj, text))
        }
        Analysis::Double(input) => {
            let t = htour(input)?;
            let (doubled, witness) = double_tournament(&t)?;
            let text = map_comments(&witness.map) + &write_htour(&doubled);
            let mut obj = Map::new();
            obj.insert("map".into(), strings(&witness.map));
            obj.insert("order".into(), json!(doubled.order().to_string()));
            obj.insert("htour".into(), json!(write_htour(&doubled)));
            Ok(render(input.json, obj, text))
        }
    }
}

