use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use magma_forge_core::arithmetic::{big_factorial, count_regular_partitions, ordered_regular_partitions};
use magma_forge_core::census::{
    brute_enumerate_prps, brute_enumerate_rps, brute_iso_classes_max_arity_cyclic, brute_regular_partitions,
    count_regular_rps, prps_factors, regular_factors, rps_factors,
};
use magma_forge_core::construct::enumerate_sign_functions;
use magma_forge_core::FiniteGroup;

use crate::args::{CountArgs, CountKind};
use crate::error::{CliError, CliResult};

struct Report {
    value: BigUint,
    /// `(label, value)` lines of the breakdown.
    proof: Vec<(String, BigUint)>,
    params: Vec<(&'static str, usize)>,
}

fn need(v: Option<usize>, flag: &str, kind: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("count {kind} needs --{flag}")))
}

fn per_k(factors: Vec<BigUint>) -> Vec<(String, BigUint)> {
    factors.into_iter().enumerate().map(|(i, f)| (format!("k={}", i + 1), f)).collect()
}

fn formula(args: &CountArgs) -> CliResult<Report> {
    let name = kind_name(args.kind);
    let report = match args.kind {
        CountKind::Prps | CountKind::Regular | CountKind::Rps => {
            let (m, n) = (need(args.m, "m", name)?, need(args.n, "n", name)?);
            let factors = match args.kind {
                CountKind::Prps => prps_factors(m, n)?,
                CountKind::Regular => regular_factors(m, n)?,
                _ => rps_factors(m, n)?,
            };
            Report { value: factors.iter().product(), proof: per_k(factors), params: vec![("m", m), ("n", n)] }
        }
        CountKind::Partitions => {
            let (m, s) = (need(args.m, "m", name)?, need(args.s, "s", name)?);
            let value = count_regular_partitions(m as u64, s as u64)?;
            let proof = vec![
                ("ordered".to_string(), ordered_regular_partitions(m as u64, s as u64)),
                ("m!".to_string(), big_factorial(m as u64)),
            ];
            Report { value, proof, params: vec![("m", m), ("s", s)] }
        }
        CountKind::IsoClasses => {
            let p = need(args.p, "p", name)?;
            let value = magma_forge_core::census::count_iso_classes_max_arity_cyclic(p)?;
            let proof = vec![
                ("sign functions".to_string(), count_regular_rps(p, p - 1)?),
                ("per class".to_string(), BigUint::from(p - 1)),
            ];
            Report { value, proof, params: vec![("p", p)] }
        }
    };
    Ok(report)
}

fn oracle(args: &CountArgs, params: &[(&'static str, usize)]) -> CliResult<u64> {
    let get = |key: &str| params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).unwrap_or(0);
    Ok(match args.kind {
        CountKind::Prps => brute_enumerate_prps(get("m"), get("n"), None)?,
        CountKind::Rps => brute_enumerate_rps(get("m"), get("n"), None)?,
        CountKind::Regular => {
            let group = FiniteGroup::cyclic(get("m"))?;
            enumerate_sign_functions(&group, get("n"))?.count() as u64
        }
        CountKind::Partitions => brute_regular_partitions(get("m"), get("s"))?,
        CountKind::IsoClasses => brute_iso_classes_max_arity_cyclic(get("p"))?,
    })
}

fn kind_name(kind: CountKind) -> &'static str {
    match kind {
        CountKind::Prps => "prps",
        CountKind::Regular => "regular",
        CountKind::Rps => "rps",
        CountKind::Partitions => "partitions",
        CountKind::IsoClasses => "iso-classes",
    }
}

pub fn run(args: &CountArgs) -> CliResult<String> {
    let report = formula(args)?;
    let checked = if args.oracle { Some(oracle(args, &report.params)?) } else { None };
    let matched = checked.map(|o| BigUint::from(o) == report.value);

    let out = if args.json {
        let mut obj = Map::new();
        obj.insert("kind".into(), json!(kind_name(args.kind)));
        obj.insert("count".into(), json!(report.value.to_string()));
        for (k, v) in &report.params {
            obj.insert((*k).into(), json!(v.to_string()));
        }
        if args.proof {
            let factors: Map<String, Value> =
                report.proof.iter().map(|(label, v)| (label.clone(), json!(v.to_string()))).collect();
            obj.insert("proof".into(), Value::Object(factors));
        }
        if let (Some(o), Some(m)) = (checked, matched) {
            obj.insert("oracle".into(), json!(o.to_string()));
            obj.insert("match".into(), json!(m));
        }
        format!("{}\n", Value::Object(obj))
    } else {
        let mut out = String::new();
        if args.proof {
            for (label, v) in &report.proof {
                out.push_str(&format!("{label}: {v}\n"));
            }
        }
        match (checked, matched) {
            (Some(o), Some(m)) => {
                let verdict = if m { "MATCH" } else { "MISMATCH" };
                out.push_str(&format!("{} (oracle: {o}, {verdict})\n", report.value));
            }
            _ => out.push_str(&format!("{}\n", report.value)),
        }
        out
    };
    if matched == Some(false) {
        print!("{out}");
        return Err(CliError::Mismatch(format!("formula gives {}, oracle gives {}", report.value, checked.unwrap_or(0))));
    }
    Ok(out)
}
