//! Group and sign-function sources named on the command line.

use std::path::Path;

use magma_forge_core::construct::{canonical_lambda, correlated_lambda, primitive_root_lambda, simple_lambda};
use magma_forge_core::io::parse_sign;
use magma_forge_core::{FiniteGroup, KSet, SignFunction};

use crate::error::{CliError, CliResult};
use crate::read_input;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Sum(Vec<usize>),
    Semidirect { m: usize, k: usize, t: usize },
}

fn numbers(list: &str, what: &str) -> CliResult<Vec<usize>> {
    list.split(',')
        .map(|t| t.trim().parse().map_err(|_| CliError::Usage(format!("{what}: `{t}` is not a nonnegative integer"))))
        .collect()
}

impl GroupSpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("group `{text}`: expected cyclic:m, sum:m1,m2,.. or semidirect:m,k,t")))?;
        let values = numbers(rest, "group")?;
        match (kind, values.as_slice()) {
            ("cyclic", &[m]) => Ok(GroupSpec::Cyclic(m)),
            ("sum", parts) if !parts.is_empty() => Ok(GroupSpec::Sum(parts.to_vec())),
            ("semidirect", &[m, k, t]) => Ok(GroupSpec::Semidirect { m, k, t }),
            _ => Err(CliError::Usage(format!("group `{text}`: expected cyclic:m, sum:m1,m2,.. or semidirect:m,k,t"))),
        }
    }

    pub fn build(&self) -> CliResult<FiniteGroup> {
        Ok(match self {
            GroupSpec::Cyclic(m) => FiniteGroup::cyclic(*m)?,
            GroupSpec::Sum(parts) => {
                let parts = parts.iter().map(|&m| FiniteGroup::cyclic(m)).collect::<Result<Vec<_>, _>>()?;
                FiniteGroup::direct_sum(&parts)?
            }
            GroupSpec::Semidirect { m, k, t } => FiniteGroup::semidirect_cyclic(*m, *k, *t)?,
        })
    }
}

/// Reads one set per line, `u1 .. uk`.
fn parse_seed(text: &str) -> CliResult<Vec<KSet>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let elems = l
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| CliError::Usage(format!("seed line `{l}`: expected integers"))))
                .collect::<CliResult<Vec<_>>>()?;
            Ok(KSet::new(elems))
        })
        .collect()
}

pub fn resolve_lambda(source: &str, spec: &GroupSpec, group: &FiniteGroup, n: usize) -> CliResult<SignFunction> {
    let (kind, arg) = match source.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (source, None),
    };
    match (kind, arg) {
        ("canonical", None) => Ok(canonical_lambda(group, n)?),
        ("file", Some(path)) => Ok(parse_sign(&read_input(Some(Path::new(path)))?, group)?),
        ("primitive-root", None) => match spec {
            GroupSpec::Cyclic(p) => Ok(primitive_root_lambda(*p, n)?.0),
            _ => Err(CliError::Usage("--lambda primitive-root needs --group cyclic:p".into())),
        },
        ("simple", Some(pk)) => {
            let &[p, k] = numbers(pk, "simple")?.as_slice() else {
                return Err(CliError::Usage("--lambda simple:p,k takes two integers".into()));
            };
            let matches = p.checked_pow(k as u32).is_some_and(|m| *spec == GroupSpec::Cyclic(m));
            if !matches {
                return Err(CliError::Usage(format!("--lambda simple:{p},{k} needs --group cyclic:{p}^{k}")));
            }
            Ok(simple_lambda(p, k, n)?)
        }
        ("correlated", seed) => {
            let seed = match seed {
                Some(path) => parse_seed(&read_input(Some(Path::new(path)))?)?,
                None => Vec::new(),
            };
            Ok(correlated_lambda(group, n, &seed)?)
        }
        _ => Err(CliError::Usage(format!(
            "--lambda `{source}`: expected canonical, file:PATH, primitive-root, simple:p,k or correlated[:SEEDFILE]"
        ))),
    }
}
