//! Plain-text formats for magmas, pointings, groups, sign functions and hypertournaments.
//!
//! Blank lines and lines starting with `#` are ignored by every parser.

use std::fmt::Write as _;

use crate::construct::SignFunction;
use crate::group::FiniteGroup;
use crate::hypertournament::PointedHypertournament;
use crate::kset::KSet;
use crate::magma::{FiniteMagma, Pointing};
use crate::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::parse(line, format!("expected a nonnegative integer, found `{token}`")))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<(usize, usize, usize)> {
    let (line, text) = lines.next().ok_or_else(|| Error::parse(1, format!("missing `{keyword}` header")))?;
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [kw, a, b] if *kw == keyword => Ok((line, number(line, a)?, number(line, b)?)),
        _ => Err(Error::parse(line, format!("expected `{keyword} <int> <int>`"))),
    }
}

pub fn write_magma(a: &FiniteMagma) -> String {
    let mut out = format!("magma {} {}\n", a.order(), a.arity());
    for row in a.table().chunks(a.order()) {
        let items: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&items.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_magma(text: &str) -> Result<FiniteMagma> {
    let mut lines = content_lines(text);
    let (_, m, n) = header(&mut lines, "magma")?;
    let mut table = Vec::new();
    for (line, l) in lines {
        for tok in l.split_whitespace() {
            table.push(number(line, tok)?);
        }
    }
    FiniteMagma::new(m, n, table)
}

fn write_edge(out: &mut String, set: &KSet, w: usize) {
    let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "{} -> {w}", items.join(" "));
}

fn parse_edge(line: usize, text: &str) -> Result<(KSet, usize)> {
    let (lhs, rhs) = text.split_once("->").ok_or_else(|| Error::parse(line, "expected `u1 .. uk -> w`"))?;
    let members = lhs.split_whitespace().map(|t| number(line, t)).collect::<Result<Vec<_>>>()?;
    let set = KSet::new(members.iter().copied());
    if set.is_empty() || set.len() != members.len() {
        return Err(Error::parse(line, "edge must list distinct vertices"));
    }
    Ok((set, number(line, rhs.trim())?))
}

/// One line per set, `(k, colex)` order, after a `# pointing <m> <n>` comment.
pub fn write_pointing(p: &Pointing) -> String {
    let mut out = format!("# pointing {} {}\n", p.order(), p.arity());
    for (set, w) in p.iter() {
        write_edge(&mut out, &set, w);
    }
    out
}

/// Order and arity come from the arguments, then a `# pointing <m> <n>` comment, then the
/// largest element and largest set.
pub fn parse_pointing(text: &str, order: Option<usize>, arity: Option<usize>) -> Result<Pointing> {
    let declared = text.lines().find_map(|l| {
        let mut tokens = l.trim().strip_prefix('#')?.split_whitespace();
        (tokens.next()? == "pointing").then_some(())?;
        let m = tokens.next()?.parse::<usize>().ok()?;
        let n = tokens.next()?.parse::<usize>().ok()?;
        Some((m, n))
    });
    let order = order.or(declared.map(|d| d.0));
    let arity = arity.or(declared.map(|d| d.1));
    let pairs = content_lines(text).map(|(line, l)| parse_edge(line, l)).collect::<Result<Vec<_>>>()?;
    let m = order.unwrap_or_else(|| pairs.iter().filter_map(|(s, w)| s.largest().map(|x| x.max(*w))).max().map_or(0, |x| x + 1));
    let n = arity.unwrap_or_else(|| pairs.iter().map(|(s, _)| s.len()).max().unwrap_or(0));
    Pointing::from_pairs(m, n, pairs)
}

pub fn write_group(g: &FiniteGroup) -> String {
    let mut out = format!("group {} {}\n", g.order(), g.identity());
    for row in g.table().chunks(g.order()) {
        let items: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&items.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let (_, m, e) = header(&mut lines, "group")?;
    let mut table = Vec::new();
    for (line, l) in lines {
        for tok in l.split_whitespace() {
            table.push(number(line, tok)?);
        }
    }
    FiniteGroup::from_table_with_identity(m, e, table)
}

/// `sign <m> <n>`, then the chosen member of each class as `k: u1 .. uk`, sorted by `(k, class key)`.
pub fn write_sign(lambda: &SignFunction) -> String {
    let mut out = format!("sign {} {}\n", lambda.order(), lambda.arity());
    for u in lambda.chosen() {
        let items: Vec<String> = u.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}: {}", u.len(), items.join(" "));
    }
    out
}

pub fn parse_sign(text: &str, group: &FiniteGroup) -> Result<SignFunction> {
    let mut lines = content_lines(text);
    let (hline, m, n) = header(&mut lines, "sign")?;
    if m != group.order() {
        return Err(Error::parse(hline, format!("sign function for order {m} but the group has order {}", group.order())));
    }
    let mut chosen = Vec::new();
    for (line, l) in lines {
        let (k, rest) = l.split_once(':').ok_or_else(|| Error::parse(line, "expected `k: u1 .. uk`"))?;
        let k = number(line, k.trim())?;
        let members = rest.split_whitespace().map(|t| number(line, t)).collect::<Result<Vec<_>>>()?;
        let set = KSet::new(members.iter().copied());
        if set.len() != k || members.len() != k {
            return Err(Error::parse(line, format!("expected {k} distinct elements")));
        }
        chosen.push(set);
    }
    SignFunction::from_choices(group, n, chosen)
}

/// `htour <m> <n>`, then every edge with at least two vertices as `u1 .. uk -> w`.
pub fn write_htour(t: &PointedHypertournament) -> String {
    let mut out = format!("htour {} {}\n", t.order(), t.arity());
    for (set, w) in t.edges() {
        write_edge(&mut out, &set, w);
    }
    out
}

pub fn parse_htour(text: &str) -> Result<PointedHypertournament> {
    let mut lines = content_lines(text);
    let (_, m, n) = header(&mut lines, "htour")?;
    let edges = lines.map(|(line, l)| parse_edge(line, l)).collect::<Result<Vec<_>>>()?;
    PointedHypertournament::from_edges(m, n, edges)
}
