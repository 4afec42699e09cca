//! Terms over the single basic operation and exhaustive identity checking.
//!
//! Concrete syntax: variables `x1`..`x9`, applications of the basic symbol
//! `f(t1, .., tn)`, and applications of the derived binary symbol
//! `a(t1, t2)`, which evaluates as `f(t1, t2, .., t2)`.

use std::fmt;

use crate::magma::FiniteMagma;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// Zero-based variable index; `x1` is `Var(0)`.
    Var(usize),
    /// The basic `n`-ary symbol.
    Op(Vec<Term>),
    /// The derived binary symbol.
    Derived(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn op(args: impl IntoIterator<Item = Term>) -> Term {
        Term::Op(args.into_iter().collect())
    }

    pub fn derived(x: Term, y: Term) -> Term {
        Term::Derived(Box::new(x), Box::new(y))
    }

    /// Parses the prefix syntax, e.g. `f(x1, f(x2, x3))`.
    pub fn parse(src: &str) -> Result<Term> {
        let mut p = Parser { src: src.as_bytes(), pos: 0 };
        let t = p.term()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::parse(1, format!("trailing input at column {}", p.pos + 1)));
        }
        Ok(t)
    }

    /// One more than the largest variable index, 0 for closed terms.
    pub fn variable_count(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Op(args) => args.iter().map(Term::variable_count).max().unwrap_or(0),
            Term::Derived(x, y) => x.variable_count().max(y.variable_count()),
        }
    }

    /// Checks symbol arities against a magma of arity `n`.
    pub fn check_arity(&self, n: usize) -> Result<()> {
        match self {
            Term::Var(_) => Ok(()),
            Term::Op(args) => {
                if args.len() != n {
                    return Err(Error::ArityMismatch { expected: n, found: args.len() });
                }
                args.iter().try_for_each(|t| t.check_arity(n))
            }
            Term::Derived(x, y) => {
                if n < 2 {
                    return Err(Error::ArityMismatch { expected: 2, found: n });
                }
                x.check_arity(n)?;
                y.check_arity(n)
            }
        }
    }

    /// Evaluates under an assignment. Arities must already be checked.
    pub fn eval(&self, magma: &FiniteMagma, assignment: &[usize]) -> usize {
        match self {
            Term::Var(i) => assignment[*i],
            Term::Op(args) => {
                let vals: Vec<usize> = args.iter().map(|t| t.eval(magma, assignment)).collect();
                magma.apply(&vals)
            }
            Term::Derived(x, y) => {
                let xv = x.eval(magma, assignment);
                let yv = y.eval(magma, assignment);
                let mut vals = vec![yv; magma.arity()];
                vals[0] = xv;
                magma.apply(&vals)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{}", i + 1),
            Term::Op(args) => {
                write!(f, "f(")?;
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
            Term::Derived(x, y) => write!(f, "a({x}, {y})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(1, format!("{msg} at column {}", self.pos + 1))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                match digits.parse::<usize>() {
                    Ok(i) if (1..=9).contains(&i) => Ok(Term::Var(i - 1)),
                    _ => Err(self.err("variables are x1..x9")),
                }
            }
            Some(b'f') => {
                self.pos += 1;
                self.expect(b'(')?;
                let mut args = vec![self.term()?];
                loop {
                    self.skip_ws();
                    match self.src.get(self.pos) {
                        Some(b',') => {
                            self.pos += 1;
                            args.push(self.term()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Term::Op(args));
                        }
                        _ => return Err(self.err("expected ',' or ')'")),
                    }
                }
            }
            Some(b'a') => {
                self.pos += 1;
                self.expect(b'(')?;
                let x = self.term()?;
                self.expect(b',')?;
                let y = self.term()?;
                self.expect(b')')?;
                Ok(Term::derived(x, y))
            }
            _ => Err(self.err("expected a variable, f(..) or a(..)")),
        }
    }
}

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    Fails { assignment: Vec<usize>, lhs: usize, rhs: usize },
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Holds)
    }
}

/// Checks `lhs ≈ rhs` over all `m^vars` assignments.
///
/// Injective assignments are tried first (in lexicographic order), then the
/// rest, so a failing identity reports a witness with distinct values
/// whenever one exists.
pub fn check_identity(magma: &FiniteMagma, lhs: &Term, rhs: &Term, vars: usize) -> Result<IdentityCheck> {
    lhs.check_arity(magma.arity())?;
    rhs.check_arity(magma.arity())?;
    let needed = lhs.variable_count().max(rhs.variable_count());
    if needed > vars {
        return Err(Error::DomainError(format!("terms use {needed} variables but only {vars} were declared")));
    }
    let m = magma.order();
    crate::limits::check("identity assignments m^vars", (m as u128).saturating_pow(vars as u32), crate::limits::table_cap())?;
    let mut found = None;
    for injective_pass in [true, false] {
        crate::magma::for_each_tuple(m, vars.max(1), |_, a| {
            if found.is_some() {
                return;
            }
            let injective = a.iter().enumerate().all(|(i, x)| !a[..i].contains(x));
            if injective != injective_pass {
                return;
            }
            let (l, r) = (lhs.eval(magma, a), rhs.eval(magma, a));
            if l != r {
                found = Some(IdentityCheck::Fails { assignment: a[..vars].to_vec(), lhs: l, rhs: r });
            }
        });
        if let Some(f) = found {
            return Ok(f);
        }
    }
    Ok(IdentityCheck::Holds)
}
