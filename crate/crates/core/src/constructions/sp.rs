//! Series-parallel ideals built from single variables by sums and intersections.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::constructions::leaf::variable_labels;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::{Forest, Poset};

/// Expression tree of a series-parallel ideal. `Sum` is the parallel
/// connection (ideal sum), `Inter` the series connection (intersection).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpExpr {
    Var(usize),
    Sum(Box<SpExpr>, Box<SpExpr>),
    Inter(Box<SpExpr>, Box<SpExpr>),
}

impl SpExpr {
    pub fn sum(a: SpExpr, b: SpExpr) -> SpExpr {
        SpExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn inter(a: SpExpr, b: SpExpr) -> SpExpr {
        SpExpr::Inter(Box::new(a), Box::new(b))
    }

    /// Variables in left-to-right order.
    pub fn variables(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            SpExpr::Var(i) => out.push(*i),
            SpExpr::Sum(a, b) | SpExpr::Inter(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Largest variable index, which sets the ambient ring.
    pub fn ambient(&self) -> usize {
        self.variables().into_iter().max().unwrap_or(0)
    }

    /// Every index is positive and used once.
    pub fn validate(&self) -> Result<()> {
        let vars = self.variables();
        let mut seen = BTreeSet::new();
        for v in vars {
            if v == 0 {
                return Err(Error::InvalidExpression("variable index 0".into()));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidExpression(format!("variable {v} used twice")));
            }
        }
        Ok(())
    }

    fn precedence(&self) -> u8 {
        match self {
            SpExpr::Sum(..) => 1,
            SpExpr::Inter(..) => 2,
            SpExpr::Var(_) => 3,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.precedence();
        if p < min {
            write!(f, "(")?;
        }
        match self {
            SpExpr::Var(i) => write!(f, "{i}")?,
            SpExpr::Sum(a, b) => {
                a.write_prec(f, 1)?;
                write!(f, " + ")?;
                b.write_prec(f, 2)?;
            }
            SpExpr::Inter(a, b) => {
                a.write_prec(f, 2)?;
                write!(f, " * ")?;
                b.write_prec(f, 3)?;
            }
        }
        if p < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for SpExpr {
    /// Minimal parenthesization; `*` binds tighter than `+`, both associate left.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn expr(&mut self) -> Result<SpExpr> {
        let mut left = self.term()?;
        while self.peek() == Some('+') {
            self.chars.next();
            left = SpExpr::sum(left, self.term()?);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<SpExpr> {
        let mut left = self.factor()?;
        while self.peek() == Some('*') {
            self.chars.next();
            left = SpExpr::inter(left, self.factor()?);
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<SpExpr> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse(format!("missing `)` in `{}`", self.src)));
                }
                self.chars.next();
                Ok(e)
            }
            Some(c) if c == 'x' || c.is_ascii_digit() => {
                if c == 'x' {
                    self.chars.next();
                }
                let mut digits = String::new();
                while let Some(&(_, d)) = self.chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    self.chars.next();
                }
                digits
                    .parse()
                    .map(SpExpr::Var)
                    .map_err(|_| Error::Parse(format!("expected a variable index in `{}`", self.src)))
            }
            Some(c) => Err(Error::Parse(format!("unexpected `{c}` in `{}`", self.src))),
            None => Err(Error::Parse(format!("unexpected end of `{}`", self.src))),
        }
    }
}

impl FromStr for SpExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            chars: s.char_indices().peekable(),
            src: s,
        };
        let e = p.expr()?;
        if let Some(c) = p.peek() {
            return Err(Error::Parse(format!("trailing `{c}` in `{s}`")));
        }
        e.validate()?;
        Ok(e)
    }
}

/// Evaluates the expression in the ring `k[x_1..x_N]`, `N` the largest index.
pub fn sp_ideal(e: &SpExpr) -> Result<MonomialIdeal> {
    e.validate()?;
    eval(e, e.ambient())
}

fn eval(e: &SpExpr, n: usize) -> Result<MonomialIdeal> {
    match e {
        SpExpr::Var(i) => MonomialIdeal::new(n, vec![Monomial::variable(n, *i)?]),
        SpExpr::Sum(a, b) => eval(a, n)?.sum(&eval(b, n)?),
        SpExpr::Inter(a, b) => eval(a, n)?.intersection(&eval(b, n)?),
    }
}

/// `I_j = <x_j>` at leaves and `I_j = <x_j> ∩ sum of I_child` at inner nodes;
/// the trees of a forest are joined by sums.
pub fn sp_from_forest(p: &Poset) -> Result<SpExpr> {
    let f = Forest::try_from(p.clone())?;
    let labels = variable_labels(p)?;
    let by_label = |mut v: Vec<usize>| {
        v.sort_by_key(|&e| labels[e]);
        v
    };
    fn build(f: &Forest, labels: &[usize], node: usize, order: &dyn Fn(Vec<usize>) -> Vec<usize>) -> SpExpr {
        let here = SpExpr::Var(labels[node]);
        let kids = order(f.children(node));
        match join(kids.into_iter().map(|c| build(f, labels, c, order))) {
            None => here,
            Some(rest) => SpExpr::inter(here, rest),
        }
    }
    let trees = by_label(f.roots())
        .into_iter()
        .map(|r| build(&f, &labels, r, &by_label));
    join(trees).ok_or(Error::InvalidExpression("empty forest".into()))
}

fn join(parts: impl Iterator<Item = SpExpr>) -> Option<SpExpr> {
    parts.reduce(SpExpr::sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::leaf::leaf_ideal;

    const S1: &str = "( (1 * (2*3 + 4)) * (5 * (6*7 + 8)) )";

    #[test]
    fn parse_and_print() {
        let e: SpExpr = S1.parse().unwrap();
        assert_eq!(e.to_string(), "1 * (2 * 3 + 4) * (5 * (6 * 7 + 8))");
        assert_eq!(e.to_string().parse::<SpExpr>().unwrap(), e);
        let f: SpExpr = "x1 + x2 + x3".parse().unwrap();
        assert_eq!(f.to_string(), "1 + 2 + 3");
        let g: SpExpr = "1 + (2 + 3)".parse().unwrap();
        assert_eq!(g.to_string(), "1 + (2 + 3)");
        assert!("1 + 1".parse::<SpExpr>().is_err());
        assert!("1 + ".parse::<SpExpr>().is_err());
        assert!("(1 * 2".parse::<SpExpr>().is_err());
    }

    #[test]
    fn basic_ideal() {
        assert_eq!(sp_ideal(&SpExpr::Var(1)).unwrap().to_string(), "vars: 1\nx1");
    }

    #[test]
    fn s1_ideal() {
        let i = sp_ideal(&S1.parse().unwrap()).unwrap();
        assert_eq!(
            i.generators_string(),
            "x1*x2*x3*x5*x6*x7, x1*x2*x3*x5*x8, x1*x4*x5*x6*x7, x1*x4*x5*x8"
        );
    }

    #[test]
    fn forest_expressions() {
        let chain = Poset::numbered(2, &[(1, 2)]).unwrap();
        let e = sp_from_forest(&chain).unwrap();
        assert_eq!(e, SpExpr::inter(SpExpr::Var(1), SpExpr::Var(2)));
        assert_eq!(sp_ideal(&e).unwrap().to_string(), "vars: 2\nx1*x2");
        let point = Poset::numbered(1, &[]).unwrap();
        assert_eq!(sp_from_forest(&point).unwrap(), SpExpr::Var(1));
        let tree: Poset = "elements: 1,2,3,4,5\ncovers: 1<2, 1<3<4, 3<5".parse().unwrap();
        assert_eq!(
            sp_ideal(&sp_from_forest(&tree).unwrap()).unwrap(),
            leaf_ideal(&tree).unwrap()
        );
    }
}
