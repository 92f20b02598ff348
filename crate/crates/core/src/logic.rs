//! Formulas of constructive logic with strong negation and the classical-truth
//! operator `T`, evaluated in rough-set algebras.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! iff   := imp ("<->" iff)?          sugar for (a -> b) & (b -> a)
//! imp   := or ("->" imp)?            right-associative
//! or    := and ("|" and)*
//! and   := unary ("&" unary)*
//! unary := "~" unary | "!" unary | "T(" iff ")" | "(" iff ")" | "0" | "1" | ident
//! ```
//!
//! `T` is reserved and cannot be used as an atom.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nelson::{t_table, NelsonAlgebra, PairElement};
use crate::relations::{enumerate_quasiorders, QuasiOrder, RelationFilter};
use crate::roughsets::irs_direct;

/// Default limit on valuations examined per formula and algebra.
pub const DEFAULT_VALUATION_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Zero,
    One,
    /// `∼φ`
    Strong(Box<Formula>),
    /// `¬φ`, read as `φ → 0`
    Weak(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    T(Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn strong(f: Formula) -> Formula {
        Formula::Strong(Box::new(f))
    }

    pub fn weak(f: Formula) -> Formula {
        Formula::Weak(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn t(f: Formula) -> Formula {
        Formula::T(Box::new(f))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// Distinct atom names in ascending order.
    pub fn atoms(&self) -> Vec<String> {
        fn walk<'a>(f: &'a Formula, out: &mut BTreeSet<&'a str>) {
            match f {
                Formula::Atom(a) => {
                    out.insert(a);
                }
                Formula::Zero | Formula::One => {}
                Formula::Strong(x) | Formula::Weak(x) | Formula::T(x) => walk(x, out),
                Formula::And(x, y) | Formula::Or(x, y) | Formula::Imp(x, y) => {
                    walk(x, out);
                    walk(y, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out.into_iter().map(str::to_string).collect()
    }

    pub fn contains_t(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Zero | Formula::One => false,
            Formula::T(_) => true,
            Formula::Strong(x) | Formula::Weak(x) => x.contains_t(),
            Formula::And(x, y) | Formula::Or(x, y) | Formula::Imp(x, y) => {
                x.contains_t() || y.contains_t()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Zero | Formula::One => 0,
            Formula::Strong(x) | Formula::Weak(x) | Formula::T(x) => 1 + x.depth(),
            Formula::And(x, y) | Formula::Or(x, y) | Formula::Imp(x, y) => {
                1 + x.depth().max(y.depth())
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Imp(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Zero => write!(f, "0"),
            Formula::One => write!(f, "1"),
            Formula::Strong(x) => {
                write!(f, "~")?;
                x.write_at(f, 4)
            }
            Formula::Weak(x) => {
                write!(f, "!")?;
                x.write_at(f, 4)
            }
            Formula::T(x) => {
                write!(f, "T(")?;
                x.write_at(f, 0)?;
                write!(f, ")")
            }
            Formula::And(x, y) => {
                x.write_at(f, 3)?;
                write!(f, " & ")?;
                y.write_at(f, 4)
            }
            Formula::Or(x, y) => {
                x.write_at(f, 2)?;
                write!(f, " | ")?;
                y.write_at(f, 3)
            }
            Formula::Imp(x, y) => {
                x.write_at(f, 2)?;
                write!(f, " -> ")?;
                y.write_at(f, 1)
            }
        }
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Zero,
    One,
    Tilde,
    Bang,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    TOpen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |position: usize, message: &str| Error::FormulaSyntax {
        position,
        message: message.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => out.push((start, Token::Tilde)),
            b'!' => out.push((start, Token::Bang)),
            b'&' => out.push((start, Token::Amp)),
            b'|' => out.push((start, Token::Bar)),
            b'(' => out.push((start, Token::LParen)),
            b')' => out.push((start, Token::RParen)),
            b'0' => out.push((start, Token::Zero)),
            b'1' => out.push((start, Token::One)),
            b'-' => {
                if bytes.get(i + 1) != Some(&b'>') {
                    return Err(err(start, "expected `->`"));
                }
                i += 1;
                out.push((start, Token::Arrow));
            }
            b'<' => {
                if bytes.get(i + 1) != Some(&b'-') || bytes.get(i + 2) != Some(&b'>') {
                    return Err(err(start, "expected `<->`"));
                }
                i += 2;
                out.push((start, Token::DoubleArrow));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..=i];
                if word == "T" {
                    let mut k = i + 1;
                    while k < bytes.len() && bytes[k].is_ascii_whitespace() {
                        k += 1;
                    }
                    if bytes.get(k) != Some(&b'(') {
                        return Err(err(
                            start,
                            "`T` is reserved and must be applied as `T(...)`",
                        ));
                    }
                    i = k;
                    out.push((start, Token::TOpen));
                } else {
                    out.push((start, Token::Ident(word.to_string())));
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(err(start, &format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, message: &str) -> Error {
        Error::FormulaSyntax {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let left = self.imp()?;
        if self.eat(&Token::DoubleArrow) {
            let right = self.iff()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Formula> {
        let left = self.or()?;
        if self.eat(&Token::Arrow) {
            let right = self.imp()?;
            return Ok(Formula::imp(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut left = self.and()?;
        while self.eat(&Token::Bar) {
            left = Formula::or(left, self.and()?);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while self.eat(&Token::Amp) {
            left = Formula::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn close(&mut self) -> Result<()> {
        if self.eat(&Token::RParen) {
            Ok(())
        } else {
            Err(self.error("expected `)`"))
        }
    }

    fn unary(&mut self) -> Result<Formula> {
        let Some(token) = self.peek().cloned() else {
            return Err(self.error("unexpected end of formula"));
        };
        self.pos += 1;
        match token {
            Token::Tilde => Ok(Formula::strong(self.unary()?)),
            Token::Bang => Ok(Formula::weak(self.unary()?)),
            Token::TOpen => {
                let inner = self.iff()?;
                self.close()?;
                Ok(Formula::t(inner))
            }
            Token::LParen => {
                let inner = self.iff()?;
                self.close()?;
                Ok(inner)
            }
            Token::Zero => Ok(Formula::Zero),
            Token::One => Ok(Formula::One),
            Token::Ident(name) => Ok(Formula::Atom(name)),
            _ => {
                self.pos -= 1;
                Err(self.error("expected an atom, constant, unary operator or `(`"))
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = p.iff()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

/// A formula with atoms replaced by positions into a valuation slice.
enum Compiled {
    Atom(usize),
    Const(bool),
    Strong(Box<Compiled>),
    Weak(Box<Compiled>),
    And(Box<Compiled>, Box<Compiled>),
    Or(Box<Compiled>, Box<Compiled>),
    Imp(Box<Compiled>, Box<Compiled>),
    T(Box<Compiled>),
}

fn compile(f: &Formula, atoms: &[String]) -> Compiled {
    let c = |x: &Formula| Box::new(compile(x, atoms));
    match f {
        Formula::Atom(a) => Compiled::Atom(atoms.binary_search(a).expect("atom listed")),
        Formula::Zero => Compiled::Const(false),
        Formula::One => Compiled::Const(true),
        Formula::Strong(x) => Compiled::Strong(c(x)),
        Formula::Weak(x) => Compiled::Weak(c(x)),
        Formula::T(x) => Compiled::T(c(x)),
        Formula::And(x, y) => Compiled::And(c(x), c(y)),
        Formula::Or(x, y) => Compiled::Or(c(x), c(y)),
        Formula::Imp(x, y) => Compiled::Imp(c(x), c(y)),
    }
}

fn eval(c: &Compiled, a: &NelsonAlgebra, v: &[usize], t: Option<&[usize]>) -> usize {
    match c {
        Compiled::Atom(i) => v[*i],
        Compiled::Const(false) => a.zero(),
        Compiled::Const(true) => a.one(),
        Compiled::Strong(x) => a.strong_negation(eval(x, a, v, t)),
        Compiled::Weak(x) => a.implication(eval(x, a, v, t), a.zero()),
        Compiled::T(x) => t.expect("T table prepared")[eval(x, a, v, t)],
        Compiled::And(x, y) => a.meet(eval(x, a, v, t), eval(y, a, v, t)),
        Compiled::Or(x, y) => a.join(eval(x, a, v, t), eval(y, a, v, t)),
        Compiled::Imp(x, y) => a.implication(eval(x, a, v, t), eval(y, a, v, t)),
    }
}

fn prepare_t(f: &Formula, a: &NelsonAlgebra, force: bool) -> Result<Option<Vec<usize>>> {
    if f.contains_t() {
        t_table(a, force).map(Some)
    } else {
        Ok(None)
    }
}

/// Value of `f` under `valuation` (atom name to carrier index).
pub fn evaluate(
    f: &Formula,
    a: &NelsonAlgebra,
    valuation: &BTreeMap<String, usize>,
    force: bool,
) -> Result<usize> {
    let atoms = f.atoms();
    let mut v = Vec::with_capacity(atoms.len());
    for name in &atoms {
        let &i = valuation
            .get(name)
            .ok_or_else(|| Error::UnmappedAtom(name.clone()))?;
        if i >= a.len() {
            return Err(Error::Precondition(format!(
                "atom `{name}` is mapped to index {i}, outside the carrier"
            )));
        }
        v.push(i);
    }
    let t = prepare_t(f, a, force)?;
    Ok(eval(&compile(f, &atoms), a, &v, t.as_deref()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// The first valuation (in odometer order over atoms) whose value is not 1.
    Refuted {
        valuation: BTreeMap<String, usize>,
        value: usize,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

fn valuation_count(m: usize, k: usize) -> u128 {
    (m as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// Checks every valuation; refuses if there are more than `cap`.
pub fn is_valid_capped(f: &Formula, a: &NelsonAlgebra, cap: u64, force: bool) -> Result<Validity> {
    let atoms = f.atoms();
    let m = a.len();
    let needed = valuation_count(m, atoms.len());
    if needed > cap as u128 {
        return Err(Error::SearchCap { needed, cap });
    }
    let t = prepare_t(f, a, force)?;
    let c = compile(f, &atoms);
    let mut v = vec![0usize; atoms.len()];
    loop {
        let value = eval(&c, a, &v, t.as_deref());
        if value != a.one() {
            return Ok(Validity::Refuted {
                valuation: atoms.iter().cloned().zip(v.iter().copied()).collect(),
                value,
            });
        }
        // odometer, last atom fastest
        let mut k = atoms.len();
        loop {
            if k == 0 {
                return Ok(Validity::Valid);
            }
            k -= 1;
            v[k] += 1;
            if v[k] < m {
                break;
            }
            v[k] = 0;
        }
    }
}

pub fn is_valid(f: &Formula, a: &NelsonAlgebra) -> Result<Validity> {
    is_valid_capped(f, a, DEFAULT_VALUATION_CAP, false)
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub max_n: usize,
    /// Only relations whose closed points are cofinal. Forced on for formulas with `T`.
    pub effective_only: bool,
    pub cap: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Evaluate `T` on non-effective models too. Models where `T` leaves the
    /// carrier are skipped and counted.
    pub force: bool,
}

impl SearchOptions {
    pub fn new(max_n: usize) -> Self {
        SearchOptions {
            max_n,
            effective_only: false,
            cap: DEFAULT_VALUATION_CAP,
            jobs: None,
            force: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub relation: QuasiOrder,
    pub algebra: NelsonAlgebra,
    pub valuation: BTreeMap<String, PairElement>,
    pub value: PairElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Countermodel(Box<Countermodel>),
    /// No countermodel among relations of size `1..=max_n`; not a proof.
    /// `skipped` counts forced models on which `T` left the carrier.
    Exhausted {
        max_n: usize,
        models: usize,
        skipped: usize,
    },
}

impl SearchOutcome {
    pub fn countermodel(&self) -> Option<&Countermodel> {
        match self {
            SearchOutcome::Countermodel(c) => Some(c),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

type Found = Option<(usize, u64, Countermodel)>;

fn search_size(
    f: &Formula,
    n: usize,
    opts: &SearchOptions,
) -> Result<(usize, usize, Option<Countermodel>)> {
    let filter = if opts.effective_only || (f.contains_t() && !opts.force) {
        RelationFilter::CofinalClosedPoints
    } else {
        RelationFilter::All
    };
    let relations: Vec<QuasiOrder> = enumerate_quasiorders(n, filter)?.collect();
    let results: Vec<Result<(Found, bool)>> = relations
        .par_iter()
        .map(|r| {
            let algebra = irs_direct(r)?;
            let verdict = match is_valid_capped(f, &algebra, opts.cap, opts.force) {
                Err(Error::TOutsideCarrier(detail)) if opts.force => {
                    log::warn!("skipping {r:?}: {detail}");
                    return Ok((None, true));
                }
                other => other?,
            };
            match verdict {
                Validity::Valid => Ok((None, false)),
                Validity::Refuted { valuation, value } => {
                    let key = (algebra.len(), r.encoding().unwrap_or(u64::MAX));
                    let valuation = valuation
                        .into_iter()
                        .map(|(k, i)| (k, algebra.element(i)))
                        .collect();
                    let value = algebra.element(value);
                    let found = Countermodel {
                        relation: r.clone(),
                        algebra,
                        valuation,
                        value,
                    };
                    Ok((Some((key.0, key.1, found)), false))
                }
            }
        })
        .collect();
    let mut best: Found = None;
    let mut skipped = 0;
    for r in results {
        let (found, skip) = r?;
        skipped += usize::from(skip);
        if let Some(found) = found {
            if best
                .as_ref()
                .is_none_or(|b| (found.0, found.1) < (b.0, b.1))
            {
                best = Some(found);
            }
        }
    }
    Ok((relations.len(), skipped, best.map(|b| b.2)))
}

/// Searches relations of size `1..=max_n` for an algebra refuting `f`.
///
/// Within each size the winner is the refuting algebra with the smallest
/// carrier, ties broken by relation encoding, so the answer does not depend
/// on thread scheduling.
pub fn countermodel_search(f: &Formula, opts: &SearchOptions) -> Result<SearchOutcome> {
    let run = || -> Result<SearchOutcome> {
        let (mut models, mut skipped) = (0, 0);
        for n in 1..=opts.max_n {
            let (count, skip, found) = search_size(f, n, opts)?;
            models += count;
            skipped += skip;
            if let Some(c) = found {
                return Ok(SearchOutcome::Countermodel(Box::new(c)));
            }
        }
        Ok(SearchOutcome::Exhausted {
            max_n: opts.max_n,
            models,
            skipped,
        })
    };
    match opts.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

fn classical(f: &Formula, atoms: &[String], bits: u64) -> bool {
    match f {
        Formula::Atom(a) => bits >> atoms.binary_search(a).expect("atom listed") & 1 == 1,
        Formula::Zero => false,
        Formula::One => true,
        Formula::Strong(x) | Formula::Weak(x) => !classical(x, atoms, bits),
        Formula::And(x, y) => classical(x, atoms, bits) && classical(y, atoms, bits),
        Formula::Or(x, y) => classical(x, atoms, bits) || classical(y, atoms, bits),
        Formula::Imp(x, y) => !classical(x, atoms, bits) || classical(y, atoms, bits),
        Formula::T(_) => unreachable!("rejected before evaluation"),
    }
}

/// Two-valued truth tables, with both negations read classically.
pub fn classical_validity(f: &Formula) -> Result<bool> {
    if f.contains_t() {
        return Err(Error::Precondition(
            "classical validity is defined for formulas without T".into(),
        ));
    }
    let atoms = f.atoms();
    if atoms.len() > 24 {
        return Err(Error::SearchCap {
            needed: 1u128 << atoms.len(),
            cap: 1 << 24,
        });
    }
    Ok((0..1u64 << atoms.len()).all(|bits| classical(f, &atoms, bits)))
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeResult {
    pub formula: String,
    pub classical: bool,
    /// Whether some effective model up to `max_n` refutes `T(φ)`.
    pub t_refuted: bool,
    pub agree: bool,
    /// Relation and valuation refuting `T(φ)`, if any.
    pub witness: Option<String>,
}

/// Compares classical validity of `f` with the search for effective
/// countermodels to `T(f)`.
pub fn t_correspondence_probe(f: &Formula, max_n: usize) -> Result<ProbeResult> {
    let classical = classical_validity(f)?;
    let wrapped = Formula::t(f.clone());
    let mut opts = SearchOptions::new(max_n);
    opts.effective_only = true;
    let outcome = countermodel_search(&wrapped, &opts)?;
    let witness = outcome.countermodel().map(describe_countermodel);
    let t_refuted = witness.is_some();
    Ok(ProbeResult {
        formula: f.to_string(),
        classical,
        t_refuted,
        agree: classical != t_refuted,
        witness,
    })
}

/// One-line description: relation pairs, valuation and resulting value.
pub fn describe_countermodel(c: &Countermodel) -> String {
    let pairs: Vec<String> = c
        .relation
        .off_diagonal_pairs()
        .iter()
        .map(|(i, j)| format!("{i}R{j}"))
        .collect();
    let valuation: Vec<String> = c
        .valuation
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    format!(
        "n={} [{}] |IRS|={} {} value={}",
        c.relation.size(),
        pairs.join(" "),
        c.algebra.len(),
        valuation.join(" "),
        c.value
    )
}

/// Fixed corpus for the correspondence probe: classical tautologies and
/// non-tautologies, several of them invalid in the constructive sense.
pub const PROBE_CORPUS: [&str; 20] = [
    "p | ~p",
    "p",
    "~~p -> p",
    "p -> p",
    "p -> q",
    "~(p & q) <-> (~p | ~q)",
    "(p -> q) -> (~q -> ~p)",
    "((p -> q) -> p) -> p",
    "p & ~p",
    "!!p -> p",
    "p | !p",
    "(p -> q) | (q -> p)",
    "p -> (q -> p)",
    "(p & q) -> p",
    "p -> (p & q)",
    "~p -> (p -> q)",
    "(p | q) -> (p & q)",
    "!(p & !p)",
    "0 -> p",
    "1 -> p",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nelson::PairElement;
    use crate::relations::PointSet;
    use crate::roughsets::drs_construct;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn pair(l: &[usize], r: &[usize]) -> PairElement {
        PairElement::new(
            PointSet::from_points(l.iter().copied()),
            PointSet::from_points(r.iter().copied()),
        )
    }

    #[test]
    fn parse_precedence() {
        let (a, b, c) = (Formula::atom("p"), Formula::atom("q"), Formula::atom("r"));
        assert_eq!(
            p("~p -> q -> r"),
            Formula::imp(
                Formula::strong(a.clone()),
                Formula::imp(b.clone(), c.clone())
            )
        );
        assert_eq!(
            p("T(p) & !q"),
            Formula::and(Formula::t(a.clone()), Formula::weak(b.clone()))
        );
        assert_eq!(
            p("p | q & r"),
            Formula::or(a.clone(), Formula::and(b.clone(), c))
        );
        assert_eq!(p("p <-> q"), Formula::iff(a, b));
        assert_eq!(p("(p)"), p("p"));
        assert_eq!(p("T (p)"), p("T(p)"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let at = |s: &str| match parse(s) {
            Err(Error::FormulaSyntax { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(at("p &"), 3);
        assert_eq!(at("p - q"), 2);
        assert_eq!(at("(p"), 2);
        assert_eq!(at("p q"), 2);
        assert_eq!(at("T & p"), 0);
        assert_eq!(at("p $ q"), 2);
        assert_eq!(at(""), 0);
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "~p -> q -> r",
            "(p -> q) -> r",
            "p | (q | r)",
            "(p | q) | r",
            "~(p & q) <-> (~p | ~q)",
            "T(p -> q) & !!~0",
            "!(p -> 1)",
        ] {
            let f = p(s);
            assert_eq!(parse(&f.to_string()).unwrap(), f, "{s} printed as {f}");
        }
        assert_eq!(p("(p | q) | r").to_string(), "p | q | r");
        assert_eq!(p("p | (q | r)").to_string(), "p | (q | r)");
    }

    #[test]
    fn evaluate_examples() {
        let antichain = QuasiOrder::from_pairs(3, [(0, 1), (0, 2)]).unwrap();
        let drs = drs_construct(&antichain).unwrap();
        let v = BTreeMap::from([("p".to_string(), drs.index_of(pair(&[], &[1, 2])).unwrap())]);
        assert_eq!(evaluate(&p("1"), &drs, &v, false).unwrap(), drs.one());
        assert_eq!(evaluate(&p("T(p)"), &drs, &v, false).unwrap(), drs.zero());
        assert!(matches!(
            evaluate(&p("q"), &drs, &v, false),
            Err(Error::UnmappedAtom(_))
        ));

        let chain = irs_direct(&QuasiOrder::full(2).unwrap()).unwrap();
        let middle = chain.index_of(pair(&[], &[0, 1])).unwrap();
        let v = BTreeMap::from([("p".to_string(), middle)]);
        assert_eq!(evaluate(&p("p | ~p"), &chain, &v, false).unwrap(), middle);
        assert!(matches!(
            evaluate(&p("T(p)"), &chain, &v, false),
            Err(Error::NotEffective)
        ));
    }

    #[test]
    fn validity_examples() {
        let chain = irs_direct(&QuasiOrder::full(2).unwrap()).unwrap();
        assert!(is_valid(&p("p -> p"), &chain).unwrap().is_valid());
        assert!(is_valid(&p("~~p <-> p"), &chain).unwrap().is_valid());
        match is_valid(&p("p | ~p"), &chain).unwrap() {
            Validity::Refuted { valuation, .. } => {
                assert_eq!(chain.element(valuation["p"]), pair(&[], &[0, 1]));
            }
            Validity::Valid => panic!("excluded middle holds in the 3-chain"),
        }
        assert!(matches!(
            is_valid_capped(&p("p & q"), &chain, 8, false),
            Err(Error::SearchCap { needed: 9, cap: 8 })
        ));
    }

    #[test]
    fn countermodel_examples() {
        let found = countermodel_search(&p("p | ~p"), &SearchOptions::new(2)).unwrap();
        let c = found.countermodel().expect("refuted");
        assert_eq!(c.relation, QuasiOrder::full(2).unwrap());
        assert_eq!(c.algebra.len(), 3);
        assert_eq!(
            countermodel_search(&p("p -> p"), &SearchOptions::new(3)).unwrap(),
            SearchOutcome::Exhausted {
                max_n: 3,
                models: 1 + 4 + 29,
                skipped: 0
            }
        );
        let mut opts = SearchOptions::new(3);
        opts.jobs = Some(1);
        let single = countermodel_search(&p("p | ~p"), &opts).unwrap();
        assert_eq!(single, found);
    }

    #[test]
    fn classical_examples() {
        assert!(classical_validity(&p("p | ~p")).unwrap());
        assert!(!classical_validity(&p("p -> q")).unwrap());
        assert!(classical_validity(&p("~(p & q) <-> (~p | ~q)")).unwrap());
        assert!(classical_validity(&p("T(p)")).is_err());
    }

    #[test]
    fn probe_examples() {
        for (s, classical) in [("p | ~p", true), ("p", false), ("~~p -> p", true)] {
            let r = t_correspondence_probe(&p(s), 3).unwrap();
            assert_eq!(r.classical, classical, "{s}");
            assert!(r.agree, "{s}: {r:?}");
        }
    }
}
