//! Formula AST, parser, printer and structural utilities.
//!
//! ASCII surface syntax (precedence low→high: `|`, `&`, unary):
//!
//! ```text
//! atom     := lowercase identifier
//! unary    := "~" f | "[]" f | "[*]" f | "<>" f | "<*>" f
//!           | "I" f | "Tri" f | "NTri" f | "Acc" f
//! sequent  := formula "|-" formula
//! ```
//!
//! `<>`, `<*>`, `NTri` and `Acc` are shorthands and expand at parse time
//! (`<>f` to `~[]~f`, `<*>f` to `~[*]~f`, `NTri f` to `~Tri f`, `Acc f` to
//! `f & ~[*]f`). `Tri` stays a primitive: its interchangeability with
//! `[*]f | [*]~f` is something the experiment harness checks, not a
//! definition. Unicode operator aliases (¬ ∧ ∨ □ ■ ◇ ♦ ▲ ▼ • ⊢) are accepted
//! on input; output is ASCII.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A formula of the modal language.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `[]` — plain necessity: true when the operand is true in every
    /// successor, false when it is false in some successor.
    Nec(Box<Formula>),
    /// `[*]` — knowledge: true when the operand is true in every successor
    /// *and* has a uniform value across them.
    Know(Box<Formula>),
    /// `I` — factive ignorance: the operand is true here, false in every
    /// strict successor, with uniform truth-support across them.
    Ign(Box<Formula>),
    /// `Tri` — knowing-whether: the operand has the same value in every
    /// successor (and some value in each).
    Whether(Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn neg(self) -> Self {
        Formula::Neg(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn nec(self) -> Self {
        Formula::Nec(Box::new(self))
    }

    pub fn know(self) -> Self {
        Formula::Know(Box::new(self))
    }

    pub fn ign(self) -> Self {
        Formula::Ign(Box::new(self))
    }

    pub fn whether(self) -> Self {
        Formula::Whether(Box::new(self))
    }

    /// `<>f`, expanded: `~[]~f`.
    pub fn poss(self) -> Self {
        self.neg().nec().neg()
    }

    /// `<*>f`, expanded: `~[*]~f`.
    pub fn kposs(self) -> Self {
        self.neg().know().neg()
    }

    /// `Acc f` (unknown truth), expanded: `f & ~[*]f`.
    pub fn acc(self) -> Self {
        self.clone().and(self.know().neg())
    }

    /// `NTri f` (not knowing whether), expanded: `~Tri f`.
    pub fn nwhether(self) -> Self {
        self.whether().neg()
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Var(_) => vec![],
            Formula::Neg(a)
            | Formula::Nec(a)
            | Formula::Know(a)
            | Formula::Ign(a)
            | Formula::Whether(a) => vec![a],
            Formula::And(a, b) | Formula::Or(a, b) => vec![a, b],
        }
    }

    /// Number of AST nodes.
    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(|c| c.node_count()).sum::<usize>()
    }

    /// Maximum nesting of modal constructors (`[]`, `[*]`, `I`, `Tri`).
    pub fn modal_depth(&self) -> usize {
        let inner = self
            .children()
            .iter()
            .map(|c| c.modal_depth())
            .max()
            .unwrap_or(0);
        match self {
            Formula::Nec(_) | Formula::Know(_) | Formula::Ign(_) | Formula::Whether(_) => inner + 1,
            _ => inner,
        }
    }

    /// All subformulas including `self`, deduplicated, in post-order
    /// (children before parents).
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut seen: BTreeSet<&Formula> = BTreeSet::new();
        let mut out = Vec::new();
        fn walk<'a>(f: &'a Formula, seen: &mut BTreeSet<&'a Formula>, out: &mut Vec<&'a Formula>) {
            for c in f.children() {
                walk(c, seen, out);
            }
            if seen.insert(f) {
                out.push(f);
            }
        }
        walk(self, &mut seen, &mut out);
        out
    }

    /// Atom names occurring in the formula, sorted.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut set = BTreeSet::new();
        fn walk<'a>(f: &'a Formula, set: &mut BTreeSet<&'a str>) {
            if let Formula::Var(name) = f {
                set.insert(name.as_str());
            }
            for c in f.children() {
                walk(c, set);
            }
        }
        walk(self, &mut set);
        set
    }

    /// True iff every modal constructor in the formula belongs to `sig`.
    /// `Tri` belongs to no signature, so formulas containing it are in no
    /// fragment.
    pub fn in_fragment(&self, sig: Signature) -> bool {
        let here = match self {
            Formula::Nec(_) => sig.nec,
            Formula::Know(_) => sig.know,
            Formula::Ign(_) => sig.ign,
            Formula::Whether(_) => false,
            _ => true,
        };
        here && self.children().iter().all(|c| c.in_fragment(sig))
    }
}

/// A single-premise, single-conclusion sequent `lhs |- rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Sequent {
    pub fn new(lhs: Formula, rhs: Formula) -> Self {
        Sequent { lhs, rhs }
    }

    /// Atom names of both sides, sorted.
    pub fn atoms(&self) -> Vec<String> {
        let mut set = self.lhs.atoms();
        set.extend(self.rhs.atoms());
        set.into_iter().map(str::to_owned).collect()
    }
}

/// A set of allowed modal constructors, identifying a language fragment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    pub nec: bool,
    pub know: bool,
    pub ign: bool,
}

impl Signature {
    /// Propositional fragment: no modalities.
    pub const EMPTY: Signature = Signature { nec: false, know: false, ign: false };
    /// `[]` only.
    pub const NEC: Signature = Signature { nec: true, know: false, ign: false };
    /// `[*]` only.
    pub const KNOW: Signature = Signature { nec: false, know: true, ign: false };
    /// `I` only.
    pub const IGN: Signature = Signature { nec: false, know: false, ign: true };
    /// `[*]` and `I` (the fragment the tableau calculus covers).
    pub const KNOW_IGN: Signature = Signature { nec: false, know: true, ign: true };
    /// All three modalities.
    pub const ALL: Signature = Signature { nec: true, know: true, ign: true };
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.nec {
            parts.push("[]");
        }
        if self.know {
            parts.push("[*]");
        }
        if self.ign {
            parts.push("I");
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

// Precedence levels for printing: Or = 1, And = 2, unary/atom = 3.
fn fmt_prec(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Var(name) => write!(out, "{name}"),
        Formula::Or(a, b) => {
            let parens = min > 1;
            if parens {
                write!(out, "(")?;
            }
            fmt_prec(a, 1, out)?;
            write!(out, " | ")?;
            fmt_prec(b, 2, out)?;
            if parens {
                write!(out, ")")?;
            }
            Ok(())
        }
        Formula::And(a, b) => {
            let parens = min > 2;
            if parens {
                write!(out, "(")?;
            }
            fmt_prec(a, 2, out)?;
            write!(out, " & ")?;
            fmt_prec(b, 3, out)?;
            if parens {
                write!(out, ")")?;
            }
            Ok(())
        }
        Formula::Neg(a) => {
            write!(out, "~")?;
            fmt_prec(a, 3, out)
        }
        Formula::Nec(a) => {
            write!(out, "[]")?;
            fmt_prec(a, 3, out)
        }
        Formula::Know(a) => {
            write!(out, "[*]")?;
            fmt_prec(a, 3, out)
        }
        Formula::Ign(a) => {
            write!(out, "I")?;
            fmt_prec(a, 3, out)
        }
        Formula::Whether(a) => {
            write!(out, "Tri ")?;
            fmt_prec(a, 3, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 1, f)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

/// Parse error with byte offset and the token set that would have been
/// accepted at that point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    fn new(offset: usize, expected: &[&str], found: impl Into<String>) -> Self {
        ParseError {
            offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.into(),
        }
    }
}

/// Result of [`parse`]: the input was a bare formula or a sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Formula(Formula),
    Sequent(Sequent),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Nec,
    Know,
    Poss,
    KPoss,
    Ign,
    Whether,
    NWhether,
    Acc,
    LPar,
    RPar,
    Turnstile,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Nec => "`[]`".into(),
            Tok::Know => "`[*]`".into(),
            Tok::Poss => "`<>`".into(),
            Tok::KPoss => "`<*>`".into(),
            Tok::Ign => "`I`".into(),
            Tok::Whether => "`Tri`".into(),
            Tok::NWhether => "`NTri`".into(),
            Tok::Acc => "`Acc`".into(),
            Tok::LPar => "`(`".into(),
            Tok::RPar => "`)`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const FORMULA_START: &[&str] = &[
    "identifier", "`~`", "`[]`", "`[*]`", "`<>`", "`<*>`", "`I`", "`Tri`", "`NTri`", "`Acc`",
    "`(`",
];

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut lx = Lexer { src, toks: Vec::new() };
        lx.lex()?;
        Ok(lx.toks)
    }

    fn lex(&mut self) -> Result<(), ParseError> {
        let bytes = self.src.as_bytes();
        let mut it = self.src.char_indices().peekable();
        while let Some(&(at, c)) = it.peek() {
            match c {
                _ if c.is_whitespace() => {
                    it.next();
                }
                '~' | '¬' => {
                    self.toks.push((at, Tok::Not));
                    it.next();
                }
                '&' | '∧' => {
                    self.toks.push((at, Tok::And));
                    it.next();
                }
                '∨' => {
                    self.toks.push((at, Tok::Or));
                    it.next();
                }
                '⊢' => {
                    self.toks.push((at, Tok::Turnstile));
                    it.next();
                }
                '□' => {
                    self.toks.push((at, Tok::Nec));
                    it.next();
                }
                '■' => {
                    self.toks.push((at, Tok::Know));
                    it.next();
                }
                '◇' => {
                    self.toks.push((at, Tok::Poss));
                    it.next();
                }
                '♦' => {
                    self.toks.push((at, Tok::KPoss));
                    it.next();
                }
                '▲' => {
                    self.toks.push((at, Tok::Whether));
                    it.next();
                }
                '▼' => {
                    self.toks.push((at, Tok::NWhether));
                    it.next();
                }
                '•' => {
                    self.toks.push((at, Tok::Acc));
                    it.next();
                }
                '(' => {
                    self.toks.push((at, Tok::LPar));
                    it.next();
                }
                ')' => {
                    self.toks.push((at, Tok::RPar));
                    it.next();
                }
                '|' => {
                    it.next();
                    if bytes.get(at + 1) == Some(&b'-') {
                        it.next();
                        self.toks.push((at, Tok::Turnstile));
                    } else {
                        self.toks.push((at, Tok::Or));
                    }
                }
                '[' => {
                    it.next();
                    match bytes.get(at + 1) {
                        Some(&b']') => {
                            it.next();
                            self.toks.push((at, Tok::Nec));
                        }
                        Some(&b'*') if bytes.get(at + 2) == Some(&b']') => {
                            it.next();
                            it.next();
                            self.toks.push((at, Tok::Know));
                        }
                        _ => {
                            return Err(ParseError::new(at, &["`[]`", "`[*]`"], "`[`"));
                        }
                    }
                }
                '<' => {
                    it.next();
                    match bytes.get(at + 1) {
                        Some(&b'>') => {
                            it.next();
                            self.toks.push((at, Tok::Poss));
                        }
                        Some(&b'*') if bytes.get(at + 2) == Some(&b'>') => {
                            it.next();
                            it.next();
                            self.toks.push((at, Tok::KPoss));
                        }
                        _ => {
                            return Err(ParseError::new(at, &["`<>`", "`<*>`"], "`<`"));
                        }
                    }
                }
                'a'..='z' => {
                    let mut end = at;
                    while let Some(&(j, cj)) = it.peek() {
                        if cj.is_ascii_alphanumeric() || cj == '_' {
                            end = j + cj.len_utf8();
                            it.next();
                        } else {
                            break;
                        }
                    }
                    self.toks.push((at, Tok::Ident(self.src[at..end].to_string())));
                }
                'A'..='Z' => {
                    // Uppercase runs are operator words; longest match first so
                    // that `Ip` lexes as `I` `p` and `NTrip` as `NTri` `p`.
                    let rest = &self.src[at..];
                    let tok = if rest.starts_with("NTri") {
                        (4, Tok::NWhether)
                    } else if rest.starts_with("Tri") {
                        (3, Tok::Whether)
                    } else if rest.starts_with("Acc") {
                        (3, Tok::Acc)
                    } else if rest.starts_with('I') {
                        (1, Tok::Ign)
                    } else {
                        return Err(ParseError::new(
                            at,
                            &["`I`", "`Tri`", "`NTri`", "`Acc`"],
                            format!("`{c}`"),
                        ));
                    };
                    for _ in 0..tok.0 {
                        it.next();
                    }
                    self.toks.push((at, tok.1));
                }
                _ => {
                    return Err(ParseError::new(at, FORMULA_START, format!("`{c}`")));
                }
            }
        }
        self.toks.push((self.src.len(), Tok::Eof));
        Ok(())
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        let (at, tok) = self.peek();
        ParseError::new(*at, expected, tok.describe())
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conjunct()?;
        while matches!(self.peek().1, Tok::Or) {
            self.bump();
            let right = self.conjunct()?;
            left = left.or(right);
        }
        Ok(left)
    }

    fn conjunct(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        while matches!(self.peek().1, Tok::And) {
            self.bump();
            let right = self.unary()?;
            left = left.and(right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().1.clone() {
            Tok::Not => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Nec => {
                self.bump();
                Ok(self.unary()?.nec())
            }
            Tok::Know => {
                self.bump();
                Ok(self.unary()?.know())
            }
            Tok::Ign => {
                self.bump();
                Ok(self.unary()?.ign())
            }
            Tok::Whether => {
                self.bump();
                Ok(self.unary()?.whether())
            }
            Tok::Poss => {
                self.bump();
                Ok(self.unary()?.poss())
            }
            Tok::KPoss => {
                self.bump();
                Ok(self.unary()?.kposs())
            }
            Tok::NWhether => {
                self.bump();
                Ok(self.unary()?.nwhether())
            }
            Tok::Acc => {
                self.bump();
                Ok(self.unary()?.acc())
            }
            Tok::LPar => {
                self.bump();
                let inner = self.formula()?;
                if matches!(self.peek().1, Tok::RPar) {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.err(&["`)`", "`&`", "`|`"]))
                }
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            _ => Err(self.err(FORMULA_START)),
        }
    }
}

/// Parse a bare formula or a `lhs |- rhs` sequent.
pub fn parse(text: &str) -> Result<Input, ParseError> {
    let toks = Lexer::run(text)?;
    let mut p = Parser { toks, pos: 0 };
    let first = p.formula()?;
    match p.peek().1 {
        Tok::Turnstile => {
            p.bump();
            let second = p.formula()?;
            if matches!(p.peek().1, Tok::Eof) {
                Ok(Input::Sequent(Sequent::new(first, second)))
            } else {
                Err(p.err(&["end of input", "`&`", "`|`"]))
            }
        }
        Tok::Eof => Ok(Input::Formula(first)),
        _ => Err(p.err(&["end of input", "`&`", "`|`", "`|-`"])),
    }
}

/// Parse a formula; a sequent is a syntax error here.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    match parse(text)? {
        Input::Formula(f) => Ok(f),
        Input::Sequent(_) => Err(ParseError::new(
            text.find("|-").or_else(|| text.find('⊢')).unwrap_or(0),
            &["a formula without `|-`"],
            "`|-`",
        )),
    }
}

/// Parse a sequent; a bare formula is a syntax error.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    match parse(text)? {
        Input::Sequent(s) => Ok(s),
        Input::Formula(_) => {
            Err(ParseError::new(text.len(), &["`|-`"], "end of input"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn parses_know_and_ign() {
        let f = parse_formula("[*]p & Iq").unwrap();
        assert_eq!(f, p().know().and(q().ign()));
    }

    #[test]
    fn parses_sequent() {
        let s = parse_sequent("Ip & Iq |- I(p | q)").unwrap();
        assert_eq!(s.lhs, p().ign().and(q().ign()));
        assert_eq!(s.rhs, p().or(q()).ign());
    }

    #[test]
    fn reports_offset_and_expected_set() {
        let err = parse("p & | q").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.expected.contains(&"identifier".to_string()));
    }

    #[test]
    fn expands_shorthands() {
        assert_eq!(parse_formula("Acc p").unwrap(), p().and(p().know().neg()));
        assert_eq!(parse_formula("<*>p").unwrap(), p().neg().know().neg());
        assert_eq!(
            parse_formula("<>(p & q)").unwrap(),
            p().and(q()).neg().nec().neg()
        );
        assert_eq!(parse_formula("NTri p").unwrap(), p().whether().neg());
    }

    #[test]
    fn whether_is_primitive() {
        assert_eq!(parse_formula("Tri p").unwrap(), p().whether());
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            parse("■p ∧ ¬□q ⊢ ♦p ∨ ▲q").unwrap(),
            parse("[*]p & ~[]q |- <*>p | Tri q").unwrap()
        );
        assert_eq!(parse_formula("•p").unwrap(), parse_formula("Acc p").unwrap());
        assert_eq!(parse_formula("▼p").unwrap(), parse_formula("NTri p").unwrap());
        assert_eq!(parse_formula("◇p").unwrap(), parse_formula("<>p").unwrap());
    }

    #[test]
    fn uppercase_words_split_greedily() {
        assert_eq!(parse_formula("Ip").unwrap(), p().ign());
        assert_eq!(parse_formula("Trip").unwrap(), p().whether());
        assert_eq!(parse_formula("NTrip").unwrap(), p().whether().neg());
        assert_eq!(parse_formula("IIp").unwrap(), p().ign().ign());
        assert!(parse_formula("Xp").is_err());
    }

    #[test]
    fn subformulas_examples() {
        let f = p().and(q()).know();
        let subs: Vec<String> = f.subformulas().iter().map(|s| s.to_string()).collect();
        assert_eq!(subs, ["p", "q", "p & q", "[*](p & q)"]);

        assert_eq!(p().subformulas(), vec![&p()]);

        let g = p().know().neg();
        let subs: Vec<String> = g.subformulas().iter().map(|s| s.to_string()).collect();
        assert_eq!(subs, ["p", "[*]p", "~[*]p"]);
    }

    #[test]
    fn modal_depth_examples() {
        assert_eq!(p().or(p().neg()).modal_depth(), 0);
        assert_eq!(p().know().know().modal_depth(), 2);
        assert_eq!(p().and(q().know()).ign().modal_depth(), 2);
    }

    #[test]
    fn fragment_examples() {
        assert!(p().know().in_fragment(Signature::KNOW));
        assert!(!p().know().in_fragment(Signature::NEC));
        assert!(p().and(q()).in_fragment(Signature::EMPTY));
        assert!(!p().whether().in_fragment(Signature::ALL));
    }

    #[test]
    fn display_minimal_parens() {
        assert_eq!(p().and(q()).or(p()).to_string(), "p & q | p");
        assert_eq!(p().or(q()).and(p()).to_string(), "(p | q) & p");
        assert_eq!(p().or(q().or(p())).to_string(), "p | (q | p)");
        assert_eq!(p().or(q()).ign().to_string(), "I(p | q)");
        assert_eq!(p().whether().to_string(), "Tri p");
        assert_eq!(p().ign().to_string(), "Ip");
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::var("p")),
            Just(Formula::var("q")),
            Just(Formula::var("r1")),
        ];
        leaf.prop_recursive(5, 32, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|f| f.neg()),
                inner.clone().prop_map(|f| f.nec()),
                inner.clone().prop_map(|f| f.know()),
                inner.clone().prop_map(|f| f.ign()),
                inner.clone().prop_map(|f| f.whether()),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
                (inner.clone(), inner).prop_map(|(a, b)| a.or(b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(f in arb_formula()) {
            let printed = f.to_string();
            let back = parse_formula(&printed).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn subformula_count_bounded_by_nodes(f in arb_formula()) {
            prop_assert!(f.subformulas().len() <= f.node_count());
        }

        #[test]
        fn subformulas_monotone(f in arb_formula()) {
            let all: std::collections::HashSet<_> = f.subformulas().into_iter().collect();
            for sub in &all {
                for inner in sub.subformulas() {
                    prop_assert!(all.contains(inner));
                }
            }
        }
    }
}
