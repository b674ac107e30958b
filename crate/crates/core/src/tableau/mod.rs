//! Labelled analytic-cut calculus for the `[*]`/`I` fragment: saturation
//! based proof search with closure detection and verified countermodel
//! extraction from complete open branches.
//!
//! Branch items are labelled formulas `w: f ; v` with `v` one of the four
//! signs `t`, `f`, `-t`, `-f` (supports truth / supports falsity / does not
//! support truth / does not support falsity) plus relational atoms `w R w'`.
//! A branch closes when some `w: f` carries both a sign and its barred
//! complement; `t` next to `f` is consistent (gluts are fine). A branch is
//! complete when every applicable rule instance, including every analytic
//! cut instance over the subformulas on the branch, has a conclusion on the
//! branch; completed open branches are turned into models that are then
//! re-checked against the semantics before being reported.
//!
//! `[]` and `Tri` are outside the calculus; sequents containing them are
//! rejected up front (the enumeration oracle handles those).

mod engine;
mod rules;

use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, Sequent};
use crate::semantics::PointedModel;

/// Sign of a labelled formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// Supports truth.
    T,
    /// Supports falsity.
    F,
    /// Does not support truth.
    TBar,
    /// Does not support falsity.
    FBar,
}

/// The two cut axes: a branch decides truth-support and falsity-support of
/// a labelled formula independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    Truth,
    Falsity,
}

impl Sign {
    /// Sign transformation under negation of the formula.
    pub fn negated(self) -> Sign {
        match self {
            Sign::T => Sign::F,
            Sign::F => Sign::T,
            Sign::TBar => Sign::FBar,
            Sign::FBar => Sign::TBar,
        }
    }

    /// The complementary sign on the same axis; a sign plus its complement
    /// closes a branch.
    pub fn complement(self) -> Sign {
        match self {
            Sign::T => Sign::TBar,
            Sign::TBar => Sign::T,
            Sign::F => Sign::FBar,
            Sign::FBar => Sign::F,
        }
    }

    pub fn axis(self) -> Axis {
        match self {
            Sign::T | Sign::TBar => Axis::Truth,
            Sign::F | Sign::FBar => Axis::Falsity,
        }
    }

    pub fn is_barred(self) -> bool {
        matches!(self, Sign::TBar | Sign::FBar)
    }
}

impl Axis {
    /// The unbarred and barred sign of this axis.
    pub fn signs(self) -> (Sign, Sign) {
        match self {
            Axis::Truth => (Sign::T, Sign::TBar),
            Axis::Falsity => (Sign::F, Sign::FBar),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sign::T => "t",
            Sign::F => "f",
            Sign::TBar => "-t",
            Sign::FBar => "-f",
        };
        write!(f, "{s}")
    }
}

/// One line of a branch or proof node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Line {
    Signed { world: usize, formula: Formula, sign: Sign },
    Rel { from: usize, to: usize },
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Signed { world, formula, sign } => {
                write!(f, "w{world}: {formula} ; {sign}")
            }
            Line::Rel { from, to } => write!(f, "w{from} R w{to}"),
        }
    }
}

/// How a proof node ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeStatus {
    /// Interior node: continues in `children`.
    Inner,
    /// Closed leaf with its closure witness (the unbarred sign of the pair).
    Closed { world: usize, formula: Formula, sign: Sign },
    /// Complete open leaf.
    Open,
}

/// A node of the proof tree: the lines added at this depth, then either a
/// leaf marker or one child per conclusion column of the branching rule
/// applied next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofNode {
    pub lines: Vec<Line>,
    pub children: Vec<ProofNode>,
    pub status: NodeStatus,
}

/// A closed tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTree {
    pub root: ProofNode,
}

impl ProofTree {
    /// Text form: one line per node line, indentation equal to fork depth,
    /// closed leaves marked `× (wi, f, sign)`, open leaves `○`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        render_node(&self.root, 0, &mut out);
        out
    }
}

fn render_node(node: &ProofNode, depth: usize, out: &mut String) {
    let pad = " ".repeat(depth);
    for line in &node.lines {
        out.push_str(&pad);
        out.push_str(&line.to_string());
        out.push('\n');
    }
    match &node.status {
        NodeStatus::Inner => {
            for child in &node.children {
                render_node(child, depth + 1, out);
            }
        }
        NodeStatus::Closed { world, formula, sign } => {
            out.push_str(&pad);
            out.push_str(&format!("× (w{world}, {formula}, {sign})\n"));
        }
        NodeStatus::Open => {
            out.push_str(&pad);
            out.push_str("○\n");
        }
    }
}

/// A refutation: the extracted countermodel (already re-verified against the
/// semantics) plus the complete open branch it came from.
#[derive(Debug, Clone)]
pub struct Refutation {
    pub countermodel: PointedModel,
    pub branch: Vec<Line>,
}

/// Outcome of proof search.
#[derive(Debug, Clone)]
pub enum Verdict {
    Proved(ProofTree),
    Refuted(Refutation),
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved(_))
    }
}

/// Resource caps for one `prove` call.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Total additions (items, relational atoms, forks) across the search.
    pub max_steps: u64,
    pub max_worlds: usize,
    /// Items on a single branch.
    pub max_items: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: 4_000_000, max_worlds: 64, max_items: 60_000 }
    }
}

#[derive(Debug, Clone, Error)]
pub enum TableauError {
    #[error("`{connective}` is outside this calculus; use the enumeration search for such sequents")]
    Unsupported { connective: String },
    #[error("resource limit exceeded after {steps} steps")]
    ResourceLimit {
        steps: u64,
        /// Current branch at the point of abandonment, for diagnostics.
        partial: Vec<Line>,
    },
    #[error("internal tableau error: {0}")]
    Internal(String),
}

/// Prove or refute `lhs |- rhs` with default limits.
pub fn prove(seq: &Sequent) -> Result<Verdict, TableauError> {
    prove_with_limits(seq, &Limits::default())
}

/// Prove or refute `lhs |- rhs`. Formulas must stay within the `[*]`/`I`
/// fragment. Search is depth-first with a fixed rule order, so the proof
/// tree and the first countermodel are reproducible.
pub fn prove_with_limits(seq: &Sequent, limits: &Limits) -> Result<Verdict, TableauError> {
    engine::prove(seq, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_sequent;
    use crate::semantics::{holds_sequent_at, Value};

    fn run(s: &str) -> Verdict {
        prove(&parse_sequent(s).unwrap()).unwrap()
    }

    #[test]
    fn proves_ignorance_disjunction() {
        let v = run("Ip & Iq |- I(p | q)");
        match v {
            Verdict::Proved(tree) => {
                let text = tree.render();
                assert!(text.contains("× ("));
                assert!(!text.contains('○'));
            }
            Verdict::Refuted(_) => panic!("expected a proof"),
        }
    }

    #[test]
    fn refutes_conjunctive_knowledge_split() {
        let s = parse_sequent("[*](p & q) |- [*]p").unwrap();
        match prove(&s).unwrap() {
            Verdict::Refuted(r) => {
                let m = &r.countermodel.model;
                assert_eq!(r.countermodel.world, 0);
                assert_eq!(m.world_count(), 3);
                assert_eq!(m.frame().edges(), vec![(0, 1), (0, 2)]);
                assert_eq!(m.atom_state("p", 1).value(), Value::B);
                assert_eq!(m.atom_state("q", 1).value(), Value::T);
                assert_eq!(m.atom_state("p", 2).value(), Value::T);
                assert_eq!(m.atom_state("q", 2).value(), Value::B);
                assert!(!holds_sequent_at(m, 0, &s).unwrap());
            }
            Verdict::Proved(_) => panic!("expected a countermodel"),
        }
    }

    #[test]
    fn proves_factivity_of_ignorance() {
        assert!(run("Ip |- p").is_proved());
    }

    #[test]
    fn refutes_atomic_weakening_with_minimal_model() {
        let s = parse_sequent("p |- q").unwrap();
        match prove(&s).unwrap() {
            Verdict::Refuted(r) => {
                let m = &r.countermodel.model;
                assert_eq!(m.world_count(), 1);
                assert_eq!(m.atom_state("p", 0).value(), Value::T);
                assert_eq!(m.atom_state("q", 0).value(), Value::N);
            }
            Verdict::Proved(_) => panic!("expected a countermodel"),
        }
    }

    #[test]
    fn rejects_connectives_outside_the_calculus() {
        let s = parse_sequent("[]p |- p").unwrap();
        assert!(matches!(prove(&s), Err(TableauError::Unsupported { .. })));
        let s = parse_sequent("Tri p |- p").unwrap();
        assert!(matches!(prove(&s), Err(TableauError::Unsupported { .. })));
        // <*> expands into the supported fragment, <> does not.
        let s = parse_sequent("<*>p |- p").unwrap();
        assert!(prove(&s).is_ok());
        let s = parse_sequent("<>p |- p").unwrap();
        assert!(matches!(prove(&s), Err(TableauError::Unsupported { .. })));
    }

    #[test]
    fn closure_needs_a_complementary_pair() {
        // Gluts are consistent: t next to f stays open.
        let v = run("p & ~p |- q");
        assert!(!v.is_proved());
        // t next to -t closes.
        assert!(run("p |- p").is_proved());
        // f next to -f closes.
        assert!(run("~p |- ~p").is_proved());
    }

    #[test]
    fn open_branch_with_only_cuts_realizes_one_world() {
        match run("p |- q") {
            Verdict::Refuted(r) => {
                assert!(r
                    .branch
                    .iter()
                    .all(|l| matches!(l, Line::Signed { world: 0, .. })));
            }
            Verdict::Proved(_) => panic!(),
        }
    }

    #[test]
    fn pure_know_refutations_stay_irreflexive() {
        // Pure [*] sequents never take a self-loop column first.
        for s in ["[*](p & q) |- [*]p", "[*]p |- [*][*]p", "~[*]p |- [*]~p"] {
            if let Verdict::Refuted(r) = run(s) {
                let m = &r.countermodel.model;
                for w in 0..m.world_count() {
                    assert!(
                        !m.frame().has_edge(w, w),
                        "{s}: extracted model has a reflexive edge at w{w}"
                    );
                }
            } else {
                panic!("{s}: expected a countermodel");
            }
        }
    }

    #[test]
    fn mixed_sequent_needs_a_reflexive_countermodel() {
        // The witness for not-knowing ~p can be the world itself; closing
        // over it would prove this refutable sequent.
        let s = parse_sequent("Ip |- [*]~p").unwrap();
        match prove(&s).unwrap() {
            Verdict::Refuted(r) => {
                let m = &r.countermodel.model;
                assert_eq!(m.world_count(), 1);
                assert!(m.frame().has_edge(0, 0));
                assert_eq!(m.atom_state("p", 0).value(), Value::T);
                assert!(!holds_sequent_at(m, 0, &s).unwrap());
            }
            Verdict::Proved(_) => panic!("unsound: Ip |- [*]~p is refutable"),
        }
    }

    #[test]
    fn deeper_sequents_terminate_within_default_limits() {
        // Larger formulas than the agreement battery uses; every refutation
        // must come back verified, every proof confirms validity of a known
        // schema instance.
        let refutable = [
            "[*][*](p & q) |- [*][*]p",
            "I(p & Iq) |- Ip & IIq",
            "[*](Ip | Iq) |- I[*]p",
            "~[*]~(p & q) & Ip |- [*](q | Iq)",
            "IIp & [*]q |- [*]Ip | IIq",
        ];
        for s in refutable {
            let seq = parse_sequent(s).unwrap();
            match prove(&seq).unwrap() {
                Verdict::Refuted(r) => {
                    let pm = &r.countermodel;
                    assert!(!holds_sequent_at(&pm.model, pm.world, &seq).unwrap(), "{s}");
                }
                Verdict::Proved(_) => panic!("{s}: expected refutation"),
            }
        }
        let provable = [
            "I(p & q) & I(q & p) |- I((p & q) | (q & p))",
            "[*](p & q) & ~[*](p & q) |- [*](p & q)",
            "I(p | q) |- p | q",
        ];
        for s in provable {
            assert!(run(s).is_proved(), "{s}: expected proof");
        }
    }

    #[test]
    fn proof_tree_renders_lines_and_closures() {
        if let Verdict::Proved(tree) = run("Ip |- p") {
            let text = tree.render();
            assert!(text.starts_with("w0: Ip ; t\n"));
            assert!(text.contains("w0: p ; -t"));
            assert!(text.contains("w0: p ; t"));
            assert!(text.contains("× (w0, p, t)"));
        } else {
            panic!("expected proof");
        }
    }
}
