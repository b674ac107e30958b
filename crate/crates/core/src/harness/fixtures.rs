//! Small reference models with hand-derived evaluation facts. Each fixture
//! pins a behavior the rest of the toolkit depends on: the gap between `[]`
//! and `[*]`, the glut/gap fixed points, the cluster pairs that separate the
//! modalities from each other, the countermodel to conjunctive knowledge,
//! and the transitive-but-not-serial chain that defeats positive
//! introspection on its own.

use crate::formula::{parse, Input};
use crate::semantics::{eval, holds_sequent_at, parse_model, Model, Value};

/// What a fact asserts about its fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    /// The formula evaluates to exactly this value at the world.
    Value(Value),
    /// The sequent holds (or fails) at the world.
    Holds(bool),
}

#[derive(Debug, Clone)]
pub struct Fact {
    pub world: &'static str,
    /// Formula or sequent in the surface syntax.
    pub query: &'static str,
    pub expect: Expect,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub model: Model,
    pub facts: Vec<Fact>,
}

impl Fixture {
    fn new(name: &'static str, text: &'static str, facts: Vec<Fact>) -> Fixture {
        let model = parse_model(text).expect(name);
        Fixture { name, text, model, facts }
    }

    /// Check one fact; `Ok` carries the printable observed outcome.
    pub fn check(&self, fact: &Fact) -> Result<String, String> {
        let w = self
            .model
            .frame()
            .world_by_name(fact.world)
            .ok_or_else(|| format!("unknown world {}", fact.world))?;
        match parse(fact.query).map_err(|e| e.to_string())? {
            Input::Formula(f) => {
                let got = eval(&self.model, w, &f).map_err(|e| e.to_string())?.value();
                match fact.expect {
                    Expect::Value(want) if want == got => Ok(got.to_string()),
                    Expect::Value(want) => Err(format!("expected {want}, got {got}")),
                    Expect::Holds(_) => Err("value fact with sequent expectation".into()),
                }
            }
            Input::Sequent(s) => {
                let got = holds_sequent_at(&self.model, w, &s).map_err(|e| e.to_string())?;
                match fact.expect {
                    Expect::Holds(want) if want == got => Ok(got.to_string()),
                    Expect::Holds(want) => Err(format!("expected {want}, got {got}")),
                    Expect::Value(_) => Err("sequent fact with value expectation".into()),
                }
            }
        }
    }
}

fn value(world: &'static str, query: &'static str, v: Value) -> Fact {
    Fact { world, query, expect: Expect::Value(v) }
}

fn holds(world: &'static str, query: &'static str, yes: bool) -> Fact {
    Fact { world, query, expect: Expect::Holds(yes) }
}

/// All fixtures, in a fixed order.
pub fn all() -> Vec<Fixture> {
    vec![
        // []p is true at w0 although p has different values at the two
        // successors; [*]p and Tri p reject exactly that.
        Fixture::new(
            "mixed-successors",
            "worlds: w0 w1\nedges: w0->w0 w0->w1\nval p: w0=T w1=B\n",
            vec![
                value("w0", "[]p", Value::B),
                value("w0", "[*]p", Value::F),
                value("w0", "Tri p", Value::F),
            ],
        ),
        // One reflexive world where both atoms are gluts: everything is B.
        Fixture::new(
            "glut-point",
            "worlds: w0\nedges: w0->w0\nval p: w0=B\nval q: w0=B\n",
            vec![
                value("w0", "p", Value::B),
                value("w0", "I(p & q)", Value::B),
                value("w0", "[*]p | ~[*]p", Value::B),
            ],
        ),
        // One reflexive world with no information at all: everything is N.
        Fixture::new(
            "gap-point",
            "worlds: w0\nedges: w0->w0\n",
            vec![
                value("w0", "p", Value::N),
                value("w0", "I(p & q)", Value::N),
                value("w0", "[*]p | ~[*]p", Value::N),
            ],
        ),
        // A single reflexive cluster with p exactly true: the agent is
        // factively ignorant of p, and p is not an unknown truth.
        Fixture::new(
            "single-cluster",
            "worlds: w0\nedges: w0->w0\nval p: w0=T\n",
            vec![
                value("w0", "Ip", Value::T),
                value("w0", "Acc p", Value::F),
                value("w0", "[*]p", Value::T),
            ],
        ),
        // The two-world cluster with the same atoms: Ip flips to false while
        // every []-formula keeps its value from the single cluster.
        Fixture::new(
            "double-cluster",
            "worlds: w0 w1\nedges: w0->w0 w0->w1 w1->w0 w1->w1\nval p: w0=T w1=T\n",
            vec![value("w0", "Ip", Value::F), value("w0", "[*]p", Value::T)],
        ),
        // A reflexive glut point: [*]p is both true and false.
        Fixture::new(
            "glut-loop",
            "worlds: w0\nedges: w0->w0\nval p: w0=B\n",
            vec![value("w0", "[*]p", Value::B), value("w0", "Ip", Value::B)],
        ),
        // The same glut with no successors: [*]p becomes exactly true, so
        // the pair separates [*] from every I-formula by falsity-support.
        Fixture::new(
            "glut-isolated",
            "worlds: w0\nval p: w0=B\n",
            vec![value("w0", "[*]p", Value::T), value("w0", "Ip", Value::B)],
        ),
        // A three-world equivalence cluster where []p is glut at the two
        // p-true worlds; no [*]/I formula can be glut at both.
        Fixture::new(
            "triple-cluster",
            "worlds: w0 w1 w2\nedges: w0->w0 w0->w1 w0->w2 w1->w0 w1->w1 w1->w2 w2->w0 w2->w1 w2->w2\nval p: w0=T w1=B w2=T\n",
            vec![
                value("w0", "[]p", Value::B),
                value("w2", "[]p", Value::B),
                value("w0", "[*]p", Value::F),
            ],
        ),
        // Countermodel to distributing [*] over a conjunction.
        Fixture::new(
            "know-conj-countermodel",
            "worlds: w0 w1 w2\nedges: w0->w1 w0->w2\nval p: w0=B w1=B w2=T\nval q: w0=B w1=T w2=B\n",
            vec![
                holds("w0", "[*](p & q) |- [*]p", false),
                value("w0", "[*](p & q)", Value::B),
                value("w0", "[*]p", Value::F),
            ],
        ),
        // Transitive but not serial: positive introspection fails because
        // the dead end w2 makes [*]p exactly true there while it is glut at
        // w1.
        Fixture::new(
            "strict-chain-glut",
            "worlds: w0 w1 w2\nedges: w0->w1 w1->w2 w0->w2\nval p: w0=B w1=B w2=B\n",
            vec![
                value("w0", "[*]p", Value::B),
                value("w0", "[*][*]p", Value::F),
                holds("w0", "[*]p |- [*][*]p", false),
            ],
        ),
        // Two-world cluster with a gap at w1: p becomes an unknown truth at
        // w0, which no []-formula can express.
        Fixture::new(
            "cluster-with-gap",
            "worlds: w0 w1\nedges: w0->w0 w0->w1 w1->w0 w1->w1\nval p: w0=T\n",
            vec![
                value("w0", "Acc p", Value::T),
                value("w0", "[*]p", Value::F),
                value("w0", "Ip", Value::N),
            ],
        ),
    ]
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_fact_holds() {
        for fixture in all() {
            for fact in &fixture.facts {
                if let Err(e) = fixture.check(fact) {
                    panic!("{}: {} at {}: {e}", fixture.name, fact.query, fact.world);
                }
            }
        }
    }

    #[test]
    fn fixture_texts_roundtrip() {
        for fixture in all() {
            let reparsed = parse_model(&crate::semantics::print_model(&fixture.model)).unwrap();
            assert_eq!(reparsed, fixture.model, "{}", fixture.name);
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(by_name("glut-point").is_some());
        assert!(by_name("nope").is_none());
    }
}
