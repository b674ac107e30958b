//! Finite Kripke frames and models with dual valuations, four-valued
//! evaluation, dual models and frame-class predicates.
//!
//! Worlds are dense indices `0..n` with display names (default `w0`, `w1`,
//! ...): deterministic iteration order keeps proofs and countermodels
//! reproducible. Atoms absent from a model default to the gap value `N`
//! everywhere.
//!
//! Model text format (line-based, `#` starts a comment):
//!
//! ```text
//! worlds: w0 w1 w2
//! edges: w0->w0 w0->w1
//! val p: w0=T w1=B w2=N
//! ```

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, Sequent};

/// One of the four values: exactly true, exactly false, glut, gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    T,
    F,
    B,
    N,
}

impl Value {
    pub fn all() -> [Value; 4] {
        [Value::T, Value::F, Value::B, Value::N]
    }

    /// B and N swap; T and F stay put.
    pub fn dual(self) -> Value {
        match self {
            Value::B => Value::N,
            Value::N => Value::B,
            v => v,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Value::T => 'T',
            Value::F => 'F',
            Value::B => 'B',
            Value::N => 'N',
        }
    }

    pub fn from_letter(c: char) -> Option<Value> {
        match c {
            'T' => Some(Value::T),
            'F' => Some(Value::F),
            'B' => Some(Value::B),
            'N' => Some(Value::N),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Independent support of truth and support of falsity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruthState {
    pub sup_t: bool,
    pub sup_f: bool,
}

impl TruthState {
    pub fn new(sup_t: bool, sup_f: bool) -> Self {
        TruthState { sup_t, sup_f }
    }

    pub fn value(self) -> Value {
        match (self.sup_t, self.sup_f) {
            (true, false) => Value::T,
            (false, true) => Value::F,
            (true, true) => Value::B,
            (false, false) => Value::N,
        }
    }

    pub fn from_value(v: Value) -> Self {
        match v {
            Value::T => TruthState::new(true, false),
            Value::F => TruthState::new(false, true),
            Value::B => TruthState::new(true, true),
            Value::N => TruthState::new(false, false),
        }
    }
}

impl fmt::Display for TruthState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// First-order conditions on the accessibility relation, plus the
/// conjunctions used for the epistemic/doxastic frame classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameClass {
    Serial,
    Dense,
    Reflexive,
    Euclidean,
    Transitive,
    Symmetric,
    PartialFunctional,
    /// Serial + Euclidean.
    D5,
    /// Reflexive + Euclidean (equivalently, an equivalence relation).
    S5,
    /// Serial + Dense.
    Ddn,
    /// Transitive + Euclidean.
    F45,
    /// Serial + Transitive.
    D4,
    /// Reflexive + Transitive.
    S4,
    /// Serial + Transitive + Euclidean.
    D45,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown world index {0}")]
    UnknownWorldIndex(usize),
    #[error("unknown world name `{0}`")]
    UnknownWorldName(String),
    #[error("model text line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A finite frame: worlds `0..n` and a binary accessibility relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    names: Vec<String>,
    /// Successor lists, each sorted ascending.
    succ: Vec<Vec<usize>>,
}

impl Frame {
    /// Frame with `n` worlds named `w0..w{n-1}` and the given edges.
    /// Panics on zero worlds or out-of-range edges (construction is always
    /// from trusted in-process code; file input goes through [`parse_model`]).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Frame {
        assert!(n > 0, "a frame needs at least one world");
        let names = (0..n).map(|i| format!("w{i}")).collect();
        Frame::with_names(names, edges)
    }

    pub fn with_names(names: Vec<String>, edges: &[(usize, usize)]) -> Frame {
        let n = names.len();
        assert!(n > 0, "a frame needs at least one world");
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge ({a},{b}) out of range for {n} worlds");
            succ[a].push(b);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        Frame { names, succ }
    }

    pub fn world_count(&self) -> usize {
        self.names.len()
    }

    pub fn world_name(&self, w: usize) -> &str {
        &self.names[w]
    }

    pub fn world_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.succ[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ss) in self.succ.iter().enumerate() {
            for &b in ss {
                out.push((a, b));
            }
        }
        out
    }

    /// `R(w)` or, with `strict`, `R(w) \ {w}`.
    pub fn successors(&self, w: usize, strict: bool) -> Result<Vec<usize>, ModelError> {
        if w >= self.world_count() {
            return Err(ModelError::UnknownWorldIndex(w));
        }
        Ok(self.succ[w]
            .iter()
            .copied()
            .filter(|&v| !strict || v != w)
            .collect())
    }

    fn succ_slice(&self, w: usize) -> &[usize] {
        &self.succ[w]
    }

    /// Decide a first-order frame condition by direct enumeration.
    pub fn has(&self, class: FrameClass) -> bool {
        let n = self.world_count();
        match class {
            FrameClass::Serial => (0..n).all(|x| !self.succ[x].is_empty()),
            FrameClass::Reflexive => (0..n).all(|x| self.has_edge(x, x)),
            FrameClass::Symmetric => self.edges().iter().all(|&(a, b)| self.has_edge(b, a)),
            FrameClass::Transitive => self.edges().iter().all(|&(x, y)| {
                self.succ_slice(y).iter().all(|&z| self.has_edge(x, z))
            }),
            FrameClass::Euclidean => (0..n).all(|x| {
                self.succ_slice(x)
                    .iter()
                    .all(|&y| self.succ_slice(x).iter().all(|&z| self.has_edge(y, z)))
            }),
            FrameClass::Dense => self.edges().iter().all(|&(x, y)| {
                self.succ_slice(x).iter().any(|&z| self.has_edge(z, y))
            }),
            FrameClass::PartialFunctional => (0..n).all(|x| self.succ[x].len() <= 1),
            FrameClass::D5 => self.has(FrameClass::Serial) && self.has(FrameClass::Euclidean),
            FrameClass::S5 => self.has(FrameClass::Reflexive) && self.has(FrameClass::Euclidean),
            FrameClass::Ddn => self.has(FrameClass::Serial) && self.has(FrameClass::Dense),
            FrameClass::F45 => self.has(FrameClass::Transitive) && self.has(FrameClass::Euclidean),
            FrameClass::D4 => self.has(FrameClass::Serial) && self.has(FrameClass::Transitive),
            FrameClass::S4 => self.has(FrameClass::Reflexive) && self.has(FrameClass::Transitive),
            FrameClass::D45 => {
                self.has(FrameClass::Serial)
                    && self.has(FrameClass::Transitive)
                    && self.has(FrameClass::Euclidean)
            }
        }
    }

    /// Reflexive + symmetric + transitive.
    pub fn is_equivalence(&self) -> bool {
        self.has(FrameClass::Reflexive)
            && self.has(FrameClass::Symmetric)
            && self.has(FrameClass::Transitive)
    }
}

/// Dual valuation of one atom: per-world support of truth and of falsity.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Valuation {
    plus: Vec<bool>,
    minus: Vec<bool>,
}

impl Valuation {
    fn gaps(n: usize) -> Valuation {
        Valuation { plus: vec![false; n], minus: vec![false; n] }
    }

    fn is_all_gap(&self) -> bool {
        self.plus.iter().all(|b| !b) && self.minus.iter().all(|b| !b)
    }
}

/// A model: a frame plus dual valuations for finitely many atoms.
#[derive(Debug, Clone)]
pub struct Model {
    frame: Frame,
    vals: BTreeMap<String, Valuation>,
}

impl PartialEq for Model {
    /// Atoms that are gap everywhere are interchangeable with absent atoms.
    fn eq(&self, other: &Self) -> bool {
        if self.frame != other.frame {
            return false;
        }
        let live = |m: &Model| -> BTreeMap<String, Valuation> {
            m.vals
                .iter()
                .filter(|(_, v)| !v.is_all_gap())
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect()
        };
        live(self) == live(other)
    }
}

impl Eq for Model {}

impl Model {
    pub fn new(frame: Frame) -> Model {
        Model { frame, vals: BTreeMap::new() }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn world_count(&self) -> usize {
        self.frame.world_count()
    }

    pub fn atoms(&self) -> Vec<&str> {
        self.vals.keys().map(String::as_str).collect()
    }

    pub fn set_value(&mut self, atom: &str, world: usize, value: Value) {
        assert!(world < self.world_count(), "world {world} out of range");
        let n = self.world_count();
        let val = self
            .vals
            .entry(atom.to_string())
            .or_insert_with(|| Valuation::gaps(n));
        let st = TruthState::from_value(value);
        val.plus[world] = st.sup_t;
        val.minus[world] = st.sup_f;
    }

    /// Builder-style convenience for tests and fixtures.
    pub fn with_value(mut self, atom: &str, world: usize, value: Value) -> Model {
        self.set_value(atom, world, value);
        self
    }

    pub fn atom_state(&self, atom: &str, world: usize) -> TruthState {
        match self.vals.get(atom) {
            Some(v) => TruthState::new(v.plus[world], v.minus[world]),
            None => TruthState::new(false, false),
        }
    }

    pub fn successors(&self, w: usize, strict: bool) -> Result<Vec<usize>, ModelError> {
        self.frame.successors(w, strict)
    }

    /// Per-atom, per-world swap of B and N on the same frame.
    pub fn dual(&self) -> Model {
        let mut out = Model::new(self.frame.clone());
        for (atom, val) in &self.vals {
            for w in 0..self.world_count() {
                let v = TruthState::new(val.plus[w], val.minus[w]).value();
                out.set_value(atom, w, v.dual());
            }
        }
        out
    }
}

/// A model with a distinguished evaluation point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointedModel {
    pub model: Model,
    pub world: usize,
}

impl PointedModel {
    pub fn new(model: Model, world: usize) -> Self {
        PointedModel { model, world }
    }
}

/// A formula compiled to a post-order array of distinct subformulas, so a
/// whole model can be evaluated as one dynamic-programming table keyed on
/// (subformula, world).
#[derive(Debug, Clone)]
pub struct Compiled {
    nodes: Vec<CNode>,
    atoms: Vec<String>,
}

#[derive(Debug, Clone)]
enum CNode {
    Var(usize),
    Neg(usize),
    And(usize, usize),
    Or(usize, usize),
    Nec(usize),
    Know(usize),
    Ign(usize),
    Whether(usize),
}

impl Compiled {
    pub fn new(f: &Formula) -> Compiled {
        let mut nodes = Vec::new();
        let mut atoms: Vec<String> = Vec::new();
        let mut ids: BTreeMap<&Formula, usize> = BTreeMap::new();
        fn go<'a>(
            f: &'a Formula,
            nodes: &mut Vec<CNode>,
            atoms: &mut Vec<String>,
            ids: &mut BTreeMap<&'a Formula, usize>,
        ) -> usize {
            if let Some(&id) = ids.get(f) {
                return id;
            }
            let node = match f {
                Formula::Var(name) => {
                    let ai = match atoms.iter().position(|a| a == name) {
                        Some(i) => i,
                        None => {
                            atoms.push(name.clone());
                            atoms.len() - 1
                        }
                    };
                    CNode::Var(ai)
                }
                Formula::Neg(a) => CNode::Neg(go(a, nodes, atoms, ids)),
                Formula::And(a, b) => {
                    let x = go(a, nodes, atoms, ids);
                    let y = go(b, nodes, atoms, ids);
                    CNode::And(x, y)
                }
                Formula::Or(a, b) => {
                    let x = go(a, nodes, atoms, ids);
                    let y = go(b, nodes, atoms, ids);
                    CNode::Or(x, y)
                }
                Formula::Nec(a) => CNode::Nec(go(a, nodes, atoms, ids)),
                Formula::Know(a) => CNode::Know(go(a, nodes, atoms, ids)),
                Formula::Ign(a) => CNode::Ign(go(a, nodes, atoms, ids)),
                Formula::Whether(a) => CNode::Whether(go(a, nodes, atoms, ids)),
            };
            nodes.push(node);
            let id = nodes.len() - 1;
            ids.insert(f, id);
            id
        }
        go(f, &mut nodes, &mut atoms, &mut ids);
        Compiled { nodes, atoms }
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Fill `table` (flat, node-major: `table[node * worlds + w]`) with the
    /// truth state of every subformula at every world. With `strict_know`,
    /// `[*]` quantifies over strict successors; this exists only to check
    /// the decomposition of `I` and is not reachable from formula syntax.
    pub fn eval_into(&self, m: &Model, strict_know: bool, table: &mut Vec<TruthState>) {
        let n = m.world_count();
        table.clear();
        table.resize(self.nodes.len() * n, TruthState::new(false, false));
        // Resolve atom indices once per (compiled, model) pairing.
        let bindings: Vec<Option<&Valuation>> =
            self.atoms.iter().map(|a| m.vals.get(a)).collect();
        for (i, node) in self.nodes.iter().enumerate() {
            for w in 0..n {
                let st = match *node {
                    CNode::Var(ai) => match bindings[ai] {
                        Some(v) => TruthState::new(v.plus[w], v.minus[w]),
                        None => TruthState::new(false, false),
                    },
                    CNode::Neg(a) => {
                        let s = table[a * n + w];
                        TruthState::new(s.sup_f, s.sup_t)
                    }
                    CNode::And(a, b) => {
                        let x = table[a * n + w];
                        let y = table[b * n + w];
                        TruthState::new(x.sup_t && y.sup_t, x.sup_f || y.sup_f)
                    }
                    CNode::Or(a, b) => {
                        let x = table[a * n + w];
                        let y = table[b * n + w];
                        TruthState::new(x.sup_t || y.sup_t, x.sup_f && y.sup_f)
                    }
                    CNode::Nec(a) => {
                        let mut all_t = true;
                        let mut any_f = false;
                        for &u in m.frame.succ_slice(w) {
                            let s = table[a * n + u];
                            all_t &= s.sup_t;
                            any_f |= s.sup_f;
                        }
                        TruthState::new(all_t, any_f)
                    }
                    CNode::Know(a) => {
                        let mut all_t = true;
                        let mut any_t = false;
                        let mut any_nt = false;
                        let mut any_f = false;
                        let mut any_nf = false;
                        for &u in m.frame.succ_slice(w) {
                            if strict_know && u == w {
                                continue;
                            }
                            let s = table[a * n + u];
                            all_t &= s.sup_t;
                            any_t |= s.sup_t;
                            any_nt |= !s.sup_t;
                            any_f |= s.sup_f;
                            any_nf |= !s.sup_f;
                        }
                        let uniform_f = !(any_f && any_nf);
                        TruthState::new(all_t && uniform_f, any_f || (any_t && any_nt))
                    }
                    CNode::Ign(a) => {
                        let here = table[a * n + w];
                        let mut all_f = true;
                        let mut any_t = false;
                        let mut any_nt = false;
                        let mut any_f = false;
                        let mut any_nf = false;
                        for &u in m.frame.succ_slice(w) {
                            if u == w {
                                continue;
                            }
                            let s = table[a * n + u];
                            all_f &= s.sup_f;
                            any_t |= s.sup_t;
                            any_nt |= !s.sup_t;
                            any_f |= s.sup_f;
                            any_nf |= !s.sup_f;
                        }
                        let uniform_t = !(any_t && any_nt);
                        TruthState::new(
                            here.sup_t && all_f && uniform_t,
                            here.sup_f || any_t || (any_f && any_nf),
                        )
                    }
                    CNode::Whether(a) => {
                        let mut any_t = false;
                        let mut any_nt = false;
                        let mut any_f = false;
                        let mut any_nf = false;
                        let mut all_valued = true;
                        for &u in m.frame.succ_slice(w) {
                            let s = table[a * n + u];
                            any_t |= s.sup_t;
                            any_nt |= !s.sup_t;
                            any_f |= s.sup_f;
                            any_nf |= !s.sup_f;
                            all_valued &= s.sup_t || s.sup_f;
                        }
                        let uniform = !(any_t && any_nt) && !(any_f && any_nf);
                        let f1 = any_t && any_nt;
                        let f2 = any_f && any_nf;
                        let f3 = any_t && any_f;
                        TruthState::new(uniform && all_valued, f1 || f2 || f3)
                    }
                };
                table[i * n + w] = st;
            }
        }
    }

    pub fn eval_at(&self, m: &Model, world: usize) -> Result<TruthState, ModelError> {
        if world >= m.world_count() {
            return Err(ModelError::UnknownWorldIndex(world));
        }
        let mut table = Vec::new();
        self.eval_into(m, false, &mut table);
        Ok(table[self.root() * m.world_count() + world])
    }
}

/// Evaluate a formula at a world.
pub fn eval(m: &Model, world: usize, f: &Formula) -> Result<TruthState, ModelError> {
    Compiled::new(f).eval_at(m, world)
}

/// Evaluate with `[*]` ranging over strict successors. Testing aid for the
/// decomposition of `I`; not part of the formula syntax.
pub fn eval_strict_know(m: &Model, world: usize, f: &Formula) -> Result<TruthState, ModelError> {
    if world >= m.world_count() {
        return Err(ModelError::UnknownWorldIndex(world));
    }
    let c = Compiled::new(f);
    let mut table = Vec::new();
    c.eval_into(m, true, &mut table);
    Ok(table[c.root() * m.world_count() + world])
}

/// `lhs |- rhs` holds at a world iff it is not the case that the left side
/// is T-supported there while the right side is not.
pub fn holds_sequent_at(m: &Model, world: usize, s: &Sequent) -> Result<bool, ModelError> {
    let l = eval(m, world, &s.lhs)?;
    if !l.sup_t {
        return Ok(true);
    }
    let r = eval(m, world, &s.rhs)?;
    Ok(r.sup_t)
}

/// Parse the line-based model text format.
pub fn parse_model(text: &str) -> Result<Model, ModelError> {
    let mut frame: Option<Frame> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut val_lines: Vec<(usize, String, String)> = Vec::new();
    let mut seen_atoms: BTreeMap<String, usize> = BTreeMap::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(j) => &raw[..j],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("worlds:") {
            if !names.is_empty() {
                return Err(ModelError::Parse {
                    line: lineno,
                    msg: "duplicate `worlds:` line".into(),
                });
            }
            for w in rest.split_whitespace() {
                if names.iter().any(|n| n == w) {
                    return Err(ModelError::Parse {
                        line: lineno,
                        msg: format!("duplicate world name `{w}`"),
                    });
                }
                names.push(w.to_string());
            }
            if names.is_empty() {
                return Err(ModelError::Parse {
                    line: lineno,
                    msg: "a model needs at least one world".into(),
                });
            }
        } else if let Some(rest) = line.strip_prefix("edges:") {
            if names.is_empty() {
                return Err(ModelError::Parse {
                    line: lineno,
                    msg: "`edges:` before `worlds:`".into(),
                });
            }
            for e in rest.split_whitespace() {
                let (a, b) = e.split_once("->").ok_or_else(|| ModelError::Parse {
                    line: lineno,
                    msg: format!("bad edge `{e}` (expected `wi->wj`)"),
                })?;
                let ai = names.iter().position(|n| n == a).ok_or_else(|| ModelError::Parse {
                    line: lineno,
                    msg: format!("unknown world name `{a}`"),
                })?;
                let bi = names.iter().position(|n| n == b).ok_or_else(|| ModelError::Parse {
                    line: lineno,
                    msg: format!("unknown world name `{b}`"),
                })?;
                edges.push((ai, bi));
            }
        } else if let Some(rest) = line.strip_prefix("val ") {
            let (atom, assigns) = rest.split_once(':').ok_or_else(|| ModelError::Parse {
                line: lineno,
                msg: "bad `val` line (expected `val atom: w=V ...`)".into(),
            })?;
            let atom = atom.trim().to_string();
            if atom.is_empty() {
                return Err(ModelError::Parse { line: lineno, msg: "empty atom name".into() });
            }
            if seen_atoms.insert(atom.clone(), lineno).is_some() {
                return Err(ModelError::Parse {
                    line: lineno,
                    msg: format!("duplicate `val` line for atom `{atom}`"),
                });
            }
            val_lines.push((lineno, atom, assigns.to_string()));
        } else {
            return Err(ModelError::Parse {
                line: lineno,
                msg: format!("unrecognized line `{line}`"),
            });
        }
    }

    if names.is_empty() {
        return Err(ModelError::Parse { line: 0, msg: "missing `worlds:` line".into() });
    }
    let f = frame.get_or_insert_with(|| Frame::with_names(names.clone(), &edges));
    let mut model = Model::new(f.clone());
    for (lineno, atom, assigns) in val_lines {
        for a in assigns.split_whitespace() {
            let (w, v) = a.split_once('=').ok_or_else(|| ModelError::Parse {
                line: lineno,
                msg: format!("bad assignment `{a}` (expected `w=V`)"),
            })?;
            let wi = model.frame.world_by_name(w).ok_or_else(|| ModelError::Parse {
                line: lineno,
                msg: format!("unknown world name `{w}`"),
            })?;
            let mut chars = v.chars();
            let value = match (chars.next().and_then(Value::from_letter), chars.next()) {
                (Some(val), None) => val,
                _ => {
                    return Err(ModelError::Parse {
                        line: lineno,
                        msg: format!("bad value `{v}` (expected one of T F B N)"),
                    })
                }
            };
            model.set_value(&atom, wi, value);
        }
    }
    Ok(model)
}

/// Print a model in the text format. Gap entries are omitted (they are the
/// default), so atoms that are gap everywhere disappear.
pub fn print_model(m: &Model) -> String {
    let mut out = String::new();
    out.push_str("worlds:");
    for w in 0..m.world_count() {
        out.push(' ');
        out.push_str(m.frame.world_name(w));
    }
    out.push('\n');
    out.push_str("edges:");
    for (a, b) in m.frame.edges() {
        out.push(' ');
        out.push_str(&format!("{}->{}", m.frame.world_name(a), m.frame.world_name(b)));
    }
    out.push('\n');
    for (atom, val) in &m.vals {
        if val.is_all_gap() {
            continue;
        }
        out.push_str(&format!("val {atom}:"));
        for w in 0..m.world_count() {
            let v = TruthState::new(val.plus[w], val.minus[w]).value();
            if v != Value::N {
                out.push_str(&format!(" {}={}", m.frame.world_name(w), v));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn fm(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    /// Two worlds, w0 reflexive and pointing at w1; p is T at w0, B at w1.
    fn mixed_successors() -> Model {
        Model::new(Frame::new(2, &[(0, 0), (0, 1)]))
            .with_value("p", 0, Value::T)
            .with_value("p", 1, Value::B)
    }

    #[test]
    fn successors_examples() {
        let single = Model::new(Frame::new(1, &[(0, 0)]));
        assert_eq!(single.successors(0, false).unwrap(), vec![0]);
        assert_eq!(single.successors(0, true).unwrap(), Vec::<usize>::new());
        let m = mixed_successors();
        assert_eq!(m.successors(0, false).unwrap(), vec![0, 1]);
        assert!(m.successors(7, false).is_err());
    }

    #[test]
    fn nec_true_but_know_false_on_mixed_successors() {
        let m = mixed_successors();
        let nec = eval(&m, 0, &fm("[]p")).unwrap();
        assert!(nec.sup_t);
        assert_eq!(nec.value(), Value::B);
        let know = eval(&m, 0, &fm("[*]p")).unwrap();
        assert!(!know.sup_t);
        assert_eq!(know.value(), Value::F);
        let whether = eval(&m, 0, &fm("Tri p")).unwrap();
        assert!(!whether.sup_t);
        assert_eq!(whether.value(), Value::F);
    }

    #[test]
    fn know_is_exactly_true_on_dead_ends() {
        let m = Model::new(Frame::new(1, &[])).with_value("p", 0, Value::B);
        for s in ["[*]p", "[*]~p", "[*](p & p)", "[]p", "Tri p"] {
            assert_eq!(eval(&m, 0, &fm(s)).unwrap().value(), Value::T, "{s}");
        }
        // I at a dead end reduces to its operand.
        assert_eq!(eval(&m, 0, &fm("Ip")).unwrap().value(), Value::B);
    }

    #[test]
    fn ign_on_single_and_double_cluster() {
        let single = Model::new(Frame::new(1, &[(0, 0)])).with_value("p", 0, Value::T);
        assert_eq!(eval(&single, 0, &fm("Ip")).unwrap().value(), Value::T);

        let double = Model::new(Frame::new(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]))
            .with_value("p", 0, Value::T)
            .with_value("p", 1, Value::T);
        assert!(!eval(&double, 0, &fm("Ip")).unwrap().sup_t);
    }

    #[test]
    fn nec_is_glut_on_triple_cluster() {
        let m = Model::new(Frame::new(
            3,
            &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)],
        ))
        .with_value("p", 0, Value::T)
        .with_value("p", 1, Value::B)
        .with_value("p", 2, Value::T);
        assert_eq!(eval(&m, 0, &fm("[]p")).unwrap().value(), Value::B);
        assert_eq!(eval(&m, 2, &fm("[]p")).unwrap().value(), Value::B);
        for c in [
            FrameClass::Reflexive,
            FrameClass::Euclidean,
            FrameClass::Transitive,
            FrameClass::Symmetric,
            FrameClass::Serial,
        ] {
            assert!(m.frame().has(c));
        }
    }

    #[test]
    fn sequent_fails_on_strict_chain() {
        let m = Model::new(Frame::new(3, &[(0, 1), (1, 2), (0, 2)]))
            .with_value("p", 0, Value::B)
            .with_value("p", 1, Value::B)
            .with_value("p", 2, Value::B);
        assert!(eval(&m, 0, &fm("[*]p")).unwrap().sup_t);
        assert!(!eval(&m, 0, &fm("[*][*]p")).unwrap().sup_t);
        let s = crate::formula::parse_sequent("[*]p |- [*][*]p").unwrap();
        assert!(!holds_sequent_at(&m, 0, &s).unwrap());
        assert!(m.frame().has(FrameClass::Transitive));
        assert!(!m.frame().has(FrameClass::Serial));
        let t = crate::formula::parse_sequent("p |- p").unwrap();
        assert!(holds_sequent_at(&m, 0, &t).unwrap());
    }

    #[test]
    fn dual_model_examples() {
        let m = Model::new(Frame::new(1, &[(0, 0)]))
            .with_value("p", 0, Value::B)
            .with_value("q", 0, Value::T);
        let d = m.dual();
        assert_eq!(d.atom_state("p", 0).value(), Value::N);
        assert_eq!(d.atom_state("q", 0).value(), Value::T);
        assert_eq!(d.dual(), m);
    }

    #[test]
    fn frame_class_examples() {
        let lonely = Frame::new(1, &[]);
        assert!(!lonely.has(FrameClass::Serial));
        let chain = Frame::new(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(chain.has(FrameClass::Transitive));
        assert!(!chain.has(FrameClass::Serial));
        let fork = Frame::new(2, &[(0, 1)]);
        assert!(fork.has(FrameClass::PartialFunctional));
        let split = Frame::new(3, &[(0, 1), (0, 2)]);
        assert!(!split.has(FrameClass::PartialFunctional));
    }

    #[test]
    fn model_text_roundtrip() {
        let text = "worlds: w0 w1 w2\nedges: w0->w0 w0->w1\nval p: w0=T w1=B\n";
        let m = parse_model(text).unwrap();
        assert_eq!(m.atom_state("p", 0).value(), Value::T);
        assert_eq!(m.atom_state("p", 2).value(), Value::N);
        assert_eq!(print_model(&m), text);
    }

    #[test]
    fn model_text_rejects_bad_input() {
        assert!(matches!(
            parse_model("worlds: w0\nedges: w0->w9\n"),
            Err(ModelError::Parse { .. })
        ));
        assert!(matches!(
            parse_model("worlds: w0\nval p: w0=T\nval p: w0=B\n"),
            Err(ModelError::Parse { .. })
        ));
        assert!(matches!(
            parse_model("worlds: w0\nval p: w1=T\n"),
            Err(ModelError::Parse { .. })
        ));
        assert!(matches!(
            parse_model("worlds: w0\nval p: w0=X\n"),
            Err(ModelError::Parse { .. })
        ));
    }

    #[test]
    fn printed_models_reparse_identically() {
        use proptest::prelude::*;
        let strategy = (1usize..=4).prop_flat_map(|n| {
            (
                proptest::collection::vec(proptest::bool::ANY, n * n),
                proptest::collection::vec(0u8..4, 2 * n),
                Just(n),
            )
        });
        proptest!(|((edges, vals, n) in strategy)| {
            let edge_list: Vec<(usize, usize)> = (0..n * n)
                .filter(|&i| edges[i])
                .map(|i| (i / n, i % n))
                .collect();
            let mut m = Model::new(Frame::new(n, &edge_list));
            for (i, &v) in vals.iter().enumerate() {
                let value = [Value::T, Value::F, Value::B, Value::N][v as usize];
                let atom = if i < n { "p" } else { "q" };
                m.set_value(atom, i % n, value);
            }
            let reparsed = parse_model(&print_model(&m)).unwrap();
            prop_assert_eq!(reparsed, m);
        });
    }

    #[test]
    fn classical_models_stay_classical() {
        // On models where every atom is T or F everywhere, every formula is
        // T or F, and [] agrees with [*].
        let frame = Frame::new(2, &[(0, 1), (1, 0), (0, 0)]);
        let m = Model::new(frame)
            .with_value("p", 0, Value::T)
            .with_value("p", 1, Value::F)
            .with_value("q", 0, Value::F)
            .with_value("q", 1, Value::T);
        for s in ["p", "~p", "p & q", "p | q", "[]p", "[*]p", "[](p | q)", "Ip", "Tri q"] {
            let f = fm(s);
            for w in 0..2 {
                let v = eval(&m, w, &f).unwrap().value();
                assert!(v == Value::T || v == Value::F, "{s} at w{w} gave {v}");
            }
        }
        for w in 0..2 {
            assert_eq!(
                eval(&m, w, &fm("[]p")).unwrap(),
                eval(&m, w, &fm("[*]p")).unwrap()
            );
        }
        // I behaves classically too: p is true at w0 and false at its only
        // strict successor, so Ip is exactly true there; at w1 the operand
        // itself fails.
        assert_eq!(eval(&m, 0, &fm("Ip")).unwrap().value(), Value::T);
        assert_eq!(eval(&m, 1, &fm("Ip")).unwrap().value(), Value::F);
    }
}
