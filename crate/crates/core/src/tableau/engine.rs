//! Saturation engine: branches as value-semantic snapshots, agenda-driven
//! propagation, depth-first exploration of branching rules, lazy analytic
//! cuts, and realization of complete open branches.
//!
//! Ordering on each branch: propagation rules run to a fixpoint first;
//! then cuts requested by a two-premise rule that is one signed premise
//! short; then world-introducing rules (skipped when a conclusion column is
//! already witnessed on the branch, which is what keeps the world count
//! finite); finally the remaining undecided (world, subformula, axis) pairs
//! required by the completeness condition.
//!
//! Requested and completion cuts on atoms take the barred side first (least
//! commitment: atoms the branch does not mention stay gap). Completion cuts
//! on compound formulas take the side that matches evaluation in the model
//! induced by the branch so far; since smaller subformulas are decided
//! first, those additions are no-ops for the rule engine and never force a
//! fresh world.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::rules::{BinOp, FreshCol, MOp, RuleDef, RULES};
use super::{Axis, Limits, Line, NodeStatus, ProofNode, ProofTree, Refutation, Sign, TableauError, Verdict};
use crate::formula::{Formula, Sequent};
use crate::semantics::{eval, Frame, Model, PointedModel, TruthState};

type FId = u16;
type WId = u16;

#[derive(Debug, Clone, Copy)]
enum Kind {
    Var,
    Neg(FId),
    And(FId, FId),
    Or(FId, FId),
    Know(FId),
    Ign(FId),
}

/// Subformula closure of the root sequent; every formula a branch can ever
/// mention lives here (the cut rule is analytic).
struct Table {
    entries: Vec<Formula>,
    kinds: Vec<Kind>,
    var_ids: Vec<FId>,
    lhs: FId,
    rhs: FId,
}

impl Table {
    fn build(seq: &Sequent) -> Result<Table, TableauError> {
        let mut entries: Vec<Formula> = Vec::new();
        let mut kinds: Vec<Kind> = Vec::new();
        let mut ids: std::collections::HashMap<Formula, FId> = std::collections::HashMap::new();
        fn intern(
            f: &Formula,
            entries: &mut Vec<Formula>,
            kinds: &mut Vec<Kind>,
            ids: &mut std::collections::HashMap<Formula, FId>,
        ) -> Result<FId, TableauError> {
            if let Some(&id) = ids.get(f) {
                return Ok(id);
            }
            let kind = match f {
                Formula::Var(_) => Kind::Var,
                Formula::Neg(a) => Kind::Neg(intern(a, entries, kinds, ids)?),
                Formula::And(a, b) => {
                    let x = intern(a, entries, kinds, ids)?;
                    let y = intern(b, entries, kinds, ids)?;
                    Kind::And(x, y)
                }
                Formula::Or(a, b) => {
                    let x = intern(a, entries, kinds, ids)?;
                    let y = intern(b, entries, kinds, ids)?;
                    Kind::Or(x, y)
                }
                Formula::Know(a) => Kind::Know(intern(a, entries, kinds, ids)?),
                Formula::Ign(a) => Kind::Ign(intern(a, entries, kinds, ids)?),
                Formula::Nec(_) => {
                    return Err(TableauError::Unsupported { connective: "[]".into() })
                }
                Formula::Whether(_) => {
                    return Err(TableauError::Unsupported { connective: "Tri".into() })
                }
            };
            entries.push(f.clone());
            kinds.push(kind);
            let id = (entries.len() - 1) as FId;
            ids.insert(f.clone(), id);
            Ok(id)
        }
        let lhs = intern(&seq.lhs, &mut entries, &mut kinds, &mut ids)?;
        let rhs = intern(&seq.rhs, &mut entries, &mut kinds, &mut ids)?;
        let var_ids = kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| matches!(k, Kind::Var))
            .map(|(i, _)| i as FId)
            .collect();
        Ok(Table { entries, kinds, var_ids, lhs, rhs })
    }

    fn kind(&self, f: FId) -> Kind {
        self.kinds[f as usize]
    }

    fn formula(&self, f: FId) -> &Formula {
        &self.entries[f as usize]
    }

    fn len(&self) -> usize {
        self.entries.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Item {
    world: WId,
    formula: FId,
    sign: Sign,
}

#[derive(Debug, Clone, Copy)]
enum HLine {
    Item(Item),
    Rel(WId, WId),
}

#[derive(Debug, Clone, Copy)]
enum Work {
    Item(Item),
    Rel(WId, WId),
}

#[derive(Clone)]
struct Branch {
    items: Vec<Item>,
    item_set: HashSet<Item>,
    rels: Vec<(WId, WId)>,
    rel_set: HashSet<(WId, WId)>,
    succ: Vec<Vec<WId>>,
    history: Vec<HLine>,
    node_start: usize,
    agenda: VecDeque<Work>,
    pending_cuts: BTreeSet<(WId, FId, Axis)>,
    pending_fresh: Vec<Item>,
    fresh_done: HashSet<Item>,
    closed: Option<(WId, FId, Sign)>,
}

struct Ctx<'a> {
    table: &'a Table,
    limits: &'a Limits,
    steps: u64,
}

impl<'a> Ctx<'a> {
    fn step(&mut self, branch: &Branch) -> Result<(), TableauError> {
        self.steps += 1;
        if self.steps > self.limits.max_steps {
            return Err(TableauError::ResourceLimit {
                steps: self.steps,
                partial: branch_lines(branch, self.table, 0),
            });
        }
        Ok(())
    }
}

fn branch_lines(b: &Branch, table: &Table, from: usize) -> Vec<Line> {
    b.history[from..]
        .iter()
        .map(|h| match *h {
            HLine::Item(it) => Line::Signed {
                world: it.world as usize,
                formula: table.formula(it.formula).clone(),
                sign: it.sign,
            },
            HLine::Rel(a, b) => Line::Rel { from: a as usize, to: b as usize },
        })
        .collect()
}

impl Branch {
    fn new(table: &Table, ctx: &mut Ctx) -> Result<Branch, TableauError> {
        let mut b = Branch {
            items: Vec::new(),
            item_set: HashSet::new(),
            rels: Vec::new(),
            rel_set: HashSet::new(),
            succ: vec![Vec::new()],
            history: Vec::new(),
            node_start: 0,
            agenda: VecDeque::new(),
            pending_cuts: BTreeSet::new(),
            pending_fresh: Vec::new(),
            fresh_done: HashSet::new(),
            closed: None,
        };
        b.add_item(Item { world: 0, formula: table.lhs, sign: Sign::T }, ctx)?;
        b.add_item(Item { world: 0, formula: table.rhs, sign: Sign::TBar }, ctx)?;
        Ok(b)
    }

    fn worlds(&self) -> usize {
        self.succ.len()
    }

    fn has(&self, world: WId, formula: FId, sign: Sign) -> bool {
        self.item_set.contains(&Item { world, formula, sign })
    }

    fn decided(&self, world: WId, formula: FId, axis: Axis) -> bool {
        let (u, b) = axis.signs();
        self.has(world, formula, u) || self.has(world, formula, b)
    }

    fn add_item(&mut self, it: Item, ctx: &mut Ctx) -> Result<bool, TableauError> {
        if self.item_set.contains(&it) {
            return Ok(false);
        }
        ctx.step(self)?;
        if self.items.len() >= ctx.limits.max_items {
            return Err(TableauError::ResourceLimit {
                steps: ctx.steps,
                partial: branch_lines(self, ctx.table, 0),
            });
        }
        if self.closed.is_none()
            && self.item_set.contains(&Item { sign: it.sign.complement(), ..it })
        {
            let unbarred = if it.sign.is_barred() { it.sign.complement() } else { it.sign };
            self.closed = Some((it.world, it.formula, unbarred));
        }
        self.items.push(it);
        self.item_set.insert(it);
        self.history.push(HLine::Item(it));
        self.agenda.push_back(Work::Item(it));
        Ok(true)
    }

    fn add_rel(&mut self, a: WId, b: WId, ctx: &mut Ctx) -> Result<bool, TableauError> {
        if self.rel_set.contains(&(a, b)) {
            return Ok(false);
        }
        ctx.step(self)?;
        self.rels.push((a, b));
        self.rel_set.insert((a, b));
        self.succ[a as usize].push(b);
        self.history.push(HLine::Rel(a, b));
        self.agenda.push_back(Work::Rel(a, b));
        Ok(true)
    }

    fn alloc_world(&mut self, ctx: &mut Ctx) -> Result<WId, TableauError> {
        if self.worlds() >= ctx.limits.max_worlds {
            return Err(TableauError::ResourceLimit {
                steps: ctx.steps,
                partial: branch_lines(self, ctx.table, 0),
            });
        }
        self.succ.push(Vec::new());
        Ok((self.worlds() - 1) as WId)
    }

    fn saturate(&mut self, ctx: &mut Ctx) -> Result<(), TableauError> {
        while self.closed.is_none() {
            let Some(work) = self.agenda.pop_front() else { break };
            match work {
                Work::Item(it) => self.process_item(it, ctx)?,
                Work::Rel(a, b) => self.process_rel(a, b, ctx)?,
            }
        }
        Ok(())
    }

    /// Successors of `w`, excluding `w` itself when `strict`.
    fn succs(&self, w: WId, strict: bool) -> Vec<WId> {
        self.succ[w as usize]
            .iter()
            .copied()
            .filter(|&u| !strict || u != w)
            .collect()
    }

    fn process_item(&mut self, it: Item, ctx: &mut Ctx) -> Result<(), TableauError> {
        let table = ctx.table;
        let w = it.world;
        let mut adds: Vec<Item> = Vec::new();

        // Principal role.
        match table.kind(it.formula) {
            Kind::Var => {}
            Kind::Neg(a) => {
                adds.push(Item { world: w, formula: a, sign: it.sign.negated() });
            }
            Kind::And(a, b) => match it.sign {
                Sign::T | Sign::FBar => {
                    adds.push(Item { world: w, formula: a, sign: it.sign });
                    adds.push(Item { world: w, formula: b, sign: it.sign });
                }
                Sign::F | Sign::TBar => {
                    let residue = it.sign.complement();
                    if self.has(w, a, residue) {
                        adds.push(Item { world: w, formula: b, sign: it.sign });
                    }
                    if self.has(w, b, residue) {
                        adds.push(Item { world: w, formula: a, sign: it.sign });
                    }
                    self.pending_cuts.insert((w, a, it.sign.axis()));
                    self.pending_cuts.insert((w, b, it.sign.axis()));
                }
            },
            Kind::Or(a, b) => match it.sign {
                Sign::F | Sign::TBar => {
                    adds.push(Item { world: w, formula: a, sign: it.sign });
                    adds.push(Item { world: w, formula: b, sign: it.sign });
                }
                Sign::T | Sign::FBar => {
                    let residue = it.sign.complement();
                    if self.has(w, a, residue) {
                        adds.push(Item { world: w, formula: b, sign: it.sign });
                    }
                    if self.has(w, b, residue) {
                        adds.push(Item { world: w, formula: a, sign: it.sign });
                    }
                    self.pending_cuts.insert((w, a, it.sign.axis()));
                    self.pending_cuts.insert((w, b, it.sign.axis()));
                }
            },
            Kind::Know(a) => match it.sign {
                Sign::T => {
                    let succ = self.succs(w, false);
                    let spread = succ.iter().any(|&u| self.has(u, a, Sign::F));
                    for &u in &succ {
                        adds.push(Item { world: u, formula: a, sign: Sign::T });
                        if spread {
                            adds.push(Item { world: u, formula: a, sign: Sign::F });
                        }
                        self.pending_cuts.insert((u, a, Axis::Falsity));
                    }
                }
                Sign::FBar => {
                    let succ = self.succs(w, false);
                    let spread = succ.iter().any(|&u| self.has(u, a, Sign::T));
                    for &u in &succ {
                        adds.push(Item { world: u, formula: a, sign: Sign::FBar });
                        if spread {
                            adds.push(Item { world: u, formula: a, sign: Sign::T });
                        }
                        self.pending_cuts.insert((u, a, Axis::Truth));
                    }
                }
                Sign::F | Sign::TBar => {
                    if !self.fresh_done.contains(&it) {
                        self.pending_fresh.push(it);
                    }
                }
            },
            Kind::Ign(a) => match it.sign {
                Sign::T => {
                    adds.push(Item { world: w, formula: a, sign: Sign::T });
                    let succ = self.succs(w, true);
                    let spread = succ.iter().any(|&u| self.has(u, a, Sign::T));
                    for &u in &succ {
                        adds.push(Item { world: u, formula: a, sign: Sign::F });
                        if spread {
                            adds.push(Item { world: u, formula: a, sign: Sign::T });
                        }
                        self.pending_cuts.insert((u, a, Axis::Truth));
                    }
                }
                Sign::FBar => {
                    adds.push(Item { world: w, formula: a, sign: Sign::FBar });
                    let succ = self.succs(w, true);
                    let spread = succ.iter().any(|&u| self.has(u, a, Sign::FBar));
                    for &u in &succ {
                        adds.push(Item { world: u, formula: a, sign: Sign::TBar });
                        if spread {
                            adds.push(Item { world: u, formula: a, sign: Sign::FBar });
                        }
                        self.pending_cuts.insert((u, a, Axis::Falsity));
                    }
                }
                Sign::F | Sign::TBar => {
                    if !self.fresh_done.contains(&it) {
                        self.pending_fresh.push(it);
                    }
                }
            },
        }

        // Residue role: this item may be the missing premise of a
        // two-premise rule whose principal is already on the branch.
        let x = it.formula;
        for j in 0..self.items.len() {
            let p = self.items[j];
            match (table.kind(p.formula), p.sign) {
                // Binary resolutions at the same world.
                (Kind::Or(a, b), Sign::T) | (Kind::Or(a, b), Sign::FBar)
                    if p.world == w && it.sign == p.sign.complement() && (a == x || b == x) =>
                {
                    let other = if a == x { b } else { a };
                    adds.push(Item { world: w, formula: other, sign: p.sign });
                    // Both orientations fire when a == x and b == x.
                    if a == x && b == x {
                        adds.push(Item { world: w, formula: a, sign: p.sign });
                    }
                }
                (Kind::And(a, b), Sign::F) | (Kind::And(a, b), Sign::TBar)
                    if p.world == w && it.sign == p.sign.complement() && (a == x || b == x) =>
                {
                    let other = if a == x { b } else { a };
                    adds.push(Item { world: w, formula: other, sign: p.sign });
                }
                // Uniformity spreads from a predecessor's modal item.
                (Kind::Know(a), Sign::T)
                    if a == x && it.sign == Sign::F && self.rel_set.contains(&(p.world, w)) =>
                {
                    for u in self.succs(p.world, false) {
                        adds.push(Item { world: u, formula: a, sign: Sign::F });
                    }
                }
                (Kind::Know(a), Sign::FBar)
                    if a == x && it.sign == Sign::T && self.rel_set.contains(&(p.world, w)) =>
                {
                    for u in self.succs(p.world, false) {
                        adds.push(Item { world: u, formula: a, sign: Sign::T });
                    }
                }
                (Kind::Ign(a), Sign::T)
                    if a == x
                        && it.sign == Sign::T
                        && w != p.world
                        && self.rel_set.contains(&(p.world, w)) =>
                {
                    for u in self.succs(p.world, true) {
                        adds.push(Item { world: u, formula: a, sign: Sign::T });
                    }
                }
                (Kind::Ign(a), Sign::FBar)
                    if a == x
                        && it.sign == Sign::FBar
                        && w != p.world
                        && self.rel_set.contains(&(p.world, w)) =>
                {
                    for u in self.succs(p.world, true) {
                        adds.push(Item { world: u, formula: a, sign: Sign::FBar });
                    }
                }
                _ => {}
            }
        }

        for a in adds {
            self.add_item(a, ctx)?;
            if self.closed.is_some() {
                return Ok(());
            }
        }
        Ok(())
    }

    fn process_rel(&mut self, v: WId, u: WId, ctx: &mut Ctx) -> Result<(), TableauError> {
        let table = ctx.table;
        let mut adds: Vec<Item> = Vec::new();
        for j in 0..self.items.len() {
            let p = self.items[j];
            if p.world != v {
                continue;
            }
            match (table.kind(p.formula), p.sign) {
                (Kind::Know(a), Sign::T) => {
                    adds.push(Item { world: u, formula: a, sign: Sign::T });
                    let succ = self.succs(v, false);
                    if succ.iter().any(|&s| self.has(s, a, Sign::F)) {
                        for &s2 in &succ {
                            adds.push(Item { world: s2, formula: a, sign: Sign::F });
                        }
                    }
                    self.pending_cuts.insert((u, a, Axis::Falsity));
                }
                (Kind::Know(a), Sign::FBar) => {
                    adds.push(Item { world: u, formula: a, sign: Sign::FBar });
                    let succ = self.succs(v, false);
                    if succ.iter().any(|&s| self.has(s, a, Sign::T)) {
                        for &s2 in &succ {
                            adds.push(Item { world: s2, formula: a, sign: Sign::T });
                        }
                    }
                    self.pending_cuts.insert((u, a, Axis::Truth));
                }
                (Kind::Ign(a), Sign::T) if u != v => {
                    adds.push(Item { world: u, formula: a, sign: Sign::F });
                    let succ = self.succs(v, true);
                    if succ.iter().any(|&s| self.has(s, a, Sign::T)) {
                        for &s2 in &succ {
                            adds.push(Item { world: s2, formula: a, sign: Sign::T });
                        }
                    }
                    self.pending_cuts.insert((u, a, Axis::Truth));
                }
                (Kind::Ign(a), Sign::FBar) if u != v => {
                    adds.push(Item { world: u, formula: a, sign: Sign::TBar });
                    let succ = self.succs(v, true);
                    if succ.iter().any(|&s| self.has(s, a, Sign::FBar)) {
                        for &s2 in &succ {
                            adds.push(Item { world: s2, formula: a, sign: Sign::FBar });
                        }
                    }
                    self.pending_cuts.insert((u, a, Axis::Falsity));
                }
                _ => {}
            }
        }
        for a in adds {
            self.add_item(a, ctx)?;
            if self.closed.is_some() {
                return Ok(());
            }
        }
        Ok(())
    }

    /// Is some conclusion column of this world-introducing rule instance
    /// already witnessed on the branch?
    fn fresh_witnessed(&self, it: Item, table: &Table) -> bool {
        let (a, cols) = fresh_parts(it, table);
        let w = it.world;
        let strict = self.succs(w, true);
        let looped = self.rel_set.contains(&(w, w));
        cols.iter().any(|col| match *col {
            FreshCol::One(s) => strict.iter().any(|&u| self.has(u, a, s)),
            FreshCol::Two(s1, s2) => {
                strict.iter().any(|&u| self.has(u, a, s1))
                    && strict.iter().any(|&u| self.has(u, a, s2))
            }
            FreshCol::Here(s) => self.has(w, a, s),
            FreshCol::SelfOne(s) => looped && self.has(w, a, s),
            FreshCol::TwoStrictSelf(s1, s2) => {
                strict.iter().any(|&u| self.has(u, a, s1)) && looped && self.has(w, a, s2)
            }
            FreshCol::TwoSelfStrict(s1, s2) => {
                looped && self.has(w, a, s1) && strict.iter().any(|&u| self.has(u, a, s2))
            }
        })
    }

    /// Deterministic choice of the next branching step, if any.
    fn next_fork(&mut self, ctx: &mut Ctx) -> Result<Option<Fork>, TableauError> {
        // Requested cuts first: they unlock a waiting two-premise rule.
        let stale: Vec<(WId, FId, Axis)> = self
            .pending_cuts
            .iter()
            .copied()
            .filter(|&(w, f, axis)| self.decided(w, f, axis))
            .collect();
        for k in stale {
            self.pending_cuts.remove(&k);
        }
        if let Some(&(w, f, axis)) = self.pending_cuts.iter().next() {
            self.pending_cuts.remove(&(w, f, axis));
            let (_, barred) = axis.signs();
            return Ok(Some(Fork::Cut { world: w, formula: f, first: barred }));
        }

        // World-introducing rules, unless a column is already witnessed.
        for i in 0..self.pending_fresh.len() {
            let it = self.pending_fresh[i];
            if self.fresh_done.contains(&it) {
                continue;
            }
            if self.fresh_witnessed(it, ctx.table) {
                self.fresh_done.insert(it);
                continue;
            }
            self.fresh_done.insert(it);
            return Ok(Some(Fork::Fresh { principal: it }));
        }

        // Completion: every (world, subformula, axis) must be decided.
        // Atoms first, barred side first.
        for w in 0..self.worlds() as WId {
            for &f in &ctx.table.var_ids {
                for axis in [Axis::Truth, Axis::Falsity] {
                    if !self.decided(w, f, axis) {
                        let (_, barred) = axis.signs();
                        return Ok(Some(Fork::Cut { world: w, formula: f, first: barred }));
                    }
                }
            }
        }
        // Compound formulas, smaller ids (hence subformulas) first, taking
        // the side that matches the branch-induced model first.
        let mut model: Option<Model> = None;
        for f in 0..ctx.table.len() as FId {
            if matches!(ctx.table.kind(f), Kind::Var) {
                continue;
            }
            for w in 0..self.worlds() as WId {
                for axis in [Axis::Truth, Axis::Falsity] {
                    if self.decided(w, f, axis) {
                        continue;
                    }
                    let m = model.get_or_insert_with(|| extract_model(self, ctx.table));
                    let st = eval(m, w as usize, ctx.table.formula(f))
                        .map_err(|e| TableauError::Internal(e.to_string()))?;
                    let (unbarred, barred) = axis.signs();
                    let holds = match axis {
                        Axis::Truth => st.sup_t,
                        Axis::Falsity => st.sup_f,
                    };
                    let first = if holds { unbarred } else { barred };
                    return Ok(Some(Fork::Cut { world: w, formula: f, first }));
                }
            }
        }
        Ok(None)
    }
}

fn fresh_parts(it: Item, table: &Table) -> (FId, &'static [FreshCol]) {
    let (op, a) = match table.kind(it.formula) {
        Kind::Know(a) => (MOp::Know, a),
        Kind::Ign(a) => (MOp::Ign, a),
        _ => unreachable!("fresh rule on non-modal item"),
    };
    for rule in RULES {
        if let RuleDef::Fresh { op: rop, sign, cols } = rule.def {
            if rop == op && sign == it.sign {
                return (a, cols);
            }
        }
    }
    unreachable!("no fresh rule for {it:?}")
}

enum Fork {
    Cut { world: WId, formula: FId, first: Sign },
    Fresh { principal: Item },
}

fn extract_model(b: &Branch, table: &Table) -> Model {
    let edges: Vec<(usize, usize)> =
        b.rels.iter().map(|&(x, y)| (x as usize, y as usize)).collect();
    let mut m = Model::new(Frame::new(b.worlds(), &edges));
    for &v in &table.var_ids {
        let name = match table.formula(v) {
            Formula::Var(n) => n.clone(),
            _ => unreachable!(),
        };
        for w in 0..b.worlds() as WId {
            let st = TruthState::new(b.has(w, v, Sign::T), b.has(w, v, Sign::F));
            m.set_value(&name, w as usize, st.value());
        }
    }
    m
}

/// Check the completeness condition: for every rule instance whose premises
/// are on the branch, some conclusion (column) is on the branch, and every
/// cut instance over (worlds x subformulas x axes) is decided. Interprets
/// the declarative rule table, independently of the saturation dispatch.
fn star_violations(b: &Branch, table: &Table) -> Vec<String> {
    let mut out = Vec::new();
    let mut complain = |msg: String| out.push(msg);
    for rule in RULES {
        for &p in &b.items {
            let missing = match (rule.def, table.kind(p.formula)) {
                (RuleDef::Neg, Kind::Neg(a)) => !b.has(p.world, a, p.sign.negated()),
                (RuleDef::Decompose { op, sign }, k) if p.sign == sign => match (op, k) {
                    (BinOp::And, Kind::And(x, y)) | (BinOp::Or, Kind::Or(x, y)) => {
                        !(b.has(p.world, x, sign) && b.has(p.world, y, sign))
                    }
                    _ => false,
                },
                (RuleDef::Resolve { op, sign, residue }, k) if p.sign == sign => match (op, k) {
                    (BinOp::And, Kind::And(x, y)) | (BinOp::Or, Kind::Or(x, y)) => {
                        (b.has(p.world, x, residue) && !b.has(p.world, y, sign))
                            || (b.has(p.world, y, residue) && !b.has(p.world, x, sign))
                    }
                    _ => false,
                },
                (RuleDef::Succ { op, sign, concl, strict }, k) if p.sign == sign => {
                    match (op, k) {
                        (MOp::Know, Kind::Know(a)) | (MOp::Ign, Kind::Ign(a)) => b
                            .succs(p.world, strict)
                            .iter()
                            .any(|&u| !b.has(u, a, concl)),
                        _ => false,
                    }
                }
                (RuleDef::Spread { op, sign, residue, strict }, k) if p.sign == sign => {
                    match (op, k) {
                        (MOp::Know, Kind::Know(a)) | (MOp::Ign, Kind::Ign(a)) => {
                            let succ = b.succs(p.world, strict);
                            succ.iter().any(|&u| b.has(u, a, residue))
                                && succ.iter().any(|&u| !b.has(u, a, residue))
                        }
                        _ => false,
                    }
                }
                (RuleDef::Here { op, sign, concl }, k) if p.sign == sign => match (op, k) {
                    (MOp::Ign, Kind::Ign(a)) => !b.has(p.world, a, concl),
                    (MOp::Know, Kind::Know(a)) => !b.has(p.world, a, concl),
                    _ => false,
                },
                (RuleDef::Fresh { op, sign, .. }, k) if p.sign == sign => match (op, k) {
                    (MOp::Know, Kind::Know(_)) | (MOp::Ign, Kind::Ign(_)) => {
                        !b.fresh_witnessed(p, table)
                    }
                    _ => false,
                },
                _ => false,
            };
            if missing {
                complain(format!(
                    "rule {} unsatisfied at w{}: {} ; {}",
                    rule.name,
                    p.world,
                    table.formula(p.formula),
                    p.sign
                ));
            }
        }
    }
    for w in 0..b.worlds() as WId {
        for f in 0..table.len() as FId {
            for axis in [Axis::Truth, Axis::Falsity] {
                if !b.decided(w, f, axis) {
                    complain(format!(
                        "cut undecided at w{w}: {} ({axis:?})",
                        table.formula(f)
                    ));
                }
            }
        }
    }
    out
}

/// Build the model from a complete open branch and re-check every signed
/// item against the semantics. A failure here is an engine bug.
fn realize(b: &Branch, table: &Table) -> Result<PointedModel, TableauError> {
    let model = extract_model(b, table);
    for &it in &b.items {
        let st = eval(&model, it.world as usize, table.formula(it.formula))
            .map_err(|e| TableauError::Internal(e.to_string()))?;
        let ok = match it.sign {
            Sign::T => st.sup_t,
            Sign::F => st.sup_f,
            Sign::TBar => !st.sup_t,
            Sign::FBar => !st.sup_f,
        };
        if !ok {
            return Err(TableauError::Internal(format!(
                "extracted model does not realize w{}: {} ; {}",
                it.world,
                table.formula(it.formula),
                it.sign
            )));
        }
    }
    Ok(PointedModel::new(model, 0))
}

enum Explored {
    Closed(ProofNode),
    Open(Box<Branch>, PointedModel),
}

fn explore(mut b: Branch, ctx: &mut Ctx) -> Result<Explored, TableauError> {
    b.saturate(ctx)?;
    if let Some((w, f, sign)) = b.closed {
        return Ok(Explored::Closed(ProofNode {
            lines: branch_lines(&b, ctx.table, b.node_start),
            children: Vec::new(),
            status: NodeStatus::Closed {
                world: w as usize,
                formula: ctx.table.formula(f).clone(),
                sign,
            },
        }));
    }
    match b.next_fork(ctx)? {
        Some(fork) => {
            ctx.step(&b)?;
            let columns: Vec<Vec<ColEntry>> = match fork {
                Fork::Cut { world, formula, first } => vec![
                    vec![ColEntry::Item(world, formula, first)],
                    vec![ColEntry::Item(world, formula, first.complement())],
                ],
                Fork::Fresh { principal } => {
                    let (a, cols) = fresh_parts(principal, ctx.table);
                    let w = principal.world;
                    cols.iter()
                        .map(|col| match *col {
                            FreshCol::One(s) => {
                                vec![ColEntry::FreshRel(w), ColEntry::AtFresh(0, a, s)]
                            }
                            FreshCol::Two(s1, s2) => vec![
                                ColEntry::FreshRel(w),
                                ColEntry::FreshRel(w),
                                ColEntry::AtFresh(0, a, s1),
                                ColEntry::AtFresh(1, a, s2),
                            ],
                            FreshCol::Here(s) => vec![ColEntry::Item(w, a, s)],
                            FreshCol::SelfOne(s) => {
                                vec![ColEntry::SelfRel(w), ColEntry::Item(w, a, s)]
                            }
                            FreshCol::TwoStrictSelf(s1, s2) => vec![
                                ColEntry::FreshRel(w),
                                ColEntry::SelfRel(w),
                                ColEntry::AtFresh(0, a, s1),
                                ColEntry::Item(w, a, s2),
                            ],
                            FreshCol::TwoSelfStrict(s1, s2) => vec![
                                ColEntry::SelfRel(w),
                                ColEntry::FreshRel(w),
                                ColEntry::Item(w, a, s1),
                                ColEntry::AtFresh(0, a, s2),
                            ],
                        })
                        .collect()
                }
            };
            let mut children = Vec::new();
            for col in columns {
                let mut child = b.clone();
                child.node_start = child.history.len();
                let mut fresh: Vec<WId> = Vec::new();
                for entry in &col {
                    match *entry {
                        ColEntry::Item(w, f, s) => {
                            child.add_item(Item { world: w, formula: f, sign: s }, ctx)?;
                        }
                        ColEntry::FreshRel(w) => {
                            let u = child.alloc_world(ctx)?;
                            fresh.push(u);
                            child.add_rel(w, u, ctx)?;
                        }
                        ColEntry::SelfRel(w) => {
                            child.add_rel(w, w, ctx)?;
                        }
                        ColEntry::AtFresh(idx, f, s) => {
                            let u = fresh[idx];
                            child.add_item(Item { world: u, formula: f, sign: s }, ctx)?;
                        }
                    }
                }
                match explore(child, ctx)? {
                    Explored::Open(br, pm) => return Ok(Explored::Open(br, pm)),
                    Explored::Closed(node) => children.push(node),
                }
            }
            Ok(Explored::Closed(ProofNode {
                lines: branch_lines(&b, ctx.table, b.node_start),
                children,
                status: NodeStatus::Inner,
            }))
        }
        None => {
            let violations = star_violations(&b, ctx.table);
            if !violations.is_empty() {
                return Err(TableauError::Internal(format!(
                    "open branch fails completeness audit: {}",
                    violations.join("; ")
                )));
            }
            let pm = realize(&b, ctx.table)?;
            Ok(Explored::Open(Box::new(b), pm))
        }
    }
}

enum ColEntry {
    Item(WId, FId, Sign),
    /// Allocate a fresh world and relate it to the given one.
    FreshRel(WId),
    /// Add the self loop `w R w`.
    SelfRel(WId),
    /// Item at the idx-th fresh world of this column.
    AtFresh(usize, FId, Sign),
}

pub(super) fn prove(seq: &Sequent, limits: &Limits) -> Result<Verdict, TableauError> {
    let table = Table::build(seq)?;
    let mut ctx = Ctx { table: &table, limits, steps: 0 };
    let root = Branch::new(&table, &mut ctx)?;
    match explore(root, &mut ctx)? {
        Explored::Closed(root) => Ok(Verdict::Proved(ProofTree { root })),
        Explored::Open(branch, countermodel) => Ok(Verdict::Refuted(Refutation {
            countermodel,
            branch: branch_lines(&branch, &table, 0),
        })),
    }
}
