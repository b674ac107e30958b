//! The rule inventory as data: premise patterns, side conditions, conclusion
//! columns and fresh-label flags. The saturation engine mirrors this table
//! with specialized dispatch; the completeness audit interprets the table
//! directly against a branch, so an engine that skipped an instance would be
//! caught before any countermodel is reported. The local soundness property
//! test interprets the same table against random models.

use super::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BinOp {
    And,
    Or,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MOp {
    Know,
    Ign,
}

/// Conclusion column of a world-introducing rule.
///
/// Fresh labels always denote *strict* successors (worlds other than the
/// principal one); the case where the semantic witness is the principal
/// world itself appears as an explicit self-loop column. Without that
/// split, a fresh label can alias a reflexive world and the strictness
/// side condition of the `I` rules misreads it as a strict successor,
/// which closes tableaux for refutable mixed sequents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum FreshCol {
    /// `w R u` plus `u: a ; sign`, `u` fresh (a strict successor).
    One(Sign),
    /// `w R u`, `w R u'` plus `u: a ; s1`, `u': a ; s2`, both fresh.
    Two(Sign, Sign),
    /// `w: a ; sign` at the principal world itself (no relational atom).
    Here(Sign),
    /// `w R w` plus `w: a ; sign`: the witness is the world itself.
    SelfOne(Sign),
    /// `w R u` (fresh), `w R w`, `u: a ; s1`, `w: a ; s2`.
    TwoStrictSelf(Sign, Sign),
    /// `w R w`, `w R u'` (fresh), `w: a ; s1`, `u': a ; s2`.
    TwoSelfStrict(Sign, Sign),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RuleDef {
    /// `w: ~a ; v` yields `w: a ; v` with the sign flipped under negation.
    Neg,
    /// `w: a op b ; sign` yields both components with the same sign.
    Decompose { op: BinOp, sign: Sign },
    /// `w: a op b ; sign` plus one component signed `residue` yields the
    /// other component signed `sign`.
    Resolve { op: BinOp, sign: Sign, residue: Sign },
    /// `w: m a ; sign` plus `w R s` yields `s: a ; concl`.
    /// `strict` requires `s != w` (the ignorance modality ranges over strict
    /// successors).
    Succ { op: MOp, sign: Sign, concl: Sign, strict: bool },
    /// `w: m a ; sign` plus `s1: a ; residue`, `w R s1`, `w R s2` yields
    /// `s2: a ; residue` — the uniformity propagations.
    Spread { op: MOp, sign: Sign, residue: Sign, strict: bool },
    /// `w: m a ; sign` yields `w: a ; concl` at the same world.
    Here { op: MOp, sign: Sign, concl: Sign },
    /// `w: m a ; sign` branches into the given columns, introducing fresh
    /// worlds.
    Fresh { op: MOp, sign: Sign, cols: &'static [FreshCol] },
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Rule {
    pub name: &'static str,
    pub def: RuleDef,
}

/// Every rule of the calculus except the premise-free analytic cut, which
/// the engine and the audit treat separately (one instance per world,
/// subformula and axis).
///
/// `know_fbar_tspread` carries the `-f` premise sign: the rule propagates
/// truth-support across successors exactly when falsity of the boxed
/// formula is ruled out, and that premise sign is what the local soundness
/// test below confirms (the `-t` variant is refutable, see
/// `tspread_with_tbar_premise_would_be_unsound`).
pub(crate) static RULES: &[Rule] = &[
    Rule { name: "neg_flip", def: RuleDef::Neg },
    Rule { name: "and_t", def: RuleDef::Decompose { op: BinOp::And, sign: Sign::T } },
    Rule { name: "and_fbar", def: RuleDef::Decompose { op: BinOp::And, sign: Sign::FBar } },
    Rule { name: "or_f", def: RuleDef::Decompose { op: BinOp::Or, sign: Sign::F } },
    Rule { name: "or_tbar", def: RuleDef::Decompose { op: BinOp::Or, sign: Sign::TBar } },
    Rule {
        name: "or_t_resolve",
        def: RuleDef::Resolve { op: BinOp::Or, sign: Sign::T, residue: Sign::TBar },
    },
    Rule {
        name: "and_f_resolve",
        def: RuleDef::Resolve { op: BinOp::And, sign: Sign::F, residue: Sign::FBar },
    },
    Rule {
        name: "and_tbar_resolve",
        def: RuleDef::Resolve { op: BinOp::And, sign: Sign::TBar, residue: Sign::T },
    },
    Rule {
        name: "or_fbar_resolve",
        def: RuleDef::Resolve { op: BinOp::Or, sign: Sign::FBar, residue: Sign::F },
    },
    Rule {
        name: "know_t_succ",
        def: RuleDef::Succ { op: MOp::Know, sign: Sign::T, concl: Sign::T, strict: false },
    },
    Rule {
        name: "know_t_fspread",
        def: RuleDef::Spread { op: MOp::Know, sign: Sign::T, residue: Sign::F, strict: false },
    },
    Rule {
        name: "know_fbar_succ",
        def: RuleDef::Succ { op: MOp::Know, sign: Sign::FBar, concl: Sign::FBar, strict: false },
    },
    Rule {
        name: "know_fbar_tspread",
        def: RuleDef::Spread { op: MOp::Know, sign: Sign::FBar, residue: Sign::T, strict: false },
    },
    Rule {
        name: "know_f_branch",
        def: RuleDef::Fresh {
            op: MOp::Know,
            sign: Sign::F,
            cols: &[
                FreshCol::One(Sign::F),
                FreshCol::Two(Sign::T, Sign::TBar),
                FreshCol::SelfOne(Sign::F),
                FreshCol::TwoStrictSelf(Sign::T, Sign::TBar),
                FreshCol::TwoSelfStrict(Sign::T, Sign::TBar),
            ],
        },
    },
    Rule {
        name: "know_tbar_branch",
        def: RuleDef::Fresh {
            op: MOp::Know,
            sign: Sign::TBar,
            cols: &[
                FreshCol::One(Sign::TBar),
                FreshCol::Two(Sign::F, Sign::FBar),
                FreshCol::SelfOne(Sign::TBar),
                FreshCol::TwoStrictSelf(Sign::F, Sign::FBar),
                FreshCol::TwoSelfStrict(Sign::F, Sign::FBar),
            ],
        },
    },
    Rule {
        name: "ign_t_here",
        def: RuleDef::Here { op: MOp::Ign, sign: Sign::T, concl: Sign::T },
    },
    Rule {
        name: "ign_t_succ",
        def: RuleDef::Succ { op: MOp::Ign, sign: Sign::T, concl: Sign::F, strict: true },
    },
    Rule {
        name: "ign_t_tspread",
        def: RuleDef::Spread { op: MOp::Ign, sign: Sign::T, residue: Sign::T, strict: true },
    },
    Rule {
        name: "ign_fbar_here",
        def: RuleDef::Here { op: MOp::Ign, sign: Sign::FBar, concl: Sign::FBar },
    },
    Rule {
        name: "ign_fbar_succ",
        def: RuleDef::Succ { op: MOp::Ign, sign: Sign::FBar, concl: Sign::TBar, strict: true },
    },
    Rule {
        name: "ign_fbar_fspread",
        def: RuleDef::Spread { op: MOp::Ign, sign: Sign::FBar, residue: Sign::FBar, strict: true },
    },
    Rule {
        name: "ign_f_branch",
        def: RuleDef::Fresh {
            op: MOp::Ign,
            sign: Sign::F,
            cols: &[
                FreshCol::One(Sign::T),
                FreshCol::Two(Sign::F, Sign::FBar),
                FreshCol::Here(Sign::F),
            ],
        },
    },
    Rule {
        name: "ign_tbar_branch",
        def: RuleDef::Fresh {
            op: MOp::Ign,
            sign: Sign::TBar,
            cols: &[
                FreshCol::One(Sign::FBar),
                FreshCol::Two(Sign::T, Sign::TBar),
                FreshCol::Here(Sign::TBar),
            ],
        },
    },
];
