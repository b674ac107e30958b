//! Reasoning toolkit for Belnap–Dunn modal logics.
//!
//! The crate covers five layers:
//!
//! - [`formula`] — the modal language over `~ & |` with `[]` (necessity),
//!   `[*]` (knowledge), `I` (factive ignorance) and `Tri` (knowing-whether),
//!   with a parser, printer and structural utilities;
//! - [`semantics`] — finite Kripke frames with dual (truth/falsity)
//!   valuations, four-valued evaluation of every connective, dual models and
//!   frame-class predicates, plus a line-based model text format;
//! - [`oracle`] — brute-force enumeration of valuations, frames and formulas
//!   up to a budget, with validity and separation checks derived from them;
//! - [`tableau`] — a labelled analytic-cut calculus for the `[*]`/`I`
//!   fragment with saturation-based proof search and verified countermodel
//!   extraction;
//! - [`harness`] — named experiments that machine-check the semantic claims
//!   the other layers are built on, at desk scale, with reproducible seeds.
//!
//! The `bdml` binary exposes `prove`, `check`, `search`, `experiment` and
//! `fixtures` subcommands over these layers.

pub mod formula;
pub mod harness;
pub mod oracle;
pub mod semantics;
pub mod tableau;
