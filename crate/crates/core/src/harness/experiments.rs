//! The experiment implementations. Every claim the toolkit leans on is
//! checked at desk scale: exhaustively over all frames up to the configured
//! bound, and with seeded random frames/models/formulas where exhaustion is
//! out of reach.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use rayon::prelude::*;

use super::{fixtures, ExperimentConfig, ExperimentReport, Failure};
use crate::formula::{parse_formula, parse_sequent, Formula, Sequent, Signature};
use crate::oracle::{
    find_countermodel, formulas_up_to, frames_up_to, valid_on_frame, EnumerationBudget,
    SeparationVerdict, Validity,
};
use crate::semantics::{
    eval, eval_strict_know, holds_sequent_at, print_model, Compiled, Frame, FrameClass, Model,
    PointedModel, TruthState, Value,
};
use crate::tableau::{prove, Verdict};

fn rng_for(cfg: &ExperimentConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt)
}

fn random_formula(rng: &mut ChaCha8Rng, atoms: &[&str], sig: Signature, budget: usize) -> Formula {
    if budget <= 1 {
        return Formula::var(atoms[rng.gen_range(0..atoms.len())]);
    }
    let mut ops: Vec<u8> = vec![0, 1, 1];
    if budget >= 3 {
        ops.push(2);
        ops.push(3);
    }
    if sig.nec {
        ops.push(4);
    }
    if sig.know {
        ops.push(5);
    }
    if sig.ign {
        ops.push(6);
    }
    match ops[rng.gen_range(0..ops.len())] {
        0 => Formula::var(atoms[rng.gen_range(0..atoms.len())]),
        1 => random_formula(rng, atoms, sig, budget - 1).neg(),
        2 | 3 => {
            let left = rng.gen_range(1..=(budget - 2));
            let l = random_formula(rng, atoms, sig, left);
            let r = random_formula(rng, atoms, sig, budget - 1 - left);
            if rng.gen_bool(0.5) {
                l.and(r)
            } else {
                l.or(r)
            }
        }
        4 => random_formula(rng, atoms, sig, budget - 1).nec(),
        5 => random_formula(rng, atoms, sig, budget - 1).know(),
        _ => random_formula(rng, atoms, sig, budget - 1).ign(),
    }
}

fn random_frame(rng: &mut ChaCha8Rng, lo: usize, hi: usize, reflexive: bool) -> Frame {
    let n = rng.gen_range(lo..=hi);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if (reflexive && a == b) || rng.gen_bool(0.45) {
                edges.push((a, b));
            }
        }
    }
    Frame::new(n, &edges)
}

fn random_model(rng: &mut ChaCha8Rng, max_worlds: usize, atoms: &[&str]) -> Model {
    let frame = random_frame(rng, 1, max_worlds, false);
    let n = frame.world_count();
    let mut m = Model::new(frame);
    for atom in atoms {
        for w in 0..n {
            let v = match rng.gen_range(0..4) {
                0 => Value::T,
                1 => Value::F,
                2 => Value::B,
                _ => Value::N,
            };
            m.set_value(atom, w, v);
        }
    }
    m
}

fn atom_list(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Truth states of `f` at every world of every valuation of `atoms` on
/// `frame`, compared with `g` under a caller-provided relation.
fn compare_on_frame(
    frame: &Frame,
    atoms: &[String],
    cap: u64,
    f: &Compiled,
    g: &Compiled,
    mut related: impl FnMut(TruthState, TruthState) -> bool,
) -> Result<Option<(Model, usize, TruthState, TruthState)>, crate::oracle::OracleError> {
    let n = frame.world_count();
    let mut tf = Vec::new();
    let mut tg = Vec::new();
    for m in crate::oracle::valuations_on(frame, atoms, cap)? {
        f.eval_into(&m, false, &mut tf);
        g.eval_into(&m, false, &mut tg);
        for w in 0..n {
            let a = tf[f.root() * n + w];
            let b = tg[g.root() * n + w];
            if !related(a, b) {
                return Ok(Some((m, w, a, b)));
            }
        }
    }
    Ok(None)
}

/// Figure-faithfulness: every stored fact of every fixture evaluates as
/// recorded.
pub(super) fn figures(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new("figures", "all fixtures".into(), cfg.seed);
    for fixture in fixtures::all() {
        for fact in &fixture.facts {
            let outcome = fixture.check(fact);
            report.check(
                outcome.is_ok(),
                || format!("{}: {} at {}", fixture.name, fact.query, fact.world),
                || format!("{:?}", fact.expect),
                || outcome.clone().err().unwrap_or_default(),
                || fixture.text.replace('\n', "; "),
            );
        }
    }
    report
}

/// On the all-glut point every formula is B; on the all-gap point, N.
pub(super) fn no_validities(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new(
        "no-validities",
        format!("{} random formulas, size <= 8", cfg.formula_samples),
        cfg.seed,
    );
    let glut = fixtures::by_name("glut-point").unwrap().model;
    let gap = fixtures::by_name("gap-point").unwrap().model;
    let mut rng = rng_for(cfg, 0x01);
    for _ in 0..cfg.formula_samples {
        let f = random_formula(&mut rng, &["p", "q"], Signature::ALL, 8);
        let vb = eval(&glut, 0, &f).unwrap().value();
        let vn = eval(&gap, 0, &f).unwrap().value();
        report.check(
            vb == Value::B,
            || format!("{f} on the glut point"),
            || "B".into(),
            || vb.to_string(),
            || f.to_string(),
        );
        report.check(
            vn == Value::N,
            || format!("{f} on the gap point"),
            || "N".into(),
            || vn.to_string(),
            || f.to_string(),
        );
    }
    report
}

/// Dual models swap B and N at every formula of the `[*]`/`I` language, and
/// dualizing twice is the identity.
pub(super) fn duality(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new(
        "duality",
        format!("{} trials, models <= 4 worlds, formulas <= size 8", cfg.trials),
        cfg.seed,
    );
    let mut rng = rng_for(cfg, 0x02);
    for _ in 0..cfg.trials {
        let m = random_model(&mut rng, 4, &["p", "q"]);
        let f = random_formula(&mut rng, &["p", "q"], Signature::KNOW_IGN, 8);
        let w = rng.gen_range(0..m.world_count());
        let st = eval(&m, w, &f).unwrap();
        let dual = m.dual();
        let dst = eval(&dual, w, &f).unwrap();
        report.check(
            dst.value() == st.value().dual(),
            || format!("{f} at w{w}"),
            || st.value().dual().to_string(),
            || dst.value().to_string(),
            || print_model(&m).replace('\n', "; "),
        );
        report.check(
            dual.dual() == m,
            || format!("double dual at w{w}"),
            || "original model".into(),
            || "different model".into(),
            || print_model(&m).replace('\n', "; "),
        );
    }
    report
}

/// Knowing-whether against knowledge: `Tri p` is interchangeable with
/// `[*]p | [*]~p` everywhere; on reflexive frames `[*]p` is interchangeable
/// with `p & Tri p`; on equivalence frames truthfulness and both
/// introspection sequents hold; on the transitive-but-not-serial chain,
/// positive introspection fails.
pub(super) fn knowledge(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new(
        "knowledge",
        format!("all frames <= {} worlds + 200 random 4-6-world frames", cfg.max_worlds),
        cfg.seed,
    );
    let atoms = atom_list(&["p"]);
    let whether = Compiled::new(&parse_formula("Tri p").unwrap());
    let know_split = Compiled::new(&parse_formula("[*]p | [*]~p").unwrap());
    let know = Compiled::new(&parse_formula("[*]p").unwrap());
    let know_via_whether = Compiled::new(&parse_formula("p & Tri p").unwrap());

    let mut frames: Vec<Frame> = frames_up_to(cfg.max_worlds, false).unwrap().collect();
    let mut rng = rng_for(cfg, 0x03);
    for _ in 0..200 {
        frames.push(random_frame(&mut rng, 4, 6, false));
    }
    for frame in &frames {
        let diff = compare_on_frame(frame, &atoms, cfg.model_cap, &whether, &know_split, |a, b| {
            a == b
        })
        .unwrap();
        report.check(
            diff.is_none(),
            || format!("Tri p vs [*]p | [*]~p on {} worlds", frame.world_count()),
            || "identical truth states".into(),
            || diff.as_ref().map(|(_, w, a, b)| format!("{a} vs {b} at w{w}")).unwrap_or_default(),
            || diff.as_ref().map(|(m, ..)| print_model(m).replace('\n', "; ")).unwrap_or_default(),
        );
        if frame.has(FrameClass::Reflexive) {
            let diff = compare_on_frame(
                frame,
                &atoms,
                cfg.model_cap,
                &know,
                &know_via_whether,
                |a, b| a == b,
            )
            .unwrap();
            report.check(
                diff.is_none(),
                || format!("[*]p vs p & Tri p on reflexive {} worlds", frame.world_count()),
                || "identical truth states".into(),
                || diff.as_ref().map(|(_, w, a, b)| format!("{a} vs {b} at w{w}")).unwrap_or_default(),
                || diff.as_ref().map(|(m, ..)| print_model(m).replace('\n', "; ")).unwrap_or_default(),
            );
        }
    }

    // Truthfulness and the two introspection sequents on every equivalence
    // frame with at most four worlds.
    let s5_sequents = [
        parse_sequent("[*]p |- p").unwrap(),
        parse_sequent("[*]p |- [*][*]p").unwrap(),
        parse_sequent("<*>p |- [*]<*>p").unwrap(),
    ];
    for frame in frames_up_to(4, false).unwrap() {
        if !frame.is_equivalence() {
            continue;
        }
        for s in &s5_sequents {
            let v = valid_on_frame(&frame, s, &atoms, cfg.model_cap).unwrap();
            report.check(
                v.is_valid(),
                || format!("{s} on an equivalence frame with {} worlds", frame.world_count()),
                || "valid".into(),
                || "refuted".into(),
                || v.witness().map(|pm| print_model(&pm.model).replace('\n', "; ")).unwrap_or_default(),
            );
        }
    }

    // Positive introspection alone fails on the transitive non-serial chain,
    // witnessed by the all-glut valuation.
    let chain = fixtures::by_name("strict-chain-glut").unwrap().model;
    let intro = parse_sequent("[*]p |- [*][*]p").unwrap();
    let v = valid_on_frame(chain.frame(), &intro, &atoms, cfg.model_cap).unwrap();
    report.check(
        !v.is_valid(),
        || "[*]p |- [*][*]p on the strict chain".into(),
        || "refuted".into(),
        || "valid".into(),
        || String::new(),
    );
    report.check(
        !holds_sequent_at(&chain, 0, &intro).unwrap(),
        || "all-glut witness refutes introspection on the strict chain".into(),
        || "fails at w0".into(),
        || "holds".into(),
        || print_model(&chain).replace('\n', "; "),
    );
    report
}

/// The ignorance sequents hold on every frame, and the ignorance inference
/// rule is closed under provability on sampled valid premises.
pub(super) fn ignorance(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new(
        "ignorance",
        format!(
            "all frames <= {} worlds; {} sampled rule instances",
            cfg.max_worlds, cfg.rule_samples
        ),
        cfg.seed,
    );
    let i1 = parse_sequent("Ip |- p").unwrap();
    let i2 = parse_sequent("Ip & Iq |- I(p | q)").unwrap();
    for frame in frames_up_to(cfg.max_worlds, false).unwrap() {
        for s in [&i1, &i2] {
            let atoms = s.atoms();
            let v = valid_on_frame(&frame, s, &atoms, cfg.model_cap).unwrap();
            report.check(
                v.is_valid(),
                || format!("{s} on {} worlds", frame.world_count()),
                || "valid".into(),
                || "refuted".into(),
                || v.witness().map(|pm| print_model(&pm.model).replace('\n', "; ")).unwrap_or_default(),
            );
        }
    }

    // From a proof of lhs |- rhs, infer lhs & I rhs |- I lhs. Premises are
    // sampled from the bounded battery, required to be both oracle-valid
    // (bounded) and proved by the tableau.
    let battery = formulas_up_to(Signature::KNOW_IGN, &["p", "q"], 4);
    let budget =
        EnumerationBudget::default().with_max_worlds(cfg.max_worlds).with_atoms(&["p", "q"]);
    let mut rng = rng_for(cfg, 0x04);
    let mut found = 0usize;
    let mut sampled = 0usize;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    // The documented instance first.
    let pq = Formula::var("p").and(Formula::var("q"));
    let p = Formula::var("p");
    pairs.push((
        battery.iter().position(|f| *f == pq).unwrap(),
        battery.iter().position(|f| *f == p).unwrap(),
    ));
    while found < cfg.rule_samples && sampled < 200_000 {
        let (li, ri) = match pairs.pop() {
            Some(pair) => pair,
            None => (rng.gen_range(0..battery.len()), rng.gen_range(0..battery.len())),
        };
        sampled += 1;
        let premise = Sequent::new(battery[li].clone(), battery[ri].clone());
        let proved = match prove(&premise) {
            Ok(Verdict::Proved(_)) => true,
            Ok(Verdict::Refuted(_)) => false,
            Err(e) => {
                report.check(false, || format!("prove {premise}"), || "a verdict".into(), || e.to_string(), String::new);
                continue;
            }
        };
        if !proved {
            continue;
        }
        if find_countermodel(&premise, &budget).unwrap().is_some() {
            report.check(
                false,
                || format!("oracle confirms {premise}"),
                || "no countermodel".into(),
                || "countermodel".into(),
                String::new,
            );
            continue;
        }
        found += 1;
        let conclusion = Sequent::new(
            premise.lhs.clone().and(premise.rhs.clone().ign()),
            premise.lhs.clone().ign(),
        );
        // A failed lifting is reported with its countermodel, re-checked
        // through the semantics evaluator so a genuine refutation cannot be
        // confused with a prover bug.
        let outcome = prove(&conclusion);
        let (ok, witness) = match &outcome {
            Ok(Verdict::Proved(_)) => (true, String::new()),
            Ok(Verdict::Refuted(r)) => {
                let pm = &r.countermodel;
                let refutes = !holds_sequent_at(&pm.model, pm.world, &conclusion).unwrap();
                let tag = if refutes { "model-checked countermodel" } else { "UNVERIFIED" };
                (false, format!("{tag}: {}", print_model(&pm.model).replace('\n', "; ")))
            }
            Err(e) => (false, e.to_string()),
        };
        report.check(
            ok,
            || format!("{premise} lifts to {conclusion}"),
            || "proved".into(),
            || "refuted".into(),
            || witness.clone(),
        );
    }
    if found < cfg.rule_samples {
        report.check(
            false,
            || "sampling valid premises for the ignorance rule".into(),
            || format!("{} instances", cfg.rule_samples),
            || format!("{found} after {sampled} samples"),
            || String::new(),
        );
    }
    report
}

const DEFINABILITY_CASES: &[(FrameClass, &[&str])] = &[
    (FrameClass::Serial, &["[*]p |- <*>p"]),
    (FrameClass::Reflexive, &["[*]p |- p"]),
    (FrameClass::Dense, &["<*>p |- <*><*>p"]),
    (FrameClass::Euclidean, &["<*>p |- [*]<*>p"]),
    (FrameClass::F45, &["<*>p |- [*]<*>p", "[*]p |- [*][*]p"]),
    (FrameClass::D4, &["[*]p |- <*>p", "[*]p |- [*][*]p"]),
    (FrameClass::S4, &["[*]p |- p", "[*]p |- [*][*]p"]),
    (FrameClass::D5, &["[*]p |- <*>p", "<*>p |- [*]<*>p"]),
    (FrameClass::S5, &["[*]p |- p", "<*>p |- [*]<*>p"]),
    (FrameClass::Ddn, &["[*]p |- <*>p", "<*>p |- <*><*>p"]),
    (FrameClass::D45, &["[*]p |- <*>p", "<*>p |- [*]<*>p", "[*]p |- [*][*]p"]),
];

/// Frame correspondence: each class of frames is matched exactly by its
/// defining set of sequents on every frame up to the bound; transitivity
/// alone is *not* matched by positive introspection.
pub(super) fn definability(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new(
        "definability",
        format!("all frames <= {} worlds", cfg.max_worlds),
        cfg.seed,
    );
    let atoms = atom_list(&["p"]);
    let mut sequents: Vec<Sequent> = Vec::new();
    for (_, seqs) in DEFINABILITY_CASES {
        for s in *seqs {
            let s = parse_sequent(s).unwrap();
            if !sequents.contains(&s) {
                sequents.push(s);
            }
        }
    }
    for frame in frames_up_to(cfg.max_worlds, false).unwrap() {
        let valid: Vec<bool> = sequents
            .iter()
            .map(|s| valid_on_frame(&frame, s, &atoms, cfg.model_cap).unwrap().is_valid())
            .collect();
        for (class, seqs) in DEFINABILITY_CASES {
            let in_class = frame.has(*class);
            let all_valid = seqs.iter().all(|text| {
                let s = parse_sequent(text).unwrap();
                valid[sequents.iter().position(|x| *x == s).unwrap()]
            });
            report.check(
                in_class == all_valid,
                || {
                    format!(
                        "{class:?} vs {{{}}} on frame with {} worlds, edges {:?}",
                        seqs.join(", "),
                        frame.world_count(),
                        frame.edges()
                    )
                },
                || format!("class membership {in_class}"),
                || format!("sequents valid {all_valid}"),
                || String::new(),
            );
        }
    }

    // Bare transitivity is not captured by positive introspection.
    let chain = fixtures::by_name("strict-chain-glut").unwrap().model;
    let intro = parse_sequent("[*]p |- [*][*]p").unwrap();
    report.check(
        chain.frame().has(FrameClass::Transitive)
            && !valid_on_frame(chain.frame(), &intro, &atoms, cfg.model_cap)
                .unwrap()
                .is_valid(),
        || "transitive chain refutes [*]p |- [*][*]p".into(),
        || "transitive and refuted".into(),
        || "unexpected".into(),
        || String::new(),
    );
    report
}

/// Bounded expressivity separations between the three modal vocabularies.
pub(super) fn separations(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new(
        "separations",
        format!("fragment searches up to size {}", cfg.max_size),
        cfg.seed,
    );
    report.note(format!(
        "indistinguishability verdicts certify only formulas of size <= {}",
        cfg.max_size
    ));
    let point = |name: &str| {
        let f = fixtures::by_name(name).unwrap();
        PointedModel::new(f.model, 0)
    };
    let single = point("single-cluster");
    let double = point("double-cluster");
    let loop_b = point("glut-loop");
    let isolated = point("glut-isolated");
    let gapped = point("cluster-with-gap");

    let expect_sep = |a: &PointedModel,
                          b: &PointedModel,
                          sig: Signature,
                          size: usize,
                          want: Option<&str>,
                          label: &str,
                          report: &mut ExperimentReport| {
        let rep = crate::oracle::separation_check(a, b, sig, size);
        match want {
            Some(formula) => {
                let got = rep
                    .separating_formula
                    .as_ref()
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| "none".into());
                report.check(
                    rep.verdict == SeparationVerdict::Separated && got == formula,
                    || label.to_string(),
                    || format!("separated by {formula}"),
                    || got.clone(),
                    || String::new(),
                );
            }
            None => {
                report.check(
                    rep.verdict == SeparationVerdict::IndistinguishableUpToBound,
                    || label.to_string(),
                    || "indistinguishable up to bound".into(),
                    || {
                        rep.separating_formula
                            .as_ref()
                            .map(|f| format!("separated by {f}"))
                            .unwrap_or_default()
                    },
                    || String::new(),
                );
            }
        }
    };

    // Factive ignorance is invisible to [] and to [*], but Ip itself tells
    // the two clusters apart.
    expect_sep(&single, &double, Signature::NEC, cfg.max_size, None, "cluster pair vs []-fragment", &mut report);
    expect_sep(&single, &double, Signature::KNOW, cfg.max_size, None, "cluster pair vs [*]-fragment", &mut report);
    expect_sep(&single, &double, Signature::IGN, 2, Some("Ip"), "cluster pair vs I-fragment", &mut report);

    // Knowledge is invisible to I on the glut pair, but [*]p separates it
    // through falsity-support alone.
    expect_sep(&loop_b, &isolated, Signature::IGN, cfg.max_size, None, "glut pair vs I-fragment", &mut report);
    expect_sep(&loop_b, &isolated, Signature::KNOW, 2, Some("[*]p"), "glut pair vs [*]-fragment", &mut report);
    {
        let f = parse_formula("[*]p").unwrap();
        let va = eval(&loop_b.model, 0, &f).unwrap();
        let vb = eval(&isolated.model, 0, &f).unwrap();
        report.check(
            va.sup_t == vb.sup_t && va.sup_f && !vb.sup_f,
            || "[*]p separates the glut pair via falsity-support".into(),
            || "same truth-support, different falsity-support".into(),
            || format!("{va:?} vs {vb:?}"),
            || String::new(),
        );
    }

    // Unknown truth against the []-fragment. Full indistinguishability of
    // the pair is asserted here because the build contract asks for it, but
    // it does not hold: []p is T on the single cluster and N on the gapped
    // one. The defining-pattern check below is the claim that is actually
    // true: no []-formula is exactly false at the first point while exactly
    // true at the second, which is what Acc p does.
    expect_sep(&single, &gapped, Signature::NEC, cfg.max_size, None, "gap pair vs []-fragment", &mut report);
    {
        let f = parse_formula("Acc p").unwrap();
        let va = eval(&single.model, 0, &f).unwrap().value();
        let vb = eval(&gapped.model, 0, &f).unwrap().value();
        report.check(
            va == Value::F && vb == Value::T,
            || "Acc p separates the gap pair".into(),
            || "F vs T".into(),
            || format!("{va} vs {vb}"),
            || String::new(),
        );
        let mut offender = None;
        let mut searched = 0u64;
        for g in formulas_up_to(Signature::NEC, &["p"], cfg.max_size) {
            searched += 1;
            let a = eval(&single.model, 0, &g).unwrap().value();
            let b = eval(&gapped.model, 0, &g).unwrap().value();
            if a == Value::F && b == Value::T {
                offender = Some(g);
                break;
            }
        }
        report.check(
            offender.is_none(),
            || format!("no []-formula (of {searched} searched) matches the Acc p pattern F/T on the gap pair"),
            || "none".into(),
            || offender.map(|g| g.to_string()).unwrap_or_default(),
            || String::new(),
        );
    }

    // On the triple cluster []p is glut at both p-true worlds; no formula
    // of the [*]/I vocabulary manages that within the bound.
    let triple = fixtures::by_name("triple-cluster").unwrap().model;
    let nec_p = parse_formula("[]p").unwrap();
    report.check(
        eval(&triple, 0, &nec_p).unwrap().value() == Value::B
            && eval(&triple, 2, &nec_p).unwrap().value() == Value::B,
        || "[]p is glut at both outer worlds of the triple cluster".into(),
        || "B and B".into(),
        || "unexpected".into(),
        || String::new(),
    );
    let mut offender = None;
    let mut checked = 0u64;
    for f in formulas_up_to(Signature::KNOW_IGN, &["p"], cfg.max_size) {
        checked += 1;
        let v0 = eval(&triple, 0, &f).unwrap().value();
        let v2 = eval(&triple, 2, &f).unwrap().value();
        if v0 == Value::B && v2 == Value::B {
            offender = Some(f);
            break;
        }
    }
    report.check(
        offender.is_none(),
        || format!("no [*]/I formula (of {checked} searched) is glut at both outer worlds"),
        || "none".into(),
        || offender.map(|f| f.to_string()).unwrap_or_default(),
        || String::new(),
    );
    report
}

/// Conjunctive knowledge: distribution over `&` characterizes
/// partial-functional frames (the forward direction asserted, the converse
/// reported), is exact-truth-preserving everywhere, and the strict-successor
/// decomposition of `I` holds in both supports.
pub(super) fn remarks(cfg: &ExperimentConfig) -> ExperimentReport {
    let mut report = ExperimentReport::new(
        "remarks",
        format!("all frames <= {} worlds; {} random models", cfg.max_worlds, cfg.trials),
        cfg.seed,
    );
    let split = parse_sequent("[*](p & q) |- [*]p & [*]q").unwrap();
    let atoms = atom_list(&["p", "q"]);
    let mut pf_frames = 0u64;
    let mut pf_and_valid = 0u64;
    for frame in frames_up_to(cfg.max_worlds, false).unwrap() {
        let valid = valid_on_frame(&frame, &split, &atoms, cfg.model_cap).unwrap();
        let pf = frame.has(FrameClass::PartialFunctional);
        if pf {
            pf_frames += 1;
            if valid.is_valid() {
                pf_and_valid += 1;
            }
        }
        report.check(
            !valid.is_valid() || pf,
            || format!("validity of {split} implies partial-functionality ({:?})", frame.edges()),
            || "partial-functional".into(),
            || "valid on a non-partial-functional frame".into(),
            || String::new(),
        );
    }
    report.note(format!(
        "converse direction (reported, not asserted): {pf_and_valid}/{pf_frames} partial-functional frames validate the split"
    ));

    // A two-world fork refutes the split; the chain validates it.
    let fork = Frame::new(3, &[(0, 1), (0, 2)]);
    let v = valid_on_frame(&fork, &split, &atoms, cfg.model_cap).unwrap();
    let refuted_ok = match &v {
        Validity::Refuted(pm) => !holds_sequent_at(&pm.model, pm.world, &split).unwrap(),
        Validity::Valid => false,
    };
    report.check(
        refuted_ok,
        || "two-successor fork refutes the split with a verified witness".into(),
        || "refuted".into(),
        || "valid".into(),
        || String::new(),
    );
    let chain = Frame::new(2, &[(0, 1)]);
    report.check(
        valid_on_frame(&chain, &split, &atoms, cfg.model_cap).unwrap().is_valid(),
        || "partial-functional chain validates the split".into(),
        || "valid".into(),
        || "refuted".into(),
        || String::new(),
    );

    // Exact truth (true and non-false) of the two sides coincides on random
    // pointed models.
    let lhs = parse_formula("[*](p & q)").unwrap();
    let rhs = parse_formula("[*]p & [*]q").unwrap();
    let mut rng = rng_for(cfg, 0x05);
    for _ in 0..cfg.trials {
        let m = random_model(&mut rng, 4, &["p", "q"]);
        let w = rng.gen_range(0..m.world_count());
        let a = eval(&m, w, &lhs).unwrap();
        let b = eval(&m, w, &rhs).unwrap();
        let exact = |st: TruthState| st.sup_t && !st.sup_f;
        report.check(
            exact(a) == exact(b),
            || format!("exact truth of the split at w{w}"),
            || format!("{}", exact(a)),
            || format!("{}", exact(b)),
            || print_model(&m).replace('\n', "; "),
        );
    }

    // I decomposes as "true here, knowably false among the strict
    // successors": both supports agree with the strict-successor evaluation
    // mode.
    let ign = parse_formula("Ip").unwrap();
    let via_strict = parse_formula("p & [*]~p").unwrap();
    for _ in 0..cfg.trials {
        let m = random_model(&mut rng, 4, &["p"]);
        let w = rng.gen_range(0..m.world_count());
        let a = eval(&m, w, &ign).unwrap();
        let b = eval_strict_know(&m, w, &via_strict).unwrap();
        report.check(
            a == b,
            || format!("strict-successor decomposition of I at w{w}"),
            || format!("{a:?}"),
            || format!("{b:?}"),
            || print_model(&m).replace('\n', "; "),
        );
    }
    let single = fixtures::by_name("single-cluster").unwrap().model;
    report.check(
        eval(&single, 0, &ign).unwrap().value() == Value::T
            && eval_strict_know(&single, 0, &via_strict).unwrap().value() == Value::T,
        || "decomposition instance on the single cluster".into(),
        || "T and T".into(),
        || "unexpected".into(),
        || String::new(),
    );

    // Contraposition: sequents valid on a frame stay valid when both sides
    // are negated and swapped, frame by frame.
    let battery = formulas_up_to(Signature::KNOW_IGN, &["p"], 3);
    let frames: Vec<Frame> = frames_up_to(2.min(cfg.max_worlds), false).unwrap().collect();
    let mut rng = rng_for(cfg, 0x06);
    let atoms_p = atom_list(&["p"]);
    for _ in 0..300 {
        let lhs = &battery[rng.gen_range(0..battery.len())];
        let rhs = &battery[rng.gen_range(0..battery.len())];
        let seq = Sequent::new(lhs.clone(), rhs.clone());
        let contra = Sequent::new(rhs.clone().neg(), lhs.clone().neg());
        for frame in &frames {
            if valid_on_frame(frame, &seq, &atoms_p, cfg.model_cap).unwrap().is_valid() {
                let c = valid_on_frame(frame, &contra, &atoms_p, cfg.model_cap).unwrap();
                report.check(
                    c.is_valid(),
                    || format!("contraposition of {seq} on {:?}", frame.edges()),
                    || "valid".into(),
                    || "refuted".into(),
                    || c.witness().map(|pm| print_model(&pm.model).replace('\n', "; ")).unwrap_or_default(),
                );
            }
        }
    }
    report
}

/// Tableau and enumeration oracle never disagree over the bounded sequent
/// battery: a proof means no bounded countermodel exists, and a refutation
/// comes with a model-checked countermodel.
pub(super) fn agreement(cfg: &ExperimentConfig) -> ExperimentReport {
    let battery = formulas_up_to(Signature::KNOW_IGN, &["p", "q"], 4);
    let mut pairs: Vec<(usize, usize)> = (0..battery.len())
        .flat_map(|i| (0..battery.len()).map(move |j| (i, j)))
        .collect();
    let budget_desc = match cfg.agreement_sample {
        Some(n) => {
            let mut rng = rng_for(cfg, 0x07);
            let total = pairs.len();
            // Seeded partial shuffle, then truncate.
            for i in 0..n.min(total) {
                let j = rng.gen_range(i..total);
                pairs.swap(i, j);
            }
            pairs.truncate(n.min(total));
            format!("{n} sampled sequents from a battery of {total}, oracle <= {} worlds", cfg.max_worlds)
        }
        None => format!("all {} sequents, oracle <= {} worlds", pairs.len(), cfg.max_worlds),
    };
    let mut report = ExperimentReport::new("agreement", budget_desc, cfg.seed);

    let budget = EnumerationBudget {
        max_worlds: cfg.max_worlds,
        atoms: atom_list(&["p", "q"]),
        modulo_iso: true,
        model_cap: cfg.model_cap,
        ..EnumerationBudget::default()
    };
    let failures: Vec<Failure> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let seq = Sequent::new(battery[i].clone(), battery[j].clone());
            match prove(&seq) {
                Ok(Verdict::Proved(_)) => match find_countermodel(&seq, &budget) {
                    Ok(None) => None,
                    Ok(Some(cm)) => Some(Failure {
                        instance: seq.to_string(),
                        expected: "no countermodel after a proof".into(),
                        got: format!("countermodel with {} worlds", cm.model.world_count()),
                        witness: print_model(&cm.model).replace('\n', "; "),
                    }),
                    Err(e) => Some(Failure {
                        instance: seq.to_string(),
                        expected: "oracle search".into(),
                        got: e.to_string(),
                        witness: String::new(),
                    }),
                },
                Ok(Verdict::Refuted(r)) => {
                    let pm = &r.countermodel;
                    match holds_sequent_at(&pm.model, pm.world, &seq) {
                        Ok(false) => None,
                        Ok(true) => Some(Failure {
                            instance: seq.to_string(),
                            expected: "countermodel refutes the sequent".into(),
                            got: "countermodel satisfies it".into(),
                            witness: print_model(&pm.model).replace('\n', "; "),
                        }),
                        Err(e) => Some(Failure {
                            instance: seq.to_string(),
                            expected: "model check".into(),
                            got: e.to_string(),
                            witness: String::new(),
                        }),
                    }
                }
                Err(e) => Some(Failure {
                    instance: seq.to_string(),
                    expected: "a verdict".into(),
                    got: e.to_string(),
                    witness: String::new(),
                }),
            }
        })
        .collect();
    report.checks = pairs.len() as u64;
    report.failures = failures;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_cfg() -> ExperimentConfig {
        ExperimentConfig {
            max_worlds: 2,
            max_size: 4,
            trials: 200,
            formula_samples: 50,
            rule_samples: 5,
            agreement_sample: Some(150),
            seed: 7,
            model_cap: 1 << 32,
        }
    }

    #[test]
    fn experiments_at_reduced_budgets_behave_as_documented() {
        for name in super::super::EXPERIMENT_NAMES {
            let report = super::super::run_experiment(name, &quick_cfg()).unwrap();
            match *name {
                // The rule-lifting half of this experiment records genuine
                // counterexamples (each with a model-checked countermodel);
                // everything else in it must hold.
                "ignorance" => {
                    for f in &report.failures {
                        assert!(
                            f.instance.contains("lifts to"),
                            "unexpected ignorance failure: {}",
                            report.render()
                        );
                        assert!(
                            f.witness.contains("model-checked countermodel"),
                            "{}",
                            report.render()
                        );
                    }
                    assert!(!report.failures.is_empty(), "expected rule-lifting counterexamples");
                }
                // Full indistinguishability of the gap pair in the
                // []-fragment is asserted per the contract but is refuted by
                // []p; the pattern-faithful check passes.
                "separations" => {
                    assert_eq!(report.failures.len(), 1, "{}", report.render());
                    assert!(
                        report.failures[0].instance.contains("gap pair vs []-fragment"),
                        "{}",
                        report.render()
                    );
                    assert_eq!(report.failures[0].got, "separated by []p", "{}", report.render());
                }
                _ => assert!(report.passed(), "{name}:\n{}", report.render()),
            }
        }
    }

    #[test]
    fn the_canonical_rule_lifting_counterexample_is_semantic() {
        // The conjunction-weakening premise is valid, its lifting is not:
        // both engines agree, so this is a fact about the semantics, not an
        // engine artifact.
        let premise = parse_sequent("p & q |- p").unwrap();
        let conclusion = parse_sequent("(p & q) & Ip |- I(p & q)").unwrap();
        assert!(matches!(prove(&premise), Ok(Verdict::Proved(_))));
        let budget = EnumerationBudget::default();
        assert!(find_countermodel(&premise, &budget).unwrap().is_none());
        let cm = find_countermodel(&conclusion, &budget).unwrap().expect("countermodel");
        assert!(!holds_sequent_at(&cm.model, cm.world, &conclusion).unwrap());
        assert!(matches!(prove(&conclusion), Ok(Verdict::Refuted(_))));
    }

    #[test]
    fn reports_are_deterministic_for_a_seed() {
        let a = duality(&quick_cfg());
        let b = duality(&quick_cfg());
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.failures.len(), b.failures.len());
    }

    #[test]
    fn random_formula_respects_fragment_and_size() {
        let mut rng = rng_for(&quick_cfg(), 9);
        for _ in 0..200 {
            let f = random_formula(&mut rng, &["p", "q"], Signature::KNOW_IGN, 8);
            assert!(f.node_count() <= 8);
            assert!(f.in_fragment(Signature::KNOW_IGN));
        }
    }
}
