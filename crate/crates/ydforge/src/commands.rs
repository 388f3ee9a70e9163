//! Command dispatch. Every command turns a document into a [`CliReport`];
//! mathematical errors become failed findings, bad arguments become
//! [`CommandError`]s.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rayon::prelude::*;
use serde_json::json;
use ydforge_core::builtin::trivial_yd;
use ydforge_core::crossed::{
    check_alpha_beta_compatibility, check_conjugation, check_tensor_classes, crossed_braiding,
    twists_of, GradedYdModule, PHI_CONVENTION,
};
use ydforge_core::galois::{
    check_bigalois_coobject, check_bigalois_object, check_identity_lift, galois_braiding,
    lift_to_classical, lift_yd,
};
use ydforge_core::rep::{BicomoduleAlgebra, BimoduleCoalgebra, LeftModule};
use ydforge_core::yd::{
    braid_map, check_braid_coherence, check_braid_linearity, check_half_braid,
    coaction_to_halfbraid, tensor_yd, YdDatum, YdModule,
};
use ydforge_core::{Error, Report};

use crate::input::{InputDocument, Structures};
use crate::report::{Artifact, CliReport, FindingOut, Skipped};

pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Command {
    CheckHopf,
    CheckDatum,
    CheckYd,
    Tensor,
    Braid,
    Roundtrip,
    CheckGalois,
    Lift,
    Crossed,
    All,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::CheckHopf => "check-hopf",
            Command::CheckDatum => "check-datum",
            Command::CheckYd => "check-yd",
            Command::Tensor => "tensor",
            Command::Braid => "braid",
            Command::Roundtrip => "roundtrip",
            Command::CheckGalois => "check-galois",
            Command::Lift => "lift",
            Command::Crossed => "crossed",
            Command::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub name: Option<String>,
    pub with: Option<String>,
    /// Largest ambient dimension any single computation may use.
    pub max_dim: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            name: None,
            with: None,
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CommandError {
    #[error("no {kind} named {name:?}")]
    UnknownName { kind: &'static str, name: String },
    #[error("{0}")]
    InvalidArgument(String),
}

/// Findings, skips and artifacts produced by one unit of work.
#[derive(Default)]
struct Outcome {
    findings: Vec<FindingOut>,
    skipped: Vec<Skipped>,
    artifacts: Vec<Artifact>,
}

impl Outcome {
    fn report(&mut self, subject: &str, mut r: Report) {
        r.set_subject(subject);
        self.findings
            .extend(r.findings.iter().map(FindingOut::from));
    }

    fn fail(&mut self, subject: &str, check: &str, anchor: &str, e: &Error) {
        let mut r = Report::new();
        if let Error::Verification { report, .. } = e {
            if !report.is_ok() {
                r.merge_prefixed(check, (**report).clone());
                return self.report(subject, r);
            }
        }
        r.check_true(check, anchor, false, Some(e.to_string()));
        self.report(subject, r);
    }

    fn skip(&mut self, subject: &str, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            subject: subject.to_string(),
            reason: reason.into(),
        });
    }

    fn absorb(&mut self, other: Outcome) {
        self.findings.extend(other.findings);
        self.skipped.extend(other.skipped);
        self.artifacts.extend(other.artifacts);
    }
}

type Job<'a> = Box<dyn Fn() -> Outcome + Send + Sync + 'a>;

/// Runs jobs on the current rayon pool. A panic inside a job is recorded as
/// a failed finding rather than aborting the whole command.
fn run_jobs(jobs: Vec<(String, Job<'_>)>) -> Outcome {
    let parts: Vec<Outcome> = jobs
        .par_iter()
        .map(|(subject, job)| match catch_unwind(AssertUnwindSafe(job)) {
            Ok(o) => o,
            Err(p) => {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "unknown panic".into());
                let mut o = Outcome::default();
                let mut r = Report::new();
                r.check_true(
                    "internal error",
                    "the computation completes",
                    false,
                    Some(msg),
                );
                o.report(subject, r);
                o
            }
        })
        .collect();
    let mut out = Outcome::default();
    for p in parts {
        out.absorb(p);
    }
    out
}

fn subject(section: &str, name: &str) -> String {
    format!("{section}/{name}")
}

/// A structure of the document, for prerequisite tracking.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Algebra(String),
    Hopf(String),
    Automorphism(String),
    Bicomodule(String),
    Bimodule(String),
    Module(String),
    HalfBraid(String),
}

impl Key {
    fn subject(&self) -> String {
        match self {
            Key::Algebra(n) => subject("algebras", n),
            Key::Hopf(n) => subject("hopf_algebras", n),
            Key::Automorphism(n) => subject("automorphisms", n),
            Key::Bicomodule(n) => subject("bicomodule_algebras", n),
            Key::Bimodule(n) => subject("bimodule_coalgebras", n),
            Key::Module(n) => subject("yd_modules", n),
            Key::HalfBraid(n) => subject("half_braids", n),
        }
    }
}

struct Ctx<'a> {
    doc: &'a InputDocument,
    s: Structures,
    opts: &'a Options,
    /// Axiom reports of every structure, keyed by structure.
    base: BTreeMap<Key, Report>,
}

impl<'a> Ctx<'a> {
    fn new(doc: &'a InputDocument, opts: &'a Options) -> Self {
        let s = doc.build();
        let mut ctx = Ctx {
            doc,
            s,
            opts,
            base: BTreeMap::new(),
        };
        let keys = ctx.all_keys();
        let reports: Vec<(Key, Report)> = keys
            .into_par_iter()
            .map(|k| {
                let r =
                    catch_unwind(AssertUnwindSafe(|| ctx.base_report(&k))).unwrap_or_else(|_| {
                        let mut r = Report::new();
                        r.check_true("internal error", "the computation completes", false, None);
                        r
                    });
                (k, r)
            })
            .collect();
        ctx.base = reports.into_iter().collect();
        ctx
    }

    fn all_keys(&self) -> Vec<Key> {
        let d = self.doc;
        let mut keys = Vec::new();
        keys.extend(d.algebras.keys().cloned().map(Key::Algebra));
        keys.extend(d.hopf_algebras.keys().cloned().map(Key::Hopf));
        keys.extend(d.automorphisms.keys().cloned().map(Key::Automorphism));
        keys.extend(d.bicomodule_algebras.keys().cloned().map(Key::Bicomodule));
        keys.extend(d.bimodule_coalgebras.keys().cloned().map(Key::Bimodule));
        keys.extend(d.yd_modules.keys().cloned().map(Key::Module));
        keys.extend(d.half_braids.keys().cloned().map(Key::HalfBraid));
        keys
    }

    fn base_report(&self, key: &Key) -> Report {
        match key {
            Key::Algebra(n) => self.s.algebras[n].check(),
            Key::Hopf(n) => self.hopf_report(n),
            Key::Automorphism(n) => {
                let def = &self.doc.automorphisms[n];
                self.s.hopf[&def.hopf].check_automorphism(&def.matrix)
            }
            Key::Bicomodule(n) => self.s.bicomodule_algebras[n].check(),
            Key::Bimodule(n) => self.s.bimodule_coalgebras[n].check(),
            Key::Module(n) => module_report(&self.s.yd_modules[n]),
            Key::HalfBraid(n) => match check_half_braid(&self.s.half_braids[n]) {
                Ok((r, _)) => r,
                Err(e) => {
                    let mut r = Report::new();
                    r.check_true(
                        "half-braid",
                        "β_H: H ⊗ M -> M ⊗ C",
                        false,
                        Some(e.to_string()),
                    );
                    r
                }
            },
        }
    }

    /// Bialgebra axioms, the antipode laws for the stored antipode (or the
    /// computed one) and invertibility of the antipode.
    fn hopf_report(&self, name: &str) -> Report {
        let b = &self.s.hopf[name];
        let n = b.dim();
        let mut r = b.check();
        match (&self.doc.hopf_algebras[name].antipode, b.s()) {
            (Some(stored), computed) => {
                r.merge(b.check_antipode(stored));
                if let Some(c) = computed {
                    r.check_maps(
                        "stored antipode is the computed one",
                        "S is the convolution inverse of id",
                        stored,
                        c,
                        &[n],
                    );
                }
            }
            (None, Some(c)) => r.merge(b.check_antipode(c)),
            (None, None) => {
                r.check_true(
                    "antipode exists",
                    "S(h₁)h₂ = ε(h)1 = h₁S(h₂) is solvable",
                    false,
                    None,
                );
            }
        }
        r.check_true(
            "antipode invertible",
            "S is bijective",
            b.s_inv().is_some(),
            None,
        );
        r
    }

    /// The structure itself and everything it is built on.
    fn prerequisites(&self, key: &Key) -> Vec<Key> {
        let d = self.doc;
        let mut out = vec![key.clone()];
        match key {
            Key::Algebra(_) | Key::Hopf(_) => {}
            Key::Automorphism(n) => out.push(Key::Hopf(d.automorphisms[n].hopf.clone())),
            Key::Bicomodule(n) => {
                let a = &d.bicomodule_algebras[n];
                out.extend([Key::Hopf(a.h.clone()), Key::Hopf(a.k.clone())]);
            }
            Key::Bimodule(n) => {
                let c = &d.bimodule_coalgebras[n];
                out.extend([Key::Hopf(c.k.clone()), Key::Hopf(c.h.clone())]);
            }
            Key::Module(n) => out.extend(self.datum_prerequisites(&d.yd_modules[n].datum)),
            Key::HalfBraid(n) => out.extend(self.datum_prerequisites(&d.half_braids[n].datum)),
        }
        out.sort();
        out.dedup();
        out
    }

    fn datum_prerequisites(&self, datum: &str) -> Vec<Key> {
        let dd = &self.doc.yd_data[datum];
        let mut out = self.prerequisites(&Key::Bicomodule(dd.algebra.clone()));
        out.extend(self.prerequisites(&Key::Bimodule(dd.coalgebra.clone())));
        out
    }

    fn sound(&self, key: &Key) -> bool {
        self.prerequisites(key).iter().all(|k| self.base[k].is_ok())
    }

    /// Runs `job` only if every prerequisite passes its axioms. Otherwise the
    /// job is skipped and, unless `quiet`, the failing prerequisite findings
    /// are reported in its place.
    fn gated(
        &self,
        subject: &str,
        keys: &[Key],
        quiet: bool,
        job: impl FnOnce() -> Outcome,
    ) -> Outcome {
        let mut bad: BTreeSet<Key> = BTreeSet::new();
        for k in keys {
            bad.extend(
                self.prerequisites(k)
                    .into_iter()
                    .filter(|p| !self.base[p].is_ok()),
            );
        }
        if bad.is_empty() {
            return job();
        }
        let mut o = Outcome::default();
        let names: Vec<String> = bad.iter().map(Key::subject).collect();
        o.skip(
            subject,
            format!(
                "depends on structures failing their axioms: {}",
                names.join(", ")
            ),
        );
        if !quiet {
            for k in &bad {
                let mut r = Report::new();
                r.findings.extend(self.base[k].failures().cloned());
                o.report(&k.subject(), r);
            }
        }
        o
    }

    fn cap(&self, o: &mut Outcome, subject: &str, what: &str, ambient: usize) -> bool {
        if ambient > self.opts.max_dim {
            o.skip(
                subject,
                format!(
                    "{what}: ambient dimension {ambient} exceeds YDFORGE_MAX_DIM={}",
                    self.opts.max_dim
                ),
            );
            return false;
        }
        true
    }

    fn require<'n>(
        &self,
        kind: &'static str,
        name: &'n str,
        exists: bool,
    ) -> Result<&'n str, CommandError> {
        if exists {
            Ok(name)
        } else {
            Err(CommandError::UnknownName {
                kind,
                name: name.to_string(),
            })
        }
    }
}

/// Module, comodule and compatibility axioms in both forms, and for
/// twisted data the `(α, β)` specialization.
fn module_report(m: &YdModule) -> Report {
    let mut r = m.check();
    let defining = r
        .findings
        .iter()
        .filter(|f| f.check == "YD compatibility")
        .all(|f| f.ok);
    if let Some(inv) = m.check_compatibility_inverse_form() {
        let agree = inv.is_ok() == defining;
        r.merge(inv);
        r.check_true(
            "compatibility forms agree",
            "the defining and S⁻¹ forms give the same verdict",
            agree,
            None,
        );
    }
    if twists_of(&m.datum).is_some() {
        if let Some(t) = check_alpha_beta_compatibility(m) {
            r.merge_prefixed("(α, β)", t);
        }
    }
    r
}

/// Runs `command` on a parsed document.
pub fn run_command(
    doc: &InputDocument,
    command: Command,
    opts: &Options,
) -> Result<CliReport, CommandError> {
    let ctx = Ctx::new(doc, opts);
    let out = match command {
        Command::CheckHopf => base_section(&ctx, select_hopf(&ctx)?),
        Command::CheckDatum => base_section(&ctx, select_datum(&ctx)?),
        Command::CheckYd => base_section(&ctx, select_yd(&ctx)?),
        Command::Tensor => run_jobs(tensor_jobs(&ctx, false)?),
        Command::Braid => run_jobs(braid_jobs(&ctx, false)?),
        Command::Roundtrip => run_jobs(roundtrip_jobs(&ctx, false)?),
        Command::CheckGalois => run_jobs(galois_jobs(&ctx, false)?),
        Command::Lift => run_jobs(lift_jobs(&ctx, false)?),
        Command::Crossed => run_jobs(crossed_jobs(&ctx, false)?),
        Command::All => {
            if opts.name.is_some() || opts.with.is_some() {
                return Err(CommandError::InvalidArgument(
                    "`all` takes no --name or --with".into(),
                ));
            }
            let mut out = base_section(&ctx, ctx.all_keys());
            let mut jobs = tensor_jobs(&ctx, true)?;
            jobs.extend(braid_jobs(&ctx, true)?);
            jobs.extend(roundtrip_jobs(&ctx, true)?);
            jobs.extend(galois_jobs(&ctx, true)?);
            jobs.extend(lift_jobs(&ctx, true)?);
            jobs.extend(crossed_jobs(&ctx, true)?);
            out.absorb(run_jobs(jobs));
            out
        }
    };
    Ok(CliReport::new(
        command.as_str(),
        out.findings,
        out.skipped,
        out.artifacts,
    ))
}

/// The axiom findings of every structure in the document, which `all`
/// reports alongside its composite checks.
pub fn axiom_report(doc: &InputDocument, opts: &Options) -> CliReport {
    let ctx = Ctx::new(doc, opts);
    let out = base_section(&ctx, ctx.all_keys());
    CliReport::new(
        Command::All.as_str(),
        out.findings,
        out.skipped,
        out.artifacts,
    )
}

fn base_section(ctx: &Ctx, keys: Vec<Key>) -> Outcome {
    let mut o = Outcome::default();
    for k in keys {
        o.report(&k.subject(), ctx.base[&k].clone());
    }
    o
}

fn select_hopf(ctx: &Ctx) -> Result<Vec<Key>, CommandError> {
    let d = ctx.doc;
    match &ctx.opts.name {
        None => Ok(ctx
            .all_keys()
            .into_iter()
            .filter(|k| matches!(k, Key::Algebra(_) | Key::Hopf(_) | Key::Automorphism(_)))
            .collect()),
        Some(n) if d.hopf_algebras.contains_key(n) => Ok(vec![Key::Hopf(n.clone())]),
        Some(n) if d.algebras.contains_key(n) => Ok(vec![Key::Algebra(n.clone())]),
        Some(n) if d.automorphisms.contains_key(n) => Ok(vec![Key::Automorphism(n.clone())]),
        Some(n) => Err(CommandError::UnknownName {
            kind: "Hopf algebra, algebra or automorphism",
            name: n.clone(),
        }),
    }
}

fn select_datum(ctx: &Ctx) -> Result<Vec<Key>, CommandError> {
    let d = ctx.doc;
    match &ctx.opts.name {
        None => Ok(ctx
            .all_keys()
            .into_iter()
            .filter(|k| matches!(k, Key::Bicomodule(_) | Key::Bimodule(_)))
            .collect()),
        Some(n) if d.yd_data.contains_key(n) => {
            let dd = &d.yd_data[n];
            Ok(vec![
                Key::Bicomodule(dd.algebra.clone()),
                Key::Bimodule(dd.coalgebra.clone()),
            ])
        }
        Some(n) if d.bicomodule_algebras.contains_key(n) => Ok(vec![Key::Bicomodule(n.clone())]),
        Some(n) if d.bimodule_coalgebras.contains_key(n) => Ok(vec![Key::Bimodule(n.clone())]),
        Some(n) => Err(CommandError::UnknownName {
            kind: "YD datum, bicomodule algebra or bimodule coalgebra",
            name: n.clone(),
        }),
    }
}

fn select_yd(ctx: &Ctx) -> Result<Vec<Key>, CommandError> {
    let d = ctx.doc;
    match &ctx.opts.name {
        None => Ok(ctx
            .all_keys()
            .into_iter()
            .filter(|k| matches!(k, Key::Module(_) | Key::HalfBraid(_)))
            .collect()),
        Some(n) if d.yd_modules.contains_key(n) => Ok(vec![Key::Module(n.clone())]),
        Some(n) if d.half_braids.contains_key(n) => Ok(vec![Key::HalfBraid(n.clone())]),
        Some(n) => Err(CommandError::UnknownName {
            kind: "YD module or half-braid",
            name: n.clone(),
        }),
    }
}

/// Module names selected by `--name` (all modules if absent).
fn selected_modules(ctx: &Ctx, name: Option<&String>) -> Result<Vec<String>, CommandError> {
    match name {
        None => Ok(ctx.doc.yd_modules.keys().cloned().collect()),
        Some(n) => Ok(vec![ctx
            .require("YD module", n, ctx.doc.yd_modules.contains_key(n))?
            .to_string()]),
    }
}

fn tensor_jobs<'c>(ctx: &'c Ctx, quiet: bool) -> Result<Vec<(String, Job<'c>)>, CommandError> {
    let firsts = selected_modules(ctx, ctx.opts.name.as_ref())?;
    let seconds = selected_modules(ctx, ctx.opts.with.as_ref())?;
    let explicit = ctx.opts.name.is_some() && ctx.opts.with.is_some();
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for a in &firsts {
        for b in &seconds {
            let (m, n) = (&ctx.s.yd_modules[a], &ctx.s.yd_modules[b]);
            if !explicit && m.datum.k() != n.datum.h() {
                continue;
            }
            let subj = format!("yd_modules/{a} ⊗ {b}");
            let keys = [Key::Module(a.clone()), Key::Module(b.clone())];
            let s2 = subj.clone();
            jobs.push((
                subj,
                Box::new(move || ctx.gated(&s2, &keys, quiet, || tensor_job(ctx, &s2, m, n))),
            ));
        }
    }
    Ok(jobs)
}

fn tensor_job(ctx: &Ctx, subj: &str, m: &YdModule, n: &YdModule) -> Outcome {
    let mut o = Outcome::default();
    let (dc, dd, kd) = (m.datum.c.dim(), n.datum.c.dim(), m.datum.k().dim());
    let ambient = (m.dim() * n.dim() * dc * dd).max(dd * kd * dc);
    if !ctx.cap(&mut o, subj, "tensor product", ambient) {
        return o;
    }
    match tensor_yd(m, n) {
        Ok(t) => {
            o.report(subj, t.module.check());
            o.artifacts.push(Artifact {
                subject: subj.to_string(),
                name: "dimensions".into(),
                value: json!({
                    "module": t.module.dim(),
                    "algebra": t.composed.datum.a.dim(),
                    "coalgebra": t.composed.datum.c.dim(),
                }),
            });
        }
        Err(e) => o.fail(subj, "tensor product", "M ⊗ N over the composite datum", &e),
    }
    o
}

enum With {
    Regular,
    Module(String),
}

fn braid_jobs<'c>(ctx: &'c Ctx, quiet: bool) -> Result<Vec<(String, Job<'c>)>, CommandError> {
    let with = match ctx.opts.with.as_deref() {
        None | Some("regular") => With::Regular,
        Some(n) => With::Module(
            ctx.require("YD module", n, ctx.doc.yd_modules.contains_key(n))?
                .to_string(),
        ),
    };
    let with = std::sync::Arc::new(with);
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for a in selected_modules(ctx, ctx.opts.name.as_ref())? {
        let label = match &*with {
            With::Regular => "regular".to_string(),
            With::Module(n) => n.clone(),
        };
        let subj = format!("yd_modules/{a} braided with {label}");
        let mut keys = vec![Key::Module(a.clone())];
        if let With::Module(n) = &*with {
            keys.push(Key::Module(n.clone()));
        }
        let (s2, w) = (subj.clone(), with.clone());
        jobs.push((
            subj,
            Box::new(move || {
                ctx.gated(&s2, &keys, quiet, || {
                    braid_job(ctx, &s2, &ctx.s.yd_modules[&a], &w)
                })
            }),
        ));
    }
    Ok(jobs)
}

fn braid_job(ctx: &Ctx, subj: &str, m: &YdModule, with: &With) -> Outcome {
    let mut o = Outcome::default();
    let h = m.datum.h();
    let v = match with {
        With::Regular => LeftModule::regular(&h.algebra),
        With::Module(n) => {
            let nm = &ctx.s.yd_modules[n];
            if nm.datum.a.algebra != h.algebra {
                let mut r = Report::new();
                r.check_true(
                    "braiding partner",
                    "V is a left H-module",
                    false,
                    Some(format!("{n} is not a module over H")),
                );
                o.report(subj, r);
                return o;
            }
            nm.module()
        }
    };
    let (dm, dc, dv, hd) = (m.dim(), m.datum.c.dim(), v.dim(), h.dim());
    if !ctx.cap(&mut o, subj, "braiding", dm * dc * dv.max(hd)) {
        return o;
    }
    let b = match braid_map(m, &v) {
        Ok(b) => b,
        Err(e) => {
            o.fail(subj, "braiding", "β_{V,M}: V ⊗ M -> M ⊗ (C ⊗_H V)", &e);
            return o;
        }
    };
    o.report(subj, check_braid_linearity(m, &v, &b));
    o.artifacts.push(Artifact::matrix(subj, "braid", &b.map));
    if let With::Regular = with {
        match coaction_to_halfbraid(m) {
            Ok(hb) => o.artifacts.push(Artifact::matrix(
                subj,
                "half_braid_component",
                &hb.component,
            )),
            Err(e) => o.fail(subj, "half-braid component", "β_H(h ⊗ m) = m₀ ⊗ m₁ ◁ h", &e),
        }
    }
    let k = m.datum.k();
    let n = trivial_yd(k);
    let u = LeftModule::trivial(h);
    let kd = k.dim();
    let ambient = (dc * dv * hd).max(dm * dc * kd).max(kd * kd * dc * dv);
    if ctx.cap(&mut o, subj, "braiding coherence", ambient) {
        match check_braid_coherence(m, &n, &u, &v) {
            Ok(r) => o.report(subj, r),
            Err(e) => o.fail(
                subj,
                "braiding coherence",
                "β is compatible with ⊗ and the unit",
                &e,
            ),
        }
    }
    o
}

fn roundtrip_jobs<'c>(ctx: &'c Ctx, quiet: bool) -> Result<Vec<(String, Job<'c>)>, CommandError> {
    let d = ctx.doc;
    let (modules, braids): (Vec<String>, Vec<String>) = match &ctx.opts.name {
        None => (
            d.yd_modules.keys().cloned().collect(),
            d.half_braids.keys().cloned().collect(),
        ),
        Some(n) if d.yd_modules.contains_key(n) => (vec![n.clone()], vec![]),
        Some(n) if d.half_braids.contains_key(n) => (vec![], vec![n.clone()]),
        Some(n) => {
            return Err(CommandError::UnknownName {
                kind: "YD module or half-braid",
                name: n.clone(),
            })
        }
    };
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for a in modules {
        let subj = format!("yd_modules/{a} round trip");
        let s2 = subj.clone();
        let keys = [Key::Module(a.clone())];
        jobs.push((
            subj,
            Box::new(move || {
                ctx.gated(&s2, &keys, quiet, || {
                    let m = &ctx.s.yd_modules[&a];
                    let mut o = Outcome::default();
                    let hd = m.datum.h().dim();
                    if !ctx.cap(&mut o, &s2, "half-braid", m.dim() * m.datum.c.dim() * hd) {
                        return o;
                    }
                    match coaction_to_halfbraid(m).and_then(|hb| check_half_braid(&hb)) {
                        Ok((r, back)) => {
                            o.report(&s2, r);
                            let mut r = Report::new();
                            r.check_true(
                                "round trip",
                                "coaction → half-braid → coaction is the identity",
                                back == *m,
                                None,
                            );
                            o.report(&s2, r);
                        }
                        Err(e) => o.fail(&s2, "half-braid", "β_H(h ⊗ m) = m₀ ⊗ m₁ ◁ h", &e),
                    }
                    o
                })
            }),
        ));
    }
    for a in braids {
        let subj = format!("half_braids/{a} round trip");
        let s2 = subj.clone();
        let keys = [Key::HalfBraid(a.clone())];
        jobs.push((
            subj,
            Box::new(move || {
                ctx.gated(&s2, &keys, quiet, || {
                    let hb = &ctx.s.half_braids[&a];
                    let mut o = Outcome::default();
                    let back = check_half_braid(hb).and_then(|(_, m)| coaction_to_halfbraid(&m));
                    match back {
                        Ok(back) => {
                            let mut r = Report::new();
                            r.check_true(
                                "round trip",
                                "half-braid → coaction → half-braid is the identity",
                                back.component == hb.component,
                                None,
                            );
                            o.report(&s2, r);
                        }
                        Err(e) => {
                            o.fail(&s2, "round trip", "half-braid → coaction → half-braid", &e)
                        }
                    }
                    o
                })
            }),
        ));
    }
    Ok(jobs)
}

/// Modules over `(H, H, H, H)` for the Hopf algebra `h`.
fn classical_modules<'s>(
    ctx: &'s Ctx,
    h: &std::sync::Arc<ydforge_core::hopf::Bialgebra>,
) -> Vec<(&'s String, &'s YdModule)> {
    let regular = YdDatum::regular(h.clone());
    ctx.s
        .yd_modules
        .iter()
        .filter(|(_, m)| *m.datum == regular)
        .collect()
}

fn galois_jobs<'c>(ctx: &'c Ctx, quiet: bool) -> Result<Vec<(String, Job<'c>)>, CommandError> {
    let d = ctx.doc;
    let (coalgebras, algebras): (Vec<String>, Vec<String>) = match &ctx.opts.name {
        None => (
            d.bimodule_coalgebras.keys().cloned().collect(),
            d.bicomodule_algebras.keys().cloned().collect(),
        ),
        Some(n) if d.bimodule_coalgebras.contains_key(n) => (vec![n.clone()], vec![]),
        Some(n) if d.bicomodule_algebras.contains_key(n) => (vec![], vec![n.clone()]),
        Some(n) => {
            return Err(CommandError::UnknownName {
                kind: "bimodule coalgebra or bicomodule algebra",
                name: n.clone(),
            })
        }
    };
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for name in coalgebras {
        let subj = subject("bimodule_coalgebras", &name) + " galois";
        let s2 = subj.clone();
        let keys = [Key::Bimodule(name.clone())];
        jobs.push((
            subj,
            Box::new(move || {
                ctx.gated(&s2, &keys, quiet, || {
                    coobject_job(ctx, &s2, &ctx.s.bimodule_coalgebras[&name], quiet)
                })
            }),
        ));
    }
    for name in algebras {
        let subj = subject("bicomodule_algebras", &name) + " galois";
        let s2 = subj.clone();
        let keys = [Key::Bicomodule(name.clone())];
        jobs.push((
            subj,
            Box::new(move || {
                ctx.gated(&s2, &keys, quiet, || {
                    let mut o = Outcome::default();
                    let a = &ctx.s.bicomodule_algebras[&name];
                    let (r, cert) = check_bigalois_object(a);
                    if cert.is_none() && quiet {
                        o.skip(&s2, not_galois_reason(&r));
                    } else {
                        o.report(&s2, r);
                    }
                    o
                })
            }),
        ));
    }
    Ok(jobs)
}

fn not_galois_reason(r: &Report) -> String {
    let f = r.first_failure();
    f.and_then(|f| f.note.clone())
        .or_else(|| f.map(|f| f.check.clone()))
        .unwrap_or_else(|| "not Galois".into())
}

fn coobject_job(ctx: &Ctx, subj: &str, c: &BimoduleCoalgebra, quiet: bool) -> Outcome {
    let mut o = Outcome::default();
    let (n, hd, kd) = (c.dim(), c.h.dim(), c.k.dim());
    if !ctx.cap(&mut o, subj, "canonical maps", n * n * hd.max(kd)) {
        return o;
    }
    let (r, cert) = check_bigalois_coobject(c);
    let Some(cert) = cert else {
        if quiet {
            o.skip(subj, not_galois_reason(&r));
        } else {
            o.report(subj, r);
        }
        return o;
    };
    o.report(subj, r);
    o.report(subj, cert.check_identities());
    match cert.inverse_coobject() {
        Ok(inv) => {
            let mut r = Report::new();
            r.merge_prefixed("C̄", inv.cbar.check());
            o.report(subj, r);
        }
        Err(e) => o.fail(subj, "inverse co-object", "C̄ is a bimodule coalgebra", &e),
    }
    let sigma = match cert.sigma_map() {
        Ok(s) => {
            o.report(subj, cert.check_sigma(&s));
            Some(s.matrix)
        }
        Err(e) => {
            o.fail(subj, "σ̄", "σ̄(c) = S⁻¹(u₁ ∧ c) ▶ u₂", &e);
            None
        }
    };
    let u: Vec<String> = cert.u.column(0).iter().map(ToString::to_string).collect();
    let sigma: Option<Vec<Vec<String>>> = sigma.map(|s| {
        (0..s.rows())
            .map(|i| s.row(i).iter().map(ToString::to_string).collect())
            .collect()
    });
    o.artifacts.push(Artifact {
        subject: subj.to_string(),
        name: "certificate".into(),
        value: json!({ "dim": n, "galois": true, "u": u, "sigma_bar": sigma }),
    });

    for (mname, m) in ctx.s.yd_modules.iter().filter(|(_, m)| m.datum.c == *c) {
        for (vname, v) in classical_modules(ctx, &c.h) {
            let bs = format!("{subj}: braiding {mname} with {vname}");
            if !ctx.sound(&Key::Module(mname.clone())) || !ctx.sound(&Key::Module(vname.clone())) {
                o.skip(&bs, "depends on a module failing its axioms");
                continue;
            }
            if !ctx.cap(&mut o, &bs, "galois braiding", m.dim() * n * v.dim()) {
                continue;
            }
            match galois_braiding(&cert, m, v) {
                Ok(gb) => o.report(&bs, gb.report),
                Err(e) => o.fail(&bs, "galois braiding", "β and its inverse", &e),
            }
        }
    }
    o
}

fn lift_jobs<'c>(ctx: &'c Ctx, quiet: bool) -> Result<Vec<(String, Job<'c>)>, CommandError> {
    let d = ctx.doc;
    let coalgebras: Vec<String> = match &ctx.opts.name {
        None => d.bimodule_coalgebras.keys().cloned().collect(),
        Some(n) => vec![ctx
            .require(
                "bimodule coalgebra",
                n,
                d.bimodule_coalgebras.contains_key(n),
            )?
            .to_string()],
    };
    let modules = selected_modules(ctx, ctx.opts.with.as_ref())?;
    let explicit = ctx.opts.name.is_some() && ctx.opts.with.is_some();
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for cname in &coalgebras {
        let c = &ctx.s.bimodule_coalgebras[cname];
        for vname in &modules {
            let v = &ctx.s.yd_modules[vname];
            let applicable = v.datum.h() == &c.h
                && v.datum.k() == &c.h
                && v.datum.a == BicomoduleAlgebra::regular(c.h.clone());
            if !applicable && !explicit {
                continue;
            }
            let subj = format!("lift {vname} along {cname}");
            let s2 = subj.clone();
            let keys = [Key::Bimodule(cname.clone()), Key::Module(vname.clone())];
            jobs.push((
                subj,
                Box::new(move || ctx.gated(&s2, &keys, quiet, || lift_job(ctx, &s2, c, v, quiet))),
            ));
        }
    }
    Ok(jobs)
}

fn lift_job(ctx: &Ctx, subj: &str, c: &BimoduleCoalgebra, v: &YdModule, quiet: bool) -> Outcome {
    let mut o = Outcome::default();
    let (n, hd, dd, dv) = (c.dim(), c.h.dim(), v.datum.c.dim(), v.dim());
    if !ctx.cap(&mut o, subj, "lift", (n * dd * n * hd).max(n * dv * hd)) {
        return o;
    }
    let (r, cert) = check_bigalois_coobject(c);
    let Some(cert) = cert else {
        if quiet {
            o.skip(subj, not_galois_reason(&r));
        } else {
            o.report(subj, r);
        }
        return o;
    };
    let d = &v.datum.c;
    let lift = match lift_yd(&cert, d, v) {
        Ok(l) => l,
        Err(e) => {
            o.fail(subj, "lift", "C ⊗_H V over (K, K, K, C ⊗_H D ⊗_H C̄)", &e);
            return o;
        }
    };
    let mut r = Report::new();
    r.merge_prefixed("lifted module", lift.module.check());
    o.report(subj, r);
    o.artifacts.push(Artifact {
        subject: subj.to_string(),
        name: "dimensions".into(),
        value: json!({ "module": lift.module.dim(), "coalgebra": lift.coalgebra.dim() }),
    });
    if *d == BimoduleCoalgebra::regular(c.h.clone()) {
        match lift_to_classical(&cert, &lift) {
            Ok((_, classical, r)) => {
                o.report(subj, r);
                let mut r = Report::new();
                r.merge_prefixed("classical YD module over K", classical.check());
                o.report(subj, r);
            }
            Err(e) => o.fail(subj, "transport to K", "x ⊗ h ⊗ y ↦ (x ◁ h) ∨ y", &e),
        }
    }
    if c.h == c.k && *c == BimoduleCoalgebra::regular(c.h.clone()) {
        o.report(subj, check_identity_lift(&cert, d, v, &lift));
    }
    o
}

fn crossed_jobs<'c>(ctx: &'c Ctx, quiet: bool) -> Result<Vec<(String, Job<'c>)>, CommandError> {
    let firsts = selected_modules(ctx, ctx.opts.name.as_ref())?;
    let seconds = selected_modules(ctx, ctx.opts.with.as_ref())?;
    let graded = |name: &String| twists_of(&ctx.s.yd_modules[name].datum).is_some();
    let mut jobs: Vec<(String, Job)> = Vec::new();
    let hopf_of = |name: &String| {
        ctx.doc.bicomodule_algebras[&ctx.doc.yd_data[&ctx.doc.yd_modules[name].datum].algebra]
            .h
            .clone()
    };
    let mut groups: BTreeSet<String> = BTreeSet::new();
    for a in firsts.iter().filter(|a| graded(a)) {
        groups.insert(hopf_of(a));
        for b in seconds
            .iter()
            .filter(|b| graded(b) && hopf_of(b) == hopf_of(a))
        {
            let subj = format!("crossed {a} ⊗ {b}");
            let s2 = subj.clone();
            let keys = [Key::Module(a.clone()), Key::Module(b.clone())];
            let (a, b) = (a.clone(), b.clone());
            jobs.push((
                subj,
                Box::new(move || ctx.gated(&s2, &keys, quiet, || crossed_pair(ctx, &s2, &a, &b))),
            ));
        }
    }
    for h in groups {
        let subj = subject("hopf_algebras", &h) + " crossed";
        jobs.push((
            subj.clone(),
            Box::new(move || {
                let mut o = Outcome::default();
                let mut r = Report::new();
                r.check_true(
                    "φ convention",
                    "composition order of φ",
                    true,
                    Some(PHI_CONVENTION.into()),
                );
                o.report(&subj, r);
                o
            }),
        ));
    }
    if jobs.is_empty() && (ctx.opts.name.is_some() || ctx.opts.with.is_some()) {
        return Err(CommandError::InvalidArgument(
            "the selected modules are not over twisted data (H, H, ^αH^β, _γH_δ)".into(),
        ));
    }
    Ok(jobs)
}

fn crossed_pair(ctx: &Ctx, subj: &str, a: &str, b: &str) -> Outcome {
    let mut o = Outcome::default();
    let (m, n) = (&ctx.s.yd_modules[a], &ctx.s.yd_modules[b]);
    let dc = m.datum.c.dim();
    if !ctx.cap(
        &mut o,
        subj,
        "crossed structure",
        m.dim() * n.dim() * dc * dc,
    ) {
        return o;
    }
    let (x, y) = match (
        GradedYdModule::new(m.clone()),
        GradedYdModule::new(n.clone()),
    ) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            o.fail(subj, "grading", "∂ from the twists of the datum", &e);
            return o;
        }
    };
    let mut r = Report::new();
    r.merge_prefixed("graded", x.check());
    o.report(subj, r);
    match check_tensor_classes(&x, &y) {
        Ok(r) => o.report(subj, r),
        Err(e) => o.fail(subj, "tensor classes", "∂(M ⊗ N) = ∂M ∂N", &e),
    }
    o.report(subj, check_conjugation(&x, &y));
    match crossed_braiding(&x, &y) {
        Ok(cb) => o.report(subj, cb.report),
        Err(e) => o.skip(subj, format!("crossed braiding not applicable: {e}")),
    }
    o
}
