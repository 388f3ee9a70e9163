//! One line per acceptance criterion. All comparisons are exact: the
//! tolerance is zero throughout.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command as Process;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use ydforge::export::builtin_fixtures;
use ydforge::{axiom_report, parse_input, run_command, CliReport, Command, Options, Verdict};
use ydforge_core::builtin::{
    self, classical_yd_examples, coregular_yd, cyclic_group, group_algebra, hopf_catalog,
    yd_catalog,
};
use ydforge_core::crossed::{
    alpha_beta_datum, check_conjugation, check_tensor_classes, crossed_braiding, phi_action,
    ClassKind, GradedClass, GradedYdModule, Twists,
};
use ydforge_core::galois::{
    check_bigalois_coobject, check_identity_lift, galois_braiding, lift_to_classical, lift_yd,
};
use ydforge_core::hopf::{Algebra, Bialgebra, Coalgebra, HopfAlgebra};
use ydforge_core::rep::{BimoduleCoalgebra, LeftModule};
use ydforge_core::yd::{
    braid_map, check_braid_coherence, check_half_braid, coaction_to_halfbraid,
    halfbraid_to_coaction, regular_balanced_iso, YdDatum, YdModule,
};
use ydforge_core::{FieldSpec, Matrix, Report};

/// Whether the criterion is met in full, with a summary; `Err` on failure.
type Outcome = Result<(bool, String), String>;

type Criterion = (&'static str, fn() -> Outcome);

fn met(detail: String) -> Outcome {
    Ok((true, detail))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn clean(name: &str, r: &Report) -> Result<(), String> {
    ensure(r.is_ok(), || format!("{name}: {:?}", r.first_failure()))
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn hopf_suite() -> Outcome {
    let mut checked = 0;
    for (name, h) in hopf_catalog() {
        let r = h.check();
        clean(name, &r)?;
        let fresh = HopfAlgebra::new((**h.bialgebra()).clone(), None)
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(fresh.antipode() == h.antipode(), || {
            format!("{name}: computed antipode differs")
        })?;
        checked += 1;
    }
    for (stem, doc) in builtin_fixtures() {
        for (name, def) in &doc.hopf_algebras {
            let algebra =
                Algebra::new(def.mult.clone(), def.unit.clone()).map_err(|e| e.to_string())?;
            let coalgebra = Coalgebra::new(def.comult.clone(), def.counit.clone())
                .map_err(|e| e.to_string())?;
            let b = Bialgebra::new(algebra, coalgebra).map_err(|e| e.to_string())?;
            let stored = def
                .antipode
                .as_ref()
                .ok_or_else(|| format!("{stem}/{name}: no stored antipode"))?;
            let computed = HopfAlgebra::new(b, None).map_err(|e| e.to_string())?;
            ensure(computed.antipode() == stored, || {
                format!("{stem}/{name}: stored antipode not reproduced")
            })?;
        }
    }
    let q = FieldSpec::Rationals;
    let h4 = builtin::sweedler_h4(q);
    let s = h4.antipode();
    ensure(s.pow(2) != Matrix::identity(q, 4), || "H4: S² = id".into())?;
    ensure(s.pow(4) == Matrix::identity(q, 4), || "H4: S⁴ ≠ id".into())?;
    met(format!(
        "{checked} Hopf algebras clean, stored antipodes reproduced, H4 S² ≠ id = S⁴"
    ))
}

fn perturb(m: &YdModule, rng: &mut ChaCha8Rng) -> YdModule {
    let mut out = m.clone();
    let f = m.action.field();
    let target = if rng.gen_bool(0.5) {
        &mut out.action
    } else {
        &mut out.coaction
    };
    let (r, c) = (
        rng.gen_range(0..target.rows()),
        rng.gen_range(0..target.cols()),
    );
    let v = target.get(r, c).clone() + f.from_i64(rng.gen_range(1..=3));
    target.set(r, c, v);
    out
}

fn compatibility_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00c0_ffee);
    let modules = yd_catalog()
        .into_iter()
        .chain(twisted_modules(FieldSpec::Rationals));
    let (mut total, mut broken) = (0, 0);
    for (name, m) in modules {
        for _ in 0..12 {
            let p = perturb(&m, &mut rng);
            let defining = p.check_compatibility().is_ok();
            let inverse = p
                .check_compatibility_inverse_form()
                .ok_or_else(|| format!("{name}: no S⁻¹ form"))?
                .is_ok();
            ensure(defining == inverse, || format!("{name}: forms disagree"))?;
            total += 1;
            broken += usize::from(!defining);
        }
    }
    met(format!(
        "{total} perturbations (12 per module), {broken} broke compatibility, verdicts identical"
    ))
}

fn twisted_modules(f: FieldSpec) -> Vec<(String, YdModule)> {
    [2, 3]
        .iter()
        .map(|&l| {
            (
                format!("twisted_{l}"),
                coregular_yd(&builtin::twisted_h4_datum(f, l)).unwrap(),
            )
        })
        .collect()
}

fn round_trip() -> Outcome {
    let mut n = 0;
    for (name, m) in yd_catalog()
        .into_iter()
        .chain(twisted_modules(FieldSpec::Rationals))
    {
        let hb = coaction_to_halfbraid(&m).map_err(|e| format!("{name}: {e}"))?;
        let back = halfbraid_to_coaction(&hb).map_err(|e| format!("{name}: {e}"))?;
        ensure(back == m, || {
            format!("{name}: round trip is not the identity")
        })?;
        let (r, _) = check_half_braid(&hb).map_err(|e| format!("{name}: {e}"))?;
        let heptagon = r
            .findings
            .iter()
            .find(|f| f.check == "half-braid coherence on H ⊗ H")
            .ok_or("missing coherence finding")?;
        ensure(heptagon.ok, || {
            format!("{name}: coherence at V = W = H fails")
        })?;
        n += 1;
    }
    met(format!(
        "{n} modules: identity round trip, coherence at V = W = regular"
    ))
}

/// `v ⊗ m ↦ Σ m₀ ⊗ m₁·v`, accumulated entry by entry.
fn braid_oracle(h: &HopfAlgebra, coaction: &Matrix, v: &Matrix) -> Matrix {
    let f = h.field();
    let (n, dm, dv) = (h.dim(), coaction.cols(), v.rows());
    let mut out = Matrix::zeros(f, dm * dv, dv * dm);
    for vi in 0..dv {
        for mi in 0..dm {
            for m0 in 0..dm {
                for m1 in 0..n {
                    let c = coaction.get(m0 * n + m1, mi);
                    if c.is_zero() {
                        continue;
                    }
                    for w in 0..dv {
                        let a = v.get(w, m1 * dv + vi);
                        if !a.is_zero() {
                            let (row, col) = (m0 * dv + w, vi * dm + mi);
                            let cur = out.get(row, col).clone();
                            out.set(row, col, cur + c.clone() * a.clone());
                        }
                    }
                }
            }
        }
    }
    out
}

fn classical() -> Outcome {
    let mut pairs = 0;
    for (name, h) in hopf_catalog() {
        let f = h.field();
        let b = h.bialgebra();
        let ms = classical_yd_examples(&h);
        for m in &ms {
            for v in ms
                .iter()
                .map(|x| x.module())
                .chain([LeftModule::regular(&h.algebra)])
            {
                let braid = braid_map(m, &v).map_err(|e| format!("{name}: {e}"))?;
                let iso = regular_balanced_iso(b, &v)
                    .ok_or_else(|| format!("{name}: no balanced iso"))?;
                let ours = Matrix::identity(f, m.dim()).kron(&iso).mul(&braid.map);
                ensure(ours == braid_oracle(&h, &m.coaction, &v.action), || {
                    format!("{name}: braid differs from n₀ ⊗ n₁m")
                })?;
                pairs += 1;
            }
        }
        let (m, n) = (ms.last().unwrap(), &ms[0]);
        let (u, v) = (ms[0].module(), LeftModule::regular(&h.algebra));
        let uv = u.tensor(&v, b);
        let lhs = braid_oracle(&h, &m.coaction, &uv.action);
        let rhs = braid_oracle(&h, &m.coaction, &u.action)
            .kron(&Matrix::identity(f, v.dim()))
            .mul(&Matrix::identity(f, u.dim()).kron(&braid_oracle(&h, &m.coaction, &v.action)));
        ensure(lhs == rhs, || format!("{name}: first hexagon"))?;
        clean(
            name,
            &check_braid_coherence(m, n, &u, &v).map_err(|e| e.to_string())?,
        )?;
    }
    met(format!(
        "{pairs} braid matrices equal the oracle; both hexagons hold on every catalog algebra"
    ))
}

fn galois() -> Outcome {
    let q = FieldSpec::Rationals;
    let h = builtin::sweedler_h4(q);
    let b = h.bialgebra().clone();
    let id = b.id();
    let mut cases: Vec<(String, BimoduleCoalgebra)> = hopf_catalog()
        .into_iter()
        .map(|(n, h)| {
            (
                format!("{n} regular"),
                BimoduleCoalgebra::regular(h.bialgebra().clone()),
            )
        })
        .collect();
    for l in [2, 3] {
        cases.push((
            format!("_α{l}H4"),
            BimoduleCoalgebra::twisted(b.clone(), &id, &builtin::h4_scaling(&h, l)),
        ));
    }
    for (name, c) in &cases {
        let (r, cert) = check_bigalois_coobject(c);
        let cert =
            cert.ok_or_else(|| format!("{name}: no certificate: {:?}", r.first_failure()))?;
        clean(name, &r)?;
        clean(name, &cert.check_identities())?;
        let sigma = cert.sigma_map().map_err(|e| e.to_string())?;
        clean(name, &cert.check_sigma(&sigma))?;
    }
    for l in [2, 3] {
        let datum = builtin::twisted_h4_datum(q, l);
        let m = coregular_yd(&datum).map_err(|e| e.to_string())?;
        let cert = check_bigalois_coobject(&datum.c)
            .1
            .ok_or("twisted C is not Galois")?;
        for v in classical_yd_examples(&h) {
            clean(
                "galois braiding",
                &galois_braiding(&cert, &m, &v)
                    .map_err(|e| e.to_string())?
                    .report,
            )?;
        }
    }
    let kc2 = group_algebra(&cyclic_group(2), q).unwrap();
    let kb = kc2.bialgebra().clone();
    let one = Matrix::identity(q, 1);
    let k = Coalgebra::new(one.clone(), one).unwrap();
    let small = BimoduleCoalgebra::new(
        kb.clone(),
        kb.clone(),
        k,
        kb.counit().clone(),
        kb.counit().clone(),
    )
    .unwrap();
    let (r, cert) = check_bigalois_coobject(&small);
    ensure(cert.is_none(), || "one-dimensional C accepted".into())?;
    let note = r
        .failures()
        .find_map(|f| f.note.clone())
        .unwrap_or_default();
    ensure(note.contains("dimension obstruction"), || {
        format!("obstruction not named: {note}")
    })?;
    met(format!(
        "{} certificates with identities and σ̄ laws, galois braidings invert, rejection: {note}",
        cases.len()
    ))
}

fn lifts() -> Outcome {
    let q = FieldSpec::Rationals;
    let h = builtin::sweedler_h4(q);
    let b = h.bialgebra().clone();
    let d = BimoduleCoalgebra::regular(b.clone());
    let mut n = 0;
    for l in [2, 3] {
        let c = BimoduleCoalgebra::twisted(b.clone(), &b.id(), &builtin::h4_scaling(&h, l));
        let cert = check_bigalois_coobject(&c).1.ok_or("not Galois")?;
        for v in classical_yd_examples(&h) {
            let lift = lift_yd(&cert, &d, &v).map_err(|e| e.to_string())?;
            clean("lift", &lift.module.check())?;
            let (_, classical, rt) = lift_to_classical(&cert, &lift).map_err(|e| e.to_string())?;
            clean("transport", &rt)?;
            clean("classical YD over H4", &classical.check())?;
            n += 1;
        }
    }
    for (name, h) in hopf_catalog() {
        let c = BimoduleCoalgebra::regular(h.bialgebra().clone());
        let cert = check_bigalois_coobject(&c)
            .1
            .ok_or("regular C is not Galois")?;
        for v in classical_yd_examples(&h) {
            let lift = lift_yd(&cert, &c, &v).map_err(|e| e.to_string())?;
            clean(name, &check_identity_lift(&cert, &c, &v, &lift))?;
            n += 1;
        }
    }
    met(format!(
        "{n} lifts: classical YD over H4 for two scalings, identity up to explicit iso along C = H"
    ))
}

fn graded(h: &HopfAlgebra, t: Twists) -> GradedYdModule {
    let datum = Arc::new(alpha_beta_datum(h.bialgebra(), &t).unwrap());
    GradedYdModule::new(coregular_yd(&datum).unwrap()).unwrap()
}

fn right_graded(h: &HopfAlgebra, l: i64) -> GradedYdModule {
    let id = h.bialgebra().id();
    graded(
        h,
        Twists {
            alpha: id.clone(),
            beta: id.clone(),
            gamma: builtin::h4_scaling(h, l),
            delta: id,
        },
    )
}

/// The automorphism of `kG` given by conjugation with `t`.
fn inner(table: &[Vec<usize>], t: usize, f: FieldSpec) -> Matrix {
    let n = table.len();
    let t_inv = (0..n).find(|&s| table[t][s] == 0).unwrap();
    Matrix::from_fn(f, n, n, |i, j| {
        if table[table[t][j]][t_inv] == i {
            f.one()
        } else {
            f.zero()
        }
    })
}

fn crossed() -> Outcome {
    let f7 = FieldSpec::prime(7).unwrap();
    let h = builtin::sweedler_h4(f7);
    let (m, n) = (right_graded(&h, 2), right_graded(&h, 3));
    clean("M", &m.check())?;
    clean("N", &n.check())?;
    let composite = m
        .right_class
        .compose(&n.right_class)
        .map_err(|e| e.to_string())?;
    ensure(
        composite.representative == builtin::h4_scaling(&h, 6),
        || "2·3 ≠ 6".into(),
    )?;
    clean(
        "∂(M ⊗ N)",
        &check_tensor_classes(&m, &n).map_err(|e| e.to_string())?,
    )?;
    let cb = crossed_braiding(&m, &n).map_err(|e| e.to_string())?;
    clean("crossed braiding", &cb.report)?;
    clean("conjugation", &check_conjugation(&m, &n))?;
    ensure(
        cb.twisted.right_class == m.right_class.conjugate(&n.right_class).unwrap(),
        || "∂(X^g) ≠ g⁻¹∂Xg".into(),
    )?;

    // φ laws with non-commuting classes, so the composition order is visible.
    let q = FieldSpec::Rationals;
    let table = builtin::symmetric_group_s3();
    let kg = group_algebra(&table, q).unwrap();
    let id = kg.bialgebra().id();
    let x = graded(
        &kg,
        Twists {
            alpha: id.clone(),
            beta: id.clone(),
            gamma: id.clone(),
            delta: id.clone(),
        },
    );
    let ts: Vec<usize> = (1..table.len()).filter(|&t| table[t][t] == 0).collect();
    let (g, k) = (inner(&table, ts[0], q), inner(&table, ts[1], q));
    ensure(g.mul(&k) != k.mul(&g), || "classes commute".into())?;
    for kind in [ClassKind::GaloisObject, ClassKind::GaloisCoobject] {
        let cls = |m: &Matrix| GradedClass::new(kind, kg.bialgebra().clone(), m.clone()).unwrap();
        let (cg, ck) = (cls(&g), cls(&k));
        let twice = phi_action(&cg, &phi_action(&ck, &x).unwrap()).unwrap();
        let product = match kind {
            ClassKind::GaloisObject => cg.compose(&ck),
            ClassKind::GaloisCoobject => ck.compose(&cg),
        }
        .unwrap();
        ensure(twice == phi_action(&product, &x).unwrap(), || {
            format!("{kind:?}: φ is not an action")
        })?;
        ensure(
            phi_action(&GradedClass::identity(kind, kg.bialgebra().clone()), &x).unwrap() == x,
            || "φ(1) ≠ id".into(),
        )?;
    }
    met("λ = 2·3 = 6 with intertwiners over F7, φ an action on kS3 classes, crossed braiding graded iso, ∂(X^g) = g⁻¹∂Xg".into())
}

fn string_leaves(v: &Value, path: String, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => m
            .iter()
            .for_each(|(k, x)| string_leaves(x, format!("{path}/{k}"), out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| match x {
            Value::String(_) => out.push(format!("{path}/{i}")),
            _ => string_leaves(x, format!("{path}/{i}"), out),
        }),
        _ => {}
    }
}

fn corrupt(doc: &Value, field: FieldSpec, pointer: &str) -> ydforge::InputDocument {
    let mut v = doc.clone();
    let slot = v.pointer_mut(pointer).unwrap();
    let x = field.parse(slot.as_str().unwrap()).unwrap() + field.one();
    *slot = Value::String(x.to_string());
    parse_input(v.to_string().as_bytes()).unwrap()
}

fn flipped_with_witness(r: &CliReport) -> bool {
    r.verdict == Verdict::Fail
        && r.failures()
            .any(|f| f.witness.as_ref().is_some_and(|w| w.lhs != w.rhs))
}

/// Reorders tensor factors: output factor `j` is input factor `order[j]`.
fn reorder(f: FieldSpec, dims: &[usize], order: &[usize]) -> Matrix {
    let total: usize = dims.iter().product();
    let mut m = Matrix::zeros(f, total, total);
    for col in 0..total {
        let mut t = vec![0; dims.len()];
        let mut rest = col;
        for k in (0..dims.len()).rev() {
            t[k] = rest % dims[k];
            rest /= dims[k];
        }
        let row = order.iter().fold(0, |acc, &k| acc * dims[k] + t[k]);
        m.set(row, col, f.one());
    }
    m
}

/// Direct check that `(action, coaction)` is a classical YD module over the
/// Hopf algebra `(mult, unit, comult, counit)`:
/// `(h₂m)₀ ⊗ (h₂m)₁h₁ = h₁m₀ ⊗ h₂m₁` plus the module and comodule laws.
fn classical_yd_oracle(h: &ydforge::input::HopfDef, action: &Matrix, coaction: &Matrix) -> bool {
    let f = action.field();
    let (n, d) = (h.unit.rows(), action.rows());
    let (idn, idd) = (Matrix::identity(f, n), Matrix::identity(f, d));
    let module = action.mul(&h.mult.kron(&idd)) == action.mul(&idn.kron(action))
        && action.mul(&h.unit.kron(&idd)) == idd;
    let comodule = coaction.kron(&idn).mul(coaction) == idd.kron(&h.comult).mul(coaction)
        && idd.kron(&h.counit).mul(coaction) == idd;
    let split = h.comult.kron(&idd);
    let lhs = idd
        .kron(&h.mult)
        .mul(&reorder(f, &[n, d, n], &[1, 2, 0]))
        .mul(&idn.kron(coaction))
        .mul(&idn.kron(action))
        .mul(&split);
    let rhs = action
        .kron(&h.mult)
        .mul(&reorder(f, &[n, n, d, n], &[0, 2, 1, 3]))
        .mul(&idn.kron(&idn).kron(coaction))
        .mul(&split);
    module && comodule && lhs == rhs
}

/// A corrupted module over a regular datum that the oracle confirms is
/// still a YD module, so no verdict could flip.
fn still_valid(doc: &ydforge::InputDocument, pointer: &str) -> bool {
    let mut parts = pointer.split('/').skip(1);
    let (Some("yd_modules"), Some(name)) = (parts.next(), parts.next()) else {
        return false;
    };
    let def = &doc.yd_modules[name];
    let datum = &doc.yd_data[&def.datum];
    let hopf_name = &doc.bicomodule_algebras[&datum.algebra].h;
    let built = doc.build();
    let regular = YdDatum::regular(built.hopf[hopf_name].clone());
    *built.data[&def.datum] == regular
        && classical_yd_oracle(&doc.hopf_algebras[hopf_name], &def.action, &def.coaction)
}

/// Fixtures with more constants than this are sampled unless
/// `YDFORGE_EXHAUSTIVE` is set.
const EXHAUSTIVE_LIMIT: usize = 2000;
const SAMPLE: usize = 96;

fn cli() -> Outcome {
    let dir = fixtures_dir();
    let status = Process::new(env!("CARGO_BIN_EXE_ydforge"))
        .arg("all")
        .arg(&dir)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(0), || {
        format!("all fixtures/ exited {:?}", status.status.code())
    })?;

    let exhaustive = std::env::var_os("YDFORGE_EXHAUSTIVE").is_some();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let opts = Options::default();
    let (mut scanned, mut total, mut full) = (0, 0, 0);
    let mut valid = Vec::new();
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    for path in files
        .iter()
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
    {
        let stem = path.file_stem().unwrap().to_string_lossy().to_string();
        let doc = parse_input(&std::fs::read(path).unwrap()).map_err(|e| e.to_string())?;
        let json: Value = serde_json::from_str(&doc.to_json()).unwrap();
        let mut leaves = Vec::new();
        string_leaves(&json, String::new(), &mut leaves);
        total += leaves.len();
        let chosen: Vec<&String> = if exhaustive || leaves.len() <= EXHAUSTIVE_LIMIT {
            leaves.iter().collect()
        } else {
            leaves.choose_multiple(&mut rng, SAMPLE).collect()
        };
        for p in &chosen {
            let bad = corrupt(&json, doc.field, p);
            let r = axiom_report(&bad, &opts);
            if flipped_with_witness(&r) {
                continue;
            }
            ensure(r.verdict == Verdict::Pass && still_valid(&bad, p), || {
                format!("{stem}{p}: corruption not caught with a witness")
            })?;
            let all = run_command(&bad, Command::All, &opts).map_err(|e| e.to_string())?;
            ensure(all.verdict == Verdict::Pass, || {
                format!("{stem}{p}: inconsistent verdicts")
            })?;
            valid.push(format!("{stem}{p}"));
        }
        scanned += chosen.len();
        if leaves.len() <= EXHAUSTIVE_LIMIT {
            let p = leaves.choose(&mut rng).unwrap();
            let r = run_command(&corrupt(&json, doc.field, p), Command::All, &opts)
                .map_err(|e| e.to_string())?;
            ensure(
                flipped_with_witness(&r) || valid.iter().any(|v| v.ends_with(p.as_str())),
                || format!("{stem}{p}: `all` did not flip"),
            )?;
            full += 1;
        }
    }
    let summary = format!(
        "all fixtures/ exits 0; {} of {scanned} scanned corruptions (of {total} constants) fail with differing witness sides; {full} full `all` reruns flip",
        scanned - valid.len()
    );
    if valid.is_empty() {
        met(summary)
    } else {
        Ok((
            false,
            format!(
                "{summary}; not attainable for {} constants whose corruption is again a YD module (checked by an independent oracle): {}",
                valid.len(),
                valid.join(", ")
            ),
        ))
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("Hopf suite", hopf_suite),
        ("compatibility forms agree", compatibility_forms),
        ("half-braid round trip", round_trip),
        ("classical braiding and hexagons", classical),
        ("Galois suite", galois),
        ("lifted functor", lifts),
        ("crossed grading", crossed),
        ("CLI and corruption", cli),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let (mark, detail) = match &outcome {
            Ok((true, d)) => ("PASS", d),
            Ok((false, d)) => ("NOT ATTAINABLE IN FULL", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!(
            "criterion {} [{mark}] {name} (tolerance: exact) - {detail}",
            i + 1
        );
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}

#[test]
fn oracle_separates_valid_from_corrupted_modules() {
    for (stem, doc) in builtin_fixtures() {
        let json: Value = serde_json::from_str(&doc.to_json()).unwrap();
        for name in doc.yd_modules.keys() {
            let coaction = format!("/yd_modules/{name}/coaction/0/0");
            if !still_valid(&doc, &coaction) {
                assert!(
                    stem == "crossed_h4_f7" || name.starts_with("twisted"),
                    "{stem}/{name}"
                );
                continue;
            }
            let bad = corrupt(&json, doc.field, &coaction);
            assert!(!still_valid(&bad, &coaction), "{stem}/{name}");
        }
    }
}
