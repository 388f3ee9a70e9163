//! Writing library objects back out as documents, and the built-in fixtures.

use std::sync::Arc;

use ydforge_core::builtin::{
    self, classical_yd_examples, coregular_yd, cyclic_group, function_algebra, group_algebra,
    symmetric_group_s3, taft,
};
use ydforge_core::crossed::{alpha_beta_datum, Twists};
use ydforge_core::hopf::{Bialgebra, HopfAlgebra};
use ydforge_core::rep::{BicomoduleAlgebra, BimoduleCoalgebra};
use ydforge_core::yd::{coaction_to_halfbraid, HalfBraid, YdDatum, YdModule};
use ydforge_core::{FieldSpec, Matrix};

use crate::input::{
    AutomorphismDef, BicomoduleAlgebraDef, BimoduleCoalgebraDef, HalfBraidDef, HopfDef,
    InputDocument, YdDatumDef, YdModuleDef,
};

/// Accumulates named structures into a document, reusing the name of any
/// structure that is already present with identical data.
pub struct Exporter {
    pub doc: InputDocument,
}

impl Exporter {
    pub fn new(field: FieldSpec) -> Self {
        Exporter {
            doc: InputDocument::new(field),
        }
    }

    /// Registers a Hopf algebra with its antipode.
    pub fn hopf(&mut self, name: &str, h: &HopfAlgebra) -> String {
        self.bialgebra(name, h.bialgebra())
    }

    fn bialgebra(&mut self, name: &str, b: &Bialgebra) -> String {
        let def = HopfDef {
            mult: b.mult().clone(),
            unit: b.unit().clone(),
            comult: b.comult().clone(),
            counit: b.counit().clone(),
            antipode: b.s().cloned(),
        };
        if let Some((existing, _)) = self.doc.hopf_algebras.iter().find(|(_, d)| {
            d.mult == def.mult
                && d.unit == def.unit
                && d.comult == def.comult
                && d.counit == def.counit
        }) {
            return existing.clone();
        }
        self.doc.hopf_algebras.insert(name.to_string(), def);
        name.to_string()
    }

    fn hopf_name(&self, b: &Bialgebra) -> String {
        self.doc
            .hopf_algebras
            .iter()
            .find(|(_, d)| {
                d.mult == *b.mult()
                    && d.comult == *b.comult()
                    && d.unit == *b.unit()
                    && d.counit == *b.counit()
            })
            .map(|(n, _)| n.clone())
            .expect("register the Hopf algebra first")
    }

    pub fn automorphism(&mut self, name: &str, h: &HopfAlgebra, matrix: Matrix) -> String {
        let hopf = self.hopf_name(h.bialgebra());
        self.doc
            .automorphisms
            .insert(name.to_string(), AutomorphismDef { hopf, matrix });
        name.to_string()
    }

    pub fn bicomodule_algebra(&mut self, name: &str, a: &BicomoduleAlgebra) -> String {
        let def = BicomoduleAlgebraDef {
            h: self.hopf_name(&a.h),
            k: self.hopf_name(&a.k),
            mult: a.algebra.mult.clone(),
            unit: a.algebra.unit.clone(),
            left: a.left.clone(),
            right: a.right.clone(),
        };
        insert_dedup(&mut self.doc.bicomodule_algebras, name, def)
    }

    pub fn bimodule_coalgebra(&mut self, name: &str, c: &BimoduleCoalgebra) -> String {
        let def = BimoduleCoalgebraDef {
            k: self.hopf_name(&c.k),
            h: self.hopf_name(&c.h),
            comult: c.coalgebra.comult.clone(),
            counit: c.coalgebra.counit.clone(),
            left: c.left.clone(),
            right: c.right.clone(),
        };
        insert_dedup(&mut self.doc.bimodule_coalgebras, name, def)
    }

    /// Registers a datum as `name`, its algebra as `name_A` and its
    /// coalgebra as `name_C` unless equal ones exist already.
    pub fn datum(&mut self, name: &str, d: &YdDatum) -> String {
        let algebra = self.bicomodule_algebra(&format!("{name}_A"), &d.a);
        let coalgebra = self.bimodule_coalgebra(&format!("{name}_C"), &d.c);
        insert_dedup(
            &mut self.doc.yd_data,
            name,
            YdDatumDef { algebra, coalgebra },
        )
    }

    pub fn yd_module(&mut self, name: &str, datum_name: &str, m: &YdModule) -> String {
        let datum = self.datum(datum_name, &m.datum);
        let def = YdModuleDef {
            datum,
            action: m.action.clone(),
            coaction: m.coaction.clone(),
        };
        self.doc.yd_modules.insert(name.to_string(), def);
        name.to_string()
    }

    pub fn half_braid(&mut self, name: &str, datum_name: &str, hb: &HalfBraid) -> String {
        let datum = self.datum(datum_name, &hb.datum);
        let def = HalfBraidDef {
            datum,
            action: hb.action.clone(),
            component: hb.component.clone(),
        };
        self.doc.half_braids.insert(name.to_string(), def);
        name.to_string()
    }

    pub fn finish(self) -> InputDocument {
        self.doc
    }
}

fn insert_dedup<T: PartialEq>(
    section: &mut std::collections::BTreeMap<String, T>,
    name: &str,
    def: T,
) -> String {
    if let Some((existing, _)) = section.iter().find(|(_, d)| **d == def) {
        return existing.clone();
    }
    section.insert(name.to_string(), def);
    name.to_string()
}

/// The classical modules over `(H, H, H, H)` plus the half-braid of the
/// last one.
fn classical(name: &str, h: &HopfAlgebra) -> Exporter {
    let mut ex = Exporter::new(h.field());
    ex.hopf(name, h);
    let ms = classical_yd_examples(h);
    let labels = ["trivial", "coregular", "conjugation"];
    for (m, label) in ms.iter().zip(labels) {
        ex.yd_module(label, "regular", m);
    }
    let last = ms.last().expect("at least the trivial module");
    let hb = coaction_to_halfbraid(last).expect("classical modules have half-braids");
    ex.half_braid(&format!("{}_braid", labels[ms.len() - 1]), "regular", &hb);
    ex
}

fn twists(alpha: &Matrix, beta: &Matrix, gamma: &Matrix, delta: &Matrix) -> Twists {
    Twists {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        delta: delta.clone(),
    }
}

/// Every built-in fixture, by file stem.
pub fn builtin_fixtures() -> Vec<(&'static str, InputDocument)> {
    let q = FieldSpec::Rationals;
    let f7 = FieldSpec::prime(7).expect("7 is prime");
    let mut out = vec![
        (
            "classical_kc2",
            classical("kC2", &group_algebra(&cyclic_group(2), q).expect("group")).finish(),
        ),
        (
            "classical_kc3_f7",
            classical("kC3", &group_algebra(&cyclic_group(3), f7).expect("group")).finish(),
        ),
        (
            "classical_ks3",
            classical(
                "kS3",
                &group_algebra(&symmetric_group_s3(), q).expect("group"),
            )
            .finish(),
        ),
        (
            "function_kc2",
            classical(
                "kC2_dual",
                &function_algebra(&cyclic_group(2), q).expect("group"),
            )
            .finish(),
        ),
        (
            "taft3_f7",
            classical("T3", &taft(3, 2, f7).expect("2 has order 3 mod 7")).finish(),
        ),
    ];

    let h4 = builtin::sweedler_h4(q);
    let mut ex = classical("H4", &h4);
    ex.automorphism("scale_2", &h4, builtin::h4_scaling(&h4, 2));
    ex.automorphism("antipode_squared", &h4, h4.antipode().mul(h4.antipode()));
    out.push(("sweedler", ex.finish()));

    let mut ex = Exporter::new(q);
    ex.hopf("H4", &h4);
    let b = h4.bialgebra().clone();
    let id = b.id();
    for m in classical_yd_examples(&h4) {
        let label = if m.dim() == 1 { "trivial" } else { "coregular" };
        ex.yd_module(label, "regular", &m);
    }
    for lambda in [2i64, 3] {
        let alpha = builtin::h4_scaling(&h4, lambda);
        ex.automorphism(&format!("scale_{lambda}"), &h4, alpha.clone());
        let datum = builtin::twisted_h4_datum(q, lambda);
        let m = coregular_yd(&datum).expect("A = H as an algebra");
        ex.yd_module(
            &format!("twisted_{lambda}"),
            &format!("twisted_{lambda}"),
            &m,
        );
        let c = BimoduleCoalgebra::twisted(b.clone(), &id, &alpha);
        ex.bimodule_coalgebra(&format!("twisted_{lambda}_C"), &c);
    }
    out.push(("twisted_h4", ex.finish()));

    let h = builtin::sweedler_h4(f7);
    let b = h.bialgebra().clone();
    let id = b.id();
    let mut ex = Exporter::new(f7);
    ex.hopf("H4", &h);
    let graded: [(&str, Twists); 3] = [
        (
            "right_2",
            twists(&id, &id, &builtin::h4_scaling(&h, 2), &id),
        ),
        (
            "right_3",
            twists(&id, &id, &builtin::h4_scaling(&h, 3), &id),
        ),
        ("left_3", twists(&builtin::h4_scaling(&h, 3), &id, &id, &id)),
    ];
    for lambda in [2i64, 3] {
        ex.automorphism(
            &format!("scale_{lambda}"),
            &h,
            builtin::h4_scaling(&h, lambda),
        );
    }
    for (label, t) in graded {
        let datum = Arc::new(alpha_beta_datum(&b, &t).expect("automorphisms"));
        let m = coregular_yd(&datum).expect("A = H as an algebra");
        ex.yd_module(label, label, &m);
    }
    out.push(("crossed_h4_f7", ex.finish()));
    out
}
