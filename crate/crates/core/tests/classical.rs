use ydforge_core::builtin::{classical_yd_examples, hopf_catalog};
use ydforge_core::hopf::HopfAlgebra;
use ydforge_core::rep::LeftModule;
use ydforge_core::yd::{
    braid_map, check_braid_coherence, check_braid_linearity, regular_balanced_iso, tensor_yd,
    YdModule,
};
use ydforge_core::Matrix;

/// `v ⊗ m ↦ Σ m₀ ⊗ m₁·v`, summed entry by entry from the structure matrices.
fn braid_oracle(h: &HopfAlgebra, coaction: &Matrix, v: &Matrix) -> Matrix {
    let f = h.field();
    let n = h.dim();
    let dm = coaction.cols();
    let dv = v.rows();
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

/// `m ⊗ n ↦ m₀ ⊗ n₀ ⊗ n₁m₁`.
fn tensor_coaction_oracle(h: &HopfAlgebra, m: &Matrix, nn: &Matrix) -> Matrix {
    let (dm, dn, k) = (m.cols(), nn.cols(), h.dim());
    let f = h.field();
    let mut out = Matrix::zeros(f, dm * dn * k, dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            for a0 in 0..dm {
                for a1 in 0..k {
                    for b0 in 0..dn {
                        for b1 in 0..k {
                            let c = m.get(a0 * k + a1, a).clone() * nn.get(b0 * k + b1, b).clone();
                            if c.is_zero() {
                                continue;
                            }
                            for p in 0..k {
                                let coeff = h.mult().get(p, b1 * k + a1).clone() * c.clone();
                                let row = (a0 * dn + b0) * k + p;
                                let cur = out.get(row, a * dn + b).clone();
                                out.set(row, a * dn + b, cur + coeff);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn classical(h: &HopfAlgebra) -> Vec<YdModule> {
    classical_yd_examples(h)
}

#[test]
fn braid_map_is_the_classical_braiding() {
    for (name, h) in hopf_catalog() {
        let ms = classical(&h);
        for m in &ms {
            for v in ms
                .iter()
                .map(|x| x.module())
                .chain([LeftModule::regular(&h.algebra)])
            {
                let b = braid_map(m, &v).unwrap();
                let iso = regular_balanced_iso(h.bialgebra(), &v).unwrap();
                let f = h.field();
                let ours = Matrix::identity(f, m.dim()).kron(&iso).mul(&b.map);
                assert_eq!(ours, braid_oracle(&h, &m.coaction, &v.action), "{name}");
                assert!(check_braid_linearity(m, &v, &b).is_ok(), "{name}");
            }
        }
    }
}

#[test]
fn classical_hexagons() {
    for (name, h) in hopf_catalog() {
        let f = h.field();
        let b = h.bialgebra();
        let ms = classical(&h);
        let m = ms.last().unwrap();
        let (u, v) = (ms[0].module(), LeftModule::regular(&h.algebra));
        let (du, dv, dm) = (u.dim(), v.dim(), m.dim());
        // β_{U⊗V,M} = (β_{U,M} ⊗ id)(id ⊗ β_{V,M}).
        let uv = u.tensor(&v, b);
        let lhs = braid_oracle(&h, &m.coaction, &uv.action);
        let rhs = braid_oracle(&h, &m.coaction, &u.action)
            .kron(&Matrix::identity(f, dv))
            .mul(&Matrix::identity(f, du).kron(&braid_oracle(&h, &m.coaction, &v.action)));
        assert_eq!(lhs, rhs, "{name}");
        // β_{V,M⊗N} = (id ⊗ β_{V,N})(β_{V,M} ⊗ id).
        let nmod = &ms[0];
        let dn = nmod.dim();
        let mn = tensor_coaction_oracle(&h, &m.coaction, &nmod.coaction);
        let lhs = braid_oracle(&h, &mn, &v.action);
        let rhs = Matrix::identity(f, dm)
            .kron(&braid_oracle(&h, &nmod.coaction, &v.action))
            .mul(&braid_oracle(&h, &m.coaction, &v.action).kron(&Matrix::identity(f, dn)));
        assert_eq!(lhs, rhs, "{name}");
        // The generic tensor product carries the same coaction after H ⊗_H H ≅ H.
        let t = tensor_yd(m, nmod).unwrap();
        let q = &t.composed.balanced;
        let mult = q.descend(h.mult()).unwrap();
        let sub = &t.composed.cotensor;
        assert_eq!(sub.dim(), h.dim());
        let via_generic = Matrix::identity(f, dm * dn)
            .kron(&mult)
            .mul(&t.module.coaction);
        assert_eq!(via_generic, mn, "{name}");
        let r = check_braid_coherence(m, nmod, &u, &v).unwrap();
        assert!(r.is_ok(), "{name}: {:?}", r.first_failure());
    }
}
