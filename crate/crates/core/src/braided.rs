//! Quasitriangular and ribbon structure, and the braiding and twist on modules.

use serde::{Deserialize, Serialize};

use crate::algebra::{is_zero_vec, ModuleRep};
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::matrix::{ExactMatrix, Vector};
use crate::scalar::CycloScalar;
use crate::tensor::{Tensor2, Tensor3};
use crate::verdict::{Suite, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixData {
    pub r: Tensor2,
    pub r_inverse: Tensor2,
}

/// Whether a ribbon element `v` in a file acts as the twist or as its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RibbonConvention {
    /// `θ_V` is the action of `v⁻¹` (the engine's own convention).
    #[serde(rename = "theta=v_inv")]
    ThetaVInv,
    #[serde(rename = "theta=v")]
    ThetaV,
}

/// A verified ribbon structure.
#[derive(Clone, Debug, PartialEq)]
pub struct RibbonData {
    pub v: Vector,
    pub v_inv: Vector,
    pub u: Vector,
    pub u_inv: Vector,
    /// Pivotal grouplike `u·v⁻¹`.
    pub g: Vector,
    pub g_inv: Vector,
}

impl RMatrixData {
    /// `R⁻¹ = (S⊗id)(R)`.
    pub fn from_r(h: &HopfData, r: Tensor2) -> Self {
        let r_inverse = h.map2(&r, |a| h.antipode.column(a), |b| h.basis(b));
        RMatrixData { r, r_inverse }
    }

    /// The trivial R-matrix `1⊗1`.
    pub fn trivial(h: &HopfData) -> Self {
        Self::from_r(h, h.one2())
    }
}

pub fn verify_r_matrix(h: &HopfData, rm: &RMatrixData) -> Suite {
    let mut s = Suite::new();
    let r = &rm.r;
    let r12 = h.embed3(r, (0, 1));
    let r13 = h.embed3(r, (0, 2));
    let r23 = h.embed3(r, (1, 2));
    s.push(Verdict::from_bool(
        "(Δ⊗id)R = R13 R23",
        h.comult_left(r) == h.mul_t(&r13, &r23),
        || "tensors differ".into(),
    ));
    s.push(Verdict::from_bool(
        "(id⊗Δ)R = R13 R12",
        h.comult_right(r) == h.mul_t(&r13, &r12),
        || "tensors differ".into(),
    ));
    let bad = (0..h.dim()).find(|&i| {
        let d = &h.comult[i];
        h.mul_t(r, d) != h.mul_t(&d.flip(), r)
    });
    s.push(Verdict::from_bool("R Δ(h) = Δcop(h) R", bad.is_none(), || {
        format!("fails for e{}", bad.unwrap())
    }));
    let one = h.one2();
    s.push(Verdict::from_bool(
        "R R⁻¹ = R⁻¹ R = 1⊗1",
        h.mul_t(r, &rm.r_inverse) == one && h.mul_t(&rm.r_inverse, r) == one,
        || "R is not invertible with the given inverse".into(),
    ));
    s
}

/// `R12 R13 R23 = R23 R13 R12`.
pub fn yang_baxter(h: &HopfData, r: &Tensor2) -> Verdict {
    let r12 = h.embed3(r, (0, 1));
    let r13 = h.embed3(r, (0, 2));
    let r23 = h.embed3(r, (1, 2));
    let l: Tensor3 = h.mul_t(&h.mul_t(&r12, &r13), &r23);
    let rr: Tensor3 = h.mul_t(&h.mul_t(&r23, &r13), &r12);
    Verdict::from_bool("Yang-Baxter", l == rr, || "R12R13R23 != R23R13R12".into())
}

/// `M = R21·R` and `M⁻¹ = R⁻¹·R21⁻¹`.
pub fn monodromy(h: &HopfData, rm: &RMatrixData) -> (Tensor2, Tensor2) {
    let m = h.mul_t(&rm.r.flip(), &rm.r);
    let m_inv = h.mul_t(&rm.r_inverse, &rm.r_inverse.flip());
    (m, m_inv)
}

/// `u = Σ S(b_s) a_s`, with the check `S²(h) = u h u⁻¹`.
pub fn drinfeld_element(h: &HopfData, rm: &RMatrixData) -> Result<(Vector, Vector)> {
    let mut u = h.zero();
    for ([a, b], c) in rm.r.iter() {
        let sb = h.antipode.column(*b);
        let p = h.mul(&sb, &h.basis(*a));
        crate::algebra::axpy(&mut u, c, &p);
    }
    let u_inv = h
        .algebra
        .inverse(&u)
        .ok_or_else(|| Error::Verification("Drinfeld element is not invertible".into()))?;
    let s2 = h.antipode.mul(&h.antipode);
    for i in 0..h.dim() {
        let conj = h.algebra.mul3(&u, &h.basis(i), &u_inv);
        if conj != s2.column(i) {
            return Err(Error::Verification(format!("S²(e{i}) != u e{i} u⁻¹")));
        }
    }
    Ok((u, u_inv))
}

/// Checks every ribbon condition for `v` (given in the engine convention).
pub fn verify_ribbon(h: &HopfData, rm: &RMatrixData, v: &[CycloScalar]) -> (Suite, Option<RibbonData>) {
    let mut s = Suite::new();
    let (u, u_inv) = match drinfeld_element(h, rm) {
        Ok(x) => x,
        Err(e) => {
            s.push(Verdict::fail("Drinfeld element", e.to_string()));
            return (s, None);
        }
    };
    let v = v.to_vec();
    let v_inv = h.algebra.inverse(&v);
    s.push(Verdict::from_bool("v invertible", v_inv.is_some(), || "no inverse".into()));
    let Some(v_inv) = v_inv else {
        return (s, None);
    };
    s.push(Verdict::from_bool("v central", h.algebra.is_central(&v), || {
        "v does not commute with the basis".into()
    }));
    s.push(Verdict::from_bool("S(v) = v", h.antipode_of(&v) == v, || "S(v) != v".into()));
    s.push(Verdict::from_bool("ε(v) = 1", h.counit_of(&v).is_one(), || {
        format!("ε(v) = {}", h.counit_of(&v))
    }));
    let su = h.antipode_of(&u);
    s.push(Verdict::from_bool(
        "v² = u S(u)",
        h.mul(&v, &v) == h.mul(&u, &su),
        || "v² != uS(u)".into(),
    ));
    let (_, m_inv) = monodromy(h, rm);
    let rhs = h.mul_t(&m_inv, &h.pure2(&v, &v));
    s.push(Verdict::from_bool("Δ(v) = M⁻¹(v⊗v)", h.comult_of(&v) == rhs, || {
        "Δ(v) != (R21 R)⁻¹ (v⊗v)".into()
    }));
    let g = h.mul(&u, &v_inv);
    let g_inv = h.mul(&v, &u_inv);
    s.push(Verdict::from_bool("g = u v⁻¹ grouplike", h.is_grouplike(&g), || {
        "Δ(g) != g⊗g".into()
    }));
    let s2 = h.antipode.mul(&h.antipode);
    let bad = (0..h.dim()).find(|&i| h.algebra.mul3(&g, &h.basis(i), &g_inv) != s2.column(i));
    s.push(Verdict::from_bool("S²(h) = g h g⁻¹", bad.is_none(), || {
        format!("fails for e{}", bad.unwrap())
    }));
    let ok = s.passed();
    (
        s,
        ok.then_some(RibbonData {
            v,
            v_inv,
            u,
            u_inv,
            g,
            g_inv,
        }),
    )
}

/// Tries `v = u g⁻¹` for each supplied grouplike candidate.
pub fn ribbon_from_grouplikes(
    h: &HopfData,
    rm: &RMatrixData,
    candidates: &[Vector],
) -> Option<RibbonData> {
    let (u, _) = drinfeld_element(h, rm).ok()?;
    for g in candidates {
        if !h.is_grouplike(g) {
            continue;
        }
        let g_inv = h.algebra.inverse(g)?;
        let v = h.mul(&u, &g_inv);
        if let (_, Some(rib)) = verify_ribbon(h, rm, &v) {
            return Some(rib);
        }
    }
    None
}

/// Converts a file ribbon element to the engine convention `θ = v⁻¹`.
pub fn normalize_ribbon(h: &HopfData, element: &[CycloScalar], conv: RibbonConvention) -> Option<Vector> {
    match conv {
        RibbonConvention::ThetaVInv => Some(element.to_vec()),
        RibbonConvention::ThetaV => h.algebra.inverse(element),
    }
}

/// Permutation `V⊗W → W⊗V`.
pub fn flip_matrix(h: &HopfData, dv: usize, dw: usize) -> ExactMatrix {
    let f = h.field();
    let mut p = ExactMatrix::zeros(f, dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            p.set(j * dv + i, i * dw + j, f.one());
        }
    }
    p
}

/// `σ_{V,W}(v⊗w) = Σ b_s w ⊗ a_s v` for `R = Σ a_s⊗b_s`.
pub fn braiding_map(h: &HopfData, rm: &RMatrixData, v: &ModuleRep, w: &ModuleRep) -> ExactMatrix {
    flip_matrix(h, v.dim, w.dim).mul(&h.act2(v, w, &rm.r))
}

/// `σ_{V,W}⁻¹ : W⊗V → V⊗W`.
pub fn braiding_inverse_map(
    h: &HopfData,
    rm: &RMatrixData,
    v: &ModuleRep,
    w: &ModuleRep,
) -> ExactMatrix {
    h.act2(v, w, &rm.r_inverse).mul(&flip_matrix(h, w.dim, v.dim))
}

/// `θ_V` = action of `v⁻¹`.
pub fn twist_map(h: &HopfData, rib: &RibbonData, v: &ModuleRep) -> ExactMatrix {
    v.act(h.field(), &rib.v_inv)
}

/// True iff the monodromy with the regular module is trivial.
///
/// Acting on `x⊗1` in `V⊗H` gives `Σ ρ(m1)x ⊗ m2`; since `M` commutes with the
/// right regular action, it suffices that this equals `x⊗1` for every `x`.
pub fn is_transparent(h: &HopfData, m: &Tensor2, v: &ModuleRep) -> bool {
    let f = h.field();
    let n = h.dim();
    // Collect Σ ρ(m1) ⊗ m2 as a list of dim(V)² vectors in H.
    let d = v.dim;
    let mut blocks = vec![h.zero(); d * d];
    for ([a, b], c) in m.iter() {
        let act = &v.action[*a];
        for p in 0..d {
            for q in 0..d {
                let x = act.get(p, q);
                if !x.is_zero() {
                    blocks[p * d + q][*b] += &(x * c);
                }
            }
        }
    }
    let one = h.one();
    (0..d).all(|p| {
        (0..d).all(|q| {
            let want = if p == q { one.clone() } else { vec![f.zero(); n] };
            let diff: Vector = blocks[p * d + q]
                .iter()
                .zip(&want)
                .map(|(x, y)| x - y)
                .collect();
            is_zero_vec(&diff)
        })
    })
}

/// A grouplike `g` with `S²(h) = g h g⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct PivotalData {
    pub g: Vector,
    pub g_inv: Vector,
}

pub fn verify_pivotal(h: &HopfData, g: &[CycloScalar]) -> Verdict {
    if !h.is_grouplike(g) {
        return Verdict::fail("pivotal grouplike", "candidate is not grouplike");
    }
    let Some(g_inv) = h.algebra.inverse(g) else {
        return Verdict::fail("pivotal grouplike", "candidate is not invertible");
    };
    let s2 = h.antipode.mul(&h.antipode);
    let bad = (0..h.dim()).find(|&i| h.algebra.mul3(g, &h.basis(i), &g_inv) != s2.column(i));
    Verdict::from_bool("pivotal grouplike", bad.is_none(), || {
        format!("S²(e{}) != g e{} g⁻¹", bad.unwrap(), bad.unwrap())
    })
}

/// The pivotal element of the shipped ribbon, or else the first grouplike
/// candidate implementing `S²`.
pub fn pivotal_structure(h: &HopfData) -> Option<PivotalData> {
    if let (Some(rm), Some(rib)) = (&h.r_matrix, &h.ribbon) {
        let v = normalize_ribbon(h, &rib.element, rib.convention)?;
        if let (_, Some(data)) = verify_ribbon(h, rm, &v) {
            return Some(PivotalData {
                g: data.g,
                g_inv: data.g_inv,
            });
        }
    }
    h.grouplikes
        .iter()
        .find(|g| verify_pivotal(h, g).passed)
        .map(|g| PivotalData {
            g: g.clone(),
            g_inv: h.algebra.inverse(g).unwrap(),
        })
}

/// The verified ribbon structure shipped with `h`, if any.
pub fn ribbon_structure(h: &HopfData) -> Option<RibbonData> {
    let rm = h.r_matrix.as_ref()?;
    let rib = h.ribbon.as_ref()?;
    let v = normalize_ribbon(h, &rib.element, rib.convention)?;
    verify_ribbon(h, rm, &v).1
}
