//! Built-in examples: group algebras, Sweedler's algebra, and Drinfeld doubles,
//! each with simple modules, grouplike candidates and (where known) ribbons.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{unit_vec, zero_vec, AlgebraData, ModuleRep};
use crate::braided::{ribbon_from_grouplikes, RMatrixData, RibbonConvention};
use crate::coend::Coend;
use crate::error::{Error, Result};
use crate::hopf::{HopfData, RibbonInput};
use crate::matrix::{ExactMatrix, RowEchelon, Vector};
use crate::modular::nondegeneracy_report;
use crate::scalar::{CycloField, CycloScalar};
use crate::tensor::Tensor2;

/// Names accepted by [`generate`].
pub const EXAMPLE_NAMES: &[&str] = &[
    "trivial",
    "z2",
    "z3_braided",
    "z4",
    "s3",
    "sweedler_r0",
    "sweedler_r1",
    "double_z2",
    "double_s3",
    "double_sweedler",
];

/// Flags of an example, all derived by the engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleDescriptor {
    /// Key accepted by [`generate`].
    pub name: String,
    pub title: String,
    pub file: String,
    pub dim: usize,
    pub cyclotomic_order: usize,
    pub unimodular: bool,
    pub semisimple: bool,
    pub factorizable: bool,
    pub ribbon: bool,
    pub simples: Vec<String>,
}

pub fn describe(name: &str, h: &HopfData) -> Result<ExampleDescriptor> {
    let factorizable = match &h.r_matrix {
        Some(_) => nondegeneracy_report(&Coend::build(h)?).nondegenerate,
        None => false,
    };
    Ok(ExampleDescriptor {
        name: name.into(),
        title: h.name.clone(),
        file: format!("{name}.json"),
        dim: h.dim(),
        cyclotomic_order: h.field().order(),
        unimodular: h.is_unimodular()?,
        semisimple: h.algebra.is_semisimple(),
        factorizable,
        ribbon: h.ribbon.is_some(),
        simples: h.modules.iter().map(|m| m.name.clone()).collect(),
    })
}

pub fn generate(name: &str) -> Result<HopfData> {
    match name {
        "trivial" => trivial(),
        "z2" => cyclic_trivial_r(2, 1),
        "z3_braided" => z3_braided(),
        "z4" => cyclic_trivial_r(4, 4),
        "s3" => s3_algebra(),
        "sweedler_r0" => sweedler(0),
        "sweedler_r1" => sweedler(1),
        "double_z2" => double_z2(),
        "double_s3" => double_s3(),
        "double_sweedler" => double_sweedler(),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

/// A finite group by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("group element without inverse")
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn cyclic(n: usize) -> Self {
        FiniteGroup {
            labels: (0..n)
                .map(|i| match i {
                    0 => "1".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g{i}"),
                })
                .collect(),
            table: (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect(),
            identity: 0,
        }
    }

    /// `S₃` as permutations of `{0,1,2}`, in the order e, (12), (13), (23), (123), (132).
    pub fn s3() -> Self {
        let perms = Self::s3_perms();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        // (p∘q)(i) = p(q(i))
                        let r = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|s| *s == r).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup {
            labels: ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            table,
            identity: 0,
        }
    }

    fn s3_perms() -> [[usize; 3]; 6] {
        [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ]
    }
}

/// Group algebra `k[G]` with `Δg = g⊗g`, `S(g) = g⁻¹`.
pub fn group_algebra(name: &str, field: &Arc<CycloField>, g: &FiniteGroup) -> Result<HopfData> {
    let n = g.order();
    let mult = (0..n)
        .map(|a| (0..n).map(|b| vec![(g.mul(a, b), field.one())]).collect())
        .collect();
    let algebra = AlgebraData::new(field, mult, unit_vec(field, n, g.identity))?;
    let comult = (0..n)
        .map(|a| {
            let mut t = Tensor2::new();
            t.add_term([a, a], &field.one());
            t
        })
        .collect();
    let counit = vec![field.one(); n];
    let antipode = ExactMatrix::from_fn(field, n, n, |i, j| {
        if i == g.inv(j) {
            field.one()
        } else {
            field.zero()
        }
    });
    let mut h = HopfData::new(name, g.labels.clone(), algebra, comult, counit, antipode)?;
    h.grouplikes = (0..n).map(|a| h.basis(a)).collect();
    Ok(h)
}

/// One-dimensional modules of a group algebra from a character table row.
pub fn one_dim_module(name: &str, field: &Arc<CycloField>, values: Vec<CycloScalar>) -> ModuleRep {
    ModuleRep {
        name: name.into(),
        dim: 1,
        action: values
            .into_iter()
            .map(|v| ExactMatrix::from_fn(field, 1, 1, |_, _| v.clone()))
            .collect(),
    }
}

pub fn trivial() -> Result<HopfData> {
    let f = CycloField::new(1)?;
    let mut h = group_algebra("k", &f, &FiniteGroup::cyclic(1))?;
    h.r_matrix = Some(RMatrixData::trivial(&h));
    h.ribbon = Some(RibbonInput {
        element: h.one(),
        convention: RibbonConvention::ThetaVInv,
    });
    h.modules = vec![h.trivial_module()];
    Ok(h)
}

fn cyclic_characters(h: &HopfData, n: usize) -> Vec<ModuleRep> {
    let f = h.field();
    (0..n)
        .map(|k| {
            // ζ_n^k requires n | N; ±1 covers n = 2 over Q.
            let vals = (0..n).map(|a| root_of_unity(f, n, k * a)).collect();
            one_dim_module(&format!("chi{k}"), f, vals)
        })
        .collect()
}

/// `ζ_n^e` inside `Q(ζ_N)`; requires `n | N` or `n ≤ 2`.
pub fn root_of_unity(f: &Arc<CycloField>, n: usize, e: usize) -> CycloScalar {
    let e = e % n;
    if n == 2 || n == 1 {
        return if e == 0 { f.one() } else { f.from_int(-1) };
    }
    assert_eq!(f.order() % n, 0, "Q(ζ_{}) lacks ζ_{n}", f.order());
    f.zeta_pow((e * (f.order() / n)) as i64)
}

pub fn cyclic_trivial_r(n: usize, field_order: usize) -> Result<HopfData> {
    let f = CycloField::new(field_order)?;
    let mut h = group_algebra(&format!("Z{n}"), &f, &FiniteGroup::cyclic(n))?;
    h.r_matrix = Some(RMatrixData::trivial(&h));
    h.ribbon = Some(RibbonInput {
        element: h.one(),
        convention: RibbonConvention::ThetaVInv,
    });
    h.modules = cyclic_characters(&h, n);
    Ok(h)
}

/// `k[Z/3]` over `Q(ζ₁₂)` with `R = (1/3) Σ ζ₃^{-ab} g^a⊗g^b`; the larger
/// field holds `√3`, needed to normalize the integral of `F`.
pub fn z3_braided() -> Result<HopfData> {
    let f = CycloField::new(12)?;
    let mut h = group_algebra("Z3 braided", &f, &FiniteGroup::cyclic(3))?;
    let third = f.from_frac(1, 3);
    let mut r = Tensor2::new();
    for a in 0..3usize {
        for b in 0..3usize {
            let c = &third * &root_of_unity(&f, 3, 2 * a * b % 3);
            r.add_term([a, b], &c);
        }
    }
    let rm = RMatrixData::from_r(&h, r);
    h.modules = cyclic_characters(&h, 3);
    let rib = ribbon_from_grouplikes(&h, &rm, &h.grouplikes)
        .ok_or_else(|| Error::Verification("no ribbon for Z3".into()))?;
    h.ribbon = Some(RibbonInput {
        element: rib.v,
        convention: RibbonConvention::ThetaVInv,
    });
    h.r_matrix = Some(rm);
    Ok(h)
}

fn s3_simples(h: &HopfData) -> Vec<ModuleRep> {
    let f = h.field();
    let perms = FiniteGroup::s3_perms();
    let sign = |p: &[usize; 3]| {
        let inv = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let triv = one_dim_module("triv", f, vec![f.one(); 6]);
    let sgn = one_dim_module("sign", f, perms.iter().map(|p| f.from_int(sign(p))).collect());
    let std = ModuleRep {
        name: "std".into(),
        dim: 2,
        action: perms.iter().map(|p| standard_rep_matrix(f, p)).collect(),
    };
    vec![triv, sgn, std]
}

/// Standard representation on `{x ∈ Q³ : Σx = 0}` in the basis `e0−e1, e1−e2`.
fn standard_rep_matrix(f: &Arc<CycloField>, p: &[usize; 3]) -> ExactMatrix {
    let basis = [[1i64, -1, 0], [0, 1, -1]];
    let mut m = ExactMatrix::zeros(f, 2, 2);
    for (k, b) in basis.iter().enumerate() {
        let mut img = [0i64; 3];
        for i in 0..3 {
            img[p[i]] += b[i];
        }
        // coordinates: c1 = v0, c2 = -v2
        m.set(0, k, f.from_int(img[0]));
        m.set(1, k, f.from_int(-img[2]));
    }
    m
}

pub fn s3_algebra() -> Result<HopfData> {
    let f = CycloField::new(3)?;
    let mut h = group_algebra("S3", &f, &FiniteGroup::s3())?;
    h.r_matrix = Some(RMatrixData::trivial(&h));
    h.ribbon = Some(RibbonInput {
        element: h.one(),
        convention: RibbonConvention::ThetaVInv,
    });
    h.modules = s3_simples(&h);
    Ok(h)
}

/// Sweedler's algebra on `1, g, x, gx` (index `2b + a` for `g^a x^b`).
pub fn sweedler_base(f: &Arc<CycloField>) -> Result<HopfData> {
    let n = 4;
    let idx = |a: usize, b: usize| 2 * b + a;
    let mut mult = vec![vec![Vec::new(); n]; n];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b + d >= 2 {
                        continue;
                    }
                    // x^b g^c = (-1)^{bc} g^c x^b
                    let sign = if b * c % 2 == 1 { -1 } else { 1 };
                    mult[idx(a, b)][idx(c, d)] = vec![(idx((a + c) % 2, b + d), f.from_int(sign))];
                }
            }
        }
    }
    let algebra = AlgebraData::new(f, mult, unit_vec(f, n, 0))?;
    let one = f.one();
    let t = |pairs: &[(usize, usize)]| {
        let mut t = Tensor2::new();
        for &(a, b) in pairs {
            t.add_term([a, b], &one);
        }
        t
    };
    let comult = vec![
        t(&[(0, 0)]),
        t(&[(1, 1)]),
        t(&[(2, 0), (1, 2)]),
        t(&[(3, 1), (0, 3)]),
    ];
    let counit = vec![f.one(), f.one(), f.zero(), f.zero()];
    // S(1)=1, S(g)=g, S(x)=-gx, S(gx)=x; column i = S(e_i)
    let antipode = ExactMatrix::from_fn(f, n, n, |i, j| match (i, j) {
        (0, 0) | (1, 1) | (2, 3) => f.one(),
        (3, 2) => f.from_int(-1),
        _ => f.zero(),
    });
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let mut h = HopfData::new("H4", labels, algebra, comult, counit, antipode)?;
    h.grouplikes = vec![h.basis(0), h.basis(1)];
    h.modules = vec![
        one_dim_module("1", f, vec![f.one(), f.one(), f.zero(), f.zero()]),
        one_dim_module("sgn", f, vec![f.one(), f.from_int(-1), f.zero(), f.zero()]),
    ];
    Ok(h)
}

/// `R_α = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (α/2)(x⊗x − x⊗gx + gx⊗gx + gx⊗x)`.
pub fn sweedler_r(h: &HopfData, alpha: &CycloScalar) -> RMatrixData {
    let f = h.field();
    let half = f.from_frac(1, 2);
    let ha = &half * alpha;
    let mut r = Tensor2::new();
    r.add_term([0, 0], &half);
    r.add_term([0, 1], &half);
    r.add_term([1, 0], &half);
    r.add_term([1, 1], &(-&half));
    r.add_term([2, 2], &ha);
    r.add_term([2, 3], &(-&ha));
    r.add_term([3, 3], &ha);
    r.add_term([3, 2], &ha);
    RMatrixData::from_r(h, r)
}

pub fn sweedler(alpha: i64) -> Result<HopfData> {
    let f = CycloField::new(1)?;
    let mut h = sweedler_base(&f)?;
    h.name = format!("H4 R{alpha}");
    let rm = sweedler_r(&h, &f.from_int(alpha));
    if let Some(rib) = ribbon_from_grouplikes(&h, &rm, &h.grouplikes) {
        h.ribbon = Some(RibbonInput {
            element: rib.v,
            convention: RibbonConvention::ThetaVInv,
        });
    }
    h.r_matrix = Some(rm);
    Ok(h)
}

/// Builds a module from matrices of algebra generators by spanning words.
pub fn module_from_generators(
    h: &HopfData,
    name: &str,
    dim: usize,
    gens: &[(Vector, ExactMatrix)],
) -> Result<ModuleRep> {
    let f = h.field();
    let n = h.dim();
    let mut ech = RowEchelon::new(f, n);
    let mut found: Vec<(Vector, ExactMatrix)> = Vec::new();
    let mut queue = VecDeque::new();
    let start = (h.one(), ExactMatrix::identity(f, dim));
    ech.insert(start.0.clone());
    found.push(start.clone());
    queue.push_back(start);
    while let Some((w, m)) = queue.pop_front() {
        if found.len() == n {
            break;
        }
        for (y, my) in gens {
            let e = h.mul(&w, y);
            if ech.insert(e.clone()) {
                let mm = m.mul(my);
                found.push((e.clone(), mm.clone()));
                queue.push_back((e, mm));
            }
        }
    }
    if found.len() != n {
        return Err(Error::Verification(format!(
            "generators span only {} of {n} dimensions",
            found.len()
        )));
    }
    let cols: Vec<Vector> = found.iter().map(|(e, _)| e.clone()).collect();
    let emat = ExactMatrix::from_columns(f, n, &cols);
    let coords = emat
        .inverse()
        .ok_or_else(|| Error::Verification("word basis is singular".into()))?;
    let action = (0..n)
        .map(|i| {
            let mut acc = ExactMatrix::zeros(f, dim, dim);
            for (j, (_, m)) in found.iter().enumerate() {
                let c = coords.get(j, i);
                if !c.is_zero() {
                    acc = acc.add(&m.scale(c));
                }
            }
            acc
        })
        .collect();
    Ok(ModuleRep {
        name: name.into(),
        dim,
        action,
    })
}

/// Simple modules of `D(k[G])` induced from `(x0, π)` with `π` an irreducible
/// representation of the centralizer of `x0`.
pub fn double_group_simple(
    d: &HopfData,
    g: &FiniteGroup,
    name: &str,
    x0: usize,
    pi_dim: usize,
    pi: &dyn Fn(usize) -> ExactMatrix,
) -> Result<ModuleRep> {
    let f = d.field();
    let n = g.order();
    // conjugacy class of x0 and coset representatives
    let mut class: Vec<usize> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for r in 0..n {
        let c = g.conj(r, x0);
        if !class.contains(&c) {
            class.push(c);
            reps.push(r);
        }
    }
    let m = class.len();
    let dim = m * pi_dim;
    let mut gens = Vec::new();
    // δ_p ⊗ 1
    for p in 0..n {
        let mut mat = ExactMatrix::zeros(f, dim, dim);
        if let Some(i) = class.iter().position(|&c| c == p) {
            for w in 0..pi_dim {
                mat.set(i * pi_dim + w, i * pi_dim + w, f.one());
            }
        }
        gens.push((d.basis(p * n + g.identity), mat));
    }
    // ε ⊗ h
    for h in 0..n {
        let mut elem = zero_vec(f, n * n);
        for p in 0..n {
            elem[p * n + h] = f.one();
        }
        let mut mat = ExactMatrix::zeros(f, dim, dim);
        for i in 0..m {
            let target = g.conj(h, class[i]);
            let j = class.iter().position(|&c| c == target).unwrap();
            let z = g.mul(g.mul(g.inv(reps[j]), h), reps[i]);
            let pz = pi(z);
            for a in 0..pi_dim {
                for b in 0..pi_dim {
                    mat.set(j * pi_dim + a, i * pi_dim + b, pz.get(a, b).clone());
                }
            }
        }
        gens.push((elem, mat));
    }
    module_from_generators(d, name, dim, &gens)
}

fn scalar_matrix(f: &Arc<CycloField>, c: CycloScalar) -> ExactMatrix {
    ExactMatrix::from_fn(f, 1, 1, |_, _| c.clone())
}

fn attach_double_ribbon(d: &mut HopfData) -> Result<()> {
    let rm = d
        .r_matrix
        .clone()
        .ok_or_else(|| Error::MissingStructure("double without R".into()))?;
    let rib = ribbon_from_grouplikes(d, &rm, &d.grouplikes)
        .ok_or_else(|| Error::Verification(format!("no ribbon found for {}", d.name)))?;
    d.ribbon = Some(RibbonInput {
        element: rib.v,
        convention: RibbonConvention::ThetaVInv,
    });
    Ok(())
}

/// Grouplikes `χ ⊗ g` of `D(k[G])` for the trivial character and every `g`.
fn double_group_grouplikes(d: &HopfData, g: &FiniteGroup) -> Vec<Vector> {
    let f = d.field();
    let n = g.order();
    (0..n)
        .map(|h| {
            let mut e = zero_vec(f, n * n);
            for p in 0..n {
                e[p * n + h] = f.one();
            }
            e
        })
        .collect()
}

pub fn double_z2() -> Result<HopfData> {
    let f = CycloField::new(1)?;
    let g = FiniteGroup::cyclic(2);
    let base = group_algebra("Z2", &f, &g)?;
    let mut d = base.drinfeld_double()?;
    d.name = "D(Z2)".into();
    d.grouplikes = double_group_grouplikes(&d, &g);
    let mut mods = Vec::new();
    for x0 in 0..2 {
        for s in 0..2usize {
            let sign = if s == 0 { f.one() } else { f.from_int(-1) };
            let pi = |z: usize| {
                if z == 0 {
                    scalar_matrix(&f, f.one())
                } else {
                    scalar_matrix(&f, sign.clone())
                }
            };
            mods.push(double_group_simple(&d, &g, &format!("({x0},{})", if s == 0 { "+" } else { "-" }), x0, 1, &pi)?);
        }
    }
    d.modules = mods;
    attach_double_ribbon(&mut d)?;
    Ok(d)
}

pub fn double_s3() -> Result<HopfData> {
    let f = CycloField::new(3)?;
    let g = FiniteGroup::s3();
    let base = group_algebra("S3", &f, &g)?;
    let mut d = base.drinfeld_double()?;
    d.name = "D(S3)".into();
    d.grouplikes = double_group_grouplikes(&d, &g);
    let s3m = s3_simples(&base);
    let mut mods = Vec::new();
    for v in &s3m {
        let pi = |z: usize| v.action[z].clone();
        mods.push(double_group_simple(&d, &g, &format!("(e,{})", v.name), 0, v.dim, &pi)?);
    }
    // centralizer of (12) is {e, (12)}
    let t = 1;
    for (nm, sgn) in [("+", 1i64), ("-", -1)] {
        let pi = |z: usize| {
            let c = if z == t { f.from_int(sgn) } else { f.one() };
            scalar_matrix(&f, c)
        };
        mods.push(double_group_simple(&d, &g, &format!("((12),{nm})"), t, 1, &pi)?);
    }
    // centralizer of (123) is {e, (123), (132)}
    let c3 = 4;
    for k in 0..3usize {
        let pi = |z: usize| {
            let e = match z {
                0 => 0,
                4 => k,
                5 => 2 * k,
                _ => panic!("element outside the centralizer"),
            };
            scalar_matrix(&f, root_of_unity(&f, 3, e))
        };
        mods.push(double_group_simple(&d, &g, &format!("((123),w{k})"), c3, 1, &pi)?);
    }
    d.modules = mods;
    attach_double_ribbon(&mut d)?;
    Ok(d)
}

/// Over `Q(i)`, which holds the square root needed to normalize the integral of `F`.
pub fn double_sweedler() -> Result<HopfData> {
    double_sweedler_over(4)
}

/// `D(H₄)` with simples built from the generators `g, x` of `H₄` and
/// `G = e^1 − e^g`, `X = e^x + e^{gx}` of the dual.
///
/// No ribbon element exists: every grouplike squares to 1 while `u S(u)⁻¹ ≠ 1`.
/// The pivotal grouplikes `g` and `G` are shipped as candidates.
pub fn double_sweedler_over(field_order: usize) -> Result<HopfData> {
    let f = CycloField::new(field_order)?;
    let base = sweedler_base(&f)?;
    let mut d = base.drinfeld_double()?;
    d.name = "D(H4)".into();
    let n = 4;
    let elem = |terms: &[(usize, usize, i64)]| {
        let mut e = zero_vec(&f, 16);
        for &(p, a, c) in terms {
            e[p * n + a] += &f.from_int(c);
        }
        e
    };
    let one_h = |a: usize| elem(&[(0, a, 1), (1, a, 1)]);
    let g = one_h(1);
    let x = one_h(2);
    let big_g = elem(&[(0, 0, 1), (1, 0, -1)]);
    let big_x = elem(&[(2, 0, 1), (3, 0, 1)]);
    d.grouplikes = vec![
        d.one(),
        g.clone(),
        big_g.clone(),
        d.mul(&big_g, &g),
    ];
    let m = |rows: &[&[i64]]| {
        let cols = rows[0].len();
        ExactMatrix::from_rows(
            &f,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| f.from_int(v)).collect())
                .collect(),
        )
    };
    let mut mods = Vec::new();
    for (nm, s) in [("1", 1i64), ("sgn", -1)] {
        let gens = vec![
            (g.clone(), m(&[&[s]])),
            (big_g.clone(), m(&[&[s]])),
            (x.clone(), m(&[&[0]])),
            (big_x.clone(), m(&[&[0]])),
        ];
        mods.push(module_from_generators(&d, nm, 1, &gens)?);
    }
    for (nm, l) in [("P+", 1i64), ("P-", -1)] {
        let gm = m(&[&[l, 0], &[0, -l]]);
        let gens = vec![
            (g.clone(), gm.clone()),
            (big_g.clone(), gm.scale(&f.from_int(-1))),
            (x.clone(), m(&[&[0, 2], &[0, 0]])),
            (big_x.clone(), m(&[&[0, 0], &[1, 0]])),
        ];
        mods.push(module_from_generators(&d, nm, 2, &gens)?);
    }
    d.modules = mods;
    Ok(d)
}
