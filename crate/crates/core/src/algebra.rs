//! Associative algebras by structure constants and their modules.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::matrix::{span_rank, ExactMatrix, RowEchelon, Vector};
use crate::scalar::{CycloField, CycloScalar};
use crate::verdict::{Suite, Verdict};

pub type SparseVec = Vec<(usize, CycloScalar)>;

pub fn to_sparse(v: &[CycloScalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn zero_vec(field: &Arc<CycloField>, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: &Arc<CycloField>, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn add_vec(a: &[CycloScalar], b: &[CycloScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[CycloScalar], b: &[CycloScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &[CycloScalar], c: &CycloScalar) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn dot(a: &[CycloScalar], b: &[CycloScalar]) -> CycloScalar {
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// `out += c · v`
pub fn axpy(out: &mut [CycloScalar], c: &CycloScalar, v: &[CycloScalar]) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += &(c * x);
        }
    }
}

pub fn is_zero_vec(v: &[CycloScalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// A finite-dimensional algebra with basis `e_0, …, e_{n-1}`.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub field: Arc<CycloField>,
    pub dim: usize,
    /// `mult[i][j]` holds the nonzero `c_{ij}^k` of `e_i e_j`.
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: Vector,
}

impl AlgebraData {
    pub fn new(field: &Arc<CycloField>, mult: Vec<Vec<SparseVec>>, unit: Vector) -> Result<Self> {
        let dim = unit.len();
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension(format!(
                "multiplication table is not {dim}x{dim}"
            )));
        }
        Ok(AlgebraData {
            field: Arc::clone(field),
            dim,
            mult,
            unit,
        })
    }

    pub fn zero(&self) -> Vector {
        zero_vec(&self.field, self.dim)
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn scalar(&self, c: &CycloScalar) -> Vector {
        scale_vec(&self.unit, c)
    }

    pub fn mul(&self, a: &[CycloScalar], b: &[CycloScalar]) -> Vector {
        self.mul_sparse(&to_sparse(a), &to_sparse(b))
    }

    pub fn mul_sparse(&self, a: &SparseVec, b: &SparseVec) -> Vector {
        let mut out = self.zero();
        for (i, x) in a {
            for (j, y) in b {
                let c = x * y;
                for (k, s) in &self.mult[*i][*j] {
                    out[*k] += &(&c * s);
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = self.zero();
        for (k, s) in &self.mult[i][j] {
            out[*k] = s.clone();
        }
        out
    }

    pub fn mul3(&self, a: &[CycloScalar], b: &[CycloScalar], c: &[CycloScalar]) -> Vector {
        self.mul(&self.mul(a, b), c)
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[CycloScalar]) -> ExactMatrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        ExactMatrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[CycloScalar]) -> ExactMatrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        ExactMatrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn pow(&self, a: &[CycloScalar], e: u32) -> Vector {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Two-sided inverse, if any.
    pub fn inverse(&self, a: &[CycloScalar]) -> Option<Vector> {
        let x = self.left_mult_matrix(a).solve_vec(&self.unit)?;
        if self.mul(&x, a) == self.unit {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_central(&self, z: &[CycloScalar]) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis(i);
            self.mul(z, &b) == self.mul(&b, z)
        })
    }

    /// Associativity and unit laws.
    pub fn verify(&self) -> Suite {
        let mut s = Suite::new();
        let n = self.dim;
        let mut witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let ek = vec![(k, self.field.one())];
                    let ei = vec![(i, self.field.one())];
                    let l = self.mul_sparse(ij, &ek);
                    let r = self.mul_sparse(&ei, &self.mult[j][k]);
                    if l != r {
                        witness = Some(format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})"));
                        break 'outer;
                    }
                }
            }
        }
        s.push(match witness {
            None => Verdict::pass("associativity"),
            Some(w) => Verdict::fail("associativity", w),
        });
        let bad_unit = (0..n).find(|&i| {
            let b = self.basis(i);
            self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
        });
        s.push(Verdict::from_bool("unit", bad_unit.is_none(), || {
            format!("unit law fails on e{}", bad_unit.unwrap())
        }));
        s
    }

    /// Basis of the center, as the kernel of all commutators with basis elements.
    pub fn center_basis(&self) -> Vec<Vector> {
        let n = self.dim;
        let mut ech = RowEchelon::new(&self.field, n);
        // Unknown z = Σ z_i e_i; equation [z, e_j]_k = 0.
        for j in 0..n {
            let mut rows = vec![zero_vec(&self.field, n); n];
            for i in 0..n {
                for (k, c) in &self.mult[i][j] {
                    rows[*k][i] += c;
                }
                for (k, c) in &self.mult[j][i] {
                    rows[*k][i] -= c;
                }
            }
            for r in rows {
                ech.insert(r);
            }
        }
        ech.kernel()
    }

    /// `tr(L_{e_k})` for each basis element.
    fn regular_traces(&self) -> Vector {
        (0..self.dim)
            .map(|k| {
                let mut t = self.field.zero();
                for i in 0..self.dim {
                    for (m, c) in &self.mult[k][i] {
                        if *m == i {
                            t += c;
                        }
                    }
                }
                t
            })
            .collect()
    }

    /// Jacobson radical as the kernel of the trace form `T(x,y) = tr(L_{xy})`.
    pub fn trace_radical(&self) -> Vec<Vector> {
        let n = self.dim;
        let tr = self.regular_traces();
        let form = ExactMatrix::from_fn(&self.field, n, n, |i, j| {
            let mut t = self.field.zero();
            for (k, c) in &self.mult[i][j] {
                t += &(c * &tr[*k]);
            }
            t
        });
        form.kernel()
    }

    /// A small set of basis indices generating the algebra, chosen greedily.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.dim;
        let mut gens: Vec<usize> = Vec::new();
        let mut span = RowEchelon::new(&self.field, n);
        span.insert(self.unit.clone());
        for i in 0..n {
            if span.contains(&self.basis(i)) {
                continue;
            }
            gens.push(i);
            // close the span under right multiplication by the generators
            let mut frontier: Vec<Vector> = span.basis().to_vec();
            frontier.push(self.basis(i));
            span.insert(self.basis(i));
            while let Some(w) = frontier.pop() {
                for &g in &gens {
                    let p = self.mul(&w, &self.basis(g));
                    if span.insert(p.clone()) {
                        frontier.push(p);
                    }
                }
            }
            if span.rank() == n {
                break;
            }
        }
        gens
    }

    pub fn is_semisimple(&self) -> bool {
        self.trace_radical().is_empty()
    }

    pub fn regular_module(&self) -> ModuleRep {
        let action = (0..self.dim)
            .map(|i| self.left_mult_matrix(&self.basis(i)))
            .collect();
        ModuleRep {
            name: "regular".into(),
            dim: self.dim,
            action,
        }
    }
}

/// A left module given by one matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleRep {
    pub name: String,
    pub dim: usize,
    pub action: Vec<ExactMatrix>,
}

impl ModuleRep {
    /// Action matrix of an arbitrary element.
    pub fn act(&self, field: &Arc<CycloField>, x: &[CycloScalar]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(field, self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.action[i].scale(c));
        }
        out
    }

    /// Character `e_i ↦ tr ρ(e_i)`.
    pub fn character(&self, field: &Arc<CycloField>) -> Vector {
        if self.dim == 0 {
            return zero_vec(field, self.action.len());
        }
        self.action.iter().map(|m| m.trace()).collect()
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> ModuleRep {
        ModuleRep {
            name: format!("{}+{}", self.name, other.name),
            dim: self.dim + other.dim,
            action: self
                .action
                .iter()
                .zip(&other.action)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

pub fn verify_module(alg: &AlgebraData, v: &ModuleRep) -> Verdict {
    let name = format!("module {}", v.name);
    if v.action.len() != alg.dim {
        return Verdict::fail(name, format!("{} matrices for dim {}", v.action.len(), alg.dim));
    }
    if let Some(i) = v
        .action
        .iter()
        .position(|m| m.rows() != v.dim || m.cols() != v.dim)
    {
        return Verdict::fail(name, format!("matrix for e{i} has wrong shape"));
    }
    if v.dim == 0 {
        return Verdict::pass(name);
    }
    if !v.act(&alg.field, &alg.unit).is_identity() {
        return Verdict::fail(name, "unit does not act as identity");
    }
    for a in 0..alg.dim {
        for b in 0..alg.dim {
            let lhs = v.action[a].mul(&v.action[b]);
            let rhs = v.act(&alg.field, &alg.mul_basis(a, b));
            if lhs != rhs {
                return Verdict::fail(name, format!("ρ(e{a})ρ(e{b}) != ρ(e{a}e{b})"));
            }
        }
    }
    Verdict::pass(name)
}

/// Basis of `Hom_A(V, W)` as `dim W × dim V` matrices.
pub fn hom_space(alg: &AlgebraData, v: &ModuleRep, w: &ModuleRep) -> Vec<ExactMatrix> {
    let (dv, dw) = (v.dim, w.dim);
    let nvar = dv * dw;
    if nvar == 0 {
        return Vec::new();
    }
    let f = &alg.field;
    let mut ech = RowEchelon::new(f, nvar);
    // T[p][q] is variable p*dv+q; equation (T ρ_V(a) - ρ_W(a) T)[p][r] = 0.
    for a in 0..alg.dim {
        let rv = &v.action[a];
        let rw = &w.action[a];
        for p in 0..dw {
            for r in 0..dv {
                let mut row = zero_vec(f, nvar);
                for q in 0..dv {
                    let c = rv.get(q, r);
                    if !c.is_zero() {
                        row[p * dv + q] += c;
                    }
                }
                for s in 0..dw {
                    let c = rw.get(p, s);
                    if !c.is_zero() {
                        row[s * dv + r] -= c;
                    }
                }
                ech.insert(row);
            }
        }
    }
    ech.kernel()
        .into_iter()
        .map(|k| ExactMatrix::from_fn(f, dw, dv, |p, q| k[p * dv + q].clone()))
        .collect()
}

/// Spin test plus one-dimensional endomorphism ring.
pub fn is_simple_split(alg: &AlgebraData, v: &ModuleRep) -> Verdict {
    let name = format!("simple {}", v.name);
    if v.dim == 0 {
        return Verdict::fail(name, "zero module");
    }
    let f = &alg.field;
    for i in 0..v.dim {
        let e = unit_vec(f, v.dim, i);
        let orbit: Vec<Vector> = v.action.iter().map(|m| m.mul_vec(&e)).collect();
        if span_rank(f, v.dim, &orbit) != v.dim {
            return Verdict::fail(name, format!("A·v{i} is a proper submodule"));
        }
    }
    let end = hom_space(alg, v, v).len();
    Verdict::from_bool(name, end == 1, || format!("dim End = {end}"))
}

/// Checks simplicity, pairwise non-isomorphism and completeness.
pub fn verify_simple_list(alg: &AlgebraData, simples: &[ModuleRep]) -> Suite {
    let mut s = Suite::new();
    for v in simples {
        s.push(verify_module(alg, v));
        s.push(is_simple_split(alg, v));
    }
    let mut clash = None;
    'outer: for i in 0..simples.len() {
        for j in 0..simples.len() {
            if i != j && !hom_space(alg, &simples[i], &simples[j]).is_empty() {
                clash = Some((i, j));
                break 'outer;
            }
        }
    }
    s.push(Verdict::from_bool("simples pairwise non-isomorphic", clash.is_none(), || {
        let (i, j) = clash.unwrap();
        format!("Hom({}, {}) != 0", simples[i].name, simples[j].name)
    }));
    let sum: usize = simples.iter().map(|v| v.dim * v.dim).sum();
    let target = alg.dim - alg.trace_radical().len();
    s.push(Verdict::from_bool("simples complete", sum == target, || {
        format!("sum of d^2 = {sum}, dim A - dim rad = {target}")
    }));
    s
}

/// Composition multiplicities of `m` in terms of the simples, via characters.
pub fn composition_multiplicities(
    alg: &AlgebraData,
    simples: &[ModuleRep],
    m: &ModuleRep,
) -> Result<Vec<usize>> {
    let f = &alg.field;
    let chars: Vec<Vector> = simples.iter().map(|v| v.character(f)).collect();
    let a = ExactMatrix::from_columns(f, alg.dim, &chars);
    let target = m.character(f);
    let sol = a
        .solve_vec(&target)
        .ok_or_else(|| Error::Verification(format!("character of {} not in span of simples", m.name)))?;
    let mut out = Vec::with_capacity(sol.len());
    for (k, x) in sol.iter().enumerate() {
        let n: BigInt = x.as_integer().ok_or_else(|| {
            Error::Verification(format!(
                "non-integer multiplicity {x} of {} in {}",
                simples[k].name, m.name
            ))
        })?;
        if n.is_negative() {
            return Err(Error::Verification(format!(
                "negative multiplicity of {} in {}",
                simples[k].name, m.name
            )));
        }
        out.push(n.to_usize().expect("small multiplicity"));
    }
    let total: usize = out.iter().zip(simples).map(|(k, v)| k * v.dim).sum();
    if total != m.dim {
        return Err(Error::Verification(format!(
            "multiplicities of {} give dimension {total}, expected {}",
            m.name, m.dim
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group_z(f: &Arc<CycloField>, n: usize) -> AlgebraData {
        let mult = (0..n)
            .map(|i| (0..n).map(|j| vec![((i + j) % n, f.one())]).collect())
            .collect();
        AlgebraData::new(f, mult, unit_vec(f, n, 0)).unwrap()
    }

    fn dual_numbers(f: &Arc<CycloField>) -> AlgebraData {
        // basis 1, t with t^2 = 0
        let mult = vec![
            vec![vec![(0, f.one())], vec![(1, f.one())]],
            vec![vec![(1, f.one())], vec![]],
        ];
        AlgebraData::new(f, mult, unit_vec(f, 2, 0)).unwrap()
    }

    fn matrix_algebra(f: &Arc<CycloField>) -> AlgebraData {
        // E_ab with index 2a+b
        let mut mult = vec![vec![Vec::new(); 4]; 4];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        if b == c {
                            mult[2 * a + b][2 * c + d] = vec![(2 * a + d, f.one())];
                        }
                    }
                }
            }
        }
        let mut unit = zero_vec(f, 4);
        unit[0] = f.one();
        unit[3] = f.one();
        AlgebraData::new(f, mult, unit).unwrap()
    }

    fn sign_rep(f: &Arc<CycloField>) -> ModuleRep {
        ModuleRep {
            name: "sign".into(),
            dim: 1,
            action: vec![
                ExactMatrix::identity(f, 1),
                ExactMatrix::identity(f, 1).scale(&f.from_int(-1)),
            ],
        }
    }

    #[test]
    fn verify_examples() {
        let f = CycloField::new(1).unwrap();
        let q = AlgebraData::new(&f, vec![vec![vec![(0, f.one())]]], vec![f.one()]).unwrap();
        assert!(q.verify().passed());
        let mut z2 = group_z(&f, 2);
        assert!(z2.verify().passed());
        z2.mult[1][0] = vec![(0, f.one())];
        let s = z2.verify();
        assert!(!s.passed());
        assert!(s.first_failure().unwrap().witness.is_some());
    }

    #[test]
    fn center_examples() {
        let f = CycloField::new(1).unwrap();
        assert_eq!(group_z(&f, 3).center_basis().len(), 3);
        assert_eq!(matrix_algebra(&f).center_basis().len(), 1);
    }

    #[test]
    fn radical_examples() {
        let f = CycloField::new(1).unwrap();
        assert!(group_z(&f, 4).trace_radical().is_empty());
        let d = dual_numbers(&f);
        let rad = d.trace_radical();
        assert_eq!(rad.len(), 1);
        let l = d.left_mult_matrix(&rad[0]);
        assert!(l.pow(2).is_zero());
    }

    #[test]
    fn simple_and_multiplicities() {
        let f = CycloField::new(1).unwrap();
        let z2 = group_z(&f, 2);
        let triv = ModuleRep {
            name: "triv".into(),
            dim: 1,
            action: vec![ExactMatrix::identity(&f, 1), ExactMatrix::identity(&f, 1)],
        };
        let sign = sign_rep(&f);
        assert!(is_simple_split(&z2, &sign).passed);
        let reg = z2.regular_module();
        assert!(verify_module(&z2, &reg).passed);
        assert!(!is_simple_split(&z2, &reg).passed);
        let both = vec![triv.clone(), sign.clone()];
        assert!(verify_simple_list(&z2, &both).passed());
        assert!(!verify_simple_list(&z2, &both[..1]).passed());
        assert_eq!(composition_multiplicities(&z2, &both, &reg).unwrap(), vec![1, 1]);
        assert_eq!(composition_multiplicities(&z2, &both, &sign).unwrap(), vec![0, 1]);
        let sum = triv.direct_sum(&sign).direct_sum(&sign);
        assert_eq!(composition_multiplicities(&z2, &both, &sum).unwrap(), vec![1, 2]);
        let zero = ModuleRep {
            name: "0".into(),
            dim: 0,
            action: vec![ExactMatrix::zeros(&f, 0, 0); 2],
        };
        assert!(verify_module(&z2, &zero).passed);
    }

    #[test]
    fn broken_module_is_caught() {
        let f = CycloField::new(1).unwrap();
        let z2 = group_z(&f, 2);
        let mut bad = sign_rep(&f);
        bad.action[1] = ExactMatrix::identity(&f, 1).scale(&f.from_int(2));
        assert!(!verify_module(&z2, &bad).passed);
    }
}
