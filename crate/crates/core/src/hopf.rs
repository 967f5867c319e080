//! Hopf algebras by structure constants: axioms, duals, integrals, doubles,
//! and the tensor/dual structure of their module categories.

use std::sync::Arc;

use crate::algebra::{
    axpy, dot, is_zero_vec, to_sparse, unit_vec, verify_module, zero_vec, AlgebraData, ModuleRep,
    SparseVec,
};
use crate::braided::{RMatrixData, RibbonConvention};
use crate::error::{Error, Result};
use crate::matrix::{same_span, ExactMatrix, RowEchelon, Vector};
use crate::scalar::{CycloField, CycloScalar};
use crate::tensor::{Tensor, Tensor2, Tensor3};
use crate::verdict::{Suite, Verdict};

/// A ribbon element as it appears in an input file.
#[derive(Clone, Debug, PartialEq)]
pub struct RibbonInput {
    pub element: Vector,
    pub convention: RibbonConvention,
}

#[derive(Clone, Debug)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub algebra: AlgebraData,
    /// `comult[i] = Δ(e_i)`.
    pub comult: Vec<Tensor2>,
    pub counit: Vector,
    /// Column `i` is `S(e_i)`.
    pub antipode: ExactMatrix,
    pub r_matrix: Option<RMatrixData>,
    pub ribbon: Option<RibbonInput>,
    pub grouplikes: Vec<Vector>,
    pub modules: Vec<ModuleRep>,
    antipode_inv: Option<ExactMatrix>,
}

/// Integrals and cointegrals of a Hopf algebra.
#[derive(Clone, Debug)]
pub struct IntegralData {
    pub left_integrals: Vec<Vector>,
    pub right_integrals: Vec<Vector>,
    /// Functionals `λ` with `(id⊗λ)Δ(x) = λ(x)1`.
    pub left_cointegrals: Vec<Vector>,
    /// Functionals `λ` with `(λ⊗id)Δ(x) = λ(x)1`.
    pub right_cointegrals: Vec<Vector>,
    /// `t·h = α(h)·t` for the left integral `t`.
    pub alpha: Vector,
}

/// Dual module together with its evaluation and coevaluation.
#[derive(Clone, Debug)]
pub struct DualModule {
    pub module: ModuleRep,
    /// `V*⊗V → k`, a `1 × d²` matrix.
    pub ev: ExactMatrix,
    /// `k → V⊗V*`, a `d² × 1` matrix.
    pub coev: ExactMatrix,
    pub checks: Suite,
}

impl HopfData {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        algebra: AlgebraData,
        comult: Vec<Tensor2>,
        counit: Vector,
        antipode: ExactMatrix,
    ) -> Result<Self> {
        let n = algebra.dim;
        if comult.len() != n || counit.len() != n {
            return Err(Error::Dimension("comultiplication/counit size".into()));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Dimension("antipode must be n x n".into()));
        }
        if labels.len() != n {
            return Err(Error::Dimension("basis labels".into()));
        }
        let antipode_inv = antipode.inverse();
        Ok(HopfData {
            name: name.into(),
            labels,
            algebra,
            comult,
            counit,
            antipode,
            r_matrix: None,
            ribbon: None,
            grouplikes: Vec::new(),
            modules: Vec::new(),
            antipode_inv,
        })
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn zero(&self) -> Vector {
        self.algebra.zero()
    }

    pub fn one(&self) -> Vector {
        self.algebra.one()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.algebra.basis(i)
    }

    pub fn mul(&self, a: &[CycloScalar], b: &[CycloScalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn comult_of(&self, x: &[CycloScalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                t.add_scaled(&self.comult[i], c);
            }
        }
        t
    }

    pub fn counit_of(&self, x: &[CycloScalar]) -> CycloScalar {
        dot(&self.counit, x)
    }

    pub fn antipode_of(&self, x: &[CycloScalar]) -> Vector {
        self.antipode.mul_vec(x)
    }

    pub fn antipode_inverse(&self) -> Option<&ExactMatrix> {
        self.antipode_inv.as_ref()
    }

    pub fn antipode_inv_of(&self, x: &[CycloScalar]) -> Vector {
        self.antipode_inv
            .as_ref()
            .expect("antipode is not invertible")
            .mul_vec(x)
    }

    /// `a ⊗ b` as a sparse tensor.
    pub fn pure2(&self, a: &[CycloScalar], b: &[CycloScalar]) -> Tensor2 {
        Tensor::from_pure([a, b])
    }

    pub fn one2(&self) -> Tensor2 {
        self.pure2(&self.one(), &self.one())
    }

    /// Componentwise product in `H^{⊗K}`.
    pub fn mul_t<const K: usize>(&self, x: &Tensor<K>, y: &Tensor<K>) -> Tensor<K> {
        let mut out = Tensor::new();
        for (kx, cx) in x.iter() {
            for (ky, cy) in y.iter() {
                let c = cx * cy;
                let factors: Vec<&SparseVec> =
                    (0..K).map(|d| &self.algebra.mult[kx[d]][ky[d]]).collect();
                let mut key = [0usize; K];
                expand(&factors, 0, &mut key, c, &mut out);
            }
        }
        out
    }

    /// `Σ c · f(e_a) ⊗ g(e_b)` for linear maps given on basis vectors.
    pub fn map2(
        &self,
        t: &Tensor2,
        f: impl Fn(usize) -> Vector,
        g: impl Fn(usize) -> Vector,
    ) -> Tensor2 {
        let mut out = Tensor2::new();
        for ([a, b], c) in t.iter() {
            let fa = f(*a);
            let gb = g(*b);
            out.add_scaled(&self.pure2(&fa, &gb), c);
        }
        out
    }

    /// Splits a tensor into a short sum `Σ_s a_s ⊗ b_s` using a rank factorization.
    pub fn factor2(&self, t: &Tensor2) -> Vec<(Vector, Vector)> {
        let n = self.dim();
        let f = self.field();
        let rows = t.to_rows(&f.zero(), n);
        let c = ExactMatrix::from_rows(f, n, rows);
        let (r, piv) = c.rref();
        piv.iter()
            .enumerate()
            .map(|(s, &p)| (c.column(p), r.row(s).to_vec()))
            .collect()
    }

    /// `(Δ⊗id)` applied to a two-tensor.
    pub fn comult_left(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for ([a, b], c) in t.iter() {
            for ([x, y], d) in self.comult[*a].iter() {
                out.add_term([*x, *y, *b], &(c * d));
            }
        }
        out
    }

    /// `(id⊗Δ)` applied to a two-tensor.
    pub fn comult_right(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for ([a, b], c) in t.iter() {
            for ([x, y], d) in self.comult[*b].iter() {
                out.add_term([*a, *x, *y], &(c * d));
            }
        }
        out
    }

    /// Embeds a two-tensor into `H^{⊗3}` at the given slots, with `1` elsewhere.
    pub fn embed3(&self, t: &Tensor2, slots: (usize, usize)) -> Tensor3 {
        let mut out = Tensor3::new();
        let unit = to_sparse(&self.algebra.unit);
        let other = 3 - slots.0 - slots.1;
        for ([a, b], c) in t.iter() {
            for (u, cu) in &unit {
                let mut key = [0usize; 3];
                key[slots.0] = *a;
                key[slots.1] = *b;
                key[other] = *u;
                out.add_term(key, &(c * cu));
            }
        }
        out
    }

    pub fn is_grouplike(&self, g: &[CycloScalar]) -> bool {
        self.comult_of(g) == self.pure2(g, g)
            && self.counit_of(g).is_one()
            && self.algebra.inverse(g).is_some()
    }

    /// All Hopf axioms, algebra axioms included.
    pub fn verify(&self) -> Suite {
        let mut s = self.algebra.verify();
        let n = self.dim();
        let f = self.field();
        let one = f.one();

        let bad = (0..n).find(|&i| {
            let d = &self.comult[i];
            self.comult_left(d) != self.comult_right(d)
        });
        s.push(Verdict::from_bool("coassociativity", bad.is_none(), || {
            format!("(Δ⊗id)Δ(e{0}) != (id⊗Δ)Δ(e{0})", bad.unwrap())
        }));

        let bad = (0..n).find(|&i| {
            let mut l = zero_vec(f, n);
            let mut r = zero_vec(f, n);
            for ([a, b], c) in self.comult[i].iter() {
                l[*b] += &(c * &self.counit[*a]);
                r[*a] += &(c * &self.counit[*b]);
            }
            l != self.basis(i) || r != self.basis(i)
        });
        s.push(Verdict::from_bool("counit", bad.is_none(), || {
            format!("counit law fails on e{}", bad.unwrap())
        }));

        let mut witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ab = self.algebra.mul_basis(i, j);
                if self.comult_of(&ab) != self.mul_t(&self.comult[i], &self.comult[j]) {
                    witness = Some(format!("Δ(e{i}e{j}) != Δ(e{i})Δ(e{j})"));
                    break 'outer;
                }
                if self.counit_of(&ab) != &self.counit[i] * &self.counit[j] {
                    witness = Some(format!("ε(e{i}e{j}) != ε(e{i})ε(e{j})"));
                    break 'outer;
                }
            }
        }
        if witness.is_none() && self.comult_of(&self.one()) != self.one2() {
            witness = Some("Δ(1) != 1⊗1".into());
        }
        if witness.is_none() && !self.counit_of(&self.one()).is_one() {
            witness = Some("ε(1) != 1".into());
        }
        s.push(match witness {
            None => Verdict::pass("comultiplication and counit are algebra maps"),
            Some(w) => Verdict::fail("comultiplication and counit are algebra maps", w),
        });

        let bad = (0..n).find(|&i| {
            let mut l = self.zero();
            let mut r = self.zero();
            for ([a, b], c) in self.comult[i].iter() {
                let sa = self.antipode.column(*a);
                let sb = self.antipode.column(*b);
                axpy(&mut l, c, &self.mul(&sa, &self.basis(*b)));
                axpy(&mut r, c, &self.mul(&self.basis(*a), &sb));
            }
            let e = self.algebra.scalar(&(&self.counit[i] * &one));
            l != e || r != e
        });
        s.push(Verdict::from_bool("antipode", bad.is_none(), || {
            format!("S(a1)a2 = ε(a)1 = a1S(a2) fails on e{}", bad.unwrap())
        }));
        s.push(Verdict::from_bool(
            "antipode invertible",
            self.antipode_inv.is_some(),
            || "antipode matrix is singular".into(),
        ));
        s
    }

    /// The dual Hopf algebra on the dual basis `e^i`.
    pub fn dual(&self) -> Result<HopfData> {
        let n = self.dim();
        let f = self.field();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for k in 0..n {
            for ([i, j], c) in self.comult[k].iter() {
                mult[*i][*j].push((k, c.clone()));
            }
        }
        let algebra = AlgebraData::new(f, mult, self.counit.clone())?;
        let mut comult = vec![Tensor2::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.algebra.mult[i][j] {
                    comult[*k].add_term([i, j], c);
                }
            }
        }
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        HopfData::new(
            format!("{}*", self.name),
            labels,
            algebra,
            comult,
            self.algebra.unit.clone(),
            self.antipode.transpose(),
        )
    }

    pub fn integrals(&self) -> Result<IntegralData> {
        let n = self.dim();
        let f = self.field();
        let solve_integral = |left: bool| {
            let mut ech = RowEchelon::new(f, n);
            for h in 0..n {
                let b = self.basis(h);
                let m = if left {
                    self.algebra.left_mult_matrix(&b)
                } else {
                    self.algebra.right_mult_matrix(&b)
                };
                let m = m.sub(&ExactMatrix::identity(f, n).scale(&self.counit[h]));
                for i in 0..n {
                    ech.insert(m.row(i).to_vec());
                }
            }
            ech.kernel()
        };
        let left_integrals = solve_integral(true);
        let right_integrals = solve_integral(false);

        let solve_cointegral = |left: bool| {
            let mut ech = RowEchelon::new(f, n);
            for x in 0..n {
                let mut rows = vec![zero_vec(f, n); n];
                for ([a, b], c) in self.comult[x].iter() {
                    // left: Σ c λ(e_b) e_a; right: Σ c λ(e_a) e_b
                    let (slot, var) = if left { (*a, *b) } else { (*b, *a) };
                    rows[slot][var] += c;
                }
                for (k, row) in rows.iter_mut().enumerate() {
                    row[x] -= &self.algebra.unit[k];
                }
                for r in rows {
                    ech.insert(r);
                }
            }
            ech.kernel()
        };
        let left_cointegrals = solve_cointegral(true);
        let right_cointegrals = solve_cointegral(false);

        for (what, sp) in [
            ("left integrals", &left_integrals),
            ("right integrals", &right_integrals),
            ("left cointegrals", &left_cointegrals),
            ("right cointegrals", &right_cointegrals),
        ] {
            if sp.len() != 1 {
                return Err(Error::Verification(format!(
                    "space of {what} has dimension {}",
                    sp.len()
                )));
            }
        }

        let t = &left_integrals[0];
        let p = t.iter().position(|x| !x.is_zero()).expect("nonzero integral");
        let tp_inv = t[p].inv().expect("nonzero");
        let mut alpha = Vec::with_capacity(n);
        for h in 0..n {
            let th = self.mul(t, &self.basis(h));
            let a = &th[p] * &tp_inv;
            if th != t.iter().map(|x| x * &a).collect::<Vector>() {
                return Err(Error::Verification(format!(
                    "t·e{h} is not a multiple of the left integral"
                )));
            }
            alpha.push(a);
        }
        Ok(IntegralData {
            left_integrals,
            right_integrals,
            left_cointegrals,
            right_cointegrals,
            alpha,
        })
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        let ints = self.integrals()?;
        Ok(same_span(
            self.field(),
            self.dim(),
            &ints.left_integrals,
            &ints.right_integrals,
        ))
    }

    /// The Drinfeld double `(H*)^cop ⋈ H` on the basis `e^p ⊗ e_a` (index `p·n + a`),
    /// with its canonical R-matrix.
    pub fn drinfeld_double(&self) -> Result<HopfData> {
        let n = self.dim();
        let nn = n * n;
        let f = self.field();
        let sinv = self
            .antipode_inv
            .as_ref()
            .ok_or_else(|| Error::Verification("antipode is not invertible".into()))?;
        let idx = |p: usize, a: usize| p * n + a;

        // convolution of functionals, dual to Δ
        let conv = |g: &[CycloScalar], h: &[CycloScalar]| -> Vector {
            let mut out = zero_vec(f, n);
            for (t, o) in out.iter_mut().enumerate() {
                for ([x, y], c) in self.comult[t].iter() {
                    if !g[*x].is_zero() && !h[*y].is_zero() {
                        *o += &(c * &(&g[*x] * &h[*y]));
                    }
                }
            }
            out
        };

        let mut mult = vec![vec![Vec::new(); nn]; nn];
        for a in 0..n {
            let d2 = self.comult_left(&self.comult[a]);
            let terms: Vec<([usize; 3], CycloScalar)> =
                d2.iter().map(|(k, c)| (*k, c.clone())).collect();
            for q in 0..n {
                // for each a2: functional z ↦ Σ c e^q(S⁻¹(a3) z a1)
                let mut acc: Vec<(usize, Vector)> = Vec::new();
                for ([a1, a2, a3], c) in &terms {
                    let s3 = sinv.column(*a3);
                    let b1 = self.basis(*a1);
                    let fun: Vector = (0..n)
                        .map(|r| {
                            let w = self.algebra.mul3(&s3, &self.basis(r), &b1);
                            &w[q] * c
                        })
                        .collect();
                    if is_zero_vec(&fun) {
                        continue;
                    }
                    match acc.iter_mut().find(|(k, _)| k == a2) {
                        Some((_, v)) => axpy(v, &f.one(), &fun),
                        None => acc.push((*a2, fun)),
                    }
                }
                for p in 0..n {
                    let ep = unit_vec(f, n, p);
                    let prods: Vec<(usize, Vector)> = acc
                        .iter()
                        .map(|(a2, fun)| (*a2, conv(&ep, fun)))
                        .collect();
                    for b in 0..n {
                        let mut out = zero_vec(f, nn);
                        for (a2, fp) in &prods {
                            let hb = self.algebra.mul_basis(*a2, b);
                            for (s, x) in fp.iter().enumerate() {
                                if x.is_zero() {
                                    continue;
                                }
                                for (t, y) in hb.iter().enumerate() {
                                    if !y.is_zero() {
                                        out[idx(s, t)] += &(x * y);
                                    }
                                }
                            }
                        }
                        mult[idx(p, a)][idx(q, b)] = to_sparse(&out);
                    }
                }
            }
        }

        let mut unit = zero_vec(f, nn);
        for p in 0..n {
            for a in 0..n {
                unit[idx(p, a)] = &self.counit[p] * &self.algebra.unit[a];
            }
        }
        let algebra = AlgebraData::new(f, mult, unit)?;

        let mut comult = vec![Tensor2::new(); nn];
        for p in 0..n {
            for a in 0..n {
                let t = &mut comult[idx(p, a)];
                for x in 0..n {
                    for y in 0..n {
                        for (k, cxy) in &self.algebra.mult[x][y] {
                            if *k != p {
                                continue;
                            }
                            for ([a1, a2], c) in self.comult[a].iter() {
                                t.add_term([idx(y, *a1), idx(x, *a2)], &(cxy * c));
                            }
                        }
                    }
                }
            }
        }
        let mut counit = zero_vec(f, nn);
        for p in 0..n {
            for a in 0..n {
                counit[idx(p, a)] = &self.algebra.unit[p] * &self.counit[a];
            }
        }

        let mut dalg = HopfData::new(
            format!("D({})", self.name),
            double_labels(&self.labels),
            algebra,
            comult,
            counit,
            ExactMatrix::identity(f, nn),
        )?;
        let mut cols = Vec::with_capacity(nn);
        for p in 0..n {
            for a in 0..n {
                let sa = self.antipode.column(a);
                let mut left = zero_vec(f, nn);
                let mut right = zero_vec(f, nn);
                for q in 0..n {
                    for b in 0..n {
                        left[idx(q, b)] = &self.counit[q] * &sa[b];
                        right[idx(q, b)] = sinv.get(p, q) * &self.algebra.unit[b];
                    }
                }
                cols.push(dalg.algebra.mul(&left, &right));
            }
        }
        dalg.antipode = ExactMatrix::from_columns(f, nn, &cols);
        dalg.antipode_inv = dalg.antipode.inverse();

        let mut r = Tensor2::new();
        for i in 0..n {
            for q in 0..n {
                for b in 0..n {
                    let c = &self.counit[q] * &self.algebra.unit[b];
                    r.add_term([idx(q, i), idx(i, b)], &c);
                }
            }
        }
        let r_inverse = dalg.map2(&r, |a| dalg.antipode.column(a), |b| dalg.basis(b));
        dalg.r_matrix = Some(RMatrixData { r, r_inverse });
        Ok(dalg)
    }

    pub fn trivial_module(&self) -> ModuleRep {
        let f = self.field();
        ModuleRep {
            name: "1".into(),
            dim: 1,
            action: self
                .counit
                .iter()
                .map(|c| ExactMatrix::from_fn(f, 1, 1, |_, _| c.clone()))
                .collect(),
        }
    }

    pub fn regular_module(&self) -> ModuleRep {
        self.algebra.regular_module()
    }

    /// Action of a two-tensor on `V⊗W`.
    pub fn act2(&self, v: &ModuleRep, w: &ModuleRep, t: &Tensor2) -> ExactMatrix {
        let f = self.field();
        let (dv, dw) = (v.dim, w.dim);
        let mut out = ExactMatrix::zeros(f, dv * dw, dv * dw);
        let nonzero = |m: &ExactMatrix| -> Vec<(usize, usize, CycloScalar)> {
            (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                .filter(|&(i, j)| !m.get(i, j).is_zero())
                .map(|(i, j)| (i, j, m.get(i, j).clone()))
                .collect()
        };
        let wnz: Vec<_> = w.action.iter().map(nonzero).collect();
        for ([a, b], c) in t.iter() {
            for (i, j, x) in nonzero(&v.action[*a]) {
                let cx = c * &x;
                for (k, l, y) in &wnz[*b] {
                    out.add_at(i * dw + k, j * dw + l, &(&cx * y));
                }
            }
        }
        out
    }

    pub fn tensor_module(&self, v: &ModuleRep, w: &ModuleRep) -> ModuleRep {
        ModuleRep {
            name: format!("{}⊗{}", v.name, w.name),
            dim: v.dim * w.dim,
            action: (0..self.dim())
                .map(|i| self.act2(v, w, &self.comult[i]))
                .collect(),
        }
    }

    pub fn dual_module(&self, v: &ModuleRep) -> DualModule {
        let f = self.field();
        let d = v.dim;
        let module = ModuleRep {
            name: format!("{}*", v.name),
            dim: d,
            action: (0..self.dim())
                .map(|i| v.act(f, &self.antipode.column(i)).transpose())
                .collect(),
        };
        let ev = ExactMatrix::from_fn(f, 1, d * d, |_, k| {
            if k / d == k % d {
                f.one()
            } else {
                f.zero()
            }
        });
        let coev = ev.transpose();
        let mut checks = Suite::new();
        checks.push(verify_module(&self.algebra, &module));
        let dv = self.tensor_module(&module, v);
        let vd = self.tensor_module(v, &module);
        let bad = (0..self.dim()).find(|&h| ev.mul(&dv.action[h]) != ev.scale(&self.counit[h]));
        checks.push(Verdict::from_bool("ev is a module map", bad.is_none(), || {
            format!("fails for e{}", bad.unwrap())
        }));
        let bad = (0..self.dim()).find(|&h| vd.action[h].mul(&coev) != coev.scale(&self.counit[h]));
        checks.push(Verdict::from_bool("coev is a module map", bad.is_none(), || {
            format!("fails for e{}", bad.unwrap())
        }));
        let id = ExactMatrix::identity(f, d);
        let z1 = id.kron(&ev).mul(&coev.kron(&id));
        let z2 = ev.kron(&id).mul(&id.kron(&coev));
        checks.push(Verdict::from_bool(
            "zig-zag",
            (d == 0) || (z1.is_identity() && z2.is_identity()),
            || "snake identities fail".into(),
        ));
        DualModule {
            module,
            ev,
            coev,
            checks,
        }
    }
}

fn expand<const K: usize>(
    factors: &[&SparseVec],
    d: usize,
    key: &mut [usize; K],
    c: CycloScalar,
    out: &mut Tensor<K>,
) {
    if d == K {
        out.add_term(*key, &c);
        return;
    }
    for (k, s) in factors[d] {
        key[d] = *k;
        expand(factors, d + 1, key, &c * s, out);
    }
}

pub fn double_labels(labels: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(labels.len() * labels.len());
    for p in labels {
        for a in labels {
            out.push(format!("{p}*|{a}"));
        }
    }
    out
}
