//! Reports: one computation pass produces both a machine-readable verdict
//! block and rendered tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{verify_simple_list, ModuleRep};
use crate::braided::{
    normalize_ribbon, pivotal_structure, ribbon_structure, verify_r_matrix, verify_ribbon,
    yang_baxter,
};
use crate::coend::{Coend, PairingOrder};
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::matrix::ExactMatrix;
use crate::modular::{
    character_checks, ch_ring_check, commuting_square, eigenvalues, fusion_oracle,
    internal_character, nondegeneracy_report, phi_checks, restrict, s_endo, sl2z_relations,
    t_dinatural_check, t_endo, theta_f, verlinde_gr_check, verlinde_ss_check, CenterTransport,
    CoevPrime, FusionTable, RelationScalars,
};
use crate::scalar::CycloScalar;
use crate::verdict::{Suite, Verdict};

/// A rendered table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, header: Vec<String>) -> Self {
        Table {
            title: title.into(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn matrix(title: impl Into<String>, labels: &[String], m: &ExactMatrix) -> Self {
        let mut header = vec![String::new()];
        header.extend(labels.iter().cloned());
        let mut t = Table::new(title, header);
        for (i, l) in labels.iter().enumerate().take(m.rows()) {
            let mut row = vec![l.clone()];
            row.extend((0..m.cols()).map(|j| m.get(i, j).to_string()));
            t.rows.push(row);
        }
        t
    }

    pub fn render(&self) -> String {
        let cols = self
            .rows
            .iter()
            .map(Vec::len)
            .chain([self.header.len()])
            .max()
            .unwrap_or(0);
        let mut width = vec![0usize; cols];
        for row in self.rows.iter().chain([&self.header]) {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |row: &[String]| {
            let cells: Vec<String> = row
                .iter()
                .zip(&width)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            format!("  {}", cells.join("  ").trim_end())
        };
        let mut out = format!("{}\n", self.title);
        if !self.header.iter().all(String::is_empty) {
            out.push_str(&line(&self.header));
            out.push('\n');
        }
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

/// Verdicts, data and tables from one command.
#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub command: String,
    pub example: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_unix: Option<u64>,
    pub passed: bool,
    pub verdicts: BTreeMap<String, bool>,
    pub data: BTreeMap<String, Value>,
    #[serde(skip)]
    pub checks: Vec<(String, Verdict)>,
    #[serde(skip)]
    pub tables: Vec<Table>,
}

impl Document {
    pub fn new(command: &str, h: &HopfData) -> Self {
        Document {
            command: command.into(),
            example: h.name.clone(),
            generated_unix: None,
            passed: true,
            verdicts: BTreeMap::new(),
            data: BTreeMap::new(),
            checks: Vec::new(),
            tables: Vec::new(),
        }
    }

    pub fn stamp(&mut self) {
        self.generated_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }

    pub fn add(&mut self, section: &str, v: Verdict) {
        self.passed &= v.passed;
        self.verdicts.insert(format!("{section}: {}", v.name), v.passed);
        self.checks.push((section.into(), v));
    }

    pub fn add_suite(&mut self, section: &str, s: &Suite) {
        for v in &s.checks {
            self.add(section, v.clone());
        }
    }

    /// Records a check that is reported but does not decide the exit status.
    pub fn note(&mut self, key: &str, value: Value) {
        self.data.insert(key.into(), value);
    }

    pub fn verdict(&self, key: &str) -> Option<bool> {
        self.verdicts.get(key).copied()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "mtc {} {}: {status}", self.command, self.example);
        for t in &self.tables {
            out.push('\n');
            out.push_str(&t.render());
        }
        if !self.checks.is_empty() {
            out.push_str("\nchecks\n");
            for (section, v) in &self.checks {
                let _ = writeln!(out, "  {section}: {v}");
            }
        }
        out.push_str("\nmachine\n");
        out.push_str(&serde_json::to_string_pretty(self).unwrap_or_default());
        out.push('\n');
        out
    }
}

fn scalar_json(c: &CycloScalar) -> Value {
    Value::String(c.to_string())
}

fn matrix_json(m: &ExactMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_json(m.get(i, j))).collect()))
            .collect(),
    )
}

fn labels_of(simples: &[ModuleRep]) -> Vec<String> {
    simples.iter().map(|v| v.name.clone()).collect()
}

/// Axioms of every shipped structure.
pub fn structure_suite(h: &HopfData) -> Suite {
    let mut s = h.verify();
    if let Some(rm) = &h.r_matrix {
        s.extend(verify_r_matrix(h, rm));
        s.push(yang_baxter(h, &rm.r));
        if let Some(rib) = &h.ribbon {
            match normalize_ribbon(h, &rib.element, rib.convention) {
                Some(v) => s.extend(verify_ribbon(h, rm, &v).0),
                None => s.push(Verdict::fail("ribbon element", "not invertible")),
            }
        }
    } else if h.ribbon.is_some() {
        s.push(Verdict::fail("ribbon element", "a ribbon element needs an R-matrix"));
    }
    for (i, g) in h.grouplikes.iter().enumerate() {
        s.push(Verdict::from_bool(
            format!("grouplike candidate {i}"),
            h.is_grouplike(g),
            || "not grouplike".into(),
        ));
    }
    if !h.modules.is_empty() {
        s.extend(verify_simple_list(&h.algebra, &h.modules));
    }
    s
}

pub fn verify_doc(h: &HopfData) -> Document {
    let mut d = Document::new("verify", h);
    d.add_suite("structure", &structure_suite(h));
    d.note("dim", json!(h.dim()));
    d.note("cyclotomic_order", json!(h.field().order()));
    d.note("quasitriangular", json!(h.r_matrix.is_some()));
    d.note("ribbon", json!(h.ribbon.is_some()));
    d.note("simples", json!(labels_of(&h.modules)));
    d
}

fn checked_coend(h: &HopfData, d: &mut Document) -> Result<Coend> {
    if h.r_matrix.is_none() {
        return Err(Error::MissingStructure("no R-matrix in the input".into()));
    }
    let s = structure_suite(h);
    d.add_suite("structure", &s);
    if let Some(v) = s.first_failure() {
        return Err(Error::Verification(v.to_string()));
    }
    let c = Coend::build(h)?;
    d.add_suite("coend", &c.certificate);
    d.note("transmutation", json!(c.variant.label()));
    d.note(
        "rejected_transmutations",
        Value::Array(
            c.rejected
                .iter()
                .map(|(v, why)| json!({"variant": v.label(), "reason": why}))
                .collect(),
        ),
    );
    let order = c.pairing_order();
    d.note("pairing_order", json!(format!("{order:?}")));
    d.add(
        "coend",
        Verdict::from_bool("ω is a Hopf pairing (nested order)", order == PairingOrder::Nested, || {
            format!("{order:?}")
        }),
    );
    Ok(c)
}

/// Non-degeneracy report.
pub fn report_doc(h: &HopfData) -> Result<Document> {
    let mut d = Document::new("report", h);
    let c = checked_coend(h, &mut d)?;
    let r = nondegeneracy_report(&c);
    let cf = c.class_functions();
    d.add_suite("drinfeld map", &phi_checks(&c, &cf));
    d.add(
        "non-degeneracy",
        Verdict::from_bool("conditions consistent", r.consistent, || {
            format!(
                "ω rank {}, Φ injective {}, Φ bijective {}, transparent {:?}",
                r.rank_omega, r.injective, r.bijective, r.transparent_simples
            )
        }),
    );
    let unimodular = h.is_unimodular()?;
    d.note("unimodular", json!(unimodular));
    d.note("semisimple", json!(h.algebra.is_semisimple()));
    d.note("verdict", json!(if r.nondegenerate { "non-degenerate" } else { "degenerate" }));
    d.note("nondegeneracy", serde_json::to_value(&r)?);
    d.note(
        "untested_conditions",
        json!("factorizability via the Deligne product functor is not computed"),
    );
    let mut t = Table::new("non-degeneracy", vec!["quantity".into(), "value".into()]);
    let rows: Vec<(&str, String)> = vec![
        ("dim H", r.dim.to_string()),
        ("rank of f ↦ (f⊗id)(R21 R)", r.rank_full_drinfeld.to_string()),
        ("rank ω", r.rank_omega.to_string()),
        ("dim CF(H)", r.dim_ch.to_string()),
        ("dim Z(H)", r.dim_zh.to_string()),
        ("rank Φ_C on CF", r.rank_phi_restricted.to_string()),
        ("Φ_C injective", r.injective.to_string()),
        ("Φ_C surjective", r.surjective.to_string()),
        ("Φ_C bijective", r.bijective.to_string()),
        ("transparent simples", r.transparent_simples.join(", ")),
        ("unimodular", unimodular.to_string()),
        ("verdict", if r.nondegenerate { "non-degenerate" } else { "degenerate" }.into()),
        ("consistent", r.consistent.to_string()),
    ];
    for (k, v) in rows {
        t.rows.push(vec![k.into(), v]);
    }
    d.tables.push(t);
    Ok(d)
}

fn require_nondegenerate(c: &Coend) -> Result<()> {
    let r = nondegeneracy_report(c);
    if r.nondegenerate {
        Ok(())
    } else {
        Err(Error::Degenerate(format!(
            "ω has rank {} < {}; Φ_C has rank {} on CF",
            r.rank_omega, r.dim, r.rank_phi_restricted
        )))
    }
}

fn relations_json(r: &RelationScalars) -> Value {
    serde_json::to_value(r).unwrap_or(Value::Null)
}

/// S, T, their restrictions to CF, the SL₂(Z) scalars and the S-transform.
pub fn modular_doc(h: &HopfData) -> Result<Document> {
    let mut d = Document::new("modular", h);
    let c = checked_coend(h, &mut d)?;
    require_nondegenerate(&c)?;
    let integral = c.integral()?;
    d.note("lambda_omega_self", scalar_json(&integral.omega_self));
    d.note("lambda_normalized", json!(integral.normalized));
    d.note("lambda_sign", json!("+1"));
    let lam = &integral.lambda;
    let s = s_endo(&c, lam);
    let gamma = c.antipode_matrix();
    let rib = ribbon_structure(h);
    let t = rib.as_ref().map(|r| t_endo(&c, r));
    let th = rib.as_ref().map(|r| theta_f(&c, r));
    if let Some(r) = &rib {
        d.add("modular", t_dinatural_check(&c, r, &h.modules));
    } else {
        d.note("t_operator", json!("no ribbon element: T and the (ST)³ relation are not defined"));
    }
    let full = sl2z_relations(&s, t.as_ref(), &gamma, th.as_ref());
    let cf = c.class_functions();
    let rs = restrict(&s, &cf).ok_or_else(|| Error::Verification("S does not preserve CF".into()))?;
    let rg = restrict(&gamma, &cf).ok_or_else(|| Error::Verification("γ does not preserve CF".into()))?;
    let rt = t.as_ref().and_then(|t| restrict(t, &cf));
    let rth = th.as_ref().and_then(|t| restrict(t, &cf));
    let on_cf = sl2z_relations(&rs, rt.as_ref(), &rg, rth.as_ref());
    for (scope, rel) in [("full", &full), ("CF", &on_cf)] {
        if rib.is_some() {
            d.add(
                "sl2z",
                Verdict::from_bool(format!("(ST)³ = λS² on {scope}"), rel.lambda.is_some(), || {
                    "no scalar".into()
                }),
            );
            d.add(
                "sl2z",
                Verdict::from_bool(format!("S⁴ = ν θ_F⁻¹ on {scope}"), rel.nu.is_some(), || {
                    "no scalar".into()
                }),
            );
        }
        d.add(
            "sl2z",
            Verdict::from_bool(format!("S² = μ γ⁻¹ on {scope}"), rel.mu.is_some(), || "no scalar".into()),
        );
    }
    d.note("relations_full", relations_json(&full));
    d.note("relations_cf", relations_json(&on_cf));

    let tr = CenterTransport::new(&c, lam, &s)?;
    let square = commuting_square(&c, &tr);
    let mut s_choice = "S";
    if !square.passed {
        let alt = s
            .inverse()
            .and_then(|si| CenterTransport::new(&c, lam, &si).ok())
            .map(|t| commuting_square(&c, &t).passed)
            .unwrap_or(false);
        if alt {
            s_choice = "S⁻¹ (only the inverse commutes)";
        }
    }
    d.note("s_transform_uses", json!(s_choice));
    d.add("modular", square);
    let m = tr.s_transform.rows();
    d.add(
        "modular",
        Verdict::from_bool("𝔖 invertible", tr.s_transform.rank() == m, || {
            format!("rank {} < {m}", tr.s_transform.rank())
        }),
    );

    let cf_labels: Vec<String> = (0..cf.len()).map(|i| format!("f{i}")).collect();
    let z_labels: Vec<String> = (0..m).map(|i| format!("z{i}")).collect();
    d.tables.push(Table::matrix("S on CF (basis f_i)", &cf_labels, &rs));
    if let Some(rt) = &rt {
        d.tables.push(Table::matrix("T on CF (basis f_i)", &cf_labels, rt));
    }
    d.tables.push(Table::matrix("𝔖 on Z(H) (basis z_i)", &z_labels, &tr.s_transform));
    let mut t = Table::new("SL₂(Z) scalars", vec!["relation".into(), "full".into(), "CF".into()]);
    let show = |x: &Option<String>| x.clone().unwrap_or_else(|| "none".into());
    t.rows.push(vec!["(ST)³ = λS²".into(), show(&full.lambda), show(&on_cf.lambda)]);
    t.rows.push(vec!["S² = μγ⁻¹".into(), show(&full.mu), show(&on_cf.mu)]);
    t.rows.push(vec!["S⁴ = νθ_F⁻¹".into(), show(&full.nu), show(&on_cf.nu)]);
    d.tables.push(t);
    d.note("s_on_cf", matrix_json(&rs));
    d.note("s_transform", matrix_json(&tr.s_transform));
    if let Some(rt) = &rt {
        d.note("t_on_cf", matrix_json(rt));
    }

    if let (Some(r), true, false) = (&rib, h.algebra.is_semisimple(), h.modules.is_empty()) {
        let table = fusion_oracle(h, &h.modules)?;
        let ss = verlinde_ss_check(&c, r, &h.modules, &table)?;
        let labels = labels_of(&h.modules);
        d.tables.push(Table::matrix("s-matrix", &labels, &ss.s));
        let mut t = Table::new("simples", vec!["simple".into(), "qdim".into(), "θ".into()]);
        for (i, l) in labels.iter().enumerate() {
            t.rows.push(vec![l.clone(), ss.qdims[i].to_string(), ss.t_diagonal[i].to_string()]);
        }
        d.tables.push(t);
        d.note("s_matrix", matrix_json(&ss.s));
        d.note("global_dim", scalar_json(&ss.global_dim));
        d.note("qdims", Value::Array(ss.qdims.iter().map(scalar_json).collect()));
        d.note("t_diagonal", Value::Array(ss.t_diagonal.iter().map(scalar_json).collect()));
    }
    Ok(d)
}

fn require_simples(h: &HopfData) -> Result<()> {
    if h.modules.is_empty() {
        Err(Error::MissingSimples("the input lists no simple modules".into()))
    } else {
        Ok(())
    }
}

fn fusion_tables(table: &FusionTable) -> Vec<Table> {
    table
        .labels
        .iter()
        .enumerate()
        .map(|(i, li)| {
            let mut t = Table::new(format!("fusion with {li}"), vec![String::new(), "decomposition".into()]);
            for (j, lj) in table.labels.iter().enumerate() {
                let terms: Vec<String> = table.n[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(a, &k)| {
                        if k == 1 {
                            table.labels[a].clone()
                        } else {
                            format!("{k}·{}", table.labels[a])
                        }
                    })
                    .collect();
                t.rows.push(vec![format!("{li} ⊗ {lj}"), terms.join(" + ")]);
            }
            t
        })
        .collect()
}

/// Fusion rules from the composition-series oracle.
pub fn fusion_doc(h: &HopfData) -> Result<Document> {
    let mut d = Document::new("fusion", h);
    require_simples(h)?;
    let s = structure_suite(h);
    d.add_suite("structure", &s);
    if let Some(v) = s.first_failure() {
        return Err(Error::Verification(v.to_string()));
    }
    let table = fusion_oracle(h, &h.modules)?;
    d.add_suite("fusion", &table.verify());
    if h.algebra.is_semisimple() {
        d.add("fusion", table.duality_law());
    } else {
        d.note("duality_law", json!(table.duality_law().passed));
    }
    d.tables.extend(fusion_tables(&table));
    d.note("fusion", serde_json::to_value(&table)?);
    Ok(d)
}

/// Both Verlinde formulas, with the integral taken with each sign.
pub fn verlinde_doc(h: &HopfData) -> Result<Document> {
    let mut d = Document::new("verlinde", h);
    require_simples(h)?;
    let c = checked_coend(h, &mut d)?;
    require_nondegenerate(&c)?;
    let piv = pivotal_structure(h)
        .ok_or_else(|| Error::MissingStructure("no ribbon element or pivotal grouplike".into()))?;
    let rib = ribbon_structure(h);
    let simples = &h.modules;
    let table = fusion_oracle(h, simples)?;
    d.add_suite("fusion", &table.verify());
    d.add_suite("characters", &character_checks(&c, &piv, simples));
    let chars: Vec<_> = simples.iter().map(|v| internal_character(h, &piv, v)).collect();
    d.add("characters", ch_ring_check(&c, &chars, &table));
    d.note("character_convention", json!("ch(V)(h) = tr_V(S(h) g)"));
    d.note(
        "pivotal_source",
        json!(if rib.is_some() { "ribbon element (g = u v⁻¹)" } else { "grouplike candidate" }),
    );
    d.tables.extend(fusion_tables(&table));

    let semisimple = h.algebra.is_semisimple();
    d.note("semisimple_branch", json!(semisimple && rib.is_some()));
    if let (true, Some(r)) = (semisimple, &rib) {
        d.add("fusion", table.duality_law());
        let ss = verlinde_ss_check(&c, r, simples, &table)?;
        d.add_suite("semisimple", &ss.checks);
        d.note("phi_chi_prime_literal", json!(ss.phi_chi_prime_literal));
        d.tables.push(Table::matrix("s-matrix", &labels_of(simples), &ss.s));
    }

    let integral = c.integral()?;
    let mode = if rib.is_some() {
        CoevPrime::Ribbon
    } else {
        CoevPrime::PivotalInverse
    };
    d.note("coev_prime", json!(format!("{mode:?}")));
    for sign in [1i64, -1] {
        let gr = verlinde_gr_check(&c, &integral.lambda, sign, &piv, rib.as_ref(), mode, simples, &table)?;
        let section = format!("GR (Λ sign {sign:+})");
        d.add_suite(&section, &gr.checks);
        d.note(
            &format!("psi_literal_match_{}", if sign > 0 { "plus" } else { "minus" }),
            json!(gr.literal_psi_match),
        );
        let mut t = Table::new(
            format!("eigenvalues of φ_i on simples (Λ sign {sign:+})"),
            std::iter::once(String::new()).chain(labels_of(simples)).collect(),
        );
        let mut eig_json = Vec::new();
        for (i, phi) in gr.phis.iter().enumerate() {
            let e = eigenvalues(h, phi, simples);
            let cells: Vec<String> = e
                .iter()
                .map(|x| x.as_ref().map_or("non-scalar".into(), |c| c.to_string()))
                .collect();
            eig_json.push(Value::Array(cells.iter().cloned().map(Value::String).collect()));
            t.rows.push(std::iter::once(simples[i].name.clone()).chain(cells).collect());
        }
        d.note(
            &format!("phi_eigenvalues_{}", if sign > 0 { "plus" } else { "minus" }),
            Value::Array(eig_json),
        );
        d.tables.push(t);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::generate;

    #[test]
    fn tables_align() {
        let mut t = Table::new("t", vec!["a".into(), "bb".into()]);
        t.rows.push(vec!["ccc".into(), "d".into()]);
        assert_eq!(t.render(), "t\n  a    bb\n  ccc  d\n");
    }

    #[test]
    fn report_is_deterministic_without_timestamp() {
        let h = generate("double_z2").unwrap();
        let a = report_doc(&h).unwrap().render();
        let b = report_doc(&h).unwrap().render();
        assert_eq!(a, b);
        assert!(a.contains("non-degenerate"));
    }

    #[test]
    fn degenerate_input_is_refused_by_modular() {
        let h = generate("sweedler_r0").unwrap();
        assert!(matches!(modular_doc(&h), Err(Error::Degenerate(_))));
        assert!(report_doc(&h).unwrap().passed);
    }

    #[test]
    fn missing_pieces_are_reported() {
        let mut h = generate("z2").unwrap();
        h.modules.clear();
        assert!(matches!(fusion_doc(&h), Err(Error::MissingSimples(_))));
        h.r_matrix = None;
        h.ribbon = None;
        assert!(matches!(report_doc(&h), Err(Error::MissingStructure(_))));
        assert!(verify_doc(&h).passed);
    }
}
