//! JSON interchange format for Hopf algebras with optional R-matrix, ribbon
//! element, grouplikes and modules. Scalars are exact: each is the list of its
//! `φ(N)` power-basis coefficients written as `"p/q"` strings.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{to_sparse, zero_vec, AlgebraData, ModuleRep, SparseVec};
use crate::braided::{RMatrixData, RibbonConvention};
use crate::error::{Error, Result};
use crate::hopf::{HopfData, RibbonInput};
use crate::matrix::{ExactMatrix, Vector};
use crate::scalar::{CycloField, CycloScalar};
use crate::tensor::Tensor2;

pub const FORMAT_VERSION: u32 = 1;

/// Power-basis coefficients of one scalar.
pub type ScalarText = Vec<String>;

/// Nonzero entries of a vector as `[index, scalar]`.
pub type SparseText = Vec<(usize, ScalarText)>;

/// Nonzero entries of a tensor as `[i, j, scalar]`.
pub type Tensor2Text = Vec<(usize, usize, ScalarText)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleText {
    pub name: String,
    pub dim: usize,
    /// One dense `dim × dim` matrix per basis element, row-major.
    pub action: Vec<Vec<Vec<ScalarText>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub format_version: u32,
    pub name: String,
    pub cyclotomic_order: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `mult[i][j] = e_i e_j`.
    pub mult: Vec<Vec<SparseText>>,
    pub unit: Vec<ScalarText>,
    /// `comult[i] = Δ(e_i)`.
    pub comult: Vec<Tensor2Text>,
    pub counit: Vec<ScalarText>,
    /// `antipode[i] = S(e_i)`.
    pub antipode: Vec<SparseText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Tensor2Text>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_inverse: Option<Tensor2Text>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ribbon: Option<SparseText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ribbon_convention: Option<RibbonConvention>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub grouplikes: Vec<SparseText>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleText>,
}

fn scalar_text(c: &CycloScalar) -> ScalarText {
    c.to_strings()
}

fn sparse_text(v: &[CycloScalar]) -> SparseText {
    to_sparse(v).iter().map(|(i, c)| (*i, scalar_text(c))).collect()
}

fn tensor_text(t: &Tensor2) -> Tensor2Text {
    t.iter().map(|([a, b], c)| (*a, *b, scalar_text(c))).collect()
}

impl HopfFile {
    pub fn from_hopf(h: &HopfData) -> Self {
        let f = h.field();
        let n = h.dim();
        let mult = (0..n)
            .map(|i| (0..n).map(|j| sparse_text(&h.algebra.mul_basis(i, j))).collect())
            .collect();
        let modules = h
            .modules
            .iter()
            .map(|m| ModuleText {
                name: m.name.clone(),
                dim: m.dim,
                action: m
                    .action
                    .iter()
                    .map(|a| {
                        (0..m.dim)
                            .map(|r| (0..m.dim).map(|c| scalar_text(a.get(r, c))).collect())
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        HopfFile {
            format_version: FORMAT_VERSION,
            name: h.name.clone(),
            cyclotomic_order: f.order(),
            dim: n,
            labels: h.labels.clone(),
            mult,
            unit: h.one().iter().map(scalar_text).collect(),
            comult: h.comult.iter().map(tensor_text).collect(),
            counit: h.counit.iter().map(scalar_text).collect(),
            antipode: (0..n).map(|i| sparse_text(&h.antipode.column(i))).collect(),
            r_matrix: h.r_matrix.as_ref().map(|r| tensor_text(&r.r)),
            r_inverse: h.r_matrix.as_ref().map(|r| tensor_text(&r.r_inverse)),
            ribbon: h.ribbon.as_ref().map(|r| sparse_text(&r.element)),
            ribbon_convention: h.ribbon.as_ref().map(|r| r.convention),
            grouplikes: h.grouplikes.iter().map(|g| sparse_text(g)).collect(),
            modules,
        }
    }

    pub fn to_hopf(&self) -> Result<HopfData> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "format_version: expected {FORMAT_VERSION}, found {}",
                self.format_version
            )));
        }
        let f = CycloField::new(self.cyclotomic_order)
            .map_err(|e| Error::Parse(format!("cyclotomic_order: {e}")))?;
        let p = Parser { f: &f, n: self.dim };
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse("dim: must be positive".into()));
        }
        p.len("labels", self.labels.len(), n)?;
        p.len("mult", self.mult.len(), n)?;
        let mut mult = Vec::with_capacity(n);
        for (i, row) in self.mult.iter().enumerate() {
            p.len(&format!("mult[{i}]"), row.len(), n)?;
            let r: Vec<SparseVec> = row
                .iter()
                .enumerate()
                .map(|(j, v)| p.sparse(&format!("mult[{i}][{j}]"), v))
                .collect::<Result<_>>()?;
            mult.push(r);
        }
        let unit = p.dense("unit", &self.unit)?;
        let algebra = AlgebraData::new(&f, mult, unit).map_err(|e| Error::Parse(format!("mult: {e}")))?;
        p.len("comult", self.comult.len(), n)?;
        let comult = self
            .comult
            .iter()
            .enumerate()
            .map(|(i, t)| p.tensor(&format!("comult[{i}]"), t))
            .collect::<Result<Vec<_>>>()?;
        let counit = p.dense("counit", &self.counit)?;
        p.len("antipode", self.antipode.len(), n)?;
        let cols = self
            .antipode
            .iter()
            .enumerate()
            .map(|(i, v)| p.sparse_dense(&format!("antipode[{i}]"), v))
            .collect::<Result<Vec<_>>>()?;
        let antipode = ExactMatrix::from_columns(&f, n, &cols);
        let mut h = HopfData::new(self.name.clone(), self.labels.clone(), algebra, comult, counit, antipode)
            .map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(r) = &self.r_matrix {
            let r = p.tensor("r_matrix", r)?;
            let rm = match &self.r_inverse {
                Some(ri) => RMatrixData {
                    r,
                    r_inverse: p.tensor("r_inverse", ri)?,
                },
                None => RMatrixData::from_r(&h, r),
            };
            h.r_matrix = Some(rm);
        } else if self.r_inverse.is_some() {
            return Err(Error::Parse("r_inverse: given without r_matrix".into()));
        }
        match (&self.ribbon, self.ribbon_convention) {
            (Some(v), conv) => {
                h.ribbon = Some(RibbonInput {
                    element: p.sparse_dense("ribbon", v)?,
                    convention: conv.unwrap_or(RibbonConvention::ThetaVInv),
                })
            }
            (None, Some(_)) => {
                return Err(Error::Parse("ribbon_convention: given without ribbon".into()))
            }
            (None, None) => {}
        }
        h.grouplikes = self
            .grouplikes
            .iter()
            .enumerate()
            .map(|(i, g)| p.sparse_dense(&format!("grouplikes[{i}]"), g))
            .collect::<Result<_>>()?;
        for (mi, m) in self.modules.iter().enumerate() {
            let field = format!("modules[{mi}]");
            p.len(&format!("{field}.action"), m.action.len(), n)?;
            let mut action = Vec::with_capacity(n);
            for (k, mat) in m.action.iter().enumerate() {
                let fk = format!("{field}.action[{k}]");
                p.len(&fk, mat.len(), m.dim)?;
                let mut rows = Vec::with_capacity(m.dim);
                for (r, row) in mat.iter().enumerate() {
                    p.len(&format!("{fk}[{r}]"), row.len(), m.dim)?;
                    rows.push(
                        row.iter()
                            .enumerate()
                            .map(|(c, s)| p.scalar(&format!("{fk}[{r}][{c}]"), s))
                            .collect::<Result<Vector>>()?,
                    );
                }
                action.push(ExactMatrix::from_rows(&f, m.dim, rows));
            }
            h.modules.push(ModuleRep {
                name: m.name.clone(),
                dim: m.dim,
                action,
            });
        }
        Ok(h)
    }
}

struct Parser<'a> {
    f: &'a Arc<CycloField>,
    n: usize,
}

impl Parser<'_> {
    fn len(&self, field: &str, got: usize, want: usize) -> Result<()> {
        if got == want {
            Ok(())
        } else {
            Err(Error::Parse(format!("{field}: expected length {want}, found {got}")))
        }
    }

    fn index(&self, field: &str, i: usize) -> Result<usize> {
        if i < self.n {
            Ok(i)
        } else {
            Err(Error::Parse(format!("{field}: basis index {i} out of range 0..{}", self.n)))
        }
    }

    fn scalar(&self, field: &str, s: &[String]) -> Result<CycloScalar> {
        self.len(field, s.len(), self.f.degree())?;
        self.f
            .parse_coeffs(s)
            .map_err(|e| Error::Parse(format!("{field}: {e}")))
    }

    fn dense(&self, field: &str, v: &[ScalarText]) -> Result<Vector> {
        self.len(field, v.len(), self.n)?;
        v.iter()
            .enumerate()
            .map(|(i, s)| self.scalar(&format!("{field}[{i}]"), s))
            .collect()
    }

    fn sparse(&self, field: &str, v: &SparseText) -> Result<SparseVec> {
        v.iter()
            .map(|(i, s)| Ok((self.index(field, *i)?, self.scalar(&format!("{field}[{i}]"), s)?)))
            .collect()
    }

    fn sparse_dense(&self, field: &str, v: &SparseText) -> Result<Vector> {
        let mut out = zero_vec(self.f, self.n);
        for (i, c) in self.sparse(field, v)? {
            out[i] += &c;
        }
        Ok(out)
    }

    fn tensor(&self, field: &str, t: &Tensor2Text) -> Result<Tensor2> {
        let mut out = Tensor2::new();
        for (a, b, s) in t {
            self.index(field, *a)?;
            self.index(field, *b)?;
            out.add_term([*a, *b], &self.scalar(&format!("{field}[{a},{b}]"), s)?);
        }
        Ok(out)
    }
}

/// Parses a JSON document; syntax errors carry line and column.
pub fn parse_hopf(text: &str) -> Result<HopfData> {
    let file: HopfFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_hopf()
}

pub fn to_json(h: &HopfData) -> Result<String> {
    Ok(serde_json::to_string_pretty(&HopfFile::from_hopf(h))?)
}

pub fn read_hopf(path: &Path) -> Result<HopfData> {
    let text = std::fs::read_to_string(path)?;
    parse_hopf(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn write_hopf(h: &HopfData, path: &Path) -> Result<()> {
    let mut text = to_json(h)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::generate;

    #[test]
    fn round_trip_preserves_structure() {
        for name in ["z2", "sweedler_r1", "double_z2"] {
            let h = generate(name).unwrap();
            let text = to_json(&h).unwrap();
            let back = parse_hopf(&text).unwrap();
            assert_eq!(HopfFile::from_hopf(&back), HopfFile::from_hopf(&h), "{name}");
            assert_eq!(to_json(&back).unwrap(), text);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_hopf(""), Err(Error::Parse(_))));
        let h = generate("z2").unwrap();
        let mut file = HopfFile::from_hopf(&h);
        file.mult[0][0] = vec![(7, vec!["1".into()])];
        let err = file.to_hopf().unwrap_err().to_string();
        assert!(err.contains("mult[0][0]"), "{err}");
        let mut file = HopfFile::from_hopf(&h);
        file.counit[1] = vec!["1".into(), "2".into()];
        let err = file.to_hopf().unwrap_err().to_string();
        assert!(err.contains("counit[1]"), "{err}");
        let mut file = HopfFile::from_hopf(&h);
        file.counit[1] = vec!["x/2".into()];
        assert!(file.to_hopf().is_err());
    }
}
