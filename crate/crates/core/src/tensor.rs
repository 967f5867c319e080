//! Sparse tensors over the basis of an algebra, keyed by index tuples.

use std::collections::BTreeMap;

use crate::matrix::Vector;
use crate::scalar::CycloScalar;

/// A sparse element of `H^{⊗K}`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor<const K: usize> {
    terms: BTreeMap<[usize; K], CycloScalar>,
}

pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const K: usize> Tensor<K> {
    pub fn new() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, key: [usize; K], c: &CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &CycloScalar) {
        for (k, v) in &other.terms {
            self.add_term(*k, &(v * c));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize; K], &CycloScalar)> {
        self.terms.iter()
    }

    pub fn get(&self, key: &[usize; K]) -> Option<&CycloScalar> {
        self.terms.get(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, &(-v));
        }
        out
    }

    /// Sum of `c · e_{k0} ⊗ … ⊗ e_{k(K-1)}` with `e_i ⊗ …` replaced by dense vectors.
    pub fn from_pure(parts: [&[CycloScalar]; K]) -> Self {
        let mut out = Self::new();
        let mut key = [0usize; K];
        fn rec<const K: usize>(
            d: usize,
            parts: &[&[CycloScalar]; K],
            key: &mut [usize; K],
            acc: Option<CycloScalar>,
            out: &mut Tensor<K>,
        ) {
            if d == K {
                if let Some(c) = acc {
                    out.add_term(*key, &c);
                }
                return;
            }
            for (i, x) in parts[d].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                key[d] = i;
                let c = match &acc {
                    Some(a) => a * x,
                    None => x.clone(),
                };
                rec(d + 1, parts, key, Some(c), out);
            }
        }
        rec(0, &parts, &mut key, None, &mut out);
        out
    }
}

impl Tensor2 {
    /// Swaps the two tensor factors.
    pub fn flip(&self) -> Self {
        let mut out = Self::new();
        for ([a, b], c) in &self.terms {
            out.add_term([*b, *a], c);
        }
        out
    }

    /// Coefficient matrix as rows of dense vectors (`n × n`).
    pub fn to_rows(&self, zero: &CycloScalar, n: usize) -> Vec<Vector> {
        let mut rows = vec![vec![zero.clone(); n]; n];
        for ([a, b], c) in &self.terms {
            rows[*a][*b] = c.clone();
        }
        rows
    }
}
