//! Dense square matrices over [`ComplexScalar`].
//!
//! Generator matrices are very sparse, so products skip zero entries.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::ComplexScalar;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<ComplexScalar>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        ExactMatrix { dim, entries: vec![ComplexScalar::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(vec![ComplexScalar::one(); dim])
    }

    pub fn diagonal(diag: Vec<ComplexScalar>) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> ComplexScalar) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<ComplexScalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            entries.extend(row);
        }
        Ok(ExactMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &ComplexScalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ComplexScalar) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ComplexScalar]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        let nonzero_rows: Vec<Vec<usize>> =
            (0..n).map(|k| (0..n).filter(|&j| !other.get(k, j).is_zero()).collect()).collect();
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in &nonzero_rows[k] {
                    let prod = a * other.get(k, j);
                    out.entries[i * n + j] += &prod;
                }
            }
        }
        Ok(out)
    }

    /// Panics on dimension mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("matrix dimensions agree")
    }

    /// Panics on dimension mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("matrix dimensions agree")
    }

    /// Panics on dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix dimensions agree")
    }

    pub fn scale(&self, c: &ComplexScalar) -> Self {
        ExactMatrix { dim: self.dim, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix { dim: self.dim, entries: self.entries.iter().map(|a| -a).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ComplexScalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<ComplexScalar> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> ComplexScalar {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// The entry of largest floating-point magnitude, returned exactly.
    pub fn max_entry(&self) -> ComplexScalar {
        self.entries
            .iter()
            .filter(|e| !e.is_zero())
            .map(|e| (e.to_complex64().norm(), e))
            .fold(None, |best: Option<(f64, &ComplexScalar)>, (m, e)| match best {
                Some((bm, _)) if bm >= m => best,
                _ => Some((m, e)),
            })
            .map(|(_, e)| e.clone())
            .unwrap_or_default()
    }

    /// Boolean mask of nonzero entries, row-major.
    pub fn sparsity(&self) -> Vec<bool> {
        self.entries.iter().map(|e| !e.is_zero()).collect()
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).to_complex64())
    }
}

/// `AB − BA`.
pub fn commutator(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    Ok(a.try_mul(b)?.sub(&b.try_mul(a)?))
}

/// `AB + BA`.
pub fn anticommutator(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    Ok(a.try_mul(b)?.add(&b.try_mul(a)?))
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format!("{:>width$}", cells[i * self.dim + j], width = width))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[ComplexScalar]> = self.rows().collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<ComplexScalar>>::deserialize(deserializer)?;
        ExactMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| ComplexScalar::from_integer(v)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn product_and_commutator() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[1, 0], &[0, 0]]));
        assert_eq!(commutator(&a, &b).unwrap(), m(&[&[1, 0], &[0, -1]]));
        assert!(commutator(&a, &a).unwrap().is_zero());
        assert_eq!(anticommutator(&a, &b).unwrap(), ExactMatrix::identity(2));
    }

    #[test]
    fn dimension_mismatch() {
        let a = ExactMatrix::identity(2);
        let b = ExactMatrix::identity(3);
        assert_eq!(commutator(&a, &b), Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn adjoint_conjugates() {
        let mut a = ExactMatrix::zeros(2);
        a.set(0, 1, ComplexScalar::i());
        let adj = a.adjoint();
        assert_eq!(adj.get(1, 0), &-&ComplexScalar::i());
        assert!(adj.get(0, 1).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let s = serde_json::to_string(&a).unwrap();
        let back: ExactMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<ExactMatrix>("[[{\"re\":[],\"im\":[]}],[]]").is_err());
    }

    #[test]
    fn max_entry_picks_largest() {
        let a = m(&[&[1, -5], &[3, 0]]);
        assert_eq!(a.max_entry(), ComplexScalar::from_integer(-5));
        assert!(ExactMatrix::zeros(3).max_entry().is_zero());
    }
}
