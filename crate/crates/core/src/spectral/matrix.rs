use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer matrix with checked arithmetic.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for d in 0..n {
            m.set(d, d, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Input("matrix rows have different lengths".into()));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: i64) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Mismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc: i64 = 0;
                for k in 0..self.cols {
                    acc = self
                        .get(r, k)
                        .checked_mul(other.get(k, c))
                        .and_then(|x| acc.checked_add(x))
                        .ok_or(Error::Overflow("matrix product"))?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(i64, i64) -> Option<i64>) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Mismatch("matrix shapes differ".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow("matrix sum")))
            .collect::<Result<_>>()?;
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &IntMatrix) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn scaled(&self, s: i64) -> Result<Self> {
        let data = self.data.iter().map(|&x| x.checked_mul(s).ok_or(Error::Overflow("matrix scaling"))).collect::<Result<_>>()?;
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Mismatch("only square matrices have powers".into()));
        }
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `[a b; c d]`.
    pub fn blocks(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Mismatch("block shapes do not line up".into()));
        }
        let mut m = Self::zeros(a.rows + c.rows, a.cols + b.cols);
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for r in 0..blk.rows {
                for col in 0..blk.cols {
                    m.set(r0 + r, c0 + col, blk.get(r, col));
                }
            }
        }
        Ok(m)
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(i64::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    /// CSV with a header row and a label column.
    pub fn to_csv_labelled(&self, row_labels: &[String], col_labels: &[String]) -> String {
        let mut s = format!(",{}\n", col_labels.join(","));
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(i64::to_string).collect();
            s.push_str(&format!("{},{}\n", row_labels[r], line.join(",")));
        }
        s
    }

    /// Right-aligned columns, one bracketed row per line.
    pub fn to_text(&self) -> String {
        let w = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        let mut s = String::new();
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| format!("{x:>w$}")).collect();
            s.push_str(&format!("[ {} ]\n", cells.join(" ")));
        }
        s
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_by_squaring() {
        let m = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.pow(0).unwrap(), IntMatrix::identity(2));
        assert_eq!(m.pow(10).unwrap().get(0, 1), 55);
    }

    #[test]
    fn overflow_is_an_error() {
        let m = IntMatrix::from_rows(vec![vec![i64::MAX / 2 + 1]]).unwrap();
        assert!(matches!(m.pow(2), Err(Error::Overflow(_))));
    }

    #[test]
    fn text_and_csv() {
        let m = IntMatrix::from_rows(vec![vec![1, -2], vec![10, 0]]).unwrap();
        assert_eq!(m.to_csv(), "1,-2\n10,0\n");
        assert_eq!(m.to_text(), "[  1 -2 ]\n[ 10  0 ]\n");
        assert!(IntMatrix::from_rows(vec![vec![1], vec![]]).is_err());
    }
}
