//! Dense row-major matrices over [`Rational`].
//!
//! Besides the usual arithmetic this module provides the named constant
//! matrices that every block display is written in: identity `I`, all-ones
//! `J`, the all-ones column `𝟙` and the 2×2 exchange matrix `A_2`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn filled(rows: usize, cols: usize, value: Rational) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// `I_n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::ONE;
        }
        m
    }

    /// `J_{rows×cols}`, the all-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, Rational::ONE)
    }

    /// `J_n`.
    pub fn ones_square(n: usize) -> Self {
        Self::ones(n, n)
    }

    /// `𝟙_n`, the all-ones column vector.
    pub fn ones_col(n: usize) -> Self {
        Self::ones(n, 1)
    }

    /// `A_2 = [[0, 1], [1, 0]]`.
    pub fn exchange2() -> Self {
        Self::from_i64_rows(&[&[0, 1], &[1, 0]])
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_vec",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left: (i, row.len()),
                    right: (0, c),
                });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        )
        .expect("ragged integer rows")
    }

    /// Column vector from entries.
    pub fn column(values: Vec<Rational>) -> Self {
        let n = values.len();
        Self {
            rows: n,
            cols: 1,
            data: values,
        }
    }

    /// Assembles a block matrix. Every block in a block-row must share its
    /// row count and every block in a block-column its column count.
    pub fn from_blocks(blocks: &[Vec<RationalMatrix>]) -> Result<Self> {
        let Some(first_row) = blocks.first() else {
            return Ok(Self::zeros(0, 0));
        };
        let col_widths: Vec<usize> = first_row.iter().map(|b| b.cols).collect();
        let total_cols: usize = col_widths.iter().sum();
        let mut row_heights = Vec::with_capacity(blocks.len());
        for block_row in blocks {
            if block_row.len() != col_widths.len() {
                return Err(Error::DimensionMismatch {
                    op: "from_blocks",
                    left: (block_row.len(), 0),
                    right: (col_widths.len(), 0),
                });
            }
            let h = block_row[0].rows;
            for (b, &w) in block_row.iter().zip(&col_widths) {
                if b.rows != h || b.cols != w {
                    return Err(Error::DimensionMismatch {
                        op: "from_blocks",
                        left: (b.rows, b.cols),
                        right: (h, w),
                    });
                }
            }
            row_heights.push(h);
        }
        let total_rows: usize = row_heights.iter().sum();
        let mut out = Self::zeros(total_rows, total_cols);
        let mut r0 = 0;
        for (block_row, &h) in blocks.iter().zip(&row_heights) {
            let mut c0 = 0;
            for b in block_row {
                out.set_block(r0, c0, b);
                c0 += b.cols;
            }
            r0 += h;
        }
        Ok(out)
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    /// Panics if it does not fit.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RationalMatrix) {
        assert!(
            r0 + block.rows <= self.rows && c0 + block.cols <= self.cols,
            "block out of range"
        );
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + block.cols].clone_from_slice(block.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> RationalMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        (i < self.rows && j < self.cols).then(|| &self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Principal-style extraction with independent 0-based row and column
    /// index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        self.submatrix(indices, indices)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
            })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Self, op: &'static str, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (dst, b) in acc.iter_mut().zip(rhs.row(k)) {
                    if !b.is_zero() {
                        *dst += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rows separated by newlines, entries by commas, rationals as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(Rational::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let row = line
                .split(',')
                .map(|tok| {
                    tok.parse::<Rational>()
                        .map_err(|e| Error::InvalidParameter(e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; use the `try_*` methods when the
// shapes come from user input.
impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_add(rhs).unwrap()
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_sub(rhs).unwrap()
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).unwrap()
    }
}

impl Mul<&RationalMatrix> for &Rational {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        rhs.scale(self)
    }
}

impl Mul<RationalMatrix> for Rational {
    type Output = RationalMatrix;
    fn mul(self, rhs: RationalMatrix) -> RationalMatrix {
        rhs.scale(&self)
    }
}

impl Mul<&RationalMatrix> for i64 {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        rhs.scale(&Rational::from_integer(self))
    }
}

impl Mul<RationalMatrix> for i64 {
    type Output = RationalMatrix;
    fn mul(self, rhs: RationalMatrix) -> RationalMatrix {
        rhs.scale(&Rational::from_integer(self))
    }
}

impl Add for RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: RationalMatrix) -> RationalMatrix {
        &self + &rhs
    }
}

impl Sub for RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: RationalMatrix) -> RationalMatrix {
        &self - &rhs
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        -&self
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(Rational::to_string).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn block_assembly() {
        let a2 = RationalMatrix::exchange2();
        let j23 = RationalMatrix::ones(2, 3);
        let m = RationalMatrix::from_blocks(&[
            vec![a2.clone(), j23.clone()],
            vec![
                j23.transpose(),
                2 * (RationalMatrix::ones_square(3) - RationalMatrix::identity(3)),
            ],
        ])
        .unwrap();
        assert_eq!(m.shape(), (5, 5));
        assert!(m.is_symmetric());
        assert_eq!(
            m.row(0).iter().map(|x| x.to_i64().unwrap()).collect::<Vec<_>>(),
            [0, 1, 1, 1, 1]
        );
        assert_eq!(
            m.row(4).iter().map(|x| x.to_i64().unwrap()).collect::<Vec<_>>(),
            [1, 1, 2, 2, 0]
        );
        assert_eq!(m.block(0, 0, 2, 2), a2);

        let bad = RationalMatrix::from_blocks(&[vec![a2.clone(), RationalMatrix::ones(3, 1)]]);
        assert!(matches!(bad, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn product_shape_checked() {
        let a = RationalMatrix::ones(2, 3);
        assert!(a.try_mul(&a).is_err());
        let p = &a * &a.transpose();
        assert_eq!(p, 3 * RationalMatrix::ones_square(2));
    }

    #[test]
    fn csv_round_trip() {
        let m = RationalMatrix::from_rows(vec![
            vec![ratio(-1, 2), ratio(1, 2)],
            vec![Rational::from_integer(3), Rational::zero()],
        ])
        .unwrap();
        let csv = m.to_csv();
        assert_eq!(csv, "-1/2,1/2\n3,0\n");
        assert_eq!(RationalMatrix::from_csv(&csv).unwrap(), m);
    }
}
