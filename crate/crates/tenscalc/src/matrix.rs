//! Dense matrices over exact rationals: the concrete strict tensor category
//! used for evaluation (objects are dimensions, tensor is Kronecker).

use std::fmt;

use num::{BigRational, One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        RatMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::new(rows, cols, data.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigRational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigRational::one();
        }
        RatMatrix { rows: n, cols: n, data }
    }

    /// Matrix product self * rhs.
    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut data = vec![BigRational::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = &data[i * rhs.cols + j] + a * rhs.at(k, j);
                    data[i * rhs.cols + j] = cur;
                }
            }
        }
        RatMatrix { rows: self.rows, cols: rhs.cols, data }
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &RatMatrix) -> RatMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut data = vec![BigRational::zero(); rows * cols];
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let r = i1 * rhs.rows + i2;
                        let c = j1 * rhs.cols + j2;
                        data[r * cols + c] = a * rhs.at(i2, j2);
                    }
                }
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn parse_entries(rows: &[Vec<String>]) -> Result<RatMatrix, String> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err("ragged matrix".into());
            }
            for cell in row {
                let q: BigRational =
                    cell.parse().map_err(|e| format!("bad rational {cell:?}: {e}"))?;
                data.push(q);
            }
        }
        Ok(RatMatrix { rows: r, cols: c, data })
    }

    pub fn to_entries(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_kron() {
        let a = RatMatrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = RatMatrix::from_i64(3, 2, &[7, 8, 9, 10, 11, 12]);
        let ab = a.mul(&b);
        assert_eq!(ab, RatMatrix::from_i64(2, 2, &[58, 64, 139, 154]));

        let id = RatMatrix::identity(3);
        assert_eq!(a.mul(&id), a);

        let x = RatMatrix::from_i64(1, 2, &[1, 2]);
        let y = RatMatrix::from_i64(2, 1, &[3, 4]);
        let k = x.kron(&y);
        assert_eq!(k, RatMatrix::from_i64(2, 2, &[3, 6, 4, 8]));
    }

    #[test]
    fn kron_middle_four() {
        let f = RatMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let g = RatMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let f2 = RatMatrix::from_i64(2, 2, &[2, 0, 0, 2]);
        let g2 = RatMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let lhs = g.mul(&f).kron(&g2.mul(&f2));
        let rhs = g.kron(&g2).mul(&f.kron(&f2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_round_trip() {
        let m = RatMatrix::parse_entries(&[
            vec!["1/2".into(), "0".into()],
            vec!["-3".into(), "5/7".into()],
        ])
        .unwrap();
        assert_eq!(m.rows(), 2);
        let back = RatMatrix::parse_entries(&m.to_entries()).unwrap();
        assert_eq!(m, back);
    }
}
