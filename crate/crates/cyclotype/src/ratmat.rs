//! Dense matrices over arbitrary-precision rationals, with the handful of
//! exact kernels the oracle needs: products, commutators, rank, null space,
//! characteristic polynomials and squarefree parts. No floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A dense rows x cols rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Q::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_fn(rows.len(), rows[0].len(), |r, c| q(rows[r][c]))
    }

    pub fn at(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, k: &Q) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * k)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Mat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let v = out.at(r, c) + a * b;
                        *out.at_mut(r, c) = v;
                    }
                }
            }
        }
        out
    }

    /// [A, B] = AB - BA.
    pub fn commutator(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Q {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.at(i, i).clone()).fold(Q::zero(), |a, b| a + b)
    }

    pub fn pow(&self, mut e: usize) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Flatten to a column vector, row-major.
    pub fn vec(&self) -> Vec<Q> {
        self.data.clone()
    }

    /// Exact inverse by Gauss-Jordan; None for singular input.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !m.at(r, col).is_zero())?;
            if p != col {
                for c in 0..n {
                    let a = m.at(p, c).clone();
                    let b = m.at(col, c).clone();
                    *m.at_mut(p, c) = b;
                    *m.at_mut(col, c) = a;
                    let a = inv.at(p, c).clone();
                    let b = inv.at(col, c).clone();
                    *inv.at_mut(p, c) = b;
                    *inv.at_mut(col, c) = a;
                }
            }
            let pivot = m.at(col, col).clone();
            for c in 0..n {
                let v = m.at(col, c) / &pivot;
                *m.at_mut(col, c) = v;
                let v = inv.at(col, c) / &pivot;
                *inv.at_mut(col, c) = v;
            }
            for r in 0..n {
                if r == col || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in 0..n {
                    let v = m.at(r, c) - &factor * m.at(col, c);
                    *m.at_mut(r, c) = v;
                    let v = inv.at(r, c) - &factor * inv.at(col, c);
                    *inv.at_mut(r, c) = v;
                }
            }
        }
        Some(inv)
    }

    /// Rank by fraction-exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            // find a pivot
            let Some(p) = (row..rows).find(|&r| !m[r * cols + col].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..cols {
                    m.swap(row * cols + c, p * cols + c);
                }
            }
            let pivot = m[row * cols + col].clone();
            for r in row + 1..rows {
                let factor = &m[r * cols + col] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..cols {
                    let v = &m[r * cols + c] - &factor * &m[row * cols + c];
                    m[r * cols + c] = v;
                }
            }
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
        rank
    }

    /// Basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Q>> {
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..rows).find(|&r| !m[r * cols + col].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..cols {
                    m.swap(row * cols + c, p * cols + c);
                }
            }
            let pivot = m[row * cols + col].clone();
            for c in 0..cols {
                let v = &m[row * cols + c] / &pivot;
                m[row * cols + c] = v;
            }
            for r in 0..rows {
                if r == row || m[r * cols + col].is_zero() {
                    continue;
                }
                let factor = m[r * cols + col].clone();
                for c in 0..cols {
                    let v = &m[r * cols + c] - &factor * &m[row * cols + c];
                    m[r * cols + c] = v;
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
        let free_cols: Vec<usize> =
            (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![Q::zero(); cols];
            v[fc] = Q::one();
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = -m[r * cols + fc].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial by the Faddeev-LeVerrier recursion, highest
    /// degree first: [1, c_1, ..., c_n] with p(x) = x^n + c_1 x^{n-1} + ...
    pub fn charpoly(&self) -> Vec<Q> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Q::one()];
        let mut m = Mat::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = -(m.trace() / q(k as i64));
            for i in 0..n {
                let v = m.at(i, i) + &c;
                *m.at_mut(i, i) = v;
            }
            coeffs.push(c);
        }
        coeffs
    }

    /// Evaluate a polynomial (highest degree first) at this matrix.
    pub fn eval_poly(&self, coeffs: &[Q]) -> Mat {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Mat::zero(n, n);
        for c in coeffs {
            acc = self.mul(&acc);
            if !c.is_zero() {
                for i in 0..n {
                    let v = acc.at(i, i) + c;
                    *acc.at_mut(i, i) = v;
                }
            }
        }
        acc
    }
}

// Polynomials over Q: coefficients highest degree first, leading coefficient
// non-zero, the zero polynomial being the empty vector.

fn poly_trim(p: &mut Vec<Q>) {
    while p.first().map(|c| c.is_zero()).unwrap_or(false) {
        p.remove(0);
    }
}

pub fn poly_derivative(p: &[Q]) -> Vec<Q> {
    let n = p.len();
    if n <= 1 {
        return vec![];
    }
    let mut out = Vec::with_capacity(n - 1);
    for (i, c) in p[..n - 1].iter().enumerate() {
        let e = (n - 1 - i) as i64;
        out.push(c * q(e));
    }
    let mut o = out;
    poly_trim(&mut o);
    o
}

/// (quotient, remainder) of polynomial division.
pub fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem: Vec<Q> = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![Q::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let lead = &rem[0] / &b[0];
        let deg_q = rem.len() - 1 - db;
        let qpos = quot.len() - 1 - deg_q;
        quot[qpos] = lead.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = &rem[i] - &lead * bc;
            rem[i] = v;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

/// Monic gcd over `Q[x]`.
pub fn poly_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x: Vec<Q> = a.to_vec();
    let mut y: Vec<Q> = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.first().cloned() {
        for c in &mut x {
            *c = &*c / &lead;
        }
    }
    x
}

/// Squarefree part p / gcd(p, p').
pub fn poly_squarefree_part(p: &[Q]) -> Vec<Q> {
    let d = poly_derivative(p);
    if d.is_empty() {
        return p.to_vec();
    }
    let g = poly_gcd(p, &d);
    if g.len() <= 1 {
        return p.to_vec();
    }
    let (quot, rem) = poly_divmod(p, &g);
    debug_assert!(rem.is_empty(), "gcd must divide exactly");
    quot
}

/// |numerator| and denominator magnitudes stay manageable for our sizes;
/// a quick max-abs for diagnostics.
pub fn max_abs(m: &Mat) -> Q {
    let mut best = Q::zero();
    for r in 0..m.rows {
        for c in 0..m.cols {
            let a = m.at(r, c).abs();
            if a > best {
                best = a;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // check Ax = 0
        for r in 0..3 {
            let s: Q = (0..3).map(|c| m.at(r, c) * &k[0][c]).fold(q(0), |a, b| a + b);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn charpoly_of_companion() {
        // x^2 - 5x + 6 has companion [[0,-6],[1,5]]
        let m = Mat::from_i64(&[&[0, -6], &[1, 5]]);
        let p = m.charpoly();
        assert_eq!(p, vec![q(1), q(-5), q(6)]);
        // Cayley-Hamilton
        assert!(m.eval_poly(&p).is_zero());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
        let p = vec![q(1), q(-4), q(5), q(-2)];
        let sf = poly_squarefree_part(&p);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(sf, vec![q(1), q(-3), q(2)]);
    }

    #[test]
    fn divmod_roundtrip() {
        let a = vec![q(2), q(0), q(-3), q(1)]; // 2x^3 - 3x + 1
        let b = vec![q(1), q(1)]; // x + 1
        let (quot, rem) = poly_divmod(&a, &b);
        // check a = b*quot + rem by evaluating at a few points
        for x in [-3i64, -1, 0, 2, 5] {
            let ev = |p: &[Q]| {
                p.iter().fold(q(0), |acc, c| acc * q(x) + c.clone())
            };
            assert_eq!(ev(&a), ev(&b) * ev(&quot) + ev(&rem));
        }
    }

    #[test]
    fn nilpotent_power() {
        let m = Mat::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(!m.pow(2).is_zero());
        assert!(m.pow(3).is_zero());
    }
}
