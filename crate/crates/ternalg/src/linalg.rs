//! Dense exact vectors, matrices and small tensors over `QuadScalar`.
//!
//! Indices are 0-based inside the library. Reports and files use 1-based
//! indices; the conversion happens at those boundaries only.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::QuadScalar;

fn dim_check(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn radicand_check(a: u32, b: u32) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RadicandMismatch(a, b))
    }
}

fn uniform_radicand<'a>(d: u32, xs: impl IntoIterator<Item = &'a QuadScalar>) -> Result<()> {
    for x in xs {
        radicand_check(d, x.radicand())?;
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    d: u32,
    entries: Vec<QuadScalar>,
}

impl Vector {
    pub fn zeros(n: usize, d: u32) -> Self {
        Vector {
            d,
            entries: vec![QuadScalar::zero(d); n],
        }
    }

    /// The basis vector `e_{k+1}` of an `n`-dimensional space.
    pub fn basis(n: usize, k: usize, d: u32) -> Self {
        let mut v = Self::zeros(n, d);
        v.entries[k] = QuadScalar::one(d);
        v
    }

    pub fn from_entries(entries: Vec<QuadScalar>, d: u32) -> Result<Self> {
        uniform_radicand(d, &entries)?;
        Ok(Vector { d, entries })
    }

    pub fn from_ints(xs: &[i64], d: u32) -> Self {
        Vector {
            d,
            entries: xs.iter().map(|&x| QuadScalar::from_int(x, d)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn entries(&self) -> &[QuadScalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &QuadScalar {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, x: QuadScalar) {
        assert_eq!(x.radicand(), self.d, "radicand mismatch");
        self.entries[i] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QuadScalar::is_zero)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &QuadScalar, other: &Vector) {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            a.add_mul(c, b);
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        dim_check(self.dim(), other.dim())?;
        radicand_check(self.d, other.d)?;
        Ok(Vector {
            d: self.d,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        dim_check(self.dim(), other.dim())?;
        radicand_check(self.d, other.d)?;
        Ok(Vector {
            d: self.d,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Vector {
        Vector {
            d: self.d,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &QuadScalar) -> Vector {
        Vector {
            d: self.d,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Concatenation `self ⊕ other` on a block basis.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Vector { d: self.d, entries }
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &QuadScalar)> {
        self.entries.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }
}

/// Writes a vector as a combination of `e1, e2, ...`, e.g. `e1-2*e2` or `0`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, x) in self.support() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if x.is_one() {
                write!(f, "e{}", i + 1)?;
            } else {
                write!(f, "({x})*e{}", i + 1)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Square matrix; `get(k, j)` is the coefficient of `e_k` in the image of `e_j`,
/// so columns are images of basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    d: u32,
    entries: Vec<QuadScalar>,
}

impl Matrix {
    pub fn zeros(n: usize, d: u32) -> Self {
        Matrix {
            n,
            d,
            entries: vec![QuadScalar::zero(d); n * n],
        }
    }

    pub fn identity(n: usize, d: u32) -> Self {
        let mut m = Self::zeros(n, d);
        for i in 0..n {
            m.entries[i * n + i] = QuadScalar::one(d);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QuadScalar>>, d: u32) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            dim_check(n, row.len())?;
            uniform_radicand(d, &row)?;
            entries.extend(row);
        }
        Ok(Matrix { n, d, entries })
    }

    /// Builds the matrix whose `j`-th column is `cols[j]`, i.e. `f(e_j) = cols[j]`.
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        let d = cols.first().map_or(crate::scalar::DEFAULT_RADICAND, Vector::radicand);
        let mut m = Self::zeros(n, d);
        for (j, c) in cols.iter().enumerate() {
            dim_check(n, c.dim())?;
            radicand_check(d, c.radicand())?;
            for k in 0..n {
                m.entries[k * n + j] = c.get(k).clone();
            }
        }
        Ok(m)
    }

    /// Row-major integer literal, rows as usually written.
    pub fn from_int_rows(rows: &[&[i64]], d: u32) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| QuadScalar::from_int(x, d)).collect())
            .collect();
        Self::from_rows(rows, d).expect("square integer matrix")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn get(&self, k: usize, j: usize) -> &QuadScalar {
        &self.entries[k * self.n + j]
    }

    pub fn set(&mut self, k: usize, j: usize, x: QuadScalar) {
        assert_eq!(x.radicand(), self.d, "radicand mismatch");
        self.entries[k * self.n + j] = x;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[QuadScalar]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector {
            d: self.d,
            entries: (0..self.n).map(|k| self.get(k, j).clone()).collect(),
        }
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        dim_check(self.n, v.dim())?;
        radicand_check(self.d, v.radicand())?;
        let mut out = Vector::zeros(self.n, self.d);
        for (j, x) in v.support() {
            for k in 0..self.n {
                out.entries[k].add_mul(self.get(k, j), x);
            }
        }
        Ok(out)
    }

    /// Matrix of `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        dim_check(self.n, other.n)?;
        radicand_check(self.d, other.d)?;
        let n = self.n;
        let mut out = Matrix::zeros(n, self.d);
        for k in 0..n {
            for m in 0..n {
                let a = self.get(k, m);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[k * n + j].add_mul(a, other.get(m, j));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(n, self.d);
        for k in 0..n {
            for j in 0..n {
                out.entries[j * n + k] = self.get(k, j).clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &QuadScalar) -> Matrix {
        Matrix {
            n: self.n,
            d: self.d,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        dim_check(self.n, other.n)?;
        radicand_check(self.d, other.d)?;
        Ok(Matrix {
            n: self.n,
            d: self.d,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n, self.d)
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        radicand_check(self.d, other.d)?;
        let n = self.n + other.n;
        let mut out = Matrix::zeros(n, self.d);
        for k in 0..self.n {
            for j in 0..self.n {
                out.entries[k * n + j] = self.get(k, j).clone();
            }
        }
        for k in 0..other.n {
            for j in 0..other.n {
                out.entries[(self.n + k) * n + self.n + j] = other.get(k, j).clone();
            }
        }
        Ok(out)
    }

    /// Exact Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n, self.d);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(pivot * n + j, col * n + j);
                    inv.entries.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                a.entries[col * n + j] = a.get(col, j) * &p;
                inv.entries[col * n + j] = inv.get(col, j) * &p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &factor * a.get(col, j);
                    a.entries[r * n + j] -= &t;
                    let t = &factor * inv.get(col, j);
                    inv.entries[r * n + j] -= &t;
                }
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// A nonzero `v` with `M v = 0`, if `M` is singular.
    pub fn kernel_vector(&self) -> Option<Vector> {
        let n = self.n;
        let mut a = self.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        let mut free = None;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !a.get(r, col).is_zero()) else {
                free.get_or_insert(col);
                continue;
            };
            for j in 0..n {
                a.entries.swap(p * n + j, row * n + j);
            }
            let inv = a.get(row, col).inv().expect("nonzero pivot");
            for j in 0..n {
                a.entries[row * n + j] = a.get(row, j) * &inv;
            }
            for r in 0..n {
                let factor = a.get(r, col).clone();
                if r == row || factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &factor * a.get(row, j);
                    a.entries[r * n + j] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let f = free?;
        // reduced row echelon form: pivot variables are minus the free column
        let mut v = Vector::zeros(n, self.d);
        v.set(f, QuadScalar::one(self.d));
        for (r, &c) in pivots.iter().enumerate() {
            v.set(c, -a.get(r, f));
        }
        Some(v)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Element of `A ⊗ A ⊗ A`, dense in the basis `e_r ⊗ e_s ⊗ e_t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    n: usize,
    d: u32,
    entries: Vec<QuadScalar>,
}

impl Tensor3 {
    pub fn zeros(n: usize, d: u32) -> Self {
        Tensor3 {
            n,
            d,
            entries: vec![QuadScalar::zero(d); n * n * n],
        }
    }

    /// `x ⊗ y ⊗ z`.
    pub fn pure(x: &Vector, y: &Vector, z: &Vector) -> Result<Self> {
        let n = x.dim();
        dim_check(n, y.dim())?;
        dim_check(n, z.dim())?;
        let d = x.radicand();
        radicand_check(d, y.radicand())?;
        radicand_check(d, z.radicand())?;
        let mut t = Tensor3::zeros(n, d);
        for (r, a) in x.support() {
            for (s, b) in y.support() {
                let ab = a * b;
                for (u, c) in z.support() {
                    t.entries[(r * n + s) * n + u] = &ab * c;
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn get(&self, r: usize, s: usize, t: usize) -> &QuadScalar {
        &self.entries[(r * self.n + s) * self.n + t]
    }

    pub fn entry_mut(&mut self, r: usize, s: usize, t: usize) -> &mut QuadScalar {
        let n = self.n;
        &mut self.entries[(r * n + s) * n + t]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QuadScalar::is_zero)
    }

    pub fn add_assign(&mut self, other: &Tensor3) {
        assert_eq!(self.n, other.n, "tensor dimension mismatch");
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Result<Tensor3> {
        dim_check(self.n, other.n)?;
        radicand_check(self.d, other.d)?;
        Ok(Tensor3 {
            n: self.n,
            d: self.d,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Tensor3 {
        Tensor3 {
            n: self.n,
            d: self.d,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    /// Nonzero coefficients as `((r, s, t), value)`, lexicographic.
    pub fn support(&self) -> impl Iterator<Item = ((usize, usize, usize), &QuadScalar)> {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| ((i / (n * n), (i / n) % n, i % n), x))
    }

    /// Applies `f` to one tensor slot (0, 1 or 2).
    fn map_slot(&self, slot: usize, f: &Matrix) -> Tensor3 {
        let n = self.n;
        let mut out = Tensor3::zeros(n, self.d);
        for ((r, s, t), x) in self.support() {
            let idx = [r, s, t];
            let src = idx[slot];
            for k in 0..n {
                let c = f.get(k, src);
                if c.is_zero() {
                    continue;
                }
                let mut j = idx;
                j[slot] = k;
                out.entries[(j[0] * n + j[1]) * n + j[2]].add_mul(c, x);
            }
        }
        out
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((r, s, t), x) in self.support() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if x.is_one() {
                write!(f, "e{}⊗e{}⊗e{}", r + 1, s + 1, t + 1)?;
            } else {
                write!(f, "({x})*e{}⊗e{}⊗e{}", r + 1, s + 1, t + 1)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `(f1 ⊗ f2 ⊗ f3)(t)`.
pub fn tensor3_map(f1: &Matrix, f2: &Matrix, f3: &Matrix, t: &Tensor3) -> Result<Tensor3> {
    for f in [f1, f2, f3] {
        dim_check(t.dim(), f.dim())?;
        radicand_check(t.radicand(), f.radicand())?;
    }
    Ok(t.map_slot(0, f1).map_slot(1, f2).map_slot(2, f3))
}

/// Dense 4-index array `T[o][i][j][k]` encoding a trilinear map
/// `U1 ⊗ U2 ⊗ U3 → W` with `T(u_i, u_j, u_k) = Σ_o T[o][i][j][k] w_o`
/// (or, read the other way round, a coproduct `e_o ↦ Σ T[o][i][j][k] e_i⊗e_j⊗e_k`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor4 {
    dims: [usize; 4],
    d: u32,
    data: Vec<QuadScalar>,
}

impl Tensor4 {
    pub fn zeros(dims: [usize; 4], d: u32) -> Self {
        Tensor4 {
            dims,
            d,
            data: vec![QuadScalar::zero(d); dims.iter().product()],
        }
    }

    /// Cubical tensor of extent `n` in every slot.
    pub fn cube(n: usize, d: u32) -> Self {
        Self::zeros([n; 4], d)
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    fn offset(&self, o: usize, i: usize, j: usize, k: usize) -> usize {
        let [_, a, b, c] = self.dims;
        ((o * a + i) * b + j) * c + k
    }

    pub fn get(&self, o: usize, i: usize, j: usize, k: usize) -> &QuadScalar {
        &self.data[self.offset(o, i, j, k)]
    }

    pub fn set(&mut self, o: usize, i: usize, j: usize, k: usize, x: QuadScalar) {
        assert_eq!(x.radicand(), self.d, "radicand mismatch");
        let at = self.offset(o, i, j, k);
        self.data[at] = x;
    }

    pub fn entry_mut(&mut self, o: usize, i: usize, j: usize, k: usize) -> &mut QuadScalar {
        let at = self.offset(o, i, j, k);
        &mut self.data[at]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QuadScalar::is_zero)
    }

    pub fn neg(&self) -> Tensor4 {
        Tensor4 {
            dims: self.dims,
            d: self.d,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// All positions `[o, i, j, k]` with their values, zero or not, in
    /// lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ([usize; 4], &QuadScalar)> {
        let [_, a, b, c] = self.dims;
        self.data.iter().enumerate().map(move |(p, x)| {
            let k = p % c;
            let j = (p / c) % b;
            let i = (p / (c * b)) % a;
            let o = p / (c * b * a);
            ([o, i, j, k], x)
        })
    }

    /// Nonzero positions in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = ([usize; 4], &QuadScalar)> {
        self.iter().filter(|(_, x)| !x.is_zero())
    }

    /// Evaluates the trilinear map on three vectors.
    pub fn eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        let [w, a, b, c] = self.dims;
        dim_check(a, x.dim())?;
        dim_check(b, y.dim())?;
        dim_check(c, z.dim())?;
        for v in [x, y, z] {
            radicand_check(self.d, v.radicand())?;
        }
        let mut out = Vector::zeros(w, self.d);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let xy = xi * yj;
                for (k, zk) in z.support() {
                    let coef = &xy * zk;
                    for o in 0..w {
                        out.entries[o].add_mul(self.get(o, i, j, k), &coef);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Value on basis inputs: the vector `Σ_o T[o][i][j][k] w_o`.
    pub fn eval_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        Vector {
            d: self.d,
            entries: (0..self.dims[0]).map(|o| self.get(o, i, j, k).clone()).collect(),
        }
    }

    /// Post-composition of the output slot with `f`: `(f ∘ T)`.
    pub fn map_output(&self, f: &Matrix) -> Result<Tensor4> {
        dim_check(self.dims[0], f.dim())?;
        radicand_check(self.d, f.radicand())?;
        let mut out = Tensor4::zeros(self.dims, self.d);
        for ([m, i, j, k], x) in self.support() {
            for o in 0..self.dims[0] {
                let c = f.get(o, m);
                if !c.is_zero() {
                    out.entry_mut(o, i, j, k).add_mul(c, x);
                }
            }
        }
        Ok(out)
    }

    /// Pre-composition with maps on the input slots: `T ∘ (f1 ⊗ f2 ⊗ f3)`,
    /// where `None` stands for the identity.
    pub fn precompose(&self, fs: [Option<&Matrix>; 3]) -> Result<Tensor4> {
        let mut cur = self.clone();
        for (slot, f) in fs.into_iter().enumerate() {
            let Some(f) = f else { continue };
            dim_check(self.dims[slot + 1], f.dim())?;
            radicand_check(self.d, f.radicand())?;
            let mut out = Tensor4::zeros(self.dims, self.d);
            for (idx, x) in cur.support() {
                let src = idx[slot + 1];
                for k in 0..f.dim() {
                    // T'(.., e_k, ..) picks up T(.., e_src, ..) with weight f[src][k]
                    let c = f.get(src, k);
                    if c.is_zero() {
                        continue;
                    }
                    let mut j = idx;
                    j[slot + 1] = k;
                    out.entry_mut(j[0], j[1], j[2], j[3]).add_mul(c, x);
                }
            }
            cur = out;
        }
        Ok(cur)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &QuadScalar) -> Tensor4 {
        Tensor4 {
            dims: self.dims,
            d: self.d,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }
}

impl fmt::Debug for Tensor4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor4{:?}{{", self.dims)?;
        for (i, ([o, a, b, c], x)) in self.support().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{},{},{},{}]={x}", o + 1, a + 1, b + 1, c + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D: u32 = 5;

    fn swap() -> Matrix {
        Matrix::from_int_rows(&[&[0, 1], &[1, 0]], D)
    }

    #[test]
    fn inverse_of_identity() {
        let i = Matrix::identity(2, D);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn involutive_automorphism_is_its_own_inverse() {
        let m = Matrix::from_int_rows(&[&[-1, -1], &[0, 1]], D);
        assert!(m.compose(&m).unwrap().is_identity());
        assert_eq!(m.inverse().unwrap(), m);
    }

    #[test]
    fn rank_one_is_singular() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, 1]], D);
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_with_surds() {
        // rows [[1/√5, 3/√5], [-2/√5, -1/√5]]
        let r = |a: i64| QuadScalar::quad(0, a, 5, D);
        let m = Matrix::from_rows(vec![vec![r(1), r(3)], vec![r(-2), r(-1)]], D).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&m).unwrap().is_identity());
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]], D);
        let v = m.kernel_vector().unwrap();
        assert!(!v.is_zero());
        assert!(m.apply(&v).unwrap().is_zero());
        assert_eq!(swap().kernel_vector(), None);
        assert!(Matrix::zeros(2, D).kernel_vector().is_some());
    }

    #[test]
    fn columns_are_images() {
        // rho(e1) = e1, rho(e2) = e1 - e2
        let rho = Matrix::from_int_rows(&[&[1, 1], &[0, -1]], D);
        assert_eq!(rho.apply(&Vector::basis(2, 1, D)).unwrap(), Vector::from_ints(&[1, -1], D));
        assert_eq!(rho.column(0), Vector::basis(2, 0, D));
    }

    #[test]
    fn tensor3_map_examples() {
        let e2 = Vector::basis(2, 1, D);
        let e1 = Vector::basis(2, 0, D);
        let t = Tensor3::pure(&e2, &e2, &e2).unwrap();
        let id = Matrix::identity(2, D);
        assert_eq!(tensor3_map(&id, &id, &id, &t).unwrap(), t);
        let rho = Matrix::from_int_rows(&[&[1, 0], &[1, 1]], D);
        assert_eq!(tensor3_map(&rho, &rho, &rho, &t).unwrap(), t);
        let s = swap();
        assert_eq!(
            tensor3_map(&s, &s, &s, &t).unwrap(),
            Tensor3::pure(&e1, &e1, &e1).unwrap()
        );
        let id3 = Matrix::identity(3, D);
        assert!(tensor3_map(&id3, &id, &id, &t).is_err());
    }

    #[test]
    fn tensor4_eval_is_trilinear_extension() {
        let mut t = Tensor4::cube(2, D);
        t.set(1, 0, 0, 0, QuadScalar::one(D));
        let x = Vector::from_ints(&[2, 1], D);
        assert_eq!(t.eval(&x, &x, &x).unwrap(), Vector::from_ints(&[0, 8], D));
        assert_eq!(t.eval_basis(0, 0, 0), Vector::basis(2, 1, D));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Vector::from_ints(&[1, -2], D).to_string(), "e1 + (-2)*e2");
        assert_eq!(Vector::zeros(2, D).to_string(), "0");
    }
}
