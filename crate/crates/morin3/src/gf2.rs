//! Exact sparse linear algebra over GF(2).
//!
//! Chains, cochains and all (co)homology solves in this crate live over the
//! two-element field. Vectors store the sorted support of their 1-entries,
//! matrices store one sorted support list per row. Elimination is fully
//! deterministic: pivots are always the lowest-index nonzero column, and
//! `solve` returns the solution with zeros in every free column.

use crate::error::{Error, Result};

/// A vector over GF(2), stored as the sorted list of indices holding 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    support: Vec<usize>,
}

impl Gf2Vector {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Gf2Vector {
            len,
            support: Vec::new(),
        }
    }

    /// All-ones vector.
    pub fn ones(len: usize) -> Self {
        Gf2Vector {
            len,
            support: (0..len).collect(),
        }
    }

    /// Builds a vector from a list of indices. Repeated indices cancel in
    /// pairs, matching mod-2 chain addition.
    pub fn from_support(len: usize, indices: &[usize]) -> Result<Self> {
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        let mut support = Vec::with_capacity(sorted.len());
        let mut i = 0;
        while i < sorted.len() {
            let mut run = 1;
            while i + run < sorted.len() && sorted[i + run] == sorted[i] {
                run += 1;
            }
            if run % 2 == 1 {
                support.push(sorted[i]);
            }
            i += run;
        }
        if let Some(&max) = support.last() {
            if max >= len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    got: max + 1,
                });
            }
        }
        Ok(Gf2Vector { len, support })
    }

    /// Vector with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        assert!(index < len, "unit index {index} out of range {len}");
        Gf2Vector {
            len,
            support: vec![index],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn get(&self, index: usize) -> bool {
        self.support.binary_search(&index).is_ok()
    }

    /// Lowest index holding a 1, if any.
    pub fn leading(&self) -> Option<usize> {
        self.support.first().copied()
    }

    /// Mod-2 sum (XOR): symmetric difference of supports.
    pub fn add(&self, other: &Gf2Vector) -> Result<Gf2Vector> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        Ok(Gf2Vector {
            len: self.len,
            support: xor_sorted(&self.support, &other.support),
        })
    }

    /// Mod-2 dot product: parity of the support intersection.
    pub fn dot(&self, other: &Gf2Vector) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        let mut parity = false;
        let (mut i, mut j) = (0, 0);
        while i < self.support.len() && j < other.support.len() {
            match self.support[i].cmp(&other.support[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    parity = !parity;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(parity)
    }
}

fn xor_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A sparse matrix over GF(2): one sorted support list per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    row_support: Vec<Vec<usize>>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            row_support: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix {
            rows: n,
            cols: n,
            row_support: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from per-row support lists. Entries in each row may be
    /// unsorted or repeated; repeats cancel mod 2.
    pub fn from_rows(cols: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut row_support = Vec::with_capacity(rows.len());
        for r in rows {
            let v = Gf2Vector::from_support(cols, &r)?;
            row_support.push(v.support);
        }
        Ok(Gf2Matrix {
            rows: row_support.len(),
            cols,
            row_support,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row_support[r].binary_search(&c).is_ok()
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.row_support[r]
    }

    pub fn is_zero(&self) -> bool {
        self.row_support.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut cols_support = vec![Vec::new(); self.cols];
        for (r, row) in self.row_support.iter().enumerate() {
            for &c in row {
                cols_support[c].push(r);
            }
        }
        Gf2Matrix {
            rows: self.cols,
            cols: self.rows,
            row_support: cols_support,
        }
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut support = Vec::new();
        for (r, row) in self.row_support.iter().enumerate() {
            let mut parity = false;
            let (mut i, mut j) = (0, 0);
            let vs = v.support();
            while i < row.len() && j < vs.len() {
                match row[i].cmp(&vs[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        parity = !parity;
                        i += 1;
                        j += 1;
                    }
                }
            }
            if parity {
                support.push(r);
            }
        }
        Ok(Gf2Vector {
            len: self.rows,
            support,
        })
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut rows = Vec::with_capacity(self.rows);
        for row in &self.row_support {
            let mut acc: Vec<usize> = Vec::new();
            for &k in row {
                acc = xor_sorted(&acc, &other.row_support[k]);
            }
            rows.push(acc);
        }
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: other.cols,
            row_support: rows,
        })
    }
}

/// Outcome of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Gf2Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form over GF(2).
///
/// Columns are scanned left to right and the pivot of each step is the
/// lowest-index column holding a 1 in the remaining rows, so the result is
/// identical across runs and platforms.
pub fn rref(m: &Gf2Matrix) -> Rref {
    let mut rows = m.row_support.clone();
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..m.cols {
        if next_row >= rows.len() {
            break;
        }
        let hit = (next_row..rows.len()).find(|&r| rows[r].first() == Some(&col));
        // Leading entries below next_row can only sit at or after `col`
        // because earlier columns were already cleared.
        let Some(hit) = hit else { continue };
        rows.swap(next_row, hit);
        let pivot_row = rows[next_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next_row && row.binary_search(&col).is_ok() {
                *row = xor_sorted(row, &pivot_row);
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    let rank = pivots.len();
    Rref {
        matrix: Gf2Matrix {
            rows: m.rows,
            cols: m.cols,
            row_support: rows,
        },
        pivots,
        rank,
    }
}

/// Solves `m x = b`. Returns `None` when the system is inconsistent; when it
/// is underdetermined, returns the solution with zeros in all free columns.
pub fn solve(m: &Gf2Matrix, b: &Gf2Vector) -> Result<Option<Gf2Vector>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            got: b.len(),
        });
    }
    // Augmented column sits at index `cols`; a pivot landing there means
    // the right-hand side is outside the column space.
    let mut aug_rows = m.row_support.clone();
    for (r, row) in aug_rows.iter_mut().enumerate() {
        if b.get(r) {
            row.push(m.cols);
        }
    }
    let aug = Gf2Matrix {
        rows: m.rows,
        cols: m.cols + 1,
        row_support: aug_rows,
    };
    let red = rref(&aug);
    if red.pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut support = Vec::new();
    for (i, &p) in red.pivots.iter().enumerate() {
        if red.matrix.get(i, m.cols) {
            support.push(p);
        }
    }
    support.sort_unstable();
    Ok(Some(Gf2Vector {
        len: m.cols,
        support,
    }))
}

/// A basis of the null space of `m`, one vector per free column, in
/// ascending free-column order.
pub fn kernel_basis(m: &Gf2Matrix) -> Vec<Gf2Vector> {
    let red = rref(m);
    let mut basis = Vec::with_capacity(m.cols - red.rank);
    let mut pivot_iter = red.pivots.iter().copied().peekable();
    let mut pivot_of_col = vec![None; m.cols];
    for (row, &p) in red.pivots.iter().enumerate() {
        pivot_of_col[p] = Some(row);
    }
    for col in 0..m.cols {
        if pivot_iter.peek() == Some(&col) {
            pivot_iter.next();
            continue;
        }
        let mut support = vec![col];
        for (row, &p) in red.pivots.iter().enumerate() {
            if red.matrix.get(row, col) {
                support.push(p);
            }
        }
        support.sort_unstable();
        let v = Gf2Vector {
            len: m.cols,
            support,
        };
        debug_assert!(m.mul_vec(&v).map(|w| w.is_zero()).unwrap_or(false));
        basis.push(v);
    }
    basis
}

/// Incremental row-space container: vectors reduced against each other so
/// that leading indices are pairwise distinct. Used for fast repeated
/// membership tests (is this cochain a coboundary?).
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Gf2Vector>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &Gf2Vector) -> Gf2Vector {
        let mut cur = v.clone();
        loop {
            let Some(lead) = cur.leading() else {
                return cur;
            };
            match self.rows.binary_search_by_key(&lead, |r| {
                r.leading().expect("echelon rows are nonzero")
            }) {
                Ok(i) => {
                    cur = cur.add(&self.rows[i]).expect("echelon length mismatch");
                }
                Err(_) => return cur,
            }
        }
    }

    /// Inserts `v` if independent of the stored rows; returns whether the
    /// span grew.
    pub fn insert(&mut self, v: &Gf2Vector) -> bool {
        let reduced = self.reduce(v);
        let Some(lead) = reduced.leading() else {
            return false;
        };
        let pos = self
            .rows
            .binary_search_by_key(&lead, |r| r.leading().expect("echelon rows are nonzero"))
            .unwrap_err();
        self.rows.insert(pos, reduced);
        true
    }

    /// True when `v` lies in the span of the stored rows.
    pub fn contains(&self, v: &Gf2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Plain dense eliminator, kept deliberately naive and separate from the
    /// sparse path above so the two can check each other.
    fn dense_rank(rows: Vec<Vec<bool>>) -> usize {
        let mut rows = rows;
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut rank = 0;
        for col in 0..ncols {
            let mut pivot = None;
            for (r, row) in rows.iter().enumerate().skip(rank) {
                if row[col] {
                    pivot = Some(r);
                    break;
                }
            }
            if let Some(p) = pivot {
                rows.swap(rank, p);
                let pivot_row = rows[rank].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && row[col] {
                        for c in 0..ncols {
                            row[c] ^= pivot_row[c];
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn to_dense(m: &Gf2Matrix) -> Vec<Vec<bool>> {
        (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
            .collect()
    }

    #[test]
    fn rref_identity() {
        let id = Gf2Matrix::identity(3);
        let red = rref(&id);
        assert_eq!(red.rank, 3);
        assert_eq!(red.pivots, vec![0, 1, 2]);
        assert_eq!(red.matrix, id);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Gf2Matrix::zero(4, 5);
        let red = rref(&z);
        assert_eq!(red.rank, 0);
        assert!(red.pivots.is_empty());
    }

    #[test]
    fn rref_rank_matches_dense_oracle() {
        // Fixed LCG so the matrix suite is identical on every run.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let mut rows = Vec::new();
            for _ in 0..6 {
                let bits = next();
                let row: Vec<usize> = (0..6).filter(|c| bits >> c & 1 == 1).collect();
                rows.push(row);
            }
            let m = Gf2Matrix::from_rows(6, rows).unwrap();
            assert_eq!(rref(&m).rank, dense_rank(to_dense(&m)));
        }
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let id = Gf2Matrix::identity(4);
        let b = Gf2Vector::from_support(4, &[1, 3]).unwrap();
        assert_eq!(solve(&id, &b).unwrap(), Some(b));
    }

    #[test]
    fn solve_zero_matrix_nonzero_rhs_is_inconsistent() {
        let z = Gf2Matrix::zero(3, 4);
        let b = Gf2Vector::unit(3, 1);
        assert_eq!(solve(&z, &b).unwrap(), None);
    }

    #[test]
    fn solve_rejects_bad_length() {
        let z = Gf2Matrix::zero(3, 4);
        let b = Gf2Vector::zeros(5);
        assert!(matches!(
            solve(&z, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(kernel_basis(&Gf2Matrix::identity(5)).is_empty());
    }

    #[test]
    fn kernel_of_zero_is_standard_basis() {
        let basis = kernel_basis(&Gf2Matrix::zero(3, 3));
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            assert_eq!(v.support(), &[i]);
        }
    }

    #[test]
    fn echelon_membership() {
        let mut ech = Echelon::new();
        let a = Gf2Vector::from_support(5, &[0, 2]).unwrap();
        let b = Gf2Vector::from_support(5, &[2, 4]).unwrap();
        assert!(ech.insert(&a));
        assert!(ech.insert(&b));
        assert!(!ech.insert(&a.add(&b).unwrap()));
        assert!(ech.contains(&Gf2Vector::from_support(5, &[0, 4]).unwrap()));
        assert!(!ech.contains(&Gf2Vector::unit(5, 1)));
    }

    #[test]
    fn from_support_cancels_repeats() {
        let v = Gf2Vector::from_support(6, &[3, 1, 3, 3, 1, 5]).unwrap();
        assert_eq!(v.support(), &[3, 5]);
    }

    fn sparse_matrix_strategy() -> impl Strategy<Value = Gf2Matrix> {
        (1usize..8, 1usize..8).prop_flat_map(|(rows, cols)| {
            proptest::collection::vec(
                proptest::collection::vec(0..cols, 0..=cols),
                rows..=rows,
            )
            .prop_map(move |r| Gf2Matrix::from_rows(cols, r).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in sparse_matrix_strategy()) {
            let red = rref(&m);
            prop_assert_eq!(red.rank + kernel_basis(&m).len(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in sparse_matrix_strategy()) {
            let once = rref(&m).matrix;
            let twice = rref(&once).matrix;
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn solve_recovers_consistent_rhs(m in sparse_matrix_strategy(), seed in 0u64..1000) {
            let mut x_support = Vec::new();
            for c in 0..m.cols() {
                if (seed >> (c % 10)) & 1 == 1 {
                    x_support.push(c);
                }
            }
            let x = Gf2Vector::from_support(m.cols(), &x_support).unwrap();
            let b = m.mul_vec(&x).unwrap();
            let found = solve(&m, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&found).unwrap(), b);
        }

        #[test]
        fn kernel_vectors_are_in_the_kernel(m in sparse_matrix_strategy()) {
            for v in kernel_basis(&m) {
                prop_assert!(m.mul_vec(&v).unwrap().is_zero());
            }
        }
    }
}
