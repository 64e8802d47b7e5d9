//! Exact linear algebra over the rationals and the integers.
//!
//! Ranks are computed fraction-free: rows are cleared to integers and
//! reduced with cross-multiplication only, so no rational blow-up occurs on
//! the large 0/1 matrices made of permutation rows. Those matrices are
//! streamed row by row and never materialised. Integer kernels use
//! unimodular row operations (gcd pivoting), which yields a basis of the
//! full kernel lattice, not just a finite-index sublattice; that exactness
//! matters when kernel vectors act as exponents.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{enumerate_permutations, Permutation};
use crate::rational::{Int, Rat};
use crate::{Error, Result};

/// A dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<ExactMatrix> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<ExactMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        ExactMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rank by fraction-free elimination on denominator-cleared rows.
    pub fn rank(&self) -> usize {
        let mut echelon = IntEchelon::new(self.cols);
        for r in 0..self.rows {
            echelon.insert(clear_denominators(self.row(r)));
        }
        echelon.rank()
    }

    /// Basis of {v : Mv = 0}, via reduced row echelon form over the
    /// rationals (inputs here are small, so plain rational elimination is
    /// fine). Free columns get unit value.
    #[allow(clippy::needless_range_loop)]
    pub fn nullspace_basis(&self) -> Vec<Vec<Rat>> {
        let mut m: Vec<Vec<Rat>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivot_cols = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(pivot) = (next_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(next_row, pivot);
            let inv = m[next_row][col].recip();
            for c in col..self.cols {
                let scaled = &m[next_row][c] * &inv;
                m[next_row][c] = scaled;
            }
            for r in 0..self.rows {
                if r != next_row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..self.cols {
                        let delta = &factor * &m[next_row][c];
                        m[r][c] -= delta;
                    }
                }
            }
            pivot_cols.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Scales a rational row by the lcm of its denominators.
fn clear_denominators(row: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Streaming integer row-echelon accumulator. Rows are inserted one at a
/// time and reduced fraction-free against the stored pivots, so the rank of
/// an n! x n^2 matrix needs memory only for its at most n^2 pivot rows.
pub struct IntEchelon {
    cols: usize,
    // (pivot column, primitive row with zero entries left of the pivot)
    rows: Vec<(usize, Vec<Int>)>,
}

impl IntEchelon {
    pub fn new(cols: usize) -> IntEchelon {
        IntEchelon {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces the row against the accumulated echelon; true when it was
    /// independent and the rank grew.
    pub fn insert(&mut self, mut row: Vec<Int>) -> bool {
        assert_eq!(row.len(), self.cols);
        for (pivot_col, pivot_row) in &self.rows {
            if row[*pivot_col].is_zero() {
                continue;
            }
            // row := p * row - r * pivot_row, cancelling column pivot_col.
            let p = pivot_row[*pivot_col].clone();
            let r = row[*pivot_col].clone();
            for c in 0..self.cols {
                let updated = &row[c] * &p - &pivot_row[c] * &r;
                row[c] = updated;
            }
            make_primitive(&mut row);
        }
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut row);
        let at = self
            .rows
            .partition_point(|(pivot_col, _)| *pivot_col < lead);
        self.rows.insert(at, (lead, row));
        true
    }
}

/// Divides by the gcd and makes the leading entry positive.
fn make_primitive(row: &mut [Int]) {
    let mut g = Int::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        // Still normalise the sign below when nonzero.
    } else {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
    if let Some(lead) = row.iter().position(|x| !x.is_zero()) {
        if row[lead].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Basis of the left kernel {m : sum_i m_i * rows_i = 0} over the integers.
///
/// Runs unimodular row elimination on [M | I]; rows whose M-part vanishes
/// carry kernel combinations in the identity part. Because every step is
/// unimodular the result spans the full (saturated) kernel lattice, and each
/// basis vector comes out primitive with positive leading entry.
#[allow(clippy::needless_range_loop)]
pub fn integer_kernel_basis(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let q = rows.len();
    if q == 0 {
        return Vec::new();
    }
    let c = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == c), "ragged kernel input");
    let mut work: Vec<Vec<Int>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut aug = row.clone();
            aug.extend((0..q).map(|j| if i == j { Int::one() } else { Int::zero() }));
            aug
        })
        .collect();
    let mut pivoted = 0;
    for col in 0..c {
        // Combine the active rows until at most one has a nonzero entry here.
        let Some(first) = (pivoted..q).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(pivoted, first);
        for r in pivoted + 1..q {
            if work[r][col].is_zero() {
                continue;
            }
            let x = work[pivoted][col].clone();
            let y = work[r][col].clone();
            let ext = x.extended_gcd(&y);
            let (g, u, v) = (ext.gcd, ext.x, ext.y);
            let xa = &x / &g;
            let yb = &y / &g;
            for k in col..c + q {
                let a = work[pivoted][k].clone();
                let b = work[r][k].clone();
                work[pivoted][k] = &a * &u + &b * &v;
                work[r][k] = &b * &xa - &a * &yb;
            }
            debug_assert!(work[r][col].is_zero());
        }
        pivoted += 1;
        if pivoted == q {
            break;
        }
    }
    let mut basis: Vec<Vec<Int>> = work[pivoted..]
        .iter()
        .map(|row| row[c..].to_vec())
        .collect();
    for v in &mut basis {
        make_primitive(v);
    }
    basis
}

/// Rank of the span of vec(sigma) over all sigma in S_n, where vec lays the
/// permutation matrix out row-major with entry (i, sigma(i)) = 1.
pub fn perm_span_rank(n: usize) -> Result<usize> {
    let mut echelon = IntEchelon::new(n * n);
    for sigma in enumerate_permutations(n)? {
        echelon.insert(permutation_row(&sigma));
    }
    Ok(echelon.rank())
}

/// vec(sigma) as a 0/1 integer row of length n^2.
pub fn permutation_row(sigma: &Permutation) -> Vec<Int> {
    let n = sigma.n();
    let mut row = vec![Int::zero(); n * n];
    for i in 0..n {
        row[i * n + sigma.apply0(i)] = Int::one();
    }
    row
}

/// Outcome of checking the 12-unknown exponent system on indices {2,..,5}:
/// unknowns a_ij for ordered pairs, the two equation families
/// a_ij + a_jk + a_km = a_ik + a_kj + a_jm and a_ij + a_jk = a_ij' + a_j'k,
/// and the law that every solution sums to (points moved) * lambda along any
/// permutation of {2,..,5}, with lambda = (a_ij + a_ji)/2 pair-independent.
#[derive(Clone, Debug)]
pub struct S5Report {
    pub unknowns: usize,
    pub equations: usize,
    pub nullity: usize,
    /// (a_ij + a_ji)/2 agrees across all pairs on every basis solution.
    pub lambda_consistent: bool,
    /// Sum over moved points equals (moved count) * lambda for all 24
    /// permutations, on every basis solution.
    pub moved_sum_law_holds: bool,
    /// The all-equal assignment a_ij = 1 solves every equation.
    pub includes_constant_solution: bool,
}

impl S5Report {
    pub fn all_pass(&self) -> bool {
        self.lambda_consistent && self.moved_sum_law_holds && self.includes_constant_solution
    }
}

const S5_POINTS: [usize; 4] = [2, 3, 4, 5];

fn pair_index(i: usize, j: usize) -> usize {
    let pos = |x: usize| S5_POINTS.iter().position(|&p| p == x).unwrap();
    let (a, b) = (pos(i), pos(j));
    assert_ne!(a, b);
    a * 3 + if b > a { b - 1 } else { b }
}

/// Builds the equation system and verifies the structure of its solution
/// space as described on S5Report.
#[allow(clippy::needless_range_loop)]
pub fn s5_structure_check() -> S5Report {
    let arrangements: Vec<[usize; 4]> = enumerate_permutations(4)
        .expect("S_4 enumerates")
        .iter()
        .map(|p| {
            let line = p.one_line();
            [
                S5_POINTS[line[0] - 1],
                S5_POINTS[line[1] - 1],
                S5_POINTS[line[2] - 1],
                S5_POINTS[line[3] - 1],
            ]
        })
        .collect();

    let mut equations: Vec<Vec<Rat>> = Vec::new();
    let mut push_eq = |terms: &[(usize, usize, i64)]| {
        let mut row = vec![Rat::zero(); 12];
        for &(i, j, coeff) in terms {
            row[pair_index(i, j)] += Rat::from_integer(coeff.into());
        }
        equations.push(row);
    };
    for &[i, j, k, m] in &arrangements {
        push_eq(&[
            (i, j, 1),
            (j, k, 1),
            (k, m, 1),
            (i, k, -1),
            (k, j, -1),
            (j, m, -1),
        ]);
    }
    for &[i, j, k, jp] in &arrangements {
        // Ordered triple (i, j, k) with jp the remaining point.
        push_eq(&[(i, j, 1), (j, k, 1), (i, jp, -1), (jp, k, -1)]);
    }

    let matrix = ExactMatrix::from_rows(equations.clone()).expect("rectangular system");
    let basis = matrix.nullspace_basis();

    let ones = vec![Rat::one(); 12];
    let includes_constant_solution = equations.iter().all(|eq| {
        eq.iter()
            .zip(&ones)
            .map(|(c, x)| c * x)
            .sum::<Rat>()
            .is_zero()
    });

    let mut lambda_consistent = true;
    let mut moved_sum_law_holds = true;
    let half = Rat::new(1.into(), 2.into());
    for v in &basis {
        let lambda = (&v[pair_index(2, 3)] + &v[pair_index(3, 2)]) * &half;
        for a in 0..4 {
            for b in a + 1..4 {
                let (i, j) = (S5_POINTS[a], S5_POINTS[b]);
                let here = (&v[pair_index(i, j)] + &v[pair_index(j, i)]) * &half;
                if here != lambda {
                    lambda_consistent = false;
                }
            }
        }
        for mu in &arrangements {
            // mu sends S5_POINTS[t] to mu[t].
            let mut moved = 0i64;
            let mut sum = Rat::zero();
            for (t, &image) in mu.iter().enumerate() {
                let from = S5_POINTS[t];
                if image != from {
                    moved += 1;
                    sum += &v[pair_index(from, image)];
                }
            }
            if sum != Rat::from_integer(moved.into()) * &lambda {
                moved_sum_law_holds = false;
            }
        }
    }

    S5Report {
        unknowns: 12,
        equations: equations.len(),
        nullity: basis.len(),
        lambda_consistent,
        moved_sum_law_holds,
        includes_constant_solution,
    }
}
