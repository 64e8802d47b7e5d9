//! Exact immanant evaluation and its classical special cases.
//!
//! The immanant attached to a partition p of n is
//! sum over sigma in S_n of chi_p(sigma) * prod_i x[i][sigma(i)],
//! where chi_p is the irreducible character indexed by p. The single-column
//! partition gives the determinant, the single-row partition the permanent.
//!
//! Evaluation walks the n! assignments depth-first in lexicographic order,
//! carrying prefix products. A zero prefix prunes the subtree, and the
//! pruned leaves are still counted, so the logical term count always equals
//! n! exactly; that invariant guards the bookkeeping. Two independent
//! oracles (fraction-free Bareiss for the determinant, Ryser with Gray-code
//! subset updates for the permanent) cross-check the general evaluator.

use std::path::Path;

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::characters::CharacterTable;
use crate::combinatorics::{
    enumerate_permutations, factorial_u128, CycleType, Partition, Permutation,
};
use crate::exactlinalg::{ExactMatrix, IntEchelon};
use crate::rational::{rat_from_i64, rat_from_json, rat_to_json, Int, Rat};
use crate::{Error, Result};

/// A square matrix with exact rational entries, indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    pub fn new(n: usize, entries: Vec<Rat>) -> Result<RationalMatrix> {
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix must be nonempty".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for an {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<RationalMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("matrix must be square".into()));
        }
        RationalMatrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut entries = vec![Rat::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rat::one();
        }
        RationalMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rat) {
        self.entries[row * self.n + col] = value;
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = RationalMatrix {
            n: self.n,
            entries: vec![Rat::zero(); self.n * self.n],
        };
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn to_exact(&self) -> ExactMatrix {
        ExactMatrix::new(self.n, self.n, self.entries.clone()).expect("square by construction")
    }

    /// Parses the on-disk form: a JSON array of equal-length rows whose
    /// entries are integers or "p/q" strings.
    pub fn from_json_value(value: &serde_json::Value) -> Result<RationalMatrix> {
        let rows = value
            .as_array()
            .ok_or_else(|| Error::InvalidMatrix("expected an array of rows".into()))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::InvalidMatrix("expected each row to be an array".into()))?;
            parsed.push(
                cells
                    .iter()
                    .map(rat_from_json)
                    .collect::<Result<Vec<Rat>>>()?,
            );
        }
        RationalMatrix::from_rows(parsed)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.n)
                .map(|i| {
                    serde_json::Value::Array(
                        (0..self.n).map(|j| rat_to_json(self.get(i, j))).collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn parse_json(text: &str) -> Result<RationalMatrix> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "matrix JSON".into(),
            detail: e.to_string(),
        })?;
        RationalMatrix::from_json_value(&value)
    }

    pub fn load(path: &Path) -> Result<RationalMatrix> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        RationalMatrix::parse_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json_value()).expect("matrix serialises");
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

/// Term accounting from one evaluation. `terms` counts leaves including the
/// ones skipped by zero pruning, so it must equal n! exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImmanantStats {
    pub terms: u128,
}

/// Immanant of x for the partition p, building the character table on the
/// fly. Prefer [`immanant_with_table`] inside loops.
pub fn immanant(p: &Partition, x: &RationalMatrix) -> Result<Rat> {
    let table = CharacterTable::new(p.n())?;
    immanant_with_table(&table, p, x)
}

pub fn immanant_with_table(
    table: &CharacterTable,
    p: &Partition,
    x: &RationalMatrix,
) -> Result<Rat> {
    Ok(immanant_instrumented(table, p, x)?.0)
}

pub fn immanant_instrumented(
    table: &CharacterTable,
    p: &Partition,
    x: &RationalMatrix,
) -> Result<(Rat, ImmanantStats)> {
    let n = x.n();
    if p.n() != n || table.n() != n {
        return Err(Error::SizeMismatch(format!(
            "partition of {}, table for {}, matrix of size {n}",
            p.n(),
            table.n()
        )));
    }
    let row = table.row(p)?;
    let mut walk = Walk {
        x,
        row,
        table,
        images: vec![0; n],
        used: vec![false; n],
        sum: Rat::zero(),
        terms: 0,
    };
    walk.descend(0, &Rat::one());
    debug_assert_eq!(walk.terms, factorial_u128(n));
    Ok((walk.sum, ImmanantStats { terms: walk.terms }))
}

struct Walk<'a> {
    x: &'a RationalMatrix,
    row: &'a [i64],
    table: &'a CharacterTable,
    images: Vec<usize>,
    used: Vec<bool>,
    sum: Rat,
    terms: u128,
}

impl Walk<'_> {
    /// Columns are tried in increasing order, so leaves appear in
    /// lexicographic one-line order of the assignment.
    fn descend(&mut self, depth: usize, prefix: &Rat) {
        let n = self.x.n();
        if depth == n {
            self.terms += 1;
            let class = class_of_images(&self.images);
            let idx = self.table.class_index(&class).expect("class of same n");
            if self.row[idx] != 0 {
                self.sum += prefix * rat_from_i64(self.row[idx]);
            }
            return;
        }
        for col in 0..n {
            if self.used[col] {
                continue;
            }
            let entry = self.x.get(depth, col);
            if entry.is_zero() {
                // The whole subtree contributes zero terms of value zero.
                self.terms += factorial_u128(n - depth - 1);
                continue;
            }
            let next = prefix * entry;
            self.used[col] = true;
            self.images[depth] = col;
            self.descend(depth + 1, &next);
            self.used[col] = false;
        }
    }
}

/// Sums of the permutation monomials prod_i x[i][sigma(i)], grouped by the
/// conjugacy class of sigma and indexed like the table's classes. One walk
/// serves every partition: the immanant is the character row dotted with
/// these sums, see [`immanant_from_sums`].
pub fn class_monomial_sums(table: &CharacterTable, x: &RationalMatrix) -> Result<Vec<Rat>> {
    let n = x.n();
    if table.n() != n {
        return Err(Error::SizeMismatch(format!(
            "table for {}, matrix of size {n}",
            table.n()
        )));
    }
    let mut walk = SumsWalk {
        x,
        table,
        images: vec![0; n],
        used: vec![false; n],
        sums: vec![Rat::zero(); table.classes().len()],
        terms: 0,
    };
    walk.descend(0, &Rat::one());
    debug_assert_eq!(walk.terms, factorial_u128(n));
    Ok(walk.sums)
}

struct SumsWalk<'a> {
    x: &'a RationalMatrix,
    table: &'a CharacterTable,
    images: Vec<usize>,
    used: Vec<bool>,
    sums: Vec<Rat>,
    terms: u128,
}

impl SumsWalk<'_> {
    fn descend(&mut self, depth: usize, prefix: &Rat) {
        let n = self.x.n();
        if depth == n {
            self.terms += 1;
            let class = class_of_images(&self.images);
            let idx = self.table.class_index(&class).expect("class of same n");
            self.sums[idx] += prefix;
            return;
        }
        for col in 0..n {
            if self.used[col] {
                continue;
            }
            let entry = self.x.get(depth, col);
            if entry.is_zero() {
                self.terms += factorial_u128(n - depth - 1);
                continue;
            }
            let next = prefix * entry;
            self.used[col] = true;
            self.images[depth] = col;
            self.descend(depth + 1, &next);
            self.used[col] = false;
        }
    }
}

/// Immanant from precomputed [`class_monomial_sums`].
pub fn immanant_from_sums(table: &CharacterTable, p: &Partition, sums: &[Rat]) -> Result<Rat> {
    let row = table.row(p)?;
    if sums.len() != row.len() {
        return Err(Error::SizeMismatch(format!(
            "{} class sums for {} classes",
            sums.len(),
            row.len()
        )));
    }
    Ok(row
        .iter()
        .zip(sums)
        .filter(|(&chi, _)| chi != 0)
        .map(|(&chi, s)| rat_from_i64(chi) * s)
        .sum())
}

/// Cycle type of the assignment i -> images[i] on 0-based indices.
fn class_of_images(images: &[usize]) -> CycleType {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = images[at];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(Partition::new(lengths).expect("cycle lengths form a partition"))
}

/// Determinant by fraction-free Bareiss elimination on denominator-cleared
/// integer rows. Independent of the character machinery.
pub fn determinant_oracle(x: &RationalMatrix) -> Rat {
    let n = x.n();
    let mut scale = Int::one();
    let mut b: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut lcm = Int::one();
            for j in 0..n {
                lcm = lcm.lcm(x.get(i, j).denom());
            }
            let row = (0..n)
                .map(|j| x.get(i, j).numer() * (&lcm / x.get(i, j).denom()))
                .collect();
            scale *= &lcm;
            row
        })
        .collect();
    let mut sign = 1i64;
    let mut prev = Int::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| !b[r][k].is_zero()) else {
            return Rat::zero();
        };
        if pivot != k {
            b.swap(pivot, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &b[i][j] * &b[k][k] - &b[i][k] * &b[k][j];
                debug_assert!((&num % &prev).is_zero());
                b[i][j] = num / &prev;
            }
            b[i][k] = Int::zero();
        }
        prev = b[k][k].clone();
    }
    Rat::new(b[n - 1][n - 1].clone() * Int::from(sign), scale)
}

/// Permanent by Ryser's inclusion-exclusion with Gray-code subset updates.
/// Independent of the character machinery. Requires n <= 20.
pub fn permanent_oracle(x: &RationalMatrix) -> Rat {
    let n = x.n();
    assert!(n <= 20, "permanent oracle is for desk-scale matrices");
    let mut row_sums = vec![Rat::zero(); n];
    let mut total = Rat::zero();
    for s in 1u32..(1u32 << n) {
        let j = s.trailing_zeros() as usize;
        let gray = s ^ (s >> 1);
        if gray >> j & 1 == 1 {
            for (i, sum) in row_sums.iter_mut().enumerate() {
                *sum += x.get(i, j);
            }
        } else {
            for (i, sum) in row_sums.iter_mut().enumerate() {
                *sum -= x.get(i, j);
            }
        }
        let mut product = Rat::one();
        for sum in &row_sums {
            if sum.is_zero() {
                product = Rat::zero();
                break;
            }
            product *= sum;
        }
        if gray.count_ones() % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Character values chi_p(sigma) over all sigma in lexicographic one-line
/// order; the coefficient vector of the immanant as a polynomial in matrix
/// entries, one coordinate per monomial.
pub fn coefficient_vector(table: &CharacterTable, p: &Partition) -> Result<Vec<i64>> {
    let row = table.row(p)?;
    let perms = enumerate_permutations(table.n())?;
    perms
        .iter()
        .map(|sigma| {
            let idx = table
                .class_index(&sigma.cycle_type())
                .expect("class of same n");
            Ok(row[idx])
        })
        .collect()
}

/// Rank of the p(n) coefficient vectors, one per partition of n, inside the
/// n!-dimensional monomial space.
pub fn coefficient_vectors_rank(n: usize) -> Result<usize> {
    let table = CharacterTable::new(n)?;
    let perms = enumerate_permutations(n)?;
    let class_of: Vec<usize> = perms
        .iter()
        .map(|sigma| {
            table
                .class_index(&sigma.cycle_type())
                .expect("class of same n")
        })
        .collect();
    let mut echelon = IntEchelon::new(perms.len());
    for p in table.partitions() {
        let row = table.row(p)?;
        echelon.insert(class_of.iter().map(|&c| Int::from(row[c])).collect());
    }
    Ok(echelon.rank())
}

/// Applies a permutation-conjugation to the matrix:
/// result[i][j] = x[sigma(i)][sigma(j)] on 0-based indices.
pub fn conjugate_by_permutation(x: &RationalMatrix, sigma: &Permutation) -> RationalMatrix {
    let n = x.n();
    assert_eq!(sigma.n(), n, "permutation size matches matrix");
    let mut y = RationalMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            y.set(i, j, x.get(sigma.apply0(i), sigma.apply0(j)).clone());
        }
    }
    y
}

/// A matrix with integer entries drawn uniformly from [-9, 9].
pub fn seeded_matrix(n: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
    let entries = (0..n * n)
        .map(|_| rat_from_i64(rng.gen_range(-9..=9)))
        .collect();
    RationalMatrix::new(n, entries).expect("entry count matches")
}

/// `count` matrices from a fresh deterministic stream for the given seed.
pub fn seeded_matrices(n: usize, count: usize, seed: u64) -> Vec<RationalMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| seeded_matrix(n, &mut rng)).collect()
}
