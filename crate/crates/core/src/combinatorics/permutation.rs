//! Permutations of {1, ..., n} and their conjugacy data.
//!
//! One-line notation [2, 1, 3] lists the images of 1, 2, 3 in order.
//! Composition acts right-to-left: (a.compose(b))(i) = a(b(i)).
//! Cycle types keep fixed points as parts equal to 1, so a transposition in
//! S_4 has type (2, 1, 1).

use std::fmt;

use super::partition::{factorial_u128, Partition};
use crate::{Error, Result, PERMUTATION_CAP};

/// A permutation of {1, ..., n}, stored as 0-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based one-line notation, rejecting anything that is
    /// not a bijection of {1, ..., n}.
    pub fn from_one_line(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line form".into()));
        }
        let mut seen = vec![false; n];
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} out of range 1..={n}"
                )));
            }
            if seen[img - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} repeated in {images:?}"
                )));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i - 1).collect(),
        })
    }

    /// Builds from disjoint cycles in 1-based notation; points not named
    /// are fixed. Overlapping cycles are rejected.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {pt} out of range 1..={n}"
                    )));
                }
                if touched[pt - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} appears in two cycles"
                    )));
                }
                touched[pt - 1] = true;
            }
            for k in 0..cycle.len() {
                let from = cycle[k] - 1;
                let to = cycle[(k + 1) % cycle.len()] - 1;
                images[from] = to;
            }
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// Image of a 0-based index.
    pub(crate) fn apply0(&self, index: usize) -> usize {
        self.images[index]
    }

    /// One-line images, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// (self.compose(other))(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn num_fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &img)| i == img)
            .count()
    }

    /// Cycle lengths sorted decreasing, fixed points included as 1s.
    pub fn cycle_type(&self) -> CycleType {
        let mut lengths = Vec::new();
        let mut seen = vec![false; self.n()];
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(Partition::new(lengths).expect("cycle lengths form a partition"))
    }

    /// (-1)^(n - number of cycles).
    pub fn sign(&self) -> i64 {
        let cycles = self.cycle_type().0.num_parts();
        if (self.n() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Position of this permutation in the lexicographic enumeration of S_n,
    /// via the Lehmer code. Used for array-indexed lookups in scans.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }

    /// Disjoint cycle notation, fixed points omitted; "()" for the identity.
    pub fn cycles_string(&self) -> String {
        let mut out = String::new();
        let mut seen = vec![false; self.n()];
        for start in 0..self.n() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(cur + 1).to_string());
                cur = self.images[cur];
                first = false;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, img) in self.one_line().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

/// Cycle type of a permutation: a partition of n with fixed points kept as 1s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// Size of the conjugacy class: n! / prod_k (k^(i_k) * i_k!) where i_k
    /// counts parts equal to k.
    pub fn class_size(&self) -> u64 {
        let n = self.0.n();
        let mut denom: u128 = 1;
        let parts = self.0.parts();
        let mut idx = 0;
        while idx < parts.len() {
            let k = parts[idx];
            let mut mult = 0u32;
            while idx < parts.len() && parts[idx] == k {
                mult += 1;
                idx += 1;
            }
            denom *= (k as u128).pow(mult);
            denom *= factorial_u128(mult as usize);
        }
        (factorial_u128(n) / denom) as u64
    }

    /// Sign shared by the whole class: (-1)^(n - number of parts).
    pub fn sign(&self) -> i64 {
        if (self.0.n() - self.0.num_parts()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The permutation whose cycles cover 1, 2, ... consecutively in the
    /// order the parts are listed, e.g. (4, 2, 1) -> (1 2 3 4)(5 6).
    pub fn canonical_permutation(&self) -> Permutation {
        let n = self.0.n();
        let mut cycles = Vec::new();
        let mut next = 1;
        for &len in self.0.parts() {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Permutation::from_cycles(n, &cycles).expect("consecutive cycles are disjoint")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All of S_n in ascending lexicographic one-line order.
pub fn enumerate_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 || n > PERMUTATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: PERMUTATION_CAP,
        });
    }
    let mut out = Vec::with_capacity(factorial_u128(n) as usize);
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        if !next_lex(&mut images) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next larger one-line form; false once the last is reached.
fn next_lex(images: &mut [usize]) -> bool {
    let n = images.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && images[i - 1] >= images[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while images[j] <= images[i - 1] {
        j -= 1;
    }
    images.swap(i - 1, j);
    images[i..].reverse();
    true
}
