//! Integer partitions in weakly decreasing form.
//!
//! Partitions index both the irreducible characters of S_n (as shapes) and
//! its conjugacy classes (as cycle types). The canonical enumeration order
//! everywhere in this crate is descending lexicographic, e.g. for n = 4:
//! (4), (3,1), (2,2), (2,1,1), (1,1,1,1).

use std::fmt;

use crate::{Error, Result, PARTITION_CAP};

/// A partition of a positive integer: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting empty input, zero parts, and parts out
    /// of weakly decreasing order.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Transposes the Young diagram: part k of the conjugate counts the
    /// original parts that are >= k.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// True when the partition equals its conjugate.
    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length of the cell at (row, col), both 0-based.
    fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..]
            .iter()
            .take_while(|&&p| p > col)
            .count();
        arm + leg + 1
    }

    /// Dimension of the irreducible S_n representation of this shape, via
    /// the hook length formula n! / prod(hooks).
    pub fn dimension(&self) -> u64 {
        let n = self.n();
        let mut num: u128 = factorial_u128(n);
        for row in 0..self.parts.len() {
            for col in 0..self.parts[row] {
                num /= self.hook(row, col) as u128;
            }
        }
        num as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of n in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 || n > PARTITION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: PARTITION_CAP,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Partition counts by the pentagonal number recurrence, independent of
    /// the enumeration: p(n) = sum_k (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    fn partition_count(n: usize) -> i64 {
        let mut counts = vec![0i64; n + 1];
        counts[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 > m as i64 {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * counts[m - g1 as usize];
                if g2 <= m as i64 {
                    total += sign * counts[m - g2 as usize];
                }
                k += 1;
            }
            counts[m] = total;
        }
        counts[n]
    }

    #[test]
    fn constructor_rejects_invalid_parts() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 1, 2]).is_err());
    }

    #[test]
    fn enumeration_order_for_n4() {
        let got: Vec<Vec<usize>> = enumerate_partitions(4)
            .unwrap()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        for n in 1..=12 {
            let listed = enumerate_partitions(n).unwrap();
            assert_eq!(listed.len() as i64, partition_count(n), "n = {n}");
            for pt in &listed {
                assert_eq!(pt.n(), n);
            }
        }
        assert_eq!(enumerate_partitions(7).unwrap().len(), 15);
    }

    #[test]
    fn enumeration_rejects_out_of_range() {
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_partitions(PARTITION_CAP + 1).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[4, 1, 1, 1]).conjugate(), p(&[4, 1, 1, 1]));
        assert!(p(&[4, 1, 1, 1]).is_symmetric());
        assert!(p(&[2, 1]).is_symmetric());
        assert!(!p(&[3, 1]).is_symmetric());
    }

    #[test]
    fn dimension_small_shapes() {
        assert_eq!(p(&[2, 1]).dimension(), 2);
        assert_eq!(p(&[3, 1]).dimension(), 3);
        assert_eq!(p(&[2, 1, 1]).dimension(), 3);
        assert_eq!(p(&[2, 2]).dimension(), 2);
        for n in 1..=8 {
            assert_eq!(p(&[n]).dimension(), 1);
            assert_eq!(p(&vec![1; n]).dimension(), 1);
        }
    }

    #[test]
    fn dimension_squares_sum_to_group_order() {
        for n in 1..=8 {
            let total: u128 = enumerate_partitions(n)
                .unwrap()
                .iter()
                .map(|p| {
                    let d = p.dimension() as u128;
                    d * d
                })
                .sum();
            assert_eq!(total, factorial_u128(n), "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(n in 1usize..=12, idx in 0usize..100) {
            let all = enumerate_partitions(n).unwrap();
            let pt = &all[idx % all.len()];
            prop_assert_eq!(&pt.conjugate().conjugate(), pt);
            prop_assert_eq!(pt.conjugate().n(), pt.n());
        }

        #[test]
        fn conjugate_preserves_dimension(n in 1usize..=8, idx in 0usize..100) {
            let all = enumerate_partitions(n).unwrap();
            let pt = &all[idx % all.len()];
            prop_assert_eq!(pt.conjugate().dimension(), pt.dimension());
        }
    }
}
