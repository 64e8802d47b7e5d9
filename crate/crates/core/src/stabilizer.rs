//! Zero sets of characters, translation groups, and the solvability
//! analysis for maps that preserve a fixed immanant.
//!
//! A candidate preserver is a triple of row/column permutations and a matrix
//! of nonzero scale factors, optionally composed with transposition. It
//! preserves the immanant of p exactly when
//!
//! chi_p(sigma) * prod_i c[i][sigma(i)] = chi_p(tau2 sigma tau1^-1)
//!
//! holds for every sigma. Everything here revolves around that identity:
//! which permutation pairs admit scale factors at all (decided exactly over
//! the nonzero complex numbers via integer kernel relations), what the
//! factors can be (rational certificates when exact roots exist), and how
//! much continuous freedom the scale factors retain.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::characters::CharacterTable;
use crate::combinatorics::{
    enumerate_partitions, enumerate_permutations, CycleType, Partition, Permutation,
};
use crate::exactlinalg::{integer_kernel_basis, permutation_row, IntEchelon};
use crate::immanants::{immanant_with_table, seeded_matrices, RationalMatrix};
use crate::rational::{exact_nth_root, rat_from_i64, Int, Rat};
use crate::{Error, Result};

/// The split of S_n by vanishing of chi_p: `zero` holds the permutations
/// where the character is 0, `nonzero` the rest. Both are unions of full
/// conjugacy classes and closed under inverse.
#[derive(Clone, Debug)]
pub struct ZeroSets {
    partition: Partition,
    zero: Vec<Permutation>,
    nonzero: Vec<Permutation>,
    zero_by_rank: Vec<bool>,
}

impl ZeroSets {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn zero(&self) -> &[Permutation] {
        &self.zero
    }

    pub fn nonzero(&self) -> &[Permutation] {
        &self.nonzero
    }

    pub fn is_zero(&self, sigma: &Permutation) -> bool {
        self.zero_by_rank[sigma.lex_rank()]
    }
}

pub fn zero_sets(table: &CharacterTable, p: &Partition) -> Result<ZeroSets> {
    let n = p.n();
    if table.n() != n {
        return Err(Error::SizeMismatch(format!(
            "table for n = {}, partition of {n}",
            table.n()
        )));
    }
    let row = table.row(p)?;
    let perms = enumerate_permutations(n)?;
    let mut zero = Vec::new();
    let mut nonzero = Vec::new();
    let mut zero_by_rank = vec![false; perms.len()];
    for sigma in perms {
        let idx = table
            .class_index(&sigma.cycle_type())
            .expect("class of same n");
        if row[idx] == 0 {
            zero_by_rank[sigma.lex_rank()] = true;
            zero.push(sigma);
        } else {
            nonzero.push(sigma);
        }
    }
    Ok(ZeroSets {
        partition: p.clone(),
        zero,
        nonzero,
        zero_by_rank,
    })
}

/// The permutations whose left translation preserves both zero sets,
/// in lexicographic order. Always a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    partition: Partition,
    members: Vec<Permutation>,
}

impl GSet {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, tau: &Permutation) -> bool {
        self.members.iter().any(|m| m == tau)
    }
}

/// G = { tau : tau P ⊆ P and tau Q ⊆ Q } by direct scan.
///
/// Left translation by tau is a bijection of S_n, so preserving either set
/// forces preserving its complement; only the smaller set is probed. When
/// the character never vanishes both conditions are vacuous and G is all of
/// S_n.
///
/// The inner loop runs n! times |probe| compositions, so it works on raw
/// image vectors and ranks them in place instead of going through
/// [`Permutation::compose`].
pub fn compute_g(table: &CharacterTable, p: &Partition) -> Result<GSet> {
    let n = p.n();
    let zs = zero_sets(table, p)?;
    let (probe, want_zero) = if zs.zero().len() <= zs.nonzero().len() {
        (zs.zero(), true)
    } else {
        (zs.nonzero(), false)
    };
    let images = |sigma: &Permutation| -> Vec<usize> { (0..n).map(|i| sigma.apply0(i)).collect() };
    let probe_images: Vec<Vec<usize>> = probe.iter().map(images).collect();
    let mut fact = vec![1usize; n];
    for i in 1..n {
        fact[i] = fact[i - 1] * i;
    }
    let rank_of = |c: &[usize]| -> usize {
        let mut rank = 0;
        for i in 0..n {
            let smaller_later = (i + 1..n).filter(|&j| c[j] < c[i]).count();
            rank += smaller_later * fact[n - 1 - i];
        }
        rank
    };
    let mut members = Vec::new();
    let mut composed = vec![0usize; n];
    for tau in enumerate_permutations(n)? {
        let t = images(&tau);
        let preserves = probe_images.iter().all(|s| {
            for i in 0..n {
                composed[i] = t[s[i]];
            }
            zs.zero_by_rank[rank_of(&composed)] == want_zero
        });
        if preserves {
            members.push(tau);
        }
    }
    Ok(GSet {
        partition: p.clone(),
        members,
    })
}

/// Whether the n!-parameter system c[tau sigma] * chi(tau sigma) = chi(sigma)
/// admits nonzero parameters; equivalently, whether tau preserves both zero
/// sets under left translation. Checks both closures literally, making it an
/// independent cross-check of [`compute_g`]'s smaller-side scan.
pub fn e3_solvable(table: &CharacterTable, p: &Partition, tau: &Permutation) -> Result<bool> {
    let zs = zero_sets(table, p)?;
    Ok(e3_solvable_with(&zs, tau))
}

/// [`e3_solvable`] against precomputed zero sets, for exhaustive loops.
pub fn e3_solvable_with(zs: &ZeroSets, tau: &Permutation) -> bool {
    assert_eq!(tau.n(), zs.partition.n(), "permutation size matches");
    zs.zero.iter().all(|s| zs.is_zero(&tau.compose(s)))
        && zs.nonzero.iter().all(|s| !zs.is_zero(&tau.compose(s)))
}

/// Rank of { vec(sigma) : chi_p(sigma) != 0 }, streamed row by row.
pub fn q_span_rank(table: &CharacterTable, p: &Partition) -> Result<usize> {
    let n = p.n();
    if table.n() != n {
        return Err(Error::SizeMismatch(format!(
            "table for n = {}, partition of {n}",
            table.n()
        )));
    }
    let row = table.row(p)?;
    let mut echelon = IntEchelon::new(n * n);
    for sigma in enumerate_permutations(n)? {
        let idx = table
            .class_index(&sigma.cycle_type())
            .expect("class of same n");
        if row[idx] != 0 {
            echelon.insert(permutation_row(&sigma));
        }
    }
    Ok(echelon.rank())
}

/// Dimension of the solution variety of prod_i c[i][sigma(i)] = 1 over all
/// sigma with nonvanishing character: n^2 minus the rank of the Q-span.
pub fn torus_constraint_dimension(table: &CharacterTable, p: &Partition) -> Result<usize> {
    let n = p.n();
    Ok(n * n - q_span_rank(table, p)?)
}

/// An n x n matrix of scale factors, every entry nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCoefficients {
    n: usize,
    entries: Vec<Rat>,
}

impl TorusCoefficients {
    pub fn new(n: usize, entries: Vec<Rat>) -> Result<TorusCoefficients> {
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for {n}x{n} scale factors",
                entries.len()
            )));
        }
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::InvalidMatrix(
                "scale factors must all be nonzero".into(),
            ));
        }
        Ok(TorusCoefficients { n, entries })
    }

    pub fn ones(n: usize) -> TorusCoefficients {
        TorusCoefficients {
            n,
            entries: vec![Rat::one(); n * n],
        }
    }

    pub fn from_matrix(m: &RationalMatrix) -> Result<TorusCoefficients> {
        let entries = (0..m.n())
            .flat_map(|i| (0..m.n()).map(move |j| m.get(i, j).clone()))
            .collect();
        TorusCoefficients::new(m.n(), entries)
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::new(self.n, self.entries.clone()).expect("square by construction")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.n + j]
    }

    /// prod_i c[i][sigma(i)], the scale the triple applies to sigma's term.
    pub fn monomial(&self, sigma: &Permutation) -> Rat {
        let mut product = Rat::one();
        for i in 0..self.n {
            product *= self.get(i, sigma.apply0(i));
        }
        product
    }
}

/// A candidate immanant preserver: X -> C .* X'[tau1 rows, tau2 columns],
/// where X' is X or its transpose.
#[derive(Clone, Debug)]
pub struct StabilizerElement {
    pub tau1: Permutation,
    pub tau2: Permutation,
    pub coeffs: TorusCoefficients,
    pub transpose: bool,
}

impl StabilizerElement {
    pub fn new(
        tau1: Permutation,
        tau2: Permutation,
        coeffs: TorusCoefficients,
        transpose: bool,
    ) -> Result<StabilizerElement> {
        if tau1.n() != coeffs.n() || tau2.n() != coeffs.n() {
            return Err(Error::SizeMismatch(format!(
                "permutations on {} and {} points, scale factors {}x{}",
                tau1.n(),
                tau2.n(),
                coeffs.n(),
                coeffs.n()
            )));
        }
        Ok(StabilizerElement {
            tau1,
            tau2,
            coeffs,
            transpose,
        })
    }

    pub fn identity(n: usize) -> StabilizerElement {
        StabilizerElement {
            tau1: Permutation::identity(n),
            tau2: Permutation::identity(n),
            coeffs: TorusCoefficients::ones(n),
            transpose: false,
        }
    }

    pub fn pure_torus(coeffs: TorusCoefficients) -> StabilizerElement {
        let n = coeffs.n();
        StabilizerElement {
            tau1: Permutation::identity(n),
            tau2: Permutation::identity(n),
            coeffs,
            transpose: false,
        }
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }
}

/// Applies the element: result[i][j] = c[i][j] * X'[tau1(i)][tau2(j)] with
/// X' = X^T when the transpose flag is set.
pub fn act(elem: &StabilizerElement, x: &RationalMatrix) -> RationalMatrix {
    let n = x.n();
    assert_eq!(elem.n(), n, "element size matches matrix");
    let xp = if elem.transpose {
        x.transpose()
    } else {
        x.clone()
    };
    let mut y = RationalMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = elem.coeffs.get(i, j) * xp.get(elem.tau1.apply0(i), elem.tau2.apply0(j));
            y.set(i, j, v);
        }
    }
    y
}

/// True iff the element preserves the immanant of p: the coefficient
/// identity chi(sigma) * monomial(sigma) = chi(tau2 sigma tau1^-1) is checked
/// for every sigma, then cross-validated by evaluating the immanant on 10
/// seeded matrices. A disagreement between the two routes is a bug, so it
/// panics rather than returning.
///
/// The transpose flag does not enter the identity: chi is constant on
/// inverse pairs, so transposition alone preserves every immanant. The
/// evaluation pass still exercises it through [`act`].
pub fn verify_element(
    table: &CharacterTable,
    p: &Partition,
    elem: &StabilizerElement,
) -> Result<bool> {
    let n = p.n();
    if table.n() != n || elem.n() != n {
        return Err(Error::SizeMismatch(format!(
            "table for n = {}, partition of {n}, element on {}",
            table.n(),
            elem.n()
        )));
    }
    let row = table.row(p)?;
    let chi = |sigma: &Permutation| -> i64 {
        let idx = table
            .class_index(&sigma.cycle_type())
            .expect("class of same n");
        row[idx]
    };
    let tau1_inv = elem.tau1.inverse();
    let holds = enumerate_permutations(n)?.iter().all(|sigma| {
        let moved = elem.tau2.compose(sigma).compose(&tau1_inv);
        rat_from_i64(chi(sigma)) * elem.coeffs.monomial(sigma) == rat_from_i64(chi(&moved))
    });
    if holds {
        for x in seeded_matrices(n, 10, 0) {
            let direct = immanant_with_table(table, p, &x)?;
            let transported = immanant_with_table(table, p, &act(elem, &x))?;
            assert_eq!(
                direct, transported,
                "coefficient identity holds but evaluation disagrees"
            );
        }
    }
    Ok(holds)
}

/// Outcome of deciding the translation system for one permutation pair.
/// `solvable` is decided exactly over nonzero complex scale factors; the
/// certificate is a rational solution when one exists with exact roots, and
/// always passes [`verify_element`].
#[derive(Clone, Debug)]
pub struct DuffnerDecision {
    pub solvable: bool,
    pub certificate: Option<TorusCoefficients>,
}

/// Preprocessed state for deciding many pairs against one partition: zero
/// sets, the Q-indexed 0/1 rows, their integer kernel, and character values
/// by lexicographic rank.
pub struct DuffnerContext {
    partition: Partition,
    zero_sets: ZeroSets,
    rows: Vec<Vec<Int>>,
    kernel: Vec<Vec<Int>>,
    chi_by_rank: Vec<i64>,
}

impl DuffnerContext {
    pub fn new(table: &CharacterTable, p: &Partition) -> Result<DuffnerContext> {
        let zs = zero_sets(table, p)?;
        let rows: Vec<Vec<Int>> = zs.nonzero().iter().map(permutation_row).collect();
        let kernel = integer_kernel_basis(&rows);
        let row = table.row(p)?;
        let chi_by_rank = enumerate_permutations(p.n())?
            .iter()
            .map(|sigma| {
                row[table
                    .class_index(&sigma.cycle_type())
                    .expect("class of same n")]
            })
            .collect();
        Ok(DuffnerContext {
            partition: p.clone(),
            zero_sets: zs,
            rows,
            kernel,
            chi_by_rank,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    fn chi(&self, sigma: &Permutation) -> i64 {
        self.chi_by_rank[sigma.lex_rank()]
    }

    /// Decides whether nonzero scale factors c exist with
    /// chi(sigma) * prod_i c[i][sigma(i)] = chi(tau2 sigma tau1^-1) for all
    /// sigma. Zero-pattern prefilter first; survivors are decided by testing
    /// the ratio vector against every integer kernel relation of the Q rows
    /// (the kernel basis spans the full relation lattice, so this is exact
    /// over nonzero complex factors, sign obstructions included).
    pub fn decide(&self, tau1: &Permutation, tau2: &Permutation) -> Result<DuffnerDecision> {
        let n = self.partition.n();
        if tau1.n() != n || tau2.n() != n {
            return Err(Error::SizeMismatch(format!(
                "partition of {n}, permutations on {} and {} points",
                tau1.n(),
                tau2.n()
            )));
        }
        let tau1_inv = tau1.inverse();
        let unsolvable = DuffnerDecision {
            solvable: false,
            certificate: None,
        };
        // Both sides must vanish together; translation is a bijection, so
        // checking the zero side suffices and the nonzero side is guarded
        // again when the ratios are formed.
        for sigma in self.zero_sets.zero() {
            let moved = tau2.compose(sigma).compose(&tau1_inv);
            if self.chi(&moved) != 0 {
                return Ok(unsolvable);
            }
        }
        let mut ratios = Vec::with_capacity(self.zero_sets.nonzero().len());
        let mut all_one = true;
        for sigma in self.zero_sets.nonzero() {
            let moved = tau2.compose(sigma).compose(&tau1_inv);
            let target = self.chi(&moved);
            if target == 0 {
                return Ok(unsolvable);
            }
            let ratio = Rat::new(target.into(), self.chi(sigma).into());
            all_one &= ratio.is_one();
            ratios.push(ratio);
        }
        if all_one {
            return Ok(DuffnerDecision {
                solvable: true,
                certificate: Some(TorusCoefficients::ones(n)),
            });
        }
        for relation in &self.kernel {
            let mut product = Rat::one();
            for (m, r) in relation.iter().zip(&ratios) {
                if !m.is_zero() {
                    product *= rat_pow_int(r, m);
                }
            }
            if !product.is_one() {
                return Ok(unsolvable);
            }
        }
        let certificate = solve_monomial_system(n * n, &self.rows, &ratios)
            .map(|entries| TorusCoefficients::new(n, entries).expect("solution entries nonzero"))
            .filter(|c| {
                self.zero_sets
                    .nonzero()
                    .iter()
                    .zip(&ratios)
                    .all(|(sigma, r)| &c.monomial(sigma) == r)
            });
        Ok(DuffnerDecision {
            solvable: true,
            certificate,
        })
    }
}

/// One-shot form of [`DuffnerContext::decide`].
pub fn duffner_solvable(
    table: &CharacterTable,
    p: &Partition,
    tau1: &Permutation,
    tau2: &Permutation,
) -> Result<DuffnerDecision> {
    DuffnerContext::new(table, p)?.decide(tau1, tau2)
}

/// base^e for a signed big-integer exponent. The base must be nonzero when
/// the exponent is negative.
fn rat_pow_int(base: &Rat, e: &Int) -> Rat {
    let mut k = e.magnitude().to_u64().expect("exponent fits in u64");
    let mut result = Rat::one();
    let mut factor = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            result *= &factor;
        }
        k >>= 1;
        if k > 0 {
            factor = &factor * &factor;
        }
    }
    if e.is_negative() {
        result.recip()
    } else {
        result
    }
}

/// Solves prod_j x_j^{rows[r][j]} = rhs[r] for nonzero rationals x, if a
/// rational solution exists. Unimodular row elimination with multiplicative
/// right-hand sides; free coordinates take value one; pivots are solved
/// bottom-up with exact roots. None when the system is inconsistent or a
/// needed root is irrational.
fn solve_monomial_system(cols: usize, rows: &[Vec<Int>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(rows.len(), rhs.len());
    let q = rows.len();
    if q == 0 {
        return Some(vec![Rat::one(); cols]);
    }
    let mut work: Vec<(Vec<Int>, Rat)> = rows.iter().cloned().zip(rhs.iter().cloned()).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pivoted = 0;
    for col in 0..cols {
        let Some(first) = (pivoted..q).find(|&r| !work[r].0[col].is_zero()) else {
            continue;
        };
        work.swap(pivoted, first);
        for r in pivoted + 1..q {
            if work[r].0[col].is_zero() {
                continue;
            }
            let x = work[pivoted].0[col].clone();
            let y = work[r].0[col].clone();
            let ext = x.extended_gcd(&y);
            let (u, v) = (ext.x, ext.y);
            let xg = &x / &ext.gcd;
            let yg = &y / &ext.gcd;
            for k in 0..cols {
                let a = work[pivoted].0[k].clone();
                let b = work[r].0[k].clone();
                work[pivoted].0[k] = &a * &u + &b * &v;
                work[r].0[k] = &b * &xg - &a * &yg;
            }
            let ta = work[pivoted].1.clone();
            let tb = work[r].1.clone();
            work[pivoted].1 = rat_pow_int(&ta, &u) * rat_pow_int(&tb, &v);
            work[r].1 = rat_pow_int(&tb, &xg) * rat_pow_int(&ta, &-yg);
        }
        pivots.push((pivoted, col));
        pivoted += 1;
        if pivoted == q {
            break;
        }
    }
    // Rows eliminated to zero must carry a trivial right-hand side.
    for (coeffs, tag) in &work[pivoted..] {
        debug_assert!(coeffs.iter().all(Zero::is_zero));
        if !tag.is_one() {
            return None;
        }
    }
    let mut x = vec![Rat::one(); cols];
    for &(r, col) in pivots.iter().rev() {
        let (coeffs, tag) = &work[r];
        let mut value = tag.clone();
        for k in col + 1..cols {
            if !coeffs[k].is_zero() {
                value *= rat_pow_int(&x[k], &-coeffs[k].clone());
            }
        }
        let mut d = coeffs[col].clone();
        if d.is_negative() {
            d = -d;
            value = value.recip();
        }
        let d = d.to_u32()?;
        x[col] = if d == 1 {
            value
        } else {
            exact_nth_root(&value, d)?
        };
    }
    Some(x)
}

/// The 4x4 scale-factor matrix with free nonzero parameter e that preserves
/// the immanant of (2, 2) while having full rank, hence not of the
/// rank-one diagonal-pair form.
pub fn counterexample_matrix(e: &Rat) -> Result<TorusCoefficients> {
    if e.is_zero() {
        return Err(Error::ZeroParameter("counterexample parameter e".into()));
    }
    let one = Rat::one();
    let inv = e.recip();
    let entries = vec![
        e.clone(),
        -e.clone(),
        -e.clone(),
        e.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        -one.clone(),
        -one,
        inv.clone(),
        -inv.clone(),
        inv.clone(),
        -inv,
    ];
    TorusCoefficients::new(4, entries)
}

/// [`counterexample_matrix`] wrapped as a pure torus element.
pub fn counterexample_element(e: &Rat) -> Result<StabilizerElement> {
    Ok(StabilizerElement::pure_torus(counterexample_matrix(e)?))
}

/// Diagonal factorization of a rank-one scale matrix: a_i * b_j = c[i][j].
/// The defect det(A)*det(B) = prod a_i * prod b_j is intrinsic to C (the
/// only gauge freedom (A*t, B/t) cancels in it) and equals one exactly when
/// C solves the scale-factor system for the identity pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPair {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub defect: Rat,
}

impl DiagonalPair {
    pub fn is_normalized(&self) -> bool {
        self.defect.is_one()
    }
}

/// Factors C as a_i = c[i][0], b_j = c[0][j]/c[0][0] when C has matrix rank
/// one; none otherwise.
pub fn factor_as_diagonal_pair(c: &TorusCoefficients) -> Option<DiagonalPair> {
    let n = c.n();
    if c.to_matrix().to_exact().rank() != 1 {
        return None;
    }
    let a: Vec<Rat> = (0..n).map(|i| c.get(i, 0).clone()).collect();
    let b: Vec<Rat> = (0..n).map(|j| c.get(0, j) / c.get(0, 0)).collect();
    debug_assert!((0..n).all(|i| (0..n).all(|j| &(&a[i] * &b[j]) == c.get(i, j))));
    let defect = a.iter().chain(&b).product();
    Some(DiagonalPair { a, b, defect })
}

/// Witness data for factoring a preserver through transpositions: sigma and
/// tau with prescribed fixed points and four nonvanishing character values.
#[derive(Clone, Debug)]
pub struct FactorWitness {
    /// Fixes every point of `cycle` and the point 1.
    pub sigma: Permutation,
    /// The points i_1 < ... < i_p of the grown cycle; never contains 1.
    pub cycle: Vec<usize>,
    /// Fixes both points of `swap_pair`.
    pub tau: Permutation,
    pub swap_pair: (usize, usize),
}

fn count_ones(p: &Partition) -> usize {
    p.parts().iter().filter(|&&part| part == 1).count()
}

/// Candidate cycle types in search order: fewest moved points first, ties in
/// descending lexicographic order.
fn ordered_cycle_types(n: usize) -> Result<Vec<Partition>> {
    let mut types = enumerate_partitions(n)?;
    types.sort_by_key(|t| n - count_ones(t));
    Ok(types)
}

/// Replaces `remove` fixed points of the type with one cycle of that length.
fn graft_cycle(t: &Partition, remove: usize, add: usize) -> Option<Partition> {
    let ones = count_ones(t);
    if ones < remove {
        return None;
    }
    let mut parts: Vec<usize> = t.parts().iter().copied().filter(|&p| p != 1).collect();
    parts.push(add);
    parts.extend(std::iter::repeat_n(1, ones - remove));
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Some(Partition::new(parts).expect("grafted parts form a partition"))
}

/// Searches for a [`FactorWitness`]: sigma whose type keeps nonvanishing
/// character after growing a p-cycle on its fixed points and again after
/// extending that cycle by the point 1, plus tau whose type keeps
/// nonvanishing character after one extra transposition. Search runs over
/// cycle types (fewest moved points first, ties descending lex), cycle
/// length ascending; the first hit is returned.
pub fn find_factor_witness(table: &CharacterTable, p: &Partition) -> Result<Option<FactorWitness>> {
    let n = p.n();
    if table.n() != n {
        return Err(Error::SizeMismatch(format!(
            "table for n = {}, partition of {n}",
            table.n()
        )));
    }
    let chi = |t: &Partition| -> i64 {
        table
            .value(p, &CycleType(t.clone()))
            .expect("type of same n")
    };
    let types = ordered_cycle_types(n)?;

    let mut sigma_part: Option<(Partition, usize)> = None;
    'sigma: for s in &types {
        let ones = count_ones(s);
        // Need cycle_len >= 2 plus the extension point 1, all fixed by s.
        for cycle_len in 2..ones {
            let grown = graft_cycle(s, cycle_len, cycle_len).expect("enough fixed points");
            let extended = graft_cycle(s, cycle_len + 1, cycle_len + 1).expect("enough");
            if chi(&grown) != 0 && chi(&extended) != 0 {
                sigma_part = Some((s.clone(), cycle_len));
                break 'sigma;
            }
        }
    }
    let Some((s, cycle_len)) = sigma_part else {
        return Ok(None);
    };

    let mut tau_part: Option<Partition> = None;
    for t in &types {
        if count_ones(t) < 2 {
            continue;
        }
        let swapped = graft_cycle(t, 2, 2).expect("two fixed points");
        if chi(t) != 0 && chi(&swapped) != 0 {
            tau_part = Some(t.clone());
            break;
        }
    }
    let Some(t) = tau_part else {
        return Ok(None);
    };

    // sigma's nontrivial cycles live above the reserved points 1..=cycle_len+1.
    let mut cycles = Vec::new();
    let mut next = cycle_len + 2;
    for &part in s.parts() {
        if part >= 2 {
            cycles.push((next..next + part).collect::<Vec<usize>>());
            next += part;
        }
    }
    let sigma = Permutation::from_cycles(n, &cycles)?;
    let cycle: Vec<usize> = (2..=cycle_len + 1).collect();
    // Canonical placement puts tau's fixed points last.
    let tau = CycleType(t).canonical_permutation();
    let swap_pair = (n - 1, n);
    Ok(Some(FactorWitness {
        sigma,
        cycle,
        tau,
        swap_pair,
    }))
}

/// Re-proves a witness on concrete permutations: disjointness of supports
/// and the four nonvanishing character values, via composition and table
/// lookup rather than the type arithmetic of the search.
pub fn check_factor_witness(
    table: &CharacterTable,
    p: &Partition,
    w: &FactorWitness,
) -> Result<bool> {
    let n = p.n();
    let chi = |sigma: &Permutation| -> Result<i64> { table.value(p, &sigma.cycle_type()) };
    if w.cycle.len() < 2 || w.cycle.contains(&1) {
        return Ok(false);
    }
    if w.cycle.iter().any(|&pt| w.sigma.apply(pt) != pt) || w.sigma.apply(1) != 1 {
        return Ok(false);
    }
    let (i, j) = w.swap_pair;
    if w.tau.apply(i) != i || w.tau.apply(j) != j {
        return Ok(false);
    }
    let grown = Permutation::from_cycles(n, std::slice::from_ref(&w.cycle))?;
    let mut extended_points = vec![1];
    extended_points.extend(&w.cycle);
    let extended = Permutation::from_cycles(n, &[extended_points])?;
    let swap = Permutation::from_cycles(n, &[vec![i, j]])?;
    Ok(chi(&grown.compose(&w.sigma))? != 0
        && chi(&extended.compose(&w.sigma))? != 0
        && chi(&w.tau)? != 0
        && chi(&swap.compose(&w.tau))? != 0)
}

/// Finds tau with nonvanishing character, a cycle of length >= 4, and at
/// least one fixed point; search order as in [`find_factor_witness`].
pub fn find_long_cycle_tau(table: &CharacterTable, p: &Partition) -> Result<Option<Permutation>> {
    let n = p.n();
    if table.n() != n {
        return Err(Error::SizeMismatch(format!(
            "table for n = {}, partition of {n}",
            table.n()
        )));
    }
    for t in ordered_cycle_types(n)? {
        if t.parts().iter().all(|&part| part < 4) || count_ones(&t) == 0 {
            continue;
        }
        if table.value(p, &CycleType(t.clone()))? != 0 {
            return Ok(Some(CycleType(t).canonical_permutation()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rat;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images).unwrap()
    }

    fn table_for(n: usize) -> CharacterTable {
        CharacterTable::new(n).unwrap()
    }

    fn rank_one_entries(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut entries = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                entries.push(x * y);
            }
        }
        entries
    }

    #[test]
    fn zero_sets_of_the_standard_partition() {
        let table = table_for(3);
        let zs = zero_sets(&table, &part(&[2, 1])).unwrap();
        let mut zero_lines: Vec<Vec<usize>> = zs.zero().iter().map(|p| p.one_line()).collect();
        zero_lines.sort();
        assert_eq!(
            zero_lines,
            vec![vec![1, 3, 2], vec![2, 1, 3], vec![3, 2, 1]]
        );
        assert_eq!(zs.nonzero().len(), 3);
        for sigma in zs.zero() {
            assert!(zs.is_zero(sigma));
            assert!(zs.is_zero(&sigma.inverse()));
        }
        for sigma in zs.nonzero() {
            assert!(!zs.is_zero(sigma));
            assert!(!zs.is_zero(&sigma.inverse()));
        }
    }

    #[test]
    fn zero_sets_of_the_extremes_are_empty() {
        for n in 2..=5 {
            let table = table_for(n);
            for p in [part(&[n]), part(&vec![1; n])] {
                let zs = zero_sets(&table, &p).unwrap();
                assert!(zs.zero().is_empty());
                assert_eq!(zs.nonzero().len(), zs.zero_by_rank.len());
            }
        }
    }

    #[test]
    fn zero_sets_are_class_unions() {
        let table = table_for(5);
        for p in table.partitions() {
            let zs = zero_sets(&table, p).unwrap();
            for sigma in zs.zero() {
                assert_eq!(table.value(p, &sigma.cycle_type()).unwrap(), 0);
            }
            for sigma in zs.nonzero() {
                assert_ne!(table.value(p, &sigma.cycle_type()).unwrap(), 0);
            }
            assert_eq!(zs.zero().len() + zs.nonzero().len(), 120);
        }
    }

    fn members_one_lines(g: &GSet) -> Vec<Vec<usize>> {
        g.members().iter().map(|m| m.one_line()).collect()
    }

    fn expected_alternating(n: usize) -> Vec<Vec<usize>> {
        enumerate_permutations(n)
            .unwrap()
            .into_iter()
            .filter(|p| p.is_even())
            .map(|p| p.one_line())
            .collect()
    }

    #[test]
    fn g_sets_at_n3() {
        let table = table_for(3);
        assert_eq!(compute_g(&table, &part(&[3])).unwrap().order(), 6);
        assert_eq!(
            members_one_lines(&compute_g(&table, &part(&[2, 1])).unwrap()),
            expected_alternating(3)
        );
        // The sign character never vanishes, so the zero-set scan admits
        // every left translation.
        assert_eq!(compute_g(&table, &part(&[1, 1, 1])).unwrap().order(), 6);
    }

    #[test]
    fn g_sets_at_n4() {
        let table = table_for(4);
        let klein: Vec<Vec<usize>> = vec![
            vec![1, 2, 3, 4],
            vec![2, 1, 4, 3],
            vec![3, 4, 1, 2],
            vec![4, 3, 2, 1],
        ];
        assert_eq!(
            members_one_lines(&compute_g(&table, &part(&[3, 1])).unwrap()),
            klein
        );
        assert_eq!(
            members_one_lines(&compute_g(&table, &part(&[2, 1, 1])).unwrap()),
            klein
        );
        assert_eq!(
            members_one_lines(&compute_g(&table, &part(&[2, 2])).unwrap()),
            expected_alternating(4)
        );
        assert_eq!(compute_g(&table, &part(&[4])).unwrap().order(), 24);
        assert_eq!(compute_g(&table, &part(&[1, 1, 1, 1])).unwrap().order(), 24);
    }

    #[test]
    fn g_set_matches_literal_two_sided_definition() {
        for n in 2..=4 {
            let table = table_for(n);
            for p in table.partitions() {
                let zs = zero_sets(&table, p).unwrap();
                let expected: Vec<Permutation> = enumerate_permutations(n)
                    .unwrap()
                    .into_iter()
                    .filter(|tau| {
                        zs.zero().iter().all(|s| zs.is_zero(&tau.compose(s)))
                            && zs.nonzero().iter().all(|s| !zs.is_zero(&tau.compose(s)))
                    })
                    .collect();
                assert_eq!(compute_g(&table, p).unwrap().members(), &expected[..]);
            }
        }
    }

    #[test]
    fn g_sets_are_normal_subgroups() {
        for n in 3..=5 {
            let table = table_for(n);
            let generators = [
                perm(&{
                    let mut v: Vec<usize> = (1..=n).collect();
                    v.swap(0, 1);
                    v
                }),
                Permutation::from_cycles(n, &[(1..=n).collect::<Vec<usize>>()]).unwrap(),
            ];
            for p in table.partitions() {
                let g = compute_g(&table, p).unwrap();
                assert!(g.contains(&Permutation::identity(n)));
                for a in g.members() {
                    assert!(g.contains(&a.inverse()));
                    for b in g.members() {
                        assert!(g.contains(&a.compose(b)));
                    }
                }
                for gen in &generators {
                    let gen_inv = gen.inverse();
                    for a in g.members() {
                        assert!(g.contains(&gen.compose(a).compose(&gen_inv)));
                    }
                }
            }
        }
    }

    #[test]
    fn g_trivial_for_middle_partitions_at_n5() {
        let table = table_for(5);
        for p in table.partitions() {
            if p == &part(&[5]) || p == &part(&[1, 1, 1, 1, 1]) {
                continue;
            }
            let g = compute_g(&table, p).unwrap();
            assert_eq!(g.order(), 1, "partition {p}");
            assert!(g.members()[0].is_identity());
        }
    }

    #[test]
    fn e3_matches_g_membership_exhaustively() {
        for n in 2..=4 {
            let table = table_for(n);
            for p in table.partitions() {
                let g = compute_g(&table, p).unwrap();
                let zs = zero_sets(&table, p).unwrap();
                for tau in enumerate_permutations(n).unwrap() {
                    assert_eq!(e3_solvable_with(&zs, &tau), g.contains(&tau));
                }
            }
        }
    }

    #[test]
    fn e3_spot_checks() {
        let t3 = table_for(3);
        assert!(e3_solvable(&t3, &part(&[2, 1]), &Permutation::identity(3)).unwrap());
        assert!(e3_solvable(&t3, &part(&[2, 1]), &perm(&[2, 3, 1])).unwrap());
        assert!(!e3_solvable(&t3, &part(&[2, 1]), &perm(&[2, 1, 3])).unwrap());
        let t5 = table_for(5);
        assert!(!e3_solvable(&t5, &part(&[3, 2]), &perm(&[2, 1, 3, 4, 5])).unwrap());
    }

    #[test]
    fn span_ranks_and_torus_dimensions_at_n3() {
        let table = table_for(3);
        // Q((2,1)) = {identity and the two 3-cycles}; restricted to the
        // entries (1,1), (1,2), (1,3) those rows are the three unit vectors,
        // so the rank is exactly 3.
        assert_eq!(q_span_rank(&table, &part(&[2, 1])).unwrap(), 3);
        assert_eq!(
            torus_constraint_dimension(&table, &part(&[2, 1])).unwrap(),
            6
        );
        // Extremes take the full permutation span, (n-1)^2 + 1.
        assert_eq!(q_span_rank(&table, &part(&[3])).unwrap(), 5);
        assert_eq!(q_span_rank(&table, &part(&[1, 1, 1])).unwrap(), 5);
        assert_eq!(torus_constraint_dimension(&table, &part(&[3])).unwrap(), 4);
    }

    #[test]
    fn act_applies_scales_and_permutations() {
        let x = RationalMatrix::from_rows(vec![
            vec![rat_from_i64(1), rat_from_i64(2)],
            vec![rat_from_i64(3), rat_from_i64(4)],
        ])
        .unwrap();
        // Pure torus is entrywise multiplication.
        let c = TorusCoefficients::new(
            2,
            vec![
                rat_from_i64(2),
                rat_from_i64(3),
                rat_from_i64(5),
                rat_from_i64(7),
            ],
        )
        .unwrap();
        let y = act(&StabilizerElement::pure_torus(c), &x);
        assert_eq!(y.get(0, 0), &rat_from_i64(2));
        assert_eq!(y.get(0, 1), &rat_from_i64(6));
        assert_eq!(y.get(1, 0), &rat_from_i64(15));
        assert_eq!(y.get(1, 1), &rat_from_i64(28));
        // tau1 permutes row reads: result row i is source row tau1(i).
        let swap_rows = StabilizerElement::new(
            perm(&[2, 1]),
            Permutation::identity(2),
            TorusCoefficients::ones(2),
            false,
        )
        .unwrap();
        let y = act(&swap_rows, &x);
        assert_eq!(y.get(0, 0), &rat_from_i64(3));
        assert_eq!(y.get(0, 1), &rat_from_i64(4));
        // Transpose flag reads the transposed source.
        let t = StabilizerElement::new(
            Permutation::identity(2),
            Permutation::identity(2),
            TorusCoefficients::ones(2),
            true,
        )
        .unwrap();
        let y = act(&t, &x);
        assert_eq!(y.get(0, 1), &rat_from_i64(3));
    }

    #[test]
    fn verify_element_accepts_the_easy_elements() {
        let table = table_for(4);
        for p in table.partitions() {
            assert!(verify_element(&table, p, &StabilizerElement::identity(4)).unwrap());
            // Transposition alone preserves every immanant.
            let mut transposer = StabilizerElement::identity(4);
            transposer.transpose = true;
            assert!(verify_element(&table, p, &transposer).unwrap());
            // Diagonal conjugation-free pairs with product one.
            let a = [
                rat_from_i64(2),
                rat_from_i64(3),
                parse_rat("1/6").unwrap(),
                rat_from_i64(1),
            ];
            let b = [
                rat_from_i64(5),
                parse_rat("1/5").unwrap(),
                rat_from_i64(1),
                rat_from_i64(1),
            ];
            let c = TorusCoefficients::new(4, rank_one_entries(&a, &b)).unwrap();
            assert!(verify_element(&table, p, &StabilizerElement::pure_torus(c)).unwrap());
        }
    }

    #[test]
    fn verify_element_rejects_a_scaled_entry() {
        let table = table_for(4);
        let mut entries = vec![Rat::one(); 16];
        entries[0] = rat_from_i64(2);
        let c = TorusCoefficients::new(4, entries).unwrap();
        assert!(
            !verify_element(&table, &part(&[2, 1, 1]), &StabilizerElement::pure_torus(c)).unwrap()
        );
    }

    #[test]
    fn verify_element_accepts_equal_permutation_pairs() {
        let table = table_for(4);
        let tau = perm(&[2, 3, 4, 1]);
        let elem =
            StabilizerElement::new(tau.clone(), tau, TorusCoefficients::ones(4), false).unwrap();
        for p in table.partitions() {
            assert!(verify_element(&table, p, &elem).unwrap());
        }
    }

    #[test]
    fn duffner_diagonal_pairs_are_always_solvable() {
        let table = table_for(4);
        for p in table.partitions() {
            let ctx = DuffnerContext::new(&table, p).unwrap();
            for tau in enumerate_permutations(4).unwrap().iter().step_by(5) {
                let decision = ctx.decide(tau, tau).unwrap();
                assert!(decision.solvable);
                let cert = decision.certificate.unwrap();
                let elem = StabilizerElement::new(tau.clone(), tau.clone(), cert, false).unwrap();
                assert!(verify_element(&table, p, &elem).unwrap());
            }
        }
    }

    #[test]
    fn duffner_prefilter_rejects_mixed_pairs() {
        let table = table_for(3);
        let decision = duffner_solvable(
            &table,
            &part(&[2, 1]),
            &perm(&[2, 1, 3]),
            &Permutation::identity(3),
        )
        .unwrap();
        assert!(!decision.solvable);
        assert!(decision.certificate.is_none());
    }

    #[test]
    fn duffner_sign_ratios_stay_solvable_for_the_determinant() {
        // For the single-column partition an odd tau2 tau1^-1 makes every
        // ratio -1; the kernel relations all have coordinate sum zero, so
        // the system stays solvable and a rational certificate exists.
        let table = table_for(3);
        let ctx = DuffnerContext::new(&table, &part(&[1, 1, 1])).unwrap();
        let decision = ctx
            .decide(&perm(&[2, 1, 3]), &Permutation::identity(3))
            .unwrap();
        assert!(decision.solvable);
        let cert = decision.certificate.expect("rational certificate exists");
        let elem = StabilizerElement::new(perm(&[2, 1, 3]), Permutation::identity(3), cert, false)
            .unwrap();
        assert!(verify_element(&table, &part(&[1, 1, 1]), &elem).unwrap());

        let t4 = table_for(4);
        let ctx4 = DuffnerContext::new(&t4, &part(&[1, 1, 1, 1])).unwrap();
        let d4 = ctx4
            .decide(&perm(&[2, 3, 4, 1]), &Permutation::identity(4))
            .unwrap();
        assert!(d4.solvable);
        if let Some(cert) = d4.certificate {
            let elem =
                StabilizerElement::new(perm(&[2, 3, 4, 1]), Permutation::identity(4), cert, false)
                    .unwrap();
            assert!(verify_element(&t4, &part(&[1, 1, 1, 1]), &elem).unwrap());
        }
    }

    #[test]
    fn duffner_permanent_all_pairs_solvable() {
        let table = table_for(3);
        let ctx = DuffnerContext::new(&table, &part(&[3])).unwrap();
        for tau1 in enumerate_permutations(3).unwrap() {
            for tau2 in enumerate_permutations(3).unwrap() {
                assert!(ctx.decide(&tau1, &tau2).unwrap().solvable);
            }
        }
    }

    #[test]
    fn duffner_identity_pair_for_two_two_admits_the_counterexample() {
        let table = table_for(4);
        let p = part(&[2, 2]);
        let id = Permutation::identity(4);
        let decision = duffner_solvable(&table, &p, &id, &id).unwrap();
        assert!(decision.solvable);
        let cert = decision.certificate.unwrap();
        assert!(verify_element(&table, &p, &StabilizerElement::pure_torus(cert)).unwrap());
        // The full-rank parameter matrix solves the same system.
        for e in [rat_from_i64(2), rat_from_i64(3), parse_rat("-5/7").unwrap()] {
            let elem = counterexample_element(&e).unwrap();
            assert!(verify_element(&table, &p, &elem).unwrap());
        }
    }

    #[test]
    fn counterexample_matrix_properties() {
        assert!(matches!(
            counterexample_matrix(&Rat::zero()),
            Err(Error::ZeroParameter(_))
        ));
        for e in [rat_from_i64(2), rat_from_i64(3), parse_rat("-5/7").unwrap()] {
            let c = counterexample_matrix(&e).unwrap();
            assert_eq!(c.to_matrix().to_exact().rank(), 4);
            assert!(factor_as_diagonal_pair(&c).is_none());
        }
    }

    #[test]
    fn diagonal_factoring_round_trips() {
        let all_ones = TorusCoefficients::ones(3);
        let pair = factor_as_diagonal_pair(&all_ones).unwrap();
        assert_eq!(pair.a, vec![Rat::one(); 3]);
        assert_eq!(pair.b, vec![Rat::one(); 3]);
        assert!(pair.is_normalized());

        let a = [
            rat_from_i64(3),
            parse_rat("-1/2").unwrap(),
            rat_from_i64(7),
            rat_from_i64(2),
        ];
        let b = [
            parse_rat("2/3").unwrap(),
            rat_from_i64(-5),
            rat_from_i64(1),
            parse_rat("1/7").unwrap(),
        ];
        let c = TorusCoefficients::new(4, rank_one_entries(&a, &b)).unwrap();
        let pair = factor_as_diagonal_pair(&c).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(&(&pair.a[i] * &pair.b[j]), c.get(i, j));
            }
        }
        let expected: Rat = a.iter().chain(&b).product();
        assert_eq!(pair.defect, expected);
    }

    #[test]
    fn rank_one_preservers_have_defect_one() {
        // A rank-one C satisfies the scale-factor system for the identity
        // pair exactly when prod a * prod b = 1: the monomial of every sigma
        // is that same product.
        let table = table_for(3);
        let p = part(&[2, 1]);
        let a = [rat_from_i64(2), rat_from_i64(3), rat_from_i64(5)];
        let b = [
            parse_rat("1/6").unwrap(),
            parse_rat("1/5").unwrap(),
            rat_from_i64(1),
        ];
        let c = TorusCoefficients::new(3, rank_one_entries(&a, &b)).unwrap();
        let pair = factor_as_diagonal_pair(&c).unwrap();
        assert!(pair.is_normalized());
        assert!(verify_element(&table, &p, &StabilizerElement::pure_torus(c.clone())).unwrap());

        // Break the normalization and the element no longer preserves.
        let mut skewed_entries: Vec<Rat> = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                skewed_entries.push(c.get(i, j) * rat_from_i64(if i == 0 { 2 } else { 1 }));
            }
        }
        let skewed = TorusCoefficients::new(3, skewed_entries).unwrap();
        let pair = factor_as_diagonal_pair(&skewed).unwrap();
        assert!(!pair.is_normalized());
        assert!(!verify_element(&table, &p, &StabilizerElement::pure_torus(skewed)).unwrap());
    }

    #[test]
    fn factor_witness_for_n5_partitions() {
        let table = table_for(5);
        let p = part(&[3, 2]);
        let w = find_factor_witness(&table, &p).unwrap().unwrap();
        // The all-fixed type admits the shortest cycle immediately.
        assert!(w.sigma.is_identity());
        assert_eq!(w.cycle, vec![2, 3]);
        assert!(w.tau.is_identity());
        assert_eq!(w.swap_pair, (4, 5));
        assert!(check_factor_witness(&table, &p, &w).unwrap());

        for parts in [vec![4, 1], vec![2, 2, 1], vec![2, 1, 1, 1]] {
            let p = Partition::new(parts).unwrap();
            let w = find_factor_witness(&table, &p)
                .unwrap()
                .expect("witness exists");
            assert!(check_factor_witness(&table, &p, &w).unwrap());
        }
    }

    #[test]
    fn factor_witness_is_absent_for_two_two() {
        // At n = 4 only the all-fixed type has three or more fixed points,
        // and both of its grown types hit vanishing character values.
        let table = table_for(4);
        assert!(find_factor_witness(&table, &part(&[2, 2]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn long_cycle_tau_examples() {
        let t6 = table_for(6);
        let tau = find_long_cycle_tau(&t6, &part(&[6])).unwrap().unwrap();
        assert_eq!(tau.one_line(), vec![2, 3, 4, 1, 5, 6]);
        for parts in [vec![3, 1, 1, 1], vec![4, 1, 1]] {
            assert!(find_long_cycle_tau(&t6, &Partition::new(parts).unwrap())
                .unwrap()
                .is_none());
        }
        // Hook-free partitions still find one.
        let tau = find_long_cycle_tau(&t6, &part(&[2, 2, 2]))
            .unwrap()
            .unwrap();
        let ct = tau.cycle_type();
        assert!(ct.partition().parts().iter().any(|&p| p >= 4));
        assert!(tau.num_fixed_points() >= 1);
        assert_ne!(t6.value(&part(&[2, 2, 2]), &ct).unwrap(), 0);
    }

    #[test]
    fn monomial_solver_handles_roots_and_inconsistency() {
        // x^2 = 9/4 has the rational root 3/2.
        let rows = vec![vec![Int::from(2)]];
        let sol = solve_monomial_system(1, &rows, &[parse_rat("9/4").unwrap()]).unwrap();
        assert_eq!(sol, vec![parse_rat("3/2").unwrap()]);
        // x^2 = 2 has none.
        assert!(solve_monomial_system(1, &rows, &[rat_from_i64(2)]).is_none());
        // Contradictory duplicated rows are inconsistent.
        let rows = vec![vec![Int::one()], vec![Int::one()]];
        assert!(solve_monomial_system(1, &rows, &[rat_from_i64(2), rat_from_i64(3)]).is_none());
        // Free coordinates default to one.
        let rows = vec![vec![Int::one(), Int::zero()]];
        let sol = solve_monomial_system(2, &rows, &[rat_from_i64(5)]).unwrap();
        assert_eq!(sol, vec![rat_from_i64(5), Rat::one()]);
    }

    #[test]
    fn rat_pow_int_handles_signs() {
        let half = parse_rat("1/2").unwrap();
        assert_eq!(rat_pow_int(&half, &Int::from(3)), parse_rat("1/8").unwrap());
        assert_eq!(rat_pow_int(&half, &Int::from(-2)), rat_from_i64(4));
        assert_eq!(rat_pow_int(&half, &Int::zero()), Rat::one());
    }
}
