//! Irreducible characters of S_n, computed exactly by recursive border-strip
//! removal.
//!
//! A character value chi_lambda(mu) expands over the border strips of length
//! mu_1 that can be peeled off lambda; each strip contributes its height sign
//! times the character of the smaller shape on the remaining cycle parts.
//! Results are memoised on (shape, remaining cycle parts), and the memo is
//! shared process-wide behind a mutex so concurrent builders reuse work.
//!
//! Character tables serialize to JSON and are revalidated on load: row and
//! column orthogonality, the dimension column, and conjugate symmetry all
//! have to hold or the file is rejected.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

use crate::combinatorics::{enumerate_partitions, factorial_u128, CycleType, Partition};
use crate::rational::{rat_from_i64, Rat};
use crate::{Error, Result};

/// Largest n accepted for character computations; keeps every value within
/// i64 (|chi(g)| <= chi(1) and dimensions stay below 2^63 up to this point).
pub const CHARACTER_CAP: usize = 20;

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static Mutex<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// chi_p(t) by memoised border-strip recursion.
pub fn mn_character(p: &Partition, t: &CycleType) -> Result<i64> {
    if p.n() != t.n() {
        return Err(Error::SizeMismatch(format!(
            "partition {p} of {} vs cycle type {t} of {}",
            p.n(),
            t.n()
        )));
    }
    if p.n() > CHARACTER_CAP {
        return Err(Error::CapExceeded {
            n: p.n(),
            cap: CHARACTER_CAP,
        });
    }
    Ok(chi_memoised(p.parts(), t.partition().parts()))
}

fn chi_memoised(shape: &[usize], cycle: &[usize]) -> i64 {
    if shape.is_empty() {
        return 1;
    }
    let key = (shape.to_vec(), cycle.to_vec());
    if let Some(&v) = memo().lock().unwrap().get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (smaller, height) in border_strip_removals(shape, cycle[0]) {
        let term = chi_memoised(&smaller, &cycle[1..]);
        total += if height % 2 == 0 { term } else { -term };
    }
    memo().lock().unwrap().insert(key, total);
    total
}

/// All ways to remove a border strip of length k from the shape, scanning
/// rows from the largest part down. Returns (remaining shape, strip height).
///
/// Works on first-column hook lengths: with m rows, beta_i = shape_i + m-1-i
/// is a strictly decreasing set; a strip of length k removable at row i means
/// beta_i - k is nonnegative and not already in the set, and the strip height
/// counts the betas strictly between beta_i - k and beta_i.
pub(crate) fn border_strip_removals(shape: &[usize], k: usize) -> Vec<(Vec<usize>, usize)> {
    let m = shape.len();
    let betas: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + m - 1 - i)
        .collect();
    let mut out = Vec::new();
    for i in 0..m {
        let b = betas[i];
        if b < k {
            continue;
        }
        let target = b - k;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&x| target < x && x < b).count();
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let remaining: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &beta)| beta - (m - 1 - j))
            .filter(|&part| part > 0)
            .collect();
        out.push((remaining, height));
    }
    out
}

/// The full character table of S_n. Rows are partitions and columns are
/// cycle types, both in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    classes: Vec<CycleType>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
    class_index: HashMap<Vec<usize>, usize>,
    partition_index: HashMap<Vec<usize>, usize>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Result<CharacterTable> {
        if n == 0 || n > CHARACTER_CAP {
            return Err(Error::CapExceeded {
                n,
                cap: CHARACTER_CAP,
            });
        }
        let partitions = enumerate_partitions(n)?;
        let classes: Vec<CycleType> = partitions.iter().cloned().map(CycleType).collect();
        let class_sizes: Vec<u64> = classes.iter().map(|c| c.class_size()).collect();
        let values: Vec<Vec<i64>> = partitions
            .iter()
            .map(|p| {
                classes
                    .iter()
                    .map(|c| chi_memoised(p.parts(), c.partition().parts()))
                    .collect()
            })
            .collect();
        Ok(Self::assemble(n, partitions, classes, class_sizes, values))
    }

    fn assemble(
        n: usize,
        partitions: Vec<Partition>,
        classes: Vec<CycleType>,
        class_sizes: Vec<u64>,
        values: Vec<Vec<i64>>,
    ) -> CharacterTable {
        let partition_index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.parts().to_vec(), i))
            .collect();
        let class_index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.partition().parts().to_vec(), i))
            .collect();
        CharacterTable {
            n,
            partitions,
            classes,
            class_sizes,
            values,
            class_index,
            partition_index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn partition_index(&self, p: &Partition) -> Option<usize> {
        self.partition_index.get(p.parts()).copied()
    }

    pub fn class_index(&self, t: &CycleType) -> Option<usize> {
        self.class_index.get(t.partition().parts()).copied()
    }

    /// Column of the identity class (1, ..., 1); always the last column.
    pub fn identity_class_index(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn value(&self, p: &Partition, t: &CycleType) -> Result<i64> {
        let row = self.partition_index(p).ok_or_else(|| {
            Error::SizeMismatch(format!(
                "partition {p} is not a row of the S_{} table",
                self.n
            ))
        })?;
        let col = self.class_index(t).ok_or_else(|| {
            Error::SizeMismatch(format!("cycle type {t} is not a class of S_{}", self.n))
        })?;
        Ok(self.values[row][col])
    }

    pub fn row(&self, p: &Partition) -> Result<&[i64]> {
        let row = self.partition_index(p).ok_or_else(|| {
            Error::SizeMismatch(format!(
                "partition {p} is not a row of the S_{} table",
                self.n
            ))
        })?;
        Ok(&self.values[row])
    }

    /// Checks every structural invariant; load() refuses tables failing any.
    pub fn validate(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::TableInvariant(format!("S_{}: {what}", self.n)));
        let expected = enumerate_partitions(self.n)?;
        if self.partitions != expected {
            return fail("partition rows differ from the canonical enumeration");
        }
        let expected_classes: Vec<CycleType> = expected.iter().cloned().map(CycleType).collect();
        if self.classes != expected_classes {
            return fail("class columns differ from the canonical enumeration");
        }
        let k = self.partitions.len();
        if self.class_sizes.len() != k
            || self.values.len() != k
            || self.values.iter().any(|row| row.len() != k)
        {
            return fail("table dimensions are inconsistent");
        }
        for (j, class) in self.classes.iter().enumerate() {
            if self.class_sizes[j] != class.class_size() {
                return fail(&format!("class size of {class} is wrong"));
            }
        }
        let order = factorial_u128(self.n);
        if self.class_sizes.iter().map(|&s| s as u128).sum::<u128>() != order {
            return fail("class sizes do not sum to n!");
        }
        let id_col = self.identity_class_index();
        for (i, p) in self.partitions.iter().enumerate() {
            if self.values[i][id_col] != p.dimension() as i64 {
                return fail(&format!("identity column of {p} is not the dimension"));
            }
        }
        for i in 0..k {
            for j in 0..k {
                let dot: i128 = (0..k)
                    .map(|c| {
                        self.class_sizes[c] as i128
                            * self.values[i][c] as i128
                            * self.values[j][c] as i128
                    })
                    .sum();
                let expected = if i == j { order as i128 } else { 0 };
                if dot != expected {
                    return fail(&format!(
                        "row orthogonality fails for {} and {}",
                        self.partitions[i], self.partitions[j]
                    ));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let dot: i128 = (0..k)
                    .map(|r| self.values[r][c] as i128 * self.values[r][d] as i128)
                    .sum();
                let expected = if c == d {
                    (order / self.class_sizes[c] as u128) as i128
                } else {
                    0
                };
                if dot != expected {
                    return fail(&format!(
                        "column orthogonality fails for {} and {}",
                        self.classes[c], self.classes[d]
                    ));
                }
            }
        }
        for (i, p) in self.partitions.iter().enumerate() {
            let conj_row = self
                .partition_index(&p.conjugate())
                .expect("conjugate of a partition of n is a partition of n");
            for (j, class) in self.classes.iter().enumerate() {
                if self.values[i][j] != class.sign() * self.values[conj_row][j] {
                    return fail(&format!(
                        "conjugate symmetry fails at row {p}, class {class}"
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let parts = |ps: &[Partition]| -> Vec<Vec<usize>> {
            ps.iter().map(|p| p.parts().to_vec()).collect()
        };
        serde_json::json!({
            "n": self.n,
            "partitions": parts(&self.partitions),
            "classes": self.classes.iter().map(|c| c.partition().parts().to_vec()).collect::<Vec<_>>(),
            "class_sizes": self.class_sizes,
            "values": self.values,
        })
    }

    /// Parses the JSON schema written by to_json. Integer cells may also be
    /// given as decimal strings. The result is validated before returning.
    pub fn from_json(value: &serde_json::Value) -> Result<CharacterTable> {
        let parse_err = |detail: &str| Error::Parse {
            what: "character table".into(),
            detail: detail.into(),
        };
        let obj = value
            .as_object()
            .ok_or_else(|| parse_err("not an object"))?;
        let n = obj
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| parse_err("missing integer field 'n'"))? as usize;
        let int_lists = |field: &str| -> Result<Vec<Vec<usize>>> {
            let rows = obj
                .get(field)
                .and_then(|v| v.as_array())
                .ok_or_else(|| parse_err(&format!("missing array field '{field}'")))?;
            rows.iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| parse_err(&format!("'{field}' rows must be arrays")))?
                        .iter()
                        .map(|x| {
                            x.as_u64().map(|v| v as usize).ok_or_else(|| {
                                parse_err(&format!("'{field}' entries must be integers"))
                            })
                        })
                        .collect()
                })
                .collect()
        };
        let partitions: Vec<Partition> = int_lists("partitions")?
            .into_iter()
            .map(Partition::new)
            .collect::<Result<_>>()?;
        let classes: Vec<CycleType> = int_lists("classes")?
            .into_iter()
            .map(|parts| Partition::new(parts).map(CycleType))
            .collect::<Result<_>>()?;
        let class_sizes: Vec<u64> = obj
            .get("class_sizes")
            .and_then(|v| v.as_array())
            .ok_or_else(|| parse_err("missing array field 'class_sizes'"))?
            .iter()
            .map(|x| int_cell(x).map(|v| v as u64))
            .collect::<Result<_>>()?;
        let values: Vec<Vec<i64>> = obj
            .get("values")
            .and_then(|v| v.as_array())
            .ok_or_else(|| parse_err("missing array field 'values'"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| parse_err("'values' rows must be arrays"))?
                    .iter()
                    .map(int_cell)
                    .collect()
            })
            .collect::<Result<_>>()?;
        let table = CharacterTable::assemble(n, partitions, classes, class_sizes, values);
        table.validate()?;
        Ok(table)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text =
            serde_json::to_string_pretty(&self.to_json()).expect("character table JSON serializes");
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<CharacterTable> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
            what: format!("character table {}", path.display()),
            detail: e.to_string(),
        })?;
        CharacterTable::from_json(&value)
    }
}

/// Accepts a JSON integer or a decimal-string cell.
fn int_cell(value: &serde_json::Value) -> Result<i64> {
    match value {
        serde_json::Value::Number(n) => n.as_i64().ok_or_else(|| Error::Parse {
            what: format!("table cell {n}"),
            detail: "out of i64 range".into(),
        }),
        serde_json::Value::String(s) => s.trim().parse().map_err(|_| Error::Parse {
            what: format!("table cell '{s}'"),
            detail: "not a decimal integer".into(),
        }),
        other => Err(Error::Parse {
            what: format!("table cell {other}"),
            detail: "expected an integer or decimal string".into(),
        }),
    }
}

/// A rational-valued class function on S_n, stored in canonical class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<Rat>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<Rat>) -> Result<ClassFunction> {
        let classes = enumerate_partitions(n)?.len();
        if values.len() != classes {
            return Err(Error::SizeMismatch(format!(
                "{} values for the {classes} classes of S_{n}",
                values.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_character(table: &CharacterTable, p: &Partition) -> Result<ClassFunction> {
        let row = table.row(p)?;
        Ok(ClassFunction {
            n: table.n(),
            values: row.iter().map(|&v| rat_from_i64(v)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// (1/n!) sum over classes of |class| * f * g. S_n characters are rational,
/// so no conjugation is involved.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rat> {
    if f.n != g.n {
        return Err(Error::SizeMismatch(format!(
            "class functions on S_{} and S_{}",
            f.n, g.n
        )));
    }
    let sizes: Vec<u64> = enumerate_partitions(f.n)?
        .into_iter()
        .map(|p| CycleType(p).class_size())
        .collect();
    let mut total = Rat::from_integer(0.into());
    for (i, size) in sizes.iter().enumerate() {
        total += rat_from_i64(*size as i64) * &f.values[i] * &g.values[i];
    }
    Ok(total / rat_from_i64(factorial_u128(f.n) as i64))
}

/// File-backed store of character tables with build/load counters, so tests
/// and callers can observe that a warm cache skips recomputation.
pub struct TableCache {
    dir: PathBuf,
    builds: AtomicU64,
    loads: AtomicU64,
}

/// Environment variable consulted when no explicit cache directory is given.
pub const CACHE_ENV_VAR: &str = "IMMANANT_CACHE";

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> TableCache {
        TableCache {
            dir: dir.into(),
            builds: AtomicU64::new(0),
            loads: AtomicU64::new(0),
        }
    }

    /// Explicit flag beats IMMANANT_CACHE beats a per-user default
    /// ($HOME/.cache/immanant, or the system temp dir without a home).
    pub fn resolve_dir(explicit: Option<PathBuf>) -> PathBuf {
        if let Some(dir) = explicit {
            return dir;
        }
        if let Some(dir) = std::env::var_os(CACHE_ENV_VAR) {
            if !dir.is_empty() {
                return PathBuf::from(dir);
            }
        }
        match std::env::var_os("HOME") {
            Some(home) if !home.is_empty() => Path::new(&home).join(".cache").join("immanant"),
            _ => std::env::temp_dir().join("immanant-cache"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn table_path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("character_table_{n}.json"))
    }

    /// Loads a cached table when present (revalidating it), otherwise builds
    /// and saves one. A corrupt or tampered file is an error, not a rebuild.
    pub fn get(&self, n: usize) -> Result<CharacterTable> {
        let path = self.table_path(n);
        if path.is_file() {
            let table = CharacterTable::load(&path)?;
            if table.n() != n {
                return Err(Error::TableInvariant(format!(
                    "{} holds a table for S_{}, expected S_{n}",
                    path.display(),
                    table.n()
                )));
            }
            self.loads.fetch_add(1, Ordering::Relaxed);
            return Ok(table);
        }
        let table = CharacterTable::new(n)?;
        std::fs::create_dir_all(&self.dir).map_err(|source| Error::Io {
            path: self.dir.display().to_string(),
            source,
        })?;
        table.save(&path)?;
        self.builds.fetch_add(1, Ordering::Relaxed);
        Ok(table)
    }

    pub fn builds(&self) -> u64 {
        self.builds.load(Ordering::Relaxed)
    }

    pub fn loads(&self) -> u64 {
        self.loads.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_permutations, Permutation};
    use proptest::prelude::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ty(parts: &[usize]) -> CycleType {
        CycleType(part(parts))
    }

    /// Trace of sigma on the 2-dimensional standard representation of S_3,
    /// built from permutation matrices restricted to the zero-sum plane with
    /// basis v1 = e1 - e2, v2 = e2 - e3. A zero-sum vector w expands as
    /// w1 * v1 + (w1 + w2) * v2.
    fn standard_rep_trace(sigma: &Permutation) -> i64 {
        let mut trace = 0i64;
        for k in 0..2usize {
            let mut w = [0i64; 3];
            w[sigma.apply(k + 1) - 1] += 1;
            w[sigma.apply(k + 2) - 1] -= 1;
            trace += if k == 0 { w[0] } else { w[0] + w[1] };
        }
        trace
    }

    #[test]
    fn standard_representation_gives_the_2_1_row() {
        let table = CharacterTable::new(3).unwrap();
        for sigma in enumerate_permutations(3).unwrap() {
            let expected = standard_rep_trace(&sigma);
            let got = table.value(&part(&[2, 1]), &sigma.cycle_type()).unwrap();
            assert_eq!(got, expected, "at {sigma}");
        }
    }

    #[test]
    fn s3_table_is_the_known_one() {
        let table = CharacterTable::new(3).unwrap();
        // Rows (3), (2,1), (1,1,1); columns (3), (2,1), (1,1,1).
        assert_eq!(
            table.values(),
            &[vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]
        );
        assert_eq!(table.class_sizes(), &[2, 3, 1]);
    }

    #[test]
    fn mn_character_checks_sizes() {
        assert!(mn_character(&part(&[2, 1]), &ty(&[4])).is_err());
        assert_eq!(mn_character(&part(&[2, 1]), &ty(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&part(&[2, 1]), &ty(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&part(&[2, 1]), &ty(&[1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=6 {
            let table = CharacterTable::new(n).unwrap();
            let trivial = table.row(&part(&[n])).unwrap();
            assert!(trivial.iter().all(|&v| v == 1));
            let sign_row = table.row(&part(&vec![1; n])).unwrap();
            for (j, class) in table.classes().iter().enumerate() {
                assert_eq!(sign_row[j], class.sign());
            }
        }
    }

    #[test]
    fn identity_column_matches_hook_dimensions() {
        for n in 1..=7 {
            let table = CharacterTable::new(n).unwrap();
            let id_col = table.identity_class_index();
            assert_eq!(table.classes()[id_col].partition().parts(), vec![1; n]);
            for (i, p) in table.partitions().iter().enumerate() {
                assert_eq!(table.values()[i][id_col], p.dimension() as i64, "{p}");
            }
        }
    }

    #[test]
    fn tables_validate_up_to_n7() {
        for n in 1..=7 {
            CharacterTable::new(n).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn conjugate_symmetry_spot_checks() {
        let table = CharacterTable::new(5).unwrap();
        for p in [part(&[3, 2]), part(&[4, 1]), part(&[2, 2, 1])] {
            let conj = p.conjugate();
            for class in table.classes() {
                let lhs = table.value(&p, class).unwrap();
                let rhs = class.sign() * table.value(&conj, class).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    /// Plain recursion with no memo, sharing only the strip enumeration.
    fn chi_unmemoised(shape: &[usize], cycle: &[usize]) -> i64 {
        if shape.is_empty() {
            return 1;
        }
        let mut total = 0;
        for (smaller, height) in border_strip_removals(shape, cycle[0]) {
            let term = chi_unmemoised(&smaller, &cycle[1..]);
            total += if height % 2 == 0 { term } else { -term };
        }
        total
    }

    proptest! {
        #[test]
        fn memoised_and_unmemoised_recursions_agree(
            n in 1usize..=8,
            i in 0usize..1000,
            j in 0usize..1000,
        ) {
            let partitions = enumerate_partitions(n).unwrap();
            let shape = &partitions[i % partitions.len()];
            let cycle = &partitions[j % partitions.len()];
            let memoised = mn_character(shape, &CycleType(cycle.clone())).unwrap();
            prop_assert_eq!(memoised, chi_unmemoised(shape.parts(), cycle.parts()));
        }
    }

    #[test]
    fn character_rows_are_orthonormal() {
        let table = CharacterTable::new(5).unwrap();
        for (i, p) in table.partitions().iter().enumerate() {
            let f = ClassFunction::from_character(&table, p).unwrap();
            for (j, q) in table.partitions().iter().enumerate() {
                let g = ClassFunction::from_character(&table, q).unwrap();
                let expected = rat_from_i64(if i == j { 1 } else { 0 });
                assert_eq!(inner_product(&f, &g).unwrap(), expected, "{p} vs {q}");
            }
        }
    }

    #[test]
    fn inner_product_rejects_mixed_sizes() {
        let t4 = CharacterTable::new(4).unwrap();
        let t5 = CharacterTable::new(5).unwrap();
        let f = ClassFunction::from_character(&t4, &part(&[4])).unwrap();
        let g = ClassFunction::from_character(&t5, &part(&[5])).unwrap();
        assert!(inner_product(&f, &g).is_err());
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table5.json");
        let table = CharacterTable::new(5).unwrap();
        table.save(&path).unwrap();
        let loaded = CharacterTable::load(&path).unwrap();
        assert_eq!(loaded, table);
        // Saving what was loaded reproduces the file byte for byte.
        let again = dir.path().join("table5b.json");
        loaded.save(&again).unwrap();
        assert_eq!(
            std::fs::read(&path).unwrap(),
            std::fs::read(&again).unwrap()
        );
    }

    #[test]
    fn load_accepts_string_cells() {
        let table = CharacterTable::new(3).unwrap();
        let mut json = table.to_json();
        json["values"][1][2] = serde_json::json!("2");
        json["class_sizes"][0] = serde_json::json!("2");
        let reloaded = CharacterTable::from_json(&json).unwrap();
        assert_eq!(reloaded, table);
    }

    #[test]
    fn load_rejects_tampered_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.json");
        let table = CharacterTable::new(4).unwrap();

        let mut json = table.to_json();
        json["values"][1][0] = serde_json::json!(99);
        std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();
        let err = CharacterTable::load(&path).unwrap_err();
        assert!(err.to_string().contains("orthogonality"), "{err}");

        let mut json = table.to_json();
        json["class_sizes"][0] = serde_json::json!(7);
        std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();
        let err = CharacterTable::load(&path).unwrap_err();
        assert!(err.to_string().contains("class size"), "{err}");

        let mut json = table.to_json();
        let rows = json["partitions"].as_array_mut().unwrap();
        rows.swap(0, 1);
        std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();
        let err = CharacterTable::load(&path).unwrap_err();
        assert!(err.to_string().contains("canonical"), "{err}");
    }

    #[test]
    fn cache_hits_skip_rebuilding() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let first = cache.get(4).unwrap();
        assert_eq!((cache.builds(), cache.loads()), (1, 0));
        let second = cache.get(4).unwrap();
        assert_eq!((cache.builds(), cache.loads()), (1, 1));
        assert_eq!(first, second);
    }

    #[test]
    fn cache_dir_resolution_order() {
        let explicit = TableCache::resolve_dir(Some(PathBuf::from("/tmp/xyz")));
        assert_eq!(explicit, PathBuf::from("/tmp/xyz"));
        // Without an explicit dir the result depends on the environment;
        // it must at least be non-empty.
        assert!(!TableCache::resolve_dir(None).as_os_str().is_empty());
    }
}
