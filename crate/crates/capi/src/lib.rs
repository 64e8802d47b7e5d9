//! C ABI over the exact immanant library.
//!
//! Every fallible entry point returns an [`ImmStatus`] and writes its result
//! through an out pointer. Character tables are held behind the opaque
//! [`ImmTable`] handle; strings returned through out pointers are released
//! with [`imm_string_free`]. Panics never cross the boundary, they map to
//! `IMM_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use immanant::characters::CharacterTable;
use immanant::combinatorics::{CycleType, Partition};
use immanant::exactlinalg::perm_span_rank;
use immanant::immanants::{immanant_with_table, RationalMatrix};
use immanant::rational::format_rat;
use immanant::stabilizer::{compute_g, torus_constraint_dimension};
use immanant::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImmStatus {
    /// The call succeeded and the out parameter holds the result.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument failed validation (malformed partition, class, matrix,
    /// or a size mismatch against the table).
    InvalidInput = 2,
    /// The requested n is beyond the supported range.
    Unsupported = 3,
    /// An internal invariant failed; the out parameter is untouched.
    Internal = 4,
}

/// Opaque handle to a character table of one symmetric group.
pub struct ImmTable {
    inner: CharacterTable,
}

fn status_of(e: &Error) -> ImmStatus {
    match e {
        Error::CapExceeded { .. } => ImmStatus::Unsupported,
        Error::Io { .. } => ImmStatus::Internal,
        _ => ImmStatus::InvalidInput,
    }
}

fn guarded(f: impl FnOnce() -> ImmStatus) -> ImmStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ImmStatus::Internal)
}

/// Reads a partition from a C array of positive parts.
///
/// # Safety
/// `parts` must point to `len` readable `size_t` values when `len > 0`.
unsafe fn partition_from_raw(parts: *const usize, len: usize) -> Result<Partition, ImmStatus> {
    if len == 0 {
        return Err(ImmStatus::InvalidInput);
    }
    if parts.is_null() {
        return Err(ImmStatus::NullArgument);
    }
    let slice = std::slice::from_raw_parts(parts, len);
    Partition::new(slice.to_vec()).map_err(|e| status_of(&e))
}

unsafe fn table_ref<'a>(table: *const ImmTable) -> Result<&'a CharacterTable, ImmStatus> {
    table
        .as_ref()
        .map(|t| &t.inner)
        .ok_or(ImmStatus::NullArgument)
}

/// Builds the character table of S_n and writes a heap-allocated handle to
/// `out`. Release it with `imm_table_free`.
///
/// # Safety
/// `out` must be a valid pointer to an `ImmTable*` slot.
#[no_mangle]
pub unsafe extern "C" fn imm_table_new(n: usize, out: *mut *mut ImmTable) -> ImmStatus {
    if out.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| match CharacterTable::new(n) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(ImmTable { inner }));
            ImmStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a handle produced by `imm_table_new`. Null is a no-op.
///
/// # Safety
/// `table` must be null or a handle not already freed.
#[no_mangle]
pub unsafe extern "C" fn imm_table_free(table: *mut ImmTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Writes the n of the group the table describes.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imm_table_n(table: *const ImmTable, out: *mut usize) -> ImmStatus {
    if out.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| match table_ref(table) {
        Ok(t) => {
            *out = t.n();
            ImmStatus::Ok
        }
        Err(s) => s,
    })
}

/// Writes the character value chi_partition(class). Both arrays are
/// partitions of the table's n, given as positive parts.
///
/// # Safety
/// `table` must be a live handle; the two arrays must hold `partition_len`
/// and `class_len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imm_character(
    table: *const ImmTable,
    partition: *const usize,
    partition_len: usize,
    class: *const usize,
    class_len: usize,
    out: *mut i64,
) -> ImmStatus {
    if out.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| {
        let t = match table_ref(table) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let p = match partition_from_raw(partition, partition_len) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let c = match partition_from_raw(class, class_len) {
            Ok(c) => CycleType(c),
            Err(s) => return s,
        };
        match t.value(&p, &c) {
            Ok(v) => {
                *out = v;
                ImmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the dimension of the irreducible representation labelled by the
/// partition (the immanant's value on the identity matrix).
///
/// # Safety
/// `partition` must hold `partition_len` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn imm_dimension(
    partition: *const usize,
    partition_len: usize,
    out: *mut u64,
) -> ImmStatus {
    if out.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| match partition_from_raw(partition, partition_len) {
        Ok(p) => {
            *out = p.dimension();
            ImmStatus::Ok
        }
        Err(s) => s,
    })
}

/// Evaluates the immanant of a square matrix given as a JSON array of rows;
/// entries are integers or "p/q" strings. Writes the exact rational result
/// as a NUL-terminated decimal or "p/q" string; release it with
/// `imm_string_free`.
///
/// # Safety
/// `table` must be a live handle; `partition` must hold `partition_len`
/// readable values; `matrix_json` must be a NUL-terminated string; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn imm_immanant_json(
    table: *const ImmTable,
    partition: *const usize,
    partition_len: usize,
    matrix_json: *const c_char,
    out: *mut *mut c_char,
) -> ImmStatus {
    if out.is_null() || matrix_json.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| {
        let t = match table_ref(table) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let p = match partition_from_raw(partition, partition_len) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let text = match CStr::from_ptr(matrix_json).to_str() {
            Ok(text) => text,
            Err(_) => return ImmStatus::InvalidInput,
        };
        let x = match RationalMatrix::parse_json(text) {
            Ok(x) => x,
            Err(e) => return status_of(&e),
        };
        match immanant_with_table(t, &p, &x) {
            Ok(value) => {
                let rendered = CString::new(format_rat(&value)).expect("no interior NUL");
                *out = rendered.into_raw();
                ImmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a string returned through an out pointer. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string produced by this library, not already freed.
#[no_mangle]
pub unsafe extern "C" fn imm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes the rank of the linear span of all n x n permutation matrices,
/// which equals (n-1)^2 + 1.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imm_perm_span_rank(n: usize, out: *mut usize) -> ImmStatus {
    if out.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| match perm_span_rank(n) {
        Ok(rank) => {
            *out = rank;
            ImmStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Writes the dimension of the solution space of the torus constraints for
/// the partition: n^2 minus the rank of the span of the nonvanishing
/// permutation matrices.
///
/// # Safety
/// `table` must be a live handle; `partition` must hold `partition_len`
/// readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imm_torus_constraint_dimension(
    table: *const ImmTable,
    partition: *const usize,
    partition_len: usize,
    out: *mut usize,
) -> ImmStatus {
    if out.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| {
        let t = match table_ref(table) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let p = match partition_from_raw(partition, partition_len) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match torus_constraint_dimension(t, &p) {
            Ok(dim) => {
                *out = dim;
                ImmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the order of the group of permutations whose left translations
/// preserve both character zero sets of the partition. Scans all n!
/// permutations; n = 7 takes a few seconds.
///
/// # Safety
/// `table` must be a live handle; `partition` must hold `partition_len`
/// readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imm_gset_order(
    table: *const ImmTable,
    partition: *const usize,
    partition_len: usize,
    out: *mut usize,
) -> ImmStatus {
    if out.is_null() {
        return ImmStatus::NullArgument;
    }
    guarded(|| {
        let t = match table_ref(table) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let p = match partition_from_raw(partition, partition_len) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match compute_g(t, &p) {
            Ok(g) => {
                *out = g.order();
                ImmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Returns the library version as a static NUL-terminated string. Do not
/// free it.
#[no_mangle]
pub extern "C" fn imm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
