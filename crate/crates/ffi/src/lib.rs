//! C ABI for the mapwords kernel.
//!
//! Maps cross the boundary as opaque `MwMap` handles and as JSON text in the
//! map file format. Every function returns an `MwStatus`; on failure a
//! message is kept per thread and read with `mw_last_error_message`. Strings
//! returned through out-parameters are owned by the caller and released with
//! `mw_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mapwords::io::{parse_record, write_map};
use mapwords::word_enum::{count_g, Property};
use mapwords::{EdgeSubset, Error, Flag, GeneralMap, OccurrenceWord};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Guard = 5,
    Panic = 6,
}

/// Property bits reported by `mw_word_properties`.
pub const MW_PROPERTY_P: u32 = 1;
pub const MW_PROPERTY_Q: u32 = 2;
pub const MW_PROPERTY_N: u32 = 4;
pub const MW_PROPERTY_NPRIME: u32 = 8;

/// A general map with an optional root flag.
pub struct MwMap {
    map: GeneralMap,
    root: Option<Flag>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: MwStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => MwStatus::Parse,
            Error::Guard(_) => MwStatus::Guard,
            _ => MwStatus::Domain,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn fail(status: MwStatus, message: &str) -> Failure {
    Failure {
        status,
        message: message.to_string(),
    }
}

fn set_error(message: Option<String>) {
    let text = message.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

/// Runs `body`, turning errors and panics into a status and a stored message.
fn call(body: impl FnOnce() -> Result<(), Failure>) -> MwStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error(None);
            MwStatus::Ok
        }
        Ok(Err(f)) => {
            set_error(Some(f.message));
            f.status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            set_error(Some(message));
            MwStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(MwStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(MwStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn handle<'a>(p: *const MwMap) -> Result<&'a MwMap, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(MwStatus::NullPointer, "null map handle"))
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(MwStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn store_map(out: *mut *mut MwMap, map: MwMap) -> Result<(), Failure> {
    store(out, Box::into_raw(Box::new(map)))
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| fail(MwStatus::Domain, "output holds a nul byte"))?;
    store(out, c.into_raw())
}

fn keep_root(map: &GeneralMap, root: Option<Flag>) -> Option<Flag> {
    root.filter(|&r| map.contains_flag(r))
}

/// Parses a map from JSON text. On success `*out` receives a new handle.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_from_json(json: *const c_char, out: *mut *mut MwMap) -> MwStatus {
    call(|| {
        let record = parse_record(text(json)?)?;
        let map = record.to_map()?;
        if let Some(r) = record.root {
            if !map.contains_flag(r) {
                return Err(Error::UnknownFlag(r).into());
            }
        }
        store_map(
            out,
            MwMap {
                map,
                root: record.root,
            },
        )
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `map` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mw_map_free(map: *mut MwMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Writes the map as JSON text into a new string.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_to_json(map: *const MwMap, out: *mut *mut c_char) -> MwStatus {
    call(|| {
        let m = handle(map)?;
        store_string(out, write_map(&m.map, m.root))
    })
}

/// The dual map, rooted at the same flag.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_dual(map: *const MwMap, out: *mut *mut MwMap) -> MwStatus {
    call(|| {
        let m = handle(map)?;
        store_map(
            out,
            MwMap {
                map: m.map.dual(),
                root: m.root,
            },
        )
    })
}

/// The genus of a connected map.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_genus(map: *const MwMap, out: *mut usize) -> MwStatus {
    call(|| {
        let m = handle(map)?;
        store(out, m.map.genus()?)
    })
}

/// The number of quasi-trees, as a decimal string.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_count_quasi_trees(
    map: *const MwMap,
    out: *mut *mut c_char,
) -> MwStatus {
    call(|| {
        let m = handle(map)?;
        store_string(out, m.map.count_quasi_trees().to_string())
    })
}

/// Whether the `len` edge ids at `edges` form a quasi-tree.
///
/// # Safety
/// `map` must be a live handle; `edges` must point to `len` values (it may be
/// null when `len` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_is_quasi_tree(
    map: *const MwMap,
    edges: *const usize,
    len: usize,
    out: *mut bool,
) -> MwStatus {
    call(|| {
        let m = handle(map)?;
        let ids: &[usize] = if len == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(MwStatus::NullPointer, "null edge array"));
        } else {
            std::slice::from_raw_parts(edges, len)
        };
        let s: EdgeSubset = ids.iter().copied().collect();
        store(out, m.map.is_quasi_tree(&s)?)
    })
}

/// Deletes `edge`. Fails on bridges.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_delete_edge(
    map: *const MwMap,
    edge: usize,
    out: *mut *mut MwMap,
) -> MwStatus {
    call(|| {
        let m = handle(map)?;
        let result = m.map.delete(edge)?;
        let root = keep_root(&result, m.root);
        store_map(out, MwMap { map: result, root })
    })
}

/// Contracts `edge`. Fails on separating loops.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_map_contract_edge(
    map: *const MwMap,
    edge: usize,
    out: *mut *mut MwMap,
) -> MwStatus {
    call(|| {
        let m = handle(map)?;
        let result = m.map.contract(edge)?;
        let root = keep_root(&result, m.root);
        store_map(out, MwMap { map: result, root })
    })
}

/// Words with `n` matched and `m` unmatched symbols having property Q, as a
/// decimal string. With `m = 0` this counts rooted loopless maps.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_count_loopless(n: usize, m: usize, out: *mut *mut c_char) -> MwStatus {
    call(|| store_string(out, count_g(n, m).to_string()))
}

/// Bitmask of the word properties that hold, from the `MW_PROPERTY_*` bits.
/// P and N are reported only for double occurrence words.
///
/// # Safety
/// `word` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_word_properties(word: *const c_char, out: *mut u32) -> MwStatus {
    call(|| {
        let (w, _): (OccurrenceWord, _) = OccurrenceWord::parse(text(word)?)?;
        let mut bits = 0;
        for (p, bit) in [
            (Property::P, MW_PROPERTY_P),
            (Property::Q, MW_PROPERTY_Q),
            (Property::N, MW_PROPERTY_N),
            (Property::Nprime, MW_PROPERTY_NPRIME),
        ] {
            if p.holds(&w).unwrap_or(false) {
                bits |= bit;
            }
        }
        store(out, bits)
    })
}

/// Message of the last failed call on this thread, or null after a
/// successful call. The pointer stays valid until the next call.
#[no_mangle]
pub extern "C" fn mw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
