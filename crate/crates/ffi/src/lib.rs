//! C ABI over `kncrystal`.
//!
//! Tableaux and LR crystals are opaque handles owned by the caller and released with the
//! matching `*_free` function. Every fallible call returns a [`KnStatus`]; on failure
//! `kn_last_error` describes the most recent error on the calling thread. Strings returned
//! by the library are released with `kn_string_free`. Partitions are passed as
//! comma-separated part lists and barred letters as negative integers.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kncrystal::admissibility::is_admissible_tableau;
use kncrystal::column_maps::{phi_column, phi_tableau, psi_column, psi_tableau, Variant};
use kncrystal::lr::{branching_rhs, enumerate_lr, lr_coefficient, rectify};
use kncrystal::tableau::{tableau_from_json, tableau_to_json};
use kncrystal::{Alphabet, Column, Error, LieType, Partition, Tableau};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidJson = 3,
    InvalidInput = 4,
    /// A column or tableau map is undefined on the input.
    Undefined = 5,
    Internal = 6,
}

/// A tableau together with its alphabet.
pub struct KnTableau {
    tableau: Tableau,
    alphabet: Alphabet,
}

/// The elements of one LR crystal in canonical order.
pub struct KnLrCrystal {
    alphabet: Alphabet,
    elements: Vec<Tableau>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(KnStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Json(_) => KnStatus::InvalidJson,
            Error::NotAdmissible | Error::NotCoadmissible | Error::Undefined { .. } => KnStatus::Undefined,
            Error::Contract(_) => KnStatus::Internal,
            _ => KnStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            KnStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside kncrystal");
            KnStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(KnStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(KnStatus::InvalidUtf8, e.to_string()))
}

unsafe fn partition(s: *const c_char) -> Result<Partition, Failure> {
    Ok(Partition::parse(text(s)?)?)
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn boxed(tableau: Tableau, alphabet: Alphabet) -> *mut KnTableau {
    Box::into_raw(Box::new(KnTableau { tableau, alphabet }))
}

fn require_c(t: &KnTableau) -> Result<usize, Failure> {
    if t.alphabet.lie_type() != LieType::C {
        return Err(Failure(KnStatus::InvalidInput, "map defined for type C only".into()));
    }
    Ok(t.alphabet.rank())
}

/// Message for the last failed call on this thread; empty after a success. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn kn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by the library.
///
/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn kn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a tableau document `{"type","n","shape","inner","rows"}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_tableau_from_json(json: *const c_char, out: *mut *mut KnTableau) -> KnStatus {
    guard(|| {
        let (t, a) = tableau_from_json(text(json)?)?;
        put(out, boxed(t, a))
    })
}

/// Serialize a tableau; release the result with `kn_string_free`.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_tableau_to_json(t: *const KnTableau, out: *mut *mut c_char) -> KnStatus {
    guard(|| {
        let t = handle(t)?;
        let s = CString::new(tableau_to_json(&t.tableau, &t.alphabet)).map_err(|e| Failure(KnStatus::Internal, e.to_string()))?;
        put(out, s.into_raw())
    })
}

/// # Safety
/// `t` must come from this library or be null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn kn_tableau_free(t: *mut KnTableau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// KN-admissibility in the tableau's own type.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_tableau_is_admissible(t: *const KnTableau, out: *mut bool) -> KnStatus {
    guard(|| {
        let t = handle(t)?;
        put(out, is_admissible_tableau(&t.tableau, &t.alphabet))
    })
}

/// `Φ` of a type C tableau.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_tableau_phi(t: *const KnTableau, out: *mut *mut KnTableau) -> KnStatus {
    guard(|| {
        let t = handle(t)?;
        let image = phi_tableau(&t.tableau, require_c(t)?)?;
        put(out, boxed(image, t.alphabet))
    })
}

/// `Ψ` of a type C tableau; `KN_STATUS_UNDEFINED` when a stage is undefined.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_tableau_psi(t: *const KnTableau, out: *mut *mut KnTableau) -> KnStatus {
    guard(|| {
        let t = handle(t)?;
        let image = psi_tableau(&t.tableau, require_c(t)?)?;
        put(out, boxed(image, t.alphabet))
    })
}

/// Rectification of a skew tableau with barred letters.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_tableau_rectify(t: *const KnTableau, out: *mut *mut KnTableau) -> KnStatus {
    guard(|| {
        let t = handle(t)?;
        put(out, boxed(rectify(&t.tableau)?, t.alphabet))
    })
}

/// The LR crystal of shape-`ν` tableaux smooth on `μ` reaching `λ`. `lie_type` is one of
/// `'A'`, `'B'`, `'C'`, `'D'`.
///
/// # Safety
/// String arguments must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_lr_enumerate(
    lie_type: c_char,
    n: usize,
    lambda: *const c_char,
    mu: *const c_char,
    nu: *const c_char,
    out: *mut *mut KnLrCrystal,
) -> KnStatus {
    guard(|| {
        let t = LieType::parse(&char::from(lie_type as u8).to_string())?;
        let crystal = enumerate_lr(t, n, &partition(lambda)?, &partition(mu)?, &partition(nu)?)?;
        let boxed = Box::new(KnLrCrystal { alphabet: crystal.alphabet, elements: crystal.elements });
        put(out, Box::into_raw(boxed))
    })
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn kn_lr_len(c: *const KnLrCrystal) -> usize {
    c.as_ref().map_or(0, |c| c.elements.len())
}

/// A copy of element `index`, to be released with `kn_tableau_free`.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_lr_get(c: *const KnLrCrystal, index: usize, out: *mut *mut KnTableau) -> KnStatus {
    guard(|| {
        let c = handle(c)?;
        let t = c
            .elements
            .get(index)
            .ok_or_else(|| Failure(KnStatus::InvalidInput, format!("index {index} out of range")))?;
        put(out, boxed(t.clone(), c.alphabet))
    })
}

/// # Safety
/// `c` must come from this library or be null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn kn_lr_free(c: *mut KnLrCrystal) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// `Σ c^λ_{ξζ} c^μ_{ζη} c^ν_{ηξ}` over shapes with at most `n` rows.
///
/// # Safety
/// String arguments must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_branching_rhs(
    lambda: *const c_char,
    mu: *const c_char,
    nu: *const c_char,
    n: usize,
    out: *mut u64,
) -> KnStatus {
    guard(|| put(out, branching_rhs(&partition(lambda)?, &partition(mu)?, &partition(nu)?, n)))
}

/// The LR coefficient `c^λ_{μν}`.
///
/// # Safety
/// String arguments must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kn_lr_coefficient(
    lambda: *const c_char,
    mu: *const c_char,
    nu: *const c_char,
    out: *mut u64,
) -> KnStatus {
    guard(|| put(out, lr_coefficient(&partition(lambda)?, &partition(mu)?, &partition(nu)?)))
}

unsafe fn column_map(
    letters: *const i32,
    len: usize,
    n: usize,
    out: *mut i32,
    f: fn(&Column, usize, Variant) -> kncrystal::Result<Column>,
) -> KnStatus {
    guard(|| {
        if len > 0 && (letters.is_null() || out.is_null()) {
            return Err(null());
        }
        let input = if len == 0 { &[][..] } else { std::slice::from_raw_parts(letters, len) };
        let image = f(&Column::from_values(input), n, Variant::Second)?;
        if len > 0 {
            ptr::copy_nonoverlapping(image.values().as_ptr(), out, len);
        }
        Ok(())
    })
}

/// `φ` of an admissible type C column of rank `n`; writes `len` letters to `out`.
///
/// # Safety
/// `letters` and `out` must point to `len` integers each.
#[no_mangle]
pub unsafe extern "C" fn kn_phi_column(letters: *const i32, len: usize, n: usize, out: *mut i32) -> KnStatus {
    column_map(letters, len, n, out, phi_column)
}

/// `ψ` of a coadmissible type C column of rank `n`; writes `len` letters to `out`.
///
/// # Safety
/// `letters` and `out` must point to `len` integers each.
#[no_mangle]
pub unsafe extern "C" fn kn_psi_column(letters: *const i32, len: usize, n: usize, out: *mut i32) -> KnStatus {
    column_map(letters, len, n, out, psi_column)
}
