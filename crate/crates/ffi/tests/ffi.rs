use std::ffi::{CStr, CString};
use std::ptr;

use kncrystal_ffi::*;

const T1: &str = r#"{"type":"C","n":6,"shape":[3,2,1,1],"inner":[],"rows":[[2,3,-2],[3,4],[-4],[-3]]}"#;
const PHI_T1: &str = r#"{"type":"C","n":6,"shape":[3,2,1,1],"inner":[],"rows":[[1,2,-2],[2,3],[-2],[-1]]}"#;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn load(json: &str) -> *mut KnTableau {
    let mut t = ptr::null_mut();
    assert_eq!(kn_tableau_from_json(cs(json).as_ptr(), &mut t), KnStatus::Ok);
    t
}

unsafe fn dump(t: *const KnTableau) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(kn_tableau_to_json(t, &mut s), KnStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    kn_string_free(s);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(kn_last_error()).to_string_lossy().into_owned() }
}

#[test]
fn tableau_roundtrip_through_handles() {
    unsafe {
        let t = load(T1);
        assert_eq!(dump(t), T1);
        let mut ok = false;
        assert_eq!(kn_tableau_is_admissible(t, &mut ok), KnStatus::Ok);
        assert!(ok);

        let mut image = ptr::null_mut();
        assert_eq!(kn_tableau_phi(t, &mut image), KnStatus::Ok);
        assert_eq!(dump(image), PHI_T1);
        let mut back = ptr::null_mut();
        assert_eq!(kn_tableau_psi(image, &mut back), KnStatus::Ok);
        assert_eq!(dump(back), T1);
        for h in [t, image, back] {
            kn_tableau_free(h);
        }
    }
}

#[test]
fn rectify_skew() {
    unsafe {
        let w = load(r#"{"type":"C","n":3,"shape":[3,3,2],"inner":[2,1],"rows":[[-3],[-2,-1],[-3,-1]]}"#);
        let mut r = ptr::null_mut();
        assert_eq!(kn_tableau_rectify(w, &mut r), KnStatus::Ok);
        assert_eq!(dump(r), r#"{"type":"C","n":3,"shape":[3,1,1],"inner":[],"rows":[[-3,-3,-1],[-2],[-1]]}"#);
        kn_tableau_free(w);
        kn_tableau_free(r);
    }
}

#[test]
fn lr_crystal_and_counts() {
    unsafe {
        let (lambda, mu, nu) = (cs("3,3,1"), cs("3,3"), cs("3,2,1,1"));
        let mut c = ptr::null_mut();
        assert_eq!(kn_lr_enumerate(b'C' as _, 6, lambda.as_ptr(), mu.as_ptr(), nu.as_ptr(), &mut c), KnStatus::Ok);
        assert_eq!(kn_lr_len(c), 4);
        let mut docs = Vec::new();
        for i in 0..4 {
            let mut t = ptr::null_mut();
            assert_eq!(kn_lr_get(c, i, &mut t), KnStatus::Ok);
            docs.push(dump(t));
            kn_tableau_free(t);
        }
        assert!(docs.iter().any(|d| d == T1));
        let mut t = ptr::null_mut();
        assert_eq!(kn_lr_get(c, 4, &mut t), KnStatus::InvalidInput);
        assert!(t.is_null());
        kn_lr_free(c);

        let mut d = 0u64;
        assert_eq!(kn_branching_rhs(lambda.as_ptr(), mu.as_ptr(), nu.as_ptr(), 6, &mut d), KnStatus::Ok);
        assert_eq!(d, 4);
        assert_eq!(kn_lr_coefficient(cs("3,2,1").as_ptr(), cs("2,1").as_ptr(), cs("2,1").as_ptr(), &mut d), KnStatus::Ok);
        assert_eq!(d, 2);
        assert_eq!(kn_lr_len(ptr::null()), 0);
    }
}

#[test]
fn column_buffers() {
    unsafe {
        let col = [2, 5, 6, 7, -7, -5, -4];
        let mut out = [0i32; 7];
        assert_eq!(kn_phi_column(col.as_ptr(), 7, 7, out.as_mut_ptr()), KnStatus::Ok);
        assert_eq!(out, [1, 2, 3, 6, -4, -3, -1]);
        let mut back = [0i32; 7];
        assert_eq!(kn_psi_column(out.as_ptr(), 7, 7, back.as_mut_ptr()), KnStatus::Ok);
        assert_eq!(back, col);
        // ψ is undefined on a column that is not coadmissible.
        assert_eq!(kn_psi_column(col.as_ptr(), 7, 7, back.as_mut_ptr()), KnStatus::Undefined);
        assert!(!last_error().is_empty());
        assert_eq!(kn_phi_column(ptr::null(), 0, 3, ptr::null_mut()), KnStatus::Ok);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(kn_tableau_from_json(ptr::null(), &mut t), KnStatus::NullPointer);
        assert_eq!(kn_tableau_from_json(cs("{").as_ptr(), &mut t), KnStatus::InvalidJson);
        assert!(!last_error().is_empty());
        let bad = [0xffu8, 0];
        assert_eq!(kn_tableau_from_json(bad.as_ptr().cast(), &mut t), KnStatus::InvalidUtf8);
        assert!(t.is_null());

        let mut d = 0u64;
        assert_eq!(kn_lr_coefficient(cs("1,2").as_ptr(), cs("1").as_ptr(), cs("1").as_ptr(), &mut d), KnStatus::InvalidInput);
        let mut c = ptr::null_mut();
        let one = cs("1");
        assert_eq!(kn_lr_enumerate(b'Q' as _, 2, one.as_ptr(), one.as_ptr(), one.as_ptr(), &mut c), KnStatus::InvalidInput);

        let b = load(r#"{"type":"B","n":2,"shape":[1],"inner":[],"rows":[[0]]}"#);
        let mut image = ptr::null_mut();
        assert_eq!(kn_tableau_phi(b, &mut image), KnStatus::InvalidInput);
        kn_tableau_free(b);

        let t = load(T1);
        assert_eq!(kn_tableau_phi(t, ptr::null_mut()), KnStatus::NullPointer);
        assert_eq!(kn_tableau_is_admissible(t, &mut false), KnStatus::Ok);
        assert!(last_error().is_empty());
        kn_tableau_free(t);
        kn_tableau_free(ptr::null_mut());
        kn_lr_free(ptr::null_mut());
        kn_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/kncrystal.h");
    for name in [
        "kn_last_error",
        "kn_string_free",
        "kn_tableau_from_json",
        "kn_tableau_to_json",
        "kn_tableau_free",
        "kn_tableau_is_admissible",
        "kn_tableau_phi",
        "kn_tableau_psi",
        "kn_tableau_rectify",
        "kn_lr_enumerate",
        "kn_lr_len",
        "kn_lr_get",
        "kn_lr_free",
        "kn_branching_rhs",
        "kn_lr_coefficient",
        "kn_phi_column",
        "kn_psi_column",
        "KN_STATUS_UNDEFINED",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
