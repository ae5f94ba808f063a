use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use laplace_cycles_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(lc_last_error()) }.to_str().unwrap().to_string()
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { lc_string_free(s) };
    out
}

fn cycle(seed: u64) -> *mut LcCycle {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { lc_cycle_generate(seed, 0, 4, 0, 4, 100, &mut c) }, LcStatus::Ok);
    assert!(!c.is_null());
    c
}

#[test]
fn generate_verify_and_free() {
    let c = cycle(3);
    let mut clean = false;
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { lc_cycle_verify(c, &mut clean, &mut report) }, LcStatus::Ok);
    assert!(clean);
    assert!(take(report).starts_with("ok:"));
    assert_eq!(unsafe { lc_cycle_verify(c, &mut clean, ptr::null_mut()) }, LcStatus::Ok);
    unsafe { lc_cycle_free(c) };
}

#[test]
fn json_round_trip() {
    let c = cycle(4);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lc_cycle_to_json(c, &mut s) }, LcStatus::Ok);
    let text = take(s);
    let json = CString::new(text.clone()).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { lc_cycle_from_json(json.as_ptr(), &mut back) }, LcStatus::Ok);
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { lc_cycle_to_json(back, &mut again) }, LcStatus::Ok);
    assert_eq!(take(again), text);

    let mut net = ptr::null_mut();
    assert_eq!(unsafe { lc_net_from_json(json.as_ptr(), &mut net) }, LcStatus::Parse);
    assert!(last_error().contains("cycle"), "{}", last_error());
    assert!(net.is_null());
    unsafe {
        lc_cycle_free(c);
        lc_cycle_free(back);
    }
}

#[test]
fn nets_and_congruences() {
    let c = cycle(5);
    let (mut f, mut h, mut l1) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(lc_cycle_net(c, LcNetName::F, &mut f), LcStatus::Ok);
        assert_eq!(lc_cycle_net(c, LcNetName::H, &mut h), LcStatus::Ok);
        assert_eq!(lc_net_len(f), 25);
        assert_eq!(lc_net_laplace(f, 1, &mut l1), LcStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(lc_net_to_json(l1, &mut a), LcStatus::Ok);
        assert_eq!(lc_net_to_json(h, &mut b), LcStatus::Ok);
        // Both are L1 f; the transform lives on a smaller window.
        let (a, b) = (take(a), take(b));
        assert_ne!(a, b);
        let mut bad = ptr::null_mut();
        assert_eq!(lc_net_laplace(f, 3, &mut bad), LcStatus::Usage);

        let (mut k, mut l) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(lc_cycle_diagonals(c, &mut k, &mut l), LcStatus::Ok);
        let mut w = false;
        assert_eq!(lc_congruence_is_w(k, &mut w), LcStatus::Ok);
        assert!(w);
        let mut s = ptr::null_mut();
        assert_eq!(lc_congruence_to_json(l, &mut s), LcStatus::Ok);
        let json = CString::new(take(s)).unwrap();
        let mut l2 = ptr::null_mut();
        assert_eq!(lc_congruence_from_json(json.as_ptr(), &mut l2), LcStatus::Ok);
        assert_eq!(lc_congruence_is_w(l2, &mut w), LcStatus::Ok);
        assert!(w);
        for n in [f, h, l1] {
            lc_net_free(n);
        }
        for x in [k, l, l2] {
            lc_congruence_free(x);
        }
        lc_cycle_free(c);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(lc_cycle_generate(1, 0, 0, 0, 0, 10, &mut c), LcStatus::Usage);
        assert!(last_error().contains("window"), "{}", last_error());
        assert_eq!(lc_cycle_generate(1, 4, 0, 0, 4, 10, &mut c), LcStatus::Usage);
        assert_eq!(lc_cycle_generate(1, 0, 4, 0, 4, 0, &mut c), LcStatus::Degenerate);
        assert_eq!(lc_cycle_generate(1, 0, 4, 0, 4, 10, ptr::null_mut()), LcStatus::Usage);
        let garbage = CString::new("{\"type\": \"cycle\"").unwrap();
        assert_eq!(lc_cycle_from_json(garbage.as_ptr(), &mut c), LcStatus::Parse);
        assert!(last_error().contains("line"), "{}", last_error());
        assert_eq!(lc_cycle_from_json(ptr::null(), &mut c), LcStatus::Usage);
        let mut clean = false;
        assert_eq!(lc_cycle_verify(ptr::null(), &mut clean, ptr::null_mut()), LcStatus::Usage);
        assert_eq!(lc_net_len(ptr::null()), 0);
        lc_cycle_free(ptr::null_mut());
        lc_net_free(ptr::null_mut());
        lc_congruence_free(ptr::null_mut());
        lc_string_free(ptr::null_mut());
    }
    assert!(c.is_null());
}

#[test]
fn header_compiles_as_c_and_cxx() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = include.join("laplace_cycles.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["lc_cycle_generate", "lc_cycle_verify", "lc_string_free", "LC_STATUS_VIOLATION"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(o) = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg(&header)
            .output()
        else {
            eprintln!("{compiler} not available, skipping");
            continue;
        };
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
}
