use std::ffi::{CStr, CString};
use std::ptr;

use splitlink_ffi::*;

const FIG1: &str = include_str!("../../core/tests/data/fig1.txt");

fn parse(text: &str) -> *mut SlDigraph {
    let c = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { sl_digraph_parse(c.as_ptr(), &mut d) }, SlStatus::Ok);
    d
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sl_last_error()) }.to_str().unwrap().to_string()
}

fn path(w: *const SlWitness, which: u32) -> Vec<u32> {
    let n = unsafe { sl_witness_path_len(w, which) };
    let mut buf = vec![0u32; n];
    assert_eq!(unsafe { sl_witness_path(w, which, buf.as_mut_ptr(), n) }, SlStatus::Ok);
    buf
}

#[test]
fn parse_and_serialize_round_trip() {
    let d = parse(FIG1);
    unsafe {
        assert_eq!(sl_digraph_order(d), 13);
        assert_eq!(sl_digraph_arc_count(d), 51);
        let mut s = ptr::null_mut();
        assert_eq!(sl_digraph_serialize(d, &mut s), SlStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), FIG1);
        sl_string_free(s);
        sl_digraph_free(d);
    }
}

#[test]
fn parse_error_sets_message() {
    let c = CString::new("digraph 2 1\n0 5\n").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { sl_digraph_parse(c.as_ptr(), &mut d) }, SlStatus::Parse);
    assert!(d.is_null());
    assert!(last_error().contains("line 2"), "{}", last_error());
}

#[test]
fn null_arguments_are_rejected() {
    let mut d = ptr::null_mut();
    unsafe {
        assert_eq!(sl_digraph_parse(ptr::null(), &mut d), SlStatus::NullPointer);
        assert_eq!(sl_digraph_order(ptr::null()), 0);
        let mut k = 0;
        assert_eq!(sl_local_connectivity(ptr::null(), 0, 1, ptr::null(), 0, &mut k), SlStatus::NullPointer);
        sl_digraph_free(ptr::null_mut());
        sl_witness_free(ptr::null_mut());
        assert!(sl_witness_provenance(ptr::null()).is_null());
    }
}

#[test]
fn connectivity_of_fig1() {
    let d = parse(FIG1);
    unsafe {
        let mut k = 0;
        assert_eq!(sl_local_connectivity(d, 0, 1, [2u32, 3].as_ptr(), 2, &mut k), SlStatus::Ok);
        assert_eq!(k, 3);
        assert_eq!(sl_local_connectivity(d, 2, 3, [0u32, 1].as_ptr(), 2, &mut k), SlStatus::Ok);
        assert_eq!(k, 3);
        assert_eq!(sl_local_connectivity(d, 0, 99, ptr::null(), 0, &mut k), SlStatus::Domain);
        let mut strong = false;
        assert_eq!(sl_is_k_strong(d, 2, &mut strong), SlStatus::Ok);
        assert!(strong);
        assert_eq!(sl_strong_connectivity(d, &mut k), SlStatus::Ok);
        assert_eq!(k, 2);
        sl_digraph_free(d);
    }
}

#[test]
fn link2_verdicts() {
    let d = parse(FIG1);
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(sl_link2(d, 0, 1, 2, 3, 10_000_000, &mut w), SlStatus::NotLinked);
        assert_eq!(sl_link2(d, 0, 4, 2, 3, 1, &mut w), SlStatus::BudgetExceeded);
        assert_eq!(sl_link2(d, 0, 0, 2, 3, 100, &mut w), SlStatus::Domain);
        assert_eq!(sl_link2(d, 0, 4, 2, 3, 10_000_000, &mut w), SlStatus::Ok);
        let (p1, p2) = (path(w, 0), path(w, 1));
        assert_eq!((p1[0], *p1.last().unwrap()), (0, 4));
        assert_eq!((p2[0], *p2.last().unwrap()), (2, 3));
        assert!(p1.iter().all(|x| !p2.contains(x)));
        assert_eq!(CStr::from_ptr(sl_witness_provenance(w)).to_str().unwrap(), "exact-search");
        assert_eq!(sl_witness_path(w, 2, ptr::null_mut(), 0), SlStatus::Domain);
        let mut small = [0u32; 1];
        assert_eq!(sl_witness_path(w, 0, small.as_mut_ptr(), 1), SlStatus::Domain);
        sl_witness_free(w);
        sl_digraph_free(d);
    }
}

#[test]
fn certified_link_reports_premise_failure() {
    let d = parse(FIG1);
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(sl_link2_certified(d, 0, 1, 2, 3, SlMode::Split as u32, 1000, &mut w), SlStatus::Hypothesis);
        assert_eq!(sl_link2_certified(d, 0, 1, 2, 3, 77, 1000, &mut w), SlStatus::Domain);
        assert!(w.is_null());
        sl_digraph_free(d);
    }
}

#[test]
fn certified_link_on_complete_digraph() {
    let n = 8;
    let mut text = format!("digraph {n} {}\n", n * (n - 1));
    for a in 0..n {
        for b in 0..n {
            if a != b {
                text += &format!("{a} {b}\n");
            }
        }
    }
    let d = parse(&text);
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(
            sl_link2_certified(d, 0, 1, 2, 3, SlMode::ScSplit as u32, 1_000_000, &mut w),
            SlStatus::Ok,
            "{}",
            last_error()
        );
        assert!(!sl_witness_provenance(w).is_null());
        sl_witness_free(w);
        sl_digraph_free(d);
    }
}
