use std::ffi::{CStr, CString};
use std::ptr;

use primegraph_ffi::*;

fn graph(text: &str) -> *mut PgGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pg_graph_from_graph6(c.as_ptr(), &mut g) }, PgStatus::Ok);
    g
}

fn family(spec: &str) -> *mut PgGraph {
    let c = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pg_family_generate(c.as_ptr(), &mut g) }, PgStatus::Ok);
    g
}

fn last_error() -> String {
    let p = pg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_indices(p: *mut usize, len: usize) -> Vec<usize> {
    let v = std::slice::from_raw_parts(p, len).to_vec();
    pg_indices_free(p, len);
    v
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    pg_string_free(p);
    s
}

#[test]
fn graph6_round_trip_and_queries() {
    let g = graph("C^"); // P4 relabeled
    unsafe {
        let mut n = 0;
        assert_eq!(pg_graph_vertex_count(g, &mut n), PgStatus::Ok);
        assert_eq!(n, 4);
        let mut s = ptr::null_mut();
        assert_eq!(pg_graph_to_graph6(g, &mut s), PgStatus::Ok);
        assert_eq!(take_string(s), "C^");
        let mut e = false;
        assert_eq!(pg_graph_has_edge(g, 0, 9, &mut e), PgStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));
        pg_graph_free(g);
    }
}

#[test]
fn primality_and_homogeneous_sets() {
    let p4 = family("prime-chain:4");
    let k3 = graph("Bw");
    unsafe {
        let mut prime = false;
        assert_eq!(pg_graph_is_prime(p4, &mut prime), PgStatus::Ok);
        assert!(prime);
        let (mut p, mut len) = (ptr::null_mut(), 0);
        assert_eq!(pg_graph_find_homogeneous_set(p4, &mut p, &mut len), PgStatus::NotFound);
        assert_eq!(pg_graph_is_prime(k3, &mut prime), PgStatus::Ok);
        assert!(!prime);
        assert_eq!(pg_graph_find_homogeneous_set(k3, &mut p, &mut len), PgStatus::Ok);
        assert_eq!(take_indices(p, len), vec![0, 1]);
        pg_graph_free(p4);
        pg_graph_free(k3);
    }
}

#[test]
fn chains_through_the_boundary() {
    let g = family("prime-chain:5");
    unsafe {
        let (mut p, mut len) = (ptr::null_mut(), 0);
        assert_eq!(pg_graph_find_chain(g, 0, 1, 4, &mut p, &mut len), PgStatus::Ok);
        let seq = take_indices(p, len);
        assert_eq!(seq.last(), Some(&4));
        assert_eq!(seq.len(), 5);
        assert_eq!(pg_graph_find_chain(g, 1, 1, 4, &mut p, &mut len), PgStatus::InvalidArgument);
        pg_graph_free(g);
    }
}

#[test]
fn witness_json_outcomes() {
    let hg = family("half-graph:4");
    let k3 = graph("Bw");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(pg_graph_witness_json(hg, 3, &mut s), PgStatus::Ok);
        let json = take_string(s);
        assert!(json.contains("\"family\":\"half-graph\""), "{json}");
        assert_eq!(pg_graph_witness_json(k3, 3, &mut s), PgStatus::Ok);
        assert_eq!(take_string(s), r#"{"nonprime":[0,1]}"#);
        assert_eq!(pg_graph_witness_json(hg, 2, &mut s), PgStatus::InvalidArgument);
        pg_graph_free(hg);
        pg_graph_free(k3);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let bad = CString::new("C").unwrap();
    unsafe {
        assert_eq!(pg_graph_from_graph6(bad.as_ptr(), &mut g), PgStatus::ParseError);
        assert!(last_error().starts_with("graph6 error"));
        assert_eq!(pg_graph_from_graph6(ptr::null(), &mut g), PgStatus::NullPointer);
        let spec = CString::new("nope:3").unwrap();
        assert_eq!(pg_family_generate(spec.as_ptr(), &mut g), PgStatus::InvalidArgument);
        let mut n = 0;
        assert_eq!(pg_graph_vertex_count(ptr::null(), &mut n), PgStatus::NullPointer);
        let ok = graph("Bw");
        assert_eq!(pg_graph_vertex_count(ok, &mut n), PgStatus::Ok);
        assert!(pg_last_error().is_null());
        pg_graph_free(ok);
        pg_graph_free(ptr::null_mut());
        pg_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/primegraph.h")).unwrap();
    for name in [
        "pg_graph_from_graph6",
        "pg_family_generate",
        "pg_graph_free",
        "pg_graph_to_graph6",
        "pg_graph_vertex_count",
        "pg_graph_has_edge",
        "pg_graph_is_prime",
        "pg_graph_find_homogeneous_set",
        "pg_graph_find_chain",
        "pg_graph_witness_json",
        "pg_string_free",
        "pg_indices_free",
        "pg_last_error",
        "typedef struct PgGraph PgGraph",
        "PG_STATUS_NOT_FOUND = 5",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
