//! Drives the C ABI exactly as a foreign caller would: through the extern
//! functions, raw pointers, and status codes.

use std::ffi::{c_char, CStr, CString};
use std::ptr;
use wchrom_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    wchrom_string_free(p);
    s
}

unsafe fn family(spec: &str) -> *mut WchromGraph {
    let mut g = ptr::null_mut();
    assert_eq!(
        wchrom_graph_from_family(c(spec).as_ptr(), &mut g),
        WchromStatus::Ok
    );
    assert!(!g.is_null());
    g
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(wchrom_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn graph_construction_and_introspection() {
    unsafe {
        let g = family("Wh:5");
        assert_eq!(wchrom_graph_vertex_count(g), 5);
        assert_eq!(wchrom_graph_edge_count(g), 8);
        wchrom_graph_free(g);
    }
    // Null handles degrade to zero, not crashes.
    assert_eq!(wchrom_graph_vertex_count(ptr::null()), 0);
    assert_eq!(wchrom_graph_edge_count(ptr::null()), 0);
    wchrom_graph_free(ptr::null_mut());
}

#[test]
fn edge_list_parsing_round_trips() {
    let text = c("# triangle\n3 3\n0 1\n1 2\n2 0\n");
    let mut g = ptr::null_mut();
    assert_eq!(
        wchrom_graph_from_edge_list(text.as_ptr(), &mut g),
        WchromStatus::Ok
    );
    assert_eq!(wchrom_graph_vertex_count(g), 3);
    assert_eq!(wchrom_graph_edge_count(g), 3);
    wchrom_graph_free(g);
}

#[test]
fn ring_polynomial_matches_the_canonical_text() {
    unsafe {
        let g = family("C:3");
        let mut p = ptr::null_mut();
        assert_eq!(wchrom_ph(g, 0, &mut p), WchromStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(wchrom_poly_canonical(p, &mut text), WchromStatus::Ok);
        assert_eq!(
            take_string(text),
            "q^3 + 3*q^2*w - 6*q^2 - 9*q*w + 11*q + 6*w - 6"
        );
        assert_eq!(wchrom_poly_degree(p, c("q").as_ptr()), 3);
        assert_eq!(wchrom_poly_degree(p, c("w").as_ptr()), 1);
        assert!(wchrom_poly_term_count(p) > 0);
        wchrom_poly_free(p);
        wchrom_graph_free(g);
    }
}

#[test]
fn evaluation_uses_exact_rationals() {
    unsafe {
        let g = family("L:2");
        let mut p = ptr::null_mut();
        assert_eq!(wchrom_ph(g, 0, &mut p), WchromStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(
            wchrom_poly_eval(p, c("q=1/2,w=1/3").as_ptr(), &mut text),
            WchromStatus::Ok
        );
        assert_eq!(take_string(text), "5/12");
        // Unbound variable is an input error, not a panic.
        let mut t2 = ptr::null_mut();
        assert_eq!(
            wchrom_poly_eval(p, c("q=1").as_ptr(), &mut t2),
            WchromStatus::InvalidInput
        );
        wchrom_poly_free(p);
        wchrom_graph_free(g);
    }
}

#[test]
fn full_partition_function_and_oracle_agree_at_a_point() {
    unsafe {
        let g = family("C:4");
        let mut p = ptr::null_mut();
        assert_eq!(wchrom_potts_z(g, 0, &mut p), WchromStatus::Ok);
        let mut engine = ptr::null_mut();
        assert_eq!(
            wchrom_poly_eval(p, c("q=2,v=-1,w=3").as_ptr(), &mut engine),
            WchromStatus::Ok
        );
        let mut direct = ptr::null_mut();
        assert_eq!(
            wchrom_oracle(g, 2, c("-1").as_ptr(), c("3").as_ptr(), &mut direct),
            WchromStatus::Ok
        );
        let engine = take_string(engine);
        assert_eq!(engine, take_string(direct));
        assert_eq!(engine, "18");
        wchrom_poly_free(p);
        wchrom_graph_free(g);
    }
}

#[test]
fn zero_field_polynomial_factors_correctly() {
    unsafe {
        let g = family("C:4");
        let mut p = ptr::null_mut();
        assert_eq!(wchrom_chromatic(g, &mut p), WchromStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(wchrom_poly_canonical(p, &mut text), WchromStatus::Ok);
        assert_eq!(take_string(text), "q^4 - 4*q^3 + 6*q^2 - 3*q");
        wchrom_poly_free(p);
        wchrom_graph_free(g);
    }
}

#[test]
fn roots_buffer_protocol_reports_required_length() {
    unsafe {
        let g = family("L:3");
        let mut p = ptr::null_mut();
        assert_eq!(wchrom_ph(g, 0, &mut p), WchromStatus::Ok);

        // First call with zero capacity: learn the count.
        let mut count = 0usize;
        assert_eq!(
            wchrom_roots(
                p,
                c("w").as_ptr(),
                c("1/2").as_ptr(),
                ptr::null_mut(),
                ptr::null_mut(),
                ptr::null_mut(),
                0,
                &mut count,
            ),
            WchromStatus::BufferTooSmall
        );
        assert_eq!(count, 3);

        let mut re = vec![0.0f64; count];
        let mut im = vec![0.0f64; count];
        let mut mult = vec![0u32; count];
        assert_eq!(
            wchrom_roots(
                p,
                c("w").as_ptr(),
                c("1/2").as_ptr(),
                re.as_mut_ptr(),
                im.as_mut_ptr(),
                mult.as_mut_ptr(),
                count,
                &mut count,
            ),
            WchromStatus::Ok
        );
        // Slice degree 3 at w=1/2: one zero at q=1 plus a conjugate pair at
        // 5/4 +- sqrt(3)/4 i.
        assert_eq!(count, 3);
        assert!((re[0] - 1.0).abs() < 1e-9 && im[0].abs() < 1e-12);
        assert!((re[1] - 1.25).abs() < 1e-9);
        assert!((im[1] + 3f64.sqrt() / 4.0).abs() < 1e-9);
        assert!((re[2] - 1.25).abs() < 1e-9);
        assert!((im[2] - 3f64.sqrt() / 4.0).abs() < 1e-9);
        assert_eq!(mult, vec![1, 1, 1]);

        wchrom_poly_free(p);
        wchrom_graph_free(g);
    }
}

#[test]
fn error_paths_set_status_and_message() {
    unsafe {
        // Unknown family.
        let mut g = ptr::null_mut();
        assert_eq!(
            wchrom_graph_from_family(c("XYZ:3").as_ptr(), &mut g),
            WchromStatus::InvalidInput
        );
        let msg = CStr::from_ptr(wchrom_last_error()).to_str().unwrap();
        assert!(!msg.is_empty());

        // Cap exceeded surfaces as its own status.
        let k12 = family("K:12");
        let mut p = ptr::null_mut();
        assert_eq!(wchrom_ph(k12, 20, &mut p), WchromStatus::CapExceeded);
        wchrom_graph_free(k12);

        // Null pointers are rejected, not dereferenced.
        assert_eq!(
            wchrom_graph_from_family(ptr::null(), &mut g),
            WchromStatus::NullPointer
        );
        let mut text = ptr::null_mut();
        assert_eq!(
            wchrom_poly_canonical(ptr::null(), &mut text),
            WchromStatus::NullPointer
        );
        assert_eq!(wchrom_poly_degree(ptr::null(), c("q").as_ptr()), -1);
    }
}

#[test]
fn default_cap_is_positive() {
    assert!(wchrom_default_cap() >= 1);
}

#[test]
fn generated_header_declares_the_surface() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("wchrom.h");
    let text = std::fs::read_to_string(&header).expect("header should be generated by build.rs");
    for needle in [
        "WCHROM_H",
        "WchromStatus",
        "WchromGraph",
        "wchrom_ph(",
        "wchrom_potts_z(",
        "wchrom_roots(",
        "wchrom_last_error(",
        "wchrom_string_free(",
    ] {
        assert!(text.contains(needle), "header is missing `{needle}`");
    }
}
