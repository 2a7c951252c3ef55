use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use gammoid_lab_ffi::*;

const PATH: &str = r#"{"vertices":["s","x","t"],"edges":[["s","x"],["x","t"]],"exits":["t"]}"#;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { gl_string_free(s) };
    out
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn path_dimaze() -> *mut GlDimaze {
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { gl_dimaze_parse(c(PATH).as_ptr(), &mut d) }, GlStatus::Ok);
    d
}

#[test]
fn link_and_independence() {
    let d = path_dimaze();
    assert_eq!(unsafe { gl_dimaze_len(d) }, 3);
    let mut linked = false;
    let mut doc = ptr::null_mut();
    let st = unsafe { gl_dimaze_link(d, c("s,x").as_ptr(), &mut linked, &mut doc) };
    assert_eq!(st, GlStatus::Ok);
    assert!(!linked);
    assert!(take(doc).contains("\"separator\""));
    let mut ind = false;
    assert_eq!(unsafe { gl_dimaze_is_independent(d, c("x").as_ptr(), &mut ind) }, GlStatus::Ok);
    assert!(ind);
    unsafe { gl_dimaze_free(d) };
}

#[test]
fn conversions_round_trip() {
    let d = path_dimaze();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { gl_dimaze_to_bimaze(d, &mut b) }, GlStatus::Ok);
    let mut answer = GlAnswer::Inconclusive;
    assert_eq!(unsafe { gl_bimaze_mpt(b, c("s,x").as_ptr(), &mut answer) }, GlStatus::Ok);
    assert_eq!(answer, GlAnswer::Yes);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { gl_bimaze_to_dimaze(b, &mut back) }, GlStatus::Ok);
    let (mut j1, mut j2) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { gl_dimaze_to_json(d, &mut j1) }, GlStatus::Ok);
    assert_eq!(unsafe { gl_dimaze_to_json(back, &mut j2) }, GlStatus::Ok);
    assert_eq!(take(j1), take(j2));
    let mut bj = ptr::null_mut();
    assert_eq!(unsafe { gl_bimaze_to_json(b, &mut bj) }, GlStatus::Ok);
    let text = c(&take(bj));
    let mut b2 = ptr::null_mut();
    assert_eq!(unsafe { gl_bimaze_parse(text.as_ptr(), &mut b2) }, GlStatus::Ok);
    unsafe {
        gl_bimaze_free(b2);
        gl_bimaze_free(b);
        gl_dimaze_free(back);
        gl_dimaze_free(d);
    }
}

#[test]
fn errors_are_reported() {
    let mut d = ptr::null_mut();
    let st = unsafe { gl_dimaze_parse(c("{\"vertices\": 3}").as_ptr(), &mut d) };
    assert_eq!(st, GlStatus::InvalidDocument);
    assert!(d.is_null());
    assert!(take(gl_last_error()).contains("dimaze document"));
    assert_eq!(unsafe { gl_dimaze_parse(ptr::null(), &mut d) }, GlStatus::NullOrUtf8);
    let d = path_dimaze();
    let mut ind = false;
    assert_eq!(unsafe { gl_dimaze_is_independent(d, c("nope").as_ptr(), &mut ind) }, GlStatus::InvalidDocument);
    assert!(take(gl_last_error()).contains("nope"));
    unsafe {
        gl_dimaze_free(d);
        gl_dimaze_free(ptr::null_mut());
        gl_string_free(ptr::null_mut());
    }
    assert!(!unsafe { CStr::from_ptr(gl_version()) }.to_str().unwrap().is_empty());
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/gammoid_lab.h")).unwrap();
    for name in [
        "gl_dimaze_parse",
        "gl_dimaze_link",
        "gl_dimaze_is_independent",
        "gl_dimaze_to_bimaze",
        "gl_bimaze_mpt",
        "gl_bimaze_to_dimaze",
        "gl_last_error",
        "gl_string_free",
        "typedef struct GlDimaze GlDimaze",
        "GL_STATUS_OK",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles a small C program against the header and the static library.
#[test]
fn c_program_links_against_header() {
    let target = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = target.join("libgammoid_lab_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "gammoid_lab.h"
int main(void) {
    const char *doc = "{\"vertices\":[\"s\",\"x\",\"t\"],\"edges\":[[\"s\",\"x\"],[\"x\",\"t\"]],\"exits\":[\"t\"]}";
    GlDimaze *d = NULL;
    if (gl_dimaze_parse(doc, &d) != GL_STATUS_OK) return 1;
    bool ind = true;
    if (gl_dimaze_is_independent(d, "s,x", &ind) != GL_STATUS_OK || ind) return 2;
    if (gl_dimaze_is_independent(d, "s", &ind) != GL_STATUS_OK || !ind) return 3;
    gl_dimaze_free(d);
    printf("ok\n");
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("smoke");
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n", "exit {:?}", out.status);
}
