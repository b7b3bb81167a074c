use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use multctl_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    mult_string_free(s);
    out
}

unsafe fn parse(text: &str, vars: Option<&str>) -> *mut MultIdeal {
    let vars = vars.map(cstr);
    let mut out = ptr::null_mut();
    let status = mult_ideal_parse(
        cstr(text).as_ptr(),
        vars.as_ref().map_or(ptr::null(), |v| v.as_ptr()),
        &mut out,
    );
    assert_eq!(status, MultStatus::Ok);
    out
}

#[test]
fn lct_multiplier_ideal_and_jumps() {
    unsafe {
        let a = parse("<x^2, y^3>", Some("x,y"));
        let mut s = ptr::null_mut();
        assert_eq!(mult_lct(a, &mut s), MultStatus::Ok);
        assert_eq!(take(s), "5/6");

        let mut mi = ptr::null_mut();
        assert_eq!(mult_multiplier_ideal(a, cstr("5/6").as_ptr(), &mut mi), MultStatus::Ok);
        assert_eq!(mult_ideal_to_string(mi, &mut s), MultStatus::Ok);
        assert_eq!(take(s), "<x, y>");
        mult_ideal_free(mi);

        assert_eq!(mult_jumping_numbers(a, cstr("4/3").as_ptr(), &mut s), MultStatus::Ok);
        assert_eq!(take(s), "5/6,7/6,4/3");
        assert_eq!(mult_jumping_numbers(a, cstr("1/2").as_ptr(), &mut s), MultStatus::Ok);
        assert_eq!(take(s), "");

        let mut arity = 0usize;
        assert_eq!(mult_ideal_arity(a, &mut arity), MultStatus::Ok);
        assert_eq!(arity, 2);
        mult_ideal_free(a);
    }
}

#[test]
fn unit_ideal_lct_is_infinite() {
    unsafe {
        let u = parse("<1>", Some("x,y"));
        let mut s = ptr::null_mut();
        assert_eq!(mult_lct(u, &mut s), MultStatus::Ok);
        assert_eq!(take(s), "inf");
        mult_ideal_free(u);
    }
}

#[test]
fn sum_inclusion_verdicts() {
    unsafe {
        let m = parse("<x, y>", None);
        let mut v = MultVerdict::Fails;
        assert_eq!(mult_verify_sum_inclusion(m, m, cstr("2").as_ptr(), &mut v), MultStatus::Ok);
        assert_eq!(v, MultVerdict::Holds);
        let a = parse("<x^2>", Some("x,y"));
        let b = parse("<y^3>", Some("x,y"));
        assert_eq!(mult_verify_sum_inclusion(a, b, cstr("5/6").as_ptr(), &mut v), MultStatus::Ok);
        assert_eq!(v, MultVerdict::HoldsWithEquality);
        let c = parse("<x>", Some("x"));
        assert_eq!(mult_verify_sum_inclusion(a, c, cstr("1").as_ptr(), &mut v), MultStatus::InputError);
        for p in [m, a, b, c] {
            mult_ideal_free(p);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(mult_ideal_parse(cstr("<x^2, w>").as_ptr(), cstr("x,y").as_ptr(), &mut out), MultStatus::ParseError);
        assert!(out.is_null());
        let msg = CStr::from_ptr(mult_last_error()).to_str().unwrap();
        assert!(msg.contains("position"), "{msg}");

        assert_eq!(mult_ideal_parse(ptr::null(), ptr::null(), &mut out), MultStatus::NullPointer);
        assert_eq!(mult_ideal_parse(cstr("<x>").as_ptr(), ptr::null(), ptr::null_mut()), MultStatus::NullPointer);

        let z = parse("<0>", Some("x"));
        let mut s = ptr::null_mut();
        assert_eq!(mult_lct(z, &mut s), MultStatus::DomainError);
        assert!(s.is_null());
        let a = parse("<x>", None);
        let mut mi = ptr::null_mut();
        assert_eq!(mult_multiplier_ideal(a, cstr("1/0").as_ptr(), &mut mi), MultStatus::ParseError);
        assert_eq!(mult_multiplier_ideal(a, cstr("2").as_ptr(), &mut mi), MultStatus::Ok);
        assert!(mult_last_error().is_null());
        for p in [z, a, mi] {
            mult_ideal_free(p);
        }
        let bad = [0xffu8, 0];
        assert_eq!(mult_ideal_parse(bad.as_ptr().cast(), ptr::null(), &mut out), MultStatus::InvalidUtf8);
        mult_ideal_free(ptr::null_mut());
        mult_string_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    // tests/capi-<hash> lives in <target>/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let lib = target_dir().join("libmultctl_ffi.a");
    let header_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(header_dir.join("multctl.h").exists());
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library at {} or no C compiler", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("multctl-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "multctl.h"

int main(void) {
    MultIdeal *a = NULL;
    char *s = NULL;
    if (mult_ideal_parse("<x^2,y^3>", "x,y", &a) != MULT_STATUS_OK) return 1;
    if (mult_lct(a, &s) != MULT_STATUS_OK || strcmp(s, "5/6") != 0) return 2;
    mult_string_free(s);
    if (mult_jumping_numbers(a, "4/3", &s) != MULT_STATUS_OK) return 3;
    printf("%s\n", s);
    mult_string_free(s);
    MultIdeal *bad = NULL;
    if (mult_ideal_parse("<x^-1>", "x", &bad) != MULT_STATUS_PARSE_ERROR) return 4;
    if (mult_last_error() == NULL) return 5;
    mult_ideal_free(a);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("smoke");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&header_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "5/6,7/6,4/3\n");
    std::fs::remove_dir_all(&dir).ok();
}
