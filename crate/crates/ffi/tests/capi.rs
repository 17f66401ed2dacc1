use sliceburn_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn open(desc: &str) -> *mut SbContext {
    let d = CString::new(desc).unwrap();
    let mut ctx = ptr::null_mut();
    assert_eq!(unsafe { sb_context_new(d.as_ptr(), 100, &mut ctx) }, SbStatus::Ok);
    assert!(!ctx.is_null());
    ctx
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sb_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn counts_for_c2() {
    let ctx = open("family cyclic 2");
    let mut n = 0usize;
    assert_eq!(unsafe { sb_group_order(ctx, &mut n) }, SbStatus::Ok);
    assert_eq!(n, 2);
    assert_eq!(unsafe { sb_subgroup_count(ctx, &mut n) }, SbStatus::Ok);
    assert_eq!(n, 2);
    assert_eq!(unsafe { sb_class_count(ctx, SbRing::Slice, &mut n) }, SbStatus::Ok);
    assert_eq!(n, 3);
    assert_eq!(unsafe { sb_unit_dimension(ctx, SbRing::Slice, &mut n) }, SbStatus::Ok);
    assert_eq!(n, 3);
    unsafe { sb_context_free(ctx) };
}

#[test]
fn a5_components() {
    let ctx = open("family alternating 5");
    let mut n = 0usize;
    assert_eq!(unsafe { sb_component_count(ctx, SbRing::Section, 0, &mut n) }, SbStatus::Ok);
    assert_eq!(n, 2);
    assert_eq!(unsafe { sb_component_count(ctx, SbRing::Slice, 0, &mut n) }, SbStatus::Ok);
    assert!(n >= 2);
    assert_eq!(unsafe { sb_component_count(ctx, SbRing::Slice, 4, &mut n) }, SbStatus::InvalidArgument);
    assert!(last_error().contains("not prime"), "{}", last_error());
    unsafe { sb_context_free(ctx) };
}

#[test]
fn mark_matrix_reports_its_size() {
    let ctx = open("family symmetric 3");
    let mut len = 0usize;
    assert_eq!(unsafe { sb_mark_matrix(ctx, SbRing::Burnside, ptr::null_mut(), 0, &mut len) }, SbStatus::BufferTooSmall);
    assert_eq!(len, 16);
    let mut buf = vec![0i64; len];
    assert_eq!(unsafe { sb_mark_matrix(ctx, SbRing::Burnside, buf.as_mut_ptr(), buf.len(), &mut len) }, SbStatus::Ok);
    // First row of the Burnside table of marks of S3, trivial subgroup first.
    assert_eq!(&buf[..4], &[6, 3, 2, 1]);
    unsafe { sb_context_free(ctx) };
}

#[test]
fn json_reports_round_trip_through_c_strings() {
    let ctx = open("family cyclic 4");
    for cmd in ["info", "marks", "idempotents", "units", "spectrum"] {
        let c = CString::new(cmd).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { sb_report_json(ctx, c.as_ptr(), SbRing::Section, &mut out) }, SbStatus::Ok, "{cmd}");
        let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { sb_string_free(out) };
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(!v.is_null(), "{cmd}");
    }
    let bad = CString::new("nonsense").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sb_report_json(ctx, bad.as_ptr(), SbRing::Slice, &mut out) }, SbStatus::InvalidArgument);
    assert!(out.is_null());
    unsafe { sb_context_free(ctx) };
}

#[test]
fn errors_map_to_status_codes() {
    let mut ctx = ptr::null_mut();
    let big = CString::new("family cyclic 500").unwrap();
    assert_eq!(unsafe { sb_context_new(big.as_ptr(), 100, &mut ctx) }, SbStatus::CapExceeded);
    let garbage = CString::new("family nosuch 3").unwrap();
    assert_eq!(unsafe { sb_context_new(garbage.as_ptr(), 100, &mut ctx) }, SbStatus::ParseError);
    assert!(last_error().starts_with("line 1"), "{}", last_error());
    assert_eq!(unsafe { sb_context_new(ptr::null(), 100, &mut ctx) }, SbStatus::NullArgument);
    let mut n = 0usize;
    assert_eq!(unsafe { sb_group_order(ptr::null(), &mut n) }, SbStatus::NullArgument);
    unsafe { sb_context_free(ptr::null_mut()) };
    unsafe { sb_string_free(ptr::null_mut()) };
}

#[test]
fn verify_suite_through_the_abi() {
    let ctx = open("family symmetric 3");
    let suite = CString::new("spectrum").unwrap();
    let mut failed = usize::MAX;
    assert_eq!(unsafe { sb_verify(ctx, suite.as_ptr(), 7, &mut failed) }, SbStatus::Ok);
    assert_eq!(failed, 0);
    let bogus = CString::new("everything").unwrap();
    assert_eq!(unsafe { sb_verify(ctx, bogus.as_ptr(), 7, &mut failed) }, SbStatus::InvalidArgument);
    unsafe { sb_context_free(ctx) };
}

/// The generated header compiles as C when a C compiler is available.
#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/sliceburn.h");
    let dir = std::env::temp_dir().join(format!("sliceburn-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("probe.c");
    std::fs::write(
        &src,
        format!(
            "#include \"{header}\"\nint main(void) {{ SbContext *c = 0; size_t n = 0; \
             return sb_group_order(c, &n) == SB_STATUS_OK; }}\n"
        ),
    )
    .unwrap();
    let status = std::process::Command::new("cc").arg("-std=c99").arg("-Wall").arg("-fsyntax-only").arg(&src).status();
    let _ = std::fs::remove_dir_all(&dir);
    match status {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(e) => eprintln!("no C compiler, header not compiled: {e}"),
    }
}
