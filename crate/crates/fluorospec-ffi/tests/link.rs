//! Compiles and runs a small C program against the generated header and the
//! static library, end to end.

use std::path::PathBuf;
use std::process::Command;

const C_SOURCE: &str = r#"
#include <stdio.h>
#include "fluorospec.h"

int main(void) {
    FluoroParams *params = NULL;
    if (fluoro_params_new_from_inversion(1.0, 0.0, 10.0, 10.0, 0.0, &params)
            != FLUORO_STATUS_OK) {
        return 1;
    }
    double value = 0.0, diag = 0.0, nondiag = 0.0;
    if (fluoro_physical_spectrum(params, 0.1, 10.0, 5.0, 1e-10,
                                 &value, &diag, &nondiag) != FLUORO_STATUS_OK) {
        return 2;
    }
    double j = 0.0;
    if (fluoro_bessel_j(0, 1.0, &j) != FLUORO_STATUS_OK) {
        return 3;
    }
    double reject = 0.0;
    if (fluoro_physical_spectrum(params, 0.0, 10.0, 5.0, 1e-10,
                                 &reject, NULL, NULL) != FLUORO_STATUS_DOMAIN_ERROR) {
        return 4;
    }
    fluoro_params_free(params);
    printf("%.17e %.17e\n", value, j);
    return 0;
}
"#;

#[test]
fn c_program_compiles_links_and_agrees() {
    let Some(cc) = ["cc", "gcc", "clang"]
        .iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping link test");
        return;
    };

    // target/debug holds the staticlib; the test binary lives in
    // target/debug/deps
    let exe = std::env::current_exe().unwrap();
    let target_dir = exe.parent().unwrap().parent().unwrap();
    let staticlib = target_dir.join("libfluorospec_ffi.a");
    assert!(
        staticlib.exists(),
        "staticlib missing at {}",
        staticlib.display()
    );
    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");

    let work = std::env::temp_dir().join(format!("fluorospec-link-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    std::fs::write(&src, C_SOURCE).unwrap();
    let exe_path = work.join("smoke");

    let out = Command::new(cc)
        .arg(&src)
        .arg(&staticlib)
        .arg(format!("-I{}", include_dir.display()))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe_path)
        .output()
        .expect("failed to run the C compiler");
    assert!(
        out.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let run = Command::new(&exe_path)
        .output()
        .expect("failed to run smoke binary");
    assert!(run.status.success(), "smoke binary exited {:?}", run.status);
    let stdout = String::from_utf8(run.stdout).unwrap();
    let mut parts = stdout.split_whitespace();
    let value: f64 = parts.next().unwrap().parse().unwrap();
    let j: f64 = parts.next().unwrap().parse().unwrap();

    let p = fluorospec::DotParams::from_inversion(1.0, 0.0).unwrap();
    let d = fluorospec::DriveParams::new(10.0, 10.0, 0.0).unwrap();
    let f = fluorospec::FilterSettings::new(0.1, 5.0).unwrap();
    let expected = fluorospec::physical_spectrum(&p, &d, &f, 10.0, 1e-10).unwrap();
    assert_eq!(value, expected.value);
    assert_eq!(j, fluorospec::numerics::bessel_j(0, 1.0).unwrap());

    std::fs::remove_dir_all(&work).ok();
}
