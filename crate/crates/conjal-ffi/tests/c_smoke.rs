//! Compiles and runs a real C program against the generated header and the
//! static library. Skips quietly when no C compiler is installed.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "conjal.h"

int main(void) {
    ConjalAlgebra *alg = NULL;
    if (conjal_algebra_catalog("quaternion", "Q", &alg) != ConjalStatus_Ok) return 1;
    if (conjal_algebra_dim(alg) != 4) return 2;

    ConjalElement *a = NULL;
    if (conjal_element_parse(alg, "1+i+j+k", &a) != ConjalStatus_Ok) return 3;

    ConjalElement *inv = NULL;
    if (conjal_element_invert(a, &inv) != ConjalStatus_Ok) return 4;
    char *text = conjal_element_format(inv);
    if (text == NULL) return 5;
    if (strcmp(text, "1/4 - 1/4*i - 1/4*j - 1/4*k") != 0) {
        fprintf(stderr, "unexpected inverse: %s\n", text);
        return 6;
    }
    conjal_string_free(text);

    ConjalElement *prod = NULL;
    if (conjal_element_mul(a, inv, &prod) != ConjalStatus_Ok) return 7;
    text = conjal_element_format(prod);
    if (text == NULL || strcmp(text, "1") != 0) return 8;
    conjal_string_free(text);

    ConjalClass tag;
    ConjalElement *witness = NULL;
    ConjalAlgebra *split = NULL;
    if (conjal_algebra_catalog("split_complex", "Q", &split) != ConjalStatus_Ok) return 9;
    ConjalElement *zd = NULL;
    if (conjal_element_parse(split, "1+e1", &zd) != ConjalStatus_Ok) return 10;
    if (conjal_element_classify(zd, &tag, &witness) != ConjalStatus_Ok) return 11;
    if (tag != ConjalClass_ZeroDivisor || witness == NULL) return 12;

    conjal_element_free(witness);
    conjal_element_free(zd);
    conjal_element_free(prod);
    conjal_element_free(inv);
    conjal_element_free(a);
    conjal_algebra_free(split);
    conjal_algebra_free(alg);
    printf("c smoke ok\n");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("CARGO_TARGET_DIR") {
        return PathBuf::from(dir);
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../target")
}

#[test]
fn c_program_links_and_runs() {
    let compiler = ["cc", "gcc", "clang"].iter().find_map(|c| {
        Command::new(c).arg("--version").output().ok().map(|_| *c)
    });
    let Some(compiler) = compiler else {
        eprintln!("no C compiler found; skipping the C smoke test");
        return;
    };

    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let staticlib = target_dir().join("debug").join("libconjal_ffi.a");
    assert!(
        staticlib.exists(),
        "static library missing at {}; cargo builds it before tests",
        staticlib.display()
    );

    let work = std::env::temp_dir().join("conjal-c-smoke");
    std::fs::create_dir_all(&work).unwrap();
    let source = work.join("main.c");
    std::fs::write(&source, C_PROGRAM).unwrap();
    let binary = work.join("smoke");

    let compile = Command::new(compiler)
        .arg(&source)
        .arg(&staticlib)
        .arg(format!("-I{}", include_dir.display()))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .output()
        .expect("compiler runs");
    assert!(
        compile.status.success(),
        "C compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("smoke binary runs");
    assert_eq!(
        run.status.code(),
        Some(0),
        "smoke binary failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "c smoke ok\n");
}
