//! Golden-file cases shared by the CLI and acceptance tests.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "solve_brute",
        args: &["solve", "--input", "path_rrbb.ccg", "--variant", "mcs", "--algo", "brute"],
        code: 0,
    },
    Case {
        name: "solve_tree_dp",
        args: &["solve", "--input", "path_rrbb.ccg", "--variant", "mcs", "--algo", "tree-dp"],
        code: 0,
    },
    Case { name: "solve_auto", args: &["solve", "--input", "path_rrbb.ccg"], code: 0 },
    Case { name: "solve_mscs", args: &["solve", "--input", "path_rrbb.ccg", "--variant", "mscs"], code: 0 },
    Case {
        name: "solve_sequential",
        args: &["solve", "--input", "path_rrbb.ccg", "--algo", "brute", "--sequential"],
        code: 0,
    },
    Case { name: "solve_cycle_tree_dp", args: &["solve", "--input", "triangle.ccg", "--algo", "tree-dp"], code: 3 },
    Case { name: "solve_disconnected", args: &["solve", "--input", "disconnected.ccg"], code: 3 },
    Case { name: "solve_cap", args: &["solve", "--input", "path_rrbb.ccg", "--algo", "brute", "--cap", "3"], code: 3 },
    Case { name: "solve_parse_error", args: &["solve", "--input", "bad_color.ccg"], code: 2 },
    Case {
        name: "solve_tree_dp_mscs",
        args: &["solve", "--input", "path_rrbb.ccg", "--variant", "mscs", "--algo", "tree-dp"],
        code: 2,
    },
    Case {
        name: "verify_strict_23",
        args: &["verify", "--input", "path_rrbb.ccg", "--subset", "subset_23.txt", "--variant", "mscs"],
        code: 0,
    },
    Case {
        name: "verify_strict_13",
        args: &["verify", "--input", "path_rrbb.ccg", "--subset", "subset_13.txt", "--variant", "mscs"],
        code: 1,
    },
    Case {
        name: "verify_consistent_13",
        args: &["verify", "--input", "path_rrbb.ccg", "--subset", "subset_13.txt"],
        code: 0,
    },
    Case {
        name: "verify_all_mcs",
        args: &["verify", "--input", "path_rrbb.ccg", "--subset", "subset_all.txt", "--variant", "mcs"],
        code: 0,
    },
    Case {
        name: "verify_all_mscs",
        args: &["verify", "--input", "path_rrbb.ccg", "--subset", "subset_all.txt", "--variant", "mscs"],
        code: 0,
    },
    Case { name: "verify_parse_error", args: &["verify", "--input", "path_rrbb.ccg", "--subset", "k2.ccg"], code: 2 },
    Case { name: "inspect_path", args: &["inspect", "--input", "path_rrbb.ccg"], code: 0 },
    Case { name: "inspect_triangle", args: &["inspect", "--input", "triangle.ccg"], code: 0 },
    Case { name: "gen_sc_mscs_small", args: &["gen", "--reduction", "sc-mscs", "--input", "cover4.sc"], code: 0 },
    Case { name: "gen_ds_mscs_k2", args: &["gen", "--reduction", "ds-mscs", "--input", "k2.ccg"], code: 0 },
    Case { name: "gen_ds_mcs_random", args: &["gen", "--reduction", "ds-mcs", "--seed", "5", "--n", "6"], code: 0 },
    Case {
        name: "gen_2sat_tree_m8",
        args: &["gen", "--reduction", "2sat-tree", "--M", "8", "--input", "two_vars_one_clause.cnf"],
        code: 0,
    },
    Case {
        name: "gen_vc_interval_k4",
        args: &["gen", "--reduction", "vc-interval", "--input", "k4.ccg", "--p", "1", "--q", "1"],
        code: 0,
    },
    Case {
        name: "gen_vc_interval_not_cubic",
        args: &["gen", "--reduction", "vc-interval", "--input", "k2.ccg"],
        code: 2,
    },
    Case { name: "gen_vc_interval_no_input", args: &["gen", "--reduction", "vc-interval"], code: 2 },
    Case {
        name: "bench_random_trees",
        args: &["bench", "--suite", "random-trees", "--count", "5", "--max-n", "12", "--max-c", "3", "--seed", "7"],
        code: 0,
    },
    Case { name: "bench_empty", args: &["bench", "--suite", "random-trees", "--count", "0"], code: 0 },
    Case { name: "bench_bad_params", args: &["bench", "--max-n", "0"], code: 2 },
];

pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn run_in(dir: &Path, args: &[&str]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_mcs")).args(args).current_dir(dir).output().expect("run mcs");
    Outcome { stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"), code: out.status.code().unwrap_or(-1) }
}

/// Replaces the `millis` column of bench CSV rows with `*`.
pub fn mask_timing(stdout: &str) -> String {
    if !stdout.starts_with("n,c,seed,algo,size,millis,memo_entries\n") {
        return stdout.to_string();
    }
    let mut out = String::new();
    for (i, line) in stdout.lines().enumerate() {
        let mut fields: Vec<&str> = line.split(',').collect();
        if i > 0 && fields.len() == 7 {
            fields[5] = "*";
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Runs one case and compares against `<name>.out`; `UPDATE_GOLDEN=1`
/// rewrites the expected file instead.
pub fn check_case(case: &Case) -> Result<(), String> {
    let dir = golden_dir();
    let got = run_in(&dir, case.args);
    if got.code != case.code {
        return Err(format!("{}: exit {} (expected {})", case.name, got.code, case.code));
    }
    let stdout = mask_timing(&got.stdout);
    let path = dir.join(format!("{}.out", case.name));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if stdout != expected {
        return Err(format!("{}: stdout differs from {}\n--- got ---\n{stdout}", case.name, path.display()));
    }
    Ok(())
}
