//! Verify every knot in a corpus file and print the table.
//!
//! cargo run --example census -- [path] [jobs]

use std::path::PathBuf;

use foxkh::cli::{census_table, run_census};

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/rolfsen_alternating_8.jsonl")
    });
    let jobs = args.next().and_then(|j| j.parse().ok());
    match run_census(&path, jobs, true) {
        Ok(report) => {
            print!("{}", census_table(&report));
            for m in &report.mismatches {
                eprintln!("mismatch: {m}");
            }
        }
        Err(e) => eprintln!("{e}"),
    }
}
