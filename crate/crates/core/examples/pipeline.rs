//! The full command-line pipeline in a temporary directory, ending with the
//! report.

fn main() {
    let dir = std::env::temp_dir().join(format!("hkcolor-pipeline-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    std::env::set_current_dir(&dir).expect("cd");
    let steps: &[&[&str]] = &[
        &[
            "gen-lc",
            "--planted",
            "--u",
            "2",
            "--v",
            "3",
            "--labels",
            "2",
            "--d",
            "2",
            "--edges",
            "4",
            "--seed",
            "7",
        ],
        &["lc-value"],
        &["extend", "--t", "3"],
        &[
            "accept", "--proof", "correct", "--mode", "mc", "--eta", "0", "--r", "2", "--trials", "100000", "--seed",
            "1",
        ],
        &[
            "fglss-build",
            "--instance",
            "instance_t3.json",
            "--n",
            "15",
            "--seed",
            "3",
            "--format",
            "dimacs",
        ],
        &["mwis"],
        &["color"],
        &["verify-coloring"],
        &["good-fraction", "--t", "3,4,5", "--n", "200", "--seed", "5"],
        &["report", "--r", "2", "--t", "3"],
    ];
    for step in steps {
        let code = hkcolor::cli::run(std::iter::once("hkcolor").chain(step.iter().copied()));
        if code != 0 {
            std::process::exit(code);
        }
    }
    println!("artifacts in {}", dir.display());
}
