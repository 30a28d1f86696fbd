//! One line per acceptance criterion; exits nonzero if any fails.

use secant_core::repro::{self, ReproConfig, Status};

fn main() {
    let only: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| a.starts_with("AC") || a.starts_with("ac"))
        .collect();
    let config = ReproConfig::default();
    let mut failed = 0;
    for c in repro::criteria() {
        if !only.is_empty() && !only.iter().any(|o| o.eq_ignore_ascii_case(c.id)) {
            continue;
        }
        let r = repro::run_criterion(&c, &config);
        print!("{}", repro::format_table(std::slice::from_ref(&r), true));
        if r.status == Status::Fail {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
