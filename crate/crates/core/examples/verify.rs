//! Runs the verification suite and prints one line per criterion.

use turnpoint::verify::{format_line, run_suite};

fn main() {
    let filter = std::env::args().nth(1);
    let results = run_suite(filter.as_deref());
    for r in &results {
        println!("{}", format_line(r));
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    println!("{} criteria, {failed} failed", results.len());
}
