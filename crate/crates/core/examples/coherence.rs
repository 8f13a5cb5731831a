// Coherence laws of every product, checked as morphism equalities.

use hyperbox::suites::coherence;

pub fn run_example() -> hyperbox::Result<bool> {
    let report = coherence(3, 2)?;
    print!("{}", report.to_text());
    Ok(report.passed())
}

fn main() -> hyperbox::Result<()> {
    if !run_example()? {
        std::process::exit(1);
    }
    Ok(())
}
