// Prints the discrepancy report and the rediscovered canonical mode.

use obliteration::discrepancy::{discover_canonical_mode, report};

pub fn run_example() -> obliteration::Result<String> {
    let mode = discover_canonical_mode()?.expect("some mode reproduces the tables");
    Ok(format!("{}\n(table-matching mode: {mode})", report()?))
}

fn main() -> obliteration::Result<()> {
    println!("{}", run_example()?);
    Ok(())
}
