// G, G' and H for m up to 30.

use obliteration::bounds::{g_function, g_prime, h_function};
use obliteration::CANONICAL_MODE;

pub fn run_example() -> obliteration::Result<Vec<String>> {
    let mut lines = vec![format!("{:>3} {:>48} {:>48} {:>48}", "m", "G", "G'", "H")];
    for m in 1..=30u64 {
        let h = if m >= 13 { h_function(m, CANONICAL_MODE)?.to_string() } else { "-".into() };
        lines.push(format!("{m:>3} {:>48} {:>48} {h:>48}", g_function(m)?, g_prime(m, CANONICAL_MODE)?));
    }
    Ok(lines)
}

fn main() -> obliteration::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
