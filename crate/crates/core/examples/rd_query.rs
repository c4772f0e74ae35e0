// Upper bounds on the resolvent degree RD(n) for a range of n.

use obliteration::bounds::rd_upper_bound;
use obliteration::{BigNat, CANONICAL_MODE};

pub fn run_example() -> obliteration::Result<Vec<String>> {
    let ns = ["5", "9", "21", "109", "5250198", "12253481", "381918437071508900", "1000000000000000000000000"];
    ns.iter()
        .map(|s| {
            let n: BigNat = s.parse().expect("literal");
            let b = rd_upper_bound(&n, CANONICAL_MODE)?;
            Ok(format!("RD({n}) <= {n} - {} = {}", b.m, b.bound))
        })
        .collect()
}

fn main() -> obliteration::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
