// Sylvester's formula of obliteration next to the geometric obliteration of
// the same top degree.

use obliteration::sylvester::{emanant_step, sylvester_lambda};
use obliteration::typealgebra::obliterate_top_degree;
use obliteration::MultiDegree;

pub fn run_example() -> obliteration::Result<Vec<String>> {
    let mut lines = Vec::new();
    for counts in [[1u64, 0, 0], [2, 0, 0], [1, 1, 1], [3, 2, 1]] {
        let t = MultiDegree::from_u64s(&counts)?;
        lines.push(format!(
            "[{t}]: emanant step [{}], lambda [{}], geometric [{}]",
            emanant_step(&t)?,
            sylvester_lambda(&t)?,
            obliterate_top_degree(&t)?
        ));
    }
    Ok(lines)
}

fn main() -> obliteration::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
