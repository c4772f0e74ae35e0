// Xi(m, d) for degrees five and six, in every semantics mode.

use obliteration::bounds::factorial_branch;
use obliteration::table::format_approximate;
use obliteration::tschirnhaus::xi;
use obliteration::SemanticsMode;

pub fn run_example() -> obliteration::Result<Vec<String>> {
    let mut lines = vec![format!("{:>3} {:>2} {:>26} {:>26} {:>26}", "m", "d", "corrected", "published", "tabulated")];
    for (d, ms) in [(5u64, 13..=17u64), (6, 22..=25)] {
        for m in ms {
            let values = SemanticsMode::ALL
                .iter()
                .map(|&mode| xi(m, d, mode).map(|r| r.xi.to_string()))
                .collect::<obliteration::Result<Vec<_>>>()?;
            lines.push(format!("{m:>3} {d:>2} {:>26} {:>26} {:>26}", values[0], values[1], values[2]));
        }
    }
    let x = xi(22, 6, SemanticsMode::Tabulated)?.xi;
    lines.push(format!("Xi(22, 6) {}, factorial branch {}", format_approximate(&x, 4), factorial_branch(22, 6)?));
    Ok(lines)
}

fn main() -> obliteration::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
