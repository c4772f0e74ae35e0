// Polar cones, Sylvester reductions and the geometric dimension bound of a
// few small types.

use obliteration::typealgebra::{g_bound, polar_cone_type, sylvester_reductions};
use obliteration::MultiDegree;

pub fn run_example() -> obliteration::Result<Vec<String>> {
    let mut lines = Vec::new();
    for text in ["1,3", "2,0", "1,1,1", "1,2,3,4"] {
        let t: MultiDegree = text.parse()?;
        let chain: Vec<String> = sylvester_reductions(&t, None)?.iter().map(|r| format!("[{r}]")).collect();
        lines.push(format!(
            "type [{t}]  polar cone [{}]  reductions {}  g = {}",
            polar_cone_type(&t),
            if chain.is_empty() { "-".to_string() } else { chain.join(" -> ") },
            g_bound(&t)?
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
