// Where each degree starts to win the minimum in G and in H, and the
// candidates around the quadric crossover for one Xi evaluation.

use obliteration::bounds::crossover_intervals;
use obliteration::tschirnhaus::xi;
use obliteration::CANONICAL_MODE;

pub fn run_example() -> obliteration::Result<Vec<String>> {
    let table = crossover_intervals(5..=8, CANONICAL_MODE)?;
    let mut lines: Vec<String> = table.to_csv()?.lines().map(String::from).collect();
    let report = xi(13, 5, CANONICAL_MODE)?;
    lines.push(format!("Xi(13, 5): lambda2 = {}, lambda1 = {}", report.lambda2, report.lambda1));
    for c in &report.candidates {
        lines.push(format!("  keep q = {} quadrics: {}", c.q, c.value));
    }
    lines.push(format!("  best q = {}, Xi = {}", report.minimizing_q, report.xi));
    Ok(lines)
}

fn main() -> obliteration::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
