//! Net-voltage tables of reduced closed walks in the catalogue pregraphs.
//!
//! Usage: walk_tables [DELTA] [LENGTH]   (default: Δ1 at lengths 7 and 8, Δ2 at 6)

use tricirc::verify::walk_table;

fn show(d: usize, len: usize) -> Result<(), Box<dyn std::error::Error>> {
    println!("Δ{d}, length {len}");
    for v in 0..3 {
        let t = walk_table(d, len, v)?;
        let rows: Vec<String> = t.rows().into_iter().map(|r| format!("{} {}", r.voltage, r.count)).collect();
        println!("  from {} ({} walks): {}", t.start, t.total, rows.join(", "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    match args[..] {
        [d, len] => show(d, len),
        _ => {
            show(1, 8)?;
            show(1, 7)?;
            show(2, 6)
        }
    }
}
