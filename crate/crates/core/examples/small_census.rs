//! Vertex-transitive tricirculants of order at most 48, with the types each
//! one carries.

use std::time::Instant;

use tricirc::verify::small_census;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Instant::now();
    let census = small_census(48)?;
    for row in &census.rows {
        println!("order {}: {} classes", row.order, row.classes.len());
        for c in &row.classes {
            let types: Vec<String> = c.types.iter().map(|t| t.to_string()).collect();
            println!(
                "  {:<14} types {{{}}} girth {:?} |Aut| {} {}",
                c.alias.map(str::to_string).or(c.identified.as_ref().map(|i| i.to_string())).unwrap_or("-".into()),
                types.join(","),
                c.girth,
                c.aut_order.as_deref().unwrap_or("?"),
                if c.arc_transitive { "arc-transitive" } else { "" }
            );
        }
    }
    println!("total {} ({:?})", census.total(), t.elapsed());
    Ok(())
}
