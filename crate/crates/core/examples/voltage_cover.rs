//! Builds a derived cover from a voltage assignment, then recovers the
//! assignment as a quotient by the rotation.

use tricirc::families::{family_automorphism, FamilyAutomorphism, FamilyParams, TricirculantType};
use tricirc::io::write_quotient;
use tricirc::symmetry::are_isomorphic;
use tricirc::voltage::quotient;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = FamilyParams::new(TricirculantType::T1, 9, 6, 1)?;
    let z = p.voltages();
    let g = z.derived_cover()?;
    println!("{p}: {} vertices, {} edges, connected {}", g.num_vertices(), g.num_edges(), z.cover_connected());
    for v in [0, 1, 18, 36] {
        let nb: Vec<String> = g.neighbours(v).iter().map(|&w| format!("{}[{}]", g.vertex_name(w), g.edge_type(v, w).unwrap())).collect();
        println!("  {} -> {}", g.vertex_name(v), nb.join(" "));
    }
    let rho = family_automorphism(FamilyAutomorphism::Rho, 9)?;
    let q = quotient(&g, &rho)?;
    print!("quotient by the rotation:\n{}", write_quotient(&q));
    println!("cover of the quotient is isomorphic: {}", are_isomorphic(&q.derived_cover()?.plain(), &g.plain())?);
    Ok(())
}
