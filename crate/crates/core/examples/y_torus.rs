//! Y(k): triangle-freeness, the three-cycle torus decomposition and the
//! arc-transitive member Y(9).

use tricirc::families::{family_automorphism, torus_cycle_decomposition, y_graph, FamilyAutomorphism};
use tricirc::symmetry::{automorphism_group, count_cycles, find_k_circulant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in (9..=21).step_by(2) {
        let y = y_graph(k)?;
        let group = automorphism_group(&y)?;
        let cycles = torus_cycle_decomposition(&y, k)?;
        let lens: Vec<usize> = cycles.iter().map(Vec::len).collect();
        println!(
            "Y({k}): VT {}, arc-transitive {}, |Aut| {}, triangles {}, torus cycles {lens:?}",
            group.is_vertex_transitive(),
            group.is_arc_transitive(&y),
            group.order().unwrap(),
            count_cycles(&y, 3)
        );
    }
    let y11 = y_graph(11)?;
    println!("Y(11) bicirculant: {}", find_k_circulant(&y11, 2)?.is_some());
    let phi = family_automorphism(FamilyAutomorphism::PhiY, 9)?;
    let lens: Vec<usize> = phi.cycles().iter().map(Vec::len).collect();
    println!("phi_y on Y(9): automorphism {}, cycle lengths {lens:?}", phi.is_automorphism(&y_graph(9)?));
    Ok(())
}
