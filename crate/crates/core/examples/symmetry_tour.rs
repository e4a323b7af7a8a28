//! Automorphism groups, orbits, canonical forms and k-circulant detection on
//! a few classical cubic graphs.

use tricirc::families::{gp, moebius, prism, t4};
use tricirc::symmetry::{automorphism_group, canonical_form, find_k_circulant, girth, isomorphism};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("Petersen GP(5,2)", gp(5, 2)?),
        ("Dodecahedron GP(10,2)", gp(10, 2)?),
        ("Desargues GP(10,3)", gp(10, 3)?),
        ("K33", moebius(3)?),
        ("prism(6)", prism(6)?),
        ("T4(9,1,2)", t4(9, 1, 2)?.graph.plain()),
    ];
    for (name, g) in &graphs {
        let group = automorphism_group(g)?;
        let circ: Vec<usize> = (1..=3).filter(|&m| matches!(find_k_circulant(g, m), Ok(Some(_)))).collect();
        println!(
            "{name:<22} n={:<3} girth {:?} |Aut| {:<6} vertex orbits {} edge orbits {} VT {} AT {} m-circulant for m in {circ:?}",
            g.num_vertices(),
            girth(g),
            group.order().unwrap(),
            group.vertex_orbits().len(),
            group.edge_orbits(g).len(),
            group.is_vertex_transitive(),
            group.is_arc_transitive(g),
        );
    }
    let p = gp(10, 3)?;
    let shuffled = p.relabel(&[7, 2, 9, 0, 4, 19, 1, 13, 5, 11, 3, 18, 6, 8, 10, 12, 14, 15, 16, 17]);
    println!("canonical forms agree after relabelling: {}", canonical_form(&p)? == canonical_form(&shuffled)?);
    println!("isomorphism: {:?}", isomorphism(&p, &shuffled)?.map(|q| q.images().to_vec()));
    Ok(())
}
