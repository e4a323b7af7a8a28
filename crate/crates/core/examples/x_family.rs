//! The X(k) family: vertex-transitivity, 8-signatures, group orders and the
//! generalised Petersen identification when 3 does not divide k.

use tricirc::families::{gp, r_star, x_graph};
use tricirc::symmetry::{are_isomorphic, automorphism_group, find_k_circulant, girth, signatures};
use tricirc::verify::check_t1_conditions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in (9..=21).step_by(2) {
        let x = x_graph(k)?;
        let group = automorphism_group(&x)?;
        let mut sigs: Vec<String> = signatures(&x, 8)?.iter().map(|s| s.to_string()).collect();
        sigs.dedup();
        let cond = check_t1_conditions(k, r_star(k)?, 1);
        let gp_note = if k % 3 == 0 {
            format!("bicirculant: {}", find_k_circulant(&x, 2)?.is_some())
        } else {
            let m = if k % 3 == 1 { k + 1 } else { k - 1 };
            format!("≅ GP({}, {m}): {}", 3 * k, are_isomorphic(&x, &gp(3 * k, m)?)?)
        };
        println!(
            "X({k}) = T1({k},{},1): VT {}, girth {:?}, |Aut| {}, 8-signatures {sigs:?}, holds {:?}, {gp_note}",
            r_star(k)?,
            group.is_vertex_transitive(),
            girth(&x),
            group.order().unwrap(),
            cond.holds.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        );
    }
    Ok(())
}
