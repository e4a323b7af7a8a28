//! Every connected type-3 tricirculant is a prism or a Möbius ladder,
//! decided by the parity of r.

use tricirc::families::{moebius, prism, t3};
use tricirc::symmetry::are_isomorphic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 9..=14 {
        let (p, m) = (prism(3 * k)?, moebius(3 * k)?);
        let mut line = Vec::new();
        for r in 0..2 * k {
            let Ok(inst) = t3(k, r) else { continue };
            if !inst.connected {
                continue;
            }
            let name = if are_isomorphic(&inst.graph, &m)? {
                "moebius"
            } else if are_isomorphic(&inst.graph, &p)? {
                "prism"
            } else {
                "other"
            };
            line.push(format!("r={r}:{name}"));
        }
        println!("k = {k}: {}", line.join(" "));
    }
    Ok(())
}
