//! The four connected cubic pregraphs on three vertices, with their edge
//! kinds and voltage symbols.

use tricirc::pregraph::{delta, enumerate_cubic_pregraphs_3v};
use tricirc::voltage::{edge_kind_profile, SymbolicVoltage};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let found = enumerate_cubic_pregraphs_3v();
    println!("{} isomorphism classes", found.len());
    for (i, p) in found.iter().enumerate() {
        let named = delta(i + 1)?;
        println!("Δ{}: isomorphic to catalogue entry: {}", i + 1, p.is_isomorphic(&named));
        for d in 0..named.num_darts() {
            if d <= named.inv(d) {
                let sym = named.symbol(d).map_or("-".to_string(), |s| SymbolicVoltage::of_symbol(s.symbol, s.negated).to_string());
                println!("  {:<8} {sym}", named.dart_name(d));
            }
        }
        println!("  kinds: {:?}", edge_kind_profile(&named));
    }
    Ok(())
}
