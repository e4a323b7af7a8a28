//! Constructive spot checks of the lemmas used by the classification.

use std::collections::BTreeMap;

use tricirc::verify::lemma_spot_checks;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ks: Vec<u64> = (9..=13).collect();
    let checks = lemma_spot_checks(&ks)?;
    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &checks {
        let e = tally.entry(c.lemma).or_default();
        e.0 += usize::from(c.passed);
        e.1 += 1;
        if !c.passed {
            println!("FAILED {} {}: {}", c.lemma, c.instance, c.detail);
        }
    }
    for (lemma, (ok, n)) in tally {
        println!("{lemma:<12} {ok}/{n}");
    }
    Ok(())
}
