//! Exhaustive sweep over all four types for a range of k, reporting the
//! vertex-transitive classes found and any anomalies.
//!
//! Usage: classification_sweep [KMIN] [KMAX]   (default 9 12)

use std::time::Instant;

use tricirc::verify::classification_sweep;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>());
    let kmin = args.next().transpose()?.unwrap_or(9);
    let kmax = args.next().transpose()?.unwrap_or(kmin.max(12));
    for k in kmin..=kmax {
        let t = Instant::now();
        let report = &classification_sweep(k, k)?[0];
        let per_type: Vec<String> = report
            .types
            .iter()
            .map(|s| format!("T{}: {}/{}/{}/{}", s.ty, s.representatives, s.simple, s.connected, s.vertex_transitive))
            .collect();
        println!("k = {k:>2}  {:?}  [{}]  ({:.2?})", report.class_names(), per_type.join("  "), t.elapsed());
        for a in &report.anomalies {
            println!("  anomaly: {a}");
        }
        for n in &report.notes {
            println!("  note: {n}");
        }
    }
    Ok(())
}
