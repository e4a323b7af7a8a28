//! graph6, DOT and edge-list output, and reading them back.

use tricirc::families::y_graph;
use tricirc::io::{decode_graph6, encode_graph6, parse_edge_list, read_graph, to_dot, to_edge_list};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = y_graph(9)?;
    let g6 = encode_graph6(&y);
    println!("graph6: {g6}");
    let back = decode_graph6(&g6)?;
    println!("round trip identical: {}", back == y.plain());
    let edges = to_edge_list(&y);
    println!("edge list header: {}", edges.lines().next().unwrap());
    println!("edge list parses back: {}", parse_edge_list(&edges)? == y.plain());
    println!("auto-detected: {}", read_graph(&g6)?.num_edges());
    let dot = to_dot(&y);
    println!("{}", dot.lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("malformed input: {}", decode_graph6("garbage~~").unwrap_err());
    Ok(())
}
