//! Every family's asymptotic forms against the exact recurrence at one degree.

use turnpoint::families::{asym_airy, asym_outer, exact_value, FamilyKind, FamilySpec};
use turnpoint::langer::Edge;

fn main() {
    let n = 400;
    for kind in FamilyKind::defaults() {
        let spec = FamilySpec::new(kind).unwrap();
        let top = spec.edge(Edge::Plus);
        let y_out = 1.4 * top;
        let outer = asym_outer(&spec, n, y_out).unwrap();
        let exact = exact_value(&spec, n, y_out).unwrap();
        let y_edge = top * 1.01;
        let edge = asym_airy(&spec, n, y_edge, Edge::Plus).unwrap();
        let exact_edge = exact_value(&spec, n, y_edge).unwrap();
        println!(
            "{:<18} outer rel {:.2e}   edge rel {:.2e}   p_N(lambda y) = {}",
            spec.name(),
            outer.rel_diff(exact),
            edge.rel_diff(exact_edge),
            exact
        );
    }
}
