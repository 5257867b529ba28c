//! Named graphs. The cages are stored as edge-list data files and checked
//! by tests against their degree, girth and order.

use crate::graph::{parse_edge_list, Graph};

const PETERSEN: &str = include_str!("../../data/petersen.edges");
const HEAWOOD: &str = include_str!("../../data/heawood.edges");
const MCGEE: &str = include_str!("../../data/mcgee.edges");
const TUTTE_COXETER: &str = include_str!("../../data/tutte_coxeter.edges");

fn load(text: &str) -> Graph {
    parse_edge_list(text).expect("bundled graph data is valid")
}

/// The (3,5)-cage: outer 5-cycle `0..5`, spokes `i — i+5`, inner pentagram.
pub fn petersen() -> Graph {
    load(PETERSEN)
}

/// The (3,6)-cage on 14 vertices.
pub fn heawood() -> Graph {
    load(HEAWOOD)
}

/// The (3,7)-cage on 24 vertices.
pub fn mcgee() -> Graph {
    load(MCGEE)
}

/// The (3,8)-cage on 30 vertices.
pub fn tutte_coxeter() -> Graph {
    load(TUTTE_COXETER)
}

/// `(name, graph, degree, girth)` for each bundled cage.
pub fn cages() -> Vec<(&'static str, Graph, usize, usize)> {
    vec![
        ("petersen", petersen(), 3, 5),
        ("heawood", heawood(), 3, 6),
        ("mcgee", mcgee(), 3, 7),
        ("tutte_coxeter", tutte_coxeter(), 3, 8),
    ]
}
