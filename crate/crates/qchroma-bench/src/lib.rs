//! Shared fixtures for the criterion benchmarks.

use qchroma_core::Graph;

/// A small zoo of named graphs spanning sparse to complete.
pub fn zoo() -> Vec<(&'static str, Graph)> {
    vec![
        ("path8", Graph::path(8).unwrap()),
        ("star8", Graph::star(8).unwrap()),
        ("cycle7", Graph::cycle(7).unwrap()),
        ("bowtie", Graph::bowtie()),
        ("k6", Graph::complete(6).unwrap()),
        ("broom_4_3", Graph::broom(4, 3).unwrap()),
    ]
}
