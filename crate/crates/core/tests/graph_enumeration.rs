mod support;

use support::{all_graphs, canonical_code, connected_graphs, orderings_up_to_symmetry};

#[test]
fn graph_counts_match_known_sequences() {
    let all: Vec<usize> = (1..=7).map(|n| all_graphs(n).len()).collect();
    assert_eq!(all, [1, 2, 4, 11, 34, 156, 1044]);
    let conn: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(conn, [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn eight_vertex_counts() {
    let all = all_graphs(8);
    assert_eq!(all.len(), 12346);
    assert_eq!(
        all.iter().filter(|a| support::is_connected(a)).count(),
        11117
    );
}

#[test]
fn canonical_code_ignores_labels() {
    // the 5-cycle drawn two ways
    let a = [0b10010, 0b00101, 0b01010, 0b10100, 0b01001];
    let b = [0b01100, 0b11000, 0b10001, 0b00011, 0b00110];
    assert_eq!(canonical_code(&a), canonical_code(&b));
    let path = [0b00010, 0b00101, 0b01010, 0b10100, 0b01000];
    assert_ne!(canonical_code(&a), canonical_code(&path));
}

#[test]
fn ordering_classes() {
    for n in 3..=7 {
        let fact: usize = (1..n).product();
        assert_eq!(orderings_up_to_symmetry(n).len(), fact / 2);
    }
}
