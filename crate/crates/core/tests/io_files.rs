use std::path::PathBuf;

use proptest::prelude::*;
use slh::io::{
    parse_edge_list, parse_tsplib_hcp, parse_tsplib_hcp_file, read_tour, read_trace,
    write_tsplib_hcp, ParseError,
};
use slh::Graph;

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

fn c4() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

#[test]
fn alb_style_fixture() {
    let f = parse_tsplib_hcp_file(&fixture("alb1000_style.hcp")).unwrap();
    assert_eq!(f.name, "alb1000_style");
    assert_eq!(f.dimension, 1000);
    assert_eq!(f.edges.len(), 1998);
    let g = f.to_graph().unwrap();
    assert_eq!(g.edge_count(), 1998);
    let again = parse_tsplib_hcp(&write_tsplib_hcp(&g, &f.name, f.comment.as_deref())).unwrap();
    assert_eq!(again, g);
}

#[test]
fn loose_layout_is_accepted() {
    let text = "NAME:c4\r\nTYPE HCP\r\n  DIMENSION   :  4\r\nEDGE_DATA_FORMAT: EDGE_LIST\r\n\
                EDGE_DATA_SECTION\r\n1 2 2 3\r\n 3\t4\r\n4 1 -1\r\n";
    assert_eq!(parse_tsplib_hcp(text).unwrap(), c4());
    assert_eq!(parse_edge_list("4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap(), c4());
}

#[test]
fn errors_name_the_line() {
    let bad_label = "NAME : x\nTYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : EDGE_LIST\n\
                     EDGE_DATA_SECTION\n1 2\n2 7\n-1\n";
    match parse_tsplib_hcp(bad_label) {
        Err(ParseError::At { line, .. }) => assert_eq!(line, 7),
        other => panic!("expected a located error, got {other:?}"),
    }
    let tsp = "NAME : x\nTYPE : TSP\nDIMENSION : 3\n";
    assert!(matches!(
        parse_tsplib_hcp(tsp),
        Err(ParseError::At { line: 2, .. })
    ));
    let weights = "NAME : x\nTYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : ADJ_LIST\n";
    assert!(matches!(
        parse_tsplib_hcp(weights),
        Err(ParseError::At { line: 4, .. })
    ));
    let open = "NAME : x\nTYPE : HCP\nDIMENSION : 3\nEDGE_DATA_FORMAT : EDGE_LIST\nEDGE_DATA_SECTION\n1 2\n";
    assert!(matches!(parse_tsplib_hcp(open), Err(ParseError::Eof(_))));
    assert!(parse_edge_list("3 2\n1 2\n").is_err());
    assert!(parse_edge_list("3 1\n1 1\n").is_err());
}

#[test]
fn tours_must_be_permutations() {
    let dup = "NAME : t\nTYPE : TOUR\nDIMENSION : 4\nTOUR_SECTION\n1\n2\n2\n4\n-1\nEOF\n";
    assert!(read_tour(dup).is_err());
    let short = "NAME : t\nTYPE : TOUR\nDIMENSION : 4\nTOUR_SECTION\n1\n2\n3\n-1\nEOF\n";
    assert!(read_tour(short).is_err());
    let ok = "NAME : t\nTYPE : TOUR\nDIMENSION : 4\nTOUR_SECTION\n2 1\n4 3\n-1\nEOF\n";
    assert_eq!(read_tour(ok).unwrap().as_slice(), &[1, 0, 3, 2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn readers_never_panic(text in "[ -~\n]{0,300}") {
        let _ = parse_tsplib_hcp(&text);
        let _ = parse_edge_list(&text);
        let _ = read_tour(&text);
        let _ = read_trace(&text);
    }

    #[test]
    fn corrupted_files_fail_cleanly(pos in any::<prop::sample::Index>(), junk in "[ -~\n]{1,6}") {
        let mut text = write_tsplib_hcp(&c4(), "c4", Some("four"));
        let at = pos.index(text.len());
        text.replace_range(at..at, &junk);
        if let Ok(g) = parse_tsplib_hcp(&text) {
            prop_assert!(g.vertex_count() >= 1);
        }
    }
}
