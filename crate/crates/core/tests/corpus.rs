mod common;

use std::collections::HashSet;

use common::{corpus, oracle_det};
use foxkh::coloring::knot_det;
use foxkh::knotio::{gauss_to_dt, is_alternating, is_reduced, parse_corpus, KnotIoError};
use num_bigint::BigInt;

#[test]
fn bundled_table_shape() {
    let knots = corpus();
    assert_eq!(knots.len(), 32);
    let names: HashSet<_> = knots.iter().map(|k| k.name.as_str()).collect();
    assert_eq!(names.len(), knots.len());
    for k in &knots {
        assert!(k.diagram.n() <= 8, "{}", k.name);
        assert!(is_alternating(&k.diagram), "{}", k.name);
        assert!(is_reduced(&k.diagram), "{}", k.name);
        assert!(gauss_to_dt(k.diagram.code()).is_ok(), "{}", k.name);
    }
}

#[test]
fn expected_determinants_match_cofactor_oracle() {
    for k in corpus() {
        let want = BigInt::from(k.expected_det.expect("populated"));
        assert_eq!(oracle_det(k.diagram.code()), want, "{} oracle", k.name);
        assert_eq!(knot_det(&k.diagram).unwrap(), want, "{} library", k.name);
    }
}

#[test]
fn corpus_parse_errors_carry_line_numbers() {
    let text = "{\"name\":\"a\",\"dt\":[4,6,2]}\n\n{\"name\":\"b\",\"dt\":[4,5]}\n";
    match parse_corpus(text) {
        Err(KnotIoError::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("unexpected {other:?}"),
    }
    assert!(parse_corpus("{\"name\":\"a\",\"dt\":[2],\"extra\":1}").is_err());
    assert!(parse_corpus("").unwrap().is_empty());
}
