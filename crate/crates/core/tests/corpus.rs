mod common;

use common::{brute_force_count, statements, GenConfig, REFERENCE_EXAMPLES};
use igscript::{degree_of_variability, expand, parse, serialize, Level, SubStatementId};

fn base() -> SubStatementId {
    SubStatementId::new("1").unwrap()
}

#[test]
fn reference_examples_parse_and_round_trip() {
    for input in REFERENCE_EXAMPLES {
        let tree = parse(input).unwrap_or_else(|e| panic!("{input}: {e}"));
        let text = serialize(&tree);
        assert_eq!(parse(&text).unwrap(), tree, "{input}");
        assert_eq!(serialize(&parse(&text).unwrap()), text);
    }
}

#[test]
fn reference_counts_match_the_oracle() {
    let cases = [
        ("Cac(If officer (observes [XOR] is made aware of) violation), A(officer) D(must) I(fine [AND] report) Bdir(violator) to Bind(authority).", 4),
        ("A(officer) D(must) I(issue warning [XOR] fine) Bdir(violating drivers)", 2),
        ("A(enforcer) D(may) {I(investigate) Bdir(compliance) [XOR] I(delegate) Bdir(investigation) to Bind(colleague)}", 2),
    ];
    for (input, expected) in cases {
        assert_eq!(brute_force_count(input), expected, "oracle: {input}");
        let tree = parse(input).unwrap();
        assert_eq!(degree_of_variability(&tree), expected);
        assert_eq!(expand(&tree, &base(), Level::Core).atoms.len() as u64, expected);
    }
}

#[test]
fn oracle_agrees_on_every_example() {
    for input in REFERENCE_EXAMPLES {
        let tree = parse(input).unwrap();
        assert_eq!(degree_of_variability(&tree), brute_force_count(input), "{input}");
    }
}

#[test]
fn flat_statements_match_the_oracle() {
    for input in statements(11, 300, GenConfig::flat()) {
        let tree = parse(&input).unwrap_or_else(|e| panic!("{input}: {e}"));
        let expected = brute_force_count(&input);
        assert_eq!(degree_of_variability(&tree), expected, "{input}");
        for level in [Level::Core, Level::Extended, Level::Logico] {
            let n = expand(&tree, &base(), level).atoms.len() as u64;
            assert_eq!(n, expected, "{input} at {level:?}");
        }
    }
}

#[test]
fn logico_statements_match_the_oracle_at_core() {
    for input in statements(12, 300, GenConfig::logico()) {
        let tree = parse(&input).unwrap_or_else(|e| panic!("{input}: {e}"));
        let expected = brute_force_count(&input);
        assert_eq!(degree_of_variability(&tree), expected, "{input}");
        let top = expand(&tree, &base(), Level::Core).atoms.len() as u64;
        assert_eq!(top, expected, "{input}");
    }
}
