mod common;

use magma_forge_core::construct::canonical_lambda;
use magma_forge_core::io::{
    parse_group, parse_htour, parse_magma, parse_pointing, parse_sign, write_group, write_htour, write_magma,
    write_pointing, write_sign,
};
use magma_forge_core::{Error, FiniteGroup, PointedHypertournament};

#[test]
fn magma_text_is_rows_of_entries() {
    let text = write_magma(&common::rps());
    assert_eq!(text, "magma 3 2\n0 1 0\n1 1 2\n0 2 2\n");
    assert_eq!(parse_magma(&text).unwrap(), common::rps());
    let commented = "# three-item game\n\nmagma 3 2\n0 1 0\n# middle row\n1 1 2\n0 2 2\n";
    assert_eq!(parse_magma(commented).unwrap(), common::rps());
    for a in [common::ternary(), common::french(), common::hexagonal_pyramid()] {
        assert_eq!(parse_magma(&write_magma(&a)).unwrap(), a);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    match parse_magma("magma 3 2\n0 1 0\n1 x 2\n0 2 2\n") {
        Err(Error::Parse { line: 3, .. }) => {}
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_magma("magma 2 2\n0 1\n0 3\n"), Err(Error::EntryOutOfRange { .. })));
    assert!(parse_pointing("pointing 3 2\n0 -> 0\n", None, None).is_err());
}

#[test]
fn pointing_round_trip() {
    for p in [common::ternary_pointing(), common::rpssl_pointing(), common::rps_pointing_as_printed()] {
        let text = write_pointing(&p);
        assert_eq!(parse_pointing(&text, None, None).unwrap(), p);
    }
}

#[test]
fn group_and_sign_round_trip() {
    for g in [FiniteGroup::cyclic(5).unwrap(), FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap()] {
        let text = write_group(&g);
        assert!(text.starts_with(&format!("group {} {}\n", g.order(), g.identity())));
        assert_eq!(parse_group(&text).unwrap(), g);
        let lambda = canonical_lambda(&g, 2).unwrap();
        assert_eq!(parse_sign(&write_sign(&lambda), &g).unwrap(), lambda);
    }
    let z5 = FiniteGroup::cyclic(5).unwrap();
    let lambda = canonical_lambda(&z5, 3).unwrap();
    assert_eq!(parse_sign(&write_sign(&lambda), &z5).unwrap(), lambda);
    assert!(parse_sign(&write_sign(&lambda), &FiniteGroup::cyclic(7).unwrap()).is_err());
}

#[test]
fn htour_round_trip() {
    for a in [common::rps(), common::ternary(), common::hexagonal_pyramid()] {
        let t = PointedHypertournament::from_magma(&a).unwrap();
        assert_eq!(parse_htour(&write_htour(&t)).unwrap(), t);
    }
}
