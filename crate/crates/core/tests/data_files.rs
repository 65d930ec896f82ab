use postlie::catalog;
use postlie::error::Error;
use postlie::laj::{LajDoc, LajMatrixDoc, LajProductDoc};

#[test]
fn every_data_file_round_trips() {
    for (file, text) in catalog::data_files() {
        let emitted = if file.ends_with(".laj.json") {
            LajDoc::parse(text).unwrap().emit()
        } else if file.ends_with(".lajp.json") {
            LajProductDoc::parse(text).unwrap().emit()
        } else {
            LajMatrixDoc::parse(text).unwrap().emit()
        };
        assert_eq!(&emitted, text, "{file}");
    }
}

#[test]
fn every_data_algebra_satisfies_jacobi() {
    for (file, text) in catalog::data_files() {
        if file.ends_with(".laj.json") {
            let g = LajDoc::parse(text).unwrap().to_algebra().unwrap();
            assert!(g.check_jacobi().passed(), "{file}");
        }
    }
}

#[test]
fn decimal_values_are_malformed() {
    let text = r#"{"name": "x", "dim": 2, "basis": ["e1", "e2"], "brackets": [{"left": "e1", "right": "e2", "value": {"e2": "0.5"}}]}"#;
    let err = LajDoc::parse(text).unwrap().to_algebra().unwrap_err();
    assert!(matches!(err, Error::MalformedRational(_)), "{err}");
}

#[test]
fn emitted_fixture_parts_parse_back() {
    for name in catalog::fixture_names() {
        let f = catalog::get(name).unwrap();
        for (suffix, text) in f.emit() {
            if suffix.ends_with(".laj.json") {
                LajDoc::parse(&text).unwrap().to_algebra().unwrap();
            } else if suffix.ends_with(".lajp.json") {
                LajProductDoc::parse(&text).unwrap().to_product().unwrap();
            } else if suffix.ends_with(".lajm.json") {
                LajMatrixDoc::parse(&text).unwrap().to_matrix().unwrap();
            }
        }
    }
}
