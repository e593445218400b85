use serde::de::DeserializeOwned;
use serde::Serialize;

use troot_core::bds::{bds_doc, maximal_doc};
use troot_core::levi::{troot_system, ParabolicDesignation};
use troot_core::series::series_doc;
use troot_core::slnx::{sln_doc, Composition};
use troot_core::verify::{check_doc, Scope};
use troot_core::{Rat, RootSystem};

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(doc: &T) {
    let text = serde_json::to_string(doc).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, doc);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

#[test]
fn documents_round_trip() {
    for t in ["A1", "C3", "G2", "F4", "E6"] {
        let rs = RootSystem::of_type(t.parse().unwrap()).unwrap();
        round_trip(&rs.to_doc());
        round_trip(&bds_doc(&rs, None).unwrap());
        round_trip(&maximal_doc(&rs).unwrap());
        for des in ParabolicDesignation::all(rs.rank()).into_iter().take(6) {
            let tr = troot_system(&rs, &des).unwrap();
            round_trip(&tr.to_doc());
            round_trip(&series_doc(&tr).unwrap());
        }
    }
    let systems: Vec<RootSystem> = ["A2", "B2"].iter().map(|t| RootSystem::of_type(t.parse().unwrap()).unwrap()).collect();
    round_trip(&check_doc(&systems, Scope::AllParabolics));
    round_trip(&sln_doc(&"2,1,3".parse::<Composition>().unwrap()).unwrap());
}

#[test]
fn rationals_are_strings() {
    assert_eq!(serde_json::to_string(&Rat::new(3, 2)).unwrap(), "\"3/2\"");
    assert_eq!(serde_json::to_string(&Rat::int(-4)).unwrap(), "\"-4\"");
    assert_eq!(serde_json::from_str::<Rat>("\"6/4\"").unwrap(), Rat::new(3, 2));
}

#[test]
fn law_names_match_json() {
    for law in troot_core::verify::Law::ALL {
        assert_eq!(serde_json::to_string(&law).unwrap(), format!("\"{}\"", law.name()));
    }
}
