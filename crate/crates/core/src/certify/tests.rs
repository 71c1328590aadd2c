use super::*;
use crate::gpoly::{parse, Multidegree};
use crate::group::GroupSpec;

fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn monos(text: &str, sp: &GroupSpec) -> Vec<GMonomial> {
    text.split(',').map(|t| parse(t, sp).unwrap().terms().keys().next().unwrap().clone()).collect()
}

#[test]
fn degree_one_forms_are_independent() {
    let sp = spec("Zn:3");
    let r = independence_check(&monos("e0(x1), e1(x1), e-1(x1)", &sp), &sp);
    assert_eq!(r.rank, 3);
    assert!(r.independent());
}

#[test]
fn proportional_pair_has_witness() {
    let sp = spec("Zn:3");
    let m = monos("e0(x1)", &sp);
    let r = independence_check(&[m[0].clone(), m[0].clone()], &sp);
    assert_eq!(r.rank, 1);
    let k = r.dependent_subset.unwrap();
    assert_eq!(k.len(), 2);
}

#[test]
fn oracle_small_values() {
    assert_eq!(quotient_dimension_oracle(&spec("Zn:3"), &Multidegree::from_vars([1])).unwrap(), 3);
    assert_eq!(quotient_dimension_oracle(&spec("Zn:3"), &Multidegree::from_vars([1, 2])).unwrap(), 9);
    assert_eq!(quotient_dimension_oracle(&spec("A4"), &Multidegree::from_vars([1])).unwrap(), 9);
    assert_eq!(quotient_dimension_oracle(&spec("Dn:3"), &Multidegree::from_vars([1])).unwrap(), 5);
}

#[test]
fn oracle_budget() {
    let e = quotient_dimension_oracle_with(&spec("A4"), &Multidegree::from_vars([1, 2, 3]), 100);
    assert!(matches!(e, Err(crate::Error::Budget(_))));
}

#[test]
fn operator_basis_dimensions() {
    for (s, d) in [("Zn:1", 1), ("Zn:2", 2), ("Zn:5", 3), ("Dn:4", 5), ("A4", 9), ("S4", 9)] {
        assert_eq!(operator_basis(crate::GroupAction::get(&spec(s))).len(), d, "{s}");
    }
}

#[test]
fn suites_pass() {
    for s in ["Zn:2", "Zn:3", "Zn:4", "Dn:3", "Dn:5", "A4"] {
        let sp = spec(s);
        for r in verify_identity_suite(&sp, None).unwrap() {
            assert!(r.ok, "{s} {} {:?}", r.tag, r.nonzero_entry);
        }
    }
}

#[test]
fn suite_sizes_and_names() {
    assert_eq!(Suite::Epsilon.instances(&spec("A4")).unwrap().len(), 136);
    assert_eq!(Suite::Cyclic.instances(&spec("Zn:3")).unwrap().len(), 8);
    assert_eq!("lemma9".parse::<Suite>().unwrap(), Suite::Dihedral);
    assert_eq!("eps".parse::<Suite>().unwrap(), Suite::Epsilon);
    assert!("nope".parse::<Suite>().is_err());
    assert!(Suite::Cyclic.instances(&spec("Zn:2")).is_err());
    assert_eq!(Suite::defaults(&spec("Zn:2")), vec![Suite::Z2, Suite::Graded]);
}

#[test]
fn flipped_sign_fails() {
    let sp = spec("Zn:5");
    let f = parse("e1(x1)*e-1(x2)*e1(x3) - e1(x3)*e-1(x2)*e1(x1)", &sp).unwrap();
    let action = crate::GroupAction::get(&sp);
    let g = sign_flip(&f, action).unwrap().unwrap();
    let r = verify_instances(&[("flip".into(), g)], action).unwrap();
    assert!(!r[0].ok);
    assert!(r[0].nonzero_entry.as_deref().unwrap().starts_with("(2,1)"));
}

#[test]
fn small_certificates() {
    for (s, d) in [("Zn:2", 3), ("Zn:3", 3), ("Dn:3", 2), ("A4", 2)] {
        let c = certify_basis(&spec(s), d).unwrap();
        assert!(c.passed(), "{s}: {:?}", c.failures().collect::<Vec<_>>());
    }
}

#[test]
fn removed_family_fails() {
    let sp = spec("Zn:3");
    let rules = crate::rewrite::rules_for(&sp).without("cyc.4");
    let opts = CertifyOptions { rules: Some(rules), ..Default::default() };
    let c = certify_basis_with(&sp, 3, &opts).unwrap();
    assert!(!c.passed());
    let f = c.failures().next().unwrap();
    assert_eq!(f.degree.len(), 3);
    assert!(!f.spanning_ok);
}

#[test]
fn certificate_json_fields() {
    let c = certify_basis(&spec("Zn:3"), 2).unwrap();
    let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["group", "conductor", "degree_bound", "identities", "multidegrees", "verdict", "runtime_ms"] {
        assert!(keys.contains(&k));
    }
    let rec = v["multidegrees"][0].as_object().unwrap();
    assert_eq!(rec.len(), 5);
}
