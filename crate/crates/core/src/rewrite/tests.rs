use super::*;
use crate::gpoly::{parse, Multidegree};
use crate::group::Op;

fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn nf(text: &str, g: &str) -> String {
    let s = spec(g);
    normalize(&parse(text, &s).unwrap(), &s).unwrap().to_string()
}

fn word(text: &str, g: &str) -> GMonomial {
    let p = parse(text, &spec(g)).unwrap();
    assert_eq!(p.len(), 1);
    p.terms().keys().next().unwrap().clone()
}

#[test]
fn normalize_examples() {
    assert_eq!(nf("x1", "Zn:3"), "e0(x1) + e1(x1) + e-1(x1)");
    assert_eq!(nf("e1(x1)*e1(x2)", "Zn:3"), "0");
    assert_eq!(nf("e1(x2)*e-1(x2)*e1(x1)", "Zn:3"), "e1(x1)*e-1(x2)*e1(x2)");
    assert_eq!(nf("eps21(x1)*eps32(x2)*eps23(x3)", "A4"), "eps11(x1)*eps12(x2)*eps23(x3)");
    assert_eq!(nf("e1(x2)*e0(x1)", "Zn:4"), "-e0(x1)*e1(x2)");
    assert_eq!(nf("he-1(x2)*he1(x1)", "Dn:4"), "e1(x1)*e-1(x2)");
    assert_eq!(nf("1", "Zn:3"), "1");
    assert_eq!(nf("e2(x1)", "Zn:5"), "0");
    assert_eq!(nf("x1", "Zn:1"), "x1");
    assert_eq!(nf("e0(x1)", "Zn:1"), "x1");
}

#[test]
fn rules_carry_family_tags() {
    let rs = rules_for(&spec("Dn:4"));
    assert_eq!(rs.families().len(), 10);
    assert_eq!(rules_for(&spec("Zn:5")).families(), vec!["cyc.1", "cyc.2", "cyc.3", "cyc.4", "cyc.5"]);
    assert_eq!(rules_for(&spec("S4")).families().len(), 8);
    assert!(rs.listing().contains("[dih.9] he_-a(x) he_a(y) -> e_a(y) e_-a(x)"));
    assert_eq!(rs.without("dih.9").families().len(), 9);
}

#[test]
fn normal_form_examples() {
    let z3 = spec("Zn:3");
    assert!(is_normal_form(&word("e0(x1)*e0(x1)*e1(x1)*e-1(x2)", "Zn:3"), &z3).unwrap());
    assert!(!is_normal_form(&word("e1(x1)*e0(x1)", "Zn:3"), &z3).unwrap());
    assert!(!is_normal_form(&word("g(x1)", "Zn:3"), &z3).unwrap());
    let d4 = spec("Dn:4");
    assert!(!is_normal_form(&word("he1(x1)*e1(x3)*he-1(x2)", "Dn:4"), &d4).unwrap());
    assert!(is_normal_form(&word("e1(x1)*he1(x2)*e1(x3)", "Dn:4"), &d4).unwrap());
    let a4 = spec("A4");
    assert!(is_normal_form(&word("eps23(x2)*eps33(x7)", "A4"), &a4).unwrap());
    assert!(!is_normal_form(&word("eps23(x7)*eps33(x2)", "A4"), &a4).unwrap());
    assert!(is_normal_form(&word("eps11(x1)*eps11(x1)*eps12(x10)*eps13(x2)*eps23(x7)", "A4"), &a4).unwrap());
    let outside = GMonomial(vec![Letter::new(Op::Eps(1, 1), 1)]);
    assert!(matches!(is_normal_form(&outside, &z3), Err(Error::OutsideAlphabet { .. })));
    assert!(is_normal_form(&GMonomial::unit(), &z3).unwrap());
}

fn count(g: &str, vars: &[u32]) -> usize {
    enumerate_b(&spec(g), &Multidegree::from_vars(vars.iter().copied())).len()
}

#[test]
fn enumeration_counts() {
    assert_eq!(count("Zn:3", &[1]), 3);
    assert_eq!(count("Zn:3", &[1, 2]), 9);
    assert_eq!(count("Dn:4", &[1]), 5);
    assert_eq!(count("Dn:4", &[1, 2]), 17);
    assert_eq!(count("A4", &[1]), 9);
    assert_eq!(count("A4", &[1, 2]), 36);
    assert_eq!(count("A5", &[1, 1, 2]), 4 * 6 * 3);
    let b1 = enumerate_b(&spec("Zn:3"), &Multidegree::from_vars([1]));
    let shown: Vec<String> = b1.iter().map(|m| m.to_string()).collect();
    assert_eq!(shown, vec!["e0(x1)", "e1(x1)", "e-1(x1)"]);
}

#[test]
fn b_elements_are_fixed_points() {
    for g in ["Zn:2", "Zn:3", "Zn:4", "Dn:3", "Dn:4", "A4"] {
        let s = spec(g);
        let rs = rules_for(&s);
        for md in Multidegree::all_up_to(3, 3) {
            for m in enumerate_b(&s, &md) {
                let p = GPolynomial::monomial(m.clone(), CycNum::one(s.conductor));
                let out = normalize_with(&p, &rs, NormalizeOptions::default()).unwrap();
                assert_eq!(out, p, "{g}: {m}");
            }
        }
    }
}

#[test]
fn normalization_is_sound_and_idempotent() {
    let opts = NormalizeOptions { check_soundness: true, check_measure: true, ..Default::default() };
    for (g, text) in [
        ("Zn:3", "g(x2)*x1*g^2(x3)"),
        ("Zn:2", "g(x3)*x2*x1*g(x1)"),
        ("Dn:4", "hg(x2)*h(x1)*g^3(x3)"),
        ("Dn:3", "h(x1)*x2*hg(x1)"),
        ("A4", "h(x3)*g(x1)*x2"),
        ("A5", "g(x2)*h(x1)"),
    ] {
        let s = spec(g);
        let f = parse(text, &s).unwrap();
        let out = normalize_with(&f, &rules_for(&s), opts).unwrap();
        for m in out.terms().keys() {
            assert!(is_normal_form(m, &s).unwrap(), "{g}: {m}");
        }
        let again = normalize_with(&out, &rules_for(&s), opts).unwrap();
        assert_eq!(again, out);
        assert_eq!(crate::gpoly::evaluate(&out, &s).unwrap(), crate::gpoly::evaluate(&f, &s).unwrap());
    }
}

#[test]
fn step_budget_fires() {
    let s = spec("Zn:3");
    let f = parse("g(x1)*g(x2)*g(x3)", &s).unwrap();
    let opts = NormalizeOptions { step_budget: 3, ..Default::default() };
    assert!(matches!(normalize_with(&f, &rules_for(&s), opts), Err(Error::StepBudget { budget: 3 })));
}

#[test]
fn permutations() {
    assert_eq!(multiset_permutations(&[1, 1, 2]), vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    assert_eq!(multiset_permutations(&[]), vec![Vec::<u32>::new()]);
}
