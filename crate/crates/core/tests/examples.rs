use weakid_core::certify::{quotient_dimension_oracle, verify_identity_suite, Suite};
use weakid_core::group::{adjoint_of_pgl2, check_irreducible, conjugated_action, pi_operators, Op3};
use weakid_core::rewrite::words_of_multidegree;
use weakid_core::*;

fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn ev(text: &str, g: &str) -> Mat2 {
    let sp = spec(g);
    evaluate(&parse(text, &sp).unwrap(), &sp).unwrap()
}

fn show(text: &str, g: &str) -> String {
    ev(text, g).to_string()
}

fn nf(text: &str, g: &str) -> String {
    let sp = spec(g);
    normalize(&parse(text, &sp).unwrap(), &sp).unwrap().to_string()
}

fn c(n: u32, k: i64) -> CycNum {
    CycNum::from_int(n, k)
}

#[test]
fn field_examples() {
    assert_eq!(cyc_embed(2, 1, 2).unwrap(), c(2, -1));
    assert_eq!(cyc_embed(4, 2, 4).unwrap(), c(4, -1));
    assert_eq!(cyc_embed(3, 1, 3).unwrap(), CycNum::zeta(3));
    let z = CycNum::zeta(3);
    assert!((&z * &(&z * &z)).is_one());
    assert_eq!(&z + &(&z * &z), c(3, -1));
    assert_eq!(c(1, 2).inv().unwrap(), CycNum::from_rat(1, Rat::new(1, 2)));
    let (a1, b2) = (MPoly::var(1, Var::a(1)), MPoly::var(1, Var::b(2)));
    let s = &a1 + &b2;
    assert_eq!((&s * &s).to_string(), "2*a1*b2 + a1^2 + b2^2");
    assert!((&MPoly::zero(1) * &MPoly::var(1, Var::c(5))).is_zero());
}

#[test]
fn matrix_examples() {
    assert_eq!(generic_matrix(7, 1).to_string(), "[[a7, b7], [c7, -a7]]");
    assert!(generic_matrix(3, 1).trace().is_zero());
    let x = generic_matrix(1, 1);
    assert_eq!(&x * &Mat2::identity(1), x);
    assert_eq!(&Mat2::unit(1, 1, 2) * &Mat2::unit(1, 2, 1), Mat2::unit(1, 1, 1));
    assert_eq!(commutator(&Mat2::unit(1, 1, 2), &Mat2::unit(1, 2, 1)), &Mat2::unit(1, 1, 1) - &Mat2::unit(1, 2, 2));
    assert!(is_zero_mat(&commutator(&x, &x)));
    assert!(commutator(&x, &generic_matrix(2, 1)).trace().is_zero());
    assert!(!is_zero_mat(&x));
}

#[test]
fn action_examples() {
    assert_eq!(show("g(x1)", "Zn:2"), "[[a1, -b1], [-c1, -a1]]");
    assert_eq!(show("g(x1)", "Zn:4"), "[[a1, -z*b1], [z*c1, -a1]]");
    assert_eq!(show("h(x1)", "Dn:3"), "[[-a1, c1], [b1, a1]]");
    assert_eq!(show("e0(x1)", "Zn:5"), "[[a1, 0], [0, -a1]]");
    assert_eq!(show("e1(x1)", "Zn:5"), "[[0, 0], [c1, 0]]");
    assert_eq!(show("e2(x1)", "Zn:5"), "[[0, 0], [0, 0]]");
    assert_eq!(show("he1(x1)", "Dn:5"), "[[0, c1], [0, 0]]");
    assert!(ev("e0(x1) + he0(x1)", "Dn:4").is_zero());
    assert_eq!(show("eps12(x1)", "A4"), "[[b1, 0], [0, -b1]]");
    assert_eq!(show("eps23(x1)", "A4"), "[[0, c1], [0, 0]]");
    assert_eq!(show("eps31(x1)", "A4"), "[[0, 0], [a1, 0]]");
    assert_eq!(show("pi0(x1)", "Zn:2"), "[[2*a1, 0], [0, -2*a1]]");
    assert_eq!(show("pi1(x1)", "Zn:2"), "[[0, 2*b1], [2*c1, 0]]");
    let (p0, p1) = pi_operators(&spec("Zn:2")).unwrap();
    assert_eq!(&p0 + &p1, Op3::identity(2).scale(&c(2, 2)));

    let sp = spec("Zn:2");
    let m = |e: [[i64; 2]; 2]| e.map(|r| r.map(|x| c(1, x)));
    let ops = adjoint_of_pgl2(&sp, &[m([[1, 0], [0, -1]]), m([[0, 1], [1, 0]]), m([[1, 0], [0, 1]])]).unwrap();
    assert_eq!(ops[0], Op3::diag([c(1, 1), c(1, -1), c(1, -1)]));
    assert_eq!(ops[1], Op3::from_ints(1, [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]));
    assert_eq!(ops[2], Op3::identity(1));

    let g3 = GroupAction::get(&spec("Zn:3")).g().clone();
    let r = check_irreducible(std::slice::from_ref(&g3));
    assert_eq!((r.algebra_dim, r.commutant_dim), (3, 3));
    let swap = [[c(3, 0), c(3, 1)], [c(3, 1), c(3, 0)]];
    let twice = conjugated_action(&conjugated_action(std::slice::from_ref(&g3), &swap).unwrap(), &swap).unwrap();
    assert_eq!(twice, vec![g3]);
}

#[test]
fn polynomial_examples() {
    let sp = spec("Zn:3");
    let f = parse("e0(x1)*e0(x2) - e0(x2)*e0(x1)", &sp).unwrap();
    let l = |i: u32| GPolynomial::letter(3, Op::E(0), i);
    assert_eq!(f, GPolynomial::commutator(&l(1), &l(2)));
    assert_eq!(parse("x1", &sp).unwrap(), GPolynomial::letter(3, Op::ID, 1));
    assert_eq!(parse("g(x1)", &sp).unwrap(), GPolynomial::letter(3, Op::Group(GroupElem::g(1)), 1));
    assert_eq!(show("e1(x1)*e-1(x2)", "Zn:3"), "[[0, 0], [0, b2*c1]]");
    assert_eq!(show("e1(x1)*e-1(x2)*e1(x3)*e-1(x4)", "Zn:4"), "[[0, 0], [0, b2*b4*c1*c3]]");
    assert!(evaluate(&GPolynomial::zero(3), &sp).unwrap().is_zero());
    assert!(is_weak_g_identity(&parse("e1(x1)*e-1(x2)*e1(x3) - e1(x3)*e-1(x2)*e1(x1)", &sp).unwrap(), &sp).unwrap());
    assert!(!is_weak_g_identity(&parse("x1", &sp).unwrap(), &sp).unwrap());
    assert_eq!(show("e0(x1)*e1(x2)", "Zn:3"), "[[0, 0], [-a1*c2, 0]]");
    assert_eq!(parse("x1 + x1*x2", &sp).unwrap().multidegree_components().len(), 2);
    assert_eq!(f.multidegree_components().len(), 1);
    assert!(GPolynomial::zero(3).multidegree_components().is_empty());
}

#[test]
fn rewriting_examples() {
    assert_eq!(nf("x1", "Zn:3"), "e0(x1) + e1(x1) + e-1(x1)");
    assert_eq!(nf("e1(x1)*e1(x2)", "Zn:3"), "0");
    assert_eq!(nf("e1(x2)*e-1(x2)*e1(x1)", "Zn:3"), "e1(x1)*e-1(x2)*e1(x2)");
    assert_eq!(nf("eps21(x1)*eps32(x2)*eps23(x3)", "A4"), "eps11(x1)*eps12(x2)*eps23(x3)");
    assert_eq!(nf("e1(x2)*e0(x1)", "Zn:5"), "-e0(x1)*e1(x2)");
    assert_eq!(nf("eps21(x1)*eps22(x2)", "S4"), "0");
    let sp = spec("Zn:3");
    let m = |t: &str| parse(t, &sp).unwrap().terms().keys().next().unwrap().clone();
    assert!(is_normal_form(&m("e0(x1)*e0(x1)*e1(x1)*e-1(x2)"), &sp).unwrap());
    let d = spec("Dn:4");
    let md = |t: &str| parse(t, &d).unwrap().terms().keys().next().unwrap().clone();
    assert!(!is_normal_form(&md("he1(x1)*e1(x1)*he-1(x2)"), &d).unwrap());
    let a = spec("A4");
    let ma = |t: &str| parse(t, &a).unwrap().terms().keys().next().unwrap().clone();
    assert!(is_normal_form(&ma("eps23(x2)*eps33(x7)"), &a).unwrap());
    assert_eq!(enumerate_b(&sp, &Multidegree::from_vars([1])).len(), 3);
    assert_eq!(enumerate_b(&sp, &Multidegree::from_vars([1, 2])).len(), 9);
    assert_eq!(enumerate_b(&a, &Multidegree::from_vars([1])).len(), 9);
    let ops = GroupAction::get(&sp).core_alphabet();
    let words = words_of_multidegree(&Multidegree::from_vars([1, 2]), &ops);
    let filtered = words.iter().filter(|w| is_normal_form(w, &sp).unwrap()).count();
    assert_eq!(filtered, 9);
}

#[test]
fn certify_examples() {
    let d = spec("Dn:4");
    let r = verify_identity_suite(&d, Some(Suite::Dihedral)).unwrap();
    assert!(r.iter().find(|x| x.tag == "dih.1").unwrap().ok);
    let a = spec("A4");
    let r = verify_identity_suite(&a, Some(Suite::Epsilon)).unwrap();
    assert!(r.iter().find(|x| x.tag == "eps.6[a=1,b=1]").unwrap().ok);
    let sp = spec("Zn:3");
    assert_eq!(quotient_dimension_oracle(&sp, &Multidegree::from_vars([1, 2])).unwrap(), 9);
    let types = ["e1(x1)*e-1(x2)", "e1(x1)*e-1(x2)*e1(x3)", "e-1(x1)*e1(x2)", "e-1(x1)*e1(x2)*e-1(x3)"];
    let monos: Vec<GMonomial> =
        types.iter().map(|t| parse(t, &spec("Zn:4")).unwrap().terms().keys().next().unwrap().clone()).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            let pair = [monos[i].clone(), monos[j].clone()];
            assert_eq!(independence_check(&pair, &spec("Zn:4")).rank, 2);
        }
    }
    let cert = certify_basis(&spec("Dn:4"), 3).unwrap();
    assert!(cert.passed());
    assert!(cert.multidegrees.iter().all(|r| r.b_count == r.rank && r.rank == r.oracle_dim));
}
