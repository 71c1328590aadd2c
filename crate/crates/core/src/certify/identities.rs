//! Identity suites instantiated at fresh variables.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gpoly::{parse, Evaluator, GPolynomial};
use crate::group::{GroupAction, GroupKind, GroupSpec};
use crate::pair::Mat2;

/// A named list of identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Relations among `e0, e1, e-1` for cyclic groups of order at least 3.
    Cyclic,
    /// The order-two triple written with `pi0 = 2 e0`, `pi1 = 2 e1`.
    Z2,
    /// The graded triple with `y = e0`-letters and `z = e1`/`e-1`-letters.
    Graded,
    /// Relations among `e_i, he_i` for dihedral groups.
    Dihedral,
    /// Relations among the matrix units `eps_ij`.
    Epsilon,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Cyclic, Suite::Z2, Suite::Graded, Suite::Dihedral, Suite::Epsilon];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Cyclic => "lemma6",
            Suite::Z2 => "z2",
            Suite::Graded => "prop6-graded",
            Suite::Dihedral => "lemma9",
            Suite::Epsilon => "lemma13",
        }
    }

    /// Neutral alias accepted alongside [`name`](Self::name).
    pub fn alias(self) -> &'static str {
        match self {
            Suite::Cyclic => "cyc",
            Suite::Z2 => "z2",
            Suite::Graded => "graded",
            Suite::Dihedral => "dih",
            Suite::Epsilon => "eps",
        }
    }

    pub fn applies_to(self, spec: &GroupSpec) -> bool {
        match (self, spec.kind) {
            (Suite::Cyclic, GroupKind::Cyclic(n)) => n >= 3,
            (Suite::Z2, GroupKind::Cyclic(n)) => n == 2,
            (Suite::Graded, GroupKind::Cyclic(n)) => n >= 2,
            (Suite::Dihedral, GroupKind::Dihedral(_)) => true,
            (Suite::Epsilon, k) => k.is_epsilon(),
            _ => false,
        }
    }

    /// The suites verified by default for a group.
    pub fn defaults(spec: &GroupSpec) -> Vec<Suite> {
        Suite::ALL.into_iter().filter(|s| s.applies_to(spec)).collect()
    }

    /// The instantiated identities as `(tag, polynomial)` pairs.
    pub fn instances(self, spec: &GroupSpec) -> Result<Vec<(String, GPolynomial)>> {
        if !self.applies_to(spec) {
            return Err(Error::UnsupportedGroup { op: self.name(), group: spec.to_string() });
        }
        let texts = match self {
            Suite::Cyclic => cyclic_texts(),
            Suite::Z2 => z2_texts(),
            Suite::Graded => graded_texts(spec),
            Suite::Dihedral => dihedral_texts(),
            Suite::Epsilon => epsilon_texts(),
        };
        texts.into_iter().map(|(tag, t)| Ok((tag, parse(&t, spec)?))).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s || x.alias() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Outcome of evaluating one identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub tag: String,
    pub ok: bool,
    /// First non-zero entry of the evaluation, e.g. `(2,1): c1*b2*c3`.
    #[serde(skip)]
    pub nonzero_entry: Option<String>,
}

/// Evaluate every instance of `suite`, or of all default suites of the
/// group when `suite` is `None`.
pub fn verify_identity_suite(spec: &GroupSpec, suite: Option<Suite>) -> Result<Vec<IdentityResult>> {
    let suites = match suite {
        Some(s) => vec![s],
        None => Suite::defaults(spec),
    };
    let mut instances = Vec::new();
    for s in suites {
        instances.extend(s.instances(spec)?);
    }
    verify_instances(&instances, GroupAction::get(spec))
}

/// Evaluate instances under an arbitrary realization of the group.
pub fn verify_instances(instances: &[(String, GPolynomial)], action: &GroupAction) -> Result<Vec<IdentityResult>> {
    let mut ev = Evaluator::new(action);
    instances
        .iter()
        .map(|(tag, f)| {
            let m = ev.poly(f)?;
            let nonzero_entry = first_nonzero(&m);
            Ok(IdentityResult { tag: tag.clone(), ok: nonzero_entry.is_none(), nonzero_entry })
        })
        .collect()
}

fn first_nonzero(m: &Mat2) -> Option<String> {
    (0..4).find(|&k| !m.m[k].is_zero()).map(|k| format!("({},{}): {}", k / 2 + 1, k % 2 + 1, m.m[k]))
}

/// The identity with the sign of one term flipped. The chosen term is the
/// first one whose own evaluation is non-zero, so the result is never an
/// identity; `None` when there are fewer than two terms or every term
/// vanishes on its own.
pub fn sign_flip(f: &GPolynomial, action: &GroupAction) -> Result<Option<GPolynomial>> {
    if f.len() < 2 {
        return Ok(None);
    }
    let mut ev = Evaluator::new(action);
    for (m, c) in f.terms() {
        if !ev.monomial(m)?.is_zero() {
            let mut g = f.clone();
            g.add_term(m.clone(), &(-&(c + c)));
            return Ok(Some(g));
        }
    }
    Ok(None)
}

const SIGNS: [i64; 2] = [1, -1];

fn cyclic_texts() -> Vec<(String, String)> {
    let mut v = vec![("cyc.1".to_string(), "x1 - e0(x1) - e1(x1) - e-1(x1)".to_string())];
    for a in SIGNS {
        v.push((format!("cyc.2[a={a}]"), format!("e{a}(x1)*e{a}(x2)")));
    }
    v.push(("cyc.3".into(), "[e0(x1), e0(x2)]".into()));
    for a in SIGNS {
        let b = -a;
        v.push((
            format!("cyc.4[a={a}]"),
            format!("e{a}(x1)*e{b}(x2)*e{a}(x3) - e{a}(x3)*e{b}(x2)*e{a}(x1)"),
        ));
    }
    for a in SIGNS {
        v.push((format!("cyc.5[a={a}]"), format!("e0(x1)*e{a}(x2) + e{a}(x2)*e0(x1)")));
    }
    v
}

fn z2_texts() -> Vec<(String, String)> {
    vec![
        ("z2.1".into(), "[pi0(x1), pi0(x2)]".into()),
        ("z2.2".into(), "pi1(x1)*pi1(x2)*pi1(x3) - pi1(x3)*pi1(x2)*pi1(x1)".into()),
        ("z2.3".into(), "pi0(x1)*pi1(x2) + pi1(x2)*pi0(x1)".into()),
    ]
}

fn graded_texts(spec: &GroupSpec) -> Vec<(String, String)> {
    let odd: Vec<(String, String)> = if spec.kind == GroupKind::Cyclic(2) {
        vec![("1".into(), "e1".into())]
    } else {
        vec![("1".into(), "e1".into()), ("-1".into(), "e-1".into())]
    };
    let z = |name: &str, x: u32| -> String {
        if name == "sum" {
            format!("(e1(x{x}) + e-1(x{x}))")
        } else {
            format!("{name}(x{x})")
        }
    };
    let mut choices = odd.clone();
    if odd.len() > 1 {
        choices.push(("sum".into(), "sum".into()));
    }
    let mut v = vec![("graded.1".to_string(), "[e0(x1), e0(x2)]".to_string())];
    for (t1, a) in &choices {
        for (t2, b) in &choices {
            for (t3, c) in &choices {
                v.push((
                    format!("graded.2[{t1},{t2},{t3}]"),
                    format!("{}*{}*{} - {}*{}*{}", z(a, 1), z(b, 2), z(c, 3), z(c, 3), z(b, 2), z(a, 1)),
                ));
            }
        }
    }
    for (t, a) in &choices {
        v.push((format!("graded.3[{t}]"), format!("e0(x1)*{} + {}*e0(x1)", z(a, 2), z(a, 2))));
    }
    v
}

fn dihedral_texts() -> Vec<(String, String)> {
    let mut v = vec![
        ("dih.1".to_string(), "e0(x1) + he0(x1)".to_string()),
        ("dih.3".into(), "x1 - e0(x1) - e1(x1) - e-1(x1)".into()),
        ("dih.4".into(), "[e0(x1), e0(x2)]".into()),
    ];
    for a in SIGNS {
        let b = -a;
        for f in [format!("e{a}"), format!("he{a}")] {
            v.push((format!("dih.2[{f}]"), format!("e0(x1)*{f}(x2) + {f}(x2)*e0(x1)")));
            v.push((format!("dih.5[{f}]"), format!("{f}(x1)*{f}(x2)")));
        }
        v.push((format!("dih.6[e{a},he{b}]"), format!("e{a}(x1)*he{b}(x2)")));
        v.push((format!("dih.6[he{a},e{b}]"), format!("he{a}(x1)*e{b}(x2)")));
        for f in [format!("e{a}"), format!("he{a}")] {
            for g in [format!("e{a}"), format!("he{a}")] {
                v.push((format!("dih.7[{f},{g}]"), format!("{f}(x1)*x2*{g}(x3) - {f}(x3)*x2*{g}(x1)")));
            }
        }
        v.push((
            format!("dih.8[a={a}]"),
            format!("e{a}(x1)*x2*he{b}(x3) - he{b}(x3)*x2*e{a}(x1)"),
        ));
        v.push((format!("dih.9[a={a}]"), format!("e{a}(x1)*e{b}(x2) - he{b}(x2)*he{a}(x1)")));
        v.push((format!("dih.10[a={a}]"), format!("e{a}(x1)*he{a}(x2) - e{a}(x2)*he{a}(x1)")));
    }
    v.sort_by_key(|(t, _)| tag_key(t));
    v
}

fn tag_key(t: &str) -> (u32, String) {
    let num = t.split(['.', '[']).nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    (num, t.to_string())
}

fn epsilon_texts() -> Vec<(String, String)> {
    let r = [1u8, 2, 3];
    let mut v = vec![("eps.1".to_string(), "eps11(x1) + eps22(x1) + eps33(x1) - x1".to_string())];
    for a in r {
        for b in r {
            v.push((format!("eps.2[a={a},b={b}]"), format!("[eps1{a}(x1), eps1{b}(x2)]")));
        }
    }
    for i in [2u8, 3] {
        for j in r {
            for a in r {
                v.push((
                    format!("eps.3[i={i},j={j},a={a}]"),
                    format!("eps1{a}(x1)*eps{i}{j}(x2) + eps{i}{j}(x2)*eps1{a}(x1)"),
                ));
            }
        }
    }
    for (i, j) in [(2u8, 3u8), (3, 2)] {
        for a in r {
            for b in r {
                for c in r {
                    v.push((
                        format!("eps.4[i={i},j={j},a={a},b={b},c={c}]"),
                        format!("eps{i}{a}(x1)*eps{j}{b}(x2)*eps{i}{c}(x3) - eps1{a}(x1)*eps1{b}(x2)*eps{i}{c}(x3)"),
                    ));
                }
            }
        }
    }
    for i in [2u8, 3] {
        for a in r {
            for b in r {
                v.push((format!("eps.5[i={i},a={a},b={b}]"), format!("eps{i}{a}(x1)*eps{i}{b}(x2)")));
            }
        }
    }
    for a in r {
        for b in r {
            v.push((
                format!("eps.6[a={a},b={b}]"),
                format!("eps3{a}(x1)*eps2{b}(x2) + eps2{b}(x2)*eps3{a}(x1) - eps1{a}(x1)*eps1{b}(x2)"),
            ));
        }
    }
    for j in [2u8, 3] {
        for a in r {
            for b in r {
                v.push((
                    format!("eps.7[j={j},a={a},b={b}]"),
                    format!("eps1{a}(x1)*eps{j}{b}(x2) - eps1{b}(x2)*eps{j}{a}(x1)"),
                ));
            }
        }
    }
    for a in r {
        for b in r {
            v.push((
                format!("eps.8[a={a},b={b}]"),
                format!("eps2{a}(x1)*eps3{b}(x2) - eps2{b}(x2)*eps3{a}(x1)"),
            ));
        }
    }
    v
}
