//! Oriented identity lists, one constructor per group family.

use crate::arith::{cyc_embed, CycNum};
use crate::gpoly::Letter;
use crate::group::{GroupAction, GroupElem, GroupKind, Op};

/// Replacement for a matched window: `sum c_k * word_k`.
pub type Replacement = Vec<(CycNum, Vec<Letter>)>;

/// Data a rule may consult besides the word itself.
pub struct RuleCtx {
    pub n: u32,
    pub action: &'static GroupAction,
}

impl RuleCtx {
    fn one(&self) -> CycNum {
        CycNum::one(self.n)
    }

    fn minus_one(&self) -> CycNum {
        CycNum::from_int(self.n, -1)
    }
}

pub type RuleFn = fn(&RuleCtx, &[Letter], usize) -> Option<Replacement>;

/// One oriented rewrite rule over windows of `width` consecutive letters.
#[derive(Clone)]
pub struct Rule {
    /// Identity family this rule belongs to, e.g. `cyc.4`.
    pub family: &'static str,
    pub width: usize,
    /// Human-readable schema.
    pub text: &'static str,
    pub(crate) apply: RuleFn,
}

impl Rule {
    pub(crate) fn try_at(&self, ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
        if p + self.width > w.len() {
            return None;
        }
        (self.apply)(ctx, w, p)
    }
}

fn sign_e(op: Op) -> Option<i64> {
    match op {
        Op::E(a @ (1 | -1)) => Some(a),
        _ => None,
    }
}

fn sign_he(op: Op) -> Option<i64> {
    match op {
        Op::HE(a @ (1 | -1)) => Some(a),
        _ => None,
    }
}

fn is_e0(l: &Letter) -> bool {
    l.op == Op::E(0)
}

fn row(l: &Letter) -> Option<(u8, u8)> {
    match l.op {
        Op::Eps(i, j) => Some((i, j)),
        _ => None,
    }
}

fn single(c: CycNum, w: Vec<Letter>) -> Option<Replacement> {
    Some(vec![(c, w)])
}

fn lt(op: Op, var: u32) -> Letter {
    Letter::new(op, var)
}

/// `g^j` and `h g^j` in terms of `e_0, e_1, e_-1` (resp. `he_*`); other
/// idempotents vanish on `sl2`.
fn expand_cyclic_letter(ctx: &RuleCtx, l: Letter) -> Option<Replacement> {
    let k = ctx.action.spec().kind.cyclic_order()?;
    let out_of_range = |i: i64| !matches!(i, -1..=1);
    match l.op {
        Op::Group(GroupElem { flip, power }) => {
            let (e0, e1, em1) = if flip {
                (Op::HE(0), Op::HE(1), Op::HE(-1))
            } else {
                (Op::E(0), Op::E(1), Op::E(-1))
            };
            let p = power as i64;
            let mut out = vec![(ctx.one(), vec![lt(e0, l.var)])];
            if k == 2 {
                out.push((cyc_embed(2, p, ctx.n).ok()?, vec![lt(e1, l.var)]));
            } else {
                out.push((cyc_embed(k, p, ctx.n).ok()?, vec![lt(e1, l.var)]));
                out.push((cyc_embed(k, -p, ctx.n).ok()?, vec![lt(em1, l.var)]));
            }
            Some(out)
        }
        Op::E(i) | Op::HE(i) if k >= 3 && out_of_range(i) => Some(Vec::new()),
        _ => None,
    }
}

fn r_expand(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    expand_cyclic_letter(ctx, w[p])
}

fn r_e0_sort(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p], w[p + 1]);
    (is_e0(&a) && is_e0(&b) && b.var < a.var).then(|| vec![(ctx.one(), vec![b, a])])
}

fn r_cyc_square(_: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let a = sign_e(w[p].op)?;
    (sign_e(w[p + 1].op) == Some(a)).then(Vec::new)
}

fn r_cyc_chain(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (x, y, z) = (w[p], w[p + 1], w[p + 2]);
    let a = sign_e(x.op)?;
    if sign_e(y.op) != Some(-a) || z.op != x.op || z.var >= x.var {
        return None;
    }
    single(ctx.one(), vec![lt(x.op, z.var), y, lt(x.op, x.var)])
}

fn r_cyc_anti(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p], w[p + 1]);
    sign_e(a.op)?;
    is_e0(&b).then(|| vec![(ctx.minus_one(), vec![b, a])])
}

fn r_z2_chain(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (x, y, z) = (w[p], w[p + 1], w[p + 2]);
    let e1 = Op::E(1);
    (x.op == e1 && y.op == e1 && z.op == e1 && z.var < x.var).then(|| vec![(ctx.one(), vec![z, y, x])])
}

fn r_z2_anti(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p], w[p + 1]);
    (a.op == Op::E(1) && is_e0(&b)).then(|| vec![(ctx.minus_one(), vec![b, a])])
}

fn r_trivial(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    (w[p].op == Op::E(0)).then(|| vec![(ctx.one(), vec![lt(Op::ID, w[p].var)])])
}

fn r_dih_he0(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    (w[p].op == Op::HE(0)).then(|| vec![(ctx.minus_one(), vec![lt(Op::E(0), w[p].var)])])
}

fn is_f(op: Op) -> bool {
    sign_e(op).is_some() || sign_he(op).is_some()
}

fn r_dih_anti(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p], w[p + 1]);
    (is_f(a.op) && is_e0(&b)).then(|| vec![(ctx.minus_one(), vec![b, a])])
}

fn r_dih_square(_: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p].op, w[p + 1].op);
    (is_f(a) && a == b).then(Vec::new)
}

fn r_dih_mixed_zero(_: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p].op, w[p + 1].op);
    let hit = match (sign_e(a), sign_he(a), sign_e(b), sign_he(b)) {
        (Some(s), _, _, Some(t)) => t == -s,
        (_, Some(s), Some(t), _) => t == -s,
        _ => false,
    };
    hit.then(Vec::new)
}

fn r_dih_outer_sort(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (x, y, z) = (w[p], w[p + 1], w[p + 2]);
    (is_f(x.op) && z.op == x.op && z.var < x.var).then(|| vec![(ctx.one(), vec![lt(x.op, z.var), y, lt(x.op, x.var)])])
}

fn r_dih_he_right(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (x, y, z) = (w[p], w[p + 1], w[p + 2]);
    let g = sign_he(x.op)?;
    (sign_e(z.op) == Some(-g)).then(|| vec![(ctx.one(), vec![z, y, x])])
}

fn r_dih_he_pair(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (x, y) = (w[p], w[p + 1]);
    let s = sign_he(x.op)?;
    (sign_he(y.op) == Some(-s)).then(|| vec![(ctx.one(), vec![lt(Op::E(-s), y.var), lt(Op::E(s), x.var)])])
}

fn r_dih_mixed_sort(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (x, y) = (w[p], w[p + 1]);
    let ok = match (sign_e(x.op), sign_he(x.op)) {
        (Some(s), _) => sign_he(y.op) == Some(s),
        (_, Some(s)) => sign_e(y.op) == Some(s),
        _ => false,
    };
    (ok && y.var < x.var).then(|| vec![(ctx.one(), vec![lt(x.op, y.var), lt(y.op, x.var)])])
}

fn r_eps_expand(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let l = w[p];
    if !l.op.is_group() {
        return None;
    }
    let t = ctx.action.realize(&l.op).ok()?;
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let c = t.get(i, j);
            if !c.is_zero() {
                out.push((c.clone(), vec![lt(Op::Eps(i as u8 + 1, j as u8 + 1), l.var)]));
            }
        }
    }
    Some(out)
}

fn key(l: &Letter) -> (u8, u32) {
    match l.op {
        Op::Eps(_, j) => (j, l.var),
        _ => (0, l.var),
    }
}

fn r_eps_row1_sort(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p], w[p + 1]);
    (row(&a)?.0 == 1 && row(&b)?.0 == 1 && key(&b) < key(&a)).then(|| vec![(ctx.one(), vec![b, a])])
}

fn r_eps_anti(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let (a, b) = (w[p], w[p + 1]);
    (row(&a)?.0 >= 2 && row(&b)?.0 == 1).then(|| vec![(ctx.minus_one(), vec![b, a])])
}

fn r_eps_triple(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let ((i, a), (j, b), (k, _)) = (row(&w[p])?, row(&w[p + 1])?, row(&w[p + 2])?);
    if i < 2 || j < 2 || i == j || k != i {
        return None;
    }
    single(ctx.one(), vec![lt(Op::Eps(1, a), w[p].var), lt(Op::Eps(1, b), w[p + 1].var), w[p + 2]])
}

fn r_eps_square(_: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let ((i, _), (j, _)) = (row(&w[p])?, row(&w[p + 1])?);
    (i >= 2 && i == j).then(Vec::new)
}

fn is_offdiag_row(l: Option<&Letter>) -> bool {
    l.and_then(row).is_some_and(|(i, _)| i >= 2)
}

fn r_eps_swap32(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let ((i, a), (j, b)) = (row(&w[p])?, row(&w[p + 1])?);
    if i != 3 || j != 2 {
        return None;
    }
    // only isolated pairs; longer alternating runs go through the triple rule
    if (p > 0 && is_offdiag_row(w.get(p - 1))) || is_offdiag_row(w.get(p + 2)) {
        return None;
    }
    let (x1, x2) = (w[p].var, w[p + 1].var);
    Some(vec![
        (ctx.minus_one(), vec![w[p + 1], w[p]]),
        (ctx.one(), vec![lt(Op::Eps(1, a), x1), lt(Op::Eps(1, b), x2)]),
    ])
}

fn r_eps_row1_cross(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let ((i, s), (j, t)) = (row(&w[p])?, row(&w[p + 1])?);
    if i != 1 || j < 2 || key(&w[p]) <= key(&w[p + 1]) {
        return None;
    }
    single(ctx.one(), vec![lt(Op::Eps(1, t), w[p + 1].var), lt(Op::Eps(j, s), w[p].var)])
}

fn r_eps_pair_sort(ctx: &RuleCtx, w: &[Letter], p: usize) -> Option<Replacement> {
    let ((i, s), (j, t)) = (row(&w[p])?, row(&w[p + 1])?);
    if i != 2 || j != 3 || key(&w[p]) <= key(&w[p + 1]) {
        return None;
    }
    single(ctx.one(), vec![lt(Op::Eps(2, t), w[p + 1].var), lt(Op::Eps(3, s), w[p].var)])
}

/// Termination measure for a word, compared lexicographically.
pub type Measure = fn(&[Letter]) -> Vec<i64>;

fn raw_weight(l: &Letter) -> i64 {
    match l.op {
        Op::Group(_) => 2,
        Op::E(i) | Op::HE(i) if !matches!(i, 1 | -1) && !(i == 0 && l.op == Op::E(0)) => 1,
        _ => 0,
    }
}

fn inversions<K: Ord>(keys: &[K]) -> i64 {
    let mut c = 0;
    for a in 0..keys.len() {
        for b in a + 1..keys.len() {
            if keys[a] > keys[b] {
                c += 1;
            }
        }
    }
    c
}

/// Sum over letters matching `is_target` of the number of non-target
/// letters to their left.
fn displacement(w: &[Letter], is_target: impl Fn(&Letter) -> bool) -> i64 {
    let mut others = 0;
    let mut d = 0;
    for l in w {
        if is_target(l) {
            d += others;
        } else {
            others += 1;
        }
    }
    d
}

fn measure_cyclic(w: &[Letter]) -> Vec<i64> {
    let vars: Vec<u32> = w.iter().map(|l| l.var).collect();
    vec![w.iter().map(raw_weight).sum(), displacement(w, is_e0), inversions(&vars)]
}

fn measure_trivial(w: &[Letter]) -> Vec<i64> {
    vec![w.iter().filter(|l| l.op != Op::ID).count() as i64]
}

fn measure_dihedral(w: &[Letter]) -> Vec<i64> {
    let vars: Vec<u32> = w.iter().map(|l| l.var).collect();
    let he_count = w.iter().filter(|l| sign_he(l.op).is_some()).count() as i64;
    let he_right: i64 = w
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l.op, Op::HE(_)))
        .map(|(p, _)| (w.len() - 1 - p) as i64)
        .sum();
    vec![w.iter().map(raw_weight).sum(), he_count, he_right, displacement(w, is_e0), inversions(&vars)]
}

fn measure_eps(w: &[Letter]) -> Vec<i64> {
    let raw = w.iter().filter(|l| row(l).is_none()).count() as i64;
    let offdiag = w.iter().filter(|l| row(l).is_some_and(|(i, _)| i >= 2)).count() as i64;
    let row1_disp = displacement(w, |l| row(l).is_some_and(|(i, _)| i == 1));
    let rows: Vec<u8> = w.iter().map(|l| row(l).map_or(0, |(i, _)| i)).collect();
    let mut three_before_two = 0;
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            if rows[a] == 3 && rows[b] == 2 {
                three_before_two += 1;
            }
        }
    }
    let keys: Vec<(u8, u32)> = w.iter().map(key).collect();
    vec![raw, offdiag, row1_disp, three_before_two, inversions(&keys)]
}

macro_rules! rule {
    ($family:expr, $width:expr, $text:expr, $f:expr) => {
        Rule { family: $family, width: $width, text: $text, apply: $f }
    };
}

/// Rules, measure and measure description for a group kind.
pub(crate) fn rules_for_kind(kind: GroupKind) -> (Vec<Rule>, Measure, &'static str) {
    match kind {
        GroupKind::Cyclic(1) => (
            vec![rule!("triv.1", 1, "e0(x) -> x", r_trivial)],
            measure_trivial,
            "[non-identity letters]",
        ),
        GroupKind::Cyclic(2) => (
            vec![
                rule!("z2.0", 1, "g^j(x) -> e0(x) + (-1)^j e1(x)", r_expand),
                rule!("z2.1", 2, "e0(x_j) e0(x_i) -> e0(x_i) e0(x_j)   (i < j)", r_e0_sort),
                rule!("z2.2", 3, "e1(x_i) e1(y) e1(x_k) -> e1(x_k) e1(y) e1(x_i)   (k < i)", r_z2_chain),
                rule!("z2.3", 2, "e1(x) e0(y) -> -e0(y) e1(x)", r_z2_anti),
            ],
            measure_cyclic,
            "[raw letters, e0 displacement, variable inversions]",
        ),
        GroupKind::Cyclic(_) => (
            vec![
                rule!("cyc.1", 1, "g^j(x) -> e0(x) + w^j e1(x) + w^-j e-1(x);  e_i(x) -> 0 for i not in {0, 1, -1}", r_expand),
                rule!("cyc.2", 2, "e_a(x) e_a(y) -> 0", r_cyc_square),
                rule!("cyc.3", 2, "e0(x_j) e0(x_i) -> e0(x_i) e0(x_j)   (i < j)", r_e0_sort),
                rule!("cyc.4", 3, "e_a(x_i) e_-a(y) e_a(x_k) -> e_a(x_k) e_-a(y) e_a(x_i)   (k < i)", r_cyc_chain),
                rule!("cyc.5", 2, "e_a(x) e0(y) -> -e0(y) e_a(x)", r_cyc_anti),
            ],
            measure_cyclic,
            "[raw letters, e0 displacement, variable inversions]",
        ),
        GroupKind::Dihedral(_) => (
            vec![
                rule!("dih.1", 1, "he0(x) -> -e0(x)", r_dih_he0),
                rule!("dih.2", 2, "f(x) e0(y) -> -e0(y) f(x)   (f in e_a, he_a)", r_dih_anti),
                rule!("dih.3", 1, "g^j(x) -> e0 + w^j e1 + w^-j e-1;  hg^j(x) -> he0 + w^j he1 + w^-j he-1;  e_i, he_i -> 0 off {0, 1, -1}", r_expand),
                rule!("dih.4", 2, "e0(x_j) e0(x_i) -> e0(x_i) e0(x_j)   (i < j)", r_e0_sort),
                rule!("dih.5", 2, "f(x) f(y) -> 0   (f in e_a, he_a)", r_dih_square),
                rule!("dih.6", 2, "e_a(x) he_-a(y) -> 0;  he_a(x) e_-a(y) -> 0", r_dih_mixed_zero),
                rule!("dih.7", 3, "f(x_j) z f(x_i) -> f(x_i) z f(x_j)   (i < j, z any letter)", r_dih_outer_sort),
                rule!("dih.8", 3, "he_c(x) z e_-c(y) -> e_-c(y) z he_c(x)   (z any letter)", r_dih_he_right),
                rule!("dih.9", 2, "he_-a(x) he_a(y) -> e_a(y) e_-a(x)", r_dih_he_pair),
                rule!("dih.10", 2, "e_a(x_j) he_a(x_i) -> e_a(x_i) he_a(x_j);  he_a(x_j) e_a(x_i) -> he_a(x_i) e_a(x_j)   (i < j)", r_dih_mixed_sort),
            ],
            measure_dihedral,
            "[raw letters, he+-1 count, letters right of he, e0 displacement, variable inversions]",
        ),
        GroupKind::A4 | GroupKind::S4 | GroupKind::A5 => (
            vec![
                rule!("eps.1", 1, "T(x) -> sum T_ij eps_ij(x)   (T a group element)", r_eps_expand),
                rule!("eps.2", 2, "eps1a(x) eps1b(y) -> eps1b(y) eps1a(x)   ((b, y) < (a, x))", r_eps_row1_sort),
                rule!("eps.3", 2, "eps_ij(y) eps1a(x) -> -eps1a(x) eps_ij(y)   (i = 2, 3)", r_eps_anti),
                rule!("eps.4", 3, "eps_ia(x) eps_jb(y) eps_ic(z) -> eps1a(x) eps1b(y) eps_ic(z)   (i != j in 2, 3)", r_eps_triple),
                rule!("eps.5", 2, "eps_ia(x) eps_ib(y) -> 0   (i = 2, 3)", r_eps_square),
                rule!("eps.6", 2, "eps3a(x) eps2b(y) -> -eps2b(y) eps3a(x) + eps1a(x) eps1b(y)   (isolated pair)", r_eps_swap32),
                rule!("eps.7", 2, "eps1s(x_p) eps_jt(x_q) -> eps1t(x_q) eps_js(x_p)   (j = 2, 3; (t, q) < (s, p))", r_eps_row1_cross),
                rule!("eps.8", 2, "eps2s(x_p) eps3t(x_q) -> eps2t(x_q) eps3s(x_p)   ((t, q) < (s, p))", r_eps_pair_sort),
            ],
            measure_eps,
            "[raw letters, row 2/3 letters, row 1 displacement, row 3 before row 2 pairs, (column, variable) inversions]",
        ),
    }
}
