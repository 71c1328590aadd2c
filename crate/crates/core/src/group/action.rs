use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::{OnceLock, RwLock};

use super::{GAElem, GroupElem, GroupKind, GroupSpec, Op, Op3};
use crate::arith::{cyc_embed, linalg, CycNum, Rat};
use crate::error::{Error, Result};

/// A constant invertible 2x2 matrix.
pub type Mat2Const = [[CycNum; 2]; 2];

/// The realized action of a group on `sl2`: generator operators and a table
/// of named operators.
#[derive(Clone, Debug)]
pub struct GroupAction {
    spec: GroupSpec,
    g: Op3,
    h: Option<Op3>,
    g_order: u32,
    table: HashMap<Op, Op3>,
}

impl GroupAction {
    /// The shared action for `spec`, built once per process.
    pub fn get(spec: &GroupSpec) -> &'static GroupAction {
        static REGISTRY: OnceLock<RwLock<HashMap<GroupSpec, &'static GroupAction>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(a) = reg.read().unwrap().get(spec) {
            return a;
        }
        let built = GroupAction::build(*spec);
        let mut w = reg.write().unwrap();
        w.entry(*spec).or_insert_with(|| Box::leak(Box::new(built)))
    }

    fn build(spec: GroupSpec) -> GroupAction {
        let n = spec.conductor;
        let (g, h) = match spec.kind {
            GroupKind::Cyclic(k) => (cyclic_g(k, n), None),
            GroupKind::Dihedral(k) => (cyclic_g(k, n), Some(flip_h(n))),
            _ => {
                let gens: Vec<Op3> = shipped_generators(&spec)
                    .iter()
                    .map(|b| Op3::adjoint(b).expect("shipped generators are invertible"))
                    .collect();
                (gens[0].clone(), Some(gens[1].clone()))
            }
        };
        let g_order = operator_order(&g);
        let mut action = GroupAction { spec, g, h, g_order, table: HashMap::new() };
        let mut table = HashMap::new();
        for op in action.listed_ops() {
            let r = action.compute(op);
            table.insert(op, r);
        }
        action.table = table;
        action
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn conductor(&self) -> u32 {
        self.spec.conductor
    }

    pub fn g(&self) -> &Op3 {
        &self.g
    }

    pub fn h(&self) -> Option<&Op3> {
        self.h.as_ref()
    }

    /// Multiplicative order of `g` as an operator on `sl2`.
    pub fn g_order(&self) -> u32 {
        self.g_order
    }

    /// Every group element expressible as `h^f g^p` with the action's
    /// generators (all of the group for cyclic and dihedral groups).
    pub fn group_elements(&self) -> Vec<GroupElem> {
        let flips: &[bool] = if self.h.is_some() { &[false, true] } else { &[false] };
        flips
            .iter()
            .flat_map(|&flip| (0..self.g_order).map(move |power| GroupElem { flip, power }))
            .collect()
    }

    /// The letters normal forms are written in.
    pub fn core_alphabet(&self) -> Vec<Op> {
        match self.spec.kind {
            GroupKind::Cyclic(1) => vec![Op::ID],
            GroupKind::Cyclic(2) => vec![Op::E(0), Op::E(1)],
            GroupKind::Cyclic(_) => vec![Op::E(0), Op::E(1), Op::E(-1)],
            GroupKind::Dihedral(_) => vec![Op::E(0), Op::E(1), Op::E(-1), Op::HE(1), Op::HE(-1)],
            _ => (1..=3).flat_map(|i| (1..=3).map(move |j| Op::Eps(i, j))).collect(),
        }
    }

    /// Canonical form of an idempotent index modulo the order of `g`:
    /// `n - 1` is written `-1`.
    pub fn normalize_index(&self, i: i64) -> i64 {
        let n = self.spec.kind.cyclic_order().unwrap_or(1) as i64;
        let r = i.rem_euclid(n);
        if n >= 3 && r == n - 1 {
            -1
        } else {
            r
        }
    }

    fn listed_ops(&self) -> Vec<Op> {
        let mut ops: Vec<Op> = self.group_elements().into_iter().map(Op::Group).collect();
        match self.spec.kind {
            GroupKind::Cyclic(k) | GroupKind::Dihedral(k) => {
                let idx: Vec<i64> = (0..k as i64).map(|i| self.normalize_index(i)).collect();
                ops.extend(idx.iter().map(|&i| Op::E(i)));
                if self.h.is_some() {
                    ops.extend(idx.iter().map(|&i| Op::HE(i)));
                }
            }
            _ => ops.extend(self.core_alphabet()),
        }
        ops
    }

    /// `true` if `op` names an operator of this group in canonical form.
    pub fn contains(&self, op: &Op) -> bool {
        match *op {
            Op::Group(ge) => (!ge.flip || self.h.is_some()) && ge.power < self.g_order,
            Op::E(i) => self.spec.kind.cyclic_order().is_some() && self.normalize_index(i) == i,
            Op::HE(i) => {
                matches!(self.spec.kind, GroupKind::Dihedral(_)) && self.normalize_index(i) == i
            }
            Op::Eps(i, j) => self.spec.kind.is_epsilon() && (1..=3).contains(&i) && (1..=3).contains(&j),
        }
    }

    /// The operator on `sl2` named by `op`.
    pub fn realize(&self, op: &Op) -> Result<Op3> {
        if !self.contains(op) {
            return Err(Error::OutsideAlphabet { letter: op.to_string(), group: self.spec.to_string() });
        }
        Ok(self.table.get(op).cloned().unwrap_or_else(|| self.compute(*op)))
    }

    fn compute(&self, op: Op) -> Op3 {
        let n = self.conductor();
        match op {
            Op::Group(ge) => {
                let gp = self.g.pow(ge.power);
                match (&self.h, ge.flip) {
                    (Some(h), true) => h * &gp,
                    _ => gp,
                }
            }
            Op::E(i) => self.idempotent_sum(i).realized,
            Op::HE(i) => self.h.as_ref().expect("dihedral") * &self.idempotent_sum(i).realized,
            Op::Eps(i, j) => Op3::unit(n, i as usize, j as usize),
        }
    }

    fn element(&self, ge: GroupElem) -> GAElem {
        GAElem {
            order: self.g_order,
            formal: BTreeMap::from([(ge, CycNum::one(self.conductor()))]),
            realized: self.compute(Op::Group(ge)),
        }
    }

    /// `(1/n) sum_j w^(-ij) g^j` with `w = zeta_n`.
    fn idempotent_sum(&self, i: i64) -> GAElem {
        let k = self.spec.kind.cyclic_order().expect("cyclic or dihedral");
        let n = self.conductor();
        let mut formal = BTreeMap::new();
        let mut realized = Op3::zero(n);
        let inv_k = Rat::new(1, k as i64);
        for j in 0..k {
            let c = cyc_embed(k, -i * j as i64, n).expect("order divides conductor").scale(&inv_k);
            realized = &realized + &self.g.pow(j).scale(&c);
            formal.insert(GroupElem::g(j), c);
        }
        GAElem { order: k, formal, realized }
    }

    /// The same action conjugated by `Ad(B)`: every operator `T` becomes
    /// `Ad(B) T Ad(B)^-1`.
    pub fn conjugated(&self, b: &Mat2Const) -> Result<GroupAction> {
        let ad = Op3::adjoint(b)?;
        let adi = ad.inverse()?;
        let conj = |t: &Op3| &(&ad * t) * &adi;
        Ok(GroupAction {
            spec: self.spec,
            g: conj(&self.g),
            h: self.h.as_ref().map(conj),
            g_order: self.g_order,
            table: self.table.iter().map(|(k, v)| (*k, conj(v))).collect(),
        })
    }
}

fn cyclic_g(k: u32, n: u32) -> Op3 {
    let w = cyc_embed(k, 1, n).expect("order divides conductor");
    let winv = cyc_embed(k, -1, n).expect("order divides conductor");
    Op3::diag([CycNum::one(n), winv, w])
}

fn flip_h(n: u32) -> Op3 {
    Op3::from_ints(n, [[-1, 0, 0], [0, 0, 1], [0, 1, 0]])
}

fn operator_order(t: &Op3) -> u32 {
    let id = Op3::identity(t.conductor());
    let mut acc = t.clone();
    let mut k = 1;
    while acc != id {
        acc = &acc * t;
        k += 1;
        assert!(k <= 1000, "operator of infinite order");
    }
    k
}

fn spec_err(op: &'static str, spec: &GroupSpec) -> Error {
    Error::UnsupportedGroup { op, group: spec.to_string() }
}

/// `g` acting as `diag(1, w^-1, w)` on `(a, b, c)`.
pub fn action_generator_g(spec: &GroupSpec) -> Result<Op3> {
    match spec.kind {
        GroupKind::Cyclic(_) | GroupKind::Dihedral(_) => Ok(GroupAction::get(spec).g.clone()),
        _ => Err(spec_err("action_generator_g", spec)),
    }
}

/// `h` acting as `(a, b, c) -> (-a, c, b)`.
pub fn action_generator_h(spec: &GroupSpec) -> Result<Op3> {
    match spec.kind {
        GroupKind::Dihedral(_) => Ok(flip_h(spec.conductor)),
        _ => Err(spec_err("action_generator_h", spec)),
    }
}

/// The primitive idempotent `e_i` of the cyclic subgroup `<g>`.
pub fn idempotent(spec: &GroupSpec, i: i64) -> Result<GAElem> {
    match spec.kind {
        GroupKind::Cyclic(_) | GroupKind::Dihedral(_) => {
            Ok(GroupAction::get(spec).idempotent_sum(i))
        }
        _ => Err(spec_err("idempotent", spec)),
    }
}

/// The product `h e_i` in the dihedral group algebra.
pub fn h_idempotent(spec: &GroupSpec, i: i64) -> Result<GAElem> {
    match spec.kind {
        GroupKind::Dihedral(_) => {
            let a = GroupAction::get(spec);
            Ok(a.element(GroupElem::hg(0)).mul(&a.idempotent_sum(i)))
        }
        _ => Err(spec_err("h_idempotent", spec)),
    }
}

/// The matrix-unit operator `eps_ij` (`v_k -> delta_jk v_i`).
pub fn epsilon(spec: &GroupSpec, i: u8, j: u8) -> Result<Op3> {
    if !spec.kind.is_epsilon() {
        return Err(spec_err("epsilon", spec));
    }
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::UnknownOperator { name: format!("eps{i}{j}"), group: spec.to_string() });
    }
    Ok(Op3::unit(spec.conductor, i as usize, j as usize))
}

/// `(pi0, pi1) = (1 + g, 1 - g)` for the group of order 2.
pub fn pi_operators(spec: &GroupSpec) -> Result<(Op3, Op3)> {
    if spec.kind != GroupKind::Cyclic(2) {
        return Err(spec_err("pi_operators", spec));
    }
    let id = Op3::identity(spec.conductor);
    let g = action_generator_g(spec)?;
    Ok((&id + &g, &id - &g))
}

/// Generator matrices in `GL2(Q(zeta_N))` whose projective images generate
/// the group.
pub fn shipped_generators(spec: &GroupSpec) -> Vec<Mat2Const> {
    let n = spec.conductor;
    let int = |k: i64| CycNum::from_int(n, k);
    let root = |order: u32, k: i64| cyc_embed(order, k, n).expect("order divides conductor");
    match spec.kind {
        GroupKind::Cyclic(k) => vec![[[int(1), int(0)], [int(0), root(k, 1)]]],
        GroupKind::Dihedral(k) => vec![
            [[int(1), int(0)], [int(0), root(k, 1)]],
            [[int(0), int(1)], [int(1), int(0)]],
        ],
        GroupKind::A4 | GroupKind::S4 => {
            let i = root(4, 1);
            let one = int(1);
            let t = [[&one + &i, &one + &i], [&i - &one, &one - &i]];
            let s = if spec.kind == GroupKind::A4 {
                [[i.clone(), int(0)], [int(0), -&i]]
            } else {
                [[int(1), int(0)], [int(0), -&i]]
            };
            vec![s, t]
        }
        GroupKind::A5 => {
            let e = |k: i64| root(5, k);
            let s = [[e(3), int(0)], [int(0), e(2)]];
            let p = &e(1) - &e(4);
            let q = &e(2) - &e(3);
            let t = [[-&p, q.clone()], [q, p]];
            vec![s, t]
        }
    }
}

/// The adjoint operators `X -> B X B^-1` of the given matrices.
pub fn adjoint_of_pgl2(_spec: &GroupSpec, generators: &[Mat2Const]) -> Result<Vec<Op3>> {
    generators.iter().map(Op3::adjoint).collect()
}

/// Size of the operator group generated by `ops`.
pub fn group_closure_size(ops: &[Op3]) -> usize {
    let Some(first) = ops.first() else { return 1 };
    let id = Op3::identity(first.conductor());
    let mut seen: HashSet<Op3> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for t in ops {
            let y = t * &x;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// Dimensions of the unital algebra generated by a set of operators and of
/// its commutant in `End(sl2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Irreducibility {
    pub algebra_dim: usize,
    pub commutant_dim: usize,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        self.commutant_dim == 1
    }
}

pub fn check_irreducible(ops: &[Op3]) -> Irreducibility {
    assert!(!ops.is_empty(), "check_irreducible needs at least one operator");
    let n = ops[0].conductor();
    let id = Op3::identity(n);
    let mut basis: Vec<Op3> = vec![id.clone()];
    let mut rows: Vec<Vec<CycNum>> = vec![id.flatten()];
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for t in ops {
            let y = t * &x;
            let mut trial = rows.clone();
            trial.push(y.flatten());
            if linalg::rank(&trial) > rows.len() {
                rows = trial;
                basis.push(y.clone());
                frontier.push(y);
            }
        }
    }
    // X T = T X for all T, unknowns X[r][c] at index 3r + c
    let mut eqs = Vec::new();
    for t in ops {
        for r in 0..3 {
            for c in 0..3 {
                let mut row = vec![CycNum::zero(n); 9];
                for k in 0..3 {
                    row[3 * r + k] = &row[3 * r + k] + t.get(k, c);
                    row[3 * k + c] = &row[3 * k + c] - t.get(r, k);
                }
                eqs.push(row);
            }
        }
    }
    let commutant_dim = 9 - linalg::rank(&eqs);
    Irreducibility { algebra_dim: basis.len(), commutant_dim }
}

/// Replace each operator `T` by `Ad(B) T Ad(B)^-1`.
pub fn conjugated_action(ops: &[Op3], b: &Mat2Const) -> Result<Vec<Op3>> {
    let ad = Op3::adjoint(b)?;
    let adi = ad.inverse()?;
    Ok(ops.iter().map(|t| &(&ad * t) * &adi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::{generic_matrix, Mat2};
    use crate::arith::{MPoly, Var};

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn z2_generator() {
        let g = action_generator_g(&spec("Zn:2")).unwrap();
        assert_eq!(g, Op3::from_ints(2, [[1, 0, 0], [0, -1, 0], [0, 0, -1]]));
    }

    #[test]
    fn z4_generator_on_generic_matrix() {
        let s = spec("Zn:4");
        let g = action_generator_g(&s).unwrap();
        let x = generic_matrix(1, 4);
        let i = CycNum::zeta(4);
        let expect = Mat2::new(
            MPoly::var(4, Var::a(1)),
            MPoly::var(4, Var::b(1)).scale(&-&i),
            MPoly::var(4, Var::c(1)).scale(&i),
            -&MPoly::var(4, Var::a(1)),
        );
        assert_eq!(g.apply_mat2(&x).unwrap(), expect);
        assert_eq!(action_generator_g(&spec("Zn:3")).unwrap().pow(3), Op3::identity(3));
    }

    #[test]
    fn dihedral_relations() {
        let s = spec("Dn:5");
        let (g, h) = (action_generator_g(&s).unwrap(), action_generator_h(&s).unwrap());
        assert_eq!(&h * &h, Op3::identity(5));
        assert_eq!(&(&h * &g) * &h, g.pow(4));
        assert!(action_generator_h(&spec("Zn:5")).is_err());
        assert!(action_generator_g(&spec("A4")).is_err());
    }

    #[test]
    fn idempotent_displays() {
        let s = spec("Zn:5");
        let x = generic_matrix(1, 5);
        let a = MPoly::var(5, Var::a(1));
        let c = MPoly::var(5, Var::c(1));
        let z = MPoly::zero(5);
        let e0 = idempotent(&s, 0).unwrap().realized.apply_mat2(&x).unwrap();
        assert_eq!(e0, Mat2::new(a.clone(), z.clone(), z.clone(), -&a));
        let e1 = idempotent(&s, 1).unwrap().realized.apply_mat2(&x).unwrap();
        assert_eq!(e1, Mat2::new(z.clone(), z.clone(), c, z.clone()));
        assert!(idempotent(&s, 2).unwrap().realized.is_zero());
    }

    #[test]
    fn idempotent_algebra() {
        for n in 3..=6 {
            let s = GroupSpec::cyclic(n).unwrap();
            let e: Vec<Op3> = [0, 1, -1].iter().map(|&i| idempotent(&s, i).unwrap().realized).collect();
            for (i, a) in e.iter().enumerate() {
                for (j, b) in e.iter().enumerate() {
                    let p = a * b;
                    if i == j {
                        assert_eq!(&p, a);
                    } else {
                        assert!(p.is_zero());
                    }
                }
            }
            assert_eq!(&(&e[0] + &e[1]) + &e[2], Op3::identity(n));
            let g = action_generator_g(&s).unwrap();
            for (k, i) in [0i64, 1, -1].iter().enumerate() {
                let w = cyc_embed(n, *i, n).unwrap();
                assert_eq!(&g * &e[k], e[k].scale(&w));
            }
        }
    }

    #[test]
    fn formal_product_matches_realization() {
        let s = spec("Dn:4");
        let he1 = h_idempotent(&s, 1).unwrap();
        let a = GroupAction::get(&s);
        assert_eq!(he1.realized, a.realize(&Op::HE(1)).unwrap());
        assert_eq!(he1.formal.len(), 4);
        assert!(he1.formal.keys().all(|g| g.flip));
        let e0 = idempotent(&s, 0).unwrap();
        let one_plus_h = a.element(GroupElem::IDENTITY).add(&a.element(GroupElem::hg(0)));
        assert!(one_plus_h.mul(&e0).realized.is_zero());
        let x = generic_matrix(1, 4);
        let img = he1.realized.apply_mat2(&x).unwrap();
        assert_eq!(img, Mat2::new(MPoly::zero(4), MPoly::var(4, Var::c(1)), MPoly::zero(4), MPoly::zero(4)));
    }

    #[test]
    fn epsilon_table() {
        let s = spec("A4");
        let x = generic_matrix(1, 4);
        let b = MPoly::var(4, Var::b(1));
        let z = MPoly::zero(4);
        let e12 = epsilon(&s, 1, 2).unwrap().apply_mat2(&x).unwrap();
        assert_eq!(e12, Mat2::new(b.clone(), z.clone(), z.clone(), -&b));
        assert!(epsilon(&spec("Zn:3"), 1, 1).is_err());
    }

    #[test]
    fn pi_operators_z2() {
        let (p0, p1) = pi_operators(&spec("Zn:2")).unwrap();
        assert_eq!(&p0 + &p1, Op3::identity(2).scale(&CycNum::from_int(2, 2)));
        assert_eq!(p0, Op3::from_ints(2, [[2, 0, 0], [0, 0, 0], [0, 0, 0]]));
        assert!(pi_operators(&spec("Zn:3")).is_err());
    }

    #[test]
    fn shipped_group_orders() {
        for (s, order) in [("A4", 12), ("S4", 24), ("A5", 60), ("Dn:5", 10), ("Zn:6", 6)] {
            let sp = spec(s);
            let ops = adjoint_of_pgl2(&sp, &shipped_generators(&sp)).unwrap();
            assert_eq!(group_closure_size(&ops), order, "{s}");
        }
    }

    #[test]
    fn irreducibility() {
        let s = spec("A4");
        let eps: Vec<Op3> = (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j)))
            .map(|(i, j)| epsilon(&s, i, j).unwrap())
            .collect();
        assert_eq!(check_irreducible(&eps), Irreducibility { algebra_dim: 9, commutant_dim: 1 });
        let g3 = action_generator_g(&spec("Zn:3")).unwrap();
        assert_eq!(check_irreducible(&[g3]), Irreducibility { algebra_dim: 3, commutant_dim: 3 });
        for k in ["A4", "S4", "A5"] {
            let sp = spec(k);
            let ops = adjoint_of_pgl2(&sp, &shipped_generators(&sp)).unwrap();
            assert_eq!(check_irreducible(&ops), Irreducibility { algebra_dim: 9, commutant_dim: 1 }, "{k}");
        }
    }

    #[test]
    fn conjugation() {
        let s = spec("Zn:2");
        let (p0, p1) = pi_operators(&s).unwrap();
        let one = CycNum::one(2);
        let zero = CycNum::zero(2);
        let id = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
        assert_eq!(conjugated_action(&[p0.clone(), p1.clone()], &id).unwrap(), vec![p0.clone(), p1.clone()]);
        let swap = [[zero.clone(), one.clone()], [one.clone(), zero.clone()]];
        let conj = conjugated_action(std::slice::from_ref(&p1), &swap).unwrap();
        let back = conjugated_action(&conj, &swap).unwrap();
        assert_eq!(back[0], p1);
        let b = [[CycNum::from_int(2, 2), one.clone()], [one.clone(), one.clone()]];
        let binv = [[one.clone(), -&one], [-&one, CycNum::from_int(2, 2)]];
        let there = conjugated_action(std::slice::from_ref(&p0), &b).unwrap();
        assert_eq!(conjugated_action(&there, &binv).unwrap()[0], p0);
    }
}
