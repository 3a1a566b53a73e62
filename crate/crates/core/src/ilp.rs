//! Binary-programming models over subject-set flags `s_u` and class rows
//! `q_u_v`, `u <= v` (v lies in the class represented by its smallest member
//! u), whose canonical solutions are the vertex sets with all equivalence
//! classes of size at least k.
//!
//! The plain model states one incompatibility constraint per (vertex, pair)
//! with differing distances; the aggregated model folds each pair's
//! incompatibilities into a single big-M row whose sum also covers the pair
//! itself. That difference matters beyond size: the aggregated rows pin the
//! representative convention down, while the plain triples skip `u = v` and
//! therefore accept stray rows keyed by a vertex whose own diagonal flag is
//! off (see the phantom-row tests). Both agree on canonical encodings,
//! which is what [`enumerate_feasible_sets`] and [`validate`] of encoded
//! partitions exercise.
//!
//! An optional extension adds per-class indicator variables forcing some
//! class to have size exactly k, closing the gap between the at-least
//! reading the base constraints implement and the exact-minimum reading of
//! a k-antiresolving set.

use std::fmt::Write as _;

use thiserror::Error;

use crate::antiresolution::ArsPartition;
use crate::graph::DistanceMatrix;

/// Vertex-count guard for [`enumerate_feasible_sets`].
pub const ENUMERATION_LIMIT: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IlpError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("assignment dimensions do not match the model: {0}")]
    DimensionMismatch(String),
    #[error("n = {n} exceeds the enumeration guard {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IlpVariant {
    /// One incompatibility constraint per (u, v, w) triple.
    F,
    /// Aggregated incompatibility constraints, one per pair.
    FA,
    /// F or FA plus the exactness extension.
    FX,
}

impl IlpVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            IlpVariant::F => "F",
            IlpVariant::FA => "FA",
            IlpVariant::FX => "FX",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `s_u`: u is in the subject set.
    S(usize),
    /// `q_u_v`, `u <= v`: v lies in the class represented by u.
    Q(usize, usize),
    /// `e_u`: the class represented by u has size exactly k.
    E(usize),
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::S(u) => format!("s_{u}"),
            Var::Q(u, v) => format!("q_{u}_{v}"),
            Var::E(u) => format!("e_{u}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Ge,
    Le,
    Eq,
}

impl Op {
    fn as_str(&self) -> &'static str {
        match self {
            Op::Ge => ">=",
            Op::Le => "<=",
            Op::Eq => "=",
        }
    }

    fn holds(&self, lhs: i64, rhs: i64) -> bool {
        match self {
            Op::Ge => lhs >= rhs,
            Op::Le => lhs <= rhs,
            Op::Eq => lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(i64, Var)>,
    pub op: Op,
    pub rhs: i64,
}

/// A built model: minimize the number of subject vertices over the binary
/// constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpModel {
    pub n: usize,
    pub k: usize,
    pub variant: IlpVariant,
    pub constraints: Vec<Constraint>,
}

impl IlpModel {
    /// All binary variables in declaration order: the s block, the q block
    /// by pair, then the e block for the extended variant.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars = Vec::with_capacity(self.variable_count());
        vars.extend((1..=self.n).map(Var::S));
        for u in 1..=self.n {
            for v in u..=self.n {
                vars.push(Var::Q(u, v));
            }
        }
        if self.variant == IlpVariant::FX {
            vars.extend((1..=self.n).map(Var::E));
        }
        vars
    }

    pub fn variable_count(&self) -> usize {
        let base = self.n + self.n * (self.n + 1) / 2;
        if self.variant == IlpVariant::FX {
            base + self.n
        } else {
            base
        }
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// Number of constraints whose name starts with `prefix`.
    pub fn family_size(&self, prefix: &str) -> usize {
        self.constraints
            .iter()
            .filter(|c| c.name.starts_with(prefix))
            .count()
    }
}

/// A 0/1 point in the model's variable space. `e` stays empty for the base
/// variants.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    pub s: Vec<bool>,
    pub q: Vec<bool>,
    pub e: Vec<bool>,
}

impl Assignment {
    pub fn zero(n: usize) -> Self {
        Assignment {
            s: vec![false; n],
            q: vec![false; n * (n + 1) / 2],
            e: Vec::new(),
        }
    }

    fn value(&self, var: Var, n: usize) -> bool {
        match var {
            Var::S(u) => self.s[u - 1],
            Var::Q(u, v) => self.q[q_index(n, u, v)],
            Var::E(u) => self.e[u - 1],
        }
    }
}

/// Flat index of `q_u_v` (`u <= v`) in the pair block.
pub fn q_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(1 <= u && u <= v && v <= n);
    (u - 1) * (2 * n - u + 2) / 2 + (v - u)
}

/// Everything the validator found wrong with an assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violated: Vec<String>,
}

impl ValidationReport {
    pub fn is_feasible(&self) -> bool {
        self.violated.is_empty()
    }
}

fn common_constraints(dm: &DistanceMatrix, k: usize) -> Vec<Constraint> {
    let n = dm.vertex_count();
    let mut out = Vec::new();

    // the subject set is non-empty
    out.push(Constraint {
        name: "nonempty".into(),
        terms: (1..=n).map(|u| (1, Var::S(u))).collect(),
        op: Op::Ge,
        rhs: 1,
    });

    // each vertex is in the subject set or in exactly one class
    for u in 1..=n {
        let mut terms = vec![(1, Var::S(u))];
        terms.extend((1..=u).map(|v| (1, Var::Q(v, u))));
        out.push(Constraint {
            name: format!("part_{u}"),
            terms,
            op: Op::Eq,
            rhs: 1,
        });
    }

    // a represented class has at least k - 1 further members
    for u in 1..=n {
        let mut terms: Vec<(i64, Var)> = ((u + 1)..=n).map(|v| (1, Var::Q(u, v))).collect();
        terms.push((-((k as i64) - 1), Var::Q(u, u)));
        out.push(Constraint {
            name: format!("card_{u}"),
            terms,
            op: Op::Ge,
            rhs: 0,
        });
    }

    out
}

fn maximality_constraints(dm: &DistanceMatrix) -> Vec<Constraint> {
    let n = dm.vertex_count();
    let mut out = Vec::new();
    // vertices the subject cannot tell apart must share a class
    for u in 1..=n {
        for v in (u + 1)..=n {
            let mut s_block: Vec<usize> = vec![v];
            for w in 1..=n {
                if w != u && w != v && dm.dist(u, w) != dm.dist(v, w) {
                    s_block.push(w);
                }
            }
            s_block.sort_unstable();
            let mut terms: Vec<(i64, Var)> = s_block.into_iter().map(|w| (1, Var::S(w))).collect();
            terms.push((-1, Var::Q(u, u)));
            terms.push((1, Var::Q(u, v)));
            out.push(Constraint {
                name: format!("max_{u}_{v}"),
                terms,
                op: Op::Ge,
                rhs: 0,
            });
        }
    }
    out
}

/// The plain formulation: one incompatibility row per (u, v, w) triple with
/// `d(u, v) != d(u, w)`.
pub fn build_f(dm: &DistanceMatrix, k: usize) -> Result<IlpModel, IlpError> {
    if k < 1 {
        return Err(IlpError::InvalidK);
    }
    let n = dm.vertex_count();
    let mut constraints = common_constraints(dm, k);
    for u in 1..=n {
        for v in 1..=n {
            if v == u {
                continue;
            }
            for w in (v + 1)..=n {
                if dm.dist(u, v) != dm.dist(u, w) {
                    constraints.push(Constraint {
                        name: format!("inc_{u}_{v}_{w}"),
                        terms: vec![(1, Var::S(u)), (1, Var::Q(v, w))],
                        op: Op::Le,
                        rhs: 1,
                    });
                }
            }
        }
    }
    constraints.extend(maximality_constraints(dm));
    Ok(IlpModel {
        n,
        k,
        variant: IlpVariant::F,
        constraints,
    })
}

/// The aggregated formulation: per pair `v < w`, the subject vertices that
/// tell v and w apart share one big-M row with coefficient n.
pub fn build_fa(dm: &DistanceMatrix, k: usize) -> Result<IlpModel, IlpError> {
    if k < 1 {
        return Err(IlpError::InvalidK);
    }
    let n = dm.vertex_count();
    let mut constraints = common_constraints(dm, k);
    for v in 1..=n {
        for w in (v + 1)..=n {
            let mut terms: Vec<(i64, Var)> = (1..=n)
                .filter(|&u| dm.dist(u, v) != dm.dist(u, w))
                .map(|u| (1, Var::S(u)))
                .collect();
            terms.push((n as i64, Var::Q(v, w)));
            constraints.push(Constraint {
                name: format!("agg_{v}_{w}"),
                terms,
                op: Op::Le,
                rhs: n as i64,
            });
        }
    }
    constraints.extend(maximality_constraints(dm));
    Ok(IlpModel {
        n,
        k,
        variant: IlpVariant::FA,
        constraints,
    })
}

/// Adds indicator variables `e_u` forcing at least one represented class to
/// have size exactly k: `e_u <= q_u_u`, an upper cardinality row activated
/// by `e_u`, and `sum e_u >= 1`.
pub fn build_exactness_extension(model: &IlpModel) -> IlpModel {
    assert!(
        model.variant != IlpVariant::FX,
        "exactness extension applies to the base variants"
    );
    let n = model.n;
    let k = model.k as i64;
    let mut constraints = model.constraints.clone();
    for u in 1..=n {
        constraints.push(Constraint {
            name: format!("exa_{u}"),
            terms: vec![(1, Var::E(u)), (-1, Var::Q(u, u))],
            op: Op::Le,
            rhs: 0,
        });
    }
    for u in 1..=n {
        // with e_u = 1 the class of u has at most k - 1 further members
        let mut terms: Vec<(i64, Var)> = ((u + 1)..=n).map(|v| (1, Var::Q(u, v))).collect();
        terms.push((n as i64 - k, Var::E(u)));
        constraints.push(Constraint {
            name: format!("exb_{u}"),
            terms,
            op: Op::Le,
            rhs: (k - 1) + (n as i64 - k),
        });
    }
    constraints.push(Constraint {
        name: "exc".into(),
        terms: (1..=n).map(|u| (1, Var::E(u))).collect(),
        op: Op::Ge,
        rhs: 1,
    });
    IlpModel {
        n,
        k: model.k,
        variant: IlpVariant::FX,
        constraints,
    }
}

/// Encodes a partition as the canonical assignment: subject flags plus, per
/// class, the row of its smallest member.
pub fn encode_ars(subject: &[usize], partition: &ArsPartition) -> Assignment {
    let n = partition.subject.len() + partition.classes.iter().map(Vec::len).sum::<usize>();
    debug_assert_eq!(
        {
            let mut s = subject.to_vec();
            s.sort_unstable();
            s.dedup();
            s
        },
        partition.subject,
        "partition must come from the same subject set"
    );
    let mut a = Assignment::zero(n);
    for &u in &partition.subject {
        a.s[u - 1] = true;
    }
    for class in &partition.classes {
        let rep = class[0];
        for &v in class {
            a.q[q_index(n, rep, v)] = true;
        }
    }
    a
}

/// Fills the indicator block of an encoded assignment for the extended
/// variant: a class indicator is on iff the class has size exactly k.
pub fn with_exactness_flags(mut a: Assignment, partition: &ArsPartition, k: usize) -> Assignment {
    let n = a.s.len();
    a.e = vec![false; n];
    for class in &partition.classes {
        if class.len() == k {
            a.e[class[0] - 1] = true;
        }
    }
    a
}

/// Reads the subject set and the represented classes out of any assignment.
pub fn decode(a: &Assignment) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = a.s.len();
    let subject: Vec<usize> = (1..=n).filter(|&u| a.s[u - 1]).collect();
    let mut classes = Vec::new();
    for u in 1..=n {
        if a.q[q_index(n, u, u)] {
            classes.push((u..=n).filter(|&v| a.q[q_index(n, u, v)]).collect());
        }
    }
    (subject, classes)
}

/// Checks every constraint; the report lists the violated ones by name.
pub fn validate(model: &IlpModel, a: &Assignment) -> Result<ValidationReport, IlpError> {
    let n = model.n;
    if a.s.len() != n {
        return Err(IlpError::DimensionMismatch(format!(
            "expected {n} subject flags, got {}",
            a.s.len()
        )));
    }
    if a.q.len() != n * (n + 1) / 2 {
        return Err(IlpError::DimensionMismatch(format!(
            "expected {} pair flags, got {}",
            n * (n + 1) / 2,
            a.q.len()
        )));
    }
    let expected_e = if model.variant == IlpVariant::FX {
        n
    } else {
        0
    };
    if a.e.len() != expected_e {
        return Err(IlpError::DimensionMismatch(format!(
            "expected {expected_e} indicator flags, got {}",
            a.e.len()
        )));
    }
    let mut violated = Vec::new();
    for c in &model.constraints {
        let lhs: i64 = c
            .terms
            .iter()
            .map(|&(coeff, var)| if a.value(var, n) { coeff } else { 0 })
            .sum();
        if !c.op.holds(lhs, c.rhs) {
            violated.push(c.name.clone());
        }
    }
    Ok(ValidationReport { violated })
}

/// All subject sets whose canonical completion is feasible for the chosen
/// variant, ordered by cardinality then lexicographically. Guarded to small
/// graphs: the walk is exponential in n.
pub fn enumerate_feasible_sets(
    dm: &DistanceMatrix,
    k: usize,
    variant: IlpVariant,
) -> Result<Vec<Vec<usize>>, IlpError> {
    let n = dm.vertex_count();
    if n > ENUMERATION_LIMIT {
        return Err(IlpError::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let model = match variant {
        IlpVariant::F => build_f(dm, k)?,
        IlpVariant::FA => build_fa(dm, k)?,
        IlpVariant::FX => build_exactness_extension(&build_f(dm, k)?),
    };
    let mut feasible = Vec::new();
    for mask in 1u64..((1 << n) - 1) {
        let subject: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let partition =
            crate::antiresolution::partition_by_rs(dm, &subject).expect("proper non-empty subject");
        let mut a = encode_ars(&subject, &partition);
        if variant == IlpVariant::FX {
            a = with_exactness_flags(a, &partition, k);
        }
        if validate(&model, &a)?.is_feasible() {
            feasible.push(subject);
        }
    }
    feasible.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(feasible)
}

/// Renders the model as deterministic LP text.
pub fn emit_lp(model: &IlpModel) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\ antidim {} k={} n={}",
        model.variant.as_str(),
        model.k,
        model.n
    );
    out.push_str("Minimize\n");
    out.push_str(" obj:");
    render_terms(
        &mut out,
        &(1..=model.n).map(|u| (1, Var::S(u))).collect::<Vec<_>>(),
    );
    out.push('\n');
    out.push_str("Subject To\n");
    for c in &model.constraints {
        let _ = write!(out, " {}:", c.name);
        render_terms(&mut out, &c.terms);
        let _ = writeln!(out, " {} {}", c.op.as_str(), c.rhs);
    }
    out.push_str("Binaries\n");
    for var in model.variables() {
        let _ = writeln!(out, " {}", var.name());
    }
    out.push_str("End\n");
    out
}

fn render_terms(out: &mut String, terms: &[(i64, Var)]) {
    for (idx, &(coeff, var)) in terms.iter().enumerate() {
        if coeff < 0 {
            out.push_str(" -");
        } else if idx > 0 {
            out.push_str(" +");
        }
        if coeff.unsigned_abs() != 1 {
            let _ = write!(out, " {}", coeff.unsigned_abs());
        }
        let _ = write!(out, " {}", var.name());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antiresolution::{k_of, partition_by_rs};
    use crate::families::{build_family, cycle, path, FamilySpec};
    use crate::graph::Graph;
    use crate::instances::{gen_dense, gen_tree, GenSpec};

    fn dm_of(g: &Graph) -> DistanceMatrix {
        g.all_pairs_distances().unwrap()
    }

    #[test]
    fn variable_counts() {
        let dm = dm_of(&path(3).unwrap());
        let model = build_f(&dm, 1).unwrap();
        assert_eq!(model.variable_count(), 9);
        let dm5 = dm_of(&path(5).unwrap());
        assert_eq!(build_f(&dm5, 2).unwrap().variable_count(), 20);
        assert_eq!(
            build_exactness_extension(&build_f(&dm5, 2).unwrap()).variable_count(),
            25
        );
    }

    #[test]
    fn incompatibility_family_on_p3() {
        let dm = dm_of(&path(3).unwrap());
        let model = build_f(&dm, 1).unwrap();
        // independent count of the qualifying triples
        let mut count = 0;
        for u in 1..=3usize {
            for v in 1..=3usize {
                for w in (v + 1)..=3usize {
                    if u != v && dm.dist(u, v) != dm.dist(u, w) {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 5);
        assert_eq!(model.family_size("inc_"), 5);
    }

    #[test]
    fn incompatibility_family_is_bounded_on_a_dense_instance() {
        let g = gen_dense(&GenSpec::dense(50, 45, 1)).unwrap();
        let dm = dm_of(&g);
        let model = build_f(&dm, 2).unwrap();
        let n: usize = 50;
        let bound = (n - 2) * n * (n - 1) / 2;
        let actual = model.family_size("inc_");
        assert!(actual <= bound, "{actual} > {bound}");
        // the distance filter really removes rows on a diameter-2 graph
        assert!(actual < bound);
    }

    #[test]
    fn aggregated_family_on_p3_and_c4() {
        let dm = dm_of(&path(3).unwrap());
        let model = build_fa(&dm, 1).unwrap();
        assert_eq!(model.family_size("agg_"), 3);
        assert_eq!(model.family_size("inc_"), 0);

        let dm4 = dm_of(&cycle(4).unwrap());
        let model4 = build_fa(&dm4, 1).unwrap();
        let agg13 = model4
            .constraints
            .iter()
            .find(|c| c.name == "agg_1_3")
            .unwrap();
        assert_eq!(
            agg13.terms,
            vec![(1, Var::S(1)), (1, Var::S(3)), (4, Var::Q(1, 3))]
        );
        assert_eq!(agg13.op, Op::Le);
        assert_eq!(agg13.rhs, 4);
    }

    #[test]
    fn constraint_families_present() {
        let dm = dm_of(&cycle(5).unwrap());
        for (model, pair_family) in [
            (build_f(&dm, 2).unwrap(), "inc_"),
            (build_fa(&dm, 2).unwrap(), "agg_"),
        ] {
            assert_eq!(model.family_size("nonempty"), 1);
            assert_eq!(model.family_size("part_"), 5);
            assert_eq!(model.family_size("card_"), 5);
            assert_eq!(model.family_size("max_"), 10);
            assert!(model.family_size(pair_family) > 0);
        }
        let fx = build_exactness_extension(&build_fa(&dm, 2).unwrap());
        assert_eq!(fx.family_size("exa_"), 5);
        assert_eq!(fx.family_size("exb_"), 5);
        assert_eq!(fx.family_size("exc"), 1);
    }

    #[test]
    fn encode_c4_single_vertex() {
        let dm = dm_of(&cycle(4).unwrap());
        let p = partition_by_rs(&dm, &[1]).unwrap();
        let a = encode_ars(&[1], &p);
        assert_eq!(a.s, vec![true, false, false, false]);
        let n = 4;
        let mut expect_q = vec![false; 10];
        expect_q[q_index(n, 2, 2)] = true;
        expect_q[q_index(n, 2, 4)] = true;
        expect_q[q_index(n, 3, 3)] = true;
        assert_eq!(a.q, expect_q);
    }

    #[test]
    fn encode_p3_middle_vertex() {
        let dm = dm_of(&path(3).unwrap());
        let p = partition_by_rs(&dm, &[2]).unwrap();
        let a = encode_ars(&[2], &p);
        assert!(a.q[q_index(3, 1, 1)]);
        assert!(a.q[q_index(3, 1, 3)]);
        assert_eq!(a.q.iter().filter(|&&b| b).count(), 2);
    }

    #[test]
    fn decode_zero_and_round_trips() {
        assert_eq!(decode(&Assignment::zero(4)), (vec![], vec![]));

        let dm = dm_of(&cycle(4).unwrap());
        let p = partition_by_rs(&dm, &[1]).unwrap();
        let (subject, classes) = decode(&encode_ars(&[1], &p));
        assert_eq!(subject, vec![1]);
        assert_eq!(classes, vec![vec![2, 4], vec![3]]);

        // exhaustive round trip on two small graphs
        for g in [
            cycle(6).unwrap(),
            gen_tree(&GenSpec::tree(8, 3, 2)).unwrap(),
        ] {
            let dm = dm_of(&g);
            let n = g.vertex_count();
            for mask in 1u64..((1 << n) - 1) {
                let subject: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let p = partition_by_rs(&dm, &subject).unwrap();
                let (s2, classes) = decode(&encode_ars(&subject, &p));
                assert_eq!(s2, subject);
                assert_eq!(classes, p.classes);
            }
        }
    }

    #[test]
    fn all_zero_assignment_violations() {
        let dm = dm_of(&path(3).unwrap());
        let model = build_f(&dm, 1).unwrap();
        let report = validate(&model, &Assignment::zero(3)).unwrap();
        assert!(report.violated.contains(&"nonempty".to_string()));
        for u in 1..=3 {
            assert!(report.violated.contains(&format!("part_{u}")));
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let dm = dm_of(&path(3).unwrap());
        let model = build_f(&dm, 1).unwrap();
        let bad = Assignment {
            s: vec![false; 2],
            q: vec![false; 6],
            e: vec![],
        };
        assert!(matches!(
            validate(&model, &bad),
            Err(IlpError::DimensionMismatch(_))
        ));
        let bad_e = Assignment {
            s: vec![false; 3],
            q: vec![false; 6],
            e: vec![false; 3],
        };
        assert!(matches!(
            validate(&model, &bad_e),
            Err(IlpError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn torus_single_vertex_is_feasible_for_k3_under_the_base_model() {
        // the minimum class size of a single torus vertex is 4, so the
        // at-least-3 base model accepts it even though no class has size 3
        let g = build_family(&FamilySpec::torus(5, 5).unwrap()).unwrap();
        let dm = dm_of(&g);
        let p = partition_by_rs(&dm, &[1]).unwrap();
        let a = encode_ars(&[1], &p);
        let model = build_f(&dm, 3).unwrap();
        assert!(validate(&model, &a).unwrap().is_feasible());
    }

    #[test]
    fn exactness_extension_rejects_the_gap_witness() {
        let g = build_family(&FamilySpec::torus(5, 5).unwrap()).unwrap();
        let dm = dm_of(&g);
        let p = partition_by_rs(&dm, &[1]).unwrap();
        let base = encode_ars(&[1], &p);
        let fx = build_exactness_extension(&build_f(&dm, 3).unwrap());
        let n = g.vertex_count();

        // no indicator choice rescues the assignment: all-zero breaks the
        // cover row, and switching on any single e_u breaks its own rows; a
        // larger support only adds the same per-vertex violations
        let mut zero_e = base.clone();
        zero_e.e = vec![false; n];
        assert!(!validate(&fx, &zero_e).unwrap().is_feasible());
        for u in 1..=n {
            let mut one = base.clone();
            one.e = vec![false; n];
            one.e[u - 1] = true;
            let report = validate(&fx, &one).unwrap();
            assert!(report
                .violated
                .iter()
                .any(|name| *name == format!("exa_{u}") || *name == format!("exb_{u}")));
        }

        // with k = 4 the canonical indicators make the witness feasible
        let p4 = partition_by_rs(&dm, &[1]).unwrap();
        let fx4 = build_exactness_extension(&build_f(&dm, 4).unwrap());
        let a4 = with_exactness_flags(encode_ars(&[1], &p4), &p4, 4);
        assert!(validate(&fx4, &a4).unwrap().is_feasible());
    }

    #[test]
    fn exact_ars_encodings_are_feasible() {
        // the complete direction: every subject set with min class size >= k
        // encodes to a feasible point of both base models
        let graphs = [
            path(5).unwrap(),
            cycle(6).unwrap(),
            gen_tree(&GenSpec::tree(7, 3, 4)).unwrap(),
        ];
        for g in &graphs {
            let dm = dm_of(g);
            let n = g.vertex_count();
            for k in 1..=3usize {
                let f = build_f(&dm, k).unwrap();
                let fa = build_fa(&dm, k).unwrap();
                for mask in 1u64..((1 << n) - 1) {
                    let subject: Vec<usize> =
                        (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    let p = partition_by_rs(&dm, &subject).unwrap();
                    let a = encode_ars(&subject, &p);
                    let expect = p.min_class_size >= k;
                    assert_eq!(validate(&f, &a).unwrap().is_feasible(), expect);
                    assert_eq!(validate(&fa, &a).unwrap().is_feasible(), expect);
                }
            }
        }
    }

    /// Whether every used row contains its own representative, the
    /// convention the variable semantics assume.
    fn representative_closed(n: usize, q: &[bool]) -> bool {
        (1..=n).all(|u| q[q_index(n, u, u)] || ((u + 1)..=n).all(|v| !q[q_index(n, u, v)]))
    }

    #[test]
    fn forced_q_completion_is_unique_among_closed_rows() {
        // for a fixed subject set, the q block has exactly one feasible
        // completion respecting the representative convention when the set
        // qualifies, and none otherwise; it is the canonical encoding
        for g in [path(4).unwrap(), cycle(5).unwrap()] {
            let dm = dm_of(&g);
            let n = g.vertex_count();
            let qlen = n * (n + 1) / 2;
            for k in 1..=2usize {
                let model = build_f(&dm, k).unwrap();
                for mask in 1u64..((1 << n) - 1) {
                    let subject: Vec<usize> =
                        (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    let p = partition_by_rs(&dm, &subject).unwrap();
                    let canonical = encode_ars(&subject, &p);
                    let mut feasible_qs = Vec::new();
                    for qmask in 0u64..(1 << qlen) {
                        let q: Vec<bool> = (0..qlen).map(|i| qmask >> i & 1 == 1).collect();
                        if !representative_closed(n, &q) {
                            continue;
                        }
                        let a = Assignment {
                            s: canonical.s.clone(),
                            q,
                            e: vec![],
                        };
                        if validate(&model, &a).unwrap().is_feasible() {
                            feasible_qs.push(a.q);
                        }
                    }
                    if p.min_class_size >= k {
                        assert_eq!(
                            feasible_qs,
                            vec![canonical.q.clone()],
                            "subject {subject:?}"
                        );
                    } else {
                        assert!(feasible_qs.is_empty(), "subject {subject:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn plain_model_admits_phantom_rows_but_the_aggregated_one_does_not() {
        // a row keyed by a subject vertex whose diagonal flag is off slips
        // past the plain incompatibility triples (they skip u = v), hiding
        // every other vertex in one unchecked row; the aggregated rows sum
        // over all distinguishing vertices including the key itself, so the
        // same point violates them
        let dm = dm_of(&path(4).unwrap());
        let n = 4;
        let mut phantom = Assignment::zero(n);
        phantom.s[0] = true;
        for v in 2..=n {
            phantom.q[q_index(n, 1, v)] = true;
        }
        for k in [1usize, 2, 3] {
            let f = build_f(&dm, k).unwrap();
            assert!(validate(&f, &phantom).unwrap().is_feasible(), "k={k}");
            let fa = build_fa(&dm, k).unwrap();
            assert!(!validate(&fa, &phantom).unwrap().is_feasible(), "k={k}");
        }
    }

    #[test]
    fn aggregated_model_is_sound_over_arbitrary_assignments() {
        // exhaustive sweep of every 0/1 point: the aggregated model accepts
        // exactly the canonical encodings of qualifying subject sets, plus
        // one degenerate point nothing in the constraints rules out: every
        // vertex in the subject set and no classes at all (it can never be
        // optimal when a real solution exists, since its objective is n)
        for g in [path(4).unwrap(), cycle(4).unwrap()] {
            let dm = dm_of(&g);
            let n = g.vertex_count();
            let qlen = n * (n + 1) / 2;
            for k in 1..=2usize {
                let model = build_fa(&dm, k).unwrap();
                let mut accepted: Vec<Assignment> = Vec::new();
                for mask in 1u64..((1 << n) - 1) {
                    let subject: Vec<usize> =
                        (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    let p = partition_by_rs(&dm, &subject).unwrap();
                    if p.min_class_size >= k {
                        accepted.push(encode_ars(&subject, &p));
                    }
                }
                accepted.push(Assignment {
                    s: vec![true; n],
                    q: vec![false; qlen],
                    e: vec![],
                });
                for smask in 0u64..(1 << n) {
                    for qmask in 0u64..(1 << qlen) {
                        let a = Assignment {
                            s: (0..n).map(|i| smask >> i & 1 == 1).collect(),
                            q: (0..qlen).map(|i| qmask >> i & 1 == 1).collect(),
                            e: vec![],
                        };
                        let feasible = validate(&model, &a).unwrap().is_feasible();
                        assert_eq!(feasible, accepted.contains(&a), "k={k} point {a:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_the_partition_oracle() {
        let graphs = [
            cycle(4).unwrap(),
            path(3).unwrap(),
            path(6).unwrap(),
            build_family(&FamilySpec::grid(2, 3).unwrap()).unwrap(),
            gen_tree(&GenSpec::tree(7, 3, 9)).unwrap(),
        ];
        for g in &graphs {
            let dm = dm_of(g);
            let n = g.vertex_count();
            for k in 1..=3usize {
                let from_f = enumerate_feasible_sets(&dm, k, IlpVariant::F).unwrap();
                let from_fa = enumerate_feasible_sets(&dm, k, IlpVariant::FA).unwrap();
                let mut direct: Vec<Vec<usize>> = (1u64..((1 << n) - 1))
                    .map(|mask| {
                        (1..=n)
                            .filter(|v| mask >> (v - 1) & 1 == 1)
                            .collect::<Vec<_>>()
                    })
                    .filter(|s| k_of(&dm, s).unwrap() >= k)
                    .collect();
                direct.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                assert_eq!(from_f, direct);
                assert_eq!(from_fa, direct);
            }
        }
    }

    #[test]
    fn enumeration_examples_and_guard() {
        let dm = dm_of(&cycle(4).unwrap());
        assert_eq!(
            enumerate_feasible_sets(&dm, 1, IlpVariant::F)
                .unwrap()
                .len(),
            14
        );
        let p3 = dm_of(&path(3).unwrap());
        assert_eq!(
            enumerate_feasible_sets(&p3, 2, IlpVariant::F).unwrap(),
            vec![vec![2]]
        );
        let big = dm_of(&path(15).unwrap());
        assert!(matches!(
            enumerate_feasible_sets(&big, 1, IlpVariant::F),
            Err(IlpError::TooLarge { n: 15, .. })
        ));
    }

    #[test]
    fn exactness_enumeration_matches_exact_semantics() {
        let g = build_family(&FamilySpec::grid(2, 3).unwrap()).unwrap();
        let dm = dm_of(&g);
        let n = g.vertex_count();
        for k in 1..=3usize {
            let from_fx = enumerate_feasible_sets(&dm, k, IlpVariant::FX).unwrap();
            let mut direct: Vec<Vec<usize>> = (1u64..((1 << n) - 1))
                .map(|mask| {
                    (1..=n)
                        .filter(|v| mask >> (v - 1) & 1 == 1)
                        .collect::<Vec<_>>()
                })
                .filter(|s| k_of(&dm, s).unwrap() == k)
                .collect();
            direct.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            assert_eq!(from_fx, direct);
        }
    }

    #[test]
    fn lp_text_golden_for_p3() {
        let dm = dm_of(&path(3).unwrap());
        let model = build_f(&dm, 1).unwrap();
        let expected = "\\ antidim F k=1 n=3\n\
                        Minimize\n\
                        \x20obj: s_1 + s_2 + s_3\n\
                        Subject To\n\
                        \x20nonempty: s_1 + s_2 + s_3 >= 1\n\
                        \x20part_1: s_1 + q_1_1 = 1\n\
                        \x20part_2: s_2 + q_1_2 + q_2_2 = 1\n\
                        \x20part_3: s_3 + q_1_3 + q_2_3 + q_3_3 = 1\n\
                        \x20card_1: q_1_2 + q_1_3 + 0 q_1_1 >= 0\n\
                        \x20card_2: q_2_3 + 0 q_2_2 >= 0\n\
                        \x20card_3: 0 q_3_3 >= 0\n\
                        \x20inc_1_2_3: s_1 + q_2_3 <= 1\n\
                        \x20inc_2_1_2: s_2 + q_1_2 <= 1\n\
                        \x20inc_3_1_2: s_3 + q_1_2 <= 1\n\
                        \x20inc_3_1_3: s_3 + q_1_3 <= 1\n\
                        \x20inc_3_2_3: s_3 + q_2_3 <= 1\n\
                        \x20max_1_2: s_2 + s_3 - q_1_1 + q_1_2 >= 0\n\
                        \x20max_1_3: s_3 - q_1_1 + q_1_3 >= 0\n\
                        \x20max_2_3: s_1 + s_3 - q_2_2 + q_2_3 >= 0\n\
                        Binaries\n\
                        \x20s_1\n\
                        \x20s_2\n\
                        \x20s_3\n\
                        \x20q_1_1\n\
                        \x20q_1_2\n\
                        \x20q_1_3\n\
                        \x20q_2_2\n\
                        \x20q_2_3\n\
                        \x20q_3_3\n\
                        End\n";
        assert_eq!(emit_lp(&model), expected);
    }

    #[test]
    fn lp_card_line_with_k3() {
        let dm = dm_of(&path(3).unwrap());
        let model = build_f(&dm, 3).unwrap();
        let text = emit_lp(&model);
        assert!(text.contains(" card_1: q_1_2 + q_1_3 - 2 q_1_1 >= 0\n"));
    }

    #[test]
    fn lp_emission_is_byte_stable() {
        let dm = dm_of(&build_family(&FamilySpec::torus(3, 4).unwrap()).unwrap());
        let model = build_fa(&dm, 2).unwrap();
        assert_eq!(emit_lp(&model), emit_lp(&model));
        let fx = build_exactness_extension(&model);
        let text = emit_lp(&fx);
        assert!(text.starts_with("\\ antidim FX k=2 n=12\n"));
        assert!(text.contains(" exc: e_1 + e_2 +"));
    }

    #[test]
    fn invalid_k_is_rejected() {
        let dm = dm_of(&path(3).unwrap());
        assert_eq!(build_f(&dm, 0).unwrap_err(), IlpError::InvalidK);
        assert_eq!(build_fa(&dm, 0).unwrap_err(), IlpError::InvalidK);
    }
}
