//! Relative commutators `[M,N]_B` and the sweeps comparing their
//! constructions.
//!
//! Three independent computations are provided:
//! - [`relcomm_words`]: the ideal of `M·N` generated by
//!   `w(mn) w(n)^-1 w(m)^-1 w(p)` for groups;
//! - [`relcomm_loops`]: the associator subloop `[M,N,M·N]` for loops
//!   relative to groups;
//! - [`relcomm_oracle`]: the least ideal `J` of `M·N` for which the square
//!   `M·N -> (M·N)/M, (M·N)/N -> 0` becomes double central modulo `J`.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraRef, Elem, Kind, Subalgebra, ONE};
use crate::budget::{pow, Budget};
use crate::congruence::{congruence_generated, CongruenceBuilder};
use crate::error::{Error, Result};
use crate::galois::{double_central_verdicts, DoubleExtension};
use crate::hom::quotient;
use crate::ideal::{ideal_closure, ideal_closure_iter, image_ideal, product_ideal, same_parent, Ideal};
use crate::varieties::{for_each_tuple, verbal_subobject_with, VarietyDescriptor};

/// A commutator computed inside an ambient subalgebra (`M·N` or `L·M·N`).
#[derive(Clone, Debug)]
pub struct Commutator {
    ambient: Subalgebra,
    ideal: Ideal,
}

impl Commutator {
    /// The ambient subalgebra of the parent.
    pub fn ambient(&self) -> &Subalgebra {
        &self.ambient
    }

    /// The commutator as an ideal of the ambient algebra.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Members as sorted elements of the parent algebra.
    pub fn members(&self) -> Vec<Elem> {
        self.ideal.members().iter().map(|&e| self.ambient.embed(e)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.ideal.is_trivial()
    }

    pub fn len(&self) -> usize {
        self.ideal.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Every ideal of `alg`, sorted by size and then by members.
///
/// Starts from the principal ideals generated by single elements and closes
/// under joins and meets.
pub fn ideal_lattice(alg: &AlgebraRef, budget: Budget) -> Result<Vec<Ideal>> {
    budget.check("ideal lattice", 2, pow(alg.order(), 2))?;
    let mut found: BTreeMap<Vec<Elem>, Ideal> = BTreeMap::new();
    for x in alg.elements() {
        let j = Ideal::from_congruence(congruence_generated(alg, &[(x, ONE)]));
        found.entry(j.members().to_vec()).or_insert(j);
    }
    loop {
        let current: Vec<Ideal> = found.values().cloned().collect();
        let mut added = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let join = ideal_closure_iter(alg, a.members().iter().chain(b.members()).copied());
                let meet = a.intersection(b)?;
                for j in [join, meet] {
                    if !found.contains_key(j.members()) {
                        found.insert(j.members().to_vec(), j);
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut all: Vec<Ideal> = found.into_values().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    Ok(all)
}

/// `M·N` as an algebra, with `M`, `N` and `M ∩ N` located inside it.
struct Ambient {
    x: Subalgebra,
    m: Ideal,
    n: Ideal,
    meet: Vec<Elem>,
}

fn ambient(m: &Ideal, n: &Ideal) -> Result<Ambient> {
    let join = product_ideal(m, n)?;
    let x = Subalgebra::new_unchecked(m.parent(), join.members().to_vec());
    let locate = |members: &[Elem]| -> Vec<Elem> { members.iter().map(|&e| x.locate(e).unwrap()).collect() };
    let xa = x.algebra().clone();
    let m_in = Ideal::from_members(&xa, &locate(m.members()))?;
    let n_in = Ideal::from_members(&xa, &locate(n.members()))?;
    let meet = locate(m.intersection(n)?.members());
    Ok(Ambient {
        x,
        m: m_in,
        n: n_in,
        meet,
    })
}

/// Options for [`relcomm_words_with`].
#[derive(Clone, Copy, Debug)]
pub struct WordOptions {
    /// Keep the `w(p)` factor; turning it off is a diagnostic mode.
    pub p_factor: bool,
    pub budget: Budget,
}

impl Default for WordOptions {
    fn default() -> Self {
        WordOptions {
            p_factor: true,
            budget: Budget::default(),
        }
    }
}

/// `[M,N]_B` from word values, for groups.
pub fn relcomm_words(m: &Ideal, n: &Ideal, v: &VarietyDescriptor) -> Result<Commutator> {
    relcomm_words_with(m, n, v, WordOptions::default())
}

/// The ideal of `M·N` generated by `w(mn) w(n)^-1 w(m)^-1 w(p)` for
/// `m in M^r`, `n in N^r`, `p in (M∩N)^r`.
///
/// Since `w(1,..,1) = 1`, this is the ideal generated by the values
/// `w(mn) w(n)^-1 w(m)^-1` together with the values `w(p)`. Both families
/// are evaluated on representatives of the current quotient of `M·N`,
/// repeating until a pass adds nothing; once the quotient satisfies every
/// word all generators vanish and the scan stops. The budget counts the
/// argument tuples actually scanned.
pub fn relcomm_words_with(m: &Ideal, n: &Ideal, v: &VarietyDescriptor, opts: WordOptions) -> Result<Commutator> {
    same_parent(m, n)?;
    let parent = m.parent();
    if parent.kind() != Kind::Group {
        return Err(Error::KindUnsupported {
            kind: parent.kind(),
            what: "word commutators are defined for groups; use the associator construction for loops",
        });
    }
    v.check_kind(parent)?;
    let amb = ambient(m, n)?;
    let xa = amb.x.algebra().clone();
    let verbal = verbal_subobject_with(&xa, v, opts.budget)?;
    let mut b = CongruenceBuilder::new(&xa);
    let mut spent: u128 = 0;
    let mut stack = Vec::new();

    let class_reps = |b: &mut CongruenceBuilder, members: &[Elem]| -> Vec<Elem> {
        let mut seen = std::collections::HashSet::new();
        members.iter().copied().filter(|&e| seen.insert(b.find(e))).collect()
    };

    loop {
        if b.is_total() || verbal.members().iter().all(|&e| b.same(e, ONE)) {
            break;
        }
        let mut changed = false;
        for prog in v.programs() {
            let r = prog.arity();
            let m_reps = class_reps(&mut b, amb.m.members());
            let n_reps = class_reps(&mut b, amb.n.members());
            let p_reps = class_reps(&mut b, &amb.meet);
            let mut estimate = pow(m_reps.len(), r).saturating_mul(pow(n_reps.len(), r));
            if opts.p_factor {
                estimate = estimate.saturating_add(pow(p_reps.len(), r));
            }
            spent = spent.saturating_add(estimate);
            opts.budget.check("word commutator", r, spent)?;

            let mut record = |b: &mut CongruenceBuilder, value: Elem| -> ControlFlow<()> {
                if !b.same(value, ONE) {
                    b.merge(value, ONE);
                    changed = true;
                    if b.is_total() {
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            };

            if opts.p_factor {
                let flow = for_each_tuple(&p_reps, r, |p| {
                    let value = prog.eval(&xa, p, &mut stack);
                    record(&mut b, value)
                });
                if flow.is_break() {
                    break;
                }
            }
            let mut mn = vec![ONE; r];
            let mut inner = Vec::new();
            let flow = for_each_tuple(&m_reps, r, |mt| {
                let wm_inv = xa.inv(prog.eval(&xa, mt, &mut stack));
                for_each_tuple(&n_reps, r, |nt| {
                    for i in 0..r {
                        mn[i] = xa.mul(mt[i], nt[i]);
                    }
                    let wmn = prog.eval(&xa, &mn, &mut inner);
                    let wn = prog.eval(&xa, nt, &mut inner);
                    let value = xa.mul(xa.mul(wmn, xa.inv(wn)), wm_inv);
                    record(&mut b, value)
                })
            });
            if flow.is_break() {
                break;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(Commutator {
        ideal: Ideal::from_congruence(b.finish()),
        ambient: amb.x,
    })
}

/// `[L,M,N]`: the ideal of `L·M·N` generated by the associators of every
/// permutation of every triple in `L x M x N`.
pub fn associator_subloop(l: &Ideal, m: &Ideal, n: &Ideal) -> Result<Commutator> {
    same_parent(l, m)?;
    same_parent(m, n)?;
    let parent = l.parent();
    let join = product_ideal(&product_ideal(m, n)?, l)?;
    let x = Subalgebra::new_unchecked(parent, join.members().to_vec());
    let mut values = vec![false; parent.order()];
    for &a in l.members() {
        for &b in m.members() {
            for &c in n.members() {
                for (p, q, r) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    values[parent.associator(p, q, r) as usize] = true;
                }
            }
        }
    }
    let seeds = parent
        .elements()
        .filter(|&e| values[e as usize])
        .map(|e| x.locate(e).expect("associators of L·M·N lie in L·M·N"));
    let ideal = ideal_closure_iter(x.algebra(), seeds);
    Ok(Commutator { ambient: x, ideal })
}

/// `[M,N,M·N]`, the commutator of loops relative to groups.
pub fn relcomm_loops(m: &Ideal, n: &Ideal) -> Result<Commutator> {
    same_parent(m, n)?;
    if m.parent().kind() != Kind::Loop {
        return Err(Error::KindUnsupported {
            kind: m.parent().kind(),
            what: "the associator commutator is for loops; view the group as a loop first",
        });
    }
    let mn = product_ideal(m, n)?;
    associator_subloop(m, n, &mn)
}

/// One candidate ideal examined by the oracle.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCandidate {
    /// Members of `J` as elements of the parent algebra.
    pub members: Vec<Elem>,
    /// Pullback verdicts of the four induced squares modulo `J`.
    pub verdicts: [bool; 4],
}

impl OracleCandidate {
    pub fn agrees(&self) -> bool {
        self.verdicts.iter().all(|&b| b == self.verdicts[0])
    }

    pub fn passes(&self) -> bool {
        self.verdicts[0]
    }
}

/// The oracle's answer with every candidate it examined.
#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub commutator: Commutator,
    pub candidates: Vec<OracleCandidate>,
}

impl OracleOutcome {
    /// Candidates whose four corner verdicts differ.
    pub fn disagreements(&self) -> usize {
        self.candidates.iter().filter(|c| !c.agrees()).count()
    }
}

/// `[M,N]_B` as the least ideal `J` of `M·N` making the quotient square
/// double central; fails on any corner disagreement.
pub fn relcomm_oracle(m: &Ideal, n: &Ideal, v: &VarietyDescriptor, budget: Budget) -> Result<Commutator> {
    let outcome = relcomm_oracle_detailed(m, n, v, budget)?;
    if let Some(c) = outcome.candidates.iter().find(|c| !c.agrees()) {
        return Err(Error::SquareDisagreement { verdicts: c.verdicts });
    }
    Ok(outcome.commutator)
}

/// Runs the double-central test modulo every ideal `J` of `M·N` and
/// returns the intersection of the passing ones, which must pass itself.
pub fn relcomm_oracle_detailed(
    m: &Ideal,
    n: &Ideal,
    v: &VarietyDescriptor,
    budget: Budget,
) -> Result<OracleOutcome> {
    same_parent(m, n)?;
    v.check_kind(m.parent())?;
    let amb = ambient(m, n)?;
    let xa = amb.x.algebra().clone();
    let lattice = ideal_lattice(&xa, budget)?;
    let mut candidates = Vec::with_capacity(lattice.len());
    let mut passing: Option<Ideal> = None;
    let mut passed_members = Vec::new();
    for j in &lattice {
        let (y, q) = quotient(&xa, j.witness())?;
        let m_img = image_ideal(&y, amb.m.members().iter().map(|&e| q.apply(e)))?;
        let n_img = image_ideal(&y, amb.n.members().iter().map(|&e| q.apply(e)))?;
        let (sq, _) = DoubleExtension::of_ideals(&m_img, &n_img)?;
        let verdicts = double_central_verdicts(&sq, v, budget)?;
        let candidate = OracleCandidate {
            members: j.members().iter().map(|&e| amb.x.embed(e)).collect(),
            verdicts,
        };
        if candidate.passes() {
            passed_members.push(j.members().to_vec());
            passing = Some(match passing {
                None => j.clone(),
                Some(p) => p.intersection(j)?,
            });
        }
        candidates.push(candidate);
    }
    // Every ideal is in the lattice, so the intersection passes iff it was
    // itself recorded as passing.
    let least = passing.ok_or(Error::NoCentralizingIdeal)?;
    if !passed_members.iter().any(|p| p == least.members()) {
        return Err(Error::NoCentralizingIdeal);
    }
    Ok(OracleOutcome {
        commutator: Commutator {
            ambient: amb.x,
            ideal: least,
        },
        candidates,
    })
}

/// One ordered ideal pair in a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub m: Vec<Elem>,
    pub n: Vec<Elem>,
    /// The commutator from words (groups) or associators (loops).
    pub commutator: Vec<Elem>,
    pub commutator_zero: bool,
    pub double_extension: bool,
    pub square_verdicts: [bool; 4],
    pub double_central: bool,
    pub agree: bool,
}

/// Result of checking "`[M,N]_B` is zero iff the square is double central"
/// on every ordered ideal pair of one algebra.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub algebra: String,
    pub variety: String,
    pub pairs: Vec<PairReport>,
    pub disagreements: usize,
    /// Pairs whose four corner verdicts differ.
    pub corner_disagreements: usize,
}

fn commutator_by_construction(m: &Ideal, n: &Ideal, v: &VarietyDescriptor, budget: Budget) -> Result<Commutator> {
    match m.parent().kind() {
        Kind::Group => relcomm_words_with(m, n, v, WordOptions { p_factor: true, budget }),
        Kind::Loop if v.name() == "Gp" && v.is_builtin() => relcomm_loops(m, n),
        Kind::Loop => Err(Error::KindUnsupported {
            kind: Kind::Loop,
            what: "loop commutators are computed relative to Gp only",
        }),
    }
}

/// For every ordered pair of ideals: the square is a double extension, and
/// the commutator vanishes exactly when the square is double central.
pub fn theorem31_sweep(id: &str, alg: &AlgebraRef, v: &VarietyDescriptor, budget: Budget) -> Result<SweepReport> {
    v.check_kind(alg)?;
    let lattice = ideal_lattice(alg, budget)?;
    let pairs: Vec<(usize, usize)> = (0..lattice.len())
        .flat_map(|i| (0..lattice.len()).map(move |j| (i, j)))
        .collect();
    let pairs = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (m, n) = (&lattice[i], &lattice[j]);
            let commutator = commutator_by_construction(m, n, v, budget)?;
            let (sq, _) = DoubleExtension::of_ideals(m, n)?;
            let double_extension = sq.is_double_extension();
            let verdicts = double_central_verdicts(&sq, v, budget)?;
            let corners_agree = verdicts.iter().all(|&b| b == verdicts[0]);
            Ok(PairReport {
                m: m.members().to_vec(),
                n: n.members().to_vec(),
                commutator: commutator.members(),
                commutator_zero: commutator.is_trivial(),
                double_extension,
                square_verdicts: verdicts,
                double_central: verdicts[0],
                agree: double_extension && corners_agree && commutator.is_trivial() == verdicts[0],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        algebra: id.to_string(),
        variety: v.name().to_string(),
        disagreements: pairs.iter().filter(|p| !p.agree).count(),
        corner_disagreements: pairs.iter().filter(|p| p.square_verdicts.iter().any(|&b| b != p.square_verdicts[0])).count(),
        pairs,
    })
}

/// One ordered pair of normal subloops compared across constructions.
#[derive(Clone, Debug, Serialize)]
pub struct LoopPairReport {
    pub m: Vec<Elem>,
    pub n: Vec<Elem>,
    pub associator: Vec<Elem>,
    pub oracle: Vec<Elem>,
    /// Oracle candidates whose four corner verdicts differ.
    pub corner_disagreements: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LoopSweepReport {
    pub algebra: String,
    pub pairs: Vec<LoopPairReport>,
    pub disagreements: usize,
}

/// `[M,N,M·N]` against the oracle relative to `Gp`, for every ordered pair
/// of normal subloops.
pub fn loop_commutator_sweep(id: &str, alg: &AlgebraRef, budget: Budget) -> Result<LoopSweepReport> {
    let gp = VarietyDescriptor::gp();
    let lattice = ideal_lattice(alg, budget)?;
    let mut pairs = Vec::new();
    for m in &lattice {
        for n in &lattice {
            let assoc = relcomm_loops(m, n)?;
            let oracle = relcomm_oracle_detailed(m, n, &gp, budget)?;
            let (a, o) = (assoc.members(), oracle.commutator.members());
            let corner_disagreements = oracle.disagreements();
            pairs.push(LoopPairReport {
                m: m.members().to_vec(),
                n: n.members().to_vec(),
                agree: a == o && corner_disagreements == 0,
                associator: a,
                oracle: o,
                corner_disagreements,
            });
        }
    }
    Ok(LoopSweepReport {
        algebra: id.to_string(),
        disagreements: pairs.iter().filter(|p| !p.agree).count(),
        pairs,
    })
}

/// Pairs `(M,N) ⊆ (M',N')` whose oracle commutators are not nested.
/// Containment is not claimed in general, so violations are reported, not
/// treated as failures.
pub fn monotonicity_violations(
    alg: &AlgebraRef,
    v: &VarietyDescriptor,
    budget: Budget,
) -> Result<Vec<(Vec<Elem>, Vec<Elem>, Vec<Elem>, Vec<Elem>)>> {
    let lattice = ideal_lattice(alg, budget)?;
    let mut results = BTreeMap::new();
    for (i, m) in lattice.iter().enumerate() {
        for (j, n) in lattice.iter().enumerate() {
            results.insert((i, j), relcomm_oracle(m, n, v, budget)?.members());
        }
    }
    let mut out = Vec::new();
    for (i, m) in lattice.iter().enumerate() {
        for (j, n) in lattice.iter().enumerate() {
            for (i2, m2) in lattice.iter().enumerate() {
                for (j2, n2) in lattice.iter().enumerate() {
                    if (i, j) == (i2, j2) || !m.is_subset(m2) || !n.is_subset(n2) {
                        continue;
                    }
                    let small = &results[&(i, j)];
                    let big = &results[&(i2, j2)];
                    if !small.iter().all(|e| big.binary_search(e).is_ok()) {
                        out.push((m.members().to_vec(), n.members().to_vec(), m2.members().to_vec(), n2.members().to_vec()));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The ideal of `A` generated by `{m n m^-1 n^-1}`; the classical
/// commutator of normal subgroups.
pub fn classical_commutator(m: &Ideal, n: &Ideal) -> Result<Ideal> {
    same_parent(m, n)?;
    let a = m.parent();
    if a.kind() != Kind::Group {
        return Err(Error::KindUnsupported {
            kind: a.kind(),
            what: "classical commutator",
        });
    }
    let values: Vec<Elem> = m
        .members()
        .iter()
        .flat_map(|&x| n.members().iter().map(move |&y| a.commutator(x, y)))
        .collect();
    Ok(ideal_closure(a, &values))
}

/// Results of one commutator request across methods.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub algebra: String,
    pub variety: String,
    pub m: Vec<Elem>,
    pub n: Vec<Elem>,
    /// Member sets per method, keyed by method name.
    pub results: BTreeMap<String, Vec<Elem>>,
    /// Whether every computed method produced the same set.
    pub agree: bool,
}

impl CommutatorReport {
    pub fn new(algebra: &str, variety: &str, m: &Ideal, n: &Ideal, results: BTreeMap<String, Vec<Elem>>) -> Self {
        let mut sets = results.values();
        let agree = match sets.next() {
            None => true,
            Some(first) => sets.all(|s| s == first),
        };
        CommutatorReport {
            algebra: algebra.to_string(),
            variety: variety.to_string(),
            m: m.members().to_vec(),
            n: n.members().to_vec(),
            results,
            agree,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn alg(name: &str) -> AlgebraRef {
        corpus::bundled(name).unwrap().algebra
    }

    fn members(ideals: &[Ideal]) -> Vec<Vec<Elem>> {
        ideals.iter().map(|i| i.members().to_vec()).collect()
    }

    #[test]
    fn lattices() {
        let b = Budget::default();
        assert_eq!(members(&ideal_lattice(&alg("z2"), b).unwrap()), vec![vec![0], vec![0, 1]]);
        assert_eq!(
            members(&ideal_lattice(&alg("z4"), b).unwrap()),
            vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]
        );
        assert_eq!(
            members(&ideal_lattice(&alg("s3"), b).unwrap()),
            vec![vec![0], vec![0, 1, 2], (0..6).collect()]
        );
        assert_eq!(ideal_lattice(&alg("z2xz2"), b).unwrap().len(), 5);
        assert_eq!(ideal_lattice(&alg("d4"), b).unwrap().len(), 6);
        assert_eq!(ideal_lattice(&alg("q8"), b).unwrap().len(), 6);
        assert_eq!(ideal_lattice(&alg("a4"), b).unwrap().len(), 3);
        assert_eq!(ideal_lattice(&alg("l5"), b).unwrap().len(), 2);
    }

    #[test]
    fn word_commutators_in_s3() {
        let s3 = alg("s3");
        let a3 = ideal_closure(&s3, &[1]);
        let full = Ideal::full(&s3);
        let ab = VarietyDescriptor::ab();
        assert!(relcomm_words(&a3, &a3, &ab).unwrap().is_trivial());
        assert_eq!(relcomm_words(&full, &full, &ab).unwrap().members(), vec![0, 1, 2]);
        assert!(relcomm_words(&Ideal::trivial(&s3), &full, &ab).unwrap().is_trivial());
    }

    #[test]
    fn sol2_vanishes_on_d4() {
        let d4 = alg("d4");
        let full = Ideal::full(&d4);
        let sol2 = VarietyDescriptor::sol(2).unwrap();
        assert!(relcomm_words(&full, &full, &sol2).unwrap().is_trivial());
    }

    #[test]
    fn word_commutator_refuses_loops() {
        let l5 = alg("l5");
        let full = Ideal::full(&l5);
        assert!(matches!(
            relcomm_words(&full, &full, &VarietyDescriptor::gp()),
            Err(Error::KindUnsupported { .. })
        ));
    }

    #[test]
    fn word_commutator_budget() {
        let a4 = alg("a4");
        let full = Ideal::full(&a4);
        let nil2 = VarietyDescriptor::nil(2).unwrap();
        let opts = WordOptions {
            p_factor: true,
            budget: Budget::new(1000),
        };
        assert!(matches!(
            relcomm_words_with(&full, &full, &nil2, opts),
            Err(Error::BudgetExceeded { arity: 3, .. })
        ));
    }

    #[test]
    fn associators() {
        let l5 = alg("l5");
        let full = Ideal::full(&l5);
        let one = Ideal::trivial(&l5);
        assert!(associator_subloop(&full, &full, &full).unwrap().len() == 5);
        assert!(associator_subloop(&one, &full, &full).unwrap().is_trivial());
        assert!(relcomm_loops(&one, &full).unwrap().is_trivial());
        let s3 = alg("s3").as_loop();
        let f = Ideal::full(&s3);
        assert!(relcomm_loops(&f, &f).unwrap().is_trivial());
    }

    #[test]
    fn oracle_matches_examples() {
        let s3 = alg("s3");
        let full = Ideal::full(&s3);
        let ab = VarietyDescriptor::ab();
        let b = Budget::default();
        assert_eq!(relcomm_oracle(&full, &full, &ab, b).unwrap().members(), vec![0, 1, 2]);
        let a3 = ideal_closure(&s3, &[1]);
        assert!(relcomm_oracle(&a3, &a3, &ab, b).unwrap().is_trivial());
        let l5 = alg("l5");
        let lf = Ideal::full(&l5);
        assert_eq!(relcomm_oracle(&lf, &lf, &VarietyDescriptor::gp(), b).unwrap().len(), 5);
    }

    #[test]
    fn sweep_s3() {
        let report = theorem31_sweep("s3", &alg("s3"), &VarietyDescriptor::ab(), Budget::default()).unwrap();
        assert_eq!(report.pairs.len(), 9);
        assert_eq!(report.disagreements, 0);
    }

    #[test]
    fn sweep_l5() {
        let report = theorem31_sweep("l5", &alg("l5"), &VarietyDescriptor::gp(), Budget::default()).unwrap();
        assert_eq!(report.pairs.len(), 4);
        assert_eq!(report.disagreements, 0);
        let loops = loop_commutator_sweep("l5", &alg("l5"), Budget::default()).unwrap();
        assert_eq!(loops.disagreements, 0);
    }

    #[test]
    fn classical_commutators() {
        let d4 = alg("d4");
        let full = Ideal::full(&d4);
        assert_eq!(classical_commutator(&full, &full).unwrap().members(), &[0, 2]);
    }

    #[test]
    fn report_agreement_flag() {
        let s3 = alg("s3");
        let full = Ideal::full(&s3);
        let mut results = BTreeMap::new();
        results.insert("words".to_string(), vec![0, 1, 2]);
        results.insert("oracle".to_string(), vec![0, 1, 2]);
        assert!(CommutatorReport::new("s3", "Ab", &full, &full, results.clone()).agree);
        results.insert("other".to_string(), vec![0]);
        assert!(!CommutatorReport::new("s3", "Ab", &full, &full, results).agree);
    }
}
