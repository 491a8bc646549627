//! Trivial, central and double central extensions.

use std::sync::Arc;

use crate::algebra::{AlgebraRef, Elem, FiniteAlgebra, Subalgebra, MAX_TUPLE, ONE};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hom::{
    is_pullback_of_sets, is_pullback_square, kernel, kernel_pair, pullback, quotient, Homomorphism, PairAlgebra,
};
use crate::ideal::{ideal_closure, Ideal};
use crate::varieties::{reflection_with, verbal_subobject_with, VarietyDescriptor};

/// A surjective homomorphism with its kernel and kernel pair.
#[derive(Clone, Debug)]
pub struct Extension {
    f: Homomorphism,
    kernel: Ideal,
    pair: PairAlgebra,
}

impl Extension {
    pub fn new(f: Homomorphism) -> Result<Self> {
        if !f.is_surjective() {
            return Err(Error::NotSurjective);
        }
        Ok(Extension {
            kernel: kernel(&f),
            pair: kernel_pair(&f),
            f,
        })
    }

    /// The projection `A -> A/K`.
    pub fn quotient_by(k: &Ideal) -> Result<Self> {
        let (_, q) = quotient(k.parent(), k.witness())?;
        Extension::new(q)
    }

    pub fn map(&self) -> &Homomorphism {
        &self.f
    }

    pub fn src(&self) -> &AlgebraRef {
        self.f.src()
    }

    pub fn dst(&self) -> &AlgebraRef {
        self.f.dst()
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn kernel_pair(&self) -> &PairAlgebra {
        &self.pair
    }
}

/// The map `IA -> IB` induced on reflections by `f`.
fn induced_on_reflections(f: &Homomorphism, eta_a: &Homomorphism, eta_b: &Homomorphism) -> Homomorphism {
    let ia = eta_a.dst();
    let mut map = vec![Elem::MAX; ia.order()];
    for a in f.src().elements() {
        map[eta_a.apply(a) as usize] = eta_b.apply(f.apply(a));
    }
    Homomorphism::new_unchecked(ia, eta_b.dst(), map)
}

/// True iff the square `(f, eta_A, eta_B, If)` is a pullback.
pub fn is_trivial_extension(e: &Extension, v: &VarietyDescriptor) -> Result<bool> {
    is_trivial_extension_with(e, v, Budget::default())
}

pub fn is_trivial_extension_with(e: &Extension, v: &VarietyDescriptor, budget: Budget) -> Result<bool> {
    let (_, eta_a) = reflection_with(e.src(), v, budget)?;
    let (_, eta_b) = reflection_with(e.dst(), v, budget)?;
    let i_f = induced_on_reflections(e.map(), &eta_a, &eta_b);
    is_pullback_square(e.map(), &eta_a, &eta_b, &i_f)
}

/// The verbal subobject of the kernel pair, as member indices of `R[f]`.
fn kernel_pair_verbal(e: &Extension, v: &VarietyDescriptor, budget: Budget) -> Result<Ideal> {
    verbal_subobject_with(e.kernel_pair().algebra(), v, budget)
}

/// `[K,A]_B`: the image under `[f1]_B` of the kernel of `[f0]_B`, as an
/// ideal of `A`.
pub fn relative_commutator_of_extension(e: &Extension, v: &VarietyDescriptor) -> Result<Ideal> {
    relative_commutator_of_extension_with(e, v, Budget::default())
}

pub fn relative_commutator_of_extension_with(e: &Extension, v: &VarietyDescriptor, budget: Budget) -> Result<Ideal> {
    let r = e.kernel_pair();
    let verbal = kernel_pair_verbal(e, v, budget)?;
    let mut raw: Vec<Elem> = verbal
        .members()
        .iter()
        .map(|&q| r.pair(q))
        .filter(|&(a, _)| a == ONE)
        .map(|(_, b)| b)
        .collect();
    raw.sort_unstable();
    raw.dedup();
    let closed = ideal_closure(e.src(), &raw);
    if closed.members() != raw {
        return Err(Error::NotClosed);
    }
    Ok(closed)
}

/// Whether `[f0]_B` and `[f1]_B` agree as maps `[R[f]]_B -> [A]_B`.
pub fn verbal_projections_agree(e: &Extension, v: &VarietyDescriptor) -> Result<bool> {
    let r = e.kernel_pair();
    let verbal = kernel_pair_verbal(e, v, Budget::default())?;
    Ok(verbal.members().iter().all(|&q| {
        let (a, b) = r.pair(q);
        a == b
    }))
}

/// Central iff `[K,A]_B` is zero.
pub fn is_central_extension(e: &Extension, v: &VarietyDescriptor) -> Result<bool> {
    Ok(relative_commutator_of_extension(e, v)?.is_trivial())
}

pub fn is_central_extension_with(e: &Extension, v: &VarietyDescriptor, budget: Budget) -> Result<bool> {
    Ok(relative_commutator_of_extension_with(e, v, budget)?.is_trivial())
}

/// `I1 f : A/[K,A]_B -> B` and `rho : A -> A/[K,A]_B`.
pub fn centralisation(e: &Extension, v: &VarietyDescriptor) -> Result<(Extension, Homomorphism)> {
    let j = relative_commutator_of_extension(e, v)?;
    let (q, rho) = quotient(e.src(), j.witness())?;
    let mut map = vec![Elem::MAX; q.order()];
    for a in e.src().elements() {
        map[rho.apply(a) as usize] = e.map().apply(a);
    }
    let i1 = Extension::new(Homomorphism::new_unchecked(&q, e.dst(), map))?;
    assert!(
        is_central_extension(&i1, v)?,
        "centralisation produced a non-central extension"
    );
    Ok((i1, rho))
}

/// Whether pulling `e` back along `g` gives a trivial extension.
///
/// Central extensions are those trivialised by some `g`; taking `g = e`
/// itself is the normality test.
pub fn trivialised_by(e: &Extension, g: &Extension, v: &VarietyDescriptor) -> Result<bool> {
    let p = pullback(e.map(), g.map())?;
    let pulled = Extension::new(p.proj1().clone())?;
    is_trivial_extension(&pulled, v)
}

/// The first of `candidates` that trivialises `e`, if any.
pub fn find_trivialising_extension(
    e: &Extension,
    candidates: &[Extension],
    v: &VarietyDescriptor,
) -> Result<Option<usize>> {
    for (i, g) in candidates.iter().enumerate() {
        if trivialised_by(e, g, v)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `R □ S`: quadruples `(x,y,z,t)` with columns `(x,z), (y,t)` in `R` and
/// rows `(x,y), (z,t)` in `S`.
#[derive(Clone, Debug)]
pub struct QuadrupleAlgebra {
    algebra: AlgebraRef,
    base: AlgebraRef,
    /// Row projections into `S`: `(x,y)` and `(z,t)`.
    p: [Homomorphism; 2],
    /// Column projections into `R`: `(x,z)` and `(y,t)`.
    r: [Homomorphism; 2],
}

impl QuadrupleAlgebra {
    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn base(&self) -> &AlgebraRef {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.algebra.order()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn quadruple(&self, e: Elem) -> [Elem; 4] {
        let t = self.algebra.tuple(e).expect("quadruple algebra");
        [t[0], t[1], t[2], t[3]]
    }

    pub fn index_of(&self, q: [Elem; 4]) -> Option<Elem> {
        self.algebra.locate_tuple(&q)
    }

    /// `p0 = (x,y)`, `p1 = (z,t)`.
    pub fn p(&self, i: usize) -> &Homomorphism {
        &self.p[i]
    }

    /// `r0 = (x,z)`, `r1 = (y,t)`.
    pub fn r(&self, i: usize) -> &Homomorphism {
        &self.r[i]
    }
}

fn check_equivalence(rel: &PairAlgebra) -> Result<()> {
    if !rel.is_relation() {
        return Err(Error::NotEquivalenceRelation("pairs do not live on a single base"));
    }
    let base = rel.proj0().dst();
    if !base.elements().all(|x| rel.contains(x, x)) {
        return Err(Error::NotEquivalenceRelation("not reflexive"));
    }
    if !rel.pairs().all(|(x, y)| rel.contains(y, x)) {
        return Err(Error::NotEquivalenceRelation("not symmetric"));
    }
    let mut related: Vec<Vec<Elem>> = vec![Vec::new(); base.order()];
    for (x, y) in rel.pairs() {
        related[x as usize].push(y);
    }
    for (x, y) in rel.pairs() {
        if !related[y as usize].iter().all(|&z| rel.contains(x, z)) {
            return Err(Error::NotEquivalenceRelation("not transitive"));
        }
    }
    Ok(())
}

/// Builds `R □ S` for equivalence relations on the same algebra.
pub fn double_relation(r: &PairAlgebra, s: &PairAlgebra) -> Result<QuadrupleAlgebra> {
    check_equivalence(r)?;
    check_equivalence(s)?;
    let base = r.proj0().dst().clone();
    if !Arc::ptr_eq(&base, s.proj0().dst()) {
        return Err(Error::ParentMismatch);
    }
    let mut r_class: Vec<Vec<Elem>> = vec![Vec::new(); base.order()];
    for (x, z) in r.pairs() {
        r_class[x as usize].push(z);
    }
    let mut tuples = Vec::new();
    for (x, y) in s.pairs() {
        for &z in &r_class[x as usize] {
            for &t in &r_class[y as usize] {
                if s.contains(z, t) {
                    let mut q = [0; MAX_TUPLE];
                    q[..4].copy_from_slice(&[x, y, z, t]);
                    tuples.push(q);
                }
            }
        }
    }
    let algebra = FiniteAlgebra::from_tuples(base.kind(), vec![base.clone(); 4], tuples);
    let project = |target: &PairAlgebra, i: usize, j: usize| {
        let map = algebra
            .elements()
            .map(|e| {
                let t = algebra.tuple(e).unwrap();
                target.index_of(t[i], t[j]).expect("projection lands in the relation")
            })
            .collect();
        Homomorphism::new_unchecked(&algebra, target.algebra(), map)
    };
    let p = [project(s, 0, 1), project(s, 2, 3)];
    let rr = [project(r, 0, 2), project(r, 1, 3)];
    Ok(QuadrupleAlgebra {
        algebra: algebra.clone(),
        base,
        p,
        r: rr,
    })
}

/// A commuting square `f d = g c` of extensions, `c: X -> C`, `d: X -> D`,
/// `g: C -> Z`, `f: D -> Z`.
#[derive(Clone, Debug)]
pub struct DoubleExtension {
    c: Homomorphism,
    d: Homomorphism,
    g: Homomorphism,
    f: Homomorphism,
}

impl DoubleExtension {
    pub fn new(c: Homomorphism, d: Homomorphism, g: Homomorphism, f: Homomorphism) -> Result<Self> {
        if !Arc::ptr_eq(c.src(), d.src())
            || !Arc::ptr_eq(c.dst(), g.src())
            || !Arc::ptr_eq(d.dst(), f.src())
            || !Arc::ptr_eq(g.dst(), f.dst())
        {
            return Err(Error::ParentMismatch);
        }
        for x in c.src().elements() {
            if g.apply(c.apply(x)) != f.apply(d.apply(x)) {
                return Err(Error::NonCommutingSquare { witness: x });
            }
        }
        Ok(DoubleExtension { c, d, g, f })
    }

    /// The square `M·N -> (M·N)/M, (M·N)/N -> 0` for ideals of one
    /// algebra, with `M·N` as an algebra in its own right.
    pub fn of_ideals(m: &Ideal, n: &Ideal) -> Result<(Self, Subalgebra)> {
        let join = crate::ideal::product_ideal(m, n)?;
        let x = Subalgebra::new_unchecked(m.parent(), join.members().to_vec());
        let xa = x.algebra().clone();
        let locate = |i: &Ideal| -> Vec<Elem> { i.members().iter().map(|&e| x.locate(e).unwrap()).collect() };
        let m_in = Ideal::from_members(&xa, &locate(m))?;
        let n_in = Ideal::from_members(&xa, &locate(n))?;
        let (cm, c) = quotient(&xa, m_in.witness())?;
        let (dn, d) = quotient(&xa, n_in.witness())?;
        let zero = FiniteAlgebra::trivial(xa.kind());
        let g = Homomorphism::to_trivial(&cm, &zero);
        let f = Homomorphism::to_trivial(&dn, &zero);
        Ok((DoubleExtension::new(c, d, g, f)?, x))
    }

    pub fn apex(&self) -> &AlgebraRef {
        self.c.src()
    }

    pub fn c(&self) -> &Homomorphism {
        &self.c
    }

    pub fn d(&self) -> &Homomorphism {
        &self.d
    }

    pub fn g(&self) -> &Homomorphism {
        &self.g
    }

    pub fn f(&self) -> &Homomorphism {
        &self.f
    }

    /// All four maps and the comparison `(d,c): X -> D x_Z C` are surjective.
    pub fn is_double_extension(&self) -> bool {
        if ![&self.c, &self.d, &self.g, &self.f].iter().all(|h| h.is_surjective()) {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for x in self.apex().elements() {
            seen.insert((self.d.apply(x), self.c.apply(x)));
        }
        let mut over = std::collections::HashMap::<Elem, usize>::new();
        for y in self.c.dst().elements() {
            *over.entry(self.g.apply(y)).or_default() += 1;
        }
        let size: usize = self
            .d
            .dst()
            .elements()
            .map(|y| over.get(&self.f.apply(y)).copied().unwrap_or(0))
            .sum();
        seen.len() == size
    }
}

/// Checks the double-extension conditions on an arbitrary square.
pub fn is_double_extension(sq: &DoubleExtension) -> bool {
    sq.is_double_extension()
}

/// Pullback verdicts of the four induced squares of verbal subobjects
/// `[R[c] □ R[d]]_B -> [R[d]]_B, [R[c]]_B -> [X]_B`, one per corner
/// `x, y, z, t` of the quadruple configuration.
pub fn double_central_verdicts(sq: &DoubleExtension, v: &VarietyDescriptor, budget: Budget) -> Result<[bool; 4]> {
    let rc = kernel_pair(sq.c());
    let rd = kernel_pair(sq.d());
    let quad = double_relation(&rc, &rd)?;
    let v_quad = verbal_subobject_with(quad.algebra(), v, budget)?;
    let v_rc = verbal_subobject_with(rc.algebra(), v, budget)?;
    let v_rd = verbal_subobject_with(rd.algebra(), v, budget)?;
    if v_quad.is_trivial() && v_rc.is_trivial() && v_rd.is_trivial() {
        return Ok([true; 4]);
    }
    // corner -> (row projection, column projection, R[d] leg, R[c] leg)
    const CORNERS: [(usize, usize, usize, usize); 4] = [(0, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1), (1, 1, 1, 1)];
    let mut verdicts = [false; 4];
    for (slot, &(pi, ri, di, ci)) in verdicts.iter_mut().zip(&CORNERS) {
        let top = quad.p(pi);
        let left = quad.r(ri);
        let right = if di == 0 { rd.proj0() } else { rd.proj1() };
        let bottom = if ci == 0 { rc.proj0() } else { rc.proj1() };
        *slot = is_pullback_of_sets(
            v_quad.members(),
            |q| top.apply(q),
            |q| left.apply(q),
            v_rd.members(),
            |e| right.apply(e),
            v_rc.members(),
            |e| bottom.apply(e),
        );
    }
    Ok(verdicts)
}

/// Double central iff the induced square of verbal subobjects is a
/// pullback; all four corner choices are computed and must agree.
pub fn is_double_central(sq: &DoubleExtension, v: &VarietyDescriptor) -> Result<bool> {
    is_double_central_with(sq, v, Budget::default())
}

pub fn is_double_central_with(sq: &DoubleExtension, v: &VarietyDescriptor, budget: Budget) -> Result<bool> {
    let verdicts = double_central_verdicts(sq, v, budget)?;
    if verdicts.iter().all(|&b| b == verdicts[0]) {
        Ok(verdicts[0])
    } else {
        Err(Error::SquareDisagreement { verdicts })
    }
}
