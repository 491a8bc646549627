//! Homomorphisms, quotients, kernels, kernel pairs and pullbacks.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraRef, Elem, FiniteAlgebra, Kind, MAX_TUPLE, ONE};
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

const UNSET: Elem = Elem::MAX;

/// A total map between carriers commuting with the operations.
#[derive(Clone)]
pub struct Homomorphism {
    src: AlgebraRef,
    dst: AlgebraRef,
    map: Vec<Elem>,
    surjective: bool,
    injective: bool,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hom({} -> {}: {:?})",
            self.src.order(),
            self.dst.order(),
            self.map
        )
    }
}

impl Homomorphism {
    /// Checks every operation on every argument pair.
    pub fn new(src: &AlgebraRef, dst: &AlgebraRef, map: Vec<Elem>) -> Result<Self> {
        if src.kind() != dst.kind() {
            return Err(Error::SignatureMismatch(format!(
                "{} -> {}",
                src.kind(),
                dst.kind()
            )));
        }
        if map.len() != src.order() {
            return Err(Error::NotHomomorphism(format!(
                "map has {} entries for a carrier of {}",
                map.len(),
                src.order()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v as usize >= dst.order()) {
            return Err(Error::NotHomomorphism(format!("value {v} out of range")));
        }
        if map[ONE as usize] != ONE {
            return Err(Error::NotHomomorphism("1 is not mapped to 1".into()));
        }
        for a in src.elements() {
            let fa = map[a as usize];
            for b in src.elements() {
                let fb = map[b as usize];
                if map[src.mul(a, b) as usize] != dst.mul(fa, fb)
                    || map[src.ldiv(a, b) as usize] != dst.ldiv(fa, fb)
                    || map[src.rdiv(a, b) as usize] != dst.rdiv(fa, fb)
                {
                    return Err(Error::NotHomomorphism(format!(
                        "operations not preserved at ({a},{b})"
                    )));
                }
            }
            if src.kind() == Kind::Group && map[src.inv(a) as usize] != dst.inv(fa) {
                return Err(Error::NotHomomorphism(format!("inverse not preserved at {a}")));
            }
        }
        Ok(Self::new_unchecked(src, dst, map))
    }

    /// For maps that are homomorphisms by construction.
    pub(crate) fn new_unchecked(src: &AlgebraRef, dst: &AlgebraRef, map: Vec<Elem>) -> Self {
        debug_assert_eq!(map.len(), src.order());
        let mut hit = vec![false; dst.order()];
        for &v in &map {
            hit[v as usize] = true;
        }
        let image = hit.iter().filter(|&&h| h).count();
        Homomorphism {
            surjective: image == dst.order(),
            injective: image == src.order(),
            src: src.clone(),
            dst: dst.clone(),
            map,
        }
    }

    pub fn identity(a: &AlgebraRef) -> Self {
        Self::new_unchecked(a, a, a.elements().collect())
    }

    /// The unique map to a one-element algebra.
    pub fn to_trivial(a: &AlgebraRef, trivial: &AlgebraRef) -> Self {
        assert!(trivial.is_trivial());
        Self::new_unchecked(a, trivial, vec![ONE; a.order()])
    }

    pub fn src(&self) -> &AlgebraRef {
        &self.src
    }

    pub fn dst(&self) -> &AlgebraRef {
        &self.dst
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a as usize]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &Homomorphism) -> Result<Homomorphism> {
        if !Arc::ptr_eq(&self.dst, &then.src) {
            return Err(Error::ParentMismatch);
        }
        let map = self.map.iter().map(|&a| then.apply(a)).collect();
        Ok(Self::new_unchecked(&self.src, &then.dst, map))
    }

    /// Same maps between the same algebras.
    pub fn same_as(&self, other: &Homomorphism) -> bool {
        Arc::ptr_eq(&self.src, &other.src) && Arc::ptr_eq(&self.dst, &other.dst) && self.map == other.map
    }
}

/// The quotient algebra on block ids and the projection onto it.
///
/// The result is re-validated against its kind's axioms.
pub fn quotient(a: &AlgebraRef, c: &Congruence) -> Result<(AlgebraRef, Homomorphism)> {
    if !Arc::ptr_eq(a, c.parent()) {
        return Err(Error::ParentMismatch);
    }
    let reps = c.representatives();
    let table: Vec<Vec<Elem>> = reps
        .iter()
        .map(|&x| reps.iter().map(|&y| c.block(a.mul(x, y))).collect())
        .collect();
    let q = FiniteAlgebra::from_mul_table(a.kind(), table)?;
    let proj = Homomorphism::new_unchecked(a, &q, c.blocks().to_vec());
    Ok((q, proj))
}

/// Quotient by an ideal's witness congruence.
pub fn quotient_by(j: &Ideal) -> Result<(AlgebraRef, Homomorphism)> {
    quotient(j.parent(), j.witness())
}

/// Preimage of 1, with the fibres of `f` as witness.
pub fn kernel(f: &Homomorphism) -> Ideal {
    Ideal::from_congruence(Congruence::from_labels(f.src(), f.map()))
}

/// A subalgebra of a product of two algebras, with both projections.
#[derive(Clone, Debug)]
pub struct PairAlgebra {
    algebra: AlgebraRef,
    proj0: Homomorphism,
    proj1: Homomorphism,
}

impl PairAlgebra {
    pub(crate) fn from_pairs(left: &AlgebraRef, right: &AlgebraRef, mut pairs: Vec<(Elem, Elem)>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        let tuples = pairs
            .iter()
            .map(|&(a, b)| {
                let mut t = [0; MAX_TUPLE];
                t[0] = a;
                t[1] = b;
                t
            })
            .collect();
        let algebra = FiniteAlgebra::from_tuples(left.kind(), vec![left.clone(), right.clone()], tuples);
        let proj0 = Homomorphism::new_unchecked(&algebra, left, pairs.iter().map(|p| p.0).collect());
        let proj1 = Homomorphism::new_unchecked(&algebra, right, pairs.iter().map(|p| p.1).collect());
        PairAlgebra {
            algebra,
            proj0,
            proj1,
        }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn proj0(&self) -> &Homomorphism {
        &self.proj0
    }

    pub fn proj1(&self) -> &Homomorphism {
        &self.proj1
    }

    pub fn len(&self) -> usize {
        self.algebra.order()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn pair(&self, e: Elem) -> (Elem, Elem) {
        (self.proj0.apply(e), self.proj1.apply(e))
    }

    pub fn index_of(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.algebra.locate_tuple(&[a, b])
    }

    pub fn contains(&self, a: Elem, b: Elem) -> bool {
        self.index_of(a, b).is_some()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.algebra.elements().map(|e| self.pair(e))
    }

    /// Both factors are the same algebra.
    pub fn is_relation(&self) -> bool {
        Arc::ptr_eq(self.proj0.dst(), self.proj1.dst())
    }
}

/// `R[f] = {(a,a') | f(a) = f(a')}` with projections `f0`, `f1`.
pub fn kernel_pair(f: &Homomorphism) -> PairAlgebra {
    let mut fibres: HashMap<Elem, Vec<Elem>> = HashMap::new();
    for a in f.src().elements() {
        fibres.entry(f.apply(a)).or_default().push(a);
    }
    let mut pairs = Vec::new();
    for fibre in fibres.values() {
        for &a in fibre {
            for &b in fibre {
                pairs.push((a, b));
            }
        }
    }
    PairAlgebra::from_pairs(f.src(), f.src(), pairs)
}

/// `D x_Z C = {(d,c) | f(d) = g(c)}` for `f: D -> Z`, `g: C -> Z`.
pub fn pullback(f: &Homomorphism, g: &Homomorphism) -> Result<PairAlgebra> {
    if !Arc::ptr_eq(f.dst(), g.dst()) {
        return Err(Error::ParentMismatch);
    }
    let mut over: HashMap<Elem, Vec<Elem>> = HashMap::new();
    for c in g.src().elements() {
        over.entry(g.apply(c)).or_default().push(c);
    }
    let mut pairs = Vec::new();
    for d in f.src().elements() {
        if let Some(cs) = over.get(&f.apply(d)) {
            pairs.extend(cs.iter().map(|&c| (d, c)));
        }
    }
    Ok(PairAlgebra::from_pairs(f.src(), g.src(), pairs))
}

/// Decides whether the commuting square with apex elements `apex` and maps
/// `top: apex -> B`, `left: apex -> C`, `right: B -> D`, `bottom: C -> D`
/// is a pullback of the restricted sets `b_elems`, `c_elems`.
pub(crate) fn is_pullback_of_sets(
    apex: &[Elem],
    top: impl Fn(Elem) -> Elem,
    left: impl Fn(Elem) -> Elem,
    b_elems: &[Elem],
    right: impl Fn(Elem) -> Elem,
    c_elems: &[Elem],
    bottom: impl Fn(Elem) -> Elem,
) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(apex.len());
    for &p in apex {
        if !seen.insert((top(p), left(p))) {
            return false;
        }
    }
    let mut over_b: HashMap<Elem, u64> = HashMap::new();
    for &b in b_elems {
        *over_b.entry(right(b)).or_default() += 1;
    }
    let mut size = 0u64;
    for &c in c_elems {
        size += over_b.get(&bottom(c)).copied().unwrap_or(0);
    }
    size == apex.len() as u64
}

/// True iff the comparison map from the apex to the pullback of `right` and
/// `bottom` is a bijection.
pub fn is_pullback_square(
    top: &Homomorphism,
    left: &Homomorphism,
    right: &Homomorphism,
    bottom: &Homomorphism,
) -> Result<bool> {
    if !Arc::ptr_eq(top.src(), left.src())
        || !Arc::ptr_eq(top.dst(), right.src())
        || !Arc::ptr_eq(left.dst(), bottom.src())
        || !Arc::ptr_eq(right.dst(), bottom.dst())
    {
        return Err(Error::ParentMismatch);
    }
    for p in top.src().elements() {
        if right.apply(top.apply(p)) != bottom.apply(left.apply(p)) {
            return Err(Error::NonCommutingSquare { witness: p });
        }
    }
    let apex: Vec<Elem> = top.src().elements().collect();
    let b: Vec<Elem> = right.src().elements().collect();
    let c: Vec<Elem> = bottom.src().elements().collect();
    Ok(is_pullback_of_sets(
        &apex,
        |p| top.apply(p),
        |p| left.apply(p),
        &b,
        |x| right.apply(x),
        &c,
        |x| bottom.apply(x),
    ))
}

/// Every homomorphism `src -> dst`, found by assigning images to the
/// generators of `src` and propagating through products.
pub fn homomorphisms(src: &AlgebraRef, dst: &AlgebraRef) -> Vec<Homomorphism> {
    if src.kind() != dst.kind() {
        return Vec::new();
    }
    let gens = src.generators();
    let m = dst.order();
    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        let images: Vec<Elem> = assignment.iter().map(|&v| v as Elem).collect();
        if let Some(map) = extend_assignment(src, dst, gens, &images) {
            out.push(Homomorphism::new_unchecked(src, dst, map));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == assignment.len() {
                return out;
            }
            assignment[i] += 1;
            if assignment[i] < m {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

fn extend_assignment(src: &FiniteAlgebra, dst: &FiniteAlgebra, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut map = vec![UNSET; src.order()];
    map[ONE as usize] = ONE;
    let mut defined = vec![ONE];
    for (&g, &v) in gens.iter().zip(images) {
        if map[g as usize] == UNSET {
            map[g as usize] = v;
            defined.push(g);
        } else if map[g as usize] != v {
            return None;
        }
    }
    // Every product of defined elements is checked once in each order; the
    // defined set grows to the whole carrier because `gens` generates it.
    let mut i = 0;
    while i < defined.len() {
        let a = defined[i];
        let fa = map[a as usize];
        for j in 0..=i {
            let b = defined[j];
            let fb = map[b as usize];
            for (p, q) in [(src.mul(a, b), dst.mul(fa, fb)), (src.mul(b, a), dst.mul(fb, fa))] {
                match map[p as usize] {
                    UNSET => {
                        map[p as usize] = q;
                        defined.push(p);
                    }
                    v if v != q => return None,
                    _ => {}
                }
            }
        }
        i += 1;
    }
    debug_assert!(map.iter().all(|&v| v != UNSET));
    Some(map)
}
