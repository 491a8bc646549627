//! Ideals (normal subobjects) and their lattice operations.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraRef, Elem, ONE};
use crate::congruence::{congruence_generated, Congruence, CongruenceBuilder};
use crate::error::{Error, Result};

/// A normal subobject, stored with the congruence whose unit class it is.
#[derive(Clone)]
pub struct Ideal {
    witness: Congruence,
    members: Vec<Elem>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.members)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(self.parent(), other.parent()) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn from_congruence(witness: Congruence) -> Self {
        let members = witness.unit_class();
        Ideal { witness, members }
    }

    pub fn trivial(parent: &AlgebraRef) -> Self {
        Ideal::from_congruence(Congruence::discrete(parent))
    }

    pub fn full(parent: &AlgebraRef) -> Self {
        Ideal::from_congruence(Congruence::total(parent))
    }

    /// Accepts `members` only if it already is an ideal.
    pub fn from_members(parent: &AlgebraRef, members: &[Elem]) -> Result<Self> {
        let closure = ideal_closure(parent, members);
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if closure.members != sorted {
            return Err(Error::NotClosed);
        }
        Ok(closure)
    }

    pub fn parent(&self) -> &AlgebraRef {
        self.witness.parent()
    }

    pub fn witness(&self) -> &Congruence {
        &self.witness
    }

    /// Sorted member list (always starts with 1).
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.witness.related(e, ONE)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.parent().order()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.parent().order()];
        for &m in &self.members {
            mask[m as usize] = true;
        }
        mask
    }

    /// Intersection; its witness is the meet of the witnesses.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        same_parent(self, other)?;
        Ok(Ideal::from_congruence(self.witness.meet(&other.witness)))
    }
}

pub(crate) fn same_parent(m: &Ideal, n: &Ideal) -> Result<()> {
    if Arc::ptr_eq(m.parent(), n.parent()) {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

/// The least ideal containing `seed`.
pub fn ideal_closure(parent: &AlgebraRef, seed: &[Elem]) -> Ideal {
    let pairs: Vec<(Elem, Elem)> = seed.iter().map(|&s| (s, ONE)).collect();
    Ideal::from_congruence(congruence_generated(parent, &pairs))
}

/// Ideal closure that stops early once the unit class is everything.
pub(crate) fn ideal_closure_iter(parent: &AlgebraRef, seed: impl IntoIterator<Item = Elem>) -> Ideal {
    let mut b = CongruenceBuilder::new(parent);
    for s in seed {
        if b.is_total() {
            break;
        }
        if !b.same(s, ONE) {
            b.merge(s, ONE);
        }
    }
    Ideal::from_congruence(b.finish())
}

/// The internal product `M*N = {m n}`, which is also the join of `M` and `N`.
///
/// # Panics
/// If the elementwise product differs from the ideal generated by `M ∪ N`.
pub fn product_ideal(m: &Ideal, n: &Ideal) -> Result<Ideal> {
    same_parent(m, n)?;
    let a = m.parent();
    let mut raw = vec![false; a.order()];
    for &x in m.members() {
        for &y in n.members() {
            raw[a.mul(x, y) as usize] = true;
        }
    }
    let raw: Vec<Elem> = a.elements().filter(|&e| raw[e as usize]).collect();
    let join = ideal_closure_iter(a, m.members().iter().chain(n.members()).copied());
    assert_eq!(
        raw,
        join.members(),
        "elementwise product of two ideals differs from their join"
    );
    Ok(join)
}

/// Image of an ideal under a surjective map, as an ideal of the target.
pub(crate) fn image_ideal(target: &AlgebraRef, image: impl IntoIterator<Item = Elem>) -> Result<Ideal> {
    let mut mask = vec![false; target.order()];
    for e in image {
        mask[e as usize] = true;
    }
    let raw: Vec<Elem> = target.elements().filter(|&e| mask[e as usize]).collect();
    Ideal::from_members(target, &raw)
}
