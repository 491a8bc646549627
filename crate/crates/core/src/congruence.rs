//! Congruences as partitions, generated by union-find closure.

use std::fmt;

use crate::algebra::{AlgebraRef, Elem, Kind, ONE};

/// A partition of the carrier compatible with every operation.
///
/// Block ids are canonical: blocks are numbered in order of their least
/// element, so the block of `1` is always `0`.
#[derive(Clone)]
pub struct Congruence {
    parent: AlgebraRef,
    blocks: Vec<u32>,
    num_blocks: usize,
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Congruence")
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl PartialEq for Congruence {
    fn eq(&self, other: &Self) -> bool {
        std::sync::Arc::ptr_eq(&self.parent, &other.parent) && self.blocks == other.blocks
    }
}

impl Eq for Congruence {}

impl Congruence {
    /// Canonicalises an arbitrary labelling into block ids.
    pub(crate) fn from_labels(parent: &AlgebraRef, labels: &[u32]) -> Self {
        let mut rename = std::collections::HashMap::new();
        let blocks: Vec<u32> = labels
            .iter()
            .map(|l| {
                let next = rename.len() as u32;
                *rename.entry(*l).or_insert(next)
            })
            .collect();
        Congruence {
            parent: parent.clone(),
            num_blocks: rename.len(),
            blocks,
        }
    }

    pub fn discrete(parent: &AlgebraRef) -> Self {
        Congruence {
            parent: parent.clone(),
            blocks: (0..parent.order() as u32).collect(),
            num_blocks: parent.order(),
        }
    }

    pub fn total(parent: &AlgebraRef) -> Self {
        Congruence {
            parent: parent.clone(),
            blocks: vec![0; parent.order()],
            num_blocks: 1,
        }
    }

    pub fn parent(&self) -> &AlgebraRef {
        &self.parent
    }

    pub fn block(&self, e: Elem) -> u32 {
        self.blocks[e as usize]
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.blocks[a as usize] == self.blocks[b as usize]
    }

    /// The class of the unit.
    pub fn unit_class(&self) -> Vec<Elem> {
        let b = self.blocks[ONE as usize];
        self.parent
            .elements()
            .filter(|&e| self.blocks[e as usize] == b)
            .collect()
    }

    /// One representative (the least element) per block, in block order.
    pub fn representatives(&self) -> Vec<Elem> {
        let mut reps = vec![Elem::MAX; self.num_blocks];
        for e in self.parent.elements() {
            let b = self.blocks[e as usize] as usize;
            if reps[b] == Elem::MAX {
                reps[b] = e;
            }
        }
        reps
    }

    /// Checks compatibility with every operation by exhaustive scan.
    pub fn is_compatible(&self) -> bool {
        let a = &self.parent;
        let reps = self.representatives();
        for x in a.elements() {
            let rx = reps[self.block(x) as usize];
            for y in a.elements() {
                let ry = reps[self.block(y) as usize];
                if !self.related(a.mul(x, y), a.mul(rx, ry))
                    || !self.related(a.ldiv(x, y), a.ldiv(rx, ry))
                    || !self.related(a.rdiv(x, y), a.rdiv(rx, ry))
                {
                    return false;
                }
            }
            if a.kind() == Kind::Group && !self.related(a.inv(x), a.inv(rx)) {
                return false;
            }
        }
        true
    }

    /// Meet of two congruences on the same algebra.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        assert!(std::sync::Arc::ptr_eq(&self.parent, &other.parent));
        let n = self.num_blocks as u32;
        let labels: Vec<u32> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a + n * b)
            .collect();
        Congruence::from_labels(&self.parent, &labels)
    }
}

/// Incremental congruence closure.
///
/// Each successful union queues the merged pair; processing a pair merges
/// its images under every one-position translation `x -> x*c`, `x -> c*x`.
/// In a finite loop compatibility with multiplication already forces
/// compatibility with both divisions (translations are bijections), and in
/// a finite group translations by generators compose to all translations.
pub(crate) struct CongruenceBuilder {
    alg: AlgebraRef,
    parent: Vec<u32>,
    size: Vec<u32>,
    queue: Vec<(Elem, Elem)>,
    translators: Vec<Elem>,
    collapsed: bool,
}

impl CongruenceBuilder {
    pub fn new(alg: &AlgebraRef) -> Self {
        let translators = match alg.kind() {
            Kind::Group => alg.generators().to_vec(),
            Kind::Loop => alg.elements().collect(),
        };
        CongruenceBuilder {
            parent: (0..alg.order() as u32).collect(),
            size: vec![1; alg.order()],
            queue: Vec::new(),
            translators,
            alg: alg.clone(),
            collapsed: alg.order() == 1,
        }
    }

    #[inline]
    pub fn find(&mut self, mut x: Elem) -> Elem {
        if self.collapsed {
            return 0;
        }
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    pub fn same(&mut self, a: Elem, b: Elem) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn is_total(&self) -> bool {
        self.collapsed
    }

    fn union(&mut self, a: Elem, b: Elem) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        // Classes of a congruence on a loop are the cosets of one normal
        // subloop, all of equal size; a class above half the carrier means
        // the closure can only end in the total congruence.
        if 2 * self.size[big as usize] as usize > self.alg.order() {
            self.collapsed = true;
            self.queue.clear();
        }
        true
    }

    /// Merges `a` and `b` and closes under translations.
    pub fn merge(&mut self, a: Elem, b: Elem) {
        if self.collapsed {
            return;
        }
        if self.union(a, b) {
            self.queue.push((a, b));
            self.close();
        }
    }

    fn close(&mut self) {
        let alg = self.alg.clone();
        let translators = std::mem::take(&mut self.translators);
        while let Some((a, b)) = self.queue.pop() {
            for &c in &translators {
                let (l1, l2) = (alg.mul(a, c), alg.mul(b, c));
                if self.union(l1, l2) {
                    self.queue.push((l1, l2));
                }
                let (r1, r2) = (alg.mul(c, a), alg.mul(c, b));
                if self.union(r1, r2) {
                    self.queue.push((r1, r2));
                }
                if self.collapsed {
                    break;
                }
            }
        }
        self.translators = translators;
    }

    /// Current class representatives (union-find roots).
    pub fn roots(&mut self) -> Vec<Elem> {
        if self.collapsed {
            return vec![ONE];
        }
        let n = self.alg.order() as Elem;
        (0..n).filter(|&x| self.find(x) == x).collect()
    }

    pub fn finish(mut self) -> Congruence {
        if self.collapsed {
            return Congruence::total(&self.alg);
        }
        let n = self.alg.order() as Elem;
        let labels: Vec<u32> = (0..n).map(|x| self.find(x)).collect();
        Congruence::from_labels(&self.alg, &labels)
    }
}

/// The least congruence containing every seed pair.
pub fn congruence_generated(alg: &AlgebraRef, seed: &[(Elem, Elem)]) -> Congruence {
    let mut b = CongruenceBuilder::new(alg);
    for &(x, y) in seed {
        b.merge(x, y);
    }
    b.finish()
}
