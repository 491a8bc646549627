//! Finite groups and loops as operation tables.
//!
//! Every algebra has carrier `0..order` and unit `0`. Two representations
//! share one type: explicit Cayley tables, and subalgebras of a finite
//! product of other algebras (kernel pairs, pullbacks, double relations),
//! whose operations are evaluated componentwise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element index.
pub type Elem = u32;

/// The distinguished constant.
pub const ONE: Elem = 0;

/// Maximum number of factors of a tuple algebra.
pub const MAX_TUPLE: usize = 4;

/// Tables larger than this many entries per operation are not materialised
/// for subalgebras; their operations go through the parent instead.
const MATERIALISE_LIMIT: usize = 1024;

/// Above this size the tuple index switches to a hash map.
const DENSE_INDEX_LIMIT: usize = 1 << 22;

pub type AlgebraRef = Arc<FiniteAlgebra>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Group,
    Loop,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::Loop => "loop",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "group" => Ok(Kind::Group),
            "loop" => Ok(Kind::Loop),
            other => Err(format!("unknown kind `{other}` (expected `group` or `loop`)")),
        }
    }
}

/// Unvalidated operation tables as read from input.
#[derive(Clone, Debug, Default)]
pub struct RawTables {
    pub mul: Vec<Vec<Elem>>,
    pub ldiv: Option<Vec<Vec<Elem>>>,
    pub rdiv: Option<Vec<Vec<Elem>>>,
    pub inv: Option<Vec<Elem>>,
}

impl RawTables {
    pub fn from_mul(mul: Vec<Vec<Elem>>) -> Self {
        RawTables {
            mul,
            ..Default::default()
        }
    }
}

struct Tables {
    mul: Vec<Elem>,
    ldiv: Vec<Elem>,
    rdiv: Vec<Elem>,
    inv: Option<Vec<Elem>>,
}

struct Tuples {
    factors: Vec<AlgebraRef>,
    coords: Vec<Elem>,
    strides: [usize; MAX_TUPLE],
    index: TupleIndex,
}

enum TupleIndex {
    Dense(Vec<Elem>),
    Sparse(HashMap<[Elem; MAX_TUPLE], Elem>),
}

enum Repr {
    Table(Tables),
    Tuples(Tuples),
}

/// A finite group or loop.
pub struct FiniteAlgebra {
    kind: Kind,
    order: usize,
    repr: Repr,
    generators: OnceLock<Vec<Elem>>,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let repr = match &self.repr {
            Repr::Table(_) => "table".to_string(),
            Repr::Tuples(t) => format!("tuples/{}", t.factors.len()),
        };
        f.debug_struct("FiniteAlgebra")
            .field("kind", &self.kind)
            .field("order", &self.order)
            .field("repr", &repr)
            .finish()
    }
}

fn flatten(name: &'static str, n: usize, rows: &[Vec<Elem>]) -> Result<Vec<Elem>> {
    if rows.len() != n {
        return Err(Error::Shape {
            table: name,
            expected: n,
            got: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape {
                table: name,
                expected: n,
                got: row.len(),
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v as usize >= n {
                return Err(Error::EntryOutOfRange {
                    table: name,
                    row: r,
                    col: c,
                    value: v,
                    order: n,
                });
            }
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

fn check_latin(n: usize, mul: &[Elem]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = mul[r * n + c] as usize;
            if seen[v] == r {
                return Err(Error::NotLatinSquare {
                    line: "row",
                    index: r,
                    value: v as Elem,
                });
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = mul[r * n + c] as usize;
            if seen[v] == c {
                return Err(Error::NotLatinSquare {
                    line: "column",
                    index: c,
                    value: v as Elem,
                });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

fn derive_divisions(n: usize, mul: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let mut ldiv = vec![0; n * n];
    let mut rdiv = vec![0; n * n];
    for x in 0..n {
        for z in 0..n {
            let y = mul[x * n + z] as usize;
            // x * z = y  =>  x \ y = z  and  y / z = x
            ldiv[x * n + y] = z as Elem;
            rdiv[y * n + z] = x as Elem;
        }
    }
    (ldiv, rdiv)
}

fn first_nonassociative(n: usize, mul: &[Elem]) -> Option<(Elem, Elem, Elem)> {
    for x in 0..n {
        for y in 0..n {
            let xy = mul[x * n + y] as usize;
            for z in 0..n {
                let yz = mul[y * n + z] as usize;
                if mul[xy * n + z] != mul[x * n + yz] {
                    return Some((x as Elem, y as Elem, z as Elem));
                }
            }
        }
    }
    None
}

impl FiniteAlgebra {
    /// Checks raw tables against the axioms of `kind` and builds the algebra.
    ///
    /// Missing divisions (and, for groups, inverses) are derived from the
    /// multiplication table.
    pub fn validate(kind: Kind, raw: RawTables) -> Result<AlgebraRef> {
        let n = raw.mul.len();
        if n == 0 {
            return Err(Error::Shape {
                table: "mul",
                expected: 1,
                got: 0,
            });
        }
        let mul = flatten("mul", n, &raw.mul)?;
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(Error::NoUnit { witness: x as Elem });
            }
        }
        check_latin(n, &mul)?;
        let (dl, dr) = derive_divisions(n, &mul);

        let ldiv = match raw.ldiv {
            Some(rows) => {
                let ldiv = flatten("ldiv", n, &rows)?;
                for x in 0..n {
                    for y in 0..n {
                        let w = (x as Elem, y as Elem, 0);
                        if mul[x * n + ldiv[x * n + y] as usize] as usize != y {
                            return Err(Error::AxiomViolation {
                                axiom: "y = x*(x\\y)",
                                witness: w,
                            });
                        }
                        if ldiv[x * n + mul[x * n + y] as usize] as usize != y {
                            return Err(Error::AxiomViolation {
                                axiom: "y = x\\(x*y)",
                                witness: w,
                            });
                        }
                    }
                }
                ldiv
            }
            None => dl,
        };
        let rdiv = match raw.rdiv {
            Some(rows) => {
                let rdiv = flatten("rdiv", n, &rows)?;
                for x in 0..n {
                    for y in 0..n {
                        let w = (x as Elem, y as Elem, 0);
                        if mul[rdiv[x * n + y] as usize * n + y] as usize != x {
                            return Err(Error::AxiomViolation {
                                axiom: "x = (x/y)*y",
                                witness: w,
                            });
                        }
                        if rdiv[mul[x * n + y] as usize * n + y] as usize != x {
                            return Err(Error::AxiomViolation {
                                axiom: "x = (x*y)/y",
                                witness: w,
                            });
                        }
                    }
                }
                rdiv
            }
            None => dr,
        };

        let inv = match kind {
            Kind::Loop => {
                if raw.inv.is_some() {
                    return Err(Error::SignatureMismatch(
                        "loops carry no inverse table".into(),
                    ));
                }
                None
            }
            Kind::Group => {
                if let Some(w) = first_nonassociative(n, &mul) {
                    return Err(Error::NotAssociative { witness: w });
                }
                let derived: Vec<Elem> = (0..n).map(|x| ldiv[x * n]).collect();
                match raw.inv {
                    Some(inv) => {
                        if inv.len() != n {
                            return Err(Error::Shape {
                                table: "inv",
                                expected: n,
                                got: inv.len(),
                            });
                        }
                        for (x, &v) in inv.iter().enumerate() {
                            if v as usize >= n {
                                return Err(Error::EntryOutOfRange {
                                    table: "inv",
                                    row: x,
                                    col: 0,
                                    value: v,
                                    order: n,
                                });
                            }
                            if mul[x * n + v as usize] != ONE || mul[v as usize * n + x] != ONE {
                                return Err(Error::AxiomViolation {
                                    axiom: "x*inv(x) = 1 = inv(x)*x",
                                    witness: (x as Elem, v, 0),
                                });
                            }
                        }
                        Some(inv)
                    }
                    None => Some(derived),
                }
            }
        };

        Ok(Arc::new(FiniteAlgebra {
            kind,
            order: n,
            repr: Repr::Table(Tables {
                mul,
                ldiv,
                rdiv,
                inv,
            }),
            generators: OnceLock::new(),
        }))
    }

    /// Validates a bare multiplication table.
    pub fn from_mul_table(kind: Kind, mul: Vec<Vec<Elem>>) -> Result<AlgebraRef> {
        Self::validate(kind, RawTables::from_mul(mul))
    }

    /// The one-element algebra.
    pub fn trivial(kind: Kind) -> AlgebraRef {
        Self::from_mul_table(kind, vec![vec![0]]).expect("trivial algebra is valid")
    }

    /// Builds the subalgebra of `factors[0] x ... x factors[k-1]` on the given
    /// tuples. Tuples must be sorted and closed under componentwise operations;
    /// the all-units tuple therefore comes first.
    pub(crate) fn from_tuples(
        kind: Kind,
        factors: Vec<AlgebraRef>,
        tuples: Vec<[Elem; MAX_TUPLE]>,
    ) -> AlgebraRef {
        let k = factors.len();
        assert!((1..=MAX_TUPLE).contains(&k), "tuple width {k} unsupported");
        assert!(factors.iter().all(|f| f.kind == kind));
        debug_assert!(tuples.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(tuples.first(), Some(&[0; MAX_TUPLE]));

        let mut strides = [0usize; MAX_TUPLE];
        let mut span = 1usize;
        for i in (0..k).rev() {
            strides[i] = span;
            span = span.saturating_mul(factors[i].order);
        }
        let index = if span <= DENSE_INDEX_LIMIT {
            let mut slots = vec![Elem::MAX; span];
            for (i, t) in tuples.iter().enumerate() {
                let at: usize = (0..k).map(|j| t[j] as usize * strides[j]).sum();
                slots[at] = i as Elem;
            }
            TupleIndex::Dense(slots)
        } else {
            TupleIndex::Sparse(
                tuples
                    .iter()
                    .enumerate()
                    .map(|(i, t)| (*t, i as Elem))
                    .collect(),
            )
        };
        let coords = tuples.iter().flat_map(|t| t[..k].iter().copied()).collect();
        let alg = FiniteAlgebra {
            kind,
            order: tuples.len(),
            repr: Repr::Tuples(Tuples {
                factors,
                coords,
                strides,
                index,
            }),
            generators: OnceLock::new(),
        };
        if cfg!(debug_assertions) && alg.order <= 256 {
            let all: Vec<bool> = vec![true; alg.order];
            debug_assert!(alg.closure_violation(&all).is_none());
        }
        Arc::new(alg)
    }

    fn from_flat_tables(kind: Kind, n: usize, mul: Vec<Elem>) -> AlgebraRef {
        let (ldiv, rdiv) = derive_divisions(n, &mul);
        let inv = (kind == Kind::Group).then(|| (0..n).map(|x| ldiv[x * n]).collect());
        Arc::new(FiniteAlgebra {
            kind,
            order: n,
            repr: Repr::Table(Tables {
                mul,
                ldiv,
                rdiv,
                inv,
            }),
            generators: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.order as Elem
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    fn tuple_combine(&self, t: &Tuples, a: Elem, b: Elem, op: impl Fn(&FiniteAlgebra, Elem, Elem) -> Elem) -> Elem {
        let k = t.factors.len();
        let ca = &t.coords[a as usize * k..a as usize * k + k];
        let cb = &t.coords[b as usize * k..b as usize * k + k];
        let mut out = [0 as Elem; MAX_TUPLE];
        for i in 0..k {
            out[i] = op(&t.factors[i], ca[i], cb[i]);
        }
        t.locate(&out, k).expect("tuple algebra is closed under its operations")
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table(t) => t.mul[a as usize * self.order + b as usize],
            Repr::Tuples(t) => self.tuple_combine(t, a, b, |f, x, y| f.mul(x, y)),
        }
    }

    /// Left division: the unique `z` with `a * z = b`.
    #[inline]
    pub fn ldiv(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table(t) => t.ldiv[a as usize * self.order + b as usize],
            Repr::Tuples(t) => self.tuple_combine(t, a, b, |f, x, y| f.ldiv(x, y)),
        }
    }

    /// Right division: the unique `z` with `z * b = a`.
    #[inline]
    pub fn rdiv(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table(t) => t.rdiv[a as usize * self.order + b as usize],
            Repr::Tuples(t) => self.tuple_combine(t, a, b, |f, x, y| f.rdiv(x, y)),
        }
    }

    /// Group inverse.
    ///
    /// # Panics
    /// On loop-kind algebras, whose signature has no inverse.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert_eq!(self.kind, Kind::Group, "inv is not in the loop signature");
        match &self.repr {
            Repr::Table(t) => t.inv.as_ref().expect("group tables carry inverses")[a as usize],
            Repr::Tuples(t) => self.tuple_combine(t, a, a, |f, x, _| f.inv(x)),
        }
    }

    /// The associator `((ab)c)/(a(bc))`.
    #[inline]
    pub fn associator(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        let left = self.mul(self.mul(a, b), c);
        let right = self.mul(a, self.mul(b, c));
        self.rdiv(left, right)
    }

    /// The group commutator `a b a^-1 b^-1`.
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.rdiv(ab, ba)
    }

    /// The coordinates of a tuple-algebra element, `None` for table algebras.
    pub fn tuple(&self, a: Elem) -> Option<&[Elem]> {
        match &self.repr {
            Repr::Table(_) => None,
            Repr::Tuples(t) => {
                let k = t.factors.len();
                Some(&t.coords[a as usize * k..a as usize * k + k])
            }
        }
    }

    /// The factors of a tuple algebra (empty for table algebras).
    pub fn factors(&self) -> &[AlgebraRef] {
        match &self.repr {
            Repr::Table(_) => &[],
            Repr::Tuples(t) => &t.factors,
        }
    }

    /// Index of the tuple with the given coordinates.
    pub fn locate_tuple(&self, coords: &[Elem]) -> Option<Elem> {
        match &self.repr {
            Repr::Table(_) => None,
            Repr::Tuples(t) => {
                let k = t.factors.len();
                if coords.len() != k {
                    return None;
                }
                let mut buf = [0 as Elem; MAX_TUPLE];
                buf[..k].copy_from_slice(coords);
                t.locate(&buf, k)
            }
        }
    }

    /// Row-major multiplication table.
    pub fn mul_table(&self) -> Vec<Vec<Elem>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn ldiv_table(&self) -> Vec<Vec<Elem>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.ldiv(a, b)).collect())
            .collect()
    }

    pub fn rdiv_table(&self) -> Vec<Vec<Elem>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.rdiv(a, b)).collect())
            .collect()
    }

    /// A witness of non-associativity, if any.
    pub fn nonassociative_witness(&self) -> Option<(Elem, Elem, Elem)> {
        if let Repr::Table(t) = &self.repr {
            return first_nonassociative(self.order, &t.mul);
        }
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.nonassociative_witness().is_none()
    }

    /// Re-validates a loop as a group (synthesising inverses).
    pub fn as_group(&self) -> Result<AlgebraRef> {
        FiniteAlgebra::from_mul_table(Kind::Group, self.mul_table())
    }

    /// Views a group as a loop (forgetting the inverse).
    pub fn as_loop(&self) -> AlgebraRef {
        FiniteAlgebra::from_mul_table(Kind::Loop, self.mul_table())
            .expect("a group table is a loop table")
    }

    /// The closure of `seeds` under multiplication, as a membership mask.
    ///
    /// In a finite loop a multiplicatively closed set containing 1 is a
    /// subloop, so this is the generated subalgebra. Only sets containing
    /// 1 and closed under products are reported, so once more than half of
    /// the carrier is reached the subloop must be everything.
    pub fn generated(&self, seeds: &[Elem]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[ONE as usize] = true;
        let mut list = vec![ONE];
        match self.kind {
            Kind::Group => {
                // Every element of the subgroup is a product of generators, so
                // right multiplication by the seeds reaches all of it.
                let mut i = 0;
                while i < list.len() {
                    let e = list[i];
                    i += 1;
                    for &g in seeds {
                        let p = self.mul(e, g);
                        if !member[p as usize] {
                            member[p as usize] = true;
                            list.push(p);
                        }
                    }
                }
            }
            Kind::Loop => {
                for &s in seeds {
                    if !member[s as usize] {
                        member[s as usize] = true;
                        list.push(s);
                    }
                }
                let mut done = 0usize;
                while done < list.len() {
                    let a = list[done];
                    let mut j = 0;
                    while j <= done {
                        let b = list[j];
                        for p in [self.mul(a, b), self.mul(b, a)] {
                            if !member[p as usize] {
                                member[p as usize] = true;
                                list.push(p);
                            }
                        }
                        j += 1;
                    }
                    done += 1;
                    // A proper Latin subsquare has at most half the order.
                    if 2 * list.len() > self.order {
                        return vec![true; self.order];
                    }
                }
            }
        }
        member
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> &[Elem] {
        self.generators.get_or_init(|| greedy_generators(self, self.elements()))
    }

    /// `Some((a,b))` if the masked subset is not closed under the operations.
    pub fn closure_violation(&self, member: &[bool]) -> Option<(Elem, Elem)> {
        if !member[ONE as usize] {
            return Some((ONE, ONE));
        }
        let elems: Vec<Elem> = self.elements().filter(|&e| member[e as usize]).collect();
        for &a in &elems {
            for &b in &elems {
                if !member[self.mul(a, b) as usize]
                    || !member[self.ldiv(a, b) as usize]
                    || !member[self.rdiv(a, b) as usize]
                {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

impl Tuples {
    #[inline]
    fn locate(&self, c: &[Elem; MAX_TUPLE], k: usize) -> Option<Elem> {
        match &self.index {
            TupleIndex::Dense(slots) => {
                let mut at = 0usize;
                for i in 0..k {
                    at += c[i] as usize * self.strides[i];
                }
                let v = slots[at];
                (v != Elem::MAX).then_some(v)
            }
            TupleIndex::Sparse(map) => {
                let mut key = [0 as Elem; MAX_TUPLE];
                key[..k].copy_from_slice(&c[..k]);
                map.get(&key).copied()
            }
        }
    }
}

/// Greedy generating set of the subalgebra spanned by `candidates`.
pub(crate) fn greedy_generators(
    alg: &FiniteAlgebra,
    candidates: impl Iterator<Item = Elem>,
) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut member = vec![false; alg.order];
    member[ONE as usize] = true;
    for c in candidates {
        if member[c as usize] {
            continue;
        }
        gens.push(c);
        member = alg.generated(&gens);
    }
    gens
}

/// A subalgebra viewed as an algebra in its own right, with its embedding.
#[derive(Clone)]
pub struct Subalgebra {
    algebra: AlgebraRef,
    parent: AlgebraRef,
    embed: Vec<Elem>,
    locate: Vec<Elem>,
}

impl fmt::Debug for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subalgebra")
            .field("order", &self.embed.len())
            .field("parent_order", &self.parent.order())
            .finish()
    }
}

impl Subalgebra {
    /// `members` must contain 1 and be closed under the operations.
    pub fn new(parent: &AlgebraRef, members: &[Elem]) -> Result<Self> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut mask = vec![false; parent.order()];
        for &m in &sorted {
            mask[m as usize] = true;
        }
        if parent.closure_violation(&mask).is_some() {
            return Err(Error::NotClosed);
        }
        Ok(Self::new_unchecked(parent, sorted))
    }

    pub(crate) fn new_unchecked(parent: &AlgebraRef, sorted: Vec<Elem>) -> Self {
        debug_assert_eq!(sorted.first(), Some(&ONE));
        let mut locate = vec![Elem::MAX; parent.order()];
        for (i, &m) in sorted.iter().enumerate() {
            locate[m as usize] = i as Elem;
        }
        let n = sorted.len();
        let algebra = if n == parent.order() {
            parent.clone()
        } else if n <= MATERIALISE_LIMIT {
            let mut mul = Vec::with_capacity(n * n);
            for &a in &sorted {
                for &b in &sorted {
                    mul.push(locate[parent.mul(a, b) as usize]);
                }
            }
            FiniteAlgebra::from_flat_tables(parent.kind(), n, mul)
        } else {
            let tuples = sorted
                .iter()
                .map(|&m| {
                    let mut t = [0; MAX_TUPLE];
                    t[0] = m;
                    t
                })
                .collect();
            FiniteAlgebra::from_tuples(parent.kind(), vec![parent.clone()], tuples)
        };
        Subalgebra {
            algebra,
            parent: parent.clone(),
            embed: sorted,
            locate,
        }
    }

    /// The whole algebra as a subalgebra of itself.
    pub fn whole(parent: &AlgebraRef) -> Self {
        Self::new_unchecked(parent, parent.elements().collect())
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn parent(&self) -> &AlgebraRef {
        &self.parent
    }

    /// Sub-index to parent element.
    pub fn embed(&self, e: Elem) -> Elem {
        self.embed[e as usize]
    }

    /// Parent element to sub-index.
    pub fn locate(&self, p: Elem) -> Option<Elem> {
        let v = self.locate[p as usize];
        (v != Elem::MAX).then_some(v)
    }

    /// Parent elements, sorted.
    pub fn members(&self) -> &[Elem] {
        &self.embed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Vec<Vec<Elem>> {
        (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as Elem).collect())
            .collect()
    }

    #[test]
    fn z2_is_a_group() {
        let a = FiniteAlgebra::from_mul_table(Kind::Group, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(a.order(), 2);
        assert_eq!(a.inv(1), 1);
        assert_eq!(a.ldiv(1, 0), 1);
    }

    #[test]
    fn swapped_entry_is_not_latin() {
        let err = FiniteAlgebra::from_mul_table(Kind::Loop, vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotLatinSquare { .. }), "{err:?}");
    }

    #[test]
    fn unit_must_be_zero() {
        let err = FiniteAlgebra::from_mul_table(Kind::Loop, vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NoUnit { .. }));
    }

    #[test]
    fn out_of_range_and_ragged_tables() {
        let err = FiniteAlgebra::from_mul_table(Kind::Loop, vec![vec![0, 2], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { .. }));
        let err = FiniteAlgebra::from_mul_table(Kind::Loop, vec![vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::Shape { .. }));
    }

    #[test]
    fn nonassociative_group_is_rejected() {
        // The smallest nonassociative loop pattern at order 5.
        let mul = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteAlgebra::from_mul_table(Kind::Loop, mul.clone()).is_ok());
        let err = FiniteAlgebra::from_mul_table(Kind::Group, mul).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn bad_division_table_is_an_axiom_violation() {
        let mut raw = RawTables::from_mul(z(3));
        raw.ldiv = Some(z(3));
        let err = FiniteAlgebra::validate(Kind::Loop, raw).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }), "{err:?}");
    }

    #[test]
    fn bad_inverse_table_is_an_axiom_violation() {
        let mut raw = RawTables::from_mul(z(3));
        raw.inv = Some(vec![0, 1, 2]);
        assert!(matches!(
            FiniteAlgebra::validate(Kind::Group, raw),
            Err(Error::AxiomViolation { .. })
        ));
    }

    #[test]
    fn generators_of_cyclic_groups() {
        let a = FiniteAlgebra::from_mul_table(Kind::Group, z(6)).unwrap();
        assert_eq!(a.generators(), &[1]);
        let mask = a.generated(&[2]);
        assert_eq!(mask, vec![true, false, true, false, true, false]);
    }

    #[test]
    fn subalgebra_materialises_table() {
        let a = FiniteAlgebra::from_mul_table(Kind::Group, z(6)).unwrap();
        let sub = Subalgebra::new(&a, &[0, 2, 4]).unwrap();
        assert_eq!(sub.algebra().order(), 3);
        assert_eq!(sub.embed(sub.algebra().mul(1, 2)), 0);
        assert!(Subalgebra::new(&a, &[0, 1]).is_err());
    }
}
