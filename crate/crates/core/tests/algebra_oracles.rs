//! Congruences, ideals, quotients and homomorphisms checked against
//! brute-force enumeration of partitions and maps.

use std::collections::BTreeSet;

use proptest::prelude::*;
use relcomm_core::commutators::ideal_lattice;
use relcomm_core::*;

fn bundled(name: &str) -> AlgebraRef {
    corpus::bundled(name).unwrap().algebra
}

/// Every set partition of `0..n` as a restricted growth string.
fn partitions(n: usize) -> Vec<Vec<u32>> {
    fn grow(prefix: &mut Vec<u32>, max: u32, n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max + 1 {
            prefix.push(b);
            grow(prefix, max.max(b), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = vec![0];
    grow(&mut prefix, 0, n, &mut out);
    out
}

/// Compatibility with every operation, each checked on its own.
fn compatible(alg: &FiniteAlgebra, labels: &[u32]) -> bool {
    let n = alg.order() as Elem;
    let same = |a: Elem, b: Elem| labels[a as usize] == labels[b as usize];
    for a in 0..n {
        for a2 in 0..n {
            if a == a2 || !same(a, a2) {
                continue;
            }
            if alg.kind() == Kind::Group && !same(alg.inv(a), alg.inv(a2)) {
                return false;
            }
            for c in 0..n {
                let ops: [fn(&FiniteAlgebra, Elem, Elem) -> Elem; 3] =
                    [FiniteAlgebra::mul, FiniteAlgebra::ldiv, FiniteAlgebra::rdiv];
                for op in ops {
                    if !same(op(alg, a, c), op(alg, a2, c)) || !same(op(alg, c, a), op(alg, c, a2)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Canonical labels: blocks numbered by first occurrence.
fn canonical(labels: &[u32]) -> Vec<u32> {
    let mut seen = Vec::new();
    labels
        .iter()
        .map(|l| match seen.iter().position(|s| s == l) {
            Some(i) => i as u32,
            None => {
                seen.push(*l);
                (seen.len() - 1) as u32
            }
        })
        .collect()
}

fn compatible_partitions(alg: &FiniteAlgebra) -> Vec<Vec<u32>> {
    partitions(alg.order()).into_iter().filter(|p| compatible(alg, p)).collect()
}

/// Meet of every compatible partition relating all seed pairs: two
/// elements stay together iff every such partition puts them together.
fn least_congruence(all: &[Vec<u32>], n: usize, seed: &[(Elem, Elem)]) -> Vec<u32> {
    let containing: Vec<&Vec<u32>> = all
        .iter()
        .filter(|p| seed.iter().all(|&(a, b)| p[a as usize] == p[b as usize]))
        .collect();
    let signatures: Vec<Vec<u32>> = (0..n).map(|e| containing.iter().map(|p| p[e]).collect()).collect();
    let mut seen: Vec<&Vec<u32>> = Vec::new();
    signatures
        .iter()
        .map(|sig| match seen.iter().position(|s| *s == sig) {
            Some(i) => i as u32,
            None => {
                seen.push(sig);
                (seen.len() - 1) as u32
            }
        })
        .collect()
}

fn small_algebras() -> Vec<(String, AlgebraRef)> {
    let mut out: Vec<(String, AlgebraRef)> = ["z2", "z4", "z2xz2", "z6", "s3", "l5"]
        .iter()
        .map(|n| (n.to_string(), bundled(n)))
        .collect();
    for n in 1..=5 {
        out.extend(
            corpus::loops_of_order(n)
                .unwrap()
                .iter()
                .map(|e| (e.id.clone(), e.algebra.clone())),
        );
    }
    out
}

#[test]
fn generated_congruences_are_least() {
    for (id, alg) in small_algebras() {
        let all = compatible_partitions(&alg);
        let n = alg.order() as Elem;
        let mut seeds: Vec<Vec<(Elem, Elem)>> = vec![vec![]];
        for a in 0..n {
            for b in a + 1..n {
                seeds.push(vec![(a, b)]);
            }
        }
        if n > 2 {
            seeds.push(vec![(1, 2), (0, n - 1)]);
        }
        for seed in seeds {
            let got = congruence_generated(&alg, &seed);
            assert!(got.is_compatible());
            let expected = least_congruence(&all, alg.order(), &seed);
            assert_eq!(canonical(got.blocks()), expected, "{id} seed {seed:?}");
        }
    }
}

#[test]
fn congruence_examples() {
    let z4 = bundled("z4");
    assert_eq!(canonical(congruence_generated(&z4, &[(2, 0)]).blocks()), vec![0, 1, 0, 1]);
    let s3 = bundled("s3");
    let c = congruence_generated(&s3, &[(1, 0)]);
    assert_eq!(canonical(c.blocks()), vec![0, 0, 0, 1, 1, 1]);
    assert_eq!(congruence_generated(&s3, &[]).num_blocks(), 6);
}

#[test]
fn ideal_lattices_match_compatible_partitions() {
    for (id, alg) in small_algebras() {
        let expected: BTreeSet<Vec<Elem>> = compatible_partitions(&alg)
            .iter()
            .map(|p| alg.elements().filter(|&e| p[e as usize] == p[0]).collect())
            .collect();
        let got: BTreeSet<Vec<Elem>> = ideal_lattice(&alg, Budget::default())
            .unwrap()
            .iter()
            .map(|i| i.members().to_vec())
            .collect();
        assert_eq!(got, expected, "{id}");
    }
}

#[test]
fn normal_subgroups_of_larger_groups() {
    // Normal subgroups by brute force: subgroups closed under conjugation.
    for name in ["d4", "q8", "a4"] {
        let g = bundled(name);
        let n = g.order() as Elem;
        let mut expected = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                let mask = g.generated(&[x, y]);
                let members: Vec<Elem> = (0..n).filter(|&e| mask[e as usize]).collect();
                let normal = members
                    .iter()
                    .all(|&h| (0..n).all(|a| mask[g.mul(g.mul(a, h), g.inv(a)) as usize]));
                if normal {
                    expected.insert(members);
                }
            }
        }
        let got: BTreeSet<Vec<Elem>> = ideal_lattice(&g, Budget::default())
            .unwrap()
            .iter()
            .map(|i| i.members().to_vec())
            .collect();
        // All normal subgroups of these groups are 2-generated.
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn products_are_joins() {
    for name in ["z2xz2", "s3", "d4", "q8", "a4", "l5"] {
        let a = bundled(name);
        let lattice = ideal_lattice(&a, Budget::default()).unwrap();
        for m in &lattice {
            for n in &lattice {
                let p = product_ideal(m, n).unwrap();
                let raw: BTreeSet<Elem> = m
                    .members()
                    .iter()
                    .flat_map(|&x| n.members().iter().map(|&y| a.mul(x, y)).collect::<Vec<_>>())
                    .collect();
                let seed: Vec<Elem> = m.members().iter().chain(n.members()).copied().collect();
                assert_eq!(p.members(), raw.into_iter().collect::<Vec<_>>().as_slice());
                assert_eq!(p.members(), ideal_closure(&a, &seed).members());
            }
        }
    }
}

#[test]
fn quotients_have_the_right_kernels() {
    for (id, alg) in small_algebras().into_iter().chain(["d4", "q8", "a4"].map(|n| (n.to_string(), bundled(n)))) {
        for j in ideal_lattice(&alg, Budget::default()).unwrap() {
            let (q, proj) = hom::quotient_by(&j).unwrap();
            assert_eq!(q.kind(), alg.kind(), "{id}");
            assert!(proj.is_surjective());
            assert_eq!(q.order() * j.len(), alg.order());
            assert_eq!(kernel(&proj).members(), j.members(), "{id}");
            assert_eq!(kernel_pair(&proj).len(), alg.order() * j.len());
        }
    }
}

#[test]
fn quotient_of_z4_by_its_subgroup_is_z2() {
    let z4 = bundled("z4");
    let (q, proj) = quotient(&z4, &congruence_generated(&z4, &[(2, 0)])).unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!(proj.map(), &[0, 1, 0, 1]);
    assert_eq!(q.mul(1, 1), 0);
}

#[test]
fn kernel_pairs_and_pullbacks() {
    let z4 = bundled("z4");
    let z2 = bundled("z2");
    let f = Homomorphism::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
    assert_eq!(kernel(&f).members(), &[0, 2]);
    assert_eq!(kernel_pair(&f).len(), 8);
    let p = pullback(&f, &f).unwrap();
    let expected: BTreeSet<(Elem, Elem)> = (0..4)
        .flat_map(|a| (0..4).map(move |b| (a, b)))
        .filter(|(a, b)| a % 2 == b % 2)
        .collect();
    assert_eq!(p.pairs().collect::<BTreeSet<_>>(), expected);
    let id = Homomorphism::identity(&z2);
    assert_eq!(pullback(&f, &id).unwrap().len(), 4);
    let one = FiniteAlgebra::trivial(Kind::Group);
    let to_one = Homomorphism::to_trivial(&z4, &one);
    let s3 = bundled("s3");
    let s3_to_one = Homomorphism::to_trivial(&s3, &one);
    assert_eq!(pullback(&to_one, &s3_to_one).unwrap().len(), 24);
}

/// Counts homomorphisms by trying every map.
fn brute_hom_count(src: &FiniteAlgebra, dst: &FiniteAlgebra) -> usize {
    let (m, n) = (src.order(), dst.order());
    let mut map = vec![0 as Elem; m];
    let mut count = 0;
    loop {
        let ok = map[0] == 0
            && src
                .elements()
                .all(|a| src.elements().all(|b| map[src.mul(a, b) as usize] == dst.mul(map[a as usize], map[b as usize])));
        if ok {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == m {
                return count;
            }
            map[i] += 1;
            if (map[i] as usize) < n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn homomorphism_search_is_complete() {
    let names = ["z2", "z4", "z2xz2", "s3", "z6"];
    for a in names {
        for b in names {
            let (src, dst) = (bundled(a), bundled(b));
            if src.order().pow(dst.order() as u32) > 2_000_000 && dst.order().pow(src.order() as u32) > 2_000_000 {
                continue;
            }
            let found = homomorphisms(&src, &dst);
            let maps: BTreeSet<Vec<Elem>> = found.iter().map(|h| h.map().to_vec()).collect();
            assert_eq!(maps.len(), found.len());
            assert_eq!(found.len(), brute_hom_count(&src, &dst), "{a} -> {b}");
        }
    }
}

#[test]
fn loop_axioms_hold_for_every_generated_loop() {
    for n in 1..=6 {
        for e in corpus::loops_of_order(n).unwrap() {
            let l = &e.algebra;
            for x in l.elements() {
                for y in l.elements() {
                    assert_eq!(l.mul(x, l.ldiv(x, y)), y);
                    assert_eq!(l.ldiv(x, l.mul(x, y)), y);
                    assert_eq!(l.mul(l.rdiv(x, y), y), x);
                    assert_eq!(l.rdiv(l.mul(x, y), y), x);
                }
            }
            if l.is_associative() {
                let g = l.as_group().unwrap();
                assert_eq!(g.kind(), Kind::Group);
            } else {
                assert!(l.as_group().is_err());
            }
        }
    }
}

#[test]
fn small_loops_are_groups() {
    for n in 1..=4 {
        assert!(corpus::loops_of_order(n).unwrap().iter().all(|e| e.algebra.is_associative()));
    }
    assert!(corpus::loops_of_order(5).unwrap().iter().any(|e| !e.algebra.is_associative()));
}

fn closure_algebras() -> Vec<AlgebraRef> {
    ["z2", "z4", "z2xz2", "z6", "s3", "d4", "q8", "l5"].iter().map(|n| bundled(n)).collect()
}

proptest! {
    #[test]
    fn ideal_closure_is_a_closure_operator(which in 0usize..8, s in prop::collection::vec(0u32..8, 0..4), t in prop::collection::vec(0u32..8, 0..4)) {
        let a = &closure_algebras()[which];
        let n = a.order() as u32;
        let s: Vec<Elem> = s.into_iter().map(|x| x % n).collect();
        let t: Vec<Elem> = t.into_iter().map(|x| x % n).collect();
        let cs = ideal_closure(a, &s);
        prop_assert!(s.iter().all(|&x| cs.contains(x)));
        let st: Vec<Elem> = s.iter().chain(&t).copied().collect();
        prop_assert!(cs.is_subset(&ideal_closure(a, &st)));
        let again = ideal_closure(a, cs.members());
        prop_assert_eq!(again.members(), cs.members());
    }

    #[test]
    fn meets_are_intersections(which in 0usize..8, x in 0u32..8, y in 0u32..8) {
        let a = &closure_algebras()[which];
        let n = a.order() as u32;
        let i = ideal_closure(a, &[x % n]);
        let j = ideal_closure(a, &[y % n]);
        let meet = i.intersection(&j).unwrap();
        let expected: Vec<Elem> = i.members().iter().copied().filter(|&e| j.contains(e)).collect();
        prop_assert_eq!(meet.members(), expected.as_slice());
        prop_assert!(meet.witness().is_compatible());
    }
}
