#![allow(dead_code)]

use axgroup_core::fol::{parse_sentence, Formula, Quantifier, Term};
use axgroup_core::groups::{
    build_group, ActionSpec, AutomorphismSpec, FiniteGroup, GroupDescriptor, MultiplicationTable,
    OddPrime,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn p(n: u32) -> OddPrime {
    OddPrime::new(n).unwrap()
}

pub fn primes(ps: &[u32]) -> Vec<OddPrime> {
    ps.iter().map(|&n| p(n)).collect()
}

pub fn cyc(n: u32) -> FiniteGroup {
    FiniteGroup::cyclic(n).unwrap()
}

fn semidirect_cyclic(n: u32, m: u32, unit: i64) -> FiniteGroup {
    build_group(&GroupDescriptor::Semidirect {
        kernel: Box::new(GroupDescriptor::Cyclic(n)),
        complement: Box::new(GroupDescriptor::Cyclic(m)),
        action: ActionSpec { generator_images: vec![AutomorphismSpec::Unit(unit)] },
    })
    .unwrap()
}

/// Group generated by permutations of `0..degree`, as a table with the
/// identity first.
pub fn permutation_group(name: &str, degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let next: Vec<usize> = (0..degree).map(|x| g[elems[i][x]]).collect();
            if !elems.contains(&next) {
                elems.push(next);
            }
        }
        i += 1;
    }
    let index = |q: &Vec<usize>| elems.iter().position(|e| e == q).unwrap() as u32;
    let table = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| index(&(0..degree).map(|x| a[b[x]]).collect()))
                .collect()
        })
        .collect();
    let order = elems.len();
    FiniteGroup::from_table(&MultiplicationTable { order, table }).unwrap().with_name(name)
}

/// Quaternion group from the 8 unit quaternions acting on themselves.
pub fn quaternion() -> FiniteGroup {
    // Elements ±1, ±i, ±j, ±k encoded as (sign, unit) with unit in 0..4.
    let mul = |(s1, u1): (bool, usize), (s2, u2): (bool, usize)| -> (bool, usize) {
        // Products of basis units: table[u1][u2] = (negate, unit).
        const T: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let (neg, u) = T[u1][u2];
        (s1 ^ s2 ^ neg, u)
    };
    let elems: Vec<(bool, usize)> =
        (0..4).flat_map(|u| [(false, u), (true, u)]).collect();
    let index = |e: (bool, usize)| elems.iter().position(|&x| x == e).unwrap() as u32;
    let table = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| index(mul(a, b))).collect())
        .collect();
    FiniteGroup::from_table(&MultiplicationTable { order: 8, table }).unwrap().with_name("Q8")
}

/// The same group with elements renamed by a random permutation fixing 0.
pub fn relabel(g: &FiniteGroup, seed: u64) -> FiniteGroup {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<u32> = (1..n as u32).collect();
    perm.shuffle(&mut rng);
    perm.insert(0, 0);
    let mut inverse = vec![0u32; n];
    for (i, &x) in perm.iter().enumerate() {
        inverse[x as usize] = i as u32;
    }
    let table = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (x, y) = (inverse[a], inverse[b]);
                    perm[g.op(axgroup_core::Elem(x), axgroup_core::Elem(y)).index()]
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(&MultiplicationTable { order: n, table })
        .unwrap()
        .with_name(format!("relabel({})", g.name()))
}

/// Groups of order at most 12, covering every isomorphism type except a
/// few abelian repeats.
pub fn corpus_groups() -> Vec<FiniteGroup> {
    let mut groups = vec![FiniteGroup::trivial()];
    groups.extend((2..=12).map(cyc));
    groups.push(FiniteGroup::klein(2));
    groups.push(FiniteGroup::klein(3));
    groups.push(FiniteGroup::direct_product(&[cyc(2), cyc(4)]));
    groups.push(FiniteGroup::direct_product(&[cyc(3), cyc(3)]));
    groups.push(FiniteGroup::direct_product(&[cyc(2), cyc(6)]));
    groups.push(FiniteGroup::dihedral(p(3)));
    groups.push(FiniteGroup::dihedral(p(5)));
    groups.push(semidirect_cyclic(4, 2, -1).with_name("D4"));
    groups.push(quaternion());
    groups.push(semidirect_cyclic(3, 4, -1).with_name("Dic3"));
    groups.push(FiniteGroup::direct_product(&[FiniteGroup::dihedral(p(3)), cyc(2)]));
    groups.push(permutation_group("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]));
    groups
}

/// Closed sentences of quantifier rank at most 2.
pub const SENTENCES: &[&str] = &[
    "forall x. x = x",
    "forall x. x*1 = x",
    "forall x. x*x^-1 = 1",
    "forall x. x = 1",
    "exists x. x != 1",
    "forall x. x^2 = 1",
    "forall x. x^3 = 1",
    "forall x. x^4 = 1",
    "forall x. x^6 = 1",
    "exists x. x^2 != 1",
    "exists x. x^3 != 1",
    "exists x. x != 1 & x^2 = 1",
    "exists x. x != 1 & x^3 = 1",
    "exists x. x^2 != 1 & x^3 != 1",
    "exists x. x^2 != 1 & x^4 = 1",
    "forall x. x^2 = 1 -> x = 1",
    "forall x. x^3 = 1 -> x = 1",
    "forall x. x^5 = 1 -> x = 1",
    "forall x. x^2 = 1 | x^3 = 1",
    "forall x. x^2 = 1 <-> x^4 = 1",
    "forall x. exists y. y^2 = x",
    "forall x. exists y. y^3 = x",
    "forall x. exists y. x*y = y*x",
    "forall x,y. x*y = y*x",
    "exists x,y. x*y != y*x",
    "forall x,y. [x,y] = 1",
    "forall x,y. (x*y)^2 = x^2*y^2",
    "forall x,y. (x*y)^-1 = x^-1*y^-1",
    "forall x,y. x^2 = y^2 -> x = y",
    "forall x,y. x^3 = y^3 -> x = y",
    "exists x,y. x != y & x^2 = y^2",
    "exists x,y. x != 1 & y != 1 & x != y & x^2 = 1 & y^2 = 1",
    "exists x,y. x^2 = 1 & y^2 = 1 & x*y != y*x",
    "forall x. exists y. x = [y,y]",
    "exists x. forall y. x*y = y*x",
    "exists x. x != 1 & (forall y. x*y = y*x)",
    "forall x. (forall y. x*y = y*x) -> x = 1",
    "exists x. forall y. y = 1 | y = x",
    "exists x. forall y. y = 1 | y = x | y = x^-1",
    "forall x,y. x*y*x^-1 = y^-1 -> y^2 = 1",
    "exists x. forall y. x*y*x^-1 = y",
    "exists x,y. [x,y] != 1 & [x,y]^3 = 1",
    "exists x,y. [x,y]^2 != 1",
    "forall x,y. [x,y]^3 = 1",
    "forall x,y. [x,y]^2 = 1",
    "forall x. x = 1 | x^-1 != x",
    "!(forall x. x^2 = 1)",
    "!(exists x,y. x*y != y*x) <-> (forall x,y. [x,y] = 1)",
    "(forall x. x^2 = 1) -> (forall x,y. x*y = y*x)",
    "(exists x. x^2 != 1) | (forall x. x = 1)",
    "forall x. exists y. y != x & y^2 = x^2",
    "exists x. forall y. y^2 != x | y = 1",
    "forall x,y. x*y = 1 -> y*x = 1",
    "exists x. x^2 = x & x != 1",
    "forall x. x^12 = 1",
    "forall x,y. x^2*y = y*x^2",
];

pub fn sentence_corpus() -> Vec<Formula> {
    SENTENCES.iter().map(|s| parse_sentence(s).unwrap_or_else(|e| panic!("{s}: {e}"))).collect()
}

const NAMES: &[&str] = &["x", "y", "z", "w"];

pub fn arb_term(depth: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        1 => Just(Term::One),
        4 => prop::sample::select(NAMES).prop_map(Term::var),
    ];
    leaf.prop_recursive(depth, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.mul(b)),
            inner.clone().prop_map(Term::inv),
            (inner.clone(), -4i64..=5).prop_map(|(a, n)| a.pow(n)),
            (inner.clone(), inner).prop_map(|(a, b)| a.comm(b)),
        ]
    })
}

/// Random formulas over the variables `x, y, z, w`, possibly with free
/// variables and shadowed binders.
pub fn arb_formula() -> impl Strategy<Value = Formula> {
    let atom = (arb_term(2), arb_term(2)).prop_map(|(a, b)| Formula::eq(a, b));
    atom.prop_recursive(4, 16, 2, |inner| {
        let names = prop::sample::subsequence(NAMES.to_vec(), 1..=2);
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.implies(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.iff(b)),
            (any::<bool>(), names, inner).prop_map(|(all, vs, body)| {
                let q = if all { Quantifier::Forall } else { Quantifier::Exists };
                Formula::Quant(q, vs.into_iter().map(String::from).collect(), Box::new(body))
            }),
        ]
    })
}

/// Closes a formula by universally quantifying its free variables.
pub fn close(phi: Formula) -> Formula {
    let free: Vec<String> = phi.free_vars().into_iter().collect();
    if free.is_empty() {
        phi
    } else {
        Formula::forall(free, phi)
    }
}
