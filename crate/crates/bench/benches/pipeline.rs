use axgroup_core::axioms::{axiom, AxiomKind, FastVerifier};
use axgroup_core::efgame::ef_equivalent;
use axgroup_core::fol::{evaluate, Assignment, Budget};
use axgroup_core::groups::{find_isomorphism, DEFAULT_SEARCH_NODES};
use axgroup_core::structure::{
    classify_candidates, commutator_set, reconstruct, schur_zassenhaus_complement,
};
use axgroup_core::{FiniteGroup, OddPrime};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn g_s(ps: &[u32]) -> FiniteGroup {
    let primes: Vec<OddPrime> = ps.iter().map(|&p| OddPrime::new(p).unwrap()).collect();
    FiniteGroup::dihedral_product(&primes)
}

fn primes(ps: &[u32]) -> Vec<OddPrime> {
    ps.iter().map(|&p| OddPrime::new(p).unwrap()).collect()
}

fn axioms(c: &mut Criterion) {
    let g = g_s(&[3, 5, 7]);
    c.bench_function("commutator_set/G_357", |b| b.iter(|| commutator_set(black_box(&g))));
    c.bench_function("verify_fast/all/G_357", |b| {
        b.iter(|| {
            let v = FastVerifier::new(&g);
            [AxiomKind::CommutatorClosure, AxiomKind::Square, AxiomKind::Centralizer]
                .into_iter()
                .chain(primes(&[3, 5, 7]).into_iter().map(AxiomKind::InvertingInvolution))
                .all(|k| v.verify(k))
        })
    });
    let d3 = g_s(&[3]);
    let closure = axiom(AxiomKind::CommutatorClosure);
    c.bench_function("evaluate/closure/D3", |b| {
        b.iter(|| evaluate(&d3, &closure, &Assignment::new(), Budget::UNLIMITED).unwrap())
    });
}

fn structure(c: &mut Criterion) {
    let g = g_s(&[3, 5, 7]);
    let n = commutator_set(&g);
    c.bench_function("complement/G_357", |b| b.iter(|| schur_zassenhaus_complement(&g, &n).unwrap()));
    let g35 = g_s(&[3, 5]);
    c.bench_function("reconstruct/G_35", |b| b.iter(|| reconstruct(&primes(&[3, 5]), &g35)));
    c.bench_function("find_isomorphism/G_357", |b| {
        let h = FiniteGroup::direct_product(&[g_s(&[7]), g_s(&[3, 5])]);
        b.iter(|| find_isomorphism(&g, &h, DEFAULT_SEARCH_NODES).unwrap().unwrap())
    });
    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    slow.bench_function("classify/3_5", |b| b.iter(|| classify_candidates(&primes(&[3, 5])).unwrap()));
    slow.finish();
}

fn games(c: &mut Criterion) {
    let d3 = g_s(&[3]);
    let c6 = FiniteGroup::cyclic(6).unwrap();
    let c15 = FiniteGroup::cyclic(15).unwrap();
    let c3xc5 =
        FiniteGroup::direct_product(&[FiniteGroup::cyclic(3).unwrap(), FiniteGroup::cyclic(5).unwrap()]);
    c.bench_function("ef/D3_C6/rank3", |b| b.iter(|| ef_equivalent(&d3, &c6, 3).unwrap()));
    c.bench_function("ef/C15_C3xC5/rank4", |b| b.iter(|| ef_equivalent(&c15, &c3xc5, 4).unwrap()));
}

criterion_group!(benches, axioms, structure, games);
criterion_main!(benches);
