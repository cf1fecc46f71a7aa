use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use barnette::catalog::{default_catalog, validate_catalog};
use barnette::constructor::construct_hamiltonian_set;
use barnette::dualize::tree_to_dual_cycle;
use barnette::fixtures::icosahedron;
use barnette::oracle::{enumerate_hamiltonian_sets, exhaustive_family_census, SearchConstraint};
use barnette::planar::canonical_code;
use barnette::rewrite::enumerate_family;
use barnette::verifier::Flavor;
use barnette_bench::classes_of_size;

fn generation(c: &mut Criterion) {
    c.bench_function("enumerate 16", |b| b.iter(|| enumerate_family(black_box(16))));
    c.bench_function("census 16", |b| b.iter(|| exhaustive_family_census(black_box(16)).unwrap()));
    let ico = icosahedron();
    c.bench_function("canonical code icosahedron", |b| b.iter(|| canonical_code(black_box(&ico))));
}

fn sets(c: &mut Criterion) {
    let ico = icosahedron();
    c.bench_function("oracle all compatible icosahedron", |b| {
        b.iter(|| enumerate_hamiltonian_sets(black_box(&ico), SearchConstraint::all(Flavor::Compatible)).unwrap())
    });
    let graphs = classes_of_size(20);
    c.bench_function("construct every 20-vertex class", |b| {
        b.iter(|| {
            for t in &graphs {
                black_box(construct_hamiltonian_set(t, Flavor::Compatible).unwrap());
            }
        })
    });
    let built: Vec<_> =
        graphs.iter().map(|t| (t.clone(), construct_hamiltonian_set(t, Flavor::Compatible).unwrap().set)).collect();
    c.bench_function("dualize every 20-vertex class", |b| {
        b.iter_batched(
            || built.clone(),
            |v| {
                for (t, u) in &v {
                    black_box(tree_to_dual_cycle(t, u).unwrap());
                }
            },
            BatchSize::LargeInput,
        )
    });
}

fn catalog(c: &mut Criterion) {
    c.bench_function("validate catalog", |b| b.iter(|| validate_catalog(black_box(default_catalog()))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = generation, sets, catalog
}
criterion_main!(benches);
