use avoid_core::game::{
    automorphism_strategy, kn_p2_defender, kn_symmetry_breaker, product_board, product_breaker,
    ProductBoard,
};
use avoid_core::graph::{make_family, FamilySpec, Graph, Platonic};
use avoid_core::morphisms::find_fixed_edge_free_involution;
use avoid_core::solver::{verify_strategy, Adversary, Property, VerifyOptions};
use avoid_core::Player;

fn fam(s: FamilySpec) -> Graph {
    make_family(&s).unwrap()
}

fn check(
    g: &Graph,
    f: Option<&Graph>,
    s: &dyn avoid_core::Strategy,
    adversary: Adversary,
    property: Property,
) {
    let report = verify_strategy(
        g,
        f,
        s,
        s.side(),
        adversary,
        property,
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(report.games > 0);
    assert!(
        report.passed(),
        "{}: {:?}",
        s.name(),
        report.violations.first()
    );
}

#[test]
fn automorphism_strategies_survive_random_opponents() {
    let specs = [
        FamilySpec::Path(4),
        FamilySpec::Path(10),
        FamilySpec::Cycle(6),
        FamilySpec::Cycle(12),
        FamilySpec::Cube(3),
        FamilySpec::Grid(vec![3, 3]),
        FamilySpec::CompleteBipartite(3, 4),
        FamilySpec::CompleteBipartiteMinusEdge(3, 3),
        FamilySpec::CompleteMinusMatching(6),
        FamilySpec::Platonic(Platonic::Octahedron),
    ];
    for spec in specs {
        let g = fam(spec);
        let phi = find_fixed_edge_free_involution(&g).unwrap();
        let s = automorphism_strategy(&g, phi).unwrap();
        check(
            &g,
            None,
            &s,
            Adversary::Random {
                count: 200,
                seed: 11,
            },
            Property::SymmetricAfterBMoves,
        );
    }
}

#[test]
fn p2_defender_exhaustive() {
    let p2 = fam(FamilySpec::Path(2));
    for n in 3..=6 {
        let d = kn_p2_defender(n);
        let kn = fam(FamilySpec::Complete(n));
        for property in [Property::NeverLoses, Property::SymmetricAfterBMoves] {
            check(
                &kn,
                Some(&p2),
                &d,
                Adversary::Exhaustive { prune: false },
                property,
            );
        }
    }
}

#[test]
fn p2_defender_random() {
    let p2 = fam(FamilySpec::Path(2));
    for n in 7..=10 {
        let d = kn_p2_defender(n);
        let kn = fam(FamilySpec::Complete(n));
        for property in [Property::NeverLoses, Property::SymmetricAfterBMoves] {
            check(
                &kn,
                Some(&p2),
                &d,
                Adversary::Random {
                    count: 1000,
                    seed: n as u64,
                },
                property,
            );
        }
    }
}

#[test]
fn kn_breaker_exhaustive() {
    for n in 4..=6 {
        let kn = fam(FamilySpec::Complete(n));
        check(
            &kn,
            None,
            &kn_symmetry_breaker(n),
            Adversary::Exhaustive { prune: false },
            Property::SymmetryBrokenBy(n - 1),
        );
    }
}

#[test]
fn kn_breaker_is_wasted_on_other_boards() {
    let s = kn_symmetry_breaker(5);
    let report = verify_strategy(
        &fam(FamilySpec::Cycle(5)),
        None,
        &s,
        Player::A,
        Adversary::Random { count: 5, seed: 0 },
        Property::SymmetryBrokenBy(2),
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(!report.passed());
    assert!(report.violations[0].reason.contains("fault"));
}

#[test]
fn product_breakers() {
    for which in [
        ProductBoard::CartesianK3eP2,
        ProductBoard::CategoricalK3eK3e,
    ] {
        let g = product_board(which);
        check(
            &g,
            None,
            &product_breaker(which),
            Adversary::Exhaustive { prune: false },
            Property::SymmetryBrokenBy(g.size() / 2),
        );
    }
    for which in ProductBoard::ALL {
        let g = product_board(which);
        let adversary = Adversary::MirrorRandom {
            count: 500,
            seed: 3,
        };
        check(
            &g,
            None,
            &product_breaker(which),
            adversary,
            Property::SymmetryBrokenBy(g.size() / 2),
        );
    }
}

#[test]
fn categorical_breaker_is_fast() {
    // a star at the degree-9 centre breaks by round 7 at the latest
    let which = ProductBoard::CategoricalK3eK3e;
    check(
        &product_board(which),
        None,
        &product_breaker(which),
        Adversary::Exhaustive { prune: false },
        Property::SymmetryBrokenBy(7),
    );
}
