use std::collections::HashSet;

use avoid_core::game::{automorphism_strategy, new_game, GameState, Status};
use avoid_core::graph::{make_family, sum, FamilySpec, Graph};
use avoid_core::morphisms::find_fixed_edge_free_involution;
use avoid_core::solver::*;
use avoid_core::{Budget, Player};
use proptest::prelude::*;

fn fam(s: FamilySpec) -> Graph {
    make_family(&s).unwrap()
}

fn member(g: &Graph) -> bool {
    decide_symm(g).unwrap().outcome == SymmOutcome::Member
}

/// Plain minimax over game states: value for the player to move.
fn oracle_value(state: &GameState) -> i8 {
    let mover = state.to_move();
    let mut best = -1;
    for e in state.uncolored_edges() {
        let next = state.apply_move(e).unwrap();
        let v = match next.status() {
            s if s == Status::lost_by(mover) => -1,
            Status::Drawn => 0,
            Status::InProgress => -oracle_value(&next),
            _ => unreachable!("only the mover can lose on a move"),
        };
        best = best.max(v);
        if best == 1 {
            break;
        }
    }
    best
}

/// Plain SYMM decision straight from the definition.
fn oracle_symm(state: &GameState, rounds: usize) -> bool {
    if state.rounds() >= rounds {
        return true;
    }
    state.uncolored_edges().into_iter().all(|a| {
        let s = state.apply_move(a).unwrap();
        s.uncolored_edges().into_iter().any(|b| {
            let t = s.apply_move(b).unwrap();
            t.red_blue_isomorphic() && oracle_symm(&t, rounds)
        })
    })
}

#[test]
fn symm_examples() {
    assert!(member(&fam(FamilySpec::Path(2))));
    let k3e = fam(FamilySpec::TrianglePlusEdge);
    assert!(member(&k3e));
    assert!(find_fixed_edge_free_involution(&k3e).is_none());
    for g in [
        fam(FamilySpec::Path(7)),
        fam(FamilySpec::Cycle(9)),
        fam(FamilySpec::Complete(4)),
        fam(FamilySpec::Complete(5)),
        sum(&fam(FamilySpec::Complete(3)), &fam(FamilySpec::Path(3))),
    ] {
        assert!(!member(&g), "{}", g.to_graph6());
    }
}

#[test]
fn symm_matches_definition_on_small_graphs() {
    for g in enumerate_graphs(5, None, false)
        .into_iter()
        .filter(|g| g.size() <= 7)
    {
        let state = new_game(g.clone(), None).unwrap();
        assert_eq!(
            member(&g),
            oracle_symm(&state, g.size() / 2),
            "{}",
            g.to_graph6()
        );
    }
}

#[test]
fn memo_is_sound_on_the_census() {
    let no_memo = SymmOptions {
        memo: false,
        ..SymmOptions::default()
    };
    let mut checked = 0;
    for g in enumerate_graphs(8, None, false)
        .into_iter()
        .take_while(|g| g.size() <= 8)
    {
        let with = decide_symm(&g).unwrap();
        let without = decide_symm_with(&g, &no_memo).unwrap();
        assert_eq!(with.outcome, without.outcome, "{}", g.to_graph6());
        checked += 1;
    }
    assert_eq!(checked, 436);
}

#[test]
fn auto_is_inside_symm() {
    for g in enumerate_graphs(8, None, false)
        .into_iter()
        .take_while(|g| g.size() <= 8)
    {
        if find_fixed_edge_free_involution(&g).is_some() {
            assert!(member(&g), "{}", g.to_graph6());
        }
    }
}

#[test]
fn even_size_sums_stay_symmetric() {
    let members: Vec<Graph> = enumerate_graphs(4, None, false)
        .into_iter()
        .filter(|g| g.size() > 0 && g.size() % 2 == 0 && member(g))
        .collect();
    assert!(members.len() >= 4);
    for g1 in &members {
        for g2 in &members {
            assert!(
                member(&sum(g1, g2)),
                "{} + {}",
                g1.to_graph6(),
                g2.to_graph6()
            );
        }
    }
}

#[test]
fn certificates_replay() {
    let options = VerifyOptions::default();
    for g in enumerate_graphs(5, None, false)
        .into_iter()
        .filter(|g| (1..=8).contains(&g.size()))
    {
        let r = decide_symm(&g).unwrap();
        match &r.certificate {
            SymmCertificate::Symmetric { strategy } => {
                let report = verify_strategy(
                    &g,
                    None,
                    strategy,
                    Player::B,
                    Adversary::Exhaustive { prune: false },
                    Property::SymmetricAfterBMoves,
                    &options,
                )
                .unwrap();
                assert!(
                    report.passed(),
                    "{}: {:?}",
                    g.to_graph6(),
                    report.violations.first()
                );
            }
            SymmCertificate::Breaking { strategy, line } => {
                let mut state = new_game(g.clone(), None).unwrap();
                for &e in line {
                    state = state.apply_move(e).unwrap();
                }
                assert_eq!(line.len() % 2, 1);
                for f in state.uncolored_edges() {
                    assert!(!state.apply_move(f).unwrap().red_blue_isomorphic());
                }
                let limit = g.size() / 2;
                let report = verify_strategy(
                    &g,
                    None,
                    strategy,
                    Player::A,
                    Adversary::Exhaustive { prune: false },
                    Property::SymmetryBrokenBy(limit),
                    &options,
                )
                .unwrap();
                assert!(
                    report.passed(),
                    "{}: {:?}",
                    g.to_graph6(),
                    report.violations.first()
                );
            }
        }
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let options = SymmOptions {
        budget: Budget::nodes(3),
        memo: true,
    };
    assert!(matches!(
        decide_symm_with(&fam(FamilySpec::Complete(5)), &options),
        Err(SolveError::BudgetExceeded { .. })
    ));
    let options = AvoidOptions {
        budget: Budget::nodes(3),
    };
    let k6 = fam(FamilySpec::Complete(6));
    let k3 = fam(FamilySpec::Complete(3));
    assert!(matches!(
        solve_avoidance_with(&k6, &k3, &options),
        Err(SolveError::BudgetExceeded { .. })
    ));
    assert!(matches!(
        solve_avoidance(&k6, &Graph::empty(2)),
        Err(SolveError::EdgelessForbidden)
    ));
}

#[test]
fn avoidance_examples() {
    let p2 = fam(FamilySpec::Path(2));
    let p1 = fam(FamilySpec::Path(1));
    assert_eq!(
        solve_avoidance(&fam(FamilySpec::Complete(3)), &p2)
            .unwrap()
            .outcome,
        AvoidOutcome::ALoses
    );
    assert_eq!(
        solve_avoidance(&p2, &p1).unwrap().outcome,
        AvoidOutcome::ALoses
    );
    let k4 = fam(FamilySpec::Complete(4));
    for f in enumerate_graphs(4, None, false)
        .into_iter()
        .filter(|f| f.size() > 0)
    {
        assert_ne!(
            solve_avoidance(&k4, &f).unwrap().outcome,
            AvoidOutcome::BLoses,
            "{}",
            f.to_graph6()
        );
    }
}

fn forbidden_catalog() -> Vec<Graph> {
    vec![
        fam(FamilySpec::Path(1)),
        fam(FamilySpec::Path(2)),
        fam(FamilySpec::Path(3)),
        fam(FamilySpec::Complete(3)),
        fam(FamilySpec::Star(3)),
        Graph::new(4, [(0, 1), (2, 3)]).unwrap(),
    ]
}

#[test]
fn avoidance_matches_plain_minimax() {
    let boards = enumerate_graphs(5, None, false)
        .into_iter()
        .filter(|g| (1..=7).contains(&g.size()));
    let mut seen = HashSet::new();
    for g in boards {
        for f in forbidden_catalog() {
            let expected = match oracle_value(&new_game(g.clone(), Some(f.clone())).unwrap()) {
                1 => AvoidOutcome::BLoses,
                -1 => AvoidOutcome::ALoses,
                _ => AvoidOutcome::Drawn,
            };
            let got = solve_avoidance(&g, &f).unwrap().outcome;
            assert_eq!(
                got,
                expected,
                "{} avoiding {}",
                g.to_graph6(),
                f.to_graph6()
            );
            seen.insert(format!("{got:?}"));
        }
    }
    assert_eq!(seen.len(), 3, "all three outcomes occur");
}

#[test]
fn optimal_tables_achieve_the_outcome() {
    for (g, f) in [
        (fam(FamilySpec::Complete(4)), fam(FamilySpec::Path(2))),
        (fam(FamilySpec::Complete(4)), fam(FamilySpec::Complete(3))),
        (fam(FamilySpec::Cycle(5)), fam(FamilySpec::Path(2))),
        (fam(FamilySpec::Complete(5)), fam(FamilySpec::Complete(3))),
    ] {
        let r = solve_avoidance(&g, &f).unwrap();
        let side = match r.outcome {
            AvoidOutcome::ALoses => Player::B,
            _ => Player::A,
        };
        let report = verify_strategy(
            &g,
            Some(&f),
            &r.strategy.for_side(side),
            side,
            Adversary::Exhaustive { prune: false },
            Property::NeverLoses,
            &VerifyOptions::default(),
        )
        .unwrap();
        assert!(report.passed(), "{report:?}");
    }
}

#[test]
fn sim_has_no_draws() {
    let r = solve_avoidance(&fam(FamilySpec::Complete(6)), &fam(FamilySpec::Complete(3))).unwrap();
    assert_eq!(r.outcome, AvoidOutcome::ALoses);
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_graphs(5, None, false).len(), 34);
    assert_eq!(enumerate_graphs(1, None, false).len(), 1);
    assert_eq!(enumerate_graphs(1, None, true).len(), 1);
    assert_eq!(enumerate_graphs(4, Some(2), false).len(), 2);
    let first = enumerate_graphs(6, Some(4), false);
    assert_eq!(first, enumerate_graphs(6, Some(4), false));
}

/// Connected graphs with 6 edges, deduplicated by the lexicographically
/// least adjacency string over all vertex orders.
#[test]
fn size_six_census_matches_brute_force() {
    fn next_perm(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }
    let mut classes: HashSet<(usize, u32)> = HashSet::new();
    for k in 2..=7 {
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .collect();
        let mut choice: Vec<usize> = (0..6).collect();
        if pairs.len() < 6 {
            continue;
        }
        loop {
            let edges: Vec<(usize, usize)> = choice.iter().map(|&i| pairs[i]).collect();
            let g = Graph::new(k, edges.iter().copied()).unwrap();
            if g.is_connected() {
                let mut perm: Vec<usize> = (0..k).collect();
                let mut best = u32::MAX;
                loop {
                    let code = edges.iter().fold(0u32, |acc, &(u, v)| {
                        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                        acc | 1 << pairs.iter().position(|&p| p == (a, b)).unwrap()
                    });
                    best = best.min(code);
                    if !next_perm(&mut perm) {
                        break;
                    }
                }
                classes.insert((k, best));
            }
            // next 6-combination of the pairs
            let Some(i) = (0..6).rev().find(|&i| choice[i] < pairs.len() - 6 + i) else {
                break;
            };
            choice[i] += 1;
            for j in i + 1..6 {
                choice[j] = choice[j - 1] + 1;
            }
        }
    }
    let census = enumerate_graphs(7, Some(6), true);
    assert_eq!(census.len(), classes.len());
    assert!(census.iter().all(|g| g.size() == 6 && g.is_connected()));
}

#[test]
fn classify_examples() {
    let c4 = classify(&fam(FamilySpec::Cycle(4)));
    assert!(c4.in_auto && c4.in_symm == Some(true) && c4.witness.is_some());
    for g in [fam(FamilySpec::Cycle(5)), fam(FamilySpec::Star(3))] {
        let c = classify(&g);
        assert!(!c.in_auto && c.in_symm == Some(true), "{c:?}");
    }
    let p7 = classify(&fam(FamilySpec::Path(7)));
    assert_eq!(p7.in_symm, Some(false));
    assert!(p7.to_json_line().contains("\"line\":"));
}

#[test]
fn automorphism_strategy_holds_on_c4() {
    let c4 = fam(FamilySpec::Cycle(4));
    let phi = find_fixed_edge_free_involution(&c4).unwrap();
    let s = automorphism_strategy(&c4, phi).unwrap();
    let report = verify_strategy(
        &c4,
        None,
        &s,
        Player::B,
        Adversary::Exhaustive { prune: false },
        Property::SymmetricAfterBMoves,
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(report.passed() && report.games > 0);
}

#[test]
fn violations_carry_replayable_transcripts() {
    // the C4 mirror on K4 board is no strategy at all
    let k4 = fam(FamilySpec::Complete(4));
    let s = automorphism_strategy(
        &fam(FamilySpec::Cycle(4)),
        find_fixed_edge_free_involution(&fam(FamilySpec::Cycle(4))).unwrap(),
    )
    .unwrap();
    let report = verify_strategy(
        &k4,
        None,
        &s,
        Player::B,
        Adversary::Random { count: 50, seed: 1 },
        Property::SymmetricAfterBMoves,
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(!report.passed());
    for v in &report.violations {
        v.transcript.replay().unwrap();
    }
    let err = verify_strategy(
        &k4,
        None,
        &s,
        Player::A,
        Adversary::Random { count: 1, seed: 1 },
        Property::NeverLoses,
        &VerifyOptions::default(),
    );
    assert!(matches!(err, Err(VerifyError::SideMismatch { .. })));
}

#[test]
fn orbit_pruning_agrees_with_full_search() {
    let options = VerifyOptions::default();
    for g in enumerate_graphs(5, None, false)
        .into_iter()
        .filter(|g| (2..=8).contains(&g.size()))
    {
        let r = decide_symm(&g).unwrap();
        let (side, property) = match r.outcome {
            SymmOutcome::Member => (Player::B, Property::SymmetricAfterBMoves),
            SymmOutcome::NonMember => (Player::A, Property::SymmetryBrokenBy(g.size() / 2)),
        };
        let run = |prune| {
            verify_strategy(
                &g,
                None,
                r.strategy(),
                side,
                Adversary::Exhaustive { prune },
                property,
                &options,
            )
            .unwrap()
        };
        let (full, pruned) = (run(false), run(true));
        assert_eq!(full.passed(), pruned.passed());
        assert!(pruned.games <= full.games);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn symm_is_invariant_under_relabelling(edges in prop::collection::btree_set((0usize..6, 0usize..6), 1..8), seed in any::<u64>()) {
        let edges: std::collections::BTreeSet<(usize, usize)> =
            edges.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
        let g = Graph::new(6, edges).unwrap();
        let mut image: Vec<usize> = (0..6).collect();
        use rand::{seq::SliceRandom, SeedableRng};
        image.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&image);
        prop_assert_eq!(decide_symm(&g).unwrap().outcome, decide_symm(&h).unwrap().outcome);
    }

    #[test]
    fn avoidance_is_invariant_under_relabelling(edges in prop::collection::btree_set((0usize..5, 0usize..5), 1..8), seed in any::<u64>()) {
        let edges: std::collections::BTreeSet<(usize, usize)> =
            edges.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
        prop_assume!(!edges.is_empty());
        let g = Graph::new(5, edges).unwrap();
        let mut image: Vec<usize> = (0..5).collect();
        use rand::{seq::SliceRandom, SeedableRng};
        image.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let f = fam(FamilySpec::Path(2));
        prop_assert_eq!(solve_avoidance(&g, &f).unwrap().outcome, solve_avoidance(&g.relabel(&image), &f).unwrap().outcome);
    }
}

#[test]
fn optimal_moves_from_midgame_positions() {
    use avoid_core::Edge;
    let k4 = fam(FamilySpec::Complete(4));
    let p2 = fam(FamilySpec::Path(2));
    let start = new_game(k4.clone(), Some(p2.clone())).unwrap();
    assert_eq!(
        optimal_move(&start, &AvoidOptions::default())
            .unwrap()
            .outcome,
        AvoidOutcome::ALoses
    );
    // after a{0,1} b{2,3} every A move makes a red P2
    let s = start
        .apply_move(Edge::new(0, 1))
        .unwrap()
        .apply_move(Edge::new(2, 3))
        .unwrap();
    assert_eq!(
        optimal_move(&s, &AvoidOptions::default()).unwrap().outcome,
        AvoidOutcome::ALoses
    );
    let b = optimal_strategy(Player::B, AvoidOptions::default());
    let report = verify_strategy(
        &fam(FamilySpec::Complete(5)),
        Some(&p2),
        &b,
        Player::B,
        Adversary::Exhaustive { prune: false },
        Property::NeverLoses,
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(report.passed());
}

/// Frozen census rows against the definitions: SYMM by plain search,
/// AUTO by trying every vertex permutation.
#[test]
fn golden_census_matches_definitions() {
    fn next_perm(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }
    fn brute_auto(g: &Graph) -> bool {
        let n = g.order();
        let edges: HashSet<(usize, usize)> = g.edges().iter().map(|e| (e.lo(), e.hi())).collect();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            let involution = (0..n).all(|v| p[p[v]] == v);
            let image = |&(u, v): &(usize, usize)| (p[u].min(p[v]), p[u].max(p[v]));
            if involution
                && edges.iter().all(|e| edges.contains(&image(e)))
                && edges.iter().all(|e| image(e) != *e)
            {
                return true;
            }
            if !next_perm(&mut p) {
                return false;
            }
        }
    }
    let rows = include_str!("golden/census_size6_connected.jsonl");
    let mut count = 0;
    for line in rows.lines() {
        let row: serde_json::Value = serde_json::from_str(line).unwrap();
        let g = Graph::from_graph6(row["graph6"].as_str().unwrap()).unwrap();
        let state = new_game(g.clone(), None).unwrap();
        assert_eq!(
            row["in_symm"].as_bool(),
            Some(oracle_symm(&state, 3)),
            "{line}"
        );
        assert_eq!(row["in_auto"].as_bool(), Some(brute_auto(&g)), "{line}");
        count += 1;
    }
    assert_eq!(count, 30);
}
