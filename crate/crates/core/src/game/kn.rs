//! Scripted strategies on complete graphs.

use super::strategy::{Strategy, StrategyFault};
use super::{GameState, Player};
use crate::graph::Edge;

fn check_board(name: &str, state: &GameState, n: usize) -> Result<(), StrategyFault> {
    let g = state.board();
    if g.order() != n || g.size() != n * (n - 1) / 2 {
        return Err(StrategyFault::new(name, format!("board is not K{n}")));
    }
    Ok(())
}

/// An edge set forms a single path (possibly empty).
fn is_path(edges: &[Edge], n: usize) -> bool {
    let mut degree = vec![0usize; n];
    for e in edges {
        degree[e.lo()] += 1;
        degree[e.hi()] += 1;
    }
    let vertices = degree.iter().filter(|&&d| d > 0).count();
    if edges.is_empty() {
        return true;
    }
    degree.iter().all(|&d| d <= 2) && vertices == edges.len() + 1 && connected(edges, n)
}

fn is_cycle(edges: &[Edge], n: usize) -> bool {
    let mut degree = vec![0usize; n];
    for e in edges {
        degree[e.lo()] += 1;
        degree[e.hi()] += 1;
    }
    !edges.is_empty() && degree.iter().all(|&d| d == 0 || d == 2) && connected(edges, n)
}

fn connected(edges: &[Edge], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in edges {
        let (a, b) = (find(&mut parent, e.lo()), find(&mut parent, e.hi()));
        parent[a] = b;
    }
    let mut roots = edges.iter().map(|e| find(&mut parent, e.lo()));
    let first = roots.next();
    roots.all(|r| Some(r) == first)
}

/// B's strategy in `(K_n, P_2)`: keep `A_i ∪ B_i` a path; when `n` is even
/// and the path has swallowed every vertex, close the Hamiltonian cycle.
#[derive(Clone, Debug)]
pub struct KnP2Defender {
    n: usize,
}

pub fn kn_p2_defender(n: usize) -> KnP2Defender {
    assert!(n >= 3, "the defender is defined for n >= 3");
    KnP2Defender { n }
}

impl Strategy for KnP2Defender {
    fn name(&self) -> String {
        format!("kn-p2({})", self.n)
    }

    fn side(&self) -> Player {
        Player::B
    }

    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        let n = self.n;
        check_board(&self.name(), state, n)?;
        let fault = |reason: String| StrategyFault::new(self.name(), reason);
        let red = state.red_edges();
        if red
            .iter()
            .enumerate()
            .any(|(i, e)| red[..i].iter().any(|f| e.is_adjacent(*f)))
        {
            return Err(fault("red is no longer a matching".into()));
        }
        let mut colored: Vec<Edge> = state.history().to_vec();
        let blue = state.blue_edges();
        let free: Vec<Edge> = state
            .uncolored_edges()
            .into_iter()
            .filter(|e| !blue.iter().any(|b| b.is_adjacent(*e)))
            .collect();
        for &e in &free {
            colored.push(e);
            let ok = is_path(&colored, n);
            colored.pop();
            if ok {
                return Ok(e);
            }
        }
        let round = state.rounds() + 1;
        if n.is_multiple_of(2) && round == n / 2 {
            for &e in &free {
                colored.push(e);
                let ok = is_cycle(&colored, n) && colored.len() == n;
                colored.pop();
                if ok {
                    return Ok(e);
                }
            }
        }
        Err(fault(format!("no edge keeps A∪B a path in {state:?}")))
    }
}

/// A's strategy on `K_n` breaking every symmetric reply by round `n - 1`.
///
/// Rounds 1-2 build a red `P_2` centred at `c ∉ b_1` with an edge touching
/// `b_1`; `B` must answer with a blue `P_2`, centred at some `d ≠ c`. If the
/// red closing edge is free and `B` cannot close its own triangle, A closes
/// the red triangle. Otherwise A grows a star at `c`, taking `c-d` first.
#[derive(Clone, Debug)]
pub struct KnSymmetryBreaker {
    n: usize,
}

pub fn kn_symmetry_breaker(n: usize) -> KnSymmetryBreaker {
    assert!(n >= 4, "the breaker is defined for n >= 4");
    KnSymmetryBreaker { n }
}

fn shared(a: Edge, b: Edge) -> Option<usize> {
    a.endpoints()
        .into_iter()
        .find(|&v| b.contains(v))
        .filter(|_| a != b)
}

impl Strategy for KnSymmetryBreaker {
    fn name(&self) -> String {
        format!("kn-breaker({})", self.n)
    }

    fn side(&self) -> Player {
        Player::A
    }

    fn choose(&self, state: &GameState) -> Result<Edge, StrategyFault> {
        check_board(&self.name(), state, self.n)?;
        let fault =
            |reason: &str| StrategyFault::new(self.name(), format!("{reason} in {state:?}"));
        let h = state.history();
        let first_free = || {
            state
                .uncolored_edges()
                .first()
                .copied()
                .ok_or_else(|| fault("no free edge"))
        };
        if h.is_empty() {
            return Ok(Edge::new(0, 1));
        }
        if !state.red_blue_isomorphic() {
            return first_free();
        }
        let (a1, b1) = (h[0], h[1]);
        if h.len() == 2 {
            return state
                .uncolored_edges()
                .into_iter()
                .find(|&e| {
                    shared(a1, e).is_some_and(|c| !b1.contains(c))
                        && (a1.is_adjacent(b1) || e.is_adjacent(b1))
                })
                .ok_or_else(|| fault("no second edge"));
        }
        let (a2, b2) = (h[2], h[3]);
        let c = shared(a1, a2).ok_or_else(|| fault("red edges of rounds 1-2 are not adjacent"))?;
        let d = shared(b1, b2).ok_or_else(|| fault("blue edges of rounds 1-2 are not adjacent"))?;
        let red_close = Edge::new(a1.other(c).unwrap(), a2.other(c).unwrap());
        let blue_close = Edge::new(b1.other(d).unwrap(), b2.other(d).unwrap());
        let early = &h[..4];
        let triangle =
            !early.contains(&red_close) && (early.contains(&blue_close) || blue_close == red_close);
        if triangle {
            if h.len() == 4 {
                return Ok(red_close);
            }
            return Err(fault("symmetry survived a red triangle"));
        }
        if state.red_edges().iter().any(|e| !e.contains(c)) {
            return Err(fault("red is not a star"));
        }
        let spoke = Edge::new(c, d);
        if state.is_uncolored(spoke) {
            return Ok(spoke);
        }
        (0..self.n)
            .filter(|&v| v != c)
            .map(|v| Edge::new(c, v))
            .find(|&e| state.is_uncolored(e))
            .ok_or_else(|| fault("red star is complete but symmetry holds"))
    }
}
