use std::fmt;
use std::str::FromStr;

use self::Platonic as Solid;
use super::{cartesian, Edge, Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Platonic {
    pub const ALL: [Platonic; 5] = [
        Platonic::Tetrahedron,
        Platonic::Cube,
        Platonic::Octahedron,
        Platonic::Dodecahedron,
        Platonic::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Platonic::Tetrahedron => "tetrahedron",
            Platonic::Cube => "cube",
            Platonic::Octahedron => "octahedron",
            Platonic::Dodecahedron => "dodecahedron",
            Platonic::Icosahedron => "icosahedron",
        }
    }
}

/// Named graph families.
///
/// `Path(n)` and `Cycle(n)` are parameterized by *length* (edge count), so
/// `Path(2)` has three vertices. `Grid` takes the number of vertices along
/// each axis. The Fig1 catalog holds the small separating examples: the
/// triangle with a pendant edge followed by the size-5 graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Cube(usize),
    Grid(Vec<usize>),
    Platonic(Platonic),
    CompleteBipartiteMinusEdge(usize, usize),
    CompleteMinusMatching(usize),
    TrianglePlusEdge,
    Fig1Catalog(usize),
}

/// Number of entries in the Fig1 catalog.
pub const FIG1_CATALOG_LEN: usize = 9;

impl FamilySpec {
    /// Every catalog entry, in index order.
    pub fn fig1_catalog() -> impl Iterator<Item = FamilySpec> {
        (0..FIG1_CATALOG_LEN).map(FamilySpec::Fig1Catalog)
    }
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidFamily(msg.into())
}

fn graph(order: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(order, edges.iter().copied()).expect("family edge lists are valid")
}

fn path_graph(len: usize) -> Graph {
    Graph::from_edge_set(len + 1, (0..len).map(|i| Edge::new(i, i + 1)).collect())
}

fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push(Edge::new(u, v));
        }
    }
    Graph::from_edge_set(n, edges)
}

fn complete_bipartite(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..s {
        for v in s..s + t {
            edges.push(Edge::new(u, v));
        }
    }
    Graph::from_edge_set(s + t, edges)
}

fn without_edges(g: &Graph, removed: &[Edge]) -> Graph {
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !removed.contains(e))
        .collect();
    Graph::from_edge_set(g.order(), edges)
}

fn platonic(p: Platonic) -> Graph {
    match p {
        Platonic::Tetrahedron => complete_graph(4),
        Platonic::Cube => make_family(&FamilySpec::Cube(3)).expect("cube"),
        // K_{2,2,2}: antipodal pairs {0,1}, {2,3}, {4,5}.
        Platonic::Octahedron => {
            make_family(&FamilySpec::CompleteMinusMatching(6)).expect("octahedron")
        }
        // Generalized Petersen graph GP(10, 2): outer 10-cycle, spokes, inner star polygon.
        Platonic::Dodecahedron => {
            let mut edges = Vec::new();
            for i in 0..10 {
                edges.push(Edge::new(i, (i + 1) % 10));
                edges.push(Edge::new(i, 10 + i));
                edges.push(Edge::new(10 + i, 10 + (i + 2) % 10));
            }
            Graph::from_edge_set(20, edges)
        }
        // Apex 0, upper ring 1..=5, lower ring 6..=10, bottom 11.
        Platonic::Icosahedron => {
            let mut edges = Vec::new();
            for k in 0..5 {
                let up = 1 + k;
                let up_next = 1 + (k + 1) % 5;
                let low = 6 + k;
                let low_next = 6 + (k + 1) % 5;
                edges.push(Edge::new(0, up));
                edges.push(Edge::new(up, up_next));
                edges.push(Edge::new(low, low_next));
                edges.push(Edge::new(up, low));
                edges.push(Edge::new(up, low_next));
                edges.push(Edge::new(11, low));
            }
            Graph::from_edge_set(12, edges)
        }
    }
}

fn fig1(index: usize) -> Result<Graph, GraphError> {
    Ok(match index {
        0 => make_family(&FamilySpec::TrianglePlusEdge)?,
        1 => path_graph(5),
        // spider with legs of lengths 1, 1 and 3 around centre 0
        2 => graph(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]),
        3 => make_family(&FamilySpec::Star(5))?,
        // triangle 0-1-2 with the tail 2-3-4
        4 => graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
        // bull: triangle 0-1-2 with pendants at 1 and 2
        5 => graph(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
        6 => without_edges(&complete_graph(4), &[Edge::new(0, 1)]),
        7 => make_family(&FamilySpec::Cycle(5))?,
        // 4-cycle 0-1-2-3 with the pendant edge {0,4}
        8 => graph(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]),
        _ => {
            return Err(invalid(format!(
                "Fig1 catalog index {index} out of range 0..{FIG1_CATALOG_LEN}"
            )))
        }
    })
}

/// Builds the canonical labeled member of a family.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    use FamilySpec::*;
    let positive = |name: &str, v: usize| {
        if v == 0 {
            Err(invalid(format!("{name} needs a positive parameter")))
        } else {
            Ok(())
        }
    };
    Ok(match spec {
        Path(n) => {
            positive("path", *n)?;
            path_graph(*n)
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(invalid(format!("cycle length {n} < 3")));
            }
            Graph::from_edge_set(*n, (0..*n).map(|i| Edge::new(i, (i + 1) % n)).collect())
        }
        Complete(n) => {
            positive("complete graph", *n)?;
            complete_graph(*n)
        }
        CompleteBipartite(s, t) => {
            positive("bipartite class", *s)?;
            positive("bipartite class", *t)?;
            complete_bipartite(*s, *t)
        }
        Star(n) => {
            positive("star", *n)?;
            complete_bipartite(1, *n)
        }
        Cube(d) => {
            positive("cube", *d)?;
            make_family(&Grid(vec![2; *d]))?
        }
        Grid(dims) => {
            if dims.is_empty() || dims.contains(&0) {
                return Err(invalid("grid dimensions must be non-empty and positive"));
            }
            let mut g = Graph::empty(1);
            for &d in dims {
                g = cartesian(&g, &path_graph(d - 1));
            }
            g
        }
        Platonic(p) => platonic(*p),
        CompleteBipartiteMinusEdge(s, t) => {
            positive("bipartite class", *s)?;
            positive("bipartite class", *t)?;
            without_edges(&complete_bipartite(*s, *t), &[Edge::new(0, *s)])
        }
        CompleteMinusMatching(n) => {
            positive("complete graph", *n)?;
            let matching: Vec<Edge> = (0..n / 2).map(|i| Edge::new(2 * i, 2 * i + 1)).collect();
            without_edges(&complete_graph(*n), &matching)
        }
        // vertex 0 carries the pendant edge {0,3}
        TrianglePlusEdge => graph(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
        Fig1Catalog(i) => fig1(*i)?,
    })
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Complete(n) => write!(f, "K{n}"),
            CompleteBipartite(s, t) => write!(f, "K{s},{t}"),
            Star(n) => write!(f, "star{n}"),
            Cube(d) => write!(f, "Q{d}"),
            Grid(dims) => {
                f.write_str("grid")?;
                for (i, d) in dims.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{d}")?;
                }
                Ok(())
            }
            Platonic(p) => f.write_str(p.name()),
            CompleteBipartiteMinusEdge(s, t) => write!(f, "K{s},{t}-e"),
            CompleteMinusMatching(n) => write!(f, "K{n}-M"),
            TrianglePlusEdge => f.write_str("K3+e"),
            Fig1Catalog(i) => write!(f, "fig1:{i}"),
        }
    }
}

fn number(s: &str, whole: &str) -> Result<usize, GraphError> {
    s.parse()
        .map_err(|_| invalid(format!("cannot parse family `{whole}`")))
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Accepts the [`Display`](fmt::Display) syntax: `P4`, `C6`, `K5`,
    /// `K3,3`, `K3,3-e`, `K6-M`, `K3+e`, `star5`, `Q3`, `grid3x4`,
    /// platonic names and `fig1:<i>`.
    fn from_str(text: &str) -> Result<Self, GraphError> {
        use FamilySpec::*;
        let s = text.trim();
        let lower = s.to_ascii_lowercase();
        for p in Solid::ALL {
            if lower == p.name() {
                return Ok(Platonic(p));
            }
        }
        if lower == "k3+e" {
            return Ok(TrianglePlusEdge);
        }
        if let Some(rest) = lower.strip_prefix("fig1:") {
            return Ok(Fig1Catalog(number(rest, s)?));
        }
        if let Some(rest) = lower.strip_prefix("star") {
            return Ok(Star(number(rest, s)?));
        }
        if let Some(rest) = lower.strip_prefix("grid") {
            let dims = rest
                .split('x')
                .map(|d| number(d, s))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Grid(dims));
        }
        if let Some(rest) = s.strip_prefix('P') {
            return Ok(Path(number(rest, s)?));
        }
        if let Some(rest) = s.strip_prefix('C') {
            return Ok(Cycle(number(rest, s)?));
        }
        if let Some(rest) = s.strip_prefix('Q') {
            return Ok(Cube(number(rest, s)?));
        }
        if let Some(rest) = s.strip_prefix('K') {
            if let Some(n) = rest.strip_suffix("-M") {
                return Ok(CompleteMinusMatching(number(n, s)?));
            }
            let (body, minus_edge) = match rest.strip_suffix("-e") {
                Some(b) => (b, true),
                None => (rest, false),
            };
            if let Some((a, b)) = body.split_once(',') {
                let (a, b) = (number(a, s)?, number(b, s)?);
                return Ok(if minus_edge {
                    CompleteBipartiteMinusEdge(a, b)
                } else {
                    CompleteBipartite(a, b)
                });
            }
            if !minus_edge {
                return Ok(Complete(number(body, s)?));
            }
        }
        Err(invalid(format!("unknown family `{s}`")))
    }
}
