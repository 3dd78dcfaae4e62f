pub mod budget;
pub mod game;
pub mod graph;
pub mod morphisms;
pub mod reductions;
pub mod solver;

pub use budget::{Budget, Exhausted};
pub use game::{new_game, GameState, Player, Status, Strategy, Transcript};
pub use graph::{Edge, FamilySpec, Graph, GraphError};
pub use morphisms::{CanonicalForm, VertexPermutation};
