//! Red/blue edge colorings of complete graphs.

use crate::graph::Graph;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A 2-coloring of `K_n`. Red is stored; blue is its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    red: Graph,
}

impl TwoColoring {
    pub fn from_red(red: Graph) -> Self {
        Self { red }
    }

    pub fn from_blue(blue: &Graph) -> Self {
        Self { red: blue.complement() }
    }

    pub fn order(&self) -> usize {
        self.red.order()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> Graph {
        self.red.complement()
    }

    pub fn color_class(&self, color: Color) -> Graph {
        match color {
            Color::Red => self.red.clone(),
            Color::Blue => self.blue(),
        }
    }

    pub fn color_of(&self, u: usize, v: usize) -> Color {
        assert_ne!(u, v);
        if self.red.has_edge(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn degree(&self, v: usize, color: Color) -> usize {
        let red = self.red.degree(v);
        match color {
            Color::Red => red,
            Color::Blue => self.order() - 1 - red,
        }
    }

    /// Restriction to the first `k` vertices.
    pub fn restrict(&self, k: usize) -> TwoColoring {
        let keep: Vec<usize> = (0..k.min(self.order())).collect();
        Self::from_red(self.red.induced(&keep).graph)
    }

    /// Same coloring with red and blue exchanged.
    pub fn swapped(&self) -> TwoColoring {
        Self::from_red(self.blue())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::complete;

    #[test]
    fn blue_is_complement_on_k3() {
        let c = TwoColoring::from_red(Graph::from_edges(3, [(0, 1)]));
        let blue = c.color_class(Color::Blue);
        assert_eq!(blue.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn empty_red_class() {
        let c = TwoColoring::from_red(Graph::new(2));
        assert_eq!(c.color_class(Color::Red).edge_count(), 0);
        assert_eq!(c.color_class(Color::Red).order(), 2);
    }

    #[test]
    fn all_red_has_empty_blue() {
        let c = TwoColoring::from_red(complete(5));
        let blue = c.color_class(Color::Blue);
        assert_eq!(blue.order(), 5);
        assert_eq!(blue.edge_count(), 0);
    }
}
