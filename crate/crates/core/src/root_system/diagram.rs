use alloc::vec::Vec;

use super::types::{identify_components, Component, TypeDecomposition};
use super::RootSystem;
use crate::error::Result;

/// A bond between two diagram positions. `arrow_to` is the position of the
/// shorter root when the lengths differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    pub arrow_to: Option<usize>,
}

/// A (possibly extended) Dynkin diagram whose nodes are roots of an ambient
/// system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub nodes: Vec<usize>,
    pub bonds: Vec<Bond>,
    pub extended: bool,
    pub affine_node: Option<usize>,
}

impl Diagram {
    pub fn from_roots(rs: &RootSystem, nodes: Vec<usize>, affine_node: Option<usize>) -> Self {
        let mut bonds = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let (x, y) = (nodes[i], nodes[j]);
                let m = rs.pairing(x, y) * rs.pairing(y, x);
                if m == 0 {
                    continue;
                }
                let arrow_to = match rs.norm2(x).cmp(&rs.norm2(y)) {
                    core::cmp::Ordering::Less => Some(i),
                    core::cmp::Ordering::Greater => Some(j),
                    core::cmp::Ordering::Equal => None,
                };
                bonds.push(Bond {
                    a: i,
                    b: j,
                    multiplicity: m as u8,
                    arrow_to,
                });
            }
        }
        Diagram {
            nodes,
            bonds,
            extended: affine_node.is_some(),
            affine_node,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Root indices of a set of positions.
    pub fn roots_of(&self, subset: &[usize]) -> Vec<usize> {
        subset.iter().map(|&i| self.nodes[i]).collect()
    }

    /// Components of the sub-diagram on the given positions.
    pub fn components(&self, rs: &RootSystem, subset: &[usize]) -> Result<Vec<Component>> {
        identify_components(rs, &self.roots_of(subset))
    }

    pub fn type_of(&self, rs: &RootSystem, subset: &[usize]) -> Result<TypeDecomposition> {
        let comps = self.components(rs, subset)?;
        Ok(TypeDecomposition::new(
            comps.iter().map(Component::key).collect(),
        ))
    }

    /// The diagram with the affine node dropped.
    pub fn restrict_plain(&self, rs: &RootSystem) -> Diagram {
        let nodes: Vec<usize> = match self.affine_node {
            Some(a) => self
                .nodes
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != a)
                .map(|(_, &r)| r)
                .collect(),
            None => self.nodes.clone(),
        };
        Diagram::from_roots(rs, nodes, None)
    }
}

pub fn plain_diagram(rs: &RootSystem) -> Diagram {
    Diagram::from_roots(rs, rs.simple_roots(), None)
}

/// The simple roots followed by the negated highest root as the affine node.
pub fn extended_diagram(rs: &RootSystem) -> Diagram {
    let mut nodes = rs.simple_roots();
    let aff = nodes.len();
    nodes.push(rs.negate(rs.highest_root()));
    Diagram::from_roots(rs, nodes, Some(aff))
}
