//! Hasse quivers of finite posets of subcategories ordered by inclusion.

use serde_json::json;

use crate::algebra::NakayamaAlgebra;
use crate::error::Result;
use crate::localise;
use crate::subcats::{self, Subcat};
use crate::tautilt;

/// Nodes with labels; an edge `(i, j)` means node `j` is covered by node `i`
/// (the arrow points from the larger subcategory to the smaller).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseQuiver {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseQuiver {
    /// Cover relations of `sets` under inclusion.
    pub fn from_sets(sets: &[Subcat], labels: Vec<String>) -> Self {
        let lt = |i: usize, j: usize| sets[i].len() < sets[j].len() && sets[i].is_subset(&sets[j]);
        let mut edges = Vec::new();
        for big in 0..sets.len() {
            for small in 0..sets.len() {
                if lt(small, big) && !(0..sets.len()).any(|m| lt(small, m) && lt(m, big)) {
                    edges.push((big, small));
                }
            }
        }
        Self { labels, edges }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "\\\"")));
        }
        for (i, j) in &self.edges {
            s.push_str(&format!("  n{i} -> n{j};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "nodes": self.labels, "edges": self.edges })
    }

    pub fn has_edge(&self, from: &str, to: &str) -> bool {
        self.edges
            .iter()
            .any(|&(i, j)| self.labels[i] == from && self.labels[j] == to)
    }

    /// Reachability in the quiver, i.e. the underlying order.
    pub fn above(&self, from: &str, to: &str) -> bool {
        let Some(start) = self.labels.iter().position(|l| l == from) else {
            return false;
        };
        let mut stack = vec![start];
        let mut seen = vec![false; self.labels.len()];
        while let Some(v) = stack.pop() {
            if self.labels[v] == to {
                return true;
            }
            for &(i, j) in &self.edges {
                if i == v && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        false
    }
}

/// Support τ-tilting modules ordered by `Gen T` inclusion, labelled by their
/// summands joined with `+` (`0` for the zero module).
pub fn hasse_stt(a: &NakayamaAlgebra) -> HasseQuiver {
    let classes = subcats::enumerate_torsion_classes(a);
    let labels = classes
        .iter()
        .map(|t| {
            let s = tautilt::stt_from_torsion(a, t).expect("torsion class");
            let names: Vec<String> = s.modules.iter().map(|&x| a.name(x)).collect();
            if names.is_empty() { "0".into() } else { names.join("+") }
        })
        .collect();
    HasseQuiver::from_sets(&classes, labels)
}

/// Universal localisations ordered by inclusion of their module categories,
/// labelled by their trivial sets (`{0}` for the identity).
pub fn hasse_uniloc(a: &NakayamaAlgebra) -> Result<HasseQuiver> {
    let locs = localise::enumerate_uniloc(a)?;
    let sets: Vec<Subcat> = locs.iter().map(|l| l.xcat.clone()).collect();
    let labels = locs
        .iter()
        .map(|l| {
            if l.trivial.is_empty() {
                "{0}".to_string()
            } else {
                let names: Vec<String> = l.trivial.iter().map(|&x| a.name(x)).collect();
                format!("{{{}}}", names.join(","))
            }
        })
        .collect();
    Ok(HasseQuiver::from_sets(&sets, labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_quivers() {
        let a2 = NakayamaAlgebra::build_line(2, 2).unwrap();
        let stt = hasse_stt(&a2);
        assert_eq!((stt.labels.len(), stt.edges.len()), (5, 5));
        assert!(stt.has_edge("P1+P2", "S1+P1"));
        assert!(stt.has_edge("P1+P2", "P2"));
        assert!(stt.has_edge("S1+P1", "S1"));
        assert!(stt.has_edge("S1", "0"));
        assert!(stt.has_edge("P2", "0"));
        let uni = hasse_uniloc(&a2).unwrap();
        assert_eq!((uni.labels.len(), uni.edges.len()), (5, 6));
        for mid in ["{S1}", "{P1}", "{P2}"] {
            assert!(uni.has_edge("{0}", mid));
            assert!(uni.has_edge(mid, "{S1,P1,P2}"), "{uni:?}");
        }
        let k = NakayamaAlgebra::build_line(1, 2).unwrap();
        assert_eq!(hasse_stt(&k).edges, vec![(1, 0)]);
        assert_eq!(hasse_uniloc(&k).unwrap().edges.len(), 1);
    }
}
