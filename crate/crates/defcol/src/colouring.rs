//! Colourings, list assignments and the audited certificate every engine is checked against.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("uncoloured vertices {0:?}")]
    Uncoloured(Vec<usize>),
    #[error("colouring has {got} entries for a graph on {n} vertices")]
    Length { got: usize, n: usize },
    #[error("colour class {class} has {got} vertices but its inner colouring has {want}")]
    ClassSize {
        class: usize,
        got: usize,
        want: usize,
    },
    #[error("outer colouring has {classes} classes but {inner} inner colourings were given")]
    ClassCount { classes: usize, inner: usize },
    #[error("vertex {0} has an empty list")]
    EmptyList(usize),
}

/// A total colouring; `colour(v)` is a small integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring(pub Vec<usize>);

impl Colouring {
    pub fn uniform(n: usize, colour: usize) -> Self {
        Colouring(vec![colour; n])
    }

    pub fn colour(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colours_used(&self) -> BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    /// Relabels colours densely `0..k` in order of first appearance.
    pub fn normalised(&self) -> Colouring {
        let mut ids = BTreeMap::new();
        Colouring(
            self.0
                .iter()
                .map(|&c| {
                    let next = ids.len();
                    *ids.entry(c).or_insert(next)
                })
                .collect(),
        )
    }

    /// Vertices of each colour, keyed by colour.
    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.0.iter().enumerate() {
            out.entry(c).or_default().push(v);
        }
        out
    }
}

/// A colouring under construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColouring(pub Vec<Option<usize>>);

impl PartialColouring {
    pub fn new(n: usize) -> Self {
        PartialColouring(vec![None; n])
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, c: usize) {
        self.0[v] = Some(c);
    }

    pub fn complete(self) -> Result<Colouring, ColouringError> {
        let missing: Vec<usize> = (0..self.0.len()).filter(|&v| self.0[v].is_none()).collect();
        if !missing.is_empty() {
            return Err(ColouringError::Uncoloured(missing));
        }
        Ok(Colouring(self.0.into_iter().flatten().collect()))
    }
}

/// A list of allowed colours per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment(pub Vec<BTreeSet<usize>>);

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<usize>>) -> Result<Self, ColouringError> {
        if let Some(v) = lists.iter().position(BTreeSet::is_empty) {
            return Err(ColouringError::EmptyList(v));
        }
        Ok(ListAssignment(lists))
    }

    /// Every vertex gets `{0, .., k-1}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment(vec![(0..k).collect(); n])
    }

    pub fn list(&self, v: usize) -> &BTreeSet<usize> {
        &self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest list size; a `k`-list assignment has this at least `k`.
    pub fn min_size(&self) -> usize {
        self.0.iter().map(BTreeSet::len).min().unwrap_or(0)
    }
}

/// Exact defect and clustering data of a colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Number of distinct colours used.
    pub k: usize,
    /// Maximum number of same-coloured neighbours of a vertex.
    pub defect: usize,
    /// Maximum order of a monochromatic component.
    pub clustering: usize,
    /// Monochromatic components, each sorted, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    /// Whether every monochromatic component induces a path.
    pub all_paths: bool,
    /// Size of each colour class, keyed by colour.
    pub class_sizes: BTreeMap<usize, usize>,
}

pub fn audit(g: &Graph, colouring: &Colouring) -> Result<Certificate, ColouringError> {
    if colouring.len() != g.n() {
        return Err(ColouringError::Length {
            got: colouring.len(),
            n: g.n(),
        });
    }
    let col = &colouring.0;
    let defect = g
        .vertices()
        .map(|v| g.neighbours(v).filter(|&u| col[u] == col[v]).count())
        .max()
        .unwrap_or(0);
    let components = monochromatic_components(g, colouring);
    let all_paths = components.iter().all(|comp| {
        let edges: usize = comp
            .iter()
            .map(|&v| g.neighbours(v).filter(|&u| col[u] == col[v]).count())
            .sum();
        let max_deg = comp
            .iter()
            .map(|&v| g.neighbours(v).filter(|&u| col[u] == col[v]).count())
            .max();
        edges / 2 + 1 == comp.len() && max_deg.unwrap_or(0) <= 2
    });
    let mut class_sizes = BTreeMap::new();
    for &c in col {
        *class_sizes.entry(c).or_insert(0) += 1;
    }
    Ok(Certificate {
        k: class_sizes.len(),
        defect,
        clustering: components.iter().map(Vec::len).max().unwrap_or(0),
        components,
        all_paths,
        class_sizes,
    })
}

/// Audits a colouring that may still have uncoloured vertices; those are reported as an error.
pub fn audit_partial(
    g: &Graph,
    colouring: &PartialColouring,
) -> Result<Certificate, ColouringError> {
    audit(g, &colouring.clone().complete()?)
}

pub fn monochromatic_components(g: &Graph, colouring: &Colouring) -> Vec<Vec<usize>> {
    let col = &colouring.0;
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for u in g.neighbours(v) {
                if !seen[u] && col[u] == col[s] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn respects_lists(colouring: &Colouring, lists: &ListAssignment) -> bool {
    first_list_violation(colouring, lists).is_none()
}

/// The first vertex whose colour is outside its list.
pub fn first_list_violation(colouring: &Colouring, lists: &ListAssignment) -> Option<usize> {
    if colouring.len() != lists.len() {
        return Some(colouring.len().min(lists.len()));
    }
    (0..colouring.len()).find(|&v| !lists.list(v).contains(&colouring.colour(v)))
}

/// Combines an outer colouring with one inner colouring per outer class.
///
/// `inner` is indexed by the outer classes in increasing colour order, and each inner
/// colouring lists the class's vertices in increasing vertex order. Pairs of colours
/// get dense ids in order of first appearance.
pub fn product_colouring(
    outer: &Colouring,
    inner: &[Colouring],
) -> Result<Colouring, ColouringError> {
    let classes = outer.classes();
    if classes.len() != inner.len() {
        return Err(ColouringError::ClassCount {
            classes: classes.len(),
            inner: inner.len(),
        });
    }
    let mut pair = vec![(0, 0); outer.len()];
    for ((&c1, members), (class, chi)) in classes.iter().zip(inner.iter().enumerate()) {
        if chi.len() != members.len() {
            return Err(ColouringError::ClassSize {
                class,
                got: members.len(),
                want: chi.len(),
            });
        }
        for (i, &v) in members.iter().enumerate() {
            pair[v] = (c1, chi.colour(i));
        }
    }
    let mut ids = BTreeMap::new();
    Ok(Colouring(
        pair.into_iter()
            .map(|p| {
                let next = ids.len();
                *ids.entry(p).or_insert(next)
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_cycle() {
        let c = audit(&Graph::cycle(4), &Colouring(vec![0, 1, 0, 1])).unwrap();
        assert_eq!((c.k, c.defect, c.clustering, c.all_paths), (2, 0, 1, true));
    }

    #[test]
    fn monochromatic_path() {
        let c = audit(&Graph::path(5), &Colouring::uniform(5, 0)).unwrap();
        assert_eq!((c.defect, c.clustering, c.all_paths), (2, 5, true));
        let t = audit(&Graph::cycle(3), &Colouring::uniform(3, 7)).unwrap();
        assert!(!t.all_paths);
        let star = audit(&Graph::complete_bipartite(1, 3), &Colouring::uniform(4, 0)).unwrap();
        assert!(!star.all_paths);
    }

    #[test]
    fn partial_lists_uncoloured() {
        let mut p = PartialColouring::new(4);
        p.set(1, 0);
        p.set(2, 0);
        assert_eq!(
            audit_partial(&Graph::path(4), &p),
            Err(ColouringError::Uncoloured(vec![0, 3]))
        );
    }

    #[test]
    fn list_violation_witness() {
        let lists = ListAssignment::new(vec![[0].into(), [1].into(), [2].into()]).unwrap();
        assert!(respects_lists(&Colouring(vec![0, 1, 2]), &lists));
        assert_eq!(
            first_list_violation(&Colouring(vec![0, 2, 2]), &lists),
            Some(1)
        );
    }

    #[test]
    fn product_with_single_class_is_relabelling() {
        let inner = Colouring(vec![3, 1, 3, 1]);
        let p = product_colouring(&Colouring::uniform(4, 0), std::slice::from_ref(&inner)).unwrap();
        assert_eq!(p, inner.normalised());
        let err = product_colouring(&Colouring(vec![0, 1]), &[Colouring(vec![0])]);
        assert_eq!(
            err,
            Err(ColouringError::ClassCount {
                classes: 2,
                inner: 1
            })
        );
    }
}
