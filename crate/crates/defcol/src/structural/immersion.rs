use std::collections::BTreeSet;

use super::gomory_hu::cut_forest;
use super::StructuralError;
use crate::colouring::{audit, Colouring};
use crate::flow::FlowNetwork;
use crate::graph::{Graph, TPartition};

/// A `K_t` immersion: branch vertices and one path per pair, pairwise edge-disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImmersionCertificate {
    pub branch: Vec<usize>,
    /// `((i, j), path)` joining `branch[i]` to `branch[j]`, for every `i < j`.
    pub paths: Vec<((usize, usize), Vec<usize>)>,
}

impl ImmersionCertificate {
    /// Whether the paths are genuine paths of `g` between the right branch vertices and
    /// no edge is used twice.
    pub fn verify(&self, g: &Graph) -> bool {
        let t = self.branch.len();
        let distinct: BTreeSet<usize> = self.branch.iter().copied().collect();
        if distinct.len() != t || self.paths.len() != t * (t - 1) / 2 {
            return false;
        }
        let mut used = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for ((i, j), path) in &self.paths {
            if i >= j || *j >= t || !pairs.insert((*i, *j)) {
                return false;
            }
            if path.first() != Some(&self.branch[*i]) || path.last() != Some(&self.branch[*j]) {
                return false;
            }
            let unique: BTreeSet<usize> = path.iter().copied().collect();
            if unique.len() != path.len() {
                return false;
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) || !used.insert((w[0].min(w[1]), w[0].max(w[1]))) {
                    return false;
                }
            }
        }
        true
    }
}

/// Drops closed sub-walks so that no vertex repeats; the edges kept are a subset.
fn shortcut(walk: &[usize]) -> Vec<usize> {
    let mut path: Vec<usize> = Vec::new();
    for &v in walk {
        if let Some(pos) = path.iter().position(|&u| u == v) {
            path.truncate(pos + 1);
        } else {
            path.push(v);
        }
    }
    path
}

/// `(t - 1)^2` edge-disjoint paths from `x` to `targets`, `t - 1` ending at each target,
/// combined into a `K_t` immersion on `x` and the targets.
fn pack_immersion(
    g: &Graph,
    x: usize,
    targets: &[usize],
) -> Result<ImmersionCertificate, StructuralError> {
    let t = targets.len() + 1;
    let need = (t - 1) * (t - 1);
    let sink = g.n();
    let mut net = FlowNetwork::new(g.n() + 1);
    let edge_ids: Vec<(usize, usize, usize)> = g
        .edges()
        .map(|(u, v)| (u, v, net.add_edge(u, v, 1)))
        .collect();
    for &v in targets {
        net.add_arc(v, sink, (t - 1) as i64);
    }
    let value = net.max_flow(x, sink) as usize;
    if value < need {
        return Err(StructuralError::Internal(format!(
            "path packing found {value} of {need} paths"
        )));
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (u, v, id) in edge_ids {
        match net.flow_on(id) {
            1 => out[u].push(v),
            -1 => out[v].push(u),
            _ => {}
        }
    }
    let mut to_sink: Vec<usize> = vec![0; g.n()];
    for &v in targets {
        to_sink[v] = t - 1;
    }
    let mut ending: Vec<Vec<Vec<usize>>> = vec![Vec::new(); t - 1];
    for _ in 0..need {
        let mut walk = vec![x];
        let mut cur = x;
        loop {
            if to_sink[cur] > 0 {
                to_sink[cur] -= 1;
                break;
            }
            let next = out[cur]
                .pop()
                .ok_or_else(|| StructuralError::Internal("flow decomposition stalled".into()))?;
            walk.push(next);
            cur = next;
        }
        let i = targets
            .iter()
            .position(|&v| v == cur)
            .expect("sink arcs leave targets only");
        ending[i].push(shortcut(&walk));
    }
    // ending[i][j] plays the path from x to targets[i] reserved for the pair {i, j}.
    let mut branch = vec![x];
    branch.extend_from_slice(targets);
    let mut paths = Vec::new();
    for i in 0..t - 1 {
        paths.push(((0, i + 1), ending[i][i].clone()));
    }
    for i in 0..t - 1 {
        for j in i + 1..t - 1 {
            let mut walk: Vec<usize> = ending[i][j].iter().rev().copied().collect();
            walk.extend(ending[j][i].iter().skip(1));
            paths.push(((i + 1, j + 1), shortcut(&walk)));
        }
    }
    paths.sort();
    let cert = ImmersionCertificate { branch, paths };
    if !cert.verify(g) {
        return Err(StructuralError::Internal(
            "assembled immersion failed verification".into(),
        ));
    }
    Ok(cert)
}

/// A tree partition with bags of at most `t - 1` vertices and adhesion below `(t - 1)^2`,
/// or a `K_t` immersion.
///
/// Cut-tree edges of weight at least `(t - 1)^2` are contracted into bags. A bag of `t` or
/// more vertices yields an immersion on `t` of its vertices by path packing.
pub fn immersion_tpartition(g: &Graph, t: usize) -> Result<TPartition, StructuralError> {
    if t < 2 {
        return Err(StructuralError::Parameter(format!("t = {t}, need t >= 2")));
    }
    let limit = (t - 1) * (t - 1);
    if g.n() == 0 {
        return Ok(TPartition::new(g, Graph::new(1), vec![Vec::new()])?);
    }
    let forest = cut_forest(g);
    let heavy: Vec<(usize, usize)> = forest
        .edges()
        .filter(|&(_, _, w)| w >= limit)
        .map(|(u, v, _)| (u, v))
        .collect();
    let heavy_graph = Graph::from_edges(g.n(), &heavy)?;
    let bags = heavy_graph.components();
    if let Some(bag) = bags.iter().find(|b| b.len() >= t) {
        return Err(StructuralError::Immersion(Box::new(pack_immersion(
            g,
            bag[0],
            &bag[1..t],
        )?)));
    }
    let mut bag_of = vec![0; g.n()];
    for (i, bag) in bags.iter().enumerate() {
        for &v in bag {
            bag_of[v] = i;
        }
    }
    let light: Vec<(usize, usize)> = forest
        .edges()
        .filter(|&(_, _, w)| w < limit)
        .map(|(u, v, _)| (bag_of[u], bag_of[v]))
        .collect();
    let tree = Graph::from_edges(bags.len(), &light)?;
    let partition = TPartition::new(g, tree, bags)?;
    let adhesion = partition.adhesion(g);
    if adhesion >= limit {
        return Err(StructuralError::Internal(format!(
            "adhesion {adhesion} reached {limit}"
        )));
    }
    Ok(partition)
}

/// Two-colouring with defect `k` of a graph whose vertices sit in distinct tree nodes with
/// adhesion at most `k`.
///
/// Vertices of degree at most 1 and edges between two vertices of degree at most `k` are
/// deleted while possible. If high-degree vertices remain, a leaf `u` of the subtree
/// spanning their nodes and its neighbour `v` give a tree edge crossed by more than `k`
/// edges, which is reported. Otherwise everything left takes colour 0 and deleted vertices
/// return in reverse order opposite their single neighbour.
pub fn tpartition_two_colour(
    g: &Graph,
    partition: &TPartition,
    k: usize,
) -> Result<Colouring, StructuralError> {
    if let Some(bag) = partition.bags.iter().find(|b| b.len() > 1) {
        return Err(StructuralError::Parameter(format!(
            "bag {bag:?} holds more than one vertex"
        )));
    }
    let owner = partition.owner(g.n());
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(StructuralError::Parameter(format!(
            "vertex {v} lies in no bag"
        )));
    }
    let mut h = g.clone();
    let mut alive = vec![true; g.n()];
    let mut removed: Vec<(usize, Option<usize>)> = Vec::new();
    loop {
        if let Some(v) = g.vertices().find(|&v| alive[v] && h.degree(v) <= 1) {
            removed.push((v, h.neighbours(v).next()));
            h.isolate(v);
            alive[v] = false;
            continue;
        }
        let small = h
            .edges()
            .find(|&(u, v)| h.degree(u) <= k && h.degree(v) <= k);
        match small {
            Some((u, v)) => {
                h.remove_edge(u, v);
            }
            None => break,
        }
    }
    let large: Vec<usize> = g
        .vertices()
        .filter(|&v| alive[v] && h.degree(v) > k)
        .collect();
    if !large.is_empty() {
        return Err(heavy_tree_edge(&h, partition, &owner, &large, k));
    }
    let mut colour = vec![0usize; g.n()];
    for (v, nbr) in removed.into_iter().rev() {
        colour[v] = nbr.map_or(0, |u| 1 - colour[u]);
    }
    let colouring = Colouring(colour);
    let cert = audit(g, &colouring)?;
    if cert.defect > k {
        return Err(StructuralError::Audit(format!(
            "defect {} above {k}",
            cert.defect
        )));
    }
    Ok(colouring)
}

/// The tree edge at a leaf of the subtree spanning the nodes of `large`, with its crossing
/// count in `h`.
fn heavy_tree_edge(
    h: &Graph,
    partition: &TPartition,
    owner: &[usize],
    large: &[usize],
    k: usize,
) -> StructuralError {
    let tree = &partition.tree;
    let mut keep = vec![true; tree.n()];
    let mut terminal = vec![false; tree.n()];
    for &v in large {
        terminal[owner[v]] = true;
    }
    // Prune non-terminal leaves until the spanning subtree remains.
    let mut degree: Vec<usize> = tree.vertices().map(|x| tree.degree(x)).collect();
    let mut stack: Vec<usize> = tree
        .vertices()
        .filter(|&x| degree[x] <= 1 && !terminal[x])
        .collect();
    while let Some(x) = stack.pop() {
        if !keep[x] {
            continue;
        }
        keep[x] = false;
        for y in tree.neighbours(x) {
            if keep[y] {
                degree[y] -= 1;
                if degree[y] <= 1 && !terminal[y] {
                    stack.push(y);
                }
            }
        }
    }
    let leaf = tree
        .vertices()
        .find(|&x| keep[x] && tree.neighbours(x).filter(|&y| keep[y]).count() <= 1)
        .expect("a non-empty subtree has a leaf");
    let Some(other) = tree
        .neighbours(leaf)
        .find(|&y| keep[y])
        .or_else(|| tree.neighbours(leaf).next())
    else {
        return StructuralError::Internal("a lone tree node holds a high-degree vertex".into());
    };
    let mut side = vec![false; tree.n()];
    side[leaf] = true;
    let mut queue = vec![leaf];
    while let Some(x) = queue.pop() {
        for y in tree.neighbours(x) {
            if !side[y] && !(x == leaf && y == other) {
                side[y] = true;
                queue.push(y);
            }
        }
    }
    let crossing = h
        .edges()
        .filter(|&(a, b)| side[owner[a]] != side[owner[b]])
        .count();
    if crossing > k {
        StructuralError::Adhesion {
            tree_edge: (leaf, other),
            crossing,
            limit: k,
        }
    } else {
        StructuralError::Internal(format!(
            "leaf edge {leaf}-{other} is crossed by only {crossing} edges"
        ))
    }
}

/// Two-colouring with defect below `(t - 1)^3` of a graph with no `K_t` immersion.
///
/// Bags of the immersion partition become single vertices of a quotient graph, which is
/// coloured with defect `(t - 1)^2 - 1`; every vertex takes its bag's colour.
pub fn immersion_two_colour(g: &Graph, t: usize) -> Result<Colouring, StructuralError> {
    let partition = immersion_tpartition(g, t)?;
    let owner = partition.owner(g.n());
    let nodes = partition.tree.n();
    let mut quotient = Graph::new(nodes);
    for (u, v) in g.edges() {
        if owner[u] != owner[v] {
            quotient.add_edge(owner[u], owner[v])?;
        }
    }
    let singletons = TPartition::new(
        &quotient,
        partition.tree.clone(),
        (0..nodes).map(|x| vec![x]).collect(),
    )?;
    let limit = (t - 1) * (t - 1);
    let node_colour = tpartition_two_colour(&quotient, &singletons, limit - 1)?;
    let colouring = Colouring(owner.iter().map(|&x| node_colour.colour(x)).collect());
    let cert = audit(g, &colouring)?;
    let bound = (t - 1) * (limit - 1) + (t - 2);
    if cert.defect > bound || cert.k > 2 {
        return Err(StructuralError::Audit(format!(
            "defect {} with {} colours against {bound}",
            cert.defect, cert.k
        )));
    }
    Ok(colouring)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::constructions::random_subcubic;

    fn check_partition(g: &Graph, t: usize) -> TPartition {
        let p = immersion_tpartition(g, t).unwrap();
        assert!(p.bags.iter().all(|b| b.len() < t));
        assert!(p.adhesion(g) < (t - 1) * (t - 1));
        p
    }

    #[test]
    fn forests_and_cubic_graphs() {
        check_partition(&Graph::path(10), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = random_subcubic(40, &mut rng);
        check_partition(&g, 5);
        let c = immersion_two_colour(&g, 5).unwrap();
        assert!(audit(&g, &c).unwrap().defect < 64);
    }

    #[test]
    fn complete_graphs() {
        // K_t itself has all cuts t - 1 < (t - 1)^2, so the partition exists.
        check_partition(&Graph::complete(4), 4);
        let err = immersion_tpartition(&Graph::complete(5), 3).unwrap_err();
        let StructuralError::Immersion(cert) = err else {
            panic!("expected an immersion")
        };
        assert!(cert.verify(&Graph::complete(5)));
        assert_eq!(cert.branch.len(), 3);
        let err = immersion_tpartition(&Graph::complete(10), 4).unwrap_err();
        assert!(matches!(err, StructuralError::Immersion(ref c) if c.verify(&Graph::complete(10))));
    }

    #[test]
    fn cycle_and_single_vertex() {
        let g = Graph::cycle(9);
        let c = immersion_two_colour(&g, 3).unwrap();
        assert!(audit(&g, &c).unwrap().defect <= 8);
        let one = immersion_two_colour(&Graph::new(1), 3).unwrap();
        assert_eq!(one.colours_used().len(), 1);
    }

    #[test]
    fn bijection_on_stars_and_trees() {
        let star = Graph::complete_bipartite(1, 6);
        let tree = Graph::path(7);
        let p = TPartition::new(&star, tree.clone(), (0..7).map(|x| vec![x]).collect()).unwrap();
        let k = p.adhesion(&star);
        let c = tpartition_two_colour(&star, &p, k).unwrap();
        assert!(audit(&star, &c).unwrap().defect <= k);
        assert!(
            audit(&star, &tpartition_two_colour(&star, &p, 1).unwrap())
                .unwrap()
                .defect
                <= 1
        );
        let k4 = Graph::complete(4);
        let on_path =
            TPartition::new(&k4, Graph::path(4), (0..4).map(|x| vec![x]).collect()).unwrap();
        assert_eq!(
            tpartition_two_colour(&k4, &on_path, 1),
            Err(StructuralError::Adhesion {
                tree_edge: (0, 1),
                crossing: 3,
                limit: 1
            })
        );
        let same = TPartition::new(&tree, tree.clone(), (0..7).map(|x| vec![x]).collect()).unwrap();
        let c = tpartition_two_colour(&tree, &same, 1).unwrap();
        assert!(audit(&tree, &c).unwrap().defect <= 1);
        let empty = Graph::new(0);
        let p = TPartition::new(&empty, Graph::new(1), vec![vec![]]).unwrap();
        assert!(tpartition_two_colour(&empty, &p, 0).unwrap().is_empty());
    }
}
