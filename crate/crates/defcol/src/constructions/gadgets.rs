use std::collections::BTreeSet;

use super::{
    standard::{closure_of_tree, complete_tree_parents, depths},
    ConstructionError,
};
use crate::colouring::ListAssignment;
use crate::graph::{euler_genus, Graph};
use crate::oracle::{colourable, Caps, Limit};

/// The hub over a path on six vertices: a fan of five triangles, vertex 0 is the hub.
pub fn outerplanar_gadget() -> Graph {
    let mut g = Graph::path(7);
    g.remove_edge(0, 1);
    for v in 1..7 {
        g.add_edge(0, v).expect("in range");
    }
    g
}

/// All triangulations of the convex polygon on `0..n`, as chord lists.
fn polygon_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn split(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for apex in lo + 1..hi {
            for left in split(lo, apex) {
                for right in split(apex, hi) {
                    let mut chords = left.clone();
                    chords.extend(right.iter().copied());
                    if apex - lo > 1 {
                        chords.push((lo, apex));
                    }
                    if hi - apex > 1 {
                        chords.push((apex, hi));
                    }
                    out.push(chords);
                }
            }
        }
        out
    }
    if n < 3 {
        return vec![Vec::new()];
    }
    split(0, n - 1)
}

/// Smallest outerplanar graph with no 2-colouring of defect 1, searched by vertex count,
/// then edge count, then lexicographic edge list. Gives up after `max_n` vertices or
/// `budget` colouring tests.
pub fn fig4_search(max_n: usize, budget: usize) -> Option<Graph> {
    let caps = Caps::default();
    let mut tests = 0;
    for n in 3..=max_n.min(caps.colouring) {
        let mut candidates: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
        for chords in polygon_triangulations(n) {
            let mut all: Vec<(usize, usize)> = (0..n)
                .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
                .collect();
            all.extend(chords);
            all.sort_unstable();
            for mask in 0u64..1 << all.len() {
                let edges: Vec<(usize, usize)> = all
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                candidates.insert((edges.len(), edges));
            }
        }
        for (_, edges) in candidates {
            if tests >= budget {
                return None;
            }
            tests += 1;
            let g = Graph::from_edges(n, &edges).expect("polygon edges are in range");
            if colourable(&g, 2, Limit::Defect(1), &caps).ok()?.is_none() {
                return Some(g);
            }
        }
    }
    None
}

/// `K_{s,t}` with `t = (ds + 1) s^s` and a list assignment admitting no `L`-colouring of
/// defect `d`.
///
/// Vertex `i < s` gets `{is, ..., is + s - 1}`; the `t` side lists every choice of one colour
/// per `s`-side list, in lexicographic order, each repeated `ds + 1` times.
pub fn kkn_gadget(s: usize, d: usize) -> Result<(Graph, ListAssignment), ConstructionError> {
    let s = s.max(1);
    let reps = d * s + 1;
    let choices = s
        .checked_pow(s as u32)
        .ok_or(ConstructionError::CapExceeded {
            what: "kkn gadget",
            size: usize::MAX,
            cap: 1 << 20,
        })?;
    let t = reps * choices;
    super::check_cap("kkn gadget", s + t, 1 << 20)?;
    let g = Graph::complete_bipartite(s, t);
    let mut lists: Vec<BTreeSet<usize>> = (0..s).map(|i| (i * s..i * s + s).collect()).collect();
    for code in 0..choices {
        let mut rest = code;
        let mut digits = vec![0; s];
        for slot in digits.iter_mut().rev() {
            *slot = rest % s;
            rest /= s;
        }
        let list: BTreeSet<usize> = digits.iter().enumerate().map(|(i, &x)| i * s + x).collect();
        lists.extend(std::iter::repeat_n(list, reps));
    }
    let lists = ListAssignment::new(lists).expect("every list is non-empty");
    Ok((g, lists))
}

/// How to build a member of the rainbow-clique family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XkcRecipe {
    /// `P_{c+1}`, level 1.
    Path,
    /// `K_{1,c}`, level 1.
    Star,
    /// `c` copies plus a dominant vertex; one level up.
    Dominant(Box<XkcRecipe>),
    /// Every `k`-clique gets `k(c - 1) + 1` common stable neighbours; one level up.
    CliquePlus(Box<XkcRecipe>),
    /// Every `(k - 1)`-clique gets a common path of `(c^2 - 1)(k - 1) + c + 1` vertices;
    /// two levels up.
    CliquePlusPlus(Box<XkcRecipe>),
}

impl XkcRecipe {
    pub fn level(&self) -> usize {
        match self {
            XkcRecipe::Path | XkcRecipe::Star => 1,
            XkcRecipe::Dominant(r) | XkcRecipe::CliquePlus(r) => r.level() + 1,
            XkcRecipe::CliquePlusPlus(r) => r.level() + 2,
        }
    }
}

/// All cliques of exactly `size` vertices, each listed increasingly, in lexicographic order.
pub fn cliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let start = current.last().map_or(0, |&v| v + 1);
        for v in start..g.n() {
            if current.iter().all(|&u| g.has_edge(u, v)) {
                current.push(v);
                grow(g, size, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, size, &mut Vec::new(), &mut out);
    out
}

/// Builds the member of `X_{k,c}` described by `recipe`, refusing above `cap` vertices.
pub fn xkc_family(
    k: usize,
    c: usize,
    recipe: &XkcRecipe,
    cap: usize,
) -> Result<Graph, ConstructionError> {
    if recipe.level() != k {
        return Err(ConstructionError::RecipeLevel {
            expected: k,
            got: recipe.level(),
        });
    }
    build_xkc(c.max(1), recipe, cap)
}

fn build_xkc(c: usize, recipe: &XkcRecipe, cap: usize) -> Result<Graph, ConstructionError> {
    let g = match recipe {
        XkcRecipe::Path => Graph::path(c + 1),
        XkcRecipe::Star => Graph::complete_bipartite(1, c),
        XkcRecipe::Dominant(inner) => {
            let base = build_xkc(c, inner, cap)?;
            super::check_cap("rainbow family member", 1 + c * base.n(), cap)?;
            let mut g = Graph::new(1);
            for _ in 0..c {
                g = g.disjoint_union(&base);
            }
            for v in 1..g.n() {
                g.add_edge(0, v).expect("in range");
            }
            g
        }
        XkcRecipe::CliquePlus(inner) => {
            let k = recipe.level();
            let base = build_xkc(c, inner, cap)?;
            attach_to_cliques(base, k, k * (c - 1) + 1, false, cap)?
        }
        XkcRecipe::CliquePlusPlus(inner) => {
            let k = recipe.level();
            let base = build_xkc(c, inner, cap)?;
            attach_to_cliques(base, k - 1, (c * c - 1) * (k - 1) + c + 1, true, cap)?
        }
    };
    Ok(g)
}

fn attach_to_cliques(
    mut g: Graph,
    size: usize,
    extra: usize,
    as_path: bool,
    cap: usize,
) -> Result<Graph, ConstructionError> {
    let cliques = cliques_of_size(&g, size);
    super::check_cap("rainbow family member", g.n() + cliques.len() * extra, cap)?;
    for clique in cliques {
        let mut previous = None;
        for _ in 0..extra {
            let x = g.add_vertex();
            for &w in &clique {
                g.add_edge(w, x).expect("in range");
            }
            if let (true, Some(p)) = (as_path, previous) {
                g.add_edge(p, x).expect("in range");
            }
            previous = Some(x);
        }
    }
    Ok(g)
}

/// Whether every colouring of `g` with clustering `c` and at most `colours` colours has a
/// clique of `clique` vertices in pairwise distinct colours. Enumerates all colourings.
pub fn every_colouring_has_rainbow_clique(
    g: &Graph,
    colours: usize,
    c: usize,
    clique: usize,
    cap: usize,
) -> Result<bool, ConstructionError> {
    super::check_cap("rainbow enumeration", g.n(), cap)?;
    let cliques = cliques_of_size(g, clique);
    let mut colour = vec![usize::MAX; g.n()];
    Ok(rainbow_search(g, colours, c, &cliques, 0, 0, &mut colour))
}

fn rainbow_search(
    g: &Graph,
    colours: usize,
    c: usize,
    cliques: &[Vec<usize>],
    v: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    if v == g.n() {
        return cliques
            .iter()
            .any(|q| q.iter().map(|&u| colour[u]).collect::<BTreeSet<_>>().len() == q.len());
    }
    for x in 0..colours.min(used + 1) {
        colour[v] = x;
        if cluster_ok(g, c, v, colour)
            && !rainbow_search(g, colours, c, cliques, v + 1, used.max(x + 1), colour)
        {
            colour[v] = usize::MAX;
            return false;
        }
    }
    colour[v] = usize::MAX;
    true
}

fn cluster_ok(g: &Graph, c: usize, v: usize, colour: &[usize]) -> bool {
    let mut seen = BTreeSet::from([v]);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for y in g.neighbours(x) {
            if colour[y] == colour[v] && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() <= c
}

/// `G_k`: `G_2` is `P_{c+1}`; `G_k` hangs `2c - 1` disjoint copies of `G_{k-1}` complete
/// to each edge of a path on `c + 1` vertices. The path is `0..=c`.
pub fn gk_circumference_gadget(k: usize, c: usize, cap: usize) -> Result<Graph, ConstructionError> {
    if k <= 2 {
        return Ok(Graph::path(c + 1));
    }
    let inner = gk_circumference_gadget(k - 1, c, cap)?;
    super::check_cap(
        "circumference gadget",
        c + 1 + c * (2 * c - 1) * inner.n(),
        cap,
    )?;
    let mut g = Graph::path(c + 1);
    for i in 0..c {
        for _ in 0..2 * c - 1 {
            let shift = g.n();
            g = g.disjoint_union(&inner);
            for v in shift..g.n() {
                g.add_edge(i, v).expect("in range");
                g.add_edge(i + 1, v).expect("in range");
            }
        }
    }
    Ok(g)
}

/// A graph with an edge partition into parts, each carrying a rotation system.
#[derive(Debug, Clone)]
pub struct ThicknessWitness {
    pub graph: Graph,
    pub parts: Vec<Graph>,
    pub rotations: Vec<Vec<Vec<usize>>>,
}

impl ThicknessWitness {
    /// Largest Euler genus among the parts, after checking the parts partition the edges.
    pub fn max_genus(&self) -> Option<usize> {
        let mut covered = BTreeSet::new();
        for part in &self.parts {
            for e in part.edges() {
                if !self.graph.has_edge(e.0, e.1) || !covered.insert(e) {
                    return None;
                }
            }
        }
        if covered.len() != self.graph.m() {
            return None;
        }
        self.parts
            .iter()
            .zip(&self.rotations)
            .map(|(p, r)| euler_genus(p, r).ok())
            .try_fold(0, |acc, g| g.map(|g| acc.max(g)))
    }
}

fn sorted_rotation(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices().map(|v| g.neighbours(v).collect()).collect()
}

/// The 1-subdivision of `K_n` split into two star forests.
///
/// Branch vertices are `0..n`; the subdivision vertex of `uv` comes next in
/// lexicographic pair order. Part 0 holds the half-edges at `u`, part 1 those at `v`.
pub fn thickness_gadgets(n: usize) -> ThicknessWitness {
    let mut graph = Graph::new(n);
    let mut halves = [Graph::new(n), Graph::new(n)];
    for u in 0..n {
        for v in u + 1..n {
            let s = graph.add_vertex();
            graph.add_edge(u, s).expect("in range");
            graph.add_edge(s, v).expect("in range");
            for half in halves.iter_mut() {
                half.add_vertex();
            }
            halves[0].add_edge(u, s).expect("in range");
            halves[1].add_edge(s, v).expect("in range");
        }
    }
    let rotations = halves.iter().map(sorted_rotation).collect();
    ThicknessWitness {
        graph,
        parts: halves.to_vec(),
        rotations,
    }
}

/// `S(2k, d)` split into `k` planar parts with explicit plane rotations.
///
/// An edge joins a vertex to one of its ancestors and goes to part `depth(ancestor) / 2`.
/// Inside part `i`, a vertex `a` at depth `2i` sees each child `b` followed by the
/// descendants of `b`; those descendants see only `a` and `b`.
pub fn standard_thickness_witness(k: usize, d: usize) -> ThicknessWitness {
    let k = k.max(1);
    let parents = complete_tree_parents(2 * k, d + 1);
    let depth = depths(&parents);
    let graph = closure_of_tree(&parents);
    let n = graph.n();
    let mut children = vec![Vec::new(); n];
    for v in 0..n {
        if parents[v] != usize::MAX {
            children[parents[v]].push(v);
        }
    }
    let subtree = |root: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = children[root].iter().rev().copied().collect::<Vec<_>>();
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(children[x].iter().rev());
        }
        out
    };
    let mut parts = Vec::new();
    let mut rotations = Vec::new();
    for i in 0..k {
        let mut part = Graph::new(n);
        let mut rotation = vec![Vec::new(); n];
        for a in (0..n).filter(|&a| depth[a] == 2 * i) {
            for &b in &children[a] {
                let below = subtree(b);
                part.add_edge(a, b).expect("in range");
                rotation[a].push(b);
                rotation[b].push(a);
                for &x in &below {
                    part.add_edge(a, x).expect("in range");
                    part.add_edge(b, x).expect("in range");
                    rotation[a].push(x);
                    rotation[x] = vec![a, b];
                }
                rotation[b].extend(below.iter().rev());
            }
        }
        parts.push(part);
        rotations.push(rotation);
    }
    ThicknessWitness {
        graph,
        parts,
        rotations,
    }
}
