//! Simple graphs, flats, contractions, acyclic orientations and the
//! orientation-indexed involution on ordered set partitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::combinat::{ordered_set_partitions_of, OrderedSetPartition, Permutation};
use crate::error::{parse_err, Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 8;

/// An edge `{u, v}` stored with `u < v`; vertices are `1..=n`.
pub type Edge = (u32, u32);

fn edge(u: u32, v: u32) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A labelled simple graph on `[n]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u as usize > n || v as usize > n {
                return Err(Error::Precondition(format!("invalid edge {u}-{v} on {n} vertices")));
            }
            set.insert(edge(u, v));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let n32 = n as u32;
        let edges = (1..=n32).flat_map(|u| (u + 1..=n32).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n as u32).map(|u| (u, u + 1)).collect() }
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.edges.insert((1, n as u32));
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&edge(u, v))
    }

    /// Edges with both ends in `vs`.
    pub fn induced_edges(&self, vs: &[u32]) -> BTreeSet<Edge> {
        let set: BTreeSet<u32> = vs.iter().copied().collect();
        self.edges
            .iter()
            .filter(|(u, v)| set.contains(u) && set.contains(v))
            .copied()
            .collect()
    }

    /// `G_V`, relabelled order-preservingly onto `[|V|]`.
    pub fn induced(&self, vs: &[u32]) -> Graph {
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        let index: BTreeMap<u32, u32> = sorted.iter().enumerate().map(|(i, &v)| (v, i as u32 + 1)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(u, v)| Some((*index.get(u)?, *index.get(v)?)))
            .collect();
        Graph { n: sorted.len(), edges }
    }

    /// Disjoint union, with `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let s = self.n as u32;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|(u, v)| (u + s, v + s)));
        Graph { n: self.n + other.n, edges }
    }

    pub fn is_independent(&self, vs: &[u32]) -> bool {
        self.induced_edges(vs).is_empty()
    }

    /// Connected components of `([n], F)`, each sorted, ordered by least vertex.
    pub fn components_of(n: usize, f: &BTreeSet<Edge>) -> Vec<Vec<u32>> {
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(u, v) in f {
            let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for v in 1..=n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v as u32);
        }
        let mut comps: Vec<Vec<u32>> = groups.into_values().collect();
        comps.sort();
        comps
    }

    pub fn components(&self) -> Vec<Vec<u32>> {
        Self::components_of(self.n, &self.edges)
    }

    pub fn is_connected_on(&self, vs: &[u32]) -> bool {
        let sub = self.induced(vs);
        sub.n <= 1 || sub.components().len() == 1
    }

    /// Image of the graph under a relabelling `v -> p[v-1]`.
    pub fn relabel(&self, p: &[u32]) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| edge(p[u as usize - 1], p[v as usize - 1]))
            .collect();
        Graph { n: self.n, edges }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "n={};edges={}", self.n, edges.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `1-2,2-3` into edges; the empty string is the empty edge set.
pub fn parse_edges(s: &str) -> Result<Vec<(u32, u32)>> {
    let t = s.trim();
    if t.is_empty() || t == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in t.split(',') {
        let (a, b) = piece
            .split_once('-')
            .ok_or_else(|| parse_err(s, pos, format!("expected `u-v`, found {piece:?}")))?;
        let u = a.trim().parse().map_err(|_| parse_err(s, pos, "bad vertex"))?;
        let v = b.trim().parse().map_err(|_| parse_err(s, pos + a.len() + 1, "bad vertex"))?;
        out.push((u, v));
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Graph {
    type Err = Error;

    /// Grammar: `n=4;edges=1-2,2-3,3-4`; the edge list may be empty.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (nn, rest) = t.split_once(';').unwrap_or((t, "edges="));
        let n: usize = nn
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| parse_err(s, 0, "expected `n=`"))?
            .trim()
            .parse()
            .map_err(|_| parse_err(s, 2, "bad vertex count"))?;
        let edges = rest
            .trim()
            .strip_prefix("edges=")
            .ok_or_else(|| parse_err(s, nn.len() + 1, "expected `edges=`"))?;
        let list = parse_edges(edges).map_err(|e| match e {
            Error::Parse { position, message, .. } => parse_err(s, nn.len() + 7 + position, message),
            other => other,
        })?;
        Graph::new(n, list)
    }
}

/// An isomorphism class of simple graphs, stored as its canonical labelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonGraph(Graph);

impl CanonGraph {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.n
    }

    pub fn empty() -> Self {
        CanonGraph(Graph::edgeless(0))
    }
}

impl fmt::Display for CanonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CanonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl FromStr for CanonGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        canonical_form(&s.parse()?)
    }
}

/// Every simple graph on vertices `1..=n`.
pub fn labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<Edge> = Graph::complete(n).edges.into_iter().collect();
    (0u64..(1 << pairs.len()))
        .map(|mask| Graph {
            n,
            edges: pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect(),
        })
        .collect()
}

/// One representative per isomorphism class on exactly `n` vertices.
pub fn graph_classes(n: usize) -> Result<Vec<CanonGraph>> {
    let mut out: Vec<CanonGraph> = labelled_graphs(n).iter().map(canonical_form).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// The lexicographically least sorted edge list over all relabellings.
pub fn canonical_form(g: &Graph) -> Result<CanonGraph> {
    if g.n > MAX_CANON_VERTICES {
        return Err(Error::SizeBound { what: "graph vertices", size: g.n, bound: MAX_CANON_VERTICES });
    }
    if g.edges.is_empty() || g.edges.len() == g.n * (g.n - 1) / 2 {
        return Ok(CanonGraph(g.clone()));
    }
    let best = Permutation::all(g.n)
        .into_iter()
        .map(|p| {
            let mut e: Vec<Edge> = g
                .edges
                .iter()
                .map(|&(u, v)| edge(p.values()[u as usize - 1], p.values()[v as usize - 1]))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .expect("at least one permutation");
    Ok(CanonGraph(Graph { n: g.n, edges: best.into_iter().collect() }))
}

/// All set partitions of `[n]` in restricted-growth order.
fn set_partitions(n: usize) -> Vec<Vec<Vec<u32>>> {
    fn rec(v: u32, n: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if v > n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            rec(v + 1, n, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        rec(v + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(1, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All flats of `g`: unions of connected induced subgraphs over a vertex partition.
pub fn flats(g: &Graph) -> Vec<BTreeSet<Edge>> {
    let mut out: Vec<BTreeSet<Edge>> = set_partitions(g.n)
        .into_iter()
        .filter(|p| p.iter().all(|b| g.is_connected_on(b)))
        .map(|p| p.iter().flat_map(|b| g.induced_edges(b)).collect())
        .collect();
    out.sort();
    out
}

/// `G/F` with components of `F` labelled by increasing least vertex.
pub fn contract_labelled(g: &Graph, f: &BTreeSet<Edge>) -> (Graph, Vec<Vec<u32>>) {
    let comps = Graph::components_of(g.n, f);
    let mut label = vec![0u32; g.n + 1];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            label[v as usize] = i as u32 + 1;
        }
    }
    let edges = g
        .edges
        .iter()
        .map(|&(u, v)| (label[u as usize], label[v as usize]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| edge(a, b))
        .collect();
    (Graph { n: comps.len(), edges }, comps)
}

/// `G/F` up to isomorphism.
pub fn contract(g: &Graph, f: &BTreeSet<Edge>) -> Result<CanonGraph> {
    canonical_form(&contract_labelled(g, f).0)
}

/// A directed graph on `[n]` whose arcs are an orientation of a simple graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    n: usize,
    arcs: BTreeSet<(u32, u32)>,
}

impl Orientation {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let arcs: BTreeSet<(u32, u32)> = arcs.into_iter().collect();
        if arcs.iter().any(|&(u, v)| u == v || u == 0 || v == 0 || u as usize > n || v as usize > n) {
            return Err(Error::Precondition("arc endpoint out of range".into()));
        }
        if arcs.iter().any(|&(u, v)| arcs.contains(&(v, u))) {
            return Err(Error::Precondition("both directions of one edge".into()));
        }
        Ok(Orientation { n, arcs })
    }

    pub fn arcs(&self) -> &BTreeSet<(u32, u32)> {
        &self.arcs
    }

    pub fn underlying(&self) -> Graph {
        Graph { n: self.n, edges: self.arcs.iter().map(|&(u, v)| edge(u, v)).collect() }
    }

    /// Repeatedly removes the largest source; `None` if a directed cycle blocks this.
    fn peel_sources(&self) -> Option<Vec<u32>> {
        let mut indeg = vec![0usize; self.n + 1];
        for &(_, v) in &self.arcs {
            indeg[v as usize] += 1;
        }
        let mut alive: BTreeSet<u32> = (1..=self.n as u32).collect();
        let mut order = Vec::with_capacity(self.n);
        while !alive.is_empty() {
            let b = *alive.iter().rev().find(|&&v| indeg[v as usize] == 0)?;
            alive.remove(&b);
            order.push(b);
            for &(u, v) in &self.arcs {
                if u == b {
                    indeg[v as usize] -= 1;
                }
            }
        }
        Some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.peel_sources().is_some()
    }
}

/// `O_pi`: orient `u -> v` whenever `u` lies in an earlier block than `v`.
pub fn orientation_from_partition(g: &Graph, pi: &OrderedSetPartition) -> Result<Orientation> {
    let mut block = vec![usize::MAX; g.n + 1];
    for (i, b) in pi.blocks().iter().enumerate() {
        for &v in b {
            block[v as usize] = i;
        }
    }
    if pi.ground_size() != g.n {
        return Err(Error::Precondition("partition ground set differs from vertex set".into()));
    }
    let mut arcs = BTreeSet::new();
    for &(u, v) in &g.edges {
        match block[u as usize].cmp(&block[v as usize]) {
            std::cmp::Ordering::Less => arcs.insert((u, v)),
            std::cmp::Ordering::Greater => arcs.insert((v, u)),
            std::cmp::Ordering::Equal => return Err(Error::DependentBlock(pi.blocks()[block[u as usize]].clone())),
        };
    }
    Ok(Orientation { n: g.n, arcs })
}

/// `phi_O`: singleton blocks listing the largest remaining source at each step.
pub fn canonical_partition(o: &Orientation) -> Result<OrderedSetPartition> {
    let order = o.peel_sources().ok_or(Error::CyclicOrientation)?;
    Ok(OrderedSetPartition::singletons(&order))
}

/// All acyclic orientations of `g`, by brute force over edge directions.
pub fn acyclic_orientations(g: &Graph) -> Vec<Orientation> {
    let edges: Vec<Edge> = g.edges.iter().copied().collect();
    let m = edges.len();
    (0u64..(1u64 << m))
        .map(|mask| Orientation {
            n: g.n,
            arcs: edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                .collect(),
        })
        .filter(Orientation::is_acyclic)
        .collect()
}

/// `a(G)`, the number of acyclic orientations.
pub fn acyclic_orientation_count(g: &Graph) -> u64 {
    acyclic_orientations(g).len() as u64
}

/// The involution on ordered partitions of an edgeless-flat instance.
fn involution_empty_flat(g: &Graph, pi: &OrderedSetPartition) -> Result<OrderedSetPartition> {
    let o = orientation_from_partition(g, pi)?;
    let phi = canonical_partition(&o)?;
    let blocks = pi.blocks();
    let Some(i) = (0..blocks.len()).find(|&i| phi.blocks().get(i) != Some(&blocks[i])) else {
        return Ok(pi.clone());
    };
    let b = phi.blocks()[i][0];
    let j = blocks.iter().position(|blk| blk.contains(&b)).expect("b is a vertex");
    let mut out: Vec<Vec<u32>> = blocks.to_vec();
    if out[j].len() >= 2 {
        out[j].retain(|&v| v != b);
        out.insert(j + 1, vec![b]);
    } else {
        let moved = out.remove(j);
        out[j - 1].extend(moved);
    }
    Ok(OrderedSetPartition::from_blocks_unchecked(out))
}

/// Flat induced by an ordered partition: the union of its induced subgraphs.
pub fn induced_flat(g: &Graph, pi: &OrderedSetPartition) -> BTreeSet<Edge> {
    pi.blocks().iter().flat_map(|b| g.induced_edges(b)).collect()
}

/// `iota(pi)` for a partition `pi` inducing the flat `f`.
///
/// Blocks are pushed down to `G/F`, the edgeless-flat involution runs there
/// with respect to `O_pi`, and the result is lifted back.
pub fn graph_involution_step(g: &Graph, f: &BTreeSet<Edge>, pi: &OrderedSetPartition) -> Result<OrderedSetPartition> {
    if pi.ground_size() != g.n {
        return Err(Error::Precondition("partition ground set differs from vertex set".into()));
    }
    if induced_flat(g, pi) != *f {
        return Err(Error::Precondition(format!("{pi} does not induce the given flat")));
    }
    let (quot, comps) = contract_labelled(g, f);
    let mut label = vec![0u32; g.n + 1];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            label[v as usize] = i as u32 + 1;
        }
    }
    let pushed: Vec<Vec<u32>> = pi
        .blocks()
        .iter()
        .map(|b| {
            let s: BTreeSet<u32> = b.iter().map(|&v| label[v as usize]).collect();
            s.into_iter().collect()
        })
        .collect();
    let w = OrderedSetPartition::from_blocks_unchecked(pushed);
    let image = involution_empty_flat(&quot, &w)?;
    let lifted = image
        .blocks()
        .iter()
        .map(|b| b.iter().flat_map(|&c| comps[c as usize - 1].iter().copied()).collect())
        .collect();
    Ok(OrderedSetPartition::from_blocks_unchecked(lifted))
}

/// `A_F`: every ordered partition of `V(G)` whose induced subgraphs assemble to `f`.
pub fn partitions_inducing(g: &Graph, f: &BTreeSet<Edge>) -> Vec<OrderedSetPartition> {
    let (quot, comps) = contract_labelled(g, f);
    let ground: Vec<u32> = (1..=quot.n as u32).collect();
    let mut out: Vec<OrderedSetPartition> = ordered_set_partitions_of(&ground)
        .into_iter()
        .filter(|w| w.blocks().iter().all(|b| quot.is_independent(b)))
        .map(|w| {
            let blocks = w
                .blocks()
                .iter()
                .map(|b| b.iter().flat_map(|&c| comps[c as usize - 1].iter().copied()).collect())
                .collect();
            OrderedSetPartition::from_blocks_unchecked(blocks)
        })
        .filter(|pi| induced_flat(g, pi) == *f)
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        s.parse().unwrap()
    }

    fn osp(s: &str) -> OrderedSetPartition {
        s.parse().unwrap()
    }

    /// The eight-vertex orientation from the worked example.
    fn example_orientation() -> Orientation {
        Orientation::new(8, [(5, 8), (8, 7), (5, 6), (8, 1), (3, 6), (3, 4), (2, 1)]).unwrap()
    }

    /// Chromatic polynomial at `x` by deletion and contraction on multigraph-free graphs.
    fn chromatic_at(g: &Graph, x: i64) -> i64 {
        let Some(&(u, v)) = g.edges.iter().next() else {
            return x.pow(g.n as u32);
        };
        let mut deleted = g.clone();
        deleted.edges.remove(&(u, v));
        let f: BTreeSet<Edge> = [(u, v)].into_iter().collect();
        let (contracted, _) = contract_labelled(g, &f);
        chromatic_at(&deleted, x) - chromatic_at(&contracted, x)
    }


    #[test]
    fn parse_and_display() {
        let p = g("n=4;edges=1-2,2-3,3-4");
        assert_eq!(p, Graph::path(4));
        assert_eq!(p.to_string(), "n=4;edges=1-2,2-3,3-4");
        assert_eq!(g("n=3;edges="), Graph::edgeless(3));
        assert_eq!(g("n=3"), Graph::edgeless(3));
        assert!("n=2;edges=1-3".parse::<Graph>().is_err());
        assert!("n=2;edges=1+2".parse::<Graph>().is_err());
    }

    #[test]
    fn canonical_form_examples() {
        let a = canonical_form(&g("n=3;edges=1-2,2-3")).unwrap();
        let b = canonical_form(&g("n=3;edges=2-1,1-3")).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, canonical_form(&Graph::complete(3)).unwrap());
        assert_eq!(canonical_form(&Graph::edgeless(5)).unwrap().graph(), &Graph::edgeless(5));
        assert!(matches!(canonical_form(&Graph::edgeless(9)), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let mut classes = [0usize; 6];
        for (n, count) in classes.iter_mut().enumerate() {
            let mut seen = BTreeSet::new();
            for gr in labelled_graphs(n) {
                let c = canonical_form(&gr).unwrap();
                for p in Permutation::all(n).into_iter().step_by(7) {
                    assert_eq!(canonical_form(&gr.relabel(p.values())).unwrap(), c);
                }
                seen.insert(c);
            }
            *count = seen.len();
        }
        // Unlabelled simple graphs on n vertices.
        assert_eq!(classes, [1, 1, 2, 4, 11, 34]);
    }

    fn is_flat_brute(gr: &Graph, f: &BTreeSet<Edge>) -> bool {
        Graph::components_of(gr.n, f).iter().all(|c| gr.induced_edges(c).iter().all(|e| f.contains(e)))
    }

    #[test]
    fn flats_match_definition() {
        assert_eq!(flats(&Graph::complete(2)).len(), 2);
        assert_eq!(flats(&Graph::complete(3)).len(), 5);
        assert_eq!(flats(&Graph::edgeless(4)), vec![BTreeSet::new()]);
        for n in 0..=4 {
            for gr in labelled_graphs(n) {
                let es: Vec<Edge> = gr.edges.iter().copied().collect();
                let brute: Vec<BTreeSet<Edge>> = (0u64..(1 << es.len()))
                    .map(|m| es.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e).collect())
                    .filter(|f| is_flat_brute(&gr, f))
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                assert_eq!(flats(&gr), brute, "{gr}");
            }
        }
    }

    #[test]
    fn contraction_examples() {
        let k2 = Graph::complete(2);
        let all: BTreeSet<Edge> = k2.edges.clone();
        assert_eq!(contract(&k2, &all).unwrap().graph(), &Graph::edgeless(1));
        let p3 = Graph::path(3);
        assert_eq!(contract(&p3, &BTreeSet::new()).unwrap(), canonical_form(&p3).unwrap());
        let end: BTreeSet<Edge> = [(1, 2)].into_iter().collect();
        assert_eq!(contract(&p3, &end).unwrap(), canonical_form(&k2).unwrap());
        // A triangle collapses to a single edge without a parallel copy.
        let k3 = Graph::complete(3);
        assert_eq!(contract(&k3, &end).unwrap(), canonical_form(&k2).unwrap());
    }

    #[test]
    fn acyclic_counts() {
        assert_eq!(acyclic_orientation_count(&Graph::edgeless(3)), 1);
        assert_eq!(acyclic_orientation_count(&Graph::complete(2)), 2);
        assert_eq!(acyclic_orientation_count(&Graph::complete(3)), 6);
        assert_eq!(acyclic_orientation_count(&Graph::complete(4)), 24);
        assert_eq!(acyclic_orientation_count(&Graph::cycle(4)), 14);
    }

    #[test]
    fn acyclic_count_is_chromatic_at_minus_one() {
        for n in 0..=5 {
            for gr in labelled_graphs(n) {
                assert_eq!(acyclic_orientation_count(&gr) as i64, chromatic_at(&gr, -1).abs(), "{gr}");
            }
        }
    }

    #[test]
    fn orientation_from_partition_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(orientation_from_partition(&k2, &osp("(1,2)")).unwrap().arcs, [(1, 2)].into_iter().collect());
        assert_eq!(orientation_from_partition(&k2, &osp("(2,1)")).unwrap().arcs, [(2, 1)].into_iter().collect());
        assert!(matches!(orientation_from_partition(&k2, &osp("(12)")), Err(Error::DependentBlock(_))));
        let o = orientation_from_partition(&Graph::edgeless(3), &osp("(13,2)")).unwrap();
        assert!(o.arcs.is_empty());
    }

    #[test]
    fn canonical_partition_examples() {
        let o = example_orientation();
        assert_eq!(canonical_partition(&o).unwrap(), osp("(5,8,7,3,6,4,2,1)"));
        let e = Orientation::new(4, []).unwrap();
        assert_eq!(canonical_partition(&e).unwrap(), osp("(4,3,2,1)"));
        let one = Orientation::new(2, [(1, 2)]).unwrap();
        assert_eq!(canonical_partition(&one).unwrap(), osp("(1,2)"));
        let cyc = Orientation::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(matches!(canonical_partition(&cyc), Err(Error::CyclicOrientation)));
    }

    #[test]
    fn worked_involution_example() {
        let o = example_orientation();
        let gr = o.underlying();
        let pi = osp("(5,3,4,26,8,7,1)");
        assert_eq!(orientation_from_partition(&gr, &pi).unwrap(), o);
        let empty = BTreeSet::new();
        let once = graph_involution_step(&gr, &empty, &pi).unwrap();
        assert_eq!(once, osp("(5,3,4,268,7,1)"));
        assert_eq!(graph_involution_step(&gr, &empty, &once).unwrap(), pi);
        let phi = osp("(5,8,7,3,6,4,2,1)");
        assert_eq!(graph_involution_step(&gr, &empty, &phi).unwrap(), phi);
    }

    #[test]
    fn involution_census_small_graphs() {
        for n in 0..=4 {
            for gr in labelled_graphs(n) {
                for f in flats(&gr) {
                    let c = Graph::components_of(gr.n, &f).len();
                    let quotient = contract_labelled(&gr, &f).0;
                    let mut fixed = 0u64;
                    for pi in partitions_inducing(&gr, &f) {
                        let img = graph_involution_step(&gr, &f, &pi).unwrap();
                        assert_eq!(graph_involution_step(&gr, &f, &img).unwrap(), pi);
                        if img == pi {
                            fixed += 1;
                            assert_eq!(pi.len(), c);
                        } else {
                            assert_eq!(pi.len().abs_diff(img.len()), 1);
                            assert_eq!(orientation_from_partition(&quotient, &push(&gr, &f, &pi)).unwrap(),
                                orientation_from_partition(&quotient, &push(&gr, &f, &img)).unwrap());
                        }
                    }
                    assert_eq!(fixed, acyclic_orientation_count(&quotient), "{gr} / {f:?}");
                }
            }
        }
    }

    fn push(gr: &Graph, f: &BTreeSet<Edge>, pi: &OrderedSetPartition) -> OrderedSetPartition {
        let comps = Graph::components_of(gr.n, f);
        let blocks = pi
            .blocks()
            .iter()
            .map(|b| {
                (0..comps.len() as u32)
                    .filter(|&i| comps[i as usize].iter().any(|v| b.contains(v)))
                    .map(|i| i + 1)
                    .collect()
            })
            .collect();
        OrderedSetPartition::from_blocks_unchecked(blocks)
    }

    #[test]
    fn involution_rejects_wrong_flat() {
        let k2 = Graph::complete(2);
        let all: BTreeSet<Edge> = k2.edges.clone();
        assert!(matches!(graph_involution_step(&k2, &all, &osp("(1,2)")), Err(Error::Precondition(_))));
    }
}
