//! Labeled simple graphs with a restricted vertex prefix.
//!
//! Vertices are `1..=n` in the public API and bit positions `0..n` internally.
//! The restricted vertices are always the prefix `{1, ..., r}`; operations that
//! need another restricted set relabel the graph so that the set becomes a
//! prefix (see [`LabeledGraph::restrict_to`]).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard ceiling on the vertex count of a [`LabeledGraph`]; adjacency rows are `u64` masks.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<u64>,
    r: usize,
}

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl LabeledGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::param(format!("graphs are limited to {MAX_VERTICES} vertices, got {n}")));
        }
        Ok(LabeledGraph { n, adj: vec![0; n], r: 0 })
    }

    /// Builds a graph from 1-based edges. Self-loops, out-of-range endpoints
    /// and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], r: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.insert_edge(u, v).map_err(|e| Error::param(format!("edge #{i}: {e}")))?;
        }
        g.set_r(r)?;
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> std::result::Result<(), String> {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return Err(format!("vertex out of range 1..={} in {{{u},{v}}}", self.n));
        }
        if u == v {
            return Err(format!("self-loop at {u}"));
        }
        let (a, b) = (u - 1, v - 1);
        if self.adj[a] & bit(b) != 0 {
            return Err(format!("duplicate edge {{{u},{v}}}"));
        }
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
        Ok(())
    }

    /// Adds an edge if absent; used by constructors that may touch an edge twice.
    fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        self.adj[u - 1] |= bit(v - 1);
        self.adj[v - 1] |= bit(u - 1);
    }

    fn set_r(&mut self, r: usize) -> Result<()> {
        if r > self.n {
            return Err(Error::param(format!("restricted prefix r = {r} exceeds n = {}", self.n)));
        }
        self.r = r;
        Ok(())
    }

    /// Same graph with a different restricted prefix size.
    pub fn with_r(&self, r: usize) -> Result<Self> {
        let mut g = self.clone();
        g.set_r(r)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Restricted vertices as a bit mask over `0..n`.
    pub fn restricted_mask(&self) -> u64 {
        low_mask(self.r)
    }

    pub fn all_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Neighbour mask of the 0-based vertex `i`.
    #[inline]
    pub fn adjacency(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] & bit(v - 1) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// 1-based neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        ones(self.adj[v - 1]).map(|i| i + 1).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in ones(self.adj[u] & !low_mask(u + 1)) {
                out.push((u + 1, v + 1));
            }
        }
        out
    }

    /// 1-based isolated vertices.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.adj[i] == 0).map(|i| i + 1).collect()
    }

    /// Whether the subgraph induced on `mask` is connected (the empty set counts as connected).
    pub fn is_connected_subset(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let mut seen = mask & mask.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for i in ones(frontier) {
                next |= self.adj[i] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    }

    /// Disjoint union; `other` is shifted past `self`. The restricted prefix of `self` is kept.
    pub fn disjoint_union(&self, other: &LabeledGraph) -> Result<Self> {
        let n = self.n + other.n;
        let mut g = Self::empty(n)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + self.n, v + self.n);
        }
        g.r = self.r;
        Ok(g)
    }

    /// Disjoint union plus the bridge `{u, v}` with `u` in `self` and `v` in `other`.
    pub fn bridge(&self, u: usize, other: &LabeledGraph, v: usize) -> Result<Self> {
        self.check_vertex(u, "bridge anchor u")?;
        other.check_vertex(v, "bridge anchor v")?;
        let mut g = self.disjoint_union(other)?;
        g.link(u, v + self.n);
        Ok(g)
    }

    /// Identifies `u` in `self` with `v` in `other`. The merged vertex keeps label `u`;
    /// the remaining vertices of `other` follow `self` in their original order.
    pub fn coalesce(&self, u: usize, other: &LabeledGraph, v: usize) -> Result<Self> {
        self.check_vertex(u, "coalesce anchor u")?;
        other.check_vertex(v, "coalesce anchor v")?;
        let n = self.n + other.n - 1;
        let mut g = Self::empty(n)?;
        for (a, b) in self.edges() {
            g.link(a, b);
        }
        let map = |x: usize| -> usize {
            match x.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.n + x,
                std::cmp::Ordering::Greater => self.n + x - 1,
            }
        };
        for (a, b) in other.edges() {
            g.link(map(a), map(b));
        }
        g.r = self.r;
        Ok(g)
    }

    /// Adds vertex `n + 1` joined to `w` by a pendant edge.
    pub fn pendant(&self, w: usize) -> Result<Self> {
        self.broom(w, 1)
    }

    /// Adds `count` new vertices, each adjacent only to `w`.
    pub fn broom(&self, w: usize, count: usize) -> Result<Self> {
        self.check_vertex(w, "broom anchor")?;
        let mut g = Self::empty(self.n + count)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for i in 0..count {
            g.link(w, self.n + 1 + i);
        }
        g.r = self.r;
        Ok(g)
    }

    /// Induced subgraph on the complement of `removed`, relabeled order-preservingly.
    ///
    /// Surviving restricted vertices always precede surviving unrestricted
    /// ones, so after compaction they form the prefix `{1, ..., r'}` with
    /// `r' = |{1..r} \ removed|`.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Self> {
        let mut drop = 0u64;
        for &x in removed {
            self.check_vertex(x, "deleted vertex")?;
            drop |= bit(x - 1);
        }
        Ok(self.induced(self.all_mask() & !drop))
    }

    /// Induced subgraph on a 0-based mask, relabeled order-preservingly.
    pub fn induced(&self, keep: u64) -> Self {
        let keep = keep & self.all_mask();
        let kept: Vec<usize> = ones(keep).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &old) in kept.iter().enumerate() {
            index[old] = new;
        }
        let adj = kept.iter().map(|&old| ones(self.adj[old] & keep).fold(0u64, |acc, nb| acc | bit(index[nb]))).collect();
        LabeledGraph { n: kept.len(), adj, r: (keep & self.restricted_mask()).count_ones() as usize }
    }

    /// Complement on the same labels and restricted prefix.
    pub fn complement(&self) -> Self {
        let all = self.all_mask();
        let adj = (0..self.n).map(|i| all & !self.adj[i] & !bit(i)).collect();
        LabeledGraph { n: self.n, adj, r: self.r }
    }

    /// Relabels so that `restricted` (1-based) becomes the prefix `{1..|restricted|}`.
    /// Both the restricted and the remaining vertices keep their relative order.
    pub fn restrict_to(&self, restricted: &[usize]) -> Result<Self> {
        let mut set = 0u64;
        for &x in restricted {
            self.check_vertex(x, "restricted vertex")?;
            set |= bit(x - 1);
        }
        let order: Vec<usize> = ones(set).chain(ones(self.all_mask() & !set)).collect();
        let mut index = [0usize; MAX_VERTICES];
        for (new, &old) in order.iter().enumerate() {
            index[old] = new;
        }
        let mut adj = vec![0u64; self.n];
        for (new, &old) in order.iter().enumerate() {
            adj[new] = ones(self.adj[old]).fold(0u64, |acc, nb| acc | bit(index[nb]));
        }
        Ok(LabeledGraph { n: self.n, adj, r: set.count_ones() as usize })
    }

    fn check_vertex(&self, v: usize, what: &str) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::param(format!("{what} {v} is not a vertex of a graph on {} vertices", self.n)));
        }
        Ok(())
    }

    /// Canonical JSON: edges sorted, no whitespace.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serialization is infallible")
    }

    /// Parses the `{"n":..,"edges":[[u,v],..],"r":..}` format.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    r: usize,
}

impl From<&LabeledGraph> for GraphJson {
    fn from(g: &LabeledGraph) -> Self {
        GraphJson { n: g.n, edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(), r: g.r }
    }
}

impl TryFrom<GraphJson> for LabeledGraph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        let mut g = LabeledGraph::empty(raw.n).map_err(|e| Error::parse("n", e.to_string()))?;
        for (i, [u, v]) in raw.edges.into_iter().enumerate() {
            g.insert_edge(u, v).map_err(|m| Error::parse(format!("edges[{i}]"), m))?;
        }
        g.set_r(raw.r).map_err(|e| Error::parse("r", e.to_string()))?;
        Ok(g)
    }
}

/// Where the hub (or star center) sits in a family labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HubPlacement {
    /// Vertex 1, restricted whenever `r >= 1`.
    First,
    /// The last vertex, unrestricted unless every vertex is.
    Last,
}

/// Named graph families with fixed labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Empty(usize),
    /// `P_n`, labeled along the path.
    Path(usize),
    /// `C_n`, labeled around the cycle.
    Cycle(usize),
    Complete(usize),
    /// Star on `n` vertices in total (`K_{1,n-1}`).
    Star(usize, HubPlacement),
    /// Centers 1 and 2 joined; the first star has `a` vertices, the second `b`.
    /// Leaves of the first star come next, then leaves of the second.
    DoubleStar(usize, usize),
    /// `K_1 + C_n` on `n + 1` vertices.
    Wheel(usize, HubPlacement),
    /// `K_1 + P_n` on `n + 1` vertices.
    Fan(usize, HubPlacement),
    ComplementPath(usize),
    ComplementCycle(usize),
    /// `C_n` on `1..n` bridged from vertex `n` to a path on `n+1..n+m`.
    Tadpole(usize, usize),
    /// `K_n` on `1..n` bridged from vertex `n` to a path on `n+1..n+m`.
    Lollipop(usize, usize),
    /// Two copies of `K_n` bridged between vertices `n` and `n + 1`.
    Barbell(usize),
    /// Parts `1..n` and `n+1..n+m`.
    CompleteBipartite(usize, usize),
}

/// A family plus its restricted prefix size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub r: usize,
}

impl FamilySpec {
    pub fn new(family: Family, r: usize) -> Self {
        FamilySpec { family, r }
    }
}

impl Family {
    /// Number of vertices of the constructed graph.
    pub fn order(&self) -> usize {
        match *self {
            Family::Empty(n)
            | Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n, _)
            | Family::ComplementPath(n)
            | Family::ComplementCycle(n) => n,
            Family::DoubleStar(a, b) | Family::Tadpole(a, b) | Family::Lollipop(a, b) | Family::CompleteBipartite(a, b) => a + b,
            Family::Wheel(n, _) | Family::Fan(n, _) => n + 1,
            Family::Barbell(n) => 2 * n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Empty(_) => "empty",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_, HubPlacement::First) => "star",
            Family::Star(_, HubPlacement::Last) => "star_center_last",
            Family::DoubleStar(..) => "double_star",
            Family::Wheel(_, HubPlacement::First) => "wheel",
            Family::Wheel(_, HubPlacement::Last) => "wheel_hub_last",
            Family::Fan(_, HubPlacement::First) => "fan",
            Family::Fan(_, HubPlacement::Last) => "fan_hub_last",
            Family::ComplementPath(_) => "complement_path",
            Family::ComplementCycle(_) => "complement_cycle",
            Family::Tadpole(..) => "tadpole",
            Family::Lollipop(..) => "lollipop",
            Family::Barbell(_) => "barbell",
            Family::CompleteBipartite(..) => "complete_bipartite",
        }
    }

    /// Builds the family graph with `r = 0`.
    pub fn build(&self) -> Result<LabeledGraph> {
        let need = |ok: bool, what: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::param(format!("{}: {what}", self)))
            }
        };
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(Error::param(format!("{self}: {n} vertices exceeds the {MAX_VERTICES}-vertex graph limit")));
        }
        let mut g = LabeledGraph::empty(n)?;
        match *self {
            Family::Empty(_) => {}
            Family::Path(n) => {
                for i in 1..n {
                    g.link(i, i + 1);
                }
            }
            Family::Cycle(n) => {
                need(n >= 3, "a cycle needs at least 3 vertices")?;
                for i in 1..n {
                    g.link(i, i + 1);
                }
                g.link(n, 1);
            }
            Family::Complete(n) => {
                for u in 1..=n {
                    for v in u + 1..=n {
                        g.link(u, v);
                    }
                }
            }
            Family::Star(n, hub) => {
                need(n >= 1, "a star needs at least 1 vertex")?;
                let center = if hub == HubPlacement::First { 1 } else { n };
                for v in 1..=n {
                    if v != center {
                        g.link(center, v);
                    }
                }
            }
            Family::DoubleStar(a, b) => {
                need(a >= 1 && b >= 1, "both stars need a center")?;
                g.link(1, 2);
                for i in 0..a - 1 {
                    g.link(1, 3 + i);
                }
                for i in 0..b - 1 {
                    g.link(2, 2 + a + i);
                }
            }
            Family::Wheel(n, hub) => {
                need(n >= 3, "a wheel rim needs at least 3 vertices")?;
                let (h, off) = match hub {
                    HubPlacement::First => (1, 1),
                    HubPlacement::Last => (n + 1, 0),
                };
                for i in 1..=n {
                    let next = if i == n { 1 } else { i + 1 };
                    g.link(off + i, off + next);
                    g.link(h, off + i);
                }
            }
            Family::Fan(n, hub) => {
                need(n >= 1, "a fan needs at least one path vertex")?;
                let (h, off) = match hub {
                    HubPlacement::First => (1, 1),
                    HubPlacement::Last => (n + 1, 0),
                };
                for i in 1..=n {
                    if i < n {
                        g.link(off + i, off + i + 1);
                    }
                    g.link(h, off + i);
                }
            }
            Family::ComplementPath(n) => {
                g = Family::Path(n).build()?.complement();
            }
            Family::ComplementCycle(n) => {
                need(n >= 3, "a cycle needs at least 3 vertices")?;
                g = Family::Cycle(n).build()?.complement();
            }
            Family::Tadpole(n, m) => {
                need(n >= 3 && m >= 1, "tadpole needs n >= 3 and m >= 1")?;
                let head = Family::Cycle(n).build()?;
                g = head.bridge(n, &Family::Path(m).build()?, 1)?;
            }
            Family::Lollipop(n, m) => {
                need(n >= 1 && m >= 1, "lollipop needs n >= 1 and m >= 1")?;
                let head = Family::Complete(n).build()?;
                g = head.bridge(n, &Family::Path(m).build()?, 1)?;
            }
            Family::Barbell(n) => {
                need(n >= 1, "barbell needs n >= 1")?;
                let k = Family::Complete(n).build()?;
                g = k.bridge(n, &k, 1)?;
            }
            Family::CompleteBipartite(a, b) => {
                for u in 1..=a {
                    for v in a + 1..=a + b {
                        g.link(u, v);
                    }
                }
            }
        }
        Ok(g)
    }
}

/// Constructs the family graph with the requested restricted prefix.
pub fn make_family(spec: FamilySpec) -> Result<LabeledGraph> {
    spec.family.build()?.with_r(spec.r)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Empty(n)
            | Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n, _)
            | Family::Wheel(n, _)
            | Family::Fan(n, _)
            | Family::ComplementPath(n)
            | Family::ComplementCycle(n)
            | Family::Barbell(n) => write!(f, "{}:{n}", self.name()),
            Family::DoubleStar(a, b) | Family::Tadpole(a, b) | Family::Lollipop(a, b) | Family::CompleteBipartite(a, b) => {
                write!(f, "{}:{a},{b}", self.name())
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `NAME:SIZE[,SIZE]`, e.g. `path:5`, `tadpole:4,2`, `wheel_hub_last:5`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, sizes) =
            s.split_once(':').ok_or_else(|| Error::param(format!("family `{s}` must look like NAME:SIZE[,SIZE]")))?;
        let sizes: Vec<usize> = sizes
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::param(format!("bad size `{t}` in family `{s}`"))))
            .collect::<Result<_>>()?;
        let one = || -> Result<usize> {
            match sizes.as_slice() {
                [n] => Ok(*n),
                _ => Err(Error::param(format!("family `{name}` takes one size"))),
            }
        };
        let two = || -> Result<(usize, usize)> {
            match sizes.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(Error::param(format!("family `{name}` takes two sizes"))),
            }
        };
        let name = name.trim().replace('-', "_");
        Ok(match name.as_str() {
            "empty" => Family::Empty(one()?),
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "star" => Family::Star(one()?, HubPlacement::First),
            "star_center_last" => Family::Star(one()?, HubPlacement::Last),
            "double_star" => {
                let (a, b) = two()?;
                Family::DoubleStar(a, b)
            }
            "wheel" => Family::Wheel(one()?, HubPlacement::First),
            "wheel_hub_last" => Family::Wheel(one()?, HubPlacement::Last),
            "fan" => Family::Fan(one()?, HubPlacement::First),
            "fan_hub_last" => Family::Fan(one()?, HubPlacement::Last),
            "complement_path" => Family::ComplementPath(one()?),
            "complement_cycle" => Family::ComplementCycle(one()?),
            "tadpole" => {
                let (a, b) = two()?;
                Family::Tadpole(a, b)
            }
            "lollipop" => {
                let (a, b) = two()?;
                Family::Lollipop(a, b)
            }
            "barbell" => Family::Barbell(one()?),
            "complete_bipartite" => {
                let (a, b) = two()?;
                Family::CompleteBipartite(a, b)
            }
            other => return Err(Error::param(format!("unknown family `{other}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> LabeledGraph {
        s.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn family_examples() {
        let p4 = fam("path:4");
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.edges(), vec![(1, 2), (2, 3), (3, 4)]);

        let w4 = fam("wheel:4");
        assert_eq!(w4.n(), 5);
        assert_eq!(w4.edge_count(), 8);
        assert_eq!(w4.neighbors(1), vec![2, 3, 4, 5]);

        let s = fam("star:4");
        assert_eq!(s.edges(), vec![(1, 2), (1, 3), (1, 4)]);

        let ds = fam("double_star:3,2");
        assert_eq!(ds.edges(), vec![(1, 2), (1, 3), (1, 4), (2, 5)]);

        let fan = fam("fan_hub_last:3");
        assert_eq!(fan.edges(), vec![(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn invalid_sizes_are_parameter_errors() {
        for bad in ["cycle:2", "wheel:2", "tadpole:2,1", "path", "path:x", "nope:3", "tadpole:3"] {
            let r = bad.parse::<Family>().and_then(|f| f.build());
            assert!(matches!(r, Err(Error::Parameter(_))), "{bad}: {r:?}");
        }
        assert!(make_family(FamilySpec::new(Family::Path(3), 4)).is_err());
    }

    #[test]
    fn edge_counts() {
        for n in 0..10usize {
            assert_eq!(fam(&format!("path:{n}")).edge_count(), n.saturating_sub(1));
            assert_eq!(fam(&format!("complete:{n}")).edge_count(), n * n.saturating_sub(1) / 2);
            if n >= 3 {
                assert_eq!(fam(&format!("cycle:{n}")).edge_count(), n);
            }
        }
    }

    #[test]
    fn composites() {
        let k2 = fam("complete:2");
        let k1 = fam("complete:1");
        let p3 = k2.bridge(1, &k1, 1).unwrap();
        assert_eq!((p3.n(), p3.edge_count()), (3, 2));
        assert_eq!(p3.degree(1), 2);

        let p2 = fam("path:2");
        let joined = p2.coalesce(2, &p2, 1).unwrap();
        assert_eq!(joined, fam("path:3"));

        let c3 = fam("cycle:3");
        let b = c3.broom(1, 3).unwrap();
        assert_eq!((b.n(), b.edge_count()), (6, 6));
        assert_eq!(b.neighbors(1), vec![2, 3, 4, 5, 6]);

        assert!(c3.pendant(4).is_err());
        assert!(c3.coalesce(1, &p2, 3).is_err());
    }

    #[test]
    fn deletion() {
        assert_eq!(fam("cycle:3").delete_vertices(&[3]).unwrap(), fam("path:2"));
        assert_eq!(fam("complete:4").delete_vertices(&[2]).unwrap(), fam("complete:3"));
        let g = fam("path:4").delete_vertices(&[2]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(2, 3)]);
        assert!(fam("path:4").delete_vertices(&[5]).is_err());

        let g = fam("path:6").with_r(3).unwrap().delete_vertices(&[2, 5]).unwrap();
        assert_eq!(g.r(), 2);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(fam("path:3").complement().edges(), vec![(1, 3)]);
        assert_eq!(fam("complete:4").complement().edge_count(), 0);
        let c5c = fam("cycle:5").complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!((1..=5).all(|v| c5c.degree(v) == 2));
        assert!(c5c.is_connected_subset(c5c.all_mask()));
    }

    #[test]
    fn restrict_to_relabels_prefix() {
        let s = fam("star_center_last:4");
        let g = s.restrict_to(&[4, 2]).unwrap();
        assert_eq!(g.r(), 2);
        // old 2 -> 1, old 4 (center) -> 2, old 1 -> 3, old 3 -> 4
        assert_eq!(g.neighbors(2), vec![1, 3, 4]);
    }

    #[test]
    fn json_examples() {
        let g = LabeledGraph::from_json(r#"{"n":3,"edges":[[1,2],[2,3],[1,3]],"r":1}"#).unwrap();
        assert_eq!(g, fam("cycle:3").with_r(1).unwrap());
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[1,2],[1,3],[2,3]],"r":1}"#);

        let e = LabeledGraph::from_json(r#"{"n":0,"edges":[],"r":0}"#).unwrap();
        assert_eq!(e.n(), 0);

        let dup = LabeledGraph::from_json(r#"{"n":2,"edges":[[1,2],[2,1]]}"#);
        match dup {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "edges[1]"),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(LabeledGraph::from_json(r#"{"n":2,"edges":[[1,3]]}"#), Err(Error::Parse { .. })));
        assert!(matches!(LabeledGraph::from_json("{\"n\":2,"), Err(Error::Parse { .. })));
    }
}
