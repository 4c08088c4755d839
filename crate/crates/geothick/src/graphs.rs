//! Small-graph algorithms shared across the toolkit: DSATUR and exact
//! backtracking coloring, clique bounds, planarity (Demoucron-Malgrange-
//! Pertuiset), and vertex connectivity.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Undirected simple graph on vertices 0..n.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    pub n: usize,
    pub adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, adj: vec![BTreeSet::new(); n] }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced by deleting `removed` vertices (keeps ids, drops edges).
    fn connected_avoiding(&self, removed: &[usize]) -> bool {
        let gone: BTreeSet<usize> = removed.iter().copied().collect();
        let alive: Vec<usize> = (0..self.n).filter(|v| !gone.contains(v)).collect();
        if alive.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([alive[0]]);
        seen[alive[0]] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] && !gone.contains(&v) {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == alive.len()
    }

    /// Exact vertex connectivity >= k test for small graphs by deleting all
    /// (k-1)-subsets. Used with k = 3 on contracted frames.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n <= k {
            // Complete graph on n vertices is (n-1)-connected.
            return self.edge_count() == self.n * (self.n - 1) / 2 && self.n > k;
        }
        if !self.is_connected() {
            return false;
        }
        match k {
            0 | 1 => true,
            2 => (0..self.n).all(|v| self.connected_avoiding(&[v])),
            3 => (0..self.n).all(|v| {
                ((v + 1)..self.n).all(|w| self.connected_avoiding(&[v, w]))
            }),
            _ => unimplemented!("connectivity test only implemented up to 3"),
        }
    }

    /// All triangles (u < v < w).
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                for &w in &self.adj[v] {
                    if w > v && self.has_edge(u, w) {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out
    }
}

/// Greedy DSATUR coloring; returns colors 1..=k used.
pub fn dsatur(g: &SimpleGraph) -> Vec<u32> {
    let n = g.n;
    let mut colors = vec![0u32; n];
    let mut saturation: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        // Pick the uncolored vertex with max saturation, then max degree, then
        // lowest id (deterministic).
        let pick = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (saturation[v].len(), g.adj[v].len(), std::cmp::Reverse(v)));
        let Some(v) = pick else { break };
        let mut c = 1u32;
        while saturation[v].contains(&c) {
            c += 1;
        }
        colors[v] = c;
        for &w in &g.adj[v] {
            saturation[w].insert(c);
        }
    }
    colors
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactColoring {
    /// Proper coloring found with colors 1..=max_colors.
    Colored(Vec<u32>),
    /// Complete search proved chromatic number exceeds max_colors.
    Exceeds,
    /// Node budget exhausted before the search completed.
    BudgetExhausted,
}

/// Exact k-colorability by DSATUR-ordered backtracking; complete unless the
/// node budget runs out.
pub fn exact_color(g: &SimpleGraph, max_colors: u32, node_budget: u64) -> ExactColoring {
    let n = g.n;
    if n == 0 {
        return ExactColoring::Colored(Vec::new());
    }
    // Static order: descending degree (good enough for our sizes).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.adj[v].len()));

    let mut colors = vec![0u32; n];
    let mut nodes = 0u64;

    fn rec(
        g: &SimpleGraph,
        order: &[usize],
        idx: usize,
        max_colors: u32,
        colors: &mut Vec<u32>,
        used_so_far: u32,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        if idx == order.len() {
            return Some(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let v = order[idx];
        let forbidden: BTreeSet<u32> =
            g.adj[v].iter().map(|&w| colors[w]).filter(|&c| c != 0).collect();
        // Symmetry breaking: allow at most one brand-new color.
        let limit = (used_so_far + 1).min(max_colors);
        for c in 1..=limit {
            if forbidden.contains(&c) {
                continue;
            }
            colors[v] = c;
            match rec(g, order, idx + 1, max_colors, colors, used_so_far.max(c), nodes, budget) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            colors[v] = 0;
        }
        Some(false)
    }

    match rec(g, &order, 0, max_colors, &mut colors, 0, &mut nodes, node_budget) {
        Some(true) => ExactColoring::Colored(colors),
        Some(false) => ExactColoring::Exceeds,
        None => ExactColoring::BudgetExhausted,
    }
}

/// Greedy maximal clique (lower bound for chromatic number).
pub fn greedy_clique(g: &SimpleGraph) -> Vec<usize> {
    let mut best = Vec::new();
    for seed in 0..g.n {
        let mut clique = vec![seed];
        let mut candidates: Vec<usize> = g.adj[seed].iter().copied().collect();
        candidates.sort_by_key(|&v| std::cmp::Reverse(g.adj[v].len()));
        for v in candidates {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Checks a vertex coloring for properness; returns offending edges.
pub fn coloring_conflicts(g: &SimpleGraph, colors: &[u32]) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| colors[u] != 0 && colors[u] == colors[v])
        .collect()
}

/// Planarity by the Demoucron-Malgrange-Pertuiset incremental face embedding,
/// run per biconnected component. Quadratic, fine for the sizes here.
pub fn is_planar(g: &SimpleGraph) -> bool {
    if g.n < 5 {
        return true;
    }
    if g.edge_count() > 3 * g.n - 6 {
        return false;
    }
    for comp in biconnected_components(g) {
        if !dmp_biconnected_planar(g, &comp) {
            return false;
        }
    }
    true
}

/// Edge sets of biconnected components (Hopcroft-Tarjan, iterative).
fn biconnected_components(g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n;
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut timer = 1usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut comps = Vec::new();

    #[derive(Clone)]
    struct Frame {
        v: usize,
        parent: Option<usize>,
        neighbors: Vec<usize>,
        idx: usize,
    }

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        let mut call_stack = vec![Frame {
            v: root,
            parent: None,
            neighbors: g.adj[root].iter().copied().collect(),
            idx: 0,
        }];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;

        while let Some(frame) = call_stack.last_mut() {
            if frame.idx < frame.neighbors.len() {
                let w = frame.neighbors[frame.idx];
                frame.idx += 1;
                let v = frame.v;
                if disc[w] == 0 {
                    stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    call_stack.push(Frame {
                        v: w,
                        parent: Some(v),
                        neighbors: g.adj[w].iter().copied().collect(),
                        idx: 0,
                    });
                } else if Some(w) != frame.parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let done = call_stack.pop().unwrap();
                if let Some(p) = done.parent {
                    low[p] = low[p].min(low[done.v]);
                    if low[done.v] >= disc[p] {
                        // p is an articulation point for this subtree.
                        let mut comp = Vec::new();
                        while let Some(&(a, b)) = stack.last() {
                            if disc[a] >= disc[done.v] || (a == p && b == done.v) {
                                comp.push(stack.pop().unwrap());
                                if (a, b) == (p, done.v) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if !comp.is_empty() {
                            comps.push(comp);
                        }
                    }
                }
            }
        }
        // Leftover edges form one component.
        if !stack.is_empty() {
            comps.push(stack.drain(..).collect());
        }
    }
    comps
}

/// DMP on one biconnected edge set.
fn dmp_biconnected_planar(g: &SimpleGraph, comp_edges: &[(usize, usize)]) -> bool {
    // Relabel vertices.
    let mut ids: Vec<usize> = comp_edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    ids.sort_unstable();
    let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let edges: BTreeSet<(usize, usize)> = comp_edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (index[&a], index[&b]);
            (x.min(y), x.max(y))
        })
        .collect();
    let m = edges.len();
    if n < 5 || m < 9 {
        return true; // K5 needs 10 edges, K3,3 needs 9.
    }
    if m > 3 * n - 6 {
        return false;
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in &edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    // Start from any cycle.
    let Some(cycle) = find_cycle(n, &adj) else {
        return true; // A forest is planar; biconnected comps of size >= 3 have cycles.
    };

    // Faces are vertex sequences; embedded subgraph tracked as an edge set.
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().cloned().collect()];
    let mut embedded_vertices: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut embedded_edges: BTreeSet<(usize, usize)> = cycle_edges(&cycle);

    loop {
        if embedded_edges.len() == m {
            return true;
        }
        // Fragments: connected components of the non-embedded part, relative to
        // embedded vertices (attachment points).
        let fragments = compute_fragments(n, &adj, &embedded_vertices, &embedded_edges);
        if fragments.is_empty() {
            return true;
        }

        // For each fragment, the set of admissible faces (containing all its
        // attachment vertices).
        let mut chosen: Option<(usize, usize)> = None; // (fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fv: BTreeSet<usize> = f.iter().copied().collect();
                    frag.attachments.iter().all(|a| fv.contains(a))
                })
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            if admissible.len() == 1 {
                chosen = Some((fi, admissible[0]));
                break;
            }
            if chosen.is_none() {
                chosen = Some((fi, admissible[0]));
            }
        }
        let (fi, face_idx) = chosen.expect("nonempty fragments");
        let frag = &fragments[fi];

        // Find an alpha-path in the fragment between two attachments.
        let path = fragment_path(&frag.edges, &frag.attachments);
        let face = faces[face_idx].clone();

        // Split the face along the path.
        let (p_start, p_end) = (path[0], *path.last().unwrap());
        let pos_s = face.iter().position(|&v| v == p_start).unwrap();
        let pos_e = face.iter().position(|&v| v == p_end).unwrap();

        let mut face1 = Vec::new(); // face[pos_s..=pos_e] + reverse interior path
        let mut face2 = Vec::new(); // face[pos_e..=pos_s] + path interior forward
        {
            let len = face.len();
            let mut i = pos_s;
            loop {
                face1.push(face[i]);
                if i == pos_e {
                    break;
                }
                i = (i + 1) % len;
            }
            for &v in path.iter().rev().skip(1).take(path.len().saturating_sub(2)) {
                face1.push(v);
            }
            let mut i = pos_e;
            loop {
                face2.push(face[i]);
                if i == pos_s {
                    break;
                }
                i = (i + 1) % len;
            }
            for &v in path.iter().skip(1).take(path.len().saturating_sub(2)) {
                face2.push(v);
            }
        }
        faces.swap_remove(face_idx);
        faces.push(face1);
        faces.push(face2);

        for w in path.windows(2) {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            embedded_edges.insert((a, b));
        }
        for &v in &path {
            embedded_vertices.insert(v);
        }
    }
}

struct Fragment {
    edges: Vec<(usize, usize)>,
    attachments: BTreeSet<usize>,
}

fn compute_fragments(
    n: usize,
    adj: &[BTreeSet<usize>],
    embedded_vertices: &BTreeSet<usize>,
    embedded_edges: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut frags: Vec<Fragment> = Vec::new();
    let mut edge_seen: BTreeSet<(usize, usize)> = embedded_edges.clone();

    // Chords between embedded vertices are single-edge fragments.
    // Components hanging off embedded vertices are grown by BFS through
    // non-embedded vertices.
    let mut vertex_comp = vec![usize::MAX; n];
    let mut next_comp = 0usize;
    for start in 0..n {
        if embedded_vertices.contains(&start) || vertex_comp[start] != usize::MAX {
            continue;
        }
        // has any adjacency at all?
        if adj[start].is_empty() {
            continue;
        }
        let comp = next_comp;
        next_comp += 1;
        let mut queue = VecDeque::from([start]);
        vertex_comp[start] = comp;
        let mut edges = Vec::new();
        let mut attachments = BTreeSet::new();
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let key = (u.min(v), u.max(v));
                if !edge_seen.contains(&key) {
                    edge_seen.insert(key);
                    edges.push(key);
                }
                if embedded_vertices.contains(&v) {
                    attachments.insert(v);
                } else if vertex_comp[v] == usize::MAX {
                    vertex_comp[v] = comp;
                    queue.push_back(v);
                }
            }
        }
        frags.push(Fragment { edges, attachments });
    }
    // Pure chords.
    let embedded: Vec<usize> = embedded_vertices.iter().copied().collect();
    for (i, &u) in embedded.iter().enumerate() {
        for &v in embedded.iter().skip(i + 1) {
            if adj[u].contains(&v) {
                let key = (u.min(v), u.max(v));
                if !edge_seen.contains(&key) {
                    edge_seen.insert(key);
                    frags.push(Fragment {
                        edges: vec![key],
                        attachments: [u, v].into_iter().collect(),
                    });
                }
            }
        }
    }
    frags
}

/// A path inside the fragment between two distinct attachment vertices.
fn fragment_path(edges: &[(usize, usize)], attachments: &BTreeSet<usize>) -> Vec<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut atts = attachments.iter();
    let start = *atts.next().expect("biconnected fragments have >= 2 attachments");
    // BFS from start through fragment edges, avoiding other attachments as
    // interior vertices, until another attachment is reached.
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    let mut seen: BTreeSet<usize> = [start].into_iter().collect();
    while let Some(u) = queue.pop_front() {
        if u != start && attachments.contains(&u) {
            let mut path = vec![u];
            let mut cur = u;
            while cur != start {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        if u != start && attachments.contains(&u) {
            continue;
        }
        for &v in adj.get(&u).into_iter().flatten() {
            if seen.insert(v) {
                prev.insert(v, u);
                queue.push_back(v);
            }
        }
    }
    panic!("fragment with fewer than two reachable attachments");
}

fn find_cycle(n: usize, adj: &[BTreeSet<usize>]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 || adj[root].is_empty() {
            continue;
        }
        let mut stack = vec![(root, usize::MAX)];
        while let Some((u, p)) = stack.pop() {
            if state[u] != 0 {
                continue;
            }
            state[u] = 1;
            parent[u] = p;
            for &v in &adj[u] {
                if v == p {
                    continue;
                }
                if state[v] == 1 {
                    // Found a cycle: walk u back to v.
                    let mut path = vec![u];
                    let mut cur = u;
                    while cur != v {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    return Some(path);
                }
                if state[v] == 0 {
                    stack.push((v, u));
                }
            }
        }
    }
    None
}

fn cycle_edges(cycle: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 0..cycle.len() {
        let u = cycle[i];
        let v = cycle[(i + 1) % cycle.len()];
        out.insert((u.min(v), u.max(v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn cycle(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    fn k33() -> SimpleGraph {
        let mut g = SimpleGraph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn planarity_basics() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&k33()));
        assert!(is_planar(&cycle(10)));
    }

    #[test]
    fn planarity_k5_minus_edge() {
        let mut g = complete(5);
        g.adj[0].remove(&1);
        g.adj[1].remove(&0);
        assert!(is_planar(&g));
    }

    #[test]
    fn planarity_k33_minus_edge() {
        let mut g = k33();
        g.adj[0].remove(&3);
        g.adj[3].remove(&0);
        assert!(is_planar(&g));
    }

    #[test]
    fn planarity_disjoint_k4s_with_bridge() {
        let mut g = SimpleGraph::new(8);
        for base in [0, 4] {
            for u in 0..4 {
                for v in (u + 1)..4 {
                    g.add_edge(base + u, base + v);
                }
            }
        }
        g.add_edge(3, 4);
        assert!(is_planar(&g));
    }

    #[test]
    fn planarity_k5_with_pendant() {
        let mut g = SimpleGraph::new(6);
        for u in 0..5 {
            for v in (u + 1)..5 {
                g.add_edge(u, v);
            }
        }
        g.add_edge(4, 5);
        assert!(!is_planar(&g));
    }

    #[test]
    fn planarity_octahedron() {
        // K2,2,2: planar, 4-regular.
        let mut g = SimpleGraph::new(6);
        for u in 0..6 {
            for v in (u + 1)..6 {
                if v != u + 3 && u + 3 != v && !(u % 3 == v % 3) {
                    g.add_edge(u, v);
                }
            }
        }
        assert!(is_planar(&g));
    }

    #[test]
    fn planarity_larger_triangulation() {
        // Wheel on 20 vertices: planar maximal-ish.
        let n = 21;
        let mut g = SimpleGraph::new(n);
        for i in 1..n {
            g.add_edge(0, i);
            g.add_edge(i, if i + 1 < n { i + 1 } else { 1 });
        }
        assert!(is_planar(&g));
    }

    #[test]
    fn connectivity() {
        assert!(complete(4).is_k_connected(3));
        assert!(!cycle(5).is_k_connected(3));
        assert!(cycle(5).is_k_connected(2));
        // Octahedron is 4-connected, so in particular 3-connected.
        let mut g = SimpleGraph::new(6);
        let edges = [
            (0, 1), (0, 2), (0, 4), (0, 5),
            (3, 1), (3, 2), (3, 4), (3, 5),
            (1, 2), (2, 4), (4, 5), (5, 1),
        ];
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        assert!(g.is_k_connected(3));
    }

    #[test]
    fn planarity_apollonian_oracle() {
        // Apollonian networks are maximal planar by construction; adding any
        // extra edge makes them non-planar (|E| > 3n - 6).
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..20 {
            let extra = 3 + (trial % 12);
            let mut g = SimpleGraph::new(3 + extra);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(0, 2);
            let mut faces = vec![[0usize, 1, 2]];
            for v in 3..(3 + extra) {
                let f = faces[rng.gen_range(0..faces.len())];
                g.add_edge(v, f[0]);
                g.add_edge(v, f[1]);
                g.add_edge(v, f[2]);
                faces.push([f[0], f[1], v]);
                faces.push([f[1], f[2], v]);
                faces.push([f[0], f[2], v]);
            }
            assert_eq!(g.edge_count(), 3 * g.n - 6);
            assert!(is_planar(&g), "apollonian network must be planar (trial {trial})");
            assert!(g.is_k_connected(3));
            // A maximal planar graph plus any missing edge is non-planar.
            let mut extra_edges = Vec::new();
            for u in 0..g.n {
                for v in (u + 1)..g.n {
                    if !g.has_edge(u, v) {
                        extra_edges.push((u, v));
                    }
                }
            }
            if let Some(&(u, v)) = extra_edges.first() {
                let mut h = g.clone();
                h.add_edge(u, v);
                assert!(!is_planar(&h), "maximal planar + edge must be non-planar");
            }
        }
    }

    #[test]
    fn coloring_cycle5() {
        let g = cycle(5);
        assert_eq!(exact_color(&g, 2, 1_000_000), ExactColoring::Exceeds);
        match exact_color(&g, 3, 1_000_000) {
            ExactColoring::Colored(c) => assert!(coloring_conflicts(&g, &c).is_empty()),
            other => panic!("expected coloring, got {other:?}"),
        }
    }

    #[test]
    fn dsatur_proper() {
        let g = complete(6);
        let c = dsatur(&g);
        assert!(coloring_conflicts(&g, &c).is_empty());
        assert_eq!(c.iter().copied().max().unwrap(), 6);
    }

    #[test]
    fn clique_bound() {
        let g = complete(5);
        assert_eq!(greedy_clique(&g).len(), 5);
    }
}
#[test]
fn dbg_apollonian() {
    use crate::graphs::*;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let extra = 3;
    let mut g = SimpleGraph::new(3 + extra);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    let mut faces = vec![[0usize, 1, 2]];
    for v in 3..(3 + extra) {
        let f = faces[rng.gen_range(0..faces.len())];
        g.add_edge(v, f[0]);
        g.add_edge(v, f[1]);
        g.add_edge(v, f[2]);
        faces.push([f[0], f[1], v]);
        faces.push([f[1], f[2], v]);
        faces.push([f[0], f[2], v]);
    }
    eprintln!("edges: {:?}", g.edges());
    eprintln!("planar says: {}", is_planar(&g));
}
