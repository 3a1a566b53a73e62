//! Seeded random instance generators: bounded-degree trees, sparse graphs
//! grown by per-vertex fan-out, and dense graphs obtained by deleting a few
//! edges from the complete graph.
//!
//! The stream is splitmix64 with rejection sampling, so a `(class, n, delta,
//! seed)` tuple reproduces the same graph bit for bit on any platform.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

const MAX_RETRIES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("no connected graph produced after {0} attempts")]
    GenerationFailed(usize),
}

/// splitmix64 (Vigna): one 64-bit output per step, full-period over the
/// additive state walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prng {
    state: u64,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Unbiased draw in `0..m` by rejecting the tail of the 64-bit range.
    pub fn uniform_below(&mut self, m: u64) -> u64 {
        assert!(m > 0, "uniform_below needs m >= 1");
        let rem = ((u64::MAX % m) + 1) % m; // 2^64 mod m
        let cutoff = u64::MAX - rem;
        loop {
            let z = self.next_u64();
            if z <= cutoff {
                return z % m;
            }
        }
    }

    /// Uniform draw in the inclusive range `lo..=hi`.
    pub fn uniform_range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.uniform_below(hi - lo + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenClass {
    Tree,
    Sparse,
    Dense,
}

impl GenClass {
    pub fn letter(&self) -> char {
        match self {
            GenClass::Tree => 'T',
            GenClass::Sparse => 'S',
            GenClass::Dense => 'D',
        }
    }
}

/// Parameters of one generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub class: GenClass,
    pub n: usize,
    pub delta: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn tree(n: usize, delta: usize, seed: u64) -> Self {
        GenSpec {
            class: GenClass::Tree,
            n,
            delta,
            seed,
        }
    }

    pub fn sparse(n: usize, delta: usize, seed: u64) -> Self {
        GenSpec {
            class: GenClass::Sparse,
            n,
            delta,
            seed,
        }
    }

    pub fn dense(n: usize, delta: usize, seed: u64) -> Self {
        GenSpec {
            class: GenClass::Dense,
            n,
            delta,
            seed,
        }
    }

    fn validate(&self) -> Result<(), GenError> {
        match self.class {
            GenClass::Tree => {
                if self.n < 2 {
                    return Err(GenError::InvalidSpec(format!(
                        "tree needs n >= 2, got {}",
                        self.n
                    )));
                }
                if self.delta < 2 {
                    return Err(GenError::InvalidSpec(format!(
                        "tree needs delta >= 2, got {}",
                        self.delta
                    )));
                }
            }
            GenClass::Sparse => {
                if self.n < 2 {
                    return Err(GenError::InvalidSpec(format!(
                        "sparse graph needs n >= 2, got {}",
                        self.n
                    )));
                }
                if self.delta < 2 {
                    return Err(GenError::InvalidSpec(format!(
                        "sparse graph needs delta >= 2, got {}",
                        self.delta
                    )));
                }
            }
            GenClass::Dense => {
                if self.n < 2 {
                    return Err(GenError::InvalidSpec(format!(
                        "dense graph needs n >= 2, got {}",
                        self.n
                    )));
                }
                // a connected remainder needs at least n - 1 edges
                let total = self.n * (self.n - 1) / 2;
                if self.delta > 0 && self.delta >= total - (self.n - 1) {
                    return Err(GenError::InvalidSpec(format!(
                        "removing {} edges from K_{} cannot stay connected",
                        self.delta, self.n
                    )));
                }
            }
        }
        Ok(())
    }

    /// Header comment written at the top of generated edge-list files.
    pub fn header(&self) -> String {
        format!(
            "# gen class={} n={} delta={} seed={}",
            self.class.letter(),
            self.n,
            self.delta,
            self.seed
        )
    }
}

/// Dispatches on the spec class.
pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    match spec.class {
        GenClass::Tree => gen_tree(spec),
        GenClass::Sparse => gen_sparse(spec),
        GenClass::Dense => gen_dense(spec),
    }
}

/// Random tree rooted at vertex 1 with maximum degree `delta`.
///
/// Vertices are explored first-in first-out; the root draws its child count
/// uniformly in `1..=delta`, every later vertex in `1..=delta-1` (its parent
/// edge already uses one slot), capped by the vertices still unassigned.
/// Children take the next unassigned indices in order.
pub fn gen_tree(spec: &GenSpec) -> Result<Graph, GenError> {
    if spec.class != GenClass::Tree {
        return Err(GenError::InvalidSpec("gen_tree needs a tree spec".into()));
    }
    spec.validate()?;
    let n = spec.n;
    let mut rng = Prng::new(spec.seed);
    let mut edges = Vec::with_capacity(n - 1);
    let mut queue = std::collections::VecDeque::from([1usize]);
    let mut next_unassigned = 2usize;
    while let Some(u) = queue.pop_front() {
        if next_unassigned > n {
            break;
        }
        let fan_cap = if u == 1 { spec.delta } else { spec.delta - 1 };
        let drawn = rng.uniform_range(1, fan_cap as u64) as usize;
        let children = drawn.min(n - next_unassigned + 1);
        for _ in 0..children {
            edges.push((u, next_unassigned));
            queue.push_back(next_unassigned);
            next_unassigned += 1;
        }
    }
    debug_assert_eq!(edges.len(), n - 1);
    Ok(Graph::from_edge_list(n, &edges).expect("valid tree edges"))
}

/// Random sparse graph: every explored vertex draws up to `delta` end-points
/// over the other vertices; duplicates collapse and directions drop. A
/// disconnected draw is retried on the continuing stream.
pub fn gen_sparse(spec: &GenSpec) -> Result<Graph, GenError> {
    if spec.class != GenClass::Sparse {
        return Err(GenError::InvalidSpec(
            "gen_sparse needs a sparse spec".into(),
        ));
    }
    spec.validate()?;
    let n = spec.n;
    let mut rng = Prng::new(spec.seed);
    for _ in 0..MAX_RETRIES {
        let mut edges = Vec::new();
        let mut discovered = vec![false; n + 1];
        let mut queue = std::collections::VecDeque::new();
        discovered[1] = true;
        queue.push_back(1usize);
        let mut explored = 0usize;
        while explored < n {
            let u = match queue.pop_front() {
                Some(u) => u,
                None => {
                    // restart from the smallest vertex not reached yet
                    let u = (1..=n)
                        .find(|&v| !discovered[v])
                        .expect("unexplored remains");
                    discovered[u] = true;
                    u
                }
            };
            explored += 1;
            let fan = rng.uniform_range(1, spec.delta as u64) as usize;
            for _ in 0..fan {
                // uniform endpoint over the n-1 vertices other than u
                let t = rng.uniform_below((n - 1) as u64) as usize + 1;
                let end = if t >= u { t + 1 } else { t };
                edges.push((u, end));
                if !discovered[end] {
                    discovered[end] = true;
                    queue.push_back(end);
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("endpoints in range, no loops");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenError::GenerationFailed(MAX_RETRIES))
}

/// Random dense graph: the complete graph minus `delta` distinct edges,
/// sampled by a partial Fisher-Yates over the edge indices of K_n.
pub fn gen_dense(spec: &GenSpec) -> Result<Graph, GenError> {
    if spec.class != GenClass::Dense {
        return Err(GenError::InvalidSpec("gen_dense needs a dense spec".into()));
    }
    spec.validate()?;
    let n = spec.n;
    let total = n * (n - 1) / 2;
    // edge index e maps to the e-th pair (u, v), u < v, in row-major order
    let decode = |e: usize| -> (usize, usize) {
        let mut rest = e;
        for u in 1..n {
            let row = n - u;
            if rest < row {
                return (u, u + 1 + rest);
            }
            rest -= row;
        }
        unreachable!("edge index in range");
    };
    let mut rng = Prng::new(spec.seed);
    for _ in 0..MAX_RETRIES {
        let mut indices: Vec<usize> = (0..total).collect();
        for i in 0..spec.delta {
            let j = i + rng.uniform_below((total - i) as u64) as usize;
            indices.swap(i, j);
        }
        let removed: std::collections::HashSet<usize> =
            indices[..spec.delta].iter().copied().collect();
        let mut edges = Vec::with_capacity(total - spec.delta);
        for e in 0..total {
            if !removed.contains(&e) {
                edges.push(decode(e));
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("valid complete-graph edges");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenError::GenerationFailed(MAX_RETRIES))
}

/// Edge-list file contents for a generated instance: the spec header comment
/// followed by the canonical edge list.
pub fn render_instance(spec: &GenSpec) -> Result<String, GenError> {
    let g = generate(spec)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", spec.header());
    out.push_str(&g.to_edge_list());
    Ok(out)
}
