//! Exhaustive search for minimum k-antiresolving sets, k-sweeps and the
//! metric antidimensionality.
//!
//! Candidate sets are enumerated in increasing cardinality and, within one
//! cardinality, in lexicographic order over sorted vertex indices, so the
//! reported witness is the first qualifying set in that order no matter how
//! many worker threads run. Infeasibility is certified: once every
//! cardinality up to `n - k` is exhausted, no k-antiresolving set can exist,
//! because a set whose classes all have at least k members leaves at least
//! k vertices outside it.
//!
//! Two subtree prunes keep the exhaustion tractable without giving up the
//! certificate. Both rest on the same fact: growing a set only refines its
//! equivalence classes, and the depth-first order only ever adds vertices
//! larger than the current maximum.
//!
//! * stuck class: a class smaller than k containing a vertex below the
//!   current maximum can never be emptied into the set nor grow, so every
//!   extension keeps a class smaller than k;
//! * absorption budget: every member of every class smaller than k must end
//!   up inside the set, so if those members outnumber the remaining slots of
//!   the target cardinality the subtree is dead.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::antiresolution::Semantics;
use crate::graph::{DistanceMatrix, Graph, GraphError};

/// Cardinality explored per solve when the caller gives no bound.
pub const DEFAULT_BOUND: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    /// Smallest qualifying set found; all smaller cardinalities exhausted.
    Optimal {
        cardinality: usize,
        witness: Vec<usize>,
    },
    /// All cardinalities up to `n - k` exhausted with no qualifying set.
    InfeasibleProven,
    /// Exhausted only up to `explored_bound`; a larger set may still exist.
    UnknownUpToBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Largest cardinality exhausted (equals the optimum when one is found).
    pub explored_bound: usize,
}

impl SolveOutcome {
    pub fn cardinality(&self) -> Option<usize> {
        match &self.status {
            SolveStatus::Optimal { cardinality, .. } => Some(*cardinality),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match &self.status {
            SolveStatus::Optimal { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KappaOutcome {
    Exact(usize),
    UnknownUpToBound {
        best_found: usize,
        explored_bound: usize,
    },
}

/// Worker count from `ANTIDIM_THREADS`, else the machine parallelism.
pub fn default_threads() -> usize {
    std::env::var("ANTIDIM_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        })
}

// ---------------------------------------------------------------------------
// Incremental partition refinement along a depth-first prefix
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct ClassMeta {
    start: u32,
    len: u32,
    min: u32,
}

struct Level {
    members: Vec<u32>,
    classes: Vec<ClassMeta>,
}

/// Equivalence classes of the vertices outside the current prefix, one level
/// per prefix length. Level 0 holds all vertices in a single class.
struct Refinement {
    n: usize,
    levels: Vec<Level>,
    prefix: Vec<usize>,
}

impl Refinement {
    fn new(n: usize, max_depth: usize) -> Self {
        let mut levels = Vec::with_capacity(max_depth + 1);
        for _ in 0..=max_depth {
            levels.push(Level {
                members: Vec::with_capacity(n),
                classes: Vec::with_capacity(n),
            });
        }
        levels[0].members.extend(1..=n as u32);
        levels[0].classes.push(ClassMeta {
            start: 0,
            len: n as u32,
            min: 1,
        });
        Refinement {
            n,
            levels,
            prefix: Vec::with_capacity(max_depth),
        }
    }

    fn reset(&mut self) {
        self.prefix.clear();
    }

    /// Adds `v` to the prefix: drops it from its class and splits every class
    /// by the distance to `v`.
    fn push(&mut self, dm: &DistanceMatrix, v: usize) {
        let depth = self.prefix.len();
        let row = dm.row(v);
        let (src_half, dst_half) = self.levels.split_at_mut(depth + 1);
        let src = &src_half[depth];
        let dst = &mut dst_half[0];
        dst.members.clear();
        dst.classes.clear();
        for class in &src.classes {
            let seg = &src.members[class.start as usize..(class.start + class.len) as usize];
            let out_start = dst.members.len();
            for &m in seg {
                if m as usize != v {
                    dst.members.push(m);
                }
            }
            let out = &mut dst.members[out_start..];
            if out.is_empty() {
                continue;
            }
            out.sort_unstable_by_key(|&m| row[m as usize - 1]);
            // walk equal-distance runs, tracking the smallest member of each
            let mut run_start = 0;
            let mut run_min = out[0];
            let mut run_key = row[out[0] as usize - 1];
            for idx in 1..out.len() {
                let key = row[out[idx] as usize - 1];
                if key != run_key {
                    dst.classes.push(ClassMeta {
                        start: (out_start + run_start) as u32,
                        len: (idx - run_start) as u32,
                        min: run_min,
                    });
                    run_start = idx;
                    run_min = out[idx];
                    run_key = key;
                } else {
                    run_min = run_min.min(out[idx]);
                }
            }
            dst.classes.push(ClassMeta {
                start: (out_start + run_start) as u32,
                len: (out.len() - run_start) as u32,
                min: run_min,
            });
        }
        self.prefix.push(v);
    }

    fn pop(&mut self) {
        self.prefix.pop();
    }

    fn min_class_size(&self) -> usize {
        self.levels[self.prefix.len()]
            .classes
            .iter()
            .map(|c| c.len as usize)
            .min()
            .unwrap_or(0)
    }

    /// True when no extension of the current prefix (by vertices larger than
    /// its maximum) can have all classes of size >= `threshold`, given that
    /// only `slots_left` more vertices may be added.
    fn dead_end(&self, threshold: usize, slots_left: usize) -> bool {
        let last = *self.prefix.last().expect("prefix non-empty") as u32;
        let mut must_absorb = 0usize;
        for class in &self.levels[self.prefix.len()].classes {
            if (class.len as usize) < threshold {
                if class.min < last {
                    return true;
                }
                must_absorb += class.len as usize;
            }
        }
        must_absorb > slots_left
    }
}

// ---------------------------------------------------------------------------
// Minimum k-antiresolving set
// ---------------------------------------------------------------------------

struct CardinalitySearch<'a> {
    dm: &'a DistanceMatrix,
    n: usize,
    k: usize,
    semantics: Semantics,
    cardinality: usize,
    /// Smallest first element of any qualifying set found so far.
    best_root: &'a AtomicUsize,
}

impl CardinalitySearch<'_> {
    fn qualifies(&self, min_class: usize) -> bool {
        match self.semantics {
            Semantics::Exact => min_class == self.k,
            Semantics::AtLeast => min_class >= self.k,
        }
    }

    /// First qualifying completion of the current prefix, in lexicographic
    /// order. `my_root` aborts the walk once a smaller root has a hit.
    fn dfs(&self, refine: &mut Refinement, my_root: usize) -> Option<Vec<usize>> {
        if self.best_root.load(Ordering::Relaxed) < my_root {
            return None;
        }
        let depth = refine.prefix.len();
        let last = *refine.prefix.last().expect("root pushed");
        let high = self.n - (self.cardinality - depth - 1);
        for v in (last + 1)..=high {
            refine.push(self.dm, v);
            if refine.prefix.len() == self.cardinality {
                if self.qualifies(refine.min_class_size()) {
                    let witness = refine.prefix.clone();
                    refine.pop();
                    return Some(witness);
                }
            } else if !refine.dead_end(self.k, self.cardinality - refine.prefix.len()) {
                if let Some(w) = self.dfs(refine, my_root) {
                    refine.pop();
                    return Some(w);
                }
            }
            refine.pop();
        }
        None
    }
}

fn search_cardinality(
    dm: &DistanceMatrix,
    k: usize,
    semantics: Semantics,
    cardinality: usize,
    threads: usize,
) -> Option<Vec<usize>> {
    let n = dm.vertex_count();
    debug_assert!(cardinality >= 1 && cardinality <= n.saturating_sub(k));
    let max_root = n - cardinality + 1;
    let best_root = AtomicUsize::new(usize::MAX);
    let best_witness: Mutex<Option<(usize, Vec<usize>)>> = Mutex::new(None);
    let next_root = AtomicUsize::new(1);
    let workers = threads.clamp(1, max_root);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let search = CardinalitySearch {
                    dm,
                    n,
                    k,
                    semantics,
                    cardinality,
                    best_root: &best_root,
                };
                let mut refine = Refinement::new(n, cardinality);
                loop {
                    let root = next_root.fetch_add(1, Ordering::SeqCst);
                    if root > max_root || root >= best_root.load(Ordering::SeqCst) {
                        break;
                    }
                    refine.reset();
                    refine.push(dm, root);
                    let hit = if cardinality == 1 {
                        search
                            .qualifies(refine.min_class_size())
                            .then(|| vec![root])
                    } else if refine.dead_end(k, cardinality - 1) {
                        None
                    } else {
                        search.dfs(&mut refine, root)
                    };
                    if let Some(witness) = hit {
                        let mut slot = best_witness.lock().expect("witness lock");
                        if root < best_root.load(Ordering::SeqCst) {
                            best_root.store(root, Ordering::SeqCst);
                            *slot = Some((root, witness));
                        }
                    }
                }
            });
        }
    });

    let slot = best_witness.into_inner().expect("witness lock");
    slot.map(|(_, w)| w)
}

/// Smallest k-antiresolving set of a connected graph, searched exhaustively
/// in increasing cardinality up to `bound` (default [`DEFAULT_BOUND`]).
///
/// A bound of at least `n - k` turns an empty search into an infeasibility
/// certificate; below that the outcome is only known up to the bound.
pub fn solve_kmad(
    g: &Graph,
    k: usize,
    semantics: Semantics,
    bound: Option<usize>,
) -> Result<SolveOutcome, SolveError> {
    solve_kmad_threaded(g, k, semantics, bound, default_threads())
}

/// [`solve_kmad`] with an explicit worker count. The outcome, including the
/// witness, does not depend on `threads`.
pub fn solve_kmad_threaded(
    g: &Graph,
    k: usize,
    semantics: Semantics,
    bound: Option<usize>,
    threads: usize,
) -> Result<SolveOutcome, SolveError> {
    if k < 1 {
        return Err(SolveError::InvalidK);
    }
    let dm = g.all_pairs_distances()?;
    let n = dm.vertex_count();
    let complete_at = n.saturating_sub(k);
    let explored = match bound {
        Some(b) => b.min(complete_at),
        None => complete_at.min(DEFAULT_BOUND),
    };
    for cardinality in 1..=explored {
        if let Some(witness) = search_cardinality(&dm, k, semantics, cardinality, threads) {
            return Ok(SolveOutcome {
                status: SolveStatus::Optimal {
                    cardinality,
                    witness,
                },
                explored_bound: cardinality,
            });
        }
    }
    let status = if explored >= complete_at {
        SolveStatus::InfeasibleProven
    } else {
        SolveStatus::UnknownUpToBound
    };
    Ok(SolveOutcome {
        status,
        explored_bound: explored,
    })
}

/// One independent solve per k in `1..=k_max`.
pub fn sweep(
    g: &Graph,
    k_max: usize,
    semantics: Semantics,
    bound: Option<usize>,
) -> Result<Vec<(usize, SolveOutcome)>, SolveError> {
    sweep_threaded(g, k_max, semantics, bound, default_threads())
}

pub fn sweep_threaded(
    g: &Graph,
    k_max: usize,
    semantics: Semantics,
    bound: Option<usize>,
    threads: usize,
) -> Result<Vec<(usize, SolveOutcome)>, SolveError> {
    if k_max < 1 {
        return Err(SolveError::InvalidK);
    }
    (1..=k_max)
        .map(|k| solve_kmad_threaded(g, k, semantics, bound, threads).map(|o| (k, o)))
        .collect()
}

/// Metric antidimensionality: the largest k over all explored subject sets.
///
/// The value is exact once the search either exhausts every cardinality up
/// to `n - 1` or reaches the maximum degree, which no subject set can beat.
pub fn kappa(g: &Graph, bound: Option<usize>) -> Result<KappaOutcome, SolveError> {
    let dm = g.all_pairs_distances()?;
    let n = dm.vertex_count();
    if n == 1 {
        // no non-empty proper subject set exists
        return Ok(KappaOutcome::Exact(0));
    }
    let delta = g.max_degree();
    let complete_at = n - 1;
    let explored = match bound {
        Some(b) => b.min(complete_at),
        None => complete_at.min(DEFAULT_BOUND),
    };
    if explored == 0 {
        return Ok(KappaOutcome::UnknownUpToBound {
            best_found: 0,
            explored_bound: 0,
        });
    }
    let mut best = 0usize;
    let mut refine = Refinement::new(n, explored);
    'roots: for root in 1..=n {
        refine.reset();
        refine.push(&dm, root);
        if kappa_dfs(&dm, &mut refine, explored, delta, &mut best) {
            break 'roots;
        }
        refine.pop();
    }
    if best == delta || explored >= complete_at {
        Ok(KappaOutcome::Exact(best))
    } else {
        Ok(KappaOutcome::UnknownUpToBound {
            best_found: best,
            explored_bound: explored,
        })
    }
}

/// Records the current prefix, then walks extensions that can still beat
/// `best`. Returns true once the degree ceiling is reached.
fn kappa_dfs(
    dm: &DistanceMatrix,
    refine: &mut Refinement,
    max_depth: usize,
    delta: usize,
    best: &mut usize,
) -> bool {
    let min = refine.min_class_size();
    if min > *best {
        *best = min;
        if *best >= delta {
            return true;
        }
    }
    let depth = refine.prefix.len();
    if depth == max_depth {
        return false;
    }
    let last = *refine.prefix.last().expect("prefix non-empty");
    let n = refine.n;
    for v in (last + 1)..=n {
        refine.push(dm, v);
        if !refine.dead_end(*best + 1, max_depth - depth - 1)
            && kappa_dfs(dm, refine, max_depth, delta, best)
        {
            refine.pop();
            return true;
        }
        refine.pop();
    }
    false
}
