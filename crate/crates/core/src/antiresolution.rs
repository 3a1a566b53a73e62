//! The distance-vector equivalence relation behind antiresolving sets.
//!
//! For a vertex set S, two vertices x, y outside S are equivalent when
//! `d(x, z) = d(y, z)` for every z in S. The partition into equivalence
//! classes and its minimum class size decide whether S is a k-antiresolving
//! set: exactly-k means the smallest class has size k, at-least-k means no
//! class is smaller than k.

use thiserror::Error;

use crate::graph::DistanceMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArsError {
    #[error("subject set must be non-empty")]
    EmptySet,
    #[error("subject set must be a proper subset of the vertices")]
    FullSet,
    #[error("vertex {vertex} out of range 1..={n}")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("k must be at least 1")]
    InvalidK,
}

/// How a candidate set is judged against the parameter k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// The smallest equivalence class has size exactly k.
    Exact,
    /// Every equivalence class has size at least k.
    AtLeast,
}

impl Semantics {
    pub fn as_str(&self) -> &'static str {
        match self {
            Semantics::Exact => "exact",
            Semantics::AtLeast => "atleast",
        }
    }
}

impl std::fmt::Display for Semantics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Equivalence classes of the vertices outside a subject set S.
///
/// Classes are listed with members ascending and ordered by their smallest
/// member, so the output is independent of the order S was supplied in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArsPartition {
    pub subject: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub min_class_size: usize,
}

/// Groups the vertices outside `subject` by their distance vectors to it.
pub fn partition_by_rs(dm: &DistanceMatrix, subject: &[usize]) -> Result<ArsPartition, ArsError> {
    let n = dm.vertex_count();
    if subject.is_empty() {
        return Err(ArsError::EmptySet);
    }
    for &v in subject {
        if v < 1 || v > n {
            return Err(ArsError::IndexOutOfRange { vertex: v, n });
        }
    }
    let mut sorted = subject.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() == n {
        return Err(ArsError::FullSet);
    }

    let mut in_subject = vec![false; n + 1];
    for &v in &sorted {
        in_subject[v] = true;
    }
    let mut keyed: Vec<(Vec<u32>, usize)> = (1..=n)
        .filter(|&v| !in_subject[v])
        .map(|v| (sorted.iter().map(|&z| dm.dist(v, z)).collect(), v))
        .collect();
    keyed.sort();

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < keyed.len() {
        let mut class = vec![keyed[i].1];
        let mut j = i + 1;
        while j < keyed.len() && keyed[j].0 == keyed[i].0 {
            class.push(keyed[j].1);
            j += 1;
        }
        class.sort_unstable();
        classes.push(class);
        i = j;
    }
    classes.sort_by_key(|c| c[0]);
    let min_class_size = classes
        .iter()
        .map(Vec::len)
        .min()
        .expect("subject is proper");
    Ok(ArsPartition {
        subject: sorted,
        classes,
        min_class_size,
    })
}

/// Minimum equivalence-class size induced by `subject`.
pub fn k_of(dm: &DistanceMatrix, subject: &[usize]) -> Result<usize, ArsError> {
    Ok(partition_by_rs(dm, subject)?.min_class_size)
}

/// Whether `subject` is a k-antiresolving set under the given semantics.
pub fn is_k_ars(
    dm: &DistanceMatrix,
    subject: &[usize],
    k: usize,
    semantics: Semantics,
) -> Result<bool, ArsError> {
    if k < 1 {
        return Err(ArsError::InvalidK);
    }
    let min = k_of(dm, subject)?;
    Ok(match semantics {
        Semantics::Exact => min == k,
        Semantics::AtLeast => min >= k,
    })
}
