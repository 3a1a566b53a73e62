//! Constructors for paths, cycles, complete graphs and their Cartesian
//! products: grids, cylinders, toruses and 2-dimensional Hamming graphs.
//!
//! Product vertices are numbered row-major: factor vertex `(a, b)` of
//! `G [] H` maps to index `(a - 1) * |V(H)| + b`, so witness sets printed by
//! the solver can be decoded by hand.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family size: {0}")]
    InvalidSize(String),
    #[error("unrecognized family syntax `{0}` (expected grid:RxS, cyl:RxS, torus:RxS or ham:R)")]
    Syntax(String),
}

/// Path P_r with vertices 1..=r numbered along the path.
pub fn path(r: usize) -> Result<Graph, FamilyError> {
    if r < 1 {
        return Err(FamilyError::InvalidSize(format!(
            "path needs r >= 1, got {r}"
        )));
    }
    let edges: Vec<_> = (1..r).map(|u| (u, u + 1)).collect();
    Ok(Graph::from_edge_list(r, &edges).expect("valid path edges"))
}

/// Cycle C_s with vertices 1..=s numbered around the cycle.
pub fn cycle(s: usize) -> Result<Graph, FamilyError> {
    if s < 3 {
        return Err(FamilyError::InvalidSize(format!(
            "cycle needs s >= 3, got {s}"
        )));
    }
    let mut edges: Vec<_> = (1..s).map(|u| (u, u + 1)).collect();
    edges.push((s, 1));
    Ok(Graph::from_edge_list(s, &edges).expect("valid cycle edges"))
}

/// Complete graph K_r.
pub fn complete(r: usize) -> Result<Graph, FamilyError> {
    if r < 1 {
        return Err(FamilyError::InvalidSize(format!(
            "complete graph needs r >= 1, got {r}"
        )));
    }
    let mut edges = Vec::with_capacity(r * (r - 1) / 2);
    for u in 1..=r {
        for v in (u + 1)..=r {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(r, &edges).expect("valid complete edges"))
}

/// Cartesian product `G [] H`: `(a, b) ~ (a', b')` iff `a = a'` and `b ~ b'`
/// in H, or `a ~ a'` in G and `b = b'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let index = |a: usize, b: usize| (a - 1) * nh + b;
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for a in 1..=ng {
        for (b, b2) in h.edges() {
            edges.push((index(a, b), index(a, b2)));
        }
    }
    for (a, a2) in g.edges() {
        for b in 1..=nh {
            edges.push((index(a, b), index(a2, b)));
        }
    }
    Graph::from_edge_list(ng * nh, &edges).expect("valid product edges")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// P_r [] P_s
    Grid,
    /// P_r [] C_s
    Cylinder,
    /// C_r [] C_s
    Torus,
    /// K_r [] K_r
    Hamming2,
}

/// A product-family instance; `Hamming2` uses `r` for both factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub r: usize,
    pub s: usize,
}

impl FamilySpec {
    pub fn grid(r: usize, s: usize) -> Result<Self, FamilyError> {
        if r < 2 || s < 2 {
            return Err(FamilyError::InvalidSize(format!(
                "grid needs r,s >= 2, got {r}x{s}"
            )));
        }
        Ok(FamilySpec {
            kind: FamilyKind::Grid,
            r,
            s,
        })
    }

    pub fn cylinder(r: usize, s: usize) -> Result<Self, FamilyError> {
        if r < 2 || s < 3 {
            return Err(FamilyError::InvalidSize(format!(
                "cylinder needs r >= 2 and s >= 3, got {r}x{s}"
            )));
        }
        Ok(FamilySpec {
            kind: FamilyKind::Cylinder,
            r,
            s,
        })
    }

    pub fn torus(r: usize, s: usize) -> Result<Self, FamilyError> {
        if r < 3 || s < 3 {
            return Err(FamilyError::InvalidSize(format!(
                "torus needs r,s >= 3, got {r}x{s}"
            )));
        }
        Ok(FamilySpec {
            kind: FamilyKind::Torus,
            r,
            s,
        })
    }

    pub fn hamming2(r: usize) -> Result<Self, FamilyError> {
        if r < 4 {
            return Err(FamilyError::InvalidSize(format!(
                "hamming graph needs r >= 4, got {r}"
            )));
        }
        Ok(FamilySpec {
            kind: FamilyKind::Hamming2,
            r,
            s: r,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.r * self.s
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Grid => write!(f, "grid:{}x{}", self.r, self.s),
            FamilyKind::Cylinder => write!(f, "cyl:{}x{}", self.r, self.s),
            FamilyKind::Torus => write!(f, "torus:{}x{}", self.r, self.s),
            FamilyKind::Hamming2 => write!(f, "ham:{}", self.r),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `grid:RxS`, `cyl:RxS`, `torus:RxS` or `ham:R`.
    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| FamilyError::Syntax(text.to_string()))?;
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| FamilyError::Syntax(text.to_string()))
        };
        let two = |rest: &str| -> Result<(usize, usize), FamilyError> {
            let (a, b) = rest
                .split_once('x')
                .ok_or_else(|| FamilyError::Syntax(text.to_string()))?;
            Ok((parse(a)?, parse(b)?))
        };
        match kind {
            "grid" => {
                let (r, s) = two(rest)?;
                FamilySpec::grid(r, s)
            }
            "cyl" => {
                let (r, s) = two(rest)?;
                FamilySpec::cylinder(r, s)
            }
            "torus" => {
                let (r, s) = two(rest)?;
                FamilySpec::torus(r, s)
            }
            "ham" => FamilySpec::hamming2(parse(rest)?),
            _ => Err(FamilyError::Syntax(text.to_string())),
        }
    }
}

/// Builds the product graph for a family spec, with factor vertex `(i, j)`
/// at index `(i - 1) * s + j`.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let g = match spec.kind {
        FamilyKind::Grid => cartesian_product(&path(spec.r)?, &path(spec.s)?),
        FamilyKind::Cylinder => cartesian_product(&path(spec.r)?, &cycle(spec.s)?),
        FamilyKind::Torus => cartesian_product(&cycle(spec.r)?, &cycle(spec.s)?),
        FamilyKind::Hamming2 => cartesian_product(&complete(spec.r)?, &complete(spec.r)?),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_constructions() {
        assert_eq!(cycle(3).unwrap().edge_count(), 3);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(path(1).unwrap().vertex_count(), 1);
        assert!(matches!(cycle(2), Err(FamilyError::InvalidSize(_))));
    }

    #[test]
    fn p2_times_p2_is_c4() {
        let prod = cartesian_product(&path(2).unwrap(), &path(2).unwrap());
        let c4 = cycle(4).unwrap();
        assert_eq!(prod.vertex_count(), 4);
        assert_eq!(prod.edge_count(), 4);
        // same degree sequence and distances as the 4-cycle
        let dp = prod.all_pairs_distances().unwrap();
        let dc = c4.all_pairs_distances().unwrap();
        assert_eq!(dp.diameter(), dc.diameter());
        for v in 1..=4 {
            assert_eq!(prod.degree(v), 2);
        }
    }

    #[test]
    fn product_edge_count_formula() {
        // |E(G [] H)| = n_G * m_H + n_H * m_G
        let prod = cartesian_product(&complete(3).unwrap(), &cycle(4).unwrap());
        assert_eq!(prod.edge_count(), 3 * 4 + 4 * 3);
    }

    #[test]
    fn product_distances_are_factor_sums() {
        let g = path(3).unwrap();
        let h = cycle(4).unwrap();
        let prod = cartesian_product(&g, &h);
        let dg = g.all_pairs_distances().unwrap();
        let dh = h.all_pairs_distances().unwrap();
        let dp = prod.all_pairs_distances().unwrap();
        let nh = h.vertex_count();
        for a in 1..=3 {
            for b in 1..=4 {
                for a2 in 1..=3 {
                    for b2 in 1..=4 {
                        let lhs = dp.dist((a - 1) * nh + b, (a2 - 1) * nh + b2);
                        assert_eq!(lhs, dg.dist(a, a2) + dh.dist(b, b2));
                    }
                }
            }
        }
    }

    #[test]
    fn distance_additivity_across_all_small_families() {
        let mut specs = Vec::new();
        for r in 2..=6 {
            for s in 2..=6 {
                specs.push((
                    FamilySpec::grid(r, s).unwrap(),
                    path(r).unwrap(),
                    path(s).unwrap(),
                ));
                if s >= 3 {
                    specs.push((
                        FamilySpec::cylinder(r, s).unwrap(),
                        path(r).unwrap(),
                        cycle(s).unwrap(),
                    ));
                }
                if r >= 3 && s >= 3 {
                    specs.push((
                        FamilySpec::torus(r, s).unwrap(),
                        cycle(r).unwrap(),
                        cycle(s).unwrap(),
                    ));
                }
            }
        }
        for r in 4..=6 {
            specs.push((
                FamilySpec::hamming2(r).unwrap(),
                complete(r).unwrap(),
                complete(r).unwrap(),
            ));
        }
        for (spec, g, h) in specs {
            let prod = build_family(&spec).unwrap();
            let dg = g.all_pairs_distances().unwrap();
            let dh = h.all_pairs_distances().unwrap();
            let dp = prod.all_pairs_distances().unwrap();
            let nh = h.vertex_count();
            for a in 1..=g.vertex_count() {
                for b in 1..=nh {
                    for a2 in 1..=g.vertex_count() {
                        for b2 in 1..=nh {
                            assert_eq!(
                                dp.dist((a - 1) * nh + b, (a2 - 1) * nh + b2),
                                dg.dist(a, a2) + dh.dist(b, b2),
                                "additivity failed on {spec}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regularity_of_families() {
        let torus = build_family(&FamilySpec::torus(5, 5).unwrap()).unwrap();
        assert_eq!(torus.vertex_count(), 25);
        assert_eq!(torus.edge_count(), 50);
        assert_eq!(torus.max_degree(), 4);
        assert_eq!(torus.min_degree(), 4);

        let prism = build_family(&FamilySpec::cylinder(2, 3).unwrap()).unwrap();
        assert_eq!(prism.vertex_count(), 6);
        assert_eq!(prism.max_degree(), 3);
        assert_eq!(prism.min_degree(), 3);

        let ham = build_family(&FamilySpec::hamming2(4).unwrap()).unwrap();
        assert_eq!(ham.vertex_count(), 16);
        assert_eq!(ham.max_degree(), 6);
        assert_eq!(ham.min_degree(), 6);

        let cyl = build_family(&FamilySpec::cylinder(4, 5).unwrap()).unwrap();
        assert_eq!(cyl.max_degree(), 4);
        assert_eq!(cyl.min_degree(), 3);
    }

    #[test]
    fn odd_torus_eccentric_vertices_are_the_four_corners() {
        // On C_r [] C_s with r, s odd, every vertex has exactly the four
        // eccentric vertices offset by (+-(r-1)/2, +-(s-1)/2).
        for (r, s) in [(5usize, 5usize), (3, 5), (5, 3), (3, 3)] {
            let torus = build_family(&FamilySpec::torus(r, s).unwrap()).unwrap();
            let dm = torus.all_pairs_distances().unwrap();
            let hr = (r - 1) / 2;
            let hs = (s - 1) / 2;
            for i in 0..r {
                for j in 0..s {
                    let x = i * s + j + 1;
                    let mut expect: Vec<usize> = [
                        ((i + r - hr) % r, (j + s - hs) % s),
                        ((i + hr) % r, (j + s - hs) % s),
                        ((i + hr) % r, (j + hs) % s),
                        ((i + r - hr) % r, (j + hs) % s),
                    ]
                    .iter()
                    .map(|&(a, b)| a * s + b + 1)
                    .collect();
                    expect.sort_unstable();
                    expect.dedup();
                    assert_eq!(
                        dm.eccentric_vertices(x),
                        expect,
                        "torus {r}x{s}, vertex {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn family_syntax_round_trip() {
        for text in ["grid:3x4", "cyl:2x5", "torus:5x6", "ham:4"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("torus:5".parse::<FamilySpec>().is_err());
        assert!("wheel:5x5".parse::<FamilySpec>().is_err());
        assert!("torus:2x5".parse::<FamilySpec>().is_err());
        assert!("ham:3".parse::<FamilySpec>().is_err());
    }
}
