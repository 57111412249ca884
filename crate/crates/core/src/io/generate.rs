//! Built-in maps: tetrahedron, prisms, K_{2,3}, theta and octahedron.

use std::f64::consts::TAU;

use thiserror::Error;

use crate::map::{build_map, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown generator `{0}` (expected tetrahedron, prism, k23, theta or octahedron)")]
    UnknownGenerator(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Tetrahedron,
    /// The circular ladder on `2n` vertices, `n >= 3`.
    Prism(usize),
    K23,
    Theta,
    Octahedron,
}

impl Generator {
    pub fn parse(name: &str, param: Option<usize>) -> Result<Self, GeneratorError> {
        let no_param = |g: Generator| match param {
            None => Ok(g),
            Some(p) => Err(GeneratorError::BadParameter(format!("`{name}` takes no parameter, got {p}"))),
        };
        match name {
            "tetrahedron" | "k4" => no_param(Generator::Tetrahedron),
            "k23" => no_param(Generator::K23),
            "theta" => no_param(Generator::Theta),
            "octahedron" => no_param(Generator::Octahedron),
            "prism" => match param {
                Some(n) if n >= 3 => Ok(Generator::Prism(n)),
                Some(n) => Err(GeneratorError::BadParameter(format!("prism needs n >= 3, got {n}"))),
                None => Err(GeneratorError::BadParameter("prism needs a size n".into())),
            },
            other => Err(GeneratorError::UnknownGenerator(other.to_string())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Generator::Tetrahedron => "tetrahedron".into(),
            Generator::Prism(n) => format!("prism {n}"),
            Generator::K23 => "k23".into(),
            Generator::Theta => "theta".into(),
            Generator::Octahedron => "octahedron".into(),
        }
    }

    pub fn build(&self) -> PlanarMap {
        match *self {
            Generator::Tetrahedron => tetrahedron(),
            Generator::Prism(n) => prism(n),
            Generator::K23 => k23(),
            Generator::Theta => theta(),
            Generator::Octahedron => octahedron(),
        }
    }
}

/// Convenience wrapper over [`Generator::parse`] and [`Generator::build`].
pub fn generate(name: &str, param: Option<usize>) -> Result<PlanarMap, GeneratorError> {
    Generator::parse(name, param).map(|g| g.build())
}

fn polar(radius: f64, turns: f64) -> (f64, f64) {
    (radius * (TAU * turns).cos(), radius * (TAU * turns).sin())
}

/// Rotation system of a straight-line drawing. Edge `i` joins `edges[i].0`
/// (dart `2i`) to `edges[i].1` (dart `2i + 1`); darts at each vertex are
/// sorted by angle, which is counterclockwise order.
fn from_drawing(coords: &[(f64, f64)], edges: &[(usize, usize)]) -> PlanarMap {
    let mut around: Vec<Vec<(f64, usize)>> = vec![Vec::new(); coords.len()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        for (from, to, dart) in [(u, v, 2 * i), (v, u, 2 * i + 1)] {
            let (x0, y0) = coords[from];
            let (x1, y1) = coords[to];
            around[from].push(((y1 - y0).atan2(x1 - x0), dart));
        }
    }
    let rotations = around
        .into_iter()
        .map(|mut darts| {
            darts.sort_by(|a, b| a.0.total_cmp(&b.0));
            darts.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    build_map(rotations).expect("built-in drawing is a valid planar map")
}

pub fn tetrahedron() -> PlanarMap {
    let coords = [(0.0, 0.0), polar(1.0, 0.25), polar(1.0, 0.25 + 1.0 / 3.0), polar(1.0, 0.25 + 2.0 / 3.0)];
    from_drawing(&coords, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])
}

/// Outer cycle `0..n`, inner cycle `n..2n`, then the rungs `i -- n + i`.
pub fn prism(n: usize) -> PlanarMap {
    assert!(n >= 3, "prism needs n >= 3");
    let mut coords = Vec::with_capacity(2 * n);
    for ring in [2.0, 1.0] {
        coords.extend((0..n).map(|i| polar(ring, i as f64 / n as f64)));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (n + i, n + (i + 1) % n)));
    edges.extend((0..n).map(|i| (i, n + i)));
    from_drawing(&coords, &edges)
}

/// Poles `0` and `1`, middle vertices `2, 3, 4`.
pub fn k23() -> PlanarMap {
    let coords = [(-2.0, 0.0), (2.0, 0.0), (0.0, 1.0), (0.0, 0.0), (0.0, -1.0)];
    from_drawing(&coords, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> PlanarMap {
    build_map(vec![vec![0, 2, 4], vec![1, 5, 3]]).expect("theta is valid")
}

pub fn octahedron() -> PlanarMap {
    let coords = [
        polar(3.0, 0.25),
        polar(3.0, 0.25 + 1.0 / 3.0),
        polar(3.0, 0.25 + 2.0 / 3.0),
        polar(1.0, 0.75),
        polar(1.0, 0.75 + 1.0 / 3.0),
        polar(1.0, 0.75 + 2.0 / 3.0),
    ];
    let edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (3, 1), (3, 2), (4, 2), (4, 0), (5, 0), (5, 1)];
    from_drawing(&coords, &edges)
}
