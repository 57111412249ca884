//! Binary planar code, the format written by plantri and friends.
//!
//! After the header `>>planar_code<<` each graph is a vertex count followed,
//! for every vertex, by its neighbours (1-based) in clockwise order and a
//! terminating zero. A leading zero byte switches the record to 16-bit
//! entries (little-endian unless the header says `be`).
//!
//! Rotations here are counterclockwise, so neighbour lists are reversed on
//! read and on write.

use thiserror::Error;

use crate::map::{build_map, MapError, PlanarMap};

const HEADER: &[u8] = b">>planar_code<<";
const HEADER_LE: &[u8] = b">>planar_code le<<";
const HEADER_BE: &[u8] = b">>planar_code be<<";

/// Upper bound on pairings tried when parallel edges make the dart pairing
/// ambiguous.
const MAX_PAIRING_ATTEMPTS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarCodeError {
    #[error("missing >>planar_code<< header")]
    BadHeader,
    #[error("graph {graph} is truncated")]
    TruncatedRecord { graph: usize },
    #[error("graph {graph}: {reason}")]
    BadNeighbor { graph: usize, reason: String },
    #[error("graph {graph}: {source}")]
    Map { graph: usize, source: MapError },
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
    big_endian: bool,
}

impl Reader<'_> {
    fn byte(&mut self) -> Option<u8> {
        let b = *self.bytes.get(self.pos)?;
        self.pos += 1;
        Some(b)
    }

    fn word(&mut self) -> Option<u16> {
        let pair = [self.byte()?, self.byte()?];
        Some(if self.big_endian { u16::from_be_bytes(pair) } else { u16::from_le_bytes(pair) })
    }
}

/// Decode every graph in a planar-code stream.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlanarMap>, PlanarCodeError> {
    let (skip, big_endian) = if bytes.starts_with(HEADER) {
        (HEADER.len(), false)
    } else if bytes.starts_with(HEADER_LE) {
        (HEADER_LE.len(), false)
    } else if bytes.starts_with(HEADER_BE) {
        (HEADER_BE.len(), true)
    } else {
        return Err(PlanarCodeError::BadHeader);
    };
    let mut reader = Reader { bytes, pos: skip, big_endian };
    let mut maps = Vec::new();
    while reader.pos < bytes.len() {
        let graph = maps.len();
        let truncated = PlanarCodeError::TruncatedRecord { graph };
        let first = reader.byte().ok_or(truncated.clone())?;
        let wide = first == 0;
        let n = if wide { reader.word().ok_or(truncated.clone())? as usize } else { first as usize };
        let mut neighbors = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let x = if wide { reader.word().map(usize::from) } else { reader.byte().map(usize::from) };
                match x.ok_or(truncated.clone())? {
                    0 => break,
                    x if x > n => {
                        return Err(PlanarCodeError::BadNeighbor { graph, reason: format!("neighbour {x} > {n}") })
                    }
                    x => list.push(x - 1),
                }
            }
            list.reverse();
            neighbors.push(list);
        }
        maps.push(map_from_neighbors(graph, &neighbors)?);
    }
    Ok(maps)
}

/// Parallel edges between the same two vertices, as positions in each list.
struct Bundle {
    low: usize,
    high: usize,
    low_positions: Vec<usize>,
    high_positions: Vec<usize>,
}

fn map_from_neighbors(graph: usize, neighbors: &[Vec<usize>]) -> Result<PlanarMap, PlanarCodeError> {
    let bad = |reason: String| PlanarCodeError::BadNeighbor { graph, reason };
    let mut bundles: Vec<Bundle> = Vec::new();
    let mut bundle_of = std::collections::BTreeMap::new();
    for (u, list) in neighbors.iter().enumerate() {
        for (p, &v) in list.iter().enumerate() {
            if u == v {
                return Err(bad(format!("vertex {} has a loop", u + 1)));
            }
            let key = (u.min(v), u.max(v));
            let id = *bundle_of.entry(key).or_insert_with(|| {
                bundles.push(Bundle { low: key.0, high: key.1, low_positions: Vec::new(), high_positions: Vec::new() });
                bundles.len() - 1
            });
            if u < v {
                bundles[id].low_positions.push(p);
            } else {
                bundles[id].high_positions.push(p);
            }
        }
    }
    for b in &bundles {
        if b.low_positions.len() != b.high_positions.len() {
            return Err(bad(format!("vertices {} and {} list each other unequally often", b.low + 1, b.high + 1)));
        }
    }

    // Around the sphere, parallel edges appear in opposite cyclic orders at
    // their two ends; each bundle of size m has m such pairings, tried
    // starting from the plain reversal of list order.
    let mut shifts: Vec<usize> = bundles.iter().map(|b| b.low_positions.len() - 1).collect();
    let mut first_error = None;
    for _ in 0..MAX_PAIRING_ATTEMPTS {
        match build_map(rotations_for(neighbors, &bundles, &shifts)) {
            Ok(map) => return Ok(map),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
        // odometer over the shift of every multi-edge bundle
        let mut advanced = false;
        for (b, shift) in bundles.iter().zip(shifts.iter_mut()) {
            let m = b.low_positions.len();
            if m == 1 {
                continue;
            }
            *shift = (*shift + 1) % m;
            if *shift != m - 1 {
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    Err(PlanarCodeError::Map { graph, source: first_error.expect("at least one attempt") })
}

fn rotations_for(neighbors: &[Vec<usize>], bundles: &[Bundle], shifts: &[usize]) -> Vec<Vec<usize>> {
    let mut rotations: Vec<Vec<usize>> = neighbors.iter().map(|l| vec![usize::MAX; l.len()]).collect();
    // assign edge ids in order of their position in the lower vertex's list
    let mut slots: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (b, &shift) in bundles.iter().zip(shifts) {
        let m = b.low_positions.len();
        for (k, &p) in b.low_positions.iter().enumerate() {
            let q = b.high_positions[(shift + m - k) % m];
            slots.push((b.low, p, b.high, q));
        }
    }
    slots.sort_unstable();
    for (e, &(u, p, v, q)) in slots.iter().enumerate() {
        rotations[u][p] = 2 * e;
        rotations[v][q] = 2 * e + 1;
    }
    rotations
}

/// Encode maps as planar code; 16-bit records are used for maps with more
/// than 255 vertices.
pub fn emit_planar_code(maps: &[PlanarMap]) -> Vec<u8> {
    let wide = maps.iter().any(|m| m.num_vertices() > 255);
    let mut out = if wide { HEADER_LE.to_vec() } else { HEADER.to_vec() };
    for map in maps {
        let put = |x: usize, out: &mut Vec<u8>| {
            if wide {
                out.extend_from_slice(&(x as u16).to_le_bytes());
            } else {
                out.push(x as u8);
            }
        };
        if wide {
            out.push(0);
        }
        put(map.num_vertices(), &mut out);
        for v in 0..map.num_vertices() {
            for &d in map.rotation(v).iter().rev() {
                put(map.vertex_of(d ^ 1) + 1, &mut out);
            }
            put(0, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::generate::{prism, tetrahedron, theta};

    #[test]
    fn handwritten_k4() {
        // K4 drawn with vertex 1 in the middle of triangle 2-3-4, clockwise lists
        let mut bytes = HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 4, 3, 0, 1, 3, 4, 0, 1, 4, 2, 0, 1, 2, 3, 0]);
        let maps = parse_planar_code(&bytes).unwrap();
        assert_eq!(maps.len(), 1);
        let k4 = &maps[0];
        assert_eq!((k4.num_vertices(), k4.num_edges(), k4.num_faces()), (4, 6, 4));
        assert_eq!(k4.unoriented_code(), tetrahedron().unoriented_code());
    }

    #[test]
    fn header_and_truncation() {
        assert_eq!(parse_planar_code(b"planar").unwrap_err(), PlanarCodeError::BadHeader);
        assert!(parse_planar_code(HEADER).unwrap().is_empty());
        let mut bytes = HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 3, 4, 0, 1]);
        assert_eq!(parse_planar_code(&bytes).unwrap_err(), PlanarCodeError::TruncatedRecord { graph: 0 });
        let mut bytes = HEADER.to_vec();
        bytes.extend_from_slice(&[2, 3, 0, 1, 0]);
        assert!(matches!(parse_planar_code(&bytes), Err(PlanarCodeError::BadNeighbor { .. })));
    }

    #[test]
    fn round_trips_preserve_the_map() {
        let maps = vec![tetrahedron(), prism(5), theta()];
        let back = parse_planar_code(&emit_planar_code(&maps)).unwrap();
        for (a, b) in maps.iter().zip(&back) {
            assert_eq!(a.canonical_code(), b.canonical_code());
        }
    }

    #[test]
    fn sixteen_bit_records() {
        let big = prism(130);
        let bytes = emit_planar_code(std::slice::from_ref(&big));
        assert!(bytes.starts_with(HEADER_LE));
        let back = parse_planar_code(&bytes).unwrap();
        assert_eq!(back[0].canonical_code(), big.canonical_code());
    }
}
