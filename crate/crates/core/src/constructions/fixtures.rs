//! Named graphs bundled with the crate.
//!
//! The edge lists live in `data/fixtures.txt`; the file is checked against
//! [`FIXTURE_SHA256`] before any block is parsed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::ConstructionError;
use crate::graph::Graph;

/// Contents of the bundled fixture file.
pub const FIXTURE_DATA: &str = include_str!("../../data/fixtures.txt");

/// SHA-256 of [`FIXTURE_DATA`], hex encoded.
pub const FIXTURE_SHA256: &str = "d9fff3eabd61a42a921b8ffe0e35597494fb56f2a4cc08f5f61b83732f883191";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureId {
    Petersen,
    Tietze,
    Fig7Left,
    Fig7Right,
    Fig8aPoly21,
    Fig8bPoly28,
    Fig9aPoly22,
    Fig9bPoly23,
}

impl FixtureId {
    pub const ALL: [FixtureId; 8] = [
        FixtureId::Petersen,
        FixtureId::Tietze,
        FixtureId::Fig7Left,
        FixtureId::Fig7Right,
        FixtureId::Fig8aPoly21,
        FixtureId::Fig8bPoly28,
        FixtureId::Fig9aPoly22,
        FixtureId::Fig9bPoly23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Petersen => "petersen",
            FixtureId::Tietze => "tietze",
            FixtureId::Fig7Left => "fig7_left",
            FixtureId::Fig7Right => "fig7_right",
            FixtureId::Fig8aPoly21 => "fig8a_poly21",
            FixtureId::Fig8bPoly28 => "fig8b_poly28",
            FixtureId::Fig9aPoly22 => "fig9a_poly22",
            FixtureId::Fig9bPoly23 => "fig9b_poly23",
        }
    }
}

impl core::str::FromStr for FixtureId {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| ConstructionError::UnknownFixture(s.to_string()))
    }
}

impl core::fmt::Display for FixtureId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

fn corrupt(msg: String) -> ConstructionError {
    ConstructionError::FixtureData(msg)
}

fn verify_checksum(data: &str) -> Result<(), ConstructionError> {
    let digest = Sha256::digest(data.as_bytes());
    let mut hex = String::with_capacity(64);
    for byte in digest.iter() {
        let _ = write!(hex, "{byte:02x}");
    }
    if hex != FIXTURE_SHA256 {
        return Err(corrupt(format!("checksum mismatch: {hex}")));
    }
    Ok(())
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), ConstructionError> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(u)), Some(Ok(v)), None) => Ok((u, v)),
        _ => Err(corrupt(format!("line {lineno}: expected `u v`"))),
    }
}

/// Parses the block called `name` out of fixture text.
fn parse_block(data: &str, name: &str) -> Result<Graph, ConstructionError> {
    let mut lines =
        data.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    while let Some((lineno, header)) = lines.next() {
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [block, n, m] = fields[..] else {
            return Err(corrupt(format!("line {lineno}: expected `name n m`")));
        };
        let n: usize = n.parse().map_err(|_| corrupt(format!("line {lineno}: bad order")))?;
        let m: usize = m.parse().map_err(|_| corrupt(format!("line {lineno}: bad size")))?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (lineno, line) = lines.next().ok_or_else(|| corrupt(format!("block {block}: expected {m} edges")))?;
            edges.push(parse_pair(line, lineno)?);
        }
        if block == name {
            return Ok(Graph::from_edges(n, edges)?);
        }
    }
    Err(ConstructionError::UnknownFixture(name.to_string()))
}

/// Loads a bundled fixture after verifying the data file's checksum.
pub fn fixture(id: FixtureId) -> Result<Graph, ConstructionError> {
    verify_checksum(FIXTURE_DATA)?;
    parse_block(FIXTURE_DATA, id.name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{expand_vertex_to_triangle, generalized_petersen, list_ears, replace_ear};
    use crate::isomorphism::are_isomorphic;

    #[test]
    fn transcription_targets() {
        let expected = [
            (FixtureId::Petersen, 10, 15),
            (FixtureId::Tietze, 12, 18),
            (FixtureId::Fig7Left, 12, 17),
            (FixtureId::Fig7Right, 13, 18),
            (FixtureId::Fig8aPoly21, 21, 34),
            (FixtureId::Fig8bPoly28, 28, 43),
            (FixtureId::Fig9aPoly22, 22, 35),
            (FixtureId::Fig9bPoly23, 23, 36),
        ];
        for (id, n, m) in expected {
            let g = fixture(id).unwrap();
            assert_eq!((g.order(), g.size()), (n, m), "{id}");
        }
    }

    #[test]
    fn names_round_trip() {
        for id in FixtureId::ALL {
            assert_eq!(id.name().parse::<FixtureId>().unwrap(), id);
        }
        assert!(matches!("k5".parse::<FixtureId>(), Err(ConstructionError::UnknownFixture(_))));
    }

    #[test]
    fn checksum_guards_the_data() {
        assert!(verify_checksum(FIXTURE_DATA).is_ok());
        let tampered = FIXTURE_DATA.replacen("petersen 10 15\n0 1", "petersen 10 15\n0 2", 1);
        assert!(matches!(verify_checksum(&tampered), Err(ConstructionError::FixtureData(_))));
        assert!(parse_block("x 3 2\n0 1\n", "x").is_err());
        assert!(parse_block("x 3\n", "x").is_err());
    }

    #[test]
    fn named_graphs_match_their_constructions() {
        let p = fixture(FixtureId::Petersen).unwrap();
        assert_eq!(p, generalized_petersen(5, 2).unwrap());
        let t = fixture(FixtureId::Tietze).unwrap();
        assert!(are_isomorphic(&expand_vertex_to_triangle(&p, 0).unwrap(), &t));
    }

    #[test]
    fn figure7_pair_is_an_ear_replacement() {
        let left = fixture(FixtureId::Fig7Left).unwrap();
        let right = fixture(FixtureId::Fig7Right).unwrap();
        // drawing labels 11 - 13 - 10 are vertices 9 - 11 - 8 after compaction
        let bold = list_ears(&left).unwrap().into_iter().find(|e| e.vertices == alloc::vec![8, 11, 9]).unwrap();
        let replaced = replace_ear(&left, &bold, 4).unwrap();
        assert!(are_isomorphic(&replaced, &right));
    }
}
