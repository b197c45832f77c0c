//! The graph6 interchange format.
//!
//! A record is the vertex count `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order `a(0,1), a(0,2), a(1,2), a(0,3), ...`,
//! packed six bits per byte (most significant first) and offset by 63.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        None => Err(err(offset, "unexpected end of record")),
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(err(offset, format!("byte {b} outside [63,126]"))),
    }
}

/// Decodes the size field; returns `(n, bytes consumed)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes.first() {
        None => Err(err(0, "empty record")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0u64;
            for i in 2..8 {
                n = (n << 6) | sextet(bytes, i)?;
            }
            Ok((n as usize, 8))
        }
        Some(&126) => {
            let mut n = 0u64;
            for i in 1..4 {
                n = (n << 6) | sextet(bytes, i)?;
            }
            Ok((n as usize, 4))
        }
        Some(_) => Ok((sextet(bytes, 0)? as usize, 1)),
    }
}

/// Parses one graph6 record. An optional `>>graph6<<` header and a trailing
/// line terminator are accepted.
pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text;
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    let skip = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &bytes[skip..];

    let (n, start) = parse_size(bytes).map_err(|e| shift(e, skip))?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != start + nbytes {
        return Err(err(
            skip + bytes.len().min(start + nbytes),
            format!("expected {} payload bytes for n={n}, found {}", nbytes, bytes.len() - start),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(bytes, start + k / 6).map_err(|e| shift(e, skip))?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = start + nbytes - 1;
        let b = sextet(bytes, last).map_err(|e| shift(e, skip))?;
        let pad = 6 - nbits % 6;
        if b & ((1 << pad) - 1) != 0 {
            return Err(err(skip + last, "nonzero padding bits"));
        }
    }
    for i in start..bytes.len() {
        sextet(bytes, i).map_err(|e| shift(e, skip))?;
    }
    Ok(g)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 { offset: offset + by, reason },
        other => other,
    }
}

/// Encodes `g` with the shortest legal size field.
pub fn to_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

pub fn to_graph6_string(g: &Graph) -> String {
    // graph6 bytes are printable ASCII.
    String::from_utf8(to_graph6(g)).expect("graph6 is ASCII")
}

impl Graph {
    pub fn from_graph6(text: &str) -> Result<Graph> {
        from_graph6(text.as_bytes())
    }

    pub fn to_graph6(&self) -> String {
        to_graph6_string(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    /// Packs upper-triangle bits by hand, independent of the encoder's loop.
    fn hand_encode(n: usize, bits: &[u8]) -> String {
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                v |= b << (5 - i);
            }
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn c5_and_p4_hand_encodings() {
        // a01 a02 a12 a03 a13 a23 a04 a14 a24 a34 for the cycle 0-1-2-3-4-0
        let c5 = hand_encode(5, &[1, 0, 1, 0, 0, 1, 1, 0, 0, 1]);
        assert_eq!(c5, "Dhc");
        assert_eq!(Graph::from_graph6("Dhc").unwrap(), cycle(5).unwrap());
        assert_eq!(cycle(5).unwrap().to_graph6(), "Dhc");

        let p4 = hand_encode(4, &[1, 0, 1, 0, 0, 1]);
        assert_eq!(p4, "Ch");
        assert_eq!(Graph::from_graph6("Ch").unwrap(), path(4).unwrap());
        assert_eq!(path(4).unwrap().to_graph6(), "Ch");
    }

    #[test]
    fn single_vertex_and_null_graph() {
        assert_eq!(Graph::from_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(Graph::empty(1).unwrap().to_graph6(), "@");
        assert_eq!(Graph::from_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn header_and_newline_are_accepted() {
        assert_eq!(Graph::from_graph6(">>graph6<<Dhc\n").unwrap(), cycle(5).unwrap());
        assert_eq!(Graph::from_graph6("Dhc\r\n").unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn long_form_round_trip() {
        let g = complete(70).unwrap();
        let enc = g.to_graph6();
        assert_eq!(&enc.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(Graph::from_graph6(&enc).unwrap(), g);
        let g = cycle(300).unwrap();
        assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(Graph::from_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        // too short
        assert!(matches!(Graph::from_graph6("Dh"), Err(Error::Graph6 { .. })));
        // too long
        assert!(matches!(Graph::from_graph6("Dhcc"), Err(Error::Graph6 { .. })));
        // byte out of range in the payload
        assert_eq!(
            Graph::from_graph6("Dh ").unwrap_err(),
            Error::Graph6 { offset: 2, reason: "byte 32 outside [63,126]".into() }
        );
        // C_5 has 10 bits; the low two bits of the second payload byte are padding
        assert_eq!(
            Graph::from_graph6("Dhd").unwrap_err(),
            Error::Graph6 { offset: 2, reason: "nonzero padding bits".into() }
        );
        // long form announcing 63 vertices with no payload
        assert!(matches!(Graph::from_graph6("~??~"), Err(Error::Graph6 { offset: 4, .. })));
    }

    #[test]
    fn oversize_is_rejected() {
        // 126 followed by 3 sextets encoding 1000
        let n = 1000usize;
        let rec = [126u8, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63];
        assert_eq!(
            from_graph6(&rec).unwrap_err(),
            Error::TooManyVertices { n: 1000, cap: MAX_VERTICES }
        );
    }
}
