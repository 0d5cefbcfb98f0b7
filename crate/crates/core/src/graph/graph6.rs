//! graph6 encoding (header-less), following the format description shipped
//! with nauty: `N(n)` followed by the upper triangle of the adjacency matrix
//! in column order, six bits per byte, each byte offset by 63.

use super::{GraphError, LabeledGraph, MAX_ORDER};

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Encodes `g`; vertex indices give the graph6 bit order.
pub fn encode_graph6(g: &LabeledGraph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc + 63) as char);
    }
    out
}

/// Decodes one graph6 line. Vertices become `v1..vn` in graph6 bit order.
pub fn decode_graph6(text: &str) -> Result<LabeledGraph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: &str| GraphError::MalformedGraph6(format!("{msg} in {text:?}"));
    if bytes.is_empty() {
        return Err(bad("empty string"));
    }
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(bad(&format!("byte {c:#04x} outside 63..=126")));
    }
    let val = |i: usize| (bytes[i] - 63) as usize;
    let (n, start) = if bytes[0] != 126 {
        (val(0), 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated size field"));
        }
        ((val(1) << 12) | (val(2) << 6) | val(3), 4)
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated size field"));
        }
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | val(i);
        }
        (n, 8)
    };
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - start != need {
        return Err(bad(&format!(
            "expected {need} data bytes for order {n}, found {}",
            bytes.len() - start
        )));
    }
    let mut g = LabeledGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(start + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = val(start + need - 1);
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("non-zero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn golden_strings() {
        // reference strings produced by networkx.to_graph6_bytes
        assert_eq!(encode_graph6(&named::k33()), "EFz_");
        assert_eq!(encode_graph6(&LabeledGraph::empty(1)), "@");
        assert_eq!(encode_graph6(&named::complete(4)), "C~");
        assert_eq!(encode_graph6(&named::path(3)), "Bg");
        assert_eq!(encode_graph6(&named::cycle(5)), "Dhc");
        assert_eq!(encode_graph6(&LabeledGraph::empty(0)), "?");
    }

    #[test]
    fn decode_golden() {
        let g = decode_graph6("EFz_").unwrap();
        assert_eq!(g, named::k33());
        assert_eq!(g.label(0).to_string(), "v1");
        assert_eq!(decode_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn long_form_size() {
        let g = LabeledGraph::from_edges(70, &[(0, 69), (3, 4)]);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_networkx_long_form() {
        // gnp_random_graph(70, 0.1, seed=1) from networkx: 234 edges, first edges (0,9),(0,10),(0,14)
        let s = "~?@E?P@G??_CA???a?oO??OGIG?_@??A_??AS?G_???O?_????O?_C??P_??G_C?s?????@???S_???A???A?C_?C@??O@???`G?A?O?O?K@?_?@?gGE???G@A?_?_?_?O??????????C?A??CW?COGCB?G??G?Q?_C?AAPAAW@??H?O?????C@?C?_??GO?DI@??O_A?RD?G?B_??_???????O??m?OC?????Og?????HOO???@P@???@C??OPo???A@GO??O??G?s???_@A??AWa??_O???A???_?C?M?AO?OCG??O?A???G??G?cAA?@?OO??C??????c?PCCO?O??`??_?O?_?a???K????OCAAC?AA????O?O?_G????????G??`?_G??OG@O?AC??";
        let g = decode_graph6(s).unwrap();
        assert_eq!(g.order(), 70);
        assert_eq!(g.size(), 234);
        assert!(g.has_edge(0, 9) && g.has_edge(0, 10) && g.has_edge(0, 14));
        assert_eq!(encode_graph6(&g), s);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode_graph6(""), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(decode_graph6("E"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(
            decode_graph6("EFz_?"),
            Err(GraphError::MalformedGraph6(_))
        ));
        assert!(matches!(
            decode_graph6("EF z"),
            Err(GraphError::MalformedGraph6(_))
        ));
        assert!(matches!(decode_graph6("~?"), Err(GraphError::MalformedGraph6(_))));
        // order 3 needs 3 bits; trailing padding bits set
        assert!(matches!(decode_graph6("B~"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(decode_graph6("~?A@"), Err(GraphError::TooLarge(129))));
    }
}
