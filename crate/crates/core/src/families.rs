//! Constructors for the named graph families, and the `name:args`
//! micro-grammar used by the CLI and the web demo.
//!
//! Grammar: `spec := term ('*' term)*` where `*` is the Cartesian product
//! and `term := name [':' args]`. `corona:` takes a nested term, e.g.
//! `corona:cycle:4`.

use crate::error::{GraphError, ParseError};
use crate::graph::{cartesian_product, corona, Graph};

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// K_{m,n} with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    kmn_minus_matching(m, n, 0)
}

/// K_{1,r} with centre 0.
pub fn star(r: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, r)
}

/// K_{m,n} minus the matching {(i, m+i) : i < l}.
pub fn kmn_minus_matching(m: usize, n: usize, l: usize) -> Result<Graph, GraphError> {
    if l > m.min(n) {
        return Err(invalid(format!("matching of size {l} does not fit in K{m},{n}")));
    }
    let mut g = Graph::empty(m + n)?;
    for a in 0..m {
        for b in 0..n {
            if !(a == b && a < l) {
                g.add_edge_unchecked(a, m + b);
            }
        }
    }
    Ok(g)
}

/// C6 with vertex i replaced by a clique of `sizes[i]` vertices, cliques of
/// consecutive positions completely joined.
pub fn blown_up_c6(sizes: [usize; 6]) -> Result<Graph, GraphError> {
    if sizes.contains(&0) {
        return Err(invalid("blown-up C6 needs every clique size >= 1"));
    }
    let mut start = [0usize; 7];
    for i in 0..6 {
        start[i + 1] = start[i] + sizes[i];
    }
    let mut g = Graph::empty(start[6])?;
    let block = |i: usize| start[i]..start[i + 1];
    for i in 0..6 {
        for u in block(i) {
            for v in block(i) {
                if u < v {
                    g.add_edge_unchecked(u, v);
                }
            }
            for v in block((i + 1) % 6) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    Ok(g)
}

/// P_{3k-4} with a new leaf attached to each of its stems.
pub fn stems_with_leaves_tree(k: usize) -> Result<Graph, GraphError> {
    if k < 2 {
        return Err(invalid(format!("stems-with-leaves tree needs k >= 2, got {k}")));
    }
    let len = 3 * k - 4;
    let mut g = path(len)?;
    let stems: Vec<usize> = (0..len)
        .filter(|&v| g.neighbors(v).iter().any(|u| g.degree(u) == 1))
        .collect();
    let mut edges = g.edges();
    for (i, &s) in stems.iter().enumerate() {
        edges.push((s, len + i));
    }
    g = Graph::from_edge_list(len + stems.len(), &edges)?;
    Ok(g)
}

/// Spider: a centre (vertex 0) with legs of the given lengths.
pub fn spider(legs: &[usize]) -> Result<Graph, GraphError> {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Parses a family spec such as `cycle:6`, `kmn-m:3,3,3`, `path:3*path:3`.
pub fn parse_family(spec: &str) -> Result<Graph, ParseError> {
    let fail = |reason: String| ParseError::Family { spec: spec.to_string(), reason };
    let mut acc: Option<Graph> = None;
    for term in spec.split('*') {
        let g = parse_term(term.trim()).map_err(|e| match e {
            ParseError::Family { reason, .. } => fail(reason),
            other => other,
        })?;
        acc = Some(match acc {
            None => g,
            Some(prev) => cartesian_product(&prev, &g)?,
        });
    }
    acc.ok_or_else(|| fail("empty spec".into()))
}

fn parse_term(term: &str) -> Result<Graph, ParseError> {
    let fail = |reason: String| ParseError::Family { spec: term.to_string(), reason };
    let (name, args) = match term.split_once(':') {
        Some((n, a)) => (n, a),
        None => (term, ""),
    };
    if name == "corona" {
        return Ok(corona(&parse_term(args)?)?);
    }
    let nums: Vec<usize> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| fail(format!("bad number {t:?}"))))
            .collect::<Result<_, _>>()?
    };
    let arity = |k: usize| -> Result<(), ParseError> {
        if nums.len() == k {
            Ok(())
        } else {
            Err(fail(format!("{name} takes {k} argument(s), got {}", nums.len())))
        }
    };
    let g = match name {
        "path" | "p" => {
            arity(1)?;
            path(nums[0])?
        }
        "cycle" | "c" => {
            arity(1)?;
            cycle(nums[0])?
        }
        "complete" | "k" => {
            arity(1)?;
            complete(nums[0])?
        }
        "empty" => {
            arity(1)?;
            Graph::empty(nums[0])?
        }
        "kmn" | "bipartite" => {
            arity(2)?;
            complete_bipartite(nums[0], nums[1])?
        }
        "star" => {
            arity(1)?;
            star(nums[0])?
        }
        "kmn-m" => {
            arity(3)?;
            kmn_minus_matching(nums[0], nums[1], nums[2])?
        }
        "blowc6" => {
            arity(6)?;
            blown_up_c6([nums[0], nums[1], nums[2], nums[3], nums[4], nums[5]])?
        }
        "stems" => {
            arity(1)?;
            stems_with_leaves_tree(nums[0])?
        }
        "spider" => spider(&nums)?,
        _ => return Err(fail(format!("unknown family {name:?}"))),
    };
    Ok(g)
}

/// Family names understood by [`parse_family`], for help texts.
pub const FAMILY_HELP: &str = "path:N cycle:N complete:N empty:N kmn:M,N star:R kmn-m:M,N,L \
blowc6:A,B,C,D,E,F stems:K spider:L1,L2,... corona:<term>; join terms with '*' for a Cartesian product";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_blow_up_is_c6() {
        assert_eq!(blown_up_c6([1; 6]).unwrap(), cycle(6).unwrap());
        assert!(blown_up_c6([1, 0, 1, 1, 1, 1]).is_err());
        let h = blown_up_c6([2, 1, 1, 2, 1, 1]).unwrap();
        assert_eq!(h.n(), 8);
        // 2 inner edges + joins 2+1+2+2+1+2
        assert_eq!(h.m(), 2 + 10);
    }

    #[test]
    fn stems_tree_shape() {
        let t = stems_with_leaves_tree(3).unwrap();
        assert_eq!(t.n(), 7);
        assert!(t.is_tree());
        // P5 0-1-2-3-4 with leaves on 1 and 3
        assert_eq!(t.degree(1), 3);
        assert_eq!(t.degree(3), 3);
        assert_eq!(t.degree(2), 2);
        assert!(stems_with_leaves_tree(1).is_err());
        assert_eq!(stems_with_leaves_tree(2).unwrap().n(), 4);
    }

    #[test]
    fn matchings_out_of_range() {
        assert!(kmn_minus_matching(2, 3, 3).is_err());
        assert_eq!(kmn_minus_matching(3, 3, 3).unwrap().m(), 6);
        assert_eq!(kmn_minus_matching(2, 3, 1).unwrap().m(), 5);
    }

    #[test]
    fn spec_grammar() {
        assert_eq!(parse_family("cycle:6").unwrap(), cycle(6).unwrap());
        let cube = parse_family("cycle:4*complete:2").unwrap();
        assert_eq!((cube.n(), cube.m()), (8, 12));
        let cor = parse_family("corona:cycle:4").unwrap();
        assert_eq!((cor.n(), cor.m()), (8, 8));
        assert_eq!(parse_family("spider:2,2,2").unwrap().n(), 7);
        assert!(parse_family("cycle:2").is_err());
        assert!(parse_family("cycle").is_err());
        assert!(parse_family("hypercube:3").is_err());
        assert!(parse_family("kmn-m:3,3,x").is_err());
    }
}
