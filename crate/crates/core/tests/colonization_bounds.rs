use edom_core::canon::all_graphs;
use edom_core::colonization::{bipartite_star_colonization, theta_c};
use edom_core::eternal::m_eternal_domination_number;
use edom_core::params::{clique_cover_number, connected_domination_number, vertex_cover_and_matching};
use edom_core::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn assert_bounds(g: &Graph) {
    let (tc, col) = theta_c(g).unwrap();
    col.validate(g).unwrap();
    assert!(tc <= clique_cover_number(g).0);
    if g.is_connected() {
        let m = m_eternal_domination_number(g).unwrap().0;
        let gc = connected_domination_number(g).unwrap().0;
        assert!(m <= tc && tc <= gc + 1, "{}: {m} {tc} {gc}", edom_core::to_graph6(g));
    }
    if g.is_bipartite() && !g.has_isolated_vertex() {
        let s = bipartite_star_colonization(g).unwrap();
        let tau = vertex_cover_and_matching(g).unwrap().tau;
        assert!(s.colonization.total <= tau + s.unmatched.len());
        assert!(s.colonization.total >= tc);
    }
}

#[test]
fn every_graph_up_to_eight_vertices() {
    for g in all_graphs(1, 8).unwrap() {
        assert_bounds(&g);
    }
}

#[test]
fn random_graphs_on_nine_and_ten_vertices() {
    let mut rng = StdRng::seed_from_u64(10);
    for i in 0..300 {
        let n = 9 + i % 2;
        let p = rng.random_range(0.15..0.7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        assert_bounds(&Graph::from_edge_list(n, &edges).unwrap());
    }
}
