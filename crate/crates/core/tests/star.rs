//! Star colorings, neighborhood-injective homomorphisms, and the
//! divisibility consequence of a local bijection, checked exhaustively on
//! small graphs and on structured families.

mod common;

use common::corpus;
use olg_core::algebra::charpoly_exact;
use olg_core::enumerate::{all_graphs_up_to_iso, canonical_form};
use olg_core::generate;
use olg_core::graph::Graph;
use olg_core::identities::{formula_lstar, RegularSpectrumHandle};
use olg_core::lineops::{underlying_and_line_graph, Orientation};
use olg_core::star::{
    coloring_to_onih, find_lbh, find_onh, is_lbh, is_star_coloring, onih_to_coloring,
    star_chromatic_number, star_divisibility, Coloring, DivisionResult, OnhMode, StarSearchOutcome,
    VertexMap,
};

fn star_number(g: &Graph) -> (usize, Coloring) {
    match star_chromatic_number(g, g.vertex_count()) {
        StarSearchOutcome::Found { q, coloring } => (q, coloring),
        StarSearchOutcome::ExceedsMax { .. } => {
            panic!("every graph admits the all-distinct coloring")
        }
    }
}

/// Least q for which some orientation admits an out-neighborhood
/// injective homomorphism into the complete symmetric digraph on q
/// vertices. Monotone in q, so the first success is the minimum.
fn min_onih_q(g: &Graph) -> usize {
    let m = g.edge_count();
    for q in 1..=g.vertex_count() {
        let dst = generate::complete_symmetric_digraph(q);
        for mask in 0u32..(1u32 << m) {
            let bits: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
            let o = Orientation::from_bits(g, &bits).unwrap();
            if find_onh(&o.to_digraph(), &dst, OnhMode::Injective).is_some() {
                return q;
            }
        }
    }
    unreachable!("an acyclic orientation of the all-distinct coloring always embeds")
}

#[test]
fn exhaustive_small_graph_comparison() {
    // On connected graphs with at most five vertices the least
    // homomorphism target size never exceeds the star chromatic number,
    // and the two part ways: the four-vertex path and the five-cycle
    // admit strictly smaller homomorphism targets.
    let p4 = canonical_form(&generate::path(4)).unwrap();
    let c5 = canonical_form(&generate::cycle(5).unwrap()).unwrap();
    let mut gaps = Vec::new();
    for n in 1..=5 {
        for g in all_graphs_up_to_iso(n).unwrap() {
            if !g.is_connected() {
                continue;
            }
            let (chi_s, witness) = star_number(&g);
            assert_eq!(is_star_coloring(&witness), Ok(()));

            // Forward: a star coloring induces an orientation and an
            // injective-out-neighborhood map onto its color set, and the
            // map reads back as the same coloring.
            let (o, map) = coloring_to_onih(&witness).unwrap();
            assert_eq!(onih_to_coloring(&o, chi_s, &map).unwrap(), witness);

            let least = min_onih_q(&g);
            assert!(
                least <= chi_s,
                "homomorphism target can never need more colors"
            );
            if least < chi_s {
                gaps.push((canonical_form(&g).unwrap(), least, chi_s));
            }
        }
    }
    assert!(
        gaps.contains(&(p4, 2, 3)),
        "the four-vertex path shows a strict gap"
    );
    assert!(
        gaps.contains(&(c5, 3, 4)),
        "the five-cycle shows a strict gap"
    );
}

#[test]
fn spot_star_chromatic_numbers() {
    let cases = [
        (generate::complete_graph(4).unwrap(), 4),
        (generate::cycle(5).unwrap(), 4),
        (generate::path(4), 3),
    ];
    for (g, expected) in cases {
        let (chi_s, witness) = star_number(&g);
        assert_eq!(chi_s, expected);
        assert_eq!(is_star_coloring(&witness), Ok(()));
        assert!(matches!(
            star_chromatic_number(&g, expected - 1),
            StarSearchOutcome::ExceedsMax { .. }
        ));
    }
}

#[test]
fn local_bijection_forces_spectrum_divisibility() {
    // Whenever a local bijection from H onto J exists, the adjacency
    // characteristic polynomial of J divides that of H. The doubled line
    // graph covers the line graph through the two-to-one projection, and
    // a cycle wraps twice around a cycle of half the length.
    let mut pairs = Vec::new();
    for g in [
        generate::complete_graph(4).unwrap(),
        generate::complete_bipartite(3, 3),
    ] {
        let (lstar, lg, _) = underlying_and_line_graph(&g);
        pairs.push((lstar, lg));
    }
    pairs.push((generate::cycle(6).unwrap(), generate::cycle(3).unwrap()));

    for (src, dst) in pairs {
        let map = find_lbh(&src, &dst).expect("a local bijection exists for these pairs");
        assert_eq!(is_lbh(&src, &dst, &map), Ok(()));
        let src_char = charpoly_exact(&src.adjacency_matrix());
        let dst_char = charpoly_exact(&dst.adjacency_matrix());
        assert!(src_char.exact_div(&dst_char).is_ok());
    }

    // No homomorphism at all can exist from an odd-cycle graph into a
    // bipartite one, so the search must come back empty.
    let k4 = generate::complete_graph(4).unwrap();
    let k33 = generate::complete_bipartite(3, 3);
    assert!(find_lbh(&k4, &k33).is_none());
}

#[test]
fn divisibility_hypotheses_on_the_doubled_line_graphs() {
    // The doubled line graph of K4 is 4-regular, claw-free, and star
    // 4-colorable, so the degree-12 divisor must divide its adjacency
    // characteristic polynomial.
    let (lstar, _, _) = underlying_and_line_graph(&generate::complete_graph(4).unwrap());
    let report = star_divisibility(&lstar, 2, false);
    assert!(report.hypotheses_hold());
    assert!(report.divides());

    // Over a triangle-free base the out- and in-neighbors of an arc are
    // never adjacent, so claws appear and the claw-free hypothesis
    // fails. It is load-bearing: the spectrum of this graph omits zero
    // while the divisor carries it with multiplicity three, so forcing
    // the division leaves a remainder.
    let (lstar, _, _) = underlying_and_line_graph(&generate::complete_bipartite(3, 3));
    let report = star_divisibility(&lstar, 2, false);
    assert!(report.claw_free.is_err());
    assert!(report.regularity.is_ok());
    assert!(report.division.is_none());
    let forced = star_divisibility(&lstar, 2, true);
    assert!(matches!(
        forced.division,
        Some(DivisionResult::Remainder { .. })
    ));
}

#[test]
fn divisor_polynomial_matches_the_doubled_complete_graph() {
    for p in 2..=5 {
        let divisor = olg_core::star::star_divisor(p);
        let k = generate::complete_graph(p + 2).unwrap();
        let h = RegularSpectrumHandle::new(&k).unwrap();
        assert_eq!(divisor, formula_lstar(&h));
        let n = p + 2;
        assert_eq!(divisor.degree(), Some(n * (n - 1)));
    }
}

#[test]
fn projection_sources_admit_no_smaller_homomorphism_than_their_line_graph_needs() {
    // Sanity link between the two halves of the crate: the projection
    // from the doubled line graph is itself a local bijection certificate
    // usable by the divisibility report machinery.
    for (name, g) in corpus().into_iter().take(7) {
        let (lstar, lg, proj) = underlying_and_line_graph(&g);
        let map = VertexMap::new(proj.psi().to_vec());
        assert_eq!(is_lbh(&lstar, &lg, &map), Ok(()), "{name}");
        let src_char = charpoly_exact(&lstar.adjacency_matrix());
        let dst_char = charpoly_exact(&lg.adjacency_matrix());
        assert!(src_char.exact_div(&dst_char).is_ok(), "{name}");
    }
}
