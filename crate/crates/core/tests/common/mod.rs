//! Shared helpers for the integration suites: an independent
//! characteristic polynomial oracle, factored-form builders, and the
//! connected regular graph corpus.
//!
//! Not every test binary uses every helper.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;

use olg_core::algebra::{poly_product_power, GaussianMatrix, IntMatrix, IntPolynomial};
use olg_core::enumerate::connected_cubic_graphs;
use olg_core::generate;
use olg_core::graph::Graph;

/// Trace-recurrence characteristic polynomial, an oracle independent of
/// the evaluation-interpolation implementation under test. Every division
/// in the recurrence is exact, and asserted to be.
pub fn charpoly_faddeev(a: &IntMatrix) -> IntPolynomial {
    let order = a.order();
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[order] = BigInt::from(1);
    let mut mk = a.clone();
    for k in 1..=order {
        let trace = mk.trace();
        let step = BigInt::from(k as u64);
        assert!(
            (&trace % &step).is_zero(),
            "trace recurrence must divide exactly at step {k}"
        );
        let ck = -(trace / step);
        coeffs[order - k] = ck.clone();
        if k < order {
            for i in 0..order {
                *mk.get_mut(i, i) += &ck;
            }
            mk = a.mul(&mk);
        }
    }
    IntPolynomial::new(coeffs)
}

/// The real matrix [[Re, -Im], [Im, Re]] of a Gaussian-integer matrix. For
/// a Hermitian input its characteristic polynomial is the square of the
/// complex one, because the complex conjugate of a Hermitian matrix is its
/// transpose and transposition preserves characteristic polynomials.
pub fn realification(m: &GaussianMatrix) -> IntMatrix {
    let order = m.order();
    let mut out = IntMatrix::zero(2 * order);
    for row in 0..order {
        for col in 0..order {
            let entry = m.get(row, col);
            out.set(row, col, entry.re.clone());
            out.set(row, col + order, -entry.im.clone());
            out.set(row + order, col, entry.im.clone());
            out.set(row + order, col + order, entry.re.clone());
        }
    }
    out
}

/// Expands a product of powers of linear factors (x - r)^k.
pub fn poly_from_roots(roots: &[(i64, usize)]) -> IntPolynomial {
    let factors: Vec<(IntPolynomial, usize)> = roots
        .iter()
        .map(|&(r, k)| (IntPolynomial::x_minus(&BigInt::from(r)), k))
        .collect();
    poly_product_power(&factors)
}

/// The connected regular corpus: named standard graphs of degree at least
/// 3 plus every connected cubic graph on up to 10 vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut graphs = vec![
        ("K4".to_string(), generate::complete_graph(4).unwrap()),
        ("K5".to_string(), generate::complete_graph(5).unwrap()),
        ("K6".to_string(), generate::complete_graph(6).unwrap()),
        ("K33".to_string(), generate::complete_bipartite(3, 3)),
        ("Petersen".to_string(), generate::petersen()),
        ("Q3".to_string(), generate::hypercube(3).unwrap()),
        (
            "circulant(8;1,4)".to_string(),
            generate::circulant(8, &[1, 4]).unwrap(),
        ),
    ];
    for n in [4, 6, 8, 10] {
        for (i, g) in connected_cubic_graphs(n).unwrap().into_iter().enumerate() {
            graphs.push((format!("cubic#{n}.{i}"), g));
        }
    }
    graphs
}
