//! Closed-form spectra for the oriented line graph of a regular graph.
//!
//! For a connected d-regular graph G with n vertices and m edges, every
//! matrix built in `lineops` has a characteristic polynomial expressible as
//! a product over the adjacency eigenvalues of G. Each of those products
//! collapses to a polynomial substitution into char(A;x) or char(A^2;x),
//! so this module computes the closed forms exactly, with no eigenvalue
//! extraction, and verifies them coefficient for coefficient against the
//! characteristic polynomials of the matrices themselves.

use num_bigint::BigInt;

use crate::algebra::{charpoly_exact, charpoly_hermitian_exact, IntPolynomial};
use crate::graph::{validate_regular_connected, Graph, RegularityError};
use crate::graph6::write_graph6;
use crate::lineops::{operator_matrix, LineOpError, OperatorKind, OperatorMatrix, Orientation};

/// The exact spectral data of a connected regular graph: its adjacency
/// characteristic polynomial and that of the squared adjacency matrix.
/// Products over adjacency eigenvalues are always rewritten as
/// substitutions into these two polynomials, so no eigenvalues are ever
/// extracted.
#[derive(Clone, Debug)]
pub struct RegularSpectrumHandle {
    g: Graph,
    d: usize,
    n: usize,
    m: usize,
    p_a: IntPolynomial,
    p_a2: IntPolynomial,
}

impl RegularSpectrumHandle {
    pub fn new(g: &Graph) -> Result<Self, RegularityError> {
        let (d, n, m) = validate_regular_connected(g)?;
        let a = g.adjacency_matrix();
        let p_a = charpoly_exact(&a);
        let p_a2 = charpoly_exact(&a.mul(&a));
        debug_assert_eq!(p_a.degree(), Some(n));
        debug_assert_eq!(p_a2.degree(), Some(n));
        debug_assert!(p_a.is_monic() && p_a2.is_monic());
        Ok(RegularSpectrumHandle {
            g: g.clone(),
            d,
            n,
            m,
            p_a,
            p_a2,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    /// The common degree d.
    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// char(A(G); x), monic of degree n.
    pub fn pa(&self) -> &IntPolynomial {
        &self.p_a
    }

    /// char(A(G)^2; x), monic of degree n.
    pub fn pa2(&self) -> &IntPolynomial {
        &self.p_a2
    }
}

/// p(x + c).
fn shifted(p: &IntPolynomial, c: i64) -> IntPolynomial {
    p.compose(&IntPolynomial::from_i64(&[c, 1]))
}

/// char of B + Bt, the underlying undirected graph of the oriented line
/// graph: (x^2-4)^(m-n) pA(x-(d-2)) pA(x+(d-2)).
pub fn formula_lstar(h: &RegularSpectrumHandle) -> IntPolynomial {
    let s = h.d as i64 - 2;
    let out = IntPolynomial::from_i64(&[-4, 0, 1])
        .pow(h.m - h.n)
        .mul(&shifted(&h.p_a, -s))
        .mul(&shifted(&h.p_a, s));
    debug_assert_eq!(out.degree(), Some(2 * h.m));
    debug_assert!(out.is_monic());
    out
}

/// char of the line graph: (x+2)^(m-n) pA(x-(d-2)).
pub fn formula_line(h: &RegularSpectrumHandle) -> IntPolynomial {
    let s = h.d as i64 - 2;
    let out = IntPolynomial::from_i64(&[2, 1])
        .pow(h.m - h.n)
        .mul(&shifted(&h.p_a, -s));
    debug_assert_eq!(out.degree(), Some(h.m));
    debug_assert!(out.is_monic());
    out
}

/// char of B - Bt: x^(2(m-n)) pA2(x^2+d^2), since the product of
/// (c - lambda^2) over the adjacency eigenvalues is char(A^2; c).
pub fn formula_skew(h: &RegularSpectrumHandle) -> IntPolynomial {
    let d2 = (h.d * h.d) as i64;
    let out = IntPolynomial::monomial(BigInt::from(1), 2 * (h.m - h.n))
        .mul(&h.p_a2.compose(&IntPolynomial::from_i64(&[d2, 0, 1])));
    debug_assert_eq!(out.degree(), Some(2 * h.m));
    debug_assert!(out.is_monic());
    out
}

/// char of i(B - Bt): x^(2(m-n)) (-1)^n pA2(d^2-x^2).
pub fn formula_hermitian(h: &RegularSpectrumHandle) -> IntPolynomial {
    let d2 = (h.d * h.d) as i64;
    let sign = BigInt::from(if h.n.is_multiple_of(2) { 1 } else { -1 });
    let out = IntPolynomial::monomial(sign, 2 * (h.m - h.n))
        .mul(&h.p_a2.compose(&IntPolynomial::from_i64(&[d2, 0, -1])));
    debug_assert_eq!(out.degree(), Some(2 * h.m));
    debug_assert!(out.is_monic());
    out
}

/// char of the signed line graph, for every orientation:
/// (x-2)^(m-n) pA(x+(d-2)). Together with the line graph spectrum this
/// fills out the whole spectrum of B + Bt; see `formula_lstar`.
pub fn formula_signed(h: &RegularSpectrumHandle) -> IntPolynomial {
    let s = h.d as i64 - 2;
    let out = IntPolynomial::from_i64(&[-2, 1])
        .pow(h.m - h.n)
        .mul(&shifted(&h.p_a, s));
    debug_assert_eq!(out.degree(), Some(h.m));
    debug_assert!(out.is_monic());
    out
}

/// char of the non-backtracking matrix B:
/// (x^2-1)^(m-n) times the product of (x^2 - lambda x + d - 1) over the
/// adjacency eigenvalues. Writing pA(y) as the sum of a_k y^k, that product
/// is the sum of a_k (x^2+d-1)^k x^(n-k).
pub fn formula_nonbacktracking(h: &RegularSpectrumHandle) -> IntPolynomial {
    let q = IntPolynomial::from_i64(&[h.d as i64 - 1, 0, 1]);
    let mut sum = IntPolynomial::zero();
    let mut q_power = IntPolynomial::one();
    for k in 0..=h.n {
        let term = q_power
            .scale(&h.p_a.coeff(k))
            .mul(&IntPolynomial::monomial(BigInt::from(1), h.n - k));
        sum = sum.add(&term);
        q_power = q_power.mul(&q);
    }
    let out = IntPolynomial::from_i64(&[-1, 0, 1])
        .pow(h.m - h.n)
        .mul(&sum);
    debug_assert_eq!(out.degree(), Some(2 * h.m));
    debug_assert!(out.is_monic());
    out
}

/// The six verified identities, named by the matrix they describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdentityKind {
    Lstar,
    Line,
    Skew,
    Hermitian,
    Signed,
    NonBacktracking,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 6] = [
        IdentityKind::Lstar,
        IdentityKind::Line,
        IdentityKind::Skew,
        IdentityKind::Hermitian,
        IdentityKind::Signed,
        IdentityKind::NonBacktracking,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Lstar => "lstar",
            IdentityKind::Line => "line",
            IdentityKind::Skew => "skew",
            IdentityKind::Hermitian => "hermitian",
            IdentityKind::Signed => "signed",
            IdentityKind::NonBacktracking => "nb",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// The matrix whose characteristic polynomial the identity describes.
    pub fn operator_kind(self) -> OperatorKind {
        match self {
            IdentityKind::Lstar => OperatorKind::AdjacencyLstar,
            IdentityKind::Line => OperatorKind::AdjacencyLine,
            IdentityKind::Skew => OperatorKind::Skew,
            IdentityKind::Hermitian => OperatorKind::Hermitian,
            IdentityKind::Signed => OperatorKind::Signed,
            IdentityKind::NonBacktracking => OperatorKind::NonBacktracking,
        }
    }

    /// The closed-form side of the identity.
    pub fn formula(self, h: &RegularSpectrumHandle) -> IntPolynomial {
        match self {
            IdentityKind::Lstar => formula_lstar(h),
            IdentityKind::Line => formula_line(h),
            IdentityKind::Skew => formula_skew(h),
            IdentityKind::Hermitian => formula_hermitian(h),
            IdentityKind::Signed => formula_signed(h),
            IdentityKind::NonBacktracking => formula_nonbacktracking(h),
        }
    }
}

/// Outcome of an exact comparison; a mismatch names the lowest degree whose
/// coefficients differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Mismatch {
        degree: usize,
        formula_coeff: BigInt,
        direct_coeff: BigInt,
    },
}

fn compare(formula: &IntPolynomial, direct: &IntPolynomial) -> Verdict {
    let top = formula.coeffs().len().max(direct.coeffs().len());
    for k in 0..top {
        let f = formula.coeff(k);
        let d = direct.coeff(k);
        if f != d {
            return Verdict::Mismatch {
                degree: k,
                formula_coeff: f,
                direct_coeff: d,
            };
        }
    }
    Verdict::Equal
}

/// One identity checked on one graph: the closed form next to the direct
/// characteristic polynomial, with an exact verdict.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub graph: String,
    pub identity: IdentityKind,
    pub formula: IntPolynomial,
    pub direct: IntPolynomial,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    pub fn to_json(&self) -> serde_json::Value {
        let verdict = match &self.verdict {
            Verdict::Equal => serde_json::json!("equal"),
            Verdict::Mismatch {
                degree,
                formula_coeff,
                direct_coeff,
            } => serde_json::json!({
                "mismatch": {
                    "degree": degree,
                    "formula_coeff": formula_coeff.to_string(),
                    "direct_coeff": direct_coeff.to_string(),
                }
            }),
        };
        let mut out = serde_json::json!({
            "graph": self.graph,
            "identity": self.identity.name(),
            "verdict": verdict,
            "formula_coeffs": self.formula.coeff_strings(),
        });
        let map = out.as_object_mut().expect("object literal");
        if self.verdict != Verdict::Equal {
            map.insert(
                "direct_coeffs".to_string(),
                serde_json::Value::from(self.direct.coeff_strings()),
            );
        }
        if let Ok(split) = crate::algebra::integrality_check(&self.formula) {
            if split.is_total() {
                map.insert(
                    "factored".to_string(),
                    serde_json::Value::from(crate::algebra::factored_string(split.roots())),
                );
            }
        }
        out
    }
}

/// Computes both sides of one identity on a graph and compares them
/// exactly. The orientation is required for the signed identity and
/// ignored otherwise; hypothesis violations are reported, never skipped.
pub fn verify_identity(
    g: &Graph,
    which: IdentityKind,
    o: Option<&Orientation>,
) -> Result<VerificationReport, LineOpError> {
    let h = RegularSpectrumHandle::new(g).map_err(LineOpError::Hypothesis)?;
    let formula = which.formula(&h);
    let direct = match operator_matrix(g, which.operator_kind(), o)? {
        OperatorMatrix::Int(m) => charpoly_exact(&m),
        OperatorMatrix::Gaussian(m) => {
            charpoly_hermitian_exact(&m).expect("operator matrix is Hermitian by construction")
        }
    };
    let verdict = compare(&formula, &direct);
    Ok(VerificationReport {
        graph: write_graph6(g),
        identity: which,
        formula,
        direct,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_product_power;
    use crate::generate;
    use crate::graph::RegularityError;

    fn x_minus_i64(r: i64) -> IntPolynomial {
        IntPolynomial::x_minus(&BigInt::from(r))
    }

    fn k4_handle() -> RegularSpectrumHandle {
        RegularSpectrumHandle::new(&generate::complete_graph(4).unwrap()).unwrap()
    }

    #[test]
    fn handle_of_k4() {
        let h = k4_handle();
        assert_eq!((h.degree(), h.vertex_count(), h.edge_count()), (3, 4, 6));
        assert_eq!(*h.pa(), IntPolynomial::from_i64(&[-3, -8, -6, 0, 1]));
        assert_eq!(*h.pa2(), IntPolynomial::from_i64(&[9, -28, 30, -12, 1]));
    }

    #[test]
    fn handle_rejects_irregular_input() {
        assert_eq!(
            RegularSpectrumHandle::new(&generate::cycle(5).unwrap()).unwrap_err(),
            RegularityError::DegreeTooSmall { degree: 2 }
        );
        assert!(matches!(
            RegularSpectrumHandle::new(&generate::path(4)).unwrap_err(),
            RegularityError::NotRegular { .. }
        ));
    }

    #[test]
    fn closed_forms_of_k4() {
        let h = k4_handle();
        let lstar = poly_product_power(&[
            (x_minus_i64(4), 1),
            (x_minus_i64(2), 3),
            (x_minus_i64(-2), 5),
            (IntPolynomial::x(), 3),
        ]);
        assert_eq!(formula_lstar(&h), lstar);
        let line = poly_product_power(&[
            (x_minus_i64(4), 1),
            (x_minus_i64(-2), 2),
            (IntPolynomial::x(), 3),
        ]);
        assert_eq!(formula_line(&h), line);
        let signed = poly_product_power(&[(x_minus_i64(2), 3), (x_minus_i64(-2), 3)]);
        assert_eq!(formula_signed(&h), signed);
        assert_eq!(formula_line(&h).mul(&formula_signed(&h)), formula_lstar(&h));

        let skew = poly_product_power(&[
            (IntPolynomial::from_i64(&[8, 0, 1]), 3),
            (IntPolynomial::x(), 6),
        ]);
        assert_eq!(formula_skew(&h), skew);
        let hermitian = poly_product_power(&[
            (IntPolynomial::from_i64(&[-8, 0, 1]), 3),
            (IntPolynomial::x(), 6),
        ]);
        assert_eq!(formula_hermitian(&h), hermitian);

        let nb = poly_product_power(&[
            (IntPolynomial::from_i64(&[-1, 0, 1]), 2),
            (IntPolynomial::from_i64(&[2, -3, 1]), 1),
            (IntPolynomial::from_i64(&[2, 1, 1]), 3),
        ]);
        assert_eq!(formula_nonbacktracking(&h), nb);
    }

    #[test]
    fn verify_all_identities_on_k4() {
        let g = generate::complete_graph(4).unwrap();
        let o = Orientation::lower_to_higher(&g);
        for kind in IdentityKind::ALL {
            let o = (kind == IdentityKind::Signed).then_some(&o);
            let report = verify_identity(&g, kind, o).unwrap();
            assert_eq!(report.verdict, Verdict::Equal, "identity {}", kind.name());
            assert_eq!(report.graph, "C~");
        }
    }

    #[test]
    fn verify_error_paths() {
        let c5 = generate::cycle(5).unwrap();
        assert!(matches!(
            verify_identity(&c5, IdentityKind::Lstar, None),
            Err(LineOpError::Hypothesis(_))
        ));
        let k4 = generate::complete_graph(4).unwrap();
        assert!(matches!(
            verify_identity(&k4, IdentityKind::Signed, None),
            Err(LineOpError::MissingOrientation)
        ));
    }

    #[test]
    fn mismatch_reports_lowest_degree() {
        let f = IntPolynomial::from_i64(&[-1, 0, 1]);
        let d = IntPolynomial::from_i64(&[-1, 2, 1]);
        assert_eq!(
            compare(&f, &d),
            Verdict::Mismatch {
                degree: 1,
                formula_coeff: BigInt::from(0),
                direct_coeff: BigInt::from(2),
            }
        );
        assert_eq!(compare(&f, &f), Verdict::Equal);
    }

    #[test]
    fn identity_names_round_trip() {
        for kind in IdentityKind::ALL {
            assert_eq!(IdentityKind::from_name(kind.name()), Some(kind));
        }
        assert_eq!(IdentityKind::from_name("octahedron"), None);
    }

    #[test]
    fn report_json_shape() {
        let g = generate::complete_graph(4).unwrap();
        let report = verify_identity(&g, IdentityKind::Lstar, None).unwrap();
        let json = report.to_json();
        assert_eq!(json["graph"], "C~");
        assert_eq!(json["identity"], "lstar");
        assert_eq!(json["verdict"], "equal");
        assert_eq!(json["formula_coeffs"].as_array().unwrap().len(), 13);
        assert!(json.get("direct_coeffs").is_none());
        assert_eq!(json["factored"], "(x-4)(x-2)^3x^3(x+2)^5");
    }
}
